//! Command-line front end: `compute`, `verify`, `oracle` and `limit`.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::braid::{BraidWord, LinkData};
use crate::error::{Error, Result};
use crate::oracles::{alexander, jones_tl};
use crate::specialize::{psi_ado, psi_jones};
use crate::unify::universal_sequence;
use crate::verify::{run_suite, Budget, SUITES};
use crate::verma::{a_gamma, j_gamma};

/// Exit status for success.
pub const EXIT_OK: i32 = 0;
/// Exit status when a verification check fails.
pub const EXIT_VERIFY: i32 = 1;
/// Exit status for malformed input.
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "unilink", version, about = "Level-N unified link invariants from braid words")]
pub struct Cli {
    /// Worker threads for the state sums.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    #[value(name = "a_gamma")]
    AGamma,
    #[value(name = "j_gamma")]
    JGamma,
    Ado,
    Jones,
    UniversalSequence,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute an invariant or one of its specializations.
    Compute(ComputeArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Print the Alexander and Jones oracle values.
    Oracle(BraidArgs),
    /// Per-level representatives of the universal invariant with coherence checks.
    Limit(LimitArgs),
}

#[derive(Args, Debug)]
pub struct BraidArgs {
    /// Braid word as whitespace-separated signed generators, e.g. "1 -2 1 -2",
    /// or a JSON descriptor {"strands", "word", "framings", "name"}.
    #[arg(long, allow_hyphen_values = true)]
    pub braid: String,
    /// Strand count; inferred from the word when omitted.
    #[arg(long)]
    pub strands: Option<usize>,
    /// Comma-separated framings, one per component; blackboard framing when omitted.
    #[arg(long, allow_hyphen_values = true)]
    pub framings: Option<String>,
}

#[derive(Args, Debug)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub braid: BraidArgs,
    #[arg(long, value_enum)]
    pub mode: Mode,
    /// Level N for a_gamma, ado and universal-sequence.
    #[arg(long)]
    pub level: Option<usize>,
    /// Comma-separated colours, one per component or a single value for all.
    #[arg(long)]
    pub colours: Option<String>,
    /// Highest level for universal-sequence.
    #[arg(long)]
    pub max_level: Option<usize>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// One of oracles, markov, unification, habiro, all.
    pub suite: String,
    /// Level for the markov suite.
    #[arg(long, default_value_t = 2)]
    pub level: usize,
    /// Highest level for the unification and habiro suites.
    #[arg(long, default_value_t = 4)]
    pub max_level: usize,
    /// small keeps braids with at most 3 strands, full allows 4.
    #[arg(long, default_value = "small")]
    pub corpus: String,
}

#[derive(Args, Debug)]
pub struct LimitArgs {
    #[command(flatten)]
    pub braid: BraidArgs,
    #[arg(long, default_value_t = 3)]
    pub max_level: usize,
}

/// Output text and exit status of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn usage(msg: impl Into<String>) -> Self {
        Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: msg.into() }
    }
}

fn parse_list(text: &str, what: &str) -> Result<Vec<i64>> {
    text.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad {what} entry {t:?}"))))
        .collect()
}

/// JSON link descriptor accepted by `--braid`.
#[derive(Debug, Deserialize)]
pub struct LinkDescriptor {
    pub strands: usize,
    pub word: Vec<i32>,
    pub framings: Option<Vec<i64>>,
    pub name: Option<String>,
}

fn load(args: &BraidArgs) -> Result<(BraidWord, LinkData)> {
    let (b, mut framings) = if args.braid.trim_start().starts_with('{') {
        let d: LinkDescriptor = serde_json::from_str(&args.braid).map_err(|e| Error::Parse(e.to_string()))?;
        (BraidWord::new(d.strands, d.word)?, d.framings)
    } else {
        (BraidWord::parse(&args.braid, args.strands)?, None)
    };
    if let Some(f) = &args.framings {
        framings = Some(parse_list(f, "framing")?);
    }
    let mut link = LinkData::from_braid(&b);
    if let Some(f) = framings {
        link = link.with_framings(f)?;
    }
    Ok((b, link))
}

fn colours(text: Option<&str>, link: &LinkData) -> Result<Vec<usize>> {
    let raw = parse_list(text.unwrap_or("2"), "colour")?;
    if raw.iter().any(|&c| c < 2) {
        return Err(Error::Level(raw.iter().copied().filter(|&c| c < 2).map(|c| c.max(0) as usize).next().unwrap_or(0)));
    }
    let cols: Vec<usize> = raw.into_iter().map(|c| c as usize).collect();
    match cols.len() {
        1 => Ok(vec![cols[0]; link.components]),
        n if n == link.components => Ok(cols),
        n => Err(Error::ColourMismatch { expected: link.components, got: n }),
    }
}

fn level(l: Option<usize>) -> Result<usize> {
    let n = l.ok_or_else(|| Error::Parse("--level is required for this mode".into()))?;
    if n < 2 {
        return Err(Error::Level(n));
    }
    Ok(n)
}

fn braid_json(b: &BraidWord, link: &LinkData) -> serde_json::Value {
    json!({ "strands": b.strands(), "word": b.letters(), "components": link.components, "framings": link.framings })
}

fn render(format: Format, text: String, value: serde_json::Value) -> String {
    match format {
        Format::Text => text + "\n",
        Format::Json => serde_json::to_string_pretty(&value).expect("JSON serialization cannot fail") + "\n",
    }
}

fn compute(args: &ComputeArgs, format: Format) -> Result<String> {
    let (b, link) = load(&args.braid)?;
    let head = braid_json(&b, &link);
    let out = match args.mode {
        Mode::AGamma => {
            let n = level(args.level)?;
            let p = a_gamma(&b, n, &link)?;
            render(format, p.to_string(), json!({"mode": args.mode, "braid": head, "level": n, "ring": "Z[u^±, x^±, y, d^±]", "result": p}))
        }
        Mode::Ado => {
            let n = level(args.level)?;
            let psi = psi_ado(n)?;
            let p = psi.apply(&a_gamma(&b, n, &link)?)?;
            render(format, p.to_string(), json!({"mode": args.mode, "braid": head, "level": n, "ring": psi.target(), "result": p}))
        }
        Mode::JGamma => {
            let cols = colours(args.colours.as_deref(), &link)?;
            let p = j_gamma(&b, &cols, &link)?;
            render(format, p.to_string(), json!({"mode": args.mode, "braid": head, "colours": cols, "ring": "Z[u^±, x^±, y, d^±]", "result": p}))
        }
        Mode::Jones => {
            let cols = colours(args.colours.as_deref(), &link)?;
            let psi = psi_jones(&cols)?;
            let p = psi.apply(&j_gamma(&b, &cols, &link)?)?;
            render(format, p.to_string(), json!({"mode": args.mode, "braid": head, "colours": cols, "ring": psi.target(), "result": p}))
        }
        Mode::UniversalSequence => {
            let n = args.max_level.or(args.level).unwrap_or(3);
            let seq = universal_sequence(&b, &link, n)?;
            let text: Vec<String> = seq.classes.iter().map(|c| format!("N={}: {}", c.level, c.representative)).collect();
            render(format, text.join("\n"), json!({"mode": args.mode, "braid": head, "sequence": seq}))
        }
    };
    Ok(out)
}

fn oracle(args: &BraidArgs, format: Format) -> Result<String> {
    let (b, link) = load(args)?;
    let alex = alexander(&b);
    let jones = jones_tl(&b);
    Ok(render(
        format,
        format!("alexander(t) = {alex}\njones(A) = {jones}"),
        json!({"braid": braid_json(&b, &link), "alexander": alex, "jones": jones}),
    ))
}

fn limit(args: &LimitArgs, format: Format) -> Result<String> {
    let (b, link) = load(&args.braid)?;
    let seq = universal_sequence(&b, &link, args.max_level)?;
    let mut lines: Vec<String> = seq.classes.iter().map(|c| format!("N={}: {}", c.level, c.representative)).collect();
    for c in &seq.coherence {
        lines.push(format!(
            "coherence {} -> {}: quotient {} habiro {}",
            c.upper, c.lower, c.quotient_equal, c.habiro_divisible
        ));
    }
    Ok(render(format, lines.join("\n"), json!({"braid": braid_json(&b, &link), "levels": seq.classes, "coherence": seq.coherence})))
}

fn verify(args: &VerifyArgs, format: Format) -> Outcome {
    let max_strands = match args.corpus.as_str() {
        "small" => 3,
        "full" => 4,
        other => return Outcome::usage(format!("unknown corpus {other:?}; expected small or full")),
    };
    if args.level < 2 || args.max_level < 2 {
        return Outcome::usage("levels must be at least 2");
    }
    let budget = Budget { level: args.level, max_level: args.max_level, max_strands };
    let report = match run_suite(&args.suite, &budget) {
        None => return Outcome::usage(format!("unknown suite {:?}; expected one of {}", args.suite, SUITES.join(", "))),
        Some(Err(e)) => return Outcome::usage(e.to_string()),
        Some(Ok(r)) => r,
    };
    let passed = report.all_passed();
    let text: Vec<String> = report
        .checks
        .iter()
        .map(|c| {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            let detail = if c.passed { String::new() } else { format!(" expected {} got {}", c.expected, c.actual) };
            format!("{mark} [{}] {}{detail}", c.suite, c.name)
        })
        .collect();
    let summary = format!("{} of {} checks passed", report.checks.iter().filter(|c| c.passed).count(), report.checks.len());
    let stdout = render(format, format!("{}\n{summary}", text.join("\n")), json!({"passed": passed, "checks": report.checks}));
    Outcome { code: if passed { EXIT_OK } else { EXIT_VERIFY }, stdout, stderr: String::new() }
}

/// Runs the command line `argv` (including the program name).
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let msg = e.render().to_string();
            return if code == EXIT_OK { Outcome::ok(msg) } else { Outcome::usage(msg) };
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs.unwrap_or(0)).build() {
        Ok(p) => p,
        Err(e) => return Outcome::usage(e.to_string()),
    };
    pool.install(|| {
        let res = match &cli.command {
            Command::Compute(a) => compute(a, cli.format),
            Command::Oracle(a) => oracle(a, cli.format),
            Command::Limit(a) => limit(a, cli.format),
            Command::Verify(a) => return verify(a, cli.format),
        };
        match res {
            Ok(s) => Outcome::ok(s),
            Err(e @ Error::Coherence { .. }) => Outcome { code: EXIT_VERIFY, stdout: String::new(), stderr: e.to_string() },
            Err(e) => Outcome::usage(e.to_string()),
        }
    })
}
