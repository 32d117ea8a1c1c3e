//! Verification suites comparing the engine with the oracles and with the
//! structural properties of the invariant. Used by the `verify` command.

use serde::Serialize;

use crate::braid::{corpus, markov_moves, BraidWord, CorpusEntry, LinkData};
use crate::error::Result;
use crate::oracles::{alexander, equal_up_to_unit, jones_reference};
use crate::ring::{divides, habiro_generator, Cyclo, LaurentPoly, Poly, Var};
use crate::specialize::{identify_colours, psi_ado, psi_jones, relabel_components, strip_y};
use crate::unify::{eq_in_quotient, refined_reduce};
use crate::verma::{a_gamma, j_gamma};

/// Outcome of one comparison.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub suite: String,
    pub name: String,
    pub passed: bool,
    pub expected: String,
    pub actual: String,
}

/// All checks of a run.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn push(&mut self, suite: &str, name: String, passed: bool, expected: String, actual: String) {
        self.checks.push(Check { suite: suite.into(), name, passed, expected, actual });
    }
}

/// Limits on the corpus and levels exercised by a suite.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    pub level: usize,
    pub max_level: usize,
    pub max_strands: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { level: 2, max_level: 4, max_strands: 3 }
    }
}

/// Names accepted by [`run_suite`].
pub const SUITES: [&str; 5] = ["oracles", "markov", "unification", "habiro", "all"];

fn small_corpus(budget: &Budget) -> Vec<CorpusEntry> {
    corpus().into_iter().filter(|c| c.braid.strands() <= budget.max_strands).collect()
}

/// Framing-normalized invariant: each component carries its blackboard
/// framing, so the `u`-prefactor cancels the writhe of the diagram.
pub fn a_gamma_normalized(b: &BraidWord, level: usize) -> Result<LaurentPoly> {
    a_gamma(b, level, &LinkData::from_braid(b))
}

/// `psi_ado(2)(AΓ^2)` with `y` stripped and colours identified, compared with
/// the Alexander polynomial at `t = x^2` up to `±T^j x^k`.
pub fn ado_matches_alexander(b: &BraidWord) -> Result<(bool, Poly<Cyclo>, Poly<Cyclo>)> {
    let link = LinkData::from_braid(b);
    let a = a_gamma(b, 2, &link)?;
    let stripped = strip_y(&a).expect("every term of AΓ carries y once");
    let img = identify_colours(&psi_ado(2)?.apply(&stripped)?);
    let alex: Poly<Cyclo> =
        alexander(b).substitute(|c| Cyclo::integer(*c), |_, e| Ok(Poly::var_pow(Var::X(1), 2 * e)))?;
    let units: Vec<Cyclo> = (0..8).map(|k| Cyclo::root_power(8, k)).collect();
    Ok((equal_up_to_unit(&img, &alex, &[Var::X(1)], &units), img, alex))
}

/// `psi_jones(JΓ)` at colours `(2, …, 2)` against the Temperley–Lieb reference.
pub fn jones_matches_oracle(b: &BraidWord) -> Result<(bool, LaurentPoly, LaurentPoly)> {
    let link = LinkData::from_braid(b);
    let cols = vec![2; link.components];
    let value = psi_jones(&cols)?.apply(&j_gamma(b, &cols, &link)?)?;
    let reference = jones_reference(b);
    Ok((value == reference, value, reference))
}

fn suite_oracles(budget: &Budget, r: &mut Report) -> Result<()> {
    for c in small_corpus(budget) {
        if c.braid.strands() >= 2 {
            let (ok, img, alex) = ado_matches_alexander(&c.braid)?;
            r.push("oracles", format!("ado-2 vs alexander: {}", c.name), ok, alex.to_string(), img.to_string());
        }
        let (ok, v, reference) = jones_matches_oracle(&c.braid)?;
        r.push("oracles", format!("jones vs temperley-lieb: {}", c.name), ok, reference.to_string(), v.to_string());
    }
    Ok(())
}

/// Compares `AΓ^N` of a braid and of each Markov move in the level-`N`
/// quotient, with blackboard framings. When the move changes the component of
/// the first strand, colours are identified before comparing.
fn suite_markov(budget: &Budget, r: &mut Report) -> Result<()> {
    let n = budget.level;
    for c in small_corpus(budget) {
        let base = a_gamma_normalized(&c.braid, n)?;
        for mv in markov_moves(&c.braid) {
            if mv.braid.strands() > budget.max_strands + 1 {
                continue;
            }
            let moved = a_gamma_normalized(&mv.braid, n)?;
            let (lhs, rhs) = if mv.relabel[0] == 1 {
                (relabel_components(&moved, &mv.relabel), base.clone())
            } else {
                (identify_colours(&moved), identify_colours(&base))
            };
            let ok = eq_in_quotient(&lhs, &rhs, n)?;
            r.push("markov", format!("{} {} at N={n}", c.name, mv.description), ok, "equal".into(), ok.to_string());
        }
    }
    Ok(())
}

fn suite_unification(budget: &Budget, r: &mut Report) -> Result<()> {
    for c in small_corpus(budget) {
        let link = LinkData::from_braid(&c.braid);
        let values: Vec<LaurentPoly> =
            (2..=budget.max_level).map(|n| a_gamma(&c.braid, n, &link)).collect::<Result<_>>()?;
        for m in 2..=budget.max_level {
            let psi = psi_ado(m)?;
            let reference = psi.apply(&values[m - 2])?;
            for n in m + 1..=budget.max_level {
                let v = psi.apply(&values[n - 2])?;
                r.push(
                    "unification",
                    format!("{} psi_ado({m}) of level {n}", c.name),
                    v == reference,
                    reference.to_string(),
                    v.to_string(),
                );
            }
        }
    }
    Ok(())
}

fn suite_habiro(budget: &Budget, r: &mut Report) -> Result<()> {
    for c in small_corpus(budget) {
        let link = LinkData::from_braid(&c.braid);
        for n in 2..budget.max_level {
            let diff = a_gamma(&c.braid, n + 1, &link)?.sub(&a_gamma(&c.braid, n, &link)?);
            let ok = divides(&habiro_generator(n as u32), &diff);
            r.push("habiro", format!("{} level {} - level {n}", c.name, n + 1), ok, "divisible".into(), ok.to_string());
        }
        if c.braid.strands() >= 2 {
            let base = refined_reduce(&a_gamma_normalized(&c.braid, 2)?, 2)?;
            for mv in markov_moves(&c.braid).into_iter().filter(|m| m.relabel[0] == 1) {
                let moved = refined_reduce(&relabel_components(&a_gamma_normalized(&mv.braid, 2)?, &mv.relabel), 2)?;
                let ok = eq_in_quotient(&moved, &base, 2)?;
                r.push("habiro", format!("{} refined level 2 {}", c.name, mv.description), ok, "equal".into(), ok.to_string());
            }
        }
    }
    Ok(())
}

/// Runs a named suite. Returns `None` for an unknown name.
pub fn run_suite(name: &str, budget: &Budget) -> Option<Result<Report>> {
    let mut r = Report::default();
    let res = match name {
        "oracles" => suite_oracles(budget, &mut r),
        "markov" => suite_markov(budget, &mut r),
        "unification" => suite_unification(budget, &mut r),
        "habiro" => suite_habiro(budget, &mut r),
        "all" => suite_oracles(budget, &mut r)
            .and_then(|_| suite_markov(budget, &mut r))
            .and_then(|_| suite_unification(budget, &mut r))
            .and_then(|_| suite_habiro(budget, &mut r)),
        _ => return None,
    };
    Some(res.map(|_| r))
}
