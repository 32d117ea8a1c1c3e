//! Acceptance suite: one PASS/FAIL line per criterion. Exits nonzero if any
//! criterion fails.

use std::time::{Duration, Instant};

use unilink::braid::{corpus, corpus_braid, markov_moves, BraidWord, LinkData};
use unilink::localsystem::{oval_monodromy, MultiLevel};
use unilink::oracles::{alexander, equal_up_to_unit, jones_reference};
use unilink::ring::{balanced_quantum, divides, habiro_generator, Cyclo, LaurentPoly, Monomial, Poly, Var};
use unilink::specialize::{identify_colours, psi_ado, psi_jones, relabel_components, strip_y};
use unilink::unify::{eq_in_quotient, refined_reduce};
use unilink::verma::{a_gamma, a_gamma_prefactor, j_gamma, pairing, state_set, BraidAction, StateVector};

/// Time limits from the acceptance criteria.
const LIMIT_ORACLE: Duration = Duration::from_secs(5);
const LIMIT_UNIFICATION: Duration = Duration::from_secs(120);
const LIMIT_OPERATOR: Duration = Duration::from_secs(10);

struct Outcome {
    passed: bool,
    detail: String,
}

fn pass() -> Outcome {
    Outcome { passed: true, detail: String::new() }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome { passed: false, detail: detail.into() }
}

fn link(b: &BraidWord) -> LinkData {
    LinkData::from_braid(b)
}

fn braid(name: &str) -> BraidWord {
    corpus_braid(name).expect("corpus entry")
}

fn small_corpus() -> Vec<(&'static str, BraidWord)> {
    corpus().into_iter().filter(|c| c.braid.strands() <= 3).map(|c| (c.name, c.braid)).collect()
}

fn c1_ado_level2_is_alexander() -> Outcome {
    let units: Vec<Cyclo> = (0..8).map(|k| Cyclo::root_power(8, k)).collect();
    for name in ["trefoil", "figure-eight", "hopf"] {
        let b = braid(name);
        let a = a_gamma(&b, 2, &link(&b)).unwrap();
        let Some(stripped) = strip_y(&a) else { return fail(format!("{name}: y is not a global factor")) };
        let img = identify_colours(&psi_ado(2).unwrap().apply(&stripped).unwrap());
        let alex: Poly<Cyclo> = alexander(&b)
            .substitute(|c| Cyclo::integer(*c), |_, e| Ok(Poly::var_pow(Var::X(1), 2 * e)))
            .unwrap();
        if !equal_up_to_unit(&img, &alex, &[Var::X(1)], &units) {
            return fail(format!("{name}: engine {img} vs Alexander {alex}"));
        }
    }
    pass()
}

fn c2_jones_matches_temperley_lieb() -> Outcome {
    for c in corpus() {
        let l = link(&c.braid);
        let cols = vec![2; l.components];
        let v = psi_jones(&cols).unwrap().apply(&j_gamma(&c.braid, &cols, &l).unwrap()).unwrap();
        let reference = jones_reference(&c.braid);
        if v != reference {
            return fail(format!("{}: engine {v} vs oracle {reference}", c.name));
        }
    }
    pass()
}

fn c3_unification() -> Outcome {
    for (name, b) in small_corpus() {
        let l = link(&b);
        let values: Vec<LaurentPoly> = (2..=4).map(|n| a_gamma(&b, n, &l).unwrap()).collect();
        for m in 2..=4usize {
            let psi = psi_ado(m).unwrap();
            let reference = psi.apply(&values[m - 2]).unwrap();
            for n in m + 1..=4 {
                if psi.apply(&values[n - 2]).unwrap() != reference {
                    return fail(format!("{name}: psi_ado({m}) differs between levels {m} and {n}"));
                }
            }
        }
    }
    pass()
}

fn c4_vanishing_of_high_indices() -> Outcome {
    let psi = psi_ado(2).unwrap();
    let mut count = 0;
    for (name, b) in small_corpus() {
        let l = link(&b);
        for idx in state_set(&vec![3; b.strands() - 1]) {
            if idx.iter().all(|&i| i < 2) {
                continue;
            }
            count += 1;
            if !psi.apply(&pairing(&b, &l, &idx, 3).unwrap()).unwrap().is_zero() {
                return fail(format!("{name}: summand {idx:?} survives psi_ado(2)"));
            }
        }
    }
    if count == 0 {
        return fail("no summands with a high index were checked");
    }
    pass()
}

fn c5_bounded_index_stability() -> Outcome {
    for (name, b) in small_corpus() {
        let l = link(&b);
        for idx in state_set(&vec![2; b.strands() - 1]) {
            if pairing(&b, &l, &idx, 3).unwrap() != pairing(&b, &l, &idx, 2).unwrap() {
                return fail(format!("{name}: pairing {idx:?} depends on the level"));
            }
        }
    }
    pass()
}

fn c6_habiro_membership() -> Outcome {
    for (name, b) in small_corpus() {
        let l = link(&b);
        for n in 2..=3usize {
            let diff = a_gamma(&b, n + 1, &l).unwrap().sub(&a_gamma(&b, n, &l).unwrap());
            if !divides(&habiro_generator(n as u32), &diff) {
                return fail(format!("{name}: level {} minus level {n} is not divisible by ({n})!", n + 1));
            }
        }
    }
    pass()
}

fn c7_integrality_and_shape() -> Outcome {
    for (name, b) in small_corpus() {
        let l = link(&b);
        let pre = a_gamma_prefactor(&l);
        for n in 2..=3 {
            let a = a_gamma(&b, n, &l).unwrap();
            if a.terms().any(|(m, _)| m.exp(Var::Y) != 1) {
                return fail(format!("{name}: a term at level {n} does not have y-degree 1"));
            }
            let core = a.mul_monomial(&pre.inv());
            if core.vars().iter().any(|v| matches!(v, Var::U(_))) {
                return fail(format!("{name}: u appears outside the prefactor at level {n}"));
            }
            if core.vars().iter().any(|v| !matches!(v, Var::X(_) | Var::Y | Var::D)) {
                return fail(format!("{name}: unexpected variable at level {n}"));
            }
        }
    }
    pass()
}

/// Markov-related pairs whose first strand stays in the first component.
fn markov_pairs() -> Vec<(String, BraidWord, BraidWord, Vec<u16>)> {
    let mut out = Vec::new();
    for (name, b) in small_corpus() {
        for mv in markov_moves(&b) {
            if mv.relabel[0] == 1 {
                out.push((format!("{name} {}", mv.description), b.clone(), mv.braid, mv.relabel));
            }
        }
    }
    out
}

fn c8_markov_in_quotient() -> Outcome {
    let pairs = markov_pairs();
    if pairs.len() < 5 {
        return fail("fewer than 5 Markov pairs");
    }
    for n in 2..=3 {
        for (what, b1, b2, relabel) in &pairs {
            let a1 = a_gamma(b1, n, &link(b1)).unwrap();
            let a2 = relabel_components(&a_gamma(b2, n, &link(b2)).unwrap(), relabel);
            if !eq_in_quotient(&a1, &a2, n).unwrap() {
                return fail(format!("{what}: not equal in the level-{n} quotient"));
            }
        }
    }
    pass()
}

fn c9_refined_level2() -> Outcome {
    for (what, b1, b2, relabel) in markov_pairs() {
        let r1 = refined_reduce(&a_gamma(&b1, 2, &link(&b1)).unwrap(), 2).unwrap();
        let r2 = refined_reduce(&relabel_components(&a_gamma(&b2, 2, &link(&b2)).unwrap(), &relabel), 2).unwrap();
        if r1 != r2 {
            return fail(format!("{what}: refined level-2 forms differ"));
        }
    }
    pass()
}

fn c10_operator_identities() -> Outcome {
    let relations: [(usize, &[i32], &[i32]); 6] = [
        (3, &[1, 2, 1], &[2, 1, 2]),
        (3, &[-1, -2, -1], &[-2, -1, -2]),
        (3, &[-1, 2, 1], &[2, 1, -2]),
        (2, &[1, -1], &[]),
        (2, &[-1, 1], &[]),
        (3, &[2, -2, 1, -1], &[]),
    ];
    let mut act = BraidAction::generic();
    for colours in [[1u16, 2, 3], [1, 1, 2], [2, 1, 1]] {
        for &(n, lhs, rhs) in &relations {
            let cols = &colours[..n];
            let (bl, br) = (BraidWord::new(n, lhs.to_vec()).unwrap(), BraidWord::new(n, rhs.to_vec()).unwrap());
            for level in 2..=3 {
                for s in state_set(&vec![level; n]) {
                    let v = StateVector::basis(s.iter().map(|&i| i as u16).collect());
                    if act.apply(&bl, cols, &v) != act.apply(&br, cols, &v) {
                        return fail(format!("{lhs:?} = {rhs:?} fails on {s:?} with colours {cols:?}"));
                    }
                }
            }
        }
    }
    pass()
}

fn c11_oval_monodromy() -> Outcome {
    for n in 1..=8usize {
        let levels = MultiLevel::new(vec![n]).unwrap();
        for m in 0..=8usize {
            let zero = oval_monodromy(m, 1, &levels).unwrap() == 0;
            if zero != (m == 0 || m == n) {
                return fail(format!("m={m}, N={n}: monodromy zero is {zero}"));
            }
        }
    }
    pass()
}

fn c12_unknot() -> Outcome {
    let b = BraidWord::new(1, vec![]).unwrap();
    let l = link(&b);
    let y = LaurentPoly::monomial(Monomial::var(Var::Y, 1));
    for n in 2..=5usize {
        let a = a_gamma(&b, n, &l).unwrap();
        if a != y {
            return fail(format!("level {n}: {a}"));
        }
        let qn = balanced_quantum(n as i64);
        if psi_jones(&[n]).unwrap().apply(&a).unwrap() != qn {
            return fail(format!("psi_jones of level {n} is not [{n}]"));
        }
        let j = psi_jones(&[n]).unwrap().apply(&j_gamma(&b, &[n], &l).unwrap()).unwrap();
        if j != qn {
            return fail(format!("coloured Jones of the unknot at colour {n} is {j}"));
        }
    }
    pass()
}

fn main() {
    type Criterion = (usize, &'static str, fn() -> Outcome, Option<Duration>);
    let criteria: [Criterion; 12] = [
        (1, "ADO at level 2 equals the Alexander polynomial up to a unit", c1_ado_level2_is_alexander, Some(LIMIT_ORACLE)),
        (2, "coloured Jones at colours 2 equals the Temperley-Lieb Jones", c2_jones_matches_temperley_lieb, Some(LIMIT_ORACLE)),
        (3, "psi_ado(M) of level N equals psi_ado(M) of level M, 2 <= M <= N <= 4", c3_unification, Some(LIMIT_UNIFICATION)),
        (4, "summands with an index >= 2 vanish under psi_ado(2) at level 3", c4_vanishing_of_high_indices, None),
        (5, "pairings with indices < 2 agree at levels 2 and 3", c5_bounded_index_stability, None),
        (6, "level N+1 minus level N is divisible by (N)_{d^4}!, N = 2, 3", c6_habiro_membership, None),
        (7, "integer coefficients, y-degree 1, u only in the prefactor", c7_integrality_and_shape, None),
        (8, "Markov-related braids agree in the quotient at N = 2, 3", c8_markov_in_quotient, None),
        (9, "refined level-2 forms agree for Markov-related braids", c9_refined_level2, None),
        (10, "braid relations of the crossing operators at N <= 3, n <= 3", c10_operator_identities, Some(LIMIT_OPERATOR)),
        (11, "oval monodromy vanishes iff m is 0 or N_i, m, N_i <= 8", c11_oval_monodromy, None),
        (12, "unknot gives y at levels 2..5 and [N]_q under psi_jones", c12_unknot, None),
    ];
    let mut failures = 0;
    for (k, what, f, limit) in criteria {
        let t = Instant::now();
        let mut out = f();
        let elapsed = t.elapsed();
        if let Some(lim) = limit {
            if elapsed > lim && out.passed {
                out = fail(format!("took {elapsed:.2?}, limit {lim:?}"));
            }
        }
        let mark = if out.passed { "PASS" } else { "FAIL" };
        let detail = if out.detail.is_empty() { String::new() } else { format!(": {}", out.detail) };
        println!("criterion {k:>2} {mark} ({elapsed:.2?}) {what}{detail}");
        if !out.passed {
            failures += 1;
        }
    }
    println!("{} of 12 criteria passed", 12 - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
