//! Exact division and principal-ideal membership in Laurent rings.

use std::collections::BTreeMap;

use super::monomial::Monomial;
use super::poly::LaurentPoly;
use super::var::Var;

type Dense = BTreeMap<Vec<i32>, i128>;

fn to_dense(p: &LaurentPoly, vars: &[Var]) -> Dense {
    p.terms().map(|(m, c)| (vars.iter().map(|&v| m.exp(v)).collect(), *c)).collect()
}

fn from_dense(d: &Dense, vars: &[Var]) -> LaurentPoly {
    LaurentPoly::from_terms(d.iter().map(|(e, c)| {
        (Monomial::from_pairs(vars.iter().copied().zip(e.iter().copied())), *c)
    }))
}

/// Exact quotient `f / g` in the Laurent ring, or `None` when `g` does not divide `f`.
///
/// Monomials are units, so `f` is shifted to an ordinary polynomial and `g`
/// is stripped of its monomial content; in the polynomial ring the
/// lexicographic division algorithm recovers the quotient whenever it exists.
pub fn exact_div(f: &LaurentPoly, g: &LaurentPoly) -> Option<LaurentPoly> {
    assert!(!g.is_zero(), "division by zero polynomial");
    if f.is_zero() {
        return Some(LaurentPoly::zero());
    }
    let vars: Vec<Var> = f.vars().union(&g.vars()).copied().collect();
    let shift = |p: &LaurentPoly| Monomial::from_pairs(vars.iter().map(|&v| (v, -p.min_exp(v).unwrap_or(0))));
    let (fs, gs) = (shift(f), shift(g));
    let fd = to_dense(&f.mul_monomial(&fs), &vars);
    let gd = to_dense(&g.mul_monomial(&gs), &vars);
    let (glead_e, glead_c) = gd.iter().next_back().map(|(e, c)| (e.clone(), *c)).unwrap();
    let mut rem = fd;
    let mut quot = Dense::new();
    while let Some((le, lc)) = rem.iter().next_back().map(|(e, c)| (e.clone(), *c)) {
        if lc % glead_c != 0 {
            return None;
        }
        let qe: Vec<i32> = le.iter().zip(&glead_e).map(|(a, b)| a - b).collect();
        if qe.iter().any(|&e| e < 0) {
            return None;
        }
        let qc = lc / glead_c;
        for (ge, gc) in &gd {
            let e: Vec<i32> = qe.iter().zip(ge).map(|(a, b)| a + b).collect();
            let entry = rem.entry(e.clone()).or_insert(0);
            *entry -= qc * gc;
            if *entry == 0 {
                rem.remove(&e);
            }
        }
        quot.insert(qe, qc);
    }
    // f * fs = (g * gs) * quot, so f / g = quot * gs / fs.
    Some(from_dense(&quot, &vars).mul_monomial(&gs.mul(&fs.inv())))
}

/// True iff `f = g * h` for some Laurent polynomial `h`.
pub fn divides(g: &LaurentPoly, f: &LaurentPoly) -> bool {
    exact_div(f, g).is_some()
}

/// Canonical remainder of a univariate Laurent polynomial in `v` modulo a
/// monic generator with constant term 1. `v^-1` is rewritten as the
/// polynomial inverse of `v` modulo the generator, so the result has
/// exponents in `0..deg(g)` and is independent of the representative.
pub fn unit_constant_remainder(p: &BTreeMap<i32, i128>, g: &[i128]) -> Vec<i128> {
    let n = g.len() - 1;
    assert!(n >= 1 && g[0] == 1 && g[n] == 1, "generator must be monic with constant term 1");
    // v * h(v) = g(v) - 1, so v^-1 = -h(v) modulo g.
    let vinv: Vec<i128> = g[1..].iter().map(|c| -c).collect();
    let reduce = |mut a: Vec<i128>| -> Vec<i128> {
        for i in (n..a.len()).rev() {
            let c = a[i];
            if c != 0 {
                for (j, gj) in g.iter().enumerate() {
                    a[i - n + j] -= c * gj;
                }
            }
        }
        a.truncate(n);
        a.resize(n, 0);
        a
    };
    let mul = |a: &[i128], b: &[i128]| -> Vec<i128> {
        let mut out = vec![0i128; a.len() + b.len()];
        for (i, x) in a.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        reduce(out)
    };
    let mut acc = vec![0i128; n];
    let mut unit = vec![0i128; n];
    unit[0] = 1;
    let vpos = reduce({
        let mut v = vec![0i128; 2];
        v[1] = 1;
        v
    });
    let vneg = reduce(vinv);
    let mut cache: BTreeMap<i32, Vec<i128>> = BTreeMap::new();
    cache.insert(0, unit);
    for (&e, &c) in p {
        if !cache.contains_key(&e) {
            let (step, k) = if e > 0 { (&vpos, e) } else { (&vneg, -e) };
            let mut r = cache[&0].clone();
            for _ in 0..k {
                r = mul(&r, step);
            }
            cache.insert(e, r);
        }
        for (a, b) in acc.iter_mut().zip(&cache[&e]) {
            *a += c * b;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::super::quantum::{d4, habiro_generator, quantum_int};
    use super::*;

    #[test]
    fn divisibility_examples() {
        let g = quantum_int(2, &d4());
        let x1 = LaurentPoly::var(Var::X(1));
        assert!(divides(&g, &x1.mul(&g)));
        assert!(!divides(&g, &x1));
        assert!(divides(&habiro_generator(3), &habiro_generator(4)));
    }

    #[test]
    fn factorial_chain() {
        for n in 0..10u32 {
            assert!(divides(&habiro_generator(n), &habiro_generator(n + 1)));
        }
        assert!(!divides(&habiro_generator(4), &habiro_generator(3)));
    }

    #[test]
    fn quotient_is_recovered_for_laurent_inputs() {
        let a = LaurentPoly::var_pow(Var::D, -3).add(&LaurentPoly::var(Var::Y).mul(&LaurentPoly::var_pow(Var::X(1), -2)));
        let b = LaurentPoly::one().add(&LaurentPoly::var(Var::D).mul(&LaurentPoly::var_pow(Var::X(1), -1)));
        let q = exact_div(&a.mul(&b), &b).unwrap();
        assert_eq!(q, a);
        assert!(!divides(&b, &a.mul(&b).add(&LaurentPoly::one())));
    }

    #[test]
    fn remainder_is_canonical() {
        // d^-1 and -d^3 - ... agree modulo 1 + d^4: d^4 = -1 so d^-1 = -d^3.
        let g = vec![1, 0, 0, 0, 1];
        let a: BTreeMap<i32, i128> = [(-1, 1)].into_iter().collect();
        let b: BTreeMap<i32, i128> = [(3, -1)].into_iter().collect();
        assert_eq!(unit_constant_remainder(&a, &g), unit_constant_remainder(&b, &g));
        let z: BTreeMap<i32, i128> = [(0, 1), (4, 1)].into_iter().collect();
        assert!(unit_constant_remainder(&z, &g).iter().all(|&c| c == 0));
    }
}
