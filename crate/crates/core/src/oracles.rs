//! Classical invariants computed independently of the Verma engine: the
//! Alexander polynomial from the reduced Burau representation and the Jones
//! polynomial from the Temperley–Lieb representation.

use crate::braid::BraidWord;
use crate::ring::{exact_div, Coeff, LaurentPoly, Monomial, Poly, Var};

/// The Alexander variable `t`.
pub const T_VAR: Var = Var::Aux('t');
/// The Kauffman bracket variable `A`.
pub const A_VAR: Var = Var::Aux('A');

/// Square matrix of Laurent polynomials in one variable.
pub type PolyMatrix = Vec<Vec<LaurentPoly>>;

fn t_pow(e: i32) -> LaurentPoly {
    Poly::var_pow(T_VAR, e)
}

fn identity(n: usize) -> PolyMatrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { LaurentPoly::one() } else { LaurentPoly::zero() }).collect()).collect()
}

fn mat_mul(a: &PolyMatrix, b: &PolyMatrix) -> PolyMatrix {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(LaurentPoly::zero(), |acc, k| acc.add(&a[i][k].mul(&b[k][j]))))
                .collect()
        })
        .collect()
}

/// Reduced Burau matrix of `σ_k^{±1}` in `B_n`.
fn generator_matrix(n: usize, g: i32) -> PolyMatrix {
    let dim = n - 1;
    let k = g.unsigned_abs() as usize - 1;
    let mut m = identity(dim);
    if g > 0 {
        m[k][k] = t_pow(1).neg();
        if k > 0 {
            m[k - 1][k] = t_pow(1);
        }
        if k + 1 < dim {
            m[k + 1][k] = LaurentPoly::one();
        }
    } else {
        m[k][k] = t_pow(-1).neg();
        if k > 0 {
            m[k - 1][k] = LaurentPoly::one();
        }
        if k + 1 < dim {
            m[k + 1][k] = t_pow(-1);
        }
    }
    m
}

/// Reduced Burau representation, an `(n-1)×(n-1)` matrix over `Z[t^±]`.
pub fn burau_reduced(b: &BraidWord) -> PolyMatrix {
    let n = b.strands();
    let mut m = identity(n.saturating_sub(1));
    for &g in b.letters() {
        m = mat_mul(&m, &generator_matrix(n, g));
    }
    m
}

/// Determinant by cofactor expansion (matrices here are at most a few rows).
pub fn determinant(m: &PolyMatrix) -> LaurentPoly {
    let n = m.len();
    if n == 0 {
        return LaurentPoly::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = LaurentPoly::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: PolyMatrix =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, v)| v.clone()).collect()).collect();
        let term = m[0][j].mul(&determinant(&minor));
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// Normal form up to `±t^k`: lowest exponent 0 and positive leading coefficient.
pub fn canonical_unit_form(p: &LaurentPoly, v: Var) -> LaurentPoly {
    if p.is_zero() {
        return p.clone();
    }
    let low = p.min_exp(v).unwrap_or(0);
    let shifted = p.mul_monomial(&Monomial::var(v, -low));
    let lead = shifted.terms().max_by_key(|(m, _)| m.exp(v)).map(|(_, c)| *c).unwrap();
    if lead < 0 {
        shifted.neg()
    } else {
        shifted
    }
}

/// Single-variable Alexander polynomial `det(B - I)(1 - t)/(1 - t^n)`, in
/// canonical unit form.
pub fn alexander(b: &BraidWord) -> LaurentPoly {
    let n = b.strands();
    if n == 1 {
        return LaurentPoly::one();
    }
    let mut m = burau_reduced(b);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = row[i].sub(&LaurentPoly::one());
    }
    let num = determinant(&m).mul(&LaurentPoly::one().sub(&t_pow(1)));
    let den = LaurentPoly::one().sub(&t_pow(n as i32));
    let q = exact_div(&num, &den).expect("Burau determinant formula must divide exactly");
    canonical_unit_form(&q, T_VAR)
}

/// Number of loops in the closure of a Temperley–Lieb word on `n` strands,
/// where `cups[t]` is `Some(i)` for a generator `e_i` at level `t`.
fn closure_loops(n: usize, cups: &[Option<usize>]) -> usize {
    let levels = cups.len() + 1;
    let mut parent: Vec<usize> = (0..levels * n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut c = x;
        while p[c] != r {
            let next = p[c];
            p[c] = r;
            c = next;
        }
        r
    }
    let union = |p: &mut Vec<usize>, a: usize, b: usize| {
        let (ra, rb) = (find(p, a), find(p, b));
        if ra != rb {
            p[ra] = rb;
        }
    };
    for (t, cup) in cups.iter().enumerate() {
        let (lo, hi) = (t * n, (t + 1) * n);
        match cup {
            None => (0..n).for_each(|s| union(&mut parent, lo + s, hi + s)),
            Some(i) => {
                union(&mut parent, lo + i, lo + i + 1);
                union(&mut parent, hi + i, hi + i + 1);
                (0..n).filter(|s| s != i && *s != i + 1).for_each(|s| union(&mut parent, lo + s, hi + s));
            }
        }
    }
    let top = (levels - 1) * n;
    for s in 0..n {
        union(&mut parent, s, top + s);
    }
    let mut roots: Vec<usize> = (0..levels * n).map(|x| find(&mut parent, x)).collect();
    roots.sort_unstable();
    roots.dedup();
    roots.len()
}

fn a_pow(e: i32) -> LaurentPoly {
    Poly::var_pow(A_VAR, e)
}

/// Jones polynomial in `A` from the Temperley–Lieb Markov trace:
/// `σ_i ↦ A + A^{-1} e_i`, loop value `δ = -A^2 - A^{-2}`, multiplied by
/// `(-A^3)^{-w}` and divided by the unknot value.
pub fn jones_tl(b: &BraidWord) -> LaurentPoly {
    let n = b.strands();
    let letters = b.letters();
    let delta = a_pow(2).add(&a_pow(-2)).neg();
    let max_loops = n + letters.len() + 1;
    let delta_pows: Vec<LaurentPoly> = (0..=max_loops).scan(LaurentPoly::one(), |acc, _| {
        let cur = acc.clone();
        *acc = acc.mul(&delta);
        Some(cur)
    }).collect();
    let mut acc: std::collections::BTreeMap<(i32, usize), i128> = std::collections::BTreeMap::new();
    let c = letters.len();
    for mask in 0u64..(1u64 << c) {
        let mut a_exp = 0i32;
        let mut cups = Vec::with_capacity(c);
        for (t, &g) in letters.iter().enumerate() {
            let use_e = mask >> t & 1 == 1;
            let s = g.signum();
            // Positive crossing: A·1 + A^{-1}·e; negative: A^{-1}·1 + A·e.
            a_exp += if use_e { -s } else { s };
            cups.push(use_e.then_some(g.unsigned_abs() as usize - 1));
        }
        let loops = closure_loops(n, &cups);
        *acc.entry((a_exp, loops)).or_insert(0) += 1;
    }
    let mut bracket = LaurentPoly::zero();
    for ((e, loops), k) in acc {
        bracket = bracket.add(&delta_pows[loops - 1].mul_monomial(&Monomial::var(A_VAR, e)).scale(&k));
    }
    let w = b.writhe() as i32;
    let sign = if w % 2 == 0 { 1 } else { -1 };
    bracket.mul_monomial(&Monomial::var(A_VAR, -3 * w)).scale(&sign)
}

/// Reference value for the `(2, …, 2)`-coloured invariant in `S` (`q = S^2`):
/// `(-1)^{l-1} q^{-2 Σ_{i≠j} lk_ij} [2]_q V(A ↦ S^{-1})`.
pub fn jones_reference(b: &BraidWord) -> LaurentPoly {
    let link = crate::braid::LinkData::from_braid(b);
    let lk_total: i64 = link.lk.iter().flatten().sum();
    let v = jones_tl(b)
        .substitute(|c| *c, |_, e| Ok(Poly::var_pow(Var::S, -e)))
        .expect("jones_tl has only the variable A");
    let two = Poly::var_pow(Var::S, 2).add(&Poly::var_pow(Var::S, -2));
    let sign = if link.components % 2 == 1 { 1 } else { -1 };
    two.mul(&v).mul_monomial(&Monomial::var(Var::S, -4 * lk_total as i32)).scale(&sign)
}

/// True iff `p = u · m · q` for a monomial `m` in `vars` and a coefficient
/// `u` from `units`.
pub fn equal_up_to_unit<C: Coeff>(p: &Poly<C>, q: &Poly<C>, vars: &[Var], units: &[C]) -> bool {
    match (p.leading(), q.leading()) {
        (None, None) => true,
        (Some(_), None) | (None, Some(_)) => false,
        (Some((mp, _)), Some((mq, _))) => {
            let m = mp.mul(&mq.inv());
            if m.vars().any(|v| !vars.contains(&v)) {
                return false;
            }
            let shifted = q.mul_monomial(&m);
            units.iter().any(|u| p == &shifted.scale(u))
        }
    }
}

/// `equal_up_to_unit` over the integers with units `±1`.
pub fn equal_up_to_sign_monomial(p: &LaurentPoly, q: &LaurentPoly, vars: &[Var]) -> bool {
    equal_up_to_unit(p, q, vars, &[1, -1])
}
