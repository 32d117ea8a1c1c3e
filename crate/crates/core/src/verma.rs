//! Generic Verma-module braid action and the state sums `AΓ^N` and `JΓ^N̄`.
//!
//! Each strand carries the basis `v_0, v_1, …` of a generic Verma module of
//! colour `x_a` (standing for `q^{λ_a}`), with `q = d^{-2}`. A crossing acts by
//! the braiding with its Cartan half-power stripped, so every coefficient is
//! an integer Laurent polynomial in the `x_a` and `d`. The closure uses the
//! pivot `K^{1-N}` on the closed strands and leaves strand 1 open at `v_0`.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use crate::braid::{BraidWord, LinkData};
use crate::error::{Error, Result};
use crate::ring::{balanced_binomial, balanced_factorial, LaurentPoly, Monomial, Var};

/// Per-strand indices of a tensor basis vector `v_{j_1} ⊗ … ⊗ v_{j_n}`.
pub type TensorState = Vec<u16>;

/// `q = d^{-2}`.
fn q() -> Monomial {
    Monomial::var(Var::D, -2)
}

fn qpow(k: i64) -> Monomial {
    Monomial::var(Var::D, -2 * k as i32)
}

/// `x q^k - x^{-1} q^{-k}`.
fn bracket(colour: u16, k: i64) -> LaurentPoly {
    let x = Var::X(colour);
    let mut p = LaurentPoly::zero();
    p.add_term(Monomial::var(x, 1).mul(&qpow(k)), 1);
    p.add_term(Monomial::var(x, -1).mul(&qpow(-k)), -1);
    p
}

/// Sparse linear combination of tensor basis states.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct StateVector {
    terms: BTreeMap<TensorState, LaurentPoly>,
}

impl StateVector {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis vector of `state` with coefficient 1.
    pub fn basis(state: TensorState) -> Self {
        let mut v = Self::zero();
        v.add_term(state, LaurentPoly::one());
        v
    }

    pub fn add_term(&mut self, state: TensorState, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&state) {
            Some(e) => {
                *e = e.add(&c);
                if e.is_zero() {
                    self.terms.remove(&state);
                }
            }
            None => {
                self.terms.insert(state, c);
            }
        }
    }

    /// Coefficient of `state` (zero when absent).
    pub fn get(&self, state: &[u16]) -> LaurentPoly {
        self.terms.get(state).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&TensorState, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.add_term(s.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        for (s, a) in &self.terms {
            out.add_term(s.clone(), a.mul(c));
        }
        out
    }
}

/// One crossing between strands of colours `left` and `right` (component
/// indices), optionally truncated to indices below per-colour caps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossingOperator {
    pub left: u16,
    pub right: u16,
    pub sign: i32,
    /// Caps `(N_left, N_right)`; indices reaching a cap are dropped.
    pub caps: Option<(usize, usize)>,
}

/// A target basis pair with its coefficient.
pub type CrossingTerm = (u16, u16, LaurentPoly);

impl CrossingOperator {
    /// Untruncated crossing operator.
    pub fn new(left: u16, right: u16, sign: i32) -> Self {
        assert!(sign == 1 || sign == -1);
        CrossingOperator { left, right, sign, caps: None }
    }

    /// Operator acting on the truncated span of indices `< cap` per colour.
    pub fn truncated(mut self, cap_left: usize, cap_right: usize) -> Self {
        self.caps = Some((cap_left, cap_right));
        self
    }

    /// Image of `v_i ⊗ v_j`; the output states carry swapped colours.
    ///
    /// Positive: `Σ_n (-1)^n q^{-n(n-1)/2} [j+n, n] ∏_{k=1}^n {x_a q^{k-i}}
    /// x_a^{j+n} x_b^{i-n} q^{-2(i-n)(j+n)} v_{j+n} ⊗ v_{i-n}`.
    /// Negative: `Σ_n q^{n(n-1)/2} [i+n, n] ∏_{k=1}^n {x_b q^{k-j}}
    /// x_b^{-i} x_a^{-j} q^{2ij} v_{j-n} ⊗ v_{i+n}`.
    pub fn action(&self, i: u16, j: u16) -> Vec<CrossingTerm> {
        let (a, b) = (self.left, self.right);
        let (i64_, j64) = (i as i64, j as i64);
        let mut out = Vec::new();
        if self.sign > 0 {
            let mut prod = LaurentPoly::one();
            for n in 0..=i64_ {
                if n > 0 {
                    prod = prod.mul(&bracket(a, n - i64_));
                }
                let (ni, nj) = (j64 + n, i64_ - n);
                if let Some((_, cap_b)) = self.caps {
                    // The strand moving left has colour b.
                    if ni as usize >= cap_b {
                        break;
                    }
                }
                let sign = if n % 2 == 0 { 1 } else { -1 };
                let mono = qpow(-n * (n - 1) / 2 - 2 * nj * ni)
                    .mul(&Monomial::var(Var::X(a), ni as i32))
                    .mul(&Monomial::var(Var::X(b), nj as i32));
                let c = balanced_binomial(ni as u32, n as u32, &q()).mul(&prod).mul_monomial(&mono);
                out.push((ni as u16, nj as u16, if sign > 0 { c } else { c.neg() }));
            }
        } else {
            let mut prod = LaurentPoly::one();
            for n in 0..=j64 {
                if n > 0 {
                    prod = prod.mul(&bracket(b, n - j64));
                }
                let (ni, nj) = (j64 - n, i64_ + n);
                if let Some((cap_a, _)) = self.caps {
                    // The strand moving right has colour a.
                    if nj as usize >= cap_a {
                        break;
                    }
                }
                let mono = qpow(n * (n - 1) / 2 + 2 * i64_ * j64)
                    .mul(&Monomial::var(Var::X(b), -(i64_ as i32)))
                    .mul(&Monomial::var(Var::X(a), -(j64 as i32)));
                let c = balanced_binomial(nj as u32, n as u32, &q()).mul(&prod).mul_monomial(&mono);
                out.push((ni as u16, nj as u16, c));
            }
        }
        out
    }
}

/// Builds the crossing operator for colours `(a, b)` and a sign.
pub fn crossing_op(colour_a: u16, colour_b: u16, sign: i32) -> CrossingOperator {
    CrossingOperator::new(colour_a, colour_b, sign)
}

/// Braid action on tensor states with per-component truncation caps.
#[derive(Debug, Default)]
pub struct BraidAction {
    /// Caps indexed by component minus one; `None` means untruncated.
    caps: Option<Vec<usize>>,
    cache: HashMap<(u16, u16, i32, u16, u16), Vec<CrossingTerm>>,
}

impl BraidAction {
    /// Untruncated action (generic Verma modules).
    pub fn generic() -> Self {
        BraidAction { caps: None, cache: HashMap::new() }
    }

    /// Action on the span of indices below `caps[c-1]` on strands of colour `c`.
    pub fn truncated(caps: Vec<usize>) -> Self {
        BraidAction { caps: Some(caps), cache: HashMap::new() }
    }

    fn terms(&mut self, a: u16, b: u16, sign: i32, i: u16, j: u16) -> &[CrossingTerm] {
        let caps = &self.caps;
        self.cache.entry((a, b, sign, i, j)).or_insert_with(|| {
            let mut op = CrossingOperator::new(a, b, sign);
            if let Some(c) = caps {
                op = op.truncated(c[a as usize - 1], c[b as usize - 1]);
            }
            op.action(i, j)
        })
    }

    /// Applies one crossing at positions `(k, k+1)` whose strands have colours `(a, b)`.
    pub fn apply_crossing(&mut self, v: &StateVector, k: usize, a: u16, b: u16, sign: i32) -> StateVector {
        let mut acc: HashMap<TensorState, LaurentPoly> = HashMap::new();
        for (state, c) in v.iter() {
            let (i, j) = (state[k], state[k + 1]);
            let terms = self.terms(a, b, sign, i, j).to_vec();
            for (ni, nj, coef) in terms {
                let mut s = state.clone();
                s[k] = ni;
                s[k + 1] = nj;
                let t = coef.mul(c);
                match acc.get_mut(&s) {
                    Some(e) => *e = e.add(&t),
                    None => {
                        acc.insert(s, t);
                    }
                }
            }
        }
        let mut out = StateVector::zero();
        for (s, c) in acc {
            out.add_term(s, c);
        }
        out
    }

    /// Applies the braid to `v`; `colours[p]` is the component of the strand
    /// starting at position `p`.
    pub fn apply(&mut self, b: &BraidWord, colours: &[u16], v: &StateVector) -> StateVector {
        let mut cols = colours.to_vec();
        let mut cur = v.clone();
        for &g in b.letters() {
            let k = g.unsigned_abs() as usize - 1;
            cur = self.apply_crossing(&cur, k, cols[k], cols[k + 1], g.signum());
            cols.swap(k, k + 1);
        }
        cur
    }
}

/// Applies `b` to `v` with the untruncated generic action.
pub fn apply_braid(b: &BraidWord, link: &LinkData, v: &StateVector) -> StateVector {
    BraidAction::generic().apply(b, &link.strand_to_component, v)
}

/// How the pairing of a multi-index is normalized.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Normalization {
    /// Weight `∏_k [i_k]_q!`: summands with an index `≥ M` vanish at the
    /// `2M`-th root of unity, and the state sums of consecutive levels differ
    /// by a multiple of `(N)_{d^4}!`.
    Factorial,
    /// Bare matrix coefficient.
    Plain,
}

/// The initial state `(0, i_1, …, i_{n-1})`.
pub fn initial_state(index: &[usize]) -> TensorState {
    std::iter::once(0).chain(index.iter().map(|&i| i as u16)).collect()
}

/// Diagonal matrix coefficient `M_ī(β)` of the braid action on `(0, ī)`.
pub fn matrix_coefficient(action: &mut BraidAction, b: &BraidWord, link: &LinkData, index: &[usize]) -> LaurentPoly {
    let s = initial_state(index);
    action.apply(b, &link.strand_to_component, &StateVector::basis(s.clone())).get(&s)
}

fn check_index(index: &[usize], bounds: &[usize], level: usize) -> Result<()> {
    if index.len() != bounds.len() || index.iter().zip(bounds).any(|(i, b)| i >= b) {
        return Err(Error::IndexOutOfRange { index: index.to_vec(), level });
    }
    Ok(())
}

fn pairing_weight(index: &[usize], norm: Normalization) -> LaurentPoly {
    let sum: i32 = index.iter().map(|&i| i as i32).sum();
    let mut w = LaurentPoly::monomial(Monomial::from_pairs([(Var::D, -4 * sum), (Var::Y, 1)]));
    if norm == Normalization::Factorial {
        for &i in index {
            w = w.mul(&balanced_factorial(i as u32, &q()));
        }
    }
    w
}

/// `d^{-4Σ i_k} · y · [ī]! · M_ī(β)` for a multi-index of the level-`N` state set.
pub fn pairing(b: &BraidWord, link: &LinkData, index: &[usize], level: usize) -> Result<LaurentPoly> {
    if level < 2 {
        return Err(Error::Level(level));
    }
    check_index(index, &vec![level; b.strands() - 1], level)?;
    let m = matrix_coefficient(&mut BraidAction::generic(), b, link, index);
    Ok(pairing_weight(index, Normalization::Factorial).mul(&m))
}

/// All multi-indices with `0 ≤ i_k < bounds[k]`.
pub fn state_set(bounds: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &b in bounds {
        out = out.into_iter().flat_map(|p| (0..b).map(move |i| [p.clone(), vec![i]].concat())).collect();
    }
    out
}

fn state_sum(
    b: &BraidWord,
    link: &LinkData,
    bounds: &[usize],
    caps: Option<Vec<usize>>,
    norm: Normalization,
) -> LaurentPoly {
    let indices = state_set(bounds);
    let make = || match &caps {
        Some(c) => BraidAction::truncated(c.clone()),
        None => BraidAction::generic(),
    };
    let parts: Vec<LaurentPoly> = indices
        .par_iter()
        .map_init(make, |action, idx| pairing_weight(idx, norm).mul(&matrix_coefficient(action, b, link, idx)))
        .collect();
    // Summation in index order keeps the result independent of scheduling.
    parts.iter().fold(LaurentPoly::zero(), |acc, p| acc.add(p))
}

/// `∏_i u_i^{f_i - Σ_{j≠i} lk_ij}`.
pub fn framing_prefactor(link: &LinkData) -> Monomial {
    Monomial::from_pairs((0..link.components).map(|i| {
        let lk: i64 = (0..link.components).filter(|&j| j != i).map(|j| link.lk[i][j]).sum();
        (Var::U(i as u16 + 1), (link.framings[i] - lk) as i32)
    }))
}

/// Global monomial prefactor of `AΓ^N`: framing part times `∏_{k≥2} u_{C(k)}^{-1}`.
pub fn a_gamma_prefactor(link: &LinkData) -> Monomial {
    let pivots = Monomial::from_pairs(link.strand_to_component.iter().skip(1).map(|&c| (Var::U(c), -1)));
    framing_prefactor(link).mul(&pivots)
}

/// Global monomial prefactor of `JΓ^N̄`: framing part times `∏_{k≥2} x_{C(k)}^{-1}`.
pub fn j_gamma_prefactor(link: &LinkData) -> Monomial {
    let pivots = Monomial::from_pairs(link.strand_to_component.iter().skip(1).map(|&c| (Var::X(c), -1)));
    framing_prefactor(link).mul(&pivots)
}

/// The level-`N` invariant `AΓ^N(β) ∈ Z[u^±, x^±, y, d^±]`.
pub fn a_gamma(b: &BraidWord, level: usize, link: &LinkData) -> Result<LaurentPoly> {
    if level < 2 {
        return Err(Error::Level(level));
    }
    let bounds = vec![level; b.strands() - 1];
    let sum = state_sum(b, link, &bounds, None, Normalization::Factorial);
    Ok(sum.mul_monomial(&a_gamma_prefactor(link)))
}

/// The coloured invariant `JΓ^N̄(β)`; `colours[i]` is the colour `N_{i+1}` of component `i+1`.
pub fn j_gamma(b: &BraidWord, colours: &[usize], link: &LinkData) -> Result<LaurentPoly> {
    if colours.len() != link.components {
        return Err(Error::ColourMismatch { expected: link.components, got: colours.len() });
    }
    if let Some(&c) = colours.iter().find(|&&c| c < 2) {
        return Err(Error::Level(c));
    }
    let bounds: Vec<usize> =
        link.strand_to_component.iter().skip(1).map(|&c| colours[c as usize - 1]).collect();
    let sum = state_sum(b, link, &bounds, Some(colours.to_vec()), Normalization::Plain);
    Ok(sum.mul_monomial(&j_gamma_prefactor(link)))
}

/// The state sum of `AΓ^N` restricted to the given multi-indices, without prefactor.
pub fn partial_state_sum(b: &BraidWord, link: &LinkData, indices: &[Vec<usize>]) -> LaurentPoly {
    let mut action = BraidAction::generic();
    indices.iter().fold(LaurentPoly::zero(), |acc, idx| {
        acc.add(&pairing_weight(idx, Normalization::Factorial).mul(&matrix_coefficient(&mut action, b, link, idx)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bw(n: usize, w: &[i32]) -> BraidWord {
        BraidWord::new(n, w.to_vec()).unwrap()
    }

    fn y() -> LaurentPoly {
        LaurentPoly::var(Var::Y)
    }

    #[test]
    fn ground_state_maps_to_a_monomial() {
        for sign in [1, -1] {
            let t = crossing_op(1, 2, sign).action(0, 0);
            assert_eq!(t.len(), 1);
            assert_eq!((t[0].0, t[0].1), (0, 0));
            assert!(t[0].2.try_inverse().is_some());
        }
    }

    #[test]
    fn index_sum_is_preserved() {
        for sign in [1, -1] {
            for i in 0..4u16 {
                for j in 0..4u16 {
                    for (a, b, _) in crossing_op(1, 2, sign).action(i, j) {
                        assert_eq!(a + b, i + j);
                    }
                }
            }
        }
    }

    #[test]
    fn positive_then_negative_is_identity() {
        let link = LinkData::from_braid(&bw(2, &[1, 1]));
        let mut act = BraidAction::generic();
        for i in 0..4u16 {
            for j in 0..4u16 {
                let v = StateVector::basis(vec![i, j]);
                let w = act.apply(&bw(2, &[1, -1]), &link.strand_to_component, &v);
                assert_eq!(w, v, "state ({i},{j})");
                let w = act.apply(&bw(2, &[-1, 1]), &link.strand_to_component, &v);
                assert_eq!(w, v, "state ({i},{j})");
            }
        }
    }

    #[test]
    fn identity_braid_pairing_examples() {
        let link = LinkData::from_braid(&bw(2, &[]));
        assert_eq!(pairing(&bw(2, &[]), &link, &[0], 2).unwrap(), y());
        let unknot = bw(1, &[]);
        assert_eq!(pairing(&unknot, &LinkData::from_braid(&unknot), &[], 2).unwrap(), y());
        assert!(pairing(&bw(2, &[]), &link, &[2], 2).is_err());
    }

    #[test]
    fn unknot_is_y() {
        let b = bw(1, &[]);
        let link = LinkData::from_braid(&b);
        for n in 2..=5 {
            assert_eq!(a_gamma(&b, n, &link).unwrap(), y());
        }
        let framed = link.clone().with_framings(vec![2]).unwrap();
        assert_eq!(
            a_gamma(&b, 3, &framed).unwrap(),
            y().mul_monomial(&Monomial::var(Var::U(1), 2))
        );
    }

    #[test]
    fn state_set_enumerates_product() {
        assert_eq!(state_set(&[2, 3]).len(), 6);
        assert_eq!(state_set(&[]), vec![Vec::<usize>::new()]);
    }
}
