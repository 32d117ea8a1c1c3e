//! Level-`N` quotients of the universal ring and coherent sequences of
//! level-`N` invariants. Quotient equality is decided through the ADO
//! specializations; the Habiro-type ideal has an explicit normal form.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::braid::{BraidWord, LinkData};
use crate::error::{Error, Result};
use crate::ring::divide::unit_constant_remainder;
use crate::ring::{divides, habiro_generator, LaurentPoly, Monomial, Poly, Var};
use crate::specialize::psi_ado;
use crate::verma::a_gamma;

/// A class in the level-`N` quotient, the ring modulo the common kernel of
/// `psi_ado(M)` for `2 ≤ M ≤ N`.
#[derive(Clone, Debug, Serialize)]
pub struct QuotientClass {
    pub representative: LaurentPoly,
    pub level: usize,
}

impl QuotientClass {
    pub fn new(representative: LaurentPoly, level: usize) -> Result<Self> {
        if level < 2 {
            return Err(Error::Level(level));
        }
        Ok(QuotientClass { representative, level })
    }

    /// Equality of classes at the same level; classes at different levels
    /// are compared at the smaller one.
    pub fn equals(&self, other: &QuotientClass) -> Result<bool> {
        eq_in_quotient(&self.representative, &other.representative, self.level.min(other.level))
    }

    /// Image under the projection to level `lower`.
    pub fn project(&self, lower: usize) -> Result<QuotientClass> {
        if lower > self.level {
            return Err(Error::Level(lower));
        }
        QuotientClass::new(self.representative.clone(), lower)
    }
}

/// True iff `psi_ado(M)(a) = psi_ado(M)(b)` for every `M` in `2..=N`.
pub fn eq_in_quotient(a: &LaurentPoly, b: &LaurentPoly, level: usize) -> Result<bool> {
    if level < 2 {
        return Err(Error::Level(level));
    }
    let diff = a.sub(b);
    for m in 2..=level {
        if !psi_ado(m)?.apply(&diff)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Normal form modulo `((N)_{d^4}!)`: the `d`-coefficient of each monomial in
/// the other variables is replaced by its canonical remainder.
pub fn habiro_reduce(p: &LaurentPoly, level: usize) -> Result<LaurentPoly> {
    if level < 2 {
        return Err(Error::Level(level));
    }
    let gen = habiro_generator(level as u32);
    let g: Vec<i128> = {
        let deg = gen.max_exp(Var::D).unwrap_or(0);
        (0..=deg).map(|e| gen.coeff(&Monomial::var(Var::D, e))).collect()
    };
    let mut out = LaurentPoly::zero();
    for (outside, part) in p.group_outside(|v| v == Var::D) {
        let dense: BTreeMap<i32, i128> = part.terms().map(|(m, c)| (m.exp(Var::D), *c)).collect();
        for (e, c) in unit_constant_remainder(&dense, &g).into_iter().enumerate() {
            if c != 0 {
                out.add_term(outside.mul(&Monomial::var(Var::D, e as i32)), c);
            }
        }
    }
    Ok(out)
}

/// Partial normal form modulo the refined ideal: `u_i ↦ x_i^{1-N}`, then
/// [`habiro_reduce`]. The relations involving `y` are left unreduced.
pub fn refined_reduce(p: &LaurentPoly, level: usize) -> Result<LaurentPoly> {
    if level < 2 {
        return Err(Error::Level(level));
    }
    let shift = 1 - level as i32;
    let substituted = p.substitute(
        |c| *c,
        |v, e| {
            Ok(match v {
                Var::U(i) => Poly::var_pow(Var::X(i), shift * e),
                other => Poly::var_pow(other, e),
            })
        },
    )?;
    habiro_reduce(&substituted, level)
}

/// Certificate that level `upper = lower + 1` projects onto level `lower`.
#[derive(Clone, Debug, Serialize)]
pub struct CoherenceCheck {
    pub lower: usize,
    pub upper: usize,
    /// The two representatives agree in the level-`lower` quotient.
    pub quotient_equal: bool,
    /// Their difference lies in the Habiro-type ideal of level `lower`.
    pub habiro_divisible: bool,
}

/// Finite prefix `AΓ^2, …, AΓ^{N_max}` of the universal invariant together
/// with the coherence certificates between consecutive levels.
#[derive(Clone, Debug, Serialize)]
pub struct UniversalSequence {
    pub classes: Vec<QuotientClass>,
    pub coherence: Vec<CoherenceCheck>,
}

impl UniversalSequence {
    /// The class at level `n`, if computed.
    pub fn at(&self, level: usize) -> Option<&QuotientClass> {
        self.classes.iter().find(|c| c.level == level)
    }
}

/// Computes `AΓ^N(b)` for `2 ≤ N ≤ N_max` and checks that each level projects
/// onto the previous one. A failed projection is an error.
pub fn universal_sequence(b: &BraidWord, link: &LinkData, max_level: usize) -> Result<UniversalSequence> {
    if max_level < 2 {
        return Err(Error::Level(max_level));
    }
    let reps: Vec<LaurentPoly> =
        (2..=max_level).into_par_iter().map(|n| a_gamma(b, n, link)).collect::<Result<_>>()?;
    let classes: Vec<QuotientClass> =
        reps.into_iter().zip(2..).map(|(r, n)| QuotientClass { representative: r, level: n }).collect();
    let mut coherence = Vec::new();
    for pair in classes.windows(2) {
        let (lo, hi) = (&pair[0], &pair[1]);
        let quotient_equal = eq_in_quotient(&hi.representative, &lo.representative, lo.level)?;
        if !quotient_equal {
            return Err(Error::Coherence { lower: lo.level, upper: hi.level });
        }
        let diff = hi.representative.sub(&lo.representative);
        let habiro_divisible = divides(&habiro_generator(lo.level as u32), &diff);
        coherence.push(CoherenceCheck { lower: lo.level, upper: hi.level, quotient_equal, habiro_divisible });
    }
    Ok(UniversalSequence { classes, coherence })
}
