//! Abelianized local system on the configuration space: evaluation of loop
//! classes and the monodromy of configurations lifted along ovals.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Generators of the target of the local system, before and after the
/// level substitution `x̄_i ↦ x_i + (N_i - 1) d'`, `δ̄ ↦ 2 d'`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Generator {
    X(usize),
    XBar(usize),
    Y,
    DeltaBar,
    DPrime,
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::X(i) => write!(f, "x{i}"),
            Generator::XBar(i) => write!(f, "xbar{i}"),
            Generator::Y => write!(f, "y"),
            Generator::DeltaBar => write!(f, "dbar'"),
            Generator::DPrime => write!(f, "d'"),
        }
    }
}

/// Integer combination of generators.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FormalVector(pub BTreeMap<Generator, i64>);

impl FormalVector {
    pub fn zero() -> Self {
        FormalVector::default()
    }

    pub fn add_term(&mut self, g: Generator, c: i64) {
        let e = self.0.entry(g).or_insert(0);
        *e += c;
        if *e == 0 {
            self.0.remove(&g);
        }
    }

    pub fn coeff(&self, g: Generator) -> i64 {
        self.0.get(&g).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for FormalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (k, (g, c)) in self.0.iter().enumerate() {
            let sep = match (k, *c < 0) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            match c.abs() {
                1 => write!(f, "{sep}{g}")?,
                a => write!(f, "{sep}{a}*{g}")?,
            }
        }
        Ok(())
    }
}

/// A first-homology class of the configuration space, as multiplicities of
/// the loop generators.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LoopClass {
    /// Loops `σ_i` around the punctures `p_1..p_n`.
    pub sigma: Vec<i64>,
    /// Loops `σ̄_i` around the symmetric punctures.
    pub sigma_bar: Vec<i64>,
    /// Loop `γ` around the `s`-puncture.
    pub gamma: i64,
    /// Diagonal loop `δ` exchanging two particles.
    pub delta: i64,
    /// Loop `σ_0` around the `0`-puncture.
    pub sigma0: i64,
}

impl LoopClass {
    /// The zero class on `n` punctures.
    pub fn zero(n: usize) -> Self {
        LoopClass { sigma: vec![0; n], sigma_bar: vec![0; n], ..Default::default() }
    }

    /// The class of `σ_i` (1-based).
    pub fn sigma(n: usize, i: usize) -> Self {
        let mut l = Self::zero(n);
        l.sigma[i - 1] = 1;
        l
    }

    /// The class of `σ̄_i` (1-based).
    pub fn sigma_bar(n: usize, i: usize) -> Self {
        let mut l = Self::zero(n);
        l.sigma_bar[i - 1] = 1;
        l
    }

    pub fn gamma(n: usize) -> Self {
        LoopClass { gamma: 1, ..Self::zero(n) }
    }

    pub fn delta(n: usize) -> Self {
        LoopClass { delta: 1, ..Self::zero(n) }
    }

    pub fn sigma0(n: usize) -> Self {
        LoopClass { sigma0: 1, ..Self::zero(n) }
    }

    /// Sum `a·self + b·other`.
    pub fn combine(&self, a: i64, other: &LoopClass, b: i64) -> LoopClass {
        let zip = |x: &[i64], y: &[i64]| x.iter().zip(y).map(|(p, q)| a * p + b * q).collect();
        LoopClass {
            sigma: zip(&self.sigma, &other.sigma),
            sigma_bar: zip(&self.sigma_bar, &other.sigma_bar),
            gamma: a * self.gamma + b * other.gamma,
            delta: a * self.delta + b * other.delta,
            sigma0: a * self.sigma0 + b * other.sigma0,
        }
    }
}

/// Multi-level `N̄ = (N_1, …, N_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiLevel(Vec<usize>);

impl MultiLevel {
    pub fn new(levels: Vec<usize>) -> Result<Self> {
        match levels.iter().find(|&&n| n == 0) {
            Some(&n) => Err(Error::Level(n)),
            None => Ok(MultiLevel(levels)),
        }
    }

    pub fn levels(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// The augmentation `ν`: `σ_i ↦ 2x_i`, `σ̄_i ↦ 2x̄_i`, `γ ↦ y`, `δ ↦ δ̄`, `σ_0 ↦ 0`.
pub fn nu(l: &LoopClass) -> FormalVector {
    let mut v = FormalVector::zero();
    for (i, &c) in l.sigma.iter().enumerate() {
        v.add_term(Generator::X(i + 1), 2 * c);
    }
    for (i, &c) in l.sigma_bar.iter().enumerate() {
        v.add_term(Generator::XBar(i + 1), 2 * c);
    }
    v.add_term(Generator::Y, l.gamma);
    v.add_term(Generator::DeltaBar, l.delta);
    v
}

/// The level substitution `x̄_i ↦ x_i + (N_i - 1) d'`, `δ̄ ↦ 2 d'`.
pub fn level_substitution(v: &FormalVector, levels: &MultiLevel) -> Result<FormalVector> {
    let mut out = FormalVector::zero();
    for (&g, &c) in &v.0 {
        match g {
            Generator::XBar(i) => {
                let n = *levels.levels().get(i - 1).ok_or(Error::ColourMismatch { expected: i, got: levels.len() })?;
                out.add_term(Generator::X(i), c);
                out.add_term(Generator::DPrime, c * (n as i64 - 1));
            }
            Generator::DeltaBar => out.add_term(Generator::DPrime, 2 * c),
            other => out.add_term(other, c),
        }
    }
    Ok(out)
}

/// `Φ^N̄` on a loop class: `ν` followed by the level substitution.
pub fn phi_evaluate(l: &LoopClass, levels: &MultiLevel) -> Result<FormalVector> {
    level_substitution(&nu(l), levels)
}

/// Local-system value carried by `m` particles turning once around the oval
/// through `p_i` and its symmetric puncture: `m x_i - m x̄_i + C(m,2) δ̄`.
pub fn oval_lift_value(m: usize, i: usize) -> FormalVector {
    let m = m as i64;
    let mut v = FormalVector::zero();
    v.add_term(Generator::X(i), m);
    v.add_term(Generator::XBar(i), -m);
    v.add_term(Generator::DeltaBar, m * (m - 1) / 2);
    v
}

/// Coefficient of `d'` in the monodromy of the oval lift, `m(m - N_i)`.
pub fn oval_monodromy(m: usize, i: usize, levels: &MultiLevel) -> Result<i64> {
    let v = level_substitution(&oval_lift_value(m, i), levels)?;
    debug_assert!(v.0.keys().all(|g| *g == Generator::DPrime));
    Ok(v.coeff(Generator::DPrime))
}
