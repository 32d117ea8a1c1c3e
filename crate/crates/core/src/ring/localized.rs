//! Fractions with denominators `∏ (x_i^N - x_i^-N)^{e_i}`.

use std::collections::BTreeMap;
use std::fmt;

use super::cyclo::Cyclo;
use super::poly::Poly;
use super::var::Var;

/// An element of the localized ring of the universal specialization at level `N`.
#[derive(Clone, Debug)]
pub struct LocalizedElem {
    level: u32,
    numerator: Poly<Cyclo>,
    /// Exponent `e_i` of `(x_i^N - x_i^-N)` per component index.
    denominator: BTreeMap<u16, u32>,
}

impl LocalizedElem {
    pub fn new(level: u32, numerator: Poly<Cyclo>, denominator: BTreeMap<u16, u32>) -> Self {
        let denominator = denominator.into_iter().filter(|(_, e)| *e > 0).collect();
        LocalizedElem { level, numerator, denominator }
    }

    /// An element with trivial denominator.
    pub fn from_numerator(level: u32, numerator: Poly<Cyclo>) -> Self {
        Self::new(level, numerator, BTreeMap::new())
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn numerator(&self) -> &Poly<Cyclo> {
        &self.numerator
    }

    pub fn denominator(&self) -> &BTreeMap<u16, u32> {
        &self.denominator
    }

    /// The localizing factor `x_i^N - x_i^-N`.
    pub fn factor(level: u32, component: u16) -> Poly<Cyclo> {
        let n = level as i32;
        Poly::var_pow(Var::X(component), n).sub(&Poly::var_pow(Var::X(component), -n))
    }

    fn denominator_poly(&self, exps: &BTreeMap<u16, u32>) -> Poly<Cyclo> {
        exps.iter().fold(Poly::one(), |acc, (&i, &e)| acc.mul(&Self::factor(self.level, i).pow(e)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.level, other.level);
        let mut den = self.denominator.clone();
        for (&i, &e) in &other.denominator {
            *den.entry(i).or_insert(0) += e;
        }
        Self::new(self.level, self.numerator.mul(&other.numerator), den)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.level, other.level);
        let mut den = self.denominator.clone();
        for (&i, &e) in &other.denominator {
            let d = den.entry(i).or_insert(0);
            *d = (*d).max(e);
        }
        let lift = |x: &Self| {
            let extra: BTreeMap<u16, u32> =
                den.iter().map(|(&i, &e)| (i, e - x.denominator.get(&i).copied().unwrap_or(0))).collect();
            x.numerator.mul(&x.denominator_poly(&extra))
        };
        Self::new(self.level, lift(self).add(&lift(other)), den)
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// Numerical value, with `x_i = exp(2πi λ_i / (2N))` and `T = exp(2πi/4N)`.
    pub fn eval(&self, lambdas: &[f64]) -> (f64, f64) {
        let num = eval_cyclo_poly(&self.numerator, self.level, lambdas);
        let den = eval_cyclo_poly(&self.denominator_poly(&self.denominator), self.level, lambdas);
        cdiv(num, den)
    }
}

impl PartialEq for LocalizedElem {
    fn eq(&self, other: &Self) -> bool {
        self.level == other.level
            && self.numerator.mul(&other.denominator_poly(&other.denominator))
                == other.numerator.mul(&self.denominator_poly(&self.denominator))
    }
}

impl fmt::Display for LocalizedElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator.is_empty() {
            return write!(f, "{}", self.numerator);
        }
        write!(f, "({})", self.numerator)?;
        for (i, e) in &self.denominator {
            let n = self.level;
            write!(f, " / (x{i}^{n} - x{i}^-{n})")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

pub(crate) fn cmul(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

pub(crate) fn cdiv(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    let n = b.0 * b.0 + b.1 * b.1;
    ((a.0 * b.0 + a.1 * b.1) / n, (a.1 * b.0 - a.0 * b.1) / n)
}

/// Numerical value of a polynomial in the `x_i` over `Q(ζ_{4N})`, with
/// `x_i = exp(iπ λ_i / N)`.
pub fn eval_cyclo_poly(p: &Poly<Cyclo>, level: u32, lambdas: &[f64]) -> (f64, f64) {
    let mut acc = (0.0, 0.0);
    for (m, c) in p.terms() {
        let mut t = c.to_complex();
        if c.modulus() == 0 {
            t = (c.as_rational().map(|r| num_traits::ToPrimitive::to_f64(&r).unwrap()).unwrap(), 0.0);
        }
        for &(v, e) in m.pairs() {
            let ang = match v {
                Var::X(i) => std::f64::consts::PI * lambdas[i as usize - 1] * e as f64 / level as f64,
                _ => f64::NAN,
            };
            t = cmul(t, (ang.cos(), ang.sin()));
        }
        acc = (acc.0 + t.0, acc.1 + t.1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fractions_compare_by_cross_multiplication() {
        let n = 2;
        let f = LocalizedElem::factor(n, 1);
        let a = LocalizedElem::new(n, f.clone(), [(1u16, 1u32)].into_iter().collect());
        let one = LocalizedElem::from_numerator(n, Poly::one());
        assert_eq!(a, one);
        let sum = one.add(&a);
        assert_eq!(sum, LocalizedElem::from_numerator(n, Poly::constant(Cyclo::integer(2))));
        assert_eq!(a.mul(&a), one);
    }
}
