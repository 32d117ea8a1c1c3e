//! Sparse multivariate Laurent polynomials over a generic coefficient ring.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::monomial::Monomial;
use super::var::Var;
use crate::error::Result;

/// Coefficient ring of a [`Poly`].
pub trait Coeff: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negate(&self) -> Self;
    /// Multiplicative inverse when it exists in the ring.
    fn inverse(&self) -> Option<Self>;
    /// Printing helper: `(is_negative, magnitude_text, magnitude_is_one)`.
    fn display_parts(&self) -> (bool, String, bool);
}

impl Coeff for i128 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        (*self == 1 || *self == -1).then_some(*self)
    }
    fn display_parts(&self) -> (bool, String, bool) {
        (*self < 0, self.unsigned_abs().to_string(), self.unsigned_abs() == 1)
    }
}

/// A Laurent polynomial: a finite map from monomials to nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<C: Coeff> {
    terms: BTreeMap<Monomial, C>,
}

/// The integer Laurent polynomial ring used for every invariant value.
pub type LaurentPoly = Poly<i128>;

impl<C: Coeff> Default for Poly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> Poly<C> {
    pub fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::term(Monomial::one(), c)
    }

    /// `c * m`.
    pub fn term(m: Monomial, c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    /// The monomial `m` with coefficient one.
    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, C::one())
    }

    /// The variable `v`.
    pub fn var(v: Var) -> Self {
        Self::monomial(Monomial::var(v, 1))
    }

    /// `v^e`.
    pub fn var_pow(v: Var, e: i32) -> Self {
        Self::monomial(Monomial::var(v, e))
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, C)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Adds `c * m` in place.
    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get().plus(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// Terms in canonical (ascending monomial) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> + '_ {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, C)> {
        self.terms.into_iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `m` (zero when absent).
    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    /// The greatest term in canonical order.
    pub fn leading(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    /// The single term of a one-term polynomial.
    pub fn as_term(&self) -> Option<(&Monomial, &C)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// The constant coefficient when the polynomial is constant.
    pub fn as_constant(&self) -> Option<C> {
        if self.is_zero() {
            return Some(C::zero());
        }
        self.as_term().filter(|(m, _)| m.is_one()).map(|(_, c)| c.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.negate());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c.negate())).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut acc: HashMap<Monomial, C> = HashMap::with_capacity(self.len() * other.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.mul(m2);
                let c = c1.times(c2);
                match acc.get_mut(&m) {
                    Some(e) => *e = e.plus(&c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Poly { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, a)| (m.clone(), a.times(c))))
    }

    /// Multiplies by the monomial `m`.
    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Poly { terms: self.terms.iter().map(|(n, c)| (n.mul(m), c.clone())).collect() }
    }

    /// `self^k` for `k >= 0`.
    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Inverse of a unit: a single term whose coefficient is invertible.
    pub fn try_inverse(&self) -> Option<Self> {
        let (m, c) = self.as_term()?;
        Some(Self::term(m.inv(), c.inverse()?))
    }

    /// `self^k` for any integer `k`; negative powers need a unit.
    pub fn pow_signed(&self, k: i32) -> Option<Self> {
        if k >= 0 {
            Some(self.pow(k as u32))
        } else {
            Some(self.try_inverse()?.pow(k.unsigned_abs()))
        }
    }

    /// All variables occurring in some term.
    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms.keys().flat_map(|m| m.vars()).collect()
    }

    /// Largest exponent of `v` over all terms.
    pub fn max_exp(&self, v: Var) -> Option<i32> {
        self.terms.keys().map(|m| m.exp(v)).max()
    }

    /// Smallest exponent of `v` over all terms.
    pub fn min_exp(&self, v: Var) -> Option<i32> {
        self.terms.keys().map(|m| m.exp(v)).min()
    }

    /// Applies a variable renaming.
    pub fn rename(&self, f: impl Fn(Var) -> Var) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (m.rename(&f), c.clone())))
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs<C2: Coeff>(&self, f: impl Fn(&C) -> C2) -> Poly<C2> {
        Poly::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// Groups terms by the part of their monomial outside `inner`; each group
    /// maps to its coefficient polynomial in the `inner` variables.
    pub fn group_outside(&self, inner: impl Fn(Var) -> bool) -> BTreeMap<Monomial, Self> {
        let mut out: BTreeMap<Monomial, Self> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (inside, outside) = m.split(&inner);
            out.entry(outside).or_default().add_term(inside, c.clone());
        }
        out
    }

    /// Ring homomorphism into `Poly<C2>`: coefficients go through `coef`,
    /// and `image(v, e)` returns the image of `v^e`.
    pub fn substitute<C2: Coeff>(
        &self,
        coef: impl Fn(&C) -> C2,
        mut image: impl FnMut(Var, i32) -> Result<Poly<C2>>,
    ) -> Result<Poly<C2>> {
        let mut cache: HashMap<(Var, i32), Poly<C2>> = HashMap::new();
        let mut out = Poly::<C2>::zero();
        for (m, c) in &self.terms {
            let mut t = Poly::<C2>::constant(coef(c));
            for &(v, e) in m.pairs() {
                let img = match cache.entry((v, e)) {
                    std::collections::hash_map::Entry::Occupied(o) => o.into_mut(),
                    std::collections::hash_map::Entry::Vacant(slot) => slot.insert(image(v, e)?),
                };
                t = t.mul(img);
                if t.is_zero() {
                    break;
                }
            }
            out = out.add(&t);
        }
        Ok(out)
    }

    /// Evaluates at a point, with `f(v, e)` giving the value of `v^e`.
    pub fn eval<R>(&self, coef: impl Fn(&C) -> R, f: impl Fn(Var, i32) -> R) -> R
    where
        R: Clone + std::ops::Add<Output = R> + std::ops::Mul<Output = R>,
    {
        let mut acc: Option<R> = None;
        for (m, c) in &self.terms {
            let mut t = coef(c);
            for &(v, e) in m.pairs() {
                t = t * f(v, e);
            }
            acc = Some(match acc {
                None => t,
                Some(a) => a + t,
            });
        }
        acc.unwrap_or_else(|| coef(&C::zero()))
    }
}

impl<C: Coeff> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let (neg, mag, unit) = c.display_parts();
            match (k == 0, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if unit {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag} * {m}")?;
            }
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl<C: Coeff> $tr<&Poly<C>> for &Poly<C> {
            type Output = Poly<C>;
            fn $method(self, rhs: &Poly<C>) -> Poly<C> {
                Poly::$inner(self, rhs)
            }
        }
    };
}
forward_binop!(Add, add, add);
forward_binop!(Sub, sub, sub);
forward_binop!(Mul, mul, mul);

impl<C: Coeff> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly::neg(self)
    }
}

impl From<i128> for LaurentPoly {
    fn from(c: i128) -> Self {
        Poly::constant(c)
    }
}
