//! Sparse Laurent monomials.

use std::fmt;

use super::var::Var;

/// A Laurent monomial stored as `(variable, exponent)` pairs sorted by
/// variable, with no zero exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<(Var, i32)>);

impl Monomial {
    /// The empty monomial.
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    /// `v^e`.
    pub fn var(v: Var, e: i32) -> Self {
        if e == 0 {
            Self::one()
        } else {
            Monomial(vec![(v, e)])
        }
    }

    /// Builds a monomial from arbitrary pairs, merging repeats.
    pub fn from_pairs<I: IntoIterator<Item = (Var, i32)>>(pairs: I) -> Self {
        let mut v: Vec<(Var, i32)> = pairs.into_iter().collect();
        v.sort_by_key(|p| p.0);
        let mut out: Vec<(Var, i32)> = Vec::with_capacity(v.len());
        for (var, e) in v {
            match out.last_mut() {
                Some(last) if last.0 == var => last.1 += e,
                _ => out.push((var, e)),
            }
        }
        out.retain(|p| p.1 != 0);
        Monomial(out)
    }

    /// The sorted `(variable, exponent)` pairs.
    pub fn pairs(&self) -> &[(Var, i32)] {
        &self.0
    }

    /// Exponent of `v` (zero when absent).
    pub fn exp(&self, v: Var) -> i32 {
        self.0
            .binary_search_by_key(&v, |p| p.0)
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    /// True for the empty monomial.
    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Variables with nonzero exponent.
    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.0.iter().map(|p| p.0)
    }

    /// Product of two monomials.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let e = a[i].1 + b[j].1;
                    if e != 0 {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// `self^k` for any integer `k`.
    pub fn pow(&self, k: i32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|&(v, e)| (v, e * k)).collect())
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Monomial {
        self.pow(-1)
    }

    /// Splits into the part whose variables satisfy `keep` and the rest.
    pub fn split(&self, keep: impl Fn(Var) -> bool) -> (Monomial, Monomial) {
        let (a, b): (Vec<_>, Vec<_>) = self.0.iter().partition(|p| keep(p.0));
        (Monomial(a), Monomial(b))
    }

    /// Applies a variable renaming; colliding variables multiply.
    pub fn rename(&self, f: impl Fn(Var) -> Var) -> Monomial {
        Monomial::from_pairs(self.0.iter().map(|&(v, e)| (f(v), e)))
    }

    /// Total degree in the variables selected by `pred`.
    pub fn degree_where(&self, pred: impl Fn(Var) -> bool) -> i32 {
        self.0.iter().filter(|p| pred(p.0)).map(|p| p.1).sum()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " * ")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplication_cancels_and_merges() {
        let a = Monomial::from_pairs([(Var::D, 2), (Var::X(1), -1)]);
        let b = Monomial::from_pairs([(Var::X(1), 1), (Var::Y, 1)]);
        assert_eq!(a.mul(&b), Monomial::from_pairs([(Var::D, 2), (Var::Y, 1)]));
        assert_eq!(a.mul(&a.inv()), Monomial::one());
        assert_eq!(a.exp(Var::X(1)), -1);
        assert_eq!(a.exp(Var::U(1)), 0);
    }

    #[test]
    fn display_uses_canonical_order() {
        let m = Monomial::from_pairs([(Var::U(1), 2), (Var::Y, 1), (Var::D, -4)]);
        assert_eq!(m.to_string(), "d^-4 * y * u1^2");
    }
}
