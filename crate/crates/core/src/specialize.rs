//! Specializations of the universal ring. [`psi_jones`] and [`psi_ado`] land in
//! Laurent rings; [`psi_universal`] lands in the localized ring.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{balanced_quantum, Coeff, Cyclo, LaurentPoly, LocalizedElem, Monomial, Poly, Var};

type Image<C> = Box<dyn Fn(Var) -> Option<Poly<C>> + Send + Sync>;

/// A ring homomorphism out of the universal ring, given by variable images.
pub struct SpecMap<C: Coeff> {
    name: String,
    target: String,
    image: Image<C>,
    coef: fn(&i128) -> C,
}

impl<C: Coeff> fmt::Debug for SpecMap<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SpecMap({} -> {})", self.name, self.target)
    }
}

impl<C: Coeff> SpecMap<C> {
    pub fn new(name: impl Into<String>, target: impl Into<String>, coef: fn(&i128) -> C, image: Image<C>) -> Self {
        SpecMap { name: name.into(), target: target.into(), image, coef }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Description of the target ring.
    pub fn target(&self) -> &str {
        &self.target
    }

    /// Image of a single variable.
    pub fn image_of(&self, v: Var) -> Result<Poly<C>> {
        (self.image)(v).ok_or_else(|| Error::Unmapped(v.to_string()))
    }

    /// Applies the homomorphism.
    pub fn apply(&self, p: &LaurentPoly) -> Result<Poly<C>> {
        p.substitute(self.coef, |v, e| {
            let img = self.image_of(v)?;
            img.pow_signed(e).ok_or_else(|| Error::NonInvertible(v.to_string()))
        })
    }
}

fn int_coef(c: &i128) -> i128 {
    *c
}

fn cyclo_coef(c: &i128) -> Cyclo {
    Cyclo::integer(*c)
}

fn s_pow(e: i32) -> LaurentPoly {
    Poly::var_pow(Var::S, e)
}

/// Coloured Jones specialization for colours `N̄` (`colours[i]` belongs to
/// component `i+1`): `u_j, x_j ↦ q^{N_j-1}`, `y ↦ [N_1]_q`, `d ↦ q^{-1/2}`, `q = S^2`.
pub fn psi_jones(colours: &[usize]) -> Result<SpecMap<i128>> {
    if let Some(&c) = colours.iter().find(|&&c| c < 2) {
        return Err(Error::Level(c));
    }
    let cols = colours.to_vec();
    let y_image = balanced_quantum(cols[0] as i64);
    let name = format!("psi_jones{cols:?}");
    Ok(SpecMap::new(
        name,
        "Z[S^±1], q = S^2",
        int_coef,
        Box::new(move |v| match v {
            Var::D => Some(s_pow(-1)),
            Var::Y => Some(y_image.clone()),
            Var::X(i) | Var::U(i) => cols.get(i as usize - 1).map(|&n| s_pow(2 * (n as i32 - 1))),
            _ => None,
        }),
    ))
}

/// `ξ_M - ξ_M^{-1}` with `ξ_M = T^2`, `T` a primitive `4M`-th root of unity.
fn xi_bracket(level: usize) -> Cyclo {
    let m = 4 * level as u32;
    Cyclo::root_power(m, 2).minus(&Cyclo::root_power(m, -2))
}

/// `x_i - x_i^{-1}` over any coefficient ring.
fn x_bracket<C: Coeff>(i: u16) -> Poly<C> {
    Poly::<C>::var(Var::X(i)).sub(&Poly::var_pow(Var::X(i), -1))
}

/// ADO specialization at level `M` with symbolic colours `x_i = ξ_M^{λ_i}`:
/// `u_j ↦ x_j^{1-M}`, `y ↦ (x_1 - x_1^{-1})/(ξ_M - ξ_M^{-1})`, `d ↦ T^{-1}`
/// with `T` a primitive `4M`-th root of unity.
pub fn psi_ado(level: usize) -> Result<SpecMap<Cyclo>> {
    if level < 2 {
        return Err(Error::Level(level));
    }
    let m = 4 * level as u32;
    let inv = xi_bracket(level).inverse().expect("ξ - ξ^-1 is nonzero");
    let y_image = x_bracket::<Cyclo>(1).scale(&inv);
    let shift = 1 - level as i32;
    Ok(SpecMap::new(
        format!("psi_ado({level})"),
        format!("Q(T)[x^±1], T^{m} = 1 primitive"),
        cyclo_coef,
        Box::new(move |v| match v {
            Var::D => Some(Poly::constant(Cyclo::root_power(m, -1))),
            Var::Y => Some(y_image.clone()),
            Var::X(i) => Some(Poly::var(Var::X(i))),
            Var::U(i) => Some(Poly::var_pow(Var::X(i), shift)),
            _ => None,
        }),
    ))
}

/// Universal specialization at level `N` into the localized ring:
/// `u_i ↦ x_i^{1-N}`, `d ↦ T^{-1}` (`T^{4N} = 1`), `y ↦ (x_1 - x_1^{-1})/(x_1^N - x_1^{-N})`.
pub fn psi_universal(level: usize, p: &LaurentPoly) -> Result<LocalizedElem> {
    if level < 2 {
        return Err(Error::Level(level));
    }
    let m = 4 * level as u32;
    let shift = 1 - level as i32;
    let base: SpecMap<Cyclo> = SpecMap::new(
        format!("psi_universal({level})"),
        "localized ring",
        cyclo_coef,
        Box::new(move |v| match v {
            Var::D => Some(Poly::constant(Cyclo::root_power(m, -1))),
            Var::X(i) => Some(Poly::var(Var::X(i))),
            Var::U(i) => Some(Poly::var_pow(Var::X(i), shift)),
            _ => None,
        }),
    );
    let by_y = p.group_outside(|v| v != Var::Y);
    let mut emax = 0u32;
    for ymono in by_y.keys() {
        let e = ymono.exp(Var::Y);
        if e < 0 {
            return Err(Error::NonInvertible("y".into()));
        }
        emax = emax.max(e as u32);
    }
    let factor = LocalizedElem::factor(level as u32, 1);
    let mut num = Poly::<Cyclo>::zero();
    for (ymono, part) in &by_y {
        let e = ymono.exp(Var::Y) as u32;
        let img = base.apply(part)?;
        num = num.add(&img.mul(&x_bracket::<Cyclo>(1).pow(e)).mul(&factor.pow(emax - e)));
    }
    let den: BTreeMap<u16, u32> = [(1u16, emax)].into_iter().collect();
    Ok(LocalizedElem::new(level as u32, num, den))
}

/// Identifies every colour variable with `x_1`.
pub fn identify_colours<C: Coeff>(p: &Poly<C>) -> Poly<C> {
    p.rename(|v| match v {
        Var::X(_) => Var::X(1),
        Var::U(_) => Var::U(1),
        other => other,
    })
}

/// Renames components: component `i` becomes `relabel[i-1]`.
pub fn relabel_components<C: Coeff>(p: &Poly<C>, relabel: &[u16]) -> Poly<C> {
    p.rename(|v| match v {
        Var::X(i) => Var::X(relabel[i as usize - 1]),
        Var::U(i) => Var::U(relabel[i as usize - 1]),
        other => other,
    })
}

/// Divides out the single factor of `y` carried by every term, if present.
pub fn strip_y(p: &LaurentPoly) -> Option<LaurentPoly> {
    if p.terms().all(|(m, _)| m.exp(Var::Y) == 1) {
        Some(p.mul_monomial(&Monomial::var(Var::Y, -1)))
    } else {
        None
    }
}
