//! Cyclotomic polynomials and exact arithmetic in cyclotomic fields.

use std::fmt;
use std::sync::{Mutex, OnceLock};
use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::Coeff;

/// The `m`-th cyclotomic polynomial, ascending coefficients, computed by
/// dividing `T^m - 1` by every `Φ_k` with `k` a proper divisor of `m`.
pub fn cyclotomic_poly(m: u32) -> Vec<i128> {
    assert!(m >= 1, "cyclotomic_poly needs m >= 1");
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<i128>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&m) {
        return p.clone();
    }
    let mut num = vec![0i128; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    for k in 1..m {
        if m.is_multiple_of(k) {
            num = int_div_exact(&num, &cyclotomic_poly(k));
        }
    }
    cache.lock().unwrap().insert(m, num.clone());
    num
}

/// Exact division of integer polynomials by a monic divisor.
fn int_div_exact(num: &[i128], den: &[i128]) -> Vec<i128> {
    let dn = den.len() - 1;
    assert_eq!(den[dn], 1, "divisor must be monic");
    let mut rem = num.to_vec();
    let mut quot = vec![0i128; num.len().saturating_sub(dn)];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dn];
        quot[i] = c;
        for (j, &dj) in den.iter().enumerate() {
            rem[i + j] -= c * dj;
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "inexact cyclotomic division");
    quot
}

type QPoly = Vec<BigRational>;

fn trim(p: &mut QPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn qp_mul(a: &[BigRational], b: &[BigRational]) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn qp_sub(a: &[BigRational], b: &[BigRational]) -> QPoly {
    let n = a.len().max(b.len());
    let mut out: QPoly = (0..n)
        .map(|i| {
            a.get(i).cloned().unwrap_or_else(BigRational::zero)
                - b.get(i).cloned().unwrap_or_else(BigRational::zero)
        })
        .collect();
    trim(&mut out);
    out
}

fn qp_divrem(a: &[BigRational], b: &[BigRational]) -> (QPoly, QPoly) {
    let mut rem = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    let lead = b[db].clone();
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    while rem.len() > db {
        let k = rem.len() - 1 - db;
        let c = rem.last().unwrap() / &lead;
        for (j, bj) in b.iter().enumerate() {
            rem[k + j] -= &c * bj;
        }
        quot[k] = c;
        rem.pop();
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

fn phi_q(m: u32) -> QPoly {
    cyclotomic_poly(m)
        .into_iter()
        .map(|c| BigRational::from_integer(BigInt::from(c)))
        .collect()
}

/// An element of the cyclotomic field `Q(ζ_m) = Q[T]/Φ_m(T)`.
///
/// Modulus 0 marks a plain rational number, which embeds in every field and
/// adopts the modulus of whatever it is combined with.
#[derive(Clone, Debug)]
pub struct Cyclo {
    modulus: u32,
    coeffs: QPoly,
}

impl Cyclo {
    /// A rational constant.
    pub fn rational(r: BigRational) -> Self {
        let mut coeffs = vec![r];
        trim(&mut coeffs);
        Cyclo { modulus: 0, coeffs }
    }

    /// An integer constant.
    pub fn integer(c: i128) -> Self {
        Self::rational(BigRational::from_integer(BigInt::from(c)))
    }

    /// Reduces an arbitrary polynomial in `T` modulo `Φ_m`.
    pub fn from_coeffs(modulus: u32, coeffs: QPoly) -> Self {
        assert!(modulus >= 1);
        let (_, mut rem) = qp_divrem(&coeffs, &phi_q(modulus));
        trim(&mut rem);
        Cyclo { modulus, coeffs: rem }
    }

    /// Integer polynomial in `T` reduced modulo `Φ_m`.
    pub fn from_int_coeffs(modulus: u32, coeffs: &[i128]) -> Self {
        Self::from_coeffs(
            modulus,
            coeffs.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect(),
        )
    }

    /// `T^k` for any integer `k`, where `T` is a primitive `m`-th root of unity.
    pub fn root_power(modulus: u32, k: i64) -> Self {
        let e = k.rem_euclid(modulus as i64) as usize;
        let mut c = vec![BigRational::zero(); e + 1];
        c[e] = BigRational::one();
        Self::from_coeffs(modulus, c)
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Canonical coefficients (ascending powers of `T`, degree below `φ(m)`).
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// True when every coefficient is an integer, i.e. the element lies in `Z[ζ_m]`.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// The rational value of a constant element.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.coeffs.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// Numerical value at `T = exp(2πi/m)`, as `(re, im)`.
    pub fn to_complex(&self) -> (f64, f64) {
        let m = self.modulus.max(1) as f64;
        let (mut re, mut im) = (0.0, 0.0);
        for (k, c) in self.coeffs.iter().enumerate() {
            let v = c.to_f64().unwrap_or(f64::NAN);
            let a = 2.0 * std::f64::consts::PI * k as f64 / m;
            re += v * a.cos();
            im += v * a.sin();
        }
        (re, im)
    }

    fn common_modulus(&self, other: &Cyclo) -> u32 {
        match (self.modulus, other.modulus) {
            (0, m) | (m, 0) => m,
            (a, b) if a == b => a,
            (a, b) => panic!("mixing cyclotomic moduli {a} and {b}"),
        }
    }

    fn with(modulus: u32, coeffs: QPoly) -> Self {
        if modulus == 0 {
            let mut c = coeffs;
            trim(&mut c);
            Cyclo { modulus: 0, coeffs: c }
        } else {
            Self::from_coeffs(modulus, coeffs)
        }
    }
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Self) -> bool {
        if self.modulus == other.modulus || (self.coeffs.len() <= 1 && other.coeffs.len() <= 1) {
            self.coeffs == other.coeffs
        } else {
            false
        }
    }
}

impl Eq for Cyclo {}

impl Coeff for Cyclo {
    fn zero() -> Self {
        Cyclo { modulus: 0, coeffs: Vec::new() }
    }
    fn one() -> Self {
        Self::integer(1)
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn plus(&self, other: &Self) -> Self {
        let m = self.common_modulus(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut c: QPoly = (0..n)
            .map(|i| {
                self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
                    + other.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
            })
            .collect();
        trim(&mut c);
        Cyclo { modulus: m, coeffs: c }
    }
    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negate())
    }
    fn times(&self, other: &Self) -> Self {
        let m = self.common_modulus(other);
        Self::with(m, qp_mul(&self.coeffs, &other.coeffs))
    }
    fn negate(&self) -> Self {
        Cyclo { modulus: self.modulus, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(r) = self.as_rational() {
            return Some(Cyclo { modulus: self.modulus, coeffs: vec![r.recip()] });
        }
        // Extended Euclid in Q[T]: s*a + t*phi = 1.
        let phi = phi_q(self.modulus);
        let (mut r0, mut r1) = (phi, self.coeffs.clone());
        let (mut s0, mut s1): (QPoly, QPoly) = (Vec::new(), vec![BigRational::one()]);
        while !r1.is_empty() {
            let (q, r) = qp_divrem(&r0, &r1);
            let s2 = qp_sub(&s0, &qp_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r0 is a nonzero constant because Φ_m is irreducible.
        assert_eq!(r0.len(), 1, "cyclotomic modulus not coprime to element");
        let inv_c = r0[0].recip();
        Some(Self::from_coeffs(self.modulus, s0.iter().map(|c| c * &inv_c).collect()))
    }
    fn display_parts(&self) -> (bool, String, bool) {
        if let Some(r) = self.as_rational() {
            let a = r.abs();
            return (r.is_negative(), a.to_string(), a.is_one());
        }
        (false, format!("({})", poly_in_t(&self.coeffs)), false)
    }
}

fn poly_in_t(c: &[BigRational]) -> String {
    let mut s = String::new();
    for (k, v) in c.iter().enumerate() {
        if v.is_zero() {
            continue;
        }
        let neg = v.is_negative();
        let a = v.abs();
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let mono = match k {
            0 => String::new(),
            1 => "T".to_string(),
            _ => format!("T^{k}"),
        };
        if mono.is_empty() {
            s.push_str(&a.to_string());
        } else if a.is_one() {
            s.push_str(&mono);
        } else {
            s.push_str(&format!("{a}*{mono}"));
        }
    }
    s
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        write!(f, "{}", poly_in_t(&self.coeffs))
    }
}

#[derive(Serialize, Deserialize)]
struct CycloRepr {
    modulus: u32,
    coeffs: Vec<String>,
}

impl Serialize for Cyclo {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CycloRepr {
            modulus: self.modulus,
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cyclo {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = CycloRepr::deserialize(d)?;
        let coeffs = r
            .coeffs
            .iter()
            .map(|c| c.parse::<BigRational>().map_err(serde::de::Error::custom))
            .collect::<Result<QPoly, _>>()?;
        Ok(Cyclo::with(r.modulus, coeffs))
    }
}
