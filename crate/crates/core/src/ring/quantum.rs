//! Quantum numbers and the factorials built from them.

use super::monomial::Monomial;
use super::poly::{LaurentPoly, Poly};
use super::var::Var;

/// `(n)_b = 1 + b + ... + b^(n-1)`.
pub fn quantum_int(n: u32, base: &LaurentPoly) -> LaurentPoly {
    let mut acc = LaurentPoly::zero();
    let mut pow = LaurentPoly::one();
    for _ in 0..n {
        acc = acc.add(&pow);
        pow = pow.mul(base);
    }
    acc
}

/// `(n)_b! = (1)_b (2)_b ... (n)_b`, with `(0)_b! = 1`.
pub fn quantum_factorial(n: u32, base: &LaurentPoly) -> LaurentPoly {
    (1..=n).fold(LaurentPoly::one(), |acc, k| acc.mul(&quantum_int(k, base)))
}

/// The element `d^4`, base of the Habiro-type factorials.
pub fn d4() -> LaurentPoly {
    Poly::var_pow(Var::D, 4)
}

/// `(n)_{d^4}!`, generator of the level-`n` Habiro-type ideal.
pub fn habiro_generator(n: u32) -> LaurentPoly {
    quantum_factorial(n, &d4())
}

/// Balanced quantum integer `[m]_q = (q^m - q^-m)/(q - q^-1)` for a monomial `q`.
pub fn balanced_int(m: i64, q: &Monomial) -> LaurentPoly {
    if m < 0 {
        return balanced_int(-m, q).neg();
    }
    let mut p = LaurentPoly::zero();
    for k in 0..m {
        p.add_term(q.pow((m - 1 - 2 * k) as i32), 1);
    }
    p
}

/// `[m]_q` in the target variable `S`, with `q = S^2`.
pub fn balanced_quantum(m: i64) -> LaurentPoly {
    balanced_int(m, &Monomial::var(Var::S, 2))
}

/// `[n]_q! = [1]_q ... [n]_q`.
pub fn balanced_factorial(n: u32, q: &Monomial) -> LaurentPoly {
    (1..=n as i64).fold(LaurentPoly::one(), |acc, k| acc.mul(&balanced_int(k, q)))
}

/// Balanced Gaussian binomial `[a choose b]_q`, via
/// `[a, b] = q^-b [a-1, b] + q^(a-b) [a-1, b-1]`.
pub fn balanced_binomial(a: u32, b: u32, q: &Monomial) -> LaurentPoly {
    if b > a {
        return LaurentPoly::zero();
    }
    let mut row: Vec<LaurentPoly> = vec![LaurentPoly::one()];
    for n in 1..=a {
        let mut next = Vec::with_capacity(n as usize + 1);
        for k in 0..=n {
            let mut t = LaurentPoly::zero();
            if k < n {
                t = t.add(&row[k as usize].mul_monomial(&q.pow(-(k as i32))));
            }
            if k > 0 {
                t = t.add(&row[k as usize - 1].mul_monomial(&q.pow((n - k) as i32)));
            }
            next.push(t);
        }
        row = next;
    }
    row.swap_remove(b as usize)
}
