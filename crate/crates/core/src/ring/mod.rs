//! Exact arithmetic in Laurent polynomial rings and cyclotomic fields, with
//! quantum numbers and principal-ideal divisibility.

pub mod cyclo;
pub mod divide;
pub mod localized;
pub mod monomial;
pub mod poly;
pub mod quantum;
pub mod serial;
pub mod var;

pub use cyclo::{cyclotomic_poly, Cyclo};
pub use divide::{divides, exact_div};
pub use localized::LocalizedElem;
pub use monomial::Monomial;
pub use poly::{Coeff, LaurentPoly, Poly};
pub use quantum::{
    balanced_binomial, balanced_factorial, balanced_int, balanced_quantum, d4, habiro_generator, quantum_factorial,
    quantum_int,
};
pub use serial::{from_json, parse_laurent, to_json};
pub use var::Var;
