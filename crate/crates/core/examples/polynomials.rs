//! Laurent polynomials, quantum numbers, cyclotomic coefficients and
//! divisibility by Habiro-type generators.

use unilink::ring::{d4, divides, exact_div, habiro_generator, parse_laurent, quantum_int, Cyclo, LaurentPoly, Var};

fn main() -> unilink::error::Result<()> {
    let p = parse_laurent("d^-4 * y + 2 * x1 * y - u1^-1")?;
    let q = parse_laurent("1 + d^4")?;
    println!("p       = {p}");
    println!("p * q   = {}", p.mul(&q));
    println!("(p*q)/q = {}", exact_div(&p.mul(&q), &q).expect("exact"));

    let g3 = habiro_generator(3);
    println!("(3)_{{d^4}}! = {g3}");
    println!("(2)_{{d^4}} divides it: {}", divides(&quantum_int(2, &d4()), &g3));

    // T is a primitive 8th root of unity: T^4 = -1.
    let t = Cyclo::root_power(8, 1);
    let t4 = (0..4).fold(Cyclo::integer(1), |acc, _| unilink::ring::Coeff::times(&acc, &t));
    println!("T^4 in Q(T)/Phi_8 = {t4}");

    let x = LaurentPoly::var(Var::X(1));
    println!("x1^-3 * x1^5 = {}", x.pow_signed(-3).unwrap().mul(&x.pow(5)));
    Ok(())
}
