//! Habiro-type reduction and quotient equality, including the refined level-2 form.

use unilink::braid::{markov_moves, BraidWord, LinkData};
use unilink::ring::{divides, habiro_generator};
use unilink::specialize::relabel_components;
use unilink::unify::{eq_in_quotient, habiro_reduce, refined_reduce};
use unilink::verma::a_gamma;

fn main() -> unilink::error::Result<()> {
    let b = BraidWord::parse("1 -2 1 -2", None)?;
    let link = LinkData::from_braid(&b);
    let a2 = a_gamma(&b, 2, &link)?;
    let a3 = a_gamma(&b, 3, &link)?;
    let diff = a3.sub(&a2);
    println!("figure-eight: level 3 has {} terms, level 2 has {}", a3.len(), a2.len());
    println!("(2)! divides the difference: {}", divides(&habiro_generator(2), &diff));
    println!("reduced difference modulo (2)!: {}", habiro_reduce(&diff, 2)?);
    println!("equal in the level-2 quotient: {}", eq_in_quotient(&a3, &a2, 2)?);

    let base = refined_reduce(&a2, 2)?;
    println!("refined level-2 form: {base}");
    for mv in markov_moves(&b).into_iter().filter(|m| m.relabel[0] == 1) {
        let other = relabel_components(&a_gamma(&mv.braid, 2, &LinkData::from_braid(&mv.braid))?, &mv.relabel);
        println!("  {:<22} same refined form: {}", mv.description, refined_reduce(&other, 2)? == base);
    }
    Ok(())
}
