//! Coloured Jones polynomials from the truncated action, compared at colour 2
//! with the Temperley–Lieb oracle.

use unilink::braid::{corpus, BraidWord, LinkData};
use unilink::oracles::jones_reference;
use unilink::specialize::psi_jones;
use unilink::verma::j_gamma;

fn main() -> unilink::error::Result<()> {
    for c in corpus() {
        let link = LinkData::from_braid(&c.braid);
        let cols = vec![2; link.components];
        let v = psi_jones(&cols)?.apply(&j_gamma(&c.braid, &cols, &link)?)?;
        let ok = v == jones_reference(&c.braid);
        println!("{:<16} {v}   oracle agrees: {ok}", c.name);
    }
    let trefoil = BraidWord::parse("1 1 1", None)?;
    let link = LinkData::from_braid(&trefoil);
    for n in 3..=4 {
        let j = psi_jones(&[n])?.apply(&j_gamma(&trefoil, &[n], &link)?)?;
        println!("trefoil, colour {n}: {j}");
    }
    Ok(())
}
