//! ADO specializations of the level-N invariant; at level 2 they recover the
//! Alexander polynomial.

use unilink::braid::{corpus, BraidWord, LinkData};
use unilink::oracles::alexander;
use unilink::specialize::psi_ado;
use unilink::verify::ado_matches_alexander;
use unilink::verma::a_gamma;

fn main() -> unilink::error::Result<()> {
    for c in corpus().into_iter().filter(|c| c.braid.strands() > 1) {
        let (ok, img, _) = ado_matches_alexander(&c.braid)?;
        println!("{:<16} Alexander {:<28} ADO(2)/y {img}   match: {ok}", c.name, alexander(&c.braid).to_string());
    }
    let trefoil = BraidWord::parse("1 1 1", None)?;
    let link = LinkData::from_braid(&trefoil);
    println!("\ntrefoil ADO(3) = {}", psi_ado(3)?.apply(&a_gamma(&trefoil, 3, &link)?)?);
    Ok(())
}
