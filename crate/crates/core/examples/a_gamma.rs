//! The level-N invariant of a braid closure and its individual pairings.

use unilink::braid::{BraidWord, LinkData};
use unilink::verma::{a_gamma, a_gamma_prefactor, pairing, state_set};

fn main() -> unilink::error::Result<()> {
    let word = std::env::args().nth(1).unwrap_or_else(|| "1 1 1".into());
    let b = BraidWord::parse(&word, None)?;
    let link = LinkData::from_braid(&b);
    println!("braid {b}, prefactor {}", a_gamma_prefactor(&link));
    for idx in state_set(&vec![2; b.strands() - 1]) {
        println!("  pairing {idx:?} = {}", pairing(&b, &link, &idx, 2)?);
    }
    for n in 2..=3 {
        println!("level {n}: {}", a_gamma(&b, n, &link)?);
    }
    Ok(())
}
