//! Coherent sequence of level-N invariants approximating the universal invariant.

use unilink::braid::{BraidWord, LinkData};
use unilink::specialize::psi_universal;
use unilink::unify::universal_sequence;

fn main() -> unilink::error::Result<()> {
    let word = std::env::args().nth(1).unwrap_or_else(|| "1 1".into());
    let b = BraidWord::parse(&word, None)?;
    let seq = universal_sequence(&b, &LinkData::from_braid(&b), 3)?;
    for class in &seq.classes {
        println!("N={}: {} terms", class.level, class.representative.len());
        println!("  universal image: {}", psi_universal(class.level, &class.representative)?);
    }
    for c in &seq.coherence {
        println!("level {} -> {}: quotient {}, habiro {}", c.upper, c.lower, c.quotient_equal, c.habiro_divisible);
    }
    Ok(())
}
