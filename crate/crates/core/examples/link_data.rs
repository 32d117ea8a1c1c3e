//! Braid words, closure components, linking numbers, framings and Markov moves.

use unilink::braid::{corpus, markov_moves, BraidWord, LinkData};

fn main() -> unilink::error::Result<()> {
    for c in corpus() {
        let link = LinkData::from_braid(&c.braid);
        println!(
            "{:<16} {:<24} components {} strands->components {:?} lk {:?} framings {:?}",
            c.name,
            c.braid.to_string(),
            link.components,
            link.strand_to_component,
            link.lk,
            link.framings
        );
    }
    let b = BraidWord::parse("1 1", None)?;
    println!("\nMarkov moves of the Hopf link {b}:");
    for mv in markov_moves(&b) {
        println!("  {:<22} {}  relabel {:?}", mv.description, mv.braid, mv.relabel);
    }
    Ok(())
}
