//! Local-system values of loop classes and the oval-lift monodromy.

use unilink::localsystem::{oval_monodromy, phi_evaluate, LoopClass, MultiLevel};

fn main() -> unilink::error::Result<()> {
    let levels = MultiLevel::new(vec![3, 4])?;
    let loops = [
        ("sigma_1", LoopClass::sigma(2, 1)),
        ("sigma_bar_2", LoopClass::sigma_bar(2, 2)),
        ("gamma", LoopClass::gamma(2)),
        ("delta", LoopClass::delta(2)),
        ("sigma_0", LoopClass::sigma0(2)),
    ];
    for (name, l) in &loops {
        println!("{name:<12} -> {}", phi_evaluate(l, &levels)?);
    }
    for m in 0..=5 {
        println!("oval with {m} particles around puncture 2 (N=4): {} d'", oval_monodromy(m, 2, &levels)?);
    }
    Ok(())
}
