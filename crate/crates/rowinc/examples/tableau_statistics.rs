//! Computes descent and ascent statistics for a single tableau, then
//! tabulates the maj distribution of a whole family against its
//! closed-form generating polynomial.
//!
//! Run with: `cargo run --example tableau_statistics`

use rowinc::qpoly::rinc_maj_gf;
use rowinc::stats::{maj, profile};
use rowinc::tableaux::enumerate_rinc;
use rowinc::{QPoly, Result, Tableau};

fn main() -> Result<()> {
    let t = Tableau::from_text("1 2 4 5 6 8\n3 4 6 7 8 9")?;
    println!("{}\n", t.to_text());

    let p = profile(&t);
    println!("descents: {:?}  -> maj  = {}", p.descents, p.maj);
    println!("ascents:  {:?}  -> amaj = {}", p.ascents, p.amaj);

    // maj over the whole 3-column family with one doubled value,
    // tallied by brute force.
    let mut brute = QPoly::zero();
    for t in enumerate_rinc(3, 1, 0)? {
        brute = brute.add(&QPoly::monomial(1, maj(&t) as usize))?;
    }
    let formula = rinc_maj_gf(3, 1)?;
    println!("\nmaj distribution over the (n=3, k=1) family:");
    println!("  brute force: {brute}");
    println!("  closed form: {formula}");
    assert_eq!(brute, formula);
    println!("  identical, as the distribution theorem promises");
    Ok(())
}
