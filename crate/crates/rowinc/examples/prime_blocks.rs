//! Prime decomposition and the transport maps: a row-increasing
//! tableau splits into prime blocks; on each prime block the block
//! transport map rebuilds row 1 so the major index of the image reads
//! off the amajor index of the source, and applying it blockwise
//! yields the major transport, a self-bijection of the whole family.
//!
//! Run with: `cargo run --example prime_blocks`

use rowinc::bijections::{
    block_transport, is_prime, major_transport, major_transport_inv, prime_decompose,
    skew_profile,
};
use rowinc::stats::{amaj, maj};
use rowinc::{Result, Tableau};

fn main() -> Result<()> {
    let t = Tableau::from_text(
        "1 2 4 5 6 9 10 12 13 14 16 18 20\n2 3 6 7 8 9 11 13 15 16 17 19 20",
    )?;
    println!("start:\n{}\n", t.to_text());

    let decomposition = prime_decompose(&t)?;
    println!(
        "splits after columns {:?} into {} prime blocks:",
        decomposition.boundaries,
        decomposition.blocks.len()
    );
    for block in &decomposition.blocks {
        println!("{}\n", block.to_text());
        assert!(is_prime(block));
    }

    // Block transport on the first prime block, with its skew profile.
    let first = &decomposition.blocks[0];
    let image = block_transport(first)?;
    println!("block transport of the first block:\n{}\n", image.to_text());
    let p = skew_profile(first)?;
    println!(
        "its skew profile: descents0 {:?}, ascents0 {:?}, d = {}, x = {:?}, y = {:?}\n",
        p.descents0, p.ascents0, p.d, p.x, p.y
    );

    // Major transport applies block transport blockwise.
    let phi = major_transport(&t)?;
    println!("major transport of the whole tableau:\n{}\n", phi.to_text());
    let (n, k) = (t.n() as u64, t.k() as u64);
    println!(
        "amaj {} + (n - k) {} = maj {}",
        amaj(&t),
        n - k,
        maj(&phi)
    );
    assert_eq!(maj(&phi), amaj(&t) + n - k);
    assert_eq!(phi.row2(), t.row2());
    assert_eq!(major_transport_inv(&phi)?, t);
    println!("row 2 preserved and the inverse restores the original");
    Ok(())
}
