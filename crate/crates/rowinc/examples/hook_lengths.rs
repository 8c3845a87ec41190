//! Hook lengths and the q-hook generating function: for each cell of
//! a Young diagram the hook counts the cells to its right, below it,
//! and itself; the product formula then gives the maj distribution
//! over all standard tableaux of that shape without enumerating them.
//!
//! Run with: `cargo run --example hook_lengths`

use rowinc::qpoly::{hook_lengths, q_hook_maj_sum};
use rowinc::stats::syt_maj;
use rowinc::tableaux::enumerate_syt;
use rowinc::{Partition, QPoly, Result};

fn main() -> Result<()> {
    let shape: Partition = "3,3,1".parse()?;
    println!("shape {shape}, hooks cell by cell (row-major):");
    let hooks = hook_lengths(&shape);
    let mut cursor = 0;
    for &len in shape.parts() {
        let row: Vec<String> = hooks[cursor..cursor + len].iter().map(|h| h.to_string()).collect();
        println!("  {}", row.join(" "));
        cursor += len;
    }

    let formula = q_hook_maj_sum(&shape)?;
    println!("\nmaj generating function from the hook product:\n  {formula}");

    // Cross-check against direct enumeration of the standard tableaux.
    let mut brute = QPoly::zero();
    let mut count = 0u64;
    for t in enumerate_syt(&shape) {
        brute = brute.add(&QPoly::monomial(1, syt_maj(&t) as usize))?;
        count += 1;
    }
    println!("  brute force over {count} standard tableaux:\n  {brute}");
    assert_eq!(formula, brute);

    println!(
        "\nnumber of standard tableaux from the formula at q = 1: {}",
        formula.eval_at_one()?
    );
    Ok(())
}
