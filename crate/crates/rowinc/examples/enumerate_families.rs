//! Lists the four families the crate can enumerate — row-increasing
//! tableaux, strict-column increasing tableaux, standard Young
//! tableaux of an arbitrary shape, and Schröder words — and shows how
//! the counts line up with the closed-form counting functions.
//!
//! Run with: `cargo run --example enumerate_families`

use rowinc::qpoly::{count_inc, count_rinc};
use rowinc::schroeder::enumerate_words;
use rowinc::tableaux::{classify, enumerate_inc, enumerate_rinc, enumerate_syt};
use rowinc::{Partition, Result};

fn main() -> Result<()> {
    println!("row-increasing tableaux, 2 columns, one doubled value:");
    for t in enumerate_rinc(2, 1, 0)? {
        let class = classify(t.row1(), t.row2(), t.m())?;
        println!("{}   ({class})\n", t.to_text());
    }
    println!(
        "count {} matches the closed form {}",
        enumerate_rinc(2, 1, 0)?.count(),
        count_rinc(2, 1)?
    );

    println!("\nstrict-column tableaux, 3 columns, one doubled value:");
    for t in enumerate_inc(3, 1)? {
        println!("{}\n", t.to_text());
    }
    println!(
        "count {} matches the closed form {}",
        enumerate_inc(3, 1)?.count(),
        count_inc(3, 1)?
    );

    let shape: Partition = "2,2,1".parse()?;
    println!("\nstandard Young tableaux of shape {shape}:");
    for t in enumerate_syt(&shape) {
        for row in t.rows() {
            let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            println!("{}", line.join(" "));
        }
        println!();
    }

    println!("Schröder words with 2 up steps and 1 flat step:");
    for w in enumerate_words(2, 1)? {
        println!("{w}");
    }

    // The same family shifted to start at 10 instead of 1.
    println!("\nthe 2-column family again, entries starting at 11:");
    for t in enumerate_rinc(2, 1, 10)? {
        println!("{}\n", t.to_text());
    }
    Ok(())
}
