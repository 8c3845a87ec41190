//! The word encoding: each value of a tableau becomes a letter (0 if
//! it sits only in row 1, 1 if in both rows, 2 if only in row 2),
//! giving a Schröder word, equivalently a lattice path with up, flat,
//! and down steps staying weakly above the diagonal.
//!
//! Run with: `cargo run --example lattice_paths`

use rowinc::schroeder::{
    enumerate_words, path_from_word, tableau_to_word, word_descents, word_maj, word_to_tableau,
};
use rowinc::{Result, Tableau};

fn main() -> Result<()> {
    let t = Tableau::from_text("1 2 4 5 6 8\n3 4 6 7 8 9")?;
    println!("tableau:\n{}\n", t.to_text());

    let word = tableau_to_word(&t)?;
    let path = path_from_word(&word);
    println!("word: {word}");
    println!("path: {path}");
    println!(
        "word descents {:?} give maj = {}",
        word_descents(&word),
        word_maj(&word)
    );

    let back = word_to_tableau(&word)?;
    assert_eq!(back, t);
    println!("decoding the word restores the tableau\n");

    // Flat steps touching the diagonal correspond to equal columns;
    // words avoiding them ("small" words) decode to strict-column
    // tableaux.
    println!("every word with 2 up steps, and the tableau it decodes to:");
    for n in [2usize] {
        for k in 0..=n as i64 {
            for w in enumerate_words(n, k)? {
                let t = word_to_tableau(&w)?;
                let marker = if w.is_small() { "small" } else { "touches" };
                println!(
                    "  {w}  ({marker:7})  ->  [{} / {}]",
                    row(t.row1()),
                    row(t.row2())
                );
            }
        }
    }
    Ok(())
}

fn row(values: &[u32]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
