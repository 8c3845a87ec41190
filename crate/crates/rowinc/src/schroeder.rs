//! Schröder words, lattice paths, and the word↔tableau correspondence.
//!
//! A Schröder path runs from `(0,0)` to `(n,n)` in steps `U = (0,1)`,
//! `D = (1,0)`, and `F = (1,1)` without dipping below the diagonal
//! `y = x`. Reading the steps as letters `U→0, F→1, D→2` gives a
//! *Schröder word*: a string over `{0,1,2}` with equally many 0s and
//! 2s in which every prefix has at least as many 0s as 2s.
//!
//! Scanning the values of a two-row tableau in order — letter 0 when
//! the value sits only in row 1, 1 when in both rows, 2 when only in
//! row 2 — is a bijection onto the words with `k` ones, under which
//! equal-entry columns correspond exactly to flat steps on the
//! diagonal. The word major index sums the positions of strict letter
//! descents, and its generating function has the same closed form as
//! the amajor index up to a power of `q`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::qpoly::{q_binomial, q_int, QPoly};
use crate::tableaux::Tableau;

/// A validated Schröder word. Valid by construction: all parsers and
/// constructors enforce the balance and prefix conditions eagerly.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SchroederWord {
    letters: Vec<u8>,
    n: usize,
    k: usize,
}

impl fmt::Debug for SchroederWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SchroederWord({self})")
    }
}

impl fmt::Display for SchroederWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &letter in &self.letters {
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

impl SchroederWord {
    /// Validates a letter sequence over `{0,1,2}`: equally many 0s and
    /// 2s, and no prefix with more 2s than 0s.
    pub fn new(letters: Vec<u8>) -> Result<Self> {
        let mut zeros = 0usize;
        let mut ones = 0usize;
        let mut twos = 0usize;
        for (i, &letter) in letters.iter().enumerate() {
            match letter {
                0 => zeros += 1,
                1 => ones += 1,
                2 => {
                    twos += 1;
                    if twos > zeros {
                        return Err(Error::input(format!(
                            "prefix of length {} has more 2s than 0s (path dips below the diagonal)",
                            i + 1
                        )));
                    }
                }
                other => {
                    return Err(Error::input(format!(
                        "letter {other} at position {} is not in {{0,1,2}}",
                        i + 1
                    )))
                }
            }
        }
        if zeros != twos {
            return Err(Error::input(format!(
                "word has {zeros} zeros but {twos} twos (path misses the endpoint)"
            )));
        }
        Ok(SchroederWord {
            letters,
            n: zeros + ones,
            k: ones,
        })
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    /// Semilength: the path ends at `(n, n)`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of 1s (flat steps).
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Whether the encoded path is a *small* Schröder path: no flat
    /// step touches the diagonal. Under the tableau correspondence
    /// this is exactly the strict-column condition.
    pub fn is_small(&self) -> bool {
        let mut height = 0usize;
        for &letter in &self.letters {
            match letter {
                0 => height += 1,
                2 => height -= 1,
                _ => {
                    if height == 0 {
                        return false;
                    }
                }
            }
        }
        true
    }
}

impl FromStr for SchroederWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                '2' => Ok(2),
                other => Err(Error::input(format!(
                    "`{other}` is not a Schröder word letter (expected 0, 1, or 2)"
                ))),
            })
            .collect::<Result<Vec<u8>>>()?;
        SchroederWord::new(letters)
    }
}

/// One step of a Schröder path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PathStep {
    Up,
    Flat,
    Down,
}

impl PathStep {
    fn letter(self) -> u8 {
        match self {
            PathStep::Up => 0,
            PathStep::Flat => 1,
            PathStep::Down => 2,
        }
    }

    fn from_letter(letter: u8) -> PathStep {
        match letter {
            0 => PathStep::Up,
            1 => PathStep::Flat,
            _ => PathStep::Down,
        }
    }
}

/// A validated Schröder path. Up is vertical, Down horizontal, Flat
/// diagonal; the path stays weakly above `y = x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SchroederPath {
    steps: Vec<PathStep>,
}

impl SchroederPath {
    pub fn new(steps: Vec<PathStep>) -> Result<Self> {
        // Identical constraints as the word form, so validate there.
        SchroederWord::new(steps.iter().map(|s| s.letter()).collect())?;
        Ok(SchroederPath { steps })
    }

    pub fn steps(&self) -> &[PathStep] {
        &self.steps
    }
}

impl fmt::Display for SchroederPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            let c = match step {
                PathStep::Up => 'U',
                PathStep::Flat => 'F',
                PathStep::Down => 'D',
            };
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for SchroederPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .trim()
            .chars()
            .map(|c| match c.to_ascii_uppercase() {
                'U' => Ok(PathStep::Up),
                'F' => Ok(PathStep::Flat),
                'D' => Ok(PathStep::Down),
                other => Err(Error::input(format!(
                    "`{other}` is not a path step (expected U, F, or D)"
                ))),
            })
            .collect::<Result<Vec<PathStep>>>()?;
        SchroederPath::new(steps)
    }
}

/// Recodes a path into its word, step by step.
pub fn word_from_path(path: &SchroederPath) -> SchroederWord {
    SchroederWord::new(path.steps().iter().map(|s| s.letter()).collect())
        .expect("paths and words share their validity condition")
}

/// Recodes a word into its path, letter by letter.
pub fn path_from_word(word: &SchroederWord) -> SchroederPath {
    SchroederPath {
        steps: word
            .letters()
            .iter()
            .map(|&l| PathStep::from_letter(l))
            .collect(),
    }
}

/// 1-based positions `i` where the word strictly decreases,
/// `w_i > w_{i+1}`.
pub fn word_descents(word: &SchroederWord) -> BTreeSet<usize> {
    let letters = word.letters();
    (1..letters.len())
        .filter(|&i| letters[i - 1] > letters[i])
        .collect()
}

/// Word major index: the sum of the descent positions.
pub fn word_maj(word: &SchroederWord) -> u64 {
    word_descents(word).iter().map(|&i| i as u64).sum()
}

/// Encodes a tableau (offset 0) as a word: for each value in order,
/// letter 0 if it sits only in row 1, 1 if in both rows, 2 if only in
/// row 2.
pub fn tableau_to_word(t: &Tableau) -> Result<SchroederWord> {
    if t.m() != 0 {
        return Err(Error::input("the word encoding requires offset m = 0"));
    }
    let letters = (1..=(2 * t.n() - t.k()) as u32)
        .map(|v| match (t.in_row1(v), t.in_row2(v)) {
            (true, false) => 0,
            (true, true) => 1,
            (false, true) => 2,
            (false, false) => unreachable!("tableau entries form a consecutive run"),
        })
        .collect();
    SchroederWord::new(letters)
}

/// Decodes a word back into its tableau: value `i` joins row 1 on
/// letter 0, row 2 on letter 2, and both rows on letter 1. The empty
/// word has no tableau (a tableau needs at least one column).
pub fn word_to_tableau(word: &SchroederWord) -> Result<Tableau> {
    let mut row1 = Vec::with_capacity(word.n());
    let mut row2 = Vec::with_capacity(word.n());
    for (i, &letter) in word.letters().iter().enumerate() {
        let v = i as u32 + 1;
        if letter != 2 {
            row1.push(v);
        }
        if letter != 0 {
            row2.push(v);
        }
    }
    Tableau::from_rows(row1, row2)
}

/// All Schröder words of semilength `n` with exactly `k` flat steps,
/// in ascending lexicographic order. Out-of-range `k` gives an empty
/// list; `n = 0` is an input error, mirroring the tableau enumerators.
pub fn enumerate_words(n: usize, k: i64) -> Result<Vec<SchroederWord>> {
    if n == 0 {
        return Err(Error::input("n must be at least 1"));
    }
    if k < 0 || k > n as i64 {
        return Ok(Vec::new());
    }
    let k = k as usize;
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(2 * n - k);
    // Track remaining step budgets and the current height #0 − #2.
    fn rec(
        zeros_left: usize,
        ones_left: usize,
        height: usize,
        prefix: &mut Vec<u8>,
        out: &mut Vec<SchroederWord>,
    ) {
        if zeros_left == 0 && ones_left == 0 && height == 0 {
            out.push(SchroederWord::new(prefix.clone()).expect("construction preserves validity"));
            return;
        }
        if zeros_left > 0 {
            prefix.push(0);
            rec(zeros_left - 1, ones_left, height + 1, prefix, out);
            prefix.pop();
        }
        if ones_left > 0 {
            prefix.push(1);
            rec(zeros_left, ones_left - 1, height, prefix, out);
            prefix.pop();
        }
        if height > 0 {
            prefix.push(2);
            rec(zeros_left, ones_left, height - 1, prefix, out);
            prefix.pop();
        }
    }
    rec(n - k, k, 0, &mut prefix, &mut out);
    Ok(out)
}

/// Closed form for the word major index distribution over the words
/// counted by [`enumerate_words`]: the product of two Gaussian
/// binomials divided exactly by a q-integer.
pub fn word_maj_gf(n: i64, k: i64) -> Result<QPoly> {
    if n < 1 {
        return Err(Error::input("n must be at least 1"));
    }
    if k < 0 || k > n {
        return Ok(QPoly::zero());
    }
    q_binomial(2 * n - k, k)?
        .mul(&q_binomial(2 * n - 2 * k, n - k)?)?
        .exact_div(&q_int(n - k + 1)?)
}
