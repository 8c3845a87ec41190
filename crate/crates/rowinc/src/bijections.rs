//! Structure-preserving maps between the two-row families.
//!
//! Four maps live here, each with its inverse:
//!
//! * the *equal-column collapse*, which removes the leftmost column
//!   with equal entries and appends a fresh maximum, trading one
//!   doubled value for strictly increasing columns;
//! * the *block transport* map on prime tableaux, which replaces each
//!   doubled value in row 1 by the entry cyclically to its left in
//!   row 2;
//! * the *skew profile*, the bookkeeping data `(d, x, y)` that pins
//!   down how block transport shifts the descent statistics;
//! * the *major transport* map, which applies block transport to every
//!   prime block of a tableau and realizes `maj ∘ Φ = amaj + n − k`.
//!
//! A tableau is *prime* when every potential cut point is blocked: for
//! each column `j` whose bottom entry is one less than the next top
//! entry, the bottom entry of column `j+1` must be doubled. Prime
//! tableaux are exactly the indecomposable blocks of the major
//! transport.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::tableaux::Tableau;

/// Elements of `a` that do not occur in `b`; both inputs sorted.
fn sorted_diff(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter()
        .copied()
        .filter(|v| b.binary_search(v).is_err())
        .collect()
}

/// Collapses the leftmost equal-entry column: deletes its bottom
/// entry, closes the gap in row 2, and appends the new maximum
/// `2n − k + 1`. Maps a tableau with `k` doubled values and at least
/// one equal column to one with `k − 1` doubled values and strictly
/// increasing columns.
pub fn collapse_equal_column(t: &Tableau) -> Result<Tableau> {
    if t.m() != 0 {
        return Err(Error::input("the collapse map requires offset m = 0"));
    }
    let j = t
        .first_equal_column()
        .ok_or_else(|| Error::domain("tableau has no equal-entry column to collapse"))?;
    let n = t.n();
    let mut row2: Vec<u32> = t.row2().to_vec();
    row2.remove(j);
    row2.push((2 * n - t.k()) as u32 + 1);
    Tableau::from_rows(t.row1().to_vec(), row2)
}

/// Inverse of [`collapse_equal_column`]. Expects a tableau with
/// strictly increasing columns and offset 0; re-creates the doubled
/// column at the rightmost position `p` where the next top entry is
/// one more than the bottom entry (at the front if no such position
/// exists), dropping the current maximum.
pub fn expand_equal_column(s: &Tableau) -> Result<Tableau> {
    if s.m() != 0 {
        return Err(Error::input("the expansion map requires offset m = 0"));
    }
    if s.first_equal_column().is_some() {
        return Err(Error::input(
            "the expansion map requires strictly increasing columns",
        ));
    }
    let n = s.n();
    let row1 = s.row1();
    let row2 = s.row2();
    let insert = (0..n - 1)
        .rev()
        .find(|&p| row1[p + 1] == row2[p] + 1)
        .map_or(0, |p| p + 1);
    let mut new_row2 = Vec::with_capacity(n);
    new_row2.extend_from_slice(&row2[..insert]);
    new_row2.push(row1[insert]);
    new_row2.extend_from_slice(&row2[insert..n - 1]);
    let out = Tableau::from_rows(row1.to_vec(), new_row2)?;
    // The collapse is a bijection onto the strict-column tableaux, so
    // this should never fire; it guards against silent drift.
    if collapse_equal_column(&out)? != *s {
        return Err(Error::domain("input is not in the image of the collapse map"));
    }
    Ok(out)
}

/// Whether `t` is prime: every column `j` with
/// `row1[j+1] = row2[j] + 1` (1-based) has a doubled bottom entry in
/// column `j + 1`, so no cut can separate the tableau into two
/// independent blocks.
pub fn is_prime(t: &Tableau) -> bool {
    let row1 = t.row1();
    let row2 = t.row2();
    (0..t.n().saturating_sub(1))
        .all(|p| row1[p + 1] != row2[p] + 1 || t.in_row1(row2[p + 1]))
}

/// The unique maximal decomposition of a tableau into prime blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeDecomposition {
    /// The prime blocks, left to right. Each keeps its original
    /// entries, so block `j` has offset `m_j` equal to one less than
    /// its smallest entry.
    pub blocks: Vec<Tableau>,
    /// 1-based columns after which a cut occurs; empty for prime input.
    pub boundaries: Vec<usize>,
}

impl PrimeDecomposition {
    /// `(n_j, k_j, m_j)` for each block, left to right.
    pub fn block_params(&self) -> Vec<(usize, usize, u32)> {
        self.blocks.iter().map(|b| (b.n(), b.k(), b.m())).collect()
    }
}

/// Splits a tableau (offset 0) into prime blocks, cutting after every
/// 1-based column `i` where `row2[i] + 1 = row1[i+1]` and the bottom
/// entry of column `i + 1` appears only once. Every tableau
/// decomposes; prime input yields a single block.
pub fn prime_decompose(t: &Tableau) -> Result<PrimeDecomposition> {
    if t.m() != 0 {
        return Err(Error::input("prime decomposition requires offset m = 0"));
    }
    let n = t.n();
    let row1 = t.row1();
    let row2 = t.row2();
    let boundaries: Vec<usize> = (1..n)
        .filter(|&i| row1[i] == row2[i - 1] + 1 && !t.in_row1(row2[i]))
        .collect();
    let mut blocks = Vec::with_capacity(boundaries.len() + 1);
    let mut start = 0;
    for &cut in boundaries.iter().chain(std::iter::once(&n)) {
        blocks.push(Tableau::from_rows(
            row1[start..cut].to_vec(),
            row2[start..cut].to_vec(),
        )?);
        start = cut;
    }
    Ok(PrimeDecomposition { blocks, boundaries })
}

/// Concatenates blocks with consecutive entry ranges back into one
/// tableau.
pub fn concat_blocks(blocks: &[Tableau]) -> Result<Tableau> {
    if blocks.is_empty() {
        return Err(Error::input("cannot concatenate zero blocks"));
    }
    let row1: Vec<u32> = blocks.iter().flat_map(|b| b.row1().iter().copied()).collect();
    let row2: Vec<u32> = blocks.iter().flat_map(|b| b.row2().iter().copied()).collect();
    Tableau::from_rows(row1, row2)
}

/// Block transport on a prime tableau: every doubled value `a` leaves
/// row 1 and is replaced by the entry cyclically immediately left of
/// `a` in row 2 (left of the first column wraps to the last). Row 2 is
/// untouched. With no doubled values this is the identity.
pub fn block_transport(t: &Tableau) -> Result<Tableau> {
    if !is_prime(t) {
        return Err(Error::domain("block transport is only defined on prime tableaux"));
    }
    let n = t.n();
    let row2 = t.row2();
    let doubled = t.doubled_values();
    let incoming: Vec<u32> = doubled
        .iter()
        .map(|a| {
            let pos = row2.binary_search(a).expect("doubled values sit in row 2");
            row2[(pos + n - 1) % n]
        })
        .collect();
    let mut row1 = sorted_diff(t.row1(), &doubled);
    row1.extend(incoming);
    row1.sort_unstable();
    Tableau::from_rows(row1, row2.to_vec())
}

/// Inverse of [`block_transport`]. The doubled values of the image are
/// exactly the transported entries; each one's replacement is the
/// entry cyclically immediately to its right in row 2. The candidate
/// is validated by primality and a forward round-trip, so inputs
/// outside the image are rejected.
pub fn block_transport_inv(s: &Tableau) -> Result<Tableau> {
    let n = s.n();
    let row2 = s.row2();
    let doubled = s.doubled_values();
    let outgoing: Vec<u32> = doubled
        .iter()
        .map(|b| {
            let pos = row2.binary_search(b).expect("doubled values sit in row 2");
            row2[(pos + 1) % n]
        })
        .collect();
    let mut row1 = sorted_diff(s.row1(), &doubled);
    row1.extend(outgoing);
    row1.sort_unstable();
    let not_in_image =
        || Error::domain("input is not in the image of the block transport");
    let candidate = Tableau::from_rows(row1, row2.to_vec()).map_err(|_| not_in_image())?;
    if !is_prime(&candidate) || block_transport(&candidate)? != *s {
        return Err(not_in_image());
    }
    Ok(candidate)
}

/// The descent data of the skew tableau obtained by deleting the
/// doubled values from row 1 of a prime tableau.
///
/// `descents0`/`ascents0` are the statistics of the skew tableau under
/// the usual row-membership rule. `d` counts the descents. `x` lists
/// the 1-based ranks of the descent values within the depleted row 1
/// (equivalently, their skew columns minus `k`), and `y` lists the
/// 1-based row-2 columns of the ascent values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SkewProfile {
    pub descents0: Vec<u32>,
    pub ascents0: Vec<u32>,
    pub d: usize,
    pub x: Vec<usize>,
    pub y: Vec<usize>,
}

/// Computes the [`SkewProfile`] of a prime tableau.
pub fn skew_profile(t: &Tableau) -> Result<SkewProfile> {
    if !is_prime(t) {
        return Err(Error::domain("skew profiles are only defined on prime tableaux"));
    }
    let row2 = t.row2();
    let top = sorted_diff(t.row1(), &t.doubled_values());
    let descents0: Vec<u32> = top
        .iter()
        .copied()
        .filter(|&v| row2.binary_search(&(v + 1)).is_ok())
        .collect();
    let ascents0: Vec<u32> = row2
        .iter()
        .copied()
        .filter(|&v| top.binary_search(&(v + 1)).is_ok())
        .collect();
    let x = descents0
        .iter()
        .map(|v| top.binary_search(v).expect("descents lie in the depleted row") + 1)
        .collect();
    let y = ascents0
        .iter()
        .map(|v| row2.binary_search(v).expect("ascents lie in row 2") + 1)
        .collect();
    Ok(SkewProfile {
        d: descents0.len(),
        descents0,
        ascents0,
        x,
        y,
    })
}

/// Major transport: block transport applied to every prime block.
/// Preserves row 2 and sends `amaj` to `maj − (n − k)`.
pub fn major_transport(t: &Tableau) -> Result<Tableau> {
    if t.m() != 0 {
        return Err(Error::input("major transport requires offset m = 0"));
    }
    let decomposition = prime_decompose(t)?;
    let images = decomposition
        .blocks
        .iter()
        .map(block_transport)
        .collect::<Result<Vec<_>>>()?;
    concat_blocks(&images)
}

/// Cut columns (1-based) used to invert the major transport: scanning
/// right of the last equal-entry column, a cut follows every column
/// whose bottom entry is smaller than the next top entry.
pub(crate) fn phi_inv_cuts(s: &Tableau) -> Vec<usize> {
    let n = s.n();
    let row1 = s.row1();
    let row2 = s.row2();
    let last_equal = (1..=n).rev().find(|&j| row1[j - 1] == row2[j - 1]).unwrap_or(0);
    (last_equal.max(1)..n)
        .filter(|&i| row1[i] > row2[i - 1])
        .collect()
}

/// Inverse of [`major_transport`]: recomputes the block boundaries
/// from the image alone, undoes block transport on each block, and
/// reassembles.
pub fn major_transport_inv(s: &Tableau) -> Result<Tableau> {
    if s.m() != 0 {
        return Err(Error::input("major transport requires offset m = 0"));
    }
    let n = s.n();
    let row1 = s.row1();
    let row2 = s.row2();
    let mut blocks = Vec::new();
    let mut start = 0;
    for cut in phi_inv_cuts(s).into_iter().chain(std::iter::once(n)) {
        let block = Tableau::from_rows(row1[start..cut].to_vec(), row2[start..cut].to_vec())
            .map_err(|_| Error::domain("input does not split at the recovered boundaries"))?;
        blocks.push(block_transport_inv(&block)?);
        start = cut;
    }
    concat_blocks(&blocks)
}
