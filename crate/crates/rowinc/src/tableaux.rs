//! Two-row tableaux and their enumeration.
//!
//! The central object is a filling of the 2 x n rectangle whose rows
//! strictly increase left to right and whose columns weakly increase
//! top to bottom, with entries forming the consecutive run
//! `m+1 ..= m+2n-k` in which exactly `k` values appear twice (once in
//! each row). We call these *row-increasing* tableaux. Requiring the
//! columns to increase strictly gives the *increasing* tableaux, and
//! additionally forbidding doubled values (`k = 0`) with offset
//! `m = 0` gives standard Young tableaux of rectangular two-row shape.
//!
//! The module also carries integer partitions, standard Young tableaux
//! of arbitrary shape (needed to cross-check the hook length formula),
//! and parsers for the two wire formats: a two-line text form and a
//! JSON form `{"n":..,"k":..,"m":..,"rows":[[..],[..]]}`.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Validity classes for a two-row filling, ordered from weakest to
/// strongest: every increasing tableau is row-increasing, and every
/// standard tableau is increasing (`k = 0`, `m = 0`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TableauClass {
    Invalid,
    RowIncreasing,
    Increasing,
    Syt,
}

impl fmt::Display for TableauClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            TableauClass::Invalid => "invalid",
            TableauClass::RowIncreasing => "row-increasing",
            TableauClass::Increasing => "increasing",
            TableauClass::Syt => "SYT",
        };
        write!(f, "{name}")
    }
}

/// A validated two-row tableau. `row1` is the top row. Construction
/// always checks the full invariant set, so a `Tableau` in hand is
/// valid by construction.
///
/// The derived ordering compares `(row1, row2)` lexicographically,
/// which is exactly the canonical enumeration order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    row1: Vec<u32>,
    row2: Vec<u32>,
    m: u32,
    k: usize,
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tableau({:?} / {:?})", self.row1, self.row2)
    }
}

impl fmt::Display for Tableau {
    /// The two-line text form, identical to [`Tableau::to_text`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

/// Wire shape of a tableau. `n`, `k`, and `m` are redundant with the
/// rows and are cross-checked on input.
#[derive(Serialize, Deserialize)]
struct TableauRepr {
    n: usize,
    k: usize,
    m: u32,
    rows: [Vec<u32>; 2],
}

/// Checks every structural rule and returns `(m, k)` on success. The
/// diagnostic always names the violated rule.
fn validate_rows(row1: &[u32], row2: &[u32]) -> Result<(u32, usize)> {
    if row1.len() != row2.len() {
        return Err(Error::input(format!(
            "rows have unequal lengths {} and {}",
            row1.len(),
            row2.len()
        )));
    }
    let n = row1.len();
    if n == 0 {
        return Err(Error::input("tableau must have at least one column"));
    }
    for (name, row) in [("row 1", row1), ("row 2", row2)] {
        if row.contains(&0) {
            return Err(Error::input(format!("{name} contains 0; entries must be positive")));
        }
        for j in 1..n {
            if row[j - 1] >= row[j] {
                return Err(Error::input(format!(
                    "{name} is not strictly increasing at column {}",
                    j + 1
                )));
            }
        }
    }
    for j in 0..n {
        if row1[j] > row2[j] {
            return Err(Error::input(format!(
                "column {} decreases from row 1 to row 2 ({} > {})",
                j + 1,
                row1[j],
                row2[j]
            )));
        }
    }
    // Both rows are sorted, so the extremes sit at the corners.
    let lo = row1[0];
    let hi = row2[n - 1];
    for v in lo..=hi {
        if row1.binary_search(&v).is_err() && row2.binary_search(&v).is_err() {
            return Err(Error::input(format!(
                "entry {v} is missing; entries must form the consecutive run {lo}..{hi}"
            )));
        }
    }
    let k = 2 * n - (hi - lo + 1) as usize;
    Ok((lo - 1, k))
}

impl Tableau {
    /// Builds a tableau from its rows and the declared offset `m`,
    /// rejecting any invariant violation with a rule-naming diagnostic.
    pub fn new(row1: Vec<u32>, row2: Vec<u32>, m: u32) -> Result<Self> {
        let (inferred_m, k) = validate_rows(&row1, &row2)?;
        if inferred_m != m {
            return Err(Error::input(format!(
                "smallest entry {} does not match offset m = {m} (expected m = {inferred_m})",
                inferred_m + 1
            )));
        }
        Ok(Tableau { row1, row2, m, k })
    }

    /// Builds a tableau from its rows, inferring the offset from the
    /// smallest entry.
    pub fn from_rows(row1: Vec<u32>, row2: Vec<u32>) -> Result<Self> {
        let (m, k) = validate_rows(&row1, &row2)?;
        Ok(Tableau { row1, row2, m, k })
    }

    /// Internal constructor for callers that have already established
    /// validity (enumeration, bijections on proven-valid output).
    pub(crate) fn new_unchecked(row1: Vec<u32>, row2: Vec<u32>, m: u32, k: usize) -> Self {
        debug_assert_eq!(validate_rows(&row1, &row2).ok(), Some((m, k)));
        Tableau { row1, row2, m, k }
    }

    /// Number of columns.
    pub fn n(&self) -> usize {
        self.row1.len()
    }

    /// Number of doubled values.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Entry offset: entries run over `m+1 ..= m+2n-k`.
    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn row1(&self) -> &[u32] {
        &self.row1
    }

    pub fn row2(&self) -> &[u32] {
        &self.row2
    }

    /// Whether `v` appears in the top row.
    pub fn in_row1(&self, v: u32) -> bool {
        self.row1.binary_search(&v).is_ok()
    }

    /// Whether `v` appears in the bottom row.
    pub fn in_row2(&self, v: u32) -> bool {
        self.row2.binary_search(&v).is_ok()
    }

    /// The values appearing in both rows, ascending. Length `k`.
    pub fn doubled_values(&self) -> Vec<u32> {
        self.row1
            .iter()
            .copied()
            .filter(|&v| self.in_row2(v))
            .collect()
    }

    /// Leftmost column with equal entries, 0-indexed. `None` exactly
    /// when the tableau is increasing (strict columns).
    pub fn first_equal_column(&self) -> Option<usize> {
        (0..self.n()).find(|&j| self.row1[j] == self.row2[j])
    }

    /// Two-line text form: each row as space-separated integers.
    pub fn to_text(&self) -> String {
        let line = |row: &[u32]| {
            row.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        format!("{}\n{}", line(&self.row1), line(&self.row2))
    }

    /// Parses the two-line text form; the offset is inferred from the
    /// smallest entry.
    pub fn from_text(s: &str) -> Result<Self> {
        let lines: Vec<&str> = s.lines().filter(|l| !l.trim().is_empty()).collect();
        if lines.len() != 2 {
            return Err(Error::input(format!(
                "tableau text form must have exactly two lines, got {}",
                lines.len()
            )));
        }
        let parse_row = |which: &str, line: &str| -> Result<Vec<u32>> {
            line.split_whitespace()
                .map(|tok| {
                    tok.parse::<u32>().map_err(|_| {
                        Error::input(format!("{which}: `{tok}` is not a positive integer"))
                    })
                })
                .collect()
        };
        Tableau::from_rows(parse_row("row 1", lines[0])?, parse_row("row 2", lines[1])?)
    }

    /// JSON form `{"n":..,"k":..,"m":..,"rows":[[..],[..]]}`.
    pub fn to_json(&self) -> String {
        let repr = TableauRepr {
            n: self.n(),
            k: self.k,
            m: self.m,
            rows: [self.row1.clone(), self.row2.clone()],
        };
        serde_json::to_string(&repr).expect("tableau serialization cannot fail")
    }

    /// Parses the JSON form, cross-checking the redundant `n`, `k`,
    /// and `m` fields against the rows.
    pub fn from_json(s: &str) -> Result<Self> {
        let repr: TableauRepr =
            serde_json::from_str(s).map_err(|e| Error::input(format!("invalid tableau JSON: {e}")))?;
        let [row1, row2] = repr.rows;
        if row1.len() != repr.n || row2.len() != repr.n {
            return Err(Error::input(format!(
                "field n = {} does not match row lengths {} and {}",
                repr.n,
                row1.len(),
                row2.len()
            )));
        }
        let t = Tableau::new(row1, row2, repr.m)?;
        if t.k != repr.k {
            return Err(Error::input(format!(
                "field k = {} does not match the {} doubled entries",
                repr.k, t.k
            )));
        }
        Ok(t)
    }
}

/// Classifies a two-row filling into the strongest class whose
/// invariants hold. Rows of unequal length (or no columns at all) are
/// an input error rather than a class; every other violation yields
/// `Invalid`.
///
/// Classes are structural: `Increasing` means strictly increasing
/// columns at any offset, while `Syt` additionally requires `k = 0`
/// and `m = 0` so that the entries are exactly `1..=2n`, each once.
pub fn classify(row1: &[u32], row2: &[u32], m: u32) -> Result<TableauClass> {
    if row1.len() != row2.len() || row1.is_empty() {
        validate_rows(row1, row2)?;
    }
    let (inferred_m, k) = match validate_rows(row1, row2) {
        Ok(pair) => pair,
        Err(_) => return Ok(TableauClass::Invalid),
    };
    if inferred_m != m {
        return Ok(TableauClass::Invalid);
    }
    let strict_columns = row1.iter().zip(row2).all(|(a, b)| a < b);
    Ok(if !strict_columns {
        TableauClass::RowIncreasing
    } else if k == 0 && m == 0 {
        TableauClass::Syt
    } else {
        TableauClass::Increasing
    })
}

/// An integer partition: a weakly decreasing sequence of positive
/// parts. The empty partition is allowed (size 0).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{:?}", self.parts)
    }
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        for i in 0..parts.len() {
            if parts[i] == 0 {
                return Err(Error::input("partition parts must be positive"));
            }
            if i > 0 && parts[i - 1] < parts[i] {
                return Err(Error::input(format!(
                    "partition parts must be weakly decreasing ({} < {} at position {})",
                    parts[i - 1],
                    parts[i],
                    i + 1
                )));
            }
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Total number of cells.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Conjugate partition (reflected diagram): part `j` counts the
    /// rows with more than `j` cells.
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (0..cols)
            .map(|j| self.parts.iter().filter(|&&len| len > j).count())
            .collect();
        Partition { parts }
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses comma-separated parts, e.g. `3,3,1,1`.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Partition::new(Vec::new());
        }
        let parts = trimmed
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::input(format!("`{tok}` is not a valid partition part")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self
            .parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",");
        write!(f, "{s}")
    }
}

/// All partitions of `n`, largest first part first (the usual
/// reverse-lexicographic listing). `partitions_of(0)` is the empty
/// partition alone.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n.max(1), &mut Vec::new(), &mut out);
    out
}

/// A standard Young tableau of arbitrary partition shape: entries
/// `1..=size`, each exactly once, increasing along rows and down
/// columns. Produced by [`enumerate_syt`].
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GeneralTableau {
    shape: Partition,
    rows: Vec<Vec<u32>>,
}

impl GeneralTableau {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    /// Index of the row containing `v`, if present.
    pub fn row_index_of(&self, v: u32) -> Option<usize> {
        self.rows.iter().position(|row| row.binary_search(&v).is_ok())
    }
}

/// Enumerates every standard Young tableau of the given shape, exactly
/// once, by placing `1, 2, ...` in turn into each row that can accept
/// the next entry (top rows tried first). The order is therefore
/// lexicographic in the sequence of chosen row indices. The empty
/// shape yields the single empty tableau.
pub fn enumerate_syt(shape: &Partition) -> impl Iterator<Item = GeneralTableau> {
    fn rec(
        shape: &Partition,
        fill: &mut Vec<usize>,
        rows: &mut Vec<Vec<u32>>,
        next: u32,
        total: usize,
        out: &mut Vec<GeneralTableau>,
    ) {
        if (next as usize) > total {
            out.push(GeneralTableau {
                shape: shape.clone(),
                rows: rows.clone(),
            });
            return;
        }
        for i in 0..shape.parts().len() {
            let can_extend = fill[i] < shape.parts()[i] && (i == 0 || fill[i - 1] > fill[i]);
            if can_extend {
                fill[i] += 1;
                rows[i].push(next);
                rec(shape, fill, rows, next + 1, total, out);
                rows[i].pop();
                fill[i] -= 1;
            }
        }
    }
    let mut out = Vec::new();
    let total = shape.size();
    let mut fill = vec![0; shape.parts().len()];
    let mut rows = vec![Vec::new(); shape.parts().len()];
    rec(shape, &mut fill, &mut rows, 1, total, &mut out);
    out.into_iter()
}

/// Streaming enumerator over a two-row family, yielding tableaux in
/// ascending lexicographic order on the concatenation `(row1, row2)`.
/// Running it twice yields identical sequences.
pub struct TwoRowFamily {
    n: usize,
    k: usize,
    m: u32,
    strict: bool,
    /// Total number of distinct values, `2n - k`.
    value_count: usize,
    /// Current row-1 selection as 0-based indices into the value run;
    /// index 0 is pinned to 0 because the smallest value must sit in
    /// the top-left cell. `None` before the first selection.
    sel: Option<Vec<usize>>,
    done: bool,
    buf: VecDeque<Tableau>,
}

impl TwoRowFamily {
    fn empty() -> Self {
        TwoRowFamily {
            n: 0,
            k: 0,
            m: 0,
            strict: false,
            value_count: 0,
            sel: None,
            done: true,
            buf: VecDeque::new(),
        }
    }

    fn new(n: usize, k: usize, m: u32, strict: bool) -> Self {
        TwoRowFamily {
            n,
            k,
            m,
            strict,
            value_count: 2 * n - k,
            sel: None,
            done: false,
            buf: VecDeque::new(),
        }
    }

    fn value(&self, idx: usize) -> u32 {
        self.m + 1 + idx as u32
    }

    /// Moves to the next row-1 candidate in lexicographic order;
    /// false when exhausted.
    fn advance_row1(&mut self) -> bool {
        let n = self.n;
        let total = self.value_count;
        match &mut self.sel {
            None => {
                self.sel = Some((0..n).collect());
                true
            }
            Some(sel) => {
                // Standard combination successor on positions 1..n
                // (position 0 stays pinned at the smallest value).
                for i in (1..n).rev() {
                    if sel[i] < total - n + i {
                        sel[i] += 1;
                        for j in i + 1..n {
                            sel[j] = sel[j - 1] + 1;
                        }
                        return true;
                    }
                }
                false
            }
        }
    }

    fn columns_ok(&self, row1: &[u32], row2: &[u32]) -> bool {
        row1
            .iter()
            .zip(row2)
            .all(|(a, b)| if self.strict { a < b } else { a <= b })
    }

    /// Fills the buffer with every valid completion of the current
    /// row-1 selection, sorted by row 2.
    fn fill_completions(&mut self) {
        let sel = self.sel.as_ref().expect("selection present");
        let row1: Vec<u32> = sel.iter().map(|&i| self.value(i)).collect();
        // Values not chosen for row 1 are forced into row 2; the
        // remaining k slots double values chosen from row 1.
        let mut forced = Vec::with_capacity(self.n - self.k);
        let mut cursor = 0;
        for idx in 0..self.value_count {
            if cursor < sel.len() && sel[cursor] == idx {
                cursor += 1;
            } else {
                forced.push(self.value(idx));
            }
        }
        // Quick feasibility test: the pointwise-largest possible row 2
        // doubles the k largest row-1 values. If even that violates
        // the column condition, no completion exists.
        let best = merge_sorted(&forced, &row1[self.n - self.k..]);
        if !self.columns_ok(&row1, &best) {
            return;
        }
        let mut completions: Vec<Vec<u32>> = Vec::new();
        for_each_combination(self.n, self.k, |choice| {
            let doubled: Vec<u32> = choice.iter().map(|&i| row1[i]).collect();
            let row2 = merge_sorted(&forced, &doubled);
            if self.columns_ok(&row1, &row2) {
                completions.push(row2);
            }
        });
        completions.sort_unstable();
        for row2 in completions {
            self.buf
                .push_back(Tableau::new_unchecked(row1.clone(), row2, self.m, self.k));
        }
    }
}

impl Iterator for TwoRowFamily {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        loop {
            if let Some(t) = self.buf.pop_front() {
                return Some(t);
            }
            if self.done {
                return None;
            }
            if self.advance_row1() {
                self.fill_completions();
            } else {
                self.done = true;
            }
        }
    }
}

/// Merges two sorted, mutually disjoint slices.
fn merge_sorted(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] < b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Calls `visit` with every k-subset of `0..n` as ascending indices,
/// in lexicographic order.
fn for_each_combination(n: usize, k: usize, mut visit: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        visit(&idx);
        let mut i = k;
        while i > 0 {
            i -= 1;
            if idx[i] < n - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
            if i == 0 {
                return;
            }
        }
        if k == 0 {
            return;
        }
    }
}

/// Enumerates the row-increasing tableaux with `n` columns, `k`
/// doubled values, and offset `m`, in ascending lexicographic order on
/// `(row1, row2)`. Out-of-range `k` gives an empty stream; `n = 0` is
/// an input error.
pub fn enumerate_rinc(n: usize, k: i64, m: u32) -> Result<TwoRowFamily> {
    if n == 0 {
        return Err(Error::input("n must be at least 1"));
    }
    if k < 0 || k > n as i64 {
        return Ok(TwoRowFamily::empty());
    }
    let value_count = 2 * n as u64 - k as u64;
    if m as u64 + value_count > u32::MAX as u64 {
        return Err(Error::input("offset m is too large for 32-bit entries"));
    }
    Ok(TwoRowFamily::new(n, k as usize, m, false))
}

/// Enumerates the increasing tableaux (strict columns, offset 0) with
/// `n` columns and `k` doubled values, in the same canonical order.
/// Out-of-range `k` (in particular `k = n`) gives an empty stream.
pub fn enumerate_inc(n: usize, k: i64) -> Result<TwoRowFamily> {
    if n == 0 {
        return Err(Error::input("n must be at least 1"));
    }
    if k < 0 || k >= n as i64 {
        return Ok(TwoRowFamily::empty());
    }
    Ok(TwoRowFamily::new(n, k as usize, 0, true))
}
