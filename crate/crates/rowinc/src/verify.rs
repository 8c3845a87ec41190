//! Machine verification of every identity and map contract in the
//! crate, by brute force against the closed forms.
//!
//! Each check sweeps a parameter grid, counts the cases it compared,
//! and reports either a pass or the first counterexample it found.
//! Counterexample inputs are rendered in the tableau/word text
//! formats so they can be replayed through the command-line `stats`
//! and `map` commands. Checks are independent: a failure in one never
//! prevents the others from running.

use std::fmt;
use std::time::Instant;

use serde::Serialize;

use crate::bijections::{
    block_transport, block_transport_inv, collapse_equal_column, expand_equal_column, is_prime,
    major_transport, major_transport_inv, skew_profile,
};
use crate::error::Result;
use crate::qpoly::{
    count_inc, count_rinc, inc_maj_gf, q_hook_maj_sum, rinc_amaj_gf, rinc_maj_gf,
    rinc_maj_gf_recurrence, syt_amaj_gf, QPoly,
};
use crate::schroeder::{enumerate_words, tableau_to_word, word_maj, word_maj_gf, word_to_tableau};
use crate::stats::{amaj, ascent_set, descent_set, maj, syt_maj};
use crate::tableaux::{
    enumerate_inc, enumerate_rinc, enumerate_syt, partitions_of, Partition, Tableau,
};

/// The first failing case of a check: what was fed in, what the
/// closed form or contract demanded, and what actually came out.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

/// Outcome of one check over one parameter range.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub check: String,
    pub range: String,
    pub passed: bool,
    pub cases: u64,
    pub counterexample: Option<Counterexample>,
    pub wall_time_ms: u64,
}

impl VerificationReport {
    /// One human-readable paragraph; multi-line when failing.
    pub fn to_text(&self) -> String {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        let mut out = format!(
            "{}: {} ({}; {} cases, {} ms)",
            self.check, verdict, self.range, self.cases, self.wall_time_ms
        );
        if let Some(ce) = &self.counterexample {
            out.push_str(&format!(
                "\n  input:\n{}\n  expected: {}\n  actual:   {}",
                indent(&ce.input, "    "),
                ce.expected,
                ce.actual
            ));
        }
        out
    }

    pub fn csv_header() -> &'static str {
        "check,range,passed,cases,input,expected,actual,wall_time_ms"
    }

    /// One CSV row; newlines inside fields are escaped as `\n`.
    pub fn to_csv_row(&self) -> String {
        let (input, expected, actual) = match &self.counterexample {
            Some(ce) => (ce.input.as_str(), ce.expected.as_str(), ce.actual.as_str()),
            None => ("", "", ""),
        };
        [
            self.check.as_str(),
            self.range.as_str(),
            if self.passed { "true" } else { "false" },
            &self.cases.to_string(),
            input,
            expected,
            actual,
            &self.wall_time_ms.to_string(),
        ]
        .map(csv_field)
        .join(",")
    }
}

fn indent(text: &str, prefix: &str) -> String {
    text.lines()
        .map(|line| format!("{prefix}{line}"))
        .collect::<Vec<_>>()
        .join("\n")
}

fn csv_field(raw: &str) -> String {
    let escaped = raw.replace('\n', "\\n");
    if escaped.contains([',', '"']) {
        format!("\"{}\"", escaped.replace('"', "\"\""))
    } else {
        escaped
    }
}

/// Accumulates case counts and the first counterexample of a check.
#[derive(Default)]
struct Probe {
    cases: u64,
    counterexample: Option<Counterexample>,
}

impl Probe {
    fn ok(&self) -> bool {
        self.counterexample.is_none()
    }

    /// Compares two displayable values, recording the first mismatch.
    fn eq<T: PartialEq + fmt::Display>(
        &mut self,
        expected: T,
        actual: T,
        input: impl FnOnce() -> String,
    ) {
        if !self.ok() {
            return;
        }
        self.cases += 1;
        if expected != actual {
            self.counterexample = Some(Counterexample {
                input: input(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }

    /// Records a bare condition, described by what was expected.
    fn claim(&mut self, holds: bool, expectation: &str, input: impl FnOnce() -> String) {
        if !self.ok() {
            return;
        }
        self.cases += 1;
        if !holds {
            self.counterexample = Some(Counterexample {
                input: input(),
                expected: expectation.to_string(),
                actual: "violated".to_string(),
            });
        }
    }
}

fn run(check: &str, range: String, body: impl FnOnce(&mut Probe)) -> VerificationReport {
    let start = Instant::now();
    let mut probe = Probe::default();
    body(&mut probe);
    VerificationReport {
        check: check.to_string(),
        range,
        passed: probe.ok(),
        cases: probe.cases,
        counterexample: probe.counterexample,
        wall_time_ms: start.elapsed().as_millis() as u64,
    }
}

/// `Σ q^stat` over a family of tableaux.
fn stat_gf(tableaux: impl Iterator<Item = Tableau>, stat: impl Fn(&Tableau) -> u64) -> QPoly {
    let mut acc = QPoly::zero();
    for t in tableaux {
        acc = acc
            .add(&QPoly::monomial(1, stat(&t) as usize))
            .expect("family counts fit in the coefficient type");
    }
    acc
}

fn family(n: usize, k: i64, m: u32) -> impl Iterator<Item = Tableau> {
    enumerate_rinc(n, k, m).expect("n >= 1 in every check grid")
}

/// The major index distribution over every row-increasing family
/// matches its closed form.
pub fn check_maj_theorem(n_max: usize) -> VerificationReport {
    run("maj", grid_range(n_max, "0 <= k <= n"), |probe| {
        for n in 1..=n_max {
            for k in 0..=n as i64 {
                let brute = stat_gf(family(n, k, 0), maj);
                let formula = rinc_maj_gf(n as i64, k).expect("in-range parameters");
                probe.eq(&formula, &brute, || format!("n={n} k={k}"));
            }
        }
    })
}

/// The amajor index distribution matches its closed form, which at
/// `k = 0` collapses to the no-shift Catalan form.
pub fn check_amaj_theorem(n_max: usize) -> VerificationReport {
    run("amaj", grid_range(n_max, "0 <= k <= n"), |probe| {
        for n in 1..=n_max {
            for k in 0..=n as i64 {
                let brute = stat_gf(family(n, k, 0), amaj);
                let formula = rinc_amaj_gf(n as i64, k).expect("in-range parameters");
                probe.eq(&formula, &brute, || format!("n={n} k={k}"));
            }
            let catalan_form = syt_amaj_gf(n as i64).expect("in-range parameters");
            let at_zero = rinc_amaj_gf(n as i64, 0).expect("in-range parameters");
            probe.eq(&catalan_form, &at_zero, || format!("n={n} k=0 (no-shift form)"));
        }
    })
}

/// The strict-column major index distribution matches its closed
/// form, which in turn matches the q-hook formula on the associated
/// three-row hook shape; the q-hook formula itself is checked against
/// brute-force standard tableaux on every shape with at most 8 cells.
pub fn check_sq_theorem(n_max: usize) -> VerificationReport {
    run(
        "sq",
        format!("1 <= n <= {n_max}, 0 <= k < n; all shapes of size <= 8"),
        |probe| {
            for n in 1..=n_max {
                for k in 0..n as i64 {
                    let brute = stat_gf(
                        enumerate_inc(n, k).expect("n >= 1 in every check grid"),
                        maj,
                    );
                    let formula = inc_maj_gf(n as i64, k).expect("in-range parameters");
                    probe.eq(&formula, &brute, || format!("n={n} k={k}"));

                    let mut parts = vec![n - k as usize, n - k as usize];
                    parts.extend(std::iter::repeat(1).take(k as usize));
                    let shape = Partition::new(parts).expect("valid hook shape");
                    let hook = q_hook_maj_sum(&shape).expect("hook formula divides exactly");
                    probe.eq(&formula, &hook, || format!("n={n} k={k} (shape {shape})"));
                }
            }
            for size in 0..=8 {
                for shape in partitions_of(size) {
                    let brute = enumerate_syt(&shape).fold(QPoly::zero(), |acc, t| {
                        acc.add(&QPoly::monomial(1, syt_maj(&t) as usize))
                            .expect("counts fit")
                    });
                    let hook = q_hook_maj_sum(&shape).expect("hook formula divides exactly");
                    probe.eq(&hook, &brute, || format!("shape {shape}"));
                }
            }
        },
    )
}

/// The four-term recurrence, the two-term counting identity, and the
/// maj/amaj shift identity all hold at the level of closed forms.
pub fn check_recurrences(n_max: usize) -> VerificationReport {
    run("recurrences", grid_range(n_max, "0 <= k <= n"), |probe| {
        for n in 2..=n_max as i64 {
            for k in 1..n {
                let direct = rinc_maj_gf(n, k).expect("in-range parameters");
                let recursive = rinc_maj_gf_recurrence(n, k).expect("in-range parameters");
                probe.eq(&direct, &recursive, || format!("n={n} k={k} (recurrence)"));
            }
        }
        for n in 1..=n_max as i64 {
            for k in 0..=n {
                let r = count_rinc(n, k).expect("in-range parameters");
                let s_sum = count_inc(n, k).expect("in-range parameters")
                    + count_inc(n, k - 1).expect("in-range parameters");
                probe.eq(r, s_sum, || format!("n={n} k={k} (counting identity)"));

                let shifted = rinc_amaj_gf(n, k)
                    .expect("in-range parameters")
                    .times_q_pow((n - k) as usize);
                let direct = rinc_maj_gf(n, k).expect("in-range parameters");
                probe.eq(&direct, &shifted, || format!("n={n} k={k} (maj/amaj shift)"));
            }
        }
    })
}

/// Every map contract: the equal-column collapse is a bijection onto
/// the strict-column family, block transport round-trips on primes
/// with the documented statistic shift and structural clauses, and
/// major transport is a row-2-preserving shifting bijection.
pub fn check_bijections(n_max: usize) -> VerificationReport {
    run(
        "bijections",
        format!("1 <= n <= {n_max}, 0 <= k <= n, prime offsets m in {{0,1,4}}"),
        |probe| {
            check_collapse_bijection(probe, n_max);
            check_block_transport(probe, n_max);
            check_major_transport(probe, n_max);
        },
    )
}

fn check_collapse_bijection(probe: &mut Probe, n_max: usize) {
    for n in 1..=n_max {
        for k in 1..=n as i64 {
            if !probe.ok() {
                return;
            }
            let mut images = Vec::new();
            for t in family(n, k, 0) {
                if t.first_equal_column().is_none() {
                    continue;
                }
                let image = collapse_equal_column(&t).expect("equal column present");
                let back = expand_equal_column(&image).expect("image is expandable");
                probe.eq(&t, &back, || t.to_text());
                images.push(image);
            }
            images.sort();
            let strict: Vec<Tableau> =
                enumerate_inc(n, k - 1).expect("n >= 1").collect();
            probe.claim(
                images == strict,
                "collapse images equal the strict-column family",
                || format!("n={n} k={k}"),
            );
        }
    }
}

fn check_block_transport(probe: &mut Probe, n_max: usize) {
    for n in 1..=n_max {
        for k in 0..=n as i64 {
            for m in [0u32, 1, 4] {
                if !probe.ok() {
                    return;
                }
                for t in family(n, k, m).filter(is_prime) {
                    let image = block_transport(&t).expect("prime input");
                    probe.claim(
                        image.row2() == t.row2(),
                        "block transport preserves row 2",
                        || t.to_text(),
                    );
                    let back = block_transport_inv(&image).expect("image inverts");
                    probe.eq(&t, &back, || t.to_text());

                    let shift = if t.row1()[0] == t.row2()[0] {
                        n as u64 - k as u64
                    } else {
                        m as u64 + n as u64 - k as u64
                    };
                    probe.eq(amaj(&t) + shift, maj(&image), || t.to_text());

                    // Structural clauses: the bottom-left entry is
                    // doubled exactly when the image's last column has
                    // equal entries; otherwise the image's row 1 stays
                    // weakly left of row 2's previous column.
                    let doubled_corner = t.in_row1(t.row2()[0]);
                    let last_equal = image.row1()[n - 1] == image.row2()[n - 1];
                    probe.eq(doubled_corner, last_equal, || t.to_text());
                    if !doubled_corner {
                        probe.claim(
                            (1..n).all(|i| image.row1()[i] <= image.row2()[i - 1]),
                            "image row 1 interlaces row 2",
                            || t.to_text(),
                        );
                    }

                    // Descent transfer and the interleaving pattern.
                    let profile = skew_profile(&t).expect("prime input");
                    let d0: std::collections::BTreeSet<u32> =
                        profile.descents0.iter().copied().collect();
                    let a0: std::collections::BTreeSet<u32> =
                        profile.ascents0.iter().copied().collect();
                    let created: Vec<u32> =
                        descent_set(&image).difference(&d0).copied().collect();
                    let predicted: Vec<u32> =
                        ascent_set(&t).difference(&a0).copied().collect();
                    probe.claim(
                        created == predicted,
                        "transferred descents equal transferred ascents",
                        || t.to_text(),
                    );

                    if t.row1()[0] != t.row2()[0] && profile.d >= 1 {
                        let x = &profile.x;
                        let y = &profile.y;
                        let interleaved = y.len() == profile.d - 1
                            && x[profile.d - 1] == n - k as usize
                            && profile.descents0.iter().enumerate().all(|(i, &v)| {
                                let offset = if i == 0 { 0 } else { y[i - 1] };
                                v as usize == m as usize + x[i] + offset
                            })
                            && profile.ascents0.iter().enumerate().all(|(i, &v)| {
                                v as usize == m as usize + x[i] + y[i]
                            });
                        probe.claim(interleaved, "descents and ascents interleave", || {
                            t.to_text()
                        });
                    }
                }
            }
        }
    }
}

fn check_major_transport(probe: &mut Probe, n_max: usize) {
    for n in 1..=n_max {
        for k in 0..=n as i64 {
            if !probe.ok() {
                return;
            }
            let tableaux: Vec<Tableau> = family(n, k, 0).collect();
            let mut images = Vec::new();
            for t in &tableaux {
                let image = major_transport(t).expect("valid input");
                probe.claim(
                    image.row2() == t.row2(),
                    "major transport preserves row 2",
                    || t.to_text(),
                );
                probe.eq(amaj(t) + n as u64 - k as u64, maj(&image), || t.to_text());
                let back = major_transport_inv(&image).expect("image inverts");
                probe.eq(t, &back, || t.to_text());
                images.push(image);
            }
            images.sort();
            probe.claim(
                images == tableaux,
                "major transport permutes the family",
                || format!("n={n} k={k}"),
            );
        }
    }
}

/// The word encoding is a bijection matching the enumerated words,
/// the word major index matches its closed form, the shift identities
/// tie the word form to the tableau forms, and small words correspond
/// to strict-column tableaux.
pub fn check_schroeder(n_max: usize) -> VerificationReport {
    run("schroeder", grid_range(n_max, "0 <= k <= n"), |probe| {
        let golden: crate::schroeder::SchroederWord =
            "00100021222022".parse().expect("golden word is valid");
        probe.eq(21, word_maj(&golden), || golden.to_string());

        for n in 1..=n_max {
            for k in 0..=n as i64 {
                if !probe.ok() {
                    return;
                }
                let words = enumerate_words(n, k).expect("n >= 1");

                let mut images = Vec::new();
                for t in family(n, k, 0) {
                    let w = tableau_to_word(&t).expect("offset 0");
                    let back = word_to_tableau(&w).expect("nonempty word");
                    probe.eq(&t, &back, || w.to_string());
                    images.push(w);
                }
                images.sort();
                probe.claim(
                    images == words,
                    "tableau words equal the enumerated words",
                    || format!("n={n} k={k}"),
                );

                let brute = words.iter().fold(QPoly::zero(), |acc, w| {
                    acc.add(&QPoly::monomial(1, word_maj(w) as usize))
                        .expect("counts fit")
                });
                let formula = word_maj_gf(n as i64, k).expect("in-range parameters");
                probe.eq(&formula, &brute, || format!("n={n} k={k} (word maj gf)"));

                let prefactor = (k * (k - 1) / 2) as usize;
                let amaj_form = rinc_amaj_gf(n as i64, k).expect("in-range parameters");
                probe.eq(&amaj_form, &formula.times_q_pow(prefactor), || {
                    format!("n={n} k={k} (amaj prefactor)")
                });
                let maj_form = rinc_maj_gf(n as i64, k).expect("in-range parameters");
                probe.eq(
                    &maj_form,
                    &amaj_form.times_q_pow(n - k as usize),
                    || format!("n={n} k={k} (maj prefactor)"),
                );

                let mut small_images: Vec<_> = enumerate_inc(n, k)
                    .expect("n >= 1")
                    .map(|t| tableau_to_word(&t).expect("offset 0"))
                    .collect();
                small_images.sort();
                let small_words: Vec<_> =
                    words.iter().filter(|w| w.is_small()).cloned().collect();
                probe.claim(
                    small_images == small_words,
                    "strict-column tableaux give exactly the small words",
                    || format!("n={n} k={k}"),
                );
            }
        }
    })
}

fn grid_range(n_max: usize, k_range: &str) -> String {
    format!("1 <= n <= {n_max}, {k_range}")
}

/// Which check to run; `All` fans out to every one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    All,
    Maj,
    Amaj,
    Sq,
    Recurrences,
    Bijections,
    Schroeder,
}

impl CheckKind {
    /// Exhaustive tableau sweeps default to 6; formula-level grids
    /// are cheap and default to 8.
    pub fn default_n_max(self) -> usize {
        match self {
            CheckKind::Recurrences | CheckKind::Schroeder => 8,
            _ => 6,
        }
    }
}

impl std::str::FromStr for CheckKind {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "all" => Ok(CheckKind::All),
            "maj" => Ok(CheckKind::Maj),
            "amaj" => Ok(CheckKind::Amaj),
            "sq" => Ok(CheckKind::Sq),
            "recurrences" => Ok(CheckKind::Recurrences),
            "bijections" => Ok(CheckKind::Bijections),
            "schroeder" => Ok(CheckKind::Schroeder),
            other => Err(crate::error::Error::input(format!(
                "unknown check `{other}` (expected all, maj, amaj, sq, recurrences, bijections, or schroeder)"
            ))),
        }
    }
}

/// Runs the selected check(s). `n_max = None` uses each check's
/// default range. Reports come back in a fixed order regardless of
/// outcomes.
pub fn run_checks(kind: CheckKind, n_max: Option<usize>) -> Vec<VerificationReport> {
    let kinds = match kind {
        CheckKind::All => vec![
            CheckKind::Maj,
            CheckKind::Amaj,
            CheckKind::Sq,
            CheckKind::Recurrences,
            CheckKind::Bijections,
            CheckKind::Schroeder,
        ],
        single => vec![single],
    };
    kinds
        .into_iter()
        .map(|k| {
            let bound = n_max.unwrap_or_else(|| k.default_n_max());
            match k {
                CheckKind::Maj => check_maj_theorem(bound),
                CheckKind::Amaj => check_amaj_theorem(bound),
                CheckKind::Sq => check_sq_theorem(bound),
                CheckKind::Recurrences => check_recurrences(bound),
                CheckKind::Bijections => check_bijections(bound),
                CheckKind::Schroeder => check_schroeder(bound),
                CheckKind::All => unreachable!("All fans out above"),
            }
        })
        .collect()
}
