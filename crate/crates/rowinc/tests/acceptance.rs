//! End-to-end acceptance gate: one test per shipping criterion, each
//! printing a single `criterion N (...): PASS/FAIL` line (visible with
//! `--nocapture`, or automatically on failure) before asserting.

use rowinc::bijections::{
    block_transport, collapse_equal_column, expand_equal_column, is_prime, major_transport,
    major_transport_inv,
};
use rowinc::qpoly::{
    count_inc, count_rinc, rinc_amaj_gf, rinc_maj_gf, QPoly,
};
use rowinc::schroeder::{enumerate_words, tableau_to_word, word_maj, word_maj_gf, word_to_tableau};
use rowinc::stats::{amaj, maj};
use rowinc::tableaux::{enumerate_inc, enumerate_rinc};
use rowinc::verify::{
    check_amaj_theorem, check_maj_theorem, check_recurrences, check_sq_theorem,
};
use rowinc::Tableau;

fn verdict(n: usize, label: &str, ok: bool) {
    println!(
        "criterion {n} ({label}): {}",
        if ok { "PASS" } else { "FAIL" }
    );
}

#[test]
fn criterion_1_row_increasing_maj_distribution() {
    let report = check_maj_theorem(6);
    verdict(1, "maj distribution matches its closed form", report.passed);
    assert!(report.passed, "{}", report.to_text());
}

#[test]
fn criterion_2_row_increasing_amaj_distribution() {
    let report = check_amaj_theorem(6);
    verdict(
        2,
        "amaj distribution matches its closed form, no-shift form at k=0",
        report.passed,
    );
    assert!(report.passed, "{}", report.to_text());
}

#[test]
fn criterion_3_strict_column_maj_and_hook_formula() {
    let report = check_sq_theorem(6);
    verdict(
        3,
        "strict-column maj matches closed form and q-hook formula",
        report.passed,
    );
    assert!(report.passed, "{}", report.to_text());
}

#[test]
fn criterion_4_recurrence_counting_and_collapse_bijection() {
    let report = check_recurrences(8);
    let mut ok = report.passed;
    let mut detail = String::new();
    if !ok {
        detail = report.to_text();
    }

    // The equal-column collapse is a bijection onto the strict-column
    // family one level down, exhaustively for n <= 6.
    'outer: for n in 1..=6usize {
        for k in 1..=n as i64 {
            let mut images = Vec::new();
            for t in enumerate_rinc(n, k, 0).unwrap() {
                if t.first_equal_column().is_none() {
                    continue;
                }
                let image = collapse_equal_column(&t).unwrap();
                let back = expand_equal_column(&image).unwrap();
                if back != t {
                    ok = false;
                    detail = format!("collapse round-trip failed at:\n{}", t.to_text());
                    break 'outer;
                }
                images.push(image);
            }
            images.sort();
            let strict: Vec<Tableau> = enumerate_inc(n, k - 1).unwrap().collect();
            if images != strict {
                ok = false;
                detail = format!("collapse image mismatch at n={n} k={k}");
                break 'outer;
            }
        }
    }

    verdict(
        4,
        "four-term recurrence, counting identity, collapse bijection",
        ok,
    );
    assert!(ok, "{detail}");
}

#[test]
fn criterion_5_transport_maps_shift_statistics() {
    let mut ok = true;
    let mut detail = String::new();

    // Major transport: inverse round-trip, row-2 preservation, and
    // the statistic shift, exhaustively for n <= 6.
    'phi: for n in 1..=6usize {
        for k in 0..=n as i64 {
            for t in enumerate_rinc(n, k, 0).unwrap() {
                let image = major_transport(&t).unwrap();
                let round = major_transport_inv(&image).unwrap();
                let shift_ok = maj(&image) == amaj(&t) + n as u64 - k as u64;
                if round != t || image.row2() != t.row2() || !shift_ok {
                    ok = false;
                    detail = format!("major transport contract failed at:\n{}", t.to_text());
                    break 'phi;
                }
            }
        }
    }

    // Block transport branch shift over prime tableaux for n <= 5 and
    // offsets 0, 1, 4.
    if ok {
        'g: for n in 1..=5usize {
            for k in 0..=n as i64 {
                for m in [0u32, 1, 4] {
                    for t in enumerate_rinc(n, k, m).unwrap().filter(is_prime) {
                        let image = block_transport(&t).unwrap();
                        let expected = if t.row1()[0] == t.row2()[0] {
                            n as u64 - k as u64
                        } else {
                            m as u64 + n as u64 - k as u64
                        };
                        if maj(&image) != amaj(&t) + expected {
                            ok = false;
                            detail =
                                format!("block transport shift failed at:\n{}", t.to_text());
                            break 'g;
                        }
                    }
                }
            }
        }
    }

    verdict(
        5,
        "transport maps round-trip and shift maj against amaj",
        ok,
    );
    assert!(ok, "{detail}");
}

#[test]
fn criterion_6_word_encoding_and_prefactors() {
    let mut ok = true;
    let mut detail = String::new();

    // Word encoding round-trips exhaustively for n <= 6.
    'theta: for n in 1..=6usize {
        for k in 0..=n as i64 {
            for t in enumerate_rinc(n, k, 0).unwrap() {
                let w = tableau_to_word(&t).unwrap();
                if word_to_tableau(&w).unwrap() != t {
                    ok = false;
                    detail = format!("word round-trip failed at:\n{}", t.to_text());
                    break 'theta;
                }
            }
        }
    }

    // Brute-force word maj distribution matches its closed form, and
    // the q-prefactor identities tie the three closed forms together,
    // for n <= 8.
    if ok {
        'words: for n in 1..=8usize {
            for k in 0..=n as i64 {
                let brute = enumerate_words(n, k).unwrap().iter().fold(
                    QPoly::zero(),
                    |acc, w| {
                        acc.add(&QPoly::monomial(1, word_maj(w) as usize)).unwrap()
                    },
                );
                let formula = word_maj_gf(n as i64, k).unwrap();
                let amaj_form = rinc_amaj_gf(n as i64, k).unwrap();
                let maj_form = rinc_maj_gf(n as i64, k).unwrap();
                let word_ok = brute == formula;
                let amaj_ok = amaj_form == formula.times_q_pow((k * (k - 1) / 2) as usize);
                let maj_ok = maj_form == amaj_form.times_q_pow(n - k as usize);
                if !(word_ok && amaj_ok && maj_ok) {
                    ok = false;
                    detail = format!("word generating function mismatch at n={n} k={k}");
                    break 'words;
                }
            }
        }
    }

    verdict(6, "word encoding round-trips and prefactor identities", ok);
    assert!(ok, "{detail}");
}

#[test]
fn criterion_7_golden_cli_outputs() {
    // Each golden is (args, stdin, expected stdout), byte-exact.
    let goldens: &[(&[&str], &str, &str)] = &[
        (
            &["stats"],
            "1 2 4 5 6 8\n3 4 6 7 8 9\n",
            "{\"descents\":[2,5,6,8],\"ascents\":[3,4,7],\"maj\":21,\"amaj\":14}\n",
        ),
        (
            &["map", "--map", "f"],
            "1 3 4 5 6\n2 3 4 6 7\n",
            "1 3 4 5 6\n2 4 6 7 8\n",
        ),
        (
            &["map", "--map", "g"],
            "5 7 8 10 11 12\n6 8 9 12 13 14\n",
            "5 6 7 9 10 11\n6 8 9 12 13 14\n",
        ),
        (
            &["map", "--map", "g"],
            "1 2 4 5 6 9\n2 3 6 7 8 9\n",
            "1 3 4 5 8 9\n2 3 6 7 8 9\n",
        ),
        (
            &["map", "--map", "g"],
            "5 6 8 9 10 13\n7 8 11 12 13 14\n",
            "5 6 7 9 10 12\n7 8 11 12 13 14\n",
        ),
        (
            &["map", "--map", "profile", "--format", "json"],
            "5 6 8 9 10 13\n7 8 11 12 13 14\n",
            "{\"descents0\":[6,10],\"ascents0\":[8],\"d\":2,\"x\":[2,4],\"y\":[2]}\n",
        ),
        (
            &["map", "--map", "phi"],
            "1 2 4 5 6 9 10 12 13 14 16 18 20\n2 3 6 7 8 9 11 13 15 16 17 19 20\n",
            "1 3 4 5 8 9 10 11 12 14 15 18 19\n2 3 6 7 8 9 11 13 15 16 17 19 20\n",
        ),
        (
            &["stats"],
            "1 2 4 5 6 9 10 12 13 14 16 18 20\n2 3 6 7 8 9 11 13 15 16 17 19 20\n",
            "{\"descents\":[1,2,5,6,10,12,14,16,18],\"ascents\":[3,8,9,11,13,15,17,19],\"maj\":84,\"amaj\":95}\n",
        ),
        (
            &["stats"],
            "1 3 4 5 8 9 10 11 12 14 15 18 19\n2 3 6 7 8 9 11 13 15 16 17 19 20\n",
            "{\"descents\":[1,5,8,10,12,14,15,18,19],\"ascents\":[2,3,7,8,9,11,13,17],\"maj\":102,\"amaj\":70}\n",
        ),
        (
            &["convert", "--from", "path", "--to", "word"],
            "UUFUUUDFDDDUDD\n",
            "00100021222022\n",
        ),
        (
            &["convert", "--from", "word", "--to", "path"],
            "00100021222022\n",
            "UUFUUUDFDDDUDD\n",
        ),
    ];

    let mut failures = Vec::new();
    for (args, stdin, expected) in goldens {
        let mut argv = vec!["rowinc"];
        argv.extend_from_slice(args);
        let mut input = stdin.as_bytes();
        let mut stdout = Vec::new();
        let mut stderr = Vec::new();
        let code = rowinc::cli::run(argv, &mut input, &mut stdout, &mut stderr);
        let stdout = String::from_utf8(stdout).unwrap();
        if code != 0 || stdout != *expected {
            failures.push(format!(
                "args {args:?}: exit {code}, stdout {stdout:?}, expected {expected:?}, stderr {}",
                String::from_utf8(stderr).unwrap()
            ));
        }
    }

    let ok = failures.is_empty();
    verdict(7, "golden outputs reproduce byte-exactly through the CLI", ok);
    assert!(ok, "{}", failures.join("\n"));
}

#[test]
fn criterion_8_family_counts() {
    let schroeder_row_sums = [2i64, 6, 22, 90, 394, 1806];
    let catalan = [1i64, 2, 5, 14, 42, 132];

    let mut ok = true;
    let mut detail = String::new();
    for n in 1..=6usize {
        let by_formula: i64 = (0..=n as i64)
            .map(|k| count_rinc(n as i64, k).unwrap())
            .sum();
        let by_enumeration: i64 = (0..=n as i64)
            .map(|k| enumerate_rinc(n, k, 0).unwrap().count() as i64)
            .sum();
        let strict_base = count_inc(n as i64, 0).unwrap();
        let strict_enumerated = enumerate_inc(n, 0).unwrap().count() as i64;
        if by_formula != schroeder_row_sums[n - 1]
            || by_enumeration != schroeder_row_sums[n - 1]
            || strict_base != catalan[n - 1]
            || strict_enumerated != catalan[n - 1]
        {
            ok = false;
            detail = format!(
                "n={n}: row sum formula {by_formula} / enumerated {by_enumeration} \
                 (want {}), base count {strict_base} / enumerated {strict_enumerated} (want {})",
                schroeder_row_sums[n - 1],
                catalan[n - 1]
            );
            break;
        }
    }

    verdict(8, "family counts hit the reference sequences", ok);
    assert!(ok, "{detail}");
}
