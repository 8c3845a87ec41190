//! Descent and ascent statistics on two-row tableaux.
//!
//! Membership is decided per row as a *set*: a value `i` is a descent
//! when `i` appears somewhere in row 1 and `i + 1` somewhere in row 2,
//! and an ascent when `i` appears in row 2 and `i + 1` in row 1. A
//! doubled value belongs to both rows at once, so it can participate
//! on either side. The major index `maj` sums the descents and the
//! amajor index `amaj` sums the ascents.
//!
//! For standard Young tableaux of general shape the classical descent
//! rule applies instead: `i` is a descent when `i + 1` sits in a
//! strictly lower row.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::tableaux::{GeneralTableau, Tableau};

/// All four statistics of one tableau, bundled for serialization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StatProfile {
    pub descents: BTreeSet<u32>,
    pub ascents: BTreeSet<u32>,
    pub maj: u64,
    pub amaj: u64,
}

/// Values `i` with `i` in row 1 and `i + 1` in row 2.
pub fn descent_set(t: &Tableau) -> BTreeSet<u32> {
    t.row1()
        .iter()
        .copied()
        .filter(|&v| t.in_row2(v + 1))
        .collect()
}

/// Values `i` with `i` in row 2 and `i + 1` in row 1.
pub fn ascent_set(t: &Tableau) -> BTreeSet<u32> {
    t.row2()
        .iter()
        .copied()
        .filter(|&v| t.in_row1(v + 1))
        .collect()
}

/// Major index: the sum of the descent set.
pub fn maj(t: &Tableau) -> u64 {
    descent_set(t).iter().map(|&v| v as u64).sum()
}

/// Amajor index: the sum of the ascent set.
pub fn amaj(t: &Tableau) -> u64 {
    ascent_set(t).iter().map(|&v| v as u64).sum()
}

/// Computes all four statistics in one pass.
pub fn profile(t: &Tableau) -> StatProfile {
    let descents = descent_set(t);
    let ascents = ascent_set(t);
    let maj = descents.iter().map(|&v| v as u64).sum();
    let amaj = ascents.iter().map(|&v| v as u64).sum();
    StatProfile {
        descents,
        ascents,
        maj,
        amaj,
    }
}

/// Classical descent set of a standard Young tableau: values `i` whose
/// successor `i + 1` lies in a strictly lower row.
pub fn syt_descent_set(t: &GeneralTableau) -> BTreeSet<u32> {
    let size = t.size() as u32;
    (1..size)
        .filter(|&v| {
            let here = t.row_index_of(v).expect("standard entries are present");
            let next = t.row_index_of(v + 1).expect("standard entries are present");
            next > here
        })
        .collect()
}

/// Major index of a standard Young tableau.
pub fn syt_maj(t: &GeneralTableau) -> u64 {
    syt_descent_set(t).iter().map(|&v| v as u64).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::{rinc_amaj_gf, rinc_maj_gf, QPoly};
    use crate::tableaux::{enumerate_rinc, enumerate_syt, Partition};

    fn t(row1: &[u32], row2: &[u32]) -> Tableau {
        Tableau::from_rows(row1.to_vec(), row2.to_vec()).unwrap()
    }

    fn set(vals: &[u32]) -> BTreeSet<u32> {
        vals.iter().copied().collect()
    }

    #[test]
    fn worked_example() {
        let t = t(&[1, 2, 4, 5, 6, 8], &[3, 4, 6, 7, 8, 9]);
        assert_eq!(descent_set(&t), set(&[2, 5, 6, 8]));
        assert_eq!(maj(&t), 21);
        assert_eq!(ascent_set(&t), set(&[3, 4, 7]));
        assert_eq!(amaj(&t), 14);
    }

    #[test]
    fn doubled_values_count_for_both_rows() {
        // 2 is doubled, so it is both a descent source (2 in row 1,
        // 3 in row 2) and the target of one (1 in row 1, 2 in row 2).
        let a = t(&[1, 2], &[2, 3]);
        assert_eq!(descent_set(&a), set(&[1, 2]));
        assert_eq!(ascent_set(&a), set(&[]));

        let b = t(&[1, 3], &[2, 3]);
        assert_eq!(descent_set(&b), set(&[1]));
        assert_eq!(ascent_set(&b), set(&[2]));
    }

    #[test]
    fn standard_two_row_cases() {
        assert_eq!(maj(&t(&[1, 2], &[3, 4])), 2);
        assert_eq!(maj(&t(&[1, 3], &[2, 4])), 4);
        assert_eq!(amaj(&t(&[1, 3], &[2, 4])), 2);
    }

    #[test]
    fn fully_doubled_tableau() {
        // Both rows carry 1..=n; every value but the largest is both a
        // descent and an ascent.
        for n in 1..=5u32 {
            let row: Vec<u32> = (1..=n).collect();
            let t = t(&row, &row);
            let expected: u64 = (n as u64) * (n as u64 - 1) / 2;
            assert_eq!(maj(&t), expected);
            assert_eq!(amaj(&t), expected);
        }
    }

    #[test]
    fn larger_worked_example() {
        let t = t(
            &[1, 2, 4, 5, 6, 9, 10, 12, 13, 14, 16, 18, 20],
            &[2, 3, 6, 7, 8, 9, 11, 13, 15, 16, 17, 19, 20],
        );
        assert_eq!(ascent_set(&t), set(&[3, 8, 9, 11, 13, 15, 17, 19]));
        assert_eq!(amaj(&t), 95);
    }

    #[test]
    fn profile_bundles_all_four() {
        let p = profile(&t(&[1, 2, 4, 5, 6, 8], &[3, 4, 6, 7, 8, 9]));
        assert_eq!(p.descents, set(&[2, 5, 6, 8]));
        assert_eq!(p.ascents, set(&[3, 4, 7]));
        assert_eq!(p.maj, 21);
        assert_eq!(p.amaj, 14);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(
            json,
            r#"{"descents":[2,5,6,8],"ascents":[3,4,7],"maj":21,"amaj":14}"#
        );
    }

    #[test]
    fn statistics_are_shift_equivariant() {
        // Raising every entry by m shifts each descent and ascent by m.
        let base: Vec<Tableau> = enumerate_rinc(3, 2, 0).unwrap().collect();
        let shifted: Vec<Tableau> = enumerate_rinc(3, 2, 7).unwrap().collect();
        for (a, b) in base.iter().zip(&shifted) {
            let bumped: BTreeSet<u32> = descent_set(a).iter().map(|v| v + 7).collect();
            assert_eq!(bumped, descent_set(b));
            assert_eq!(maj(a) + 7 * descent_set(a).len() as u64, maj(b));
            assert_eq!(amaj(a) + 7 * ascent_set(a).len() as u64, amaj(b));
        }
    }

    /// Builds the generating function `sum q^stat` over a family.
    fn distribution(tableaux: impl Iterator<Item = Tableau>, stat: fn(&Tableau) -> u64) -> QPoly {
        let mut acc = QPoly::zero();
        for t in tableaux {
            acc = acc.add(&QPoly::monomial(1, stat(&t) as usize)).unwrap();
        }
        acc
    }

    #[test]
    fn maj_distribution_matches_closed_form() {
        let brute = distribution(enumerate_rinc(3, 1, 0).unwrap(), maj);
        assert_eq!(brute, rinc_maj_gf(3, 1).unwrap());
        assert_eq!(brute.coeffs(), &[0, 0, 1, 1, 2, 2, 2, 1, 1]);
    }

    #[test]
    fn amaj_distribution_matches_closed_form() {
        for n in 1..=5 {
            for k in 0..=n {
                let brute = distribution(enumerate_rinc(n, k as i64, 0).unwrap(), amaj);
                assert_eq!(brute, rinc_amaj_gf(n as i64, k as i64).unwrap(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn maj_is_shifted_amaj_in_distribution() {
        for n in 1..=5usize {
            for k in 0..=n {
                let by_maj = distribution(enumerate_rinc(n, k as i64, 0).unwrap(), maj);
                let by_amaj = distribution(enumerate_rinc(n, k as i64, 0).unwrap(), amaj);
                assert_eq!(by_maj, by_amaj.times_q_pow(n - k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn syt_descents_match_two_row_rule() {
        // On doubled-value-free two-row tableaux the set rule reduces
        // to the classical one, so the maj multisets coincide.
        for n in 1..=4usize {
            let mut via_pairs: Vec<u64> =
                enumerate_rinc(n, 0, 0).unwrap().map(|t| maj(&t)).collect();
            let shape = Partition::new(vec![n, n]).unwrap();
            let mut via_syt: Vec<u64> = enumerate_syt(&shape).map(|t| syt_maj(&t)).collect();
            via_pairs.sort_unstable();
            via_syt.sort_unstable();
            assert_eq!(via_pairs, via_syt);
        }
    }

    #[test]
    fn syt_maj_examples() {
        let shape = Partition::new(vec![2, 2]).unwrap();
        let mut majs: Vec<u64> = enumerate_syt(&shape).map(|t| syt_maj(&t)).collect();
        majs.sort_unstable();
        assert_eq!(majs, vec![2, 4]);

        let empty = Partition::new(vec![]).unwrap();
        let only: Vec<GeneralTableau> = enumerate_syt(&empty).collect();
        assert_eq!(syt_maj(&only[0]), 0);
        assert!(syt_descent_set(&only[0]).is_empty());
    }
}
