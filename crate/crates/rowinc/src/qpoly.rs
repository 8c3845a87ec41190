//! Exact polynomial arithmetic in one variable `q` over the integers,
//! together with the classical q-analogues (q-integers, q-factorials,
//! Gaussian binomials) and the closed-form generating functions this
//! crate verifies against brute-force enumeration.
//!
//! Coefficients are `i64` and every operation is checked: overflow is
//! reported as an error, never wrapped. Polynomials are kept canonical
//! (no trailing zero coefficients; the zero polynomial has an empty
//! coefficient vector), so `==` is structural equality.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tableaux::Partition;

/// A polynomial in `q` with exact `i64` coefficients, stored densely in
/// ascending order of degree: `coeffs[d]` is the coefficient of `q^d`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "CoeffList")]
pub struct QPoly {
    coeffs: Vec<i64>,
}

/// Wire shape of a polynomial: `{"coeffs":[c0,c1,...]}`.
#[derive(Deserialize)]
struct CoeffList {
    coeffs: Vec<i64>,
}

impl From<CoeffList> for QPoly {
    fn from(raw: CoeffList) -> Self {
        QPoly::from_coeffs(raw.coeffs)
    }
}

impl QPoly {
    /// The zero polynomial (empty coefficient vector).
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        QPoly { coeffs: vec![1] }
    }

    /// `coeff * q^degree`.
    pub fn monomial(coeff: i64, degree: usize) -> Self {
        if coeff == 0 {
            return QPoly::zero();
        }
        let mut coeffs = vec![0; degree + 1];
        coeffs[degree] = coeff;
        QPoly { coeffs }
    }

    /// Builds a polynomial from ascending coefficients, trimming
    /// trailing zeros so the representation is canonical.
    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    /// Ascending coefficients; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `q^d` (zero beyond the stored degree).
    pub fn coeff(&self, d: usize) -> i64 {
        self.coeffs.get(d).copied().unwrap_or(0)
    }

    pub fn add(&self, rhs: &QPoly) -> Result<QPoly> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for d in 0..len {
            out.push(
                self.coeff(d)
                    .checked_add(rhs.coeff(d))
                    .ok_or_else(|| overflow("addition", d))?,
            );
        }
        Ok(QPoly::from_coeffs(out))
    }

    pub fn sub(&self, rhs: &QPoly) -> Result<QPoly> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for d in 0..len {
            out.push(
                self.coeff(d)
                    .checked_sub(rhs.coeff(d))
                    .ok_or_else(|| overflow("subtraction", d))?,
            );
        }
        Ok(QPoly::from_coeffs(out))
    }

    pub fn mul(&self, rhs: &QPoly) -> Result<QPoly> {
        if self.is_zero() || rhs.is_zero() {
            return Ok(QPoly::zero());
        }
        let mut acc = vec![0i128; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                acc[i + j] += a as i128 * b as i128;
            }
        }
        let mut out = Vec::with_capacity(acc.len());
        for (d, c) in acc.into_iter().enumerate() {
            out.push(i64::try_from(c).map_err(|_| overflow("multiplication", d))?);
        }
        Ok(QPoly::from_coeffs(out))
    }

    /// Multiplies by `q^d` (degree shift; cannot overflow).
    pub fn times_q_pow(&self, d: usize) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![0; d];
        coeffs.extend_from_slice(&self.coeffs);
        QPoly { coeffs }
    }

    /// Exact division: returns `self / den` when the remainder is zero
    /// and fails with a divisibility error otherwise. In this crate a
    /// nonzero remainder always means a closed form was transcribed
    /// wrongly, so callers treat the error as fatal.
    pub fn exact_div(&self, den: &QPoly) -> Result<QPoly> {
        if den.is_zero() {
            return Err(Error::input("division by the zero polynomial"));
        }
        if self.is_zero() {
            return Ok(QPoly::zero());
        }
        let nd = self.coeffs.len() - 1;
        let dd = den.coeffs.len() - 1;
        if nd < dd {
            return Err(Error::Divisibility(format!(
                "degree {} numerator cannot be divided by degree {} denominator",
                nd, dd
            )));
        }
        let lead = den.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0i64; nd - dd + 1];
        for d in (0..=nd - dd).rev() {
            let top = rem[d + dd];
            if top == 0 {
                continue;
            }
            if top % lead != 0 {
                return Err(Error::Divisibility(format!(
                    "leading coefficient {} not divisible by {}",
                    top, lead
                )));
            }
            let c = top / lead;
            quot[d] = c;
            for (j, &dc) in den.coeffs.iter().enumerate() {
                let prod = c.checked_mul(dc).ok_or_else(|| overflow("division", d + j))?;
                rem[d + j] = rem[d + j]
                    .checked_sub(prod)
                    .ok_or_else(|| overflow("division", d + j))?;
            }
        }
        if rem.iter().any(|&c| c != 0) {
            return Err(Error::Divisibility(
                "division left a nonzero remainder".into(),
            ));
        }
        Ok(QPoly::from_coeffs(quot))
    }

    /// Evaluates at `q = 1`, i.e. the checked sum of all coefficients.
    pub fn eval_at_one(&self) -> Result<i64> {
        let mut total = 0i64;
        for (d, &c) in self.coeffs.iter().enumerate() {
            total = total.checked_add(c).ok_or_else(|| overflow("evaluation", d))?;
        }
        Ok(total)
    }
}

fn overflow(op: &str, degree: usize) -> Error {
    Error::Overflow(format!("coefficient of q^{degree} overflowed i64 during {op}"))
}

impl fmt::Display for QPoly {
    /// Human form, ascending: `1 + q + 2q^2 - q^4`; zero prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.unsigned_abs();
            match d {
                0 => write!(f, "{mag}")?,
                _ => {
                    if mag != 1 {
                        write!(f, "{mag}")?;
                    }
                    if d == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{d}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

/// The q-integer `[n] = 1 + q + ... + q^(n-1)`; `[0]` is the zero
/// polynomial.
pub fn q_int(n: i64) -> Result<QPoly> {
    if n < 0 {
        return Err(Error::input(format!("q-integer undefined for negative n = {n}")));
    }
    Ok(QPoly::from_coeffs(vec![1; n as usize]))
}

/// The q-factorial `[n]! = [1][2]...[n]`; `[0]! = 1`.
pub fn q_factorial(n: i64) -> Result<QPoly> {
    if n < 0 {
        return Err(Error::input(format!(
            "q-factorial undefined for negative n = {n}"
        )));
    }
    let mut acc = QPoly::one();
    for i in 1..=n {
        acc = acc.mul(&q_int(i)?)?;
    }
    Ok(acc)
}

/// The Gaussian binomial coefficient `[a choose b]`, computed by the
/// Pascal-type recurrence `[a,b] = [a-1,b-1] + q^b [a-1,b]` so no
/// division is ever needed. Returns the zero polynomial when `b < 0`
/// or `b > a`; negative `a` is an input error.
pub fn q_binomial(a: i64, b: i64) -> Result<QPoly> {
    if a < 0 {
        return Err(Error::input(format!(
            "q-binomial undefined for negative upper index a = {a}"
        )));
    }
    if b < 0 || b > a {
        return Ok(QPoly::zero());
    }
    // Exploit symmetry to keep the DP row short.
    let b = b.min(a - b) as usize;
    let mut row: Vec<QPoly> = vec![QPoly::zero(); b + 1];
    row[0] = QPoly::one();
    for _aa in 1..=a {
        for bb in (1..=b).rev() {
            row[bb] = row[bb - 1].add(&row[bb].times_q_pow(bb))?;
        }
    }
    Ok(row.pop().expect("row is nonempty"))
}

/// Hook lengths of a partition shape, cell by cell in row-major order.
/// For the cell in row `i`, column `j` (0-indexed) the hook counts the
/// cell itself, the cells to its right, and the cells below it.
pub fn hook_lengths(shape: &Partition) -> Vec<u64> {
    let parts = shape.parts();
    let conj = shape.conjugate();
    let conj_parts = conj.parts();
    let mut hooks = Vec::with_capacity(shape.size());
    for (i, &len) in parts.iter().enumerate() {
        for j in 0..len {
            let arm = (len - 1 - j) as u64;
            let leg = (conj_parts[j] - 1 - i) as u64;
            hooks.push(arm + leg + 1);
        }
    }
    hooks
}

/// Major-index generating function over all standard Young tableaux of
/// the given shape, by the q-analogue of the hook length formula:
///
/// ```text
/// sum_T q^maj(T)  =  q^b(shape) [N]! / prod_cells [hook]
/// ```
///
/// where `N` is the number of cells and `b(shape) = sum (i-1) * part_i`.
/// The division is exact for every partition; a remainder would mean
/// the formula was transcribed wrongly.
pub fn q_hook_maj_sum(shape: &Partition) -> Result<QPoly> {
    let n = shape.size() as i64;
    let b: usize = shape
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &len)| i * len)
        .sum();
    let mut den = QPoly::one();
    for h in hook_lengths(shape) {
        den = den.mul(&q_int(h as i64)?)?;
    }
    q_factorial(n)?.times_q_pow(b).exact_div(&den)
}

fn require_positive(n: i64) -> Result<()> {
    if n < 1 {
        return Err(Error::input(format!("n must be at least 1, got {n}")));
    }
    Ok(())
}

/// Closed-form maj generating function over standard Young tableaux of
/// shape 2 x n (the q-Catalan number): `q^n [2n choose n] / [n+1]`.
pub fn syt_maj_gf(n: i64) -> Result<QPoly> {
    require_positive(n)?;
    q_binomial(2 * n, n)?
        .times_q_pow(n as usize)
        .exact_div(&q_int(n + 1)?)
}

/// Closed-form amaj generating function over standard Young tableaux
/// of shape 2 x n: `[2n choose n] / [n+1]`.
pub fn syt_amaj_gf(n: i64) -> Result<QPoly> {
    require_positive(n)?;
    q_binomial(2 * n, n)?.exact_div(&q_int(n + 1)?)
}

/// Closed-form maj generating function over increasing tableaux of
/// shape 2 x n with `k` doubled entries:
///
/// ```text
/// q^(n + k(k+1)/2) [n-1 choose k] [2n-k choose n] / [n+1]
/// ```
///
/// Zero whenever a binomial vanishes (`k < 0` or `k > n-1`).
pub fn inc_maj_gf(n: i64, k: i64) -> Result<QPoly> {
    require_positive(n)?;
    let b1 = q_binomial(n - 1, k)?;
    if b1.is_zero() {
        return Ok(QPoly::zero());
    }
    let b2 = q_binomial(2 * n - k, n)?;
    let e = (n + k * (k + 1) / 2) as usize;
    b1.mul(&b2)?.times_q_pow(e).exact_div(&q_int(n + 1)?)
}

/// Closed-form maj generating function over row-increasing tableaux of
/// shape 2 x n with `k` doubled entries:
///
/// ```text
/// q^(n + k(k-3)/2) [2n-k choose k] [2n-2k choose n-k] / [n-k+1]
/// ```
///
/// Zero for `k` outside `0..=n`.
pub fn rinc_maj_gf(n: i64, k: i64) -> Result<QPoly> {
    require_positive(n)?;
    if !(0..=n).contains(&k) {
        return Ok(QPoly::zero());
    }
    let prod = q_binomial(2 * n - k, k)?.mul(&q_binomial(2 * n - 2 * k, n - k)?)?;
    let e = (n + k * (k - 3) / 2) as usize;
    prod.times_q_pow(e).exact_div(&q_int(n - k + 1)?)
}

/// Closed-form amaj generating function over row-increasing tableaux
/// of shape 2 x n with `k` doubled entries:
///
/// ```text
/// q^(k(k-1)/2) [2n-k choose k] [2n-2k choose n-k] / [n-k+1]
/// ```
///
/// Zero for `k` outside `0..=n`. Equals `rinc_maj_gf` divided by
/// `q^(n-k)`, and specializes at `k = 0` to `syt_amaj_gf`.
pub fn rinc_amaj_gf(n: i64, k: i64) -> Result<QPoly> {
    require_positive(n)?;
    if !(0..=n).contains(&k) {
        return Ok(QPoly::zero());
    }
    let prod = q_binomial(2 * n - k, k)?.mul(&q_binomial(2 * n - 2 * k, n - k)?)?;
    let e = (k * (k - 1) / 2) as usize;
    prod.times_q_pow(e).exact_div(&q_int(n - k + 1)?)
}

/// Right-hand side of the four-term recurrence satisfied by
/// `rinc_maj_gf` for `1 <= k < n`:
///
/// ```text
/// inc_maj_gf(n,k) + inc_maj_gf(n,k-1)
///   + (1 - q^(2n-k)) (inc_maj_gf(n-1,k-1) + inc_maj_gf(n-1,k-2))
/// ```
pub fn rinc_maj_gf_recurrence(n: i64, k: i64) -> Result<QPoly> {
    if !(1..n).contains(&k) {
        return Err(Error::input(format!(
            "recurrence requires 1 <= k < n, got n = {n}, k = {k}"
        )));
    }
    let head = inc_maj_gf(n, k)?.add(&inc_maj_gf(n, k - 1)?)?;
    let tail = inc_maj_gf(n - 1, k - 1)?.add(&inc_maj_gf(n - 1, k - 2)?)?;
    let factor = QPoly::one().sub(&QPoly::monomial(1, (2 * n - k) as usize))?;
    head.add(&factor.mul(&tail)?)
}

/// Exact binomial coefficient `C(a, b)` as `i128`; zero when `b < 0`,
/// `b > a`, or `a < 0`.
fn binomial(a: i64, b: i64) -> i128 {
    if a < 0 || b < 0 || b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: i128 = 1;
    for i in 1..=b {
        // Multiply before dividing; each prefix product is an exact
        // binomial so the division never truncates.
        acc = acc * (a - b + i) as i128 / i as i128;
    }
    acc
}

/// Number of increasing tableaux of shape 2 x n with `k` doubled
/// entries: `C(n-1, k) C(2n-k, n) / (n+1)`. Zero outside `0..=n-1`.
pub fn count_inc(n: i64, k: i64) -> Result<i64> {
    require_positive(n)?;
    exact_count(binomial(n - 1, k) * binomial(2 * n - k, n), n + 1)
}

/// Number of row-increasing tableaux of shape 2 x n with `k` doubled
/// entries: `C(2n-k, k) C(2n-2k, n-k) / (n-k+1)`. Zero outside
/// `0..=n`. Summing over `k` gives the large Schröder numbers; `k = 0`
/// gives the Catalan numbers.
pub fn count_rinc(n: i64, k: i64) -> Result<i64> {
    require_positive(n)?;
    if !(0..=n).contains(&k) {
        return Ok(0);
    }
    exact_count(binomial(2 * n - k, k) * binomial(2 * n - 2 * k, n - k), n - k + 1)
}

fn exact_count(product: i128, divisor: i64) -> Result<i64> {
    if product % divisor as i128 != 0 {
        return Err(Error::Divisibility(format!(
            "count {product} is not divisible by {divisor}"
        )));
    }
    i64::try_from(product / divisor as i128)
        .map_err(|_| Error::Overflow("count exceeds i64".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(coeffs: &[i64]) -> QPoly {
        QPoly::from_coeffs(coeffs.to_vec())
    }

    fn shape(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn q_int_basics() {
        assert_eq!(q_int(0).unwrap(), QPoly::zero());
        assert_eq!(q_int(1).unwrap(), QPoly::one());
        assert_eq!(q_int(3).unwrap(), poly(&[1, 1, 1]));
        assert!(q_int(-1).is_err());
    }

    #[test]
    fn q_factorial_basics() {
        assert_eq!(q_factorial(0).unwrap(), QPoly::one());
        assert_eq!(q_factorial(2).unwrap(), poly(&[1, 1]));
        assert_eq!(q_factorial(3).unwrap(), poly(&[1, 2, 2, 1]));
    }

    #[test]
    fn q_binomial_basics() {
        assert_eq!(q_binomial(4, 2).unwrap(), poly(&[1, 1, 2, 1, 1]));
        assert_eq!(q_binomial(3, 1).unwrap(), poly(&[1, 1, 1]));
        for a in 0..10 {
            assert_eq!(q_binomial(a, 0).unwrap(), QPoly::one());
        }
        assert_eq!(q_binomial(3, 5).unwrap(), QPoly::zero());
        assert_eq!(q_binomial(3, -1).unwrap(), QPoly::zero());
        assert!(q_binomial(-1, 0).is_err());
    }

    #[test]
    fn q_binomial_symmetry() {
        for a in 0..=12i64 {
            for b in 0..=a {
                assert_eq!(q_binomial(a, b).unwrap(), q_binomial(a, a - b).unwrap());
            }
        }
    }

    #[test]
    fn q_binomial_counts_at_one() {
        for a in 0..=12i64 {
            for b in 0..=a {
                assert_eq!(
                    q_binomial(a, b).unwrap().eval_at_one().unwrap() as i128,
                    binomial(a, b)
                );
            }
        }
    }

    #[test]
    fn exact_div_examples() {
        // [6] / [3] = 1 + q^3
        assert_eq!(
            q_int(6).unwrap().exact_div(&q_int(3).unwrap()).unwrap(),
            poly(&[1, 0, 0, 1])
        );
        // [5] / [2] leaves a remainder.
        assert!(matches!(
            q_int(5).unwrap().exact_div(&q_int(2).unwrap()),
            Err(Error::Divisibility(_))
        ));
        assert!(QPoly::one().exact_div(&QPoly::zero()).is_err());
        assert_eq!(
            QPoly::zero().exact_div(&q_int(2).unwrap()).unwrap(),
            QPoly::zero()
        );
    }

    #[test]
    fn display_is_ascending() {
        assert_eq!(poly(&[0, 1, 1, 1]).to_string(), "q + q^2 + q^3");
        assert_eq!(poly(&[1, 0, 2]).to_string(), "1 + 2q^2");
        assert_eq!(poly(&[1, 0, 0, -1]).to_string(), "1 - q^3");
        assert_eq!(QPoly::zero().to_string(), "0");
    }

    #[test]
    fn serde_round_trip() {
        let p = poly(&[0, 1, 1, 1]);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"coeffs":[0,1,1,1]}"#);
        let back: QPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
        // Deserialization canonicalizes trailing zeros.
        let padded: QPoly = serde_json::from_str(r#"{"coeffs":[1,0,0]}"#).unwrap();
        assert_eq!(padded, QPoly::one());
    }

    #[test]
    fn hook_lengths_examples() {
        let mut h = hook_lengths(&shape(&[2, 2]));
        h.sort_unstable();
        assert_eq!(h, vec![1, 2, 2, 3]);
        assert_eq!(hook_lengths(&shape(&[1])), vec![1]);
        let mut h = hook_lengths(&shape(&[2, 2, 1]));
        h.sort_unstable();
        assert_eq!(h, vec![1, 1, 2, 3, 4]);
    }

    #[test]
    fn hook_maj_sum_examples() {
        assert_eq!(q_hook_maj_sum(&shape(&[2, 2])).unwrap(), poly(&[0, 0, 1, 0, 1]));
        assert_eq!(q_hook_maj_sum(&shape(&[1])).unwrap(), QPoly::one());
        assert_eq!(
            q_hook_maj_sum(&shape(&[2, 2, 1])).unwrap(),
            poly(&[0, 0, 0, 0, 1, 1, 1, 1, 1])
        );
        // Empty shape: one empty tableau with maj 0.
        assert_eq!(q_hook_maj_sum(&shape(&[])).unwrap(), QPoly::one());
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(syt_maj_gf(2).unwrap(), poly(&[0, 0, 1, 0, 1]));
        assert_eq!(rinc_maj_gf(2, 1).unwrap(), poly(&[0, 1, 1, 1]));
        assert_eq!(rinc_amaj_gf(2, 1).unwrap(), poly(&[1, 1, 1]));
        assert_eq!(
            inc_maj_gf(3, 1).unwrap(),
            poly(&[0, 0, 0, 0, 1, 1, 1, 1, 1])
        );
    }

    #[test]
    fn closed_form_edge_cases() {
        for n in 1..=8i64 {
            // Only the two full rows remain when every entry doubles.
            assert_eq!(
                rinc_maj_gf(n, n).unwrap(),
                QPoly::monomial(1, (n * (n - 1) / 2) as usize)
            );
            assert_eq!(inc_maj_gf(n, n).unwrap(), QPoly::zero());
            assert_eq!(rinc_maj_gf(n, -1).unwrap(), QPoly::zero());
            assert_eq!(rinc_maj_gf(n, n + 1).unwrap(), QPoly::zero());
            assert_eq!(rinc_amaj_gf(n, n + 3).unwrap(), QPoly::zero());
            assert_eq!(inc_maj_gf(n, -2).unwrap(), QPoly::zero());
            // k = 0 collapses both statistics to the standard case.
            assert_eq!(rinc_maj_gf(n, 0).unwrap(), syt_maj_gf(n).unwrap());
            assert_eq!(rinc_amaj_gf(n, 0).unwrap(), syt_amaj_gf(n).unwrap());
        }
        assert!(syt_maj_gf(0).is_err());
        assert!(rinc_maj_gf(0, 0).is_err());
    }

    #[test]
    fn maj_and_amaj_forms_differ_by_a_power_of_q() {
        for n in 1..=8i64 {
            for k in 0..=n {
                assert_eq!(
                    rinc_maj_gf(n, k).unwrap(),
                    rinc_amaj_gf(n, k).unwrap().times_q_pow((n - k) as usize)
                );
            }
        }
    }

    #[test]
    fn recurrence_example() {
        assert_eq!(
            rinc_maj_gf_recurrence(3, 1).unwrap(),
            poly(&[0, 0, 1, 1, 2, 2, 2, 1, 1])
        );
        assert!(rinc_maj_gf_recurrence(3, 0).is_err());
        assert!(rinc_maj_gf_recurrence(3, 3).is_err());
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_rinc(1, 0).unwrap(), 1);
        assert_eq!(count_rinc(3, 1).unwrap(), 10);
        assert_eq!(count_inc(3, 1).unwrap(), 5);
        assert_eq!(count_inc(2, 1).unwrap(), 1);
        assert_eq!(count_inc(3, 5).unwrap(), 0);
        assert_eq!(count_rinc(3, -1).unwrap(), 0);
    }

    #[test]
    fn catalan_and_schroeder_columns() {
        let catalan = [1, 2, 5, 14, 42, 132];
        let schroeder = [2, 6, 22, 90, 394, 1806];
        for n in 1..=6i64 {
            assert_eq!(count_inc(n, 0).unwrap(), catalan[n as usize - 1]);
            let total: i64 = (0..=n).map(|k| count_rinc(n, k).unwrap()).sum();
            assert_eq!(total, schroeder[n as usize - 1]);
        }
    }

    #[test]
    fn formulas_count_at_one() {
        for n in 1..=8i64 {
            for k in -1..=n + 1 {
                assert_eq!(
                    rinc_maj_gf(n, k).unwrap().eval_at_one().unwrap(),
                    count_rinc(n, k).unwrap()
                );
                assert_eq!(
                    rinc_amaj_gf(n, k).unwrap().eval_at_one().unwrap(),
                    count_rinc(n, k).unwrap()
                );
                assert_eq!(
                    inc_maj_gf(n, k).unwrap().eval_at_one().unwrap(),
                    count_inc(n, k).unwrap()
                );
            }
        }
    }

    #[test]
    fn overflow_is_reported() {
        let big = QPoly::monomial(i64::MAX, 0);
        assert!(matches!(big.add(&QPoly::one()), Err(Error::Overflow(_))));
        assert!(matches!(big.mul(&poly(&[2])), Err(Error::Overflow(_))));
    }

    fn small_poly() -> impl Strategy<Value = QPoly> {
        proptest::collection::vec(-50i64..50, 0..8).prop_map(QPoly::from_coeffs)
    }

    proptest! {
        /// Property: multiplication round-trips through exact division.
        #[test]
        fn prop_exact_div_round_trip(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            let prod = a.mul(&b).unwrap();
            prop_assert_eq!(prod.exact_div(&b).unwrap(), a);
        }

        /// Property: ring identities hold for checked arithmetic.
        #[test]
        fn prop_ring_identities(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            let left = a.mul(&b.add(&c).unwrap()).unwrap();
            let right = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        /// Property: subtraction inverts addition.
        #[test]
        fn prop_sub_inverts_add(a in small_poly(), b in small_poly()) {
            prop_assert_eq!(a.add(&b).unwrap().sub(&b).unwrap(), a);
        }
    }
}
