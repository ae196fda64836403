//! Exact truncated power series in one variable and the closed-form expected
//! series for quotients by generic forms.
//!
//! A [`TruncatedSeries`] stores coefficients for degrees `0..=precision` as
//! arbitrary-precision integers. Binary operations truncate to the smaller
//! precision. The truncation operator [`TruncatedSeries::truncate_plus`]
//! zeroes everything from the first negative coefficient on; zeros pass
//! through untouched.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Integer power series known exactly up to a degree bound.
///
/// Invariant: `coeffs.len() == precision + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a series has at least the degree-0 coefficient");
        Self { coeffs }
    }

    pub fn from_i64(vals: &[i64]) -> Self {
        Self::from_coeffs(vals.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn from_dims(dims: &[usize]) -> Self {
        Self::from_coeffs(dims.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn zero(precision: usize) -> Self {
        Self { coeffs: vec![BigInt::zero(); precision + 1] }
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, degree: usize) -> &BigInt {
        &self.coeffs[degree]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Restrict to a smaller (or equal) precision.
    pub fn truncate_to(&self, precision: usize) -> Self {
        let end = precision.min(self.precision());
        Self { coeffs: self.coeffs[..=end].to_vec() }
    }

    /// Zero-pad up to `precision` (no-op if already at least that precise).
    /// Only meaningful for series known to vanish beyond their stored range,
    /// e.g. polynomials.
    pub fn pad_to(&self, precision: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        while coeffs.len() < precision + 1 {
            coeffs.push(BigInt::zero());
        }
        Self { coeffs }
    }

    /// The `()_+` operator: keep coefficients while every coefficient so far
    /// is non-negative, zero out the rest. Zeros do not trigger truncation.
    pub fn truncate_plus(&self) -> Self {
        let mut out = Vec::with_capacity(self.coeffs.len());
        let mut alive = true;
        for c in &self.coeffs {
            if alive && c.is_negative() {
                alive = false;
            }
            out.push(if alive { c.clone() } else { BigInt::zero() });
        }
        Self { coeffs: out }
    }

    /// Whether `truncate_plus` would change anything within the precision.
    pub fn has_negative(&self) -> bool {
        self.coeffs.iter().any(|c| c.is_negative())
    }

    pub fn add(&self, other: &Self) -> Self {
        let prec = self.precision().min(other.precision());
        let coeffs = (0..=prec).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect();
        Self { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let prec = self.precision().min(other.precision());
        let coeffs = (0..=prec).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect();
        Self { coeffs }
    }

    /// Schoolbook product, truncated to the smaller precision.
    pub fn mul(&self, other: &Self) -> Self {
        let prec = self.precision().min(other.precision());
        let mut coeffs = vec![BigInt::zero(); prec + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(prec + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(prec + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Self { coeffs }
    }

    /// Multiply by an integer polynomial, keeping the same precision.
    pub fn mul_poly(&self, poly: &[BigInt]) -> Self {
        let prec = self.precision();
        let mut coeffs = vec![BigInt::zero(); prec + 1];
        for (j, p) in poly.iter().enumerate() {
            if p.is_zero() || j > prec {
                continue;
            }
            for i in 0..=(prec - j) {
                if !self.coeffs[i].is_zero() {
                    coeffs[i + j] += &self.coeffs[i] * p;
                }
            }
        }
        Self { coeffs }
    }

    /// First degree `v` with `coeff(v) == coeff(v+1) == 0`, if any.
    /// Used by the default-precision policy for artinian expected series.
    pub fn settles_to_zero_at(&self) -> Option<usize> {
        (0..self.precision()).find(|&v| self.coeffs[v].is_zero() && self.coeffs[v + 1].is_zero())
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                if c.is_negative() {
                    write!(f, " - ")?;
                } else {
                    write!(f, " + ")?;
                }
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let abs = c.abs();
            match i {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}")?;
                    }
                    if i == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{i}")?;
                    }
                }
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

// Serialized form: {"precision": N, "coeffs": ["1", "3", "6"]}. Coefficients
// travel as decimal strings so arbitrary-precision values survive JSON.
impl Serialize for TruncatedSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            precision: usize,
            coeffs: Vec<String>,
        }
        Repr {
            precision: self.precision(),
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TruncatedSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            precision: usize,
            coeffs: Vec<String>,
        }
        let repr = Repr::deserialize(deserializer)?;
        if repr.coeffs.len() != repr.precision + 1 {
            return Err(D::Error::custom("coeffs length must equal precision + 1"));
        }
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(|e| D::Error::custom(e.to_string())))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(Self { coeffs })
    }
}

/// Generator degrees d_1 >= ... >= d_r, all positive.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeSequence {
    degrees: Vec<u32>,
}

impl DegreeSequence {
    pub fn new(mut degrees: Vec<u32>) -> Result<Self> {
        if degrees.contains(&0) {
            return Err(Error::ZeroDegree);
        }
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { degrees })
    }

    pub fn uniform(d: u32, r: usize) -> Result<Self> {
        Self::new(vec![d; r])
    }

    pub fn empty() -> Self {
        Self { degrees: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn get(&self, i: usize) -> u32 {
        self.degrees[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.degrees.iter().copied()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.degrees
    }

    /// Largest degree d_1 (None when empty).
    pub fn max_degree(&self) -> Option<u32> {
        self.degrees.first().copied()
    }

    /// Smallest degree d_r (None when empty).
    pub fn min_degree(&self) -> Option<u32> {
        self.degrees.last().copied()
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.degrees.iter().map(|d| d.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Coefficients of `numerator / denominator` as a formal power series.
///
/// Exact integer arithmetic when the denominator's constant term is a unit;
/// otherwise exact rationals internally, erroring if any emitted coefficient
/// is non-integral.
pub fn expand_rational(
    numerator: &[BigInt],
    denominator: &[BigInt],
    precision: usize,
) -> Result<TruncatedSeries> {
    let den0 = denominator.first().cloned().unwrap_or_else(BigInt::zero);
    if den0.is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    let num_at = |i: usize| numerator.get(i).cloned().unwrap_or_else(BigInt::zero);

    if den0.clone().abs().is_one() {
        let mut coeffs: Vec<BigInt> = Vec::with_capacity(precision + 1);
        for t in 0..=precision {
            let mut acc = num_at(t);
            for (j, dj) in denominator.iter().enumerate().skip(1).take(t) {
                if !dj.is_zero() {
                    acc -= dj * &coeffs[t - j];
                }
            }
            // den0 is +-1, so this stays integral.
            coeffs.push(if den0.is_one() { acc } else { -acc });
        }
        return Ok(TruncatedSeries::from_coeffs(coeffs));
    }

    let den0q = BigRational::from_integer(den0);
    let mut coeffs: Vec<BigRational> = Vec::with_capacity(precision + 1);
    let mut out: Vec<BigInt> = Vec::with_capacity(precision + 1);
    for t in 0..=precision {
        let mut acc = BigRational::from_integer(num_at(t));
        for (j, dj) in denominator.iter().enumerate().skip(1).take(t) {
            if !dj.is_zero() {
                acc -= BigRational::from_integer(dj.clone()) * &coeffs[t - j];
            }
        }
        let c = acc / &den0q;
        if !c.is_integer() {
            return Err(Error::NonIntegralCoefficient { degree: t });
        }
        out.push(c.to_integer());
        coeffs.push(c);
    }
    Ok(TruncatedSeries::from_coeffs(out))
}

/// Product of two integer polynomials.
pub fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return vec![BigInt::zero()];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// The polynomial 1 - z^d.
pub fn one_minus_z_pow(d: u32) -> Vec<BigInt> {
    let mut p = vec![BigInt::zero(); d as usize + 1];
    p[0] = BigInt::one();
    p[d as usize] = -BigInt::one();
    p
}

/// Product of (1 - z^{d_i}) over a degree sequence.
pub fn numerator_product(degrees: &DegreeSequence) -> Vec<BigInt> {
    let mut p = vec![BigInt::one()];
    for d in degrees.iter() {
        p = poly_mul(&p, &one_minus_z_pow(d));
    }
    p
}

/// The polynomial (1 + z)^n.
pub fn one_plus_z_pow(n: u32) -> Vec<BigInt> {
    let mut p = vec![BigInt::one()];
    for _ in 0..n {
        p = poly_mul(&p, &[BigInt::one(), BigInt::one()]);
    }
    p
}

/// The polynomial (1 - z)^n.
pub fn one_minus_z_pow_n(n: u32) -> Vec<BigInt> {
    let mut p = vec![BigInt::one()];
    for _ in 0..n {
        p = poly_mul(&p, &[BigInt::one(), -BigInt::one()]);
    }
    p
}

/// Conjectured minimal series for r generic forms in n commuting variables:
/// the truncation of prod (1 - z^{d_i}) / (1 - z)^n.
pub fn froberg_series(n: u32, degrees: &DegreeSequence, precision: usize) -> TruncatedSeries {
    assert!(n >= 1);
    let num = numerator_product(degrees);
    let den = one_minus_z_pow_n(n);
    expand_rational(&num, &den, precision)
        .expect("unit constant term")
        .truncate_plus()
}

/// Same expansion without the truncation operator (the "raw" conjectural
/// rational function).
pub fn froberg_series_raw(n: u32, degrees: &DegreeSequence, precision: usize) -> TruncatedSeries {
    assert!(n >= 1);
    let num = numerator_product(degrees);
    let den = one_minus_z_pow_n(n);
    expand_rational(&num, &den, precision).expect("unit constant term")
}

/// Lower bound for quotients of the free associative algebra:
/// the truncation of (1 - nz + sum z^{d_i})^{-1}.
pub fn anick_series(n: u32, degrees: &DegreeSequence, precision: usize) -> TruncatedSeries {
    anick_series_raw(n, degrees, precision).truncate_plus()
}

/// Untruncated expansion of (1 - nz + sum z^{d_i})^{-1}.
pub fn anick_series_raw(n: u32, degrees: &DegreeSequence, precision: usize) -> TruncatedSeries {
    assert!(n >= 1);
    let dmax = degrees.max_degree().unwrap_or(0) as usize;
    let mut den = vec![BigInt::zero(); dmax.max(1) + 1];
    den[0] = BigInt::one();
    den[1] = -BigInt::from(n);
    for d in degrees.iter() {
        den[d as usize] += BigInt::one();
    }
    expand_rational(&[BigInt::one()], &den, precision).expect("unit constant term")
}

/// Expected series for generic quotients of the exterior algebra:
/// the truncation of prod (1 - z^{d_i}) * (1 + z)^n.
pub fn exterior_expected_series(n: u32, degrees: &DegreeSequence, precision: usize) -> TruncatedSeries {
    assert!(n >= 1);
    let poly = poly_mul(&numerator_product(degrees), &one_plus_z_pow(n));
    let mut coeffs = poly;
    coeffs.resize(precision + 1, BigInt::zero());
    coeffs.truncate(precision + 1);
    TruncatedSeries::from_coeffs(coeffs).truncate_plus()
}

/// Sharp upper bound for the Hilbert series of k[x,y]/(f_1,...,f_r) with a
/// minimally generated ideal of degrees d_1 >= ... >= d_r:
/// (1 + z + ... + z^{d_r - 1} - (z^{d_{r-1}} + ... + z^{d_1})) / (1 - z).
///
/// No truncation is applied; for d_r >= r - 1 the expansion is already a
/// genuine series.
pub fn max_series_two_vars(degrees: &DegreeSequence, precision: usize) -> TruncatedSeries {
    assert!(!degrees.is_empty(), "need at least one generator degree");
    let r = degrees.len();
    let d_r = degrees.get(r - 1) as usize;
    let d_max = degrees.get(0) as usize;
    let mut num = vec![BigInt::zero(); d_max.max(d_r) + 1];
    for c in num.iter_mut().take(d_r) {
        *c = BigInt::one();
    }
    for i in 0..r - 1 {
        num[degrees.get(i) as usize] -= BigInt::one();
    }
    let den = one_minus_z_pow_n(1);
    expand_rational(&num, &den, precision).expect("unit constant term")
}

/// Result of comparing two equal-precision series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoeffwiseOrder {
    Equal,
    /// a <= b with strict inequality somewhere.
    Less,
    /// a >= b with strict inequality somewhere.
    Greater,
    Incomparable,
}

/// Lexicographic comparison outcome (serializable mirror of
/// [`std::cmp::Ordering`]).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LexOrder {
    Less,
    Equal,
    Greater,
}

impl From<Ordering> for LexOrder {
    fn from(o: Ordering) -> Self {
        match o {
            Ordering::Less => LexOrder::Less,
            Ordering::Equal => LexOrder::Equal,
            Ordering::Greater => LexOrder::Greater,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesComparison {
    pub coeffwise: CoeffwiseOrder,
    /// Lexicographic order: first differing coefficient decides.
    pub lex: LexOrder,
    /// First degree where the series differ.
    pub first_divergence: Option<usize>,
}

impl SeriesComparison {
    pub fn is_equal(&self) -> bool {
        self.coeffwise == CoeffwiseOrder::Equal
    }

    /// a <= b coefficientwise (including equality).
    pub fn is_le(&self) -> bool {
        matches!(self.coeffwise, CoeffwiseOrder::Equal | CoeffwiseOrder::Less)
    }

    /// a >= b coefficientwise (including equality).
    pub fn is_ge(&self) -> bool {
        matches!(self.coeffwise, CoeffwiseOrder::Equal | CoeffwiseOrder::Greater)
    }
}

/// Compare two series of equal precision: coefficientwise order (or
/// incomparability), lexicographic order, and first divergence degree.
pub fn compare_series(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<SeriesComparison> {
    if a.precision() != b.precision() {
        return Err(Error::PrecisionMismatch { left: a.precision(), right: b.precision() });
    }
    let mut some_lt = false;
    let mut some_gt = false;
    let mut first_divergence = None;
    let mut lex = LexOrder::Equal;
    for i in 0..=a.precision() {
        match a.coeff(i).cmp(b.coeff(i)) {
            Ordering::Less => {
                some_lt = true;
                if first_divergence.is_none() {
                    first_divergence = Some(i);
                    lex = LexOrder::Less;
                }
            }
            Ordering::Greater => {
                some_gt = true;
                if first_divergence.is_none() {
                    first_divergence = Some(i);
                    lex = LexOrder::Greater;
                }
            }
            Ordering::Equal => {}
        }
    }
    let coeffwise = match (some_lt, some_gt) {
        (false, false) => CoeffwiseOrder::Equal,
        (true, false) => CoeffwiseOrder::Less,
        (false, true) => CoeffwiseOrder::Greater,
        (true, true) => CoeffwiseOrder::Incomparable,
    };
    Ok(SeriesComparison { coeffwise, lex, first_divergence })
}

/// Default engine degree bound for a given expected series: two degrees past
/// the point where it settles to zero, else `cap`.
pub fn suggested_max_degree(expected: &TruncatedSeries, cap: usize) -> usize {
    match expected.settles_to_zero_at() {
        Some(v) => (v + 2).min(cap),
        None => cap,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(vals: &[i64]) -> TruncatedSeries {
        TruncatedSeries::from_i64(vals)
    }

    fn degs(d: &[u32]) -> DegreeSequence {
        DegreeSequence::new(d.to_vec()).unwrap()
    }

    #[test]
    fn truncate_plus_all_nonnegative_is_identity() {
        assert_eq!(s(&[1, 3, 5]).truncate_plus(), s(&[1, 3, 5]));
    }

    #[test]
    fn truncate_plus_cuts_at_first_negative() {
        assert_eq!(s(&[1, -1, 5]).truncate_plus(), s(&[1, 0, 0]));
    }

    #[test]
    fn truncate_plus_lets_zeros_through() {
        assert_eq!(s(&[1, 2, 0, -2, -1]).truncate_plus(), s(&[1, 2, 0, 0, 0]));
    }

    #[test]
    fn expand_rational_geometric_derivative() {
        // 1/(1-z)^2 = 1 + 2z + 3z^2 + ...
        let got = expand_rational(
            &[BigInt::one()],
            &[BigInt::from(1), BigInt::from(-2), BigInt::from(1)],
            4,
        )
        .unwrap();
        assert_eq!(got, s(&[1, 2, 3, 4, 5]));
    }

    #[test]
    fn expand_rational_linear_recurrence() {
        // 1/(1-4z+3z^2): c_t = 4 c_{t-1} - 3 c_{t-2}, checked against the
        // recurrence computed independently here.
        let got = expand_rational(
            &[BigInt::one()],
            &[BigInt::from(1), BigInt::from(-4), BigInt::from(3)],
            5,
        )
        .unwrap();
        let mut oracle = vec![1i64, 4];
        for t in 2..=5 {
            let c = 4 * oracle[t - 1] - 3 * oracle[t - 2];
            oracle.push(c);
        }
        assert_eq!(got, s(&oracle));
        assert_eq!(got, s(&[1, 4, 13, 40, 121, 364]));
    }

    #[test]
    fn expand_rational_partial_sums() {
        // (1 + z - z^3)/(1-z): partial sums of the numerator coefficients.
        let num = [BigInt::from(1), BigInt::from(1), BigInt::from(0), BigInt::from(-1)];
        let got = expand_rational(&num, &[BigInt::from(1), BigInt::from(-1)], 5).unwrap();
        let mut acc = 0i64;
        let oracle: Vec<i64> = (0..=5)
            .map(|t| {
                acc += [1, 1, 0, -1].get(t).copied().unwrap_or(0);
                acc
            })
            .collect();
        assert_eq!(got, s(&oracle));
        assert_eq!(got, s(&[1, 2, 2, 1, 1, 1]));
    }

    #[test]
    fn expand_rational_rejects_zero_constant_term() {
        let err = expand_rational(&[BigInt::one()], &[BigInt::zero(), BigInt::one()], 3);
        assert!(matches!(err, Err(Error::ZeroConstantTerm)));
    }

    #[test]
    fn expand_rational_nonunit_denominator() {
        // 2/(2 - 2z) = 1/(1-z) is integral even though den(0) = 2.
        let got =
            expand_rational(&[BigInt::from(2)], &[BigInt::from(2), BigInt::from(-2)], 3).unwrap();
        assert_eq!(got, s(&[1, 1, 1, 1]));
        // 1/(2 - z) is not.
        let err = expand_rational(&[BigInt::one()], &[BigInt::from(2), BigInt::from(-1)], 3);
        assert!(matches!(err, Err(Error::NonIntegralCoefficient { degree: 0 })));
    }

    #[test]
    fn froberg_no_generators_gives_binomials() {
        assert_eq!(froberg_series(3, &DegreeSequence::empty(), 3), s(&[1, 3, 6, 10]));
    }

    #[test]
    fn froberg_three_quadrics_two_vars() {
        // (1-z^2)^3/(1-z)^2 = 1 + 2z - 2z^3 - z^4, truncated at the first
        // negative coefficient.
        assert_eq!(froberg_series(2, &degs(&[2, 2, 2]), 4), s(&[1, 2, 0, 0, 0]));
    }

    #[test]
    fn froberg_four_quadrics_three_vars() {
        assert_eq!(froberg_series(3, &degs(&[2, 2, 2, 2]), 4), s(&[1, 3, 2, 0, 0]));
    }

    #[test]
    fn anick_one_quadric_two_vars() {
        assert_eq!(anick_series(2, &degs(&[2]), 4), s(&[1, 2, 3, 4, 5]));
    }

    #[test]
    fn anick_three_quadrics_four_vars() {
        assert_eq!(anick_series(4, &degs(&[2, 2, 2]), 4), s(&[1, 4, 13, 40, 121]));
    }

    #[test]
    fn anick_truncates_one_var() {
        // 1/(1 - z + z^2) = 1 + z + 0z^2 - z^3 - ...
        assert_eq!(anick_series(1, &degs(&[2]), 4), s(&[1, 1, 0, 0, 0]));
    }

    #[test]
    fn exterior_expected_examples() {
        assert_eq!(exterior_expected_series(3, &degs(&[2]), 3), s(&[1, 3, 2, 0]));
        assert_eq!(exterior_expected_series(5, &degs(&[2, 2]), 5), s(&[1, 5, 8, 0, 0, 0]));
        assert_eq!(exterior_expected_series(2, &DegreeSequence::empty(), 2), s(&[1, 2, 1]));
    }

    #[test]
    fn max_series_examples() {
        assert_eq!(max_series_two_vars(&degs(&[2, 2]), 4), s(&[1, 2, 1, 1, 1]));
        assert_eq!(max_series_two_vars(&degs(&[3, 2]), 5), s(&[1, 2, 2, 1, 1, 1]));
        assert_eq!(max_series_two_vars(&degs(&[5]), 6), s(&[1, 2, 3, 4, 5, 5, 5]));
    }

    #[test]
    fn compare_examples() {
        let c = compare_series(&s(&[1, 2, 1, 1]), &s(&[1, 2, 1, 1])).unwrap();
        assert!(c.is_equal());
        assert_eq!(c.first_divergence, None);

        let c = compare_series(&s(&[1, 2, 0, 0]), &s(&[1, 2, 2, 1])).unwrap();
        assert_eq!(c.coeffwise, CoeffwiseOrder::Less);
        assert_eq!(c.first_divergence, Some(2));

        let c = compare_series(&s(&[1, 3, 1]), &s(&[1, 2, 5])).unwrap();
        assert_eq!(c.coeffwise, CoeffwiseOrder::Incomparable);
        assert_eq!(c.lex, LexOrder::Greater);
        assert_eq!(c.first_divergence, Some(1));
    }

    #[test]
    fn compare_rejects_precision_mismatch() {
        assert!(compare_series(&s(&[1, 2]), &s(&[1, 2, 3])).is_err());
    }

    #[test]
    fn display_matches_cli_rendering() {
        assert_eq!(froberg_series(3, &degs(&[2, 2, 2, 2]), 4).to_string(), "1 + 3z + 2z^2");
        assert_eq!(s(&[0, 0, 0]).to_string(), "0");
        assert_eq!(s(&[1, -1, 1]).to_string(), "1 - z + z^2");
    }

    #[test]
    fn serde_round_trip() {
        let a = froberg_series(3, &degs(&[3, 2]), 8);
        let json = serde_json::to_string(&a).unwrap();
        assert!(json.contains("\"precision\":8"));
        let b: TruncatedSeries = serde_json::from_str(&json).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn suggested_max_degree_policy() {
        // [1,3,2,0,0...] settles at degree 3 -> bound 5.
        let e = froberg_series(3, &degs(&[2, 2, 2, 2]), 8);
        assert_eq!(suggested_max_degree(&e, 64), 5);
        // A complete intersection with r < n never settles -> cap.
        let e = froberg_series(3, &degs(&[2]), 8);
        assert_eq!(suggested_max_degree(&e, 12), 12);
    }
}
