//! Exact bigraded series and the two-variable truncation operator, for
//! quotients of the coordinate ring of P^m x P^n.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::series::CoeffwiseOrder;

/// Integer series in two variables known on the rectangle
/// `[0, prec_x] x [0, prec_y]`. Row-major: `coeffs[i][j]` is the coefficient
/// of x^i y^j.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedBiSeries {
    coeffs: Vec<Vec<BigInt>>,
}

impl TruncatedBiSeries {
    pub fn from_coeffs(coeffs: Vec<Vec<BigInt>>) -> Self {
        assert!(!coeffs.is_empty() && !coeffs[0].is_empty());
        let cols = coeffs[0].len();
        assert!(coeffs.iter().all(|r| r.len() == cols), "ragged coefficient array");
        Self { coeffs }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_coeffs(
            rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect(),
        )
    }

    pub fn zero(prec_x: usize, prec_y: usize) -> Self {
        Self { coeffs: vec![vec![BigInt::zero(); prec_y + 1]; prec_x + 1] }
    }

    pub fn prec_x(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn prec_y(&self) -> usize {
        self.coeffs[0].len() - 1
    }

    pub fn coeff(&self, i: usize, j: usize) -> &BigInt {
        &self.coeffs[i][j]
    }

    pub fn set_coeff(&mut self, i: usize, j: usize, v: BigInt) {
        self.coeffs[i][j] = v;
    }

    /// Two-variable truncation: keep a cell when every cell below it in the
    /// componentwise order passes; zero it otherwise. `strict` demands
    /// strictly positive cells (the literal bigraded definition); with
    /// `strict = false` zeros pass, as in the one-variable operator.
    pub fn truncate_plus(&self, strict: bool) -> Self {
        let (px, py) = (self.prec_x(), self.prec_y());
        let mut alive = vec![vec![false; py + 1]; px + 1];
        let mut out = Self::zero(px, py);
        for i in 0..=px {
            for j in 0..=py {
                let c = &self.coeffs[i][j];
                let pass = if strict { c.is_positive() } else { !c.is_negative() };
                let above = (i == 0 || alive[i - 1][j]) && (j == 0 || alive[i][j - 1]);
                alive[i][j] = pass && above;
                if alive[i][j] {
                    out.coeffs[i][j] = c.clone();
                }
            }
        }
        out
    }

    /// Equality / coefficientwise order plus the first divergent cell in
    /// row-major order.
    pub fn compare(&self, other: &Self) -> (CoeffwiseOrder, Option<(usize, usize)>) {
        assert_eq!(self.prec_x(), other.prec_x());
        assert_eq!(self.prec_y(), other.prec_y());
        let mut some_lt = false;
        let mut some_gt = false;
        let mut first = None;
        for i in 0..=self.prec_x() {
            for j in 0..=self.prec_y() {
                match self.coeffs[i][j].cmp(&other.coeffs[i][j]) {
                    std::cmp::Ordering::Less => {
                        some_lt = true;
                        first.get_or_insert((i, j));
                    }
                    std::cmp::Ordering::Greater => {
                        some_gt = true;
                        first.get_or_insert((i, j));
                    }
                    std::cmp::Ordering::Equal => {}
                }
            }
        }
        let ord = match (some_lt, some_gt) {
            (false, false) => CoeffwiseOrder::Equal,
            (true, false) => CoeffwiseOrder::Less,
            (false, true) => CoeffwiseOrder::Greater,
            (true, true) => CoeffwiseOrder::Incomparable,
        };
        (ord, first)
    }
}

impl fmt::Display for TruncatedBiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..=self.prec_x() {
            let row: Vec<String> = self.coeffs[i].iter().map(|c| c.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Serialize for TruncatedBiSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            prec_x: usize,
            prec_y: usize,
            coeffs: Vec<Vec<String>>,
        }
        Repr {
            prec_x: self.prec_x(),
            prec_y: self.prec_y(),
            coeffs: self
                .coeffs
                .iter()
                .map(|r| r.iter().map(|c| c.to_string()).collect())
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TruncatedBiSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            prec_x: usize,
            prec_y: usize,
            coeffs: Vec<Vec<String>>,
        }
        let repr = Repr::deserialize(deserializer)?;
        if repr.coeffs.len() != repr.prec_x + 1
            || repr.coeffs.iter().any(|r| r.len() != repr.prec_y + 1)
        {
            return Err(D::Error::custom("coefficient array shape mismatch"));
        }
        let coeffs = repr
            .coeffs
            .iter()
            .map(|row| {
                row.iter()
                    .map(|s| s.parse::<BigInt>().map_err(|e| D::Error::custom(e.to_string())))
                    .collect()
            })
            .collect::<std::result::Result<Vec<Vec<_>>, _>>()?;
        Ok(Self::from_coeffs(coeffs))
    }
}

/// Binomial coefficient C(n, k) as a big integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Conjectured bigraded series for r generic forms of bidegrees (d_i, e_i)
/// in the coordinate ring of P^m x P^n: the bigraded truncation of
/// prod (1 - x^{d_i} y^{e_i}) / ((1-x)^{m+1} (1-y)^{n+1}).
pub fn bigraded_froberg_series(
    m: u32,
    n: u32,
    bidegrees: &[(u32, u32)],
    prec_x: usize,
    prec_y: usize,
    strict: bool,
) -> TruncatedBiSeries {
    bigraded_froberg_raw(m, n, bidegrees, prec_x, prec_y).truncate_plus(strict)
}

/// Same expansion without the truncation operator.
pub fn bigraded_froberg_raw(
    m: u32,
    n: u32,
    bidegrees: &[(u32, u32)],
    prec_x: usize,
    prec_y: usize,
) -> TruncatedBiSeries {
    assert!(m >= 1 && n >= 1);
    // Numerator prod (1 - x^{d_i} y^{e_i}) as a dense bivariate polynomial.
    let dx: usize = bidegrees.iter().map(|&(d, _)| d as usize).sum();
    let dy: usize = bidegrees.iter().map(|&(_, e)| e as usize).sum();
    let mut num = vec![vec![BigInt::zero(); dy + 1]; dx + 1];
    num[0][0] = BigInt::one();
    let mut used_x = 0usize;
    let mut used_y = 0usize;
    for &(d, e) in bidegrees {
        let (d, e) = (d as usize, e as usize);
        // Multiply in place by (1 - x^d y^e), highest cells first.
        for i in (0..=used_x).rev() {
            for j in (0..=used_y).rev() {
                if !num[i][j].is_zero() {
                    let v = num[i][j].clone();
                    num[i + d][j + e] -= v;
                }
            }
        }
        used_x += d;
        used_y += e;
    }
    // Divide by (1-x)^{m+1} (1-y)^{n+1}: convolve with the separable kernel
    // C(m + i, m) * C(n + j, n).
    let mut out = TruncatedBiSeries::zero(prec_x, prec_y);
    for (a, row) in num.iter().enumerate().take(prec_x + 1) {
        for (b, w) in row.iter().enumerate().take(prec_y + 1) {
            if w.is_zero() {
                continue;
            }
            for i in a..=prec_x {
                let cx = binomial(m as u64 + (i - a) as u64, m as u64);
                for j in b..=prec_y {
                    let cy = binomial(n as u64 + (j - b) as u64, n as u64);
                    let add = w * &cx * cy;
                    let cur = out.coeff(i, j) + add;
                    out.set_coeff(i, j, cur);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn truncation_keeps_all_positive_arrays() {
        let a = TruncatedBiSeries::from_i64(&[&[1, 2], &[3, 4]]);
        assert_eq!(a.truncate_plus(true), a);
        assert_eq!(a.truncate_plus(false), a);
    }

    #[test]
    fn truncation_zeroes_cone_above_negative() {
        let a = TruncatedBiSeries::from_i64(&[&[1, 2], &[-1, 7]]);
        let b = a.truncate_plus(true);
        assert_eq!(b, TruncatedBiSeries::from_i64(&[&[1, 2], &[0, 0]]));
        assert_eq!(a.truncate_plus(false), b);
    }

    #[test]
    fn strict_flag_controls_zero_handling() {
        // a[1][0] = 0, everything else positive.
        let a = TruncatedBiSeries::from_i64(&[&[1, 2, 3], &[0, 5, 6], &[7, 8, 9]]);
        let strict = a.truncate_plus(true);
        // Every cell >= (1,0) is zeroed, including positive ones.
        assert_eq!(strict, TruncatedBiSeries::from_i64(&[&[1, 2, 3], &[0, 0, 0], &[0, 0, 0]]));
        // Non-strict: zeros pass, nothing is negative, so unchanged.
        assert_eq!(a.truncate_plus(false), a);
    }

    #[test]
    fn free_bigraded_ring_dimensions() {
        let s = bigraded_froberg_series(1, 1, &[], 4, 4, true);
        for i in 0..=4usize {
            for j in 0..=4usize {
                assert_eq!(s.coeff(i, j), &BigInt::from(((i + 1) * (j + 1)) as i64));
            }
        }
    }

    #[test]
    fn one_form_of_bidegree_one_one() {
        // (1 - xy)/((1-x)^2 (1-y)^2): coefficient (i+1)(j+1) - ij = i+j+1,
        // all positive, so the truncation changes nothing.
        let s = bigraded_froberg_series(1, 1, &[(1, 1)], 5, 5, true);
        let raw = bigraded_froberg_raw(1, 1, &[(1, 1)], 5, 5);
        assert_eq!(s, raw);
        for i in 0..=5usize {
            for j in 0..=5usize {
                assert_eq!(s.coeff(i, j), &BigInt::from((i + j + 1) as i64));
            }
        }
    }

    #[test]
    fn serde_round_trip() {
        let a = bigraded_froberg_series(1, 2, &[(2, 1), (2, 1)], 3, 4, true);
        let json = serde_json::to_string(&a).unwrap();
        let b: TruncatedBiSeries = serde_json::from_str(&json).unwrap();
        assert_eq!(a, b);
    }
}
