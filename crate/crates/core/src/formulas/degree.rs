use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};

use super::combinatorics::{binom, binom_ext};
use super::fixtures::seed;
use super::poly::IntPolynomial;
use super::series::{BiPoly, RationalBivariateSeries};
use super::PolyKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DegreeMethod {
    Recurrence,
    ViaGamma,
    Genfunc,
    ClosedBinomial,
}

impl DegreeMethod {
    pub const ALL: [DegreeMethod; 4] = [
        DegreeMethod::Recurrence,
        DegreeMethod::ViaGamma,
        DegreeMethod::Genfunc,
        DegreeMethod::ClosedBinomial,
    ];

    pub fn name(self) -> &'static str {
        match self {
            DegreeMethod::Recurrence => "recurrence",
            DegreeMethod::ViaGamma => "via_gamma",
            DegreeMethod::Genfunc => "genfunc",
            DegreeMethod::ClosedBinomial => "closed_binomial",
        }
    }
}

impl FromStr for DegreeMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown degree method {s:?}")))
    }
}

/// Smallest `n` for which the closed binomial sum holds.
pub const CLOSED_BINOMIAL_MIN_N: usize = 2;

/// Degree sequence polynomial `D_n(x)` of `Ω_n`.
pub fn degree_poly(n: usize, method: DegreeMethod) -> Result<IntPolynomial> {
    match method {
        DegreeMethod::Recurrence => {
            let mut d: Vec<IntPolynomial> = (0..=n.min(4)).map(|i| seed(PolyKind::Degree, i)).collect();
            let x_minus_x2 = IntPolynomial::from_i64(&[0, 1, -1]);
            for m in 5..=n {
                let next = &(&d[m - 1] + &d[m - 2]).shift(1) + &(&x_minus_x2 * &d[m - 3]);
                d.push(next);
            }
            Ok(d.swap_remove(n))
        }
        DegreeMethod::ViaGamma => Ok(if n < 3 {
            seed(PolyKind::Degree, n)
        } else {
            &gamma_degree_poly(n - 1) + &gamma_degree_poly(n - 3).shift(2)
        }),
        DegreeMethod::Genfunc => degree_genfunc().coefficient(n),
        DegreeMethod::ClosedBinomial => Ok(if n < CLOSED_BINOMIAL_MIN_N {
            seed(PolyKind::Degree, n)
        } else {
            IntPolynomial::new((0..=n).map(|k| closed_binomial(n as i64, k as i64)).collect())
        }),
    }
}

/// `d_{n,k} = Σ_j C(j+1, n-k-j) (C(n-2j-1, k-j) + C(n-2j-3, k-j-2))`, with
/// the inner binomials read as [`binom_ext`]. Under the strict convention the
/// sum misses vertices whenever an inner top argument is negative with a
/// zero bottom, e.g. `d_{4,2} = 2` instead of 3.
fn closed_binomial(n: i64, k: i64) -> BigInt {
    (0..=k)
        .map(|j| binom(j + 1, n - k - j) * (binom_ext(n - 2 * j - 1, k - j) + binom_ext(n - 2 * j - 3, k - j - 2)))
        .sum()
}

/// The closed sum under the strict convention `C(a, b) = 0` outside
/// `0 <= b <= a`.
pub fn closed_binomial_strict(n: usize, k: usize) -> BigInt {
    let (n, k) = (n as i64, k as i64);
    (0..=k)
        .map(|j| binom(j + 1, n - k - j) * (binom(n - 2 * j - 1, k - j) + binom(n - 2 * j - 3, k - j - 2)))
        .sum()
}

/// Degree sequence polynomial of the Fibonacci cube `Γ_m`, from the sum
/// `Σ_j C(m-2j, k-j) C(j+1, m-k-j+1)`, the first factor read as
/// [`binom_ext`].
pub fn gamma_degree_poly(m: usize) -> IntPolynomial {
    let m = m as i64;
    IntPolynomial::new(
        (0..=m)
            .map(|k| (0..=k).map(|j| binom_ext(m - 2 * j, k - j) * binom(j + 1, m - k - j + 1)).sum())
            .collect(),
    )
}

/// `Σ D_n y^n = (1 - xy + y)(1 + x²y²) / ((1-xy)(1-xy²) - xy³) + (2x-1)y`.
pub fn degree_genfunc() -> RationalBivariateSeries {
    let num = BiPoly::from_terms(&[(0, 0, 1), (1, 1, -1), (0, 1, 1)]).mul(&BiPoly::from_terms(&[(0, 0, 1), (2, 2, 1)]));
    let den = BiPoly::from_terms(&[(0, 0, 1), (1, 1, -1)])
        .mul(&BiPoly::from_terms(&[(0, 0, 1), (1, 2, -1)]))
        .sub(&BiPoly::from_terms(&[(1, 3, 1)]));
    RationalBivariateSeries::new(num, den)
        .expect("constant term 1")
        .plus(BiPoly::from_terms(&[(1, 1, 2), (0, 1, -1)]))
}

/// Minimum degree `⌊(n+1)/3⌋` and its multiplicity for `n = 3m-1, 3m, 3m+1`
/// with `m >= 1`: `m(m+3)/2`, `m+1`, `1`.
pub fn min_degree_law(n: usize) -> Option<(usize, BigInt)> {
    if n < 2 {
        return None;
    }
    let m = (n + 1) / 3;
    let count = match n % 3 {
        2 => BigInt::from(m * (m + 3) / 2),
        0 => BigInt::from(m + 1),
        _ => BigInt::from(1),
    };
    Some(((n + 1) / 3, count))
}

/// Maximum degree `n - 1` with multiplicity 2, for `n >= 5`.
pub fn max_degree_law(n: usize) -> Option<(usize, BigInt)> {
    (n >= 5).then(|| (n - 1, BigInt::from(2)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn listed_and_agreeing() {
        for method in DegreeMethod::ALL {
            for n in 0..=5 {
                assert_eq!(degree_poly(n, method).unwrap(), seed(PolyKind::Degree, n), "{method:?} {n}");
            }
            for n in 6..=20 {
                assert_eq!(
                    degree_poly(n, method).unwrap(),
                    degree_poly(n, DegreeMethod::Recurrence).unwrap(),
                    "{method:?} {n}"
                );
            }
        }
    }

    #[test]
    fn gamma_degrees() {
        assert_eq!(gamma_degree_poly(1), IntPolynomial::from_i64(&[0, 2]));
        assert_eq!(gamma_degree_poly(4), IntPolynomial::from_i64(&[0, 0, 5, 2, 1]));
    }

    #[test]
    fn closed_binomial_conventions() {
        assert_eq!(closed_binomial(2, 1), BigInt::from(2));
        assert_eq!(closed_binomial_strict(2, 1), BigInt::from(1));
        assert_eq!(closed_binomial_strict(4, 2), BigInt::from(2));
        assert_eq!(closed_binomial(5, 2), BigInt::from(5));
    }

    #[test]
    fn extremal_degrees() {
        for n in 2..=20 {
            let d = degree_poly(n, DegreeMethod::Recurrence).unwrap();
            let (k, c) = min_degree_law(n).unwrap();
            assert!((0..k).all(|i| d.coeff(i) == BigInt::from(0)), "n = {n}");
            assert_eq!(d.coeff(k), c, "n = {n}");
            if let Some((k, c)) = max_degree_law(n) {
                assert_eq!(d.degree(), Some(k));
                assert_eq!(d.coeff(k), c);
            }
        }
    }
}
