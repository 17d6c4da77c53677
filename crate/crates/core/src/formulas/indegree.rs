use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};

use super::combinatorics::{closed_sqrt_form, y};
use super::cube::{cube_poly, roots, CubeMethod};
use super::fixtures::seed;
use super::poly::{is_log_concave, is_unimodal, IntPolynomial};
use super::series::{BiPoly, RationalBivariateSeries};
use super::PolyKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IndegreeMethod {
    Recurrence,
    FromQ,
    Genfunc,
    ClosedY,
    Telescoped,
    ClosedSqrt,
}

impl IndegreeMethod {
    pub const ALL: [IndegreeMethod; 6] = [
        IndegreeMethod::Recurrence,
        IndegreeMethod::FromQ,
        IndegreeMethod::Genfunc,
        IndegreeMethod::ClosedY,
        IndegreeMethod::Telescoped,
        IndegreeMethod::ClosedSqrt,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IndegreeMethod::Recurrence => "recurrence",
            IndegreeMethod::FromQ => "from_q",
            IndegreeMethod::Genfunc => "genfunc",
            IndegreeMethod::ClosedY => "closed_y",
            IndegreeMethod::Telescoped => "telescoped",
            IndegreeMethod::ClosedSqrt => "closed_sqrt",
        }
    }
}

impl FromStr for IndegreeMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown indegree method {s:?}")))
    }
}

/// Indegree sequence polynomial `D⁻_n(x)` of `Ω_n`. The closed sqrt form
/// gives 1 at `n = 1`, so it is used from `n = 2`.
pub fn indegree_poly(n: usize, method: IndegreeMethod) -> Result<IntPolynomial> {
    match method {
        IndegreeMethod::Recurrence => {
            let mut d: Vec<IntPolynomial> = (0..=n.min(3)).map(|i| seed(PolyKind::Indegree, i)).collect();
            for m in 4..=n {
                d.push(&d[m - 1] + &d[m - 2].shift(1));
            }
            Ok(d.swap_remove(n))
        }
        IndegreeMethod::FromQ => Ok(cube_poly(n, CubeMethod::Recurrence)?.compose(&IntPolynomial::from_i64(&[-1, 1]))),
        IndegreeMethod::Genfunc => indegree_genfunc().coefficient(n),
        IndegreeMethod::ClosedY => Ok(if n < 2 {
            seed(PolyKind::Indegree, n)
        } else {
            IntPolynomial::new((0..=n as i64 / 2).map(|k| y(n as i64 - k, k)).collect())
        }),
        IndegreeMethod::Telescoped => Ok(IntPolynomial::new((0..=n / 2 + 1).map(|k| telescoped(n, k)).collect())),
        IndegreeMethod::ClosedSqrt => {
            if n < 2 {
                Ok(seed(PolyKind::Indegree, n))
            } else {
                closed_sqrt_form(n, &IntPolynomial::from_i64(&[1, 4]))
            }
        }
    }
}

/// `d⁻_{n,k} = Σ_{j=0}^{k} d⁻_{n-2j-1, k-j}` once `n >= 2k + 3`; below that
/// the Lucas-triangle value is used.
fn telescoped(n: usize, k: usize) -> BigInt {
    if n < 2 * k + 3 {
        return if n < 2 {
            seed(PolyKind::Indegree, n).coeff(k)
        } else {
            y((n - k) as i64, k as i64)
        };
    }
    (0..=k).map(|j| telescoped(n - 2 * j - 1, k - j)).sum()
}

/// `Σ D⁻_n y^n = (2 - y) / (1 - y - xy²) + xy - 1`.
pub fn indegree_genfunc() -> RationalBivariateSeries {
    let den = BiPoly::from_terms(&[(0, 0, 1), (0, 1, -1), (1, 2, -1)]);
    RationalBivariateSeries::new(BiPoly::in_y(&[2, -1]), den)
        .expect("constant term 1")
        .plus(BiPoly::from_terms(&[(0, 0, -1), (1, 1, 1)]))
}

/// `Σ_n d⁻_{n,k} y^n = y^{2k}(2 - y) / (1 - y)^{k+1} + y·[k = 1]` for `k >= 1`.
pub fn indegree_count_genfunc(k: usize) -> Result<RationalBivariateSeries> {
    if k == 0 {
        return Err(Error::InvalidArgument("the fixed-k indegree series needs k >= 1".into()));
    }
    let mut num = vec![0i64; 2 * k + 2];
    num[2 * k] = 2;
    num[2 * k + 1] = -1;
    let s = RationalBivariateSeries::new(BiPoly::in_y(&num), BiPoly::in_y(&[1, -1]).pow(k + 1))
        .expect("constant term 1");
    Ok(if k == 1 { s.plus(BiPoly::in_y(&[0, 1])) } else { s })
}

/// `-(1 + tan²((2k-1)π / 2n)) / 4` for `k = 1..=⌊n/2⌋`. Indices above
/// `⌊n/2⌋` repeat these values and, for odd `n`, reach `tan(π/2)`.
pub fn indegree_roots(n: usize) -> Result<Vec<f64>> {
    roots(n, 1.0)
}

pub fn indegree_coefficients_log_concave(n: usize) -> Result<bool> {
    let d = indegree_poly(n, IndegreeMethod::Recurrence)?;
    Ok(is_log_concave(d.coeffs()) && is_unimodal(d.coeffs()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formulas::cube::{worst_root_residual, ROOT_TOLERANCE};

    #[test]
    fn listed_and_agreeing() {
        for method in IndegreeMethod::ALL {
            for n in 0..=5 {
                assert_eq!(indegree_poly(n, method).unwrap(), seed(PolyKind::Indegree, n), "{method:?} {n}");
            }
            for n in 6..=20 {
                assert_eq!(
                    indegree_poly(n, method).unwrap(),
                    indegree_poly(n, IndegreeMethod::Recurrence).unwrap(),
                    "{method:?} {n}"
                );
            }
        }
        assert_eq!(indegree_poly(8, IndegreeMethod::ClosedY).unwrap().coeff(3), BigInt::from(16));
    }

    #[test]
    fn roots_vanish() {
        for n in 2..=16 {
            let d = indegree_poly(n, IndegreeMethod::Recurrence).unwrap();
            let r = indegree_roots(n).unwrap();
            assert_eq!(r.len(), n / 2);
            assert!(worst_root_residual(&d, &r) < ROOT_TOLERANCE, "n = {n}");
        }
    }

    #[test]
    fn fixed_k() {
        let s = indegree_count_genfunc(3).unwrap().expand(15).unwrap();
        for (n, c) in s.iter().enumerate() {
            assert_eq!(c.coeff(0), indegree_poly(n, IndegreeMethod::Recurrence).unwrap().coeff(3), "n = {n}");
        }
    }
}
