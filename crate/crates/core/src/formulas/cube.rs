use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

use super::combinatorics::{binom, closed_sqrt_form, y};
use super::fixtures::seed;
use super::poly::{is_log_concave, is_unimodal, IntPolynomial};
use super::sequences::{fibonacci, lucas};
use super::series::{BiPoly, RationalBivariateSeries};
use super::PolyKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CubeMethod {
    Recurrence,
    ClosedSqrt,
    LucasTriangle,
    Genfunc,
}

impl CubeMethod {
    pub const ALL: [CubeMethod; 4] = [
        CubeMethod::Recurrence,
        CubeMethod::ClosedSqrt,
        CubeMethod::LucasTriangle,
        CubeMethod::Genfunc,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CubeMethod::Recurrence => "recurrence",
            CubeMethod::ClosedSqrt => "closed_sqrt",
            CubeMethod::LucasTriangle => "lucas_triangle",
            CubeMethod::Genfunc => "genfunc",
        }
    }
}

impl FromStr for CubeMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown cube method {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CubeCountMethod {
    TriangleSum,
    FirstFour,
    GenfuncK,
}

impl CubeCountMethod {
    pub const ALL: [CubeCountMethod; 3] =
        [CubeCountMethod::TriangleSum, CubeCountMethod::FirstFour, CubeCountMethod::GenfuncK];

    pub fn name(self) -> &'static str {
        match self {
            CubeCountMethod::TriangleSum => "triangle_sum",
            CubeCountMethod::FirstFour => "first_four",
            CubeCountMethod::GenfuncK => "genfunc_k",
        }
    }
}

impl FromStr for CubeCountMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown cube-count method {s:?}")))
    }
}

/// Cube polynomial `Q_n(x)` of `Ω_n`.
pub fn cube_poly(n: usize, method: CubeMethod) -> Result<IntPolynomial> {
    if n < 2 && method != CubeMethod::Recurrence && method != CubeMethod::Genfunc {
        return Ok(seed(PolyKind::Cube, n));
    }
    match method {
        CubeMethod::Recurrence => {
            let mut q: Vec<IntPolynomial> = (0..=n.min(3)).map(|i| seed(PolyKind::Cube, i)).collect();
            let one_x = IntPolynomial::from_i64(&[1, 1]);
            for m in 4..=n {
                q.push(&q[m - 1] + &(&one_x * &q[m - 2]));
            }
            Ok(q.swap_remove(n))
        }
        CubeMethod::ClosedSqrt => closed_sqrt_form(n, &IntPolynomial::from_i64(&[5, 4])),
        CubeMethod::LucasTriangle => {
            let one_x = IntPolynomial::from_i64(&[1, 1]);
            let mut acc = IntPolynomial::zero();
            for j in 0..=n / 2 {
                let c = y((n - j) as i64, j as i64);
                acc = &acc + &one_x.pow(j).scale(&c);
            }
            Ok(acc)
        }
        CubeMethod::Genfunc => cube_genfunc().coefficient(n),
    }
}

/// `Σ Q_n y^n = (2 - y) / (1 - y - (x+1)y²) + (1+x)y - 1`.
pub fn cube_genfunc() -> RationalBivariateSeries {
    let den = BiPoly::from_terms(&[(0, 0, 1), (0, 1, -1), (0, 2, -1), (1, 2, -1)]);
    RationalBivariateSeries::new(BiPoly::in_y(&[2, -1]), den)
        .expect("constant term 1")
        .plus(BiPoly::from_terms(&[(0, 0, -1), (0, 1, 1), (1, 1, 1)]))
}

/// `Σ_n q_{n,k} y^n = (2 - y) y^{2k} / (1 - y - y²)^{k+1} + y·[k = 1]` for
/// `k >= 1`.
pub fn cube_count_genfunc(k: usize) -> Result<RationalBivariateSeries> {
    if k == 0 {
        return Err(Error::InvalidArgument("the fixed-k cube series needs k >= 1".into()));
    }
    let mut num = vec![0i64; 2 * k + 2];
    num[2 * k] = 2;
    num[2 * k + 1] = -1;
    let s = RationalBivariateSeries::new(BiPoly::in_y(&num), BiPoly::in_y(&[1, -1, -1]).pow(k + 1))
        .expect("constant term 1");
    Ok(if k == 1 { s.plus(BiPoly::in_y(&[0, 1])) } else { s })
}

/// Number of induced `k`-cubes of `Ω_n`.
pub fn cube_count(n: usize, k: usize, method: CubeCountMethod) -> Result<BigInt> {
    match method {
        CubeCountMethod::TriangleSum => {
            if n < 2 {
                return Ok(seed(PolyKind::Cube, n).coeff(k));
            }
            Ok((k..=n / 2)
                .map(|j| y((n - j) as i64, j as i64) * binom(j as i64, k as i64))
                .sum())
        }
        CubeCountMethod::FirstFour => first_four(n, k),
        CubeCountMethod::GenfuncK => Ok(cube_count_genfunc(k)?.coefficient(n)?.coeff(0)),
    }
}

fn first_four(n: usize, k: usize) -> Result<BigInt> {
    let min_n = match k {
        0 | 1 => 2,
        2 => 4,
        3 => 6,
        _ => return Err(Error::InvalidArgument(format!("closed counts exist for k <= 3, got {k}"))),
    };
    if n < min_n {
        return Err(Error::InvalidArgument(format!("the k = {k} count needs n >= {min_n}")));
    }
    let nb = BigInt::from(n);
    let exact = |v: BigInt, d: i64| -> Result<BigInt> {
        let d = BigInt::from(d);
        if (&v % &d).is_zero() {
            Ok(v / d)
        } else {
            Err(Error::InexactDivision(format!("q_({n},{k}) numerator not divisible by {d}")))
        }
    };
    match k {
        0 => Ok(lucas(n)),
        1 => Ok(&nb * fibonacci(n - 1)),
        2 => exact(
            BigInt::from(2) * &nb * fibonacci(n - 3) + (&nb - 3) * &nb * lucas(n - 2),
            10,
        ),
        _ => exact(
            BigInt::from(12) * &nb * fibonacci(n - 5)
                + BigInt::from(6) * (&nb - 5) * &nb * lucas(n - 4)
                + BigInt::from(5) * (&nb * &nb - BigInt::from(9) * &nb + 20) * &nb * fibonacci(n - 3),
            150,
        ),
    }
}

/// `(Σ_k q_{n,k} (-1)^k, Σ_k k q_{n,k} (-1)^k)` for `n >= 2`. The first
/// is 1 and the second is `-n`.
pub fn cube_alternating_sums(n: usize) -> Result<(BigInt, BigInt)> {
    if n < 2 {
        return Err(Error::InvalidArgument("alternating sums need n >= 2".into()));
    }
    let q = cube_poly(n, CubeMethod::Recurrence)?;
    let mut first = BigInt::zero();
    let mut second = BigInt::zero();
    for (k, c) in q.coeffs().iter().enumerate() {
        let signed = if k % 2 == 0 { c.clone() } else { -c };
        second += &signed * BigInt::from(k);
        first += signed;
    }
    Ok((first, second))
}

/// `x_{n,k} = -(5 + tan²((2k-1)π / 2n)) / 4` for `k = 1..=⌊n/2⌋`.
pub fn cube_roots(n: usize) -> Result<Vec<f64>> {
    roots(n, 5.0)
}

pub(crate) fn roots(n: usize, shift: f64) -> Result<Vec<f64>> {
    if n < 2 {
        return Err(Error::InvalidArgument("root formulas need n >= 2".into()));
    }
    Ok((1..=n / 2)
        .map(|k| {
            let a = (2 * k - 1) as f64 * std::f64::consts::PI / (2 * n) as f64;
            -(shift + a.tan().powi(2)) / 4.0
        })
        .collect())
}

/// Relative tolerance for the root checks: `|P(r)| <= ROOT_TOLERANCE · Σ|c_i| |r|^i`.
pub const ROOT_TOLERANCE: f64 = 1e-6;

/// Worst relative residual `|P(r)| / Σ|c_i||r|^i` over the given roots.
pub fn worst_root_residual(p: &IntPolynomial, roots: &[f64]) -> f64 {
    roots
        .iter()
        .map(|&r| p.eval_f64(r).abs() / p.abs_eval_f64(r))
        .fold(0.0, f64::max)
}

/// Log-concavity and unimodality of the coefficients of `Q_n`.
pub fn cube_coefficients_log_concave(n: usize) -> Result<bool> {
    let q = cube_poly(n, CubeMethod::Recurrence)?;
    Ok(is_log_concave(q.coeffs()) && is_unimodal(q.coeffs()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn listed_and_agreeing() {
        for method in CubeMethod::ALL {
            for n in 0..=5 {
                assert_eq!(cube_poly(n, method).unwrap(), seed(PolyKind::Cube, n), "{method:?} {n}");
            }
            assert_eq!(cube_poly(9, method).unwrap(), cube_poly(9, CubeMethod::Recurrence).unwrap());
        }
    }

    #[test]
    fn counts() {
        assert_eq!(cube_count(4, 2, CubeCountMethod::FirstFour).unwrap(), BigInt::from(2));
        for method in CubeCountMethod::ALL {
            assert_eq!(
                cube_count(6, 3, method).unwrap(),
                cube_count(6, 3, CubeCountMethod::TriangleSum).unwrap()
            );
        }
        assert!(cube_count(8, 5, CubeCountMethod::TriangleSum).unwrap().is_zero());
        assert!(cube_count(3, 2, CubeCountMethod::FirstFour).is_err());
        assert!(cube_count(5, 0, CubeCountMethod::GenfuncK).is_err());
    }

    #[test]
    fn alternating() {
        assert_eq!(cube_alternating_sums(4).unwrap(), (BigInt::from(1), BigInt::from(-4)));
        assert_eq!(cube_alternating_sums(2).unwrap(), (BigInt::from(1), BigInt::from(-2)));
    }

    #[test]
    fn roots_vanish() {
        let r = cube_roots(4).unwrap();
        assert!((r[0] + 1.292_893_2).abs() < 1e-6 && (r[1] + 2.707_106_8).abs() < 1e-6);
        assert_eq!(cube_roots(2).unwrap(), vec![-1.5]);
        let q = cube_poly(4, CubeMethod::Recurrence).unwrap();
        assert!(worst_root_residual(&q, &r) < ROOT_TOLERANCE);
        assert!(cube_coefficients_log_concave(10).unwrap());
    }
}
