use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};

use super::combinatorics::y;
use super::fixtures::seed;
use super::poly::IntPolynomial;
use super::series::{BiPoly, RationalBivariateSeries};
use super::PolyKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MaximalMethod {
    Recurrence,
    Genfunc,
    ClosedY,
}

impl MaximalMethod {
    pub const ALL: [MaximalMethod; 3] = [MaximalMethod::Recurrence, MaximalMethod::Genfunc, MaximalMethod::ClosedY];

    pub fn name(self) -> &'static str {
        match self {
            MaximalMethod::Recurrence => "recurrence",
            MaximalMethod::Genfunc => "genfunc",
            MaximalMethod::ClosedY => "closed_y",
        }
    }
}

impl FromStr for MaximalMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown maximal-cube method {s:?}")))
    }
}

/// Maximal cube polynomial `H_n(x)` of `Ω_n`.
pub fn maximal_cube_poly(n: usize, method: MaximalMethod) -> Result<IntPolynomial> {
    match method {
        MaximalMethod::Recurrence => {
            let mut h: Vec<IntPolynomial> = (0..=n.min(4)).map(|i| seed(PolyKind::Maximal, i)).collect();
            for m in 5..=n {
                h.push((&h[m - 2] + &h[m - 3]).shift(1));
            }
            Ok(h.swap_remove(n))
        }
        MaximalMethod::Genfunc => maximal_genfunc().coefficient(n),
        MaximalMethod::ClosedY => Ok(if n < 2 {
            seed(PolyKind::Maximal, n)
        } else {
            IntPolynomial::new((0..=n as i64).map(|k| y(k + 1, 3 * k + 1 - n as i64)).collect())
        }),
    }
}

/// `Σ H_n y^n = (2 + y) / (1 - xy²(1+y)) - (1-x)y - 1`.
pub fn maximal_genfunc() -> RationalBivariateSeries {
    let den = BiPoly::from_terms(&[(0, 0, 1), (1, 2, -1), (1, 3, -1)]);
    RationalBivariateSeries::new(BiPoly::in_y(&[2, 1]), den)
        .expect("constant term 1")
        .plus(BiPoly::from_terms(&[(0, 0, -1), (0, 1, -1), (1, 1, 1)]))
}

/// `Σ h_{n,k} y^n = (y²(1+y))^k (2+y) + y·[k = 1]` for `k >= 1`.
pub fn maximal_count_genfunc(k: usize) -> Result<RationalBivariateSeries> {
    if k == 0 {
        return Err(Error::InvalidArgument("the fixed-k maximal series needs k >= 1".into()));
    }
    let num = BiPoly::in_y(&[0, 0, 1, 1]).pow(k).mul(&BiPoly::in_y(&[2, 1]));
    let s = RationalBivariateSeries::new(num, BiPoly::one()).expect("constant term 1");
    Ok(if k == 1 { s.plus(BiPoly::in_y(&[0, 1])) } else { s })
}

/// `Σ p'_n y^n = (1 + 2y + 2y²) / (1 - y² - y³)`.
pub fn padovan_genfunc() -> RationalBivariateSeries {
    RationalBivariateSeries::new(BiPoly::in_y(&[1, 2, 2]), BiPoly::in_y(&[1, 0, -1, -1])).expect("constant term 1")
}

/// Number of nonzero terms of `H_n`: with `n = 6m + b`, `m + 2` when `b = 4`
/// and `m + 1` otherwise.
pub fn maximal_term_count(n: usize) -> usize {
    let (m, b) = (n / 6, n % 6);
    if b == 4 {
        m + 2
    } else {
        m + 1
    }
}

/// `h_{n,k}` from the Lucas triangle, `Y(k+1, 3k+1-n)` for `n >= 2`.
pub fn maximal_count(n: usize, k: usize) -> BigInt {
    if n < 2 {
        return seed(PolyKind::Maximal, n).coeff(k);
    }
    y(k as i64 + 1, 3 * k as i64 + 1 - n as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formulas::sequences::padovan123;

    #[test]
    fn listed_and_agreeing() {
        for method in MaximalMethod::ALL {
            for n in 0..=5 {
                assert_eq!(maximal_cube_poly(n, method).unwrap(), seed(PolyKind::Maximal, n), "{method:?} {n}");
            }
            assert_eq!(
                maximal_cube_poly(17, method).unwrap(),
                maximal_cube_poly(17, MaximalMethod::Recurrence).unwrap()
            );
        }
        assert_eq!(maximal_count(10, 4), BigInt::from(16));
    }

    #[test]
    fn padovan_values_and_terms() {
        for n in 1..=20 {
            let h = maximal_cube_poly(n, MaximalMethod::Recurrence).unwrap();
            assert_eq!(h.eval(&BigInt::from(1)), padovan123(n - 1));
            assert_eq!(h.term_count(), maximal_term_count(n), "n = {n}");
        }
        let p = padovan_genfunc().expand(6).unwrap();
        assert_eq!(p[6].coeff(0), padovan123(6));
    }

    #[test]
    fn fixed_k() {
        let s = maximal_count_genfunc(2).unwrap().expand(12).unwrap();
        for (n, c) in s.iter().enumerate() {
            assert_eq!(c.coeff(0), maximal_cube_poly(n, MaximalMethod::Recurrence).unwrap().coeff(2));
        }
    }
}
