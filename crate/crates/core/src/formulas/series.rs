use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

use super::poly::IntPolynomial;

/// Polynomial in `(x, y)` stored by powers of `y`; entry `j` is the
/// coefficient of `y^j`, itself a polynomial in `x`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BiPoly(Vec<IntPolynomial>);

impl BiPoly {
    pub fn new(mut rows: Vec<IntPolynomial>) -> Self {
        while rows.last().is_some_and(IntPolynomial::is_zero) {
            rows.pop();
        }
        BiPoly(rows)
    }

    /// Sum of terms `c · x^i · y^j` given as `(i, j, c)`.
    pub fn from_terms(terms: &[(usize, usize, i64)]) -> Self {
        let mut rows = Vec::new();
        for &(i, j, c) in terms {
            if rows.len() <= j {
                rows.resize(j + 1, IntPolynomial::zero());
            }
            rows[j] = &rows[j] + &IntPolynomial::monomial(BigInt::from(c), i);
        }
        Self::new(rows)
    }

    /// A polynomial in `y` alone.
    pub fn in_y(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| IntPolynomial::constant(BigInt::from(c))).collect())
    }

    pub fn one() -> Self {
        Self::in_y(&[1])
    }

    pub fn rows(&self) -> &[IntPolynomial] {
        &self.0
    }

    pub fn row(&self, j: usize) -> IntPolynomial {
        self.0.get(j).cloned().unwrap_or_default()
    }

    pub fn mul(&self, other: &BiPoly) -> BiPoly {
        if self.0.is_empty() || other.0.is_empty() {
            return BiPoly::default();
        }
        let mut rows = vec![IntPolynomial::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                rows[i + j] = &rows[i + j] + &(a * b);
            }
        }
        BiPoly::new(rows)
    }

    pub fn add(&self, other: &BiPoly) -> BiPoly {
        let n = self.0.len().max(other.0.len());
        BiPoly::new((0..n).map(|j| &self.row(j) + &other.row(j)).collect())
    }

    pub fn sub(&self, other: &BiPoly) -> BiPoly {
        let n = self.0.len().max(other.0.len());
        BiPoly::new((0..n).map(|j| &self.row(j) - &other.row(j)).collect())
    }

    pub fn pow(&self, e: usize) -> BiPoly {
        (0..e).fold(BiPoly::one(), |acc, _| acc.mul(self))
    }
}

/// `numerator / (denominator · divisor) + polynomial_part` as a formal
/// power series in `y` whose coefficients are polynomials in `x`.
#[derive(Debug)]
pub struct RationalBivariateSeries {
    numerator: BiPoly,
    denominator: BiPoly,
    polynomial_part: BiPoly,
    divisor: BigInt,
    cache: Mutex<Vec<IntPolynomial>>,
}

impl RationalBivariateSeries {
    /// Fails unless the denominator has constant term `±1`.
    pub fn new(numerator: BiPoly, denominator: BiPoly) -> Result<Self> {
        let c0 = denominator.row(0);
        let (numerator, denominator) = if c0 == IntPolynomial::one() {
            (numerator, denominator)
        } else if c0 == -&IntPolynomial::one() {
            (BiPoly::default().sub(&numerator), BiPoly::default().sub(&denominator))
        } else {
            return Err(Error::NotExpandable);
        };
        Ok(RationalBivariateSeries {
            numerator,
            denominator,
            polynomial_part: BiPoly::default(),
            divisor: BigInt::one(),
            cache: Mutex::new(Vec::new()),
        })
    }

    pub fn plus(mut self, poly: BiPoly) -> Self {
        self.polynomial_part = self.polynomial_part.add(&poly);
        self
    }

    /// Divides the rational part by an integer; expansion checks exactness.
    pub fn divided_by(mut self, d: i64) -> Self {
        self.divisor *= BigInt::from(d);
        self
    }

    pub fn numerator(&self) -> &BiPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &BiPoly {
        &self.denominator
    }

    /// Coefficients of `num / den` for `y^0 ..= y^order`, before the divisor
    /// and polynomial part are applied.
    fn raw(&self, order: usize) -> Vec<IntPolynomial> {
        let mut c = self.cache.lock().expect("series cache poisoned");
        while c.len() <= order {
            let n = c.len();
            let mut term = self.numerator.row(n);
            for (j, d) in self.denominator.rows().iter().enumerate().skip(1) {
                if j > n {
                    break;
                }
                term = &term - &(d * &c[n - j]);
            }
            c.push(term);
        }
        c[..=order].to_vec()
    }

    /// `[y^0] .. [y^order]` of the series.
    pub fn expand(&self, order: usize) -> Result<Vec<IntPolynomial>> {
        self.raw(order)
            .into_iter()
            .enumerate()
            .map(|(n, p)| Ok(&p.div_exact(&self.divisor)? + &self.polynomial_part.row(n)))
            .collect()
    }

    /// `[y^n]` of the series.
    pub fn coefficient(&self, n: usize) -> Result<IntPolynomial> {
        Ok(self.expand(n)?.pop().expect("expansion is non-empty"))
    }

    /// Multiplies the cached expansion back by the denominator and compares
    /// with the numerator up to `y^order`.
    pub fn remultiplies(&self, order: usize) -> bool {
        let c = BiPoly(self.raw(order));
        let back = c.mul(&self.denominator);
        (0..=order).all(|j| back.row(j) == self.numerator.row(j))
    }
}

/// Extracts `[x^k]` from each coefficient of an expansion.
pub fn column(expansion: &[IntPolynomial], k: usize) -> Vec<BigInt> {
    expansion.iter().map(|p| p.coeff(k)).collect()
}

/// Integer coefficients of a series whose coefficients do not involve `x`.
pub fn constants(expansion: &[IntPolynomial]) -> Vec<BigInt> {
    column(expansion, 0)
}

#[cfg(test)]
fn is_constant_sequence(expansion: &[IntPolynomial]) -> bool {
    expansion.iter().all(|p| p.degree().unwrap_or(0) == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lucas_numbers() {
        let s = RationalBivariateSeries::new(BiPoly::in_y(&[2, -1]), BiPoly::in_y(&[1, -1, -1])).unwrap();
        let got: Vec<i64> = constants(&s.expand(9).unwrap())
            .iter()
            .map(|c| c.try_into().unwrap())
            .collect();
        assert_eq!(got, vec![2, 1, 3, 4, 7, 11, 18, 29, 47, 76]);
        assert!(s.remultiplies(9));
        assert!(is_constant_sequence(&s.expand(3).unwrap()));
    }

    #[test]
    fn rejects_bad_denominator() {
        let err = RationalBivariateSeries::new(BiPoly::one(), BiPoly::in_y(&[2, 1])).unwrap_err();
        assert_eq!(err, Error::NotExpandable);
        // a negated denominator is normalised
        let s = RationalBivariateSeries::new(BiPoly::in_y(&[-1]), BiPoly::in_y(&[-1, 1])).unwrap();
        assert_eq!(s.coefficient(4).unwrap(), IntPolynomial::one());
    }

    #[test]
    fn divisor_and_polynomial_part() {
        // (2 + 2y) / (1 - y) / 2 + y = 1 + 3y + 2y^2 + ...
        let s = RationalBivariateSeries::new(BiPoly::in_y(&[2, 2]), BiPoly::in_y(&[1, -1]))
            .unwrap()
            .divided_by(2)
            .plus(BiPoly::in_y(&[0, 1]));
        let c = constants(&s.expand(2).unwrap());
        assert_eq!(c, vec![BigInt::from(1), BigInt::from(3), BigInt::from(2)]);
        let odd = RationalBivariateSeries::new(BiPoly::in_y(&[1]), BiPoly::in_y(&[1, -1]))
            .unwrap()
            .divided_by(2);
        assert!(matches!(odd.expand(1), Err(Error::InexactDivision(_))));
    }

    #[test]
    fn bivariate_terms() {
        // 1 - (1 + x) y
        let d = BiPoly::from_terms(&[(0, 0, 1), (0, 1, -1), (1, 1, -1)]);
        assert_eq!(d.row(1), IntPolynomial::from_i64(&[-1, -1]));
        assert_eq!(d.pow(2).row(2), IntPolynomial::from_i64(&[1, 2, 1]));
    }
}
