use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::json;

use crate::error::{Error, Result};

/// Dense polynomial in `x` with arbitrary-precision integer coefficients;
/// `coeffs[k]` is the coefficient of `x^k`. Trailing zeros are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// Number of non-zero coefficients.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// `x^m · self`.
    pub fn shift(&self, m: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigInt::zero(); m];
        v.extend(self.coeffs.iter().cloned());
        Self::new(v)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divides every coefficient by `d`, failing unless all divide exactly.
    pub fn div_exact(&self, d: &BigInt) -> Result<Self> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            let (q, r) = a.div_rem(d);
            if !r.is_zero() {
                return Err(Error::InexactDivision(format!("{a} by {d}")));
            }
            out.push(q);
        }
        Ok(Self::new(out))
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// `Σ |c_k| |x|^k`, the natural scale for a rounding-error bound.
    pub fn abs_eval_f64(&self, x: f64) -> f64 {
        let ax = x.abs();
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * ax + c.abs().to_f64().unwrap_or(f64::NAN))
    }

    /// `self(q(x))`.
    pub fn compose(&self, q: &IntPolynomial) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * q) + &Self::constant(c.clone()))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    /// Coefficients as decimal strings separated by single spaces
    /// (`"0"` for the zero polynomial).
    pub fn to_plain(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.coeffs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
    }

    pub fn to_json(&self, kind: &str, n: usize) -> String {
        let coeffs: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        json!({ "kind": kind, "n": n, "coeffs": coeffs }).to_string()
    }

    pub fn to_csv_row(&self, kind: &str, n: usize) -> String {
        let mut row = vec![kind.to_string(), n.to_string()];
        row.extend(self.coeffs.iter().map(ToString::to_string));
        row.join(",")
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (k, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{a}x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{a}x^{k}")?,
            }
        }
        Ok(())
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

/// `a_k² ≥ a_{k-1} a_{k+1}` for every interior `k`.
pub fn is_log_concave(c: &[BigInt]) -> bool {
    c.windows(3).all(|w| &w[1] * &w[1] >= &w[0] * &w[2])
}

/// Non-decreasing then non-increasing.
pub fn is_unimodal(c: &[BigInt]) -> bool {
    let mut i = 1;
    while i < c.len() && c[i] >= c[i - 1] {
        i += 1;
    }
    while i < c.len() && c[i] <= c[i - 1] {
        i += 1;
    }
    i >= c.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn arithmetic() {
        let a = p(&[1, 1]);
        assert_eq!(&a * &a, p(&[1, 2, 1]));
        assert_eq!(&a - &a, IntPolynomial::zero());
        assert_eq!(a.pow(3), p(&[1, 3, 3, 1]));
        assert_eq!(p(&[0, 0, 0]).degree(), None);
        assert_eq!(p(&[7, 8, 2]).shift(2), p(&[0, 0, 7, 8, 2]));
        assert_eq!(p(&[1, 2, 3]).derivative(), p(&[2, 6]));
    }

    #[test]
    fn composition_and_eval() {
        // Q_4(x - 1) = 1 + 4x + 2x^2
        let q4 = p(&[7, 8, 2]);
        assert_eq!(q4.compose(&p(&[-1, 1])), p(&[1, 4, 2]));
        assert_eq!(q4.eval(&BigInt::from(1)), BigInt::from(17));
        assert!((q4.eval_f64(-0.5) - 3.5).abs() < 1e-12);
    }

    #[test]
    fn exact_division() {
        assert_eq!(p(&[4, 6]).div_exact(&BigInt::from(2)).unwrap(), p(&[2, 3]));
        assert!(p(&[4, 5]).div_exact(&BigInt::from(2)).is_err());
    }

    #[test]
    fn formatting() {
        assert_eq!(p(&[11, 15, 5]).to_plain(), "11 15 5");
        assert_eq!(p(&[0, -1, 0, 2]).to_string(), "-x + 2x^3");
        assert_eq!(p(&[1, 1]).to_json("cube", 1), r#"{"coeffs":["1","1"],"kind":"cube","n":1}"#);
        assert_eq!(p(&[2, 1]).to_csv_row("cube", 1), "cube,1,2,1");
    }

    #[test]
    fn shape_tests() {
        let c: Vec<BigInt> = [1, 4, 2].iter().map(|&x| BigInt::from(x)).collect();
        assert!(is_log_concave(&c) && is_unimodal(&c));
        let d: Vec<BigInt> = [1, 0, 1].iter().map(|&x| BigInt::from(x)).collect();
        assert!(!is_log_concave(&d) && !is_unimodal(&d));
    }
}
