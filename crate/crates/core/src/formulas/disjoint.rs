use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};

use super::fixtures::seed;
use super::poly::IntPolynomial;
use super::sequences::{eta, lucas, theta};
use super::series::{BiPoly, RationalBivariateSeries};
use super::PolyKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DisjointMethod {
    /// Per-coefficient recurrence with the closed `k = 0, 1` columns.
    Recurrence,
    /// Recurrence on whole polynomials.
    PolyRecurrence,
    Genfunc,
    /// Column-by-column fixed-`k` series.
    PerK,
}

impl DisjointMethod {
    pub const ALL: [DisjointMethod; 4] = [
        DisjointMethod::Recurrence,
        DisjointMethod::PolyRecurrence,
        DisjointMethod::Genfunc,
        DisjointMethod::PerK,
    ];

    pub fn name(self) -> &'static str {
        match self {
            DisjointMethod::Recurrence => "recurrence",
            DisjointMethod::PolyRecurrence => "poly_recurrence",
            DisjointMethod::Genfunc => "genfunc",
            DisjointMethod::PerK => "per_k",
        }
    }
}

impl FromStr for DisjointMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown disjoint-cube method {s:?}")))
    }
}

/// `s_{n,0} = ⌈L_n / 2⌉`. This counts half the vertices, not a packing of
/// single vertices (which would be all `L_n` of them).
pub fn disjoint_zero(n: usize) -> BigInt {
    (lucas(n) + theta(n)) / 2
}

/// `s_{n,1} = ⌊L_n / 2⌋ = (L_n - θ_n)/2 + η_n`.
pub fn disjoint_one(n: usize) -> BigInt {
    (lucas(n) - theta(n)) / 2 + eta(n)
}

/// Disjoint cube polynomial `S_n(x)` as defined by the recurrences.
pub fn disjoint_cube_poly(n: usize, method: DisjointMethod) -> Result<IntPolynomial> {
    match method {
        DisjointMethod::Recurrence => Ok(by_columns(n)),
        DisjointMethod::PolyRecurrence => Ok(by_polynomials(n)),
        DisjointMethod::Genfunc => disjoint_genfunc().coefficient(n),
        DisjointMethod::PerK => {
            let mut coeffs = vec![disjoint_zero(n)];
            for k in 1..=n / 2 + 1 {
                coeffs.push(disjoint_count_genfunc(k)?.coefficient(n)?.coeff(0));
            }
            Ok(IntPolynomial::new(coeffs))
        }
    }
}

fn by_columns(n: usize) -> IntPolynomial {
    let mut s: Vec<Vec<BigInt>> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let row = if m < 4 {
            seed(PolyKind::Disjoint, m).coeffs().to_vec()
        } else {
            let mut row = vec![disjoint_zero(m), disjoint_one(m)];
            for k in 2..=m / 2 {
                let get = |i: usize, k: usize| s[i].get(k).cloned().unwrap_or_default();
                row.push(get(m - 2, k - 1) + get(m - 3, k));
            }
            row
        };
        s.push(row);
    }
    IntPolynomial::new(s.swap_remove(n))
}

/// `S_n = xS_{n-2} + S_{n-3} + ((L_{n-2} - θ_{n-2})/2 - η_{n-3}) x + (L_n - L_{n-3})/2`.
/// The `x` coefficient uses `θ_{n-2}`; with `θ_n` it is not an integer at
/// `n = 5`.
fn by_polynomials(n: usize) -> IntPolynomial {
    let mut s: Vec<IntPolynomial> = (0..=n.min(3)).map(|i| seed(PolyKind::Disjoint, i)).collect();
    for m in 4..=n {
        let linear = (lucas(m - 2) - theta(m - 2)) / 2 - eta(m - 3);
        let constant = (lucas(m) - lucas(m - 3)) / 2;
        let extra = IntPolynomial::new(vec![constant, linear]);
        s.push(&(&s[m - 2].shift(1) + &s[m - 3]) + &extra);
    }
    s.swap_remove(n)
}

/// `Σ S_n y^n = (1 - (3-x)y³ + (2-x)y⁶ + xy⁸) / ((1-y-y²)(1-y³)(1-xy²-y³)) + xy`.
pub fn disjoint_genfunc() -> RationalBivariateSeries {
    let num = BiPoly::from_terms(&[(0, 0, 1), (0, 3, -3), (1, 3, 1), (0, 6, 2), (1, 6, -1), (1, 8, 1)]);
    let den = BiPoly::in_y(&[1, -1, -1])
        .mul(&BiPoly::in_y(&[1, 0, 0, -1]))
        .mul(&BiPoly::from_terms(&[(0, 0, 1), (1, 2, -1), (0, 3, -1)]));
    RationalBivariateSeries::new(num, den)
        .expect("constant term 1")
        .plus(BiPoly::from_terms(&[(1, 1, 1)]))
}

/// `Σ_n s_{n,k} y^n = ½ (y²/(1-y³))^{k-1} ((y+2y²)/(1-y-y²) - (y+y²)/(1-y³)) + y·[k = 1]`
/// for `k >= 1`, over a common denominator.
pub fn disjoint_count_genfunc(k: usize) -> Result<RationalBivariateSeries> {
    if k == 0 {
        return Err(Error::InvalidArgument("the fixed-k disjoint series needs k >= 1".into()));
    }
    let inner = BiPoly::in_y(&[0, 1, 2])
        .mul(&BiPoly::in_y(&[1, 0, 0, -1]))
        .sub(&BiPoly::in_y(&[0, 1, 1]).mul(&BiPoly::in_y(&[1, -1, -1])));
    let num = BiPoly::in_y(&[0, 0, 1]).pow(k - 1).mul(&inner);
    let den = BiPoly::in_y(&[1, 0, 0, -1]).pow(k).mul(&BiPoly::in_y(&[1, -1, -1]));
    let s = RationalBivariateSeries::new(num, den).expect("constant term 1").divided_by(2);
    Ok(if k == 1 { s.plus(BiPoly::in_y(&[0, 1])) } else { s })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn listed_and_agreeing() {
        for method in DisjointMethod::ALL {
            for n in 0..=5 {
                assert_eq!(disjoint_cube_poly(n, method).unwrap(), seed(PolyKind::Disjoint, n), "{method:?} {n}");
            }
            for n in 6..=20 {
                assert_eq!(
                    disjoint_cube_poly(n, method).unwrap(),
                    disjoint_cube_poly(n, DisjointMethod::Recurrence).unwrap(),
                    "{method:?} {n}"
                );
            }
        }
    }

    #[test]
    fn small_columns() {
        assert_eq!(disjoint_one(8), BigInt::from(23));
        assert_eq!(disjoint_zero(4), BigInt::from(4));
        assert!(disjoint_count_genfunc(0).is_err());
    }
}
