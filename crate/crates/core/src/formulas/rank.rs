use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};

use super::combinatorics::{binom, chebyshev_scaled, trinomial};
use super::fixtures::seed;
use super::poly::IntPolynomial;
use super::series::{BiPoly, RationalBivariateSeries};
use super::PolyKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RankMethod {
    Recurrence,
    ViaGamma,
    Genfunc,
    ClosedTrinomial,
}

impl RankMethod {
    pub const ALL: [RankMethod; 4] = [
        RankMethod::Recurrence,
        RankMethod::ViaGamma,
        RankMethod::Genfunc,
        RankMethod::ClosedTrinomial,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RankMethod::Recurrence => "recurrence",
            RankMethod::ViaGamma => "via_gamma",
            RankMethod::Genfunc => "genfunc",
            RankMethod::ClosedTrinomial => "closed_trinomial",
        }
    }
}

impl FromStr for RankMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown rank method {s:?}")))
    }
}

fn p(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64(c)
}

/// Rank generating function `R_n(x)` of `Ω_n`.
pub fn rank_poly(n: usize, method: RankMethod) -> Result<IntPolynomial> {
    match method {
        RankMethod::Recurrence => Ok(rank_recurrence(n).pop().expect("non-empty")),
        RankMethod::ViaGamma => Ok(if n < 3 {
            seed(PolyKind::Rank, n)
        } else {
            &gamma_rank_poly(n - 1) + &gamma_rank_poly(n - 3).shift(3)
        }),
        RankMethod::Genfunc => rank_genfunc().coefficient(n),
        RankMethod::ClosedTrinomial => Ok(rank_closed(n)),
    }
}

/// `R_0 ..= R_n` by the parity recurrence from the listed `R_0 .. R_3`.
pub fn rank_recurrence(n: usize) -> Vec<IntPolynomial> {
    let mut r: Vec<IntPolynomial> = (0..=n.min(3)).map(|i| seed(PolyKind::Rank, i)).collect();
    for m in 4..=n {
        let next = if m % 2 == 1 {
            &r[m - 1].shift(1) + &r[m - 2]
        } else {
            &r[m - 1] + &r[m - 2].shift(2)
        };
        r.push(next);
    }
    r
}

/// Rank generating function of the Fibonacci lattice `Γ_m` (filters of the
/// fence whose first element is maximal).
pub fn gamma_rank_poly(m: usize) -> IntPolynomial {
    let mut r = vec![p(&[1]), p(&[1, 1])];
    for j in 2..=m {
        let next = if j % 2 == 1 {
            &r[j - 1] + &r[j - 2].shift(2)
        } else {
            &r[j - 1].shift(1) + &r[j - 2]
        };
        r.push(next);
    }
    r.swap_remove(m)
}

/// `Σ R_n y^n = (1 + y + x³y³ - xy⁴) / (1 - (1+x+x²)y² + x²y⁴) + xy`.
pub fn rank_genfunc() -> RationalBivariateSeries {
    let num = BiPoly::from_terms(&[(0, 0, 1), (0, 1, 1), (3, 3, 1), (1, 4, -1)]);
    let den = BiPoly::from_terms(&[(0, 0, 1), (0, 2, -1), (1, 2, -1), (2, 2, -1), (2, 4, 1)]);
    RationalBivariateSeries::new(num, den)
        .expect("constant term 1")
        .plus(BiPoly::from_terms(&[(1, 1, 1)]))
}

fn ab_denominator() -> BiPoly {
    BiPoly::from_terms(&[(0, 0, 1), (0, 1, -1), (1, 1, -1), (2, 1, -1), (2, 2, 1)])
}

/// `Σ A_m z^m = (1 - xz²) / (1 - (1+x+x²)z + x²z²)`.
pub fn a_genfunc() -> RationalBivariateSeries {
    RationalBivariateSeries::new(BiPoly::from_terms(&[(0, 0, 1), (1, 2, -1)]), ab_denominator())
        .expect("constant term 1")
}

/// `Σ B_m z^m = (1 + x³z) / (1 - (1+x+x²)z + x²z²) + x`.
pub fn b_genfunc() -> RationalBivariateSeries {
    RationalBivariateSeries::new(BiPoly::from_terms(&[(0, 0, 1), (3, 1, 1)]), ab_denominator())
        .expect("constant term 1")
        .plus(BiPoly::from_terms(&[(1, 0, 1)]))
}

/// `(A_m, B_m) = (R_{2m}, R_{2m+1})` by the three-term recurrence with
/// `1 + x + x²`, seeded with `m <= 2` from the rank recurrence.
pub fn rank_poly_even_odd(m: usize) -> (IntPolynomial, IntPolynomial) {
    let seeds = rank_recurrence(5);
    let mut a: Vec<IntPolynomial> = (0..3).map(|i| seeds[2 * i].clone()).collect();
    let mut b: Vec<IntPolynomial> = (0..3).map(|i| seeds[2 * i + 1].clone()).collect();
    let tri = p(&[1, 1, 1]);
    for j in 3..=m {
        a.push(&(&tri * &a[j - 1]) - &a[j - 2].shift(2));
        b.push(&(&tri * &b[j - 1]) - &b[j - 2].shift(2));
    }
    (a.swap_remove(m), b.swap_remove(m))
}

/// `g_m = Σ_j (-1)^j C(m-j, j) x^{2j} (1+x+x²)^{m-2j}`, the coefficients of
/// `1 / (1 - (1+x+x²)z + x²z²)`.
pub fn g_poly(m: usize) -> IntPolynomial {
    let tri = p(&[1, 1, 1]);
    let mut acc = IntPolynomial::zero();
    for j in 0..=m / 2 {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let c = binom((m - j) as i64, j as i64) * BigInt::from(sign);
        acc = &acc + &tri.pow(m - 2 * j).shift(2 * j).scale(&c);
    }
    acc
}

/// Outcome of the Chebyshev identities at one `m`, each evaluated with
/// `g_j = x^j U_j((1+x+x²)/2x)` computed exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChebyshevCheck {
    pub m: usize,
    /// `A_m = x^m U_m - x^{m-1} U_{m-2}`.
    pub a_derived: bool,
    /// `A_m = x^{m-2}(1+x) U_m - x^{m-2}(1+x+x²) U_{m-1}`, cleared by `x²`.
    pub a_printed: bool,
    /// `A_m = x^{m-1}(1+x) U_m - x^{m-2}(1+x+x²) U_{m-1}`, cleared by `x`.
    pub a_corrected: bool,
    /// `B_m = x^m U_m + x^{m+2} U_{m-1}`.
    pub b: bool,
    /// The scaled Chebyshev polynomial equals `g_m` from its sum formula.
    pub g_matches: bool,
}

/// Checks the Chebyshev closed forms of `A_m` and `B_m` for `m >= 1`.
pub fn chebyshev_check(m: usize) -> Result<ChebyshevCheck> {
    if m == 0 {
        return Err(Error::InvalidArgument("Chebyshev forms need m >= 1".into()));
    }
    let (a, b) = rank_poly_even_odd(m);
    let g = |j: usize| chebyshev_scaled(j);
    let gm = g(m)?;
    let gm1 = g(m - 1)?;
    let gm2 = if m >= 2 { g(m - 2)? } else { IntPolynomial::zero() };
    let one_x = p(&[1, 1]);
    let tri = p(&[1, 1, 1]);
    let printed_rhs = &(&one_x * &gm) - &(&tri * &gm1).shift(1);
    let corrected_rhs = &(&one_x * &gm) - &(&tri * &gm1);
    Ok(ChebyshevCheck {
        m,
        a_derived: a == &gm - &gm2.shift(1),
        a_printed: a.shift(2) == printed_rhs,
        a_corrected: a.shift(1) == corrected_rhs,
        b: b == &gm + &gm1.shift(3),
        g_matches: gm == g_poly(m),
    })
}

/// `r_{n,k}` from the trinomial-coefficient sums.
fn rank_closed(n: usize) -> IntPolynomial {
    let m = (n / 2) as i64;
    let coeffs = (0..=n as i64)
        .map(|k| {
            let mut acc = BigInt::from(0);
            for j in 0..=m / 2 {
                let sign = BigInt::from(if j % 2 == 0 { 1 } else { -1 });
                let term = if n.is_multiple_of(2) {
                    binom(m - j, j) * trinomial(m - 2 * j, k - 2 * j)
                        + binom(m - j - 1, j - 1) * trinomial(m - 2 * j, k - 2 * j + 1)
                } else {
                    binom(m - j, j) * trinomial(m - 2 * j, k - 2 * j)
                        + binom(m - j - 1, j) * trinomial(m - 2 * j - 1, k - 2 * j - 3)
                };
                acc += sign * term;
            }
            if n == 1 && k == 1 {
                acc += 1;
            }
            acc
        })
        .collect();
    IntPolynomial::new(coeffs)
}
