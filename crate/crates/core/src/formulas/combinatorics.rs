use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

use super::poly::IntPolynomial;

/// `C(a, b)`, zero unless `0 <= b <= a`.
pub fn binom(a: i64, b: i64) -> BigInt {
    if a < 0 || b < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc = acc * BigInt::from(a - i) / BigInt::from(i + 1);
    }
    acc
}

/// `C(a, b)` with `C(a, 0) = 1` for every integer `a`, the value the
/// polynomial definition `a(a-1)...(a-b+1)/b!` gives at `b = 0`; zero for
/// other arguments outside `0 <= b <= a`.
pub fn binom_ext(a: i64, b: i64) -> BigInt {
    if b == 0 {
        BigInt::one()
    } else {
        binom(a, b)
    }
}

/// `C(a, b)` with the single extra value `C(-1, -1) = 1`.
fn binom_y(a: i64, b: i64) -> BigInt {
    if a == -1 && b == -1 {
        BigInt::one()
    } else {
        binom(a, b)
    }
}

/// Lucas triangle entry `Y(n, k) = C(n, k) + C(n-1, k-1)` for any
/// integers, zero outside the triangle (so `Y(0, 0) = 2`).
pub fn y(n: i64, k: i64) -> BigInt {
    binom_y(n, k) + binom_y(n - 1, k - 1)
}

/// `Y(n, k)` restricted to `0 <= k <= n`.
pub fn lucas_triangle(n: usize, k: usize) -> Result<BigInt> {
    if k > n {
        return Err(Error::InvalidArgument(format!("Y({n}, {k}) needs k <= n")));
    }
    Ok(y(n as i64, k as i64))
}

/// Rows `0..rows` of the Lucas triangle.
pub fn lucas_triangle_rows(rows: usize) -> Vec<Vec<BigInt>> {
    (0..rows)
        .map(|n| (0..=n).map(|k| y(n as i64, k as i64)).collect())
        .collect()
}

/// `[x^k] (1 + x + x^2)^n` by the sum `Σ_j C(n, k-j) C(k-j, j)`; zero for
/// negative arguments.
pub fn trinomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 {
        return BigInt::zero();
    }
    (0..=k / 2).map(|j| binom(n, k - j) * binom(k - j, j)).sum()
}

/// `[x^k] (1 + x + x^2)^n` by expanding the power.
pub fn trinomial_direct(n: usize, k: usize) -> BigInt {
    IntPolynomial::from_i64(&[1, 1, 1]).pow(n).coeff(k)
}

/// Chebyshev polynomial of the second kind `U_m`.
pub fn chebyshev_u(m: usize) -> IntPolynomial {
    let two_x = IntPolynomial::from_i64(&[0, 2]);
    let mut prev = IntPolynomial::one();
    if m == 0 {
        return prev;
    }
    let mut cur = two_x.clone();
    for _ in 1..m {
        let next = &(&two_x * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `x^m U_m(p / (2x))` for `p = 1 + x + x^2`, exactly. Every coefficient
/// `u_i` of `U_m` is divisible by `2^i` and `i <= m`, so the result is an
/// integer polynomial; a failed division is reported.
pub fn chebyshev_scaled(m: usize) -> Result<IntPolynomial> {
    let p = IntPolynomial::from_i64(&[1, 1, 1]);
    let u = chebyshev_u(m);
    let mut acc = IntPolynomial::zero();
    for (i, c) in u.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = p.pow(i).shift(m - i).scale(c);
        acc = &acc + &term.div_exact(&(BigInt::one() << i))?;
    }
    Ok(acc)
}

/// `((1 + √t)^n + (1 - √t)^n) / 2^n`, evaluated in `ℤ[x][√t]`. The `√t`
/// part must cancel and the division must be exact; either failure is an
/// error.
pub fn closed_sqrt_form(n: usize, t: &IntPolynomial) -> Result<IntPolynomial> {
    // (a, b) represents a + b·√t
    let mul = |(a1, b1): &(IntPolynomial, IntPolynomial), (a2, b2): &(IntPolynomial, IntPolynomial)| {
        (&(a1 * a2) + &(&(b1 * b2) * t), &(a1 * b2) + &(a2 * b1))
    };
    let one = IntPolynomial::one();
    let mut plus = (one.clone(), IntPolynomial::zero());
    let mut minus = plus.clone();
    for _ in 0..n {
        plus = mul(&plus, &(one.clone(), one.clone()));
        minus = mul(&minus, &(one.clone(), -&one));
    }
    let rational = &plus.0 + &minus.0;
    let radical = &plus.1 + &minus.1;
    if !radical.is_zero() {
        return Err(Error::InexactDivision(format!("radical part did not cancel at n = {n}")));
    }
    rational.div_exact(&(BigInt::one() << n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binom(5, 2), BigInt::from(10));
        assert_eq!(binom(-1, -1), BigInt::zero());
        assert_eq!(binom(3, 4), BigInt::zero());
        assert_eq!(binom(60, 30), "118264581564861424".parse::<BigInt>().unwrap());
    }

    #[test]
    fn lucas_triangle_table() {
        let rows = lucas_triangle_rows(6);
        let want: Vec<Vec<i64>> = vec![
            vec![2],
            vec![1, 2],
            vec![1, 3, 2],
            vec![1, 4, 5, 2],
            vec![1, 5, 9, 7, 2],
            vec![1, 6, 14, 16, 9, 2],
        ];
        for (r, w) in rows.iter().zip(&want) {
            let w: Vec<BigInt> = w.iter().map(|&v| BigInt::from(v)).collect();
            assert_eq!(r, &w);
        }
        assert!(lucas_triangle(2, 3).is_err());
        assert_eq!(y(3, -1), BigInt::zero());
    }

    #[test]
    fn trinomials() {
        assert_eq!(trinomial(2, 2), BigInt::from(3));
        assert_eq!(trinomial(4, 3), BigInt::from(16));
        assert_eq!(trinomial_direct(4, 3), BigInt::from(16));
        assert_eq!(trinomial(-1, 0), BigInt::zero());
    }

    #[test]
    fn chebyshev() {
        assert_eq!(chebyshev_u(0), IntPolynomial::one());
        assert_eq!(chebyshev_u(1), IntPolynomial::from_i64(&[0, 2]));
        assert_eq!(chebyshev_u(3), IntPolynomial::from_i64(&[0, -4, 0, 8]));
        // x^2 U_2(p/2x) = p^2 - x^2
        let p = IntPolynomial::from_i64(&[1, 1, 1]);
        assert_eq!(chebyshev_scaled(2).unwrap(), &p.pow(2) - &IntPolynomial::from_i64(&[0, 0, 1]));
    }

    #[test]
    fn sqrt_form() {
        let lucas = closed_sqrt_form(5, &IntPolynomial::from_i64(&[5])).unwrap();
        assert_eq!(lucas, IntPolynomial::from_i64(&[11]));
        // t = 5 + 4x at n = 0 gives 2 / 1
        assert_eq!(closed_sqrt_form(0, &IntPolynomial::from_i64(&[5, 4])).unwrap(), IntPolynomial::from_i64(&[2]));
        assert!(closed_sqrt_form(2, &IntPolynomial::from_i64(&[2])).is_err());
    }
}
