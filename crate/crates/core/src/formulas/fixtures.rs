//! The explicitly listed polynomials for `n = 0..=5`, stored verbatim.
//! They seed the recurrences and serve as test fixtures.

use super::poly::IntPolynomial;
use super::PolyKind;

const RANK: [&[i64]; 6] = [
    &[1],
    &[1, 1],
    &[1, 1, 1],
    &[1, 1, 1, 1],
    &[1, 1, 2, 2, 1],
    &[1, 2, 2, 3, 2, 1],
];

const CUBE: [&[i64]; 6] = [&[1], &[2, 1], &[3, 2], &[4, 3], &[7, 8, 2], &[11, 15, 5]];

const MAXIMAL: [&[i64]; 6] = [&[1], &[0, 1], &[0, 2], &[0, 3], &[0, 1, 2], &[0, 0, 5]];

const DISJOINT: [&[i64]; 6] = [&[1], &[1, 1], &[2, 1], &[2, 2], &[4, 3, 1], &[6, 5, 2]];

const DEGREE: [&[i64]; 6] = [
    &[1],
    &[0, 2],
    &[0, 2, 1],
    &[0, 2, 2],
    &[0, 1, 3, 3],
    &[0, 0, 5, 4, 2],
];

const INDEGREE: [&[i64]; 6] = [&[1], &[1, 1], &[1, 2], &[1, 3], &[1, 4, 2], &[1, 5, 5]];

/// Largest `n` with a listed polynomial.
pub const FIXTURE_MAX_N: usize = 5;

/// The listed polynomial of `kind` at `n`, if `n <= 5`.
pub fn listed(kind: PolyKind, n: usize) -> Option<IntPolynomial> {
    let table = match kind {
        PolyKind::Rank => &RANK,
        PolyKind::Cube => &CUBE,
        PolyKind::Maximal => &MAXIMAL,
        PolyKind::Disjoint => &DISJOINT,
        PolyKind::Degree => &DEGREE,
        PolyKind::Indegree => &INDEGREE,
    };
    table.get(n).map(|c| IntPolynomial::from_i64(c))
}

pub(crate) fn seed(kind: PolyKind, n: usize) -> IntPolynomial {
    listed(kind, n).expect("seed index within the listed range")
}
