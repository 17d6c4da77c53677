//! Closed forms, recurrences and generating functions for the polynomial
//! families of `Ω_n`, all in exact integer arithmetic.
//!
//! Each family exposes several independent methods; agreement between them
//! and with the brute-force counts in [`crate::enumeration`] is what the
//! verification suites check.

mod combinatorics;
mod cube;
mod degree;
mod disjoint;
mod fixtures;
mod indegree;
mod maximal;
mod poly;
mod rank;
mod sequences;
mod series;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub use combinatorics::{
    binom, binom_ext, chebyshev_scaled, chebyshev_u, closed_sqrt_form, lucas_triangle, lucas_triangle_rows, trinomial,
    trinomial_direct, y,
};
pub use cube::{
    cube_alternating_sums, cube_coefficients_log_concave, cube_count, cube_count_genfunc, cube_genfunc, cube_poly,
    cube_roots, worst_root_residual, CubeCountMethod, CubeMethod, ROOT_TOLERANCE,
};
pub use degree::{
    closed_binomial_strict, degree_genfunc, degree_poly, gamma_degree_poly, max_degree_law, min_degree_law, DegreeMethod,
    CLOSED_BINOMIAL_MIN_N,
};
pub use disjoint::{
    disjoint_count_genfunc, disjoint_cube_poly, disjoint_genfunc, disjoint_one, disjoint_zero, DisjointMethod,
};
pub use fixtures::{listed, FIXTURE_MAX_N};
pub use indegree::{
    indegree_coefficients_log_concave, indegree_count_genfunc, indegree_genfunc, indegree_poly, indegree_roots,
    IndegreeMethod,
};
pub use maximal::{
    maximal_count, maximal_count_genfunc, maximal_cube_poly, maximal_genfunc, maximal_term_count, padovan_genfunc,
    MaximalMethod,
};
pub use poly::{is_log_concave, is_unimodal, IntPolynomial};
pub use rank::{
    a_genfunc, b_genfunc, chebyshev_check, g_poly, gamma_rank_poly, rank_genfunc, rank_poly, rank_poly_even_odd,
    rank_recurrence, ChebyshevCheck, RankMethod,
};
pub use sequences::{
    eta, fibonacci, jacobsthal_lucas, lucas, padovan123, sequence, theta, SequenceKind, SequenceTable,
};
pub use series::{column, constants, BiPoly, RationalBivariateSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PolyKind {
    Rank,
    Cube,
    Maximal,
    Disjoint,
    Degree,
    Indegree,
}

impl PolyKind {
    pub const ALL: [PolyKind; 6] = [
        PolyKind::Rank,
        PolyKind::Cube,
        PolyKind::Maximal,
        PolyKind::Disjoint,
        PolyKind::Degree,
        PolyKind::Indegree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PolyKind::Rank => "rank",
            PolyKind::Cube => "cube",
            PolyKind::Maximal => "maximal",
            PolyKind::Disjoint => "disjoint",
            PolyKind::Degree => "degree",
            PolyKind::Indegree => "indegree",
        }
    }

    /// Method names accepted by [`poly`], default first.
    pub fn methods(self) -> Vec<&'static str> {
        match self {
            PolyKind::Rank => RankMethod::ALL.map(RankMethod::name).to_vec(),
            PolyKind::Cube => CubeMethod::ALL.map(CubeMethod::name).to_vec(),
            PolyKind::Maximal => MaximalMethod::ALL.map(MaximalMethod::name).to_vec(),
            PolyKind::Disjoint => DisjointMethod::ALL.map(DisjointMethod::name).to_vec(),
            PolyKind::Degree => DegreeMethod::ALL.map(DegreeMethod::name).to_vec(),
            PolyKind::Indegree => IndegreeMethod::ALL.map(IndegreeMethod::name).to_vec(),
        }
    }

    /// The generating function `Σ P_n y^n` of the family.
    pub fn genfunc(self) -> RationalBivariateSeries {
        match self {
            PolyKind::Rank => rank_genfunc(),
            PolyKind::Cube => cube_genfunc(),
            PolyKind::Maximal => maximal_genfunc(),
            PolyKind::Disjoint => disjoint_genfunc(),
            PolyKind::Degree => degree_genfunc(),
            PolyKind::Indegree => indegree_genfunc(),
        }
    }
}

impl fmt::Display for PolyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PolyKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown polynomial kind {s:?}")))
    }
}

/// Computes the `kind` polynomial at `n` by the named method, or by the
/// recurrence when `method` is `None`.
pub fn poly(kind: PolyKind, n: usize, method: Option<&str>) -> Result<IntPolynomial> {
    let method = method.unwrap_or("recurrence");
    match kind {
        PolyKind::Rank => rank_poly(n, method.parse()?),
        PolyKind::Cube => cube_poly(n, method.parse()?),
        PolyKind::Maximal => maximal_cube_poly(n, method.parse()?),
        PolyKind::Disjoint => disjoint_cube_poly(n, method.parse()?),
        PolyKind::Degree => degree_poly(n, method.parse()?),
        PolyKind::Indegree => indegree_poly(n, method.parse()?),
    }
}
