//! Maximum vertex-disjoint packings of induced k-cubes in Ω_n compared
//! with the disjoint-cube polynomial. From n = 9 the polynomial falls
//! short of packings the oracle finds.

use lucas_cubes::enumeration::{max_cube_dimension, max_disjoint_cubes, max_independent_set, max_matching};
use lucas_cubes::formulas::{disjoint_cube_poly, DisjointMethod};
use lucas_cubes::lattice::omega;

fn main() -> lucas_cubes::Result<()> {
    let top = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(10);
    for n in 2..=top {
        let g = omega(n)?.undirected();
        let s = disjoint_cube_poly(n, DisjointMethod::Recurrence)?;
        let mut line = format!("n={n:>2} matching {:>3} independent {:>3} |", max_matching(&g)?, max_independent_set(&g)?);
        for k in 1..=max_cube_dimension(&g)? {
            let found = max_disjoint_cubes(&g, k)?;
            let formula = s.coeff(k);
            let mark = if formula == found.into() { "" } else { "*" };
            line += &format!(" k={k}: {found}/{formula}{mark}");
        }
        println!("{line}");
    }
    println!("entries are oracle/formula; * marks a disagreement");
    Ok(())
}
