//! Real roots of Q_n and D⁻_n from their tangent formulas, coefficient
//! shape, and the Chebyshev forms of the even and odd rank polynomials.

use lucas_cubes::formulas::{
    chebyshev_check, cube_coefficients_log_concave, cube_poly, cube_roots, indegree_coefficients_log_concave,
    indegree_poly, indegree_roots, worst_root_residual, CubeMethod, IndegreeMethod,
};

fn main() -> lucas_cubes::Result<()> {
    for n in [4, 7, 12, 16] {
        let q = cube_poly(n, CubeMethod::Recurrence)?;
        let d = indegree_poly(n, IndegreeMethod::Recurrence)?;
        let rq = cube_roots(n)?;
        let rd = indegree_roots(n)?;
        println!("n={n} Q roots {rq:.5?} residual {:.1e}", worst_root_residual(&q, &rq));
        println!("     D⁻ roots {rd:.5?} residual {:.1e}", worst_root_residual(&d, &rd));
    }
    let shapes = (0..=30).all(|n| {
        cube_coefficients_log_concave(n).unwrap_or(false) && indegree_coefficients_log_concave(n).unwrap_or(false)
    });
    println!("log-concave and unimodal up to n = 30: {shapes}");
    for m in 1..=6 {
        let c = chebyshev_check(m)?;
        println!(
            "m={m} A derived {} A corrected {} A printed {} B {}",
            c.a_derived, c.a_corrected, c.a_printed, c.b
        );
    }
    Ok(())
}
