//! Induced cubes of Ω_n: the generic search against the Hasse fast path,
//! maximal cubes, and the cube spectrum of the Lucas cube.

use lucas_cubes::enumeration::{cube_spectrum, cube_spectrum_hasse, enumerate_maximal_cubes, max_cube_dimension};
use lucas_cubes::lattice::{lucas_cube, omega};

fn main() -> lucas_cubes::Result<()> {
    for n in 2..=10 {
        let h = omega(n)?;
        let g = h.undirected();
        let generic = cube_spectrum(&g)?;
        let fast = cube_spectrum_hasse(&h);
        assert_eq!(generic, fast);
        println!(
            "n={n:>2} Q: {:<28} H: {:<12} Λ: {:<28} dim {}",
            generic.to_plain(),
            enumerate_maximal_cubes(&g)?.to_plain(),
            cube_spectrum(&lucas_cube(n)?)?.to_plain(),
            max_cube_dimension(&g)?
        );
    }
    Ok(())
}
