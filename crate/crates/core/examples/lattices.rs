//! Builds Ω_n, Γ_n and Λ_n and prints their sizes, then the DOT of Ω_4.

use lucas_cubes::lattice::{gamma, lucas_cube, omega};

fn main() -> lucas_cubes::Result<()> {
    println!("{:>3} {:>8} {:>8} {:>8} {:>8}", "n", "|Ω_n|", "‖Ω_n‖", "|Γ_n|", "|Λ_n|");
    for n in 1..=10 {
        let o = omega(n)?;
        let g = gamma(n)?;
        let l = lucas_cube(n)?;
        println!(
            "{n:>3} {:>8} {:>8} {:>8} {:>8}",
            o.vertex_count(),
            o.arc_count(),
            g.vertex_count(),
            l.vertex_count()
        );
    }
    print!("{}", omega(4)?.to_dot());
    Ok(())
}
