//! Rebuilds Ω_n by doubling a cutting of Ω_{n-1} shaped like Ω_{n-2}, and
//! by doubling twice starting from the dual of Γ_{n-2}.

use lucas_cubes::lattice::{find_cutting_decomposition, gamma, omega, reconstruct_by_doubling, reconstruct_in_two_steps};

fn main() -> lucas_cubes::Result<()> {
    for n in 4..=9 {
        let target = omega(n)?;
        let one = reconstruct_by_doubling(&omega(n - 1)?, &omega(n - 2)?, &target)?;
        let piece = gamma(n - 3)?;
        let two = reconstruct_in_two_steps(&gamma(n - 2)?.dual(), &piece, &piece, &target)?;
        let cutting = one.as_ref().map(|(iv, _)| iv.len()).unwrap_or(0);
        println!("n={n}: Ω_(n-1) ⊞ Ω_(n-2) {} (cutting of {cutting}), via Γ {}", one.is_some(), two.is_some());
    }
    if let Some(d) = find_cutting_decomposition(&omega(6)?)? {
        println!(
            "Ω_6 splits into {} + {} vertices",
            d.base.vertex_count(),
            d.cutting_lattice().vertex_count()
        );
    }
    Ok(())
}
