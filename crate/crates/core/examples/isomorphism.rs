use lucas_cubes::lattice::{find_isomorphism_graph, gamma, is_isomorphic_graph, is_isomorphic_hasse, lucas_cube, omega};

fn main() -> lucas_cubes::Result<()> {
    let o4 = omega(4)?.undirected();
    let l4 = lucas_cube(4)?;
    let top = |g: &lucas_cubes::Graph| (0..g.vertex_count()).map(|v| g.degree(v)).max().unwrap_or(0);
    println!(
        "Ω_4 ≅ Λ_4: {:?} (max degree {} vs {})",
        find_isomorphism_graph(&o4, &l4)?,
        top(&o4),
        top(&l4)
    );
    for n in 5..=8 {
        println!(
            "n={n}: Ω_n ≅ Λ_n {}, Ω_n self-dual {}",
            is_isomorphic_graph(&omega(n)?.undirected(), &lucas_cube(n)?)?,
            is_isomorphic_hasse(&omega(n)?, &omega(n)?.dual())?
        );
    }
    println!("Ω_5 ≅ Γ_5: {}", is_isomorphic_graph(&omega(5)?.undirected(), &gamma(5)?.undirected())?);
    Ok(())
}
