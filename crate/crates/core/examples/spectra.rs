use lucas_cubes::enumeration::{degree_spectrum, graph_metrics, indegree_spectrum, rank_counts};
use lucas_cubes::lattice::omega;

fn main() -> lucas_cubes::Result<()> {
    for n in 1..=9 {
        let h = omega(n)?;
        let g = h.undirected();
        let m = graph_metrics(&g)?;
        println!(
            "n={n} rank [{}] degree [{}] indegree [{}] diam {} rad {} euler {} ham {}",
            rank_counts(&h).to_plain(),
            degree_spectrum(&g).to_plain(),
            indegree_spectrum(&h).to_plain(),
            m.diameter,
            m.radius,
            m.eulerian,
            m.hamiltonian_path
        );
    }
    println!("{}", degree_spectrum(&omega(5)?.undirected()).to_json("omega", 5, "degree"));
    Ok(())
}
