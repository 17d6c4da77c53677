//! Perfect matchings of hexagonal chains and their resonance digraphs:
//! lucasenes give Ω_n, fibonaccenes give Γ_n.

use lucas_cubes::resonance::{
    build_chain, perfect_matchings, verify_fibonaccene, verify_ztgfl, z_digraph, HexChain, LucaseneVariant,
};

fn main() -> lucas_cubes::Result<()> {
    for n in 2..=8 {
        for v in LucaseneVariant::ALL {
            let r = verify_ztgfl(n, v)?;
            println!(
                "lucasene {:<8} {} matchings, Ω_{n} match: {}",
                r.chain.to_string(),
                r.matchings,
                r.orientation.name()
            );
        }
        let f = verify_fibonaccene(n)?;
        println!("fibonaccene n={n}: {} matchings, ≅ Γ_{n}: {}", f.matchings, f.undirected_isomorphic);
    }
    let anthracene = build_chain(&HexChain::parse("S")?)?;
    for m in perfect_matchings(&anthracene) {
        println!("{:?}", m.edges());
    }
    let (_, z) = z_digraph(&anthracene)?;
    print!("{}", z.to_dot());
    Ok(())
}
