//! The L-fence Ξ_n and the fence Z_n: filters, antichains and the join
//! irreducibles of the filter lattice.

use lucas_cubes::lattice::{filter_lattice, join_irreducible_poset};
use lucas_cubes::poset::{make_fence, make_lfence};

fn main() -> lucas_cubes::Result<()> {
    let xi = make_lfence(6)?;
    println!("Ξ_6 covers: {:?}", xi.covers());
    println!("filters of Ξ_6: {}", xi.filters()?.len());
    println!("antichains by size: {:?}", xi.antichain_sizes()?);

    let z = make_fence(6)?;
    println!("filters of Z_6: {}", z.filters()?.len());

    // the join irreducibles of F(P) give back P up to duality
    let l = filter_lattice(&xi)?;
    let back = join_irreducible_poset(&l)?;
    println!("join irreducibles of Ω_6: {} elements, {} covers", back.len(), back.covers().len());
    Ok(())
}
