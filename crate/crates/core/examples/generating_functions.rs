//! Expands the bivariate generating functions and reads off columns.

use lucas_cubes::formulas::{column, cube_count_genfunc, padovan_genfunc, PolyKind};

fn main() -> lucas_cubes::Result<()> {
    let order = 12;
    for kind in PolyKind::ALL {
        let series = kind.genfunc();
        let coeffs = series.expand(order)?;
        println!("{kind}: y^{order} -> {}", coeffs[order].to_plain());
    }
    let q = PolyKind::Cube.genfunc().expand(order)?;
    println!("edges (x^1 column): {:?}", column(&q, 1).iter().map(ToString::to_string).collect::<Vec<_>>());
    let squares = cube_count_genfunc(2)?.expand(order)?;
    println!("squares: {:?}", squares.iter().map(|p| p.coeff(0).to_string()).collect::<Vec<_>>());
    let p = padovan_genfunc().expand(order)?;
    println!("p': {:?}", p.iter().map(|c| c.coeff(0).to_string()).collect::<Vec<_>>());
    Ok(())
}
