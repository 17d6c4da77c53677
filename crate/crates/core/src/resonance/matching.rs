use std::collections::HashMap;

use serde_json::json;

use super::chain::{build_chain, Color, HexChain, LucaseneVariant, PlaneBipartiteGraph};
use crate::error::Result;
use crate::formulas::{fibonacci, lucas};
use crate::lattice::{gamma, is_isomorphic_graph, is_isomorphic_hasse, omega, HasseGraph};

/// A perfect matching as a sorted list of edges `(a, b)` with `a < b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PerfectMatching {
    edges: Vec<(usize, usize)>,
}

impl PerfectMatching {
    pub fn new(mut edges: Vec<(usize, usize)>) -> Self {
        for e in &mut edges {
            *e = (e.0.min(e.1), e.0.max(e.1));
        }
        edges.sort_unstable();
        PerfectMatching { edges }
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }

    /// Symmetric difference with the edge set of a cycle.
    fn flip(&self, cycle: &[usize]) -> PerfectMatching {
        let mut edges = self.edges.clone();
        for i in 0..cycle.len() {
            let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
            let e = (a.min(b), a.max(b));
            match edges.binary_search(&e) {
                Ok(pos) => {
                    edges.remove(pos);
                }
                Err(pos) => edges.insert(pos, e),
            }
        }
        PerfectMatching { edges }
    }
}

/// All perfect matchings, in lexicographic order of their edge lists.
pub fn perfect_matchings(g: &PlaneBipartiteGraph) -> Vec<PerfectMatching> {
    fn go(adj: &[Vec<usize>], covered: &mut [bool], current: &mut Vec<(usize, usize)>, out: &mut Vec<PerfectMatching>) {
        let mut pick: Option<(usize, usize)> = None;
        for v in 0..adj.len() {
            if covered[v] {
                continue;
            }
            let free = adj[v].iter().filter(|&&w| !covered[w]).count();
            if pick.is_none_or(|(_, best)| free < best) {
                pick = Some((v, free));
            }
        }
        let Some((v, free)) = pick else {
            out.push(PerfectMatching::new(current.clone()));
            return;
        };
        if free == 0 {
            return;
        }
        covered[v] = true;
        for &w in &adj[v] {
            if covered[w] {
                continue;
            }
            covered[w] = true;
            current.push((v, w));
            go(adj, covered, current, out);
            current.pop();
            covered[w] = false;
        }
        covered[v] = false;
    }
    let adj = g.graph().adjacency();
    let mut out = Vec::new();
    go(adj, &mut vec![false; adj.len()], &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Whether `cell` alternates with respect to `m`, and if so whether it is
/// proper: read clockwise, every matched edge runs from white to black.
fn alternation(g: &PlaneBipartiteGraph, m: &PerfectMatching, cell: &[usize]) -> Option<bool> {
    let len = cell.len();
    let matched: Vec<bool> = (0..len).map(|i| m.contains(cell[i], cell[(i + 1) % len])).collect();
    if !(0..len).all(|i| matched[i] != matched[(i + 1) % len]) {
        return None;
    }
    Some(
        (0..len)
            .filter(|&i| matched[i])
            .all(|i| g.color(cell[i]) == Color::White && g.color(cell[(i + 1) % len]) == Color::Black),
    )
}

/// Resonance (Z-transformation) digraph: one vertex per perfect matching,
/// an arc `M -> M ⊕ C` for every cell `C` that is a proper `M`-alternating
/// cycle. Vertices follow the order of [`perfect_matchings`].
pub fn z_digraph(g: &PlaneBipartiteGraph) -> Result<(Vec<PerfectMatching>, HasseGraph)> {
    let matchings = perfect_matchings(g);
    let index: HashMap<&PerfectMatching, usize> = matchings.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut arcs = Vec::new();
    for (i, m) in matchings.iter().enumerate() {
        for cell in g.cells() {
            if alternation(g, m, cell) == Some(true) {
                arcs.push((i, index[&m.flip(cell)]));
            }
        }
    }
    let hasse = HasseGraph::new(matchings.len(), arcs)?;
    Ok((matchings, hasse))
}

/// Matchings as JSON: `{"matchings": [[[a, b], ...], ...]}`.
pub fn matchings_to_json(matchings: &[PerfectMatching]) -> String {
    let lists: Vec<Vec<[usize; 2]>> = matchings
        .iter()
        .map(|m| m.edges.iter().map(|&(a, b)| [a, b]).collect())
        .collect();
    json!({ "matchings": lists }).to_string()
}

/// How two digraphs matched.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Same,
    Reversed,
    Neither,
}

impl Orientation {
    pub fn name(self) -> &'static str {
        match self {
            Orientation::Same => "same",
            Orientation::Reversed => "reversed",
            Orientation::Neither => "none",
        }
    }
}

fn orientation(z: &HasseGraph, target: &HasseGraph) -> Result<Orientation> {
    Ok(if is_isomorphic_hasse(z, target)? {
        Orientation::Same
    } else if is_isomorphic_hasse(z, &target.dual())? {
        Orientation::Reversed
    } else {
        Orientation::Neither
    })
}

/// Outcome of comparing the resonance digraph of a lucasene with `Ω_n`.
#[derive(Debug, Clone)]
pub struct ZtgflReport {
    pub n: usize,
    pub chain: HexChain,
    pub matchings: usize,
    pub lucas: usize,
    pub is_lattice: bool,
    pub orientation: Orientation,
}

impl ZtgflReport {
    pub fn holds(&self) -> bool {
        self.matchings == self.lucas && self.is_lattice && self.orientation != Orientation::Neither
    }
}

/// Builds the lucasene with `n` hexagons and compares its resonance digraph
/// with the Hasse diagram of `Ω_n`, up to reversing every arc.
pub fn verify_ztgfl(n: usize, variant: LucaseneVariant) -> Result<ZtgflReport> {
    let chain = HexChain::lucasene(n, variant)?;
    let (matchings, z) = z_digraph(&build_chain(&chain)?)?;
    let target = omega(n)?;
    Ok(ZtgflReport {
        n,
        chain,
        matchings: matchings.len(),
        lucas: usize::try_from(lucas(n)).unwrap_or(usize::MAX),
        is_lattice: z.is_lattice(),
        orientation: orientation(&z, &target)?,
    })
}

/// Outcome of comparing the fibonaccene resonance graph with `Γ_n`.
#[derive(Debug, Clone)]
pub struct FibonacceneReport {
    pub n: usize,
    pub matchings: usize,
    pub fibonacci: usize,
    pub undirected_isomorphic: bool,
}

impl FibonacceneReport {
    pub fn holds(&self) -> bool {
        self.matchings == self.fibonacci && self.undirected_isomorphic
    }
}

/// Resonance graph of the zigzag fibonaccene with `n` hexagons against the
/// Fibonacci cube `Γ_n`.
pub fn verify_fibonaccene(n: usize) -> Result<FibonacceneReport> {
    let chain = HexChain::fibonaccene(n)?;
    let (matchings, z) = z_digraph(&build_chain(&chain)?)?;
    Ok(FibonacceneReport {
        n,
        matchings: matchings.len(),
        fibonacci: usize::try_from(fibonacci(n + 2)).unwrap_or(usize::MAX),
        undirected_isomorphic: is_isomorphic_graph(&z.undirected(), &gamma(n)?.undirected())?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_hexagon() {
        let g = build_chain(&HexChain::new(1, Vec::new()).unwrap()).unwrap();
        let (ms, z) = z_digraph(&g).unwrap();
        assert_eq!(ms.len(), 2);
        assert_eq!(z.arcs(), &[(0, 1)][..]);
    }

    #[test]
    fn matching_counts() {
        for n in 2..=9 {
            for v in LucaseneVariant::ALL {
                let g = build_chain(&HexChain::lucasene(n, v).unwrap()).unwrap();
                assert_eq!(perfect_matchings(&g).len(), [0, 1, 3, 4, 7, 11, 18, 29, 47, 76][n]);
            }
            let g = build_chain(&HexChain::fibonaccene(n).unwrap()).unwrap();
            assert_eq!(perfect_matchings(&g).len(), [1, 2, 3, 5, 8, 13, 21, 34, 55, 89][n]);
        }
        let linear = build_chain(&HexChain::parse("SSS").unwrap()).unwrap();
        assert_eq!(perfect_matchings(&linear).len(), 6);
    }

    #[test]
    fn lucasenes_give_omega() {
        for n in 2..=7 {
            for v in LucaseneVariant::ALL {
                let r = verify_ztgfl(n, v).unwrap();
                assert!(r.holds(), "{n} {v:?} {:?}", r.orientation);
            }
        }
    }

    #[test]
    fn interior_straight_hexagon_breaks_the_match() {
        let chain = HexChain::parse("LSLL").unwrap();
        assert!(!chain.is_lucasene());
        let (_, z) = z_digraph(&build_chain(&chain).unwrap()).unwrap();
        assert_eq!(orientation(&z, &omega(6).unwrap()).unwrap(), Orientation::Neither);
        let helicene = HexChain::parse("SLLL").unwrap();
        let (_, z) = z_digraph(&build_chain(&helicene).unwrap()).unwrap();
        assert_eq!(orientation(&z, &omega(6).unwrap()).unwrap(), Orientation::Reversed);
    }

    #[test]
    fn fibonaccenes_give_gamma() {
        for n in 1..=7 {
            assert!(verify_fibonaccene(n).unwrap().holds(), "{n}");
        }
    }

    #[test]
    fn flip_is_involution() {
        let g = build_chain(&HexChain::parse("LR").unwrap()).unwrap();
        let ms = perfect_matchings(&g);
        for m in &ms {
            for cell in g.cells() {
                if alternation(&g, m, cell).is_some() {
                    let f = m.flip(cell);
                    assert!(ms.contains(&f));
                    assert_eq!(f.flip(cell), *m);
                    assert_eq!(alternation(&g, &f, cell), alternation(&g, m, cell).map(|p| !p));
                }
            }
        }
    }
}
