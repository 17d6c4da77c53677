//! Exact isomorphism for small (di)graphs: joint colour refinement on both
//! graphs, then individualise-and-refine backtracking.

use std::collections::{BTreeMap, HashSet};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lattice::HasseGraph;

/// Hard ceiling on vertex count for the isomorphism search.
pub const MAX_ISO_VERTICES: usize = 10_000;

struct Side<'a> {
    out: &'a [Vec<usize>],
    inn: &'a [Vec<usize>],
    arcs: HashSet<(usize, usize)>,
    arc_count: usize,
}

impl<'a> Side<'a> {
    fn new(out: &'a [Vec<usize>], inn: &'a [Vec<usize>]) -> Self {
        let arcs: HashSet<(usize, usize)> = out
            .iter()
            .enumerate()
            .flat_map(|(a, row)| row.iter().map(move |&b| (a, b)))
            .collect();
        let arc_count = arcs.len();
        Side {
            out,
            inn,
            arcs,
            arc_count,
        }
    }

    fn len(&self) -> usize {
        self.out.len()
    }
}

type Signature = (u32, Vec<u32>, Vec<u32>);

fn signature(side: &Side, colors: &[u32], v: usize) -> Signature {
    let mut o: Vec<u32> = side.out[v].iter().map(|&u| colors[u]).collect();
    let mut i: Vec<u32> = side.inn[v].iter().map(|&u| colors[u]).collect();
    o.sort_unstable();
    i.sort_unstable();
    (colors[v], o, i)
}

/// Refines both colourings together so colour ids stay comparable.
/// Returns `None` as soon as the colour histograms differ.
fn refine(a: &Side, b: &Side, mut ca: Vec<u32>, mut cb: Vec<u32>) -> Option<(Vec<u32>, Vec<u32>)> {
    let mut classes = count_classes(&ca);
    loop {
        let sa: Vec<Signature> = (0..a.len()).map(|v| signature(a, &ca, v)).collect();
        let sb: Vec<Signature> = (0..b.len()).map(|v| signature(b, &cb, v)).collect();
        let mut ids: BTreeMap<&Signature, u32> = BTreeMap::new();
        for s in sa.iter().chain(sb.iter()) {
            ids.entry(s).or_insert(0);
        }
        for (i, v) in ids.values_mut().enumerate() {
            *v = i as u32;
        }
        let na: Vec<u32> = sa.iter().map(|s| ids[s]).collect();
        let nb: Vec<u32> = sb.iter().map(|s| ids[s]).collect();
        if histogram(&na) != histogram(&nb) {
            return None;
        }
        let next = count_classes(&na);
        ca = na;
        cb = nb;
        if next == classes {
            return Some((ca, cb));
        }
        classes = next;
    }
}

fn count_classes(c: &[u32]) -> usize {
    c.iter().collect::<HashSet<_>>().len()
}

fn histogram(c: &[u32]) -> BTreeMap<u32, usize> {
    let mut h = BTreeMap::new();
    for &x in c {
        *h.entry(x).or_insert(0) += 1;
    }
    h
}

fn search(a: &Side, b: &Side, ca: Vec<u32>, cb: Vec<u32>) -> Option<Vec<usize>> {
    let (ca, cb) = refine(a, b, ca, cb)?;
    let hist = histogram(&ca);
    let target = hist
        .iter()
        .filter(|&(_, &size)| size > 1)
        .min_by_key(|&(&c, &size)| (size, c))
        .map(|(&c, _)| c);
    let Some(color) = target else {
        let mut pos = vec![usize::MAX; *ca.iter().max().unwrap_or(&0) as usize + 1];
        for (w, &c) in cb.iter().enumerate() {
            pos[c as usize] = w;
        }
        let map: Vec<usize> = ca.iter().map(|&c| pos[c as usize]).collect();
        let ok = a.arcs.iter().all(|&(x, y)| b.arcs.contains(&(map[x], map[y])));
        return ok.then_some(map);
    };
    let fresh = ca.iter().chain(cb.iter()).copied().max().unwrap_or(0) + 1;
    let v = ca.iter().position(|&c| c == color).expect("class is non-empty");
    for w in (0..b.len()).filter(|&w| cb[w] == color) {
        let mut na = ca.clone();
        let mut nb = cb.clone();
        na[v] = fresh;
        nb[w] = fresh;
        if let Some(m) = search(a, b, na, nb) {
            return Some(m);
        }
    }
    None
}

fn find(a: Side, b: Side) -> Result<Option<Vec<usize>>> {
    if a.len().max(b.len()) > MAX_ISO_VERTICES {
        return Err(Error::SizeLimit {
            what: "isomorphism input",
            actual: a.len().max(b.len()),
            limit: MAX_ISO_VERTICES,
        });
    }
    if a.len() != b.len() || a.arc_count != b.arc_count {
        return Ok(None);
    }
    let n = a.len();
    Ok(search(&a, &b, vec![0; n], vec![0; n]))
}

/// Vertex map `g1 -> g2` preserving arcs, if one exists.
pub fn find_isomorphism_hasse(g1: &HasseGraph, g2: &HasseGraph) -> Result<Option<Vec<usize>>> {
    find(
        Side::new(g1.out_adjacency(), g1.in_adjacency()),
        Side::new(g2.out_adjacency(), g2.in_adjacency()),
    )
}

/// Vertex map `g1 -> g2` preserving edges, if one exists.
pub fn find_isomorphism_graph(g1: &Graph, g2: &Graph) -> Result<Option<Vec<usize>>> {
    find(
        Side::new(g1.adjacency(), g1.adjacency()),
        Side::new(g2.adjacency(), g2.adjacency()),
    )
}

/// Directed isomorphism of Hasse diagrams.
pub fn is_isomorphic_hasse(g1: &HasseGraph, g2: &HasseGraph) -> Result<bool> {
    Ok(find_isomorphism_hasse(g1, g2)?.is_some())
}

/// Isomorphism of undirected graphs.
pub fn is_isomorphic_graph(g1: &Graph, g2: &Graph) -> Result<bool> {
    Ok(find_isomorphism_graph(g1, g2)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn paths_and_cycles() {
        let p4 = path(4);
        let shuffled = Graph::new(4, [(2, 0), (0, 3), (3, 1)]).unwrap();
        let m = find_isomorphism_graph(&p4, &shuffled).unwrap().unwrap();
        for &(a, b) in p4.edges() {
            assert!(shuffled.has_edge(m[a], m[b]));
        }
        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!is_isomorphic_graph(&p4, &star).unwrap());
        let c6 = Graph::new(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        let two_triangles =
            Graph::new(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        // refinement alone cannot tell these apart; backtracking must
        assert!(!is_isomorphic_graph(&c6, &two_triangles).unwrap());
    }

    #[test]
    fn direction_matters() {
        let v = HasseGraph::new(3, [(0, 1), (0, 2)]).unwrap();
        let w = HasseGraph::new(3, [(1, 0), (2, 0)]).unwrap();
        assert!(!is_isomorphic_hasse(&v, &w).unwrap());
        assert!(is_isomorphic_graph(&v.undirected(), &w.undirected()).unwrap());
        assert!(is_isomorphic_hasse(&v.dual(), &w).unwrap());
    }

    #[test]
    fn regular_graph_with_symmetry() {
        // 3-cube under a relabelling
        let q3 = Graph::new(
            8,
            (0..8usize).flat_map(|v| (0..3).map(move |b| (v, v ^ (1 << b)))),
        )
        .unwrap();
        let perm = [5usize, 2, 7, 0, 3, 6, 1, 4];
        let relabelled = Graph::new(8, q3.edges().iter().map(|&(a, b)| (perm[a], perm[b]))).unwrap();
        assert!(is_isomorphic_graph(&q3, &relabelled).unwrap());
    }

    #[test]
    fn small_family_members() {
        use crate::lattice::{gamma, lucas_cube, omega};
        assert!(is_isomorphic_graph(&omega(3).unwrap().undirected(), &path(4)).unwrap());
        // same order, size and square count, but Λ_4 has a vertex of degree 4
        let o4 = omega(4).unwrap().undirected();
        let l4 = lucas_cube(4).unwrap();
        assert_eq!((o4.vertex_count(), o4.edge_count()), (l4.vertex_count(), l4.edge_count()));
        let max_deg = |g: &Graph| (0..g.vertex_count()).map(|v| g.degree(v)).max().unwrap();
        assert_eq!((max_deg(&o4), max_deg(&l4)), (3, 4));
        assert!(!is_isomorphic_graph(&o4, &l4).unwrap());
        assert!(!is_isomorphic_graph(&omega(5).unwrap().undirected(), &gamma(5).unwrap().undirected()).unwrap());
    }
}
