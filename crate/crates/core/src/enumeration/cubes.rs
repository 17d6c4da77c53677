use std::collections::HashSet;

use fixedbitset::FixedBitSet;
use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lattice::HasseGraph;

use super::SpectrumVector;

/// Largest graph the generic cube search accepts.
pub const MAX_CUBE_GRAPH: usize = 20_000;

/// An induced hypercube `Q_k`: `vertices[S]` is the vertex with coordinate
/// set `S` (as a bitmask over the `k` directions); `vertices[0]` is the
/// base, which is the least vertex id in the cube.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CubeSet {
    pub base: usize,
    pub dimension: usize,
    pub vertices: Vec<usize>,
}

impl CubeSet {
    pub fn sorted_vertices(&self) -> Vec<usize> {
        let mut v = self.vertices.clone();
        v.sort_unstable();
        v
    }

    /// The `2k` facets, each as a sorted vertex list.
    pub fn facets(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::with_capacity(2 * self.dimension);
        for d in 0..self.dimension {
            for side in [0, 1] {
                let mut f: Vec<usize> = (0..self.vertices.len())
                    .filter(|s| (s >> d) & 1 == side)
                    .map(|s| self.vertices[s])
                    .collect();
                f.sort_unstable();
                out.push(f);
            }
        }
        out
    }
}

struct Search<'a> {
    g: &'a Graph,
    adj: Vec<FixedBitSet>,
    max_dim: usize,
}

impl Search<'_> {
    /// Walks every induced cube with base `b`; `visit` sees each one once.
    fn cubes_at(&self, b: usize, visit: &mut dyn FnMut(&[usize], usize)) {
        let mut f = vec![b];
        let mut assigned = FixedBitSet::with_capacity(self.g.vertex_count());
        assigned.insert(b);
        visit(&f, 0);
        let nbrs: Vec<usize> = self.g.neighbors(b).iter().copied().filter(|&u| u > b).collect();
        self.extend(b, &nbrs, 0, &mut f, &mut assigned, visit);
    }

    fn extend(
        &self,
        b: usize,
        nbrs: &[usize],
        start: usize,
        f: &mut Vec<usize>,
        assigned: &mut FixedBitSet,
        visit: &mut dyn FnMut(&[usize], usize),
    ) {
        let dim = f.len().trailing_zeros() as usize;
        if dim == self.max_dim {
            return;
        }
        for (idx, &w) in nbrs.iter().enumerate().skip(start) {
            if assigned.contains(w) {
                continue;
            }
            let old = f.len();
            self.complete(b, old, w, f, assigned, &mut |f, assigned| {
                visit(f, dim + 1);
                self.extend(b, nbrs, idx + 1, f, assigned, visit);
            });
            debug_assert_eq!(f.len(), old);
        }
    }

    /// Fills `f[old + s]` for `s = 0..old` so that `f` becomes a cube of
    /// one more dimension whose new direction starts at the neighbour `w`.
    fn complete(
        &self,
        b: usize,
        old: usize,
        w: usize,
        f: &mut Vec<usize>,
        assigned: &mut FixedBitSet,
        done: &mut dyn FnMut(&mut Vec<usize>, &mut FixedBitSet),
    ) {
        let s = f.len() - old;
        if s == old {
            done(f, assigned);
            return;
        }
        let twin = f[s];
        let candidates: Vec<usize> = if s == 0 {
            vec![w]
        } else {
            let low = s & s.wrapping_neg();
            let side = f[old + (s ^ low)];
            self.adj[twin]
                .intersection(&self.adj[side])
                .filter(|&c| c > b && !assigned.contains(c))
                .collect()
        };
        for c in candidates {
            // must see exactly f[s] and f[old + (s - i)] among assigned vertices
            let expected = s.count_ones() as usize + 1;
            if self.adj[c].intersection_count(assigned) != expected {
                continue;
            }
            if !self.adj[c].contains(twin) {
                continue;
            }
            let mut ok = true;
            let mut rest = s;
            while rest != 0 {
                let i = rest & rest.wrapping_neg();
                rest ^= i;
                if !self.adj[c].contains(f[old + (s ^ i)]) {
                    ok = false;
                    break;
                }
            }
            if !ok {
                continue;
            }
            f.push(c);
            assigned.insert(c);
            self.complete(b, old, w, f, assigned, done);
            assigned.set(c, false);
            f.pop();
        }
    }
}

fn search(g: &Graph, max_dim: usize) -> Result<Search<'_>> {
    if g.vertex_count() > MAX_CUBE_GRAPH {
        return Err(Error::SizeLimit {
            what: "cube search graph",
            actual: g.vertex_count(),
            limit: MAX_CUBE_GRAPH,
        });
    }
    Ok(Search {
        g,
        adj: g.adjacency_bits(),
        max_dim,
    })
}

/// Number of induced cubes of each dimension, by exhaustive search.
pub fn cube_spectrum(g: &Graph) -> Result<SpectrumVector> {
    let s = search(g, usize::MAX)?;
    let mut counts: Vec<u64> = Vec::new();
    for b in 0..g.vertex_count() {
        s.cubes_at(b, &mut |_, d| {
            if counts.len() <= d {
                counts.resize(d + 1, 0);
            }
            counts[d] += 1;
        });
    }
    Ok(SpectrumVector::from_u64(&counts))
}

/// Number of induced `Q_k` subgraphs (counted as vertex sets).
pub fn count_induced_cubes(g: &Graph, k: usize) -> Result<BigUint> {
    let s = search(g, k)?;
    let mut count = 0u64;
    for b in 0..g.vertex_count() {
        s.cubes_at(b, &mut |_, d| {
            if d == k {
                count += 1;
            }
        });
    }
    Ok(count.into())
}

/// Cube counts of a distributive lattice read off its covers:
/// every induced `Q_k` is an interval from some `v` to the join of `k`
/// of its upper covers, so `q_k = Σ_v C(up(v), k)`.
pub fn cube_spectrum_hasse(h: &HasseGraph) -> SpectrumVector {
    let mut counts: Vec<BigUint> = Vec::new();
    for v in 0..h.vertex_count() {
        let up = h.up(v).len();
        let mut c = BigUint::from(1u32);
        for k in 0..=up {
            if counts.len() <= k {
                counts.resize(k + 1, BigUint::default());
            }
            counts[k] += &c;
            c = c * BigUint::from(up - k) / BigUint::from(k + 1);
        }
    }
    SpectrumVector::new(counts)
}

pub fn count_induced_cubes_hasse(h: &HasseGraph, k: usize) -> BigUint {
    cube_spectrum_hasse(h).get(k)
}

/// All induced cubes of dimension `k`.
pub fn enumerate_cubes(g: &Graph, k: usize) -> Result<Vec<CubeSet>> {
    let s = search(g, k)?;
    let mut out = Vec::new();
    for b in 0..g.vertex_count() {
        s.cubes_at(b, &mut |f, d| {
            if d == k {
                out.push(CubeSet {
                    base: b,
                    dimension: k,
                    vertices: f.to_vec(),
                });
            }
        });
    }
    Ok(out)
}

/// Largest `k` with an induced `Q_k` (0 for a graph with vertices but no
/// edges).
pub fn max_cube_dimension(g: &Graph) -> Result<usize> {
    Ok(cube_spectrum(g)?.len().saturating_sub(1))
}

/// `h_k`: induced `Q_k` not contained in any induced `Q_{k+1}`.
pub fn enumerate_maximal_cubes(g: &Graph) -> Result<SpectrumVector> {
    let s = search(g, usize::MAX)?;
    let mut by_dim: Vec<Vec<CubeSet>> = Vec::new();
    for b in 0..g.vertex_count() {
        s.cubes_at(b, &mut |f, d| {
            if by_dim.len() <= d {
                by_dim.resize(d + 1, Vec::new());
            }
            by_dim[d].push(CubeSet {
                base: b,
                dimension: d,
                vertices: f.to_vec(),
            });
        });
    }
    let mut counts = vec![0u64; by_dim.len()];
    for k in 0..by_dim.len() {
        let covered: HashSet<Vec<usize>> = by_dim
            .get(k + 1)
            .map(|up| up.iter().flat_map(CubeSet::facets).collect())
            .unwrap_or_default();
        counts[k] = by_dim[k]
            .iter()
            .filter(|c| !covered.contains(&c.sorted_vertices()))
            .count() as u64;
    }
    Ok(SpectrumVector::from_u64(&counts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::omega;

    fn hypercube(d: usize) -> Graph {
        let n = 1usize << d;
        Graph::new(n, (0..n).flat_map(|v| (0..d).map(move |b| (v, v ^ (1 << b))))).unwrap()
    }

    #[test]
    fn hypercube_counts() {
        // Q_3: 8 vertices, 12 edges, 6 squares, 1 cube
        let q3 = hypercube(3);
        assert_eq!(cube_spectrum(&q3).unwrap().to_u64(), vec![8, 12, 6, 1]);
        assert_eq!(enumerate_maximal_cubes(&q3).unwrap().to_u64(), vec![0, 0, 0, 1]);
        let q4 = hypercube(4);
        assert_eq!(cube_spectrum(&q4).unwrap().to_u64(), vec![16, 32, 24, 8, 1]);
    }

    #[test]
    fn non_induced_squares_are_skipped() {
        // K4 has 4-cycles but none is induced
        let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(count_induced_cubes(&k4, 2).unwrap(), BigUint::from(0u32));
        // K_{2,3} has three induced squares sharing vertices
        let k23 = Graph::new(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(count_induced_cubes(&k23, 2).unwrap(), BigUint::from(3u32));
    }

    #[test]
    fn omega_four() {
        let o4 = omega(4).unwrap();
        let g = o4.undirected();
        assert_eq!(cube_spectrum(&g).unwrap().to_u64(), vec![7, 8, 2]);
        assert_eq!(cube_spectrum_hasse(&o4).to_u64(), vec![7, 8, 2]);
        assert_eq!(enumerate_maximal_cubes(&g).unwrap().to_u64(), vec![0, 1, 2]);
        assert_eq!(max_cube_dimension(&g).unwrap(), 2);
        assert_eq!(enumerate_cubes(&g, 2).unwrap().len(), 2);
    }

    #[test]
    fn single_vertex() {
        let g = Graph::new(1, []).unwrap();
        assert_eq!(enumerate_maximal_cubes(&g).unwrap().to_u64(), vec![1]);
        assert_eq!(max_cube_dimension(&g).unwrap(), 0);
    }
}
