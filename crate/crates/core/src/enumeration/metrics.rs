use crate::error::{Error, Result};
use crate::graph::Graph;

use super::packing::SearchLimits;

/// Distance and traversal facts about a connected graph. Distances count
/// edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphMetrics {
    pub diameter: usize,
    pub radius: usize,
    /// Connected with every degree even (has an Euler circuit).
    pub eulerian: bool,
    pub hamiltonian_path: bool,
}

pub fn graph_metrics(g: &Graph) -> Result<GraphMetrics> {
    graph_metrics_with(g, SearchLimits::default())
}

pub fn graph_metrics_with(g: &Graph, limits: SearchLimits) -> Result<GraphMetrics> {
    if g.vertex_count() == 0 || !g.is_connected() {
        return Err(Error::InvalidArgument("metrics need a non-empty connected graph".into()));
    }
    let ecc: Vec<usize> = (0..g.vertex_count())
        .map(|v| g.bfs(v).into_iter().max().unwrap_or(0))
        .collect();
    Ok(GraphMetrics {
        diameter: *ecc.iter().max().unwrap_or(&0),
        radius: *ecc.iter().min().unwrap_or(&0),
        eulerian: (0..g.vertex_count()).all(|v| g.degree(v).is_multiple_of(2)),
        hamiltonian_path: hamiltonian_path(g, limits)?.is_some(),
    })
}

/// A Hamiltonian path if one exists. Bipartite class sizes are checked
/// first; the search extends towards the neighbour with the fewest free
/// neighbours and prunes when the unvisited part disconnects or has more
/// than one forced endpoint.
pub fn hamiltonian_path(g: &Graph, limits: SearchLimits) -> Result<Option<Vec<usize>>> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    if !g.is_connected() {
        return Ok(None);
    }
    let mut starts: Vec<usize> = (0..n).collect();
    if let Some(side) = g.bipartition() {
        let ones = side.iter().filter(|&&s| s).count();
        let zeros = n - ones;
        if zeros.abs_diff(ones) > 1 {
            return Ok(None);
        }
        if zeros != ones {
            let big = ones > zeros;
            starts.retain(|&v| side[v] == big);
        }
    }
    // low-degree vertices are likely endpoints
    starts.sort_by_key(|&v| (g.degree(v), v));
    let mut h = Ham {
        g,
        visited: vec![false; n],
        path: Vec::with_capacity(n),
        nodes: 0,
        limits,
    };
    for s in starts {
        h.visited[s] = true;
        h.path.push(s);
        if h.dfs()? {
            return Ok(Some(h.path));
        }
        h.path.pop();
        h.visited[s] = false;
    }
    Ok(None)
}

struct Ham<'a> {
    g: &'a Graph,
    visited: Vec<bool>,
    path: Vec<usize>,
    nodes: u64,
    limits: SearchLimits,
}

impl Ham<'_> {
    fn free_degree(&self, v: usize) -> usize {
        self.g.neighbors(v).iter().filter(|&&u| !self.visited[u]).count()
    }

    fn feasible(&self, at: usize) -> bool {
        let n = self.g.vertex_count();
        let unvisited: Vec<usize> = (0..n).filter(|&v| !self.visited[v]).collect();
        let Some(&first) = unvisited.first() else {
            return true;
        };
        // a free vertex with one free neighbour not adjacent to `at` must end the path
        let mut ends = 0;
        for &v in &unvisited {
            let d = self.free_degree(v);
            let touches = self.g.has_edge(v, at);
            if d == 0 && !touches {
                return false;
            }
            if d + usize::from(touches) <= 1 {
                ends += 1;
            }
        }
        if ends > 1 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![first];
        seen[first] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &u in self.g.neighbors(v) {
                if !self.visited[u] && !seen[u] {
                    seen[u] = true;
                    reached += 1;
                    stack.push(u);
                }
            }
        }
        reached == unvisited.len()
    }

    fn dfs(&mut self) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.limits.max_nodes {
            return Err(Error::SearchBudget {
                what: "Hamiltonian path",
                nodes: self.nodes,
            });
        }
        if self.path.len() == self.g.vertex_count() {
            return Ok(true);
        }
        let at = *self.path.last().expect("path is non-empty");
        if !self.feasible(at) {
            return Ok(false);
        }
        let mut next: Vec<usize> = self
            .g
            .neighbors(at)
            .iter()
            .copied()
            .filter(|&u| !self.visited[u])
            .collect();
        next.sort_by_key(|&u| (self.free_degree(u), u));
        for u in next {
            self.visited[u] = true;
            self.path.push(u);
            if self.dfs()? {
                return Ok(true);
            }
            self.path.pop();
            self.visited[u] = false;
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::omega;

    #[test]
    fn path_graph() {
        let m = graph_metrics(&omega(3).unwrap().undirected()).unwrap();
        assert_eq!(
            m,
            GraphMetrics {
                diameter: 3,
                radius: 2,
                eulerian: false,
                hamiltonian_path: true
            }
        );
    }

    #[test]
    fn star_has_no_hamiltonian_path() {
        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!graph_metrics(&star).unwrap().hamiltonian_path);
        let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(graph_metrics(&c4).unwrap().eulerian);
    }

    #[test]
    fn path_is_valid() {
        let g = omega(7).unwrap().undirected();
        let p = hamiltonian_path(&g, SearchLimits::default()).unwrap().unwrap();
        assert_eq!(p.len(), g.vertex_count());
        assert!(p.windows(2).all(|w| g.has_edge(w[0], w[1])));
    }
}
