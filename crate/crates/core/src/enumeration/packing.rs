use std::time::Duration;

use microlp::{ComparisonOp, OptimizationDirection, Problem};

use crate::error::{Error, Result};
use crate::graph::Graph;

use super::cubes::enumerate_cubes;

/// Budgets for the exact searches in this module.
#[derive(Debug, Clone, Copy)]
pub struct SearchLimits {
    /// Nodes of the hand-written branch and bound.
    pub max_nodes: u64,
    /// Wall time given to the 0/1 program before falling back to the
    /// branch and bound. Only speed depends on it, never the answer.
    pub solver_time: Duration,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_nodes: 200_000_000,
            solver_time: Duration::from_secs(30),
        }
    }
}

/// Maximum matching size. Bipartite graphs use augmenting paths; other
/// graphs fall back to exact edge packing.
pub fn max_matching(g: &Graph) -> Result<usize> {
    match g.bipartition() {
        Some(side) => Ok(bipartite_matching(g, &side).0),
        None => {
            let sets: Vec<Vec<usize>> = g.edges().iter().map(|&(a, b)| vec![a, b]).collect();
            pack(g.vertex_count(), &sets, None, SearchLimits::default(), None)
        }
    }
}

/// Kuhn's augmenting paths from the `false` side; returns the size and the
/// mate of every vertex.
fn bipartite_matching(g: &Graph, side: &[bool]) -> (usize, Vec<Option<usize>>) {
    let n = g.vertex_count();
    let mut mate: Vec<Option<usize>> = vec![None; n];
    let mut size = 0;
    for v in (0..n).filter(|&v| !side[v]) {
        let mut seen = vec![false; n];
        if augment(g, v, &mut mate, &mut seen) {
            size += 1;
        }
    }
    (size, mate)
}

fn augment(g: &Graph, v: usize, mate: &mut [Option<usize>], seen: &mut [bool]) -> bool {
    for &u in g.neighbors(v) {
        if seen[u] {
            continue;
        }
        seen[u] = true;
        let free = match mate[u] {
            None => true,
            Some(w) => augment(g, w, mate, seen),
        };
        if free {
            mate[u] = Some(v);
            mate[v] = Some(u);
            return true;
        }
    }
    false
}

/// Maximum independent set size. König's theorem for bipartite graphs,
/// branch and bound otherwise.
pub fn max_independent_set(g: &Graph) -> Result<usize> {
    if g.bipartition().is_some() {
        return Ok(g.vertex_count() - max_matching(g)?);
    }
    let n = g.vertex_count();
    if n > 128 {
        return Err(Error::SizeLimit {
            what: "independent set search on a non-bipartite graph",
            actual: n,
            limit: 128,
        });
    }
    let adj: Vec<u128> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u128, |m, &u| m | 1 << u))
        .collect();
    let all = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    let mut best = 0;
    mis(&adj, all, 0, &mut best);
    Ok(best)
}

fn mis(adj: &[u128], cand: u128, size: usize, best: &mut usize) {
    if cand == 0 {
        *best = (*best).max(size);
        return;
    }
    if size + cand.count_ones() as usize <= *best {
        return;
    }
    // branch on a vertex of maximum degree inside the candidate set
    let mut pick = cand.trailing_zeros() as usize;
    let mut deg = 0;
    let mut rest = cand;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let d = (adj[v] & cand).count_ones();
        if d <= 1 {
            // degree <= 1 vertices are always safe to take
            mis(adj, cand & !(1 << v) & !adj[v], size + 1, best);
            return;
        }
        if d > deg {
            deg = d;
            pick = v;
        }
    }
    mis(adj, cand & !(1 << pick) & !adj[pick], size + 1, best);
    mis(adj, cand & !(1 << pick), size, best);
}

/// Maximum number of pairwise vertex-disjoint induced `Q_k` subgraphs.
pub fn max_disjoint_cubes(g: &Graph, k: usize) -> Result<usize> {
    max_disjoint_cubes_with(g, k, SearchLimits::default())
}

pub fn max_disjoint_cubes_with(g: &Graph, k: usize, limits: SearchLimits) -> Result<usize> {
    match k {
        0 => Ok(g.vertex_count()),
        1 => max_matching(g),
        _ => {
            let sets: Vec<Vec<usize>> = enumerate_cubes(g, k)?
                .into_iter()
                .map(|c| c.vertices)
                .collect();
            let n = g.vertex_count();
            let hint = relaxation(n, &sets);
            let mut floor = 0;
            if let Some((ceiling, _)) = &hint {
                if let Some((found, optimal)) = integer_program(n, &sets, *ceiling, limits.solver_time) {
                    if optimal || found >= *ceiling {
                        return Ok(found);
                    }
                    floor = found;
                }
            }
            Ok(pack(n, &sets, g.bipartition(), limits, hint)?.max(floor))
        }
    }
}

/// Fractional packing relaxation: `⌊LP⌋` as a proven ceiling and the
/// fractional value of each set. `None` when the solver fails.
fn relaxation(n: usize, sets: &[Vec<usize>]) -> Option<(usize, Vec<f64>)> {
    let mut lp = Problem::new(OptimizationDirection::Maximize);
    let vars: Vec<_> = sets.iter().map(|_| lp.add_var(1.0, (0.0, 1.0))).collect();
    let mut incidence = vec![Vec::new(); n];
    for (i, s) in sets.iter().enumerate() {
        for &v in s {
            incidence[v].push((vars[i], 1.0));
        }
    }
    for row in incidence.into_iter().filter(|r| r.len() > 1) {
        lp.add_constraint(row, ComparisonOp::Le, 1.0);
    }
    let outcome = lp.solve().ok()?;
    let sol = outcome.solution()?;
    let v = sol.objective();
    if !v.is_finite() || v < 0.0 {
        return None;
    }
    Some(((v + LP_SLACK).floor() as usize, vars.iter().map(|&x| sol[x]).collect()))
}

/// Best packing the 0/1 program finds within `time`, checked for
/// disjointness here, and whether the solver proved it optimal. The total is
/// capped at `ceiling` so that reaching the ceiling ends the solve.
fn integer_program(n: usize, sets: &[Vec<usize>], ceiling: usize, time: Duration) -> Option<(usize, bool)> {
    let mut ip = Problem::new(OptimizationDirection::Maximize);
    let vars: Vec<_> = sets.iter().map(|_| ip.add_binary_var(1.0)).collect();
    let mut incidence = vec![Vec::new(); n];
    for (i, s) in sets.iter().enumerate() {
        for &v in s {
            incidence[v].push((vars[i], 1.0));
        }
    }
    for row in incidence.into_iter().filter(|r| r.len() > 1) {
        ip.add_constraint(row, ComparisonOp::Le, 1.0);
    }
    ip.add_constraint(vars.iter().map(|&x| (x, 1.0)).collect::<Vec<_>>(), ComparisonOp::Le, ceiling as f64);
    ip.set_time_limit(time);
    let outcome = ip.solve().ok()?;
    let optimal = outcome.is_optimal();
    let sol = outcome.solution()?;
    let mut used = vec![false; n];
    let mut count = 0;
    for (i, s) in sets.iter().enumerate() {
        if sol[vars[i]] > 0.5 {
            if s.iter().any(|&v| used[v]) {
                return None;
            }
            for &v in s {
                used[v] = true;
            }
            count += 1;
        }
    }
    Some((count, optimal))
}

/// Tolerance added to the relaxation optimum before rounding down.
const LP_SLACK: f64 = 1e-6;

/// Exact maximum set packing of equal-size sets. The optional relaxation
/// supplies a ceiling at which the search stops, a rounded starting packing
/// and the branching order.
fn pack(
    n: usize,
    sets: &[Vec<usize>],
    colors: Option<Vec<bool>>,
    limits: SearchLimits,
    hint: Option<(usize, Vec<f64>)>,
) -> Result<usize> {
    let (ceiling, weight) = hint.unwrap_or_else(|| (usize::MAX, vec![0.0; sets.len()]));
    if sets.is_empty() {
        return Ok(0);
    }
    let size = sets[0].len();
    let mut incidence = vec![Vec::new(); n];
    for (i, s) in sets.iter().enumerate() {
        for &v in s {
            incidence[v].push(i);
        }
    }
    // each set holds the same number of vertices of either color class
    let per_class = match &colors {
        Some(side) if sets.iter().all(|s| 2 * s.iter().filter(|&&v| side[v]).count() == size) => {
            size / 2
        }
        _ => 0,
    };
    let mut p = Packer {
        sets,
        incidence,
        colors: colors.unwrap_or_else(|| vec![false; n]),
        per_class,
        blocked: vec![false; n],
        alive: vec![true; sets.len()],
        alive_at: vec![0; n],
        best: 0,
        nodes: 0,
        limits,
        ceiling,
        weight,
    };
    for v in 0..n {
        p.alive_at[v] = p.incidence[v].len();
    }
    p.best = p.greedy().max(p.rounded());
    p.search(0)?;
    Ok(p.best)
}

struct Packer<'a> {
    sets: &'a [Vec<usize>],
    incidence: Vec<Vec<usize>>,
    colors: Vec<bool>,
    per_class: usize,
    blocked: Vec<bool>,
    alive: Vec<bool>,
    alive_at: Vec<usize>,
    best: usize,
    nodes: u64,
    limits: SearchLimits,
    ceiling: usize,
    weight: Vec<f64>,
}

impl Packer<'_> {
    fn greedy(&self) -> usize {
        let mut used = vec![false; self.blocked.len()];
        let mut order: Vec<usize> = (0..self.sets.len()).collect();
        // sets touching rarely used vertices first
        order.sort_by_key(|&i| self.sets[i].iter().map(|&v| self.incidence[v].len()).sum::<usize>());
        let mut count = 0;
        for i in order {
            if self.sets[i].iter().all(|&v| !used[v]) {
                for &v in &self.sets[i] {
                    used[v] = true;
                }
                count += 1;
            }
        }
        count
    }

    /// Sets above one half in the relaxation are pairwise disjoint.
    fn rounded(&self) -> usize {
        self.weight.iter().filter(|&&w| w > 0.5).count()
    }

    /// Blocks `v`, killing every set through it; returns the killed sets.
    fn block(&mut self, v: usize, trail: &mut Vec<usize>) {
        self.blocked[v] = true;
        for idx in 0..self.incidence[v].len() {
            let s = self.incidence[v][idx];
            if self.alive[s] {
                self.alive[s] = false;
                for &u in &self.sets[s] {
                    self.alive_at[u] -= 1;
                }
                trail.push(s);
            }
        }
    }

    fn unblock(&mut self, v: usize, trail: &[usize]) {
        self.blocked[v] = false;
        for &s in trail {
            self.alive[s] = true;
            for &u in &self.sets[s] {
                self.alive_at[u] += 1;
            }
        }
    }

    fn bound(&self) -> usize {
        let size = self.sets[0].len();
        let mut live = [0usize; 2];
        for v in 0..self.blocked.len() {
            if !self.blocked[v] && self.alive_at[v] > 0 {
                live[self.colors[v] as usize] += 1;
            }
        }
        let mut b = (live[0] + live[1]) / size;
        if let (Some(x), Some(y)) = (live[0].checked_div(self.per_class), live[1].checked_div(self.per_class)) {
            b = b.min(x).min(y);
        }
        b
    }

    fn search(&mut self, taken: usize) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.limits.max_nodes {
            return Err(Error::SearchBudget {
                what: "disjoint cube packing",
                nodes: self.nodes,
            });
        }
        self.best = self.best.max(taken);
        if self.best >= self.ceiling || taken + self.bound() <= self.best {
            return Ok(());
        }
        let pick = (0..self.blocked.len())
            .filter(|&v| !self.blocked[v] && self.alive_at[v] > 0)
            .min_by_key(|&v| self.alive_at[v]);
        let Some(v) = pick else {
            return Ok(());
        };
        let mut options: Vec<usize> = self.incidence[v].iter().copied().filter(|&s| self.alive[s]).collect();
        options.sort_by(|&a, &b| self.weight[b].total_cmp(&self.weight[a]));
        for s in options {
            let mut trails = Vec::new();
            for &u in &self.sets[s] {
                let mut t = Vec::new();
                self.block(u, &mut t);
                trails.push((u, t));
            }
            let r = self.search(taken + 1);
            for (u, t) in trails.iter().rev() {
                self.unblock(*u, t);
            }
            r?;
        }
        // leave v uncovered
        let mut t = Vec::new();
        self.block(v, &mut t);
        let r = self.search(taken);
        self.unblock(v, &t);
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::omega;

    #[test]
    fn matchings() {
        let p4 = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(max_matching(&p4).unwrap(), 2);
        let tri = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(max_matching(&tri).unwrap(), 1);
        assert_eq!(max_matching(&omega(4).unwrap().undirected()).unwrap(), 3);
    }

    #[test]
    fn independent_sets() {
        assert_eq!(max_independent_set(&omega(2).unwrap().undirected()).unwrap(), 2);
        let c5 = Graph::new(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert_eq!(max_independent_set(&c5).unwrap(), 2);
        assert_eq!(max_independent_set(&omega(4).unwrap().undirected()).unwrap(), 4);
    }

    #[test]
    fn disjoint_squares() {
        assert_eq!(max_disjoint_cubes(&omega(4).unwrap().undirected(), 2).unwrap(), 1);
        assert_eq!(max_disjoint_cubes(&omega(5).unwrap().undirected(), 2).unwrap(), 2);
        assert_eq!(max_disjoint_cubes(&omega(5).unwrap().undirected(), 3).unwrap(), 0);
    }

    #[test]
    fn budget_is_reported() {
        let g = omega(9).unwrap().undirected();
        let err = max_disjoint_cubes_with(&g, 2, SearchLimits { max_nodes: 3, solver_time: Duration::ZERO }).unwrap_err();
        assert!(matches!(err, Error::SearchBudget { .. }));
    }
}
