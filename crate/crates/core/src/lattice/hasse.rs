use std::collections::VecDeque;
use std::fmt::Write as _;
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poset::Filter;

/// What a lattice vertex stands for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Payload {
    /// A filter of the underlying poset.
    Filter(Filter),
    /// A copy `(original, bit)` produced by doubling an interval; vertices
    /// outside the doubled interval carry `bit = None`.
    Doubled { original: usize, bit: Option<u8> },
    /// A binary string label (Fibonacci / Lucas cube vertices).
    Bits(String),
}

/// Directed cover graph of a finite graded poset, arcs pointing from the
/// lower element to the upper one.
#[derive(Debug, Clone)]
pub struct HasseGraph {
    arcs: Vec<(usize, usize)>,
    rank: Vec<usize>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    payload: Option<Vec<Payload>>,
    order: OnceLock<Order>,
}

/// Reflexive up-sets and down-sets of every vertex.
#[derive(Debug, Clone)]
pub struct Order {
    pub above: Vec<FixedBitSet>,
    pub below: Vec<FixedBitSet>,
}

#[derive(Serialize, Deserialize)]
struct HasseJson {
    n: usize,
    arcs: Vec<[usize; 2]>,
    rank: Vec<usize>,
}

impl HasseGraph {
    /// Builds a Hasse graph from cover arcs `(lower, upper)`.
    ///
    /// Ranks are path lengths from the sources; every arc has to raise the
    /// rank by exactly one, otherwise the input is rejected as ungraded.
    pub fn new(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut arcs: Vec<(usize, usize)> = arcs.into_iter().collect();
        arcs.sort_unstable();
        arcs.dedup();
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for &(a, b) in &arcs {
            if a >= n || b >= n {
                return Err(Error::InvalidElement { id: a.max(b), n });
            }
            if a == b {
                return Err(Error::Cyclic);
            }
            up[a].push(b);
            down[b].push(a);
        }
        let order = topological(&up, &down).ok_or(Error::Cyclic)?;
        let mut rank = vec![0usize; n];
        for &v in &order {
            for &u in &up[v] {
                rank[u] = rank[u].max(rank[v] + 1);
            }
        }
        for &(a, b) in &arcs {
            if rank[b] != rank[a] + 1 {
                return Err(Error::NotGraded(format!(
                    "arc {a}->{b} goes from rank {} to rank {}",
                    rank[a], rank[b]
                )));
            }
        }
        Ok(HasseGraph {
            arcs,
            rank,
            up,
            down,
            payload: None,
            order: OnceLock::new(),
        })
    }

    /// Builds the Hasse graph of a partial order given by reflexive up-sets.
    pub fn from_order(above: &[FixedBitSet]) -> Result<Self> {
        let n = above.len();
        let mut arcs = Vec::new();
        for a in 0..n {
            for b in above[a].ones() {
                if b == a {
                    continue;
                }
                // b covers a iff nothing strictly between
                let mut between = above[a].clone();
                between.set(a, false);
                between.set(b, false);
                let covered = between.ones().all(|c| !above[c].contains(b));
                if covered {
                    arcs.push((a, b));
                }
            }
        }
        HasseGraph::new(n, arcs)
    }

    pub fn with_payload(mut self, payload: Vec<Payload>) -> Self {
        assert_eq!(payload.len(), self.vertex_count());
        self.payload = Some(payload);
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.rank.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn rank(&self, v: usize) -> usize {
        self.rank[v]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.rank
    }

    /// Length of the longest chain, in arcs.
    pub fn height(&self) -> usize {
        self.rank.iter().copied().max().unwrap_or(0)
    }

    /// Upper covers of `v`.
    pub fn up(&self, v: usize) -> &[usize] {
        &self.up[v]
    }

    /// Lower covers of `v`.
    pub fn down(&self, v: usize) -> &[usize] {
        &self.down[v]
    }

    pub fn out_adjacency(&self) -> &[Vec<usize>] {
        &self.up
    }

    pub fn in_adjacency(&self) -> &[Vec<usize>] {
        &self.down
    }

    pub fn payload(&self) -> Option<&[Payload]> {
        self.payload.as_deref()
    }

    pub fn sources(&self) -> Vec<usize> {
        (0..self.vertex_count())
            .filter(|&v| self.down[v].is_empty())
            .collect()
    }

    pub fn sinks(&self) -> Vec<usize> {
        (0..self.vertex_count())
            .filter(|&v| self.up[v].is_empty())
            .collect()
    }

    /// The unique minimum, if there is exactly one source.
    pub fn bottom(&self) -> Option<usize> {
        match self.sources().as_slice() {
            [v] => Some(*v),
            _ => None,
        }
    }

    /// The unique maximum, if there is exactly one sink.
    pub fn top(&self) -> Option<usize> {
        match self.sinks().as_slice() {
            [v] => Some(*v),
            _ => None,
        }
    }

    pub fn order(&self) -> &Order {
        self.order.get_or_init(|| {
            let n = self.vertex_count();
            let topo = topological(&self.up, &self.down).expect("acyclic by construction");
            let mut above = vec![FixedBitSet::with_capacity(n); n];
            for &v in topo.iter().rev() {
                let mut set = FixedBitSet::with_capacity(n);
                set.insert(v);
                for &u in &self.up[v] {
                    set.union_with(&above[u]);
                }
                above[v] = set;
            }
            let mut below = vec![FixedBitSet::with_capacity(n); n];
            for (v, set) in above.iter().enumerate() {
                for u in set.ones() {
                    below[u].insert(v);
                }
            }
            Order { above, below }
        })
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.order().above[a].contains(b)
    }

    /// Undirected view.
    pub fn undirected(&self) -> Graph {
        Graph::new(self.vertex_count(), self.arcs.iter().copied()).expect("arcs are valid")
    }

    /// The dual order: every arc reversed, ranks recomputed.
    pub fn dual(&self) -> HasseGraph {
        let g = HasseGraph::new(self.vertex_count(), self.arcs.iter().map(|&(a, b)| (b, a)))
            .expect("dual of a graded order is graded");
        match &self.payload {
            Some(p) => g.with_payload(p.clone()),
            None => g,
        }
    }

    /// Induced suborder on `members` (listed in increasing vertex order),
    /// returned together with the member list that maps new ids to old ones.
    pub fn induced(&self, members: &FixedBitSet) -> Result<(HasseGraph, Vec<usize>)> {
        let verts: Vec<usize> = members.ones().collect();
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let ord = self.order();
        let above: Vec<FixedBitSet> = verts
            .iter()
            .map(|&v| {
                let mut s = FixedBitSet::with_capacity(verts.len());
                for u in ord.above[v].ones() {
                    if index[u] != usize::MAX {
                        s.insert(index[u]);
                    }
                }
                s
            })
            .collect();
        let g = HasseGraph::from_order(&above)?;
        Ok((g, verts))
    }

    /// Checks that every pair has a join and a meet.
    pub fn is_lattice(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return false;
        }
        let ord = self.order();
        for a in 0..n {
            for b in (a + 1)..n {
                if !has_least(&ord.above[a], &ord.above[b], &ord.above)
                    || !has_least(&ord.below[a], &ord.below[b], &ord.below)
                {
                    return false;
                }
            }
        }
        true
    }

    /// Join-irreducible elements: exactly one lower cover.
    pub fn join_irreducibles(&self) -> Vec<usize> {
        (0..self.vertex_count())
            .filter(|&v| self.down[v].len() == 1)
            .collect()
    }

    /// A finite lattice is distributive exactly when it has as many elements
    /// as its poset of join-irreducibles has down-sets.
    pub fn is_distributive(&self) -> bool {
        if !self.is_lattice() {
            return false;
        }
        let ji = self.join_irreducibles();
        if ji.len() > crate::poset::MAX_POSET_ELEMENTS {
            return false;
        }
        match join_irreducible_poset(self) {
            Ok(p) => p
                .antichains(None)
                .map(|c| c as usize == self.vertex_count())
                .unwrap_or(false),
            Err(_) => false,
        }
    }

    pub fn to_json(&self) -> String {
        let doc = HasseJson {
            n: self.vertex_count(),
            arcs: self.arcs.iter().map(|&(a, b)| [a, b]).collect(),
            rank: self.rank.clone(),
        };
        serde_json::to_string_pretty(&doc).expect("hasse graph serializes")
    }

    pub fn from_json(text: &str) -> Result<HasseGraph> {
        let doc: HasseJson =
            serde_json::from_str(text).map_err(|e| Error::InvalidArgument(e.to_string()))?;
        let g = HasseGraph::new(doc.n, doc.arcs.into_iter().map(|[a, b]| (a, b)))?;
        if g.rank != doc.rank {
            return Err(Error::NotGraded("stored ranks disagree with arcs".into()));
        }
        Ok(g)
    }

    /// DOT with one `rank=same` layer per rank, bottom layer first.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph hasse {\n  rankdir=BT;\n");
        for r in 0..=self.height() {
            let layer: Vec<String> = (0..self.vertex_count())
                .filter(|&v| self.rank[v] == r)
                .map(|v| v.to_string())
                .collect();
            if !layer.is_empty() {
                let _ = writeln!(s, "  {{ rank=same; {} }}", layer.join("; "));
            }
        }
        for v in 0..self.vertex_count() {
            let label = match self.payload.as_ref().map(|p| &p[v]) {
                Some(Payload::Bits(b)) => b.clone(),
                Some(Payload::Filter(f)) => format!("{:b}", f.0),
                Some(Payload::Doubled { original, bit }) => match bit {
                    Some(b) => format!("{original}.{b}"),
                    None => original.to_string(),
                },
                None => v.to_string(),
            };
            let _ = writeln!(s, "  {v} [label=\"{label}\"];");
        }
        for &(a, b) in &self.arcs {
            let _ = writeln!(s, "  {a} -> {b};");
        }
        s.push_str("}\n");
        s
    }
}

/// `a`-set ∩ `b`-set has an element whose own set covers the intersection.
fn has_least(a: &FixedBitSet, b: &FixedBitSet, sets: &[FixedBitSet]) -> bool {
    let mut common = a.clone();
    common.intersect_with(b);
    common.ones().any(|c| common.is_subset(&sets[c]))
}

/// The poset of join-irreducibles, ordered as in the lattice.
pub fn join_irreducible_poset(l: &HasseGraph) -> Result<crate::poset::Poset> {
    let ji = l.join_irreducibles();
    let mut pairs = Vec::new();
    for (i, &a) in ji.iter().enumerate() {
        for (j, &b) in ji.iter().enumerate() {
            if i != j && l.leq(a, b) {
                pairs.push((i, j));
            }
        }
    }
    crate::poset::Poset::from_relations(ji.len(), &pairs)
}

fn topological(up: &[Vec<usize>], down: &[Vec<usize>]) -> Option<Vec<usize>> {
    let n = up.len();
    let mut indeg: Vec<usize> = down.iter().map(Vec::len).collect();
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &u in &up[v] {
            indeg[u] -= 1;
            if indeg[u] == 0 {
                queue.push_back(u);
            }
        }
    }
    (order.len() == n).then_some(order)
}

/// A closed interval `[bottom, top]` of a lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub bottom: usize,
    pub top: usize,
    pub members: FixedBitSet,
}

impl Interval {
    /// `{v : bottom <= v <= top}`; errors if `bottom` is not below `top`.
    pub fn new(l: &HasseGraph, bottom: usize, top: usize) -> Result<Self> {
        let n = l.vertex_count();
        if bottom >= n || top >= n {
            return Err(Error::InvalidElement {
                id: bottom.max(top),
                n,
            });
        }
        if !l.leq(bottom, top) {
            return Err(Error::NotAnInterval);
        }
        let ord = l.order();
        let mut members = ord.above[bottom].clone();
        members.intersect_with(&ord.below[top]);
        Ok(Interval {
            bottom,
            top,
            members,
        })
    }

    /// Recognises a vertex set as an interval, or fails with `NotAnInterval`.
    pub fn from_members(l: &HasseGraph, members: &FixedBitSet) -> Result<Self> {
        let ord = l.order();
        let bottoms: Vec<usize> = members
            .ones()
            .filter(|&v| members.is_subset(&ord.above[v]))
            .collect();
        let tops: Vec<usize> = members
            .ones()
            .filter(|&v| members.is_subset(&ord.below[v]))
            .collect();
        match (bottoms.as_slice(), tops.as_slice()) {
            ([b], [t]) => {
                let iv = Interval::new(l, *b, *t)?;
                if &iv.members == members {
                    Ok(iv)
                } else {
                    Err(Error::NotAnInterval)
                }
            }
            _ => Err(Error::NotAnInterval),
        }
    }

    /// The whole lattice, when it has a bottom and a top.
    pub fn whole(l: &HasseGraph) -> Result<Self> {
        let b = l.bottom().ok_or(Error::NotAnInterval)?;
        let t = l.top().ok_or(Error::NotAnInterval)?;
        Interval::new(l, b, t)
    }

    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.contains(v)
    }

    /// Checks the members are exactly `[bottom, top]` in `l`.
    pub fn is_valid_in(&self, l: &HasseGraph) -> bool {
        Interval::new(l, self.bottom, self.top)
            .map(|iv| iv.members == self.members)
            .unwrap_or(false)
    }
}
