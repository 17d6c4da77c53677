//! Finite posets stored by their cover relation, plus the fence and
//! L-fence families and filter/antichain enumeration.
//!
//! Elements are dense ids `0..n` with `n <= 64`, so every up-set, down-set
//! and filter fits in a single `u64` mask.

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest ground set a [`Poset`] can hold.
pub const MAX_POSET_ELEMENTS: usize = 64;

/// Guards for filter and antichain enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FilterLimits {
    pub max_elements: usize,
    pub max_filters: usize,
}

impl Default for FilterLimits {
    fn default() -> Self {
        FilterLimits {
            max_elements: 40,
            max_filters: 10_000_000,
        }
    }
}

/// An up-closed subset of a poset, as a bitmask over element ids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Filter(pub u64);

impl Filter {
    pub fn empty() -> Self {
        Filter(0)
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0 >> x & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    /// Member ids in increasing order.
    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        bits(self.0)
    }
}

pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

/// A finite poset given by a transitively reduced, acyclic cover relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    covers: Vec<(usize, usize)>,
    labels: Option<Vec<String>>,
    up: Vec<u64>,
    down: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct PosetJson {
    n: usize,
    covers: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl Poset {
    /// Builds a poset from cover pairs `(lower, upper)`.
    ///
    /// Rejects out-of-range ids, cycles, and pairs implied by transitivity.
    /// Duplicate pairs are merged.
    pub fn new(n: usize, covers: Vec<(usize, usize)>) -> Result<Self> {
        let mut covers = covers;
        covers.sort_unstable();
        covers.dedup();
        let (up, down) = closure(n, &covers)?;
        for &(lo, hi) in &covers {
            let between = (up[lo] & down[hi]) & !(1u64 << lo) & !(1u64 << hi);
            if between != 0 {
                return Err(Error::NotTransitivelyReduced {
                    lower: lo,
                    upper: hi,
                });
            }
        }
        Ok(Poset {
            n,
            covers,
            labels: None,
            up,
            down,
        })
    }

    /// Builds a poset from arbitrary strict-order pairs `(a, b)` meaning
    /// `a < b`; the cover relation is the transitive reduction.
    pub fn from_relations(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let (up, down) = closure(n, pairs)?;
        let covers = reduce(n, &up, &down);
        Ok(Poset {
            n,
            covers,
            labels: None,
            up,
            down,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::InvalidArgument(format!(
                "{} labels for {} elements",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    fn with_prefix_labels(self, prefix: &str) -> Self {
        let labels = (1..=self.n).map(|i| format!("{prefix}{i}")).collect();
        Poset {
            labels: Some(labels),
            ..self
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    /// Mask of the full ground set.
    pub fn ground(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    fn check(&self, x: usize) -> Result<()> {
        if x >= self.n {
            Err(Error::InvalidElement { id: x, n: self.n })
        } else {
            Ok(())
        }
    }

    /// `↑x` as a mask (contains `x`).
    pub fn up_set(&self, x: usize) -> u64 {
        self.up[x]
    }

    /// `↓x` as a mask (contains `x`).
    pub fn down_set(&self, x: usize) -> u64 {
        self.down[x]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a] >> b & 1 == 1
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    /// Elements of `set` with no element of `set` strictly below them.
    pub fn minimal_in(&self, set: u64) -> u64 {
        bits(set)
            .filter(|&x| self.down[x] & set == 1u64 << x)
            .fold(0, |m, x| m | 1u64 << x)
    }

    /// Elements of `set` with no element of `set` strictly above them.
    pub fn maximal_in(&self, set: u64) -> u64 {
        bits(set)
            .filter(|&x| self.up[x] & set == 1u64 << x)
            .fold(0, |m, x| m | 1u64 << x)
    }

    pub fn is_filter(&self, set: u64) -> bool {
        bits(set).all(|x| self.up[x] & !set == 0)
    }

    /// Up-closure of an arbitrary subset.
    pub fn up_closure(&self, set: u64) -> u64 {
        bits(set).fold(0, |m, x| m | self.up[x])
    }

    /// The dual poset `P*`: every cover pair reversed.
    pub fn dual(&self) -> Poset {
        let covers = self.covers.iter().map(|&(a, b)| (b, a)).collect();
        Poset {
            n: self.n,
            covers,
            labels: self.labels.clone(),
            up: self.down.clone(),
            down: self.up.clone(),
        }
    }

    /// Induced subposet on the elements of `keep`, renumbered in id order.
    pub fn restrict(&self, keep: u64) -> Poset {
        let kept: Vec<usize> = bits(keep & self.ground()).collect();
        let mut index = vec![usize::MAX; self.n];
        for (new, &old) in kept.iter().enumerate() {
            index[old] = new;
        }
        let mut pairs = Vec::new();
        for &a in &kept {
            for b in bits(self.up[a] & keep) {
                if b != a {
                    pairs.push((index[a], index[b]));
                }
            }
        }
        let mut p = Poset::from_relations(kept.len(), &pairs)
            .expect("restriction of an acyclic order is acyclic");
        if let Some(labels) = &self.labels {
            p.labels = Some(kept.iter().map(|&i| labels[i].clone()).collect());
        }
        p
    }

    /// `P - x`: the induced subposet on everything but `x`.
    pub fn delete(&self, x: usize) -> Result<Poset> {
        self.check(x)?;
        Ok(self.restrict(self.ground() & !(1u64 << x)))
    }

    /// `P * x`: the induced subposet on the elements incomparable with `x`.
    pub fn star_delete(&self, x: usize) -> Result<Poset> {
        self.check(x)?;
        Ok(self.restrict(self.ground() & !(self.up[x] | self.down[x])))
    }

    /// All filters (up-sets), sorted by mask.
    pub fn filters(&self) -> Result<Vec<Filter>> {
        self.filters_with(FilterLimits::default())
    }

    pub fn filters_with(&self, limits: FilterLimits) -> Result<Vec<Filter>> {
        self.guard(limits)?;
        let mut out = Vec::new();
        let mut overflow = false;
        self.walk_antichains(0, 0, 0, 0, &mut |chosen, _| {
            if out.len() >= limits.max_filters {
                overflow = true;
                return false;
            }
            out.push(Filter(self.up_closure(chosen)));
            true
        });
        if overflow {
            return Err(Error::SizeLimit {
                what: "filter list",
                actual: out.len() + 1,
                limit: limits.max_filters,
            });
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Number of antichains, optionally only those of exactly `size`
    /// elements. The total equals the number of filters.
    pub fn antichains(&self, size: Option<usize>) -> Result<u64> {
        self.guard(FilterLimits::default())?;
        let mut count = 0u64;
        self.walk_antichains(0, 0, 0, 0, &mut |_, len| {
            if size.is_none_or(|k| k == len) {
                count += 1;
            }
            true
        });
        Ok(count)
    }

    /// Antichain counts indexed by size.
    pub fn antichain_sizes(&self) -> Result<Vec<u64>> {
        self.guard(FilterLimits::default())?;
        let mut counts = vec![0u64; self.n + 1];
        self.walk_antichains(0, 0, 0, 0, &mut |_, len| {
            counts[len] += 1;
            true
        });
        while counts.len() > 1 && counts.last() == Some(&0) {
            counts.pop();
        }
        Ok(counts)
    }

    fn guard(&self, limits: FilterLimits) -> Result<()> {
        if self.n > limits.max_elements {
            return Err(Error::SizeLimit {
                what: "poset",
                actual: self.n,
                limit: limits.max_elements,
            });
        }
        Ok(())
    }

    /// Depth-first walk over antichains, each visited once: elements are
    /// added in increasing id order and must avoid everything comparable
    /// to an earlier choice. The callback may stop the walk by returning
    /// `false`.
    fn walk_antichains(
        &self,
        start: usize,
        chosen: u64,
        blocked: u64,
        len: usize,
        visit: &mut dyn FnMut(u64, usize) -> bool,
    ) -> bool {
        if !visit(chosen, len) {
            return false;
        }
        for x in start..self.n {
            if blocked >> x & 1 == 1 {
                continue;
            }
            let next_blocked = blocked | self.up[x] | self.down[x];
            if !self.walk_antichains(x + 1, chosen | 1u64 << x, next_blocked, len + 1, visit) {
                return false;
            }
        }
        true
    }

    pub fn to_json(&self) -> String {
        let doc = PosetJson {
            n: self.n,
            covers: self.covers.iter().map(|&(a, b)| [a, b]).collect(),
            labels: self.labels.clone(),
        };
        serde_json::to_string_pretty(&doc).expect("poset serializes")
    }

    pub fn from_json(text: &str) -> Result<Poset> {
        let doc: PosetJson =
            serde_json::from_str(text).map_err(|e| Error::InvalidArgument(e.to_string()))?;
        for &[a, b] in &doc.covers {
            for id in [a, b] {
                if id >= doc.n {
                    return Err(Error::InvalidElement { id, n: doc.n });
                }
            }
        }
        let p = Poset::new(doc.n, doc.covers.iter().map(|&[a, b]| (a, b)).collect())?;
        match doc.labels {
            Some(l) => p.with_labels(l),
            None => Ok(p),
        }
    }

    /// Hasse diagram in DOT, drawn bottom-up.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph poset {\n  rankdir=BT;\n");
        for x in 0..self.n {
            let _ = writeln!(s, "  {x} [label=\"{}\"];", self.label(x));
        }
        for &(a, b) in &self.covers {
            let _ = writeln!(s, "  {a} -> {b};");
        }
        s.push_str("}\n");
        s
    }
}

/// Reflexive up/down closures of a relation; errors on cycles.
fn closure(n: usize, pairs: &[(usize, usize)]) -> Result<(Vec<u64>, Vec<u64>)> {
    if n > MAX_POSET_ELEMENTS {
        return Err(Error::SizeLimit {
            what: "poset",
            actual: n,
            limit: MAX_POSET_ELEMENTS,
        });
    }
    let mut succ = vec![Vec::new(); n];
    let mut indeg = vec![0usize; n];
    for &(a, b) in pairs {
        for id in [a, b] {
            if id >= n {
                return Err(Error::InvalidElement { id, n });
            }
        }
        if a == b {
            return Err(Error::Cyclic);
        }
        succ[a].push(b);
        indeg[b] += 1;
    }
    let mut order = Vec::with_capacity(n);
    let mut queue: VecDeque<usize> = (0..n).filter(|&x| indeg[x] == 0).collect();
    while let Some(x) = queue.pop_front() {
        order.push(x);
        for &y in &succ[x] {
            indeg[y] -= 1;
            if indeg[y] == 0 {
                queue.push_back(y);
            }
        }
    }
    if order.len() != n {
        return Err(Error::Cyclic);
    }
    let mut up = vec![0u64; n];
    for &x in order.iter().rev() {
        let mut m = 1u64 << x;
        for &y in &succ[x] {
            m |= up[y];
        }
        up[x] = m;
    }
    let mut down = vec![0u64; n];
    for (x, &m) in up.iter().enumerate() {
        for y in bits(m) {
            down[y] |= 1u64 << x;
        }
    }
    Ok((up, down))
}

fn reduce(n: usize, up: &[u64], down: &[u64]) -> Vec<(usize, usize)> {
    let mut covers = Vec::new();
    for a in 0..n {
        for b in bits(up[a] & !(1u64 << a)) {
            let between = up[a] & down[b] & !(1u64 << a) & !(1u64 << b);
            if between == 0 {
                covers.push((a, b));
            }
        }
    }
    covers
}

/// An `n`-element chain `0 < 1 < ... < n-1`.
pub fn chain(n: usize) -> Result<Poset> {
    Poset::new(n, (1..n).map(|i| (i - 1, i)).collect())
}

/// The zigzag fence `Z_n`: `z1 > z2 < z3 > z4 ...`, first element maximal.
pub fn make_fence(n: usize) -> Result<Poset> {
    let covers = (0..n.saturating_sub(1))
        .map(|i| {
            // pair (z_{i+1}, z_{i+2}) in 1-based terms
            if i % 2 == 0 {
                (i + 1, i)
            } else {
                (i, i + 1)
            }
        })
        .collect();
    Ok(Poset::new(n, covers)?.with_prefix_labels("z"))
}

/// The L-fence `Ξ_n`: a 3-chain `x1 > x2 > x3` continued by the zigzag
/// `x3 < x4 > x5 < x6 ...`. For `n <= 3` this is an `n`-chain.
pub fn make_lfence(n: usize) -> Result<Poset> {
    if n == 0 {
        return Err(Error::InvalidArgument("L-fence needs n >= 1".into()));
    }
    let covers = (1..n)
        .map(|i| {
            // relation between x_i and x_{i+1}, 1-based
            let (a, b) = (i - 1, i);
            if i <= 2 || i % 2 == 0 {
                (b, a)
            } else {
                (a, b)
            }
        })
        .collect();
    Ok(Poset::new(n, covers)?.with_prefix_labels("x"))
}

/// The L-fence read from its zigzag end: element `a_j` plays the role of
/// `x_{n+1-j}`, so the 3-chain sits at the top of the id range.
pub fn make_lfence_alt(n: usize) -> Result<Poset> {
    if n == 0 {
        return Err(Error::InvalidArgument("L-fence needs n >= 1".into()));
    }
    let covers = (1..n)
        .map(|j| {
            // relation between a_j and a_{j+1}; the matching x-pair index
            let i = n - j;
            let (a, b) = (j - 1, j);
            // x_i > x_{i+1}  <=>  a_{j+1} > a_j
            if i <= 2 || i.is_multiple_of(2) {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect();
    Ok(Poset::new(n, covers)?.with_prefix_labels("a"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_filters(p: &Poset) -> usize {
        (0..1u64 << p.len()).filter(|&s| p.is_filter(s)).count()
    }

    #[test]
    fn fence_small_cases() {
        assert_eq!(make_fence(0).unwrap().filters().unwrap(), vec![Filter(0)]);
        let z2 = make_fence(2).unwrap();
        assert_eq!(z2.covers(), &[(1, 0)]);
        assert_eq!(z2.filters().unwrap().len(), 3);
        assert_eq!(brute_filters(&make_fence(5).unwrap()), 13);
        assert_eq!(make_fence(5).unwrap().filters().unwrap().len(), 13);
        assert_eq!(make_fence(4).unwrap().filters().unwrap().len(), 8);
    }

    #[test]
    fn lfence_cover_shape() {
        let x4 = make_lfence(4).unwrap();
        // x1 > x2 > x3 < x4
        assert_eq!(x4.covers(), &[(1, 0), (2, 1), (2, 3)]);
        assert!(make_lfence(0).is_err());
        let x3 = make_lfence(3).unwrap();
        assert_eq!(x3.covers(), &[(1, 0), (2, 1)]);
    }

    #[test]
    fn lfence_four_filter_list() {
        let p = make_lfence(4).unwrap();
        let got: Vec<u64> = p.filters().unwrap().iter().map(|f| f.0).collect();
        // bit i = x_{i+1}
        let mut want = vec![0, 0b0001, 0b1000, 0b1001, 0b0011, 0b1011, 0b1111];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn lfence_counts() {
        assert_eq!(make_lfence(2).unwrap().filters().unwrap().len(), 3);
        assert_eq!(make_lfence(5).unwrap().filters().unwrap().len(), 11);
        assert_eq!(brute_filters(&make_lfence(7).unwrap()), 29);
        assert_eq!(make_lfence(7).unwrap().filters().unwrap().len(), 29);
    }

    #[test]
    fn dual_is_involutive() {
        let c = chain(2).unwrap();
        assert_eq!(c.dual().covers(), &[(1, 0)]);
        let x5 = make_lfence(5).unwrap();
        assert_eq!(x5.dual().dual(), x5);
        let z3 = make_fence(3).unwrap();
        let d = z3.dual();
        assert_eq!(d.filters().unwrap().len(), 5);
        // z2 is minimal in Z_3 and maximal in the dual
        assert_eq!(z3.minimal_in(z3.ground()), 0b010);
        assert_eq!(d.maximal_in(d.ground()), 0b010);
    }

    #[test]
    fn delete_and_star_delete() {
        let one = chain(1).unwrap();
        assert!(one.delete(0).unwrap().is_empty());
        let c4 = chain(4).unwrap();
        assert!(c4.star_delete(2).unwrap().is_empty());
        assert!(c4.delete(9).is_err());
        assert!(c4.star_delete(4).is_err());
        // deleting the middle of a 3-chain keeps the order 0 < 2
        let c3 = chain(3).unwrap();
        assert_eq!(c3.delete(1).unwrap().covers(), &[(0, 1)]);
    }

    #[test]
    fn rejects_bad_cover_relations() {
        assert_eq!(Poset::new(2, vec![(0, 1), (1, 0)]), Err(Error::Cyclic));
        assert_eq!(
            Poset::new(3, vec![(0, 1), (1, 2), (0, 2)]),
            Err(Error::NotTransitivelyReduced { lower: 0, upper: 2 })
        );
        assert!(matches!(
            Poset::new(2, vec![(0, 5)]),
            Err(Error::InvalidElement { id: 5, n: 2 })
        ));
    }

    #[test]
    fn antichain_counts() {
        let x5 = make_lfence(5).unwrap();
        assert_eq!(x5.antichains(Some(2)).unwrap(), 5);
        assert_eq!(x5.antichains(Some(0)).unwrap(), 1);
        assert_eq!(make_lfence(6).unwrap().antichains(None).unwrap(), 18);
        assert_eq!(x5.antichain_sizes().unwrap(), vec![1, 5, 5]);
    }

    #[test]
    fn size_guard() {
        let big = chain(41).unwrap();
        assert!(matches!(big.filters(), Err(Error::SizeLimit { .. })));
        let limits = FilterLimits {
            max_elements: 40,
            max_filters: 3,
        };
        assert!(make_lfence(5).unwrap().filters_with(limits).is_err());
    }

    #[test]
    fn json_round_trip_and_dot() {
        let p = make_lfence(4).unwrap();
        let back = Poset::from_json(&p.to_json()).unwrap();
        assert_eq!(back, p);
        assert!(p.to_dot().contains("2 -> 3;"));
        assert!(Poset::from_json(r#"{"n":2,"covers":[[0,3]]}"#).is_err());
    }
}
