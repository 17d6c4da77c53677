//! Day's interval doubling `L[I]`, cuttings, and the filter-lattice
//! decomposition `F(P) = F(P - x) ⊞ F(P * x)`.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::lattice::build::filter_lattice;
use crate::lattice::hasse::{join_irreducible_poset, HasseGraph, Interval, Payload};
use crate::lattice::isomorphism::is_isomorphic_hasse;
use crate::poset::{bits, Poset};

/// `true` iff every vertex lies below `top(K)` or above `bottom(K)`.
pub fn is_cutting(l: &HasseGraph, k: &Interval) -> Result<bool> {
    if !k.is_valid_in(l) {
        return Err(Error::NotAnInterval);
    }
    let ord = l.order();
    Ok((0..l.vertex_count()).all(|v| ord.below[k.top].contains(v) || ord.above[k.bottom].contains(v)))
}

/// Doubles the cutting `k` of `l`: every member `a` is replaced by
/// `(a, 0) < (a, 1)`.
///
/// Vertex ids of the result: the non-members of `k` in increasing order,
/// then `(a, 0), (a, 1)` for each member `a` in increasing order.
pub fn day_double(l: &HasseGraph, k: &Interval) -> Result<HasseGraph> {
    if !is_cutting(l, k)? {
        return Err(Error::NotACutting);
    }
    day_double_interval(l, k)
}

/// Doubling without the cutting check; the result is a lattice for any
/// interval but distributive only for cuttings.
pub fn day_double_interval(l: &HasseGraph, k: &Interval) -> Result<HasseGraph> {
    if !k.is_valid_in(l) {
        return Err(Error::NotAnInterval);
    }
    let n = l.vertex_count();
    // (original vertex, bit) per new vertex
    let mut verts: Vec<(usize, Option<u8>)> = (0..n)
        .filter(|&v| !k.contains(v))
        .map(|v| (v, None))
        .collect();
    for a in k.members.ones() {
        verts.push((a, Some(0)));
        verts.push((a, Some(1)));
    }
    let m = verts.len();
    let ord = l.order();
    let mut above = vec![FixedBitSet::with_capacity(m); m];
    for (i, &(a, bi)) in verts.iter().enumerate() {
        for (j, &(b, bj)) in verts.iter().enumerate() {
            let le = match (bi, bj) {
                (Some(x), Some(y)) => x <= y && ord.above[a].contains(b),
                _ => ord.above[a].contains(b),
            };
            if le {
                above[i].insert(j);
            }
        }
    }
    let payload = verts
        .iter()
        .map(|&(original, bit)| Payload::Doubled { original, bit })
        .collect();
    Ok(HasseGraph::from_order(&above)?.with_payload(payload))
}

/// Vertex ids of the result of [`day_double`] that come from `(a, bit)`.
pub fn doubled_index(l: &HasseGraph, k: &Interval, a: usize, bit: Option<u8>) -> Option<usize> {
    let outside: Vec<usize> = (0..l.vertex_count()).filter(|&v| !k.contains(v)).collect();
    match bit {
        None => outside.iter().position(|&v| v == a),
        Some(b) => {
            let pos = k.members.ones().position(|v| v == a)?;
            Some(outside.len() + 2 * pos + b as usize)
        }
    }
}

/// The pieces of `F(P) = F(P - x) ⊞ F(P * x)`: the lattice `F(P - x)` and
/// the cutting inside it that is isomorphic to `F(P * x)`.
#[derive(Debug, Clone)]
pub struct Decomposition {
    /// Element `x` of the underlying poset.
    pub element: usize,
    pub base: HasseGraph,
    pub cutting: Interval,
}

impl Decomposition {
    /// The cutting as a lattice of its own.
    pub fn cutting_lattice(&self) -> HasseGraph {
        self.base
            .induced(&self.cutting.members)
            .expect("an interval of a graded lattice is graded")
            .0
    }

    pub fn rebuild(&self) -> Result<HasseGraph> {
        day_double(&self.base, &self.cutting)
    }
}

/// Builds `F(P - x)` and locates the cutting `{G : ↑x \ x ⊆ G, G ∩ ↓x = ∅}`,
/// which is isomorphic to `F(P * x)`.
pub fn cutting_for_element(p: &Poset, x: usize) -> Result<Decomposition> {
    let rest = p.delete(x)?;
    let base = filter_lattice(&rest)?;
    // translate masks of P into masks of P - x (ids above x shift down)
    let shrink = |mask: u64| -> u64 {
        bits(mask & !(1u64 << x)).fold(0, |m, i| m | 1u64 << if i > x { i - 1 } else { i })
    };
    let lo_set = shrink(p.ground() & !p.down_set(x));
    let hi_set = shrink(p.up_set(x));
    let find = |mask: u64| -> Result<usize> {
        base.payload()
            .and_then(|pl| pl.iter().position(|q| *q == Payload::Filter(crate::poset::Filter(mask))))
            .ok_or_else(|| Error::InvalidArgument(format!("filter {mask:b} missing")))
    };
    // anti-inclusion: the larger set is the bottom
    let cutting = Interval::new(&base, find(lo_set)?, find(hi_set)?)?;
    Ok(Decomposition {
        element: x,
        base,
        cutting,
    })
}

/// Every decomposition of a distributive lattice `l`, one per element of
/// its poset of join-irreducibles, each checked to rebuild `l`.
pub fn cutting_decompositions(l: &HasseGraph) -> Result<Vec<Decomposition>> {
    if l.vertex_count() < 2 || !l.is_distributive() {
        return Ok(Vec::new());
    }
    let p = join_irreducible_poset(l)?;
    let mut out = Vec::new();
    for x in 0..p.len() {
        let d = cutting_for_element(&p, x)?;
        if is_isomorphic_hasse(&d.rebuild()?, l)? {
            out.push(d);
        }
    }
    Ok(out)
}

/// First decomposition of `l`, if `l` is a distributive lattice with at
/// least two elements.
pub fn find_cutting_decomposition(l: &HasseGraph) -> Result<Option<Decomposition>> {
    Ok(cutting_decompositions(l)?.into_iter().next())
}

/// All cutting intervals of `l` whose induced lattice is isomorphic to
/// `shape` (as directed graphs).
pub fn cuttings_isomorphic_to(l: &HasseGraph, shape: &HasseGraph) -> Result<Vec<Interval>> {
    let n = l.vertex_count();
    let want = shape.vertex_count();
    let ord = l.order();
    let mut out = Vec::new();
    for a in 0..n {
        for b in ord.above[a].ones() {
            let mut members = ord.above[a].clone();
            members.intersect_with(&ord.below[b]);
            if members.count_ones(..) != want {
                continue;
            }
            let iv = Interval {
                bottom: a,
                top: b,
                members,
            };
            if !is_cutting(l, &iv)? {
                continue;
            }
            let (sub, _) = l.induced(&iv.members)?;
            if is_isomorphic_hasse(&sub, shape)? {
                out.push(iv);
            }
        }
    }
    Ok(out)
}

/// Searches `l` for a cutting isomorphic to `shape` whose doubling is
/// isomorphic to `target`; returns the interval and the doubled lattice.
pub fn reconstruct_by_doubling(
    l: &HasseGraph,
    shape: &HasseGraph,
    target: &HasseGraph,
) -> Result<Option<(Interval, HasseGraph)>> {
    if l.vertex_count() + shape.vertex_count() != target.vertex_count() {
        return Ok(None);
    }
    for iv in cuttings_isomorphic_to(l, shape)? {
        let doubled = day_double(l, &iv)?;
        if is_isomorphic_hasse(&doubled, target)? {
            return Ok(Some((iv, doubled)));
        }
    }
    Ok(None)
}

/// Two successive doublings: a cutting of `l` shaped like `first`, then a
/// cutting of the result shaped like `second`, ending isomorphic to `target`.
pub fn reconstruct_in_two_steps(
    l: &HasseGraph,
    first: &HasseGraph,
    second: &HasseGraph,
    target: &HasseGraph,
) -> Result<Option<HasseGraph>> {
    if l.vertex_count() + first.vertex_count() + second.vertex_count() != target.vertex_count() {
        return Ok(None);
    }
    for iv in cuttings_isomorphic_to(l, first)? {
        let middle = day_double(l, &iv)?;
        if let Some((_, done)) = reconstruct_by_doubling(&middle, second, target)? {
            return Ok(Some(done));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{gamma, omega};
    use crate::poset::{chain, make_fence, make_lfence};

    #[test]
    fn doubling_a_point_gives_a_chain() {
        let one = HasseGraph::new(1, []).unwrap();
        let k = Interval::whole(&one).unwrap();
        let two = day_double(&one, &k).unwrap();
        assert_eq!((two.vertex_count(), two.arc_count()), (2, 1));
        assert_eq!(
            two.payload().unwrap()[0],
            Payload::Doubled {
                original: 0,
                bit: Some(0)
            }
        );
    }

    #[test]
    fn cutting_checks() {
        let c2 = omega(1).unwrap();
        let whole = Interval::whole(&c2).unwrap();
        assert!(is_cutting(&c2, &whole).unwrap());
        let bottom = Interval::new(&c2, 0, 0).unwrap();
        assert!(is_cutting(&c2, &bottom).unwrap());
        // a middle point of a 3-chain cuts it; a side atom of a square does not
        let sq = HasseGraph::new(4, [(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        let atom = Interval::new(&sq, 1, 1).unwrap();
        assert!(!is_cutting(&sq, &atom).unwrap());
        assert_eq!(day_double(&sq, &atom).unwrap_err(), Error::NotACutting);
        let bogus = Interval {
            bottom: 1,
            top: 2,
            members: FixedBitSet::with_capacity(4),
        };
        assert_eq!(is_cutting(&sq, &bogus).unwrap_err(), Error::NotAnInterval);
    }

    #[test]
    fn omega_four_from_omega_three() {
        let p = make_lfence(4).unwrap();
        let d = cutting_for_element(&p, 3).unwrap();
        assert!(is_isomorphic_hasse(&d.base, &omega(3).unwrap()).unwrap());
        assert!(is_isomorphic_hasse(&d.cutting_lattice(), &omega(2).unwrap()).unwrap());
        assert!(is_cutting(&d.base, &d.cutting).unwrap());
        assert!(is_isomorphic_hasse(&d.rebuild().unwrap(), &omega(4).unwrap()).unwrap());
    }

    #[test]
    fn fibonacci_doubling() {
        // Γ_5 = Γ_4 ⊞ Γ_3 through the last fence element
        let z5 = make_fence(5).unwrap();
        let d = cutting_for_element(&z5, 4).unwrap();
        assert!(is_isomorphic_hasse(&d.base, &gamma(4).unwrap()).unwrap());
        assert!(is_isomorphic_hasse(&d.cutting_lattice(), &gamma(3).unwrap()).unwrap());
        assert!(is_isomorphic_hasse(&d.rebuild().unwrap(), &gamma(5).unwrap()).unwrap());
        let found = reconstruct_by_doubling(&gamma(4).unwrap(), &gamma(3).unwrap(), &gamma(5).unwrap())
            .unwrap();
        assert!(found.is_some());
        // a Γ_2-sized cutting cannot reach 13 vertices
        assert!(reconstruct_by_doubling(&gamma(4).unwrap(), &gamma(2).unwrap(), &gamma(5).unwrap())
            .unwrap()
            .is_none());
    }

    #[test]
    fn decompositions_of_small_lattices() {
        let c2 = filter_lattice(&chain(1).unwrap()).unwrap();
        let d = find_cutting_decomposition(&c2).unwrap().unwrap();
        assert_eq!(d.base.vertex_count(), 1);
        assert_eq!(d.cutting.len(), 1);
        let point = HasseGraph::new(1, []).unwrap();
        assert!(find_cutting_decomposition(&point).unwrap().is_none());
        let m3 = HasseGraph::new(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]).unwrap();
        assert!(find_cutting_decomposition(&m3).unwrap().is_none());
    }

    #[test]
    fn doubled_index_lookup() {
        let c3 = filter_lattice(&chain(2).unwrap()).unwrap();
        let k = Interval::new(&c3, 1, 1).unwrap();
        let d = day_double(&c3, &k).unwrap();
        let i = doubled_index(&c3, &k, 1, Some(1)).unwrap();
        assert_eq!(
            d.payload().unwrap()[i],
            Payload::Doubled {
                original: 1,
                bit: Some(1)
            }
        );
        assert_eq!(doubled_index(&c3, &k, 0, None), Some(0));
    }

    #[test]
    fn omega_from_gamma_pieces() {
        for n in 4..=7 {
            let base = gamma(n - 2).unwrap().dual();
            let piece = gamma(n - 3).unwrap();
            let built = reconstruct_in_two_steps(&base, &piece, &piece, &omega(n).unwrap()).unwrap();
            assert!(built.is_some(), "{n}");
        }
    }
}
