use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde_json::json;

use crate::graph::Graph;
use crate::lattice::HasseGraph;

/// Counts indexed by `k`, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SpectrumVector {
    counts: Vec<BigUint>,
}

impl SpectrumVector {
    pub fn new(mut counts: Vec<BigUint>) -> Self {
        while counts.last().is_some_and(Zero::is_zero) {
            counts.pop();
        }
        SpectrumVector { counts }
    }

    pub fn from_u64(counts: &[u64]) -> Self {
        Self::new(counts.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    /// Entry `k`, zero past the end.
    pub fn get(&self, k: usize) -> BigUint {
        self.counts.get(k).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    /// Panics if an entry does not fit in `u64`; meant for tests and small
    /// graphs.
    pub fn to_u64(&self) -> Vec<u64> {
        self.counts.iter().map(|c| c.to_u64().expect("count fits in u64")).collect()
    }

    /// Counts as decimal strings separated by single spaces (`"0"` when
    /// empty), the format of `IntPolynomial::to_plain`.
    pub fn to_plain(&self) -> String {
        if self.counts.is_empty() {
            return "0".into();
        }
        self.counts.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
    }

    pub fn to_json(&self, family: &str, n: usize, kind: &str) -> String {
        let counts: Vec<String> = self.counts.iter().map(|c| c.to_string()).collect();
        json!({ "family": family, "n": n, "kind": kind, "counts": counts }).to_string()
    }
}

fn histogram(values: impl Iterator<Item = usize>) -> SpectrumVector {
    let mut counts: Vec<u64> = Vec::new();
    for v in values {
        if counts.len() <= v {
            counts.resize(v + 1, 0);
        }
        counts[v] += 1;
    }
    SpectrumVector::from_u64(&counts)
}

/// `d_k`: vertices of degree `k`.
pub fn degree_spectrum(g: &Graph) -> SpectrumVector {
    histogram((0..g.vertex_count()).map(|v| g.degree(v)))
}

/// `d⁻_k`: vertices with `k` lower covers.
pub fn indegree_spectrum(h: &HasseGraph) -> SpectrumVector {
    histogram((0..h.vertex_count()).map(|v| h.down(v).len()))
}

/// `r_k`: vertices of rank `k`.
pub fn rank_counts(h: &HasseGraph) -> SpectrumVector {
    histogram(h.ranks().iter().copied())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::omega;

    #[test]
    fn omega_five_spectra() {
        let o5 = omega(5).unwrap();
        assert_eq!(degree_spectrum(&o5.undirected()).to_u64(), vec![0, 0, 5, 4, 2]);
        assert_eq!(indegree_spectrum(&o5).to_u64(), vec![1, 5, 5]);
        assert_eq!(rank_counts(&o5).to_u64(), vec![1, 2, 2, 3, 2, 1]);
    }

    #[test]
    fn trimming_and_json() {
        let s = SpectrumVector::from_u64(&[1, 2, 0, 0]);
        assert_eq!(s.len(), 2);
        assert_eq!(s.get(7), BigUint::zero());
        assert_eq!(
            s.to_json("omega", 3, "cube"),
            r#"{"counts":["1","2"],"family":"omega","kind":"cube","n":3}"#
        );
        assert_eq!(degree_spectrum(&Graph::new(1, []).unwrap()).to_u64(), vec![1]);
    }
}
