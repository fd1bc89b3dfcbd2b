//! Finite topological spaces stored by their full open-set family.

use std::collections::BTreeSet;

use crate::bits::ElemSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSpace {
    pub labels: Vec<String>,
    /// The generating family; for a spectrum, `basis[a] = D(a)`.
    pub basis: Vec<ElemSet>,
    /// Every open set, sorted by (cardinality, bits).
    pub opens: Vec<ElemSet>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralReport {
    pub t0: bool,
    pub sober: bool,
    pub spectral: bool,
    pub t0_witness: Option<(usize, usize)>,
    pub sober_witness: Option<ElemSet>,
}

impl FiniteSpace {
    /// The topology generated by `basis` (plus `∅` and the whole space)
    /// under finite unions and intersections.
    pub fn generated(labels: Vec<String>, basis: Vec<ElemSet>) -> FiniteSpace {
        let full = ElemSet::full(labels.len());
        let mut opens: BTreeSet<ElemSet> = basis.iter().copied().collect();
        opens.insert(ElemSet::EMPTY);
        opens.insert(full);
        loop {
            let cur: Vec<ElemSet> = opens.iter().copied().collect();
            let before = opens.len();
            for (i, &u) in cur.iter().enumerate() {
                for &v in &cur[i + 1..] {
                    opens.insert(u.union(v));
                    opens.insert(u.intersection(v));
                }
            }
            if opens.len() == before {
                break;
            }
        }
        let mut opens: Vec<ElemSet> = opens.into_iter().collect();
        opens.sort_by_key(|x| x.size_key());
        FiniteSpace { labels, basis, opens }
    }

    /// A space from an explicit open family (closed up under ∪, ∩ if needed).
    pub fn from_opens(labels: Vec<String>, opens: Vec<ElemSet>) -> FiniteSpace {
        let mut sp = FiniteSpace::generated(labels, opens);
        sp.basis = sp.opens.clone();
        sp
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn points(&self) -> ElemSet {
        ElemSet::full(self.len())
    }

    pub fn is_open(&self, u: ElemSet) -> bool {
        self.opens.binary_search_by_key(&u.size_key(), |x| x.size_key()).is_ok()
    }

    pub fn closed_sets(&self) -> Vec<ElemSet> {
        let mut c: Vec<ElemSet> = self.opens.iter().map(|u| u.complement(self.len())).collect();
        c.sort_by_key(|x| x.size_key());
        c
    }

    /// Smallest closed set containing `set`.
    pub fn closure(&self, set: ElemSet) -> ElemSet {
        let outside =
            self.opens.iter().filter(|u| u.intersection(set).is_empty()).fold(ElemSet::EMPTY, |acc, u| acc.union(*u));
        outside.complement(self.len())
    }

    /// `p ⊑ q` iff `p` lies in the closure of `q`.
    pub fn specializes(&self, p: usize, q: usize) -> bool {
        self.closure(ElemSet::singleton(q)).contains(p)
    }

    pub fn is_discrete(&self) -> bool {
        (0..self.len()).all(|p| self.is_open(ElemSet::singleton(p)))
    }

    /// Finite spaces are quasi-compact with every open compact, so spectrality
    /// comes down to T₀ and sobriety.
    pub fn spectral_report(&self) -> SpectralReport {
        let n = self.len();
        let mut t0_witness = None;
        'outer: for p in 0..n {
            for q in p + 1..n {
                let separated = self.opens.iter().any(|u| u.contains(p) != u.contains(q));
                if !separated {
                    t0_witness = Some((p, q));
                    break 'outer;
                }
            }
        }
        let point_closures: Vec<ElemSet> = (0..n).map(|p| self.closure(ElemSet::singleton(p))).collect();
        let closed = self.closed_sets();
        let mut sober_witness = None;
        for &c in closed.iter().filter(|c| !c.is_empty()) {
            let irreducible = !closed.iter().any(|&a| {
                a.is_subset(c) && a != c && closed.iter().any(|&b| b.is_subset(c) && b != c && a.union(b) == c)
            });
            if irreducible {
                let generic = point_closures.iter().filter(|&&pc| pc == c).count();
                if generic != 1 {
                    sober_witness = Some(c);
                    break;
                }
            }
        }
        let t0 = t0_witness.is_none();
        let sober = sober_witness.is_none();
        SpectralReport { t0, sober, spectral: t0 && sober, t0_witness, sober_witness }
    }

    /// Whether `map` (a point bijection `self → other`) carries opens exactly onto opens.
    pub fn homeomorphic_via(&self, other: &FiniteSpace, map: &[usize]) -> bool {
        if map.len() != self.len() || self.len() != other.len() {
            return false;
        }
        let image: ElemSet = map.iter().copied().collect();
        if image != other.points() {
            return false;
        }
        let push = |u: ElemSet| -> ElemSet { u.iter().map(|p| map[p]).collect() };
        let mut a: Vec<ElemSet> = self.opens.iter().map(|&u| push(u)).collect();
        a.sort_by_key(|x| x.size_key());
        a == other.opens
    }

    /// Preimage of every open of `target` under `map: self → target` is open.
    pub fn is_continuous(&self, target: &FiniteSpace, map: &[usize]) -> bool {
        target.opens.iter().all(|&v| self.is_open((0..self.len()).filter(|&p| v.contains(map[p])).collect()))
    }
}
