//! Finite bounded lattices given by order and operation tables, and maps between them.

use std::sync::Arc;

use crate::bits::{ElemSet, MAX_ELEMS};
use crate::error::{Error, Result};
use crate::semiring::{validate_semiring, FiniteSemiring, RawTables};
use crate::space::FiniteSpace;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    pub labels: Vec<String>,
    /// When the elements are subsets (ideals, opens), the subsets themselves.
    pub sets: Option<Vec<ElemSet>>,
    n: usize,
    leq: Vec<bool>,
    join: Vec<usize>,
    meet: Vec<usize>,
    bottom: usize,
    top: usize,
    /// Tagged generating elements, such as the principal radicals.
    pub generators: Option<ElemSet>,
}

impl FiniteLattice {
    /// A family of sets ordered by inclusion, with intersection as meet and
    /// the given join. Fails when the family is not closed under either.
    pub fn from_family(
        labels: Vec<String>,
        sets: Vec<ElemSet>,
        join: impl Fn(ElemSet, ElemSet) -> ElemSet,
    ) -> Result<FiniteLattice> {
        let n = sets.len();
        if n == 0 || n > MAX_ELEMS {
            return Err(Error::NotALattice(format!("family of {n} sets")));
        }
        let find = |x: ElemSet| sets.iter().position(|&s| s == x);
        let mut jt = vec![0; n * n];
        let mut mt = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let m = sets[i].intersection(sets[k]);
                mt[i * n + k] =
                    find(m).ok_or_else(|| Error::NotALattice(format!("meet {} outside family", labels[i])))?;
                let j = join(sets[i], sets[k]);
                jt[i * n + k] =
                    find(j).ok_or_else(|| Error::NotALattice(format!("join {} outside family", labels[i])))?;
            }
        }
        let leq = (0..n * n).map(|x| sets[x / n].is_subset(sets[x % n])).collect::<Vec<_>>();
        let bottom =
            (0..n).find(|&b| (0..n).all(|x| leq[b * n + x])).ok_or_else(|| Error::NotALattice("no bottom".into()))?;
        let top =
            (0..n).find(|&t| (0..n).all(|x| leq[x * n + t])).ok_or_else(|| Error::NotALattice("no top".into()))?;
        Ok(FiniteLattice { labels, sets: Some(sets), n, leq, join: jt, meet: mt, bottom, top, generators: None })
    }

    /// A lattice from an order relation; joins and meets are computed as
    /// least upper and greatest lower bounds.
    pub fn from_order(labels: Vec<String>, leq: &[Vec<bool>]) -> Result<FiniteLattice> {
        let n = labels.len();
        if n == 0 || n > MAX_ELEMS {
            return Err(Error::NotALattice(format!("{n} elements")));
        }
        let mut jt = vec![0; n * n];
        let mut mt = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                let ub: Vec<usize> = (0..n).filter(|&z| leq[a][z] && leq[b][z]).collect();
                let lb: Vec<usize> = (0..n).filter(|&z| leq[z][a] && leq[z][b]).collect();
                jt[a * n + b] = *ub
                    .iter()
                    .find(|&&z| ub.iter().all(|&w| leq[z][w]))
                    .ok_or_else(|| Error::NotALattice(format!("{} and {} have no join", labels[a], labels[b])))?;
                mt[a * n + b] = *lb
                    .iter()
                    .find(|&&z| lb.iter().all(|&w| leq[w][z]))
                    .ok_or_else(|| Error::NotALattice(format!("{} and {} have no meet", labels[a], labels[b])))?;
            }
        }
        let flat: Vec<bool> = leq.iter().flatten().copied().collect();
        let bottom =
            (0..n).find(|&b| (0..n).all(|x| flat[b * n + x])).ok_or_else(|| Error::NotALattice("no bottom".into()))?;
        let top =
            (0..n).find(|&t| (0..n).all(|x| flat[x * n + t])).ok_or_else(|| Error::NotALattice("no top".into()))?;
        Ok(FiniteLattice { labels, sets: None, n, leq: flat, join: jt, meet: mt, bottom, top, generators: None })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.n + b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.n + b]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.n + b]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn join_all(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        xs.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    pub fn meet_all(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        xs.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    pub fn set(&self, i: usize) -> Option<ElemSet> {
        self.sets.as_ref().map(|s| s[i])
    }

    pub fn index_of_set(&self, x: ElemSet) -> Option<usize> {
        self.sets.as_ref()?.iter().position(|&s| s == x)
    }

    /// Pairs `(a, b)` with `b` covering `a`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if self.lt(a, b) && !(0..n).any(|c| self.lt(a, c) && self.lt(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn complement_of(&self, x: usize) -> Option<usize> {
        (0..self.n).find(|&y| self.join(x, y) == self.top && self.meet(x, y) == self.bottom)
    }

    pub fn complemented(&self) -> Vec<usize> {
        (0..self.n).filter(|&x| self.complement_of(x).is_some()).collect()
    }

    pub fn is_boolean(&self) -> bool {
        self.complemented().len() == self.n && lattice_laws(self).distributive
    }

    /// Elements that are joins of complemented elements.
    pub fn is_zero_dimensional(&self) -> bool {
        let comp = self.complemented();
        (0..self.n).all(|x| self.join_all(comp.iter().copied().filter(|&c| self.leq(c, x))) == x)
    }

    /// Bijection `self → other` given by `map` preserving order both ways.
    pub fn is_isomorphism(&self, other: &FiniteLattice, map: &[usize]) -> bool {
        if map.len() != self.n || other.n != self.n {
            return false;
        }
        let image: ElemSet = map.iter().copied().collect();
        image.len() == self.n && (0..self.n).all(|a| (0..self.n).all(|b| self.leq(a, b) == other.leq(map[a], map[b])))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LatticeLaws {
    pub is_lattice: bool,
    pub distributive: bool,
    pub modular: bool,
    /// Finite lattices are complete, so a frame is exactly a distributive lattice.
    pub frame: bool,
    /// `[a∧c, a, b, c, a∨c]` with `a < b`, `a∧c = b∧c`, `a∨c = b∨c`.
    pub n5: Option<[usize; 5]>,
    /// `[bottom, x, y, z, top]` for three pairwise incomparable elements.
    pub m3: Option<[usize; 5]>,
}

pub fn lattice_laws(l: &FiniteLattice) -> LatticeLaws {
    let n = l.len();
    let r = 0..n;
    let partial_order = r.clone().all(|a| l.leq(a, a))
        && r.clone().all(|a| r.clone().all(|b| a == b || !(l.leq(a, b) && l.leq(b, a))))
        && r.clone().all(|a| r.clone().all(|b| r.clone().all(|c| !(l.leq(a, b) && l.leq(b, c)) || l.leq(a, c))));
    let bounds_ok = r.clone().all(|a| {
        r.clone().all(|b| {
            let (j, m) = (l.join(a, b), l.meet(a, b));
            l.leq(a, j)
                && l.leq(b, j)
                && l.leq(m, a)
                && l.leq(m, b)
                && r.clone().all(|z| {
                    (!(l.leq(a, z) && l.leq(b, z)) || l.leq(j, z)) && (!(l.leq(z, a) && l.leq(z, b)) || l.leq(z, m))
                })
        })
    });
    let extrema = r.clone().all(|a| l.leq(l.bottom(), a) && l.leq(a, l.top()));
    let is_lattice = partial_order && bounds_ok && extrema;
    let distributive = r
        .clone()
        .all(|a| r.clone().all(|b| r.clone().all(|c| l.meet(a, l.join(b, c)) == l.join(l.meet(a, b), l.meet(a, c)))));
    let n5 = n5_witnesses(l).into_iter().next();
    let modular = r.clone().all(|a| {
        r.clone().all(|c| !l.leq(a, c) || r.clone().all(|b| l.join(a, l.meet(b, c)) == l.meet(l.join(a, b), c)))
    });
    let mut m3 = None;
    'outer: for x in 0..n {
        for y in x + 1..n {
            for z in y + 1..n {
                let inc = |p: usize, q: usize| !l.leq(p, q) && !l.leq(q, p);
                if inc(x, y) && inc(y, z) && inc(x, z) {
                    let m = l.meet(x, y);
                    let j = l.join(x, y);
                    if l.meet(y, z) == m && l.meet(x, z) == m && l.join(y, z) == j && l.join(x, z) == j {
                        m3 = Some([m, x, y, z, j]);
                        break 'outer;
                    }
                }
            }
        }
    }
    LatticeLaws { is_lattice, distributive, modular, frame: is_lattice && distributive, n5, m3 }
}

/// Every pentagon sublattice `[a∧c, a, b, c, a∨c]`, in index order.
pub fn n5_witnesses(l: &FiniteLattice) -> Vec<[usize; 5]> {
    let n = l.len();
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if !l.lt(a, b) {
                continue;
            }
            for c in 0..n {
                if l.meet(a, c) == l.meet(b, c) && l.join(a, c) == l.join(b, c) && !l.leq(c, b) && !l.leq(a, c) {
                    out.push([l.meet(a, c), a, b, c, l.join(a, c)]);
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Preservation {
    pub monotone: bool,
    pub joins: bool,
    pub meets: bool,
    pub top: bool,
    pub bottom: bool,
    pub generators: bool,
}

/// A map between finite lattices with exhaustively checked preservation flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeMap {
    pub source: Arc<FiniteLattice>,
    pub target: Arc<FiniteLattice>,
    pub map: Vec<usize>,
    pub preserves: Preservation,
}

impl LatticeMap {
    pub fn new(source: &Arc<FiniteLattice>, target: &Arc<FiniteLattice>, map: Vec<usize>) -> LatticeMap {
        let (s, t) = (source.as_ref(), target.as_ref());
        let r = 0..s.len();
        let monotone = r.clone().all(|a| r.clone().all(|b| !s.leq(a, b) || t.leq(map[a], map[b])));
        let joins = r.clone().all(|a| r.clone().all(|b| map[s.join(a, b)] == t.join(map[a], map[b])));
        let meets = r.clone().all(|a| r.clone().all(|b| map[s.meet(a, b)] == t.meet(map[a], map[b])));
        let generators = match (s.generators, t.generators) {
            (Some(g), Some(h)) => g.iter().all(|x| h.contains(map[x])),
            _ => true,
        };
        let preserves = Preservation {
            monotone,
            joins,
            meets,
            top: map[s.top()] == t.top(),
            bottom: map[s.bottom()] == t.bottom(),
            generators,
        };
        LatticeMap { source: source.clone(), target: target.clone(), map, preserves }
    }

    pub fn identity(l: &Arc<FiniteLattice>) -> LatticeMap {
        LatticeMap::new(l, l, (0..l.len()).collect())
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn is_frame_hom(&self) -> bool {
        let p = self.preserves;
        p.joins && p.meets && p.top && p.bottom
    }

    pub fn compose(&self, then: &LatticeMap) -> LatticeMap {
        LatticeMap::new(&self.source, &then.target, self.map.iter().map(|&x| then.map[x]).collect())
    }
}

/// `h_*(y) = ⋁{x : h(x) ≤ y}`, verified as the Galois adjoint of `h`.
///
/// `h` must preserve joins, bottom and top (frame maps preserve the top).
pub fn right_adjoint(h: &LatticeMap) -> Result<LatticeMap> {
    let p = h.preserves;
    if !p.joins {
        return Err(Error::NotJoinPreserving("joins"));
    }
    if !p.bottom {
        return Err(Error::NotJoinPreserving("bottom"));
    }
    if !p.top {
        return Err(Error::NotJoinPreserving("top"));
    }
    let (s, t) = (h.source.as_ref(), h.target.as_ref());
    let map: Vec<usize> = (0..t.len()).map(|y| s.join_all((0..s.len()).filter(|&x| t.leq(h.map[x], y)))).collect();
    let galois = (0..s.len()).all(|x| (0..t.len()).all(|y| t.leq(h.map[x], y) == s.leq(x, map[y])));
    if !galois {
        return Err(Error::NotJoinPreserving("adjunction"));
    }
    Ok(LatticeMap::new(&h.target, &h.source, map))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HomProfile {
    /// `h ∘ h_* = id`
    pub onto: bool,
    /// `h(x) = 0` implies `x = 0`
    pub dense: bool,
    /// `h(x) = 1` implies `x = 1`
    pub codense: bool,
}

pub fn hom_profile(h: &LatticeMap) -> HomProfile {
    let (s, t) = (h.source.as_ref(), h.target.as_ref());
    let onto = match right_adjoint(h) {
        Ok(adj) => (0..t.len()).all(|y| h.map[adj.map[y]] == y),
        Err(_) => false,
    };
    let dense = (0..s.len()).all(|x| h.map[x] != t.bottom() || x == s.bottom());
    let codense = (0..s.len()).all(|x| h.map[x] != t.top() || x == s.top());
    HomProfile { onto, dense, codense }
}

/// For each `a > 0` some `b < 1` has `a ∨ b = 1`.
pub fn is_joinfit(l: &FiniteLattice) -> bool {
    (0..l.len()).filter(|&a| a != l.bottom()).all(|a| (0..l.len()).any(|b| b != l.top() && l.join(a, b) == l.top()))
}

/// Prime elements and the topology generated by `{p : g ≰ p}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FramePoints {
    pub points: Vec<usize>,
    pub space: FiniteSpace,
}

pub fn frame_points(l: &FiniteLattice) -> Result<FramePoints> {
    if !lattice_laws(l).distributive {
        return Err(Error::NotDistributive);
    }
    let n = l.len();
    let points: Vec<usize> = (0..n)
        .filter(|&p| p != l.top())
        .filter(|&p| (0..n).all(|x| (0..n).all(|y| !l.leq(l.meet(x, y), p) || l.leq(x, p) || l.leq(y, p))))
        .collect();
    let labels = points.iter().map(|&p| l.labels[p].clone()).collect();
    let basis = (0..n).map(|g| (0..points.len()).filter(|&k| !l.leq(g, points[k])).collect()).collect();
    Ok(FramePoints { points, space: FiniteSpace::generated(labels, basis) })
}

/// Smallest lattice ideal (nonempty, down-closed, join-closed) containing `set`.
pub fn lattice_ideal_closure(l: &FiniteLattice, set: ElemSet) -> ElemSet {
    let top_of = l.join_all(set.iter());
    (0..l.len()).filter(|&x| l.leq(x, top_of)).collect()
}

/// The lattice of lattice ideals of `l`, ordered by inclusion.
pub fn ideal_lattice(l: &FiniteLattice) -> Result<FiniteLattice> {
    let sets: Vec<ElemSet> = (0..l.len()).map(|x| lattice_ideal_closure(l, ElemSet::singleton(x))).collect();
    let mut sets = sets;
    sets.sort_by_key(|s| s.size_key());
    sets.dedup();
    let labels = sets
        .iter()
        .map(|s| format!("{{{}}}", s.iter().map(|x| l.labels[x].as_str()).collect::<Vec<_>>().join(",")))
        .collect();
    FiniteLattice::from_family(labels, sets, |a, b| lattice_ideal_closure(l, a.union(b)))
}

/// A distributive lattice as the semiring `(L, ∨, ∧, 0, 1)`.
pub fn lattice_as_semiring(l: &FiniteLattice, name: &str) -> Result<FiniteSemiring> {
    let n = l.len();
    let raw = RawTables {
        names: l.labels.clone(),
        add: (0..n).map(|a| (0..n).map(|b| l.join(a, b)).collect()).collect(),
        mul: (0..n).map(|a| (0..n).map(|b| l.meet(a, b)).collect()).collect(),
        zero: l.bottom(),
        unit: Some(l.top()),
    };
    validate_semiring(name, raw)
}
