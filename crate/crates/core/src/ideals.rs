//! Ideals, k-ideals and strong ideals, with their closure operators.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use crate::bits::ElemSet;
use crate::config::Bounds;
use crate::error::{Error, Result};
use crate::hom::SemiringHom;
use crate::semiring::FiniteSemiring;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct KindFlags {
    pub ideal: bool,
    pub k_ideal: bool,
    pub strong: bool,
    pub proper: bool,
}

/// Result of [`classify_subset`]: the flags plus a witness for each failed property.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub flags: KindFlags,
    pub witnesses: Vec<String>,
}

/// A subset of a semiring's carrier together with its ideal-kind flags.
#[derive(Clone)]
pub struct IdealSet {
    parent: Arc<FiniteSemiring>,
    members: ElemSet,
    kind: KindFlags,
}

impl IdealSet {
    pub fn new(parent: &Arc<FiniteSemiring>, members: ElemSet) -> IdealSet {
        let kind = flags_of(parent, members);
        IdealSet { parent: parent.clone(), members, kind }
    }

    pub fn parent(&self) -> &Arc<FiniteSemiring> {
        &self.parent
    }

    pub fn members(&self) -> ElemSet {
        self.members
    }

    pub fn kind(&self) -> KindFlags {
        self.kind
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn label(&self) -> String {
        self.parent.set_label(self.members)
    }

    fn require_ideal(&self) -> Result<()> {
        if self.kind.ideal {
            Ok(())
        } else {
            Err(Error::NotAnIdeal(self.label()))
        }
    }
}

impl PartialEq for IdealSet {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members && same_parent(&self.parent, &other.parent)
    }
}

impl Eq for IdealSet {}

impl fmt::Debug for IdealSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

pub(crate) fn same_parent(a: &Arc<FiniteSemiring>, b: &Arc<FiniteSemiring>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Smallest ideal containing `a`: close `{0} ∪ A ∪ SA` under addition.
pub fn ideal_closure(s: &FiniteSemiring, a: ElemSet) -> ElemSet {
    let mut set = ElemSet::singleton(s.zero());
    for x in a.iter() {
        set.insert(x);
        for r in 0..s.size() {
            set.insert(s.mul(r, x));
        }
    }
    close_under_add(s, set)
}

fn close_under_add(s: &FiniteSemiring, mut set: ElemSet) -> ElemSet {
    let mut queue: VecDeque<usize> = set.iter().collect();
    while let Some(x) = queue.pop_front() {
        for y in set.iter() {
            let z = s.add(x, y);
            if !set.contains(z) {
                set.insert(z);
                queue.push_back(z);
            }
        }
    }
    set
}

fn ideal_witness(s: &FiniteSemiring, set: ElemSet) -> Option<String> {
    if !set.contains(s.zero()) {
        return Some(format!("{} missing", s.label(s.zero())));
    }
    for a in set.iter() {
        for b in set.iter() {
            if !set.contains(s.add(a, b)) {
                return Some(format!("{}+{}={} outside", s.label(a), s.label(b), s.label(s.add(a, b))));
            }
        }
        for r in 0..s.size() {
            if !set.contains(s.mul(r, a)) {
                return Some(format!("{}*{}={} outside", s.label(r), s.label(a), s.label(s.mul(r, a))));
            }
        }
    }
    None
}

fn k_witness(s: &FiniteSemiring, set: ElemSet) -> Option<String> {
    for a in set.iter() {
        for b in 0..s.size() {
            if !set.contains(b) && set.contains(s.add(a, b)) {
                return Some(format!(
                    "{}+{}={} inside but {} outside",
                    s.label(a),
                    s.label(b),
                    s.label(s.add(a, b)),
                    s.label(b)
                ));
            }
        }
    }
    None
}

fn strong_witness(s: &FiniteSemiring, set: ElemSet) -> Option<String> {
    for a in 0..s.size() {
        for b in a..s.size() {
            if set.contains(s.add(a, b)) && !(set.contains(a) && set.contains(b)) {
                return Some(format!("{}+{}={} inside", s.label(a), s.label(b), s.label(s.add(a, b))));
            }
        }
    }
    None
}

pub fn is_ideal(s: &FiniteSemiring, set: ElemSet) -> bool {
    ideal_witness(s, set).is_none()
}

pub fn is_k_ideal_set(s: &FiniteSemiring, set: ElemSet) -> bool {
    is_ideal(s, set) && k_witness(s, set).is_none()
}

pub fn is_strong_set(s: &FiniteSemiring, set: ElemSet) -> bool {
    is_ideal(s, set) && strong_witness(s, set).is_none()
}

fn flags_of(s: &FiniteSemiring, set: ElemSet) -> KindFlags {
    classify_subset(s, set).flags
}

/// Report which ideal notions `set` satisfies. The k-ideal and strong flags
/// require the ideal flag; proper means different from the whole carrier.
pub fn classify_subset(s: &FiniteSemiring, set: ElemSet) -> Classification {
    let mut witnesses = Vec::new();
    let iw = ideal_witness(s, set);
    let kw = k_witness(s, set);
    let sw = strong_witness(s, set);
    let ideal = iw.is_none();
    let flags =
        KindFlags { ideal, k_ideal: ideal && kw.is_none(), strong: ideal && sw.is_none(), proper: set != s.carrier() };
    for (tag, w) in [("ideal", iw), ("k-ideal", kw), ("strong", sw)] {
        if let Some(w) = w {
            witnesses.push(format!("{tag}: {w}"));
        }
    }
    if !flags.proper {
        witnesses.push("proper: equals the carrier".into());
    }
    Classification { flags, witnesses }
}

/// One pass of `{a : a + b ∈ I for some b ∈ I}`, iterated with ideal
/// regeneration until stable.
pub fn k_closure_set(s: &FiniteSemiring, set: ElemSet) -> ElemSet {
    let mut cur = ideal_closure(s, set);
    loop {
        let mut next = cur;
        for a in 0..s.size() {
            if cur.iter().any(|b| cur.contains(s.add(a, b))) {
                next.insert(a);
            }
        }
        let next = ideal_closure(s, next);
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// Add both summands of every sum landing in the set, regenerate, repeat.
pub fn strong_closure_set(s: &FiniteSemiring, set: ElemSet) -> ElemSet {
    let mut cur = ideal_closure(s, set);
    loop {
        let mut next = cur;
        for a in 0..s.size() {
            for b in 0..s.size() {
                if cur.contains(s.add(a, b)) {
                    next.insert(a);
                    next.insert(b);
                }
            }
        }
        let next = ideal_closure(s, next);
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

pub fn generate_ideal(s: &Arc<FiniteSemiring>, a: ElemSet) -> IdealSet {
    IdealSet::new(s, ideal_closure(s, a))
}

pub fn k_closure(i: &IdealSet) -> Result<IdealSet> {
    i.require_ideal()?;
    Ok(IdealSet::new(&i.parent, k_closure_set(&i.parent, i.members)))
}

pub fn strong_closure(i: &IdealSet) -> Result<IdealSet> {
    i.require_ideal()?;
    Ok(IdealSet::new(&i.parent, strong_closure_set(&i.parent, i.members)))
}

fn check_enum_bound(s: &FiniteSemiring) -> Result<()> {
    let bound = Bounds::current().enumeration;
    if s.size() > bound {
        return Err(Error::SizeBoundExceeded { what: "enumeration", size: s.size(), bound });
    }
    Ok(())
}

/// Every ideal of `s`, sorted by (cardinality, bits). Cached per semiring.
///
/// Breadth-first from `{0}`: each ideal is extended by one outside element and
/// regenerated. Every ideal is reached, since it is generated by adding its
/// members one at a time.
pub fn all_ideals(s: &FiniteSemiring) -> Result<&[ElemSet]> {
    check_enum_bound(s)?;
    Ok(s.ideal_cache.get_or_init(|| {
        let start = ideal_closure(s, ElemSet::EMPTY);
        let mut seen = BTreeSet::from([start.size_key()]);
        let mut queue = VecDeque::from([start]);
        let mut out = Vec::new();
        while let Some(i) = queue.pop_front() {
            out.push(i);
            for x in i.complement(s.size()).iter() {
                let j = ideal_closure(s, i.with(x));
                if seen.insert(j.size_key()) {
                    queue.push_back(j);
                }
            }
        }
        out.sort_by_key(|x| x.size_key());
        out
    }))
}

/// Exhaustive sweep over all subsets; only below the sweep bound.
pub fn sweep_ideals(s: &FiniteSemiring) -> Result<Vec<ElemSet>> {
    let bound = Bounds::current().sweep;
    if s.size() > bound {
        return Err(Error::SizeBoundExceeded { what: "sweep", size: s.size(), bound });
    }
    let z = ElemSet::singleton(s.zero());
    let mut out: Vec<ElemSet> =
        (0u64..(1u64 << s.size())).map(ElemSet::from_bits).filter(|x| z.is_subset(*x) && is_ideal(s, *x)).collect();
    out.sort_by_key(|x| x.size_key());
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealKind {
    All,
    K,
    Strong,
    Proper,
}

impl std::str::FromStr for IdealKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(IdealKind::All),
            "k" => Ok(IdealKind::K),
            "strong" => Ok(IdealKind::Strong),
            "proper" => Ok(IdealKind::Proper),
            _ => Err(Error::UnknownConstructor(s.to_string())),
        }
    }
}

pub fn enumerate_ideal_sets(s: &FiniteSemiring, kind: IdealKind) -> Result<Vec<ElemSet>> {
    let all = all_ideals(s)?;
    Ok(all
        .iter()
        .copied()
        .filter(|&i| match kind {
            IdealKind::All => true,
            IdealKind::K => k_witness(s, i).is_none(),
            IdealKind::Strong => strong_witness(s, i).is_none(),
            IdealKind::Proper => i != s.carrier(),
        })
        .collect())
}

pub fn enumerate_ideals(s: &Arc<FiniteSemiring>, kind: IdealKind) -> Result<Vec<IdealSet>> {
    Ok(enumerate_ideal_sets(s, kind)?.into_iter().map(|m| IdealSet::new(s, m)).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Sum,
    Product,
    Intersection,
}

pub fn product_set(s: &FiniteSemiring, i: ElemSet, j: ElemSet) -> ElemSet {
    let mut p = ElemSet::EMPTY;
    for a in i.iter() {
        for b in j.iter() {
            p.insert(s.mul(a, b));
        }
    }
    ideal_closure(s, p)
}

pub fn ideal_arith(op: ArithOp, i: &IdealSet, j: &IdealSet) -> Result<IdealSet> {
    if !same_parent(&i.parent, &j.parent) {
        return Err(Error::MismatchedParent);
    }
    i.require_ideal()?;
    j.require_ideal()?;
    let s = &i.parent;
    let m = match op {
        ArithOp::Sum => ideal_closure(s, i.members.union(j.members)),
        ArithOp::Product => product_set(s, i.members, j.members),
        ArithOp::Intersection => i.members.intersection(j.members),
    };
    Ok(IdealSet::new(s, m))
}

pub fn hom_preimage(f: &SemiringHom, j: &IdealSet) -> Result<IdealSet> {
    if !same_parent(f.target(), &j.parent) {
        return Err(Error::MismatchedParent);
    }
    Ok(IdealSet::new(f.source(), f.preimage(j.members)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::{boolean, chain, pentagon, saturating_nat};

    fn arc(s: FiniteSemiring) -> Arc<FiniteSemiring> {
        Arc::new(s)
    }

    fn set(s: &FiniteSemiring, labels: &[&str]) -> ElemSet {
        s.set_from_labels(labels).unwrap()
    }

    #[test]
    fn generated_ideals() {
        let b = arc(boolean());
        assert_eq!(generate_ideal(&b, ElemSet::EMPTY).label(), "{0}");
        let sn = arc(saturating_nat(2).unwrap());
        assert_eq!(generate_ideal(&sn, set(&sn, &["2"])).label(), "{0,2}");
        let c = arc(chain(3).unwrap());
        assert_eq!(generate_ideal(&c, set(&c, &["m"])).label(), "{0,m}");
    }

    #[test]
    fn closures_on_saturating_nat() {
        let sn = arc(saturating_nat(2).unwrap());
        let i = generate_ideal(&sn, set(&sn, &["2"]));
        assert_eq!(k_closure(&i).unwrap().members(), sn.carrier());
        assert_eq!(strong_closure(&i).unwrap().members(), sn.carrier());
        let cls = classify_subset(&sn, i.members());
        assert!(cls.flags.ideal && !cls.flags.k_ideal && !cls.flags.strong);
        assert_eq!(enumerate_ideals(&sn, IdealKind::K).unwrap().len(), 2);
    }

    #[test]
    fn pentagon_sum_and_closure() {
        let p = arc(pentagon());
        let i = IdealSet::new(&p, set(&p, &["0", "a", "a∨b"]));
        let j = IdealSet::new(&p, set(&p, &["0", "c"]));
        assert!(i.kind().ideal && !i.kind().k_ideal);
        let sum = ideal_arith(ArithOp::Sum, &i, &j).unwrap();
        assert_eq!(sum.members(), set(&p, &["0", "a", "a∨b", "c", "d"]));
        assert_eq!(k_closure(&sum).unwrap().members(), p.carrier());
    }

    #[test]
    fn chain_ideals_and_strong_closure() {
        let c = arc(chain(3).unwrap());
        assert_eq!(enumerate_ideals(&c, IdealKind::All).unwrap().len(), 3);
        let i = generate_ideal(&c, set(&c, &["m"]));
        assert_eq!(strong_closure(&i).unwrap(), i);
        assert!(!classify_subset(&c, set(&c, &["m"])).flags.ideal);
    }

    #[test]
    fn not_an_ideal_is_rejected() {
        let c = arc(chain(3).unwrap());
        let bad = IdealSet::new(&c, set(&c, &["m"]));
        assert!(matches!(k_closure(&bad), Err(Error::NotAnIdeal(_))));
    }
}
