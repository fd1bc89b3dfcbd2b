//! Radicals, prime ideals and hull-kernel spectra.

use std::sync::Arc;

use crate::bits::ElemSet;
use crate::error::{Error, Result};
use crate::hom::SemiringHom;
use crate::ideals::{all_ideals, ideal_closure, is_k_ideal_set, is_strong_set, strong_closure_set, IdealSet};
use crate::semiring::FiniteSemiring;
use crate::space::FiniteSpace;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PrimeKind {
    Prime,
    K,
    Strong,
}

impl PrimeKind {
    pub const ALL: [PrimeKind; 3] = [PrimeKind::Prime, PrimeKind::K, PrimeKind::Strong];

    fn slot(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            PrimeKind::Prime => "prime",
            PrimeKind::K => "k",
            PrimeKind::Strong => "strong",
        }
    }
}

impl std::str::FromStr for PrimeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "prime" => Ok(PrimeKind::Prime),
            "k" => Ok(PrimeKind::K),
            "strong" => Ok(PrimeKind::Strong),
            _ => Err(Error::UnknownConstructor(s.to_string())),
        }
    }
}

/// `√I = {x : xⁿ ∈ I for some n ≥ 1}`.
pub fn radical_set(s: &FiniteSemiring, set: ElemSet) -> ElemSet {
    (0..s.size()).filter(|&x| !s.powers(x).intersection(set).is_empty()).collect()
}

pub fn radical(i: &IdealSet) -> Result<IdealSet> {
    if !i.kind().ideal {
        return Err(Error::NotAnIdeal(i.label()));
    }
    Ok(IdealSet::new(i.parent(), radical_set(i.parent(), i.members())))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeFlags {
    pub prime: bool,
    pub k_prime: bool,
    pub strong_prime: bool,
    pub witness: Option<String>,
}

fn prime_witness(s: &FiniteSemiring, set: ElemSet) -> Option<String> {
    if !crate::ideals::is_ideal(s, set) {
        return Some("not an ideal".into());
    }
    if set == s.carrier() {
        return Some("not proper".into());
    }
    for a in set.complement(s.size()).iter() {
        for b in set.complement(s.size()).iter() {
            if set.contains(s.mul(a, b)) {
                return Some(format!(
                    "{}*{}={} inside, neither factor is",
                    s.label(a),
                    s.label(b),
                    s.label(s.mul(a, b))
                ));
            }
        }
    }
    None
}

pub fn is_prime_set(s: &FiniteSemiring, set: ElemSet) -> bool {
    prime_witness(s, set).is_none()
}

pub fn classify_prime(s: &FiniteSemiring, set: ElemSet) -> PrimeFlags {
    let witness = prime_witness(s, set);
    let prime = witness.is_none();
    let k_prime = prime && is_k_ideal_set(s, set);
    let strong_prime = prime && is_strong_set(s, set);
    let witness = witness.or_else(|| {
        if !k_prime {
            Some("prime but not a k-ideal".into())
        } else if !strong_prime {
            Some("prime but not strong".into())
        } else {
            None
        }
    });
    PrimeFlags { prime, k_prime, strong_prime, witness }
}

fn kind_holds(s: &FiniteSemiring, set: ElemSet, kind: PrimeKind) -> bool {
    match kind {
        PrimeKind::Prime => true,
        PrimeKind::K => is_k_ideal_set(s, set),
        PrimeKind::Strong => is_strong_set(s, set),
    }
}

/// All primes of the given kind, in ideal-enumeration order. Cached.
pub fn primes(s: &FiniteSemiring, kind: PrimeKind) -> Result<&[ElemSet]> {
    let ideals = all_ideals(s)?;
    Ok(s.prime_cache[kind.slot()]
        .get_or_init(|| ideals.iter().copied().filter(|&i| is_prime_set(s, i) && kind_holds(s, i, kind)).collect()))
}

/// Intersection of the `kind`-primes containing `set`; the empty intersection is the carrier.
pub fn located_radical_set(s: &FiniteSemiring, set: ElemSet, kind: PrimeKind) -> Result<ElemSet> {
    Ok(primes(s, kind)?.iter().filter(|p| set.is_subset(**p)).fold(s.carrier(), |acc, p| acc.intersection(*p)))
}

pub fn located_radical(i: &IdealSet, kind: PrimeKind) -> Result<IdealSet> {
    if !i.kind().ideal {
        return Err(Error::NotAnIdeal(i.label()));
    }
    Ok(IdealSet::new(i.parent(), located_radical_set(i.parent(), i.members(), kind)?))
}

/// Shorthand for the k-radical `√ᵏI`.
pub fn k_radical_set(s: &FiniteSemiring, set: ElemSet) -> Result<ElemSet> {
    located_radical_set(s, set, PrimeKind::K)
}

/// Least ideal above `⟨A⟩` that is both strong and radical.
pub fn strong_radical_set(s: &FiniteSemiring, a: ElemSet) -> ElemSet {
    let mut cur = ideal_closure(s, a);
    loop {
        let next = radical_set(s, strong_closure_set(s, cur));
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

pub fn strong_radical_generated(s: &Arc<FiniteSemiring>, a: ElemSet) -> IdealSet {
    IdealSet::new(s, strong_radical_set(s, a))
}

/// A set of primes with the hull-kernel topology.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    pub kind: PrimeKind,
    pub primes: Vec<ElemSet>,
    pub space: FiniteSpace,
}

impl Spectrum {
    pub fn index_of(&self, p: ElemSet) -> Option<usize> {
        self.primes.iter().position(|&q| q == p)
    }

    /// `D(a)` as a set of point indices.
    pub fn basic_open(&self, a: usize) -> ElemSet {
        self.space.basis[a]
    }
}

pub fn spectrum(s: &FiniteSemiring, kind: PrimeKind) -> Result<Spectrum> {
    let ps = primes(s, kind)?.to_vec();
    let labels = ps.iter().map(|&p| s.set_label(p)).collect();
    let basis = (0..s.size()).map(|a| (0..ps.len()).filter(|&k| !ps[k].contains(a)).collect()).collect();
    Ok(Spectrum { kind, primes: ps, space: FiniteSpace::generated(labels, basis) })
}

/// The contravariant point map `Q ↦ f⁻¹(Q)` and its checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecMap {
    pub kind: PrimeKind,
    pub point_map: Vec<usize>,
    pub continuous: bool,
    /// `f*⁻¹(D(a)) = D(f(a))` for every source element `a`.
    pub basic_open_law: bool,
}

pub fn spec_map(f: &SemiringHom, kind: PrimeKind) -> Result<SpecMap> {
    let (s, t) = (f.source(), f.target());
    let spec_s = spectrum(s, kind)?;
    let spec_t = spectrum(t, kind)?;
    let mut point_map = Vec::with_capacity(spec_t.primes.len());
    for &q in &spec_t.primes {
        let p = f.preimage(q);
        match spec_s.index_of(p) {
            Some(k) => point_map.push(k),
            None => return Err(Error::NotPrimePreimage(s.set_label(p))),
        }
    }
    let continuous = spec_t.space.is_continuous(&spec_s.space, &point_map);
    let basic_open_law = (0..s.size()).all(|a| {
        let pre: ElemSet = (0..point_map.len()).filter(|&q| spec_s.basic_open(a).contains(point_map[q])).collect();
        pre == spec_t.basic_open(f.apply(a))
    });
    Ok(SpecMap { kind, point_map, continuous, basic_open_law })
}

/// `(g∘f)* = f*∘g*` pointwise.
pub fn spec_functor_law(f: &SemiringHom, g: &SemiringHom, kind: PrimeKind) -> Result<bool> {
    let gf = f.then(g)?;
    let (mf, mg, mgf) = (spec_map(f, kind)?, spec_map(g, kind)?, spec_map(&gf, kind)?);
    Ok((0..mgf.point_map.len()).all(|r| mgf.point_map[r] == mf.point_map[mg.point_map[r]]))
}

pub fn spec_identity_law(s: &Arc<FiniteSemiring>, kind: PrimeKind) -> Result<bool> {
    let m = spec_map(&SemiringHom::identity(s), kind)?;
    Ok(m.point_map.iter().enumerate().all(|(i, &j)| i == j))
}

/// The four conditions relating `a` to a finite set `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverReport {
    /// `D(a) ⊆ ⋃ D(b)`
    pub opens_cover: bool,
    /// `⋂ V(b) ⊆ V(a)`
    pub hulls: bool,
    /// `a ∈ √⟨A⟩`
    pub in_radical: bool,
    /// `a ∈ √⟨B⟩` for some finite `B ⊆ A`
    pub in_finite_radical: bool,
    pub verdict: bool,
}

pub fn cover_equivalence(s: &FiniteSemiring, a: usize, set: ElemSet) -> Result<CoverReport> {
    let spec = spectrum(s, PrimeKind::Prime)?;
    let n = spec.primes.len();
    let union = set.iter().fold(ElemSet::EMPTY, |acc, b| acc.union(spec.basic_open(b)));
    let opens_cover = spec.basic_open(a).is_subset(union);
    let hull = |x: usize| spec.basic_open(x).complement(n);
    let meet = set.iter().fold(ElemSet::full(n), |acc, b| acc.intersection(hull(b)));
    let hulls = meet.is_subset(hull(a));
    let in_radical = radical_set(s, ideal_closure(s, set)).contains(a);
    let in_finite_radical =
        set.nonempty_subsets_up_to(set.len()).into_iter().any(|b| radical_set(s, ideal_closure(s, b)).contains(a));
    let verdict = opens_cover;
    if [hulls, in_radical, in_finite_radical].iter().any(|&x| x != verdict) {
        return Err(Error::EquivalenceBroken(format!("a={} A={}", s.label(a), s.set_label(set))));
    }
    Ok(CoverReport { opens_cover, hulls, in_radical, in_finite_radical, verdict })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemisimplicityReport {
    pub maximal: Vec<ElemSet>,
    /// `⋂ Max(S) = {0}`
    pub semisimple: bool,
    /// every maximal ideal is a k-ideal
    pub r_semiring: bool,
    /// the closure of the k-primes in `Spec` is every prime
    pub k_dense: bool,
}

pub fn maximal_ideals(s: &FiniteSemiring) -> Result<Vec<ElemSet>> {
    let proper: Vec<ElemSet> = all_ideals(s)?.iter().copied().filter(|&i| i != s.carrier()).collect();
    Ok(proper.iter().copied().filter(|&i| !proper.iter().any(|&j| j != i && i.is_subset(j))).collect())
}

pub fn semisimplicity_report(s: &FiniteSemiring) -> Result<SemisimplicityReport> {
    s.one()?;
    let maximal = maximal_ideals(s)?;
    let meet = maximal.iter().fold(s.carrier(), |acc, m| acc.intersection(*m));
    let semisimple = meet == ElemSet::singleton(s.zero());
    let r_semiring = maximal.iter().all(|&m| is_k_ideal_set(s, m));
    let spec = spectrum(s, PrimeKind::Prime)?;
    let k_points: ElemSet = primes(s, PrimeKind::K)?.iter().filter_map(|&p| spec.index_of(p)).collect();
    let k_dense = spec.space.closure(k_points) == spec.space.points();
    Ok(SemisimplicityReport { maximal, semisimple, r_semiring, k_dense })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hom::validate_hom;
    use crate::semiring::{boolean, chain, product, saturating_nat, zmod};

    fn set(s: &FiniteSemiring, labels: &[&str]) -> ElemSet {
        s.set_from_labels(labels).unwrap()
    }

    #[test]
    fn radicals() {
        let z = zmod(4).unwrap();
        assert_eq!(radical_set(&z, set(&z, &["0"])), set(&z, &["0", "2"]));
        let sn = saturating_nat(2).unwrap();
        assert_eq!(radical_set(&sn, set(&sn, &["0"])), set(&sn, &["0"]));
        assert_eq!(located_radical_set(&sn, set(&sn, &["0", "2"]), PrimeKind::K).unwrap(), sn.carrier());
    }

    #[test]
    fn saturating_nat_primes() {
        let sn = saturating_nat(2).unwrap();
        let f = classify_prime(&sn, set(&sn, &["0", "2"]));
        assert!(f.prime && !f.k_prime);
        assert!(classify_prime(&sn, set(&sn, &["0"])).k_prime);
        assert_eq!(spectrum(&sn, PrimeKind::Prime).unwrap().primes.len(), 2);
        assert_eq!(spectrum(&sn, PrimeKind::K).unwrap().primes.len(), 1);
        let r = semisimplicity_report(&sn).unwrap();
        assert_eq!(r.maximal, vec![set(&sn, &["0", "2"])]);
        assert!(!r.semisimple && !r.r_semiring && r.k_dense);
    }

    #[test]
    fn strong_radical() {
        let sn = Arc::new(saturating_nat(2).unwrap());
        assert_eq!(strong_radical_generated(&sn, set(&sn, &["2"])).members(), sn.carrier());
        let c = Arc::new(chain(3).unwrap());
        assert_eq!(strong_radical_generated(&c, set(&c, &["m"])).label(), "{0,m}");
    }

    #[test]
    fn chain_spectrum_is_sierpinski() {
        let c = chain(3).unwrap();
        let sp = spectrum(&c, PrimeKind::Prime).unwrap();
        assert_eq!(sp.primes.len(), 2);
        assert_eq!(sp.space.opens.len(), 3);
        assert!(sp.space.spectral_report().spectral);
    }

    #[test]
    fn quotient_pulls_back() {
        let c = Arc::new(chain(3).unwrap());
        let b = Arc::new(boolean());
        let q = validate_hom(&c, &b, vec![0, 1, 1]).unwrap();
        let m = spec_map(&q, PrimeKind::Prime).unwrap();
        let sc = spectrum(&c, PrimeKind::Prime).unwrap();
        assert_eq!(sc.primes[m.point_map[0]], set(&c, &["0"]));
        assert!(m.continuous && m.basic_open_law);
        let inc = validate_hom(&b, &c, vec![0, 2]).unwrap();
        let mi = spec_map(&inc, PrimeKind::Prime).unwrap();
        assert_eq!(mi.point_map, vec![0, 0]);
    }

    #[test]
    fn covers() {
        let sn = saturating_nat(2).unwrap();
        let r = cover_equivalence(&sn, 1, set(&sn, &["2"])).unwrap();
        assert!(!r.verdict);
        let c = chain(3).unwrap();
        assert!(cover_equivalence(&c, 1, set(&c, &["1"])).unwrap().verdict);
    }

    #[test]
    fn boolean_square_is_semisimple() {
        let bb = product(&boolean(), &boolean()).unwrap();
        let r = semisimplicity_report(&bb).unwrap();
        assert_eq!(r.maximal.len(), 2);
        assert!(r.semisimple && r.r_semiring && r.k_dense);
    }
}
