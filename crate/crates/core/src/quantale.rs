//! Finite quantales, the k-ideal quantale of an additively idempotent
//! semiring, Zariski spaces, and the free/forgetful adjunction.

use std::sync::Arc;

use crate::bits::ElemSet;
use crate::error::{Error, Result};
use crate::frames::{build_radical_lattice, RadicalKind, RadicalLattice};
use crate::hom::{enumerate_homs, for_each_table_map, validate_hom, SemiringHom};
use crate::ideals::{ideal_closure, is_k_ideal_set, k_closure_set, product_set, IdealSet};
use crate::lattice::{lattice_as_semiring, FiniteLattice};
use crate::semiring::{validate_semiring, FiniteSemiring, RawTables};
use crate::space::FiniteSpace;
use crate::spectra::{spectrum, PrimeKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct QuantaleFlags {
    pub associative: bool,
    pub commutative: bool,
    /// `a ∗ (b ∨ c) = a∗b ∨ a∗c` and `a ∗ 0 = 0`, hence distributivity over every finite join
    pub distributive: bool,
    pub unit_identity: bool,
    pub unitally_bounded: bool,
    pub idempotent_mult: bool,
}

impl QuantaleFlags {
    pub fn is_quantale(&self) -> bool {
        self.associative && self.commutative && self.distributive && self.unit_identity
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteQuantale {
    pub lattice: Arc<FiniteLattice>,
    mult: Vec<usize>,
    pub unit: usize,
    pub flags: QuantaleFlags,
}

impl FiniteQuantale {
    pub fn new(lattice: Arc<FiniteLattice>, mult: Vec<Vec<usize>>, unit: usize) -> FiniteQuantale {
        let n = lattice.len();
        let mult: Vec<usize> = mult.into_iter().flatten().collect();
        let m = |a: usize, b: usize| mult[a * n + b];
        let l = lattice.as_ref();
        let r = 0..n;
        let associative = r.clone().all(|a| r.clone().all(|b| r.clone().all(|c| m(m(a, b), c) == m(a, m(b, c)))));
        let commutative = r.clone().all(|a| r.clone().all(|b| m(a, b) == m(b, a)));
        let distributive = r.clone().all(|a| {
            m(a, l.bottom()) == l.bottom()
                && r.clone().all(|b| r.clone().all(|c| m(a, l.join(b, c)) == l.join(m(a, b), m(a, c))))
        });
        let unit_identity = r.clone().all(|a| m(unit, a) == a && m(a, unit) == a);
        let idempotent_mult = r.clone().all(|a| m(a, a) == a);
        let flags = QuantaleFlags {
            associative,
            commutative,
            distributive,
            unit_identity,
            unitally_bounded: unit == l.top(),
            idempotent_mult,
        };
        FiniteQuantale { lattice, mult, unit, flags }
    }

    pub fn len(&self) -> usize {
        self.lattice.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lattice.is_empty()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.len() + b]
    }
}

/// `(Id_k(S), ∨ᵏ, ·)` with the ideal product and unit `S`.
#[derive(Debug, Clone)]
pub struct IdkQuantale {
    pub ideals: RadicalLattice,
    pub quantale: FiniteQuantale,
}

pub fn idk_quantale(s: &Arc<FiniteSemiring>) -> Result<IdkQuantale> {
    if !s.flags().additively_idempotent {
        return Err(Error::NotAdditivelyIdempotent(s.name().to_string()));
    }
    s.one()?;
    let ideals = build_radical_lattice(s, RadicalKind::IdK)?;
    let l = &ideals.lattice;
    let n = l.len();
    let mut mult = vec![vec![0; n]; n];
    for (i, row) in mult.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            let p = product_set(s, ideals.set(i), ideals.set(j));
            if !is_k_ideal_set(s, p) {
                return Err(Error::ProductNotKIdeal(format!("{} * {} = {}", l.labels[i], l.labels[j], s.set_label(p))));
            }
            *cell = ideals.index_of(p).expect("k-ideal is listed");
        }
    }
    let unit = ideals.index_of(s.carrier()).expect("carrier is a k-ideal");
    let quantale = FiniteQuantale::new(l.clone(), mult, unit);
    Ok(IdkQuantale { ideals, quantale })
}

/// `U(Q) = (Q, ∨, ∗, 0, 1)`.
pub fn quantale_as_semiring(q: &FiniteQuantale, name: &str) -> Result<FiniteSemiring> {
    if !q.flags.unitally_bounded {
        return Err(Error::NotUnitallyBounded);
    }
    let l = q.lattice.as_ref();
    let n = l.len();
    let raw = RawTables {
        names: l.labels.clone(),
        add: (0..n).map(|a| (0..n).map(|b| l.join(a, b)).collect()).collect(),
        mul: (0..n).map(|a| (0..n).map(|b| q.mul(a, b)).collect()).collect(),
        zero: l.bottom(),
        unit: Some(q.unit),
    };
    validate_semiring(name, raw)
}

fn require_idealic(s: &FiniteSemiring) -> Result<usize> {
    if !s.flags().additively_idempotent {
        return Err(Error::NotAdditivelyIdempotent(s.name().to_string()));
    }
    s.one()
}

/// `⟨x⟩_k = {y : y ≤ xr for some r}` and whether it equals `C_k(⟨x⟩)`.
#[derive(Debug, Clone)]
pub struct PrincipalKIdeal {
    pub ideal: IdealSet,
    pub agrees_with_closure: bool,
}

pub fn principal_k_set(s: &FiniteSemiring, x: usize) -> ElemSet {
    (0..s.size()).filter(|&y| (0..s.size()).any(|r| s.leq(y, s.mul(x, r)))).collect()
}

pub fn principal_k_ideal(s: &Arc<FiniteSemiring>, x: usize) -> Result<PrincipalKIdeal> {
    require_idealic(s)?;
    let down = principal_k_set(s, x);
    let agrees_with_closure = down == k_closure_set(s, ideal_closure(s, ElemSet::singleton(x)));
    Ok(PrincipalKIdeal { ideal: IdealSet::new(s, down), agrees_with_closure })
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PrincipalKLaws {
    pub formula_agrees: bool,
    /// `⟨x+y⟩_k = ⟨x⟩_k ∨ᵏ ⟨y⟩_k`
    pub sum_law: bool,
    /// `⟨xy⟩_k = ⟨x⟩_k ⟨y⟩_k`
    pub product_law: bool,
    pub witnesses: Vec<String>,
}

pub fn principal_k_laws(s: &Arc<FiniteSemiring>) -> Result<PrincipalKLaws> {
    require_idealic(s)?;
    let n = s.size();
    let pk: Vec<ElemSet> = (0..n).map(|x| principal_k_set(s, x)).collect();
    let mut r = PrincipalKLaws { formula_agrees: true, sum_law: true, product_law: true, witnesses: vec![] };
    for x in 0..n {
        if pk[x] != k_closure_set(s, ideal_closure(s, ElemSet::singleton(x))) {
            r.formula_agrees = false;
            r.witnesses.push(format!("downset formula at {}", s.label(x)));
        }
        for y in 0..n {
            if pk[s.add(x, y)] != k_closure_set(s, pk[x].union(pk[y])) {
                r.sum_law = false;
                r.witnesses.push(format!("sum law at ({}, {})", s.label(x), s.label(y)));
            }
            if pk[s.mul(x, y)] != product_set(s, pk[x], pk[y]) {
                r.product_law = false;
                r.witnesses.push(format!("product law at ({}, {})", s.label(x), s.label(y)));
            }
        }
    }
    Ok(r)
}

/// Prime elements `p ≠ 1` (`xy ≤ p ⇒ x ≤ p or y ≤ p`) with opens generated by `{p : x ≰ p}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZarSpace {
    pub points: Vec<usize>,
    pub space: FiniteSpace,
}

pub fn zar(s: &FiniteSemiring) -> Result<ZarSpace> {
    if !s.is_complete_idealic() {
        return Err(Error::NotCompleteIdealic(s.name().to_string()));
    }
    let one = s.one()?;
    let n = s.size();
    let points: Vec<usize> = (0..n)
        .filter(|&p| p != one)
        .filter(|&p| (0..n).all(|x| (0..n).all(|y| !s.leq(s.mul(x, y), p) || s.leq(x, p) || s.leq(y, p))))
        .collect();
    let labels = points.iter().map(|&p| s.label(p).to_string()).collect();
    let basis = (0..n).map(|x| (0..points.len()).filter(|&k| !s.leq(x, points[k])).collect()).collect();
    Ok(ZarSpace { points, space: FiniteSpace::generated(labels, basis) })
}

/// RId_k(S) viewed as the idealic semiring `(RId_k, ∨ₖ, ∧)`.
pub fn ridk_semiring(s: &Arc<FiniteSemiring>) -> Result<(RadicalLattice, FiniteSemiring)> {
    let l = build_radical_lattice(s, RadicalKind::RidK)?;
    let sr = lattice_as_semiring(&l.lattice, &format!("rid_k({})", s.name()))?;
    Ok((l, sr))
}

/// `Zar(RId_k(S)) ≅ Spec_k(S)` via the identity on k-prime ideals.
pub fn zar_correspondence(s: &Arc<FiniteSemiring>) -> Result<bool> {
    let (l, sr) = ridk_semiring(s)?;
    let z = zar(&sr)?;
    let spec = spectrum(s, PrimeKind::K)?;
    let map: Option<Vec<usize>> = z.points.iter().map(|&p| spec.index_of(l.set(p))).collect();
    Ok(map.is_some_and(|m| z.space.homeomorphic_via(&spec.space, &m)))
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AdjunctionReport {
    /// `φ_f(I) = ⋁_{x∈I} f(x)` for each k-ideal index
    pub phi: Vec<usize>,
    pub phi_is_morphism: bool,
    /// `φ_f(⟨s⟩_k) = f(s)`
    pub phi_extends_f: bool,
    /// every k-ideal is the join of the principal k-ideals of its members,
    /// so a morphism extending `f` is determined
    pub unique: bool,
    /// `f_{φ_f} = f`
    pub round_trip: bool,
    /// `s ↦ ⟨s⟩_k` is a semiring hom into `U(Id_k(S))`
    pub unit_is_hom: bool,
    pub holds: bool,
}

fn is_quantale_morphism(src: &FiniteQuantale, tgt: &FiniteQuantale, map: &[usize]) -> bool {
    let (a, b) = (src.lattice.as_ref(), tgt.lattice.as_ref());
    let r = 0..src.len();
    map[a.bottom()] == b.bottom()
        && map[src.unit] == tgt.unit
        && r.clone().all(|x| {
            r.clone()
                .all(|y| map[a.join(x, y)] == b.join(map[x], map[y]) && map[src.mul(x, y)] == tgt.mul(map[x], map[y]))
        })
}

/// Check the adjunction at one hom `f: S → U(Q)`. The target of `f` must
/// carry `Q`'s elements in `Q`'s index order.
pub fn adjunction_check(s: &Arc<FiniteSemiring>, q: &FiniteQuantale, f: &SemiringHom) -> Result<AdjunctionReport> {
    if !s.is_complete_idealic() {
        return Err(Error::NotCompleteIdealic(s.name().to_string()));
    }
    if !q.flags.unitally_bounded {
        return Err(Error::NotUnitallyBounded);
    }
    let idk = idk_quantale(s)?;
    let (il, iq) = (&idk.ideals, &idk.quantale);
    let ql = q.lattice.as_ref();
    let phi: Vec<usize> = (0..il.lattice.len()).map(|i| ql.join_all(il.set(i).iter().map(|x| f.apply(x)))).collect();
    let phi_is_morphism = is_quantale_morphism(iq, q, &phi);
    let pk: Vec<usize> =
        (0..s.size()).map(|x| il.index_of(principal_k_set(s, x)).expect("principal k-ideal")).collect();
    let phi_extends_f = (0..s.size()).all(|x| phi[pk[x]] == f.apply(x));
    let unique = (0..il.lattice.len()).all(|i| il.lattice.join_all(il.set(i).iter().map(|x| pk[x])) == i);
    if phi_is_morphism && phi_extends_f && !unique {
        return Err(Error::UniquenessFailed(format!("{} is not a join of principal k-ideals", s.name())));
    }
    let round_trip = (0..s.size()).all(|x| phi[pk[x]] == f.apply(x));
    let uq = Arc::new(quantale_as_semiring(iq, &format!("Id_k({})", s.name()))?);
    let unit_is_hom = validate_hom(s, &uq, pk.clone()).is_ok();
    let holds = phi_is_morphism && phi_extends_f && unique && round_trip && unit_is_hom;
    Ok(AdjunctionReport { phi, phi_is_morphism, phi_extends_f, unique, round_trip, unit_is_hom, holds })
}

/// Every quantale morphism `src → tgt` (joins, bottom, products, unit).
pub fn enumerate_quantale_morphisms(src: &FiniteQuantale, tgt: &FiniteQuantale) -> Vec<Vec<usize>> {
    let (a, b) = (src.lattice.as_ref(), tgt.lattice.as_ref());
    let mut out = Vec::new();
    for_each_table_map(
        src.len(),
        tgt.len(),
        &|x, y| a.join(x, y),
        &|x, y| src.mul(x, y),
        &|x, y| b.join(x, y),
        &|x, y| tgt.mul(x, y),
        &[(a.bottom(), b.bottom()), (src.unit, tgt.unit)],
        &mut |m| out.push(m.to_vec()),
    );
    out
}

/// Hom-set sizes on both sides of the adjunction, and whether
/// `ψ ↦ f_ψ` is a bijection onto the semiring homs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomBijection {
    pub quantale_morphisms: usize,
    pub semiring_homs: usize,
    pub bijective: bool,
}

pub fn hom_bijection(s: &Arc<FiniteSemiring>, q: &FiniteQuantale) -> Result<HomBijection> {
    let idk = idk_quantale(s)?;
    let uq = Arc::new(quantale_as_semiring(q, "U(Q)")?);
    let qm = enumerate_quantale_morphisms(&idk.quantale, q);
    let homs = enumerate_homs(s, &uq);
    let pk: Vec<usize> =
        (0..s.size()).map(|x| idk.ideals.index_of(principal_k_set(s, x)).expect("principal k-ideal")).collect();
    let mut images: Vec<Vec<usize>> = Vec::new();
    for psi in &qm {
        let f: Vec<usize> = pk.iter().map(|&i| psi[i]).collect();
        if validate_hom(s, &uq, f.clone()).is_err() {
            return Ok(HomBijection { quantale_morphisms: qm.len(), semiring_homs: homs.len(), bijective: false });
        }
        images.push(f);
    }
    images.sort();
    let distinct = {
        let mut d = images.clone();
        d.dedup();
        d.len() == images.len()
    };
    let mut hom_maps: Vec<Vec<usize>> = homs.iter().map(|h| h.map().to_vec()).collect();
    hom_maps.sort();
    Ok(HomBijection {
        quantale_morphisms: qm.len(),
        semiring_homs: homs.len(),
        bijective: distinct && images == hom_maps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::lattice_laws;
    use crate::semiring::{boolean, chain, saturating_nat};

    #[test]
    fn boolean_quantale() {
        let b = Arc::new(boolean());
        let q = idk_quantale(&b).unwrap();
        assert_eq!(q.quantale.len(), 2);
        assert!(q.quantale.flags.is_quantale() && q.quantale.flags.unitally_bounded);
        let u = quantale_as_semiring(&q.quantale, "u").unwrap();
        assert_eq!(u.add_table(), b.add_table());
        assert_eq!(u.mul_table(), b.mul_table());
    }

    #[test]
    fn chain_quantale_is_meet() {
        let c = Arc::new(chain(3).unwrap());
        let q = idk_quantale(&c).unwrap();
        assert_eq!(q.quantale.len(), 3);
        assert!(q.quantale.flags.idempotent_mult);
        assert_eq!(principal_k_ideal(&c, 1).unwrap().ideal.label(), "{0,m}");
        let z = zar(&c).unwrap();
        assert_eq!(z.points, vec![0, 1]);
        assert!(zar_correspondence(&c).unwrap());
    }

    #[test]
    fn adjunction_on_chain() {
        let c = Arc::new(chain(3).unwrap());
        let q = idk_quantale(&c).unwrap();
        let uq = Arc::new(quantale_as_semiring(&q.quantale, "u").unwrap());
        let pk: Vec<usize> = (0..3).map(|x| q.ideals.index_of(principal_k_set(&c, x)).unwrap()).collect();
        let f = validate_hom(&c, &uq, pk).unwrap();
        let r = adjunction_check(&c, &q.quantale, &f).unwrap();
        assert!(r.holds);
        assert_eq!(r.phi, vec![0, 1, 2]);
        let hb = hom_bijection(&c, &q.quantale).unwrap();
        assert!(hb.bijective && hb.quantale_morphisms == hb.semiring_homs);
    }

    #[test]
    fn rejects_non_idempotent() {
        let sn = Arc::new(saturating_nat(2).unwrap());
        assert!(matches!(idk_quantale(&sn), Err(Error::NotAdditivelyIdempotent(_))));
        let (l, sr) = ridk_semiring(&sn).unwrap();
        assert!(lattice_laws(&l.lattice).frame);
        let top = sr.unit().unwrap();
        assert_eq!(principal_k_set(&sr, top), sr.carrier());
    }
}
