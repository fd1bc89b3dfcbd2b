//! Supports of a semiring on bounded distributive lattices, and the
//! reticulation `a ↦ D(a)` into the open-set lattice of the prime spectrum.

use std::sync::Arc;

use crate::bits::ElemSet;
use crate::config::Bounds;
use crate::error::{Error, Result};
use crate::frames::{build_radical_lattice, RadicalKind, RadicalLattice};
use crate::hom::SemiringHom;
use crate::ideals::{ideal_closure, is_strong_set};
use crate::lattice::{frame_points, ideal_lattice, lattice_ideal_closure, FiniteLattice, LatticeMap};
use crate::semiring::FiniteSemiring;
use crate::spectra::{
    is_prime_set, k_radical_set, radical_set, spec_map, spectrum, strong_radical_set, PrimeKind, Spectrum,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SupportVariant {
    Plain,
    K,
    L,
}

/// A map from a semiring into a bounded distributive lattice.
#[derive(Debug, Clone)]
pub struct SupportMap {
    pub source: Arc<FiniteSemiring>,
    pub target: Arc<FiniteLattice>,
    pub values: Vec<usize>,
}

impl SupportMap {
    pub fn apply(&self, a: usize) -> usize {
        self.values[a]
    }

    /// `D⁻¹(J)` for a set `J` of lattice indices.
    pub fn preimage(&self, j: ElemSet) -> ElemSet {
        (0..self.values.len()).filter(|&a| j.contains(self.values[a])).collect()
    }
}

/// `L_S` as the opens of `Spec(S)` with `D(a) = {P : a ∉ P}`.
#[derive(Debug, Clone)]
pub struct Reticulation {
    pub spectrum: Spectrum,
    pub support: SupportMap,
}

impl Reticulation {
    pub fn lattice(&self) -> &Arc<FiniteLattice> {
        &self.support.target
    }

    pub fn semiring(&self) -> &Arc<FiniteSemiring> {
        &self.support.source
    }
}

pub fn reticulation(s: &Arc<FiniteSemiring>) -> Result<Reticulation> {
    s.one()?;
    let spec = spectrum(s, PrimeKind::Prime)?;
    let opens = spec.space.opens.clone();
    let labels = opens
        .iter()
        .map(|u| format!("{{{}}}", u.iter().map(|p| spec.space.labels[p].as_str()).collect::<Vec<_>>().join(",")))
        .collect();
    let lattice = FiniteLattice::from_family(labels, opens, |a, b| a.union(b))?;
    let values = (0..s.size()).map(|a| lattice.index_of_set(spec.basic_open(a)).expect("basic open")).collect();
    let support = SupportMap { source: s.clone(), target: Arc::new(lattice), values };
    Ok(Reticulation { spectrum: spec, support })
}

/// `a ↦ [a]` into RId(S) (or `a ↦ [a]_k` into RId_k(S)).
pub fn principal_support(l: &RadicalLattice) -> SupportMap {
    SupportMap { source: l.semiring.clone(), target: l.lattice.clone(), values: l.principals.clone() }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SupportReport {
    /// `D(0) = 0`, `D(1) = 1`
    pub bounds: bool,
    /// `D(a+b) ≤ D(a) ∨ D(b)`, or equality for the l variant
    pub sums: bool,
    /// `D(ab) = D(a) ∧ D(b)`
    pub products: bool,
    /// `D(a) ≤ ⋁ D(bᵢ)` implies `a ∈ [b₁..bₙ]` (radical, k-radical or strong radical per variant)
    pub covers: bool,
    /// the image generates the lattice under finite joins and meets
    pub generated: bool,
    pub holds: bool,
    pub witnesses: Vec<String>,
}

/// Check the support axioms. The k and l variants replace the cover axiom by
/// its k-radical or strong-radical form; the l variant also demands
/// `D(a+b) = D(a) ∨ D(b)`.
pub fn check_support(d: &SupportMap, variant: SupportVariant) -> Result<SupportReport> {
    let s = d.source.as_ref();
    let l = d.target.as_ref();
    let one = s.one()?;
    let mut r = SupportReport {
        bounds: true,
        sums: true,
        products: true,
        covers: true,
        generated: true,
        holds: false,
        witnesses: vec![],
    };
    if d.apply(s.zero()) != l.bottom() || d.apply(one) != l.top() {
        r.bounds = false;
        r.witnesses.push("D(0) or D(1) misplaced".into());
    }
    for a in 0..s.size() {
        for b in 0..s.size() {
            let j = l.join(d.apply(a), d.apply(b));
            let sum = d.apply(s.add(a, b));
            let ok = match variant {
                SupportVariant::L => sum == j,
                _ => l.leq(sum, j),
            };
            if !ok && r.sums {
                r.sums = false;
                r.witnesses.push(format!("sum axiom at ({}, {})", s.label(a), s.label(b)));
            }
            if d.apply(s.mul(a, b)) != l.meet(d.apply(a), d.apply(b)) && r.products {
                r.products = false;
                r.witnesses.push(format!("product axiom at ({}, {})", s.label(a), s.label(b)));
            }
        }
    }
    let tuple = Bounds::current().support_tuple;
    for bs in s.carrier().nonempty_subsets_up_to(tuple) {
        let cover = l.join_all(bs.iter().map(|b| d.apply(b)));
        let closed = match variant {
            SupportVariant::Plain => radical_set(s, ideal_closure(s, bs)),
            SupportVariant::K => k_radical_set(s, ideal_closure(s, bs))?,
            SupportVariant::L => strong_radical_set(s, bs),
        };
        if let Some(a) = (0..s.size()).find(|&a| l.leq(d.apply(a), cover) && !closed.contains(a)) {
            r.covers = false;
            r.witnesses.push(format!("cover axiom: a={} B={}", s.label(a), s.set_label(bs)));
            break;
        }
    }
    let mut gen: ElemSet = d.values.iter().copied().collect();
    loop {
        let mut next = gen;
        for x in gen.iter() {
            for y in gen.iter() {
                next.insert(l.join(x, y));
                next.insert(l.meet(x, y));
            }
        }
        if next == gen {
            break;
        }
        gen = next;
    }
    if gen.len() != l.len() {
        r.generated = false;
        r.witnesses.push(format!("image generates {} of {} elements", gen.len(), l.len()));
    }
    r.holds = r.bounds && r.sums && r.products && r.covers && r.generated;
    Ok(r)
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SupportProperties {
    pub units_to_top: bool,
    pub powers: bool,
    pub nilpotents_to_bottom: bool,
    pub orthogonal_sums: bool,
    pub radical_order: bool,
    pub witnesses: Vec<String>,
}

impl SupportProperties {
    pub fn all(&self) -> bool {
        self.units_to_top && self.powers && self.nilpotents_to_bottom && self.orthogonal_sums && self.radical_order
    }
}

pub fn support_properties(d: &SupportMap) -> SupportProperties {
    let s = d.source.as_ref();
    let l = d.target.as_ref();
    let n = s.size();
    let mut w = Vec::new();
    let units_to_top = s.units().iter().all(|&u| d.apply(u) == l.top());
    let powers = (0..n).all(|x| (1..=n + 1).all(|k| d.apply(s.pow(x, k)) == d.apply(x)));
    let nilpotents_to_bottom = (0..n).filter(|&x| s.is_nilpotent(x)).all(|x| d.apply(x) == l.bottom());
    let orthogonal_sums = (0..n)
        .all(|x| (0..n).all(|y| s.mul(x, y) != s.zero() || d.apply(s.add(x, y)) == l.join(d.apply(x), d.apply(y))));
    let radical_order = (0..n).all(|y| {
        let ry = radical_set(s, ideal_closure(s, ElemSet::singleton(y)));
        ry.iter().all(|x| l.leq(d.apply(x), d.apply(y)))
    });
    for (ok, name) in [
        (units_to_top, "units"),
        (powers, "powers"),
        (nilpotents_to_bottom, "nilpotents"),
        (orthogonal_sums, "orthogonal sums"),
        (radical_order, "radical order"),
    ] {
        if !ok {
            w.push(format!("{name} law fails"));
        }
    }
    SupportProperties { units_to_top, powers, nilpotents_to_bottom, orthogonal_sums, radical_order, witnesses: w }
}

/// `Spec(L)` as prime elements of `L` (each prime ideal is `↓p`),
/// with `φ(p) = D⁻¹(↓p)` and `ψ(q) = ↓⋁D(q)`.
#[derive(Debug, Clone)]
pub struct SpecHomeo {
    pub lattice_points: Vec<usize>,
    pub phi: Vec<usize>,
    pub psi: Vec<usize>,
}

pub fn spec_homeo(d: &SupportMap) -> Result<SpecHomeo> {
    let s = d.source.as_ref();
    let l = d.target.as_ref();
    let fp = frame_points(l)?;
    let spec = spectrum(s, PrimeKind::Prime)?;
    let fail = |m: String| Err(Error::HomeoFailed(m));
    let mut phi = Vec::new();
    for &p in &fp.points {
        let q = (0..s.size()).filter(|&a| l.leq(d.apply(a), p)).collect();
        match spec.index_of(q) {
            Some(k) => phi.push(k),
            None => return fail(format!("D⁻¹(↓{}) = {} is not prime", l.labels[p], s.set_label(q))),
        }
    }
    let mut psi = Vec::new();
    for &q in &spec.primes {
        let top = l.join_all(q.iter().map(|a| d.apply(a)));
        match fp.points.iter().position(|&p| p == top) {
            Some(k) => psi.push(k),
            None => return fail(format!("⟨D({})⟩ is not a prime lattice ideal", s.set_label(q))),
        }
    }
    if phi.len() != psi.len() || (0..phi.len()).any(|i| psi[phi[i]] != i) {
        return fail("φ and ψ are not inverse".into());
    }
    if !fp.space.homeomorphic_via(&spec.space, &phi) {
        return fail("φ is not a homeomorphism".into());
    }
    Ok(SpecHomeo { lattice_points: fp.points, phi, psi })
}

/// `Id(L) ≅ RId(S)` via `φ(J) = D⁻¹(J)` and `ψ(I) = ⟨D[I]⟩`.
#[derive(Debug, Clone)]
pub struct FrameIso {
    pub ideals_of_l: Arc<FiniteLattice>,
    pub rid: RadicalLattice,
    pub phi: LatticeMap,
    pub psi: LatticeMap,
}

pub fn ideal_frame_iso(d: &SupportMap) -> Result<FrameIso> {
    let s = &d.source;
    let l = d.target.as_ref();
    let il = Arc::new(ideal_lattice(l)?);
    let rid = build_radical_lattice(s, RadicalKind::Rid)?;
    let fail = |m: String| Err(Error::IsoFailed(m));
    let mut phi = Vec::new();
    for j in 0..il.len() {
        let pre = d.preimage(il.set(j).unwrap());
        match rid.index_of(pre) {
            Some(k) => phi.push(k),
            None => return fail(format!("D⁻¹({}) = {} is not a radical ideal", il.labels[j], s.set_label(pre))),
        }
    }
    let mut psi = Vec::new();
    for i in 0..rid.lattice.len() {
        let img: ElemSet = rid.set(i).iter().map(|a| d.apply(a)).collect();
        let gen = lattice_ideal_closure(l, img);
        match il.index_of_set(gen) {
            Some(k) => psi.push(k),
            None => return fail(format!("ideal generated by D[{}] missing", rid.lattice.labels[i])),
        }
    }
    let phi = LatticeMap::new(&il, &rid.lattice, phi);
    let psi = LatticeMap::new(&rid.lattice, &il, psi);
    if !phi.is_frame_hom() || !psi.is_frame_hom() {
        return fail("φ or ψ is not a frame map".into());
    }
    if (0..il.len()).any(|j| psi.apply(phi.apply(j)) != j)
        || (0..rid.lattice.len()).any(|i| phi.apply(psi.apply(i)) != i)
    {
        return fail("φ and ψ are not inverse".into());
    }
    Ok(FrameIso { ideals_of_l: il, rid, phi, psi })
}

/// Complemented idempotents with `⊞`, `⊡` against complemented lattice elements with `⊕`, `⊙`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BooleanReport {
    pub comp: Vec<usize>,
    /// `perp[k]` is the complement of `comp[k]`.
    pub perp: Vec<usize>,
    pub complements_unique: bool,
    pub lattice_complemented: Vec<usize>,
    pub comp_is_boolean_ring: bool,
    pub lattice_is_boolean_ring: bool,
    pub isomorphism: bool,
    pub witness: Option<String>,
}

fn boolean_ring_laws(
    n: usize,
    plus: &dyn Fn(usize, usize) -> usize,
    times: &dyn Fn(usize, usize) -> usize,
    zero: usize,
    one: usize,
) -> bool {
    let r = 0..n;
    r.clone().all(|a| {
        plus(a, zero) == a
            && times(a, one) == a
            && plus(a, a) == zero
            && times(a, a) == a
            && r.clone().all(|b| {
                plus(a, b) == plus(b, a)
                    && times(a, b) == times(b, a)
                    && r.clone().all(|c| {
                        plus(plus(a, b), c) == plus(a, plus(b, c))
                            && times(times(a, b), c) == times(a, times(b, c))
                            && times(a, plus(b, c)) == plus(times(a, b), times(a, c))
                    })
            })
    })
}

pub fn boolean_structures(d: &SupportMap) -> Result<BooleanReport> {
    let s = d.source.as_ref();
    let l = d.target.as_ref();
    let one = s.one()?;
    let mut comp = Vec::new();
    let mut perp = Vec::new();
    let mut complements_unique = true;
    for e in s.idempotents() {
        let fs: Vec<usize> = (0..s.size()).filter(|&f| s.add(e, f) == one && s.mul(e, f) == s.zero()).collect();
        if let Some(&f) = fs.first() {
            complements_unique &= fs.len() == 1;
            comp.push(e);
            perp.push(f);
        }
    }
    let pos = |x: usize| comp.iter().position(|&c| c == x);
    let cn = comp.len();
    let in_comp = |x: usize| pos(x).is_some();
    // ⊞ and ⊡ on positions in comp; out-of-range results are caught below
    let closed = (0..cn).all(|i| {
        (0..cn).all(|k| {
            let (e, f) = (comp[i], comp[k]);
            in_comp(s.add(s.mul(e, perp[k]), s.mul(f, perp[i]))) && in_comp(s.mul(e, f))
        })
    });
    let boxplus =
        |i: usize, k: usize| pos(s.add(s.mul(comp[i], perp[k]), s.mul(comp[k], perp[i]))).unwrap_or(usize::MAX);
    let boxdot = |i: usize, k: usize| pos(s.mul(comp[i], comp[k])).unwrap_or(usize::MAX);
    let comp_is_boolean_ring = closed
        && pos(s.zero()).is_some()
        && pos(one).is_some()
        && boolean_ring_laws(cn, &boxplus, &boxdot, pos(s.zero()).unwrap(), pos(one).unwrap());
    let lc = l.complemented();
    let lpos = |x: usize| lc.iter().position(|&c| c == x).unwrap_or(usize::MAX);
    let compl = |x: usize| l.complement_of(x).expect("complemented");
    let oplus = |i: usize, k: usize| {
        let (x, y) = (lc[i], lc[k]);
        lpos(l.join(l.meet(x, compl(y)), l.meet(compl(x), y)))
    };
    let odot = |i: usize, k: usize| lpos(l.meet(lc[i], lc[k]));
    let lattice_is_boolean_ring = boolean_ring_laws(lc.len(), &oplus, &odot, lpos(l.bottom()), lpos(l.top()));
    let image: Vec<usize> = comp.iter().map(|&e| lpos(d.apply(e))).collect();
    let mut witness = None;
    let bijective = image.len() == lc.len() && {
        let set: ElemSet = image.iter().copied().filter(|&x| x != usize::MAX).collect();
        set.len() == lc.len()
    };
    if !bijective {
        witness = Some(format!("D maps {} complemented idempotents onto {} complemented elements", cn, lc.len()));
    }
    let homomorphic = bijective
        && comp_is_boolean_ring
        && (0..cn).all(|i| {
            (0..cn).all(|k| {
                image[boxplus(i, k)] == oplus(image[i], image[k]) && image[boxdot(i, k)] == odot(image[i], image[k])
            })
        });
    if bijective && !homomorphic {
        witness = Some("D does not preserve the ring operations".into());
    }
    Ok(BooleanReport {
        comp,
        perp,
        complements_unique,
        lattice_complemented: lc,
        comp_is_boolean_ring,
        lattice_is_boolean_ring,
        isomorphism: homomorphic,
        witness,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZdcReport {
    /// spectral and Hausdorff, which for a finite space means discrete
    pub stone: bool,
    pub boolean: bool,
    /// every `a` has `b` with `a = a²b`
    pub regular: bool,
    /// every element of RId(S) is a join of complemented elements
    pub zero_dimensional: bool,
    pub all_primes_maximal: bool,
    pub trio_agrees: bool,
    /// regular or zero-dimensional disagreeing with the trio
    pub findings: Vec<String>,
}

pub fn zdc_report(ret: &Reticulation) -> Result<ZdcReport> {
    let s = ret.semiring();
    s.one()?;
    let space = &ret.spectrum.space;
    let stone = space.spectral_report().spectral && space.is_discrete();
    let boolean = ret.lattice().is_boolean();
    let regular = (0..s.size()).all(|a| (0..s.size()).any(|b| s.mul(s.mul(a, a), b) == a));
    let rid = build_radical_lattice(s, RadicalKind::Rid)?;
    let zero_dimensional = rid.lattice.is_zero_dimensional();
    let maximal = crate::spectra::maximal_ideals(s)?;
    let all_primes_maximal = ret.spectrum.primes.iter().all(|p| maximal.contains(p));
    let trio_agrees = stone == boolean && boolean == all_primes_maximal;
    let mut findings = Vec::new();
    if regular != stone {
        findings.push(format!("{}: regular={regular} but stone={stone}", s.name()));
    }
    if zero_dimensional != stone {
        findings.push(format!("{}: zero-dimensional={zero_dimensional} but stone={stone}", s.name()));
    }
    Ok(ZdcReport { stone, boolean, regular, zero_dimensional, all_primes_maximal, trio_agrees, findings })
}

/// The unique lattice map `x ↦ ⋁{D₂(s) : D₁(s) ≤ x}` between two supports of
/// the same semiring, checked to commute with both maps and to be a bounded
/// lattice isomorphism. `None` when it is not one.
pub fn support_factorization(d1: &SupportMap, d2: &SupportMap) -> Option<LatticeMap> {
    let (l1, l2) = (&d1.target, &d2.target);
    let n = d1.source.size();
    let map: Vec<usize> =
        (0..l1.len()).map(|x| l2.join_all((0..n).filter(|&a| l1.leq(d1.apply(a), x)).map(|a| d2.apply(a)))).collect();
    let lm = LatticeMap::new(l1, l2, map);
    let commutes = (0..n).all(|a| lm.apply(d1.apply(a)) == d2.apply(a));
    (commutes && lm.is_frame_hom() && l1.is_isomorphism(l2, &lm.map)).then_some(lm)
}

/// For an open support `d: S → Ω(X)`, the map `x ↦ {a : x ∉ d(a)}` into
/// `Spec(S)`, checked to satisfy `f⁻¹(D(a)) = d(a)`. It is the only candidate,
/// since `f(x)` is determined by the triangle.
pub fn open_support_factorization(s: &FiniteSemiring, points: usize, d: &[ElemSet]) -> Result<Option<Vec<usize>>> {
    let spec = spectrum(s, PrimeKind::Prime)?;
    let mut f = Vec::with_capacity(points);
    for x in 0..points {
        let p: ElemSet = (0..s.size()).filter(|&a| !d[a].contains(x)).collect();
        if !is_prime_set(s, p) {
            return Ok(None);
        }
        match spec.index_of(p) {
            Some(k) => f.push(k),
            None => return Ok(None),
        }
    }
    let ok = (0..s.size()).all(|a| {
        let pre: ElemSet = (0..points).filter(|&x| spec.basic_open(a).contains(f[x])).collect();
        pre == d[a]
    });
    Ok(ok.then_some(f))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LSupportReport {
    pub support: SupportReport,
    /// `D⁻¹(J)` is strong for every lattice ideal `J`
    pub preimages_strong: bool,
    /// `J ↦ D⁻¹(J)` restricted to prime ideals lands in, and is a homeomorphism onto, `Spec_l(S)`
    pub strong_spectrum_homeomorphic: bool,
}

/// Checks for supports satisfying `D(a+b) = D(a) ∨ D(b)`.
pub fn l_support_report(d: &SupportMap) -> Result<LSupportReport> {
    let support = check_support(d, SupportVariant::L)?;
    let s = d.source.as_ref();
    let l = d.target.as_ref();
    let il = ideal_lattice(l)?;
    let preimages_strong = (0..il.len()).all(|j| is_strong_set(s, d.preimage(il.set(j).unwrap())));
    let fp = frame_points(l)?;
    let spec_l = spectrum(s, PrimeKind::Strong)?;
    let map: Option<Vec<usize>> =
        fp.points.iter().map(|&p| spec_l.index_of((0..s.size()).filter(|&a| l.leq(d.apply(a), p)).collect())).collect();
    let strong_spectrum_homeomorphic = map.is_some_and(|m| fp.space.homeomorphic_via(&spec_l.space, &m));
    Ok(LSupportReport { support, preimages_strong, strong_spectrum_homeomorphic })
}

/// `D_f(D_S(a)) = D_T(f(a))`, extended to all opens by joins.
pub fn support_functor_action(f: &SemiringHom, rs: &Reticulation, rt: &Reticulation) -> Result<LatticeMap> {
    let s = f.source();
    let (ls, lt) = (rs.lattice(), rt.lattice());
    for a in 0..s.size() {
        for b in a + 1..s.size() {
            if rs.support.apply(a) == rs.support.apply(b)
                && rt.support.apply(f.apply(a)) != rt.support.apply(f.apply(b))
            {
                return Err(Error::IllDefined(s.label(a).to_string(), s.label(b).to_string()));
            }
        }
    }
    let map: Vec<usize> = (0..ls.len())
        .map(|u| {
            lt.join_all((0..s.size()).filter(|&a| ls.leq(rs.support.apply(a), u)).map(|a| rt.support.apply(f.apply(a))))
        })
        .collect();
    let lm = LatticeMap::new(ls, lt, map);
    // agrees with taking preimages along Spec(f)
    let sm = spec_map(f, PrimeKind::Prime)?;
    for u in 0..ls.len() {
        let open = ls.set(u).expect("open");
        let pre: ElemSet = (0..sm.point_map.len()).filter(|&q| open.contains(sm.point_map[q])).collect();
        if lt.set(lm.apply(u)) != Some(pre) {
            return Err(Error::IllDefined(ls.labels[u].clone(), "preimage".into()));
        }
    }
    Ok(lm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::{boolean, chain, product, saturating_nat, zmod};

    fn arc(s: FiniteSemiring) -> Arc<FiniteSemiring> {
        Arc::new(s)
    }

    #[test]
    fn reticulation_of_saturating_nat() {
        let sn = arc(saturating_nat(2).unwrap());
        let r = reticulation(&sn).unwrap();
        assert_eq!(r.lattice().len(), 3);
        let d2 = r.support.apply(2);
        assert_eq!(r.lattice().labels[d2], "{{0}}");
        assert!(check_support(&r.support, SupportVariant::Plain).unwrap().holds);
        assert!(support_properties(&r.support).all());
        assert!(spec_homeo(&r.support).is_ok());
        let iso = ideal_frame_iso(&r.support).unwrap();
        assert_eq!(iso.ideals_of_l.len(), 3);
    }

    #[test]
    fn k_support_replaces_cover_axiom() {
        let sn = arc(saturating_nat(2).unwrap());
        let ridk = build_radical_lattice(&sn, RadicalKind::RidK).unwrap();
        let d = principal_support(&ridk);
        assert!(check_support(&d, SupportVariant::K).unwrap().holds);
        assert!(!check_support(&d, SupportVariant::Plain).unwrap().covers);
    }

    #[test]
    fn nilpotent_goes_to_bottom() {
        let z = arc(zmod(4).unwrap());
        let r = reticulation(&z).unwrap();
        assert_eq!(r.support.apply(2), r.lattice().bottom());
    }

    #[test]
    fn boolean_transfer_on_square() {
        let bb = arc(product(&boolean(), &boolean()).unwrap());
        let r = reticulation(&bb).unwrap();
        let b = boolean_structures(&r.support).unwrap();
        assert_eq!(b.comp.len(), 4);
        assert!(b.isomorphism && b.comp_is_boolean_ring && b.lattice_is_boolean_ring);
        let z = zdc_report(&r).unwrap();
        assert!(z.stone && z.boolean && z.regular && z.zero_dimensional && z.all_primes_maximal);
    }

    #[test]
    fn chain_is_its_own_reticulation() {
        let c = arc(chain(3).unwrap());
        let r = reticulation(&c).unwrap();
        assert_eq!(r.lattice().len(), 3);
        let b = boolean_structures(&r.support).unwrap();
        assert_eq!(b.comp, vec![0, 2]);
        let z = zdc_report(&r).unwrap();
        assert!(!z.stone && !z.boolean && z.trio_agrees);
        let l = l_support_report(&r.support).unwrap();
        assert!(l.support.holds && l.preimages_strong && l.strong_spectrum_homeomorphic);
        let rid = build_radical_lattice(&c, RadicalKind::Rid).unwrap();
        assert!(support_factorization(&principal_support(&rid), &r.support).is_some());
    }
}
