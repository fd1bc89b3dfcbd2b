//! The lattices RId(S), RId_k(S) and Id_k(S), the nucleus between the first
//! two, and the maps induced by semiring homomorphisms.

use std::sync::Arc;

use crate::bits::ElemSet;
use crate::error::{Error, Result};
use crate::hom::SemiringHom;
use crate::ideals::{all_ideals, ideal_closure, k_closure_set};
use crate::lattice::{FiniteLattice, LatticeMap};
use crate::semiring::FiniteSemiring;
use crate::spectra::{k_radical_set, radical_set};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RadicalKind {
    /// radical ideals, join `√(I+J)`
    Rid,
    /// k-radical ideals, join `√ᵏ(I+J)`
    RidK,
    /// k-ideals, join `C_k(I+J)`
    IdK,
}

impl RadicalKind {
    pub fn name(self) -> &'static str {
        match self {
            RadicalKind::Rid => "rid",
            RadicalKind::RidK => "rid_k",
            RadicalKind::IdK => "id_k",
        }
    }
}

impl std::str::FromStr for RadicalKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rid" => Ok(RadicalKind::Rid),
            "rid_k" => Ok(RadicalKind::RidK),
            "id_k" => Ok(RadicalKind::IdK),
            _ => Err(Error::UnknownConstructor(s.to_string())),
        }
    }
}

/// The closure operator whose fixed points form the lattice of `kind`.
pub fn closure_of(s: &FiniteSemiring, kind: RadicalKind, set: ElemSet) -> Result<ElemSet> {
    let i = ideal_closure(s, set);
    Ok(match kind {
        RadicalKind::Rid => radical_set(s, i),
        RadicalKind::RidK => k_radical_set(s, i)?,
        RadicalKind::IdK => k_closure_set(s, i),
    })
}

/// A lattice of ideals together with the principal element of each semiring element.
#[derive(Debug, Clone)]
pub struct RadicalLattice {
    pub semiring: Arc<FiniteSemiring>,
    pub kind: RadicalKind,
    pub lattice: Arc<FiniteLattice>,
    /// `principals[a]` is the index of `[a]`, `[a]_k` or `C_k⟨a⟩`.
    pub principals: Vec<usize>,
}

impl RadicalLattice {
    pub fn set(&self, i: usize) -> ElemSet {
        self.lattice.set(i).expect("ideal lattice")
    }

    pub fn index_of(&self, x: ElemSet) -> Option<usize> {
        self.lattice.index_of_set(x)
    }

    /// Index of the closure of an arbitrary subset.
    pub fn close(&self, x: ElemSet) -> Result<usize> {
        let c = closure_of(&self.semiring, self.kind, x)?;
        self.index_of(c).ok_or_else(|| Error::NotALattice(format!("closure {} missing", self.semiring.set_label(c))))
    }
}

pub fn build_radical_lattice(s: &Arc<FiniteSemiring>, kind: RadicalKind) -> Result<RadicalLattice> {
    let mut sets = Vec::new();
    for &i in all_ideals(s)? {
        if closure_of(s, kind, i)? == i {
            sets.push(i);
        }
    }
    let labels = sets.iter().map(|&x| s.set_label(x)).collect();
    let sr = s.clone();
    let mut lattice = FiniteLattice::from_family(labels, sets, move |a, b| {
        closure_of(&sr, kind, a.union(b)).expect("bounds already checked")
    })?;
    let mut principals = Vec::with_capacity(s.size());
    for a in 0..s.size() {
        let c = closure_of(s, kind, ElemSet::singleton(a))?;
        principals.push(lattice.index_of_set(c).expect("closure is a fixed point"));
    }
    lattice.generators = Some(principals.iter().copied().collect());
    Ok(RadicalLattice { semiring: s.clone(), kind, lattice: Arc::new(lattice), principals })
}

/// `[a]` (rid) or `[a]_k` (rid_k) as a lattice index.
pub fn principal(l: &RadicalLattice, a: usize) -> usize {
    l.principals[a]
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PrincipalLaws {
    /// `[a,b] = [a] ∨ [b]`
    pub join_law: bool,
    /// `[ab] = [a] ∧ [b]`
    pub meet_law: bool,
    /// every element is the join of the principals below it
    pub decomposition: bool,
    pub witnesses: Vec<String>,
}

pub fn principal_laws(l: &RadicalLattice) -> Result<PrincipalLaws> {
    let s = &l.semiring;
    let lat = &l.lattice;
    let mut out = PrincipalLaws { join_law: true, meet_law: true, decomposition: true, witnesses: Vec::new() };
    for a in 0..s.size() {
        for b in 0..s.size() {
            let pair = l.close(ElemSet::singleton(a).with(b))?;
            if pair != lat.join(l.principals[a], l.principals[b]) {
                out.join_law = false;
                out.witnesses.push(format!("join law at ({}, {})", s.label(a), s.label(b)));
            }
            if l.principals[s.mul(a, b)] != lat.meet(l.principals[a], l.principals[b]) {
                out.meet_law = false;
                out.witnesses.push(format!("meet law at ({}, {})", s.label(a), s.label(b)));
            }
        }
    }
    for x in 0..lat.len() {
        let below = l.set(x).iter().map(|a| l.principals[a]);
        if lat.join_all(below) != x {
            out.decomposition = false;
            out.witnesses.push(format!("decomposition at {}", lat.labels[x]));
        }
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct NucleusReport {
    /// `j` as a map on RId(S).
    pub map: LatticeMap,
    pub extensive: bool,
    pub idempotent: bool,
    pub meet_preserving: bool,
    /// fixed points are exactly the k-radical ideals
    pub fixed_points_match: bool,
    /// the corestriction RId → RId_k is a surjective frame map
    pub corestriction_onto: bool,
    pub bottom_fixed: bool,
}

/// `j(I) = ⋁_k {[a]_k : a ∈ I}` on RId(S).
pub fn nucleus_j(s: &Arc<FiniteSemiring>) -> Result<NucleusReport> {
    s.one()?;
    let rid = build_radical_lattice(s, RadicalKind::Rid)?;
    let ridk = build_radical_lattice(s, RadicalKind::RidK)?;
    let (l, lk) = (&rid.lattice, &ridk.lattice);
    let mut core = Vec::with_capacity(l.len());
    let mut map = Vec::with_capacity(l.len());
    for x in 0..l.len() {
        let k = lk.join_all(rid.set(x).iter().map(|a| ridk.principals[a]));
        core.push(k);
        let back = rid
            .index_of(ridk.set(k))
            .ok_or_else(|| Error::NucleusAxiomFailed(format!("{} is not radical", lk.labels[k])))?;
        map.push(back);
    }
    let j = LatticeMap::new(l, l, map.clone());
    let n = l.len();
    let extensive = (0..n).all(|x| l.leq(x, map[x]));
    let idempotent = (0..n).all(|x| map[map[x]] == map[x]);
    let meet_preserving = j.preserves.meets;
    if !(extensive && idempotent && meet_preserving) {
        return Err(Error::NucleusAxiomFailed(format!(
            "extensive={extensive} idempotent={idempotent} meets={meet_preserving}"
        )));
    }
    let mut fixed: Vec<ElemSet> = (0..n).filter(|&x| map[x] == x).map(|x| rid.set(x)).collect();
    let mut kset: Vec<ElemSet> = (0..lk.len()).map(|x| ridk.set(x)).collect();
    fixed.sort_by_key(|x| x.size_key());
    kset.sort_by_key(|x| x.size_key());
    let fixed_points_match = fixed == kset;
    let co = LatticeMap::new(l, lk, core.clone());
    let onto: ElemSet = core.iter().copied().collect();
    let corestriction_onto = co.is_frame_hom() && onto.len() == lk.len();
    let bottom_fixed = map[l.bottom()] == l.bottom();
    Ok(NucleusReport {
        map: j,
        extensive,
        idempotent,
        meet_preserving,
        fixed_points_match,
        corestriction_onto,
        bottom_fixed,
    })
}

/// `RId(f)(I) = √⟨f(I)⟩`, `RId_k(f)(I) = √ᵏ⟨f(I)⟩`, `Id_k(f)(I) = C_k⟨f(I)⟩`.
#[derive(Debug, Clone)]
pub struct InducedMap {
    pub kind: RadicalKind,
    pub source: RadicalLattice,
    pub target: RadicalLattice,
    pub map: LatticeMap,
}

pub fn induced_map_between(f: &SemiringHom, src: &RadicalLattice, tgt: &RadicalLattice) -> Result<InducedMap> {
    let kind = src.kind;
    let mut map = Vec::with_capacity(src.lattice.len());
    for x in 0..src.lattice.len() {
        map.push(tgt.close(f.image(src.set(x)))?);
    }
    let lm = LatticeMap::new(&src.lattice, &tgt.lattice, map);
    let p = lm.preserves;
    let fail = |law: &'static str, witness: String| Err(Error::PreservationFailed { law, witness });
    if !p.bottom {
        return fail("bottom", src.lattice.labels[src.lattice.bottom()].clone());
    }
    if !p.top {
        return fail("top", src.lattice.labels[src.lattice.top()].clone());
    }
    if !p.joins {
        return fail("joins", String::new());
    }
    if !p.meets {
        return fail("meets", String::new());
    }
    if let Some(x) = (0..f.source().size()).find(|&x| lm.map[src.principals[x]] != tgt.principals[f.apply(x)]) {
        return fail("principals", f.source().label(x).to_string());
    }
    Ok(InducedMap { kind, source: src.clone(), target: tgt.clone(), map: lm })
}

pub fn induced_map(f: &SemiringHom, kind: RadicalKind) -> Result<InducedMap> {
    let src = build_radical_lattice(f.source(), kind)?;
    let tgt = build_radical_lattice(f.target(), kind)?;
    induced_map_between(f, &src, &tgt)
}

/// The identity hom induces the identity map.
pub fn induced_identity_law(s: &Arc<FiniteSemiring>, kind: RadicalKind) -> Result<bool> {
    let m = induced_map(&SemiringHom::identity(s), kind)?;
    Ok(m.map.map.iter().enumerate().all(|(i, &j)| i == j))
}

/// `F(g∘f) = F(g)∘F(f)`.
pub fn induced_composition_law(f: &SemiringHom, g: &SemiringHom, kind: RadicalKind) -> Result<bool> {
    let gf = f.then(g)?;
    let (mf, mg, mgf) = (induced_map(f, kind)?, induced_map(g, kind)?, induced_map(&gf, kind)?);
    Ok((0..mf.map.map.len()).all(|x| mgf.map.map[x] == mg.map.map[mf.map.map[x]]))
}

/// `RId_k(f) ∘ j_S = j_T ∘ RId(f)` on every element of RId(S); `None` when it holds.
pub fn naturality_check(f: &SemiringHom) -> Result<Option<String>> {
    let (s, t) = (f.source(), f.target());
    let js = nucleus_j(s)?;
    let jt = nucleus_j(t)?;
    let rid_s = build_radical_lattice(s, RadicalKind::Rid)?;
    let rid_t = build_radical_lattice(t, RadicalKind::Rid)?;
    let ridk_s = build_radical_lattice(s, RadicalKind::RidK)?;
    let ridk_t = build_radical_lattice(t, RadicalKind::RidK)?;
    let rf = induced_map_between(f, &rid_s, &rid_t)?;
    let rkf = induced_map_between(f, &ridk_s, &ridk_t)?;
    for x in 0..rid_s.lattice.len() {
        let jx = ridk_s.index_of(rid_s.set(js.map.apply(x))).expect("fixed point is k-radical");
        let left = ridk_t.set(rkf.map.apply(jx));
        let right = rid_t.set(jt.map.apply(rf.map.apply(x)));
        if left != right {
            return Ok(Some(rid_s.lattice.labels[x].clone()));
        }
    }
    Ok(None)
}
