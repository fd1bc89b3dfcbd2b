//! The theorem suite: every invariant of the library, run against each
//! corpus member, its outgoing homs and composable pairs, and the
//! adjunction instances it sources.

use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use rigframe::bits::ElemSet;
use rigframe::frames::{
    build_radical_lattice, induced_composition_law, induced_identity_law, induced_map, naturality_check, nucleus_j,
    principal_laws, RadicalKind,
};
use rigframe::hom::enumerate_homs;
use rigframe::ideals::{
    all_ideals, enumerate_ideal_sets, ideal_closure, is_k_ideal_set, is_strong_set, k_closure_set, product_set,
    strong_closure_set, IdealKind,
};
use rigframe::lattice::{frame_points, hom_profile, is_joinfit, lattice_laws, n5_witnesses};
use rigframe::quantale::{
    adjunction_check, hom_bijection, idk_quantale, principal_k_laws, quantale_as_semiring, ridk_semiring,
    zar_correspondence,
};
use rigframe::semiring::FiniteSemiring;
use rigframe::spectra::{
    cover_equivalence, located_radical_set, radical_set, semisimplicity_report, spec_functor_law, spec_identity_law,
    spec_map, spectrum, PrimeKind,
};
use rigframe::support::{
    boolean_structures, check_support, ideal_frame_iso, l_support_report, principal_support, reticulation, spec_homeo,
    support_factorization, support_functor_action, support_properties, zdc_report, SupportVariant,
};
use rigframe::{Bounds, Result};

use crate::corpus::{Corpus, Excluded, NamedHom};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Reported,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub semiring: String,
    pub checks: Vec<CheckRecord>,
}

impl SuiteReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| c.verdict == Verdict::Fail)
    }

    pub fn check(&self, id: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.id == id)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub members: usize,
    pub homs: usize,
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
    pub reported: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorpusReport {
    pub summary: Summary,
    pub excluded: Vec<ExcludedRecord>,
    pub reports: Vec<SuiteReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExcludedRecord {
    pub name: String,
    pub reason: String,
}

impl From<&Excluded> for ExcludedRecord {
    fn from(e: &Excluded) -> Self {
        ExcludedRecord { name: e.name.clone(), reason: e.reason.clone() }
    }
}

impl CorpusReport {
    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn report(&self, member: &str) -> Option<&SuiteReport> {
        self.reports.iter().find(|r| r.semiring == member)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SuiteOptions {
    pub timings: bool,
}

enum Outcome {
    Pass,
    Fail(String),
    Reported(String),
}

fn expect(ok: bool, witness: impl FnOnce() -> String) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        Outcome::Fail(witness())
    }
}

fn first_failure(witnesses: Vec<String>) -> Outcome {
    match witnesses.into_iter().next() {
        None => Outcome::Pass,
        Some(w) => Outcome::Fail(w),
    }
}

struct Recorder {
    options: SuiteOptions,
    records: Vec<CheckRecord>,
}

impl Recorder {
    fn run(&mut self, id: impl Into<String>, f: impl FnOnce() -> Result<Outcome>) {
        let start = Instant::now();
        let outcome = f();
        let elapsed_ms = self.options.timings.then(|| start.elapsed().as_secs_f64() * 1000.0);
        let (verdict, witness) = match outcome {
            Ok(Outcome::Pass) => (Verdict::Pass, None),
            Ok(Outcome::Fail(w)) => (Verdict::Fail, Some(w)),
            Ok(Outcome::Reported(w)) => (Verdict::Reported, Some(w)),
            Err(e) => (Verdict::Fail, Some(e.to_string())),
        };
        self.records.push(CheckRecord { id: id.into(), verdict, witness, elapsed_ms });
    }
}

fn kind_id(kind: PrimeKind) -> &'static str {
    match kind {
        PrimeKind::Prime => "prime",
        PrimeKind::K => "k",
        PrimeKind::Strong => "strong",
    }
}

fn radical_id(kind: RadicalKind) -> &'static str {
    match kind {
        RadicalKind::Rid => "rid",
        RadicalKind::RidK => "rid-k",
        RadicalKind::IdK => "id-k",
    }
}

fn ideal_checks(r: &mut Recorder, s: &FiniteSemiring) {
    if s.flags().additively_idempotent {
        r.run("natural-order-partial-order", || {
            let n = s.size();
            let refl = (0..n).all(|a| s.leq(a, a));
            let anti = (0..n).all(|a| (0..n).all(|b| !(s.leq(a, b) && s.leq(b, a)) || a == b));
            let trans = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| !(s.leq(a, b) && s.leq(b, c)) || s.leq(a, c))));
            let top_iff = s.unit().is_none_or(|one| (0..n).all(|x| s.leq(x, one)) == s.flags().idealic);
            Ok(expect(refl && anti && trans && top_iff, || {
                format!("refl={refl} anti={anti} trans={trans} top={top_iff}")
            }))
        });
    }
    r.run("closure-operator-laws", || {
        let ideals = all_ideals(s)?;
        let mut bad = Vec::new();
        for (name, close) in
            [("k", k_closure_set as fn(&FiniteSemiring, ElemSet) -> ElemSet), ("strong", strong_closure_set)]
        {
            for &i in ideals {
                let ci = close(s, i);
                if !i.is_subset(ci) || close(s, ci) != ci {
                    bad.push(format!("{name}-closure at {}", s.set_label(i)));
                }
                for &j in ideals {
                    if i.is_subset(j) && !ci.is_subset(close(s, j)) {
                        bad.push(format!("{name}-closure monotone at {} <= {}", s.set_label(i), s.set_label(j)));
                    }
                }
            }
        }
        Ok(first_failure(bad))
    });
    r.run("closed-under-intersection", || {
        let ks = enumerate_ideal_sets(s, IdealKind::K)?;
        let ss = enumerate_ideal_sets(s, IdealKind::Strong)?;
        let k_ok = ks.iter().all(|&i| ks.iter().all(|&j| is_k_ideal_set(s, i.intersection(j))));
        let s_ok = ss.iter().all(|&i| ss.iter().all(|&j| is_strong_set(s, i.intersection(j))));
        Ok(expect(k_ok && s_ok, || format!("k={k_ok} strong={s_ok}")))
    });
    r.run("k-ideals-are-closure-fixed-points", || {
        let all = enumerate_ideal_sets(s, IdealKind::All)?;
        let k_fixed: Vec<ElemSet> = all.iter().copied().filter(|&i| k_closure_set(s, i) == i).collect();
        let s_fixed: Vec<ElemSet> = all.iter().copied().filter(|&i| strong_closure_set(s, i) == i).collect();
        let k_ok = enumerate_ideal_sets(s, IdealKind::K)? == k_fixed;
        let s_ok = enumerate_ideal_sets(s, IdealKind::Strong)? == s_fixed;
        Ok(expect(k_ok && s_ok, || format!("k={k_ok} strong={s_ok}")))
    });
    r.run("product-within-intersection", || {
        let ideals = all_ideals(s)?;
        let bad = ideals
            .iter()
            .flat_map(|&i| ideals.iter().map(move |&j| (i, j)))
            .find(|&(i, j)| !product_set(s, i, j).is_subset(i.intersection(j)));
        Ok(expect(bad.is_none(), || {
            let (i, j) = bad.unwrap();
            format!("{} * {}", s.set_label(i), s.set_label(j))
        }))
    });
}

fn radical_checks(r: &mut Recorder, s: &Arc<FiniteSemiring>) {
    r.run("radical-is-meet-of-primes", || {
        for &i in all_ideals(s)? {
            if radical_set(s, i) != located_radical_set(s, i, PrimeKind::Prime)? {
                return Ok(Outcome::Fail(s.set_label(i)));
            }
        }
        Ok(Outcome::Pass)
    });
    r.run("k-radical-ignores-k-closure", || {
        for &i in all_ideals(s)? {
            if located_radical_set(s, i, PrimeKind::K)? != located_radical_set(s, k_closure_set(s, i), PrimeKind::K)? {
                return Ok(Outcome::Fail(s.set_label(i)));
            }
        }
        Ok(Outcome::Pass)
    });
    r.run("k-radical-of-product-is-meet", || {
        let mut rads = Vec::new();
        for &i in all_ideals(s)? {
            if located_radical_set(s, i, PrimeKind::K)? == i {
                rads.push(i);
            }
        }
        for &i in &rads {
            for &j in &rads {
                let ij = ideal_closure(s, product_set(s, i, j));
                if located_radical_set(s, ij, PrimeKind::K)? != i.intersection(j) {
                    return Ok(Outcome::Fail(format!("{} * {}", s.set_label(i), s.set_label(j))));
                }
            }
        }
        Ok(Outcome::Pass)
    });
    for kind in PrimeKind::ALL {
        r.run(format!("basic-open-law-{}", kind_id(kind)), || {
            let sp = spectrum(s, kind)?;
            let n = s.size();
            let zero = sp.basic_open(s.zero()).is_empty();
            let one = sp.basic_open(s.one()?) == ElemSet::full(sp.primes.len());
            let bad = (0..n)
                .flat_map(|a| (0..n).map(move |b| (a, b)))
                .find(|&(a, b)| sp.basic_open(a).intersection(sp.basic_open(b)) != sp.basic_open(s.mul(a, b)));
            Ok(expect(zero && one && bad.is_none(), || match bad {
                Some((a, b)) => format!("D({}) ∩ D({})", s.label(a), s.label(b)),
                None => format!("D(0) empty={zero} D(1) full={one}"),
            }))
        });
        r.run(format!("spectral-space-{}", kind_id(kind)), || {
            let rep = spectrum(s, kind)?.space.spectral_report();
            Ok(expect(rep.spectral, || format!("t0={} sober={}", rep.t0, rep.sober)))
        });
        r.run(format!("spec-identity-law-{}", kind_id(kind)), || Ok(expect(spec_identity_law(s, kind)?, String::new)));
    }
    r.run("cover-equivalence", || {
        let bound = Bounds::current().cover_set;
        for set in s.carrier().nonempty_subsets_up_to(bound) {
            for a in 0..s.size() {
                cover_equivalence(s, a, set)?;
            }
        }
        Ok(Outcome::Pass)
    });
}

fn frame_checks(r: &mut Recorder, s: &Arc<FiniteSemiring>) {
    for kind in [RadicalKind::Rid, RadicalKind::RidK] {
        r.run(format!("frame-laws-{}", radical_id(kind)), || {
            let l = build_radical_lattice(s, kind)?;
            let laws = lattice_laws(&l.lattice);
            Ok(expect(laws.frame, || format!("distributive={} modular={}", laws.distributive, laws.modular)))
        });
        r.run(format!("induced-identity-law-{}", radical_id(kind)), || {
            Ok(expect(induced_identity_law(s, kind)?, String::new))
        });
    }
    r.run("principal-k-radical-laws", || {
        let laws = principal_laws(&build_radical_lattice(s, RadicalKind::RidK)?)?;
        Ok(first_failure(laws.witnesses))
    });
    r.run("nucleus-axioms", || {
        let j = nucleus_j(s)?;
        let ok = j.extensive
            && j.idempotent
            && j.meet_preserving
            && j.fixed_points_match
            && j.bottom_fixed
            && j.corestriction_onto;
        Ok(expect(ok, || {
            format!(
                "fixed_points_match={} bottom_fixed={} corestriction_onto={}",
                j.fixed_points_match, j.bottom_fixed, j.corestriction_onto
            )
        }))
    });
    r.run("frame-points-match-spectrum", || {
        let rid = build_radical_lattice(s, RadicalKind::Rid)?;
        let fp = frame_points(&rid.lattice)?;
        let spec = spectrum(s, PrimeKind::Prime)?;
        let map: Option<Vec<usize>> = fp.points.iter().map(|&p| spec.index_of(rid.set(p))).collect();
        let ok = map.is_some_and(|m| fp.space.homeomorphic_via(&spec.space, &m));
        Ok(expect(ok, || format!("{} lattice points, {} primes", fp.points.len(), spec.primes.len())))
    });
    r.run("joinfit-iff-semisimple", || {
        let joinfit = is_joinfit(&build_radical_lattice(s, RadicalKind::RidK)?.lattice);
        let rep = semisimplicity_report(s)?;
        let semisimple = rep.semisimple;
        Ok(expect(joinfit == semisimple, || {
            format!("joinfit={joinfit} semisimple={semisimple} r-semiring={}", rep.r_semiring)
        }))
    });
    r.run("k-spectrum-density", || {
        let rep = semisimplicity_report(s)?;
        let info = || format!("semisimple={} r-semiring={} dense={}", rep.semisimple, rep.r_semiring, rep.k_dense);
        if rep.semisimple && rep.r_semiring {
            Ok(expect(rep.k_dense, info))
        } else {
            Ok(Outcome::Reported(info()))
        }
    });
}

fn support_checks(r: &mut Recorder, s: &Arc<FiniteSemiring>) {
    let ret = match reticulation(s) {
        Ok(ret) => ret,
        Err(e) => {
            r.run("support-axioms", || Err(e));
            return;
        }
    };
    let d = &ret.support;
    r.run("support-axioms", || Ok(first_failure(check_support(d, SupportVariant::Plain)?.witnesses)));
    r.run("support-properties", || Ok(first_failure(support_properties(d).witnesses)));
    r.run("spectrum-homeomorphism", || spec_homeo(d).map(|_| Outcome::Pass));
    r.run("ideal-frame-isomorphism", || ideal_frame_iso(d).map(|_| Outcome::Pass));
    r.run("boolean-transfer", || {
        let b = boolean_structures(d)?;
        let ok = b.isomorphism && b.complements_unique && b.comp_is_boolean_ring && b.lattice_is_boolean_ring;
        Ok(expect(ok, || b.witness.clone().unwrap_or_else(|| "boolean structures disagree".into())))
    });
    r.run("zero-dimensional-trio", || {
        let z = zdc_report(&ret)?;
        Ok(expect(z.trio_agrees, || {
            format!("stone={} boolean={} all-primes-maximal={}", z.stone, z.boolean, z.all_primes_maximal)
        }))
    });
    r.run("zero-dimensional-findings", || {
        let z = zdc_report(&ret)?;
        Ok(Outcome::Reported(if z.findings.is_empty() { "none".into() } else { z.findings.join("; ") }))
    });
    r.run("support-uniqueness", || {
        let rid = build_radical_lattice(s, RadicalKind::Rid)?;
        let other = principal_support(&rid);
        let there = support_factorization(d, &other);
        let back = support_factorization(&other, d);
        Ok(expect(there.is_some() && back.is_some(), || "no isomorphism over the semiring".into()))
    });
    r.run("strong-support", || {
        let l = l_support_report(d)?;
        if l.support.holds {
            Ok(expect(l.preimages_strong && l.strong_spectrum_homeomorphic, || {
                format!("preimages_strong={} homeomorphic={}", l.preimages_strong, l.strong_spectrum_homeomorphic)
            }))
        } else {
            Ok(Outcome::Reported("reticulation is not a strong support".into()))
        }
    });
}

fn quantale_checks(r: &mut Recorder, s: &Arc<FiniteSemiring>) {
    r.run("zar-correspondence", || Ok(expect(zar_correspondence(s)?, || "Zar(RId_k) is not Spec_k".into())));
    r.run("rid-k-quantale", || {
        let (_, sr) = ridk_semiring(s)?;
        let q = idk_quantale(&Arc::new(sr))?;
        let f = q.quantale.flags;
        Ok(expect(f.is_quantale() && f.unitally_bounded, || format!("{f:?}")))
    });
    if s.flags().additively_idempotent {
        r.run("principal-k-ideal-laws", || Ok(first_failure(principal_k_laws(s)?.witnesses)));
        r.run("k-ideal-quantale", || {
            let q = idk_quantale(s)?;
            let f = q.quantale.flags;
            let u = quantale_as_semiring(&q.quantale, "u")?;
            Ok(expect(f.is_quantale() && f.unitally_bounded && u.is_complete_idealic(), || format!("{f:?}")))
        });
    }
}

fn nonunital_checks(r: &mut Recorder, s: &Arc<FiniteSemiring>) {
    r.run("k-ideal-lattice-shape", || {
        let l = build_radical_lattice(s, RadicalKind::IdK)?;
        let laws = lattice_laws(&l.lattice);
        let n5: Vec<String> = n5_witnesses(&l.lattice)
            .iter()
            .map(|w| w.iter().map(|&x| l.lattice.labels[x].clone()).collect::<Vec<_>>().join(" "))
            .collect();
        Ok(Outcome::Reported(format!(
            "size={} distributive={} modular={} n5=[{}]",
            l.lattice.len(),
            laws.distributive,
            laws.modular,
            n5.join("; ")
        )))
    });
}

fn hom_checks(r: &mut Recorder, h: &NamedHom) {
    let f = &h.hom;
    let id = |what: &str| format!("{what}[{}]", h.name);
    for kind in PrimeKind::ALL {
        r.run(id(&format!("spec-map-{}", kind_id(kind))), || {
            let m = spec_map(f, kind)?;
            Ok(expect(m.continuous && m.basic_open_law, || {
                format!("continuous={} basic={}", m.continuous, m.basic_open_law)
            }))
        });
    }
    for kind in [RadicalKind::Rid, RadicalKind::RidK] {
        r.run(id(&format!("induced-map-{}", radical_id(kind))), || induced_map(f, kind).map(|_| Outcome::Pass));
    }
    r.run(id("naturality"), || {
        Ok(match naturality_check(f)? {
            None => Outcome::Pass,
            Some(w) => Outcome::Fail(w),
        })
    });
    r.run(id("support-functor"), || {
        let (rs, rt) = (reticulation(f.source())?, reticulation(f.target())?);
        support_functor_action(f, &rs, &rt).map(|_| Outcome::Pass)
    });
    r.run(id("induced-map-profile"), || {
        let p = hom_profile(&induced_map(f, RadicalKind::RidK)?.map);
        let (sur, inj) = (f.is_surjective(), f.is_injective());
        let ok = (!sur || p.onto) && (!inj || p.dense) && (!(sur && inj) || p.codense);
        Ok(expect(ok, || {
            format!("surjective={sur} injective={inj} onto={} dense={} codense={}", p.onto, p.dense, p.codense)
        }))
    });
}

fn pair_checks(r: &mut Recorder, f: &NamedHom, g: &NamedHom) {
    let id = |what: &str| format!("{what}[{},{}]", f.name, g.name);
    for kind in PrimeKind::ALL {
        r.run(id(&format!("spec-functor-law-{}", kind_id(kind))), || {
            Ok(expect(spec_functor_law(&f.hom, &g.hom, kind)?, String::new))
        });
    }
    for kind in [RadicalKind::Rid, RadicalKind::RidK] {
        r.run(id(&format!("induced-composition-law-{}", radical_id(kind))), || {
            Ok(expect(induced_composition_law(&f.hom, &g.hom, kind)?, String::new))
        });
    }
}

fn adjunction_checks(r: &mut Recorder, s: &Arc<FiniteSemiring>, targets: &[Arc<FiniteSemiring>]) {
    for t in targets {
        r.run(format!("adjunction[{}]", t.name()), || {
            let q = idk_quantale(t)?.quantale;
            let hb = hom_bijection(s, &q)?;
            if !hb.bijective {
                return Ok(Outcome::Fail(format!(
                    "{} quantale maps vs {} homs",
                    hb.quantale_morphisms, hb.semiring_homs
                )));
            }
            let uq = Arc::new(quantale_as_semiring(&q, &format!("U(Id_k({}))", t.name()))?);
            for f in enumerate_homs(s, &uq) {
                let rep = adjunction_check(s, &q, &f)?;
                if !rep.holds {
                    return Ok(Outcome::Fail(format!("{rep:?}")));
                }
            }
            Ok(Outcome::Pass)
        });
    }
}

fn quantale_source(s: &FiniteSemiring) -> bool {
    s.flags().additively_idempotent && s.unit().is_some()
}

/// All checks whose subject is `s`: its own invariants, the homs it
/// sources, composable pairs starting there, and adjunction instances.
pub fn run_member(s: &Arc<FiniteSemiring>, corpus: &Corpus, options: SuiteOptions) -> SuiteReport {
    let mut r = Recorder { options, records: Vec::new() };
    ideal_checks(&mut r, s);
    if s.unit().is_some() {
        radical_checks(&mut r, s);
        frame_checks(&mut r, s);
        support_checks(&mut r, s);
        quantale_checks(&mut r, s);
    } else {
        nonunital_checks(&mut r, s);
    }
    let own: Vec<&NamedHom> = corpus.homs.iter().filter(|h| h.hom.source().name() == s.name()).collect();
    for h in &own {
        hom_checks(&mut r, h);
    }
    for f in &own {
        for g in corpus.homs.iter().filter(|g| g.hom.source().name() == f.hom.target().name()) {
            pair_checks(&mut r, f, g);
        }
    }
    if s.is_complete_idealic() && s.unit().is_some() && s.size() <= Bounds::current().hom_source {
        let targets: Vec<Arc<FiniteSemiring>> = corpus.members.iter().filter(|t| quantale_source(t)).cloned().collect();
        adjunction_checks(&mut r, s, &targets);
    }
    SuiteReport { semiring: s.name().to_string(), checks: r.records }
}

pub fn run_suite(corpus: &Corpus, options: SuiteOptions) -> CorpusReport {
    let mut reports: Vec<SuiteReport> = corpus.members.par_iter().map(|s| run_member(s, corpus, options)).collect();
    reports.sort_by(|a, b| a.semiring.cmp(&b.semiring));
    let all = reports.iter().flat_map(|r| r.checks.iter());
    let count = |v: Verdict| all.clone().filter(|c| c.verdict == v).count();
    let summary = Summary {
        members: reports.len(),
        homs: corpus.homs.len(),
        checks: all.clone().count(),
        passed: count(Verdict::Pass),
        failed: count(Verdict::Fail),
        reported: count(Verdict::Reported),
    };
    let excluded = corpus.excluded.iter().map(ExcludedRecord::from).collect();
    CorpusReport { summary, excluded, reports }
}
