//! Acceptance criteria 1-14, one PASS/FAIL line each. Exits non-zero if
//! any criterion fails.

use std::collections::BTreeSet;
use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rigframe::frames::{build_radical_lattice, RadicalKind};
use rigframe::ideals::{enumerate_ideal_sets, ideal_closure, k_closure_set, IdealKind};
use rigframe::lattice::lattice_laws;
use rigframe::semiring::FiniteSemiring;
use rigframe::spectra::{located_radical_set, radical_set, semisimplicity_report, spectrum, PrimeKind};
use rigframe::support::{boolean_structures, reticulation};
use rigframe::ElemSet;
use rigframe_cli::corpus::builtin;
use rigframe_cli::suite::{run_suite, CorpusReport, SuiteOptions, Verdict};

const SUITE_BUDGET: Duration = Duration::from_secs(300);

struct Criterion {
    number: usize,
    title: &'static str,
    problems: Vec<String>,
    notes: Vec<String>,
}

impl Criterion {
    fn new(number: usize, title: &'static str) -> Criterion {
        Criterion { number, title, problems: Vec::new(), notes: Vec::new() }
    }

    fn require(&mut self, ok: bool, problem: impl FnOnce() -> String) {
        if !ok {
            self.problems.push(problem());
        }
    }
}

/// Every listed check id must be present on each member selected and must
/// not fail; a `reported` verdict marks a hypothesis that does not apply.
fn require_checks(c: &mut Criterion, report: &CorpusReport, members: &[&str], ids: &[&str]) {
    for m in members {
        let Some(r) = report.report(m) else {
            c.problems.push(format!("{m}: no report"));
            continue;
        };
        for id in ids {
            let found: Vec<_> = r.checks.iter().filter(|x| x.id == *id).collect();
            if found.is_empty() {
                c.problems.push(format!("{m}: check {id} missing"));
            }
            for x in found {
                if x.verdict == Verdict::Fail {
                    c.problems.push(format!("{m}: {id}: {}", x.witness.clone().unwrap_or_default()));
                }
            }
        }
    }
}

/// All records in the corpus whose id starts with `prefix[`; returns how many.
fn require_family(c: &mut Criterion, report: &CorpusReport, prefix: &str) -> usize {
    let mut n = 0;
    for r in &report.reports {
        for x in r.checks.iter().filter(|x| x.id.starts_with(&format!("{prefix}["))) {
            n += 1;
            if x.verdict != Verdict::Pass {
                c.problems.push(format!("{}: {}: {}", r.semiring, x.id, x.witness.clone().unwrap_or_default()));
            }
        }
    }
    c.require(n > 0, || format!("no {prefix} records"));
    n
}

/// Prime ideals of the requested kind by exhaustive subset search.
fn oracle_primes(s: &FiniteSemiring, kind: PrimeKind) -> Vec<ElemSet> {
    let n = s.size();
    let one = s.one().unwrap();
    (0u64..1 << n)
        .map(ElemSet::from_bits)
        .filter(|&p| {
            let has = |x| p.contains(x);
            has(s.zero())
                && !has(one)
                && (0..n).all(|a| (0..n).all(|b| !(has(a) && has(b)) || has(s.add(a, b))))
                && (0..n).all(|a| (0..n).all(|r| !has(a) || has(s.mul(a, r))))
                && (0..n).all(|a| (0..n).all(|b| !has(s.mul(a, b)) || has(a) || has(b)))
                && match kind {
                    PrimeKind::Prime => true,
                    PrimeKind::K => (0..n).all(|a| (0..n).all(|b| !(has(a) && has(s.add(a, b))) || has(b))),
                    PrimeKind::Strong => (0..n).all(|a| (0..n).all(|b| !has(s.add(a, b)) || (has(a) && has(b)))),
                }
        })
        .collect()
}

/// Distributivity of the radical-ideal lattice computed straight from
/// sets: meet is intersection, join is the radical of the generated ideal.
fn oracle_distributive(s: &FiniteSemiring, kind: RadicalKind, carrier: &[ElemSet]) -> bool {
    let join = |a: ElemSet, b: ElemSet| {
        let g = ideal_closure(s, a.union(b));
        match kind {
            RadicalKind::Rid => radical_set(s, g),
            _ => located_radical_set(s, g, PrimeKind::K).unwrap(),
        }
    };
    carrier.iter().all(|&a| {
        carrier
            .iter()
            .all(|&b| carrier.iter().all(|&c| a.intersection(join(b, c)) == join(a.intersection(b), a.intersection(c))))
    })
}

fn complemented_idempotents(s: &FiniteSemiring) -> usize {
    let n = s.size();
    let one = s.one().unwrap();
    (0..n).filter(|&e| s.mul(e, e) == e && (0..n).any(|f| s.add(e, f) == one && s.mul(e, f) == s.zero())).count()
}

fn main() {
    let corpus = builtin();
    let started = Instant::now();
    let report = run_suite(&corpus, SuiteOptions::default());
    let suite_time = started.elapsed();
    let unital: Vec<&Arc<FiniteSemiring>> = corpus.members.iter().filter(|m| m.unit().is_some()).collect();
    let unital_names: Vec<&str> = unital.iter().map(|m| m.name()).collect();
    let mut results = Vec::new();

    let mut c = Criterion::new(1, "rid(S) and rid_k(S) are frames on every unital member");
    require_checks(&mut c, &report, &unital_names, &["frame-laws-rid", "frame-laws-rid-k"]);
    for s in &unital {
        for kind in [RadicalKind::Rid, RadicalKind::RidK] {
            let l = build_radical_lattice(s, kind).unwrap();
            let carrier: Vec<ElemSet> = (0..l.lattice.len()).map(|i| l.set(i)).collect();
            c.require(oracle_distributive(s, kind, &carrier), || {
                format!("{}: {} not distributive by direct computation", s.name(), kind.name())
            });
        }
    }
    results.push(c);

    let mut c = Criterion::new(2, "Id_k(pentagon) contains the stated five-ideal N5 and is not modular");
    {
        let pent = corpus.member("pentagon").expect("pentagon member").clone();
        let idk = build_radical_lattice(&pent, RadicalKind::IdK).unwrap();
        let laws = lattice_laws(&idk.lattice);
        let set = |labels: &[&str]| pent.set_from_labels(labels).unwrap();
        let stated = [set(&["0"]), set(&["0", "a"]), set(&["0", "a", "a∨b"]), set(&["0", "c"]), pent.carrier()];
        let sum = set(&["0", "a", "a∨b"]).union(set(&["0", "c"]));
        let literal_sum = ideal_closure(&pent, sum) == set(&["0", "a", "a∨b", "c", "d"]);
        let closure_is_top = k_closure_set(&pent, ideal_closure(&pent, sum)) == pent.carrier();
        let present: Vec<bool> = stated.iter().map(|&x| idk.index_of(x).is_some()).collect();
        let mut line = |name: &str, ok: bool| c.notes.push(format!("{} {name}", if ok { "pass" } else { "fail" }));
        line("is-modular = false", !laws.modular);
        line("{0,a,a∨b} + {0,c} = {0,a,a∨b,c,d}", literal_sum);
        line("k-closure of that sum is S", closure_is_top);
        for (x, ok) in stated.iter().zip(&present) {
            line(&format!("{} is a k-ideal", pent.set_label(*x)), *ok);
        }
        c.require(!laws.modular, || "Id_k(pentagon) reported modular".into());
        c.require(literal_sum && closure_is_top, || "stated join computation does not reproduce".into());
        c.require(present.iter().all(|&p| p), || {
            let missing: Vec<String> =
                stated.iter().zip(&present).filter(|(_, p)| !**p).map(|(x, _)| pent.set_label(*x)).collect();
            format!("stated witness members are not k-ideals: {}", missing.join(", "))
        });
        let witness_indices: BTreeSet<Option<usize>> = stated.iter().map(|&x| idk.index_of(x)).collect();
        let n5_matches = laws.n5.is_some_and(|w| {
            let got: BTreeSet<Option<usize>> = w.iter().map(|&i| Some(i)).collect();
            got == witness_indices
        });
        c.require(n5_matches, || {
            let w = laws.n5.map(|w| w.iter().map(|&i| idk.lattice.labels[i].clone()).collect::<Vec<_>>().join(" "));
            format!("reported N5 witness is {}", w.unwrap_or_else(|| "none".into()))
        });
    }
    results.push(c);

    let mut c = Criterion::new(3, "closure operators and the two k-radical identities hold exhaustively");
    let all_names: Vec<&str> = corpus.members.iter().map(|m| m.name()).collect();
    require_checks(
        &mut c,
        &report,
        &all_names,
        &[
            "closure-operator-laws",
            "closed-under-intersection",
            "k-ideals-are-closure-fixed-points",
            "product-within-intersection",
        ],
    );
    require_checks(
        &mut c,
        &report,
        &unital_names,
        &["radical-is-meet-of-primes", "k-radical-ignores-k-closure", "k-radical-of-product-is-meet"],
    );
    for s in &unital {
        let kp = oracle_primes(s, PrimeKind::K);
        for i in enumerate_ideal_sets(s, IdealKind::All).unwrap() {
            let oracle = kp.iter().filter(|p| i.is_subset(**p)).fold(s.carrier(), |acc, p| acc.intersection(*p));
            c.require(located_radical_set(s, i, PrimeKind::K).unwrap() == oracle, || {
                format!("{}: k-radical of {}", s.name(), s.set_label(i))
            });
        }
    }
    results.push(c);

    let mut c = Criterion::new(4, "the nucleus onto k-radical ideals on every unital member");
    require_checks(&mut c, &report, &unital_names, &["nucleus-axioms"]);
    results.push(c);

    let mut c = Criterion::new(5, "induced maps are functorial and natural on all homs and composable pairs");
    require_checks(&mut c, &report, &unital_names, &["induced-identity-law-rid", "induced-identity-law-rid-k"]);
    let nat = require_family(&mut c, &report, "naturality");
    c.require(nat == corpus.homs.len(), || format!("{nat} naturality records for {} homs", corpus.homs.len()));
    for fam in [
        "induced-map-rid",
        "induced-map-rid-k",
        "induced-composition-law-rid",
        "induced-composition-law-rid-k",
        "spec-functor-law-prime",
    ] {
        require_family(&mut c, &report, fam);
    }
    results.push(c);

    let mut c = Criterion::new(6, "four-way cover equivalence for all (a, A) with |A| <= 3");
    require_checks(&mut c, &report, &unital_names, &["cover-equivalence"]);
    results.push(c);

    let mut c = Criterion::new(7, "prime, k- and strong spectra are spectral spaces");
    require_checks(
        &mut c,
        &report,
        &unital_names,
        &["spectral-space-prime", "spectral-space-k", "spectral-space-strong"],
    );
    results.push(c);

    let mut c = Criterion::new(8, "reticulation is a support with Spec and RId correspondences");
    require_checks(
        &mut c,
        &report,
        &unital_names,
        &["support-axioms", "support-properties", "spectrum-homeomorphism", "ideal-frame-isomorphism"],
    );
    results.push(c);

    let mut c = Criterion::new(9, "Comp(S) and the Boolean center of L_S are isomorphic rings");
    require_checks(&mut c, &report, &unital_names, &["boolean-transfer"]);
    for s in &unital {
        let b = boolean_structures(&reticulation(s).unwrap().support).unwrap();
        c.require(b.comp.len() == complemented_idempotents(s), || {
            format!("{}: |Comp| = {} by scan", s.name(), complemented_idempotents(s))
        });
    }
    let square = corpus.member("boolean-x-boolean").expect("boolean square");
    let comp = boolean_structures(&reticulation(square).unwrap().support).unwrap().comp.len();
    c.require(comp == 4, || format!("|Comp(boolean x boolean)| = {comp}"));
    results.push(c);

    let mut c = Criterion::new(10, "Stone spectrum, Boolean L_S and all-primes-maximal agree");
    require_checks(&mut c, &report, &unital_names, &["zero-dimensional-trio"]);
    results.push(c);

    let mut c = Criterion::new(11, "induced-map profile of homs, and joinfit rid_k iff semisimple");
    require_family(&mut c, &report, "induced-map-profile");
    require_checks(&mut c, &report, &unital_names, &["joinfit-iff-semisimple"]);
    results.push(c);

    let mut c = Criterion::new(12, "k-ideal quantales, principal k-ideal laws, Zariski spaces and the adjunction");
    require_checks(&mut c, &report, &unital_names, &["zar-correspondence", "rid-k-quantale"]);
    let idempotent: Vec<&str> = unital.iter().filter(|m| m.flags().additively_idempotent).map(|m| m.name()).collect();
    c.require(!idempotent.is_empty(), || "no additively idempotent members".into());
    require_checks(&mut c, &report, &idempotent, &["k-ideal-quantale", "principal-k-ideal-laws"]);
    let adj = require_family(&mut c, &report, "adjunction");
    c.require(adj >= 10, || format!("only {adj} adjunction instances"));
    results.push(c);

    let mut c = Criterion::new(13, "k-spectra of semisimple r-semirings are dense; saturating-nat(2)");
    require_checks(&mut c, &report, &unital_names, &["k-spectrum-density"]);
    for s in &unital {
        let r = semisimplicity_report(s).unwrap();
        if r.semisimple && r.r_semiring {
            c.require(r.k_dense, || format!("{}: k-spectrum not dense", s.name()));
        }
    }
    {
        let sn = corpus.member("saturating-nat-2").expect("saturating-nat-2");
        let r = semisimplicity_report(sn).unwrap();
        c.require(!r.r_semiring, || "saturating-nat-2 reported as an r-semiring".into());
        let (p, k) = (oracle_primes(sn, PrimeKind::Prime).len(), oracle_primes(sn, PrimeKind::K).len());
        c.require(p == 2 && k == 1, || format!("oracle finds {p} primes and {k} k-primes"));
        let (sp, sk) = (spectrum(sn, PrimeKind::Prime).unwrap(), spectrum(sn, PrimeKind::K).unwrap());
        c.require(sp.primes.len() == p && sk.primes.len() == k, || {
            format!("library finds {} primes and {} k-primes", sp.primes.len(), sk.primes.len())
        });
    }
    results.push(c);

    let mut c = Criterion::new(14, "two consecutive check runs give byte-identical reports");
    {
        c.require(suite_time < SUITE_BUDGET, || format!("suite took {suite_time:?}"));
        let dir = tempfile::tempdir().unwrap();
        let corpus_dir = dir.path().join("corpus");
        let bin = env!("CARGO_BIN_EXE_rigframe");
        let st = Command::new(bin).arg("corpus").arg(&corpus_dir).status().unwrap();
        c.require(st.success(), || "corpus command failed".into());
        let mut outputs = Vec::new();
        for k in 0..2 {
            let out = dir.path().join(format!("report-{k}.json"));
            let o = Command::new(bin).arg("check").arg(&corpus_dir).arg("--out").arg(&out).output().unwrap();
            c.require(matches!(o.status.code(), Some(0 | 1)), || format!("check exited with {:?}", o.status.code()));
            outputs.push(std::fs::read(&out).unwrap_or_default());
        }
        c.require(!outputs[0].is_empty() && outputs[0] == outputs[1], || "reports differ".into());
    }
    results.push(c);

    println!(
        "suite: {} members, {} homs, {} checks in {:.2}s",
        report.summary.members,
        report.summary.homs,
        report.summary.checks,
        suite_time.as_secs_f64()
    );
    let mut failed = 0;
    for c in &results {
        let ok = c.problems.is_empty();
        failed += usize::from(!ok);
        println!("{} criterion {:>2}: {}", if ok { "PASS" } else { "FAIL" }, c.number, c.title);
        for n in &c.notes {
            println!("      {n}");
        }
        for p in c.problems.iter().take(8) {
            println!("      {p}");
        }
        if c.problems.len() > 8 {
            println!("      ... {} more", c.problems.len() - 8);
        }
    }
    println!("{} of {} criteria pass", results.len() - failed, results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
