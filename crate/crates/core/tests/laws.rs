use std::sync::Arc;

use proptest::prelude::*;
use rigframe::hom::{enumerate_homs, validate_hom};
use rigframe::ideals::{
    all_ideals, enumerate_ideal_sets, ideal_closure, is_k_ideal_set, is_strong_set, k_closure_set, product_set,
    strong_closure_set, IdealKind,
};
use rigframe::semiring::{
    boolean, chain, pentagon, product, saturating_nat, validate_semiring, zmod, FiniteSemiring, RawTables,
};
use rigframe::spectra::{located_radical_set, radical_set, spectrum, PrimeKind};
use rigframe::ElemSet;

fn family() -> Vec<Arc<FiniteSemiring>> {
    let b = boolean();
    let c3 = chain(3).unwrap();
    let n2 = saturating_nat(2).unwrap();
    vec![
        Arc::new(b.clone()),
        Arc::new(c3.clone()),
        Arc::new(chain(4).unwrap()),
        Arc::new(n2.clone()),
        Arc::new(saturating_nat(3).unwrap()),
        Arc::new(zmod(4).unwrap()),
        Arc::new(zmod(6).unwrap()),
        Arc::new(pentagon()),
        Arc::new(product(&b, &b).unwrap()),
        Arc::new(product(&c3, &n2).unwrap()),
        Arc::new(product(&b, &zmod(4).unwrap()).unwrap()),
    ]
}

fn unital() -> Vec<Arc<FiniteSemiring>> {
    family().into_iter().filter(|s| s.unit().is_some()).collect()
}

fn pick(ix: usize, bits: u64) -> (Arc<FiniteSemiring>, ElemSet) {
    let fam = family();
    let s = fam[ix % fam.len()].clone();
    let set = ElemSet::from_bits(bits).intersection(s.carrier());
    (s, set)
}

fn ideal_of(s: &FiniteSemiring, bits: u64) -> ElemSet {
    ideal_closure(s, ElemSet::from_bits(bits).intersection(s.carrier()))
}

/// Primes found by brute force over every subset.
fn brute_primes(s: &FiniteSemiring, kind: PrimeKind) -> Vec<ElemSet> {
    let n = s.size();
    let one = s.one().unwrap();
    (0u64..1 << n)
        .map(ElemSet::from_bits)
        .filter(|&p| {
            let ideal = p.contains(s.zero())
                && (0..n).all(|a| (0..n).all(|b| !(p.contains(a) && p.contains(b)) || p.contains(s.add(a, b))))
                && (0..n).all(|a| (0..n).all(|r| !p.contains(a) || p.contains(s.mul(a, r))));
            let prime = (0..n).all(|a| (0..n).all(|b| !p.contains(s.mul(a, b)) || p.contains(a) || p.contains(b)));
            let k = (0..n).all(|a| (0..n).all(|b| !(p.contains(a) && p.contains(s.add(a, b))) || p.contains(b)));
            let strong = (0..n).all(|a| (0..n).all(|b| !p.contains(s.add(a, b)) || (p.contains(a) && p.contains(b))));
            ideal
                && !p.contains(one)
                && prime
                && match kind {
                    PrimeKind::Prime => true,
                    PrimeKind::K => k,
                    PrimeKind::Strong => strong,
                }
        })
        .collect()
}

fn meet_over(s: &FiniteSemiring, primes: &[ElemSet], i: ElemSet) -> ElemSet {
    primes.iter().filter(|p| i.is_subset(**p)).fold(s.carrier(), |acc, p| acc.intersection(*p))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn closures_are_closure_operators(ix in 0usize..11, a in any::<u64>(), b in any::<u64>()) {
        let (s, _) = pick(ix, 0);
        let (i, j) = (ideal_of(&s, a), ideal_of(&s, b));
        let ij = ideal_closure(&s, i.union(j));
        for close in [k_closure_set as fn(&FiniteSemiring, ElemSet) -> ElemSet, strong_closure_set] {
            let ci = close(&s, i);
            prop_assert!(i.is_subset(ci));
            prop_assert_eq!(close(&s, ci), ci);
            prop_assert!(ci.is_subset(close(&s, ij)));
        }
        prop_assert!(is_k_ideal_set(&s, k_closure_set(&s, i)));
        prop_assert!(is_strong_set(&s, strong_closure_set(&s, i)));
    }

    #[test]
    fn intersections_keep_kind(ix in 0usize..11, a in any::<u64>(), b in any::<u64>()) {
        let (s, _) = pick(ix, 0);
        let (i, j) = (k_closure_set(&s, ideal_of(&s, a)), k_closure_set(&s, ideal_of(&s, b)));
        prop_assert!(is_k_ideal_set(&s, i.intersection(j)));
        let (i, j) = (strong_closure_set(&s, ideal_of(&s, a)), strong_closure_set(&s, ideal_of(&s, b)));
        prop_assert!(is_strong_set(&s, i.intersection(j)));
    }

    #[test]
    fn product_inside_intersection(ix in 0usize..11, a in any::<u64>(), b in any::<u64>()) {
        let (s, _) = pick(ix, 0);
        let (i, j) = (ideal_of(&s, a), ideal_of(&s, b));
        prop_assert!(product_set(&s, i, j).is_subset(i.intersection(j)));
    }

    #[test]
    fn generated_ideal_is_least(ix in 0usize..11, a in any::<u64>()) {
        let (s, set) = pick(ix, a);
        let g = ideal_closure(&s, set);
        prop_assert!(set.is_subset(g));
        for &i in all_ideals(&s).unwrap() {
            prop_assert_eq!(set.is_subset(i), g.is_subset(i));
        }
    }

    #[test]
    fn random_tables_validate_iff_lawful(n in 1usize..4, cells in proptest::collection::vec(0usize..3, 18)) {
        let add: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| cells[a * n + b] % n).collect()).collect();
        let mul: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| cells[9 + a * n + b] % n).collect()).collect();
        let r = 0..n;
        let all3 = |f: &dyn Fn(usize, usize, usize) -> bool| r.clone().all(|a| r.clone().all(|b| r.clone().all(|c| f(a, b, c))));
        let lawful = all3(&|a, b, _| add[a][b] == add[b][a] && mul[a][b] == mul[b][a])
            && all3(&|a, b, c| add[add[a][b]][c] == add[a][add[b][c]] && mul[mul[a][b]][c] == mul[a][mul[b][c]])
            && all3(&|a, b, c| mul[a][add[b][c]] == add[mul[a][b]][mul[a][c]])
            && r.clone().all(|a| add[0][a] == a && mul[0][a] == 0);
        let names = (0..n).map(|i| format!("e{i}")).collect();
        let raw = RawTables { names, add: add.clone(), mul: mul.clone(), zero: 0, unit: None };
        prop_assert_eq!(validate_semiring("random", raw).is_ok(), lawful);
    }
}

#[test]
fn k_ideals_are_closure_fixed_points() {
    for s in family() {
        let all = enumerate_ideal_sets(&s, IdealKind::All).unwrap();
        let fixed: Vec<ElemSet> = all.iter().copied().filter(|&i| k_closure_set(&s, i) == i).collect();
        assert_eq!(enumerate_ideal_sets(&s, IdealKind::K).unwrap(), fixed, "{}", s.name());
        let strong: Vec<ElemSet> = all.iter().copied().filter(|&i| strong_closure_set(&s, i) == i).collect();
        assert_eq!(enumerate_ideal_sets(&s, IdealKind::Strong).unwrap(), strong, "{}", s.name());
    }
}

#[test]
fn radical_equals_meet_of_primes() {
    for s in unital() {
        let primes = brute_primes(&s, PrimeKind::Prime);
        for &i in all_ideals(&s).unwrap() {
            assert_eq!(radical_set(&s, i), meet_over(&s, &primes, i), "{} at {}", s.name(), s.set_label(i));
            assert_eq!(located_radical_set(&s, i, PrimeKind::Prime).unwrap(), radical_set(&s, i));
        }
    }
}

#[test]
fn k_radical_ignores_k_closure() {
    for s in unital() {
        let kp = brute_primes(&s, PrimeKind::K);
        for &i in all_ideals(&s).unwrap() {
            let r = located_radical_set(&s, i, PrimeKind::K).unwrap();
            assert_eq!(r, meet_over(&s, &kp, i));
            assert_eq!(r, located_radical_set(&s, k_closure_set(&s, i), PrimeKind::K).unwrap());
        }
    }
}

#[test]
fn k_radical_of_product_is_meet() {
    for s in unital() {
        let rads: Vec<ElemSet> = all_ideals(&s)
            .unwrap()
            .iter()
            .copied()
            .filter(|&i| located_radical_set(&s, i, PrimeKind::K).unwrap() == i)
            .collect();
        for &i in &rads {
            for &j in &rads {
                let ij = ideal_closure(&s, product_set(&s, i, j));
                assert_eq!(located_radical_set(&s, ij, PrimeKind::K).unwrap(), i.intersection(j), "{}", s.name());
            }
        }
    }
}

#[test]
fn primes_match_brute_force() {
    for s in unital() {
        for kind in PrimeKind::ALL {
            let sp = spectrum(&s, kind).unwrap();
            let mut want = brute_primes(&s, kind);
            let mut got = sp.primes.clone();
            want.sort_by_key(|p| p.size_key());
            got.sort_by_key(|p| p.size_key());
            assert_eq!(got, want, "{} {}", s.name(), kind.name());
        }
    }
}

#[test]
fn basic_opens_multiply() {
    for s in unital() {
        for kind in PrimeKind::ALL {
            let sp = spectrum(&s, kind).unwrap();
            let n = s.size();
            assert!(sp.basic_open(s.zero()).is_empty());
            assert_eq!(sp.basic_open(s.one().unwrap()), ElemSet::full(sp.primes.len()));
            for a in 0..n {
                for b in 0..n {
                    assert_eq!(sp.basic_open(a).intersection(sp.basic_open(b)), sp.basic_open(s.mul(a, b)));
                }
            }
        }
    }
}

#[test]
fn hom_composites_validate() {
    let fam: Vec<_> = unital().into_iter().filter(|s| s.size() <= 4).collect();
    for a in &fam {
        for b in &fam {
            let fs = enumerate_homs(a, b);
            for c in &fam {
                let gs = enumerate_homs(b, c);
                for f in &fs {
                    for g in &gs {
                        let composite: Vec<usize> = f.map().iter().map(|&x| g.apply(x)).collect();
                        assert!(validate_hom(a, c, composite).is_ok());
                        assert!(f.then(g).is_ok());
                    }
                }
            }
        }
    }
}

#[test]
fn natural_order_is_partial() {
    for s in family().into_iter().filter(|s| s.flags().additively_idempotent) {
        let n = s.size();
        for a in 0..n {
            assert!(s.leq(a, a));
            for b in 0..n {
                if s.leq(a, b) && s.leq(b, a) {
                    assert_eq!(a, b);
                }
                for c in 0..n {
                    if s.leq(a, b) && s.leq(b, c) {
                        assert!(s.leq(a, c));
                    }
                }
            }
        }
        if let Some(one) = s.unit() {
            assert_eq!((0..n).all(|x| s.leq(x, one)), s.flags().idealic);
        }
    }
}
