//! The built-in corpus: semirings, a fixed family of homs among them, and
//! one deliberately broken document.

use std::collections::BTreeSet;
use std::fs;
use std::path::Path;
use std::sync::Arc;

use rigframe::hom::{enumerate_homs, validate_hom, SemiringHom};
use rigframe::semiring::{
    boolean, chain, dist_lattice_from_order, pentagon, product, saturating_nat, validate_semiring, zmod,
    FiniteSemiring, RawTables,
};

use crate::document::{
    emit_document, emit_hom_document, parse_document, parse_hom_document, HomDocument, SemiringDocument,
};
use crate::CliError;

#[derive(Debug, Clone)]
pub struct NamedHom {
    pub name: String,
    pub hom: SemiringHom,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Excluded {
    pub name: String,
    pub reason: String,
}

#[derive(Debug, Clone, Default)]
pub struct Corpus {
    pub members: Vec<Arc<FiniteSemiring>>,
    pub homs: Vec<NamedHom>,
    /// documents that fail validation, kept only so they can be written out
    pub faulty: Vec<SemiringDocument>,
    pub excluded: Vec<Excluded>,
}

impl Corpus {
    pub fn member(&self, name: &str) -> Option<&Arc<FiniteSemiring>> {
        self.members.iter().find(|m| m.name() == name)
    }
}

/// Bounded distributive lattices with 2..=max elements, built as the
/// down-set lattices of posets, one per isomorphism class.
pub fn distributive_lattices(max: usize) -> Vec<Vec<Vec<bool>>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for k in 1..max {
        let pairs: Vec<(usize, usize)> = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect();
        for mask in 0u32..1 << pairs.len() {
            let rel = |i: usize, j: usize| {
                i == j || pairs.iter().position(|&p| p == (i, j)).is_some_and(|b| mask >> b & 1 == 1)
            };
            let transitive = (0..k).all(|a| (0..k).all(|b| (0..k).all(|c| !(rel(a, b) && rel(b, c)) || rel(a, c))));
            if !transitive {
                continue;
            }
            let downsets: Vec<u32> = (0u32..1 << k)
                .filter(|&d| (0..k).all(|j| d >> j & 1 == 0 || (0..k).all(|i| !rel(i, j) || d >> i & 1 == 1)))
                .collect();
            if downsets.len() > max {
                continue;
            }
            let leq: Vec<Vec<bool>> =
                downsets.iter().map(|&a| downsets.iter().map(|&b| a & !b == 0).collect()).collect();
            if seen.insert(canonical(&leq)) {
                out.push(leq);
            }
        }
    }
    out.sort_by_key(|l| (l.len(), canonical(l)));
    out
}

fn canonical(leq: &[Vec<bool>]) -> Vec<bool> {
    let n = leq.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<bool>> = None;
    loop {
        let form: Vec<bool> =
            (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).map(|(a, b)| leq[perm[a]][perm[b]]).collect();
        if best.as_ref().is_none_or(|b| form < *b) {
            best = Some(form);
        }
        // next permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).expect("successor exists");
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
    best.unwrap_or_default()
}

fn is_chain(leq: &[Vec<bool>]) -> bool {
    (0..leq.len()).all(|a| (0..leq.len()).all(|b| leq[a][b] || leq[b][a]))
}

fn ideals_of_z4() -> FiniteSemiring {
    let names = vec!["(0)".to_string(), "(2)".to_string(), "(1)".to_string()];
    let add = (0..3).map(|a| (0..3).map(|b: usize| a.max(b)).collect()).collect();
    let mul = vec![vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 2]];
    validate_semiring("ideals-z4", RawTables { names, add, mul, zero: 0, unit: Some(2) })
        .expect("ideal semiring of Z/4")
}

fn seeded_fault() -> SemiringDocument {
    let mut doc = SemiringDocument::from_semiring(&boolean());
    doc.name = "seeded-fault".into();
    doc.mul[1][1] = "0".into();
    doc
}

const PRODUCT_FACTORS: [&str; 7] =
    ["boolean", "chain-3", "chain-4", "saturating-nat-2", "saturating-nat-3", "z4", "z6"];

const HOM_PAIRS: [(&str, &str); 14] = [
    ("boolean", "boolean"),
    ("boolean", "chain-3"),
    ("chain-3", "boolean"),
    ("chain-3", "chain-3"),
    ("chain-4", "chain-3"),
    ("boolean-x-boolean", "boolean"),
    ("boolean", "boolean-x-boolean"),
    ("boolean-x-chain-3", "chain-3"),
    ("saturating-nat-2", "boolean"),
    ("saturating-nat-3", "saturating-nat-2"),
    ("saturating-nat-2", "saturating-nat-2"),
    ("ideals-z4", "boolean"),
    ("z4", "z4"),
    ("boolean-x-z4", "z4"),
];

pub fn builtin() -> Corpus {
    let mut members: Vec<FiniteSemiring> = vec![boolean()];
    for n in 2..=6 {
        members.push(chain(n).expect("chain").renamed(&format!("chain-{n}")));
    }
    let mut counts = [0usize; 7];
    for leq in distributive_lattices(6) {
        if is_chain(&leq) {
            continue;
        }
        let n = leq.len();
        counts[n] += 1;
        let names = (0..n).map(|i| format!("x{i}")).collect();
        members.push(
            dist_lattice_from_order(&format!("dist-lattice-{n}-{}", counts[n]), names, &leq).expect("distributive"),
        );
    }
    for n in 2..=6 {
        members.push(saturating_nat(n).expect("saturating").renamed(&format!("saturating-nat-{n}")));
    }
    members.push(zmod(4).expect("z4").renamed("z4"));
    members.push(zmod(6).expect("z6").renamed("z6"));
    members.push(pentagon().renamed("pentagon"));
    members.push(ideals_of_z4());
    let find = |ms: &[FiniteSemiring], name: &str| ms.iter().find(|m| m.name() == name).cloned().expect("factor");
    for (i, a) in PRODUCT_FACTORS.iter().enumerate() {
        for b in &PRODUCT_FACTORS[i..] {
            let (s, t) = (find(&members, a), find(&members, b));
            if s.size() * t.size() <= 16 {
                members.push(product(&s, &t).expect("product").renamed(&format!("{a}-x-{b}")));
            }
        }
    }
    let members: Vec<Arc<FiniteSemiring>> = members.into_iter().map(Arc::new).collect();
    let mut corpus = Corpus { members, homs: vec![], faulty: vec![seeded_fault()], excluded: vec![] };
    for (a, b) in HOM_PAIRS {
        let (s, t) = (corpus.member(a).expect("hom source").clone(), corpus.member(b).expect("hom target").clone());
        for (k, h) in enumerate_homs(&s, &t).into_iter().enumerate() {
            corpus.homs.push(NamedHom { name: format!("{a}-to-{b}-{}", k + 1), hom: h });
        }
    }
    corpus
}

pub fn write_corpus(corpus: &Corpus, dir: &Path) -> Result<usize, CliError> {
    fs::create_dir_all(dir.join("homs"))?;
    let mut written = 0;
    let docs = corpus.members.iter().map(|m| SemiringDocument::from_semiring(m)).chain(corpus.faulty.iter().cloned());
    for doc in docs {
        fs::write(dir.join(format!("{}.toml", doc.name)), emit_document(&doc))?;
        written += 1;
    }
    for h in &corpus.homs {
        let doc = HomDocument {
            name: h.name.clone(),
            source: h.hom.source().name().to_string(),
            target: h.hom.target().name().to_string(),
            map: h.hom.map().iter().map(|&i| h.hom.target().label(i).to_string()).collect(),
        };
        fs::write(dir.join("homs").join(format!("{}.toml", h.name)), emit_hom_document(&doc))?;
        written += 1;
    }
    Ok(written)
}

fn toml_files(dir: &Path) -> Result<Vec<std::path::PathBuf>, CliError> {
    if !dir.is_dir() {
        return Ok(vec![]);
    }
    let mut files: Vec<_> = fs::read_dir(dir)?
        .map(|e| e.map(|e| e.path()))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .filter(|p| p.extension().is_some_and(|e| e == "toml"))
        .collect();
    files.sort();
    Ok(files)
}

/// Load every `*.toml` semiring in `dir` and every hom in `dir/homs`.
/// Documents that parse but fail validation are excluded, not fatal.
pub fn load_corpus(dir: &Path) -> Result<Corpus, CliError> {
    let mut corpus = Corpus::default();
    for path in toml_files(dir)? {
        let text = fs::read_to_string(&path)?;
        let doc = parse_document(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
        match doc.to_semiring() {
            Ok(s) => corpus.members.push(Arc::new(s)),
            Err(e) => corpus.excluded.push(Excluded { name: doc.name.clone(), reason: e.to_string() }),
        }
    }
    for path in toml_files(&dir.join("homs"))? {
        let text = fs::read_to_string(&path)?;
        let doc = parse_hom_document(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
        let (Some(s), Some(t)) = (corpus.member(&doc.source).cloned(), corpus.member(&doc.target).cloned()) else {
            corpus.excluded.push(Excluded { name: doc.name, reason: "source or target not in corpus".into() });
            continue;
        };
        let map: Option<Vec<usize>> = doc.map.iter().map(|l| t.index_of(l)).collect();
        let checked = match map {
            Some(m) if m.len() == s.size() => validate_hom(&s, &t, m).map_err(|e| e.to_string()),
            _ => Err("map does not match the source and target labels".to_string()),
        };
        match checked {
            Ok(hom) => corpus.homs.push(NamedHom { name: doc.name, hom }),
            Err(reason) => corpus.excluded.push(Excluded { name: doc.name, reason }),
        }
    }
    Ok(corpus)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_distributive_lattices() {
        let sizes: Vec<usize> = distributive_lattices(6).iter().map(|l| l.len()).collect();
        assert_eq!(sizes, vec![2, 3, 4, 4, 5, 5, 5, 6, 6, 6, 6, 6]);
    }

    #[test]
    fn corpus_is_large_enough() {
        let c = builtin();
        assert!(c.members.len() >= 25);
        assert!(c.homs.len() >= 10);
        let names: BTreeSet<&str> = c.members.iter().map(|m| m.name()).collect();
        assert_eq!(names.len(), c.members.len());
        assert!(c.members.iter().all(|m| m.size() <= 16));
    }
}
