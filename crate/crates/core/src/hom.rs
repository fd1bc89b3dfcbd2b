use std::sync::Arc;

use crate::bits::ElemSet;
use crate::error::{Error, Result};
use crate::semiring::FiniteSemiring;

/// A validated semiring homomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemiringHom {
    source: Arc<FiniteSemiring>,
    target: Arc<FiniteSemiring>,
    map: Vec<usize>,
}

fn hom_violation(law: &'static str, s: &FiniteSemiring, xs: &[usize]) -> Error {
    Error::HomViolation { law, witness: xs.iter().map(|&x| s.label(x).to_string()).collect() }
}

/// Check that `map` preserves zero, unit (when both sides have one), sums and products.
pub fn validate_hom(
    source: &Arc<FiniteSemiring>,
    target: &Arc<FiniteSemiring>,
    map: Vec<usize>,
) -> Result<SemiringHom> {
    let (s, t) = (source.as_ref(), target.as_ref());
    if map.len() != s.size() {
        return Err(Error::Malformed(format!("hom map has {} entries, source has {}", map.len(), s.size())));
    }
    if let Some(x) = map.iter().position(|&y| y >= t.size()) {
        return Err(Error::Malformed(format!("image of {} out of range", s.label(x))));
    }
    if map[s.zero()] != t.zero() {
        return Err(hom_violation("zero preserved", s, &[s.zero()]));
    }
    if let (Some(u), Some(v)) = (s.unit(), t.unit()) {
        if map[u] != v {
            return Err(hom_violation("unit preserved", s, &[u]));
        }
    }
    for a in 0..s.size() {
        for b in 0..s.size() {
            if map[s.add(a, b)] != t.add(map[a], map[b]) {
                return Err(hom_violation("sum preserved", s, &[a, b]));
            }
            if map[s.mul(a, b)] != t.mul(map[a], map[b]) {
                return Err(hom_violation("product preserved", s, &[a, b]));
            }
        }
    }
    Ok(SemiringHom { source: source.clone(), target: target.clone(), map })
}

impl SemiringHom {
    pub fn identity(s: &Arc<FiniteSemiring>) -> SemiringHom {
        SemiringHom { source: s.clone(), target: s.clone(), map: (0..s.size()).collect() }
    }

    pub fn source(&self) -> &Arc<FiniteSemiring> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteSemiring> {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn image(&self, set: ElemSet) -> ElemSet {
        set.iter().map(|x| self.map[x]).collect()
    }

    pub fn preimage(&self, set: ElemSet) -> ElemSet {
        (0..self.map.len()).filter(|&x| set.contains(self.map[x])).collect()
    }

    pub fn is_injective(&self) -> bool {
        self.image(self.source.carrier()).len() == self.source.size()
    }

    pub fn is_surjective(&self) -> bool {
        self.image(self.source.carrier()) == self.target.carrier()
    }

    /// `then ∘ self`; the result is revalidated.
    pub fn then(&self, then: &SemiringHom) -> Result<SemiringHom> {
        if *self.target != *then.source {
            return Err(Error::MismatchedParent);
        }
        let map = self.map.iter().map(|&x| then.map[x]).collect();
        validate_hom(&self.source, &then.target, map)
    }
}

/// Every semiring hom `source → target`, found by backtracking over the
/// table constraints. Order is lexicographic in the image vector.
pub fn enumerate_homs(source: &Arc<FiniteSemiring>, target: &Arc<FiniteSemiring>) -> Vec<SemiringHom> {
    let mut out = Vec::new();
    for_each_table_map(
        source.size(),
        target.size(),
        &|a, b| source.add(a, b),
        &|a, b| source.mul(a, b),
        &|a, b| target.add(a, b),
        &|a, b| target.mul(a, b),
        &fixed_points(source, target),
        &mut |m| out.push(SemiringHom { source: source.clone(), target: target.clone(), map: m.to_vec() }),
    );
    out
}

fn fixed_points(source: &FiniteSemiring, target: &FiniteSemiring) -> Vec<(usize, usize)> {
    let mut fixed = vec![(source.zero(), target.zero())];
    if let (Some(u), Some(v)) = (source.unit(), target.unit()) {
        fixed.push((u, v));
    }
    fixed
}

/// Enumerate maps `{0..n} → {0..m}` respecting two binary operations on each
/// side and a list of pinned values. Used for semiring homs and quantale maps.
#[allow(clippy::too_many_arguments)]
pub fn for_each_table_map(
    n: usize,
    m: usize,
    op1: &dyn Fn(usize, usize) -> usize,
    op2: &dyn Fn(usize, usize) -> usize,
    top1: &dyn Fn(usize, usize) -> usize,
    top2: &dyn Fn(usize, usize) -> usize,
    pinned: &[(usize, usize)],
    visit: &mut dyn FnMut(&[usize]),
) {
    const UNSET: usize = usize::MAX;
    let mut map = vec![UNSET; n];
    for &(x, y) in pinned {
        if map[x] != UNSET && map[x] != y {
            return;
        }
        map[x] = y;
    }
    let consistent = |map: &[usize]| {
        for a in 0..n {
            if map[a] == UNSET {
                continue;
            }
            for b in a..n {
                if map[b] == UNSET {
                    continue;
                }
                let (s, p) = (op1(a, b), op2(a, b));
                if map[s] != UNSET && map[s] != top1(map[a], map[b]) {
                    return false;
                }
                if map[p] != UNSET && map[p] != top2(map[a], map[b]) {
                    return false;
                }
            }
        }
        true
    };
    if !consistent(&map) {
        return;
    }
    fn go(
        i: usize,
        n: usize,
        m: usize,
        map: &mut Vec<usize>,
        consistent: &dyn Fn(&[usize]) -> bool,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if i == n {
            visit(map);
            return;
        }
        if map[i] != usize::MAX {
            go(i + 1, n, m, map, consistent, visit);
            return;
        }
        for y in 0..m {
            map[i] = y;
            if consistent(map) {
                go(i + 1, n, m, map, consistent, visit);
            }
        }
        map[i] = usize::MAX;
    }
    go(0, n, m, &mut map, &consistent, visit);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::{boolean, chain, product};

    #[test]
    fn quotient_and_bad_inclusion() {
        let c3 = Arc::new(chain(3).unwrap());
        let b = Arc::new(boolean());
        assert!(validate_hom(&c3, &b, vec![0, 1, 1]).is_ok());
        assert!(matches!(validate_hom(&b, &c3, vec![0, 1]), Err(Error::HomViolation { law: "unit preserved", .. })));
    }

    #[test]
    fn enumeration_matches_brute_force() {
        let c3 = Arc::new(chain(3).unwrap());
        let bb = Arc::new(product(&boolean(), &boolean()).unwrap());
        for (s, t) in [(&c3, &bb), (&bb, &c3), (&c3, &c3), (&bb, &bb)] {
            let listed = enumerate_homs(s, t).len();
            let mut brute = 0;
            let total = t.size().pow(s.size() as u32);
            for code in 0..total {
                let mut c = code;
                let map: Vec<usize> = (0..s.size())
                    .map(|_| {
                        let d = c % t.size();
                        c /= t.size();
                        d
                    })
                    .collect();
                if validate_hom(s, t, map).is_ok() {
                    brute += 1;
                }
            }
            assert_eq!(listed, brute, "{} -> {}", s.name(), t.name());
        }
    }
}
