//! Finite commutative semirings given by addition and multiplication tables.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::bits::{ElemSet, MAX_ELEMS};
use crate::error::{Error, Result};

/// Unvalidated table data, as read from a document or produced by a builder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawTables {
    pub names: Vec<String>,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub zero: usize,
    pub unit: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Flags {
    pub unital: bool,
    pub conical: bool,
    pub reduced: bool,
    pub additively_idempotent: bool,
    pub idealic: bool,
    pub multiplicatively_idempotent: bool,
}

/// A validated finite commutative semiring.
///
/// Elements are identified by index; labels are for display only.
pub struct FiniteSemiring {
    name: String,
    names: Vec<String>,
    n: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    zero: usize,
    unit: Option<usize>,
    flags: Flags,
    pub(crate) ideal_cache: OnceLock<Vec<ElemSet>>,
    pub(crate) prime_cache: [OnceLock<Vec<ElemSet>>; 3],
}

impl Clone for FiniteSemiring {
    fn clone(&self) -> Self {
        FiniteSemiring {
            name: self.name.clone(),
            names: self.names.clone(),
            n: self.n,
            add: self.add.clone(),
            mul: self.mul.clone(),
            zero: self.zero,
            unit: self.unit,
            flags: self.flags,
            ideal_cache: OnceLock::new(),
            prime_cache: Default::default(),
        }
    }
}

impl PartialEq for FiniteSemiring {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
            && self.add == other.add
            && self.mul == other.mul
            && self.zero == other.zero
            && self.unit == other.unit
    }
}

impl Eq for FiniteSemiring {}

impl fmt::Debug for FiniteSemiring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteSemiring")
            .field("name", &self.name)
            .field("names", &self.names)
            .field("flags", &self.flags)
            .finish()
    }
}

fn violation(law: &'static str, names: &[String], idx: &[usize]) -> Error {
    Error::AxiomViolation { law, witness: idx.iter().map(|&i| names[i].clone()).collect() }
}

/// Check every semiring axiom exhaustively and compute the structural flags.
pub fn validate_semiring(name: &str, raw: RawTables) -> Result<FiniteSemiring> {
    let RawTables { names, add, mul, zero, unit } = raw;
    let n = names.len();
    if n == 0 {
        return Err(Error::Malformed("empty carrier".into()));
    }
    if n > MAX_ELEMS {
        return Err(Error::SizeBoundExceeded { what: "carrier", size: n, bound: MAX_ELEMS });
    }
    for (i, a) in names.iter().enumerate() {
        if names[..i].contains(a) {
            return Err(Error::Malformed(format!("duplicate label `{a}`")));
        }
    }
    for (tab, what) in [(&add, "add"), (&mul, "mul")] {
        if tab.len() != n || tab.iter().any(|row| row.len() != n) {
            return Err(Error::Malformed(format!("{what} table is not {n}x{n}")));
        }
        if let Some((i, j)) = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).find(|&(i, j)| tab[i][j] >= n) {
            return Err(Error::Malformed(format!("{what}[{i}][{j}] out of range")));
        }
    }
    if zero >= n || unit.is_some_and(|u| u >= n) {
        return Err(Error::Malformed("zero or unit out of range".into()));
    }
    let a = |x: usize, y: usize| add[x][y];
    let m = |x: usize, y: usize| mul[x][y];
    for x in 0..n {
        if a(zero, x) != x {
            return Err(violation("additive identity", &names, &[x]));
        }
        if m(zero, x) != zero || m(x, zero) != zero {
            return Err(violation("zero absorbs", &names, &[x]));
        }
        if let Some(u) = unit {
            if m(u, x) != x {
                return Err(violation("multiplicative identity", &names, &[x]));
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            if a(x, y) != a(y, x) {
                return Err(violation("additive commutativity", &names, &[x, y]));
            }
            if m(x, y) != m(y, x) {
                return Err(violation("multiplicative commutativity", &names, &[x, y]));
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if a(a(x, y), z) != a(x, a(y, z)) {
                    return Err(violation("additive associativity", &names, &[x, y, z]));
                }
                if m(m(x, y), z) != m(x, m(y, z)) {
                    return Err(violation("multiplicative associativity", &names, &[x, y, z]));
                }
                if m(x, a(y, z)) != a(m(x, y), m(x, z)) {
                    return Err(violation("distributivity", &names, &[x, y, z]));
                }
            }
        }
    }
    let mut s = FiniteSemiring {
        name: name.to_string(),
        names,
        n,
        add: add.into_iter().flatten().collect(),
        mul: mul.into_iter().flatten().collect(),
        zero,
        unit,
        flags: Flags::default(),
        ideal_cache: OnceLock::new(),
        prime_cache: Default::default(),
    };
    s.flags = s.compute_flags();
    Ok(s)
}

/// Like [`validate_semiring`] but rejects tables without a unit.
pub fn validate_unital(name: &str, raw: RawTables) -> Result<FiniteSemiring> {
    if raw.unit.is_none() {
        return Err(Error::MissingUnit(name.to_string()));
    }
    validate_semiring(name, raw)
}

/// Structural summary of a semiring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Profile {
    pub units: Vec<usize>,
    pub idempotents: Vec<usize>,
    pub flags: Flags,
    pub complete_idealic: bool,
    /// `order[a][b]` iff `a + b = b`; present only when addition is idempotent.
    pub natural_order: Option<Vec<Vec<bool>>>,
}

impl FiniteSemiring {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(&self, name: &str) -> FiniteSemiring {
        let mut s = self.clone();
        s.name = name.to_string();
        s
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn label(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.names.iter().position(|x| x == label)
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.n + b]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b]
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn unit(&self) -> Option<usize> {
        self.unit
    }

    /// The unit, or [`Error::NotUnital`].
    pub fn one(&self) -> Result<usize> {
        self.unit.ok_or_else(|| Error::NotUnital(self.name.clone()))
    }

    pub fn flags(&self) -> Flags {
        self.flags
    }

    pub fn carrier(&self) -> ElemSet {
        ElemSet::full(self.n)
    }

    /// Table rows as nested vectors (index form).
    pub fn add_table(&self) -> Vec<Vec<usize>> {
        self.add.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn mul_table(&self) -> Vec<Vec<usize>> {
        self.mul.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn raw(&self) -> RawTables {
        RawTables {
            names: self.names.clone(),
            add: self.add_table(),
            mul: self.mul_table(),
            zero: self.zero,
            unit: self.unit,
        }
    }

    /// `a^k` for `k >= 1`.
    pub fn pow(&self, a: usize, k: usize) -> usize {
        let mut x = a;
        for _ in 1..k {
            x = self.mul(x, a);
        }
        x
    }

    /// The distinct positive powers `a, a², ...` (the sequence is eventually periodic).
    pub fn powers(&self, a: usize) -> ElemSet {
        let mut seen = ElemSet::EMPTY;
        let mut x = a;
        while !seen.contains(x) {
            seen.insert(x);
            x = self.mul(x, a);
        }
        seen
    }

    pub fn is_nilpotent(&self, a: usize) -> bool {
        self.powers(a).contains(self.zero)
    }

    /// Natural order `a <= b` iff `a + b = b`.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.add(a, b) == b
    }

    pub fn sum_of(&self, set: ElemSet) -> usize {
        set.iter().fold(self.zero, |acc, x| self.add(acc, x))
    }

    pub fn set_label(&self, set: ElemSet) -> String {
        let parts: Vec<&str> = set.iter().map(|i| self.label(i)).collect();
        format!("{{{}}}", parts.join(","))
    }

    pub fn set_from_labels(&self, labels: &[&str]) -> Option<ElemSet> {
        labels.iter().map(|l| self.index_of(l)).collect::<Option<Vec<_>>>().map(|v| v.into_iter().collect())
    }

    fn compute_flags(&self) -> Flags {
        let all = 0..self.n;
        let conical =
            all.clone().all(|x| (0..self.n).all(|y| self.add(x, y) != self.zero || (x == self.zero && y == self.zero)));
        let reduced = all.clone().all(|x| x == self.zero || !self.is_nilpotent(x));
        let additively_idempotent = all.clone().all(|x| self.add(x, x) == x);
        let idealic = additively_idempotent && self.unit.is_some_and(|u| all.clone().all(|x| self.add(x, u) == u));
        let multiplicatively_idempotent = all.clone().all(|x| self.mul(x, x) == x);
        Flags {
            unital: self.unit.is_some(),
            conical,
            reduced,
            additively_idempotent,
            idealic,
            multiplicatively_idempotent,
        }
    }

    pub fn units(&self) -> Vec<usize> {
        match self.unit {
            None => Vec::new(),
            Some(u) => (0..self.n).filter(|&x| (0..self.n).any(|y| self.mul(x, y) == u)).collect(),
        }
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.n).filter(|&x| self.mul(x, x) == x).collect()
    }

    /// A finite additively idempotent semiring is complete in its natural order,
    /// so complete-idealic reduces to idealic.
    pub fn is_complete_idealic(&self) -> bool {
        self.flags.idealic
    }
}

pub fn structural_profile(s: &FiniteSemiring) -> Profile {
    let natural_order = s
        .flags
        .additively_idempotent
        .then(|| (0..s.size()).map(|a| (0..s.size()).map(|b| s.leq(a, b)).collect()).collect());
    Profile {
        units: s.units(),
        idempotents: s.idempotents(),
        flags: s.flags,
        complete_idealic: s.is_complete_idealic(),
        natural_order,
    }
}

fn table(n: usize, f: impl Fn(usize, usize) -> usize) -> Vec<Vec<usize>> {
    (0..n).map(|i| (0..n).map(|j| f(i, j)).collect()).collect()
}

fn labels(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

/// The two-element Boolean semiring `({0,1}, or, and)`.
pub fn boolean() -> FiniteSemiring {
    let raw = RawTables {
        names: labels(&["0", "1"]),
        add: table(2, |a, b| a | b),
        mul: table(2, |a, b| a & b),
        zero: 0,
        unit: Some(1),
    };
    validate_semiring("boolean", raw).expect("boolean tables")
}

/// The `n`-element chain with join as addition and meet as multiplication.
pub fn chain(n: usize) -> Result<FiniteSemiring> {
    if n < 2 {
        return Err(Error::UnknownConstructor(format!("chain({n})")));
    }
    let mut names = vec!["0".to_string()];
    match n {
        2 => {}
        3 => names.push("m".into()),
        _ => names.extend((1..n - 1).map(|i| format!("m{i}"))),
    }
    names.push("1".into());
    let raw = RawTables { names, add: table(n, usize::max), mul: table(n, usize::min), zero: 0, unit: Some(n - 1) };
    validate_semiring(&format!("chain({n})"), raw)
}

/// `{0..n}` with `a ⊕ b = min(a+b, n)` and `a ⊗ b = min(ab, n)`.
pub fn saturating_nat(n: usize) -> Result<FiniteSemiring> {
    if n < 1 {
        return Err(Error::UnknownConstructor(format!("saturating-nat({n})")));
    }
    let names = (0..=n).map(|i| i.to_string()).collect();
    let raw = RawTables {
        names,
        add: table(n + 1, |a, b| (a + b).min(n)),
        mul: table(n + 1, |a, b| (a * b).min(n)),
        zero: 0,
        unit: Some(1),
    };
    validate_semiring(&format!("saturating-nat({n})"), raw)
}

/// The six-element join-semilattice `{0,a,b,a∨b,c,d}` with `a∨c = b∨c = d`,
/// `d` absorbing, and the zero multiplication. It has no unit.
pub fn pentagon() -> FiniteSemiring {
    // 0 < a, b < a∨b < d and 0 < c < d
    let names = labels(&["0", "a", "b", "a∨b", "c", "d"]);
    let up: [u8; 6] = [0b111111, 0b101010, 0b101100, 0b101000, 0b110000, 0b100000];
    let join = |x: usize, y: usize| {
        let common = up[x] & up[y];
        // least upper bound: the common upper bound below all others
        (0..6)
            .find(|&z| common & (1 << z) != 0 && (0..6).all(|w| common & (1 << w) == 0 || up[z] & (1 << w) != 0))
            .unwrap()
    };
    let raw = RawTables { names, add: table(6, join), mul: table(6, |_, _| 0), zero: 0, unit: None };
    validate_semiring("pentagon", raw).expect("pentagon tables")
}

fn pair_label(a: &str, b: &str) -> String {
    format!("({a},{b})")
}

/// Componentwise product; element `(i, j)` has index `i * |T| + j`.
pub fn product(s: &FiniteSemiring, t: &FiniteSemiring) -> Result<FiniteSemiring> {
    let (ns, nt) = (s.size(), t.size());
    let n = ns * nt;
    if n > MAX_ELEMS {
        return Err(Error::SizeBoundExceeded { what: "carrier", size: n, bound: MAX_ELEMS });
    }
    let names = (0..n).map(|k| pair_label(s.label(k / nt), t.label(k % nt))).collect();
    let lift = |f: &dyn Fn(usize, usize, usize, usize) -> (usize, usize)| {
        table(n, |x, y| {
            let (p, q) = f(x / nt, x % nt, y / nt, y % nt);
            p * nt + q
        })
    };
    let add = lift(&|a, b, c, d| (s.add(a, c), t.add(b, d)));
    let mul = lift(&|a, b, c, d| (s.mul(a, c), t.mul(b, d)));
    let unit = match (s.unit(), t.unit()) {
        (Some(u), Some(v)) => Some(u * nt + v),
        _ => None,
    };
    let raw = RawTables { names, add, mul, zero: s.zero() * nt + t.zero(), unit };
    validate_semiring(&format!("product({},{})", s.name(), t.name()), raw)
}

/// A bounded distributive lattice given by its order relation, as a semiring
/// with join as addition and meet as multiplication.
pub fn dist_lattice_from_order(name: &str, names: Vec<String>, leq: &[Vec<bool>]) -> Result<FiniteSemiring> {
    let n = names.len();
    let lub = |a: usize, b: usize| -> Option<usize> {
        let ub: Vec<usize> = (0..n).filter(|&z| leq[a][z] && leq[b][z]).collect();
        ub.iter().copied().find(|&z| ub.iter().all(|&w| leq[z][w]))
    };
    let glb = |a: usize, b: usize| -> Option<usize> {
        let lb: Vec<usize> = (0..n).filter(|&z| leq[z][a] && leq[z][b]).collect();
        lb.iter().copied().find(|&z| lb.iter().all(|&w| leq[w][z]))
    };
    let mut add = vec![vec![0; n]; n];
    let mut mul = vec![vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            add[a][b] =
                lub(a, b).ok_or_else(|| Error::NotALattice(format!("{} and {} have no join", names[a], names[b])))?;
            mul[a][b] =
                glb(a, b).ok_or_else(|| Error::NotALattice(format!("{} and {} have no meet", names[a], names[b])))?;
        }
    }
    let bottom = (0..n).find(|&z| (0..n).all(|w| leq[z][w])).ok_or_else(|| Error::NotALattice("no bottom".into()))?;
    let top = (0..n).find(|&z| (0..n).all(|w| leq[w][z])).ok_or_else(|| Error::NotALattice("no top".into()))?;
    validate_semiring(name, RawTables { names, add, mul, zero: bottom, unit: Some(top) })
}

/// A commutative ring with identity viewed as a semiring.
pub fn ring_as_semiring(
    name: &str,
    names: Vec<String>,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
    zero: usize,
    unit: usize,
) -> Result<FiniteSemiring> {
    let n = names.len();
    let raw = RawTables { names, add, mul, zero, unit: Some(unit) };
    let s = validate_semiring(name, raw)?;
    // additive inverses are what makes it a ring
    if let Some(x) = (0..n).find(|&x| (0..n).all(|y| s.add(x, y) != zero)) {
        return Err(violation("additive inverse", s.names(), &[x]));
    }
    Ok(s)
}

/// `ℤ/n` as a semiring.
pub fn zmod(n: usize) -> Result<FiniteSemiring> {
    if n < 2 {
        return Err(Error::UnknownConstructor(format!("zmod({n})")));
    }
    let names = (0..n).map(|i| i.to_string()).collect();
    ring_as_semiring(&format!("zmod({n})"), names, table(n, |a, b| (a + b) % n), table(n, |a, b| (a * b) % n), 0, 1)
}

/// Build a semiring from a constructor expression such as `chain(3)`,
/// `saturating-nat(2)`, `zmod(4)`, `pentagon` or `product(boolean,chain(3))`.
/// Hyphenated shorthands (`chain-3`, `sat-nat-2`, `z4`) are accepted too.
pub fn build_named(expr: &str) -> Result<FiniteSemiring> {
    let expr = expr.trim();
    let unknown = || Error::UnknownConstructor(expr.to_string());
    if let Some(open) = expr.find('(') {
        if !expr.ends_with(')') {
            return Err(unknown());
        }
        let head = &expr[..open];
        let body = &expr[open + 1..expr.len() - 1];
        if head == "product" {
            let (l, r) = split_top_level_comma(body).ok_or_else(unknown)?;
            let s = build_named(l)?;
            let t = build_named(r)?;
            return product(&s, &t);
        }
        let k: usize = body.trim().parse().map_err(|_| unknown())?;
        return match head {
            "chain" => chain(k),
            "saturating-nat" | "sat-nat" => saturating_nat(k),
            "zmod" | "ring-as-semiring" => zmod(k),
            _ => Err(unknown()),
        };
    }
    match expr {
        "boolean" => return Ok(boolean()),
        "pentagon" => return Ok(pentagon()),
        _ => {}
    }
    let numbered = |prefix: &str| expr.strip_prefix(prefix).and_then(|r| r.parse::<usize>().ok());
    if let Some(k) = numbered("chain-") {
        chain(k)
    } else if let Some(k) = numbered("saturating-nat-").or_else(|| numbered("sat-nat-")) {
        saturating_nat(k)
    } else if let Some(k) = numbered("z") {
        zmod(k)
    } else {
        Err(unknown())
    }
}

fn split_top_level_comma(s: &str) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => return Some((&s[..i], &s[i + 1..])),
            _ => {}
        }
    }
    None
}

pub type SemiringRef = Arc<FiniteSemiring>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boolean_flags() {
        let b = boolean();
        let f = b.flags();
        assert!(f.unital && f.conical && f.reduced && f.additively_idempotent && f.idealic);
    }

    #[test]
    fn zmod4_is_neither_conical_nor_reduced() {
        let z = zmod(4).unwrap();
        assert!(!z.flags().conical);
        assert!(!z.flags().reduced);
        assert_eq!(structural_profile(&z).units, vec![1, 3]);
    }

    #[test]
    fn pentagon_has_no_unit() {
        let p = pentagon();
        assert!(!p.flags().unital);
        let a = p.index_of("a").unwrap();
        let b = p.index_of("b").unwrap();
        let c = p.index_of("c").unwrap();
        let d = p.index_of("d").unwrap();
        assert_eq!(p.label(p.add(a, b)), "a∨b");
        assert_eq!(p.add(a, c), d);
        assert_eq!(p.add(b, c), d);
        assert!(matches!(validate_unital("p", p.raw()), Err(Error::MissingUnit(_))));
    }

    #[test]
    fn saturating_nat_profile() {
        let s = saturating_nat(2).unwrap();
        let p = structural_profile(&s);
        assert_eq!(p.units, vec![1]);
        assert!(!p.flags.additively_idempotent && p.flags.conical && p.flags.reduced);
    }

    #[test]
    fn broken_table_reports_law() {
        let mut raw = boolean().raw();
        raw.mul[1][1] = 0;
        match validate_semiring("bad", raw) {
            Err(Error::AxiomViolation { law, witness }) => {
                assert_eq!(law, "multiplicative identity");
                assert_eq!(witness, vec!["1".to_string()]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn named_products() {
        let s = build_named("product(boolean,chain(3))").unwrap();
        assert_eq!(s.size(), 6);
        assert_eq!(build_named("sat-nat-2").unwrap(), saturating_nat(2).unwrap());
        assert!(matches!(build_named("quux(2)"), Err(Error::UnknownConstructor(_))));
    }
}
