//! DOT output for lattices (covering relation) and finite spaces
//! (specialization order).

use std::fmt::Write;

use rigframe::lattice::FiniteLattice;
use rigframe::space::FiniteSpace;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn render(name: &str, labels: &[String], edges: &[(usize, usize)], attrs: &[(&str, String)]) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(name)).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    for (k, v) in attrs {
        writeln!(out, "  {k}={};", quote(v)).unwrap();
    }
    for (i, l) in labels.iter().enumerate() {
        writeln!(out, "  n{i} [label={}];", quote(l)).unwrap();
    }
    for (a, b) in edges {
        writeln!(out, "  n{a} -> n{b};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// Hasse diagram; `laws` become the graph label.
pub fn lattice_dot(name: &str, l: &FiniteLattice, laws: &[(&str, bool)]) -> String {
    let label = laws.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ");
    let attrs = if label.is_empty() { vec![] } else { vec![("label", label)] };
    render(name, &l.labels, &l.covers(), &attrs)
}

/// Edges `p -> q` for each covering pair of the specialization order
/// (`p` in the closure of `q`).
pub fn space_dot(name: &str, x: &FiniteSpace) -> String {
    let n = x.len();
    let below = |p: usize, q: usize| p != q && x.specializes(p, q) && !x.specializes(q, p);
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|p| (0..n).map(move |q| (p, q)))
        .filter(|&(p, q)| below(p, q) && !(0..n).any(|r| below(p, r) && below(r, q)))
        .collect();
    render(name, &x.labels, &edges, &[])
}

#[cfg(test)]
mod tests {
    use super::*;
    use rigframe::semiring::{chain, saturating_nat};
    use rigframe::spectra::{spectrum, PrimeKind};
    use std::sync::Arc;

    #[test]
    fn two_chain() {
        let l =
            FiniteLattice::from_order(vec!["0".into(), "1".into()], &[vec![true, true], vec![false, true]]).unwrap();
        let dot = lattice_dot("c2", &l, &[]);
        assert_eq!(dot.matches("[label=").count(), 2);
        assert_eq!(dot.matches("->").count(), 1);
    }

    #[test]
    fn rid_of_saturating_nat() {
        let s = Arc::new(saturating_nat(2).unwrap());
        let r = rigframe::frames::build_radical_lattice(&s, rigframe::frames::RadicalKind::Rid).unwrap();
        let dot = lattice_dot("rid", &r.lattice, &[("frame", true)]);
        assert_eq!(dot.matches("[label=").count(), 3);
        assert_eq!(dot.matches("->").count(), 2);
        assert!(dot.contains("label=\"frame=true\""));
    }

    #[test]
    fn chain_spectrum() {
        let sp = spectrum(&chain(3).unwrap(), PrimeKind::Prime).unwrap();
        let dot = space_dot("spec", &sp.space);
        assert_eq!(dot.matches("[label=").count(), 2);
        assert_eq!(dot.matches("->").count(), 1);
    }
}
