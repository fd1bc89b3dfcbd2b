//! Argument parsing and dispatch for the `rigframe` binary.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use rigframe::frames::{build_radical_lattice, nucleus_j, RadicalKind};
use rigframe::hom::enumerate_homs;
use rigframe::ideals::{classify_subset, enumerate_ideal_sets, IdealKind};
use rigframe::lattice::{lattice_laws, n5_witnesses, FiniteLattice};
use rigframe::quantale::{
    adjunction_check, hom_bijection, idk_quantale, principal_k_laws, quantale_as_semiring, zar, zar_correspondence,
};
use rigframe::semiring::{build_named, structural_profile, FiniteSemiring};
use rigframe::spectra::{spectrum, PrimeKind};
use rigframe::support::{
    boolean_structures, check_support, ideal_frame_iso, reticulation, spec_homeo, support_properties, zdc_report,
    SupportVariant,
};
use rigframe::ElemSet;

use crate::corpus::{builtin, load_corpus, write_corpus, Corpus};
use crate::document::parse_document;
use crate::dot::{lattice_dot, space_dot};
use crate::suite::{run_suite, SuiteOptions};
use crate::CliError;

#[derive(Debug, Parser)]
#[command(name = "rigframe", about = "Ideals, spectra and frames of finite commutative semirings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum IdealsKind {
    All,
    K,
    Strong,
    Proper,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SpecKind {
    Prime,
    K,
    Strong,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Which {
    Rid,
    #[value(name = "rid_k")]
    RidK,
    #[value(name = "id_k")]
    IdK,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Emit {
    Json,
    Dot,
}

/// `SEMIRING` is a document path, a corpus member name, or a constructor
/// such as `chain(4)` or `product(boolean,z4)`.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a semiring document
    Validate { semiring: String },
    /// Units, idempotents, flags and natural order
    Profile { semiring: String },
    /// List ideals of a kind with their classification
    Ideals {
        semiring: String,
        #[arg(long, value_enum, default_value = "all")]
        kind: IdealsKind,
    },
    /// Prime, k-prime or strong-prime spectrum
    Spectrum {
        semiring: String,
        #[arg(long, value_enum, default_value = "prime")]
        kind: SpecKind,
        #[arg(long, value_enum, default_value = "json")]
        emit: Emit,
    },
    /// Lattice of radical, k-radical or k-ideals
    Frame {
        semiring: String,
        #[arg(long, value_enum, default_value = "rid")]
        which: Which,
        #[arg(long, value_enum, default_value = "dot")]
        emit: Emit,
    },
    /// The nucleus from radical ideals onto k-radical ideals
    Nucleus { semiring: String },
    /// Reticulation and its support checks
    Reticulate {
        semiring: String,
        #[arg(long, value_enum, default_value = "json")]
        emit: Emit,
    },
    /// Complemented idempotents against complemented lattice elements
    Boolean { semiring: String },
    /// Zero-dimensionality criteria
    Zdc { semiring: String },
    /// The quantale of k-ideals
    Quantale { semiring: String },
    /// Free quantale adjunction against the k-ideal quantale of TARGET
    Adjoint { semiring: String, target: String },
    /// Zariski space of a complete idealic semiring
    Zar { semiring: String },
    /// Run the theorem suite on a document or corpus directory
    Check {
        path: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// include per-check timings (reports are then not reproducible)
        #[arg(long)]
        timings: bool,
    },
    /// Write the built-in corpus documents
    Corpus { dir: PathBuf },
}

pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn json_out(v: Value, ok: bool) -> Output {
    Output {
        code: if ok { 0 } else { 1 },
        stdout: serde_json::to_string_pretty(&v).expect("json") + "\n",
        stderr: String::new(),
    }
}

fn text_out(s: String, ok: bool) -> Output {
    Output { code: if ok { 0 } else { 1 }, stdout: s, stderr: String::new() }
}

pub fn resolve(arg: &str) -> Result<Arc<FiniteSemiring>, CliError> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = fs::read_to_string(path)?;
        let doc = parse_document(&text).map_err(|e| CliError::Parse(format!("{arg}: {e}")))?;
        return Ok(Arc::new(doc.to_semiring()?));
    }
    if let Some(m) = builtin().member(arg) {
        return Ok(m.clone());
    }
    match build_named(arg) {
        Ok(s) => Ok(Arc::new(s)),
        Err(rigframe::Error::UnknownConstructor(_)) => Err(CliError::Usage(format!("unknown semiring {arg:?}"))),
        Err(e) => Err(e.into()),
    }
}

fn sets(s: &FiniteSemiring, xs: &[ElemSet]) -> Vec<String> {
    xs.iter().map(|&x| s.set_label(x)).collect()
}

fn labels(s: &FiniteSemiring, xs: &[usize]) -> Vec<String> {
    xs.iter().map(|&x| s.label(x).to_string()).collect()
}

fn lattice_json(l: &FiniteLattice) -> Value {
    let laws = lattice_laws(l);
    json!({
        "elements": l.labels,
        "covers": l.covers().iter().map(|&(a, b)| [l.labels[a].clone(), l.labels[b].clone()]).collect::<Vec<_>>(),
        "distributive": laws.distributive,
        "modular": laws.modular,
        "frame": laws.frame,
        "n5": n5_witnesses(l).iter().map(|w| w.iter().map(|&x| l.labels[x].clone()).collect::<Vec<_>>()).collect::<Vec<_>>(),
    })
}

fn prime_kind(k: SpecKind) -> PrimeKind {
    match k {
        SpecKind::Prime => PrimeKind::Prime,
        SpecKind::K => PrimeKind::K,
        SpecKind::Strong => PrimeKind::Strong,
    }
}

fn validate(arg: &str) -> Result<Output, CliError> {
    let text = fs::read_to_string(arg).map_err(|e| CliError::Usage(format!("{arg}: {e}")))?;
    let doc = parse_document(&text).map_err(|e| CliError::Parse(format!("{arg}: {e}")))?;
    Ok(match doc.to_semiring() {
        Ok(s) => text_out(format!("{}: valid, {} elements\n", s.name(), s.size()), true),
        Err(e) => Output { code: 1, stdout: String::new(), stderr: format!("{}: {e}\n", doc.name) },
    })
}

fn profile(s: &FiniteSemiring) -> Value {
    let p = structural_profile(s);
    let f = p.flags;
    json!({
        "name": s.name(),
        "size": s.size(),
        "units": labels(s, &p.units),
        "idempotents": labels(s, &p.idempotents),
        "flags": {
            "unital": f.unital,
            "conical": f.conical,
            "reduced": f.reduced,
            "additively_idempotent": f.additively_idempotent,
            "idealic": f.idealic,
            "multiplicatively_idempotent": f.multiplicatively_idempotent,
            "complete_idealic": p.complete_idealic,
        },
        "natural_order": p.natural_order.map(|o| {
            (0..s.size()).flat_map(|a| (0..s.size()).map(move |b| (a, b)))
                .filter(|&(a, b)| a != b && o[a][b])
                .map(|(a, b)| [s.label(a).to_string(), s.label(b).to_string()])
                .collect::<Vec<_>>()
        }),
    })
}

fn ideals(s: &FiniteSemiring, kind: IdealsKind) -> Result<Value, CliError> {
    let kind = match kind {
        IdealsKind::All => IdealKind::All,
        IdealsKind::K => IdealKind::K,
        IdealsKind::Strong => IdealKind::Strong,
        IdealsKind::Proper => IdealKind::Proper,
    };
    let list: Vec<Value> = enumerate_ideal_sets(s, kind)?
        .into_iter()
        .map(|i| {
            let c = classify_subset(s, i).flags;
            json!({ "members": s.set_label(i), "k_ideal": c.k_ideal, "strong": c.strong, "proper": c.proper })
        })
        .collect();
    Ok(json!({ "name": s.name(), "count": list.len(), "ideals": list }))
}

fn frame(s: &Arc<FiniteSemiring>, which: Which, emit: Emit) -> Result<Output, CliError> {
    let kind = match which {
        Which::Rid => RadicalKind::Rid,
        Which::RidK => RadicalKind::RidK,
        Which::IdK => RadicalKind::IdK,
    };
    let l = build_radical_lattice(s, kind)?;
    let laws = lattice_laws(&l.lattice);
    Ok(match emit {
        Emit::Dot => {
            let flags = [("distributive", laws.distributive), ("modular", laws.modular), ("frame", laws.frame)];
            text_out(lattice_dot(&format!("{}({})", kind.name(), s.name()), &l.lattice, &flags), true)
        }
        Emit::Json => {
            json_out(json!({ "name": s.name(), "which": kind.name(), "lattice": lattice_json(&l.lattice) }), true)
        }
    })
}

fn nucleus(s: &Arc<FiniteSemiring>) -> Result<Output, CliError> {
    let j = nucleus_j(s)?;
    let l = &j.map.source;
    let ok = j.extensive
        && j.idempotent
        && j.meet_preserving
        && j.fixed_points_match
        && j.bottom_fixed
        && j.corestriction_onto;
    Ok(json_out(
        json!({
            "name": s.name(),
            "map": (0..l.len()).map(|x| [l.labels[x].clone(), l.labels[j.map.apply(x)].clone()]).collect::<Vec<_>>(),
            "extensive": j.extensive,
            "idempotent": j.idempotent,
            "meet_preserving": j.meet_preserving,
            "fixed_points_match": j.fixed_points_match,
            "bottom_fixed": j.bottom_fixed,
            "corestriction_onto": j.corestriction_onto,
        }),
        ok,
    ))
}

fn reticulate(s: &Arc<FiniteSemiring>, emit: Emit) -> Result<Output, CliError> {
    let r = reticulation(s)?;
    let l = r.lattice();
    if let Emit::Dot = emit {
        return Ok(text_out(lattice_dot(&format!("L({})", s.name()), l, &[]), true));
    }
    let sup = check_support(&r.support, SupportVariant::Plain)?;
    let props = support_properties(&r.support);
    let homeo = spec_homeo(&r.support).map(|_| true).unwrap_or(false);
    let iso = ideal_frame_iso(&r.support).map(|_| true).unwrap_or(false);
    let ok = sup.holds && props.all() && homeo && iso;
    Ok(json_out(
        json!({
            "name": s.name(),
            "lattice": lattice_json(l),
            "support": (0..s.size()).map(|a| [s.label(a).to_string(), l.labels[r.support.apply(a)].clone()]).collect::<Vec<_>>(),
            "support_axioms": sup.holds,
            "support_witnesses": sup.witnesses,
            "support_properties": props.all(),
            "spectrum_homeomorphism": homeo,
            "ideal_frame_isomorphism": iso,
        }),
        ok,
    ))
}

fn boolean_cmd(s: &Arc<FiniteSemiring>) -> Result<Output, CliError> {
    let r = reticulation(s)?;
    let b = boolean_structures(&r.support)?;
    let l = r.lattice();
    Ok(json_out(
        json!({
            "name": s.name(),
            "complemented_idempotents": labels(s, &b.comp),
            "complements": labels(s, &b.perp),
            "complemented_lattice_elements": b.lattice_complemented.iter().map(|&x| l.labels[x].clone()).collect::<Vec<_>>(),
            "complements_unique": b.complements_unique,
            "idempotents_form_boolean_ring": b.comp_is_boolean_ring,
            "lattice_elements_form_boolean_ring": b.lattice_is_boolean_ring,
            "isomorphism": b.isomorphism,
            "witness": b.witness,
        }),
        b.isomorphism,
    ))
}

fn zdc(s: &Arc<FiniteSemiring>) -> Result<Output, CliError> {
    let z = zdc_report(&reticulation(s)?)?;
    Ok(json_out(
        json!({
            "name": s.name(),
            "stone": z.stone,
            "boolean": z.boolean,
            "all_primes_maximal": z.all_primes_maximal,
            "regular": z.regular,
            "zero_dimensional": z.zero_dimensional,
            "trio_agrees": z.trio_agrees,
            "findings": z.findings,
        }),
        z.trio_agrees,
    ))
}

fn quantale(s: &Arc<FiniteSemiring>) -> Result<Output, CliError> {
    let q = idk_quantale(s)?;
    let (qq, l) = (&q.quantale, &q.quantale.lattice);
    let laws = principal_k_laws(s)?;
    let ok = q.quantale.flags.is_quantale() && laws.witnesses.is_empty();
    let f = qq.flags;
    Ok(json_out(
        json!({
            "name": s.name(),
            "elements": l.labels,
            "mult": (0..qq.len()).map(|a| (0..qq.len()).map(|b| l.labels[qq.mul(a, b)].clone()).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "unit": l.labels[qq.unit],
            "flags": {
                "associative": f.associative,
                "commutative": f.commutative,
                "distributive": f.distributive,
                "unit_identity": f.unit_identity,
                "unitally_bounded": f.unitally_bounded,
                "idempotent_mult": f.idempotent_mult,
            },
            "principal_k_laws": { "formula": laws.formula_agrees, "sum": laws.sum_law, "product": laws.product_law },
        }),
        ok,
    ))
}

fn adjoint(s: &Arc<FiniteSemiring>, t: &Arc<FiniteSemiring>) -> Result<Output, CliError> {
    let q = idk_quantale(t)?.quantale;
    let hb = hom_bijection(s, &q)?;
    let uq = Arc::new(quantale_as_semiring(&q, &format!("U(Id_k({}))", t.name()))?);
    let mut instances = Vec::new();
    let mut ok = hb.bijective;
    for f in enumerate_homs(s, &uq) {
        let r = adjunction_check(s, &q, &f)?;
        ok &= r.holds;
        instances.push(json!({
            "hom": labels(&uq, f.map()),
            "phi": r.phi.iter().map(|&x| q.lattice.labels[x].clone()).collect::<Vec<_>>(),
            "holds": r.holds,
        }));
    }
    Ok(json_out(
        json!({
            "source": s.name(),
            "quantale": format!("Id_k({})", t.name()),
            "quantale_morphisms": hb.quantale_morphisms,
            "semiring_homs": hb.semiring_homs,
            "bijective": hb.bijective,
            "instances": instances,
        }),
        ok,
    ))
}

fn zar_cmd(s: &Arc<FiniteSemiring>) -> Result<Output, CliError> {
    let mut v = json!({ "name": s.name() });
    let mut ok = true;
    if s.is_complete_idealic() {
        let z = zar(s)?;
        v["points"] = json!(labels(s, &z.points));
    }
    if s.unit().is_some() {
        let c = zar_correspondence(s)?;
        ok &= c;
        v["rid_k_zar_matches_k_spectrum"] = json!(c);
    }
    if v.as_object().map_or(0, |o| o.len()) == 1 {
        return Err(rigframe::Error::NotCompleteIdealic(s.name().to_string()).into());
    }
    Ok(json_out(v, ok))
}

fn check(path: &Path, out: Option<&Path>, timings: bool) -> Result<Output, CliError> {
    let corpus = if path.is_dir() {
        load_corpus(path)?
    } else {
        let s = resolve(path.to_str().ok_or_else(|| CliError::Usage("path is not UTF-8".into()))?)?;
        Corpus { members: vec![s], ..Corpus::default() }
    };
    if corpus.members.is_empty() {
        return Err(CliError::Usage(format!("{}: no semiring documents", path.display())));
    }
    let report = run_suite(&corpus, SuiteOptions { timings });
    let text = report.to_json();
    let code = if report.passed() { 0 } else { 1 };
    let s = &report.summary;
    let summary = format!(
        "{} members, {} homs, {} checks: {} passed, {} failed, {} reported, {} excluded\n",
        s.members,
        s.homs,
        s.checks,
        s.passed,
        s.failed,
        s.reported,
        report.excluded.len()
    );
    match out {
        Some(p) => {
            fs::write(p, text)?;
            Ok(Output { code, stdout: summary, stderr: String::new() })
        }
        None => Ok(Output { code, stdout: text, stderr: summary }),
    }
}

pub fn execute(cli: Cli) -> Result<Output, CliError> {
    match cli.command {
        Command::Validate { semiring } => validate(&semiring),
        Command::Profile { semiring } => Ok(json_out(profile(&*resolve(&semiring)?), true)),
        Command::Ideals { semiring, kind } => Ok(json_out(ideals(&*resolve(&semiring)?, kind)?, true)),
        Command::Spectrum { semiring, kind, emit } => {
            let s = resolve(&semiring)?;
            let kind = prime_kind(kind);
            let sp = spectrum(&s, kind)?;
            Ok(match emit {
                Emit::Dot => text_out(space_dot(&format!("spec-{}({})", kind.name(), s.name()), &sp.space), true),
                Emit::Json => {
                    let rep = sp.space.spectral_report();
                    json_out(
                        json!({
                            "name": s.name(),
                            "kind": kind.name(),
                            "points": sets(&s, &sp.primes),
                            "basic_opens": (0..s.size()).map(|a| {
                                let d: Vec<usize> = sp.basic_open(a).iter().collect();
                                (s.label(a).to_string(), d.iter().map(|&p| s.set_label(sp.primes[p])).collect::<Vec<_>>())
                            }).collect::<Vec<_>>(),
                            "t0": rep.t0,
                            "sober": rep.sober,
                            "spectral": rep.spectral,
                        }),
                        true,
                    )
                }
            })
        }
        Command::Frame { semiring, which, emit } => frame(&resolve(&semiring)?, which, emit),
        Command::Nucleus { semiring } => nucleus(&resolve(&semiring)?),
        Command::Reticulate { semiring, emit } => reticulate(&resolve(&semiring)?, emit),
        Command::Boolean { semiring } => boolean_cmd(&resolve(&semiring)?),
        Command::Zdc { semiring } => zdc(&resolve(&semiring)?),
        Command::Quantale { semiring } => quantale(&resolve(&semiring)?),
        Command::Adjoint { semiring, target } => adjoint(&resolve(&semiring)?, &resolve(&target)?),
        Command::Zar { semiring } => zar_cmd(&resolve(&semiring)?),
        Command::Check { path, out, timings } => check(&path, out.as_deref(), timings),
        Command::Corpus { dir } => {
            let n = write_corpus(&builtin(), &dir)?;
            Ok(text_out(format!("wrote {n} documents to {}\n", dir.display()), true))
        }
    }
}

/// Parse `argv` and run; usage errors exit 2, failed checks exit 1.
pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Output { code, stdout: text, stderr: String::new() }
            } else {
                Output { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(cli) {
        Ok(out) => out,
        Err(e) => Output { code: e.exit_code(), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}
