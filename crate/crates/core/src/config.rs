use std::sync::OnceLock;

/// Size bounds for exhaustive enumerations.
///
/// Every bound can be overridden through an environment variable read once
/// per process: `RIGFRAME_ENUM_BOUND`, `RIGFRAME_SWEEP_BOUND`,
/// `RIGFRAME_SUPPORT_TUPLES`, `RIGFRAME_COVER_SET`, `RIGFRAME_HOM_SOURCE`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    /// Largest carrier whose ideals are enumerated.
    pub enumeration: usize,
    /// Largest carrier on which the exhaustive subset sweep runs.
    pub sweep: usize,
    /// Longest generator tuple tested by the support axiom on covers.
    pub support_tuple: usize,
    /// Largest generating set tested by the cover equivalence.
    pub cover_set: usize,
    /// Largest source semiring for exhaustive hom-set counting.
    pub hom_source: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { enumeration: 16, sweep: 14, support_tuple: 3, cover_set: 3, hom_source: 5 }
    }
}

impl Bounds {
    pub fn from_env() -> Self {
        fn read(var: &str, default: usize) -> usize {
            std::env::var(var).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(default)
        }
        let d = Bounds::default();
        Bounds {
            enumeration: read("RIGFRAME_ENUM_BOUND", d.enumeration),
            sweep: read("RIGFRAME_SWEEP_BOUND", d.sweep),
            support_tuple: read("RIGFRAME_SUPPORT_TUPLES", d.support_tuple),
            cover_set: read("RIGFRAME_COVER_SET", d.cover_set),
            hom_source: read("RIGFRAME_HOM_SOURCE", d.hom_source),
        }
    }

    /// Process-wide bounds (environment overrides applied on first use).
    pub fn current() -> &'static Bounds {
        static BOUNDS: OnceLock<Bounds> = OnceLock::new();
        BOUNDS.get_or_init(Bounds::from_env)
    }
}
