//! Finite commutative semirings, their ideals and spectra, the frames of
//! radical and k-radical ideals, supports, and k-ideal quantales.

pub mod bits;
pub mod config;
pub mod error;
pub mod frames;
pub mod hom;
pub mod ideals;
pub mod lattice;
pub mod quantale;
pub mod semiring;
pub mod space;
pub mod spectra;
pub mod support;

pub use bits::ElemSet;
pub use config::Bounds;
pub use error::{Error, Result};
pub use hom::{enumerate_homs, validate_hom, SemiringHom};
pub use semiring::{build_named, structural_profile, validate_semiring, FiniteSemiring, Flags, Profile, RawTables};
