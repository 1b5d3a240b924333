//! Symbolic calculator for Dax-type invariants of properly embedded discs
//! with a common dual sphere in a 4-manifold.
//!
//! Discs are described by self-referential form data relative to a base disc
//! `D₀`. The invariant `φ_{D₀}` takes values in the additive group
//! ℤ[π₁(M) \ 1] modulo the Dax kernel, and comparisons of two discs return
//! one of `ISOTOPIC`, `NOT_ISOTOPIC` or `UNKNOWN`.
//!
//! ```
//! use daxcalc::{compare, parse_word, Outcome, PresetId, SrData};
//!
//! let m = PresetId::BoundaryConnectSum.instantiate();
//! let t = parse_word("t", &m.group).unwrap();
//! let v = compare(&SrData::sr_disc(1, t), &SrData::empty(), &m).unwrap();
//! assert_eq!(v.outcome, Outcome::NotIsotopic);
//! assert_eq!(v.certificate, "t + t^-1");
//! ```

pub mod cli;
pub mod disc;
pub mod document;
pub mod error;
pub mod group;
pub mod invariant;
pub mod kernel;
pub mod lattice;
pub mod pairing;
pub mod presets;
pub mod ring;
pub mod text;

pub use disc::{concat, negate_data, normalize, validate, ManifoldModel, SrData, SrDisc};
pub use error::{Error, Result};
pub use group::{compare_canonical, Factor, GroupElement, GroupSpec, Syllable};
pub use invariant::{compare, phi, Outcome, Rule, Verdict};
pub use kernel::{equal_mod_kernel, reduce, KernelSpec};
pub use pairing::{dax_value, spin_composition_value, DaxValue, DoublePoint, DoublePointList};
pub use presets::PresetId;
pub use ring::{dax_sum, RingElement};
pub use text::{parse_ringexpr, parse_word};
