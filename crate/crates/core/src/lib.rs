//! Fusion rings, their free products, and finite certificates for the
//! structure of the annular algebra of a free product of fusion categories.
//!
//! Everything works at the level of Grothendieck rings: simple objects are
//! labels or reduced alternating words, and hom spaces are known only through
//! their dimensions.

pub mod annular;
pub mod cyclic;
pub mod error;
pub mod free_product;
pub mod fusion;
pub mod gallery;
pub mod ncp;
pub mod report;
pub mod sum;
pub mod word;

pub use cyclic::CyclicClass;
pub use error::{Error, Result};
pub use free_product::{FreeProduct, WordDims, WordSum};
pub use fusion::{Axiom, FusionRing, Label, RingSpec, ValidationReport, Violation, DEFAULT_FP_TOL};
pub use report::{Counterexample, Status, Verdict};
pub use sum::{hom_dim, SimpleSum};
pub use word::{Letter, Side, Word, WordFilter, WordType};
