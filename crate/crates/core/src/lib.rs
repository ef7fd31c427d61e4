//! Permutizers, permutability and ℙ-subnormality in finite permutation
//! groups.
//!
//! Groups are given by permuting generators ([`PermGroup`]) and enumerated
//! into an [`Ambient`], inside which subgroups are bitsets ([`Subgroup`]).
//! On top of that sit the subgroup-lattice machinery ([`structure`]),
//! permutizers ([`permutability`]), prime-index chains ([`chains`]), group
//! class predicates ([`classify`]) and a catalog of small groups
//! ([`catalog`]).
//!
//! ```
//! use permutizer::{catalog, permutability, Ambient, Subgroup};
//!
//! let s4 = Ambient::new(catalog::by_name("S4")?)?;
//! let g = Subgroup::whole(&s4);
//! let p = catalog::resolve_subgroup(&g, "sylow:2")?;
//! assert!(permutability::is_strongly_permutable(&g, &p)?.holds);
//! assert!(!permutability::is_quasinormal(&g, &p)?);
//! # Ok::<(), permutizer::Error>(())
//! ```

pub mod ambient;
pub mod catalog;
pub mod chains;
pub mod classify;
pub mod elements;
pub mod error;
pub mod group;
pub mod perm;
pub mod permutability;
pub mod structure;
pub mod subgroup;
pub mod verify;

pub use ambient::{Ambient, Budget, ElementId};
pub use chains::{ChainDefect, SubnormalChain};
pub use classify::{ClassificationReport, SchmidtStructure};
pub use elements::{ElementSet, Fingerprint};
pub use error::{Error, Result};
pub use group::{group_from_generators, PermGroup, StabChain, DEFAULT_ENUMERATION_BOUND};
pub use perm::{compose, element_order, Permutation};
pub use permutability::{PermutizerReport, StrongPermVerdict};
pub use structure::{PrimeSet, QuotientRep, SubgroupLattice};
pub use subgroup::Subgroup;
