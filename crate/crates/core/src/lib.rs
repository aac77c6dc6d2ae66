//! Exact computation in Burnside rings of finite permutation groups:
//! tables of marks, relation lattices in characteristic 0 and p, the
//! imprimitive sublattice generated by induction and inflation, and the
//! primitive quotient, together with classification checks against the
//! class-theoretic predictions.
//!
//! Everything is integer-exact: groups are fully enumerated permutation
//! groups, lattices are Hermite-reduced integer matrices, and abelian-group
//! invariants come from Smith normal forms.

pub mod axioms;
pub mod burnside;
pub mod cache;
pub mod catalog;
pub mod classes;
pub mod error;
pub mod group;
pub mod linalg;
pub mod perm;
pub mod prim;
pub mod quotient;
pub mod relations;
pub mod store;
pub mod subgroup;

pub use burnside::BurnsideElement;
pub use error::{Error, Result};
pub use group::{generate_group, generate_group_capped, FiniteGroup, GroupKey};
pub use linalg::IntMatrix;
pub use perm::Permutation;
pub use quotient::QuotientMap;
pub use relations::Characteristic;
pub use store::{GroupData, GroupStore, StoreConfig};
pub use subgroup::{Subgroup, SubgroupLattice};
