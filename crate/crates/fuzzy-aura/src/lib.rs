//! Finite-universe engine for fuzzy aura topological spaces: the min/max
//! set lattice, Chang topologies, aura closure/interior operators,
//! generalized open-set classes, continuity, separation axioms, rough
//! approximations, and the FA-MCDM decision pipeline.

pub mod aura;
pub mod error;
pub mod io;
pub mod lattice;
pub mod mcdm;
pub mod morphisms;
pub mod openness;
pub mod repro;
pub mod rough;
pub mod separation;
pub mod topology;

pub use aura::{AuraSpace, Iterations, ScopeFunction, ScopeProfile, ValidationMode};
pub use error::{Error, Result};
pub use lattice::{FuzzySet, Universe, EPSILON};
pub use topology::{FuzzyTopology, Topology, Verdict};
