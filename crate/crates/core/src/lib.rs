//! Exact combinatorics of fully-packed loops, link patterns and the dense
//! O(1) loop model.

pub mod error;
pub mod fpl;
pub mod groundstate;
pub mod gyration;
pub mod identities;
pub mod lattice;
pub mod random;
pub mod relations;
pub mod linkpat;

pub use error::{Error, Result};
pub use linkpat::{catalan, rotation_classes, LinkPattern, LpVector, Operator, RotationClass};
