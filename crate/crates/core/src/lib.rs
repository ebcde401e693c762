//! Disjoint-cycle packing and degree-class theorem checking for small graphs.
//!
//! The crate is organised around an immutable bitset [`Graph`]:
//!
//! * [`graph`] and [`planarity`]: structural primitives (degree classes,
//!   contraction, joins, 2-cores, planarity).
//! * [`solvers`]: exact cycle packing, triangle packing, independence number
//!   and recognisers for the exceptional graphs.
//! * [`exchange`]: triangle-exchange machinery over a triangle packing.
//! * [`reduce`]: kernelization with certificate lifting.
//! * [`families`]: extremal and exceptional constructions.
//! * [`io`], [`enumerate`], [`scan`], [`theorems`]: graph6 / edge-list
//!   interchange, labeled enumeration and the theorem-checking harness.

pub mod enumerate;
pub mod error;
pub mod exchange;
pub mod families;
pub mod graph;
pub mod io;
pub mod planarity;
pub mod reduce;
pub mod scan;
pub mod solvers;
pub mod theorems;

pub use error::{Error, Result};
pub use graph::{DegreeClasses, Graph, Origin, Vertex, VertexMap};
pub use solvers::{CyclePacking, Limits, Triangle, TrianglePacking};
pub use theorems::{OpenQuestion, Report, TheoremPredicate};

