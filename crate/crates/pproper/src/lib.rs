//! Product-proper and sum-proper list edge-labellings of graphs.
//!
//! A labelling assigns a rational to every edge; a vertex is coloured by
//! the sum or product of its incident labels, and the labelling is proper
//! when adjacent vertices get different colours. The crate bundles an
//! exhaustive solver, constructive labellers that work for every list
//! assignment of a given size on several graph classes, polynomial
//! certificates, and generators of infeasible instances.

pub mod generators;
pub mod graph;
pub mod io;
pub mod cn;
pub mod adversary;
pub mod bounds;
pub mod constructive;
pub mod label;
pub mod solver;
pub mod survey;

pub use graph::{parse_edge_list, Edge, Graph, Vertex};
pub use label::{check_proper, strip_zero, Label, Labelling, ListAssignment, Mode, Rational};
