//! Modular decomposition of homogeneous relations.
//!
//! A homogeneous relation gives every element `x` an equivalence relation
//! `H_x` on the other elements; `x` *splits* `y` and `z` when they fall in
//! different classes of `H_x`. A module is a set that no outside element
//! splits. Standard relations of graphs, tournaments and 2-structures
//! recover ordinary graph modules, while other relations (connectivity,
//! distance) capture vertex sets such as 2-connected pieces.
//!
//! The crate provides:
//!
//! * [`relation`]: representations, constructors and induced relations;
//! * [`axioms`] and [`recognize`]: axiom checks and graph recognition;
//! * [`partition`] and [`modules`]: partition refinement, smallest module,
//!   maximal modules avoiding an element, primality;
//! * [`strong`]: enumeration of strong modules for arbitrary relations;
//! * [`factperm`]: the strong-module tree from a factoring permutation;
//! * [`good`]: the quadratic decomposition of good relations;
//! * [`oracle`]: exhaustive ground truth for small relations;
//! * [`document`] and [`cli`]: the tree text format and the command line.

pub mod axioms;
pub mod cli;
pub mod document;
pub mod error;
pub mod factperm;
pub mod family;
pub mod fixtures;
pub mod gen;
pub mod good;
pub mod graph_relations;
pub mod io;
pub mod modules;
pub mod oracle;
pub mod partition;
pub mod recognize;
pub mod relation;
pub mod strong;
pub mod tree;

pub use error::{Error, Result};
pub use family::{GeneralizedTree, SetFamily};
pub use relation::{Digraph, HomogeneousRelation, ListRelation, TwoStructure};
pub use tree::{DecompositionTree, NodeKind};
