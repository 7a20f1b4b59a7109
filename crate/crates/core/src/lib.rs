//! Pattern-base management over concept graphs.
//!
//! A collection of formal concepts is stored as the Hasse diagram of the
//! concept order ([`lattice::ConceptGraph`]) and queried with selection and
//! projection operators ([`algebra`]) whose results are again concept
//! graphs. Brute-force reference implementations live in [`oracle`].

pub mod algebra;
pub mod bitset;
pub mod cli;
pub mod dataset;
pub mod error;
pub mod fixtures;
pub mod io;
pub mod lattice;
pub mod oracle;

pub use bitset::BitSet;
pub use dataset::{AttrSet, BiSet, Database, Names, ObjSet, Universe};
pub use error::{Error, Result};
pub use lattice::{ConceptGraph, EdgeLabel, IntegrityReport, Node, VertexId, BOTTOM, TOP};
pub use oracle::ConceptCollection;
