//! Structural decomposition and certified colouring of (C4, bull)-free and
//! (C4, hammer)-free graphs.
pub mod coloring;
pub mod decompose;
pub mod generate;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod patterns;
pub mod verify;

pub use coloring::{Coloring, ColoringError, OracleBudget};
pub use decompose::{BlowupCertificate, DecomposeError, DecompositionTree, Variant};
pub use graph::{Graph, GraphError, InducedSubgraph, VertexSet, MAX_VERTICES};
pub use graph6::Graph6Error;
pub use patterns::{HoleWitness, Pattern};
pub use verify::{CheckEntry, VerificationReport};
