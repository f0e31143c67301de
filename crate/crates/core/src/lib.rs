//! Locally-injective oriented colouring: deciders with certificates for
//! homomorphisms to the small tournaments, a brute-force oracle, and a
//! decider-independent verifier.

pub mod certificate;
pub mod decide;
pub mod enumerate;
pub mod format;
pub mod graph;
pub mod iot;
pub mod irreflexive;
pub mod named;
pub mod oracle;
pub mod random;
pub mod subgraph;
pub mod sweep;
pub mod t2r;
mod t3;
pub mod target;
pub mod verify;

pub use certificate::{Certificate, Obstruction, Verdict};
pub use decide::{decide, DecideError};
pub use graph::{GraphError, Mapping, OrientedGraph, Vertex};
pub use target::{Mode, Target, Tournament};
pub use verify::{verify, VerificationReport, VerifyError};
