use thiserror::Error;

use crate::certificate::Certificate;
use crate::graph::OrientedGraph;
use crate::iot;
use crate::irreflexive;
use crate::t2r::{self, WalkError};
use crate::target::{Mode, Target, Tournament};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecideError {
    #[error("no decider for {0}")]
    Unsupported(Target),
    /// A decider reached a state its construction rules exclude.
    #[error("internal contradiction in {problem}: {message}")]
    InternalContradiction { problem: String, message: String },
    #[error(transparent)]
    Walk(#[from] WalkError),
}

impl DecideError {
    pub fn internal(problem: impl Into<String>, message: impl Into<String>) -> Self {
        DecideError::InternalContradiction {
            problem: problem.into(),
            message: message.into(),
        }
    }
}

/// Runs the decider for `target` on `g`.
pub fn decide(target: Target, g: &OrientedGraph) -> Result<Certificate, DecideError> {
    use Mode::*;
    use Tournament::*;
    match (target.id, target.mode) {
        (T1, Ios) => Ok(irreflexive::decide_ios_t1(g)),
        (T2, Ios) => Ok(irreflexive::decide_ios_t2(g)),
        (C3, Ios) => Ok(irreflexive::decide_ios_c3(g)),
        (T3, Ios) => irreflexive::decide_ios_t3(g),
        (T1r, Ios) => Ok(irreflexive::decide_ios_t1r(g)),
        (T2r, Ios) => t2r::decide_ios_t2r(g),
        (T1r, Iot) => Ok(irreflexive::decide_iot_t1r(g)),
        (T2r, Iot) => iot::decide_iot_t2r(g),
        _ => Err(DecideError::Unsupported(target)),
    }
}
