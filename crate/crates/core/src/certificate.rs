//! Decision certificates: a colouring on YES, an obstruction with its
//! locally-injective homomorphism into the input on NO.

use serde::{Deserialize, Serialize};

use crate::graph::{Mapping, OrientedGraph};
use crate::iot::ComponentReport;
use crate::t2r::{Removal, Walk};
use crate::target::Target;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Yes,
    No,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Obstruction {
    /// Name of the obstruction family, e.g. `H3`, `C4`, `F` or `P`.
    pub family: String,
    pub graph: OrientedGraph,
    /// Locally-injective homomorphism of `graph` into the input graph.
    pub embedding: Mapping,
    /// The two forcing walks an obstruction was assembled from.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub walks: Vec<Walk>,
    /// Removal events along those walks, in log order.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub log: Vec<Removal>,
}

impl Obstruction {
    pub fn new(family: impl Into<String>, graph: OrientedGraph, embedding: Mapping) -> Self {
        Obstruction {
            family: family.into(),
            graph,
            embedding,
            walks: Vec::new(),
            log: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub target: Target,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub colouring: Option<Mapping>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub obstruction: Option<Obstruction>,
    /// Per-component classification, filled in by the iot decider.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub components: Vec<ComponentReport>,
    /// Notes about irregular intermediate structure; never affects soundness.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub diagnostics: Vec<String>,
}

impl Certificate {
    pub fn yes(target: Target, colouring: Mapping) -> Self {
        Certificate {
            target,
            verdict: Verdict::Yes,
            colouring: Some(colouring),
            obstruction: None,
            components: Vec::new(),
            diagnostics: Vec::new(),
        }
    }

    pub fn no(target: Target, obstruction: Obstruction) -> Self {
        Certificate {
            target,
            verdict: Verdict::No,
            colouring: None,
            obstruction: Some(obstruction),
            components: Vec::new(),
            diagnostics: Vec::new(),
        }
    }

    pub fn is_yes(&self) -> bool {
        self.verdict == Verdict::Yes
    }

    /// Family label of the obstruction, if any.
    pub fn family(&self) -> Option<&str> {
        self.obstruction.as_ref().map(|o| o.family.as_str())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }
}
