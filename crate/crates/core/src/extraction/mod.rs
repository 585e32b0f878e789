//! Constructive either/or procedures: each returns a ladder, a rooted
//! ladder, or a coloring certificate, and every payload is re-verified
//! before it is returned.

mod certificates;
mod rooted;
mod sequences;

use serde::Serialize;

use crate::colorings::{is_td2_coloring, Coloring};
use crate::error::Result;
use crate::graph::Graph;
use crate::minors::{verify_model, verify_rooted, verify_subdivision_model, LadderSubdivisionModel, MinorModel, RootedLadderModel};

pub use certificates::{chi_cc_refutation, ladder_or_td2_certificate, ladder_or_td2_certificate_with, CycleRefutation};
pub use rooted::{lk_or_rooted_lt, lk_or_rooted_lt_with, menger_threshold};
pub use sequences::{erdos_szekeres, longest_monotone, Monotone};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "payload", rename_all = "snake_case")]
pub enum ExtractionOutcome {
    /// An `L_k`-model, with the subdivision it came from when there is one.
    LadderMinor { model: MinorModel, subdivision: Option<LadderSubdivisionModel> },
    RootedModel(RootedLadderModel),
    BoundCertificate(Coloring),
    Undecided(String),
}

impl ExtractionOutcome {
    /// Re-runs the verifier matching the payload. Undecided outcomes carry
    /// nothing to check and count as verified.
    pub fn verify(&self, g: &Graph) -> Result<bool> {
        Ok(match self {
            ExtractionOutcome::LadderMinor { model, subdivision } => {
                verify_model(g, model) && subdivision.as_ref().is_none_or(|sm| verify_subdivision_model(g, sm))
            }
            ExtractionOutcome::RootedModel(m) => verify_rooted(g, m),
            ExtractionOutcome::BoundCertificate(c) => is_td2_coloring(g, c)?.is_valid(),
            ExtractionOutcome::Undecided(_) => true,
        })
    }

    pub fn is_undecided(&self) -> bool {
        matches!(self, ExtractionOutcome::Undecided(_))
    }

    /// Name of the variant, as used in serialized certificates.
    pub fn kind(&self) -> &'static str {
        match self {
            ExtractionOutcome::LadderMinor { .. } => "ladder_minor",
            ExtractionOutcome::RootedModel(_) => "rooted_model",
            ExtractionOutcome::BoundCertificate(_) => "bound_certificate",
            ExtractionOutcome::Undecided(_) => "undecided",
        }
    }
}
