//! Random space curves of prescribed degree and genus, built from finite
//! length modules over a prime field, and a sampler for artinian Gorenstein
//! algebras through apolarity.

pub mod curve;
pub mod gorenstein;
pub mod graded;
pub mod hr_module;
pub mod pipeline;
pub mod rank;
pub mod recipe;
pub mod smooth;

use schreyer_core::groebner::GroebnerError;
use schreyer_core::resolution::ResolutionError;
use schreyer_core::{MonomialOrder, PrimeField, Ring};
use thiserror::Error;

pub use curve::{curve_from_module, CurveReport, HilbertRow};
pub use gorenstein::{apolar_ideal, gorenstein_experiment, GorensteinReport};
pub use hr_module::{build_hr_module, HartshorneRaoModule};
pub use pipeline::{run_pipeline, AttemptLog, PipelineOutcome};
pub use rank::{maximal_rank_check, MaximalRankReport};
pub use recipe::{ConstructionRecipe, ModuleShape, DEFAULT_PRIME};
pub use smooth::{smoothness_check, SmoothnessVerdict};

#[derive(Debug, Error)]
pub enum CurveError {
    #[error("degenerate sample: {0}")]
    DegenerateSample(String),
    #[error("embedding failed: {0}")]
    EmbeddingFailure(String),
    #[error("verification failed: {0}")]
    VerificationFailure(String),
    #[error("no attempt succeeded after {attempts} attempts")]
    Exhausted { attempts: usize },
    #[error("unsupported recipe: {0}")]
    UnsupportedRecipe(String),
    #[error(transparent)]
    Resolution(#[from] ResolutionError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}

impl CurveError {
    /// Name of the gate that produced the error.
    pub fn gate(&self) -> &'static str {
        match self {
            CurveError::DegenerateSample(_) => "sample",
            CurveError::EmbeddingFailure(_) => "embedding",
            CurveError::VerificationFailure(_) => "verification",
            CurveError::Exhausted { .. } => "attempts",
            CurveError::UnsupportedRecipe(_) => "recipe",
            CurveError::Resolution(_) | CurveError::Groebner(_) => "computation",
        }
    }
}

/// `F_p[x, y, z, w]` with degrevlex.
pub fn curve_ring(p: u32) -> Result<Ring<PrimeField>, CurveError> {
    let field = PrimeField::new(p as u64).map_err(|e| CurveError::UnsupportedRecipe(e.to_string()))?;
    Ring::new(field, &["x", "y", "z", "w"], MonomialOrder::DegRevLex)
        .map_err(|e| CurveError::UnsupportedRecipe(e.to_string()))
}
