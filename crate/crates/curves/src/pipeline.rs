//! Seeded attempts at constructing a curve, with per-gate logging.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use schreyer_core::resolution::BettiTable;

use crate::curve::{curve_from_module, CurveReport, HilbertRow};
use crate::hr_module::build_hr_module;
use crate::rank::MaximalRankReport;
use crate::recipe::ConstructionRecipe;
use crate::smooth::SmoothnessVerdict;
use crate::{curve_ring, CurveError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GateOutcome {
    pub gate: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl GateOutcome {
    fn pass(gate: &str) -> Self {
        Self {
            gate: gate.into(),
            passed: true,
            detail: None,
        }
    }

    fn fail(gate: &str, detail: String) -> Self {
        Self {
            gate: gate.into(),
            passed: false,
            detail: Some(detail),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AttemptLog {
    pub attempt: usize,
    pub seed: u64,
    pub gates: Vec<GateOutcome>,
}

impl AttemptLog {
    pub fn succeeded(&self) -> bool {
        self.gates.iter().all(|g| g.passed)
    }
}

#[derive(Clone, Debug)]
pub struct PipelineOutcome {
    pub attempts: Vec<AttemptLog>,
    pub report: Option<CurveReport>,
}

/// Serializable view of a curve report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveSummary {
    pub recipe: ConstructionRecipe,
    pub seed: u64,
    pub degree: i64,
    pub genus: i64,
    pub generators: Vec<String>,
    pub module_series: String,
    pub module_betti: BettiTable,
    pub curve_betti: BettiTable,
    pub curve_numerator: String,
    pub hilbert_table: Vec<HilbertRow>,
    pub saturation_steps: usize,
    pub smoothness: SmoothnessVerdict,
    pub maximal_rank: MaximalRankReport,
}

impl CurveReport {
    pub fn summary(&self) -> CurveSummary {
        CurveSummary {
            recipe: self.recipe.clone(),
            seed: self.seed,
            degree: self.degree,
            genus: self.genus,
            generators: self.generators.iter().map(|g| self.ring.format(g)).collect(),
            module_series: self.recipe.module_series.to_string(),
            module_betti: self.module_betti.clone(),
            curve_betti: self.curve_betti.clone(),
            curve_numerator: self.curve_numerator.to_string(),
            hilbert_table: self.hilbert_table.clone(),
            saturation_steps: self.saturation_steps,
            smoothness: self.smoothness,
            maximal_rank: self.maximal_rank.clone(),
        }
    }
}

/// One attempt with the recipe's own seed.
pub fn attempt(recipe: &ConstructionRecipe, gates: &mut Vec<GateOutcome>) -> Result<CurveReport, CurveError> {
    let ring = curve_ring(recipe.prime)?;
    let mut rng = ChaCha8Rng::seed_from_u64(recipe.seed);
    let module = build_hr_module(&ring, recipe, &mut rng).inspect_err(|e| gates.push(GateOutcome::fail("module", e.to_string())))?;
    gates.push(GateOutcome::pass("module"));
    let report = curve_from_module(&ring, &module, recipe, &mut rng)
        .inspect_err(|e| gates.push(GateOutcome::fail(e.gate(), e.to_string())))?;
    gates.push(GateOutcome::pass("embedding"));
    gates.push(GateOutcome::pass("degree_genus"));
    if report.smoothness == SmoothnessVerdict::Smooth {
        gates.push(GateOutcome::pass("smoothness"));
    } else {
        gates.push(GateOutcome::fail("smoothness", format!("{:?}", report.smoothness)));
    }
    Ok(report)
}

/// Runs attempts with seeds `seed, seed + 1, ...` until one passes every
/// gate, smoothness included.
pub fn run_pipeline(recipe: &ConstructionRecipe, attempts: usize) -> PipelineOutcome {
    let mut logs = Vec::new();
    for k in 0..attempts {
        let seed = recipe.seed.wrapping_add(k as u64);
        let mut gates = Vec::new();
        let result = attempt(&recipe.with_seed(seed), &mut gates);
        let log = AttemptLog {
            attempt: k,
            seed,
            gates,
        };
        let done = log.succeeded();
        logs.push(log);
        if let (true, Ok(report)) = (done, result) {
            return PipelineOutcome {
                attempts: logs,
                report: Some(report),
            };
        }
    }
    PipelineOutcome {
        attempts: logs,
        report: None,
    }
}

impl PipelineOutcome {
    pub fn into_result(self) -> Result<CurveReport, CurveError> {
        let n = self.attempts.len();
        self.report.ok_or(CurveError::Exhausted { attempts: n })
    }
}
