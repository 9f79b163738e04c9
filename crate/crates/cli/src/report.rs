//! JSON projections of library results.

use serde::Serialize;
use tgain::theorems::harness::SuiteReport;
use tgain::theorems::{BoundCheckResult, ClassifierMode, DecompositionResult};
use tgain::GainGraphF64;

#[derive(Debug, Serialize)]
pub struct InstanceJson {
    pub n: usize,
    /// `[u, v, re, im]` with the gain on `u -> v`, `u < v`.
    pub edges: Vec<(usize, usize, f64, f64)>,
}

impl InstanceJson {
    pub fn new(phi: &GainGraphF64) -> Self {
        let edges = phi.graph().edges().iter().zip(phi.gains()).map(|(&(u, v), g)| (u, v, g.re, g.im)).collect();
        Self { n: phi.n(), edges }
    }
}

#[derive(Debug, Serialize)]
pub struct CheckJson {
    pub name: String,
    pub lhs: f64,
    pub rhs: f64,
    pub relation: String,
    pub holds: bool,
    pub slack: f64,
    pub equality: bool,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classifier: Option<ClassifierJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct ClassifierJson {
    pub description: String,
    pub fired: bool,
    pub mode: &'static str,
}

impl From<&BoundCheckResult> for CheckJson {
    fn from(c: &BoundCheckResult) -> Self {
        Self {
            name: c.name.clone(),
            lhs: c.lhs,
            rhs: c.rhs,
            relation: c.relation.to_string(),
            holds: c.holds,
            slack: c.slack,
            equality: c.equality,
            passed: c.passed(),
            classifier: c.classifier.as_ref().map(|v| ClassifierJson {
                description: v.description.clone(),
                fired: v.fired,
                mode: match v.mode {
                    ClassifierMode::Iff => "iff",
                    ClassifierMode::Implies => "implies",
                },
            }),
            detail: c.detail.clone(),
            skipped: c.skipped.clone(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct PieceJson {
    pub matching_edge: (usize, usize),
    pub shape: String,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Debug, Serialize)]
pub struct DecompositionJson {
    pub moves: usize,
    pub pieces: Vec<PieceJson>,
}

impl From<&DecompositionResult> for DecompositionJson {
    fn from(d: &DecompositionResult) -> Self {
        let pieces = d
            .pieces
            .iter()
            .map(|p| PieceJson { matching_edge: p.matching_edge, shape: p.shape.to_string(), edges: p.edges.clone() })
            .collect();
        Self { moves: d.moves, pieces }
    }
}

#[derive(Debug, Serialize)]
pub struct CoulsonJson {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub evaluations: usize,
    pub tolerance: f64,
    pub eigenvalue_energy: f64,
}

/// One document per single-graph command; absent fields are omitted.
#[derive(Debug, Default, Serialize)]
pub struct ReportDocument {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instance: Option<InstanceJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub energy: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertex_energies: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectral_radius: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub char_poly_method: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub char_poly: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matching_poly: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matching_number: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub balanced: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub antibalanced: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coulson: Option<CoulsonJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checks: Option<Vec<CheckJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<DecompositionJson>,
}

impl ReportDocument {
    pub fn with_instance(phi: &GainGraphF64) -> Self {
        Self { instance: Some(InstanceJson::new(phi)), ..Self::default() }
    }

    pub fn checks_pass(&self) -> bool {
        self.checks.as_ref().is_none_or(|cs| cs.iter().all(|c| c.passed))
    }
}

#[derive(Debug, Serialize)]
pub struct FailureJson {
    pub instance: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub check: Option<CheckJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct VerifyJson {
    pub suite: String,
    pub seed: u64,
    pub count: usize,
    pub instances: usize,
    pub checks: usize,
    pub passed: bool,
    pub failures: Vec<FailureJson>,
}

impl From<&SuiteReport> for VerifyJson {
    fn from(r: &SuiteReport) -> Self {
        let failures = r
            .failures()
            .into_iter()
            .map(|(inst, check)| FailureJson {
                instance: inst.label.clone(),
                check: check.map(CheckJson::from),
                error: if check.is_none() { inst.error.clone() } else { None },
            })
            .collect();
        Self {
            suite: r.suite.to_string(),
            seed: r.seed,
            count: r.count,
            instances: r.instances.len(),
            checks: r.check_count(),
            passed: r.passed(),
            failures,
        }
    }
}
