//! Numerical checks of energy bounds for gain graphs, each paired with a
//! structural classifier for its equality case, plus the constructions the
//! checks rely on.

pub mod decomposition;
pub mod harness;

use std::fmt;

use num_complex::Complex;
use thiserror::Error;

use crate::energy_integral::{matching_energy, QuadratureError};
use crate::gain::{
    disjoint_cycles, is_antibalanced, is_balanced, unique_cycle, with_cycle_gain, with_cycle_gains, GainError,
    GainGraph,
};
use crate::graph::{double_star, maximum_matching, named_family, stats, Family, GraphError, SimpleGraph};
use crate::polynomials::PolynomialError;
use crate::scalar::unit;
use crate::spectral::{energy, graph_spectrum, SpectralError};

pub use decomposition::{classify_piece, decompose_by_matching, verify_decomposition, DecompositionResult, Piece, PieceShape};

/// Two quantities closer than this count as equal.
pub const EQUALITY_TOL: f64 = 1e-7;
/// Slack allowed on the bound side of an inequality.
pub const INEQUALITY_TOL: f64 = 1e-8;
/// Energy gap required between the two witness gain graphs.
pub const WITNESS_GAP: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TheoremError {
    #[error("matching is not maximum")]
    MatchingNotMaximum,
    #[error("decomposition did not settle after {moves} moves")]
    DecompositionStalled { moves: usize },
    #[error("piece around {matching_edge:?} is neither a double star nor a one-triangle book")]
    BadPieceShape { matching_edge: (usize, usize) },
    #[error("graph has no cycles")]
    NoCycles,
    #[error("at least 8 samples are required, got {0}")]
    TooFewSamples(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Gain(#[from] GainError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Polynomial(#[from] PolynomialError),
    #[error(transparent)]
    Quadrature(#[from] QuadratureError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    AtLeast,
    AtMost,
    Less,
    Greater,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::AtLeast => ">=",
            Relation::AtMost => "<=",
            Relation::Less => "<",
            Relation::Greater => ">",
        })
    }
}

/// How a structural classifier relates to numeric equality.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassifierMode {
    /// Fires exactly when equality holds.
    Iff,
    /// Firing forces equality; equality alone says nothing.
    Implies,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClassifierVerdict {
    pub fired: bool,
    pub description: String,
    pub mode: ClassifierMode,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundCheckResult {
    pub name: String,
    pub lhs: f64,
    pub rhs: f64,
    pub relation: Relation,
    pub holds: bool,
    /// `lhs - rhs`.
    pub slack: f64,
    pub equality: bool,
    pub classifier: Option<ClassifierVerdict>,
    pub detail: Option<String>,
    /// Reason the check does not apply to this instance.
    pub skipped: Option<String>,
}

impl BoundCheckResult {
    pub fn new(name: impl Into<String>, lhs: f64, rhs: f64, relation: Relation) -> Self {
        let slack = lhs - rhs;
        let equality = slack.abs() <= EQUALITY_TOL;
        let holds = match relation {
            Relation::AtLeast => slack >= -INEQUALITY_TOL,
            Relation::AtMost => slack <= INEQUALITY_TOL,
            Relation::Less => slack < 0.0 && !equality,
            Relation::Greater => slack > 0.0 && !equality,
        };
        Self {
            name: name.into(),
            lhs,
            rhs,
            relation,
            holds,
            slack,
            equality,
            classifier: None,
            detail: None,
            skipped: None,
        }
    }

    pub fn skipped(name: impl Into<String>, reason: impl Into<String>) -> Self {
        let mut r = Self::new(name, 0.0, 0.0, Relation::AtLeast);
        r.equality = false;
        r.skipped = Some(reason.into());
        r
    }

    pub fn classified(mut self, fired: bool, description: impl Into<String>, mode: ClassifierMode) -> Self {
        self.classifier = Some(ClassifierVerdict { fired, description: description.into(), mode });
        self
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    /// Whether the classifier agrees with the numeric equality flag.
    pub fn classifier_consistent(&self) -> bool {
        match &self.classifier {
            None => true,
            Some(c) => match c.mode {
                ClassifierMode::Iff => c.fired == self.equality,
                ClassifierMode::Implies => !c.fired || self.equality,
            },
        }
    }

    pub fn passed(&self) -> bool {
        self.skipped.is_some() || (self.holds && self.classifier_consistent())
    }
}

impl fmt::Display for BoundCheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(reason) = &self.skipped {
            return write!(f, "{}: skipped ({reason})", self.name);
        }
        write!(
            f,
            "{}: {:.10} {} {:.10} [{}]",
            self.name,
            self.lhs,
            self.relation,
            self.rhs,
            if self.passed() { "ok" } else { "FAIL" }
        )?;
        if let Some(c) = &self.classifier {
            write!(f, " {}={}", c.description, c.fired)?;
        }
        if let Some(d) = &self.detail {
            write!(f, " ({d})")?;
        }
        Ok(())
    }
}

fn graph_energy(g: &SimpleGraph) -> Result<f64, TheoremError> {
    Ok(graph_spectrum::<f64>(g)?.energy())
}

fn graph_radius(g: &SimpleGraph) -> Result<f64, TheoremError> {
    Ok(graph_spectrum::<f64>(g)?.spectral_radius())
}

/// Outcome of the balanced-complete-bipartite test.
#[derive(Debug, Clone, PartialEq)]
pub struct BipartiteVerdict {
    pub verdict: bool,
    pub parts: Option<(usize, usize)>,
    pub balanced: bool,
    /// Eigenvalues above `EQUALITY_TOL`, counted only for bipartite graphs.
    pub positive_eigenvalues: Option<usize>,
    /// On bipartite graphs, whether "exactly one positive eigenvalue" agrees
    /// with the structural verdict.
    pub spectral_agrees: Option<bool>,
}

/// Complete bipartite underlying graph with balanced gains.
pub fn is_balanced_complete_bipartite(phi: &GainGraph<f64>) -> Result<BipartiteVerdict, TheoremError> {
    let parts = phi.graph().complete_bipartite_parts();
    let balanced = is_balanced(phi).balanced;
    let verdict = parts.is_some() && balanced;
    let (positive_eigenvalues, spectral_agrees) = if phi.graph().bipartition().is_some() && phi.graph().is_connected() {
        let spec = crate::spectral::eigensystem(&crate::spectral::adjacency(phi))?;
        let positive = spec.eigenvalues.iter().filter(|&&l| l > EQUALITY_TOL).count();
        (Some(positive), Some((positive == 1) == verdict))
    } else {
        (None, None)
    };
    Ok(BipartiteVerdict { verdict, parts, balanced, positive_eigenvalues, spectral_agrees })
}

/// Spectral facts about gain graphs in general: radius domination, the
/// `sqrt m` bound, the clique bound on `lambda_1`, spectral characterisation
/// of balance, bipartite symmetry, and monotonicity under induced subgraphs.
pub fn check_spectral_basics(phi: &GainGraph<f64>) -> Result<Vec<BoundCheckResult>, TheoremError> {
    let g = phi.graph();
    let mut out = Vec::new();
    let spec = crate::spectral::eigensystem(&crate::spectral::adjacency(phi))?;
    let base = graph_spectrum::<f64>(g)?;
    let balanced = is_balanced(phi).balanced;
    let anti = is_antibalanced(phi);

    if g.is_connected() && g.m() > 0 {
        out.push(
            BoundCheckResult::new("gain-radius-vs-underlying", spec.spectral_radius(), base.spectral_radius(), Relation::AtMost)
                .classified(balanced || anti, "balanced or antibalanced", ClassifierMode::Iff),
        );
    } else {
        out.push(BoundCheckResult::skipped("gain-radius-vs-underlying", "disconnected or edgeless"));
    }

    let lambda1 = base.eigenvalues.last().copied().unwrap_or(0.0);
    // false without the triangle-free hypothesis: K3 has lambda_1 = 2 > sqrt 3
    if g.girth().is_none_or(|r| r > 3) {
        out.push(BoundCheckResult::new("largest-eigenvalue-vs-sqrt-edges", lambda1, (g.m() as f64).sqrt(), Relation::AtMost));
    } else {
        out.push(BoundCheckResult::skipped("largest-eigenvalue-vs-sqrt-edges", "graph has a triangle"));
    }

    let isolated = (0..g.n()).any(|v| g.degree(v) == 0);
    if g.m() > 0 && !isolated && g.n() <= crate::graph::CLIQUE_CAP {
        let omega = g.clique_number()? as f64;
        let rhs = 2.0 * (omega - 1.0) / omega * g.m() as f64;
        // a complete k-partite graph has clique number k
        let fired = g
            .complete_multipartite_parts()
            .is_some_and(|parts| parts.len() == 2 || parts.iter().all(|&p| p == parts[0]));
        out.push(
            BoundCheckResult::new("largest-eigenvalue-vs-clique-number", lambda1 * lambda1, rhs, Relation::AtMost)
                .classified(fired, "complete bipartite or complete regular multipartite", ClassifierMode::Iff),
        );
    } else {
        out.push(BoundCheckResult::skipped("largest-eigenvalue-vs-clique-number", "isolated vertices or no edges"));
    }

    let diff = spec
        .eigenvalues
        .iter()
        .zip(&base.eigenvalues)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    out.push(
        BoundCheckResult::new("spectrum-vs-underlying", diff, 0.0, Relation::AtLeast)
            .classified(balanced, "balanced", ClassifierMode::Iff),
    );

    if g.bipartition().is_some() {
        let n = spec.n();
        let asym = (0..n).map(|j| (spec.eigenvalues[j] + spec.eigenvalues[n - 1 - j]).abs()).fold(0.0, f64::max);
        out.push(BoundCheckResult::new("bipartite-spectral-symmetry", asym, 0.0, Relation::AtMost));
    }

    let total = spec.energy();
    let n = g.n();
    let subsets: Vec<Vec<usize>> = if n <= 10 {
        (1u32..(1 << n) - 1).map(|mask| (0..n).filter(|&v| mask & (1 << v) != 0).collect()).collect()
    } else {
        (0..n).map(|skip| (0..n).filter(|&v| v != skip).collect()).collect()
    };
    let mut worst = 0.0f64;
    for s in subsets {
        worst = worst.max(energy(&phi.induced(&s))?.energy);
    }
    out.push(BoundCheckResult::new("induced-subgraph-energy", worst, total, Relation::AtMost));
    Ok(out)
}

/// Lower bounds on vertex energies and total energy through `rho(G)` and
/// the minimum degree.
pub fn check_energy_lower_bounds(phi: &GainGraph<f64>) -> Result<Vec<BoundCheckResult>, TheoremError> {
    let g = phi.graph();
    let names = ["vertex-energy", "vertex-energy-all-tight", "energy-vs-edges-over-radius", "energy-vs-twice-min-degree"];
    if !g.is_connected() || g.m() == 0 {
        return Ok(names.iter().map(|n| BoundCheckResult::skipped(*n, "needs a connected graph with an edge")).collect());
    }
    let report = energy(phi)?;
    let rho = graph_radius(g)?;
    let bcb = is_balanced_complete_bipartite(phi)?;
    let st = stats(g)?;
    let label = "balanced complete bipartite";

    let mut out = Vec::new();
    let mut max_slack = f64::NEG_INFINITY;
    for v in 0..g.n() {
        let rhs = g.degree(v) as f64 / rho;
        let r = BoundCheckResult::new(format!("vertex-energy[{v}]"), report.vertex_energies[v], rhs, Relation::AtLeast)
            .classified(bcb.verdict, label, ClassifierMode::Implies);
        max_slack = max_slack.max(r.slack);
        out.push(r);
    }
    out.push(
        BoundCheckResult::new(names[1], max_slack, 0.0, Relation::AtLeast).classified(bcb.verdict, label, ClassifierMode::Iff),
    );
    out.push(
        BoundCheckResult::new(names[2], report.energy, 2.0 * g.m() as f64 / rho, Relation::AtLeast)
            .classified(bcb.verdict, label, ClassifierMode::Iff),
    );
    if st.triangle_free {
        let d = st.min_degree;
        let fired = bcb.verdict && bcb.parts == Some((d, d));
        out.push(
            BoundCheckResult::new(names[3], report.energy, 2.0 * d as f64, Relation::AtLeast).classified(
                fired,
                format!("balanced K_{{{d},{d}}}"),
                ClassifierMode::Iff,
            ),
        );
    } else {
        out.push(BoundCheckResult::skipped(names[3], "graph has a triangle"));
    }
    Ok(out)
}

/// Energy of the double star that maximises energy among trees with
/// maximum edge degree `delta_e`, in closed form.
pub fn t1_energy_closed_form(delta_e: usize) -> f64 {
    let d = delta_e as f64;
    if delta_e % 2 == 0 {
        2.0 * (2.0 * d + 1.0).sqrt()
    } else {
        let b = 2.0 * (d + 1.0);
        (b + 2.0 * b.sqrt()).sqrt() + (b - 2.0 * b.sqrt()).sqrt()
    }
}

/// Matching-number upper bound for maximum edge degree `delta_e`.
pub fn matching_bound(mu: usize, delta_e: usize) -> f64 {
    mu as f64 * t1_energy_closed_form(delta_e)
}

/// Whether every component with an edge is a copy of `P_k`.
fn nontrivial_components_are_paths(g: &SimpleGraph, k: usize) -> bool {
    g.components().iter().filter(|c| c.len() > 1).all(|c| {
        let sub = g.induced(c);
        c.len() == k && sub.m() == k - 1 && sub.is_connected()
    })
}

/// Upper bounds through the matching number and maximum edge degree, with
/// the piecewise comparisons behind them replayed on the decomposition.
pub fn check_matching_bounds(phi: &GainGraph<f64>) -> Result<Vec<BoundCheckResult>, TheoremError> {
    let g = phi.graph();
    if g.m() == 0 {
        return Ok(vec![BoundCheckResult::skipped("matching-bound", "no edges")]);
    }
    let st = stats(g)?;
    let delta_e = st.max_edge_degree;
    let matching = maximum_matching(g);
    let mu = matching.size();
    let e = energy(phi)?.energy;
    let mut out = Vec::new();

    let (path_len, parity) = if delta_e % 2 == 0 { (2, "even") } else { (3, "odd") };
    out.push(
        BoundCheckResult::new(format!("matching-bound-{parity}"), e, matching_bound(mu, delta_e), Relation::AtMost)
            .classified(
                nontrivial_components_are_paths(g, path_len),
                format!("copies of P{path_len} plus isolated vertices"),
                ClassifierMode::Iff,
            )
            .with_detail(format!("mu={mu}, max edge degree={delta_e}")),
    );
    out.push(
        BoundCheckResult::new(
            "matching-bound-weak",
            e,
            2.0 * mu as f64 * (2.0 * delta_e as f64 + 1.0).sqrt(),
            Relation::AtMost,
        )
        .classified(nontrivial_components_are_paths(g, 2), "copies of P2 plus isolated vertices", ClassifierMode::Iff),
    );

    let decomposition = decompose_by_matching(g, &matching)?;
    let violation = verify_decomposition(g, &decomposition, mu).err();
    let mut inv = BoundCheckResult::new("decomposition-invariants", violation.is_some() as u8 as f64, 0.0, Relation::AtMost);
    if let Some(msg) = violation {
        inv = inv.with_detail(msg);
    }
    out.push(inv);

    let t1 = graph_energy(&named_family(Family::TreeT1(delta_e))?)?;
    let mut piece_sum = 0.0;
    for (piece, indices) in decomposition.pieces.iter().zip(decomposition.edge_indices(g)) {
        let piece_energy = energy(&phi.edge_subgraph(&indices))?.energy;
        piece_sum += piece_energy;
        let shape = piece.shape;
        let (p, q) = (shape.p(), shape.q());
        match shape {
            PieceShape::Book { .. } => {
                out.push(
                    BoundCheckResult::new("book-below-double-star", piece_energy, graph_energy(&double_star(p + 1, q + 1))?, Relation::Less)
                        .with_detail(shape.to_string()),
                );
                out.push(BoundCheckResult::new("book-below-t1", piece_energy, t1, Relation::Less).with_detail(shape.to_string()));
            }
            PieceShape::DoubleStar { .. } => {
                let is_t1 = p.min(q) == delta_e / 2 && p.max(q) == delta_e.div_ceil(2);
                out.push(
                    BoundCheckResult::new("double-star-vs-t1", piece_energy, t1, Relation::AtMost)
                        .classified(is_t1, "piece is T1", ClassifierMode::Iff)
                        .with_detail(shape.to_string()),
                );
            }
        }
    }
    out.push(BoundCheckResult::new("energy-subadditive-over-pieces", e, piece_sum, Relation::AtMost));
    Ok(out)
}

/// `G_{1,1,2}` with a single `-1` gain compared against `T_{3,3}`: with the
/// `-1` on a triangle side the energy is not below that of `T_{3,3}`; on the
/// base or a pendant edge it is.
pub fn book_counterexample() -> Result<Vec<BoundCheckResult>, TheoremError> {
    let g = crate::graph::book(1, 1, 2);
    let target = graph_energy(&double_star(3, 3))?;
    let mut out = Vec::new();
    for &(u, v) in g.edges() {
        let phi = GainGraph::from_directed(g.clone(), [(u, v, Complex::new(-1.0, 0.0))])?;
        let e = energy(&phi)?.energy;
        // base edge is (0, 1), apexes 2 and 3, pendants 4 and 5
        let side = (u, v) != (0, 1) && v <= 3;
        let check = if side {
            BoundCheckResult::new("two-page-book-not-below-double-star", e, target, Relation::AtLeast)
        } else {
            BoundCheckResult::new("two-page-book-below-double-star", e, target, Relation::Less)
        };
        out.push(check.with_detail(format!("-1 on ({u}, {v})")));
    }
    Ok(out)
}

/// For every `p + q + 2 <= delta_e <= max_delta`, books `G_{p,q,1}` under
/// `gains_per_shape` seeded gains stay strictly below `T1`, and double stars
/// `T_{p,q}` with `p + q <= delta_e` stay at or below it, reaching it only
/// when they are `T1`.
pub fn t1_comparison_sweep(max_delta: usize, gains_per_shape: u64, seed: u64) -> Result<Vec<BoundCheckResult>, TheoremError> {
    let mut out = Vec::new();
    for delta_e in 0..=max_delta {
        let t1 = graph_energy(&named_family(Family::TreeT1(delta_e))?)?;
        for p in 0..=delta_e {
            for q in p..=delta_e - p {
                let tree = graph_energy(&double_star(p, q))?;
                let is_t1 = p == delta_e / 2 && q == delta_e.div_ceil(2);
                out.push(
                    BoundCheckResult::new("double-star-vs-t1", tree, t1, Relation::AtMost)
                        .classified(is_t1, "piece is T1", ClassifierMode::Iff)
                        .with_detail(format!("T_{{{p},{q}}}, max edge degree {delta_e}")),
                );
                if p + q + 2 <= delta_e {
                    let book = crate::graph::book(p, q, 1);
                    for k in 0..gains_per_shape {
                        let phi = crate::gain::random_gains::<f64>(&book, seed ^ (k + 1).wrapping_mul(0x9e37_79b9_7f4a_7c15));
                        out.push(
                            BoundCheckResult::new("book-below-t1", energy(&phi)?.energy, t1, Relation::Less)
                                .with_detail(format!("G_{{{p},{q},1}}, max edge degree {delta_e}")),
                        );
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Cycle-gain sweep on a unicyclic graph: the energy is compared with the
/// all-ones energy in the direction fixed by the girth modulo 4, and the
/// equality case is matched against balance (and antibalance for odd girth).
pub fn check_unicyclic(g: &SimpleGraph, samples: usize) -> Result<Vec<BoundCheckResult>, TheoremError> {
    if samples < 8 {
        return Err(TheoremError::TooFewSamples(samples));
    }
    let r = unique_cycle(g)?.len();
    let base = graph_energy(g)?;
    let relation = if r % 4 == 0 { Relation::AtLeast } else { Relation::AtMost };
    let (label, odd) = if r % 2 == 1 { ("balanced or antibalanced", true) } else { ("balanced", false) };
    let tau = std::f64::consts::TAU;
    let mut thetas: Vec<f64> = (0..samples).map(|k| tau * k as f64 / samples as f64).collect();
    thetas.extend([0.0, std::f64::consts::PI, std::f64::consts::FRAC_PI_2, -std::f64::consts::FRAC_PI_2]);
    let mut out = Vec::new();
    for theta in thetas {
        let phi = with_cycle_gain(g, unit(theta))?;
        let e = energy(&phi)?.energy;
        let fired = is_balanced(&phi).balanced || (odd && is_antibalanced(&phi));
        out.push(
            BoundCheckResult::new("unicyclic-vs-underlying", e, base, relation)
                .classified(fired, label, ClassifierMode::Iff)
                .with_detail(format!("girth {r}, theta {theta:.6}")),
        );
        let mirrored = energy(&with_cycle_gain(g, unit(-theta))?)?.energy;
        out.push(
            BoundCheckResult::new("unicyclic-conjugate-symmetry", (e - mirrored).abs(), 0.0, Relation::AtMost)
                .with_detail(format!("theta {theta:.6}")),
        );
    }
    Ok(out)
}

/// Energies of `(theta, E(e^{i theta}))` for plotting a unicyclic sweep.
pub fn unicyclic_energy_curve(g: &SimpleGraph, samples: usize) -> Result<Vec<(f64, f64)>, TheoremError> {
    (0..samples)
        .map(|k| {
            let theta = std::f64::consts::TAU * k as f64 / samples as f64;
            Ok((theta, energy(&with_cycle_gain(g, unit(theta))?)?.energy))
        })
        .collect()
}

/// Two gain graphs on the same graph with different energies.
#[derive(Debug, Clone)]
pub struct Witness {
    pub phi1: GainGraph<f64>,
    pub phi2: GainGraph<f64>,
    pub energy1: f64,
    pub energy2: f64,
    pub check: BoundCheckResult,
}

/// For a graph whose cycles are pairwise vertex-disjoint: one cycle `C1`
/// (the first even cycle when both parities occur, else the first cycle)
/// gets gain `e^{2 pi i / 3}` in the first graph and `-1` in the second;
/// every other cycle gets `i` in both.
pub fn nonequienergetic_witness(g: &SimpleGraph) -> Result<Witness, TheoremError> {
    let cycles = disjoint_cycles(g)?;
    if cycles.is_empty() {
        return Err(TheoremError::NoCycles);
    }
    let has_odd = cycles.iter().any(|c| c.len() % 2 == 1);
    let has_even = cycles.iter().any(|c| c.len() % 2 == 0);
    let first = if has_odd && has_even { cycles.iter().position(|c| c.len() % 2 == 0).unwrap() } else { 0 };
    let assign = |z: Complex<f64>| -> Vec<Complex<f64>> {
        (0..cycles.len()).map(|k| if k == first { z } else { Complex::new(0.0, 1.0) }).collect()
    };
    let omega = Complex::new(-0.5, 3f64.sqrt() / 2.0);
    let phi1 = with_cycle_gains(g, &assign(omega))?;
    let phi2 = with_cycle_gains(g, &assign(Complex::new(-1.0, 0.0)))?;
    let energy1 = energy(&phi1)?.energy;
    let energy2 = energy(&phi2)?.energy;
    let check = BoundCheckResult::new("witness-energy-gap", (energy1 - energy2).abs(), WITNESS_GAP, Relation::Greater)
        .with_detail(format!("C1 = {:?}", cycles[first]));
    Ok(Witness { phi1, phi2, energy1, energy2, check })
}

/// Two pure-imaginary cycle-gain assignments have equal energy, and both
/// agree with the matching-polynomial integral.
pub fn check_pure_imaginary_pair(g: &SimpleGraph, signs_a: &[i8], signs_b: &[i8]) -> Result<Vec<BoundCheckResult>, TheoremError> {
    let a = energy(&crate::gain::pure_imaginary_cycle_gains::<f64>(g, signs_a)?)?.energy;
    let b = energy(&crate::gain::pure_imaginary_cycle_gains::<f64>(g, signs_b)?)?.energy;
    let integral = matching_energy::<f64>(g, 1e-8)?.value;
    Ok(vec![
        BoundCheckResult::new("pure-imaginary-equienergetic", (a - b).abs(), 0.0, Relation::AtMost),
        BoundCheckResult::new("pure-imaginary-matching-integral", (a - integral).abs(), 1e-4, Relation::AtMost),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{book, named_family, Family};
    use approx::assert_abs_diff_eq;

    fn fam(kind: Family) -> SimpleGraph {
        named_family(kind).unwrap()
    }

    fn ones(kind: Family) -> GainGraph<f64> {
        GainGraph::all_ones(fam(kind))
    }

    fn find<'a>(checks: &'a [BoundCheckResult], name: &str) -> &'a BoundCheckResult {
        checks.iter().find(|c| c.name == name).unwrap()
    }

    #[test]
    fn balanced_square_meets_min_degree_bound() {
        let checks = check_energy_lower_bounds(&ones(Family::CompleteBipartite(2, 2))).unwrap();
        let c = find(&checks, "energy-vs-twice-min-degree");
        assert_abs_diff_eq!(c.lhs, 4.0, epsilon = 1e-12);
        assert!(c.equality && c.classifier.as_ref().unwrap().fired && c.passed());
        assert!(checks.iter().all(BoundCheckResult::passed));
    }

    #[test]
    fn all_i_triangle_skips_min_degree_bound() {
        let phi = GainGraph::from_directed(fam(Family::Complete(3)), [
            (0, 1, Complex::new(0.0, 1.0)),
            (1, 2, Complex::new(0.0, 1.0)),
            (2, 0, Complex::new(0.0, 1.0)),
        ])
        .unwrap();
        let checks = check_energy_lower_bounds(&phi).unwrap();
        assert!(find(&checks, "energy-vs-twice-min-degree").skipped.is_some());
        assert!(checks.iter().all(BoundCheckResult::passed));
    }

    #[test]
    fn pentagon_is_strict() {
        let checks = check_energy_lower_bounds(&ones(Family::Cycle(5))).unwrap();
        let c = find(&checks, "energy-vs-twice-min-degree");
        let want: f64 = (0..5).map(|k| (2.0 * (std::f64::consts::TAU * k as f64 / 5.0).cos()).abs()).sum();
        assert_abs_diff_eq!(c.lhs, want, epsilon = 1e-10);
        assert!(!c.equality && c.passed());
    }

    #[test]
    fn bipartite_verdicts() {
        let v = is_balanced_complete_bipartite(&ones(Family::CompleteBipartite(2, 3))).unwrap();
        assert!(v.verdict);
        assert_eq!(v.positive_eigenvalues, Some(1));
        let sq = crate::gain::with_cycle_gain(&fam(Family::Cycle(4)), Complex::new(-1.0, 0.0)).unwrap();
        let v = is_balanced_complete_bipartite(&sq).unwrap();
        assert!(!v.verdict);
        assert_eq!(v.positive_eigenvalues, Some(2));
        assert!(is_balanced_complete_bipartite(&ones(Family::Path(3))).unwrap().verdict);
    }

    #[test]
    fn t1_closed_forms_match_double_stars() {
        for delta_e in 0..=8 {
            let e = graph_energy(&fam(Family::TreeT1(delta_e))).unwrap();
            assert_abs_diff_eq!(e, t1_energy_closed_form(delta_e), epsilon = 1e-9);
        }
        assert_abs_diff_eq!(t1_energy_closed_form(4), 6.0, epsilon = 1e-12);
        assert_abs_diff_eq!(t1_energy_closed_form(1), 2.0 * 2f64.sqrt(), epsilon = 1e-12);
    }

    #[test]
    fn matching_bound_equality_on_path_copies() {
        let p2s = fam(Family::Path(2)).disjoint_union(&fam(Family::Path(2))).with_isolated(1);
        let phi = crate::gain::random_gains::<f64>(&p2s, 3);
        let checks = check_matching_bounds(&phi).unwrap();
        let c = find(&checks, "matching-bound-even");
        assert!(c.equality && c.passed());
        let p3s = fam(Family::Path(3)).disjoint_union(&fam(Family::Path(3)));
        let checks = check_matching_bounds(&GainGraph::all_ones(p3s)).unwrap();
        let c = find(&checks, "matching-bound-odd");
        assert!(c.equality && c.passed(), "{c}");
        assert!(checks.iter().all(BoundCheckResult::passed));
    }

    #[test]
    fn counterexample_placements() {
        let checks = book_counterexample().unwrap();
        assert_eq!(checks.len(), 7);
        assert!(checks.iter().all(BoundCheckResult::passed), "{checks:#?}");
        assert_eq!(checks.iter().filter(|c| c.relation == Relation::AtLeast).count(), 4);
    }

    #[test]
    fn t1_sweep_passes() {
        assert!(t1_comparison_sweep(5, 3, 1).unwrap().iter().all(BoundCheckResult::passed));
    }

    #[test]
    fn unicyclic_examples() {
        let c4 = check_unicyclic(&fam(Family::Cycle(4)), 8).unwrap();
        let at_pi = c4.iter().find(|c| c.detail.as_deref() == Some("girth 4, theta 3.141593")).unwrap();
        assert_abs_diff_eq!(at_pi.lhs, 4.0 * 2f64.sqrt(), epsilon = 1e-10);
        assert_abs_diff_eq!(at_pi.rhs, 4.0, epsilon = 1e-10);
        for r in 3..=8 {
            let checks = check_unicyclic(&fam(Family::Cycle(r)), 16).unwrap();
            assert!(checks.iter().all(BoundCheckResult::passed), "girth {r}");
        }
        let c6 = check_unicyclic(&fam(Family::Cycle(6)), 8).unwrap();
        let at_pi = c6.iter().find(|c| c.detail.as_deref() == Some("girth 6, theta 3.141593")).unwrap();
        assert!(at_pi.lhs < 8.0 - 1e-3);
        assert!(matches!(check_unicyclic(&fam(Family::Path(4)), 8), Err(TheoremError::Gain(GainError::NotUnicyclic))));
        assert!(matches!(check_unicyclic(&fam(Family::Cycle(4)), 4), Err(TheoremError::TooFewSamples(4))));
    }

    #[test]
    fn witnesses() {
        for r in 3..=6 {
            let w = nonequienergetic_witness(&fam(Family::Cycle(r))).unwrap();
            assert!(w.check.passed(), "C{r}");
        }
        assert!(matches!(nonequienergetic_witness(&fam(Family::Path(4))), Err(TheoremError::NoCycles)));
        let w = nonequienergetic_witness(&fam(Family::Cycle(3))).unwrap();
        // characteristic polynomials x^3 - 3x + 1 and x^3 - 3x + 2
        let p1 = crate::polynomials::char_poly_subgraph(&w.phi1).unwrap();
        let p2 = crate::polynomials::char_poly_subgraph(&w.phi2).unwrap();
        assert!((p1.b(3) - 1.0).abs() < 1e-12 && (p2.b(3) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn spectral_basics_on_families() {
        for kind in [Family::Complete(4), Family::CompleteBipartite(2, 3), Family::Cycle(5), Family::Book(1, 2, 1)] {
            for phi in [ones(kind), crate::gain::random_gains::<f64>(&fam(kind), 5)] {
                let checks = check_spectral_basics(&phi).unwrap();
                assert!(checks.iter().all(BoundCheckResult::passed), "{kind:?}: {checks:#?}");
            }
        }
        let _ = book(0, 0, 1);
    }

    #[test]
    fn pure_imaginary_pairs() {
        let g = SimpleGraph::new(7, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 6)]).unwrap();
        let checks = check_pure_imaginary_pair(&g, &[1, 1], &[1, -1]).unwrap();
        assert!(checks.iter().all(BoundCheckResult::passed));
    }
}
