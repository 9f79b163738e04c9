//! Complex unit gain graphs: gain assignments, cycle gains, switching,
//! balance and antibalance, and constructors that prescribe cycle gains.

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{GraphError, SimpleGraph};
use crate::scalar::{phase, unit, Real};

/// Cap on the number of simple cycles listed when checking that cycles are
/// vertex-disjoint.
pub const CYCLE_LIST_CAP: usize = 10_000;

/// Absolute tolerance on `|g - h|` for unit complex numbers in balance checks.
pub fn balance_tolerance<T: Real>() -> T {
    T::tolerance(1e-9, 1e4)
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GainError {
    #[error("expected {expected} gains, got {got}")]
    GainCount { expected: usize, got: usize },
    #[error("gain on edge {edge:?} has modulus {modulus}, not 1")]
    NonUnitGain { edge: (usize, usize), modulus: f64 },
    #[error("vertex sequence {0:?} is not a cycle of the graph")]
    NotACycle(Vec<usize>),
    #[error("switching function has {got} entries for {expected} vertices")]
    SwitchingSize { expected: usize, got: usize },
    #[error("switching value at vertex {0} is not unit modulus")]
    NonUnitSwitching(usize),
    #[error("graph is not unicyclic")]
    NotUnicyclic,
    #[error("cycles {0:?} and {1:?} share a vertex")]
    CyclesNotDisjoint(Vec<usize>, Vec<usize>),
    #[error("graph has {cycles} cycles but {given} cycle gains were given")]
    CycleGainCount { cycles: usize, given: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A simple graph with a unit complex gain on every edge. Only the canonical
/// orientation `u -> v` with `u < v` is stored; the reverse carries the
/// conjugate.
#[derive(Debug, Clone, PartialEq)]
pub struct GainGraph<T> {
    graph: SimpleGraph,
    gains: Vec<Complex<T>>,
}

impl<T: Real> GainGraph<T> {
    /// `gains[k]` belongs to `graph.edges()[k]` in its canonical orientation.
    /// Each gain is renormalised; moduli further than `sqrt(eps)` from one
    /// are rejected.
    pub fn new(graph: SimpleGraph, gains: Vec<Complex<T>>) -> Result<Self, GainError> {
        if gains.len() != graph.m() {
            return Err(GainError::GainCount { expected: graph.m(), got: gains.len() });
        }
        let slack = T::epsilon().sqrt();
        let mut normalized = Vec::with_capacity(gains.len());
        for (&edge, g) in graph.edges().iter().zip(gains) {
            let r = g.norm();
            if !r.is_finite() || (r - T::one()).abs() > slack {
                return Err(GainError::NonUnitGain { edge, modulus: r.as_f64() });
            }
            normalized.push(g / r);
        }
        Ok(Self { graph, gains: normalized })
    }

    /// The underlying graph with every gain equal to one.
    pub fn all_ones(graph: SimpleGraph) -> Self {
        let gains = vec![Complex::new(T::one(), T::zero()); graph.m()];
        Self { graph, gains }
    }

    /// Every canonical edge gets `f(u, v)`.
    pub fn from_fn(graph: SimpleGraph, mut f: impl FnMut(usize, usize) -> Complex<T>) -> Result<Self, GainError> {
        let gains = graph.edges().iter().map(|&(u, v)| f(u, v)).collect();
        Self::new(graph, gains)
    }

    /// Builds from directed gains `(u, v, g)` meaning `g(u -> v) = g`.
    /// Edges not listed get gain one.
    pub fn from_directed(
        graph: SimpleGraph,
        directed: impl IntoIterator<Item = (usize, usize, Complex<T>)>,
    ) -> Result<Self, GainError> {
        let mut gains = vec![Complex::new(T::one(), T::zero()); graph.m()];
        for (u, v, g) in directed {
            let k = graph.edge_index(u, v).ok_or(GraphError::NotAnEdge((u, v)))?;
            gains[k] = if u < v { g } else { g.conj() };
        }
        Self::new(graph, gains)
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn m(&self) -> usize {
        self.graph.m()
    }

    /// Canonical gains, aligned with `graph().edges()`.
    pub fn gains(&self) -> &[Complex<T>] {
        &self.gains
    }

    /// Gain of the directed edge `u -> v`, if `{u, v}` is an edge.
    pub fn gain(&self, u: usize, v: usize) -> Option<Complex<T>> {
        self.graph.edge_index(u, v).map(|k| if u < v { self.gains[k] } else { self.gains[k].conj() })
    }

    /// `-Phi`: every gain negated.
    pub fn negated(&self) -> Self {
        Self { graph: self.graph.clone(), gains: self.gains.iter().map(|g| -g).collect() }
    }

    /// Restriction to an edge subset (given as canonical edge indices), on the
    /// same vertex set.
    pub fn edge_subgraph(&self, edge_indices: &[usize]) -> Self {
        let edges: Vec<(usize, usize)> = edge_indices.iter().map(|&k| self.graph.edges()[k]).collect();
        let graph = SimpleGraph::new(self.n(), edges).expect("edge subset of a simple graph is simple");
        let gains = graph
            .edges()
            .iter()
            .map(|&(u, v)| self.gains[self.graph.edge_index(u, v).unwrap()])
            .collect();
        Self { graph, gains }
    }

    /// Gain graph induced on `vertices` (relabelled in the given order).
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let graph = self.graph.induced(vertices);
        let gains = graph
            .edges()
            .iter()
            .map(|&(a, b)| self.gain(vertices[a], vertices[b]).expect("induced edge exists"))
            .collect();
        Self { graph, gains }
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let graph = self.graph.disjoint_union(&other.graph);
        let gains = self.gains.iter().chain(other.gains.iter()).copied().collect();
        Self { graph, gains }
    }
}

/// Unit complex value per vertex, acting by `g'(u -> v) = zeta(u)^-1 g(u -> v) zeta(v)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SwitchingFunction<T> {
    zeta: Vec<Complex<T>>,
}

impl<T: Real> SwitchingFunction<T> {
    pub fn new(zeta: Vec<Complex<T>>) -> Result<Self, GainError> {
        let slack = T::epsilon().sqrt();
        let mut out = Vec::with_capacity(zeta.len());
        for (v, z) in zeta.into_iter().enumerate() {
            let r = z.norm();
            if !r.is_finite() || (r - T::one()).abs() > slack {
                return Err(GainError::NonUnitSwitching(v));
            }
            out.push(z / r);
        }
        Ok(Self { zeta: out })
    }

    pub fn identity(n: usize) -> Self {
        Self { zeta: vec![Complex::new(T::one(), T::zero()); n] }
    }

    pub fn values(&self) -> &[Complex<T>] {
        &self.zeta
    }
}

/// Gain of a traversed cycle.
#[derive(Debug, Clone, PartialEq)]
pub struct CycleGainRecord<T> {
    /// `v1, ..., vk` (the closing return to `v1` is implicit).
    pub cycle: Vec<usize>,
    pub gain: Complex<T>,
    pub real_part: T,
}

/// Ordered product of directed gains along `cycle`. The sequence may or may
/// not repeat its first vertex at the end.
pub fn cycle_gain<T: Real>(phi: &GainGraph<T>, cycle: &[usize]) -> Result<CycleGainRecord<T>, GainError> {
    let mut seq = cycle.to_vec();
    if seq.len() > 1 && seq.first() == seq.last() {
        seq.pop();
    }
    let not_a_cycle = || GainError::NotACycle(cycle.to_vec());
    if seq.len() < 3 || seq.iter().any(|&v| v >= phi.n()) {
        return Err(not_a_cycle());
    }
    let mut seen = vec![false; phi.n()];
    for &v in &seq {
        if std::mem::replace(&mut seen[v], true) {
            return Err(not_a_cycle());
        }
    }
    let mut gain = Complex::new(T::one(), T::zero());
    for i in 0..seq.len() {
        let g = phi.gain(seq[i], seq[(i + 1) % seq.len()]).ok_or_else(not_a_cycle)?;
        gain = gain * g;
    }
    Ok(CycleGainRecord { cycle: seq, gain, real_part: gain.re })
}

/// Outcome of a balance test.
#[derive(Debug, Clone, PartialEq)]
pub struct BalanceVerdict<T> {
    pub balanced: bool,
    /// On success, a switching function taking the gain graph to all ones.
    pub certificate: Option<SwitchingFunction<T>>,
}

/// Decides balance with spanning-tree potentials per component: `theta(root) = 1`,
/// `theta(v) = theta(u) g(u -> v)` along BFS tree edges, then every edge must
/// satisfy `g(u -> v) = theta(u)^-1 theta(v)`.
pub fn is_balanced<T: Real>(phi: &GainGraph<T>) -> BalanceVerdict<T> {
    let n = phi.n();
    let g = phi.graph();
    let one = Complex::new(T::one(), T::zero());
    let mut theta: Vec<Option<Complex<T>>> = vec![None; n];
    for root in 0..n {
        if theta[root].is_some() {
            continue;
        }
        theta[root] = Some(one);
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let tu = theta[u].unwrap();
            for &w in g.neighbors(u) {
                if theta[w].is_none() {
                    theta[w] = Some(tu * phi.gain(u, w).unwrap());
                    queue.push_back(w);
                }
            }
        }
    }
    let theta: Vec<Complex<T>> = theta.into_iter().map(Option::unwrap).collect();
    let tol = balance_tolerance::<T>();
    let balanced = g
        .edges()
        .iter()
        .zip(phi.gains())
        .all(|(&(u, v), &gain)| (gain - theta[u].conj() * theta[v]).norm() <= tol);
    // g(u -> v) = theta(u)^-1 theta(v), so switching by theta^-1 cancels every gain.
    let certificate = balanced.then(|| SwitchingFunction { zeta: theta.iter().map(|t| t.conj()).collect() });
    BalanceVerdict { balanced, certificate }
}

/// Whether `-Phi` is balanced.
pub fn is_antibalanced<T: Real>(phi: &GainGraph<T>) -> bool {
    is_balanced(&phi.negated()).balanced
}

pub fn switch<T: Real>(phi: &GainGraph<T>, zeta: &SwitchingFunction<T>) -> Result<GainGraph<T>, GainError> {
    if zeta.zeta.len() != phi.n() {
        return Err(GainError::SwitchingSize { expected: phi.n(), got: zeta.zeta.len() });
    }
    let z = &zeta.zeta;
    let gains = phi
        .graph()
        .edges()
        .iter()
        .zip(phi.gains())
        .map(|(&(u, v), &g)| z[u].conj() * g * z[v])
        .collect();
    GainGraph::new(phi.graph().clone(), gains)
}

/// The unique cycle of a unicyclic graph, starting with its lowest canonical
/// edge `(a, b)` traversed `a -> b`.
pub fn unique_cycle(g: &SimpleGraph) -> Result<Vec<usize>, GainError> {
    if !(g.is_connected() && g.n() > 0 && g.m() == g.n()) {
        return Err(GainError::NotUnicyclic);
    }
    let cycles = g.simple_cycles(2)?;
    let [cycle] = cycles.as_slice() else {
        return Err(GainError::NotUnicyclic);
    };
    Ok(orient_from_lowest_edge(cycle))
}

/// Rotates/reverses a cycle so that it starts `a -> b` along its
/// lexicographically smallest canonical edge `(a, b)`.
fn orient_from_lowest_edge(cycle: &[usize]) -> Vec<usize> {
    let k = cycle.len();
    let (pos, forward) = (0..k)
        .map(|i| {
            let (x, y) = (cycle[i], cycle[(i + 1) % k]);
            ((x.min(y), x.max(y)), i, x < y)
        })
        .min()
        .map(|(_, i, fwd)| (i, fwd))
        .unwrap();
    if forward {
        (0..k).map(|j| cycle[(pos + j) % k]).collect()
    } else {
        // edge cycle[pos] -> cycle[pos+1] goes downhill; walk the other way from cycle[pos+1]
        (0..k).map(|j| cycle[(pos + 1 + k - j) % k]).collect()
    }
}

/// Gains one everywhere except the lowest canonical edge of each given
/// cycle, which carries the prescribed cycle gain. Cycles must be pairwise
/// vertex-disjoint; each resulting cycle gain is measured along the
/// orientation returned by [`unique_cycle`] (lowest edge traversed upward).
fn with_designated_cycle_gains<T: Real>(
    g: &SimpleGraph,
    cycles: &[Vec<usize>],
    gains: &[Complex<T>],
) -> Result<GainGraph<T>, GainError> {
    let mut directed = Vec::new();
    for (cycle, &z) in cycles.iter().zip(gains) {
        let oriented = orient_from_lowest_edge(cycle);
        directed.push((oriented[0], oriented[1], phase(z)));
    }
    GainGraph::from_directed(g.clone(), directed)
}

/// Unicyclic gain graph whose cycle gain is `z`.
pub fn with_cycle_gain<T: Real>(g: &SimpleGraph, z: Complex<T>) -> Result<GainGraph<T>, GainError> {
    let cycle = unique_cycle(g)?;
    with_designated_cycle_gains(g, &[cycle], &[z])
}

/// All simple cycles in canonical form, failing unless they are pairwise
/// vertex-disjoint.
pub fn disjoint_cycles(g: &SimpleGraph) -> Result<Vec<Vec<usize>>, GainError> {
    let cycles = g.simple_cycles(CYCLE_LIST_CAP)?;
    let mut owner: Vec<Option<usize>> = vec![None; g.n()];
    for (i, c) in cycles.iter().enumerate() {
        for &v in c {
            if let Some(j) = owner[v] {
                return Err(GainError::CyclesNotDisjoint(cycles[j].clone(), c.clone()));
            }
            owner[v] = Some(i);
        }
    }
    Ok(cycles)
}

/// Gain graph on a graph with pairwise vertex-disjoint cycles where cycle `j`
/// (in the order of [`disjoint_cycles`]) has gain `cycle_gains[j]`.
pub fn with_cycle_gains<T: Real>(g: &SimpleGraph, cycle_gains: &[Complex<T>]) -> Result<GainGraph<T>, GainError> {
    let cycles = disjoint_cycles(g)?;
    if cycles.len() != cycle_gains.len() {
        return Err(GainError::CycleGainCount { cycles: cycles.len(), given: cycle_gains.len() });
    }
    with_designated_cycle_gains(g, &cycles, cycle_gains)
}

/// Cycle `j` gets gain `signs[j] * i`, so every cycle has zero real part.
pub fn pure_imaginary_cycle_gains<T: Real>(g: &SimpleGraph, signs: &[i8]) -> Result<GainGraph<T>, GainError> {
    let gains: Vec<Complex<T>> = signs
        .iter()
        .map(|&s| Complex::new(T::zero(), if s < 0 { -T::one() } else { T::one() }))
        .collect();
    with_cycle_gains(g, &gains)
}

/// Independent uniform angles on every canonical edge from a ChaCha8 stream
/// seeded with `seed`.
pub fn random_gains<T: Real>(g: &SimpleGraph, seed: u64) -> GainGraph<T> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_gains_with(g, &mut rng)
}

/// Same as [`random_gains`] drawing from a caller-owned generator.
pub fn random_gains_with<T: Real, R: Rng>(g: &SimpleGraph, rng: &mut R) -> GainGraph<T> {
    let gains = (0..g.m())
        .map(|_| unit(T::lit(rng.random_range(0.0..std::f64::consts::TAU))))
        .collect();
    GainGraph::new(g.clone(), gains).expect("random unit gains")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named_family, Family};

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    fn family(kind: Family) -> SimpleGraph {
        named_family(kind).unwrap()
    }

    fn all_i_triangle() -> GainGraph<f64> {
        GainGraph::from_directed(family(Family::Complete(3)), [(0, 1, c(0., 1.)), (1, 2, c(0., 1.)), (2, 0, c(0., 1.))])
            .unwrap()
    }

    #[test]
    fn reverse_orientation_is_conjugate() {
        let phi = GainGraph::from_directed(family(Family::Path(2)), [(1, 0, c(0., 1.))]).unwrap();
        assert_eq!(phi.gain(1, 0), Some(c(0., 1.)));
        assert_eq!(phi.gain(0, 1), Some(c(0., -1.)));
        assert_eq!(phi.gain(0, 0), None);
    }

    #[test]
    fn gains_are_renormalized_and_validated() {
        let g = family(Family::Path(2));
        let phi = GainGraph::new(g.clone(), vec![c(1.0 + 1e-12, 0.0)]).unwrap();
        assert!((phi.gains()[0].norm() - 1.0).abs() <= 1e-15);
        assert!(matches!(GainGraph::new(g, vec![c(0.6, 0.7)]), Err(GainError::NonUnitGain { .. })));
    }

    #[test]
    fn cycle_gain_examples() {
        // canonical gains 0->1: i, 1->2: i, 0->2: conj of 2->0 = -i; traversal 0->1->2->0 gives i*i*i = -i
        let rec = cycle_gain(&all_i_triangle(), &[0, 1, 2, 0]).unwrap();
        assert!((rec.gain - c(0., -1.)).norm() < 1e-15);
        assert!(rec.real_part.abs() < 1e-15);
        let ones = GainGraph::<f64>::all_ones(family(Family::Cycle(5)));
        assert!((cycle_gain(&ones, &[0, 1, 2, 3, 4]).unwrap().gain - c(1., 0.)).norm() < 1e-15);
    }

    #[test]
    fn cycle_gain_reversal_and_rotation() {
        let phi = random_gains::<f64>(&family(Family::Cycle(5)), 3);
        let fwd = cycle_gain(&phi, &[0, 1, 2, 3, 4]).unwrap().gain;
        let rot = cycle_gain(&phi, &[2, 3, 4, 0, 1]).unwrap().gain;
        let rev = cycle_gain(&phi, &[4, 3, 2, 1, 0]).unwrap().gain;
        assert!((fwd - rot).norm() < 1e-12);
        assert!((fwd.conj() - rev).norm() < 1e-12);
    }

    #[test]
    fn cycle_gain_rejects_non_cycles() {
        let phi = all_i_triangle();
        assert!(cycle_gain(&phi, &[0, 1]).is_err());
        assert!(cycle_gain(&phi, &[0, 1, 1]).is_err());
        let path = GainGraph::<f64>::all_ones(family(Family::Path(3)));
        assert!(cycle_gain(&path, &[0, 1, 2]).is_err());
    }

    #[test]
    fn balance_examples() {
        assert!(is_balanced(&GainGraph::<f64>::all_ones(family(Family::Complete(4)))).balanced);
        let c4 = GainGraph::from_directed(family(Family::Cycle(4)), [(0, 1, c(-1., 0.))]).unwrap();
        assert!(!is_balanced(&c4).balanced);
        let tree = random_gains::<f64>(&family(Family::DoubleStar(2, 3)), 11);
        assert!(is_balanced(&tree).balanced);
    }

    #[test]
    fn antibalance_examples() {
        let neg_triangle = GainGraph::<f64>::all_ones(family(Family::Complete(3))).negated();
        assert!(is_antibalanced(&neg_triangle));
        let c4 = GainGraph::<f64>::all_ones(family(Family::Cycle(4)));
        assert!(is_balanced(&c4).balanced && is_antibalanced(&c4));
        let t = all_i_triangle();
        assert!(!is_balanced(&t).balanced && !is_antibalanced(&t));
    }

    #[test]
    fn certificate_switches_to_all_ones() {
        let g = family(Family::Complete(4));
        let base = GainGraph::<f64>::all_ones(g.clone());
        let zeta = SwitchingFunction::new((0..4).map(|k| unit(0.7 * k as f64 + 0.3)).collect()).unwrap();
        let phi = switch(&base, &zeta).unwrap();
        let verdict = is_balanced(&phi);
        assert!(verdict.balanced);
        let back = switch(&phi, verdict.certificate.as_ref().unwrap()).unwrap();
        for gain in back.gains() {
            assert!((gain - c(1., 0.)).norm() <= 1e-9);
        }
    }

    #[test]
    fn identity_switching_and_cycle_gain_preservation() {
        let phi = random_gains::<f64>(&family(Family::Cycle(4)), 5);
        assert_eq!(switch(&phi, &SwitchingFunction::identity(4)).unwrap(), phi);
        let zeta = SwitchingFunction::new((0..4).map(|k| unit(1.1 * k as f64)).collect()).unwrap();
        let switched = switch(&phi, &zeta).unwrap();
        let a = cycle_gain(&phi, &[0, 1, 2, 3]).unwrap().gain;
        let b = cycle_gain(&switched, &[0, 1, 2, 3]).unwrap().gain;
        assert!((a - b).norm() < 1e-12);
    }

    #[test]
    fn with_cycle_gain_sets_the_cycle_gain() {
        let g = SimpleGraph::new(5, [(0, 1), (1, 2), (2, 3), (3, 1), (3, 4)]).unwrap();
        let z = unit(0.9f64);
        let phi = with_cycle_gain(&g, z).unwrap();
        let cycle = unique_cycle(&g).unwrap();
        assert_eq!(&cycle[..2], &[1, 2]);
        assert!((cycle_gain(&phi, &cycle).unwrap().gain - z).norm() < 1e-14);
        assert!(is_balanced(&with_cycle_gain(&g, c(1., 0.)).unwrap()).balanced);
        assert_eq!(
            with_cycle_gain::<f64>(&family(Family::Path(4)), c(1., 0.)),
            Err(GainError::NotUnicyclic)
        );
    }

    #[test]
    fn pure_imaginary_assignment() {
        let g = SimpleGraph::new(7, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 6)]).unwrap();
        let phi = pure_imaginary_cycle_gains::<f64>(&g, &[1, -1]).unwrap();
        let r1 = cycle_gain(&phi, &[0, 1, 2]).unwrap();
        let r2 = cycle_gain(&phi, &[4, 5, 6]).unwrap();
        assert!(r1.real_part.abs() < 1e-15 && r2.real_part.abs() < 1e-15);
        assert!((r1.gain - c(0., 1.)).norm() < 1e-15);
        assert!((r2.gain - c(0., -1.)).norm() < 1e-15);
        let k4 = family(Family::Complete(4));
        assert!(matches!(pure_imaginary_cycle_gains::<f64>(&k4, &[1]), Err(GainError::CyclesNotDisjoint(..))));
        assert!(matches!(
            pure_imaginary_cycle_gains::<f64>(&family(Family::Cycle(3)), &[1, 1]),
            Err(GainError::CycleGainCount { .. })
        ));
    }

    #[test]
    fn random_gains_are_reproducible() {
        let g = family(Family::Complete(5));
        let a = random_gains::<f64>(&g, 42);
        assert_eq!(a, random_gains::<f64>(&g, 42));
        assert_ne!(a, random_gains::<f64>(&g, 43));
        assert!(a.gains().iter().all(|z| (z.norm() - 1.0).abs() <= 1e-12));
    }
}
