//! Seeded corpora and suite runners over the checks in the parent module.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{
    book_counterexample, check_energy_lower_bounds, check_matching_bounds, check_pure_imaginary_pair,
    check_spectral_basics, check_unicyclic, nonequienergetic_witness, t1_comparison_sweep, BoundCheckResult,
    TheoremError,
};
use crate::gain::{random_gains_with, GainGraph};
use crate::graph::{book, double_star, named_family, random_graph_with, Family, SimpleGraph};
use crate::spectral::{energy, graph_spectrum};

/// Which group of checks to run. Command-line tokens are `sec3`, `sec4`,
/// `sec5` and `all`, in variant order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    /// Spectral basics and energy lower bounds.
    LowerBounds,
    /// Matching-number upper bounds and the decomposition behind them.
    MatchingBounds,
    /// Unicyclic sweeps, non-equienergetic witnesses, pure-imaginary pairs.
    CycleGains,
    All,
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "sec3" => Ok(Suite::LowerBounds),
            "sec4" => Ok(Suite::MatchingBounds),
            "sec5" => Ok(Suite::CycleGains),
            "all" => Ok(Suite::All),
            other => Err(format!("unknown suite `{other}`")),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::LowerBounds => "sec3",
            Suite::MatchingBounds => "sec4",
            Suite::CycleGains => "sec5",
            Suite::All => "all",
        })
    }
}

#[derive(Debug, Clone)]
pub struct Instance {
    pub label: String,
    pub phi: GainGraph<f64>,
}

/// Connected `G(n, p)` graphs, `n` in `2..=10` and `p` in `[0.2, 0.7]`,
/// with uniformly random unit gains.
pub fn random_corpus(seed: u64, count: usize) -> Vec<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.random_range(2..=10);
        let p = rng.random_range(0.2..=0.7);
        let g = random_graph_with(n, p, &mut rng);
        if !g.is_connected() {
            continue;
        }
        let phi = random_gains_with(&g, &mut rng);
        out.push(Instance { label: format!("random #{} (n={n}, p={p:.3})", out.len()), phi });
    }
    out
}

/// Named graphs that sit on or near the equality cases.
pub fn fixture_corpus() -> Vec<Instance> {
    let fam = |k| named_family(k).expect("valid family");
    let mut graphs: Vec<(String, SimpleGraph)> = Vec::new();
    for d in 1..=4 {
        graphs.push((format!("K_{{{d},{d}}}"), fam(Family::CompleteBipartite(d, d))));
    }
    graphs.push(("K_{2,3}".into(), fam(Family::CompleteBipartite(2, 3))));
    graphs.push(("star 4".into(), fam(Family::Star(4))));
    for r in 3..=6 {
        graphs.push((format!("C{r}"), fam(Family::Cycle(r))));
    }
    graphs.push(("K4".into(), fam(Family::Complete(4))));
    graphs.push(("K5".into(), fam(Family::Complete(5))));
    let p2 = fam(Family::Path(2));
    let p3 = fam(Family::Path(3));
    graphs.push(("3 P2 + K1".into(), p2.disjoint_union(&p2).disjoint_union(&p2).with_isolated(1)));
    graphs.push(("2 P3".into(), p3.disjoint_union(&p3)));
    graphs.push(("G_{1,1,2}".into(), book(1, 1, 2)));
    graphs.push(("G_{0,2,1}".into(), book(0, 2, 1)));
    graphs.push(("T_{2,3}".into(), double_star(2, 3)));

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut out = Vec::new();
    for (label, g) in graphs {
        out.push(Instance { label: format!("{label}, all ones"), phi: GainGraph::all_ones(g.clone()) });
        out.push(Instance { label: format!("{label}, all -1"), phi: GainGraph::all_ones(g.clone()).negated() });
        out.push(Instance { label: format!("{label}, random gains"), phi: random_gains_with(&g, &mut rng) });
    }
    out
}

/// A random unicyclic graph: a random recursive tree plus one chord.
pub fn random_unicyclic<R: Rng>(n: usize, rng: &mut R) -> SimpleGraph {
    assert!(n >= 3);
    loop {
        let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.random_range(0..v), v)).collect();
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n);
        let e = (u.min(v), u.max(v));
        if u != v && !edges.contains(&e) {
            edges.push(e);
            return SimpleGraph::new(n, edges).expect("simple by construction");
        }
    }
}

/// Graphs whose cycles are pairwise vertex-disjoint, joined by paths.
pub fn disjoint_cycle_fixtures() -> Vec<(String, SimpleGraph)> {
    let chain = |lengths: &[usize]| {
        let mut edges = Vec::new();
        let mut start = 0;
        for (k, &r) in lengths.iter().enumerate() {
            for i in 0..r {
                edges.push((start + i, start + (i + 1) % r));
            }
            if k + 1 < lengths.len() {
                edges.push((start, start + r));
            }
            start += r;
        }
        SimpleGraph::new(start, edges).expect("simple by construction")
    };
    let mut out: Vec<(String, SimpleGraph)> = (3..=7).map(|r| (format!("C{r}"), chain(&[r]))).collect();
    for lengths in [&[3, 3][..], &[3, 4], &[4, 5], &[4, 6], &[3, 4, 5], &[5, 5, 6]] {
        out.push((format!("chain {lengths:?}"), chain(lengths)));
    }
    out
}

#[derive(Debug, Clone)]
pub struct InstanceReport {
    pub label: String,
    pub checks: Vec<BoundCheckResult>,
    pub error: Option<String>,
}

impl InstanceReport {
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.checks.iter().all(BoundCheckResult::passed)
    }
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: Suite,
    pub seed: u64,
    pub count: usize,
    pub instances: Vec<InstanceReport>,
}

impl SuiteReport {
    pub fn check_count(&self) -> usize {
        self.instances.iter().map(|i| i.checks.len()).sum()
    }

    pub fn failures(&self) -> Vec<(&InstanceReport, Option<&BoundCheckResult>)> {
        let mut out = Vec::new();
        for inst in &self.instances {
            if inst.error.is_some() {
                out.push((inst, None));
            }
            for c in inst.checks.iter().filter(|c| !c.passed()) {
                out.push((inst, Some(c)));
            }
        }
        out
    }

    pub fn passed(&self) -> bool {
        self.instances.iter().all(InstanceReport::passed)
    }
}

fn collect(label: String, run: impl FnOnce() -> Result<Vec<BoundCheckResult>, TheoremError>) -> InstanceReport {
    match run() {
        Ok(checks) => InstanceReport { label, checks, error: None },
        Err(e) => InstanceReport { label, checks: Vec::new(), error: Some(e.to_string()) },
    }
}

fn general_corpus(seed: u64, count: usize) -> Vec<Instance> {
    let mut all = fixture_corpus();
    all.extend(random_corpus(seed, count));
    all
}

fn run_lower_bounds(seed: u64, count: usize) -> Vec<InstanceReport> {
    general_corpus(seed, count)
        .into_iter()
        .map(|inst| {
            collect(inst.label, || {
                let mut checks = check_spectral_basics(&inst.phi)?;
                checks.extend(check_energy_lower_bounds(&inst.phi)?);
                Ok(checks)
            })
        })
        .collect()
}

fn run_matching_bounds(seed: u64, count: usize) -> Vec<InstanceReport> {
    let mut out: Vec<InstanceReport> = general_corpus(seed, count)
        .into_iter()
        .map(|inst| collect(inst.label, || check_matching_bounds(&inst.phi)))
        .collect();
    out.push(collect("two-page book with one -1 edge".into(), book_counterexample));
    out.push(collect("double stars and books against T1".into(), || t1_comparison_sweep(6, 20, seed)));
    out
}

fn run_cycle_gains(seed: u64, count: usize) -> Vec<InstanceReport> {
    let mut out = Vec::new();
    for r in 3..=8 {
        let g = named_family(Family::Cycle(r)).expect("cycle");
        out.push(collect(format!("C{r} sweep"), || check_unicyclic(&g, 64)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in 0..count.div_ceil(5) {
        let n = rng.random_range(3..=10);
        let g = random_unicyclic(n, &mut rng);
        out.push(collect(format!("random unicyclic #{k} (n={n})"), || check_unicyclic(&g, 16)));
    }
    for (label, g) in disjoint_cycle_fixtures() {
        out.push(collect(format!("{label} witness"), || Ok(vec![nonequienergetic_witness(&g)?.check])));
    }
    let two_triangles = disjoint_cycle_fixtures().into_iter().find(|(l, _)| l == "chain [3, 3]").expect("fixture").1;
    out.push(collect("two triangles, pure imaginary".into(), || check_pure_imaginary_pair(&two_triangles, &[1, 1], &[1, -1])));
    out
}

pub fn run_suite(suite: Suite, seed: u64, count: usize) -> SuiteReport {
    let instances = match suite {
        Suite::LowerBounds => run_lower_bounds(seed, count),
        Suite::MatchingBounds => run_matching_bounds(seed, count),
        Suite::CycleGains => run_cycle_gains(seed, count),
        Suite::All => {
            let mut all = run_lower_bounds(seed, count);
            all.extend(run_matching_bounds(seed, count));
            all.extend(run_cycle_gains(seed, count));
            all
        }
    };
    SuiteReport { suite, seed, count, instances }
}

/// A non-unicyclic graph with two gain graphs whose energies bracket its own.
#[derive(Debug, Clone)]
pub struct Sandwich {
    pub graph: SimpleGraph,
    pub below: GainGraph<f64>,
    pub above: GainGraph<f64>,
    pub energy_below: f64,
    pub energy_graph: f64,
    pub energy_above: f64,
}

/// Searches random connected graphs with `m > n` for gains strictly below
/// and strictly above the all-ones energy.
pub fn sandwich_search(seed: u64, tries: usize) -> Result<Option<Sandwich>, TheoremError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..tries {
        let n = rng.random_range(4..=8);
        let g = random_graph_with(n, 0.5, &mut rng);
        if !g.is_connected() || g.m() <= g.n() {
            continue;
        }
        let eg = graph_spectrum::<f64>(&g)?.energy();
        let mut below: Option<(f64, GainGraph<f64>)> = None;
        let mut above: Option<(f64, GainGraph<f64>)> = None;
        for _ in 0..16 {
            let phi = random_gains_with(&g, &mut rng);
            let e = energy(&phi)?.energy;
            if e < eg - 1e-6 && below.as_ref().is_none_or(|(b, _)| e < *b) {
                below = Some((e, phi));
            } else if e > eg + 1e-6 && above.as_ref().is_none_or(|(a, _)| e > *a) {
                above = Some((e, phi));
            }
        }
        if let (Some((eb, pb)), Some((ea, pa))) = (below, above) {
            return Ok(Some(Sandwich { graph: g, below: pb, above: pa, energy_below: eb, energy_graph: eg, energy_above: ea }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_seeded_and_connected() {
        let a = random_corpus(7, 30);
        let b = random_corpus(7, 30);
        assert_eq!(a.len(), 30);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.phi, y.phi);
            assert!(x.phi.graph().is_connected());
        }
    }

    #[test]
    fn unicyclic_generator() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in 3..12 {
            let g = random_unicyclic(n, &mut rng);
            assert!(g.is_connected() && g.m() == n);
        }
    }

    #[test]
    fn small_suites_pass() {
        for suite in [Suite::LowerBounds, Suite::MatchingBounds, Suite::CycleGains] {
            let report = run_suite(suite, 0, 10);
            assert!(report.passed(), "{suite}: {:#?}", report.failures());
        }
    }

    #[test]
    fn sandwich_found() {
        let s = sandwich_search(0, 200).unwrap().expect("sandwich");
        assert!(s.energy_below < s.energy_graph && s.energy_graph < s.energy_above);
        assert!(s.graph.m() > s.graph.n());
    }

    #[test]
    fn suite_tokens_round_trip() {
        for s in ["sec3", "sec4", "sec5", "all"] {
            assert_eq!(s.parse::<Suite>().unwrap().to_string(), s);
        }
        assert!("sec6".parse::<Suite>().is_err());
    }
}
