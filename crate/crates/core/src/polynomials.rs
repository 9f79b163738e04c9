//! Characteristic polynomials (elementary-subgraph sum, Faddeev-LeVerrier,
//! product over eigenvalues), matching polynomials, and the identity
//! expressing the characteristic polynomial through matching polynomials of
//! cycle-deleted subgraphs.

use std::collections::HashMap;

use num_complex::Complex;
use thiserror::Error;

use crate::gain::{cycle_gain, GainGraph};
use crate::graph::{GraphError, SimpleGraph};
use crate::scalar::Real;
use crate::spectral::HermitianMatrix;

/// Largest order for exponential subgraph enumeration.
pub const ENUMERATION_CAP: usize = 16;
/// Largest order for the trace recursion.
pub const FADDEEV_CAP: usize = 64;
/// Largest order for the memoised matching recursion.
pub const MATCHING_CAP: usize = 24;
/// Cap on simple cycles listed for subgraph enumeration.
pub const CYCLE_ENUMERATION_CAP: usize = 200_000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PolynomialError {
    #[error("{what} is limited to n <= {cap}, got n = {n}")]
    CapExceeded { what: &'static str, n: usize, cap: usize },
    #[error("coefficient {index} has imaginary residue {residue:e}")]
    ImaginaryResidue { index: usize, residue: f64 },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn check_cap(what: &'static str, n: usize, cap: usize) -> Result<(), PolynomialError> {
    if n > cap {
        Err(PolynomialError::CapExceeded { what, n, cap })
    } else {
        Ok(())
    }
}

/// Real polynomial stored by descending powers: `coeffs[k]` multiplies
/// `x^(degree - k)`.
#[derive(Debug, Clone, PartialEq)]
pub struct RealPolynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Real> RealPolynomial<T> {
    pub fn new(coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "a polynomial needs at least one coefficient");
        Self { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient `b_k` of `x^(degree - k)`.
    pub fn b(&self, k: usize) -> T {
        self.coeffs.get(k).copied().unwrap_or_else(T::zero)
    }

    pub fn eval(&self, x: T) -> T {
        self.coeffs.iter().fold(T::zero(), |acc, &c| acc * x + c)
    }

    pub fn eval_complex(&self, z: Complex<T>) -> Complex<T> {
        self.coeffs.iter().fold(Complex::new(T::zero(), T::zero()), |acc, &c| acc * z + c)
    }

    /// `prod_j (x - r_j)`.
    pub fn from_roots(roots: &[T]) -> Self {
        let mut coeffs = vec![T::one()];
        for &r in roots {
            let mut next = coeffs.clone();
            next.push(T::zero());
            for (k, &c) in coeffs.iter().enumerate() {
                next[k + 1] = next[k + 1] - r * c;
            }
            coeffs = next;
        }
        Self { coeffs }
    }

    /// Largest coefficient-wise difference; `None` if the degrees differ.
    pub fn max_abs_diff(&self, other: &Self) -> Option<T> {
        (self.degree() == other.degree())
            .then(|| self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| (*a - *b).abs()).fold(T::zero(), T::max))
    }

    /// Integer coefficients, if every coefficient lies within `tol` of one.
    pub fn to_integers(&self, tol: T) -> Option<Vec<i64>> {
        self.coeffs
            .iter()
            .map(|c| {
                let r = c.round();
                ((*c - r).abs() <= tol).then(|| r.to_i64()).flatten()
            })
            .collect()
    }
}

/// A spanning-free subgraph whose components are single edges and cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementarySubgraph {
    pub edges: Vec<(usize, usize)>,
    /// Canonical cycles (lowest vertex first, lower neighbour second).
    pub cycles: Vec<Vec<usize>>,
    pub vertex_count: usize,
}

impl ElementarySubgraph {
    pub fn component_count(&self) -> usize {
        self.edges.len() + self.cycles.len()
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }
}

/// A nonempty set of pairwise vertex-disjoint cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleUnion {
    pub cycles: Vec<Vec<usize>>,
    pub vertex_count: usize,
}

impl CycleUnion {
    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    pub fn vertex_mask(&self) -> u32 {
        self.cycles.iter().flatten().fold(0, |m, &v| m | (1 << v))
    }
}

struct CycleTable {
    cycles: Vec<Vec<usize>>,
    masks: Vec<u32>,
    /// Cycle indices grouped by their lowest vertex.
    by_min: Vec<Vec<usize>>,
}

impl CycleTable {
    fn new(g: &SimpleGraph) -> Result<Self, PolynomialError> {
        let cycles = g.simple_cycles(CYCLE_ENUMERATION_CAP)?;
        let masks = cycles.iter().map(|c| c.iter().fold(0u32, |m, &v| m | (1 << v))).collect();
        let mut by_min = vec![Vec::new(); g.n()];
        for (k, c) in cycles.iter().enumerate() {
            by_min[c[0]].push(k);
        }
        Ok(Self { cycles, masks, by_min })
    }
}

/// Visits every elementary subgraph by deciding the lowest uncovered vertex:
/// leave it out, cover it with an edge to a higher uncovered vertex, or cover
/// it with a cycle whose lowest vertex it is.
fn walk_elementary(
    g: &SimpleGraph,
    table: &CycleTable,
    start: usize,
    covered: u32,
    edges: &mut Vec<(usize, usize)>,
    cycles: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[(usize, usize)], &[usize], u32),
) {
    let n = g.n();
    let mut v = start;
    while v < n && covered & (1 << v) != 0 {
        v += 1;
    }
    if v >= n {
        visit(edges, cycles, covered);
        return;
    }
    walk_elementary(g, table, v + 1, covered, edges, cycles, visit);
    for &w in g.neighbors(v) {
        if w > v && covered & (1 << w) == 0 {
            edges.push((v, w));
            walk_elementary(g, table, v + 1, covered | (1 << v) | (1 << w), edges, cycles, visit);
            edges.pop();
        }
    }
    for &k in &table.by_min[v] {
        if table.masks[k] & covered == 0 {
            cycles.push(k);
            walk_elementary(g, table, v + 1, covered | table.masks[k], edges, cycles, visit);
            cycles.pop();
        }
    }
}

/// All elementary subgraphs on exactly `i` vertices.
pub fn enumerate_elementary_subgraphs(g: &SimpleGraph, i: usize) -> Result<Vec<ElementarySubgraph>, PolynomialError> {
    check_cap("elementary subgraph enumeration", g.n(), ENUMERATION_CAP)?;
    let table = CycleTable::new(g)?;
    let mut out = Vec::new();
    walk_elementary(g, &table, 0, 0, &mut Vec::new(), &mut Vec::new(), &mut |edges, cycles, covered| {
        if covered.count_ones() as usize == i && i > 0 {
            out.push(ElementarySubgraph {
                edges: edges.to_vec(),
                cycles: cycles.iter().map(|&k| table.cycles[k].clone()).collect(),
                vertex_count: i,
            });
        }
    });
    Ok(out)
}

/// `b_i = sum over elementary H on i vertices of (-1)^n(H) 2^c(H) prod_C Re(gain(C))`.
pub fn char_poly_subgraph<T: Real>(phi: &GainGraph<T>) -> Result<RealPolynomial<T>, PolynomialError> {
    let g = phi.graph();
    let n = g.n();
    check_cap("elementary subgraph enumeration", n, ENUMERATION_CAP)?;
    let table = CycleTable::new(g)?;
    let re: Vec<T> = table
        .cycles
        .iter()
        .map(|c| cycle_gain(phi, c).expect("listed cycles are cycles").real_part)
        .collect();
    let mut coeffs = vec![T::zero(); n + 1];
    coeffs[0] = T::one();
    walk_elementary(g, &table, 0, 0, &mut Vec::new(), &mut Vec::new(), &mut |edges, cycles, covered| {
        if covered == 0 {
            return;
        }
        let components = edges.len() + cycles.len();
        let mut term = T::lit(2f64.powi(cycles.len() as i32));
        if components % 2 == 1 {
            term = -term;
        }
        for &k in cycles {
            term = term * re[k];
        }
        let i = covered.count_ones() as usize;
        coeffs[i] = coeffs[i] + term;
    });
    Ok(RealPolynomial::new(coeffs))
}

/// Trace recursion `M_k = A M_(k-1) + c_(k-1) I`, `c_k = -tr(A M_k) / k`.
pub fn char_poly_faddeev<T: Real>(a: &HermitianMatrix<T>) -> Result<RealPolynomial<T>, PolynomialError> {
    let n = a.order();
    check_cap("Faddeev-LeVerrier", n, FADDEEV_CAP)?;
    let zero = Complex::new(T::zero(), T::zero());
    let tol = T::tolerance(1e-8, 1e3);
    let mut coeffs = vec![T::one()];
    let mut m = vec![zero; n * n];
    let mut prev = Complex::new(T::one(), T::zero());
    for k in 1..=n {
        // m <- A m + prev I
        let mut next = vec![zero; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = zero;
                for l in 0..n {
                    acc = acc + a.get(i, l) * m[l * n + j];
                }
                next[i * n + j] = acc;
            }
            next[i * n + i] = next[i * n + i] + prev;
        }
        m = next;
        let mut trace = zero;
        for i in 0..n {
            for l in 0..n {
                trace = trace + a.get(i, l) * m[l * n + i];
            }
        }
        let c = -trace / T::from_usize(k).unwrap();
        if c.im.abs() > tol * T::one().max(c.re.abs()) {
            return Err(PolynomialError::ImaginaryResidue { index: k, residue: c.im.as_f64() });
        }
        coeffs.push(c.re);
        prev = Complex::new(c.re, T::zero());
    }
    Ok(RealPolynomial::new(coeffs))
}

/// Monic polynomial with the given eigenvalues as roots.
pub fn char_poly_eigen<T: Real>(eigenvalues: &[T]) -> RealPolynomial<T> {
    RealPolynomial::from_roots(eigenvalues)
}

/// Memoised matching counts `m(G[S], j)` keyed by the vertex subset `S`.
pub struct MatchingTable {
    adjacency: Vec<u32>,
    memo: HashMap<u32, Vec<u64>>,
}

impl MatchingTable {
    pub fn new(g: &SimpleGraph) -> Result<Self, PolynomialError> {
        check_cap("matching polynomial", g.n(), MATCHING_CAP)?;
        let adjacency = (0..g.n()).map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w))).collect();
        Ok(Self { adjacency, memo: HashMap::new() })
    }

    pub fn full_mask(&self) -> u32 {
        ((1u64 << self.adjacency.len()) - 1) as u32
    }

    /// `counts[j]` is the number of `j`-matchings of the subgraph induced on `mask`.
    pub fn counts(&mut self, mask: u32) -> Vec<u64> {
        if mask == 0 {
            return vec![1];
        }
        if let Some(c) = self.memo.get(&mask) {
            return c.clone();
        }
        // matchings either avoid the lowest vertex v or use an edge vw
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        let mut out = self.counts(rest);
        let mut nbrs = self.adjacency[v] & rest;
        while nbrs != 0 {
            let w = nbrs.trailing_zeros();
            nbrs &= nbrs - 1;
            let sub = self.counts(rest & !(1 << w));
            if out.len() < sub.len() + 1 {
                out.resize(sub.len() + 1, 0);
            }
            for (j, c) in sub.iter().enumerate() {
                out[j + 1] += c;
            }
        }
        self.memo.insert(mask, out.clone());
        out
    }
}

/// `m(G, j)` for `j = 0..=mu(G)`.
pub fn matching_counts(g: &SimpleGraph) -> Result<Vec<u64>, PolynomialError> {
    let mut table = MatchingTable::new(g)?;
    let mask = table.full_mask();
    Ok(table.counts(mask))
}

fn matching_poly_from_counts<T: Real>(n: usize, counts: &[u64]) -> RealPolynomial<T> {
    let mut coeffs = vec![T::zero(); n + 1];
    for (j, &c) in counts.iter().enumerate() {
        let v = T::from_u64(c).unwrap();
        coeffs[2 * j] = if j % 2 == 0 { v } else { -v };
    }
    RealPolynomial::new(coeffs)
}

/// `sum_j (-1)^j m(G, j) x^(n - 2j)`.
pub fn matching_poly<T: Real>(g: &SimpleGraph) -> Result<RealPolynomial<T>, PolynomialError> {
    Ok(matching_poly_from_counts(g.n(), &matching_counts(g)?))
}

/// Largest `j` with `m(G, j) > 0`.
pub fn matching_number_from_counts(counts: &[u64]) -> usize {
    counts.iter().rposition(|&c| c > 0).unwrap_or(0)
}

fn walk_unions(table: &CycleTable, from: usize, used: u32, chosen: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize], u32)) {
    for k in from..table.cycles.len() {
        if table.masks[k] & used == 0 {
            chosen.push(k);
            visit(chosen, used | table.masks[k]);
            walk_unions(table, k + 1, used | table.masks[k], chosen, visit);
            chosen.pop();
        }
    }
}

/// Every nonempty set of pairwise vertex-disjoint cycles.
pub fn enumerate_cycle_unions(g: &SimpleGraph) -> Result<Vec<CycleUnion>, PolynomialError> {
    check_cap("cycle union enumeration", g.n(), ENUMERATION_CAP)?;
    let table = CycleTable::new(g)?;
    let mut out = Vec::new();
    walk_unions(&table, 0, 0, &mut Vec::new(), &mut |chosen, used| {
        out.push(CycleUnion {
            cycles: chosen.iter().map(|&k| table.cycles[k].clone()).collect(),
            vertex_count: used.count_ones() as usize,
        });
    });
    Ok(out)
}

/// `m_G(x) + sum_K (-2)^n(K) prod_(C in K) Re(gain(C)) m_(G - K)(x)`.
pub fn char_poly_from_matchings<T: Real>(phi: &GainGraph<T>) -> Result<RealPolynomial<T>, PolynomialError> {
    let g = phi.graph();
    let n = g.n();
    check_cap("cycle union enumeration", n, ENUMERATION_CAP)?;
    let table = CycleTable::new(g)?;
    let re: Vec<T> = table
        .cycles
        .iter()
        .map(|c| cycle_gain(phi, c).expect("listed cycles are cycles").real_part)
        .collect();
    let mut matchings = MatchingTable::new(g)?;
    let full = matchings.full_mask();
    let mut coeffs = matching_poly_from_counts::<T>(n, &matchings.counts(full)).coeffs;
    walk_unions(&table, 0, 0, &mut Vec::new(), &mut |chosen, used| {
        let mut weight = T::lit((-2f64).powi(chosen.len() as i32));
        for &k in chosen {
            weight = weight * re[k];
        }
        let offset = used.count_ones() as usize;
        for (j, &c) in matchings.counts(full & !used).iter().enumerate() {
            let v = T::from_u64(c).unwrap() * weight;
            coeffs[offset + 2 * j] = coeffs[offset + 2 * j] + if j % 2 == 0 { v } else { -v };
        }
    });
    Ok(RealPolynomial::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gain::{random_gains, with_cycle_gain};
    use crate::graph::{double_star, named_family, random_graph, Family};
    use crate::spectral::adjacency;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    fn fam(kind: Family) -> SimpleGraph {
        named_family(kind).unwrap()
    }

    fn all_i_triangle() -> GainGraph<f64> {
        GainGraph::from_directed(fam(Family::Complete(3)), [(0, 1, c(0., 1.)), (1, 2, c(0., 1.)), (2, 0, c(0., 1.))])
            .unwrap()
    }

    /// det(xI - A) at a real point, by Gaussian elimination with partial pivoting.
    fn det_oracle(a: &HermitianMatrix<f64>, x: f64) -> f64 {
        let n = a.order();
        let mut m: Vec<Vec<Complex<f64>>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { c(x, 0.) - a.get(i, j) } else { -a.get(i, j) }).collect())
            .collect();
        let mut det = c(1., 0.);
        for col in 0..n {
            let piv = (col..n).max_by(|&p, &q| m[p][col].norm().partial_cmp(&m[q][col].norm()).unwrap()).unwrap();
            if m[piv][col].norm() == 0.0 {
                return 0.0;
            }
            if piv != col {
                m.swap(piv, col);
                det = -det;
            }
            det *= m[col][col];
            for r in col + 1..n {
                let f = m[r][col] / m[col][col];
                for k in col..n {
                    let t = m[col][k];
                    m[r][k] -= f * t;
                }
            }
        }
        det.re
    }

    /// Brute-force count of j-matchings over all edge subsets.
    fn brute_matching_counts(g: &SimpleGraph) -> Vec<u64> {
        let m = g.m();
        let mut counts = vec![0u64; g.n() / 2 + 1];
        for subset in 0u32..(1 << m) {
            let mut used = 0u64;
            let mut ok = true;
            for k in 0..m {
                if subset & (1 << k) != 0 {
                    let (u, v) = g.edges()[k];
                    if used & ((1 << u) | (1 << v)) != 0 {
                        ok = false;
                        break;
                    }
                    used |= (1 << u) | (1 << v);
                }
            }
            if ok {
                counts[subset.count_ones() as usize] += 1;
            }
        }
        while counts.len() > 1 && *counts.last().unwrap() == 0 {
            counts.pop();
        }
        counts
    }

    #[test]
    fn elementary_subgraphs_of_triangle() {
        let k3 = fam(Family::Complete(3));
        assert_eq!(enumerate_elementary_subgraphs(&k3, 2).unwrap().len(), 3);
        let three = enumerate_elementary_subgraphs(&k3, 3).unwrap();
        assert_eq!(three.len(), 1);
        assert_eq!(three[0].cycles, vec![vec![0, 1, 2]]);
        assert!(enumerate_elementary_subgraphs(&k3, 1).unwrap().is_empty());
        assert!(matches!(
            enumerate_elementary_subgraphs(&fam(Family::Path(17)), 2),
            Err(PolynomialError::CapExceeded { .. })
        ));
    }

    #[test]
    fn elementary_subgraphs_are_duplicate_free() {
        let g = fam(Family::Complete(5));
        for i in 2..=5 {
            let list = enumerate_elementary_subgraphs(&g, i).unwrap();
            for (a, x) in list.iter().enumerate() {
                for y in &list[a + 1..] {
                    assert_ne!(x, y);
                }
            }
        }
        // perfect matchings of K4 and its Hamiltonian cycles
        let k4 = fam(Family::Complete(4));
        let four = enumerate_elementary_subgraphs(&k4, 4).unwrap();
        assert_eq!(four.iter().filter(|h| h.cycles.is_empty()).count(), 3);
        assert_eq!(four.iter().filter(|h| h.cycle_count() == 1).count(), 3);
    }

    #[test]
    fn subgraph_char_polys() {
        let k3 = GainGraph::<f64>::all_ones(fam(Family::Complete(3)));
        assert_eq!(char_poly_subgraph(&k3).unwrap().coeffs(), &[1.0, 0.0, -3.0, -2.0]);
        assert_eq!(char_poly_subgraph(&all_i_triangle()).unwrap().coeffs(), &[1.0, 0.0, -3.0, 0.0]);
        for cre in [1.0, 0.0, -1.0] {
            let z = c(cre, (1.0 - cre * cre).sqrt());
            let phi = with_cycle_gain(&fam(Family::Cycle(4)), z).unwrap();
            let p = char_poly_subgraph(&phi).unwrap();
            let want = RealPolynomial::new(vec![1.0, 0.0, -4.0, 0.0, 2.0 - 2.0 * cre]);
            assert!(p.max_abs_diff(&want).unwrap() < 1e-12);
            let a = adjacency(&phi);
            for x in [-1.5, 0.3, 2.2] {
                assert!((p.eval(x) - det_oracle(&a, x)).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn faddeev_char_polys() {
        let zero = adjacency(&GainGraph::<f64>::all_ones(SimpleGraph::empty(3)));
        assert_eq!(char_poly_faddeev(&zero).unwrap().coeffs(), &[1.0, 0.0, 0.0, 0.0]);
        let k3 = adjacency(&GainGraph::<f64>::all_ones(fam(Family::Complete(3))));
        let p = char_poly_faddeev(&k3).unwrap();
        assert!(p.max_abs_diff(&RealPolynomial::new(vec![1.0, 0.0, -3.0, -2.0])).unwrap() < 1e-12);
        let p3 = adjacency(&GainGraph::<f64>::all_ones(fam(Family::Path(3))));
        let p = char_poly_faddeev(&p3).unwrap();
        assert!(p.max_abs_diff(&RealPolynomial::new(vec![1.0, 0.0, -2.0, 0.0])).unwrap() < 1e-12);
    }

    #[test]
    fn three_methods_agree_with_determinant() {
        for seed in 0..30u64 {
            let n = 2 + seed as usize % 8;
            let g = random_graph(n, 0.5, seed);
            let phi = random_gains::<f64>(&g, seed + 100);
            let a = adjacency(&phi);
            let sub = char_poly_subgraph(&phi).unwrap();
            let fad = char_poly_faddeev(&a).unwrap();
            let eig = char_poly_eigen(&crate::spectral::eigensystem(&a).unwrap().eigenvalues);
            assert!(sub.max_abs_diff(&fad).unwrap() < 1e-8);
            assert!(sub.max_abs_diff(&eig).unwrap() < 1e-8);
            for x in [-2.0, 0.5, 1.7] {
                assert!((sub.eval(x) - det_oracle(&a, x)).abs() < 1e-8 * (1.0 + sub.eval(x).abs()));
            }
            assert_eq!(sub.b(1), 0.0);
            assert!((sub.b(2) + g.m() as f64).abs() < 1e-12);
        }
    }

    #[test]
    fn matching_polys_match_brute_force() {
        assert_eq!(matching_poly::<f64>(&fam(Family::Path(3))).unwrap().coeffs(), &[1.0, 0.0, -2.0, 0.0]);
        assert_eq!(matching_poly::<f64>(&fam(Family::Cycle(4))).unwrap().coeffs(), &[1.0, 0.0, -4.0, 0.0, 2.0]);
        for a in 0..=3 {
            for b in 0..=3 {
                let g = double_star(a, b);
                let counts = matching_counts(&g).unwrap();
                assert_eq!(counts, brute_matching_counts(&g));
                assert_eq!(counts[1], (a + b + 1) as u64);
                assert_eq!(counts.get(2).copied().unwrap_or(0), (a * b) as u64);
            }
        }
        for seed in 0..30u64 {
            let g = random_graph(2 + seed as usize % 9, 0.45, seed);
            if g.m() <= 20 {
                assert_eq!(matching_counts(&g).unwrap(), brute_matching_counts(&g));
            }
        }
    }

    #[test]
    fn cycle_union_counts() {
        assert!(enumerate_cycle_unions(&fam(Family::DoubleStar(2, 3))).unwrap().is_empty());
        let k4 = enumerate_cycle_unions(&fam(Family::Complete(4))).unwrap();
        assert_eq!(k4.len(), 7);
        let two = fam(Family::Cycle(3)).disjoint_union(&fam(Family::Cycle(3)));
        let unions = enumerate_cycle_unions(&two).unwrap();
        assert_eq!(unions.len(), 3);
        assert_eq!(unions.iter().filter(|u| u.cycle_count() == 2).count(), 1);
    }

    #[test]
    fn reconstruction_matches_subgraph_sum() {
        let tree = random_gains::<f64>(&fam(Family::DoubleStar(2, 1)), 4);
        assert_eq!(char_poly_from_matchings(&tree).unwrap(), matching_poly(tree.graph()).unwrap());
        assert_eq!(char_poly_from_matchings(&all_i_triangle()).unwrap().coeffs(), &[1.0, 0.0, -3.0, 0.0]);
        let c4 = with_cycle_gain(&fam(Family::Cycle(4)), crate::scalar::unit(1.0f64)).unwrap();
        let want = RealPolynomial::new(vec![1.0, 0.0, -4.0, 0.0, 2.0 - 2.0 * 1f64.cos()]);
        assert!(char_poly_from_matchings(&c4).unwrap().max_abs_diff(&want).unwrap() < 1e-12);
        for seed in 0..30u64 {
            let g = random_graph(3 + seed as usize % 7, 0.55, seed * 7);
            let phi = random_gains::<f64>(&g, seed);
            let diff = char_poly_from_matchings(&phi).unwrap().max_abs_diff(&char_poly_subgraph(&phi).unwrap()).unwrap();
            assert!(diff < 1e-9);
        }
    }

    #[test]
    fn polynomial_helpers() {
        let p = RealPolynomial::from_roots(&[1.0, -2.0]);
        assert_eq!(p.coeffs(), &[1.0, 1.0, -2.0]);
        assert_eq!(p.eval(3.0), 10.0);
        assert_eq!(p.to_integers(1e-9), Some(vec![1, 1, -2]));
        assert_eq!(RealPolynomial::new(vec![1.0, 0.5]).to_integers(1e-9), None);
        assert_eq!(p.max_abs_diff(&RealPolynomial::new(vec![1.0])), None);
    }
}
