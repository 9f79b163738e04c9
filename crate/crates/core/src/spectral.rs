//! Hermitian adjacency matrices and a dense Hermitian eigensolver
//! (Householder tridiagonalisation followed by implicit QL), plus energy,
//! vertex energies and spectral radius.

use num_complex::Complex;
use thiserror::Error;

use crate::gain::GainGraph;
use crate::graph::SimpleGraph;
use crate::scalar::{phase, Real};

/// QL sweeps allowed per eigenvalue before giving up.
pub const QL_ITERATION_CAP: usize = 60;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("QL iteration for eigenvalue {index} did not converge (off-diagonal residual {residual:e})")]
    IterationCap { index: usize, residual: f64 },
    #[error("entries ({row}, {col}) and ({col}, {row}) are not conjugate")]
    NotHermitian { row: usize, col: usize },
    #[error("expected {expected} entries, got {got}")]
    Dimension { expected: usize, got: usize },
}

/// Dense square complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SquareMatrix<T> {
    n: usize,
    data: Vec<Complex<T>>,
}

impl<T: Real> SquareMatrix<T> {
    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![Complex::new(T::zero(), T::zero()); n * n] }
    }

    pub fn from_rows(n: usize, data: Vec<Complex<T>>) -> Result<Self, SpectralError> {
        if data.len() != n * n {
            return Err(SpectralError::Dimension { expected: n * n, got: data.len() });
        }
        Ok(Self { n, data })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Complex<T> {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, z: Complex<T>) {
        self.data[i * self.n + j] = z;
    }

    pub fn entries(&self) -> &[Complex<T>] {
        &self.data
    }

    pub fn add(&self, other: &Self) -> Result<Self, SpectralError> {
        if other.n != self.n {
            return Err(SpectralError::Dimension { expected: self.n * self.n, got: other.n * other.n });
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(Self { n: self.n, data })
    }

    /// Maximum absolute row sum.
    pub fn norm_inf(&self) -> T {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).norm()).sum::<T>())
            .fold(T::zero(), T::max)
    }
}

/// A square matrix equal to its conjugate transpose.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix<T>(SquareMatrix<T>);

impl<T: Real> HermitianMatrix<T> {
    /// Checks `a(p, q) == conj(a(q, p))` exactly.
    pub fn new(matrix: SquareMatrix<T>) -> Result<Self, SpectralError> {
        for i in 0..matrix.n {
            for j in i..matrix.n {
                if matrix.get(i, j) != matrix.get(j, i).conj() {
                    return Err(SpectralError::NotHermitian { row: i, col: j });
                }
            }
        }
        Ok(Self(matrix))
    }

    pub fn order(&self) -> usize {
        self.0.n
    }

    pub fn get(&self, i: usize, j: usize) -> Complex<T> {
        self.0.get(i, j)
    }

    pub fn as_square(&self) -> &SquareMatrix<T> {
        &self.0
    }

    pub fn into_square(self) -> SquareMatrix<T> {
        self.0
    }

    pub fn norm_inf(&self) -> T {
        self.0.norm_inf()
    }

    /// `A x`.
    pub fn apply(&self, x: &[Complex<T>]) -> Vec<Complex<T>> {
        let n = self.order();
        (0..n)
            .map(|i| (0..n).fold(Complex::new(T::zero(), T::zero()), |acc, j| acc + self.get(i, j) * x[j]))
            .collect()
    }
}

/// Hermitian adjacency matrix: entry `(p, q)` is the gain of `p -> q`.
pub fn adjacency<T: Real>(phi: &GainGraph<T>) -> HermitianMatrix<T> {
    let mut a = SquareMatrix::zeros(phi.n());
    for (&(u, v), &g) in phi.graph().edges().iter().zip(phi.gains()) {
        a.set(u, v, g);
        a.set(v, u, g.conj());
    }
    HermitianMatrix(a)
}

/// Eigenvalues in ascending order with a unitary matrix of matching
/// eigenvector columns.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum<T> {
    pub eigenvalues: Vec<T>,
    /// Row-major `n x n`; column `j` is the eigenvector of `eigenvalues[j]`.
    pub eigenvectors: Vec<Complex<T>>,
}

impl<T: Real> Spectrum<T> {
    pub fn n(&self) -> usize {
        self.eigenvalues.len()
    }

    /// Component `i` of eigenvector `j`.
    pub fn q(&self, i: usize, j: usize) -> Complex<T> {
        self.eigenvectors[i * self.n() + j]
    }

    pub fn column(&self, j: usize) -> Vec<Complex<T>> {
        (0..self.n()).map(|i| self.q(i, j)).collect()
    }

    pub fn energy(&self) -> T {
        self.eigenvalues.iter().map(|l| l.abs()).sum()
    }

    pub fn spectral_radius(&self) -> T {
        self.eigenvalues.iter().map(|l| l.abs()).fold(T::zero(), T::max)
    }
}

/// Full eigendecomposition of a Hermitian matrix.
pub fn eigensystem<T: Real>(a: &HermitianMatrix<T>) -> Result<Spectrum<T>, SpectralError> {
    let n = a.order();
    if n == 0 {
        return Ok(Spectrum { eigenvalues: Vec::new(), eigenvectors: Vec::new() });
    }
    let mut work = a.0.data.clone();
    let mut q = identity::<T>(n);
    householder_tridiagonalize(n, &mut work, &mut q);

    let mut d: Vec<T> = (0..n).map(|k| work[k * n + k].re).collect();
    let mut e = vec![T::zero(); n];
    // rotate columns of Q so the subdiagonal becomes real and nonnegative
    let mut dphase = Complex::new(T::one(), T::zero());
    for k in 0..n {
        if k > 0 {
            let sub = work[k * n + k - 1];
            e[k - 1] = sub.norm();
            dphase = dphase * phase(sub);
            for row in 0..n {
                q[row * n + k] = q[row * n + k] * dphase;
            }
        }
    }

    let mut z = vec![T::zero(); n * n];
    for k in 0..n {
        z[k * n + k] = T::one();
    }
    tql2(n, &mut d, &mut e, &mut z)?;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| d[i].partial_cmp(&d[j]).unwrap_or(std::cmp::Ordering::Equal));
    let eigenvalues = order.iter().map(|&j| d[j]).collect();
    let mut eigenvectors = vec![Complex::new(T::zero(), T::zero()); n * n];
    for row in 0..n {
        for (col, &j) in order.iter().enumerate() {
            let mut acc = Complex::new(T::zero(), T::zero());
            for k in 0..n {
                acc = acc + q[row * n + k] * z[k * n + j];
            }
            eigenvectors[row * n + col] = acc;
        }
    }
    Ok(Spectrum { eigenvalues, eigenvectors })
}

fn identity<T: Real>(n: usize) -> Vec<Complex<T>> {
    let mut q = vec![Complex::new(T::zero(), T::zero()); n * n];
    for k in 0..n {
        q[k * n + k] = Complex::new(T::one(), T::zero());
    }
    q
}

/// Reduces `a` (row-major, Hermitian) in place to tridiagonal form
/// `a <- H a H`, accumulating `q <- q H` for each reflector.
fn householder_tridiagonalize<T: Real>(n: usize, a: &mut [Complex<T>], q: &mut [Complex<T>]) {
    let zero = Complex::new(T::zero(), T::zero());
    for k in 0..n.saturating_sub(2) {
        let alpha = (k + 1..n).map(|i| a[i * n + k].norm_sqr()).sum::<T>().sqrt();
        if alpha == T::zero() {
            continue;
        }
        let mut v = vec![zero; n];
        for i in k + 1..n {
            v[i] = a[i * n + k];
        }
        v[k + 1] = v[k + 1] + phase(v[k + 1]) * alpha;
        let vnorm2: T = v.iter().map(|x| x.norm_sqr()).sum();
        if vnorm2 == T::zero() {
            continue;
        }
        let beta = T::lit(2.0) / vnorm2;

        // p = beta A v ; A <- A - v w* - w v* with w = p - (beta/2)(v* p) v
        let mut p = vec![zero; n];
        for (i, pi) in p.iter_mut().enumerate() {
            let mut acc = zero;
            for j in k + 1..n {
                acc = acc + a[i * n + j] * v[j];
            }
            *pi = acc * beta;
        }
        let vp = (k + 1..n).fold(zero, |acc, i| acc + v[i].conj() * p[i]);
        let half = vp * (beta / T::lit(2.0));
        let w: Vec<Complex<T>> = p.iter().zip(&v).map(|(pi, vi)| pi - half * vi).collect();
        for i in 0..n {
            for j in 0..n {
                a[i * n + j] = a[i * n + j] - v[i] * w[j].conj() - w[i] * v[j].conj();
            }
        }
        // clean the annihilated part of column and row k
        for i in k + 2..n {
            a[i * n + k] = zero;
            a[k * n + i] = zero;
        }
        for i in 0..n {
            a[i * n + i] = Complex::new(a[i * n + i].re, T::zero());
        }

        for row in 0..n {
            let mut qv = zero;
            for j in k + 1..n {
                qv = qv + q[row * n + j] * v[j];
            }
            let scaled = qv * beta;
            for j in k + 1..n {
                q[row * n + j] = q[row * n + j] - scaled * v[j].conj();
            }
        }
    }
}

/// Implicit QL on the symmetric tridiagonal matrix with diagonal `d` and
/// subdiagonal `e` (`e[i]` couples `i` and `i + 1`), accumulating rotations
/// into the columns of `z`.
fn tql2<T: Real>(n: usize, d: &mut [T], e: &mut [T], z: &mut [T]) -> Result<(), SpectralError> {
    let eps = T::epsilon();
    let two = T::lit(2.0);
    let mut f = T::zero();
    let mut tst1 = T::zero();
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n - 1 && e[m].abs() > eps * tst1 {
            m += 1;
        }
        if m > l {
            let mut iter = 0;
            loop {
                iter += 1;
                if iter > QL_ITERATION_CAP {
                    return Err(SpectralError::IterationCap { index: l, residual: e[l].abs().as_f64() });
                }
                let g = d[l];
                let mut p = (d[l + 1] - g) / (two * e[l]);
                let mut r = p.hypot(T::one());
                if p < T::zero() {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let h = g - d[l];
                for di in d.iter_mut().skip(l + 2) {
                    *di = *di - h;
                }
                f = f + h;

                p = d[m];
                let mut c = T::one();
                let mut c2 = c;
                let mut c3 = c;
                let el1 = e[l + 1];
                let mut s = T::zero();
                let mut s2 = T::zero();
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    let g = c * e[i];
                    let h = c * p;
                    let r = p.hypot(e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);
                    for k in 0..n {
                        let h = z[k * n + i + 1];
                        z[k * n + i + 1] = s * z[k * n + i] + c * h;
                        z[k * n + i] = c * z[k * n + i] - s * h;
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
                if e[l].abs() <= eps * tst1 {
                    break;
                }
            }
        }
        d[l] = d[l] + f;
        e[l] = T::zero();
    }
    Ok(())
}

/// Energy, per-vertex energies and spectral radius.
#[derive(Debug, Clone, PartialEq)]
pub struct EnergyReport<T> {
    pub energy: T,
    pub vertex_energies: Vec<T>,
    pub spectral_radius: T,
}

pub fn energy<T: Real>(phi: &GainGraph<T>) -> Result<EnergyReport<T>, SpectralError> {
    Ok(energy_of_spectrum(&eigensystem(&adjacency(phi))?))
}

/// `E_v = sum_j |q_vj|^2 |lambda_j|`.
pub fn energy_of_spectrum<T: Real>(spec: &Spectrum<T>) -> EnergyReport<T> {
    let n = spec.n();
    let vertex_energies = (0..n)
        .map(|i| (0..n).map(|j| spec.q(i, j).norm_sqr() * spec.eigenvalues[j].abs()).sum())
        .collect();
    EnergyReport { energy: spec.energy(), vertex_energies, spectral_radius: spec.spectral_radius() }
}

/// Spectrum of the plain adjacency matrix of `g`.
pub fn graph_spectrum<T: Real>(g: &SimpleGraph) -> Result<Spectrum<T>, SpectralError> {
    eigensystem(&adjacency(&GainGraph::<T>::all_ones(g.clone())))
}

/// Sum of singular values, read off the Hermitian dilation `[[0, A], [A*, 0]]`
/// whose eigenvalues are `+-sigma_j`.
pub fn singular_value_sum<T: Real>(a: &SquareMatrix<T>) -> Result<T, SpectralError> {
    let n = a.order();
    let mut dil = SquareMatrix::zeros(2 * n);
    for i in 0..n {
        for j in 0..n {
            let z = a.get(i, j);
            dil.set(i, n + j, z);
            dil.set(n + j, i, z.conj());
        }
    }
    let spec = eigensystem(&HermitianMatrix(dil))?;
    Ok(spec.energy() / T::lit(2.0))
}
