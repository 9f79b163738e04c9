//! Energy from the characteristic polynomial through the Coulson integral
//!
//! `E = (1/pi) int_0^inf t^-2 log(A(t)^2 + B(t)^2) dt`
//!
//! where `A` and `B` collect the even and odd coefficients with alternating
//! signs. The range is split at `t = 1`; on `[1, inf)` the substitution
//! `t = 1/s` turns the integrand into `log|P(is)|^2 - 2n log s`, and the
//! `log s` part is integrated in closed form.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use num_complex::Complex;
use thiserror::Error;

use crate::graph::SimpleGraph;
use crate::polynomials::{matching_poly, PolynomialError, RealPolynomial};
use crate::scalar::Real;

pub const DEFAULT_TOLERANCE: f64 = 1e-6;
pub const EVALUATION_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QuadratureError {
    #[error("tolerance must be positive, got {0}")]
    BadTolerance(f64),
    #[error("polynomial must be monic, leading coefficient is {0}")]
    NotMonic(f64),
    #[error("refinement stopped after {evaluations} evaluations with error estimate {estimate:e}")]
    RefinementCap { evaluations: usize, estimate: f64 },
    #[error("integrand is not finite at t = {0}")]
    SingularIntegrand(f64),
    #[error(transparent)]
    Polynomial(#[from] PolynomialError),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult<T> {
    pub value: T,
    pub abs_error_estimate: T,
    pub evaluations: usize,
}

/// `A(t) = sum_k (-1)^k b_2k t^2k` and `B(t) = sum_k (-1)^k b_(2k+1) t^(2k+1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct IntegrandCoefficients<T> {
    /// Coefficient of `t^2k`.
    pub a_coeffs: Vec<T>,
    /// Coefficient of `t^(2k+1)`.
    pub b_coeffs: Vec<T>,
    /// `lim_(t -> 0) log(A^2 + B^2) / t^2 = b_1^2 - 2 b_2`.
    pub limit_at_zero: T,
}

impl<T: Real> IntegrandCoefficients<T> {
    pub fn new(p: &RealPolynomial<T>) -> Self {
        let mut a_coeffs = Vec::new();
        let mut b_coeffs = Vec::new();
        for (k, &b) in p.coeffs().iter().enumerate() {
            let signed = if (k / 2) % 2 == 0 { b } else { -b };
            if k % 2 == 0 {
                a_coeffs.push(signed);
            } else {
                b_coeffs.push(signed);
            }
        }
        let limit_at_zero = p.b(1) * p.b(1) - T::lit(2.0) * p.b(2);
        Self { a_coeffs, b_coeffs, limit_at_zero }
    }

    pub fn a(&self, t: T) -> T {
        let t2 = t * t;
        self.a_coeffs.iter().rev().fold(T::zero(), |acc, &c| acc * t2 + c)
    }

    pub fn b(&self, t: T) -> T {
        let t2 = t * t;
        t * self.b_coeffs.iter().rev().fold(T::zero(), |acc, &c| acc * t2 + c)
    }

    /// `A(t) - 1`, summed without forming `A`.
    fn a_minus_one(&self, t: T) -> T {
        let t2 = t * t;
        t2 * self.a_coeffs.iter().skip(1).rev().fold(T::zero(), |acc, &c| acc * t2 + c)
    }

    /// `log(A(t)^2 + B(t)^2) / t^2`, with its limit at `t = 0`.
    pub fn integrand(&self, t: T) -> T {
        if t == T::zero() {
            return self.limit_at_zero;
        }
        let a = self.a_minus_one(t);
        let b = self.b(t);
        (a * (T::lit(2.0) + a) + b * b).ln_1p() / (t * t)
    }
}

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];
const WG: [f64; 4] = [0.129_484_966_168_869_7, 0.279_705_391_489_276_7, 0.381_830_050_505_118_9, 0.417_959_183_673_469_4];

/// Kronrod estimate and `|Kronrod - Gauss|` on `[a, b]`.
fn gauss_kronrod<T: Real>(f: &dyn Fn(T) -> T, a: T, b: T) -> Result<(T, T), QuadratureError> {
    let two = T::lit(2.0);
    let centre = (a + b) / two;
    let half = (b - a) / two;
    let eval = |x: T| {
        let y = f(x);
        if y.is_finite() {
            Ok(y)
        } else {
            Err(QuadratureError::SingularIntegrand(x.as_f64()))
        }
    };
    let fc = eval(centre)?;
    let mut kronrod = fc * T::lit(WGK[7]);
    let mut gauss = fc * T::lit(WG[3]);
    for j in 0..7 {
        let dx = half * T::lit(XGK[j]);
        let pair = eval(centre - dx)? + eval(centre + dx)?;
        kronrod = kronrod + pair * T::lit(WGK[j]);
        if j % 2 == 1 {
            gauss = gauss + pair * T::lit(WG[j / 2]);
        }
    }
    Ok((kronrod * half, ((kronrod - gauss) * half).abs()))
}

struct Panel<T> {
    which: usize,
    a: T,
    b: T,
    value: T,
    error: T,
}

impl<T: Real> PartialEq for Panel<T> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl<T: Real> Eq for Panel<T> {}
impl<T: Real> PartialOrd for Panel<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl<T: Real> Ord for Panel<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        // largest error first; ties by position for a fixed processing order
        self.error
            .partial_cmp(&other.error)
            .unwrap_or(Ordering::Equal)
            .then_with(|| other.which.cmp(&self.which))
            .then_with(|| other.a.partial_cmp(&self.a).unwrap_or(Ordering::Equal))
    }
}

/// Sum of `int_0^1 f_k` over all integrands by globally adaptive G7-K15,
/// splitting the panel with the largest error until the total error is at
/// most `tol`.
fn integrate_unit_intervals<T: Real>(fs: &[&dyn Fn(T) -> T], tol: T) -> Result<QuadratureResult<T>, QuadratureError> {
    let mut heap = BinaryHeap::new();
    let mut evaluations = 0;
    for (which, f) in fs.iter().enumerate() {
        let (value, error) = gauss_kronrod(*f, T::zero(), T::one())?;
        evaluations += 15;
        heap.push(Panel { which, a: T::zero(), b: T::one(), value, error });
    }
    loop {
        let error: T = heap.iter().map(|p| p.error).sum();
        if error <= tol {
            break;
        }
        if evaluations + 30 > EVALUATION_CAP {
            return Err(QuadratureError::RefinementCap { evaluations, estimate: error.as_f64() });
        }
        let worst = heap.pop().unwrap();
        let mid = (worst.a + worst.b) / T::lit(2.0);
        if !(mid > worst.a && mid < worst.b) {
            return Err(QuadratureError::RefinementCap { evaluations, estimate: error.as_f64() });
        }
        let f = fs[worst.which];
        for (a, b) in [(worst.a, mid), (mid, worst.b)] {
            let (value, error) = gauss_kronrod(f, a, b)?;
            heap.push(Panel { which: worst.which, a, b, value, error });
        }
        evaluations += 30;
    }
    // fixed summation order: by integrand, then by position
    let mut panels = heap.into_vec();
    panels.sort_by(|p, q| p.which.cmp(&q.which).then(p.a.partial_cmp(&q.a).unwrap_or(Ordering::Equal)));
    Ok(QuadratureResult {
        value: panels.iter().map(|p| p.value).sum(),
        abs_error_estimate: panels.iter().map(|p| p.error).sum(),
        evaluations,
    })
}

/// Energy of any Hermitian matrix with characteristic polynomial `p`.
pub fn coulson_energy<T: Real>(p: &RealPolynomial<T>, tol: T) -> Result<QuadratureResult<T>, QuadratureError> {
    if !(tol > T::zero()) {
        return Err(QuadratureError::BadTolerance(tol.as_f64()));
    }
    if p.b(0) != T::one() {
        return Err(QuadratureError::NotMonic(p.b(0).as_f64()));
    }
    // roots at zero carry no energy and would put a log singularity in the
    // tail; trailing coefficients at rounding level are zeros that cancelled
    // imperfectly, and keeping them spawns spurious roots of size noise^(1/k)
    let mut coeffs = p.coeffs().to_vec();
    let scale = coeffs.iter().fold(T::one(), |m, c| m.max(c.abs()));
    let noise = T::epsilon() * T::lit(1e3) * scale;
    while coeffs.len() > 1 && coeffs.last().unwrap().abs() <= noise {
        coeffs.pop();
    }
    let q = RealPolynomial::new(coeffs);
    let n = q.degree();
    if n == 0 {
        return Ok(QuadratureResult { value: T::zero(), abs_error_estimate: T::zero(), evaluations: 0 });
    }
    let head = IntegrandCoefficients::new(&q);
    let near = |t: T| head.integrand(t);
    let tail = |s: T| q.eval_complex(Complex::new(T::zero(), s)).norm_sqr().ln();
    let pi = T::PI();
    let result = integrate_unit_intervals::<T>(&[&near, &tail], tol * pi)?;
    let closed = T::from_usize(2 * n).unwrap();
    Ok(QuadratureResult {
        value: (result.value + closed) / pi,
        abs_error_estimate: result.abs_error_estimate / pi,
        evaluations: result.evaluations,
    })
}

/// The Coulson integral with `A(t) = 1 + sum_j m(G, j) t^2j` and `B = 0`.
pub fn matching_energy<T: Real>(g: &SimpleGraph, tol: T) -> Result<QuadratureResult<T>, QuadratureError> {
    coulson_energy(&matching_poly::<T>(g)?, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gain::random_gains;
    use crate::graph::{named_family, random_graph, Family};
    use crate::polynomials::char_poly_subgraph;
    use crate::spectral::energy;
    use approx::assert_abs_diff_eq;

    fn poly(c: &[f64]) -> RealPolynomial<f64> {
        RealPolynomial::new(c.to_vec())
    }

    #[test]
    fn small_polynomials() {
        assert_abs_diff_eq!(coulson_energy(&poly(&[1., 0., -1.]), 1e-6).unwrap().value, 2.0, epsilon = 1e-5);
        assert_abs_diff_eq!(
            coulson_energy(&poly(&[1., 0., -3., 0.]), 1e-6).unwrap().value,
            2.0 * 3f64.sqrt(),
            epsilon = 1e-5
        );
        assert_abs_diff_eq!(coulson_energy(&poly(&[1., 0., -3., -2.]), 1e-6).unwrap().value, 4.0, epsilon = 1e-5);
    }

    #[test]
    fn matching_integral() {
        let c3 = named_family(Family::Cycle(3)).unwrap();
        assert_abs_diff_eq!(matching_energy(&c3, 1e-6).unwrap().value, 2.0 * 3f64.sqrt(), epsilon = 1e-5);
        let p3 = named_family(Family::Path(3)).unwrap();
        assert_abs_diff_eq!(matching_energy(&p3, 1e-6).unwrap().value, 2.0 * 2f64.sqrt(), epsilon = 1e-5);
        let single = matching_energy(&SimpleGraph::empty(1), 1e-6).unwrap();
        assert_eq!(single.value, 0.0);
        assert_eq!(matching_energy(&SimpleGraph::empty(0), 1e-6).unwrap().value, 0.0);
    }

    #[test]
    fn limit_and_parities() {
        let co = IntegrandCoefficients::new(&poly(&[1., 0., -3., -2.]));
        assert_eq!(co.a_coeffs, vec![1.0, 3.0]);
        assert_eq!(co.b_coeffs, vec![0.0, 2.0]);
        assert_eq!(co.limit_at_zero, 6.0);
        assert_abs_diff_eq!(co.integrand(1e-5), 6.0, epsilon = 1e-6);
        assert_abs_diff_eq!(co.a(-0.7), co.a(0.7));
        assert_abs_diff_eq!(co.b(-0.7), -co.b(0.7));
    }

    #[test]
    fn input_validation() {
        assert!(matches!(coulson_energy(&poly(&[1., 0., -1.]), 0.0), Err(QuadratureError::BadTolerance(_))));
        assert!(matches!(coulson_energy(&poly(&[2., 0., -1.]), 1e-6), Err(QuadratureError::NotMonic(_))));
    }

    #[test]
    fn agrees_with_eigenvalues_on_random_instances() {
        for seed in 0..25u64 {
            let g = random_graph(2 + seed as usize % 8, 0.5, seed + 9);
            let phi = random_gains::<f64>(&g, seed);
            let p = char_poly_subgraph(&phi).unwrap();
            let q = coulson_energy(&p, 1e-6).unwrap();
            let e = energy(&phi).unwrap().energy;
            assert!((q.value - e).abs() <= 1e-5, "seed {seed}: {} vs {e}", q.value);
            assert!(q.abs_error_estimate >= 0.0);
        }
    }

    #[test]
    fn near_zero_constant_term_is_handled() {
        // roots 0 (perturbed), +-1
        let q = coulson_energy(&poly(&[1., 0., -1., 1e-14]), 1e-6).unwrap();
        assert_abs_diff_eq!(q.value, 2.0, epsilon = 1e-5);
    }

    #[test]
    fn rounding_level_trailing_coefficients_are_zero_roots() {
        // x^4 (x^2 - 1) with Faddeev-sized noise in the last two coefficients
        let q = coulson_energy(&poly(&[1., 0., -1., 0., 0., 3e-16, -2e-16]), 1e-8).unwrap();
        assert_abs_diff_eq!(q.value, 2.0, epsilon = 1e-7);
    }
}
