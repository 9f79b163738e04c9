//! Complex unit gain graphs: spectra, energy, characteristic and matching
//! polynomials, the Coulson integral, and numerical checks of energy bounds.
//!
//! Numeric code is generic over [`scalar::Real`] (`f32` or `f64`); the
//! `*F64` and `*F32` aliases below fix the scalar. The [`theorems`] module
//! works in `f64` only.

pub mod energy_integral;
pub mod gain;
pub mod graph;
pub mod polynomials;
pub mod scalar;
pub mod spectral;
pub mod theorems;

pub use energy_integral::{coulson_energy, matching_energy, QuadratureError, QuadratureResult};
pub use gain::{is_antibalanced, is_balanced, switch, BalanceVerdict, GainError, GainGraph, SwitchingFunction};
pub use graph::{maximum_matching, named_family, stats, Family, GraphError, GraphStats, Matching, SimpleGraph};
pub use polynomials::{
    char_poly_eigen, char_poly_faddeev, char_poly_from_matchings, char_poly_subgraph, matching_poly, PolynomialError,
    RealPolynomial,
};
pub use scalar::Real;
pub use spectral::{adjacency, eigensystem, energy, EnergyReport, HermitianMatrix, Spectrum, SpectralError};

pub type GainGraphF64 = GainGraph<f64>;
pub type SpectrumF64 = Spectrum<f64>;
pub type HermitianMatrixF64 = HermitianMatrix<f64>;
pub type RealPolynomialF64 = RealPolynomial<f64>;
pub type EnergyReportF64 = EnergyReport<f64>;
pub type QuadratureResultF64 = QuadratureResult<f64>;

pub type GainGraphF32 = GainGraph<f32>;
pub type SpectrumF32 = Spectrum<f32>;
pub type HermitianMatrixF32 = HermitianMatrix<f32>;
pub type RealPolynomialF32 = RealPolynomial<f32>;
pub type EnergyReportF32 = EnergyReport<f32>;
pub type QuadratureResultF32 = QuadratureResult<f32>;
