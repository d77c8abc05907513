//! Numerical workbench for quasi-density matrices built from classical
//! phase-space distributions.
//!
//! A classical distribution P(x, p) is mapped to a Hermitian kernel
//! W(x1, x2) by Fourier transform over momentum with an action scale ε.
//! Diagonalizing the discretized kernel yields quasi-probabilities and
//! orthonormal states on the grid, which can be compared against an
//! independent finite-difference Schrödinger solver, closed-form
//! references, and random-matrix level statistics.
//!
//! Modules map one-to-one onto subsystems:
//!
//! - [`grid`]: uniform grids, quadrature, sampled fields
//! - [`potentials`]: scalar/vector potential catalog with derivatives
//! - [`quasidensity`]: kernel builders (canonical, microcanonical, Gaussian, numeric)
//! - [`spectral`]: self-adjoint eigendecomposition into weights and states
//! - [`schrodinger`]: finite-difference Hamiltonians and the stationarity residual
//! - [`analytic`]: closed-form oracles (oscillator maps, Airy/Laguerre weights, WKB, ratio laws)
//! - [`analysis`]: observables, entropies, gaps, bands, level statistics
//! - [`io`]: binary matrix exchange format and CSV number formatting

pub mod analysis;
pub mod analytic;
pub mod error;
pub mod grid;
pub mod io;
pub mod linalg;
pub mod potentials;
pub mod quasidensity;
pub mod schrodinger;
pub mod special;
pub mod spectral;

pub use error::{Error, Result};
pub use grid::{GridSpec, SampledField};
pub use quasidensity::QuasiDensityMatrix;
pub use schrodinger::HamiltonianMatrix;
pub use spectral::SpectralDecomposition;
