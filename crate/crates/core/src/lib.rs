//! Angular and radial Mathieu functions.
//!
//! The four parity categories (even-even, even-odd, odd-even, odd-odd) are
//! handled uniformly through [`Category`]. The workflow mirrors a classic
//! toolbox layout: solve the category eigenproblem once with
//! [`angular::eig_spm`], then hand the resulting [`SpectralData`] to the
//! evaluators for angular functions, normalization, correlation and joining
//! factors, and the four kinds of radial functions.
//!
//! ```
//! use mathieu::{angular, Category};
//!
//! let spec = angular::eig_spm::<f64>(Category::EvenEven, 5.0, 25).unwrap();
//! assert!((spec.char_values()[0] + 5.8000460208515).abs() < 1e-12);
//! ```
//!
//! Everything numeric is generic over [`Real`] (implemented for `f32` and
//! `f64`); the `*64` aliases below fix the common double precision case.

pub mod angular;
pub mod bessel;
mod error;
pub mod geometry;
pub mod radial;
mod scalar;
pub mod tridiag;

pub use angular::{Category, SpectralData};
pub use error::{MathieuError, Result};
pub use radial::{HankelKind, RadialArgs, RadialEval};
pub use scalar::Real;

/// Complex scalar used by the third and fourth kind radial functions.
pub type Complex<T> = num_complex::Complex<T>;

pub type SpectralData64 = SpectralData<f64>;
pub type SpectralData32 = SpectralData<f32>;
pub type RadialArgs64 = RadialArgs<f64>;
pub type RadialEval64 = RadialEval<f64>;
pub type TridiagonalSystem64 = tridiag::TridiagonalSystem<f64>;
pub type EigenDecomposition64 = tridiag::EigenDecomposition<f64>;
pub type EllipticGeometry64 = geometry::EllipticGeometry<f64>;
pub type WaveParams64 = geometry::WaveParams<f64>;
pub type Complex64 = Complex<f64>;
