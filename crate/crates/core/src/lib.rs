//! Bivariate order polynomials of bicolored posets and bivariate chromatic
//! polynomials of graphs.
//!
//! Every polynomial is a [`BiPoly`] over a field scalar. The exact
//! instantiation, [`Poly`], uses arbitrary-precision rationals and is what the
//! verification routines and the CLI work with; [`FloatPoly`] is available for
//! quick numeric evaluation.
//!
//! The main entry points are [`omega_strict`] / [`omega_weak`] for posets and
//! [`chi_poly`] for graphs. Brute-force counters and an interpolation oracle
//! live alongside them so that every closed form can be checked independently.

pub mod catalog;
pub mod check;
pub mod chrompoly;
pub mod cli;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod orderpoly;
pub mod poset;
pub mod ratpoly;
pub mod scalar;

pub use check::CheckReport;
pub use chrompoly::{chi_brute, chi_classical, chi_poly, m_count};
pub use error::{Error, Result};
pub use graph::{AcyclicOrientation, Flat, Graph};
pub use orderpoly::oracle::{brute_count, brute_count_strict, brute_count_weak, interpolate_poly};
pub use orderpoly::{chain_strict, chain_weak, omega, omega_strict, omega_weak, type_strict, type_weak, Mode};
pub use poset::{BicoloredPoset, Labeling, LinearExtension, Word};
pub use ratpoly::BiPoly;
pub use scalar::{Budget, Field};

/// Exact rational numbers, always kept in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Bivariate polynomial with exact rational coefficients.
pub type Poly = BiPoly<Rational>;

/// Bivariate polynomial with `f64` coefficients.
pub type FloatPoly = BiPoly<f64>;
