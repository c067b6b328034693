//! Exact-arithmetic toolkit for Cayley-Bacharach conditions on finite point
//! sets in projective space.
//!
//! The crate decides the condition CB(k) for point sets over Q or a prime
//! field, generates certified configurations (complete intersections,
//! collinear families, rational normal curve samples, plane configurations),
//! searches for low-degree curves through a set, and turns the quantitative
//! statements about such sets into executable audits and a seeded
//! counterexample fuzzer.
//!
//! All arithmetic is exact. Core types are generic over the [`field::Scalar`]
//! trait with two instantiations: arbitrary-precision rationals and prime
//! fields F_p. Concrete aliases for both live at the crate root.

pub mod audit;
pub mod bareiss;
pub mod cb;
pub mod curves;
pub mod generators;
pub mod error;
pub mod field;
pub mod forms;
pub mod geometry;
pub mod linalg;
pub mod poly;

pub use field::{FieldSpec, Fp, PrimeField, RationalField, Scalar};

/// Rational scalar: arbitrary-precision fraction in lowest terms.
pub type Rational = num_rational::BigRational;

pub type QMatrix = linalg::Matrix<Rational>;
pub type FpMatrix = linalg::Matrix<Fp>;
pub type QPoint = geometry::ProjectivePoint<Rational>;
pub type FpPoint = geometry::ProjectivePoint<Fp>;
pub type QPointSet = geometry::PointSet<Rational>;
pub type FpPointSet = geometry::PointSet<Fp>;
pub type QForm = geometry::HomogeneousForm<Rational>;
pub type FpForm = geometry::HomogeneousForm<Fp>;
