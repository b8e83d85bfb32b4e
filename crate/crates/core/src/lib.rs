//! Numerical toolkit for slice function calculus over the octonions.
//!
//! The crate implements the octonion algebra, stem/slice functions and their
//! algebra (slice product, normal function, slice reciprocal, spherical value
//! and derivative), the differential operators characterising slice
//! Fueter-regular functions (Vekua systems, spherical Dirac operator, slice
//! Fueter operator, restricted Cauchy-Riemann-Fueter operator), slice
//! Borel-Pompeiu/Cauchy integral formulas with hyperspherical quadrature,
//! Fueter polynomial Taylor/Laurent series engines, and the camshaft /
//! maximum-modulus machinery. A batch verification harness (`sfr-verify`)
//! runs the whole battery from a JSON config.




pub mod domain;

pub mod fd;
pub mod o3;
pub mod operators;
pub mod quadrature;
pub mod regularity;
pub mod octonion;

pub mod poly;



pub mod slice;

pub use octonion::{ImaginaryUnit, Octonion, OrthoUnitPair, QuaternionEmbedding};
pub use slice::{SliceFunction, StemFunction};

/// Absolute tolerance for algebraic identities, scaled by operand magnitudes.
pub const ALG_TOL: f64 = 1e-12;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("division by a zero octonion")]
    ZeroDivisor,
    #[error("point lies outside the function domain")]
    OutOfDomain,
    #[error("evaluation requires a point off the real axis")]
    RealAxis,
    #[error("evaluation point is singular (normal function vanishes)")]
    SingularPoint,
    #[error("evaluation point too close to the kernel singular set")]
    SingularPair,
    #[error("imaginary units coincide")]
    CoincidentUnits,
    #[error("point does not lie in the requested quaternionic slice")]
    OutsideSlice,
    #[error("multi-index degree {0} exceeds the configured cap {1}")]
    DegreeCap(usize, usize),
    #[error("tangential indices must satisfy 1 <= m < n <= 7, got ({0},{1})")]
    IndexOrder(usize, usize),
    #[error("no nondegenerate draw after {0} attempts")]
    DegenerateDraw(usize),
    #[error("function value vanishes at the probe point")]
    ZeroValue,
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("unknown suite '{0}'")]
    UnknownSuite(String),
    #[error("unknown corpus entry '{0}'")]
    UnknownCorpusEntry(String),
}

pub type Result<T> = std::result::Result<T, Error>;
