//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Inverting the zero quaternion.
    #[error("division by zero quaternion")]
    ZeroDivision,

    /// A zero polynomial where a nonzero one is required.
    #[error("the zero polynomial is not admissible here")]
    ZeroPolynomial,

    /// Every polynomial in a system is identically zero.
    #[error("all polynomials in the system are identically zero")]
    AllZero,

    /// `g(N)` is identically zero; the norm-equation reduction does not
    /// apply and the caller must use `h(N0) = 0` directly.
    #[error("g(N) is identically zero; norm-equation reduction does not apply")]
    DegenerateG,

    /// The constant term is zero; factor out `z` first.
    #[error("constant term is zero; factor out z first")]
    ConstantTermZero,

    /// The cubic has no pure-imaginary root, so the factorization method
    /// does not apply.
    #[error("no pure imaginary root; method not applicable")]
    NotSupported,

    /// A coefficient that must be nonzero is zero.
    #[error("coefficient must be nonzero")]
    ZeroCoefficient,

    /// No start point of the numeric search converged.
    #[error("no start point converged")]
    NoConvergence,

    /// The polynomial does not have the degree an operation requires.
    #[error("expected a polynomial of degree {expected}")]
    WrongDegree { expected: usize },
}
