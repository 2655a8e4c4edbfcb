//! Root finding for quaternion polynomials.
//!
//! The central tool is the two-variable decomposition of a standard
//! (left-coefficient) polynomial `f` over the real quaternions: for every
//! quaternion `z0 = r0 + x0` (real part plus imaginary part) with
//! `N0 = -x0^2`,
//!
//! ```text
//! f(z0) = g(r0, N0) * x0 + h(r0, N0)
//! ```
//!
//! where `g` and `h` are polynomials in the two central variables `r, N`.
//! Root finding then reduces to real polynomial systems: the norm equation
//! `g ḡ g N + h ḡ h = 0` locates candidate `(r0, N0)` pairs, and each
//! candidate is reconstructed and verified by back-substitution.
//!
//! What this crate provides:
//!
//! * [`Quaternion`]: exact-structure quaternion arithmetic (`ij = k`,
//!   `ji = -k`), conjugation, norm, inversion, polar form, full square-root
//!   sets.
//! * [`StdPoly`]: the ring `H[z]` with a central variable, standard-form
//!   evaluation, right division by `z - a`, and Wedderburn root transfer.
//! * [`bivar`]: the `g`/`h` decomposition, pure-imaginary restriction, the
//!   norm-equation residual and its real components.
//! * [`realpoly`]: a real root engine (closed forms through quartics, a
//!   simultaneous-iteration fallback above) and root intersection across
//!   polynomial systems.
//! * [`solvers`]: the quadratic closed form, pure-imaginary root finding for
//!   any degree, spherical-root detection, and the cubic pipeline via
//!   factorization. Every branch generates candidates only; back-substitution
//!   is the sole acceptance authority.
//! * [`twosided`]: two-sided quadratics `z^2 + a z b + c` and their
//!   pure-imaginary root candidates (at most two distinct norms).
//! * [`oracle`]: an independent multistart numeric root search used to
//!   cross-validate the solvers.
//!
//! All numeric code is generic over the scalar type through [`Real`]
//! (`f32` or `f64`); the `*64` aliases at the crate root pin the default
//! double-precision instantiation.

pub mod bivar;
pub mod error;
pub mod eval;
pub mod oracle;
pub mod quaternion;
pub mod real;
pub mod realpoly;
pub mod rootset;
pub mod solvers;
pub mod stdpoly;
pub mod twosided;

pub use error::Error;
pub use eval::PolyEval;
pub use quaternion::{PolarForm, Quaternion};
pub use real::Real;
pub use realpoly::RealPoly;
pub use rootset::{RootSet, Sphere};
pub use solvers::{
    companion_quadratic_roots, factor_cubic, pure_imaginary_roots, solve_cubic, solve_quadratic,
    spherical_pure_imaginary, verify_root, CubicFactorization, QuadraticNormalForm,
};
pub use stdpoly::{wedderburn_transfer, StdPoly};
pub use twosided::{pure_imaginary_roots_two_sided_quadratic, TwoSidedPoly};

/// Default relative tolerance threaded through equality and zero tests.
pub const DEFAULT_EPS: f64 = 1e-9;

/// Merge distance for deduplicating roots, relative to `1 + |z|`.
pub const ROOT_MERGE: f64 = 1e-6;

pub type Quat64 = Quaternion<f64>;
pub type Quat32 = Quaternion<f32>;
pub type StdPoly64 = StdPoly<f64>;
pub type StdPoly32 = StdPoly<f32>;
pub type RealPoly64 = RealPoly<f64>;
pub type RootSet64 = RootSet<f64>;
pub type TwoSidedPoly64 = TwoSidedPoly<f64>;
