//! Uniform evaluation interface over standard and two-sided polynomials,
//! with directional derivatives for Newton-type refinement.

use crate::quaternion::Quaternion;
use crate::real::Real;
use crate::stdpoly::StdPoly;
use crate::twosided::TwoSidedPoly;

/// A polynomial map `H -> H` that can be evaluated and differentiated.
pub trait PolyEval<T: Real> {
    fn eval(&self, z: Quaternion<T>) -> Quaternion<T>;

    /// Directional derivative `lim (f(z + t v) - f(z)) / t` at `t -> 0`.
    fn dir_deriv(&self, z: Quaternion<T>, v: Quaternion<T>) -> Quaternion<T>;

    /// Degree (0 for constants).
    fn degree(&self) -> usize;

    /// Residual normalizer at points of length `z_abs`.
    fn scale_at(&self, z_abs: T) -> T;
}

fn powers<T: Real>(z: Quaternion<T>, n: usize) -> Vec<Quaternion<T>> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(Quaternion::one());
    for m in 0..n {
        let last = out[m];
        out.push(last * z);
    }
    out
}

impl<T: Real> PolyEval<T> for StdPoly<T> {
    fn eval(&self, z: Quaternion<T>) -> Quaternion<T> {
        StdPoly::eval(self, z)
    }

    // d(z^m) in direction v is Σ_{l<m} z^l v z^{m-1-l}; coefficients stay left.
    fn dir_deriv(&self, z: Quaternion<T>, v: Quaternion<T>) -> Quaternion<T> {
        let Some(n) = self.degree() else {
            return Quaternion::zero();
        };
        let pow = powers(z, n);
        let mut out = Quaternion::zero();
        for (m, &c) in self.coeffs().iter().enumerate() {
            for l in 0..m {
                out = out + c * pow[l] * v * pow[m - 1 - l];
            }
        }
        out
    }

    fn degree(&self) -> usize {
        StdPoly::degree(self).unwrap_or(0)
    }

    fn scale_at(&self, z_abs: T) -> T {
        StdPoly::scale_at(self, z_abs)
    }
}

impl<T: Real> PolyEval<T> for TwoSidedPoly<T> {
    fn eval(&self, z: Quaternion<T>) -> Quaternion<T> {
        TwoSidedPoly::eval(self, z)
    }

    fn dir_deriv(&self, z: Quaternion<T>, v: Quaternion<T>) -> Quaternion<T> {
        let pow = powers(z, self.degree());
        let mut out = Quaternion::zero();
        for t in &self.terms {
            for l in 0..t.power {
                out = out + t.left * pow[l] * v * pow[t.power - 1 - l] * t.right;
            }
        }
        out
    }

    fn degree(&self) -> usize {
        TwoSidedPoly::degree(self)
    }

    fn scale_at(&self, z_abs: T) -> T {
        TwoSidedPoly::scale_at(self, z_abs)
    }
}
