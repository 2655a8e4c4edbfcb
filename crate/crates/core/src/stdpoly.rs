//! The ring `H[z]` of standard (left-coefficient) quaternion polynomials.
//!
//! `z` is central (`z a = a z` for every quaternion `a`), so every element
//! has a standard form with all coefficients on the left of the powers of
//! `z`. Evaluation substitutes into that standard form and is *not*
//! multiplicative over factorizations unless the point is real.
//!
//! The same type doubles as `H[N]` for the univariate restrictions of the
//! two-variable decomposition: any ring of quaternion polynomials in one
//! central variable is the same ring.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::Error;
use crate::quaternion::Quaternion;
use crate::real::Real;
use crate::realpoly::RealPoly;

/// Standard-form polynomial; `coeffs[m]` is the coefficient of `z^m`.
/// The zero polynomial has an empty coefficient list.
#[derive(Clone, Debug, PartialEq)]
pub struct StdPoly<T> {
    coeffs: Vec<Quaternion<T>>,
}

impl<T: Real> StdPoly<T> {
    /// Build from coefficients (index = power), trimming the degree.
    pub fn from_coeffs(coeffs: Vec<Quaternion<T>>) -> Self {
        let mut p = StdPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_real_coeffs(coeffs: &[T]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Quaternion::from_real(c)).collect())
    }

    pub fn zero() -> Self {
        StdPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Quaternion::one())
    }

    pub fn constant(c: Quaternion<T>) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::monomial(Quaternion::one(), 1)
    }

    /// `c * z^m`.
    pub fn monomial(c: Quaternion<T>, m: usize) -> Self {
        let mut coeffs = vec![Quaternion::zero(); m + 1];
        coeffs[m] = c;
        Self::from_coeffs(coeffs)
    }

    /// `z - a`.
    pub fn linear_from_root(a: Quaternion<T>) -> Self {
        Self::from_coeffs(vec![-a, Quaternion::one()])
    }

    /// `(z - roots[0]) (z - roots[1]) ... (z - roots[last])`, left to right.
    pub fn from_linear_factors(roots: &[Quaternion<T>]) -> Self {
        roots.iter().fold(Self::one(), |acc, &r| {
            &acc * &Self::linear_from_root(r)
        })
    }

    /// Drop trailing coefficients smaller than `eps`-relative to the largest
    /// coefficient magnitude, so degree queries stay meaningful.
    fn trim(&mut self) {
        let max = self
            .coeffs
            .iter()
            .fold(T::zero(), |m, c| m.max(c.abs()));
        let cut = T::default_eps() * max;
        while let Some(last) = self.coeffs.last() {
            if last.abs() <= cut {
                self.coeffs.pop();
            } else {
                break;
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Quaternion<T>] {
        &self.coeffs
    }

    /// Coefficient of `z^m` (zero beyond the degree).
    pub fn coeff(&self, m: usize) -> Quaternion<T> {
        self.coeffs.get(m).copied().unwrap_or_else(Quaternion::zero)
    }

    pub fn leading(&self) -> Option<Quaternion<T>> {
        self.coeffs.last().copied()
    }

    /// Standard-form evaluation `a_n z0^n + ... + a_1 z0 + a_0` by Horner
    /// with right multiplication, which keeps every coefficient on the left.
    pub fn eval(&self, z0: Quaternion<T>) -> Quaternion<T> {
        let mut acc = Quaternion::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * z0 + *c;
        }
        acc
    }

    /// Left-multiply every coefficient by `q`.
    pub fn scale_left(&self, q: Quaternion<T>) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|&c| q * c).collect())
    }

    /// Monic normalization by left-dividing by the leading coefficient
    /// (roots are unchanged). Errors on the zero polynomial.
    pub fn make_monic(&self) -> Result<Self, Error> {
        let lead = self.leading().ok_or(Error::ZeroPolynomial)?;
        Ok(self.scale_left(lead.inverse()?))
    }

    /// Conjugate every coefficient. Evaluated at a real point this is the
    /// quaternion conjugate of the original value.
    pub fn conj_coeffs(&self) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c.conjugate()).collect())
    }

    /// Multiply by `z^m`.
    pub fn shift_up(&self, m: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Quaternion::zero(); m];
        coeffs.extend_from_slice(&self.coeffs);
        Self::from_coeffs(coeffs)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// The four real component polynomials in the basis `(1, i, j, k)`.
    pub fn components(&self) -> [RealPoly<T>; 4] {
        let pick = |f: fn(&Quaternion<T>) -> T| {
            RealPoly::from_coeffs(self.coeffs.iter().map(f).collect())
        };
        [
            pick(|c| c.re),
            pick(|c| c.i),
            pick(|c| c.j),
            pick(|c| c.k),
        ]
    }

    /// Real part of every coefficient as a real polynomial.
    pub fn real_component(&self) -> RealPoly<T> {
        RealPoly::from_coeffs(self.coeffs.iter().map(|c| c.re).collect())
    }

    pub fn has_real_coeffs(&self, tol: T) -> bool {
        let scale = T::one() + self.max_coeff_abs();
        self.coeffs.iter().all(|c| c.imag().abs() <= tol * scale)
    }

    pub fn max_coeff_abs(&self) -> T {
        self.coeffs.iter().fold(T::zero(), |m, c| m.max(c.abs()))
    }

    /// Residual normalizer `Σ |coeff| * max(1, |z|)^deg`.
    pub fn scale_at(&self, z_abs: T) -> T {
        let deg = self.coeffs.len().saturating_sub(1);
        let base = T::one().max(z_abs).powi(deg as i32);
        self.coeffs
            .iter()
            .fold(T::zero(), |acc, c| acc + c.abs() * base)
    }

    pub fn approx_eq(&self, other: &Self, tol: T) -> bool {
        let n = self.coeffs.len().max(other.coeffs.len());
        let scale = T::one() + self.max_coeff_abs().max(other.max_coeff_abs());
        (0..n).all(|m| self.coeff(m).max_component_dist(other.coeff(m)) <= tol * scale)
    }

    /// Right division by the linear factor `z - a`:
    /// `f = p * (z - a) + rem` with `rem = f(a)` a constant.
    ///
    /// Synthetic (Horner) division; the recurrence is exactly the evaluation
    /// recurrence, so `rem` equals `eval(f, a)` identically.
    pub fn right_div_linear(&self, a: Quaternion<T>) -> Result<(Self, Quaternion<T>), Error> {
        let n = self.degree().ok_or(Error::ZeroPolynomial)?;
        if n == 0 {
            return Ok((Self::zero(), self.coeff(0)));
        }
        let mut p = vec![Quaternion::zero(); n];
        p[n - 1] = self.coeff(n);
        for m in (1..n).rev() {
            p[m - 1] = self.coeff(m) + p[m] * a;
        }
        let rem = self.coeff(0) + p[0] * a;
        Ok((Self::from_coeffs(p), rem))
    }
}

/// Conjugate `a` by the value of the right factor: `h(a) a h(a)^{-1}`.
///
/// If `f = g h` and `a` is a root of `f` but not of `h`, the result is a
/// root of `g`. Conjugation preserves both the norm and the real part.
pub fn wedderburn_transfer<T: Real>(
    a: Quaternion<T>,
    h_at_a: Quaternion<T>,
) -> Result<Quaternion<T>, Error> {
    Ok(h_at_a * a * h_at_a.inverse()?)
}

impl<T: Real> Add for &StdPoly<T> {
    type Output = StdPoly<T>;
    fn add(self, rhs: Self) -> StdPoly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        StdPoly::from_coeffs((0..n).map(|m| self.coeff(m) + rhs.coeff(m)).collect())
    }
}

impl<T: Real> Sub for &StdPoly<T> {
    type Output = StdPoly<T>;
    fn sub(self, rhs: Self) -> StdPoly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        StdPoly::from_coeffs((0..n).map(|m| self.coeff(m) - rhs.coeff(m)).collect())
    }
}

impl<T: Real> Neg for &StdPoly<T> {
    type Output = StdPoly<T>;
    fn neg(self) -> StdPoly<T> {
        StdPoly::from_coeffs(self.coeffs.iter().map(|&c| -c).collect())
    }
}

/// Ring product: `z` commutes with the coefficients, so the product is the
/// convolution with quaternion coefficient products taken in order.
impl<T: Real> Mul for &StdPoly<T> {
    type Output = StdPoly<T>;
    fn mul(self, rhs: Self) -> StdPoly<T> {
        if self.is_zero() || rhs.is_zero() {
            return StdPoly::zero();
        }
        let mut out = vec![Quaternion::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (m, &cm) in self.coeffs.iter().enumerate() {
            for (l, &cl) in rhs.coeffs.iter().enumerate() {
                out[m + l] = out[m + l] + cm * cl;
            }
        }
        StdPoly::from_coeffs(out)
    }
}

impl<T: Real> fmt::Display for StdPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for m in (0..self.coeffs.len()).rev() {
            let c = self.coeff(m);
            if c == Quaternion::zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let is_plain_real = c.is_pure_real(T::zero());
            if m == 0 {
                if is_plain_real {
                    write!(f, "{}", c.re)?;
                } else {
                    write!(f, "({})", c)?;
                }
                continue;
            }
            if c == Quaternion::one() {
                // bare power
            } else if is_plain_real {
                write!(f, "{} ", c.re)?;
            } else {
                write!(f, "({}) ", c)?;
            }
            if m == 1 {
                write!(f, "z")?;
            } else {
                write!(f, "z^{}", m)?;
            }
        }
        Ok(())
    }
}
