//! Quaternion arithmetic over a real scalar type.
//!
//! Convention: basis `1, i, j, k` with `i^2 = j^2 = -1`, `ij = k`,
//! `ji = -k`. The *norm* is the multiplicative quadratic form
//! `q q̄ = re^2 + i^2 + j^2 + k^2` (the squared Euclidean length); the
//! Euclidean length itself is [`Quaternion::abs`].

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::Error;
use crate::real::Real;
use crate::rootset::RootSet;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Quaternion<T> {
    pub re: T,
    pub i: T,
    pub j: T,
    pub k: T,
}

impl<T: Real> Quaternion<T> {
    pub fn new(re: T, i: T, j: T, k: T) -> Self {
        Quaternion { re, i, j, k }
    }

    pub fn from_real(re: T) -> Self {
        Quaternion::new(re, T::zero(), T::zero(), T::zero())
    }

    pub fn zero() -> Self {
        Self::from_real(T::zero())
    }

    pub fn one() -> Self {
        Self::from_real(T::one())
    }

    pub fn unit_i() -> Self {
        Quaternion::new(T::zero(), T::one(), T::zero(), T::zero())
    }

    pub fn unit_j() -> Self {
        Quaternion::new(T::zero(), T::zero(), T::one(), T::zero())
    }

    pub fn unit_k() -> Self {
        Quaternion::new(T::zero(), T::zero(), T::zero(), T::one())
    }

    /// Conjugate `q̄ = re - i·i - j·j - k·k`.
    pub fn conjugate(self) -> Self {
        Quaternion::new(self.re, -self.i, -self.j, -self.k)
    }

    /// Multiplicative norm `q q̄` (sum of squared components).
    pub fn norm(self) -> T {
        self.re * self.re + self.i * self.i + self.j * self.j + self.k * self.k
    }

    /// Euclidean length `sqrt(norm)`.
    pub fn abs(self) -> T {
        self.norm().sqrt()
    }

    /// `q^{-1} = q̄ / norm(q)`; errors on the zero quaternion.
    pub fn inverse(self) -> Result<Self, Error> {
        let n = self.norm();
        if n == T::zero() {
            return Err(Error::ZeroDivision);
        }
        Ok(self.conjugate() / n)
    }

    /// Scalar (real) part.
    pub fn real_part(self) -> T {
        self.re
    }

    /// Imaginary part as a quaternion with zero scalar part.
    pub fn imag(self) -> Self {
        Quaternion::new(T::zero(), self.i, self.j, self.k)
    }

    /// Split into `(r, x)` with `r` pure real, `x` pure imaginary, `r + x = q`.
    pub fn split(self) -> (T, Self) {
        (self.re, self.imag())
    }

    /// Euclidean inner product of the component vectors.
    pub fn dot(self, other: Self) -> T {
        self.re * other.re + self.i * other.i + self.j * other.j + self.k * other.k
    }

    pub fn scale(self, c: T) -> Self {
        Quaternion::new(self.re * c, self.i * c, self.j * c, self.k * c)
    }

    /// Largest absolute component.
    pub fn max_abs_component(self) -> T {
        self.re
            .abs()
            .max(self.i.abs())
            .max(self.j.abs())
            .max(self.k.abs())
    }

    /// Largest componentwise distance to `other`.
    pub fn max_component_dist(self, other: Self) -> T {
        (self - other).max_abs_component()
    }

    pub fn approx_eq(self, other: Self, tol: T) -> bool {
        self.max_component_dist(other) <= tol
    }

    /// `|q| <= tol` (absolute threshold).
    pub fn is_zero(self, tol: T) -> bool {
        self.abs() <= tol
    }

    /// Zero counts as both pure real and pure imaginary.
    pub fn is_pure_real(self, tol: T) -> bool {
        self.imag().abs() <= tol
    }

    pub fn is_pure_imaginary(self, tol: T) -> bool {
        self.re.abs() <= tol
    }

    /// Integer power by repeated multiplication.
    pub fn powu(self, n: u32) -> Self {
        let mut acc = Quaternion::one();
        for _ in 0..n {
            acc = acc * self;
        }
        acc
    }

    /// Polar decomposition `q = modulus * (cos angle + sin angle * axis)`.
    ///
    /// `axis` is a unit pure imaginary. For pure-real `q` the axis is
    /// arbitrary and defaults to `i`, which keeps `reconstruct` exact since
    /// `sin(angle)` vanishes there.
    pub fn polar(self) -> PolarForm<T> {
        let modulus = self.abs();
        let im = self.imag();
        let im_len = im.abs();
        let angle = im_len.atan2(self.re);
        let axis = if im_len > T::zero() {
            im / im_len
        } else {
            Quaternion::unit_i()
        };
        PolarForm {
            modulus,
            angle,
            axis,
        }
    }

    /// All quaternion solutions of `w^2 = q`.
    ///
    /// * non-real `q`: the two isolated points `±sqrt(modulus) e^{(θ/2) axis}`;
    /// * positive real `q`: `±sqrt(q)`;
    /// * negative real `q`: the sphere of pure imaginaries `x` with
    ///   `norm(x) = -q` (then `x^2 = q`);
    /// * zero: the single root `0`.
    ///
    /// Classification thresholds scale with `tol * (1 + |q|)`.
    pub fn square_roots(self, tol: T) -> RootSet<T> {
        let scale = T::one() + self.abs();
        let mut out = RootSet::new();
        if self.is_zero(tol * scale) {
            out.push_isolated(Quaternion::zero());
            return out;
        }
        if self.is_pure_real(tol * scale) {
            if self.re > T::zero() {
                let r = self.re.sqrt();
                out.push_isolated(Quaternion::from_real(r));
                out.push_isolated(Quaternion::from_real(-r));
            } else {
                out.push_sphere(T::zero(), -self.re);
            }
            return out;
        }
        let polar = self.polar();
        let half = polar.angle * T::half();
        let w = (Quaternion::from_real(half.cos()) + polar.axis.scale(half.sin()))
            .scale(polar.modulus.sqrt());
        out.push_isolated(w);
        out.push_isolated(-w);
        out
    }
}

/// Polar form of a quaternion: `modulus * (cos angle + sin angle * axis)`.
#[derive(Clone, Copy, Debug)]
pub struct PolarForm<T> {
    /// `sqrt(norm(q))`, nonnegative.
    pub modulus: T,
    /// Phase in `[0, π]`.
    pub angle: T,
    /// Unit pure imaginary direction (defaults to `i` for pure-real input).
    pub axis: Quaternion<T>,
}

impl<T: Real> PolarForm<T> {
    pub fn reconstruct(&self) -> Quaternion<T> {
        (Quaternion::from_real(self.angle.cos()) + self.axis.scale(self.angle.sin()))
            .scale(self.modulus)
    }
}

impl<T: Real> Add for Quaternion<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Quaternion::new(
            self.re + rhs.re,
            self.i + rhs.i,
            self.j + rhs.j,
            self.k + rhs.k,
        )
    }
}

impl<T: Real> Sub for Quaternion<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Quaternion::new(
            self.re - rhs.re,
            self.i - rhs.i,
            self.j - rhs.j,
            self.k - rhs.k,
        )
    }
}

impl<T: Real> Neg for Quaternion<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Quaternion::new(-self.re, -self.i, -self.j, -self.k)
    }
}

/// Hamilton product under the `ij = k`, `ji = -k` convention.
impl<T: Real> Mul for Quaternion<T> {
    type Output = Self;
    fn mul(self, q: Self) -> Self {
        let p = self;
        Quaternion::new(
            p.re * q.re - p.i * q.i - p.j * q.j - p.k * q.k,
            p.re * q.i + p.i * q.re + p.j * q.k - p.k * q.j,
            p.re * q.j - p.i * q.k + p.j * q.re + p.k * q.i,
            p.re * q.k + p.i * q.j - p.j * q.i + p.k * q.re,
        )
    }
}

impl<T: Real> Mul<T> for Quaternion<T> {
    type Output = Self;
    fn mul(self, c: T) -> Self {
        self.scale(c)
    }
}

impl<T: Real> Div<T> for Quaternion<T> {
    type Output = Self;
    fn div(self, c: T) -> Self {
        Quaternion::new(self.re / c, self.i / c, self.j / c, self.k / c)
    }
}

impl<T: Real> fmt::Display for Quaternion<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: [(T, &str); 4] = [
            (self.re, ""),
            (self.i, "i"),
            (self.j, "j"),
            (self.k, "k"),
        ];
        let mut wrote = false;
        for (value, unit) in parts {
            if value == T::zero() {
                continue;
            }
            if wrote {
                if value < T::zero() {
                    write!(f, " - ")?;
                } else {
                    write!(f, " + ")?;
                }
                let mag = value.abs();
                if unit.is_empty() || mag != T::one() {
                    write!(f, "{}", mag)?;
                }
            } else {
                if unit.is_empty() || value.abs() != T::one() {
                    write!(f, "{}", value)?;
                } else if value < T::zero() {
                    write!(f, "-")?;
                }
                wrote = true;
                write!(f, "{}", unit)?;
                continue;
            }
            write!(f, "{}", unit)?;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}
