//! Root sets: isolated quaternion roots plus spherical root families.

use crate::quaternion::Quaternion;
use crate::real::Real;

/// A 2-sphere of roots `{ re + x : x pure imaginary, norm(x) = imag_norm }`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Sphere<T> {
    pub re: T,
    pub imag_norm: T,
}

impl<T: Real> Sphere<T> {
    /// The point of the sphere in direction `u` (a unit pure imaginary).
    pub fn sample(&self, u: Quaternion<T>) -> Quaternion<T> {
        Quaternion::from_real(self.re) + u.scale(self.imag_norm.sqrt())
    }

    /// Whether `z` lies on this sphere within `tol`-relative distance.
    pub fn contains(&self, z: Quaternion<T>, tol: T) -> bool {
        let (r, x) = z.split();
        (r - self.re).abs() <= tol * (T::one() + self.re.abs())
            && (x.norm() - self.imag_norm).abs() <= tol * (T::one() + self.imag_norm)
    }
}

/// Isolated roots together with spherical families.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct RootSet<T> {
    pub isolated: Vec<Quaternion<T>>,
    pub spheres: Vec<Sphere<T>>,
}

impl<T: Real> RootSet<T> {
    pub fn new() -> Self {
        RootSet {
            isolated: Vec::new(),
            spheres: Vec::new(),
        }
    }

    fn merge_tol() -> T {
        T::of(crate::ROOT_MERGE)
    }

    /// Add an isolated root, merging with an existing one closer than
    /// `ROOT_MERGE * (1 + |z|)` in the max-component metric.
    pub fn push_isolated(&mut self, z: Quaternion<T>) {
        let tol = Self::merge_tol() * (T::one() + z.abs());
        if !self.isolated.iter().any(|w| w.max_component_dist(z) <= tol) {
            self.isolated.push(z);
        }
    }

    /// Add a sphere, merging duplicates.
    pub fn push_sphere(&mut self, re: T, imag_norm: T) {
        let tol = Self::merge_tol();
        let dup = self.spheres.iter().any(|s| {
            (s.re - re).abs() <= tol * (T::one() + re.abs())
                && (s.imag_norm - imag_norm).abs() <= tol * (T::one() + imag_norm)
        });
        if !dup {
            self.spheres.push(Sphere { re, imag_norm });
        }
    }

    pub fn extend(&mut self, other: RootSet<T>) {
        for z in other.isolated {
            self.push_isolated(z);
        }
        for s in other.spheres {
            self.push_sphere(s.re, s.imag_norm);
        }
    }

    /// Drop isolated roots that lie on one of the listed spheres.
    pub fn remove_isolated_on_spheres(&mut self) {
        let tol = Self::merge_tol();
        let spheres = self.spheres.clone();
        self.isolated
            .retain(|z| !spheres.iter().any(|s| s.contains(*z, tol)));
    }

    /// Shift every root by the real constant `-s` (used to undo a variable
    /// substitution `z = w - s`).
    pub fn shift_re(&mut self, s: T) {
        for z in &mut self.isolated {
            *z = *z - Quaternion::from_real(s);
        }
        for sphere in &mut self.spheres {
            sphere.re = sphere.re - s;
        }
    }

    /// Deterministic order: lexicographic by components, spheres by center.
    pub fn sort(&mut self) {
        self.isolated.sort_by(|a, b| {
            (a.re, a.i, a.j, a.k)
                .partial_cmp(&(b.re, b.i, b.j, b.k))
                .unwrap_or(std::cmp::Ordering::Equal)
        });
        self.spheres.sort_by(|a, b| {
            (a.re, a.imag_norm)
                .partial_cmp(&(b.re, b.imag_norm))
                .unwrap_or(std::cmp::Ordering::Equal)
        });
    }

    pub fn is_empty(&self) -> bool {
        self.isolated.is_empty() && self.spheres.is_empty()
    }

    pub fn contains_isolated(&self, z: Quaternion<T>, tol: T) -> bool {
        self.isolated
            .iter()
            .any(|w| w.max_component_dist(z) <= tol * (T::one() + z.abs()))
    }

    /// Whether `z` is represented at all: as an isolated root or on a sphere.
    pub fn contains(&self, z: Quaternion<T>, tol: T) -> bool {
        self.contains_isolated(z, tol) || self.spheres.iter().any(|s| s.contains(z, tol))
    }

    /// Eight fixed unit pure-imaginary directions used to sample spheres.
    pub fn sample_directions() -> [Quaternion<T>; 8] {
        let rt2 = T::two().sqrt().recip();
        let rt3 = T::of(3.0).sqrt().recip();
        let q = |i: T, j: T, k: T| Quaternion::new(T::zero(), i, j, k);
        let o = T::one();
        let z = T::zero();
        [
            q(o, z, z),
            q(z, o, z),
            q(z, z, o),
            q(rt2, rt2, z),
            q(rt2, z, -rt2),
            q(z, rt2, rt2),
            q(rt3, rt3, rt3),
            q(-rt3, rt3, rt3),
        ]
    }
}
