//! Two-sided polynomials `Σ a_l z^l b_l` and the pure-imaginary root bound
//! for the two-sided quadratic `z^2 + a z b + c`.
//!
//! Evaluation follows the two-sided form; coefficients are never moved
//! across the variable.

use std::fmt;

use crate::error::Error;
use crate::quaternion::Quaternion;
use crate::real::Real;
use crate::realpoly::RealPoly;
use crate::stdpoly::StdPoly;

/// One term `left * z^power * right`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TwoSidedTerm<T> {
    pub left: Quaternion<T>,
    pub power: usize,
    pub right: Quaternion<T>,
}

/// A sum of two-sided terms.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct TwoSidedPoly<T> {
    pub terms: Vec<TwoSidedTerm<T>>,
}

impl<T: Real> TwoSidedPoly<T> {
    pub fn new(terms: Vec<TwoSidedTerm<T>>) -> Self {
        TwoSidedPoly { terms }
    }

    /// `z^2 + a z b + c`.
    pub fn quadratic(a: Quaternion<T>, b: Quaternion<T>, c: Quaternion<T>) -> Self {
        TwoSidedPoly {
            terms: vec![
                TwoSidedTerm {
                    left: Quaternion::one(),
                    power: 2,
                    right: Quaternion::one(),
                },
                TwoSidedTerm {
                    left: a,
                    power: 1,
                    right: b,
                },
                TwoSidedTerm {
                    left: c,
                    power: 0,
                    right: Quaternion::one(),
                },
            ],
        }
    }

    pub fn degree(&self) -> usize {
        self.terms.iter().map(|t| t.power).max().unwrap_or(0)
    }

    /// Two-sided evaluation `Σ left * z0^power * right`.
    pub fn eval(&self, z0: Quaternion<T>) -> Quaternion<T> {
        self.terms.iter().fold(Quaternion::zero(), |acc, t| {
            acc + t.left * z0.powu(t.power as u32) * t.right
        })
    }

    /// Residual normalizer `Σ |left||right| * max(1, |z|)^deg`.
    pub fn scale_at(&self, z_abs: T) -> T {
        let base = T::one().max(z_abs).powi(self.degree() as i32);
        self.terms
            .iter()
            .fold(T::zero(), |acc, t| acc + t.left.abs() * t.right.abs() * base)
    }

    /// Collapse to a standard polynomial (coefficients `left * right` moved
    /// to the left). Only legitimate when every `right` is real or the
    /// caller knows the terms commute; used for the `b = 1` reduction.
    pub fn to_std_assuming_right_real(&self) -> StdPoly<T> {
        let deg = self.degree();
        let mut coeffs = vec![Quaternion::zero(); deg + 1];
        for t in &self.terms {
            coeffs[t.power] = coeffs[t.power] + t.left * t.right;
        }
        StdPoly::from_coeffs(coeffs)
    }
}

impl<T: Real> fmt::Display for TwoSidedPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for t in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match t.power {
                0 => write!(f, "({})", t.left * t.right)?,
                p => {
                    write!(f, "({}) ", t.left)?;
                    if p == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{}", p)?;
                    }
                    write!(f, " ({})", t.right)?;
                }
            }
        }
        Ok(())
    }
}

/// Pure-imaginary roots of `z^2 + a z b + c` with `a, b, c` all nonzero.
///
/// A pure imaginary root `z0` of norm `N0` satisfies `N0 - c = a z0 b`, so
/// `z0 = a^-1 b^-1 N0 - a^-1 c b^-1`, and substituting back into
/// `z0^2 = -N0` makes `N0` a root of the quaternion-coefficient quadratic
///
/// ```text
/// p(N) = a⁻¹b⁻¹a⁻¹b⁻¹ N² + (1 - a⁻¹b⁻¹a⁻¹cb⁻¹ - a⁻¹cb⁻¹a⁻¹b⁻¹) N + a⁻¹cb⁻¹a⁻¹cb⁻¹.
/// ```
///
/// Candidates are the common real roots of the four components of `p`; each
/// is reconstructed and accepted only if it is pure imaginary, has the right
/// norm, and satisfies the original equation. Returned as `(root, norm)`
/// pairs; the number of pairwise-distinct norms never exceeds two.
pub fn pure_imaginary_roots_two_sided_quadratic<T: Real>(
    a: Quaternion<T>,
    b: Quaternion<T>,
    c: Quaternion<T>,
    eps: T,
) -> Result<Vec<(Quaternion<T>, T)>, Error> {
    let scale_in = T::one() + a.abs().max(b.abs()).max(c.abs());
    if a.is_zero(eps * scale_in) || b.is_zero(eps * scale_in) || c.is_zero(eps * scale_in) {
        return Err(Error::ZeroCoefficient);
    }
    let ai = a.inverse().map_err(|_| Error::ZeroCoefficient)?;
    let bi = b.inverse().map_err(|_| Error::ZeroCoefficient)?;
    let aibi = ai * bi;
    let aicbi = ai * c * bi;

    // quadratic coefficient aibi * aibi is nonzero for invertible a, b,
    // which certifies the polynomial is not trivial
    let p = StdPoly::from_coeffs(vec![
        aicbi * aicbi,
        Quaternion::one() - aibi * aicbi - aicbi * aibi,
        aibi * aibi,
    ]);
    debug_assert!(!p.is_zero());

    let comps = p.components();
    let candidates = RealPoly::common_real_roots(&comps, eps)?;

    let f = TwoSidedPoly::quadratic(a, b, c);
    let mut out: Vec<(Quaternion<T>, T)> = Vec::new();
    for n0 in candidates {
        if n0 <= eps {
            continue;
        }
        let z0 = aibi.scale(n0) - aicbi;
        let pure = z0.re.abs() <= eps * (T::one() + z0.abs());
        let norm_ok = (z0.norm() - n0).abs() <= eps * (T::one() + n0) * T::of(10.0);
        let res_ok = f.eval(z0).abs() <= eps * f.scale_at(z0.abs());
        if pure && norm_ok && res_ok {
            let dup = out.iter().any(|(w, _)| {
                w.max_component_dist(z0) <= T::of(crate::ROOT_MERGE) * (T::one() + z0.abs())
            });
            if !dup {
                out.push((z0, n0));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solvers::pure_imaginary_roots;
    use crate::Quat64;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn qi() -> Quat64 {
        Quaternion::unit_i()
    }
    fn qj() -> Quat64 {
        Quaternion::unit_j()
    }
    fn qk() -> Quat64 {
        Quaternion::unit_k()
    }

    fn rand_quat(rng: &mut StdRng, w: f64) -> Quat64 {
        Quaternion::new(
            rng.gen_range(-w..w),
            rng.gen_range(-w..w),
            rng.gen_range(-w..w),
            rng.gen_range(-w..w),
        )
    }

    const EPS: f64 = 1e-9;

    #[test]
    fn eval_follows_the_two_sided_form() {
        // z^2 + i z j + (1 + j) vanishes at i
        let f = TwoSidedPoly::quadratic(qi(), qj(), Quaternion::one() + qj());
        assert!(f.eval(qi()).is_zero(1e-12));

        // with b = 1 evaluation matches the standard form
        let c = Quaternion::new(0.5, -1.0, 2.0, 0.25);
        let f = TwoSidedPoly::quadratic(Quaternion::one(), Quaternion::one(), c);
        let std = StdPoly::from_coeffs(vec![c, Quaternion::one(), Quaternion::one()]);
        let mut rng = StdRng::seed_from_u64(51);
        for _ in 0..50 {
            let z0 = rand_quat(&mut rng, 3.0);
            let lhs = f.eval(z0);
            assert!(lhs.approx_eq(std.eval(z0), 1e-9 * (1.0 + lhs.abs())));
        }

        // z^2 + i z j at 0
        let f = TwoSidedPoly::new(vec![
            TwoSidedTerm {
                left: Quaternion::one(),
                power: 2,
                right: Quaternion::one(),
            },
            TwoSidedTerm {
                left: qi(),
                power: 1,
                right: qj(),
            },
        ]);
        assert!(f.eval(Quaternion::zero()).is_zero(0.0));
    }

    #[test]
    fn constructed_instance_has_roots_of_norm_one_and_two() {
        let roots =
            pure_imaginary_roots_two_sided_quadratic(qi(), qj(), Quaternion::one() + qj(), EPS)
                .unwrap();
        assert!(
            roots
                .iter()
                .any(|(z, n)| z.approx_eq(qi(), 1e-9) && (n - 1.0).abs() < 1e-9),
            "missing the norm-1 root i: {roots:?}"
        );
        // the companion root i + k of norm 2 is also genuine
        assert!(roots
            .iter()
            .any(|(z, n)| z.approx_eq(qi() + qk(), 1e-9) && (n - 2.0).abs() < 1e-9));
        assert_eq!(roots.len(), 2);
    }

    #[test]
    fn all_real_coefficients_leave_no_pure_imaginary_root() {
        // z^2 + z + 1: a pure imaginary root would have to be real
        let roots = pure_imaginary_roots_two_sided_quadratic(
            Quat64::one(),
            Quaternion::one(),
            Quaternion::one(),
            EPS,
        )
        .unwrap();
        assert!(roots.is_empty());
    }

    #[test]
    fn zero_coefficients_are_rejected() {
        assert_eq!(
            pure_imaginary_roots_two_sided_quadratic(Quat64::zero(), qj(), qk(), EPS),
            Err(Error::ZeroCoefficient)
        );
    }

    #[test]
    fn never_more_than_two_distinct_norms_and_residuals_small() {
        let mut rng = StdRng::seed_from_u64(53);
        for _ in 0..1000 {
            let a = rand_quat(&mut rng, 3.0);
            let b = rand_quat(&mut rng, 3.0);
            let c = rand_quat(&mut rng, 3.0);
            if a.is_zero(1e-3) || b.is_zero(1e-3) || c.is_zero(1e-3) {
                continue;
            }
            let roots = pure_imaginary_roots_two_sided_quadratic(a, b, c, EPS).unwrap();
            let mut norms: Vec<f64> = roots.iter().map(|(_, n)| *n).collect();
            norms.sort_by(|x, y| x.partial_cmp(y).unwrap());
            norms.dedup_by(|x, y| (*x - *y).abs() <= 1e-6 * (1.0 + y.abs()));
            assert!(norms.len() <= 2, "more than two distinct norms: {norms:?}");

            let f = TwoSidedPoly::quadratic(a, b, c);
            for (z, _) in &roots {
                assert!(f.eval(*z).abs() <= 1e-8 * f.scale_at(z.abs()));
            }
        }
    }

    #[test]
    fn reduction_to_standard_form_when_b_is_one() {
        let mut rng = StdRng::seed_from_u64(59);
        let mut compared = 0;
        for _ in 0..200 {
            let a = rand_quat(&mut rng, 3.0);
            let c = rand_quat(&mut rng, 3.0);
            if a.is_zero(1e-3) || c.is_zero(1e-3) {
                continue;
            }
            let two_sided =
                pure_imaginary_roots_two_sided_quadratic(a, Quaternion::one(), c, EPS).unwrap();
            let std_poly = StdPoly::from_coeffs(vec![c, a, Quaternion::one()]);
            let std_roots = pure_imaginary_roots(&std_poly, EPS).unwrap();
            for (z, _) in &two_sided {
                assert!(
                    std_roots.contains(*z, 1e-6),
                    "two-sided root {z} missing from the standard pipeline"
                );
            }
            for z in &std_roots.isolated {
                assert!(
                    two_sided.iter().any(|(w, _)| w.approx_eq(*z, 1e-6)),
                    "standard root {z} missing from the two-sided candidates"
                );
            }
            compared += 1;
        }
        assert!(compared > 100);
    }
}
