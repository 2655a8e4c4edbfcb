//! Root solvers built on the central-variable decomposition.
//!
//! Every branch below is a *candidate generator*: closed forms and real
//! root extraction propose points, and back-substitution into the original
//! polynomial is the sole acceptance authority. That convention makes the
//! pipelines immune to sign-convention slips and floating-point branch
//! misclassification.

use crate::bivar::{decompose, norm_equation, re_filter, restrict_pure_imaginary};
use crate::error::Error;
use crate::eval::PolyEval;
use crate::oracle::refine_root;
use crate::quaternion::Quaternion;
use crate::real::Real;
use crate::realpoly::RealPoly;
use crate::rootset::RootSet;
use crate::stdpoly::StdPoly;

/// Relative residual `|f(z)| / scale(f, z)`; the acceptance predicate
/// everywhere is `verify_root <= eps`.
pub fn verify_root<T: Real, P: PolyEval<T>>(f: &P, z: Quaternion<T>) -> T {
    let scale = f.scale_at(z.abs());
    if scale == T::zero() {
        return f.eval(z).abs();
    }
    f.eval(z).abs() / scale
}

/// Normal form of the depressed quadratic `z^2 + a z + b`:
/// after removing the real part of the linear coefficient, `b` splits as
/// `m + n a + d` with `m, n` real and `d` anticommuting with `a`.
#[derive(Clone, Copy, Debug)]
pub struct QuadraticNormalForm<T> {
    /// Half the real part of the original linear coefficient; the depressed
    /// variable is `w = z + shift`.
    pub shift: T,
    /// Depressed linear coefficient (pure imaginary).
    pub a: Quaternion<T>,
    pub m: T,
    pub n: T,
    /// Component of the depressed constant that anticommutes with `a`.
    pub d: Quaternion<T>,
    /// `a^2` as a real number (`= -norm(a)`).
    pub a_sq: T,
    /// `d^2` as a real number (`= -norm(d)`).
    pub d_sq: T,
}

/// Compute the normal form of `z^2 + a z + b`.
///
/// `d` is the orthogonal complement of `span{1, a}` inside the depressed
/// constant: the commutant of a non-real pure imaginary `a` is exactly
/// `R + R a`, so `b - d = m + n a`. This agrees with the conjugation
/// projection `(b - a b a^{-1}) / 2`.
pub fn quadratic_normal_form<T: Real>(a: Quaternion<T>, b: Quaternion<T>) -> QuadraticNormalForm<T> {
    let shift = a.re * T::half();
    let a_dep = a.imag();
    let b_dep = Quaternion::from_real(shift * shift) - a.scale(shift) + b;
    let (m, b_imag) = b_dep.split();
    let norm_a = a_dep.norm();
    let n = if norm_a > T::zero() {
        b_imag.dot(a_dep) / norm_a
    } else {
        T::zero()
    };
    let d = b_imag - a_dep.scale(n);
    QuadraticNormalForm {
        shift,
        a: a_dep,
        m,
        n,
        d,
        a_sq: -a_dep.norm(),
        d_sq: -d.norm(),
    }
}

fn polish<T: Real>(f: &StdPoly<T>, z: Quaternion<T>, eps: T) -> Quaternion<T> {
    refine_root(f, z, eps * T::of(1e-3), 40).unwrap_or(z)
}

fn is_finite_quat<T: Real>(z: Quaternion<T>) -> bool {
    z.re.is_finite() && z.i.is_finite() && z.j.is_finite() && z.k.is_finite()
}

/// Sample-verify a sphere against `f` along the eight fixed directions.
fn sphere_verified<T: Real>(f: &StdPoly<T>, re: T, imag_norm: T, eps: T) -> bool {
    RootSet::<T>::sample_directions().iter().all(|&u| {
        let z = Quaternion::from_real(re) + u.scale(imag_norm.sqrt());
        verify_root(f, z) <= eps
    })
}

/// Complete root set of `z^2 + a z + b`.
///
/// Pipeline: depress the real part of `a`; if the depressed linear
/// coefficient vanishes take square roots of `-b`; otherwise split the
/// constant into `m + n a + d` and branch on `d` and `n`, rooting the real
/// polynomial in `r = Re(w)` (or `N`) that the norm equation forces; finally
/// reconstruct the imaginary part, undo the shift, and keep exactly the
/// candidates that verify against the original polynomial.
pub fn solve_quadratic<T: Real>(a: Quaternion<T>, b: Quaternion<T>, eps: T) -> RootSet<T> {
    let f = StdPoly::from_coeffs(vec![b, a, Quaternion::one()]);
    let scale_in = T::one() + a.abs() + b.abs();
    let nf = quadratic_normal_form(a, b);
    let s = nf.shift;
    let a1 = nf.a;
    let b1 = Quaternion::from_real(s * s) - a.scale(s) + b;

    let mut out = RootSet::new();
    let mut candidates: Vec<Quaternion<T>> = Vec::new();

    if a1.abs() <= eps * scale_in {
        // z^2 = -b (depressed): all square roots
        let mut roots = (-b1).square_roots(eps);
        roots.shift_re(s);
        candidates.extend(roots.isolated);
        for sphere in roots.spheres {
            if sphere_verified(&f, sphere.re, sphere.imag_norm, eps) {
                out.push_sphere(sphere.re, sphere.imag_norm);
            }
        }
    } else {
        let d_zero = nf.d.norm() <= eps * eps * (T::one() + b.norm());
        if d_zero {
            // constant lies in the commutative subfield R + R a: solve the
            // complex quadratic there, identifying a/|a| with the imaginary unit
            let alpha = a1 / a1.abs();
            let big_a = a1.abs();
            use num_complex::Complex;
            let beta = Complex::new(T::zero(), big_a);
            let gamma = Complex::new(nf.m, nf.n * big_a);
            let disc = beta * beta - Complex::new(T::of(4.0), T::zero()) * gamma;
            let sq = disc.sqrt();
            for root in [(-beta + sq), (-beta - sq)] {
                let w = root / Complex::new(T::two(), T::zero());
                candidates.push(Quaternion::from_real(w.re - s) + alpha.scale(w.im));
            }
            // safety net: the pure-imaginary pipeline on the depressed polynomial
            let depressed = StdPoly::from_coeffs(vec![b1, a1, Quaternion::one()]);
            if let Ok(pir) = pure_imaginary_roots(&depressed, eps) {
                for z in pir.isolated {
                    candidates.push(z - Quaternion::from_real(s));
                }
                for sphere in pir.spheres {
                    if sphere_verified(&f, sphere.re - s, sphere.imag_norm, eps) {
                        out.push_sphere(sphere.re - s, sphere.imag_norm);
                    }
                }
            }
        } else {
            let a2 = nf.a_sq;
            let d2 = nf.d_sq;
            let m = nf.m;
            let n = nf.n;
            let n_zero = n.abs() <= eps * (T::one() + b.abs());
            if !n_zero {
                // r-equation 16 r^6 + (-8a^2 + 16m) r^4
                //   + (-a^2(4m - a^2) + 4a^2 n^2 + 4d^2) r^2 - a^4 n^2 = 0,
                // a cubic in t = r^2
                let t_poly = RealPoly::from_coeffs(vec![
                    -a2 * a2 * n * n,
                    -a2 * (T::of(4.0) * m - a2) + T::of(4.0) * a2 * n * n + T::of(4.0) * d2,
                    T::of(16.0) * m - T::of(8.0) * a2,
                    T::of(16.0),
                ]);
                if let Ok(ts) = t_poly.real_roots(eps) {
                    for (t, _) in ts {
                        if t <= T::zero() {
                            continue;
                        }
                        let r_abs = t.sqrt();
                        for r0 in [r_abs, -r_abs] {
                            let two_r_a = Quaternion::from_real(T::two() * r0) + a1;
                            let Ok(inv) = two_r_a.inverse() else { continue };
                            let inner =
                                a1.scale((r0 + n) / (T::two() * r0)) * two_r_a + nf.d;
                            let x = -(inv * inner);
                            candidates.push(Quaternion::from_real(r0 - s) + x);
                        }
                    }
                }
            } else {
                // n = 0: run both subcases unconditionally and merge
                // (near-zero r is numerically ambiguous)
                // r = 0: N^2 + (a^2 - 2m) N + m^2 - d^2 = 0
                let n_poly = RealPoly::from_coeffs(vec![
                    m * m - d2,
                    a2 - T::two() * m,
                    T::one(),
                ]);
                if let (Ok(inv_a), Ok(ns)) = (a1.inverse(), n_poly.real_roots(eps)) {
                    for (n0, _) in ns {
                        let x = -(inv_a * (Quaternion::from_real(m - n0) + nf.d));
                        candidates.push(Quaternion::from_real(-s) + x);
                    }
                }
                // r != 0: 16 r^4 + (-8a^2 + 16m) r^2 - a^2(4m - a^2) + 4d^2 = 0
                let t_poly = RealPoly::from_coeffs(vec![
                    -a2 * (T::of(4.0) * m - a2) + T::of(4.0) * d2,
                    T::of(16.0) * m - T::of(8.0) * a2,
                    T::of(16.0),
                ]);
                if let Ok(ts) = t_poly.real_roots(eps) {
                    for (t, _) in ts {
                        if t <= T::zero() {
                            continue;
                        }
                        let r_abs = t.sqrt();
                        for r0 in [r_abs, -r_abs] {
                            let two_r_a = Quaternion::from_real(T::two() * r0) + a1;
                            let Ok(inv) = two_r_a.inverse() else { continue };
                            let inner = a1.scale(T::half()) * two_r_a + nf.d;
                            let x = -(inv * inner);
                            candidates.push(Quaternion::from_real(r0 - s) + x);
                        }
                    }
                }
            }
        }
    }

    for z in candidates {
        if !is_finite_quat(z) {
            continue;
        }
        let z = polish(&f, z, eps);
        if verify_root(&f, z) <= eps {
            out.push_isolated(z);
        }
    }
    out.remove_isolated_on_spheres();
    out.sort();
    out
}

/// Positive common real roots of all eight components of `g(N)` and `h(N)`,
/// sample-verified against `f`: the sphere norms of the pure imaginary
/// spectrum. `f` must already be monic.
fn sphere_norms_monic<T: Real>(f: &StdPoly<T>, eps: T) -> Result<Vec<T>, Error> {
    let (g, h) = decompose(f);
    let (g_n, h_n) = restrict_pure_imaginary(&g, &h);
    let mut system: Vec<RealPoly<T>> = g_n.components().to_vec();
    system.extend(h_n.components());
    // h(0) = f(0) = a0 != 0, so the system is never all zero
    let shared = RealPoly::common_real_roots(&system, eps)?;
    Ok(shared
        .into_iter()
        .filter(|&nu| nu > eps && sphere_verified(f, T::zero(), nu, eps * T::of(10.0)))
        .collect())
}

fn check_monic_nonzero_constant<T: Real>(f: &StdPoly<T>, eps: T) -> Result<StdPoly<T>, Error> {
    let monic = f.make_monic()?;
    if monic.degree() == Some(0) {
        return Ok(monic);
    }
    if monic.coeff(0).abs() <= eps * (T::one() + monic.max_coeff_abs()) {
        return Err(Error::ConstantTermZero);
    }
    Ok(monic)
}

/// All pure-imaginary roots of `f`, spheres included, for any degree.
///
/// Spheres are the positive common real zeros of all components of `g(N)`
/// and `h(N)`. Isolated candidates come from the common real zeros of the
/// norm-equation residual components (pre-filtered by `Re(-ḡ h)` when that
/// polynomial is not identically zero); each candidate norm `N0` with
/// `g(N0) != 0` reconstructs `z0 = -g(N0)^{-1} h(N0)` and is accepted only
/// if it is pure imaginary, has norm `N0`, and satisfies `f(z0) = 0`.
pub fn pure_imaginary_roots<T: Real>(f: &StdPoly<T>, eps: T) -> Result<RootSet<T>, Error> {
    let monic = check_monic_nonzero_constant(f, eps)?;
    let mut out = RootSet::new();
    if monic.degree() == Some(0) {
        return Ok(out);
    }
    for nu in sphere_norms_monic(&monic, eps)? {
        out.push_sphere(T::zero(), nu);
    }

    let (g, h) = decompose(&monic);
    let (g_n, h_n) = restrict_pure_imaginary(&g, &h);
    if !g_n.is_zero() {
        let residual = norm_equation(&g_n, &h_n)?;
        let mut system: Vec<RealPoly<T>> = residual
            .components_in_n()
            .expect("restricted residual is univariate")
            .to_vec();
        let filter = re_filter(&g_n, &h_n);
        if !filter.is_zero() {
            system.push(filter);
        }
        let candidates = RealPoly::common_real_roots(&system, eps)?;
        for n0 in candidates {
            if n0 <= eps {
                continue;
            }
            let g_val = g_n.eval(Quaternion::from_real(n0));
            if g_val.abs() <= eps * (T::one() + g_n.scale_at(n0)) {
                continue; // sphere territory, handled above
            }
            let Ok(g_inv) = g_val.inverse() else { continue };
            let z0 = -(g_inv * h_n.eval(Quaternion::from_real(n0)));
            if !is_finite_quat(z0) {
                continue;
            }
            let floor = T::epsilon() * T::of(64.0) * (T::one() + n0);
            let pure = z0.re.abs() <= eps * (T::one() + z0.abs());
            let norm_ok = (z0.norm() - n0).abs() <= (eps * n0).max(floor);
            if pure && norm_ok && verify_root(&monic, z0) <= eps {
                out.push_isolated(z0);
            }
        }
    }
    out.remove_isolated_on_spheres();
    out.sort();
    Ok(out)
}

/// The sphere norms of the pure imaginary spectrum: nonempty exactly when
/// `f` has infinitely many pure imaginary roots.
pub fn spherical_pure_imaginary<T: Real>(f: &StdPoly<T>, eps: T) -> Result<Vec<T>, Error> {
    let monic = check_monic_nonzero_constant(f, eps)?;
    if monic.degree() == Some(0) {
        return Ok(Vec::new());
    }
    sphere_norms_monic(&monic, eps)
}

/// Roots of the companion quadratic `z^2 - (a + b) z + b a`, which carries
/// the roots of `f = p (z - a)` associated with a root `b` of `p`.
pub fn companion_quadratic_roots<T: Real>(
    a: Quaternion<T>,
    b: Quaternion<T>,
    eps: T,
) -> RootSet<T> {
    solve_quadratic(-(a + b), b * a, eps)
}

fn pivot_key<T: Real>(z: &Quaternion<T>) -> (T, T, T, T, T) {
    (z.norm(), z.re, z.i, z.j, z.k)
}

/// Pick the factorization pivot: the isolated pure-imaginary root of
/// smallest norm, falling back to the sample `sqrt(N0) i` of the smallest
/// sphere when only spheres exist.
fn cubic_pivot<T: Real>(pir: &RootSet<T>) -> Option<Quaternion<T>> {
    pir.isolated
        .iter()
        .min_by(|x, y| {
            pivot_key(x)
                .partial_cmp(&pivot_key(y))
                .unwrap_or(std::cmp::Ordering::Equal)
        })
        .copied()
        .or_else(|| {
            pir.spheres
                .iter()
                .map(|s| s.imag_norm)
                .min_by(|x, y| x.partial_cmp(y).unwrap_or(std::cmp::Ordering::Equal))
                .map(|nu| Quaternion::unit_i().scale(nu.sqrt()))
        })
}

/// Complete root set of a monic cubic with nonzero constant term, provided
/// it has at least one pure imaginary root; errors with
/// [`Error::NotSupported`] otherwise (the factorization method needs that
/// pivot).
///
/// Pipeline: factor `f = p (z - a)` at a pure imaginary root `a`; solve the
/// quadratic `p`; recover the remaining roots of `f` through the companion
/// quadratic `z^2 - (a + b) z + b a` for each isolated root `b` of `p`;
/// spheres of a real-coefficient `p` pass to `f` directly (a central factor
/// keeps `f(z0) = p(z0) z0 - a p(z0)`).
pub fn solve_cubic<T: Real>(f: &StdPoly<T>, eps: T) -> Result<RootSet<T>, Error> {
    let monic = check_monic_nonzero_constant(f, eps)?;
    if monic.degree() != Some(3) {
        return Err(Error::WrongDegree { expected: 3 });
    }
    let pir = pure_imaginary_roots(&monic, eps)?;
    if pir.is_empty() {
        return Err(Error::NotSupported);
    }
    let pivot = cubic_pivot(&pir).expect("nonempty pure imaginary spectrum");

    let mut out = RootSet::new();
    out.extend(pir);
    out.push_isolated(pivot);

    let (p, _rem) = monic.right_div_linear(pivot)?;
    let p_roots = solve_quadratic(p.coeff(1), p.coeff(0), eps);
    for &b in &p_roots.isolated {
        let companion = companion_quadratic_roots(pivot, b, eps);
        for z in companion.isolated {
            if verify_root(&monic, z) <= eps {
                out.push_isolated(z);
            }
        }
        for sphere in companion.spheres {
            if sphere_verified(&monic, sphere.re, sphere.imag_norm, eps) {
                out.push_sphere(sphere.re, sphere.imag_norm);
            }
        }
    }
    if p.has_real_coeffs(eps) {
        for sphere in &p_roots.spheres {
            if sphere_verified(&monic, sphere.re, sphere.imag_norm, eps) {
                out.push_sphere(sphere.re, sphere.imag_norm);
            }
        }
    }
    out.remove_isolated_on_spheres();
    out.sort();
    Ok(out)
}

/// A linear factorization `lead * (z - chain[0]) ... (z - chain[last])`.
#[derive(Clone, Debug)]
pub struct CubicFactorization<T> {
    pub lead: Quaternion<T>,
    /// Roots of the linear factors, leftmost factor first.
    pub chain: Vec<Quaternion<T>>,
}

impl<T: Real> CubicFactorization<T> {
    pub fn expand(&self) -> StdPoly<T> {
        StdPoly::from_linear_factors(&self.chain).scale_left(self.lead)
    }
}

/// Factor a cubic into linear factors through its pure-imaginary pivot.
///
/// The rightmost factor uses the smallest-norm pure imaginary root; the
/// remaining quadratic is split at its smallest-norm isolated root (ties
/// broken lexicographically), or at the canonical sample `re + sqrt(nu) i`
/// when it only carries a sphere (then its coefficients are real and the
/// complementary root is the conjugate sample).
pub fn factor_cubic<T: Real>(f: &StdPoly<T>, eps: T) -> Result<CubicFactorization<T>, Error> {
    let lead = f.leading().ok_or(Error::ZeroPolynomial)?;
    let monic = check_monic_nonzero_constant(f, eps)?;
    if monic.degree() != Some(3) {
        return Err(Error::WrongDegree { expected: 3 });
    }
    let pir = pure_imaginary_roots(&monic, eps)?;
    if pir.is_empty() {
        return Err(Error::NotSupported);
    }
    let pivot = cubic_pivot(&pir).expect("nonempty pure imaginary spectrum");
    let (p, _) = monic.right_div_linear(pivot)?;
    let p_roots = solve_quadratic(p.coeff(1), p.coeff(0), eps);
    let b = p_roots
        .isolated
        .iter()
        .min_by(|x, y| {
            pivot_key(x)
                .partial_cmp(&pivot_key(y))
                .unwrap_or(std::cmp::Ordering::Equal)
        })
        .copied()
        .or_else(|| {
            p_roots.spheres.first().map(|s| {
                Quaternion::from_real(s.re) + Quaternion::unit_i().scale(s.imag_norm.sqrt())
            })
        })
        .ok_or(Error::NotSupported)?;
    let (l, _) = p.right_div_linear(b)?;
    let c = -l.coeff(0);
    Ok(CubicFactorization {
        lead,
        chain: vec![c, b, pivot],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{numeric_roots, OracleConfig};
    use crate::{Quat64, StdPoly64};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    const EPS: f64 = 1e-9;

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

    fn rand_unit(rng: &mut StdRng) -> Quat64 {
        loop {
            let u = rand_quat(rng, 1.0);
            if u.abs() > 0.1 {
                return u / u.abs();
            }
        }
    }

    /// `f = z^3 + (2 + ij) z + i - j`
    fn reference_cubic() -> StdPoly64 {
        StdPoly::from_coeffs(vec![
            qi() - qj(),
            Quaternion::from_real(2.0) + qk(),
            Quaternion::zero(),
            Quaternion::one(),
        ])
    }

    #[test]
    fn normal_form_invariants() {
        let mut rng = StdRng::seed_from_u64(81);
        for _ in 0..300 {
            let a = rand_quat(&mut rng, 4.0);
            let b = rand_quat(&mut rng, 4.0);
            if a.imag().abs() < 1e-3 {
                continue;
            }
            let nf = quadratic_normal_form(a, b);
            let ad = nf.a * nf.d;
            let da = nf.d * nf.a;
            assert!(ad.approx_eq(-da, 1e-9 * (1.0 + ad.abs())), "d must anticommute");
            // b (depressed) = m + n a + d
            let b_dep = Quaternion::from_real(nf.shift * nf.shift) - a.scale(nf.shift) + b;
            let rebuilt = Quaternion::from_real(nf.m) + nf.a.scale(nf.n) + nf.d;
            assert!(rebuilt.approx_eq(b_dep, 1e-9 * (1.0 + b_dep.abs())));
            // agreement with the conjugation projection (b - a b a^-1)/2
            let proj = (b_dep - nf.a * b_dep * nf.a.inverse().unwrap()).scale(0.5);
            assert!(proj.approx_eq(nf.d, 1e-9 * (1.0 + nf.d.abs())));
            // squares are real
            assert!((nf.a_sq + nf.a.norm()).abs() < 1e-12 * (1.0 + nf.a.norm()));
            assert!((nf.d_sq + nf.d.norm()).abs() < 1e-12 * (1.0 + nf.d.norm()));
        }
    }

    #[test]
    fn pure_real_negative_constant_gives_a_sphere() {
        // z^2 + 1 = 0: pure imaginaries of norm 1
        let roots = solve_quadratic(Quat64::zero(), Quaternion::one(), EPS);
        assert!(roots.isolated.is_empty());
        assert_eq!(roots.spheres.len(), 1);
        assert!((roots.spheres[0].imag_norm - 1.0).abs() < 1e-12);
        // membership: i^2 + 1 = 0
        let f = StdPoly::from_real_coeffs(&[1.0, 0.0, 1.0]);
        assert!(verify_root(&f, qi()) <= 1e-12);
    }

    #[test]
    fn shifted_real_quadratic_gives_shifted_sphere() {
        // z^2 + 2z + 5: sphere centered at -1 with imaginary norm 4
        let roots = solve_quadratic(Quaternion::from_real(2.0), Quaternion::from_real(5.0), EPS);
        assert!(roots.isolated.is_empty());
        assert_eq!(roots.spheres.len(), 1);
        assert!((roots.spheres[0].re + 1.0).abs() < 1e-12);
        assert!((roots.spheres[0].imag_norm - 4.0).abs() < 1e-12);
    }

    #[test]
    fn companion_of_the_reference_cubic_has_a_single_root() {
        // z^2 - (i + j) z + ij has no root besides j
        let roots = solve_quadratic(-(qi() + qj()), qi() * qj(), EPS);
        assert!(roots.spheres.is_empty());
        assert_eq!(roots.isolated.len(), 1);
        assert!(roots.contains_isolated(qj(), 1e-9));
    }

    #[test]
    fn quadratic_factor_of_the_reference_cubic() {
        // z^2 + j z + 1 + ij has roots i and i - j
        let roots = solve_quadratic(qj(), Quaternion::one() + qk(), EPS);
        assert!(roots.spheres.is_empty());
        assert_eq!(roots.isolated.len(), 2);
        assert!(roots.contains_isolated(qi(), 1e-9));
        assert!(roots.contains_isolated(qi() - qj(), 1e-9));
    }

    #[test]
    fn quadratic_with_zero_constant() {
        // z^2 + a z = (z + a) z
        let a = Quaternion::new(0.0, 1.0, -2.0, 0.5);
        let roots = solve_quadratic(a, Quat64::zero(), EPS);
        assert_eq!(roots.isolated.len(), 2);
        assert!(roots.contains_isolated(Quat64::zero(), 1e-9));
        assert!(roots.contains_isolated(-a, 1e-9));
    }

    #[test]
    fn double_real_root() {
        // (z - c)^2 via the companion of a = b = c
        let c = Quaternion::from_real(1.5);
        let roots = companion_quadratic_roots(c, c, EPS);
        assert_eq!(roots.isolated.len(), 1);
        assert!(roots.contains_isolated(c, 1e-9));
    }

    #[test]
    fn companion_recovers_second_root_of_reference_cubic() {
        let roots = companion_quadratic_roots(qj(), qi() - qj(), EPS);
        assert!(roots.contains_isolated(qi() + qj(), 1e-9));
    }

    #[test]
    fn quadratic_completeness_against_the_oracle() {
        let mut rng = StdRng::seed_from_u64(83);
        let base = OracleConfig {
            starts: 96,
            ..OracleConfig::default()
        };
        for round in 0..200u64 {
            let a = rand_quat(&mut rng, 5.0);
            let b = rand_quat(&mut rng, 5.0);
            let f = StdPoly::from_coeffs(vec![b, a, Quaternion::one()]);
            let solved = solve_quadratic(a, b, EPS);
            for z in &solved.isolated {
                assert!(verify_root(&f, *z) <= 1e-8, "solver root fails residual");
            }
            let cfg = OracleConfig {
                seed: round,
                ..base
            };
            let Ok(numeric) = numeric_roots(&f, &cfg) else {
                continue;
            };
            for z in &numeric.isolated {
                assert!(
                    solved.contains(*z, 1e-6),
                    "oracle root {z} missing from solver output for a={a}, b={b}"
                );
            }
        }
    }

    #[test]
    fn conjugation_covariance_of_the_quadratic() {
        let mut rng = StdRng::seed_from_u64(89);
        for _ in 0..100 {
            let a = rand_quat(&mut rng, 3.0);
            let b = rand_quat(&mut rng, 3.0);
            let u = rand_unit(&mut rng);
            let ui = u.inverse().unwrap();
            let roots = solve_quadratic(a, b, EPS);
            let conj_roots = solve_quadratic(u * a * ui, u * b * ui, EPS);
            for z in &roots.isolated {
                let w = u * *z * ui;
                assert!(
                    conj_roots.contains(w, 1e-6),
                    "conjugated root {w} missing"
                );
            }
            assert_eq!(roots.spheres.len(), conj_roots.spheres.len());
        }
    }

    #[test]
    fn pure_imaginary_roots_of_the_reference_cubic() {
        let roots = pure_imaginary_roots(&reference_cubic(), EPS).unwrap();
        assert!(roots.spheres.is_empty());
        assert_eq!(roots.isolated.len(), 2);
        assert!(roots.contains_isolated(qj(), 1e-9));
        assert!(roots.contains_isolated(qi() + qj(), 1e-9));
    }

    #[test]
    fn pure_imaginary_sphere_of_z2_plus_one() {
        let f = StdPoly::from_real_coeffs(&[1.0, 0.0, 1.0]);
        let roots = pure_imaginary_roots(&f, EPS).unwrap();
        assert!(roots.isolated.is_empty());
        assert_eq!(roots.spheres.len(), 1);
        assert!((roots.spheres[0].imag_norm - 1.0).abs() < 1e-12);
    }

    #[test]
    fn cube_minus_one_has_no_pure_imaginary_roots() {
        let f = StdPoly::from_real_coeffs(&[-1.0, 0.0, 0.0, 1.0]);
        let roots = pure_imaginary_roots(&f, EPS).unwrap();
        assert!(roots.is_empty());
    }

    #[test]
    fn zero_constant_term_is_rejected() {
        let f = StdPoly::from_coeffs(vec![
            Quaternion::zero(),
            Quaternion::one(),
            Quaternion::one(),
        ]);
        assert_eq!(pure_imaginary_roots(&f, EPS), Err(Error::ConstantTermZero));
    }

    #[test]
    fn spherical_detection() {
        // reference cubic: g and h share no root
        assert!(spherical_pure_imaginary(&reference_cubic(), EPS)
            .unwrap()
            .is_empty());

        // (z^2 + 1)(z - i) = z^3 - i z^2 + z - i: sphere at N = 1
        let f = &StdPoly::from_real_coeffs(&[1.0, 0.0, 1.0]) * &StdPoly::linear_from_root(qi());
        let norms = spherical_pure_imaginary(&f, EPS).unwrap();
        assert_eq!(norms.len(), 1);
        assert!((norms[0] - 1.0).abs() < 1e-9);
        assert!(verify_root(&f, qj()) <= 1e-12);
        assert!(verify_root(&f, qk()) <= 1e-12);

        // z^2 + 5: g(N) = 0 identically, every root of h(N) qualifies
        let f = StdPoly::from_real_coeffs(&[5.0, 0.0, 1.0]);
        let norms = spherical_pure_imaginary(&f, EPS).unwrap();
        assert_eq!(norms.len(), 1);
        assert!((norms[0] - 5.0).abs() < 1e-9);
    }

    #[test]
    fn sphere_dichotomy() {
        let polys = [
            reference_cubic(),
            StdPoly::from_real_coeffs(&[1.0, 0.0, 1.0]),
            StdPoly::from_real_coeffs(&[5.0, 0.0, 1.0]),
            &StdPoly::from_real_coeffs(&[1.0, 0.0, 1.0]) * &StdPoly::linear_from_root(qi()),
            StdPoly::from_real_coeffs(&[-1.0, 0.0, 0.0, 1.0]),
        ];
        for f in polys {
            let norms = spherical_pure_imaginary(&f, EPS).unwrap();
            let roots = pure_imaginary_roots(&f, EPS).unwrap();
            assert_eq!(
                norms.is_empty(),
                roots.spheres.is_empty(),
                "dichotomy failed for {f}"
            );
        }
    }

    #[test]
    fn solve_cubic_reference_end_to_end() {
        let roots = solve_cubic(&reference_cubic(), EPS).unwrap();
        assert!(roots.spheres.is_empty());
        assert_eq!(roots.isolated.len(), 2);
        assert!(roots.contains_isolated(qj(), 1e-9));
        assert!(roots.contains_isolated(qi() + qj(), 1e-9));

        let fact = factor_cubic(&reference_cubic(), EPS).unwrap();
        assert_eq!(fact.chain.len(), 3);
        assert!(fact.chain[0].approx_eq(-(qi() + qj()), 1e-9));
        assert!(fact.chain[1].approx_eq(qi(), 1e-9));
        assert!(fact.chain[2].approx_eq(qj(), 1e-9));
        assert!(fact.expand().approx_eq(&reference_cubic(), 1e-12));
    }

    #[test]
    fn solve_cubic_without_pure_imaginary_root_is_not_supported() {
        let f = StdPoly::from_real_coeffs(&[-1.0, 0.0, 0.0, 1.0]);
        assert_eq!(solve_cubic(&f, EPS), Err(Error::NotSupported));
    }

    #[test]
    fn cubic_with_central_quadratic_factor_inherits_its_sphere() {
        // (z^2 + z + 1)(z - i): root i plus the sphere re = -1/2, nu = 3/4
        let f = &StdPoly::from_real_coeffs(&[1.0, 1.0, 1.0]) * &StdPoly::linear_from_root(qi());
        let roots = solve_cubic(&f, EPS).unwrap();
        assert!(roots.contains_isolated(qi(), 1e-9));
        assert_eq!(roots.spheres.len(), 1);
        assert!((roots.spheres[0].re + 0.5).abs() < 1e-9);
        assert!((roots.spheres[0].imag_norm - 0.75).abs() < 1e-9);
        // hand check of one sphere point: -1/2 + (sqrt(3)/2) j
        let z = Quaternion::new(-0.5, 0.0, 3f64.sqrt() / 2.0, 0.0);
        assert!(verify_root(&f, z) <= 1e-12);
    }

    #[test]
    fn planted_cubics_are_recovered() {
        let mut rng = StdRng::seed_from_u64(97);
        for _ in 0..200 {
            let q = StdPoly::from_coeffs(vec![
                rand_quat(&mut rng, 2.0),
                rand_quat(&mut rng, 2.0),
                Quaternion::one(),
            ]);
            let norm: f64 = rng.gen_range(0.5..5.0);
            let x0 = rand_unit(&mut rng).imag();
            let x0 = if x0.abs() < 1e-6 { qi() } else { x0 / x0.abs() };
            let x0 = x0.scale(norm.sqrt());
            let f = &q * &StdPoly::linear_from_root(x0);
            let roots = solve_cubic(&f, EPS).expect("planted pure imaginary root");
            assert!(
                roots.contains(x0, 1e-6),
                "planted root {x0} missing from {roots:?}"
            );
            for z in &roots.isolated {
                assert!(verify_root(&f, *z) <= EPS);
            }
        }
    }

    #[test]
    fn cubic_factor_identity() {
        let mut rng = StdRng::seed_from_u64(101);
        let mut done = 0;
        for _ in 0..300 {
            if done >= 100 {
                break;
            }
            let q = StdPoly::from_coeffs(vec![
                rand_quat(&mut rng, 2.0),
                rand_quat(&mut rng, 2.0),
                Quaternion::one(),
            ]);
            let x0 = {
                let u = rand_unit(&mut rng).imag();
                let u = if u.abs() < 1e-6 { qi() } else { u / u.abs() };
                u.scale(rng.gen_range(0.8..2.0))
            };
            let f = &q * &StdPoly::linear_from_root(x0);
            let Ok(fact) = factor_cubic(&f, EPS) else {
                continue;
            };
            assert!(
                fact.expand().approx_eq(&f, 1e-8),
                "factor chain does not reproduce the cubic"
            );
            done += 1;
        }
        assert!(done >= 100);
    }

    #[test]
    fn verify_root_examples() {
        assert!(verify_root(&reference_cubic(), qj()) <= 1e-15);
        let f = StdPoly::from_real_coeffs(&[1.0, 0.0, 1.0]);
        assert!(verify_root(&f, Quaternion::from_real(1.0)) > EPS);
        let mut rng = StdRng::seed_from_u64(103);
        for _ in 0..100 {
            let p = StdPoly::from_coeffs(vec![
                rand_quat(&mut rng, 2.0),
                rand_quat(&mut rng, 2.0),
                Quaternion::one(),
            ]);
            let z0 = rand_quat(&mut rng, 2.0);
            let f = &p * &StdPoly::linear_from_root(z0);
            assert!(verify_root(&f, z0) <= EPS);
        }
    }
}
