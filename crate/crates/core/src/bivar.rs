//! Two-variable central decomposition.
//!
//! For `f` in `H[z]` and any quaternion `z0 = r0 + x0` with `N0 = -x0^2`,
//! there are `g, h` in `H[r, N]` (both variables central) with
//!
//! ```text
//! f(z0) = g(r0, N0) * x0 + h(r0, N0)
//! ```
//!
//! built from the binomial expansion of `(r + x)^k` split into odd powers of
//! `x` (which contribute `g`) and even powers (which contribute `h`), using
//! `x^2 = -N`. Restricting to `r = 0` specializes the identity to pure
//! imaginary points, and the norm equation
//!
//! ```text
//! R = g ḡ g N + h ḡ h = 0
//! ```
//!
//! turns root norms into common real zeros of the four components of `R`.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::quaternion::Quaternion;
use crate::real::Real;
use crate::realpoly::RealPoly;
use crate::stdpoly::StdPoly;

/// Quaternion-coefficient polynomial in two commuting central variables
/// `r` and `N`; keys are `(r_power, n_power)`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct CentralBivarPoly<T> {
    terms: BTreeMap<(u32, u32), Quaternion<T>>,
}

impl<T: Real> CentralBivarPoly<T> {
    pub fn zero() -> Self {
        CentralBivarPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Quaternion<T>) -> Self {
        let mut p = Self::zero();
        p.add_term(0, 0, c);
        p.normalize();
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Quaternion<T>)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, r_pow: u32, n_pow: u32, c: Quaternion<T>) {
        let slot = self
            .terms
            .entry((r_pow, n_pow))
            .or_insert_with(Quaternion::zero);
        *slot = *slot + c;
    }

    fn normalize(&mut self) {
        let max = self.max_coeff_abs();
        let cut = T::default_eps() * max;
        self.terms.retain(|_, c| c.abs() > cut);
    }

    pub fn max_coeff_abs(&self) -> T {
        self.terms
            .values()
            .fold(T::zero(), |m, c| m.max(c.abs()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn deg_r(&self) -> Option<u32> {
        self.terms.keys().map(|&(r, _)| r).max()
    }

    pub fn deg_n(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, n)| n).max()
    }

    pub fn eval(&self, r0: T, n0: T) -> Quaternion<T> {
        self.terms
            .iter()
            .fold(Quaternion::zero(), |acc, (&(rp, np), &c)| {
                acc + c.scale(r0.powi(rp as i32) * n0.powi(np as i32))
            })
    }

    pub fn conj_coeffs(&self) -> Self {
        CentralBivarPoly {
            terms: self
                .terms
                .iter()
                .map(|(&k, &c)| (k, c.conjugate()))
                .collect(),
        }
    }

    /// Multiply by the monomial `N`.
    pub fn mul_n(&self) -> Self {
        CentralBivarPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(rp, np), &c)| ((rp, np + 1), c))
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (&(r1, n1), &c1) in &self.terms {
            for (&(r2, n2), &c2) in &rhs.terms {
                out.add_term(r1 + r2, n1 + n2, c1 * c2);
            }
        }
        out.normalize();
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (&k, &c) in &rhs.terms {
            out.add_term(k.0, k.1, c);
        }
        out.normalize();
        out
    }

    /// Substitute `r = 0`: the univariate polynomial in `N`.
    pub fn restrict_r_zero(&self) -> StdPoly<T> {
        let deg = self
            .terms
            .keys()
            .filter(|&&(rp, _)| rp == 0)
            .map(|&(_, np)| np)
            .max();
        let Some(deg) = deg else {
            return StdPoly::zero();
        };
        let mut coeffs = vec![Quaternion::zero(); deg as usize + 1];
        for (&(rp, np), &c) in &self.terms {
            if rp == 0 {
                coeffs[np as usize] = coeffs[np as usize] + c;
            }
        }
        StdPoly::from_coeffs(coeffs)
    }

    /// The four real component polynomials in the basis `(1, i, j, k)`.
    pub fn components(&self) -> [RealBivarPoly<T>; 4] {
        let pick = |f: fn(&Quaternion<T>) -> T| RealBivarPoly {
            terms: self
                .terms
                .iter()
                .map(|(&k, c)| (k, f(c)))
                .filter(|(_, v)| *v != T::zero())
                .collect(),
        };
        [
            pick(|c| c.re),
            pick(|c| c.i),
            pick(|c| c.j),
            pick(|c| c.k),
        ]
    }

    pub fn approx_eq(&self, other: &Self, tol: T) -> bool {
        let keys: std::collections::BTreeSet<(u32, u32)> = self
            .terms
            .keys()
            .chain(other.terms.keys())
            .copied()
            .collect();
        let scale = T::one() + self.max_coeff_abs().max(other.max_coeff_abs());
        keys.into_iter().all(|k| {
            let a = self.terms.get(&k).copied().unwrap_or_else(Quaternion::zero);
            let b = other
                .terms
                .get(&k)
                .copied()
                .unwrap_or_else(Quaternion::zero);
            a.max_component_dist(b) <= tol * scale
        })
    }
}

/// Real-coefficient polynomial in the central variables `r` and `N`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct RealBivarPoly<T> {
    terms: BTreeMap<(u32, u32), T>,
}

impl<T: Real> RealBivarPoly<T> {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn eval(&self, r0: T, n0: T) -> T {
        self.terms.iter().fold(T::zero(), |acc, (&(rp, np), &c)| {
            acc + c * r0.powi(rp as i32) * n0.powi(np as i32)
        })
    }

    pub fn deg_r(&self) -> Option<u32> {
        self.terms.keys().map(|&(r, _)| r).max()
    }

    pub fn max_coeff_abs(&self) -> T {
        self.terms.values().fold(T::zero(), |m, c| m.max(c.abs()))
    }

    /// As a univariate polynomial in `N` when no `r` power appears.
    pub fn univariate_in_n(&self) -> Option<RealPoly<T>> {
        if self.deg_r().unwrap_or(0) > 0 {
            return None;
        }
        let deg = self.terms.keys().map(|&(_, np)| np).max().unwrap_or(0);
        let mut coeffs = vec![T::zero(); deg as usize + 1];
        for (&(_, np), &c) in &self.terms {
            coeffs[np as usize] = coeffs[np as usize] + c;
        }
        Some(RealPoly::from_coeffs(coeffs))
    }
}

/// The norm-equation residual `R = g ḡ g N + h ḡ h` together with its four
/// real component polynomials. Real zeros of the norm equation are exactly
/// the common real zeros of all components.
#[derive(Clone, Debug)]
pub struct NormEqResidual<T> {
    pub residual: CentralBivarPoly<T>,
    pub components: [RealBivarPoly<T>; 4],
}

impl<T: Real> NormEqResidual<T> {
    fn from_residual(residual: CentralBivarPoly<T>) -> Self {
        let components = residual.components();
        NormEqResidual {
            residual,
            components,
        }
    }

    /// The residual as a univariate polynomial in `N`, when it has no `r`
    /// dependence (always true for the pure-imaginary restriction).
    pub fn residual_in_n(&self) -> Option<StdPoly<T>> {
        if self.residual.deg_r().unwrap_or(0) > 0 {
            return None;
        }
        Some(self.residual.restrict_r_zero())
    }

    pub fn components_in_n(&self) -> Option<[RealPoly<T>; 4]> {
        let comps: Vec<RealPoly<T>> = self
            .components
            .iter()
            .map(|c| c.univariate_in_n())
            .collect::<Option<Vec<_>>>()?;
        Some([
            comps[0].clone(),
            comps[1].clone(),
            comps[2].clone(),
            comps[3].clone(),
        ])
    }

    /// Monic gcd of the nonzero univariate components: the real factor the
    /// whole component system shares.
    pub fn common_component_factor(&self, eps: T) -> Option<RealPoly<T>> {
        let comps = self.components_in_n()?;
        let mut acc: Option<RealPoly<T>> = None;
        for c in comps.iter().filter(|c| !c.is_zero()) {
            acc = Some(match acc {
                None => c.make_monic().ok()?,
                Some(g) => g.gcd(c, eps),
            });
        }
        acc
    }
}

/// Exact Pascal-triangle row `binom(k, 0..=k)` in the scalar type.
fn pascal_row<T: Real>(k: usize) -> Vec<T> {
    let mut row = vec![T::one()];
    for _ in 0..k {
        let mut next = vec![T::one()];
        for w in row.windows(2) {
            next.push(w[0] + w[1]);
        }
        next.push(T::one());
        row = next;
    }
    row
}

/// Decompose `f` into `(g, h)` with `f(z0) = g(r0, N0) x0 + h(r0, N0)`.
///
/// From `(r + x)^k = Σ_m binom(k, m) r^{k-m} x^m` with `x^2 = -N`:
///
/// * odd `m = 2t+1` contributes `binom(k, 2t+1) (-1)^t N^t r^{k-2t-1}` to `g_k`,
/// * even `m = 2t` contributes `binom(k, 2t) (-1)^t N^t r^{k-2t}` to `h_k`,
///
/// and the coefficients of `f` apply on the left:
/// `g = Σ_k a_k g_k` (k >= 1), `h = a_0 + Σ_k a_k h_k`.
pub fn decompose<T: Real>(f: &StdPoly<T>) -> (CentralBivarPoly<T>, CentralBivarPoly<T>) {
    let mut g = CentralBivarPoly::zero();
    let mut h = CentralBivarPoly::zero();
    let Some(n) = f.degree() else {
        return (g, h);
    };
    h.add_term(0, 0, f.coeff(0));
    for k in 1..=n {
        let a_k = f.coeff(k);
        if a_k == Quaternion::zero() {
            continue;
        }
        let row = pascal_row::<T>(k);
        let mut sign = T::one();
        for t in 0..=(k / 2) {
            if 2 * t + 1 <= k {
                g.add_term(
                    (k - 2 * t - 1) as u32,
                    t as u32,
                    a_k.scale(row[2 * t + 1] * sign),
                );
            }
            h.add_term((k - 2 * t) as u32, t as u32, a_k.scale(row[2 * t] * sign));
            sign = -sign;
        }
    }
    g.normalize();
    h.normalize();
    (g, h)
}

/// Restrict the decomposition to pure imaginary points: `g(N) = g(0, N)`,
/// `h(N) = h(0, N)`; then `f(z0) = g(N0) z0 + h(N0)` for pure imaginary
/// `z0` of norm `N0`.
pub fn restrict_pure_imaginary<T: Real>(
    g: &CentralBivarPoly<T>,
    h: &CentralBivarPoly<T>,
) -> (StdPoly<T>, StdPoly<T>) {
    (g.restrict_r_zero(), h.restrict_r_zero())
}

/// Univariate norm-equation residual `R(N) = g ḡ g N + h ḡ h` for the pure
/// imaginary restriction. Errors with [`Error::DegenerateG`] when `g(N)` is
/// identically zero (then the reduction does not apply and pure imaginary
/// roots are governed by `h(N0) = 0` alone).
pub fn norm_equation<T: Real>(
    g_n: &StdPoly<T>,
    h_n: &StdPoly<T>,
) -> Result<NormEqResidual<T>, Error> {
    if g_n.is_zero() {
        return Err(Error::DegenerateG);
    }
    let conj_g = g_n.conj_coeffs();
    let g_conj_g = g_n * &conj_g;
    let g_side = (&g_conj_g * g_n).shift_up(1);
    let h_conj_g = h_n * &conj_g;
    let h_side = &h_conj_g * h_n;
    let residual_n = &g_side + &h_side;
    let mut residual = CentralBivarPoly::zero();
    for (m, &c) in residual_n.coeffs().iter().enumerate() {
        residual.add_term(0, m as u32, c);
    }
    residual.normalize();
    Ok(NormEqResidual::from_residual(residual))
}

/// Bivariate norm-equation residual in both central variables. Used to
/// cross-check verified roots: a root `(r0, N0, x0)` of `f` either zeros all
/// four components of the residual or zeros both `g` and `h`.
pub fn bivariate_norm_equation<T: Real>(
    g: &CentralBivarPoly<T>,
    h: &CentralBivarPoly<T>,
) -> NormEqResidual<T> {
    let conj_g = g.conj_coeffs();
    let g_side = g.mul(&conj_g).mul(g).mul_n();
    let h_side = h.mul(&conj_g).mul(h);
    NormEqResidual::from_residual(g_side.add(&h_side))
}

/// The real filter `Re(-ḡ(N) h(N))` as a real polynomial in `N`: the norm of
/// every pure imaginary root is one of its zeros. May be identically zero,
/// in which case it filters nothing.
pub fn re_filter<T: Real>(g_n: &StdPoly<T>, h_n: &StdPoly<T>) -> RealPoly<T> {
    let prod = &g_n.conj_coeffs() * h_n;
    (-&prod).real_component()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Quat64, StdPoly64};
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
    fn decompose_generic_quadratic() {
        // z^2 + a z + b -> g = 2r + a, h = r^2 - N + a r + b
        let a = Quaternion::new(0.0, 1.0, -2.0, 0.5);
        let b = Quaternion::new(1.5, 0.0, 3.0, -1.0);
        let f = StdPoly::from_coeffs(vec![b, a, Quaternion::one()]);
        let (g, h) = decompose(&f);

        let mut g_expect = CentralBivarPoly::zero();
        g_expect.add_term(1, 0, Quaternion::from_real(2.0));
        g_expect.add_term(0, 0, a);
        assert!(g.approx_eq(&g_expect, 1e-12));

        let mut h_expect = CentralBivarPoly::zero();
        h_expect.add_term(2, 0, Quaternion::one());
        h_expect.add_term(0, 1, -Quat64::one());
        h_expect.add_term(1, 0, a);
        h_expect.add_term(0, 0, b);
        assert!(h.approx_eq(&h_expect, 1e-12));
    }

    #[test]
    fn decompose_var_and_cube() {
        let (g, h) = decompose(&StdPoly64::var());
        assert!(g.approx_eq(&CentralBivarPoly::constant(Quaternion::one()), 1e-12));
        let mut h_expect = CentralBivarPoly::zero();
        h_expect.add_term(1, 0, Quaternion::one());
        assert!(h.approx_eq(&h_expect, 1e-12));

        // z^3: g = 3r^2 - N, h = r^3 - 3 r N
        let (g, h) = decompose(&StdPoly64::monomial(Quaternion::one(), 3));
        let mut g_expect = CentralBivarPoly::zero();
        g_expect.add_term(2, 0, Quaternion::from_real(3.0));
        g_expect.add_term(0, 1, Quaternion::from_real(-1.0));
        assert!(g.approx_eq(&g_expect, 1e-12));
        let mut h_expect = CentralBivarPoly::zero();
        h_expect.add_term(3, 0, Quaternion::one());
        h_expect.add_term(1, 1, Quaternion::from_real(-3.0));
        assert!(h.approx_eq(&h_expect, 1e-12));
    }

    #[test]
    fn decomposition_identity_on_random_instances() {
        let mut rng = StdRng::seed_from_u64(31);
        for _ in 0..1000 {
            let deg = rng.gen_range(1..=6);
            let mut coeffs: Vec<Quat64> = (0..deg).map(|_| rand_quat(&mut rng, 5.0)).collect();
            coeffs.push(Quaternion::one());
            let f = StdPoly::from_coeffs(coeffs);
            let z0 = rand_quat(&mut rng, 5.0);
            let (r0, x0) = z0.split();
            let n0 = x0.norm();
            let (g, h) = decompose(&f);
            let direct = f.eval(z0);
            let via = g.eval(r0, n0) * x0 + h.eval(r0, n0);
            assert!(
                direct.approx_eq(via, 1e-9 * (1.0 + direct.abs())),
                "decomposition identity failed: {direct} vs {via}"
            );
        }
    }

    #[test]
    fn restriction_of_reference_cubic() {
        let (g, h) = decompose(&reference_cubic());
        let (g_n, h_n) = restrict_pure_imaginary(&g, &h);
        // g(N) = -N + 2 + ij
        let g_expect = StdPoly::from_coeffs(vec![
            Quaternion::from_real(2.0) + qk(),
            Quaternion::from_real(-1.0),
        ]);
        assert!(g_n.approx_eq(&g_expect, 1e-12));
        // h(N) = i - j
        assert!(h_n.approx_eq(&StdPoly::constant(qi() - qj()), 1e-12));
    }

    #[test]
    fn restriction_of_pure_square_and_cube() {
        // z^2 + b: g(N) = 0, h(N) = -N + b
        let b = Quaternion::new(0.5, 1.0, 0.0, -2.0);
        let f = StdPoly::from_coeffs(vec![b, Quaternion::zero(), Quaternion::one()]);
        let (g, h) = decompose(&f);
        let (g_n, h_n) = restrict_pure_imaginary(&g, &h);
        assert!(g_n.is_zero());
        let h_expect = StdPoly::from_coeffs(vec![b, Quaternion::from_real(-1.0)]);
        assert!(h_n.approx_eq(&h_expect, 1e-12));

        // z^3: g(N) = -N, h(N) = 0
        let (g, h) = decompose(&StdPoly64::monomial(Quaternion::one(), 3));
        let (g_n, h_n) = restrict_pure_imaginary(&g, &h);
        assert!(g_n.approx_eq(
            &StdPoly::from_coeffs(vec![Quaternion::zero(), Quaternion::from_real(-1.0)]),
            1e-12
        ));
        assert!(h_n.is_zero());
    }

    #[test]
    fn degree_law_for_restrictions() {
        let mut rng = StdRng::seed_from_u64(37);
        for _ in 0..300 {
            let n = rng.gen_range(1..=7);
            let mut coeffs: Vec<Quat64> = (0..n).map(|_| rand_quat(&mut rng, 5.0)).collect();
            coeffs.push(Quaternion::one());
            let f = StdPoly::from_coeffs(coeffs);
            let (g, h) = decompose(&f);
            let (g_n, h_n) = restrict_pure_imaginary(&g, &h);
            assert_eq!(
                g_n.degree(),
                Some((n - 1) / 2),
                "deg g(N) law failed at n = {n}"
            );
            if let Some(dh) = h_n.degree() {
                assert!(dh <= n / 2, "deg h(N) bound failed at n = {n}");
            }
        }
    }

    #[test]
    fn norm_equation_of_reference_cubic() {
        let (g, h) = decompose(&reference_cubic());
        let (g_n, h_n) = restrict_pure_imaginary(&g, &h);
        let res = norm_equation(&g_n, &h_n).unwrap();
        // R = (-N + 2 + ij)(N^3 - 4N^2 + 5N - 2)
        let cubic = StdPoly::from_real_coeffs(&[-2.0, 5.0, -4.0, 1.0]);
        let expect = &g_n * &cubic;
        assert!(res.residual_in_n().unwrap().approx_eq(&expect, 1e-12));

        let factor = res.common_component_factor(1e-9).unwrap();
        let target = RealPoly::from_coeffs(vec![-2.0, 5.0, -4.0, 1.0]);
        assert!(factor.approx_eq(&target, 1e-9), "factor {:?}", factor);
    }

    #[test]
    fn norm_equation_of_linear_restriction() {
        // g(N) = 1, h(N) = c with c a unit pure imaginary: R = N - 1
        let g_n = StdPoly64::one();
        let h_n = StdPoly::constant(qk());
        let res = norm_equation(&g_n, &h_n).unwrap();
        let expect = StdPoly::from_real_coeffs(&[-1.0, 1.0]);
        assert!(res.residual_in_n().unwrap().approx_eq(&expect, 1e-12));
    }

    #[test]
    fn norm_equation_of_cube_minus_one() {
        // f = z^3 - 1: g(N) = -N, h(N) = -1, R = -N^4 - N
        let f = StdPoly::from_real_coeffs(&[-1.0, 0.0, 0.0, 1.0]);
        let (g, h) = decompose(&f);
        let (g_n, h_n) = restrict_pure_imaginary(&g, &h);
        let res = norm_equation(&g_n, &h_n).unwrap();
        let expect = StdPoly::from_real_coeffs(&[0.0, -1.0, 0.0, 0.0, -1.0]);
        assert!(res.residual_in_n().unwrap().approx_eq(&expect, 1e-12));
        // real roots of the components: {-1, 0}, none positive
        let comps = res.components_in_n().unwrap();
        let roots: Vec<f64> = RealPoly::common_real_roots(&comps, 1e-9).unwrap();
        assert_eq!(roots.len(), 2);
        assert!((roots[0] + 1.0).abs() < 1e-9);
        assert!(roots[1].abs() < 1e-9);
        assert!(roots.iter().all(|&n| n <= 1e-9));
    }

    #[test]
    fn norm_equation_rejects_zero_g() {
        let h_n = StdPoly::constant(qi());
        assert!(matches!(
            norm_equation(&StdPoly64::zero(), &h_n),
            Err(Error::DegenerateG)
        ));
    }

    #[test]
    fn bivariate_residual_of_constants() {
        let one = CentralBivarPoly::constant(Quat64::one());
        let res = bivariate_norm_equation(&one, &one);
        // N + 1: no nonnegative real root
        let mut expect = CentralBivarPoly::zero();
        expect.add_term(0, 1, Quaternion::one());
        expect.add_term(0, 0, Quaternion::one());
        assert!(res.residual.approx_eq(&expect, 1e-12));
    }

    #[test]
    fn bivariate_matches_univariate_on_restriction() {
        let (g, h) = decompose(&reference_cubic());
        let (g_n, h_n) = restrict_pure_imaginary(&g, &h);
        let uni = norm_equation(&g_n, &h_n).unwrap();
        // embed the restrictions as bivariate polynomials and compare
        let mut g_b = CentralBivarPoly::zero();
        for (m, &c) in g_n.coeffs().iter().enumerate() {
            g_b.add_term(0, m as u32, c);
        }
        let mut h_b = CentralBivarPoly::zero();
        for (m, &c) in h_n.coeffs().iter().enumerate() {
            h_b.add_term(0, m as u32, c);
        }
        let biv = bivariate_norm_equation(&g_b, &h_b);
        assert!(biv.residual.approx_eq(&uni.residual, 1e-12));
    }

    #[test]
    fn planted_roots_zero_the_bivariate_components() {
        let mut rng = StdRng::seed_from_u64(41);
        for _ in 0..300 {
            let deg = rng.gen_range(1..=3);
            let mut coeffs: Vec<Quat64> = (0..deg).map(|_| rand_quat(&mut rng, 2.0)).collect();
            coeffs.push(Quaternion::one());
            let p = StdPoly::from_coeffs(coeffs);
            let z0 = rand_quat(&mut rng, 2.0);
            let f = &p * &StdPoly::linear_from_root(z0);
            let (g, h) = decompose(&f);
            let res = bivariate_norm_equation(&g, &h);
            let (r0, x0) = z0.split();
            let n0 = x0.norm();
            let scale = 1.0 + f.scale_at(z0.abs()).powi(3);
            let g_val = g.eval(r0, n0);
            let h_val = h.eval(r0, n0);
            let both_vanish = g_val.is_zero(1e-8 * scale) && h_val.is_zero(1e-8 * scale);
            let comps_vanish = res
                .components
                .iter()
                .all(|c| c.eval(r0, n0).abs() <= 1e-7 * (1.0 + c.max_coeff_abs()) * scale);
            assert!(
                both_vanish || comps_vanish,
                "planted root fails the norm equation dichotomy"
            );
        }
    }

    #[test]
    fn residual_is_nontrivial_when_g_is_nonzero() {
        let mut rng = StdRng::seed_from_u64(43);
        for _ in 0..300 {
            let deg = rng.gen_range(1..=6);
            let mut coeffs: Vec<Quat64> = (0..deg).map(|_| rand_quat(&mut rng, 5.0)).collect();
            coeffs.push(Quaternion::one());
            let f = StdPoly::from_coeffs(coeffs);
            let (g, h) = decompose(&f);
            let (g_n, h_n) = restrict_pure_imaginary(&g, &h);
            if g_n.is_zero() {
                continue;
            }
            let res = norm_equation(&g_n, &h_n).unwrap();
            assert!(
                res.components.iter().any(|c| !c.is_zero()),
                "all components vanished for a nonzero g(N)"
            );
        }
    }

    #[test]
    fn re_filter_is_trivial_for_reference_cubic() {
        let (g, h) = decompose(&reference_cubic());
        let (g_n, h_n) = restrict_pure_imaginary(&g, &h);
        let filter = re_filter(&g_n, &h_n);
        assert!(filter.is_zero(), "filter {:?}", filter);
        // numeric spot check of the defining expression at a few points
        for n0 in [0.0, 1.0, 2.0] {
            let val = -(g_n.eval(Quaternion::from_real(n0)).conjugate()
                * h_n.eval(Quaternion::from_real(n0)));
            assert!(val.re.abs() < 1e-12);
        }
    }

    #[test]
    fn re_filter_picks_out_real_part() {
        // g(N) = 1, h(N) = N - 3: filter = -(N - 3)
        let g_n = StdPoly64::one();
        let h_n = StdPoly::from_real_coeffs(&[-3.0, 1.0]);
        let filter = re_filter(&g_n, &h_n);
        assert!(filter.approx_eq(&RealPoly::from_coeffs(vec![3.0, -1.0]), 1e-12));

        // g(N) = i, h(N) = 5i: filter = -5 (no roots at all)
        let filter = re_filter(&StdPoly::constant(qi()), &StdPoly::constant(qi().scale(5.0)));
        assert!(filter.approx_eq(&RealPoly::constant(-5.0), 1e-12));
        assert!(filter.real_roots(1e-9).unwrap().is_empty());
    }
}
