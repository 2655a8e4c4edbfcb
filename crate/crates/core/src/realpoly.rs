//! Real univariate polynomials and their real roots.
//!
//! Closed forms (quadratic formula, depressed Cardano with the trigonometric
//! casus irreducibilis, Ferrari with a resolvent cubic) cover degree <= 4;
//! higher degrees fall back to Durand-Kerner simultaneous iteration over the
//! complex plane with real-axis filtering. Every root gets one guarded
//! Newton polish step, and roots closer than `ROOT_MERGE * (1 + |x|)` are
//! merged with multiplicities summed.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;

use crate::error::Error;
use crate::real::Real;

/// Dense real polynomial; `coeffs[m]` is the coefficient of `x^m`.
#[derive(Clone, Debug, PartialEq)]
pub struct RealPoly<T> {
    coeffs: Vec<T>,
}

impl<T: Real> RealPoly<T> {
    pub fn from_coeffs(coeffs: Vec<T>) -> Self {
        let mut p = RealPoly { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        RealPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::from_coeffs(vec![c])
    }

    fn trim(&mut self) {
        let max = self.max_coeff_abs();
        let cut = T::default_eps() * max;
        while let Some(&last) = self.coeffs.last() {
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

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, m: usize) -> T {
        self.coeffs.get(m).copied().unwrap_or_else(T::zero)
    }

    pub fn leading(&self) -> Option<T> {
        self.coeffs.last().copied()
    }

    pub fn max_coeff_abs(&self) -> T {
        self.coeffs.iter().fold(T::zero(), |m, c| m.max(c.abs()))
    }

    pub fn eval(&self, x: T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, &c| acc * x + c)
    }

    pub fn eval_complex(&self, z: Complex<T>) -> Complex<T> {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex::new(T::zero(), T::zero()), |acc, &c| {
                acc * z + Complex::new(c, T::zero())
            })
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(m, &c)| c * T::from_usize(m).unwrap())
                .collect(),
        )
    }

    /// Residual normalizer `Σ |coeff| * max(1, |x|)^deg`.
    pub fn scale_at(&self, x: T) -> T {
        let deg = self.coeffs.len().saturating_sub(1);
        let base = T::one().max(x.abs()).powi(deg as i32);
        self.coeffs
            .iter()
            .fold(T::zero(), |acc, &c| acc + c.abs() * base)
    }

    pub fn make_monic(&self) -> Result<Self, Error> {
        let lead = self.leading().ok_or(Error::ZeroPolynomial)?;
        Ok(Self::from_coeffs(
            self.coeffs.iter().map(|&c| c / lead).collect(),
        ))
    }

    pub fn approx_eq(&self, other: &Self, tol: T) -> bool {
        let n = self.coeffs.len().max(other.coeffs.len());
        let scale = T::one() + self.max_coeff_abs().max(other.max_coeff_abs());
        (0..n).all(|m| (self.coeff(m) - other.coeff(m)).abs() <= tol * scale)
    }

    /// Long division: `self = q * div + r` with `deg r < deg div`.
    pub fn divrem(&self, div: &Self) -> Result<(Self, Self), Error> {
        let dd = div.degree().ok_or(Error::ZeroPolynomial)?;
        let lead = div.coeff(dd);
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![T::zero(); rem.len() - dd];
        for m in (dd..rem.len()).rev() {
            let factor = rem[m] / lead;
            quot[m - dd] = factor;
            for l in 0..=dd {
                rem[m - dd + l] = rem[m - dd + l] - factor * div.coeff(l);
            }
            rem[m] = T::zero();
        }
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Approximate monic gcd by the Euclidean algorithm, trimming remainder
    /// coefficients below `eps`-relative to the dividend at each step.
    pub fn gcd(&self, other: &Self, eps: T) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        loop {
            if b.is_zero() {
                return a.make_monic().unwrap_or_else(|_| Self::zero());
            }
            if a.is_zero() {
                return b.make_monic().unwrap_or_else(|_| Self::zero());
            }
            if a.degree() < b.degree() {
                std::mem::swap(&mut a, &mut b);
            }
            let scale = a.max_coeff_abs().max(b.max_coeff_abs());
            let (_, mut r) = a.divrem(&b).expect("nonzero divisor");
            // drop noise left by the division
            let cut = eps * scale;
            for c in &mut r.coeffs {
                if c.abs() <= cut {
                    *c = T::zero();
                }
            }
            r.trim();
            a = b;
            b = r;
        }
    }

    /// All real roots with multiplicities, sorted ascending.
    pub fn real_roots(&self, eps: T) -> Result<Vec<(T, usize)>, Error> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut work = self.clone();
        let mut out: Vec<(T, usize)> = Vec::new();

        // factor out roots at the origin
        let cut = T::default_eps() * work.max_coeff_abs();
        let zeros = work.coeffs.iter().take_while(|c| c.abs() <= cut).count();
        if zeros > 0 && zeros < work.coeffs.len() {
            out.push((T::zero(), zeros));
            work = Self::from_coeffs(work.coeffs[zeros..].to_vec());
        }

        let deg = work.degree().unwrap_or(0);
        let mut raw: Vec<(T, usize)> = match deg {
            0 => Vec::new(),
            1..=4 => closed_form_roots(&work),
            _ => iterative_roots(&work, eps),
        };
        for (x, _) in raw.iter_mut() {
            *x = newton_polish(&work, *x);
        }
        out.extend(raw);
        Ok(cluster_roots(out))
    }

    /// Roots of the lowest-degree nonzero member filtered through the rest
    /// with the residual test `|p(x)| <= eps * scale(p, x)`.
    pub fn common_real_roots(system: &[Self], eps: T) -> Result<Vec<T>, Error> {
        let nonzero: Vec<&Self> = system.iter().filter(|p| !p.is_zero()).collect();
        if nonzero.is_empty() {
            return Err(Error::AllZero);
        }
        let seed = nonzero
            .iter()
            .min_by_key(|p| p.degree().unwrap_or(0))
            .unwrap();
        if seed.degree() == Some(0) {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        for (x, _) in seed.real_roots(eps)? {
            let shared = nonzero
                .iter()
                .all(|p| p.eval(x).abs() <= eps * p.scale_at(x));
            if shared {
                out.push(x);
            }
        }
        out.sort_by(|a, b| a.partial_cmp(b).unwrap());
        out.dedup_by(|a, b| (*a - *b).abs() <= T::of(crate::ROOT_MERGE) * (T::one() + b.abs()));
        Ok(out)
    }
}

/// Closed-form real roots for degree 1..=4, with algebraic multiplicities.
pub fn closed_form_roots<T: Real>(p: &RealPoly<T>) -> Vec<(T, usize)> {
    match p.degree() {
        Some(1) => vec![(-p.coeff(0) / p.coeff(1), 1)],
        Some(2) => quadratic_roots(p.coeff(0), p.coeff(1), p.coeff(2)),
        Some(3) => cubic_roots(p.coeff(0), p.coeff(1), p.coeff(2), p.coeff(3)),
        Some(4) => quartic_roots(
            p.coeff(0),
            p.coeff(1),
            p.coeff(2),
            p.coeff(3),
            p.coeff(4),
        ),
        _ => Vec::new(),
    }
}

/// Durand-Kerner simultaneous iteration with real-axis filtering; usable at
/// any degree >= 1. Returned multiplicities come only from clustering.
pub fn iterative_roots<T: Real>(p: &RealPoly<T>, eps: T) -> Vec<(T, usize)> {
    let Some(n) = p.degree() else {
        return Vec::new();
    };
    if n == 0 {
        return Vec::new();
    }
    let monic = p.make_monic().expect("nonzero");
    let coeffs: Vec<Complex<T>> = monic
        .coeffs()
        .iter()
        .map(|&c| Complex::new(c, T::zero()))
        .collect();
    let radius = T::one() + monic.max_coeff_abs();
    let mut z: Vec<Complex<T>> = (0..n)
        .map(|k| {
            let angle =
                T::of(2.0) * T::PI() * T::from_usize(k).unwrap() / T::from_usize(n).unwrap()
                    + T::of(0.7);
            Complex::from_polar(radius, angle)
        })
        .collect();
    let eval = |w: Complex<T>| -> Complex<T> {
        coeffs
            .iter()
            .rev()
            .fold(Complex::new(T::zero(), T::zero()), |acc, &c| acc * w + c)
    };
    for _ in 0..400 {
        let mut max_step = T::zero();
        for k in 0..n {
            let mut denom = Complex::new(T::one(), T::zero());
            for l in 0..n {
                if l != k {
                    denom = denom * (z[k] - z[l]);
                }
            }
            if denom.norm() == T::zero() {
                // coincident iterates; nudge apart
                z[k] = z[k] + Complex::new(T::of(1e-6), T::of(1e-6));
                continue;
            }
            let step = eval(z[k]) / denom;
            z[k] = z[k] - step;
            max_step = max_step.max(step.norm() / (T::one() + z[k].norm()));
        }
        if max_step <= T::of(1e-14) {
            break;
        }
    }
    let mut out = Vec::new();
    for w in z {
        if w.im.abs() <= T::of(1e-7) * (T::one() + w.re.abs()) {
            let x = newton_polish(p, w.re);
            if p.eval(x).abs() <= eps.max(T::of(1e-9)) * p.scale_at(x) {
                out.push((x, 1));
            }
        }
    }
    out
}

fn newton_polish<T: Real>(p: &RealPoly<T>, x: T) -> T {
    let dp = p.derivative();
    let fx = p.eval(x);
    let dfx = dp.eval(x);
    if dfx.abs() <= T::of(1e-12) * (T::one() + dp.scale_at(x)) {
        return x;
    }
    let next = x - fx / dfx;
    if p.eval(next).abs() < fx.abs() {
        next
    } else {
        x
    }
}

/// Merge roots closer than `ROOT_MERGE * (1 + |x|)`, summing multiplicities.
fn cluster_roots<T: Real>(mut roots: Vec<(T, usize)>) -> Vec<(T, usize)> {
    roots.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    let merge = T::of(crate::ROOT_MERGE);
    let mut out: Vec<(T, usize)> = Vec::new();
    for (x, m) in roots {
        match out.last_mut() {
            Some((y, k)) if (x - *y).abs() <= merge * (T::one() + x.abs()) => {
                // multiplicity-weighted mean keeps the representative stable
                let total = T::from_usize(*k + m).unwrap();
                *y = (*y * T::from_usize(*k).unwrap() + x * T::from_usize(m).unwrap()) / total;
                *k += m;
            }
            _ => out.push((x, m)),
        }
    }
    out
}

fn quadratic_roots<T: Real>(c0: T, c1: T, c2: T) -> Vec<(T, usize)> {
    let disc = c1 * c1 - T::of(4.0) * c2 * c0;
    let scale = c1 * c1 + (T::of(4.0) * c2 * c0).abs();
    let degenerate = disc.abs() <= T::of(64.0) * T::epsilon() * scale;
    if degenerate {
        return vec![(-c1 / (T::two() * c2), 2)];
    }
    if disc < T::zero() {
        return Vec::new();
    }
    let sd = disc.sqrt();
    let sign = if c1 >= T::zero() { T::one() } else { -T::one() };
    let q = -(c1 + sign * sd) * T::half();
    if q == T::zero() {
        // c1 == 0: roots ±sqrt(-c0/c2)
        let r = (-c0 / c2).sqrt();
        return vec![(-r, 1), (r, 1)];
    }
    vec![(q / c2, 1), (c0 / q, 1)]
}

fn cubic_roots<T: Real>(c0: T, c1: T, c2: T, c3: T) -> Vec<(T, usize)> {
    let b = c2 / c3;
    let c = c1 / c3;
    let d = c0 / c3;
    let third = T::one() / T::of(3.0);
    let shift = -b * third;
    // depressed form t^3 + p t + q, x = t + shift
    let p = c - b * b * third;
    let q = b * b * b * T::two() / T::of(27.0) - b * c * third + d;
    let half_q = q * T::half();
    let third_p = p * third;
    let delta = half_q * half_q + third_p * third_p * third_p;
    let delta_scale = half_q * half_q + (third_p * third_p * third_p).abs();

    // rounding floor of the depression itself
    let p_noise = T::of(8.0) * T::epsilon() * (c.abs() + b * b);
    let q_noise = T::of(8.0) * T::epsilon() * (d.abs() + (b * c).abs() + b.abs().powi(3));
    if p.abs() <= p_noise && q.abs() <= q_noise {
        return vec![(shift, 3)];
    }
    if delta.abs() <= T::of(1e-11) * delta_scale {
        // repeated root: double at -3q/(2p), simple at 3q/p
        if p.abs() <= p_noise {
            return vec![(shift, 3)];
        }
        let double = -T::of(3.0) * q / (T::two() * p);
        let simple = T::of(3.0) * q / p;
        let mut roots = vec![(double + shift, 2), (simple + shift, 1)];
        roots.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        return roots;
    }
    if delta > T::zero() {
        // one real root, Cardano without cancellation
        let sq = delta.sqrt();
        let sign = if half_q >= T::zero() { T::one() } else { -T::one() };
        let big = -(half_q + sign * sq);
        let u = big.cbrt();
        let v = if u == T::zero() { T::zero() } else { -third_p / u };
        vec![(u + v + shift, 1)]
    } else {
        // three distinct real roots: trigonometric method
        let m = T::two() * (-third_p).sqrt();
        let cos3 = (T::of(3.0) * q / (p * m)).max(-T::one()).min(T::one());
        let theta = cos3.acos() * third;
        let two_pi_third = T::two() * T::PI() * third;
        let mut roots: Vec<(T, usize)> = (0..3)
            .map(|k| {
                let angle = theta - two_pi_third * T::from_i32(k).unwrap();
                (m * angle.cos() + shift, 1)
            })
            .collect();
        roots.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        roots
    }
}

fn quartic_roots<T: Real>(c0: T, c1: T, c2: T, c3: T, c4: T) -> Vec<(T, usize)> {
    let b = c3 / c4;
    let c = c2 / c4;
    let d = c1 / c4;
    let e = c0 / c4;
    let quarter_b = b * T::of(0.25);
    // depressed form y^4 + p y^2 + q y + r, x = y - b/4
    let b2 = b * b;
    let p = c - T::of(3.0 / 8.0) * b2;
    let q = d - b * c * T::half() + b2 * b * T::of(1.0 / 8.0);
    let r = e - b * d * T::of(0.25) + b2 * c * T::of(1.0 / 16.0) - T::of(3.0 / 256.0) * b2 * b2;

    // resolvent cubic for the Ferrari split parameter m
    let resolvent = RealPoly::from_coeffs(vec![
        -q * q,
        T::two() * p * p - T::of(8.0) * r,
        T::of(8.0) * p,
        T::of(8.0),
    ]);
    let m_best = closed_form_roots(&resolvent)
        .into_iter()
        .map(|(m, _)| m)
        .fold(T::neg_infinity(), T::max);
    let m_cut = T::of(1e-12) * (T::one() + p.abs() + r.abs().sqrt());

    let mut ys: Vec<(T, usize)> = Vec::new();
    if m_best > m_cut {
        // split into two quadratics
        let s = (T::two() * m_best).sqrt();
        let base = p * T::half() + m_best;
        ys.extend(quadratic_roots(base + q / (T::two() * s), -s, T::one()));
        ys.extend(quadratic_roots(base - q / (T::two() * s), s, T::one()));
    } else {
        // q ~ 0: biquadratic in u = y^2
        for (u, mult) in quadratic_roots(r, p, T::one()) {
            let u_cut = T::of(1e-12) * (T::one() + p.abs() + r.abs().sqrt());
            if u.abs() <= u_cut {
                ys.push((T::zero(), 2 * mult));
            } else if u > T::zero() {
                let root = u.sqrt();
                ys.push((root, mult));
                ys.push((-root, mult));
            }
        }
    }
    ys.into_iter().map(|(y, m)| (y - quarter_b, m)).collect()
}

impl<T: Real> Add for &RealPoly<T> {
    type Output = RealPoly<T>;
    fn add(self, rhs: Self) -> RealPoly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RealPoly::from_coeffs((0..n).map(|m| self.coeff(m) + rhs.coeff(m)).collect())
    }
}

impl<T: Real> Sub for &RealPoly<T> {
    type Output = RealPoly<T>;
    fn sub(self, rhs: Self) -> RealPoly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RealPoly::from_coeffs((0..n).map(|m| self.coeff(m) - rhs.coeff(m)).collect())
    }
}

impl<T: Real> Neg for &RealPoly<T> {
    type Output = RealPoly<T>;
    fn neg(self) -> RealPoly<T> {
        RealPoly::from_coeffs(self.coeffs.iter().map(|&c| -c).collect())
    }
}

impl<T: Real> Mul for &RealPoly<T> {
    type Output = RealPoly<T>;
    fn mul(self, rhs: Self) -> RealPoly<T> {
        if self.is_zero() || rhs.is_zero() {
            return RealPoly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (m, &cm) in self.coeffs.iter().enumerate() {
            for (l, &cl) in rhs.coeffs.iter().enumerate() {
                out[m + l] = out[m + l] + cm * cl;
            }
        }
        RealPoly::from_coeffs(out)
    }
}
