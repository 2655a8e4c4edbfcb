//! Independent numeric root search: seeded multistart minimization of the
//! squared evaluation residual over the four real coordinates.
//!
//! The oracle is advisory for completeness (a sampler cannot prove absence
//! of roots) but authoritative for presence: every point it accepts passes
//! the residual test directly. Spheres are recognized as many distinct
//! converged points sharing a real part and imaginary norm.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::eval::PolyEval;
use crate::quaternion::Quaternion;
use crate::real::Real;
use crate::rootset::RootSet;

#[derive(Clone, Copy, Debug)]
pub struct OracleConfig<T> {
    /// Number of start points.
    pub starts: usize,
    /// Half-width of the sampling cube around the origin.
    pub box_half_width: T,
    /// RNG seed; identical configurations give identical output.
    pub seed: u64,
    /// Accept a point when `|f(z)| <= tol * scale(f, z)`.
    pub tol: T,
    /// Iteration cap per start.
    pub max_iters: usize,
}

impl<T: Real> Default for OracleConfig<T> {
    fn default() -> Self {
        OracleConfig {
            starts: 512,
            box_half_width: T::of(8.0),
            seed: 0,
            tol: T::of(1e-8),
            max_iters: 100,
        }
    }
}

/// How many distinct converged points sharing `(re, imag_norm)` are read as
/// a sphere rather than a coincidence of isolated roots.
const SPHERE_HITS: usize = 12;
/// Matching width for the shared `(re, imag_norm)` signature.
const SPHERE_SIG_TOL: f64 = 1e-4;

/// Solve the 4x4 linear system by Gaussian elimination with partial pivoting.
fn solve4<T: Real>(mut a: [[T; 4]; 4], mut b: [T; 4]) -> Option<[T; 4]> {
    for col in 0..4 {
        let mut pivot = col;
        for row in col + 1..4 {
            if a[row][col].abs() > a[pivot][col].abs() {
                pivot = row;
            }
        }
        if a[pivot][col].abs() <= T::epsilon() * T::of(16.0) {
            return None;
        }
        a.swap(col, pivot);
        b.swap(col, pivot);
        for row in col + 1..4 {
            let factor = a[row][col] / a[col][col];
            for k in col..4 {
                a[row][k] = a[row][k] - factor * a[col][k];
            }
            b[row] = b[row] - factor * b[col];
        }
    }
    let mut x = [T::zero(); 4];
    for col in (0..4).rev() {
        let mut acc = b[col];
        for k in col + 1..4 {
            acc = acc - a[col][k] * x[k];
        }
        x[col] = acc / a[col][col];
    }
    Some(x)
}

fn basis<T: Real>() -> [Quaternion<T>; 4] {
    [
        Quaternion::one(),
        Quaternion::unit_i(),
        Quaternion::unit_j(),
        Quaternion::unit_k(),
    ]
}

fn as_array<T: Real>(q: Quaternion<T>) -> [T; 4] {
    [q.re, q.i, q.j, q.k]
}

/// Core damped Gauss-Newton loop on `|f(z)|^2`: iterates until the relative
/// residual drops below `target` or progress stalls. Returns the final point
/// and its relative residual (best effort; never rejects).
fn lm_minimize<T: Real, P: PolyEval<T>>(
    f: &P,
    start: Quaternion<T>,
    target: T,
    max_iters: usize,
) -> (Quaternion<T>, T) {
    let mut z = start;
    let mut mu = T::of(1e-3);
    for _ in 0..max_iters {
        let fz = f.eval(z);
        let res = fz.abs();
        if !res.is_finite() {
            return (start, T::infinity());
        }
        if res <= target * f.scale_at(z.abs()) {
            break;
        }
        // Jacobian columns are the directional derivatives along the basis
        let mut jac = [[T::zero(); 4]; 4];
        for (col, e) in basis::<T>().iter().enumerate() {
            let d = as_array(f.dir_deriv(z, *e));
            for row in 0..4 {
                jac[row][col] = d[row];
            }
        }
        let fvec = as_array(fz);
        // normal equations J^T J delta = -J^T F with adaptive damping
        let mut jtj = [[T::zero(); 4]; 4];
        let mut jtf = [T::zero(); 4];
        for r in 0..4 {
            for c in 0..4 {
                let mut acc = T::zero();
                for k in 0..4 {
                    acc = acc + jac[k][r] * jac[k][c];
                }
                jtj[r][c] = acc;
            }
            let mut acc = T::zero();
            for k in 0..4 {
                acc = acc + jac[k][r] * fvec[k];
            }
            jtf[r] = -acc;
        }
        let mut improved = false;
        for _ in 0..12 {
            let mut damped = jtj;
            for d in 0..4 {
                damped[d][d] = jtj[d][d] * (T::one() + mu) + mu * T::of(1e-12);
            }
            if let Some(step) = solve4(damped, jtf) {
                let candidate = z + Quaternion::new(step[0], step[1], step[2], step[3]);
                if f.eval(candidate).abs() < res {
                    z = candidate;
                    mu = (mu / T::of(3.0)).max(T::of(1e-14));
                    improved = true;
                    break;
                }
            }
            mu = mu * T::of(4.0);
            if mu > T::of(1e14) {
                break;
            }
        }
        if !improved {
            break;
        }
    }
    let res = f.eval(z).abs();
    let scale = f.scale_at(z.abs());
    let rel = if scale > T::zero() { res / scale } else { res };
    (z, rel)
}

/// Target used to squeeze accepted points as far down as the arithmetic
/// allows: singular (higher-multiplicity) roots attract whole valleys of
/// low-residual points, and only a deep polish collapses them into one
/// cluster.
fn deep_target<T: Real>() -> T {
    T::of(1e-14)
}

/// Damped Gauss-Newton (Levenberg-Marquardt) refinement of `|f(z)|^2` from
/// `start`. Returns a point with `|f(z)| <= tol * scale(f, z)` or `None`.
pub fn refine_root<T: Real, P: PolyEval<T>>(
    f: &P,
    start: Quaternion<T>,
    tol: T,
    max_iters: usize,
) -> Option<Quaternion<T>> {
    let (z, rel) = lm_minimize(f, start, tol.min(deep_target::<T>()), max_iters);
    if rel <= tol {
        Some(z)
    } else {
        None
    }
}

/// Deterministic multistart root search.
///
/// Start points are sampled uniformly in the configured cube, each is
/// refined, converged points are clustered, and clusters sharing a real
/// part and imaginary norm in sufficient number are fitted as spheres.
pub fn numeric_roots<T: Real, P: PolyEval<T>>(
    f: &P,
    cfg: &OracleConfig<T>,
) -> Result<RootSet<T>, Error> {
    if f.degree() < 1 {
        return Err(Error::WrongDegree { expected: 1 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let width = cfg.box_half_width;
    let mut accepted: Vec<Quaternion<T>> = Vec::new();
    for _ in 0..cfg.starts {
        let sample = |rng: &mut ChaCha8Rng| -> T {
            let unit: f64 = rng.gen_range(-1.0..1.0);
            T::of(unit) * width
        };
        let start = Quaternion::new(
            sample(&mut rng),
            sample(&mut rng),
            sample(&mut rng),
            sample(&mut rng),
        );
        let (z, rel) = lm_minimize(f, start, deep_target::<T>(), cfg.max_iters);
        if rel <= cfg.tol {
            accepted.push(z);
        }
    }
    if accepted.is_empty() {
        return Err(Error::NoConvergence);
    }

    // cluster converged points
    let merge = T::of(crate::ROOT_MERGE);
    let mut clusters: Vec<(Quaternion<T>, usize)> = Vec::new();
    for z in accepted {
        let mut placed = false;
        for (mean, count) in clusters.iter_mut() {
            if mean.max_component_dist(z) <= merge * (T::one() + z.abs()) {
                let n = T::from_usize(*count).unwrap();
                *mean = (*mean * n + z) / (n + T::one());
                *count += 1;
                placed = true;
                break;
            }
        }
        if !placed {
            clusters.push((z, 1));
        }
    }

    // group clusters by (re, imag_norm) signature; large groups are spheres
    let sig_tol = T::of(SPHERE_SIG_TOL);
    let mut used = vec![false; clusters.len()];
    let mut out = RootSet::new();
    for a in 0..clusters.len() {
        if used[a] {
            continue;
        }
        let (za, _) = clusters[a];
        let (re_a, xa) = za.split();
        let nu_a = xa.norm();
        let mut group = vec![a];
        for (b, used_b) in used.iter().enumerate().skip(a + 1) {
            if *used_b {
                continue;
            }
            let (zb, _) = clusters[b];
            let (re_b, xb) = zb.split();
            if (re_a - re_b).abs() <= sig_tol * (T::one() + re_a.abs())
                && (nu_a - xb.norm()).abs() <= sig_tol * (T::one() + nu_a)
            {
                group.push(b);
            }
        }
        // a genuine sphere spreads its hits over a 2-sphere of radius
        // sqrt(nu); a tight ball of low-residual points around a singular
        // isolated root does not
        let mut spread = T::zero();
        for (ai, &ga) in group.iter().enumerate() {
            for &gb in group.iter().skip(ai + 1) {
                spread = spread.max(clusters[ga].0.max_component_dist(clusters[gb].0));
            }
        }
        let wide_enough = spread > T::of(0.25) * nu_a.max(T::of(0.01)).sqrt();
        if group.len() >= SPHERE_HITS && wide_enough {
            let len = T::from_usize(group.len()).unwrap();
            let mut re_mean = T::zero();
            let mut nu_mean = T::zero();
            for &idx in &group {
                let (re, x) = clusters[idx].0.split();
                re_mean += re / len;
                nu_mean += x.norm() / len;
                used[idx] = true;
            }
            out.push_sphere(re_mean, nu_mean);
        }
    }
    for (idx, (z, _)) in clusters.iter().enumerate() {
        if !used[idx] {
            out.push_isolated(*z);
        }
    }
    out.sort();
    Ok(out)
}
