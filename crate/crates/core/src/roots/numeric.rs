//! Aberth–Ehrlich simultaneous iteration for all complex roots.

use num_complex::Complex;
use num_traits::{Float, FloatConst};

/// Iteration cap for [`aberth`].
pub const MAX_ITERATIONS: usize = 2000;

fn eval_with_derivative<F: Float>(c: &[F], z: Complex<F>) -> (Complex<F>, Complex<F>) {
    let mut p = Complex::new(F::zero(), F::zero());
    let mut dp = p;
    for &a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + Complex::new(a, F::zero());
    }
    (p, dp)
}

/// Roots of `c[0] + c[1] x + ... + c[n] x^n` with `c[n] != 0`.
///
/// Degrees one and two use closed forms. `None` means the iteration did not
/// settle within [`MAX_ITERATIONS`] sweeps.
pub fn aberth<F: Float + FloatConst>(c: &[F]) -> Option<Vec<Complex<F>>> {
    let n = c.len().checked_sub(1)?;
    let lead = c[n];
    if lead == F::zero() {
        return None;
    }
    let c: Vec<F> = c.iter().map(|&a| a / lead).collect();
    match n {
        0 => return Some(Vec::new()),
        1 => return Some(vec![Complex::new(-c[0], F::zero())]),
        2 => return Some(quadratic(c[1], c[0]).to_vec()),
        _ => {}
    }

    // Fujiwara bound on the root moduli fixes the starting circle.
    let two = F::one() + F::one();
    let radius = (1..=n)
        .map(|k| {
            let a = c[n - k].abs();
            let a = if k == n { a / two } else { a };
            a.powf(F::one() / F::from(k).unwrap())
        })
        .fold(F::zero(), F::max)
        * two;
    let radius = if radius > F::zero() { radius } else { F::one() };
    let offset = F::from(0.4).unwrap();
    let mut z: Vec<Complex<F>> = (0..n)
        .map(|k| {
            let theta = two * F::PI() * F::from(k).unwrap() / F::from(n).unwrap() + offset;
            Complex::from_polar(radius, theta)
        })
        .collect();

    // A root is frozen once |p(z)| is within the rounding error of evaluating
    // p at z, or its correction is below machine precision.
    let eps = F::epsilon();
    let slack = F::from(8.0).unwrap() * eps;
    let mut done = vec![false; n];
    for _ in 0..MAX_ITERATIONS {
        for i in 0..n {
            if done[i] {
                continue;
            }
            let (p, dp) = eval_with_derivative(&c, z[i]);
            let r = z[i].norm();
            let bound = c.iter().rev().fold(F::zero(), |acc, a| acc * r + a.abs());
            if p.norm() <= slack * bound {
                done[i] = true;
                continue;
            }
            let ratio = p / dp;
            let s = (0..n)
                .filter(|&j| j != i)
                .fold(Complex::new(F::zero(), F::zero()), |acc, j| acc + (z[i] - z[j]).inv());
            let w = ratio / (Complex::new(F::one(), F::zero()) - ratio * s);
            if !w.re.is_finite() || !w.im.is_finite() {
                continue;
            }
            z[i] = z[i] - w;
            if w.norm() <= eps * z[i].norm() {
                done[i] = true;
            }
        }
        if done.iter().all(|&d| d) {
            return Some(z);
        }
    }
    None
}

/// Roots of the monic `x^2 + b x + c`, avoiding cancellation.
pub fn quadratic<F: Float>(b: F, c: F) -> [Complex<F>; 2] {
    let two = F::one() + F::one();
    let four = two * two;
    let disc = b * b - four * c;
    if disc >= F::zero() {
        let s = disc.sqrt();
        let q = -(b + if b >= F::zero() { s } else { -s }) / two;
        if q == F::zero() {
            return [Complex::new(F::zero(), F::zero()); 2];
        }
        let (r1, r2) = (q, c / q);
        let (lo, hi) = if r1 <= r2 { (r1, r2) } else { (r2, r1) };
        [Complex::new(lo, F::zero()), Complex::new(hi, F::zero())]
    } else {
        let re = -b / two;
        let im = (-disc).sqrt() / two;
        [Complex::new(re, -im), Complex::new(re, im)]
    }
}

/// A few Newton steps on each root; stops early when a step does not reduce
/// the residual.
pub fn polish<F: Float>(c: &[F], roots: &mut [Complex<F>]) {
    for z in roots.iter_mut() {
        for _ in 0..3 {
            let (p, dp) = eval_with_derivative(c, *z);
            if dp.norm() == F::zero() {
                break;
            }
            let next = *z - p / dp;
            if eval_with_derivative(c, next).0.norm() < p.norm() {
                *z = next;
            } else {
                break;
            }
        }
    }
}
