#![allow(dead_code)]

use complex_dirac::Complex64;

/// Generalized binomial coefficient C(x, j) as a running product.
pub fn binom(x: f64, j: usize) -> f64 {
    (1..=j).fold(1.0, |acc, t| acc * (x - j as f64 + t as f64) / t as f64)
}

/// L_k^α(z) = Σ_{i=0}^{k} (−1)^i C(k + α, k − i) z^i / i!.
pub fn laguerre_series(k: usize, alpha: f64, z: Complex64) -> Complex64 {
    let mut sum = Complex64::new(0.0, 0.0);
    let mut term = Complex64::new(1.0, 0.0);
    for i in 0..=k {
        if i > 0 {
            term = term * z / i as f64;
        }
        let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
        sum += term * (sign * binom(k as f64 + alpha, k - i));
    }
    sum
}

/// Root of E² − m² = (2qE)²/(4N²) found by Newton iteration from E = m.
pub fn coulomb_newton(n_eff: f64, q: f64, m: f64) -> f64 {
    let f = |e: f64| e * e - m * m - (q * e / n_eff).powi(2);
    let df = |e: f64| 2.0 * e - 2.0 * e * (q / n_eff).powi(2);
    let mut e = m;
    for _ in 0..100 {
        let step = f(e) / df(e);
        e -= step;
        if step.abs() <= 1e-17 * e.abs() {
            break;
        }
    }
    e
}

pub fn rel(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        (a - b).abs() / a.abs().max(b.abs())
    }
}
