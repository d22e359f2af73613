//! Gamma-family special functions and the terminating hypergeometric sum.

use std::f64::consts::PI;

// Lanczos coefficients, g = 7, n = 9 (the GSL set).
const LANCZOS_G: f64 = 7.0;
const LANCZOS_P: [f64; 9] = [
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
];

/// Natural log of the gamma function for x > 0.
pub fn ln_gamma(x: f64) -> f64 {
    assert!(x > 0.0, "ln_gamma requires x > 0, got {x}");
    if x < 0.5 {
        // reflection: Γ(x)Γ(1-x) = π / sin(πx)
        return (PI / (PI * x).sin()).ln() - ln_gamma(1.0 - x);
    }
    let x = x - 1.0;
    let mut acc = LANCZOS_P[0];
    for (i, p) in LANCZOS_P.iter().enumerate().skip(1) {
        acc += p / (x + i as f64);
    }
    let t = x + LANCZOS_G + 0.5;
    0.5 * (2.0 * PI).ln() + (x + 0.5) * t.ln() - t + acc.ln()
}

/// Gamma function for x > 0.
pub fn gamma(x: f64) -> f64 {
    ln_gamma(x).exp()
}

/// Terminating Gauss hypergeometric sum ₂F₁(1-p, 1-p; 1; x) for integer
/// p ≥ 1. Both upper parameters are the nonpositive integer 1-p, so the
/// series terminates after p terms with squared binomial coefficients:
///
/// ```text
/// ₂F₁(1-p, 1-p; 1; x) = Σ_{k=0}^{p-1} C(p-1, k)² x^k
/// ```
pub fn hyp2f1_terminating(p: u32, x: f64) -> f64 {
    assert!(p >= 1, "terminating 2F1 requires integer p >= 1");
    let m = (p - 1) as u64;
    let mut coeff = 1.0f64; // C(m, 0)
    let mut power = 1.0f64;
    let mut sum = 0.0f64;
    for k in 0..=m {
        sum += coeff * coeff * power;
        power *= x;
        if k < m {
            coeff *= (m - k) as f64 / (k + 1) as f64;
        }
    }
    sum
}
