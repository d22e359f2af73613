//! The Poisson kernel family on the unit disc, Poisson integrals of boundary
//! functions and measures, the indicator closed form, kernel norms, and
//! truncated Fourier harmonic extension.

use std::f64::consts::{PI, TAU};
use std::fmt;
use std::sync::Arc;

use crate::boundary::{wrap_angle, BoundaryFunction, RadialMeasure};
use crate::quad::{self, QuadratureSpec};
use crate::special::{hyp2f1_terminating, ln_gamma};
use crate::{Error, Result};

/// Cancellation-free kernel denominator `1 − 2r cos θ + r² = (1−r)² + 4r sin²(θ/2)`.
#[inline]
pub fn kernel_denominator(r: f64, theta: f64) -> f64 {
    let s = (theta / 2.0).sin();
    (1.0 - r) * (1.0 - r) + 4.0 * r * s * s
}

#[inline]
pub(crate) fn kernel_raw(r: f64, theta: f64) -> f64 {
    (1.0 - r * r) / (TAU * kernel_denominator(r, theta))
}

fn check_radius(r: f64) -> Result<()> {
    if !(0.0..1.0).contains(&r) {
        return Err(Error::Domain(format!("radius must satisfy 0 ≤ r < 1, got {r}")));
    }
    Ok(())
}

/// Poisson kernel `Φ_r(θ) = (1−r²)/[2π(1−2r cos θ + r²)]`.
pub fn kernel(r: f64, theta: f64) -> Result<f64> {
    check_radius(r)?;
    Ok(kernel_raw(r, theta))
}

/// Partial sum of `Φ_r(θ) = [1 + 2Σ rⁿ cos nθ]/(2π)`; converges to the
/// closed form geometrically in `n_terms`.
pub fn kernel_series(r: f64, theta: f64, n_terms: u32) -> f64 {
    let mut acc = 1.0;
    let mut rn = 1.0;
    for n in 1..=n_terms {
        rn *= r;
        acc += 2.0 * rn * (n as f64 * theta).cos();
    }
    acc / TAU
}

/// `∂Φ_r/∂θ` in closed form.
pub fn kernel_derivative(r: f64, theta: f64) -> f64 {
    let d = kernel_denominator(r, theta);
    -(1.0 - r * r) * r * theta.sin() / (PI * d * d)
}

/// Series form `Φ'_r(θ) = (−1/π) Σ n rⁿ sin(nθ)`, for cross-checks.
pub fn kernel_derivative_series(r: f64, theta: f64, n_terms: u32) -> f64 {
    let mut acc = 0.0;
    let mut rn = 1.0;
    for n in 1..=n_terms {
        rn *= r;
        acc += n as f64 * rn * (n as f64 * theta).sin();
    }
    -acc / PI
}

/// Normalized peak kernel `Ψ_r(φ) = (1−r)²/(1−2r cos φ + r²)`, with
/// `Ψ_1(0) := 1`. Takes values in (0, 1] and equals 1 at φ = 0.
pub fn psi_kernel(r: f64, phi: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&r) {
        return Err(Error::Domain(format!("psi kernel needs 0 ≤ r ≤ 1, got {r}")));
    }
    if wrap_angle(phi).abs() < 1e-300 {
        return Ok(1.0);
    }
    Ok((1.0 - r) * (1.0 - r) / kernel_denominator(r, phi))
}

/// Continuous antiderivative of the kernel: `C(x) = ∫_0^x Φ_r`, increasing
/// by 1 per period. `C(x) = k + arctan(ρ tan(y/2))/π` with `ρ = (1+r)/(1−r)`,
/// `x = y + 2πk`, `y ∈ [−π, π)`.
pub(crate) fn kernel_cumulative(r: f64, x: f64) -> f64 {
    let k = ((x + PI) / TAU).floor();
    let y = x - TAU * k;
    let rho = (1.0 + r) / (1.0 - r);
    k + (rho * (y / 2.0).tan()).atan() / PI
}

/// Closed-form Poisson integral of the indicator `χ_[α,β]`, branch-corrected
/// so it is continuous in θ and lies in [0, 1].
pub fn poisson_indicator(alpha: f64, beta: f64, r: f64, theta: f64) -> Result<f64> {
    check_radius(r)?;
    if !(beta - alpha > 0.0 && beta - alpha <= TAU + 1e-12) {
        return Err(Error::Domain(format!(
            "indicator arc needs 0 < β − α ≤ 2π, got {}",
            beta - alpha
        )));
    }
    let v = kernel_cumulative(r, beta - theta) - kernel_cumulative(r, alpha - theta);
    Ok(v.clamp(0.0, 1.0))
}

/// `‖Φ_r‖_p`. Integer p uses the terminating hypergeometric closed form
///
/// ```text
/// ‖Φ_r‖_p = (2π)^{1/p−1} (1−r²)^{1/p−1} [₂F₁(1−p, 1−p; 1; r²)]^{1/p},
/// ```
///
/// p = ∞ is the peak value `(1+r)/(2π(1−r))`, and non-integer p falls back
/// to direct quadrature of the kernel power.
pub fn kernel_lp_norm(r: f64, p: f64, spec: &QuadratureSpec) -> Result<f64> {
    check_radius(r)?;
    if p.is_infinite() {
        return Ok((1.0 + r) / (TAU * (1.0 - r)));
    }
    if !(p >= 1.0) {
        return Err(Error::Domain(format!("kernel norm requires p ≥ 1, got {p}")));
    }
    if (p - p.round()).abs() < 1e-12 {
        let pi_ = p.round() as u32;
        let f = hyp2f1_terminating(pi_, r * r);
        let expo = 1.0 / p - 1.0;
        Ok(TAU.powf(expo) * (1.0 - r * r).powf(expo) * f.powf(1.0 / p))
    } else {
        kernel_lp_quadrature(r, p, spec)
    }
}

/// `(∫ Φ_r^p)^{1/p}` by direct quadrature; the independent route for the
/// closed form above.
pub fn kernel_lp_quadrature(r: f64, p: f64, spec: &QuadratureSpec) -> Result<f64> {
    check_radius(r)?;
    let splits = peak_splits(r, 0.0);
    let est = quad::adaptive_closure(
        |t| kernel_raw(r, t).powf(p),
        -PI,
        PI,
        &splits,
        spec.abs_tol,
        spec.rel_tol,
        spec.max_depth,
    )?;
    Ok(est.value.powf(1.0 / p))
}

/// `∫_{−π}^{π} |sin θ|^p dθ = 2√π Γ((1+p)/2)/Γ(1+p/2)` via log-gamma.
pub fn sine_lp_constant(p: f64) -> Result<f64> {
    if !(p >= 1.0) {
        return Err(Error::Domain(format!("sine constant requires p ≥ 1, got {p}")));
    }
    Ok(2.0 * PI.sqrt() * (ln_gamma((1.0 + p) / 2.0) - ln_gamma(1.0 + p / 2.0)).exp())
}

/// Panel hints clustered geometrically around the kernel peak at θ₀.
pub(crate) fn peak_splits(r: f64, theta0: f64) -> Vec<f64> {
    let w = (1.0 - r).max(1e-12);
    let mut out = vec![wrap_angle(theta0)];
    let mut d = w;
    while d < PI {
        out.push(wrap_angle(theta0 - d));
        out.push(wrap_angle(theta0 + d));
        d *= 4.0;
    }
    out
}

// ---------------------------------------------------------------------------
// Harmonic functions on the disc
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct FourierCoefficients {
    pub a0: f64,
    /// a[k] is the cos((k+1)θ) coefficient.
    pub a: Vec<f64>,
    /// b[k] is the sin((k+1)θ) coefficient.
    pub b: Vec<f64>,
}

/// A function on the disc: Poisson integral of boundary data or a measure, a
/// truncated Fourier series, or an explicit closed form.
#[derive(Clone)]
pub enum HarmonicFunction {
    PoissonOfFunction(BoundaryFunction),
    PoissonOfMeasure(RadialMeasure),
    FourierSeries(FourierCoefficients),
    ClosedForm {
        eval: Arc<dyn Fn(f64, f64) -> f64 + Send + Sync>,
        label: String,
    },
}

impl fmt::Debug for HarmonicFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HarmonicFunction({})", self.label())
    }
}

impl HarmonicFunction {
    pub fn closed(label: impl Into<String>, eval: impl Fn(f64, f64) -> f64 + Send + Sync + 'static) -> Self {
        HarmonicFunction::ClosedForm {
            eval: Arc::new(eval),
            label: label.into(),
        }
    }

    pub fn label(&self) -> String {
        match self {
            HarmonicFunction::PoissonOfFunction(f) => format!("P[{}]", f.label()),
            HarmonicFunction::PoissonOfMeasure(m) => format!("P[{}]", m.label()),
            HarmonicFunction::FourierSeries(c) => format!("fourier(N={})", c.a.len()),
            HarmonicFunction::ClosedForm { label, .. } => label.clone(),
        }
    }
}

/// Evaluate a harmonic function at `re^{iθ}`.
///
/// `PoissonOfFunction` always goes through the quadrature engine with the
/// kernel registered as a smooth weight; the closed-form shortcuts live in
/// [`trace`] and are certified against this path by the test suite.
pub fn poisson_eval(h: &HarmonicFunction, r: f64, theta: f64, spec: &QuadratureSpec) -> Result<f64> {
    check_radius(r)?;
    match h {
        HarmonicFunction::PoissonOfFunction(f) => {
            let tw = wrap_angle(theta);
            let splits = peak_splits(r, tw);
            let integrand = move |phi: f64| f.raw(phi) * kernel_raw(r, phi - tw);
            quad::integrate_transformed(f, &integrand, &splits, -PI, PI, spec).map(|e| e.value)
        }
        HarmonicFunction::PoissonOfMeasure(m) => {
            let tw = wrap_angle(theta);
            let mut acc = 0.0;
            for &(loc, mass) in m.atoms() {
                acc += mass * kernel_raw(r, loc - tw);
            }
            if let Some(d) = m.density() {
                let splits = peak_splits(r, tw);
                let integrand = move |phi: f64| d.raw(phi) * kernel_raw(r, phi - tw);
                acc += quad::integrate_transformed(d, &integrand, &splits, -PI, PI, spec)?.value;
            }
            Ok(acc)
        }
        HarmonicFunction::FourierSeries(c) => Ok(fourier_extension(c, r, theta).0),
        HarmonicFunction::ClosedForm { eval, .. } => Ok(eval(r, theta)),
    }
}

/// Like [`poisson_eval`] but degrades to the best estimate on an accuracy
/// failure; used inside trace evaluators where a value is always needed.
pub(crate) fn poisson_eval_or_best(h: &HarmonicFunction, r: f64, theta: f64, spec: &QuadratureSpec) -> f64 {
    match poisson_eval(h, r, theta, spec) {
        Ok(v) => v,
        Err(Error::AccuracyFailure { estimate, .. }) => estimate,
        Err(_) => f64::NAN,
    }
}

/// Exact harmonic extension of kinds whose Poisson integral has a closed
/// form: trigonometric modes (`rⁿ` damping), piecewise constants and spike
/// families (sums of the indicator closed form), and sums of those.
pub fn closed_extension(f: &BoundaryFunction, r: f64) -> Option<Arc<dyn Fn(f64) -> f64 + Send + Sync>> {
    if let Some((n, amp, phase)) = f.as_sine_mode() {
        let damp = amp * r.powi(n as i32);
        let nf = n as f64;
        return Some(Arc::new(move |theta: f64| damp * (nf * theta + phase).sin()));
    }
    if let Some((breaks, values)) = f.as_piecewise() {
        let breaks = breaks.to_vec();
        let values = values.to_vec();
        return Some(Arc::new(move |theta: f64| {
            let m = breaks.len();
            let mut acc = 0.0;
            for i in 0..m {
                let lo = breaks[i];
                let hi = if i + 1 < m { breaks[i + 1] } else { breaks[0] + TAU };
                if values[i] != 0.0 {
                    acc += values[i]
                        * (kernel_cumulative(r, hi - theta) - kernel_cumulative(r, lo - theta));
                }
            }
            acc
        }));
    }
    if let Some(spikes) = f.as_spikes() {
        let spikes = spikes.to_vec();
        return Some(Arc::new(move |theta: f64| {
            spikes
                .iter()
                .map(|s| {
                    s.height
                        * (kernel_cumulative(r, s.center + s.half_width - theta)
                            - kernel_cumulative(r, s.center - s.half_width - theta))
                })
                .sum()
        }));
    }
    if let Some(terms) = f.as_sum() {
        let parts: Option<Vec<(f64, Arc<dyn Fn(f64) -> f64 + Send + Sync>)>> = terms
            .iter()
            .map(|(c, t)| closed_extension(t, r).map(|e| (*c, e)))
            .collect();
        let parts = parts?;
        return Some(Arc::new(move |theta: f64| {
            parts.iter().map(|(c, e)| c * e(theta)).sum()
        }));
    }
    None
}

/// Circle trace `θ ↦ h(re^{iθ})` as a boundary function.
///
/// Uses the exact closed-form extension when the boundary data admits one and
/// per-point quadrature otherwise. Traces of Poisson integrals are real
/// analytic, so the result never carries singularities.
pub fn trace(h: &HarmonicFunction, r: f64, spec: &QuadratureSpec) -> Result<BoundaryFunction> {
    check_radius(r)?;
    let label = format!("trace({}, r={r})", h.label());
    match h {
        HarmonicFunction::PoissonOfFunction(f) => {
            if let Some(ext) = closed_extension(f, r) {
                return Ok(BoundaryFunction::closed_form(label, move |t| ext(t), None, vec![]));
            }
            let h = h.clone();
            let spec = *spec;
            Ok(BoundaryFunction::closed_form(
                label,
                move |t| poisson_eval_or_best(&h, r, t, &spec),
                None,
                vec![],
            ))
        }
        HarmonicFunction::PoissonOfMeasure(m) => {
            let m = m.clone();
            let spec = *spec;
            Ok(BoundaryFunction::closed_form(
                label,
                move |t| {
                    poisson_eval_or_best(&HarmonicFunction::PoissonOfMeasure(m.clone()), r, t, &spec)
                },
                None,
                vec![],
            ))
        }
        HarmonicFunction::FourierSeries(c) => {
            let c = c.clone();
            Ok(BoundaryFunction::closed_form(
                label,
                move |t| fourier_extension(&c, r, t).0,
                None,
                vec![],
            ))
        }
        HarmonicFunction::ClosedForm { eval, .. } => {
            let eval = eval.clone();
            Ok(BoundaryFunction::closed_form(label, move |t| eval(r, t), None, vec![]))
        }
    }
}

/// Fourier coefficients `a_n = (1/π)∫ f cos(n·)`, `b_n = (1/π)∫ f sin(n·)`
/// through the quadrature engine (the integrals exist because trigonometric
/// weights are of bounded variation).
pub fn fourier_coefficients(f: &BoundaryFunction, n_max: u32, spec: &QuadratureSpec) -> Result<FourierCoefficients> {
    let a0 = quad::integrate(f, -PI, PI, spec)?.value / PI;
    let mut a = Vec::with_capacity(n_max as usize);
    let mut b = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        let nf = n as f64;
        // splits at the weight's zeros keep the panels low-order
        let splits: Vec<f64> = (0..(2 * n))
            .map(|k| -PI + PI * (k as f64 + 0.5) / nf)
            .collect();
        let ca = quad::integrate_weighted(f, &|t| (nf * t).cos(), &splits, -PI, PI, spec)?;
        let cb = quad::integrate_weighted(f, &|t| (nf * t).sin(), &splits, -PI, PI, spec)?;
        a.push(ca.value / PI);
        b.push(cb.value / PI);
    }
    Ok(FourierCoefficients { a0, a, b })
}

/// Truncated series `a₀/2 + Σ rⁿ[aₙ cos nθ + bₙ sin nθ]` with a reported
/// geometric tail bound.
pub fn fourier_extension(c: &FourierCoefficients, r: f64, theta: f64) -> (f64, f64) {
    let mut acc = 0.5 * c.a0;
    let mut rn = 1.0;
    let mut max_coef = 0.0f64;
    for (k, (an, bn)) in c.a.iter().zip(&c.b).enumerate() {
        rn *= r;
        let nf = (k + 1) as f64;
        acc += rn * (an * (nf * theta).cos() + bn * (nf * theta).sin());
        max_coef = max_coef.max(an.abs()).max(bn.abs());
    }
    let tail = if r < 1.0 {
        2.0 * max_coef * rn * r / (1.0 - r)
    } else {
        f64::INFINITY
    };
    (acc, tail)
}

/// Truncation order that makes the geometric tail at radius `r` smaller
/// than `tol`, clamped to a sane range.
pub fn adaptive_order(r: f64, tol: f64) -> u32 {
    if r <= 0.0 {
        return 1;
    }
    let n = (tol.ln() / r.ln()).ceil();
    (n.max(8.0) as u32).min(4096)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::gamma;

    fn spec() -> QuadratureSpec {
        QuadratureSpec::default()
    }

    #[test]
    fn kernel_at_origin_is_uniform() {
        for t in [-3.0, 0.0, 1.2] {
            assert!((kernel(0.0, t).unwrap() - 1.0 / TAU).abs() < 1e-15);
        }
    }

    #[test]
    fn kernel_peak_value() {
        // Φ_r(0) = (1+r)/(2π(1−r)); at r = 0.5 this is 3/(2π)
        let v = kernel(0.5, 0.0).unwrap();
        assert!((v - 3.0 / TAU).abs() < 1e-14);
    }

    #[test]
    fn kernel_antipode_value() {
        let r: f64 = 0.9;
        let v = kernel(r, PI).unwrap();
        let expect = (1.0 - r * r) / (TAU * (1.0 + r) * (1.0 + r));
        assert!((v - expect).abs() < 1e-15);
    }

    #[test]
    fn kernel_rejects_bad_radius() {
        assert!(kernel(1.0, 0.0).is_err());
        assert!(kernel(-0.1, 0.0).is_err());
    }

    #[test]
    fn kernel_series_converges_geometrically() {
        let (r, t) = (0.5, 0.0);
        let exact = kernel(r, t).unwrap();
        assert!((kernel_series(r, t, 0) - 1.0 / TAU).abs() < 1e-16);
        let err50 = (kernel_series(r, t, 50) - exact).abs();
        assert!(err50 <= 2.0 * r.powi(51) / ((1.0 - r) * TAU) + 1e-16);
        // envelope over a θ-grid decays at rate ≈ r per extra term
        let envelope = |n: u32| -> f64 {
            (0..32)
                .map(|i| {
                    let th = -PI + TAU * (i as f64 + 0.5) / 32.0;
                    (kernel_series(0.9, th, n) - kernel(0.9, th).unwrap()).abs()
                })
                .fold(0.0, f64::max)
        };
        let (e1, e2) = (envelope(40), envelope(80));
        assert!(e2 < e1 * 0.9f64.powi(25), "e1={e1} e2={e2}");
    }

    #[test]
    fn kernel_derivative_matches_series() {
        // the geometric tail n·rⁿ needs ~400 terms to clear 1e-10 at r = 0.9
        for r in [0.3, 0.5, 0.9] {
            for t in [0.0, 0.7, PI / 2.0, 2.9] {
                let closed = kernel_derivative(r, t);
                let series = kernel_derivative_series(r, t, 400);
                assert!((closed - series).abs() < 1e-10, "r={r} t={t}");
            }
        }
        assert_eq!(kernel_derivative(0.7, 0.0), 0.0);
    }

    #[test]
    fn kernel_derivative_vanishes_at_boundary_for_fixed_angle() {
        let t = 1.0;
        let mut prev = kernel_derivative(0.9, t).abs();
        for r in [0.99, 0.999, 0.9999] {
            let cur = kernel_derivative(r, t).abs();
            assert!(cur < prev);
            prev = cur;
        }
        assert!(prev < 1e-2);
    }

    #[test]
    fn psi_kernel_values() {
        assert_eq!(psi_kernel(0.3, 0.0).unwrap(), 1.0);
        assert_eq!(psi_kernel(1.0, 0.0).unwrap(), 1.0);
        let r: f64 = 0.8;
        let v = psi_kernel(r, PI).unwrap();
        assert!((v - (1.0 - r) * (1.0 - r) / ((1.0 + r) * (1.0 + r))).abs() < 1e-15);
        assert_eq!(psi_kernel(1.0, 0.1).unwrap(), 0.0);
    }

    #[test]
    fn cumulative_kernel_is_continuous_and_periodic() {
        let r = 0.7;
        for x in [-PI, -1.0, 0.0, 2.0, PI - 1e-9] {
            let lo = kernel_cumulative(r, x - 1e-9);
            let hi = kernel_cumulative(r, x + 1e-9);
            assert!((hi - lo).abs() < 1e-6, "jump at {x}");
            let per = kernel_cumulative(r, x + TAU);
            assert!((per - kernel_cumulative(r, x) - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn indicator_mean_value_at_origin() {
        let v = poisson_indicator(-1.0, 2.0, 0.0, 0.4).unwrap();
        assert!((v - 3.0 / TAU).abs() < 1e-14);
    }

    #[test]
    fn indicator_limits_match_boundary_values() {
        // P[χ_[-π,0]] tends to 1 inside the arc, 1/2 at its endpoints
        let inside = poisson_indicator(-PI, 0.0, 0.999999, -PI / 2.0).unwrap();
        assert!((inside - 1.0).abs() < 1e-3);
        let edge = poisson_indicator(-PI, 0.0, 0.999999, 0.0).unwrap();
        assert!((edge - 0.5).abs() < 1e-9);
        let outside = poisson_indicator(-PI, 0.0, 0.999999, PI / 2.0).unwrap();
        assert!(outside < 1e-3);
    }

    #[test]
    fn indicator_against_paper_arctan_form() {
        // (1/π){π/2 − arctan(ρ tan(θ/2)) + arctan(ρ⁻¹ tan(θ/2))} on (0, π)
        let r: f64 = 0.85;
        let rho = (1.0 + r) / (1.0 - r);
        for theta in [0.2, 0.9, 2.4] {
            let ours = poisson_indicator(-PI, 0.0, r, theta).unwrap();
            let paper = (PI / 2.0 - (rho * (theta / 2.0).tan()).atan()
                + ((theta / 2.0).tan() / rho).atan())
                / PI;
            assert!((ours - paper).abs() < 1e-13, "θ = {theta}");
        }
    }

    #[test]
    fn kernel_lp_closed_forms() {
        let s = spec();
        for r in [0.0, 0.4, 0.9] {
            assert!((kernel_lp_norm(r, 1.0, &s).unwrap() - 1.0).abs() < 1e-14);
            let p2 = kernel_lp_norm(r, 2.0, &s).unwrap();
            let expect = (1.0 + r * r).sqrt() / (TAU * (1.0 - r * r)).sqrt();
            assert!((p2 - expect).abs() < 1e-13);
        }
        // r → 1 hypergeometric factor at p = 3 is Γ(5)/Γ(3)² = 6
        let ratio = gamma(5.0) / gamma(3.0).powi(2);
        assert_eq!(hyp2f1_terminating(3, 1.0), 6.0);
        assert!((ratio - 6.0).abs() < 1e-10);
    }

    #[test]
    fn kernel_lp_closed_form_matches_quadrature() {
        let s = spec();
        for p in [1.0, 2.0, 3.0] {
            for r in [0.0, 0.5, 0.9] {
                let cf = kernel_lp_norm(r, p, &s).unwrap();
                let qd = kernel_lp_quadrature(r, p, &s).unwrap();
                assert!(
                    (cf - qd).abs() <= 1e-9 * cf.max(1.0),
                    "p={p} r={r}: {cf} vs {qd}"
                );
            }
        }
    }

    #[test]
    fn sine_lp_constants() {
        assert!((sine_lp_constant(1.0).unwrap() - 4.0).abs() < 1e-12);
        assert!((sine_lp_constant(2.0).unwrap() - PI).abs() < 1e-12);
        assert!((sine_lp_constant(4.0).unwrap() - 3.0 * PI / 4.0).abs() < 1e-12);
    }

    #[test]
    fn poisson_of_constant_is_constant() {
        let h = HarmonicFunction::PoissonOfFunction(BoundaryFunction::constant(1.0));
        for (r, t) in [(0.0, 0.3), (0.5, -2.0), (0.95, 1.0)] {
            let v = poisson_eval(&h, r, t, &spec()).unwrap();
            assert!((v - 1.0).abs() < 1e-9, "r={r} t={t}: {v}");
        }
    }

    #[test]
    fn poisson_of_sine_mode_damps_by_r_to_n() {
        let h = HarmonicFunction::PoissonOfFunction(BoundaryFunction::sine(3, 1.0));
        let (r, t) = (0.7, 0.9);
        let v = poisson_eval(&h, r, t, &spec()).unwrap();
        let expect = r.powi(3) * (3.0 * t).sin();
        assert!((v - expect).abs() < 1e-9);
    }

    #[test]
    fn poisson_of_dirac_is_kernel() {
        let s = spec();
        let h = HarmonicFunction::PoissonOfMeasure(RadialMeasure::dirac(0.0, &s));
        let (r, t) = (0.6, 0.8);
        let v = poisson_eval(&h, r, t, &s).unwrap();
        assert!((v - kernel_raw(r, t)).abs() < 1e-14);
    }

    #[test]
    fn fourier_series_at_center_is_mean() {
        let c = FourierCoefficients {
            a0: 3.0,
            a: vec![1.0, 0.5],
            b: vec![0.2, 0.0],
        };
        let h = HarmonicFunction::FourierSeries(c);
        let v = poisson_eval(&h, 0.0, 1.234, &spec()).unwrap();
        assert!((v - 1.5).abs() < 1e-15);
    }

    #[test]
    fn fourier_coefficients_orthogonality() {
        let s = spec();
        let c = fourier_coefficients(&BoundaryFunction::sine(3, 1.0), 5, &s).unwrap();
        assert!(c.a0.abs() < 1e-12);
        for (k, (an, bn)) in c.a.iter().zip(&c.b).enumerate() {
            if k + 1 == 3 {
                assert!((bn - 1.0).abs() < 1e-12);
            } else {
                assert!(bn.abs() < 1e-12);
            }
            assert!(an.abs() < 1e-12);
        }
    }

    #[test]
    fn chi_fourier_coefficients_against_antiderivatives() {
        // a_n = sin(n)/(nπ), b_n = (1−cos n)/(nπ), a0 = 1/π for χ_[0,1)
        let s = spec();
        let c = fourier_coefficients(&BoundaryFunction::indicator(0.0, 1.0).unwrap(), 6, &s).unwrap();
        assert!((c.a0 - 1.0 / PI).abs() < 1e-12);
        for k in 0..6 {
            let n = (k + 1) as f64;
            assert!((c.a[k] - n.sin() / (n * PI)).abs() < 1e-12);
            assert!((c.b[k] - (1.0 - n.cos()) / (n * PI)).abs() < 1e-12);
        }
    }

    #[test]
    fn extension_of_mode_coefficients() {
        let c = FourierCoefficients {
            a0: 0.0,
            a: vec![0.0, 0.0],
            b: vec![0.0, 1.0],
        };
        let (r, t) = (0.5, 0.3);
        let (v, tail) = fourier_extension(&c, r, t);
        assert!((v - r * r * (2.0 * t).sin()).abs() < 1e-15);
        assert!(tail > 0.0);
    }

    #[test]
    fn closed_trace_matches_quadrature_for_chi() {
        let s = spec();
        let f = BoundaryFunction::indicator(0.0, 1.0).unwrap();
        let h = HarmonicFunction::PoissonOfFunction(f.clone());
        let ext = closed_extension(&f, 0.5).unwrap();
        for t in [-2.0, 0.3, 1.0, 2.9] {
            let q = poisson_eval(&h, 0.5, t, &s).unwrap();
            assert!((ext(t) - q).abs() < 1e-9, "t = {t}");
        }
    }

    #[test]
    fn indicator_closed_form_equals_quadrature() {
        let s = spec();
        let f = BoundaryFunction::indicator(-1.0, 0.5).unwrap();
        let h = HarmonicFunction::PoissonOfFunction(f);
        for (r, t) in [(0.3, 0.0), (0.9, -0.7), (0.99, 0.45)] {
            let closed = poisson_indicator(-1.0, 0.5, r, t).unwrap();
            let q = poisson_eval(&h, r, t, &s).unwrap();
            assert!((closed - q).abs() < 1e-8, "r={r} t={t}: {closed} vs {q}");
        }
    }
}
