//! Quadrature for conditionally convergent periodic integrands.
//!
//! The engine is adaptive Gauss–Kronrod (7–15) with panels split at every
//! registered singular point. Panels adjacent to a singularity that carries a
//! phase map are pushed through the change of variables and integrated on the
//! phase axis as half-period partial sums with iterated-averaging series
//! acceleration, which is what makes `(2/θ)sin(2/θ)`-type integrands
//! tractable to full tolerance.

use std::f64::consts::{PI, TAU};

use crate::boundary::{
    for_each_base_segment, wrap_angle, BVFunction, BoundaryFunction, SingularityClass,
    SingularityDescriptor,
};
use crate::report::BoundReport;
use crate::{Error, Result};

/// Tolerances and budgets for the quadrature engine.
#[derive(Clone, Copy, Debug)]
pub struct QuadratureSpec {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_depth: u32,
    /// Series-acceleration order for oscillatory tails.
    pub osc_accel_terms: u32,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            abs_tol: 1e-10,
            rel_tol: 1e-9,
            max_depth: 40,
            osc_accel_terms: 12,
        }
    }
}

impl QuadratureSpec {
    pub fn new(abs_tol: f64, rel_tol: f64, max_depth: u32, osc_accel_terms: u32) -> Result<Self> {
        if !(abs_tol >= 1e-14) || !(rel_tol >= 1e-14) {
            return Err(Error::Domain(
                "quadrature tolerances must be at least 1e-14".into(),
            ));
        }
        if max_depth > 60 {
            return Err(Error::Domain("max_depth must not exceed 60".into()));
        }
        Ok(QuadratureSpec {
            abs_tol,
            rel_tol,
            max_depth,
            osc_accel_terms,
        })
    }
}

/// A value with an error bound: |true − value| ≤ error.
#[derive(Clone, Copy, Debug)]
pub struct Estimate {
    pub value: f64,
    pub error: f64,
}

// 15-point Kronrod nodes/weights with the embedded 7-point Gauss rule.
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

fn rescale_error(err: f64, res_abs: f64, res_asc: f64) -> f64 {
    let mut scaled = err.abs();
    if res_asc != 0.0 && scaled != 0.0 {
        let scale = (200.0 * scaled / res_asc).powf(1.5);
        scaled = if scale < 1.0 { res_asc * scale } else { res_asc };
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        scaled = scaled.max(50.0 * f64::EPSILON * res_abs);
    }
    scaled
}

/// One 15-point Gauss–Kronrod panel. Nodes are strictly interior, so jump
/// endpoints are never evaluated.
fn gk15(f: &dyn Fn(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut resk = WGK[7] * fc;
    let mut resg = WG[3] * fc;
    let mut resabs = resk.abs();
    let mut fv = [0.0f64; 15];
    fv[7] = fc;
    for j in 0..7 {
        let x = half * XGK[j];
        let f1 = f(center - x);
        let f2 = f(center + x);
        fv[j] = f1;
        fv[14 - j] = f2;
        resk += WGK[j] * (f1 + f2);
        resabs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            resg += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * resk;
    let mut resasc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        resasc += WGK[j] * ((fv[j] - mean).abs() + (fv[14 - j] - mean).abs());
    }
    let err = rescale_error((resk - resg) * half, resabs * half.abs(), resasc * half.abs());
    (resk * half, err)
}

/// Adaptive bisection. Never fails: at the depth cap the panel estimate is
/// kept and its error bound reported, so the caller decides whether the
/// accumulated error is acceptable.
fn adaptive_rec(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64, depth: u32) -> (f64, f64) {
    let (v, e) = gk15(f, a, b);
    if e <= tol || e <= 1e-15 * v.abs() || depth == 0 || b - a < 1e-15 * (a.abs() + b.abs() + 1.0) {
        return (v, e);
    }
    let m = 0.5 * (a + b);
    let (lv, le) = adaptive_rec(f, a, m, 0.5 * tol, depth - 1);
    let (rv, re) = adaptive_rec(f, m, b, 0.5 * tol, depth - 1);
    (lv + rv, le + re)
}

/// Adaptive Gauss–Kronrod on a plain closure with forced interior splits.
pub fn adaptive_closure(
    f: impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    splits: &[f64],
    abs_tol: f64,
    rel_tol: f64,
    max_depth: u32,
) -> Result<Estimate> {
    let mut cuts: Vec<f64> = vec![a, b];
    cuts.extend(splits.iter().copied().filter(|x| *x > a && *x < b));
    cuts.sort_by(|x, y| x.partial_cmp(y).unwrap());
    cuts.dedup_by(|x, y| (*x - *y).abs() < 1e-14);
    let mut value = 0.0;
    let mut error = 0.0;
    let n = cuts.len() - 1;
    for w in cuts.windows(2) {
        let tol = (abs_tol / n as f64).max(1e-16);
        let (v, e) = adaptive_rec(&f, w[0], w[1], tol, max_depth);
        value += v;
        error += e;
    }
    if error > abs_tol.max(rel_tol * value.abs()) * 4.0 {
        return Err(Error::AccuracyFailure {
            estimate: value,
            error,
        });
    }
    Ok(Estimate { value, error })
}

// ---------------------------------------------------------------------------
// Oscillatory tails
// ---------------------------------------------------------------------------

/// Iterated pairwise averaging of the trailing window of partial sums.
fn averaged(partials: &[f64], levels: usize) -> f64 {
    let m = levels.min(partials.len() - 1);
    let mut w = partials[partials.len() - 1 - m..].to_vec();
    for _ in 0..m {
        for i in 0..w.len() - 1 {
            w[i] = 0.5 * (w[i] + w[i + 1]);
        }
        w.pop();
    }
    w[0]
}

/// `∫_t0^∞ g(t) dt` for g oscillating with the given half-period: half-period
/// panel sums accelerated by iterated averaging.
fn osc_tail(
    g: &dyn Fn(f64) -> f64,
    t0: f64,
    half_period: f64,
    levels: u32,
    tol: f64,
) -> Result<Estimate> {
    let levels = levels.max(2) as usize;
    let min_panels = levels + 16;
    let max_panels = 64 + 24 * levels;
    let mut edge = t0;
    let mut next = half_period * (t0 / half_period).ceil();
    if next <= t0 + 1e-9 * half_period {
        next += half_period;
    }
    let mut partials: Vec<f64> = Vec::with_capacity(max_panels);
    let mut sum = 0.0;
    let mut panel_err = 0.0;
    let mut prev_accel = f64::NAN;
    let mut small_in_a_row = 0u32;
    for k in 0..max_panels {
        let (v, e) = adaptive_rec(g, edge, next, (tol / 32.0).max(1e-16), 12);
        sum += v;
        panel_err += e;
        partials.push(sum);
        edge = next;
        next += half_period;
        if v.abs() < tol / 16.0 {
            small_in_a_row += 1;
            // absolutely convergent tail: the plain sum has already settled
            if small_in_a_row >= 3 && k + 1 >= levels {
                return Ok(Estimate {
                    value: averaged(&partials, levels),
                    error: panel_err + v.abs(),
                });
            }
        } else {
            small_in_a_row = 0;
        }
        if k + 1 >= min_panels {
            let accel = averaged(&partials, levels);
            let delta = (accel - prev_accel).abs();
            if delta <= tol / 4.0 {
                return Ok(Estimate {
                    value: accel,
                    error: delta + panel_err,
                });
            }
            prev_accel = accel;
        }
    }
    Err(Error::AccuracyFailure {
        estimate: averaged(&partials, levels),
        error: (averaged(&partials, levels) - prev_accel).abs() + panel_err,
    })
}

/// `∫_A^B g(t) dt` on the phase axis, where either endpoint may be infinite
/// and B − A may span an arbitrary number of oscillations.
fn osc_span(
    g: &dyn Fn(f64) -> f64,
    a: f64,
    b: f64,
    half_period: f64,
    levels: u32,
    tol: f64,
) -> Result<Estimate> {
    debug_assert!(a < b);
    if a.is_infinite() {
        // reflect onto a +∞ tail
        let refl = move |u: f64| g(-u);
        let tail = osc_tail(&refl, -b, half_period, levels, tol)?;
        return Ok(tail);
    }
    if b.is_infinite() {
        return osc_tail(g, a, half_period, levels, tol);
    }
    if b - a <= 8.0 * half_period {
        let (v, e) = adaptive_rec(g, a, b, (tol / 4.0).max(1e-16), 24);
        return Ok(Estimate { value: v, error: e });
    }
    let upper = osc_tail(g, a, half_period, levels, tol / 2.0)?;
    let lower = osc_tail(g, b, half_period, levels, tol / 2.0)?;
    Ok(Estimate {
        value: upper.value - lower.value,
        error: upper.error + lower.error,
    })
}

// ---------------------------------------------------------------------------
// Integration of boundary functions
// ---------------------------------------------------------------------------

struct SingularEvent {
    /// Location shifted into the integration window.
    location: f64,
    desc: SingularityDescriptor,
}

fn collect_events(f: &BoundaryFunction, a: f64, b: f64) -> Vec<SingularEvent> {
    let mut events = Vec::new();
    for s in f.singularities() {
        let k0 = ((a - s.location) / TAU).floor() as i64;
        for k in k0 - 1..=k0 + 2 {
            let loc = s.location + TAU * k as f64;
            if loc >= a - 1e-12 && loc <= b + 1e-12 {
                events.push(SingularEvent {
                    location: loc,
                    desc: s.clone(),
                });
            }
        }
    }
    events
}

fn panel_splits(f: &BoundaryFunction, events: &[SingularEvent], a: f64, b: f64) -> Vec<f64> {
    let mut cuts = vec![a, b];
    for p in f.split_points() {
        let k0 = ((a - p) / TAU).floor() as i64;
        for k in k0 - 1..=k0 + 2 {
            let x = p + TAU * k as f64;
            if x > a && x < b {
                cuts.push(x);
            }
        }
    }
    for ev in events {
        if ev.location > a && ev.location < b {
            cuts.push(ev.location);
        }
        if let Some(hint) = &ev.desc.phase_hint {
            for x in [ev.location - hint.zone_radius, ev.location + hint.zone_radius] {
                if x > a && x < b {
                    cuts.push(x);
                }
            }
        }
    }
    cuts.sort_by(|x, y| x.partial_cmp(y).unwrap());
    cuts.dedup_by(|x, y| (*x - *y).abs() < 1e-13);
    cuts
}

/// Integrate `integrand` over one panel `[lo, hi]`, using the phase map of an
/// adjacent hinted singularity when the panel lies inside its zone.
fn panel_integrate(
    integrand: &dyn Fn(f64) -> f64,
    events: &[SingularEvent],
    lo: f64,
    hi: f64,
    tol: f64,
    spec: &QuadratureSpec,
) -> Result<Estimate> {
    const EPS: f64 = 1e-12;
    // hinted zone?
    for ev in events {
        let Some(hint) = &ev.desc.phase_hint else {
            continue;
        };
        let s = ev.location;
        let right = lo >= s - EPS && hi <= s + hint.zone_radius + EPS && hi > s + EPS;
        let left = hi <= s + EPS && lo >= s - hint.zone_radius - EPS && lo < s - EPS;
        if !(right || left) {
            continue;
        }
        let base = wrap_angle(s); // phase maps are defined around the base-period location
        let shift = s - base;
        let fwd = hint.forward.clone();
        let inv = hint.inverse.clone();
        let jac = hint.jacobian.clone();
        let g = move |t: f64| integrand(inv(t) + shift) * jac(t).abs();
        let t_lo = if (lo - s).abs() <= EPS {
            f64::INFINITY * if right { 1.0 } else { -1.0 }
        } else {
            fwd(lo - shift)
        };
        let t_hi = if (hi - s).abs() <= EPS {
            f64::INFINITY * if right { 1.0 } else { -1.0 }
        } else {
            fwd(hi - shift)
        };
        // at the singular point |t| → ∞; orient the phase interval
        let (ta, tb) = if t_lo < t_hi { (t_lo, t_hi) } else { (t_hi, t_lo) };
        return osc_span(&g, ta, tb, hint.half_period, spec.osc_accel_terms, tol);
    }
    // unhinted blowup at an endpoint: improper limit by geometric shrinking
    for ev in events {
        if ev.desc.class != SingularityClass::Blowup || ev.desc.phase_hint.is_some() {
            continue;
        }
        let s = ev.location;
        let at_lo = (lo - s).abs() <= EPS;
        let at_hi = (hi - s).abs() <= EPS;
        if !(at_lo || at_hi) {
            continue;
        }
        let width = hi - lo;
        let mut value = 0.0;
        let mut error = 0.0;
        let mut w = width;
        let mut tiny_in_a_row = 0;
        for _ in 0..200 {
            let (pa, pb) = if at_lo {
                (lo + w / 2.0, lo + w)
            } else {
                (hi - w, hi - w / 2.0)
            };
            let (v, e) = adaptive_rec(integrand, pa, pb, (tol / 16.0).max(1e-16), spec.max_depth);
            value += v;
            error += e;
            if v.abs() < tol / 8.0 {
                tiny_in_a_row += 1;
                if tiny_in_a_row >= 3 {
                    return Ok(Estimate {
                        value,
                        error: error + v.abs(),
                    });
                }
            } else {
                tiny_in_a_row = 0;
            }
            w /= 2.0;
        }
        return Err(Error::AccuracyFailure {
            estimate: value,
            error: error + 2.0 * tol,
        });
    }
    let (v, e) = adaptive_rec(integrand, lo, hi, tol, spec.max_depth);
    Ok(Estimate { value: v, error: e })
}

fn integrate_with(
    f: &BoundaryFunction,
    integrand: &dyn Fn(f64) -> f64,
    extra_splits: &[f64],
    a: f64,
    b: f64,
    spec: &QuadratureSpec,
    exact_ok: bool,
) -> Result<Estimate> {
    if !a.is_finite() || !b.is_finite() {
        return Err(Error::Domain("integration endpoints must be finite".into()));
    }
    if b < a {
        let mut est = integrate_with(f, integrand, extra_splits, b, a, spec, exact_ok)?;
        est.value = -est.value;
        return Ok(est);
    }
    if b - a > TAU + 1e-9 {
        return Err(Error::Domain(format!(
            "interval length {} exceeds one period",
            b - a
        )));
    }
    if (b - a) < 1e-15 {
        return Ok(Estimate {
            value: 0.0,
            error: 0.0,
        });
    }
    // descriptor sanity: oscillatory points must carry a phase map
    for s in f.singularities() {
        if s.class == SingularityClass::OscillatoryNonabsolute && s.phase_hint.is_none() {
            return Err(Error::UnhandledSingularity {
                location: s.location,
            });
        }
    }
    if exact_ok {
        if let Some(v) = f.exact_integral(a, b) {
            return Ok(Estimate {
                value: v,
                error: 1e-16 * v.abs() + 1e-18,
            });
        }
    }
    let events = collect_events(f, a, b);
    let cuts = panel_splits(f, &events, a, b);
    let n = cuts.len() - 1;
    let mut value = 0.0;
    let mut error = 0.0;
    let mut failed: Option<f64> = None;
    for w in cuts.windows(2) {
        let tol = (spec.abs_tol * ((w[1] - w[0]) / (b - a)).max(1.0 / n as f64)).max(1e-15);
        match panel_integrate(integrand, &events, w[0], w[1], tol, spec) {
            Ok(est) => {
                value += est.value;
                error += est.error;
            }
            Err(Error::AccuracyFailure {
                estimate,
                error: e,
            }) => {
                value += estimate;
                error += e;
                failed = Some(e);
            }
            Err(e) => return Err(e),
        }
    }
    let budget = spec.abs_tol.max(spec.rel_tol * value.abs()) * 4.0;
    if failed.is_some() && error > budget {
        return Err(Error::AccuracyFailure {
            estimate: value,
            error,
        });
    }
    Ok(Estimate { value, error })
}

/// `∫_a^b f` over an interval of length at most 2π.
///
/// Oscillatory singularities are handled through their phase maps; jump and
/// blowup points split panels. On a tolerance failure the error carries the
/// best estimate.
pub fn integrate(f: &BoundaryFunction, a: f64, b: f64, spec: &QuadratureSpec) -> Result<Estimate> {
    integrate_with(f, &|t| f.raw(t), &[], a, b, spec, true)
}

/// `∫_a^b f·w` with extra panel splits for kinks of the weight.
pub fn integrate_weighted(
    f: &BoundaryFunction,
    weight: &dyn Fn(f64) -> f64,
    extra_splits: &[f64],
    a: f64,
    b: f64,
    spec: &QuadratureSpec,
) -> Result<Estimate> {
    integrate_with(f, &|t| f.raw(t) * weight(t), extra_splits, a, b, spec, false)
}

// ---------------------------------------------------------------------------
// Indefinite integrals and norms
// ---------------------------------------------------------------------------

/// Sampled cumulative integral `F(θ) = ∫_{-π}^θ f` over one period.
#[derive(Clone, Debug)]
pub struct IndefiniteIntegral {
    pub grid: Vec<f64>,
    pub values: Vec<f64>,
    /// `F(π)`, the full-period integral.
    pub total: f64,
    pub error_bound: f64,
}

/// Cumulative panel sums on a grid refined near registered singularities.
pub fn indefinite(f: &BoundaryFunction, n_grid: usize, spec: &QuadratureSpec) -> Result<IndefiniteIntegral> {
    if n_grid < 16 {
        return Err(Error::Domain("indefinite integral needs n_grid >= 16".into()));
    }
    let mut grid: Vec<f64> = (0..=n_grid)
        .map(|i| -PI + TAU * i as f64 / n_grid as f64)
        .collect();
    for p in f.split_points() {
        grid.push(p);
        // geometric ladder resolves the cumulative near singular points
        for k in 3..=40 {
            let d = 0.5f64.powi(k);
            for x in [p - d, p + d] {
                if (-PI..=PI).contains(&x) {
                    grid.push(x);
                }
            }
        }
    }
    grid.retain(|x| (-PI..=PI).contains(x));
    grid.push(-PI);
    grid.push(PI);
    grid.sort_by(|x, y| x.partial_cmp(y).unwrap());
    grid.dedup_by(|x, y| (*x - *y).abs() < 1e-14);
    let panel_spec = QuadratureSpec {
        abs_tol: (spec.abs_tol / n_grid as f64).max(1e-15),
        ..*spec
    };
    let mut values = Vec::with_capacity(grid.len());
    values.push(0.0);
    let mut error_bound = 0.0;
    let mut acc = 0.0;
    for w in grid.windows(2) {
        let est = integrate(f, w[0], w[1], &panel_spec)?;
        acc += est.value;
        error_bound += est.error;
        values.push(acc);
    }
    Ok(IndefiniteIntegral {
        total: acc,
        grid,
        values,
        error_bound,
    })
}

/// Alexiewicz norm: `sup |∫_I f|` over intervals of length at most 2π.
///
/// With `F` the indefinite integral and `c = F(π)`, inner intervals give
/// `F(t) − F(s)` and wrapped intervals give `c − (F(t) − F(s))` with `s ≤ t`,
/// so the sup is a prefix min/max scan over both families. Grid extrema are
/// polished by locating the sign change of `f` inside the bracketing cell.
pub fn alexiewicz_norm(f: &BoundaryFunction, spec: &QuadratureSpec) -> Result<f64> {
    alexiewicz_norm_sized(f, 2048, spec)
}

pub fn alexiewicz_norm_sized(
    f: &BoundaryFunction,
    n_grid: usize,
    spec: &QuadratureSpec,
) -> Result<f64> {
    let ind = indefinite(f, n_grid, spec)?;
    let mut pts: Vec<(f64, f64)> = ind
        .grid
        .iter()
        .copied()
        .zip(ind.values.iter().copied())
        .collect();
    // polish interior extrema of F: f changes sign inside a cell
    let mut extra: Vec<(f64, f64)> = Vec::new();
    let mut polished = 0;
    for i in 0..ind.grid.len() - 1 {
        let (lo, hi) = (ind.grid[i], ind.grid[i + 1]);
        if hi - lo < 1e-9 || polished >= 1024 {
            continue;
        }
        let (mut a, mut b) = (lo + 1e-13 * (1.0 + lo.abs()), hi - 1e-13 * (1.0 + hi.abs()));
        let (mut fa, fb) = (f.raw(a), f.raw(b));
        if fa == 0.0 || fa.signum() == fb.signum() || !fa.is_finite() || !fb.is_finite() {
            continue;
        }
        for _ in 0..60 {
            let m = 0.5 * (a + b);
            let fm = f.raw(m);
            if fm == 0.0 {
                a = m;
                break;
            }
            if fm.signum() == fa.signum() {
                a = m;
                fa = fm;
            } else {
                b = m;
            }
        }
        let z = 0.5 * (a + b);
        let panel_spec = QuadratureSpec {
            abs_tol: (spec.abs_tol / n_grid as f64).max(1e-15),
            ..*spec
        };
        if let Ok(est) = integrate(f, lo, z, &panel_spec) {
            extra.push((z, ind.values[i] + est.value));
            polished += 1;
        }
    }
    pts.extend(extra);
    pts.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());
    let c = ind.total;
    // prefix scans over both interval families
    let mut min_prefix = f64::INFINITY;
    let mut max_prefix = f64::NEG_INFINITY;
    let mut best_pos = 0.0f64; // max of F(t) − F(s), s ≤ t
    let mut best_neg = 0.0f64; // min of F(t) − F(s), s ≤ t
    for &(_, v) in &pts {
        min_prefix = min_prefix.min(v);
        max_prefix = max_prefix.max(v);
        best_pos = best_pos.max(v - min_prefix);
        best_neg = best_neg.min(v - max_prefix);
    }
    Ok(best_pos
        .max(-best_neg)
        .max((c - best_neg).abs())
        .max((c - best_pos).abs()))
}

/// L^p norm over one period; `p = ∞` is the essential sup (refined sampling
/// plus a local polish), returning ∞ when a blowup or oscillatory
/// singularity makes the trace essentially unbounded.
pub fn lp_norm(f: &BoundaryFunction, p: f64, spec: &QuadratureSpec) -> Result<f64> {
    if !(p >= 1.0) {
        return Err(Error::Domain(format!("lp_norm requires p >= 1, got {p}")));
    }
    if p.is_infinite() {
        return sup_norm(f);
    }
    let mut splits = f.split_points();
    splits.extend(zero_crossings(f, 2048));
    let integrand = move |t: f64| f.raw(t).abs().powf(p);
    let est = integrate_with(f, &integrand, &splits, -PI, PI, spec, false)?;
    Ok(est.value.max(0.0).powf(1.0 / p))
}

fn zero_crossings(f: &BoundaryFunction, n: usize) -> Vec<f64> {
    let mut zeros = Vec::new();
    let mut prev_x = -PI + 1e-9;
    let mut prev = f.raw(prev_x);
    for i in 1..=n {
        let x = -PI + TAU * i as f64 / n as f64 - 1e-9;
        let cur = f.raw(x);
        if prev.is_finite() && cur.is_finite() && prev != 0.0 && prev.signum() != cur.signum() {
            let (mut a, mut b, mut fa) = (prev_x, x, prev);
            for _ in 0..50 {
                let m = 0.5 * (a + b);
                let fm = f.raw(m);
                if fm == 0.0 {
                    a = m;
                    break;
                }
                if fm.signum() == fa.signum() {
                    a = m;
                    fa = fm;
                } else {
                    b = m;
                }
            }
            zeros.push(0.5 * (a + b));
        }
        prev_x = x;
        prev = cur;
    }
    zeros
}

fn sup_norm(f: &BoundaryFunction) -> Result<f64> {
    if f
        .singularities()
        .iter()
        .any(|s| s.class != SingularityClass::Jump)
    {
        return Ok(f64::INFINITY);
    }
    let n = 1 << 14;
    let mut xs: Vec<f64> = (0..n).map(|i| -PI + TAU * (i as f64 + 0.5) / n as f64).collect();
    for s in f.singularities() {
        xs.push(s.location - 1e-10);
        xs.push(s.location + 1e-10);
    }
    let mut best = 0.0f64;
    let mut best_x = 0.0f64;
    for &x in &xs {
        let v = f.raw(x).abs();
        if v > best {
            best = v;
            best_x = x;
        }
    }
    // golden-section polish around the best sample
    let h = TAU / n as f64;
    let (mut lo, mut hi) = (best_x - h, best_x + h);
    let phi = 0.5 * (5.0_f64.sqrt() - 1.0);
    let mut x1 = hi - phi * (hi - lo);
    let mut x2 = lo + phi * (hi - lo);
    let mut f1 = f.raw(x1).abs();
    let mut f2 = f.raw(x2).abs();
    for _ in 0..80 {
        if f1 > f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - phi * (hi - lo);
            f1 = f.raw(x1).abs();
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + phi * (hi - lo);
            f2 = f.raw(x2).abs();
        }
    }
    Ok(best.max(f1).max(f2))
}

/// Check `|∫ f g| ≤ ‖f‖(inf|g| + Vg)` for a concrete pair.
pub fn pairing_bound(
    f: &BoundaryFunction,
    g: &BVFunction,
    spec: &QuadratureSpec,
) -> Result<BoundReport> {
    let g_base = g.base().clone();
    let splits = g_base.split_points();
    let weight = move |t: f64| g_base.raw(t);
    let lhs_est = integrate_weighted(f, &weight, &splits, -PI, PI, spec)?;
    let lhs = lhs_est.value.abs();
    let rhs = alexiewicz_norm(f, spec)? * (g.inf_abs() + g.variation());
    let tol = 1e-9 + lhs_est.error;
    Ok(BoundReport::new(
        format!("pairing: {} vs {}", f.label(), g.base().label()),
        lhs,
        rhs,
        tol,
    ))
}

/// Integral of a product against an arbitrary smooth weight where only `f`'s
/// singular structure matters; exposed for the Poisson convolution.
pub(crate) fn integrate_transformed(
    f: &BoundaryFunction,
    integrand: &dyn Fn(f64) -> f64,
    extra_splits: &[f64],
    a: f64,
    b: f64,
    spec: &QuadratureSpec,
) -> Result<Estimate> {
    integrate_with(f, integrand, extra_splits, a, b, spec, false)
}

/// Convenience: exact value where available, quadrature otherwise.
pub fn full_period_integral(f: &BoundaryFunction, spec: &QuadratureSpec) -> Result<f64> {
    Ok(integrate(f, -PI, PI, spec)?.value)
}

pub(crate) fn base_segments(a: f64, b: f64) -> Vec<(f64, f64)> {
    let mut out = Vec::new();
    for_each_base_segment(a, b, |lo, hi| out.push((lo, hi)));
    out
}
