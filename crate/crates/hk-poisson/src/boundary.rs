//! 2π-periodic boundary traces, finite measures on the circle, and the
//! elementary functionals on them (evaluation, total variation, infimum of
//! modulus, NBV normalization).
//!
//! A [`BoundaryFunction`] is a sum of scaled primitive kinds (closed form,
//! piecewise constant, spike family, sine mode, slow-decay profile,
//! tabulated) together with a registry of singular points. Jump points only
//! split quadrature panels; oscillatory and blowup points additionally carry
//! an optional monotone phase map that turns the neighbourhood of the
//! singularity into an oscillatory tail integral.

use std::f64::consts::{PI, TAU};
use std::fmt;
use std::sync::Arc;

use crate::quad::{self, QuadratureSpec};
use crate::{Error, Result};

/// Reduce an angle to the base period `[-π, π)`.
pub fn wrap_angle(theta: f64) -> f64 {
    if (-PI..PI).contains(&theta) {
        return theta;
    }
    let t = (theta + PI).rem_euclid(TAU) - PI;
    if t >= PI {
        -PI
    } else {
        t
    }
}

type EvalFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// How a boundary function fails to be smooth at a point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SingularityClass {
    /// Finite one-sided limits that disagree.
    Jump,
    /// Conditionally integrable oscillation, e.g. `(2/θ)sin(2/θ)`.
    OscillatoryNonabsolute,
    /// Unbounded values approaching the point.
    Blowup,
}

/// Monotone change of variables that maps one side of a singular point onto
/// an unbounded phase axis on which the integrand oscillates with a fixed
/// period. `cot(θ/2)` for the `sin(cot(θ/2))`-type traces.
#[derive(Clone)]
pub struct PhaseHint {
    /// θ ↦ t, monotone on each punctured side of the singularity.
    pub forward: EvalFn,
    /// t ↦ θ, inverse of `forward`.
    pub inverse: EvalFn,
    /// t ↦ |dθ/dt|.
    pub jacobian: EvalFn,
    /// Half-period of the oscillation on the phase axis (π for sin-type).
    pub half_period: f64,
    /// Radius around the singular point inside which the change of
    /// variables is applied.
    pub zone_radius: f64,
}

impl PhaseHint {
    /// The `t = cot(θ/2)` map for a singularity at θ = 0, scaled so the
    /// oscillatory argument is `scale · cot(θ/2)`.
    pub fn cot_half(scale: f64) -> Self {
        assert!(scale > 0.0);
        PhaseHint {
            forward: Arc::new(move |theta: f64| scale / (theta / 2.0).tan()),
            inverse: Arc::new(move |t: f64| 2.0 * (scale / t).atan()),
            jacobian: Arc::new(move |t: f64| {
                // θ = 2 atan(s/t) gives |dθ/dt| = 2s/(s² + t²).
                2.0 * scale / (scale * scale + t * t)
            }),
            half_period: PI,
            zone_radius: 0.5,
        }
    }

    /// The `t = s/θ` map for a singularity at θ = 0 (oscillation `sin(s/θ)`).
    pub fn reciprocal(scale: f64) -> Self {
        assert!(scale > 0.0);
        PhaseHint {
            forward: Arc::new(move |theta: f64| scale / theta),
            inverse: Arc::new(move |t: f64| scale / t),
            jacobian: Arc::new(move |t: f64| scale / (t * t)),
            half_period: PI,
            zone_radius: 0.5,
        }
    }
}

#[derive(Clone)]
pub struct SingularityDescriptor {
    /// Location in `[-π, π)`.
    pub location: f64,
    pub class: SingularityClass,
    pub phase_hint: Option<PhaseHint>,
}

impl SingularityDescriptor {
    pub fn jump(location: f64) -> Self {
        SingularityDescriptor {
            location: wrap_angle(location),
            class: SingularityClass::Jump,
            phase_hint: None,
        }
    }

    pub fn oscillatory(location: f64, hint: PhaseHint) -> Self {
        SingularityDescriptor {
            location: wrap_angle(location),
            class: SingularityClass::OscillatoryNonabsolute,
            phase_hint: Some(hint),
        }
    }

    pub fn blowup(location: f64, hint: Option<PhaseHint>) -> Self {
        SingularityDescriptor {
            location: wrap_angle(location),
            class: SingularityClass::Blowup,
            phase_hint: hint,
        }
    }
}

impl fmt::Debug for SingularityDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SingularityDescriptor")
            .field("location", &self.location)
            .field("class", &self.class)
            .field("has_hint", &self.phase_hint.is_some())
            .finish()
    }
}

/// One rectangular spike: `height` on `(center - half_width, center + half_width)`.
#[derive(Clone, Copy, Debug)]
pub struct Spike {
    pub center: f64,
    pub half_width: f64,
    pub height: f64,
}

#[derive(Clone)]
pub struct SlowDecayKind {
    pub a: EvalFn,
    pub a_prime: EvalFn,
    /// 1 / (1/2 - 1/(π cos(1/2))).
    pub inv_c0: f64,
    pub variant: SlowDecayVariant,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SlowDecayVariant {
    Alexiewicz,
    Lp(f64),
}

#[derive(Clone)]
enum Kind {
    ClosedForm {
        eval: EvalFn,
        deriv: Option<EvalFn>,
    },
    /// `values[i]` on `[breaks[i], breaks[i+1])`; the last segment wraps
    /// through ±π back to `breaks[0]`.
    PiecewiseConstant {
        breaks: Vec<f64>,
        values: Vec<f64>,
    },
    SpikeFamily {
        spikes: Vec<Spike>,
    },
    /// `amp · sin(n θ + phase)`.
    SineMode {
        n: u32,
        amp: f64,
        phase: f64,
    },
    SlowDecay(SlowDecayKind),
    /// Linear interpolation through strictly increasing sample points.
    Tabulated {
        thetas: Vec<f64>,
        values: Vec<f64>,
    },
    Sum(Vec<(f64, BoundaryFunction)>),
}

/// A 2π-periodic real boundary trace with singularity metadata.
#[derive(Clone)]
pub struct BoundaryFunction {
    kind: Kind,
    singularities: Vec<SingularityDescriptor>,
    label: String,
}

impl fmt::Debug for BoundaryFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BoundaryFunction({})", self.label)
    }
}

impl BoundaryFunction {
    pub fn constant(c: f64) -> Self {
        BoundaryFunction {
            kind: Kind::PiecewiseConstant {
                breaks: vec![-PI],
                values: vec![c],
            },
            singularities: Vec::new(),
            label: format!("const({c})"),
        }
    }

    /// `amp · sin(n θ)`.
    pub fn sine(n: u32, amp: f64) -> Self {
        assert!(n >= 1, "sine mode index must be >= 1");
        BoundaryFunction {
            kind: Kind::SineMode { n, amp, phase: 0.0 },
            singularities: Vec::new(),
            label: if amp == 1.0 {
                format!("sine({n})")
            } else {
                format!("sine({n},{amp})")
            },
        }
    }

    /// `amp · cos(n θ)`, stored as a phase-shifted sine mode.
    pub fn cosine(n: u32, amp: f64) -> Self {
        assert!(n >= 1, "cosine mode index must be >= 1");
        BoundaryFunction {
            kind: Kind::SineMode {
                n,
                amp,
                phase: PI / 2.0,
            },
            singularities: Vec::new(),
            label: if amp == 1.0 {
                format!("cosine({n})")
            } else {
                format!("cosine({n},{amp})")
            },
        }
    }

    /// Indicator `χ_[a, b)` with `-π ≤ a < b ≤ π`.
    pub fn indicator(a: f64, b: f64) -> Result<Self> {
        if !(-PI..PI).contains(&a) || !(a..=PI).contains(&b) || a >= b {
            return Err(Error::Domain(format!(
                "indicator requires -π ≤ a < b ≤ π, got ({a}, {b})"
            )));
        }
        let (breaks, values) = if b >= PI {
            if a == -PI {
                (vec![-PI], vec![1.0])
            } else {
                (vec![-PI, a], vec![0.0, 1.0])
            }
        } else if a == -PI {
            (vec![-PI, b], vec![1.0, 0.0])
        } else {
            (vec![a, b], vec![1.0, 0.0])
        };
        let mut out = BoundaryFunction::piecewise_constant(breaks, values)?;
        out.label = format!("chi({a},{b})");
        Ok(out)
    }

    /// Piecewise constant with strictly increasing breakpoints in `[-π, π)`.
    pub fn piecewise_constant(breaks: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if breaks.is_empty() || breaks.len() != values.len() {
            return Err(Error::Domain(
                "piecewise constant needs equally many breakpoints and values".into(),
            ));
        }
        for w in breaks.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::Domain(
                    "piecewise breakpoints must be strictly increasing".into(),
                ));
            }
        }
        if breaks[0] < -PI || *breaks.last().unwrap() >= PI {
            return Err(Error::Domain(
                "piecewise breakpoints must lie in [-π, π)".into(),
            ));
        }
        let m = values.len();
        let singularities = (0..m)
            .filter(|&i| values[i] != values[(i + m - 1) % m])
            .map(|i| SingularityDescriptor::jump(breaks[i]))
            .collect();
        Ok(BoundaryFunction {
            kind: Kind::PiecewiseConstant { breaks, values },
            singularities,
            label: "piecewise".into(),
        })
    }

    /// Spike family over pairwise disjoint intervals.
    pub fn spike_family(mut spikes: Vec<Spike>) -> Result<Self> {
        spikes.sort_by(|a, b| a.center.partial_cmp(&b.center).unwrap());
        for s in &spikes {
            if !(s.half_width > 0.0) || !s.center.is_finite() {
                return Err(Error::Domain("spike intervals must have positive width".into()));
            }
        }
        for w in spikes.windows(2) {
            if w[0].center + w[0].half_width > w[1].center - w[1].half_width {
                return Err(Error::Domain("spike intervals must be pairwise disjoint".into()));
            }
        }
        if let (Some(first), Some(last)) = (spikes.first(), spikes.last()) {
            if last.center + last.half_width - TAU > first.center - first.half_width {
                return Err(Error::Domain("spike intervals overlap across the period".into()));
            }
        }
        let singularities = spikes
            .iter()
            .flat_map(|s| {
                [
                    SingularityDescriptor::jump(s.center - s.half_width),
                    SingularityDescriptor::jump(s.center + s.half_width),
                ]
            })
            .collect();
        Ok(BoundaryFunction {
            kind: Kind::SpikeFamily { spikes },
            singularities,
            label: "spikes".into(),
        })
    }

    pub fn tabulated(thetas: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if thetas.len() != values.len() || thetas.len() < 2 {
            return Err(Error::Domain("tabulated trace needs at least two samples".into()));
        }
        for w in thetas.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::Domain("tabulated θ must be strictly increasing".into()));
            }
        }
        if thetas[0] < -PI || *thetas.last().unwrap() >= PI {
            return Err(Error::Domain("tabulated θ must lie in [-π, π)".into()));
        }
        Ok(BoundaryFunction {
            kind: Kind::Tabulated { thetas, values },
            singularities: Vec::new(),
            label: "tab".into(),
        })
    }

    pub fn closed_form(
        label: impl Into<String>,
        eval: impl Fn(f64) -> f64 + Send + Sync + 'static,
        deriv: Option<EvalFn>,
        singularities: Vec<SingularityDescriptor>,
    ) -> Self {
        BoundaryFunction {
            kind: Kind::ClosedForm {
                eval: Arc::new(eval),
                deriv,
            },
            singularities,
            label: label.into(),
        }
    }

    pub(crate) fn slow_decay(kind: SlowDecayKind, label: String) -> Self {
        BoundaryFunction {
            kind: Kind::SlowDecay(kind),
            singularities: vec![
                SingularityDescriptor::jump(0.0),
                SingularityDescriptor::jump(1.0),
            ],
            label,
        }
    }

    /// Pointwise linear combination. Piecewise-constant terms merge exactly.
    pub fn combine(terms: Vec<(f64, BoundaryFunction)>) -> Self {
        let mut flat: Vec<(f64, BoundaryFunction)> = Vec::new();
        for (c, f) in terms {
            match f.kind {
                Kind::Sum(inner) => {
                    for (ci, fi) in inner {
                        flat.push((c * ci, fi));
                    }
                }
                _ => flat.push((c, f)),
            }
        }
        if flat.len() == 1 && flat[0].0 == 1.0 {
            return flat.pop().unwrap().1;
        }
        if let Some(merged) = merge_piecewise(&flat) {
            return merged;
        }
        let label = flat
            .iter()
            .map(|(c, f)| {
                if *c == 1.0 {
                    f.label.clone()
                } else {
                    format!("{c}*{}", f.label)
                }
            })
            .collect::<Vec<_>>()
            .join(" + ");
        let mut singularities = Vec::new();
        for (_, f) in &flat {
            singularities.extend(f.singularities.iter().cloned());
        }
        BoundaryFunction {
            kind: Kind::Sum(flat),
            singularities,
            label,
        }
    }

    pub fn scaled(self, c: f64) -> Self {
        let label = format!("{c}*{}", self.label);
        let mut out = match self.kind {
            Kind::PiecewiseConstant { breaks, values } => BoundaryFunction {
                kind: Kind::PiecewiseConstant {
                    breaks,
                    values: values.into_iter().map(|v| c * v).collect(),
                },
                singularities: self.singularities,
                label: String::new(),
            },
            Kind::SineMode { n, amp, phase } => BoundaryFunction {
                kind: Kind::SineMode {
                    n,
                    amp: c * amp,
                    phase,
                },
                singularities: self.singularities,
                label: String::new(),
            },
            Kind::SpikeFamily { spikes } => BoundaryFunction {
                kind: Kind::SpikeFamily {
                    spikes: spikes
                        .into_iter()
                        .map(|s| Spike {
                            height: c * s.height,
                            ..s
                        })
                        .collect(),
                },
                singularities: self.singularities,
                label: String::new(),
            },
            Kind::Tabulated { thetas, values } => BoundaryFunction {
                kind: Kind::Tabulated {
                    thetas,
                    values: values.into_iter().map(|v| c * v).collect(),
                },
                singularities: self.singularities,
                label: String::new(),
            },
            Kind::Sum(terms) => BoundaryFunction {
                kind: Kind::Sum(terms.into_iter().map(|(ci, f)| (c * ci, f)).collect()),
                singularities: self.singularities,
                label: String::new(),
            },
            kind @ (Kind::ClosedForm { .. } | Kind::SlowDecay(_)) => {
                let singularities = self.singularities.clone();
                BoundaryFunction {
                    kind: Kind::Sum(vec![(
                        c,
                        BoundaryFunction {
                            kind,
                            singularities: self.singularities,
                            label: self.label,
                        },
                    )]),
                    singularities,
                    label: String::new(),
                }
            }
        };
        out.label = label;
        out
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn singularities(&self) -> &[SingularityDescriptor] {
        &self.singularities
    }

    /// Locations in `[-π, π)` where smoothness breaks: registered singular
    /// points plus kind-level breakpoints (spike edges, tabulation knots).
    pub fn split_points(&self) -> Vec<f64> {
        let mut pts: Vec<f64> = self.singularities.iter().map(|s| s.location).collect();
        self.kind_splits(&mut pts);
        pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
        pts.dedup_by(|a, b| (*a - *b).abs() < 1e-13);
        pts
    }

    fn kind_splits(&self, pts: &mut Vec<f64>) {
        match &self.kind {
            Kind::PiecewiseConstant { breaks, .. } => pts.extend_from_slice(breaks),
            Kind::SpikeFamily { spikes } => {
                for s in spikes {
                    pts.push(wrap_angle(s.center - s.half_width));
                    pts.push(wrap_angle(s.center + s.half_width));
                }
            }
            Kind::Tabulated { thetas, .. } => pts.extend_from_slice(thetas),
            Kind::SlowDecay(_) => pts.extend_from_slice(&[0.0, 1.0]),
            Kind::Sum(terms) => {
                for (_, f) in terms {
                    f.kind_splits(pts);
                }
            }
            Kind::ClosedForm { .. } | Kind::SineMode { .. } => {}
        }
    }

    /// Periodic evaluation without singularity checks. At singular points the
    /// underlying formula decides (possibly NaN/∞); quadrature never lands
    /// there because panels split at registered locations.
    pub fn raw(&self, theta: f64) -> f64 {
        let t = wrap_angle(theta);
        self.kind_eval(t)
    }

    fn kind_eval(&self, t: f64) -> f64 {
        match &self.kind {
            Kind::ClosedForm { eval, .. } => eval(t),
            Kind::PiecewiseConstant { breaks, values } => {
                let idx = match breaks.binary_search_by(|b| b.partial_cmp(&t).unwrap()) {
                    Ok(i) => i,
                    Err(0) => values.len() - 1, // wrap segment
                    Err(i) => i - 1,
                };
                values[idx]
            }
            Kind::SpikeFamily { spikes } => {
                for s in spikes {
                    // half-open [c-w, c+w) keeps evaluation right-continuous;
                    // compare in wrapped distance so spikes near ±π work
                    let d = wrap_angle(t - s.center);
                    if (-s.half_width..s.half_width).contains(&d) {
                        return s.height;
                    }
                }
                0.0
            }
            Kind::SineMode { n, amp, phase } => amp * (*n as f64 * t + phase).sin(),
            Kind::SlowDecay(sd) => slow_decay_eval(sd, t),
            Kind::Tabulated { thetas, values } => {
                let n = thetas.len();
                let (t0, v0, t1, v1) = if t < thetas[0] {
                    (thetas[n - 1] - TAU, values[n - 1], thetas[0], values[0])
                } else if t >= thetas[n - 1] {
                    (thetas[n - 1], values[n - 1], thetas[0] + TAU, values[0])
                } else {
                    let i = match thetas.binary_search_by(|x| x.partial_cmp(&t).unwrap()) {
                        Ok(i) => i,
                        Err(i) => i - 1,
                    };
                    (thetas[i], values[i], thetas[i + 1], values[i + 1])
                };
                v0 + (v1 - v0) * (t - t0) / (t1 - t0)
            }
            Kind::Sum(terms) => terms.iter().map(|(c, f)| c * f.raw(t)).sum(),
        }
    }

    /// Evaluate at θ (reduced mod 2π). Returns the right limit at jump
    /// points; evaluation exactly at a blowup or oscillatory point is
    /// undefined.
    pub fn evaluate(&self, theta: f64) -> Result<f64> {
        if !theta.is_finite() {
            return Err(Error::Domain(format!("non-finite evaluation point {theta}")));
        }
        let t = wrap_angle(theta);
        for s in &self.singularities {
            if (t - s.location).abs() < 1e-14 {
                match s.class {
                    SingularityClass::Jump => return Ok(self.right_limit(s.location)),
                    _ => {
                        return Err(Error::UndefinedAtSingularity {
                            location: s.location,
                        })
                    }
                }
            }
        }
        Ok(self.kind_eval(t))
    }

    fn right_limit(&self, loc: f64) -> f64 {
        match &self.kind {
            // piecewise kinds use right-closed segments already
            Kind::PiecewiseConstant { .. }
            | Kind::SpikeFamily { .. }
            | Kind::SlowDecay(_)
            | Kind::Tabulated { .. } => self.kind_eval(loc),
            _ => self.kind_eval(loc + 1e-12),
        }
    }

    /// Antiderivative-based integral over `[a, b]`, exact for piecewise and
    /// trigonometric kinds. `None` when only quadrature can do it.
    pub fn exact_integral(&self, a: f64, b: f64) -> Option<f64> {
        if b < a {
            return self.exact_integral(b, a).map(|v| -v);
        }
        match &self.kind {
            Kind::SineMode { n, amp, phase } => {
                let nf = *n as f64;
                Some(-amp / nf * ((nf * b + phase).cos() - (nf * a + phase).cos()))
            }
            Kind::SlowDecay(sd) if matches!(sd.variant, SlowDecayVariant::Lp(_)) => None,
            Kind::PiecewiseConstant { .. }
            | Kind::SpikeFamily { .. }
            | Kind::SlowDecay(_)
            | Kind::Tabulated { .. } => {
                let mut total = 0.0;
                for_each_base_segment(a, b, |lo, hi| {
                    total += self.base_segment_integral(lo, hi);
                });
                Some(total)
            }
            Kind::Sum(terms) => {
                let mut total = 0.0;
                for (c, f) in terms {
                    total += c * f.exact_integral(a, b)?;
                }
                Some(total)
            }
            Kind::ClosedForm { .. } => None,
        }
    }

    /// Integral over `[lo, hi] ⊆ [-π, π)` for kinds with exact segment sums.
    fn base_segment_integral(&self, lo: f64, hi: f64) -> f64 {
        match &self.kind {
            Kind::PiecewiseConstant { breaks, values } => {
                let mut total = 0.0;
                let m = breaks.len();
                for i in 0..m {
                    let seg_lo = breaks[i];
                    let seg_hi = if i + 1 < m { breaks[i + 1] } else { PI };
                    total += values[i] * overlap(lo, hi, seg_lo, seg_hi);
                }
                // wrap part [-π, breaks[0]) carries the last value
                total += values[m - 1] * overlap(lo, hi, -PI, breaks[0]);
                total
            }
            Kind::SpikeFamily { spikes } => {
                // sum over the periodic copies that can intersect [lo, hi]
                let mut total = 0.0;
                for s in spikes {
                    let c = wrap_angle(s.center);
                    for shift in [-TAU, 0.0, TAU] {
                        total += s.height
                            * overlap(
                                lo,
                                hi,
                                c - s.half_width + shift,
                                c + s.half_width + shift,
                            );
                    }
                }
                total
            }
            Kind::SlowDecay(sd) => {
                let lo = lo.clamp(0.0, 1.0);
                let hi = hi.clamp(0.0, 1.0);
                if hi <= lo {
                    return 0.0;
                }
                match sd.variant {
                    SlowDecayVariant::Alexiewicz => {
                        sd.inv_c0 * ((sd.a)(1.0 - hi) - (sd.a)(1.0 - lo))
                    }
                    // no elementary antiderivative for the L^p profile;
                    // callers fall back to quadrature via exact_integral=None
                    SlowDecayVariant::Lp(_) => unreachable!("checked in exact_integral"),
                }
            }
            Kind::Tabulated { thetas, .. } => {
                // trapezoid over the linear interpolant, exact
                let mut total = 0.0;
                let mut knots: Vec<f64> = vec![lo];
                for &t in thetas {
                    if t > lo && t < hi {
                        knots.push(t);
                    }
                }
                knots.push(hi);
                for w in knots.windows(2) {
                    let f0 = self.kind_eval(w[0]);
                    let f1 = self.kind_eval(w[1]);
                    total += 0.5 * (f0 + f1) * (w[1] - w[0]);
                }
                total
            }
            _ => unreachable!(),
        }
    }

    /// Pointwise derivative where one is analytically available.
    pub fn derivative_raw(&self, theta: f64) -> Option<f64> {
        let t = wrap_angle(theta);
        match &self.kind {
            Kind::ClosedForm { deriv, .. } => deriv.as_ref().map(|d| d(t)),
            Kind::SineMode { n, amp, phase } => {
                let nf = *n as f64;
                Some(amp * nf * (nf * t + phase).cos())
            }
            Kind::PiecewiseConstant { .. } | Kind::SpikeFamily { .. } => Some(0.0),
            Kind::Tabulated { .. } | Kind::SlowDecay(_) => None,
            Kind::Sum(terms) => {
                let mut acc = 0.0;
                for (c, f) in terms {
                    acc += c * f.derivative_raw(t)?;
                }
                Some(acc)
            }
        }
    }

    fn has_nonjump_singularity(&self) -> bool {
        self.singularities
            .iter()
            .any(|s| s.class != SingularityClass::Jump)
    }

    /// `(n, amp, phase)` when this is a single trigonometric mode.
    pub fn as_sine_mode(&self) -> Option<(u32, f64, f64)> {
        match &self.kind {
            Kind::SineMode { n, amp, phase } => Some((*n, *amp, *phase)),
            _ => None,
        }
    }

    /// Breakpoints and segment values when this is piecewise constant.
    pub fn as_piecewise(&self) -> Option<(&[f64], &[f64])> {
        match &self.kind {
            Kind::PiecewiseConstant { breaks, values } => Some((breaks, values)),
            _ => None,
        }
    }

    pub fn as_spikes(&self) -> Option<&[Spike]> {
        match &self.kind {
            Kind::SpikeFamily { spikes } => Some(spikes),
            _ => None,
        }
    }

    pub fn as_sum(&self) -> Option<&[(f64, BoundaryFunction)]> {
        match &self.kind {
            Kind::Sum(terms) => Some(terms),
            _ => None,
        }
    }

    pub fn as_slow_decay(&self) -> Option<&SlowDecayKind> {
        match &self.kind {
            Kind::SlowDecay(sd) => Some(sd),
            _ => None,
        }
    }
}

fn slow_decay_eval(sd: &SlowDecayKind, t: f64) -> f64 {
    if t <= 0.0 || t >= 1.0 {
        return 0.0;
    }
    let neg_ap = -(sd.a_prime)(1.0 - t);
    match sd.variant {
        SlowDecayVariant::Alexiewicz => sd.inv_c0 * neg_ap,
        SlowDecayVariant::Lp(p) => {
            let a = (sd.a)(1.0 - t);
            sd.inv_c0 * p.powf(1.0 / p) * a.powf(1.0 - 1.0 / p) * neg_ap.powf(1.0 / p)
        }
    }
}

fn overlap(lo: f64, hi: f64, a: f64, b: f64) -> f64 {
    (hi.min(b) - lo.max(a)).max(0.0)
}

/// Apply `f` to the pieces of `[a, b]` (length ≤ 2π) mapped into `[-π, π)`.
pub(crate) fn for_each_base_segment(a: f64, b: f64, mut f: impl FnMut(f64, f64)) {
    debug_assert!(b - a <= TAU + 1e-12);
    let shift = TAU * ((a + PI) / TAU).floor();
    let (a, b) = (a - shift, b - shift);
    if b <= PI {
        f(a, b);
    } else {
        f(a, PI);
        f(-PI, b - TAU);
    }
}

fn merge_piecewise(terms: &[(f64, BoundaryFunction)]) -> Option<BoundaryFunction> {
    // every term must reduce to a piecewise-constant profile
    let mut breaks: Vec<f64> = vec![-PI];
    for (_, f) in terms {
        match &f.kind {
            Kind::PiecewiseConstant { breaks: b, .. } => breaks.extend_from_slice(b),
            Kind::SpikeFamily { spikes } => {
                for s in spikes {
                    breaks.push(wrap_angle(s.center - s.half_width));
                    breaks.push(wrap_angle(s.center + s.half_width));
                }
            }
            _ => return None,
        }
    }
    breaks.sort_by(|a, b| a.partial_cmp(b).unwrap());
    breaks.dedup_by(|a, b| (*a - *b).abs() < 1e-15);
    // evaluate at segment midpoints so open/closed edge conventions cannot bite
    let m = breaks.len();
    let values: Vec<f64> = (0..m)
        .map(|i| {
            let hi = if i + 1 < m { breaks[i + 1] } else { breaks[0] + TAU };
            let mid = 0.5 * (breaks[i] + hi);
            terms.iter().map(|(c, f)| c * f.raw(mid)).sum()
        })
        .collect();
    let label = terms
        .iter()
        .map(|(c, f)| {
            if *c == 1.0 {
                f.label.clone()
            } else {
                format!("{c}*{}", f.label)
            }
        })
        .collect::<Vec<_>>()
        .join(" + ");
    let mut out = BoundaryFunction::piecewise_constant(breaks, values).ok()?;
    out.label = label;
    Some(out)
}

// ---------------------------------------------------------------------------
// Bounded variation
// ---------------------------------------------------------------------------

/// A boundary function of finite variation with cached total variation and
/// NBV normalization flags.
#[derive(Clone)]
pub struct BVFunction {
    base: BoundaryFunction,
    variation: f64,
    right_continuous: bool,
    normalized_at_start: bool,
}

impl fmt::Debug for BVFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BVFunction({}, V = {})", self.base.label, self.variation)
    }
}

impl BVFunction {
    /// Wraps `base`, computing its total variation over one period.
    ///
    /// Fails with `NotBoundedVariation` when `base` carries an oscillatory
    /// or blowup singularity.
    pub fn new(base: BoundaryFunction, spec: &QuadratureSpec) -> Result<Self> {
        if base.has_nonjump_singularity() {
            return Err(Error::NotBoundedVariation(format!(
                "{} has a non-jump singularity",
                base.label
            )));
        }
        let variation = total_variation(&base, spec)?;
        let right_continuous = matches!(
            base.kind,
            Kind::PiecewiseConstant { .. }
                | Kind::SpikeFamily { .. }
                | Kind::SineMode { .. }
                | Kind::SlowDecay(_)
                | Kind::Tabulated { .. }
        ) || base.singularities.is_empty();
        let normalized_at_start = right_continuous && base.right_limit(-PI).abs() < 1e-13;
        Ok(BVFunction {
            base,
            variation,
            right_continuous,
            normalized_at_start,
        })
    }

    pub fn base(&self) -> &BoundaryFunction {
        &self.base
    }

    /// Total variation over one period (including the wrap point).
    pub fn variation(&self) -> f64 {
        self.variation
    }

    /// Member of the normalized-BV class: right continuous and 0 at -π.
    pub fn is_nbv(&self) -> bool {
        self.right_continuous && self.normalized_at_start
    }

    /// Infimum of |g| over `[-π, π]`.
    pub fn inf_abs(&self) -> f64 {
        inf_abs_impl(&self.base)
    }

    /// The right-continuous representative shifted to vanish at -π.
    /// Variation is unchanged.
    pub fn nbv_normalize(&self, spec: &QuadratureSpec) -> Result<BVFunction> {
        let c = self.base.right_limit(-PI);
        if self.is_nbv() && c.abs() < 1e-15 {
            return Ok(self.clone());
        }
        let base = nbv_view(&self.base, c);
        let mut out = BVFunction::new(base, spec)?;
        out.right_continuous = true;
        out.normalized_at_start = true;
        Ok(out)
    }
}

fn nbv_view(base: &BoundaryFunction, c: f64) -> BoundaryFunction {
    match &base.kind {
        Kind::PiecewiseConstant { breaks, values } => BoundaryFunction {
            kind: Kind::PiecewiseConstant {
                breaks: breaks.clone(),
                values: values.iter().map(|v| v - c).collect(),
            },
            singularities: base.singularities.clone(),
            label: format!("nbv({})", base.label),
        },
        _ => {
            let inner = base.clone();
            let jumps: Vec<f64> = base
                .singularities
                .iter()
                .filter(|s| s.class == SingularityClass::Jump)
                .map(|s| s.location)
                .collect();
            BoundaryFunction::closed_form(
                format!("nbv({})", base.label),
                move |t| {
                    let at_jump = jumps.iter().any(|&j| (t - j).abs() < 1e-14);
                    let v = if at_jump {
                        inner.raw(t + 1e-12)
                    } else {
                        inner.raw(t)
                    };
                    v - c
                },
                None,
                base.singularities.clone(),
            )
        }
    }
}

/// Total variation of `f` over one period, including the wrap point.
pub fn total_variation(f: &BoundaryFunction, spec: &QuadratureSpec) -> Result<f64> {
    match &f.kind {
        Kind::SineMode { n, amp, .. } => Ok(4.0 * *n as f64 * amp.abs()),
        Kind::PiecewiseConstant { values, .. } => {
            let m = values.len();
            Ok((0..m)
                .map(|i| (values[i] - values[(i + m - 1) % m]).abs())
                .sum())
        }
        Kind::SpikeFamily { spikes } => Ok(spikes.iter().map(|s| 2.0 * s.height.abs()).sum()),
        Kind::Tabulated { values, .. } => {
            let mut v: f64 = values.windows(2).map(|w| (w[1] - w[0]).abs()).sum();
            v += (values[0] - values[values.len() - 1]).abs();
            Ok(v)
        }
        Kind::Sum(terms) if terms.len() == 1 => {
            Ok(terms[0].0.abs() * total_variation(&terms[0].1, spec)?)
        }
        Kind::ClosedForm {
            deriv: Some(d), ..
        } => {
            // V = ∫|g'| plus registered jump magnitudes
            let d = d.clone();
            let mut splits = f.split_points();
            splits.extend(sign_change_points(|t| d(t), &splits, 2048));
            splits.sort_by(|a, b| a.partial_cmp(b).unwrap());
            splits.dedup_by(|a, b| (*a - *b).abs() < 1e-12);
            let smooth = quad::adaptive_closure(
                |t| d(t).abs(),
                -PI,
                PI,
                &splits,
                spec.abs_tol.max(1e-12),
                spec.rel_tol,
                spec.max_depth,
            )?;
            let jumps: f64 = f
                .singularities
                .iter()
                .filter(|s| s.class == SingularityClass::Jump)
                .map(|s| (f.raw(s.location + 1e-9) - f.raw(s.location - 1e-9)).abs())
                .sum();
            Ok(smooth.value + jumps)
        }
        _ => Ok(grid_variation(f, 1e-9)),
    }
}

/// Richardson-refined grid variation for kinds without derivatives.
fn grid_variation(f: &BoundaryFunction, tol: f64) -> f64 {
    let straddles: Vec<f64> = f
        .split_points()
        .iter()
        .flat_map(|&p| [p - 1e-11, p + 1e-11])
        .collect();
    let sum_for = |n: usize| -> f64 {
        let mut xs: Vec<f64> = (0..=n).map(|i| -PI + TAU * i as f64 / n as f64).collect();
        xs.extend_from_slice(&straddles);
        xs.retain(|x| (-PI..=PI).contains(x));
        xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
        xs.dedup();
        let mut v = 0.0;
        let mut prev = f.raw(xs[0]);
        for &x in &xs[1..] {
            let cur = f.raw(x);
            v += (cur - prev).abs();
            prev = cur;
        }
        // close the period
        v += (f.raw(xs[0] + TAU) - prev).abs();
        v
    };
    let mut n = 4096;
    let mut coarse = sum_for(n);
    loop {
        n *= 2;
        let fine = sum_for(n);
        let extrap = fine + (fine - coarse) / 3.0;
        if (fine - coarse).abs() < tol.max(1e-12 * fine.abs()) || n >= 1 << 21 {
            return extrap;
        }
        coarse = fine;
    }
}

fn sign_change_points(f: impl Fn(f64) -> f64, avoid: &[f64], n: usize) -> Vec<f64> {
    let mut zeros = Vec::new();
    let mut prev_x = -PI + 1e-12;
    let mut prev = f(prev_x);
    for i in 1..=n {
        let x = -PI + TAU * i as f64 / n as f64 - 1e-12;
        let cur = f(x);
        if prev == 0.0 || prev.signum() != cur.signum() {
            let (mut lo, mut hi) = (prev_x, x);
            let mut flo = prev;
            for _ in 0..60 {
                let mid = 0.5 * (lo + hi);
                let fm = f(mid);
                if fm == 0.0 {
                    lo = mid;
                    break;
                }
                if flo.signum() == fm.signum() {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            let z = 0.5 * (lo + hi);
            if !avoid.iter().any(|&a| (a - z).abs() < 1e-10) {
                zeros.push(z);
            }
        }
        prev_x = x;
        prev = cur;
    }
    zeros
}

fn inf_abs_impl(f: &BoundaryFunction) -> f64 {
    match &f.kind {
        Kind::SineMode { .. } => 0.0,
        Kind::PiecewiseConstant { values, .. } => {
            values.iter().fold(f64::INFINITY, |m, v| m.min(v.abs()))
        }
        Kind::SpikeFamily { spikes } => {
            let covered: f64 = spikes.iter().map(|s| 2.0 * s.half_width).sum();
            if covered < TAU - 1e-12 {
                0.0
            } else {
                spikes.iter().fold(f64::INFINITY, |m, s| m.min(s.height.abs()))
            }
        }
        Kind::Tabulated { values, .. } => {
            let mut m = f64::INFINITY;
            let vals = values;
            for w in vals.windows(2) {
                m = m.min(segment_min_abs(w[0], w[1]));
            }
            m.min(segment_min_abs(vals[vals.len() - 1], vals[0]))
        }
        Kind::SlowDecay(_) => 0.0,
        _ => sampled_inf_abs(f),
    }
}

fn segment_min_abs(a: f64, b: f64) -> f64 {
    if a.signum() != b.signum() {
        0.0
    } else {
        a.abs().min(b.abs())
    }
}

fn sampled_inf_abs(f: &BoundaryFunction) -> f64 {
    let n = 1 << 13;
    let mut best = f64::INFINITY;
    let mut best_x = -PI;
    for i in 0..n {
        let x = -PI + TAU * (i as f64 + 0.5) / n as f64;
        let v = f.raw(x).abs();
        if v < best {
            best = v;
            best_x = x;
        }
    }
    for s in f.singularities() {
        for x in [s.location - 1e-10, s.location + 1e-10] {
            let v = f.raw(x).abs();
            if v < best {
                best = v;
                best_x = x;
            }
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
        if f1 < f2 {
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
    best.min(f1).min(f2)
}

// ---------------------------------------------------------------------------
// Measures
// ---------------------------------------------------------------------------

/// A finite positive Borel measure on `[-π, π)`: point masses plus an
/// absolutely integrable density.
#[derive(Clone)]
pub struct RadialMeasure {
    atoms: Vec<(f64, f64)>,
    density: Option<BoundaryFunction>,
    total_mass: f64,
    label: String,
}

impl fmt::Debug for RadialMeasure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RadialMeasure({}, |μ| = {})", self.label, self.total_mass)
    }
}

impl RadialMeasure {
    pub fn new(
        atoms: Vec<(f64, f64)>,
        density: Option<BoundaryFunction>,
        spec: &QuadratureSpec,
    ) -> Result<Self> {
        let mut wrapped = Vec::with_capacity(atoms.len());
        for (loc, mass) in atoms {
            if !(mass > 0.0) {
                return Err(Error::Domain(format!("atom mass must be positive, got {mass}")));
            }
            wrapped.push((wrap_angle(loc), mass));
        }
        let mut total: f64 = wrapped.iter().map(|(_, m)| m).sum();
        if let Some(d) = &density {
            if d.has_nonjump_singularity() {
                return Err(Error::Domain(
                    "measure density must be of absolutely integrable kind".into(),
                ));
            }
            for i in 0..512 {
                let x = -PI + TAU * (i as f64 + 0.5) / 512.0;
                if d.raw(x) < -1e-12 {
                    return Err(Error::Domain("measure density must be nonnegative".into()));
                }
            }
            total += match d.exact_integral(-PI, PI) {
                Some(v) => v,
                None => quad::integrate(d, -PI, PI, spec)?.value,
            };
        }
        if !(total > 0.0) {
            return Err(Error::Domain("measure must have positive total mass".into()));
        }
        let label = if wrapped.len() == 1 && density.is_none() {
            format!("dirac({})", wrapped[0].0)
        } else {
            "measure".into()
        };
        Ok(RadialMeasure {
            atoms: wrapped,
            density,
            total_mass: total,
            label,
        })
    }

    /// Unit point mass at θ.
    pub fn dirac(theta: f64, spec: &QuadratureSpec) -> Self {
        RadialMeasure::new(vec![(theta, 1.0)], None, spec).unwrap()
    }

    pub fn atoms(&self) -> &[(f64, f64)] {
        &self.atoms
    }

    pub fn density(&self) -> Option<&BoundaryFunction> {
        self.density.as_ref()
    }

    pub fn total_mass(&self) -> f64 {
        self.total_mass
    }

    pub fn label(&self) -> &str {
        &self.label
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec() -> QuadratureSpec {
        QuadratureSpec::default()
    }

    #[test]
    fn wrap_reduces_to_base_period() {
        assert!((wrap_angle(3.0 * PI + 0.25) - (-PI + 0.25)).abs() < 1e-12);
        assert_eq!(wrap_angle(PI), -PI);
        assert_eq!(wrap_angle(-PI), -PI);
    }

    #[test]
    fn sine_mode_evaluates_exactly() {
        // sin(3 · π/6) = sin(π/2) = 1
        let f = BoundaryFunction::sine(3, 1.0);
        assert_eq!(f.evaluate(PI / 6.0).unwrap(), 1.0);
    }

    #[test]
    fn indicator_evaluates_right_continuously() {
        let f = BoundaryFunction::indicator(0.0, 1.0).unwrap();
        assert_eq!(f.evaluate(0.0).unwrap(), 1.0);
        assert_eq!(f.evaluate(1.0).unwrap(), 0.0);
        assert_eq!(f.evaluate(0.5).unwrap(), 1.0);
        assert_eq!(f.evaluate(-0.5).unwrap(), 0.0);
        // periodicity
        assert_eq!(f.evaluate(0.5 + TAU).unwrap(), 1.0);
    }

    #[test]
    fn indicator_variation_is_two_jumps() {
        let g = BVFunction::new(
            BoundaryFunction::indicator(-1.0, 2.0).unwrap(),
            &spec(),
        )
        .unwrap();
        assert!((g.variation() - 2.0).abs() < 1e-15);
        assert_eq!(g.inf_abs(), 0.0);
    }

    #[test]
    fn cosine_variation_is_4n() {
        for n in [1u32, 3, 7] {
            let g = BVFunction::new(BoundaryFunction::cosine(n, 1.0), &spec()).unwrap();
            assert!((g.variation() - 4.0 * n as f64).abs() < 1e-12, "n = {n}");
            assert_eq!(g.inf_abs(), 0.0);
        }
    }

    #[test]
    fn spike_variation_is_twice_total_height() {
        let spikes = vec![
            Spike { center: 0.5, half_width: 0.1, height: 2.0 },
            Spike { center: 1.5, half_width: 0.2, height: 3.0 },
        ];
        let g = BVFunction::new(BoundaryFunction::spike_family(spikes).unwrap(), &spec()).unwrap();
        assert!((g.variation() - 10.0).abs() < 1e-15);
    }

    #[test]
    fn constant_inf_abs_is_abs_value() {
        let g = BVFunction::new(BoundaryFunction::constant(-3.5), &spec()).unwrap();
        assert_eq!(g.inf_abs(), 3.5);
        assert_eq!(g.variation(), 0.0);
    }

    #[test]
    fn nbv_normalize_shifts_constant_to_zero() {
        let g = BVFunction::new(BoundaryFunction::constant(5.0), &spec()).unwrap();
        let h = g.nbv_normalize(&spec()).unwrap();
        assert!(h.is_nbv());
        assert_eq!(h.base().evaluate(0.3).unwrap(), 0.0);
        assert_eq!(h.variation(), 0.0);
    }

    #[test]
    fn nbv_normalize_is_idempotent_and_preserves_variation() {
        let g = BVFunction::new(
            BoundaryFunction::indicator(0.25, 1.5).unwrap(),
            &spec(),
        )
        .unwrap();
        assert!(g.is_nbv());
        let h = g.nbv_normalize(&spec()).unwrap();
        assert_eq!(h.variation(), g.variation());
        let hh = h.nbv_normalize(&spec()).unwrap();
        assert_eq!(hh.variation(), h.variation());
        for x in [-2.0, -0.5, 0.3, 1.0, 2.5] {
            assert_eq!(h.base().evaluate(x).unwrap(), g.base().evaluate(x).unwrap());
        }
    }

    #[test]
    fn left_continuous_step_becomes_right_continuous() {
        let f = BoundaryFunction::closed_form(
            "left-step",
            |t| if t <= 0.5 { 1.0 } else { 0.0 },
            None,
            vec![SingularityDescriptor::jump(0.5)],
        );
        let g = BVFunction::new(f, &spec()).unwrap();
        let h = g.nbv_normalize(&spec()).unwrap();
        // same values off the jump, shifted by g(-π) = 1
        assert_eq!(h.base().evaluate(0.0).unwrap(), 0.0);
        assert_eq!(h.base().evaluate(1.0).unwrap(), -1.0);
        // at the jump: right limit
        assert_eq!(h.base().evaluate(0.5).unwrap(), -1.0);
    }

    #[test]
    fn oscillatory_kind_is_not_bv() {
        let f = BoundaryFunction::closed_form(
            "osc",
            |t: f64| if t == 0.0 { 0.0 } else { (1.0 / t).sin() / t },
            None,
            vec![SingularityDescriptor::oscillatory(0.0, PhaseHint::reciprocal(1.0))],
        );
        assert!(matches!(
            BVFunction::new(f, &spec()),
            Err(Error::NotBoundedVariation(_))
        ));
    }

    #[test]
    fn evaluate_errors_exactly_at_blowup() {
        let f = BoundaryFunction::closed_form(
            "blow",
            |t: f64| 1.0 / t.abs().sqrt(),
            None,
            vec![SingularityDescriptor::blowup(0.0, None)],
        );
        assert!(matches!(
            f.evaluate(0.0),
            Err(Error::UndefinedAtSingularity { .. })
        ));
        assert!(f.evaluate(0.5).is_ok());
    }

    #[test]
    fn piecewise_merge_is_exact() {
        let mix = BoundaryFunction::combine(vec![
            (1.0, BoundaryFunction::indicator(-1.0, 0.0).unwrap()),
            (-1.0, BoundaryFunction::indicator(0.0, 1.0).unwrap()),
        ]);
        assert_eq!(mix.evaluate(-0.5).unwrap(), 1.0);
        assert_eq!(mix.evaluate(0.5).unwrap(), -1.0);
        assert_eq!(mix.evaluate(2.0).unwrap(), 0.0);
        assert_eq!(mix.exact_integral(-PI, PI).unwrap(), 0.0);
        let g = BVFunction::new(mix, &spec()).unwrap();
        assert!((g.variation() - 4.0).abs() < 1e-15);
    }

    #[test]
    fn exact_integral_spans_wrap() {
        let f = BoundaryFunction::indicator(2.0, 3.0).unwrap();
        // interval [1.5, 1.5 + 2π] covers the spike once
        let v = f.exact_integral(1.5, 1.5 + TAU).unwrap();
        assert!((v - 1.0).abs() < 1e-14);
    }

    #[test]
    fn kernel_like_inf_abs_at_antipode() {
        // Φ_r(θ - θ0) has minimum (1-r)/(2π(1+r)) at the antipode of θ0.
        let r: f64 = 0.6;
        let theta0 = 0.8;
        let f = BoundaryFunction::closed_form(
            "kernel-shift",
            move |t: f64| {
                let d = (1.0 - r) * (1.0 - r) + 4.0 * r * ((t - theta0) / 2.0).sin().powi(2);
                (1.0 - r * r) / (TAU * d)
            },
            None,
            vec![],
        );
        let g = BVFunction::new(f, &spec()).unwrap();
        let expect = (1.0 - r) / (TAU * (1.0 + r));
        assert!((g.inf_abs() - expect).abs() < 1e-12);
    }

    #[test]
    fn dirac_measure_mass() {
        let mu = RadialMeasure::dirac(0.0, &spec());
        assert_eq!(mu.total_mass(), 1.0);
    }

    #[test]
    fn measure_mass_consistency_with_density() {
        let mu = RadialMeasure::new(
            vec![(-1.0, 0.5), (1.0, 0.5)],
            Some(BoundaryFunction::constant(1.0 / TAU)),
            &spec(),
        )
        .unwrap();
        assert!((mu.total_mass() - 2.0).abs() < 1e-10);
    }

    #[test]
    fn rejects_nonpositive_atoms() {
        assert!(RadialMeasure::new(vec![(0.0, 0.0)], None, &spec()).is_err());
        assert!(RadialMeasure::new(vec![(0.0, -1.0)], None, &spec()).is_err());
    }
}
