//! Quadrature engine against independent oracles: the sine-integral closed
//! form for the oscillatory path, brute-force prefix scans for the
//! Alexiewicz norm, and panel additivity.

use std::f64::consts::{PI, TAU};

use hk_poisson::boundary::{BoundaryFunction, PhaseHint, SingularityDescriptor};
use hk_poisson::quad::{alexiewicz_norm, indefinite, integrate, lp_norm, QuadratureSpec};

fn spec() -> QuadratureSpec {
    QuadratureSpec::default()
}

/// Sine integral Si(x) = ∫_0^x sin t / t dt by series for small x and the
/// auxiliary-function asymptotic expansion for large x. Good to ~1e-12 over
/// the ranges used here.
fn si(x: f64) -> f64 {
    assert!(x >= 0.0);
    if x <= 16.0 {
        // Σ (−1)^k x^{2k+1} / ((2k+1)(2k+1)!)
        let mut term = x;
        let mut sum = x;
        let mut k = 0u32;
        loop {
            k += 1;
            let two_k = 2 * k;
            term *= -x * x / ((two_k * (two_k + 1)) as f64);
            let contrib = term / (two_k + 1) as f64;
            sum += contrib;
            if contrib.abs() < 1e-17 * sum.abs().max(1.0) || k > 80 {
                return sum;
            }
        }
    }
    // Si(x) = π/2 − f(x)cos x − g(x)sin x with asymptotic f, g
    let inv2 = 1.0 / (x * x);
    let mut f = 0.0;
    let mut term = 1.0;
    for k in 0..10 {
        let t = term;
        f += t;
        term *= -((2 * k + 1) as f64) * ((2 * k + 2) as f64) * inv2;
        if term.abs() > t.abs() {
            break;
        }
    }
    f /= x;
    let mut g = 0.0;
    term = 1.0;
    for k in 0..10 {
        let t = term;
        g += t;
        term *= -((2 * k + 2) as f64) * ((2 * k + 3) as f64) * inv2;
        if term.abs() > t.abs() {
            break;
        }
    }
    g *= inv2;
    PI / 2.0 - f * x.cos() - g * x.sin()
}

fn two_over_theta_sine() -> BoundaryFunction {
    BoundaryFunction::closed_form(
        "(2/θ)sin(2/θ)",
        |t: f64| {
            if t == 0.0 {
                0.0
            } else {
                (2.0 / t) * (2.0 / t).sin()
            }
        },
        None,
        vec![SingularityDescriptor::oscillatory(0.0, PhaseHint::reciprocal(2.0))],
    )
}

#[test]
fn si_oracle_sanity() {
    // reference values (Abramowitz & Stegun 5.2, 12 digits)
    assert!((si(1.0) - 0.946083070367).abs() < 1e-11);
    assert!((si(2.0) - 1.605412976802).abs() < 1e-11);
    assert!((si(18.0) - 1.536608096261).abs() < 1e-10);
    // π/2 limit
    assert!((si(1e8) - PI / 2.0).abs() < 1e-7);
}

#[test]
fn oscillatory_integral_matches_si_closed_form() {
    // ∫_ε^1 (2/θ) sin(2/θ) dθ = 2[Si(2/ε) − Si(2)]
    let f = two_over_theta_sine();
    let s = spec();
    for eps in [1e-3, 1e-6] {
        let est = integrate(&f, eps, 1.0, &s).unwrap();
        let oracle = 2.0 * (si(2.0 / eps) - si(2.0));
        assert!(
            (est.value - oracle).abs() <= 1e-8,
            "ε = {eps}: engine {} vs oracle {} (diff {:.3e})",
            est.value,
            oracle,
            (est.value - oracle).abs()
        );
    }
}

#[test]
fn oscillatory_integral_from_the_singular_point() {
    // the improper integral from 0 itself: ∫_0^1 = 2[π/2 − Si(2)]
    let f = two_over_theta_sine();
    let est = integrate(&f, 0.0, 1.0, &spec()).unwrap();
    let oracle = 2.0 * (PI / 2.0 - si(2.0));
    assert!(
        (est.value - oracle).abs() <= 1e-8,
        "engine {} vs oracle {}",
        est.value,
        oracle
    );
}

#[test]
fn oscillatory_integral_spanning_the_singularity() {
    // two-sided: ∫_{-a}^{b} for the even integrand equals the sum of both
    // one-sided improper integrals
    let f = two_over_theta_sine();
    let s = spec();
    let est = integrate(&f, -0.5, 1.0, &s).unwrap();
    let left = integrate(&f, -0.5, 0.0, &s).unwrap();
    let right = integrate(&f, 0.0, 1.0, &s).unwrap();
    assert!((est.value - left.value - right.value).abs() <= 1e-9);
    // evenness: ∫_{-a}^0 = ∫_0^a
    let right_half = integrate(&f, 0.0, 0.5, &s).unwrap();
    assert!((left.value - right_half.value).abs() <= 1e-8);
}

#[test]
fn additivity_property_across_random_midpoints() {
    let f = BoundaryFunction::combine(vec![
        (1.0, BoundaryFunction::sine(3, 0.7)),
        (0.5, BoundaryFunction::indicator(-1.0, 0.5).unwrap()),
    ]);
    let s = spec();
    let mut x = 123456u64;
    for _ in 0..20 {
        // xorshift; deterministic interval triples
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        let a = -PI + (x % 1000) as f64 / 1000.0 * TAU * 0.4;
        let c = a + 1.0 + (x % 97) as f64 / 97.0;
        let b = 0.5 * (a + c);
        let whole = integrate(&f, a, c, &s).unwrap();
        let l = integrate(&f, a, b, &s).unwrap();
        let r = integrate(&f, b, c, &s).unwrap();
        assert!(
            (whole.value - l.value - r.value).abs() <= whole.error + l.error + r.error + 1e-12,
            "additivity at [{a}, {b}, {c}]"
        );
    }
}

#[test]
fn alexiewicz_dominates_interval_integrals() {
    let f = BoundaryFunction::combine(vec![
        (1.0, BoundaryFunction::sine(2, 1.0)),
        (-0.3, BoundaryFunction::indicator(0.0, 2.0).unwrap()),
    ]);
    let s = spec();
    let norm = alexiewicz_norm(&f, &s).unwrap();
    let mut x = 987654321u64;
    for _ in 0..100 {
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        let a = -PI + (x % 10007) as f64 / 10007.0 * TAU;
        let len = (x % 4001) as f64 / 4001.0 * TAU;
        let v = integrate(&f, a, a + len, &s).unwrap();
        assert!(
            v.value.abs() <= norm + 1e-9,
            "interval [{a}, {}] integral {} exceeds norm {norm}",
            a + len,
            v.value
        );
    }
}

#[test]
fn alexiewicz_norm_against_brute_force_oracle() {
    // exhaustive O(N²) pair scan over the exact piecewise cumulative
    let f = BoundaryFunction::combine(vec![
        (1.0, BoundaryFunction::indicator(0.0, 1.0).unwrap()),
        (-1.0, BoundaryFunction::indicator(-1.0, 0.0).unwrap()),
        (0.25, BoundaryFunction::indicator(1.5, 2.5).unwrap()),
    ]);
    let s = spec();
    let n = 2000;
    let mut cum = vec![0.0f64];
    let mut acc = 0.0;
    for i in 0..n {
        let a = -PI + TAU * i as f64 / n as f64;
        let b = -PI + TAU * (i + 1) as f64 / n as f64;
        acc += f.exact_integral(a, b).unwrap();
        cum.push(acc);
    }
    let total = acc;
    let mut best = 0.0f64;
    for i in 0..=n {
        for j in i..=n {
            let inner = (cum[j] - cum[i]).abs();
            let wrapped = (total - (cum[j] - cum[i])).abs();
            best = best.max(inner).max(wrapped);
        }
    }
    let norm = alexiewicz_norm(&f, &s).unwrap();
    assert!(
        (norm - best).abs() <= 1e-8,
        "engine {norm} vs brute force {best}"
    );
}

#[test]
fn alexiewicz_norm_axioms_on_corpus() {
    // absolute homogeneity and the triangle inequality within 1e-9
    let s = spec();
    let members = [
        BoundaryFunction::sine(2, 1.0),
        BoundaryFunction::indicator(-0.5, 1.0).unwrap(),
        BoundaryFunction::cosine(3, 0.5),
    ];
    for f in &members {
        let norm = alexiewicz_norm(f, &s).unwrap();
        let scaled = alexiewicz_norm(&f.clone().scaled(-2.5), &s).unwrap();
        assert!((scaled - 2.5 * norm).abs() <= 1e-9);
    }
    for f in &members {
        for g in &members {
            let sum = BoundaryFunction::combine(vec![(1.0, f.clone()), (1.0, g.clone())]);
            let ns = alexiewicz_norm(&sum, &s).unwrap();
            let nf = alexiewicz_norm(f, &s).unwrap();
            let ng = alexiewicz_norm(g, &s).unwrap();
            assert!(ns <= nf + ng + 1e-9);
        }
    }
}

#[test]
fn indefinite_total_matches_direct_integral_for_oscillatory_trace() {
    let f = two_over_theta_sine();
    let s = spec();
    let ind = indefinite(&f, 256, &s).unwrap();
    let direct = integrate(&f, -PI, PI, &s).unwrap();
    assert!(
        (ind.total - direct.value).abs() <= 1e-7,
        "cumulative {} vs direct {}",
        ind.total,
        direct.value
    );
    assert_eq!(ind.values[0], 0.0);
}

#[test]
fn l1_bounded_by_sup_norm_on_bounded_members() {
    let s = spec();
    for f in [
        BoundaryFunction::sine(1, 2.0),
        BoundaryFunction::indicator(0.0, 1.0).unwrap(),
        BoundaryFunction::cosine(4, 0.3),
    ] {
        let l1 = lp_norm(&f, 1.0, &s).unwrap();
        let linf = lp_norm(&f, f64::INFINITY, &s).unwrap();
        assert!(l1 <= TAU * linf + 1e-9);
    }
}

#[test]
fn lp_norm_of_unbounded_oscillatory_trace_is_infinite_marker() {
    let f = two_over_theta_sine();
    assert_eq!(lp_norm(&f, f64::INFINITY, &spec()).unwrap(), f64::INFINITY);
}
