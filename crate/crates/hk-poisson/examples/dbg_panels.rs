use hk_poisson::boundary::{BoundaryFunction, PhaseHint, SingularityDescriptor};
use hk_poisson::quad::{integrate, QuadratureSpec};

fn si(x: f64) -> f64 {
    // crude numeric Si via composite Simpson on sin(t)/t with series start
    let n = 2_000_00usize;
    if x > 50.0 {
        // asymptotic
        let inv2 = 1.0 / (x * x);
        let f = (1.0 - 2.0 * inv2 + 24.0 * inv2 * inv2) / x;
        let g = (1.0 - 6.0 * inv2 + 120.0 * inv2 * inv2) * inv2;
        return std::f64::consts::FRAC_PI_2 - f * x.cos() - g * x.sin();
    }
    let h = x / n as f64;
    let sinc = |t: f64| if t == 0.0 { 1.0 } else { t.sin() / t };
    let mut acc = sinc(0.0) + sinc(x);
    for i in 1..n {
        acc += if i % 2 == 1 { 4.0 } else { 2.0 } * sinc(i as f64 * h);
    }
    acc * h / 3.0
}

fn main() {
    let f = BoundaryFunction::closed_form(
        "t2",
        |t: f64| if t == 0.0 { 0.0 } else { (2.0 / t) * (2.0 / t).sin() },
        None,
        vec![SingularityDescriptor::oscillatory(0.0, PhaseHint::reciprocal(2.0))],
    );
    let s = QuadratureSpec::default();
    for k in [1, 2, 3, 5, 8, 12] {
        let a = 0.5f64.powi(k + 1);
        let b = 0.5f64.powi(k);
        let est = integrate(&f, a, b, &s).unwrap();
        let oracle = 2.0 * (si(2.0 / a) - si(2.0 / b));
        println!(
            "right panel [2^-{}, 2^-{}]: engine {:+.9e} oracle {:+.9e} diff {:.2e}",
            k + 1, k, est.value, oracle, (est.value - oracle).abs()
        );
        let estl = integrate(&f, -b, -a, &s).unwrap();
        println!(
            "left  panel [-2^-{}, -2^-{}]: engine {:+.9e} oracle {:+.9e} diff {:.2e}",
            k, k + 1, estl.value, oracle, (estl.value - oracle).abs()
        );
    }
}
