//! Poisson integrals on the unit disc for nonabsolutely integrable boundary data.
//!
//! The crate evaluates Poisson integrals of 2π-periodic boundary traces that
//! need only be conditionally integrable (spike families, `(2/θ)sin(2/θ)`-type
//! oscillations), measures their growth in Alexiewicz, L^p and variation
//! norms, builds the explicit sharpness witnesses for those growth rates, and
//! runs uniqueness diagnostics for the Dirichlet problem under an
//! Alexiewicz-norm boundary condition.
//!
//! Module map:
//!
//! * [`boundary`] — boundary traces, finite measures on the circle, total
//!   variation and related elementary functionals.
//! * [`quad`] — adaptive Gauss–Kronrod quadrature with oscillatory-tail
//!   acceleration, indefinite integrals, Alexiewicz and L^p norms.
//! * [`poisson`] — Poisson kernel family, Poisson integrals of functions and
//!   measures, the indicator closed form, Fourier extension.
//! * [`special`] — log-gamma and the terminating hypergeometric sum used by
//!   the kernel L^p closed form.
//! * [`estimates`] — numerical verification of the growth, contraction,
//!   convergence and variation bounds.
//! * [`constructions`] — spike/sine/slow-decay sharpness builders and the two
//!   closed-form example harmonics.
//! * [`dirichlet`] — Dirichlet solver wrapper and uniqueness diagnostics.
//! * [`parse`] — the text grammar for boundary functions and measures shared
//!   with the CLI.
//! * [`report`] — scan reports with CSV/JSON serialization.
//! * [`suite`] — the certification suite run by `hkp suite` and the
//!   acceptance tests.

pub mod boundary;
pub mod constructions;
pub mod dirichlet;
pub mod estimates;
pub mod parse;
pub mod poisson;
pub mod quad;
pub mod report;
pub mod special;
pub mod suite;

mod error;

pub use error::{Error, Result};
