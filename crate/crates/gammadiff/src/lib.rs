//! Numerical kernels for the gamma difference distribution — the law of
//! `X1 - X2` for independent gamma variates with shapes `alpha1, alpha2` and
//! rates `beta1, beta2` — together with the variance gamma distribution as a
//! cross-validating specialization.
//!
//! Every quantity of interest is computable by at least two independent
//! routes (closed form, recurrence, quadrature, Monte Carlo), which is what
//! the test suites lean on: the routes must agree to tight tolerances.
//!
//! Module map:
//! - [`specfun`]: log-gamma, Pochhammer, Gauss 2F1, Kummer M, Tricomi U,
//!   modified Bessel K.
//! - [`quadrature`]: adaptive Gauss–Kronrod integration over finite and
//!   infinite intervals, plus an oscillatory mode for Fourier inversion.
//! - [`gdd`]: parameters, characteristic function, density and distribution
//!   function of the gamma difference law.
//! - [`moments`]: integer moments (recurrence, two closed forms, binomial
//!   sum), absolute continuous moments, principal-value inverse moment.
//! - [`stein`]: the second-order density ODE, the Stein expectation identity,
//!   and the first-order characteristic-function ODE as numerical checks.
//! - [`vg`]: the variance gamma specialization and its own formulas.
//! - [`sampler`]: seeded, reproducible variate generation.

pub mod dd;
pub mod error;
pub mod gdd;
pub mod grid;
pub mod moments;
pub mod quadrature;
pub mod sampler;
pub mod specfun;
pub mod stein;
pub mod vg;

pub use error::Error;
pub use gdd::{DensityRoute, GddParams};
pub use grid::{EvalGrid, EvalPoint, EvalStatus};
pub use moments::{MomentReport, MomentRoute};
pub use quadrature::{Interval, QuadratureResult, QuadratureTask};
pub use sampler::SamplerState;
pub use specfun::SpecialValue;
pub use stein::{GrowthClass, TestFunction};
pub use vg::VgParams;

/// Library-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
