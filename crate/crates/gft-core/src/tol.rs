//! Centralized numeric tolerances.
//!
//! Every threshold used by the library and its test suites lives here with a
//! one-line justification, so no module carries ad-hoc magic numbers.

/// Root refinement: brackets are shrunk below this width.
///
/// All target constants are known to six digits; refining to 1e-12 lets the
/// residual isolate transcription errors in the defining equation from solver
/// error.
pub const ROOT_TOL: f64 = 1e-12;

/// Default scan step for locating the first sign change on (0, 1).
pub const ROOT_SCAN_STEP: f64 = 5e-3;

/// Adaptive quadrature target for line integrals of analytic integrands.
///
/// The integrands are smooth on the segment, so Gauss panels converge
/// spectrally; 1e-12 is reachable in a handful of splits and keeps the
/// structural-formula values good to ~1e-11 after the outer exponential.
pub const QUAD_TOL: f64 = 1e-12;

/// Guard below which `f` or `f'` counts as a pole for the class functionals.
pub const POLE_GUARD: f64 = 1e-12;

/// Sup-estimates this close to a class threshold are flagged as marginal
/// rather than trusted as strict inequalities.
pub const MARGINAL_BAND: f64 = 1e-9;

/// Comparison tolerance for six-digit published radius constants.
pub const RADIUS_TOL: f64 = 1e-4;

/// Widened tolerance for the one radius constant published to three digits.
pub const RADIUS_TOL_3DIGIT: f64 = 5e-3;

/// Sharpness checks: the extremal supremum must sit this close to the class
/// threshold at the computed radius.
pub const SHARPNESS_TOL: f64 = 1e-4;

/// Agreement required between a closed-form evaluation and an independent
/// quadrature of the same quantity (relative).
pub const CROSS_CHECK_REL: f64 = 1e-7;

/// Residual allowed when a computed root is substituted back into its
/// defining quadratic.
pub const QUADRATIC_RESIDUAL: f64 = 1e-10;

/// Slack granted to inequality suites: a bound may be violated by at most
/// this much before it counts as a failure (absorbs f64 rounding at equality
/// cases such as the identity Schwarz function).
pub const INEQ_SLACK: f64 = 1e-9;

/// Tensor-product Gauss-Legendre sizes for the double-integral construction;
/// the second size is the Richardson cross-check.
pub const TENSOR_NODES: usize = 32;
pub const TENSOR_NODES_CHECK: usize = 48;

/// Disagreement allowed between the 32- and 48-node tensor quadratures.
///
/// The radial weight r^(n - alpha) has a fractional power at 0, which caps
/// plain Gauss-Legendre at ~3e-5 relative for the worst admissible
/// (n, alpha); measured, not theoretical.
pub const TENSOR_CHECK_TOL: f64 = 5e-4;

/// Default angular nodes per circle for sup estimation.
pub const DEFAULT_ANGULAR: usize = 4096;

/// Default guard radius: sup estimates run on |z| = GUARD, not |z| -> 1.
pub const DEFAULT_GUARD: f64 = 0.999;
