//! Numerical toolkit for a family of radius problems in geometric function
//! theory.
//!
//! The library centers on two classes of normalized analytic functions on
//! the unit disk: the Silverman-type class G_{lambda,alpha}, defined by
//!
//! ```text
//! | (1 - alpha + alpha z f''/f') / (z f'/f) - (1 - alpha) | < lambda,
//! ```
//!
//! and the half-width class of functions with |z f'(z) - f(z)| < 1/2.
//! Around them it provides:
//!
//! * membership oracles that estimate the defining suprema on circle grids
//!   ([`oracles`]),
//! * sufficient-condition thresholds and a double-integral construction
//!   that turns small perturbations into certified members
//!   ([`sufficiency`]),
//! * derivative bounds for Schwarz maps together with seeded sample
//!   families that exercise them ([`schwarz`]),
//! * a catalog of starlike target families (lens, exponential, lune,
//!   cardioid, sine, crescent, sigmoid, Weierstrass-type, nephroid) with
//!   their extremal functions, distance and growth data ([`catalog`]),
//! * and a lab of thirteen radius problems whose constants are solved,
//!   cross-validated empirically, and checked for sharpness ([`radius`]).
//!
//! Everything is deterministic: quadrature rules and catalogs are built
//! once per process, and randomized suites take explicit seeds.

pub mod analytic;
pub mod catalog;
pub mod error;
pub mod oracles;
pub mod quad;
pub mod radius;
pub mod schwarz;
pub mod sufficiency;
pub mod tol;

pub use analytic::{
    eval_series, eval_series_deriv, g_functional, omega_functional, raw_polynomial,
    sup_on_circle, taylor_coefficients, AnalyticMap, DiskGrid, PowerSeries, Provenance,
    SeriesDocument, SupEstimate,
};
pub use catalog::{
    catalog, disk_radius_r1, dist_max, entry, growth_m, structural_f0, structural_f0_map,
    MaMindaEntry, MaMindaName,
};
pub use error::{GftError, Result};
pub use oracles::{
    build_omega_member, in_g, in_omega, inclusion_g_in_omega, inclusion_g_in_starlike,
    inclusion_table, subordination_disk_test, MembershipReport, GRID_CAVEAT, POLE_CAVEAT,
};
pub use quad::{gauss_rule, segment_integral, unit_square_integral, unit_square_with_check, GaussRule};
pub use radius::{
    bounds_suite, empirical_radius, inclusion_suite, monotonicity_suite, radius_catalog,
    smallest_positive_root, solve_problem, sufficiency_suite, verify_all, verify_radii,
    verify_with, EmpiricalRadius, RadiusOutcome, RadiusProblem, RealFn, RootResult, SuiteOutcome,
    VerifyReport,
};
pub use schwarz::{
    abc_coeffs, capital_phi, dieudonne_crescent, dieudonne_deriv_bound, dieudonne_lower,
    sample_family, schwarz_pick_bound, SchwarzFamily, SchwarzSample,
};
pub use sufficiency::{
    build_double_integral_fn, check_sufficient_condition, condition_threshold, delta_quadratic,
    delta_threshold, second_threshold, seeded_polynomials, ClassParams, Condition,
};
