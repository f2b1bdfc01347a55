//! Pointwise inequalities for Schwarz functions (Schwarz-Pick and the
//! Dieudonne bounds) and the quintic positivity machinery behind the
//! half-width-to-Silverman radius.
//!
//! The bounds are exposed as scalar functions of (|omega|, r) so that
//! property tests can separate bound arithmetic from sampled-function
//! compliance; the radius derivations consume them pointwise in exactly
//! this shape.

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::analytic::{AnalyticMap, Provenance};
use crate::error::{GftError, Result};

/// Upper bound (1 - |omega|^2)/(1 - r^2) for |omega'(z)| on |z| = r.
pub fn schwarz_pick_bound(mod_omega: f64, r: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&mod_omega) {
        return Err(GftError::Domain(format!(
            "need 0 <= |omega| <= 1, got {mod_omega}"
        )));
    }
    if !(0.0..1.0).contains(&r) {
        return Err(GftError::Domain(format!("need 0 <= r < 1, got {r}")));
    }
    Ok((1.0 - mod_omega * mod_omega) / (1.0 - r * r))
}

/// Two-branch bound for |omega'| on |z| <= r: flat at 1 up to sqrt(2) - 1,
/// then (1 + r^2)^2 / (4r(1 - r^2)); the branches meet where
/// (1 + r^2)^2 = 4r(1 - r^2).
pub fn dieudonne_deriv_bound(r: f64) -> Result<f64> {
    if !(0.0 < r && r < 1.0) {
        return Err(GftError::Domain(format!("need 0 < r < 1, got {r}")));
    }
    let knee = std::f64::consts::SQRT_2 - 1.0;
    if r <= knee {
        Ok(1.0)
    } else {
        let q = 1.0 + r * r;
        Ok(q * q / (4.0 * r * (1.0 - r * r)))
    }
}

/// Lower bound (|omega| - r^2)(1 + |omega|)/(r(1 - r^2)) for |omega'| on
/// |z| = r; meaningful when |omega| >= r^2, negative (vacuous) otherwise.
pub fn dieudonne_lower(mod_omega: f64, r: f64) -> Result<f64> {
    if r <= 0.0 {
        return Err(GftError::Domain("dieudonne_lower needs r > 0".into()));
    }
    if !(mod_omega <= r && r < 1.0) {
        return Err(GftError::Domain(format!(
            "need |omega| <= r < 1, got |omega| = {mod_omega}, r = {r}"
        )));
    }
    Ok((mod_omega - r * r) * (1.0 + mod_omega) / (r * (1.0 - r * r)))
}

/// Upper bound (r^2 - |omega|^2)/(1 - r^2) for |z omega'(z) - omega(z)| on
/// |z| = r.
pub fn dieudonne_crescent(mod_omega: f64, r: f64) -> Result<f64> {
    if !(mod_omega <= r && r < 1.0) {
        return Err(GftError::Domain(format!(
            "need |omega| <= r < 1, got |omega| = {mod_omega}, r = {r}"
        )));
    }
    Ok((r * r - mod_omega * mod_omega) / (1.0 - r * r))
}

/// The quadratic-in-omega coefficients (A, B, C) of the quintic's tail.
pub fn abc_coeffs(r: f64) -> (f64, f64, f64) {
    let r2 = r * r;
    let r3 = r2 * r;
    let r4 = r2 * r2;
    let r5 = r4 * r;
    let r6 = r4 * r2;
    let a = -4.0 * r6 + r5 + 22.0 * r4 - 4.0 * r3 - 32.0 * r2 + 3.0 * r + 10.0;
    let b = 11.0 * r6 - 25.0 * r4 + 23.0 * r2 - 8.0;
    let c = -11.0 * r6 - r5 + 27.0 * r4 + 3.0 * r3 - 18.0 * r2 - 2.0 * r + 4.0;
    (a, b, c)
}

/// The quintic Phi(omega, r) whose positivity on 0 <= omega <= r certifies
/// the half-width radius: omega^5 + (r^3 - 3r^2 - r + 5) omega^4 +
/// (1 - 3r^4) omega^3 + A omega^2 + B omega + C.
pub fn capital_phi(omega: f64, r: f64) -> f64 {
    let (a, b, c) = abc_coeffs(r);
    let r2 = r * r;
    let c4 = r2 * r - 3.0 * r2 - r + 5.0;
    let c3 = 1.0 - 3.0 * r2 * r2;
    ((((omega + c4) * omega + c3) * omega + a) * omega + b) * omega + c
}

/// Which construction produced a sampled Schwarz function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchwarzFamily {
    Power,
    BlaschkeProduct,
    ScaledAtom,
}

/// A sampled Schwarz function: omega(0) = 0, |omega| <= 1 on the disk.
#[derive(Debug, Clone)]
pub struct SchwarzSample {
    pub omega: AnalyticMap,
    pub family: SchwarzFamily,
}

/// z^k for k >= 1.
fn power_sample(k: u32) -> AnalyticMap {
    let kf = k as f64;
    AnalyticMap::from_closures(
        move |z| Ok(z.powu(k)),
        move |z| Ok(kf * z.powu(k - 1)),
        move |z| {
            if k == 1 {
                Ok(Complex64::new(0.0, 0.0))
            } else {
                Ok(kf * (kf - 1.0) * z.powu(k - 2))
            }
        },
        Provenance::ClosedForm,
    )
}

/// c z with |c| <= 1.
fn atom_sample(c: Complex64) -> AnalyticMap {
    AnalyticMap::from_closures(
        move |z| Ok(c * z),
        move |_| Ok(c),
        move |_| Ok(Complex64::new(0.0, 0.0)),
        Provenance::ClosedForm,
    )
}

/// Single Blaschke factor (z - a)/(1 - conj(a) z) and its derivatives.
fn blaschke_factor(a: Complex64, z: Complex64) -> (Complex64, Complex64, Complex64) {
    let ac = a.conj();
    let den = Complex64::new(1.0, 0.0) - ac * z;
    let v = (z - a) / den;
    let one_minus = 1.0 - a.norm_sqr();
    let d1 = one_minus / (den * den);
    let d2 = 2.0 * ac * one_minus / (den * den * den);
    (v, d1, d2)
}

/// Two-factor Blaschke product post-composed with the disk automorphism that
/// moves its value at 0 back to 0, so omega(0) = 0 holds exactly.
fn blaschke_sample(a: Complex64, b: Complex64) -> AnalyticMap {
    let w0 = (-a) * (-b); // product value at z = 0
    let w0c = w0.conj();
    let m = move |w: Complex64| (w - w0) / (Complex64::new(1.0, 0.0) - w0c * w);
    let m1 = move |w: Complex64| {
        let den = Complex64::new(1.0, 0.0) - w0c * w;
        (1.0 - w0.norm_sqr()) / (den * den)
    };
    let m2 = move |w: Complex64| {
        let den = Complex64::new(1.0, 0.0) - w0c * w;
        2.0 * w0c * (1.0 - w0.norm_sqr()) / (den * den * den)
    };
    let product = move |z: Complex64| {
        let (fa, fa1, fa2) = blaschke_factor(a, z);
        let (fb, fb1, fb2) = blaschke_factor(b, z);
        let v = fa * fb;
        let d1 = fa1 * fb + fa * fb1;
        let d2 = fa2 * fb + 2.0 * fa1 * fb1 + fa * fb2;
        (v, d1, d2)
    };
    AnalyticMap::from_closures(
        move |z| {
            let (v, _, _) = product(z);
            Ok(m(v))
        },
        move |z| {
            let (v, d1, _) = product(z);
            Ok(m1(v) * d1)
        },
        move |z| {
            let (v, d1, d2) = product(z);
            Ok(m2(v) * d1 * d1 + m1(v) * d2)
        },
        Provenance::ClosedForm,
    )
}

/// Deterministic sample family: powers, scaled atoms, and Blaschke products
/// in equal thirds, drawn from the seeded generator.
pub fn sample_family(seed: u64, count: usize) -> Vec<SchwarzSample> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let sample = match i % 3 {
            0 => SchwarzSample {
                omega: power_sample(rng.random_range(1..=6)),
                family: SchwarzFamily::Power,
            },
            1 => {
                let rho: f64 = rng.random_range(0.05..=1.0);
                let theta: f64 = rng.random_range(0.0..std::f64::consts::TAU);
                SchwarzSample {
                    omega: atom_sample(Complex64::from_polar(rho, theta)),
                    family: SchwarzFamily::ScaledAtom,
                }
            }
            _ => {
                // Zeros kept inside |a| <= 0.8 so derivatives stay tame on
                // the sampling grid.
                let mut zero = || {
                    let rho: f64 = rng.random_range(0.1..=0.8);
                    let theta: f64 = rng.random_range(0.0..std::f64::consts::TAU);
                    Complex64::from_polar(rho, theta)
                };
                SchwarzSample {
                    omega: blaschke_sample(zero(), zero()),
                    family: SchwarzFamily::BlaschkeProduct,
                }
            }
        };
        out.push(sample);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pick_bound_arithmetic() {
        assert!((schwarz_pick_bound(0.25, 0.5).unwrap() - 1.25).abs() < 1e-15);
        // Identity attains the bound with equality.
        assert!((schwarz_pick_bound(0.5, 0.5).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn deriv_bound_branches_agree_at_knee() {
        let knee = std::f64::consts::SQRT_2 - 1.0;
        let flat = dieudonne_deriv_bound(knee).unwrap();
        let q = 1.0 + knee * knee;
        let curved = q * q / (4.0 * knee * (1.0 - knee * knee));
        assert!((flat - 1.0).abs() < 1e-15);
        assert!((curved - 1.0).abs() < 1e-12, "curved branch at knee: {curved}");
    }

    #[test]
    fn deriv_bound_values() {
        assert_eq!(dieudonne_deriv_bound(0.2).unwrap(), 1.0);
        let at06 = dieudonne_deriv_bound(0.6).unwrap();
        assert!((at06 - 1.8496 / 1.536).abs() < 1e-12, "{at06}");
    }

    #[test]
    fn lower_bound_values() {
        // Numerator vanishes at |omega| = r^2.
        assert_eq!(dieudonne_lower(0.25, 0.5).unwrap(), 0.0);
        let v = dieudonne_lower(0.5, 0.5).unwrap();
        assert!((v - 1.0).abs() < 1e-15, "{v}");
        // Identity at r = 0.3: the bound must sit below |omega'| = 1.
        let b = dieudonne_lower(0.3, 0.3).unwrap();
        assert!((b - (0.3 - 0.09) * 1.3 / (0.3 * 0.91)).abs() < 1e-15);
        assert!(b <= 1.0 + 1e-12);
    }

    #[test]
    fn crescent_bound_values() {
        assert_eq!(dieudonne_crescent(0.5, 0.5).unwrap(), 0.0);
        let v = dieudonne_crescent(0.1, 0.5).unwrap();
        assert!((v - 0.32).abs() < 1e-15);
        // omega = z^2 at real z = 0.5 attains it: |z omega' - omega| = 0.25.
        let attained = dieudonne_crescent(0.25, 0.5).unwrap();
        assert!((attained - 0.25).abs() < 1e-15);
    }

    #[test]
    fn abc_at_zero() {
        let (a, b, c) = abc_coeffs(0.0);
        assert_eq!((a, b, c), (10.0, -8.0, 4.0));
        assert_eq!(b * b - 4.0 * a * c, -96.0);
    }

    #[test]
    fn phi_constant_term() {
        assert_eq!(capital_phi(0.0, 0.0), 4.0);
    }

    #[test]
    fn phi_matches_explicit_expansion() {
        // Coefficient-level identity: the Horner form equals the printed
        // polynomial reassembled term by term.
        for &(omega, r) in &[(0.1f64, 0.2f64), (0.3, 0.4), (0.25, 0.43), (0.0, 0.9)] {
            let (a, b, c) = abc_coeffs(r);
            let direct = omega.powi(5)
                + (r.powi(3) - 3.0 * r * r - r + 5.0) * omega.powi(4)
                + (1.0 - 3.0 * r.powi(4)) * omega.powi(3)
                + a * omega * omega
                + b * omega
                + c;
            let horner = capital_phi(omega, r);
            assert!((direct - horner).abs() < 1e-12, "({omega}, {r})");
        }
    }

    #[test]
    fn samples_fix_origin_and_contract() {
        let samples = sample_family(7, 24);
        for s in &samples {
            let at0 = s.omega.eval(Complex64::new(0.0, 0.0)).unwrap();
            assert!(at0.norm() < 1e-14, "{:?}: omega(0) = {at0}", s.family);
            // Schwarz lemma |omega(z)| <= |z| on a small probe set.
            for &(re, im) in &[(0.3, 0.1), (-0.5, 0.2), (0.0, 0.7), (0.6, -0.6)] {
                let z = Complex64::new(re, im);
                let w = s.omega.eval(z).unwrap();
                assert!(
                    w.norm() <= z.norm() + 1e-12,
                    "{:?}: |omega({z})| = {} > |z| = {}",
                    s.family,
                    w.norm(),
                    z.norm()
                );
            }
        }
    }

    #[test]
    fn blaschke_derivatives_match_finite_differences() {
        let samples = sample_family(11, 9);
        let h = 1e-6;
        for s in samples.iter().filter(|s| s.family == SchwarzFamily::BlaschkeProduct) {
            let z = Complex64::new(0.35, -0.2);
            let fd = (s.omega.eval(z + h).unwrap() - s.omega.eval(z - h).unwrap()) / (2.0 * h);
            let an = s.omega.deriv1(z).unwrap();
            assert!((fd - an).norm() < 1e-6 * an.norm().max(1.0));
            let fd2 = (s.omega.deriv1(z + h).unwrap() - s.omega.deriv1(z - h).unwrap()) / (2.0 * h);
            let an2 = s.omega.deriv2(z).unwrap();
            assert!((fd2 - an2).norm() < 1e-5 * an2.norm().max(1.0));
        }
    }
}
