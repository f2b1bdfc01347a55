//! Catalog of the nine Ma-Minda target functions: each entry carries the
//! target phi, the radius r1 of the largest disk centered at 1 inside
//! phi(D) (where tabulated), the closed-form boundary distance profile
//! max_theta |phi(r e^{i theta}) - 1|, and the extremal function f0 built
//! from the structural formula f0(z) = z exp INT_0^z (phi(t)-1)/t dt.
//!
//! Extremal derivatives never difference the quadrature: the structural
//! formula gives z f0'(z) = phi(z) f0(z) exactly, so f0' and f0'' come from
//! phi and f0 values alone.

use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use num_complex::Complex64;

use crate::analytic::{AnalyticMap, Provenance};
use crate::error::{GftError, Result};
use crate::quad::segment_integral;
use crate::tol;

const SQRT2: f64 = std::f64::consts::SQRT_2;

/// The nine catalog targets, keyed by their conventional short names.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MaMindaName {
    /// Lemniscate of Bernoulli: sqrt(1 + z).
    L,
    /// Exponential: e^z.
    E,
    /// Rational-lemniscate blend: sqrt(2) - (sqrt(2)-1) sqrt((1-z)/(1+2(sqrt(2)-1)z)).
    Rl,
    /// Cardioid: 1 + 4z/3 + 2z^2/3.
    C,
    /// Sine: 1 + sin z.
    S,
    /// Crescent: z + sqrt(1 + z^2).
    Cr,
    /// Sigmoid: 2/(1 + e^{-z}).
    Sg,
    /// Weierstrass-p shaped petal: 1 + z e^z.
    Wp,
    /// Nephroid: 1 + z - z^3/3.
    Ne,
}

impl MaMindaName {
    pub const ALL: [MaMindaName; 9] = [
        MaMindaName::L,
        MaMindaName::E,
        MaMindaName::Rl,
        MaMindaName::C,
        MaMindaName::S,
        MaMindaName::Cr,
        MaMindaName::Sg,
        MaMindaName::Wp,
        MaMindaName::Ne,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            MaMindaName::L => "L",
            MaMindaName::E => "e",
            MaMindaName::Rl => "RL",
            MaMindaName::C => "C",
            MaMindaName::S => "S",
            MaMindaName::Cr => "Cr",
            MaMindaName::Sg => "SG",
            MaMindaName::Wp => "wp",
            MaMindaName::Ne => "Ne",
        }
    }
}

impl fmt::Display for MaMindaName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MaMindaName {
    type Err = GftError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "l" => Ok(MaMindaName::L),
            "e" => Ok(MaMindaName::E),
            "rl" => Ok(MaMindaName::Rl),
            "c" => Ok(MaMindaName::C),
            "s" => Ok(MaMindaName::S),
            "cr" => Ok(MaMindaName::Cr),
            "sg" => Ok(MaMindaName::Sg),
            "wp" => Ok(MaMindaName::Wp),
            "ne" => Ok(MaMindaName::Ne),
            _ => Err(GftError::Domain(format!(
                "unknown class name {s:?}; expected one of L, e, RL, C, S, Cr, SG, wp, Ne"
            ))),
        }
    }
}

type RealFn = Arc<dyn Fn(f64) -> Result<f64> + Send + Sync>;

/// One catalog row.
pub struct MaMindaEntry {
    pub name: MaMindaName,
    /// The target phi with phi(0) = 1, phi'(0) > 0.
    pub phi: AnalyticMap,
    /// Radius of the largest disk centered at 1 inside phi(D); None where
    /// no tabulated value exists (RL).
    pub r1: Option<f64>,
    /// The extremal function in closed form, where one is printed.
    pub f0_closed: Option<AnalyticMap>,
    /// The canonical extremal function: the closed form where available,
    /// otherwise the structural quadrature.
    pub f0: AnalyticMap,
    dist_max: RealFn,
    growth: RealFn,
}

impl fmt::Debug for MaMindaEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MaMindaEntry")
            .field("name", &self.name)
            .field("r1", &self.r1)
            .finish_non_exhaustive()
    }
}

impl MaMindaEntry {
    /// Closed form of max over theta of |phi(r e^{i theta}) - 1|.
    pub fn dist_max(&self, r: f64) -> Result<f64> {
        check_radius(r)?;
        (self.dist_max)(r)
    }

    /// Maximum of |f0| on |z| = r.
    pub fn growth(&self, r: f64) -> Result<f64> {
        check_radius(r)?;
        (self.growth)(r)
    }
}

fn check_radius(r: f64) -> Result<()> {
    if !(0.0 < r && r < 1.0) {
        return Err(GftError::Domain(format!("radius must lie in (0,1), got {r}")));
    }
    Ok(())
}

fn one() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

/// z exp INT_0^z (phi(t)-1)/t dt, integrating along the straight segment.
/// The removable singularity at 0 is bridged by the two-term Taylor value
/// phi'(0) + phi''(0) t/2 once |t| is small enough for the direct quotient
/// to lose digits to cancellation.
pub fn structural_f0(phi: &AnalyticMap, z: Complex64) -> Result<Complex64> {
    if z.norm() >= 1.0 {
        return Err(GftError::OutsideDisk { modulus: z.norm() });
    }
    if z.norm() == 0.0 {
        return Ok(z);
    }
    let p = phi.clone();
    let d0 = p.deriv1(Complex64::new(0.0, 0.0))?;
    let dd0 = p.deriv2(Complex64::new(0.0, 0.0))?;
    let integrand = move |t: Complex64| -> Result<Complex64> {
        if t.norm() < 1e-6 {
            Ok(d0 + 0.5 * dd0 * t)
        } else {
            Ok((p.eval(t)? - one()) / t)
        }
    };
    let integral = segment_integral(&integrand, Complex64::new(0.0, 0.0), z, tol::QUAD_TOL)?;
    Ok(z * integral.exp())
}

/// Wraps an extremal evaluation closure into an [`AnalyticMap`] whose
/// derivatives use the exact identity z f0' = phi f0, i.e.
/// f0'' = (f0/z)(phi' + phi(phi - 1)/z).
fn extremal_from_eval(
    phi: &AnalyticMap,
    f0: Arc<dyn Fn(Complex64) -> Result<Complex64> + Send + Sync>,
    provenance: Provenance,
) -> AnalyticMap {
    let p1 = phi.clone();
    let f1 = f0.clone();
    let d1 = move |z: Complex64| -> Result<Complex64> {
        if z.norm() < 1e-7 {
            return Ok(one());
        }
        Ok(p1.eval(z)? * f1(z)? / z)
    };
    let p2 = phi.clone();
    let f2 = f0.clone();
    let d2 = move |z: Complex64| -> Result<Complex64> {
        if z.norm() < 1e-7 {
            // f0 = z + phi'(0) z^2 + O(z^3), so f0''(0) = 2 phi'(0).
            return Ok(2.0 * p2.deriv1(Complex64::new(0.0, 0.0))?);
        }
        let v = f2(z)?;
        let ph = p2.eval(z)?;
        let dph = p2.deriv1(z)?;
        Ok(v / z * (dph + ph * (ph - one()) / z))
    };
    AnalyticMap::from_closures(move |z| f0(z), d1, d2, provenance)
}

/// The extremal function of an arbitrary target as an [`AnalyticMap`],
/// evaluated by quadrature of the structural formula.
pub fn structural_f0_map(phi: &AnalyticMap) -> AnalyticMap {
    let p = phi.clone();
    extremal_from_eval(
        phi,
        Arc::new(move |z| structural_f0(&p, z)),
        Provenance::Quadrature,
    )
}

fn phi_l() -> AnalyticMap {
    AnalyticMap::from_closures(
        |z| Ok((one() + z).sqrt()),
        |z| Ok(0.5 / (one() + z).sqrt()),
        |z| {
            let s = (one() + z).sqrt();
            Ok(-0.25 / (s * s * s))
        },
        Provenance::ClosedForm,
    )
}

fn phi_e() -> AnalyticMap {
    AnalyticMap::from_closures(|z| Ok(z.exp()), |z| Ok(z.exp()), |z| Ok(z.exp()), Provenance::ClosedForm)
}

/// q(z) = (1-z)/(1+2kz) with k = sqrt(2)-1; phi = sqrt(2) - (sqrt(2)-1) sqrt(q).
/// Both 1-z and 1+2kz stay in the right half-plane on the disk, so the
/// principal square root never crosses a branch cut.
fn phi_rl() -> AnalyticMap {
    let k = SQRT2 - 1.0;
    let q = move |z: Complex64| (one() - z) / (one() + 2.0 * k * z);
    // q' = -(1+2k)/(1+2kz)^2, q'' = 4k(1+2k)/(1+2kz)^3.
    let qp = move |z: Complex64| {
        let d = one() + 2.0 * k * z;
        -(1.0 + 2.0 * k) / (d * d)
    };
    let qpp = move |z: Complex64| {
        let d = one() + 2.0 * k * z;
        4.0 * k * (1.0 + 2.0 * k) / (d * d * d)
    };
    AnalyticMap::from_closures(
        move |z| Ok(Complex64::new(SQRT2, 0.0) - (SQRT2 - 1.0) * q(z).sqrt()),
        move |z| Ok(-(SQRT2 - 1.0) * qp(z) / (2.0 * q(z).sqrt())),
        move |z| {
            let qv = q(z);
            let s = qv.sqrt();
            Ok(-(SQRT2 - 1.0) * (qpp(z) / (2.0 * s) - qp(z) * qp(z) / (4.0 * s * s * s)))
        },
        Provenance::ClosedForm,
    )
}

fn phi_c() -> AnalyticMap {
    AnalyticMap::from_closures(
        |z| Ok(one() + 4.0 / 3.0 * z + 2.0 / 3.0 * z * z),
        |z| Ok(Complex64::new(4.0 / 3.0, 0.0) + 4.0 / 3.0 * z),
        |_| Ok(Complex64::new(4.0 / 3.0, 0.0)),
        Provenance::ClosedForm,
    )
}

fn phi_s() -> AnalyticMap {
    AnalyticMap::from_closures(
        |z| Ok(one() + z.sin()),
        |z| Ok(z.cos()),
        |z| Ok(-z.sin()),
        Provenance::ClosedForm,
    )
}

fn phi_cr() -> AnalyticMap {
    AnalyticMap::from_closures(
        |z| Ok(z + (one() + z * z).sqrt()),
        |z| Ok(one() + z / (one() + z * z).sqrt()),
        |z| {
            let s = (one() + z * z).sqrt();
            Ok(one() / (s * s * s))
        },
        Provenance::ClosedForm,
    )
}

fn phi_sg() -> AnalyticMap {
    AnalyticMap::from_closures(
        |z| Ok(2.0 * (one() + (-z).exp()).inv()),
        |z| {
            let u = (-z).exp();
            let d = one() + u;
            Ok(2.0 * u / (d * d))
        },
        |z| {
            let u = (-z).exp();
            let d = one() + u;
            Ok(2.0 * u * (u - one()) / (d * d * d))
        },
        Provenance::ClosedForm,
    )
}

fn phi_wp() -> AnalyticMap {
    AnalyticMap::from_closures(
        |z| Ok(one() + z * z.exp()),
        |z| Ok((one() + z) * z.exp()),
        |z| Ok((Complex64::new(2.0, 0.0) + z) * z.exp()),
        Provenance::ClosedForm,
    )
}

fn phi_ne() -> AnalyticMap {
    AnalyticMap::from_closures(
        |z| Ok(one() + z - z * z * z / 3.0),
        |z| Ok(one() - z * z),
        |z| Ok(-2.0 * z),
        Provenance::ClosedForm,
    )
}

/// Closed form of the RL extremal function:
/// f0(z) = z ((a+b)/2)^{2k} exp(sqrt(2k) atan(sqrt(2k)(b-a)/(b+2ka)))
/// with a = sqrt(1-z), b = sqrt(1+2kz), k = sqrt(2)-1; principal branches,
/// chosen so a = b = 1 and f0 = z + ... at the origin.
fn f0_rl_eval(z: Complex64) -> Complex64 {
    let k = SQRT2 - 1.0;
    let a = (one() - z).sqrt();
    let b = (one() + 2.0 * k * z).sqrt();
    let pow = (0.5 * (a + b)).powf(2.0 * k);
    let s2k = (2.0 * k).sqrt();
    let p0 = s2k * (s2k * (b - a) / (b + 2.0 * k * a)).atan();
    z * pow * p0.exp()
}

type ClosedEval = Option<Arc<dyn Fn(Complex64) -> Result<Complex64> + Send + Sync>>;

fn make_entry(name: MaMindaName) -> MaMindaEntry {
    let e = std::f64::consts::E;
    let (phi, r1, f0_closed_eval): (AnalyticMap, Option<f64>, ClosedEval) = match name {
        MaMindaName::L => (
            phi_l(),
            Some(SQRT2 - 1.0),
            Some(Arc::new(|z: Complex64| {
                let s = (one() + z).sqrt();
                Ok(4.0 * z * (2.0 * s - 2.0 * one()).exp() / ((one() + s) * (one() + s)))
            })),
        ),
        MaMindaName::E => (phi_e(), Some(1.0 - 1.0 / e), None),
        MaMindaName::Rl => (phi_rl(), None, Some(Arc::new(|z| Ok(f0_rl_eval(z))))),
        MaMindaName::C => (
            phi_c(),
            Some(2.0 / 3.0),
            Some(Arc::new(|z: Complex64| {
                Ok(z * (4.0 / 3.0 * z + z * z / 3.0).exp())
            })),
        ),
        MaMindaName::S => (phi_s(), Some(1f64.sin()), None),
        MaMindaName::Cr => (phi_cr(), Some(2.0 - SQRT2), None),
        MaMindaName::Sg => (phi_sg(), Some((e - 1.0) / (e + 1.0)), None),
        MaMindaName::Wp => (
            phi_wp(),
            Some(1.0 / e),
            Some(Arc::new(|z: Complex64| Ok(z * (z.exp() - one()).exp()))),
        ),
        MaMindaName::Ne => (
            phi_ne(),
            Some(2.0 / 3.0),
            Some(Arc::new(|z: Complex64| {
                Ok(z * (z - z * z * z / 9.0).exp())
            })),
        ),
    };

    let f0_closed =
        f0_closed_eval.map(|ev| extremal_from_eval(&phi, ev, Provenance::ClosedForm));
    let f0 = match &f0_closed {
        Some(m) => m.clone(),
        None => structural_f0_map(&phi),
    };

    let dist_max: RealFn = match name {
        MaMindaName::L => Arc::new(|r| Ok(1.0 - (1.0 - r).sqrt())),
        MaMindaName::E => Arc::new(|r: f64| Ok(r.exp() - 1.0)),
        MaMindaName::Rl => Arc::new(|r| {
            let k2 = 2.0 * (SQRT2 - 1.0);
            let d = 1.0 - k2 * r;
            if d <= 0.0 {
                return Err(GftError::Domain(format!(
                    "RL distance profile undefined: 1 - 2(sqrt(2)-1)r = {d} at r = {r}"
                )));
            }
            Ok((SQRT2 - (SQRT2 - 1.0) * ((1.0 + r) / d).sqrt() - 1.0).abs())
        }),
        MaMindaName::C => Arc::new(|r| Ok(4.0 * r / 3.0 + 2.0 * r * r / 3.0)),
        MaMindaName::S => Arc::new(|r: f64| Ok(r.sinh())),
        MaMindaName::Cr => Arc::new(|r: f64| Ok(r + (1.0 + r * r).sqrt() - 1.0)),
        MaMindaName::Sg => Arc::new(|r: f64| Ok((r / 2.0).tan())),
        MaMindaName::Wp => Arc::new(|r: f64| Ok(r * r.exp())),
        MaMindaName::Ne => Arc::new(|r| Ok(r + r * r * r / 3.0)),
    };

    let growth: RealFn = match name {
        MaMindaName::L => Arc::new(|r: f64| {
            let s = (1.0 + r).sqrt();
            Ok(4.0 * r * (2.0 * s - 2.0).exp() / ((1.0 + s) * (1.0 + s)))
        }),
        MaMindaName::Wp => Arc::new(|r: f64| Ok(r * (r.exp() - 1.0).exp())),
        MaMindaName::Ne => Arc::new(|r: f64| Ok(r * (r - r * r * r / 9.0).exp())),
        MaMindaName::C => Arc::new(|r: f64| Ok(r * (4.0 * r / 3.0 + r * r / 3.0).exp())),
        MaMindaName::Rl => Arc::new(|r| Ok(f0_rl_eval(Complex64::new(r, 0.0)).norm())),
        // No closed growth form is printed for these; the structural
        // quadrature on the positive real axis is the defining value.
        MaMindaName::E | MaMindaName::Cr | MaMindaName::Sg | MaMindaName::S => {
            let p = phi.clone();
            Arc::new(move |r| Ok(structural_f0(&p, Complex64::new(r, 0.0))?.norm()))
        }
    };

    MaMindaEntry {
        name,
        phi,
        r1,
        f0_closed,
        f0,
        dist_max,
        growth,
    }
}

/// The immutable catalog, constructed once.
pub fn catalog() -> &'static [MaMindaEntry] {
    static CATALOG: OnceLock<Vec<MaMindaEntry>> = OnceLock::new();
    CATALOG.get_or_init(|| MaMindaName::ALL.iter().map(|&n| make_entry(n)).collect())
}

/// Catalog row for one target.
pub fn entry(name: MaMindaName) -> &'static MaMindaEntry {
    catalog()
        .iter()
        .find(|e| e.name == name)
        .expect("catalog holds every name")
}

/// Tabulated radius of the largest disk centered at 1 inside phi(D).
pub fn disk_radius_r1(name: MaMindaName) -> Result<f64> {
    entry(name)
        .r1
        .ok_or(GftError::NotTabulated("disk radius r1 for the RL target"))
}

/// Closed form of max over theta of |phi(r e^{i theta}) - 1|.
pub fn dist_max(name: MaMindaName, r: f64) -> Result<f64> {
    entry(name).dist_max(r)
}

/// Maximum of |f0| on |z| = r.
pub fn growth_m(name: MaMindaName, r: f64) -> Result<f64> {
    entry(name).growth(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::{omega_functional, sup_on_circle, taylor_coefficients, DiskGrid};

    fn scan_grid() -> DiskGrid {
        DiskGrid::new(vec![0.5], 1024, 0.999).unwrap()
    }

    #[test]
    fn tabulated_r1_values() {
        let e = std::f64::consts::E;
        assert!((disk_radius_r1(MaMindaName::Sg).unwrap() - (e - 1.0) / (e + 1.0)).abs() < 1e-15);
        assert!((disk_radius_r1(MaMindaName::Sg).unwrap() - 0.462117).abs() < 1e-6);
        assert!((disk_radius_r1(MaMindaName::L).unwrap() - 0.414214).abs() < 1e-6);
        assert!((disk_radius_r1(MaMindaName::Wp).unwrap() - 0.367879).abs() < 1e-6);
        assert!((disk_radius_r1(MaMindaName::E).unwrap() - (1.0 - 1.0 / e)).abs() < 1e-15);
        assert!((disk_radius_r1(MaMindaName::S).unwrap() - 1f64.sin()).abs() < 1e-15);
        assert_eq!(disk_radius_r1(MaMindaName::C).unwrap(), 2.0 / 3.0);
        assert_eq!(disk_radius_r1(MaMindaName::Ne).unwrap(), 2.0 / 3.0);
        assert!((disk_radius_r1(MaMindaName::Cr).unwrap() - (2.0 - SQRT2)).abs() < 1e-15);
    }

    #[test]
    fn rl_r1_is_not_tabulated() {
        assert!(matches!(
            disk_radius_r1(MaMindaName::Rl),
            Err(GftError::NotTabulated(_))
        ));
    }

    #[test]
    fn names_round_trip() {
        for n in MaMindaName::ALL {
            assert_eq!(n.as_str().parse::<MaMindaName>().unwrap(), n);
        }
        assert!("nope".parse::<MaMindaName>().is_err());
    }

    #[test]
    fn phi_normalization() {
        let zero = Complex64::new(0.0, 0.0);
        for ent in catalog() {
            let v = ent.phi.eval(zero).unwrap();
            assert!((v - one()).norm() < 1e-14, "{}: phi(0) = {v}", ent.name);
            let d = ent.phi.deriv1(zero).unwrap();
            assert!(d.re > 0.0 && d.im.abs() < 1e-14, "{}: phi'(0) = {d}", ent.name);
        }
    }

    #[test]
    fn phi_derivatives_match_finite_differences() {
        let z = Complex64::new(0.3, -0.25);
        let h = 1e-6;
        for ent in catalog() {
            let fd = (ent.phi.eval(z + h).unwrap() - ent.phi.eval(z - h).unwrap()) / (2.0 * h);
            let an = ent.phi.deriv1(z).unwrap();
            assert!((fd - an).norm() < 1e-6, "{}: phi' fd {fd} vs {an}", ent.name);
            let fd2 =
                (ent.phi.deriv1(z + h).unwrap() - ent.phi.deriv1(z - h).unwrap()) / (2.0 * h);
            let an2 = ent.phi.deriv2(z).unwrap();
            assert!((fd2 - an2).norm() < 1e-5, "{}: phi'' fd {fd2} vs {an2}", ent.name);
        }
    }

    #[test]
    fn dist_max_matches_angular_scan() {
        let grid = scan_grid();
        for ent in catalog() {
            for k in 1..=8 {
                let r = k as f64 / 10.0;
                let closed = ent.dist_max(r).unwrap();
                let scanned = sup_on_circle(
                    |z| Ok((ent.phi.eval(z)? - one()).norm()),
                    r,
                    &grid,
                )
                .unwrap()
                .sup;
                assert!(
                    (closed - scanned).abs() < 1e-8,
                    "{} at r = {r}: closed {closed} vs scan {scanned}",
                    ent.name
                );
            }
        }
    }

    #[test]
    fn dist_max_vanishes_at_origin_limit() {
        for ent in catalog() {
            assert!(ent.dist_max(1e-9).unwrap() < 1e-8, "{}", ent.name);
        }
    }

    #[test]
    fn structural_f0_of_trivial_target_is_identity() {
        let flat = AnalyticMap::from_closures(
            |_| Ok(one()),
            |_| Ok(Complex64::new(0.0, 0.0)),
            |_| Ok(Complex64::new(0.0, 0.0)),
            Provenance::ClosedForm,
        );
        let z = Complex64::new(0.3, 0.4);
        assert!((structural_f0(&flat, z).unwrap() - z).norm() < 1e-14);
    }

    #[test]
    fn structural_matches_closed_growth() {
        // Where a closed growth form exists, the structural quadrature on
        // the positive real axis must reproduce it.
        for name in [
            MaMindaName::L,
            MaMindaName::C,
            MaMindaName::Wp,
            MaMindaName::Ne,
            MaMindaName::Rl,
        ] {
            let ent = entry(name);
            for k in 1..=9 {
                let r = k as f64 / 10.0;
                let closed = ent.growth(r).unwrap();
                let structural = structural_f0(&ent.phi, Complex64::new(r, 0.0))
                    .unwrap()
                    .norm();
                assert!(
                    (closed - structural).abs() <= tol::CROSS_CHECK_REL * closed,
                    "{name} at r = {r}: closed {closed} vs structural {structural}"
                );
            }
        }
    }

    #[test]
    fn exponential_taylor_coefficients() {
        let f0 = &entry(MaMindaName::E).f0;
        let got = taylor_coefficients(f0, 6, 0.5, 256).unwrap();
        let want = [1.0, 1.0, 0.75, 17.0 / 36.0, 19.0 / 72.0, 27.0 / 200.0];
        for (k, (g, w)) in got.iter().zip(want).enumerate() {
            assert!((g - w).norm() < 1e-8, "a_{}: {} vs {}", k + 1, g, w);
        }
    }

    #[test]
    fn crescent_taylor_coefficients() {
        let f0 = &entry(MaMindaName::Cr).f0;
        let got = taylor_coefficients(f0, 6, 0.5, 256).unwrap();
        let want = [1.0, 1.0, 0.75, 5.0 / 12.0, 1.0 / 6.0, 0.05];
        for (k, (g, w)) in got.iter().zip(want).enumerate() {
            assert!((g - w).norm() < 1e-8, "a_{}: {} vs {}", k + 1, g, w);
        }
    }

    #[test]
    fn disk_of_radius_r1_sits_inside_image() {
        // min over theta of |phi - 1| on an almost-boundary circle must not
        // undercut the tabulated disk radius.
        let grid = scan_grid();
        for ent in catalog() {
            let Some(r1) = ent.r1 else { continue };
            let neg_min = sup_on_circle(
                |z| Ok(-(ent.phi.eval(z)? - one()).norm()),
                0.999,
                &grid,
            )
            .unwrap()
            .sup;
            let min = -neg_min;
            assert!(
                min >= r1 - 1e-3,
                "{}: boundary distance {min} vs r1 {r1}",
                ent.name
            );
        }
    }

    #[test]
    fn extremal_derivatives_match_finite_differences() {
        // One closed-form entry and one quadrature entry.
        let z = Complex64::new(0.3, 0.2);
        let h = 1e-5;
        for name in [MaMindaName::Rl, MaMindaName::E] {
            let f0 = &entry(name).f0;
            let fd = (f0.eval(z + h).unwrap() - f0.eval(z - h).unwrap()) / (2.0 * h);
            let an = f0.deriv1(z).unwrap();
            assert!((fd - an).norm() < 1e-6 * an.norm().max(1.0), "{name}: {fd} vs {an}");
            let fd2 = (f0.deriv1(z + h).unwrap() - f0.deriv1(z - h).unwrap()) / (2.0 * h);
            let an2 = f0.deriv2(z).unwrap();
            assert!(
                (fd2 - an2).norm() < 1e-5 * an2.norm().max(1.0),
                "{name}: {fd2} vs {an2}"
            );
        }
    }

    #[test]
    fn rl_extremal_normalization() {
        let f0 = &entry(MaMindaName::Rl).f0;
        assert!(f0.eval(Complex64::new(0.0, 0.0)).unwrap().norm() < 1e-15);
        // f0'(0) = 1 via the a_1 coefficient.
        let coeffs = taylor_coefficients(f0, 2, 0.4, 256).unwrap();
        assert!((coeffs[0] - one()).norm() < 1e-10);
        // a_2 = phi'(0) = (5 - 3 sqrt(2))/2.
        assert!((coeffs[1].re - (5.0 - 3.0 * SQRT2) / 2.0).abs() < 1e-10);
    }

    #[test]
    fn growth_is_attained_on_positive_axis() {
        // Spot check: the growth value is the actual circle maximum of |f0|.
        let grid = scan_grid();
        for name in [MaMindaName::C, MaMindaName::E] {
            let ent = entry(name);
            let sup = sup_on_circle(|z| Ok(ent.f0.eval(z)?.norm()), 0.5, &grid)
                .unwrap()
                .sup;
            assert!((sup - ent.growth(0.5).unwrap()).abs() < 1e-8, "{name}");
        }
    }

    #[test]
    fn omega_functional_of_extremal_equals_f0_times_phi_minus_one() {
        // z f0' - f0 = f0 (phi - 1): the identity the sharpness checks rest on.
        let ent = entry(MaMindaName::Wp);
        let z = Complex64::new(0.25, 0.3);
        let lhs = omega_functional(&ent.f0, z).unwrap();
        let rhs = (ent.f0.eval(z).unwrap() * (ent.phi.eval(z).unwrap() - one())).norm();
        assert!((lhs - rhs).abs() < 1e-12);
    }

    #[test]
    fn radius_domain_is_enforced() {
        assert!(dist_max(MaMindaName::E, 0.0).is_err());
        assert!(dist_max(MaMindaName::E, 1.0).is_err());
        assert!(growth_m(MaMindaName::E, -0.5).is_err());
    }
}
