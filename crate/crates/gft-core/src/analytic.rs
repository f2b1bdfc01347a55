//! Normalized analytic functions on the unit disk: truncated power series,
//! a uniform closure-based function carrier, the two class functionals, and
//! sup estimation on circles.

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{GftError, Result};
use crate::tol;

/// Truncated Taylor coefficients a_1..a_N of a normalized f(z) = z + ... in
/// the class A_n (coefficients a_2..a_n vanish).
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeries {
    coeffs: Vec<Complex64>,
    order_n: usize,
}

impl PowerSeries {
    /// Validates the normalization a_1 = 1 and the A_n gap a_2 = .. = a_n = 0.
    pub fn new(coeffs: Vec<Complex64>, order_n: usize) -> Result<PowerSeries> {
        if order_n < 1 {
            return Err(GftError::Domain("order n must be >= 1".into()));
        }
        if coeffs.len() < order_n + 1 {
            return Err(GftError::Domain(format!(
                "need at least {} coefficients for A_{}, got {}",
                order_n + 1,
                order_n,
                coeffs.len()
            )));
        }
        let a1 = coeffs[0];
        if (a1 - Complex64::new(1.0, 0.0)).norm() > 1e-14 {
            return Err(GftError::Domain(format!("a_1 must equal 1, got {a1}")));
        }
        for (i, a) in coeffs.iter().enumerate().take(order_n).skip(1) {
            if a.norm() > 1e-14 {
                return Err(GftError::Domain(format!(
                    "a_{} must vanish for membership in A_{}, got {}",
                    i + 1,
                    order_n,
                    a
                )));
            }
        }
        Ok(PowerSeries { coeffs, order_n })
    }

    /// Shorthand for real coefficient lists in A_1.
    pub fn from_real(coeffs: &[f64]) -> Result<PowerSeries> {
        PowerSeries::new(
            coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
            1,
        )
    }

    /// The identity function f(z) = z.
    pub fn identity() -> PowerSeries {
        PowerSeries {
            coeffs: vec![Complex64::new(1.0, 0.0)],
            order_n: 1,
        }
    }

    /// Koebe function truncation: a_k = k for k = 1..terms.
    pub fn koebe(terms: usize) -> PowerSeries {
        PowerSeries {
            coeffs: (1..=terms)
                .map(|k| Complex64::new(k as f64, 0.0))
                .collect(),
            order_n: 1,
        }
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn order_n(&self) -> usize {
        self.order_n
    }

    pub fn truncation_n(&self) -> usize {
        self.coeffs.len()
    }

    /// Geometric bound on the discarded tail at radius r:
    /// max|a_k| * r^(N+1) / (1 - r).
    pub fn tail_bound(&self, r: f64) -> f64 {
        let amax = self
            .coeffs
            .iter()
            .map(|a| a.norm())
            .fold(0.0_f64, f64::max);
        amax * r.powi(self.coeffs.len() as i32 + 1) / (1.0 - r)
    }
}

/// Evaluates a truncated series by Horner's rule; rejects |z| >= 1.
pub fn eval_series(s: &PowerSeries, z: Complex64) -> Result<Complex64> {
    if z.norm() >= 1.0 {
        return Err(GftError::OutsideDisk { modulus: z.norm() });
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for a in s.coeffs.iter().rev() {
        acc = acc * z + a;
    }
    Ok(acc * z)
}

/// Derivative of the truncated series, by Horner on the shifted coefficient
/// list (a_k multiplies z^k, so f' has coefficient k*a_k on z^(k-1)).
pub fn eval_series_deriv(s: &PowerSeries, z: Complex64, order: u32) -> Result<Complex64> {
    if z.norm() >= 1.0 {
        return Err(GftError::OutsideDisk { modulus: z.norm() });
    }
    let mut acc = Complex64::new(0.0, 0.0);
    match order {
        1 => {
            for (idx, a) in s.coeffs.iter().enumerate().rev() {
                let k = (idx + 1) as f64;
                acc = acc * z + k * a;
            }
        }
        2 => {
            for (idx, a) in s.coeffs.iter().enumerate().skip(1).rev() {
                let k = (idx + 1) as f64;
                acc = acc * z + k * (k - 1.0) * a;
            }
        }
        _ => unreachable!("only first and second derivatives are used"),
    }
    Ok(acc)
}

/// How an [`AnalyticMap`] obtains its values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Provenance {
    ClosedForm,
    Series,
    Quadrature,
}

type EvalFn = Arc<dyn Fn(Complex64) -> Result<Complex64> + Send + Sync>;

/// A function analytic on the unit disk, carried as evaluation closures for
/// the value and its first two derivatives. The uniform carrier for f, phi,
/// omega, and the extremal functions.
#[derive(Clone)]
pub struct AnalyticMap {
    eval: EvalFn,
    deriv1: EvalFn,
    deriv2: EvalFn,
    pub provenance: Provenance,
}

impl fmt::Debug for AnalyticMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AnalyticMap")
            .field("provenance", &self.provenance)
            .finish_non_exhaustive()
    }
}

impl AnalyticMap {
    /// Wraps explicit closures for w, w', w''.
    pub fn from_closures<E, D1, D2>(eval: E, deriv1: D1, deriv2: D2, provenance: Provenance) -> Self
    where
        E: Fn(Complex64) -> Result<Complex64> + Send + Sync + 'static,
        D1: Fn(Complex64) -> Result<Complex64> + Send + Sync + 'static,
        D2: Fn(Complex64) -> Result<Complex64> + Send + Sync + 'static,
    {
        AnalyticMap {
            eval: Arc::new(eval),
            deriv1: Arc::new(deriv1),
            deriv2: Arc::new(deriv2),
            provenance,
        }
    }

    /// Horner evaluation of a truncated series.
    pub fn from_series(s: &PowerSeries) -> Self {
        let s1 = s.clone();
        let s2 = s.clone();
        let s3 = s.clone();
        AnalyticMap {
            eval: Arc::new(move |z| eval_series(&s1, z)),
            deriv1: Arc::new(move |z| eval_series_deriv(&s2, z, 1)),
            deriv2: Arc::new(move |z| eval_series_deriv(&s3, z, 2)),
            provenance: Provenance::Series,
        }
    }

    /// The identity map f(z) = z.
    pub fn identity() -> Self {
        AnalyticMap::from_closures(
            Ok,
            |_| Ok(Complex64::new(1.0, 0.0)),
            |_| Ok(Complex64::new(0.0, 0.0)),
            Provenance::ClosedForm,
        )
    }

    /// The Koebe function z/(1-z)^2.
    pub fn koebe() -> Self {
        let one = Complex64::new(1.0, 0.0);
        AnalyticMap::from_closures(
            move |z| Ok(z / ((one - z) * (one - z))),
            move |z| {
                let d = one - z;
                Ok((one + z) / (d * d * d))
            },
            move |z| {
                let d = one - z;
                Ok((2.0 * z + 4.0) / (d * d * d * d))
            },
            Provenance::ClosedForm,
        )
    }

    /// The half-plane-type map z/(1 - cz) used as the sharp function of the
    /// subordination theorem.
    pub fn mobius_starlike(c: f64) -> Self {
        let one = Complex64::new(1.0, 0.0);
        AnalyticMap::from_closures(
            move |z| Ok(z / (one - c * z)),
            move |z| {
                let d = one - c * z;
                Ok(one / (d * d))
            },
            move |z| {
                let d = one - c * z;
                Ok(Complex64::new(2.0 * c, 0.0) / (d * d * d))
            },
            Provenance::ClosedForm,
        )
    }

    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        (self.eval)(z)
    }

    pub fn deriv1(&self, z: Complex64) -> Result<Complex64> {
        (self.deriv1)(z)
    }

    pub fn deriv2(&self, z: Complex64) -> Result<Complex64> {
        (self.deriv2)(z)
    }
}

/// The defining modulus of the Silverman-type class:
/// |(1 - alpha + alpha z f''/f') / (z f'/f) - (1 - alpha)|.
pub fn g_functional(f: &AnalyticMap, z: Complex64, alpha: f64) -> Result<f64> {
    if !(0.0 < alpha && alpha <= 1.0) {
        return Err(GftError::Domain(format!(
            "g_functional needs 0 < alpha <= 1, got {alpha}"
        )));
    }
    if z.norm() == 0.0 {
        // zf'/f -> 1 and zf''/f' -> 0; the functional vanishes at the origin.
        return Ok(0.0);
    }
    let fz = f.eval(z)?;
    let f1 = f.deriv1(z)?;
    if fz.norm() < tol::POLE_GUARD {
        return Err(GftError::Pole {
            what: "f",
            z,
            denom: fz.norm(),
        });
    }
    if f1.norm() < tol::POLE_GUARD {
        return Err(GftError::Pole {
            what: "f'",
            z,
            denom: f1.norm(),
        });
    }
    let f2 = f.deriv2(z)?;
    let one_minus_a = Complex64::new(1.0 - alpha, 0.0);
    let num = one_minus_a + alpha * z * f2 / f1;
    let ratio = z * f1 / fz;
    Ok((num / ratio - one_minus_a).norm())
}

/// |z f'(z) - f(z)|, the defining modulus of the half-width class.
pub fn omega_functional(f: &AnalyticMap, z: Complex64) -> Result<f64> {
    if z.norm() >= 1.0 {
        return Err(GftError::OutsideDisk { modulus: z.norm() });
    }
    Ok((z * f.deriv1(z)? - f.eval(z)?).norm())
}

/// Radial/angular sampling specification for sup estimation on |z| <= r.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DiskGrid {
    pub radii: Vec<f64>,
    pub angular: usize,
    pub guard: f64,
}

impl DiskGrid {
    pub fn new(radii: Vec<f64>, angular: usize, guard: f64) -> Result<DiskGrid> {
        if angular < 64 {
            return Err(GftError::Domain(format!(
                "angular nodes must be >= 64, got {angular}"
            )));
        }
        if !(0.0 < guard && guard < 1.0) {
            return Err(GftError::Domain(format!("guard must lie in (0,1), got {guard}")));
        }
        if !radii.windows(2).all(|w| w[0] < w[1]) || radii.iter().any(|&r| r <= 0.0 || r >= 1.0) {
            return Err(GftError::Domain(
                "radii must be strictly increasing inside (0,1)".into(),
            ));
        }
        Ok(DiskGrid {
            radii,
            angular,
            guard,
        })
    }

    /// Nine interior circles, 4096 angles, guard circle at 0.999.
    pub fn default_grid() -> DiskGrid {
        DiskGrid {
            radii: (1..=9).map(|k| k as f64 / 10.0).collect(),
            angular: tol::DEFAULT_ANGULAR,
            guard: tol::DEFAULT_GUARD,
        }
    }

    /// Same shape with a different guard radius.
    pub fn with_guard(guard: f64) -> Result<DiskGrid> {
        DiskGrid::new((1..=9).map(|k| k as f64 / 10.0).collect(), tol::DEFAULT_ANGULAR, guard)
    }
}

/// Sup of a scalar field over one circle, with its angular argmax.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct SupEstimate {
    pub sup: f64,
    pub theta: f64,
}

/// Maximum of `g` over the circle |z| = r: full angular scan at the grid
/// resolution, then one golden-section polish around the discrete argmax.
pub fn sup_on_circle<G>(g: G, r: f64, grid: &DiskGrid) -> Result<SupEstimate>
where
    G: Fn(Complex64) -> Result<f64>,
{
    if !(0.0 < r && r < 1.0) {
        return Err(GftError::Domain(format!("circle radius must lie in (0,1), got {r}")));
    }
    let m = grid.angular;
    let tau = std::f64::consts::TAU;
    let at = |theta: f64| -> Result<f64> { g(Complex64::from_polar(r, theta)) };

    let mut best = f64::NEG_INFINITY;
    let mut best_j = 0usize;
    for j in 0..m {
        let v = at(tau * j as f64 / m as f64)?;
        if v > best {
            best = v;
            best_j = j;
        }
    }

    // Golden-section refinement on the two cells around the argmax.
    let step = tau / m as f64;
    let mut lo = step * (best_j as f64 - 1.0);
    let mut hi = step * (best_j as f64 + 1.0);
    const INV_PHI: f64 = 0.618_033_988_749_894_8;
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = at(x1)?;
    let mut f2 = at(x2)?;
    for _ in 0..64 {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = at(x2)?;
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = at(x1)?;
        }
        if hi - lo < 1e-13 {
            break;
        }
    }
    let (vr, tr) = if f1 > f2 { (f1, x1) } else { (f2, x2) };
    if vr > best {
        Ok(SupEstimate {
            sup: vr,
            theta: tr.rem_euclid(tau),
        })
    } else {
        Ok(SupEstimate {
            sup: best,
            theta: (step * best_j as f64).rem_euclid(tau),
        })
    }
}

/// Recovers Taylor coefficients a_1..a_count of `f` by the trapezoid rule on
/// the circle |z| = rho; spectrally accurate for analytic integrands.
pub fn taylor_coefficients(f: &AnalyticMap, count: usize, rho: f64, m: usize) -> Result<Vec<Complex64>> {
    let tau = std::f64::consts::TAU;
    let vals: Vec<Complex64> = (0..m)
        .map(|j| f.eval(Complex64::from_polar(rho, tau * j as f64 / m as f64)))
        .collect::<Result<_>>()?;
    let mut out = Vec::with_capacity(count);
    for k in 1..=count {
        let mut acc = Complex64::new(0.0, 0.0);
        for (j, v) in vals.iter().enumerate() {
            let ang = -tau * (j as f64) * (k as f64) / m as f64;
            acc += v * Complex64::from_polar(1.0, ang);
        }
        out.push(acc / (m as f64 * rho.powi(k as i32)));
    }
    Ok(out)
}

/// On-disk document shape for a series: {"n": 1, "coeffs": [[re, im], ...]}
/// with coeffs[0] holding a_1 = [1, 0].
#[derive(Debug, Serialize, Deserialize)]
pub struct SeriesDocument {
    pub n: usize,
    pub coeffs: Vec<[f64; 2]>,
}

impl SeriesDocument {
    pub fn from_series(s: &PowerSeries) -> SeriesDocument {
        SeriesDocument {
            n: s.order_n(),
            coeffs: s.coeffs().iter().map(|a| [a.re, a.im]).collect(),
        }
    }

    pub fn parse(text: &str) -> Result<SeriesDocument> {
        serde_json::from_str(text).map_err(|e| GftError::BadDocument(e.to_string()))
    }

    pub fn into_series(self) -> Result<PowerSeries> {
        PowerSeries::new(
            self.coeffs
                .iter()
                .map(|&[re, im]| Complex64::new(re, im))
                .collect(),
            self.n,
        )
    }

    /// Reads the same document shape without the normalization constraint:
    /// coeffs[k] is the coefficient of z^k (so coeffs[0] is the constant
    /// term) and "n" is ignored. Used for the perturbation g of the
    /// double-integral construction, which is not a normalized function.
    pub fn into_raw_map(self) -> AnalyticMap {
        raw_polynomial(
            self.coeffs
                .iter()
                .map(|&[re, im]| Complex64::new(re, im))
                .collect(),
        )
    }
}

/// Map for a raw (not necessarily normalized) polynomial Σ c[k]·z^k, with
/// c[0] the constant term. Derivative coefficient lists are precomputed so
/// all three evaluations are plain Horner passes.
pub fn raw_polynomial(c: Vec<Complex64>) -> AnalyticMap {
    fn horner(cs: &[Complex64], z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for a in cs.iter().rev() {
            acc = acc * z + a;
        }
        acc
    }
    let d1: Vec<Complex64> = c
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, a)| k as f64 * a)
        .collect();
    let d2: Vec<Complex64> = c
        .iter()
        .enumerate()
        .skip(2)
        .map(|(k, a)| (k * (k - 1)) as f64 * a)
        .collect();
    AnalyticMap::from_closures(
        move |z| Ok(horner(&c, z)),
        move |z| Ok(horner(&d1, z)),
        move |z| Ok(horner(&d2, z)),
        Provenance::Series,
    )
}
