//! Sufficient-condition thresholds for the Silverman-type class and the
//! double-integral construction that manufactures members from any small
//! analytic perturbation g.
//!
//! Two sufficient conditions are implemented. With f normalized and n the
//! class index,
//!
//!   first:  |z f''(z) - alpha (f'(z) - f(z)/z)| < delta
//!   second: |z f''(z) - alpha (f'(z) - 1)|      < delta (n+1)(n-alpha)/(alpha + (n+1)(n-alpha))
//!
//! where delta = delta_threshold. Either bound places f in G_{lambda,alpha}.

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::analytic::{raw_polynomial, sup_on_circle, AnalyticMap, DiskGrid, Provenance};
use crate::error::{GftError, Result};
use crate::oracles::{MembershipReport, GRID_CAVEAT};
use crate::quad::gauss_rule;
use crate::tol;

/// Parameters (lambda, alpha, n) of the class G_{lambda,alpha} over A_n.
///
/// The constructor admits alpha in [0, 1]; the threshold operations insist
/// on alpha < 1 and the subordination/inclusion operations on alpha > 1/3,
/// each enforced where used.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassParams {
    pub lambda: f64,
    pub alpha: f64,
    pub n: u32,
}

impl ClassParams {
    pub fn new(lambda: f64, alpha: f64, n: u32) -> Result<ClassParams> {
        if !(lambda > 0.0 && lambda.is_finite()) {
            return Err(GftError::Domain(format!("need lambda > 0, got {lambda}")));
        }
        if !(0.0..=1.0).contains(&alpha) {
            return Err(GftError::Domain(format!("need 0 <= alpha <= 1, got {alpha}")));
        }
        if n < 1 {
            return Err(GftError::Domain("need n >= 1".into()));
        }
        Ok(ClassParams { lambda, alpha, n })
    }

    /// Domain of the threshold results: 0 <= alpha < 1.
    pub fn require_threshold_domain(&self) -> Result<()> {
        if self.alpha >= 1.0 {
            return Err(GftError::Domain(format!(
                "threshold results need alpha < 1, got {}",
                self.alpha
            )));
        }
        Ok(())
    }

    /// Domain of the subordination/inclusion results: 1/3 < alpha <= 1.
    pub fn require_subordination_domain(&self) -> Result<()> {
        if self.alpha <= 1.0 / 3.0 {
            return Err(GftError::Domain(format!(
                "subordination results need alpha > 1/3, got {}",
                self.alpha
            )));
        }
        Ok(())
    }

    /// The subordination constant c = lambda/(3 alpha - 1).
    pub fn subordination_c(&self) -> Result<f64> {
        self.require_subordination_domain()?;
        Ok(self.lambda / (3.0 * self.alpha - 1.0))
    }
}

/// Which of the two sufficient conditions is meant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Condition {
    /// |z f'' - alpha (f' - f/z)| < delta, built from g r^{n-alpha} s^{n-1}.
    First,
    /// |z f'' - alpha (f' - 1)| < contracted delta, built from g r^{n-1-alpha} s^{n}.
    Second,
}

/// Coefficients (a, b, c) of the quadratic a r^2 + b r + c whose smallest
/// positive root is the first threshold.
pub fn delta_quadratic(p: &ClassParams) -> (f64, f64, f64) {
    let n = p.n as f64;
    let al = p.alpha;
    let l = p.lambda;
    let a = (1.0 + n) * (2.0 * al * n - l * (n + 1.0) - n);
    let b = n * (1.0 - al + n) * (2.0 * l * (n + 1.0) + n + al * n * n);
    let c = -l * n * n * (n + 1.0 - al) * (n + 1.0 - al);
    (a, b, c)
}

/// The first sufficient-condition threshold delta: the smallest positive
/// root of [`delta_quadratic`], by the rationalized closed form
/// 2 lambda n (n+1-alpha) / (n + alpha n^2 + 2 lambda (n+1) + sqrt(...)).
///
/// The closed form is cross-checked in place: the quadratic residual must
/// vanish to within [`tol::QUADRATIC_RESIDUAL`] (relative to the constant
/// term) and the strict inequality delta (n+1) < n (n+1-alpha) that the
/// downstream modulus bounds rest on must hold.
pub fn delta_threshold(p: &ClassParams) -> Result<f64> {
    p.require_threshold_domain()?;
    let n = p.n as f64;
    let al = p.alpha;
    let l = p.lambda;
    let disc = n * n
        + al * al * n.powi(4)
        + 2.0 * al * n.powi(3)
        + 8.0 * al * l * n
        + 12.0 * al * l * n * n
        + 4.0 * al * l * n.powi(3);
    let delta = 2.0 * l * n * (n + 1.0 - al) / (n + al * n * n + 2.0 * l * (n + 1.0) + disc.sqrt());

    let (qa, qb, qc) = delta_quadratic(p);
    let residual = (qa * delta * delta + qb * delta + qc).abs();
    let scale = qc.abs().max(1.0);
    if residual > tol::QUADRATIC_RESIDUAL * scale {
        return Err(GftError::Domain(format!(
            "threshold closed form inconsistent with its quadratic: residual {residual:.3e}"
        )));
    }
    if delta * (n + 1.0) >= n * (n + 1.0 - al) {
        return Err(GftError::Domain(format!(
            "threshold {delta} violates delta (n+1) < n (n+1-alpha)"
        )));
    }
    Ok(delta)
}

/// The second sufficient-condition threshold:
/// delta (n+1)(n-alpha) / (alpha + (n+1)(n-alpha)).
pub fn second_threshold(p: &ClassParams) -> Result<f64> {
    p.require_threshold_domain()?;
    let n = p.n as f64;
    if n <= p.alpha {
        return Err(GftError::Domain(format!(
            "second condition needs n > alpha, got n = {n}, alpha = {}",
            p.alpha
        )));
    }
    let delta = delta_threshold(p)?;
    let factor = (n + 1.0) * (n - p.alpha) / (p.alpha + (n + 1.0) * (n - p.alpha));
    Ok(delta * factor)
}

/// Threshold belonging to `condition`.
pub fn condition_threshold(p: &ClassParams, condition: Condition) -> Result<f64> {
    match condition {
        Condition::First => delta_threshold(p),
        Condition::Second => second_threshold(p),
    }
}

/// Exponent pair (e1, e2) of the weight r^{e1} s^{e2} for `condition`.
fn weight_exponents(p: &ClassParams, condition: Condition) -> (f64, f64) {
    let n = p.n as f64;
    match condition {
        Condition::First => (n - p.alpha, n - 1.0),
        Condition::Second => (n - 1.0 - p.alpha, n),
    }
}

/// One axis of the tensor rule, with the weight power folded into the node
/// weights: nodes r_i in (0,1) and weights w_i such that
/// SUM w_i h(r_i) approximates INT_0^1 r^{e} h(r) dr.
///
/// The fractional power r^e is regularized by the substitution r = u^m with
/// m the smallest integer giving a u-exponent >= 2, so Gauss-Legendre sees
/// a C^2 integrand instead of an endpoint singularity (e can dip below 0
/// down to alpha - 1 > -1 for the second-condition inner axis).
fn weighted_axis(e: f64, shift: f64, nodes: usize) -> Vec<(f64, f64)> {
    let m = ((3.0 / (e + 1.0)).ceil() as i32).clamp(1, 32);
    let rule = gauss_rule(nodes);
    rule.nodes
        .iter()
        .zip(&rule.weights)
        .map(|(x, w)| {
            let u = 0.5 * (x + 1.0);
            let r = u.powi(m);
            let wt = 0.5 * w * m as f64 * u.powf(m as f64 * (e + shift + 1.0) - 1.0);
            (r, wt)
        })
        .collect()
}

type Axis = Vec<(f64, f64)>;

fn tensor_apply(
    g: &AnalyticMap,
    order: u32,
    rw: &Axis,
    sw: &Axis,
    z: Complex64,
) -> Result<Complex64> {
    let mut acc = Complex64::new(0.0, 0.0);
    for &(r, wr) in rw {
        let mut row = Complex64::new(0.0, 0.0);
        for &(s, ws) in sw {
            let arg = r * s * z;
            let v = match order {
                0 => g.eval(arg)?,
                1 => g.deriv1(arg)?,
                _ => g.deriv2(arg)?,
            };
            row += ws * v;
        }
        acc += wr * row;
    }
    Ok(acc)
}

/// Member construction: f(z) = z + z^{n+1} T(z) with
/// T(z) = INT INT g(r s z) r^{e1} s^{e2} dr ds over the unit square, by
/// tensor-product Gauss-Legendre at [`tol::TENSOR_NODES`] nodes per axis.
///
/// Derivatives differentiate under the integral sign:
/// T'  = INT INT g'(rsz)  (rs)   r^{e1} s^{e2},
/// T'' = INT INT g''(rsz) (rs)^2 r^{e1} s^{e2},
/// so the (rs)^k factors fold into shifted weight exponents.
///
/// A construction-time Richardson probe re-evaluates T and T'' at one
/// interior point with [`tol::TENSOR_NODES_CHECK`] nodes and rejects the
/// construction if the two sizes disagree beyond [`tol::TENSOR_CHECK_TOL`].
pub fn build_double_integral_fn(
    g: &AnalyticMap,
    p: &ClassParams,
    condition: Condition,
) -> Result<AnalyticMap> {
    p.require_threshold_domain()?;
    let (e1, e2) = weight_exponents(p, condition);

    let axes: Vec<(Axis, Axis)> = (0..3)
        .map(|k| {
            (
                weighted_axis(e1, k as f64, tol::TENSOR_NODES),
                weighted_axis(e2, k as f64, tol::TENSOR_NODES),
            )
        })
        .collect();

    // Richardson probe on the value and the heaviest derivative.
    let probe = Complex64::from_polar(0.9, 0.63);
    for &order in &[0u32, 2] {
        let (rw, sw) = &axes[order.min(2) as usize];
        let coarse = tensor_apply(g, order, rw, sw, probe)?;
        let fine = tensor_apply(
            g,
            order,
            &weighted_axis(e1, order as f64, tol::TENSOR_NODES_CHECK),
            &weighted_axis(e2, order as f64, tol::TENSOR_NODES_CHECK),
            probe,
        )?;
        let err = (fine - coarse).norm();
        let want = tol::TENSOR_CHECK_TOL * coarse.norm().max(1.0);
        if err > want {
            return Err(GftError::Quadrature {
                achieved: err,
                wanted: want,
            });
        }
    }

    let n = p.n;
    let nf = n as f64;
    let one = Complex64::new(1.0, 0.0);

    let g0 = g.clone();
    let (rw0, sw0) = axes[0].clone();
    let g1 = g.clone();
    let (rw1, sw1) = axes[1].clone();
    let g2 = g.clone();
    let (rw2, sw2) = axes[2].clone();
    let (rw0b, sw0b) = axes[0].clone();
    let g0b = g.clone();
    let (rw01, sw01) = axes[0].clone();
    let (rw11, sw11) = axes[1].clone();
    let g01 = g.clone();
    let g11 = g.clone();

    Ok(AnalyticMap::from_closures(
        move |z| {
            let t = tensor_apply(&g0, 0, &rw0, &sw0, z)?;
            Ok(z + z.powu(n + 1) * t)
        },
        move |z| {
            let t = tensor_apply(&g01, 0, &rw01, &sw01, z)?;
            let t1 = tensor_apply(&g11, 1, &rw11, &sw11, z)?;
            Ok(one + (nf + 1.0) * z.powu(n) * t + z.powu(n + 1) * t1)
        },
        move |z| {
            let t = tensor_apply(&g0b, 0, &rw0b, &sw0b, z)?;
            let t1 = tensor_apply(&g1, 1, &rw1, &sw1, z)?;
            let t2 = tensor_apply(&g2, 2, &rw2, &sw2, z)?;
            Ok(nf * (nf + 1.0) * z.powu(n.saturating_sub(1)) * t
                + 2.0 * (nf + 1.0) * z.powu(n) * t1
                + z.powu(n + 1) * t2)
        },
        Provenance::Quadrature,
    ))
}

/// Estimates the sup of the chosen condition's left-hand side on the guard
/// circle and compares it with the condition's threshold.
pub fn check_sufficient_condition(
    f: &AnalyticMap,
    p: &ClassParams,
    condition: Condition,
    grid: &DiskGrid,
) -> Result<MembershipReport> {
    let threshold = condition_threshold(p, condition)?;
    let alpha = p.alpha;
    let one = Complex64::new(1.0, 0.0);
    let lhs = |z: Complex64| -> Result<f64> {
        let d1 = f.deriv1(z)?;
        let d2 = f.deriv2(z)?;
        let sub = match condition {
            Condition::First => d1 - f.eval(z)? / z,
            Condition::Second => d1 - one,
        };
        Ok((z * d2 - alpha * sub).norm())
    };
    let est = sup_on_circle(lhs, grid.guard, grid)?;
    Ok(MembershipReport {
        satisfied: est.sup < threshold,
        sup_value: est.sup,
        threshold,
        argmax: (grid.guard, est.theta),
        caveat: GRID_CAVEAT,
        marginal: (est.sup - threshold).abs() < tol::MARGINAL_BAND,
    })
}

/// Seeded family of random low-degree polynomials g with SUM |c_k| =
/// `sup_bound`, so sup_{|z|<1} |g| <= `sup_bound` by the triangle
/// inequality. The generator is fixed so suites are reproducible.
pub fn seeded_polynomials(seed: u64, count: usize, degree: usize, sup_bound: f64) -> Vec<AnalyticMap> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut coeffs: Vec<Complex64> = (0..=degree)
                .map(|_| Complex64::new(rng.random_range(-1.0..=1.0), rng.random_range(-1.0..=1.0)))
                .collect();
            let total: f64 = coeffs.iter().map(|c| c.norm()).sum();
            // total = 0 has probability zero; guard anyway.
            let scale = if total > 0.0 { sup_bound / total } else { 0.0 };
            for c in &mut coeffs {
                *c *= scale;
            }
            raw_polynomial(coeffs)
        })
        .collect()
}
