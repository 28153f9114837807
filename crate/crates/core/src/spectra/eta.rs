//! Eta functions of finite non-self-adjoint spectra and the Mellin
//! identity splitting them into a finite part and a heat-trace integral.

use super::quad::{integrate_adaptive, integrate_tail};
use super::special::gamma;
use super::{AgmonAngle, SpectraError};
use crate::geodata::OperatorSpectrum;
use num::complex::Complex64;

fn classify(z: &Complex64) -> Result<(bool, bool), SpectraError> {
    if z.norm() == 0.0 {
        return Err(SpectraError::ZeroEigenvalue);
    }
    if z.re == 0.0 {
        return Err(SpectraError::ImaginaryAxisEigenvalue(*z));
    }
    // (right half-plane?, Re(lambda^2) > 0?)
    Ok((z.re > 0.0, z.re.abs() > z.im.abs()))
}

/// `eta_theta(s) = sum_{Re>0} m lambda^(-s) - sum_{Re<0} m (-lambda)^(-s)`
/// in the branch of the given Agmon angle.
pub fn eta_function(
    spec: &OperatorSpectrum,
    angle: &AgmonAngle,
    s: Complex64,
) -> Result<Complex64, SpectraError> {
    eta_with_split(spec, angle, s).map(|(eta, _, _)| eta)
}

/// `(eta, eta0, eta1)` where `eta0` collects the finitely many terms
/// with `Re(lambda^2) <= 0` and `eta1` the rest.
pub fn eta_with_split(
    spec: &OperatorSpectrum,
    angle: &AgmonAngle,
    s: Complex64,
) -> Result<(Complex64, Complex64, Complex64), SpectraError> {
    let mut eta0 = Complex64::new(0.0, 0.0);
    let mut eta1 = Complex64::new(0.0, 0.0);
    for (z, m) in spec.entries() {
        let (right, sq_positive) = classify(z)?;
        let base = if right { *z } else { -*z };
        let term = (*m as f64) * angle.power_neg(base, s)?;
        let signed = if right { term } else { -term };
        if sq_positive {
            eta1 += signed;
        } else {
            eta0 += signed;
        }
    }
    Ok((eta0 + eta1, eta0, eta1))
}

/// Value at `s = 0`: the signed eigenvalue count, an integer independent
/// of the Agmon angle.
pub fn eta_invariant(spec: &OperatorSpectrum) -> Result<i64, SpectraError> {
    let mut acc = 0i64;
    for (z, m) in spec.entries() {
        let (right, _) = classify(z)?;
        acc += if right { *m as i64 } else { -(*m as i64) };
    }
    Ok(acc)
}

/// Report of the Mellin-identity check
/// `eta(s) = eta0(s) + Gamma((s+1)/2)^(-1) int_0^inf Tr(Pi_+ D e^(-t D^2)) t^((s-1)/2) dt`.
#[derive(Debug, Clone)]
pub struct EtaSplitReport {
    pub per_point: Vec<(Complex64, f64)>,
    pub max_residual: f64,
    /// whether the branch of the Agmon angle restricts to the principal
    /// branch on the spectrum (the identity pins that convention; a
    /// mismatched cut makes the residual meaningless)
    pub branch_compatible: bool,
    pub quadrature_error: f64,
}

/// Evaluate both sides of the Mellin identity on an `s`-grid and report
/// the largest residual. The heat-trace integral runs over the spectral
/// projection onto `Re(lambda^2) > 0` and is computed by adaptive
/// quadrature on `(0, 1]` (after `t = u^2`) plus a geometric tail.
pub fn eta_split_identity_residual(
    spec: &OperatorSpectrum,
    angle: &AgmonAngle,
    s_grid: &[Complex64],
    quad_tol: f64,
) -> Result<EtaSplitReport, SpectraError> {
    let mut plus: Vec<(Complex64, f64)> = Vec::new();
    let mut base_args: Vec<f64> = Vec::new();
    for (z, m) in spec.entries() {
        let (right, sq_positive) = classify(z)?;
        let base = if right { *z } else { -*z };
        base_args.push(base.arg());
        if sq_positive {
            plus.push((*z, *m as f64));
        }
    }
    // The Mellin side produces principal powers on the reflected
    // spectrum, so the identity holds on the sheet of the cut whose
    // window contains every base argument as a principal value. Select
    // that sheet of the caller's cut when it exists.
    let two_pi = 2.0 * std::f64::consts::PI;
    let sheet_ok = |theta: f64| {
        base_args
            .iter()
            .all(|&a| a > theta + 1e-14 && a < theta + two_pi - 1e-14)
    };
    let (angle, branch_compatible) = if sheet_ok(angle.theta()) {
        (*angle, true)
    } else if sheet_ok(angle.theta() - two_pi) {
        (angle.shifted_sheet(-1), true)
    } else if sheet_ok(angle.theta() + two_pi) {
        (angle.shifted_sheet(1), true)
    } else {
        (*angle, false)
    };
    let heat = move |t: f64| -> Complex64 {
        plus.iter().map(|(z, m)| *m * z * (-t * z * z).exp()).sum()
    };

    let mut per_point = Vec::new();
    let mut max_residual: f64 = 0.0;
    let mut quad_err_total: f64 = 0.0;
    for &s in s_grid {
        let (eta, eta0, _) = eta_with_split(spec, &angle, s)?;
        // (0,1] after t = u^2: 2 int_0^1 f(u^2) u^s du
        let (head, e1) = integrate_adaptive(
            |u| {
                if u <= 0.0 {
                    Complex64::new(0.0, 0.0)
                } else {
                    2.0 * heat(u * u) * (s * u.ln()).exp()
                }
            },
            0.0,
            1.0,
            quad_tol,
        )?;
        let (tail, e2) = integrate_tail(
            |t| heat(t) * ((s - Complex64::new(1.0, 0.0)) * 0.5 * t.ln()).exp(),
            1.0,
            quad_tol,
        )?;
        let mellin = (head + tail) / gamma((s + Complex64::new(1.0, 0.0)) / 2.0);
        let residual = (eta - eta0 - mellin).norm();
        quad_err_total += e1 + e2;
        max_residual = max_residual.max(residual);
        per_point.push((s, residual));
    }
    Ok(EtaSplitReport {
        per_point,
        max_residual,
        branch_compatible,
        quadrature_error: quad_err_total,
    })
}
