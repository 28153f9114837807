//! Plancherel polynomials, their integrals, the Casimir shift, the
//! alternating exterior-power sum, and the Euler characteristic of the
//! compact dual flag space.
//!
//! The normalization is fixed by interpolation of compact-form
//! dimensions: `P_sigma(lambda + rho)` equals the Weyl dimension of the
//! rank-`(d+1)/2` type-D representation whose torus coordinate is
//! `lambda` and whose remaining coordinates are the highest weight of
//! `sigma`. In that convention `P_sigma` has the closed form
//!
//! ```text
//! P_sigma(s) = prod_k (s^2 - mu_k^2) * prod_{k<l} (mu_k^2 - mu_l^2) / W
//! ```
//!
//! with `mu = nu_sigma + rho_m` and `W` the positive-root product of the
//! compact form at its Weyl vector. The polynomial is even of degree
//! `d - 1` for every `sigma`, with exact rational coefficients.

use crate::rat::{self, rat, rint, rone, rzero, Rat};
use crate::repkit::{
    exterior_powers_of_n, tensor_mirreps, weyl_group_order, MIrrep, MWeight, RepError, Series,
    VirtualMRep,
};
use num::complex::Complex64;
use num::traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PlancherelError {
    #[error("representation is attached to d = {rep_d}, polynomial requested for d = {d}")]
    DimensionMismatch { rep_d: usize, d: usize },
    #[error("alternating Plancherel sum is not constant: coefficient of s^{power} is {coeff}")]
    NonConstantSum { power: usize, coeff: String },
    #[error(transparent)]
    Rep(#[from] RepError),
}

/// Dense polynomial with exact rational coefficients, ascending powers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<Rat>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.len() > 1 && coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(rzero());
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly::new(vec![rzero()])
    }

    pub fn constant(c: Rat) -> Self {
        RatPoly::new(vec![c])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, power: usize) -> Rat {
        self.coeffs.get(power).cloned().unwrap_or_else(rzero)
    }

    pub fn add(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![rzero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        RatPoly::new(out)
    }

    pub fn scale(&self, c: &Rat) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        let mut out = vec![rzero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }

    /// Composition with the shift `s -> s + c`, exact.
    pub fn shift(&self, c: &Rat) -> RatPoly {
        let mut out = vec![rzero(); self.coeffs.len()];
        // binomial expansion of (s + c)^j
        let mut binom_row: Vec<Rat> = vec![rone()];
        for (j, a) in self.coeffs.iter().enumerate() {
            if j > 0 {
                let mut next = vec![rzero(); j + 1];
                for (k, b) in binom_row.iter().enumerate() {
                    next[k] += b;
                    next[k + 1] += b;
                }
                binom_row = next;
            }
            if a.is_zero() {
                continue;
            }
            // (s + c)^j = sum_k C(j,k) c^(j-k) s^k
            let mut cpow = rone();
            for k in (0..=j).rev() {
                out[k] += a * &binom_row[k] * &cpow;
                cpow *= c;
            }
        }
        RatPoly::new(out)
    }

    /// Antiderivative with zero constant term.
    pub fn antiderivative(&self) -> RatPoly {
        let mut out = vec![rzero(); self.coeffs.len() + 1];
        for (j, a) in self.coeffs.iter().enumerate() {
            out[j + 1] = a / rint(j as i64 + 1);
        }
        RatPoly::new(out)
    }

    pub fn eval_rat(&self, s: &Rat) -> Rat {
        let mut acc = rzero();
        for a in self.coeffs.iter().rev() {
            acc = acc * s + a;
        }
        acc
    }

    pub fn eval_complex(&self, s: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for a in self.coeffs.iter().rev() {
            acc = acc * s + Complex64::new(rat::to_f64(a), 0.0);
        }
        acc
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() == 1
    }
}

/// Even polynomial of degree `d - 1` attached to an `M`-irrep.
#[derive(Debug, Clone)]
pub struct PlancherelPolynomial {
    poly: RatPoly,
    sigma: MIrrep,
    d: usize,
}

impl PlancherelPolynomial {
    pub fn poly(&self) -> &RatPoly {
        &self.poly
    }

    pub fn sigma(&self) -> &MIrrep {
        &self.sigma
    }

    pub fn ambient_dimension(&self) -> usize {
        self.d
    }

    /// Coefficients in ascending powers, padded to length `d`.
    pub fn coeffs_padded(&self) -> Vec<Rat> {
        let mut out = self.poly.coeffs().to_vec();
        out.resize(self.d, rzero());
        out
    }

    pub fn eval_complex(&self, s: Complex64) -> Complex64 {
        self.poly.eval_complex(s)
    }

    pub fn eval_rat(&self, s: &Rat) -> Rat {
        self.poly.eval_rat(s)
    }

    /// True iff every odd-power coefficient vanishes exactly.
    pub fn is_even(&self) -> bool {
        self.poly
            .coeffs()
            .iter()
            .enumerate()
            .all(|(j, c)| j % 2 == 0 || c.is_zero())
    }
}

/// `mu = nu_sigma + rho_m` in the convention of the closed form.
fn mu_shifts(sigma: &MIrrep) -> Vec<Rat> {
    let n = sigma.rank();
    match sigma.weight() {
        MWeight::Character(k) => vec![k.clone()],
        MWeight::Dominant(w) => w
            .coords()
            .iter()
            .enumerate()
            .map(|(i, c)| c + rint((n - 1 - i) as i64))
            .collect(),
    }
}

/// Positive-root product of the compact form `D_(n+1)` at its Weyl
/// vector `rho_G = (n, n-1, ..., 0)`.
fn compact_form_norm(n: usize) -> Rat {
    let m = n + 1;
    let mut acc = rone();
    for i in 1..=m {
        for j in (i + 1)..=m {
            acc *= rint((j - i) as i64);
            acc *= rint((2 * m - i - j) as i64);
        }
    }
    acc
}

/// The Plancherel polynomial of `sigma` for ambient dimension `d`.
pub fn plancherel_polynomial(
    sigma: &MIrrep,
    d: usize,
) -> Result<PlancherelPolynomial, PlancherelError> {
    if sigma.ambient_dimension() != d {
        return Err(PlancherelError::DimensionMismatch {
            rep_d: sigma.ambient_dimension(),
            d,
        });
    }
    let n = (d - 1) / 2;
    let mu = mu_shifts(sigma);
    // prod_k (s^2 - mu_k^2)
    let mut poly = RatPoly::constant(rone());
    for m in &mu {
        let factor = RatPoly::new(vec![-(m * m), rzero(), rone()]);
        poly = poly.mul(&factor);
    }
    // prod_{k<l} (mu_k^2 - mu_l^2) / W
    let mut c = rone();
    for k in 0..mu.len() {
        for l in (k + 1)..mu.len() {
            c *= &mu[k] * &mu[k] - &mu[l] * &mu[l];
        }
    }
    c /= compact_form_norm(n);
    Ok(PlancherelPolynomial {
        poly: poly.scale(&c),
        sigma: sigma.clone(),
        d,
    })
}

/// Plancherel polynomial of a virtual representation (dimensions add).
pub fn plancherel_polynomial_virtual(
    rep: &VirtualMRep,
    d: usize,
) -> Result<RatPoly, PlancherelError> {
    let mut acc = RatPoly::zero();
    for (s, m) in rep.terms() {
        let p = plancherel_polynomial(s, d)?;
        acc = acc.add(&p.poly.scale(&rint(*m)));
    }
    Ok(acc)
}

/// Exact antiderivative with zero constant term, evaluated at `s`.
pub fn integrate_plancherel(p: &PlancherelPolynomial, s: Complex64) -> Complex64 {
    p.poly.antiderivative().eval_complex(s)
}

/// Casimir shift `c(sigma) = -|rho|^2 - |rho_m|^2 + |nu_sigma + rho_m|^2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CasimirShift {
    pub value: Rat,
}

pub fn casimir_shift(sigma: &MIrrep, d: usize) -> Result<CasimirShift, PlancherelError> {
    if sigma.ambient_dimension() != d {
        return Err(PlancherelError::DimensionMismatch {
            rep_d: sigma.ambient_dimension(),
            d,
        });
    }
    let rho = rat(d as i64 - 1, 2);
    let mut value = -(&rho * &rho);
    match sigma.weight() {
        MWeight::Character(k) => {
            // rho_m = 0 on the torus
            value += k * k;
        }
        MWeight::Dominant(w) => {
            let rs = sigma.root_system().unwrap();
            let rho_m = rs.rho();
            let shifted = w.add(&rho_m);
            value = value - rho_m.norm_sq() + shifted.norm_sq();
        }
    }
    Ok(CasimirShift { value })
}

/// The alternating sum `f(s) = sum_p (-1)^p P_{psi_p (x) sigma}(s + rho - p)`
/// over the exterior powers of the standard representation.
///
/// The result must be the constant polynomial `(d+1) dim(sigma)`; a
/// non-constant outcome is reported as an invariant violation (it would
/// mean a bug in the decomposition machinery, not bad input).
pub fn alternating_plancherel_sum(
    sigma: &MIrrep,
    d: usize,
) -> Result<PlancherelPolynomial, PlancherelError> {
    if sigma.ambient_dimension() != d {
        return Err(PlancherelError::DimensionMismatch {
            rep_d: sigma.ambient_dimension(),
            d,
        });
    }
    let rho = rat(d as i64 - 1, 2);
    let powers = exterior_powers_of_n(d)?;
    let mut acc = RatPoly::zero();
    for (p, (rep, shift)) in powers.iter().enumerate() {
        let tensored = {
            let mut terms = Vec::new();
            for (psi, m) in rep.terms() {
                let prod = tensor_mirreps(psi, sigma)?;
                for (t, k) in prod.terms() {
                    terms.push((t.clone(), k * m));
                }
            }
            VirtualMRep::new(terms)
        };
        let poly = plancherel_polynomial_virtual(&tensored, d)?;
        let shifted = poly.shift(&(&rho - rint(*shift)));
        let sign = if p % 2 == 0 { rint(1) } else { rint(-1) };
        acc = acc.add(&shifted.scale(&sign));
    }
    for (power, coeff) in acc.coeffs().iter().enumerate() {
        if power > 0 && !coeff.is_zero() {
            return Err(PlancherelError::NonConstantSum {
                power,
                coeff: rat::format_rat(coeff),
            });
        }
    }
    Ok(PlancherelPolynomial {
        poly: acc,
        sigma: sigma.clone(),
        d,
    })
}

/// Euler characteristic of the compact dual `L`: the ratio of Weyl-group
/// orders of the compact form and of `M` times the torus factor. Equals
/// `d + 1` for every odd `d >= 3`.
pub fn euler_characteristic_l(d: usize) -> Result<u64, PlancherelError> {
    if d < 3 || d % 2 == 0 {
        return Err(PlancherelError::Rep(RepError::BadAmbientDimension(d)));
    }
    let top = weyl_group_order(Series::D, (d + 1) / 2)?;
    let bottom = weyl_group_order(Series::D, (d - 1) / 2)?; // torus factor contributes 1
    let (q, r) = num::Integer::div_rem(&top, &bottom);
    if !r.is_zero() || q.is_negative() {
        return Err(PlancherelError::Rep(RepError::Internal(
            "Weyl order ratio is not a positive integer".into(),
        )));
    }
    Ok(q.to_u64().expect("euler characteristic fits in u64"))
}

/// Signed dimension value interpolated by the Plancherel polynomial at
/// an integral point: the raw Weyl-dimension product of the compact form
/// at torus coordinate `lambda`. Zero on walls, signed off the dominant
/// chamber; used by the interpolation spot checks.
pub fn compact_form_dimension_raw(
    sigma: &MIrrep,
    d: usize,
    lambda: &Rat,
) -> Result<Rat, PlancherelError> {
    use crate::repkit::{weyl_dimension_formula_raw, RootSystem, WeightVector};
    if sigma.ambient_dimension() != d {
        return Err(PlancherelError::DimensionMismatch {
            rep_d: sigma.ambient_dimension(),
            d,
        });
    }
    let n = (d - 1) / 2;
    let rs = RootSystem::new(Series::D, n + 1)?;
    let mut coords = vec![lambda.clone()];
    coords.extend(sigma.coords());
    let w = WeightVector::new(coords);
    Ok(weyl_dimension_formula_raw(&rs, &w)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rint;

    fn k_rep(k: i64) -> MIrrep {
        MIrrep::from_i64(3, &[k]).unwrap()
    }

    #[test]
    fn d3_closed_forms() {
        // trivial: P(s) = s^2
        let p = plancherel_polynomial(&k_rep(0), 3).unwrap();
        assert_eq!(p.poly().coeffs(), &[rzero(), rzero(), rone()]);
        assert!(p.is_even());
        assert_eq!(p.eval_rat(&rzero()), rzero());

        // character k: P(s) = s^2 - k^2
        let p = plancherel_polynomial(&k_rep(3), 3).unwrap();
        assert_eq!(p.poly().coeffs(), &[rint(-9), rzero(), rone()]);

        // half-integer character
        let half = MIrrep::new(3, vec![rat(1, 2)]).unwrap();
        let p = plancherel_polynomial(&half, 3).unwrap();
        assert_eq!(p.poly().coeffs(), &[rat(-1, 4), rzero(), rone()]);
    }

    #[test]
    fn interpolates_compact_form_dimensions() {
        // d=3, trivial: dim Spin(4) V_(a,0) = (a+1)^2 = P(a+1)
        let p = plancherel_polynomial(&k_rep(0), 3).unwrap();
        for a in 0..4 {
            assert_eq!(p.eval_rat(&rint(a + 1)), rint((a + 1) * (a + 1)));
        }
        // d=3, k: dim V_(a,k) = (a-k+1)(a+k+1)
        let p = plancherel_polynomial(&k_rep(2), 3).unwrap();
        for a in 2..6 {
            assert_eq!(p.eval_rat(&rint(a + 1)), rint((a - 2 + 1) * (a + 2 + 1)));
        }
    }

    #[test]
    fn interpolation_matches_raw_formula_at_four_points() {
        let cases = [
            MIrrep::trivial(5).unwrap(),
            MIrrep::from_i64(5, &[1, 0]).unwrap(),
            MIrrep::from_i64(5, &[1, 1]).unwrap(),
            MIrrep::from_i64(7, &[1, 0, 0]).unwrap(),
            MIrrep::new(5, vec![rat(1, 2), rat(1, 2)]).unwrap(),
        ];
        for sigma in &cases {
            let d = sigma.ambient_dimension();
            let rho = rat(d as i64 - 1, 2);
            let p = plancherel_polynomial(sigma, d).unwrap();
            for lam in 0..4 {
                let lambda = rint(lam);
                let want = compact_form_dimension_raw(sigma, d, &lambda).unwrap();
                assert_eq!(p.eval_rat(&(&lambda + &rho)), want, "{} at {}", sigma, lam);
            }
        }
    }

    #[test]
    fn d5_trivial_poly() {
        // P(s) = s^2 (s^2 - 1) / 12, so vector rep of Spin(6): P(3) = 6
        let p = plancherel_polynomial(&MIrrep::trivial(5).unwrap(), 5).unwrap();
        assert_eq!(p.eval_rat(&rint(3)), rint(6));
        assert_eq!(p.eval_rat(&rint(2)), rint(1));
        assert_eq!(p.poly().degree(), 4);
        assert!(p.is_even());
    }

    #[test]
    fn evenness_for_weyl_invariant_and_flipped() {
        for sigma in [
            MIrrep::from_i64(5, &[2, 0]).unwrap(),
            MIrrep::from_i64(5, &[1, 1]).unwrap(),
            MIrrep::from_i64(7, &[2, 1, 1]).unwrap(),
        ] {
            let p = plancherel_polynomial(&sigma, sigma.ambient_dimension()).unwrap();
            assert!(p.is_even());
            // P_{w sigma} = P_sigma
            let flipped = sigma.weyl_flip();
            let q = plancherel_polynomial(&flipped, sigma.ambient_dimension()).unwrap();
            assert_eq!(p.poly(), q.poly());
        }
    }

    #[test]
    fn integral_examples() {
        let p = plancherel_polynomial(&k_rep(0), 3).unwrap();
        let v = integrate_plancherel(&p, Complex64::new(1.0, 0.0));
        assert!((v - Complex64::new(1.0 / 3.0, 0.0)).norm() < 1e-15);
        assert_eq!(
            integrate_plancherel(&p, Complex64::new(0.0, 0.0)),
            Complex64::new(0.0, 0.0)
        );
        let p = plancherel_polynomial(&k_rep(2), 3).unwrap();
        let v = integrate_plancherel(&p, Complex64::new(2.0, 0.0));
        assert!((v - Complex64::new(8.0 / 3.0 - 8.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn casimir_shift_examples() {
        assert_eq!(casimir_shift(&k_rep(0), 3).unwrap().value, rint(-1));
        assert_eq!(
            casimir_shift(&MIrrep::trivial(5).unwrap(), 5).unwrap().value,
            rint(-4)
        );
        let k = MIrrep::from_i64(3, &[4]).unwrap();
        assert_eq!(casimir_shift(&k, 3).unwrap().value, rint(-1 + 16));
    }

    #[test]
    fn alternating_sum_is_constant() {
        use num::traits::ToPrimitive;
        let cases: Vec<MIrrep> = vec![
            k_rep(0),
            k_rep(2),
            MIrrep::new(3, vec![rat(1, 2)]).unwrap(),
            MIrrep::trivial(5).unwrap(),
            MIrrep::from_i64(5, &[1, 0]).unwrap(),
            MIrrep::from_i64(5, &[1, 1]).unwrap(),
            MIrrep::from_i64(7, &[1, 0, 0]).unwrap(),
        ];
        for sigma in &cases {
            let d = sigma.ambient_dimension();
            let f = alternating_plancherel_sum(sigma, d).unwrap();
            assert!(f.poly().is_constant(), "{}", sigma);
            let dim = sigma.dim().unwrap().to_i64().unwrap();
            assert_eq!(
                f.poly().coeff(0),
                rint((d as i64 + 1) * dim),
                "{} (d = {})",
                sigma,
                d
            );
        }
    }

    #[test]
    fn euler_characteristic_examples() {
        assert_eq!(euler_characteristic_l(3).unwrap(), 4);
        assert_eq!(euler_characteristic_l(5).unwrap(), 6);
        assert_eq!(euler_characteristic_l(9).unwrap(), 10);
        assert!(euler_characteristic_l(4).is_err());
    }

    #[test]
    fn poly_shift_is_composition() {
        // (s+2)^2 - 3 expanded
        let p = RatPoly::new(vec![rint(-3), rzero(), rone()]);
        let q = p.shift(&rint(2));
        assert_eq!(q.coeffs(), &[rint(1), rint(4), rone()]);
        // spot eval
        assert_eq!(q.eval_rat(&rint(5)), p.eval_rat(&rint(7)));
    }
}
