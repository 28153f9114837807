//! Character evaluation at torus elements given by rotation angles.

use super::freudenthal::freudenthal_multiplicities;
use super::{MIrrep, MWeight, RepError, VirtualMRep};
use num::complex::Complex64;

/// Below this magnitude of the Weyl denominator the quotient formula is
/// considered wall-adjacent and the weight-sum evaluation takes over.
/// The alternating exponential sums carry absolute rounding noise of
/// order `|W| * eps`, so quotients with denominators under ~1e-2 lose
/// digits that the examples downstream cannot afford.
const WALL_THRESHOLD: f64 = 1e-2;

/// Precomputed character of a single `M`-irrep.
///
/// Primary path is the Weyl character formula (alternating sums over the
/// Weyl group for numerator and denominator); near denominator walls the
/// evaluator falls back to the exact weight-multiplicity sum, which is
/// wall-free. Both paths agree to machine precision away from walls and
/// the agreement is property-tested.
#[derive(Debug, Clone)]
pub struct CharEvaluator {
    kind: CharKind,
}

#[derive(Debug, Clone)]
enum CharKind {
    /// torus character exp(i k theta)
    Torus { k: f64 },
    Spin {
        /// signed Weyl images of `nu + rho_m`
        numerator: Vec<(f64, Vec<f64>)>,
        /// signed Weyl images of `rho_m`
        denominator: Vec<(f64, Vec<f64>)>,
        /// full weight diagram (weights as floats with multiplicities)
        weights: Vec<(Vec<f64>, f64)>,
    },
}

impl CharEvaluator {
    pub fn new(sigma: &MIrrep) -> Result<Self, RepError> {
        match sigma.weight() {
            MWeight::Character(k) => Ok(CharEvaluator {
                kind: CharKind::Torus {
                    k: crate::rat::to_f64(k),
                },
            }),
            MWeight::Dominant(w) => {
                let rs = sigma.root_system().unwrap();
                let rho = rs.rho();
                let to_signed = |mu: &super::WeightVector| -> Vec<(f64, Vec<f64>)> {
                    rs.signed_weyl_images(mu)
                        .into_iter()
                        .map(|(img, s)| (s as f64, img.to_f64_vec()))
                        .collect()
                };
                let numerator = to_signed(&w.add(&rho));
                let denominator = to_signed(&rho);
                let weights = freudenthal_multiplicities(&rs, w)?
                    .into_iter()
                    .map(|(mu, m)| (mu.to_f64_vec(), m as f64))
                    .collect();
                Ok(CharEvaluator {
                    kind: CharKind::Spin {
                        numerator,
                        denominator,
                        weights,
                    },
                })
            }
        }
    }

    /// Trace of the representation at the torus element with the given
    /// rotation angles. Angles are taken as-is (not reduced mod 2 pi):
    /// spin weights are 4 pi-periodic, so callers power holonomies by
    /// multiplying angles.
    pub fn eval(&self, angles: &[f64]) -> Complex64 {
        match &self.kind {
            CharKind::Torus { k } => {
                debug_assert_eq!(angles.len(), 1);
                Complex64::from_polar(1.0, k * angles[0])
            }
            CharKind::Spin {
                numerator,
                denominator,
                weights,
            } => {
                let den = alternating_sum(denominator, angles);
                if den.norm() > WALL_THRESHOLD {
                    alternating_sum(numerator, angles) / den
                } else {
                    weight_sum(weights, angles)
                }
            }
        }
    }

    /// Exact-route evaluation through the weight diagram, regardless of
    /// wall distance. Exposed as the independent oracle for the quotient
    /// path.
    pub fn eval_weight_sum(&self, angles: &[f64]) -> Complex64 {
        match &self.kind {
            CharKind::Torus { k } => Complex64::from_polar(1.0, k * angles[0]),
            CharKind::Spin { weights, .. } => weight_sum(weights, angles),
        }
    }
}

fn phase(mu: &[f64], angles: &[f64]) -> Complex64 {
    let arg: f64 = mu.iter().zip(angles).map(|(m, t)| m * t).sum();
    Complex64::from_polar(1.0, arg)
}

fn alternating_sum(terms: &[(f64, Vec<f64>)], angles: &[f64]) -> Complex64 {
    terms
        .iter()
        .map(|(s, mu)| *s * phase(mu, angles))
        .sum()
}

fn weight_sum(weights: &[(Vec<f64>, f64)], angles: &[f64]) -> Complex64 {
    weights.iter().map(|(mu, m)| *m * phase(mu, angles)).sum()
}

/// Character of a virtual representation, extended linearly.
#[derive(Debug, Clone)]
pub struct VirtualCharEvaluator {
    parts: Vec<(f64, CharEvaluator)>,
}

impl VirtualCharEvaluator {
    pub fn new(rep: &VirtualMRep) -> Result<Self, RepError> {
        let mut parts = Vec::new();
        for (s, m) in rep.terms() {
            parts.push((*m as f64, CharEvaluator::new(s)?));
        }
        Ok(VirtualCharEvaluator { parts })
    }

    pub fn eval(&self, angles: &[f64]) -> Complex64 {
        self.parts
            .iter()
            .map(|(m, e)| *m * e.eval(angles))
            .sum()
    }
}
