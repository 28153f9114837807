//! Tensor-product decomposition by Klimyk's formula.

use super::freudenthal::freudenthal_multiplicities;
use super::{MIrrep, MWeight, RepError, RootSystem, VirtualMRep, WeightVector};
use std::collections::BTreeMap;

/// Decompose `V_mu (x) V_nu` into irreducibles.
///
/// Klimyk/Racah-Speiser: run over the weight diagram of `nu`, shift by
/// `mu + rho`, reflect to the dominant chamber with sign, drop walls.
/// The result is a genuine (nonnegative) decomposition.
pub fn tensor_decompose(
    rs: &RootSystem,
    mu: &WeightVector,
    nu: &WeightVector,
) -> Result<Vec<(WeightVector, u64)>, RepError> {
    rs.validate_dominant_integral(mu)?;
    rs.validate_dominant_integral(nu)?;
    let rho = rs.rho();
    let diagram = freudenthal_multiplicities(rs, nu)?;
    let mut acc: BTreeMap<WeightVector, i64> = BTreeMap::new();
    for (lambda, m) in diagram {
        let x = mu.add(&lambda).add(&rho);
        if let Some((dom, sign)) = rs.dominant_with_sign(&x) {
            *acc.entry(dom.sub(&rho)).or_insert(0) += sign * m as i64;
        }
    }
    let mut out = Vec::new();
    for (w, m) in acc {
        if m < 0 {
            return Err(RepError::Internal(format!(
                "negative tensor multiplicity {} at {}",
                m, w
            )));
        }
        if m > 0 {
            out.push((w, m as u64));
        }
    }
    Ok(out)
}

/// Tensor product at the level of `M`-irreps, covering the `d = 3` torus
/// case (characters add) uniformly.
pub fn tensor_mirreps(a: &MIrrep, b: &MIrrep) -> Result<VirtualMRep, RepError> {
    if a.ambient_dimension() != b.ambient_dimension() {
        return Err(RepError::Internal(format!(
            "tensor of representations for different ambient dimensions {} vs {}",
            a.ambient_dimension(),
            b.ambient_dimension()
        )));
    }
    let d = a.ambient_dimension();
    match (a.weight(), b.weight()) {
        (MWeight::Character(p), MWeight::Character(q)) => {
            let s = MIrrep::new(d, vec![p + q])?;
            Ok(VirtualMRep::from_irrep(s))
        }
        (MWeight::Dominant(wa), MWeight::Dominant(wb)) => {
            let rs = a.root_system().unwrap();
            let parts = tensor_decompose(&rs, wa, wb)?;
            let mut terms = Vec::new();
            for (w, m) in parts {
                terms.push((MIrrep::new(d, w.coords().to_vec())?, m as i64));
            }
            Ok(VirtualMRep::new(terms))
        }
        _ => Err(RepError::Internal("mixed torus/spin tensor".into())),
    }
}

/// Tensor of a virtual representation with an irrep, extended linearly.
pub fn tensor_virtual(v: &VirtualMRep, sigma: &MIrrep) -> Result<VirtualMRep, RepError> {
    let mut terms = Vec::new();
    for (s, m) in v.terms() {
        let prod = tensor_mirreps(s, sigma)?;
        for (t, k) in prod.terms() {
            terms.push((t.clone(), k * m));
        }
    }
    Ok(VirtualMRep::new(terms))
}

#[cfg(test)]
mod tests {
    use super::super::{weyl_dimension, Series};
    use super::*;
    use crate::rat::{rat, rint};
    use num::BigInt;

    fn total_dim(rs: &RootSystem, parts: &[(WeightVector, u64)]) -> BigInt {
        parts
            .iter()
            .map(|(w, m)| weyl_dimension(rs, w).unwrap() * BigInt::from(*m))
            .sum()
    }

    #[test]
    fn tensor_with_trivial_is_identity() {
        let d2 = RootSystem::new(Series::D, 2).unwrap();
        let mu = WeightVector::from_i64(&[2, 1]);
        let parts = tensor_decompose(&d2, &mu, &WeightVector::zero(2)).unwrap();
        assert_eq!(parts, vec![(mu, 1)]);
    }

    #[test]
    fn rank_one_clebsch_gordan() {
        let a1 = RootSystem::new(Series::A, 1).unwrap();
        let one = WeightVector::from_i64(&[1]);
        let parts = tensor_decompose(&a1, &one, &one).unwrap();
        assert_eq!(
            parts,
            vec![
                (WeightVector::from_i64(&[0]), 1),
                (WeightVector::from_i64(&[2]), 1)
            ]
        );
        // higher case: 2 (x) 3 = 1 + 3 + 5 (dims), i.e. weights 1,3,5
        let parts = tensor_decompose(
            &a1,
            &WeightVector::from_i64(&[2]),
            &WeightVector::from_i64(&[3]),
        )
        .unwrap();
        assert_eq!(
            parts,
            vec![
                (WeightVector::from_i64(&[1]), 1),
                (WeightVector::from_i64(&[3]), 1),
                (WeightVector::from_i64(&[5]), 1)
            ]
        );
    }

    #[test]
    fn spin4_standard_squared_has_dimension_16() {
        let d2 = RootSystem::new(Series::D, 2).unwrap();
        let std = WeightVector::from_i64(&[1, 0]);
        let parts = tensor_decompose(&d2, &std, &std).unwrap();
        assert_eq!(total_dim(&d2, &parts), BigInt::from(16));
    }

    #[test]
    fn tensor_dimension_is_multiplicative() {
        let d3 = RootSystem::new(Series::D, 3).unwrap();
        let a = WeightVector::from_i64(&[1, 0, 0]);
        let b = WeightVector::from_i64(&[1, 1, 0]);
        let parts = tensor_decompose(&d3, &a, &b).unwrap();
        let da = weyl_dimension(&d3, &a).unwrap();
        let db = weyl_dimension(&d3, &b).unwrap();
        assert_eq!(total_dim(&d3, &parts), da * db);
    }

    #[test]
    fn tensor_commutes() {
        let d2 = RootSystem::new(Series::D, 2).unwrap();
        let a = WeightVector::from_i64(&[2, 0]);
        let b = WeightVector::new(vec![rat(1, 2), rat(1, 2)]);
        let ab = tensor_decompose(&d2, &a, &b).unwrap();
        let ba = tensor_decompose(&d2, &b, &a).unwrap();
        assert_eq!(ab, ba);
    }

    #[test]
    fn torus_characters_add() {
        let a = MIrrep::new(3, vec![rat(3, 2)]).unwrap();
        let b = MIrrep::new(3, vec![rat(-1, 2)]).unwrap();
        let prod = tensor_mirreps(&a, &b).unwrap();
        assert_eq!(prod.terms().len(), 1);
        assert_eq!(prod.terms()[0].0, MIrrep::new(3, vec![rint(1)]).unwrap());
    }
}
