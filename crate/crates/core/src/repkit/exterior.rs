//! Exterior powers of the standard representation, with their A-weights.

use super::{MIrrep, RepError, VirtualMRep};
use crate::rat::{rint, rzero};

/// `M`-irreducible decomposition of the p-th exterior power of the
/// standard `(d-1)`-dimensional representation, together with the
/// A-character exponent (the shift) `lambda = p`, for `p = 0..d-1`.
///
/// For `p` below the middle degree the power is irreducible with highest
/// weight `(1,...,1,0,...,0)` (`p` ones); at the middle degree it splits
/// into the pair with last coordinate `+-1`; above the middle it repeats
/// the complementary degree `d-1-p` (Poincare pairing of shifts
/// `p <-> 2 rho - p`). At `d = 3` the standard representation is the
/// torus character pair `k = +-1`.
pub fn exterior_powers_of_n(d: usize) -> Result<Vec<(VirtualMRep, i64)>, RepError> {
    if d < 3 || d % 2 == 0 {
        return Err(RepError::BadAmbientDimension(d));
    }
    let n = (d - 1) / 2;
    let mut out = Vec::with_capacity(d);
    for p in 0..d {
        let q = p.min(d - 1 - p);
        let rep = if d == 3 {
            match q {
                0 => VirtualMRep::from_irrep(MIrrep::new(3, vec![rzero()])?),
                1 => VirtualMRep::new(vec![
                    (MIrrep::new(3, vec![rint(1)])?, 1),
                    (MIrrep::new(3, vec![rint(-1)])?, 1),
                ]),
                _ => unreachable!(),
            }
        } else if q < n {
            let mut coords = vec![rzero(); n];
            for c in coords.iter_mut().take(q) {
                *c = rint(1);
            }
            VirtualMRep::from_irrep(MIrrep::new(d, coords)?)
        } else {
            // middle degree: split pair with last coordinate +-1
            let mut plus = vec![rint(1); n];
            let mut minus = vec![rint(1); n];
            plus[n - 1] = rint(1);
            minus[n - 1] = rint(-1);
            VirtualMRep::new(vec![
                (MIrrep::new(d, plus)?, 1),
                (MIrrep::new(d, minus)?, 1),
            ])
        };
        out.push((rep, p as i64));
    }
    Ok(out)
}
