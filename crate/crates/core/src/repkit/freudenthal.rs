//! Weight diagrams via Freudenthal's recursion.

use super::{RepError, RootSystem, WeightVector};
use crate::rat::{self, rint, Rat};
use num::traits::{Signed, ToPrimitive, Zero};
use std::collections::{BTreeMap, VecDeque};

/// Full weight diagram of the irreducible module with the given highest
/// weight: every weight (dominant or not) with its multiplicity.
///
/// Dominant multiplicities come from Freudenthal's recursion
/// `(|L+rho|^2 - |mu+rho|^2) m(mu) = 2 sum_{a>0} sum_{k>=1} m(mu+ka) <mu+ka, a>`,
/// and the diagram is completed by Weyl-orbit symmetry.
pub fn freudenthal_multiplicities(
    rs: &RootSystem,
    highest_weight: &WeightVector,
) -> Result<BTreeMap<WeightVector, u64>, RepError> {
    rs.validate_dominant_integral(highest_weight)?;
    let dominant = dominant_multiplicities(rs, highest_weight)?;
    let mut full: BTreeMap<WeightVector, u64> = BTreeMap::new();
    for (mu, m) in &dominant {
        for w in rs.weyl_orbit(mu) {
            full.insert(w, *m);
        }
    }
    Ok(full)
}

/// Multiplicities on the dominant chamber only.
pub(super) fn dominant_multiplicities(
    rs: &RootSystem,
    highest_weight: &WeightVector,
) -> Result<BTreeMap<WeightVector, u64>, RepError> {
    let rho = rs.rho();
    let lam = highest_weight;
    let lam_rho_sq = lam.add(&rho).norm_sq();

    // Lowest weight = antidominant representative of the orbit; the box
    // 0 <= c <= c_max in simple-root coordinates contains every weight.
    let lowest = antidominant(rs, lam);
    let c_max = simple_root_coords(rs, &lam.sub(&lowest)).ok_or_else(|| {
        RepError::Internal("highest - lowest weight not in the root lattice span".into())
    })?;
    let c_max: Vec<i64> = c_max
        .iter()
        .map(|c| {
            rat::as_bigint(c)
                .and_then(|b| b.to_i64())
                .filter(|v| *v >= 0)
                .ok_or_else(|| RepError::Internal("non-integral level bound".into()))
        })
        .collect::<Result<_, _>>()?;

    // Breadth-first enumeration of the box, level by level.
    let mut by_level: Vec<Vec<WeightVector>> = vec![vec![lam.clone()]];
    let mut seen: BTreeMap<WeightVector, usize> = BTreeMap::new();
    seen.insert(lam.clone(), 0);
    let mut frontier = VecDeque::new();
    frontier.push_back((lam.clone(), vec![0i64; rs.simple_roots().len()]));
    while let Some((mu, c)) = frontier.pop_front() {
        for (i, a) in rs.simple_roots().iter().enumerate() {
            if c[i] + 1 > c_max[i] {
                continue;
            }
            let nu = mu.sub(a);
            if seen.contains_key(&nu) {
                continue;
            }
            let mut c2 = c.clone();
            c2[i] += 1;
            let level: i64 = c2.iter().sum();
            seen.insert(nu.clone(), level as usize);
            if by_level.len() <= level as usize {
                by_level.resize(level as usize + 1, Vec::new());
            }
            by_level[level as usize].push(nu.clone());
            frontier.push_back((nu, c2));
        }
    }

    let mut mult: BTreeMap<WeightVector, u64> = BTreeMap::new();
    mult.insert(lam.clone(), 1);

    for level in 1..by_level.len() {
        for mu in &by_level[level] {
            if !rs.is_dominant(mu) {
                continue;
            }
            let denom = &lam_rho_sq - mu.add(&rho).norm_sq();
            if denom.is_zero() {
                // dominant with the same Casimir norm as the highest
                // weight: not a weight of this module
                continue;
            }
            let mut acc = Rat::zero();
            for a in rs.positive_roots() {
                let mut nu = mu.add(a);
                loop {
                    // stop once nu leaves the weight box (multiplicity 0)
                    let rep = rs.dominant_representative(&nu);
                    match mult.get(&rep) {
                        Some(m) if *m > 0 => {
                            acc += rint(*m as i64) * nu.dot(a);
                        }
                        _ => {
                            if !in_box(rs, lam, &nu) {
                                break;
                            }
                        }
                    }
                    nu = nu.add(a);
                    if !in_box(rs, lam, &nu) {
                        break;
                    }
                }
            }
            let m = rint(2) * acc / denom;
            let m_int = rat::as_bigint(&m)
                .and_then(|b| b.to_i64())
                .ok_or_else(|| RepError::Internal("non-integral multiplicity".into()))?;
            if m_int < 0 {
                return Err(RepError::Internal("negative multiplicity".into()));
            }
            if m_int > 0 {
                mult.insert(mu.clone(), m_int as u64);
            }
        }
    }
    Ok(mult)
}

/// Is `lam - nu` a nonnegative combination of simple roots?
fn in_box(rs: &RootSystem, lam: &WeightVector, nu: &WeightVector) -> bool {
    match simple_root_coords(rs, &lam.sub(nu)) {
        Some(c) => c.iter().all(|x| !x.is_negative()),
        None => false,
    }
}

fn antidominant(rs: &RootSystem, mu: &WeightVector) -> WeightVector {
    let mut x = mu.clone();
    'outer: loop {
        for a in rs.simple_roots() {
            let c = rs.coroot_pairing(&x, a);
            if c.is_positive() {
                x = x.sub(&a.scale(&c));
                continue 'outer;
            }
        }
        return x;
    }
}

/// Coordinates of `v` in the simple-root basis (Gaussian elimination over
/// the rationals). `None` if `v` lies outside the span.
pub(super) fn simple_root_coords(rs: &RootSystem, v: &WeightVector) -> Option<Vec<Rat>> {
    let simple = rs.simple_roots();
    let n = simple.len();
    let dim = rs.rank();
    // rows: ambient coordinates; columns: simple roots, augmented by v
    let mut m: Vec<Vec<Rat>> = (0..dim)
        .map(|r| {
            let mut row: Vec<Rat> = (0..n).map(|c| simple[c].coords()[r].clone()).collect();
            row.push(v.coords()[r].clone());
            row
        })
        .collect();
    let mut pivot_rows = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..dim).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].clone();
        for c in col..=n {
            m[row][c] = &m[row][c] / &inv;
        }
        for r in 0..dim {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=n {
                    m[r][c] = &m[r][c] - &f * &m[row][c];
                }
            }
        }
        pivot_rows.push((row, col));
        row += 1;
        if row == dim {
            break;
        }
    }
    // consistency: rows without pivots must have zero RHS
    for r in row..dim {
        if !m[r][n].is_zero() {
            return None;
        }
    }
    let mut coords = vec![Rat::zero(); n];
    for (r, c) in pivot_rows {
        coords[c] = m[r][n].clone();
    }
    // verify (guards against underdetermined systems)
    let mut check = WeightVector::zero(dim);
    for (c, x) in coords.iter().enumerate() {
        check = check.add(&simple[c].scale(x));
    }
    if check == *v {
        Some(coords)
    } else {
        None
    }
}
