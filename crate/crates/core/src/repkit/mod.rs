//! Exact-arithmetic root-system and representation-theory kernel.
//!
//! Covers the compact groups that occur on a hyperbolic quotient of odd
//! dimension `d`: the rotation group `Spin(d-1)` (type D of rank
//! `(d-1)/2`, degenerating to a torus at `d = 3`) and the compact form
//! `Spin(d+1)` used by the Plancherel layer. Series A and B are carried
//! along where the standard closed forms make sense.
//!
//! Everything here is exact: weights are vectors of [`Rat`] coordinates
//! and all products/divisions are checked to land back in the integers
//! where the theory says they must.

mod characters;
mod exterior;
mod freudenthal;
mod tensor;

pub use characters::{CharEvaluator, VirtualCharEvaluator};
pub use exterior::exterior_powers_of_n;
pub use freudenthal::freudenthal_multiplicities;
pub use tensor::{tensor_decompose, tensor_mirreps, tensor_virtual};

use crate::rat::{self, rint, rzero, Rat};
use num::bigint::BigInt;
use num::traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum RepError {
    #[error("invalid series/rank combination: {series:?} rank {rank}")]
    InvalidRank { series: Series, rank: usize },
    #[error("series A of rank {0} has no exact rational realization in Euclidean coordinates; only rank 1 is supported")]
    UnsupportedRealization(usize),
    #[error("weight has {got} coordinates, root system expects {want}")]
    CoordinateCount { got: usize, want: usize },
    #[error("weight is not dominant: {0}")]
    NotDominant(String),
    #[error("weight is not integral for the root system: {0}")]
    NotIntegral(String),
    #[error("weight coordinates must be all integers or all half-odd-integers: {0}")]
    MixedParity(String),
    #[error("ambient dimension must be an odd integer >= 3, got {0}")]
    BadAmbientDimension(usize),
    #[error("internal invariant violation: {0}")]
    Internal(String),
}

/// Simple-root series supported by the closed Weyl-order formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Series {
    A,
    B,
    D,
}

/// Weight in the standard orthonormal basis, exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightVector {
    coords: Vec<Rat>,
}

impl WeightVector {
    pub fn new(coords: Vec<Rat>) -> Self {
        WeightVector { coords }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        WeightVector::new(coords.iter().map(|&c| rint(c)).collect())
    }

    pub fn zero(rank: usize) -> Self {
        WeightVector::new(vec![rzero(); rank])
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn dot(&self, other: &WeightVector) -> Rat {
        debug_assert_eq!(self.len(), other.len());
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn norm_sq(&self) -> Rat {
        self.dot(self)
    }

    pub fn add(&self, other: &WeightVector) -> WeightVector {
        WeightVector::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &WeightVector) -> WeightVector {
        WeightVector::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rat) -> WeightVector {
        WeightVector::new(self.coords.iter().map(|a| a * c).collect())
    }

    pub fn neg(&self) -> WeightVector {
        WeightVector::new(self.coords.iter().map(|a| -a).collect())
    }

    /// All coordinates integers, or all half-odd-integers.
    pub fn has_uniform_parity(&self) -> bool {
        if self.coords.iter().any(|c| !rat::is_half_integer(c)) {
            return false;
        }
        let ints = self.coords.iter().filter(|c| c.is_integer()).count();
        ints == 0 || ints == self.len()
    }

    pub fn to_f64_vec(&self) -> Vec<f64> {
        self.coords.iter().map(rat::to_f64).collect()
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(rat::format_rat).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Positive-root data for one of the supported series at a fixed rank.
#[derive(Debug, Clone)]
pub struct RootSystem {
    series: Series,
    rank: usize,
    positive_roots: Vec<WeightVector>,
    simple_roots: Vec<WeightVector>,
}

impl RootSystem {
    /// Standard positive roots in the orthonormal basis.
    ///
    /// `D_1` is the rank-one torus (empty root set); series A is realized
    /// only at rank 1 (`alpha = (2)`, the su(2) convention), because no
    /// rational Euclidean realization of `A_n` exists in `n` coordinates
    /// for `n >= 2`.
    pub fn new(series: Series, rank: usize) -> Result<Self, RepError> {
        if rank == 0 {
            return Err(RepError::InvalidRank { series, rank });
        }
        let mut positive = Vec::new();
        let mut simple = Vec::new();
        let e = |i: usize, sign_j: Option<(usize, i64)>| -> WeightVector {
            let mut c = vec![rzero(); rank];
            c[i] = rint(1);
            if let Some((j, s)) = sign_j {
                c[j] = rint(s);
            }
            WeightVector::new(c)
        };
        match series {
            Series::A => {
                if rank != 1 {
                    return Err(RepError::UnsupportedRealization(rank));
                }
                positive.push(WeightVector::from_i64(&[2]));
                simple.push(WeightVector::from_i64(&[2]));
            }
            Series::B => {
                for i in 0..rank {
                    for j in (i + 1)..rank {
                        positive.push(e(i, Some((j, -1))));
                        positive.push(e(i, Some((j, 1))));
                    }
                    positive.push(e(i, None));
                }
                for i in 0..rank.saturating_sub(1) {
                    simple.push(e(i, Some((i + 1, -1))));
                }
                simple.push(e(rank - 1, None));
            }
            Series::D => {
                for i in 0..rank {
                    for j in (i + 1)..rank {
                        positive.push(e(i, Some((j, -1))));
                        positive.push(e(i, Some((j, 1))));
                    }
                }
                for i in 0..rank.saturating_sub(1) {
                    simple.push(e(i, Some((i + 1, -1))));
                }
                if rank >= 2 {
                    simple.push(e(rank - 2, Some((rank - 1, 1))));
                }
            }
        }
        Ok(RootSystem {
            series,
            rank,
            positive_roots: positive,
            simple_roots: simple,
        })
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn positive_roots(&self) -> &[WeightVector] {
        &self.positive_roots
    }

    pub fn simple_roots(&self) -> &[WeightVector] {
        &self.simple_roots
    }

    /// Half sum of positive roots.
    pub fn rho(&self) -> WeightVector {
        let mut acc = WeightVector::zero(self.rank);
        for a in &self.positive_roots {
            acc = acc.add(a);
        }
        acc.scale(&rat::rat(1, 2))
    }

    /// `<mu, alpha^vee> = 2<mu,alpha>/<alpha,alpha>`.
    pub fn coroot_pairing(&self, mu: &WeightVector, alpha: &WeightVector) -> Rat {
        let two = rint(2);
        two * mu.dot(alpha) / alpha.norm_sq()
    }

    fn check_len(&self, mu: &WeightVector) -> Result<(), RepError> {
        if mu.len() != self.rank {
            return Err(RepError::CoordinateCount {
                got: mu.len(),
                want: self.rank,
            });
        }
        Ok(())
    }

    pub fn is_dominant(&self, mu: &WeightVector) -> bool {
        self.simple_roots
            .iter()
            .all(|a| !self.coroot_pairing(mu, a).is_negative())
    }

    pub fn is_integral(&self, mu: &WeightVector) -> bool {
        self.simple_roots
            .iter()
            .all(|a| self.coroot_pairing(mu, a).is_integer())
    }

    pub fn validate_dominant_integral(&self, mu: &WeightVector) -> Result<(), RepError> {
        self.check_len(mu)?;
        if !self.is_dominant(mu) {
            return Err(RepError::NotDominant(mu.to_string()));
        }
        if !self.is_integral(mu) {
            return Err(RepError::NotIntegral(mu.to_string()));
        }
        Ok(())
    }

    /// Reflection in the hyperplane of `alpha`.
    pub fn reflect(&self, mu: &WeightVector, alpha: &WeightVector) -> WeightVector {
        let c = self.coroot_pairing(mu, alpha);
        mu.sub(&alpha.scale(&c))
    }

    /// Dominant representative of the Weyl orbit together with the sign
    /// of the group element used, or `None` if `mu` lies on a wall.
    pub fn dominant_with_sign(&self, mu: &WeightVector) -> Option<(WeightVector, i64)> {
        let mut x = mu.clone();
        let mut sign = 1i64;
        'outer: loop {
            for a in &self.simple_roots {
                let c = self.coroot_pairing(&x, a);
                if c.is_negative() {
                    x = x.sub(&a.scale(&c));
                    sign = -sign;
                    continue 'outer;
                }
            }
            break;
        }
        for a in &self.simple_roots {
            if self.coroot_pairing(&x, a).is_zero() {
                return None;
            }
        }
        Some((x, sign))
    }

    /// Dominant representative ignoring walls (for multiplicity lookups).
    pub fn dominant_representative(&self, mu: &WeightVector) -> WeightVector {
        let mut x = mu.clone();
        'outer: loop {
            for a in &self.simple_roots {
                let c = self.coroot_pairing(&x, a);
                if c.is_negative() {
                    x = x.sub(&a.scale(&c));
                    continue 'outer;
                }
            }
            return x;
        }
    }

    /// Full Weyl orbit of a weight (breadth-first closure under simple
    /// reflections). Orbit sizes here are tiny; no attempt is made to be
    /// clever.
    pub fn weyl_orbit(&self, mu: &WeightVector) -> Vec<WeightVector> {
        let mut seen: BTreeMap<WeightVector, ()> = BTreeMap::new();
        let mut stack = vec![mu.clone()];
        seen.insert(mu.clone(), ());
        while let Some(x) = stack.pop() {
            for a in &self.simple_roots {
                let y = self.reflect(&x, a);
                if !seen.contains_key(&y) {
                    seen.insert(y.clone(), ());
                    stack.push(y);
                }
            }
        }
        seen.into_keys().collect()
    }

    /// Signed Weyl images of `mu`: the full orbit of `(w, det w)` pairs,
    /// one entry per group element (not per distinct image). Used by the
    /// Weyl character formula, so a generic `mu` is expected.
    pub fn signed_weyl_images(&self, mu: &WeightVector) -> Vec<(WeightVector, i64)> {
        let mut out = Vec::new();
        let n = self.rank;
        match self.series {
            Series::A => {
                // rank 1: {id, -1} with det -1 for the reflection
                out.push((mu.clone(), 1));
                out.push((mu.neg(), -1));
            }
            Series::B | Series::D => {
                let mut perm: Vec<usize> = (0..n).collect();
                let mut images = Vec::new();
                permutations(&mut perm, 0, &mut |p| {
                    images.push((p.to_vec(), permutation_sign(p)));
                });
                for (p, psign) in images {
                    for mask in 0u32..(1 << n) {
                        let flips = mask.count_ones();
                        if self.series == Series::D && flips % 2 == 1 {
                            continue;
                        }
                        let det = psign
                            * if self.series == Series::B && flips % 2 == 1 {
                                -1
                            } else if self.series == Series::D {
                                1
                            } else {
                                1
                            };
                        let mut coords = vec![rzero(); n];
                        for (i, &pi) in p.iter().enumerate() {
                            let mut c = mu.coords()[i].clone();
                            if mask & (1 << i) != 0 {
                                c = -c;
                            }
                            coords[pi] = c;
                        }
                        out.push((WeightVector::new(coords), det));
                    }
                }
            }
        }
        out
    }
}

fn permutations(items: &mut [usize], k: usize, f: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, f);
        items.swap(k, i);
    }
}

fn permutation_sign(p: &[usize]) -> i64 {
    let mut sign = 1i64;
    for i in 0..p.len() {
        for j in (i + 1)..p.len() {
            if p[i] > p[j] {
                sign = -sign;
            }
        }
    }
    sign
}

/// Order of the Weyl group by the standard closed forms:
/// `A_n -> (n+1)!`, `B_n -> 2^n n!`, `D_n -> 2^(n-1) n!`.
pub fn weyl_group_order(series: Series, rank: usize) -> Result<BigInt, RepError> {
    if rank == 0 {
        return Err(RepError::InvalidRank { series, rank });
    }
    let fact = |n: usize| -> BigInt {
        let mut f = BigInt::one();
        for k in 2..=n {
            f *= BigInt::from(k);
        }
        f
    };
    let pow2 = |n: usize| -> BigInt { BigInt::from(2).pow(n as u32) };
    Ok(match series {
        Series::A => fact(rank + 1),
        Series::B => pow2(rank) * fact(rank),
        Series::D => pow2(rank - 1) * fact(rank),
    })
}

/// Weyl dimension formula `prod <L+rho,a> / <rho,a>` over positive roots,
/// in exact arithmetic. Requires a dominant integral weight.
pub fn weyl_dimension(rs: &RootSystem, highest_weight: &WeightVector) -> Result<BigInt, RepError> {
    rs.validate_dominant_integral(highest_weight)?;
    let v = weyl_dimension_formula_raw(rs, highest_weight)?;
    match rat::as_bigint(&v) {
        Some(n) if n.is_positive() => Ok(n),
        _ => Err(RepError::Internal(format!(
            "dimension formula returned non-positive-integer {} for {}",
            v, highest_weight
        ))),
    }
}

/// The same product without the dominance precondition. Vanishes on walls
/// and carries the sign of the Weyl element for non-dominant arguments;
/// this is the analytic continuation interpolated by the Plancherel layer.
pub fn weyl_dimension_formula_raw(
    rs: &RootSystem,
    weight: &WeightVector,
) -> Result<Rat, RepError> {
    if weight.len() != rs.rank() {
        return Err(RepError::CoordinateCount {
            got: weight.len(),
            want: rs.rank(),
        });
    }
    let rho = rs.rho();
    let shifted = weight.add(&rho);
    let mut num = rat::rone();
    let mut den = rat::rone();
    for a in rs.positive_roots() {
        num *= shifted.dot(a);
        den *= rho.dot(a);
    }
    Ok(num / den)
}

/// Irreducible unitary representation of `M = Spin(d-1)`.
///
/// For `d >= 5` this is a dominant integral type-D weight of rank
/// `(d-1)/2`; at `d = 3` the group degenerates to a rank-one torus and
/// the representation is a single half-integer character.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MIrrep {
    d: usize,
    weight: MWeight,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MWeight {
    /// `d = 3`: character `exp(i k theta)` of the torus, `k` half-integer.
    Character(Rat),
    /// `d >= 5`: dominant integral weight for `D_(d-1)/2`.
    Dominant(WeightVector),
}

impl MIrrep {
    pub fn new(d: usize, coords: Vec<Rat>) -> Result<Self, RepError> {
        if d < 3 || d % 2 == 0 {
            return Err(RepError::BadAmbientDimension(d));
        }
        let rank = (d - 1) / 2;
        if coords.len() != rank {
            return Err(RepError::CoordinateCount {
                got: coords.len(),
                want: rank,
            });
        }
        if d == 3 {
            let k = coords.into_iter().next().unwrap();
            if !rat::is_half_integer(&k) {
                return Err(RepError::NotIntegral(rat::format_rat(&k)));
            }
            return Ok(MIrrep {
                d,
                weight: MWeight::Character(k),
            });
        }
        let w = WeightVector::new(coords);
        if !w.has_uniform_parity() {
            return Err(RepError::MixedParity(w.to_string()));
        }
        let rs = RootSystem::new(Series::D, rank)?;
        rs.validate_dominant_integral(&w)?;
        Ok(MIrrep {
            d,
            weight: MWeight::Dominant(w),
        })
    }

    pub fn trivial(d: usize) -> Result<Self, RepError> {
        if d < 3 || d % 2 == 0 {
            return Err(RepError::BadAmbientDimension(d));
        }
        MIrrep::new(d, vec![rzero(); (d - 1) / 2])
    }

    pub fn from_i64(d: usize, coords: &[i64]) -> Result<Self, RepError> {
        MIrrep::new(d, coords.iter().map(|&c| rint(c)).collect())
    }

    pub fn ambient_dimension(&self) -> usize {
        self.d
    }

    pub fn rank(&self) -> usize {
        (self.d - 1) / 2
    }

    pub fn weight(&self) -> &MWeight {
        &self.weight
    }

    /// Weight coordinates as a vector of length `rank` (the torus
    /// character is the single coordinate at `d = 3`).
    pub fn coords(&self) -> Vec<Rat> {
        match &self.weight {
            MWeight::Character(k) => vec![k.clone()],
            MWeight::Dominant(w) => w.coords().to_vec(),
        }
    }

    /// Root system of `M` for `d >= 5`; `None` in the torus case.
    pub fn root_system(&self) -> Option<RootSystem> {
        match self.weight {
            MWeight::Character(_) => None,
            MWeight::Dominant(_) => Some(RootSystem::new(Series::D, self.rank()).unwrap()),
        }
    }

    pub fn dim(&self) -> Result<BigInt, RepError> {
        match &self.weight {
            MWeight::Character(_) => Ok(BigInt::one()),
            MWeight::Dominant(w) => {
                let rs = self.root_system().unwrap();
                weyl_dimension(&rs, w)
            }
        }
    }

    /// Action of the nontrivial restricted Weyl element, realized as the
    /// sign flip of the last weight coordinate (negation of the torus
    /// character at `d = 3`).
    pub fn weyl_flip(&self) -> MIrrep {
        match &self.weight {
            MWeight::Character(k) => MIrrep {
                d: self.d,
                weight: MWeight::Character(-k.clone()),
            },
            MWeight::Dominant(w) => {
                let mut coords = w.coords().to_vec();
                let last = coords.len() - 1;
                coords[last] = -coords[last].clone();
                MIrrep {
                    d: self.d,
                    weight: MWeight::Dominant(WeightVector::new(coords)),
                }
            }
        }
    }

    pub fn is_weyl_invariant(&self) -> bool {
        *self == self.weyl_flip()
    }
}

impl fmt::Display for MIrrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.weight {
            MWeight::Character(k) => write!(f, "k={}", rat::format_rat(k)),
            MWeight::Dominant(w) => write!(f, "{}", w),
        }
    }
}

/// `(w sigma, w sigma == sigma)` for the restricted Weyl action.
pub fn weyl_action(sigma: &MIrrep) -> (MIrrep, bool) {
    let flipped = sigma.weyl_flip();
    let invariant = flipped == *sigma;
    (flipped, invariant)
}

/// Formal integer combination of irreducible `M`-representations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VirtualMRep {
    terms: Vec<(MIrrep, i64)>,
}

impl VirtualMRep {
    /// Normalizes: merges duplicates, drops zero multiplicities, sorts.
    pub fn new(terms: Vec<(MIrrep, i64)>) -> Self {
        let mut map: BTreeMap<MIrrep, i64> = BTreeMap::new();
        for (s, m) in terms {
            *map.entry(s).or_insert(0) += m;
        }
        VirtualMRep {
            terms: map.into_iter().filter(|(_, m)| *m != 0).collect(),
        }
    }

    pub fn from_irrep(sigma: MIrrep) -> Self {
        VirtualMRep {
            terms: vec![(sigma, 1)],
        }
    }

    pub fn terms(&self) -> &[(MIrrep, i64)] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Signed dimension of the virtual representation.
    pub fn dim(&self) -> Result<BigInt, RepError> {
        let mut acc = BigInt::zero();
        for (s, m) in &self.terms {
            acc += s.dim()? * BigInt::from(*m);
        }
        Ok(acc)
    }

    /// Sum of `|mult| * dim`, the sup-norm bound on the character.
    pub fn dim_bound(&self) -> Result<f64, RepError> {
        let mut acc = 0.0;
        for (s, m) in &self.terms {
            acc += (m.unsigned_abs() as f64) * s.dim()?.to_f64().unwrap_or(f64::INFINITY);
        }
        Ok(acc)
    }

    pub fn weyl_flip(&self) -> VirtualMRep {
        VirtualMRep::new(
            self.terms
                .iter()
                .map(|(s, m)| (s.weyl_flip(), *m))
                .collect(),
        )
    }
}

impl From<&MIrrep> for VirtualMRep {
    fn from(sigma: &MIrrep) -> Self {
        VirtualMRep::from_irrep(sigma.clone())
    }
}
