//! Length-spectrum and operator-spectrum data: validation, JSON
//! ingestion, and deterministic synthesis.
//!
//! File formats:
//!
//! * length spectrum: JSON Lines. The first line is a header object
//!   `{"d":3,"vol_x":1.0,"dim_chi":1}`; each following line is one
//!   primitive geodesic record with complex numbers as `[re, im]` pairs.
//! * operator spectrum: a single JSON object
//!   `{"label":"A_sharp","entries":[[[re,im],mult],...]}`.

use num::complex::Complex64;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha12Rng;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::io::{BufRead, Write};
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GeoError {
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("validation error: {0}")]
    Validation(String),
}

/// One primitive closed geodesic: length, holonomy rotation angles, the
/// eigenvalues of the twist at this class, and the power index.
#[derive(Debug, Clone, PartialEq)]
pub struct PrimitiveGeodesic {
    pub id: String,
    pub length: f64,
    /// rotation angles of the holonomy acting on the flat directions,
    /// `(d-1)/2` values in `(-pi, pi]`
    pub holonomy_angles: Vec<f64>,
    /// spectrum of the twist at this class; all nonzero
    pub chi_eigenvalues: Vec<Complex64>,
    /// power index: 1 for primitive classes, `n` for an n-th power
    pub n_multiplicity: u32,
}

/// Validated length-spectrum input.
#[derive(Debug, Clone, PartialEq)]
pub struct LengthSpectrum {
    d: usize,
    vol_x: f64,
    dim_chi: usize,
    geodesics: Vec<PrimitiveGeodesic>,
}

impl LengthSpectrum {
    pub fn new(
        d: usize,
        vol_x: f64,
        dim_chi: usize,
        mut geodesics: Vec<PrimitiveGeodesic>,
    ) -> Result<Self, GeoError> {
        if d < 3 || d % 2 == 0 {
            return Err(GeoError::Validation(format!(
                "d must be an odd integer >= 3, got {d}"
            )));
        }
        if !(vol_x > 0.0) {
            return Err(GeoError::Validation(format!(
                "vol_x must be positive, got {vol_x}"
            )));
        }
        if dim_chi == 0 {
            return Err(GeoError::Validation("dim_chi must be positive".into()));
        }
        let angles = (d - 1) / 2;
        for g in &geodesics {
            if !(g.length > 0.0) {
                return Err(GeoError::Validation(format!(
                    "geodesic {}: length must be positive, got {}",
                    g.id, g.length
                )));
            }
            if g.holonomy_angles.len() != angles {
                return Err(GeoError::Validation(format!(
                    "geodesic {}: expected {} holonomy angles, got {}",
                    g.id,
                    angles,
                    g.holonomy_angles.len()
                )));
            }
            if g.chi_eigenvalues.len() != dim_chi {
                return Err(GeoError::Validation(format!(
                    "geodesic {}: expected {} chi eigenvalues, got {}",
                    g.id,
                    dim_chi,
                    g.chi_eigenvalues.len()
                )));
            }
            if g.chi_eigenvalues.iter().any(|c| c.norm() == 0.0) {
                return Err(GeoError::Validation(format!(
                    "geodesic {}: chi eigenvalue is zero (twist not invertible)",
                    g.id
                )));
            }
            if g.n_multiplicity == 0 {
                return Err(GeoError::Validation(format!(
                    "geodesic {}: n_multiplicity must be >= 1",
                    g.id
                )));
            }
        }
        geodesics.sort_by(|a, b| a.length.total_cmp(&b.length).then(a.id.cmp(&b.id)));
        let mut ids: Vec<&str> = geodesics.iter().map(|g| g.id.as_str()).collect();
        ids.sort_unstable();
        ids.dedup();
        if ids.len() != geodesics.len() {
            return Err(GeoError::Validation("duplicate geodesic ids".into()));
        }
        Ok(LengthSpectrum {
            d,
            vol_x,
            dim_chi,
            geodesics,
        })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn vol_x(&self) -> f64 {
        self.vol_x
    }

    pub fn dim_chi(&self) -> usize {
        self.dim_chi
    }

    pub fn geodesics(&self) -> &[PrimitiveGeodesic] {
        &self.geodesics
    }

    pub fn is_empty(&self) -> bool {
        self.geodesics.is_empty()
    }
}

#[derive(Serialize, Deserialize)]
struct HeaderLine {
    d: usize,
    vol_x: f64,
    dim_chi: usize,
}

#[derive(Serialize, Deserialize)]
struct GeodesicLine {
    id: String,
    length: f64,
    holonomy_angles: Vec<f64>,
    chi_eigenvalues: Vec<[f64; 2]>,
    n_multiplicity: u32,
}

/// Load and validate a JSONL length-spectrum file.
pub fn load_length_spectrum(path: &Path) -> Result<LengthSpectrum, GeoError> {
    let file = std::fs::File::open(path)?;
    read_length_spectrum(std::io::BufReader::new(file))
}

pub fn read_length_spectrum(reader: impl BufRead) -> Result<LengthSpectrum, GeoError> {
    let mut lines = reader.lines();
    let header_line = lines
        .next()
        .ok_or(GeoError::Parse {
            line: 1,
            message: "empty file, expected header object".into(),
        })??;
    let header: HeaderLine = serde_json::from_str(&header_line).map_err(|e| GeoError::Parse {
        line: 1,
        message: e.to_string(),
    })?;
    let mut geodesics = Vec::new();
    for (idx, line) in lines.enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let rec: GeodesicLine = serde_json::from_str(&line).map_err(|e| GeoError::Parse {
            line: idx + 2,
            message: e.to_string(),
        })?;
        geodesics.push(PrimitiveGeodesic {
            id: rec.id,
            length: rec.length,
            holonomy_angles: rec.holonomy_angles,
            chi_eigenvalues: rec
                .chi_eigenvalues
                .iter()
                .map(|p| Complex64::new(p[0], p[1]))
                .collect(),
            n_multiplicity: rec.n_multiplicity,
        });
    }
    LengthSpectrum::new(header.d, header.vol_x, header.dim_chi, geodesics)
}

/// Canonical JSONL serialization; `load . save` is the identity byte for
/// byte on validated values.
pub fn save_length_spectrum(spec: &LengthSpectrum, mut w: impl Write) -> Result<(), GeoError> {
    let header = HeaderLine {
        d: spec.d,
        vol_x: spec.vol_x,
        dim_chi: spec.dim_chi,
    };
    writeln!(w, "{}", serde_json::to_string(&header).unwrap())?;
    for g in &spec.geodesics {
        let rec = GeodesicLine {
            id: g.id.clone(),
            length: g.length,
            holonomy_angles: g.holonomy_angles.clone(),
            chi_eigenvalues: g.chi_eigenvalues.iter().map(|c| [c.re, c.im]).collect(),
            n_multiplicity: g.n_multiplicity,
        };
        writeln!(w, "{}", serde_json::to_string(&rec).unwrap())?;
    }
    Ok(())
}

pub fn save_length_spectrum_to_path(spec: &LengthSpectrum, path: &Path) -> Result<(), GeoError> {
    let file = std::fs::File::create(path)?;
    save_length_spectrum(spec, std::io::BufWriter::new(file))
}

/// Map a raw 64-bit draw to the unit interval [0, 1).
fn unit(rng: &mut ChaCha12Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Angle in `(-pi, pi]`.
fn angle(rng: &mut ChaCha12Rng) -> f64 {
    PI * (1.0 - 2.0 * unit(rng))
}

/// Deterministic synthetic length spectrum.
///
/// Lengths grow with roughly logarithmic spacing (exponential counting,
/// entropy `d - 1`); holonomy angles are uniform; twist eigenvalues sit
/// on the unit circle when `unitary`, otherwise in the annulus
/// `[1/2, 2]`. Output is a pure function of the arguments.
pub fn synthesize_length_spectrum(
    seed: u64,
    count: usize,
    d: usize,
    dim_chi: usize,
    unitary: bool,
) -> Result<LengthSpectrum, GeoError> {
    let mut rng = ChaCha12Rng::seed_from_u64(seed ^ 0x6c65_6e73_7065_6354);
    let vol_x = 0.5 + 1.5 * unit(&mut rng);
    let entropy = (d - 1) as f64;
    let base = 0.7 + 0.4 * unit(&mut rng);
    let n_angles = (d - 1) / 2;
    let mut geodesics = Vec::with_capacity(count);
    for j in 0..count {
        let length = base + ((j + 1) as f64).ln() / entropy + 0.05 * unit(&mut rng);
        let holonomy_angles: Vec<f64> = (0..n_angles).map(|_| angle(&mut rng)).collect();
        let chi_eigenvalues: Vec<Complex64> = (0..dim_chi)
            .map(|_| {
                let phase = angle(&mut rng);
                let r = if unitary {
                    1.0
                } else {
                    (2.0f64).powf(2.0 * unit(&mut rng) - 1.0)
                };
                Complex64::from_polar(r, phase)
            })
            .collect();
        geodesics.push(PrimitiveGeodesic {
            id: format!("g{}", j + 1),
            length,
            holonomy_angles,
            chi_eigenvalues,
            n_multiplicity: 1,
        });
    }
    LengthSpectrum::new(d, vol_x, dim_chi, geodesics)
}

/// Componentwise n-th power of a primitive geodesic record: length and
/// power index scale, angles reduce to `(-pi, pi]`, twist eigenvalues
/// are raised to the n-th power.
pub fn geodesic_power(gamma: &PrimitiveGeodesic, n: u32) -> PrimitiveGeodesic {
    assert!(n >= 1, "power index must be >= 1");
    let reduce = |t: f64| -> f64 {
        // rem_euclid lands in [-pi, pi); fold the left endpoint to pi
        let r = (t + PI).rem_euclid(2.0 * PI) - PI;
        if r == -PI {
            PI
        } else {
            r
        }
    };
    PrimitiveGeodesic {
        id: gamma.id.clone(),
        length: gamma.length * n as f64,
        holonomy_angles: gamma
            .holonomy_angles
            .iter()
            .map(|t| reduce(t * n as f64))
            .collect(),
        chi_eigenvalues: gamma.chi_eigenvalues.iter().map(|c| c.powu(n)).collect(),
        n_multiplicity: gamma.n_multiplicity * n,
    }
}

/// Finite non-self-adjoint operator spectrum: eigenvalues with algebraic
/// multiplicities, deduplicated and sorted.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorSpectrum {
    pub label: String,
    entries: Vec<(Complex64, u32)>,
}

impl OperatorSpectrum {
    pub fn new(label: impl Into<String>, entries: Vec<(Complex64, u32)>) -> Self {
        let mut merged: Vec<(Complex64, u32)> = Vec::new();
        let mut entries = entries;
        entries.sort_by(|a, b| a.0.re.total_cmp(&b.0.re).then(a.0.im.total_cmp(&b.0.im)));
        for (z, m) in entries {
            if m == 0 {
                continue;
            }
            match merged.last_mut() {
                Some((w, k)) if *w == z => *k += m,
                _ => merged.push((z, m)),
            }
        }
        OperatorSpectrum {
            label: label.into(),
            entries: merged,
        }
    }

    pub fn entries(&self) -> &[(Complex64, u32)] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.entries.iter().map(|(_, m)| *m as u64).sum()
    }

    /// Union of two spectra (multiplicities add).
    pub fn union(&self, other: &OperatorSpectrum) -> OperatorSpectrum {
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        OperatorSpectrum::new(self.label.clone(), entries)
    }

    /// Same spectrum with every multiplicity scaled by `k`.
    pub fn scaled(&self, k: u32) -> OperatorSpectrum {
        OperatorSpectrum::new(
            self.label.clone(),
            self.entries.iter().map(|(z, m)| (*z, m * k)).collect(),
        )
    }

    /// Spectrum reflected through the origin.
    pub fn negated(&self) -> OperatorSpectrum {
        OperatorSpectrum::new(
            self.label.clone(),
            self.entries.iter().map(|(z, m)| (-*z, *m)).collect(),
        )
    }

    /// Number of entries outside the translated cone
    /// `{Re > -c, |Im| <= slope (Re + c)}` (reportable cone check).
    pub fn count_outside_cone(&self, c: f64, slope: f64) -> usize {
        self.entries
            .iter()
            .filter(|(z, _)| !(z.re > -c && z.im.abs() <= slope * (z.re + c)))
            .count()
    }
}

#[derive(Serialize, Deserialize)]
struct SpectrumFile {
    label: String,
    entries: Vec<([f64; 2], u32)>,
}

pub fn load_operator_spectrum(path: &Path) -> Result<OperatorSpectrum, GeoError> {
    let text = std::fs::read_to_string(path)?;
    let file: SpectrumFile = serde_json::from_str(&text).map_err(|e| GeoError::Parse {
        line: 1,
        message: e.to_string(),
    })?;
    Ok(OperatorSpectrum::new(
        file.label,
        file.entries
            .iter()
            .map(|(p, m)| (Complex64::new(p[0], p[1]), *m))
            .collect(),
    ))
}

pub fn save_operator_spectrum(spec: &OperatorSpectrum, mut w: impl Write) -> Result<(), GeoError> {
    let file = SpectrumFile {
        label: spec.label.clone(),
        entries: spec.entries.iter().map(|(z, m)| ([z.re, z.im], *m)).collect(),
    };
    writeln!(w, "{}", serde_json::to_string(&file).unwrap())?;
    Ok(())
}

/// Cone geometry for synthetic spectra: real parts in
/// `[re_min, re_max]`, imaginary parts bounded by `slope * Re`.
#[derive(Debug, Clone, Copy)]
pub struct ConeParams {
    pub re_min: f64,
    pub re_max: f64,
    pub slope: f64,
}

impl ConeParams {
    pub fn new(re_min: f64, re_max: f64, slope: f64) -> Self {
        assert!(re_min > 0.0 && re_max > re_min && slope >= 0.0);
        ConeParams {
            re_min,
            re_max,
            slope,
        }
    }
}

/// What kind of synthetic spectrum to generate.
#[derive(Debug, Clone, Copy)]
pub enum SpectrumMode {
    /// generic eigenvalues in the cone, occasional multiplicity 2
    Cone(ConeParams),
    /// pairs `{lambda, -lambda}`: eta vanishes identically
    SymmetricPairs(ConeParams),
    /// cone points plus `negative_pairs` extra eigenvalues with
    /// `Re(lambda^2) <= 0` on both sides of the imaginary axis
    ConeWithNegativeSquares {
        cone: ConeParams,
        negative_pairs: usize,
    },
    /// radial density matched to the leading Weyl-law term
    /// `N(c) ~ K c^(d/2)` for the given bundle rank and volume
    WeylLaw {
        d: usize,
        rank_bundle: usize,
        vol: f64,
    },
}

/// Leading Weyl-law constant `rank * vol / ((4 pi)^(d/2) Gamma(d/2+1))`.
pub fn weyl_law_constant(d: usize, rank_bundle: usize, vol: f64) -> f64 {
    let half_d = d as f64 / 2.0;
    rank_bundle as f64 * vol / ((4.0 * PI).powf(half_d) * crate::spectra::gamma_real(half_d + 1.0))
}

/// Deterministic synthetic operator spectrum inside the requested cone.
pub fn synthesize_operator_spectrum(
    seed: u64,
    count: usize,
    label: &str,
    mode: &SpectrumMode,
) -> OperatorSpectrum {
    let mut rng = ChaCha12Rng::seed_from_u64(seed ^ 0x6f70_7370_6563_7452);
    let mut entries: Vec<(Complex64, u32)> = Vec::new();
    let cone_point = |rng: &mut ChaCha12Rng, p: &ConeParams| -> Complex64 {
        let re = p.re_min + (p.re_max - p.re_min) * unit(rng);
        let im = p.slope * re * (2.0 * unit(rng) - 1.0) * 0.95;
        Complex64::new(re, im)
    };
    match mode {
        SpectrumMode::Cone(p) => {
            for _ in 0..count {
                let z = cone_point(&mut rng, p);
                let m = if unit(&mut rng) < 0.15 { 2 } else { 1 };
                entries.push((z, m));
            }
        }
        SpectrumMode::SymmetricPairs(p) => {
            for _ in 0..count.div_ceil(2) {
                let z = cone_point(&mut rng, p);
                let m = if unit(&mut rng) < 0.15 { 2 } else { 1 };
                entries.push((z, m));
                entries.push((-z, m));
            }
        }
        SpectrumMode::ConeWithNegativeSquares {
            cone,
            negative_pairs,
        } => {
            for _ in 0..count {
                entries.push((cone_point(&mut rng, cone), 1));
            }
            for _ in 0..*negative_pairs {
                // |Im| > |Re|, both signs of Re: Re(lambda^2) < 0
                let re = 0.1 + 0.4 * unit(&mut rng);
                let im = re + 0.5 + unit(&mut rng);
                let sr = if unit(&mut rng) < 0.5 { 1.0 } else { -1.0 };
                let si = if unit(&mut rng) < 0.5 { 1.0 } else { -1.0 };
                entries.push((Complex64::new(sr * re, si * im), 1));
            }
        }
        SpectrumMode::WeylLaw {
            d,
            rank_bundle,
            vol,
        } => {
            let k = weyl_law_constant(*d, *rank_bundle, *vol);
            for j in 0..count {
                let radius = (((j + 1) as f64) / k).powf(2.0 / *d as f64);
                let phi = 0.2 * (2.0 * unit(&mut rng) - 1.0);
                entries.push((Complex64::from_polar(radius, phi), 1));
            }
        }
    }
    OperatorSpectrum::new(label, entries)
}
