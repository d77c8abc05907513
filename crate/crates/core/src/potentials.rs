//! Catalog of scalar and vector potentials with analytic derivatives,
//! plus parameter-record instantiation for ensemble sweeps.

use crate::error::{Error, Result};
use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

/// Smoothed step: St(x) = 4(tanh(10x) − 1).
///
/// Rises from −8 (x → −∞) through −4 at x = 0 to 0 (x → +∞) over a
/// transition of width ~0.1.
pub fn smoothed_step(x: f64) -> f64 {
    4.0 * ((10.0 * x).tanh() - 1.0)
}

#[derive(Clone)]
enum Kind {
    Harmonic { m: f64, omega: f64 },
    Quartic { nu: f64, m: f64 },
    DoubleWell { nu: f64 },
    Linear { alpha: f64 },
    PeriodicConfined { v0: f64, vc: f64 },
    Polynomial { coeffs: Vec<f64> },
    Coupled2d { omega: f64, delta: f64, nu: f64, m: f64 },
    DoubleWellHarmonic2d { nu: f64, m: f64, omega: f64 },
    Sinai { r1: f64, r2: f64 },
    Ellipse { r1: f64, r2: f64 },
    RingConfinement { m: f64, omega: f64 },
    Zero2d,
}

/// An evaluatable scalar potential with analytic first and second
/// derivatives where the kernel corrections need them.
#[derive(Clone)]
pub struct PotentialModel {
    kind: Kind,
}

fn positive(name: &'static str, v: f64) -> Result<f64> {
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(Error::invalid(name, format!("must be positive and finite, got {v}")))
    }
}

/// V = ν x⁴ / 4.
pub fn quartic(nu: f64, m: f64) -> Result<PotentialModel> {
    positive("nu", nu)?;
    positive("m", m)?;
    Ok(PotentialModel { kind: Kind::Quartic { nu, m } })
}

/// V = ν (x² − 1)² / 4.
pub fn double_well(nu: f64) -> Result<PotentialModel> {
    positive("nu", nu)?;
    Ok(PotentialModel { kind: Kind::DoubleWell { nu } })
}

/// V = ½ m ω² x².
pub fn harmonic(m: f64, omega: f64) -> Result<PotentialModel> {
    positive("m", m)?;
    positive("omega", omega)?;
    Ok(PotentialModel { kind: Kind::Harmonic { m, omega } })
}

/// V = α x.
pub fn linear(alpha: f64) -> Result<PotentialModel> {
    positive("alpha", alpha)?;
    Ok(PotentialModel { kind: Kind::Linear { alpha } })
}

/// V = V0 (1 − cos x) + Vc (x / 40π)^10.
pub fn periodic_confined(v0: f64, vc: f64) -> Result<PotentialModel> {
    positive("v0", v0)?;
    positive("vc", vc)?;
    Ok(PotentialModel { kind: Kind::PeriodicConfined { v0, vc } })
}

/// Generic 1D polynomial V = Σ c_k x^k.
pub fn polynomial(coeffs: Vec<f64>) -> Result<PotentialModel> {
    if coeffs.is_empty() || coeffs.iter().any(|c| !c.is_finite()) {
        return Err(Error::invalid("coeffs", "need at least one finite coefficient"));
    }
    Ok(PotentialModel { kind: Kind::Polynomial { coeffs } })
}

/// Coupled anisotropic 2D oscillator:
/// V = ½ m (ω+δ)² x² + ½ m (ω−δ)² y² + (ν/4) x² y².
pub fn coupled_2d(omega: f64, delta: f64, nu: f64, m: f64) -> Result<PotentialModel> {
    positive("omega", omega)?;
    positive("m", m)?;
    if nu < 0.0 {
        return Err(Error::invalid("nu", "coupling must be non-negative"));
    }
    Ok(PotentialModel { kind: Kind::Coupled2d { omega, delta, nu, m } })
}

/// 2D double well along x with a harmonic y confinement:
/// V = (ν/4)(1 − x²)² + ½ m ω² y².
pub fn double_well_harmonic_2d(nu: f64, m: f64, omega: f64) -> Result<PotentialModel> {
    positive("nu", nu)?;
    positive("m", m)?;
    positive("omega", omega)?;
    Ok(PotentialModel { kind: Kind::DoubleWellHarmonic2d { nu, m, omega } })
}

/// Billiard-shaped landscape built from smoothed steps.
///
/// The interior — bounded left and below by walls at 0.3, right and above
/// by walls at `r2`, cut by the diagonal wall y = tan(2π/5)·x and by a
/// dispersing disc of radius `r1` at the origin — is a flat plateau near
/// zero. Outside any wall the landscape sits at +4, and a weak quartic
/// confinement ((x−r2/2)² + (y−r2/2)²)²/16 is added on top.
///
/// Step orientation inside the composition: the inner steps are offset to
/// rise 0 → 8 as their argument turns positive, so the outer step operates
/// on its transition region (interior sum ≈ 0, one violated wall ≈ 8).
/// Composing the raw (−8, 0)-valued steps directly saturates the outer
/// step everywhere — at most four of the six inner conditions can hold at
/// once — and flattens the landscape to the confinement alone.
pub fn sinai_potential(r1: f64, r2: f64) -> Result<PotentialModel> {
    positive("r1", r1)?;
    if r2 <= r1 {
        return Err(Error::invalid("r2", format!("need r2 > r1 > 0, got r1={r1}, r2={r2}")));
    }
    Ok(PotentialModel { kind: Kind::Sinai { r1, r2 } })
}

/// Smoothed elliptic well: V = St((x/r1)² + (y/r2)² − 1), an −8 deep
/// plateau inside the ellipse rising to 0 outside.
pub fn ellipse_potential(r1: f64, r2: f64) -> Result<PotentialModel> {
    positive("r1", r1)?;
    positive("r2", r2)?;
    Ok(PotentialModel { kind: Kind::Ellipse { r1, r2 } })
}

/// Ring-shaped confinement V = m ω² (x² + y² − 1)².
pub fn ring_confinement(m: f64, omega: f64) -> Result<PotentialModel> {
    positive("m", m)?;
    positive("omega", omega)?;
    Ok(PotentialModel { kind: Kind::RingConfinement { m, omega } })
}

/// V ≡ 0 on a 2D grid (box confinement only).
pub fn zero_2d() -> PotentialModel {
    PotentialModel { kind: Kind::Zero2d }
}

impl PotentialModel {
    pub fn dimension(&self) -> usize {
        match self.kind {
            Kind::Harmonic { .. }
            | Kind::Quartic { .. }
            | Kind::DoubleWell { .. }
            | Kind::Linear { .. }
            | Kind::PeriodicConfined { .. }
            | Kind::Polynomial { .. } => 1,
            _ => 2,
        }
    }

    pub fn id(&self) -> &'static str {
        match self.kind {
            Kind::Harmonic { .. } => "harmonic",
            Kind::Quartic { .. } => "quartic",
            Kind::DoubleWell { .. } => "double-well",
            Kind::Linear { .. } => "linear",
            Kind::PeriodicConfined { .. } => "periodic-confined",
            Kind::Polynomial { .. } => "poly",
            Kind::Coupled2d { .. } => "coupled-2d",
            Kind::DoubleWellHarmonic2d { .. } => "double-well-2d",
            Kind::Sinai { .. } => "sinai",
            Kind::Ellipse { .. } => "ellipse",
            Kind::RingConfinement { .. } => "ring",
            Kind::Zero2d => "zero-2d",
        }
    }

    /// Parameter record, in a stable order.
    pub fn params(&self) -> Vec<(&'static str, f64)> {
        match &self.kind {
            Kind::Harmonic { m, omega } => vec![("m", *m), ("omega", *omega)],
            Kind::Quartic { nu, m } => vec![("nu", *nu), ("m", *m)],
            Kind::DoubleWell { nu } => vec![("nu", *nu)],
            Kind::Linear { alpha } => vec![("alpha", *alpha)],
            Kind::PeriodicConfined { v0, vc } => vec![("v0", *v0), ("vc", *vc)],
            Kind::Polynomial { coeffs } => {
                // index encoded in the value order; good enough for provenance
                coeffs.iter().enumerate().map(|(_, c)| ("c", *c)).collect()
            }
            Kind::Coupled2d { omega, delta, nu, m } => {
                vec![("omega", *omega), ("delta", *delta), ("nu", *nu), ("m", *m)]
            }
            Kind::DoubleWellHarmonic2d { nu, m, omega } => {
                vec![("nu", *nu), ("m", *m), ("omega", *omega)]
            }
            Kind::Sinai { r1, r2 } => vec![("r1", *r1), ("r2", *r2)],
            Kind::Ellipse { r1, r2 } => vec![("r1", *r1), ("r2", *r2)],
            Kind::RingConfinement { m, omega } => vec![("m", *m), ("omega", *omega)],
            Kind::Zero2d => vec![],
        }
    }

    /// 1D evaluation. Panics on 2D kinds; callers gate on `dimension()`.
    pub fn v1(&self, x: f64) -> f64 {
        match &self.kind {
            Kind::Harmonic { m, omega } => 0.5 * m * omega * omega * x * x,
            Kind::Quartic { nu, .. } => 0.25 * nu * x.powi(4),
            Kind::DoubleWell { nu } => 0.25 * nu * (x * x - 1.0).powi(2),
            Kind::Linear { alpha } => alpha * x,
            Kind::PeriodicConfined { v0, vc } => {
                v0 * (1.0 - x.cos()) + vc * (x / (40.0 * PI)).powi(10)
            }
            Kind::Polynomial { coeffs } => {
                let mut acc = 0.0;
                for &c in coeffs.iter().rev() {
                    acc = acc * x + c;
                }
                acc
            }
            _ => panic!("v1 called on a 2D potential"),
        }
    }

    /// First derivative, 1D kinds.
    pub fn dv1(&self, x: f64) -> f64 {
        match &self.kind {
            Kind::Harmonic { m, omega } => m * omega * omega * x,
            Kind::Quartic { nu, .. } => nu * x.powi(3),
            Kind::DoubleWell { nu } => nu * x * (x * x - 1.0),
            Kind::Linear { alpha } => *alpha,
            Kind::PeriodicConfined { v0, vc } => {
                v0 * x.sin() + 10.0 * vc * x.powi(9) / (40.0 * PI).powi(10)
            }
            Kind::Polynomial { coeffs } => {
                let mut acc = 0.0;
                for (k, &c) in coeffs.iter().enumerate().skip(1).rev() {
                    acc = acc * x + k as f64 * c;
                }
                acc
            }
            _ => panic!("dv1 called on a 2D potential"),
        }
    }

    /// Second derivative, 1D kinds.
    pub fn d2v1(&self, x: f64) -> f64 {
        match &self.kind {
            Kind::Harmonic { m, omega } => m * omega * omega,
            Kind::Quartic { nu, .. } => 3.0 * nu * x * x,
            Kind::DoubleWell { nu } => nu * (3.0 * x * x - 1.0),
            Kind::Linear { .. } => 0.0,
            Kind::PeriodicConfined { v0, vc } => {
                v0 * x.cos() + 90.0 * vc * x.powi(8) / (40.0 * PI).powi(10)
            }
            Kind::Polynomial { coeffs } => {
                let mut acc = 0.0;
                for (k, &c) in coeffs.iter().enumerate().skip(2).rev() {
                    acc = acc * x + (k * (k - 1)) as f64 * c;
                }
                acc
            }
            _ => panic!("d2v1 called on a 2D potential"),
        }
    }

    /// 2D evaluation. Panics on 1D kinds; callers gate on `dimension()`.
    pub fn v2(&self, x: f64, y: f64) -> f64 {
        match &self.kind {
            Kind::Coupled2d { omega, delta, nu, m } => {
                0.5 * m * (omega + delta).powi(2) * x * x
                    + 0.5 * m * (omega - delta).powi(2) * y * y
                    + 0.25 * nu * x * x * y * y
            }
            Kind::DoubleWellHarmonic2d { nu, m, omega } => {
                0.25 * nu * (1.0 - x * x).powi(2) + 0.5 * m * omega * omega * y * y
            }
            Kind::Sinai { r1, r2 } => {
                let s = |t: f64| smoothed_step(t) + 8.0;
                let tan72 = (2.0 * PI / 5.0).tan();
                let walls = s(-y + 0.3)
                    + s(x - r2)
                    + s(r1 * r1 - x * x - y * y)
                    + s(-x + 0.3)
                    + s(y - tan72 * x)
                    + s(y - r2);
                let cx = x - r2 / 2.0;
                let cy = y - r2 / 2.0;
                smoothed_step(walls) + 4.0 + (cx * cx + cy * cy).powi(2) / 16.0
            }
            Kind::Ellipse { r1, r2 } => {
                smoothed_step((x / r1).powi(2) + (y / r2).powi(2) - 1.0)
            }
            Kind::RingConfinement { m, omega } => m * omega * omega * (x * x + y * y - 1.0).powi(2),
            Kind::Zero2d => 0.0,
            _ => panic!("v2 called on a 1D potential"),
        }
    }

    /// Evaluate at a `[x, y]` position regardless of dimension.
    pub fn eval(&self, pos: [f64; 2]) -> f64 {
        if self.dimension() == 1 {
            self.v1(pos[0])
        } else {
            self.v2(pos[0], pos[1])
        }
    }
}

impl fmt::Debug for PotentialModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PotentialModel({}", self.id())?;
        for (k, v) in self.params() {
            write!(f, " {k}={v}")?;
        }
        write!(f, ")")
    }
}

/// Instantiate a catalog potential from a string id and parameter record.
pub fn from_params(id: &str, p: &BTreeMap<String, f64>) -> Result<PotentialModel> {
    let get = |key: &str, default: Option<f64>| -> Result<f64> {
        p.get(key).copied().or(default).ok_or_else(|| {
            Error::invalid("params", format!("potential `{id}` needs parameter `{key}`"))
        })
    };
    match id {
        "harmonic" => harmonic(get("m", Some(1.0))?, get("omega", Some(1.0))?),
        "quartic" => quartic(get("nu", Some(1.0))?, get("m", Some(1.0))?),
        "double-well" => double_well(get("nu", Some(1.0))?),
        "linear" => linear(get("alpha", Some(1.0))?),
        "periodic-confined" => periodic_confined(get("v0", Some(1.0))?, get("vc", Some(2.0))?),
        "coupled-2d" => coupled_2d(
            get("omega", Some(1.0))?,
            get("delta", Some(0.0))?,
            get("nu", Some(0.0))?,
            get("m", Some(1.0))?,
        ),
        "double-well-2d" => double_well_harmonic_2d(
            get("nu", Some(1.0))?,
            get("m", Some(1.0))?,
            get("omega", Some(1.0))?,
        ),
        "sinai" => sinai_potential(get("r1", None)?, get("r2", None)?),
        "ellipse" => ellipse_potential(get("r1", None)?, get("r2", None)?),
        "ring" => ring_confinement(get("m", Some(1.0))?, get("omega", Some(1.0))?),
        "zero-2d" => Ok(zero_2d()),
        _ => Err(Error::invalid(
            "potential",
            format!(
                "unknown id `{id}`; known: harmonic, quartic, double-well, linear, \
                 periodic-confined, coupled-2d, double-well-2d, sinai, ellipse, ring, zero-2d"
            ),
        )),
    }
}

/// One base potential plus a list of parameter records, one per realization.
#[derive(Debug, Clone)]
pub struct EnsembleSweep {
    pub base: String,
    pub records: Vec<BTreeMap<String, f64>>,
}

impl EnsembleSweep {
    pub fn new(base: impl Into<String>, records: Vec<BTreeMap<String, f64>>) -> Result<Self> {
        let base = base.into();
        if records.is_empty() {
            return Err(Error::invalid("records", "ensemble sweep needs at least one realization"));
        }
        for (i, r) in records.iter().enumerate() {
            from_params(&base, r).map_err(|e| {
                Error::invalid("records", format!("realization {i} invalid: {e}"))
            })?;
        }
        Ok(EnsembleSweep { base, records })
    }

    pub fn instantiate(&self, i: usize) -> Result<PotentialModel> {
        from_params(&self.base, &self.records[i])
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }
}

/// Evaluatable vector potential A with charge q (c folded into q, so
/// minimal coupling reads p − qA).
#[derive(Clone)]
pub struct VectorPotentialModel {
    kind: VectorKind,
    q: f64,
}

#[derive(Clone)]
enum VectorKind {
    Zero1d,
    Zero2d,
    Constant1d { a0: f64 },
    Custom1d { id: String, f: Arc<dyn Fn(f64) -> f64 + Send + Sync> },
    UniformField { b: f64 },
    RadialDecay { phi: f64, delta: f64 },
}

/// A ≡ 0 (1D), for exact comparisons against the scalar builders.
pub fn zero_vector_1d() -> VectorPotentialModel {
    VectorPotentialModel { kind: VectorKind::Zero1d, q: 1.0 }
}

pub fn zero_vector_2d() -> VectorPotentialModel {
    VectorPotentialModel { kind: VectorKind::Zero2d, q: 1.0 }
}

/// Constant 1D vector potential (a pure gauge: A = ∂x(a0 x)).
pub fn constant_vector_1d(a0: f64) -> VectorPotentialModel {
    VectorPotentialModel { kind: VectorKind::Constant1d { a0 }, q: 1.0 }
}

/// Arbitrary 1D profile, for gauge experiments.
pub fn custom_vector_1d(
    id: impl Into<String>,
    f: impl Fn(f64) -> f64 + Send + Sync + 'static,
) -> VectorPotentialModel {
    VectorPotentialModel {
        kind: VectorKind::Custom1d { id: id.into(), f: Arc::new(f) },
        q: 1.0,
    }
}

/// Landau gauge for a uniform perpendicular field B: A = (−By, 0).
pub fn uniform_field_gauge(b: f64) -> VectorPotentialModel {
    VectorPotentialModel { kind: VectorKind::UniformField { b }, q: 1.0 }
}

/// Radially decaying field: A = Φ/(2π(x² + y² + δ²)) · (−y, x).
pub fn radial_vector_potential(phi: f64, delta: f64) -> VectorPotentialModel {
    VectorPotentialModel { kind: VectorKind::RadialDecay { phi, delta }, q: 1.0 }
}

impl VectorPotentialModel {
    pub fn with_charge(mut self, q: f64) -> Self {
        self.q = q;
        self
    }

    pub fn charge(&self) -> f64 {
        self.q
    }

    pub fn dimension(&self) -> usize {
        match self.kind {
            VectorKind::Zero1d | VectorKind::Constant1d { .. } | VectorKind::Custom1d { .. } => 1,
            _ => 2,
        }
    }

    pub fn id(&self) -> String {
        match &self.kind {
            VectorKind::Zero1d => "zero".into(),
            VectorKind::Zero2d => "zero".into(),
            VectorKind::Constant1d { a0 } => format!("constant(a0={a0})"),
            VectorKind::Custom1d { id, .. } => id.clone(),
            VectorKind::UniformField { b } => format!("uniform(b={b})"),
            VectorKind::RadialDecay { phi, delta } => format!("radial(phi={phi},delta={delta})"),
        }
    }

    /// 1D evaluation A(x).
    pub fn a1(&self, x: f64) -> f64 {
        match &self.kind {
            VectorKind::Zero1d => 0.0,
            VectorKind::Constant1d { a0 } => *a0,
            VectorKind::Custom1d { f, .. } => f(x),
            _ => panic!("a1 called on a 2D vector potential"),
        }
    }

    /// 2D evaluation A(x, y) → (Ax, Ay).
    pub fn a2(&self, x: f64, y: f64) -> [f64; 2] {
        match &self.kind {
            VectorKind::Zero2d => [0.0, 0.0],
            VectorKind::UniformField { b } => [-b * y, 0.0],
            VectorKind::RadialDecay { phi, delta } => {
                let c = phi / (2.0 * PI * (x * x + y * y + delta * delta));
                [-c * y, c * x]
            }
            _ => panic!("a2 called on a 1D vector potential"),
        }
    }
}

impl fmt::Debug for VectorPotentialModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VectorPotentialModel({}, q={})", self.id(), self.q)
    }
}
