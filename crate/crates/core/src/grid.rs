//! Uniform spatial grids, quadrature, and sampled fields.
//!
//! Every matrix and state in the workbench lives on a [`GridSpec`]: a
//! uniform 1D or 2D grid with rectangle-rule quadrature. The quadrature
//! weight (product of spacings) is what turns a sampled kernel into a
//! discrete integral operator, so all modules share these conventions.

use crate::error::{Error, Result};
use num_complex::Complex64;

/// Uniform discretization of a 1D interval or a 2D rectangle.
///
/// 2D grids are flattened row-major: the point `(i, j)` (axis 0 index `i`,
/// axis 1 index `j`) maps to flat index `i * points[1] + j`.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSpec {
    dimension: usize,
    extents: Vec<[f64; 2]>,
    points: Vec<usize>,
    spacing: Vec<f64>,
}

impl GridSpec {
    /// Number of spatial dimensions (1 or 2).
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// `[min, max]` extent of the given axis.
    pub fn extent(&self, axis: usize) -> [f64; 2] {
        self.extents[axis]
    }

    /// Points along the given axis.
    pub fn points(&self, axis: usize) -> usize {
        self.points[axis]
    }

    /// Grid spacing along the given axis.
    pub fn spacing(&self, axis: usize) -> f64 {
        self.spacing[axis]
    }

    /// Total number of grid points (product over axes).
    pub fn len(&self) -> usize {
        self.points.iter().product()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Cell quadrature weight: the product of spacings. This is the weight
    /// that turns a sampled kernel into a discrete operator (`W·Δ`).
    pub fn quadrature_weight(&self) -> f64 {
        self.spacing.iter().product()
    }

    /// Trapezoid weight of a flat index: the cell weight reduced by 1/2 per
    /// axis on which the point sits at the boundary. Integrals of sampled
    /// fields use these weights so constants integrate exactly; for fields
    /// that decay at the boundary the distinction from the plain cell
    /// weight is negligible.
    pub fn point_weight(&self, flat: usize) -> f64 {
        let mut w = self.quadrature_weight();
        match self.dimension {
            1 => {
                if flat == 0 || flat == self.points[0] - 1 {
                    w *= 0.5;
                }
            }
            _ => {
                let ny = self.points[1];
                let (i, j) = (flat / ny, flat % ny);
                if i == 0 || i == self.points[0] - 1 {
                    w *= 0.5;
                }
                if j == 0 || j == ny - 1 {
                    w *= 0.5;
                }
            }
        }
        w
    }

    /// Coordinate of index `i` on the given axis.
    pub fn coord(&self, axis: usize, i: usize) -> f64 {
        self.extents[axis][0] + self.spacing[axis] * i as f64
    }

    /// Position of a flattened index, always returned as `[x, y]`
    /// (`y = 0` for 1D grids).
    pub fn position(&self, flat: usize) -> [f64; 2] {
        match self.dimension {
            1 => [self.coord(0, flat), 0.0],
            _ => {
                let ny = self.points[1];
                [self.coord(0, flat / ny), self.coord(1, flat % ny)]
            }
        }
    }

    /// Flat index of the multi-index `(i, j)` (row-major).
    pub fn flat_index(&self, i: usize, j: usize) -> usize {
        match self.dimension {
            1 => i,
            _ => i * self.points[1] + j,
        }
    }

    /// All positions in flat order.
    pub fn positions(&self) -> Vec<[f64; 2]> {
        (0..self.len()).map(|k| self.position(k)).collect()
    }

    /// Sample a scalar function of position into a real vector, flat order.
    pub fn sample(&self, f: impl Fn(f64, f64) -> f64) -> Vec<f64> {
        (0..self.len())
            .map(|k| {
                let [x, y] = self.position(k);
                f(x, y)
            })
            .collect()
    }
}

/// Build a grid. `extents` holds one `[min, max]` pair per axis and
/// `points` the matching per-axis point counts (at least 8 each).
pub fn make_grid(dimension: usize, extents: &[[f64; 2]], points: &[usize]) -> Result<GridSpec> {
    if dimension != 1 && dimension != 2 {
        return Err(Error::invalid("dimension", format!("must be 1 or 2, got {dimension}")));
    }
    if extents.len() != dimension || points.len() != dimension {
        return Err(Error::invalid(
            "extents",
            format!(
                "need {dimension} extent pair(s) and point count(s), got {} and {}",
                extents.len(),
                points.len()
            ),
        ));
    }
    let mut spacing = Vec::with_capacity(dimension);
    for axis in 0..dimension {
        let [lo, hi] = extents[axis];
        if !lo.is_finite() || !hi.is_finite() {
            return Err(Error::invalid("extents", format!("axis {axis} extent is not finite")));
        }
        if hi <= lo {
            return Err(Error::invalid(
                "extents",
                format!("axis {axis} must be well-ordered, got [{lo}, {hi}]"),
            ));
        }
        if points[axis] < 8 {
            return Err(Error::invalid(
                "points",
                format!("axis {axis} needs at least 8 points, got {}", points[axis]),
            ));
        }
        spacing.push((hi - lo) / (points[axis] - 1) as f64);
    }
    Ok(GridSpec {
        dimension,
        extents: extents.to_vec(),
        points: points.to_vec(),
        spacing,
    })
}

/// Convenience constructor for 1D grids.
pub fn make_grid_1d(x_min: f64, x_max: f64, points: usize) -> Result<GridSpec> {
    make_grid(1, &[[x_min, x_max]], &[points])
}

/// A complex-valued field sampled on a grid, flat order.
#[derive(Debug, Clone)]
pub struct SampledField {
    pub grid: GridSpec,
    pub values: Vec<Complex64>,
}

impl SampledField {
    pub fn new(grid: GridSpec, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::invalid(
                "values",
                format!("expected {} samples, got {}", grid.len(), values.len()),
            ));
        }
        Ok(SampledField { grid, values })
    }

    pub fn from_real(grid: GridSpec, values: &[f64]) -> Result<Self> {
        let v = values.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        SampledField::new(grid, v)
    }

    /// Sample a complex function of position.
    pub fn from_fn(grid: GridSpec, f: impl Fn(f64, f64) -> Complex64) -> Self {
        let values = (0..grid.len())
            .map(|k| {
                let [x, y] = grid.position(k);
                f(x, y)
            })
            .collect();
        SampledField { grid, values }
    }

    pub fn norm(&self) -> f64 {
        let s: f64 = self
            .values
            .iter()
            .enumerate()
            .map(|(k, v)| v.norm_sqr() * self.grid.point_weight(k))
            .sum();
        s.sqrt()
    }

    /// Largest imaginary magnitude, used to assert real-valuedness.
    pub fn max_imag(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.im.abs()))
    }
}

/// Quadrature inner product `Σ conj(f_i) g_i · w_i`, approximating ∫ f* g
/// with trapezoid endpoint weights. Conjugate-linear in the first argument.
pub fn inner_product(f: &SampledField, g: &SampledField) -> Result<Complex64> {
    if f.grid != g.grid {
        return Err(Error::GridMismatch {
            left: f.grid.len(),
            right: g.grid.len(),
        });
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for (k, (a, b)) in f.values.iter().zip(&g.values).enumerate() {
        acc += a.conj() * b * f.grid.point_weight(k);
    }
    Ok(acc)
}
