use num_complex::Complex64;

use crate::error::{Error, Result};

/// Uniform grid in x with nodes r_k = x_k − iθ; θ = 0 is the real axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialGrid {
    x_min: f64,
    x_max: f64,
    n_points: usize,
    theta: f64,
}

impl RadialGrid {
    pub fn new(x_min: f64, x_max: f64, n_points: usize, theta: f64) -> Result<Self> {
        if !(x_min.is_finite() && x_max.is_finite() && x_min < x_max) {
            return Err(Error::InvalidParameter {
                name: "grid",
                reason: format!("need finite x_min < x_max, got [{x_min}, {x_max}]"),
            });
        }
        if n_points < 3 {
            return Err(Error::GridTooSmall {
                points: n_points,
                needed: 3,
            });
        }
        if !(theta.is_finite() && theta >= 0.0) {
            return Err(Error::InvalidParameter {
                name: "theta",
                reason: format!("contour shift must be finite and >= 0, got {theta}"),
            });
        }
        Ok(Self {
            x_min,
            x_max,
            n_points,
            theta,
        })
    }

    pub fn real(x_min: f64, x_max: f64, n_points: usize) -> Result<Self> {
        Self::new(x_min, x_max, n_points, 0.0)
    }

    pub fn x_min(&self) -> f64 {
        self.x_min
    }

    pub fn x_max(&self) -> f64 {
        self.x_max
    }

    pub fn len(&self) -> usize {
        self.n_points
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn step(&self) -> f64 {
        (self.x_max - self.x_min) / (self.n_points - 1) as f64
    }

    pub fn x(&self, k: usize) -> f64 {
        if k + 1 == self.n_points {
            self.x_max
        } else {
            self.x_min + k as f64 * self.step()
        }
    }

    pub fn node(&self, k: usize) -> Complex64 {
        Complex64::new(self.x(k), -self.theta)
    }

    pub fn xs(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n_points).map(|k| self.x(k))
    }

    pub fn nodes(&self) -> impl Iterator<Item = Complex64> + '_ {
        (0..self.n_points).map(|k| self.node(k))
    }
}

/// A complex function sampled on every node of a [`RadialGrid`].
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexProfile {
    grid: RadialGrid,
    values: Vec<Complex64>,
}

impl ComplexProfile {
    pub fn new(grid: RadialGrid, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::GridMismatch);
        }
        Ok(Self { grid, values })
    }

    pub fn zeros(grid: RadialGrid) -> Self {
        Self {
            grid,
            values: vec![Complex64::new(0.0, 0.0); grid.len()],
        }
    }

    pub fn grid(&self) -> &RadialGrid {
        &self.grid
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Complex64> {
        self.values
    }

    pub(crate) fn same_grid(&self, other: &ComplexProfile) -> Result<()> {
        if self.grid == other.grid {
            Ok(())
        } else {
            Err(Error::GridMismatch)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nodes_are_shifted_below_axis() {
        let g = RadialGrid::new(0.0, 2.0, 5, 1.0).unwrap();
        assert_eq!(g.step(), 0.5);
        assert_eq!(g.node(2), Complex64::new(1.0, -1.0));
        assert_eq!(g.x(4), 2.0);
    }

    #[test]
    fn validation() {
        assert!(RadialGrid::real(1.0, 1.0, 10).is_err());
        assert!(RadialGrid::real(0.0, 1.0, 2).is_err());
        assert!(RadialGrid::new(0.0, 1.0, 10, -0.5).is_err());
        let g = RadialGrid::real(0.0, 1.0, 4).unwrap();
        assert!(ComplexProfile::new(g, vec![Complex64::new(0.0, 0.0); 3]).is_err());
    }
}
