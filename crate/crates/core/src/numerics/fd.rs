//! Finite-difference derivatives on uniform grids.
//!
//! Interior nodes use centred stencils. Nodes closer than the half-width to an end
//! use a shifted stencil with the same number of points, with weights from
//! Fornberg's recursion.

use num_complex::Complex64;

/// Order of accuracy of the centred stencil.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Stencil {
    Fourth,
    Sixth,
    #[default]
    Eighth,
}

impl Stencil {
    /// Nodes on each side of the centre.
    pub fn half_width(self) -> usize {
        match self {
            Stencil::Fourth => 2,
            Stencil::Sixth => 3,
            Stencil::Eighth => 4,
        }
    }

    pub fn points(self) -> usize {
        2 * self.half_width() + 1
    }

    pub fn order(self) -> u32 {
        2 * self.half_width() as u32
    }
}

/// Weights `w[d][j]` of the d-th derivative at `x0` from values at `nodes[j]`, d ≤ `max_deriv`.
pub fn fornberg_weights(x0: f64, nodes: &[f64], max_deriv: usize) -> Vec<Vec<f64>> {
    let n = nodes.len();
    let mut c = vec![vec![0.0; n]; max_deriv + 1];
    c[0][0] = 1.0;
    let mut c1 = 1.0;
    let mut c4 = nodes[0] - x0;
    for i in 1..n {
        let mn = i.min(max_deriv);
        let mut c2 = 1.0;
        let c5 = c4;
        c4 = nodes[i] - x0;
        for j in 0..i {
            let c3 = nodes[i] - nodes[j];
            c2 *= c3;
            if j == i - 1 {
                for k in (1..=mn).rev() {
                    c[k][i] = c1 * (k as f64 * c[k - 1][i - 1] - c5 * c[k][i - 1]) / c2;
                }
                c[0][i] = -c1 * c5 * c[0][i - 1] / c2;
            }
            for k in (1..=mn).rev() {
                c[k][j] = (c4 * c[k][j] - k as f64 * c[k - 1][j]) / c3;
            }
            c[0][j] = c4 * c[0][j] / c3;
        }
        c1 = c2;
    }
    c
}

fn derivative(values: &[Complex64], h: f64, stencil: Stencil, deriv: usize) -> Vec<Complex64> {
    let width = stencil.points();
    let n = values.len();
    assert!(n >= width, "need at least {width} samples, got {n}");
    let half = stencil.half_width();
    let offsets: Vec<f64> = (0..width).map(|j| j as f64).collect();
    // weights for each position of the evaluation node inside the window
    let table: Vec<Vec<f64>> = (0..width)
        .map(|pos| fornberg_weights(pos as f64, &offsets, deriv).swap_remove(deriv))
        .collect();
    let scale = h.powi(deriv as i32);
    (0..n)
        .map(|k| {
            let start = k.saturating_sub(half).min(n - width);
            let weights = &table[k - start];
            let acc = values[start..start + width]
                .iter()
                .zip(weights)
                .fold(Complex64::new(0.0, 0.0), |acc, (v, w)| acc + v * w);
            acc / scale
        })
        .collect()
}

/// First derivative at every node.
pub fn first_derivative(values: &[Complex64], h: f64, stencil: Stencil) -> Vec<Complex64> {
    derivative(values, h, stencil, 1)
}

/// Second derivative at every node.
pub fn second_derivative(values: &[Complex64], h: f64, stencil: Stencil) -> Vec<Complex64> {
    derivative(values, h, stencil, 2)
}
