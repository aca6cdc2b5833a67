//! Dense complex LU factorization with partial pivoting.
//!
//! Small and unapologetically O(n³); the systems solved here are a few
//! hundred unknowns at most and verifiability beats speed.

use num_complex::Complex64;

use crate::error::{Error, Result};

#[derive(Debug)]
pub(crate) struct LuFactors {
    dim: usize,
    lu: Vec<Complex64>,
    pivots: Vec<usize>,
}

/// Factors a row-major `dim x dim` matrix. A pivot whose magnitude falls
/// below `dim * EPSILON * max|entry|` is reported as singular together with
/// its magnitude.
pub(crate) fn factor(matrix: &[Complex64], dim: usize) -> Result<LuFactors> {
    debug_assert_eq!(matrix.len(), dim * dim);
    let mut lu = matrix.to_vec();
    let mut pivots: Vec<usize> = (0..dim).collect();
    let max_abs = matrix.iter().map(|c| c.norm()).fold(0.0f64, f64::max);
    let threshold = dim as f64 * f64::EPSILON * max_abs;

    for col in 0..dim {
        let mut pivot_row = col;
        let mut best = lu[col * dim + col].norm_sqr();
        for row in col + 1..dim {
            let cand = lu[row * dim + col].norm_sqr();
            if cand > best {
                best = cand;
                pivot_row = row;
            }
        }
        let pivot_magnitude = best.sqrt();
        if pivot_magnitude <= threshold {
            return Err(Error::SingularSystem {
                pivot_index: col,
                pivot_magnitude,
            });
        }
        if pivot_row != col {
            for k in 0..dim {
                lu.swap(col * dim + k, pivot_row * dim + k);
            }
            pivots.swap(col, pivot_row);
        }
        let pivot = lu[col * dim + col];
        for row in col + 1..dim {
            let factor = lu[row * dim + col] / pivot;
            lu[row * dim + col] = factor;
            for k in col + 1..dim {
                let sub = factor * lu[col * dim + k];
                lu[row * dim + k] -= sub;
            }
        }
    }
    Ok(LuFactors { dim, lu, pivots })
}

impl LuFactors {
    pub(crate) fn solve(&self, rhs: &[Complex64]) -> Vec<Complex64> {
        debug_assert_eq!(rhs.len(), self.dim);
        let n = self.dim;
        let mut x: Vec<Complex64> = self.pivots.iter().map(|&p| rhs[p]).collect();
        for row in 1..n {
            let (solved, rest) = x.split_at_mut(row);
            let mut acc = rest[0];
            for (col, value) in solved.iter().enumerate() {
                acc -= self.lu[row * n + col] * value;
            }
            rest[0] = acc;
        }
        for row in (0..n).rev() {
            let (head, tail) = x.split_at_mut(row + 1);
            let mut acc = head[row];
            for (offset, value) in tail.iter().enumerate() {
                acc -= self.lu[row * n + row + 1 + offset] * value;
            }
            head[row] = acc / self.lu[row * n + row];
        }
        x
    }
}
