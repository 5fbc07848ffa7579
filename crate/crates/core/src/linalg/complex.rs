use std::ops::RangeInclusive;

use super::elim::rank;
use super::field::Field;
use super::mat::Mat;
use crate::error::{Error, Result};

/// A bounded chain complex of finite-dimensional spaces `C_0 ← C_1 ← … ← C_top`.
///
/// `differential(n)` is `d_n : C_n → C_{n-1}`; `d_0` is zero.
#[derive(Clone, Debug)]
pub struct ChainComplex<F: Field> {
    field: F,
    spaces: Vec<usize>,
    // diffs[n - 1] = d_n
    diffs: Vec<Mat<F>>,
}

impl<F: Field> ChainComplex<F> {
    /// `diffs[k]` must be `d_{k+1}`, a `spaces[k] × spaces[k+1]` matrix.
    pub fn new(field: &F, spaces: Vec<usize>, diffs: Vec<Mat<F>>) -> Result<Self> {
        if diffs.len() + 1 != spaces.len().max(1) {
            return Err(Error::Input(format!(
                "{} spaces need {} differentials, got {}",
                spaces.len(),
                spaces.len().saturating_sub(1),
                diffs.len()
            )));
        }
        for (k, d) in diffs.iter().enumerate() {
            if d.rows() != spaces[k] || d.cols() != spaces[k + 1] {
                return Err(Error::Input(format!(
                    "d_{} has shape {}x{}, expected {}x{}",
                    k + 1,
                    d.rows(),
                    d.cols(),
                    spaces[k],
                    spaces[k + 1]
                )));
            }
        }
        Ok(ChainComplex { field: field.clone(), spaces, diffs })
    }

    /// A complex with zero differentials.
    pub fn zero_differentials(field: &F, spaces: Vec<usize>) -> Self {
        let diffs = spaces.windows(2).map(|w| Mat::zeros(field, w[0], w[1])).collect();
        ChainComplex { field: field.clone(), spaces, diffs }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn top_degree(&self) -> usize {
        self.spaces.len().saturating_sub(1)
    }

    pub fn dim(&self, n: usize) -> usize {
        self.spaces.get(n).copied().unwrap_or(0)
    }

    pub fn spaces(&self) -> &[usize] {
        &self.spaces
    }

    pub fn differential(&self, n: usize) -> Mat<F> {
        if n == 0 || n > self.diffs.len() {
            Mat::zeros(&self.field, self.dim(n.wrapping_sub(1)), self.dim(n))
        } else {
            self.diffs[n - 1].clone()
        }
    }

    fn diff_rank(&self, n: usize) -> usize {
        if n == 0 || n > self.diffs.len() {
            0
        } else {
            rank(&self.diffs[n - 1])
        }
    }

    /// Checks `d_n ∘ d_{n+1} = 0` for every `n` in the window.
    pub fn check_square_zero(&self, degrees: RangeInclusive<usize>) -> Result<()> {
        for n in degrees {
            if n >= 1 && n < self.diffs.len() && !self.diffs[n - 1].mul(&self.diffs[n]).is_zero() {
                return Err(Error::NotAComplex { degree: n });
            }
        }
        Ok(())
    }

    /// `dim ker d_n − rank d_{n+1}` for each `n` in the window.
    ///
    /// Degrees at the top of the stored complex are only meaningful if the caller built
    /// the complex one step beyond the window.
    pub fn homology_dims(&self, degrees: RangeInclusive<usize>) -> Result<Vec<usize>> {
        self.check_square_zero(degrees.clone())?;
        Ok(degrees
            .map(|n| self.dim(n) - self.diff_rank(n) - self.diff_rank(n + 1))
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::field::Rationals;

    #[test]
    fn single_space() {
        let c = ChainComplex::zero_differentials(&Rationals, vec![3]);
        assert_eq!(c.homology_dims(0..=0).unwrap(), vec![3]);
    }

    #[test]
    fn exact_identity_complex() {
        let q = Rationals;
        let c = ChainComplex::new(&q, vec![1, 1], vec![Mat::identity(&q, 1)]).unwrap();
        assert_eq!(c.homology_dims(0..=1).unwrap(), vec![0, 0]);
    }

    #[test]
    fn detects_nonzero_square() {
        let q = Rationals;
        let id = Mat::identity(&q, 1);
        let c = ChainComplex::new(&q, vec![1, 1, 1], vec![id.clone(), id]).unwrap();
        assert!(matches!(c.homology_dims(0..=2), Err(Error::NotAComplex { degree: 1 })));
    }
}
