//! JSON state files.
//!
//! Mixed states: `{"dim": d, "re": [[...]], "im": [[...]]}` (row-major).
//! Pure states: `{"amplitudes_re": [...], "amplitudes_im": [...]}`.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::CMatrix;
use crate::state::density::{DensityMatrix, PureState};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum StateFile {
    Dense { dim: usize, re: Vec<Vec<f64>>, im: Vec<Vec<f64>> },
    Pure { amplitudes_re: Vec<f64>, amplitudes_im: Vec<f64> },
}

impl StateFile {
    pub fn from_density(rho: &DensityMatrix<f64>) -> Self {
        let m = rho.matrix();
        let d = m.dim();
        let rows = |f: fn(&Complex<f64>) -> f64| (0..d).map(|i| (0..d).map(|j| f(&m[(i, j)])).collect()).collect();
        StateFile::Dense { dim: d, re: rows(|z| z.re), im: rows(|z| z.im) }
    }

    pub fn from_pure(psi: &PureState<f64>) -> Self {
        StateFile::Pure {
            amplitudes_re: psi.amplitudes().iter().map(|z| z.re).collect(),
            amplitudes_im: psi.amplitudes().iter().map(|z| z.im).collect(),
        }
    }

    /// Validated density matrix described by this file.
    pub fn to_density(&self) -> Result<DensityMatrix<f64>> {
        match self {
            StateFile::Dense { dim, re, im } => {
                let shape_ok = re.len() == *dim && im.len() == *dim && re.iter().chain(im).all(|r| r.len() == *dim);
                if !shape_ok {
                    return Err(Error::DimensionMismatch { expected: *dim, found: re.len() });
                }
                let m = CMatrix::from_fn(*dim, |i, j| Complex::new(re[i][j], im[i][j]));
                DensityMatrix::new(m)
            }
            StateFile::Pure { amplitudes_re, amplitudes_im } => {
                if amplitudes_re.len() != amplitudes_im.len() {
                    return Err(Error::DimensionMismatch { expected: amplitudes_re.len(), found: amplitudes_im.len() });
                }
                let amps = amplitudes_re.iter().zip(amplitudes_im).map(|(&r, &i)| Complex::new(r, i)).collect();
                DensityMatrix::from_pure(&PureState::new(amps)?)
            }
        }
    }
}
