//! Scalar abstraction shared by every numerical module.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};

/// Real floating-point scalar (`f32` or `f64`) together with the numerical
/// tolerances appropriate for its precision.
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + NumAssign + Sum + Debug + Display + Default + Send + Sync + 'static
{
    /// Maximum `|a_ij - conj(a_ji)|` accepted for a Hermitian matrix.
    const HERMITIAN_TOL: f64;
    /// Maximum `|Tr ρ - 1|` accepted for a density matrix.
    const TRACE_TOL: f64;
    /// Most negative eigenvalue accepted for a positive semidefinite matrix.
    const PSD_TOL: f64;
    /// Largest off-X entry magnitude accepted when projecting onto X form.
    const OFF_X_TOL: f64;
    /// Off-diagonal Frobenius norm at which Jacobi iteration stops.
    const EIG_TOL: f64;

    /// Converts an `f64` literal into this scalar type.
    #[inline]
    fn c(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable in scalar type")
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f64 {
    const HERMITIAN_TOL: f64 = 1e-12;
    const TRACE_TOL: f64 = 1e-12;
    const PSD_TOL: f64 = 1e-10;
    const OFF_X_TOL: f64 = 1e-10;
    const EIG_TOL: f64 = 1e-12;
}

impl Real for f32 {
    const HERMITIAN_TOL: f64 = 1e-5;
    const TRACE_TOL: f64 = 1e-5;
    const PSD_TOL: f64 = 1e-4;
    const OFF_X_TOL: f64 = 1e-4;
    const EIG_TOL: f64 = 1e-6;
}
