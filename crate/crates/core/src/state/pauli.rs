use num_complex::Complex;

use crate::matrix::CMatrix;
use crate::scalar::Real;

/// The identity and the three Pauli matrices.
#[derive(Debug, Clone)]
pub struct PauliBasis<T> {
    pub identity: CMatrix<T>,
    pub sigma: [CMatrix<T>; 3],
}

impl<T: Real> PauliBasis<T> {
    pub fn new() -> Self {
        let z = T::zero();
        let o = T::one();
        let m = |a: [(T, T); 4]| {
            CMatrix::from_rows(&[
                vec![Complex::new(a[0].0, a[0].1), Complex::new(a[1].0, a[1].1)],
                vec![Complex::new(a[2].0, a[2].1), Complex::new(a[3].0, a[3].1)],
            ])
            .expect("2x2")
        };
        Self {
            identity: CMatrix::identity(2),
            sigma: [
                m([(z, z), (o, z), (o, z), (z, z)]),
                m([(z, z), (z, -o), (z, o), (z, z)]),
                m([(o, z), (z, z), (z, z), (-o, z)]),
            ],
        }
    }

    /// `σ_i ⊗ σ_j` with index 0 standing for the identity.
    pub fn pair(&self, i: usize, j: usize) -> CMatrix<T> {
        self.get(i).kron(self.get(j))
    }

    /// Index 0 is the identity, 1..=3 the Pauli matrices.
    pub fn get(&self, i: usize) -> &CMatrix<T> {
        match i {
            0 => &self.identity,
            k => &self.sigma[k - 1],
        }
    }
}

impl<T: Real> Default for PauliBasis<T> {
    fn default() -> Self {
        Self::new()
    }
}
