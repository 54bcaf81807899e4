//! Independent numerical ground truth for the closed forms: a Jacobi
//! eigensolver, matrix norms, brute-force discord minimization and the
//! general Wootters concurrence.

pub mod concurrence;
pub mod discord;
pub mod eigen;
pub mod norms;
pub mod optimize;

pub use concurrence::concurrence_wootters;
pub use discord::{dephase, gqd1_brute, gqd2_brute, CQCandidate};
pub use eigen::{hermitian_eigen, hermitian_eigs, HermitianEigen};
pub use norms::{hs_norm_sq, trace_norm};
pub use optimize::OptimizerConfig;
