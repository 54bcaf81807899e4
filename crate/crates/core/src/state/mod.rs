//! Few-qubit state representations: dense density matrices, Bloch form and
//! X form, together with partial traces and logical-qubit compression.

pub mod bloch;
pub mod density;
pub mod io;
pub mod pauli;
pub mod xstate;

pub use bloch::{bloch_compose, bloch_decompose, BlochForm};
pub use density::{tensor, validate_density, DensityMatrix, PureState, SchmidtPair};
pub use io::StateFile;
pub use pauli::PauliBasis;
pub use xstate::{logical_compress, x_project, x_spectral, XSpectralData, XState};
