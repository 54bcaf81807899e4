//! Geometric quantum discords of few-qubit states.
//!
//! Closed forms for the trace-norm (GQD-1) and Hilbert–Schmidt (GQD-2)
//! discords of X states and pure bipartitions, brute-force oracles that
//! certify them, and the cavity-reservoir dynamics with its sudden changes,
//! phase structure and monogamy deficits.
//!
//! Everything numerical is generic over [`Real`] (`f32` or `f64`); the
//! aliases below fix the scalar to `f64`, with `…32` variants for `f32`.

pub mod cli;
pub mod dynamics;
pub mod error;
pub mod matrix;
pub mod measures;
pub mod monogamy;
pub mod oracle;
pub mod sampling;
pub mod scalar;
pub mod state;

pub use error::{Error, Result};
pub use scalar::Real;

pub type CMatrix = matrix::CMatrix<f64>;
pub type DensityMatrix = state::DensityMatrix<f64>;
pub type PureState = state::PureState<f64>;
pub type XState = state::XState<f64>;
pub type BlochForm = state::BlochForm<f64>;
pub type SchmidtPair = state::SchmidtPair<f64>;
pub type MeasureSet = measures::MeasureSet<f64>;
pub type DynamicsPoint = dynamics::DynamicsPoint<f64>;
pub type EvolutionClass = dynamics::EvolutionClass<f64>;
pub type MonogamyReport = monogamy::MonogamyReport<f64>;
pub type WStateSpec = monogamy::WStateSpec<f64>;

pub type CMatrix32 = matrix::CMatrix<f32>;
pub type DensityMatrix32 = state::DensityMatrix<f32>;
pub type PureState32 = state::PureState<f32>;
pub type XState32 = state::XState<f32>;
pub type BlochForm32 = state::BlochForm<f32>;
pub type MeasureSet32 = measures::MeasureSet<f32>;
