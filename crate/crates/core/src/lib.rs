//! An executable model of quantum computation built from four layers:
//!
//! * [`vector`]: amplitude vectors with `return`/`bind` and vector-space structure,
//! * [`linear`]: linear operators (gates) and their combinators,
//! * [`density`]: density matrices,
//! * [`superop`]: superoperators with the arrow combinators `arr`, `>>>` and
//!   `first`, plus measurement and partial trace.
//!
//! On top sit the worked [`circuits`] (Toffoli, teleportation, copy/weaken),
//! the numeric [`laws`] suites, and [`textcircuit`], which compiles a small
//! line-oriented circuit language into superoperator pipelines and backs the
//! `qarrow` CLI.
//!
//! ```
//! use qarrow::{density::DensityMatrix, superop::Superoperator, vector, Basis};
//!
//! let meas = Superoperator::meas(&Basis::boolean());
//! let discard = Superoperator::tr_l(meas.output()).unwrap();
//! let out = meas
//!     .then(&discard)
//!     .unwrap()
//!     .apply(&DensityMatrix::pure(&vector::q_ft()))
//!     .unwrap();
//! assert!((out.get(0, 0).re - 0.5).abs() < 1e-12);
//! assert!(out.get(0, 1).norm() < 1e-12);
//! ```

pub mod basis;
pub mod circuits;
pub mod density;
pub mod error;
pub mod laws;
pub mod linear;
pub mod superop;
pub mod textcircuit;
pub mod vector;

pub use basis::{Basis, Element};
pub use density::DensityMatrix;
pub use error::{Error, Result};
pub use linear::LinearOp;
pub use superop::Superoperator;
pub use vector::{Amplitude, StateVector};
