//! First-order formulation of topologically massive gauge theory in 2+1
//! Euclidean dimensions: construction of the 6x6 wave-equation operators
//! from their defining matrix-unit sums, the momentum-space projector
//! family, the reduced 5x5 Hamiltonian, and coordinate-space checks of the
//! energy-momentum tensors and dilatation currents — each identity verified
//! mechanically, at exact integer precision for the constant operators and
//! near machine precision for the rest.
//!
//! The crate is organized around check suites that emit one [`CheckReport`]
//! per verified identity; see [`suites::run_suite`]. Discrepancies between
//! derived operators and their printed forms are recorded as non-failing
//! erratum notes.

// Tensor formulas read clearest as explicit index loops, and the
// `!(x > 0.0)` validations must reject NaN.
#![allow(clippy::needless_range_loop, clippy::neg_cmp_op_on_partial_ord)]

pub mod algebra;
pub mod dkp;
pub mod error;
pub mod fieldtheory;
pub mod matrix;
pub mod momentum;
pub mod printed;
pub mod report;
pub mod rng;
pub mod scalar;
pub mod schroedinger;
pub mod suites;

pub use error::Error;
pub use report::{CheckReport, Status};
pub use suites::{run_suite, Suite, SuiteConfig};
