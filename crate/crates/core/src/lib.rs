//! Quasi-interpolation with hyperbolic-tangent radial basis functions:
//! kernel families, generalized Fourier transform expansions at the origin,
//! Strang–Fix moment systems for quasi-Lagrange coefficients, lattice
//! quasi-interpolants, and the experiment drivers behind the `tanhqi` CLI.

pub mod dd;
pub mod error;
pub mod gft;
pub mod kernels;
pub mod quad;
pub mod specfun;

pub use error::{Error, Result};
