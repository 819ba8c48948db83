//! Scott-Vogelius Stokes solver on triangular meshes.
//!
//! The crate solves the incompressible Stokes problem with the lowest-order
//! Scott-Vogelius pair (continuous P4 velocity, discontinuous P3 pressure),
//! detects quasi-singular mesh vertices that destabilize the discrete
//! pressure, and removes the resulting spurious pressure modes by a
//! jump-driven sting-function postprocessing step.
//!
//! Pipeline: [`mesh`] builds the triangulation and classifies its vertices,
//! [`stokes`] assembles and solves the saddle-point system, [`postprocess`]
//! computes the sting correction, and [`analysis`] runs manufactured-solution
//! convergence studies.

pub mod analysis;
pub mod elements;
pub mod error;
pub mod geom;
pub mod mesh;
pub mod postprocess;
pub mod sparse;
pub mod stokes;
pub mod vtk;

pub use error::{Error, Result};
pub use mesh::{SingularityReport, Triangulation, VertexClass, VertexStar};
pub use postprocess::{PostprocessScope, StingCorrection};
pub use stokes::{DiscreteSolution, DofMap, SaddleSystem};
