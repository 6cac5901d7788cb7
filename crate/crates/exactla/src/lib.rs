//! Exact linear algebra over ℚ and GF(p): kernels, images, quotients with canonical sections,
//! equalizers, coequalizers, matrix-unknown linear systems and tensor-factor plumbing.

mod error;
mod matrix;
mod scalar;
mod sparse;
mod subspace;
mod system;
pub mod tensor;

pub use error::LinAlgError;
pub use matrix::Matrix;
pub use scalar::{Field, Scalar, MAX_PRIME};
pub use sparse::{Accumulator, Echelon, SparseVec};
pub use subspace::{coequalizer, equalizer, kernel, quotient, Quotient, Subspace};
pub use system::{MatrixSystem, Term};
pub use tensor::{build_map, permutation_matrix, ColumnMap, Tensor};
