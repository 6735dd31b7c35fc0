//! Symbolic computation in quantum matrix algebras and their semiclassical
//! limits.
//!
//! * [`qcoeff`]: the ground ring `Q[q, q^-1]`;
//! * [`qmatrix`]: `O_q(M_n)` in PBW normal form, with coproduct and counit;
//! * [`classical`]: the commutative ring `O(M_n)`;
//! * [`linalg`]: exact elimination over `Q` and `Q[q, q^-1]`;
//! * [`qminors`]: quantum minors and the quantum determinant;
//! * [`homspace`]: quantum Grassmannians, flags and their big cells;
//! * [`semiclassical`]: Poisson brackets at `q = 1`;
//! * [`liebialg`]: finite-dimensional Lie bialgebras;
//! * [`qdp`]: the quantum duality principle in low degree.

pub mod classical;
pub mod error;
pub mod homspace;
pub mod liebialg;
pub mod linalg;
pub mod qcoeff;
pub mod qdp;
pub mod qmatrix;
pub mod qminors;
pub mod semiclassical;

pub use error::{Error, Result};
pub use qcoeff::{rat, ratio, LaurentPoly, Rational};
pub use qmatrix::{normal_form, AlgebraContext, BlockShape, Monomial, QElement, TensorElement};
