//! Exact integer linear algebra: matrices, Smith normal form, cokernels,
//! characteristic polynomials and finite-order detection.

mod group;
mod matrix;
mod order;
mod poly;
mod snf;

pub use group::AbelianGroup;
pub use matrix::IntMatrix;
pub use order::{default_order_cap, euler_phi, matrix_order, MatrixOrder};
pub use poly::{char_poly, IntPolynomial};
pub use snf::{cokernel, smith_normal_form, SmithForm};
