pub mod algebra;
pub mod gauss;
pub mod linsolve;
pub mod matrix;
pub mod rational;
pub mod signature;

pub use algebra::{algebra_multiply, AlgebraElement, AlgebraKind};
pub use gauss::GaussRational;
pub use linsolve::{solve_linear, LinearSystem, Solution, SparseRow};
pub use matrix::{CMatrix, QMatrix};
pub use rational::{q, qf, Rational};
pub use signature::{symmetric_signature, SignatureTriple};
