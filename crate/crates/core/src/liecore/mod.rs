pub mod algebra;
pub mod factors;
pub mod pair;

pub use algebra::{check_lie_algebra, lie_algebra_from_matrices, LieAlgebra, LieCheck, MatrixSpan};
pub use factors::{decompose_factors, is_principal, IrreducibleFactorSplit};
pub use pair::{build_nilpotent_pair, heisenberg_algebra, BracketTarget, NilpotentPairData, PairCheck};
