pub mod commutant;
pub mod dual;
pub mod extension;
pub mod involution;

pub use commutant::{commutant, intertwiners, CommutantData, DivisionType};
pub use extension::{extend_involution, extend_on_rep, solve_intertwiner, ExtensionWitness, Obstruction, OracleVerdict, Verdict};
pub use dual::{cartan_dual, check_radical_rigidity, double_dual, CartanDual};
pub use involution::InvolutionData;
