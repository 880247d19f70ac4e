//! The rank-m modular complexes (m <= 3), their coinvariants with
//! symmetric-power and level coefficients, and the comparison with the
//! dihedral side.

pub mod checks;
pub mod coinv;
pub mod level2;
pub mod mat;
pub mod operators;
pub mod symbols;
pub mod symrep;

pub use checks::shuffle_vs_dihedral;
pub use coinv::{
    coinvariant_complex, coinvariant_complex_on, coinvariant_space, collapse_operator,
    complex_report, operator_image_space, CoefficientModule, CoinvariantComplex, SymPower, Twist,
};
pub use level2::{
    dihedral_iso_check, level_two_complex, DihedralIsoReport, LevelModule, LevelTwoComplex,
};
pub use mat::IntMat;
pub use operators::{
    dihedral_operators, differential_terms, relation_operators, RelationOperator,
};
pub use symbols::{affine_to_extended, extended_to_affine, ExtendedBasisSymbol, RigidGenerator};
pub use symrep::{monomials, sym_dim, sym_power_rep};
