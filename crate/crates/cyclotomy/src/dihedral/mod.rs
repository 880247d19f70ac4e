//! The dihedral Lie coalgebras of mu_N from generators and relations.

pub mod basis;
pub mod cobracket;
pub mod relations;
pub mod series_exp;
pub mod space;
pub mod tilde;
pub mod unramified;
pub mod wedge;

pub use basis::{arg_tuples, compositions, enumerate_generators, DihedralGenerator, GeneratorBasis};
pub use cobracket::{
    certify_lie_coalgebra, cobracket, cochain_complex, vp_contraction_of_cobracket,
    CobracketMatrix,
};
pub use relations::{relation_matrix, RelationFamily};
pub use series_exp::{
    compositions_with_zeros, extended_to_plain, series_term, LinForm, SeriesForm, TPolynomial,
};
pub use space::{
    build_space, serialize_space, space_dim, BasisDescriptor, DihedralSpace, PieceCache, Variant,
};
pub use tilde::{der_se_graded_dims, eta_word, orbit_basis, shuffle_relation_rows};
pub use unramified::{kernel_basis, unramified_check, unramified_depth1_dim, vp_and_unramified, vp_value};
pub use wedge::{
    leibniz_differential, sort_with_sign, AtomId, DeltaTable, PieceKey, WedgeBasis, WedgeSpace,
};
