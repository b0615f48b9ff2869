//! Exact computations with Lie-Yamaguti algebras carrying a modified
//! λ-differential operator: identity checks, representations, the cochain
//! complex and its cohomology, truncated formal deformations and abelian
//! extensions.
//!
//! All arithmetic is over [`Rational`] (arbitrary precision); nothing in the
//! crate touches floating point.

pub mod algebra;
pub mod catalog;
pub mod cochain;
pub mod cohomology;
pub mod deformation;
pub mod error;
pub mod extension;
pub mod io;
pub mod linalg;
pub mod report;
pub mod representation;
pub mod tensor;

pub use algebra::{
    enumerate_modified_operators, lya_from_leibniz, lya_from_lie, shift_to_derivation,
    verify_derivation, verify_homomorphism, verify_lya, verify_modified_operator, LyAlgebra,
    MdlyAlgebra, ModifiedOperator, OperatorSpace,
};
pub use cochain::{Complex, LyCochain, MdlyCochain, PhiConvention};
pub use cohomology::{cohomologous, cohomology_dim, is_cocycle, CohomologyReport, ComplexKind};
pub use deformation::{
    apply_equivalence_order1, infinitesimal_cocycle_check, rigidity_report, verify_deformation,
    Rigidity, TruncatedDeformation,
};
pub use error::{Error, Result};
pub use extension::{
    build_extension, classify, cocycle_from_section, eta_omega, AbelianExtension, Classification,
    ExtensionCocycle,
};
pub use io::Document;
pub use linalg::{kernel_basis, rank, solve, RatMatrix, Rational, Solution};
pub use report::{Report, Violation};
pub use representation::{
    adjoint_representation, semidirect_product, verify_representation, Representation,
};
pub use tensor::Tensor;
