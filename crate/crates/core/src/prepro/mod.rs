//! Finite-dimensional modules over the preprojective algebra of a Dynkin
//! diagram, with exact rational arithmetic.

mod algebra;
mod decompose;
mod functors;
mod hom;
mod json;
mod module;
mod quiver;

pub use algebra::Preprojective;
pub use decompose::{count_summands, decompose, indecomposable_pieces, is_indecomposable, minimal_polynomial, rational_roots};
pub use functors::{
    e_word, e_word_sub, edag_word, edag_word_kernel, functor_e, functor_edag, head_at, head_step, soc_at,
    soc_sequence, socle_step,
};
pub use hom::{
    cartan_form, combine, compose, embeds, ext1_dim, hom_basis, hom_dim, image, indecomposables_isomorphic,
    is_injective, is_invertible, is_isomorphic, is_surjective, iso_by_decomposition, kernel, trace_submodule, Morphism,
};
pub use json::{ArrowJson, ModuleJson};
pub use module::{LambdaModule, Submodule};
pub use quiver::{Arrow, DoubleQuiver};
