//! The subcategory `C_{v,w}`, its initial cluster-tilting module and mutation.

mod category;
mod mutation;
mod quiver;
mod tilting;

pub use category::{cogenerated_by, CategorySpec, Membership};
pub use mutation::{categorical_mutation, right_approximation, Approximation, CategoricalMutation};
pub use quiver::GabrielQuiver;
pub use tilting::{gabriel_arrows, initial_tilting, poisson_matrix, ClusterTiltingData, Dropped, Summand};
