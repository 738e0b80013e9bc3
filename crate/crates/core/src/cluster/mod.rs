//! Seeds of Laurent polynomials, mutation and mutation classes.

mod enumerate;
mod json;
mod laurent;
mod seed;

pub use enumerate::{
    check_compatibility, detect_type, enumerate_class, ClassStatus, ClusterType, Compatibility, MutationClass,
    DEFAULT_CAP,
};
pub use json::{SeedDocument, SeedInfo, VertexJson};
pub use laurent::LaurentPoly;
pub use seed::{mutate_lambda, mutate_matrix, Seed};
