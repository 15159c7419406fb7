//! Verma bases of the finite dimensional irreducible `sp(4)`-modules.
//!
//! The crate builds, for a highest weight `λ = m1·ω1 + m2·ω2`:
//!
//! * the Kashiwara-Nakashima tableaux of shape `(m1 + m2, m2)` ([`kn`]),
//! * the Verma exponent tuples and their bijection with those tableaux
//!   ([`verma`]),
//! * an exact model of `L(λ)` inside `V^{⊗m1} ⊗ (Λ²V)^{⊗m2}` in which every
//!   Verma vector is expanded with arbitrary-precision integer coefficients,
//!   together with a leading-term (triangularity) certificate and an exact
//!   rank computation ([`tensor`]),
//! * the Weyl dimension of `L(λ)` as an independent counting oracle
//!   ([`weyl`]).
//!
//! Everything is exact; no floating point is used anywhere.

pub mod entry;
pub mod error;
pub mod kn;
pub mod tableau;
pub mod tensor;
pub mod verma;
pub mod weight;
pub mod weyl;

pub use entry::{entry_compare, Entry};
pub use error::{Error, Result};
pub use kn::{enumerate_kn4, is_kn, is_kn_sp4, is_semistandard, tableau_weight};
pub use tableau::Tableau;
pub use tensor::{
    act, check_triangular, highest_weight_vector, independence_rank, relation_check,
    tableau_order, verma_vector, Ambient, Budget, ExactVector, Generator, TensorIndex,
};
pub use verma::{
    enumerate_tuples, is_valid_tuple, tableau_to_tuple, tuple_to_tableau, verma_weight,
};
pub use weight::{partition_of, HighestWeight, VermaTuple, WeightVec};
pub use weyl::weyl_dim;
