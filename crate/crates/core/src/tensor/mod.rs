//! An exact model of `L(λ)` inside `W = V^{⊗m1} ⊗ (Λ²V)^{⊗m2}`.
//!
//! `V = C^4` is written in the basis `ε1, ε2, ε2̄ = ε4, ε1̄ = −ε3`, in which
//! every lowering operator sends a basis letter to a basis letter with
//! coefficient `+1`.

pub mod index;
pub mod order;
pub mod rank;
pub mod relations;
pub mod vector;
pub mod verma_vectors;

pub use index::{tableau_of_index, u_of_tableau, Ambient, IndexKey, TensorIndex};
pub use order::{pair_order, tableau_order};
pub use rank::{independence_rank, IntegerEchelon, VermaMatrix};
pub use relations::relation_check;
pub use vector::{act, act_on_letter, ExactVector, Generator, RawTensor};
pub use verma_vectors::{
    certificate_json, check_triangular, check_vector, factorial_product, highest_weight_vector,
    map_verma_vectors, verma_vector, Budget, TriangularRecord,
};
