//! Sanity check of the Chevalley relations on the whole tensor space.

use num_bigint::BigInt;

use super::index::{Ambient, TensorIndex};
use super::vector::{act, ExactVector, Generator};
use crate::weight::HighestWeight;

use Generator::*;

/// `α_j(h_i)`: rows `h1, h2`, columns `α1, α2`.
const CARTAN: [[i64; 2]; 2] = [[2, -2], [-1, 2]];

fn bracket(x: Generator, y: Generator, v: &ExactVector) -> ExactVector {
    act(x, &act(y, v)).sub(&act(y, &act(x, v))).expect("same ambient")
}

/// `(x, y, rhs)`: `[x, y]` should equal `rhs`, a multiple of a generator,
/// or zero when `rhs` is `None`.
type Relation = (Generator, Generator, Option<(i64, Generator)>);

fn relations() -> Vec<Relation> {
    let mut out = vec![
        (E1, F1, Some((1, H1))),
        (E2, F2, Some((1, H2))),
        (E1, F2, None),
        (E2, F1, None),
        (H1, H2, None),
    ];
    for (i, h) in [H1, H2].into_iter().enumerate() {
        for (j, (e, f)) in [(E1, F1), (E2, F2)].into_iter().enumerate() {
            out.push((h, e, Some((CARTAN[i][j], e))));
            out.push((h, f, Some((-CARTAN[i][j], f))));
        }
    }
    out
}

/// Checks every defining commutator on every basis tensor of
/// `V^{⊗m1} ⊗ (Λ²V)^{⊗m2}`. Meant for small `λ`; the cost is linear in
/// `dim W`.
pub fn relation_check(hw: HighestWeight) -> bool {
    let ambient = Ambient::from(hw);
    let relations = relations();
    ambient.basis_keys().into_iter().all(|key| {
        let v = ExactVector::basis(&TensorIndex::from_key(key, ambient)).expect("basis key");
        relations.iter().all(|&(x, y, rhs)| {
            let expected = match rhs {
                None => ExactVector::zero(ambient),
                Some((k, g)) => act(g, &v).scale(&BigInt::from(k)),
            };
            bracket(x, y, &v) == expected
        })
    })
}
