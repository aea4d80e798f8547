//! `{±1}`-valued characters of a permutation group, stored densely over the
//! group's element list.
//!
//! Besides the trivial character and the usual sign, this module computes
//! the character by which the product of the linear forms `x_i - x_j`, one
//! factor per transposition `(i j)` of the group (normalized with `i < j`),
//! transforms. That product is never materialized as a polynomial: applying
//! `sigma` permutes its factors and flips the sign of each inverted pair,
//! so the character value is `(-1)^s` with `s` the number of pairs
//! `(i, j)` in the transposition set with `sigma(i) > sigma(j)`.

use crate::group::PermGroup;
use crate::perm::Permutation;

/// A `{±1}`-valued character, positionally aligned with the element list of
/// the group it was built from.
///
/// Invariants:
///   1. `values[k]` corresponds to `group.elements()[k]` and is `+1` or `-1`.
///   2. The identity has value `+1` and the assignment is multiplicative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    values: Vec<i8>,
}

impl CharacterTable {
    pub fn trivial(group: &PermGroup) -> Self {
        Self {
            values: vec![1; group.order()],
        }
    }

    pub fn sign(group: &PermGroup) -> Self {
        Self {
            values: group.elements().iter().map(|p| p.sign()).collect(),
        }
    }

    /// The character of the transposition-hyperplane product described in
    /// the module docs. Trivial when the group has no transpositions.
    pub fn chi(group: &PermGroup) -> Self {
        let pairs = group.transposition_pairs();
        Self {
            values: group.elements().iter().map(|p| chi_of(p, pairs)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Value at the element with position `k` in the group's element list.
    pub fn value_at(&self, k: usize) -> i8 {
        self.values[k]
    }

    /// Value at a specific element of `group`.
    pub fn value_of(&self, group: &PermGroup, p: &Permutation) -> Option<i8> {
        debug_assert_eq!(self.len(), group.order());
        group.position_of(p).map(|k| self.values[k])
    }

    /// True when every value is `+1`, i.e. the character is realizable over
    /// any field, including characteristic two.
    pub fn is_trivial_valued(&self) -> bool {
        self.values.iter().all(|&v| v == 1)
    }
}

/// `(-1)^s` where `s` counts the transposition pairs `(i, j)`, `i < j`,
/// with `sigma(i) > sigma(j)`.
pub fn chi_of(sigma: &Permutation, transposition_pairs: &[(usize, usize)]) -> i8 {
    let inversions = transposition_pairs
        .iter()
        .filter(|&&(i, j)| sigma.image_of(i) > sigma.image_of(j))
        .count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// True iff the two tables agree on every element of `g`.
pub fn characters_equal_on_group(g: &PermGroup, c1: &CharacterTable, c2: &CharacterTable) -> bool {
    debug_assert_eq!(c1.len(), g.order());
    debug_assert_eq!(c2.len(), g.order());
    c1.values == c2.values
}
