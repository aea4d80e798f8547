//! Exact univariate series algebra and Molien-type sums.
//!
//! The Hilbert series of the invariants (or of the `chi`-semi-invariants)
//! of a permutation group is the group average of `chi(sigma) / det(1 -
//! sigma t)`, and for a permutation `det(1 - sigma t)` factors as the
//! product of `1 - t^l` over the cycle lengths `l`. Everything here is
//! carried out over arbitrary-precision rationals; there is no floating
//! point anywhere in the crate.

mod poly;
mod ratfunc;

pub use poly::Poly;
pub use ratfunc::RationalFunction;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::character::CharacterTable;
use crate::group::PermGroup;
use crate::perm::CycleType;

/// `det(1 - sigma t)` for any permutation of the given cycle type:
/// the expanded product of `1 - t^l` over the cycle lengths.
pub fn denom_factor_of(ct: &CycleType) -> Poly {
    let mut out = Poly::one();
    for &len in ct.lengths() {
        out = &out * &Poly::one_minus_t_pow(len);
    }
    out
}

/// The group average `(1/|G|) sum_sigma chi(sigma) / det(1 - sigma t)` as a
/// reduced rational function.
///
/// With the trivial character this is the Hilbert series of the invariant
/// ring; with the sign character, of the sign-semi-invariants. Elements
/// sharing a cycle type share a denominator, so their character values are
/// accumulated first and the remaining terms are folded pairwise with a
/// reduction after each addition, keeping intermediate degrees near
/// `n * #cycle types` instead of `n * |G|`.
pub fn molien_series(g: &PermGroup, chi: &CharacterTable) -> RationalFunction {
    debug_assert_eq!(chi.len(), g.order());
    let mut weights: BTreeMap<CycleType, i64> = BTreeMap::new();
    for (k, sigma) in g.elements().iter().enumerate() {
        *weights.entry(sigma.cycle_type()).or_insert(0) += i64::from(chi.value_at(k));
    }

    let mut sum = RationalFunction::zero();
    for (ct, weight) in &weights {
        if *weight == 0 {
            continue;
        }
        let numerator = Poly::constant(BigRational::from_integer(BigInt::from(*weight)));
        let term = RationalFunction::new(numerator, denom_factor_of(ct))
            .expect("cycle-type denominators are nonzero");
        sum = sum.add(&term);
    }
    sum.scaled(&BigRational::new(
        BigInt::from(1),
        BigInt::from(g.order() as i64),
    ))
}
