//! The yes/no verdicts about the invariant ring, assembled into a full
//! report: quasi-Gorenstein, splitting of the invariant-ring inclusion,
//! transvection count, polynomiality of the transposition-subgroup
//! invariants, and the p-group splitting criterion.
//!
//! Verdicts with two independent routes always run both and treat
//! disagreement as a hard error rather than a warning; agreement is a
//! theorem, so a mismatch can only be a bug.

use std::collections::BTreeMap;

use crate::character::{characters_equal_on_group, CharacterTable};
use crate::cohomology::{
    a_invariant, canonical_descriptor, hilb_top_cohomology_invariants,
    hilb_top_cohomology_of_invariant_ring, is_prime, CanonicalDescriptor, FieldChar, GradedWindow,
};
use crate::error::{Error, Result};
use crate::group::{generate_group_capped, PermGroup};
use crate::series::{molien_series, Poly, RationalFunction};

/// Whether the invariant ring is quasi-Gorenstein, i.e. its canonical
/// module is a shifted copy of itself.
///
/// Always true in characteristic two. Otherwise decided two independent
/// ways and cross-checked: the sign character must agree with the
/// transposition-product character on the whole group, and the a-invariant
/// must equal `-(c + n)`.
pub fn quasi_gorenstein(g: &PermGroup, char_k: FieldChar) -> Result<bool> {
    if char_k.is_two() {
        return Ok(true);
    }
    let by_characters =
        characters_equal_on_group(g, &CharacterTable::sign(g), &CharacterTable::chi(g));
    let a = a_invariant(g, char_k)?;
    let by_degree = a == -((g.transposition_count() + g.n()) as i64);
    if by_characters != by_degree {
        return Err(Error::InternalCheck(format!(
            "quasi-Gorenstein routes disagree: character test {by_characters}, \
             degree test {by_degree} (a = {a})"
        )));
    }
    Ok(by_characters)
}

/// Whether the inclusion of the invariant ring into the polynomial ring
/// splits: the characteristic must not divide `|G/N|`.
pub fn splits(g: &PermGroup, char_k: FieldChar) -> bool {
    char_k.p() == 0 || !g.index_g_n().is_multiple_of(char_k.p() as usize)
}

/// Transvections of a permutation action are exactly the transpositions in
/// characteristic two, and absent in every other characteristic.
pub fn transvection_count(g: &PermGroup, char_k: FieldChar) -> usize {
    if char_k.is_two() {
        g.transposition_count()
    } else {
        0
    }
}

/// Hilbert series of a product of symmetric groups acting on the given
/// blocks: the product over blocks `A` of `1 / ((1-t)(1-t^2)...(1-t^|A|))`.
pub fn young_product_series(partition: &[Vec<usize>]) -> RationalFunction {
    let mut den = Poly::one();
    for block in partition {
        for i in 1..=block.len() {
            den = &den * &Poly::one_minus_t_pow(i);
        }
    }
    RationalFunction::new(Poly::one(), den).expect("staircase denominators are nonzero")
}

/// The invariant ring of `N`, the subgroup generated by the transpositions
/// of `g`, is always a polynomial ring. Returns `(true, Hilb(S^N))` after
/// asserting that the closed product formula over the partition blocks
/// agrees with the Molien sum over `N` itself.
pub fn is_invariant_ring_polynomial_for_n_subgroup(
    g: &PermGroup,
) -> Result<(bool, RationalFunction)> {
    let n_group = generate_group_capped(g.transpositions(), g.n(), g.order().max(1))?;
    let formula = young_product_series(g.partition());
    let averaged = molien_series(&n_group, &CharacterTable::trivial(&n_group));
    if formula != averaged {
        return Err(Error::InternalCheck(
            "Hilbert series of the transposition-subgroup invariants does not match \
             the block product formula"
                .into(),
        ));
    }
    Ok((true, formula))
}

/// The three facts feeding the p-group splitting criterion: if the group
/// is a p-group in characteristic p and the inclusion splits, the
/// invariant ring must be polynomial (equivalently, the group is generated
/// by its transpositions).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ShankWehlauVerdict {
    pub is_p_group: bool,
    pub splits: bool,
    pub polynomial: bool,
}

pub fn shank_wehlau_verdict(g: &PermGroup, p: u32) -> ShankWehlauVerdict {
    assert!(is_prime(p), "p must be prime");
    let mut order = g.order();
    while order.is_multiple_of(p as usize) {
        order /= p as usize;
    }
    ShankWehlauVerdict {
        is_p_group: order == 1,
        splits: splits(g, FieldChar::new(p).expect("validated prime")),
        polynomial: g.order() == g.n_subgroup().len(),
    }
}

/// Per-characteristic verdicts and cohomology windows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharReport {
    pub a_invariant: i64,
    pub quasi_gorenstein: bool,
    pub splits: bool,
    pub canonical: CanonicalDescriptor,
    /// Window of the group invariants of the polynomial ring's top local
    /// cohomology.
    pub top_cohomology_invariants: GradedWindow,
    /// Window of the invariant ring's own top local cohomology.
    pub invariant_ring_cohomology: GradedWindow,
}

/// The full verdict bundle for one group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub n: usize,
    pub order: usize,
    pub transposition_count: usize,
    pub partition: Vec<Vec<usize>>,
    pub index_g_n: usize,
    pub generated_by_transpositions: bool,
    /// True exactly when the inclusion splits in every characteristic,
    /// i.e. `|G/N| = 1`.
    pub uniformly_split: bool,
    pub hilb_invariants: RationalFunction,
    pub hilb_sign_semiinvariants: RationalFunction,
    pub depth: usize,
    pub per_char: BTreeMap<u32, CharReport>,
}

/// Runs every decision for each requested characteristic (duplicates are
/// collapsed) with cohomology windows of the given depth.
pub fn build_report(g: &PermGroup, chars: &[FieldChar], depth: usize) -> Result<InvariantReport> {
    let trivial = CharacterTable::trivial(g);
    let sign = CharacterTable::sign(g);
    let mut per_char = BTreeMap::new();
    for &char_k in chars {
        if per_char.contains_key(&char_k.p()) {
            continue;
        }
        let report = CharReport {
            a_invariant: a_invariant(g, char_k)?,
            quasi_gorenstein: quasi_gorenstein(g, char_k)?,
            splits: splits(g, char_k),
            canonical: canonical_descriptor(g, char_k),
            top_cohomology_invariants: hilb_top_cohomology_invariants(g, char_k, depth)?,
            invariant_ring_cohomology: hilb_top_cohomology_of_invariant_ring(g, char_k, depth)?,
        };
        per_char.insert(char_k.p(), report);
    }
    Ok(InvariantReport {
        n: g.n(),
        order: g.order(),
        transposition_count: g.transposition_count(),
        partition: g.partition().to_vec(),
        index_g_n: g.index_g_n(),
        generated_by_transpositions: g.is_generated_by_transpositions(),
        uniformly_split: g.is_generated_by_transpositions(),
        hilb_invariants: molien_series(g, &trivial),
        hilb_sign_semiinvariants: molien_series(g, &sign),
        depth,
        per_char,
    })
}
