//! Hilbert functions of top local cohomology, the a-invariant, and the
//! canonical-module descriptor of the invariant ring.
//!
//! Everything is represented through Hilbert-function windows over a range
//! of (negative) degrees; no module structure is computed. Graded duality
//! enters purely as degree negation: the dimension of the invariants of
//! top local cohomology in degree `-n - d` equals the number of good
//! orbits of degree-`d` monomials, for the sign character away from
//! characteristic two and for the trivial character in characteristic two.
//!
//! In characteristic two the invariant ring's own top local cohomology is
//! additionally shifted by `c`, the number of transpositions in the group;
//! these are precisely the transvections of a permutation action, and they
//! exist in no other characteristic. Both window computations below are
//! specific to permutation actions: for general modular linear groups,
//! taking duals need not commute with taking invariants, and identities of
//! this kind can fail.

use crate::character::CharacterTable;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::monomial::{good_orbit_counts, min_good_degree};
use crate::series::molien_series;

/// The characteristic of the ground field: zero or a prime.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FieldChar {
    p: u32,
}

impl FieldChar {
    pub fn new(p: u32) -> Result<Self> {
        if p == 0 || is_prime(p) {
            Ok(Self { p })
        } else {
            Err(Error::InvalidCharacteristic(p))
        }
    }

    pub fn zero() -> Self {
        Self { p: 0 }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn is_two(&self) -> bool {
        self.p == 2
    }
}

pub(crate) fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Dimension counts of a graded vector space over a contiguous degree
/// range.
///
/// Invariants:
///   1. `dims[k]` is the dimension in degree `lo + k`.
///   2. `hi = lo + dims.len() - 1`; the window is never empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedWindow {
    lo: i64,
    dims: Vec<u64>,
}

impl GradedWindow {
    pub fn new(lo: i64, dims: Vec<u64>) -> Self {
        assert!(!dims.is_empty(), "a graded window cannot be empty");
        Self { lo, dims }
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.dims.len() as i64 - 1
    }

    /// Dimensions from `lo` to `hi`.
    pub fn dims(&self) -> &[u64] {
        &self.dims
    }

    pub fn dim_at(&self, degree: i64) -> Option<u64> {
        if degree < self.lo || degree > self.hi() {
            return None;
        }
        Some(self.dims[(degree - self.lo) as usize])
    }

    /// The window of the same space with all degrees moved up by `t`, i.e.
    /// the new dimension in degree `j` is the old dimension in `j - t`.
    pub fn shifted(&self, t: i64) -> Self {
        Self {
            lo: self.lo + t,
            dims: self.dims.clone(),
        }
    }

    pub fn top_nonzero_degree(&self) -> Option<i64> {
        self.dims
            .iter()
            .rposition(|&d| d != 0)
            .map(|k| self.lo + k as i64)
    }
}

/// The sign character away from characteristic two; the trivial character
/// in characteristic two, where sign collapses.
pub(crate) fn effective_character(g: &PermGroup, char_k: FieldChar) -> CharacterTable {
    if char_k.is_two() {
        CharacterTable::trivial(g)
    } else {
        CharacterTable::sign(g)
    }
}

fn good_counts(g: &PermGroup, chi: &CharacterTable, depth: usize) -> Result<Vec<u64>> {
    Ok(good_orbit_counts(g, chi, depth)?
        .into_iter()
        .map(|c| c as u64)
        .collect())
}

fn window_from_counts(top: i64, counts: Vec<u64>) -> GradedWindow {
    // counts[d] is the dimension in degree top - d.
    let depth = counts.len() - 1;
    let dims: Vec<u64> = counts.into_iter().rev().collect();
    GradedWindow::new(top - depth as i64, dims)
}

/// Hilbert-function window of the group invariants of the top local
/// cohomology of the polynomial ring, over degrees `[-n - depth, -n]`.
pub fn hilb_top_cohomology_invariants(
    g: &PermGroup,
    char_k: FieldChar,
    depth: usize,
) -> Result<GradedWindow> {
    let chi = effective_character(g, char_k);
    let counts = good_counts(g, &chi, depth)?;
    Ok(window_from_counts(-(g.n() as i64), counts))
}

/// Hilbert-function window of the top local cohomology of the invariant
/// ring itself. Away from characteristic two this coincides with
/// [`hilb_top_cohomology_invariants`]; in characteristic two the window
/// sits `c` lower, over `[-(c + n) - depth, -(c + n)]`.
pub fn hilb_top_cohomology_of_invariant_ring(
    g: &PermGroup,
    char_k: FieldChar,
    depth: usize,
) -> Result<GradedWindow> {
    let chi = effective_character(g, char_k);
    let counts = good_counts(g, &chi, depth)?;
    let top = if char_k.is_two() {
        -((g.transposition_count() + g.n()) as i64)
    } else {
        -(g.n() as i64)
    };
    Ok(window_from_counts(top, counts))
}

/// The a-invariant of the invariant ring: the largest degree in which its
/// top local cohomology is nonzero.
///
/// In characteristic two this is `-(c + n)` with `c` the number of
/// transpositions. In every other characteristic it is `-(d + n)` where
/// `d` is the minimal degree of a monomial whose stabilizer lies in the
/// alternating group, and that value always also equals the degree of the
/// Hilbert series of the invariant ring; the two routes are computed
/// independently and compared on every call.
pub fn a_invariant(g: &PermGroup, char_k: FieldChar) -> Result<i64> {
    let n = g.n() as i64;
    if char_k.is_two() {
        return Ok(-(g.transposition_count() as i64 + n));
    }
    let sign = CharacterTable::sign(g);
    let by_good_degree = -(min_good_degree(g, &sign) as i64 + n);
    let trivial = CharacterTable::trivial(g);
    let by_series = molien_series(g, &trivial).degree()?;
    if by_series != by_good_degree {
        return Err(Error::InternalCheck(format!(
            "a-invariant routes disagree: series degree {by_series}, \
             minimal-good-degree route {by_good_degree}"
        )));
    }
    Ok(by_good_degree)
}

/// Which module the canonical module is a shift of.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CanonicalBase {
    /// The invariant ring itself (characteristic two).
    InvariantRing,
    /// The module of sign-semi-invariants (every other characteristic).
    SignSemiInvariants,
}

impl CanonicalBase {
    pub fn as_str(&self) -> &'static str {
        match self {
            CanonicalBase::InvariantRing => "invariant-ring",
            CanonicalBase::SignSemiInvariants => "sign-semi-invariants",
        }
    }
}

/// `base` shifted by `shift` describes the canonical module of the
/// invariant ring.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CanonicalDescriptor {
    pub base: CanonicalBase,
    pub shift: i64,
}

/// Canonical module of the invariant ring: the invariant ring shifted by
/// `-(c + n)` in characteristic two, the sign-semi-invariants shifted by
/// `-n` otherwise.
pub fn canonical_descriptor(g: &PermGroup, char_k: FieldChar) -> CanonicalDescriptor {
    if char_k.is_two() {
        CanonicalDescriptor {
            base: CanonicalBase::InvariantRing,
            shift: -((g.transposition_count() + g.n()) as i64),
        }
    } else {
        CanonicalDescriptor {
            base: CanonicalBase::SignSemiInvariants,
            shift: -(g.n() as i64),
        }
    }
}
