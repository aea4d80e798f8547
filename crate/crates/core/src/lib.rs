//! Exact homological invariants of invariant rings of permutation groups.
//!
//! A subgroup of the symmetric group acts on a polynomial ring by permuting
//! the variables. The invariant subring is graded, and its headline
//! homological data can be computed exactly from combinatorics on monomial
//! orbits together with Molien-type series:
//!
//! - Hilbert series of the invariants and of the sign-semi-invariants,
//!   which are independent of the ground field;
//! - Hilbert-function windows of top local cohomology, both of the group
//!   invariants of the polynomial ring's cohomology and of the invariant
//!   ring's own;
//! - the a-invariant and a descriptor of the canonical module;
//! - the quasi-Gorenstein decision and whether the inclusion of the
//!   invariant ring splits, characteristic by characteristic.
//!
//! All arithmetic is exact. Wherever a value admits two independent
//! routes, both are computed and compared on every call, and the [`oracle`]
//! module recomputes orbit counts by union-find and by finite-field linear
//! algebra so the rest of the crate can be checked against it.
//!
//! The monomial sweeps are data-parallel; the `parallel` feature (enabled
//! by default) runs them on rayon, and disabling it falls back to the
//! sequential implementations with identical output.
//!
//! ```
//! use perminv_core::{build_report, generate_group, parse_cycles, FieldChar};
//!
//! let gens = vec![parse_cycles("(1 2 3 4)", 4)?];
//! let group = generate_group(&gens, 4)?;
//! let chars = [FieldChar::zero(), FieldChar::new(2)?];
//! let report = build_report(&group, &chars, 10)?;
//!
//! // In characteristic two this ring is quasi-Gorenstein with a-invariant
//! // -(c + n), but the invariant-ring inclusion does not split.
//! assert_eq!(report.per_char[&2].a_invariant, -4);
//! assert!(report.per_char[&2].quasi_gorenstein);
//! assert!(!report.per_char[&2].splits);
//! # Ok::<(), perminv_core::Error>(())
//! ```

pub mod character;
pub mod cohomology;
pub mod decisions;
pub mod error;
pub mod group;
pub mod monomial;
pub mod oracle;
pub mod perm;
pub mod series;

mod union_find;

pub use character::{characters_equal_on_group, chi_of, CharacterTable};
pub use cohomology::{
    a_invariant, canonical_descriptor, hilb_top_cohomology_invariants,
    hilb_top_cohomology_of_invariant_ring, CanonicalBase, CanonicalDescriptor, FieldChar,
    GradedWindow,
};
pub use decisions::{
    build_report, is_invariant_ring_polynomial_for_n_subgroup, quasi_gorenstein,
    shank_wehlau_verdict, splits, transvection_count, young_product_series, CharReport,
    InvariantReport, ShankWehlauVerdict,
};
pub use error::{Error, Result};
pub use group::{generate_group, generate_group_capped, PermGroup, DEFAULT_ORDER_CAP};
pub use monomial::{
    count_good_orbits, enumerate_monomials, enumerate_monomials_capped, good_orbit_counts,
    good_orbit_counts_seq, is_chi_good, min_good_degree, min_good_degree_seq, monomial_count,
    monomials_of_degree, orbit_decompose, stabilizer_of, Monomial, OrbitRecord,
    DEFAULT_MONOMIAL_CAP,
};
#[cfg(feature = "parallel")]
pub use monomial::{good_orbit_counts_par, min_good_degree_par};
pub use oracle::{
    brute_dim_by_orbits, fixed_space_dim_mod_p, fixed_space_dim_mod_p_exhaustive, ModularMatrix,
    ORACLE_MONOMIAL_CAP,
};
pub use perm::{parse_cycles, CycleType, Permutation, MAX_ARITY};
pub use series::{denom_factor_of, molien_series, Poly, RationalFunction};
