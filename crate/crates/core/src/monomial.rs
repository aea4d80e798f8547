//! Degree slices of the monomial basis, the permutation action on them,
//! orbit decomposition, and chi-goodness.
//!
//! An orbit is "good" for a character when the stabilizer of any of its
//! members lies in the kernel; good orbits index a basis of the
//! semi-invariants of that degree, so counting them computes Hilbert
//! function values without any linear algebra.
//!
//! The decomposition of a single degree slice is a sequential transversal
//! sweep; it touches each orbit exactly once, which is already the cheap
//! algorithm. The data-parallel axes are one level up, where the work is
//! independent: sweeps over a range of degrees ([`good_orbit_counts`]) and
//! the per-monomial goodness scan inside [`min_good_degree`]. With the
//! `parallel` feature (on by default) the `_par` variants run on rayon and
//! the undecorated names dispatch to them; the `_seq` variants are always
//! available and produce identical output.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::character::CharacterTable;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// Default bound on how many monomials a single degree slice may contain.
pub const DEFAULT_MONOMIAL_CAP: usize = 5_000_000;

/// A monomial in `n` variables, stored as its exponent vector.
///
/// The group acts by moving the exponent at position `i` to position
/// `sigma(i)`, matching the variable action `x_i -> x_{sigma(i)}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self { exponents }
    }

    pub fn arity(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self) -> usize {
        self.exponents.iter().map(|&e| e as usize).sum()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn permuted(&self, sigma: &Permutation) -> Monomial {
        let mut out = vec![0u32; self.exponents.len()];
        self.permute_into(sigma, &mut out);
        Monomial { exponents: out }
    }

    /// Allocation-free variant of [`Monomial::permuted`] for hot loops.
    fn permute_into(&self, sigma: &Permutation, out: &mut [u32]) {
        debug_assert_eq!(self.arity(), sigma.n());
        for (i, &e) in self.exponents.iter().enumerate() {
            out[sigma.image_of(i + 1) - 1] = e;
        }
    }
}

/// One orbit of the group action on a degree slice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitRecord {
    /// Lexicographically greatest exponent vector in the orbit.
    pub representative: Monomial,
    pub size: usize,
    /// Whether the stabilizer of the orbit lies in the kernel of the query
    /// character.
    pub good: bool,
}

/// Iterator over all exponent vectors of total degree `d` in `n`
/// variables, in decreasing lexicographic order starting at `(d, 0, .., 0)`.
pub struct MonomialIter {
    next: Option<Vec<u32>>,
}

impl Iterator for MonomialIter {
    type Item = Monomial;

    fn next(&mut self) -> Option<Monomial> {
        let cur = self.next.take()?;
        self.next = successor(&cur);
        Some(Monomial::new(cur))
    }
}

fn successor(v: &[u32]) -> Option<Vec<u32>> {
    let n = v.len();
    if n == 1 {
        return None;
    }
    // Entries strictly between the pivot and the last position are zero,
    // so the tail sum is just the last entry.
    let tail = v[n - 1];
    let pivot = (0..n - 1).rev().find(|&i| v[i] > 0)?;
    let mut next = v.to_vec();
    next[pivot] -= 1;
    next[pivot + 1] = tail + 1;
    for slot in next.iter_mut().take(n).skip(pivot + 2) {
        *slot = 0;
    }
    Some(next)
}

/// Lazily yields the degree-`d` monomials in `n` variables; constant
/// memory, no cap.
pub fn monomials_of_degree(n: usize, d: usize) -> MonomialIter {
    assert!(n >= 1, "arity must be at least 1");
    let mut start = vec![0u32; n];
    start[0] = d as u32;
    MonomialIter { next: Some(start) }
}

/// `C(d + n - 1, n - 1)`, saturating at `u128::MAX`.
pub fn monomial_count(n: usize, d: usize) -> u128 {
    let mut acc: u128 = 1;
    for i in 1..n {
        acc = match acc.checked_mul((d + i) as u128) {
            Some(v) => v / i as u128,
            None => return u128::MAX,
        };
    }
    acc
}

/// All degree-`d` monomials in decreasing lexicographic order, guarded by
/// the default cap.
pub fn enumerate_monomials(n: usize, d: usize) -> Result<Vec<Monomial>> {
    enumerate_monomials_capped(n, d, DEFAULT_MONOMIAL_CAP)
}

pub fn enumerate_monomials_capped(n: usize, d: usize, cap: usize) -> Result<Vec<Monomial>> {
    assert!(n >= 1, "arity must be at least 1");
    let count = monomial_count(n, d);
    if count > cap as u128 {
        return Err(Error::MonomialCapExceeded { count, cap });
    }
    Ok(monomials_of_degree(n, d).collect())
}

/// `{ sigma in G : sigma . m = m }`.
pub fn stabilizer_of(m: &Monomial, g: &PermGroup) -> Vec<Permutation> {
    assert_eq!(m.arity(), g.n(), "arity mismatch");
    g.elements()
        .iter()
        .filter(|sigma| &m.permuted(sigma) == m)
        .cloned()
        .collect()
}

/// True iff every stabilizer element of `m` has character value `+1`.
pub fn is_chi_good(m: &Monomial, g: &PermGroup, chi: &CharacterTable) -> bool {
    let mut scratch = vec![0u32; m.arity()];
    is_chi_good_with(m, g, chi, &mut scratch)
}

fn is_chi_good_with(
    m: &Monomial,
    g: &PermGroup,
    chi: &CharacterTable,
    scratch: &mut [u32],
) -> bool {
    assert_eq!(m.arity(), g.n(), "arity mismatch");
    debug_assert_eq!(chi.len(), g.order());
    for (k, sigma) in g.elements().iter().enumerate() {
        if chi.value_at(k) == -1 {
            m.permute_into(sigma, scratch);
            if scratch == m.exponents.as_slice() {
                return false;
            }
        }
    }
    true
}

/// Index of `target` in a slice sorted in decreasing order.
fn index_of(monomials: &[Monomial], target: &[u32]) -> usize {
    monomials
        .binary_search_by(|probe| target.cmp(&probe.exponents))
        .expect("orbit member stays within the degree slice")
}

/// Decomposes the degree-`d` slice into orbits by a transversal sweep,
/// flagging each orbit's goodness for `chi`: walk the slice in decreasing
/// order and expand each unvisited monomial into its full orbit, so the
/// first encounter of an orbit is its lexicographically greatest member.
/// Records come out sorted by decreasing representative.
pub fn orbit_decompose(g: &PermGroup, d: usize, chi: &CharacterTable) -> Result<Vec<OrbitRecord>> {
    let monomials = enumerate_monomials(g.n(), d)?;
    let mut visited = vec![false; monomials.len()];
    let mut records = Vec::new();
    let mut scratch = vec![0u32; g.n()];
    for start in 0..monomials.len() {
        if visited[start] {
            continue;
        }
        let representative = monomials[start].clone();
        let mut size = 0;
        for sigma in g.elements() {
            representative.permute_into(sigma, &mut scratch);
            let idx = index_of(&monomials, &scratch);
            if !visited[idx] {
                visited[idx] = true;
                size += 1;
            }
        }
        let good = is_chi_good(&representative, g, chi);
        records.push(OrbitRecord {
            representative,
            size,
            good,
        });
    }
    Ok(records)
}

/// Number of chi-good orbits in degree `d`; this is the dimension of the
/// degree-`d` semi-invariants over any field where the character is
/// realizable.
pub fn count_good_orbits(g: &PermGroup, chi: &CharacterTable, d: usize) -> Result<usize> {
    Ok(orbit_decompose(g, d, chi)?
        .iter()
        .filter(|r| r.good)
        .count())
}

/// Good-orbit counts for every degree `0..=depth`. Degrees are
/// independent, so this is the main data-parallel sweep.
pub fn good_orbit_counts(g: &PermGroup, chi: &CharacterTable, depth: usize) -> Result<Vec<usize>> {
    #[cfg(feature = "parallel")]
    {
        good_orbit_counts_par(g, chi, depth)
    }
    #[cfg(not(feature = "parallel"))]
    {
        good_orbit_counts_seq(g, chi, depth)
    }
}

pub fn good_orbit_counts_seq(
    g: &PermGroup,
    chi: &CharacterTable,
    depth: usize,
) -> Result<Vec<usize>> {
    (0..=depth).map(|d| count_good_orbits(g, chi, d)).collect()
}

#[cfg(feature = "parallel")]
pub fn good_orbit_counts_par(
    g: &PermGroup,
    chi: &CharacterTable,
    depth: usize,
) -> Result<Vec<usize>> {
    (0..=depth)
        .into_par_iter()
        .map(|d| count_good_orbits(g, chi, d))
        .collect()
}

/// Smallest degree with a chi-good orbit.
///
/// The staircase monomial with exponents `(0, 1, .., n - 1)` has trivial
/// stabilizer, so the scan terminates by degree `n (n - 1) / 2`. The slice
/// is streamed, not materialized, so no cap applies; the parallel variant
/// fans the per-monomial stabilizer scans out over rayon.
pub fn min_good_degree(g: &PermGroup, chi: &CharacterTable) -> usize {
    #[cfg(feature = "parallel")]
    {
        min_good_degree_par(g, chi)
    }
    #[cfg(not(feature = "parallel"))]
    {
        min_good_degree_seq(g, chi)
    }
}

pub fn min_good_degree_seq(g: &PermGroup, chi: &CharacterTable) -> usize {
    let bound = g.n() * (g.n() - 1) / 2;
    let mut scratch = vec![0u32; g.n()];
    for d in 0..=bound {
        if monomials_of_degree(g.n(), d).any(|m| is_chi_good_with(&m, g, chi, &mut scratch)) {
            return d;
        }
    }
    unreachable!("the staircase monomial is good for every character");
}

#[cfg(feature = "parallel")]
pub fn min_good_degree_par(g: &PermGroup, chi: &CharacterTable) -> usize {
    // Small slices are not worth a fork-join barrier; stream larger ones
    // in bounded chunks so rayon can split cheaply while memory stays
    // flat.
    const PAR_THRESHOLD: u128 = 4 * 1024;
    const SCAN_CHUNK: usize = 64 * 1024;
    let bound = g.n() * (g.n() - 1) / 2;
    let mut scratch = vec![0u32; g.n()];
    for d in 0..=bound {
        if monomial_count(g.n(), d) < PAR_THRESHOLD {
            if monomials_of_degree(g.n(), d).any(|m| is_chi_good_with(&m, g, chi, &mut scratch)) {
                return d;
            }
            continue;
        }
        let mut stream = monomials_of_degree(g.n(), d);
        loop {
            let chunk: Vec<Monomial> = stream.by_ref().take(SCAN_CHUNK).collect();
            if chunk.is_empty() {
                break;
            }
            // Coarse splits with one scratch buffer per task; the
            // per-monomial scan is far cheaper than item-level scheduling.
            let found = chunk
                .par_iter()
                .with_min_len(512)
                .map_init(
                    || vec![0u32; g.n()],
                    |scratch, m| is_chi_good_with(m, g, chi, scratch),
                )
                .find_any(|&good| good)
                .is_some();
            if found {
                return d;
            }
        }
    }
    unreachable!("the staircase monomial is good for every character");
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::generate_group;
    use crate::perm::parse_cycles;

    fn group(gens: &[&str], n: usize) -> PermGroup {
        let gens: Vec<Permutation> = gens.iter().map(|t| parse_cycles(t, n).unwrap()).collect();
        generate_group(&gens, n).unwrap()
    }

    fn m(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    #[test]
    fn enumeration_is_decreasing_lex() {
        let ms = enumerate_monomials(2, 2).unwrap();
        assert_eq!(ms, vec![m(&[2, 0]), m(&[1, 1]), m(&[0, 2])]);
        assert_eq!(enumerate_monomials(3, 0).unwrap(), vec![m(&[0, 0, 0])]);
        assert_eq!(enumerate_monomials(3, 2).unwrap().len(), 6);
        assert_eq!(enumerate_monomials(1, 4).unwrap(), vec![m(&[4])]);
    }

    #[test]
    fn counts_match_enumeration() {
        for n in 1..=4 {
            for d in 0..=6 {
                assert_eq!(
                    monomial_count(n, d),
                    enumerate_monomials(n, d).unwrap().len() as u128
                );
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        let err = enumerate_monomials_capped(4, 6, 10).unwrap_err();
        assert_eq!(err, Error::MonomialCapExceeded { count: 84, cap: 10 });
    }

    #[test]
    fn action_moves_exponents_with_the_variables() {
        // x1^2 x2 under 1 -> 2 -> 3 -> 1 becomes x2^2 x3.
        let sigma = parse_cycles("(1 2 3)", 3).unwrap();
        assert_eq!(m(&[2, 1, 0]).permuted(&sigma), m(&[0, 2, 1]));
    }

    #[test]
    fn stabilizers() {
        let s2 = group(&["(1 2)"], 2);
        assert_eq!(stabilizer_of(&m(&[1, 1]), &s2).len(), 2);
        assert_eq!(stabilizer_of(&m(&[1, 0]), &s2).len(), 1);
        let s3 = group(&["(1 2)", "(1 2 3)"], 3);
        assert_eq!(stabilizer_of(&m(&[2, 1, 0]), &s3).len(), 1);
    }

    #[test]
    fn goodness_examples() {
        let s2 = group(&["(1 2)"], 2);
        let sign = CharacterTable::sign(&s2);
        let trivial = CharacterTable::trivial(&s2);
        assert!(!is_chi_good(&m(&[1, 1]), &s2, &sign));
        assert!(is_chi_good(&m(&[1, 0]), &s2, &sign));
        assert!(is_chi_good(&m(&[1, 1]), &s2, &trivial));
    }

    #[test]
    fn orbits_of_the_cyclic_three_group() {
        let a3 = group(&["(1 2 3)"], 3);
        let trivial = CharacterTable::trivial(&a3);
        let orbits = orbit_decompose(&a3, 2, &trivial).unwrap();
        assert_eq!(orbits.len(), 2);
        assert!(orbits.iter().all(|o| o.good));
        assert_eq!(orbits[0].representative, m(&[2, 0, 0]));
        assert_eq!(orbits[1].representative, m(&[1, 1, 0]));
        assert_eq!(orbit_decompose(&a3, 3, &trivial).unwrap().len(), 4);
    }

    #[test]
    fn trivial_group_has_singleton_orbits() {
        let g = group(&[], 3);
        let trivial = CharacterTable::trivial(&g);
        let orbits = orbit_decompose(&g, 3, &trivial).unwrap();
        assert_eq!(orbits.len(), 10);
        assert!(orbits.iter().all(|o| o.size == 1 && o.good));
    }

    #[test]
    fn orbit_sizes_divide_group_order_and_cover() {
        let s4 = group(&["(1 2)", "(1 2 3 4)"], 4);
        let trivial = CharacterTable::trivial(&s4);
        for d in 0..=5 {
            let orbits = orbit_decompose(&s4, d, &trivial).unwrap();
            let total: usize = orbits.iter().map(|o| o.size).sum();
            assert_eq!(total as u128, monomial_count(4, d));
            assert!(orbits.iter().all(|o| s4.order().is_multiple_of(o.size)));
        }
    }

    #[test]
    fn good_orbit_counts_for_s2() {
        let s2 = group(&["(1 2)"], 2);
        let sign = CharacterTable::sign(&s2);
        let trivial = CharacterTable::trivial(&s2);
        assert_eq!(good_orbit_counts(&s2, &sign, 2).unwrap(), vec![0, 1, 1]);
        assert_eq!(count_good_orbits(&s2, &trivial, 2).unwrap(), 2);
    }

    #[test]
    fn sign_good_counts_on_alternating_groups_equal_plain_counts() {
        let a3 = group(&["(1 2 3)"], 3);
        let sign = CharacterTable::sign(&a3);
        let trivial = CharacterTable::trivial(&a3);
        assert_eq!(
            good_orbit_counts(&a3, &sign, 4).unwrap(),
            good_orbit_counts(&a3, &trivial, 4).unwrap()
        );
        assert_eq!(count_good_orbits(&a3, &sign, 0).unwrap(), 1);
    }

    #[test]
    fn minimal_good_degrees() {
        let s3 = group(&["(1 2)", "(1 2 3)"], 3);
        assert_eq!(min_good_degree(&s3, &CharacterTable::sign(&s3)), 3);
        let a3 = group(&["(1 2 3)"], 3);
        assert_eq!(min_good_degree(&a3, &CharacterTable::sign(&a3)), 0);
        let s2 = group(&["(1 2)"], 2);
        assert_eq!(min_good_degree(&s2, &CharacterTable::sign(&s2)), 1);
    }

    #[test]
    fn goodness_is_orbit_invariant() {
        let d4 = group(&["(1 2 3 4)", "(1 3)"], 4);
        let sign = CharacterTable::sign(&d4);
        for d in 0..=4 {
            for record in orbit_decompose(&d4, d, &sign).unwrap() {
                for sigma in d4.elements() {
                    let member = record.representative.permuted(sigma);
                    assert_eq!(is_chi_good(&member, &d4, &sign), record.good);
                }
            }
        }
    }

    #[cfg(feature = "parallel")]
    #[test]
    fn parallel_and_sequential_sweeps_agree() {
        let s4 = group(&["(1 2)", "(1 2 3 4)"], 4);
        let sign = CharacterTable::sign(&s4);
        assert_eq!(
            good_orbit_counts_seq(&s4, &sign, 6).unwrap(),
            good_orbit_counts_par(&s4, &sign, 6).unwrap()
        );
        assert_eq!(
            min_good_degree_seq(&s4, &sign),
            min_good_degree_par(&s4, &sign)
        );
    }
}
