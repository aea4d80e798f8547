//! Finite permutation groups: breadth-first generator closure and the
//! structure derived from the transpositions a group contains.
//!
//! The subgroup `N` generated by the transpositions of `G` is always the
//! full product of symmetric groups on the blocks of a partition of
//! `{1, .., n}` (join `i` and `j` whenever the transposition `(i j)` lies
//! in `G`). The index `|G/N|` decides, characteristic by characteristic,
//! whether the invariant-ring inclusion splits. Both facts are verified on
//! every constructed group rather than assumed.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::perm::{Permutation, MAX_ARITY};
use crate::union_find::UnionFind;

/// Default cap on the order of a generated group.
pub const DEFAULT_ORDER_CAP: usize = 1_000_000;

/// A finite permutation group together with its transposition structure.
///
/// Invariants:
///   1. `elements` is closed under composition and inverses and contains
///      the identity; it is sorted by image list.
///   2. `transpositions` are exactly the elements with cycle type
///      `{2, 1, .., 1}`; `transposition_pairs` lists them as `(i, j)` with
///      `i < j`, sorted.
///   3. `n_subgroup` is the closure of the transpositions and equals the
///      full product of symmetric groups on the partition blocks.
///   4. `index_g_n * n_subgroup.len() == elements.len()`.
#[derive(Clone, Debug)]
pub struct PermGroup {
    n: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    transpositions: Vec<Permutation>,
    transposition_pairs: Vec<(usize, usize)>,
    n_subgroup: Vec<Permutation>,
    partition: Vec<Vec<usize>>,
    index_g_n: usize,
}

impl PermGroup {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// All elements, sorted by image list; the identity comes first.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn transpositions(&self) -> &[Permutation] {
        &self.transpositions
    }

    /// The transpositions as normalized pairs `(i, j)` with `i < j`.
    pub fn transposition_pairs(&self) -> &[(usize, usize)] {
        &self.transposition_pairs
    }

    /// `c`, the number of transpositions in the group.
    pub fn transposition_count(&self) -> usize {
        self.transposition_pairs.len()
    }

    /// Elements of `N`, the subgroup generated by the transpositions.
    pub fn n_subgroup(&self) -> &[Permutation] {
        &self.n_subgroup
    }

    /// Blocks of the partition of `{1, .., n}` induced by the transposition
    /// graph; each block ascending, blocks sorted by least element.
    pub fn partition(&self) -> &[Vec<usize>] {
        &self.partition
    }

    /// `|G / N|`.
    pub fn index_g_n(&self) -> usize {
        self.index_g_n
    }

    pub fn is_generated_by_transpositions(&self) -> bool {
        self.index_g_n == 1
    }

    /// The transposition-derived structure as one bundle.
    pub fn transposition_closure(&self) -> (&[Permutation], &[Vec<usize>], usize) {
        (&self.n_subgroup, &self.partition, self.index_g_n)
    }

    /// Position of `p` in the sorted element list.
    pub fn position_of(&self, p: &Permutation) -> Option<usize> {
        self.elements.binary_search(p).ok()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.position_of(p).is_some()
    }
}

fn close_under_composition(
    generators: &[Permutation],
    n: usize,
    cap: usize,
) -> Result<Vec<Permutation>> {
    let identity = Permutation::identity(n);
    let mut seen: HashSet<Permutation> = HashSet::new();
    seen.insert(identity.clone());
    let mut queue = VecDeque::from([identity]);
    while let Some(cur) = queue.pop_front() {
        for gen in generators {
            let next = cur.compose_unchecked(gen);
            if !seen.contains(&next) {
                if seen.len() >= cap {
                    return Err(Error::OrderCapExceeded {
                        partial_order: seen.len() + 1,
                        cap,
                    });
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    let mut elements: Vec<Permutation> = seen.into_iter().collect();
    elements.sort();
    Ok(elements)
}

/// Generates the group closure of `generators` inside the symmetric group
/// on `n` points, with the default order cap.
pub fn generate_group(generators: &[Permutation], n: usize) -> Result<PermGroup> {
    generate_group_capped(generators, n, DEFAULT_ORDER_CAP)
}

/// As [`generate_group`], aborting once more than `max_order` elements
/// have been found.
pub fn generate_group_capped(
    generators: &[Permutation],
    n: usize,
    max_order: usize,
) -> Result<PermGroup> {
    if n > MAX_ARITY {
        return Err(Error::ArityTooLarge { n, max: MAX_ARITY });
    }
    for g in generators {
        if g.n() != n {
            return Err(Error::ArityMismatch {
                left: g.n(),
                right: n,
            });
        }
    }

    let elements = close_under_composition(generators, n, max_order)?;

    let transpositions: Vec<Permutation> = elements
        .iter()
        .filter(|p| p.is_transposition())
        .cloned()
        .collect();
    let mut transposition_pairs: Vec<(usize, usize)> = transpositions
        .iter()
        .map(|p| p.transposed_pair().expect("filtered to transpositions"))
        .collect();
    transposition_pairs.sort_unstable();

    let n_subgroup = close_under_composition(&transpositions, n, max_order)?;

    let mut uf = UnionFind::new(n);
    for &(i, j) in &transposition_pairs {
        uf.union(i - 1, j - 1);
    }
    let mut partition: Vec<Vec<usize>> = uf
        .components()
        .into_iter()
        .map(|block| block.into_iter().map(|i| i + 1).collect())
        .collect();
    partition.sort_by_key(|block| block[0]);

    verify_young_product(&n_subgroup, &partition, n)?;

    if elements.len() % n_subgroup.len() != 0 {
        return Err(Error::InternalCheck(format!(
            "|N| = {} does not divide |G| = {}",
            n_subgroup.len(),
            elements.len()
        )));
    }
    let index_g_n = elements.len() / n_subgroup.len();

    Ok(PermGroup {
        n,
        generators: generators.to_vec(),
        elements,
        transpositions,
        transposition_pairs,
        n_subgroup,
        partition,
        index_g_n,
    })
}

/// Checks that the closure of the transpositions is exactly the product of
/// the symmetric groups on the partition blocks: every element preserves
/// the blocks, and the order matches the product of block factorials.
fn verify_young_product(
    n_subgroup: &[Permutation],
    partition: &[Vec<usize>],
    n: usize,
) -> Result<()> {
    let mut block_id = vec![0usize; n];
    for (b, block) in partition.iter().enumerate() {
        for &i in block {
            block_id[i - 1] = b;
        }
    }
    for sigma in n_subgroup {
        for i in 1..=n {
            if block_id[sigma.image_of(i) - 1] != block_id[i - 1] {
                return Err(Error::InternalCheck(
                    "transposition subgroup does not preserve its partition blocks".into(),
                ));
            }
        }
    }
    let mut product: u128 = 1;
    for block in partition {
        for k in 1..=block.len() as u128 {
            product *= k;
        }
    }
    if product != n_subgroup.len() as u128 {
        return Err(Error::InternalCheck(format!(
            "transposition subgroup has order {} but the product of block \
             symmetric groups has order {}",
            n_subgroup.len(),
            product
        )));
    }
    Ok(())
}
