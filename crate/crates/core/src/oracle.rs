//! Independent verification paths for the orbit-counting machinery.
//!
//! Two deliberately different algorithms recompute semi-invariant
//! dimensions: a union-find over the full monomial list (instead of the
//! transversal sweep used elsewhere), and raw linear algebra over small
//! prime fields that row-reduces the stacked equivariance constraints.
//! Neither calls the orbit decomposition it is checking.

use crate::character::CharacterTable;
use crate::cohomology::is_prime;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::monomial::{enumerate_monomials_capped, Monomial};
use crate::perm::Permutation;
use crate::union_find::UnionFind;

/// Cap on the monomial count for the dense-matrix oracle.
pub const ORACLE_MONOMIAL_CAP: usize = 5_000;

/// Dense matrix of residues mod a prime, with just enough operations to
/// compute a rank.
#[derive(Clone, Debug)]
pub struct ModularMatrix {
    p: u64,
    rows: usize,
    cols: usize,
    entries: Vec<u64>,
}

impl ModularMatrix {
    pub fn zeros(rows: usize, cols: usize, p: u64) -> Self {
        Self {
            p,
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn set(&mut self, r: usize, c: usize, value: u64) {
        self.entries[r * self.cols + c] = value % self.p;
    }

    pub fn add_to(&mut self, r: usize, c: usize, value: u64) {
        let cell = &mut self.entries[r * self.cols + c];
        *cell = (*cell + value) % self.p;
    }

    fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
        let mut acc = 1u64;
        base %= p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        acc
    }

    fn mod_inv(a: u64, p: u64) -> u64 {
        Self::mod_pow(a, p - 2, p)
    }

    /// Rank by Gauss-Jordan elimination; exact, since arithmetic mod a
    /// prime never leaves the field.
    pub fn rank(mut self) -> usize {
        let (rows, cols, p) = (self.rows, self.cols, self.p);
        let mut rank = 0;
        for col in 0..cols {
            let pivot = match (rank..rows).find(|&r| self.entries[r * cols + col] != 0) {
                Some(r) => r,
                None => continue,
            };
            for c in 0..cols {
                self.entries.swap(pivot * cols + c, rank * cols + c);
            }
            let inv = Self::mod_inv(self.entries[rank * cols + col], p);
            for c in col..cols {
                self.entries[rank * cols + c] = self.entries[rank * cols + c] * inv % p;
            }
            for r in 0..rows {
                if r == rank {
                    continue;
                }
                let factor = self.entries[r * cols + col];
                if factor == 0 {
                    continue;
                }
                for c in col..cols {
                    let sub = factor * self.entries[rank * cols + c] % p;
                    self.entries[r * cols + c] = (self.entries[r * cols + c] + p - sub) % p;
                }
            }
            rank += 1;
            if rank == rows {
                break;
            }
        }
        rank
    }
}

fn index_of(monomials: &[Monomial], target: &Monomial) -> usize {
    monomials
        .binary_search_by(|probe| target.cmp(probe))
        .expect("orbit member stays within the degree slice")
}

/// Stabilizer-in-kernel test, written out directly so the oracle does not
/// lean on the module it cross-checks.
fn component_is_good(rep: &Monomial, g: &PermGroup, chi: &CharacterTable) -> bool {
    for (k, sigma) in g.elements().iter().enumerate() {
        if chi.value_at(k) == -1 && &rep.permuted(sigma) == rep {
            return false;
        }
    }
    true
}

/// Number of chi-good orbits in degree `d`, recomputed via union-find over
/// the edges `m -- sigma(m)` for the generators.
pub fn brute_dim_by_orbits(g: &PermGroup, chi: &CharacterTable, d: usize) -> Result<usize> {
    let monomials = enumerate_monomials_capped(g.n(), d, ORACLE_MONOMIAL_CAP)?;
    let mut uf = UnionFind::new(monomials.len());
    for sigma in g.generators() {
        for (i, m) in monomials.iter().enumerate() {
            uf.union(i, index_of(&monomials, &m.permuted(sigma)));
        }
    }
    let mut good = 0;
    for component in uf.components() {
        if component_is_good(&monomials[component[0]], g, chi) {
            good += 1;
        }
    }
    Ok(good)
}

/// Dimension over `F_p` of the space of degree-`d` coefficient vectors `v`
/// with `sigma . v = chi(sigma) v` for every generator `sigma`, by
/// stacking the constraint matrices and row-reducing.
pub fn fixed_space_dim_mod_p(
    g: &PermGroup,
    chi: &CharacterTable,
    d: usize,
    p: u32,
) -> Result<usize> {
    fixed_space_dim(g, chi, d, p, g.generators())
}

/// As [`fixed_space_dim_mod_p`] but constraining on every group element;
/// the generators already cut out the same space, so this exists purely as
/// a diagnostic cross-check.
pub fn fixed_space_dim_mod_p_exhaustive(
    g: &PermGroup,
    chi: &CharacterTable,
    d: usize,
    p: u32,
) -> Result<usize> {
    fixed_space_dim(g, chi, d, p, g.elements())
}

fn fixed_space_dim(
    g: &PermGroup,
    chi: &CharacterTable,
    d: usize,
    p: u32,
    constraints: &[Permutation],
) -> Result<usize> {
    if !is_prime(p) {
        return Err(Error::InvalidCharacteristic(p));
    }
    if p == 2 && !chi.is_trivial_valued() {
        return Err(Error::UnrealizableCharacter { p });
    }
    let monomials = enumerate_monomials_capped(g.n(), d, ORACLE_MONOMIAL_CAP)?;
    let count = monomials.len();
    let p64 = u64::from(p);

    let mut matrix = ModularMatrix::zeros(constraints.len() * count, count, p64);
    let mut row = 0;
    for sigma in constraints {
        let chi_value = chi
            .value_of(g, sigma)
            .expect("constraint permutations come from the group");
        // sigma(f) = chi(sigma) f reads, coefficient by coefficient,
        // a_m - chi(sigma) a_{sigma(m)} = 0.
        let neg_chi = if chi_value == 1 { p64 - 1 } else { 1 };
        for (i, m) in monomials.iter().enumerate() {
            let j = index_of(&monomials, &m.permuted(sigma));
            matrix.add_to(row, i, 1);
            matrix.add_to(row, j, neg_chi);
            row += 1;
        }
    }
    Ok(count - matrix.rank())
}
