//! Permutations of `{1, .., n}` in one-line image form, cycle-notation
//! parsing, and cycle structure.
//!
//! Composition is fixed once and for all as `(a ∘ b)(i) = a(b(i))`: the
//! right factor acts first. Cycle notation is 1-indexed, and a product of
//! cycles composes left to right with the leftmost cycle applied last, so
//! that `parse_cycles("(1 2)(2 3)")` equals `(1 2) ∘ (2 3)`.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported arity. Everything in this crate is meant for
/// desk-scale groups, so this is generous.
pub const MAX_ARITY: usize = 32;

/// A permutation of `{1, .., n}`.
///
/// Invariants:
///   1. `images[i]` equals `sigma(i + 1)` and is valued in `1..=n`.
///   2. The images form a bijection of `{1, .., n}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (1..=n).map(|i| i as u8).collect(),
        }
    }

    /// Builds a permutation from its 1-indexed image list: `images[i]` is
    /// where `i + 1` is sent.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n > MAX_ARITY {
            return Err(Error::ArityTooLarge { n, max: MAX_ARITY });
        }
        let mut seen = vec![false; n];
        for &v in images {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation("image out of range"));
            }
            if seen[v - 1] {
                return Err(Error::InvalidPermutation("repeated image"));
            }
            seen[v - 1] = true;
        }
        Ok(Self {
            images: images.iter().map(|&v| v as u8).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// `sigma(i)` for 1-indexed `i`.
    pub fn image_of(&self, i: usize) -> usize {
        self.images[i - 1] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&v| v as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &v)| v as usize == i + 1)
    }

    /// `(a ∘ b)(i) = a(b(i))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::ArityMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n(), other.n());
        Self {
            images: other
                .images
                .iter()
                .map(|&b| self.images[b as usize - 1])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0u8; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v as usize - 1] = (i + 1) as u8;
        }
        Self { images }
    }

    /// `(-1)^(n - #cycles)`, fixed points counted as cycles.
    pub fn sign(&self) -> i8 {
        let cycles = self.cycles().len();
        if (self.n() - cycles).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Cycle decomposition including fixed points; each cycle starts at its
    /// least element and cycles are sorted by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut visited = vec![false; n];
        let mut out = Vec::new();
        for start in 1..=n {
            if visited[start - 1] {
                continue;
            }
            let mut cycle = vec![start];
            visited[start - 1] = true;
            let mut cur = self.image_of(start);
            while cur != start {
                visited[cur - 1] = true;
                cycle.push(cur);
                cur = self.image_of(cur);
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut lengths: Vec<usize> = self.cycles().iter().map(|c| c.len()).collect();
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        CycleType { lengths }
    }

    /// True when the permutation swaps exactly two points.
    pub fn is_transposition(&self) -> bool {
        self.transposed_pair().is_some()
    }

    /// The swapped pair `(i, j)` with `i < j`, when the permutation is a
    /// transposition.
    pub fn transposed_pair(&self) -> Option<(usize, usize)> {
        let mut moved = self
            .images
            .iter()
            .enumerate()
            .filter(|&(i, &v)| v as usize != i + 1)
            .map(|(i, _)| i + 1);
        let i = moved.next()?;
        let j = moved.next()?;
        if moved.next().is_some() {
            return None;
        }
        (self.image_of(i) == j && self.image_of(j) == i).then_some((i, j))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nontrivial: Vec<Vec<usize>> =
            self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if nontrivial.is_empty() {
            return write!(f, "()");
        }
        for cycle in nontrivial {
            write!(f, "(")?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Multiset of cycle lengths of a permutation; sums to the arity.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CycleType {
    lengths: Vec<usize>,
}

impl CycleType {
    /// Lengths in decreasing order, fixed points included as 1s.
    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }
}

/// Parses a product of cycles such as `"(1 2 3)(4 5)"`.
///
/// Cycles compose left to right with the leftmost applied last. Whitespace
/// between and inside cycles is ignored; the empty string and `"()"` both
/// yield the identity. Cycles need not be disjoint.
///
/// ```
/// use perminv_core::parse_cycles;
///
/// let p = parse_cycles("(1 2 3)", 3)?;
/// assert_eq!(p.image_of(1), 2);
/// assert_eq!(p.image_of(3), 1);
/// # Ok::<(), perminv_core::Error>(())
/// ```
pub fn parse_cycles(text: &str, n: usize) -> Result<Permutation> {
    if n > MAX_ARITY {
        return Err(Error::ArityTooLarge { n, max: MAX_ARITY });
    }
    let bytes = text.as_bytes();
    let mut pos = 0;
    let mut cycles: Vec<Vec<usize>> = Vec::new();

    while pos < bytes.len() {
        if bytes[pos].is_ascii_whitespace() {
            pos += 1;
            continue;
        }
        if bytes[pos] != b'(' {
            return Err(Error::MalformedCycles {
                position: pos,
                reason: "expected '('",
            });
        }
        pos += 1;
        let mut entries: Vec<usize> = Vec::new();
        loop {
            while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
                pos += 1;
            }
            match bytes.get(pos) {
                None => {
                    return Err(Error::MalformedCycles {
                        position: pos,
                        reason: "unclosed cycle",
                    })
                }
                Some(b')') => {
                    pos += 1;
                    break;
                }
                Some(c) if c.is_ascii_digit() => {
                    let start = pos;
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    let value: usize =
                        text[start..pos]
                            .parse()
                            .map_err(|_| Error::MalformedCycles {
                                position: start,
                                reason: "integer too large",
                            })?;
                    if value == 0 || value > n {
                        return Err(Error::IndexOutOfRange { index: value, n });
                    }
                    if entries.contains(&value) {
                        return Err(Error::RepeatedIndex { index: value });
                    }
                    entries.push(value);
                }
                Some(_) => {
                    return Err(Error::MalformedCycles {
                        position: pos,
                        reason: "expected an integer or ')'",
                    })
                }
            }
        }
        cycles.push(entries);
    }

    let mut result = Permutation::identity(n);
    for entries in &cycles {
        let mut images: Vec<usize> = (1..=n).collect();
        for (k, &a) in entries.iter().enumerate() {
            images[a - 1] = entries[(k + 1) % entries.len()];
        }
        let cycle_perm = Permutation::from_images(&images)?;
        result = result.compose_unchecked(&cycle_perm);
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str, n: usize) -> Permutation {
        parse_cycles(text, n).unwrap()
    }

    #[test]
    fn parses_disjoint_cycles() {
        assert_eq!(
            p("(1 2)(3 4)", 4),
            Permutation::from_images(&[2, 1, 4, 3]).unwrap()
        );
    }

    #[test]
    fn parses_a_three_cycle() {
        assert_eq!(
            p("(1 2 3)", 3),
            Permutation::from_images(&[2, 3, 1]).unwrap()
        );
    }

    #[test]
    fn empty_string_is_identity() {
        assert_eq!(p("", 3), Permutation::identity(3));
        assert_eq!(p("()", 3), Permutation::identity(3));
    }

    #[test]
    fn nondisjoint_cycles_compose_left_to_right() {
        // (1 2)(2 3) means apply (2 3) first: 1->2, 2->3, 3->1.
        assert_eq!(
            p("(1 2)(2 3)", 3),
            Permutation::from_images(&[2, 3, 1]).unwrap()
        );
    }

    #[test]
    fn parse_rejects_out_of_range_and_repeats() {
        assert_eq!(
            parse_cycles("(1 5)", 4),
            Err(Error::IndexOutOfRange { index: 5, n: 4 })
        );
        assert_eq!(
            parse_cycles("(0 1)", 4),
            Err(Error::IndexOutOfRange { index: 0, n: 4 })
        );
        assert_eq!(
            parse_cycles("(1 2 1)", 4),
            Err(Error::RepeatedIndex { index: 1 })
        );
        assert!(matches!(
            parse_cycles("(1 2", 4),
            Err(Error::MalformedCycles { .. })
        ));
        assert!(matches!(
            parse_cycles("1 2)", 4),
            Err(Error::MalformedCycles { .. })
        ));
        assert!(matches!(
            parse_cycles("(1 x)", 4),
            Err(Error::MalformedCycles { .. })
        ));
    }

    #[test]
    fn compose_applies_right_factor_first() {
        let a = p("(1 2)", 3);
        let b = p("(2 3)", 3);
        let c = a.compose(&b).unwrap();
        assert_eq!(c, Permutation::from_images(&[2, 3, 1]).unwrap());
        assert_eq!(a.compose(&a).unwrap(), Permutation::identity(3));
        assert_eq!(Permutation::identity(3).compose(&c).unwrap(), c);
    }

    #[test]
    fn compose_rejects_arity_mismatch() {
        let a = p("(1 2)", 3);
        let b = p("(1 2)", 4);
        assert_eq!(
            a.compose(&b),
            Err(Error::ArityMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn sign_of_small_cycles() {
        assert_eq!(p("(1 2)", 2).sign(), -1);
        assert_eq!(p("(1 2 3)", 3).sign(), 1);
        assert_eq!(p("(1 2 3 4)", 4).sign(), -1);
        assert_eq!(Permutation::identity(5).sign(), 1);
    }

    #[test]
    fn cycle_types() {
        assert_eq!(p("(1 2)(3 4)", 5).cycle_type().lengths(), &[2, 2, 1]);
        assert_eq!(Permutation::identity(3).cycle_type().lengths(), &[1, 1, 1]);
        assert_eq!(p("(1 2 3 4)", 4).cycle_type().lengths(), &[4]);
    }

    #[test]
    fn transposition_detection() {
        assert!(p("(2 4)", 5).is_transposition());
        assert_eq!(p("(2 4)", 5).transposed_pair(), Some((2, 4)));
        assert!(!p("(1 2)(3 4)", 5).is_transposition());
        assert!(!Permutation::identity(4).is_transposition());
        assert!(!p("(1 2 3)", 4).is_transposition());
    }

    #[test]
    fn inverse_undoes() {
        let a = p("(1 3 4)(2 5)", 5);
        assert!(a.compose(&a.inverse()).unwrap().is_identity());
    }

    #[test]
    fn display_roundtrips_through_parse() {
        for text in ["", "(1 2)", "(1 2 3)(4 5)", "(2 5)(3 4)"] {
            let a = p(text, 5);
            assert_eq!(parse_cycles(&a.to_string(), 5).unwrap(), a);
        }
    }
}
