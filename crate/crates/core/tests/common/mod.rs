//! Fixed corpus of groups shared by the integration suites.

use perminv_core::{generate_group, parse_cycles, PermGroup, Permutation};

pub struct CorpusGroup {
    pub name: &'static str,
    pub group: PermGroup,
}

pub fn build(gens: &[&str], n: usize) -> PermGroup {
    let gens: Vec<Permutation> = gens.iter().map(|t| parse_cycles(t, n).unwrap()).collect();
    generate_group(&gens, n).unwrap()
}

/// Every group the acceptance suite runs over: cyclic, alternating,
/// symmetric, dihedral, and Young-product examples, plus the small
/// fixed-point-free swaps that separate the characteristics.
pub fn corpus() -> Vec<CorpusGroup> {
    let table: Vec<(&'static str, usize, Vec<&'static str>)> = vec![
        ("trivial", 3, vec![]),
        ("swap_in_s3", 3, vec!["(1 2)"]),
        ("s2", 2, vec!["(1 2)"]),
        ("a3", 3, vec!["(1 2 3)"]),
        ("s3", 3, vec!["(1 2)", "(1 2 3)"]),
        ("c4", 4, vec!["(1 2 3 4)"]),
        ("double_swap", 4, vec!["(1 2)(3 4)"]),
        ("young_2_2", 4, vec!["(1 2)", "(3 4)"]),
        ("a4", 4, vec!["(1 2 3)", "(1 2)(3 4)"]),
        ("s4", 4, vec!["(1 2)", "(1 2 3 4)"]),
        ("d4", 4, vec!["(1 2 3 4)", "(1 3)"]),
        ("triple_swap", 6, vec!["(1 2)(3 4)(5 6)"]),
        ("s5", 5, vec!["(1 2)", "(1 2 3 4 5)"]),
        ("a5", 5, vec!["(1 2 3)", "(1 2 3 4 5)"]),
        ("young_2_3", 5, vec!["(1 2)", "(3 4)", "(4 5)"]),
    ];
    table
        .into_iter()
        .map(|(name, n, gens)| CorpusGroup {
            name,
            group: build(&gens, n),
        })
        .collect()
}

/// Further groups the invariant sweeps run over, beyond the fixed corpus:
/// a transitive Klein four-group, larger cycles, an odd-order p-group, and
/// a Frobenius group, all chosen to hit verdict combinations the corpus
/// misses.
#[allow(dead_code)]
pub fn extended_corpus() -> Vec<CorpusGroup> {
    let table: Vec<(&'static str, usize, Vec<&'static str>)> = vec![
        ("klein_transitive", 4, vec!["(1 2)(3 4)", "(1 3)(2 4)"]),
        ("c5", 5, vec!["(1 2 3 4 5)"]),
        ("c6", 6, vec!["(1 2 3 4 5 6)"]),
        ("c3xc3", 6, vec!["(1 2 3)", "(4 5 6)"]),
        ("frobenius20", 5, vec!["(1 2 3 4 5)", "(2 3 5 4)"]),
        ("s3_in_s5", 5, vec!["(1 2)", "(1 2 3)"]),
        ("d6", 6, vec!["(1 2 3 4 5 6)", "(1 6)(2 5)(3 4)"]),
    ];
    table
        .into_iter()
        .map(|(name, n, gens)| CorpusGroup {
            name,
            group: build(&gens, n),
        })
        .collect()
}

// Not every suite looks groups up by name.
#[allow(dead_code)]
pub fn find<'a>(corpus: &'a [CorpusGroup], name: &str) -> &'a PermGroup {
    &corpus
        .iter()
        .find(|c| c.name == name)
        .unwrap_or_else(|| panic!("no corpus group named {name}"))
        .group
}
