//! Report serialization: a schema-stable JSON document and a per
//! characteristic text table.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;

use perminv_core::{CanonicalBase, GradedWindow, InvariantReport, RationalFunction};

/// Top-level JSON document. Field order is the schema; serde keeps it.
#[derive(Serialize)]
struct JsonReport {
    n: usize,
    order: usize,
    transpositions: usize,
    partition: Vec<Vec<usize>>,
    #[serde(rename = "index_G_over_N")]
    index_g_over_n: usize,
    hilb_invariants: JsonSeries,
    hilb_sign_semiinvariants: JsonSeries,
    per_char: BTreeMap<u32, JsonCharReport>,
    uniformly_split: bool,
    generated_by_transpositions: bool,
}

/// Integer coefficient arrays, lowest degree first, denominators cleared.
/// Coefficients are emitted as exact integer literals of any size.
#[derive(Serialize)]
struct JsonSeries {
    num: Vec<serde_json::Number>,
    den: Vec<serde_json::Number>,
}

#[derive(Serialize)]
struct JsonCharReport {
    a_invariant: i64,
    quasi_gorenstein: bool,
    splits: bool,
    canonical: JsonCanonical,
    cohomology_window: JsonWindow,
}

#[derive(Serialize)]
struct JsonCanonical {
    base: &'static str,
    shift: i64,
}

/// The window of the invariant ring's own top local cohomology; `dims[k]`
/// is the dimension in degree `lo + k`.
#[derive(Serialize)]
struct JsonWindow {
    lo: i64,
    hi: i64,
    dims: Vec<u64>,
}

fn exact_integer(value: &BigInt) -> serde_json::Number {
    value.to_string().parse().expect("integer literal")
}

fn series_arrays(series: &RationalFunction) -> JsonSeries {
    let (num, den) = series.integer_coefficient_arrays();
    JsonSeries {
        num: num.iter().map(exact_integer).collect(),
        den: den.iter().map(exact_integer).collect(),
    }
}

fn window_json(window: &GradedWindow) -> JsonWindow {
    JsonWindow {
        lo: window.lo(),
        hi: window.hi(),
        dims: window.dims().to_vec(),
    }
}

pub fn to_json(report: &InvariantReport) -> String {
    let per_char = report
        .per_char
        .iter()
        .map(|(&p, cr)| {
            (
                p,
                JsonCharReport {
                    a_invariant: cr.a_invariant,
                    quasi_gorenstein: cr.quasi_gorenstein,
                    splits: cr.splits,
                    canonical: JsonCanonical {
                        base: cr.canonical.base.as_str(),
                        shift: cr.canonical.shift,
                    },
                    cohomology_window: window_json(&cr.invariant_ring_cohomology),
                },
            )
        })
        .collect();
    let doc = JsonReport {
        n: report.n,
        order: report.order,
        transpositions: report.transposition_count,
        partition: report.partition.clone(),
        index_g_over_n: report.index_g_n,
        hilb_invariants: series_arrays(&report.hilb_invariants),
        hilb_sign_semiinvariants: series_arrays(&report.hilb_sign_semiinvariants),
        per_char,
        uniformly_split: report.uniformly_split,
        generated_by_transpositions: report.generated_by_transpositions,
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("report serializes");
    out.push('\n');
    out
}

fn yes_no(v: bool) -> &'static str {
    if v {
        "yes"
    } else {
        "no"
    }
}

fn format_blocks(partition: &[Vec<usize>]) -> String {
    partition
        .iter()
        .map(|block| {
            let inner: Vec<String> = block.iter().map(|i| i.to_string()).collect();
            format!("{{{}}}", inner.join(","))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn format_series(series: &RationalFunction, depth: usize) -> String {
    let coeffs = series
        .expand(depth)
        .expect("Molien denominators have unit constant term");
    let coeffs: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
    format!(
        "{}\n      coefficients t^0..t^{depth}: {}",
        series,
        coeffs.join(" ")
    )
}

fn format_window(window: &GradedWindow) -> String {
    let dims: Vec<String> = window.dims().iter().map(|d| d.to_string()).collect();
    format!(
        "degrees [{}, {}], dims {}",
        window.lo(),
        window.hi(),
        dims.join(" ")
    )
}

pub fn to_text(report: &InvariantReport) -> String {
    let mut out = String::new();
    let mut line = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };

    line(format!("n:                            {}", report.n));
    line(format!("group order:                  {}", report.order));
    line(format!(
        "transpositions (c):           {}",
        report.transposition_count
    ));
    line(format!(
        "partition blocks:             {}",
        format_blocks(&report.partition)
    ));
    line(format!(
        "index |G/N|:                  {}",
        report.index_g_n
    ));
    line(format!(
        "generated by transpositions:  {}",
        yes_no(report.generated_by_transpositions)
    ));
    line(format!(
        "splits in every characteristic: {}",
        yes_no(report.uniformly_split)
    ));
    line(String::new());
    line(format!(
        "Hilb(invariants)       = {}",
        format_series(&report.hilb_invariants, report.depth)
    ));
    line(format!(
        "Hilb(sign-semi-invts)  = {}",
        format_series(&report.hilb_sign_semiinvariants, report.depth)
    ));

    for (p, cr) in &report.per_char {
        line(String::new());
        line(format!("characteristic {p}"));
        line(format!(
            "  (1) invariants of top cohomology:  {}",
            format_window(&cr.top_cohomology_invariants)
        ));
        line(format!(
            "      cohomology of invariant ring:  {}",
            format_window(&cr.invariant_ring_cohomology)
        ));
        let base = match cr.canonical.base {
            CanonicalBase::InvariantRing => "the invariant ring",
            CanonicalBase::SignSemiInvariants => "the sign-semi-invariants",
        };
        line(format!(
            "  (2) canonical module:              {} shifted by {}",
            base, cr.canonical.shift
        ));
        line(format!(
            "  (3) a-invariant:                   {}",
            cr.a_invariant
        ));
        let mut qg = format!(
            "  (4) quasi-Gorenstein:              {}",
            yes_no(cr.quasi_gorenstein)
        );
        if *p == 0 {
            // Invariant rings are Cohen-Macaulay in characteristic zero, so
            // quasi-Gorenstein upgrades to Gorenstein there.
            qg.push_str(&format!(" (Gorenstein: {})", yes_no(cr.quasi_gorenstein)));
        }
        line(qg);
        line(format!(
            "  (5) inclusion splits:              {}",
            yes_no(cr.splits)
        ));
    }
    out
}
