//! Exhaustive classification of a full symmetric group.
//!
//! `scan` iterates S_N in lexicographic one-line order, classifies every
//! permutation by all three routes, and either streams one NDJSON report
//! per permutation or prints a category summary.  Classification is pure,
//! so the fan-out over a worker pool is embarrassingly parallel; results
//! are collected back *in input order* before anything is printed, which
//! makes the byte stream independent of `--jobs`.
//!
//! Scan lines never carry the `timings`, `diagrams`, or `faces` blocks:
//! those are either volatile (timings) or bulky (the rest), and dropping
//! them keeps `scan --n 5 --jobs 8` byte-identical to `--jobs 1` and
//! diffable across machines.

use rayon::prelude::*;

use schubcone::edgecone::{classify, Classification, EdgeConeError, MethodSet};
use schubcone::rothe::Permutation;

use crate::report::{classification_view, Report, SCHEMA_VERSION};

// ======================================================================
// filters
// ======================================================================

/// Which classifications a scan keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Filter {
    /// Every permutation.
    All,
    /// Toric permutations only.
    Toric,
    /// Combined verdict `rigid = true`.
    Rigid,
    /// Combined verdict `rigid = false`.
    Nonrigid,
    /// Routes that ran returned different verdicts (always empty on an
    /// honest build — any line is a bug).
    Disagreement,
}

impl Filter {
    /// Whether a classification passes this filter.
    pub fn keeps(self, c: &Classification) -> bool {
        match self {
            Filter::All => true,
            Filter::Toric => c.toric,
            Filter::Rigid => c.rigid == Some(true),
            Filter::Nonrigid => c.rigid == Some(false),
            Filter::Disagreement => !c.consistent,
        }
    }
}

// ======================================================================
// the scan itself
// ======================================================================

/// Classify all of S_n in lexicographic order with `jobs` worker threads.
///
/// The output order is the input order regardless of `jobs`.
pub fn classify_all(
    n: usize,
    jobs: usize,
) -> Result<Vec<Classification>, EdgeConeError> {
    let perms = Permutation::all_lexicographic(n);
    let methods = MethodSet::all();
    if jobs <= 1 {
        return perms.iter().map(|p| classify(p, &methods)).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("worker pool construction");
    // par_iter + collect::<Result<Vec<_>>> preserves input order, so the
    // merge needs no further sorting.
    pool.install(|| perms.par_iter().map(|p| classify(p, &methods)).collect())
}

/// The NDJSON line for one classification (no trailing newline).
pub fn ndjson_line(c: &Classification) -> String {
    let report = Report {
        schema_version: SCHEMA_VERSION,
        input: c.permutation.to_string(),
        classification: classification_view(c),
        diagrams: None,
        faces: None,
        timings: None,
    };
    serde_json::to_string(&report).expect("report serialization")
}

/// The summary table for a scanned group.
pub fn summary_table(n: usize, results: &[Classification]) -> String {
    use std::fmt::Write as _;
    let count = |f: &dyn Fn(&Classification) -> bool| {
        results.iter().filter(|c| f(c)).count()
    };
    let toric = count(&|c| c.toric);
    let rigid = count(&|c| c.rigid == Some(true));
    let nonrigid = count(&|c| c.rigid == Some(false));
    let undecided = count(&|c| c.toric && c.rigid.is_none());
    let disagreement = count(&|c| !c.consistent);
    let mut out = String::new();
    let _ = writeln!(out, "scan n={n}: {} permutations", results.len());
    let _ = writeln!(out, "  toric         {toric}");
    let _ = writeln!(out, "  non-toric     {}", results.len() - toric);
    let _ = writeln!(out, "  rigid         {rigid}");
    let _ = writeln!(out, "  non-rigid     {nonrigid}");
    let _ = writeln!(out, "  undecided     {undecided}");
    let _ = writeln!(out, "  disagreement  {disagreement}");
    out
}

// ======================================================================
// tests
// ======================================================================
