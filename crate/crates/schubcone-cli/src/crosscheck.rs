//! The route-agreement harness behind `crosscheck`.
//!
//! For every permutation of S_N in lexicographic order, the base run
//! verifies the claims that tie the three rigidity routes together:
//!
//! 1. the hook criterion and the complexity computation agree on
//!    toricness;
//! 2. for every component of G^π (toric π only), the Γ-images of the
//!    first independent sets equal the polyhedral oracle's extremal-ray
//!    set, and the cone has dimension m+n−1;
//! 3. the graph criterion, the essential-chain corollary, and the oracle
//!    return the same rigidity verdict.
//!
//! `--deep` additionally replays the face theorem: every subset S of the
//! first independent sets with |S| ≤ 3 must span a |S|-dimensional face
//! exactly when the oracle's minimal face containing Γ(S) has that
//! dimension, the reported supporting functional must vanish on the face
//! and be strictly positive off it, and the closed-form pair rules must
//! agree with `spans_face` on every pair.
//!
//! The first discrepancy aborts the run with a full witness (permutation,
//! component labels, both sides of the failed comparison); a clean run
//! reports what was checked.  Under `--sabotage` this harness is the
//! negative control: a corrupted route must turn the exit code to 1.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use itertools::Itertools;

use schubcone::bigraph::{first_independent_sets, LabeledGraph};
use schubcone::edgecone::{
    classify, pair_predicates, rays_of_graph, reduced_dual_rows, spans_face,
    MethodSet,
};
use schubcone::polyoracle::RationalCone;
use schubcone::rothe::{l_components, regions, rothe_diagram, Permutation};

// ======================================================================
// outcome
// ======================================================================

/// Tallies from a crosscheck run, plus the first failure if any.
#[derive(Debug, Default)]
pub struct CrosscheckOutcome {
    /// Permutations examined.
    pub permutations: usize,
    /// How many of them were toric.
    pub toric: usize,
    /// Component cones whose ray sets and dimension were verified.
    pub components: usize,
    /// Face subsets |S| ≤ 3 compared against the oracle (deep only).
    pub subsets: usize,
    /// Pairs checked against the closed-form rules (deep only).
    pub pairs: usize,
    /// Formatted witness of the first discrepancy, if one was found.
    pub failure: Option<String>,
}

impl CrosscheckOutcome {
    /// Whether every comparison agreed.
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Pair a supporting functional (length m+n) with a normal-form ray
/// (length m+n−1): the dot product of the shared prefix.
fn pairing(functional: &[i64], coords: &[i64]) -> i128 {
    functional
        .iter()
        .zip(coords)
        .map(|(&a, &b)| i128::from(a) * i128::from(b))
        .sum()
}

// ======================================================================
// the harness
// ======================================================================

/// Run the harness over all of S_n.  Never panics on a mathematical
/// disagreement — that is reported as the outcome's `failure`.
pub fn run(n: usize, deep: bool) -> CrosscheckOutcome {
    let mut out = CrosscheckOutcome::default();
    for p in Permutation::all_lexicographic(n) {
        out.permutations += 1;
        if let Some(witness) = check_permutation(&p, deep, &mut out) {
            out.failure = Some(witness);
            return out;
        }
    }
    out
}

/// All checks for one permutation; `Some(witness)` on first discrepancy.
fn check_permutation(
    p: &Permutation,
    deep: bool,
    out: &mut CrosscheckOutcome,
) -> Option<String> {
    let cls = match classify(p, &MethodSet::all()) {
        Ok(c) => c,
        Err(e) => return Some(format!("FAIL π={p}: classification error: {e}")),
    };

    // (1) the two toricness criteria agree.
    if cls.toric != (cls.complexity == 0) {
        return Some(format!(
            "FAIL π={p}: hook criterion says toric={} but complexity={}",
            cls.toric, cls.complexity
        ));
    }
    if !cls.toric {
        return None;
    }
    out.toric += 1;

    // (3) three-route agreement (checked before the per-component work so
    // a corrupted corollary route is reported on the verdicts, not as a
    // downstream artifact).
    let v = &cls.method_verdicts;
    if !cls.consistent || cls.rigid.is_none() {
        return Some(format!(
            "FAIL π={p}: rigidity routes disagree \
             (graph={:?} corollary={:?} oracle={:?})",
            v.graph, v.corollary, v.oracle
        ));
    }

    // (2) per-component ray sets and dimension, plus the deep checks.
    let reg = regions(&rothe_diagram(p));
    for (ci, comp) in l_components(&reg.l).iter().enumerate() {
        let lg = LabeledGraph::from_cells(comp);
        if let Some(w) = check_component(p, ci, &lg, deep, out) {
            return Some(w);
        }
    }
    None
}

fn check_component(
    p: &Permutation,
    ci: usize,
    lg: &LabeledGraph,
    deep: bool,
    out: &mut CrosscheckOutcome,
) -> Option<String> {
    let g = &lg.graph;
    let (m, n) = (g.m(), g.n());
    let place = format!(
        "π={p} component {ci} (rows {:?} × cols {:?})",
        lg.row_labels, lg.col_labels
    );

    let rays = match rays_of_graph(g) {
        Ok(r) => r,
        Err(e) => return Some(format!("FAIL {place}: ray enumeration error: {e}")),
    };
    let cone = match RationalCone::from_inequalities(m + n - 1, reduced_dual_rows(g)) {
        Ok(c) => c,
        Err(e) => return Some(format!("FAIL {place}: oracle error: {e}")),
    };

    // Γ-rays versus oracle extremal rays, as sets of primitive vectors.
    let mut gamma: Vec<Vec<i64>> = rays.iter().map(|r| r.coords.clone()).collect();
    gamma.sort();
    if gamma != cone.generators() {
        let mut w = format!("FAIL {place}: Γ-ray set differs from the oracle\n");
        let _ = writeln!(w, "  Γ rays:");
        for r in &rays {
            let _ = writeln!(w, "    {r}");
        }
        let _ = writeln!(w, "  oracle rays:");
        for gsrc in cone.generators() {
            let _ = writeln!(w, "    {gsrc:?}");
        }
        return Some(w);
    }

    // Cone dimension: connected G on m+n vertices gives a full cone in
    // the rank-(m+n−1) quotient.
    if cone.cone_dim() != m + n - 1 {
        return Some(format!(
            "FAIL {place}: cone dimension {} ≠ m+n-1 = {}",
            cone.cone_dim(),
            m + n - 1
        ));
    }
    out.components += 1;

    if deep {
        return check_faces_deep(&place, lg, &cone, out);
    }
    None
}

/// Deep mode: the face theorem and the pair rules against the oracle.
fn check_faces_deep(
    place: &str,
    lg: &LabeledGraph,
    cone: &RationalCone,
    out: &mut CrosscheckOutcome,
) -> Option<String> {
    let g = &lg.graph;
    let isets = match first_independent_sets(g) {
        Ok(s) => s,
        Err(e) => return Some(format!("FAIL {place}: enumeration error: {e}")),
    };
    let rays = match rays_of_graph(g) {
        Ok(r) => r,
        Err(e) => return Some(format!("FAIL {place}: ray error: {e}")),
    };
    // Oracle generator index of every Γ-ray (the sets were already
    // proven equal in the base pass).
    let index_of: BTreeMap<Vec<i64>, usize> = cone
        .generators()
        .iter()
        .enumerate()
        .map(|(i, v)| (v.clone(), i))
        .collect();

    for size in 1..=3usize.min(isets.len()) {
        for s in isets.iter().combinations(size) {
            let subset: Vec<_> = s.iter().map(|&a| a.clone()).collect();
            let spans = match spans_face(g, &subset) {
                Ok(v) => v,
                Err(e) => return Some(format!("FAIL {place}: spans_face error: {e}")),
            };
            let indices: std::collections::BTreeSet<usize> = subset
                .iter()
                .map(|a| {
                    let r = rays.iter().find(|r| &r.source == a).expect("ray of iset");
                    index_of[&r.coords]
                })
                .collect();
            let oracle_face = match cone.minimal_face(&indices) {
                Ok(f) => f,
                Err(e) => return Some(format!("FAIL {place}: oracle face error: {e}")),
            };
            out.subsets += 1;

            match spans {
                None => {
                    if oracle_face.dim == size {
                        return Some(format!(
                            "FAIL {place}: S={subset:?} — spans_face says no, \
                             oracle minimal face has dim {size}"
                        ));
                    }
                }
                Some(fd) => {
                    if oracle_face.dim != size || fd.dim != size {
                        return Some(format!(
                            "FAIL {place}: S={subset:?} — spans_face dim {} \
                             vs oracle dim {}",
                            fd.dim, oracle_face.dim
                        ));
                    }
                    // Same ray set on the face.
                    let mut ours: Vec<&Vec<i64>> =
                        fd.rays_on_face.iter().map(|r| &r.coords).collect();
                    ours.sort();
                    let mut theirs: Vec<&Vec<i64>> = oracle_face
                        .zero_set
                        .iter()
                        .map(|&i| &cone.generators()[i])
                        .collect();
                    theirs.sort();
                    if ours != theirs {
                        return Some(format!(
                            "FAIL {place}: S={subset:?} — face ray sets differ \
                             ({ours:?} vs {theirs:?})"
                        ));
                    }
                    // The functional certifies the face: zero on it,
                    // strictly positive off it.
                    for r in &rays {
                        let value = pairing(&fd.functional, &r.coords);
                        let on_face =
                            fd.rays_on_face.iter().any(|q| q.coords == r.coords);
                        if on_face && value != 0 {
                            return Some(format!(
                                "FAIL {place}: functional {:?} is {value} ≠ 0 \
                                 on face ray {r}",
                                fd.functional
                            ));
                        }
                        if !on_face && value <= 0 {
                            return Some(format!(
                                "FAIL {place}: functional {:?} is {value} ≤ 0 \
                                 off the face at ray {r}",
                                fd.functional
                            ));
                        }
                    }
                }
            }
        }
    }

    // Closed-form pair rules agree with the subgraph computation.
    for pair in isets.iter().combinations(2) {
        let (a, b) = (pair[0], pair[1]);
        let verdict = match pair_predicates(g, a, b) {
            Ok(v) => v,
            Err(e) => return Some(format!("FAIL {place}: pair rule error: {e}")),
        };
        let spans = match spans_face(g, &[a.clone(), b.clone()]) {
            Ok(v) => v.is_some(),
            Err(e) => return Some(format!("FAIL {place}: spans_face error: {e}")),
        };
        out.pairs += 1;
        if verdict.is_two_face != spans {
            return Some(format!(
                "FAIL {place}: pair {a}, {b} — rule says {} ({}), \
                 subgraph says {}",
                verdict.is_two_face, verdict.reason, spans
            ));
        }
    }
    None
}

/// Human-readable tally block for a finished run.
pub fn summary(n: usize, deep: bool, out: &CrosscheckOutcome) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "crosscheck n={n}{}: {} permutations, {} toric, {} component cones",
        if deep { " (deep)" } else { "" },
        out.permutations,
        out.toric,
        out.components
    );
    let _ = writeln!(s, "  ray sets    {} cones match the oracle", out.components);
    let _ = writeln!(s, "  dimensions  {} cones of dimension m+n-1", out.components);
    let _ = writeln!(s, "  verdicts    {} three-route agreements", out.toric);
    if deep {
        let _ = writeln!(s, "  faces       {} subsets |S| <= 3 verified", out.subsets);
        let _ = writeln!(s, "  pairs       {} closed-form pair rules verified", out.pairs);
    }
    s
}

// ======================================================================
// tests
// ======================================================================

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn honest_build_passes_s4_deep() {
        let out = run(4, true);
        assert!(out.passed(), "witness: {:?}", out.failure);
        assert_eq!(out.permutations, 24);
        assert_eq!(out.toric, 22);
        assert!(out.subsets > 0 && out.pairs > 0);
    }

    #[test]
    fn summary_mentions_every_tally() {
        let out = run(3, true);
        let text = summary(3, true, &out);
        assert!(text.contains("crosscheck n=3 (deep): 6 permutations, 6 toric"));
        assert!(text.contains("faces"));
        assert!(text.contains("pairs"));
    }

    #[test]
    fn pairing_truncates_to_the_ray_length() {
        // Functional (0,1,1,0) against the quotient-lattice ray (0,1,-1):
        // only the first three coordinates participate.
        assert_eq!(pairing(&[0, 1, 1, 0], &[0, 1, -1]), 0);
        assert_eq!(pairing(&[0, 1, 1, 0], &[1, 0, 0]), 0);
        assert_eq!(pairing(&[2, 1, 1, 0], &[1, 0, 0]), 2);
    }
}
