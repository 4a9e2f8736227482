//! Demonstrate that the cross-checks actually have teeth: under each
//! injected fault the affected route visibly diverges from the honest
//! ones, and after clearing the fault everything agrees again.
//!
//! All scenarios live in ONE test function: the fault mode is a
//! process-wide switch, so running scenarios concurrently (as the default
//! test harness would) would corrupt each other.  This file is its own
//! integration-test binary — its process never runs the honest unit
//! tests.

use schubcone::edgecone::{classify, rays_of_graph, reduced_dual_rows, MethodSet};
use schubcone::fault::{fault_mode, set_fault_mode, FaultMode};
use schubcone::polyoracle::RationalCone;
use schubcone::rothe::{l_components, regions, rothe_diagram, Permutation};

fn gamma_ray_set_matches_oracle(images: &[usize]) -> bool {
    let p = Permutation::from_images(images.to_vec()).unwrap();
    let reg = regions(&rothe_diagram(&p));
    for comp in l_components(&reg.l) {
        let lg = schubcone::bigraph::LabeledGraph::from_cells(&comp);
        let g = &lg.graph;
        let mut from_gamma: Vec<Vec<i64>> =
            rays_of_graph(g).unwrap().into_iter().map(|r| r.coords).collect();
        from_gamma.sort();
        let dim = g.m() + g.n() - 1;
        let cone = RationalCone::from_inequalities(dim, reduced_dual_rows(g)).unwrap();
        if from_gamma != cone.generators() {
            return false;
        }
    }
    true
}

#[test]
fn faults_are_visible_and_reversible() {
    // -------- honest baseline --------
    assert_eq!(fault_mode(), FaultMode::None);
    assert!(gamma_ray_set_matches_oracle(&[1, 3, 2, 4]));
    let honest = classify(
        &Permutation::from_images(vec![1, 4, 3, 2]).unwrap(),
        &MethodSet::all(),
    )
    .unwrap();
    assert!(honest.consistent);
    assert_eq!(honest.rigid, Some(false));

    // -------- ray-sign fault --------
    // Γ emits the negated ray; the oracle, which never looks at Γ,
    // reconstructs the honest rays, so the ray sets disagree.
    set_fault_mode(FaultMode::RaySign);
    assert_eq!(fault_mode(), FaultMode::RaySign);
    assert!(
        !gamma_ray_set_matches_oracle(&[1, 3, 2, 4]),
        "ray-sign fault must break Γ-vs-oracle ray agreement"
    );
    // The per-route verdicts are sign-invariant, so classification alone
    // does not notice — exactly why the cross-check compares ray sets.
    let faulted = classify(
        &Permutation::from_images(vec![1, 3, 2, 4]).unwrap(),
        &MethodSet::all(),
    )
    .unwrap();
    assert!(faulted.consistent, "verdicts are ray-sign-invariant by design");

    set_fault_mode(FaultMode::None);
    assert!(gamma_ray_set_matches_oracle(&[1, 3, 2, 4]), "fault must be reversible");

    // -------- corollary-pattern fault --------
    // The widened pattern misses the k = 1 hits of [1,4,3,2]: the
    // corollary route flips to "rigid" while graph and oracle still say
    // non-rigid, so the routes disagree and `rigid` becomes None.
    set_fault_mode(FaultMode::CorollaryPattern);
    let faulted = classify(
        &Permutation::from_images(vec![1, 4, 3, 2]).unwrap(),
        &MethodSet::all(),
    )
    .unwrap();
    assert_eq!(faulted.method_verdicts.corollary, Some(true), "fault flips the corollary route");
    assert_eq!(faulted.method_verdicts.graph, Some(false));
    assert_eq!(faulted.method_verdicts.oracle, Some(false));
    assert!(!faulted.consistent, "disagreement must be flagged");
    assert_eq!(faulted.rigid, None, "no combined verdict under disagreement");

    set_fault_mode(FaultMode::None);
    let again = classify(
        &Permutation::from_images(vec![1, 4, 3, 2]).unwrap(),
        &MethodSet::all(),
    )
    .unwrap();
    assert_eq!(again, honest, "clearing the fault restores the honest result");
}
