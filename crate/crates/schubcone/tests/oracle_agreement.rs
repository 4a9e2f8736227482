//! Whole-library agreement sweeps: the combinatorial route (rays Γ(A),
//! faces from connected components, chain patterns) must match the
//! independent exact polyhedral oracle on every permutation of the small
//! symmetric groups, permutation by permutation and face by face.

use std::collections::BTreeSet;

use schubcone::bigraph::{first_independent_sets, LabeledGraph};
use schubcone::edgecone::{
    classify, pair_predicates, rays_of_graph, reduced_dual_rows, spans_face, MethodSet,
};
use schubcone::polyoracle::RationalCone;
use schubcone::rothe::{is_toric, l_components, regions, rothe_diagram, Cell, Permutation};

/// The component graphs (with labels) of a permutation's L-region.
fn component_graphs(p: &Permutation) -> Vec<LabeledGraph> {
    let reg = regions(&rothe_diagram(p));
    l_components(&reg.l).iter().map(LabeledGraph::from_cells).collect()
}

/// Pair a balanced length-(m+n) functional with a normal-form vector.
fn pairing(functional: &[i64], coords: &[i64]) -> i128 {
    functional[..coords.len()]
        .iter()
        .zip(coords)
        .map(|(&a, &b)| a as i128 * b as i128)
        .sum()
}

/// Γ must produce exactly the extremal rays the oracle reconstructs from
/// the inequality system alone, for every component of every toric
/// permutation in S₂..S₆.
#[test]
fn gamma_rays_equal_oracle_rays_up_to_s6() {
    let mut components = 0;
    for n in 2..=6 {
        for p in Permutation::all_lexicographic(n) {
            if !is_toric(&p).0 {
                continue;
            }
            for lg in component_graphs(&p) {
                let g = &lg.graph;
                let mut from_gamma: Vec<Vec<i64>> =
                    rays_of_graph(g).unwrap().into_iter().map(|r| r.coords).collect();
                from_gamma.sort();
                let dim = g.m() + g.n() - 1;
                let cone = RationalCone::from_inequalities(dim, reduced_dual_rows(g)).unwrap();
                assert_eq!(from_gamma, cone.generators(), "π = {p}");
                // the dual rows span the whole dual space: dim σ = m+n−1
                assert_eq!(cone.cone_dim(), dim, "π = {p}");
                components += 1;
            }
        }
    }
    assert_eq!(components, 338, "components across toric π ∈ S₂..S₆");
}

/// The three classification routes must agree on every permutation of
/// S₂..S₆, and the sweep totals must match the frozen counts.
#[test]
fn three_routes_agree_up_to_s6() {
    // (n, total, toric, rigid-among-toric)
    let expect = [(2usize, 2usize, 2usize, 2usize), (3, 6, 6, 5), (4, 24, 22, 16), (5, 120, 90, 58), (6, 720, 394, 227)];
    for (n, total, toric_count, rigid_count) in expect {
        let mut seen = 0;
        let mut toric = 0;
        let mut rigid = 0;
        for p in Permutation::all_lexicographic(n) {
            seen += 1;
            let c = classify(&p, &MethodSet::all()).unwrap();
            assert!(c.consistent, "routes disagree on {p}");
            if c.toric {
                toric += 1;
                assert_eq!(c.complexity, 0, "toric ⟺ complexity 0 on {p}");
                if c.rigid == Some(true) {
                    rigid += 1;
                } else {
                    assert!(!c.witnesses.is_empty() || !c.method_verdicts.present().iter().any(|&(m, _)| m == "graph" || m == "corollary"),
                        "non-rigid {p} must carry a witness");
                }
            } else {
                assert!(c.complexity > 0, "non-toric ⟹ positive complexity on {p}");
                assert_eq!(c.rigid, None);
            }
        }
        assert_eq!(seen, total);
        assert_eq!(toric, toric_count, "toric count in S_{n}");
        assert_eq!(rigid, rigid_count, "rigid count in S_{n}");
    }
}

/// Face-by-face agreement on all toric S₅ components: for every subset
/// S ⊆ 𝓘⁽¹⁾ with |S| ≤ 3, the combinatorial `spans_face` answer must
/// match the dimension of the oracle's minimal face containing the same
/// rays, and the rays reported on the face must coincide.
#[test]
fn spans_face_matches_oracle_minimal_face_on_s5() {
    let mut faces_checked = 0usize;
    for p in Permutation::all_lexicographic(5) {
        if !is_toric(&p).0 {
            continue;
        }
        for lg in component_graphs(&p) {
            let g = &lg.graph;
            let isets = first_independent_sets(g).unwrap();
            let rays = rays_of_graph(g).unwrap();
            let dim = g.m() + g.n() - 1;
            let cone = RationalCone::from_inequalities(dim, reduced_dual_rows(g)).unwrap();
            // Map each ray to its index among the oracle's generators.
            let ray_index = |coords: &Vec<i64>| -> usize {
                cone.generators().iter().position(|x| x == coords).expect("ray known to oracle")
            };

            let k = isets.len();
            let mut subsets: Vec<Vec<usize>> = Vec::new();
            for i in 0..k {
                subsets.push(vec![i]);
                for j in (i + 1)..k {
                    subsets.push(vec![i, j]);
                    for l in (j + 1)..k {
                        subsets.push(vec![i, j, l]);
                    }
                }
            }
            for sub in subsets {
                let members: Vec<_> = sub.iter().map(|&i| isets[i].clone()).collect();
                let combinatorial = spans_face(g, &members).unwrap();
                let oracle_subset: BTreeSet<usize> =
                    sub.iter().map(|&i| ray_index(&rays[i].coords)).collect();
                let oracle_face = cone.minimal_face(&oracle_subset).unwrap();
                match combinatorial {
                    Some(face) => {
                        assert_eq!(face.dim, oracle_face.dim, "dim mismatch on {p}");
                        // same rays on the face
                        let ours: BTreeSet<usize> =
                            face.rays_on_face.iter().map(|r| ray_index(&r.coords)).collect();
                        assert_eq!(ours, oracle_face.zero_set, "ray set mismatch on {p}");
                        // the functional vanishes on the face and is
                        // positive off it
                        for r in &rays {
                            let v = pairing(&face.functional, &r.coords);
                            if face.rays_on_face.contains(r) {
                                assert_eq!(v, 0, "functional must vanish on face ({p})");
                            } else {
                                assert!(v > 0, "functional must be positive off face ({p})");
                            }
                        }
                    }
                    None => {
                        assert_ne!(
                            oracle_face.dim,
                            sub.len(),
                            "spans_face said no but oracle found dim {} on {p}",
                            sub.len()
                        );
                    }
                }
                faces_checked += 1;
            }
        }
    }
    assert_eq!(faces_checked, 1732, "subsets across toric S₅ components");
}

/// The pairwise combinatorial rules agree with the geometric test on
/// every pair of rays of every toric S₅ and S₆ component.
#[test]
fn pair_rules_match_spans_face_up_to_s6() {
    let mut pairs = 0usize;
    for n in [5usize, 6] {
        for p in Permutation::all_lexicographic(n) {
            if !is_toric(&p).0 {
                continue;
            }
            for lg in component_graphs(&p) {
                let g = &lg.graph;
                let isets = first_independent_sets(g).unwrap();
                for i in 0..isets.len() {
                    for j in (i + 1)..isets.len() {
                        let verdict = pair_predicates(g, &isets[i], &isets[j]).unwrap();
                        let geometric =
                            spans_face(g, &[isets[i].clone(), isets[j].clone()]).unwrap();
                        assert_eq!(
                            verdict.is_two_face,
                            geometric.is_some(),
                            "pair rule vs geometry on {p}: {} / {}",
                            isets[i],
                            isets[j]
                        );
                        pairs += 1;
                    }
                }
            }
        }
    }
    assert_eq!(pairs, 5025, "pairs across toric S₅ and S₆ components");
}

/// Spot-check the big S₁₀ example end to end through the public API:
/// the product of row and column counts stays far beyond the sweep sizes
/// above, so this guards the large-graph paths.
#[test]
fn s10_example_full_agreement() {
    let p = Permutation::from_images(vec![1, 10, 8, 7, 6, 9, 4, 5, 2, 3]).unwrap();
    let c = classify(&p, &MethodSet::all()).unwrap();
    assert!(c.toric && !c.trivial);
    assert_eq!(c.rigid, Some(false));
    assert!(c.consistent);

    let lgs = component_graphs(&p);
    assert_eq!(lgs.len(), 1);
    let g = &lgs[0].graph;
    assert_eq!((g.m(), g.n()), (9, 8));
    let mut from_gamma: Vec<Vec<i64>> =
        rays_of_graph(g).unwrap().into_iter().map(|r| r.coords).collect();
    from_gamma.sort();
    let cone = RationalCone::from_inequalities(16, reduced_dual_rows(g)).unwrap();
    assert_eq!(from_gamma.len(), 21);
    assert_eq!(from_gamma, cone.generators());

    // The unique local essential chain, global = local for this π.
    assert_eq!(
        lgs[0].graph.edges().len(),
        47,
        "the L-region has 47 cells, all in one component"
    );
    assert_eq!(
        c.components[0].essential_chain,
        vec![
            Cell::new(9, 2),
            Cell::new(7, 3),
            Cell::new(6, 4),
            Cell::new(5, 6),
            Cell::new(3, 8)
        ]
    );
}
