//! The edge cone σ of a bipartite graph and rigidity of its toric variety.
//!
//! For a connected bipartite graph 𝒢 on U₁ ⊔ U₂ with |U₁| = m and |U₂| = n,
//! the *edge cone* σ ⊂ N_ℝ ≅ ℝ^{m+n−1} is the cone whose dual σ^∨ is
//! generated by the edge functionals e_i + f_j, one per edge (i, j); the
//! extremal rays of σ itself are the vectors Γ(A) attached to the first
//! independent sets A ∈ 𝓘⁽¹⁾(𝒢).  Every face of σ is cut out by a
//! nonnegative combination of edge functionals, so faces can be read off
//! combinatorially: the minimal face containing {Γ(A) : A ∈ S} has
//! dimension c(𝒢[S]) − 1, where 𝒢[S] is the intersection of the spanning
//! subgraphs 𝒢{A} associated to the members of S and c counts connected
//! components (isolated vertices included).
//!
//! Everything here is exact integer arithmetic; no floating point is used
//! anywhere.
//!
//! The module ends in [`classify`], which decides for a permutation π
//! whether the variety attached to π is toric and, if so, classifies its
//! rigidity by up to three mutually independent routes:
//!
//! 1. **graph** — enumerate the three-dimensional faces of the edge cone of
//!    every L-component via [`three_faces`] and demand that each carries
//!    exactly three extremal rays;
//! 2. **corollary** — scan the essential chain of each component for the
//!    non-simplicial-face pattern via
//!    [`nonsimplicial_three_face_patterns`] (single-essential components
//!    fall back to the complete-bipartite rule or defer to route 1);
//! 3. **oracle** — hand the block-diagonal system of reduced edge
//!    functionals to the general-purpose polyhedral machinery in
//!    [`crate::polyoracle`] and ask it directly.
//!
//! The three routes share no face-enumeration code, which is the point:
//! agreement between them is strong evidence that each is implemented
//! correctly, and [`Classification::consistent`] records whether they in
//! fact agree.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::bigraph::{
    self, associated_subgraph, first_independent_sets, BigraphError, BipartiteGraph,
    IndependentSet, LabeledGraph, Sidedness, SpanningSubgraph, Vertex,
};
use crate::fault::{fault_mode, FaultMode};
use crate::linalg;
use crate::polyoracle::{PolyError, RationalCone};
use crate::rothe::{
    complexity, essential_set, is_toric, l_components, regions, rothe_diagram, Cell, Permutation,
};

// ======================================================================
// errors
// ======================================================================

/// Errors produced by edge-cone operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EdgeConeError {
    /// The given independent set is not a first independent set of the
    /// graph, so it names no extremal ray.
    NotFirstIndependent(IndependentSet),
    /// Rigidity classification was requested for a permutation whose
    /// variety is not toric.
    NotToric {
        /// The (positive) complexity of the torus action.
        complexity: usize,
    },
    /// The essential-chain pattern scan requires at least three cells.
    TooFewEssentials {
        /// How many cells the chain actually has.
        count: usize,
    },
    /// A face query was malformed (empty subset, or more than three
    /// distinct members).
    InvalidFaceQuery(String),
    /// An unrecognized method name was given to [`MethodSet::from_str`].
    UnknownMethod(String),
    /// An underlying graph operation failed.
    Bigraph(BigraphError),
    /// The exact polyhedral oracle failed.
    Poly(PolyError),
}

impl fmt::Display for EdgeConeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeConeError::NotFirstIndependent(a) => {
                write!(f, "independent set {a} is not a first independent set of this graph")
            }
            EdgeConeError::NotToric { complexity } => write!(
                f,
                "variety is not toric (torus-action complexity {complexity}); \
                 rigidity classification applies only in the toric case"
            ),
            EdgeConeError::TooFewEssentials { count } => write!(
                f,
                "pattern scan requires an essential chain with at least 3 cells, got {count}"
            ),
            EdgeConeError::InvalidFaceQuery(msg) => write!(f, "invalid face query: {msg}"),
            EdgeConeError::UnknownMethod(name) => write!(
                f,
                "unknown classification method `{name}` (expected graph, corollary, or oracle)"
            ),
            EdgeConeError::Bigraph(e) => write!(f, "graph error: {e}"),
            EdgeConeError::Poly(e) => write!(f, "polyhedral oracle error: {e}"),
        }
    }
}

impl std::error::Error for EdgeConeError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            EdgeConeError::Bigraph(e) => Some(e),
            EdgeConeError::Poly(e) => Some(e),
            _ => None,
        }
    }
}

impl From<BigraphError> for EdgeConeError {
    fn from(e: BigraphError) -> Self {
        EdgeConeError::Bigraph(e)
    }
}

impl From<PolyError> for EdgeConeError {
    fn from(e: PolyError) -> Self {
        EdgeConeError::Poly(e)
    }
}

// ======================================================================
// rays: the Γ map on first independent sets
// ======================================================================

/// An extremal ray Γ(A) of the edge cone, in normal form, together with
/// the first independent set that produced it.
///
/// `coords` lives in ℤ^{m+n−1}: the lift χ_{N(A₂)} + χ_{N(A₁)} − χ_{A₁} −
/// χ_{A₂} ∈ ℤ^{m+n} is translated along the all-ones relation until its
/// last coordinate vanishes, the last coordinate is dropped, and the
/// result is made primitive.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RayVector {
    /// Primitive normal-form coordinates in ℤ^{m+n−1}.
    pub coords: Vec<i64>,
    /// The first independent set A with Γ(A) = `coords`.
    pub source: IndependentSet,
}

impl fmt::Display for RayVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\u{0393}{} = (", self.source)?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Decide whether `a` is a first independent set of `g` without
/// enumerating 𝓘⁽¹⁾(g).
///
/// One-sided sets must be U₁∖{v} (resp. U₂∖{w}) with full neighborhood;
/// two-sided sets must satisfy the closure conditions A₂ = U₂ ∖ N(A₁) and
/// A₁ = U₁ ∖ N(A₂).  In every case 𝒢{A} must have exactly two connected
/// components.
fn is_first_independent(g: &BipartiteGraph, a: &IndependentSet) -> Result<bool, BigraphError> {
    // Revalidate against *this* graph: ranges, nonemptiness, independence.
    let a = match IndependentSet::new(g, a.a1().clone(), a.a2().clone()) {
        Ok(checked) => checked,
        Err(_) => return Ok(false),
    };
    let u1: BTreeSet<usize> = (1..=g.m()).collect();
    let u2: BTreeSet<usize> = (1..=g.n()).collect();
    let shape_ok = match a.sidedness() {
        Sidedness::OneSidedU1 => a.a1().len() + 1 == g.m() && g.row_neighbors(a.a1()) == u2,
        Sidedness::OneSidedU2 => a.a2().len() + 1 == g.n() && g.col_neighbors(a.a2()) == u1,
        Sidedness::TwoSided => {
            let closure_a2: BTreeSet<usize> =
                u2.difference(&g.row_neighbors(a.a1())).copied().collect();
            let closure_a1: BTreeSet<usize> =
                u1.difference(&g.col_neighbors(a.a2())).copied().collect();
            closure_a2 == *a.a2() && closure_a1 == *a.a1()
        }
    };
    if !shape_ok {
        return Ok(false);
    }
    Ok(associated_subgraph(g, &a)?.component_count() == 2)
}

/// Compute Γ(A) assuming `a` is already known to belong to 𝓘⁽¹⁾(g).
fn gamma_unchecked(g: &BipartiteGraph, a: &IndependentSet) -> RayVector {
    let m = g.m();
    let n = g.n();
    // Lift in ℤ^{m+n}: +1 on rows N(A₂) and columns N(A₁), −1 on A₁ and A₂.
    let mut lift = vec![0i64; m + n];
    for i in g.col_neighbors(a.a2()) {
        lift[i - 1] += 1;
    }
    for j in g.row_neighbors(a.a1()) {
        lift[m + j - 1] += 1;
    }
    for &i in a.a1() {
        lift[i - 1] -= 1;
    }
    for &j in a.a2() {
        lift[m + j - 1] -= 1;
    }
    if fault_mode() == FaultMode::RaySign {
        for x in lift.iter_mut() {
            *x = -*x;
        }
    }
    // Translate along the relation Σ rows − Σ cols = 0 until the last
    // coordinate vanishes, then drop it.
    let t = lift[m + n - 1];
    let mut w: Vec<i64> = (0..m + n - 1)
        .map(|k| lift[k] + if k < m { t } else { -t })
        .collect();
    linalg::primitive_i64(&mut w);
    RayVector { coords: w, source: a.clone() }
}

/// The extremal ray Γ(A) of the edge cone of `g` named by the first
/// independent set `a`.
///
/// # Errors
///
/// [`EdgeConeError::NotFirstIndependent`] if `a` ∉ 𝓘⁽¹⁾(g).
///
/// # Examples
///
/// ```
/// use std::collections::BTreeSet;
/// use schubcone::bigraph::{BipartiteGraph, IndependentSet};
/// use schubcone::edgecone::ray_of;
///
/// // K_{2,2} minus the edge (1,1); removing vertex 1 from U₁ leaves {2}.
/// let g = BipartiteGraph::new(2, 2, [(1, 2), (2, 1), (2, 2)]).unwrap();
/// let a = IndependentSet::new(&g, BTreeSet::from([2]), BTreeSet::new()).unwrap();
/// assert_eq!(ray_of(&g, &a).unwrap().coords, vec![1, 0, 0]);
/// ```
pub fn ray_of(g: &BipartiteGraph, a: &IndependentSet) -> Result<RayVector, EdgeConeError> {
    if !is_first_independent(g, a)? {
        return Err(EdgeConeError::NotFirstIndependent(a.clone()));
    }
    Ok(gamma_unchecked(g, a))
}

/// All extremal rays of the edge cone of `g`, in the enumeration order of
/// [`first_independent_sets`].
pub fn rays_of_graph(g: &BipartiteGraph) -> Result<Vec<RayVector>, EdgeConeError> {
    Ok(first_independent_sets(g)?.iter().map(|a| gamma_unchecked(g, a)).collect())
}

// ======================================================================
// dual generators of σ^∨
// ======================================================================

/// A generator e_i + f_j of the dual edge cone σ^∨ ⊂ M_ℝ ≅ ℝ^{m+n},
/// remembering the edge it came from.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct DualGenerator {
    /// The vector e_i + f_j ∈ ℤ^{m+n} (rows first, then columns).
    pub coords: Vec<i64>,
    /// The edge (i, j) this functional belongs to.
    pub edge: (usize, usize),
}

impl fmt::Display for DualGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}+f{}", self.edge.0, self.edge.1)
    }
}

/// The generators e_i + f_j of σ^∨, one per edge, in sorted edge order.
///
/// Each generator is *balanced*: its row coordinates and column
/// coordinates sum to the same value, so it pairs with normal-form rays
/// through the first m+n−1 coordinates alone.
///
/// # Examples
///
/// ```
/// use schubcone::bigraph::BipartiteGraph;
/// use schubcone::edgecone::dual_generators;
///
/// let g = BipartiteGraph::new(2, 2, [(1, 2), (2, 1), (2, 2)]).unwrap();
/// let gens = dual_generators(&g);
/// assert_eq!(gens.len(), 3);
/// assert_eq!(gens[0].edge, (1, 2));
/// assert_eq!(gens[0].coords, vec![1, 0, 0, 1]);
/// ```
pub fn dual_generators(g: &BipartiteGraph) -> Vec<DualGenerator> {
    let m = g.m();
    let n = g.n();
    g.edges()
        .iter()
        .map(|&(i, j)| {
            let mut coords = vec![0i64; m + n];
            coords[i - 1] = 1;
            coords[m + j - 1] = 1;
            DualGenerator { coords, edge: (i, j) }
        })
        .collect()
}

/// The reduced dual rows: e_i + f_j expressed in the m+n−1 coordinates of
/// ray normal form (the f_n coordinate is eliminated), in sorted edge
/// order.  These are exactly the inequality rows that cut out the edge
/// cone in ℝ^{m+n−1}.
pub fn reduced_dual_rows(g: &BipartiteGraph) -> Vec<Vec<i64>> {
    let m = g.m();
    let n = g.n();
    g.edges()
        .iter()
        .map(|&(i, j)| {
            let mut row = vec![0i64; m + n - 1];
            row[i - 1] = 1;
            if j < n {
                row[m + j - 1] = 1;
            }
            row
        })
        .collect()
}

/// Pair a balanced M-functional of length m+n with a normal-form vector of
/// length m+n−1 (drop the last functional coordinate; balance makes this
/// exact).
fn m_pairing(functional: &[i64], coords: &[i64]) -> i128 {
    linalg::dot(&functional[..coords.len()], coords)
}

// ======================================================================
// faces via connected components of 𝒢[S]
// ======================================================================

/// A face of the edge cone described combinatorially.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceDescriptor {
    /// Dimension of the face (1, 2, or 3).
    pub dim: usize,
    /// The first independent sets whose rays define the face (sorted for
    /// [`spans_face`]; the first triple found for [`three_faces`]).
    pub defining_sets: Vec<IndependentSet>,
    /// The supporting functional in ℤ^{m+n}: the degree sequence of 𝒢[S].
    /// It vanishes on the face and is strictly positive on every other
    /// ray of the cone.
    pub functional: Vec<i64>,
    /// All extremal rays lying on the face, sorted by coordinates.
    pub rays_on_face: Vec<RayVector>,
}

/// Build the descriptor for the face cut out by `sub` = 𝒢[S].
fn face_from_subgraph(
    g: &BipartiteGraph,
    isets: &[IndependentSet],
    sub: &SpanningSubgraph,
    defining_sets: Vec<IndependentSet>,
    dim: usize,
) -> FaceDescriptor {
    let m = g.m();
    let n = g.n();
    // The supporting functional is the degree sequence of 𝒢[S]: the sum of
    // the dual generators of its kept edges.
    let mut functional = vec![0i64; m + n];
    for &(i, j) in sub.kept_edges() {
        functional[i - 1] += 1;
        functional[m + j - 1] += 1;
    }
    let mut rays_on_face: Vec<RayVector> = isets
        .iter()
        .map(|a| gamma_unchecked(g, a))
        .filter(|r| m_pairing(&functional, &r.coords) == 0)
        .collect();
    rays_on_face.sort();
    FaceDescriptor { dim, defining_sets, functional, rays_on_face }
}

/// Decide whether the rays Γ(A), A ∈ `s`, span a face of dimension |s|.
///
/// Returns `Some(face)` exactly when 𝒢[S] has |s| + 1 connected
/// components (so the minimal face containing the rays has dimension
/// |s|), and `None` otherwise.  Duplicates in `s` are collapsed before
/// counting.
///
/// # Errors
///
/// * [`EdgeConeError::InvalidFaceQuery`] if `s` is empty or has more than
///   three distinct members;
/// * [`EdgeConeError::NotFirstIndependent`] if some member of `s` is not
///   in 𝓘⁽¹⁾(g).
///
/// # Examples
///
/// ```
/// use std::collections::BTreeSet;
/// use schubcone::bigraph::{BipartiteGraph, IndependentSet};
/// use schubcone::edgecone::spans_face;
///
/// let g = BipartiteGraph::new(2, 2, [(1, 2), (2, 1), (2, 2)]).unwrap();
/// let a = IndependentSet::new(&g, BTreeSet::from([2]), BTreeSet::new()).unwrap();
/// let c = IndependentSet::new(&g, BTreeSet::from([1]), BTreeSet::from([1])).unwrap();
/// let face = spans_face(&g, &[a, c]).unwrap().expect("a 2-face");
/// assert_eq!(face.dim, 2);
/// assert_eq!(face.functional, vec![0, 1, 1, 0]);
/// ```
pub fn spans_face(
    g: &BipartiteGraph,
    s: &[IndependentSet],
) -> Result<Option<FaceDescriptor>, EdgeConeError> {
    let set: BTreeSet<IndependentSet> = s.iter().cloned().collect();
    let d = set.len();
    if d == 0 {
        return Err(EdgeConeError::InvalidFaceQuery("the defining subset is empty".into()));
    }
    if d > 3 {
        return Err(EdgeConeError::InvalidFaceQuery(format!(
            "the defining subset has {d} distinct members; only sizes 1..=3 are supported"
        )));
    }
    let isets = first_independent_sets(g)?;
    for a in &set {
        if !isets.contains(a) {
            return Err(EdgeConeError::NotFirstIndependent(a.clone()));
        }
    }
    // 𝒢[S] = the intersection of the kept-edge sets of the members of S.
    let mut kept: Option<BTreeSet<(usize, usize)>> = None;
    for a in &set {
        let edges = associated_subgraph(g, a)?.kept_edges().clone();
        kept = Some(match kept {
            None => edges,
            Some(prev) => prev.intersection(&edges).copied().collect(),
        });
    }
    let sub = SpanningSubgraph::new(g.clone(), kept.unwrap_or_default())?;
    if sub.component_count() != d + 1 {
        return Ok(None);
    }
    Ok(Some(face_from_subgraph(g, &isets, &sub, set.into_iter().collect(), d)))
}

/// All distinct three-dimensional faces of the edge cone of `g`.
///
/// Every triple S ⊆ 𝓘⁽¹⁾(g) with c(𝒢[S]) = 4 determines a 3-face; faces
/// found by several triples are reported once (the first triple found, in
/// enumeration order, is kept as `defining_sets`).  Output is sorted by
/// the coordinate lists of the rays on each face.  When dim σ = 3 the
/// cone itself appears, carried by the zero functional.
pub fn three_faces(g: &BipartiteGraph) -> Result<Vec<FaceDescriptor>, EdgeConeError> {
    let isets = first_independent_sets(g)?;
    if isets.len() < 3 {
        return Ok(Vec::new());
    }
    let mut kept: Vec<BTreeSet<(usize, usize)>> = Vec::with_capacity(isets.len());
    for a in &isets {
        kept.push(associated_subgraph(g, a)?.kept_edges().clone());
    }
    let mut seen: BTreeMap<Vec<Vec<i64>>, FaceDescriptor> = BTreeMap::new();
    for t in (0..isets.len()).combinations(3) {
        let inter: BTreeSet<(usize, usize)> = kept[t[0]]
            .iter()
            .filter(|e| kept[t[1]].contains(e) && kept[t[2]].contains(e))
            .copied()
            .collect();
        let sub = SpanningSubgraph::new(g.clone(), inter)?;
        if sub.component_count() != 4 {
            continue;
        }
        let defining = vec![isets[t[0]].clone(), isets[t[1]].clone(), isets[t[2]].clone()];
        let face = face_from_subgraph(g, &isets, &sub, defining, 3);
        let key: Vec<Vec<i64>> = face.rays_on_face.iter().map(|r| r.coords.clone()).collect();
        seen.entry(key).or_insert(face);
    }
    Ok(seen.into_values().collect())
}

// ======================================================================
// pairwise 2-face predicates
// ======================================================================

/// Why a pair of extremal rays does or does not span a 2-face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairReason {
    /// One ray is one-sided in U₁, the other one-sided in U₂: always a
    /// 2-face.
    OppositeOneSided,
    /// Both rays are two-sided: always a 2-face.
    BothTwoSided,
    /// Same-side one-sided pair with no blocking member: a 2-face.
    SameSideFree,
    /// Same-side one-sided pair blocked by a member whose same-side part
    /// is exactly the intersection of the two.
    SameSideBlocked {
        /// The member of 𝓘⁽¹⁾ that blocks the pair.
        blocker: IndependentSet,
    },
    /// Mixed pair (one one-sided, one two-sided) with no obstruction: a
    /// 2-face.
    MixedFree,
    /// Mixed pair where the removed vertex is the *whole* same-side part
    /// of the two-sided member.
    MixedSingleton {
        /// The removed vertex of the one-sided member.
        vertex: Vertex,
    },
    /// Mixed pair where some other two-sided member realizes the removed
    /// vertex as a set difference of same-side parts.
    MixedDifference {
        /// The removed vertex of the one-sided member.
        vertex: Vertex,
        /// A two-sided D with C∖D equal to the removed vertex (same-side
        /// parts).
        witness: IndependentSet,
    },
}

impl fmt::Display for PairReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairReason::OppositeOneSided => write!(f, "one-sided in opposite parts"),
            PairReason::BothTwoSided => write!(f, "both two-sided"),
            PairReason::SameSideFree => write!(f, "same-side pair, no blocking member"),
            PairReason::SameSideBlocked { blocker } => {
                write!(f, "same-side pair blocked by {blocker}")
            }
            PairReason::MixedFree => write!(f, "mixed pair, no obstruction"),
            PairReason::MixedSingleton { vertex } => {
                write!(f, "removed vertex {vertex} is the whole same-side part")
            }
            PairReason::MixedDifference { vertex, witness } => {
                write!(f, "removed vertex {vertex} realized as difference with {witness}")
            }
        }
    }
}

/// The verdict of the combinatorial 2-face test for a pair of rays.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairVerdict {
    /// Whether Γ(a) and Γ(b) span a 2-face.
    pub is_two_face: bool,
    /// The rule that decided it.
    pub reason: PairReason,
}

/// Decide purely combinatorially whether the rays of two first independent
/// sets span a 2-face, without computing any connected components.
///
/// The rules, by sidedness of the (unordered) pair:
/// * opposite one-sided, or both two-sided: always a 2-face;
/// * same-side one-sided U∖{v}, U∖{v′}: blocked exactly when some member
///   of 𝓘⁽¹⁾ has same-side part U∖{v,v′};
/// * mixed (U₁∖{v} with two-sided C): blocked exactly when v ∈ C₁ and
///   either C₁ = {v} or some two-sided D has C₁∖D₁ = {v} (symmetrically
///   for U₂).
///
/// For edge cones of toric matrix Schubert varieties this agrees with
/// [`spans_face`] on every pair.
///
/// # Errors
///
/// * [`EdgeConeError::NotFirstIndependent`] if `a` or `b` is not in
///   𝓘⁽¹⁾(g);
/// * [`EdgeConeError::InvalidFaceQuery`] if `a` = `b`.
pub fn pair_predicates(
    g: &BipartiteGraph,
    a: &IndependentSet,
    b: &IndependentSet,
) -> Result<PairVerdict, EdgeConeError> {
    let isets = first_independent_sets(g)?;
    for x in [a, b] {
        if !isets.contains(x) {
            return Err(EdgeConeError::NotFirstIndependent(x.clone()));
        }
    }
    if a == b {
        return Err(EdgeConeError::InvalidFaceQuery("the two members must be distinct".into()));
    }
    // Order so the sidedness pair is sorted (U₁ < U₂ < two-sided).
    let (x, y) = if a.sidedness() <= b.sidedness() { (a, b) } else { (b, a) };
    let two_face = |is: bool, reason: PairReason| Ok(PairVerdict { is_two_face: is, reason });
    match (x.sidedness(), y.sidedness()) {
        (Sidedness::OneSidedU1, Sidedness::OneSidedU2) => {
            two_face(true, PairReason::OppositeOneSided)
        }
        (Sidedness::TwoSided, Sidedness::TwoSided) => two_face(true, PairReason::BothTwoSided),
        (Sidedness::OneSidedU1, Sidedness::OneSidedU1) => {
            // U₁∖{v} ∩ U₁∖{v′} = U₁∖{v,v′}; blocked when it is the row
            // part of any member (for m = 2 it is empty and matches the
            // one-sided U₂ members).
            let tgt: BTreeSet<usize> = x.a1().intersection(y.a1()).copied().collect();
            match isets.iter().find(|c| *c.a1() == tgt) {
                Some(c) => two_face(false, PairReason::SameSideBlocked { blocker: c.clone() }),
                None => two_face(true, PairReason::SameSideFree),
            }
        }
        (Sidedness::OneSidedU2, Sidedness::OneSidedU2) => {
            let tgt: BTreeSet<usize> = x.a2().intersection(y.a2()).copied().collect();
            match isets.iter().find(|c| *c.a2() == tgt) {
                Some(c) => two_face(false, PairReason::SameSideBlocked { blocker: c.clone() }),
                None => two_face(true, PairReason::SameSideFree),
            }
        }
        (Sidedness::OneSidedU1, Sidedness::TwoSided) => {
            let v = (1..=g.m()).find(|v| !x.a1().contains(v)).expect("one removed row");
            let c1 = y.a1();
            if !c1.contains(&v) {
                return two_face(true, PairReason::MixedFree);
            }
            if c1.len() == 1 {
                return two_face(false, PairReason::MixedSingleton { vertex: Vertex::U1(v) });
            }
            let singleton = BTreeSet::from([v]);
            let hit = isets.iter().find(|d| {
                d.sidedness() == Sidedness::TwoSided
                    && c1.difference(d.a1()).copied().collect::<BTreeSet<_>>() == singleton
            });
            match hit {
                Some(d) => two_face(
                    false,
                    PairReason::MixedDifference { vertex: Vertex::U1(v), witness: d.clone() },
                ),
                None => two_face(true, PairReason::MixedFree),
            }
        }
        (Sidedness::OneSidedU2, Sidedness::TwoSided) => {
            let w = (1..=g.n()).find(|w| !x.a2().contains(w)).expect("one removed column");
            let c2 = y.a2();
            if !c2.contains(&w) {
                return two_face(true, PairReason::MixedFree);
            }
            if c2.len() == 1 {
                return two_face(false, PairReason::MixedSingleton { vertex: Vertex::U2(w) });
            }
            let singleton = BTreeSet::from([w]);
            let hit = isets.iter().find(|d| {
                d.sidedness() == Sidedness::TwoSided
                    && c2.difference(d.a2()).copied().collect::<BTreeSet<_>>() == singleton
            });
            match hit {
                Some(d) => two_face(
                    false,
                    PairReason::MixedDifference { vertex: Vertex::U2(w), witness: d.clone() },
                ),
                None => two_face(true, PairReason::MixedFree),
            }
        }
        // Sidedness was sorted above, so the remaining combinations
        // cannot occur.
        _ => unreachable!("pair sidedness was sorted"),
    }
}

// ======================================================================
// essential-chain patterns (the corollary route)
// ======================================================================

/// Where a pattern hit sits in the essential chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PatternKind {
    /// The hit involves a sentinel: j = 1 or j = k+1.
    Boundary,
    /// The hit is between two genuine chain neighbors.
    Interior,
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternKind::Boundary => write!(f, "boundary"),
            PatternKind::Interior => write!(f, "interior"),
        }
    }
}

/// A chain cell witnessing a non-simplicial three-dimensional face.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PatternWitness {
    /// 1-based position j in the essential chain.
    pub index: usize,
    /// The chain cell (x_j, y_j) itself.
    pub cell: Cell,
    /// Whether the pattern touches a chain end.
    pub kind: PatternKind,
}

impl fmt::Display for PatternWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "j={}: cell {} ({})", self.index, self.cell, self.kind)
    }
}

/// Scan an essential chain (x₁,y₁)…(x_{k+1},y_{k+1}) for the unified
/// non-rigidity pattern.  With the sentinels x_{k+2} = 1 and y₀ = 1:
///
///   the cone has a non-simplicial 3-face  ⟺  ∃ j ∈ [1, k+1]:
///       x_j = x_{j+1} + 1  and  y_j = y_{j−1} + 1.
///
/// Every hit is returned; `Boundary` marks hits at j = 1 or j = k+1.
fn unified_pattern_witnesses(chain: &[Cell]) -> Vec<PatternWitness> {
    let gap = if fault_mode() == FaultMode::CorollaryPattern { 2 } else { 1 };
    let len = chain.len();
    let mut out = Vec::new();
    for j in 1..=len {
        let x_j = chain[j - 1].row;
        let y_j = chain[j - 1].col;
        let x_next = if j == len { 1 } else { chain[j].row };
        let y_prev = if j == 1 { 1 } else { chain[j - 2].col };
        if x_j == x_next + gap && y_j == y_prev + gap {
            let kind =
                if j == 1 || j == len { PatternKind::Boundary } else { PatternKind::Interior };
            out.push(PatternWitness { index: j, cell: chain[j - 1], kind });
        }
    }
    out
}

/// Find every cell of an essential chain that witnesses a non-simplicial
/// three-dimensional face of the edge cone, by the chain pattern alone.
///
/// `ess` must be a valid local essential chain of an m×n component:
/// x strictly descending from x₁ = m, y strictly ascending to y_{k+1} = n,
/// all entries ≥ 2.  The returned list is empty exactly when the cone is
/// rigid.
///
/// # Errors
///
/// * [`EdgeConeError::TooFewEssentials`] if the chain has fewer than 3
///   cells (the short chains are handled by other rules);
/// * [`EdgeConeError::Bigraph`] if the chain is not a valid essential
///   chain for an m×n component.
///
/// # Examples
///
/// ```
/// use schubcone::edgecone::nonsimplicial_three_face_patterns;
/// use schubcone::rothe::Cell;
///
/// let chain = [
///     Cell::new(9, 2), Cell::new(7, 3), Cell::new(6, 4),
///     Cell::new(5, 6), Cell::new(3, 8),
/// ];
/// let hits = nonsimplicial_three_face_patterns(&chain, 9, 8).unwrap();
/// let cells: Vec<(usize, usize)> = hits.iter().map(|w| (w.cell.row, w.cell.col)).collect();
/// assert_eq!(cells, vec![(7, 3), (6, 4)]);
/// ```
pub fn nonsimplicial_three_face_patterns(
    ess: &[Cell],
    m: usize,
    n: usize,
) -> Result<Vec<PatternWitness>, EdgeConeError> {
    if ess.len() < 3 {
        return Err(EdgeConeError::TooFewEssentials { count: ess.len() });
    }
    bigraph::validate_chain(ess, m, n)?;
    Ok(unified_pattern_witnesses(ess))
}

// ======================================================================
// three-route rigidity classification
// ======================================================================

/// Which classification routes to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MethodSet {
    /// Enumerate 3-faces of each component cone and count rays.
    pub graph: bool,
    /// Scan essential chains for the non-rigidity pattern.
    pub corollary: bool,
    /// Ask the exact polyhedral oracle on the product cone.
    pub oracle: bool,
}

impl MethodSet {
    /// All three routes.
    pub fn all() -> Self {
        MethodSet { graph: true, corollary: true, oracle: true }
    }

    /// True when no route is selected.
    pub fn is_empty(&self) -> bool {
        !(self.graph || self.corollary || self.oracle)
    }
}

impl Default for MethodSet {
    fn default() -> Self {
        MethodSet::all()
    }
}

impl FromStr for MethodSet {
    type Err = EdgeConeError;

    /// Parse a comma-separated list of `graph`, `corollary`, `oracle`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut set = MethodSet { graph: false, corollary: false, oracle: false };
        for part in s.split(',') {
            match part.trim() {
                "graph" => set.graph = true,
                "corollary" => set.corollary = true,
                "oracle" => set.oracle = true,
                other => return Err(EdgeConeError::UnknownMethod(other.to_string())),
            }
        }
        Ok(set)
    }
}

impl fmt::Display for MethodSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut names = Vec::new();
        if self.graph {
            names.push("graph");
        }
        if self.corollary {
            names.push("corollary");
        }
        if self.oracle {
            names.push("oracle");
        }
        write!(f, "{}", names.join(","))
    }
}

/// Per-route verdicts: `Some(rigid?)` for each route that ran.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct MethodVerdicts {
    /// 3-face enumeration verdict.
    pub graph: Option<bool>,
    /// Essential-chain pattern verdict.
    pub corollary: Option<bool>,
    /// Exact polyhedral oracle verdict.
    pub oracle: Option<bool>,
}

impl MethodVerdicts {
    /// The verdicts that are present, with route names.
    pub fn present(&self) -> Vec<(&'static str, bool)> {
        let mut out = Vec::new();
        if let Some(v) = self.graph {
            out.push(("graph", v));
        }
        if let Some(v) = self.corollary {
            out.push(("corollary", v));
        }
        if let Some(v) = self.oracle {
            out.push(("oracle", v));
        }
        out
    }
}

/// Which rule answered for a component on the corollary route.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorollaryRule {
    /// Chain length ≥ 2: the unified chain pattern decided.
    PatternRule {
        /// Index of the L-component.
        component: usize,
    },
    /// Single essential cell with m ≠ 2 and n ≠ 2: the complete bipartite
    /// graph K_{m,n} is rigid.
    CompleteBipartite {
        /// Index of the L-component.
        component: usize,
        /// Rows of the component graph.
        m: usize,
        /// Columns of the component graph.
        n: usize,
    },
    /// Single essential cell with m = 2 or n = 2: outside the
    /// complete-bipartite rule, so the graph route decided this
    /// component.
    DeferredToGraph {
        /// Index of the L-component.
        component: usize,
        /// Rows of the component graph.
        m: usize,
        /// Columns of the component graph.
        n: usize,
    },
}

impl fmt::Display for CorollaryRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CorollaryRule::PatternRule { component } => {
                write!(f, "component {component}: chain pattern rule")
            }
            CorollaryRule::CompleteBipartite { component, m, n } => {
                write!(f, "component {component}: complete bipartite K_{{{m},{n}}} rule")
            }
            CorollaryRule::DeferredToGraph { component, m, n } => {
                write!(f, "component {component}: K_{{{m},{n}}} deferred to the graph route")
            }
        }
    }
}

/// A concrete witness of non-rigidity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RigidityWitness {
    /// A cell of the essential set matching the chain pattern (global
    /// grid coordinates).
    EssentialPattern {
        /// Index of the L-component.
        component: usize,
        /// The essential cell, in global grid coordinates.
        cell: Cell,
        /// 1-based chain position of the hit.
        index: usize,
        /// Boundary or interior hit.
        kind: PatternKind,
    },
    /// A three-dimensional face carrying more than three extremal rays.
    NonSimplicialThreeFace {
        /// Index of the L-component.
        component: usize,
        /// The offending face of the component cone.
        face: FaceDescriptor,
    },
}

impl fmt::Display for RigidityWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RigidityWitness::EssentialPattern { component, cell, index, kind } => write!(
                f,
                "essential cell {cell} matches the chain pattern \
                 (component {component}, j={index}, {kind})"
            ),
            RigidityWitness::NonSimplicialThreeFace { component, face } => write!(
                f,
                "3-face with {} extremal rays in component {component}",
                face.rays_on_face.len()
            ),
        }
    }
}

/// The bipartite graph of one L-component together with its grid labels
/// and local essential chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentData {
    /// Rows of the component graph.
    pub m: usize,
    /// Columns of the component graph.
    pub n: usize,
    /// Essential cells inside the component, in local coordinates,
    /// sorted by strictly descending row.
    pub essential_chain: Vec<Cell>,
    /// Global grid row of each local row (1-based local index − 1).
    pub row_labels: Vec<usize>,
    /// Global grid column of each local column.
    pub col_labels: Vec<usize>,
}

/// The complete result of classifying one permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    /// The permutation that was classified.
    pub permutation: Permutation,
    /// Whether the variety is toric (complexity zero).
    pub toric: bool,
    /// The complexity of the torus action.
    pub complexity: usize,
    /// Whether the variety is a point (L(π) empty); trivially rigid.
    pub trivial: bool,
    /// The combined rigidity verdict: `Some` when the routes that ran
    /// agree (and the variety is toric), `None` otherwise.
    pub rigid: Option<bool>,
    /// Per-route verdicts.
    pub method_verdicts: MethodVerdicts,
    /// Whether all routes that ran agree.
    pub consistent: bool,
    /// Which rule answered per component on the corollary route.
    pub corollary_rules: Vec<CorollaryRule>,
    /// Non-rigidity witnesses from the routes that ran (chain-pattern
    /// hits first, then non-simplicial faces, each in component order).
    pub witnesses: Vec<RigidityWitness>,
    /// The L-components and their graphs' shapes.
    pub components: Vec<ComponentData>,
}

/// Classify a permutation: toricness always, rigidity by the selected
/// routes when toric.
///
/// Non-toric input is not an error — the result simply has
/// `toric = false` and no rigidity verdicts.  Errors surface only from
/// the size guards of the underlying machinery (far beyond the sizes
/// where the toric combinatorics is interesting).
///
/// # Examples
///
/// ```
/// use schubcone::edgecone::{classify, MethodSet};
/// use schubcone::rothe::Permutation;
///
/// let p = Permutation::parse("1,3,2").unwrap();
/// let c = classify(&p, &MethodSet::all()).unwrap();
/// assert!(c.toric);
/// assert_eq!(c.rigid, Some(false)); // the cone over the quadric surface
/// assert!(c.consistent);
/// ```
pub fn classify(p: &Permutation, methods: &MethodSet) -> Result<Classification, EdgeConeError> {
    let d = rothe_diagram(p);
    let reg = regions(&d);
    let ess_global = essential_set(&d);
    let comps = l_components(&reg.l);
    let (toric, _hooks) = is_toric(p);
    let cx = complexity(p);
    let trivial = comps.is_empty();

    // Component graphs with their grid labels and local essential chains.
    let mut labeled: Vec<LabeledGraph> = Vec::with_capacity(comps.len());
    let mut components: Vec<ComponentData> = Vec::with_capacity(comps.len());
    for comp in &comps {
        let lg = LabeledGraph::from_cells(comp);
        // Essential cells inside the component (dominant-part essentials
        // are not in L and drop out), relabeled to local coordinates.
        let mut chain: Vec<Cell> = ess_global
            .iter()
            .filter(|c| comp.contains(c))
            .filter_map(|&c| lg.local_edge(c).map(|(i, j)| Cell::new(i, j)))
            .collect();
        chain.sort_by(|a, b| b.row.cmp(&a.row));
        components.push(ComponentData {
            m: lg.graph.m(),
            n: lg.graph.n(),
            essential_chain: chain,
            row_labels: lg.row_labels.clone(),
            col_labels: lg.col_labels.clone(),
        });
        labeled.push(lg);
    }

    if !toric {
        return Ok(Classification {
            permutation: p.clone(),
            toric,
            complexity: cx,
            trivial,
            rigid: None,
            method_verdicts: MethodVerdicts::default(),
            consistent: true,
            corollary_rules: Vec::new(),
            witnesses: Vec::new(),
            components,
        });
    }

    // Graph route for one component: rigid iff every 3-face of the
    // component cone carries exactly three rays; the offenders are
    // returned as witnesses.
    let graph_route = |ci: usize| -> Result<(bool, Vec<FaceDescriptor>), EdgeConeError> {
        let faces = three_faces(&labeled[ci].graph)?;
        let bad: Vec<FaceDescriptor> =
            faces.into_iter().filter(|f| f.rays_on_face.len() != 3).collect();
        Ok((bad.is_empty(), bad))
    };

    let mut verdicts = MethodVerdicts::default();
    let mut corollary_rules = Vec::new();
    let mut pattern_witnesses: Vec<RigidityWitness> = Vec::new();
    let mut face_witnesses: Vec<RigidityWitness> = Vec::new();

    if methods.graph {
        let mut all_rigid = true;
        for ci in 0..components.len() {
            let (ok, bad) = graph_route(ci)?;
            if !ok {
                all_rigid = false;
                for face in bad {
                    face_witnesses
                        .push(RigidityWitness::NonSimplicialThreeFace { component: ci, face });
                }
            }
        }
        verdicts.graph = Some(all_rigid);
    }

    if methods.corollary {
        let mut all_rigid = true;
        for (ci, cd) in components.iter().enumerate() {
            let comp_rigid = if cd.essential_chain.len() == 1 {
                if cd.m != 2 && cd.n != 2 {
                    // K_{m,n} with both sides ≥ 3 is rigid.
                    corollary_rules.push(CorollaryRule::CompleteBipartite {
                        component: ci,
                        m: cd.m,
                        n: cd.n,
                    });
                    true
                } else {
                    // K_{2,n} / K_{m,2} sit outside the complete-bipartite
                    // rule; let the graph route answer for this component.
                    corollary_rules.push(CorollaryRule::DeferredToGraph {
                        component: ci,
                        m: cd.m,
                        n: cd.n,
                    });
                    let (ok, bad) = graph_route(ci)?;
                    if !methods.graph {
                        // Avoid duplicating witnesses the graph route
                        // already recorded.
                        for face in bad {
                            face_witnesses.push(RigidityWitness::NonSimplicialThreeFace {
                                component: ci,
                                face,
                            });
                        }
                    }
                    ok
                }
            } else {
                corollary_rules.push(CorollaryRule::PatternRule { component: ci });
                let hits = unified_pattern_witnesses(&cd.essential_chain);
                for w in &hits {
                    pattern_witnesses.push(RigidityWitness::EssentialPattern {
                        component: ci,
                        cell: Cell::new(
                            cd.row_labels[w.cell.row - 1],
                            cd.col_labels[w.cell.col - 1],
                        ),
                        index: w.index,
                        kind: w.kind,
                    });
                }
                hits.is_empty()
            };
            if !comp_rigid {
                all_rigid = false;
            }
        }
        verdicts.corollary = Some(all_rigid);
    }

    if methods.oracle {
        let verdict = if trivial {
            true
        } else {
            // Block-diagonal product of the component inequality systems.
            let dims: Vec<usize> = components.iter().map(|c| c.m + c.n - 1).collect();
            let d_tot: usize = dims.iter().sum();
            let mut rows: Vec<Vec<i64>> = Vec::new();
            let mut offset = 0;
            for (ci, lg) in labeled.iter().enumerate() {
                for r in reduced_dual_rows(&lg.graph) {
                    let mut row = vec![0i64; d_tot];
                    row[offset..offset + dims[ci]].copy_from_slice(&r);
                    rows.push(row);
                }
                offset += dims[ci];
            }
            RationalCone::from_inequalities(d_tot, rows)?.rigid_verdict()?
        };
        verdicts.oracle = Some(verdict);
    }

    let present: Vec<bool> = verdicts.present().iter().map(|&(_, v)| v).collect();
    let consistent = present.windows(2).all(|w| w[0] == w[1]);
    let rigid = if consistent { present.first().copied() } else { None };

    let mut witnesses = pattern_witnesses;
    witnesses.extend(face_witnesses);

    Ok(Classification {
        permutation: p.clone(),
        toric,
        complexity: cx,
        trivial,
        rigid,
        method_verdicts: verdicts,
        consistent,
        corollary_rules,
        witnesses,
        components,
    })
}

/// Like [`classify`], but demand a toric variety.
///
/// # Errors
///
/// [`EdgeConeError::NotToric`] (carrying the complexity) when the variety
/// is not toric; otherwise as [`classify`].
pub fn classify_rigidity(
    p: &Permutation,
    methods: &MethodSet,
) -> Result<Classification, EdgeConeError> {
    let c = classify(p, methods)?;
    if !c.toric {
        return Err(EdgeConeError::NotToric { complexity: c.complexity });
    }
    Ok(c)
}

// ======================================================================
// tests
// ======================================================================
