//! Bipartite graphs, independent sets, associated subgraphs 𝒢{A}, and the
//! first independent sets 𝓘⁽¹⁾.
//!
//! The cells of the region L(π) are the edges of a bipartite graph G^π on
//! the occupied rows (part U₁) and occupied columns (part U₂).  This module
//! is the combinatorial engine for the edge-cone geometry built on top of
//! it:
//!
//! * 𝒢{A} — the *associated subgraph* of an independent set A, a spanning
//!   subgraph (isolated vertices kept) defined by a three-way case split on
//!   the sidedness of A;
//! * 𝓘⁽¹⁾ — the *first independent sets*: the one-sided sets U_i∖{v} with
//!   N(A) equal to the whole opposite part, plus the maximal two-sided
//!   independent sets, in both cases filtered by the condition that 𝒢{A}
//!   has exactly two connected components.  These index the extremal rays
//!   of the edge cone.
//!
//! For graphs G^π of toric permutations there is a closed-form fast path:
//! 𝓘⁽¹⁾ consists of all m+n one-sided sets together with one two-sided set
//! per consecutive pair of essential cells
//! (see [`first_independent_sets_from_essentials`]).  The general
//! enumerator exists to validate that fast path and to serve arbitrary
//! small graphs; both are exercised against each other in the tests.

use std::collections::BTreeSet;
use std::fmt;

use crate::rothe::{Cell, Diagram};

// ======================================================================
// errors
// ======================================================================

/// Errors for graph construction and independent-set machinery.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BigraphError {
    /// An edge endpoint lies outside U₁ = {1..m} or U₂ = {1..n}.
    EdgeOutOfRange { edge: (usize, usize), m: usize, n: usize },
    /// A spanning subgraph listed an edge its host graph does not have.
    KeptEdgeNotInHost { edge: (usize, usize) },
    /// An independent set must have a nonempty vertex set.
    EmptyIndependentSet,
    /// An independent-set member lies outside its part.
    MemberOutOfRange { in_u1: bool, index: usize, bound: usize },
    /// The set is not independent: this edge joins a1 to a2.
    NotIndependent { edge: (usize, usize) },
    /// 𝓘⁽¹⁾ is only defined for connected graphs; decompose first.
    Disconnected { components: usize },
    /// The brute-force two-sided enumeration is limited to m+n ≤ 20.
    TooLarge { m: usize, n: usize },
    /// The supplied essential chain violates the toric chain shape.
    InvalidEssentialChain(String),
}

impl fmt::Display for BigraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BigraphError::EdgeOutOfRange { edge, m, n } => write!(
                f,
                "edge ({},{}) outside U\u{2081}={{1..{m}}} \u{00d7} U\u{2082}={{1..{n}}}",
                edge.0, edge.1
            ),
            BigraphError::KeptEdgeNotInHost { edge } => {
                write!(f, "kept edge ({},{}) is not an edge of the host graph", edge.0, edge.1)
            }
            BigraphError::EmptyIndependentSet => {
                write!(f, "independent set must be nonempty")
            }
            BigraphError::MemberOutOfRange { in_u1, index, bound } => write!(
                f,
                "vertex {index} outside U{} = {{1..{bound}}}",
                if *in_u1 { '\u{2081}' } else { '\u{2082}' }
            ),
            BigraphError::NotIndependent { edge } => {
                write!(f, "edge ({},{}) joins the two sides of the set", edge.0, edge.1)
            }
            BigraphError::Disconnected { components } => {
                write!(f, "graph has {components} components; decompose before \u{1d4d8}\u{207d}\u{00b9}\u{207e}")
            }
            BigraphError::TooLarge { m, n } => {
                write!(f, "independent-set enumeration requires m+n \u{2264} 20, got {m}+{n}")
            }
            BigraphError::InvalidEssentialChain(msg) => {
                write!(f, "invalid essential chain: {msg}")
            }
        }
    }
}

impl std::error::Error for BigraphError {}

// ======================================================================
// domain types
// ======================================================================

/// A vertex of a bipartite graph: `U1(i)` is the i-th row vertex,
/// `U2(j)` the j-th column vertex (both 1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Vertex {
    U1(usize),
    U2(usize),
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::U1(i) => write!(f, "u1_{i}"),
            Vertex::U2(j) => write!(f, "u2_{j}"),
        }
    }
}

/// A bipartite graph on parts U₁ = {1..m} and U₂ = {1..n} with edge set
/// E ⊆ U₁ × U₂ (set semantics).
///
/// # Examples
///
/// ```
/// use schubcone::bigraph::BipartiteGraph;
///
/// let g = BipartiteGraph::new(2, 2, [(1, 2), (2, 1), (2, 2)]).unwrap();
/// assert_eq!(g.edges().len(), 3);
/// assert!(g.is_connected());
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    m: usize,
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl BipartiteGraph {
    /// Build a graph, validating edge endpoints.
    pub fn new<I>(m: usize, n: usize, edges: I) -> Result<Self, BigraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (i, j) in edges {
            if i < 1 || i > m || j < 1 || j > n {
                return Err(BigraphError::EdgeOutOfRange { edge: (i, j), m, n });
            }
            set.insert((i, j));
        }
        Ok(BipartiteGraph { m, n, edges: set })
    }

    /// The complete bipartite graph K_{m,n}.
    pub fn complete(m: usize, n: usize) -> Self {
        let edges = (1..=m).flat_map(|i| (1..=n).map(move |j| (i, j))).collect();
        BipartiteGraph { m, n, edges }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn contains_edge(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&(i, j))
    }

    /// N(A₁) ⊆ U₂ for a set of row vertices.
    pub fn row_neighbors(&self, rows: &BTreeSet<usize>) -> BTreeSet<usize> {
        self.edges
            .iter()
            .filter(|(i, _)| rows.contains(i))
            .map(|&(_, j)| j)
            .collect()
    }

    /// N(A₂) ⊆ U₁ for a set of column vertices.
    pub fn col_neighbors(&self, cols: &BTreeSet<usize>) -> BTreeSet<usize> {
        self.edges
            .iter()
            .filter(|(_, j)| cols.contains(j))
            .map(|&(i, _)| i)
            .collect()
    }

    /// Number of connected components, isolated vertices included
    /// (so the edgeless graph on m+n vertices has m+n components).
    pub fn component_count(&self) -> usize {
        count_components(self.m, self.n, &self.edges)
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// DOT serialization with vertices named `u1_i` / `u2_j` and a
    /// same-rank hint per part.
    pub fn to_dot(&self) -> String {
        dot_of(self.m, self.n, &self.edges)
    }
}

/// An independent set A = A₁ ⊔ A₂ of a bipartite graph: no edge joins A₁
/// to A₂, and A is nonempty.  Validated at construction against a host
/// graph; carries its sidedness.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct IndependentSet {
    a1: BTreeSet<usize>,
    a2: BTreeSet<usize>,
    sidedness: Sidedness,
}

/// Which parts an independent set meets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Sidedness {
    OneSidedU1,
    OneSidedU2,
    TwoSided,
}

impl IndependentSet {
    /// Validate membership ranges, nonemptiness, and independence in `g`.
    pub fn new(
        g: &BipartiteGraph,
        a1: BTreeSet<usize>,
        a2: BTreeSet<usize>,
    ) -> Result<Self, BigraphError> {
        if a1.is_empty() && a2.is_empty() {
            return Err(BigraphError::EmptyIndependentSet);
        }
        if let Some(&v) = a1.iter().find(|&&v| v < 1 || v > g.m) {
            return Err(BigraphError::MemberOutOfRange { in_u1: true, index: v, bound: g.m });
        }
        if let Some(&w) = a2.iter().find(|&&w| w < 1 || w > g.n) {
            return Err(BigraphError::MemberOutOfRange { in_u1: false, index: w, bound: g.n });
        }
        if let Some(&e) = g.edges.iter().find(|(i, j)| a1.contains(i) && a2.contains(j)) {
            return Err(BigraphError::NotIndependent { edge: e });
        }
        let sidedness = if a2.is_empty() {
            Sidedness::OneSidedU1
        } else if a1.is_empty() {
            Sidedness::OneSidedU2
        } else {
            Sidedness::TwoSided
        };
        Ok(IndependentSet { a1, a2, sidedness })
    }

    pub fn a1(&self) -> &BTreeSet<usize> {
        &self.a1
    }

    pub fn a2(&self) -> &BTreeSet<usize> {
        &self.a2
    }

    pub fn sidedness(&self) -> Sidedness {
        self.sidedness
    }
}

impl fmt::Display for IndependentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |f: &mut fmt::Formatter<'_>, s: &BTreeSet<usize>| -> fmt::Result {
            write!(f, "{{")?;
            for (k, v) in s.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "}}")
        };
        side(f, &self.a1)?;
        write!(f, "\u{2294}")?;
        side(f, &self.a2)
    }
}

/// A spanning subgraph of a host graph: same m+n vertices, a subset of the
/// edges.  Isolated vertices count in [`SpanningSubgraph::component_count`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningSubgraph {
    host: BipartiteGraph,
    kept_edges: BTreeSet<(usize, usize)>,
}

impl SpanningSubgraph {
    /// Build a spanning subgraph, validating `kept ⊆ host.edges`.
    pub fn new<I>(host: BipartiteGraph, kept: I) -> Result<Self, BigraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for e in kept {
            if !host.edges.contains(&e) {
                return Err(BigraphError::KeptEdgeNotInHost { edge: e });
            }
            set.insert(e);
        }
        Ok(SpanningSubgraph { host, kept_edges: set })
    }

    pub fn host(&self) -> &BipartiteGraph {
        &self.host
    }

    pub fn kept_edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.kept_edges
    }

    /// Number of connected components on the *full* vertex set of the host
    /// (isolated vertices each count as one component).
    pub fn component_count(&self) -> usize {
        count_components(self.host.m, self.host.n, &self.kept_edges)
    }

    /// DOT serialization (all host vertices, kept edges only).
    pub fn to_dot(&self) -> String {
        dot_of(self.host.m, self.host.n, &self.kept_edges)
    }
}

/// A bipartite graph made from a set of grid cells, remembering which
/// global row/column each relabeled vertex came from:
/// `row_labels[i-1]` is the global row of vertex `U1(i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: BipartiteGraph,
    pub row_labels: Vec<usize>,
    pub col_labels: Vec<usize>,
}

impl LabeledGraph {
    /// Relabel occupied rows and columns to {1..m} × {1..n} (ascending) and
    /// turn each cell into an edge.
    pub fn from_cells(cells: &BTreeSet<Cell>) -> Self {
        let row_labels: Vec<usize> = {
            let s: BTreeSet<usize> = cells.iter().map(|c| c.row).collect();
            s.into_iter().collect()
        };
        let col_labels: Vec<usize> = {
            let s: BTreeSet<usize> = cells.iter().map(|c| c.col).collect();
            s.into_iter().collect()
        };
        let ri = |r: usize| row_labels.binary_search(&r).unwrap() + 1;
        let ci = |c: usize| col_labels.binary_search(&c).unwrap() + 1;
        let edges: BTreeSet<(usize, usize)> =
            cells.iter().map(|c| (ri(c.row), ci(c.col))).collect();
        LabeledGraph {
            graph: BipartiteGraph { m: row_labels.len(), n: col_labels.len(), edges },
            row_labels,
            col_labels,
        }
    }

    /// Map a local edge back to its global grid cell.
    pub fn global_cell(&self, edge: (usize, usize)) -> Cell {
        Cell::new(self.row_labels[edge.0 - 1], self.col_labels[edge.1 - 1])
    }

    /// Map a global cell to its local edge, if both labels occur.
    pub fn local_edge(&self, cell: Cell) -> Option<(usize, usize)> {
        let i = self.row_labels.binary_search(&cell.row).ok()? + 1;
        let j = self.col_labels.binary_search(&cell.col).ok()? + 1;
        Some((i, j))
    }
}

// ======================================================================
// shared helpers
// ======================================================================

/// Component count of an edge set on the full m+n vertex set (union-find).
fn count_components(m: usize, n: usize, edges: &BTreeSet<(usize, usize)>) -> usize {
    let total = m + n;
    let mut parent: Vec<usize> = (0..total).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &(i, j) in edges {
        let a = find(&mut parent, i - 1);
        let b = find(&mut parent, m + j - 1);
        if a != b {
            parent[a] = b;
        }
    }
    (0..total)
        .map(|v| find(&mut parent, v))
        .collect::<BTreeSet<usize>>()
        .len()
}

fn dot_of(m: usize, n: usize, edges: &BTreeSet<(usize, usize)>) -> String {
    use std::fmt::Write as _;
    let mut out = String::new();
    out.push_str("graph bipartite {\n  rankdir=LR;\n  node [shape=circle];\n");
    if m > 0 {
        out.push_str("  { rank=same;");
        for i in 1..=m {
            let _ = write!(out, " u1_{i};");
        }
        out.push_str(" }\n");
    }
    if n > 0 {
        out.push_str("  { rank=same;");
        for j in 1..=n {
            let _ = write!(out, " u2_{j};");
        }
        out.push_str(" }\n");
    }
    for &(i, j) in edges {
        let _ = writeln!(out, "  u1_{i} -- u2_{j};");
    }
    out.push_str("}\n");
    out
}

// ======================================================================
// operations
// ======================================================================

/// The bipartite graph G^π of an L-region: occupied rows and columns are
/// relabeled to {1..m} and {1..n}, one edge per cell.  The empty region
/// yields the (trivial) graph with m = n = 0.
///
/// # Examples
///
/// ```
/// use schubcone::bigraph::graph_from_l;
/// use schubcone::rothe::{regions, rothe_diagram, Permutation};
///
/// let p = Permutation::parse("[2,4,1,3]").unwrap();
/// let g = graph_from_l(&regions(&rothe_diagram(&p)).l);
/// assert_eq!((g.m(), g.n()), (2, 2));
/// assert_eq!(g.edges().len(), 4); // K_{2,2}
/// ```
pub fn graph_from_l(l: &Diagram) -> BipartiteGraph {
    LabeledGraph::from_cells(l.cells()).graph
}

/// N(A) for a mixed vertex set A: all vertices adjacent to some vertex of
/// A.  Disjoint from A whenever A is independent.
pub fn neighbor_set(g: &BipartiteGraph, a: &BTreeSet<Vertex>) -> BTreeSet<Vertex> {
    let mut out = BTreeSet::new();
    for &(i, j) in &g.edges {
        if a.contains(&Vertex::U1(i)) {
            out.insert(Vertex::U2(j));
        }
        if a.contains(&Vertex::U2(j)) {
            out.insert(Vertex::U1(i));
        }
    }
    out
}

/// The associated subgraph 𝒢{A}: a spanning subgraph of `g` whose kept
/// edges follow the three-case definition
///
/// * A = A₁ ⊆ U₁:  G[A₁ ⊔ N(A₁)] ∪ G[(U₁∖A₁) ⊔ (U₂∖N(A₁))],
/// * A = A₂ ⊆ U₂:  G[N(A₂) ⊔ A₂] ∪ G[(U₁∖N(A₂)) ⊔ (U₂∖A₂)],
/// * two-sided:    G[A₁ ⊔ N(A₁)] ∪ G[N(A₂) ⊔ A₂],
///
/// where G[X ⊔ Y] is the induced edge set {(i,j) ∈ E : i ∈ X, j ∈ Y}.
/// The set is revalidated against `g` (it may have been built on another
/// graph).
pub fn associated_subgraph(
    g: &BipartiteGraph,
    a: &IndependentSet,
) -> Result<SpanningSubgraph, BigraphError> {
    // revalidate: membership and independence are host-relative
    let a = IndependentSet::new(g, a.a1.clone(), a.a2.clone())?;
    let induced = |rows: &BTreeSet<usize>, cols: &BTreeSet<usize>| -> BTreeSet<(usize, usize)> {
        g.edges
            .iter()
            .copied()
            .filter(|(i, j)| rows.contains(i) && cols.contains(j))
            .collect()
    };
    let u1: BTreeSet<usize> = (1..=g.m).collect();
    let u2: BTreeSet<usize> = (1..=g.n).collect();
    let kept: BTreeSet<(usize, usize)> = match a.sidedness {
        Sidedness::OneSidedU1 => {
            let na = g.row_neighbors(&a.a1);
            let c1: BTreeSet<usize> = u1.difference(&a.a1).copied().collect();
            let c2: BTreeSet<usize> = u2.difference(&na).copied().collect();
            let mut kept = induced(&a.a1, &na);
            kept.extend(induced(&c1, &c2));
            kept
        }
        Sidedness::OneSidedU2 => {
            let na = g.col_neighbors(&a.a2);
            let c1: BTreeSet<usize> = u1.difference(&na).copied().collect();
            let c2: BTreeSet<usize> = u2.difference(&a.a2).copied().collect();
            let mut kept = induced(&na, &a.a2);
            kept.extend(induced(&c1, &c2));
            kept
        }
        Sidedness::TwoSided => {
            let na1 = g.row_neighbors(&a.a1);
            let na2 = g.col_neighbors(&a.a2);
            let mut kept = induced(&a.a1, &na1);
            kept.extend(induced(&na2, &a.a2));
            kept
        }
    };
    SpanningSubgraph::new(g.clone(), kept)
}

/// Component count of a spanning subgraph (isolated vertices included).
pub fn component_count(s: &SpanningSubgraph) -> usize {
    s.component_count()
}

/// All maximal two-sided independent sets (A₁, A₂): A₂ = U₂ ∖ N(A₁) and
/// A₁ = U₁ ∖ N(A₂), both nonempty and proper.  Brute force over subsets
/// of U₁ via bitmasks.
fn maximal_two_sided(g: &BipartiteGraph) -> Vec<(BTreeSet<usize>, BTreeSet<usize>)> {
    let (m, n) = (g.m, g.n);
    // per-row and per-column neighbor bitmasks
    let mut row_nb = vec![0u32; m];
    let mut col_nb = vec![0u32; n];
    for &(i, j) in &g.edges {
        row_nb[i - 1] |= 1 << (j - 1);
        col_nb[j - 1] |= 1 << (i - 1);
    }
    let full_rows: u32 = if m == 0 { 0 } else { (1 << m) - 1 };
    let full_cols: u32 = if n == 0 { 0 } else { (1 << n) - 1 };
    let to_set = |mask: u32| -> BTreeSet<usize> {
        (0..32).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect()
    };
    let mut out = Vec::new();
    for a1_mask in 1..full_rows {
        // N(A₁) as a column mask, then the complement candidate A₂
        let mut na1 = 0u32;
        for b in 0..m {
            if a1_mask >> b & 1 == 1 {
                na1 |= row_nb[b];
            }
        }
        let a2_mask = full_cols & !na1;
        if a2_mask == 0 || a2_mask == full_cols {
            continue;
        }
        // closure: U₁ ∖ N(A₂) must give back A₁ (mutual maximality)
        let mut na2 = 0u32;
        for b in 0..n {
            if a2_mask >> b & 1 == 1 {
                na2 |= col_nb[b];
            }
        }
        if full_rows & !na2 == a1_mask {
            out.push((to_set(a1_mask), to_set(a2_mask)));
        }
    }
    out.sort();
    out
}

/// The first independent sets 𝓘⁽¹⁾ of a connected bipartite graph, in
/// deterministic order: one-sided U₁∖{v} by v ascending, one-sided
/// U₂∖{w} by w ascending, then two-sided sets sorted lexicographically by
/// (A₁, A₂).
///
/// A one-sided candidate qualifies when its neighborhood is the whole
/// opposite part and 𝒢{A} has exactly two components; a two-sided
/// candidate is a maximal two-sided independent set with the same
/// two-component condition.
///
/// # Examples
///
/// ```
/// use schubcone::bigraph::{first_independent_sets, BipartiteGraph};
///
/// // K_{2,2} minus one edge: 𝓘⁽¹⁾ = {2}, {2}', and the two-sided {1}⊔{1}
/// let g = BipartiteGraph::new(2, 2, [(1, 2), (2, 1), (2, 2)]).unwrap();
/// let isets = first_independent_sets(&g).unwrap();
/// assert_eq!(isets.len(), 3);
/// assert_eq!(isets[2].to_string(), "{1}\u{2294}{1}");
/// ```
pub fn first_independent_sets(
    g: &BipartiteGraph,
) -> Result<Vec<IndependentSet>, BigraphError> {
    if g.m + g.n > 20 {
        return Err(BigraphError::TooLarge { m: g.m, n: g.n });
    }
    let components = g.component_count();
    if components != 1 {
        return Err(BigraphError::Disconnected { components });
    }
    let u1: BTreeSet<usize> = (1..=g.m).collect();
    let u2: BTreeSet<usize> = (1..=g.n).collect();
    let two_comps = |a: &IndependentSet| -> bool {
        associated_subgraph(g, a)
            .map(|s| s.component_count() == 2)
            .unwrap_or(false)
    };
    let mut out = Vec::new();
    for v in 1..=g.m {
        let mut a1 = u1.clone();
        a1.remove(&v);
        if a1.is_empty() || g.row_neighbors(&a1) != u2 {
            continue;
        }
        let a = IndependentSet::new(g, a1, BTreeSet::new())?;
        if two_comps(&a) {
            out.push(a);
        }
    }
    for w in 1..=g.n {
        let mut a2 = u2.clone();
        a2.remove(&w);
        if a2.is_empty() || g.col_neighbors(&a2) != u1 {
            continue;
        }
        let a = IndependentSet::new(g, BTreeSet::new(), a2)?;
        if two_comps(&a) {
            out.push(a);
        }
    }
    for (a1, a2) in maximal_two_sided(g) {
        let a = IndependentSet::new(g, a1, a2)?;
        if two_comps(&a) {
            out.push(a);
        }
    }
    Ok(out)
}

/// Validate a (local) essential chain (x₁,y₁)…(x_{k+1},y_{k+1}):
/// x strictly descending from x₁ = m, y strictly ascending to y_{k+1} = n,
/// all entries ≥ 2.
pub(crate) fn validate_chain(chain: &[Cell], m: usize, n: usize) -> Result<(), BigraphError> {
    let err = |msg: String| Err(BigraphError::InvalidEssentialChain(msg));
    if chain.is_empty() {
        return err("chain is empty".into());
    }
    if m < 2 || n < 2 {
        return err(format!("component sides must be \u{2265} 2, got m={m}, n={n}"));
    }
    if chain[0].row != m {
        return err(format!("x\u{2081} = {} but m = {m}", chain[0].row));
    }
    if chain[chain.len() - 1].col != n {
        return err(format!("last y = {} but n = {n}", chain[chain.len() - 1].col));
    }
    for c in chain {
        if c.row < 2 || c.col < 2 {
            return err(format!("entry {c} below the (2,2) corner"));
        }
        if c.row > m || c.col > n {
            return err(format!("entry {c} outside the {m}\u{00d7}{n} grid"));
        }
    }
    for w in chain.windows(2) {
        if w[1].row >= w[0].row || w[1].col <= w[0].col {
            return err(format!(
                "entries {} then {} break strict x-descent / y-ascent",
                w[0], w[1]
            ));
        }
    }
    Ok(())
}

/// The Ferrers graph of an essential chain: row widths are n for rows
/// 1..x_{k+1} and y_i for rows x_{i+1}+1..x_i, so the essential cells are
/// exactly the SE corners of the part of the shape below row 1 and right
/// of column 1.  This is the graph G^π of a connected toric L-region with
/// that essential set.
pub fn ferrers_graph_of_chain(
    chain: &[Cell],
    m: usize,
    n: usize,
) -> Result<BipartiteGraph, BigraphError> {
    validate_chain(chain, m, n)?;
    let mut widths = vec![0usize; m];
    widths[0] = n;
    // rows above the topmost essential row are full
    for r in 2..=chain[chain.len() - 1].row {
        widths[r - 1] = n;
    }
    // stripe below essential i+1 (exclusive) down to essential i: width yᵢ
    for i in 0..chain.len() - 1 {
        for r in (chain[i + 1].row + 1)..=chain[i].row {
            widths[r - 1] = chain[i].col;
        }
    }
    let edges = widths
        .iter()
        .enumerate()
        .flat_map(|(r, &w)| (1..=w).map(move |j| (r + 1, j)));
    BipartiteGraph::new(m, n, edges)
}

/// Fast-path 𝓘⁽¹⁾ for the graph of a connected toric L-region, read off
/// the essential chain: all m+n one-sided sets, plus one two-sided set
///
/// ```text
/// C⁽ⁱ⁺¹⁾ = {xᵢ₊₁+1, …, m} ⊔ {yᵢ+1, …, n}      (1-based i = 1..k)
/// ```
///
/// per consecutive pair of essential cells (|Ess| = k+1 gives k two-sided
/// sets).  Output order matches [`first_independent_sets`], and the two
/// agree on every such graph — the fast path is validated against the
/// general enumerator in the test suite.
pub fn first_independent_sets_from_essentials(
    ess: &[Cell],
    m: usize,
    n: usize,
) -> Result<Vec<IndependentSet>, BigraphError> {
    let g = ferrers_graph_of_chain(ess, m, n)?;
    let u1: BTreeSet<usize> = (1..=m).collect();
    let u2: BTreeSet<usize> = (1..=n).collect();
    let mut out = Vec::new();
    for v in 1..=m {
        let mut a1 = u1.clone();
        a1.remove(&v);
        out.push(IndependentSet::new(&g, a1, BTreeSet::new())?);
    }
    for w in 1..=n {
        let mut a2 = u2.clone();
        a2.remove(&w);
        out.push(IndependentSet::new(&g, BTreeSet::new(), a2)?);
    }
    // reversed chain order = ascending min(C₁) = the enumerator's (A₁,A₂) order
    for i in (1..ess.len()).rev() {
        let c1: BTreeSet<usize> = (ess[i].row + 1..=m).collect();
        let c2: BTreeSet<usize> = (ess[i - 1].col + 1..=n).collect();
        out.push(IndependentSet::new(&g, c1, c2)?);
    }
    Ok(out)
}

// ======================================================================
// tests
// ======================================================================
