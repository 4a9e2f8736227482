//! Rothe diagrams and their derived regions.
//!
//! For a permutation π ∈ S_N (one-line notation), the *Rothe diagram* is
//!
//! ```text
//! D(π) = { (π(j), i) : i < j, π(i) > π(j) }     (matrix convention, 1-based)
//! ```
//!
//! so |D(π)| is the inversion count of π.  From D(π) we derive:
//!
//! * `dom(π)` — the *dominant piece*: the 4-adjacency connected component of
//!   D(π) containing the box (1,1) (empty when (1,1) ∉ D(π));
//! * `NW(π)` — the union of north-west closures of the cells of D(π);
//! * `L(π) = NW(π) − dom(π)` and `L′(π) = L(π) − D(π)`;
//! * `Ess(π)` — the *essential set*: south-east corners of D(π).
//!
//! The variety-level meaning: |L′(π)| is the dimension of the matrix
//! Schubert factor Y_π, the cells of L(π) are the edges of a bipartite
//! graph G^π on the occupied rows and columns, and Y_π is a toric variety
//! exactly when every row-or-column-connected component of L(π) has its
//! L′ cells forming a *hook* (all cells in the row or column of the
//! north-west-most cell).  The nonnegative gap
//! `complexity(π) = |L′| − (m + n − k)` (m, n, k = occupied rows, occupied
//! columns, components of L) measures the failure of toricness: it is the
//! complexity of Y_π as a T-variety, and it vanishes iff the hook criterion
//! holds.  Both criteria are implemented independently and cross-checked in
//! the test suite.

use std::collections::BTreeSet;
use std::fmt;

// ======================================================================
// errors
// ======================================================================

/// Errors for permutation parsing and diagram construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RotheError {
    /// The input contained no tokens.
    EmptyInput,
    /// A token could not be parsed as a positive integer.
    NonIntegerToken(String),
    /// The image sequence is not a bijection on {1..N}.
    NotABijection(Vec<usize>),
    /// A cell lies outside the enclosing n×n grid.
    CellOutOfRange { cell: (usize, usize), n: usize },
}

impl fmt::Display for RotheError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RotheError::EmptyInput => write!(f, "empty permutation input"),
            RotheError::NonIntegerToken(t) => write!(f, "token {t:?} is not a positive integer"),
            RotheError::NotABijection(v) => {
                write!(f, "{v:?} is not a bijection of {{1..{}}}", v.len())
            }
            RotheError::CellOutOfRange { cell, n } => {
                write!(f, "cell ({},{}) outside the {n}×{n} grid", cell.0, cell.1)
            }
        }
    }
}

impl std::error::Error for RotheError {}

// ======================================================================
// domain types
// ======================================================================

/// A permutation of {1..N} in one-line notation.
///
/// # Examples
///
/// ```
/// use schubcone::rothe::Permutation;
///
/// let p = Permutation::parse("[2,1,4,3]").unwrap();
/// assert_eq!(p.n(), 4);
/// assert_eq!(p.image(1), 2);
/// assert_eq!(p.inversions(), 2);
/// assert_eq!(p.to_string(), "[2,1,4,3]");
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Build a permutation from its image sequence π(1)…π(N).
    pub fn from_images(images: Vec<usize>) -> Result<Self, RotheError> {
        if images.is_empty() {
            return Err(RotheError::EmptyInput);
        }
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v < 1 || v > n || seen[v] {
                return Err(RotheError::NotABijection(images.clone()));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    /// Parse whitespace- or comma-separated images, optionally bracketed:
    /// `"2 1 4 3"`, `"2,1,4,3"`, and `"[2,1,4,3]"` all denote the same
    /// permutation.  N is inferred from the token count.
    pub fn parse(text: &str) -> Result<Self, RotheError> {
        let cleaned: String = text
            .chars()
            .map(|c| if c == '[' || c == ']' || c == ',' { ' ' } else { c })
            .collect();
        let mut images = Vec::new();
        for tok in cleaned.split_whitespace() {
            let v: usize = tok
                .parse()
                .map_err(|_| RotheError::NonIntegerToken(tok.to_string()))?;
            if v == 0 {
                return Err(RotheError::NonIntegerToken(tok.to_string()));
            }
            images.push(v);
        }
        Self::from_images(images)
    }

    /// The identity permutation of {1..n}.
    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    /// Grid size N.
    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// π(i) for 1 ≤ i ≤ N.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// The full image sequence π(1)…π(N).
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Number of inversions (pairs i < j with π(i) > π(j)).
    pub fn inversions(&self) -> usize {
        let v = &self.images;
        let mut c = 0;
        for i in 0..v.len() {
            for j in (i + 1)..v.len() {
                if v[i] > v[j] {
                    c += 1;
                }
            }
        }
        c
    }

    /// All permutations of {1..n} in lexicographic one-line order.
    pub fn all_lexicographic(n: usize) -> Vec<Permutation> {
        use itertools::Itertools;
        (1..=n)
            .permutations(n)
            .map(|images| Permutation { images })
            .collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl std::str::FromStr for Permutation {
    type Err = RotheError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Permutation::parse(s)
    }
}

/// A grid cell in matrix convention: `row` 1 is the top row, `col` 1 the
/// leftmost column.  Ordered by (row, col).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A finite set of cells inside an n×n grid (set semantics, ordered
/// iteration).  Carries D(π) and every region derived from it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    n: usize,
    cells: BTreeSet<Cell>,
}

impl Diagram {
    /// An empty diagram on an n×n grid.
    pub fn empty(n: usize) -> Self {
        Diagram { n, cells: BTreeSet::new() }
    }

    /// Build a diagram, validating that all cells fit in the grid.
    pub fn from_cells<I>(n: usize, cells: I) -> Result<Self, RotheError>
    where
        I: IntoIterator<Item = Cell>,
    {
        let mut set = BTreeSet::new();
        for c in cells {
            if c.row < 1 || c.row > n || c.col < 1 || c.col > n {
                return Err(RotheError::CellOutOfRange { cell: (c.row, c.col), n });
            }
            set.insert(c);
        }
        Ok(Diagram { n, cells: set })
    }

    /// Grid size.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The cell set, ordered by (row, col).
    pub fn cells(&self) -> &BTreeSet<Cell> {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.cells.contains(&c)
    }

    /// Distinct rows occupied by at least one cell, ascending.
    pub fn occupied_rows(&self) -> Vec<usize> {
        let set: BTreeSet<usize> = self.cells.iter().map(|c| c.row).collect();
        set.into_iter().collect()
    }

    /// Distinct columns occupied by at least one cell, ascending.
    pub fn occupied_cols(&self) -> Vec<usize> {
        let set: BTreeSet<usize> = self.cells.iter().map(|c| c.col).collect();
        set.into_iter().collect()
    }
}

/// One row-or-column component of L(π), restricted to its L′ cells, with
/// the hook verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HookComponent {
    /// The L′ cells of this L-component.
    pub cells: BTreeSet<Cell>,
    /// True iff `cells` is nonempty, its north-west-most corner is present,
    /// and every cell lies in the corner's row or the corner's column.
    /// A single cell is a (degenerate) hook.
    pub is_hook: bool,
    /// The unique north-west-most cell (minimal row and minimal column),
    /// when it belongs to the component.
    pub corner: Option<Cell>,
}

/// The per-component hook analysis of L′(π) that witnesses the toricness
/// verdict of [`is_toric`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HookDecomposition {
    /// One entry per L-component, in the order of [`l_components`].
    pub components: Vec<HookComponent>,
}

/// All regions derived from a Rothe diagram in one pass.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Regions {
    /// NW(π): the union of north-west closures of the cells of D(π).
    pub nw: Diagram,
    /// dom(π): the dominant piece (same as [`dominant_piece`]).
    pub dom: Diagram,
    /// L(π) = NW(π) − dom(π).
    pub l: Diagram,
    /// L′(π) = L(π) − D(π); |L′(π)| = dim Y_π.
    pub l_prime: Diagram,
}

// ======================================================================
// operations
// ======================================================================

/// Parse a permutation from text (see [`Permutation::parse`]).
pub fn parse_permutation(text: &str) -> Result<Permutation, RotheError> {
    Permutation::parse(text)
}

/// The Rothe diagram D(π) = {(π(j), i) : i < j, π(i) > π(j)}.
///
/// # Examples
///
/// ```
/// use schubcone::rothe::{rothe_diagram, Cell, Permutation};
///
/// let d = rothe_diagram(&Permutation::parse("[2,1,4,3]").unwrap());
/// let cells: Vec<Cell> = d.cells().iter().copied().collect();
/// assert_eq!(cells, vec![Cell::new(1, 1), Cell::new(3, 3)]);
/// ```
pub fn rothe_diagram(p: &Permutation) -> Diagram {
    let n = p.n();
    let mut cells = BTreeSet::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            if p.image(i) > p.image(j) {
                cells.insert(Cell::new(p.image(j), i));
            }
        }
    }
    Diagram { n, cells }
}

/// The dominant piece dom(π): the 4-adjacency (edge-sharing) connected
/// component of the diagram containing (1,1); empty when (1,1) is absent.
pub fn dominant_piece(d: &Diagram) -> Diagram {
    let origin = Cell::new(1, 1);
    if !d.contains(origin) {
        return Diagram::empty(d.n);
    }
    let mut comp = BTreeSet::new();
    comp.insert(origin);
    let mut stack = vec![origin];
    while let Some(c) = stack.pop() {
        let mut neighbors = vec![Cell::new(c.row + 1, c.col), Cell::new(c.row, c.col + 1)];
        if c.row > 1 {
            neighbors.push(Cell::new(c.row - 1, c.col));
        }
        if c.col > 1 {
            neighbors.push(Cell::new(c.row, c.col - 1));
        }
        for nb in neighbors {
            if d.contains(nb) && comp.insert(nb) {
                stack.push(nb);
            }
        }
    }
    Diagram { n: d.n, cells: comp }
}

/// The essential set Ess(π): south-east corners of the diagram, i.e. cells
/// (a,b) with (a+1,b) and (a,b+1) both absent.
pub fn essential_set(d: &Diagram) -> BTreeSet<Cell> {
    d.cells
        .iter()
        .copied()
        .filter(|c| {
            !d.contains(Cell::new(c.row + 1, c.col)) && !d.contains(Cell::new(c.row, c.col + 1))
        })
        .collect()
}

/// NW(π), dom(π), L(π) = NW − dom, and L′(π) = L − D, as plain set
/// differences on the unchanged grid.
pub fn regions(d: &Diagram) -> Regions {
    let mut nw_cells = BTreeSet::new();
    for c in &d.cells {
        for r in 1..=c.row {
            for k in 1..=c.col {
                nw_cells.insert(Cell::new(r, k));
            }
        }
    }
    let dom = dominant_piece(d);
    let l_cells: BTreeSet<Cell> = nw_cells.difference(&dom.cells).copied().collect();
    let lp_cells: BTreeSet<Cell> = l_cells.difference(&d.cells).copied().collect();
    Regions {
        nw: Diagram { n: d.n, cells: nw_cells },
        dom,
        l: Diagram { n: d.n, cells: l_cells },
        l_prime: Diagram { n: d.n, cells: lp_cells },
    }
}

/// Partition the cells of L(π) into components of the transitive closure of
/// "share a row or share a column".  (This is connectivity of the bipartite
/// graph whose edges are the cells — deliberately *not* the 4-adjacency
/// used for the dominant piece.)  Components are sorted by minimal cell.
pub fn l_components(l: &Diagram) -> Vec<BTreeSet<Cell>> {
    let cells: Vec<Cell> = l.cells.iter().copied().collect();
    if cells.is_empty() {
        return Vec::new();
    }
    // union-find over cell indices, grouped by shared row / shared column
    let mut parent: Vec<usize> = (0..cells.len()).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut by_row: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    let mut by_col: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for (i, c) in cells.iter().enumerate() {
        by_row.entry(c.row).or_default().push(i);
        by_col.entry(c.col).or_default().push(i);
    }
    for group in by_row.values().chain(by_col.values()) {
        for &x in &group[1..] {
            let rx = find(&mut parent, group[0]);
            let ry = find(&mut parent, x);
            if rx != ry {
                parent[rx] = ry;
            }
        }
    }
    let mut comps: std::collections::BTreeMap<usize, BTreeSet<Cell>> = Default::default();
    for (i, c) in cells.iter().enumerate() {
        let root = find(&mut parent, i);
        comps.entry(root).or_default().insert(*c);
    }
    let mut out: Vec<BTreeSet<Cell>> = comps.into_values().collect();
    out.sort_by_key(|s| *s.iter().next().unwrap());
    out
}

fn hook_component(lp_cells: BTreeSet<Cell>) -> HookComponent {
    if lp_cells.is_empty() {
        return HookComponent { cells: lp_cells, is_hook: false, corner: None };
    }
    let r0 = lp_cells.iter().map(|c| c.row).min().unwrap();
    let c0 = lp_cells.iter().map(|c| c.col).min().unwrap();
    let corner_cell = Cell::new(r0, c0);
    if !lp_cells.contains(&corner_cell) {
        return HookComponent { cells: lp_cells, is_hook: false, corner: None };
    }
    let is_hook = lp_cells.iter().all(|c| c.row == r0 || c.col == c0);
    HookComponent { cells: lp_cells, is_hook, corner: Some(corner_cell) }
}

/// Decide whether Y_π is toric: every L-component's L′ cells must form a
/// hook.  Components never share a row or column by construction, so the
/// hook test per component is the whole criterion.  The returned
/// [`HookDecomposition`] witnesses the verdict either way.
///
/// Cross-checked invariant: `is_toric(p).0 == (complexity(p) == 0)`.
///
/// # Examples
///
/// ```
/// use schubcone::rothe::{is_toric, Permutation};
///
/// assert!(is_toric(&Permutation::parse("[2,4,1,3]").unwrap()).0);
/// assert!(!is_toric(&Permutation::parse("[2,1,4,3]").unwrap()).0);
/// ```
pub fn is_toric(p: &Permutation) -> (bool, HookDecomposition) {
    let d = rothe_diagram(p);
    let reg = regions(&d);
    let comps = l_components(&reg.l);
    let components: Vec<HookComponent> = comps
        .into_iter()
        .map(|comp| {
            let lp: BTreeSet<Cell> = comp.intersection(&reg.l_prime.cells).copied().collect();
            hook_component(lp)
        })
        .collect();
    let toric = components.iter().all(|h| h.is_hook);
    (toric, HookDecomposition { components })
}

/// The complexity of Y_π as a T-variety:
/// `|L′(π)| − (m + n − k)` with m = occupied rows of L, n = occupied
/// columns, k = number of L-components; 0 when L(π) is empty.
///
/// Always ≥ 0, and equal to 0 exactly when [`is_toric`] holds (the two
/// criteria are independent implementations).
pub fn complexity(p: &Permutation) -> usize {
    let d = rothe_diagram(p);
    let reg = regions(&d);
    if reg.l.is_empty() {
        return 0;
    }
    let m = reg.l.occupied_rows().len();
    let n = reg.l.occupied_cols().len();
    let k = l_components(&reg.l).len();
    reg.l_prime.len() - (m + n - k)
}

// ======================================================================
// tests
// ======================================================================

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        Permutation::parse(s).unwrap()
    }

    fn cellset(pairs: &[(usize, usize)]) -> BTreeSet<Cell> {
        pairs.iter().map(|&(r, c)| Cell::new(r, c)).collect()
    }

    #[test]
    fn parse_accepts_brackets_commas_and_spaces() {
        assert_eq!(perm("[2,1,4,3]").images(), &[2, 1, 4, 3]);
        assert_eq!(perm("2 1 4 3").images(), &[2, 1, 4, 3]);
        assert_eq!(perm("2,1,4,3").images(), &[2, 1, 4, 3]);
        assert_eq!(perm("1 2 3").images(), &[1, 2, 3]);
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert_eq!(Permutation::parse(""), Err(RotheError::EmptyInput));
        assert_eq!(Permutation::parse("[]"), Err(RotheError::EmptyInput));
        assert_eq!(
            Permutation::parse("[2,2,3]"),
            Err(RotheError::NotABijection(vec![2, 2, 3]))
        );
        assert_eq!(
            Permutation::parse("[0,1]"),
            Err(RotheError::NonIntegerToken("0".into()))
        );
        assert_eq!(
            Permutation::parse("1 x 3"),
            Err(RotheError::NonIntegerToken("x".into()))
        );
        assert_eq!(
            Permutation::parse("[1,2,4]"),
            Err(RotheError::NotABijection(vec![1, 2, 4]))
        );
    }

    #[test]
    fn rothe_diagram_goldens() {
        assert_eq!(rothe_diagram(&perm("[2,1,4,3]")).cells(), &cellset(&[(1, 1), (3, 3)]));
        assert_eq!(
            rothe_diagram(&perm("[2,4,1,3]")).cells(),
            &cellset(&[(1, 1), (1, 2), (3, 2)])
        );
        assert!(rothe_diagram(&Permutation::identity(4)).is_empty());
        assert_eq!(rothe_diagram(&perm("[1,3,2]")).cells(), &cellset(&[(2, 2)]));
    }

    #[test]
    fn dominant_piece_goldens() {
        let d = rothe_diagram(&perm("[2,1,4,3]"));
        assert_eq!(dominant_piece(&d).cells(), &cellset(&[(1, 1)]));
        let d = rothe_diagram(&Permutation::identity(3));
        assert!(dominant_piece(&d).is_empty());
        // [3,4,1,2] has the 2×2 dominant block
        let d = rothe_diagram(&perm("[3,4,1,2]"));
        assert_eq!(d.cells(), &cellset(&[(1, 1), (1, 2), (2, 1), (2, 2)]));
        assert_eq!(dominant_piece(&d).cells(), d.cells());
        // [2,4,1,3]: dom = {(1,1),(1,2)}
        let d = rothe_diagram(&perm("[2,4,1,3]"));
        assert_eq!(dominant_piece(&d).cells(), &cellset(&[(1, 1), (1, 2)]));
    }

    #[test]
    fn essential_set_goldens() {
        let d = rothe_diagram(&perm("[2,1,4,3]"));
        assert_eq!(essential_set(&d), cellset(&[(1, 1), (3, 3)]));
        assert_eq!(essential_set(&Diagram::empty(3)), BTreeSet::new());
        let d = rothe_diagram(&perm("[2,4,1,3]"));
        assert_eq!(essential_set(&d), cellset(&[(1, 2), (3, 2)]));
    }

    #[test]
    fn regions_goldens() {
        // [2143]: |L′| = 7 = dim Y
        let reg = regions(&rothe_diagram(&perm("[2,1,4,3]")));
        assert_eq!(reg.nw.len(), 9);
        assert_eq!(reg.l.len(), 8);
        assert_eq!(reg.l_prime.len(), 7);
        // [2413]: L and L′ panels
        let reg = regions(&rothe_diagram(&perm("[2,4,1,3]")));
        assert_eq!(reg.l.cells(), &cellset(&[(2, 1), (2, 2), (3, 1), (3, 2)]));
        assert_eq!(reg.l_prime.cells(), &cellset(&[(2, 1), (2, 2), (3, 1)]));
        // identity: all empty
        let reg = regions(&rothe_diagram(&Permutation::identity(5)));
        assert!(reg.nw.is_empty() && reg.l.is_empty() && reg.l_prime.is_empty());
    }

    #[test]
    fn l_components_goldens() {
        let reg = regions(&rothe_diagram(&perm("[2,1,4,3]")));
        let comps = l_components(&reg.l);
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].len(), 8);
        assert!(l_components(&Diagram::empty(4)).is_empty());
        // [2,1,4,3,6,5]: one component of 24 cells (row/column closure glues
        // the block structure together)
        let reg = regions(&rothe_diagram(&perm("[2,1,4,3,6,5]")));
        let comps = l_components(&reg.l);
        assert_eq!(reg.l.len(), 24);
        assert_eq!(comps.len(), 1);
        // a genuinely disconnected L: two separate row/column groups
        let l = Diagram::from_cells(
            4,
            [(1, 1), (1, 2), (3, 3), (4, 3)].map(|(r, c)| Cell::new(r, c)),
        )
        .unwrap();
        assert_eq!(l_components(&l).len(), 2);
    }

    #[test]
    fn toric_goldens() {
        let (t, hd) = is_toric(&perm("[2,4,1,3]"));
        assert!(t);
        assert_eq!(hd.components.len(), 1);
        assert!(hd.components[0].is_hook);
        assert_eq!(hd.components[0].corner, Some(Cell::new(2, 1)));
        assert_eq!(hd.components[0].cells.len(), 3);

        let (t, hd) = is_toric(&perm("[2,1,4,3]"));
        assert!(!t);
        assert_eq!(hd.components.len(), 1);
        assert!(!hd.components[0].is_hook);

        assert!(is_toric(&perm("[1,10,8,7,6,9,4,5,2,3]")).0);
        assert!(is_toric(&Permutation::identity(4)).0);
        assert!(!is_toric(&perm("[2,1,4,3,6,5]")).0);
    }

    #[test]
    fn complexity_goldens() {
        assert_eq!(complexity(&perm("[2,1,4,3]")), 2);
        assert_eq!(complexity(&perm("[2,4,1,3]")), 0);
        assert_eq!(complexity(&Permutation::identity(4)), 0);
        assert_eq!(complexity(&perm("[2,1,4,3,6,5]")), 13);
        assert_eq!(complexity(&perm("[1,10,8,7,6,9,4,5,2,3]")), 0);
    }

    #[test]
    fn s10_example_region_counts() {
        let p = perm("[1,10,8,7,6,9,4,5,2,3]");
        let d = rothe_diagram(&p);
        let reg = regions(&d);
        assert_eq!(d.len(), 31);
        assert_eq!(reg.nw.len(), 47);
        assert!(reg.dom.is_empty());
        assert_eq!(reg.l.len(), 47);
        assert_eq!(reg.l_prime.len(), 16);
        assert_eq!(
            essential_set(&d),
            cellset(&[(3, 8), (5, 6), (6, 4), (7, 3), (9, 2)])
        );
        assert_eq!(reg.l.occupied_rows().len(), 9);
        assert_eq!(reg.l.occupied_cols().len(), 8);
    }

    #[test]
    fn hook_component_shapes() {
        // single cell: degenerate hook
        let h = hook_component(cellset(&[(2, 2)]));
        assert!(h.is_hook);
        assert_eq!(h.corner, Some(Cell::new(2, 2)));
        // missing corner: not a hook
        let h = hook_component(cellset(&[(1, 2), (2, 1)]));
        assert!(!h.is_hook);
        assert_eq!(h.corner, None);
        // 2×2 block: corner present but a cell off the arms
        let h = hook_component(cellset(&[(1, 1), (1, 2), (2, 1), (2, 2)]));
        assert!(!h.is_hook);
        // empty: not a hook
        let h = hook_component(BTreeSet::new());
        assert!(!h.is_hook);
    }

    /// Rank-zero description of the dominant piece, plus NW-closedness:
    /// dom = {(a,b) ∈ D : no i ≤ b has π(i) ≤ a}, and dom is closed under
    /// moving north/west inside the grid.
    #[test]
    fn dominant_piece_equals_rank_zero_cells_s5() {
        for p in Permutation::all_lexicographic(5) {
            let d = rothe_diagram(&p);
            let dom = dominant_piece(&d);
            let rank0: BTreeSet<Cell> = d
                .cells()
                .iter()
                .copied()
                .filter(|c| (1..=c.col).all(|i| p.image(i) > c.row))
                .collect();
            assert_eq!(dom.cells(), &rank0, "π = {p}");
            for c in dom.cells() {
                for r in 1..=c.row {
                    for k in 1..=c.col {
                        assert!(dom.contains(Cell::new(r, k)), "π = {p}, cell {c}");
                    }
                }
            }
        }
    }

    /// |D| = inversions, |L′| = |NW| − |D|, and the two toricness criteria
    /// agree, over all of S_5 (S_6/S_7 sweeps live in the acceptance suite).
    #[test]
    fn diagram_invariants_s5() {
        let mut toric_count = 0;
        for p in Permutation::all_lexicographic(5) {
            let d = rothe_diagram(&p);
            assert_eq!(d.len(), p.inversions(), "π = {p}");
            let reg = regions(&d);
            assert_eq!(reg.l_prime.len(), reg.nw.len() - d.len(), "π = {p}");
            let (t, _) = is_toric(&p);
            assert_eq!(t, complexity(&p) == 0, "π = {p}");
            if t {
                toric_count += 1;
            }
        }
        assert_eq!(toric_count, 90);
    }

    #[test]
    fn s3_s4_toric_counts() {
        let count = |n: usize| {
            Permutation::all_lexicographic(n)
                .iter()
                .filter(|p| is_toric(p).0)
                .count()
        };
        assert_eq!(count(3), 6);
        assert_eq!(count(4), 22);
    }
}
