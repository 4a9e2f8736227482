//! Text renderings of a permutation's combinatorial data.
//!
//! Three views, all pure text:
//!
//! * **rothe** — the N×N grid with `#` on the cells of the Rothe diagram
//!   D(π), `*` on the permutation's 1s (row π(i), column i), and `.`
//!   elsewhere.  The diagram never collides with a star: a cell (r,c) of
//!   D(π) always lies strictly north of the 1 in its column.
//! * **regions** — the same grid with one letter per region, each cell
//!   classified exactly once:
//!   `E` essential cells, `D` the rest of the dominant piece, `L` the
//!   remaining diagram cells (D(π) ∩ L(π), the ones subtracted from L to
//!   form L′), `P` the cells of L′(π), `.` everything else.  Together
//!   E/D/L/P tile NW(π).
//! * **graph-dot** — Graphviz DOT text for the bipartite graph G^π built
//!   from the L-region, with vertices named after their global grid rows
//!   (`r5`) and columns (`c2`).

use schubcone::bigraph::LabeledGraph;
use schubcone::rothe::{
    dominant_piece, essential_set, regions, rothe_diagram, Cell, Permutation,
};

// ======================================================================
// grids
// ======================================================================

/// The Rothe-diagram grid, one string per row.
pub fn rothe_grid(p: &Permutation) -> Vec<String> {
    let n = p.n();
    let d = rothe_diagram(p);
    let mut grid = vec![vec!['.'; n]; n];
    for i in 1..=n {
        grid[p.image(i) - 1][i - 1] = '*';
    }
    for cell in d.cells() {
        grid[cell.row - 1][cell.col - 1] = '#';
    }
    grid.into_iter().map(|row| row.into_iter().collect()).collect()
}

/// The region-overlay grid, one string per row.
pub fn regions_grid(p: &Permutation) -> Vec<String> {
    let n = p.n();
    let d = rothe_diagram(p);
    let reg = regions(&d);
    let dom = dominant_piece(&d);
    let ess = essential_set(&d);
    let mut grid = vec![vec!['.'; n]; n];
    for r in 1..=n {
        for c in 1..=n {
            let cell = Cell::new(r, c);
            grid[r - 1][c - 1] = if ess.contains(&cell) {
                'E'
            } else if dom.contains(cell) {
                'D'
            } else if d.contains(cell) {
                // A diagram cell outside the dominant piece sits in L(π)
                // and is exactly what L′ subtracts.
                'L'
            } else if reg.l_prime.contains(cell) {
                'P'
            } else {
                '.'
            };
        }
    }
    grid.into_iter().map(|row| row.into_iter().collect()).collect()
}

// ======================================================================
// DOT
// ======================================================================

/// DOT text for G^π with globally-labeled vertices.
///
/// An empty L-region renders as a graph with no vertices.
pub fn graph_dot(p: &Permutation) -> String {
    use std::fmt::Write as _;
    let reg = regions(&rothe_diagram(p));
    let lg = LabeledGraph::from_cells(reg.l.cells());
    let mut out = String::new();
    out.push_str("graph bipartite {\n  rankdir=LR;\n  node [shape=circle];\n");
    if !lg.row_labels.is_empty() {
        out.push_str("  { rank=same;");
        for r in &lg.row_labels {
            let _ = write!(out, " r{r};");
        }
        out.push_str(" }\n");
    }
    if !lg.col_labels.is_empty() {
        out.push_str("  { rank=same;");
        for c in &lg.col_labels {
            let _ = write!(out, " c{c};");
        }
        out.push_str(" }\n");
    }
    for &(i, j) in lg.graph.edges() {
        let _ = writeln!(
            out,
            "  r{} -- c{};",
            lg.row_labels[i - 1],
            lg.col_labels[j - 1]
        );
    }
    out.push_str("}\n");
    out
}

// ======================================================================
// tests
// ======================================================================

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(p: &str, f: fn(&Permutation) -> Vec<String>) -> Vec<String> {
        f(&Permutation::parse(p).unwrap())
    }

    #[test]
    fn rothe_grid_marks_cells_and_ones() {
        assert_eq!(
            grid("[2,1,4,3]", rothe_grid),
            vec!["#*..", "*...", "..#*", "..*."],
        );
    }

    #[test]
    fn rothe_grid_of_identity_has_no_diagram_cells() {
        assert_eq!(grid("[1,2,3]", rothe_grid), vec!["*..", ".*.", "..*"]);
    }

    #[test]
    fn regions_grid_tiles_the_northwest_closure() {
        // dom = {(1,1),(1,2)} with (1,2) essential; (3,2) is essential
        // inside L; L′ is the three-cell hook.
        assert_eq!(
            grid("[2,4,1,3]", regions_grid),
            vec!["DE..", "PP..", "PE..", "...."],
        );
        // (2,2) is a diagram cell outside the dominant piece and not
        // essential — the one place the letter L appears.
        assert_eq!(
            grid("[1,4,3,2]", regions_grid),
            vec!["PPP.", "PLE.", "PE..", "...."],
        );
    }

    #[test]
    fn regions_grid_non_toric_example() {
        assert_eq!(
            grid("[2,1,4,3]", regions_grid),
            vec!["EPP.", "PPP.", "PPE.", "...."],
        );
    }

    #[test]
    fn dot_output_lists_global_edges() {
        let dot = graph_dot(&Permutation::parse("[2,4,1,3]").unwrap());
        assert_eq!(dot.matches(" -- ").count(), 4, "G^[2,4,1,3] = K_{{2,2}}");
        assert!(dot.contains("r2 -- c1;"));
        assert!(dot.contains("r3 -- c2;"));
        assert!(dot.starts_with("graph bipartite {"));
    }

    #[test]
    fn dot_output_of_trivial_permutation_is_vertexless() {
        let dot = graph_dot(&Permutation::identity(3));
        assert!(!dot.contains("rank=same"));
        assert!(!dot.contains(" -- "));
    }
}
