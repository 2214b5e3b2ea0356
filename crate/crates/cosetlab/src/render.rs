//! DOT and ASCII renderings of a coset intersection graph and its
//! chessboards.

use std::fmt::Write;

use crate::graph::{edge_intersection, Chessboard, CosetGraph};

/// What to print in each chessboard cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CellStyle {
    /// The common tile size.
    TileSize,
    /// The tile's minimal element in cycle notation.
    Representatives,
}

/// Graphviz rendering: one cluster per chessboard, left vertices `L_<cycles>`
/// and right vertices `R_<cycles>`, laid out left to right.
pub fn to_dot(graph: &CosetGraph, boards: &[Chessboard]) -> String {
    let mut out = String::from("graph coset_intersection {\n  rankdir=LR;\n");
    for (index, board) in boards.iter().enumerate() {
        let _ = writeln!(out, "  subgraph cluster_{index} {{");
        let _ = writeln!(
            out,
            "    label=\"comp_{{{},{}}} tile={} double_coset={}\";",
            board.s(),
            board.t(),
            board.tile_size(),
            board.double_coset_rep()
        );
        for &li in board.left_indices() {
            let _ = writeln!(
                out,
                "    \"L_{}\";",
                graph.left_vertices()[li].representative()
            );
        }
        for &rj in board.right_indices() {
            let _ = writeln!(
                out,
                "    \"R_{}\";",
                graph.right_vertices()[rj].representative()
            );
        }
        for &li in board.left_indices() {
            for &rj in graph.neighbors(li) {
                let _ = writeln!(
                    out,
                    "    \"L_{}\" -- \"R_{}\";",
                    graph.left_vertices()[li].representative(),
                    graph.right_vertices()[rj].representative()
                );
            }
        }
        out.push_str("  }\n");
    }
    out.push_str("}\n");
    out
}

/// Plain-text chessboards: one block per component, columns are left cosets,
/// rows are right cosets.
pub fn to_ascii(graph: &CosetGraph, boards: &[Chessboard], cells: CellStyle) -> String {
    let mut out = String::new();
    for (index, board) in boards.iter().enumerate() {
        if index > 0 {
            out.push('\n');
        }
        let _ = writeln!(
            out,
            "chessboard {}: s={} t={} double_coset={} size={} tile={}",
            index + 1,
            board.s(),
            board.t(),
            board.double_coset_rep(),
            board.double_coset_size(),
            board.tile_size()
        );

        let column_labels: Vec<String> = board
            .left_indices()
            .iter()
            .map(|&li| format!("L_{}", graph.left_vertices()[li].representative()))
            .collect();
        let row_labels: Vec<String> = board
            .right_indices()
            .iter()
            .map(|&rj| format!("R_{}", graph.right_vertices()[rj].representative()))
            .collect();

        let cell_text = |li: usize, rj: usize| -> String {
            match cells {
                CellStyle::TileSize => board.tile_size().to_string(),
                CellStyle::Representatives => {
                    let tile = edge_intersection(
                        &graph.left_vertices()[li],
                        &graph.right_vertices()[rj],
                    )
                    .expect("graph cosets have the correct sides");
                    match tile.first() {
                        Some(p) => p.to_cycles(),
                        None => "-".to_string(),
                    }
                }
            }
        };

        let grid: Vec<Vec<String>> = board
            .right_indices()
            .iter()
            .map(|&rj| {
                board
                    .left_indices()
                    .iter()
                    .map(|&li| cell_text(li, rj))
                    .collect()
            })
            .collect();

        let row_width = row_labels.iter().map(String::len).max().unwrap_or(0);
        let mut column_widths: Vec<usize> = column_labels.iter().map(String::len).collect();
        for row in &grid {
            for (c, cell) in row.iter().enumerate() {
                column_widths[c] = column_widths[c].max(cell.len());
            }
        }

        let _ = write!(out, "{:row_width$}", "");
        for (c, label) in column_labels.iter().enumerate() {
            let _ = write!(out, "  {:>width$}", label, width = column_widths[c]);
        }
        out.push('\n');
        for (r, row) in grid.iter().enumerate() {
            let _ = write!(out, "{:<row_width$}", row_labels[r]);
            for (c, cell) in row.iter().enumerate() {
                let _ = write!(out, "  {:>width$}", cell, width = column_widths[c]);
            }
            out.push('\n');
        }
    }
    out
}
