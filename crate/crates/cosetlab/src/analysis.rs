//! Orchestrates a full analysis of one triple `(G, H, K)` into a
//! serializable report: orders and indices, the chessboard decomposition,
//! the structural checks, and optional transversal and counting sections.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::counting::full_count_report;
use crate::error::{Error, Result};
use crate::graph::{
    double_cosets, verify_complete_bipartite, verify_double_coset_correspondence, verify_ratio,
    verify_tile_uniformity, CosetGraph,
};
use crate::group::PermutationGroup;
use crate::transversal::{
    extendable_transversal, hall_matching_transversal, left_right_transversal, left_transversal,
    right_transversal, verify_transversal, Transversal, TransversalKind,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChessboardReport {
    pub s: usize,
    pub t: usize,
    pub double_coset_rep: String,
    pub double_coset_size: usize,
    pub tile_size: usize,
    pub left_reps: Vec<String>,
    pub right_reps: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransversalSection {
    pub kind: String,
    pub elements: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub extension: Vec<String>,
    pub verified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountSection {
    pub g: String,
    pub m_direct: usize,
    pub m_by_order: usize,
    pub m_by_index: usize,
    pub symmetric_direct: usize,
    pub symmetric_by_order: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub group_order: usize,
    pub h_order: usize,
    pub k_order: usize,
    pub h_index: usize,
    pub k_index: usize,
    pub chessboards: Vec<ChessboardReport>,
    pub checks: BTreeMap<String, bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub transversal: Option<TransversalSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counts: Option<Vec<CountSection>>,
}

impl AnalysisReport {
    pub fn all_checks_pass(&self) -> bool {
        self.checks.values().all(|&ok| ok)
            && self.transversal.as_ref().is_none_or(|t| t.verified)
    }
}

/// Which optional report sections to populate.
#[derive(Debug, Clone, Copy, Default)]
pub struct AnalysisOptions {
    pub with_transversal: bool,
    pub with_counts: bool,
}

/// Runs the whole pipeline on one triple.
pub fn analyze(
    group: &PermutationGroup,
    h: &PermutationGroup,
    k: &PermutationGroup,
    options: AnalysisOptions,
) -> Result<AnalysisReport> {
    let graph = CosetGraph::build(group, h, k)?;
    let boards = graph.components()?;
    let dcs = double_cosets(group, h, k)?;

    let mut checks = BTreeMap::new();
    checks.insert(
        "complete_bipartite".to_string(),
        verify_complete_bipartite(&graph).passed,
    );
    checks.insert("ratio_law".to_string(), verify_ratio(&graph).passed);
    checks.insert(
        "double_coset_correspondence".to_string(),
        verify_double_coset_correspondence(&graph, &dcs).passed,
    );
    checks.insert(
        "tile_uniformity".to_string(),
        verify_tile_uniformity(&graph).passed,
    );

    let chessboards = boards
        .iter()
        .map(|board| ChessboardReport {
            s: board.s(),
            t: board.t(),
            double_coset_rep: board.double_coset_rep().to_cycles(),
            double_coset_size: board.double_coset_size(),
            tile_size: board.tile_size(),
            left_reps: board
                .left_indices()
                .iter()
                .map(|&li| graph.left_vertices()[li].representative().to_cycles())
                .collect(),
            right_reps: board
                .right_indices()
                .iter()
                .map(|&rj| graph.right_vertices()[rj].representative().to_cycles())
                .collect(),
        })
        .collect();

    let transversal = if options.with_transversal {
        let t = left_right_transversal(group, h)?;
        let verified = verify_transversal(group, h, h, &t)?.passed;
        Some(TransversalSection {
            kind: t.kind().as_str().to_string(),
            elements: t.elements().iter().map(|e| e.to_cycles()).collect(),
            extension: Vec::new(),
            verified,
        })
    } else {
        None
    };

    let counts = if options.with_counts {
        Some(
            boards
                .iter()
                .map(|board| {
                    let report = full_count_report(group, h, k, board.double_coset_rep())?;
                    Ok(CountSection {
                        g: report.g.to_cycles(),
                        m_direct: report.m_direct,
                        m_by_order: report.m_by_order,
                        m_by_index: report.m_by_index,
                        symmetric_direct: report.symmetric_direct,
                        symmetric_by_order: report.symmetric_by_order,
                    })
                })
                .collect::<Result<Vec<_>>>()?,
        )
    } else {
        None
    };

    Ok(AnalysisReport {
        group_order: group.order(),
        h_order: h.order(),
        k_order: k.order(),
        h_index: group.index_of(h)?,
        k_index: group.index_of(k)?,
        chessboards,
        checks,
        transversal,
        counts,
    })
}

/// Transversal construction modes exposed on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransversalMode {
    Left,
    Right,
    LeftRight,
    Extendable,
    HallMatching,
}

impl TransversalMode {
    pub fn parse(name: &str) -> Result<TransversalMode> {
        match name {
            "left" => Ok(TransversalMode::Left),
            "right" => Ok(TransversalMode::Right),
            "left-right" => Ok(TransversalMode::LeftRight),
            "extendable" => Ok(TransversalMode::Extendable),
            "hall" | "matching" => Ok(TransversalMode::HallMatching),
            other => Err(Error::BadCatalogParameters(format!(
                "unknown transversal mode {other:?}; expected left, right, left-right, extendable or hall"
            ))),
        }
    }
}

/// Builds and verifies the requested transversal of `(G, H, K)`.
pub fn transversal_section(
    group: &PermutationGroup,
    h: &PermutationGroup,
    k: &PermutationGroup,
    mode: TransversalMode,
) -> Result<TransversalSection> {
    let (t, extension): (Transversal, Vec<_>) = match mode {
        TransversalMode::Left => (left_transversal(group, h)?, Vec::new()),
        TransversalMode::Right => (right_transversal(group, h)?, Vec::new()),
        TransversalMode::LeftRight => (left_right_transversal(group, h)?, Vec::new()),
        TransversalMode::HallMatching => (hall_matching_transversal(group, h)?, Vec::new()),
        TransversalMode::Extendable => extendable_transversal(group, h, k)?,
    };
    // modes other than `extendable` construct transversals of H alone
    let subgroup_for_right = match mode {
        TransversalMode::Extendable => k,
        _ => h,
    };
    let mut verified = verify_transversal(group, h, subgroup_for_right, &t)?.passed;
    if t.kind() == TransversalKind::LeftExtendableToRight {
        let mut full = t.elements().to_vec();
        full.extend(extension.iter().cloned());
        let combined =
            Transversal::candidate(TransversalKind::Right, full, group.index_of(k)?, None);
        verified &= verify_transversal(group, h, k, &combined)?.passed;
    }
    Ok(TransversalSection {
        kind: t.kind().as_str().to_string(),
        elements: t.elements().iter().map(|e| e.to_cycles()).collect(),
        extension: extension.iter().map(|e| e.to_cycles()).collect(),
        verified,
    })
}
