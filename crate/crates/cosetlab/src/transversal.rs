//! Transversals: one element per coset. The chessboard decomposition gives a
//! direct construction of a left transversal that extends to a right
//! transversal (and of left-right transversals when the two subgroups
//! coincide); a bipartite maximum matching reproduces the same guarantee by
//! the classical route and serves as an independent cross-check.

use crate::error::{Error, Result};
use crate::graph::{edge_intersection, CosetGraph, Verdict};
use crate::group::PermutationGroup;
use crate::perm::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransversalKind {
    /// One element in each left coset of `H`.
    Left,
    /// One element in each right coset of `K`.
    Right,
    /// Simultaneously a left and a right transversal for `H`.
    LeftRight,
    /// A left transversal for `H` whose elements lie in pairwise distinct
    /// right cosets of `K`.
    LeftExtendableToRight,
}

impl TransversalKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            TransversalKind::Left => "left",
            TransversalKind::Right => "right",
            TransversalKind::LeftRight => "left-right",
            TransversalKind::LeftExtendableToRight => "left-extendable-to-right",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transversal {
    kind: TransversalKind,
    elements: Vec<Permutation>,
    h_index: usize,
    k_index: Option<usize>,
}

impl Transversal {
    /// Wraps an arbitrary element list as a claimed transversal of the given
    /// kind, so it can be checked with [`verify_transversal`]. Nothing is
    /// validated here.
    pub fn candidate(
        kind: TransversalKind,
        elements: Vec<Permutation>,
        h_index: usize,
        k_index: Option<usize>,
    ) -> Transversal {
        Transversal {
            kind,
            elements,
            h_index,
            k_index,
        }
    }

    pub fn kind(&self) -> TransversalKind {
        self.kind
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// `|G:H|`, the number of cosets the transversal must hit.
    pub fn h_index(&self) -> usize {
        self.h_index
    }

    /// `|G:K|` when a second subgroup is involved.
    pub fn k_index(&self) -> Option<usize> {
        self.k_index
    }
}

/// Canonical representatives of the left cosets of `H`.
pub fn left_transversal(
    group: &PermutationGroup,
    h: &PermutationGroup,
) -> Result<Transversal> {
    let cosets = group.left_cosets(h)?;
    Ok(Transversal {
        kind: TransversalKind::Left,
        h_index: cosets.len(),
        k_index: None,
        elements: cosets.iter().map(|c| c.representative().clone()).collect(),
    })
}

/// Canonical representatives of the right cosets of `K`.
pub fn right_transversal(
    group: &PermutationGroup,
    k: &PermutationGroup,
) -> Result<Transversal> {
    let cosets = group.right_cosets(k)?;
    Ok(Transversal {
        kind: TransversalKind::Right,
        h_index: cosets.len(),
        k_index: None,
        elements: cosets.iter().map(|c| c.representative().clone()).collect(),
    })
}

/// The chessboard-diagonal construction. Requires `|G:H| ≤ |G:K|`, which
/// forces `s_i ≤ t_i` on every board. Pairs the `j`-th left coset of every
/// chessboard with its `j`-th right coset (canonical order) and takes the
/// minimal element of each diagonal tile; the result is a left transversal
/// for `H` whose elements lie in pairwise distinct right cosets of `K`.
/// The second return value holds one canonical representative per unused
/// right coset, so the union of the two is a right transversal for `K`.
pub fn extendable_transversal(
    group: &PermutationGroup,
    h: &PermutationGroup,
    k: &PermutationGroup,
) -> Result<(Transversal, Vec<Permutation>)> {
    let h_index = group.index_of(h)?;
    let k_index = group.index_of(k)?;
    if h_index > k_index {
        return Err(Error::IndexCondition { h_index, k_index });
    }

    let graph = CosetGraph::build(group, h, k)?;
    let boards = graph.components()?;
    let mut elements = Vec::with_capacity(h_index);
    let mut extension = Vec::with_capacity(k_index - h_index);
    for board in &boards {
        let (s, t) = (board.s(), board.t());
        if s > t {
            return Err(Error::Internal(format!(
                "chessboard with s={s} > t={t} despite |G:H| <= |G:K|"
            )));
        }
        for j in 0..s {
            let left = &graph.left_vertices()[board.left_indices()[j]];
            let right = &graph.right_vertices()[board.right_indices()[j]];
            let tile = edge_intersection(left, right)?;
            match tile.first() {
                Some(min) => elements.push(min.clone()),
                None => {
                    return Err(Error::Internal(
                        "empty diagonal tile in a complete bipartite component".into(),
                    ))
                }
            }
        }
        for &rj in &board.right_indices()[s..] {
            extension.push(graph.right_vertices()[rj].representative().clone());
        }
    }

    Ok((
        Transversal {
            kind: TransversalKind::LeftExtendableToRight,
            elements,
            h_index,
            k_index: Some(k_index),
        },
        extension,
    ))
}

/// A set that is simultaneously a left and a right transversal for `H`,
/// obtained from the chessboard diagonals of the graph of `H` against itself.
pub fn left_right_transversal(
    group: &PermutationGroup,
    h: &PermutationGroup,
) -> Result<Transversal> {
    let (transversal, extension) = extendable_transversal(group, h, h)?;
    if !extension.is_empty() {
        return Err(Error::Internal(
            "H-against-H chessboards are square, yet right cosets were left over".into(),
        ));
    }
    Ok(Transversal {
        kind: TransversalKind::LeftRight,
        elements: transversal.elements,
        h_index: transversal.h_index,
        k_index: None,
    })
}

/// A left-right transversal for `H` obtained independently of the chessboard
/// structure: a maximum bipartite matching on the graph of `H` against itself
/// (simple augmenting paths), then one element from each matched edge. The
/// matching is guaranteed perfect; anything less signals a bug.
pub fn hall_matching_transversal(
    group: &PermutationGroup,
    h: &PermutationGroup,
) -> Result<Transversal> {
    let graph = CosetGraph::build(group, h, h)?;
    let n = graph.left_vertices().len();

    // Kuhn's algorithm; deterministic because vertices and adjacency are
    // in canonical order.
    let mut right_match: Vec<Option<usize>> = vec![None; graph.right_vertices().len()];
    fn augment(
        graph: &CosetGraph,
        li: usize,
        visited: &mut [bool],
        right_match: &mut [Option<usize>],
    ) -> bool {
        for &rj in graph.neighbors(li) {
            if visited[rj] {
                continue;
            }
            visited[rj] = true;
            if right_match[rj].is_none()
                || augment(graph, right_match[rj].unwrap(), visited, right_match)
            {
                right_match[rj] = Some(li);
                return true;
            }
        }
        false
    }
    let mut matched = 0;
    for li in 0..n {
        let mut visited = vec![false; graph.right_vertices().len()];
        if augment(&graph, li, &mut visited, &mut right_match) {
            matched += 1;
        }
    }
    if matched != n {
        return Err(Error::Internal(format!(
            "maximum matching covers {matched} of {n} left cosets; it must be perfect"
        )));
    }

    let mut left_match: Vec<Option<usize>> = vec![None; n];
    for (rj, li) in right_match.iter().enumerate() {
        if let Some(li) = li {
            left_match[*li] = Some(rj);
        }
    }
    let elements = left_match
        .iter()
        .enumerate()
        .map(|(li, rj)| {
            let rj = rj.ok_or_else(|| Error::Internal("unmatched left coset".into()))?;
            let tile =
                edge_intersection(&graph.left_vertices()[li], &graph.right_vertices()[rj])?;
            tile.first()
                .cloned()
                .ok_or_else(|| Error::Internal("matched edge with empty intersection".into()))
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(Transversal {
        kind: TransversalKind::LeftRight,
        elements,
        h_index: n,
        k_index: None,
    })
}

/// Checks a candidate transversal against the definition of its kind by
/// recomputing coset membership counts. `h` is the subgroup for the left
/// (and left-right) conditions, `k` the subgroup for the right conditions;
/// for `LeftRight` the right condition also uses `h`.
pub fn verify_transversal(
    group: &PermutationGroup,
    h: &PermutationGroup,
    k: &PermutationGroup,
    transversal: &Transversal,
) -> Result<Verdict> {
    let mut violations = Vec::new();
    for element in transversal.elements() {
        if !group.contains(element) {
            violations.push(format!("{element} is not an element of the group"));
        }
    }
    if !violations.is_empty() {
        return Ok(Verdict {
            passed: false,
            violations,
        });
    }

    let mut check = |cosets: &[crate::coset::Coset], label: &str, exactly_once: bool| {
        for coset in cosets {
            let hits = transversal
                .elements()
                .iter()
                .filter(|e| coset.contains(e))
                .count();
            let bad = if exactly_once { hits != 1 } else { hits > 1 };
            if bad {
                violations.push(format!(
                    "{label} coset of {} is hit {hits} times",
                    coset.representative()
                ));
            }
        }
    };

    match transversal.kind() {
        TransversalKind::Left => check(&group.left_cosets(h)?, "left", true),
        TransversalKind::Right => check(&group.right_cosets(k)?, "right", true),
        TransversalKind::LeftRight => {
            check(&group.left_cosets(h)?, "left", true);
            check(&group.right_cosets(h)?, "right", true);
        }
        TransversalKind::LeftExtendableToRight => {
            check(&group.left_cosets(h)?, "left", true);
            check(&group.right_cosets(k)?, "right", false);
        }
    }
    Ok(Verdict {
        passed: violations.is_empty(),
        violations,
    })
}
