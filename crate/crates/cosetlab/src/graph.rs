//! The coset intersection graph of two subgroups: left cosets of `H` on one
//! side, right cosets of `K` on the other, with an edge wherever two cosets
//! share an element. Its connected components are complete bipartite and
//! correspond to the double cosets `KgH`; drawn as grids they are the
//! "chessboards" that tile the group.

use std::collections::HashMap;

use crate::coset::{Coset, CosetSide};
use crate::error::{Error, Result};
use crate::group::PermutationGroup;
use crate::perm::Permutation;

/// A connected component before any bookkeeping: its sorted left- and
/// right-vertex indices.
type RawComponent = (Vec<usize>, Vec<usize>);

/// Bipartite graph on all left cosets of `H` and all right cosets of `K`.
///
/// A coset that happens to be both a left coset of `H` and a right coset of
/// `K` (for example `H` itself when `H = K`) still appears as two distinct
/// vertices, one on each side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetGraph {
    left: Vec<Coset>,
    right: Vec<Coset>,
    /// For each left vertex, the sorted indices of adjacent right vertices.
    adjacency: Vec<Vec<usize>>,
    h: PermutationGroup,
    k: PermutationGroup,
    group_order: usize,
}

impl CosetGraph {
    /// Builds the graph for `H, K ≤ G`. Deterministic: vertices are sorted by
    /// canonical representative and adjacency lists are sorted.
    pub fn build(
        group: &PermutationGroup,
        h: &PermutationGroup,
        k: &PermutationGroup,
    ) -> Result<CosetGraph> {
        group.check_subgroup(h, "H")?;
        group.check_subgroup(k, "K")?;
        let left = group.left_cosets(h)?;
        let right = group.right_cosets(k)?;

        let mut right_of: HashMap<&Permutation, usize> = HashMap::with_capacity(group.order());
        for (j, coset) in right.iter().enumerate() {
            for member in coset.members() {
                right_of.insert(member, j);
            }
        }

        let adjacency = left
            .iter()
            .map(|coset| {
                let mut indices: Vec<usize> =
                    coset.members().iter().map(|m| right_of[m]).collect();
                indices.sort_unstable();
                indices.dedup();
                indices
            })
            .collect();

        Ok(CosetGraph {
            left,
            right,
            adjacency,
            h: h.clone(),
            k: k.clone(),
            group_order: group.order(),
        })
    }

    pub fn left_vertices(&self) -> &[Coset] {
        &self.left
    }

    pub fn right_vertices(&self) -> &[Coset] {
        &self.right
    }

    /// Sorted right-vertex indices adjacent to the given left vertex.
    pub fn neighbors(&self, left_index: usize) -> &[usize] {
        &self.adjacency[left_index]
    }

    pub fn is_edge(&self, left_index: usize, right_index: usize) -> bool {
        self.adjacency[left_index].binary_search(&right_index).is_ok()
    }

    /// `m = |H|`.
    pub fn h_order(&self) -> usize {
        self.h.order()
    }

    /// `n = |K|`.
    pub fn k_order(&self) -> usize {
        self.k.order()
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn h_index(&self) -> usize {
        self.left.len()
    }

    pub fn k_index(&self) -> usize {
        self.right.len()
    }

    pub fn subgroup_h(&self) -> &PermutationGroup {
        &self.h
    }

    pub fn subgroup_k(&self) -> &PermutationGroup {
        &self.k
    }

    /// Deletes one edge, returning whether it was present. The result is no
    /// longer a coset intersection graph; this exists so the verifiers can be
    /// exercised against deliberately broken inputs.
    pub fn remove_edge(&mut self, left_index: usize, right_index: usize) -> bool {
        match self.adjacency[left_index].binary_search(&right_index) {
            Ok(pos) => {
                self.adjacency[left_index].remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    /// Connected components as `(left indices, right indices)`, both sorted,
    /// ordered by smallest left vertex. Right vertices unreachable from any
    /// left vertex are returned separately (impossible for honest graphs).
    fn traverse(&self) -> (Vec<RawComponent>, Vec<usize>) {
        let mut right_to_left: Vec<Vec<usize>> = vec![Vec::new(); self.right.len()];
        for (li, neighbors) in self.adjacency.iter().enumerate() {
            for &rj in neighbors {
                right_to_left[rj].push(li);
            }
        }

        let mut seen_left = vec![false; self.left.len()];
        let mut seen_right = vec![false; self.right.len()];
        let mut components = Vec::new();

        for start in 0..self.left.len() {
            if seen_left[start] {
                continue;
            }
            let mut lefts = Vec::new();
            let mut rights = Vec::new();
            let mut queue = vec![start];
            seen_left[start] = true;
            while let Some(li) = queue.pop() {
                lefts.push(li);
                for &rj in &self.adjacency[li] {
                    if !seen_right[rj] {
                        seen_right[rj] = true;
                        rights.push(rj);
                        for &li2 in &right_to_left[rj] {
                            if !seen_left[li2] {
                                seen_left[li2] = true;
                                queue.push(li2);
                            }
                        }
                    }
                }
            }
            lefts.sort_unstable();
            rights.sort_unstable();
            components.push((lefts, rights));
        }

        let unreached = (0..self.right.len()).filter(|&j| !seen_right[j]).collect();
        (components, unreached)
    }

    /// Decomposes the graph into its chessboards. Fails on isolated vertices
    /// or if the double-coset bookkeeping does not line up; either signals a
    /// bug, not bad input.
    pub fn components(&self) -> Result<Vec<Chessboard>> {
        let (raw, unreached) = self.traverse();
        if !unreached.is_empty() {
            return Err(Error::Internal(format!(
                "isolated right vertex {}",
                self.right[unreached[0]].representative()
            )));
        }
        raw.into_iter()
            .map(|(lefts, rights)| {
                if rights.is_empty() {
                    return Err(Error::Internal(format!(
                        "isolated left vertex {}",
                        self.left[lefts[0]].representative()
                    )));
                }
                let s = lefts.len();
                let t = rights.len();
                let size = s * self.h_order();
                if size != t * self.k_order() {
                    return Err(Error::Internal(format!(
                        "component covers {size} elements by left cosets but {} by right cosets",
                        t * self.k_order()
                    )));
                }
                // the union's minimum is the first left coset's representative
                let rep = self.left[lefts[0]].representative().clone();
                let tile_size = self.h.conjugate_by(&rep)?.intersect(&self.k)?.order();
                let witness =
                    edge_intersection(&self.left[lefts[0]], &self.right[rights[0]])?;
                if witness.len() != tile_size {
                    return Err(Error::Internal(format!(
                        "tile size {} from |gHg^-1 ∩ K| disagrees with a materialized tile of {}",
                        tile_size,
                        witness.len()
                    )));
                }
                Ok(Chessboard {
                    left_indices: lefts,
                    right_indices: rights,
                    double_coset_rep: rep,
                    double_coset_size: size,
                    tile_size,
                })
            })
            .collect()
    }

    /// The `t × s` grid of one chessboard: rows are its right cosets, columns
    /// its left cosets, each cell the (always nonempty) intersection. The
    /// board must come from this graph.
    pub fn tiles(&self, board: &Chessboard) -> Vec<Vec<Vec<Permutation>>> {
        board
            .right_indices
            .iter()
            .map(|&rj| {
                board
                    .left_indices
                    .iter()
                    .map(|&li| {
                        edge_intersection(&self.left[li], &self.right[rj])
                            .expect("graph vertices have the correct sides")
                    })
                    .collect()
            })
            .collect()
    }
}

/// One connected component of the graph: `s` left cosets completely joined to
/// `t` right cosets, covering exactly one double coset `KgH`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chessboard {
    left_indices: Vec<usize>,
    right_indices: Vec<usize>,
    double_coset_rep: Permutation,
    double_coset_size: usize,
    tile_size: usize,
}

impl Chessboard {
    /// Sorted left-vertex indices; `s` is their count.
    pub fn left_indices(&self) -> &[usize] {
        &self.left_indices
    }

    /// Sorted right-vertex indices; `t` is their count.
    pub fn right_indices(&self) -> &[usize] {
        &self.right_indices
    }

    pub fn s(&self) -> usize {
        self.left_indices.len()
    }

    pub fn t(&self) -> usize {
        self.right_indices.len()
    }

    /// Lexicographically minimal element of the covered double coset.
    pub fn double_coset_rep(&self) -> &Permutation {
        &self.double_coset_rep
    }

    pub fn double_coset_size(&self) -> usize {
        self.double_coset_size
    }

    /// `|gHg⁻¹ ∩ K|`: the common cardinality of every tile on this board.
    pub fn tile_size(&self) -> usize {
        self.tile_size
    }
}

/// A double coset `KgH` with its members sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleCoset {
    members: Vec<Permutation>,
}

impl DoubleCoset {
    /// The lexicographically minimal member.
    pub fn representative(&self) -> &Permutation {
        &self.members[0]
    }

    pub fn members(&self) -> &[Permutation] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    /// Always false: a double coset contains at least its representative.
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.members.binary_search(p).is_ok()
    }
}

/// Partitions `G` into double cosets `KgH` (note the order: `K` acts on the
/// left). Sorted by representative.
pub fn double_cosets(
    group: &PermutationGroup,
    h: &PermutationGroup,
    k: &PermutationGroup,
) -> Result<Vec<DoubleCoset>> {
    group.check_subgroup(h, "H")?;
    group.check_subgroup(k, "K")?;

    let position: HashMap<&Permutation, usize> = group
        .elements()
        .iter()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    let mut assigned = vec![false; group.order()];
    let mut out = Vec::new();

    for (i, g) in group.elements().iter().enumerate() {
        if assigned[i] {
            continue;
        }
        let mut members = Vec::with_capacity(h.order() * k.order());
        for kk in k.elements() {
            let kg = kk.compose(g)?;
            for hh in h.elements() {
                members.push(kg.compose(hh)?);
            }
        }
        members.sort_unstable();
        members.dedup();
        for member in &members {
            assigned[position[member]] = true;
        }
        out.push(DoubleCoset { members });
    }
    Ok(out)
}

/// The element set `aH ∩ Kb` of a (potential) edge; empty when the cosets do
/// not meet. Both inputs must come from the expected sides.
pub fn edge_intersection(left: &Coset, right: &Coset) -> Result<Vec<Permutation>> {
    if left.side() != CosetSide::LeftOfH || right.side() != CosetSide::RightOfK {
        return Err(Error::SideMismatch);
    }
    let (mut i, mut j) = (0, 0);
    let (a, b) = (left.members(), right.members());
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i].clone());
                i += 1;
                j += 1;
            }
        }
    }
    Ok(out)
}

/// Outcome of one structural verification: pass/fail plus the list of
/// violations found (empty iff passed).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub passed: bool,
    pub violations: Vec<String>,
}

impl Verdict {
    fn from_violations(violations: Vec<String>) -> Verdict {
        Verdict {
            passed: violations.is_empty(),
            violations,
        }
    }
}

/// Checks that every connected component is complete bipartite: each
/// (left, right) pair inside one component must be an edge.
pub fn verify_complete_bipartite(graph: &CosetGraph) -> Verdict {
    let (components, unreached) = graph.traverse();
    let mut violations = Vec::new();
    for rj in unreached {
        violations.push(format!(
            "right coset of {} is isolated",
            graph.right[rj].representative()
        ));
    }
    for (lefts, rights) in components {
        if rights.is_empty() {
            violations.push(format!(
                "left coset of {} is isolated",
                graph.left[lefts[0]].representative()
            ));
            continue;
        }
        for &li in &lefts {
            for &rj in &rights {
                if !graph.is_edge(li, rj) {
                    violations.push(format!(
                        "left coset of {} and right coset of {} lie in one component but are not adjacent",
                        graph.left[li].representative(),
                        graph.right[rj].representative()
                    ));
                }
            }
        }
    }
    Verdict::from_violations(violations)
}

/// Checks the ratio law `s_i·|H| = t_i·|K|` on every component, plus the
/// totals `Σs_i = |G:H|` and `Σt_i = |G:K|`.
pub fn verify_ratio(graph: &CosetGraph) -> Verdict {
    let (components, unreached) = graph.traverse();
    let mut violations = Vec::new();
    if !unreached.is_empty() {
        violations.push(format!("{} isolated right vertices", unreached.len()));
    }
    let (m, n) = (graph.h_order(), graph.k_order());
    let mut s_total = 0;
    let mut t_total = 0;
    for (lefts, rights) in &components {
        let (s, t) = (lefts.len(), rights.len());
        s_total += s;
        t_total += t;
        if s * m != t * n {
            violations.push(format!(
                "component of {} has s={s}, t={t} with s·|H| = {} ≠ t·|K| = {}",
                graph.left[lefts[0]].representative(),
                s * m,
                t * n
            ));
        }
    }
    if s_total != graph.h_index() {
        violations.push(format!(
            "components cover {s_total} left cosets, expected {}",
            graph.h_index()
        ));
    }
    if t_total != graph.k_index() {
        violations.push(format!(
            "components cover {t_total} right cosets, expected {}",
            graph.k_index()
        ));
    }
    Verdict::from_violations(violations)
}

/// Checks that components and double cosets induce the same partition of the
/// group: the union of a component's left cosets equals the union of its
/// right cosets and equals one double coset `KgH`, component by component.
pub fn verify_double_coset_correspondence(
    graph: &CosetGraph,
    double_cosets: &[DoubleCoset],
) -> Verdict {
    let (components, unreached) = graph.traverse();
    let mut violations = Vec::new();
    if !unreached.is_empty() {
        violations.push(format!("{} isolated right vertices", unreached.len()));
    }

    let mut unions: Vec<(Vec<Permutation>, Vec<Permutation>)> = Vec::new();
    for (lefts, rights) in &components {
        let mut left_union: Vec<Permutation> = lefts
            .iter()
            .flat_map(|&li| graph.left[li].members().iter().cloned())
            .collect();
        left_union.sort_unstable();
        let mut right_union: Vec<Permutation> = rights
            .iter()
            .flat_map(|&rj| graph.right[rj].members().iter().cloned())
            .collect();
        right_union.sort_unstable();
        if left_union != right_union {
            violations.push(format!(
                "component of {}: union of left cosets differs from union of right cosets",
                graph.left[lefts[0]].representative()
            ));
        }
        unions.push((left_union, right_union));
    }

    if unions.len() != double_cosets.len() {
        violations.push(format!(
            "{} components but {} double cosets",
            unions.len(),
            double_cosets.len()
        ));
    } else {
        // both lists are sorted by their minimal element, so they must agree
        // pairwise when the correspondence holds
        for ((left_union, _), dc) in unions.iter().zip(double_cosets) {
            if left_union != dc.members() {
                violations.push(format!(
                    "component of {} does not match the double coset of {}",
                    left_union[0],
                    dc.representative()
                ));
            }
        }
    }
    Verdict::from_violations(violations)
}

/// Checks that all tiles of one chessboard have the same size
/// `|H|/t_i = |K|/s_i`, on every chessboard.
pub fn verify_tile_uniformity(graph: &CosetGraph) -> Verdict {
    let (components, unreached) = graph.traverse();
    let mut violations = Vec::new();
    if !unreached.is_empty() {
        violations.push(format!("{} isolated right vertices", unreached.len()));
    }
    for (lefts, rights) in &components {
        if rights.is_empty() {
            violations.push(format!(
                "left coset of {} is isolated",
                graph.left[lefts[0]].representative()
            ));
            continue;
        }
        let (s, t) = (lefts.len(), rights.len());
        if !graph.h_order().is_multiple_of(t) || !graph.k_order().is_multiple_of(s) {
            violations.push(format!(
                "component of {}: |H|={} not divisible by t={t} or |K|={} not divisible by s={s}",
                graph.left[lefts[0]].representative(),
                graph.h_order(),
                graph.k_order()
            ));
            continue;
        }
        let expected = graph.h_order() / t;
        if expected != graph.k_order() / s {
            violations.push(format!(
                "component of {}: |H|/t = {expected} ≠ |K|/s = {}",
                graph.left[lefts[0]].representative(),
                graph.k_order() / s
            ));
        }
        for &li in lefts {
            for &rj in graph.neighbors(li) {
                let tile = edge_intersection(&graph.left[li], &graph.right[rj])
                    .expect("sides correct by construction");
                if tile.len() != expected {
                    violations.push(format!(
                        "tile {} ∩ {} has {} elements, expected {expected}",
                        graph.left[li].representative(),
                        graph.right[rj].representative(),
                        tile.len()
                    ));
                }
            }
        }
    }
    Verdict::from_violations(violations)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_CAP;

    fn p(text: &str, degree: usize) -> Permutation {
        Permutation::parse_cycles(text, degree).unwrap()
    }

    fn gen(texts: &[&str], degree: usize) -> PermutationGroup {
        let gens: Vec<_> = texts.iter().map(|t| p(t, degree)).collect();
        PermutationGroup::generate(&gens, degree, DEFAULT_CAP).unwrap()
    }

    fn s3() -> PermutationGroup {
        gen(&["(1 2)", "(1 2 3)"], 3)
    }

    fn boards_of(
        g: &PermutationGroup,
        h: &PermutationGroup,
        k: &PermutationGroup,
    ) -> (CosetGraph, Vec<Chessboard>) {
        let graph = CosetGraph::build(g, h, k).unwrap();
        let boards = graph.components().unwrap();
        (graph, boards)
    }

    #[test]
    fn whole_group_is_k11() {
        let g = s3();
        let (graph, boards) = boards_of(&g, &g, &g);
        assert_eq!(graph.left_vertices().len(), 1);
        assert_eq!(graph.right_vertices().len(), 1);
        assert!(graph.is_edge(0, 0));
        assert_eq!(boards.len(), 1);
        assert_eq!((boards[0].s(), boards[0].t()), (1, 1));
        assert_eq!(boards[0].tile_size(), 6);
        assert_eq!(boards[0].double_coset_size(), 6);
    }

    #[test]
    fn s3_with_equal_transposition_subgroups() {
        // frozen from exhaustive enumeration: components (1,1) and (2,2)
        let g = s3();
        let h = gen(&["(1 2)"], 3);
        let (graph, boards) = boards_of(&g, &h, &h);
        assert_eq!(graph.left_vertices().len(), 3);
        assert_eq!(graph.right_vertices().len(), 3);
        let shape: Vec<(usize, usize)> = boards.iter().map(|b| (b.s(), b.t())).collect();
        assert_eq!(shape, [(1, 1), (2, 2)]);
        assert_eq!(boards[0].tile_size(), 2);
        assert_eq!(boards[1].tile_size(), 1);
        // H itself shows up as two distinct vertices, one per side
        assert_eq!(graph.left_vertices()[0].members(), graph.right_vertices()[0].members());
    }

    #[test]
    fn s3_with_two_transposition_subgroups() {
        // frozen from exhaustive enumeration: K_{2,2} (double coset KH of
        // size 4) and K_{1,1} (a size-2 double coset)
        let g = s3();
        let h = gen(&["(1 2)"], 3);
        let k = gen(&["(1 3)"], 3);
        let (_, boards) = boards_of(&g, &h, &k);
        let shape: Vec<(usize, usize)> = boards.iter().map(|b| (b.s(), b.t())).collect();
        assert_eq!(shape, [(2, 2), (1, 1)]);
        assert_eq!(boards[0].double_coset_size(), 4);
        assert_eq!(boards[1].double_coset_size(), 2);
        assert_eq!(boards[0].tile_size(), 1);
        assert_eq!(boards[1].tile_size(), 2);
        assert_eq!(boards[0].double_coset_rep().to_cycles(), "()");
        assert_eq!(boards[1].double_coset_rep().to_cycles(), "(2 3)");
    }

    #[test]
    fn s3_with_a3_and_transposition() {
        // single K_{2,3}: KgH = S3 is one double coset of size 6
        let g = s3();
        let a3 = gen(&["(1 2 3)"], 3);
        let k = gen(&["(1 2)"], 3);
        let (graph, boards) = boards_of(&g, &a3, &k);
        assert_eq!(graph.left_vertices().len(), 2);
        assert_eq!(graph.right_vertices().len(), 3);
        assert_eq!(boards.len(), 1);
        assert_eq!((boards[0].s(), boards[0].t()), (2, 3));
        assert_eq!(boards[0].tile_size(), 1);
        // all six edges present
        assert_eq!(graph.neighbors(0), &[0, 1, 2]);
        assert_eq!(graph.neighbors(1), &[0, 1, 2]);
    }

    #[test]
    fn edge_intersections() {
        let g = s3();
        let h = gen(&["(1 2)"], 3);
        let k = gen(&["(1 3)"], 3);
        let graph = CosetGraph::build(&g, &h, &k).unwrap();
        // same-component pair: a single shared element
        let tile =
            edge_intersection(&graph.left_vertices()[0], &graph.right_vertices()[0]).unwrap();
        assert_eq!(tile.len(), 1);
        assert!(tile[0].is_identity());
        // cross-component pair: empty
        let empty =
            edge_intersection(&graph.left_vertices()[0], &graph.right_vertices()[1]).unwrap();
        assert!(empty.is_empty());
        // side mismatch is rejected
        assert_eq!(
            edge_intersection(&graph.right_vertices()[0], &graph.right_vertices()[0]),
            Err(Error::SideMismatch)
        );
    }

    #[test]
    fn double_coset_examples() {
        let g = s3();
        assert_eq!(double_cosets(&g, &g, &g).unwrap().len(), 1);

        let h = gen(&["(1 2)"], 3);
        let k = gen(&["(1 3)"], 3);
        let dcs = double_cosets(&g, &h, &k).unwrap();
        let sizes: Vec<usize> = dcs.iter().map(|d| d.len()).collect();
        assert_eq!(sizes, [4, 2]);

        let trivial = PermutationGroup::trivial(3);
        assert_eq!(double_cosets(&g, &trivial, &trivial).unwrap().len(), 6);
    }

    #[test]
    fn tiles_matrix_shapes() {
        let g = s3();
        let (graph, boards) = boards_of(&g, &g, &g);
        let tiles = graph.tiles(&boards[0]);
        assert_eq!(tiles.len(), 1);
        assert_eq!(tiles[0].len(), 1);
        assert_eq!(tiles[0][0].len(), 6);

        let a3 = gen(&["(1 2 3)"], 3);
        let k = gen(&["(1 2)"], 3);
        let (graph, boards) = boards_of(&g, &a3, &k);
        let tiles = graph.tiles(&boards[0]);
        assert_eq!(tiles.len(), 3); // rows = right cosets
        assert!(tiles.iter().all(|row| row.len() == 2)); // columns = left cosets
        assert!(tiles.iter().flatten().all(|tile| tile.len() == 1));

        let h = gen(&["(1 2)"], 3);
        let (graph, boards) = boards_of(&g, &h, &h);
        let tiles = graph.tiles(&boards[1]);
        assert_eq!(tiles.len(), 2);
        assert!(tiles.iter().flatten().all(|tile| tile.len() == 1));
    }

    #[test]
    fn verifiers_pass_on_honest_graphs() {
        let g = s3();
        let h = gen(&["(1 2)"], 3);
        let k = gen(&["(1 3)"], 3);
        for (hh, kk) in [(&g, &g), (&h, &k), (&h, &h)] {
            let graph = CosetGraph::build(&g, hh, kk).unwrap();
            assert!(verify_complete_bipartite(&graph).passed);
            assert!(verify_ratio(&graph).passed);
            assert!(verify_tile_uniformity(&graph).passed);
            let dcs = double_cosets(&g, hh, kk).unwrap();
            assert!(verify_double_coset_correspondence(&graph, &dcs).passed);
        }
    }

    #[test]
    fn complete_bipartite_checker_flags_removed_edge() {
        let g = s3();
        let h = gen(&["(1 2)"], 3);
        let k = gen(&["(1 3)"], 3);
        let mut graph = CosetGraph::build(&g, &h, &k).unwrap();
        // delete one edge inside the K_{2,2} component (stays connected)
        assert!(graph.remove_edge(0, 0));
        let verdict = verify_complete_bipartite(&graph);
        assert!(!verdict.passed);
        assert_eq!(verdict.violations.len(), 1);
        assert!(verdict.violations[0].contains("()"));
    }

    #[test]
    fn ratio_law_structure() {
        // H trivial: every component is K_{|K|,1}
        let g = s3();
        let trivial = PermutationGroup::trivial(3);
        let k = gen(&["(1 3)"], 3);
        let (graph, boards) = boards_of(&g, &trivial, &k);
        assert!(verify_ratio(&graph).passed);
        for board in &boards {
            assert_eq!((board.s(), board.t()), (2, 1));
        }

        // H = K: every component is square
        let h = gen(&["(1 2)"], 3);
        let (_, boards) = boards_of(&g, &h, &h);
        assert!(boards.iter().all(|b| b.s() == b.t()));
    }

    #[test]
    fn graph_determinism() {
        let g = gen(&["(1 2)", "(1 2 3 4)"], 4);
        let h = gen(&["(1 2)(3 4)"], 4);
        let k = gen(&["(1 2 3)"], 4);
        let a = CosetGraph::build(&g, &h, &k).unwrap();
        let b = CosetGraph::build(&g, &h, &k).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn subgroup_violation_is_rejected() {
        let g = s3();
        let not_subgroup = gen(&["(1 2)"], 2);
        assert!(CosetGraph::build(&g, &not_subgroup, &g).is_err());
        assert!(double_cosets(&g, &g, &not_subgroup).is_err());
    }
}
