//! How many right cosets of `K` does the left coset `gH` meet? Three
//! independent answers (direct enumeration and two conjugation formulas)
//! plus the symmetric left-coset count, bundled into one report that checks
//! they all agree.

use crate::error::{Error, Result};
use crate::group::PermutationGroup;
use crate::perm::Permutation;

/// All counts for one group element. The three `m_*` fields are equal by the
/// structure theory, as are the two `symmetric_*` fields; `full_count_report`
/// refuses to produce a report where they differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountReport {
    pub g: Permutation,
    /// Right cosets of `K` meeting `gH`, by enumeration.
    pub m_direct: usize,
    /// `|H| / |gHg⁻¹ ∩ K|`.
    pub m_by_order: usize,
    /// `|G : gHg⁻¹ ∩ K| / |G:H|`.
    pub m_by_index: usize,
    /// Left cosets of `H` meeting `Kg`, by enumeration.
    pub symmetric_direct: usize,
    /// `|K| / |g⁻¹Kg ∩ H|`.
    pub symmetric_by_order: usize,
}

fn check_member(group: &PermutationGroup, g: &Permutation) -> Result<()> {
    if !group.contains(g) {
        return Err(Error::NotMember(g.to_string()));
    }
    Ok(())
}

/// `|{Kb : gH ∩ Kb ≠ ∅}|` by direct enumeration.
pub fn count_meeting_right_cosets(
    group: &PermutationGroup,
    h: &PermutationGroup,
    k: &PermutationGroup,
    g: &Permutation,
) -> Result<usize> {
    group.check_subgroup(h, "H")?;
    group.check_subgroup(k, "K")?;
    check_member(group, g)?;
    let right = group.right_cosets(k)?;
    let coset_g_h: Vec<Permutation> = h
        .elements()
        .iter()
        .map(|x| g.compose(x))
        .collect::<Result<_>>()?;
    Ok(right
        .iter()
        .filter(|c| coset_g_h.iter().any(|e| c.contains(e)))
        .count())
}

/// `|{aH : aH ∩ Kg ≠ ∅}|` by direct enumeration.
pub fn count_meeting_left_cosets(
    group: &PermutationGroup,
    h: &PermutationGroup,
    k: &PermutationGroup,
    g: &Permutation,
) -> Result<usize> {
    group.check_subgroup(h, "H")?;
    group.check_subgroup(k, "K")?;
    check_member(group, g)?;
    let left = group.left_cosets(h)?;
    let coset_k_g: Vec<Permutation> = k
        .elements()
        .iter()
        .map(|x| x.compose(g))
        .collect::<Result<_>>()?;
    Ok(left
        .iter()
        .filter(|c| coset_k_g.iter().any(|e| c.contains(e)))
        .count())
}

/// `M_g = |H| / |gHg⁻¹ ∩ K|`. The divisor always divides `|H|` exactly;
/// anything else signals a bug.
pub fn m_g_by_order(
    h: &PermutationGroup,
    k: &PermutationGroup,
    g: &Permutation,
) -> Result<usize> {
    if h.degree() != k.degree() {
        return Err(Error::DegreeMismatch(h.degree(), k.degree()));
    }
    if g.degree() != h.degree() {
        return Err(Error::DegreeMismatch(h.degree(), g.degree()));
    }
    let meet = h.conjugate_by(g)?.intersect(k)?;
    if !h.order().is_multiple_of(meet.order()) {
        return Err(Error::Internal(format!(
            "|gHg^-1 ∩ K| = {} does not divide |H| = {}",
            meet.order(),
            h.order()
        )));
    }
    Ok(h.order() / meet.order())
}

/// `M_g = |G : gHg⁻¹ ∩ K| / |G:H|`, with exact divisibility.
pub fn m_g_by_index(
    group: &PermutationGroup,
    h: &PermutationGroup,
    k: &PermutationGroup,
    g: &Permutation,
) -> Result<usize> {
    group.check_subgroup(h, "H")?;
    group.check_subgroup(k, "K")?;
    check_member(group, g)?;
    let meet = h.conjugate_by(g)?.intersect(k)?;
    let meet_index = group.index_of(&meet)?;
    let h_index = group.index_of(h)?;
    if meet_index % h_index != 0 {
        return Err(Error::Internal(format!(
            "|G : gHg^-1 ∩ K| = {meet_index} is not a multiple of |G:H| = {h_index}"
        )));
    }
    Ok(meet_index / h_index)
}

/// Computes all five counts and checks the two agreement invariants.
pub fn full_count_report(
    group: &PermutationGroup,
    h: &PermutationGroup,
    k: &PermutationGroup,
    g: &Permutation,
) -> Result<CountReport> {
    let m_direct = count_meeting_right_cosets(group, h, k, g)?;
    let m_by_order = m_g_by_order(h, k, g)?;
    let m_by_index = m_g_by_index(group, h, k, g)?;
    let symmetric_direct = count_meeting_left_cosets(group, h, k, g)?;
    let symmetric_by_order = m_g_by_order(k, h, &g.inverse())?;

    if m_direct != m_by_order || m_direct != m_by_index {
        return Err(Error::Internal(format!(
            "count disagreement for g = {g}: direct {m_direct}, by order {m_by_order}, by index {m_by_index}"
        )));
    }
    if symmetric_direct != symmetric_by_order {
        return Err(Error::Internal(format!(
            "symmetric count disagreement for g = {g}: direct {symmetric_direct}, by order {symmetric_by_order}"
        )));
    }
    Ok(CountReport {
        g: g.clone(),
        m_direct,
        m_by_order,
        m_by_index,
        symmetric_direct,
        symmetric_by_order,
    })
}
