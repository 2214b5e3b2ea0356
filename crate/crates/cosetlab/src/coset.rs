//! Left and right cosets of a subgroup, with canonical representatives.

use std::collections::HashMap;

use crate::error::Result;
use crate::group::PermutationGroup;
use crate::perm::Permutation;

/// Which coset partition a coset belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CosetSide {
    /// A left coset `g·H` of the first subgroup.
    LeftOfH,
    /// A right coset `K·g` of the second subgroup.
    RightOfK,
}

/// One coset: its members in lexicographic order, so the canonical
/// representative is simply the first member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coset {
    side: CosetSide,
    members: Vec<Permutation>,
}

impl Coset {
    fn new(side: CosetSide, mut members: Vec<Permutation>) -> Self {
        members.sort_unstable();
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Coset { side, members }
    }

    pub fn side(&self) -> CosetSide {
        self.side
    }

    /// The lexicographically minimal member.
    pub fn representative(&self) -> &Permutation {
        &self.members[0]
    }

    /// Members in lexicographic order.
    pub fn members(&self) -> &[Permutation] {
        &self.members
    }

    pub fn subgroup_order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.members.binary_search(p).is_ok()
    }
}

impl PermutationGroup {
    /// The left cosets `g·H`, sorted by representative. They partition the
    /// group, with the coset of the identity (that is, `H` itself) first.
    pub fn left_cosets(&self, subgroup: &PermutationGroup) -> Result<Vec<Coset>> {
        self.check_subgroup(subgroup, "H")?;
        self.coset_partition(subgroup, CosetSide::LeftOfH)
    }

    /// The right cosets `K·g`, sorted by representative.
    pub fn right_cosets(&self, subgroup: &PermutationGroup) -> Result<Vec<Coset>> {
        self.check_subgroup(subgroup, "K")?;
        self.coset_partition(subgroup, CosetSide::RightOfK)
    }

    fn coset_partition(
        &self,
        subgroup: &PermutationGroup,
        side: CosetSide,
    ) -> Result<Vec<Coset>> {
        let mut assigned = vec![false; self.order()];
        let position: HashMap<&Permutation, usize> = self
            .elements()
            .iter()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();

        let mut cosets = Vec::with_capacity(self.order() / subgroup.order());
        // scanning in lexicographic order makes each unassigned element the
        // canonical representative of its coset, so the list comes out sorted
        for (i, g) in self.elements().iter().enumerate() {
            if assigned[i] {
                continue;
            }
            let members = subgroup
                .elements()
                .iter()
                .map(|h| match side {
                    CosetSide::LeftOfH => g.compose(h),
                    CosetSide::RightOfK => h.compose(g),
                })
                .collect::<Result<Vec<_>>>()?;
            for member in &members {
                assigned[position[member]] = true;
            }
            cosets.push(Coset::new(side, members));
        }
        Ok(cosets)
    }
}
