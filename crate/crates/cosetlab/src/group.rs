//! Finite permutation groups built by explicit closure from generators.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Default closure cap: `generate` aborts once this many elements have been
/// found, signalling that the group is too large for explicit enumeration.
pub const DEFAULT_CAP: usize = 1_000_000;

/// A finite group of permutations, stored as the full element list in
/// lexicographic order of image sequences (deduplicated, identity included).
///
/// Values are immutable after construction and safe to share across threads.
#[derive(Debug, Clone)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
}

/// Two groups are equal when they have the same degree and the same element
/// set; the generating sets they were built from do not matter.
impl PartialEq for PermutationGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for PermutationGroup {}

impl PermutationGroup {
    /// The trivial group on `degree` points.
    pub fn trivial(degree: usize) -> Self {
        PermutationGroup {
            degree,
            generators: Vec::new(),
            elements: vec![Permutation::identity(degree)],
        }
    }

    /// Breadth-first closure of the generators under composition. The empty
    /// generating set yields the trivial group. Fails once more than `cap`
    /// elements are found.
    pub fn generate(generators: &[Permutation], degree: usize, cap: usize) -> Result<Self> {
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(degree, g.degree()));
            }
        }

        let identity = Permutation::identity(degree);
        let mut seen: HashMap<Permutation, ()> = HashMap::new();
        seen.insert(identity.clone(), ());
        let mut frontier = vec![identity];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for e in &frontier {
                for g in generators {
                    let product = e.compose(g)?;
                    if !seen.contains_key(&product) {
                        if seen.len() >= cap {
                            return Err(Error::CapExceeded { cap });
                        }
                        seen.insert(product.clone(), ());
                        next.push(product);
                    }
                }
            }
            frontier = next;
        }

        let mut elements: Vec<Permutation> = seen.into_keys().collect();
        elements.sort_unstable();
        Ok(PermutationGroup {
            degree,
            generators: generators.to_vec(),
            elements,
        })
    }

    /// Wraps an element list already known to be a group. Sorts and
    /// deduplicates; the closure properties themselves are the caller's
    /// responsibility (debug builds re-check them).
    pub(crate) fn from_elements(mut elements: Vec<Permutation>, degree: usize) -> Self {
        elements.sort_unstable();
        elements.dedup();
        let group = PermutationGroup {
            degree,
            generators: elements
                .iter()
                .filter(|p| !p.is_identity())
                .cloned()
                .collect(),
            elements,
        };
        debug_assert!(group.is_closed());
        group
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Elements in lexicographic order of image sequences.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree && self.elements.binary_search(p).is_ok()
    }

    /// True iff every element of `subgroup` lies in `self`.
    pub fn has_subgroup(&self, subgroup: &PermutationGroup) -> bool {
        subgroup.degree == self.degree
            && subgroup.order() <= self.order()
            && subgroup.elements.iter().all(|p| self.contains(p))
    }

    pub(crate) fn check_subgroup(&self, subgroup: &PermutationGroup, name: &str) -> Result<()> {
        if subgroup.degree != self.degree {
            return Err(Error::DegreeMismatch(self.degree, subgroup.degree));
        }
        if !self.has_subgroup(subgroup) {
            return Err(Error::NotSubgroup(name.to_string()));
        }
        Ok(())
    }

    /// `|G:H| = |G|/|H|`.
    pub fn index_of(&self, subgroup: &PermutationGroup) -> Result<usize> {
        self.check_subgroup(subgroup, "H")?;
        debug_assert_eq!(self.order() % subgroup.order(), 0);
        Ok(self.order() / subgroup.order())
    }

    /// The conjugate subgroup `g·self·g⁻¹`.
    pub fn conjugate_by(&self, g: &Permutation) -> Result<PermutationGroup> {
        if g.degree() != self.degree {
            return Err(Error::DegreeMismatch(self.degree, g.degree()));
        }
        let elements = self
            .elements
            .iter()
            .map(|h| h.conjugate_by(g))
            .collect::<Result<Vec<_>>>()?;
        Ok(PermutationGroup::from_elements(elements, self.degree))
    }

    /// Group on the common elements of `self` and `other`.
    pub fn intersect(&self, other: &PermutationGroup) -> Result<PermutationGroup> {
        if other.degree != self.degree {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        let elements: Vec<Permutation> = self
            .elements
            .iter()
            .filter(|p| other.contains(p))
            .cloned()
            .collect();
        Ok(PermutationGroup::from_elements(elements, self.degree))
    }

    /// The core `∩_{g∈G} g⁻¹·H·g`: the largest normal subgroup of `self`
    /// contained in `subgroup`.
    pub fn core_of(&self, subgroup: &PermutationGroup) -> Result<PermutationGroup> {
        self.check_subgroup(subgroup, "H")?;
        let mut core = subgroup.clone();
        for g in &self.elements {
            if core.order() == 1 {
                break;
            }
            core = core.intersect(&subgroup.conjugate_by(g)?)?;
        }
        Ok(core)
    }

    /// True iff `g·N = N·g` for every `g` in `self`.
    pub fn is_normal(&self, subgroup: &PermutationGroup) -> Result<bool> {
        self.check_subgroup(subgroup, "N")?;
        for g in &self.elements {
            for n in subgroup.elements() {
                if !subgroup.contains(&n.conjugate_by(g)?) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `G/N` realized as a permutation group of degree `|G:N|` acting by left
    /// translation on the canonically ordered left cosets of `N`.
    pub fn quotient(&self, normal: &PermutationGroup) -> Result<PermutationGroup> {
        self.check_subgroup(normal, "N")?;
        if !self.is_normal(normal)? {
            return Err(Error::NotNormal("N".to_string()));
        }
        let action = self.coset_action(normal)?;
        let images: Vec<Permutation> = self
            .elements
            .iter()
            .map(|g| action.translation(g))
            .collect::<Result<_>>()?;
        let quotient = PermutationGroup::from_elements(images, action.coset_count());
        debug_assert_eq!(quotient.order() * normal.order(), self.order());
        Ok(quotient)
    }

    /// The subgroup `H/N` of `quotient(G, N)`, for `N ≤ H ≤ G` with `N`
    /// normal in `G`.
    pub fn image_in_quotient(
        &self,
        normal: &PermutationGroup,
        subgroup: &PermutationGroup,
    ) -> Result<PermutationGroup> {
        self.check_subgroup(subgroup, "H")?;
        self.check_subgroup(normal, "N")?;
        if !subgroup.has_subgroup(normal) {
            return Err(Error::Containment("N must be contained in H".to_string()));
        }
        if !self.is_normal(normal)? {
            return Err(Error::NotNormal("N".to_string()));
        }
        let action = self.coset_action(normal)?;
        let images: Vec<Permutation> = subgroup
            .elements
            .iter()
            .map(|h| action.translation(h))
            .collect::<Result<_>>()?;
        let image = PermutationGroup::from_elements(images, action.coset_count());
        debug_assert_eq!(image.order() * normal.order(), subgroup.order());
        Ok(image)
    }

    fn coset_action(&self, normal: &PermutationGroup) -> Result<CosetAction> {
        let cosets = self.left_cosets(normal)?;
        let mut coset_of = HashMap::new();
        for (index, coset) in cosets.iter().enumerate() {
            for member in coset.members() {
                coset_of.insert(member.clone(), index);
            }
        }
        let representatives = cosets
            .iter()
            .map(|c| c.representative().clone())
            .collect();
        Ok(CosetAction {
            representatives,
            coset_of,
        })
    }

    pub(crate) fn is_closed(&self) -> bool {
        self.contains(&Permutation::identity(self.degree))
            && self.elements.iter().all(|p| {
                self.contains(&p.inverse())
                    && self
                        .elements
                        .iter()
                        .all(|q| p.compose(q).map(|r| self.contains(&r)).unwrap_or(false))
            })
    }
}

/// Left-translation action of group elements on the left cosets of a normal
/// subgroup: `g` sends the coset of `a` to the coset of `g·a`.
struct CosetAction {
    representatives: Vec<Permutation>,
    coset_of: HashMap<Permutation, usize>,
}

impl CosetAction {
    fn coset_count(&self) -> usize {
        self.representatives.len()
    }

    fn translation(&self, g: &Permutation) -> Result<Permutation> {
        let images = self
            .representatives
            .iter()
            .map(|rep| {
                let moved = g.compose(rep)?;
                self.coset_of
                    .get(&moved)
                    .map(|&i| i as u32)
                    .ok_or_else(|| Error::Internal("coset action left the coset space".into()))
            })
            .collect::<Result<Vec<u32>>>()?;
        Permutation::from_images(images)
            .map_err(|_| Error::Internal("coset translation is not a bijection".into()))
    }
}

/// Direct product acting on the disjoint union of the factors' points:
/// `a` on `1..=deg(a)`, `b` shifted to the points above them.
pub fn direct_product(a: &PermutationGroup, b: &PermutationGroup) -> PermutationGroup {
    let degree = a.degree() + b.degree();
    let embed = |x: &Permutation, y: &Permutation| -> Permutation {
        let mut images: Vec<u32> = x.images().to_vec();
        images.extend(y.images().iter().map(|&v| v + a.degree() as u32));
        Permutation::from_images(images).expect("product of bijections is a bijection")
    };
    let mut elements = Vec::with_capacity(a.order() * b.order());
    for x in a.elements() {
        for y in b.elements() {
            elements.push(embed(x, y));
        }
    }
    let mut generators: Vec<Permutation> = a
        .generators()
        .iter()
        .map(|x| embed(x, &Permutation::identity(b.degree())))
        .collect();
    generators.extend(
        b.generators()
            .iter()
            .map(|y| embed(&Permutation::identity(a.degree()), y)),
    );
    let mut group = PermutationGroup::from_elements(elements, degree);
    group.generators = generators;
    group
}
