//! Ready-made permutation realizations of the standard small-group families.

use crate::error::{Error, Result};
use crate::group::{direct_product, PermutationGroup, DEFAULT_CAP};
use crate::perm::Permutation;

/// Families with standard permutation realizations. `DirectProduct` builds
/// `C_n × S_m` acting on the disjoint union of the factors' points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Cyclic,
    Dihedral,
    Symmetric,
    Alternating,
    Quaternion8,
    DirectProduct,
}

impl Family {
    pub fn parse(name: &str) -> Result<Family> {
        match name {
            "cyclic" => Ok(Family::Cyclic),
            "dihedral" => Ok(Family::Dihedral),
            "symmetric" => Ok(Family::Symmetric),
            "alternating" => Ok(Family::Alternating),
            "quaternion8" => Ok(Family::Quaternion8),
            "direct_product" => Ok(Family::DirectProduct),
            other => Err(Error::BadCatalogParameters(format!(
                "unknown family {other:?}; expected cyclic, dihedral, symmetric, alternating, quaternion8 or direct_product"
            ))),
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Family::Cyclic => "cyclic",
            Family::Dihedral => "dihedral",
            Family::Symmetric => "symmetric",
            Family::Alternating => "alternating",
            Family::Quaternion8 => "quaternion8",
            Family::DirectProduct => "direct_product",
        }
    }
}

/// A catalog request: the family plus its integer parameters (one `n` for
/// the single-parameter families, `[n, m]` for `direct_product`, none for
/// `quaternion8`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogSpec {
    pub family: Family,
    pub parameters: Vec<usize>,
}

impl CatalogSpec {
    pub fn new(family: Family, parameters: Vec<usize>) -> Self {
        CatalogSpec { family, parameters }
    }
}

fn single_parameter(spec: &CatalogSpec) -> Result<usize> {
    match spec.parameters.as_slice() {
        [n] => Ok(*n),
        other => Err(Error::BadCatalogParameters(format!(
            "{} takes exactly one parameter, got {other:?}",
            spec.family.as_str()
        ))),
    }
}

/// Builds the standard permutation realization of a catalog group:
/// cyclic `n` as an `n`-cycle, dihedral `n` as rotation plus reflection,
/// symmetric and alternating in their natural actions, the quaternion group
/// in its regular action on 8 points, and `C_n × S_m` on `n + m` points.
pub fn catalog_group(spec: &CatalogSpec) -> Result<PermutationGroup> {
    match spec.family {
        Family::Cyclic => cyclic(single_parameter(spec)?),
        Family::Dihedral => dihedral(single_parameter(spec)?),
        Family::Symmetric => symmetric(single_parameter(spec)?),
        Family::Alternating => alternating(single_parameter(spec)?),
        Family::Quaternion8 => {
            if !spec.parameters.is_empty() {
                return Err(Error::BadCatalogParameters(
                    "quaternion8 takes no parameters".into(),
                ));
            }
            quaternion8()
        }
        Family::DirectProduct => match spec.parameters.as_slice() {
            [n, m] => {
                let a = cyclic(*n)?;
                let b = symmetric(*m)?;
                Ok(direct_product(&a, &b))
            }
            other => Err(Error::BadCatalogParameters(format!(
                "direct_product takes parameters n m (for C_n × S_m), got {other:?}"
            ))),
        },
    }
}

fn require(cond: bool, message: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::BadCatalogParameters(message.to_string()))
    }
}

fn rotation(n: usize) -> Permutation {
    let images: Vec<u32> = (0..n as u32).map(|i| (i + 1) % n as u32).collect();
    Permutation::from_images(images).expect("rotation is a bijection")
}

pub fn cyclic(n: usize) -> Result<PermutationGroup> {
    require((1..=4096).contains(&n), "cyclic requires 1 <= n <= 4096")?;
    if n == 1 {
        return Ok(PermutationGroup::trivial(1));
    }
    PermutationGroup::generate(&[rotation(n)], n, DEFAULT_CAP)
}

pub fn dihedral(n: usize) -> Result<PermutationGroup> {
    require((1..=2048).contains(&n), "dihedral requires 1 <= n <= 2048")?;
    // the n-gon realization collapses for n < 3; use faithful stand-ins of
    // the right order (2n)
    match n {
        1 => PermutationGroup::generate(&[Permutation::parse_cycles("(1 2)", 2)?], 2, DEFAULT_CAP),
        2 => PermutationGroup::generate(
            &[
                Permutation::parse_cycles("(1 2)", 4)?,
                Permutation::parse_cycles("(3 4)", 4)?,
            ],
            4,
            DEFAULT_CAP,
        ),
        _ => {
            let reflection_images: Vec<u32> =
                (0..n as u32).map(|i| (n as u32 - i) % n as u32).collect();
            let reflection =
                Permutation::from_images(reflection_images).expect("reflection is a bijection");
            PermutationGroup::generate(&[rotation(n), reflection], n, DEFAULT_CAP)
        }
    }
}

pub fn symmetric(n: usize) -> Result<PermutationGroup> {
    require((1..=8).contains(&n), "symmetric requires 1 <= n <= 8")?;
    if n == 1 {
        return Ok(PermutationGroup::trivial(1));
    }
    let transposition = Permutation::parse_cycles("(1 2)", n)?;
    if n == 2 {
        return PermutationGroup::generate(&[transposition], n, DEFAULT_CAP);
    }
    PermutationGroup::generate(&[transposition, rotation(n)], n, DEFAULT_CAP)
}

pub fn alternating(n: usize) -> Result<PermutationGroup> {
    require((1..=8).contains(&n), "alternating requires 1 <= n <= 8")?;
    if n <= 2 {
        return Ok(PermutationGroup::trivial(n));
    }
    // consecutive 3-cycles generate A_n
    let generators: Vec<Permutation> = (1..=n - 2)
        .map(|i| Permutation::parse_cycles(&format!("({i} {} {})", i + 1, i + 2), n))
        .collect::<Result<_>>()?;
    PermutationGroup::generate(&generators, n, DEFAULT_CAP)
}

/// The eight quaternion units `±1, ±i, ±j, ±k` indexed `0..8` as
/// `[1, i, j, k, -1, -i, -j, -k]`.
fn quaternion_multiply(a: usize, b: usize) -> usize {
    let (sign_a, axis_a) = (a / 4, a % 4);
    let (sign_b, axis_b) = (b / 4, b % 4);
    // (sign, axis) of the product of two positive units
    let (sign, axis) = match (axis_a, axis_b) {
        (0, x) | (x, 0) => (0, x),
        (1, 1) | (2, 2) | (3, 3) => (1, 0),
        (1, 2) => (0, 3),
        (2, 3) => (0, 1),
        (3, 1) => (0, 2),
        (2, 1) => (1, 3),
        (3, 2) => (1, 1),
        (1, 3) => (1, 2),
        _ => unreachable!(),
    };
    ((sign_a + sign_b + sign) % 2) * 4 + axis
}

pub fn quaternion8() -> Result<PermutationGroup> {
    // regular action by right multiplication: x ↦ x·g
    let rho = |g: usize| -> Result<Permutation> {
        Permutation::from_images((0..8).map(|x| quaternion_multiply(x, g) as u32).collect())
    };
    PermutationGroup::generate(&[rho(1)?, rho(2)?], 8, DEFAULT_CAP)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn textbook_orders() {
        for n in 1..=24 {
            assert_eq!(cyclic(n).unwrap().order(), n, "cyclic {n}");
        }
        for n in 1..=12 {
            assert_eq!(dihedral(n).unwrap().order(), 2 * n, "dihedral {n}");
        }
        let factorial = |n: usize| (1..=n).product::<usize>();
        for n in 1..=5 {
            assert_eq!(symmetric(n).unwrap().order(), factorial(n), "symmetric {n}");
        }
        for n in 3..=5 {
            assert_eq!(alternating(n).unwrap().order(), factorial(n) / 2, "alternating {n}");
        }
        assert_eq!(alternating(2).unwrap().order(), 1);
        assert_eq!(quaternion8().unwrap().order(), 8);
    }

    #[test]
    fn quaternion_is_the_quaternion_group() {
        let q8 = quaternion8().unwrap();
        assert_eq!(q8.degree(), 8);
        // exactly one element of order 2 (namely -1), six of order 4
        let mut histogram = std::collections::BTreeMap::new();
        for p in q8.elements() {
            let mut order = 1;
            let mut q = p.clone();
            while !q.is_identity() {
                q = q.compose(p).unwrap();
                order += 1;
            }
            *histogram.entry(order).or_insert(0) += 1;
        }
        assert_eq!(histogram, [(1, 1), (2, 1), (4, 6)].into_iter().collect());
    }

    #[test]
    fn direct_product_c2_s3() {
        let spec = CatalogSpec::new(Family::DirectProduct, vec![2, 3]);
        let g = catalog_group(&spec).unwrap();
        assert_eq!(g.order(), 12);
        assert_eq!(g.degree(), 5);
    }

    #[test]
    fn parameters_are_validated() {
        assert!(catalog_group(&CatalogSpec::new(Family::Cyclic, vec![0])).is_err());
        assert!(catalog_group(&CatalogSpec::new(Family::Cyclic, vec![5000])).is_err());
        assert!(catalog_group(&CatalogSpec::new(Family::Symmetric, vec![9])).is_err());
        assert!(catalog_group(&CatalogSpec::new(Family::Cyclic, vec![])).is_err());
        assert!(catalog_group(&CatalogSpec::new(Family::Cyclic, vec![2, 3])).is_err());
        assert!(catalog_group(&CatalogSpec::new(Family::Quaternion8, vec![8])).is_err());
        assert!(catalog_group(&CatalogSpec::new(Family::DirectProduct, vec![2])).is_err());
        assert!(Family::parse("frobenius").is_err());
        assert_eq!(Family::parse("dihedral").unwrap(), Family::Dihedral);
    }

    #[test]
    fn catalog_groups_have_their_advertised_realizations() {
        let d4 = catalog_group(&CatalogSpec::new(Family::Dihedral, vec![4])).unwrap();
        assert_eq!(d4.degree(), 4);
        assert_eq!(d4.order(), 8);
        let s4 = catalog_group(&CatalogSpec::new(Family::Symmetric, vec![4])).unwrap();
        assert_eq!(s4.order(), 24);
    }

    #[test]
    fn cycle_notation_round_trips_across_the_catalog() {
        let mut groups = vec![quaternion8().unwrap()];
        for n in 1..=24 {
            groups.push(cyclic(n).unwrap());
        }
        for n in 1..=12 {
            groups.push(dihedral(n).unwrap());
        }
        for n in 1..=4 {
            groups.push(symmetric(n).unwrap());
            groups.push(alternating(n).unwrap());
        }
        groups.push(catalog_group(&CatalogSpec::new(Family::DirectProduct, vec![2, 3])).unwrap());
        for group in &groups {
            for p in group.elements() {
                let text = p.to_cycles();
                assert_eq!(
                    &Permutation::parse_cycles(&text, group.degree()).unwrap(),
                    p,
                    "{text} did not round-trip"
                );
            }
        }
    }
}
