//! Permutations of `{1..d}` stored as image sequences.
//!
//! Composition is left-to-right throughout: `(p * q)(x) = q(p(x))`, i.e. the
//! product applies `p` first. Points are 0-based internally and 1-based in
//! cycle notation.

use std::fmt;

use crate::error::{Error, Result};

/// A bijection on `{1..d}`, stored as the sequence of images of `1..d`.
///
/// Equality, hashing and ordering all work on the image sequence; the derived
/// `Ord` is the lexicographic order used everywhere for canonical
/// representatives.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    /// The identity permutation of the given degree.
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        for &v in &images {
            let v = v as usize;
            if v >= degree || seen[v] {
                return Err(Error::ParseCycles {
                    input: format!("{images:?}"),
                    reason: "image sequence is not a bijection".into(),
                });
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from 1-based images, the external convention.
    pub fn from_one_based_images(images: &[usize]) -> Result<Self> {
        let shifted: Vec<u32> = images
            .iter()
            .map(|&v| {
                v.checked_sub(1)
                    .map(|x| x as u32)
                    .ok_or_else(|| Error::ParseCycles {
                        input: format!("{images:?}"),
                        reason: "points are 1-based".into(),
                    })
            })
            .collect::<Result<_>>()?;
        Self::from_images(shifted)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 0-based point.
    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    /// 0-based image sequence.
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i as u32 == v)
    }

    /// Left-to-right product: `(p * q)(x) = q(p(x))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(Permutation {
            images: self.images.iter().map(|&v| other.images[v as usize]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v as usize] = i as u32;
        }
        Permutation { images }
    }

    /// `g * self * g^-1` under the left-to-right product.
    pub fn conjugate_by(&self, g: &Permutation) -> Result<Permutation> {
        g.compose(self)?.compose(&g.inverse())
    }

    /// Disjoint-cycle form: cycles sorted by their minimum moved point, each
    /// cycle starting at that minimum, fixed points omitted. The identity is
    /// rendered `()`.
    pub fn to_cycles(&self) -> String {
        let mut seen = vec![false; self.degree()];
        let mut out = String::new();
        for start in 0..self.degree() {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            out.push('(');
            let mut point = start;
            loop {
                seen[point] = true;
                out.push_str(&(point + 1).to_string());
                point = self.apply(point);
                if point == start {
                    break;
                }
                out.push(' ');
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }

    /// Parses whitespace-separated disjoint cycles of 1-based points, e.g.
    /// `(1 2)(3 4)`. `()` denotes the identity. Points may also be separated
    /// by commas. Repeating a point across cycles is an error.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
        let err = |reason: &str| Error::ParseCycles {
            input: text.to_string(),
            reason: reason.to_string(),
        };

        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        let mut chars = text.chars().peekable();
        let mut any_cycle = false;

        loop {
            while matches!(chars.peek(), Some(c) if c.is_whitespace()) {
                chars.next();
            }
            match chars.next() {
                None => break,
                Some('(') => {}
                Some(c) => return Err(err(&format!("unexpected character {c:?}"))),
            }
            any_cycle = true;

            let mut cycle: Vec<usize> = Vec::new();
            loop {
                while matches!(chars.peek(), Some(c) if c.is_whitespace() || *c == ',') {
                    chars.next();
                }
                match chars.peek() {
                    None => return Err(err("unterminated cycle")),
                    Some(')') => {
                        chars.next();
                        break;
                    }
                    Some(c) if c.is_ascii_digit() => {
                        let mut n = 0usize;
                        while matches!(chars.peek(), Some(c) if c.is_ascii_digit()) {
                            n = n * 10 + chars.next().unwrap().to_digit(10).unwrap() as usize;
                        }
                        if n == 0 {
                            return Err(err("points are 1-based"));
                        }
                        if n > degree {
                            return Err(err(&format!("point {n} exceeds degree {degree}")));
                        }
                        if used[n - 1] {
                            return Err(err(&format!("point {n} repeated across cycles")));
                        }
                        used[n - 1] = true;
                        cycle.push(n - 1);
                    }
                    Some(c) => return Err(err(&format!("unexpected character {c:?}"))),
                }
            }
            if cycle.len() == 1 {
                // explicit fixed point, e.g. "(3)"; legal and a no-op
                continue;
            }
            for w in 0..cycle.len() {
                images[cycle[w]] = cycle[(w + 1) % cycle.len()] as u32;
            }
        }

        if !any_cycle {
            return Err(err("expected at least one cycle, e.g. \"()\""));
        }
        Ok(Permutation { images })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycles())
    }
}
