//! Permutations of `{1..n}` and the cycle-notation wire format.
//!
//! Points are 1-based in text and 0-based in storage. Products act
//! left to right: `a.compose(&b)` applies `a` first, then `b`.

use std::fmt;

use crate::arith::lcm;
use crate::error::{Error, Result};

/// A bijection on `{1..n}`.
///
/// The derived ordering compares image arrays lexicographically. It is the
/// canonical element ordering used for class representatives, and the
/// identity is its minimum.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        for &x in &images {
            let x = x as usize;
            if x >= degree {
                return Err(Error::PointOutOfRange {
                    point: x + 1,
                    degree,
                });
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::RepeatedPoint { point: x + 1 });
            }
        }
        Ok(Perm { images })
    }

    /// Builds a permutation from the 1-based image list `[a(1), a(2), ...]`.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        let zero: Vec<u32> = images
            .iter()
            .map(|&x| {
                if x == 0 || x > images.len() {
                    Err(Error::PointOutOfRange {
                        point: x,
                        degree: images.len(),
                    })
                } else {
                    Ok(x as u32 - 1)
                }
            })
            .collect::<Result<_>>()?;
        Perm::from_images(zero)
    }

    /// Builds a permutation from 1-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut seen = vec![false; degree];
        for cycle in cycles {
            for (i, &pt) in cycle.iter().enumerate() {
                if pt == 0 || pt > degree {
                    return Err(Error::PointOutOfRange { point: pt, degree });
                }
                if std::mem::replace(&mut seen[pt - 1], true) {
                    return Err(Error::RepeatedPoint { point: pt });
                }
                let next = cycle[(i + 1) % cycle.len()];
                images[pt - 1] = next as u32 - 1;
            }
        }
        Ok(Perm { images })
    }

    /// Parses disjoint-cycle notation such as `"(1 2 3)(4 5)"`.
    ///
    /// `"()"`, `"id"` and the empty string denote the identity. Points may be
    /// separated by whitespace or commas; unmentioned points are fixed.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        let trimmed = text.trim();
        if trimmed.is_empty() || trimmed == "id" {
            return Ok(Perm::identity(degree));
        }
        let bytes = text.as_bytes();
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut current: Option<Vec<usize>> = None;
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i];
            match c {
                b'(' => {
                    if current.is_some() {
                        return Err(Error::parse(i, "nested '('"));
                    }
                    current = Some(Vec::new());
                    i += 1;
                }
                b')' => match current.take() {
                    Some(cycle) => {
                        cycles.push(cycle);
                        i += 1;
                    }
                    None => return Err(Error::parse(i, "unmatched ')'")),
                },
                b',' if current.is_some() => i += 1,
                c if c.is_ascii_whitespace() => i += 1,
                c if c.is_ascii_digit() => {
                    let Some(cycle) = current.as_mut() else {
                        return Err(Error::parse(i, "point outside of a cycle"));
                    };
                    let start = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    let point: usize = text[start..i]
                        .parse()
                        .map_err(|_| Error::parse(start, "point does not fit in an integer"))?;
                    cycle.push(point);
                }
                _ => {
                    return Err(Error::parse(
                        i,
                        format!("unexpected character {:?}", text[i..].chars().next().unwrap()),
                    ))
                }
            }
        }
        if current.is_some() {
            return Err(Error::parse(bytes.len(), "unclosed '('"));
        }
        let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
        Perm::from_cycles(degree, &refs)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 0-based images.
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// Image of the 1-based point `point`.
    pub fn apply(&self, point: usize) -> usize {
        self.images[point - 1] as usize + 1
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self` then `other`.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.then(other))
    }

    /// Unchecked composition for callers that already validated degrees.
    pub(crate) fn then(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Perm { images }
    }

    pub fn pow(&self, exp: u64) -> Perm {
        let mut result = Perm::identity(self.degree());
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result.then(&base);
            }
            base = base.then(&base);
            e >>= 1;
        }
        result
    }

    /// Cycles with 1-based points in canonical form: each rotated to start at
    /// its minimal point, sorted by that point, fixed points omitted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Multiset of cycle lengths including fixed points, descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        let moved: usize = lens.iter().sum();
        lens.extend(std::iter::repeat_n(1, self.degree() - moved));
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    /// Least `k >= 1` with `self^k = id`.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1, |acc, c| lcm(acc, c.len() as u64))
    }

    pub fn to_cycle_string(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{}]{}", self.degree(), self)
    }
}
