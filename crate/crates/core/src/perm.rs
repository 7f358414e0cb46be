//! Permutations of `0..degree` stored as image arrays.
//!
//! `p[i]` is the image of point `i`. Composition is left to right: `a.then(b)`
//! applies `a` first, so with exponential notation `x^(a.then(b)) = (x^a)^b`.
//! Image arrays compare lexicographically, which makes the identity the least
//! permutation of its degree.

use std::fmt;

use crate::error::{Error, Result};

pub const MAX_DEGREE: usize = u16::MAX as usize;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: Vec<u16>,
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm {
            images: (0..degree as u16).collect(),
        }
    }

    /// Builds a permutation from an image array, rejecting non-bijections.
    pub fn from_images(images: Vec<u16>) -> Result<Perm> {
        let d = images.len();
        if d > MAX_DEGREE {
            return Err(Error::MalformedGenerator(format!(
                "degree {d} exceeds maximum {MAX_DEGREE}"
            )));
        }
        let mut seen = vec![false; d];
        for &img in &images {
            let i = img as usize;
            if i >= d {
                return Err(Error::MalformedGenerator(format!(
                    "image {i} out of range for degree {d}"
                )));
            }
            if seen[i] {
                return Err(Error::MalformedGenerator(format!("image {i} repeated")));
            }
            seen[i] = true;
        }
        Ok(Perm { images })
    }

    /// Convenience constructor from disjoint cycles; points absent from every
    /// cycle are fixed.
    pub fn from_cycles(degree: usize, cycles: &[&[u16]]) -> Result<Perm> {
        let mut images: Vec<u16> = (0..degree as u16).collect();
        for cycle in cycles {
            for w in 0..cycle.len() {
                let from = cycle[w] as usize;
                let to = cycle[(w + 1) % cycle.len()];
                if from >= degree || to as usize >= degree {
                    return Err(Error::MalformedGenerator(format!(
                        "cycle point out of range for degree {degree}"
                    )));
                }
                images[from] = to;
            }
        }
        Perm::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    /// `self` then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: self.images.iter().map(|&i| other.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u16; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img as usize] = i as u16;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img as usize)
    }

    /// Least point moved by this permutation, if any.
    pub fn first_moved_point(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &img)| *i != img as usize)
            .map(|(i, _)| i)
    }

    pub fn images(&self) -> &[u16] {
        &self.images
    }

    /// Cycle notation, `()` for the identity.
    pub fn to_cycle_string(&self) -> String {
        let d = self.degree();
        let mut seen = vec![false; d];
        let mut out = String::new();
        for start in 0..d {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            out.push('(');
            let mut p = start;
            loop {
                seen[p] = true;
                out.push_str(&p.to_string());
                p = self.apply(p);
                if p == start {
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
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm({})", self.to_cycle_string())
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}
