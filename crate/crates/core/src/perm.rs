//! Permutations of `{1..n}` acting on the right.
//!
//! Points are stored 0-based; parsing and display use the usual 1-based cycle
//! notation. The product `p * q` applies `p` first and then `q`.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u32]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(Error::BadPermutation(format!(
                    "images {:?} are not a bijection on {} points",
                    images.iter().map(|x| x + 1).collect::<Vec<_>>(),
                    n
                )));
            }
            seen[i] = true;
        }
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }

    /// Builds a permutation of the given degree from disjoint 1-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &point) in cycle.iter().enumerate() {
                if point == 0 || point as usize > degree {
                    return Err(Error::BadPermutation(format!(
                        "point {point} outside 1..{degree}"
                    )));
                }
                let from = (point - 1) as usize;
                if touched[from] {
                    return Err(Error::BadPermutation(format!(
                        "point {point} appears twice in cycle notation"
                    )));
                }
                touched[from] = true;
                images[from] = cycle[(k + 1) % cycle.len()] - 1;
            }
        }
        Self::from_images(images)
    }

    /// Parses cycle notation such as `(1 2)(3 4 5)`; `()` is the identity.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Self> {
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::BadPermutation(format!("expected '(' in {text:?}")))?;
            let close = body
                .find(')')
                .ok_or_else(|| Error::BadPermutation(format!("unclosed cycle in {text:?}")))?;
            let points = body[..close]
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<u32>()
                        .map_err(|_| Error::BadPermutation(format!("bad point {s:?} in {text:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if !points.is_empty() {
                cycles.push(points);
            }
            rest = body[close + 1..].trim_start();
        }
        Self::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 0-based images.
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation {
            images: inv.into_boxed_slice(),
        }
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    /// `g⁻¹ · self · g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        g.inverse().then(self).then(g)
    }

    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.images.len()];
        let mut order = 1u64;
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i] as usize;
                len += 1;
            }
            order = num_integer::lcm(order, len);
        }
        order
    }

    /// Disjoint cycles of length at least two, 0-based, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i as u32);
                i = self.images[i] as usize;
            }
            out.push(cycle);
        }
        out
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        self.then(rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn right_action_composition() {
        let a = Permutation::parse_cycles(3, "(1 2)").unwrap();
        let b = Permutation::parse_cycles(3, "(1 3)").unwrap();
        // 1 -a-> 2 -b-> 2, 2 -a-> 1 -b-> 3, 3 -a-> 3 -b-> 1
        assert_eq!((&a * &b).to_string(), "(1 2 3)");
        assert_eq!((&b * &a).to_string(), "(1 3 2)");
    }

    #[test]
    fn conjugation_moves_support() {
        let h = Permutation::parse_cycles(3, "(1 2)").unwrap();
        let g = Permutation::parse_cycles(3, "(1 3)").unwrap();
        assert_eq!(h.conjugate_by(&g).to_string(), "(2 3)");
    }

    #[test]
    fn parse_and_display() {
        let p = Permutation::parse_cycles(7, "(1 2 3 4 5 6 7)").unwrap();
        assert_eq!(p.order(), 7);
        assert_eq!(p.to_string(), "(1 2 3 4 5 6 7)");
        assert!(Permutation::parse_cycles(4, "()").unwrap().is_identity());
        assert!(Permutation::parse_cycles(4, "  ").unwrap().is_identity());
        let q = Permutation::parse_cycles(7, "(2 3)(4 7)").unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(q.to_string(), "(2 3)(4 7)");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Permutation::parse_cycles(3, "(1 4)").is_err());
        assert!(Permutation::parse_cycles(3, "(1 2)(2 3)").is_err());
        assert!(Permutation::parse_cycles(3, "(1 2").is_err());
        assert!(Permutation::parse_cycles(3, "(1 x)").is_err());
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3, 1]).is_err());
    }

    #[test]
    fn inverse_round_trip() {
        let p = Permutation::parse_cycles(6, "(1 5 2)(3 6)").unwrap();
        assert!(p.then(&p.inverse()).is_identity());
        assert_eq!(p.order(), 6);
    }
}
