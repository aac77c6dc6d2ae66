//! Permutations of `{0, …, degree-1}` in image form.

use std::fmt;

use crate::error::{Error, Result};

/// A permutation stored by its images: `images[x]` is where point `x` goes.
///
/// The derived ordering is lexicographic on the image vector, which makes the
/// identity the smallest permutation of any given degree.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Box<[u16]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u16).collect(),
        }
    }

    /// Builds a permutation from explicit images, checking bijectivity.
    pub fn from_images(images: Vec<u16>) -> Result<Self> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        for &img in &images {
            if (img as usize) >= degree || seen[img as usize] {
                return Err(Error::BadCycle(format!(
                    "images {:?} are not a bijection on 0..{}",
                    images, degree
                )));
            }
            seen[img as usize] = true;
        }
        Ok(Permutation {
            images: images.into(),
        })
    }

    /// Builds a permutation of the given degree from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u16>]) -> Result<Self> {
        let mut images: Vec<u16> = (0..degree as u16).collect();
        let mut moved = vec![false; degree];
        for cycle in cycles {
            for (i, &pt) in cycle.iter().enumerate() {
                let to = cycle[(i + 1) % cycle.len()];
                if (pt as usize) >= degree || (to as usize) >= degree {
                    return Err(Error::BadCycle(format!(
                        "point {} out of range for degree {}",
                        pt.max(to),
                        degree
                    )));
                }
                if moved[pt as usize] {
                    return Err(Error::BadCycle(format!("point {} repeated", pt)));
                }
                moved[pt as usize] = true;
                images[pt as usize] = to;
            }
        }
        Ok(Permutation {
            images: images.into(),
        })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> &[u16] {
        &self.images
    }

    /// Function composition: `(self * other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u16; self.degree()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y as usize] = x as u16;
        }
        Permutation {
            images: images.into(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x as u16 == y)
    }

    /// Multiplicative order, via lcm of cycle lengths.
    pub fn order(&self) -> usize {
        self.cycles_with_fixed()
            .into_iter()
            .map(|c| c.len())
            .fold(1usize, num_integer::lcm)
    }

    /// Nontrivial cycles, each rotated to start at its smallest point and
    /// sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<u16>> {
        self.cycles_with_fixed()
            .into_iter()
            .filter(|c| c.len() > 1)
            .collect()
    }

    fn cycles_with_fixed(&self) -> Vec<Vec<u16>> {
        let mut seen = vec![false; self.degree()];
        let mut cycles = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start as u16];
            seen[start] = true;
            let mut pt = self.apply(start);
            while pt != start {
                seen[pt] = true;
                cycle.push(pt as u16);
                pt = self.apply(pt);
            }
            cycles.push(cycle);
        }
        cycles
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, pt) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", pt)?;
            }
            write!(f, ")")?;
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
    fn compose_applies_right_factor_first() {
        let a = Permutation::from_cycles(3, &[vec![0, 1]]).unwrap();
        let b = Permutation::from_cycles(3, &[vec![1, 2]]).unwrap();
        // (a*b)(1) = a(b(1)) = a(2) = 2
        assert_eq!(a.compose(&b).apply(1), 2);
        assert_eq!(b.compose(&a).apply(1), 0);
    }

    #[test]
    fn inverse_and_order() {
        let c = Permutation::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap();
        assert_eq!(c.order(), 4);
        assert!(c.compose(&c.inverse()).is_identity());
        let d = Permutation::from_cycles(5, &[vec![0, 1], vec![2, 3, 4]]).unwrap();
        assert_eq!(d.order(), 6);
    }

    #[test]
    fn identity_is_lexicographically_minimal() {
        let id = Permutation::identity(4);
        let swap = Permutation::from_cycles(4, &[vec![2, 3]]).unwrap();
        assert!(id < swap);
    }

    #[test]
    fn cycle_notation_display() {
        let p = Permutation::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(p.to_string(), "(0 1)(2 3)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
    }

    #[test]
    fn bad_cycles_rejected() {
        assert!(Permutation::from_cycles(3, &[vec![0, 3]]).is_err());
        assert!(Permutation::from_cycles(3, &[vec![0, 1], vec![1, 2]]).is_err());
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
    }
}
