//! Finite permutation groups with fully enumerated elements.
//!
//! Groups are kept concrete: every element is stored, together with a
//! multiplication table, inverses and element orders. At the supported caps
//! this keeps conjugacy, lattice and quotient code exact and simple. No
//! stabiliser-chain machinery is used.

use std::collections::HashMap;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Default cap on the order of a generated group.
pub const DEFAULT_ORDER_CAP: usize = 200;

/// Content hash of a group's canonical element list. Two groups get the same
/// key exactly when they consist of the same permutations of the same degree,
/// so a subgroup of one catalog group and an equal group reached another way
/// share all cached data.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupKey([u8; 32]);

impl GroupKey {
    pub fn hex(&self) -> String {
        self.0.iter().map(|b| format!("{:02x}", b)).collect()
    }
}

impl std::fmt::Debug for GroupKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GroupKey({}…)", &self.hex()[..12])
    }
}

/// A finite permutation group: generators plus the sorted list of all
/// elements, with composition, inverse and order tables.
///
/// `elements[0]` is always the identity, and the element list is sorted
/// lexicographically by images, so element indices are canonical.
#[derive(Clone)]
pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    mult: Vec<u32>,
    inv: Vec<u32>,
    orders: Vec<u32>,
    key: GroupKey,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.key == other.key
    }
}
impl Eq for FiniteGroup {}

/// Generates the closure of `generators` under composition, with the default
/// order cap.
pub fn generate_group(degree: usize, generators: Vec<Permutation>) -> Result<FiniteGroup> {
    generate_group_capped(degree, generators, DEFAULT_ORDER_CAP)
}

/// As [`generate_group`], but with an explicit cap on the group order.
pub fn generate_group_capped(
    degree: usize,
    generators: Vec<Permutation>,
    cap: usize,
) -> Result<FiniteGroup> {
    for g in &generators {
        if g.degree() != degree {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: g.degree(),
            });
        }
    }

    // Breadth-first closure from the identity.
    let mut elements = vec![Permutation::identity(degree)];
    let mut seen: HashMap<Permutation, ()> = HashMap::new();
    seen.insert(elements[0].clone(), ());
    let mut head = 0;
    while head < elements.len() {
        let current = elements[head].clone();
        head += 1;
        for g in &generators {
            let next = g.compose(&current);
            if !seen.contains_key(&next) {
                if elements.len() >= cap {
                    return Err(Error::OrderCapExceeded { cap });
                }
                seen.insert(next.clone(), ());
                elements.push(next);
            }
        }
    }

    elements.sort();
    FiniteGroup::from_sorted_elements(degree, generators, elements)
}

impl FiniteGroup {
    /// Assembles the tables for an already-closed, sorted element list.
    pub(crate) fn from_sorted_elements(
        degree: usize,
        generators: Vec<Permutation>,
        elements: Vec<Permutation>,
    ) -> Result<FiniteGroup> {
        let n = elements.len();
        let index: HashMap<Permutation, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        debug_assert!(elements[0].is_identity());

        let mut mult = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                let p = elements[i].compose(&elements[j]);
                mult[i * n + j] = *index.get(&p).ok_or(Error::UnknownElement)? as u32;
            }
        }
        let mut inv = vec![0u32; n];
        for i in 0..n {
            let p = elements[i].inverse();
            inv[i] = *index.get(&p).ok_or(Error::UnknownElement)? as u32;
        }
        let orders: Vec<u32> = elements.iter().map(|p| p.order() as u32).collect();

        let mut hasher = Sha256::new();
        hasher.update((degree as u64).to_le_bytes());
        for e in &elements {
            for &img in e.images() {
                hasher.update(img.to_le_bytes());
            }
        }
        let key = GroupKey(hasher.finalize().into());

        Ok(FiniteGroup {
            degree,
            generators,
            elements,
            index,
            mult,
            inv,
            orders,
            key,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn key(&self) -> GroupKey {
        self.key
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn element_index(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Indices of the configured generators.
    pub fn generator_indices(&self) -> Vec<usize> {
        self.generators
            .iter()
            .map(|g| self.index[g])
            .collect()
    }

    /// Index of `elements[i] ∘ elements[j]`.
    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.mult[i * self.elements.len() + j] as usize
    }

    #[inline]
    pub fn inv(&self, i: usize) -> usize {
        self.inv[i] as usize
    }

    /// Multiplicative order of `elements[i]`.
    #[inline]
    pub fn element_order(&self, i: usize) -> usize {
        self.orders[i] as usize
    }

    /// Index of `g x g^{-1}`.
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// True iff some element generates the whole group.
    pub fn is_cyclic(&self) -> bool {
        let n = self.order();
        self.orders.iter().any(|&o| o as usize == n)
    }
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "FiniteGroup(degree {}, order {})",
            self.degree,
            self.order()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(degree: usize, cycles: &[&[u16]]) -> Permutation {
        let cycles: Vec<Vec<u16>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(degree, &cycles).unwrap()
    }

    #[test]
    fn symmetric_group_on_three_points() {
        let g = generate_group(3, vec![perm(3, &[&[0, 1, 2]]), perm(3, &[&[0, 1]])]).unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_cyclic());
        assert!(g.element(0).is_identity());
    }

    #[test]
    fn empty_generation_gives_trivial_group() {
        let g = generate_group(1, vec![]).unwrap();
        assert_eq!(g.order(), 1);
        assert!(g.is_cyclic());
    }

    #[test]
    fn klein_four_group_is_self_inverse() {
        let g = generate_group(
            4,
            vec![perm(4, &[&[0, 1], &[2, 3]]), perm(4, &[&[0, 2], &[1, 3]])],
        )
        .unwrap();
        assert_eq!(g.order(), 4);
        for i in 0..4 {
            assert_eq!(g.inv(i), i);
        }
        assert!(!g.is_cyclic());
    }

    #[test]
    fn multiplication_table_is_consistent() {
        let g = generate_group(3, vec![perm(3, &[&[0, 1, 2]]), perm(3, &[&[0, 1]])]).unwrap();
        for i in 0..6 {
            for j in 0..6 {
                let expected = g.element(i).compose(g.element(j));
                assert_eq!(g.element(g.mul(i, j)), &expected);
            }
            assert_eq!(g.mul(i, g.inv(i)), 0);
        }
    }

    #[test]
    fn degree_mismatch_and_cap() {
        assert!(matches!(
            generate_group(3, vec![perm(4, &[&[0, 1]])]),
            Err(Error::DegreeMismatch { .. })
        ));
        let big = perm(7, &[&[0, 1, 2, 3, 4, 5, 6]]);
        assert!(matches!(
            generate_group_capped(7, vec![big], 5),
            Err(Error::OrderCapExceeded { cap: 5 })
        ));
    }

    #[test]
    fn keys_depend_on_content_only() {
        let a = generate_group(3, vec![perm(3, &[&[0, 1, 2]]), perm(3, &[&[0, 1]])]).unwrap();
        let b = generate_group(3, vec![perm(3, &[&[1, 2]]), perm(3, &[&[0, 1]])]).unwrap();
        assert_eq!(a.key(), b.key());
        let c = generate_group(3, vec![perm(3, &[&[0, 1, 2]])]).unwrap();
        assert_ne!(a.key(), c.key());
    }
}
