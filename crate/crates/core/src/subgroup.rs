//! Subgroups as bitsets over the parent's element indices, the conjugacy
//! class lattice, and double cosets.
//!
//! Enumeration seeds with all cyclic subgroups and closes the collection
//! under joins with cyclic subgroups; every subgroup of the parent appears.
//! Classes are sorted by (order, canonical key) where the canonical key of a
//! subgroup is its sorted list of member element indices, so class 0 is the
//! trivial subgroup and the last class is the whole group.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::perm::Permutation;

/// Default cap on the total number of subgroups enumerated.
pub const DEFAULT_LATTICE_CAP: usize = 20_000;

/// A subgroup of a fixed parent group, stored as a bitmask over the parent's
/// element indices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    mask: Box<[u64]>,
    order: usize,
}

impl Subgroup {
    fn empty(parent_order: usize) -> Subgroup {
        Subgroup {
            mask: vec![0u64; parent_order.div_ceil(64)].into(),
            order: 0,
        }
    }

    /// The trivial subgroup `{identity}`.
    pub fn trivial(parent: &FiniteGroup) -> Subgroup {
        Subgroup::from_indices(parent.order(), [0])
    }

    /// The whole parent as a subgroup of itself.
    pub fn full(parent: &FiniteGroup) -> Subgroup {
        Subgroup::from_indices(parent.order(), 0..parent.order())
    }

    /// Builds directly from member indices; the caller must pass a set that
    /// is already closed under multiplication.
    pub fn from_indices(parent_order: usize, indices: impl IntoIterator<Item = usize>) -> Subgroup {
        let mut s = Subgroup::empty(parent_order);
        for i in indices {
            s.insert(i);
        }
        s
    }

    /// Closure of a seed set of element indices under multiplication.
    pub fn generated(parent: &FiniteGroup, seed: impl IntoIterator<Item = usize>) -> Subgroup {
        let mut list: Vec<usize> = vec![0];
        let mut s = Subgroup::empty(parent.order());
        s.insert(0);
        for i in seed {
            if !s.contains(i) {
                s.insert(i);
                list.push(i);
            }
        }
        let mut head = 0;
        while head < list.len() {
            let a = list[head];
            head += 1;
            let mut idx = 0;
            while idx < list.len() {
                let b = list[idx];
                idx += 1;
                for p in [parent.mul(a, b), parent.mul(b, a)] {
                    if !s.contains(p) {
                        s.insert(p);
                        list.push(p);
                    }
                }
            }
        }
        s
    }

    fn insert(&mut self, i: usize) {
        let w = i / 64;
        let bit = 1u64 << (i % 64);
        if self.mask[w] & bit == 0 {
            self.mask[w] |= bit;
            self.order += 1;
        }
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.mask[i / 64] & (1u64 << (i % 64)) != 0
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_subset(&self, other: &Subgroup) -> bool {
        self.mask
            .iter()
            .zip(other.mask.iter())
            .all(|(a, b)| a & !b == 0)
    }

    /// Member element indices in increasing order.
    pub fn members(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.mask.iter().enumerate().flat_map(|(w, &bits)| {
            let mut bits = bits;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(w * 64 + b)
                }
            })
        })
    }

    /// Intersection with another subgroup of the same parent.
    pub fn intersect(&self, other: &Subgroup) -> Subgroup {
        let mask: Box<[u64]> = self
            .mask
            .iter()
            .zip(other.mask.iter())
            .map(|(a, b)| a & b)
            .collect();
        let order = mask.iter().map(|w| w.count_ones() as usize).sum();
        Subgroup { mask, order }
    }

    /// The conjugate `g H g^{-1}`.
    pub fn conjugate(&self, parent: &FiniteGroup, g: usize) -> Subgroup {
        Subgroup::from_indices(parent.order(), self.iter().map(|h| parent.conj(g, h)))
    }

    /// True iff every member of `self` normalises into `self` under every
    /// parent element.
    pub fn is_normal(&self, parent: &FiniteGroup) -> bool {
        parent
            .generator_indices()
            .iter()
            .all(|&g| self.iter().all(|h| self.contains(parent.conj(g, h))))
    }

    /// True iff the member set is closed under the parent multiplication.
    pub fn is_closed(&self, parent: &FiniteGroup) -> bool {
        if !self.contains(0) {
            return false;
        }
        let members = self.members();
        members
            .iter()
            .all(|&a| members.iter().all(|&b| self.contains(parent.mul(a, b))))
    }

    /// True iff some member has order equal to the subgroup order.
    pub fn is_cyclic(&self, parent: &FiniteGroup) -> bool {
        self.iter().any(|i| parent.element_order(i) == self.order)
    }

    /// Lexicographic comparison of the sorted member index lists. This is the
    /// canonical key ordering used throughout the lattice.
    pub fn cmp_members(&self, other: &Subgroup) -> Ordering {
        let mut a = self.iter();
        let mut b = other.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(x), Some(y)) => match x.cmp(&y) {
                    Ordering::Equal => continue,
                    ord => return ord,
                },
            }
        }
    }

    /// Members as permutations of the parent.
    pub fn member_permutations(&self, parent: &FiniteGroup) -> Vec<Permutation> {
        self.iter().map(|i| parent.element(i).clone()).collect()
    }

    /// Reindexes `self ⊆ ambient` as a subgroup of the standalone packaging
    /// of `ambient`, whose element order is the induced one. `None` if not
    /// contained.
    pub fn relative_to(&self, ambient: &Subgroup) -> Option<Subgroup> {
        if !self.is_subset(ambient) {
            return None;
        }
        let position: HashMap<usize, usize> = ambient
            .iter()
            .enumerate()
            .map(|(pos, g)| (g, pos))
            .collect();
        Some(Subgroup::from_indices(
            ambient.order(),
            self.iter().map(|g| position[&g]),
        ))
    }
}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subgroup{:?}", self.members())
    }
}

/// One conjugacy class of subgroups.
#[derive(Clone, Debug)]
pub struct SubgroupClass {
    /// The member with the smallest canonical key; `members[0]`.
    pub representative: Subgroup,
    /// All conjugates, sorted by canonical key.
    pub members: Vec<Subgroup>,
    /// Order of the normaliser of the representative, `|G| / members.len()`.
    pub normalizer_order: usize,
    /// Single-member classes are exactly the normal subgroups.
    pub normal: bool,
}

impl SubgroupClass {
    pub fn order(&self) -> usize {
        self.representative.order()
    }
}

/// All subgroups of a group, up to conjugacy.
#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    pub classes: Vec<SubgroupClass>,
    /// `subconjugacy[i][j]` is true iff some member of class `i` is contained
    /// in the representative of class `j`.
    pub subconjugacy: Vec<Vec<bool>>,
    class_of: HashMap<Subgroup, usize>,
}

impl SubgroupLattice {
    /// Reassembles a lattice from its parts, rebuilding the class lookup.
    /// Used by the disk cache; returns `None` on malformed shapes.
    pub(crate) fn from_parts(
        classes: Vec<SubgroupClass>,
        subconjugacy: Vec<Vec<bool>>,
    ) -> Option<SubgroupLattice> {
        let k = classes.len();
        if k == 0 || subconjugacy.len() != k || subconjugacy.iter().any(|r| r.len() != k) {
            return None;
        }
        let mut class_of = HashMap::new();
        for (idx, class) in classes.iter().enumerate() {
            for m in &class.members {
                class_of.insert(m.clone(), idx);
            }
        }
        Some(SubgroupLattice {
            classes,
            subconjugacy,
            class_of,
        })
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Index of the class of the trivial subgroup.
    pub fn trivial_class(&self) -> usize {
        0
    }

    /// Index of the class of the whole group.
    pub fn full_class(&self) -> usize {
        self.classes.len() - 1
    }

    /// Looks up the class of an explicit subgroup.
    pub fn class_of(&self, subgroup: &Subgroup) -> Option<usize> {
        self.class_of.get(subgroup).copied()
    }

    /// Total number of subgroups, summed over classes.
    pub fn subgroup_count(&self) -> usize {
        self.classes.iter().map(|c| c.members.len()).sum()
    }

    /// Class indices of the normal subgroups.
    pub fn normal_classes(&self) -> Vec<usize> {
        (0..self.classes.len())
            .filter(|&i| self.classes[i].normal)
            .collect()
    }
}

/// Enumerates all subgroups with the default cap. See [`all_subgroups_capped`].
pub fn all_subgroups(group: &FiniteGroup) -> Result<SubgroupLattice> {
    all_subgroups_capped(group, DEFAULT_LATTICE_CAP)
}

/// Enumerates every subgroup of `group` and partitions them into conjugacy
/// classes.
///
/// Seeds with the cyclic subgroups and repeatedly joins known subgroups with
/// cyclic ones until no new subgroup appears. Any subgroup is generated by
/// finitely many of its cyclic subgroups, so the fixpoint contains them all.
pub fn all_subgroups_capped(group: &FiniteGroup, cap: usize) -> Result<SubgroupLattice> {
    let n = group.order();

    let mut cyclics: Vec<Subgroup> = Vec::new();
    let mut seen_cyclic: HashSet<Subgroup> = HashSet::new();
    for i in 0..n {
        let mut s = Subgroup::empty(n);
        s.insert(0);
        let mut x = i;
        while !s.contains(x) {
            s.insert(x);
            x = group.mul(x, i);
        }
        if seen_cyclic.insert(s.clone()) {
            cyclics.push(s);
        }
    }

    let mut all: HashSet<Subgroup> = HashSet::new();
    let mut queue: Vec<Subgroup> = Vec::new();
    for c in &cyclics {
        if all.insert(c.clone()) {
            queue.push(c.clone());
        }
    }
    while let Some(s) = queue.pop() {
        for c in &cyclics {
            if c.is_subset(&s) {
                continue;
            }
            let join = Subgroup::generated(group, s.iter().chain(c.iter()));
            if !all.contains(&join) {
                if all.len() >= cap {
                    return Err(Error::LatticeCapExceeded { cap });
                }
                all.insert(join.clone());
                queue.push(join);
            }
        }
    }

    // Partition into conjugacy orbits under the generators.
    let mut assigned: HashSet<Subgroup> = HashSet::new();
    let mut raw_classes: Vec<Vec<Subgroup>> = Vec::new();
    let mut ordered: Vec<&Subgroup> = all.iter().collect();
    ordered.sort_by(|a, b| a.order().cmp(&b.order()).then(a.cmp_members(b)));
    let gen_indices = group.generator_indices();
    for seed in ordered {
        if assigned.contains(seed) {
            continue;
        }
        let mut orbit = vec![seed.clone()];
        assigned.insert(seed.clone());
        let mut head = 0;
        while head < orbit.len() {
            let current = orbit[head].clone();
            head += 1;
            for &g in &gen_indices {
                let conj = current.conjugate(group, g);
                if !assigned.contains(&conj) {
                    debug_assert!(all.contains(&conj));
                    assigned.insert(conj.clone());
                    orbit.push(conj);
                }
            }
        }
        orbit.sort_by(|a, b| a.cmp_members(b));
        raw_classes.push(orbit);
    }

    raw_classes.sort_by(|a, b| {
        a[0].order()
            .cmp(&b[0].order())
            .then_with(|| a[0].cmp_members(&b[0]))
    });

    let mut classes = Vec::with_capacity(raw_classes.len());
    let mut class_of = HashMap::new();
    for (idx, members) in raw_classes.into_iter().enumerate() {
        debug_assert_eq!(n % members.len(), 0);
        for m in &members {
            class_of.insert(m.clone(), idx);
        }
        classes.push(SubgroupClass {
            representative: members[0].clone(),
            normalizer_order: n / members.len(),
            normal: members.len() == 1,
            members,
        });
    }

    let k = classes.len();
    let mut subconjugacy = vec![vec![false; k]; k];
    for j in 0..k {
        let rep = &classes[j].representative;
        for i in 0..k {
            if classes[i].order() > classes[j].order() || classes[j].order() % classes[i].order() != 0
            {
                continue;
            }
            subconjugacy[i][j] = classes[i].members.iter().any(|m| m.is_subset(rep));
        }
    }

    Ok(SubgroupLattice {
        classes,
        subconjugacy,
        class_of,
    })
}

/// One representative element index per double coset `H g K`, deterministic:
/// the smallest element index of each coset, listed in increasing order.
pub fn double_cosets(group: &FiniteGroup, h: &Subgroup, k: &Subgroup) -> Vec<usize> {
    let n = group.order();
    let mut covered = vec![false; n];
    let mut reps = Vec::new();
    let h_members = h.members();
    let k_members = k.members();
    for g in 0..n {
        if covered[g] {
            continue;
        }
        reps.push(g);
        for &a in &h_members {
            let ag = group.mul(a, g);
            for &b in &k_members {
                covered[group.mul(ag, b)] = true;
            }
        }
    }
    reps
}

/// Repackages a subgroup as a standalone [`FiniteGroup`] on the same points.
///
/// The element list of the result is the sorted member list, so its canonical
/// ordering, key and lattice depend only on the member set. A small
/// generating set is extracted greedily.
pub fn subgroup_group(parent: &FiniteGroup, subgroup: &Subgroup) -> Result<FiniteGroup> {
    let elements = subgroup.member_permutations(parent);
    let mut generators: Vec<Permutation> = Vec::new();
    let mut closure = Subgroup::from_indices(parent.order(), [0]);
    for i in subgroup.iter() {
        if !closure.contains(i) {
            generators.push(parent.element(i).clone());
            closure = Subgroup::generated(parent, closure.iter().chain([i]));
        }
    }
    FiniteGroup::from_sorted_elements(parent.degree(), generators, elements)
}
