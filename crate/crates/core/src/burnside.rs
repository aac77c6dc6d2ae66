//! The Burnside ring on the standard basis `[G/H]`, its marks, and the maps
//! induced by subgroup inclusions, quotients and conjugation.
//!
//! Elements of the ring of a subgroup `H ≤ G` live on `H`'s own standalone
//! lattice (see [`crate::subgroup::subgroup_group`]); induction and
//! restriction handle the embedding explicitly. Multiplication goes through
//! mark vectors and triangular back-substitution; the Mackey double-coset
//! route is a separate code path exercised by `restrict`, so the two can be
//! cross-checked.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupKey};
use crate::linalg::IntMatrix;
use crate::quotient::{subgroup_correspondence, QuotientMap};
use crate::store::{GroupData, GroupStore};
use crate::subgroup::{double_cosets, Subgroup, SubgroupLattice};

/// An element of the Burnside ring, an integer vector over the subgroup
/// classes of its group.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BurnsideElement {
    group: GroupKey,
    coeffs: Vec<BigInt>,
}

impl BurnsideElement {
    pub fn zero(data: &GroupData) -> BurnsideElement {
        BurnsideElement {
            group: data.key(),
            coeffs: vec![BigInt::zero(); data.class_count()],
        }
    }

    /// The basis element `[G/K]` for the given subgroup class.
    pub fn basis(data: &GroupData, class: usize) -> BurnsideElement {
        let mut x = BurnsideElement::zero(data);
        x.coeffs[class] = BigInt::from(1);
        x
    }

    /// The ring identity `[G/G]`.
    pub fn one(data: &GroupData) -> BurnsideElement {
        BurnsideElement::basis(data, data.lattice().full_class())
    }

    pub fn from_coeffs(data: &GroupData, coeffs: Vec<BigInt>) -> BurnsideElement {
        assert_eq!(coeffs.len(), data.class_count());
        BurnsideElement {
            group: data.key(),
            coeffs,
        }
    }

    pub fn from_i64(data: &GroupData, coeffs: &[i64]) -> BurnsideElement {
        BurnsideElement::from_coeffs(data, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn group(&self) -> GroupKey {
        self.group
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scaled(&self, by: &BigInt) -> BurnsideElement {
        BurnsideElement {
            group: self.group,
            coeffs: self.coeffs.iter().map(|c| c * by).collect(),
        }
    }

    fn assert_same_group(&self, other: &BurnsideElement) {
        assert_eq!(
            self.group, other.group,
            "Burnside elements live on different groups"
        );
    }
}

impl std::ops::Add for &BurnsideElement {
    type Output = BurnsideElement;
    fn add(self, rhs: &BurnsideElement) -> BurnsideElement {
        self.assert_same_group(rhs);
        BurnsideElement {
            group: self.group,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl std::ops::Sub for &BurnsideElement {
    type Output = BurnsideElement;
    fn sub(self, rhs: &BurnsideElement) -> BurnsideElement {
        self.assert_same_group(rhs);
        BurnsideElement {
            group: self.group,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl std::ops::Neg for &BurnsideElement {
    type Output = BurnsideElement;
    fn neg(self) -> BurnsideElement {
        BurnsideElement {
            group: self.group,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// The table of marks: `marks[i][j] = #(G/K_j)^{H_i}`, triangular under the
/// order-sorted class ordering.
///
/// Counted as (conjugates of `H_i` inside `K_j`) × `|N_G(H_i)| / |K_j|`; the
/// division is exact.
pub fn table_of_marks(group: &FiniteGroup, lattice: &SubgroupLattice) -> IntMatrix {
    debug_assert_eq!(lattice.classes[lattice.full_class()].order(), group.order());
    let k = lattice.class_count();
    let mut m = IntMatrix::zeros(k, k);
    for j in 0..k {
        let rep = &lattice.classes[j].representative;
        for i in 0..k {
            if lattice.classes[i].order() > rep.order() {
                continue;
            }
            let inside = lattice.classes[i]
                .members
                .iter()
                .filter(|s| s.is_subset(rep))
                .count();
            if inside == 0 {
                continue;
            }
            let total = inside * lattice.classes[i].normalizer_order;
            debug_assert_eq!(total % rep.order(), 0);
            m[(i, j)] = BigInt::from(total / rep.order());
        }
    }
    m
}

/// Mark vector `(f_{H_i}(x))_i`; marks are linear, so this is the table of
/// marks applied to the coefficients.
pub fn marks_of(data: &GroupData, x: &BurnsideElement) -> Vec<BigInt> {
    assert_eq!(x.group(), data.key());
    data.marks().mul_vec(x.coeffs())
}

/// Product in the Burnside ring via pointwise multiplication of marks and
/// triangular back-substitution.
pub fn multiply(
    data: &GroupData,
    x: &BurnsideElement,
    y: &BurnsideElement,
) -> Result<BurnsideElement> {
    assert_eq!(x.group(), data.key());
    assert_eq!(y.group(), data.key());
    let mx = marks_of(data, x);
    let my = marks_of(data, y);
    let target: Vec<BigInt> = mx.iter().zip(&my).map(|(a, b)| a * b).collect();
    solve_mark_system(data.marks(), &target).map(|coeffs| BurnsideElement {
        group: data.key(),
        coeffs,
    })
}

/// Solves `marks · z = target` for integral `z`; the mark matrix is upper
/// triangular with positive diagonal.
pub(crate) fn solve_mark_system(marks: &IntMatrix, target: &[BigInt]) -> Result<Vec<BigInt>> {
    let k = marks.rows();
    let mut z = vec![BigInt::zero(); k];
    for j in (0..k).rev() {
        let mut acc = target[j].clone();
        for l in j + 1..k {
            acc -= &marks[(j, l)] * &z[l];
        }
        let (q, r) = acc.div_rem(&marks[(j, j)]);
        if !r.is_zero() {
            return Err(Error::IntegralityViolation);
        }
        z[j] = q;
    }
    Ok(z)
}

/// Translation table between a subgroup's element indices in the parent and
/// in its standalone packaging.
struct Embedding {
    /// Parent element index per standalone index (increasing).
    members: Vec<usize>,
    position: HashMap<usize, usize>,
}

impl Embedding {
    fn new(subgroup: &Subgroup) -> Embedding {
        let members = subgroup.members();
        let position = members.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        Embedding { members, position }
    }

    fn to_parent(&self, sub_index: usize) -> usize {
        self.members[sub_index]
    }

    fn to_sub(&self, parent_index: usize) -> Option<usize> {
        self.position.get(&parent_index).copied()
    }

    /// A subgroup of the standalone group, as a subgroup of the parent.
    fn lift(&self, sub: &Subgroup, parent_order: usize) -> Subgroup {
        Subgroup::from_indices(parent_order, sub.iter().map(|i| self.to_parent(i)))
    }

    /// A subgroup of the parent contained in the members, in standalone
    /// indices.
    fn lower(&self, parent_sub: &Subgroup) -> Option<Subgroup> {
        let indices: Option<Vec<usize>> = parent_sub.iter().map(|g| self.to_sub(g)).collect();
        Some(Subgroup::from_indices(self.members.len(), indices?))
    }
}

/// Induction `B(H) → B(G)` along `H ≤ G`: the basis map `[H/U] ↦ [G/U]`,
/// identifying `U`'s class in `H` with its class in `G`.
pub fn induce(
    store: &GroupStore,
    parent: &GroupData,
    h: &Subgroup,
    x: &BurnsideElement,
) -> Result<BurnsideElement> {
    if !h.is_closed(parent.group()) {
        return Err(Error::NotSubgroup);
    }
    let h_data = store.subgroup_data(parent, h)?;
    if x.group() != h_data.key() {
        return Err(Error::GroupMismatch);
    }
    let emb = Embedding::new(h);
    let mut out = BurnsideElement::zero(parent);
    for (u, coeff) in x.coeffs().iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let lifted = emb.lift(
            &h_data.lattice().classes[u].representative,
            parent.group().order(),
        );
        let class = parent
            .lattice()
            .class_of(&lifted)
            .expect("subgroup of H is a subgroup of G");
        out.coeffs[class] += coeff;
    }
    Ok(out)
}

/// Restriction `B(G) → B(H)` along `H ≤ G`:
/// `[G/K] ↦ Σ_{HgK} [H / (H ∩ gKg^{-1})]` over double cosets.
pub fn restrict(
    store: &GroupStore,
    parent: &GroupData,
    h: &Subgroup,
    x: &BurnsideElement,
) -> Result<BurnsideElement> {
    if x.group() != parent.key() {
        return Err(Error::GroupMismatch);
    }
    if !h.is_closed(parent.group()) {
        return Err(Error::NotSubgroup);
    }
    let h_data = store.subgroup_data(parent, h)?;
    let emb = Embedding::new(h);
    let group = parent.group();
    let mut out = BurnsideElement::zero(&h_data);
    for (j, coeff) in x.coeffs().iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let k_rep = &parent.lattice().classes[j].representative;
        for g in double_cosets(group, h, k_rep) {
            let conj = k_rep.conjugate(group, g);
            let meet = h.intersect(&conj);
            let lowered = emb.lower(&meet).expect("intersection lies in H");
            let class = h_data
                .lattice()
                .class_of(&lowered)
                .expect("intersection is a subgroup of H");
            out.coeffs[class] += coeff;
        }
    }
    Ok(out)
}

/// Inflation `B(G/N) → B(G)` along a quotient map: the basis map
/// `[(G/N)/(H/N)] ↦ [G/H]` through the subgroup correspondence.
pub fn inflate(
    store: &GroupStore,
    source: &GroupData,
    qm: &QuotientMap,
    x: &BurnsideElement,
) -> Result<BurnsideElement> {
    let target = store.data(&qm.target)?;
    if x.group() != target.key() {
        return Err(Error::GroupMismatch);
    }
    let corr = subgroup_correspondence(qm, source.group(), source.lattice(), target.lattice());
    let mut out = BurnsideElement::zero(source);
    for (c, coeff) in x.coeffs().iter().enumerate() {
        if !coeff.is_zero() {
            out.coeffs[corr[c]] += coeff;
        }
    }
    Ok(out)
}

/// Transport `B(H) → B(gHg^{-1})` along conjugation by `g`, returning the
/// conjugate subgroup and the transported element.
pub fn conjugate_transport(
    store: &GroupStore,
    parent: &GroupData,
    h: &Subgroup,
    g: usize,
    x: &BurnsideElement,
) -> Result<(Subgroup, BurnsideElement)> {
    let h_data = store.subgroup_data(parent, h)?;
    if x.group() != h_data.key() {
        return Err(Error::GroupMismatch);
    }
    let group = parent.group();
    let image = h.conjugate(group, g);
    let image_data = store.subgroup_data(parent, &image)?;
    let emb_h = Embedding::new(h);
    let emb_image = Embedding::new(&image);
    let mut out = BurnsideElement::zero(&image_data);
    for (u, coeff) in x.coeffs().iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let rep = emb_h.lift(
            &h_data.lattice().classes[u].representative,
            group.order(),
        );
        let conj = rep.conjugate(group, g);
        let lowered = emb_image.lower(&conj).expect("conjugate lands in gHg^{-1}");
        let class = image_data
            .lattice()
            .class_of(&lowered)
            .expect("conjugate subgroup class");
        out.coeffs[class] += coeff;
    }
    Ok((image, out))
}

/// An isomorphism between two concretely different groups, given on element
/// indices. Used to compare composites that land in distinct but isomorphic
/// quotient realisations.
pub struct GroupIso {
    source: GroupKey,
    target: GroupKey,
    elem_map: Vec<usize>,
}

impl GroupIso {
    /// Builds the isomorphism induced by two surjections from a common group
    /// with equal kernels: `t1_of[g] ↦ t2_of[g]`.
    pub fn from_surjections(
        t1: &GroupData,
        t1_of: &[usize],
        t2: &GroupData,
        t2_of: &[usize],
    ) -> Result<GroupIso> {
        assert_eq!(t1_of.len(), t2_of.len());
        let mut elem_map = vec![usize::MAX; t1.group().order()];
        for (a, b) in t1_of.iter().zip(t2_of) {
            if elem_map[*a] == usize::MAX {
                elem_map[*a] = *b;
            } else if elem_map[*a] != *b {
                return Err(Error::GroupMismatch);
            }
        }
        let mut seen = vec![false; t2.group().order()];
        for &b in &elem_map {
            if b == usize::MAX || seen[b] {
                return Err(Error::GroupMismatch);
            }
            seen[b] = true;
        }
        Ok(GroupIso {
            source: t1.key(),
            target: t2.key(),
            elem_map,
        })
    }

    /// Transports an element along the isomorphism: `[A/U] ↦ [B/φ(U)]`.
    pub fn transport(
        &self,
        source: &GroupData,
        target: &GroupData,
        x: &BurnsideElement,
    ) -> Result<BurnsideElement> {
        if x.group() != self.source || source.key() != self.source || target.key() != self.target {
            return Err(Error::GroupMismatch);
        }
        let mut out = BurnsideElement::zero(target);
        for (u, coeff) in x.coeffs().iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            let rep = &source.lattice().classes[u].representative;
            let image = Subgroup::from_indices(
                target.group().order(),
                rep.iter().map(|i| self.elem_map[i]),
            );
            let class = target
                .lattice()
                .class_of(&image)
                .expect("isomorphic image of a subgroup");
            out.coeffs[class] += coeff;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::generate_group;
    use crate::perm::Permutation;
    use crate::quotient::quotient_group;

    fn perm(degree: usize, cycles: &[&[u16]]) -> Permutation {
        let cycles: Vec<Vec<u16>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(degree, &cycles).unwrap()
    }

    fn s3_data(store: &GroupStore) -> std::sync::Arc<GroupData> {
        let g = generate_group(3, vec![perm(3, &[&[0, 1, 2]]), perm(3, &[&[0, 1]])]).unwrap();
        store.data(&g).unwrap()
    }

    fn a4_data(store: &GroupStore) -> std::sync::Arc<GroupData> {
        let g = generate_group(4, vec![perm(4, &[&[0, 1, 2]]), perm(4, &[&[1, 2, 3]])]).unwrap();
        store.data(&g).unwrap()
    }

    #[test]
    fn s3_table_of_marks() {
        let store = GroupStore::new();
        let data = s3_data(&store);
        let expected = IntMatrix::from_i64(&[
            &[6, 3, 2, 1],
            &[0, 1, 0, 1],
            &[0, 0, 2, 1],
            &[0, 0, 0, 1],
        ]);
        assert_eq!(data.marks(), &expected);
    }

    #[test]
    fn trivial_group_marks() {
        let store = GroupStore::new();
        let g = generate_group(1, vec![]).unwrap();
        let data = store.data(&g).unwrap();
        assert_eq!(data.marks(), &IntMatrix::from_i64(&[&[1]]));
    }

    #[test]
    fn klein_trivial_row_counts_cosets() {
        let store = GroupStore::new();
        let g = generate_group(
            4,
            vec![perm(4, &[&[0, 1], &[2, 3]]), perm(4, &[&[0, 2], &[1, 3]])],
        )
        .unwrap();
        let data = store.data(&g).unwrap();
        let row: Vec<BigInt> = data.marks().row(0).to_vec();
        let expected: Vec<BigInt> = [4i64, 2, 2, 2, 1].iter().map(|&x| x.into()).collect();
        assert_eq!(row, expected);
    }

    /// Brute-force mark: enumerate the cosets of `K` as explicit sets and
    /// count those fixed by every member of `H`.
    pub(crate) fn mark_by_coset_enumeration(
        group: &FiniteGroup,
        h: &Subgroup,
        k: &Subgroup,
    ) -> usize {
        let n = group.order();
        let mut seen = vec![false; n];
        let mut fixed = 0;
        for g in 0..n {
            if seen[g] {
                continue;
            }
            let coset: std::collections::BTreeSet<usize> =
                k.iter().map(|m| group.mul(g, m)).collect();
            for &c in &coset {
                seen[c] = true;
            }
            let is_fixed = h.iter().all(|a| {
                coset
                    .iter()
                    .all(|&c| coset.contains(&group.mul(a, c)))
            });
            if is_fixed {
                fixed += 1;
            }
        }
        fixed
    }

    #[test]
    fn marks_match_coset_enumeration_on_a4() {
        let store = GroupStore::new();
        let data = a4_data(&store);
        let lat = data.lattice();
        for i in 0..lat.class_count() {
            for j in 0..lat.class_count() {
                let brute = mark_by_coset_enumeration(
                    data.group(),
                    &lat.classes[i].representative,
                    &lat.classes[j].representative,
                );
                assert_eq!(data.marks()[(i, j)], BigInt::from(brute));
            }
        }
    }

    #[test]
    fn multiplication_examples() {
        let store = GroupStore::new();
        let data = s3_data(&store);
        // [G/G] is the identity
        let one = BurnsideElement::one(&data);
        let x = BurnsideElement::from_i64(&data, &[2, -1, 3, 0]);
        assert_eq!(multiply(&data, &one, &x).unwrap(), x);
        // [G/C_2]^2 = [G/C_2] + [G/1]
        let c2 = BurnsideElement::basis(&data, 1);
        let sq = multiply(&data, &c2, &c2).unwrap();
        assert_eq!(sq, BurnsideElement::from_i64(&data, &[1, 1, 0, 0]));
        // [G/1]^2 = 6 [G/1]
        let free = BurnsideElement::basis(&data, 0);
        let sq = multiply(&data, &free, &free).unwrap();
        assert_eq!(sq, BurnsideElement::from_i64(&data, &[6, 0, 0, 0]));
    }

    #[test]
    fn mark_homomorphism_on_random_elements() {
        let store = GroupStore::new();
        let data = a4_data(&store);
        let xs = [
            BurnsideElement::from_i64(&data, &[1, -2, 0, 3, 1]),
            BurnsideElement::from_i64(&data, &[0, 1, 1, -1, 2]),
            BurnsideElement::from_i64(&data, &[-3, 0, 2, 0, 1]),
        ];
        for x in &xs {
            for y in &xs {
                let prod = multiply(&data, x, y).unwrap();
                let lhs = marks_of(&data, &prod);
                let rhs: Vec<BigInt> = marks_of(&data, x)
                    .iter()
                    .zip(marks_of(&data, y))
                    .map(|(a, b)| a * b)
                    .collect();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn marks_of_spec_vector() {
        let store = GroupStore::new();
        let data = s3_data(&store);
        let x = BurnsideElement::from_i64(&data, &[1, -2, -1, 2]);
        let marks = marks_of(&data, &x);
        let expected: Vec<BigInt> = [0i64, 0, 0, 2].iter().map(|&v| v.into()).collect();
        assert_eq!(marks, expected);
        assert_eq!(marks_of(&data, &BurnsideElement::one(&data)), vec![BigInt::from(1); 4]);
        assert!(marks_of(&data, &BurnsideElement::zero(&data))
            .iter()
            .all(Zero::is_zero));
    }

    #[test]
    fn induce_basis_and_identity() {
        let store = GroupStore::new();
        let data = s3_data(&store);
        let lat = data.lattice();
        let c2 = lat.classes[1].representative.clone();
        let h_data = store.subgroup_data(&data, &c2).unwrap();
        // Ind [H/H] = [G/H]
        let top = BurnsideElement::one(&h_data);
        let ind = induce(&store, &data, &c2, &top).unwrap();
        assert_eq!(ind, BurnsideElement::from_i64(&data, &[0, 1, 0, 0]));
        // Ind over H = G is the identity
        let full = Subgroup::full(data.group());
        let x = BurnsideElement::from_i64(&data, &[1, 2, 3, 4]);
        assert_eq!(induce(&store, &data, &full, &x).unwrap(), x);
    }

    #[test]
    fn induce_fuses_klein_involutions_in_a4() {
        let store = GroupStore::new();
        let data = a4_data(&store);
        let v4 = data
            .lattice()
            .classes
            .iter()
            .find(|c| c.order() == 4)
            .unwrap()
            .representative
            .clone();
        let v_data = store.subgroup_data(&data, &v4).unwrap();
        assert_eq!(v_data.class_count(), 5);
        let x = BurnsideElement::from_i64(&v_data, &[1, -1, -1, -1, 2]);
        let ind = induce(&store, &data, &v4, &x).unwrap();
        // the three C_2 of V_4 fuse into the single C_2 class of A_4
        assert_eq!(ind, BurnsideElement::from_i64(&data, &[1, -3, 0, 2, 0]));
    }

    #[test]
    fn restrict_examples() {
        let store = GroupStore::new();
        let data = s3_data(&store);
        let lat = data.lattice();
        // Res to G is the identity
        let full = Subgroup::full(data.group());
        let x = BurnsideElement::from_i64(&data, &[1, -1, 2, 5]);
        assert_eq!(restrict(&store, &data, &full, &x).unwrap(), x);
        // Res_{C_3} [G/1] = 2 [C_3/1]
        let c3 = lat.classes[2].representative.clone();
        let c3_data = store.subgroup_data(&data, &c3).unwrap();
        let free = BurnsideElement::basis(&data, 0);
        let res = restrict(&store, &data, &c3, &free).unwrap();
        assert_eq!(res, BurnsideElement::from_i64(&c3_data, &[2, 0]));
        // Res_{C_3} [G/C_2] = [C_3/1]  (single orbit of size 3)
        let gc2 = BurnsideElement::basis(&data, 1);
        let res = restrict(&store, &data, &c3, &gc2).unwrap();
        assert_eq!(res, BurnsideElement::from_i64(&c3_data, &[1, 0]));
    }

    /// Independent route for restriction: decompose the `H`-action on the
    /// cosets of `K` into orbits and read off each orbit's stabiliser class.
    fn restrict_by_orbits(
        store: &GroupStore,
        data: &GroupData,
        h: &Subgroup,
        class_j: usize,
    ) -> BurnsideElement {
        let group = data.group();
        let k = &data.lattice().classes[class_j].representative;
        let n = group.order();
        let mut coset_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for g in 0..n {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(g);
            for m in k.iter() {
                coset_of[group.mul(g, m)] = id;
            }
        }
        let h_data = store.subgroup_data(data, h).unwrap();
        let emb = Embedding::new(h);
        let mut out = BurnsideElement::zero(&h_data);
        let mut orbit_seen = vec![false; reps.len()];
        for c in 0..reps.len() {
            if orbit_seen[c] {
                continue;
            }
            let mut orbit = vec![c];
            orbit_seen[c] = true;
            let mut head = 0;
            while head < orbit.len() {
                let cur = orbit[head];
                head += 1;
                for a in h.iter() {
                    let next = coset_of[group.mul(a, reps[cur])];
                    if !orbit_seen[next] {
                        orbit_seen[next] = true;
                        orbit.push(next);
                    }
                }
            }
            let stab = Subgroup::from_indices(
                n,
                h.iter().filter(|&a| coset_of[group.mul(a, reps[c])] == c),
            );
            let class = h_data
                .lattice()
                .class_of(&emb.lower(&stab).unwrap())
                .unwrap();
            out.coeffs[class] += BigInt::from(1);
            assert_eq!(h.order() / stab.order(), orbit.len());
        }
        out
    }

    #[test]
    fn restrict_matches_orbit_decomposition() {
        let store = GroupStore::new();
        for data in [s3_data(&store), a4_data(&store)] {
            let lat = data.lattice();
            for class_h in 0..lat.class_count() {
                let h = lat.classes[class_h].representative.clone();
                for class_j in 0..lat.class_count() {
                    let basis = BurnsideElement::basis(&data, class_j);
                    let fast = restrict(&store, &data, &h, &basis).unwrap();
                    let slow = restrict_by_orbits(&store, &data, &h, class_j);
                    assert_eq!(fast, slow);
                }
            }
        }
    }

    #[test]
    fn inflate_examples() {
        let store = GroupStore::new();
        let data = a4_data(&store);
        let v4 = data
            .lattice()
            .classes
            .iter()
            .find(|c| c.order() == 4)
            .unwrap()
            .representative
            .clone();
        let qm = quotient_group(data.group(), &v4).unwrap();
        let target = store.data(&qm.target).unwrap();
        // Inf [Ḡ/Ḡ] = [G/G]
        let one = BurnsideElement::one(&target);
        let inf = inflate(&store, &data, &qm, &one).unwrap();
        assert_eq!(inf, BurnsideElement::one(&data));
        // Inf [C_3/1] = [A_4/V_4]
        let free = BurnsideElement::basis(&target, 0);
        let inf = inflate(&store, &data, &qm, &free).unwrap();
        assert_eq!(inf, BurnsideElement::from_i64(&data, &[0, 0, 0, 1, 0]));
        // Inflation along N = 1 is the identity under the correspondence
        let triv = Subgroup::trivial(data.group());
        let qm1 = quotient_group(data.group(), &triv).unwrap();
        let t1 = store.data(&qm1.target).unwrap();
        assert_eq!(t1.class_count(), data.class_count());
        let x = BurnsideElement::from_i64(&t1, &[1, -2, 0, 3, 1]);
        let back = inflate(&store, &data, &qm1, &x).unwrap();
        assert_eq!(back.coeffs(), x.coeffs());
    }

    #[test]
    fn degree_consistency_under_induction() {
        // trivial-class mark of Ind x = [G:H] * trivial-class mark of x
        let store = GroupStore::new();
        let data = a4_data(&store);
        for class in 0..data.class_count() {
            let h = data.lattice().classes[class].representative.clone();
            let h_data = store.subgroup_data(&data, &h).unwrap();
            let x = BurnsideElement::from_i64(
                &h_data,
                &vec![2; h_data.class_count()],
            );
            let ind = induce(&store, &data, &h, &x).unwrap();
            let lhs = marks_of(&data, &ind)[0].clone();
            let rhs = BigInt::from(data.group().order() / h.order())
                * marks_of(&h_data, &x)[0].clone();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn triangularity_and_diagonal_positivity() {
        let store = GroupStore::new();
        for data in [s3_data(&store), a4_data(&store)] {
            let m = data.marks();
            let k = m.rows();
            for i in 0..k {
                assert!(m[(i, i)] > BigInt::zero());
                for j in 0..i {
                    assert!(m[(i, j)].is_zero());
                }
            }
            // trivial row counts cosets
            for j in 0..k {
                let index = data.group().order() / data.lattice().classes[j].order();
                assert_eq!(m[(0, j)], BigInt::from(index));
            }
        }
    }
}
