//! Quotient groups acting on cosets, and the subgroup correspondence.

use crate::error::{Error, Result};
use crate::group::{generate_group_capped, FiniteGroup};
use crate::perm::Permutation;
use crate::subgroup::{Subgroup, SubgroupLattice};

/// An epimorphism `G → G/N` realised concretely: the target is the
/// permutation group induced by left multiplication on the cosets of `N`.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    pub kernel: Subgroup,
    pub target: FiniteGroup,
    /// `element_map[g]` is the target index of the coset permutation of `g`.
    pub element_map: Vec<usize>,
    /// `coset_of[g]` is the coset index (point of the target) containing `g`.
    pub coset_of: Vec<usize>,
}

/// Builds the quotient of `group` by a normal subgroup.
///
/// Cosets are numbered by first appearance in element-index order, so coset 0
/// is `N` itself and the construction is deterministic.
pub fn quotient_group(group: &FiniteGroup, normal: &Subgroup) -> Result<QuotientMap> {
    if !normal.is_normal(group) || !normal.is_closed(group) {
        return Err(Error::NotNormal);
    }
    let n = group.order();
    let mut coset_of = vec![usize::MAX; n];
    let mut reps: Vec<usize> = Vec::new();
    for g in 0..n {
        if coset_of[g] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(g);
        for m in normal.iter() {
            coset_of[group.mul(g, m)] = id;
        }
    }
    let index = reps.len();
    debug_assert_eq!(index * normal.order(), n);

    let coset_perm = |g: usize| -> Permutation {
        let images: Vec<u16> = reps
            .iter()
            .map(|&r| coset_of[group.mul(g, r)] as u16)
            .collect();
        Permutation::from_images(images).expect("coset action is a permutation")
    };

    let gen_perms: Vec<Permutation> = group
        .generator_indices()
        .into_iter()
        .map(coset_perm)
        .collect();
    let target = generate_group_capped(index, gen_perms, n + 1)?;
    debug_assert_eq!(target.order(), index);

    let element_map: Vec<usize> = (0..n)
        .map(|g| {
            target
                .element_index(&coset_perm(g))
                .expect("coset permutation lies in the generated image")
        })
        .collect();

    Ok(QuotientMap {
        kernel: normal.clone(),
        target,
        element_map,
        coset_of,
    })
}

/// For each subgroup class of the quotient, the class in the source of its
/// full preimage. The map is a bijection onto the classes of subgroups
/// containing the kernel.
pub fn subgroup_correspondence(
    qm: &QuotientMap,
    source: &FiniteGroup,
    source_lattice: &SubgroupLattice,
    target_lattice: &SubgroupLattice,
) -> Vec<usize> {
    target_lattice
        .classes
        .iter()
        .map(|class| {
            let rep = &class.representative;
            let preimage = Subgroup::from_indices(
                source.order(),
                (0..source.order()).filter(|&g| rep.contains(qm.element_map[g])),
            );
            source_lattice
                .class_of(&preimage)
                .expect("preimage of a subgroup is a subgroup")
        })
        .collect()
}
