//! Relation lattices: the kernel of the mark map restricted to detecting
//! subgroup classes, in characteristic 0 and p.
//!
//! A virtual permutation module vanishes over a field of characteristic 0
//! exactly when its marks vanish on all cyclic subgroups, and over
//! characteristic p exactly when they vanish on all p-hypo-elementary
//! subgroups. The lattice of such elements is computed as an integer kernel
//! of the restricted mark matrix, HNF-reduced; the class of `G` itself is
//! always the last coordinate, and the projection of the lattice onto that
//! coordinate is an ideal `gZ` whose generator the trichotomy predicts from
//! class predicates alone.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::burnside::{marks_of, BurnsideElement};
use crate::classes::{is_cyclic, is_p_hypo_elementary, is_pq_dress, is_prime, prime_divisors};
use crate::error::{Error, Result};
use crate::group::GroupKey;
use crate::linalg::{coordinate_ideal, kernel_basis, lattice_contains, IntMatrix};
use crate::store::{GroupData, GroupStore};

/// The characteristic of the coefficient field: zero or a prime.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Characteristic {
    Zero,
    Prime(u64),
}

impl Characteristic {
    pub fn new(value: u64) -> Result<Characteristic> {
        match value {
            0 => Ok(Characteristic::Zero),
            p if is_prime(p) => Ok(Characteristic::Prime(p)),
            p => Err(Error::NotPrime(p)),
        }
    }

    pub fn as_u64(&self) -> u64 {
        match self {
            Characteristic::Zero => 0,
            Characteristic::Prime(p) => *p,
        }
    }
}

impl fmt::Display for Characteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_u64())
    }
}

/// The lattice of relations of one group in one characteristic.
#[derive(Clone, Debug)]
pub struct RelationLattice {
    pub group: GroupKey,
    pub characteristic: Characteristic,
    /// Detecting subgroup classes: cyclic in characteristic 0,
    /// p-hypo-elementary in characteristic p.
    pub detecting: Vec<usize>,
    /// HNF-reduced basis; rows are relations, columns are subgroup classes.
    pub basis: IntMatrix,
    /// Generator of the ideal of coefficients of `[G/G]` over the lattice.
    pub top_ideal: BigInt,
}

impl RelationLattice {
    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis_elements(&self, data: &GroupData) -> Vec<BurnsideElement> {
        assert_eq!(data.key(), self.group);
        self.basis
            .row_vecs()
            .into_iter()
            .map(|row| BurnsideElement::from_coeffs(data, row))
            .collect()
    }

    /// True iff the element lies in the lattice.
    pub fn contains(&self, x: &BurnsideElement) -> bool {
        assert_eq!(x.group(), self.group);
        lattice_contains(&self.basis, x.coeffs())
    }
}

/// Classes whose representative detects the permutation module in the given
/// characteristic.
pub fn detecting_classes(
    store: &GroupStore,
    data: &GroupData,
    ch: Characteristic,
) -> Result<Vec<usize>> {
    let lattice = data.lattice();
    let mut out = Vec::new();
    for (idx, class) in lattice.classes.iter().enumerate() {
        let keep = match ch {
            Characteristic::Zero => class.representative.is_cyclic(data.group()),
            Characteristic::Prime(p) => {
                let sub = store.class_data(data, idx)?;
                is_p_hypo_elementary(store, &sub, p)?
            }
        };
        if keep {
            out.push(idx);
        }
    }
    Ok(out)
}

/// The relation lattice of `G` in the given characteristic, cached in the
/// store.
pub fn relation_lattice(
    store: &GroupStore,
    data: &GroupData,
    ch: Characteristic,
) -> Result<Arc<RelationLattice>> {
    if let Some(found) = store.cached_relations(data.key(), ch) {
        return Ok(found);
    }
    let detecting = detecting_classes(store, data, ch)?;
    let detection_matrix = data.marks().select_rows(&detecting);
    let basis = kernel_basis(&detection_matrix);
    let top_ideal = coordinate_ideal(&basis, data.class_count() - 1);
    let lattice = Arc::new(RelationLattice {
        group: data.key(),
        characteristic: ch,
        detecting,
        basis,
        top_ideal,
    });
    Ok(store.insert_relations(data.key(), ch, lattice))
}

/// True iff the marks of `v` vanish at every detecting class.
pub fn verify_relation(
    store: &GroupStore,
    data: &GroupData,
    ch: Characteristic,
    v: &BurnsideElement,
) -> Result<bool> {
    let detecting = detecting_classes(store, data, ch)?;
    let marks = marks_of(data, v);
    Ok(detecting.into_iter().all(|c| marks[c].is_zero()))
}

/// Generator of `{a : a[G/G] + Σ_{H⊊G} a_H [G/H] ∈ K(G)}`.
pub fn top_coefficient_ideal(
    store: &GroupStore,
    data: &GroupData,
    ch: Characteristic,
) -> Result<BigInt> {
    Ok(relation_lattice(store, data, ch)?.top_ideal.clone())
}

/// Predicted versus computed top-coefficient ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrichotomyReport {
    pub characteristic: Characteristic,
    pub predicted: u64,
    pub computed: BigInt,
    pub agree: bool,
}

/// Predicts the top-coefficient ideal from class predicates alone.
///
/// Characteristic 0: 0 for cyclic groups, q for non-cyclic
/// q-quasi-elementary ones, 1 otherwise. Characteristic p: 0 for
/// p-hypo-elementary groups, q for (p,q)-Dress groups that are not, 1
/// otherwise. A non-cyclic group is q-quasi-elementary for at most one q,
/// and a non-p-hypo-elementary group is (p,q)-Dress for at most one q, so
/// scanning the primes dividing the order is exhaustive.
pub fn predicted_top_ideal(
    store: &GroupStore,
    data: &GroupData,
    ch: Characteristic,
) -> Result<u64> {
    let order = data.group().order();
    match ch {
        Characteristic::Zero => {
            if is_cyclic(data) {
                return Ok(0);
            }
            for q in prime_divisors(order) {
                if crate::classes::is_q_quasi_elementary(data, q)? {
                    return Ok(q);
                }
            }
            Ok(1)
        }
        Characteristic::Prime(p) => {
            if is_p_hypo_elementary(store, data, p)? {
                return Ok(0);
            }
            for q in prime_divisors(order) {
                if is_pq_dress(store, data, p, q)? {
                    return Ok(q);
                }
            }
            Ok(1)
        }
    }
}

/// Runs the prediction against the computed coordinate ideal.
pub fn primordiality_trichotomy(
    store: &GroupStore,
    data: &GroupData,
    ch: Characteristic,
) -> Result<TrichotomyReport> {
    let predicted = predicted_top_ideal(store, data, ch)?;
    let computed = top_coefficient_ideal(store, data, ch)?;
    let agree = computed == BigInt::from(predicted);
    Ok(TrichotomyReport {
        characteristic: ch,
        predicted,
        computed,
        agree,
    })
}
