//! The imprimitive sublattice (relations induced from proper subgroups or
//! inflated from proper quotients) and the primitive quotient, with the
//! class-theoretic prediction for its structure.
//!
//! Proper quotients are enumerated over all nontrivial normal subgroups,
//! including the whole group, whose quotient is the trivial group.
//! Isomorphic quotients arising from different kernels are processed
//! independently; only their class predicates and relation lattices matter,
//! so no isomorphism testing is needed.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::burnside::{induce, inflate, BurnsideElement};
use crate::classes::{is_cyclic, is_p_hypo_elementary, is_pq_dress, is_q_quasi_elementary,
    prime_divisors};
use crate::error::Result;
use crate::group::GroupKey;
use crate::linalg::{lattice_sum, quotient_invariants, IntMatrix};
use crate::relations::{relation_lattice, verify_relation, Characteristic};
use crate::store::{GroupData, GroupStore};

/// Predicted structure of the primitive quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PredictedPrim {
    /// Free of rank one.
    FreeZ,
    /// Cyclic of prime order q.
    Torsion(u64),
    Trivial,
    /// The hypotheses of the classification do not apply to this group.
    NotApplicable(String),
}

impl PredictedPrim {
    pub fn is_applicable(&self) -> bool {
        !matches!(self, PredictedPrim::NotApplicable(_))
    }
}

/// Everything computed about one primitive quotient.
#[derive(Clone, Debug)]
pub struct PrimReport {
    pub group: GroupKey,
    pub characteristic: Characteristic,
    pub k_rank: usize,
    pub imprim_rank: usize,
    pub free_rank: usize,
    /// Torsion divisibility chain of the quotient, factors > 1.
    pub torsion: Vec<BigInt>,
    /// A relation with coefficient exactly 1 at `[G/G]`, present iff the
    /// top-coefficient ideal is all of Z.
    pub generator_certificate: Option<BurnsideElement>,
    pub predicted: PredictedPrim,
    /// Whether the certificate's image generates the whole quotient; `None`
    /// when there is no certificate.
    pub certificate_generates: Option<bool>,
    pub agree: bool,
}

/// HNF sum of the images under induction of the relation lattices of one
/// representative per proper subgroup class. Conjugate representatives give
/// the same image lattice, so one per class suffices.
pub fn induced_relations(
    store: &GroupStore,
    data: &GroupData,
    ch: Characteristic,
) -> Result<IntMatrix> {
    let n = data.class_count();
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for class in 0..n - 1 {
        let h = data.lattice().classes[class].representative.clone();
        let h_data = store.subgroup_data(data, &h)?;
        let rel = relation_lattice(store, &h_data, ch)?;
        for x in rel.basis_elements(&h_data) {
            rows.push(induce(store, data, &h, &x)?.coeffs().to_vec());
        }
    }
    if rows.is_empty() {
        return Ok(IntMatrix::zeros(0, n));
    }
    lattice_sum(&[&IntMatrix::from_rows(rows)], n)
}

/// HNF sum of the inflations of the relation lattices of `G/N` over all
/// nontrivial normal subgroups `N`, including `N = G`.
pub fn inflated_relations(
    store: &GroupStore,
    data: &GroupData,
    ch: Characteristic,
) -> Result<IntMatrix> {
    let n = data.class_count();
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for class in data.lattice().normal_classes() {
        if data.lattice().classes[class].order() == 1 {
            continue;
        }
        let normal = data.lattice().classes[class].representative.clone();
        let (qm, q_data) = store.quotient(data, &normal)?;
        let rel = relation_lattice(store, &q_data, ch)?;
        for x in rel.basis_elements(&q_data) {
            rows.push(inflate(store, data, &qm, &x)?.coeffs().to_vec());
        }
    }
    if rows.is_empty() {
        return Ok(IntMatrix::zeros(0, n));
    }
    lattice_sum(&[&IntMatrix::from_rows(rows)], n)
}

/// The imprimitive sublattice: the sum of induced and inflated relations.
pub fn imprimitive_lattice(
    store: &GroupStore,
    data: &GroupData,
    ch: Characteristic,
) -> Result<IntMatrix> {
    let induced = induced_relations(store, data, ch)?;
    let inflated = inflated_relations(store, data, ch)?;
    lattice_sum(&[&induced, &inflated], data.class_count())
}

/// Predicts the primitive quotient from the class predicates of the proper
/// quotients.
pub fn predict_prim(
    store: &GroupStore,
    data: &GroupData,
    ch: Characteristic,
) -> Result<PredictedPrim> {
    let order = data.group().order();
    // applicability of the classification to G itself
    match ch {
        Characteristic::Zero => {
            if is_cyclic(data) {
                return Ok(PredictedPrim::NotApplicable("group is cyclic".into()));
            }
            for q in prime_divisors(order) {
                if is_q_quasi_elementary(data, q)? {
                    return Ok(PredictedPrim::NotApplicable(format!(
                        "group is {q}-quasi-elementary"
                    )));
                }
            }
        }
        Characteristic::Prime(p) => {
            if is_p_hypo_elementary(store, data, p)? {
                return Ok(PredictedPrim::NotApplicable(format!(
                    "group is {p}-hypo-elementary"
                )));
            }
            for q in prime_divisors(order) {
                if is_pq_dress(store, data, p, q)? {
                    return Ok(PredictedPrim::NotApplicable(format!(
                        "group is a ({p},{q})-Dress group"
                    )));
                }
            }
        }
    }

    // case analysis over all proper quotients G/N, N nontrivial normal
    let lattice = data.lattice();
    let mut exceptional_q: Option<u64> = None;
    let mut saw_exceptional = false;
    for class in lattice.normal_classes() {
        if lattice.classes[class].order() == 1 {
            continue;
        }
        let normal = lattice.classes[class].representative.clone();
        let (_, q_data) = store.quotient(data, &normal)?;
        let plain = match ch {
            Characteristic::Zero => is_cyclic(&q_data),
            Characteristic::Prime(p) => is_p_hypo_elementary(store, &q_data, p)?,
        };
        if plain {
            continue;
        }
        saw_exceptional = true;
        // the quotient is not plain; find its unique prime, if any
        let mut found = None;
        for q in prime_divisors(q_data.group().order()) {
            let holds = match ch {
                Characteristic::Zero => is_q_quasi_elementary(&q_data, q)?,
                Characteristic::Prime(p) => is_pq_dress(store, &q_data, p, q)?,
            };
            if holds {
                found = Some(q);
                break;
            }
        }
        match (found, exceptional_q) {
            (None, _) => return Ok(PredictedPrim::Trivial),
            (Some(q), None) => exceptional_q = Some(q),
            (Some(q), Some(previous)) if q != previous => return Ok(PredictedPrim::Trivial),
            _ => {}
        }
    }
    match (saw_exceptional, exceptional_q) {
        (false, _) => Ok(PredictedPrim::FreeZ),
        (true, Some(q)) => Ok(PredictedPrim::Torsion(q)),
        (true, None) => unreachable!("exceptional quotient without a prime returns early"),
    }
}

/// Extracts an integer combination of the basis rows whose last coordinate
/// is 1, when the top ideal is all of Z.
fn certificate_from_basis(basis: &IntMatrix) -> Option<Vec<BigInt>> {
    let n = basis.cols();
    if n == 0 || basis.rows() == 0 {
        return None;
    }
    let mut g = BigInt::zero();
    let mut combo = vec![BigInt::zero(); n];
    for i in 0..basis.rows() {
        let top = &basis[(i, n - 1)];
        if top.is_zero() {
            continue;
        }
        let ext = g.extended_gcd(top);
        for j in 0..n {
            let v = &ext.x * &combo[j] + &ext.y * &basis[(i, j)];
            combo[j] = v;
        }
        g = ext.gcd;
        if g.is_one() {
            break;
        }
    }
    if !g.is_one() {
        return None;
    }
    if combo[n - 1].is_negative() {
        for c in combo.iter_mut() {
            *c = -std::mem::take(c);
        }
    }
    debug_assert!(combo[n - 1].is_one());
    Some(combo)
}

/// Computes the primitive quotient invariants, the generator certificate and
/// the prediction, and checks that they match.
pub fn prim_invariants(
    store: &GroupStore,
    data: &GroupData,
    ch: Characteristic,
) -> Result<PrimReport> {
    let rel = relation_lattice(store, data, ch)?;
    let imprim = imprimitive_lattice(store, data, ch)?;
    let invariants = quotient_invariants(&rel.basis, &imprim)?;

    let generator_certificate = if rel.top_ideal.is_one() {
        certificate_from_basis(&rel.basis)
            .map(|coeffs| BurnsideElement::from_coeffs(data, coeffs))
    } else {
        None
    };
    if let Some(cert) = &generator_certificate {
        debug_assert!(verify_relation(store, data, ch, cert)?);
    }
    let certificate_generates = match &generator_certificate {
        Some(cert) => {
            let single = IntMatrix::from_rows(vec![cert.coeffs().to_vec()]);
            let extended = lattice_sum(&[&imprim, &single], data.class_count())?;
            Some(extended == rel.basis)
        }
        None => None,
    };

    let predicted = predict_prim(store, data, ch)?;
    let structure_matches = match &predicted {
        PredictedPrim::FreeZ => invariants.free_rank == 1 && invariants.torsion.is_empty(),
        PredictedPrim::Torsion(q) => {
            invariants.free_rank == 0 && invariants.torsion == vec![BigInt::from(*q)]
        }
        PredictedPrim::Trivial => invariants.is_trivial(),
        PredictedPrim::NotApplicable(_) => true,
    };
    let agree = if predicted.is_applicable() {
        // an applicable group is never primordial, so the certificate must
        // exist and generate the quotient
        structure_matches && certificate_generates == Some(true)
    } else {
        structure_matches
    };

    Ok(PrimReport {
        group: data.key(),
        characteristic: ch,
        k_rank: rel.rank(),
        imprim_rank: imprim.rows(),
        free_rank: invariants.free_rank,
        torsion: invariants.torsion,
        generator_certificate,
        predicted,
        certificate_generates,
        agree,
    })
}

/// Runs the prediction and the computation and reports agreement; the
/// `agree` flag also requires the generator certificate to generate whenever
/// the classification applies.
pub fn verify_classification(
    store: &GroupStore,
    data: &GroupData,
    ch: Characteristic,
) -> Result<PrimReport> {
    prim_invariants(store, data, ch)
}

/// Property check: any lattice member with top coefficient 1 generates the
/// primitive quotient. Draws `count` random such members and checks each.
pub fn random_certificates_generate(
    store: &GroupStore,
    data: &GroupData,
    ch: Characteristic,
    count: usize,
    rng: &mut impl Rng,
) -> Result<bool> {
    let rel = relation_lattice(store, data, ch)?;
    if !rel.top_ideal.is_one() {
        return Ok(true);
    }
    let Some(cert) = certificate_from_basis(&rel.basis) else {
        return Ok(false);
    };
    let imprim = imprimitive_lattice(store, data, ch)?;
    let n = data.class_count();
    for _ in 0..count {
        // cert * (1 - top(z)) + z has top coefficient exactly 1
        let mut z = vec![BigInt::zero(); n];
        for i in 0..rel.basis.rows() {
            let c = BigInt::from(rng.gen_range(-3i64..=3));
            for j in 0..n {
                let v = &c * &rel.basis[(i, j)];
                z[j] += v;
            }
        }
        let scale = BigInt::one() - &z[n - 1];
        let member: Vec<BigInt> = cert
            .iter()
            .zip(&z)
            .map(|(c, zj)| c * &scale + zj)
            .collect();
        debug_assert!(member[n - 1].is_one());
        let single = IntMatrix::from_rows(vec![member]);
        let extended = lattice_sum(&[&imprim, &single], n)?;
        if extended != rel.basis {
            return Ok(false);
        }
    }
    Ok(true)
}
