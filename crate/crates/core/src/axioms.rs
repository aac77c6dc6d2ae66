//! Executable checks for the functor axioms on the Burnside instance:
//! transitivity of induction and of restriction/inflation, triviality of
//! inner automorphisms, the automorphism duality, the double-coset formula,
//! commutativity of induction with inflation, and Frobenius reciprocity.
//!
//! The axioms hold for the Burnside functor, so any recorded failure is a
//! bug certificate against the element operations, not against the inputs.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

use num_bigint::BigInt;

use crate::burnside::{
    conjugate_transport, induce, inflate, multiply, restrict, BurnsideElement, GroupIso,
};
use crate::error::Result;
use crate::group::FiniteGroup;
use crate::quotient::QuotientMap;
use crate::store::{GroupData, GroupStore};
use crate::subgroup::Subgroup;

/// Result of exercising one axiom over many sampled instances.
#[derive(Clone, Debug)]
pub struct AxiomReport {
    pub axiom: &'static str,
    pub instances: usize,
    pub failures: Vec<String>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Transitivity of induction along `U ≤ H ≤ G`.
pub fn check_ind_transitivity(
    store: &GroupStore,
    data: &GroupData,
    h: &Subgroup,
    u: &Subgroup,
    x: &BurnsideElement,
) -> Result<bool> {
    let h_data = store.subgroup_data(data, h)?;
    let u_in_h = u.relative_to(h).expect("U must be contained in H");
    let inner = induce(store, &h_data, &u_in_h, x)?;
    let left = induce(store, data, h, &inner)?;
    let right = induce(store, data, u, x)?;
    Ok(left == right)
}

/// Transitivity of restriction along `U ≤ H ≤ G`.
pub fn check_res_transitivity(
    store: &GroupStore,
    data: &GroupData,
    h: &Subgroup,
    u: &Subgroup,
    x: &BurnsideElement,
) -> Result<bool> {
    let h_data = store.subgroup_data(data, h)?;
    let u_in_h = u.relative_to(h).expect("U must be contained in H");
    let step = restrict(store, data, h, x)?;
    let left = restrict(store, &h_data, &u_in_h, &step)?;
    let right = restrict(store, data, u, x)?;
    Ok(left == right)
}

/// Transitivity of inflation along `G → G/N1 → (G/N1)/N̄2`, compared with
/// the direct quotient by the preimage of `N̄2`.
pub fn check_inf_transitivity(
    store: &GroupStore,
    data: &GroupData,
    qm1: &QuotientMap,
    nbar2: &Subgroup,
    x: &BurnsideElement,
) -> Result<bool> {
    let t1_data = store.data(&qm1.target)?;
    let (qm2, t2a_data) = store.quotient(&t1_data, nbar2)?;

    let composite: Vec<usize> = (0..data.group().order())
        .map(|g| qm2.element_map[qm1.element_map[g]])
        .collect();
    let n2 = Subgroup::from_indices(
        data.group().order(),
        (0..data.group().order()).filter(|&g| nbar2.contains(qm1.element_map[g])),
    );
    let (qm_direct, t2b_data) = store.quotient(data, &n2)?;

    let iso = GroupIso::from_surjections(&t2a_data, &composite, &t2b_data, &qm_direct.element_map)?;
    let x_direct = iso.transport(&t2a_data, &t2b_data, x)?;

    let left = inflate(store, data, qm1, &inflate(store, &t1_data, &qm2, x)?)?;
    let right = inflate(store, data, &qm_direct, &x_direct)?;
    Ok(left == right)
}

/// Inner automorphisms act trivially: conjugating a subgroup stays in its
/// class, and induction is unchanged by conjugation of the source.
pub fn check_inner_conjugation(
    store: &GroupStore,
    data: &GroupData,
    h: &Subgroup,
    g: usize,
    x: &BurnsideElement,
) -> Result<bool> {
    let (image, moved) = conjugate_transport(store, data, h, g, x)?;
    if data.lattice().class_of(&image) != data.lattice().class_of(h) {
        return Ok(false);
    }
    let via_image = induce(store, data, &image, &moved)?;
    let direct = induce(store, data, h, x)?;
    Ok(via_image == direct)
}

/// Conjugation as induction equals inverse conjugation as restriction:
/// transporting `Res_H y` by `g` gives `Res_{gHg^{-1}} y`.
pub fn check_conjugation_duality(
    store: &GroupStore,
    data: &GroupData,
    h: &Subgroup,
    g: usize,
    y: &BurnsideElement,
) -> Result<bool> {
    let res_h = restrict(store, data, h, y)?;
    let (image, moved) = conjugate_transport(store, data, h, g, &res_h)?;
    let res_image = restrict(store, data, &image, y)?;
    Ok(moved == res_image)
}

/// The double-coset formula:
/// `Res_K Ind_H x = Σ_{KgH} Ind_{K ∩ gHg^{-1}} c_g Res_{H ∩ g^{-1}Kg} x`.
pub fn check_mackey(
    store: &GroupStore,
    data: &GroupData,
    h: &Subgroup,
    k: &Subgroup,
    x: &BurnsideElement,
) -> Result<bool> {
    let (lhs, rhs_terms) = mackey_sides(store, data, h, k, x)?;
    let k_data = store.subgroup_data(data, k)?;
    let mut rhs = BurnsideElement::zero(&k_data);
    for term in &rhs_terms {
        rhs = &rhs + term;
    }
    Ok(lhs == rhs)
}

/// Both sides of the double-coset formula, the right side term by term.
/// Exposed so tests can corrupt a term and watch the check fail.
pub fn mackey_sides(
    store: &GroupStore,
    data: &GroupData,
    h: &Subgroup,
    k: &Subgroup,
    x: &BurnsideElement,
) -> Result<(BurnsideElement, Vec<BurnsideElement>)> {
    let group = data.group();
    let h_data = store.subgroup_data(data, h)?;
    let k_data = store.subgroup_data(data, k)?;

    let lhs = restrict(store, data, k, &induce(store, data, h, x)?)?;

    let mut terms = Vec::new();
    for g in crate::subgroup::double_cosets(group, k, h) {
        let h_conj = h.conjugate(group, g);
        let meet_in_k = k.intersect(&h_conj);
        let k_conj = k.conjugate(group, group.inv(g));
        let meet_in_h = h.intersect(&k_conj);

        let res = restrict(store, &h_data, &meet_in_h.relative_to(h).unwrap(), x)?;
        let (image, moved) = conjugate_transport(store, data, &meet_in_h, g, &res)?;
        debug_assert_eq!(image.members(), meet_in_k.members());
        let term = induce(store, &k_data, &meet_in_k.relative_to(k).unwrap(), &moved)?;
        terms.push(term);
    }
    Ok((lhs, terms))
}

/// Frobenius reciprocity: `Ind(x) · y = Ind(x · Res y)`.
pub fn check_frobenius(
    store: &GroupStore,
    data: &GroupData,
    h: &Subgroup,
    x: &BurnsideElement,
    y: &BurnsideElement,
) -> Result<bool> {
    let h_data = store.subgroup_data(data, h)?;
    let left = multiply(data, &induce(store, data, h, x)?, y)?;
    let res = restrict(store, data, h, y)?;
    let right = induce(store, data, h, &multiply(&h_data, x, &res)?)?;
    Ok(left == right)
}

/// Commutativity of induction and inflation around the cartesian square on
/// `H̄ = HN/N`: its full preimage `HN` maps onto it with kernel `N`, and
/// `Inf_{G/N} ∘ Ind_{Ḡ/H̄} = Ind_{G/HN} ∘ Inf_{HN/N}` as maps `B(H̄) → B(G)`.
///
/// The preimage is forced: both legs applied to `[H̄/H̄]` have degree
/// `[G : HN]`, so a square whose top-left group is a proper `H ⊊ HN` cannot
/// satisfy the identity in the Burnside ring. Any `h` is accepted here and
/// completed to `HN`.
pub fn check_inf_ind_commute(
    store: &GroupStore,
    data: &GroupData,
    normal: &Subgroup,
    h: &Subgroup,
    xbar: &BurnsideElement,
) -> Result<bool> {
    let group = data.group();
    let (qm, qbar_data) = store.quotient(data, normal)?;

    // H̄ = image of H; its preimage is HN
    let hbar = Subgroup::from_indices(
        qbar_data.group().order(),
        h.iter().map(|g| qm.element_map[g]),
    );
    let hbar_data = store.subgroup_data(&qbar_data, &hbar)?;
    let preimage = Subgroup::from_indices(
        group.order(),
        (0..group.order()).filter(|&g| hbar.contains(qm.element_map[g])),
    );
    debug_assert!(normal.is_subset(&preimage));

    // left leg: induce to Ḡ, then inflate to G
    let left = inflate(store, data, &qm, &induce(store, &qbar_data, &hbar, xbar)?)?;

    // right leg: transport to HN/N, inflate to HN, induce to G
    let pre_data = store.subgroup_data(data, &preimage)?;
    let qm_pre = crate::quotient::quotient_group(
        pre_data.group(),
        &normal.relative_to(&preimage).unwrap(),
    )?;
    let t1_data = store.data(&qm_pre.target)?;

    let hbar_pos: std::collections::HashMap<usize, usize> = hbar
        .iter()
        .enumerate()
        .map(|(pos, g)| (g, pos))
        .collect();
    let pre_members = preimage.members();
    let onto_hbar: Vec<usize> = (0..pre_data.group().order())
        .map(|i| hbar_pos[&qm.element_map[pre_members[i]]])
        .collect();

    let iso = GroupIso::from_surjections(&hbar_data, &onto_hbar, &t1_data, &qm_pre.element_map)?;
    let x_t1 = iso.transport(&hbar_data, &t1_data, xbar)?;
    let right = induce(store, data, &preimage, &inflate(store, &pre_data, &qm_pre, &x_t1)?)?;

    Ok(left == right)
}

/// Axiom identifiers in report order.
pub const AXIOMS: [&str; 7] = ["MFI1", "MFI2", "MFI3", "MFI4", "MFI5", "MFI6", "GFI3"];

/// Runs every axiom `samples_per_group` times per catalog group with
/// deterministic seeded sampling of subgroup and quotient configurations and
/// sparse random elements (coefficients in [-3, 3], at most four nonzero).
pub fn run_axiom_suite(
    store: &GroupStore,
    catalog: &[FiniteGroup],
    samples_per_group: usize,
    seed: u64,
) -> Result<Vec<AxiomReport>> {
    let mut reports: Vec<AxiomReport> = AXIOMS
        .iter()
        .map(|&axiom| AxiomReport {
            axiom,
            instances: 0,
            failures: Vec::new(),
        })
        .collect();

    for (group_index, group) in catalog.iter().enumerate() {
        let data = store.data(group)?;
        let mut rng =
            ChaCha8Rng::seed_from_u64(seed ^ (group_index as u64).wrapping_mul(0x9E3779B97F4A7C15));
        for _ in 0..samples_per_group {
            run_single_round(store, &data, &mut rng, &mut reports)?;
        }
    }
    Ok(reports)
}

fn random_element(data: &GroupData, rng: &mut impl Rng) -> BurnsideElement {
    let k = data.class_count();
    let mut coeffs = vec![BigInt::from(0); k];
    let nonzero = rng.gen_range(1..=4.min(k));
    for _ in 0..nonzero {
        let idx = rng.gen_range(0..k);
        let mut c = 0;
        while c == 0 {
            c = rng.gen_range(-3i64..=3);
        }
        coeffs[idx] = BigInt::from(c);
    }
    BurnsideElement::from_coeffs(data, coeffs)
}

fn random_class(data: &GroupData, rng: &mut impl Rng) -> usize {
    rng.gen_range(0..data.class_count())
}

/// A random subgroup of H (given inside G), as a subgroup of G.
fn random_subgroup_of(
    store: &GroupStore,
    data: &GroupData,
    h: &Subgroup,
    rng: &mut impl Rng,
) -> Result<Subgroup> {
    let h_data = store.subgroup_data(data, h)?;
    let class = rng.gen_range(0..h_data.class_count());
    let members = h.members();
    let rep = &h_data.lattice().classes[class].representative;
    Ok(Subgroup::from_indices(
        data.group().order(),
        rep.iter().map(|i| members[i]),
    ))
}

fn record(report: &mut AxiomReport, ok: bool, describe: impl Fn() -> String) {
    report.instances += 1;
    if !ok {
        report.failures.push(describe());
    }
}

fn run_single_round(
    store: &GroupStore,
    data: &GroupData,
    rng: &mut impl Rng,
    reports: &mut [AxiomReport],
) -> Result<()> {
    let lattice = data.lattice();
    let order = data.group().order();
    let ctx = format!("group of order {} ({:?})", order, data.key());

    // MFI1: chain U ≤ H ≤ G with x on U
    let h = lattice.classes[random_class(data, rng)].representative.clone();
    let u = random_subgroup_of(store, data, &h, rng)?;
    let u_data = store.subgroup_data(data, &u)?;
    let x = random_element(&u_data, rng);
    let ok = check_ind_transitivity(store, data, &h, &u, &x)?;
    record(&mut reports[0], ok, || format!("induction transitivity on {ctx}"));

    // MFI2: restriction transitivity, and inflation transitivity on
    // alternating rounds when a proper normal subgroup exists
    let x = random_element(data, rng);
    let ok = check_res_transitivity(store, data, &h, &u, &x)?;
    record(&mut reports[1], ok, || format!("restriction transitivity on {ctx}"));
    let normals = lattice.normal_classes();
    let n1_class = normals[rng.gen_range(0..normals.len())];
    {
        let n1 = lattice.classes[n1_class].representative.clone();
        let (qm1, t1_data) = store.quotient(data, &n1)?;
        let t1_normals = t1_data.lattice().normal_classes();
        let pick = t1_normals[rng.gen_range(0..t1_normals.len())];
        let nbar2 = t1_data.lattice().classes[pick].representative.clone();
        let (_, t2a_data) = store.quotient(&t1_data, &nbar2)?;
        let xbar = random_element(&t2a_data, rng);
        let ok = check_inf_transitivity(store, data, &qm1, &nbar2, &xbar)?;
        record(&mut reports[1], ok, || format!("inflation transitivity on {ctx}"));
    }

    // MFI3: inner automorphisms act trivially
    let g = rng.gen_range(0..order);
    let h_data = store.subgroup_data(data, &h)?;
    let xh = random_element(&h_data, rng);
    let ok = check_inner_conjugation(store, data, &h, g, &xh)?;
    record(&mut reports[2], ok, || format!("inner conjugation on {ctx}"));

    // MFI4: conjugation-as-induction equals inverse-conjugation-as-restriction
    let y = random_element(data, rng);
    let ok = check_conjugation_duality(store, data, &h, g, &y)?;
    record(&mut reports[3], ok, || format!("conjugation duality on {ctx}"));

    // MFI5: Mackey formula with a second random subgroup
    let k = lattice.classes[random_class(data, rng)].representative.clone();
    let ok = check_mackey(store, data, &h, &k, &xh)?;
    record(&mut reports[4], ok, || format!("double-coset formula on {ctx}"));

    // MFI6: induction commutes with inflation
    {
        let n = lattice.classes[n1_class].representative.clone();
        let (qm, qbar_data) = store.quotient(data, &n)?;
        let hbar = Subgroup::from_indices(
            qbar_data.group().order(),
            h.iter().map(|i| qm.element_map[i]),
        );
        let hbar_data = store.subgroup_data(&qbar_data, &hbar)?;
        let xbar = random_element(&hbar_data, rng);
        let ok = check_inf_ind_commute(store, data, &n, &h, &xbar)?;
        record(&mut reports[5], ok, || format!("induction-inflation square on {ctx}"));
    }

    // GFI3: Frobenius reciprocity
    let y = random_element(data, rng);
    let ok = check_frobenius(store, data, &h, &xh, &y)?;
    record(&mut reports[6], ok, || format!("Frobenius reciprocity on {ctx}"));

    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::generate_group;
    use crate::perm::Permutation;
    use std::sync::Arc;

    fn gen(degree: usize, cycles: &[&[&[u16]]]) -> FiniteGroup {
        let gens = cycles
            .iter()
            .map(|g| {
                let c: Vec<Vec<u16>> = g.iter().map(|c| c.to_vec()).collect();
                Permutation::from_cycles(degree, &c).unwrap()
            })
            .collect();
        generate_group(degree, gens).unwrap()
    }

    fn s3(store: &GroupStore) -> Arc<GroupData> {
        store.data(&gen(3, &[&[&[0, 1, 2]], &[&[0, 1]]])).unwrap()
    }

    fn a4(store: &GroupStore) -> Arc<GroupData> {
        store.data(&gen(4, &[&[&[0, 1, 2]], &[&[1, 2, 3]]])).unwrap()
    }

    #[test]
    fn mackey_on_s3_with_two_involutions() {
        let store = GroupStore::new();
        let data = s3(&store);
        let c2 = data.lattice().classes[1].representative.clone();
        let c2_data = store.subgroup_data(&data, &c2).unwrap();
        let x = BurnsideElement::one(&c2_data);
        // Res_{C_2} [G/C_2] = [C_2/C_2] + [C_2/1], two double cosets
        let (lhs, terms) = mackey_sides(&store, &data, &c2, &c2, &x).unwrap();
        assert_eq!(terms.len(), 2);
        assert_eq!(lhs, BurnsideElement::from_i64(&c2_data, &[1, 1]));
        assert!(check_mackey(&store, &data, &c2, &c2, &x).unwrap());
    }

    #[test]
    fn mackey_degenerate_cases() {
        let store = GroupStore::new();
        let data = s3(&store);
        let full = Subgroup::full(data.group());
        let c2 = data.lattice().classes[1].representative.clone();
        let c2_data = store.subgroup_data(&data, &c2).unwrap();
        let x2 = BurnsideElement::from_i64(&c2_data, &[2, -1]);
        // H = G reduces to plain restriction
        let xg = BurnsideElement::from_i64(&data, &[1, -2, 3, 0]);
        assert!(check_mackey(&store, &data, &full, &c2, &xg).unwrap());
        // K = G reduces to plain induction
        assert!(check_mackey(&store, &data, &c2, &full, &x2).unwrap());
    }

    #[test]
    fn corrupted_mackey_sum_is_caught() {
        let store = GroupStore::new();
        let data = s3(&store);
        let c2 = data.lattice().classes[1].representative.clone();
        let c2_data = store.subgroup_data(&data, &c2).unwrap();
        let x = BurnsideElement::one(&c2_data);
        let (lhs, terms) = mackey_sides(&store, &data, &c2, &c2, &x).unwrap();
        // dropping one double-coset term must break the identity
        let mut rhs = BurnsideElement::zero(&c2_data);
        for term in &terms[..terms.len() - 1] {
            rhs = &rhs + term;
        }
        assert_ne!(lhs, rhs);
    }

    #[test]
    fn frobenius_special_cases() {
        let store = GroupStore::new();
        let data = s3(&store);
        let c3 = data.lattice().classes[2].representative.clone();
        let c3_data = store.subgroup_data(&data, &c3).unwrap();
        let x = BurnsideElement::from_i64(&c3_data, &[2, 1]);
        // y = [G/G]: both sides are Ind x
        let y = BurnsideElement::one(&data);
        assert!(check_frobenius(&store, &data, &c3, &x, &y).unwrap());
        // x = [H/H]: the projection formula
        let top = BurnsideElement::one(&c3_data);
        let y = BurnsideElement::from_i64(&data, &[1, -1, 0, 2]);
        assert!(check_frobenius(&store, &data, &c3, &top, &y).unwrap());
    }

    #[test]
    fn inf_ind_commute_on_a4() {
        let store = GroupStore::new();
        let data = a4(&store);
        let v4 = data
            .lattice()
            .classes
            .iter()
            .find(|c| c.order() == 4)
            .unwrap()
            .representative
            .clone();
        // H = N = V_4, so H̄ is trivial and x̄ = [1/1]
        let (qm, qbar) = store.quotient(&data, &v4).unwrap();
        let hbar = Subgroup::from_indices(
            qbar.group().order(),
            v4.iter().map(|g| qm.element_map[g]),
        );
        assert_eq!(hbar.order(), 1);
        let hbar_data = store.subgroup_data(&qbar, &hbar).unwrap();
        let xbar = BurnsideElement::one(&hbar_data);
        assert!(check_inf_ind_commute(&store, &data, &v4, &v4, &xbar).unwrap());
        // and both legs equal [A_4/V_4]
        let left = inflate(
            &store,
            &data,
            &qm,
            &induce(&store, &qbar, &hbar, &xbar).unwrap(),
        )
        .unwrap();
        assert_eq!(left, BurnsideElement::from_i64(&data, &[0, 0, 0, 1, 0]));
    }

    #[test]
    fn suite_passes_on_small_catalog() {
        let store = GroupStore::new();
        let catalog = vec![
            gen(3, &[&[&[0, 1, 2]], &[&[0, 1]]]),
            gen(4, &[&[&[0, 1, 2]], &[&[1, 2, 3]]]),
            gen(6, &[&[&[0, 1, 2, 3, 4, 5]]]),
        ];
        let reports = run_axiom_suite(&store, &catalog, 6, 42).unwrap();
        for report in &reports {
            assert!(report.passed(), "{}: {:?}", report.axiom, report.failures);
            assert!(report.instances >= 18);
        }
    }

    #[test]
    fn suite_is_deterministic() {
        let store = GroupStore::new();
        let catalog = vec![gen(3, &[&[&[0, 1, 2]], &[&[0, 1]]])];
        let a = run_axiom_suite(&store, &catalog, 4, 9).unwrap();
        let b = run_axiom_suite(&store, &catalog, 4, 9).unwrap();
        let counts_a: Vec<usize> = a.iter().map(|r| r.instances).collect();
        let counts_b: Vec<usize> = b.iter().map(|r| r.instances).collect();
        assert_eq!(counts_a, counts_b);
    }
}
