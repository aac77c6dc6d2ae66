//! Group-class predicates: cyclic, q-quasi-elementary, p-hypo-elementary,
//! (p,q)-Dress.
//!
//! Every predicate is decided by exhaustive scan over the normal subgroups
//! of the lattice, exactly as defined; "p-power" includes `p^0 = 1`, so the
//! trivial subgroup is a legal normal p-subgroup.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::store::{GroupData, GroupStore};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// The primes dividing `n`, ascending.
pub fn prime_divisors(n: usize) -> Vec<u64> {
    let mut n = n as u64;
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn is_power_of(mut n: usize, p: u64) -> bool {
    while n > 1 {
        if n % p as usize != 0 {
            return false;
        }
        n /= p as usize;
    }
    true
}

/// True iff some element of `G` has order `|G|`.
pub fn is_cyclic(data: &GroupData) -> bool {
    data.group().is_cyclic()
}

/// True iff `G` has a normal cyclic subgroup of q-power index.
pub fn is_q_quasi_elementary(data: &GroupData, q: u64) -> Result<bool> {
    check_prime(q)?;
    let lattice = data.lattice();
    let group = data.group();
    Ok(lattice.normal_classes().into_iter().any(|c| {
        let n = &lattice.classes[c].representative;
        n.is_cyclic(group) && is_power_of(group.order() / n.order(), q)
    }))
}

/// True iff `G` has a normal p-subgroup with cyclic quotient.
pub fn is_p_hypo_elementary(store: &GroupStore, data: &GroupData, p: u64) -> Result<bool> {
    check_prime(p)?;
    let lattice = data.lattice();
    for c in lattice.normal_classes() {
        let n = &lattice.classes[c].representative;
        if !is_power_of(n.order(), p) {
            continue;
        }
        let (_, quotient) = store.quotient(data, n)?;
        if is_cyclic(&quotient) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// True iff `G` has a normal p-subgroup with q-quasi-elementary quotient.
pub fn is_pq_dress(store: &GroupStore, data: &GroupData, p: u64, q: u64) -> Result<bool> {
    check_prime(p)?;
    check_prime(q)?;
    let lattice = data.lattice();
    for c in lattice.normal_classes() {
        let n = &lattice.classes[c].representative;
        if !is_power_of(n.order(), p) {
            continue;
        }
        let (_, quotient) = store.quotient(data, n)?;
        if is_q_quasi_elementary(&quotient, q)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Aggregated class predicates of one group over a set of primes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassReport {
    pub order: usize,
    pub is_cyclic: bool,
    /// Primes q (among those queried) with G q-quasi-elementary.
    pub quasi_elementary_primes: Vec<u64>,
    /// Primes p with G p-hypo-elementary.
    pub hypo_elementary_primes: Vec<u64>,
    /// For each queried p, the queried q making G a (p,q)-Dress group.
    pub dress_pairs: BTreeMap<u64, Vec<u64>>,
}

/// Evaluates every predicate literally over the queried primes. The list
/// must contain all primes dividing the group order.
pub fn classify(
    store: &GroupStore,
    data: &GroupData,
    relevant_primes: &[u64],
) -> Result<ClassReport> {
    assert!(!relevant_primes.is_empty(), "prime list must be nonempty");
    for q in prime_divisors(data.group().order()) {
        assert!(
            relevant_primes.contains(&q),
            "relevant primes must include every prime dividing the order"
        );
    }
    let mut quasi = Vec::new();
    let mut hypo = Vec::new();
    let mut dress = BTreeMap::new();
    for &q in relevant_primes {
        if is_q_quasi_elementary(data, q)? {
            quasi.push(q);
        }
        if is_p_hypo_elementary(store, data, q)? {
            hypo.push(q);
        }
    }
    for &p in relevant_primes {
        let mut qs = Vec::new();
        for &q in relevant_primes {
            if is_pq_dress(store, data, p, q)? {
                qs.push(q);
            }
        }
        dress.insert(p, qs);
    }
    Ok(ClassReport {
        order: data.group().order(),
        is_cyclic: is_cyclic(data),
        quasi_elementary_primes: quasi,
        hypo_elementary_primes: hypo,
        dress_pairs: dress,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::generate_group;
    use crate::perm::Permutation;
    use crate::store::GroupStore;
    use std::sync::Arc;

    fn gen(degree: usize, cycles: &[&[&[u16]]]) -> crate::group::FiniteGroup {
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

    fn c6(store: &GroupStore) -> Arc<GroupData> {
        store
            .data(&gen(6, &[&[&[0, 1, 2, 3, 4, 5]]]))
            .unwrap()
    }

    fn klein(store: &GroupStore) -> Arc<GroupData> {
        store
            .data(&gen(4, &[&[&[0, 1], &[2, 3]], &[&[0, 2], &[1, 3]]]))
            .unwrap()
    }

    fn a5(store: &GroupStore) -> Arc<GroupData> {
        store
            .data(&gen(5, &[&[&[0, 1, 2]], &[&[0, 1, 2, 3, 4]]]))
            .unwrap()
    }

    #[test]
    fn cyclicity() {
        let store = GroupStore::new();
        assert!(is_cyclic(&c6(&store)));
        assert!(!is_cyclic(&s3(&store)));
        assert!(!is_cyclic(&klein(&store)));
    }

    #[test]
    fn quasi_elementary_scan() {
        let store = GroupStore::new();
        let s3 = s3(&store);
        assert!(is_q_quasi_elementary(&s3, 2).unwrap());
        assert!(!is_q_quasi_elementary(&s3, 3).unwrap());
        // cyclic groups are q-quasi-elementary for every q
        let c6 = c6(&store);
        for q in [2, 3, 5, 7] {
            assert!(is_q_quasi_elementary(&c6, q).unwrap());
        }
        assert!(matches!(
            is_q_quasi_elementary(&s3, 4),
            Err(Error::NotPrime(4))
        ));
    }

    #[test]
    fn hypo_elementary_scan() {
        let store = GroupStore::new();
        let a4 = a4(&store);
        assert!(is_p_hypo_elementary(&store, &a4, 2).unwrap());
        assert!(!is_p_hypo_elementary(&store, &a4, 3).unwrap());
        let s3 = s3(&store);
        assert!(!is_p_hypo_elementary(&store, &s3, 2).unwrap());
        assert!(is_p_hypo_elementary(&store, &s3, 3).unwrap());
        let c6 = c6(&store);
        for p in [2, 3, 5] {
            assert!(is_p_hypo_elementary(&store, &c6, p).unwrap());
        }
    }

    #[test]
    fn dress_scan() {
        let store = GroupStore::new();
        let s3 = s3(&store);
        assert!(is_pq_dress(&store, &s3, 2, 2).unwrap());
        // p-hypo-elementary groups are (p,q)-Dress for every q
        for q in [2, 3, 5] {
            assert!(is_pq_dress(&store, &s3, 3, q).unwrap());
        }
        // A_5 is not a (p,q)-Dress group for any p, q
        let a5 = a5(&store);
        for p in [2, 3, 5] {
            for q in [2, 3, 5] {
                assert!(!is_pq_dress(&store, &a5, p, q).unwrap());
            }
        }
    }

    #[test]
    fn classify_reports() {
        let store = GroupStore::new();
        let s3 = classify(&store, &s3(&store), &[2, 3]).unwrap();
        assert!(!s3.is_cyclic);
        assert_eq!(s3.quasi_elementary_primes, vec![2]);
        assert_eq!(s3.hypo_elementary_primes, vec![3]);
        assert_eq!(s3.dress_pairs[&2], vec![2]);
        assert_eq!(s3.dress_pairs[&3], vec![2, 3]);

        let c12 = store.data(&gen(12, &[&[&(0..12u16).collect::<Vec<_>>()[..]]])).unwrap();
        let rep = classify(&store, &c12, &[2, 3, 5]).unwrap();
        assert!(rep.is_cyclic);
        assert_eq!(rep.quasi_elementary_primes, vec![2, 3, 5]);

        let a4 = classify(&store, &a4(&store), &[2, 3]).unwrap();
        assert!(a4.quasi_elementary_primes.is_empty());
        assert_eq!(a4.hypo_elementary_primes, vec![2]);
    }

    #[test]
    fn two_quasi_elementary_primes_forces_cyclic() {
        let store = GroupStore::new();
        for data in [s3(&store), a4(&store), c6(&store), klein(&store), a5(&store)] {
            let primes: Vec<u64> = [2u64, 3, 5]
                .into_iter()
                .chain(prime_divisors(data.group().order()))
                .collect::<std::collections::BTreeSet<_>>()
                .into_iter()
                .collect();
            let report = classify(&store, &data, &primes).unwrap();
            if report.quasi_elementary_primes.len() >= 2 {
                assert!(report.is_cyclic);
            }
            for (&p, qs) in &report.dress_pairs {
                if qs.len() >= 2 {
                    assert!(report.hypo_elementary_primes.contains(&p));
                }
                if report.hypo_elementary_primes.contains(&p) {
                    assert_eq!(qs, &primes);
                }
            }
        }
    }
}
