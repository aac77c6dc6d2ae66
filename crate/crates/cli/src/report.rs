//! JSON-facing report structs and the human renderings.
//!
//! Arbitrary-precision integers (coefficients, matrix entries, ideals,
//! torsion factors) are serialised as decimal strings so no consumer ever
//! rounds them; small structural numbers (orders, ranks, indices) stay
//! plain JSON numbers.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use brauerkit::classes::ClassReport;
use brauerkit::prim::{PredictedPrim, PrimReport};
use brauerkit::relations::{RelationLattice, TrichotomyReport};
use brauerkit::store::GroupData;
use brauerkit::BurnsideElement;

/// Stable display names for the subgroup classes of a group: `1` for the
/// trivial class, `G` for the whole group, `C<order>` for cyclic classes and
/// `H<order>` otherwise, with `a`, `b`, … appended when several classes
/// share a name.
pub fn class_names(data: &GroupData) -> Vec<String> {
    let lattice = data.lattice();
    let base: Vec<String> = lattice
        .classes
        .iter()
        .enumerate()
        .map(|(i, c)| {
            if c.order() == 1 {
                "1".to_string()
            } else if i == lattice.full_class() {
                "G".to_string()
            } else if c.representative.is_cyclic(data.group()) {
                format!("C{}", c.order())
            } else {
                format!("H{}", c.order())
            }
        })
        .collect();
    let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
    for name in &base {
        *counts.entry(name).or_default() += 1;
    }
    let mut seen: BTreeMap<String, usize> = BTreeMap::new();
    base.iter()
        .map(|name| {
            if counts[name.as_str()] == 1 {
                name.clone()
            } else {
                let n = seen.entry(name.clone()).or_default();
                let suffix = (b'a' + *n as u8) as char;
                *n += 1;
                format!("{name}{suffix}")
            }
        })
        .collect()
}

/// Renders `Σ a_H [G/H]` with the given class names.
pub fn pretty_element(coeffs: &[BigInt], names: &[String]) -> String {
    use num_traits::{One, Signed, Zero};
    let mut out = String::new();
    for (j, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let magnitude = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        if !magnitude.is_one() {
            out.push_str(&format!("{magnitude} "));
        }
        out.push_str(&format!("[G/{}]", names[j]));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn bigints_to_strings(values: &[BigInt]) -> Vec<String> {
    values.iter().map(|v| v.to_string()).collect()
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ClassifyOut {
    pub group: String,
    pub order: usize,
    pub primes: Vec<u64>,
    pub is_cyclic: bool,
    pub quasi_elementary_primes: Vec<u64>,
    pub hypo_elementary_primes: Vec<u64>,
    /// For each queried p (as a string key), the q with (p,q)-Dress.
    pub dress_pairs: BTreeMap<String, Vec<u64>>,
}

impl ClassifyOut {
    pub fn new(group: String, primes: Vec<u64>, report: &ClassReport) -> ClassifyOut {
        ClassifyOut {
            group,
            order: report.order,
            primes,
            is_cyclic: report.is_cyclic,
            quasi_elementary_primes: report.quasi_elementary_primes.clone(),
            hypo_elementary_primes: report.hypo_elementary_primes.clone(),
            dress_pairs: report
                .dress_pairs
                .iter()
                .map(|(p, qs)| (p.to_string(), qs.clone()))
                .collect(),
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct SubgroupClassOut {
    pub index: usize,
    pub name: String,
    pub order: usize,
    pub size: usize,
    pub normal: bool,
    pub normalizer_order: usize,
    /// Element indices of the canonical representative.
    pub representative: Vec<usize>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct SubgroupsOut {
    pub group: String,
    pub order: usize,
    pub subgroup_count: usize,
    pub classes: Vec<SubgroupClassOut>,
}

impl SubgroupsOut {
    pub fn new(group: String, data: &GroupData) -> SubgroupsOut {
        let names = class_names(data);
        let classes = data
            .lattice()
            .classes
            .iter()
            .enumerate()
            .map(|(index, c)| SubgroupClassOut {
                index,
                name: names[index].clone(),
                order: c.order(),
                size: c.members.len(),
                normal: c.normal,
                normalizer_order: c.normalizer_order,
                representative: c.representative.members(),
            })
            .collect();
        SubgroupsOut {
            group,
            order: data.group().order(),
            subgroup_count: data.lattice().subgroup_count(),
            classes,
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct MarksOut {
    pub group: String,
    pub classes: Vec<String>,
    /// Row-major, decimal strings.
    pub matrix: Vec<Vec<String>>,
}

impl MarksOut {
    pub fn new(group: String, data: &GroupData) -> MarksOut {
        let names = class_names(data);
        let marks = data.marks();
        MarksOut {
            group,
            classes: names,
            matrix: (0..marks.rows())
                .map(|i| bigints_to_strings(marks.row(i)))
                .collect(),
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct RelationsOut {
    pub group: String,
    pub characteristic: u64,
    pub classes: Vec<String>,
    pub detecting: Vec<usize>,
    pub rank: usize,
    /// Basis rows over subgroup classes, decimal strings.
    pub basis: Vec<Vec<String>>,
    pub pretty: Vec<String>,
    pub top_ideal: String,
}

impl RelationsOut {
    pub fn new(group: String, data: &GroupData, rel: &RelationLattice) -> RelationsOut {
        let names = class_names(data);
        RelationsOut {
            group,
            characteristic: rel.characteristic.as_u64(),
            detecting: rel.detecting.clone(),
            rank: rel.rank(),
            basis: (0..rel.basis.rows())
                .map(|i| bigints_to_strings(rel.basis.row(i)))
                .collect(),
            pretty: (0..rel.basis.rows())
                .map(|i| pretty_element(rel.basis.row(i), &names))
                .collect(),
            top_ideal: rel.top_ideal.to_string(),
            classes: names,
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct PredictedOut {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl PredictedOut {
    pub fn new(predicted: &PredictedPrim) -> PredictedOut {
        match predicted {
            PredictedPrim::FreeZ => PredictedOut {
                kind: "Z".into(),
                q: None,
                reason: None,
            },
            PredictedPrim::Torsion(q) => PredictedOut {
                kind: "Z/q".into(),
                q: Some(*q),
                reason: None,
            },
            PredictedPrim::Trivial => PredictedOut {
                kind: "trivial".into(),
                q: None,
                reason: None,
            },
            PredictedPrim::NotApplicable(reason) => PredictedOut {
                kind: "not_applicable".into(),
                q: None,
                reason: Some(reason.clone()),
            },
        }
    }
}

/// Human name for the computed quotient structure.
pub fn structure_string(free_rank: usize, torsion: &[BigInt]) -> String {
    let mut parts: Vec<String> = Vec::new();
    if free_rank == 1 {
        parts.push("Z".into());
    } else if free_rank > 1 {
        parts.push(format!("Z^{free_rank}"));
    }
    for t in torsion {
        parts.push(format!("Z/{t}"));
    }
    if parts.is_empty() {
        "trivial".into()
    } else {
        parts.join(" x ")
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct PrimOut {
    pub group: String,
    pub characteristic: u64,
    pub k_rank: usize,
    pub imprim_rank: usize,
    pub free_rank: usize,
    pub torsion: Vec<String>,
    pub structure: String,
    pub predicted: PredictedOut,
    pub agree: bool,
    /// Coefficient vector of a generating relation with top coefficient 1.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generator_certificate: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generator_pretty: Option<String>,
}

impl PrimOut {
    pub fn new(group: String, data: &GroupData, report: &PrimReport) -> PrimOut {
        let names = class_names(data);
        let cert = report.generator_certificate.as_ref().map(BurnsideElement::coeffs);
        PrimOut {
            group,
            characteristic: report.characteristic.as_u64(),
            k_rank: report.k_rank,
            imprim_rank: report.imprim_rank,
            free_rank: report.free_rank,
            torsion: bigints_to_strings(&report.torsion),
            structure: structure_string(report.free_rank, &report.torsion),
            predicted: PredictedOut::new(&report.predicted),
            agree: report.agree,
            generator_certificate: cert.map(bigints_to_strings),
            generator_pretty: cert.map(|c| pretty_element(c, &names)),
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct TrichotomyOut {
    pub predicted: u64,
    pub computed: String,
    pub agree: bool,
}

impl TrichotomyOut {
    pub fn new(report: &TrichotomyReport) -> TrichotomyOut {
        TrichotomyOut {
            predicted: report.predicted,
            computed: report.computed.to_string(),
            agree: report.agree,
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct VerifyOut {
    pub group: String,
    pub characteristic: u64,
    pub trichotomy: TrichotomyOut,
    pub classification: PrimOut,
    pub agree: bool,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct AxiomReportOut {
    pub axiom: String,
    pub instances: usize,
    pub failures: Vec<String>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct AxiomsOut {
    pub groups: Vec<String>,
    pub samples_per_group: usize,
    pub seed: u64,
    pub reports: Vec<AxiomReportOut>,
    pub all_passed: bool,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct SweepEntryOut {
    pub group: String,
    pub order: usize,
    pub trichotomy: TrichotomyOut,
    pub predicted: PredictedOut,
    pub structure: String,
    pub classification_agree: bool,
    pub agree: bool,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct SweepOut {
    pub characteristic: u64,
    pub entries: Vec<SweepEntryOut>,
    pub all_agree: bool,
}
