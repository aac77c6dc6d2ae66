//! Content-addressed disk cache for subgroup lattices and tables of marks.
//!
//! Keys are hashes of the canonical element list, so a cache entry is valid
//! for any group with the same elements, however it was constructed. Entries
//! carry a format version and are silently recomputed on mismatch.

use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::group::{FiniteGroup, GroupKey};
use crate::linalg::IntMatrix;
use crate::subgroup::{Subgroup, SubgroupClass, SubgroupLattice};

pub const CACHE_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct CachedClass {
    members: Vec<Vec<u32>>,
    normalizer_order: usize,
    normal: bool,
}

#[derive(Serialize, Deserialize)]
struct CachedGroup {
    version: u32,
    order: usize,
    classes: Vec<CachedClass>,
    subconjugacy: Vec<Vec<bool>>,
    /// Mark matrix entries as decimal strings, row-major by class.
    marks: Vec<Vec<String>>,
}

#[derive(Debug)]
pub struct DiskCache {
    dir: PathBuf,
}

impl DiskCache {
    pub fn new(dir: impl Into<PathBuf>) -> DiskCache {
        DiskCache { dir: dir.into() }
    }

    fn path(&self, key: &GroupKey) -> PathBuf {
        self.dir.join(format!("{}.json", key.hex()))
    }

    pub fn load(&self, group: &FiniteGroup) -> Option<(SubgroupLattice, IntMatrix)> {
        let text = fs::read_to_string(self.path(&group.key())).ok()?;
        let cached: CachedGroup = serde_json::from_str(&text).ok()?;
        if cached.version != CACHE_VERSION || cached.order != group.order() {
            return None;
        }
        rebuild(group, cached)
    }

    /// Best-effort write; the computation stands on its own if this fails.
    pub fn save(&self, group: &FiniteGroup, lattice: &SubgroupLattice, marks: &IntMatrix) {
        let cached = CachedGroup {
            version: CACHE_VERSION,
            order: group.order(),
            classes: lattice
                .classes
                .iter()
                .map(|c| CachedClass {
                    members: c
                        .members
                        .iter()
                        .map(|m| m.iter().map(|i| i as u32).collect())
                        .collect(),
                    normalizer_order: c.normalizer_order,
                    normal: c.normal,
                })
                .collect(),
            subconjugacy: lattice.subconjugacy.clone(),
            marks: (0..marks.rows())
                .map(|i| marks.row(i).iter().map(|x| x.to_string()).collect())
                .collect(),
        };
        let Ok(text) = serde_json::to_string(&cached) else {
            return;
        };
        if fs::create_dir_all(&self.dir).is_err() {
            return;
        }
        let path = self.path(&group.key());
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        if fs::write(&tmp, text).is_ok() {
            let _ = fs::rename(&tmp, &path);
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }
}

fn rebuild(group: &FiniteGroup, cached: CachedGroup) -> Option<(SubgroupLattice, IntMatrix)> {
    let n = group.order();
    let mut classes = Vec::with_capacity(cached.classes.len());
    for c in cached.classes {
        let members: Vec<Subgroup> = c
            .members
            .iter()
            .map(|m| Subgroup::from_indices(n, m.iter().map(|&i| i as usize)))
            .collect();
        let representative = members.first()?.clone();
        classes.push(SubgroupClass {
            representative,
            members,
            normalizer_order: c.normalizer_order,
            normal: c.normal,
        });
    }
    let lattice = SubgroupLattice::from_parts(classes, cached.subconjugacy)?;
    let k = lattice.class_count();
    if cached.marks.len() != k || cached.marks.iter().any(|r| r.len() != k) {
        return None;
    }
    let rows: Vec<Vec<BigInt>> = cached
        .marks
        .iter()
        .map(|r| r.iter().map(|s| BigInt::from_str(s)).collect::<Result<_, _>>())
        .collect::<Result<_, _>>()
        .ok()?;
    Some((lattice, IntMatrix::from_rows(rows)))
}
