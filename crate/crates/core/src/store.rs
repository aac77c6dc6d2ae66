//! Shared repository of computed group data.
//!
//! Everything downstream of a `FiniteGroup` — its subgroup lattice and table
//! of marks, and the relation lattices per characteristic — is cached here,
//! keyed by the content hash of the canonical element list. A subgroup
//! repackaged as a standalone group, a quotient target, and a catalog group
//! with the same elements all share one entry. An optional disk cache
//! persists lattices and marks across runs.

use std::collections::HashMap;
use std::path::PathBuf;
use std::sync::{Arc, RwLock};

use crate::burnside::table_of_marks;
use crate::cache::DiskCache;
use crate::error::Result;
use crate::group::{FiniteGroup, GroupKey, DEFAULT_ORDER_CAP};
use crate::linalg::IntMatrix;
use crate::quotient::{quotient_group, QuotientMap};
use crate::relations::{Characteristic, RelationLattice};
use crate::subgroup::{
    all_subgroups_capped, subgroup_group, Subgroup, SubgroupLattice, DEFAULT_LATTICE_CAP,
};

/// A group together with its computed lattice and table of marks.
#[derive(Debug)]
pub struct GroupData {
    group: FiniteGroup,
    lattice: SubgroupLattice,
    marks: IntMatrix,
}

impl GroupData {
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn lattice(&self) -> &SubgroupLattice {
        &self.lattice
    }

    /// The table of marks as a square matrix over subgroup classes.
    pub fn marks(&self) -> &IntMatrix {
        &self.marks
    }

    pub fn key(&self) -> GroupKey {
        self.group.key()
    }

    pub fn class_count(&self) -> usize {
        self.lattice.class_count()
    }
}

#[derive(Debug, Clone)]
pub struct StoreConfig {
    /// Cap on the order of generated groups.
    pub order_cap: usize,
    /// Cap on the number of subgroups enumerated per group.
    pub lattice_cap: usize,
    /// Directory for the persistent lattice/marks cache, if any.
    pub cache_dir: Option<PathBuf>,
}

impl Default for StoreConfig {
    fn default() -> Self {
        StoreConfig {
            order_cap: DEFAULT_ORDER_CAP,
            lattice_cap: DEFAULT_LATTICE_CAP,
            cache_dir: None,
        }
    }
}

/// In-memory (and optionally on-disk) cache of [`GroupData`] and relation
/// lattices. Cheap to share by reference across threads.
pub struct GroupStore {
    config: StoreConfig,
    disk: Option<DiskCache>,
    groups: RwLock<HashMap<GroupKey, Arc<GroupData>>>,
    relations: RwLock<HashMap<(GroupKey, Characteristic), Arc<RelationLattice>>>,
}

impl GroupStore {
    pub fn new() -> GroupStore {
        GroupStore::with_config(StoreConfig::default())
    }

    pub fn with_config(config: StoreConfig) -> GroupStore {
        let disk = config.cache_dir.as_ref().map(DiskCache::new);
        GroupStore {
            config,
            disk,
            groups: RwLock::new(HashMap::new()),
            relations: RwLock::new(HashMap::new()),
        }
    }

    pub fn config(&self) -> &StoreConfig {
        &self.config
    }

    /// Lattice and marks for a group, computed or fetched by content key.
    pub fn data(&self, group: &FiniteGroup) -> Result<Arc<GroupData>> {
        let key = group.key();
        if let Some(found) = self.groups.read().unwrap().get(&key) {
            return Ok(found.clone());
        }

        let cached = self.disk.as_ref().and_then(|d| d.load(group));
        let (lattice, marks) = match cached {
            Some(pair) => pair,
            None => {
                let lattice = all_subgroups_capped(group, self.config.lattice_cap)?;
                let marks = table_of_marks(group, &lattice);
                if let Some(disk) = &self.disk {
                    disk.save(group, &lattice, &marks);
                }
                (lattice, marks)
            }
        };

        let data = Arc::new(GroupData {
            group: group.clone(),
            lattice,
            marks,
        });
        let mut map = self.groups.write().unwrap();
        Ok(map.entry(key).or_insert(data).clone())
    }

    /// Data for a subgroup repackaged as a standalone group.
    pub fn subgroup_data(&self, parent: &GroupData, subgroup: &Subgroup) -> Result<Arc<GroupData>> {
        let standalone = subgroup_group(parent.group(), subgroup)?;
        self.data(&standalone)
    }

    /// Data for the representative of a subgroup class.
    pub fn class_data(&self, parent: &GroupData, class: usize) -> Result<Arc<GroupData>> {
        self.subgroup_data(parent, &parent.lattice().classes[class].representative)
    }

    /// Quotient map by a normal subgroup, plus the target's data.
    pub fn quotient(
        &self,
        parent: &GroupData,
        normal: &Subgroup,
    ) -> Result<(QuotientMap, Arc<GroupData>)> {
        let qm = quotient_group(parent.group(), normal)?;
        let data = self.data(&qm.target)?;
        Ok((qm, data))
    }

    pub(crate) fn cached_relations(
        &self,
        key: GroupKey,
        ch: Characteristic,
    ) -> Option<Arc<RelationLattice>> {
        self.relations.read().unwrap().get(&(key, ch)).cloned()
    }

    pub(crate) fn insert_relations(
        &self,
        key: GroupKey,
        ch: Characteristic,
        lattice: Arc<RelationLattice>,
    ) -> Arc<RelationLattice> {
        let mut map = self.relations.write().unwrap();
        map.entry((key, ch)).or_insert(lattice).clone()
    }
}

impl Default for GroupStore {
    fn default() -> Self {
        GroupStore::new()
    }
}
