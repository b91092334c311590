//! Loading the (group, subgroup, π) cases listed in a corpus manifest.

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use crate::error::Result;
use crate::group::{PermutationGroup, Subgroup};
use crate::io::{read_manifest, CaseEntry, GroupFile};
use crate::structure::PrimeSet;

#[derive(Clone, Debug)]
pub struct LoadedCase {
    pub name: String,
    pub group_path: PathBuf,
    pub subgroup_path: PathBuf,
    pub pi: Option<PrimeSet>,
    pub group: Subgroup,
    pub subgroup: Subgroup,
}

impl LoadedCase {
    pub fn ambient(&self) -> &Arc<PermutationGroup> {
        self.group.ambient()
    }

    /// File stem of the group file, used to key per-group results.
    pub fn group_name(&self) -> String {
        self.group_path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default()
    }
}

/// Builds groups once per distinct group file.
#[derive(Default)]
pub struct GroupCache {
    groups: HashMap<PathBuf, Arc<PermutationGroup>>,
}

impl GroupCache {
    pub fn group(&mut self, path: &Path, cap: usize) -> Result<Arc<PermutationGroup>> {
        if let Some(g) = self.groups.get(path) {
            return Ok(g.clone());
        }
        let g = GroupFile::read(path)?.build(cap)?;
        self.groups.insert(path.to_path_buf(), g.clone());
        Ok(g)
    }

    pub fn load(&mut self, entry: &CaseEntry, cap: usize) -> Result<LoadedCase> {
        let ambient = self.group(&entry.group, cap)?;
        let subgroup = GroupFile::read(&entry.subgroup)?
            .subgroup_of(&ambient, &entry.subgroup.display().to_string())?;
        Ok(LoadedCase {
            name: entry.name.clone(),
            group_path: entry.group.clone(),
            subgroup_path: entry.subgroup.clone(),
            pi: entry.pi.clone(),
            group: ambient.full(),
            subgroup,
        })
    }
}

/// Loads a group file and a subgroup file directly.
pub fn load_pair(group: &Path, subgroup: &Path, pi: Option<PrimeSet>, cap: usize) -> Result<LoadedCase> {
    let entry = CaseEntry {
        name: subgroup
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default(),
        group: group.to_path_buf(),
        subgroup: subgroup.to_path_buf(),
        pi,
    };
    GroupCache::default().load(&entry, cap)
}

/// All cases of the corpus in `dir`, in manifest order.
pub fn load_corpus(dir: &Path, cap: usize) -> Result<Vec<LoadedCase>> {
    let mut cache = GroupCache::default();
    read_manifest(dir)?
        .iter()
        .map(|e| cache.load(e, cap))
        .collect()
}
