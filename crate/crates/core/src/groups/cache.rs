//! On-disk cache of enumerated groups.
//!
//! A cached group is one JSON file named `<key>.json`, where `key` is the
//! SHA-256 of the canonical JSON encoding of the generator list:
//!
//! ```json
//! {
//!   "format": "fischer-lab/group-v1",
//!   "kind": "permutation",
//!   "key": "<hex sha-256>",
//!   "order": 6,
//!   "generators": [[1,0,2],[0,2,1]],
//!   "elements": [[0,1,2],[1,0,2],[0,2,1],[1,2,0],[2,0,1],[2,1,0]]
//! }
//! ```
//!
//! Permutations are image arrays; matrices are `{"p":2,"dim":n,"entries":[..]}`
//! with row-major residues. `elements` keeps the enumeration order of
//! [`generate`].

use std::fs;
use std::path::{Path, PathBuf};

use indexmap::IndexSet;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::{generate, GeneratedGroup, GroupElement};
use crate::{Error, Result};

pub const FORMAT: &str = "fischer-lab/group-v1";

/// Environment variable naming the cache directory.
pub const CACHE_DIR_ENV: &str = "FISCHER_LAB_CACHE_DIR";

#[derive(Serialize, Deserialize)]
#[serde(bound = "E: GroupElement")]
struct CachedGroup<E> {
    format: String,
    kind: String,
    key: String,
    order: usize,
    generators: Vec<E>,
    elements: Vec<E>,
}

pub fn cache_key<E: GroupElement>(generators: &[E]) -> Result<String> {
    let canonical = serde_json::to_vec(&(E::KIND, generators))?;
    Ok(hex::encode(Sha256::digest(&canonical)))
}

pub fn cache_path<E: GroupElement>(dir: &Path, generators: &[E]) -> Result<PathBuf> {
    Ok(dir.join(format!("{}.json", cache_key(generators)?)))
}

pub fn store<E: GroupElement>(dir: &Path, group: &GeneratedGroup<E>) -> Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let key = cache_key(group.generators())?;
    let record = CachedGroup {
        format: FORMAT.to_string(),
        kind: E::KIND.to_string(),
        key: key.clone(),
        order: group.order(),
        generators: group.generators().to_vec(),
        elements: group.elements().cloned().collect(),
    };
    let path = dir.join(format!("{key}.json"));
    let tmp = dir.join(format!("{key}.json.tmp"));
    fs::write(&tmp, serde_json::to_vec(&record)?)?;
    fs::rename(&tmp, &path)?;
    Ok(path)
}

/// Loads the cached closure of `generators`, if present and well formed.
pub fn load<E: GroupElement>(dir: &Path, generators: &[E]) -> Result<Option<GeneratedGroup<E>>> {
    let path = cache_path(dir, generators)?;
    let bytes = match fs::read(&path) {
        Ok(b) => b,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(e.into()),
    };
    let record: CachedGroup<E> = serde_json::from_slice(&bytes)?;
    let consistent = record.format == FORMAT
        && record.kind == E::KIND
        && record.generators == generators
        && record.order == record.elements.len();
    if !consistent {
        return Err(Error::Structure(format!("cache file {} does not match its generators", path.display())));
    }
    let elements: IndexSet<E> = record.elements.into_iter().collect();
    if elements.len() != record.order {
        return Err(Error::Structure(format!("duplicate elements in {}", path.display())));
    }
    Ok(Some(GeneratedGroup::from_parts(record.generators, elements)))
}

/// [`generate`], going through the cache directory when one is given.
pub fn generate_cached<E: GroupElement>(
    dir: Option<&Path>,
    generators: &[E],
    max_order: usize,
) -> Result<GeneratedGroup<E>> {
    let Some(dir) = dir else {
        return generate(generators, max_order);
    };
    if let Some(group) = load(dir, generators)? {
        if group.order() > max_order {
            return Err(Error::EnumerationCap { cap: max_order, reached: group.order() });
        }
        return Ok(group);
    }
    let group = generate(generators, max_order)?;
    store(dir, &group)?;
    Ok(group)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{FpMatrix, Permutation};

    #[test]
    fn round_trip_through_disk() {
        let dir = tempfile::tempdir().unwrap();
        let gens = vec![
            Permutation::transposition(4, 0, 1).unwrap(),
            Permutation::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap(),
        ];
        let fresh = generate_cached(Some(dir.path()), &gens, 100).unwrap();
        assert!(cache_path(dir.path(), &gens).unwrap().exists());
        let cached = load(dir.path(), &gens).unwrap().unwrap();
        assert_eq!(cached.order(), 24);
        assert!(fresh.elements().eq(cached.elements()));
    }

    #[test]
    fn keys_depend_on_generators() {
        let a = vec![FpMatrix::identity(2, 2).unwrap()];
        let b = vec![FpMatrix::identity(3, 2).unwrap()];
        assert_ne!(cache_key(&a).unwrap(), cache_key(&b).unwrap());
        assert_eq!(cache_key(&a).unwrap().len(), 64);
    }

    #[test]
    fn cap_applies_to_cached_groups() {
        let dir = tempfile::tempdir().unwrap();
        let gens = vec![Permutation::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap()];
        generate_cached(Some(dir.path()), &gens, 100).unwrap();
        assert!(generate_cached(Some(dir.path()), &gens, 3).is_err());
    }
}
