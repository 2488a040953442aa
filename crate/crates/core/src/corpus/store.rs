//! Corpus directories: one `.sg` file per instance plus `manifest.json`.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{corpus_fingerprint, Instance, RNG_ALGORITHM};
use crate::error::{Error, Result};
use crate::format::{parse_sg_with_limits, write_sg};
use crate::limits::Limits;

pub const MANIFEST_FILE: &str = "manifest.json";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub file: String,
    pub name: Option<String>,
    pub descriptor: String,
    pub seed: Option<u64>,
    pub order: usize,
    pub fingerprint: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Manifest {
    pub rng: String,
    pub corpus_fingerprint: String,
    pub entries: Vec<ManifestEntry>,
}

fn slug(name: &str) -> String {
    name.chars()
        .map(|c| {
            if c.is_ascii_alphanumeric() || c == '-' {
                c
            } else {
                '_'
            }
        })
        .collect()
}

/// Writes every instance and the manifest; returns the manifest.
pub fn write_corpus(dir: &Path, instances: &[Instance]) -> Result<Manifest> {
    fs::create_dir_all(dir)?;
    let mut entries = Vec::with_capacity(instances.len());
    for (k, inst) in instances.iter().enumerate() {
        let s = &inst.semigroup;
        let label = s.name().map(slug).unwrap_or_else(|| "semigroup".into());
        let file = format!("{k:04}-{label}.sg");
        fs::write(dir.join(&file), write_sg(s))?;
        entries.push(ManifestEntry {
            file,
            name: s.name().map(str::to_string),
            descriptor: inst.descriptor.clone(),
            seed: inst.seed,
            order: s.order(),
            fingerprint: s.fingerprint(),
        });
    }
    let manifest = Manifest {
        rng: RNG_ALGORITHM.to_string(),
        corpus_fingerprint: corpus_fingerprint(instances.iter().map(|i| &i.semigroup)),
        entries,
    };
    let json = serde_json::to_string_pretty(&manifest).map_err(|e| Error::Io(e.to_string()))?;
    fs::write(dir.join(MANIFEST_FILE), json + "\n")?;
    Ok(manifest)
}

/// Reads a corpus directory. With a manifest, files are loaded in manifest
/// order and their fingerprints checked; without one, every `.sg` file is
/// loaded in file-name order.
pub fn read_corpus(dir: &Path, limits: &Limits) -> Result<Vec<Instance>> {
    let manifest_path = dir.join(MANIFEST_FILE);
    if manifest_path.exists() {
        let text = fs::read_to_string(&manifest_path)?;
        let manifest: Manifest = serde_json::from_str(&text).map_err(|e| Error::Parse {
            line: e.line(),
            message: format!("{MANIFEST_FILE}: {e}"),
        })?;
        return manifest
            .entries
            .into_iter()
            .map(|entry| {
                let text = fs::read_to_string(dir.join(&entry.file))?;
                let mut s = parse_sg_with_limits(&text, limits)?;
                if let Some(name) = &entry.name {
                    s = s.with_name(name.clone());
                }
                if s.fingerprint() != entry.fingerprint {
                    return Err(Error::InvariantViolation(format!(
                        "{}: fingerprint does not match manifest",
                        entry.file
                    )));
                }
                Ok(Instance {
                    descriptor: entry.descriptor,
                    seed: entry.seed,
                    semigroup: s,
                })
            })
            .collect();
    }
    let mut files: Vec<_> = fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "sg"))
        .collect();
    files.sort();
    files
        .iter()
        .map(|p| {
            let semigroup = crate::format::read_sg_file(p, limits)?;
            Ok(Instance {
                descriptor: format!(
                    "file:{}",
                    p.file_name().unwrap_or_default().to_string_lossy()
                ),
                seed: None,
                semigroup,
            })
        })
        .collect()
}
