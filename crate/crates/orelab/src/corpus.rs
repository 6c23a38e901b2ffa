//! A corpus directory: `entries/<key>.toml`, one file per isomorphism
//! class, plus an append-only `ledger.log` of verification outcomes.

use std::fs::{self, OpenOptions};
use std::io::Write as _;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context as _};
use orelab_core::coloring::is_5_critical;
use orelab_core::ore::OreRecognizer;
use orelab_core::packing::{mic, t_number};
use orelab_core::potential::{p_ky, potential_from};
use orelab_core::{canonical_key, Graph};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::format::{parse_text, to_text};

/// First 16 hex digits of the SHA-256 of the canonical key bytes.
pub fn entry_key(g: &Graph) -> String {
    let digest = Sha256::digest(canonical_key(g).as_bytes());
    hex::encode(&digest[..8])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Provenance {
    Recipe { recipe: String },
    Named { name: String },
    File { path: String },
    Search { note: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Invariants {
    pub n: usize,
    pub m: usize,
    pub p_ky: i64,
    pub t: u32,
    /// Numerator of `p(G)` over 21.
    pub p_num: i64,
    pub five_critical: bool,
    pub five_ore: bool,
    pub mic: u32,
    pub singles: usize,
    pub pairs: usize,
}

impl Invariants {
    pub fn compute(g: &Graph, recognizer: &mut OreRecognizer) -> Invariants {
        let t = t_number(g).0;
        let five_critical = is_5_critical(g);
        let d4 = g.d4_components();
        Invariants {
            n: g.n(),
            m: g.edge_count(),
            p_ky: p_ky(g),
            t,
            p_num: potential_from(g.n(), g.edge_count(), t).numerator(),
            five_critical,
            five_ore: five_critical && recognizer.is_5_ore(g),
            mic: mic(g).0,
            singles: d4.singles,
            pairs: d4.pairs,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub key: String,
    pub provenance: Provenance,
    /// The graph in the text format.
    pub graph: String,
    pub invariants: Invariants,
}

impl CorpusEntry {
    pub fn new(g: &Graph, provenance: Provenance, recognizer: &mut OreRecognizer) -> CorpusEntry {
        CorpusEntry { key: entry_key(g), provenance, graph: to_text(g), invariants: Invariants::compute(g, recognizer) }
    }

    pub fn parse_graph(&self) -> anyhow::Result<Graph> {
        parse_text(&self.graph).with_context(|| format!("entry {}", self.key))
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("corpus entries serialize")
    }

    pub fn from_toml(s: &str) -> anyhow::Result<CorpusEntry> {
        Ok(toml::from_str(s)?)
    }
}

pub struct Corpus {
    root: PathBuf,
}

impl Corpus {
    /// Opens `dir`, creating it and its `entries` subdirectory if needed.
    pub fn create(dir: impl AsRef<Path>) -> anyhow::Result<Corpus> {
        let root = dir.as_ref().to_path_buf();
        let entries = root.join("entries");
        fs::create_dir_all(&entries).with_context(|| format!("creating {}", entries.display()))?;
        Ok(Corpus { root })
    }

    /// Opens an existing corpus.
    pub fn open(dir: impl AsRef<Path>) -> anyhow::Result<Corpus> {
        let root = dir.as_ref().to_path_buf();
        if !root.join("entries").is_dir() {
            bail!("{} is not a corpus directory (no entries/ subdirectory)", root.display());
        }
        Ok(Corpus { root })
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    fn entry_path(&self, key: &str) -> PathBuf {
        self.root.join("entries").join(format!("{key}.toml"))
    }

    /// Writes the entry unless one with the same key exists. Returns whether
    /// a file was written.
    pub fn insert(&self, entry: &CorpusEntry) -> anyhow::Result<bool> {
        let path = self.entry_path(&entry.key);
        if path.exists() {
            return Ok(false);
        }
        fs::write(&path, entry.to_toml()).with_context(|| format!("writing {}", path.display()))?;
        Ok(true)
    }

    pub fn get(&self, key: &str) -> anyhow::Result<CorpusEntry> {
        let path = self.entry_path(key);
        let text = fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
        CorpusEntry::from_toml(&text).with_context(|| format!("parsing {}", path.display()))
    }

    /// Finds the unique entry whose key starts with `prefix`.
    pub fn find(&self, prefix: &str) -> anyhow::Result<CorpusEntry> {
        let keys: Vec<String> = self.keys()?.into_iter().filter(|k| k.starts_with(prefix)).collect();
        match keys.as_slice() {
            [key] => self.get(key),
            [] => bail!("no corpus entry matches `{prefix}`"),
            _ => bail!("`{prefix}` matches {} entries", keys.len()),
        }
    }

    /// All keys in ascending order.
    pub fn keys(&self) -> anyhow::Result<Vec<String>> {
        let dir = self.root.join("entries");
        let mut keys = Vec::new();
        for item in fs::read_dir(&dir).with_context(|| format!("listing {}", dir.display()))? {
            let path = item?.path();
            if path.extension().is_some_and(|e| e == "toml") {
                if let Some(stem) = path.file_stem().and_then(|s| s.to_str()) {
                    keys.push(stem.to_string());
                }
            }
        }
        keys.sort();
        Ok(keys)
    }

    /// All entries, ordered by key.
    pub fn entries(&self) -> anyhow::Result<Vec<CorpusEntry>> {
        self.keys()?.iter().map(|k| self.get(k)).collect()
    }

    pub fn append_ledger(&self, lines: &[String]) -> anyhow::Result<()> {
        let path = self.root.join("ledger.log");
        let mut file = OpenOptions::new().create(true).append(true).open(&path).with_context(|| format!("opening {}", path.display()))?;
        let mut buf = String::new();
        for line in lines {
            buf.push_str(line);
            buf.push('\n');
        }
        file.write_all(buf.as_bytes()).with_context(|| format!("appending to {}", path.display()))?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use orelab_core::families;

    #[test]
    fn key_is_isomorphism_invariant() {
        let g = families::c5_join_k2();
        let perm: Vec<usize> = (0..7).rev().collect();
        assert_eq!(entry_key(&g), entry_key(&g.permuted(&perm)));
        assert_eq!(entry_key(&g).len(), 16);
        assert_ne!(entry_key(&g), entry_key(&families::complete(5)));
    }

    #[test]
    fn entry_toml_round_trip() {
        let mut rec = OreRecognizer::new();
        let e = CorpusEntry::new(&families::complete(5), Provenance::Recipe { recipe: "(k5)".into() }, &mut rec);
        let text = e.to_toml();
        assert!(text.contains("kind = \"recipe\""));
        let back = CorpusEntry::from_toml(&text).unwrap();
        assert_eq!(back, e);
        assert_eq!(back.graph, to_text(&families::complete(5)));
        assert_eq!(e.invariants.p_num, 94);
        assert!(e.invariants.five_ore && e.invariants.five_critical);
    }
}
