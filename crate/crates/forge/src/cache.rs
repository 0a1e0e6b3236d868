//! Transporter tables on disk, keyed by field and group.
//!
//! Set `SCHEME_FORGE_CACHE_DIR` to enable. A table that fails to load or
//! does not match the field is recomputed and rewritten; the fast route
//! re-checks every transporter anyway, so a stale file cannot change a
//! result.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use scheme_forge_core::orbitals;
use scheme_forge_core::{Fe, Field, GroupId, Moebius};

use crate::error::Result;

pub const CACHE_ENV: &str = "SCHEME_FORGE_CACHE_DIR";

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
struct TableFile {
    schema: u32,
    q: u32,
    modulus: Vec<u32>,
    group: String,
    /// `[a, b, c, d, j]` per pair, field elements by index.
    maps: Vec<[u32; 5]>,
}

#[derive(Debug, Clone)]
pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    pub fn from_env() -> Self {
        Cache { dir: std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(PathBuf::from) }
    }

    pub fn at(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: Some(dir.into()) }
    }

    pub fn disabled() -> Self {
        Cache { dir: None }
    }

    fn path(dir: &Path, f: &Field, group: GroupId) -> PathBuf {
        let modulus: Vec<String> = f.spec().modulus().iter().map(u32::to_string).collect();
        dir.join(format!("transporters-q{}-{}-{}.json", f.q(), modulus.join("_"), group.token()))
    }

    /// The table for `(f, group)`, from disk when possible.
    pub fn transporters(&self, f: &Field, group: GroupId) -> Result<Vec<Moebius>> {
        let Some(dir) = &self.dir else {
            return Ok(orbitals::transporters(f, group)?);
        };
        let path = Self::path(dir, f, group);
        if let Some(table) = fs::read(&path).ok().and_then(|bytes| decode(f, group, &bytes)) {
            return Ok(table);
        }
        let table = orbitals::transporters(f, group)?;
        fs::create_dir_all(dir)?;
        let tmp = path.with_extension("json.tmp");
        fs::write(&tmp, serde_json::to_vec(&encode(f, group, &table))?)?;
        fs::rename(&tmp, &path)?;
        Ok(table)
    }
}

fn encode(f: &Field, group: GroupId, table: &[Moebius]) -> TableFile {
    TableFile {
        schema: 1,
        q: f.q(),
        modulus: f.spec().modulus().to_vec(),
        group: group.token().to_string(),
        maps: table
            .iter()
            .map(|g| {
                let [a, b, c, d] = g.matrix().map(|x| x.index() as u32);
                [a, b, c, d, g.frobenius_exponent()]
            })
            .collect(),
    }
}

fn decode(f: &Field, group: GroupId, bytes: &[u8]) -> Option<Vec<Moebius>> {
    let file: TableFile = serde_json::from_slice(bytes).ok()?;
    if file.schema != 1 || file.q != f.q() || file.modulus != f.spec().modulus() || file.group != group.token() {
        return None;
    }
    file.maps
        .iter()
        .map(|m| {
            if m[..4].iter().any(|&x| x >= f.q()) {
                return None;
            }
            let mat = [m[0], m[1], m[2], m[3]].map(|x| Fe::from_index(x as usize));
            Moebius::new(f, mat, m[4]).ok()
        })
        .collect()
}
