use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::Arc;

use exact_linalg::{Rational, SparseVec};
use rep_lab::{ActionMatrix, Module};
use serde::{Deserialize, Serialize};
use superalg_core::{LieSuperalgebra, Parity, Weight};

pub const CACHE_VERSION: u32 = 1;
pub const CACHE_ENV: &str = "SUPERCOHOM_CACHE";

/// On-disk record of a constructed module. Rationals are serialized as
/// `p/q` strings.
#[derive(Serialize, Deserialize)]
pub struct CachedModule {
    pub version: u32,
    pub algebra: String,
    pub descriptor: String,
    pub dim: usize,
    pub parity: Vec<u8>,
    pub z_degree: Vec<i64>,
    pub weights: Vec<Vec<String>>,
    /// Per algebra basis element: columns as (row, value) lists.
    pub actions: Vec<Vec<Vec<(usize, String)>>>,
}

fn sanitize(key: &str) -> String {
    key.chars()
        .map(|c| if c.is_ascii_alphanumeric() || c == '-' || c == '.' { c } else { '_' })
        .collect()
}

pub fn cache_path(dir: &Path, algebra: &str, descriptor: &str) -> PathBuf {
    dir.join(format!("{}__{}.json", sanitize(algebra), sanitize(descriptor)))
}

pub fn to_record(module: &Module) -> CachedModule {
    CachedModule {
        version: CACHE_VERSION,
        algebra: module.algebra().descriptor().to_string(),
        descriptor: module.descriptor().to_string(),
        dim: module.dim(),
        parity: module.parities().iter().map(|p| p.bit()).collect(),
        z_degree: module.z_degrees().to_vec(),
        weights: module
            .weights()
            .iter()
            .map(|w| w.labels().iter().map(|x| x.to_string()).collect())
            .collect(),
        actions: module
            .actions()
            .iter()
            .map(|a| {
                (0..module.dim())
                    .map(|j| {
                        a.col(j)
                            .iter()
                            .map(|(i, v)| (*i, v.to_string()))
                            .collect()
                    })
                    .collect()
            })
            .collect(),
    }
}

pub fn from_record(
    alg: &Arc<LieSuperalgebra>,
    record: CachedModule,
) -> Result<Module, String> {
    if record.version != CACHE_VERSION {
        return Err(format!("cache version {} unsupported", record.version));
    }
    if record.algebra != alg.descriptor() {
        return Err(format!(
            "cached module is over {}, expected {}",
            record.algebra,
            alg.descriptor()
        ));
    }
    if record.actions.len() != alg.dim() {
        return Err("action count does not match the algebra dimension".into());
    }
    let parse = |s: &str| Rational::from_str(s).map_err(|e| format!("bad rational {s:?}: {e}"));
    let mut weights = Vec::with_capacity(record.dim);
    for labels in &record.weights {
        let mut l = Vec::with_capacity(labels.len());
        for s in labels {
            l.push(parse(s)?);
        }
        weights.push(Weight::new(l));
    }
    let mut actions = Vec::with_capacity(record.actions.len());
    for cols in &record.actions {
        if cols.len() != record.dim {
            return Err("column count does not match the dimension".into());
        }
        let mut built = Vec::with_capacity(record.dim);
        for col in cols {
            let mut entries = Vec::with_capacity(col.len());
            for (i, s) in col {
                entries.push((*i, parse(s)?));
            }
            built.push(SparseVec::from_entries(entries));
        }
        actions.push(ActionMatrix::from_cols(record.dim, built));
    }
    let parity = record
        .parity
        .iter()
        .map(|b| if *b == 0 { Parity::Even } else { Parity::Odd })
        .collect();
    Ok(Module::new(
        alg.clone(),
        parity,
        record.z_degree.clone(),
        weights,
        actions,
        record.descriptor.clone(),
    ))
}

pub fn store(dir: &Path, module: &Module) -> std::io::Result<PathBuf> {
    std::fs::create_dir_all(dir)?;
    let path = cache_path(dir, module.algebra().descriptor(), module.descriptor());
    let record = to_record(module);
    std::fs::write(&path, serde_json::to_string(&record)?)?;
    Ok(path)
}

pub fn load(dir: &Path, alg: &Arc<LieSuperalgebra>, descriptor: &str) -> Option<Module> {
    let path = cache_path(dir, alg.descriptor(), descriptor);
    let text = std::fs::read_to_string(path).ok()?;
    let record: CachedModule = serde_json::from_str(&text).ok()?;
    from_record(alg, record).ok()
}

/// Looks up the cache when `SUPERCOHOM_CACHE` is set, rebuilding and
/// storing on a miss.
pub fn load_or_build(
    alg: &Arc<LieSuperalgebra>,
    descriptor: &str,
) -> Result<Module, crate::descriptor::DescriptorError> {
    let dir = std::env::var_os(CACHE_ENV).map(PathBuf::from);
    if let Some(dir) = &dir {
        if let Some(module) = load(dir, alg, descriptor) {
            return Ok(module);
        }
    }
    let module = crate::descriptor::parse_module(alg, descriptor)?;
    if let Some(dir) = &dir {
        let _ = store(dir, &module);
    }
    Ok(module)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::descriptor::parse_algebra;

    #[test]
    fn round_trip_through_records() {
        let alg = parse_algebra("sl:2:1").unwrap();
        let module = crate::descriptor::parse_module(&alg, "adjoint").unwrap();
        let record = to_record(&module);
        assert_eq!(record.version, CACHE_VERSION);
        let text = serde_json::to_string(&record).unwrap();
        let parsed: CachedModule = serde_json::from_str(&text).unwrap();
        let back = from_record(&alg, parsed).unwrap();
        assert_eq!(back.dim(), module.dim());
        assert_eq!(back.weights(), module.weights());
        for e in 0..alg.dim() {
            assert_eq!(back.action(e), module.action(e));
        }
    }
}
