use std::path::Path;

use serde::Deserialize;

use super::dsl::{parse_configuration, Configuration};
use super::ConfigError;

const H: &str = include_str!("../../catalog/H.json");
const STUBS: &str = include_str!("../../catalog/stubs.json");

/// Placeholder for a configuration whose drawing is not available: only
/// the labels it is known to carry and what its absence is used for.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct ConfigurationStub {
    pub name: String,
    pub labels: Vec<String>,
    pub notes: String,
}

/// The shipped catalog: `H`, a (4,4,4)-triangle sharing an edge with a
/// (4,4,4,4)-quadrilateral.
pub fn builtin_catalog() -> Vec<Configuration> {
    vec![parse_configuration(H).expect("shipped H parses")]
}

pub fn configuration_h() -> Configuration {
    parse_configuration(H).expect("shipped H parses")
}

pub fn configuration_stubs() -> Vec<ConfigurationStub> {
    #[derive(Deserialize)]
    struct File {
        stubs: Vec<ConfigurationStub>,
    }
    serde_json::from_str::<File>(STUBS)
        .expect("shipped stubs parse")
        .stubs
}

/// Every `*.json` configuration in `dir`, sorted by file name. Files with
/// a top-level `"stubs"` key are skipped.
pub fn load_catalog_dir(dir: &Path) -> Result<Vec<Configuration>, ConfigError> {
    let io = |e: std::io::Error| ConfigError::MalformedPattern(format!("{}: {e}", dir.display()));
    let mut paths: Vec<_> = std::fs::read_dir(dir)
        .map_err(io)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    let mut out = Vec::new();
    for p in paths {
        let text = std::fs::read_to_string(&p).map_err(io)?;
        let value: serde_json::Value = serde_json::from_str(&text)
            .map_err(|e| ConfigError::MalformedPattern(format!("{}: {e}", p.display())))?;
        if value.get("stubs").is_some() {
            continue;
        }
        let mut cfg = parse_configuration(&text)?;
        if cfg.name.is_empty() {
            cfg.name = p
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_default();
        }
        out.push(cfg);
    }
    Ok(out)
}
