//! Oracle grid bounds from a TOML file.
//!
//! ```toml
//! [dim-conservation]
//! max_n = 8
//! max_entry = 3
//!
//! [chi-twist]
//! max_n = 11
//! ```
//!
//! Tables are named after suites; missing tables and keys keep the defaults.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;
use sobranch_core::oracle::{GridBounds, Suite};

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct BoundsToml {
    max_n: Option<u32>,
    max_entry: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    bounds: BTreeMap<Suite, GridBounds>,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            bounds: Suite::ALL
                .into_iter()
                .map(|s| (s, s.default_bounds()))
                .collect(),
        }
    }
}

impl OracleConfig {
    pub fn parse(text: &str) -> Result<Self, String> {
        let raw: BTreeMap<String, BoundsToml> = toml::from_str(text).map_err(|e| e.to_string())?;
        let mut config = OracleConfig::default();
        for (name, b) in raw {
            let suite: Suite = name
                .parse()
                .map_err(|_| format!("unknown suite `{name}`"))?;
            let entry = config
                .bounds
                .get_mut(&suite)
                .expect("every suite has defaults");
            if let Some(max_n) = b.max_n {
                entry.max_n = max_n;
            }
            if let Some(max_entry) = b.max_entry {
                entry.max_entry = max_entry;
            }
            // SO(N,1) needs N ≤ 64; compact SO(N) in dim-conservation likewise.
            if entry.max_n > 64 {
                return Err(format!("{name}: max_n must be at most 64"));
            }
        }
        Ok(config)
    }

    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        Self::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
    }

    pub fn bounds(&self, suite: Suite) -> GridBounds {
        self.bounds[&suite]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partial_tables_keep_defaults() {
        let c = OracleConfig::parse("[chi-twist]\nmax_n = 7\n").unwrap();
        assert_eq!(
            c.bounds(Suite::ChiTwist),
            GridBounds {
                max_n: 7,
                max_entry: 4
            }
        );
        assert_eq!(
            c.bounds(Suite::DimConservation),
            Suite::DimConservation.default_bounds()
        );
    }

    #[test]
    fn rejects_unknown_names() {
        assert!(OracleConfig::parse("[bogus]\nmax_n = 3\n").is_err());
        assert!(OracleConfig::parse("[roundtrip]\nmax_m = 3\n").is_err());
        assert!(OracleConfig::parse("[roundtrip]\nmax_n = 65\n").is_err());
    }

    #[test]
    fn shipped_file_matches_defaults() {
        let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../oracle.toml");
        assert_eq!(OracleConfig::load(&path).unwrap(), OracleConfig::default());
    }
}
