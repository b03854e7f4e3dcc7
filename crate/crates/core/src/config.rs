//! Plain `key = value` configuration files.
//!
//! ```text
//! # quincunx ensemble
//! g_hat = 1000
//! n_cues = 10
//! p_cue = 0.7
//! ```

use std::collections::BTreeMap;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::null::{QuincunxEnsemble, UnbiasedEnsemble};

#[derive(Debug, Clone, Default, PartialEq)]
pub struct KeyValueConfig {
    entries: BTreeMap<String, String>,
}

impl KeyValueConfig {
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| Error::Row {
                line: i as u64 + 1,
                message: format!("expected key=value, got `{line}`"),
            })?;
            let key = key.trim().replace('-', "_");
            if entries
                .insert(key.clone(), value.trim().to_string())
                .is_some()
            {
                return Err(Error::Row {
                    line: i as u64 + 1,
                    message: format!("duplicate key `{key}`"),
                });
            }
        }
        Ok(Self { entries })
    }

    pub fn get_str(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(String::as_str)
    }

    pub fn get<T: FromStr>(&self, key: &str) -> Result<Option<T>> {
        self.entries
            .get(key)
            .map(|v| {
                v.parse::<T>().map_err(|_| {
                    Error::InvalidParameter(format!("config key `{key}`: invalid value `{v}`"))
                })
            })
            .transpose()
    }

    pub fn keys(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }

    /// Fails on any key outside `allowed`.
    pub fn check_keys(&self, allowed: &[&str]) -> Result<()> {
        match self.keys().find(|k| !allowed.contains(k)) {
            Some(k) => Err(Error::InvalidParameter(format!("unknown config key `{k}`"))),
            None => Ok(()),
        }
    }
}

macro_rules! apply {
    ($cfg:expr, $target:expr, $($field:ident),+) => {
        $( if let Some(v) = $cfg.get(stringify!($field))? { $target.$field = v; } )+
    };
}

impl QuincunxEnsemble {
    pub const CONFIG_KEYS: [&'static str; 9] = [
        "g_hat",
        "n_cues",
        "cue_low",
        "cue_high",
        "p_cue",
        "n_experiments",
        "n_per",
        "centered_cues",
        "seed",
    ];

    /// Defaults overridden by whichever keys `cfg` sets.
    pub fn from_config(cfg: &KeyValueConfig) -> Result<Self> {
        let mut out = Self::default();
        apply!(
            cfg,
            out,
            g_hat,
            n_cues,
            cue_low,
            cue_high,
            p_cue,
            n_experiments,
            n_per,
            centered_cues,
            seed
        );
        Ok(out)
    }
}

impl UnbiasedEnsemble {
    pub const CONFIG_KEYS: [&'static str; 6] =
        ["n_experiments", "n_min", "n_max", "truth", "delta", "seed"];

    pub fn from_config(cfg: &KeyValueConfig) -> Result<Self> {
        let mut out = Self::default();
        apply!(cfg, out, n_experiments, n_min, n_max, truth, delta, seed);
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_overrides_defaults() {
        let cfg =
            KeyValueConfig::parse("# comment\n\ng_hat = 250\np-cue=0.6\ncentered_cues = true\n")
                .unwrap();
        let q = QuincunxEnsemble::from_config(&cfg).unwrap();
        assert_eq!(q.g_hat, 250.0);
        assert_eq!(q.p_cue, 0.6);
        assert!(q.centered_cues);
        assert_eq!(q.n_cues, 10);
    }

    #[test]
    fn rejects_malformed_lines() {
        assert!(KeyValueConfig::parse("g_hat 250").is_err());
        assert!(KeyValueConfig::parse("a=1\na=2").is_err());
        let cfg = KeyValueConfig::parse("n_min = nine").unwrap();
        assert!(UnbiasedEnsemble::from_config(&cfg).is_err());
        assert!(cfg.check_keys(&["n_max"]).is_err());
    }
}
