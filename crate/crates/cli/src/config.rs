//! `key = value` configuration files. Blank lines and `#` comments are
//! ignored.
//!
//! Recognized keys: the range keys (`m`, `l`, `n`, `len`, `p`) with values
//! like `0..6`, plus `workers` and `seed`.

use std::path::Path;

use umbra_core::identities::{parse_span, Ranges, RANGE_KEYS};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Config {
    pub ranges: Vec<(String, String)>,
    pub workers: Option<usize>,
    pub seed: Option<u64>,
}

impl Config {
    pub fn parse(text: &str) -> Result<Config, String> {
        let mut cfg = Config::default();
        for (no, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("line {}: expected key = value", no + 1))?;
            let (key, value) = (key.trim(), value.trim());
            let bad = |what: &str| format!("line {}: bad {what} '{value}'", no + 1);
            match key {
                "workers" => cfg.workers = Some(value.parse().map_err(|_| bad("worker count"))?),
                "seed" => cfg.seed = Some(value.parse().map_err(|_| bad("seed"))?),
                k if RANGE_KEYS.contains(&k) => {
                    parse_span(value).map_err(|_| bad("range"))?;
                    cfg.ranges.push((k.to_string(), value.to_string()));
                }
                other => return Err(format!("line {}: unknown key '{other}'", no + 1)),
            }
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Config, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        Config::parse(&text)
    }

    pub fn apply_ranges(&self, ranges: &mut Ranges) {
        for (k, v) in &self.ranges {
            let span = parse_span(v).expect("validated at parse time");
            *ranges.get_mut(k).expect("validated at parse time") = span;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_keys_and_comments() {
        let cfg = Config::parse("# suite\nm = 0..3\n\nseed = 9  # fixed\nworkers=2\n").unwrap();
        assert_eq!(cfg.seed, Some(9));
        assert_eq!(cfg.workers, Some(2));
        let mut r = Ranges::default();
        cfg.apply_ranges(&mut r);
        assert_eq!(r.m, 0..=3);
    }

    #[test]
    fn rejects_unknown_keys() {
        assert!(Config::parse("q = 1").is_err());
        assert!(Config::parse("m = a..b").is_err());
        assert!(Config::parse("just text").is_err());
    }
}
