use std::ops::RangeInclusive;

use rayon::prelude::*;

use super::checkers::{Case, PalindromicWeights, Verifier};
use super::report::IdentityReport;
use crate::error::{Error, Result};

/// Inclusive parameter spans for a suite run. An empty span (`lo > hi`)
/// removes every checker that needs that parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ranges {
    pub m: RangeInclusive<u32>,
    pub l: RangeInclusive<u32>,
    pub n: RangeInclusive<u32>,
    /// Highest sequence index for self-duality.
    pub len: RangeInclusive<u32>,
    /// Nörlund order; `r` runs over `0..p`.
    pub p: RangeInclusive<u32>,
}

pub const RANGE_KEYS: &[&str] = &["m", "l", "n", "len", "p"];

impl Default for Ranges {
    fn default() -> Self {
        Ranges {
            m: 0..=6,
            l: 0..=6,
            n: 1..=4,
            len: 0..=10,
            p: 1..=8,
        }
    }
}

#[allow(clippy::reversed_empty_ranges)]
impl Ranges {
    pub fn empty() -> Self {
        Ranges {
            m: 1..=0,
            l: 1..=0,
            n: 1..=0,
            len: 1..=0,
            p: 1..=0,
        }
    }

    pub fn get_mut(&mut self, key: &str) -> Option<&mut RangeInclusive<u32>> {
        match key {
            "m" => Some(&mut self.m),
            "l" => Some(&mut self.l),
            "n" => Some(&mut self.n),
            "len" => Some(&mut self.len),
            "p" => Some(&mut self.p),
            _ => None,
        }
    }

    /// Overrides spans from `key=lo..hi` or `key=v` items separated by
    /// commas, e.g. `m=0..6,n=1..4,p=3`.
    pub fn apply(&mut self, spec: &str) -> Result<()> {
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=range, got '{item}'")))?;
            let span = parse_span(value.trim())?;
            *self
                .get_mut(key.trim())
                .ok_or_else(|| Error::Parse(format!("unknown range key '{}'", key.trim())))? = span;
        }
        Ok(())
    }

    pub fn parse(spec: &str) -> Result<Self> {
        let mut r = Ranges::default();
        r.apply(spec)?;
        Ok(r)
    }
}

pub fn parse_span(s: &str) -> Result<RangeInclusive<u32>> {
    let num = |t: &str| {
        t.trim()
            .parse::<u32>()
            .map_err(|_| Error::Parse(format!("bad range bound '{t}'")))
    };
    match s.split_once("..") {
        Some((lo, hi)) => {
            let hi = hi.strip_prefix('=').unwrap_or(hi);
            Ok(num(lo)?..=num(hi)?)
        }
        None => {
            let v = num(s)?;
            Ok(v..=v)
        }
    }
}

/// Every case the ranges select, in a fixed order.
pub fn suite_cases(r: &Ranges) -> Vec<Case> {
    let ns: Vec<usize> =
        r.n.clone()
            .filter(|&n| n >= 1)
            .map(|n| n as usize)
            .collect();
    let ms: Vec<u32> = r.m.clone().collect();
    let odd_ms: Vec<u32> = ms.iter().copied().filter(|m| m % 2 == 1).collect();
    let mut cases = Vec::new();
    for &n in &ns {
        for &m in &ms {
            cases.push(Case::Difference { m, n });
            cases.push(Case::Reflection { m, n });
            cases.push(Case::GeneralExpansion { m, n });
            cases.push(Case::ShiftNegation { m, n });
            cases.push(Case::MultiUniform { m, n });
            cases.push(Case::OddRecurrence { m, n });
            if m >= 1 {
                cases.push(Case::EvenRecurrence { m, n });
            }
            for l in r.l.clone() {
                cases.push(Case::Symmetry1 { l, m, n });
                cases.push(Case::Symmetry2 { l, m, n });
            }
        }
        for len in r.len.clone() {
            cases.push(Case::SelfDual { len, n });
        }
        for &m in &odd_ms {
            if n >= 3 {
                cases.push(Case::Main { m, n });
            }
            let mut families = vec![PalindromicWeights::ones(n), PalindromicWeights::binomial(n)];
            if let Ok(w) = PalindromicWeights::main_family(n) {
                families.push(w);
            }
            for weights in families {
                cases.push(Case::Palindromic { weights, m });
            }
        }
    }
    if !ns.is_empty() {
        for &m in &ms {
            cases.push(Case::UniformFtc { m });
        }
    }
    for p in r.p.clone().filter(|&p| p >= 1) {
        for r in 0..p {
            cases.push(Case::Norlund { r, p });
            cases.push(Case::NorlundShifted { r, p });
        }
    }
    cases
}

/// Checks every case on `workers` threads (0 = rayon's default). Reports
/// come back sorted by identity id, then parameters; spot-check streams
/// are tied to a case's position in `cases`, not to scheduling.
pub fn run_cases(
    cases: &[Case],
    verifier: &Verifier,
    workers: usize,
) -> Result<Vec<IdentityReport>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::InvalidParameters(e.to_string()))?;
    let mut reports = pool.install(|| {
        cases
            .par_iter()
            .enumerate()
            .map(|(i, case)| verifier.check_stream(case, i as u64))
            .collect::<Result<Vec<_>>>()
    })?;
    reports.sort_by(|a, b| a.id.cmp(&b.id).then_with(|| a.params.cmp(&b.params)));
    Ok(reports)
}

/// Runs every checker over the ranges. Failures are reported, never
/// short-circuited.
pub fn run_suite(r: &Ranges, verifier: &Verifier, workers: usize) -> Vec<IdentityReport> {
    run_cases(&suite_cases(r), verifier, workers).expect("suite cases are valid by construction")
}
