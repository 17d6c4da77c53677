//! Verification suites over the constructions, oracles and formulas, and
//! the reports they produce.

pub mod checks;
mod report;

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

pub use report::{Check, RunReport, Status, Tally};

use crate::enumeration::SearchLimits;
use crate::error::{Error, Result};

/// Environment variable overriding the per-search time guard, in seconds.
pub const TIME_GUARD_ENV: &str = "LUCAS_CUBES_TIME_GUARD";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Identities,
    OracleCrosscheck,
    Resonance,
    Structure,
    All,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Identities,
        Suite::OracleCrosscheck,
        Suite::Resonance,
        Suite::Structure,
        Suite::All,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::OracleCrosscheck => "oracle_crosscheck",
            Suite::Resonance => "resonance",
            Suite::Structure => "structure",
            Suite::All => "all",
        }
    }

    /// Largest accepted `max_n`.
    pub fn max_n_guard(self) -> usize {
        match self {
            Suite::Identities => 60,
            Suite::OracleCrosscheck => 14,
            Suite::Resonance => 12,
            Suite::Structure => 12,
            Suite::All => 12,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    pub max_n: usize,
    pub limits: SearchLimits,
}

impl VerifyConfig {
    pub fn new(max_n: usize) -> Self {
        VerifyConfig {
            max_n,
            limits: SearchLimits::default(),
        }
    }

    /// Applies [`TIME_GUARD_ENV`] when it holds a number of seconds.
    pub fn with_env_guard(mut self) -> Result<Self> {
        if let Ok(v) = std::env::var(TIME_GUARD_ENV) {
            let secs: f64 = v
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("{TIME_GUARD_ENV} must be seconds, got {v:?}")))?;
            if !(secs.is_finite() && secs >= 0.0) {
                return Err(Error::InvalidArgument(format!("{TIME_GUARD_ENV} must be non-negative")));
            }
            self.limits.solver_time = Duration::from_secs_f64(secs);
        }
        Ok(self)
    }
}

/// Checks of one suite, without timing.
fn suite_checks(suite: Suite, cfg: &VerifyConfig) -> Vec<Check> {
    let n = cfg.max_n;
    match suite {
        Suite::Identities => {
            let mut out = checks::fixtures();
            out.extend(checks::method_agreement(0..=n));
            out.extend(checks::identities(0..=n));
            out.extend(checks::genfuncs(n, 4));
            out.extend(checks::analytic(2..=8, 2..=n, 0..=n));
            out
        }
        Suite::OracleCrosscheck => {
            let mut out = checks::oracle_crosscheck(0..=n, cfg.limits);
            out.extend(checks::counting_laws(0..=n));
            out.extend(checks::lucas_cube_spectra(0..=n));
            out
        }
        Suite::Resonance => checks::resonance(0..=n),
        Suite::Structure => checks::structure(0..=n, cfg.limits),
        Suite::All => unreachable!("expanded by run"),
    }
}

/// Runs a suite up to `cfg.max_n`. Fails only on invalid configuration;
/// problems inside a check are recorded in the report.
pub fn run(suite: Suite, cfg: &VerifyConfig) -> Result<RunReport> {
    if cfg.max_n > suite.max_n_guard() {
        return Err(Error::SizeLimit {
            what: "verify --max-n",
            actual: cfg.max_n,
            limit: suite.max_n_guard(),
        });
    }
    if suite == Suite::All {
        let parts = Suite::ALL[..4]
            .iter()
            .map(|&s| run(s, cfg))
            .collect::<Result<Vec<_>>>()?;
        return Ok(RunReport::merge("all", parts));
    }
    let start = Instant::now();
    let checks = suite_checks(suite, cfg);
    Ok(RunReport::new(suite.name(), checks, start.elapsed()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        for suite in [Suite::Identities, Suite::Resonance, Suite::Structure, Suite::OracleCrosscheck] {
            let r = run(suite, &VerifyConfig::new(6)).unwrap();
            let bad: Vec<_> = r.checks.iter().filter(|c| c.status == Status::Fail).collect();
            assert!(bad.is_empty(), "{suite}: {bad:#?}");
        }
    }

    #[test]
    fn guards() {
        assert!(run(Suite::OracleCrosscheck, &VerifyConfig::new(15)).is_err());
        assert_eq!("oracle_crosscheck".parse::<Suite>().unwrap(), Suite::OracleCrosscheck);
        assert!("bogus".parse::<Suite>().is_err());
    }
}
