//! Reproducible check suites.
//!
//! Every check carries the id of the acceptance criterion it belongs to, so a
//! report can be folded into one line per criterion.

mod golden;
mod properties;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

pub use golden::{a5_codim_one_job, fixture, Fixture};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub criterion: String,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(criterion: &str, name: &str, passed: bool, detail: impl Into<String>) -> Self {
        Check { criterion: criterion.into(), name: name.into(), passed, detail: detail.into() }
    }

    /// A check whose computation itself failed.
    pub fn error(criterion: &str, name: &str, err: &Error) -> Self {
        Check::new(criterion, name, false, format!("error: {err}"))
    }

    fn from_result(criterion: &str, name: &str, r: Result<(bool, String)>) -> Self {
        match r {
            Ok((passed, detail)) => Check::new(criterion, name, passed, detail),
            Err(e) => Check::error(criterion, name, &e),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {} {}", self.criterion, self.name)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// `(criterion, passed)` in first-seen order.
    pub fn criteria(&self) -> Vec<(String, bool)> {
        let mut out: Vec<(String, bool)> = Vec::new();
        for c in &self.checks {
            match out.iter_mut().find(|(id, _)| *id == c.criterion) {
                Some(entry) => entry.1 &= c.passed,
                None => out.push((c.criterion.clone(), c.passed)),
            }
        }
        out
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {}", self.suite)?;
        for c in &self.checks {
            writeln!(f, "  {c}")?;
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        write!(f, "{} checks, {failed} failed", self.checks.len())
    }
}

/// Named suites. The command-line names are `sect71`, `sect72`, `remark`,
/// `torsion`, `braid`, `laurent`, `decat`, `propP` and `all`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    /// The torus stratum in `A3`.
    TorusA3,
    /// The codimension-one positroid example in `A5`.
    PositroidA5,
    /// Projective-injectives of an `A3` pair with a decomposable `Q_{i,v,w}`.
    Remark,
    Torsion,
    Braid,
    Laurent,
    /// Lockstep categorical and combinatorial mutation.
    Decat,
    PropP,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 9] =
        ["sect71", "sect72", "remark", "torsion", "braid", "laurent", "decat", "propP", "all"];

    pub fn name(self) -> &'static str {
        match self {
            Suite::TorusA3 => "sect71",
            Suite::PositroidA5 => "sect72",
            Suite::Remark => "remark",
            Suite::Torsion => "torsion",
            Suite::Braid => "braid",
            Suite::Laurent => "laurent",
            Suite::Decat => "decat",
            Suite::PropP => "propP",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "sect71" => Suite::TorusA3,
            "sect72" => Suite::PositroidA5,
            "remark" => Suite::Remark,
            "torsion" => Suite::Torsion,
            "braid" => Suite::Braid,
            "laurent" => Suite::Laurent,
            "decat" => Suite::Decat,
            "propP" | "propp" => Suite::PropP,
            "all" => Suite::All,
            _ => return Err(Error::UnknownSuite(s.into())),
        })
    }
}

/// Runs a suite. `rng_seed` drives all sampling.
pub fn run(suite: Suite, rng_seed: u64) -> Report {
    let checks = match suite {
        Suite::TorusA3 => golden::torus_a3(rng_seed),
        Suite::PositroidA5 => golden::positroid_a5(rng_seed),
        Suite::Remark => golden::remark(),
        Suite::Torsion => properties::torsion(rng_seed),
        Suite::Braid => properties::braid(rng_seed),
        Suite::Laurent => properties::laurent(rng_seed),
        Suite::Decat => properties::decat(rng_seed),
        Suite::PropP => properties::prop_p(),
        Suite::All => {
            let mut all = Vec::new();
            for s in [
                Suite::PositroidA5,
                Suite::TorusA3,
                Suite::Remark,
                Suite::Torsion,
                Suite::Braid,
                Suite::Laurent,
                Suite::Decat,
                Suite::PropP,
            ] {
                all.extend(run(s, rng_seed).checks);
            }
            all
        }
    };
    Report { suite: suite.name().into(), checks }
}

pub const DEFAULT_RNG_SEED: u64 = 2024;
