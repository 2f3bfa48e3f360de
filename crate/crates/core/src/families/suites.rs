//! Named verification suites over the identity checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::identities::{Checker, IdentityReport, IDENTITY_IDS};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::{Poly, RatFn};

/// Seed for the factorization round-trip drifts.
pub const DRIFT_SEED: u64 = 0x5eed_1adde5;

pub const SUITES: &[&str] = &[
    "oracle",
    "eq31",
    "remark3term",
    "eq34",
    "assoc-relations",
    "factorization",
    "rodrigues",
    "relations",
    "hermite",
    "h0-reduction",
    "remainder",
    "all",
];

/// Identity ids making up a suite.
pub fn suite_ids(suite: &str) -> Result<Vec<&'static str>> {
    Ok(match suite {
        "oracle" => vec!["oracle"],
        "eq31" => vec!["eq31"],
        "remark3term" => vec!["remark3term", "remark3term-legendre"],
        "eq34" => vec!["eq34", "eq33-35"],
        "assoc-relations" => vec!["assoc-relations"],
        "factorization" => vec!["factorization"],
        "rodrigues" => vec!["rodrigues"],
        "relations" => vec![
            "legendre-relations",
            "gegenbauer-updown",
            "chebyshev-relations",
            "laguerre-relations",
        ],
        "hermite" => vec!["hermite"],
        "h0-reduction" => vec!["h0-reduction"],
        "remainder" => vec!["remainder"],
        "all" => IDENTITY_IDS.to_vec(),
        _ => return Err(Error::Unknown(suite.to_string())),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteOutcome {
    pub suite: String,
    pub n_max: u32,
    pub passed: bool,
    pub reports: Vec<IdentityReport>,
}

impl SuiteOutcome {
    pub fn instance_count(&self) -> usize {
        self.reports.iter().map(|r| r.instances.len()).sum()
    }

    pub fn failure_count(&self) -> usize {
        self.reports.iter().map(|r| r.failures().count()).sum()
    }
}

/// Runs every identity of the suite, one thread per identity.
///
/// With `negative_control` the generated `P_2` is corrupted before any
/// comparison, so a correct build must report failures.
pub fn run_suite(suite: &str, n_max: u32, negative_control: bool) -> Result<SuiteOutcome> {
    let ids = suite_ids(suite)?;
    let checker = Checker {
        corrupt: negative_control,
    };
    let reports = std::thread::scope(|scope| {
        let handles: Vec<_> = ids
            .iter()
            .map(|id| scope.spawn(move || checker.check(id, n_max)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("identity check panicked"))
            .collect::<Result<Vec<_>>>()
    })?;
    Ok(SuiteOutcome {
        suite: suite.to_string(),
        n_max,
        passed: reports.iter().all(IdentityReport::passed),
        reports,
    })
}

/// Polynomial drifts `t` of degree at most 4 whose coefficients are
/// `p/q` with `p` in `[-5, 5]` and `q` in `[1, 5]`.
pub fn random_drifts(seed: u64, count: usize) -> Vec<RatFn> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let degree = rng.gen_range(0..=4);
            let coeffs = (0..=degree)
                .map(|_| Rational::new(rng.gen_range(-5..=5).into(), rng.gen_range(1..=5).into()))
                .collect();
            RatFn::from_poly(Poly::from_coeffs(coeffs))
        })
        .collect()
}
