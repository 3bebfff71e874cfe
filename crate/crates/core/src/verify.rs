//! Machine checks for every identity: each theorem id names one exact
//! coefficient comparison, swept over all n up to a configurable bound.
//!
//! Every check compares exact ring elements for equality; there is no
//! tolerance parameter anywhere. Failures report the first offending
//! q-degree together with both sides in canonical text encoding.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::genfun::{
    brute_stat_sum, composition_coeffs, cprime_product_form, cprime_truncated, gamma_moment_closed,
    h1h2_closed, han_u_distribution, hno_infinite_product, hno_truncated, hook_pair_closed,
    hook_pair_closed_k2_alt, multiplicity_gf, partition_count, stat_totals, StatMoment, StatSide,
};
use crate::partition::enumerate_partitions;
use crate::ring::{CoeffRing, Rat};
use crate::series::QSeries;

/// Identifier of one verifiable result.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum TheoremId {
    /// nu_k(n) = gamma_{>=k}(n): total parts of size k vs sizes repeated >= k times.
    PartsVsRepeats,
    /// H_i(n) = i * nu_i(n): hooks of length i vs parts of size i.
    HooksVsParts,
    /// The hook-count generating function F_k and the distributions it carries.
    HanFk,
    /// The partition-sum formula for the multiplicity-truncated colored series.
    CprimeFormula,
    /// The composition-sum formula for b-coefficients of both truncated series.
    CoeffComposition,
    /// Equal constant and linear b-terms of the two truncations, for all j.
    LinearEquivalence,
    /// Closed form of the d-th binomial moment of gamma_{>=k}.
    GammaMoment,
    /// Closed form of the second binomial moment of H_k.
    HookPairLemma,
    /// The 2:1 matching between hook and multiplicity mixed moments.
    TwoToOne,
    /// The quadratic b-term gap of the j=2 truncations equals gamma_{>=4}(n)/16.
    QuadraticEquivalence,
    /// Mixed moments over any strictly increasing set of thresholds.
    ManyMults,
    /// Closed form of the mixed first moments of H_1 and H_2.
    H1H2,
    /// Coefficients of the multiplicity truncation stabilize once j >= n.
    TruncationLimit,
}

/// All theorem ids in canonical report order.
pub const ALL_THEOREMS: [TheoremId; 13] = [
    TheoremId::PartsVsRepeats,
    TheoremId::HooksVsParts,
    TheoremId::HanFk,
    TheoremId::CprimeFormula,
    TheoremId::CoeffComposition,
    TheoremId::LinearEquivalence,
    TheoremId::GammaMoment,
    TheoremId::HookPairLemma,
    TheoremId::TwoToOne,
    TheoremId::QuadraticEquivalence,
    TheoremId::ManyMults,
    TheoremId::H1H2,
    TheoremId::TruncationLimit,
];

impl TheoremId {
    pub fn as_str(&self) -> &'static str {
        match self {
            TheoremId::PartsVsRepeats => "parts-vs-repeats",
            TheoremId::HooksVsParts => "hooks-vs-parts",
            TheoremId::HanFk => "han-fk",
            TheoremId::CprimeFormula => "cprime-formula",
            TheoremId::CoeffComposition => "coeff-composition",
            TheoremId::LinearEquivalence => "linear-equivalence",
            TheoremId::GammaMoment => "gamma-moment",
            TheoremId::HookPairLemma => "hook-pair-lemma",
            TheoremId::TwoToOne => "two-to-one",
            TheoremId::QuadraticEquivalence => "quadratic-equivalence",
            TheoremId::ManyMults => "many-mults",
            TheoremId::H1H2 => "h1h2",
            TheoremId::TruncationLimit => "truncation-limit",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, VerifyError> {
        ALL_THEOREMS
            .iter()
            .find(|t| t.as_str() == s)
            .copied()
            .ok_or_else(|| VerifyError::UnknownTheorem(s.to_string()))
    }
}

/// Named integer parameters of a verification run.
pub type Params = BTreeMap<String, usize>;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum VerifyError {
    #[error("unknown theorem id: {0}")]
    UnknownTheorem(String),
    #[error("missing required parameter: {0}")]
    MissingParam(String),
}

/// The first coefficient discrepancy of a failed check: the q-degree and both
/// sides in canonical text encoding.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FirstFailure {
    pub n: usize,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Status {
    Pass,
    Fail,
}

/// Outcome of one theorem check.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VerificationReport {
    pub theorem: TheoremId,
    pub params: Params,
    pub status: Status,
    pub first_failure: Option<FirstFailure>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Canonical JSON rendering (keys in fixed alphabetical order).
    pub fn to_json(&self) -> serde_json::Value {
        let failure = match &self.first_failure {
            Some(f) => serde_json::json!({ "n": f.n, "lhs": f.lhs, "rhs": f.rhs }),
            None => serde_json::Value::Null,
        };
        serde_json::json!({
            "theorem": self.theorem.as_str(),
            "params": self.params,
            "status": match self.status {
                Status::Pass => "pass",
                Status::Fail => "fail",
            },
            "first_failure": failure,
            "elapsed_ms": self.elapsed.as_millis() as u64,
        })
    }
}

fn require(params: &Params, key: &str) -> Result<usize, VerifyError> {
    params
        .get(key)
        .copied()
        .ok_or_else(|| VerifyError::MissingParam(key.to_string()))
}

fn get_or(params: &Params, key: &str, default: usize) -> usize {
    params.get(key).copied().unwrap_or(default)
}

fn fail(n: usize, lhs: impl fmt::Display, rhs: impl fmt::Display) -> Option<FirstFailure> {
    Some(FirstFailure {
        n,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    })
}

/// Canonical text form of an encoded coefficient: bare strings lose their
/// JSON quotes, everything else keeps its compact JSON rendering.
fn encode_str(value: serde_json::Value) -> String {
    match value {
        serde_json::Value::String(s) => s,
        other => other.to_string(),
    }
}

/// First coefficient where the two series differ, rendered canonically.
fn first_diff<R: CoeffRing>(a: &QSeries<R>, b: &QSeries<R>) -> Option<FirstFailure> {
    for n in 0..=a.order() {
        if a.coeff(n) != b.coeff(n) {
            return fail(
                n,
                encode_str(a.ring().encode(a.coeff(n))),
                encode_str(b.ring().encode(b.coeff(n))),
            );
        }
    }
    None
}

/// Runs the check for `theorem` with the given parameters.
///
/// `n-max` is required. Sweep bounds default to `j` ≤ 4, `k` ≤ 4 (3 where the
/// result itself is stated for k ≤ 3), `d` ≤ 3, `c` ≤ 3, and the per-size
/// sweeps of the two proposition checks default to `n-max`; all are
/// overridable by the correspondingly named parameter. The report's `params`
/// records the resolved values actually used.
pub fn verify(theorem: TheoremId, params: &Params) -> Result<VerificationReport, VerifyError> {
    let n_max = require(params, "n-max")?;
    let start = Instant::now();
    let (used, failure) = match theorem {
        TheoremId::PartsVsRepeats => check_parts_vs_repeats(n_max, params),
        TheoremId::HooksVsParts => check_hooks_vs_parts(n_max, params),
        TheoremId::HanFk => check_han_fk(n_max, params),
        TheoremId::CprimeFormula => check_cprime_formula(n_max, params),
        TheoremId::CoeffComposition => check_coeff_composition(n_max, params),
        TheoremId::LinearEquivalence => check_linear_equivalence(n_max, params),
        TheoremId::GammaMoment => check_gamma_moment(n_max, params),
        TheoremId::HookPairLemma => check_hook_pair(n_max, params),
        TheoremId::TwoToOne => check_two_to_one(n_max, params),
        TheoremId::QuadraticEquivalence => check_quadratic(n_max, params),
        TheoremId::ManyMults => check_many_mults(n_max),
        TheoremId::H1H2 => check_h1h2(n_max),
        TheoremId::TruncationLimit => check_truncation_limit(n_max),
    };
    Ok(VerificationReport {
        theorem,
        params: used,
        status: if failure.is_none() {
            Status::Pass
        } else {
            Status::Fail
        },
        first_failure: failure,
        elapsed: start.elapsed(),
    })
}

/// Runs every theorem with default parameters, in canonical order.
pub fn verify_all(n_max: usize) -> Vec<VerificationReport> {
    ALL_THEOREMS
        .iter()
        .map(|&t| {
            let mut params = Params::new();
            params.insert("n-max".to_string(), n_max);
            verify(t, &params).expect("n-max is provided")
        })
        .collect()
}

fn params_of(entries: &[(&str, usize)]) -> Params {
    entries.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}

fn check_parts_vs_repeats(n_max: usize, params: &Params) -> (Params, Option<FirstFailure>) {
    let k_max = get_or(params, "k", n_max);
    let mut failure = None;
    'outer: for n in 0..=n_max {
        let totals = stat_totals(n);
        for k in 1..=k_max.min(n) {
            if totals.nu[k] != totals.gamma_geq[k] {
                failure = fail(n, totals.nu[k], totals.gamma_geq[k]);
                break 'outer;
            }
        }
    }
    (params_of(&[("n-max", n_max), ("k", k_max)]), failure)
}

fn check_hooks_vs_parts(n_max: usize, params: &Params) -> (Params, Option<FirstFailure>) {
    let i_max = get_or(params, "i", n_max);
    let mut failure = None;
    'outer: for n in 0..=n_max {
        let totals = stat_totals(n);
        for i in 1..=i_max.min(n) {
            if totals.hooks[i] != (i as u64) * totals.nu[i] {
                failure = fail(n, totals.hooks[i], (i as u64) * totals.nu[i]);
                break 'outer;
            }
        }
    }
    (params_of(&[("n-max", n_max), ("i", i_max)]), failure)
}

fn check_han_fk(n_max: usize, params: &Params) -> (Params, Option<FirstFailure>) {
    let k_max = get_or(params, "k", 4);
    let p: Vec<u64> = (0..=n_max).map(partition_count).collect();
    let mut failure = None;
    'outer: for k in 1..=k_max {
        let dist = han_u_distribution(k, n_max);
        for n in 0..=n_max {
            // direct histogram of H_k over the partitions of n
            let mut hist: Vec<u64> = Vec::new();
            for lam in enumerate_partitions(n) {
                let h = lam.stat_vector().hook_count(k);
                if hist.len() <= h {
                    hist.resize(h + 1, 0);
                }
                hist[h] += 1;
            }
            let row = &dist[n];
            let mut total = 0u64;
            for (a, f) in row.iter().enumerate() {
                let direct = hist.get(a).copied().unwrap_or(0);
                // recovered values must be the exact non-negative counts
                match f.to_u64() {
                    Some(v) if v == direct => total += v,
                    _ => {
                        failure = fail(n, f, direct);
                        break 'outer;
                    }
                }
            }
            if hist.iter().sum::<u64>() != total || total != p[n] {
                failure = fail(n, total, p[n]);
                break 'outer;
            }
        }
    }
    (params_of(&[("n-max", n_max), ("k", k_max)]), failure)
}

fn check_cprime_formula(n_max: usize, params: &Params) -> (Params, Option<FirstFailure>) {
    let j_max = get_or(params, "j", 4);
    let mut failure = None;
    for j in 1..=j_max {
        failure = first_diff(&cprime_truncated(j, n_max), &cprime_product_form(j, n_max));
        if failure.is_some() {
            break;
        }
    }
    (params_of(&[("n-max", n_max), ("j", j_max)]), failure)
}

fn check_coeff_composition(n_max: usize, params: &Params) -> (Params, Option<FirstFailure>) {
    let j_max = get_or(params, "j", 4);
    let c_max = get_or(params, "c", 3);
    let mut failure = None;
    'outer: for j in 1..=j_max {
        let hno = hno_truncated(j, n_max);
        let cp = cprime_truncated(j, n_max);
        for n in 0..=n_max {
            let hook = composition_coeffs(StatSide::Hook, j, c_max, n);
            let gamma = composition_coeffs(StatSide::Gamma, j, c_max, n);
            for c in 0..=c_max {
                if hook[c] != hno.coeff(n).coeff(c) {
                    failure = fail(n, &hook[c], hno.coeff(n).coeff(c));
                    break 'outer;
                }
                if gamma[c] != cp.coeff(n).coeff(c) {
                    failure = fail(n, &gamma[c], cp.coeff(n).coeff(c));
                    break 'outer;
                }
            }
        }
    }
    (
        params_of(&[("n-max", n_max), ("j", j_max), ("c", c_max)]),
        failure,
    )
}

fn check_linear_equivalence(n_max: usize, params: &Params) -> (Params, Option<FirstFailure>) {
    let j_max = get_or(params, "j", 4);
    let mut failure = None;
    'outer: for j in 1..=j_max {
        let hno = hno_truncated(j, n_max);
        let cp = cprime_truncated(j, n_max);
        for n in 0..=n_max {
            for c in 0..=1 {
                let (lhs, rhs) = (hno.coeff(n).coeff(c), cp.coeff(n).coeff(c));
                if lhs != rhs {
                    failure = fail(n, lhs, rhs);
                    break 'outer;
                }
            }
        }
    }
    (params_of(&[("n-max", n_max), ("j", j_max)]), failure)
}

fn check_gamma_moment(n_max: usize, params: &Params) -> (Params, Option<FirstFailure>) {
    let k_max = get_or(params, "k", 4);
    let d_max = get_or(params, "d", 3);
    let mut failure = None;
    'outer: for k in 1..=k_max {
        for d in 1..=d_max {
            let closed = gamma_moment_closed(k, d, n_max);
            let oracle = brute_stat_sum(&StatMoment::new(StatSide::Gamma, vec![(k, d)]), n_max);
            failure = first_diff(&closed, &oracle);
            if failure.is_some() {
                break 'outer;
            }
            // the lowest nonzero term must sit exactly at q^{k d(d+1)/2}
            let threshold = k * d * (d + 1) / 2;
            let expected = if threshold <= n_max {
                Some(threshold)
            } else {
                None
            };
            if closed.lowest_degree() != expected {
                failure = fail(
                    threshold.min(n_max),
                    format!("{:?}", closed.lowest_degree()),
                    format!("{expected:?}"),
                );
                break 'outer;
            }
        }
    }
    (
        params_of(&[("n-max", n_max), ("k", k_max), ("d", d_max)]),
        failure,
    )
}

fn check_hook_pair(n_max: usize, params: &Params) -> (Params, Option<FirstFailure>) {
    let k_max = get_or(params, "k", 3);
    let mut failure = None;
    for k in 1..=k_max {
        let closed = hook_pair_closed(k, n_max);
        let oracle = brute_stat_sum(&StatMoment::new(StatSide::Hook, vec![(k, 2)]), n_max);
        failure = first_diff(&closed, &oracle);
        if failure.is_some() {
            break;
        }
    }
    if failure.is_none() {
        // the simplified k=2 numerator form must match the general one
        failure = first_diff(&hook_pair_closed_k2_alt(n_max), &hook_pair_closed(2, n_max));
    }
    (params_of(&[("n-max", n_max), ("k", k_max)]), failure)
}

/// The mixed-moment matching, swept over the binomial degree on the hook-1
/// side. Stated for degrees above 1; the degree-1 instance is exercised here
/// as well and holds empirically (it is the relation the mixed-moment
/// corollary rests on).
fn check_two_to_one(n_max: usize, params: &Params) -> (Params, Option<FirstFailure>) {
    let k_max = get_or(params, "k", 3);
    let mut failure = None;
    for k in 1..=k_max {
        let hooks = brute_stat_sum(
            &StatMoment::new(StatSide::Hook, vec![(1, k), (2, 1)]),
            n_max,
        );
        let gammas = brute_stat_sum(
            &StatMoment::new(StatSide::Gamma, vec![(1, k), (2, 1)]),
            n_max,
        );
        failure = first_diff(&hooks, &gammas.scale(&Rat::from_int(2)));
        if failure.is_some() {
            break;
        }
    }
    (params_of(&[("n-max", n_max), ("k", k_max)]), failure)
}

/// The quadratic-gap comparison with an arbitrary scale on gamma_{>=4}(n);
/// the theorem is the `factor = 1/16` instance, and any other factor must
/// fail at the smallest n with gamma_{>=4}(n) > 0, which is n = 4.
pub fn quadratic_gap_check(n_max: usize, factor: &Rat) -> Option<FirstFailure> {
    let hno = hno_truncated(2, n_max);
    let cp = cprime_truncated(2, n_max);
    let g4 = brute_stat_sum(&StatMoment::new(StatSide::Gamma, vec![(4, 1)]), n_max);
    for n in 0..=n_max {
        let lhs = &hno.coeff(n).coeff(2) - &cp.coeff(n).coeff(2);
        let rhs = g4.coeff(n) * factor;
        if lhs != rhs {
            return fail(n, lhs, rhs);
        }
    }
    None
}

fn check_quadratic(n_max: usize, _params: &Params) -> (Params, Option<FirstFailure>) {
    let failure = quadratic_gap_check(n_max, &Rat::new(1, 16));
    (params_of(&[("n-max", n_max)]), failure)
}

/// Two instances of the mixed-moment theorem at thresholds (1, 2): the
/// coefficient of v1 v2, and of v1^2 v2, against the brute-force sums of
/// binom(gamma_{>=1}, d1) * binom(gamma_{>=2}, 1) for d1 = 1, 2.
fn check_many_mults(n_max: usize) -> (Params, Option<FirstFailure>) {
    let series = multiplicity_gf(&[1, 2], &[2, 1], n_max);
    let mut failure = None;
    'outer: for d1 in 1..=2 {
        let oracle = brute_stat_sum(
            &StatMoment::new(StatSide::Gamma, vec![(1, d1), (2, 1)]),
            n_max,
        );
        for n in 0..=n_max {
            let lhs = series.coeff(n).coeff(&[d1, 1]);
            if &lhs != oracle.coeff(n) {
                failure = fail(n, lhs, oracle.coeff(n));
                break 'outer;
            }
        }
    }
    (
        params_of(&[("n-max", n_max), ("k1", 1), ("k2", 2)]),
        failure,
    )
}

fn check_h1h2(n_max: usize) -> (Params, Option<FirstFailure>) {
    let closed = h1h2_closed(n_max);
    let oracle = brute_stat_sum(
        &StatMoment::new(StatSide::Hook, vec![(1, 1), (2, 1)]),
        n_max,
    );
    (params_of(&[("n-max", n_max)]), first_diff(&closed, &oracle))
}

/// For every n and every j with n <= j <= n-max, the q^n coefficient of the
/// multiplicity truncation at depth j equals that of the infinite product:
/// stabilization at the provable bound j >= n.
fn check_truncation_limit(n_max: usize) -> (Params, Option<FirstFailure>) {
    let limit = hno_infinite_product(n_max);
    let mut failure = None;
    'outer: for j in 1..=n_max.max(1) {
        let cp = cprime_truncated(j, n_max);
        for n in 0..=j.min(n_max) {
            if cp.coeff(n) != limit.coeff(n) {
                failure = fail(n, cp.coeff(n).to_json(), limit.coeff(n).to_json());
                break 'outer;
            }
        }
    }
    (params_of(&[("n-max", n_max)]), failure)
}
