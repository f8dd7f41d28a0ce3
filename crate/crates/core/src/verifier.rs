//! Executable forms of the regularity bounds and the structural facts around
//! them, each producing a [`CheckResult`], plus seeded randomized scans.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::complex::TAYLOR_GENERATOR_CAP;
use crate::decomposition::{associated_primes, format_prime, is_m_primary, InitialSegmentPrime, VariableSet};
use crate::error::{Error, Result};
use crate::extended::{ExtendedInt, Finite, NegInfinity};
use crate::field::{Field, FieldSpec};
use crate::format::to_inline;
use crate::ideal::MonomialIdeal;
use crate::invariants::{
    betti_table, reg_quotient_report, reg_weakly_stable_recursive, RegularityReport, WindowPolicy,
};
use crate::module::{GradedModule, Window};
use crate::monomial::{Monomial, MAX_VARS};
use crate::random::{random_monomial_ideal_with, random_weakly_stable_with, MAX_RANDOM_DEGREE};
use crate::stability::is_weakly_stable;
use crate::torext::{ext_regularities, finite_length_ext_law, tor_regularities, TorOptions};

/// Version of the JSON layout of [`CheckResult`] and [`ScanReport`].
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    TorBound,
    ExtBound,
    PowerBound,
    SesInequalities,
    Caviglia,
    ColonStability,
    SaturationClaim,
    FlatExtension,
    FiniteLengthTor,
    FiniteLengthExt,
    OracleEquivalence,
}

impl CheckKind {
    pub const ALL: [CheckKind; 11] = [
        CheckKind::TorBound,
        CheckKind::ExtBound,
        CheckKind::PowerBound,
        CheckKind::SesInequalities,
        CheckKind::Caviglia,
        CheckKind::ColonStability,
        CheckKind::SaturationClaim,
        CheckKind::FlatExtension,
        CheckKind::FiniteLengthTor,
        CheckKind::FiniteLengthExt,
        CheckKind::OracleEquivalence,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::TorBound => "tor-bound",
            CheckKind::ExtBound => "ext-bound",
            CheckKind::PowerBound => "power-bound",
            CheckKind::SesInequalities => "ses-inequalities",
            CheckKind::Caviglia => "caviglia",
            CheckKind::ColonStability => "colon-stability",
            CheckKind::SaturationClaim => "saturation-claim",
            CheckKind::FlatExtension => "flat-extension",
            CheckKind::FiniteLengthTor => "finite-length-tor",
            CheckKind::FiniteLengthExt => "finite-length-ext",
            CheckKind::OracleEquivalence => "oracle-equivalence",
        }
    }

    /// Number of ideals the check takes.
    pub fn arity(self) -> usize {
        match self {
            CheckKind::TorBound | CheckKind::ColonStability | CheckKind::FlatExtension | CheckKind::FiniteLengthTor => {
                2
            }
            _ => 1,
        }
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().replace('_', "-");
        CheckKind::ALL
            .into_iter()
            .find(|k| k.name() == t)
            .ok_or_else(|| Error::InvalidConfig(format!("unknown check {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Pass,
    /// A theorem check failed on inputs meeting its hypotheses.
    Fail,
    /// A statement failed on inputs outside its hypotheses (permissive mode).
    Finding,
    WindowUnstable,
    /// The inputs were rejected (scan only).
    Error,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub check: String,
    /// Canonical inline serializations of the inputs.
    pub inputs: BTreeMap<String, String>,
    pub values: Value,
    pub bound: Value,
    pub pass: bool,
    pub status: CheckStatus,
    pub window: Option<Window>,
    pub stabilized: bool,
    pub field: String,
    pub seed: Option<u64>,
    /// `bound - computed` for each inequality, `null` when the computed side
    /// is `-inf`.
    pub slack: Vec<Option<i64>>,
    pub message: Option<String>,
}

impl CheckResult {
    fn new(kind: CheckKind, inputs: &[(&str, &MonomialIdeal)], ctx: &CheckContext) -> Self {
        CheckResult {
            check: kind.name().to_string(),
            inputs: inputs.iter().map(|(k, v)| (k.to_string(), to_inline(v))).collect(),
            values: json!({}),
            bound: json!({}),
            pass: false,
            status: CheckStatus::Fail,
            window: None,
            stabilized: true,
            field: ctx.field.to_string(),
            seed: ctx.seed,
            slack: Vec::new(),
            message: None,
        }
    }

    /// Sets `pass` and derives the status; outside the hypotheses a failure
    /// is a finding.
    fn conclude(mut self, pass: bool, hypotheses_hold: bool) -> Self {
        self.pass = pass;
        self.status = match (pass, hypotheses_hold) {
            (true, _) => CheckStatus::Pass,
            (false, true) => CheckStatus::Fail,
            (false, false) => CheckStatus::Finding,
        };
        self
    }

    fn unstable(mut self, message: String) -> Self {
        self.pass = false;
        self.status = CheckStatus::WindowUnstable;
        self.stabilized = false;
        self.message = Some(message);
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CheckContext {
    pub field: FieldSpec,
    pub window: WindowPolicy,
    /// Run theorem checks on inputs outside their hypotheses and report
    /// violations as findings.
    pub permissive: bool,
    pub seed: Option<u64>,
    pub cross_check_symmetry: bool,
}

impl Default for CheckContext {
    fn default() -> Self {
        CheckContext {
            field: FieldSpec::default(),
            window: WindowPolicy::default(),
            permissive: false,
            seed: None,
            cross_check_symmetry: false,
        }
    }
}

impl CheckContext {
    pub fn with_field(field: FieldSpec) -> Self {
        CheckContext {
            field,
            ..Self::default()
        }
    }

    fn tor_options(&self) -> TorOptions {
        TorOptions {
            window: self.window,
            cross_check_symmetry: self.cross_check_symmetry,
            ..TorOptions::default()
        }
    }

    /// Whether all `ideals` are weakly stable; errors unless permissive.
    fn require_weakly_stable(&self, ideals: &[&MonomialIdeal]) -> Result<bool> {
        match ideals.iter().find(|i| !is_weakly_stable(i)) {
            None => Ok(true),
            Some(_) if self.permissive => Ok(false),
            Some(i) => Err(Error::NotWeaklyStable(to_inline(i))),
        }
    }
}

fn ext(v: ExtendedInt) -> Value {
    match v {
        Finite(x) => json!(x),
        other => json!(other.to_string()),
    }
}

fn exts(v: &[ExtendedInt]) -> Value {
    Value::Array(v.iter().map(|&x| ext(x)).collect())
}

fn slack(bound: ExtendedInt, value: ExtendedInt) -> Option<i64> {
    match (bound, value) {
        (Finite(b), Finite(v)) => Some(b - v),
        _ => None,
    }
}

/// Turns a window failure into a reported result; other errors propagate.
fn guard(base: &CheckResult, r: Result<CheckResult>) -> Result<CheckResult> {
    match r {
        Err(Error::WindowInstability(m)) | Err(Error::SymmetryMismatch(m)) => Ok(base.clone().unstable(m)),
        Err(e @ Error::WindowTooSmall { .. }) => Ok(base.clone().unstable(e.to_string())),
        other => other,
    }
}

fn quotient_report<F: Field>(f: &F, i: &MonomialIdeal, ctx: &CheckContext) -> Result<RegularityReport> {
    reg_quotient_report(f, i, &ctx.window)
}

/// `reg Tor_i(R/I, R/J) <= reg R/I + reg R/J + i` for `i = 0..=n`.
pub fn verify_tor_bound(i: &MonomialIdeal, j: &MonomialIdeal, ctx: &CheckContext) -> Result<CheckResult> {
    let ws = ctx.require_weakly_stable(&[i, j])?;
    let base = CheckResult::new(CheckKind::TorBound, &[("I", i), ("J", j)], ctx);
    let run = || -> Result<CheckResult> {
        crate::with_field!(ctx.field, f => {
            let ri = quotient_report(f, i, ctx)?;
            let rj = quotient_report(f, j, ctx)?;
            let tor = tor_regularities(f, i, j, &ctx.tor_options())?;
            let regs: Vec<ExtendedInt> = tor.iter().map(|r| r.reg).collect();
            let bounds: Vec<ExtendedInt> = (0..regs.len()).map(|k| (ri.reg + rj.reg).add_int(k as i64)).collect();
            let pass = regs.iter().zip(&bounds).all(|(r, b)| r <= b);
            let mut out = base.clone();
            out.values = json!({ "reg_R/I": ext(ri.reg), "reg_R/J": ext(rj.reg), "reg_tor": exts(&regs) });
            out.bound = json!({ "reg_tor": exts(&bounds) });
            out.slack = bounds.iter().zip(&regs).map(|(&b, &r)| slack(b, r)).collect();
            out.window = tor.first().map(|r| r.window);
            Ok(out.conclude(pass, ws))
        })
    };
    guard(&base, run())
}

/// `reg Ext^i(R/I, R) <= -i` for `i = 0..=n`.
pub fn verify_ext_bound(i: &MonomialIdeal, ctx: &CheckContext) -> Result<CheckResult> {
    let ws = ctx.require_weakly_stable(&[i])?;
    let base = CheckResult::new(CheckKind::ExtBound, &[("I", i)], ctx);
    let run = || -> Result<CheckResult> {
        crate::with_field!(ctx.field, f => {
            let reports = ext_regularities(f, i, &ctx.window)?;
            let regs: Vec<ExtendedInt> = reports.iter().map(|r| r.reg).collect();
            let bounds: Vec<ExtendedInt> = (0..regs.len()).map(|k| Finite(-(k as i64))).collect();
            let pass = regs.iter().zip(&bounds).all(|(r, b)| r <= b);
            let mut out = base.clone();
            out.values = json!({ "reg_ext": exts(&regs) });
            out.bound = json!({ "reg_ext": exts(&bounds) });
            out.slack = bounds.iter().zip(&regs).map(|(&b, &r)| slack(b, r)).collect();
            out.window = reports.first().map(|r| r.window);
            Ok(out.conclude(pass, ws))
        })
    };
    guard(&base, run())
}

/// `reg I^2 <= 2 reg I`.
pub fn verify_power_bound(i: &MonomialIdeal, ctx: &CheckContext) -> Result<CheckResult> {
    let ws = ctx.require_weakly_stable(&[i])?;
    let base = CheckResult::new(CheckKind::PowerBound, &[("I", i)], ctx);
    let run = || -> Result<CheckResult> {
        crate::with_field!(ctx.field, f => {
            let i2 = i.power(2)?;
            let reg_i = quotient_report(f, i, ctx)?.reg.add_int(1);
            let reg_i2 = quotient_report(f, &i2, ctx)?.reg.add_int(1);
            let bound = match reg_i {
                Finite(x) => Finite(2 * x),
                other => other,
            };
            let mut out = base.clone();
            out.values = json!({ "reg_I": ext(reg_i), "reg_I^2": ext(reg_i2) });
            out.bound = json!({ "reg_I^2": ext(bound) });
            out.slack = vec![slack(bound, reg_i2)];
            Ok(out.conclude(reg_i2 <= bound, ws))
        })
    };
    guard(&base, run())
}

/// The three inequalities for `0 -> I^2 -> I -> Tor_1(R/I, R/I) -> 0`.
pub fn verify_ses_inequalities(i: &MonomialIdeal, ctx: &CheckContext) -> Result<CheckResult> {
    let ws = ctx.require_weakly_stable(&[i])?;
    let base = CheckResult::new(CheckKind::SesInequalities, &[("I", i)], ctx);
    let run = || -> Result<CheckResult> {
        crate::with_field!(ctx.field, f => {
            let l = quotient_report(f, &i.power(2)?, ctx)?.reg.add_int(1);
            let m = quotient_report(f, i, ctx)?.reg.add_int(1);
            let n = tor_regularities(f, i, i, &ctx.tor_options())?[1].reg;
            let bounds = [l.max(n), m.max(n.add_int(1)), m.max(l.add_int(-1))];
            let lhs = [m, l, n];
            let pass = lhs.iter().zip(&bounds).all(|(a, b)| a <= b);
            let mut out = base.clone();
            out.values = json!({ "reg_L": ext(l), "reg_M": ext(m), "reg_N": ext(n) });
            out.bound = json!({
                "reg_M <= max(reg_L, reg_N)": ext(bounds[0]),
                "reg_L <= max(reg_M, reg_N + 1)": ext(bounds[1]),
                "reg_N <= max(reg_M, reg_L - 1)": ext(bounds[2]),
            });
            out.slack = bounds.iter().zip(&lhs).map(|(&b, &a)| slack(b, a)).collect();
            Ok(out.conclude(pass, ws))
        })
    };
    guard(&base, run())
}

fn primes_of(i: &MonomialIdeal) -> Result<Vec<VariableSet>> {
    if i.is_unit() {
        return Ok(Vec::new());
    }
    if i.is_zero() {
        return Ok(vec![VariableSet::new()]);
    }
    Ok(associated_primes(i)?.into_iter().collect())
}

/// Weakly stable if and only if every associated prime is `(x_1, …, x_t)`.
pub fn verify_caviglia(i: &MonomialIdeal, ctx: &CheckContext) -> Result<CheckResult> {
    let mut out = CheckResult::new(CheckKind::Caviglia, &[("I", i)], ctx);
    let ws = is_weakly_stable(i);
    let primes = primes_of(i)?;
    let initial = primes.iter().all(|p| InitialSegmentPrime::from_support(p).is_some());
    out.values = json!({
        "weakly_stable": ws,
        "associated_primes": primes.iter().map(format_prime).collect::<Vec<_>>(),
        "all_initial_segments": initial,
    });
    Ok(out.conclude(ws == initial, true))
}

/// `(I : J)` is weakly stable when `I` is.
pub fn verify_colon_stability(i: &MonomialIdeal, j: &MonomialIdeal, ctx: &CheckContext) -> Result<CheckResult> {
    let ws = ctx.require_weakly_stable(&[i])?;
    let mut out = CheckResult::new(CheckKind::ColonStability, &[("I", i), ("J", j)], ctx);
    let colon = i.colon(j)?;
    let pass = is_weakly_stable(&colon);
    out.values = json!({ "colon": to_inline(&colon), "colon_weakly_stable": pass });
    Ok(out.conclude(pass, ws))
}

/// `∪ (I : m^k) = ∪ (I : x_n^k)` for weakly stable `I`.
pub fn verify_saturation_claim(i: &MonomialIdeal, ctx: &CheckContext) -> Result<CheckResult> {
    let ws = ctx.require_weakly_stable(&[i])?;
    let mut out = CheckResult::new(CheckKind::SaturationClaim, &[("I", i)], ctx);
    let by_m = i.saturate_maximal()?;
    let by_x = i.saturate_variable(i.n() - 1)?;
    out.values = json!({ "saturation_by_m": to_inline(&by_m), "saturation_by_xn": to_inline(&by_x) });
    Ok(out.conclude(by_m == by_x, ws))
}

/// Tor regularities do not change when `I` and `J` (not involving `x_n`) are
/// read in one variable fewer.
pub fn verify_flat_extension(i: &MonomialIdeal, j: &MonomialIdeal, ctx: &CheckContext) -> Result<CheckResult> {
    let n = i.n();
    if n < 2 {
        return Err(Error::VariableCount(n));
    }
    let (si, sj) = (i.restrict()?, j.restrict()?);
    let base = CheckResult::new(CheckKind::FlatExtension, &[("I", i), ("J", j)], ctx);
    let run = || -> Result<CheckResult> {
        crate::with_field!(ctx.field, f => {
            let big: Vec<ExtendedInt> = tor_regularities(f, i, j, &ctx.tor_options())?.iter().map(|r| r.reg).collect();
            let mut small: Vec<ExtendedInt> = tor_regularities(f, &si, &sj, &ctx.tor_options())?.iter().map(|r| r.reg).collect();
            small.push(NegInfinity);
            let mut out = base.clone();
            out.values = json!({ "reg_tor_n": exts(&big), "reg_tor_n_minus_1": exts(&small) });
            Ok(out.conclude(big == small, true))
        })
    };
    guard(&base, run())
}

/// `reg Tor_i(R/Q, R/J) <= reg R/Q + t_i(R/J)` for `m`-primary `Q`.
pub fn verify_finite_length_tor(q: &MonomialIdeal, j: &MonomialIdeal, ctx: &CheckContext) -> Result<CheckResult> {
    if !is_m_primary(q) {
        return Err(Error::NotFiniteLength(to_inline(q)));
    }
    let base = CheckResult::new(CheckKind::FiniteLengthTor, &[("Q", q), ("J", j)], ctx);
    let run = || -> Result<CheckResult> {
        crate::with_field!(ctx.field, f => {
            let rq = quotient_report(f, q, ctx)?.reg;
            let bj = betti_table(&GradedModule::quotient_ring(f.clone(), j)?)?;
            let regs: Vec<ExtendedInt> = tor_regularities(f, q, j, &ctx.tor_options())?.iter().map(|r| r.reg).collect();
            let bounds: Vec<ExtendedInt> = (0..regs.len()).map(|k| rq + bj.t(k)).collect();
            let pass = regs.iter().zip(&bounds).all(|(r, b)| r <= b);
            let mut out = base.clone();
            out.values = json!({ "reg_R/Q": ext(rq), "t_R/J": exts(&(0..regs.len()).map(|k| bj.t(k)).collect::<Vec<_>>()), "reg_tor": exts(&regs) });
            out.bound = json!({ "reg_tor": exts(&bounds) });
            out.slack = bounds.iter().zip(&regs).map(|(&b, &r)| slack(b, r)).collect();
            Ok(out.conclude(pass, true))
        })
    };
    guard(&base, run())
}

/// `Ext^i(R/Q, R) = 0` for `i < n` and `reg Ext^n(R/Q, R) = -n - inf R/Q`.
pub fn verify_finite_length_ext(q: &MonomialIdeal, ctx: &CheckContext) -> Result<CheckResult> {
    let mut out = CheckResult::new(CheckKind::FiniteLengthExt, &[("Q", q)], ctx);
    crate::with_field!(ctx.field, f => {
        let m = GradedModule::quotient_ring(f.clone(), q)?;
        let c = finite_length_ext_law(&m)?;
        out.values = json!({ "inf": ext(c.inf), "sup": ext(c.sup), "reg_ext": exts(&c.ext_regularities) });
        out.bound = json!({ "reg_ext_top": ext(c.expected_top) });
        Ok(out.conclude(c.pass, true))
    })
}

/// The Koszul-route `reg R/I` equals the combinatorial recursion.
pub fn verify_oracle_equivalence(i: &MonomialIdeal, ctx: &CheckContext) -> Result<CheckResult> {
    if !is_weakly_stable(i) {
        return Err(Error::NotWeaklyStable(to_inline(i)));
    }
    let base = CheckResult::new(CheckKind::OracleEquivalence, &[("I", i)], ctx);
    let run = || -> Result<CheckResult> {
        crate::with_field!(ctx.field, f => {
            let koszul = quotient_report(f, i, ctx)?;
            let recursive = reg_weakly_stable_recursive(i)?;
            let mut out = base.clone();
            out.values = json!({ "reg_koszul": ext(koszul.reg), "reg_recursive": ext(recursive) });
            out.window = Some(koszul.window);
            Ok(out.conclude(koszul.reg == recursive, true))
        })
    };
    guard(&base, run())
}

/// An `m`-primary ideal containing `I`: `I + (x_1^d, …, x_n^d)`.
pub fn m_primary_hull(i: &MonomialIdeal, d: u32) -> Result<MonomialIdeal> {
    let powers = (0..i.n())
        .map(|v| Monomial::var_power(i.n(), v, d))
        .collect::<Result<Vec<_>>>()?;
    i.sum(&MonomialIdeal::minimalize(powers, i.n())?)
}

/// Runs one check on the given ideals (one or two, per [`CheckKind::arity`]).
pub fn run_check(kind: CheckKind, ideals: &[&MonomialIdeal], ctx: &CheckContext) -> Result<CheckResult> {
    if ideals.len() != kind.arity() {
        return Err(Error::InvalidConfig(format!(
            "check {kind} takes {} ideal(s), got {}",
            kind.arity(),
            ideals.len()
        )));
    }
    let i = ideals[0];
    let j = ideals.get(1).copied();
    match kind {
        CheckKind::TorBound => verify_tor_bound(i, j.unwrap(), ctx),
        CheckKind::ExtBound => verify_ext_bound(i, ctx),
        CheckKind::PowerBound => verify_power_bound(i, ctx),
        CheckKind::SesInequalities => verify_ses_inequalities(i, ctx),
        CheckKind::Caviglia => verify_caviglia(i, ctx),
        CheckKind::ColonStability => verify_colon_stability(i, j.unwrap(), ctx),
        CheckKind::SaturationClaim => verify_saturation_claim(i, ctx),
        CheckKind::FlatExtension => verify_flat_extension(i, j.unwrap(), ctx),
        CheckKind::FiniteLengthTor => verify_finite_length_tor(i, j.unwrap(), ctx),
        CheckKind::FiniteLengthExt => verify_finite_length_ext(i, ctx),
        CheckKind::OracleEquivalence => verify_oracle_equivalence(i, ctx),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanConfig {
    pub seed: u64,
    pub count: usize,
    pub n_min: usize,
    pub n_max: usize,
    /// Largest degree of a drawn generator.
    pub max_degree: u32,
    /// Range for the number of monomials drawn per ideal.
    pub draws_min: usize,
    pub draws_max: usize,
    /// Weakly stable completions with more generators are redrawn.
    pub max_generators: usize,
    pub field: FieldSpec,
    pub checks: Vec<CheckKind>,
    /// Draw general monomial ideals instead of weakly stable completions.
    pub general: bool,
    pub permissive: bool,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            seed: 0,
            count: 200,
            n_min: 2,
            n_max: 4,
            max_degree: 4,
            draws_min: 1,
            draws_max: 4,
            max_generators: 8,
            field: FieldSpec::default(),
            checks: vec![CheckKind::TorBound],
            general: false,
            permissive: false,
        }
    }
}

impl ScanConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidConfig(m));
        if self.count == 0 {
            return bad("count must be positive".into());
        }
        if self.n_min == 0 || self.n_min > self.n_max || self.n_max > MAX_VARS {
            return bad(format!(
                "variable range {}..={} outside 1..={MAX_VARS}",
                self.n_min, self.n_max
            ));
        }
        if self.max_degree == 0 || self.max_degree > MAX_RANDOM_DEGREE {
            return bad(format!(
                "max degree {} outside 1..={MAX_RANDOM_DEGREE}",
                self.max_degree
            ));
        }
        if self.draws_min == 0 || self.draws_min > self.draws_max || self.draws_max > TAYLOR_GENERATOR_CAP {
            return bad(format!(
                "draw range {}..={} outside 1..={TAYLOR_GENERATOR_CAP}",
                self.draws_min, self.draws_max
            ));
        }
        if self.max_generators == 0 || self.max_generators > TAYLOR_GENERATOR_CAP {
            return bad(format!(
                "max generators {} outside 1..={TAYLOR_GENERATOR_CAP}",
                self.max_generators
            ));
        }
        if self.checks.is_empty() {
            return bad("no checks selected".into());
        }
        if self.checks.contains(&CheckKind::FlatExtension) && self.n_min < 2 {
            return bad("flat-extension needs at least 2 variables".into());
        }
        Ok(())
    }

    /// Seed of item `k`, so every item can be regenerated on its own.
    pub fn item_seed(&self, k: usize) -> u64 {
        let mut z = self.seed ^ (k as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15);
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    fn draw(&self, rng: &mut ChaCha8Rng, n: usize) -> Result<MonomialIdeal> {
        let draws = rng.gen_range(self.draws_min..=self.draws_max);
        if self.general {
            random_monomial_ideal_with(rng, n, self.max_degree, draws)
        } else {
            random_weakly_stable_with(rng, n, self.max_degree, draws, self.max_generators)
        }
    }

    /// The ideals of item `k` for one check.
    pub fn item_inputs(&self, k: usize, kind: CheckKind) -> Result<Vec<MonomialIdeal>> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.item_seed(k));
        let n = rng.gen_range(self.n_min..=self.n_max);
        let i = self.draw(&mut rng, n)?;
        let j = self.draw(&mut rng, n)?;
        Ok(match kind {
            CheckKind::FlatExtension => {
                let small_i = self.draw(&mut rng, n - 1)?;
                let small_j = self.draw(&mut rng, n - 1)?;
                vec![small_i.extend(n)?, small_j.extend(n)?]
            }
            CheckKind::FiniteLengthTor => vec![m_primary_hull(&i, self.max_degree)?, j],
            CheckKind::FiniteLengthExt => vec![m_primary_hull(&i, self.max_degree)?],
            k if k.arity() == 2 => vec![i, j],
            _ => vec![i],
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ScanSummary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub finding: usize,
    pub window_unstable: usize,
    pub error: usize,
    /// Per check, how often each slack value occurred.
    pub slack_histograms: BTreeMap<String, BTreeMap<i64, u64>>,
    /// Per check, how many results met some inequality with equality.
    pub equality_cases: BTreeMap<String, u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScanReport {
    pub schema_version: u32,
    pub config: ScanConfig,
    pub results: Vec<CheckResult>,
    pub summary: ScanSummary,
}

impl ScanReport {
    /// Whether some theorem check failed on inputs meeting its hypotheses.
    pub fn has_failures(&self) -> bool {
        self.summary.fail > 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}

fn error_result(kind: CheckKind, ideals: &[MonomialIdeal], ctx: &CheckContext, e: &Error) -> CheckResult {
    let names = ["I", "J"];
    let inputs: Vec<(&str, &MonomialIdeal)> = names.iter().copied().zip(ideals).collect();
    let mut r = CheckResult::new(kind, &inputs, ctx);
    r.status = CheckStatus::Error;
    r.message = Some(e.to_string());
    r
}

/// Runs every selected check on `count` seeded items. Items are evaluated in
/// parallel and merged in input order, so the report depends only on the
/// configuration.
pub fn scan(config: &ScanConfig) -> Result<ScanReport> {
    config.validate()?;
    let per_item: Vec<Vec<CheckResult>> = (0..config.count)
        .into_par_iter()
        .map(|k| {
            let ctx = CheckContext {
                field: config.field,
                permissive: config.permissive,
                seed: Some(config.item_seed(k)),
                ..CheckContext::default()
            };
            config
                .checks
                .iter()
                .map(|&kind| {
                    let ideals = match config.item_inputs(k, kind) {
                        Ok(v) => v,
                        Err(e) => return error_result(kind, &[], &ctx, &e),
                    };
                    let refs: Vec<&MonomialIdeal> = ideals.iter().collect();
                    run_check(kind, &refs, &ctx).unwrap_or_else(|e| error_result(kind, &ideals, &ctx, &e))
                })
                .collect()
        })
        .collect();
    let results: Vec<CheckResult> = per_item.into_iter().flatten().collect();
    let mut summary = ScanSummary {
        total: results.len(),
        ..ScanSummary::default()
    };
    for r in &results {
        match r.status {
            CheckStatus::Pass => summary.pass += 1,
            CheckStatus::Fail => summary.fail += 1,
            CheckStatus::Finding => summary.finding += 1,
            CheckStatus::WindowUnstable => summary.window_unstable += 1,
            CheckStatus::Error => summary.error += 1,
        }
        let hist = summary.slack_histograms.entry(r.check.clone()).or_default();
        for s in r.slack.iter().flatten() {
            *hist.entry(*s).or_insert(0) += 1;
        }
        if r.slack.iter().any(|s| *s == Some(0)) {
            *summary.equality_cases.entry(r.check.clone()).or_insert(0) += 1;
        }
    }
    Ok(ScanReport {
        schema_version: SCHEMA_VERSION,
        config: config.clone(),
        results,
        summary,
    })
}

/// Stanley–Reisner ideal of the six-vertex triangulation of the real
/// projective plane. Its Betti numbers depend on the characteristic.
pub fn rp2_ideal() -> MonomialIdeal {
    const FACES: [[usize; 3]; 10] = [
        [0, 1, 2],
        [0, 2, 3],
        [0, 3, 4],
        [0, 4, 5],
        [0, 5, 1],
        [1, 2, 4],
        [2, 3, 5],
        [3, 4, 1],
        [4, 5, 2],
        [5, 1, 3],
    ];
    let mut gens = Vec::new();
    for a in 0..6 {
        for b in (a + 1)..6 {
            for c in (b + 1)..6 {
                let is_face = FACES.iter().any(|f| f.contains(&a) && f.contains(&b) && f.contains(&c));
                if !is_face {
                    let mut e = [0u32; 6];
                    e[a] = 1;
                    e[b] = 1;
                    e[c] = 1;
                    gens.push(Monomial::new(&e).unwrap());
                }
            }
        }
    }
    MonomialIdeal::minimalize(gens, 6).unwrap()
}

/// Exploratory comparison of `reg R/I`, `reg I` and `reg I^2` for
/// [`rp2_ideal`] over `Q` and `F_2`. Never a failure: violations of
/// `reg I^2 <= 2 reg I` are reported as findings.
pub fn adversarial_characteristic_check() -> Result<CheckResult> {
    let i = rp2_ideal();
    let ctx = CheckContext {
        field: FieldSpec::prime(2)?,
        permissive: true,
        ..CheckContext::default()
    };
    let mut out = CheckResult::new(CheckKind::PowerBound, &[("I", &i)], &ctx);
    out.check = "adversarial-characteristic".into();
    let mut values = serde_json::Map::new();
    let mut holds = true;
    for spec in [FieldSpec::RATIONALS, FieldSpec::prime(2)?] {
        let (ri, ri2) = crate::with_field!(spec, f => {
            let policy = WindowPolicy::default();
            let ri = reg_quotient_report(f, &i, &policy)?.reg.add_int(1);
            let ri2 = reg_quotient_report(f, &i.power(2)?, &policy)?.reg.add_int(1);
            (ri, ri2)
        });
        holds &= match (ri, ri2) {
            (Finite(a), Finite(b)) => b <= 2 * a,
            _ => true,
        };
        values.insert(spec.to_string(), json!({ "reg_I": ext(ri), "reg_I^2": ext(ri2) }));
    }
    out.values = Value::Object(values);
    Ok(out.conclude(holds, false))
}
