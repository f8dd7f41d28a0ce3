use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use monoreg::decomposition::format_prime;
use monoreg::format::{parse_generators, parse_ideal, to_inline};
use monoreg::invariants::{reg_quotient_report, restrict_window};
use monoreg::stability::stability_witness;
use monoreg::torext::{ext_regularities, tor_regularities};
use monoreg::verifier::run_check;
use monoreg::{
    associated_primes, betti_table, irreducible_decomposition, reg_weakly_stable_recursive, scan, CheckContext,
    CheckKind, CheckStatus, Error, ExtendedInt, FieldSpec, GradedModule, MonomialIdeal, ScanConfig, TorOptions,
    TorRoute, Window, WindowPolicy,
};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_WINDOW: u8 = 3;

#[derive(Parser)]
#[command(name = "monoreg", version, about = "Regularity of Tor and Ext for monomial ideals")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Number of variables for inline generator lists.
    #[arg(long, global = true)]
    vars: Option<usize>,
    /// Field characteristic: 0 for QQ, or a prime.
    #[arg(long = "char", global = true, conflicts_with = "field")]
    characteristic: Option<u64>,
    /// Field by name: QQ, GF(p), or a characteristic.
    #[arg(long, global = true)]
    field: Option<FieldSpec>,
    /// Initial total-degree window, as LO:HI.
    #[arg(long, global = true, value_parser = parse_window)]
    window: Option<Window>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker thread cap.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Run theorem checks outside their hypotheses and report findings.
    #[arg(long, global = true)]
    permissive: bool,
    /// Compute Tor from both sides and compare.
    #[arg(long, global = true)]
    cross_check_symmetry: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Test the exchange property on the generators.
    CheckStability { ideal: String },
    /// Castelnuovo-Mumford regularity of R/I (or of I with --ideal-reg).
    Reg {
        ideal: String,
        /// Report reg I instead of reg R/I.
        #[arg(long)]
        ideal_reg: bool,
        /// Use the combinatorial recursion (weakly stable input only).
        #[arg(long)]
        recursive: bool,
    },
    /// Graded Betti table of R/I.
    Betti { ideal: String },
    /// reg Tor_i(R/I, R/J).
    TorReg {
        i: String,
        j: String,
        #[arg(long = "i")]
        index: Option<usize>,
        /// Tensor two Taylor complexes instead of resolving one side.
        #[arg(long)]
        taylor_taylor: bool,
    },
    /// reg Ext^i(R/I, R).
    ExtReg {
        i: String,
        #[arg(long = "i")]
        index: Option<usize>,
    },
    /// Associated primes.
    Ass { ideal: String },
    /// Irreducible decomposition.
    Decompose { ideal: String },
    /// Run one theorem check.
    Verify {
        check: CheckKind,
        #[arg(num_args = 1..=2, required = true)]
        ideals: Vec<String>,
    },
    /// Seeded random scan over theorem checks.
    Scan(ScanArgs),
}

#[derive(Args)]
struct ScanArgs {
    /// JSON scan configuration; flags below override it.
    #[arg(long)]
    config: Option<String>,
    #[arg(long)]
    count: Option<usize>,
    #[arg(long)]
    n_min: Option<usize>,
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long)]
    max_degree: Option<u32>,
    #[arg(long)]
    draws_min: Option<usize>,
    #[arg(long)]
    draws_max: Option<usize>,
    #[arg(long)]
    max_generators: Option<usize>,
    /// Comma-separated check names.
    #[arg(long, value_delimiter = ',')]
    checks: Vec<CheckKind>,
    /// Draw general monomial ideals instead of weakly stable ones.
    #[arg(long)]
    general: bool,
}

fn parse_window(s: &str) -> Result<Window, String> {
    let (lo, hi) = s.split_once(':').ok_or("expected LO:HI")?;
    let lo: i32 = lo.trim().parse().map_err(|e| format!("{e}"))?;
    let hi: i32 = hi.trim().parse().map_err(|e| format!("{e}"))?;
    Window::new(lo, hi).map_err(|e| e.to_string())
}

enum Failure {
    Usage(String),
    Window(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::WindowInstability(_) | Error::WindowTooSmall { .. } | Error::SymmetryMismatch(_) => {
                Failure::Window(e.to_string())
            }
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(String, u8), Failure>;

impl Global {
    fn field(&self) -> Result<FieldSpec, Failure> {
        match (self.characteristic, self.field) {
            (Some(c), _) => Ok(FieldSpec::new(c)?),
            (None, Some(f)) => Ok(f),
            (None, None) => Ok(FieldSpec::default()),
        }
    }

    fn policy(&self) -> WindowPolicy {
        WindowPolicy::with_initial(self.window)
    }

    fn context(&self) -> Result<CheckContext, Failure> {
        Ok(CheckContext {
            field: self.field()?,
            window: self.policy(),
            permissive: self.permissive,
            seed: self.seed,
            cross_check_symmetry: self.cross_check_symmetry,
        })
    }

    /// An ideal from a file path, `-` for stdin, or an inline generator
    /// list. The flag says whether the ring size was inferred.
    fn ideal_source(&self, src: &str) -> Result<(MonomialIdeal, bool), Failure> {
        let from_file = |text: &str| -> Result<(MonomialIdeal, bool), Failure> {
            if text.lines().any(|l| l.trim_start().starts_with("vars:")) {
                let i = parse_ideal(text)?;
                match self.vars {
                    Some(n) if n != i.n() => Err(Error::AmbientMismatch { left: n, right: i.n() }.into()),
                    _ => Ok((i, false)),
                }
            } else {
                Ok((parse_generators(text, self.vars)?, self.vars.is_none()))
            }
        };
        if src == "-" {
            let mut text = String::new();
            io::stdin().read_to_string(&mut text)?;
            return from_file(&text);
        }
        if Path::new(src).is_file() {
            return from_file(&fs::read_to_string(src)?);
        }
        Ok((parse_generators(src, self.vars)?, self.vars.is_none()))
    }

    /// Ideals of one invocation; inferred ring sizes are raised to the
    /// largest one so that inline lists can be mixed.
    fn ideals(&self, srcs: &[&str]) -> Result<Vec<MonomialIdeal>, Failure> {
        let parsed = srcs
            .iter()
            .map(|s| self.ideal_source(s))
            .collect::<Result<Vec<_>, _>>()?;
        let n = parsed.iter().map(|(i, _)| i.n()).max().unwrap_or(1);
        let n = parsed.iter().find(|(_, inferred)| !inferred).map_or(n, |(i, _)| i.n());
        parsed
            .into_iter()
            .map(|(i, inferred)| match i.n() {
                m if m == n => Ok(i),
                m if inferred && m < n => Ok(i.extend(n)?),
                m => Err(Error::AmbientMismatch { left: n, right: m }.into()),
            })
            .collect()
    }

    fn ideal(&self, src: &str) -> Result<MonomialIdeal, Failure> {
        Ok(self.ideals(&[src])?.remove(0))
    }

    fn pair(&self, a: &str, b: &str) -> Result<(MonomialIdeal, MonomialIdeal), Failure> {
        let mut v = self.ideals(&[a, b])?;
        let j = v.pop().unwrap();
        Ok((v.pop().unwrap(), j))
    }

    fn emit(&self, text: String, value: Value) -> String {
        if self.json {
            serde_json::to_string_pretty(&value).expect("serializable") + "\n"
        } else {
            text
        }
    }
}

fn ext_json(v: ExtendedInt) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn check_stability(g: &Global, src: &str) -> Outcome {
    let i = g.ideal(src)?;
    let witness = stability_witness(&i);
    let mut text = format!("weakly stable: {}\n", witness.is_none());
    if let Some((u, j)) = &witness {
        text.push_str(&format!("witness: {u} with x{}\n", j + 1));
    }
    let value = json!({
        "ideal": to_inline(&i),
        "weakly_stable": witness.is_none(),
        "witness": witness.map(|(u, j)| json!({"generator": u.to_string(), "variable": format!("x{}", j + 1)})),
    });
    Ok((g.emit(text, value), 0))
}

fn reg(g: &Global, src: &str, ideal_reg: bool, recursive: bool) -> Outcome {
    let i = g.ideal(src)?;
    let field = g.field()?;
    let (value, report) = if recursive {
        (reg_weakly_stable_recursive(&i)?, None)
    } else {
        let r = monoreg::with_field!(field, f => reg_quotient_report(f, &i, &g.policy()))?;
        (r.reg, Some(r))
    };
    let value = if ideal_reg { value.add_int(1) } else { value };
    let json = json!({
        "ideal": to_inline(&i),
        "of": if ideal_reg { "ideal" } else { "quotient" },
        "method": if recursive { "recursive" } else { "koszul" },
        "field": field.to_string(),
        "reg": ext_json(value),
        "report": report,
    });
    Ok((g.emit(format!("{value}\n"), json), 0))
}

fn betti(g: &Global, src: &str) -> Outcome {
    let i = g.ideal(src)?;
    let field = g.field()?;
    let table = monoreg::with_field!(field, f => {
        let m = GradedModule::quotient_ring(f.clone(), &i)?;
        let m = match g.window {
            Some(w) => restrict_window(&m, w),
            None => m,
        };
        betti_table(&m)
    })?;
    let json = json!({"ideal": to_inline(&i), "field": field.to_string(), "betti": table});
    Ok((g.emit(table.to_text(), json), 0))
}

fn listing(values: &[ExtendedInt], index: Option<usize>, name: &str) -> String {
    match index {
        Some(k) => format!("{}\n", values.get(k).copied().unwrap_or(ExtendedInt::NegInfinity)),
        None => values
            .iter()
            .enumerate()
            .map(|(k, v)| format!("{name}_{k}: {v}\n"))
            .collect(),
    }
}

fn tor_reg(g: &Global, a: &str, b: &str, index: Option<usize>, taylor_taylor: bool) -> Outcome {
    let (i, j) = g.pair(a, b)?;
    let field = g.field()?;
    let opts = TorOptions {
        route: if taylor_taylor {
            TorRoute::TaylorTaylor
        } else {
            TorRoute::ResolveOneSide
        },
        window: g.policy(),
        cross_check_symmetry: g.cross_check_symmetry,
    };
    let reports = monoreg::with_field!(field, f => tor_regularities(f, &i, &j, &opts))?;
    let regs: Vec<ExtendedInt> = reports.iter().map(|r| r.reg).collect();
    let json = json!({
        "I": to_inline(&i),
        "J": to_inline(&j),
        "field": field.to_string(),
        "i": index,
        "reg": match index {
            Some(k) => ext_json(regs.get(k).copied().unwrap_or(ExtendedInt::NegInfinity)),
            None => Value::Array(regs.iter().map(|&v| ext_json(v)).collect()),
        },
        "reports": reports,
    });
    Ok((g.emit(listing(&regs, index, "Tor"), json), 0))
}

fn ext_reg(g: &Global, a: &str, index: Option<usize>) -> Outcome {
    let i = g.ideal(a)?;
    let field = g.field()?;
    let reports = monoreg::with_field!(field, f => ext_regularities(f, &i, &g.policy()))?;
    let regs: Vec<ExtendedInt> = reports.iter().map(|r| r.reg).collect();
    let json = json!({
        "I": to_inline(&i),
        "field": field.to_string(),
        "i": index,
        "reg": match index {
            Some(k) => ext_json(regs.get(k).copied().unwrap_or(ExtendedInt::NegInfinity)),
            None => Value::Array(regs.iter().map(|&v| ext_json(v)).collect()),
        },
        "reports": reports,
    });
    Ok((g.emit(listing(&regs, index, "Ext"), json), 0))
}

fn ass(g: &Global, src: &str) -> Outcome {
    let i = g.ideal(src)?;
    let primes: Vec<String> = associated_primes(&i)?.iter().map(format_prime).collect();
    let text = primes.iter().map(|p| format!("{p}\n")).collect();
    Ok((
        g.emit(text, json!({"ideal": to_inline(&i), "associated_primes": primes})),
        0,
    ))
}

fn decompose(g: &Global, src: &str) -> Outcome {
    let i = g.ideal(src)?;
    let parts: Vec<String> = irreducible_decomposition(&i)?.iter().map(|q| q.to_string()).collect();
    let text = parts.iter().map(|p| format!("{p}\n")).collect();
    Ok((g.emit(text, json!({"ideal": to_inline(&i), "components": parts})), 0))
}

fn status_code(s: CheckStatus) -> u8 {
    match s {
        CheckStatus::Pass | CheckStatus::Finding => 0,
        CheckStatus::Fail => EXIT_FAIL,
        CheckStatus::WindowUnstable => EXIT_WINDOW,
        CheckStatus::Error => EXIT_USAGE,
    }
}

fn verify(g: &Global, kind: CheckKind, srcs: &[String]) -> Outcome {
    if srcs.len() != kind.arity() {
        return Err(Failure::Usage(format!(
            "{} takes {} ideal(s), got {}",
            kind.name(),
            kind.arity(),
            srcs.len()
        )));
    }
    let srcs: Vec<&str> = srcs.iter().map(String::as_str).collect();
    let ideals = g.ideals(&srcs)?;
    let refs: Vec<&MonomialIdeal> = ideals.iter().collect();
    let r = run_check(kind, &refs, &g.context()?)?;
    let text = if g.json {
        r.to_json() + "\n"
    } else {
        let mut t = format!(
            "{}: {}\n",
            r.check,
            serde_json::to_value(r.status).unwrap().as_str().unwrap()
        );
        for (k, v) in &r.inputs {
            t.push_str(&format!("{k} = {v}\n"));
        }
        t.push_str(&format!(
            "values: {}\nbound: {}\nfield: {}\n",
            r.values, r.bound, r.field
        ));
        if let Some(m) = &r.message {
            t.push_str(&format!("message: {m}\n"));
        }
        t
    };
    Ok((text, status_code(r.status)))
}

fn run_scan(g: &Global, a: &ScanArgs) -> Outcome {
    let mut cfg = match &a.config {
        Some(path) => {
            serde_json::from_str(&fs::read_to_string(path)?).map_err(|e| Failure::Usage(format!("{path}: {e}")))?
        }
        None => ScanConfig::default(),
    };
    if let Some(s) = g.seed {
        cfg.seed = s;
    }
    if g.characteristic.is_some() || g.field.is_some() {
        cfg.field = g.field()?;
    }
    cfg.permissive |= g.permissive;
    cfg.general |= a.general;
    macro_rules! set {
        ($($f:ident),*) => { $(if let Some(v) = a.$f { cfg.$f = v; })* };
    }
    set!(count, n_min, n_max, max_degree, draws_min, draws_max, max_generators);
    if !a.checks.is_empty() {
        cfg.checks = a.checks.clone();
    }
    let report = scan(&cfg)?;
    let s = &report.summary;
    let code = if report.has_failures() {
        EXIT_FAIL
    } else if s.window_unstable > 0 {
        EXIT_WINDOW
    } else {
        0
    };
    let text = if g.json {
        report.to_json() + "\n"
    } else {
        let mut t = format!(
            "seed {} count {} field {}\ntotal {} pass {} fail {} finding {} window-unstable {} error {}\n",
            cfg.seed, cfg.count, cfg.field, s.total, s.pass, s.fail, s.finding, s.window_unstable, s.error
        );
        for r in report.results.iter().filter(|r| r.status != CheckStatus::Pass) {
            let inputs: Vec<String> = r.inputs.iter().map(|(k, v)| format!("{k} = {v}")).collect();
            t.push_str(&format!(
                "{} {}: {}{}\n",
                r.check,
                serde_json::to_value(r.status).unwrap().as_str().unwrap(),
                inputs.join("; "),
                r.message.as_ref().map(|m| format!(" ({m})")).unwrap_or_default()
            ));
        }
        for (check, n) in &s.equality_cases {
            t.push_str(&format!("{check}: {n} equality cases\n"));
        }
        t
    };
    Ok((text, code))
}

fn dispatch(cli: &Cli) -> Outcome {
    let g = &cli.global;
    if let Some(t) = g.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| Failure::Usage(e.to_string()))?;
    }
    match &cli.command {
        Command::CheckStability { ideal } => check_stability(g, ideal),
        Command::Reg {
            ideal,
            ideal_reg,
            recursive,
        } => reg(g, ideal, *ideal_reg, *recursive),
        Command::Betti { ideal } => betti(g, ideal),
        Command::TorReg {
            i,
            j,
            index,
            taylor_taylor,
        } => tor_reg(g, i, j, *index, *taylor_taylor),
        Command::ExtReg { i, index } => ext_reg(g, i, *index),
        Command::Ass { ideal } => ass(g, ideal),
        Command::Decompose { ideal } => decompose(g, ideal),
        Command::Verify { check, ideals } => verify(g, *check, ideals),
        Command::Scan(a) => run_scan(g, a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match dispatch(&cli) {
        Ok((text, code)) => {
            let _ = io::stdout().write_all(text.as_bytes());
            ExitCode::from(code)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Window(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(EXIT_WINDOW)
        }
    }
}
