//! Acceptance run: one line per criterion, nonzero exit if any is red.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use common::*;
use monoreg::complex::{dualize_into_ring, koszul_complex, taylor_complex, tensor_complexes};
use monoreg::decomposition::is_primary;
use monoreg::extended::Finite;
use monoreg::field::{Field, PrimeField, RationalField};
use monoreg::homology::homology_module;
use monoreg::multidegree::MultiDegree;
use monoreg::resolution::minimal_resolution;
use monoreg::torext::{
    ext_modules, ext_regularities, tor_modules, tor_regularities, tor_resolving, TorOptions, TorRoute,
};
use monoreg::verifier::{verify_flat_extension, verify_tor_bound, CheckContext, CheckKind, CheckStatus, ScanConfig};
use monoreg::{
    associated_primes, finite_length_ext_law, is_weakly_stable, scan, FieldSpec, GradedModule, MonomialIdeal, Window,
    WindowPolicy,
};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn fields() -> [FieldSpec; 2] {
    [FieldSpec::RATIONALS, FieldSpec::default()]
}

fn scan_both(kind: CheckKind, count: usize, general: bool) -> (bool, String) {
    let mut ok = true;
    let mut parts = Vec::new();
    for field in fields() {
        let cfg = ScanConfig {
            seed: 20240601,
            count,
            field,
            checks: vec![kind],
            general,
            ..ScanConfig::default()
        };
        match scan(&cfg) {
            Ok(r) => {
                let s = &r.summary;
                ok &= s.pass == s.total;
                parts.push(format!(
                    "{field}: {}/{} pass, {} fail, {} unstable, {} error",
                    s.pass, s.total, s.fail, s.window_unstable, s.error
                ));
            }
            Err(e) => {
                ok = false;
                parts.push(format!("{field}: {e}"));
            }
        }
    }
    (ok, parts.join("; "))
}

fn fixture_pairs() -> Vec<(MonomialIdeal, MonomialIdeal)> {
    let corpus = weakly_stable_corpus();
    let mut out = Vec::new();
    for a in &corpus {
        for b in corpus.iter().filter(|b| b.n() == a.n()) {
            out.push((a.clone(), b.clone()));
        }
    }
    out
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let (mut ok, mut detail) = scan_both(CheckKind::TorBound, 200, false);
    let mut fixture_fail = 0;
    let pairs = fixture_pairs();
    for field in fields() {
        for (i, j) in &pairs {
            let r = verify_tor_bound(i, j, &CheckContext::with_field(field));
            if !matches!(r, Ok(ref r) if r.status == CheckStatus::Pass) {
                fixture_fail += 1;
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    ok &= fixture_fail == 0 && secs < 300.0;
    detail.push_str(&format!(
        "; fixtures: {} pairs per field, {fixture_fail} failures; {secs:.1}s",
        pairs.len()
    ));
    outcome(ok, detail)
}

fn criterion_2() -> Outcome {
    let (ok, d) = scan_both(CheckKind::ExtBound, 200, false);
    outcome(ok, d)
}

fn criterion_3() -> Outcome {
    let (ok, d) = scan_both(CheckKind::OracleEquivalence, 100, false);
    outcome(ok, d)
}

fn criterion_4() -> Outcome {
    let (ok, d) = scan_both(CheckKind::Caviglia, 200, true);
    outcome(ok, d)
}

fn criterion_5() -> Outcome {
    let i = example();
    let stable = is_weakly_stable(&i);
    let primary = is_primary(&i).unwrap();
    let ass = associated_primes(&i).unwrap();
    let claimed: BTreeSet<BTreeSet<usize>> = [[0, 1].into_iter().collect()].into_iter().collect();
    let ass_text: Vec<String> = ass.iter().map(monoreg::decomposition::format_prime).collect();
    outcome(
        stable && primary && ass == claimed,
        format!(
            "weakly stable {stable}; primary {primary} (claimed true); Ass = {{{}}} (claimed {{(x1, x2)}}); \
             x1 is not in I and x1*(x1, x2, x3) lies in I, so the maximal ideal is associated",
            ass_text.join(", ")
        ),
    )
}

fn criterion_6() -> Outcome {
    let corpus = m_primary_corpus();
    let mut bad = Vec::new();
    fn run<F: Field>(f: F, q: &MonomialIdeal, bad: &mut Vec<String>) {
        for shift in [0, 2] {
            let m = GradedModule::quotient_ring(f.clone(), q).unwrap().shifted_total(shift);
            match finite_length_ext_law(&m) {
                Ok(c) if c.pass => {}
                Ok(c) => bad.push(format!("{q} shift {shift}: {:?}", c.ext_regularities)),
                Err(e) => bad.push(format!("{q}: {e}")),
            }
        }
    }
    for q in &corpus {
        run(RationalField, q, &mut bad);
        run(PrimeField::new(32003).unwrap(), q, &mut bad);
    }
    let detail = format!(
        "{} m-primary fixtures, 2 shifts, 2 fields, {} failures {:?}",
        corpus.len(),
        bad.len(),
        bad
    );
    outcome(corpus.len() >= 20 && bad.is_empty(), detail)
}

fn criterion_7() -> Outcome {
    let mut ok = true;
    let mut seen = Vec::new();
    for n in [2usize, 3] {
        let m = MonomialIdeal::maximal(n).unwrap();
        for f in fields() {
            let tor: Vec<_> = monoreg::with_field!(f, fld => {
                tor_regularities(fld, &m, &m, &TorOptions::default()).unwrap()
            })
            .iter()
            .map(|r| r.reg.to_string())
            .collect();
            let ext_top = monoreg::with_field!(f, fld => {
                ext_regularities(fld, &m, &WindowPolicy::default()).unwrap()[n].reg
            });
            let want: Vec<String> = (0..=n).map(|k| k.to_string()).collect();
            ok &= tor == want && ext_top == Finite(-(n as i64));
            seen.push(format!("n={n} {f}: Tor [{}] Ext^n {ext_top}", tor.join(", ")));
        }
    }
    outcome(ok, seen.join("; "))
}

fn structural<F: Field>(f: F) -> Vec<String> {
    let mut bad = Vec::new();
    let wide = Window::new(-40, 40).unwrap();
    let corpus: Vec<MonomialIdeal> = weakly_stable_corpus()
        .into_iter()
        .chain(general_corpus())
        .chain(m_primary_corpus())
        .filter(|i| i.generators().len() <= 8)
        .collect();
    for n in 1..=4 {
        if koszul_complex(f.clone(), n).and_then(|k| k.check_d_squared()).is_err() {
            bad.push(format!("koszul d^2 n={n}"));
        }
    }
    for i in &corpus {
        let t = taylor_complex(f.clone(), i).unwrap();
        if t.check_d_squared().is_err() || dualize_into_ring(&t).unwrap().check_d_squared().is_err() {
            bad.push(format!("taylor d^2 {i}"));
        }
        for p in 1..t.len() {
            if !homology_module(&t, p, None).unwrap().is_zero() {
                bad.push(format!("taylor H_{p} {i}"));
            }
        }
        let m = GradedModule::quotient_ring(f.clone(), i).unwrap();
        if m.check_commuting().is_err() {
            bad.push(format!("commuting R/I {i}"));
        }
        if minimal_resolution(&m).and_then(|r| r.check_d_squared()).is_err() {
            bad.push(format!("resolution d^2 {i}"));
        }
        let exts = ext_modules(&f, i, wide).unwrap();
        let lcms = subset_lcms(i);
        let top = i.max_exponents();
        let bound: Vec<u32> = top.iter().map(|e| e + 2).collect();
        for e in box_points(&bound) {
            let alpha: Vec<i32> = e.iter().zip(&top).map(|(&x, &t)| x as i32 - t as i32 - 1).collect();
            let p = MultiDegree::from_slice(&alpha);
            let lhs: i64 = exts
                .iter()
                .enumerate()
                .map(|(k, m)| (-1i64).pow(k as u32) * m.dim(&p).unwrap() as i64)
                .sum();
            let neg: Vec<i32> = alpha.iter().map(|a| -a).collect();
            let rhs: i64 = lcms
                .iter()
                .filter(|(_, l)| leq(&neg, l))
                .map(|(k, _)| (-1i64).pow(*k as u32))
                .sum();
            if lhs != rhs {
                bad.push(format!("ext euler {i} at {p}"));
            }
        }
    }
    let small: Vec<&MonomialIdeal> = corpus.iter().filter(|i| i.generators().len() <= 5).collect();
    for a in &small {
        for b in small.iter().filter(|b| b.n() == a.n()) {
            let ta = taylor_complex(f.clone(), a).unwrap();
            let tb = taylor_complex(f.clone(), b).unwrap();
            if tensor_complexes(&ta, &tb).and_then(|t| t.check_d_squared()).is_err() {
                bad.push(format!("tensor d^2 {a} {b}"));
            }
            let x = tor_resolving(&f, a, b, wide).unwrap();
            let y = tor_resolving(&f, b, a, wide).unwrap();
            let z = tor_modules(&f, a, b, wide, TorRoute::TaylorTaylor).unwrap();
            let (la, lb) = (subset_lcms(a), subset_lcms(b));
            let bound: Vec<u32> = a
                .max_exponents()
                .iter()
                .zip(b.max_exponents())
                .map(|(p, q)| p + q + 1)
                .collect();
            for e in box_points(&bound) {
                let alpha: Vec<i32> = e.iter().map(|&v| v as i32).collect();
                let p = MultiDegree::from_slice(&alpha);
                let mut chi = 0i64;
                for k in 0..x.len() {
                    let d = x[k].dim(&p);
                    if d != y[k].dim(&p) || d != z[k].dim(&p) {
                        bad.push(format!("tor symmetry {a} {b} at {p}"));
                    }
                    chi += (-1i64).pow(k as u32) * d.unwrap() as i64;
                }
                let mut rhs = 0i64;
                for (si, u) in &la {
                    for (sj, v) in &lb {
                        let s: Vec<i32> = u.iter().zip(v).map(|(p, q)| p + q).collect();
                        if leq(&s, &alpha) {
                            rhs += (-1i64).pow((si + sj) as u32);
                        }
                    }
                }
                if chi != rhs {
                    bad.push(format!("tor euler {a} {b} at {p}"));
                }
            }
            for m in x.iter().chain(&z) {
                if m.check_commuting().is_err() {
                    bad.push(format!("commuting Tor {a} {b}"));
                }
            }
            if a.n() <= 3 {
                let ctx = CheckContext::with_field(f.spec());
                let (ae, be) = (a.extend(a.n() + 1).unwrap(), b.extend(a.n() + 1).unwrap());
                match verify_flat_extension(&ae, &be, &ctx) {
                    Ok(r) if r.status == CheckStatus::Pass => {}
                    _ => bad.push(format!("flat extension {a} {b}")),
                }
            }
        }
    }
    bad
}

fn criterion_8() -> Outcome {
    let mut bad = structural(RationalField);
    bad.extend(structural(PrimeField::new(32003).unwrap()));
    let shown: Vec<&String> = bad.iter().take(5).collect();
    outcome(bad.is_empty(), format!("{} violations {:?}", bad.len(), shown))
}

fn criterion_9() -> Outcome {
    let (a, da) = scan_both(CheckKind::PowerBound, 100, false);
    let (b, db) = scan_both(CheckKind::SesInequalities, 100, false);
    outcome(a && b, format!("power bound: {da}; short exact sequence: {db}"))
}

fn criterion_10() -> Outcome {
    let cfg = ScanConfig {
        seed: 99,
        count: 60,
        checks: CheckKind::ALL.to_vec(),
        ..ScanConfig::default()
    };
    let runs: Vec<String> = (0..3).map(|_| scan(&cfg).unwrap().to_json()).collect();
    let same = runs.windows(2).all(|w| w[0] == w[1]);
    outcome(
        same,
        format!(
            "3 scans of {} results, {} bytes each",
            60 * CheckKind::ALL.len(),
            runs[0].len()
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("Tor regularity bound", criterion_1),
        ("Ext regularity bound", criterion_2),
        ("Koszul and recursive regularity agree", criterion_3),
        ("weak stability iff initial-segment associated primes", criterion_4),
        ("example ideal: weakly stable, primary, Ass = {(x1, x2)}", criterion_5),
        ("finite-length Ext law", criterion_6),
        ("equality witness for the maximal ideal", criterion_7),
        ("structural invariants", criterion_8),
        ("square of an ideal and short exact sequences", criterion_9),
        ("scan determinism", criterion_10),
    ];
    let mut red = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        let tag = if o.pass { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {tag}: {name} -- {}", k + 1, o.detail);
        red += usize::from(!o.pass);
    }
    println!("{} of {} criteria pass", criteria.len() - red, criteria.len());
    if red == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
