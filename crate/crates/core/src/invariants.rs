//! Graded Betti numbers, `t_i`, and Castelnuovo–Mumford regularity of
//! truncated graded modules, plus a purely combinatorial regularity for
//! weakly stable ideals.
//!
//! `β_{i,α}(M) = dim H_i(K ⊗ M)_α` where `(K_i ⊗ M)_α = ⊕_{|S|=i} M_{α-e_S}`.
//! For a module positively determined by `[lo, hi]` these vanish unless
//! `lo <= α <= hi`; the computation probes the box `[lo, hi + 1]` and reports
//! the table as stabilized when nothing appears outside `[lo, hi]`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::subsets_of_size;
use crate::error::{Error, Result};
use crate::extended::{ExtendedInt, Finite, NegInfinity};
use crate::field::{Field, FieldSpec};
use crate::ideal::MonomialIdeal;
use crate::linalg::Matrix;
use crate::module::{GradedModule, Window};
use crate::multidegree::{DegreeBox, MultiDegree};
use crate::stability::is_weakly_stable;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    pub n: usize,
    /// Nonzero `β_{i,j}` keyed by `(i, j)`.
    #[serde(serialize_with = "serialize_entries")]
    pub entries: BTreeMap<(usize, i32), u64>,
    /// Nonzero multigraded `β_{i,α}`.
    #[serde(skip)]
    pub multigraded: BTreeMap<(usize, MultiDegree), u64>,
    pub window: Window,
    pub stabilized: bool,
}

fn serialize_entries<S: serde::Serializer>(
    entries: &BTreeMap<(usize, i32), u64>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Cell {
        i: usize,
        j: i32,
        value: u64,
    }
    s.collect_seq(entries.iter().map(|(&(i, j), &value)| Cell { i, j, value }))
}

impl BettiTable {
    pub fn get(&self, i: usize, j: i32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// `β_i = Σ_j β_{i,j}`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries.range((i, i32::MIN)..=(i, i32::MAX)).map(|(_, v)| v).sum()
    }

    /// `t_i = max{j : β_{i,j} ≠ 0}`, `-inf` when there is none.
    pub fn t(&self, i: usize) -> ExtendedInt {
        self.entries
            .range((i, i32::MIN)..=(i, i32::MAX))
            .map(|(&(_, j), _)| Finite(j as i64))
            .max()
            .unwrap_or(NegInfinity)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Text layout with rows `j - i` and columns `i`, `.` for zero:
    ///
    /// ```text
    ///        0 1 2
    /// total: 1 3 2
    ///     0: 1 . .
    ///     1: . 2 1
    ///     2: . 1 1
    /// ```
    pub fn to_text(&self) -> String {
        if self.entries.is_empty() {
            return "total: 0\n".to_string();
        }
        let max_i = self.entries.keys().map(|&(i, _)| i).max().unwrap();
        let rows: Vec<i32> = {
            let lo = self.entries.keys().map(|&(i, j)| j - i as i32).min().unwrap();
            let hi = self.entries.keys().map(|&(i, j)| j - i as i32).max().unwrap();
            (lo..=hi).collect()
        };
        let cell = |i: usize, r: i32| match self.get(i, r + i as i32) {
            0 => ".".to_string(),
            v => v.to_string(),
        };
        let widths: Vec<usize> = (0..=max_i)
            .map(|i| {
                rows.iter()
                    .map(|&r| cell(i, r).len())
                    .chain([i.to_string().len(), self.total(i).to_string().len()])
                    .max()
                    .unwrap()
            })
            .collect();
        let label_width = rows
            .iter()
            .map(|r| r.to_string().len() + 1)
            .chain(["total:".len()])
            .max()
            .unwrap();
        let mut out = String::new();
        let line = |out: &mut String, label: &str, cells: Vec<String>| {
            let _ = write!(out, "{label:>label_width$}");
            for (c, w) in cells.iter().zip(&widths) {
                let _ = write!(out, " {c:>w$}");
            }
            out.push('\n');
        };
        line(&mut out, "", (0..=max_i).map(|i| i.to_string()).collect());
        line(
            &mut out,
            "total:",
            (0..=max_i).map(|i| self.total(i).to_string()).collect(),
        );
        for &r in &rows {
            line(&mut out, &format!("{r}:"), (0..=max_i).map(|i| cell(i, r)).collect());
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegularityReport {
    /// `t_i` for `i = 0..=n`.
    pub t: Vec<ExtendedInt>,
    pub reg: ExtendedInt,
    pub window: Window,
    pub stabilized: bool,
}

/// Dimensions of the Koszul complex `K ⊗ M` at `α` and its differentials.
fn koszul_betti_at<F: Field>(m: &GradedModule<F>, alpha: &MultiDegree, layers: &[Vec<u32>]) -> Option<Vec<u64>> {
    let f = m.field();
    let n = m.n();
    let lo = m.lo();
    let minus = |a: &MultiDegree, s: u32| {
        let mut b = *a;
        for v in 0..n {
            if s & (1 << v) != 0 {
                b = b.minus_unit(v);
            }
        }
        b
    };
    // Block layout per layer: (subset, offset, dim).
    let mut blocks: Vec<Vec<(u32, usize, usize)>> = Vec::with_capacity(n + 1);
    for layer in layers {
        let mut off = 0;
        let mut list = Vec::new();
        for &s in layer {
            let b = minus(alpha, s);
            if !lo.leq(&b) {
                continue;
            }
            let d = m.dim(&b)?;
            if d > 0 {
                list.push((s, off, d));
                off += d;
            }
        }
        blocks.push(list);
    }
    let size = |i: usize| blocks[i].iter().map(|b| b.2).sum::<usize>();
    let mut ranks = vec![0usize; n + 2];
    for i in 1..=n {
        if size(i) == 0 || size(i - 1) == 0 {
            continue;
        }
        let mut d = Matrix::zeros(f, size(i - 1), size(i));
        for &(s, col0, w) in &blocks[i] {
            let src = minus(alpha, s);
            for (k, v) in (0..n).filter(|&v| s & (1 << v) != 0).enumerate() {
                let t = s & !(1 << v);
                let Some(&(_, row0, _)) = blocks[i - 1].iter().find(|b| b.0 == t) else {
                    continue;
                };
                let act = m.action(v, &src)?;
                for r in 0..act.rows() {
                    for c in 0..w {
                        let x = act.get(r, c);
                        if f.is_zero(x) {
                            continue;
                        }
                        let x = if k % 2 == 0 { x.clone() } else { f.neg(x) };
                        d.set(row0 + r, col0 + c, x);
                    }
                }
            }
        }
        ranks[i] = d.rank(f);
    }
    Some((0..=n).map(|i| (size(i) - ranks[i] - ranks[i + 1]) as u64).collect())
}

/// Graded Betti numbers of `M` through the Koszul complex.
///
/// Fails with [`Error::WindowTooSmall`] when a piece needed by some probed
/// multidegree lies outside the module's window, and with
/// [`Error::NonCommutingActions`] on corrupt input.
pub fn betti_table<F: Field>(m: &GradedModule<F>) -> Result<BettiTable> {
    m.check_commuting()?;
    let n = m.n();
    let layers: Vec<Vec<u32>> = (0..=n).map(|k| subsets_of_size(n, k)).collect();
    let hi = m.hi();
    let mut probe_hi = hi;
    for v in 0..n {
        probe_hi = probe_hi.plus_unit(v);
    }
    let probe = DegreeBox::new(m.lo(), probe_hi);
    let found: Vec<Option<Vec<u64>>> = (0..probe.len())
        .into_par_iter()
        .map(|idx| koszul_betti_at(m, &probe.point(idx), &layers))
        .collect();
    let window = m.window();
    let mut entries = BTreeMap::new();
    let mut multigraded = BTreeMap::new();
    let mut stabilized = true;
    for (idx, b) in found.into_iter().enumerate() {
        let Some(b) = b else {
            return Err(Error::WindowTooSmall {
                d_min: window.d_min,
                d_max: window.d_max,
                n,
            });
        };
        let alpha = probe.point(idx);
        for (i, &v) in b.iter().enumerate() {
            if v == 0 {
                continue;
            }
            if !alpha.leq(&hi) {
                stabilized = false;
            }
            *entries.entry((i, alpha.total())).or_insert(0) += v;
            multigraded.insert((i, alpha), v);
        }
    }
    Ok(BettiTable {
        n,
        entries,
        multigraded,
        window,
        stabilized,
    })
}

/// `reg M = max_i (t_i - i)`.
pub fn regularity<F: Field>(m: &GradedModule<F>) -> Result<RegularityReport> {
    Ok(report_from_table(&betti_table(m)?))
}

pub fn report_from_table(b: &BettiTable) -> RegularityReport {
    let t: Vec<ExtendedInt> = (0..=b.n).map(|i| b.t(i)).collect();
    let reg = t
        .iter()
        .enumerate()
        .map(|(i, &ti)| ti.add_int(-(i as i64)))
        .max()
        .unwrap_or(NegInfinity);
    RegularityReport {
        t,
        reg,
        window: b.window,
        stabilized: b.stabilized,
    }
}

/// `(inf M, sup M, finite length)`.
pub fn sup_inf<F: Field>(m: &GradedModule<F>) -> (ExtendedInt, ExtendedInt, bool) {
    m.sup_inf()
}

/// How windows are chosen and widened when a computation reports that its
/// window was too small or did not stabilize.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct WindowPolicy {
    /// Starting window; `None` uses the default for the inputs.
    pub initial: Option<Window>,
    /// How many times the window may be doubled.
    pub max_doublings: u32,
}

impl Default for WindowPolicy {
    fn default() -> Self {
        WindowPolicy {
            initial: None,
            max_doublings: 4,
        }
    }
}

impl WindowPolicy {
    pub fn fixed(window: Window) -> Self {
        WindowPolicy {
            initial: Some(window),
            max_doublings: 0,
        }
    }

    pub fn with_initial(window: Option<Window>) -> Self {
        WindowPolicy {
            initial: window,
            ..Self::default()
        }
    }
}

/// `Σ_l c_l + n` with `c_l = 1 + max exponent of x_l` over all generators.
pub fn default_degree_bound(ideals: &[&MonomialIdeal]) -> i32 {
    let n = ideals.first().map_or(0, |i| i.n());
    let mut c = vec![0u32; n];
    for ideal in ideals {
        for (l, e) in ideal.max_exponents().into_iter().enumerate() {
            c[l] = c[l].max(e);
        }
    }
    c.iter().map(|&e| e as i32 + 1).sum::<i32>() + n as i32
}

/// Default window `[0, Σ c_l + n]` for modules built from `R/I` and `R/J`.
pub fn default_window(ideals: &[&MonomialIdeal]) -> Window {
    Window {
        d_min: 0,
        d_max: default_degree_bound(ideals),
    }
}

/// Default window `[-(Σ c_l + n), n]` for Ext modules, whose shifts are negated.
pub fn default_ext_window(ideal: &MonomialIdeal) -> Window {
    Window {
        d_min: -default_degree_bound(&[ideal]),
        d_max: ideal.n() as i32,
    }
}

/// Doubles the extent of the window away from zero on both sides.
pub fn widen(w: Window) -> Window {
    let width = (w.d_max - w.d_min).max(1);
    Window {
        d_min: if w.d_min < 0 { 2 * w.d_min } else { w.d_min },
        d_max: if w.d_max > 0 { 2 * w.d_max } else { w.d_max + width },
    }
}

/// Runs `compute` on growing windows until it yields a stabilized result.
pub fn with_window_policy<T>(
    policy: &WindowPolicy,
    default: Window,
    mut compute: impl FnMut(Window) -> Result<(T, bool)>,
) -> Result<(T, Window)> {
    let mut w = policy.initial.unwrap_or(default);
    for attempt in 0..=policy.max_doublings {
        match compute(w) {
            Ok((value, true)) => return Ok((value, w)),
            Ok((_, false)) | Err(Error::WindowTooSmall { .. }) => {
                if attempt < policy.max_doublings {
                    w = widen(w);
                }
            }
            Err(e) => return Err(e),
        }
    }
    Err(Error::WindowInstability(format!(
        "no stabilized result up to window [{}, {}] after {} doublings",
        w.d_min, w.d_max, policy.max_doublings
    )))
}

/// Regularity report of `R/I` computed through the Koszul route.
pub fn reg_quotient_report<F: Field>(
    field: &F,
    ideal: &MonomialIdeal,
    policy: &WindowPolicy,
) -> Result<RegularityReport> {
    if ideal.is_unit() {
        return Err(Error::NotProper);
    }
    let full = GradedModule::quotient_ring(field.clone(), ideal)?;
    let (report, _) = with_window_policy(policy, default_window(&[ideal]), |w| {
        let m = restrict_window(&full, w);
        let r = regularity(&m)?;
        let ok = r.stabilized;
        Ok((r, ok))
    })?;
    Ok(report)
}

/// A copy of `m` keeping only the pieces whose total degree lies in `w`.
pub fn restrict_window<F: Field>(m: &GradedModule<F>, w: Window) -> GradedModule<F> {
    let full = m.clone();
    GradedModule::assemble(
        m.field().clone(),
        m.lo(),
        m.hi(),
        w,
        |p| full.dim(p).unwrap_or(0),
        |p, v| full.action(v, p).expect("complete module"),
    )
}

/// `reg R/I` over the given field.
pub fn reg_quotient(ideal: &MonomialIdeal, field: FieldSpec, window: Option<Window>) -> Result<ExtendedInt> {
    crate::with_field!(field, f => {
        reg_quotient_report(f, ideal, &WindowPolicy::with_initial(window)).map(|r| r.reg)
    })
}

/// `reg I = reg R/I + 1`.
pub fn reg_ideal(ideal: &MonomialIdeal, field: FieldSpec, window: Option<Window>) -> Result<ExtendedInt> {
    Ok(reg_quotient(ideal, field, window)?.add_int(1))
}

/// `reg R/I` for weakly stable `I` without linear algebra:
/// `reg R/I = max(sup I'/I, reg S/I'|_S)` with `I' = (I : x_n^∞)` and `S` the
/// ring without `x_n`.
pub fn reg_weakly_stable_recursive(ideal: &MonomialIdeal) -> Result<ExtendedInt> {
    if !is_weakly_stable(ideal) {
        return Err(Error::NotWeaklyStable(ideal.to_string()));
    }
    if ideal.is_unit() {
        return Err(Error::NotProper);
    }
    recursive_reg(ideal)
}

fn recursive_reg(ideal: &MonomialIdeal) -> Result<ExtendedInt> {
    if ideal.is_unit() {
        return Ok(NegInfinity);
    }
    if ideal.is_zero() {
        return Ok(Finite(0));
    }
    let (iprime, top) = ideal.gamma_torsion()?;
    let rest = if iprime.is_unit() {
        NegInfinity
    } else {
        recursive_reg(&iprime.restrict()?)?
    };
    Ok(top.max(rest))
}
