//! `Tor_i(R/I, R/J)` and `Ext^i(R/I, R)` as graded modules, and their
//! regularities.
//!
//! Tor is computed by default as `H_i(T(I) ⊗ R/J)` with `T(I)` the Taylor
//! resolution of whichever side has fewer generators; `H_i(T(I) ⊗ T(J))` is
//! available as [`TorRoute::TaylorTaylor`]. Ext is the cohomology of the
//! Taylor resolution dualized into `R`.

use serde::Serialize;

use crate::complex::{dualize_into_ring, taylor_complex, tensor_complexes, TAYLOR_GENERATOR_CAP};
use crate::error::{Error, Result};
use crate::extended::{ExtendedInt, Finite, NegInfinity};
use crate::field::{Field, FieldSpec};
use crate::homology::homology_modules;
use crate::ideal::MonomialIdeal;
use crate::invariants::{
    default_ext_window, default_window, regularity, with_window_policy, RegularityReport, WindowPolicy,
};
use crate::module::{GradedModule, Window};
use crate::resolution::minimal_resolution;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub enum TorRoute {
    /// `T(I) ⊗ R/J`, resolving the side with fewer generators.
    #[default]
    ResolveOneSide,
    /// `T(I) ⊗ T(J)`.
    TaylorTaylor,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TorOptions {
    pub route: TorRoute,
    pub window: WindowPolicy,
    /// Also resolve the other side and compare dimensions degree by degree.
    pub cross_check_symmetry: bool,
}

fn check_pair(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<()> {
    if i.n() != j.n() {
        return Err(Error::AmbientMismatch {
            left: i.n(),
            right: j.n(),
        });
    }
    for x in [i, j] {
        if x.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        if x.is_unit() {
            return Err(Error::NotProper);
        }
    }
    Ok(())
}

fn zero_module<F: Field>(field: &F, n: usize) -> Result<GradedModule<F>> {
    GradedModule::quotient_ring(field.clone(), &MonomialIdeal::unit(n)?)
}

/// Homology at positions `0..=n`, padding with zero modules past the end of
/// the complex.
fn padded<F: Field>(
    field: &F,
    cx: &crate::complex::FreeComplex<F>,
    modulo: Option<&MonomialIdeal>,
    window: Window,
) -> Result<Vec<GradedModule<F>>> {
    let n = cx.n();
    let inside: Vec<usize> = (0..=n).filter(|&p| p < cx.len()).collect();
    let mut out = homology_modules(cx, modulo, &inside, Some(window))?;
    while out.len() <= n {
        out.push(zero_module(field, n)?);
    }
    Ok(out)
}

/// `Tor_i(R/I, R/J)` for `i = 0..=n` in the given window.
pub fn tor_modules<F: Field>(
    field: &F,
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    window: Window,
    route: TorRoute,
) -> Result<Vec<GradedModule<F>>> {
    check_pair(i, j)?;
    match route {
        TorRoute::ResolveOneSide => {
            let (res, other) = if j.generators().len() < i.generators().len() {
                (j, i)
            } else {
                (i, j)
            };
            tor_resolving(field, res, other, window)
        }
        TorRoute::TaylorTaylor => {
            let total = i.generators().len() + j.generators().len();
            if total > TAYLOR_GENERATOR_CAP {
                return Err(Error::TooManyGenerators {
                    found: total,
                    cap: TAYLOR_GENERATOR_CAP,
                });
            }
            let t = tensor_complexes(&taylor_complex(field.clone(), i)?, &taylor_complex(field.clone(), j)?)?;
            padded(field, &t, None, window)
        }
    }
}

/// `H_•(T(resolved) ⊗ R/other)`.
pub fn tor_resolving<F: Field>(
    field: &F,
    resolved: &MonomialIdeal,
    other: &MonomialIdeal,
    window: Window,
) -> Result<Vec<GradedModule<F>>> {
    check_pair(resolved, other)?;
    let t = taylor_complex(field.clone(), resolved)?;
    padded(field, &t, Some(other), window)
}

/// `Tor_i(R/I, R/J)`; the window defaults to `[0, Σ c_l + n]`.
pub fn tor_module<F: Field>(
    field: &F,
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    index: usize,
    window: Option<Window>,
) -> Result<GradedModule<F>> {
    check_pair(i, j)?;
    if index > i.n() {
        return zero_module(field, i.n());
    }
    let w = window.unwrap_or_else(|| default_window(&[i, j]));
    Ok(tor_modules(field, i, j, w, TorRoute::default())?.swap_remove(index))
}

fn check_symmetric<F: Field>(a: &[GradedModule<F>], b: &[GradedModule<F>]) -> Result<()> {
    for (k, (x, y)) in a.iter().zip(b).enumerate() {
        let points = x.degree_box().points().chain(y.degree_box().points());
        for p in points {
            if x.dim(&p) != y.dim(&p) {
                return Err(Error::SymmetryMismatch(format!(
                    "Tor_{k} has dimension {:?} versus {:?} at {p}",
                    x.dim(&p),
                    y.dim(&p)
                )));
            }
        }
    }
    Ok(())
}

/// Regularity reports of `Tor_i(R/I, R/J)` for `i = 0..=n`, widening the
/// window until every Betti table stabilizes.
pub fn tor_regularities<F: Field>(
    field: &F,
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    options: &TorOptions,
) -> Result<Vec<RegularityReport>> {
    check_pair(i, j)?;
    let (reports, _) = with_window_policy(&options.window, default_window(&[i, j]), |w| {
        let mods = tor_modules(field, i, j, w, options.route)?;
        if options.cross_check_symmetry {
            let (a, b) = (tor_resolving(field, i, j, w)?, tor_resolving(field, j, i, w)?);
            check_symmetric(&a, &b)?;
        }
        let reports = mods.iter().map(regularity).collect::<Result<Vec<_>>>()?;
        let ok = reports.iter().all(|r| r.stabilized);
        Ok((reports, ok))
    })?;
    Ok(reports)
}

/// `reg Tor_i(R/I, R/J)`.
pub fn tor_regularity(i: &MonomialIdeal, j: &MonomialIdeal, index: usize, field: FieldSpec) -> Result<ExtendedInt> {
    check_pair(i, j)?;
    if index > i.n() {
        return Ok(NegInfinity);
    }
    crate::with_field!(field, f => {
        Ok(tor_regularities(f, i, j, &TorOptions::default())?[index].reg)
    })
}

/// `Ext^i(R/I, R)` for `i = 0..=n`.
pub fn ext_modules<F: Field>(field: &F, i: &MonomialIdeal, window: Window) -> Result<Vec<GradedModule<F>>> {
    let dual = dualize_into_ring(&taylor_complex(field.clone(), i)?)?;
    padded(field, &dual, None, window)
}

/// `Ext^i(R/I, R)`; the window defaults to `[-(Σ c_l + n), n]`.
pub fn ext_module<F: Field>(
    field: &F,
    i: &MonomialIdeal,
    index: usize,
    window: Option<Window>,
) -> Result<GradedModule<F>> {
    if index > i.n() {
        taylor_complex(field.clone(), i)?;
        return zero_module(field, i.n());
    }
    let w = window.unwrap_or_else(|| default_ext_window(i));
    Ok(ext_modules(field, i, w)?.swap_remove(index))
}

/// Regularity reports of `Ext^i(R/I, R)` for `i = 0..=n`.
pub fn ext_regularities<F: Field>(
    field: &F,
    i: &MonomialIdeal,
    policy: &WindowPolicy,
) -> Result<Vec<RegularityReport>> {
    let (reports, _) = with_window_policy(policy, default_ext_window(i), |w| {
        let reports = ext_modules(field, i, w)?
            .iter()
            .map(regularity)
            .collect::<Result<Vec<_>>>()?;
        let ok = reports.iter().all(|r| r.stabilized);
        Ok((reports, ok))
    })?;
    Ok(reports)
}

/// `reg Ext^i(R/I, R)`.
pub fn ext_regularity(i: &MonomialIdeal, index: usize, field: FieldSpec) -> Result<ExtendedInt> {
    crate::with_field!(field, f => {
        let regs = ext_regularities(f, i, &WindowPolicy::default())?;
        Ok(regs.get(index).map_or(NegInfinity, |r| r.reg))
    })
}

/// `Ext^i(M, R)` for `i = 0..=n`, through a minimal free resolution of `M`.
pub fn ext_of_module<F: Field>(m: &GradedModule<F>) -> Result<Vec<GradedModule<F>>> {
    let res = minimal_resolution(m)?;
    let dual = dualize_into_ring(&res)?;
    let (lo, hi) = crate::homology::homology_box(&dual, None);
    padded(m.field(), &dual, None, Window::for_box(&lo, &hi))
}

/// Outcome of checking `Ext^i(M, R) = 0` for `i < n` and
/// `reg Ext^n(M, R) = -n - inf M` on a finite-length module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtLawCheck {
    pub n: usize,
    pub inf: ExtendedInt,
    pub sup: ExtendedInt,
    /// `reg Ext^i(M, R)` for `i = 0..=n`.
    pub ext_regularities: Vec<ExtendedInt>,
    pub expected_top: ExtendedInt,
    pub pass: bool,
}

pub fn finite_length_ext_law<F: Field>(m: &GradedModule<F>) -> Result<ExtLawCheck> {
    let (inf, sup, finite) = m.sup_inf();
    if !finite {
        return Err(Error::NotFiniteLength(
            "module has a nonzero piece on an upper face".into(),
        ));
    }
    let n = m.n();
    let exts = ext_of_module(m)?;
    let ext_regularities = exts
        .iter()
        .map(|e| regularity(e).map(|r| r.reg))
        .collect::<Result<Vec<_>>>()?;
    let expected_top = match inf {
        Finite(v) => Finite(-(n as i64) - v),
        _ => NegInfinity,
    };
    let lower_vanish = exts[..n].iter().all(|e| e.is_zero());
    Ok(ExtLawCheck {
        n,
        inf,
        sup,
        pass: lower_vanish && ext_regularities[n] == expected_top,
        ext_regularities,
        expected_top,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, RationalField};
    use crate::multidegree::MultiDegree;

    fn gf() -> PrimeField {
        PrimeField::new(32003).unwrap()
    }

    fn ideal(n: usize, e: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, e).unwrap()
    }

    fn example() -> MonomialIdeal {
        ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[1, 0, 1], &[0, 2, 0]])
    }

    #[test]
    fn tor_zero_is_quotient_by_sum() {
        let i = example();
        let j = ideal(3, &[&[0, 0, 2], &[0, 1, 1]]);
        let t0 = tor_module(&gf(), &i, &j, 0, None).unwrap();
        let sum = i.sum(&j).unwrap();
        for p in t0.degree_box().points() {
            let mono = p.to_monomial().unwrap();
            assert_eq!(t0.dim(&p), Some((!sum.contains(&mono)) as usize));
        }
    }

    #[test]
    fn tor_of_residue_fields() {
        for n in 2..=3 {
            let m = MonomialIdeal::maximal(n).unwrap();
            let regs = tor_regularities(&gf(), &m, &m, &TorOptions::default()).unwrap();
            for (i, r) in regs.iter().enumerate() {
                assert_eq!(r.reg, Finite(i as i64));
            }
        }
    }

    #[test]
    fn routes_agree() {
        let i = example();
        let j = ideal(3, &[&[1, 0, 0], &[0, 2, 1]]);
        let w = default_window(&[&i, &j]);
        let a = tor_modules(
            &gf(),
            &i,
            &j,
            Window::new(w.d_min, 20).unwrap(),
            TorRoute::ResolveOneSide,
        )
        .unwrap();
        let b = tor_modules(&gf(), &i, &j, Window::new(w.d_min, 20).unwrap(), TorRoute::TaylorTaylor).unwrap();
        for (x, y) in a.iter().zip(&b) {
            for p in x.degree_box().points().chain(y.degree_box().points()) {
                assert_eq!(x.dim(&p), y.dim(&p), "at {p}");
            }
        }
        let opts = TorOptions {
            cross_check_symmetry: true,
            ..TorOptions::default()
        };
        tor_regularities(&gf(), &i, &j, &opts).unwrap();
    }

    #[test]
    fn tor_one_of_principal_ideal() {
        // Tor_1(R/(x1), R/(x1)) = (R/(x1))(-1).
        let x1 = ideal(2, &[&[1, 0]]);
        let f = FieldSpec::default();
        assert_eq!(tor_regularity(&x1, &x1, 1, f).unwrap(), Finite(1));
        assert_eq!(tor_regularity(&x1, &x1, 2, f).unwrap(), NegInfinity);
    }

    #[test]
    fn ext_of_residue_field() {
        for n in 2..=3 {
            let m = MonomialIdeal::maximal(n).unwrap();
            let regs = ext_regularities(&gf(), &m, &WindowPolicy::default()).unwrap();
            for (i, r) in regs.iter().enumerate() {
                let expect = if i == n { Finite(-(n as i64)) } else { NegInfinity };
                assert_eq!(r.reg, expect, "Ext^{i}");
            }
        }
    }

    #[test]
    fn ext_of_principal_quotient() {
        // 0 -> R(-2) -> R -> R/(x1^2) -> 0 dualizes to Ext^1 = (R/x1^2)(2).
        let i = ideal(1, &[&[2]]);
        let e = ext_modules(&RationalField, &i, default_ext_window(&i)).unwrap();
        assert!(e[0].is_zero());
        assert_eq!(e[1].dim(&MultiDegree::from_slice(&[-2])), Some(1));
        assert_eq!(e[1].dim(&MultiDegree::from_slice(&[-1])), Some(1));
        assert_eq!(e[1].dim(&MultiDegree::from_slice(&[0])), Some(0));
        assert_eq!(ext_regularity(&i, 1, FieldSpec::RATIONALS).unwrap(), Finite(-1));
    }

    #[test]
    fn finite_length_law_on_small_modules() {
        let k = GradedModule::residue_field(gf(), 3).unwrap();
        let c = finite_length_ext_law(&k).unwrap();
        assert!(c.pass, "{c:?}");
        assert_eq!(c.ext_regularities[3], Finite(-3));
        let shifted = finite_length_ext_law(&k.shifted_total(2)).unwrap();
        assert_eq!(shifted.expected_top, Finite(-5));
        assert!(shifted.pass);
        let q = GradedModule::quotient_ring(gf(), &ideal(2, &[&[2, 0], &[0, 2]])).unwrap();
        assert!(finite_length_ext_law(&q).unwrap().pass);
        let r = GradedModule::quotient_ring(gf(), &ideal(2, &[&[1, 0]])).unwrap();
        assert!(matches!(finite_length_ext_law(&r), Err(Error::NotFiniteLength(_))));
    }

    #[test]
    fn rejects_bad_pairs() {
        let f = FieldSpec::default();
        let a = ideal(2, &[&[1, 0]]);
        let b = ideal(3, &[&[1, 0, 0]]);
        assert!(matches!(
            tor_regularity(&a, &b, 0, f),
            Err(Error::AmbientMismatch { .. })
        ));
        assert_eq!(
            tor_regularity(&a, &MonomialIdeal::zero(2).unwrap(), 0, f),
            Err(Error::ZeroIdeal)
        );
        assert_eq!(
            tor_regularity(&a, &MonomialIdeal::unit(2).unwrap(), 0, f),
            Err(Error::NotProper)
        );
    }
}
