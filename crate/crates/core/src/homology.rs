//! Homology of free monomial complexes, optionally tensored with `R/J`,
//! computed one multidegree at a time.
//!
//! In multidegree `β` the complex `F ⊗ R/J` is a complex of vector spaces
//! whose basis at position `p` is the set of columns `c` with `a_c <= β` and
//! `x^{β-a_c} ∉ J`. Homology classes are represented by cycles reduced
//! against an echelon basis of the boundaries; multiplication by `x_v` sends a
//! column to itself (or to zero once it lands in `J`).

use rayon::prelude::*;

use crate::complex::FreeComplex;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::MonomialIdeal;
use crate::linalg::{EchelonBasis, Matrix};
use crate::module::{GradedModule, Window};
use crate::multidegree::{DegreeBox, MultiDegree};

struct HomPiece<E> {
    basis: Vec<usize>,
    boundaries: EchelonBasis<E>,
    classes: EchelonBasis<E>,
}

impl<E: Clone + PartialEq> HomPiece<E> {
    fn project<F: Field<Elem = E>>(&self, field: &F, mut v: Vec<E>) -> Vec<E> {
        self.boundaries.reduce(field, &mut v);
        self.classes.pivots().iter().map(|&p| v[p].clone()).collect()
    }
}

/// Box `[lo, hi]` positively determining every homology module of
/// `cx ⊗ R/J`.
pub fn homology_box<F: Field>(cx: &FreeComplex<F>, modulo: Option<&MonomialIdeal>) -> (MultiDegree, MultiDegree) {
    let (lo, mut hi) = cx.shift_bounds();
    if let Some(j) = modulo {
        let extra: Vec<i32> = j.max_exponents().iter().map(|&e| e as i32).collect();
        hi = hi.add(&MultiDegree::from_slice(&extra));
    }
    (lo, hi)
}

fn piece_at<F: Field>(
    cx: &FreeComplex<F>,
    modulo: Option<&MonomialIdeal>,
    p: usize,
    beta: &MultiDegree,
) -> HomPiece<F::Elem> {
    let field = cx.field();
    let basis = cx.piece_basis(p, beta, modulo);
    let width = basis.len();
    let cycles: Vec<Vec<F::Elem>> = match cx.target(p) {
        Some(t) => {
            let to = cx.piece_basis(t, beta, modulo);
            cx.piece_matrix(p, &basis, &to).kernel_basis(field)
        }
        None => (0..width)
            .map(|i| {
                let mut e = vec![field.zero(); width];
                e[i] = field.one();
                e
            })
            .collect(),
    };
    let boundaries = match cx.source(p) {
        Some(s) => {
            let from = cx.piece_basis(s, beta, modulo);
            let m = cx.piece_matrix(s, &from, &basis);
            EchelonBasis::span(field, width, (0..m.cols()).map(|c| m.column(c)).collect())
        }
        None => EchelonBasis::empty(width),
    };
    let reduced: Vec<Vec<F::Elem>> = cycles
        .into_iter()
        .map(|mut z| {
            boundaries.reduce(field, &mut z);
            z
        })
        .filter(|z| z.iter().any(|x| !field.is_zero(x)))
        .collect();
    let classes = EchelonBasis::span(field, width, reduced);
    HomPiece {
        basis,
        boundaries,
        classes,
    }
}

fn action_between<F: Field>(field: &F, from: &HomPiece<F::Elem>, to: &HomPiece<F::Elem>) -> Matrix<F::Elem> {
    let rows = to.classes.rank();
    let cols = from.classes.rank();
    let mut m = Matrix::zeros(field, rows, cols);
    for (k, rep) in from.classes.rows().iter().enumerate() {
        let mut image = vec![field.zero(); to.basis.len()];
        for (i, x) in rep.iter().enumerate() {
            if field.is_zero(x) {
                continue;
            }
            if let Ok(j) = to.basis.binary_search(&from.basis[i]) {
                image[j] = x.clone();
            }
        }
        for (r, c) in to.project(field, image).into_iter().enumerate() {
            m.set(r, k, c);
        }
    }
    m
}

/// Homology modules of `cx ⊗ R/J` at each requested position. The window
/// defaults to the whole positively determining box.
pub fn homology_modules<F: Field>(
    cx: &FreeComplex<F>,
    modulo: Option<&MonomialIdeal>,
    positions: &[usize],
    window: Option<Window>,
) -> Result<Vec<GradedModule<F>>> {
    if let Some(j) = modulo {
        if j.n() != cx.n() {
            return Err(Error::AmbientMismatch {
                left: cx.n(),
                right: j.n(),
            });
        }
    }
    if let Some(&p) = positions.iter().find(|&&p| p >= cx.len()) {
        return Err(Error::InvalidConfig(format!(
            "position {p} outside a complex of length {}",
            cx.len()
        )));
    }
    let (lo, hi) = homology_box(cx, modulo);
    let window = window.unwrap_or_else(|| Window::for_box(&lo, &hi));
    let degrees = DegreeBox::new(lo, hi);
    let table: Vec<Option<Vec<HomPiece<F::Elem>>>> = (0..degrees.len())
        .into_par_iter()
        .map(|idx| {
            let beta = degrees.point(idx);
            window
                .contains(beta.total())
                .then(|| positions.iter().map(|&p| piece_at(cx, modulo, p, &beta)).collect())
        })
        .collect();
    let field = cx.field();
    Ok((0..positions.len())
        .map(|k| {
            let get = |beta: &MultiDegree| {
                table[degrees.index(beta)]
                    .as_ref()
                    .map(|v| &v[k])
                    .expect("assemble only asks for represented pieces")
            };
            GradedModule::assemble(
                field.clone(),
                lo,
                hi,
                window,
                |beta| get(beta).classes.rank(),
                |beta, v| action_between(field, get(beta), get(&beta.plus_unit(v))),
            )
        })
        .collect())
}

/// `H_p(cx)`.
pub fn homology_module<F: Field>(
    cx: &FreeComplex<F>,
    position: usize,
    window: Option<Window>,
) -> Result<GradedModule<F>> {
    homology_module_mod(cx, None, position, window)
}

/// `H_p(cx ⊗ R/J)`.
pub fn homology_module_mod<F: Field>(
    cx: &FreeComplex<F>,
    modulo: Option<&MonomialIdeal>,
    position: usize,
    window: Option<Window>,
) -> Result<GradedModule<F>> {
    Ok(homology_modules(cx, modulo, &[position], window)?.remove(0))
}
