//! Minimal multigraded free resolutions of positively determined modules.
//!
//! Generators and syzygies are found multidegree by multidegree on the
//! module's box, in order of total degree: at `β` the new generators span a
//! complement of everything already produced by lower generators.

use crate::complex::{Direction, FreeComplex, FreeModule};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{EchelonBasis, Matrix};
use crate::module::GradedModule;
use crate::multidegree::MultiDegree;

/// Generators of one free module: shifts plus, for each, its image as a
/// vector over the basis of the previous term at that shift.
struct Layer<E> {
    shifts: Vec<MultiDegree>,
    images: Vec<Vec<E>>,
}

fn basis_at(shifts: &[MultiDegree], beta: &MultiDegree) -> Vec<usize> {
    (0..shifts.len()).filter(|&g| shifts[g].leq(beta)).collect()
}

/// Re-expresses a vector over `from` (a sub-basis) in the basis `to`.
fn embed<E: Clone>(zero: &E, v: &[E], from: &[usize], to: &[usize]) -> Vec<E> {
    let mut out = vec![zero.clone(); to.len()];
    for (x, g) in v.iter().zip(from) {
        let j = to.binary_search(g).expect("sub-basis");
        out[j] = x.clone();
    }
    out
}

/// Picks new generators at `beta` spanning `candidates` modulo `existing`.
fn complement<F: Field>(
    f: &F,
    dim: usize,
    existing: Vec<Vec<F::Elem>>,
    candidates: Vec<Vec<F::Elem>>,
) -> Vec<Vec<F::Elem>> {
    let mut span = EchelonBasis::span(f, dim, existing.clone());
    let mut rows = existing;
    let mut out = Vec::new();
    for z in candidates {
        if !span.contains(f, &z) {
            rows.push(z.clone());
            span = EchelonBasis::span(f, dim, rows.clone());
            out.push(z);
        }
    }
    out
}

fn unit_vectors<F: Field>(f: &F, dim: usize) -> Vec<Vec<F::Elem>> {
    (0..dim)
        .map(|i| {
            let mut e = vec![f.zero(); dim];
            e[i] = f.one();
            e
        })
        .collect()
}

/// Minimal free resolution `F` of `M` with `H_0(F) = M`. Requires a complete
/// module; fails with [`Error::ResolutionDepth`] if it does not end within
/// `n` steps.
pub fn minimal_resolution<F: Field>(m: &GradedModule<F>) -> Result<FreeComplex<F>> {
    if !m.is_complete() {
        let w = m.window();
        return Err(Error::WindowTooSmall {
            d_min: w.d_min,
            d_max: w.d_max,
            n: m.n(),
        });
    }
    let f = m.field();
    let n = m.n();
    let mut order: Vec<MultiDegree> = m.degree_box().points().collect();
    order.sort_by_key(|p| (p.total(), *p));

    // Generators of M.
    let mut gens: Vec<MultiDegree> = Vec::new();
    let mut vecs: Vec<Vec<F::Elem>> = Vec::new();
    let image_in_module = |gens: &[MultiDegree], vecs: &[Vec<F::Elem>], beta: &MultiDegree, g: usize| {
        let a = m
            .monomial_action(&gens[g], &beta.sub(&gens[g]))
            .expect("complete module");
        a.mul_vec(f, &vecs[g])
    };
    for beta in &order {
        let dim = m.dim(beta).expect("complete module");
        if dim == 0 {
            continue;
        }
        let existing = basis_at(&gens, beta)
            .into_iter()
            .map(|g| image_in_module(&gens, &vecs, beta, g))
            .collect();
        for v in complement(f, dim, existing, unit_vectors(f, dim)) {
            gens.push(*beta);
            vecs.push(v);
        }
    }
    let augmentation = |beta: &MultiDegree| {
        let cols = basis_at(&gens, beta);
        let dim = m.dim(beta).expect("complete module");
        let mut mat = Matrix::zeros(f, dim, cols.len());
        for (j, &g) in cols.iter().enumerate() {
            for (i, x) in image_in_module(&gens, &vecs, beta, g).into_iter().enumerate() {
                mat.set(i, j, x);
            }
        }
        mat
    };

    let mut layers: Vec<Layer<F::Elem>> = vec![Layer {
        shifts: gens.clone(),
        images: Vec::new(),
    }];
    loop {
        let k = layers.len();
        let prev = &layers[k - 1];
        let map_at = |beta: &MultiDegree| -> Matrix<F::Elem> {
            if k == 1 {
                return augmentation(beta);
            }
            let below = &layers[k - 2].shifts;
            let rows = basis_at(below, beta);
            let cols = basis_at(&prev.shifts, beta);
            let mut mat = Matrix::zeros(f, rows.len(), cols.len());
            for (j, &h) in cols.iter().enumerate() {
                let from = basis_at(below, &prev.shifts[h]);
                for (i, x) in embed(&f.zero(), &prev.images[h], &from, &rows).into_iter().enumerate() {
                    mat.set(i, j, x);
                }
            }
            mat
        };
        let mut shifts: Vec<MultiDegree> = Vec::new();
        let mut images: Vec<Vec<F::Elem>> = Vec::new();
        for beta in &order {
            let basis = basis_at(&prev.shifts, beta);
            if basis.is_empty() {
                continue;
            }
            let kernel = map_at(beta).kernel_basis(f);
            if kernel.is_empty() {
                continue;
            }
            let existing = basis_at(&shifts, beta)
                .into_iter()
                .map(|h| embed(&f.zero(), &images[h], &basis_at(&prev.shifts, &shifts[h]), &basis))
                .collect();
            for z in complement(f, basis.len(), existing, kernel) {
                shifts.push(*beta);
                images.push(z);
            }
        }
        if shifts.is_empty() {
            break;
        }
        if k > n {
            return Err(Error::ResolutionDepth(n));
        }
        layers.push(Layer { shifts, images });
    }

    let modules = layers
        .iter()
        .map(|l| FreeModule {
            shifts: l.shifts.clone(),
        })
        .collect();
    let mut triplets = vec![Vec::new(); layers.len()];
    for k in 1..layers.len() {
        let below = &layers[k - 1].shifts;
        for (c, (s, v)) in layers[k].shifts.iter().zip(&layers[k].images).enumerate() {
            for (x, r) in v.iter().zip(basis_at(below, s)) {
                if !f.is_zero(x) {
                    triplets[k].push((r, c, x.clone()));
                }
            }
        }
    }
    FreeComplex::new(f.clone(), n, Direction::Homological, modules, triplets)
}
