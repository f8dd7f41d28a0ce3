//! Finitely generated `Z^n`-graded modules over `k[x1..xn]`, stored piece by
//! piece on a box of multidegrees.
//!
//! Every module produced here (quotients `R/I`, homology of monomial
//! complexes, Tor and Ext of monomial quotients) is *positively determined*
//! by a box `[lo, hi]`: it vanishes outside `β >= lo`, and for `β_v >= hi_v`
//! multiplication by `x_v` is the identity between `M_β` and `M_{β+e_v}`.
//! So the pieces on the box describe the module in every degree. The
//! `Z`-grading used for regularity is the total degree `|β|`.
//!
//! A [`Window`] bounds which total degrees were actually computed; pieces of
//! box points outside it are unrepresented rather than zero.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::extended::{ExtendedInt, Finite, NegInfinity, PosInfinity};
use crate::field::Field;
use crate::ideal::MonomialIdeal;
use crate::linalg::Matrix;
use crate::multidegree::{DegreeBox, MultiDegree};

/// A range `[d_min, d_max]` of total degrees.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Window {
    pub d_min: i32,
    pub d_max: i32,
}

impl Window {
    pub fn new(d_min: i32, d_max: i32) -> Result<Self> {
        if d_min > d_max {
            return Err(Error::InvalidConfig(format!("degenerate window [{d_min}, {d_max}]")));
        }
        Ok(Window { d_min, d_max })
    }

    pub fn contains(&self, d: i32) -> bool {
        self.d_min <= d && d <= self.d_max
    }

    /// The smallest window that represents a module positively determined
    /// by `[lo, hi]`, plus `n` degrees of headroom for Koszul homology.
    pub fn for_box(lo: &MultiDegree, hi: &MultiDegree) -> Self {
        Window {
            d_min: lo.total(),
            d_max: hi.total() + lo.n() as i32,
        }
    }

    pub fn covers(&self, lo: &MultiDegree, hi: &MultiDegree) -> bool {
        self.d_min <= lo.total() && self.d_max >= hi.total() + lo.n() as i32
    }
}

#[derive(Clone, Debug)]
struct Piece<E> {
    dim: usize,
    /// `actions[v]` maps `M_p -> M_{p+e_v}`; absent on the upper face in
    /// direction `v` (where it is the identity) or when the target is
    /// unrepresented.
    actions: Vec<Option<Matrix<E>>>,
}

/// A `Z^n`-graded module truncated to a window of total degrees.
#[derive(Clone, Debug)]
pub struct GradedModule<F: Field> {
    field: F,
    degrees: DegreeBox,
    window: Window,
    pieces: Vec<Option<Piece<F::Elem>>>,
}

/// Alias matching the common name for this representation.
pub type TruncatedGradedModule<F> = GradedModule<F>;

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

impl<F: Field> GradedModule<F> {
    /// Assembles a module from piece dimensions and action matrices on the
    /// box `[lo, hi]`. `dim(p)` is called for every box point whose total
    /// degree lies in `window`; `action(p, v)` for every represented `p`
    /// with `p_v < hi_v` whose target is represented.
    pub fn assemble(
        field: F,
        lo: MultiDegree,
        hi: MultiDegree,
        window: Window,
        dims: impl Fn(&MultiDegree) -> usize,
        action: impl Fn(&MultiDegree, usize) -> Matrix<F::Elem>,
    ) -> Self {
        let degrees = DegreeBox::new(lo, hi);
        let n = lo.n();
        let dim_table: Vec<Option<usize>> = degrees
            .points()
            .map(|p| window.contains(p.total()).then(|| dims(&p)))
            .collect();
        let pieces = degrees
            .points()
            .enumerate()
            .map(|(idx, p)| {
                let dim = dim_table[idx]?;
                let actions = (0..n)
                    .map(|v| {
                        if p.get(v) >= hi.get(v) {
                            return None;
                        }
                        let q = p.plus_unit(v);
                        let target = dim_table[degrees.index(&q)]?;
                        let m = action(&p, v);
                        debug_assert_eq!((m.rows(), m.cols()), (target, dim));
                        Some(m)
                    })
                    .collect();
                Some(Piece { dim, actions })
            })
            .collect();
        GradedModule {
            field,
            degrees,
            window,
            pieces,
        }
    }

    /// The monomial subquotient `outer / inner` (with `inner ⊆ outer`); for
    /// `outer` the unit ideal this is `R/inner`.
    pub fn monomial_subquotient(field: F, outer: &MonomialIdeal, inner: &MonomialIdeal) -> Result<Self> {
        if outer.n() != inner.n() {
            return Err(Error::AmbientMismatch {
                left: outer.n(),
                right: inner.n(),
            });
        }
        if !outer.contains_ideal(inner) {
            return Err(Error::InvalidConfig(format!("{inner} is not contained in {outer}")));
        }
        let n = outer.n();
        let hi: Vec<i32> = outer
            .max_exponents()
            .iter()
            .zip(inner.max_exponents())
            .map(|(&a, b)| a.max(b) as i32)
            .collect();
        let lo = MultiDegree::zero(n);
        let hi = MultiDegree::from_slice(&hi);
        let present = |p: &MultiDegree| {
            let m = p.to_monomial().expect("box points are nonnegative");
            outer.contains(&m) && !inner.contains(&m)
        };
        let one = field.one();
        let zero = field.zero();
        Ok(Self::assemble(
            field.clone(),
            lo,
            hi,
            Window::for_box(&lo, &hi),
            |p| present(p) as usize,
            |p, v| {
                let src = present(p) as usize;
                let dst = present(&p.plus_unit(v)) as usize;
                let mut m = Matrix::from_rows(vec![vec![zero.clone(); src]; dst], src);
                if src == 1 && dst == 1 {
                    m.set(0, 0, one.clone());
                }
                m
            },
        ))
    }

    /// `R/I`.
    pub fn quotient_ring(field: F, ideal: &MonomialIdeal) -> Result<Self> {
        Self::monomial_subquotient(field, &MonomialIdeal::unit(ideal.n())?, ideal)
    }

    /// The residue field `k = R/(x1..xn)` in degree 0.
    pub fn residue_field(field: F, n: usize) -> Result<Self> {
        Self::quotient_ring(field, &MonomialIdeal::maximal(n)?)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.degrees.lo().n()
    }

    pub fn lo(&self) -> MultiDegree {
        self.degrees.lo()
    }

    pub fn hi(&self) -> MultiDegree {
        self.degrees.hi()
    }

    pub fn degree_box(&self) -> &DegreeBox {
        &self.degrees
    }

    pub fn window(&self) -> Window {
        self.window
    }

    /// Whether every box point is represented.
    pub fn is_complete(&self) -> bool {
        self.pieces.iter().all(|p| p.is_some())
    }

    /// `dim M_β`, or `None` when `β` falls on an unrepresented piece.
    pub fn dim(&self, beta: &MultiDegree) -> Option<usize> {
        if !self.lo().leq(beta) {
            return Some(0);
        }
        let p = self.degrees.clamp_above(beta);
        self.pieces[self.degrees.index(&p)].as_ref().map(|pc| pc.dim)
    }

    /// Multiplication by `x_v` from `M_β` to `M_{β+e_v}`.
    pub fn action(&self, v: usize, beta: &MultiDegree) -> Option<Matrix<F::Elem>> {
        let target = beta.plus_unit(v);
        let dst = self.dim(&target)?;
        if !self.lo().leq(beta) {
            return Some(Matrix::zeros(&self.field, dst, 0));
        }
        let p = self.degrees.clamp_above(beta);
        let piece = self.pieces[self.degrees.index(&p)].as_ref()?;
        if beta.get(v) >= self.hi().get(v) {
            return Some(Matrix::identity(&self.field, piece.dim));
        }
        piece.actions[v].clone()
    }

    /// Multiplication by the monomial `x^a` from `M_β` to `M_{β+a}`.
    pub fn monomial_action(&self, beta: &MultiDegree, a: &MultiDegree) -> Option<Matrix<F::Elem>> {
        let mut cur = *beta;
        let mut acc = Matrix::identity(&self.field, self.dim(beta)?);
        for v in 0..self.n() {
            for _ in 0..a.get(v) {
                let step = self.action(v, &cur)?;
                acc = step.mul(&self.field, &acc);
                cur = cur.plus_unit(v);
            }
        }
        Some(acc)
    }

    pub fn is_zero(&self) -> bool {
        self.pieces.iter().flatten().all(|p| p.dim == 0)
    }

    /// Box points with a nonzero represented piece.
    pub fn support(&self) -> Vec<MultiDegree> {
        self.degrees
            .points()
            .zip(&self.pieces)
            .filter(|(_, p)| p.as_ref().is_some_and(|pc| pc.dim > 0))
            .map(|(d, _)| d)
            .collect()
    }

    /// Number of multidegrees `β >= lo` with `|β| = d` that clamp onto `p`.
    fn fibre_size(&self, p: &MultiDegree, d: i32) -> u64 {
        let free = (0..self.n()).filter(|&v| p.get(v) == self.hi().get(v)).count() as u64;
        let extra = d - p.total();
        if extra < 0 {
            return 0;
        }
        if free == 0 {
            return (extra == 0) as u64;
        }
        binomial(extra as u64 + free - 1, free - 1)
    }

    /// `dim M_d` in total degree `d`, or `None` if some contributing piece is
    /// unrepresented.
    pub fn total_dim(&self, d: i32) -> Option<u64> {
        let mut acc = 0u64;
        for (p, piece) in self.degrees.points().zip(&self.pieces) {
            let count = self.fibre_size(&p, d);
            if count == 0 {
                continue;
            }
            acc += count * piece.as_ref()?.dim as u64;
        }
        Some(acc)
    }

    /// All `β >= lo` with `|β| = d`.
    pub fn total_degree_points(&self, d: i32) -> Vec<MultiDegree> {
        let lo = self.lo();
        let n = self.n();
        let extra = d - lo.total();
        let mut out = Vec::new();
        if extra < 0 {
            return out;
        }
        fn rec(k: usize, left: i32, cur: &mut MultiDegree, n: usize, out: &mut Vec<MultiDegree>) {
            if k == n - 1 {
                cur.set(k, cur.get(k) + left);
                out.push(*cur);
                cur.set(k, cur.get(k) - left);
                return;
            }
            for e in (0..=left).rev() {
                cur.set(k, cur.get(k) + e);
                rec(k + 1, left - e, cur, n, out);
                cur.set(k, cur.get(k) - e);
            }
        }
        let mut cur = lo;
        rec(0, extra, &mut cur, n, &mut out);
        out
    }

    /// Multiplication by `x_v` from `M_d` to `M_{d+1}` in the total grading,
    /// with bases ordered by [`Self::total_degree_points`].
    pub fn total_action(&self, v: usize, d: i32) -> Option<Matrix<F::Elem>> {
        let src = self.total_degree_points(d);
        let dst = self.total_degree_points(d + 1);
        let src_dims: Vec<usize> = src.iter().map(|b| self.dim(b)).collect::<Option<_>>()?;
        let dst_dims: Vec<usize> = dst.iter().map(|b| self.dim(b)).collect::<Option<_>>()?;
        let rows: usize = dst_dims.iter().sum();
        let cols: usize = src_dims.iter().sum();
        let mut out = Matrix::zeros(&self.field, rows, cols);
        let mut col0 = 0;
        for (b, &w) in src.iter().zip(&src_dims) {
            let target = b.plus_unit(v);
            let t = dst.iter().position(|x| *x == target).expect("target in next degree");
            let row0: usize = dst_dims[..t].iter().sum();
            let block = self.action(v, b)?;
            for r in 0..block.rows() {
                for c in 0..block.cols() {
                    out.set(row0 + r, col0 + c, block.get(r, c).clone());
                }
            }
            col0 += w;
        }
        Some(out)
    }

    /// `(inf M, sup M, finite length)`. The zero module gives `(+inf, -inf, true)`.
    ///
    /// Finite length is decided exactly: a nonzero piece on an upper face of
    /// the box repeats forever in that direction.
    pub fn sup_inf(&self) -> (ExtendedInt, ExtendedInt, bool) {
        let support = self.support();
        if support.is_empty() {
            return (PosInfinity, NegInfinity, true);
        }
        let hi = self.hi();
        let infinite = support.iter().any(|p| (0..self.n()).any(|v| p.get(v) == hi.get(v)));
        let inf = support.iter().map(|p| p.total()).min().unwrap();
        let sup = if infinite {
            PosInfinity
        } else {
            Finite(support.iter().map(|p| p.total()).max().unwrap() as i64)
        };
        (Finite(inf as i64), sup, !infinite)
    }

    /// The twisted module `M(-a)` for a multidegree `a`: `M(-a)_β = M_{β-a}`.
    pub fn shifted(&self, a: &MultiDegree) -> Self {
        let lo = self.lo().add(a);
        let hi = self.hi().add(a);
        GradedModule {
            field: self.field.clone(),
            degrees: DegreeBox::new(lo, hi),
            window: Window {
                d_min: self.window.d_min + a.total(),
                d_max: self.window.d_max + a.total(),
            },
            pieces: self.pieces.clone(),
        }
    }

    /// `M(-a)` for an integer `a`, shifting along `x1`.
    pub fn shifted_total(&self, a: i32) -> Self {
        let mut d = MultiDegree::zero(self.n());
        d.set(0, a);
        self.shifted(&d)
    }

    /// Checks that `x_v x_w = x_w x_v` on every represented piece.
    pub fn check_commuting(&self) -> Result<()> {
        let f = &self.field;
        for p in self.degrees.points() {
            for v in 0..self.n() {
                for w in (v + 1)..self.n() {
                    let Some(vw) = self
                        .action(v, &p)
                        .and_then(|a| self.action(w, &p.plus_unit(v)).map(|b| b.mul(f, &a)))
                    else {
                        continue;
                    };
                    let Some(wv) = self
                        .action(w, &p)
                        .and_then(|a| self.action(v, &p.plus_unit(w)).map(|b| b.mul(f, &a)))
                    else {
                        continue;
                    };
                    if vw != wv {
                        return Err(Error::NonCommutingActions(format!(
                            "x{} and x{} at multidegree {p}",
                            v + 1,
                            w + 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Replaces the action of `x_v` at box point `p` (test hook for corrupt input).
    #[doc(hidden)]
    pub fn overwrite_action(&mut self, p: &MultiDegree, v: usize, m: Matrix<F::Elem>) {
        let idx = self.degrees.index(p);
        if let Some(piece) = self.pieces[idx].as_mut() {
            piece.actions[v] = Some(m);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::monomial::monomials_of_degree;

    fn gf() -> PrimeField {
        PrimeField::new(32003).unwrap()
    }

    fn ideal(n: usize, e: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, e).unwrap()
    }

    #[test]
    fn quotient_dims_match_enumeration() {
        let i = ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[1, 0, 1], &[0, 2, 0]]);
        let m = GradedModule::quotient_ring(gf(), &i).unwrap();
        for d in 0..8 {
            let brute = monomials_of_degree(3, d).iter().filter(|u| !i.contains(u)).count();
            assert_eq!(m.total_dim(d as i32), Some(brute as u64), "degree {d}");
        }
        m.check_commuting().unwrap();
    }

    #[test]
    fn residue_field_is_finite_length() {
        let k = GradedModule::residue_field(gf(), 3).unwrap();
        assert_eq!(k.sup_inf(), (Finite(0), Finite(0), true));
        let k3 = k.shifted_total(3);
        assert_eq!(k3.sup_inf(), (Finite(3), Finite(3), true));
    }

    #[test]
    fn zero_module_conventions() {
        let z = GradedModule::quotient_ring(gf(), &MonomialIdeal::unit(2).unwrap()).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.sup_inf(), (PosInfinity, NegInfinity, true));
    }

    #[test]
    fn polynomial_ring_is_infinite() {
        let r = GradedModule::quotient_ring(gf(), &MonomialIdeal::zero(2).unwrap()).unwrap();
        assert_eq!(r.sup_inf(), (Finite(0), PosInfinity, false));
        assert_eq!(r.total_dim(4), Some(5));
    }

    #[test]
    fn total_actions_commute() {
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        let m = GradedModule::quotient_ring(gf(), &i).unwrap();
        let f = gf();
        for d in 0..5 {
            let a = m
                .total_action(1, d + 1)
                .unwrap()
                .mul(&f, &m.total_action(0, d).unwrap());
            let b = m
                .total_action(0, d + 1)
                .unwrap()
                .mul(&f, &m.total_action(1, d).unwrap());
            assert_eq!(a, b);
        }
    }

    #[test]
    fn corrupt_actions_are_detected() {
        let mut m = GradedModule::quotient_ring(gf(), &MonomialIdeal::zero(2).unwrap()).unwrap();
        assert!(m.check_commuting().is_ok());
        // R has a one-point box, so build a bigger one and break x1 at the origin.
        m = GradedModule::quotient_ring(gf(), &ideal(2, &[&[3, 0], &[0, 3]])).unwrap();
        let p = MultiDegree::zero(2);
        m.overwrite_action(&p, 0, Matrix::from_rows(vec![vec![2]], 1));
        assert!(matches!(m.check_commuting(), Err(Error::NonCommutingActions(_))));
    }
}
