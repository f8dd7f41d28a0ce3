//! Bounded complexes of multigraded free modules whose differentials have
//! single-term entries `c · x^a`.
//!
//! Column `j` of position `p` stands for the free summand `R(-a_j)`; an entry
//! from column `c` to row `r` must carry the monomial `x^{a_c - a_r}`, which
//! is what makes every multigraded piece of the complex a finite matrix of
//! scalars.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::MonomialIdeal;
use crate::monomial::{monomials_of_degree, Monomial};
use crate::multidegree::MultiDegree;

/// Largest generator count accepted by [`taylor_complex`].
pub const TAYLOR_GENERATOR_CAP: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// Maps go from position `p` to `p - 1`.
    Homological,
    /// Maps go from position `p` to `p + 1`.
    Cohomological,
}

/// A free module `⊕_j R(-a_j)`, recorded by its shifts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeModule {
    pub shifts: Vec<MultiDegree>,
}

impl FreeModule {
    pub fn rank(&self) -> usize {
        self.shifts.len()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Entry<E> {
    pub row: usize,
    pub coef: E,
    pub monomial: Monomial,
}

#[derive(Clone, Debug)]
pub struct FreeComplex<F: Field> {
    field: F,
    n: usize,
    direction: Direction,
    modules: Vec<FreeModule>,
    /// `maps[p][c]` lists the image of column `c` of position `p`.
    maps: Vec<Vec<Vec<Entry<F::Elem>>>>,
}

impl<F: Field> FreeComplex<F> {
    /// Builds a complex from modules and outgoing maps given as
    /// `(row, column, coefficient)` triplets; entry monomials are derived from
    /// the shifts and must be genuine monomials.
    pub fn new(
        field: F,
        n: usize,
        direction: Direction,
        modules: Vec<FreeModule>,
        triplets: Vec<Vec<(usize, usize, F::Elem)>>,
    ) -> Result<Self> {
        if triplets.len() != modules.len() {
            return Err(Error::MalformedComplex(format!(
                "{} modules but {} maps",
                modules.len(),
                triplets.len()
            )));
        }
        let mut cx = FreeComplex {
            field,
            n,
            direction,
            maps: modules.iter().map(|m| vec![Vec::new(); m.rank()]).collect(),
            modules,
        };
        for (p, list) in triplets.into_iter().enumerate() {
            if list.is_empty() {
                continue;
            }
            let t = cx
                .target(p)
                .ok_or_else(|| Error::MalformedComplex(format!("position {p} has no target but a nonzero map")))?;
            for (r, c, coef) in list {
                if cx.field.is_zero(&coef) {
                    continue;
                }
                let (Some(rs), Some(cs)) = (cx.modules[t].shifts.get(r), cx.modules[p].shifts.get(c)) else {
                    return Err(Error::MalformedComplex(format!(
                        "entry ({r},{c}) out of range at position {p}"
                    )));
                };
                let monomial = cs.sub(rs).to_monomial().ok_or_else(|| {
                    Error::MalformedComplex(format!(
                        "entry ({r},{c}) at position {p} is not homogeneous: {cs} - {rs}"
                    ))
                })?;
                cx.maps[p][c].push(Entry { row: r, coef, monomial });
            }
            for col in cx.maps[p].iter_mut() {
                col.sort_by_key(|e| e.row);
            }
        }
        Ok(cx)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    /// Number of positions `0..len()`.
    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.iter().all(|m| m.rank() == 0)
    }

    pub fn module(&self, p: usize) -> &FreeModule {
        &self.modules[p]
    }

    pub fn rank(&self, p: usize) -> usize {
        self.modules.get(p).map_or(0, |m| m.rank())
    }

    pub fn column(&self, p: usize, c: usize) -> &[Entry<F::Elem>] {
        &self.maps[p][c]
    }

    /// Position receiving the map out of `p`.
    pub fn target(&self, p: usize) -> Option<usize> {
        let t = match self.direction {
            Direction::Homological => p.checked_sub(1)?,
            Direction::Cohomological => p + 1,
        };
        (t < self.len()).then_some(t)
    }

    /// Position whose map lands in `p`.
    pub fn source(&self, p: usize) -> Option<usize> {
        let s = match self.direction {
            Direction::Homological => p + 1,
            Direction::Cohomological => p.checked_sub(1)?,
        };
        (s < self.len()).then_some(s)
    }

    /// Componentwise minimum and maximum of all shifts.
    pub fn shift_bounds(&self) -> (MultiDegree, MultiDegree) {
        let mut all = self.modules.iter().flat_map(|m| &m.shifts);
        let Some(first) = all.next() else {
            return (MultiDegree::zero(self.n), MultiDegree::zero(self.n));
        };
        all.fold((*first, *first), |(lo, hi), s| (lo.meet(s), hi.join(s)))
    }

    /// Checks `d ∘ d = 0` entry by entry over `k[x1..xn]`.
    pub fn check_d_squared(&self) -> Result<()> {
        let f = &self.field;
        for p in 0..self.len() {
            let Some(t) = self.target(p) else { continue };
            let Some(u) = self.target(t) else { continue };
            for c in 0..self.rank(p) {
                let mut acc: Vec<Option<(F::Elem, Monomial)>> = vec![None; self.rank(u)];
                for e in &self.maps[p][c] {
                    for e2 in &self.maps[t][e.row] {
                        let prod = f.mul(&e.coef, &e2.coef);
                        let mono = e.monomial.try_mul(&e2.monomial)?;
                        match &mut acc[e2.row] {
                            slot @ None => *slot = Some((prod, mono)),
                            Some((v, m)) => {
                                if *m != mono {
                                    return Err(Error::MalformedComplex(format!(
                                        "inhomogeneous composite at position {p}, column {c}"
                                    )));
                                }
                                *v = f.add(v, &prod);
                            }
                        }
                    }
                }
                if let Some(r) = acc.iter().position(|s| s.as_ref().is_some_and(|(v, _)| !f.is_zero(v))) {
                    return Err(Error::MalformedComplex(format!(
                        "d∘d is nonzero at position {p}, column {c}, row {r}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Columns of position `p` alive in multidegree `beta` of `F ⊗ R/J`
    /// (`J = 0` when `modulo` is `None`), in increasing order.
    pub fn piece_basis(&self, p: usize, beta: &MultiDegree, modulo: Option<&MonomialIdeal>) -> Vec<usize> {
        let Some(m) = self.modules.get(p) else {
            return Vec::new();
        };
        m.shifts
            .iter()
            .enumerate()
            .filter(|(_, s)| {
                s.leq(beta)
                    && modulo.map_or(true, |j| {
                        let w = beta.sub(s).to_monomial().expect("nonnegative");
                        !j.contains(&w)
                    })
            })
            .map(|(c, _)| c)
            .collect()
    }

    /// Matrix of the map out of `p` in multidegree `beta`, on the given bases.
    pub fn piece_matrix(&self, p: usize, from: &[usize], to: &[usize]) -> crate::linalg::Matrix<F::Elem> {
        let mut m = crate::linalg::Matrix::zeros(&self.field, to.len(), from.len());
        for (j, &c) in from.iter().enumerate() {
            for e in &self.maps[p][c] {
                if let Ok(i) = to.binary_search(&e.row) {
                    m.set(i, j, e.coef.clone());
                }
            }
        }
        m
    }

    /// Basis of the total-degree piece `(F_p)_d`: every column `c` paired with
    /// every monomial of degree `d - |a_c|`.
    pub fn graded_piece_basis(&self, p: usize, degree: i32) -> Vec<(usize, Monomial)> {
        let mut out = Vec::new();
        let Some(m) = self.modules.get(p) else { return out };
        for (c, s) in m.shifts.iter().enumerate() {
            let d = degree - s.total();
            if d < 0 {
                continue;
            }
            for mono in monomials_of_degree(self.n, d as u32) {
                out.push((c, mono));
            }
        }
        out
    }

    /// Sparse-triplet dump: one `d<p> <row> <col> <coef> <monomial>` line per
    /// entry, preceded by `F<p> <rank>` lines with the shifts.
    pub fn dump_triplets(&self) -> String {
        let mut out = String::new();
        for (p, m) in self.modules.iter().enumerate() {
            let _ = write!(out, "F{p} {}", m.rank());
            for s in &m.shifts {
                let _ = write!(out, " {s}");
            }
            out.push('\n');
        }
        for (p, cols) in self.maps.iter().enumerate() {
            for (c, col) in cols.iter().enumerate() {
                for e in col {
                    let _ = writeln!(out, "d{p} {} {c} {:?} {}", e.row, e.coef, e.monomial);
                }
            }
        }
        out
    }
}

/// Subsets of `0..r` of size `k` as bitmasks, in lexicographic order of
/// their sorted elements.
pub(crate) fn subsets_of_size(r: usize, k: usize) -> Vec<u32> {
    fn rec(start: usize, r: usize, k: usize, cur: u32, out: &mut Vec<u32>) {
        if k == 0 {
            out.push(cur);
            return;
        }
        for i in start..=(r - k) {
            rec(i + 1, r, k - 1, cur | (1 << i), out);
        }
    }
    let mut out = Vec::new();
    if k <= r {
        rec(0, r, k, 0, &mut out);
    }
    out
}

/// The complex on subsets of `gens` with shifts `lcm(S)` and differential
/// `e_S ↦ Σ_k (-1)^k lcm(S)/lcm(S∖s_k) e_{S∖s_k}`.
fn lcm_complex<F: Field>(field: F, n: usize, gens: &[Monomial]) -> Result<FreeComplex<F>> {
    let r = gens.len();
    let layers: Vec<Vec<u32>> = (0..=r).map(|k| subsets_of_size(r, k)).collect();
    let mut index = vec![0usize; 1 << r];
    for layer in &layers {
        for (i, &s) in layer.iter().enumerate() {
            index[s as usize] = i;
        }
    }
    let lcm_of = |s: u32| {
        (0..r)
            .filter(|&i| s & (1 << i) != 0)
            .fold(Monomial::one(n), |acc, i| acc.lcm(&gens[i]))
    };
    let modules = layers
        .iter()
        .map(|layer| FreeModule {
            shifts: layer.iter().map(|&s| MultiDegree::from(&lcm_of(s))).collect(),
        })
        .collect();
    let one = field.one();
    let minus = field.neg(&one);
    let triplets = layers
        .iter()
        .map(|layer| {
            let mut list = Vec::new();
            for (c, &s) in layer.iter().enumerate() {
                let mut k = 0;
                for i in 0..r {
                    if s & (1 << i) == 0 {
                        continue;
                    }
                    let row = index[(s & !(1 << i)) as usize];
                    list.push((row, c, if k % 2 == 0 { one.clone() } else { minus.clone() }));
                    k += 1;
                }
            }
            list
        })
        .collect();
    FreeComplex::new(field, n, Direction::Homological, modules, triplets)
}

/// The Koszul complex on `x1..xn`, a free resolution of `k`.
pub fn koszul_complex<F: Field>(field: F, n: usize) -> Result<FreeComplex<F>> {
    crate::monomial::check_vars(n)?;
    let vars: Vec<Monomial> = (0..n).map(|j| Monomial::var(n, j).unwrap()).collect();
    lcm_complex(field, n, &vars)
}

/// The Taylor resolution of `R/I`.
pub fn taylor_complex<F: Field>(field: F, ideal: &MonomialIdeal) -> Result<FreeComplex<F>> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::NotProper);
    }
    let r = ideal.generators().len();
    if r > TAYLOR_GENERATOR_CAP {
        return Err(Error::TooManyGenerators {
            found: r,
            cap: TAYLOR_GENERATOR_CAP,
        });
    }
    lcm_complex(field, ideal.n(), ideal.generators())
}

/// The one-term complex `0 → R → 0`.
pub fn ring_complex<F: Field>(field: F, n: usize) -> Result<FreeComplex<F>> {
    crate::monomial::check_vars(n)?;
    FreeComplex::new(
        field,
        n,
        Direction::Homological,
        vec![FreeModule {
            shifts: vec![MultiDegree::zero(n)],
        }],
        vec![Vec::new()],
    )
}

/// Total complex of `F ⊗ G` with the sign `(-1)^i` on the second factor.
/// Columns of position `m` are ordered by `i`, then `F_i` column, then `G_j`
/// column.
pub fn tensor_complexes<F: Field>(a: &FreeComplex<F>, b: &FreeComplex<F>) -> Result<FreeComplex<F>> {
    if a.n != b.n {
        return Err(Error::AmbientMismatch { left: a.n, right: b.n });
    }
    if a.field.spec() != b.field.spec() {
        return Err(Error::MalformedComplex("tensor factors over different fields".into()));
    }
    if a.direction != Direction::Homological || b.direction != Direction::Homological {
        return Err(Error::MalformedComplex(
            "tensor product expects homological complexes".into(),
        ));
    }
    let f = &a.field;
    let total = a.len() + b.len() - 1;
    // offset[m][i] = first column of F_i ⊗ G_{m-i} inside position m.
    let mut offset = vec![vec![usize::MAX; a.len()]; total];
    let mut modules = Vec::with_capacity(total);
    for (m, off) in offset.iter_mut().enumerate() {
        let mut shifts = Vec::new();
        for i in 0..a.len() {
            let Some(j) = m.checked_sub(i).filter(|&j| j < b.len()) else {
                continue;
            };
            off[i] = shifts.len();
            for sa in &a.modules[i].shifts {
                for sb in &b.modules[j].shifts {
                    shifts.push(sa.add(sb));
                }
            }
        }
        modules.push(FreeModule { shifts });
    }
    let mut triplets = vec![Vec::new(); total];
    for (m, list) in triplets.iter_mut().enumerate() {
        for i in 0..a.len() {
            let Some(j) = m.checked_sub(i).filter(|&j| j < b.len()) else {
                continue;
            };
            let rb = b.rank(j);
            for ca in 0..a.rank(i) {
                for cb in 0..rb {
                    let col = offset[m][i] + ca * rb + cb;
                    if i > 0 {
                        for e in &a.maps[i][ca] {
                            let row = offset[m - 1][i - 1] + e.row * rb + cb;
                            list.push((row, col, e.coef.clone()));
                        }
                    }
                    if j > 0 {
                        let rb_lower = b.rank(j - 1);
                        for e in &b.maps[j][cb] {
                            let row = offset[m - 1][i] + ca * rb_lower + e.row;
                            let coef = if i % 2 == 0 { e.coef.clone() } else { f.neg(&e.coef) };
                            list.push((row, col, coef));
                        }
                    }
                }
            }
        }
    }
    FreeComplex::new(a.field.clone(), a.n, Direction::Homological, modules, triplets)
}

/// `Hom(F, R)`: shifts negate, maps transpose, and the direction flips, so
/// position `i` of the result is `Hom(F_i, R)` and its homology there is the
/// `i`-th cohomology of the dual.
pub fn dualize_into_ring<F: Field>(cx: &FreeComplex<F>) -> Result<FreeComplex<F>> {
    let direction = match cx.direction {
        Direction::Homological => Direction::Cohomological,
        Direction::Cohomological => Direction::Homological,
    };
    let modules: Vec<FreeModule> = cx
        .modules
        .iter()
        .map(|m| FreeModule {
            shifts: m.shifts.iter().map(|s| s.neg()).collect(),
        })
        .collect();
    let mut triplets = vec![Vec::new(); cx.len()];
    for p in 0..cx.len() {
        let Some(t) = cx.target(p) else { continue };
        // The dual map runs from position t back to position p.
        for (c, col) in cx.maps[p].iter().enumerate() {
            for e in col {
                triplets[t].push((c, e.row, e.coef.clone()));
            }
        }
    }
    FreeComplex::new(cx.field.clone(), cx.n, direction, modules, triplets)
}
