//! Monomial ideals: minimal generating sets, membership, and the standard
//! ideal operations (sum, product, intersection, colon, saturation).

use std::fmt;

use crate::error::{Error, Result};
use crate::extended::{ExtendedInt, Finite, NegInfinity};
use crate::monomial::{check_vars, monomials_in_box, Monomial};

/// A monomial ideal given by its minimal generators, kept in canonical order
/// (total degree, then `x1 > x2 > …` lexicographically).
///
/// The zero ideal has no generators; the unit ideal is generated by `1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Reduces `gens` to the divisibility antichain they generate.
    pub fn minimalize(gens: impl IntoIterator<Item = Monomial>, n: usize) -> Result<Self> {
        check_vars(n)?;
        let mut all: Vec<Monomial> = Vec::new();
        for g in gens {
            if g.n() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    found: g.n(),
                });
            }
            all.push(g);
        }
        // Sorting by degree first means any divisor of `g` precedes it.
        all.sort();
        all.dedup();
        let mut kept: Vec<Monomial> = Vec::with_capacity(all.len());
        for g in all {
            if !kept.iter().any(|k| k.divides(&g)) {
                kept.push(g);
            }
        }
        Ok(MonomialIdeal { n, gens: kept })
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::minimalize([], n)
    }

    pub fn unit(n: usize) -> Result<Self> {
        Self::minimalize([Monomial::one(n)], n)
    }

    /// The homogeneous maximal ideal `(x1, …, xn)`.
    pub fn maximal(n: usize) -> Result<Self> {
        check_vars(n)?;
        Self::minimalize((0..n).map(|j| Monomial::var(n, j).unwrap()), n)
    }

    /// `(x1, …, xt)`.
    pub fn initial_segment(n: usize, t: usize) -> Result<Self> {
        check_vars(n)?;
        if t > n {
            return Err(Error::VariableIndex { index: t, n });
        }
        Self::minimalize((0..t).map(|j| Monomial::var(n, j).unwrap()), n)
    }

    /// Convenience constructor from exponent vectors.
    pub fn from_exponents(n: usize, exps: &[&[u32]]) -> Result<Self> {
        let gens = exps.iter().map(|e| Monomial::new(e)).collect::<Result<Vec<_>>>()?;
        Self::minimalize(gens, n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first().is_some_and(|g| g.is_one())
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    pub fn contains(&self, u: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(u))
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// Componentwise maximum exponent over the generators.
    pub fn max_exponents(&self) -> Vec<u32> {
        let mut out = vec![0; self.n];
        for g in &self.gens {
            for (o, &e) in out.iter_mut().zip(g.exponents()) {
                *o = (*o).max(e as u32);
            }
        }
        out
    }

    pub fn max_generator_degree(&self) -> u32 {
        self.gens.iter().map(|g| g.total_degree()).max().unwrap_or(0)
    }

    fn same_ring(&self, other: &MonomialIdeal) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::AmbientMismatch {
                left: self.n,
                right: other.n,
            })
        }
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ring(other)?;
        Self::minimalize(self.gens.iter().chain(&other.gens).copied(), self.n)
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ring(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.try_mul(b)?);
            }
        }
        Self::minimalize(gens, self.n)
    }

    pub fn power(&self, k: u32) -> Result<MonomialIdeal> {
        let mut acc = Self::unit(self.n)?;
        for _ in 0..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ring(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        Self::minimalize(gens, self.n)
    }

    /// `(I : v)` for a single monomial `v`.
    pub fn colon_monomial(&self, v: &Monomial) -> Result<MonomialIdeal> {
        if v.n() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: v.n(),
            });
        }
        Self::minimalize(self.gens.iter().map(|g| g.colon(v)), self.n)
    }

    /// `(I : J) = ⋂_{v ∈ G(J)} (I : v)`.
    pub fn colon(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ring(other)?;
        let mut parts = other.gens.iter();
        let first = parts.next().ok_or(Error::ColonByZero)?;
        let mut acc = self.colon_monomial(first)?;
        for v in parts {
            acc = acc.intersect(&self.colon_monomial(v)?)?;
        }
        Ok(acc)
    }

    /// `(I : x_j^∞)`, obtained by setting `x_j = 1` in the generators.
    /// `j` is zero-based.
    pub fn saturate_variable(&self, j: usize) -> Result<MonomialIdeal> {
        if j >= self.n {
            return Err(Error::VariableIndex { index: j, n: self.n });
        }
        Self::minimalize(self.gens.iter().map(|g| g.with_exponent(j, 0).unwrap()), self.n)
    }

    /// `⋃_i (I : m^i)` computed by iterating the colon with the maximal
    /// ideal until it stabilizes.
    pub fn saturate_maximal(&self) -> Result<MonomialIdeal> {
        let m = Self::maximal(self.n)?;
        let mut cur = self.clone();
        loop {
            let next = cur.colon(&m)?;
            if next == cur {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// The torsion part of `R/I` relative to the last variable: returns
    /// `I' = (I : x_n^∞)` and the top degree of `I'/I` (`-inf` when
    /// `I' = I`).
    ///
    /// Fails when `I'/I` is not of finite length, which happens exactly when
    /// some monomial of `I' \ I` sits on the face of the exponent box of `I`.
    pub fn gamma_torsion(&self) -> Result<(MonomialIdeal, ExtendedInt)> {
        if self.is_unit() {
            return Err(Error::NotProper);
        }
        let iprime = self.saturate_variable(self.n - 1)?;
        if iprime == *self {
            return Ok((iprime, NegInfinity));
        }
        let bound = self.max_exponents();
        let mut sup = NegInfinity;
        for w in monomials_in_box(&bound) {
            if iprime.contains(&w) && !self.contains(&w) {
                let on_face = w.exponents().iter().zip(&bound).any(|(&e, &b)| e as u32 == b);
                if on_face {
                    return Err(Error::NotFiniteLength(format!(
                        "{w} lies in (I : x{}^inf) / I together with all its multiples along a face",
                        self.n
                    )));
                }
                sup = sup.max(Finite(w.total_degree() as i64));
            }
        }
        Ok((iprime, sup))
    }

    /// The same generators read in `n - 1` variables. No generator may involve
    /// the last variable.
    pub fn restrict(&self) -> Result<MonomialIdeal> {
        if self.n < 2 {
            return Err(Error::VariableCount(self.n.saturating_sub(1)));
        }
        let gens = self
            .gens
            .iter()
            .map(|g| {
                if g.exponent(self.n - 1) > 0 {
                    Err(Error::InvolvesLastVariable(g.to_string()))
                } else {
                    g.with_ambient(self.n - 1)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::minimalize(gens, self.n - 1)
    }

    /// The same generators read in a ring with `n` variables (`n >= self.n()`).
    pub fn extend(&self, n: usize) -> Result<MonomialIdeal> {
        if n < self.n {
            return Err(Error::VariableCount(n));
        }
        let gens = self
            .gens
            .iter()
            .map(|g| g.with_ambient(n))
            .collect::<Result<Vec<_>>>()?;
        Self::minimalize(gens, n)
    }

    /// Whether some generator involves `x_j` (zero-based).
    pub fn involves(&self, j: usize) -> bool {
        self.gens.iter().any(|g| g.exponent(j) > 0)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in {} vars", self.n)
    }
}
