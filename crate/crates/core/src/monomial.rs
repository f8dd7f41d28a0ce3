//! Monomials in at most [`MAX_VARS`] variables.
//!
//! Exponent vectors are packed into a fixed array of bytes, so a monomial is
//! `Copy` and cheap to compare. Variables are indexed from 0 internally and
//! printed as `x1 … xn`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported ambient variable count.
pub const MAX_VARS: usize = 16;

/// Largest supported exponent of a single variable.
pub const MAX_EXPONENT: u32 = u8::MAX as u32;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    n: u8,
    exps: [u8; MAX_VARS],
}

pub(crate) fn check_vars(n: usize) -> Result<()> {
    if (1..=MAX_VARS).contains(&n) {
        Ok(())
    } else {
        Err(Error::VariableCount(n))
    }
}

impl Monomial {
    /// Builds a monomial from its exponent vector; the ambient variable count
    /// is the vector's length.
    pub fn new(exponents: &[u32]) -> Result<Self> {
        check_vars(exponents.len())?;
        let mut exps = [0u8; MAX_VARS];
        for (slot, &e) in exps.iter_mut().zip(exponents) {
            if e > MAX_EXPONENT {
                return Err(Error::ExponentOverflow);
            }
            *slot = e as u8;
        }
        Ok(Monomial {
            n: exponents.len() as u8,
            exps,
        })
    }

    pub fn one(n: usize) -> Self {
        debug_assert!(n <= MAX_VARS);
        Monomial {
            n: n as u8,
            exps: [0; MAX_VARS],
        }
    }

    /// `x_j^e` with `j` zero-based.
    pub fn var_power(n: usize, j: usize, e: u32) -> Result<Self> {
        if j >= n {
            return Err(Error::VariableIndex { index: j, n });
        }
        let mut exps = vec![0; n];
        exps[j] = e;
        Self::new(&exps)
    }

    pub fn var(n: usize, j: usize) -> Result<Self> {
        Self::var_power(n, j, 1)
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn exponents(&self) -> &[u8] {
        &self.exps[..self.n as usize]
    }

    pub fn exponent(&self, j: usize) -> u32 {
        self.exps[j] as u32
    }

    pub fn total_degree(&self) -> u32 {
        self.exponents().iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// `m(u)`: the largest (zero-based) index of a variable dividing `self`.
    pub fn max_var(&self) -> Option<usize> {
        self.exponents().iter().rposition(|&e| e > 0)
    }

    /// `l(u)`: the exponent of `x_{m(u)}`.
    pub fn leading_power(&self) -> Option<u32> {
        self.max_var().map(|m| self.exponent(m))
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.n()).filter(|&j| self.exps[j] > 0).collect()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.n, other.n);
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn try_mul(&self, other: &Monomial) -> Result<Monomial> {
        let mut out = *self;
        for (a, &b) in out.exps.iter_mut().zip(&other.exps) {
            *a = a.checked_add(b).ok_or(Error::ExponentOverflow)?;
        }
        Ok(out)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div_exact(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut out = *self;
        for (a, &b) in out.exps.iter_mut().zip(&other.exps) {
            *a -= b;
        }
        Some(out)
    }

    /// `self / gcd(self, other)`: the generator of the principal colon `(self : other)`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for (a, &b) in out.exps.iter_mut().zip(&other.exps) {
            *a = a.saturating_sub(b);
        }
        out
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for (a, &b) in out.exps.iter_mut().zip(&other.exps) {
            *a = (*a).max(b);
        }
        out
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for (a, &b) in out.exps.iter_mut().zip(&other.exps) {
            *a = (*a).min(b);
        }
        out
    }

    pub fn with_exponent(&self, j: usize, e: u32) -> Result<Monomial> {
        if j >= self.n() {
            return Err(Error::VariableIndex { index: j, n: self.n() });
        }
        if e > MAX_EXPONENT {
            return Err(Error::ExponentOverflow);
        }
        let mut out = *self;
        out.exps[j] = e as u8;
        Ok(out)
    }

    /// Re-reads the exponent vector in a ring with `n` variables. Dropped
    /// variables must have exponent zero.
    pub fn with_ambient(&self, n: usize) -> Result<Monomial> {
        check_vars(n)?;
        if self.exps[n.min(MAX_VARS)..].iter().any(|&e| e > 0) {
            return Err(Error::InvolvesLastVariable(self.to_string()));
        }
        let mut out = *self;
        out.n = n as u8;
        Ok(out)
    }

    /// Comparison used for canonical generator order: total degree first,
    /// then descending lexicographic order on exponents (`x1` before `x2`).
    pub fn canonical_cmp(&self, other: &Monomial) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical_cmp(other).then_with(|| self.n.cmp(&other.n))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (j, &e) in self.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", j + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All monomials of total degree `d` in `n` variables, in descending
/// lexicographic order.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(j: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        let n = cur.len();
        if j == n - 1 {
            cur[j] = left;
            if let Ok(m) = Monomial::new(cur) {
                out.push(m);
            }
            return;
        }
        for e in (0..=left).rev() {
            cur[j] = e;
            rec(j + 1, left - e, cur, out);
        }
        cur[j] = 0;
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    rec(0, d, &mut vec![0; n], &mut out);
    out
}

/// All monomials `x^a` with `0 <= a <= bound` componentwise.
pub fn monomials_in_box(bound: &[u32]) -> Vec<Monomial> {
    let n = bound.len();
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    loop {
        if let Ok(m) = Monomial::new(&cur) {
            out.push(m);
        }
        let mut j = 0;
        while j < n {
            if cur[j] < bound[j] {
                cur[j] += 1;
                break;
            }
            cur[j] = 0;
            j += 1;
        }
        if j == n {
            return out;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e).unwrap()
    }

    #[test]
    fn max_var_and_leading_power() {
        let u = m(&[1, 2, 0]);
        assert_eq!(u.max_var(), Some(1));
        assert_eq!(u.leading_power(), Some(2));
        assert_eq!(u.total_degree(), 3);
        assert_eq!(Monomial::one(3).max_var(), None);
        assert_eq!(Monomial::one(3).leading_power(), None);
    }

    #[test]
    fn display_uses_one_based_names() {
        assert_eq!(m(&[2, 1, 0]).to_string(), "x1^2*x2");
        assert_eq!(Monomial::one(2).to_string(), "1");
    }

    #[test]
    fn canonical_order_is_degree_then_lex() {
        let mut v = vec![m(&[0, 2, 0]), m(&[1, 0, 1]), m(&[2, 0, 0]), m(&[1, 1, 0])];
        v.sort();
        let s: Vec<String> = v.iter().map(|u| u.to_string()).collect();
        assert_eq!(s, ["x1^2", "x1*x2", "x1*x3", "x2^2"]);
    }

    #[test]
    fn arithmetic() {
        let a = m(&[2, 1]);
        let b = m(&[1, 3]);
        assert_eq!(a.lcm(&b), m(&[2, 3]));
        assert_eq!(a.gcd(&b), m(&[1, 1]));
        assert_eq!(a.colon(&b), m(&[1, 0]));
        assert_eq!(a.div_exact(&m(&[1, 1])), Some(m(&[1, 0])));
        assert_eq!(a.div_exact(&b), None);
        assert!(m(&[255]).try_mul(&m(&[1])).is_err());
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(Monomial::new(&[]).is_err());
        assert!(Monomial::new(&[0; 17]).is_err());
        assert!(Monomial::new(&[256]).is_err());
    }

    #[test]
    fn degree_enumeration_counts_binomials() {
        assert_eq!(monomials_of_degree(3, 4).len(), 15);
        assert_eq!(monomials_of_degree(1, 5).len(), 1);
        assert_eq!(monomials_in_box(&[1, 2]).len(), 6);
    }
}
