//! Irreducible decomposition and associated primes of monomial ideals.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// The prime `(x_1, …, x_t)`; `t = 0` is the zero ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct InitialSegmentPrime {
    pub t: usize,
}

impl InitialSegmentPrime {
    /// Recognizes a zero-based variable set `{0, …, t-1}`.
    pub fn from_support(support: &BTreeSet<usize>) -> Option<Self> {
        let t = support.len();
        support
            .iter()
            .enumerate()
            .all(|(k, &v)| k == v)
            .then_some(InitialSegmentPrime { t })
    }
}

/// A monomial prime, stored as the zero-based indices of its variables.
pub type VariableSet = BTreeSet<usize>;

fn check_proper_nonzero(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::NotProper);
    }
    Ok(())
}

/// The irredundant decomposition of `I` into irreducible ideals (ideals
/// generated by pure powers of variables), in canonical order.
///
/// Any generator `g = u·v` with coprime nontrivial `u`, `v` splits `I` as
/// `(I + (u)) ∩ (I + (v))`; the leaves of this recursion are irreducible, and
/// the inclusion-minimal leaves form the irredundant decomposition.
pub fn irreducible_decomposition(ideal: &MonomialIdeal) -> Result<Vec<MonomialIdeal>> {
    check_proper_nonzero(ideal)?;
    let n = ideal.n();
    let mut leaves: BTreeSet<Vec<Monomial>> = BTreeSet::new();
    let mut stack = vec![ideal.clone()];
    while let Some(cur) = stack.pop() {
        let mixed = cur.generators().iter().find(|g| g.support().len() > 1);
        match mixed {
            None => {
                leaves.insert(cur.generators().to_vec());
            }
            Some(g) => {
                let v = g.support()[0];
                let head = Monomial::var_power(n, v, g.exponent(v))?;
                let tail = g.with_exponent(v, 0)?;
                for piece in [head, tail] {
                    let mut gens = cur.generators().to_vec();
                    gens.push(piece);
                    stack.push(MonomialIdeal::minimalize(gens, n)?);
                }
            }
        }
    }
    let leaves: Vec<MonomialIdeal> = leaves
        .into_iter()
        .map(|gens| MonomialIdeal::minimalize(gens, n))
        .collect::<Result<_>>()?;
    let mut out: Vec<MonomialIdeal> = leaves
        .iter()
        .filter(|c| !leaves.iter().any(|d| d != *c && c.contains_ideal(d)))
        .cloned()
        .collect();
    out.sort_by(|a, b| a.generators().cmp(b.generators()));
    Ok(out)
}

/// Associated primes of `R/I`: the radicals of the irreducible components.
pub fn associated_primes(ideal: &MonomialIdeal) -> Result<BTreeSet<VariableSet>> {
    Ok(irreducible_decomposition(ideal)?
        .iter()
        .map(|c| c.generators().iter().flat_map(|g| g.support()).collect())
        .collect())
}

/// `I` is primary when it has exactly one associated prime.
pub fn is_primary(ideal: &MonomialIdeal) -> Result<bool> {
    Ok(associated_primes(ideal)?.len() == 1)
}

/// Whether `I` is primary to the maximal ideal (so `R/I` has finite length).
pub fn is_m_primary(ideal: &MonomialIdeal) -> bool {
    if ideal.is_unit() {
        return true;
    }
    (0..ideal.n()).all(|j| ideal.generators().iter().any(|g| g.support() == [j]))
}

/// Renders a prime as `(x1, x2)`.
pub fn format_prime(p: &VariableSet) -> String {
    let names: Vec<String> = p.iter().map(|v| format!("x{}", v + 1)).collect();
    format!("({})", names.join(", "))
}
