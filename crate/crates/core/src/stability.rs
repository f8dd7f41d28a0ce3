//! The exchange property defining weakly stable ideals.
//!
//! `I` is weakly stable when for every monomial `u ∈ I` and every `j < m(u)`
//! some `x_j^k · u / x_{m(u)}^{l(u)}` lies in `I`. Checking the generators
//! suffices; [`is_weakly_stable_exhaustive`] checks every monomial up to a
//! degree bound instead and is kept for cross-validation.

use crate::error::Result;
use crate::ideal::MonomialIdeal;
use crate::monomial::{monomials_of_degree, Monomial};

/// `u / x_{m(u)}^{l(u)}` together with `m(u)`, or `None` for the unit monomial.
fn strip_leading(u: &Monomial) -> Option<(usize, Monomial)> {
    let m = u.max_var()?;
    Some((m, u.with_exponent(m, 0).unwrap()))
}

/// Whether some `x_j^k · w` lies in `I`, i.e. `w ∈ (I : x_j^∞)`.
fn saturated_contains(ideal: &MonomialIdeal, j: usize, w: &Monomial) -> bool {
    ideal.generators().iter().any(|g| {
        g.exponents()
            .iter()
            .zip(w.exponents())
            .enumerate()
            .all(|(k, (a, b))| k == j || a <= b)
    })
}

/// First `(u, j)` violating the exchange property among `candidates`.
fn first_violation<'a>(
    ideal: &MonomialIdeal,
    candidates: impl IntoIterator<Item = &'a Monomial>,
) -> Option<(Monomial, usize)> {
    for u in candidates {
        let Some((m, w)) = strip_leading(u) else { continue };
        for j in 0..m {
            if !saturated_contains(ideal, j, &w) {
                return Some((*u, j));
            }
        }
    }
    None
}

pub fn is_weakly_stable(ideal: &MonomialIdeal) -> bool {
    first_violation(ideal, ideal.generators()).is_none()
}

/// The first generator and zero-based variable index witnessing a failure
/// of the exchange property.
pub fn stability_witness(ideal: &MonomialIdeal) -> Option<(Monomial, usize)> {
    first_violation(ideal, ideal.generators())
}

/// Checks the exchange property on every monomial of `I` of degree at most
/// `max_degree`.
pub fn is_weakly_stable_exhaustive(ideal: &MonomialIdeal, max_degree: u32) -> bool {
    (0..=max_degree).all(|d| {
        let members: Vec<Monomial> = monomials_of_degree(ideal.n(), d)
            .into_iter()
            .filter(|u| ideal.contains(u))
            .collect();
        first_violation(ideal, &members).is_none()
    })
}

/// A weakly stable ideal containing `I`, built by repeatedly adding
/// `x_j^{l(u)} · u / x_{m(u)}^{l(u)}` for violating pairs `(u, j)`.
///
/// The result is not claimed to be the smallest such ideal.
pub fn weakly_stable_completion(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    let mut cur = ideal.clone();
    while let Some((u, j)) = stability_witness(&cur) {
        let m = u.max_var().expect("unit monomial never violates");
        let l = u.exponent(m);
        let added = u.with_exponent(m, 0)?.with_exponent(j, u.exponent(j) + l)?;
        let mut gens = cur.generators().to_vec();
        gens.push(added);
        cur = MonomialIdeal::minimalize(gens, cur.n())?;
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, e: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, e).unwrap()
    }

    #[test]
    fn example_ideal_is_weakly_stable() {
        let i = ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[1, 0, 1], &[0, 2, 0]]);
        assert!(is_weakly_stable(&i));
        assert!(is_weakly_stable_exhaustive(&i, 6));
    }

    #[test]
    fn principal_mixed_monomial_is_not() {
        let i = ideal(2, &[&[1, 1]]);
        assert!(!is_weakly_stable(&i));
        assert_eq!(stability_witness(&i), Some((Monomial::new(&[1, 1]).unwrap(), 0)));
        assert!(!is_weakly_stable_exhaustive(&i, 3));
    }

    #[test]
    fn zero_and_unit_are_vacuously_stable() {
        assert!(is_weakly_stable(&MonomialIdeal::zero(3).unwrap()));
        assert!(is_weakly_stable(&MonomialIdeal::unit(3).unwrap()));
    }

    #[test]
    fn weakly_stable_but_not_stable() {
        // (x1^2, x1 x2^3, x1 x2 x3): x1 x2^2 is missing, yet the exchange
        // property holds with large powers.
        let i = ideal(3, &[&[2, 0, 0], &[1, 3, 0], &[1, 1, 1]]);
        assert!(is_weakly_stable(&i));
    }

    #[test]
    fn completion_fixes_violations() {
        let stable = ideal(2, &[&[2, 0], &[1, 1]]);
        assert_eq!(weakly_stable_completion(&stable).unwrap(), stable);

        let c = weakly_stable_completion(&ideal(2, &[&[1, 1]])).unwrap();
        assert!(is_weakly_stable(&c));
        assert!(c.contains(&Monomial::new(&[1, 1]).unwrap()));
        assert_eq!(c, stable);

        let c = weakly_stable_completion(&ideal(2, &[&[0, 1]])).unwrap();
        assert!(is_weakly_stable(&c));
        assert!(c.contains(&Monomial::new(&[0, 1]).unwrap()));
    }
}
