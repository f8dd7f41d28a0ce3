//! Seeded random monomial ideals.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, MAX_VARS};
use crate::stability::weakly_stable_completion;

pub const MAX_RANDOM_DEGREE: u32 = 8;

fn check(n: usize, max_degree: u32, count: usize) -> Result<()> {
    if n == 0 || n > MAX_VARS {
        return Err(Error::VariableCount(n));
    }
    if max_degree == 0 || max_degree > MAX_RANDOM_DEGREE {
        return Err(Error::InvalidConfig(format!(
            "max_degree {max_degree} outside 1..={MAX_RANDOM_DEGREE}"
        )));
    }
    if count == 0 {
        return Err(Error::InvalidConfig("count must be at least 1".into()));
    }
    Ok(())
}

/// Draws `count` monomials of degree `1..=max_degree` and minimalizes them.
/// The result is proper and nonzero.
pub fn random_monomial_ideal_with<R: Rng>(
    rng: &mut R,
    n: usize,
    max_degree: u32,
    count: usize,
) -> Result<MonomialIdeal> {
    check(n, max_degree, count)?;
    let gens = (0..count).map(|_| {
        let d = rng.gen_range(1..=max_degree);
        let mut exps = vec![0u32; n];
        for _ in 0..d {
            exps[rng.gen_range(0..n)] += 1;
        }
        Monomial::new(&exps).unwrap()
    });
    MonomialIdeal::minimalize(gens.collect::<Vec<_>>(), n)
}

/// Deterministic for a fixed `seed`.
pub fn random_monomial_ideal(n: usize, max_degree: u32, count: usize, seed: u64) -> Result<MonomialIdeal> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_monomial_ideal_with(&mut rng, n, max_degree, count)
}

/// A random ideal pushed through [`weakly_stable_completion`], redrawn until
/// it has at most `max_gens` generators.
pub fn random_weakly_stable_with<R: Rng>(
    rng: &mut R,
    n: usize,
    max_degree: u32,
    count: usize,
    max_gens: usize,
) -> Result<MonomialIdeal> {
    const ATTEMPTS: usize = 256;
    for _ in 0..ATTEMPTS {
        let base = random_monomial_ideal_with(rng, n, max_degree, count)?;
        let done = weakly_stable_completion(&base)?;
        if done.generators().len() <= max_gens {
            return Ok(done);
        }
    }
    Err(Error::InvalidConfig(format!(
        "no weakly stable completion with at most {max_gens} generators after {ATTEMPTS} draws"
    )))
}
