mod common;

use common::*;
use proptest::prelude::*;

use monoreg::complex::{koszul_complex, taylor_complex, tensor_complexes};
use monoreg::field::PrimeField;
use monoreg::format::{parse_generators, parse_ideal, to_text};
use monoreg::homology::homology_module;
use monoreg::monomial::Monomial;
use monoreg::stability::is_weakly_stable_exhaustive;
use monoreg::{
    associated_primes, irreducible_decomposition, is_weakly_stable, weakly_stable_completion, GradedModule,
    MonomialIdeal,
};

fn gf() -> PrimeField {
    PrimeField::new(32003).unwrap()
}

fn arb_ideal(max_n: usize, max_exp: u32, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    (1..=max_n).prop_flat_map(move |n| arb_ideal_in(n, max_exp, max_gens))
}

fn arb_ideal_in(n: usize, max_exp: u32, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(prop::collection::vec(0..=max_exp, n), 1..=max_gens).prop_filter_map(
        "needs a proper generator",
        move |rows| {
            let gens: Vec<Monomial> = rows
                .iter()
                .filter(|r| r.iter().any(|&e| e > 0))
                .map(|r| Monomial::new(r).unwrap())
                .collect();
            if gens.is_empty() {
                return None;
            }
            MonomialIdeal::minimalize(gens, n).ok()
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn minimalize_is_idempotent_and_antichain(i in arb_ideal(4, 3, 6)) {
        let again = MonomialIdeal::minimalize(i.generators().to_vec(), i.n()).unwrap();
        prop_assert_eq!(&again, &i);
        for a in i.generators() {
            for b in i.generators() {
                prop_assert!(a == b || !a.divides(b));
            }
        }
    }

    #[test]
    fn completion_is_weakly_stable_and_larger(i in arb_ideal(3, 3, 4)) {
        let c = weakly_stable_completion(&i).unwrap();
        prop_assert!(is_weakly_stable(&c));
        prop_assert!(c.contains_ideal(&i));
        prop_assert_eq!(weakly_stable_completion(&c).unwrap(), c);
    }

    #[test]
    fn generators_decide_weak_stability(i in arb_ideal(3, 3, 5)) {
        let bound = i.max_generator_degree() + 3;
        prop_assert_eq!(is_weakly_stable(&i), is_weakly_stable_exhaustive(&i, bound));
    }

    #[test]
    fn completed_ideals_pass_exhaustive_check(i in arb_ideal(3, 3, 4)) {
        let c = weakly_stable_completion(&i).unwrap();
        prop_assert!(is_weakly_stable_exhaustive(&c, c.max_generator_degree() + 3));
    }

    #[test]
    fn decomposition_intersects_back(i in arb_ideal(3, 3, 5)) {
        let parts = irreducible_decomposition(&i).unwrap();
        let mut acc = MonomialIdeal::unit(i.n()).unwrap();
        for q in &parts {
            prop_assert!(q.generators().iter().all(|g| g.support().len() == 1));
            acc = acc.intersect(q).unwrap();
        }
        prop_assert_eq!(acc, i);
    }

    #[test]
    fn associated_primes_agree_with_colon_search(i in arb_ideal(3, 3, 5)) {
        prop_assert_eq!(associated_primes(&i).unwrap(), brute_associated_primes(&i));
    }

    #[test]
    fn weakly_stable_primes_are_initial_segments(i in arb_ideal(3, 3, 4)) {
        let c = weakly_stable_completion(&i).unwrap();
        for p in brute_associated_primes(&c) {
            prop_assert_eq!(p.clone(), (0..p.len()).collect());
        }
    }

    #[test]
    fn text_format_round_trips(i in arb_ideal(5, 4, 6)) {
        prop_assert_eq!(parse_ideal(&to_text(&i)).unwrap(), i.clone());
        let inline: Vec<String> = i.generators().iter().map(|g| g.to_string()).collect();
        prop_assert_eq!(parse_generators(&inline.join(", "), Some(i.n())).unwrap(), i);
    }

    #[test]
    fn taylor_differential_squares_to_zero(i in arb_ideal(3, 3, 5)) {
        taylor_complex(gf(), &i).unwrap().check_d_squared().unwrap();
    }

    #[test]
    fn tensor_differential_squares_to_zero(
        (i, j) in (1..=3usize).prop_flat_map(|n| (arb_ideal_in(n, 2, 3), arb_ideal_in(n, 2, 3)))
    ) {
        let a = taylor_complex(gf(), &i).unwrap();
        let b = taylor_complex(gf(), &j).unwrap();
        tensor_complexes(&a, &b).unwrap().check_d_squared().unwrap();
    }

    #[test]
    fn taylor_complex_resolves_quotient(i in arb_ideal(3, 2, 4)) {
        let cx = taylor_complex(gf(), &i).unwrap();
        let h0 = homology_module(&cx, 0, None).unwrap();
        let direct = GradedModule::quotient_ring(gf(), &i).unwrap();
        for p in h0.degree_box().points() {
            prop_assert_eq!(h0.dim(&p), direct.dim(&p));
        }
        for pos in 1..cx.len() {
            prop_assert!(homology_module(&cx, pos, None).unwrap().is_zero());
        }
    }
}

#[test]
fn koszul_complex_is_acyclic_above_zero() {
    for n in 1..=4 {
        let k = koszul_complex(gf(), n).unwrap();
        k.check_d_squared().unwrap();
        for pos in 1..k.len() {
            assert!(homology_module(&k, pos, None).unwrap().is_zero());
        }
        let h0 = homology_module(&k, 0, None).unwrap();
        assert_eq!(
            h0.sup_inf(),
            (monoreg::ExtendedInt::Finite(0), monoreg::ExtendedInt::Finite(0), true)
        );
    }
}
