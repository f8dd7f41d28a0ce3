#![allow(dead_code)]

use std::collections::BTreeSet;

use monoreg::monomial::Monomial;
use monoreg::MonomialIdeal;

pub const P: i64 = 32003;

pub fn ideal(n: usize, e: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::from_exponents(n, e).unwrap()
}

pub fn example() -> MonomialIdeal {
    ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[1, 0, 1], &[0, 2, 0]])
}

/// Weakly stable fixtures.
pub fn weakly_stable_corpus() -> Vec<MonomialIdeal> {
    let mut v = vec![
        example(),
        ideal(1, &[&[2]]),
        ideal(2, &[&[1, 0]]),
        ideal(2, &[&[2, 0], &[1, 1], &[0, 3]]),
        ideal(2, &[&[3, 0], &[0, 2]]),
        ideal(3, &[&[3, 0, 0], &[2, 1, 0], &[1, 2, 0], &[1, 1, 1]]),
        ideal(3, &[&[2, 0, 0], &[1, 3, 0], &[1, 1, 1]]),
        ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[1, 0, 1], &[0, 2, 0], &[0, 1, 1]]),
        ideal(3, &[&[1, 0, 0], &[0, 2, 0], &[0, 0, 3]]),
        ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 2, 0]]),
        ideal(4, &[&[1, 0, 0, 0], &[0, 2, 0, 0], &[0, 1, 1, 0]]),
    ];
    for n in 1..=4 {
        v.push(MonomialIdeal::maximal(n).unwrap());
    }
    v
}

/// Fixtures outside the weakly stable class.
pub fn general_corpus() -> Vec<MonomialIdeal> {
    vec![
        ideal(2, &[&[1, 1]]),
        ideal(2, &[&[0, 1]]),
        ideal(3, &[&[1, 0, 1], &[0, 2, 0]]),
        ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]),
        ideal(2, &[&[2, 1], &[1, 2]]),
    ]
}

/// m-primary fixtures.
pub fn m_primary_corpus() -> Vec<MonomialIdeal> {
    let mut v = Vec::new();
    for n in 1..=3usize {
        for d in 1..=3u32 {
            let gens: Vec<Monomial> = (0..n).map(|j| Monomial::var_power(n, j, d).unwrap()).collect();
            v.push(MonomialIdeal::minimalize(gens, n).unwrap());
        }
    }
    v.push(ideal(2, &[&[2, 0], &[1, 1], &[0, 3]]));
    v.push(ideal(2, &[&[3, 0], &[0, 2]]));
    v.push(ideal(2, &[&[3, 0], &[2, 1], &[0, 2]]));
    v.push(ideal(3, &[&[1, 0, 0], &[0, 2, 0], &[0, 0, 3]]));
    v.push(ideal(3, &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2], &[1, 1, 1]]));
    v.push(ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 2, 0], &[0, 0, 1]]));
    v.push(MonomialIdeal::maximal(4).unwrap());
    v.push(MonomialIdeal::maximal(4).unwrap().power(2).unwrap());
    v.push(MonomialIdeal::maximal(2).unwrap().power(3).unwrap());
    v.push(ideal(
        4,
        &[
            &[1, 0, 0, 0],
            &[0, 1, 0, 0],
            &[0, 0, 2, 0],
            &[0, 0, 1, 1],
            &[0, 0, 0, 2],
        ],
    ));
    v.push(ideal(3, &[&[3, 0, 0], &[0, 1, 0], &[1, 0, 1], &[0, 0, 2]]));
    v
}

/// Every exponent vector in `[0, bound]`.
pub fn box_points(bound: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for &b in bound {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=b).map(move |e| {
                    let mut q = p.clone();
                    q.push(e);
                    q
                })
            })
            .collect();
    }
    out
}

pub fn member(i: &MonomialIdeal, e: &[u32]) -> bool {
    i.generators()
        .iter()
        .any(|g| g.exponents().iter().zip(e).all(|(&a, &b)| a as u32 <= b))
}

/// Rank of an integer matrix modulo `P`.
pub fn rank_mod_p(mut rows: Vec<Vec<i64>>) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][c].rem_euclid(P) != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = pow_mod(rows[rank][c].rem_euclid(P), P - 2);
        for x in rows[rank].iter_mut() {
            *x = x.rem_euclid(P) * inv % P;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][c].rem_euclid(P) != 0 {
                let f = rows[r][c].rem_euclid(P);
                for k in 0..cols {
                    rows[r][k] = (rows[r][k] - f * rows[rank][k]).rem_euclid(P);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: i64, mut e: i64) -> i64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    acc
}

fn lcm_of(gens: &[Vec<u32>], s: u32, n: usize) -> Vec<u32> {
    let mut l = vec![0; n];
    for (k, g) in gens.iter().enumerate() {
        if s & (1 << k) != 0 {
            for v in 0..n {
                l[v] = l[v].max(g[v]);
            }
        }
    }
    l
}

/// `β_{i,α}(R/I)` from the lcm-lattice: the homology of the subsets of
/// generators whose lcm is exactly `α`, with the Taylor boundary restricted
/// to faces of the same lcm.
pub fn brute_multigraded_betti(i: &MonomialIdeal) -> BTreeSet<(usize, Vec<u32>, usize)> {
    let n = i.n();
    let gens: Vec<Vec<u32>> = i
        .generators()
        .iter()
        .map(|g| g.exponents().iter().map(|&e| e as u32).collect())
        .collect();
    let r = gens.len();
    let mut by_lcm: std::collections::BTreeMap<Vec<u32>, Vec<u32>> = Default::default();
    for s in 0u32..(1 << r) {
        by_lcm.entry(lcm_of(&gens, s, n)).or_default().push(s);
    }
    let mut out = BTreeSet::new();
    for (alpha, subsets) in by_lcm {
        let layer = |k: u32| -> Vec<u32> { subsets.iter().copied().filter(|s| s.count_ones() == k).collect() };
        let boundary_rank = |k: u32| -> usize {
            if k == 0 {
                return 0;
            }
            let src = layer(k);
            let dst = layer(k - 1);
            if src.is_empty() || dst.is_empty() {
                return 0;
            }
            let rows: Vec<Vec<i64>> = src
                .iter()
                .map(|&s| {
                    let mut row = vec![0i64; dst.len()];
                    let mut sign = 1;
                    for b in 0..r {
                        if s & (1 << b) == 0 {
                            continue;
                        }
                        if let Some(pos) = dst.iter().position(|&t| t == s & !(1 << b)) {
                            row[pos] = sign;
                        }
                        sign = -sign;
                    }
                    row
                })
                .collect();
            rank_mod_p(rows)
        };
        for k in 0..=r as u32 {
            let dim = layer(k).len();
            let b = dim - boundary_rank(k) - boundary_rank(k + 1);
            if b > 0 {
                out.insert((k as usize, alpha.clone(), b));
            }
        }
    }
    out
}

/// Associated primes by brute force: `(I : x^w)` is a monomial prime for
/// some `w` in the exponent box.
pub fn brute_associated_primes(i: &MonomialIdeal) -> BTreeSet<BTreeSet<usize>> {
    let n = i.n();
    let bound = i.max_exponents();
    let mut out = BTreeSet::new();
    for w in box_points(&bound) {
        if member(i, &w) {
            continue;
        }
        let mut gens: Vec<Vec<u32>> = i
            .generators()
            .iter()
            .map(|g| (0..n).map(|v| (g.exponent(v)).saturating_sub(w[v])).collect())
            .collect();
        gens.sort();
        gens.dedup();
        let minimal: Vec<&Vec<u32>> = gens
            .iter()
            .filter(|g| {
                !gens
                    .iter()
                    .any(|h| h != *g && h.iter().zip(g.iter()).all(|(a, b)| a <= b))
            })
            .collect();
        if minimal.iter().all(|g| g.iter().sum::<u32>() == 1) {
            out.insert(
                minimal
                    .iter()
                    .map(|g| g.iter().position(|&e| e == 1).unwrap())
                    .collect(),
            );
        }
    }
    out
}

pub fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `(|S|, lcm(S))` for every subset `S` of the generators.
pub fn subset_lcms(i: &MonomialIdeal) -> Vec<(usize, Vec<i32>)> {
    let g: Vec<Vec<i32>> = i
        .generators()
        .iter()
        .map(|g| g.exponents().iter().map(|&e| e as i32).collect())
        .collect();
    let n = i.n();
    (0u32..1 << g.len())
        .map(|s| {
            let mut l = vec![0; n];
            for (k, e) in g.iter().enumerate() {
                if s & (1 << k) != 0 {
                    for v in 0..n {
                        l[v] = l[v].max(e[v]);
                    }
                }
            }
            (s.count_ones() as usize, l)
        })
        .collect()
}

pub fn leq(a: &[i32], b: &[i32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}
