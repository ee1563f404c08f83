//! Seeded instance generators shared by the integration tests.

#![allow(dead_code)]

use monring::polyhedral::check_star;
use monring::{Monomial, MonomialIdeal};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn worked_example() -> MonomialIdeal {
    MonomialIdeal::new(
        3,
        vec![
            Monomial::new(vec![2, 1, 0]).unwrap(),
            Monomial::new(vec![2, 0, 4]).unwrap(),
            Monomial::new(vec![0, 0, 5]).unwrap(),
        ],
    )
    .unwrap()
}

/// Minimal ideal with `n <= 5`, `r <= 6` sampled generators, exponents
/// `<= 4`, and every variable present. Resamples until valid.
pub fn random_minimal_ideal(rng: &mut ChaCha8Rng) -> MonomialIdeal {
    loop {
        let n = rng.gen_range(1..=5);
        let r = rng.gen_range(1..=6);
        let gens: Vec<Monomial> = (0..r)
            .map(|_| Monomial::new((0..n).map(|_| rng.gen_range(0..=4)).collect()).unwrap())
            .filter(|m| !m.is_one())
            .collect();
        if let Ok(ideal) = MonomialIdeal::new(n, gens) {
            return ideal;
        }
    }
}

pub fn random_minimal_ideals(seed: u64, count: usize) -> Vec<MonomialIdeal> {
    let mut rng = rng(seed);
    (0..count).map(|_| random_minimal_ideal(&mut rng)).collect()
}

/// Square-free ideal on `2..=7` variables whose generators all have at
/// least two variables, with every variable present.
pub fn random_square_free_ideal(rng: &mut ChaCha8Rng) -> MonomialIdeal {
    loop {
        let n = rng.gen_range(2..=7);
        let r = rng.gen_range(1..=6);
        let gens: Vec<Monomial> = (0..r)
            .map(|_| random_support(rng, n))
            .map(|support| {
                let mut e = vec![0; n];
                for v in support {
                    e[v - 1] = 1;
                }
                Monomial::new(e).unwrap()
            })
            .collect();
        if let Ok(ideal) = MonomialIdeal::new(n, gens) {
            return ideal;
        }
    }
}

/// A random subset of `1..=n` with at least two elements (`n >= 2`).
fn random_support(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let size = rng.gen_range(2..=n);
    let mut all: Vec<usize> = (1..=n).collect();
    all.shuffle(rng);
    let mut s = all[..size].to_vec();
    s.sort_unstable();
    s
}

fn subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|v| b.contains(v))
}

/// Ideal satisfying the star condition, built from an antichain of
/// supports, one exponent `q_i` per variable, and pure powers `s_i > q_i`.
/// Variables outside every support always get a pure power.
pub fn random_star_instance(rng: &mut ChaCha8Rng) -> MonomialIdeal {
    let n = rng.gen_range(1..=6);
    let mut supports: Vec<Vec<usize>> = Vec::new();
    if n >= 2 {
        for _ in 0..rng.gen_range(0..=4) {
            let s = random_support(rng, n);
            if supports.iter().all(|t| !subset(t, &s) && !subset(&s, t)) {
                supports.push(s);
            }
        }
    }
    let q: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=3)).collect();
    let mut gens = Vec::new();
    for s in &supports {
        let mut e = vec![0; n];
        for &v in s {
            e[v - 1] = q[v - 1];
        }
        gens.push(Monomial::new(e).unwrap());
    }
    for v in 1..=n {
        let covered = supports.iter().any(|s| s.contains(&v));
        if !covered {
            gens.push(Monomial::power(n, v, rng.gen_range(1..=4)).unwrap());
        } else if rng.gen_bool(0.5) {
            let s = q[v - 1] + rng.gen_range(1..=3);
            gens.push(Monomial::power(n, v, s).unwrap());
        }
    }
    let expected = gens.len();
    let ideal = MonomialIdeal::new(n, gens).expect("every variable is covered");
    assert_eq!(ideal.generators().len(), expected, "generator set was not minimal");
    assert!(check_star(&ideal).satisfied, "generated instance violates the star condition");
    ideal
}

pub fn random_star_instances(seed: u64, count: usize) -> Vec<MonomialIdeal> {
    let mut rng = rng(seed);
    (0..count).map(|_| random_star_instance(&mut rng)).collect()
}
