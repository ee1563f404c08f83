mod common;

use proptest::prelude::*;

use monring::hilbert::{
    froeberg_check, k_polynomial_ie, k_polynomial_sr, series_coefficients, HilbertSeries,
};
use monring::polarize::{depolarize, polarize};
use monring::polyhedral::{classify_variables, construction_k, verify_realization};
use monring::simplicial::{sr_complex, sr_ideal, SimplicialComplex};
use monring::{Monomial, MonomialIdeal};

fn monomial(n: usize, max_exp: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, n).prop_map(|e| Monomial::new(e).unwrap())
}

/// Raw generator lists (possibly non-minimal) in `1..=4` variables.
fn raw_generators() -> impl Strategy<Value = (usize, Vec<Monomial>)> {
    (1usize..=4).prop_flat_map(|n| {
        let gens = prop::collection::vec(monomial(n, 3), 1..=6)
            .prop_map(|g| g.into_iter().filter(|m| !m.is_one()).collect::<Vec<_>>())
            .prop_filter("needs a non-unit generator", |g| !g.is_empty());
        (Just(n), gens)
    })
}

fn ideal() -> impl Strategy<Value = MonomialIdeal> {
    raw_generators().prop_filter_map("every variable must occur", |(n, g)| MonomialIdeal::new(n, g).ok())
}

fn complex() -> impl Strategy<Value = SimplicialComplex> {
    (1usize..=8).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::btree_set(1..=n, 1..=n), 0..=5).prop_map(move |sets| {
            let mut sets: Vec<Vec<usize>> = sets.into_iter().map(|s| s.into_iter().collect()).collect();
            sets.sort_by_key(Vec::len);
            let mut kept: Vec<Vec<usize>> = Vec::new();
            for s in sets {
                if !kept.iter().any(|k| k.iter().all(|v| s.contains(v))) {
                    kept.push(s);
                }
            }
            SimplicialComplex::new(n, kept).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn minimalize_is_idempotent_and_order_free((n, gens) in raw_generators(), seed in any::<u64>()) {
        let a = MonomialIdeal::new_unchecked(n, gens.clone()).unwrap();
        let again = MonomialIdeal::new_unchecked(n, a.generators().to_vec()).unwrap();
        prop_assert_eq!(&again, &a);

        let mut shuffled = gens;
        let len = shuffled.len();
        for i in 0..len {
            shuffled.swap(i, (seed as usize).wrapping_add(i * 7) % len);
        }
        prop_assert_eq!(&MonomialIdeal::new_unchecked(n, shuffled).unwrap(), &a);

        for (i, g) in a.generators().iter().enumerate() {
            for (j, h) in a.generators().iter().enumerate() {
                prop_assert!(i == j || !g.divides(h).unwrap());
            }
        }
    }

    #[test]
    fn membership_matches_standard_monomials(
        (i, m) in ideal().prop_flat_map(|i| { let n = i.n(); (Just(i), monomial(n, 4)) })
    ) {
        let standard = i.standard_monomials(m.degree() as u32);
        prop_assert_eq!(i.contains(&m).unwrap(), !standard.contains(&m));
    }

    #[test]
    fn quotient_product_is_commutative_and_associative(
        i in ideal(),
        exps in prop::collection::vec(prop::collection::vec(0u32..=2, 4), 3),
    ) {
        let n = i.n();
        let [a, b, c] = [0, 1, 2].map(|k| Monomial::new(exps[k][..n].to_vec()).unwrap());
        let mul = |x: Option<Monomial>, y: Option<Monomial>| match (x, y) {
            (Some(x), Some(y)) => i.multiply_mod(&x, &y).unwrap(),
            _ => None,
        };
        let reduce = |x: &Monomial| if i.contains(x).unwrap() { None } else { Some(x.clone()) };
        let (a, b, c) = (reduce(&a), reduce(&b), reduce(&c));
        prop_assert_eq!(mul(a.clone(), b.clone()), mul(b.clone(), a.clone()));
        prop_assert_eq!(
            mul(mul(a.clone(), b.clone()), c.clone()),
            mul(a, mul(b, c))
        );
    }

    #[test]
    fn polarization_invariants(i in ideal()) {
        let p = polarize(&i);
        prop_assert_eq!(p.generators.len(), i.generators().len());
        for (g, pg) in i.generators().iter().zip(&p.generators) {
            prop_assert!(pg.is_square_free());
            prop_assert_eq!(g.degree(), pg.degree());
        }
        prop_assert_eq!(p.thetas.len(), p.polarized_n() - i.n());
        let pi = p.ideal().unwrap();
        prop_assert_eq!(pi.generators().len(), p.generators.len());
        prop_assert_eq!(&depolarize(&p).unwrap(), &i);
        prop_assert!(froeberg_check(&i).unwrap().equal);
    }

    #[test]
    fn series_is_nonnegative_with_unit_constant(i in ideal()) {
        let k = k_polynomial_ie(&i).unwrap();
        prop_assert_eq!(k.coefficient(0), 1);
        let coeffs = series_coefficients(&HilbertSeries::of_ideal(&i).unwrap(), 10).unwrap();
        prop_assert!(coeffs.iter().all(|&c| c >= 0));
    }

    #[test]
    fn sr_round_trips(k in complex()) {
        prop_assume!(!k.minimal_nonfaces().is_empty());
        let i = sr_ideal(&k).unwrap();
        match sr_complex(&i) {
            Ok(back) => prop_assert_eq!(back, k.clone()),
            // A singleton non-face together with every vertex in use.
            Err(_) => prop_assert!(
                i.missing_variables().is_empty()
                    && k.minimal_nonfaces().iter().any(|nf| nf.len() == 1)
            ),
        }
        prop_assert_eq!(k_polynomial_ie(&i).unwrap(), k_polynomial_sr(&k).unwrap());
    }

    #[test]
    fn faces_are_closed_and_counted(k in complex()) {
        let n = k.vertex_count();
        let f = k.f_vector().unwrap();
        let mut by_subsets = 0u64;
        for mask in 0u32..1 << n {
            let face: Vec<usize> = (0..n).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect();
            if k.is_face(&face) {
                by_subsets += 1;
                for drop in 0..face.len() {
                    let mut sub = face.clone();
                    sub.remove(drop);
                    prop_assert!(k.is_face(&sub));
                }
            }
        }
        prop_assert_eq!(f.iter().sum::<u64>(), by_subsets);
        prop_assert_eq!(k.faces().unwrap().len() as u64, by_subsets);
    }

    #[test]
    fn star_instances_realize(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let i = common::random_star_instance(&mut rng);
        let k = construction_k(&i).unwrap();
        prop_assert!(verify_realization(&i).unwrap().is_verified());
        let pairs = classify_variables(&i).unwrap().pairs;
        prop_assert_eq!(pairs.len(), i.n());
        prop_assert!(pairs.iter().all(|p| (1..=4).contains(&p.case)));
        prop_assert!(k.minimal_nonfaces().iter().all(|nf| nf.len() >= 2));
    }
}
