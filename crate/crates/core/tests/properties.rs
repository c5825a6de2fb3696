//! Randomized structural properties.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use immaculate::composition::{comp_of, Composition, SkewShape};
use immaculate::convert::{to_basis, to_f};
use immaculate::pairing::{self, pair, random_element};
use immaculate::pieri::{pieri_coeff, pieri_coeff_oracle, skew_pieri, skew_pieri_oracle};
use immaculate::{qsym, Basis, Element, Family};

fn composition(max: usize) -> impl Strategy<Value = Composition> {
    prop::collection::vec(1..=3usize, 0..=max)
        .prop_filter("size", move |p| p.iter().sum::<usize>() <= max)
        .prop_map(|p| Composition::new(p).unwrap())
}

fn skew_shape(max: usize) -> impl Strategy<Value = SkewShape> {
    (composition(max), any::<u64>()).prop_map(|(outer, seed)| {
        // shrink each row by a seeded amount to get a contained inner shape
        let mut x = seed;
        let inner: Vec<usize> = outer
            .parts()
            .iter()
            .map(|&p| {
                x = x.rotate_left(7) ^ 0x9e37_79b9;
                (x as usize) % (p + 1)
            })
            .collect();
        let keep = inner.iter().position(|&v| v == 0).unwrap_or(inner.len());
        let inner = Composition::new(inner[..keep].to_vec()).unwrap();
        SkewShape::new(outer, inner).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn set_comp_round_trip(c in composition(8)) {
        prop_assume!(!c.is_empty());
        prop_assert_eq!(comp_of(&c.set_of(), c.size()).unwrap(), c.clone());
        prop_assert_eq!(c.complement().complement(), c.clone());
        prop_assert_eq!(c.transpose().transpose(), c);
    }

    #[test]
    fn psi_is_an_involutive_algebra_map(a in composition(4), b in composition(3)) {
        let fa = Element::basis(Basis::F, a);
        let fb = Element::basis(Basis::F, b);
        let psi = |e: &Element| qsym::psi(e).unwrap();
        prop_assert_eq!(psi(&psi(&fa)), fa.clone());
        let prod = pairing::product(&fa, &fb).unwrap();
        prop_assert_eq!(psi(&prod), pairing::product(&psi(&fa), &psi(&fb)).unwrap());
    }

    #[test]
    fn quasi_shuffle_is_commutative(a in composition(4), b in composition(4)) {
        prop_assert_eq!(qsym::monomial_product(&a, &b), qsym::monomial_product(&b, &a));
    }

    #[test]
    fn basis_changes_round_trip(c in composition(5)) {
        for (src, mid) in [
            (Basis::DualImmaculate, Basis::M),
            (Basis::RsDualImmaculate, Basis::F),
            (Basis::Immaculate, Basis::E),
            (Basis::RsImmaculate, Basis::H),
        ] {
            let e = Element::basis(src, c.clone());
            let back = to_basis(&to_basis(&e, mid).unwrap(), src).unwrap();
            prop_assert_eq!(back, e);
        }
    }

    #[test]
    fn dual_bases_pair_to_delta(a in composition(5), b in composition(5)) {
        prop_assume!(a.size() == b.size());
        let got = pair(
            &Element::basis(Basis::DualImmaculate, a.clone()),
            &Element::basis(Basis::Immaculate, b.clone()),
        )
        .unwrap();
        prop_assert_eq!(got, i64::from(a == b));
    }

    #[test]
    fn harpoon_adjointness(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = random_element(&mut rng, Family::NSym, 3);
        let g = random_element(&mut rng, Family::NSym, 3);
        let a = random_element(&mut rng, Family::QSym, 3);
        let b = random_element(&mut rng, Family::QSym, 3);
        prop_assert!(pairing::check_adjointness(&h, &g, &a, &b).unwrap());
        prop_assert!(pairing::check_lemma_product(&h, &a, &b).unwrap());
        prop_assert!(pairing::check_lemma_raction(&h, &g, &a).unwrap());
    }

    #[test]
    fn pieri_coefficients_match_oracle(gamma in composition(4), alpha in composition(6)) {
        prop_assume!(alpha.size() >= gamma.size() && alpha.size() - gamma.size() <= 3);
        let s = alpha.size() - gamma.size();
        prop_assert_eq!(
            pieri_coeff(&gamma, s, &alpha).unwrap().value,
            pieri_coeff_oracle(&gamma, s, &alpha)
        );
    }

    #[test]
    fn skew_pieri_matches_product(shape in skew_shape(5), s in 1..=3usize) {
        prop_assert_eq!(to_f(&skew_pieri(s, &shape)).unwrap(), skew_pieri_oracle(s, &shape));
    }
}
