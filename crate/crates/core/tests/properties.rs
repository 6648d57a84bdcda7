use braidcurve_core::braid::{pure_generator, torus_braid};
use braidcurve_core::*;
use proptest::prelude::*;

fn word(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    let letter = (1..n as i32, any::<bool>()).prop_map(|(i, pos)| if pos { i } else { -i });
    prop::collection::vec(letter, 0..=max_len).prop_map(move |l| BraidWord::new(n, l).unwrap())
}

fn words(count: usize, max_len: usize) -> impl Strategy<Value = Vec<BraidWord>> {
    (2usize..=5).prop_flat_map(move |n| prop::collection::vec(word(n, max_len), count))
}

fn free_word(n: usize, max_len: usize) -> impl Strategy<Value = FreeWord> {
    let letter = (1..=n as i32, any::<bool>()).prop_map(|(i, pos)| if pos { i } else { -i });
    prop::collection::vec(letter, 0..=max_len).prop_map(move |l| FreeWord::new(n, l).unwrap())
}

fn pure_word(n: usize) -> impl Strategy<Value = BraidWord> {
    let generator = (1..n, 0..n, any::<bool>()).prop_map(move |(i, j, pos)| {
        let a = pure_generator(n, i, i.max(j).min(n - 1)).unwrap();
        if pos { a } else { a.invert() }
    });
    prop::collection::vec(generator, 0..4).prop_map(move |gs| {
        gs.iter().fold(BraidWord::identity(n), |acc, g| acc.compose(g).unwrap())
    })
}

fn positive_band(n: usize) -> impl Strategy<Value = Band> {
    (word(n, 4), 1..n as u32, 1i32..=3)
        .prop_map(|(conj, core, power)| Band::new(conj, core, power).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn exponent_sum_and_permutation_are_homomorphisms(ws in words(2, 12)) {
        let (a, b) = (&ws[0], &ws[1]);
        let ab = a.compose(b).unwrap();
        prop_assert_eq!(ab.exponent_sum(), a.exponent_sum() + b.exponent_sum());
        prop_assert_eq!(a.invert().exponent_sum(), -a.exponent_sum());
        prop_assert_eq!(ab.permutation(), a.permutation().then(&b.permutation()));
        prop_assert_eq!(ab.omega(), a.omega().mul(&b.omega()));
    }

    #[test]
    fn bands_map_to_transpositions(band in (2usize..=6).prop_flat_map(positive_band)) {
        let single = Band::new(band.conjugator().clone(), band.core(), 1).unwrap();
        prop_assert!(single.to_word().permutation().is_transposition());
    }

    #[test]
    fn artin_action_is_a_right_action(ws in words(2, 10), seed in 0usize..100) {
        let (a, b) = (&ws[0], &ws[1]);
        let n = a.strands();
        let w = FreeWord::new(n, (0..seed % 7).map(|k| ((seed + 3 * k) % n) as i32 + 1)).unwrap();
        let ab = a.compose(b).unwrap();
        prop_assert_eq!(w.act(&ab).unwrap(), w.act(a).unwrap().act(b).unwrap());
        prop_assert_eq!(w.act(&BraidWord::identity(n)).unwrap(), w);
    }

    #[test]
    fn artin_action_is_an_automorphism(
        (b, u, v) in (2usize..=5).prop_flat_map(|n| (word(n, 10), free_word(n, 6), free_word(n, 6)))
    ) {
        let uv = u.multiply(&v).unwrap();
        prop_assert_eq!(uv.act(&b).unwrap(), u.act(&b).unwrap().multiply(&v.act(&b).unwrap()).unwrap());
        prop_assert_eq!(u.act(&b).unwrap().act(&b.invert()).unwrap(), u);
    }

    #[test]
    fn images_follow_the_permutation(b in (2usize..=5).prop_flat_map(|n| word(n, 20))) {
        let perm = b.permutation();
        for (i, image) in FreeWord::generator_images(&b).into_iter().enumerate() {
            let (_, j) = image.as_conjugate_of_generator().unwrap();
            prop_assert_eq!(perm.image(i + 1), j as usize);
        }
    }

    #[test]
    fn total_product_is_preserved(b in (2usize..=6).prop_flat_map(|n| word(n, 60))) {
        prop_assert!(product_preserves_total(&b));
    }

    #[test]
    fn braids_equal_respects_relations(
        (b, i, j) in (3usize..=6).prop_flat_map(|n| (word(n, 8), 1..n as i32 - 1, 1..n as i32))
    ) {
        let n = b.strands();
        let w = |l: &[i32]| BraidWord::new(n, l.iter().copied()).unwrap();
        let around = |x: &BraidWord| b.compose(x).unwrap().compose(&b.invert()).unwrap();
        let braid = (around(&w(&[i, i + 1, i])), around(&w(&[i + 1, i, i + 1])));
        prop_assert!(braids_equal(&braid.0, &braid.1).unwrap());
        if (i - j).abs() >= 2 {
            prop_assert!(braids_equal(&w(&[i, j]), &w(&[j, i])).unwrap());
        }
        prop_assert!(braids_equal(&b.compose(&b.invert()).unwrap(), &BraidWord::identity(n)).unwrap());
        prop_assert!(!braids_equal(&b.compose(&w(&[i])).unwrap(), &b).unwrap());
    }

    #[test]
    fn self_windings_are_conjugation_invariant(
        (p, k, g) in (2usize..=5).prop_flat_map(|n| (pure_word(n), 1usize..=7, word(n, 8)))
    ) {
        let n = p.strands();
        prop_assume!(num_integer::gcd(k, n) == 1);
        // A pure braid times a power of σ_{n−1}⋯σ_1 coprime to n closes to a knot.
        let cycle = BraidWord::new(n, (1..n as i32).rev()).unwrap().pow(k as i32);
        let a = p.compose(&cycle).unwrap();
        prop_assert!(a.permutation().is_full_cycle());
        let conj = a.conjugated_by(&g).unwrap();
        prop_assert_eq!(conj.self_windings().unwrap(), a.self_windings().unwrap());
    }

    #[test]
    fn linking_is_conjugation_invariant_for_pure_braids(
        (a, g) in (2usize..=5).prop_flat_map(|n| (pure_word(n), pure_word(n)))
    ) {
        let conj = a.conjugated_by(&g).unwrap();
        prop_assert_eq!(conj.linking_matrix().unwrap(), a.linking_matrix().unwrap());
    }

    #[test]
    fn quasipositive_length_is_exponent_sum(
        bands in (2usize..=6).prop_flat_map(|n| prop::collection::vec(positive_band(n), 1..6))
    ) {
        let n = bands[0].to_word().strands();
        let rep = BandRepresentation::new(n, bands).unwrap();
        let length: i64 = rep.bands().iter().map(|b| i64::from(b.power())).sum();
        prop_assert_eq!(rep.product().exponent_sum(), length);
    }

    #[test]
    fn coprime_torus_braids_close_to_knots(p in 1i64..=6, q in 1i64..=20) {
        prop_assume!(num_integer::gcd(p, q) == 1);
        let b = torus_braid(p, q).unwrap();
        prop_assert_eq!(b.closure_invariants().components, 1);
        prop_assert!(b.is_strictly_positive() || p == 1);
    }
}
