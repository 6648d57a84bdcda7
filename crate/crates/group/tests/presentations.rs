use braidcurve_core::{BandRepresentation, FreeWord};
use braidcurve_group::*;

fn brep(s: &str) -> BandRepresentation {
    s.parse().unwrap()
}

fn pres(g: usize, rels: &[&[i32]]) -> GroupPresentation {
    GroupPresentation::from_letters(g, rels).unwrap()
}

fn simplify(p: &GroupPresentation) -> GroupPresentation {
    let out = tietze_simplify(p, default_budget(p));
    assert!(!out.budget_exceeded);
    out.presentation
}

/// `(σ₁⋯σ_{n−1})^n` as `n² − n` single bands.
fn standard_factorization(n: usize) -> BandRepresentation {
    let bands: String = (0..n).flat_map(|_| (1..n).map(|k| format!("({k})"))).collect();
    brep(&format!("B{n}: {bands}"))
}

/// Each `A_{i,j}` entered as the node `(σ_i⋯σ_{j−1}) σ_j² (…)⁻¹`, one factor.
fn pure_factorization(n: usize) -> BandRepresentation {
    let mut bands = String::new();
    for i in 1..n {
        for j in (i..n).rev() {
            let conj: Vec<String> = (i..j).map(|k| k.to_string()).collect();
            let band = if conj.is_empty() { format!("({j}^2)") } else { format!("({} : {j}^2)", conj.join(" ")) };
            bands.push_str(&band);
        }
    }
    brep(&format!("B{n}: {bands}"))
}

#[test]
fn single_band_identifies_neighbours() {
    let p = bidisk_presentation(&brep("B2: (1)"));
    let s = simplify(&p);
    assert_eq!(s.generators(), 1);
    assert!(s.relators().is_empty());
    assert_eq!(abelianization(&s), AbelianInvariants::new(1, &[]));
}

#[test]
fn doubled_band_repeats_relators() {
    let once = bidisk_presentation(&brep("B2: (1)"));
    let twice = bidisk_presentation(&brep("B2: (1)(1)"));
    assert_eq!(twice.relators().len(), 2 * once.relators().len());
    assert_eq!(twice.deduplicated(), once.deduplicated());
    assert_eq!(simplify(&twice).generators(), 1);
}

#[test]
fn node_gives_commutation() {
    let p = bidisk_presentation(&brep("B3: (1^2)"));
    let commutator = canonical_relator(&FreeWord::new(3, [1, 2, -1, -2]).unwrap());
    assert!(p.relators().iter().all(|r| canonical_relator(r) == commutator));
    assert!(is_wirtinger(&p));
}

#[test]
fn standard_factorization_gives_cyclic_groups() {
    for n in 2..=6 {
        let out = projective_presentation(&standard_factorization(n)).unwrap();
        assert!(out.product_is_full_twist);
        assert_eq!(abelianization(&out.presentation), AbelianInvariants::new(0, &[n as i64]));
        assert_eq!(coset_enumerate(&out.presentation, 100_000), CosetOutcome::Finite { order: n as u64 });
    }
}

#[test]
fn pure_factorization_gives_free_abelian_groups() {
    for n in 2..=5 {
        let out = projective_presentation(&pure_factorization(n)).unwrap();
        assert!(out.product_is_full_twist, "n = {n}");
        assert_eq!(abelianization(&out.presentation), AbelianInvariants::new(n - 1, &[]));
        let squares = (1..=n as i32).map(|i| FreeWord::new(n, [i, i]).unwrap());
        let quotient = out.presentation.with_relators(squares);
        assert_eq!(coset_enumerate(&quotient, 100_000).order(), Some(1 << (n - 1)));
    }
}

#[test]
fn tricuspidal_quartic_group() {
    let out = projective_presentation(&brep("B4: (3^3)(-3 -2 : 1)(1^3)(2)(1^3)(3 2 : 1)")).unwrap();
    assert!(out.product_is_full_twist);
    assert_eq!(abelianization(&out.presentation), AbelianInvariants::new(0, &[4]));
    assert_eq!(coset_enumerate(&out.presentation, 100_000).order(), Some(12));
    // ⟨a, b | aba = bab, a⁴, a² = b²⟩ has the same invariants.
    let target = pres(2, &[&[1, 2, 1, -2, -1, -2], &[1, 1, 1, 1], &[1, 1, -2, -2]]);
    assert_eq!(abelianization(&target), AbelianInvariants::new(0, &[4]));
    assert_eq!(coset_enumerate(&target, 100_000).order(), Some(12));
    for k in 3..=4 {
        assert_eq!(
            count_homs_to_symmetric(&simplify(&out.presentation), k, DEFAULT_HOM_CAP),
            count_homs_to_symmetric(&target, k, DEFAULT_HOM_CAP)
        );
    }
}

#[test]
fn sextic_intermediate_presentation_simplifies() {
    // x1 = x3 = x5, x2 = x4 = x6, x1x2x1 = x2x1x2, x1⋯x6 = 1.
    let p = pres(6, &[&[1, -3], &[3, -5], &[2, -4], &[4, -6], &[1, 2, 1, -2, -1, -2], &[1, 2, 3, 4, 5, 6]]);
    let s = simplify(&p);
    assert_eq!(s.generators(), 2);
    assert_eq!(abelianization(&s), AbelianInvariants::new(0, &[6]));
    assert_eq!(count_homs_to_symmetric(&s, 3, DEFAULT_HOM_CAP), Ok(12));
    assert_eq!(coset_enumerate(&s, 20_000), CosetOutcome::Exceeded { cap: 20_000 });
}

#[test]
fn simplification_examples() {
    let s = simplify(&pres(2, &[&[1, -2]]));
    assert_eq!((s.generators(), s.relators().len()), (1, 0));
    let free = GroupPresentation::free(3);
    assert_eq!(simplify(&free), free);
    assert_eq!(abelianization(&free), AbelianInvariants::new(3, &[]));
}

#[test]
fn enumeration_and_hom_examples() {
    assert_eq!(coset_enumerate(&pres(1, &[&[1; 7]]), 1000).order(), Some(7));
    let modular = pres(2, &[&[1, 1], &[2, 2, 2]]);
    assert!(matches!(coset_enumerate(&modular, 100_000), CosetOutcome::Exceeded { .. }));
    assert_eq!(count_homs_to_symmetric(&modular, 3, DEFAULT_HOM_CAP), Ok(12));
    assert_eq!(count_homs_to_symmetric(&pres(1, &[&[1; 6]]), 3, DEFAULT_HOM_CAP), Ok(6));
    assert_eq!(count_homs_to_symmetric(&GroupPresentation::free(0), 4, DEFAULT_HOM_CAP), Ok(1));
}

#[test]
fn wirtinger_examples() {
    assert!(is_wirtinger(&pres(3, &[&[1, 2, -1, -3]])));
    assert!(!is_wirtinger(&pres(1, &[&[1, 1, 1, 1]])));
    assert!(is_wirtinger(&bidisk_presentation(&pure_factorization(4))));

    let rep = wirtinger_to_bands(&pres(2, &[&[1, -2]])).unwrap();
    assert_eq!(rep.to_string(), "B2: (1)");

    // Trefoil, read as x1 = (x2 x1) x2 (x2 x1)⁻¹.
    let trefoil = pres(2, &[&[1, 2, 1, -2, -1, -2]]);
    assert!(is_wirtinger(&trefoil));
    let rep = wirtinger_to_bands(&trefoil).unwrap();
    assert!(rep.is_quasipositive());
    let back = simplify(&bidisk_presentation(&rep));
    assert_eq!(abelianization(&back), abelianization(&trefoil));
    for k in 3..=4 {
        assert_eq!(
            count_homs_to_symmetric(&back, k, DEFAULT_HOM_CAP),
            count_homs_to_symmetric(&trefoil, k, DEFAULT_HOM_CAP)
        );
    }
}

#[test]
fn commutation_relations_round_trip() {
    let p = pres(3, &[&[1, 2, -1, -2], &[2, 3, -2, -3], &[1, 3, -1, -3]]);
    let rep = wirtinger_to_bands(&p).unwrap();
    let back = simplify(&bidisk_presentation(&rep));
    assert_eq!(abelianization(&back), AbelianInvariants::new(3, &[]));
    assert_eq!(count_homs_to_symmetric(&back, 3, DEFAULT_HOM_CAP), count_homs_to_symmetric(&p, 3, DEFAULT_HOM_CAP));
}

#[test]
fn infinity_relator_is_fixed_by_bands() {
    let rep = brep("B4: (3^3)(-3 -2 : 1)(1^3)(2)(1^3)(3 2 : 1)");
    let total = FreeWord::total_product(4);
    for band in rep.bands() {
        assert_eq!(total.act(&band.to_word()).unwrap(), total);
    }
}
