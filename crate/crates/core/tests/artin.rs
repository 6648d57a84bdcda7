use braidcurve_core::braid::delta_squared;
use braidcurve_core::*;

fn w(n: usize, letters: &[i32]) -> BraidWord {
    BraidWord::new(n, letters.iter().copied()).unwrap()
}

fn f(n: usize, letters: &[i32]) -> FreeWord {
    FreeWord::new(n, letters.iter().copied()).unwrap()
}

#[test]
fn free_multiplication() {
    assert!(f(2, &[1]).multiply(&f(2, &[-1])).unwrap().is_identity());
    assert_eq!(f(3, &[1, 2]).multiply(&f(3, &[-2, 3])).unwrap(), f(3, &[1, 3]));
    assert_eq!(FreeWord::identity(3).multiply(&f(3, &[2, -1])).unwrap(), f(3, &[2, -1]));
    assert!(f(2, &[1]).multiply(&f(3, &[1])).is_err());
}

#[test]
fn generator_action() {
    assert_eq!(f(2, &[1]).act(&w(2, &[1])).unwrap(), f(2, &[1, 2, -1]));
    assert_eq!(f(2, &[2]).act(&w(2, &[1])).unwrap(), f(2, &[1]));
    assert_eq!(f(2, &[1]).act(&w(2, &[1, 1])).unwrap(), f(2, &[1, 2, 1, -2, -1]));
    assert_eq!(f(3, &[3]).act(&w(3, &[1])).unwrap(), f(3, &[3]));
    assert!(f(2, &[1]).act(&w(3, &[1])).is_err());
}

#[test]
fn word_problem() {
    assert!(braids_equal(&w(3, &[1, 2, 1]), &w(3, &[2, 1, 2])).unwrap());
    assert!(!braids_equal(&w(3, &[1]), &w(3, &[2])).unwrap());
    assert!(braids_equal(&w(4, &[1, 3]), &w(4, &[3, 1])).unwrap());
    let quartic: BandRepresentation = "B4: (3^3)(-3 -2 : 1)(1^3)(2)(1^3)(3 2 : 1)".parse().unwrap();
    assert!(braids_equal(&quartic.product(), &delta_squared(4, DeltaForm::Power).unwrap()).unwrap());
    assert!(braids_equal(&w(2, &[1]), &w(3, &[1])).is_err());
}

#[test]
fn total_product_is_preserved() {
    assert!(product_preserves_total(&w(2, &[1])));
    assert!(product_preserves_total(&delta_squared(4, DeltaForm::Power).unwrap()));
    let long: Vec<i32> = (0..50).map(|k| [1, -3, 2, 4, -1, 3, -4, -2][k % 8]).collect();
    assert!(product_preserves_total(&w(5, &long)));
}

#[test]
fn images_are_conjugates_of_generators() {
    let b = w(4, &[1, -2, 3, 2, 2, 1]);
    for (i, image) in FreeWord::generator_images(&b).into_iter().enumerate() {
        let (_, j) = image.as_conjugate_of_generator().unwrap();
        assert!(j > 0);
        assert_eq!(b.permutation().image(i + 1), j as usize);
    }
}

#[test]
fn text_format() {
    let x: FreeWord = "F3: 1 -2 3".parse().unwrap();
    assert_eq!(x, f(3, &[1, -2, 3]));
    assert_eq!(x.to_string(), "F3: 1 -2 3");
    assert!("F2: 3".parse::<FreeWord>().is_err());
}
