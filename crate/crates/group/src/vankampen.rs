use braidcurve_core::{braids_equal, Band, BandRepresentation, DeltaForm, FreeWord};
use serde::{Deserialize, Serialize};

use crate::error::GroupError;
use crate::presentation::GroupPresentation;

/// `x_i · (x_i·β)⁻¹` for every strand generator `x_i`, where `β` is the
/// whole band including its power. Relators fixed by the band vanish.
pub fn band_relators(band: &Band) -> Vec<FreeWord> {
    let word = band.to_word();
    FreeWord::generator_images(&word)
        .into_iter()
        .enumerate()
        .map(|(i, image)| {
            let x = FreeWord::generator(word.strands(), i as i32 + 1).expect("index in range");
            x.multiply(&image.inverse()).expect("ranks agree")
        })
        .collect()
}

/// Group of the complement of the curve in the bidisk: one generator per
/// strand and the relators of every band.
pub fn bidisk_presentation(rep: &BandRepresentation) -> GroupPresentation {
    GroupPresentation::new(rep.strands(), rep.bands().iter().flat_map(band_relators))
}

/// The projective presentation together with whether the band product is
/// the full twist, which the construction assumes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectivePresentation {
    pub presentation: GroupPresentation,
    pub product_is_full_twist: bool,
}

/// Bidisk presentation plus the relator `x_1 x_2 ⋯ x_n` from the line at
/// infinity. A product other than Δ² is reported, not rejected.
pub fn projective_presentation(rep: &BandRepresentation) -> Result<ProjectivePresentation, GroupError> {
    let n = rep.strands();
    let product_is_full_twist = n >= 2
        && braids_equal(&rep.product(), &braidcurve_core::braid::delta_squared(n, DeltaForm::Power)?)?;
    let presentation = bidisk_presentation(rep).with_relators([FreeWord::total_product(n)]);
    Ok(ProjectivePresentation { presentation, product_is_full_twist })
}

/// `c · r_j^{±1} · c⁻¹`, with `r_j = x_j · (x_j·β)⁻¹` the relator of a band
/// at the generator `x_j` (1-based).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelatorConjugate {
    pub conjugator: FreeWord,
    pub generator: usize,
    pub inverted: bool,
}

/// Writes `y · (y·β)⁻¹` for an arbitrary word `y` as a product of conjugates
/// of the generator relators of the band, which certifies it as a
/// consequence of them. Uses `r(uv) = u·r(v)·u⁻¹ · r(u)` and
/// `r(x_j⁻¹) = x_j⁻¹ · r_j⁻¹ · x_j`.
pub fn relator_consequence(y: &FreeWord) -> Vec<RelatorConjugate> {
    let n = y.rank();
    let letters = y.letters();
    (0..letters.len())
        .rev()
        .map(|k| {
            let l = letters[k];
            let mut conjugator: Vec<i32> = letters[..k].to_vec();
            if l < 0 {
                conjugator.push(l);
            }
            RelatorConjugate {
                conjugator: FreeWord::new(n, conjugator).expect("letters of y are in range"),
                generator: l.unsigned_abs() as usize,
                inverted: l < 0,
            }
        })
        .collect()
}

/// Multiplies out a product of conjugates of the generator relators of a
/// band.
pub fn expand_consequence(band: &Band, factors: &[RelatorConjugate]) -> FreeWord {
    let relators = band_relators(band);
    let n = band.strands();
    factors.iter().fold(FreeWord::identity(n), |acc, f| {
        let r = &relators[f.generator - 1];
        let r = if f.inverted { r.inverse() } else { r.clone() };
        let term = f.conjugator.multiply(&r).and_then(|w| w.multiply(&f.conjugator.inverse())).expect("ranks agree");
        acc.multiply(&term).expect("ranks agree")
    })
}

/// Whether every relator of `other` is, letter for letter after free
/// reduction, a product of conjugates of the relators of `band`, where
/// `other` is the band with the opposite sign: `x_i·(x_i·β⁻¹)⁻¹` is the
/// inverse of `y·(y·β)⁻¹` for `y = x_i·β⁻¹`.
pub fn flip_is_consequence(band: &Band) -> bool {
    let flipped = band.flipped();
    let inverse_word = flipped.to_word();
    let targets = band_relators(&flipped);
    FreeWord::generator_images(&inverse_word).iter().zip(&targets).all(|(y, target)| {
        expand_consequence(band, &relator_consequence(y)).inverse() == *target
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn consequences_expand_exactly() {
        let band = Band::parse(4, "(3 -2 : 1^3)").unwrap();
        let y = FreeWord::new(4, [2, -3, 1, 1, -4]).unwrap();
        let direct = y.multiply(&y.act(&band.to_word()).unwrap().inverse()).unwrap();
        assert_eq!(expand_consequence(&band, &relator_consequence(&y)), direct);
        assert!(flip_is_consequence(&band));
        assert!(flip_is_consequence(&band.flipped()));
    }

    #[test]
    fn positive_band_gives_equal_generators() {
        let rep: BandRepresentation = "B3: (1)".parse().unwrap();
        let p = bidisk_presentation(&rep);
        assert_eq!(p.relators().len(), 2);
        for r in p.relators() {
            assert_eq!(crate::presentation::canonical_relator(r), vec![-2, 1]);
        }
    }

    #[test]
    fn cusp_gives_braid_relation() {
        let rep: BandRepresentation = "B2: (1^3)".parse().unwrap();
        let p = bidisk_presentation(&rep);
        assert!(!p.relators().is_empty());
        for r in p.relators() {
            assert_eq!(r.len(), 6);
        }
    }

    #[test]
    fn full_twist_flag() {
        let rep: BandRepresentation = "B2: (1)(1)".parse().unwrap();
        assert!(projective_presentation(&rep).unwrap().product_is_full_twist);
        let rep: BandRepresentation = "B2: (1)".parse().unwrap();
        let out = projective_presentation(&rep).unwrap();
        assert!(!out.product_is_full_twist);
        assert_eq!(out.presentation.relators().last().unwrap().letters(), &[1, 2]);
    }
}
