use braidcurve_core::{Band, BandRepresentation, BraidWord, FreeWord};

use crate::error::GroupError;
use crate::presentation::GroupPresentation;

/// If some rotation of `r` or `r⁻¹` reads `x_i · w · x_j⁻¹ · w⁻¹`, returns
/// `(i, w, j)`, describing the relation `x_i = w x_j w⁻¹`.
pub fn wirtinger_form(r: &FreeWord) -> Option<(i32, Vec<i32>, i32)> {
    let r = r.cyclically_reduced();
    let len = r.len();
    if len < 2 || len % 2 == 1 {
        return None;
    }
    let half = len / 2;
    for word in [r.letters().to_vec(), r.inverse().letters().to_vec()] {
        for k in 0..len {
            let s: Vec<i32> = word[k..].iter().chain(&word[..k]).copied().collect();
            if s[0] < 0 || s[half] > 0 {
                continue;
            }
            let w = &s[1..half];
            let tail: Vec<i32> = s[half + 1..].iter().rev().map(|&l| -l).collect();
            if w == &tail[..] {
                return Some((s[0], w.to_vec(), -s[half]));
            }
        }
    }
    None
}

/// Whether every relator has the form `x_i w x_j⁻¹ w⁻¹`.
pub fn is_wirtinger(p: &GroupPresentation) -> bool {
    p.relators().iter().all(|r| wirtinger_form(r).is_some())
}

/// Relations among generators, 1-based.
enum Relation {
    Equal(usize, usize),
    /// `c = a b a⁻¹`.
    Conjugate { c: usize, a: usize, b: usize },
}

/// Band whose relation is `x_p = x_q` (`p < q`): the core `σ_p` conjugated by
/// `σ_{q−1} ⋯ σ_{p+1}`, which carries strand `q` next to strand `p`.
fn equality_band(strands: usize, p: usize, q: usize) -> Result<Band, GroupError> {
    let conjugator = BraidWord::new(strands, (p + 1..q).rev().map(|i| i as i32))?;
    Ok(Band::new(conjugator, p as u32, 1)?)
}

/// Band on consecutive strands `k, k+1, k+2` carrying `c, a, b` whose
/// relation is `x_k = x_{k+1} x_{k+2} x_{k+1}⁻¹`.
fn conjugation_band(strands: usize, k: usize) -> Result<Band, GroupError> {
    let conjugator = BraidWord::new(strands, [-(k as i32 + 1)])?;
    Ok(Band::new(conjugator, k as u32, 1)?)
}

/// A quasipositive band representation whose bidisk presentation is
/// Tietze-equivalent to the given Wirtinger presentation.
///
/// Each relation `x_i = w x_j w⁻¹` is unwound letter by letter into
/// relations `c = a b a⁻¹` through auxiliary generators. Every generator
/// gets a strand. Each relation `c = a b a⁻¹` gets three further strands
/// holding copies of `c, a, b` side by side, tied to the originals by
/// equality bands, and one band on those three strands.
pub fn wirtinger_to_bands(p: &GroupPresentation) -> Result<BandRepresentation, GroupError> {
    if p.generators() == 0 {
        return Err(GroupError::NoGenerators);
    }
    let mut generators = p.generators();
    let mut relations = Vec::new();
    for (index, r) in p.relators().iter().enumerate() {
        let (i, w, j) = wirtinger_form(r).ok_or(GroupError::NotWirtinger { index })?;
        let len = w.len();
        if len == 0 {
            relations.push(Relation::Equal(i as usize, j as usize));
            continue;
        }
        // chain[k] stands for w_{k+1} ⋯ w_len · x_j · (…)⁻¹; chain[0] = x_i.
        let mut chain = vec![0usize; len + 1];
        chain[0] = i as usize;
        chain[len] = j as usize;
        for slot in chain.iter_mut().take(len).skip(1) {
            generators += 1;
            *slot = generators;
        }
        for k in 0..len {
            let a = w[k].unsigned_abs() as usize;
            let (outer, inner) = (chain[k], chain[k + 1]);
            relations.push(if w[k] > 0 {
                Relation::Conjugate { c: outer, a, b: inner }
            } else {
                Relation::Conjugate { c: inner, a, b: outer }
            });
        }
    }
    let triples = relations.iter().filter(|r| matches!(r, Relation::Conjugate { .. })).count();
    let strands = generators + 3 * triples;
    let mut bands = Vec::new();
    let mut next_block = generators + 1;
    for relation in relations {
        match relation {
            Relation::Equal(u, v) if u != v => bands.push(equality_band(strands, u.min(v), u.max(v))?),
            Relation::Equal(..) => {}
            Relation::Conjugate { c, a, b } => {
                let k = next_block;
                next_block += 3;
                for (copy, original) in [(k, c), (k + 1, a), (k + 2, b)] {
                    bands.push(equality_band(strands, original, copy)?);
                }
                bands.push(conjugation_band(strands, k)?);
            }
        }
    }
    Ok(BandRepresentation::new(strands, bands)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vankampen::band_relators;

    #[test]
    fn recognizes_forms() {
        let r = FreeWord::new(3, [1, 2, -3, -2]).unwrap();
        assert_eq!(wirtinger_form(&r), Some((1, vec![2], 3)));
        let r = FreeWord::new(2, [2, -1]).unwrap();
        assert!(wirtinger_form(&r).is_some());
        let r = FreeWord::new(2, [1, 1]).unwrap();
        assert!(wirtinger_form(&r).is_none());
        let r = FreeWord::new(2, [-1, -2]).unwrap();
        assert!(wirtinger_form(&r).is_none());
    }

    #[test]
    fn building_block_relations() {
        let eq = equality_band(5, 2, 5).unwrap();
        let rel = band_relators(&eq);
        assert!(rel.iter().any(|r| {
            let l = r.cyclically_reduced();
            l.letters() == [2, -5] || l.letters() == [5, -2]
        }));
        let conj = conjugation_band(4, 2).unwrap();
        // x2 = x3 x4 x3⁻¹ up to rotation and inversion.
        let target = crate::presentation::canonical_relator(&FreeWord::new(4, [2, 3, -4, -3]).unwrap());
        assert!(band_relators(&conj).iter().any(|r| crate::presentation::canonical_relator(r) == target));
    }

    #[test]
    fn rejects_non_wirtinger() {
        let p = GroupPresentation::from_letters(2, &[&[1, 1, 2]]).unwrap();
        assert_eq!(wirtinger_to_bands(&p), Err(GroupError::NotWirtinger { index: 0 }));
    }
}
