//! Basic quadruples in the sedenions and the maps they determine.

use std::collections::BTreeMap;

use crate::algebra::HomAlgebra;
use crate::error::{Error, Result};
use crate::linear_map::LinearMap;

/// Sixteen images `(sign, index)` of a sedenion self-map listed alongside the
/// quadruple assignment `(e1, e2, e4, e8) ↦ (e5, e7, e6, e15)`.
pub const LISTED_SEDENION_IMAGES: [(i64, usize); 16] = [
    (1, 0),
    (1, 5),
    (1, 7),
    (1, 2),
    (1, 6),
    (-1, 3),
    (1, 1),
    (-1, 4),
    (1, 15),
    (-1, 10),
    (-1, 8),
    (1, 13),
    (1, 9),
    (-1, 12),
    (-1, 14),
    (1, 11),
];

pub fn listed_sedenion_map() -> LinearMap {
    LinearMap::signed_permutation(&LISTED_SEDENION_IMAGES).expect("indices below 16")
}

/// Four distinct imaginary basis indices `(i1, i2, i3, i4)` with
/// `e_{i3} ∉ ±{e_{i1} e_{i2}}` and
/// `e_{i4} ∉ ±{e_{i1}e_{i2}, e_{i1}e_{i3}, e_{i2}e_{i3}, (e_{i1}e_{i2})e_{i3}}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BasicQuadruple {
    indices: [usize; 4],
}

impl BasicQuadruple {
    pub fn new(s: &HomAlgebra, indices: [usize; 4]) -> Result<Self> {
        let d = s.dim();
        for (n, &i) in indices.iter().enumerate() {
            if i == 0 || i >= d {
                return Err(Error::BadQuadruple(format!("index {i} not an imaginary unit of dimension {d}")));
            }
            if indices[..n].contains(&i) {
                return Err(Error::BadQuadruple(format!("index {i} repeated")));
            }
        }
        let [a, b, c, e] = indices;
        let prod = |i: usize, j: usize| s.monomial_product(i, j).ok_or(Error::NotMonomial(i, j));
        let ab = prod(a, b)?.1;
        if c == ab {
            return Err(Error::BadQuadruple(format!("e{c} = ±e{a}e{b}")));
        }
        let ac = prod(a, c)?.1;
        let bc = prod(b, c)?.1;
        let abc = prod(ab, c)?.1;
        if [ab, ac, bc, abc].contains(&e) {
            return Err(Error::BadQuadruple(format!("e{e} lies in ± the span generated by the first three")));
        }
        Ok(BasicQuadruple { indices })
    }

    pub fn indices(&self) -> [usize; 4] {
        self.indices
    }
}

/// The linear map obtained by extending a quadruple assignment over products.
#[derive(Clone, Debug)]
pub struct QuadrupleExtension {
    pub map: LinearMap,
    /// Basis indices reached by two words of equal length with different images.
    pub conflicts: Vec<usize>,
    /// Word length at which each basis index was first reached.
    pub depth: Vec<usize>,
}

/// Extends `src[l] ↦ dst[l]` (and `e_0 ↦ e_0`) to every basis vector.
///
/// Words are explored breadth first by length; within a round the pairs of
/// already reached indices are visited in lexicographic order and the first
/// image found for a new index is kept.
pub fn quadruple_extension(s: &HomAlgebra, src: &BasicQuadruple, dst: &BasicQuadruple) -> Result<QuadrupleExtension> {
    let d = s.dim();
    let mut images: Vec<Option<(i64, usize)>> = vec![None; d];
    let mut depth = vec![usize::MAX; d];
    images[0] = Some((1, 0));
    depth[0] = 0;
    for (&i, &j) in src.indices.iter().zip(&dst.indices) {
        images[i] = Some((1, j));
        depth[i] = 1;
    }
    let mut conflicts = Vec::new();
    let mut round = 1;
    loop {
        let known: Vec<usize> = (0..d).filter(|&i| images[i].is_some()).collect();
        let mut fresh: BTreeMap<usize, (i64, usize)> = BTreeMap::new();
        for &i in &known {
            for &j in &known {
                let (sign, k) = s.monomial_product(i, j).ok_or(Error::NotMonomial(i, j))?;
                if images[k].is_some() {
                    continue;
                }
                let (si, ki) = images[i].expect("known");
                let (sj, kj) = images[j].expect("known");
                let (sp, kp) = s.monomial_product(ki, kj).ok_or(Error::NotMonomial(ki, kj))?;
                let image = (sign * si * sj * sp, kp);
                match fresh.get(&k) {
                    None => {
                        fresh.insert(k, image);
                    }
                    Some(&prev) if prev != image => {
                        if !conflicts.contains(&k) {
                            conflicts.push(k);
                        }
                    }
                    Some(_) => {}
                }
            }
        }
        if fresh.is_empty() {
            break;
        }
        round += 1;
        for (k, image) in fresh {
            images[k] = Some(image);
            depth[k] = round;
        }
    }
    let reached = images.iter().filter(|i| i.is_some()).count();
    if reached < d {
        return Err(Error::NotGenerating { reached, dim: d });
    }
    let images: Vec<(i64, usize)> = images.into_iter().map(|i| i.expect("all reached")).collect();
    conflicts.sort_unstable();
    Ok(QuadrupleExtension { map: LinearMap::signed_permutation(&images)?, conflicts, depth })
}

/// The automorphism sending one basic quadruple to another, verified to be
/// multiplicative on all basis pairs.
pub fn quadruple_automorphism(s: &HomAlgebra, src: &BasicQuadruple, dst: &BasicQuadruple) -> Result<LinearMap> {
    let ext = quadruple_extension(s, src, dst)?;
    if let Some(&k) = ext.conflicts.first() {
        return Err(Error::Inconsistent(k));
    }
    match s.multiplicativity_defect(&ext.map)? {
        None => Ok(ext.map),
        Some((i, j)) => Err(Error::NotAutomorphism(format!("β(e{i}e{j}) != β(e{i})β(e{j})"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::sedenions;

    #[test]
    fn quadruple_validation() {
        let s = sedenions();
        assert!(BasicQuadruple::new(&s, [1, 2, 4, 8]).is_ok());
        assert_eq!(BasicQuadruple::new(&s, [1, 2, 3, 8]).unwrap_err().code(), "bad-quadruple");
        assert_eq!(BasicQuadruple::new(&s, [1, 2, 4, 7]).unwrap_err().code(), "bad-quadruple");
        assert_eq!(BasicQuadruple::new(&s, [0, 2, 4, 8]).unwrap_err().code(), "bad-quadruple");
        assert_eq!(BasicQuadruple::new(&s, [1, 1, 4, 8]).unwrap_err().code(), "bad-quadruple");
    }

    #[test]
    fn identity_quadruple() {
        let s = sedenions();
        let q = BasicQuadruple::new(&s, [1, 2, 4, 8]).unwrap();
        assert!(quadruple_automorphism(&s, &q, &q).unwrap().is_identity());
    }

    #[test]
    fn octonion_part_relabelling_extends() {
        // e2 ↦ e3 inside the quaternion subalgebra, e8 fixed
        let s = sedenions();
        let src = BasicQuadruple::new(&s, [1, 2, 4, 8]).unwrap();
        let dst = BasicQuadruple::new(&s, [1, 3, 4, 8]).unwrap();
        let beta = quadruple_automorphism(&s, &src, &dst).unwrap();
        assert!(s.multiplicativity_defect(&beta).unwrap().is_none());
        assert!(!beta.is_identity());
    }

    #[test]
    fn listed_assignment_is_rejected() {
        let s = sedenions();
        let src = BasicQuadruple::new(&s, [1, 2, 4, 8]).unwrap();
        let dst = BasicQuadruple::new(&s, [5, 7, 6, 15]).unwrap();
        assert!(quadruple_automorphism(&s, &src, &dst).is_err());
        assert!(s.multiplicativity_defect(&listed_sedenion_map()).unwrap().is_some());
    }

    #[test]
    fn extension_respects_word_depth() {
        let s = sedenions();
        let src = BasicQuadruple::new(&s, [1, 2, 4, 8]).unwrap();
        let ext = quadruple_extension(&s, &src, &src).unwrap();
        assert_eq!(ext.depth[3], 2);
        assert_eq!(ext.depth[8], 1);
        assert!(ext.depth.iter().all(|&d| d <= 4));
    }
}
