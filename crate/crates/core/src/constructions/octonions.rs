//! The octonion multiplication table as a literal fixture, and the order-7
//! automorphism used to twist it.

use crate::algebra::HomAlgebra;
use crate::error::{Error, Result};
use crate::linear_map::LinearMap;
use crate::scalar;

/// `OCTONION_TABLE[i][j] = (s, k)` means `e_i e_j = s e_k`.
///
/// Indexing follows the `e_i e_{i+1} = e_{i+3}` (mod 7) labelling.
pub const OCTONION_TABLE: [[(i8, u8); 8]; 8] = [
    [(1, 0), (1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7)],
    [(1, 1), (-1, 0), (1, 4), (1, 7), (-1, 2), (1, 6), (-1, 5), (-1, 3)],
    [(1, 2), (-1, 4), (-1, 0), (1, 5), (1, 1), (-1, 3), (1, 7), (-1, 6)],
    [(1, 3), (-1, 7), (-1, 5), (-1, 0), (1, 6), (1, 2), (-1, 4), (1, 1)],
    [(1, 4), (1, 2), (-1, 1), (-1, 6), (-1, 0), (1, 7), (1, 3), (-1, 5)],
    [(1, 5), (-1, 6), (1, 3), (-1, 2), (-1, 7), (-1, 0), (1, 1), (1, 4)],
    [(1, 6), (1, 5), (-1, 7), (1, 4), (-1, 3), (-1, 1), (-1, 0), (1, 2)],
    [(1, 7), (1, 3), (1, 6), (-1, 1), (1, 5), (-1, 4), (-1, 2), (-1, 0)],
];

/// Images `α(e_j)` of the automorphism, as `(sign, index)`.
pub const OCTONION_AUTOMORPHISM: [(i64, usize); 8] = [(1, 0), (1, 5), (1, 6), (1, 7), (1, 1), (1, 2), (1, 3), (1, 4)];

/// Octonion conjugation: `e_0 ↦ e_0`, `e_i ↦ -e_i`.
pub fn octonion_conjugation() -> LinearMap {
    let images: Vec<(i64, usize)> = (0..8).map(|i| (if i == 0 { 1 } else { -1 }, i)).collect();
    LinearMap::signed_permutation(&images).expect("in range")
}

/// The octonions from the literal table, with `α = Id` and conjugation.
pub fn load_octonions() -> HomAlgebra {
    let entries = OCTONION_TABLE
        .iter()
        .enumerate()
        .flat_map(|(i, row)| row.iter().enumerate().map(move |(j, &(s, k))| (i, j, k as usize, scalar::int(s as i64))));
    HomAlgebra::from_constants(8, entries, LinearMap::identity(8))
        .and_then(|h| h.with_conjugation(octonion_conjugation()))
        .and_then(|h| h.with_labels((0..8).map(|i| format!("e{i}")).collect()))
        .expect("literal octonion table is a conjugation algebra")
}

/// The automorphism `e1→e5, e2→e6, e3→e7, e4→e1, e5→e2, e6→e3, e7→e4`,
/// checked against the literal table before it is returned.
pub fn octonion_automorphism() -> Result<LinearMap> {
    let alpha = LinearMap::signed_permutation(&OCTONION_AUTOMORPHISM)?;
    match load_octonions().multiplicativity_defect(&alpha)? {
        None => Ok(alpha),
        Some((i, j)) => Err(Error::NotAutomorphism(format!("fails on e{i}*e{j}"))),
    }
}

/// `𝕆_α = (𝕆, αμ, α)`.
pub fn twisted_octonions() -> HomAlgebra {
    let alpha = octonion_automorphism().expect("literal automorphism");
    super::yau_twist(&load_octonions(), &alpha).expect("automorphism is a morphism")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::Element;

    fn e(i: usize) -> Element {
        Element::basis(8, i)
    }

    #[test]
    fn table_entries() {
        let o = load_octonions();
        assert_eq!(o.mul(&e(1), &e(2)).unwrap(), e(4));
        assert_eq!(o.mul(&e(3), &e(5)).unwrap(), e(2));
        assert_eq!(o.mul(&e(7), &e(7)).unwrap(), -e(0));
        assert_eq!(o.mul(&e(0), &e(6)).unwrap(), e(6));
        assert_eq!(o.op_mul(&e(1), &e(2)).unwrap(), -e(4));
        assert!(!o.is_commutative());
    }

    #[test]
    fn unit_is_two_sided() {
        let o = load_octonions();
        let x = Element::from_ints(&[3, -1, 4, 1, -5, 9, 2, -6]);
        assert_eq!(o.mul(&e(0), &x).unwrap(), x);
        assert_eq!(o.mul(&x, &e(0)).unwrap(), x);
    }

    #[test]
    fn commutator_and_bullet() {
        let o = load_octonions();
        assert_eq!(o.commutator(&e(1), &e(2)).unwrap(), e(4).scale_int(2));
        assert_eq!(o.bullet(&e(1), &e(1)).unwrap(), e(0).scale_int(-2));
        let x = Element::from_ints(&[1, 2, 0, 0, 1, 0, 0, 3]);
        assert!(o.commutator(&x, &x).unwrap().is_zero());
    }

    #[test]
    fn automorphism_images() {
        let a = octonion_automorphism().unwrap();
        assert_eq!(a.apply(&e(1)).unwrap(), e(5));
        assert_eq!(a.apply(&e(2)).unwrap(), e(6));
        assert_eq!(a.power(2).apply(&e(1)).unwrap(), e(2));
        assert!(a.power(7).is_identity());
        assert!(twisted_octonions().is_multiplicative());
    }
}
