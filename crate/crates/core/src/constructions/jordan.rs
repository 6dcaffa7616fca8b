//! The 27-dimensional algebra of 3×3 Hermitian octonionic matrices under
//! `X ∗ Y = (XY + YX)/2`.
//!
//! Flattened basis order: the diagonal `a1, a2, a3`, then the octonion
//! coordinates of the `(1,2)`, `(1,3)` and `(2,3)` entries `x`, `y`, `z`.

use crate::algebra::HomAlgebra;
use crate::element::Element;
use crate::error::{check_dim, Error, Result};
use crate::linear_map::LinearMap;
use crate::scalar::{self, Scalar};

use super::octonions::{load_octonions, octonion_automorphism};
use super::twist::yau_twist;

pub const JORDAN_DIM: usize = 27;

/// ```text
/// ( a1  x   y  )
/// ( x̄   a2  z  )
/// ( ȳ   z̄   a3 )
/// ```
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermitianOct3 {
    pub diag: [Scalar; 3],
    pub x: Element,
    pub y: Element,
    pub z: Element,
}

impl HermitianOct3 {
    pub fn from_element(e: &Element) -> Result<Self> {
        check_dim(JORDAN_DIM, e.dim())?;
        let c = e.coords();
        Ok(HermitianOct3 {
            diag: [c[0].clone(), c[1].clone(), c[2].clone()],
            x: Element::from_coords(c[3..11].to_vec()),
            y: Element::from_coords(c[11..19].to_vec()),
            z: Element::from_coords(c[19..27].to_vec()),
        })
    }

    pub fn to_element(&self) -> Element {
        let mut coords: Vec<Scalar> = self.diag.to_vec();
        for part in [&self.x, &self.y, &self.z] {
            coords.extend(part.coords().iter().cloned());
        }
        Element::from_coords(coords)
    }

    /// Octonion entries of the full matrix.
    pub fn matrix(&self, octonions: &HomAlgebra) -> [[Element; 3]; 3] {
        let conj = octonions.conjugation().expect("octonion conjugation");
        let real = |a: &Scalar| Element::basis(8, 0).scale(a);
        let bar = |v: &Element| conj.apply_unchecked(v);
        [
            [real(&self.diag[0]), self.x.clone(), self.y.clone()],
            [bar(&self.x), real(&self.diag[1]), self.z.clone()],
            [bar(&self.y), bar(&self.z), real(&self.diag[2])],
        ]
    }

    /// Reads back a Hermitian matrix; the lower triangle is assumed to be the
    /// conjugate transpose of the upper one.
    fn from_matrix(m: &[[Element; 3]; 3]) -> Self {
        HermitianOct3 {
            diag: [m[0][0].coord(0).clone(), m[1][1].coord(0).clone(), m[2][2].coord(0).clone()],
            x: m[0][1].clone(),
            y: m[0][2].clone(),
            z: m[1][2].clone(),
        }
    }

    /// `(XY + YX) / 2` with octonionic matrix multiplication.
    pub fn jordan_product(&self, other: &HermitianOct3, octonions: &HomAlgebra) -> HermitianOct3 {
        let a = self.matrix(octonions);
        let b = other.matrix(octonions);
        let half = scalar::ratio(1, 2);
        let entry = |i: usize, k: usize| -> Element {
            let mut acc = Element::zero(8);
            for j in 0..3 {
                acc = &acc + &octonions.mul_unchecked(&a[i][j], &b[j][k]);
                acc = &acc + &octonions.mul_unchecked(&b[i][j], &a[j][k]);
            }
            acc.scale(&half)
        };
        let m: [[Element; 3]; 3] = std::array::from_fn(|i| std::array::from_fn(|k| entry(i, k)));
        HermitianOct3::from_matrix(&m)
    }
}

fn jordan_labels() -> Vec<String> {
    let mut labels: Vec<String> = (1..=3).map(|i| format!("a{i}")).collect();
    for slot in ["x", "y", "z"] {
        labels.extend((0..8).map(|i| format!("{slot}{i}")));
    }
    labels
}

/// The Hermitian octonionic Jordan algebra with `α = Id`.
pub fn hermitian_jordan() -> HomAlgebra {
    let o = load_octonions();
    let basis: Vec<HermitianOct3> =
        (0..JORDAN_DIM).map(|i| HermitianOct3::from_element(&Element::basis(JORDAN_DIM, i)).expect("dim 27")).collect();
    HomAlgebra::from_products(JORDAN_DIM, LinearMap::identity(JORDAN_DIM), |i, j| {
        basis[i].jordan_product(&basis[j], &o).to_element()
    })
    .and_then(|h| h.with_labels(jordan_labels()))
    .expect("27-dimensional products")
}

/// Extends a unit- and conjugation-preserving octonion automorphism to the
/// 27-dimensional space: identity on the diagonal, `alpha8` on each entry.
pub fn extend_entrywise(alpha8: &LinearMap) -> Result<LinearMap> {
    if alpha8.dim() != 8 {
        return Err(Error::BadAutomorphism(format!("expected an 8×8 map, found {0}×{0}", alpha8.dim())));
    }
    if alpha8.column(0) != Element::basis(8, 0) {
        return Err(Error::BadAutomorphism("does not fix e0".into()));
    }
    let o = load_octonions();
    let conj = o.conjugation().expect("octonion conjugation");
    if alpha8.compose(conj)? != conj.compose(alpha8)? {
        return Err(Error::BadAutomorphism("does not commute with conjugation".into()));
    }
    if let Some((i, j)) = o.multiplicativity_defect(alpha8)? {
        return Err(Error::BadAutomorphism(format!("not multiplicative on e{i}*e{j}")));
    }
    Ok(LinearMap::identity(3).direct_sum(alpha8).direct_sum(alpha8).direct_sum(alpha8))
}

/// `(M, α ∘ ∗, α)` with `α` the entrywise octonion automorphism.
pub fn twisted_jordan() -> HomAlgebra {
    let alpha = extend_entrywise(&octonion_automorphism().expect("literal automorphism")).expect("valid automorphism");
    yau_twist(&hermitian_jordan(), &alpha).expect("entrywise automorphism is a morphism")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimension_and_commutativity() {
        let j = hermitian_jordan();
        assert_eq!(j.dim(), 27);
        assert!(j.is_commutative());
        assert_eq!(j.labels().unwrap()[3], "x0");
    }

    #[test]
    fn diagonal_matrices_multiply_entrywise() {
        let j = hermitian_jordan();
        let mut a = Element::zero(27);
        let mut b = Element::zero(27);
        for (i, (p, q)) in [(2, 5), (-3, 7), (4, -1)].into_iter().enumerate() {
            a = &a + &Element::basis(27, i).scale_int(p);
            b = &b + &Element::basis(27, i).scale_int(q);
        }
        let expect = Element::from_terms(27, &[(0, 10), (1, -21), (2, -4)]);
        assert_eq!(j.mul(&a, &b).unwrap(), expect);
    }

    #[test]
    fn identity_matrix_is_unit() {
        let j = hermitian_jordan();
        let unit = Element::from_terms(27, &[(0, 1), (1, 1), (2, 1)]);
        let x = Element::from_coords((0..27).map(|i| scalar::int((i as i64 * 7) % 5 - 2)).collect());
        assert_eq!(j.mul(&unit, &x).unwrap(), x);
    }

    #[test]
    fn flattening_round_trip() {
        let x = Element::from_coords((0..27).map(|i| scalar::ratio(i as i64 - 13, 3)).collect());
        assert_eq!(HermitianOct3::from_element(&x).unwrap().to_element(), x);
    }

    #[test]
    fn extension_rejects_bad_maps() {
        let shift =
            LinearMap::signed_permutation(&[(1, 1), (1, 0), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7)]).unwrap();
        assert_eq!(extend_entrywise(&shift).unwrap_err().code(), "bad-automorphism");
        let neg =
            LinearMap::signed_permutation(&[(1, 0), (-1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7)]).unwrap();
        assert_eq!(extend_entrywise(&neg).unwrap_err().code(), "bad-automorphism");
        assert!(extend_entrywise(&LinearMap::identity(4)).is_err());
    }

    #[test]
    fn twisted_is_multiplicative() {
        assert!(twisted_jordan().is_multiplicative());
    }
}
