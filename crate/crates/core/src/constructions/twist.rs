use num_traits::One;

use crate::algebra::HomAlgebra;
use crate::error::{Error, Result};
use crate::linear_map::LinearMap;
use crate::scalar::{self, Scalar};

/// `A_β = (A, βμ, βα)` for a morphism `β` of `A`.
pub fn yau_twist(h: &HomAlgebra, beta: &LinearMap) -> Result<HomAlgebra> {
    h.check_morphism(beta)?;
    twist_unchecked(h, beta)
}

/// `(A, βμ, βα)` for an arbitrary linear `β`. Hom-algebra identities that
/// hold for every `(μ, α)` can still be exercised on the result.
pub fn twist_unchecked(h: &HomAlgebra, beta: &LinearMap) -> Result<HomAlgebra> {
    let alpha = beta.compose(h.alpha())?;
    let mut twisted = h.map_products(beta, alpha)?;
    twisted.set_metadata(h.metadata().clone());
    Ok(twisted)
}

/// `(A, βμ, α)`: only the product is composed with `β`.
pub fn twist_product(h: &HomAlgebra, beta: &LinearMap) -> Result<HomAlgebra> {
    let mut twisted = h.map_products(beta, h.alpha().clone())?;
    twisted.set_metadata(h.metadata().clone());
    Ok(twisted)
}

/// `A^n = (A, α^{2^n - 1} μ, α^{2^n})` for multiplicative `A`.
pub fn derived_hom_algebra(h: &HomAlgebra, n: u32) -> Result<HomAlgebra> {
    if n == 0 {
        return Err(Error::ZeroIndex);
    }
    if !h.is_multiplicative() {
        return Err(Error::NotMultiplicative);
    }
    let steps = 1u32.checked_shl(n).ok_or_else(|| Error::Invalid(format!("derived order {n} too large")))?;
    let product_map = h.alpha().power(steps - 1);
    h.map_products(&product_map, h.alpha().power(steps))
}

/// `A(λ) = (A, λμ + (1-λ)μ^op, α)`.
pub fn lambda_algebra(h: &HomAlgebra, lambda: &Scalar) -> HomAlgebra {
    let rest = Scalar::one() - lambda;
    let mut out = HomAlgebra::from_products(h.dim(), h.alpha().clone(), |i, j| {
        &h.basis_product(i, j).scale(lambda) + &h.basis_product(j, i).scale(&rest)
    })
    .expect("same dimension");
    out.set_metadata(h.metadata().clone());
    out
}

/// `A⁺ = (A, (μ + μ^op)/2, α)`.
pub fn plus_algebra(h: &HomAlgebra) -> HomAlgebra {
    lambda_algebra(h, &scalar::ratio(1, 2))
}

/// `A⁻ = (A, μ - μ^op, α)`, the commutator Hom-algebra.
pub fn minus_algebra(h: &HomAlgebra) -> HomAlgebra {
    HomAlgebra::from_products(h.dim(), h.alpha().clone(), |i, j| &h.basis_product(i, j) - &h.basis_product(j, i))
        .expect("same dimension")
}

/// `(A, μ^op, α)`.
pub fn opposite_algebra(h: &HomAlgebra) -> HomAlgebra {
    lambda_algebra(h, &scalar::zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{load_octonions, octonion_automorphism, twisted_octonions};
    use crate::element::Element;

    fn e(i: usize) -> Element {
        Element::basis(8, i)
    }

    #[test]
    fn identity_twist_is_trivial() {
        let o = load_octonions();
        assert_eq!(yau_twist(&o, &LinearMap::identity(8)).unwrap(), o);
    }

    #[test]
    fn twisted_octonion_entries() {
        let oa = twisted_octonions();
        assert_eq!(oa.mul(&e(1), &e(2)).unwrap(), e(1));
        assert_eq!(oa.mul(&e(5), &e(7)).unwrap(), e(1));
        assert_eq!(*oa.alpha(), octonion_automorphism().unwrap());
    }

    #[test]
    fn non_morphism_rejected() {
        let o = load_octonions();
        let swap =
            LinearMap::signed_permutation(&[(1, 0), (1, 2), (1, 1), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7)]).unwrap();
        assert_eq!(yau_twist(&o, &swap).unwrap_err().code(), "not-morphism");
    }

    #[test]
    fn derived_sequence() {
        let o = load_octonions();
        assert_eq!(derived_hom_algebra(&o, 3).unwrap(), o);
        let oa = twisted_octonions();
        let a1 = derived_hom_algebra(&oa, 1).unwrap();
        let a2 = derived_hom_algebra(&oa, 2).unwrap();
        assert_eq!(derived_hom_algebra(&a1, 1).unwrap(), a2);
        // μ^(1) = α μ_α = α² μ
        let alpha = octonion_automorphism().unwrap();
        for i in 0..8 {
            for j in 0..8 {
                let expect = alpha.power(2).apply(&o.basis_product(i, j)).unwrap();
                assert_eq!(a1.basis_product(i, j), expect);
            }
        }
        assert_eq!(*a1.alpha(), alpha.power(2));
    }

    #[test]
    fn derived_requires_multiplicative() {
        let h = load_octonions().with_alpha(LinearMap::identity(8).scale(&scalar::int(3))).unwrap();
        assert_eq!(derived_hom_algebra(&h, 1).unwrap_err().code(), "not-multiplicative");
    }

    #[test]
    fn lambda_endpoints() {
        let o = load_octonions();
        assert_eq!(lambda_algebra(&o, &scalar::one()), o);
        let op = opposite_algebra(&o);
        assert_eq!(op.basis_product(1, 2), o.basis_product(2, 1));
        assert_eq!(lambda_algebra(&o, &scalar::ratio(1, 2)), plus_algebra(&o));
        let plus = plus_algebra(&o);
        assert!(plus.mul(&e(1), &e(2)).unwrap().is_zero());
        assert!(plus.is_commutative());
    }

    #[test]
    fn minus_is_alternating() {
        let m = minus_algebra(&twisted_octonions());
        let x = Element::from_ints(&[1, -3, 2, 0, 5, 1, -1, 4]);
        assert!(m.mul(&x, &x).unwrap().is_zero());
    }
}
