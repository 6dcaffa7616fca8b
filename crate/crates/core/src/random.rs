//! Seeded generators for elements and small Hom-algebras.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::HomAlgebra;
use crate::constructions::yau_twist;
use crate::element::Element;
use crate::linear_map::LinearMap;
use crate::scalar::{self, Scalar};

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Integer coordinates drawn uniformly from `[-bound, bound]`.
pub fn element_from(rng: &mut SeededRng, dim: usize, bound: i64) -> Element {
    Element::from_coords((0..dim).map(|_| scalar::int(rng.gen_range(-bound..=bound))).collect())
}

pub fn random_element(h: &HomAlgebra, bound: i64, seed: u64) -> Element {
    element_from(&mut rng(seed), h.dim(), bound)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum AlphaKind {
    /// `α = Id`.
    Identity,
    /// A random matrix, in general not multiplicative.
    #[default]
    Random,
    /// `α` is an algebra morphism by construction.
    Multiplicative,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct RandomAlgebraFlags {
    pub alpha: AlphaKind,
}

const COEFF_BOUND: i64 = 3;

fn nonzero(rng: &mut SeededRng) -> Scalar {
    let v = rng.gen_range(1..=COEFF_BOUND);
    scalar::int(if rng.gen_bool(0.5) { v } else { -v })
}

fn random_matrix(rng: &mut SeededRng, dim: usize) -> LinearMap {
    let rows: Vec<Vec<Scalar>> =
        (0..dim).map(|_| (0..dim).map(|_| scalar::int(rng.gen_range(-COEFF_BOUND..=COEFF_BOUND))).collect()).collect();
    LinearMap::from_rows(&rows).expect("square")
}

fn random_invertible(rng: &mut SeededRng, dim: usize) -> (LinearMap, LinearMap) {
    loop {
        let p = random_matrix(rng, dim);
        if let Some(inv) = p.inverse() {
            return (p, inv);
        }
    }
}

/// A seeded random Hom-algebra with each structure constant nonzero with
/// probability `density`.
///
/// With [`AlphaKind::Multiplicative`] the product is first drawn so that a
/// diagonal `β = diag(λ)`, `λ_i ∈ {-1, 0, 1}`, is a morphism
/// (`c_ijk ≠ 0` only when `λ_i λ_j = λ_k`), then conjugated by a random
/// invertible change of basis, and finally Yau-twisted by the conjugated `β`.
pub fn random_hom_algebra(dim: usize, density: f64, seed: u64, flags: RandomAlgebraFlags) -> HomAlgebra {
    assert!(dim > 0, "dimension must be positive");
    assert!(density > 0.0 && density <= 1.0, "density must lie in (0, 1]");
    let mut rng = rng(seed);
    match flags.alpha {
        AlphaKind::Identity | AlphaKind::Random => {
            let mut entries = Vec::new();
            for i in 0..dim {
                for j in 0..dim {
                    for k in 0..dim {
                        if rng.gen_bool(density) {
                            entries.push((i, j, k, nonzero(&mut rng)));
                        }
                    }
                }
            }
            let alpha = match flags.alpha {
                AlphaKind::Identity => LinearMap::identity(dim),
                _ => random_matrix(&mut rng, dim),
            };
            HomAlgebra::from_constants(dim, entries, alpha).expect("indices in range")
        }
        AlphaKind::Multiplicative => {
            let weights: Vec<i64> = (0..dim).map(|_| rng.gen_range(-1..=1)).collect();
            let mut entries = Vec::new();
            for i in 0..dim {
                for j in 0..dim {
                    for k in 0..dim {
                        if weights[i] * weights[j] == weights[k] && rng.gen_bool(density) {
                            entries.push((i, j, k, nonzero(&mut rng)));
                        }
                    }
                }
            }
            let base = HomAlgebra::from_constants(dim, entries, LinearMap::identity(dim)).expect("indices in range");
            let beta = LinearMap::from_columns(
                &(0..dim).map(|i| Element::basis(dim, i).scale_int(weights[i])).collect::<Vec<_>>(),
            )
            .expect("square");
            let (p, p_inv) = random_invertible(&mut rng, dim);
            // transport along P: e_i ↦ P e_i
            let moved = HomAlgebra::from_products(dim, LinearMap::identity(dim), |i, j| {
                let (u, v) = (p_inv.column(i), p_inv.column(j));
                p.apply_unchecked(&base.mul_unchecked(&u, &v))
            })
            .expect("square");
            let moved_beta = p.compose(&beta).and_then(|m| m.compose(&p_inv)).expect("square");
            yau_twist(&moved, &moved_beta).expect("β is a morphism by construction")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    #[test]
    fn deterministic() {
        let f = RandomAlgebraFlags { alpha: AlphaKind::Random };
        assert_eq!(random_hom_algebra(3, 0.5, 7, f), random_hom_algebra(3, 0.5, 7, f));
        assert_ne!(random_hom_algebra(3, 0.5, 7, f), random_hom_algebra(3, 0.5, 8, f));
    }

    #[test]
    fn multiplicative_by_construction() {
        for seed in 0..20 {
            let h = random_hom_algebra(4, 0.6, seed, RandomAlgebraFlags { alpha: AlphaKind::Multiplicative });
            assert!(h.is_multiplicative(), "seed {seed}");
            let h = random_hom_algebra(3, 0.6, seed, RandomAlgebraFlags { alpha: AlphaKind::Identity });
            assert!(h.is_multiplicative());
        }
    }

    #[test]
    fn element_bounds() {
        let h = random_hom_algebra(5, 1.0, 1, RandomAlgebraFlags::default());
        let x = random_element(&h, 9, 3);
        assert!(x.coords().iter().all(|c| c.is_integer() && c.numer().abs() <= 9.into()));
    }
}
