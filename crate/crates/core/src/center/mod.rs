//! Induction/restriction search for the simple objects of the Drinfeld
//! center, followed by the reconstruction of a fusion subcategory.
//!
//! Everything here is driven by the candidate-dimension table built in
//! [`crate::census`]: constraint matrices are derived from the profile rows
//! and the fusion tensor, never typed in.

mod constraints;
mod splits;
mod subcategory;
mod triplets;

pub use constraints::*;
pub use splits::*;
pub use subcategory::*;
pub use triplets::*;

use crate::fusion::FusionRing;

/// Number of dimensional Galois orbits of each table type present in the
/// center.
pub type OrbitVector = [u32; 9];

/// `[Xₖ, F(I(Xⱼ))] = [Xₖ, ⊕ᵢ Xᵢ ⊗ Xⱼ ⊗ Xᵢ*]` for every `k`.
pub fn induction_image(ring: &FusionRing, j: usize) -> Vec<u32> {
    let r = ring.rank();
    let basis = |i: usize| {
        let mut v = vec![0u32; r];
        v[i] = 1;
        v
    };
    let xj = basis(j);
    let mut out = vec![0u32; r];
    for i in 0..r {
        let t = ring.multiply(&ring.multiply(&basis(i), &xj), &basis(ring.dual(i)));
        for (o, t) in out.iter_mut().zip(t) {
            *o += t;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fusion::builtin_r;

    #[test]
    fn induction_images_of_r() {
        let r = builtin_r();
        let want: [[u32; 6]; 6] = [
            [6, 3, 3, 6, 3, 3],
            [3, 15, 6, 12, 15, 6],
            [3, 6, 15, 12, 15, 6],
            [6, 12, 12, 24, 21, 12],
            [3, 15, 15, 21, 33, 15],
            [3, 6, 6, 12, 15, 15],
        ];
        for (j, w) in want.iter().enumerate() {
            assert_eq!(induction_image(&r, j), w.to_vec(), "j = {j}");
        }
    }

    #[test]
    fn induction_of_trivial_ring() {
        assert_eq!(induction_image(&FusionRing::trivial(), 0), vec![1]);
    }
}
