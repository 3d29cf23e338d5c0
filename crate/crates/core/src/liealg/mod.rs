//! Semisimple Lie algebras from Cartan matrices: root systems, Chevalley
//! structure constants, adjoint matrices, the Killing form, the discriminant
//! via characteristic polynomials of `ad x`, and type A nilpotent orbit
//! combinatorics.

mod chevalley;
mod orbits;
mod roots;

pub use chevalley::{AlgebraError, ChevalleyAlgebra, Element, SparseVec};
pub use orbits::{
    adjoint_weights_sln, centralizer_dim_sln, clebsch_gordan, lambda_invariant, partitions_of,
    Partition, Sl2WeightDecomposition,
};
pub use roots::{RootSystem, RootSystemError};

use crate::exact::Rat;
use num::{One, Zero};

/// The coefficients `p_0(x)..p_n(x)` of `det(t - ad x) = sum (-1)^(n-i) p_i(x) t^i`,
/// the global index `l` (the rank), and the discriminant value `p_l(x)`.
#[derive(Debug, Clone)]
pub struct CharPolyProfile {
    pub p: Vec<Rat>,
    pub l: usize,
    pub delta: Rat,
}

/// Exact characteristic data of `ad x`. `l` is taken from the rank of the
/// algebra, not re-derived per element: the discriminant index is a global
/// invariant and individual coefficients may vanish at special points.
pub fn delta_profile(alg: &ChevalleyAlgebra, x: &Element) -> Result<CharPolyProfile, AlgebraError> {
    let ad = alg.ad(x)?;
    let coeffs = ad.char_poly().expect("ad matrix is square");
    let n = alg.dim();
    let p: Vec<Rat> = coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| {
            if (n - i) % 2 == 0 {
                c.clone()
            } else {
                -c.clone()
            }
        })
        .collect();
    let l = alg.rank();
    let delta = p[l].clone();
    Ok(CharPolyProfile { p, l, delta })
}

/// Whether `x` is regular semisimple: the discriminant does not vanish.
pub fn is_regular_semisimple(alg: &ChevalleyAlgebra, x: &Element) -> Result<bool, AlgebraError> {
    Ok(!delta_profile(alg, x)?.delta.is_zero())
}

/// Explicit nilpotent of Jordan type `p` built from a chain of root vectors:
/// the sum of `e_(chain[i])` skipping the block boundaries of the partition.
///
/// `chain` must list root indices forming a type A Dynkin chain (the simple
/// roots of an `sl_(r+1)` subalgebra in diagram order); the partition must
/// sum to `r + 1`.
pub fn jordan_nilpotent(
    alg: &ChevalleyAlgebra,
    chain: &[usize],
    p: &Partition,
) -> Element {
    let n = p.sum() as usize;
    assert_eq!(chain.len(), n - 1, "chain length must be (sum of parts) - 1");
    let mut boundaries = std::collections::BTreeSet::new();
    let mut acc = 0u32;
    for &part in p.parts() {
        acc += part;
        boundaries.insert(acc as usize);
    }
    let mut x = alg.zero_element();
    for (i, &root_idx) in chain.iter().enumerate() {
        if !boundaries.contains(&(i + 1)) {
            x[alg.e_index(root_idx)] = Rat::one();
        }
    }
    x
}

/// The simple-root chain of a full type A algebra, in Dynkin order.
pub fn full_type_a_chain(alg: &ChevalleyAlgebra) -> Vec<usize> {
    (0..alg.rank())
        .map(|i| alg.root_system().simple_index(i))
        .collect()
}
