//! Nilpotent orbit combinatorics for type A: partitions, sl2 weight
//! decompositions, and the centralizer-dimension cross-checks.

use std::fmt;

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        assert!(parts.iter().all(|&p| p > 0), "parts must be positive");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn sum(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn transpose(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition { parts: vec![] };
        }
        let max = self.parts[0];
        let parts = (1..=max)
            .map(|k| self.parts.iter().filter(|&&p| p >= k).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Dominance: `self <= other` iff all prefix sums of `self` are <= those
    /// of `other`. Corresponds to orbit closure for nilpotent Jordan types.
    pub fn dominated_by(&self, other: &Partition) -> bool {
        debug_assert_eq!(self.sum(), other.sum());
        let mut a = 0i64;
        let mut b = 0i64;
        let n = self.parts.len().max(other.parts.len());
        for i in 0..n {
            a += i64::from(self.parts.get(i).copied().unwrap_or(0));
            b += i64::from(other.parts.get(i).copied().unwrap_or(0));
            if a > b {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}]",
            self.parts
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// All partitions of `n`, in descending lexicographic order, starting at `[n]`.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::new();
    fn rec(remaining: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        let hi = remaining.min(max);
        for part in (1..=hi).rev() {
            current.push(part);
            rec(remaining - part, part, current, out);
            current.pop();
        }
    }
    rec(n, n, &mut current, &mut out);
    out
}

/// Multiset of sl2 highest weights, kept sorted descending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sl2WeightDecomposition {
    highest_weights: Vec<u32>,
}

impl Sl2WeightDecomposition {
    pub fn new(mut weights: Vec<u32>) -> Self {
        weights.sort_unstable_by(|a, b| b.cmp(a));
        Sl2WeightDecomposition {
            highest_weights: weights,
        }
    }

    pub fn weights(&self) -> &[u32] {
        &self.highest_weights
    }

    /// Total dimension `sum (lambda_j + 1)`.
    pub fn dim(&self) -> u64 {
        self.highest_weights
            .iter()
            .map(|&w| u64::from(w) + 1)
            .sum()
    }
}

/// Decomposition of `E(a) (x) E(b)`: highest weights `a+b-2k`, `0 <= k <= min(a,b)`.
pub fn clebsch_gordan(a: u32, b: u32) -> Sl2WeightDecomposition {
    let m = a.min(b);
    Sl2WeightDecomposition::new((0..=m).map(|k| a + b - 2 * k).collect())
}

/// sl2 highest weights of the adjoint representation of `sl_n` restricted to
/// a principal sl2 of Jordan type `p`: the natural module decomposes as
/// `V = (+)_i E(p_i - 1)`, the adjoint is `V (x) V*` minus one trivial
/// summand, and `V* ~ V` as an sl2-module.
pub fn adjoint_weights_sln(p: &Partition) -> Sl2WeightDecomposition {
    let n = p.sum();
    assert!(n >= 2, "need n >= 2");
    let mut weights: Vec<u32> = Vec::new();
    for &pi in p.parts() {
        for &pj in p.parts() {
            weights.extend(clebsch_gordan(pi - 1, pj - 1).weights());
        }
    }
    // Drop one trivial summand (the identity direction of gl_n).
    let pos = weights
        .iter()
        .position(|&w| w == 0)
        .expect("V (x) V* always contains a trivial summand");
    weights.swap_remove(pos);
    Sl2WeightDecomposition::new(weights)
}

/// `lambda(x) = sum (lambda_j + 2) - dim`, over the weights carried by a
/// basis of the relevant centralizer.
pub fn lambda_invariant(weights: &Sl2WeightDecomposition, dim_p: u64) -> i64 {
    let s: i64 = weights
        .weights()
        .iter()
        .map(|&w| i64::from(w) + 2)
        .sum();
    s - dim_p as i64
}

/// Centralizer dimension in `sl_n` of a nilpotent of Jordan type `p`:
/// `sum (p^t_i)^2 - 1`.
pub fn centralizer_dim_sln(p: &Partition) -> u64 {
    let t = p.transpose();
    t.parts().iter().map(|&q| u64::from(q) * u64::from(q)).sum::<u64>() - 1
}
