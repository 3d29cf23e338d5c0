//! Root systems of finite type, generated from Cartan matrices by closing
//! the simple roots under simple reflections.
//!
//! Roots are stored as integer coordinate vectors in the simple-root basis,
//! positive roots first (sorted by height, then lexicographically), each
//! followed by its negative in the mirrored order.

use crate::exact::{rat_int, Rat};
use num::Zero;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RootSystemError {
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),
    #[error("reflection closure exceeded {0} roots; not a finite type")]
    NotFiniteType(usize),
    #[error("unknown type string: {0}")]
    UnknownType(String),
    #[error("Weyl group larger than cap {0}")]
    WeylGroupTooLarge(usize),
}

const ROOT_CAP: usize = 1024;

#[derive(Debug, Clone)]
pub struct RootSystem {
    rank: usize,
    cartan: Vec<Vec<i64>>,
    /// Positive roots (height, then lex), then their negatives in the same order.
    roots: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
    n_positive: usize,
    /// Symmetrizer: half squared lengths of the simple roots, shortest = 1
    /// within each irreducible component.
    half_lengths: Vec<Rat>,
}

impl RootSystem {
    /// Builds a root system from a Cartan matrix with the convention
    /// `cartan[i][j] = <alpha_i_check, alpha_j> = 2 (a_i, a_j) / (a_i, a_i)`.
    pub fn from_cartan(cartan: Vec<Vec<i64>>) -> Result<Self, RootSystemError> {
        let rank = cartan.len();
        if rank == 0 {
            return Err(RootSystemError::InvalidCartan("empty matrix".into()));
        }
        for (i, row) in cartan.iter().enumerate() {
            if row.len() != rank {
                return Err(RootSystemError::InvalidCartan("not square".into()));
            }
            if row[i] != 2 {
                return Err(RootSystemError::InvalidCartan(format!(
                    "diagonal entry {} at ({i},{i})",
                    row[i]
                )));
            }
            for (j, &a) in row.iter().enumerate() {
                if i != j {
                    if a > 0 {
                        return Err(RootSystemError::InvalidCartan(format!(
                            "positive off-diagonal entry at ({i},{j})"
                        )));
                    }
                    if (a == 0) != (cartan[j][i] == 0) {
                        return Err(RootSystemError::InvalidCartan(format!(
                            "zero pattern not symmetric at ({i},{j})"
                        )));
                    }
                }
            }
        }

        // Close the simple roots under simple reflections.
        let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
        let mut queue: Vec<Vec<i64>> = Vec::new();
        for i in 0..rank {
            let mut v = vec![0i64; rank];
            v[i] = 1;
            seen.insert(v.clone(), ());
            queue.push(v);
        }
        let mut head = 0;
        while head < queue.len() {
            let beta = queue[head].clone();
            head += 1;
            for i in 0..rank {
                let pairing: i64 = (0..rank).map(|j| cartan[i][j] * beta[j]).sum();
                let mut refl = beta.clone();
                refl[i] -= pairing;
                if !seen.contains_key(&refl) {
                    if seen.len() >= ROOT_CAP {
                        return Err(RootSystemError::NotFiniteType(ROOT_CAP));
                    }
                    seen.insert(refl.clone(), ());
                    queue.push(refl);
                }
            }
        }

        let mut positives: Vec<Vec<i64>> = seen
            .keys()
            .filter(|v| is_positive_vec(v))
            .cloned()
            .collect();
        positives.sort_by_key(|v| (v.iter().sum::<i64>(), v.clone()));
        if positives.len() * 2 != seen.len() {
            return Err(RootSystemError::InvalidCartan(
                "root set not symmetric under negation".into(),
            ));
        }
        let n_positive = positives.len();
        let mut roots = positives;
        for k in 0..n_positive {
            let neg: Vec<i64> = roots[k].iter().map(|c| -c).collect();
            roots.push(neg);
        }
        let index: HashMap<Vec<i64>, usize> = roots
            .iter()
            .enumerate()
            .map(|(k, v)| (v.clone(), k))
            .collect();

        let half_lengths = symmetrizer(&cartan)?;

        Ok(RootSystem {
            rank,
            cartan,
            roots,
            index,
            n_positive,
            half_lengths,
        })
    }

    /// Parses a type string such as `A3`, `B2`, `G2`, or a product such as
    /// `A1xA1`, into the corresponding Cartan matrix.
    pub fn cartan_of_type(name: &str) -> Result<Vec<Vec<i64>>, RootSystemError> {
        let parts: Vec<&str> = name.split(['x', 'X']).collect();
        let mut blocks = Vec::new();
        for part in parts {
            blocks.push(simple_type_cartan(part.trim())?);
        }
        let total: usize = blocks.iter().map(|b| b.len()).sum();
        let mut cartan = vec![vec![0i64; total]; total];
        let mut off = 0;
        for b in blocks {
            let n = b.len();
            for i in 0..n {
                for j in 0..n {
                    cartan[off + i][off + j] = b[i][j];
                }
            }
            off += n;
        }
        Ok(cartan)
    }

    pub fn from_type(name: &str) -> Result<Self, RootSystemError> {
        Self::from_cartan(Self::cartan_of_type(name)?)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_positive(&self) -> usize {
        self.n_positive
    }

    pub fn root(&self, k: usize) -> &[i64] {
        &self.roots[k]
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn root_index(&self, coords: &[i64]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    pub fn is_positive(&self, k: usize) -> bool {
        k < self.n_positive
    }

    /// Index of `-root(k)`.
    pub fn negative_of(&self, k: usize) -> usize {
        if k < self.n_positive {
            k + self.n_positive
        } else {
            k - self.n_positive
        }
    }

    /// Index of the simple root `alpha_i` in the root list.
    pub fn simple_index(&self, i: usize) -> usize {
        let mut v = vec![0i64; self.rank];
        v[i] = 1;
        self.index[&v]
    }

    pub fn height(&self, k: usize) -> i64 {
        self.roots[k].iter().sum()
    }

    /// Inner product `(beta, gamma)` from the symmetrized Cartan matrix,
    /// normalized so short simple roots have squared length 2.
    pub fn inner(&self, a: &[i64], b: &[i64]) -> Rat {
        let mut acc = Rat::zero();
        for i in 0..self.rank {
            if a[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                if b[j] == 0 || self.cartan[i][j] == 0 {
                    continue;
                }
                acc = acc
                    + &self.half_lengths[i]
                        * rat_int(a[i] * self.cartan[i][j] * b[j]);
            }
        }
        acc
    }

    /// `<beta, alpha_check> = 2 (beta, alpha) / (alpha, alpha)` for roots;
    /// always an integer.
    pub fn pairing(&self, beta: &[i64], alpha: &[i64]) -> i64 {
        let two_ratio = rat_int(2) * self.inner(beta, alpha) / self.inner(alpha, alpha);
        debug_assert!(two_ratio.denom() == &num::BigInt::from(1));
        i64::try_from(two_ratio.numer()).expect("pairing fits i64")
    }

    /// Evaluation `alpha(H)` where `H = sum x_i h_i` over simple coroots:
    /// `alpha(h_i) = cartan[i] . alpha`.
    pub fn eval_on_coroot_coords(&self, root_k: usize, coords: &[Rat]) -> Rat {
        let alpha = &self.roots[root_k];
        let mut acc = Rat::zero();
        for (i, x) in coords.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let pairing: i64 = (0..self.rank).map(|j| self.cartan[i][j] * alpha[j]).sum();
            if pairing != 0 {
                acc = acc + x * rat_int(pairing);
            }
        }
        acc
    }

    /// The largest `p >= 0` with `beta - p*alpha` a root (alpha, beta roots).
    pub fn string_down(&self, alpha: usize, beta: usize) -> u32 {
        let a = self.roots[alpha].clone();
        let mut b = self.roots[beta].clone();
        let mut p = 0u32;
        loop {
            for i in 0..self.rank {
                b[i] -= a[i];
            }
            if self.index.contains_key(&b) {
                p += 1;
            } else {
                return p;
            }
        }
    }

    /// The sum `alpha + beta` as a root index, if it is a root.
    pub fn sum_root(&self, alpha: usize, beta: usize) -> Option<usize> {
        let s: Vec<i64> = self.roots[alpha]
            .iter()
            .zip(&self.roots[beta])
            .map(|(x, y)| x + y)
            .collect();
        self.index.get(&s).copied()
    }

    /// The Weyl group as permutations of the root list, generated by the
    /// simple reflections. Errors out above `cap` elements.
    pub fn weyl_group(&self, cap: usize) -> Result<Vec<Vec<u16>>, RootSystemError> {
        let n = self.roots.len();
        let mut gens: Vec<Vec<u16>> = Vec::with_capacity(self.rank);
        for i in 0..self.rank {
            let mut perm = vec![0u16; n];
            for (k, beta) in self.roots.iter().enumerate() {
                let pairing: i64 = (0..self.rank).map(|j| self.cartan[i][j] * beta[j]).sum();
                let mut refl = beta.clone();
                refl[i] -= pairing;
                perm[k] = self.index[&refl] as u16;
            }
            gens.push(perm);
        }
        let identity: Vec<u16> = (0..n as u16).collect();
        let mut seen = std::collections::HashSet::new();
        seen.insert(identity.clone());
        let mut queue = vec![identity];
        let mut head = 0;
        while head < queue.len() {
            let w = queue[head].clone();
            head += 1;
            for g in &gens {
                let composed: Vec<u16> = (0..n).map(|k| g[w[k] as usize]).collect();
                if seen.insert(composed.clone()) {
                    if seen.len() > cap {
                        return Err(RootSystemError::WeylGroupTooLarge(cap));
                    }
                    queue.push(composed);
                }
            }
        }
        Ok(queue)
    }
}

fn is_positive_vec(v: &[i64]) -> bool {
    for &c in v {
        if c > 0 {
            return true;
        }
        if c < 0 {
            return false;
        }
    }
    false
}

/// Positive rationals `d_i` with `d_i cartan[i][j] = d_j cartan[j][i]`,
/// normalized to minimum 1 on each connected component.
fn symmetrizer(cartan: &[Vec<i64>]) -> Result<Vec<Rat>, RootSystemError> {
    let n = cartan.len();
    let mut d: Vec<Option<Rat>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        let mut component = vec![start];
        d[start] = Some(rat_int(1));
        let mut head = 0;
        while head < component.len() {
            let i = component[head];
            head += 1;
            for j in 0..n {
                if i == j || cartan[i][j] == 0 {
                    continue;
                }
                let dj = d[i].clone().unwrap() * rat_int(cartan[i][j]) / rat_int(cartan[j][i]);
                match &d[j] {
                    None => {
                        d[j] = Some(dj);
                        component.push(j);
                    }
                    Some(existing) => {
                        if *existing != dj {
                            return Err(RootSystemError::InvalidCartan(
                                "not symmetrizable".into(),
                            ));
                        }
                    }
                }
            }
        }
        let min = component
            .iter()
            .map(|&i| d[i].clone().unwrap())
            .min()
            .unwrap();
        for &i in &component {
            let v = d[i].clone().unwrap() / &min;
            d[i] = Some(v);
        }
    }
    Ok(d.into_iter().map(|x| x.unwrap()).collect())
}

fn simple_type_cartan(name: &str) -> Result<Vec<Vec<i64>>, RootSystemError> {
    let err = || RootSystemError::UnknownType(name.to_string());
    if name.len() < 2 {
        return Err(err());
    }
    let letter = name.chars().next().unwrap().to_ascii_uppercase();
    let n: usize = name[1..].parse().map_err(|_| err())?;
    let chain = |n: usize| -> Vec<Vec<i64>> {
        let mut m = vec![vec![0i64; n]; n];
        for i in 0..n {
            m[i][i] = 2;
            if i + 1 < n {
                m[i][i + 1] = -1;
                m[i + 1][i] = -1;
            }
        }
        m
    };
    match (letter, n) {
        ('A', n) if n >= 1 => Ok(chain(n)),
        ('B', n) if n >= 2 => {
            // alpha_n short: <alpha_{n-1}_check, alpha_n> = -1, <alpha_n_check, alpha_{n-1}> = -2
            let mut m = chain(n);
            m[n - 1][n - 2] = -2;
            m[n - 2][n - 1] = -1;
            Ok(m)
        }
        ('C', n) if n >= 2 => {
            let mut m = chain(n);
            m[n - 1][n - 2] = -1;
            m[n - 2][n - 1] = -2;
            Ok(m)
        }
        ('D', n) if n >= 3 => {
            let mut m = chain(n - 1);
            for row in m.iter_mut() {
                row.push(0);
            }
            m.push(vec![0; n]);
            m[n - 1][n - 1] = 2;
            // The fork: alpha_n attaches to alpha_{n-2}.
            m[n - 1][n - 3] = -1;
            m[n - 3][n - 1] = -1;
            Ok(m)
        }
        ('E', n) if (6..=8).contains(&n) => {
            // Bourbaki labeling: node 2 attaches to node 4 of the chain 1-3-4-5-...
            let chain_len = n - 1;
            let mut m = chain(chain_len);
            for row in m.iter_mut() {
                row.push(0);
            }
            m.push(vec![0; n]);
            m[n - 1][n - 1] = 2;
            m[n - 1][2] = -1;
            m[2][n - 1] = -1;
            Ok(m)
        }
        ('F', 4) => Ok(vec![
            vec![2, -1, 0, 0],
            vec![-1, 2, -1, 0],
            vec![0, -2, 2, -1],
            vec![0, 0, -1, 2],
        ]),
        ('G', 2) => Ok(vec![vec![2, -1], vec![-3, 2]]),
        _ => Err(err()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_counts_by_type() {
        for (name, count) in [
            ("A1", 2),
            ("A2", 6),
            ("A3", 12),
            ("A4", 20),
            ("B2", 8),
            ("B3", 18),
            ("C3", 18),
            ("D4", 24),
            ("G2", 12),
            ("F4", 48),
            ("A1xA1", 4),
            ("A2xA1", 8),
        ] {
            let rs = RootSystem::from_type(name).unwrap();
            assert_eq!(rs.num_roots(), count, "type {name}");
            assert_eq!(rs.num_positive() * 2, count);
        }
    }

    #[test]
    fn simple_roots_are_standard_basis() {
        let rs = RootSystem::from_type("B2").unwrap();
        for i in 0..2 {
            let k = rs.simple_index(i);
            assert!(rs.is_positive(k));
            assert_eq!(rs.height(k), 1);
        }
    }

    #[test]
    fn closure_under_negation_and_reflection() {
        let rs = RootSystem::from_type("G2").unwrap();
        for k in 0..rs.num_roots() {
            let neg = rs.negative_of(k);
            let sum: Vec<i64> = rs.root(k).iter().zip(rs.root(neg)).map(|(a, b)| a + b).collect();
            assert!(sum.iter().all(|&c| c == 0));
        }
    }

    #[test]
    fn weyl_group_orders() {
        for (name, order) in [("A1", 2), ("A2", 6), ("B2", 8), ("G2", 12), ("A3", 24)] {
            let rs = RootSystem::from_type(name).unwrap();
            assert_eq!(rs.weyl_group(4000).unwrap().len(), order, "type {name}");
        }
    }

    #[test]
    fn pairing_is_cartan_on_simples() {
        let rs = RootSystem::from_type("G2").unwrap();
        for i in 0..2 {
            for j in 0..2 {
                let vi = rs.root(rs.simple_index(i)).to_vec();
                let vj = rs.root(rs.simple_index(j)).to_vec();
                assert_eq!(rs.pairing(&vj, &vi), rs.cartan()[i][j]);
            }
        }
    }

    #[test]
    fn rejects_bad_cartan() {
        assert!(RootSystem::from_cartan(vec![vec![2, 1], vec![1, 2]]).is_err());
        assert!(RootSystem::from_cartan(vec![vec![2, -1], vec![0, 2]]).is_err());
        // Affine A1 tilde: not finite.
        assert!(matches!(
            RootSystem::from_cartan(vec![vec![2, -2], vec![-2, 2]]),
            Err(RootSystemError::NotFiniteType(_))
        ));
    }

    #[test]
    fn unknown_type_strings() {
        assert!(RootSystem::from_type("Z9").is_err());
        assert!(RootSystem::from_type("B1").is_err());
        assert!(RootSystem::from_type("E9").is_err());
    }
}
