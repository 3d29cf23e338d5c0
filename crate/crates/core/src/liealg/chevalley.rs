//! Chevalley bases: integer structure constants for a semisimple Lie algebra
//! built from its root system.
//!
//! Basis order: coroots `h_1..h_l` for the simple roots, then one root vector
//! `e_gamma` per root in the root list order. Signs are fixed by choosing
//! `N = +(p+1)` on the extraspecial pairs for the (height, lex) order on
//! positive roots; every other constant follows from the Jacobi identity and
//! the standard reduction rules. The construction checks antisymmetry,
//! `|N| = p+1` on all root pairs, and the Jacobi identity before returning.

use super::roots::{RootSystem, RootSystemError};
use crate::exact::{rat_int, QMatrix, Rat};
use num::{One, Zero};
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error(transparent)]
    Roots(#[from] RootSystemError),
    #[error("structure constant consistency failure: {0}")]
    SignConsistency(String),
    #[error("element has length {0}, algebra dimension is {1}")]
    BadElement(usize, usize),
}

/// Sparse bracket value: coefficients against the basis.
pub type SparseVec = Vec<(usize, i64)>;

/// A semisimple Lie algebra over the rationals with integer structure
/// constants in a Chevalley basis.
#[derive(Debug, Clone)]
pub struct ChevalleyAlgebra {
    rs: RootSystem,
    dim: usize,
    /// table[i][j] = [b_i, b_j] as a sparse vector.
    table: Vec<Vec<SparseVec>>,
}

/// An element of the algebra: rational coordinates against the basis.
pub type Element = Vec<Rat>;

impl ChevalleyAlgebra {
    pub fn new(rs: RootSystem) -> Result<Self, AlgebraError> {
        let l = rs.rank();
        let dim = l + rs.num_roots();
        let consts = RootConstants::build(&rs)?;

        let mut table: Vec<Vec<SparseVec>> = vec![vec![Vec::new(); dim]; dim];
        // [h_i, h_j] = 0; [h_i, e_gamma] = <gamma, alpha_i_check> e_gamma.
        for i in 0..l {
            for k in 0..rs.num_roots() {
                let pairing: i64 = (0..l).map(|j| rs.cartan()[i][j] * rs.root(k)[j]).sum();
                if pairing != 0 {
                    table[i][l + k] = vec![(l + k, pairing)];
                    table[l + k][i] = vec![(l + k, -pairing)];
                }
            }
        }
        for a in 0..rs.num_roots() {
            for b in 0..rs.num_roots() {
                if b == rs.negative_of(a) {
                    // [e_gamma, e_{-gamma}] = h_gamma (coroot of gamma).
                    if rs.is_positive(a) {
                        table[l + a][l + b] = consts.coroot(&rs, a);
                    } else {
                        table[l + a][l + b] = negate(&consts.coroot(&rs, b));
                    }
                } else if let Some(s) = rs.sum_root(a, b) {
                    let n = consts.n_const(&rs, a, b)?;
                    table[l + a][l + b] = vec![(l + s, n)];
                }
            }
        }

        let alg = ChevalleyAlgebra { rs, dim, table };
        alg.validate(&consts)?;
        Ok(alg)
    }

    pub fn from_type(name: &str) -> Result<Self, AlgebraError> {
        Ok(Self::new(RootSystem::from_type(name)?)?)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    /// Basis index of the coroot `h_i`.
    pub fn h_index(&self, i: usize) -> usize {
        i
    }

    /// Basis index of the root vector for root-list index `k`.
    pub fn e_index(&self, k: usize) -> usize {
        self.rs.rank() + k
    }

    pub fn basis_element(&self, idx: usize) -> Element {
        let mut v = vec![Rat::zero(); self.dim];
        v[idx] = Rat::one();
        v
    }

    pub fn zero_element(&self) -> Element {
        vec![Rat::zero(); self.dim]
    }

    /// Structure constants `[b_i, b_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i][j]
    }

    pub fn bracket(&self, x: &Element, y: &Element) -> Result<Element, AlgebraError> {
        if x.len() != self.dim {
            return Err(AlgebraError::BadElement(x.len(), self.dim));
        }
        if y.len() != self.dim {
            return Err(AlgebraError::BadElement(y.len(), self.dim));
        }
        let mut out = self.zero_element();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                for &(k, v) in &self.table[i][j] {
                    out[k] = &out[k] + &c * rat_int(v);
                }
            }
        }
        Ok(out)
    }

    /// Matrix of `y -> [x, y]` in the basis.
    pub fn ad(&self, x: &Element) -> Result<QMatrix, AlgebraError> {
        if x.len() != self.dim {
            return Err(AlgebraError::BadElement(x.len(), self.dim));
        }
        let mut m = QMatrix::zero(self.dim, self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..self.dim {
                for &(k, v) in &self.table[i][j] {
                    let cur = m.get(k, j) + xi * rat_int(v);
                    m.set(k, j, cur);
                }
            }
        }
        Ok(m)
    }

    /// Killing form values on basis pairs: `tr(ad b_i ad b_j)`. Integer.
    pub fn killing_basis(&self, i: usize, j: usize) -> i64 {
        let mut acc = 0i64;
        for k in 0..self.dim {
            // (ad b_i ad b_j)(b_k): first [b_j, b_k], then [b_i, .], take b_k coord.
            for &(m, c1) in &self.table[j][k] {
                for &(k2, c2) in &self.table[i][m] {
                    if k2 == k {
                        acc += c1 * c2;
                    }
                }
            }
        }
        acc
    }

    pub fn killing(&self, x: &Element, y: &Element) -> Result<Rat, AlgebraError> {
        if x.len() != self.dim || y.len() != self.dim {
            return Err(AlgebraError::BadElement(x.len().max(y.len()), self.dim));
        }
        let mut acc = Rat::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let k = self.killing_basis(i, j);
                if k != 0 {
                    acc = acc + xi * yj * rat_int(k);
                }
            }
        }
        Ok(acc)
    }

    /// A Cartan element from coroot coordinates `H = sum x_i h_i`.
    pub fn cartan_element(&self, coords: &[Rat]) -> Element {
        let mut v = self.zero_element();
        for (i, x) in coords.iter().enumerate() {
            v[i] = x.clone();
        }
        v
    }

    fn validate(&self, consts: &RootConstants) -> Result<(), AlgebraError> {
        let l = self.rs.rank();
        // |N| = p + 1 on all root pairs whose sum is a root.
        for a in 0..self.rs.num_roots() {
            for b in 0..self.rs.num_roots() {
                if self.rs.sum_root(a, b).is_some() {
                    let n = consts.n_const(&self.rs, a, b)?;
                    let p = self.rs.string_down(a, b);
                    if n.unsigned_abs() as u32 != p + 1 {
                        return Err(AlgebraError::SignConsistency(format!(
                            "|N| = {} but p+1 = {} for roots {:?}, {:?}",
                            n.abs(),
                            p + 1,
                            self.rs.root(a),
                            self.rs.root(b)
                        )));
                    }
                }
            }
        }
        // Antisymmetry.
        for i in 0..self.dim {
            for j in 0..self.dim {
                let mut sum: HashMap<usize, i64> = HashMap::new();
                for &(k, v) in &self.table[i][j] {
                    *sum.entry(k).or_insert(0) += v;
                }
                for &(k, v) in &self.table[j][i] {
                    *sum.entry(k).or_insert(0) += v;
                }
                if sum.values().any(|&v| v != 0) {
                    return Err(AlgebraError::SignConsistency(format!(
                        "bracket not antisymmetric at ({i},{j})"
                    )));
                }
            }
        }
        // Jacobi identity, exhaustively at desk scale, on a deterministic
        // stride of triples for large algebras.
        let stride = if self.dim <= 64 { 1 } else { 7 };
        let mut idx = 0usize;
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                for k in (j + 1)..self.dim {
                    idx += 1;
                    if idx % stride != 0 {
                        continue;
                    }
                    if !self.jacobi_holds(i, j, k) {
                        return Err(AlgebraError::SignConsistency(format!(
                            "Jacobi identity fails on basis triple ({i},{j},{k})"
                        )));
                    }
                }
            }
        }
        let _ = l;
        Ok(())
    }

    /// `[[b_i,b_j],b_k] + [[b_j,b_k],b_i] + [[b_k,b_i],b_j] = 0`.
    pub fn jacobi_holds(&self, i: usize, j: usize, k: usize) -> bool {
        let mut acc: HashMap<usize, i64> = HashMap::new();
        let add = |first: &SparseVec, other: usize, acc: &mut HashMap<usize, i64>, sign: i64| {
            for &(m, c) in first {
                for &(t, c2) in &self.table[m][other] {
                    *acc.entry(t).or_insert(0) += sign * c * c2;
                }
            }
        };
        add(&self.table[i][j].clone(), k, &mut acc, 1);
        add(&self.table[j][k].clone(), i, &mut acc, 1);
        add(&self.table[k][i].clone(), j, &mut acc, 1);
        acc.values().all(|&v| v == 0)
    }
}

fn negate(v: &SparseVec) -> SparseVec {
    v.iter().map(|&(k, c)| (k, -c)).collect()
}

/// Structure constants on root-vector pairs.
struct RootConstants {
    /// N for special pairs of positive roots (a < b in root order, a+b a root),
    /// keyed by (a, b) root indices.
    special: HashMap<(usize, usize), i64>,
}

impl RootConstants {
    fn build(rs: &RootSystem) -> Result<Self, AlgebraError> {
        let mut consts = RootConstants {
            special: HashMap::new(),
        };
        // Positive roots in list order are sorted by height then lex, so
        // walking them in order is an induction on height.
        for gamma in 0..rs.num_positive() {
            if rs.height(gamma) < 2 {
                continue;
            }
            // Extraspecial pair: minimal first element.
            let mut pairs: Vec<(usize, usize)> = Vec::new();
            for a in 0..rs.num_positive() {
                let diff: Vec<i64> = rs
                    .root(gamma)
                    .iter()
                    .zip(rs.root(a))
                    .map(|(g, x)| g - x)
                    .collect();
                if let Some(b) = rs.root_index(&diff) {
                    if rs.is_positive(b) && a <= b {
                        pairs.push((a, b));
                    }
                }
            }
            debug_assert!(!pairs.is_empty(), "no special pair for a non-simple root");
            let (a1, b1) = pairs[0];
            let p = rs.string_down(a1, b1);
            consts.special.insert((a1, b1), (p + 1) as i64);
            for &(a, b) in &pairs[1..] {
                let n = consts.derive_special(rs, gamma, a1, a, b)?;
                consts.special.insert((a, b), n);
            }
        }
        Ok(consts)
    }

    /// Jacobi identity on (e_{-a1}, e_a, e_b) determines N_{a,b} from data of
    /// strictly smaller height plus the extraspecial base for this sum.
    fn derive_special(
        &self,
        rs: &RootSystem,
        gamma: usize,
        a1: usize,
        a: usize,
        b: usize,
    ) -> Result<i64, AlgebraError> {
        let neg_a1 = rs.negative_of(a1);
        let mut rhs = Rat::zero();
        // [[e_{-a1}, e_a], e_b]
        if let Some(a_minus) = rs.sum_root(neg_a1, a) {
            let n1 = self.n_const(rs, neg_a1, a)?;
            let n2 = self.n_const(rs, a_minus, b)?;
            rhs = rhs + rat_int(n1 * n2);
        }
        // [[e_b, e_{-a1}], e_a]
        if let Some(b_minus) = rs.sum_root(b, neg_a1) {
            let n1 = self.n_const(rs, b, neg_a1)?;
            let n2 = self.n_const(rs, b_minus, a)?;
            rhs = rhs + rat_int(n1 * n2);
        }
        let denom = self.n_const(rs, gamma, neg_a1)?;
        debug_assert!(denom != 0, "gamma - alpha1 = beta1 is always a root");
        let n = -rhs / rat_int(denom);
        if !n.denom().is_one() {
            return Err(AlgebraError::SignConsistency(format!(
                "non-integer constant for roots {:?} + {:?}",
                rs.root(a),
                rs.root(b)
            )));
        }
        Ok(i64::try_from(n.numer()).expect("constant fits i64"))
    }

    /// Coroot of a positive root as integer coordinates in the simple coroots.
    fn coroot(&self, rs: &RootSystem, k: usize) -> SparseVec {
        let gamma = rs.root(k);
        let d_gamma = rs.inner(gamma, gamma) / rat_int(2);
        let mut out = Vec::new();
        for (i, &c) in gamma.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mut simple = vec![0i64; rs.rank()];
            simple[i] = 1;
            let d_i = rs.inner(&simple, &simple) / rat_int(2);
            let coeff = rat_int(c) * d_i / &d_gamma;
            debug_assert!(coeff.denom().is_one(), "coroot coefficients are integers");
            out.push((i, i64::try_from(coeff.numer()).expect("fits i64")));
        }
        out
    }

    /// `N_{x,y}` for arbitrary root indices with `x + y` a root.
    fn n_const(&self, rs: &RootSystem, x: usize, y: usize) -> Result<i64, AlgebraError> {
        let xp = rs.is_positive(x);
        let yp = rs.is_positive(y);
        match (xp, yp) {
            (true, true) => {
                let n = if x <= y {
                    *self.special.get(&(x, y)).ok_or_else(|| {
                        AlgebraError::SignConsistency("missing special pair".into())
                    })?
                } else {
                    -*self.special.get(&(y, x)).ok_or_else(|| {
                        AlgebraError::SignConsistency("missing special pair".into())
                    })?
                };
                Ok(n)
            }
            (false, false) => Ok(-self.n_const(rs, rs.negative_of(x), rs.negative_of(y))?),
            (true, false) => {
                let sum = rs.sum_root(x, y).expect("sum is a root");
                if rs.is_positive(sum) {
                    // x + y + z = 0 with z = -(x+y):
                    // N_{x,y} = ((z,z)/(x,x)) N_{y,z} and both y, z are negative.
                    let ny_z = -self.n_const(rs, rs.negative_of(y), sum)?;
                    let ratio = rs.inner(rs.root(sum), rs.root(sum))
                        / rs.inner(rs.root(x), rs.root(x));
                    let n = rat_int(ny_z) * ratio;
                    if !n.denom().is_one() {
                        return Err(AlgebraError::SignConsistency(
                            "non-integer mixed constant".into(),
                        ));
                    }
                    Ok(i64::try_from(n.numer()).expect("fits i64"))
                } else {
                    // N_{x,y} = N_{-y,-x} with -y positive, -x negative,
                    // and -y + -x = -(x+y) positive.
                    self.n_const(rs, rs.negative_of(y), rs.negative_of(x))
                }
            }
            (false, true) => Ok(-self.n_const(rs, y, x)?),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_int;

    fn sl2() -> ChevalleyAlgebra {
        ChevalleyAlgebra::from_type("A1").unwrap()
    }

    #[test]
    fn sl2_defining_relations() {
        let g = sl2();
        assert_eq!(g.dim(), 3);
        let h = g.basis_element(0);
        let e = g.basis_element(1);
        let f = g.basis_element(2);
        assert_eq!(g.bracket(&h, &e).unwrap(), scale(&e, 2));
        assert_eq!(g.bracket(&h, &f).unwrap(), scale(&f, -2));
        assert_eq!(g.bracket(&e, &f).unwrap(), h);
    }

    fn scale(v: &Element, c: i64) -> Element {
        v.iter().map(|x| x * rat_int(c)).collect()
    }

    #[test]
    fn sl2_killing_form() {
        let g = sl2();
        let h = g.basis_element(0);
        let e = g.basis_element(1);
        let f = g.basis_element(2);
        assert_eq!(g.killing(&h, &h).unwrap(), rat_int(8));
        assert_eq!(g.killing(&e, &f).unwrap(), rat_int(4));
        assert_eq!(g.killing(&e, &e).unwrap(), rat_int(0));
    }

    #[test]
    fn dimensions_and_validation_through_rank_three() {
        for (name, dim) in [
            ("A1", 3),
            ("A2", 8),
            ("A3", 15),
            ("B2", 10),
            ("B3", 21),
            ("C3", 21),
            ("G2", 14),
        ] {
            let g = ChevalleyAlgebra::from_type(name).unwrap();
            assert_eq!(g.dim(), dim, "type {name}");
        }
    }

    #[test]
    fn jacobi_exhaustive_small_ranks() {
        for name in ["A1", "A2", "B2", "G2", "A3", "B3", "C3"] {
            let g = ChevalleyAlgebra::from_type(name).unwrap();
            for i in 0..g.dim() {
                for j in 0..g.dim() {
                    for k in 0..g.dim() {
                        assert!(g.jacobi_holds(i, j, k), "{name} triple ({i},{j},{k})");
                    }
                }
            }
        }
    }

    #[test]
    fn ad_of_zero_and_h() {
        let g = sl2();
        let zero = g.zero_element();
        let m = g.ad(&zero).unwrap();
        assert_eq!(m, QMatrix::zero(3, 3));
        // ad(h) is diagonal (0, 2, -2) in basis (h, e, f).
        let h = g.basis_element(0);
        let m = g.ad(&h).unwrap();
        assert_eq!(*m.get(1, 1), rat_int(2));
        assert_eq!(*m.get(2, 2), rat_int(-2));
        assert_eq!(*m.get(0, 0), rat_int(0));
    }

    #[test]
    fn ad_e_is_nilpotent_of_order_three() {
        let g = sl2();
        let e = g.basis_element(1);
        let m = g.ad(&e).unwrap();
        let m2 = m.mul(&m).unwrap();
        let m3 = m2.mul(&m).unwrap();
        assert_ne!(m2, QMatrix::zero(3, 3));
        assert_eq!(m3, QMatrix::zero(3, 3));
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn killing_invariance_spot() {
        let g = ChevalleyAlgebra::from_type("A2").unwrap();
        let x = g.basis_element(3);
        let y = g.basis_element(0);
        let z = g.basis_element(6);
        let lhs = g.killing(&g.bracket(&x, &y).unwrap(), &z).unwrap();
        let rhs = -g.killing(&y, &g.bracket(&x, &z).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }
}
