//! Quasi-b-function polynomials for weighted Euler fields, with explicit
//! left-ideal membership certificates, plus the tameness predicates that
//! consume (roots, trace, codimension) data.
//!
//! For a weight vector `n = (n_1..n_d)` and the field `eta = sum n_i t_i D_i`,
//! the polynomial
//!
//! ```text
//! b_N(T) = prod_{k=0}^{N-1} prod_{a in A_k} (T + |n| + a),
//! A_k = { <n, alpha> : |alpha| = k }
//! ```
//!
//! satisfies: `b_N(eta)` lies in the left ideal generated by the monomials
//! `t^alpha` with `|alpha| = N`. The certificate below realizes that
//! membership as an explicit decomposition `b_N(eta) = sum C_alpha t^alpha`
//! and re-expands it exactly before returning.

use crate::exact::{rat_int, Rat};
use crate::weyl::{euler_field, WeightVector, WeylElement, WeylError};
use num::{One, Zero};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum QuasibError {
    #[error("weights must be positive integers; call WeightVector::normalized first")]
    NonIntegerWeights,
    #[error("N must be >= 1")]
    ZeroN,
    #[error("certificate verification failed for weights {weights:?}, N = {n}: {detail}")]
    VerificationFailed {
        weights: Vec<String>,
        n: u32,
        detail: String,
    },
    #[error(transparent)]
    Weyl(#[from] WeylError),
}

/// Monic polynomial in one variable given by its root multiset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BPoly {
    roots: BTreeMap<Rat, u32>,
}

impl BPoly {
    pub fn one() -> Self {
        BPoly {
            roots: BTreeMap::new(),
        }
    }

    pub fn from_roots(roots: impl IntoIterator<Item = Rat>) -> Self {
        let mut b = Self::one();
        for r in roots {
            b.add_root(r, 1);
        }
        b
    }

    pub fn add_root(&mut self, root: Rat, multiplicity: u32) {
        assert!(multiplicity >= 1);
        *self.roots.entry(root).or_insert(0) += multiplicity;
    }

    pub fn degree(&self) -> u32 {
        self.roots.values().sum()
    }

    /// Distinct roots ascending, with multiplicities.
    pub fn roots(&self) -> impl Iterator<Item = (&Rat, u32)> {
        self.roots.iter().map(|(r, &m)| (r, m))
    }

    pub fn min_root(&self) -> Option<&Rat> {
        self.roots.keys().next()
    }

    pub fn max_root(&self) -> Option<&Rat> {
        self.roots.keys().next_back()
    }

    /// True if every root of `self` occurs in `other` with at least the same
    /// multiplicity.
    pub fn divides(&self, other: &BPoly) -> bool {
        self.roots
            .iter()
            .all(|(r, &m)| other.roots.get(r).is_some_and(|&m2| m2 >= m))
    }

    pub fn eval(&self, t: &Rat) -> Rat {
        let mut acc = Rat::one();
        for (r, &m) in &self.roots {
            for _ in 0..m {
                acc = acc * (t - r);
            }
        }
        acc
    }

    /// Substitutes a Weyl-algebra element for the variable: `prod (op - r)`.
    pub fn eval_at(&self, op: &WeylElement) -> Result<WeylElement, WeylError> {
        let mut acc = WeylElement::one(op.dim());
        for (r, &m) in &self.roots {
            let factor = op.sub(&WeylElement::constant(op.dim(), r.clone()))?;
            for _ in 0..m {
                acc = acc.multiply(&factor)?;
            }
        }
        Ok(acc)
    }
}

/// The set `A_N = { <n, alpha> : |alpha| = N }` over fiber multi-indices.
pub fn weight_sums(w: &WeightVector, n: u32) -> BTreeSet<Rat> {
    let d = w.fiber_count();
    let mut out = BTreeSet::new();
    if d == 0 {
        if n == 0 {
            out.insert(Rat::zero());
        }
        return out;
    }
    // Enumerate compositions of n into d parts.
    let mut alpha = vec![0u32; d];
    alpha[0] = n;
    loop {
        let mut s = Rat::zero();
        for (i, &a) in alpha.iter().enumerate() {
            if a > 0 {
                s = s + &w.fiber_weights()[i] * rat_int(a as i64);
            }
        }
        out.insert(s);
        // Next composition in colex order.
        if alpha[d - 1] == n {
            break;
        }
        let mut i = d - 2;
        while alpha[i] == 0 {
            if i == 0 {
                break;
            }
            i -= 1;
        }
        if alpha[i] == 0 {
            break;
        }
        alpha[i] -= 1;
        let rest: u32 = alpha[i + 1..].iter().sum();
        alpha[i + 1] = rest + 1;
        for a in alpha[i + 2..].iter_mut() {
            *a = 0;
        }
    }
    out
}

/// The polynomial `b_N` as a root multiset `{ -|n| - a : a in A_k, 0 <= k < N }`.
pub fn b_n_poly(w: &WeightVector, n: u32) -> BPoly {
    assert!(n >= 1, "N must be >= 1");
    let total = w.trace();
    let mut b = BPoly::one();
    for k in 0..n {
        for a in weight_sums(w, k) {
            b.add_root(-(&total + a), 1);
        }
    }
    b
}

/// Quasi-b-function certified along a vanishing order: `b_{(M-1)d + 1}`.
pub fn support_bpoly(w: &WeightVector, annihilation_exponent: u32) -> BPoly {
    assert!(annihilation_exponent >= 1, "M must be >= 1");
    let d = w.fiber_count() as u32;
    b_n_poly(w, (annihilation_exponent - 1) * d + 1)
}

/// An explicit decomposition `b_N(eta) = sum C_alpha t^alpha` over `|alpha| = N`.
#[derive(Debug, Clone)]
pub struct MembershipCertificate {
    weights: WeightVector,
    n: u32,
    decomposition: Vec<(WeylElement, Vec<u32>)>,
}

impl MembershipCertificate {
    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn decomposition(&self) -> &[(WeylElement, Vec<u32>)] {
        &self.decomposition
    }

    /// Re-expands `sum C_alpha t^alpha` in normal order.
    pub fn expand(&self) -> Result<WeylElement, WeylError> {
        let dim = self.weights.dim();
        let base = self.weights.base_count();
        let mut acc = WeylElement::zero(dim);
        for (coeff, alpha) in &self.decomposition {
            let mut full_alpha = vec![0u32; dim];
            for (k, &a) in alpha.iter().enumerate() {
                full_alpha[base + k] = a;
            }
            let t_alpha = WeylElement::monomial(dim, full_alpha, vec![0; dim], Rat::one());
            acc = acc.add(&coeff.multiply(&t_alpha)?)?;
        }
        Ok(acc)
    }
}

/// Builds the membership certificate for `b_N(eta)` by the inductive scheme:
/// the base case is `b_1(eta) = sum n_i D_i t_i`, and each step multiplies
/// every coefficient through the shifted next factor block and re-expands.
///
/// The certificate is verified exactly against `b_N` evaluated at the Euler
/// field before being returned; a verification failure indicates an
/// implementation bug, never a property of the input.
pub fn certify_membership(
    w: &WeightVector,
    n: u32,
) -> Result<MembershipCertificate, QuasibError> {
    if n == 0 {
        return Err(QuasibError::ZeroN);
    }
    if w.fiber_weights().iter().any(|x| !x.denom().is_one()) {
        return Err(QuasibError::NonIntegerWeights);
    }
    let dim = w.dim();
    let base = w.base_count();
    let d = w.fiber_count();
    let total = w.trace();
    let eta = euler_field(w);

    let weyl_const = |c: &Rat| WeylElement::constant(dim, c.clone());

    // Base case: b_1(eta) = eta + |n| = sum n_i D_i t_i.
    let mut decomposition: BTreeMap<Vec<u32>, WeylElement> = BTreeMap::new();
    for i in 0..d {
        let mut alpha = vec![0u32; d];
        alpha[i] = 1;
        let coeff = WeylElement::derivation(dim, base + i).scale(&w.fiber_weights()[i]);
        decomposition.insert(alpha, coeff);
    }

    for level in 1..n {
        let a_level = weight_sums(w, level);
        let mut next: BTreeMap<Vec<u32>, WeylElement> = BTreeMap::new();
        for (alpha, coeff) in &decomposition {
            let shift: Rat = alpha
                .iter()
                .enumerate()
                .fold(Rat::zero(), |acc, (i, &a)| {
                    acc + &w.fiber_weights()[i] * rat_int(a as i64)
                });
            // c_alpha(eta) = prod over the other block roots of
            // (eta - <alpha, n> + |n| + a).
            let mut cofactor = WeylElement::one(dim);
            for a in &a_level {
                if *a == shift {
                    continue;
                }
                let factor = eta
                    .sub(&weyl_const(&shift))
                    .and_then(|x| x.add(&weyl_const(&(&total + a))))?;
                cofactor = cofactor.multiply(&factor)?;
            }
            let lead = coeff.multiply(&cofactor)?;
            for i in 0..d {
                let contribution = lead.multiply(
                    &WeylElement::derivation(dim, base + i).scale(&w.fiber_weights()[i]),
                )?;
                let mut next_alpha = alpha.clone();
                next_alpha[i] += 1;
                match next.get_mut(&next_alpha) {
                    Some(existing) => {
                        *existing = existing.add(&contribution)?;
                    }
                    None => {
                        next.insert(next_alpha, contribution);
                    }
                }
            }
        }
        decomposition = next;
    }

    let cert = MembershipCertificate {
        weights: w.clone(),
        n,
        decomposition: decomposition
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(alpha, c)| (c, alpha))
            .collect(),
    };

    // Fail fast: the expansion must equal b_N(eta) term for term.
    let expanded = cert.expand()?;
    let expected = b_n_poly(w, n).eval_at(&eta)?;
    if expanded != expected {
        let diff = expanded.sub(&expected)?;
        return Err(QuasibError::VerificationFailed {
            weights: w
                .fiber_weights()
                .iter()
                .map(crate::exact::format_rat)
                .collect(),
            n,
            detail: format!("expansion differs by {}", diff.to_text(base)),
        });
    }
    Ok(cert)
}

/// Input data for the tameness predicates: root bounds of a quasi-b-function
/// along a stratum, the trace of the positive vector field, and the stratum
/// codimension, plus the two structural flags the caller must supply.
#[derive(Debug, Clone)]
pub struct TameVerdictInput {
    pub roots: Vec<Rat>,
    pub trace: Rat,
    pub codim: usize,
    /// Singular support is conic for the vector field.
    pub conic: bool,
    /// The conormal fiber escapes the characteristic variety.
    pub conormal_escape: bool,
}

/// True iff the stratum is open, or every root is strictly greater than
/// `-trace / delta`.
pub fn delta_tame_along(v: &TameVerdictInput, delta: &Rat) -> bool {
    assert!(delta > &Rat::zero(), "delta must be positive");
    if v.codim == 0 {
        return true;
    }
    let bound = -(&v.trace / delta);
    v.roots.iter().all(|r| *r > bound)
}

/// True iff tame at `delta = 1`, or the conormal-escape condition holds.
pub fn weak_tame_along(v: &TameVerdictInput) -> bool {
    delta_tame_along(v, &Rat::one()) || v.conormal_escape
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn w(ints: &[i64]) -> WeightVector {
        WeightVector::from_integers(ints).unwrap()
    }

    #[test]
    fn weight_sums_examples() {
        let s = weight_sums(&w(&[1, 1]), 2);
        assert_eq!(s.into_iter().collect::<Vec<_>>(), vec![rat_int(2)]);
        let s = weight_sums(&w(&[1, 2]), 2);
        assert_eq!(
            s.into_iter().collect::<Vec<_>>(),
            vec![rat_int(2), rat_int(3), rat_int(4)]
        );
        let s = weight_sums(&w(&[5, 7]), 0);
        assert_eq!(s.into_iter().collect::<Vec<_>>(), vec![rat_int(0)]);
    }

    #[test]
    fn b_n_euler_weights_is_rising_factorial() {
        // all weights 1: b_N(T) = (T+d)(T+d+1)...(T+d+N-1)
        for d in 1..=3i64 {
            for n in 1..=4u32 {
                let b = b_n_poly(&w(&vec![1; d as usize]), n);
                let expected =
                    BPoly::from_roots((0..n as i64).map(|k| rat_int(-d - k)));
                assert_eq!(b, expected);
            }
        }
    }

    #[test]
    fn b_1_is_linear_with_root_minus_trace() {
        let b = b_n_poly(&w(&[3, 5]), 1);
        assert_eq!(b.degree(), 1);
        assert_eq!(b.min_root(), Some(&rat_int(-8)));
    }

    #[test]
    fn b_2_weights_1_2() {
        // A_0 = {0}, A_1 = {1, 2}: roots -3, -4, -5
        let b = b_n_poly(&w(&[1, 2]), 2);
        let expected = BPoly::from_roots(vec![rat_int(-3), rat_int(-4), rat_int(-5)]);
        assert_eq!(b, expected);
    }

    #[test]
    fn certificate_base_case_single_variable() {
        let cert = certify_membership(&w(&[1]), 1).unwrap();
        assert_eq!(cert.decomposition().len(), 1);
        let (coeff, alpha) = &cert.decomposition()[0];
        assert_eq!(alpha, &vec![1]);
        assert_eq!(coeff, &WeylElement::derivation(1, 0));
    }

    #[test]
    fn certificate_base_case_two_variables() {
        let cert = certify_membership(&w(&[1, 1]), 1).unwrap();
        assert_eq!(cert.decomposition().len(), 2);
        assert_eq!(cert.decomposition()[0].1, vec![0, 1]);
        assert_eq!(cert.decomposition()[0].0, WeylElement::derivation(2, 1));
        assert_eq!(cert.decomposition()[1].1, vec![1, 0]);
        assert_eq!(cert.decomposition()[1].0, WeylElement::derivation(2, 0));
    }

    #[test]
    fn certificate_n2_expands_to_shifted_product() {
        let wv = w(&[1]);
        let cert = certify_membership(&wv, 2).unwrap();
        // (eta+1)(eta+2) = t1^2 D1^2 + 4 t1 D1 + 2
        let mut expected = WeylElement::monomial(1, vec![2], vec![2], rat_int(1));
        expected = expected
            .add(&WeylElement::monomial(1, vec![1], vec![1], rat_int(4)))
            .unwrap();
        expected = expected
            .add(&WeylElement::constant(1, rat_int(2)))
            .unwrap();
        assert_eq!(cert.expand().unwrap(), expected);
    }

    #[test]
    fn certificate_rejects_non_integer_weights() {
        let wv = WeightVector::new(0, vec![rat(1, 2)]).unwrap();
        assert!(matches!(
            certify_membership(&wv, 1),
            Err(QuasibError::NonIntegerWeights)
        ));
    }

    #[test]
    fn support_bpoly_examples() {
        let b = support_bpoly(&w(&[1, 1]), 1);
        assert_eq!(b, BPoly::from_roots(vec![rat_int(-2)]));
        let b = support_bpoly(&w(&[1]), 3);
        assert_eq!(
            b,
            BPoly::from_roots(vec![rat_int(-1), rat_int(-2), rat_int(-3)])
        );
        let b = support_bpoly(&w(&[1, 2]), 2);
        assert!(b.max_root().unwrap() <= &rat_int(-3));
    }

    #[test]
    fn monotone_root_multisets() {
        for n in 1..=4u32 {
            let small = b_n_poly(&w(&[1, 2]), n);
            let big = b_n_poly(&w(&[1, 2]), n + 1);
            assert!(small.divides(&big));
        }
    }

    #[test]
    fn tame_predicates() {
        let base = TameVerdictInput {
            roots: vec![rat_int(-1)],
            trace: rat_int(3),
            codim: 1,
            conic: true,
            conormal_escape: false,
        };
        assert!(delta_tame_along(&base, &rat_int(1)));

        let open = TameVerdictInput {
            roots: vec![rat_int(-100)],
            trace: rat_int(1),
            codim: 0,
            conic: false,
            conormal_escape: false,
        };
        assert!(delta_tame_along(&open, &rat_int(5)));

        let boundary = TameVerdictInput {
            roots: vec![rat_int(-2)],
            trace: rat_int(2),
            codim: 2,
            conic: true,
            conormal_escape: false,
        };
        assert!(!delta_tame_along(&boundary, &rat_int(1)));
        assert!(!delta_tame_along(&boundary, &rat_int(3)));

        let escape = TameVerdictInput {
            roots: vec![rat_int(-1000)],
            trace: rat_int(1),
            codim: 4,
            conic: false,
            conormal_escape: true,
        };
        assert!(weak_tame_along(&escape));
        assert!(weak_tame_along(&TameVerdictInput {
            roots: vec![rat_int(-1)],
            trace: rat_int(2),
            codim: 1,
            conic: false,
            conormal_escape: false,
        }));
        assert!(!weak_tame_along(&TameVerdictInput {
            roots: vec![rat_int(-2)],
            trace: rat_int(2),
            codim: 1,
            conic: false,
            conormal_escape: false,
        }));
    }

    #[test]
    fn delta_tame_monotone_downward() {
        let v = TameVerdictInput {
            roots: vec![rat(-3, 2)],
            trace: rat_int(2),
            codim: 1,
            conic: true,
            conormal_escape: false,
        };
        // True at delta = 4/3 (bound -3/2 < -3/2? no: -2/(4/3) = -3/2, strict fails)
        assert!(!delta_tame_along(&v, &rat(4, 3)));
        // True at delta = 5/4: bound -8/5 < -3/2.
        assert!(delta_tame_along(&v, &rat(5, 4)));
        // Monotone: any smaller positive delta keeps it true.
        assert!(delta_tame_along(&v, &rat(1, 7)));
    }
}
