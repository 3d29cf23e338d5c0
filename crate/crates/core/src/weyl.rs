//! Normal-ordered Weyl algebra over the rationals.
//!
//! An element is a finite sum of monomials `c * t^alpha * D^beta` with all
//! position factors to the left of all derivation factors. Equality of
//! elements is literal equality of the coefficient maps, which is what makes
//! exact ideal-membership verification possible downstream.
//!
//! Coordinates split into `base_count` ungraded ones (weight 0, rendered as
//! `x<i>`) followed by graded fiber coordinates (strictly positive rational
//! weights, rendered as `t<i>`). A fiber coordinate of weight `n` has
//! filtration degree `-n` and its derivation `+n`.

use crate::exact::{format_rat, parse_rat, rat_int, Rat};
use num::{BigInt, One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WeylError {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("coordinate index {0} out of range for dimension {1}")]
    IndexOutOfRange(usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid weight vector: {0}")]
    InvalidWeights(String),
}

fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn factorial(k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=k {
        acc *= BigInt::from(i);
    }
    acc
}

/// Exponents of one normal-ordered monomial: positions, then derivations.
type Monomial = (Vec<u32>, Vec<u32>);

/// A polynomial-coefficient differential operator in normal order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    dim: usize,
    terms: BTreeMap<Monomial, Rat>,
}

impl WeylElement {
    pub fn zero(dim: usize) -> Self {
        WeylElement {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(dim: usize, c: Rat) -> Self {
        let mut el = Self::zero(dim);
        if !c.is_zero() {
            el.terms.insert((vec![0; dim], vec![0; dim]), c);
        }
        el
    }

    pub fn one(dim: usize) -> Self {
        Self::constant(dim, Rat::one())
    }

    /// The position variable with 0-based index `i`.
    pub fn position(dim: usize, i: usize) -> Self {
        assert!(i < dim, "coordinate out of range");
        let mut alpha = vec![0; dim];
        alpha[i] = 1;
        Self::monomial(dim, alpha, vec![0; dim], Rat::one())
    }

    /// The derivation with 0-based index `i`.
    pub fn derivation(dim: usize, i: usize) -> Self {
        assert!(i < dim, "coordinate out of range");
        let mut beta = vec![0; dim];
        beta[i] = 1;
        Self::monomial(dim, vec![0; dim], beta, Rat::one())
    }

    pub fn monomial(dim: usize, alpha: Vec<u32>, beta: Vec<u32>, coeff: Rat) -> Self {
        assert_eq!(alpha.len(), dim);
        assert_eq!(beta.len(), dim);
        let mut el = Self::zero(dim);
        if !coeff.is_zero() {
            el.terms.insert((alpha, beta), coeff);
        }
        el
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, alpha: &[u32], beta: &[u32]) -> Rat {
        self.terms
            .get(&(alpha.to_vec(), beta.to_vec()))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    fn insert_term(&mut self, key: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &WeylElement) -> Result<WeylElement, WeylError> {
        if self.dim != other.dim {
            return Err(WeylError::DimensionMismatch(self.dim, other.dim));
        }
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.insert_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &WeylElement) -> Result<WeylElement, WeylError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> WeylElement {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> WeylElement {
        if c.is_zero() {
            return WeylElement::zero(self.dim);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = &*v * c;
        }
        out
    }

    /// Normal-ordered product. Commuting `D^b` past `t^a` coordinate-wise via
    /// `D^b t^a = sum_k C(b,k) C(a,k) k! t^(a-k) D^(b-k)`.
    pub fn multiply(&self, other: &WeylElement) -> Result<WeylElement, WeylError> {
        if self.dim != other.dim {
            return Err(WeylError::DimensionMismatch(self.dim, other.dim));
        }
        let mut out = WeylElement::zero(self.dim);
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &other.terms {
                let coeff = c1 * c2;
                // Enumerate contraction multi-indices k <= min(b1, a2).
                let kmax: Vec<u32> = b1.iter().zip(a2).map(|(x, y)| *x.min(y)).collect();
                let mut k = vec![0u32; self.dim];
                loop {
                    let mut factor = BigInt::one();
                    for i in 0..self.dim {
                        if k[i] > 0 {
                            factor *= binomial(b1[i], k[i]) * binomial(a2[i], k[i]) * factorial(k[i]);
                        }
                    }
                    let alpha: Vec<u32> = (0..self.dim).map(|i| a1[i] + a2[i] - k[i]).collect();
                    let beta: Vec<u32> = (0..self.dim).map(|i| b1[i] + b2[i] - k[i]).collect();
                    out.insert_term((alpha, beta), &coeff * Rat::from_integer(factor));
                    // Next k in odometer order.
                    let mut i = 0;
                    loop {
                        if i == self.dim {
                            break;
                        }
                        if k[i] < kmax[i] {
                            k[i] += 1;
                            break;
                        }
                        k[i] = 0;
                        i += 1;
                    }
                    if i == self.dim {
                        break;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn commutator(&self, other: &WeylElement) -> Result<WeylElement, WeylError> {
        self.multiply(other)?.sub(&other.multiply(self)?)
    }

    pub fn pow(&self, n: u32) -> Result<WeylElement, WeylError> {
        let mut acc = WeylElement::one(self.dim);
        for _ in 0..n {
            acc = acc.multiply(self)?;
        }
        Ok(acc)
    }

    /// Order as a differential operator: the largest total derivation degree.
    /// `None` for the zero element.
    pub fn order(&self) -> Option<u32> {
        self.terms
            .keys()
            .map(|(_, beta)| beta.iter().sum())
            .max()
    }

    /// Image under the algebra isomorphism generated by `t_i -> D_i`,
    /// `D_i -> -t_i`, returned in normal order.
    pub fn fourier(&self) -> WeylElement {
        let mut out = WeylElement::zero(self.dim);
        for ((alpha, beta), c) in &self.terms {
            // t^a D^b maps to D^a (-t)^b; reorder D^a t^b term by term.
            let sign = if beta.iter().sum::<u32>() % 2 == 1 {
                -c.clone()
            } else {
                c.clone()
            };
            let kmax: Vec<u32> = alpha.iter().zip(beta).map(|(x, y)| *x.min(y)).collect();
            let mut k = vec![0u32; self.dim];
            loop {
                let mut factor = BigInt::one();
                for i in 0..self.dim {
                    if k[i] > 0 {
                        factor *= binomial(alpha[i], k[i]) * binomial(beta[i], k[i]) * factorial(k[i]);
                    }
                }
                let a: Vec<u32> = (0..self.dim).map(|i| beta[i] - k[i]).collect();
                let b: Vec<u32> = (0..self.dim).map(|i| alpha[i] - k[i]).collect();
                out.insert_term((a, b), &sign * Rat::from_integer(factor));
                let mut i = 0;
                loop {
                    if i == self.dim {
                        break;
                    }
                    if k[i] < kmax[i] {
                        k[i] += 1;
                        break;
                    }
                    k[i] = 0;
                    i += 1;
                }
                if i == self.dim {
                    break;
                }
            }
        }
        out
    }

    /// Weighted filtration degree: the maximum over terms of
    /// `sum beta_i n_i - sum alpha_i n_i` over fiber coordinates.
    /// `None` stands for negative infinity (the zero element).
    pub fn v_degree(&self, w: &WeightVector) -> Option<Rat> {
        assert_eq!(self.dim, w.dim(), "weight vector dimension mismatch");
        self.terms
            .keys()
            .map(|(alpha, beta)| {
                let mut d = Rat::zero();
                for (k, n) in w.fiber.iter().enumerate() {
                    let i = w.base_count + k;
                    d = d + n * (rat_int(beta[i] as i64) - rat_int(alpha[i] as i64));
                }
                d
            })
            .max()
    }

    /// Plain-text rendering, e.g. `3*t1^2*Dt1 - 1/2*x1*Dt2`.
    ///
    /// The first `base_count` coordinates print as `x<i>`, the rest as
    /// `t<i>`; terms are emitted in the map's lexicographic key order.
    pub fn to_text(&self, base_count: usize) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let var = |i: usize, deriv: bool| -> String {
            let (prefix, idx) = if i < base_count {
                ("x", i + 1)
            } else {
                ("t", i - base_count + 1)
            };
            if deriv {
                format!("D{}{}", prefix, idx)
            } else {
                format!("{}{}", prefix, idx)
            }
        };
        let mut out = String::new();
        for (n, ((alpha, beta), c)) in self.terms.iter().enumerate() {
            let mut parts: Vec<String> = Vec::new();
            for (i, &e) in alpha.iter().enumerate() {
                if e == 1 {
                    parts.push(var(i, false));
                } else if e > 1 {
                    parts.push(format!("{}^{}", var(i, false), e));
                }
            }
            for (i, &e) in beta.iter().enumerate() {
                if e == 1 {
                    parts.push(var(i, true));
                } else if e > 1 {
                    parts.push(format!("{}^{}", var(i, true), e));
                }
            }
            let abs = c.abs();
            let coeff_txt = format_rat(&abs);
            let body = if parts.is_empty() {
                coeff_txt
            } else if abs.is_one() {
                parts.join("*")
            } else {
                format!("{}*{}", coeff_txt, parts.join("*"))
            };
            if n == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            out.push_str(&body);
        }
        out
    }

    /// Parses the rendering grammar of [`Self::to_text`].
    pub fn parse(input: &str, dim: usize, base_count: usize) -> Result<WeylElement, WeylError> {
        let mut el = WeylElement::zero(dim);
        let s: Vec<char> = input.chars().collect();
        let mut pos = 0usize;
        let err = |msg: &str| WeylError::Parse(msg.to_string());
        let skip_ws = |pos: &mut usize| {
            while *pos < s.len() && s[*pos].is_whitespace() {
                *pos += 1;
            }
        };
        skip_ws(&mut pos);
        if pos == s.len() {
            return Err(err("empty expression"));
        }
        let mut first = true;
        while pos < s.len() {
            let mut sign = Rat::one();
            skip_ws(&mut pos);
            if !first || (pos < s.len() && (s[pos] == '+' || s[pos] == '-')) {
                if pos >= s.len() {
                    break;
                }
                match s[pos] {
                    '+' => pos += 1,
                    '-' => {
                        sign = -sign;
                        pos += 1;
                    }
                    _ if first => {}
                    _ => return Err(err("expected '+' or '-' between terms")),
                }
            }
            first = false;
            skip_ws(&mut pos);
            // One term: optional rational coefficient, then '*'-joined factors.
            let mut coeff = sign;
            let mut alpha = vec![0u32; dim];
            let mut beta = vec![0u32; dim];
            let mut saw_factor = false;
            loop {
                skip_ws(&mut pos);
                if pos >= s.len() {
                    break;
                }
                if s[pos].is_ascii_digit() {
                    let start = pos;
                    while pos < s.len() && (s[pos].is_ascii_digit() || s[pos] == '/') {
                        pos += 1;
                    }
                    let txt: String = s[start..pos].iter().collect();
                    let r = parse_rat(&txt).ok_or_else(|| err("bad rational"))?;
                    coeff = coeff * r;
                    saw_factor = true;
                } else if s[pos] == 'x' || s[pos] == 't' || s[pos] == 'D' {
                    let deriv = s[pos] == 'D';
                    if deriv {
                        pos += 1;
                        if pos >= s.len() || (s[pos] != 'x' && s[pos] != 't') {
                            return Err(err("expected 'x' or 't' after 'D'"));
                        }
                    }
                    let fiber = s[pos] == 't';
                    pos += 1;
                    let start = pos;
                    while pos < s.len() && s[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    if start == pos {
                        return Err(err("missing variable index"));
                    }
                    let idx: usize = s[start..pos]
                        .iter()
                        .collect::<String>()
                        .parse()
                        .map_err(|_| err("bad variable index"))?;
                    if idx == 0 {
                        return Err(err("variable indices start at 1"));
                    }
                    let coord = if fiber {
                        base_count + idx - 1
                    } else {
                        idx - 1
                    };
                    if (fiber && coord >= dim) || (!fiber && idx > base_count) {
                        return Err(WeylError::IndexOutOfRange(coord, dim));
                    }
                    let mut exp = 1u32;
                    skip_ws(&mut pos);
                    if pos < s.len() && s[pos] == '^' {
                        pos += 1;
                        skip_ws(&mut pos);
                        let start = pos;
                        while pos < s.len() && s[pos].is_ascii_digit() {
                            pos += 1;
                        }
                        exp = s[start..pos]
                            .iter()
                            .collect::<String>()
                            .parse()
                            .map_err(|_| err("bad exponent"))?;
                    }
                    if deriv {
                        beta[coord] += exp;
                    } else {
                        alpha[coord] += exp;
                    }
                    saw_factor = true;
                } else {
                    break;
                }
                skip_ws(&mut pos);
                if pos < s.len() && s[pos] == '*' {
                    pos += 1;
                } else {
                    break;
                }
            }
            if !saw_factor {
                return Err(err("empty term"));
            }
            // Products of commuting variables parse directly; mixed t/D factors
            // within one term are multiplied in written order.
            el.insert_term((alpha, beta), coeff);
            skip_ws(&mut pos);
        }
        Ok(el)
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text(0))
    }
}

/// Weights of a graded coordinate system: `base_count` ungraded coordinates
/// followed by one strictly positive rational weight per fiber coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightVector {
    base_count: usize,
    fiber: Vec<Rat>,
}

impl WeightVector {
    pub fn new(base_count: usize, fiber: Vec<Rat>) -> Result<Self, WeylError> {
        if fiber.iter().any(|n| !n.is_positive()) {
            return Err(WeylError::InvalidWeights(
                "fiber weights must be strictly positive".into(),
            ));
        }
        Ok(WeightVector { base_count, fiber })
    }

    pub fn from_integers(weights: &[i64]) -> Result<Self, WeylError> {
        Self::new(0, weights.iter().map(|&n| rat_int(n)).collect())
    }

    pub fn dim(&self) -> usize {
        self.base_count + self.fiber.len()
    }

    pub fn base_count(&self) -> usize {
        self.base_count
    }

    pub fn fiber_count(&self) -> usize {
        self.fiber.len()
    }

    pub fn fiber_weights(&self) -> &[Rat] {
        &self.fiber
    }

    /// Trace of the associated Euler field: the sum of the fiber weights.
    pub fn trace(&self) -> Rat {
        self.fiber.iter().fold(Rat::zero(), |a, b| a + b)
    }

    /// The rational `beta = a/b` with minimal positive integers such that the
    /// weights divided by `beta` are coprime positive integers, together with
    /// those normalized integer weights.
    pub fn normalized(&self) -> (Rat, Vec<u64>) {
        use num::Integer;
        assert!(!self.fiber.is_empty(), "no fiber coordinates");
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for n in &self.fiber {
            num_gcd = num_gcd.gcd(n.numer());
            den_lcm = den_lcm.lcm(n.denom());
        }
        let beta = Rat::new(num_gcd, den_lcm);
        let ints: Vec<u64> = self
            .fiber
            .iter()
            .map(|n| {
                let m = n / &beta;
                debug_assert!(m.denom().is_one());
                u64::try_from(m.numer()).expect("normalized weight fits u64")
            })
            .collect();
        (beta, ints)
    }

    /// All-ones weights on `d` fiber coordinates (the Euler case).
    pub fn euler(d: usize) -> Self {
        WeightVector {
            base_count: 0,
            fiber: vec![Rat::one(); d],
        }
    }
}

/// The weighted Euler field `sum n_i t_i D_i` over the fiber coordinates.
pub fn euler_field(w: &WeightVector) -> WeylElement {
    let dim = w.dim();
    let mut el = WeylElement::zero(dim);
    for (k, n) in w.fiber.iter().enumerate() {
        let i = w.base_count + k;
        let mut alpha = vec![0; dim];
        let mut beta = vec![0; dim];
        alpha[i] = 1;
        beta[i] = 1;
        el.insert_term((alpha, beta), n.clone());
    }
    el
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn t(dim: usize, i: usize) -> WeylElement {
        WeylElement::position(dim, i)
    }

    fn d(dim: usize, i: usize) -> WeylElement {
        WeylElement::derivation(dim, i)
    }

    #[test]
    fn canonical_commutation() {
        // D1 * t1 = t1 D1 + 1
        let lhs = d(1, 0).multiply(&t(1, 0)).unwrap();
        let expected = t(1, 0)
            .multiply(&d(1, 0))
            .unwrap()
            .add(&WeylElement::one(1))
            .unwrap();
        assert_eq!(lhs, expected);
    }

    #[test]
    fn euler_square() {
        // (t1 D1)^2 = t1^2 D1^2 + t1 D1
        let theta = t(1, 0).multiply(&d(1, 0)).unwrap();
        let sq = theta.multiply(&theta).unwrap();
        let mut expected = WeylElement::monomial(1, vec![2], vec![2], rat_int(1));
        expected = expected
            .add(&WeylElement::monomial(1, vec![1], vec![1], rat_int(1)))
            .unwrap();
        assert_eq!(sq, expected);
    }

    #[test]
    fn left_multiplication_shifts_euler() {
        // t1 * (t1 D1) and (t1 D1 - 1) * t1 both normal-order to t1^2 D1.
        let theta = t(1, 0).multiply(&d(1, 0)).unwrap();
        let lhs = t(1, 0).multiply(&theta).unwrap();
        let shifted = theta.sub(&WeylElement::one(1)).unwrap();
        let rhs = shifted.multiply(&t(1, 0)).unwrap();
        let expected = WeylElement::monomial(1, vec![2], vec![1], rat_int(1));
        assert_eq!(lhs, expected);
        assert_eq!(rhs, expected);
    }

    #[test]
    fn euler_field_examples() {
        let w11 = WeightVector::from_integers(&[1, 1]).unwrap();
        let eta = euler_field(&w11);
        let expected = t(2, 0)
            .multiply(&d(2, 0))
            .unwrap()
            .add(&t(2, 1).multiply(&d(2, 1)).unwrap())
            .unwrap();
        assert_eq!(eta, expected);

        let w12 = WeightVector::from_integers(&[1, 2]).unwrap();
        let eta = euler_field(&w12);
        let expected = t(2, 0)
            .multiply(&d(2, 0))
            .unwrap()
            .add(&t(2, 1).multiply(&d(2, 1)).unwrap().scale(&rat_int(2)))
            .unwrap();
        assert_eq!(eta, expected);

        let w2 = WeightVector::from_integers(&[2]).unwrap();
        assert_eq!(w2.trace(), rat_int(2));
        assert_eq!(
            euler_field(&w2),
            WeylElement::monomial(1, vec![1], vec![1], rat_int(2))
        );
    }

    #[test]
    fn v_degree_examples() {
        let w1 = WeightVector::from_integers(&[1]).unwrap();
        assert_eq!(t(1, 0).v_degree(&w1), Some(rat_int(-1)));
        let w12 = WeightVector::from_integers(&[1, 2]).unwrap();
        assert_eq!(euler_field(&w12).v_degree(&w12), Some(rat_int(0)));
        // t1 D2 with weights (1,2): -1 + 2 = +1
        let m = t(2, 0).multiply(&d(2, 1)).unwrap();
        assert_eq!(m.v_degree(&w12), Some(rat_int(1)));
        assert_eq!(WeylElement::zero(2).v_degree(&w12), None);
    }

    #[test]
    fn commutator_examples() {
        assert_eq!(
            d(1, 0).commutator(&t(1, 0)).unwrap(),
            WeylElement::one(1)
        );
        let w11 = WeightVector::from_integers(&[1, 1]).unwrap();
        let eta = euler_field(&w11);
        let m = t(2, 0).multiply(&d(2, 1)).unwrap();
        assert!(eta.commutator(&m).unwrap().is_zero());
        // [m, eta] = v_degree(m) * m for the weighted Euler field:
        // with weights (1,2), [t2, eta] = -2 t2.
        let w12 = WeightVector::from_integers(&[1, 2]).unwrap();
        let eta = euler_field(&w12);
        assert_eq!(
            t(2, 1).commutator(&eta).unwrap(),
            t(2, 1).scale(&rat_int(-2))
        );
    }

    #[test]
    fn fourier_euler_field() {
        for n in 1..=4usize {
            let w = WeightVector::euler(n);
            let theta = euler_field(&w);
            let expected = theta
                .neg()
                .sub(&WeylElement::constant(n, rat_int(n as i64)))
                .unwrap();
            assert_eq!(theta.fourier(), expected);
        }
    }

    #[test]
    fn fourier_generators_and_square() {
        assert_eq!(t(2, 0).fourier(), d(2, 0));
        assert_eq!(d(2, 0).fourier(), t(2, 0).neg());
        // Double transform is the pullback by v -> -v: t^a D^b -> (-1)^(|a|+|b|) t^a D^b.
        let p = WeylElement::monomial(2, vec![2, 0], vec![0, 1], rat_int(1));
        assert_eq!(p.fourier().fourier(), p.neg());
    }

    #[test]
    fn fourier_is_algebra_map_spot() {
        let p = t(2, 0).multiply(&d(2, 1)).unwrap();
        let q = t(2, 1)
            .multiply(&t(2, 1))
            .unwrap()
            .multiply(&d(2, 0))
            .unwrap();
        let lhs = p.multiply(&q).unwrap().fourier();
        let rhs = p.fourier().multiply(&q.fourier()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn rendering_and_parsing() {
        // 3*t1^2*Dt1 - 1/2*x1*Dt2 with one base coordinate and two fiber ones.
        let dim = 3;
        let a = WeylElement::monomial(dim, vec![0, 2, 0], vec![0, 1, 0], rat_int(3));
        let b = WeylElement::monomial(dim, vec![1, 0, 0], vec![0, 0, 1], rat(-1, 2));
        let el = a.add(&b).unwrap();
        let txt = el.to_text(1);
        assert_eq!(txt, "3*t1^2*Dt1 - 1/2*x1*Dt2");
        let parsed = WeylElement::parse(&txt, dim, 1).unwrap();
        assert_eq!(parsed, el);
        assert_eq!(WeylElement::zero(2).to_text(0), "0");
        assert!(WeylElement::parse("t3", 2, 0).is_err());
        assert!(WeylElement::parse("", 2, 0).is_err());
    }

    #[test]
    fn weight_normalization() {
        let w = WeightVector::new(0, vec![rat(1, 2), rat(3, 2)]).unwrap();
        let (beta, ints) = w.normalized();
        assert_eq!(beta, rat(1, 2));
        assert_eq!(ints, vec![1, 3]);
        let w = WeightVector::from_integers(&[2, 4]).unwrap();
        let (beta, ints) = w.normalized();
        assert_eq!(beta, rat_int(2));
        assert_eq!(ints, vec![1, 2]);
        assert!(WeightVector::from_integers(&[0]).is_err());
    }
}
