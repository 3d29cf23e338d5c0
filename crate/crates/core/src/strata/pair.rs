//! Symmetric pairs from descriptor data: involution validation, restricted
//! roots with multiplicities, centralizer classes of the restricted system,
//! and per-class nilpotent data (computed automatically for group-type
//! reduced subpairs with type A factors, or taken from the descriptor).

use super::{enumerate_closed_masks, StrataError};
use crate::exact::{format_rat, parse_rat, rat, rat_int, QMatrix, Rat};
use crate::liealg::{
    centralizer_dim_sln, jordan_nilpotent, partitions_of, ChevalleyAlgebra, Element, Partition,
    RootSystem,
};
use num::{BigInt, One, Signed, Zero};
use std::collections::{BTreeMap, BTreeSet, HashMap};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PairError {
    #[error("descriptor error: {0}")]
    Descriptor(String),
    #[error(transparent)]
    Algebra(#[from] crate::liealg::AlgebraError),
    #[error(transparent)]
    Strata(#[from] Box<StrataError>),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

/// Weight data of one nilpotent orbit of a reduced subpair, as carried by a
/// descriptor: the sl2 weights on a basis of the reduced `p^y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitData {
    pub label: String,
    pub weights: Vec<u32>,
    pub distinguished: bool,
}

/// A symmetric pair given by explicit data: the ambient algebra, the
/// involution as a matrix on the Chevalley basis, a Cartan subspace of the
/// `(-1)`-eigenspace, and optional per-class nilpotent weight data keyed by
/// the canonical class labels of the restricted root system.
#[derive(Debug, Clone)]
pub struct SymmetricPairDescriptor {
    pub label: String,
    pub algebra: ChevalleyAlgebra,
    pub sigma: QMatrix,
    pub cartan_subspace: Vec<Vec<Rat>>,
    pub nilpotent_data: BTreeMap<String, Vec<OrbitData>>,
}

impl SymmetricPairDescriptor {
    /// The group-type pair `(g (+) g, swap)` encoding the adjoint case, with
    /// the Cartan subspace `{(h, -h)}`.
    pub fn diagonal(type_name: &str) -> Result<Self, PairError> {
        let product = format!("{type_name}x{type_name}");
        let algebra = ChevalleyAlgebra::from_type(&product)?;
        let factor = ChevalleyAlgebra::from_type(type_name)?;
        let l = factor.rank();
        let dim = algebra.dim();
        debug_assert_eq!(dim, 2 * factor.dim());
        let rs = algebra.root_system();
        let mut sigma = QMatrix::zero(dim, dim);
        for i in 0..l {
            // h_i of block 1 <-> h_i of block 2.
            sigma.set(i + l, i, Rat::one());
            sigma.set(i, i + l, Rat::one());
        }
        for k in 0..rs.num_roots() {
            let coords = rs.root(k);
            // Swap the two coordinate blocks.
            let mut swapped = vec![0i64; 2 * l];
            for j in 0..l {
                swapped[j] = coords[l + j];
                swapped[l + j] = coords[j];
            }
            let target = rs
                .root_index(&swapped)
                .expect("swap of a product root is a root");
            sigma.set(algebra.e_index(target), algebra.e_index(k), Rat::one());
        }
        let mut cartan_subspace = Vec::new();
        for i in 0..l {
            let mut v = vec![Rat::zero(); dim];
            v[i] = Rat::one();
            v[i + l] = -Rat::one();
            cartan_subspace.push(v);
        }
        Ok(SymmetricPairDescriptor {
            label: format!("diagonal-{type_name}"),
            algebra,
            sigma,
            cartan_subspace,
            nilpotent_data: BTreeMap::new(),
        })
    }

    /// Serializes in the descriptor schema accepted by [`Self::from_json`]:
    /// `basis_images[i]` holds the coordinates of `sigma(b_i)`, rationals as
    /// `p/q` strings.
    pub fn to_json(&self) -> serde_json::Value {
        let dim = self.algebra.dim();
        let images: Vec<Vec<String>> = (0..dim)
            .map(|i| (0..dim).map(|j| format_rat(self.sigma.get(j, i))).collect())
            .collect();
        let cartan: Vec<Vec<i64>> = self
            .algebra
            .root_system()
            .cartan()
            .iter()
            .map(|r| r.clone())
            .collect();
        let subspace: Vec<Vec<String>> = self
            .cartan_subspace
            .iter()
            .map(|v| v.iter().map(format_rat).collect())
            .collect();
        let mut nilpotent_data = serde_json::Map::new();
        for (class, entries) in &self.nilpotent_data {
            let list: Vec<serde_json::Value> = entries
                .iter()
                .map(|e| {
                    serde_json::json!({
                        "label": e.label,
                        "weights": e.weights,
                        "distinguished": e.distinguished,
                    })
                })
                .collect();
            nilpotent_data.insert(class.clone(), serde_json::Value::Array(list));
        }
        serde_json::json!({
            "type": self.label,
            "cartan": cartan,
            "involution": { "basis_images": images },
            "cartan_subspace": subspace,
            "nilpotent_data": serde_json::Value::Object(nilpotent_data),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, PairError> {
        let obj = v
            .as_object()
            .ok_or_else(|| PairError::Descriptor("descriptor must be a JSON object".into()))?;
        let label = obj
            .get("type")
            .and_then(|x| x.as_str())
            .ok_or_else(|| PairError::Descriptor("missing string field 'type'".into()))?
            .to_string();
        let cartan = obj
            .get("cartan")
            .ok_or_else(|| PairError::Descriptor("missing field 'cartan'".into()))?;
        let cartan: Vec<Vec<i64>> = serde_json::from_value(cartan.clone())
            .map_err(|e| PairError::Descriptor(format!("bad 'cartan': {e}")))?;
        let algebra = ChevalleyAlgebra::new(
            RootSystem::from_cartan(cartan)
                .map_err(|e| PairError::Descriptor(format!("bad Cartan matrix: {e}")))?,
        )?;
        let dim = algebra.dim();
        let images = obj
            .get("involution")
            .and_then(|x| x.get("basis_images"))
            .ok_or_else(|| {
                PairError::Descriptor("missing field 'involution.basis_images'".into())
            })?;
        let images: Vec<Vec<String>> = serde_json::from_value(images.clone())
            .map_err(|e| PairError::Descriptor(format!("bad 'basis_images': {e}")))?;
        if images.len() != dim || images.iter().any(|r| r.len() != dim) {
            return Err(PairError::Descriptor(format!(
                "'basis_images' must be a {dim}x{dim} matrix of rationals"
            )));
        }
        // basis_images[i] = coordinates of sigma(b_i); the matrix acts on
        // coordinates as the transpose.
        let mut sigma = QMatrix::zero(dim, dim);
        for (i, row) in images.iter().enumerate() {
            for (j, entry) in row.iter().enumerate() {
                let r = parse_rat(entry).ok_or_else(|| {
                    PairError::Descriptor(format!("bad rational '{entry}' in basis_images"))
                })?;
                sigma.set(j, i, r);
            }
        }
        let cartan_subspace = obj
            .get("cartan_subspace")
            .ok_or_else(|| PairError::Descriptor("missing field 'cartan_subspace'".into()))?;
        let cartan_subspace: Vec<Vec<String>> = serde_json::from_value(cartan_subspace.clone())
            .map_err(|e| PairError::Descriptor(format!("bad 'cartan_subspace': {e}")))?;
        let cartan_subspace: Vec<Vec<Rat>> = cartan_subspace
            .iter()
            .map(|row| {
                if row.len() != dim {
                    return Err(PairError::Descriptor(
                        "cartan_subspace vectors must have algebra dimension".into(),
                    ));
                }
                row.iter()
                    .map(|s| {
                        parse_rat(s).ok_or_else(|| {
                            PairError::Descriptor(format!("bad rational '{s}'"))
                        })
                    })
                    .collect()
            })
            .collect::<Result<_, _>>()?;
        let mut nilpotent_data = BTreeMap::new();
        if let Some(nd) = obj.get("nilpotent_data") {
            let nd = nd.as_object().ok_or_else(|| {
                PairError::Descriptor("'nilpotent_data' must be an object".into())
            })?;
            for (class, entries) in nd {
                let entries: Vec<serde_json::Value> =
                    serde_json::from_value(entries.clone()).map_err(|e| {
                        PairError::Descriptor(format!("bad nilpotent_data for {class}: {e}"))
                    })?;
                let mut orbit_entries = Vec::new();
                for (idx, e) in entries.iter().enumerate() {
                    let weights: Vec<u32> = serde_json::from_value(
                        e.get("weights")
                            .cloned()
                            .ok_or_else(|| {
                                PairError::Descriptor(format!(
                                    "nilpotent_data entry for {class} missing 'weights'"
                                ))
                            })?,
                    )
                    .map_err(|e| PairError::Descriptor(format!("bad weights: {e}")))?;
                    let distinguished = e
                        .get("distinguished")
                        .and_then(|x| x.as_bool())
                        .ok_or_else(|| {
                            PairError::Descriptor(format!(
                                "nilpotent_data entry for {class} missing 'distinguished'"
                            ))
                        })?;
                    let label = e
                        .get("label")
                        .and_then(|x| x.as_str())
                        .map(|s| s.to_string())
                        .unwrap_or_else(|| format!("O{idx}"));
                    orbit_entries.push(OrbitData {
                        label,
                        weights,
                        distinguished,
                    });
                }
                nilpotent_data.insert(class.clone(), orbit_entries);
            }
        }
        Ok(SymmetricPairDescriptor {
            label,
            algebra,
            sigma,
            cartan_subspace,
            nilpotent_data,
        })
    }
}

/// Restricted root data: simultaneous rational eigenvalues of the Cartan
/// subspace action, with eigenspace bases.
#[derive(Debug)]
pub struct RestrictedRoots {
    pub dim_a: usize,
    /// Value vectors on the Cartan subspace basis; positives (lex) first,
    /// then the negatives in mirrored order.
    pub roots: Vec<Vec<Rat>>,
    pub n_positive: usize,
    pub mult: Vec<usize>,
    pub eigenbases: Vec<Vec<Element>>,
    pub zero_space: Vec<Element>,
    pub m_dim: usize,
    pub dim_p: usize,
    pub dim_k: usize,
    /// Gram matrix of the Killing form on the Cartan subspace basis.
    pub gram: QMatrix,
}

impl RestrictedRoots {
    pub fn index_of(&self, value: &[Rat]) -> Option<usize> {
        self.roots.iter().position(|r| r == value)
    }

    pub fn negative_of(&self, k: usize) -> usize {
        if k < self.n_positive {
            k + self.n_positive
        } else {
            k - self.n_positive
        }
    }

    /// Dual-space inner product of two value vectors through the Gram matrix.
    fn dual_inner(&self, a: &[Rat], b: &[Rat]) -> Rat {
        // Solve G x = b, then a . x.
        let x = solve_linear(&self.gram, b).expect("Gram matrix is invertible");
        a.iter()
            .zip(&x)
            .fold(Rat::zero(), |acc, (u, v)| acc + u * v)
    }
}

fn is_positive_vec_rat(v: &[Rat]) -> bool {
    for c in v {
        if c.is_positive() {
            return true;
        }
        if c.is_negative() {
            return false;
        }
    }
    false
}

/// Solves `M x = b` for square invertible `M`.
fn solve_linear(m: &QMatrix, b: &[Rat]) -> Option<Vec<Rat>> {
    let n = m.rows();
    // Augment and reduce.
    let mut aug = QMatrix::zero(n, n + 1);
    for i in 0..n {
        for j in 0..n {
            aug.set(i, j, m.get(i, j).clone());
        }
        aug.set(i, n, b[i].clone());
    }
    let kernel = aug.kernel_basis();
    // Kernel vectors with nonzero last coordinate encode solutions.
    for v in kernel {
        if !v[n].is_zero() {
            let scale = -v[n].clone();
            return Some(v[..n].iter().map(|c| c / &scale).collect());
        }
    }
    None
}

fn apply_matrix(m: &QMatrix, v: &[Rat]) -> Vec<Rat> {
    m.apply(v).expect("dimension checked")
}

/// Validates the descriptor and computes the restricted root decomposition.
///
/// Checks: sigma is an involutive automorphism preserving the Killing form;
/// the Cartan subspace lies in `p`, is abelian, acts diagonalizably with
/// rational eigenvalues, and is maximal (`g_0 cap p = a`); and the
/// multiplicity identities `dim g_alpha = dim (g_[alpha] cap p) =
/// dim (g_[alpha] cap k)` hold.
pub fn restricted_roots(pair: &SymmetricPairDescriptor) -> Result<RestrictedRoots, PairError> {
    let alg = &pair.algebra;
    let dim = alg.dim();
    let sigma = &pair.sigma;
    if sigma.rows() != dim || sigma.cols() != dim {
        return Err(PairError::Descriptor(format!(
            "involution must be {dim}x{dim}"
        )));
    }
    // sigma^2 = 1.
    let sq = sigma.mul(sigma).expect("square");
    if sq != QMatrix::identity(dim) {
        return Err(PairError::Descriptor("involution is not involutive".into()));
    }
    // Automorphism: sigma[b_i, b_j] = [sigma b_i, sigma b_j].
    for i in 0..dim {
        for j in 0..dim {
            let mut bracket = vec![Rat::zero(); dim];
            for &(k, c) in alg.bracket_basis(i, j) {
                bracket[k] = rat_int(c);
            }
            let lhs = apply_matrix(sigma, &bracket);
            let si: Vec<Rat> = (0..dim).map(|r| sigma.get(r, i).clone()).collect();
            let sj: Vec<Rat> = (0..dim).map(|r| sigma.get(r, j).clone()).collect();
            let rhs = alg.bracket(&si, &sj)?;
            if lhs != rhs {
                return Err(PairError::Descriptor(format!(
                    "involution does not preserve the bracket at basis pair ({i},{j})"
                )));
            }
        }
    }
    // Killing preservation.
    for i in 0..dim {
        for j in 0..dim {
            let si: Vec<Rat> = (0..dim).map(|r| sigma.get(r, i).clone()).collect();
            let sj: Vec<Rat> = (0..dim).map(|r| sigma.get(r, j).clone()).collect();
            let lhs = alg.killing(&si, &sj)?;
            if lhs != rat_int(alg.killing_basis(i, j)) {
                return Err(PairError::Descriptor(
                    "involution does not preserve the Killing form".into(),
                ));
            }
        }
    }
    // Eigenspace dimensions of sigma.
    let mut sigma_minus = sigma.clone();
    let mut sigma_plus = sigma.clone();
    for i in 0..dim {
        sigma_minus.set(i, i, sigma.get(i, i) + Rat::one());
        sigma_plus.set(i, i, sigma.get(i, i) - Rat::one());
    }
    let dim_p = sigma_minus.kernel_basis().len();
    let dim_k = sigma_plus.kernel_basis().len();
    if dim_p + dim_k != dim {
        return Err(PairError::Descriptor(
            "involution eigenspaces do not fill the algebra".into(),
        ));
    }

    // Cartan subspace: inside p, abelian, independent.
    let a_basis = &pair.cartan_subspace;
    if a_basis.is_empty() {
        return Err(PairError::Descriptor("empty cartan_subspace".into()));
    }
    for (idx, v) in a_basis.iter().enumerate() {
        if v.len() != dim {
            return Err(PairError::Descriptor(
                "cartan_subspace vector has wrong length".into(),
            ));
        }
        let image = apply_matrix(sigma, v);
        let neg: Vec<Rat> = v.iter().map(|c| -c.clone()).collect();
        if image != neg {
            return Err(PairError::Descriptor(format!(
                "cartan_subspace vector {idx} is not in the (-1)-eigenspace"
            )));
        }
    }
    let k_a = a_basis.len();
    {
        let m = QMatrix::from_rows(a_basis.clone());
        if m.rank() != k_a {
            return Err(PairError::Descriptor(
                "cartan_subspace vectors are dependent".into(),
            ));
        }
    }
    for x in a_basis {
        for y in a_basis {
            if alg.bracket(x, y)?.iter().any(|c| !c.is_zero()) {
                return Err(PairError::Descriptor("cartan_subspace is not abelian".into()));
            }
        }
    }

    // Simultaneous eigenspaces of ad(a_i) with rational eigenvalues, found by
    // scanning the integer spectrum of denominator-cleared matrices.
    let mut mats: Vec<QMatrix> = Vec::with_capacity(k_a);
    let mut scales: Vec<BigInt> = Vec::with_capacity(k_a);
    for x in a_basis {
        let ad = alg.ad(x)?;
        let mut lcm = BigInt::one();
        for i in 0..dim {
            for j in 0..dim {
                lcm = num::integer::lcm(lcm, ad.get(i, j).denom().clone());
            }
        }
        mats.push(ad.scale(&Rat::from_integer(lcm.clone())));
        scales.push(lcm);
    }
    let bounds: Vec<i64> = mats
        .iter()
        .map(|m| {
            let mut best = BigInt::zero();
            for i in 0..m.rows() {
                let mut row = BigInt::zero();
                for j in 0..m.cols() {
                    row += m.get(i, j).numer().abs();
                }
                best = best.max(row);
            }
            i64::try_from(&best).unwrap_or(i64::MAX / 2)
        })
        .collect();

    // Refine eigenvalue tuples level by level; a prefix is the stacked
    // constraint matrix of the levels fixed so far.
    struct Prefix {
        values: Vec<Rat>,
        rows: Vec<Vec<Rat>>,
        dim: usize,
    }
    let mut prefixes = vec![Prefix {
        values: vec![],
        rows: vec![],
        dim,
    }];
    for (level, m) in mats.iter().enumerate() {
        let mut next = Vec::new();
        for prefix in &prefixes {
            for lambda in -bounds[level]..=bounds[level] {
                let mut rows = prefix.rows.clone();
                for i in 0..dim {
                    let mut row: Vec<Rat> = (0..dim).map(|j| m.get(i, j).clone()).collect();
                    row[i] = &row[i] - rat_int(lambda);
                    rows.push(row);
                }
                let kern = QMatrix::from_rows(rows.clone()).kernel_basis();
                if !kern.is_empty() {
                    let mut values = prefix.values.clone();
                    values.push(rat_int(lambda) / Rat::from_integer(scales[level].clone()));
                    next.push(Prefix {
                        values,
                        rows,
                        dim: kern.len(),
                    });
                }
            }
        }
        prefixes = next;
    }
    let total: usize = prefixes.iter().map(|p| p.dim).sum();
    if total != dim {
        return Err(PairError::Descriptor(format!(
            "cartan_subspace action is not diagonalizable with rational eigenvalues \
             (eigenspaces fill {total} of {dim} dimensions)"
        )));
    }

    let mut zero_space: Vec<Element> = Vec::new();
    let mut weight_vectors: Vec<(Vec<Rat>, Vec<Element>)> = Vec::new();
    for prefix in prefixes {
        let basis = QMatrix::from_rows(prefix.rows).kernel_basis();
        if prefix.values.iter().all(|v| v.is_zero()) {
            zero_space = basis;
        } else {
            weight_vectors.push((prefix.values, basis));
        }
    }

    // Zero weight space must be m (+) a with the p-part exactly a.
    let p_projector = {
        // (1 - sigma)/2 maps onto p.
        let mut m = sigma.scale(&rat(-1, 2));
        for i in 0..dim {
            m.set(i, i, m.get(i, i) + rat(1, 2));
        }
        m
    };
    let zero_p_dim = {
        if zero_space.is_empty() {
            0
        } else {
            let cols: Vec<Vec<Rat>> = zero_space.iter().map(|v| apply_matrix(&p_projector, v)).collect();
            let m = QMatrix::from_rows(cols);
            m.rank()
        }
    };
    if zero_p_dim != k_a {
        return Err(PairError::Descriptor(format!(
            "cartan_subspace is not maximal: centralizer has a p-part of dimension {zero_p_dim}, expected {k_a}"
        )));
    }
    let m_dim = zero_space.len() - k_a;

    // Order: positives (lex) then negatives mirrored.
    let mut positives: Vec<(Vec<Rat>, Vec<Element>)> = weight_vectors
        .iter()
        .filter(|(v, _)| is_positive_vec_rat(v))
        .cloned()
        .collect();
    positives.sort_by(|a, b| a.0.cmp(&b.0));
    let n_positive = positives.len();
    if n_positive * 2 != weight_vectors.len() {
        return Err(PairError::Descriptor(
            "restricted roots are not symmetric under negation".into(),
        ));
    }
    let mut roots = Vec::with_capacity(2 * n_positive);
    let mut mult = Vec::with_capacity(2 * n_positive);
    let mut eigenbases = Vec::with_capacity(2 * n_positive);
    for (v, basis) in &positives {
        roots.push(v.clone());
        mult.push(basis.len());
        eigenbases.push(basis.clone());
    }
    for (v, _) in &positives {
        let neg: Vec<Rat> = v.iter().map(|c| -c.clone()).collect();
        let found = weight_vectors
            .iter()
            .find(|(w, _)| *w == neg)
            .ok_or_else(|| PairError::Descriptor("missing negative restricted root".into()))?;
        roots.push(neg);
        mult.push(found.1.len());
        eigenbases.push(found.1.clone());
    }
    for k in 0..n_positive {
        if mult[k] != mult[k + n_positive] {
            return Err(PairError::Descriptor(
                "restricted multiplicities are not negation-symmetric".into(),
            ));
        }
    }

    // Multiplicity identities: dim g_alpha = dim(g_[alpha] cap p) = dim(g_[alpha] cap k).
    let k_projector = {
        let mut m = sigma.scale(&rat(1, 2));
        for i in 0..dim {
            m.set(i, i, m.get(i, i) + rat(1, 2));
        }
        m
    };
    for k in 0..n_positive {
        let mut span: Vec<Element> = eigenbases[k].clone();
        span.extend(eigenbases[k + n_positive].clone());
        let p_dim = QMatrix::from_rows(span.iter().map(|v| apply_matrix(&p_projector, v)).collect())
            .rank();
        let k_dim = QMatrix::from_rows(span.iter().map(|v| apply_matrix(&k_projector, v)).collect())
            .rank();
        if p_dim != mult[k] || k_dim != mult[k] {
            return Err(PairError::Descriptor(format!(
                "multiplicity identity fails for restricted root {k}: mult {} vs p-part {p_dim}, k-part {k_dim}",
                mult[k]
            )));
        }
    }

    // Killing Gram matrix on a.
    let mut gram = QMatrix::zero(k_a, k_a);
    for i in 0..k_a {
        for j in 0..k_a {
            gram.set(i, j, alg.killing(&a_basis[i], &a_basis[j])?);
        }
    }
    if !QMatrix::from_fn(k_a, k_a, |i, j| gram.get(i, j).clone())
        .kernel_basis()
        .is_empty()
    {
        return Err(PairError::Descriptor(
            "Killing form degenerate on cartan_subspace".into(),
        ));
    }

    Ok(RestrictedRoots {
        dim_a: k_a,
        roots,
        n_positive,
        mult,
        eigenbases,
        zero_space,
        m_dim,
        dim_p,
        dim_k,
        gram,
    })
}

/// The restricted Weyl group as permutations of the restricted root list,
/// generated by the reflections in the restricted roots.
fn restricted_weyl(rr: &RestrictedRoots) -> Result<Vec<Vec<u16>>, PairError> {
    let n = rr.roots.len();
    let mut gens = Vec::new();
    for alpha in 0..rr.n_positive {
        let av = rr.roots[alpha].clone();
        let norm = rr.dual_inner(&av, &av);
        let mut perm = vec![0u16; n];
        for (k, beta) in rr.roots.iter().enumerate() {
            let c = rat_int(2) * rr.dual_inner(beta, &av) / &norm;
            let image: Vec<Rat> = beta
                .iter()
                .zip(&av)
                .map(|(b, a)| b - &c * a)
                .collect();
            perm[k] = rr.index_of(&image).ok_or_else(|| {
                PairError::Descriptor(
                    "restricted reflections do not preserve the restricted roots".into(),
                )
            })? as u16;
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
                queue.push(composed);
            }
        }
    }
    Ok(queue)
}

/// Source of the per-class orbit data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LambdaSource {
    /// Group-type reduced subpair with type A factors, computed from
    /// partition combinatorics and exact witnesses.
    Auto,
    /// Taken from the descriptor's nilpotent_data.
    Supplied,
    /// No data available; verdicts involving this class degrade.
    Missing,
}

#[derive(Debug, Clone)]
pub struct PairOrbit {
    pub label: String,
    pub lambda: i64,
    pub codim: Option<usize>,
    pub distinguished: bool,
}

#[derive(Debug)]
pub struct PairClass {
    pub label: String,
    pub positives: BTreeSet<usize>,
    /// Reduced dimension of `p^s`.
    pub redim: usize,
    pub source: LambdaSource,
    pub orbits: Vec<PairOrbit>,
    /// min over distinguished orbits of lambda; the class contributes
    /// `(lambda_min - redim)/2` to mu. None when reduced part is zero
    /// (no nonzero nilpotents) or data is missing.
    pub lambda_distinguished: Option<i64>,
    /// `mu` of the subpair: min over contained saturated subsets' values.
    pub mu: Option<Rat>,
}

#[derive(Debug)]
pub struct PairStratum {
    pub class_index: usize,
    pub class_label: String,
    pub orbit_label: String,
    pub codim: Option<usize>,
    pub lambda: i64,
    pub trace_t: Rat,
    pub mu_bound: Option<Rat>,
    pub conic: bool,
    pub distinguished: bool,
}

#[derive(Debug)]
pub struct PairAnalysis {
    pub restricted_mults: Vec<usize>,
    pub rank: usize,
    pub dim_p: usize,
    pub classes: Vec<PairClass>,
    pub strata: Vec<PairStratum>,
    /// min over all classes of (lambda_distinguished - redim)/2; None if any
    /// class lacks data.
    pub mu_p: Option<Rat>,
    /// True when every class has orbit data (no Missing source).
    pub complete: bool,
}

struct AutoContext<'a> {
    alg: &'a ChevalleyAlgebra,
    sigma: &'a QMatrix,
    /// sigma as signed permutation of basis indices, if it is one.
    signed_perm: Option<Vec<(usize, i64)>>,
    /// a-basis expressed in simple-coroot coordinates, if inside the Cartan.
    a_in_cartan: Option<Vec<Vec<Rat>>>,
    a_basis: &'a [Vec<Rat>],
}

impl<'a> AutoContext<'a> {
    fn new(pair: &'a SymmetricPairDescriptor) -> Self {
        let alg = &pair.algebra;
        let dim = alg.dim();
        let sigma = &pair.sigma;
        let mut signed_perm = Some(Vec::with_capacity(dim));
        'outer: for i in 0..dim {
            let mut found = None;
            for r in 0..dim {
                let v = sigma.get(r, i);
                if !v.is_zero() {
                    if found.is_some() || (!v.is_one() && *v != -Rat::one()) {
                        signed_perm = None;
                        break 'outer;
                    }
                    found = Some((r, if v.is_one() { 1i64 } else { -1i64 }));
                }
            }
            match found {
                Some(x) => signed_perm.as_mut().unwrap().push(x),
                None => {
                    signed_perm = None;
                    break;
                }
            }
        }
        let l = alg.rank();
        let a_in_cartan = pair
            .cartan_subspace
            .iter()
            .map(|v| {
                if v[l..].iter().all(|c| c.is_zero()) {
                    Some(v[..l].to_vec())
                } else {
                    None
                }
            })
            .collect::<Option<Vec<_>>>();
        AutoContext {
            alg,
            sigma,
            signed_perm,
            a_in_cartan,
            a_basis: &pair.cartan_subspace,
        }
    }

    fn available(&self) -> bool {
        self.signed_perm.is_some() && self.a_in_cartan.is_some()
    }

    /// Value of a big root on the a-basis, when a lies in the Cartan.
    fn root_restriction(&self, root_k: usize) -> Vec<Rat> {
        let coords = self.a_in_cartan.as_ref().expect("auto context");
        coords
            .iter()
            .map(|h| self.alg.root_system().eval_on_coroot_coords(root_k, h))
            .collect()
    }
}

/// Analysis entry point: validates the pair, computes restricted classes and
/// all per-class data, and assembles the strata.
pub fn analyze_pair(
    pair: &SymmetricPairDescriptor,
    _rank_cap: usize,
) -> Result<PairAnalysis, PairError> {
    let rr = restricted_roots(pair)?;
    let alg = &pair.algebra;
    let dim = alg.dim();
    let m = rr.n_positive;
    assert!(m <= 63, "restricted system too large for mask enumeration");

    // Sum and difference tables over restricted positives (lex order makes
    // sums later and differences earlier).
    let value_index: HashMap<Vec<String>, usize> = rr
        .roots
        .iter()
        .enumerate()
        .map(|(k, v)| (v.iter().map(format_rat).collect(), k))
        .collect();
    let lookup = |v: &[Rat]| -> Option<usize> {
        value_index
            .get(&v.iter().map(format_rat).collect::<Vec<_>>())
            .copied()
    };
    let mut sum_table: Vec<Vec<(usize, usize)>> = vec![Vec::new(); m];
    let mut diff_table: Vec<Vec<(usize, usize)>> = vec![Vec::new(); m];
    for i in 0..m {
        for j in i..m {
            let s: Vec<Rat> = rr.roots[i]
                .iter()
                .zip(&rr.roots[j])
                .map(|(a, b)| a + b)
                .collect();
            if let Some(k) = lookup(&s) {
                if k < m {
                    sum_table[k].push((i, j));
                    diff_table[k].push((i, j));
                    if i != j {
                        diff_table[k].push((j, i));
                    }
                }
            }
        }
    }
    let masks = enumerate_closed_masks(m, &sum_table, &diff_table);

    // Saturation: roots vanishing on the kernel of the class constraints.
    let saturate_mask = |mask: u64| -> u64 {
        let rows: Vec<Vec<Rat>> = (0..m)
            .filter(|k| mask & (1 << k) != 0)
            .map(|k| rr.roots[k].clone())
            .collect();
        let kernel = if rows.is_empty() {
            QMatrix::identity(rr.dim_a)
                .kernel_basis()
                .into_iter()
                .chain((0..rr.dim_a).map(|i| {
                    let mut v = vec![Rat::zero(); rr.dim_a];
                    v[i] = Rat::one();
                    v
                }))
                .collect()
        } else {
            QMatrix::from_rows(rows).kernel_basis()
        };
        let mut out = 0u64;
        for k in 0..m {
            let vanishes = kernel.iter().all(|h| {
                rr.roots[k]
                    .iter()
                    .zip(h)
                    .fold(Rat::zero(), |acc, (a, b)| acc + a * b)
                    .is_zero()
            });
            if vanishes {
                out |= 1 << k;
            }
        }
        out
    };

    let weyl = restricted_weyl(&rr)?;
    let canonical = |mask: u64| -> u64 {
        let members: Vec<usize> = (0..m).filter(|k| mask & (1 << k) != 0).collect();
        let mut best = u64::MAX;
        for w in &weyl {
            let mut img = 0u64;
            for &k in &members {
                let t = w[k] as usize;
                let pos = if t < m { t } else { rr.negative_of(t) };
                img |= 1 << pos;
            }
            best = best.min(img);
        }
        best
    };

    // All saturated subsets with their canonical class.
    let mut saturated_subsets: BTreeSet<u64> = BTreeSet::new();
    for &mask in &masks {
        let sat = saturate_mask(mask);
        saturated_subsets.insert(sat);
    }
    let mut class_masks: BTreeSet<u64> = BTreeSet::new();
    for &s in &saturated_subsets {
        class_masks.insert(canonical(s));
    }
    let mut class_list: Vec<u64> = class_masks.into_iter().collect();
    class_list.sort_by_key(|&msk| (msk.count_ones(), msk));

    let auto = AutoContext::new(pair);

    // Generic restricted point for a class (value coordinates on a-basis).
    let generic_restricted = |mask: u64| -> Result<Vec<Rat>, PairError> {
        let rows: Vec<Vec<Rat>> = (0..m)
            .filter(|k| mask & (1 << k) != 0)
            .map(|k| rr.roots[k].clone())
            .collect();
        let kernel = if rows.is_empty() {
            (0..rr.dim_a)
                .map(|i| {
                    let mut v = vec![Rat::zero(); rr.dim_a];
                    v[i] = Rat::one();
                    v
                })
                .collect::<Vec<_>>()
        } else {
            QMatrix::from_rows(rows).kernel_basis()
        };
        if kernel.is_empty() {
            return Ok(vec![Rat::zero(); rr.dim_a]);
        }
        let outside: Vec<usize> = (0..m).filter(|k| mask & (1 << k) == 0).collect();
        for t in 1i64..=(10 * (m as i64 + 1) * (kernel.len() as i64 + 1)) {
            let mut point = vec![Rat::zero(); rr.dim_a];
            let mut power = rat_int(1);
            for basis_vec in &kernel {
                for (j, c) in basis_vec.iter().enumerate() {
                    point[j] = &point[j] + c * &power;
                }
                power = power * rat_int(t);
            }
            let ok = outside.iter().all(|&k| {
                !rr.roots[k]
                    .iter()
                    .zip(&point)
                    .fold(Rat::zero(), |acc, (a, b)| acc + a * b)
                    .is_zero()
            });
            if ok {
                return Ok(point);
            }
        }
        Err(PairError::Internal("no generic restricted point found".into()))
    };

    // Per-class analysis, keyed by canonical mask.
    struct ClassData {
        label: String,
        positives: BTreeSet<usize>,
        redim: usize,
        source: LambdaSource,
        orbits: Vec<PairOrbit>,
        lambda_distinguished: Option<i64>,
    }
    let mut class_data: Vec<ClassData> = Vec::new();
    for &mask in &class_list {
        let positives: BTreeSet<usize> = (0..m).filter(|k| mask & (1 << k) != 0).collect();
        let label = format!(
            "P[{}]",
            positives
                .iter()
                .map(|k| k.to_string())
                .collect::<Vec<_>>()
                .join(",")
        );
        let a_point = generic_restricted(mask)?;
        let s_elem: Element = {
            let mut v = vec![Rat::zero(); dim];
            for (c, basis_vec) in a_point.iter().zip(auto.a_basis) {
                for (vi, bi) in v.iter_mut().zip(basis_vec) {
                    *vi = &*vi + c * bi;
                }
            }
            v
        };

        // Reduced subpair dimensions: g^s = ker ad(s); reduced part is
        // [g^s, g^s]; redim = its p-part.
        let gs_basis = alg.ad(&s_elem)?.kernel_basis();
        let reduced_basis = derived_subalgebra(alg, &gs_basis)?;
        let redim = {
            if reduced_basis.is_empty() {
                0
            } else {
                let projected: Vec<Element> = reduced_basis
                    .iter()
                    .map(|v| {
                        let img = apply_matrix(&pair.sigma, v);
                        v.iter().zip(&img).map(|(a, b)| a - b).collect::<Vec<Rat>>()
                    })
                    .collect();
                QMatrix::from_rows(projected).rank()
            }
        };

        // Orbit data.
        let supplied = pair.nilpotent_data.get(&label);
        let (source, orbits, lambda_distinguished) = if reduced_basis.is_empty() {
            (
                LambdaSource::Auto,
                vec![PairOrbit {
                    label: "0".into(),
                    lambda: 0,
                    codim: Some(0),
                    distinguished: false,
                }],
                None,
            )
        } else if let Some(entries) = supplied {
            let orbits: Vec<PairOrbit> = entries
                .iter()
                .map(|e| PairOrbit {
                    label: e.label.clone(),
                    lambda: e
                        .weights
                        .iter()
                        .map(|&w| i64::from(w) + 2)
                        .sum::<i64>()
                        - redim as i64,
                    codim: None,
                    distinguished: e.distinguished,
                })
                .collect();
            let dist_min = orbits
                .iter()
                .filter(|o| o.distinguished)
                .map(|o| o.lambda)
                .min();
            if dist_min.is_none() {
                return Err(PairError::Descriptor(format!(
                    "nilpotent_data for class {label} marks no orbit as distinguished"
                )));
            }
            (LambdaSource::Supplied, orbits, dist_min)
        } else if auto.available() {
            match auto_orbits(&auto, alg, &rr, &s_elem, mask, redim, m)? {
                Some((orbits, dist_min)) => (LambdaSource::Auto, orbits, Some(dist_min)),
                None => (LambdaSource::Missing, Vec::new(), None),
            }
        } else {
            (LambdaSource::Missing, Vec::new(), None)
        };
        class_data.push(ClassData {
            label,
            positives,
            redim,
            source,
            orbits,
            lambda_distinguished,
        });
    }

    // mu per class: min over saturated subsets contained in the class
    // representative of (lambda_dist - redim)/2, empty subset contributing 0.
    let class_index_of_mask: HashMap<u64, usize> = class_list
        .iter()
        .enumerate()
        .map(|(i, &msk)| (msk, i))
        .collect();
    let class_values: Vec<Option<Rat>> = class_data
        .iter()
        .map(|c| {
            if c.redim == 0 {
                return Some(Rat::zero());
            }
            match c.source {
                LambdaSource::Missing => None,
                _ => c
                    .lambda_distinguished
                    .map(|lam| rat(lam - c.redim as i64, 1) / rat_int(2)),
            }
        })
        .collect();
    let mut mu_per_class: Vec<Option<Rat>> = Vec::new();
    for &mask in &class_list {
        let mut mu = Some(Rat::zero());
        for &sub in &saturated_subsets {
            if sub & !mask != 0 {
                continue;
            }
            let c_idx = class_index_of_mask[&canonical(sub)];
            match (mu.clone(), class_values[c_idx].clone()) {
                (Some(cur), Some(v)) => {
                    if v < cur {
                        mu = Some(v);
                    }
                }
                _ => {
                    mu = None;
                    break;
                }
            }
        }
        mu_per_class.push(mu);
    }

    // Assemble.
    let mut classes = Vec::new();
    let mut strata = Vec::new();
    for (idx, data) in class_data.into_iter().enumerate() {
        let mu = mu_per_class[idx].clone();
        for orbit in &data.orbits {
            strata.push(PairStratum {
                class_index: idx,
                class_label: data.label.clone(),
                orbit_label: orbit.label.clone(),
                codim: orbit.codim,
                lambda: orbit.lambda,
                trace_t: (rat_int(orbit.lambda) + rat_int(data.redim as i64)) / rat_int(2),
                mu_bound: mu.clone(),
                conic: true,
                distinguished: orbit.distinguished,
            });
        }
        classes.push(PairClass {
            label: data.label,
            positives: data.positives,
            redim: data.redim,
            source: data.source,
            orbits: data.orbits,
            lambda_distinguished: data.lambda_distinguished,
            mu,
        });
    }
    strata.sort_by(|a, b| {
        let ka = (a.codim.unwrap_or(usize::MAX), a.class_index, &a.orbit_label);
        let kb = (b.codim.unwrap_or(usize::MAX), b.class_index, &b.orbit_label);
        ka.cmp(&kb)
    });
    let complete = classes
        .iter()
        .all(|c| c.source != LambdaSource::Missing);
    let mu_p = {
        let mut mu = Some(Rat::zero());
        for v in &class_values {
            match (mu.clone(), v.clone()) {
                (Some(cur), Some(val)) => {
                    if val < cur {
                        mu = Some(val);
                    }
                }
                _ => {
                    mu = None;
                    break;
                }
            }
        }
        mu
    };
    Ok(PairAnalysis {
        restricted_mults: rr.mult.clone(),
        rank: rr.dim_a,
        dim_p: rr.dim_p,
        classes,
        strata,
        mu_p,
        complete,
    })
}

/// `[V, V]` inside the algebra: span closure of pairwise brackets.
fn derived_subalgebra(
    alg: &ChevalleyAlgebra,
    basis: &[Element],
) -> Result<Vec<Element>, PairError> {
    let mut brackets: Vec<Element> = Vec::new();
    for (i, x) in basis.iter().enumerate() {
        for y in basis.iter().skip(i + 1) {
            let b = alg.bracket(x, y)?;
            if b.iter().any(|c| !c.is_zero()) {
                brackets.push(b);
            }
        }
    }
    if brackets.is_empty() {
        return Ok(Vec::new());
    }
    // Row-reduce to an independent spanning set.
    let m = QMatrix::from_rows(brackets.clone());
    let rank = m.rank();
    let mut independent: Vec<Element> = Vec::new();
    for b in brackets {
        if independent.len() == rank {
            break;
        }
        let mut trial = independent.clone();
        trial.push(b.clone());
        if QMatrix::from_rows(trial.clone()).rank() == trial.len() {
            independent = trial;
        }
    }
    Ok(independent)
}

/// Automatic orbit data for a class whose reduced subpair is of group type
/// with type A factors. Returns None when a sigma-stable factor blocks the
/// computation.
#[allow(clippy::too_many_arguments)]
fn auto_orbits(
    auto: &AutoContext,
    alg: &ChevalleyAlgebra,
    rr: &RestrictedRoots,
    s_elem: &Element,
    mask: u64,
    redim: usize,
    m: usize,
) -> Result<Option<(Vec<PairOrbit>, i64)>, PairError> {
    use super::{type_a_factors, RootSubset};
    let rs = alg.root_system();
    // Big-root subset of the centralizer: roots whose restriction vanishes
    // at the witness, i.e. restriction zero or in the class.
    let class_values: Vec<Vec<Rat>> = (0..m)
        .filter(|k| mask & (1 << k) != 0)
        .flat_map(|k| {
            vec![
                rr.roots[k].clone(),
                rr.roots[k].iter().map(|c| -c.clone()).collect(),
            ]
        })
        .collect();
    let mut hat_positives = BTreeSet::new();
    for k in 0..rs.num_positive() {
        let restriction = auto.root_restriction(k);
        if restriction.iter().all(|c| c.is_zero()) || class_values.contains(&restriction) {
            hat_positives.insert(k);
        }
    }
    let hat = RootSubset::from_positives(hat_positives);
    let factors = match type_a_factors(rs, &hat) {
        Ok(f) => f,
        Err(StrataError::UnsupportedFactor { .. }) => return Ok(None),
        Err(e) => return Err(PairError::Strata(Box::new(e))),
    };
    if factors.is_empty() {
        // Reduced part came out nonzero but the subset has no factors: the
        // class has no roots, contradiction.
        return Err(PairError::Internal("empty factor list for nonzero class".into()));
    }
    // Pair up factors under sigma.
    let perm = auto.signed_perm.as_ref().expect("auto context");
    let root_image = |root_k: usize| -> Option<usize> {
        let basis_idx = alg.e_index(root_k);
        let (target, _) = perm[basis_idx];
        if target < alg.rank() {
            None
        } else {
            Some(target - alg.rank())
        }
    };
    let factor_of_root: HashMap<usize, usize> = factors
        .iter()
        .enumerate()
        .flat_map(|(fi, f)| f.chain.iter().map(move |&r| (r, fi)))
        .collect();
    // Factor membership for arbitrary roots of the subset: non-orthogonality
    // with the chain.
    let factor_containing = |root_k: usize| -> Option<usize> {
        factors.iter().enumerate().find_map(|(fi, f)| {
            f.chain
                .iter()
                .any(|&b| !rs.inner(rs.root(root_k), rs.root(b)).is_zero())
                .then_some(fi)
        })
    };
    let _ = factor_of_root;
    let mut partner = vec![usize::MAX; factors.len()];
    for (fi, f) in factors.iter().enumerate() {
        let img_root = match root_image(f.chain[0]) {
            Some(r) => r,
            None => return Ok(None),
        };
        let Some(fj) = factor_containing(if rs.is_positive(img_root) {
            img_root
        } else {
            rs.negative_of(img_root)
        }) else {
            return Err(PairError::Internal(
                "involution image of a centralizer root left the centralizer".into(),
            ));
        };
        if fj == fi {
            // sigma-stable factor: not group type.
            return Ok(None);
        }
        partner[fi] = fj;
    }
    // Collect unordered pairs deterministically.
    let mut pair_reps: Vec<usize> = (0..factors.len())
        .filter(|&fi| fi < partner[fi])
        .collect();
    if pair_reps.len() * 2 != factors.len() {
        return Err(PairError::Internal("factor pairing is not an involution".into()));
    }
    pair_reps.sort_by_key(|&fi| {
        (
            std::cmp::Reverse(factors[fi].size),
            factors[fi].chain.clone(),
        )
    });
    // Sanity: the reduced p-part dimension must match the paired factors.
    let expected_redim: usize = pair_reps
        .iter()
        .map(|&fi| {
            let n = factors[fi].size as usize;
            n * n - 1
        })
        .sum();
    if expected_redim != redim {
        return Err(PairError::Internal(format!(
            "reduced dimension {redim} does not match paired factors ({expected_redim})"
        )));
    }

    // Cartesian product of partitions over the factor pairs.
    let mut tuples: Vec<Vec<Partition>> = vec![Vec::new()];
    for &fi in &pair_reps {
        let options = partitions_of(factors[fi].size);
        let mut next = Vec::with_capacity(tuples.len() * options.len());
        for t in &tuples {
            for p in &options {
                let mut t2 = t.clone();
                t2.push(p.clone());
                next.push(t2);
            }
        }
        tuples = next;
    }

    let dim = alg.dim();
    let sigma = auto.sigma;
    // dim a_P^perp.
    let class_rows: Vec<Vec<Rat>> = (0..m)
        .filter(|k| mask & (1 << k) != 0)
        .map(|k| rr.roots[k].clone())
        .collect();
    let a_perp_dim = if class_rows.is_empty() {
        rr.dim_a
    } else {
        QMatrix::from_rows(class_rows).kernel_basis().len()
    };

    let mut orbits = Vec::new();
    for tuple in tuples {
        let mut lambda_formula: i64 = 0;
        let mut n_first = alg.zero_element();
        for (&fi, p) in pair_reps.iter().zip(&tuple) {
            lambda_formula += centralizer_dim_sln(p) as i64;
            let nf = jordan_nilpotent(alg, &factors[fi].chain, p);
            for (a, b) in n_first.iter_mut().zip(&nf) {
                *a = &*a + b;
            }
        }
        // n = n_first - sigma(n_first) lies in p with the labeled Jordan type.
        let image = apply_matrix(sigma, &n_first);
        let n_elem: Element = n_first
            .iter()
            .zip(&image)
            .map(|(a, b)| a - b)
            .collect();
        let x: Element = s_elem
            .iter()
            .zip(&n_elem)
            .map(|(a, b)| a + b)
            .collect();
        // dim k^x: kernel of ad(x) stacked with (sigma - 1).
        let ad = alg.ad(&x)?;
        let mut rows: Vec<Vec<Rat>> = (0..dim)
            .map(|i| (0..dim).map(|j| ad.get(i, j).clone()).collect())
            .collect();
        for i in 0..dim {
            let mut row: Vec<Rat> = (0..dim).map(|j| sigma.get(i, j).clone()).collect();
            row[i] = &row[i] - Rat::one();
            rows.push(row);
        }
        let k_centralizer = QMatrix::from_rows(rows).kernel_basis().len();
        // codim of the stratum inside p.
        let codim = rr.dim_p + k_centralizer - a_perp_dim - rr.dim_k;
        if codim as i64 != lambda_formula {
            return Err(PairError::Internal(format!(
                "stratum codimension {codim} disagrees with partition formula {lambda_formula}"
            )));
        }
        let label = tuple
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join("x");
        let distinguished = tuple.iter().all(|p| p.parts().len() == 1);
        orbits.push(PairOrbit {
            label,
            lambda: lambda_formula,
            codim: Some(codim),
            distinguished,
        });
    }
    // Distinguished minimum: in type A only the regular tuple is
    // distinguished.
    let dist_min = orbits
        .iter()
        .filter(|o| o.distinguished)
        .map(|o| o.lambda)
        .min()
        .expect("regular orbit always present");
    Ok(Some((orbits, dist_min)))
}

/// Nice-pair check: `lambda > 0` for the distinguished data of every class
/// with nonzero reduced part. Returns the verdict (None when data is
/// missing), the violating classes, and the classes lacking data.
pub fn nice_pair_check(analysis: &PairAnalysis) -> (Option<bool>, Vec<(String, i64)>, Vec<String>) {
    let mut violations = Vec::new();
    let mut missing = Vec::new();
    for class in &analysis.classes {
        if class.redim == 0 {
            continue;
        }
        match class.source {
            LambdaSource::Missing => missing.push(class.label.clone()),
            _ => {
                if let Some(lam) = class.lambda_distinguished {
                    if lam <= 0 {
                        violations.push((class.label.clone(), lam));
                    }
                }
            }
        }
    }
    let verdict = if !missing.is_empty() {
        None
    } else {
        Some(violations.is_empty())
    };
    (verdict, violations, missing)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sl2_so2() -> SymmetricPairDescriptor {
        // sigma = negative transpose on sl_2: h -> -h, e -> -f, f -> -e.
        let algebra = ChevalleyAlgebra::from_type("A1").unwrap();
        let mut sigma = QMatrix::zero(3, 3);
        sigma.set(0, 0, -Rat::one());
        sigma.set(2, 1, -Rat::one());
        sigma.set(1, 2, -Rat::one());
        let cartan_subspace = vec![vec![Rat::one(), Rat::zero(), Rat::zero()]];
        SymmetricPairDescriptor {
            label: "sl2-so2".into(),
            algebra,
            sigma,
            cartan_subspace,
            nilpotent_data: BTreeMap::new(),
        }
    }

    #[test]
    fn sl2_so2_restricted_roots() {
        let pair = sl2_so2();
        let rr = restricted_roots(&pair).unwrap();
        assert_eq!(rr.dim_a, 1);
        assert_eq!(rr.n_positive, 1);
        assert_eq!(rr.mult, vec![1, 1]);
        assert_eq!(rr.m_dim, 0);
        assert_eq!(rr.dim_p, 2);
        assert_eq!(rr.dim_k, 1);
        assert_eq!(rr.roots[0], vec![rat_int(2)]);
    }

    #[test]
    fn diagonal_pair_restricted_roots_group_type() {
        let pair = SymmetricPairDescriptor::diagonal("A1").unwrap();
        let rr = restricted_roots(&pair).unwrap();
        assert_eq!(rr.dim_a, 1);
        assert_eq!(rr.n_positive, 1);
        // Group-type pairs carry each root of g with multiplicity 2.
        assert_eq!(rr.mult, vec![2, 2]);
        assert_eq!(rr.m_dim, 1);
        assert_eq!(rr.dim_p, 3);
        assert_eq!(rr.dim_k, 3);
    }

    #[test]
    fn rejects_non_involution() {
        let mut pair = sl2_so2();
        pair.sigma.set(0, 0, Rat::one());
        pair.sigma.set(1, 1, Rat::one());
        pair.sigma.set(1, 2, Rat::zero());
        pair.sigma.set(2, 1, Rat::zero());
        pair.sigma.set(2, 2, -Rat::one());
        // This sigma is involutive but not an automorphism: [h, e] = 2e but
        // [sigma h, sigma e] = [h, e] while sigma[h,e] = 2e. Break it harder:
        // h -> h, e -> e, f -> -f is not bracket-preserving.
        assert!(restricted_roots(&pair).is_err());
    }

    #[test]
    fn rejects_non_maximal_cartan_subspace() {
        // In the diagonal A1 pair, take a = 0-dimensional slice spanned by a
        // non-maximal choice: a single nilpotent-direction vector is not even
        // in p; use instead a shorter valid vector to trigger the maximality
        // check: the subspace {0} is not allowed, so use a p-vector that is
        // not semisimple-generic: (e, -e) direction.
        let pair = SymmetricPairDescriptor::diagonal("A1").unwrap();
        let mut bad = pair.clone();
        let dim = bad.algebra.dim();
        let mut v = vec![Rat::zero(); dim];
        // e-vector of block 1 minus e-vector of block 2 lies in p.
        v[bad.algebra.e_index(0)] = Rat::one();
        let img = bad
            .sigma
            .apply(&v)
            .unwrap()
            .iter()
            .map(|c| -c.clone())
            .collect::<Vec<_>>();
        let w: Vec<Rat> = v.iter().zip(&img).map(|(a, b)| (a + b) / rat_int(2)).collect();
        bad.cartan_subspace = vec![w];
        assert!(restricted_roots(&bad).is_err());
    }

    #[test]
    fn analyze_diagonal_a1() {
        let pair = SymmetricPairDescriptor::diagonal("A1").unwrap();
        let analysis = analyze_pair(&pair, 4).unwrap();
        assert!(analysis.complete);
        assert_eq!(analysis.classes.len(), 2);
        assert_eq!(analysis.strata.len(), 3);
        let codims: Vec<Option<usize>> = analysis.strata.iter().map(|s| s.codim).collect();
        assert_eq!(codims, vec![Some(0), Some(1), Some(3)]);
        assert_eq!(analysis.mu_p, Some(rat_int(-1)));
        let (nice, violations, missing) = nice_pair_check(&analysis);
        assert_eq!(nice, Some(true));
        assert!(violations.is_empty() && missing.is_empty());
    }

    #[test]
    fn analyze_sl2_so2_without_data_is_incomplete() {
        let pair = sl2_so2();
        let analysis = analyze_pair(&pair, 4).unwrap();
        assert!(!analysis.complete);
        let (nice, _, missing) = nice_pair_check(&analysis);
        assert_eq!(nice, None);
        assert_eq!(missing, vec!["P[0]".to_string()]);
    }

    #[test]
    fn analyze_sl2_so2_with_supplied_data() {
        let mut pair = sl2_so2();
        pair.nilpotent_data.insert(
            "P[0]".into(),
            vec![OrbitData {
                label: "reg".into(),
                weights: vec![2],
                distinguished: true,
            }],
        );
        let analysis = analyze_pair(&pair, 4).unwrap();
        assert!(analysis.complete);
        let class = analysis
            .classes
            .iter()
            .find(|c| c.label == "P[0]")
            .unwrap();
        assert_eq!(class.redim, 2);
        // lambda = (2 + 2) - 2 = 2.
        assert_eq!(class.lambda_distinguished, Some(2));
        let (nice, violations, _) = nice_pair_check(&analysis);
        assert_eq!(nice, Some(true));
        assert!(violations.is_empty());
    }

    #[test]
    fn non_nice_supplied_data_reports_witness() {
        let mut pair = sl2_so2();
        pair.nilpotent_data.insert(
            "P[0]".into(),
            vec![OrbitData {
                label: "reg".into(),
                weights: vec![0],
                distinguished: true,
            }],
        );
        let analysis = analyze_pair(&pair, 4).unwrap();
        let (nice, violations, _) = nice_pair_check(&analysis);
        assert_eq!(nice, Some(false));
        assert_eq!(violations, vec![("P[0]".to_string(), 0)]);
    }
}
