//! Stratification of a semisimple Lie algebra by closed symmetric root
//! subsets and nilpotent orbits of the associated centralizers, with the
//! per-stratum invariants (codimension, trace of the positive vector field,
//! root lower bound) that feed the tameness verdicts.
//!
//! A class is a closed symmetric subset `P` of the root system up to Weyl
//! conjugacy. To `P` belong the centralizer `q_P = h_P + g_P`, the generic
//! points of `(h_P^perp)'`, and one stratum per nilpotent orbit of `q_P`.
//! Only saturated `P` (those arising as `{alpha : alpha(s) = 0}` for some
//! semisimple `s`) carry strata; a non-saturated subset is replaced by its
//! saturation.

pub mod pair;

use crate::exact::{rat, rat_int, QMatrix, Rat};
use crate::liealg::{
    centralizer_dim_sln, jordan_nilpotent, partitions_of, AlgebraError, ChevalleyAlgebra,
    Partition, RootSystem, RootSystemError,
};
use num::Zero;
use std::collections::BTreeSet;
use thiserror::Error;

pub use pair::{
    analyze_pair, OrbitData, PairAnalysis, PairClass, PairError, PairStratum,
    SymmetricPairDescriptor,
};

#[derive(Debug, Error)]
pub enum StrataError {
    #[error("rank {0} exceeds the enumeration cap {1}; refusing brute-force enumeration")]
    RankCapExceeded(usize, usize),
    #[error("Weyl group enumeration failed: {0}")]
    Weyl(#[from] RootSystemError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("no generic point exists: subset is not saturated (saturation adds {0} roots)")]
    NotSaturated(usize),
    #[error("unsupported non-type-A factor of rank {rank} with {roots} roots; supply nilpotent data")]
    UnsupportedFactor { rank: usize, roots: usize },
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

/// Default cap on the rank for brute-force subset enumeration.
pub const DEFAULT_RANK_CAP: usize = 4;

const WEYL_CAP: usize = 40_000;

/// A closed symmetric subset of the roots, stored by its positive members.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RootSubset {
    positives: BTreeSet<usize>,
}

impl RootSubset {
    pub fn from_positives(positives: impl IntoIterator<Item = usize>) -> Self {
        RootSubset {
            positives: positives.into_iter().collect(),
        }
    }

    pub fn empty() -> Self {
        RootSubset {
            positives: BTreeSet::new(),
        }
    }

    pub fn full(rs: &RootSystem) -> Self {
        RootSubset {
            positives: (0..rs.num_positive()).collect(),
        }
    }

    pub fn positives(&self) -> &BTreeSet<usize> {
        &self.positives
    }

    /// All members, negatives included.
    pub fn members(&self, rs: &RootSystem) -> Vec<usize> {
        let mut v: Vec<usize> = self.positives.iter().copied().collect();
        v.extend(self.positives.iter().map(|&k| rs.negative_of(k)));
        v.sort_unstable();
        v
    }

    pub fn size(&self) -> usize {
        self.positives.len() * 2
    }

    pub fn contains(&self, rs: &RootSystem, k: usize) -> bool {
        if rs.is_positive(k) {
            self.positives.contains(&k)
        } else {
            self.positives.contains(&rs.negative_of(k))
        }
    }

    pub fn is_subset_of(&self, other: &RootSubset) -> bool {
        self.positives.is_subset(&other.positives)
    }

    /// Canonical label, e.g. `P[0,2]`.
    pub fn label(&self) -> String {
        format!(
            "P[{}]",
            self.positives
                .iter()
                .map(|k| k.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }

    fn mask(&self) -> u64 {
        self.positives.iter().fold(0u64, |m, &k| m | (1u64 << k))
    }

    fn from_mask(mask: u64) -> Self {
        RootSubset {
            positives: (0..64).filter(|k| mask & (1 << k) != 0).collect(),
        }
    }

    /// Direct check of `P = -P` (automatic here) and `(P + P) cap Phi <= P`.
    pub fn is_closed(&self, rs: &RootSystem) -> bool {
        let members = self.members(rs);
        for &a in &members {
            for &b in &members {
                if b == rs.negative_of(a) {
                    continue;
                }
                if let Some(s) = rs.sum_root(a, b) {
                    if !self.contains(rs, s) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

fn canonical_mask(rs: &RootSystem, weyl: &[Vec<u16>], mask: u64) -> u64 {
    let positives: Vec<usize> = (0..rs.num_positive())
        .filter(|k| mask & (1 << k) != 0)
        .collect();
    let mut best = u64::MAX;
    for w in weyl {
        let mut m = 0u64;
        for &k in &positives {
            let img = w[k] as usize;
            let pos = if rs.is_positive(img) {
                img
            } else {
                rs.negative_of(img)
            };
            m |= 1 << pos;
        }
        best = best.min(m);
    }
    best
}

/// All closed symmetric subsets of the roots, one canonical representative
/// per Weyl-conjugacy class, sorted by size then mask.
///
/// Brute force with incremental pruning over the positive roots in height
/// order: differences of decided members are checked at inclusion time, sums
/// at the decision point of the sum root.
pub fn closed_symmetric_subsets(
    rs: &RootSystem,
    rank_cap: usize,
) -> Result<Vec<RootSubset>, StrataError> {
    if rs.rank() > rank_cap {
        return Err(StrataError::RankCapExceeded(rs.rank(), rank_cap));
    }
    let m = rs.num_positive();
    assert!(m <= 63, "mask width");
    // sum_table[k] = pairs (i, j), i <= j < k, with root_i + root_j = root_k.
    let mut sum_table: Vec<Vec<(usize, usize)>> = vec![Vec::new(); m];
    // diff_table[k] = pairs (i, j) with root_k - root_i = root_j (i, j < k).
    let mut diff_table: Vec<Vec<(usize, usize)>> = vec![Vec::new(); m];
    for i in 0..m {
        for j in i..m {
            if let Some(s) = rs.sum_root(i, j) {
                if rs.is_positive(s) {
                    sum_table[s].push((i, j));
                    diff_table[s].push((i, j));
                    if i != j {
                        diff_table[s].push((j, i));
                    }
                }
            }
        }
    }

    let found = enumerate_closed_masks(m, &sum_table, &diff_table);

    let weyl = rs.weyl_group(WEYL_CAP)?;
    let mut classes: BTreeSet<u64> = BTreeSet::new();
    for mask in found {
        classes.insert(canonical_mask(rs, &weyl, mask));
    }
    let mut out: Vec<RootSubset> = classes.into_iter().map(RootSubset::from_mask).collect();
    out.sort_by_key(|s| (s.size(), s.mask()));
    for s in &out {
        debug_assert!(s.is_closed(rs));
    }
    Ok(out)
}

/// Depth-first include/exclude enumeration of closed symmetric subsets over
/// positive roots ordered so that sums come later and differences earlier.
/// `sum_table[k]` lists pairs summing to root `k`; `diff_table[k]` lists
/// pairs `(i, j)` with `root_k - root_i = root_j`.
pub(crate) fn enumerate_closed_masks(
    m: usize,
    sum_table: &[Vec<(usize, usize)>],
    diff_table: &[Vec<(usize, usize)>],
) -> Vec<u64> {
    fn rec(
        k: usize,
        m: usize,
        mask: u64,
        sum_table: &[Vec<(usize, usize)>],
        diff_table: &[Vec<(usize, usize)>],
        found: &mut Vec<u64>,
    ) {
        if k == m {
            found.push(mask);
            return;
        }
        // Exclude root k: forbidden if two included roots sum to it.
        if !sum_table[k]
            .iter()
            .any(|&(i, j)| mask & (1 << i) != 0 && mask & (1 << j) != 0)
        {
            rec(k + 1, m, mask, sum_table, diff_table, found);
        }
        // Include root k: every difference with an included root must be
        // included already (differences precede k in the order).
        let ok = diff_table[k]
            .iter()
            .all(|&(i, j)| mask & (1 << i) == 0 || mask & (1 << j) != 0);
        if ok {
            rec(k + 1, m, mask | (1 << k), sum_table, diff_table, found);
        }
    }
    let mut found = Vec::new();
    rec(0, m, 0, sum_table, diff_table, &mut found);
    found
}

/// Rows of the evaluation matrix: row per root in `subset`, columns indexed
/// by simple coroots; entry `<alpha, alpha_j_check>`.
fn constraint_matrix(rs: &RootSystem, subset: &RootSubset) -> QMatrix {
    let rows: Vec<Vec<Rat>> = subset
        .positives
        .iter()
        .map(|&k| {
            (0..rs.rank())
                .map(|j| {
                    let pairing: i64 = (0..rs.rank())
                        .map(|i| rs.cartan()[j][i] * rs.root(k)[i])
                        .sum();
                    rat_int(pairing)
                })
                .collect()
        })
        .collect();
    if rows.is_empty() {
        QMatrix::zero(0, rs.rank())
    } else {
        QMatrix::from_rows(rows)
    }
}

/// Basis of `h_P^perp = { H : alpha(H) = 0 for alpha in P }` in coroot coordinates.
pub fn h_perp_basis(rs: &RootSystem, subset: &RootSubset) -> Vec<Vec<Rat>> {
    constraint_matrix(rs, subset).kernel_basis()
}

/// The saturation of `P`: all roots vanishing on `h_P^perp`.
pub fn saturate(rs: &RootSystem, subset: &RootSubset) -> RootSubset {
    let kernel = h_perp_basis(rs, subset);
    let positives = (0..rs.num_positive())
        .filter(|&k| {
            kernel
                .iter()
                .all(|h| rs.eval_on_coroot_coords(k, h).is_zero())
        })
        .collect();
    RootSubset { positives }
}

pub fn is_saturated(rs: &RootSystem, subset: &RootSubset) -> bool {
    saturate(rs, subset) == *subset
}

/// Saturated classes: the saturations of all classes, re-deduplicated, in
/// (size, mask) order. These are exactly the centralizer types of semisimple
/// elements.
pub fn saturated_classes(
    rs: &RootSystem,
    rank_cap: usize,
) -> Result<Vec<RootSubset>, StrataError> {
    let weyl = rs.weyl_group(WEYL_CAP)?;
    let mut masks = BTreeSet::new();
    for class in closed_symmetric_subsets(rs, rank_cap)? {
        let sat = saturate(rs, &class);
        masks.insert(canonical_mask(rs, &weyl, sat.mask()));
    }
    let mut out: Vec<RootSubset> = masks.into_iter().map(RootSubset::from_mask).collect();
    out.sort_by_key(|s| (s.size(), s.mask()));
    Ok(out)
}

/// Deterministic point of `(h_P^perp)'` in coroot coordinates: kills exactly
/// the roots of `P`. Fails on non-saturated subsets.
pub fn generic_point(rs: &RootSystem, subset: &RootSubset) -> Result<Vec<Rat>, StrataError> {
    let kernel = h_perp_basis(rs, subset);
    let outside: Vec<usize> = (0..rs.num_positive())
        .filter(|k| !subset.positives.contains(k))
        .collect();
    if kernel.is_empty() {
        if outside.is_empty() {
            return Ok(vec![Rat::zero(); rs.rank()]);
        }
        let sat = saturate(rs, subset);
        return Err(StrataError::NotSaturated(
            sat.positives.len() - subset.positives.len(),
        ));
    }
    // Walk the curve t -> sum t^i K_i; for a saturated subset each excluded
    // root is a nonzero polynomial in t, so small integer t works.
    for t in 1i64..=(10 * (rs.num_positive() as i64 + 1) * (kernel.len() as i64 + 1)) {
        let mut point = vec![Rat::zero(); rs.rank()];
        let mut power = rat_int(1);
        for basis_vec in &kernel {
            for (j, c) in basis_vec.iter().enumerate() {
                point[j] = &point[j] + c * &power;
            }
            power = power * rat_int(t);
        }
        let valid = outside
            .iter()
            .all(|&k| !rs.eval_on_coroot_coords(k, &point).is_zero());
        if valid {
            return Ok(point);
        }
    }
    let sat = saturate(rs, subset);
    Err(StrataError::NotSaturated(
        sat.positives.len() - subset.positives.len(),
    ))
}

/// Centralizer data of a saturated class: `q_P = h_P + g_P`, its dimension
/// and rank, and a generic witness.
#[derive(Debug, Clone)]
pub struct SubpairInfo {
    pub subset: RootSubset,
    /// dim q_P = |P| + rank q_P.
    pub dim_s: usize,
    /// rank q_P = dim h_P.
    pub rank_s: usize,
    /// Reduced dimension; equals dim_s in the diagonal case.
    pub reduced_dim: usize,
    /// Generic point of `(h_P^perp)'` in coroot coordinates.
    pub witness: Vec<Rat>,
}

pub fn centralizer_of_class(
    rs: &RootSystem,
    subset: &RootSubset,
) -> Result<SubpairInfo, StrataError> {
    let witness = generic_point(rs, subset)?;
    let rank_s = if subset.positives.is_empty() {
        0
    } else {
        let rows: Vec<Vec<Rat>> = subset
            .positives
            .iter()
            .map(|&k| rs.root(k).iter().map(|&c| rat_int(c)).collect())
            .collect();
        QMatrix::from_rows(rows).rank()
    };
    let dim_s = subset.size() + rank_s;
    Ok(SubpairInfo {
        subset: subset.clone(),
        dim_s,
        rank_s,
        reduced_dim: dim_s,
        witness,
    })
}

/// One type A simple factor of `q_P`: the chain of its simple roots in
/// diagram order; the factor is `sl_size`.
#[derive(Debug, Clone)]
pub struct TypeAFactor {
    pub chain: Vec<usize>,
    pub size: u32,
}

/// Splits `q_P` into simple factors and requires each to be type A.
pub fn type_a_factors(
    rs: &RootSystem,
    subset: &RootSubset,
) -> Result<Vec<TypeAFactor>, StrataError> {
    // Base of the subsystem: positive members not expressible as a sum of two
    // positive members.
    let members: Vec<usize> = subset.positives.iter().copied().collect();
    let base: Vec<usize> = members
        .iter()
        .copied()
        .filter(|&gamma| {
            !members.iter().any(|&i| {
                members.iter().any(|&j| {
                    rs.sum_root(i, j) == Some(gamma)
                })
            })
        })
        .collect();
    // Connected components under non-orthogonality.
    let mut assigned = vec![usize::MAX; base.len()];
    let mut n_components = 0usize;
    for start in 0..base.len() {
        if assigned[start] != usize::MAX {
            continue;
        }
        let comp = n_components;
        n_components += 1;
        let mut stack = vec![start];
        assigned[start] = comp;
        while let Some(i) = stack.pop() {
            for j in 0..base.len() {
                if assigned[j] == usize::MAX
                    && !rs.inner(rs.root(base[i]), rs.root(base[j])).is_zero()
                {
                    assigned[j] = comp;
                    stack.push(j);
                }
            }
        }
    }
    let mut factors = Vec::new();
    let mut covered_roots = 0usize;
    for comp in 0..n_components {
        let nodes: Vec<usize> = (0..base.len())
            .filter(|&i| assigned[i] == comp)
            .map(|i| base[i])
            .collect();
        let r = nodes.len();
        // Type A means a simply-laced path: every bond single, no branch node.
        let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); r];
        let mut simply_laced = true;
        for i in 0..r {
            for j in 0..r {
                if i == j {
                    continue;
                }
                let p = rs.pairing(rs.root(nodes[i]), rs.root(nodes[j]));
                if p != 0 {
                    adjacency[i].push(j);
                    if p != -1 {
                        simply_laced = false;
                    }
                }
            }
        }
        let endpoints: Vec<usize> = (0..r).filter(|&i| adjacency[i].len() <= 1).collect();
        let is_path = adjacency.iter().all(|a| a.len() <= 2)
            && (r == 1 || endpoints.len() == 2);
        let component_roots = members
            .iter()
            .filter(|&&k| {
                // Root lies in this component iff it is supported on its base.
                let coords = rs.root(k);
                let in_span = nodes.iter().any(|&b| {
                    !rs.inner(coords, rs.root(b)).is_zero()
                });
                in_span
            })
            .count();
        if !simply_laced || !is_path || component_roots * 2 != r * (r + 1) {
            return Err(StrataError::UnsupportedFactor {
                rank: r,
                roots: component_roots * 2,
            });
        }
        // Order the chain from one endpoint.
        let mut order = Vec::with_capacity(r);
        let mut current = if r == 1 { 0 } else { endpoints[0] };
        let mut prev = usize::MAX;
        loop {
            order.push(nodes[current]);
            let next = adjacency[current].iter().copied().find(|&x| x != prev);
            match next {
                Some(nx) if order.len() < r => {
                    prev = current;
                    current = nx;
                }
                _ => break,
            }
        }
        if order.len() != r {
            return Err(StrataError::Internal("chain walk failed".into()));
        }
        covered_roots += component_roots * 2;
        factors.push(TypeAFactor {
            chain: order,
            size: (r + 1) as u32,
        });
    }
    if covered_roots != subset.size() {
        return Err(StrataError::Internal(
            "factor decomposition does not cover the subsystem".into(),
        ));
    }
    factors.sort_by_key(|f| (std::cmp::Reverse(f.size), f.chain.clone()));
    Ok(factors)
}

/// Builds the abstract root system of the subsystem `P` from its base.
pub fn sub_root_system(rs: &RootSystem, subset: &RootSubset) -> Result<RootSystem, StrataError> {
    let members: Vec<usize> = subset.positives.iter().copied().collect();
    let base: Vec<usize> = members
        .iter()
        .copied()
        .filter(|&gamma| {
            !members
                .iter()
                .any(|&i| members.iter().any(|&j| rs.sum_root(i, j) == Some(gamma)))
        })
        .collect();
    let r = base.len();
    let mut cartan = vec![vec![0i64; r]; r];
    for i in 0..r {
        for j in 0..r {
            cartan[i][j] = rs.pairing(rs.root(base[j]), rs.root(base[i]));
        }
    }
    RootSystem::from_cartan(cartan).map_err(StrataError::Weyl)
}

/// `mu` of the subpair attached to a saturated class: the minimum of
/// `(rank q_Q - dim q_Q) / 2` over the saturated classes `Q` of the
/// subsystem, the empty class contributing 0.
pub fn mu_invariant(rs: &RootSystem, subset: &RootSubset) -> Result<Rat, StrataError> {
    if subset.positives.is_empty() {
        return Ok(Rat::zero());
    }
    let sub = sub_root_system(rs, subset)?;
    let classes = saturated_classes(&sub, sub.rank().max(DEFAULT_RANK_CAP))?;
    let mut mu = Rat::zero();
    for class in classes {
        let info = centralizer_of_class(&sub, &class)?;
        let v = rat(info.rank_s as i64 - info.dim_s as i64, 2);
        if v < mu {
            mu = v;
        }
    }
    Ok(mu)
}

/// `delta(g) = (1 + u) / (1 - u)` where `u` is the minimum of
/// `rank q_P / dim q_P` over the saturated classes with `dim q_P > 0`.
pub fn delta_of_algebra(alg: &ChevalleyAlgebra, rank_cap: usize) -> Result<Rat, StrataError> {
    let rs = alg.root_system();
    let mut u: Option<Rat> = None;
    for class in saturated_classes(rs, rank_cap)? {
        let info = centralizer_of_class(rs, &class)?;
        if info.dim_s == 0 {
            continue;
        }
        let v = rat(info.rank_s as i64, info.dim_s as i64);
        if u.as_ref().is_none_or(|cur| v < *cur) {
            u = Some(v);
        }
    }
    let u = u.ok_or_else(|| StrataError::Internal("no class with positive dimension".into()))?;
    Ok((rat_int(1) + &u) / (rat_int(1) - &u))
}

/// One stratum `S_(P, O)`.
#[derive(Debug, Clone)]
pub struct Stratum {
    pub class_index: usize,
    pub class_label: String,
    /// One partition per type A factor of `q_P`, largest factor first.
    pub orbit: Vec<Partition>,
    pub orbit_label: String,
    pub codim: usize,
    pub trace_t: Rat,
    pub mu_bound: Rat,
    pub conic: bool,
}

/// A stratified algebra: the saturated classes with their centralizer data
/// and type A factors, and all strata.
#[derive(Debug)]
pub struct DiagonalStratification {
    pub classes: Vec<ClassInfo>,
    pub strata: Vec<Stratum>,
}

#[derive(Debug)]
pub struct ClassInfo {
    pub info: SubpairInfo,
    pub factors: Vec<TypeAFactor>,
    pub mu: Rat,
}

fn orbit_label(orbit: &[Partition]) -> String {
    if orbit.is_empty() {
        "0".to_string()
    } else {
        orbit
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join("x")
    }
}

/// Enumerates all strata of the adjoint stratification. Codimension is
/// computed from the exact kernel of `ad` at an explicit witness `s + n`
/// and cross-checked against the partition combinatorics.
pub fn enumerate_strata_diagonal(
    alg: &ChevalleyAlgebra,
    rank_cap: usize,
) -> Result<DiagonalStratification, StrataError> {
    let rs = alg.root_system();
    let l = rs.rank();
    let mut classes = Vec::new();
    let mut strata = Vec::new();
    for (class_index, subset) in saturated_classes(rs, rank_cap)?.into_iter().enumerate() {
        let info = centralizer_of_class(rs, &subset)?;
        let factors = type_a_factors(rs, &subset)?;
        let mu = mu_invariant(rs, &subset)?;
        debug_assert_eq!(mu, rat(info.rank_s as i64 - info.dim_s as i64, 2));
        let h_perp_dim = l - info.rank_s;
        let s_elem = alg.cartan_element(&info.witness);

        // Cartesian product of the factor partitions.
        let per_factor: Vec<Vec<Partition>> = factors
            .iter()
            .map(|f| partitions_of(f.size))
            .collect();
        let mut orbit_tuples: Vec<Vec<Partition>> = vec![Vec::new()];
        for options in &per_factor {
            let mut next = Vec::with_capacity(orbit_tuples.len() * options.len());
            for tuple in &orbit_tuples {
                for p in options {
                    let mut t = tuple.clone();
                    t.push(p.clone());
                    next.push(t);
                }
            }
            orbit_tuples = next;
        }

        for orbit in orbit_tuples {
            let mut x = s_elem.clone();
            let mut lambda_formula = 0u64;
            for (f, p) in factors.iter().zip(&orbit) {
                let n_f = jordan_nilpotent(alg, &f.chain, p);
                for (xi, ni) in x.iter_mut().zip(&n_f) {
                    *xi = &*xi + ni;
                }
                lambda_formula += centralizer_dim_sln(p);
            }
            let kernel_dim = alg.ad(&x)?.kernel_basis().len();
            let codim = kernel_dim - h_perp_dim;
            if codim as u64 != lambda_formula {
                return Err(StrataError::Internal(format!(
                    "kernel codimension {} disagrees with partition formula {} for {} orbit {}",
                    codim,
                    lambda_formula,
                    subset.label(),
                    orbit_label(&orbit)
                )));
            }
            let trace_t = (rat_int(codim as i64) + rat_int(info.dim_s as i64)) / rat_int(2);
            strata.push(Stratum {
                class_index,
                class_label: subset.label(),
                orbit_label: orbit_label(&orbit),
                orbit,
                codim,
                trace_t,
                mu_bound: mu.clone(),
                conic: true,
            });
        }
        classes.push(ClassInfo { info, factors, mu });
    }
    strata.sort_by(|a, b| {
        (a.codim, a.class_index, &a.orbit_label).cmp(&(b.codim, b.class_index, &b.orbit_label))
    });
    Ok(DiagonalStratification { classes, strata })
}

/// Checks the closure-order axiom on a stratum list: within one class chain,
/// dominance-smaller orbits have strictly larger codimension. Returns the
/// offending pair on failure.
pub fn closure_order_violations(strata: &[Stratum]) -> Vec<(String, String)> {
    let mut bad = Vec::new();
    for a in strata {
        for b in strata {
            if a.class_index != b.class_index || a.orbit_label == b.orbit_label {
                continue;
            }
            let comparable = a
                .orbit
                .iter()
                .zip(&b.orbit)
                .all(|(pa, pb)| pa.dominated_by(pb));
            if comparable && a.codim <= b.codim {
                bad.push((
                    format!("{} {}", a.class_label, a.orbit_label),
                    format!("{} {}", b.class_label, b.orbit_label),
                ));
            }
        }
    }
    bad
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(name: &str) -> RootSystem {
        RootSystem::from_type(name).unwrap()
    }

    #[test]
    fn classes_a1() {
        let r = rs("A1");
        let classes = closed_symmetric_subsets(&r, 4).unwrap();
        assert_eq!(classes.len(), 2);
        assert_eq!(classes[0].size(), 0);
        assert_eq!(classes[1].size(), 2);
    }

    #[test]
    fn classes_a2() {
        let r = rs("A2");
        let classes = closed_symmetric_subsets(&r, 4).unwrap();
        assert_eq!(classes.len(), 3);
        assert_eq!(
            classes.iter().map(|c| c.size()).collect::<Vec<_>>(),
            vec![0, 2, 6]
        );
    }

    #[test]
    fn classes_b2_include_nonsaturated_pair() {
        let r = rs("B2");
        let classes = closed_symmetric_subsets(&r, 4).unwrap();
        assert_eq!(classes.len(), 5);
        assert_eq!(
            classes.iter().map(|c| c.size()).collect::<Vec<_>>(),
            vec![0, 2, 2, 4, 8]
        );
        // The size-4 class (two orthogonal long roots) is not saturated:
        // its saturation is the full system.
        let pair = &classes[3];
        assert!(!is_saturated(&r, pair));
        assert_eq!(saturate(&r, pair), RootSubset::full(&r));
        assert_eq!(saturated_classes(&r, 4).unwrap().len(), 4);
    }

    #[test]
    fn rank_cap_refuses() {
        let r = rs("A4");
        assert!(matches!(
            closed_symmetric_subsets(&r, 3),
            Err(StrataError::RankCapExceeded(4, 3))
        ));
    }

    #[test]
    fn generic_points_kill_exactly_p() {
        for name in ["A2", "B2", "A3"] {
            let r = rs(name);
            for class in saturated_classes(&r, 4).unwrap() {
                let point = generic_point(&r, &class).unwrap();
                for k in 0..r.num_positive() {
                    let v = r.eval_on_coroot_coords(k, &point);
                    assert_eq!(
                        v.is_zero(),
                        class.positives().contains(&k),
                        "{name} {} root {k}",
                        class.label()
                    );
                }
            }
        }
    }

    #[test]
    fn centralizer_dims_a2() {
        let r = rs("A2");
        let classes = saturated_classes(&r, 4).unwrap();
        let dims: Vec<(usize, usize)> = classes
            .iter()
            .map(|c| {
                let i = centralizer_of_class(&r, c).unwrap();
                (i.dim_s, i.rank_s)
            })
            .collect();
        assert_eq!(dims, vec![(0, 0), (3, 1), (8, 2)]);
    }

    #[test]
    fn full_class_witness_is_zero() {
        let r = rs("A2");
        let full = RootSubset::full(&r);
        let info = centralizer_of_class(&r, &full).unwrap();
        assert!(info.witness.iter().all(|c| c.is_zero()));
    }

    #[test]
    fn strata_sl2() {
        let g = ChevalleyAlgebra::from_type("A1").unwrap();
        let s = enumerate_strata_diagonal(&g, 4).unwrap();
        assert_eq!(s.strata.len(), 3);
        let codims: Vec<usize> = s.strata.iter().map(|x| x.codim).collect();
        assert_eq!(codims, vec![0, 1, 3]);
        let regular = &s.strata[1];
        assert_eq!(regular.trace_t, rat_int(2));
        assert_eq!(regular.mu_bound, rat_int(-1));
        let zero = &s.strata[2];
        assert_eq!(zero.trace_t, rat_int(3));
        assert_eq!(zero.mu_bound, rat_int(-1));
        assert!(s.strata.iter().all(|x| x.conic));
    }

    #[test]
    fn strata_sl3() {
        let g = ChevalleyAlgebra::from_type("A2").unwrap();
        let s = enumerate_strata_diagonal(&g, 4).unwrap();
        assert_eq!(s.strata.len(), 6);
        let codims: Vec<usize> = s.strata.iter().map(|x| x.codim).collect();
        assert_eq!(codims, vec![0, 1, 2, 3, 4, 8]);
        assert!(closure_order_violations(&s.strata).is_empty());
    }

    #[test]
    fn mu_values() {
        let r = rs("A1");
        assert_eq!(mu_invariant(&r, &RootSubset::full(&r)).unwrap(), rat_int(-1));
        let r = rs("A2");
        assert_eq!(mu_invariant(&r, &RootSubset::full(&r)).unwrap(), rat_int(-3));
        assert_eq!(mu_invariant(&r, &RootSubset::empty()).unwrap(), rat_int(0));
    }

    #[test]
    fn delta_sl_n() {
        for n in 2..=5usize {
            let g = ChevalleyAlgebra::from_type(&format!("A{}", n - 1)).unwrap();
            let delta = delta_of_algebra(&g, 4).unwrap();
            assert_eq!(delta, rat_int(1) + rat(2, n as i64), "sl_{n}");
        }
    }

    #[test]
    fn trace_positive_off_open_stratum() {
        for name in ["A1", "A2", "A3"] {
            let g = ChevalleyAlgebra::from_type(name).unwrap();
            let s = enumerate_strata_diagonal(&g, 4).unwrap();
            for st in &s.strata {
                if st.codim > 0 {
                    assert!(st.trace_t > Rat::zero());
                    // mu + t equals (rank q_P + lambda)/2 >= rank q_P >= 1.
                    assert!(&st.mu_bound + &st.trace_t >= rat_int(1));
                } else {
                    assert!(st.trace_t.is_zero());
                }
            }
        }
    }
}
