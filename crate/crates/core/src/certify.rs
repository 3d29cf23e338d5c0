//! Assembles certificate reports: per-stratum records with tameness
//! verdicts, global verdicts, the zero-stratum bound with its Fourier-route
//! cross-check, and the quasi-b-function verification suite.

use crate::exact::{format_rat, rat_int, Rat};
use crate::liealg::ChevalleyAlgebra;
use crate::quasib::{b_n_poly, certify_membership, delta_tame_along, TameVerdictInput};
use crate::strata::{
    analyze_pair, enumerate_strata_diagonal, pair::nice_pair_check, pair::LambdaSource,
    delta_of_algebra, PairError, StrataError, SymmetricPairDescriptor,
};
use crate::weyl::{euler_field, WeightVector, WeylElement};
use num::{One, Signed};
use serde::Serialize;
use sha2::{Digest, Sha256};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CertifyError {
    #[error(transparent)]
    Strata(#[from] StrataError),
    #[error(transparent)]
    Pair(#[from] PairError),
    #[error(transparent)]
    Algebra(#[from] crate::liealg::AlgebraError),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub const REPORT_SCHEMA: u32 = 1;

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Provenance {
    pub input_hash: String,
    pub tool_version: String,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct VerdictRecord {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<String>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct StratumRecord {
    pub class: String,
    pub orbit: String,
    pub codim: Option<u64>,
    pub trace_t: String,
    pub mu_bound: Option<String>,
    pub conic: bool,
    pub integer_roots_assumed: bool,
    pub delta_local: Option<String>,
    pub verdict: VerdictRecord,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct GlobalVerdicts {
    pub tame: bool,
    pub conic_tame: bool,
    pub weakly_tame: bool,
    pub delta_sup: String,
    pub nice_pair: Option<bool>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ZeroStratumRecord {
    pub mu: String,
    pub trace: String,
    pub tame_at_zero: bool,
    pub fourier_route_bound: String,
    pub fourier_consistent: bool,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CertificateReport {
    pub schema: u32,
    pub subject: String,
    pub provenance: Provenance,
    pub strata: Vec<StratumRecord>,
    pub global: GlobalVerdicts,
    pub zero_stratum: Option<ZeroStratumRecord>,
    pub assumptions: Vec<String>,
    pub implications: Vec<String>,
}

impl CertificateReport {
    /// Canonical JSON rendering: fixed field order, two-space indentation.
    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// True when the report certifies at least the weakest global property.
    pub fn certified(&self) -> bool {
        self.global.tame || self.global.conic_tame || self.global.weakly_tame
    }
}

fn tool_version() -> String {
    env!("CARGO_PKG_VERSION").to_string()
}

fn input_hash(payload: &str) -> String {
    let mut hasher = Sha256::new();
    hasher.update(payload.as_bytes());
    hasher
        .finalize()
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

fn infinity_or(r: Option<&Rat>) -> String {
    match r {
        Some(v) => format_rat(v),
        None => "infinity".to_string(),
    }
}

const CONIC_ASSUMPTION: &str =
    "singular support is conic for every stratum field: the quasi-b-functions along strata \
     are monodromic for graded systems, and the stratum fields do not depend on the system";

/// Local integrability exponent of one stratum: `-trace/mu` when `mu < 0`,
/// unbounded otherwise.
fn delta_local(trace: &Rat, mu: &Rat) -> Option<Rat> {
    if mu.is_negative() {
        Some(-(trace / mu))
    } else {
        None
    }
}

fn implications(global: &GlobalVerdicts) -> Vec<String> {
    let mut out = Vec::new();
    if global.weakly_tame {
        out.push(
            "no quotient of the system is supported inside the singular hypersurface, so \
             solutions are determined by their restriction to the regular locus"
                .to_string(),
        );
    }
    if global.tame {
        out.push(
            "distribution solutions on a real form are locally integrable functions".to_string(),
        );
    }
    if global.tame && global.delta_sup != "infinity" && global.delta_sup != "unknown" {
        out.push(format!(
            "distribution solutions are locally L^delta for every delta < {}",
            global.delta_sup
        ));
    }
    out
}

/// The zero-stratum record: the direct root bound `mu` at the origin against
/// the bound obtained through the algebraic Fourier transform, which must
/// agree under `r -> -r - dim`. The transform itself is computed on the Weyl
/// algebra operator `theta - mu`.
fn zero_stratum_record(
    mu: &Rat,
    dim: usize,
    lambda_tilde: &Rat,
) -> Result<ZeroStratumRecord, CertifyError> {
    let n = rat_int(dim as i64);
    let tame_at_zero = *mu > -n.clone();
    // Transform theta - mu and read the root of the image polynomial in
    // theta*: fourier(theta - mu) = -theta* - dim - mu.
    let w = WeightVector::euler(dim);
    let theta = euler_field(&w);
    let b_op = theta.sub(&WeylElement::constant(dim, mu.clone())).map_err(|e| {
        CertifyError::Internal(format!("building theta - mu: {e}"))
    })?;
    let transformed = b_op.fourier();
    let expected = theta
        .neg()
        .sub(&WeylElement::constant(dim, &n + mu))
        .map_err(|e| CertifyError::Internal(format!("building -theta - dim - mu: {e}")))?;
    if transformed != expected {
        return Err(CertifyError::Internal(
            "Fourier transform of theta - mu is not -theta* - dim - mu".into(),
        ));
    }
    let transformed_root = -(mu + &n);
    // Bound from the transform side: roots <= -(lambda_tilde + dim)/2 pulls
    // back to mu >= (lambda_tilde - dim)/2.
    let fourier_route_bound = (lambda_tilde - &n) / rat_int(2);
    let fourier_consistent = (-&transformed_root - &n) == *mu && *mu >= fourier_route_bound;
    Ok(ZeroStratumRecord {
        mu: format_rat(mu),
        trace: format_rat(&n),
        tame_at_zero,
        fourier_route_bound: format_rat(&fourier_route_bound),
        fourier_consistent,
    })
}

/// The root bound at the origin, `(rank - dim)/2`, and whether the origin
/// stratum passes the tameness test against the Euler trace `dim`.
pub fn hk_zero_stratum_bound(alg: &ChevalleyAlgebra) -> (Rat, bool) {
    let mu = (rat_int(alg.rank() as i64) - rat_int(alg.dim() as i64)) / rat_int(2);
    let tame = mu > rat_int(-(alg.dim() as i64));
    (mu, tame)
}

/// Certificate for the adjoint (diagonal) case of a semisimple algebra.
pub fn certify_diagonal(
    alg: &ChevalleyAlgebra,
    subject: &str,
    rank_cap: usize,
) -> Result<CertificateReport, CertifyError> {
    let stratification = enumerate_strata_diagonal(alg, rank_cap)?;
    let mut records = Vec::new();
    let mut all_pass = true;
    let mut delta_sup: Option<Rat> = None;
    for stratum in &stratification.strata {
        let input = TameVerdictInput {
            roots: vec![stratum.mu_bound.clone()],
            trace: stratum.trace_t.clone(),
            codim: stratum.codim,
            conic: stratum.conic,
            conormal_escape: false,
        };
        let pass = delta_tame_along(&input, &Rat::one());
        all_pass &= pass;
        let local = delta_local(&stratum.trace_t, &stratum.mu_bound);
        if let Some(d) = &local {
            if delta_sup.as_ref().is_none_or(|cur| d < cur) {
                delta_sup = Some(d.clone());
            }
        }
        let kind = if pass {
            if stratum.conic {
                "ConicTame"
            } else {
                "Tame"
            }
        } else {
            "NotCertified"
        };
        records.push(StratumRecord {
            class: stratum.class_label.clone(),
            orbit: stratum.orbit_label.clone(),
            codim: Some(stratum.codim as u64),
            trace_t: format_rat(&stratum.trace_t),
            mu_bound: Some(format_rat(&stratum.mu_bound)),
            conic: stratum.conic,
            integer_roots_assumed: true,
            delta_local: Some(infinity_or(local.as_ref())),
            verdict: VerdictRecord {
                kind: kind.to_string(),
                delta: pass.then(|| "1".to_string()),
            },
        });
    }
    // Independent route: delta from the centralizer-class formula must agree
    // with the strata minimum.
    let formula_delta = delta_of_algebra(alg, rank_cap)?;
    if let Some(strata_delta) = &delta_sup {
        if *strata_delta != formula_delta {
            return Err(CertifyError::Internal(format!(
                "delta mismatch: strata route {} vs class formula {}",
                format_rat(strata_delta),
                format_rat(&formula_delta)
            )));
        }
    }
    let global = GlobalVerdicts {
        tame: all_pass,
        conic_tame: all_pass,
        weakly_tame: all_pass,
        delta_sup: infinity_or(delta_sup.as_ref()),
        nice_pair: Some(true),
    };
    let (mu0, _) = hk_zero_stratum_bound(alg);
    let lambda_tilde = rat_int(alg.rank() as i64);
    let zero = zero_stratum_record(&mu0, alg.dim(), &lambda_tilde)?;
    let implications = implications(&global);
    Ok(CertificateReport {
        schema: REPORT_SCHEMA,
        subject: subject.to_string(),
        provenance: Provenance {
            input_hash: input_hash(&format!("cartan:{:?}", alg.root_system().cartan())),
            tool_version: tool_version(),
        },
        strata: records,
        global,
        zero_stratum: Some(zero),
        assumptions: vec![CONIC_ASSUMPTION.to_string()],
        implications,
    })
}

/// Certificate for a symmetric pair descriptor. Classes without computable
/// or supplied nilpotent data degrade the verdicts to the strongest fully
/// supported claim.
pub fn certify_pair(
    pair: &SymmetricPairDescriptor,
    rank_cap: usize,
) -> Result<CertificateReport, CertifyError> {
    let analysis = analyze_pair(pair, rank_cap)?;
    let (nice, _violations, missing) = nice_pair_check(&analysis);

    let mut records = Vec::new();
    let mut all_pass = true;
    let mut all_weak = true;
    let mut all_lambda_positive = true;
    let mut delta_sup: Option<Rat> = None;
    let mut any_unknown = false;
    for stratum in &analysis.strata {
        let open = stratum.codim == Some(0);
        if !open && stratum.lambda <= 0 {
            all_lambda_positive = false;
        }
        let (pass, kind, local) = match &stratum.mu_bound {
            Some(mu) => {
                let input = TameVerdictInput {
                    roots: vec![mu.clone()],
                    trace: stratum.trace_t.clone(),
                    codim: stratum.codim.unwrap_or(1),
                    conic: stratum.conic,
                    conormal_escape: !stratum.distinguished,
                };
                let pass = delta_tame_along(&input, &Rat::one());
                let kind = if pass {
                    if stratum.conic {
                        "ConicTame"
                    } else {
                        "Tame"
                    }
                } else if input.conormal_escape {
                    "WeaklyTame"
                } else {
                    "NotCertified"
                };
                (pass, kind, delta_local(&stratum.trace_t, mu))
            }
            None => {
                any_unknown = true;
                let kind = if !stratum.distinguished && !open {
                    "WeaklyTame"
                } else {
                    "NotCertified"
                };
                (false, kind, None)
            }
        };
        all_pass &= pass;
        all_weak &= pass || kind == "WeaklyTame" || open;
        if pass {
            if let Some(d) = &local {
                if delta_sup.as_ref().is_none_or(|cur| d < cur) {
                    delta_sup = Some(d.clone());
                }
            }
        }
        records.push(StratumRecord {
            class: stratum.class_label.clone(),
            orbit: stratum.orbit_label.clone(),
            codim: stratum.codim.map(|c| c as u64),
            trace_t: format_rat(&stratum.trace_t),
            mu_bound: stratum.mu_bound.as_ref().map(format_rat),
            conic: stratum.conic,
            integer_roots_assumed: true,
            delta_local: stratum
                .mu_bound
                .is_some()
                .then(|| infinity_or(local.as_ref())),
            verdict: VerdictRecord {
                kind: kind.to_string(),
                delta: pass.then(|| "1".to_string()),
            },
        });
    }
    let tame = all_pass && !any_unknown;
    let conic_tame = tame && all_lambda_positive;
    let weakly_tame = (nice == Some(true)) || (all_weak && !any_unknown && tame);
    let delta_sup_str = if any_unknown {
        "unknown".to_string()
    } else {
        infinity_or(delta_sup.as_ref())
    };
    let global = GlobalVerdicts {
        tame,
        conic_tame,
        weakly_tame,
        delta_sup: delta_sup_str,
        nice_pair: nice,
    };

    // lambda over all nilpotents of p: every nilpotent has semisimple part
    // zero, so it lies in an orbit of the full restricted class.
    let full_class = analysis
        .classes
        .iter()
        .max_by_key(|c| c.positives.len())
        .filter(|c| c.source != LambdaSource::Missing);
    let zero = match (&analysis.mu_p, full_class) {
        (Some(mu_p), Some(top)) if analysis.complete => {
            let lambda_tilde = top
                .orbits
                .iter()
                .map(|o| o.lambda)
                .min()
                .unwrap_or(0);
            Some(zero_stratum_record(
                mu_p,
                analysis.dim_p,
                &rat_int(lambda_tilde),
            )?)
        }
        _ => None,
    };

    let mut assumptions = vec![CONIC_ASSUMPTION.to_string()];
    for class in &analysis.classes {
        if class.source == LambdaSource::Supplied {
            assumptions.push(format!(
                "nilpotent weight data for class {} supplied externally, not derived",
                class.label
            ));
        }
    }
    for label in &missing {
        assumptions.push(format!(
            "class {label} lacks nilpotent data; its strata are not certified"
        ));
    }
    let implications = implications(&global);
    Ok(CertificateReport {
        schema: REPORT_SCHEMA,
        subject: pair.label.clone(),
        provenance: Provenance {
            input_hash: input_hash(&format!(
                "pair:{}:cartan:{:?}",
                pair.label,
                pair.algebra.root_system().cartan()
            )),
            tool_version: tool_version(),
        },
        strata: records,
        global,
        zero_stratum: zero,
        assumptions,
        implications,
    })
}

/// Summary of the exhaustive certificate verification sweep.
#[derive(Debug, Serialize)]
pub struct BnSuiteSummary {
    pub cases: usize,
    pub failures: Vec<String>,
}

impl BnSuiteSummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Constructs and re-expands the membership certificate for every integer
/// weight vector with `d <= max_d`, entries `<= max_weight`, and every
/// `N <= max_n`; also audits the root bound `roots <= -sum(n_i)`.
pub fn verify_bn_suite(max_d: u32, max_weight: u32, max_n: u32) -> BnSuiteSummary {
    let mut cases = 0;
    let mut failures = Vec::new();
    for d in 1..=max_d {
        let mut weights = vec![1i64; d as usize];
        loop {
            let wv = WeightVector::from_integers(&weights).expect("positive weights");
            for n in 1..=max_n {
                cases += 1;
                match certify_membership(&wv, n) {
                    Ok(cert) => {
                        // Root bound audit on the same b_N.
                        let b = b_n_poly(cert.weights(), n);
                        let bound = -wv.trace();
                        if b.roots().any(|(r, _)| *r > bound) {
                            failures.push(format!(
                                "weights {weights:?}, N={n}: root above -trace"
                            ));
                        }
                        if b.roots().any(|(r, _)| !r.denom().is_one()) {
                            failures.push(format!(
                                "weights {weights:?}, N={n}: non-integer root"
                            ));
                        }
                    }
                    Err(e) => failures.push(format!("weights {weights:?}, N={n}: {e}")),
                }
            }
            // Next weight tuple in odometer order.
            let mut i = 0usize;
            loop {
                if i == weights.len() {
                    break;
                }
                if weights[i] < max_weight as i64 {
                    weights[i] += 1;
                    break;
                }
                weights[i] = 1;
                i += 1;
            }
            if i == weights.len() {
                break;
            }
        }
    }
    BnSuiteSummary { cases, failures }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn report(name: &str) -> CertificateReport {
        let alg = ChevalleyAlgebra::from_type(name).unwrap();
        certify_diagonal(&alg, name, 4).unwrap()
    }

    #[test]
    fn sl2_report_values() {
        let r = report("A1");
        assert!(r.global.tame && r.global.conic_tame && r.global.weakly_tame);
        assert_eq!(r.global.delta_sup, "2");
        assert_eq!(r.strata.len(), 3);
        assert_eq!(r.strata[1].delta_local.as_deref(), Some("2"));
        assert_eq!(r.strata[2].delta_local.as_deref(), Some("3"));
        let z = r.zero_stratum.as_ref().unwrap();
        assert_eq!(z.mu, "-1");
        assert!(z.tame_at_zero && z.fourier_consistent);
    }

    #[test]
    fn sl3_sl4_delta_sup() {
        assert_eq!(report("A2").global.delta_sup, "5/3");
        assert_eq!(report("A3").global.delta_sup, "3/2");
    }

    #[test]
    fn report_implication_chain() {
        let r = report("A2");
        assert!(!r.global.conic_tame || r.global.tame);
        assert!(!r.global.tame || r.global.weakly_tame);
    }

    #[test]
    fn report_deterministic() {
        let a = report("A2").to_json_string();
        let b = report("A2").to_json_string();
        assert_eq!(a, b);
    }

    #[test]
    fn hk_zero_examples() {
        let g = ChevalleyAlgebra::from_type("A1").unwrap();
        let (mu, tame) = hk_zero_stratum_bound(&g);
        assert_eq!(mu, rat_int(-1));
        assert!(tame);
        let g = ChevalleyAlgebra::from_type("A2").unwrap();
        let (mu, tame) = hk_zero_stratum_bound(&g);
        assert_eq!(mu, rat_int(-3));
        assert!(tame);
    }

    #[test]
    fn pair_and_diagonal_reports_agree_on_sl2() {
        let diag = report("A1");
        let pair = SymmetricPairDescriptor::diagonal("A1").unwrap();
        let pr = certify_pair(&pair, 4).unwrap();
        assert_eq!(diag.strata, pr.strata);
        assert_eq!(diag.global, pr.global);
        assert_eq!(diag.zero_stratum, pr.zero_stratum);
    }

    #[test]
    fn bn_suite_small() {
        let summary = verify_bn_suite(2, 2, 3);
        assert!(summary.passed(), "failures: {:?}", summary.failures);
        assert_eq!(summary.cases, (2 + 4) * 3);
    }

    #[test]
    fn delta_local_values() {
        assert_eq!(
            delta_local(&rat_int(2), &rat_int(-1)),
            Some(rat_int(2))
        );
        assert_eq!(delta_local(&rat_int(2), &rat_int(0)), None);
        assert_eq!(delta_local(&rat(3, 2), &rat(-1, 2)), Some(rat_int(3)));
    }
}
