//! Batch verification: recursion output against point counts, and the
//! bundle description of a single stratum.

use serde::Serialize;

use rayon::prelude::*;

use crate::dynkin::positive_roots;
use crate::error::{Error, Result};
use crate::flagcat::{verify_fiber_rank, FiberReport};
use crate::linalg::{PrimeField, Rationals};
use crate::oracle::{count_flags_with, count_strata, leading_block, OracleConfig};
use crate::poly::PoincarePolynomial;
use crate::quiver::{DimVector, FlagType, Quiver};
use crate::recursion::{stratum_rank, FlagEngine};
use crate::rep::{build_rep, ext1_dim, RootMultiset};

/// Which representations a campaign visits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RepClass {
    /// Single positive roots.
    Indecomposable,
    /// All root multisets.
    Decomposable,
}

/// Parameters of a check-odd campaign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JobSpec {
    pub rep_class: RepClass,
    /// Bound on the total dimension of the representation.
    pub max_dim: u32,
    /// Flag types of every length `1..=d_max` are visited.
    pub d_max: usize,
    /// Primes at which the polynomial is compared with point counts.
    pub primes: Vec<u32>,
    /// Worker threads; 0 means rayon's default.
    pub jobs: usize,
    pub config: OracleConfig,
}

impl Default for JobSpec {
    fn default() -> Self {
        JobSpec {
            rep_class: RepClass::Indecomposable,
            max_dim: 6,
            d_max: 2,
            primes: vec![2, 3],
            jobs: 0,
            config: OracleConfig::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    /// Point count differs from the polynomial at some prime.
    Mismatch,
    NegativeCoefficient,
    BudgetExceeded,
    Error,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Ok => "OK",
            Status::Mismatch => "MISMATCH",
            Status::NegativeCoefficient => "NEGATIVE",
            Status::BudgetExceeded => "BUDGET",
            Status::Error => "ERROR",
        }
    }
}

/// One row of a campaign report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Instance {
    pub quiver: String,
    pub roots: String,
    pub flag_type: String,
    /// Low degree first; absent when the polynomial could not be computed.
    pub coefficients: Option<Vec<i64>>,
    pub verified_primes: Vec<u32>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CampaignReport {
    pub instances: Vec<Instance>,
}

impl CampaignReport {
    pub fn count(&self, status: Status) -> usize {
        self.instances.iter().filter(|i| i.status == status).count()
    }

    /// 0 when everything checked out, 3 on any failed check, else 4 when some
    /// instance ran out of budget.
    pub fn exit_code(&self) -> i32 {
        if self.instances.iter().any(|i| matches!(i.status, Status::Mismatch | Status::NegativeCoefficient | Status::Error)) {
            3
        } else if self.count(Status::BudgetExceeded) > 0 {
            4
        } else {
            0
        }
    }

    /// Plain text table, one instance per line.
    pub fn table(&self) -> String {
        let mut out = format!("{:<24} {:<32} {:<28} {}\n", "roots", "flag type", "polynomial", "status");
        for i in &self.instances {
            let poly = match &i.coefficients {
                Some(c) => PoincarePolynomial::new(c.clone()).to_string(),
                None => "-".into(),
            };
            out.push_str(&format!("{:<24} {:<32} {:<28} {}", i.roots, i.flag_type, poly, i.status.as_str()));
            if let Some(d) = &i.detail {
                out.push_str(&format!("  ({d})"));
            }
            out.push('\n');
        }
        out.push_str(&format!(
            "{} instances: {} ok, {} mismatch, {} negative, {} budget, {} error\n",
            self.instances.len(),
            self.count(Status::Ok),
            self.count(Status::Mismatch),
            self.count(Status::NegativeCoefficient),
            self.count(Status::BudgetExceeded),
            self.count(Status::Error)
        ));
        out
    }
}

/// Root multisets whose total dimension is between 1 and `max_dim`.
pub fn root_multisets(quiver: &Quiver, max_dim: u32) -> Result<Vec<RootMultiset>> {
    let roots: Vec<DimVector> = positive_roots(quiver)?.into_iter().filter(|r| r.total() <= max_dim).collect();
    fn go(roots: &[DimVector], k: usize, budget: u32, cur: &mut Vec<(DimVector, usize)>, out: &mut Vec<RootMultiset>) {
        if k == roots.len() {
            if !cur.is_empty() {
                out.push(RootMultiset::from_entries_unchecked(cur.clone()));
            }
            return;
        }
        let size = roots[k].total();
        let mut m = 0;
        loop {
            if m > 0 {
                cur.push((roots[k].clone(), m));
            }
            go(roots, k + 1, budget - m as u32 * size, cur, out);
            if m > 0 {
                cur.pop();
            }
            m += 1;
            if m as u32 * size > budget {
                break;
            }
        }
    }
    let mut out = Vec::new();
    go(&roots, 0, max_dim, &mut Vec::new(), &mut out);
    Ok(out)
}

/// Computes one polynomial and compares it with point counts.
pub fn check_instance(
    engine: &FlagEngine,
    label: &str,
    roots: &RootMultiset,
    u: &FlagType,
    primes: &[u32],
) -> Instance {
    let mut inst = Instance {
        quiver: label.to_string(),
        roots: roots.to_string(),
        flag_type: u.to_string(),
        coefficients: None,
        verified_primes: Vec::new(),
        status: Status::Ok,
        detail: None,
    };
    let fail = |inst: &mut Instance, e: Error| {
        inst.status = match e {
            Error::BudgetExceeded { .. } | Error::BaseCaseOutOfRange { .. } => Status::BudgetExceeded,
            _ => Status::Error,
        };
        inst.detail = Some(e.to_string());
    };
    let poly = match engine.poincare(roots, u) {
        Ok(p) => p,
        Err(e) => {
            fail(&mut inst, e);
            return inst;
        }
    };
    inst.coefficients = Some(poly.coeffs().to_vec());
    if !poly.has_nonnegative_coeffs() {
        inst.status = Status::NegativeCoefficient;
        return inst;
    }
    for &p in primes {
        let count = PrimeField::new(p)
            .and_then(|f| build_rep(engine.quiver(), roots, &f))
            .and_then(|rep| count_flags_with(&rep, u, engine.config()));
        match count {
            Ok(c) if c as i128 == poly.eval(p as u64) => inst.verified_primes.push(p),
            Ok(c) => {
                inst.status = Status::Mismatch;
                inst.detail = Some(format!("{c} points over F_{p}, polynomial gives {}", poly.eval(p as u64)));
                return inst;
            }
            Err(e) => {
                fail(&mut inst, e);
                return inst;
            }
        }
    }
    inst
}

/// Every representation of the requested class up to `max_dim` and every
/// flag type with at most `d_max` steps, checked against point counts.
/// Rows come out in a fixed order whatever the thread count.
pub fn check_odd(quiver: &Quiver, label: &str, spec: &JobSpec) -> Result<CampaignReport> {
    let engine = FlagEngine::with_config(quiver, spec.config)?;
    let reps = match spec.rep_class {
        RepClass::Indecomposable => positive_roots(quiver)?
            .into_iter()
            .filter(|r| r.total() <= spec.max_dim)
            .map(|r| RootMultiset::from_entries_unchecked(vec![(r, 1)]))
            .collect(),
        RepClass::Decomposable => root_multisets(quiver, spec.max_dim)?,
    };
    let n = quiver.num_vertices();
    let mut jobs = Vec::new();
    for roots in &reps {
        let top = roots.total_dims(n);
        for d in 1..=spec.d_max {
            for u in FlagType::all_with_top(&top, d) {
                jobs.push((roots, u));
            }
        }
    }
    let run = || -> Vec<Instance> {
        jobs.par_iter().map(|(roots, u)| check_instance(&engine, label, roots, u, &spec.primes)).collect()
    };
    let instances = if spec.jobs == 0 {
        run()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(spec.jobs)
            .build()
            .map_err(|e| Error::input(format!("cannot start {} worker threads: {e}", spec.jobs)))?
            .install(run)
    };
    Ok(CampaignReport { instances })
}

/// `|stratum|` against `q^rank · |F_v(V)| · |F_w(W)|` at one prime.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StratumCount {
    pub prime: u32,
    pub stratum: u64,
    pub flags_v: u64,
    pub flags_w: u64,
    pub predicted: u128,
}

impl StratumCount {
    pub fn ok(&self) -> bool {
        self.stratum as u128 == self.predicted
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BundleCheck {
    pub rank: i64,
    pub fibers: FiberReport,
    pub strata: Vec<StratumCount>,
}

impl BundleCheck {
    pub fn ok(&self) -> bool {
        self.fibers.ok() && self.strata.iter().all(StratumCount::ok)
    }
}

/// Checks that flags of `V ⊕ W` of type `v + w` meeting `V` in type `v` form
/// a bundle of rank [`stratum_rank`] over `F_v(V) × F_w(W)`: fiber dimensions
/// on sampled pairs over `F_{fiber_prime}`, and point counts at `q = 2, 3`.
/// `Ext^1(W, V)` must vanish; otherwise the error names its dimension.
#[allow(clippy::too_many_arguments)]
pub fn verify_bundle(
    quiver: &Quiver,
    v_roots: &RootMultiset,
    w_roots: &RootMultiset,
    v: &FlagType,
    w: &FlagType,
    samples: usize,
    seed: u64,
    fiber_prime: u32,
    config: &OracleConfig,
) -> Result<BundleCheck> {
    let ext = ext1_dim(&build_rep(quiver, w_roots, &Rationals)?, &build_rep(quiver, v_roots, &Rationals)?)?;
    if ext != 0 {
        return Err(Error::input(format!("Ext^1(W, V) has dimension {ext}, the bundle description needs 0")));
    }
    let n = quiver.num_vertices();
    let (v_dims, w_dims) = (v_roots.total_dims(n), w_roots.total_dims(n));
    if v.top() != &v_dims || w.top() != &w_dims {
        return Err(Error::input(format!("flag types must end at dim V = {v_dims} and dim W = {w_dims}")));
    }
    let rank = stratum_rank(quiver, w, v)?;
    let u = v.add(w)?;
    let fp = PrimeField::new(fiber_prime)?;
    let fibers = verify_fiber_rank(&build_rep(quiver, v_roots, &fp)?, &build_rep(quiver, w_roots, &fp)?, v, w, samples, seed)?;
    let mut strata = Vec::new();
    for p in [2u32, 3] {
        let field = PrimeField::new(p)?;
        let vr = build_rep(quiver, v_roots, &field)?;
        let wr = build_rep(quiver, w_roots, &field)?;
        let sum = vr.direct_sum(&wr)?;
        let stratum = count_strata(&sum, &leading_block(&sum, &v_dims), &u, v, w)?;
        let flags_v = count_flags_with(&vr, v, config)?;
        let flags_w = count_flags_with(&wr, w, config)?;
        let predicted = (p as u128).pow(rank.max(0) as u32) * flags_v as u128 * flags_w as u128;
        strata.push(StratumCount { prime: p, stratum, flags_v, flags_w, predicted });
    }
    Ok(BundleCheck { rank, fibers, strata })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multisets_of_a2() {
        let q = Quiver::linear_a(2);
        let all = root_multisets(&q, 2).unwrap();
        // (0,1), (1,0), (1,1), 2·(0,1), 2·(1,0), (0,1)+(1,0)
        assert_eq!(all.len(), 6);
    }

    #[test]
    fn a2_campaign_is_clean() {
        let q = Quiver::linear_a(2);
        let spec = JobSpec { rep_class: RepClass::Decomposable, max_dim: 3, d_max: 2, jobs: 2, ..JobSpec::default() };
        let report = check_odd(&q, "a2", &spec).unwrap();
        assert!(!report.instances.is_empty());
        assert_eq!(report.count(Status::Ok), report.instances.len(), "{}", report.table());
        assert_eq!(report.exit_code(), 0);
    }

    #[test]
    fn a2_bundle() {
        let q = Quiver::linear_a(2);
        let v_roots = RootMultiset::from_summands(&q, &[DimVector(vec![1, 1])]).unwrap();
        let w_roots = RootMultiset::from_summands(&q, &[DimVector(vec![1, 0])]).unwrap();
        let v = FlagType::from_slices(&[&[0, 1], &[1, 1]]);
        let w = FlagType::from_slices(&[&[1, 0], &[1, 0]]);
        let check = verify_bundle(&q, &v_roots, &w_roots, &v, &w, 4, 0, 3, &OracleConfig::default()).unwrap();
        assert_eq!(check.rank, 1);
        assert!(check.ok(), "{check:?}");
        assert_eq!(check.strata[0].stratum, 2);
        // swapped: Ext^1(S_1, S_2) = 1 ≠ 0 once S_1 is the quotient of S_2
        let s2 = RootMultiset::from_summands(&q, &[DimVector(vec![0, 1])]).unwrap();
        let v2 = FlagType::from_slices(&[&[0, 1]]);
        let w2 = FlagType::from_slices(&[&[1, 0]]);
        let err = verify_bundle(&q, &s2, &w_roots, &v2, &w2, 1, 0, 2, &OracleConfig::default()).unwrap_err();
        assert!(matches!(err, Error::Input(_)));
    }
}
