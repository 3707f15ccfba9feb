use std::collections::HashMap;

use parking_lot::Mutex;

use super::base::{base_case_rigid_interpolation, base_case_type_a, base_case_type_d};
use super::order;
use super::strata::enumerate_splittings;
use crate::dynkin::{classify_dynkin, is_positive_root, DynkinClass, DynkinKind};
use crate::error::{Error, Result};
use crate::linalg::Rationals;
use crate::oracle::OracleConfig;
use crate::poly::PoincarePolynomial;
use crate::quiver::{DimVector, FlagType, Quiver};
use crate::rep::{ext1_dim, indecomposable_for_root, RootMultiset};

type Memo = HashMap<(Vec<DimVector>, FlagType), PoincarePolynomial>;

/// Poincaré polynomials of flag varieties of representations of one Dynkin
/// quiver. Results are cached, so reuse the engine across queries; it is
/// `Sync` and may be shared between threads.
pub struct FlagEngine {
    quiver: Quiver,
    class: DynkinClass,
    config: OracleConfig,
    ext1: Mutex<HashMap<(DimVector, DimVector), usize>>,
    base: Mutex<HashMap<(DimVector, FlagType), PoincarePolynomial>>,
    memo: Mutex<Memo>,
}

/// Drops repeated steps; `F_u` only depends on the distinct subspaces.
fn normalize(u: &FlagType) -> FlagType {
    let mut steps: Vec<DimVector> = Vec::with_capacity(u.len());
    for s in u.steps() {
        if s.is_zero() || steps.last() == Some(s) {
            continue;
        }
        steps.push(s.clone());
    }
    if steps.is_empty() {
        steps.push(u.top().clone());
    }
    FlagType::new(steps).expect("subsequence of a flag type")
}

impl FlagEngine {
    pub fn new(quiver: &Quiver) -> Result<Self> {
        Self::with_config(quiver, OracleConfig::default())
    }

    pub fn with_config(quiver: &Quiver, config: OracleConfig) -> Result<Self> {
        let class = classify_dynkin(quiver);
        if !class.is_dynkin() {
            return Err(Error::Unsupported("the quiver is not of Dynkin type".into()));
        }
        Ok(FlagEngine {
            quiver: quiver.clone(),
            class,
            config,
            ext1: Mutex::default(),
            base: Mutex::default(),
            memo: Mutex::default(),
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn class(&self) -> &DynkinClass {
        &self.class
    }

    pub fn config(&self) -> &OracleConfig {
        &self.config
    }

    /// `dim Ext^1(W, V)` for the indecomposables of dimensions `w` and `v`.
    pub fn ext1(&self, w: &DimVector, v: &DimVector) -> Result<usize> {
        let key = (w.clone(), v.clone());
        if let Some(&e) = self.ext1.lock().get(&key) {
            return Ok(e);
        }
        let rw = indecomposable_for_root(&self.quiver, w, &Rationals)?;
        let rv = indecomposable_for_root(&self.quiver, v, &Rationals)?;
        let e = ext1_dim(&rw, &rv)?;
        self.ext1.lock().insert(key, e);
        Ok(e)
    }

    /// The distinct roots of `roots` ordered so that `Ext^1(R_r, R_t) = 0`
    /// for `r <= t`.
    pub fn directed_order(&self, roots: &RootMultiset) -> Result<Vec<DimVector>> {
        order::directed_order(&roots.distinct_roots(), |a, b| self.ext1(a, b))
    }

    fn check_order(&self, summands: &[DimVector]) -> Result<()> {
        for s in summands {
            if !is_positive_root(&self.quiver, s)? {
                return Err(Error::input(format!("{s} is not a positive root")));
            }
        }
        if !order::is_directed(summands, |a, b| self.ext1(a, b))? {
            return Err(Error::input("summands are not in a directed order"));
        }
        Ok(())
    }

    /// Poincaré polynomial of `F_u(V)` for `V` the sum of the indecomposables
    /// in `roots`.
    pub fn poincare(&self, roots: &RootMultiset, u: &FlagType) -> Result<PoincarePolynomial> {
        let mut summands = Vec::with_capacity(roots.num_summands());
        for root in self.directed_order(roots)? {
            let mult = roots.entries().iter().find(|(r, _)| r == &root).map_or(0, |e| e.1);
            summands.extend(std::iter::repeat_n(root, mult));
        }
        self.evaluate(&summands, u)
    }

    /// As [`FlagEngine::poincare`], peeling summands in the given order, which
    /// must be directed. Repeated roots are listed repeatedly.
    pub fn poincare_with_order(&self, summands: &[DimVector], u: &FlagType) -> Result<PoincarePolynomial> {
        self.quiver.check_flag(u)?;
        self.check_order(summands)?;
        self.evaluate(summands, u)
    }

    fn evaluate(&self, summands: &[DimVector], u: &FlagType) -> Result<PoincarePolynomial> {
        self.quiver.check_flag(u)?;
        let n = self.quiver.num_vertices();
        let total = summands.iter().fold(DimVector::zeros(n), |acc, s| acc.add(s));
        if u.top() != &total {
            return Err(Error::input(format!("flag type {u} does not end at dim V = {total}")));
        }
        if summands.is_empty() {
            return Ok(PoincarePolynomial::one());
        }
        self.recurse(summands, &normalize(u))
    }

    fn recurse(&self, summands: &[DimVector], u: &FlagType) -> Result<PoincarePolynomial> {
        if let [root] = summands {
            return self.base_case(root, u);
        }
        let key = (summands.to_vec(), u.clone());
        if let Some(p) = self.memo.lock().get(&key) {
            return Ok(p.clone());
        }
        // W = summands[0] is the quotient; Ext^1(W, rest) = 0 by directedness
        let w_total = &summands[0];
        let rest = &summands[1..];
        let v_total = u.top().checked_sub(w_total).expect("top is the sum of the summands");
        let mut total = PoincarePolynomial::zero();
        for split in enumerate_splittings(&self.quiver, u, &v_total, w_total)? {
            let pw = self.base_case(w_total, &normalize(&split.w))?;
            if pw.is_zero() {
                continue;
            }
            let pv = self.recurse(rest, &normalize(&split.v))?;
            if pv.is_zero() {
                continue;
            }
            if split.rank < 0 {
                return Err(Error::internal(format!(
                    "negative rank {} on a nonempty stratum ({}, {})",
                    split.rank, split.v, split.w
                )));
            }
            total = total.add(&pv.mul(&pw).shift(split.rank as usize));
        }
        self.memo.lock().insert(key, total.clone());
        Ok(total)
    }

    /// Poincaré polynomial of `F_u` of the indecomposable with dimension `root`.
    pub fn base_case(&self, root: &DimVector, u: &FlagType) -> Result<PoincarePolynomial> {
        let u = normalize(u);
        let key = (root.clone(), u.clone());
        if let Some(p) = self.base.lock().get(&key) {
            return Ok(p.clone());
        }
        let p = if u.len() == 1 {
            self.quiver.check_flag(&u)?;
            if u.top() != root {
                return Err(Error::input(format!("flag type {u} does not end at {root}")));
            }
            PoincarePolynomial::one()
        } else {
            match self.class.kind {
                DynkinKind::A(_) => base_case_type_a(&self.quiver, root, &u, &self.config)?,
                DynkinKind::D(_) => base_case_type_d(&self.quiver, root, &u, &self.config)?,
                _ => {
                    let single = RootMultiset::new(&self.quiver, vec![(root.clone(), 1)])?;
                    base_case_rigid_interpolation(&self.quiver, &single, &u, &self.config).map_err(|e| match e {
                        Error::BudgetExceeded { estimate, budget } => Error::BaseCaseOutOfRange {
                            root: root.to_string(),
                            reason: format!("point count needs ~{estimate} candidates, budget {budget}"),
                        },
                        other => other,
                    })?
                }
            }
        };
        self.base.lock().insert(key, p.clone());
        Ok(p)
    }
}

/// One-off evaluation; build a [`FlagEngine`] to reuse caches.
pub fn poincare(quiver: &Quiver, roots: &RootMultiset, u: &FlagType) -> Result<PoincarePolynomial> {
    FlagEngine::new(quiver)?.poincare(roots, u)
}
