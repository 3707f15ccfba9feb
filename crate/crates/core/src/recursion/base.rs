use rayon::prelude::*;

use crate::dynkin::{classify_dynkin, is_positive_root, DynkinKind};
use crate::error::{Error, Result};
use crate::linalg::{PrimeField, Rationals};
use crate::oracle::{count_flags_with, OracleConfig};
use crate::poly::{first_primes, interpolate, PoincarePolynomial};
use crate::quiver::{euler_unchecked, flag_differences, DimVector, FlagType, Quiver};
use crate::rep::{build_rep, indecomposable_for_root, is_rigid, RootMultiset};

/// `Σ_{r<t} <ū_r, ū_t>`: the dimension of `F_u(V)` for rigid `V` when it is
/// nonempty.
pub fn rigid_dimension(quiver: &Quiver, u: &FlagType) -> i64 {
    let diffs = flag_differences(u);
    let mut total = 0;
    for r in 0..diffs.len() {
        for t in r + 1..diffs.len() {
            total += euler_unchecked(quiver, &diffs[r], &diffs[t]);
        }
    }
    total
}

fn check_root_case(quiver: &Quiver, root: &DimVector, u: &FlagType, expected: fn(&DynkinKind) -> bool) -> Result<()> {
    let kind = classify_dynkin(quiver).kind;
    if !expected(&kind) {
        return Err(Error::Unsupported(format!("base case does not apply to a quiver of type {kind}")));
    }
    quiver.check_flag(u)?;
    if !is_positive_root(quiver, root)? {
        return Err(Error::input(format!("{root} is not a positive root")));
    }
    if u.top() != root {
        return Err(Error::input(format!("flag type {u} does not end at {root}")));
    }
    Ok(())
}

fn count_indecomposable(quiver: &Quiver, root: &DimVector, u: &FlagType, p: u32, cfg: &OracleConfig) -> Result<u64> {
    let rep = indecomposable_for_root(quiver, root, &PrimeField::new(p)?)?;
    count_flags_with(&rep, u, cfg)
}

/// Flags in an indecomposable of type A form a point or nothing; the `F_2`
/// count tells which.
pub fn base_case_type_a(quiver: &Quiver, root: &DimVector, u: &FlagType, cfg: &OracleConfig) -> Result<PoincarePolynomial> {
    check_root_case(quiver, root, u, |k| matches!(k, DynkinKind::A(_)))?;
    match count_indecomposable(quiver, root, u, 2, cfg)? {
        0 => Ok(PoincarePolynomial::zero()),
        1 => Ok(PoincarePolynomial::one()),
        n => Err(Error::internal(format!("type A flag variety of {root}, {u} has {n} points over F_2"))),
    }
}

/// Flags in an indecomposable of type D form a product of `m` projective
/// lines (or nothing): `3^m` points over `F_2`, checked against `4^m` over `F_3`.
pub fn base_case_type_d(quiver: &Quiver, root: &DimVector, u: &FlagType, cfg: &OracleConfig) -> Result<PoincarePolynomial> {
    check_root_case(quiver, root, u, |k| matches!(k, DynkinKind::D(_)))?;
    let n2 = count_indecomposable(quiver, root, u, 2, cfg)?;
    if n2 == 0 {
        return Ok(PoincarePolynomial::zero());
    }
    let mut m = 0u32;
    let mut rest = n2;
    while rest % 3 == 0 {
        rest /= 3;
        m += 1;
    }
    if rest != 1 {
        return Err(Error::internal(format!("type D flag variety of {root}, {u} has {n2} points over F_2")));
    }
    let n3 = count_indecomposable(quiver, root, u, 3, cfg)?;
    if n3 != 4u64.pow(m) {
        return Err(Error::internal(format!(
            "type D flag variety of {root}, {u}: {n2} points over F_2 but {n3} over F_3"
        )));
    }
    Ok(PoincarePolynomial::one_plus_q_pow(m as usize))
}

/// Fits the point count of `F_u(V)` for rigid `V` (the sum of `roots`) by a
/// polynomial of degree at most [`rigid_dimension`], using one prime beyond
/// what the fit needs as a witness.
pub fn base_case_rigid_interpolation(
    quiver: &Quiver,
    roots: &RootMultiset,
    u: &FlagType,
    cfg: &OracleConfig,
) -> Result<PoincarePolynomial> {
    quiver.check_flag(u)?;
    let total = roots.total_dims(quiver.num_vertices());
    if u.top() != &total {
        return Err(Error::input(format!("flag type {u} does not end at {total}")));
    }
    if !is_rigid(&build_rep(quiver, roots, &Rationals)?)? {
        return Err(Error::Unsupported(format!("representation {roots} is not rigid")));
    }
    let dim = rigid_dimension(quiver, u).max(0) as usize;
    let primes = first_primes(dim + 2);
    let counts = primes
        .par_iter()
        .map(|&p| {
            let rep = build_rep(quiver, roots, &PrimeField::new(p)?)?;
            Ok((p as u64, count_flags_with(&rep, u, cfg)?))
        })
        .collect::<Result<Vec<_>>>()?;
    let (fit, witness) = counts.split_at(dim + 1);
    let poly = interpolate(fit)?;
    let (p, expected) = witness[0];
    if poly.eval(p) != expected as i128 {
        return Err(Error::PolynomialCountViolated(format!(
            "fit {poly} predicts {} points over F_{p}, found {expected}",
            poly.eval(p)
        )));
    }
    if !poly.has_nonnegative_coeffs() {
        return Err(Error::PolynomialCountViolated(format!("fit {poly} has a negative coefficient")));
    }
    Ok(poly)
}
