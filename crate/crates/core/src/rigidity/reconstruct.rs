//! Rebuilds character rows from boundary multiplicities and tensor duality.
//!
//! Rows are produced in ascending (., rho) order. Inside a row, entries are
//! produced in descending (., rho) order, so for each `mu` every entry above it
//! is already known. A full-support entry is recovered through
//!
//! ```text
//! f_{lambda-omega_i} * f_{omega_i} = sum_s n^s f_s,      n^lambda = 1,
//! n_lambda(mu) = [coefficient of h(mu)] - n^mu - sum_{mu < s < lambda} n^s n_s(mu),
//! ```
//!
//! where `n^mu` is traded for `n^{lambda-omega_i}_{mu, -w0 omega_i}` by duality
//! and that coefficient is peeled from `f_mu * f_{-w0 omega_i}` inside a window
//! whose differences have small support.

use std::collections::{BTreeMap, BTreeSet};

use crate::charring::{self, RowLookup, WInvariant};
use crate::error::{self, Error, Result};
use crate::rigidity::family::{CaseTag, FamilyTable};
use crate::rigidity::oracle::{BoundaryOracle, MultiplicitySource};
use crate::rootsystem::{RootSystem, RootVector, Series, Weight};

/// Picks the route for a full-support difference `beta = lambda - mu`.
pub fn choose_index(rs: &RootSystem, lambda: &Weight, beta: &RootVector) -> Result<CaseTag> {
    rs.check_dominant(lambda)?;
    let n = rs.rank();
    let mu_of = |b: &RootVector| {
        rs.from_root_coords(b)
            .map(|bw| lambda - &bw)
            .unwrap_or_else(|| rs.zero())
    };
    let ints = beta.to_ints().filter(|b| b.iter().all(|&c| c >= 1) && b.len() == n);
    let Some(b) = ints else {
        return Err(Error::SupportNotFull { lambda: lambda.clone(), mu: mu_of(beta) });
    };
    let Some(first) = lambda.first_nonzero() else {
        return Err(Error::Precondition("lambda must be nonzero".into()));
    };
    let k: Vec<i64> = b.iter().map(|c| c - 1).collect();
    let k1 = k[0];
    let k2 = k.get(1).copied().unwrap_or(0);
    if k1 >= 1 || k2 >= 2 {
        return Ok(CaseTag::Duality(first));
    }
    if lambda.at(1) == 0 {
        if k2 == 1 {
            return Ok(CaseTag::Boundary2);
        }
        return Err(Error::InternalCaseGap { lambda: lambda.clone(), mu: mu_of(beta) });
    }
    if rs.series() == Some(Series::B) && k.iter().all(|&c| c == 0) {
        return Ok(CaseTag::Boundary3);
    }
    Ok(CaseTag::Duality(1))
}

/// `n^t_{mu, omega_j}` from the row of `mu` and boundary data only.
///
/// With `D = mu + omega_j - t`, every consulted value `n_x(y)` has `x - y`
/// below `D` in dominance order, so its support is no larger than that of
/// `D`. Returns 0 without consulting anything when `t` is not below
/// `mu + omega_j`.
pub fn constrained_lr<S, K>(
    rs: &RootSystem,
    oracle: &mut BoundaryOracle<'_, S>,
    known: &K,
    mu: &Weight,
    j: usize,
    t: &Weight,
) -> Result<i64>
where
    S: MultiplicitySource,
    K: RowLookup + ?Sized,
{
    rs.check_dominant(mu)?;
    rs.check_dominant(t)?;
    let omega = rs.fundamental(j);
    let top = mu + &omega;
    let gap = &top - t;
    let beta = rs.to_root_coords(&gap);
    if !beta.is_nonneg_integral() {
        return Ok(0);
    }
    if beta.support().len() == rs.rank() {
        return Err(Error::WindowTooWide { lambda: top, mu: t.clone(), index: j });
    }
    let row_mu = known.row(mu).ok_or_else(|| Error::MissingFamilyRow(mu.clone()))?;

    // window: dominant s with t <= s <= mu + omega_j, descending
    let window: Vec<Weight> = charring::saturated_dominants(rs, &top)?
        .into_iter()
        .filter(|s| rs.dominance_leq(t, s))
        .collect();

    // terms of f_mu that can reach the window: mu - y <= D
    let mut low_terms: Vec<(Weight, i64)> = Vec::new();
    for (y0, c) in row_mu.iter() {
        if !rs.dominance_leq(&(mu - y0), &gap) {
            continue;
        }
        for y in rs.orbit_unchecked(y0) {
            if rs.dominance_leq(&(mu - &y), &gap) {
                low_terms.push((y, c));
            }
        }
    }

    let omega_value = |oracle: &mut BoundaryOracle<'_, S>, z: &Weight| -> Result<i64> {
        if *z == omega {
            return Ok(1);
        }
        if !rs.dominance_leq(&(&omega - z), &gap) {
            return Err(Error::Precondition(format!(
                "window needs n_omega_{j}({z}) outside the duality gap"
            )));
        }
        oracle.b1(&omega, z)
    };

    let mut peeled: Vec<(Weight, i64)> = Vec::new();
    for s in &window {
        let mut q = 0i64;
        for (y, c) in &low_terms {
            let z = rs.dominant_rep(&(s - y));
            if !rs.dominance_leq(&z, &omega) {
                continue;
            }
            let v = omega_value(oracle, &z)?;
            q = error::add(q, error::mul(*c, v, "window convolution")?, "window convolution")?;
        }
        for (s2, c2) in &peeled {
            if *c2 == 0 || !rs.dominance_leq(s, s2) {
                continue;
            }
            if !rs.dominance_leq(&(s2 - s), &gap) {
                return Err(Error::Precondition(format!(
                    "window needs n_{s2}({s}) outside the duality gap"
                )));
            }
            let m = oracle.b1(s2, s)?;
            q = error::sub(q, error::mul(*c2, m, "window peel")?, "window peel")?;
        }
        if s == t {
            return Ok(q);
        }
        peeled.push((s.clone(), q));
    }
    Err(Error::Precondition(format!("{t} missing from its own window")))
}

/// `n^t_{mu, omega_j}` by peeling `f_mu * f_{omega_j}` with rows that are
/// already known.
pub fn inductive_lr<K: RowLookup + ?Sized>(
    rs: &RootSystem,
    known: &K,
    mu: &Weight,
    j: usize,
    t: &Weight,
) -> Result<i64> {
    let omega = rs.fundamental(j);
    let row_mu = known.row(mu).ok_or_else(|| Error::MissingFamilyRow(mu.clone()))?;
    let row_omega = known.row(&omega).ok_or_else(|| Error::MissingFamilyRow(omega.clone()))?;
    let prod = charring::product(rs, row_mu, row_omega)?;
    Ok(charring::peel_decompose(rs, &prod, known)?.get(t).copied().unwrap_or(0))
}

/// Dominant weights with coordinate sum at most `cutoff`.
pub fn dominant_weights_upto(rank: usize, cutoff: i64) -> Vec<Weight> {
    fn rec(k: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Weight>) {
        if k == cur.len() {
            out.push(Weight::new(cur.clone()));
            return;
        }
        for v in 0..=left {
            cur[k] = v;
            rec(k + 1, left - v, cur, out);
        }
        cur[k] = 0;
    }
    let mut out = Vec::new();
    if cutoff >= 0 {
        rec(0, cutoff, &mut vec![0; rank], &mut out);
    }
    out
}

/// Every weight whose row the reconstruction of `targets` touches, in
/// processing order.
pub fn reconstruction_domain(rs: &RootSystem, targets: &[Weight]) -> Result<Vec<Weight>> {
    let mut seen: BTreeSet<Weight> = BTreeSet::new();
    let mut stack: Vec<Weight> = Vec::new();
    for t in targets {
        rs.check_dominant(t)?;
        if seen.insert(t.clone()) {
            stack.push(t.clone());
        }
    }
    let push = |w: Weight, seen: &mut BTreeSet<Weight>, stack: &mut Vec<Weight>| {
        if seen.insert(w.clone()) {
            stack.push(w);
        }
    };
    while let Some(lambda) = stack.pop() {
        if rs.is_minimal(&lambda)? {
            continue;
        }
        let below = charring::saturated_dominants(rs, &lambda)?;
        for mu in below.iter().skip(1) {
            push(mu.clone(), &mut seen, &mut stack);
        }
        for mu in below.iter().skip(1) {
            let beta = rs.to_root_coords(&(&lambda - mu));
            if beta.support().len() < rs.rank() {
                continue;
            }
            let Ok(tag) = choose_index(rs, &lambda, &beta) else { continue };
            let Some(i) = tag.duality_index() else { continue };
            let omega_i = rs.fundamental(i);
            push(&lambda - &omega_i, &mut seen, &mut stack);
            push(omega_i.clone(), &mut seen, &mut stack);
            let omega_j = rs.minus_w0(&omega_i)?;
            let top = mu + &omega_j;
            let gap = rs.to_root_coords(&(&top - &(&lambda - &omega_i)));
            let wide = gap.is_nonneg_integral() && gap.support().len() == rs.rank();
            if wide && rs.height(&top) < rs.height(&lambda) {
                for s in charring::saturated_dominants(rs, &top)? {
                    push(s, &mut seen, &mut stack);
                }
            }
        }
    }
    let mut out: Vec<Weight> = seen.into_iter().collect();
    rs.sort_ascending(&mut out);
    Ok(out)
}

/// Running peel of `f_{lambda - omega_i} * f_{omega_i}` against the row
/// under construction.
struct DualityPeel {
    index: usize,
    product: WInvariant,
    coeffs: Vec<(Weight, i64)>,
}

impl DualityPeel {
    /// `[h(s)] product - sum over already peeled s' != s of n^{s'} f_{s'}(s)`
    fn residual(
        &self,
        s: &Weight,
        lambda: &Weight,
        current: &WInvariant,
        done: &FamilyTable,
    ) -> Result<i64> {
        let mut r = self.product.get(s);
        for (s2, c2) in &self.coeffs {
            if s2 == s || *c2 == 0 {
                continue;
            }
            let m = if s2 == lambda {
                current.get(s)
            } else {
                done.get(s2).ok_or_else(|| Error::MissingFamilyRow(s2.clone()))?.get(s)
            };
            r = error::sub(r, error::mul(*c2, m, "duality peel")?, "duality peel")?;
        }
        Ok(r)
    }

    /// Records `n^s` once `n_lambda(s)` is in the current row.
    fn record(
        &mut self,
        s: &Weight,
        lambda: &Weight,
        current: &WInvariant,
        done: &FamilyTable,
    ) -> Result<()> {
        let c = if s == lambda {
            self.product.get(s)
        } else {
            self.residual(s, lambda, current, done)?
        };
        self.coeffs.push((s.clone(), c));
        Ok(())
    }
}

/// Reconstructs every row with coordinate sum at most `cutoff` (plus the
/// rows they depend on) from boundary data and tensor duality.
pub fn reconstruct_up_to<S: MultiplicitySource>(
    rs: &RootSystem,
    oracle: &mut BoundaryOracle<'_, S>,
    cutoff: i64,
) -> Result<FamilyTable> {
    let targets = dominant_weights_upto(rs.rank(), cutoff);
    let domain = reconstruction_domain(rs, &targets)?;
    let mut done = FamilyTable::new();
    for lambda in &domain {
        let row = reconstruct_row(rs, oracle, &mut done, lambda)?;
        done.insert_row(lambda.clone(), row)?;
    }
    Ok(done)
}

fn reconstruct_row<S: MultiplicitySource>(
    rs: &RootSystem,
    oracle: &mut BoundaryOracle<'_, S>,
    done: &mut FamilyTable,
    lambda: &Weight,
) -> Result<WInvariant> {
    let mut row = WInvariant::h(lambda.clone())?;
    if rs.is_minimal(lambda)? {
        return Ok(row);
    }
    let below = charring::saturated_dominants(rs, lambda)?;
    let mut peels: BTreeMap<usize, DualityPeel> = BTreeMap::new();
    let wrap = |e: Error, mu: &Weight| match e {
        Error::WindowTooWide { index, .. } => {
            Error::WindowTooWide { lambda: lambda.clone(), mu: mu.clone(), index }
        }
        Error::OracleRefused { clause, .. } => {
            Error::OracleRefused { clause, lambda: lambda.clone(), mu: mu.clone() }
        }
        other => other,
    };

    for (pos, mu) in below.iter().enumerate().skip(1) {
        let beta = rs.to_root_coords(&(lambda - mu));
        let (value, tag) = if beta.support().len() < rs.rank() {
            (oracle.b1(lambda, mu)?, CaseTag::Boundary1)
        } else {
            match choose_index(rs, lambda, &beta)? {
                CaseTag::Boundary2 => (oracle.b2(lambda, mu)?, CaseTag::Boundary2),
                CaseTag::Boundary3 => (oracle.b3(lambda, mu)?, CaseTag::Boundary3),
                CaseTag::Duality(i) => {
                    let omega_i = rs.fundamental(i);
                    if lambda.at(i) == 0 || *lambda == omega_i {
                        return Err(Error::InternalCaseGap { lambda: lambda.clone(), mu: mu.clone() });
                    }
                    if !peels.contains_key(&i) {
                        let t = lambda - &omega_i;
                        let row_t = done.get(&t).ok_or_else(|| Error::MissingFamilyRow(t.clone()))?;
                        let row_o = done
                            .get(&omega_i)
                            .ok_or_else(|| Error::MissingFamilyRow(omega_i.clone()))?;
                        let mut peel = DualityPeel {
                            index: i,
                            product: charring::product(rs, row_t, row_o)?,
                            coeffs: Vec::new(),
                        };
                        for s in &below[..pos] {
                            peel.record(s, lambda, &row, done)?;
                        }
                        if peel.coeffs[0].1 != 1 {
                            return Err(Error::Precondition(format!(
                                "product for {lambda} via omega_{i} is not led by 1"
                            )));
                        }
                        peels.insert(i, peel);
                    }
                    let t = lambda - &omega_i;
                    let j = rs
                        .minus_w0(&omega_i)?
                        .first_nonzero()
                        .expect("dual of a fundamental weight is fundamental");
                    let (dual, tag) = match constrained_lr(rs, oracle, &*done, mu, j, &t) {
                        Ok(c) => (c, CaseTag::Duality(i)),
                        Err(Error::WindowTooWide { .. }) if window_is_known(rs, done, mu, j, lambda)? => {
                            (inductive_lr(rs, &*done, mu, j, &t)?, CaseTag::InductiveDuality(i))
                        }
                        Err(e) => return Err(wrap(e, mu)),
                    };
                    let residual = peels[&i].residual(mu, lambda, &row, done)?;
                    (error::sub(residual, dual, "duality assembly")?, tag)
                }
                CaseTag::InductiveDuality(_) | CaseTag::Boundary1 => unreachable!(),
            }
        };
        row.set(mu.clone(), value)?;
        done.set_provenance(lambda.clone(), mu.clone(), tag);
        for peel in peels.values_mut() {
            peel.record(mu, lambda, &row, done)?;
        }
        debug_assert!(peels.values().all(|p| p.coeffs.len() == pos + 1 && p.index >= 1));
    }
    Ok(row)
}

/// True when `mu + omega_j` precedes `lambda` and every row needed to peel
/// `f_mu * f_{omega_j}` has been reconstructed.
fn window_is_known(
    rs: &RootSystem,
    done: &FamilyTable,
    mu: &Weight,
    j: usize,
    lambda: &Weight,
) -> Result<bool> {
    let top = mu + &rs.fundamental(j);
    if rs.height(&top) >= rs.height(lambda) {
        return Ok(false);
    }
    Ok(charring::saturated_dominants(rs, &top)?.iter().all(|s| done.contains(s))
        && done.contains(&rs.fundamental(j)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weylchar::freudenthal_char;

    fn w(v: &[i64]) -> Weight {
        Weight::new(v.to_vec())
    }

    #[test]
    fn choose_index_examples() {
        let b3 = RootSystem::new(Series::B, 3).unwrap();
        assert_eq!(
            choose_index(&b3, &w(&[1, 0, 0]), &RootVector::from_ints(&[1, 1, 1])).unwrap(),
            CaseTag::Boundary3
        );
        assert_eq!(
            choose_index(&b3, &w(&[0, 1, 0]), &RootVector::from_ints(&[1, 2, 2])).unwrap(),
            CaseTag::Boundary2
        );
        let a2 = RootSystem::new(Series::A, 2).unwrap();
        assert_eq!(
            choose_index(&a2, &w(&[1, 1]), &RootVector::from_ints(&[1, 1])).unwrap(),
            CaseTag::Duality(1)
        );
        assert!(matches!(
            choose_index(&a2, &w(&[1, 1]), &RootVector::from_ints(&[1, 0])),
            Err(Error::SupportNotFull { .. })
        ));
        // k_1 = k_2 = 0 with lambda_1 = 0
        assert!(matches!(
            choose_index(&b3, &w(&[0, 1, 0]), &RootVector::from_ints(&[1, 1, 1])),
            Err(Error::InternalCaseGap { .. })
        ));
    }

    #[test]
    fn constrained_lr_examples() {
        let a2 = RootSystem::new(Series::A, 2).unwrap();
        let fam = FamilyTable::freudenthal(&a2, &[w(&[0, 0]), w(&[0, 1]), w(&[1, 0])]).unwrap();
        let mut oracle = BoundaryOracle::freudenthal(&a2);
        assert_eq!(constrained_lr(&a2, &mut oracle, &fam, &w(&[0, 0]), 2, &w(&[0, 1])).unwrap(), 1);
        assert_eq!(constrained_lr(&a2, &mut oracle, &fam, &w(&[0, 1]), 2, &w(&[1, 0])).unwrap(), 1);
        // not below the window top
        assert_eq!(constrained_lr(&a2, &mut oracle, &fam, &w(&[0, 1]), 2, &w(&[0, 1])).unwrap(), 0);

        let b2 = RootSystem::new(Series::B, 2).unwrap();
        let fam = FamilyTable::freudenthal(&b2, &[w(&[1, 0])]).unwrap();
        let mut oracle = BoundaryOracle::freudenthal(&b2);
        assert!(matches!(
            constrained_lr(&b2, &mut oracle, &fam, &w(&[1, 0]), 1, &w(&[1, 0])),
            Err(Error::WindowTooWide { .. })
        ));
    }

    #[test]
    fn a2_adjoint_assembly() {
        let a2 = RootSystem::new(Series::A, 2).unwrap();
        let mut oracle = BoundaryOracle::freudenthal(&a2);
        let fam = reconstruct_up_to(&a2, &mut oracle, 2).unwrap();
        let adj = fam.get(&w(&[1, 1])).unwrap();
        assert_eq!(adj.get(&w(&[0, 0])), 2);
        assert_eq!(fam.tag(&w(&[1, 1]), &w(&[0, 0])), Some(CaseTag::Duality(1)));
        for (lambda, row) in fam.rows() {
            assert_eq!(*row, freudenthal_char(&a2, lambda).unwrap(), "{lambda}");
        }
    }

    #[test]
    fn b3_vector_via_unit_string() {
        let b3 = RootSystem::new(Series::B, 3).unwrap();
        let mut oracle = BoundaryOracle::freudenthal(&b3);
        let fam = reconstruct_up_to(&b3, &mut oracle, 1).unwrap();
        assert_eq!(fam.get(&w(&[1, 0, 0])).unwrap().get(&b3.zero()), 1);
        assert_eq!(fam.tag(&w(&[1, 0, 0]), &b3.zero()), Some(CaseTag::Boundary3));
        assert_eq!(fam.get(&w(&[0, 0, 1])).unwrap().len(), 1);
    }

    #[test]
    fn domain_is_ordered_and_closed() {
        let c3 = RootSystem::new(Series::C, 3).unwrap();
        let targets = dominant_weights_upto(3, 2);
        let domain = reconstruction_domain(&c3, &targets).unwrap();
        for pair in domain.windows(2) {
            assert!(c3.weight_cmp(&pair[0], &pair[1]).is_lt());
        }
        for t in &targets {
            for s in charring::saturated_dominants(&c3, t).unwrap() {
                assert!(domain.contains(&s));
            }
        }
    }
}
