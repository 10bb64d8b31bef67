//! Checks a candidate family against conditions C1-C4 and probes
//! uniqueness by perturbing true characters.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::charring::{self, RowLookup};
use crate::error::{Error, Result};
use crate::rigidity::family::FamilyTable;
use crate::rigidity::oracle::{in_clause, Clause};
use crate::rigidity::reconstruct::dominant_weights_upto;
use crate::rootsystem::{RootSystem, Weight};
use crate::weylchar::CharacterTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Condition {
    C1,
    C2,
    C3,
    C4,
}

impl From<Clause> for Condition {
    fn from(c: Clause) -> Self {
        match c {
            Clause::SmallSupport => Condition::C1,
            Clause::LeadingZero => Condition::C2,
            Clause::UnitString => Condition::C3,
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerifyMode {
    Full,
    FundamentalOnly,
}

impl FromStr for VerifyMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(VerifyMode::Full),
            "fundamental-only" => Ok(VerifyMode::FundamentalOnly),
            other => Err(Error::Precondition(format!("unknown mode {other}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub lambda: Weight,
    pub mu: Weight,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nu: Option<Weight>,
}

/// For C1-C3, `expected` is the true multiplicity and `found` the family
/// entry. For C4, `expected` is `n^lambda_{mu,nu}` and `found` is
/// `n^mu_{lambda,-w0 nu}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ViolationReport {
    pub condition: Condition,
    pub witness: Witness,
    pub expected: i64,
    pub found: i64,
}

impl fmt::Display for ViolationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = &self.witness;
        write!(f, "{} violated at lambda={} mu={}", self.condition, w.lambda, w.mu)?;
        if let Some(nu) = &w.nu {
            write!(f, " nu={nu}")?;
        }
        write!(f, ": expected {}, found {}", self.expected, self.found)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Violation(ViolationReport),
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn violation(&self) -> Option<&ViolationReport> {
        match self {
            Verdict::Pass => None,
            Verdict::Violation(v) => Some(v),
        }
    }
}

fn second_factors(rs: &RootSystem, range: &[Weight], mode: VerifyMode) -> Vec<Weight> {
    match mode {
        VerifyMode::Full => range.to_vec(),
        VerifyMode::FundamentalOnly => (1..=rs.rank()).map(|i| rs.fundamental(i)).collect(),
    }
}

fn sorted_range(rs: &RootSystem, cutoff: i64) -> Vec<Weight> {
    let mut r = dominant_weights_upto(rs.rank(), cutoff);
    rs.sort_ascending(&mut r);
    r
}

/// Rows a family must hold for `verify_conditions` at this cutoff and mode.
pub fn required_coverage(rs: &RootSystem, cutoff: i64, mode: VerifyMode) -> Result<Vec<Weight>> {
    let range = sorted_range(rs, cutoff);
    let nus = second_factors(rs, &range, mode);
    let mut tops: BTreeSet<Weight> = BTreeSet::new();
    for mu in &range {
        for nu in &nus {
            tops.insert(mu + nu);
        }
    }
    let mut out: BTreeSet<Weight> = range.iter().cloned().collect();
    let mut covered: BTreeSet<Weight> = BTreeSet::new();
    for top in tops {
        if covered.contains(&top) {
            continue;
        }
        for s in charring::saturated_dominants(rs, &top)? {
            covered.insert(s.clone());
            out.insert(s);
        }
    }
    let mut out: Vec<Weight> = out.into_iter().collect();
    rs.sort_ascending(&mut out);
    Ok(out)
}

fn coverage(e: Error) -> Error {
    match e {
        Error::MissingFamilyRow(w) => Error::InsufficientCoverage(w),
        other => other,
    }
}

/// Memoized peels of `f_a * f_b`.
struct PeelCache<'a> {
    rs: &'a RootSystem,
    family: &'a FamilyTable,
    peels: HashMap<(Weight, Weight), BTreeMap<Weight, i64>>,
}

impl<'a> PeelCache<'a> {
    fn coeff(&mut self, a: &Weight, b: &Weight, s: &Weight) -> Result<i64> {
        let key = if a <= b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
        if !self.peels.contains_key(&key) {
            let fa = self.family.row(&key.0).ok_or_else(|| Error::InsufficientCoverage(key.0.clone()))?;
            let fb = self.family.row(&key.1).ok_or_else(|| Error::InsufficientCoverage(key.1.clone()))?;
            let prod = charring::product(self.rs, fa, fb)?;
            let peel = charring::peel_decompose(self.rs, &prod, self.family).map_err(coverage)?;
            self.peels.insert(key.clone(), peel);
        }
        Ok(self.peels[&key].get(s).copied().unwrap_or(0))
    }
}

/// Checks C1-C3 against Freudenthal values on their domains,
/// then C4 on every triple in range. Returns the first violation
/// in a fixed order.
pub fn verify_conditions(
    rs: &RootSystem,
    family: &FamilyTable,
    cutoff: i64,
    mode: VerifyMode,
) -> Result<Verdict> {
    if cutoff < 0 {
        return Err(Error::Precondition("cutoff must be nonnegative".into()));
    }
    let range = sorted_range(rs, cutoff);
    let mut reference = CharacterTable::new();
    let clauses = [Clause::SmallSupport, Clause::LeadingZero, Clause::UnitString];

    for clause in clauses {
        for lambda in &range {
            let row = family.row(lambda).ok_or_else(|| Error::InsufficientCoverage(lambda.clone()))?;
            let mut mus: BTreeSet<Weight> = charring::saturated_dominants(rs, lambda)?.into_iter().collect();
            mus.extend(row.keys().cloned());
            let mut mus: Vec<Weight> = mus.into_iter().collect();
            rs.sort_descending(&mut mus);
            for mu in &mus {
                if !in_clause(rs, clause, lambda, mu) {
                    continue;
                }
                let expected = reference.ensure(rs, lambda)?.get(mu);
                let found = row.get(mu);
                if expected != found {
                    return Ok(Verdict::Violation(ViolationReport {
                        condition: clause.into(),
                        witness: Witness { lambda: lambda.clone(), mu: mu.clone(), nu: None },
                        expected,
                        found,
                    }));
                }
            }
        }
    }

    let mut cache = PeelCache { rs, family, peels: HashMap::new() };
    for nu in second_factors(rs, &range, mode) {
        let dual = rs.minus_w0(&nu)?;
        for mu in &range {
            for lambda in &range {
                let expected = cache.coeff(mu, &nu, lambda)?;
                let found = cache.coeff(lambda, &dual, mu)?;
                if expected != found {
                    return Ok(Verdict::Violation(ViolationReport {
                        condition: Condition::C4,
                        witness: Witness { lambda: lambda.clone(), mu: mu.clone(), nu: Some(nu.clone()) },
                        expected,
                        found,
                    }));
                }
            }
        }
    }
    Ok(Verdict::Pass)
}

/// Adds `delta` to the true `n_lambda(mu)` and searches for a violated
/// condition, first at `cutoff` and then one shell further out.
pub fn falsify(
    rs: &RootSystem,
    lambda: &Weight,
    mu: &Weight,
    delta: i64,
    cutoff: i64,
) -> Result<ViolationReport> {
    rs.check_dominant(lambda)?;
    rs.check_dominant(mu)?;
    if delta == 0 {
        return Err(Error::Precondition("delta must be nonzero".into()));
    }
    if lambda == mu || !charring::saturated_dominants(rs, lambda)?.contains(mu) {
        return Err(Error::Precondition(format!("{mu} is not a dominant weight strictly below {lambda}")));
    }
    if lambda.coord_sum() > cutoff {
        return Err(Error::Precondition(format!("{lambda} lies beyond cutoff {cutoff}")));
    }
    for c in [cutoff, cutoff + 1] {
        let cover = required_coverage(rs, c, VerifyMode::Full)?;
        let mut family = FamilyTable::freudenthal(rs, &cover)?;
        family.perturb(lambda, mu, delta)?;
        if let Verdict::Violation(v) = verify_conditions(rs, &family, c, VerifyMode::Full)? {
            return Ok(v);
        }
    }
    Err(Error::NoViolationFound { lambda: lambda.clone(), mu: mu.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsystem::Series;

    fn w(v: &[i64]) -> Weight {
        Weight::new(v.to_vec())
    }

    #[test]
    fn freudenthal_family_passes() {
        let a2 = RootSystem::new(Series::A, 2).unwrap();
        for mode in [VerifyMode::Full, VerifyMode::FundamentalOnly] {
            let cover = required_coverage(&a2, 2, mode).unwrap();
            let fam = FamilyTable::freudenthal(&a2, &cover).unwrap();
            assert_eq!(verify_conditions(&a2, &fam, 2, mode).unwrap(), Verdict::Pass);
        }
    }

    #[test]
    fn trivial_family_passes() {
        let b2 = RootSystem::new(Series::B, 2).unwrap();
        let fam = FamilyTable::freudenthal(&b2, &[w(&[0, 0])]).unwrap();
        assert!(verify_conditions(&b2, &fam, 0, VerifyMode::Full).unwrap().is_pass());
    }

    #[test]
    fn perturbed_adjoint_breaks_duality() {
        let a2 = RootSystem::new(Series::A, 2).unwrap();
        let cover = required_coverage(&a2, 2, VerifyMode::Full).unwrap();
        let mut fam = FamilyTable::freudenthal(&a2, &cover).unwrap();
        fam.perturb(&w(&[1, 1]), &w(&[0, 0]), 1).unwrap();
        let v = verify_conditions(&a2, &fam, 2, VerifyMode::Full).unwrap();
        let v = v.violation().unwrap();
        assert_eq!(v.condition, Condition::C4);
        let nu = v.witness.nu.as_ref().unwrap();
        assert_eq!(nu.coord_sum(), 1);
        assert_ne!(v.expected, v.found);
    }

    #[test]
    fn missing_rows_reported() {
        let a2 = RootSystem::new(Series::A, 2).unwrap();
        let fam = FamilyTable::freudenthal(&a2, &[w(&[0, 0])]).unwrap();
        assert!(matches!(
            verify_conditions(&a2, &fam, 1, VerifyMode::Full),
            Err(Error::InsufficientCoverage(_))
        ));
    }

    #[test]
    fn falsify_examples() {
        let a2 = RootSystem::new(Series::A, 2).unwrap();
        assert_eq!(falsify(&a2, &w(&[1, 1]), &w(&[0, 0]), 1, 3).unwrap().condition, Condition::C4);
        assert_eq!(falsify(&a2, &w(&[2, 0]), &w(&[0, 1]), 1, 3).unwrap().condition, Condition::C1);
        let b2 = RootSystem::new(Series::B, 2).unwrap();
        assert_eq!(falsify(&b2, &w(&[0, 2]), &w(&[0, 0]), 1, 3).unwrap().condition, Condition::C2);
    }
}
