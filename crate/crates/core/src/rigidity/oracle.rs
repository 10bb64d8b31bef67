//! The boundary oracle: the only door through which the reconstruction may
//! read true multiplicities.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootsystem::{RootSystem, Series, Weight};
use crate::weylchar::CharacterTable;

/// One of the three boundary clauses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Clause {
    /// `|Supp(lambda - mu)| < rank`
    SmallSupport,
    /// `lambda_1 = 0`, `lambda - mu = alpha_1 + 2 alpha_2 + sum_{i>=3} t_i alpha_i`, `t_i >= 1`
    LeadingZero,
    /// Series B, `lambda_1 != 0`, `lambda - mu = alpha_1 + ... + alpha_l`
    UnitString,
}

impl Clause {
    pub fn number(self) -> u8 {
        match self {
            Clause::SmallSupport => 1,
            Clause::LeadingZero => 2,
            Clause::UnitString => 3,
        }
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C{}", self.number())
    }
}

fn root_diff(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> Option<Vec<i64>> {
    if lambda.rank() != rs.rank() || mu.rank() != rs.rank() {
        return None;
    }
    if !lambda.is_dominant() || !mu.is_dominant() {
        return None;
    }
    rs.root_coords_int((lambda - mu).coords())
}

/// Support size of a root-lattice vector (positive coefficients only).
fn support_size(beta: &[i64]) -> usize {
    beta.iter().filter(|&&c| c > 0).count()
}

pub fn in_clause1(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> bool {
    match root_diff(rs, lambda, mu) {
        Some(beta) => support_size(&beta) < rs.rank(),
        None => false,
    }
}

pub fn in_clause2(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> bool {
    if rs.rank() < 2 {
        return false;
    }
    match root_diff(rs, lambda, mu) {
        Some(beta) => {
            lambda.at(1) == 0 && beta[0] == 1 && beta[1] == 2 && beta[2..].iter().all(|&t| t >= 1)
        }
        None => false,
    }
}

pub fn in_clause3(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> bool {
    if rs.series() != Some(Series::B) {
        return false;
    }
    match root_diff(rs, lambda, mu) {
        Some(beta) => lambda.at(1) != 0 && beta.iter().all(|&c| c == 1),
        None => false,
    }
}

pub fn in_clause(rs: &RootSystem, clause: Clause, lambda: &Weight, mu: &Weight) -> bool {
    match clause {
        Clause::SmallSupport => in_clause1(rs, lambda, mu),
        Clause::LeadingZero => in_clause2(rs, lambda, mu),
        Clause::UnitString => in_clause3(rs, lambda, mu),
    }
}

/// Supplies multiplicities m_lambda(mu) for dominant `mu`.
pub trait MultiplicitySource {
    fn multiplicity(&mut self, rs: &RootSystem, lambda: &Weight, mu: &Weight) -> Result<i64>;
}

impl MultiplicitySource for CharacterTable {
    fn multiplicity(&mut self, rs: &RootSystem, lambda: &Weight, mu: &Weight) -> Result<i64> {
        Ok(self.ensure(rs, lambda)?.get(mu))
    }
}

impl<F> MultiplicitySource for F
where
    F: FnMut(&RootSystem, &Weight, &Weight) -> Result<i64>,
{
    fn multiplicity(&mut self, rs: &RootSystem, lambda: &Weight, mu: &Weight) -> Result<i64> {
        self(rs, lambda, mu)
    }
}

/// Boundary multiplicities with exact domain checks and a query log.
pub struct BoundaryOracle<'a, S> {
    rs: &'a RootSystem,
    source: S,
    queries: BTreeSet<(Clause, Weight, Weight)>,
    calls: usize,
}

impl<'a> BoundaryOracle<'a, CharacterTable> {
    /// The reference deployment: every clause answers with Freudenthal values.
    pub fn freudenthal(rs: &'a RootSystem) -> Self {
        BoundaryOracle::new(rs, CharacterTable::new())
    }
}

impl<'a, S: MultiplicitySource> BoundaryOracle<'a, S> {
    pub fn new(rs: &'a RootSystem, source: S) -> Self {
        BoundaryOracle { rs, source, queries: BTreeSet::new(), calls: 0 }
    }

    pub fn query(&mut self, clause: Clause, lambda: &Weight, mu: &Weight) -> Result<i64> {
        if !in_clause(self.rs, clause, lambda, mu) {
            return Err(Error::OracleRefused {
                clause: clause.number(),
                lambda: lambda.clone(),
                mu: mu.clone(),
            });
        }
        self.calls += 1;
        self.queries.insert((clause, lambda.clone(), mu.clone()));
        self.source.multiplicity(self.rs, lambda, mu)
    }

    pub fn b1(&mut self, lambda: &Weight, mu: &Weight) -> Result<i64> {
        self.query(Clause::SmallSupport, lambda, mu)
    }

    pub fn b2(&mut self, lambda: &Weight, mu: &Weight) -> Result<i64> {
        self.query(Clause::LeadingZero, lambda, mu)
    }

    pub fn b3(&mut self, lambda: &Weight, mu: &Weight) -> Result<i64> {
        self.query(Clause::UnitString, lambda, mu)
    }

    /// Number of distinct `(clause, lambda, mu)` queries answered.
    pub fn distinct_queries(&self) -> usize {
        self.queries.len()
    }

    /// Total answered calls, including repeats.
    pub fn total_calls(&self) -> usize {
        self.calls
    }

    pub fn queries(&self) -> impl Iterator<Item = &(Clause, Weight, Weight)> {
        self.queries.iter()
    }

    pub fn root_system(&self) -> &RootSystem {
        self.rs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i64]) -> Weight {
        Weight::new(v.to_vec())
    }

    #[test]
    fn clause_domains() {
        let b2 = RootSystem::new(Series::B, 2).unwrap();
        // 2 omega_2 - 0 = alpha_1 + 2 alpha_2
        assert!(in_clause2(&b2, &w(&[0, 2]), &w(&[0, 0])));
        assert!(!in_clause1(&b2, &w(&[0, 2]), &w(&[0, 0])));
        assert!(in_clause1(&b2, &w(&[0, 2]), &w(&[1, 0])));
        let b3 = RootSystem::new(Series::B, 3).unwrap();
        assert!(in_clause3(&b3, &w(&[1, 0, 0]), &w(&[0, 0, 0])));
        assert!(!in_clause3(&b3, &w(&[0, 1, 0]), &w(&[0, 0, 0])));
        let c3 = RootSystem::new(Series::C, 3).unwrap();
        assert!(!in_clause3(&c3, &w(&[2, 0, 0]), &w(&[0, 1, 0])));
        let a2 = RootSystem::new(Series::A, 2).unwrap();
        // not in the same coset
        assert!(!in_clause1(&a2, &w(&[1, 0]), &w(&[0, 1])));
        assert!(in_clause1(&a2, &w(&[2, 0]), &w(&[0, 1])));
    }

    #[test]
    fn oracle_refuses_outside_domain() {
        let a2 = RootSystem::new(Series::A, 2).unwrap();
        let mut oracle = BoundaryOracle::freudenthal(&a2);
        assert_eq!(oracle.b1(&w(&[2, 0]), &w(&[0, 1])).unwrap(), 1);
        assert_eq!(
            oracle.b1(&w(&[1, 1]), &w(&[0, 0])),
            Err(Error::OracleRefused { clause: 1, lambda: w(&[1, 1]), mu: w(&[0, 0]) })
        );
        assert!(oracle.b3(&w(&[1, 1]), &w(&[0, 0])).is_err());
        assert_eq!(oracle.distinct_queries(), 1);
        oracle.b1(&w(&[2, 0]), &w(&[0, 1])).unwrap();
        assert_eq!(oracle.distinct_queries(), 1);
        assert_eq!(oracle.total_calls(), 2);
    }
}
