//! Reference characters: the Freudenthal recursion, the Weyl dimension
//! product, tensor product coefficients, and restriction to Levi subsystems.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::charring::{self, RowLookup, WInvariant};
use crate::error::{Error, Result};
use crate::rootsystem::{Rational, RootSystem, Weight};

/// Character rows keyed by highest weight.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CharacterTable {
    rows: BTreeMap<Weight, WInvariant>,
}

impl CharacterTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, lambda: &Weight) -> Option<&WInvariant> {
        self.rows.get(lambda)
    }

    pub fn insert(&mut self, lambda: Weight, row: WInvariant) {
        self.rows.insert(lambda, row);
    }

    pub fn contains(&self, lambda: &Weight) -> bool {
        self.rows.contains_key(lambda)
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &WInvariant)> {
        self.rows.iter()
    }

    pub fn rows(&self) -> &BTreeMap<Weight, WInvariant> {
        &self.rows
    }

    /// Freudenthal row for `lambda`, computed on first use.
    pub fn ensure(&mut self, rs: &RootSystem, lambda: &Weight) -> Result<&WInvariant> {
        if !self.rows.contains_key(lambda) {
            let row = freudenthal_char(rs, lambda)?;
            self.rows.insert(lambda.clone(), row);
        }
        Ok(&self.rows[lambda])
    }

    /// Ensures rows for every dominant weight below `lambda`.
    pub fn ensure_saturated(&mut self, rs: &RootSystem, lambda: &Weight) -> Result<()> {
        for s in charring::saturated_dominants(rs, lambda)? {
            self.ensure(rs, &s)?;
        }
        Ok(())
    }

    /// Memoized decomposition of `ch_mu * ch_nu`.
    pub fn tensor_coeffs(
        &mut self,
        rs: &RootSystem,
        mu: &Weight,
        nu: &Weight,
    ) -> Result<BTreeMap<Weight, i64>> {
        rs.check_dominant(mu)?;
        rs.check_dominant(nu)?;
        self.ensure(rs, mu)?;
        self.ensure(rs, nu)?;
        self.ensure_saturated(rs, &(mu + nu))?;
        let prod = charring::product(rs, &self.rows[mu], &self.rows[nu])?;
        charring::peel_decompose(rs, &prod, self)
    }
}

impl RowLookup for CharacterTable {
    fn row(&self, lambda: &Weight) -> Option<&WInvariant> {
        self.rows.get(lambda)
    }
}

/// Dominant weight multiplicities of the irreducible module of highest
/// weight `lambda`, by the Freudenthal recursion.
pub fn freudenthal_char(rs: &RootSystem, lambda: &Weight) -> Result<WInvariant> {
    let dominants = charring::saturated_dominants(rs, lambda)?;
    let roots = rs.positive_roots();
    let rho = rs.rho();
    let lr = lambda + &rho;
    let top = rs.inner_product(&lr, &lr)?;
    // Squared lengths are fixed per root; precompute.
    let root_norms: Vec<Rational> = roots
        .iter()
        .map(|a| rs.inner_product(a, a))
        .collect::<Result<_>>()?;

    let mut mult: BTreeMap<Weight, i64> = BTreeMap::new();
    mult.insert(lambda.clone(), 1);
    for mu in dominants.iter().skip(1) {
        let mr = mu + &rho;
        let denom = top - rs.inner_product(&mr, &mr)?;
        if denom.is_zero() {
            return Err(Error::ZeroDenominator { lambda: lambda.clone(), mu: mu.clone() });
        }
        let mut sum = Rational::zero();
        for ((alpha, alpha_fund), norm) in roots.iter().zip(rs.positive_roots_fund()).zip(&root_norms) {
            let base = rs.inner_product(alpha, mu)?;
            let mut x = mu.clone();
            let mut k = 1i64;
            loop {
                x = &x + alpha_fund;
                let d = rs.dominant_rep(&x);
                if !rs.dominance_leq(&d, lambda) {
                    break;
                }
                let m = *mult.get(&d).ok_or_else(|| {
                    Error::Precondition(format!("multiplicity of {d} requested before it was computed"))
                })?;
                if m != 0 {
                    let pairing = base + *norm * Rational::from_integer(k);
                    sum += pairing * Rational::from_integer(m);
                }
                k += 1;
            }
        }
        let value = sum * Rational::from_integer(2) / denom;
        if !value.is_integer() {
            return Err(Error::Precondition(format!(
                "non-integral multiplicity {value} at {mu} in {lambda}"
            )));
        }
        mult.insert(mu.clone(), value.to_integer());
    }
    WInvariant::from_entries(mult)
}

/// Product over positive roots of (lambda + rho, alpha) / (rho, alpha).
pub fn weyl_dimension(rs: &RootSystem, lambda: &Weight) -> Result<i64> {
    rs.check_dominant(lambda)?;
    let rho = rs.rho();
    let lr = lambda + &rho;
    let mut acc = Rational::from_integer(1);
    for alpha in rs.positive_roots() {
        acc *= rs.inner_product(&lr, &alpha)? / rs.inner_product(&rho, &alpha)?;
    }
    if !acc.is_integer() {
        return Err(Error::Precondition(format!("non-integral dimension {acc}")));
    }
    Ok(acc.to_integer())
}

/// All c_{mu,nu}^lambda, from Freudenthal rows.
pub fn tensor_coeffs(rs: &RootSystem, mu: &Weight, nu: &Weight) -> Result<BTreeMap<Weight, i64>> {
    CharacterTable::new().tensor_coeffs(rs, mu, nu)
}

/// A nonempty proper subset of Dynkin nodes (indices from 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeviSelector {
    nodes: Vec<usize>,
}

impl LeviSelector {
    pub fn new(rank: usize, mut nodes: Vec<usize>) -> Result<Self> {
        nodes.sort_unstable();
        nodes.dedup();
        if nodes.is_empty() || nodes.len() >= rank || nodes.iter().any(|&i| i == 0 || i > rank) {
            return Err(Error::Precondition(format!(
                "Levi nodes {nodes:?} must form a nonempty proper subset of 1..={rank}"
            )));
        }
        Ok(LeviSelector { nodes })
    }

    pub fn nodes(&self) -> &[usize] {
        &self.nodes
    }

    pub fn restrict(&self, w: &Weight) -> Weight {
        Weight::new(self.nodes.iter().map(|&i| w.at(i)).collect())
    }

    pub fn subsystem(&self, rs: &RootSystem) -> Result<RootSystem> {
        rs.subsystem(&self.nodes)
    }
}

/// Both sides of the Levi restriction identity for one weight pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeviComparison {
    /// Nodes of the support of lambda - mu; empty when lambda = mu.
    pub nodes: Vec<usize>,
    pub full: i64,
    pub restricted: i64,
}

impl LeviComparison {
    pub fn agrees(&self) -> bool {
        self.full == self.restricted
    }
}

/// Compares m_lambda(mu) with the multiplicity of the restricted weights in
/// the Levi subsystem spanned by the support of lambda - mu. `mu` may be any
/// weight below `lambda`.
pub fn levi_compare(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> Result<LeviComparison> {
    rs.check_dominant(lambda)?;
    rs.check_weight(mu)?;
    let beta = rs.to_root_coords(&(lambda - mu));
    if !beta.is_nonneg_integral() {
        return Err(Error::Precondition(format!("{mu} is not below {lambda}")));
    }
    let support = beta.support();
    if support.len() == rs.rank() {
        return Err(Error::SupportFull { lambda: lambda.clone(), mu: mu.clone() });
    }
    let full = freudenthal_char(rs, lambda)?.get(&rs.dominant_rep(mu));
    if support.is_empty() {
        return Ok(LeviComparison { nodes: support, full, restricted: 1 });
    }
    let levi = LeviSelector::new(rs.rank(), support)?;
    let sub = levi.subsystem(rs)?;
    let restricted = levi_multiplicity(&sub, &levi, lambda, mu)?;
    Ok(LeviComparison { nodes: levi.nodes, full, restricted })
}

/// Multiplicity of the restriction of `mu` in the Levi module generated by
/// the restriction of `lambda`.
pub fn levi_multiplicity(
    sub: &RootSystem,
    levi: &LeviSelector,
    lambda: &Weight,
    mu: &Weight,
) -> Result<i64> {
    let top = levi.restrict(lambda);
    let target = sub.dominant_rep(&levi.restrict(mu));
    Ok(freudenthal_char(sub, &top)?.get(&target))
}

pub fn levi_check(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> Result<bool> {
    Ok(levi_compare(rs, lambda, mu)?.agrees())
}
