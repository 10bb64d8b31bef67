use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::charring::{RowLookup, WInvariant};
use crate::error::{Error, Result};
use crate::rootsystem::{RootSystem, Weight};
use crate::weylchar::CharacterTable;

/// How a reconstructed entry was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CaseTag {
    Boundary1,
    Boundary2,
    Boundary3,
    /// Tensor duality through `omega_i`, with the dual coefficient read from
    /// boundary data only.
    Duality(usize),
    /// Tensor duality through `omega_i` where the dual coefficient needed
    /// full-support data and was peeled from rows reconstructed earlier.
    InductiveDuality(usize),
}

impl CaseTag {
    pub fn duality_index(self) -> Option<usize> {
        match self {
            CaseTag::Duality(i) | CaseTag::InductiveDuality(i) => Some(i),
            _ => None,
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseTag::Boundary1 => write!(f, "boundary1"),
            CaseTag::Boundary2 => write!(f, "boundary2"),
            CaseTag::Boundary3 => write!(f, "boundary3"),
            CaseTag::Duality(i) => write!(f, "duality({i})"),
            CaseTag::InductiveDuality(i) => write!(f, "inductive-duality({i})"),
        }
    }
}

/// A family of candidate characters `f_lambda`, each led by 1 at `lambda`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FamilyTable {
    rows: BTreeMap<Weight, WInvariant>,
    provenance: BTreeMap<(Weight, Weight), CaseTag>,
}

impl FamilyTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Freudenthal rows for each of `weights`.
    pub fn freudenthal<'a, I>(rs: &RootSystem, weights: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a Weight>,
    {
        let mut table = CharacterTable::new();
        let mut fam = FamilyTable::new();
        for w in weights {
            let row = table.ensure(rs, w)?.clone();
            fam.insert_row(w.clone(), row)?;
        }
        Ok(fam)
    }

    pub fn insert_row(&mut self, lambda: Weight, row: WInvariant) -> Result<()> {
        if row.get(&lambda) != 1 {
            return Err(Error::Precondition(format!("row {lambda} must be led by 1")));
        }
        self.rows.insert(lambda, row);
        Ok(())
    }

    pub fn set_provenance(&mut self, lambda: Weight, mu: Weight, tag: CaseTag) {
        self.provenance.insert((lambda, mu), tag);
    }

    pub fn get(&self, lambda: &Weight) -> Option<&WInvariant> {
        self.rows.get(lambda)
    }

    pub fn contains(&self, lambda: &Weight) -> bool {
        self.rows.contains_key(lambda)
    }

    pub fn rows(&self) -> &BTreeMap<Weight, WInvariant> {
        &self.rows
    }

    pub fn provenance(&self) -> &BTreeMap<(Weight, Weight), CaseTag> {
        &self.provenance
    }

    pub fn tag(&self, lambda: &Weight, mu: &Weight) -> Option<CaseTag> {
        self.provenance.get(&(lambda.clone(), mu.clone())).copied()
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Total number of stored `(lambda, mu)` entries.
    pub fn entry_count(&self) -> usize {
        self.rows.values().map(|r| r.len()).sum()
    }

    /// Adds `delta` to `n_lambda(mu)`; `mu` must differ from `lambda`.
    pub fn perturb(&mut self, lambda: &Weight, mu: &Weight, delta: i64) -> Result<()> {
        if lambda == mu {
            return Err(Error::Precondition("the leading entry is fixed at 1".into()));
        }
        let row = self
            .rows
            .get_mut(lambda)
            .ok_or_else(|| Error::MissingFamilyRow(lambda.clone()))?;
        row.add_term(mu.clone(), delta)
    }
}

impl RowLookup for FamilyTable {
    fn row(&self, lambda: &Weight) -> Option<&WInvariant> {
        self.rows.get(lambda)
    }
}
