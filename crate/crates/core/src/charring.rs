//! The ring of W-invariant elements of Z[weights], stored in the orbit-sum
//! ("h") basis.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use crate::error::{self, Error, Result};
use crate::rootsystem::{RootSystem, Weight};

/// A W-invariant element: h-basis coefficients keyed by dominant weights.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WInvariant {
    entries: BTreeMap<Weight, i64>,
}

impl WInvariant {
    pub fn new() -> Self {
        Self::default()
    }

    /// The orbit sum h(mu).
    pub fn h(mu: Weight) -> Result<Self> {
        if !mu.is_dominant() {
            return Err(Error::NotDominant(mu));
        }
        let mut entries = BTreeMap::new();
        entries.insert(mu, 1);
        Ok(WInvariant { entries })
    }

    pub fn from_entries<I: IntoIterator<Item = (Weight, i64)>>(it: I) -> Result<Self> {
        let mut f = WInvariant::new();
        for (w, c) in it {
            f.add_term(w, c)?;
        }
        Ok(f)
    }

    pub fn add_term(&mut self, mu: Weight, c: i64) -> Result<()> {
        if !mu.is_dominant() {
            return Err(Error::NotDominant(mu));
        }
        if c == 0 {
            return Ok(());
        }
        let slot = self.entries.entry(mu).or_insert(0);
        *slot = error::add(*slot, c, "h-basis accumulation")?;
        if *slot == 0 {
            self.entries.retain(|_, v| *v != 0);
        }
        Ok(())
    }

    /// Overwrites the coefficient at `mu` (removing it if `c == 0`).
    pub fn set(&mut self, mu: Weight, c: i64) -> Result<()> {
        if !mu.is_dominant() {
            return Err(Error::NotDominant(mu));
        }
        if c == 0 {
            self.entries.remove(&mu);
        } else {
            self.entries.insert(mu, c);
        }
        Ok(())
    }

    pub fn get(&self, mu: &Weight) -> i64 {
        self.entries.get(mu).copied().unwrap_or(0)
    }

    pub fn contains(&self, mu: &Weight) -> bool {
        self.entries.contains_key(mu)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.entries.iter().map(|(w, &c)| (w, c))
    }

    pub fn keys(&self) -> impl Iterator<Item = &Weight> {
        self.entries.keys()
    }

    /// Entries sorted by descending (., rho), ties lexicographically descending.
    pub fn sorted_desc(&self, rs: &RootSystem) -> Vec<(Weight, i64)> {
        let mut v: Vec<(Weight, i64)> = self.entries.iter().map(|(w, &c)| (w.clone(), c)).collect();
        v.sort_by_cached_key(|(w, _)| std::cmp::Reverse((rs.height(w), w.clone())));
        v
    }

    /// The key of maximal (., rho).
    pub fn top(&self, rs: &RootSystem) -> Option<&Weight> {
        self.entries.keys().max_by(|a, b| rs.weight_cmp(a, b))
    }

    pub fn scaled(&self, k: i64) -> Result<Self> {
        let mut out = WInvariant::new();
        for (w, c) in self.iter() {
            out.add_term(w.clone(), error::mul(c, k, "scaling")?)?;
        }
        Ok(out)
    }

    /// `self += k * other`
    pub fn add_scaled(&mut self, other: &WInvariant, k: i64) -> Result<()> {
        for (w, c) in other.iter() {
            self.add_term(w.clone(), error::mul(c, k, "scaled addition")?)?;
        }
        Ok(())
    }
}

/// Full e-basis expansion of a W-invariant element.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EExpansion {
    entries: BTreeMap<Weight, i64>,
}

impl EExpansion {
    pub fn get(&self, x: &Weight) -> i64 {
        self.entries.get(x).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.entries.iter().map(|(w, &c)| (w, c))
    }

    /// Sum of all coefficients (the dimension, for a character).
    pub fn total(&self) -> i64 {
        self.entries.values().sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    /// h-basis coefficient at a dominant weight.
    H,
    /// e-basis coefficient at an arbitrary weight.
    E,
}

/// Dominant weights mu with lambda - mu a nonnegative integer combination of
/// simple roots, sorted by descending (., rho); `lambda` comes first.
pub fn saturated_dominants(rs: &RootSystem, lambda: &Weight) -> Result<Vec<Weight>> {
    rs.check_dominant(lambda)?;
    // Every dominant mu strictly below a dominant nu has some positive root
    // alpha with nu - alpha dominant and mu <= nu - alpha, so walking down
    // through dominant weights by positive roots reaches all of them.
    let mut seen: HashSet<Weight> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(lambda.clone());
    queue.push_back(lambda.clone());
    while let Some(nu) = queue.pop_front() {
        for alpha in rs.positive_roots_fund() {
            let next = &nu - alpha;
            if next.is_dominant() && !seen.contains(&next) {
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    let mut out: Vec<Weight> = seen.into_iter().collect();
    rs.sort_descending(&mut out);
    Ok(out)
}

/// Replaces each h(mu) by the sum of e(x) over the orbit of mu.
pub fn expand(rs: &RootSystem, f: &WInvariant) -> Result<EExpansion> {
    let mut entries = BTreeMap::new();
    for (mu, c) in f.iter() {
        for x in rs.weyl_orbit(mu)? {
            let slot = entries.entry(x).or_insert(0i64);
            *slot = error::add(*slot, c, "e-basis expansion")?;
        }
    }
    entries.retain(|_, v| *v != 0);
    Ok(EExpansion { entries })
}

/// Flat e-basis expansion: `(coords, coefficient)` with coordinates packed
/// row-major.
fn expand_flat(rs: &RootSystem, f: &WInvariant) -> (Vec<i64>, Vec<i64>) {
    let mut coords = Vec::new();
    let mut coeffs = Vec::new();
    for (mu, c) in f.iter() {
        for x in rs.orbit_unchecked(mu) {
            coords.extend_from_slice(x.coords());
            coeffs.push(c);
        }
    }
    (coords, coeffs)
}

/// Product in Z[weights]^W, computed by e-basis convolution and collected at
/// dominant weights.
pub fn product(rs: &RootSystem, f: &WInvariant, g: &WInvariant) -> Result<WInvariant> {
    let n = rs.rank();
    for w in f.keys().chain(g.keys()) {
        rs.check_weight(w)?;
    }
    let (fc, fk) = expand_flat(rs, f);
    let (gc, gk) = expand_flat(rs, g);
    let mut acc: HashMap<Vec<i64>, i64> = HashMap::new();
    let mut buf = vec![0i64; n];
    for (x, &a) in fc.chunks_exact(n).zip(&fk) {
        'inner: for (y, &b) in gc.chunks_exact(n).zip(&gk) {
            for k in 0..n {
                let s = x[k] + y[k];
                if s < 0 {
                    continue 'inner;
                }
                buf[k] = s;
            }
            let term = error::mul(a, b, "convolution")?;
            match acc.get_mut(buf.as_slice()) {
                Some(v) => *v = error::add(*v, term, "convolution")?,
                None => {
                    acc.insert(buf.clone(), term);
                }
            }
        }
    }
    WInvariant::from_entries(acc.into_iter().map(|(k, v)| (Weight::new(k), v)))
}

/// The h-coefficient at a dominant weight, or the e-coefficient at any weight.
pub fn coefficient(rs: &RootSystem, f: &WInvariant, w: &Weight, basis: Basis) -> Result<i64> {
    rs.check_weight(w)?;
    match basis {
        Basis::H => {
            if !w.is_dominant() {
                return Err(Error::NotDominant(w.clone()));
            }
            Ok(f.get(w))
        }
        Basis::E => Ok(f.get(&rs.dominant_rep(w))),
    }
}

/// Read access to a family of rows `f_lambda`.
pub trait RowLookup {
    fn row(&self, lambda: &Weight) -> Option<&WInvariant>;
}

impl RowLookup for BTreeMap<Weight, WInvariant> {
    fn row(&self, lambda: &Weight) -> Option<&WInvariant> {
        self.get(lambda)
    }
}

/// Writes `f` as a combination of family rows by repeatedly removing the
/// row of the currently maximal weight.
pub fn peel_decompose<F: RowLookup + ?Sized>(
    rs: &RootSystem,
    f: &WInvariant,
    family: &F,
) -> Result<BTreeMap<Weight, i64>> {
    let mut rest = f.clone();
    let mut out = BTreeMap::new();
    while let Some(s) = rest.top(rs).cloned() {
        let c = rest.get(&s);
        let row = family.row(&s).ok_or_else(|| Error::MissingFamilyRow(s.clone()))?;
        let lead = row.get(&s);
        if lead != 1 {
            return Err(Error::Precondition(format!(
                "row {s} has leading coefficient {lead}, expected 1"
            )));
        }
        rest.add_scaled(row, -c)?;
        if rest.contains(&s) {
            return Err(Error::Precondition(format!("row {s} is not led by {s}")));
        }
        out.insert(s, c);
    }
    Ok(out)
}

/// Sum of `c(s) * f_s`.
pub fn recombine<F: RowLookup + ?Sized>(
    coeffs: &BTreeMap<Weight, i64>,
    family: &F,
) -> Result<WInvariant> {
    let mut out = WInvariant::new();
    for (s, &c) in coeffs {
        let row = family.row(s).ok_or_else(|| Error::MissingFamilyRow(s.clone()))?;
        out.add_scaled(row, c)?;
    }
    Ok(out)
}
