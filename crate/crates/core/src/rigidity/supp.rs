//! Support bookkeeping, the support lemma as an exhaustive check, and the
//! table of `omega_i - w_0 omega_i` in simple-root coordinates.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootsystem::{RootSystem, RootVector, Series, Weight};

/// Indices (from 1) of the simple roots with positive coefficient.
pub fn supp(beta: &RootVector) -> Vec<usize> {
    beta.support()
}

/// `omega_i - w_0 omega_i = omega_i + (-w_0 omega_i)` in root coordinates.
pub fn dual_gap(rs: &RootSystem, i: usize) -> Result<RootVector> {
    let omega = rs.fundamental(i);
    let dual = rs.minus_w0(&omega)?;
    Ok(rs.to_root_coords(&(&omega + &dual)))
}

/// One evaluated instance of the support lemma.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuppInstance {
    pub item: u8,
    pub index: usize,
    pub k: Vec<i64>,
    /// `omega_i - w_0 omega_i - beta` in root coordinates.
    pub alpha_coeffs: Vec<i64>,
    pub support_size: usize,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuppReport {
    pub rank: usize,
    pub k_bound: i64,
    pub instances: Vec<SuppInstance>,
}

impl SuppReport {
    pub fn all_pass(&self) -> bool {
        self.instances.iter().all(|s| s.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &SuppInstance> {
        self.instances.iter().filter(|s| !s.pass)
    }

    pub fn failures_for_item(&self, item: u8) -> usize {
        self.failures().filter(|s| s.item == item).count()
    }
}

/// Enumerates `beta = alpha_1 + ... + alpha_l + sum k_j alpha_j` with
/// `0 <= k_j <= k_bound` and evaluates `|Supp(omega_i - w_0 omega_i - beta)| < l`
/// for every (item, i) whose hypotheses hold.
pub fn lemma_supp_check(rs: &RootSystem, k_bound: i64) -> Result<SuppReport> {
    let series = rs
        .series()
        .ok_or_else(|| Error::Precondition("support lemma needs a classical series".into()))?;
    if k_bound < 0 {
        return Err(Error::Precondition("k_bound must be nonnegative".into()));
    }
    let n = rs.rank();
    let gaps: Vec<Vec<i64>> = (1..=n)
        .map(|i| {
            dual_gap(rs, i)?
                .to_ints()
                .ok_or_else(|| Error::Precondition("omega_i - w0 omega_i is not integral".into()))
        })
        .collect::<Result<_>>()?;
    let minimal: Vec<bool> = (1..=n)
        .map(|i| rs.is_minimal(&rs.fundamental(i)))
        .collect::<Result<_>>()?;

    let mut instances = Vec::new();
    let mut k = vec![0i64; n];
    loop {
        let k1 = k[0];
        let k2 = k.get(1).copied().unwrap_or(0);
        let total: i64 = k.iter().sum();
        let mut eval = |item: u8, i: usize| {
            let diff: Vec<i64> = gaps[i - 1].iter().zip(&k).map(|(g, kj)| g - 1 - kj).collect();
            let size = diff.iter().filter(|&&c| c > 0).count();
            instances.push(SuppInstance {
                item,
                index: i,
                k: k.clone(),
                alpha_coeffs: diff,
                support_size: size,
                pass: size < n,
            });
        };
        if k1 >= 1 || k2 >= 2 {
            for i in 1..=n {
                eval(1, i);
            }
        }
        if matches!(series, Series::A | Series::C | Series::D) {
            eval(2, 1);
        }
        if matches!(series, Series::A | Series::B | Series::D) {
            eval(3, n);
        }
        if series == Series::B && total > 0 {
            eval(4, 1);
        }
        for i in 1..=n {
            if minimal[i - 1] {
                eval(5, i);
            }
        }

        // odometer
        let mut pos = 0;
        loop {
            if pos == n {
                return Ok(SuppReport { rank: n, k_bound, instances });
            }
            if k[pos] < k_bound {
                k[pos] += 1;
                break;
            }
            k[pos] = 0;
            pos += 1;
        }
    }
}

/// A closed form for `omega_i - w_0 omega_i`, either complete or only its
/// leading coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "alpha_coeffs", rename_all = "lowercase")]
pub enum StatedForm {
    Exact(Vec<i64>),
    Prefix(Vec<i64>),
}

impl StatedForm {
    pub fn matches(&self, computed: &[i64]) -> bool {
        match self {
            StatedForm::Exact(v) => v.as_slice() == computed,
            StatedForm::Prefix(p) => computed.len() >= p.len() && &computed[..p.len()] == p.as_slice(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityRow {
    pub index: usize,
    pub dual: Weight,
    pub alpha_coeffs: Vec<i64>,
    pub stated: Option<StatedForm>,
    pub agrees: Option<bool>,
}

/// Closed forms for the classical series, with the C-series middle
/// line read as `2 omega_i`.
pub fn stated_form(series: Series, rank: usize, i: usize) -> Option<StatedForm> {
    let l = rank;
    match series {
        Series::A => {
            if i == 1 || i == l {
                Some(StatedForm::Exact(vec![1; l]))
            } else if l >= 2 {
                Some(StatedForm::Prefix(vec![1, 2]))
            } else {
                None
            }
        }
        Series::B => {
            if i == 1 {
                Some(StatedForm::Exact(vec![2; l]))
            } else if i == l {
                Some(StatedForm::Exact((1..=l as i64).collect()))
            } else {
                Some(StatedForm::Prefix(vec![2, 4]))
            }
        }
        Series::C => {
            if i == 1 {
                let mut v = vec![2; l];
                v[l - 1] = 1;
                Some(StatedForm::Exact(v))
            } else {
                Some(StatedForm::Prefix(vec![2, 4]))
            }
        }
        Series::D => {
            if i == 1 {
                let mut v = vec![2; l];
                v[l - 2] = 1;
                v[l - 1] = 1;
                Some(StatedForm::Exact(v))
            } else if i == l {
                let mut v: Vec<i64> = (1..=l as i64 - 2).collect();
                v.push(l as i64 - 1);
                v.push(l as i64 - 1);
                Some(StatedForm::Exact(v))
            } else {
                Some(StatedForm::Prefix(vec![1, 2]))
            }
        }
    }
}

/// Computes `omega_i - w_0 omega_i` for each `i` and compares it with the
/// stated closed form. Disagreements are reported, never corrected.
pub fn fundamental_identities(rs: &RootSystem) -> Result<Vec<IdentityRow>> {
    let n = rs.rank();
    (1..=n)
        .map(|i| {
            let gap = dual_gap(rs, i)?
                .to_ints()
                .ok_or_else(|| Error::Precondition("omega_i - w0 omega_i is not integral".into()))?;
            let stated = rs.series().and_then(|s| stated_form(s, n, i));
            let agrees = stated.as_ref().map(|f| f.matches(&gap));
            Ok(IdentityRow {
                index: i,
                dual: rs.minus_w0(&rs.fundamental(i))?,
                alpha_coeffs: gap,
                stated,
                agrees,
            })
        })
        .collect()
}
