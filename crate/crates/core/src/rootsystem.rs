//! Root systems of the classical series in Bourbaki numbering.
//!
//! Weights are integer vectors in the fundamental-weight basis; differences of
//! weights are measured in the simple-root basis through the inverse Cartan
//! matrix. All arithmetic is exact.

use std::cmp::Ordering;
use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
}

impl Series {
    pub fn min_rank(self) -> usize {
        match self {
            Series::A => 1,
            Series::B | Series::C => 2,
            Series::D => 4,
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Series::A => "A",
            Series::B => "B",
            Series::C => "C",
            Series::D => "D",
        };
        f.write_str(s)
    }
}

impl FromStr for Series {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim() {
            "A" | "a" => Ok(Series::A),
            "B" | "b" => Ok(Series::B),
            "C" | "c" => Ok(Series::C),
            "D" | "d" => Ok(Series::D),
            other => Err(format!("unknown series '{other}' (expected A, B, C or D)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LieType {
    series: Series,
    rank: usize,
}

impl LieType {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        if rank < series.min_rank() {
            return Err(Error::RankOutOfRange { series, rank });
        }
        Ok(LieType { series, rank })
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// True for C_2, where `lambda - mu = alpha_1 + alpha_2 + ...` no longer
    /// forces `lambda_1 != 0`.
    pub fn has_c2_caveat(&self) -> bool {
        self.series == Series::C && self.rank == 2
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series, self.rank)
    }
}

/// A weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// The fundamental weight omega_i, with `i` counted from 1.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= rank, "fundamental index {i} out of 1..={rank}");
        let mut v = vec![0; rank];
        v[i - 1] = 1;
        Weight(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn coord_sum(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Coordinate `i`, counted from 1.
    pub fn at(&self, i: usize) -> i64 {
        self.0[i - 1]
    }

    /// Smallest index (from 1) with a nonzero coordinate.
    pub fn first_nonzero(&self) -> Option<usize> {
        self.0.iter().position(|&c| c != 0).map(|p| p + 1)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), rhs.rank());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), rhs.rank());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

/// A vector in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootVector(Vec<Rational>);

impl RootVector {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        RootVector(coeffs)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        RootVector(coeffs.iter().map(|&c| Rational::from_integer(c)).collect())
    }

    pub fn zero(rank: usize) -> Self {
        RootVector(vec![Rational::zero(); rank])
    }

    /// The simple root alpha_i, `i` counted from 1.
    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![Rational::zero(); rank];
        v[i - 1] = Rational::one();
        RootVector(v)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    /// True iff every coefficient is a nonnegative integer.
    pub fn is_nonneg_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer() && !c.is_negative())
    }

    /// Integer coefficients, if the vector lies in the root lattice.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.0
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// Indices (from 1) of strictly positive coefficients.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_positive())
            .map(|(k, _)| k + 1)
            .collect()
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Sub for &RootVector {
    type Output = RootVector;
    fn sub(self, rhs: &RootVector) -> RootVector {
        RootVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

/// Anything living in the real span of the weight lattice.
pub trait WeightSpaceVector {
    fn dim(&self) -> usize;
    fn root_coords(&self, rs: &RootSystem) -> RootVector;
    fn fund_coords(&self, rs: &RootSystem) -> Vec<Rational>;
}

impl WeightSpaceVector for Weight {
    fn dim(&self) -> usize {
        self.rank()
    }
    fn root_coords(&self, rs: &RootSystem) -> RootVector {
        rs.to_root_coords(self)
    }
    fn fund_coords(&self, _rs: &RootSystem) -> Vec<Rational> {
        self.0.iter().map(|&c| Rational::from_integer(c)).collect()
    }
}

impl WeightSpaceVector for RootVector {
    fn dim(&self) -> usize {
        self.rank()
    }
    fn root_coords(&self, _rs: &RootSystem) -> RootVector {
        self.clone()
    }
    fn fund_coords(&self, rs: &RootSystem) -> Vec<Rational> {
        let n = rs.rank();
        (0..n)
            .map(|i| {
                (0..n).fold(Rational::zero(), |acc, j| {
                    acc + self.0[j] * Rational::from_integer(rs.cartan[i][j])
                })
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    lie_type: Option<LieType>,
    /// `cartan[i][j]` is the pairing of alpha_j with the coroot of alpha_i, so
    /// column `j` holds alpha_j in fundamental coordinates.
    cartan: Vec<Vec<i64>>,
    sym_lengths: Vec<Rational>,
    inverse: Vec<Vec<Rational>>,
    inv_num: Vec<Vec<i64>>,
    inv_den: i64,
    height_num: Vec<i64>,
    height_den: i64,
    positive_roots: Vec<Vec<i64>>,
    positive_roots_fund: Vec<Weight>,
}

impl RootSystem {
    /// Builds the root system of a classical simple Lie algebra.
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        Self::build(LieType::new(series, rank)?)
    }

    pub fn build(t: LieType) -> Result<Self> {
        let (cartan, sym) = classical_cartan(t.series, t.rank);
        let mut rs = Self::from_cartan(cartan, sym)?;
        rs.lie_type = Some(t);
        Ok(rs)
    }

    /// Builds a (possibly reducible) root system from a symmetrizable Cartan
    /// matrix. `sym_lengths[i]` is half the squared length of alpha_i.
    pub fn from_cartan(cartan: Vec<Vec<i64>>, sym_lengths: Vec<Rational>) -> Result<Self> {
        let n = cartan.len();
        if n == 0 {
            return Err(Error::InvalidCartan("empty matrix".into()));
        }
        if cartan.iter().any(|r| r.len() != n) || sym_lengths.len() != n {
            return Err(Error::InvalidCartan("matrix is not square".into()));
        }
        for i in 0..n {
            if cartan[i][i] != 2 {
                return Err(Error::InvalidCartan(format!("diagonal entry {i} is not 2")));
            }
            if !sym_lengths[i].is_positive() {
                return Err(Error::InvalidCartan("nonpositive root length".into()));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                if !(-3..=0).contains(&cartan[i][j]) {
                    return Err(Error::InvalidCartan(format!("entry ({i},{j}) out of range")));
                }
                if (cartan[i][j] == 0) != (cartan[j][i] == 0) {
                    return Err(Error::InvalidCartan("zero pattern is not symmetric".into()));
                }
                let lhs = sym_lengths[i] * Rational::from_integer(cartan[i][j]);
                let rhs = sym_lengths[j] * Rational::from_integer(cartan[j][i]);
                if lhs != rhs {
                    return Err(Error::InvalidCartan("lengths do not symmetrize".into()));
                }
            }
        }
        let inverse = invert(&cartan)
            .ok_or_else(|| Error::InvalidCartan("matrix is singular".into()))?;
        let inv_den = inverse
            .iter()
            .flatten()
            .fold(1i64, |acc, c| lcm(acc, *c.denom()));
        let inv_num = inverse
            .iter()
            .map(|row| {
                row.iter()
                    .map(|c| (c * Rational::from_integer(inv_den)).to_integer())
                    .collect()
            })
            .collect();

        // (w, rho) = sum_i w_i * r_i with r_i = sum_j inv[j][i] * d_j
        let r: Vec<Rational> = (0..n)
            .map(|i| {
                (0..n).fold(Rational::zero(), |acc, j| acc + inverse[j][i] * sym_lengths[j])
            })
            .collect();
        let height_den = r.iter().fold(1i64, |acc, c| lcm(acc, *c.denom()));
        let height_num = r
            .iter()
            .map(|c| (c * Rational::from_integer(height_den)).to_integer())
            .collect();

        let mut rs = RootSystem {
            lie_type: None,
            cartan,
            sym_lengths,
            inverse,
            inv_num,
            inv_den,
            height_num,
            height_den,
            positive_roots: Vec::new(),
            positive_roots_fund: Vec::new(),
        };
        rs.positive_roots = rs.generate_positive_roots();
        rs.positive_roots_fund = rs
            .positive_roots
            .iter()
            .map(|c| rs.root_ints_to_weight(c))
            .collect();
        Ok(rs)
    }

    fn generate_positive_roots(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue = VecDeque::new();
        for i in 0..n {
            let mut v = vec![0; n];
            v[i] = 1;
            if seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
        // Closure of the simple roots under simple reflections yields all roots.
        while let Some(root) = queue.pop_front() {
            for i in 0..n {
                let pairing: i64 = (0..n).map(|j| self.cartan[i][j] * root[j]).sum();
                let mut next = root.clone();
                next[i] -= pairing;
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        let mut pos: Vec<Vec<i64>> = seen.into_iter().filter(|v| v.iter().all(|&c| c >= 0)).collect();
        pos.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        pos
    }

    fn root_ints_to_weight(&self, c: &[i64]) -> Weight {
        let n = self.rank();
        Weight((0..n).map(|i| (0..n).map(|j| self.cartan[i][j] * c[j]).sum()).collect())
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn lie_type(&self) -> Option<LieType> {
        self.lie_type
    }

    pub fn series(&self) -> Option<Series> {
        self.lie_type.map(|t| t.series)
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn sym_lengths(&self) -> &[Rational] {
        &self.sym_lengths
    }

    pub fn inverse_cartan(&self) -> &[Vec<Rational>] {
        &self.inverse
    }

    /// Positive roots in simple-root coordinates, ordered by height.
    pub fn positive_roots(&self) -> Vec<RootVector> {
        self.positive_roots.iter().map(|c| RootVector::from_ints(c)).collect()
    }

    /// Positive roots in fundamental coordinates, same order as
    /// [`positive_roots`](Self::positive_roots).
    pub fn positive_roots_fund(&self) -> &[Weight] {
        &self.positive_roots_fund
    }

    pub fn positive_root_ints(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank()])
    }

    pub fn simple_root(&self, i: usize) -> Weight {
        Weight((0..self.rank()).map(|k| self.cartan[k][i - 1]).collect())
    }

    pub fn fundamental(&self, i: usize) -> Weight {
        Weight::fundamental(self.rank(), i)
    }

    pub fn zero(&self) -> Weight {
        Weight::zero(self.rank())
    }

    fn check_dim(&self, found: usize) -> Result<()> {
        if found != self.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), found });
        }
        Ok(())
    }

    pub fn check_weight(&self, w: &Weight) -> Result<()> {
        self.check_dim(w.rank())
    }

    pub fn check_dominant(&self, w: &Weight) -> Result<()> {
        self.check_weight(w)?;
        if !w.is_dominant() {
            return Err(Error::NotDominant(w.clone()));
        }
        Ok(())
    }

    /// The invariant form, normalized so long roots have squared length 2.
    pub fn inner_product<A, B>(&self, a: &A, b: &B) -> Result<Rational>
    where
        A: WeightSpaceVector + ?Sized,
        B: WeightSpaceVector + ?Sized,
    {
        self.check_dim(a.dim())?;
        self.check_dim(b.dim())?;
        let ar = a.root_coords(self);
        let bf = b.fund_coords(self);
        // (alpha_j, omega_i) = delta_ij * d_j
        Ok((0..self.rank()).fold(Rational::zero(), |acc, j| {
            acc + ar.0[j] * self.sym_lengths[j] * bf[j]
        }))
    }

    /// (w, rho) scaled by a fixed positive integer; order-equivalent to the
    /// true value.
    pub fn height(&self, w: &Weight) -> i64 {
        w.0.iter().zip(&self.height_num).map(|(a, b)| a * b).sum()
    }

    /// (w, rho) as an exact rational.
    pub fn rho_pairing(&self, w: &Weight) -> Rational {
        Rational::new(self.height(w), self.height_den)
    }

    /// Ascending order by (w, rho), ties broken lexicographically.
    pub fn weight_cmp(&self, a: &Weight, b: &Weight) -> Ordering {
        self.height(a).cmp(&self.height(b)).then_with(|| a.cmp(b))
    }

    pub fn sort_ascending(&self, ws: &mut [Weight]) {
        ws.sort_by_cached_key(|w| (self.height(w), w.clone()));
    }

    pub fn sort_descending(&self, ws: &mut [Weight]) {
        ws.sort_by_cached_key(|w| std::cmp::Reverse((self.height(w), w.clone())));
    }

    /// Applies the simple reflection s_i (index from 0) in place.
    #[inline]
    pub(crate) fn reflect_in_place(&self, w: &mut [i64], i: usize) {
        let c = w[i];
        if c != 0 {
            for (k, x) in w.iter_mut().enumerate() {
                *x -= c * self.cartan[k][i];
            }
        }
    }

    /// Simple reflection s_i, `i` counted from 1.
    pub fn reflect(&self, w: &Weight, i: usize) -> Weight {
        let mut v = w.0.clone();
        self.reflect_in_place(&mut v, i - 1);
        Weight(v)
    }

    #[inline]
    pub(crate) fn dominant_in_place(&self, w: &mut [i64]) {
        while let Some(i) = w.iter().position(|&c| c < 0) {
            self.reflect_in_place(w, i);
        }
    }

    /// The dominant weight in the Weyl orbit of `w`.
    pub fn dominant_rep(&self, w: &Weight) -> Weight {
        let mut v = w.0.clone();
        self.dominant_in_place(&mut v);
        Weight(v)
    }

    /// -w_0 applied to a dominant weight.
    pub fn minus_w0(&self, lambda: &Weight) -> Result<Weight> {
        self.check_dominant(lambda)?;
        Ok(self.dominant_rep(&-lambda))
    }

    /// The full Weyl orbit of a dominant weight, in lexicographic order.
    pub fn weyl_orbit(&self, lambda: &Weight) -> Result<Vec<Weight>> {
        self.check_dominant(lambda)?;
        Ok(self.orbit_unchecked(lambda))
    }

    pub(crate) fn orbit_unchecked(&self, lambda: &Weight) -> Vec<Weight> {
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(lambda.0.clone());
        queue.push_back(lambda.0.clone());
        // From the dominant element, reflecting only at positive coordinates
        // walks down the orbit and reaches every member.
        while let Some(x) = queue.pop_front() {
            for i in 0..self.rank() {
                if x[i] > 0 {
                    let mut y = x.clone();
                    self.reflect_in_place(&mut y, i);
                    if seen.insert(y.clone()) {
                        queue.push_back(y);
                    }
                }
            }
        }
        let mut out: Vec<Weight> = seen.into_iter().map(Weight).collect();
        out.sort();
        out
    }

    pub fn orbit_size(&self, lambda: &Weight) -> Result<usize> {
        Ok(self.weyl_orbit(lambda)?.len())
    }

    /// Solves delta = sum_j c_j alpha_j exactly.
    pub fn to_root_coords(&self, delta: &Weight) -> RootVector {
        let n = self.rank();
        RootVector(
            (0..n)
                .map(|j| {
                    let num: i64 = (0..n).map(|i| self.inv_num[j][i] * delta.0[i]).sum();
                    Rational::new(num, self.inv_den)
                })
                .collect(),
        )
    }

    /// Converts root coordinates back to fundamental coordinates, if integral.
    pub fn from_root_coords(&self, beta: &RootVector) -> Option<Weight> {
        let f = beta.fund_coords(self);
        f.iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(Weight)
    }

    /// Integer simple-root coordinates of `delta` if it lies in the root
    /// lattice.
    pub fn root_coords_int(&self, delta: &[i64]) -> Option<Vec<i64>> {
        let n = self.rank();
        let mut out = Vec::with_capacity(n);
        for j in 0..n {
            let num: i64 = (0..n).map(|i| self.inv_num[j][i] * delta[i]).sum();
            if num % self.inv_den != 0 {
                return None;
            }
            out.push(num / self.inv_den);
        }
        Some(out)
    }

    /// `lambda - mu` is a nonnegative integer combination of simple roots.
    pub fn dominance_leq(&self, mu: &Weight, lambda: &Weight) -> bool {
        self.diff_in_cone(&lambda.0, &mu.0)
    }

    #[inline]
    pub(crate) fn diff_in_cone(&self, hi: &[i64], lo: &[i64]) -> bool {
        let n = self.rank();
        for j in 0..n {
            let num: i64 = (0..n).map(|i| self.inv_num[j][i] * (hi[i] - lo[i])).sum();
            if num < 0 || num % self.inv_den != 0 {
                return false;
            }
        }
        true
    }

    /// The strict order used for the outer induction: `mu < lambda` iff they
    /// differ and either `mu` is below `lambda` in dominance order or
    /// `lambda - mu` is dominant.
    pub fn order_less(&self, mu: &Weight, lambda: &Weight) -> bool {
        mu != lambda && (self.dominance_leq(mu, lambda) || (lambda - mu).is_dominant())
    }

    /// True iff the only dominant weight below `lambda` in its coset is itself.
    pub fn is_minimal(&self, lambda: &Weight) -> Result<bool> {
        self.check_dominant(lambda)?;
        // Any non-minimal dominant weight has lambda - alpha dominant for some
        // positive root alpha.
        Ok(!self
            .positive_roots_fund
            .iter()
            .any(|a| (lambda - a).is_dominant()))
    }

    /// Restriction of the Cartan data to a subset of nodes (indices from 1).
    pub fn subsystem(&self, nodes: &[usize]) -> Result<RootSystem> {
        let cartan = nodes
            .iter()
            .map(|&i| nodes.iter().map(|&j| self.cartan[i - 1][j - 1]).collect())
            .collect();
        let sym = nodes.iter().map(|&i| self.sym_lengths[i - 1]).collect();
        RootSystem::from_cartan(cartan, sym)
    }
}

/// Bourbaki Cartan matrices and half squared lengths (long roots get 1).
fn classical_cartan(series: Series, n: usize) -> (Vec<Vec<i64>>, Vec<Rational>) {
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let one = Rational::one();
    let half = Rational::new(1, 2);
    match series {
        Series::A => {
            for i in 0..n.saturating_sub(1) {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
            (a, vec![one; n])
        }
        Series::B => {
            for i in 0..n - 1 {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
            a[n - 1][n - 2] = -2;
            let mut d = vec![one; n];
            d[n - 1] = half;
            (a, d)
        }
        Series::C => {
            for i in 0..n - 1 {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
            a[n - 2][n - 1] = -2;
            let mut d = vec![half; n];
            d[n - 1] = one;
            (a, d)
        }
        Series::D => {
            for i in 0..n - 2 {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
            a[n - 3][n - 1] = -1;
            a[n - 1][n - 3] = -1;
            (a, vec![one; n])
        }
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn lcm(a: i64, b: i64) -> i64 {
    a / gcd(a, b) * b
}

fn invert(m: &[Vec<i64>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .map(|r| r.iter().map(|&x| Rational::from_integer(x)).collect())
        .collect();
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col];
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for j in 0..n {
                    let t = a[col][j];
                    a[r][j] -= f * t;
                    let t = inv[col][j];
                    inv[r][j] -= f * t;
                }
            }
        }
    }
    Some(inv)
}
