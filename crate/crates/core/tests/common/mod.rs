#![allow(dead_code)]

use std::collections::BTreeMap;

use weylrigid::weylchar::freudenthal_char;
use weylrigid::{RootSystem, Series, Weight};

pub fn w(v: &[i64]) -> Weight {
    Weight::new(v.to_vec())
}

pub const SYSTEMS: [(Series, usize); 6] = [
    (Series::A, 2),
    (Series::A, 3),
    (Series::B, 2),
    (Series::B, 3),
    (Series::C, 3),
    (Series::D, 4),
];

/// Dominant weights with coordinate sum at most `max`, by brute force.
pub fn dominant_upto(rank: usize, max: i64) -> Vec<Weight> {
    let mut out = vec![vec![]];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                (0..=max).map(move |c| {
                    let mut v = v.clone();
                    v.push(c);
                    v
                })
            })
            .collect();
    }
    out.into_iter().filter(|v| v.iter().sum::<i64>() <= max).map(Weight::new).collect()
}

/// Reflects to the dominant chamber, tracking the sign of the Weyl element.
fn dominant_with_sign(rs: &RootSystem, x: &Weight) -> (Weight, i64) {
    let mut y = x.clone();
    let mut sign = 1;
    'outer: loop {
        for i in 1..=rs.rank() {
            if y.at(i) < 0 {
                y = rs.reflect(&y, i);
                sign = -sign;
                continue 'outer;
            }
        }
        return (y, sign);
    }
}

/// Tensor product multiplicities by the Racah-Speiser algorithm.
pub fn racah_speiser(rs: &RootSystem, mu: &Weight, nu: &Weight) -> BTreeMap<Weight, i64> {
    let rho = rs.rho();
    let row = freudenthal_char(rs, nu).unwrap();
    let mut out: BTreeMap<Weight, i64> = BTreeMap::new();
    for (d, m) in row.iter() {
        for x in rs.weyl_orbit(d).unwrap() {
            let (y, sign) = dominant_with_sign(rs, &(&(mu + &x) + &rho));
            if y.coords().iter().any(|&c| c == 0) {
                continue;
            }
            *out.entry(&y - &rho).or_insert(0) += sign * m;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Kostka number for type A_l: semistandard tableaux of the shape of
/// `lambda` with the content of the dominant weight `mu`.
pub fn kostka_a(rank: usize, lambda: &Weight, mu: &Weight) -> i64 {
    let n = rank + 1;
    let shape: Vec<usize> = (0..rank)
        .map(|k| lambda.coords()[k..].iter().sum::<i64>() as usize)
        .filter(|&p| p > 0)
        .collect();
    let size: i64 = shape.iter().map(|&p| p as i64).sum();
    let weighted: i64 = mu.coords().iter().enumerate().map(|(j, &c)| (j as i64 + 1) * c).sum();
    if (size - weighted) % n as i64 != 0 || size < weighted {
        return 0;
    }
    let last = (size - weighted) / n as i64;
    // c_i - c_{i+1} = mu_i, c_{l+1} = last
    let content: Vec<i64> = (0..n).map(|i| last + mu.coords()[i.min(rank)..].iter().sum::<i64>()).collect();
    let cells: Vec<(usize, usize)> =
        shape.iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c))).collect();
    let mut grid = vec![vec![0usize; shape.first().copied().unwrap_or(0)]; shape.len()];
    let mut used = vec![0i64; n];
    fn fill(
        k: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        used: &mut Vec<i64>,
        content: &[i64],
    ) -> i64 {
        if k == cells.len() {
            return (used.as_slice() == content) as i64;
        }
        let (r, c) = cells[k];
        let mut lo = 0;
        if c > 0 {
            lo = lo.max(grid[r][c - 1]);
        }
        if r > 0 {
            lo = lo.max(grid[r - 1][c] + 1);
        }
        let mut total = 0;
        for v in lo..content.len() {
            if used[v] == content[v] {
                continue;
            }
            grid[r][c] = v;
            used[v] += 1;
            total += fill(k + 1, cells, grid, used, content);
            used[v] -= 1;
        }
        total
    }
    fill(0, &cells, &mut grid, &mut used, &content)
}
