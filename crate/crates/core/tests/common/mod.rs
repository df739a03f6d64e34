//! A second, independent oracle: Klimyk's formula with weight
//! multiplicities read off Gelfand-Tsetlin patterns.

#![allow(dead_code)]

use std::collections::BTreeMap;

use bzpoly_core::Weight;

pub fn w(labels: &[i64]) -> Weight {
    Weight::new(labels.to_vec()).unwrap()
}

/// `gl(r+1)` row lengths of a weight (last row empty).
fn rows(labels: &[i64]) -> Vec<i64> {
    let mut p = vec![0; labels.len() + 1];
    for i in (0..labels.len()).rev() {
        p[i] = p[i + 1] + labels[i];
    }
    p
}

/// Every `gl(r+1)` weight of the irreducible module with top row `top`,
/// one entry per Gelfand-Tsetlin pattern.
fn gt_weights(top: &[i64]) -> Vec<Vec<i64>> {
    // sums[k] is the sum of the pattern row of length top.len() - k
    fn descend(row: &[i64], sums: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        sums.push(row.iter().sum());
        if row.len() == 1 {
            let n = sums.len();
            let wt = (1..=n)
                .map(|len| sums[n - len] - if len > 1 { sums[n - len + 1] } else { 0 })
                .collect();
            out.push(wt);
        } else {
            let mut next = vec![0; row.len() - 1];
            interlace(row, 0, &mut next, sums, out);
        }
        sums.pop();
    }
    fn interlace(
        row: &[i64],
        k: usize,
        next: &mut Vec<i64>,
        sums: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        if k == next.len() {
            let fixed = next.clone();
            descend(&fixed, sums, out);
            return;
        }
        for x in row[k + 1]..=row[k] {
            next[k] = x;
            interlace(row, k + 1, next, sums, out);
        }
    }
    let mut out = Vec::new();
    descend(top, &mut Vec::new(), &mut out);
    out
}

/// `lambda (x) mu` by Klimyk's formula.
pub fn klimyk(lambda: &Weight, mu: &Weight) -> BTreeMap<Weight, i64> {
    let r = lambda.rank();
    let p = rows(lambda.labels());
    let mut out: BTreeMap<Weight, i64> = BTreeMap::new();
    for wt in gt_weights(&rows(mu.labels())) {
        let mut x: Vec<i64> = (0..=r).map(|i| p[i] + wt[i] + (r - i) as i64).collect();
        // sort decreasingly, tracking the sign of the permutation
        let mut sign = 1;
        for i in 0..x.len() {
            for j in 0..x.len() - 1 - i {
                if x[j] < x[j + 1] {
                    x.swap(j, j + 1);
                    sign = -sign;
                }
            }
        }
        if x.windows(2).any(|v| v[0] == v[1]) {
            continue;
        }
        let y: Vec<i64> = (0..=r).map(|i| x[i] - (r - i) as i64).collect();
        let labels: Vec<i64> = y.windows(2).map(|v| v[0] - v[1]).collect();
        *out.entry(w(&labels)).or_insert(0) += sign;
    }
    out.retain(|_, m| *m != 0);
    out
}

/// Singlets in `a (x) b (x) c`.
pub fn singlets3(a: &Weight, b: &Weight, c: &Weight) -> u64 {
    let m = klimyk(a, b).get(&c.conjugate()).copied().unwrap_or(0);
    assert!(m >= 0);
    m as u64
}

/// Singlets in `a (x) b (x) c (x) d`.
pub fn singlets4(a: &Weight, b: &Weight, c: &Weight, d: &Weight) -> u64 {
    let right = klimyk(c, d);
    klimyk(a, b)
        .iter()
        .map(|(k, m)| m * right.get(&k.conjugate()).copied().unwrap_or(0))
        .sum::<i64>() as u64
}

/// Number of spin-zero states among spins `2j = labels`, by coupling one
/// spin at a time.
pub fn spin_singlets(twice_spins: &[i64]) -> u64 {
    let mut acc: BTreeMap<i64, u64> = BTreeMap::new();
    acc.insert(0, 1);
    for &s in twice_spins {
        let mut next = BTreeMap::new();
        for (&j, &m) in &acc {
            let mut k = (j - s).abs();
            while k <= j + s {
                *next.entry(k).or_insert(0) += m;
                k += 2;
            }
        }
        acc = next;
    }
    acc.get(&0).copied().unwrap_or(0)
}

/// All weights of `rank` with labels up to `max`.
pub fn box_weights(rank: usize, max: i64) -> Vec<Weight> {
    let base = (max + 1) as usize;
    (0..base.pow(rank as u32))
        .map(|mut k| {
            let labels: Vec<i64> = (0..rank)
                .map(|_| {
                    let l = (k % base) as i64;
                    k /= base;
                    l
                })
                .collect();
            w(&labels)
        })
        .collect()
}
