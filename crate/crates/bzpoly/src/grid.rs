//! Label boxes of weights and tables over tuples drawn from them.

use std::collections::HashMap;

use rayon::prelude::*;

use bzpoly_core::oracle::Decomposition;
use bzpoly_core::{lr_decompose, Result, Weight};

/// All weights of one rank with labels in `0..=max_label`, in mixed-radix
/// order (first label fastest).
#[derive(Clone, Debug)]
pub struct Grid {
    rank: usize,
    max_label: i64,
    weights: Vec<Weight>,
}

impl Grid {
    pub fn new(rank: usize, max_label: i64) -> Result<Self> {
        if rank == 0 {
            return Err(bzpoly_core::Error::InvalidRank(0));
        }
        let base = (max_label + 1) as usize;
        let count = base.pow(rank as u32);
        let weights = (0..count)
            .map(|mut k| {
                let labels = (0..rank)
                    .map(|_| {
                        let l = (k % base) as i64;
                        k /= base;
                        l
                    })
                    .collect();
                Weight::new(labels)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Grid {
            rank,
            max_label,
            weights,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn max_label(&self) -> i64 {
        self.max_label
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Position of `w`, if it lies in the box.
    pub fn index_of(&self, w: &Weight) -> Option<usize> {
        if w.rank() != self.rank {
            return None;
        }
        let base = (self.max_label + 1) as usize;
        let mut k = 0usize;
        for &l in w.labels().iter().rev() {
            if l > self.max_label {
                return None;
            }
            k = k * base + l as usize;
        }
        Some(k)
    }

    /// Number of `points`-tuples.
    pub fn tuples(&self, points: usize) -> usize {
        self.len().pow(points as u32)
    }

    /// Tuple number `k` (first slot fastest).
    pub fn tuple(&self, points: usize, k: usize) -> Vec<Weight> {
        self.tuple_indices(points, k)
            .into_iter()
            .map(|i| self.weights[i].clone())
            .collect()
    }

    pub fn tuple_indices(&self, points: usize, mut k: usize) -> Vec<usize> {
        let n = self.len();
        (0..points)
            .map(|_| {
                let i = k % n;
                k /= n;
                i
            })
            .collect()
    }

    pub fn tuple_number(&self, indices: &[usize]) -> usize {
        indices.iter().rev().fold(0, |k, &i| k * self.len() + i)
    }

    /// `f` on every `points`-tuple, in tuple order.
    pub fn tabulate<F>(&self, points: usize, f: F) -> Result<Vec<u64>>
    where
        F: Fn(&[Weight]) -> Result<u64> + Sync,
    {
        (0..self.tuples(points))
            .into_par_iter()
            .map(|k| f(&self.tuple(points, k)))
            .collect()
    }
}

/// Littlewood-Richardson decompositions of every pair of grid weights.
pub struct PairTable {
    grid: Grid,
    pairs: Vec<Decomposition>,
}

impl PairTable {
    pub fn new(grid: Grid) -> Result<Self> {
        let n = grid.len();
        let pairs = (0..n * n)
            .into_par_iter()
            .map(|k| lr_decompose(&grid.weights[k % n], &grid.weights[k / n]))
            .collect::<Result<Vec<_>>>()?;
        Ok(PairTable { grid, pairs })
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    /// `a (x) b`; both must lie in the grid.
    pub fn get(&self, a: &Weight, b: &Weight) -> &Decomposition {
        let i = self.grid.index_of(a).expect("weight outside the grid");
        let j = self.grid.index_of(b).expect("weight outside the grid");
        &self.pairs[i + j * self.grid.len()]
    }

    /// Singlets in `a (x) b (x) c`.
    pub fn singlets3(&self, a: &Weight, b: &Weight, c: &Weight) -> u64 {
        self.get(a, b).get(&c.conjugate()).copied().unwrap_or(0)
    }

    /// Singlets in `a (x) b (x) c (x) d`.
    pub fn singlets4(&self, a: &Weight, b: &Weight, c: &Weight, d: &Weight) -> u64 {
        let right = self.get(c, d);
        self.get(a, b)
            .iter()
            .filter_map(|(k, m)| right.get(&k.conjugate()).map(|n| m * n))
            .sum()
    }
}

/// Singlet counts of a list of weights with pair decompositions cached per
/// product; used above four points where pairs leave the grid.
pub struct SingletCache {
    pairs: HashMap<(Weight, Weight), Decomposition>,
}

impl Default for SingletCache {
    fn default() -> Self {
        Self::new()
    }
}

impl SingletCache {
    pub fn new() -> Self {
        SingletCache {
            pairs: HashMap::new(),
        }
    }

    fn pair(&mut self, a: &Weight, b: &Weight) -> Result<&Decomposition> {
        let key = if a <= b {
            (a.clone(), b.clone())
        } else {
            (b.clone(), a.clone())
        };
        if !self.pairs.contains_key(&key) {
            let d = lr_decompose(&key.0, &key.1)?;
            self.pairs.insert(key.clone(), d);
        }
        Ok(&self.pairs[&key])
    }

    fn product(&mut self, ws: &[Weight]) -> Result<Decomposition> {
        let mut acc = Decomposition::new();
        acc.insert(ws[0].clone(), 1);
        for w in &ws[1..] {
            let mut next = Decomposition::new();
            for (k, m) in &acc {
                for (c, n) in self.pair(k, w)? {
                    *next.entry(c.clone()).or_insert(0) += m * n;
                }
            }
            acc = next;
        }
        Ok(acc)
    }

    /// Singlets in the product of `ws` (at least two weights).
    pub fn singlets(&mut self, ws: &[Weight]) -> Result<u64> {
        let half = ws.len() / 2;
        let a = self.product(&ws[..half])?;
        let b = self.product(&ws[half..])?;
        Ok(a.iter()
            .filter_map(|(k, m)| b.get(&k.conjugate()).map(|n| m * n))
            .sum())
    }
}
