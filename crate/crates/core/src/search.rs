//! Direct lattice-point search over glued string diagrams.
//!
//! Independent of the nested-sum bounds: a diagram is
//! `D_0 + sum x_c B_c` over the basis directions of
//! [`string_coordinates`](crate::diagram::string_coordinates), and a point
//! counts when every entry is non-negative. Each coordinate is confined to
//! `[-B, B]` with `B` the largest absolute entry of `D_0` plus the total
//! label sum; depth-first search narrows each level with the entries that
//! become fully determined there. A true diagram on the edge of the box is
//! reported as [`Error::BoxTooSmall`].

use alloc::vec;
use alloc::vec::Vec;

use crate::diagram::{
    coordinate_delta, initial_string_diagram, string_coordinates, Coordinate, GluedDiagram,
};
use crate::error::{Error, Result};
use crate::triangle::{entry_count, BZTriangle};
use crate::weights::Weight;

struct Check {
    base: i64,
    /// `(coordinate, coefficient)` for coordinates before the level.
    earlier: Vec<(usize, i64)>,
    coef: i64,
}

/// Search over the true diagrams of one string coupling.
pub struct StringSearch {
    rank: usize,
    coordinates: Vec<Coordinate>,
    base: Vec<i64>,
    deltas: Vec<Vec<(usize, i64)>>,
    levels: Vec<Vec<Check>>,
    constant_ok: bool,
    bound: i64,
}

impl StringSearch {
    /// Search for `weights` (`N >= 3`); the root-lattice condition must hold.
    pub fn new(weights: &[Weight]) -> Result<Self> {
        let d0 = initial_string_diagram(weights)?;
        let label_sum: i64 = weights.iter().map(Weight::level).sum();
        let max_entry = d0.entries().map(i64::abs).max().unwrap_or(0);
        Self::with_bound(&d0, max_entry + label_sum + 1)
    }

    /// Search around an explicit initial diagram with box `[-bound, bound]`.
    pub fn with_bound(d0: &GluedDiagram, bound: i64) -> Result<Self> {
        let rank = d0.rank();
        let triangles = d0.triangles().len();
        let coordinates = string_coordinates(rank, triangles);
        let base: Vec<i64> = d0.entries().collect();
        let deltas = coordinates
            .iter()
            .map(|&c| coordinate_delta(rank, triangles, c))
            .collect::<Result<Vec<_>>>()?;
        let mut per_entry: Vec<Vec<(usize, i64)>> = vec![Vec::new(); base.len()];
        for (c, d) in deltas.iter().enumerate() {
            for &(e, k) in d {
                per_entry[e].push((c, k));
            }
        }
        let mut levels: Vec<Vec<Check>> = (0..coordinates.len()).map(|_| Vec::new()).collect();
        let mut constant_ok = true;
        for (e, terms) in per_entry.into_iter().enumerate() {
            match terms.iter().map(|&(c, _)| c).max() {
                None => constant_ok &= base[e] >= 0,
                Some(last) => {
                    let coef = terms
                        .iter()
                        .find(|&&(c, _)| c == last)
                        .map(|&(_, k)| k)
                        .unwrap_or(0);
                    let earlier = terms.into_iter().filter(|&(c, _)| c != last).collect();
                    levels[last].push(Check {
                        base: base[e],
                        earlier,
                        coef,
                    });
                }
            }
        }
        Ok(StringSearch {
            rank,
            coordinates,
            base,
            deltas,
            levels,
            constant_ok,
            bound,
        })
    }

    pub fn coordinates(&self) -> &[Coordinate] {
        &self.coordinates
    }

    /// The diagram at coordinates `x`.
    pub fn diagram(&self, x: &[i64]) -> Result<GluedDiagram> {
        if x.len() != self.coordinates.len() {
            return Err(Error::ShapeMismatch);
        }
        let triangles = self
            .entries_at(x)
            .chunks(entry_count(self.rank))
            .map(|c| BZTriangle::from_entries(self.rank, c.to_vec()))
            .collect::<Result<Vec<_>>>()?;
        GluedDiagram::string(triangles)
    }

    fn range(&self, k: usize, x: &[i64]) -> (i64, i64) {
        let (mut lo, mut hi) = (-self.bound, self.bound);
        for ch in &self.levels[k] {
            let rest = ch.earlier.iter().fold(ch.base, |a, &(c, d)| a + d * x[c]);
            if ch.coef > 0 {
                lo = lo.max(div_ceil(-rest, ch.coef));
            } else if ch.coef < 0 {
                hi = hi.min(div_floor(rest, -ch.coef));
            } else if rest < 0 {
                return (1, 0);
            }
        }
        (lo, hi)
    }

    fn entries_at(&self, x: &[i64]) -> Vec<i64> {
        let mut e = self.base.clone();
        for (d, &xc) in self.deltas.iter().zip(x) {
            for &(i, k) in d {
                e[i] += k * xc;
            }
        }
        e
    }

    fn walk<F: FnMut(&[i64])>(&self, k: usize, x: &mut Vec<i64>, f: &mut F) -> Result<()> {
        if k == x.len() {
            if !self.entries_at(x).iter().all(|&e| e >= 0) {
                return Ok(());
            }
            if x.iter().any(|v| v.abs() >= self.bound) {
                return Err(Error::BoxTooSmall);
            }
            f(x);
            return Ok(());
        }
        let (lo, hi) = self.range(k, x);
        for v in lo..=hi {
            x[k] = v;
            self.walk(k + 1, x, f)?;
        }
        Ok(())
    }

    /// Calls `f` with the coordinates of every true diagram.
    pub fn for_each<F: FnMut(&[i64])>(&self, mut f: F) -> Result<()> {
        if !self.constant_ok {
            return Ok(());
        }
        let mut x = vec![0i64; self.coordinates.len()];
        self.walk(0, &mut x, &mut f)
    }

    pub fn count(&self) -> Result<u64> {
        let mut n = 0u64;
        self.for_each(|_| n += 1)?;
        Ok(n)
    }

    /// Coordinates of all true diagrams, in lexicographic order.
    pub fn points(&self) -> Result<Vec<Vec<i64>>> {
        let mut out = Vec::new();
        self.for_each(|p| out.push(p.to_vec()))?;
        Ok(out)
    }
}

fn div_floor(a: i64, b: i64) -> i64 {
    let q = a / b;
    if (a % b != 0) && ((a < 0) != (b < 0)) {
        q - 1
    } else {
        q
    }
}

fn div_ceil(a: i64, b: i64) -> i64 {
    -div_floor(-a, b)
}
