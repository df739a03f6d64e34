//! Explicit Berenstein-Zelevinsky triangles.
//!
//! A rank-`r` triangle is a triangular array of small corner triangles,
//! `r` rows deep; row `a` (top to bottom) holds corner triangles
//! `(a, 1) .. (a, a)`. Every corner triangle carries three entries: its top
//! vertex and its bottom-left and bottom-right vertices. The gaps between
//! corner triangles are the `r(r-1)/2` hexagons; hexagon `(a, b)` sits between
//! corner triangles `(a, b)`, `(a+1, b)` and `(a+1, b+1)`.
//!
//! Entries are stored in the printed row layout: for each `t = 1..=r` a row
//! with the `t` top vertices of corner row `t`, then a row with the `2t`
//! bottom vertices (left, right, left, right, ...).
//!
//! The three boundary weights sit on the faces:
//!
//! * first weight (left face): `lambda_t = top(t,1) + left(t,1)`,
//! * second weight (bottom face): `mu_b = left(r,b) + right(r,b)`,
//! * third weight (right face): `nu_{r-t+1} = right(t,t) + top(t,t)`.
//!
//! Hexagons are addressed by the linear-coefficient labels `(i, j)` with
//! `i, j >= 1`, `i + j <= r`; label `(i, j)` is the hexagon in corner row
//! `a = r - i`, column `b = j`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::weights::{check_rank, params_from_labels, Weight};

/// Number of entries `3r(r+1)/2`.
pub const fn entry_count(rank: usize) -> usize {
    3 * rank * (rank + 1) / 2
}

/// Number of hexagons `r(r-1)/2`.
pub const fn hexagon_count(rank: usize) -> usize {
    rank * rank.saturating_sub(1) / 2
}

/// Which vertex of a corner triangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Corner {
    Top,
    Left,
    Right,
}

/// One of the three boundary faces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Face {
    First,
    Second,
    Third,
}

/// Entry families of the classical `m_{ij}, n_{ij}, l_{ij}` notation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    M,
    N,
    L,
}

/// Flat index of a corner vertex in the row layout. `1 <= col <= row <= r`.
#[inline]
pub fn entry_index(row: usize, col: usize, corner: Corner) -> usize {
    debug_assert!(col >= 1 && col <= row);
    let base = 3 * row * (row - 1) / 2;
    match corner {
        Corner::Top => base + col - 1,
        Corner::Left => base + row + 2 * (col - 1),
        Corner::Right => base + row + 2 * (col - 1) + 1,
    }
}

/// `m_{ij}`, `n_{ij}` or `l_{ij}` label (`1 <= i < j <= r+1`) of a vertex.
pub fn family_label(rank: usize, row: usize, col: usize, corner: Corner) -> (Family, usize, usize) {
    match corner {
        Corner::Top => (Family::M, row - col + 1, rank + 2 - col),
        Corner::Left => (Family::N, col, row + 1),
        Corner::Right => (Family::L, rank + 1 - row, rank + 1 - row + col),
    }
}

/// Canonical hexagon order: anti-diagonals `i + j = 2, 3, .., r`, each from
/// `(k-1, 1)` down to `(1, k-1)`. This is the three-point summation order.
pub fn hexagon_order(rank: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(hexagon_count(rank));
    for k in 2..=rank {
        for i in (1..k).rev() {
            out.push((i, k - i));
        }
    }
    out
}

/// Position of hexagon `(i, j)` in [`hexagon_order`].
#[inline]
pub fn hexagon_slot(i: usize, j: usize) -> usize {
    let k = i + j;
    (k - 2) * (k - 1) / 2 + (k - 1 - i)
}

pub(crate) fn check_hexagon(rank: usize, i: usize, j: usize) -> Result<()> {
    if i == 0 || j == 0 || i + j > rank {
        return Err(Error::InvalidHexagon { rank, i, j });
    }
    Ok(())
}

/// The six vertices around hexagon `(a, b)` (corner-grid coordinates), in
/// the order top-left, top-right, right, bottom-right, bottom-left, left.
fn hexagon_ring(a: usize, b: usize) -> [usize; 6] {
    [
        entry_index(a, b, Corner::Left),
        entry_index(a, b, Corner::Right),
        entry_index(a + 1, b + 1, Corner::Top),
        entry_index(a + 1, b + 1, Corner::Left),
        entry_index(a + 1, b, Corner::Right),
        entry_index(a + 1, b, Corner::Top),
    ]
}

/// Sparse `(index, coefficient)` list of a basis virtual triangle.
pub(crate) fn virtual_pattern(rank: usize, i: usize, j: usize) -> Vec<(usize, i64)> {
    let (a, b) = (rank - i, j);
    let mut p = vec![
        (entry_index(a, b, Corner::Top), 1),
        (entry_index(a, b, Corner::Left), -1),
        (entry_index(a, b, Corner::Right), -1),
        (entry_index(a + 1, b, Corner::Top), -1),
        (entry_index(a + 1, b, Corner::Left), 1),
        (entry_index(a + 1, b, Corner::Right), -1),
        (entry_index(a + 1, b + 1, Corner::Top), -1),
        (entry_index(a + 1, b + 1, Corner::Left), -1),
        (entry_index(a + 1, b + 1, Corner::Right), 1),
    ];
    if b >= 2 {
        p.push((entry_index(a, b - 1, Corner::Right), 1));
    }
    if b < a {
        p.push((entry_index(a, b + 1, Corner::Left), 1));
    }
    if a + 2 <= rank {
        p.push((entry_index(a + 2, b + 1, Corner::Top), 1));
    }
    p
}

/// A (generalised) BZ triangle: integer entries, possibly negative.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BZTriangle {
    rank: usize,
    entries: Vec<i64>,
}

impl BZTriangle {
    pub fn from_entries(rank: usize, entries: Vec<i64>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidRank(0));
        }
        if entries.len() != entry_count(rank) {
            return Err(Error::ShapeMismatch);
        }
        Ok(BZTriangle { rank, entries })
    }

    pub fn zero(rank: usize) -> Self {
        BZTriangle {
            rank,
            entries: vec![0; entry_count(rank)],
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize, corner: Corner) -> i64 {
        self.entries[entry_index(row, col, corner)]
    }

    /// The `2r` printed rows.
    pub fn rows(&self) -> Vec<&[i64]> {
        let mut out = Vec::with_capacity(2 * self.rank);
        let mut at = 0;
        for t in 1..=self.rank {
            out.push(&self.entries[at..at + t]);
            at += t;
            out.push(&self.entries[at..at + 2 * t]);
            at += 2 * t;
        }
        out
    }

    /// Dynkin labels read off one face.
    pub fn face_weight(&self, face: Face) -> Vec<i64> {
        let r = self.rank;
        match face {
            Face::First => (1..=r)
                .map(|t| self.get(t, 1, Corner::Top) + self.get(t, 1, Corner::Left))
                .collect(),
            Face::Second => (1..=r)
                .map(|b| self.get(r, b, Corner::Left) + self.get(r, b, Corner::Right))
                .collect(),
            Face::Third => (1..=r)
                .map(|k| {
                    let t = r - k + 1;
                    self.get(t, t, Corner::Right) + self.get(t, t, Corner::Top)
                })
                .collect(),
        }
    }

    /// `[first, second, third]` face weights.
    pub fn weights(&self) -> [Vec<i64>; 3] {
        [
            self.face_weight(Face::First),
            self.face_weight(Face::Second),
            self.face_weight(Face::Third),
        ]
    }

    /// True iff all hexagon identities hold.
    pub fn hexagons_hold(&self) -> bool {
        let r = self.rank;
        (1..r).all(|a| {
            (1..=a).all(|b| {
                let h = hexagon_ring(a, b).map(|k| self.entries[k]);
                let [tl, tr, rt, br, bl, lf] = h;
                tl + lf == br + rt && rt + tr == lf + bl && bl + br == tr + tl
            })
        })
    }

    /// Hexagon identities hold and the faces carry the given weights.
    pub fn satisfies(&self, first: &[i64], second: &[i64], third: &[i64]) -> bool {
        self.hexagons_hold()
            && self.face_weight(Face::First) == first
            && self.face_weight(Face::Second) == second
            && self.face_weight(Face::Third) == third
    }

    /// True BZ triangle: every entry non-negative.
    pub fn is_true(&self) -> bool {
        self.entries.iter().all(|&e| e >= 0)
    }

    pub(crate) fn add_pattern(&mut self, pattern: &[(usize, i64)], times: i64) -> Result<()> {
        for &(k, c) in pattern {
            let d = c.checked_mul(times).ok_or(Error::Overflow)?;
            self.entries[k] = self.entries[k].checked_add(d).ok_or(Error::Overflow)?;
        }
        Ok(())
    }

    pub(crate) fn add_scaled(&mut self, other: &BZTriangle, times: i64) -> Result<()> {
        for (e, o) in self.entries.iter_mut().zip(&other.entries) {
            let d = o.checked_mul(times).ok_or(Error::Overflow)?;
            *e = e.checked_add(d).ok_or(Error::Overflow)?;
        }
        Ok(())
    }

    /// Multi-line rendering in the triangular row layout.
    pub fn render(&self) -> String {
        let rows = self.rows();
        let cells: Vec<Vec<String>> = rows
            .iter()
            .map(|row| row.iter().map(|v| alloc::format!("{v}")).collect())
            .collect();
        let cell = cells
            .iter()
            .flatten()
            .map(String::len)
            .max()
            .unwrap_or(1)
            .max(1);
        let lines: Vec<String> = cells
            .iter()
            .map(|row| {
                let mut s = String::new();
                for (k, c) in row.iter().enumerate() {
                    if k > 0 {
                        s.push(' ');
                    }
                    for _ in c.len()..cell {
                        s.push(' ');
                    }
                    s.push_str(c);
                }
                s
            })
            .collect();
        let width = lines.iter().map(String::len).max().unwrap_or(0);
        let mut out = String::new();
        for line in lines {
            for _ in 0..(width - line.len()) / 2 {
                out.push(' ');
            }
            out.push_str(&line);
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for BZTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Coefficients `v_{i,j}` of the virtual triangles, stored in
/// [`hexagon_order`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoefficientVector3 {
    rank: usize,
    values: Vec<i64>,
}

impl CoefficientVector3 {
    pub fn zero(rank: usize) -> Self {
        CoefficientVector3 {
            rank,
            values: vec![0; hexagon_count(rank)],
        }
    }

    /// Values listed in [`hexagon_order`].
    pub fn from_values(rank: usize, values: Vec<i64>) -> Result<Self> {
        if values.len() != hexagon_count(rank) {
            return Err(Error::ShapeMismatch);
        }
        Ok(CoefficientVector3 { rank, values })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.values[hexagon_slot(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.values[hexagon_slot(i, j)] = v;
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), i64)> + '_ {
        hexagon_order(self.rank)
            .into_iter()
            .zip(self.values.iter().copied())
    }
}

impl fmt::Display for CoefficientVector3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.values.is_empty() {
            return f.write_str("()");
        }
        for (k, ((i, j), v)) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "v[{i},{j}]={v}")?;
        }
        Ok(())
    }
}

/// Initial triangle from raw labels, `None` when the parameters are not
/// integral.
pub(crate) fn initial_from_labels(lam: &[i64], mu: &[i64], third: &[i64]) -> Option<BZTriangle> {
    let r = lam.len();
    let p = params_from_labels(lam, mu, third)?;
    let mut t = BZTriangle::zero(r);
    for row in 1..=r {
        for col in 1..row {
            t.entries[entry_index(row, col, Corner::Top)] = lam[row - 1];
            t.entries[entry_index(row, col, Corner::Left)] = 0;
            t.entries[entry_index(row, col, Corner::Right)] = mu[col - 1];
        }
        let k = r - row;
        t.entries[entry_index(row, row, Corner::Top)] = p.big_n_prime[k];
        t.entries[entry_index(row, row, Corner::Left)] = p.n[k];
        t.entries[entry_index(row, row, Corner::Right)] = p.big_n[k];
    }
    Some(t)
}

/// The initial triangle for `lambda (x) mu (x) third`: `lambda_k`/`0` pairs
/// on the left, `0`/`mu_k` pairs along the bottom and the coupling
/// parameters down the right edge. Satisfies all constraints; entries may be
/// negative.
pub fn initial_triangle(lambda: &Weight, mu: &Weight, third: &Weight) -> Result<BZTriangle> {
    let r = lambda.rank();
    check_rank(r, mu)?;
    check_rank(r, third)?;
    initial_from_labels(lambda.labels(), mu.labels(), third.labels()).ok_or(Error::NotInRootLattice)
}

/// Basis virtual triangle for hexagon `(i, j)`: `-1` on the hexagon ring,
/// `+1` on the six vertices next to it (those falling outside the triangle
/// are dropped). All three face weights vanish.
pub fn virtual_triangle(rank: usize, i: usize, j: usize) -> Result<BZTriangle> {
    if rank == 0 {
        return Err(Error::InvalidRank(0));
    }
    check_hexagon(rank, i, j)?;
    let mut t = BZTriangle::zero(rank);
    t.add_pattern(&virtual_pattern(rank, i, j), 1)?;
    Ok(t)
}

/// `initial_triangle + sum v_{i,j} V_{i,j}`.
pub fn reconstruct_triangle(
    lambda: &Weight,
    mu: &Weight,
    third: &Weight,
    cv: &CoefficientVector3,
) -> Result<BZTriangle> {
    let mut t = initial_triangle(lambda, mu, third)?;
    if cv.rank() != t.rank() {
        return Err(Error::RankMismatch {
            expected: t.rank(),
            found: cv.rank(),
        });
    }
    for ((i, j), v) in cv.iter() {
        if v != 0 {
            t.add_pattern(&virtual_pattern(t.rank, i, j), v)?;
        }
    }
    Ok(t)
}

pub fn is_true_triangle(t: &BZTriangle) -> bool {
    t.is_true()
}

/// Coefficient rows of the hexagon identities (three per hexagon) followed by
/// the `3r` outer constraints, as linear forms over the entries. The outer
/// rows read `weight label = sum of two entries`.
pub fn constraint_rows(rank: usize) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
    let e = entry_count(rank);
    let mut hex = Vec::new();
    for a in 1..rank {
        for b in 1..=a {
            let [tl, tr, rt, br, bl, lf] = hexagon_ring(a, b);
            for (p, q, s, u) in [(tl, lf, br, rt), (rt, tr, lf, bl), (bl, br, tr, tl)] {
                let mut row = vec![0i64; e];
                row[p] += 1;
                row[q] += 1;
                row[s] -= 1;
                row[u] -= 1;
                hex.push(row);
            }
        }
    }
    let mut outer = Vec::new();
    let mut pair = |x: usize, y: usize| {
        let mut row = vec![0i64; e];
        row[x] += 1;
        row[y] += 1;
        outer.push(row);
    };
    for t in 1..=rank {
        pair(
            entry_index(t, 1, Corner::Top),
            entry_index(t, 1, Corner::Left),
        );
    }
    for b in 1..=rank {
        pair(
            entry_index(rank, b, Corner::Left),
            entry_index(rank, b, Corner::Right),
        );
    }
    for k in 1..=rank {
        let t = rank - k + 1;
        pair(
            entry_index(t, t, Corner::Right),
            entry_index(t, t, Corner::Top),
        );
    }
    (hex, outer)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(ls: &[i64]) -> Weight {
        Weight::new(ls.to_vec()).unwrap()
    }

    #[test]
    fn counts() {
        assert_eq!(entry_count(2), 9);
        assert_eq!(hexagon_count(1), 0);
        assert_eq!(hexagon_count(4), 6);
        assert_eq!(hexagon_order(3), vec![(1, 1), (2, 1), (1, 2)]);
        for r in 1..7 {
            for (k, (i, j)) in hexagon_order(r).into_iter().enumerate() {
                assert_eq!(hexagon_slot(i, j), k);
            }
        }
    }

    #[test]
    fn layout_is_a_bijection() {
        for r in 1..6 {
            let mut seen = vec![false; entry_count(r)];
            for row in 1..=r {
                for col in 1..=row {
                    for c in [Corner::Top, Corner::Left, Corner::Right] {
                        let k = entry_index(row, col, c);
                        assert!(!seen[k]);
                        seen[k] = true;
                    }
                }
            }
            assert!(seen.into_iter().all(|s| s));
        }
    }

    #[test]
    fn su3_family_labels() {
        use Family::*;
        let expect = [
            ((1, 1, Corner::Top), (M, 1, 3)),
            ((1, 1, Corner::Left), (N, 1, 2)),
            ((1, 1, Corner::Right), (L, 2, 3)),
            ((2, 1, Corner::Top), (M, 2, 3)),
            ((2, 2, Corner::Top), (M, 1, 2)),
            ((2, 1, Corner::Left), (N, 1, 3)),
            ((2, 1, Corner::Right), (L, 1, 2)),
            ((2, 2, Corner::Left), (N, 2, 3)),
            ((2, 2, Corner::Right), (L, 1, 3)),
        ];
        for ((row, col, c), lab) in expect {
            assert_eq!(family_label(2, row, col, c), lab);
        }
    }

    #[test]
    fn initial_triangle_examples() {
        let t = initial_triangle(&w(&[1, 2]), &w(&[2, 1]), &w(&[3, 3])).unwrap();
        assert_eq!(t.entries(), &[1, 0, 2, 2, 2, 0, 2, 0, 1]);
        assert!(t.is_true());

        let z = w(&[0, 0]);
        assert_eq!(initial_triangle(&z, &z, &z).unwrap(), BZTriangle::zero(2));

        let a = w(&[1, 1]);
        let t = initial_triangle(&a, &a, &a).unwrap();
        // right edge, bottom to top: (n_1, N_1), N'_1, (n_2, N_2), N'_2
        assert_eq!(t.get(2, 2, Corner::Left), 1);
        assert_eq!(t.get(2, 2, Corner::Right), 0);
        assert_eq!(t.get(2, 2, Corner::Top), 1);
        assert_eq!(t.get(1, 1, Corner::Left), 1);
        assert_eq!(t.get(1, 1, Corner::Right), 1);
        assert_eq!(t.get(1, 1, Corner::Top), 0);
        assert!(t.satisfies(&[1, 1], &[1, 1], &[1, 1]));
    }

    #[test]
    fn su3_virtual_triangle_solves_zero_coupling() {
        let v = virtual_triangle(2, 1, 1).unwrap();
        assert_eq!(v.entries(), &[1, -1, -1, -1, -1, 1, -1, -1, 1]);
        assert!(v.satisfies(&[0, 0], &[0, 0], &[0, 0]));
        assert!(!v.is_true());
    }

    #[test]
    fn invalid_hexagon() {
        assert!(virtual_triangle(3, 2, 2).is_err());
        assert!(virtual_triangle(3, 0, 1).is_err());
        assert!(virtual_triangle(1, 1, 1).is_err());
    }

    #[test]
    fn render_rows() {
        let t = initial_triangle(&w(&[1, 2]), &w(&[2, 1]), &w(&[3, 3])).unwrap();
        let s = t.render();
        let lines: Vec<&str> = s.lines().map(str::trim).collect();
        assert_eq!(lines, ["1", "0 2", "2 2", "0 2 0 1"]);
    }
}
