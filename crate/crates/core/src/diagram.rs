//! Glued diagrams: strings of BZ triangles joined along faces.
//!
//! An `N`-point diagram consists of `N - 2` triangles. Triangle `0` couples
//! `lambda^(1)`, `lambda^(2)` and an intermediate weight on its third face;
//! each following triangle takes the previous intermediate weight
//! (conjugated) on its third face. Glued faces carry mutually conjugate
//! weights; the remaining faces carry the `N` outer weights in order.
//!
//! Every triangle is stored in its own frame. For four points the second
//! triangle couples `nu (x) sigma (x) rho^+`, where `rho` sits on the third
//! face of the first triangle.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::triangle::{
    entry_count, hexagon_count, hexagon_order, initial_from_labels, virtual_pattern, BZTriangle,
    CoefficientVector3, Face,
};
use crate::weights::{check_rank, common_rank, simple_root, Weight};

/// Identification of face `left.1` of triangle `left.0` with face `right.1`
/// of triangle `right.0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Gluing {
    pub left: (usize, Face),
    pub right: (usize, Face),
}

/// Gluings of a string of `triangles` triangles.
pub fn string_gluings(triangles: usize) -> Vec<Gluing> {
    (0..triangles.saturating_sub(1))
        .map(|k| Gluing {
            left: (k, if k == 0 { Face::Third } else { Face::First }),
            right: (k + 1, Face::Third),
        })
        .collect()
}

/// A string of triangles with explicit entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GluedDiagram {
    rank: usize,
    triangles: Vec<BZTriangle>,
    gluings: Vec<Gluing>,
}

impl GluedDiagram {
    /// A string-like diagram from its triangles.
    pub fn string(triangles: Vec<BZTriangle>) -> Result<Self> {
        let rank = triangles.first().ok_or(Error::ShapeMismatch)?.rank();
        if let Some(t) = triangles.iter().find(|t| t.rank() != rank) {
            return Err(Error::RankMismatch {
                expected: rank,
                found: t.rank(),
            });
        }
        let gluings = string_gluings(triangles.len());
        Ok(GluedDiagram {
            rank,
            triangles,
            gluings,
        })
    }

    pub fn zero(rank: usize, triangles: usize) -> Self {
        GluedDiagram {
            rank,
            triangles: vec![BZTriangle::zero(rank); triangles],
            gluings: string_gluings(triangles),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of outer weights, `triangles + 2`.
    pub fn points(&self) -> usize {
        self.triangles.len() + 2
    }

    pub fn triangles(&self) -> &[BZTriangle] {
        &self.triangles
    }

    pub fn gluings(&self) -> &[Gluing] {
        &self.gluings
    }

    /// Unglued faces, in the order of the outer weights.
    pub fn outer_faces(&self) -> Vec<(usize, Face)> {
        let mut out = Vec::new();
        for t in 0..self.triangles.len() {
            for f in [Face::First, Face::Second, Face::Third] {
                let glued = self
                    .gluings
                    .iter()
                    .any(|g| g.left == (t, f) || g.right == (t, f));
                if !glued {
                    out.push((t, f));
                }
            }
        }
        out
    }

    pub fn outer_weights(&self) -> Vec<Vec<i64>> {
        self.outer_faces()
            .into_iter()
            .map(|(t, f)| self.triangles[t].face_weight(f))
            .collect()
    }

    /// Every glued face pair carries mutually conjugate weights.
    pub fn gluings_hold(&self) -> bool {
        self.gluings.iter().all(|g| {
            let a = self.triangles[g.left.0].face_weight(g.left.1);
            let mut b = self.triangles[g.right.0].face_weight(g.right.1);
            b.reverse();
            a == b
        })
    }

    pub fn hexagons_hold(&self) -> bool {
        self.triangles.iter().all(BZTriangle::hexagons_hold)
    }

    /// Hexagon, gluing and outer constraints for the given outer weights.
    pub fn satisfies(&self, weights: &[Weight]) -> bool {
        let outer = self.outer_weights();
        self.hexagons_hold()
            && self.gluings_hold()
            && outer.len() == weights.len()
            && outer.iter().zip(weights).all(|(o, w)| o == w.labels())
    }

    pub fn is_true(&self) -> bool {
        self.triangles.iter().all(BZTriangle::is_true)
    }

    /// All entries, triangle by triangle.
    pub fn entries(&self) -> impl Iterator<Item = i64> + '_ {
        self.triangles
            .iter()
            .flat_map(|t| t.entries().iter().copied())
    }

    pub(crate) fn add_scaled(&mut self, other: &GluedDiagram, times: i64) -> Result<()> {
        for (a, b) in self.triangles.iter_mut().zip(&other.triangles) {
            a.add_scaled(b, times)?;
        }
        Ok(())
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (k, t) in self.triangles.iter().enumerate() {
            if k > 0 {
                out.push('\n');
            }
            out.push_str(&alloc::format!("triangle {}:\n", k + 1));
            out.push_str(&t.render());
        }
        out
    }
}

impl fmt::Display for GluedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Triangle with simple root `alpha_i` on one face and zero elsewhere.
pub(crate) fn face_root(rank: usize, face: Face, i: usize) -> BZTriangle {
    let a = simple_root(rank, i);
    let z = vec![0i64; rank];
    let t = match face {
        Face::First => initial_from_labels(&a, &z, &z),
        Face::Second => initial_from_labels(&z, &a, &z),
        Face::Third => initial_from_labels(&z, &z, &a),
    };
    t.expect("simple roots lie in the root lattice")
}

/// Gluing root `i` of gluing `k` in a string of `triangles` triangles: `alpha_i`
/// on the left face, `alpha_{r+1-i}` on the right face.
pub fn string_gluing_root(
    rank: usize,
    triangles: usize,
    k: usize,
    i: usize,
) -> Result<GluedDiagram> {
    if rank == 0 {
        return Err(Error::InvalidRank(0));
    }
    if i == 0 || i > rank {
        return Err(Error::InvalidRootIndex { rank, index: i });
    }
    if k + 1 >= triangles {
        return Err(Error::ShapeMismatch);
    }
    let mut d = GluedDiagram::zero(rank, triangles);
    let g = d.gluings[k];
    d.triangles[g.left.0] = face_root(rank, g.left.1, i);
    d.triangles[g.right.0] = face_root(rank, g.right.1, rank + 1 - i);
    Ok(d)
}

/// Four-point gluing root `G_i`, `1 <= i <= r`.
pub fn gluing_root(rank: usize, i: usize) -> Result<GluedDiagram> {
    string_gluing_root(rank, 2, 0, i)
}

/// Initial diagram of the string channel: the initial triangles of
/// `lambda^(1) (x) lambda^(2) (x) S_3`, `S_{t+3} (x) lambda^(t+2) (x) S_{t+2}^+`
/// and finally `lambda^(N-1) (x) lambda^(N) (x) S_{N-1}^+`, where
/// `S_k = lambda^(k) + ... + lambda^(N)`.
pub fn initial_string_diagram(weights: &[Weight]) -> Result<GluedDiagram> {
    let points = weights.len();
    if points < 3 {
        return Err(Error::TooFewWeights {
            needed: 3,
            found: points,
        });
    }
    let r = common_rank(weights)?;
    let mut tails: Vec<Vec<i64>> = vec![vec![0; r]; points + 1];
    for k in (0..points).rev() {
        let next = tails[k + 1].clone();
        tails[k] = next
            .iter()
            .zip(weights[k].labels())
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
    }
    let conj = |v: &[i64]| -> Vec<i64> { v.iter().rev().copied().collect() };
    let l = |k: usize| weights[k - 1].labels();
    let s = |k: usize| tails[k - 1].as_slice();
    let mut triangles = Vec::with_capacity(points - 2);
    let tri = |a: &[i64], b: &[i64], c: &[i64]| {
        initial_from_labels(a, b, c).ok_or(Error::NotInRootLattice)
    };
    if points == 3 {
        triangles.push(tri(l(1), l(2), l(3))?);
    } else {
        triangles.push(tri(l(1), l(2), s(3))?);
        for t in 1..=points - 4 {
            triangles.push(tri(s(t + 3), l(t + 2), &conj(s(t + 2)))?);
        }
        triangles.push(tri(l(points - 1), l(points), &conj(s(points - 1)))?);
    }
    GluedDiagram::string(triangles)
}

/// Glues `initial_triangle(lambda, mu, nu + sigma)` to
/// `initial_triangle(nu, sigma, (nu + sigma)^+)`.
pub fn initial_diagram(
    lambda: &Weight,
    mu: &Weight,
    nu: &Weight,
    sigma: &Weight,
) -> Result<GluedDiagram> {
    let r = lambda.rank();
    for w in [mu, nu, sigma] {
        check_rank(r, w)?;
    }
    initial_string_diagram(&[lambda.clone(), mu.clone(), nu.clone(), sigma.clone()])
}

/// Linear coefficients of a four-point diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoefficientVector4 {
    pub v1: CoefficientVector3,
    /// `g_1 .. g_r`.
    pub g: Vec<i64>,
    pub v2: CoefficientVector3,
}

impl CoefficientVector4 {
    pub fn zero(rank: usize) -> Self {
        CoefficientVector4 {
            v1: CoefficientVector3::zero(rank),
            g: vec![0; rank],
            v2: CoefficientVector3::zero(rank),
        }
    }

    pub fn rank(&self) -> usize {
        self.g.len()
    }

    /// Builds from values in summation order: `v1` in hexagon order,
    /// `g_r .. g_1`, then `v2` in reverse hexagon order.
    pub fn from_summation_order(rank: usize, values: &[i64]) -> Result<Self> {
        let h = hexagon_count(rank);
        if values.len() != 2 * h + rank {
            return Err(Error::ShapeMismatch);
        }
        let v1 = CoefficientVector3::from_values(rank, values[..h].to_vec())?;
        let mut g = values[h..h + rank].to_vec();
        g.reverse();
        let mut v2 = values[h + rank..].to_vec();
        v2.reverse();
        let v2 = CoefficientVector3::from_values(rank, v2)?;
        Ok(CoefficientVector4 { v1, g, v2 })
    }

    /// Inverse of [`CoefficientVector4::from_summation_order`].
    pub fn summation_order(&self) -> Vec<i64> {
        let mut out = self.v1.values().to_vec();
        out.extend(self.g.iter().rev());
        out.extend(self.v2.values().iter().rev());
        out
    }
}

impl fmt::Display for CoefficientVector4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut sep = |f: &mut fmt::Formatter<'_>| {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            Ok::<(), fmt::Error>(())
        };
        for ((i, j), v) in self.v1.iter() {
            sep(f)?;
            write!(f, "v1[{i},{j}]={v}")?;
        }
        for (i, g) in self.g.iter().enumerate().rev() {
            sep(f)?;
            write!(f, "g{}={g}", i + 1)?;
        }
        let order = hexagon_order(self.rank());
        for &(i, j) in order.iter().rev() {
            sep(f)?;
            write!(f, "v2[{i},{j}]={}", self.v2.get(i, j))?;
        }
        Ok(())
    }
}

/// `D_0 + sum v^(1) V^(1) + sum v^(2) V^(2) - sum g_i G_i`.
pub fn reconstruct_diagram(
    lambda: &Weight,
    mu: &Weight,
    nu: &Weight,
    sigma: &Weight,
    cv: &CoefficientVector4,
) -> Result<GluedDiagram> {
    let mut d = initial_diagram(lambda, mu, nu, sigma)?;
    let r = d.rank();
    if cv.rank() != r || cv.v1.rank() != r || cv.v2.rank() != r {
        return Err(Error::RankMismatch {
            expected: r,
            found: cv.rank(),
        });
    }
    for (t, v) in [&cv.v1, &cv.v2].into_iter().enumerate() {
        for ((i, j), c) in v.iter() {
            if c != 0 {
                d.triangles[t].add_pattern(&virtual_pattern(r, i, j), c)?;
            }
        }
    }
    for (k, &g) in cv.g.iter().enumerate() {
        if g != 0 {
            let root = gluing_root(r, k + 1)?;
            d.add_scaled(&root, -g)?;
        }
    }
    Ok(d)
}

pub fn is_true_diagram(d: &GluedDiagram) -> bool {
    d.is_true()
}

/// A lattice direction of a string diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Coordinate {
    /// Virtual triangle `(i, j)` placed in one triangle.
    Hexagon { triangle: usize, i: usize, j: usize },
    /// Gluing root `i` of one gluing, entering with a minus sign.
    Root { gluing: usize, i: usize },
}

/// All `(N-2) H_r + (N-3) r` coordinates of a string of `triangles`
/// triangles, ordered triangle by triangle: the hexagons of the first
/// triangle in hexagon order, then each gluing's roots `r .. 1` followed by
/// the next triangle's hexagons in reverse order.
pub fn string_coordinates(rank: usize, triangles: usize) -> Vec<Coordinate> {
    let order = hexagon_order(rank);
    let mut out = Vec::new();
    for t in 0..triangles {
        if t > 0 {
            for i in (1..=rank).rev() {
                out.push(Coordinate::Root { gluing: t - 1, i });
            }
        }
        let hex: Vec<_> = if t == 0 {
            order.clone()
        } else {
            order.iter().rev().copied().collect()
        };
        for (i, j) in hex {
            out.push(Coordinate::Hexagon { triangle: t, i, j });
        }
    }
    out
}

/// Sparse change `(flat entry index, delta)` of a unit step along `c`, with
/// flat indices running over the triangles in order.
pub fn coordinate_delta(rank: usize, triangles: usize, c: Coordinate) -> Result<Vec<(usize, i64)>> {
    let e = entry_count(rank);
    match c {
        Coordinate::Hexagon { triangle, i, j } => {
            crate::triangle::check_hexagon(rank, i, j)?;
            if triangle >= triangles {
                return Err(Error::ShapeMismatch);
            }
            Ok(virtual_pattern(rank, i, j)
                .into_iter()
                .map(|(k, d)| (triangle * e + k, d))
                .collect())
        }
        Coordinate::Root { gluing, i } => {
            let root = string_gluing_root(rank, triangles, gluing, i)?;
            Ok(root
                .entries()
                .enumerate()
                .filter(|&(_, d)| d != 0)
                .map(|(k, d)| (k, -d))
                .collect())
        }
    }
}
