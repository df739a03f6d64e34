//! Constraint matrices of triangles and diagrams, and their rank.

use alloc::vec;
use alloc::vec::Vec;

use crate::diagram::string_gluings;
use crate::triangle::{constraint_rows, entry_count, entry_index, Corner, Face};

/// Rank of an integer matrix (fraction-free elimination).
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rk = 0;
    for c in 0..cols {
        let Some(p) = (rk..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(rk, p);
        for i in rk + 1..m.len() {
            if m[i][c] == 0 {
                continue;
            }
            let (a, b) = (m[rk][c], m[i][c]);
            let pivot = m[rk].clone();
            let mut g = 0i128;
            for (x, &y) in m[i].iter_mut().zip(&pivot) {
                *x = a * *x - b * y;
                g = gcd(g, *x);
            }
            if g > 1 {
                m[i].iter_mut().for_each(|x| *x /= g);
            }
        }
        rk += 1;
    }
    rk
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn face_pairs(rank: usize, face: Face) -> Vec<(usize, usize)> {
    (1..=rank)
        .map(|k| match face {
            Face::First => (
                entry_index(k, 1, Corner::Top),
                entry_index(k, 1, Corner::Left),
            ),
            Face::Second => (
                entry_index(rank, k, Corner::Left),
                entry_index(rank, k, Corner::Right),
            ),
            Face::Third => {
                let t = rank - k + 1;
                (
                    entry_index(t, t, Corner::Right),
                    entry_index(t, t, Corner::Top),
                )
            }
        })
        .collect()
}

/// All linear constraints of a string of `triangles` triangles, as rows over
/// the concatenated entries: hexagon identities, one row per outer label
/// and one row per glued label pair.
pub fn string_constraint_rows(rank: usize, triangles: usize) -> Vec<Vec<i64>> {
    let e = entry_count(rank);
    let width = e * triangles;
    let (hex, _) = constraint_rows(rank);
    let gluings = string_gluings(triangles);
    let mut rows = Vec::new();
    for t in 0..triangles {
        for h in &hex {
            let mut row = vec![0i64; width];
            row[t * e..(t + 1) * e].copy_from_slice(h);
            rows.push(row);
        }
        for f in [Face::First, Face::Second, Face::Third] {
            let glued = gluings
                .iter()
                .any(|g| g.left == (t, f) || g.right == (t, f));
            if glued {
                continue;
            }
            for (a, b) in face_pairs(rank, f) {
                let mut row = vec![0i64; width];
                row[t * e + a] += 1;
                row[t * e + b] += 1;
                rows.push(row);
            }
        }
    }
    for g in &gluings {
        let left = face_pairs(rank, g.left.1);
        let right = face_pairs(rank, g.right.1);
        for k in 0..rank {
            let (a, b) = left[k];
            let (c, d) = right[rank - 1 - k];
            let mut row = vec![0i64; width];
            row[g.left.0 * e + a] += 1;
            row[g.left.0 * e + b] += 1;
            row[g.right.0 * e + c] -= 1;
            row[g.right.0 * e + d] -= 1;
            rows.push(row);
        }
    }
    rows
}

/// Dimension of the solution lattice: entries minus constraint rank.
pub fn free_parameters(rank_r: usize, triangles: usize) -> usize {
    let rows = string_constraint_rows(rank_r, triangles);
    entry_count(rank_r) * triangles - rank(&rows)
}
