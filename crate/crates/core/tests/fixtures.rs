//! Explicit triangles and diagrams with known entries.

mod common;

use bzpoly_core::{
    gluing_root, initial_diagram, initial_triangle, reconstruct_diagram, reconstruct_triangle,
    virtual_triangle, BZTriangle, CoefficientVector3, CoefficientVector4,
};
use common::w;

fn rows(t: &BZTriangle) -> Vec<Vec<i64>> {
    t.rows().into_iter().map(<[i64]>::to_vec).collect()
}

fn flat(rows: &[&[i64]]) -> Vec<Vec<i64>> {
    rows.iter().map(|r| r.to_vec()).collect()
}

#[test]
fn su4_virtual_triangles() {
    let left: &[&[i64]] = &[
        &[1],
        &[-1, -1],
        &[-1, -1],
        &[1, -1, -1, 1],
        &[0, 1, 0],
        &[0, 0, 0, 0, 0, 0],
    ];
    let middle: &[&[i64]] = &[
        &[0],
        &[0, 0],
        &[1, 0],
        &[-1, -1, 1, 0],
        &[-1, -1, 0],
        &[1, -1, -1, 1, 0, 0],
    ];
    let right: &[&[i64]] = &[
        &[0],
        &[0, 0],
        &[0, 1],
        &[0, 1, -1, -1],
        &[0, -1, -1],
        &[0, 0, 1, -1, -1, 1],
    ];
    assert_eq!(rows(&virtual_triangle(3, 2, 1).unwrap()), flat(left));
    assert_eq!(rows(&virtual_triangle(3, 1, 1).unwrap()), flat(middle));
    assert_eq!(rows(&virtual_triangle(3, 1, 2).unwrap()), flat(right));
}

#[test]
fn su4_virtual_triangles_by_reconstruction() {
    let z = w(&[0, 0, 0]);
    let mut cv = CoefficientVector3::zero(3);
    cv.set(2, 1, 1);
    let t = reconstruct_triangle(&z, &z, &z, &cv).unwrap();
    assert_eq!(t, virtual_triangle(3, 2, 1).unwrap());
    assert!(!t.is_true());
}

#[test]
fn unique_true_triangle_of_the_highest_coupling() {
    let (lam, mu) = (w(&[1, 2]), w(&[2, 1]));
    let third = lam.add(&mu).unwrap().conjugate();
    let t = initial_triangle(&lam, &mu, &third).unwrap();
    assert_eq!(rows(&t), flat(&[&[1], &[0, 2], &[2, 2], &[0, 2, 0, 1]]));
    assert!(t.is_true());
    let same = reconstruct_triangle(&lam, &mu, &third, &CoefficientVector3::zero(2)).unwrap();
    assert_eq!(same, t);
}

const ALPHA1: [i64; 9] = [0, 0, -1, 0, 1, 0, 0, -1, 1];
const ALPHA2: [i64; 9] = [1, -1, 1, 0, -1, 0, 0, 0, 0];

#[test]
fn su3_simple_root_triangle() {
    // 0 (x) 0 (x) alpha_2, as the right half of the first gluing root
    let g = gluing_root(2, 1).unwrap();
    assert_eq!(
        rows(&g.triangles()[1]),
        flat(&[&[1], &[-1, 1], &[0, -1], &[0, 0, 0, 0]])
    );
    assert_eq!(g.triangles()[1].entries(), ALPHA2);
}

#[test]
fn su3_gluing_roots() {
    let g1 = gluing_root(2, 1).unwrap();
    assert_eq!(g1.triangles()[0].entries(), ALPHA1);
    assert_eq!(g1.triangles()[1].entries(), ALPHA2);
    let g2 = gluing_root(2, 2).unwrap();
    assert_eq!(g2.triangles()[0].entries(), ALPHA2);
    assert_eq!(g2.triangles()[1].entries(), ALPHA1);
    for g in [g1, g2] {
        assert!(g.outer_weights().iter().all(|x| x.iter().all(|&l| l == 0)));
        assert!(g.gluings_hold() && g.hexagons_hold());
    }
}

#[test]
fn su2_diagrams_of_four_spins() {
    let s = w(&[1]);
    let d0 = initial_diagram(&s, &s, &s, &s).unwrap();
    let mut trues = 0;
    for g in -3..=3 {
        let mut cv = CoefficientVector4::zero(1);
        cv.g[0] = g;
        let d = reconstruct_diagram(&s, &s, &s, &s, &cv).unwrap();
        assert!(d.satisfies(&[s.clone(), s.clone(), s.clone(), s.clone()]));
        if d.is_true() {
            trues += 1;
        }
        if g == 0 {
            assert_eq!(d, d0);
        }
    }
    assert_eq!(trues, 2);
}
