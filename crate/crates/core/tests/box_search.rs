//! Direct lattice search finds exactly the objects the nested sums count.

mod common;

use bzpoly_core::search::StringSearch;
use bzpoly_core::{diagram_count_n, root_lattice_check, CouplingQuery, Evaluator};
use common::box_weights;

#[test]
fn su3_triangles_and_diagrams() {
    let ev = Evaluator::new(2).unwrap();
    let b = box_weights(2, 1);
    for x in &b {
        for y in &b {
            for z in &b {
                let three = [x.clone(), y.clone(), z.clone()];
                let found = match root_lattice_check(&three).unwrap() {
                    Some(_) => StringSearch::new(&three).unwrap().count().unwrap(),
                    None => 0,
                };
                assert_eq!(found, ev.multiplicity3(x, y, z).unwrap());
                for t in &b {
                    let q = CouplingQuery::new(vec![x.clone(), y.clone(), z.clone(), t.clone()])
                        .unwrap();
                    assert_eq!(
                        diagram_count_n(&q).unwrap(),
                        ev.multiplicity4(x, y, z, t).unwrap()
                    );
                }
            }
        }
    }
}

#[test]
fn searched_diagrams_are_true() {
    let ws = bzpoly_core::parse_weight_list("1,1;1,1;1,1;1,1", None).unwrap();
    let s = StringSearch::new(&ws).unwrap();
    let pts = s.points().unwrap();
    assert_eq!(pts.len(), 8);
    for p in pts {
        let d = s.diagram(&p).unwrap();
        assert!(d.is_true() && d.satisfies(&ws));
    }
}
