//! Acceptance criteria, one pass/fail line each.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use bzpoly::grid::{Grid, PairTable, SingletCache};
use bzpoly::sweep::{verify, VerifyConfig};
use bzpoly_core::search::StringSearch;
use bzpoly_core::{
    cone_su2, cone_su3, diagram_count_n, gluing_root, initial_triangle, multiplicity4_su2,
    multiplicity4_su3, multiplicity4_su4, multiplicity_n, parse_weight_list, reconstruct_diagram,
    reconstruct_triangle, root_lattice_check, virtual_triangle, CouplingQuery, Evaluator, Weight,
};

const THREE: [(usize, i64); 3] = [(1, 10), (2, 4), (3, 2)];
const FOUR: [(usize, i64); 3] = [(1, 8), (2, 3), (3, 2)];

type Outcome = Result<String, String>;

struct Three {
    ev: Evaluator,
    table: PairTable,
    counts: Vec<u64>,
}

struct Four {
    ev: Evaluator,
    table: PairTable,
    counts: Vec<u64>,
}

impl Three {
    fn grid(&self) -> &Grid {
        self.table.grid()
    }

    fn count(&self, ws: &[Weight]) -> u64 {
        let g = self.grid();
        let idx: Vec<usize> = ws.iter().map(|w| g.index_of(w).unwrap()).collect();
        self.counts[g.tuple_number(&idx)]
    }
}

impl Four {
    fn grid(&self) -> &Grid {
        self.table.grid()
    }

    fn count(&self, ws: &[Weight]) -> u64 {
        let g = self.grid();
        let idx: Vec<usize> = ws.iter().map(|w| g.index_of(w).unwrap()).collect();
        self.counts[g.tuple_number(&idx)]
    }
}

struct Tables {
    three: Vec<Three>,
    four: Vec<Four>,
}

fn ws(s: &str) -> Vec<Weight> {
    parse_weight_list(s, None).unwrap()
}

fn build() -> Tables {
    let three = THREE
        .iter()
        .map(|&(r, m)| {
            let grid = Grid::new(r, m).unwrap();
            let ev = Evaluator::new(r).unwrap();
            let counts = grid
                .tabulate(3, |w| ev.multiplicity3(&w[0], &w[1], &w[2]))
                .unwrap();
            Three {
                ev,
                table: PairTable::new(grid).unwrap(),
                counts,
            }
        })
        .collect();
    let four = FOUR
        .iter()
        .map(|&(r, m)| {
            let grid = Grid::new(r, m).unwrap();
            let ev = Evaluator::new(r).unwrap();
            let counts = grid
                .tabulate(4, |w| ev.multiplicity4(&w[0], &w[1], &w[2], &w[3]))
                .unwrap();
            Four {
                ev,
                table: PairTable::new(grid).unwrap(),
                counts,
            }
        })
        .collect();
    Tables { three, four }
}

/// First tuple number in `0..n` where `f` fails, with its message.
fn first_failure<F>(n: usize, f: F) -> Option<(usize, String)>
where
    F: Fn(usize) -> Option<String> + Sync,
{
    (0..n)
        .into_par_iter()
        .filter_map(|k| f(k).map(|m| (k, m)))
        .min_by_key(|x| x.0)
}

fn fmt(ws: &[Weight]) -> String {
    bzpoly_core::weights::format_weight_list(ws)
}

fn c1(t: &Tables) -> Outcome {
    let mut checked = 0;
    for th in &t.three {
        let g = th.grid();
        let n = g.tuples(3);
        if let Some((_, m)) = first_failure(n, |k| {
            let w = g.tuple(3, k);
            let o = th.table.singlets3(&w[0], &w[1], &w[2]);
            (o != th.counts[k])
                .then(|| format!("{}: polytope {} oracle {o}", fmt(&w), th.counts[k]))
        }) {
            return Err(m);
        }
        checked += n;
    }
    Ok(format!("{checked} triples, 0 mismatches"))
}

fn c2(t: &Tables) -> Outcome {
    let mut checked = 0;
    for f in &t.four {
        let g = f.grid();
        let n = g.tuples(4);
        if let Some((_, m)) = first_failure(n, |k| {
            let w = g.tuple(4, k);
            let ch =
                f.ev.channel_decompose4(&w[0], &w[1], &w[2], &w[3])
                    .unwrap()
                    .total;
            let o = f.table.singlets4(&w[0], &w[1], &w[2], &w[3]);
            (ch != f.counts[k] || o != f.counts[k]).then(|| {
                format!(
                    "{}: polytope {} channel {ch} oracle {o}",
                    fmt(&w),
                    f.counts[k]
                )
            })
        }) {
            return Err(m);
        }
        checked += n;
    }
    for (s, expect) in [
        ("1;1;1;1", 2),
        ("1,0;0,1;1,0;0,1", 2),
        ("1,1;1,1;1,1;1,1", 8),
    ] {
        let q = ws(s);
        let f = &t.four[q[0].rank() - 1];
        let got = f.count(&q);
        if got != expect {
            return Err(format!("{s}: {got}, expected {expect}"));
        }
    }
    Ok(format!(
        "{checked} quadruples, 0 mismatches; spot values 2, 2, 8"
    ))
}

fn c3(t: &Tables) -> Outcome {
    let mut checked = 0;
    for f in &t.four {
        let g = f.grid();
        let n = g.tuples(4);
        if let Some((_, m)) = first_failure(n, |k| {
            let w = g.tuple(4, k);
            let general =
                f.ev.count4(w[0].labels(), w[1].labels(), w[2].labels(), w[3].labels())
                    .unwrap();
            let explicit = match g.rank() {
                1 => multiplicity4_su2(w[0].label(1), w[1].label(1), w[2].label(1), w[3].label(1)),
                2 => multiplicity4_su3(&w[0], &w[1], &w[2], &w[3]).unwrap(),
                _ => multiplicity4_su4(&w[0], &w[1], &w[2], &w[3]).unwrap(),
            };
            (general != explicit || general != f.counts[k])
                .then(|| format!("{}: general {general} explicit {explicit}", fmt(&w)))
        }) {
            return Err(m);
        }
        checked += n;
    }
    Ok(format!("{checked} quadruples, 0 mismatches"))
}

fn c4(t: &Tables) -> Outcome {
    let su2 = &t.four[0];
    let g = su2.grid();
    if let Some((_, m)) = first_failure(g.tuples(4), |k| {
        let w = g.tuple(4, k);
        let c = cone_su2(w[0].label(1), w[1].label(1), w[2].label(1), w[3].label(1));
        (c.member != (su2.counts[k] > 0))
            .then(|| format!("{}: cone {} count {}", fmt(&w), c.member, su2.counts[k]))
    }) {
        return Err(m);
    }
    let g = Grid::new(2, 4).unwrap();
    let ev = Evaluator::new(2).unwrap();
    if let Some((_, m)) = first_failure(g.tuples(4), |k| {
        let w = g.tuple(4, k);
        let c = cone_su3(&w[0], &w[1], &w[2], &w[3]).unwrap();
        let n = ev.multiplicity4(&w[0], &w[1], &w[2], &w[3]).unwrap();
        (c.member != (n > 0)).then(|| format!("{}: cone {} count {n}", fmt(&w), c.member))
    }) {
        return Err(m);
    }
    Ok(format!(
        "{} + {} quadruples, 0 mismatches",
        t.four[0].grid().tuples(4),
        g.tuples(4)
    ))
}

fn c5(t: &Tables) -> Outcome {
    let mut objects = 0u64;
    for th in &t.three {
        let g = th.grid();
        if let Some((_, m)) = first_failure(g.tuples(3), |k| {
            let w = g.tuple(3, k);
            let cvs = th.ev.enumerate3(&w[0], &w[1], &w[2]).unwrap();
            if cvs.len() as u64 != th.counts[k] {
                return Some(format!(
                    "{}: {} vectors, count {}",
                    fmt(&w),
                    cvs.len(),
                    th.counts[k]
                ));
            }
            cvs.iter().find_map(|cv| {
                let tri = reconstruct_triangle(&w[0], &w[1], &w[2], cv).unwrap();
                (!tri.is_true()
                    || !tri.hexagons_hold()
                    || !tri.satisfies(w[0].labels(), w[1].labels(), w[2].labels()))
                .then(|| format!("{}: invalid triangle {cv}", fmt(&w)))
            })
        }) {
            return Err(m);
        }
        objects += th.counts.iter().sum::<u64>();
    }
    for f in &t.four {
        let g = f.grid();
        if let Some((_, m)) = first_failure(g.tuples(4), |k| {
            let w = g.tuple(4, k);
            let cvs = f.ev.enumerate4(&w[0], &w[1], &w[2], &w[3]).unwrap();
            if cvs.len() as u64 != f.counts[k] {
                return Some(format!(
                    "{}: {} vectors, count {}",
                    fmt(&w),
                    cvs.len(),
                    f.counts[k]
                ));
            }
            cvs.iter().find_map(|cv| {
                let d = reconstruct_diagram(&w[0], &w[1], &w[2], &w[3], cv).unwrap();
                (!d.is_true() || !d.hexagons_hold() || !d.gluings_hold() || !d.satisfies(&w))
                    .then(|| format!("{}: invalid diagram {cv}", fmt(&w)))
            })
        }) {
            return Err(m);
        }
        objects += f.counts.iter().sum::<u64>();
    }
    let mut searched = 0;
    for (points, table) in [(3usize, None), (4, Some(&t.four[1]))] {
        let g = Grid::new(2, 3).unwrap();
        let th = &t.three[1];
        if let Some((_, m)) = first_failure(g.tuples(points), |k| {
            let w = g.tuple(points, k);
            let found = match root_lattice_check(&w).unwrap() {
                Some(_) => StringSearch::new(&w).and_then(|s| s.count()).unwrap(),
                None => 0,
            };
            let expect = match table {
                Some(f) => f.count(&w),
                None => th.count(&w),
            };
            (found != expect).then(|| format!("{}: search {found} count {expect}", fmt(&w)))
        }) {
            return Err(m);
        }
        searched += g.tuples(points);
    }
    Ok(format!(
        "{objects} objects validated; box search over {searched} su(3) couplings"
    ))
}

fn c6() -> Outcome {
    let rows = |t: &bzpoly_core::BZTriangle| -> Vec<i64> { t.entries().to_vec() };
    let vfour: [(usize, usize, [i64; 18]); 3] = [
        (
            2,
            1,
            [1, -1, -1, -1, -1, 1, -1, -1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0],
        ),
        (
            1,
            1,
            [0, 0, 0, 1, 0, -1, -1, 1, 0, -1, -1, 0, 1, -1, -1, 1, 0, 0],
        ),
        (
            1,
            2,
            [0, 0, 0, 0, 1, 0, 1, -1, -1, 0, -1, -1, 0, 0, 1, -1, -1, 1],
        ),
    ];
    for (i, j, e) in vfour {
        if rows(&virtual_triangle(3, i, j).unwrap()) != e {
            return Err(format!("su(4) virtual triangle ({i},{j}) differs"));
        }
    }
    let (l, m) = (
        Weight::new(vec![1, 2]).unwrap(),
        Weight::new(vec![2, 1]).unwrap(),
    );
    let t = initial_triangle(&l, &m, &l.add(&m).unwrap().conjugate()).unwrap();
    if rows(&t) != [1, 0, 2, 2, 2, 0, 2, 0, 1] || !t.is_true() {
        return Err("highest-coupling triangle differs".into());
    }
    let a1 = [0, 0, -1, 0, 1, 0, 0, -1, 1];
    let a2 = [1, -1, 1, 0, -1, 0, 0, 0, 0];
    for (i, pair) in [(1, [a1, a2]), (2, [a2, a1])] {
        let g = gluing_root(2, i).unwrap();
        if g.triangles()
            .iter()
            .map(|t| t.entries().to_vec())
            .collect::<Vec<_>>()
            != pair
        {
            return Err(format!("su(3) gluing root {i} differs"));
        }
    }
    Ok("su(4) virtual triangles, su(3) highest-coupling triangle, su(3) gluing roots".into())
}

fn c7(t: &Tables) -> Outcome {
    const S3: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let mut checked = 0;
    for th in &t.three {
        let g = th.grid();
        if let Some((_, m)) = first_failure(g.tuples(3), |k| {
            let w = g.tuple(3, k);
            let base = th.counts[k];
            for p in S3 {
                let q: Vec<Weight> = p.iter().map(|&i| w[i].clone()).collect();
                if th.count(&q) != base {
                    return Some(format!("{}: permutation {p:?}", fmt(&w)));
                }
            }
            let c: Vec<Weight> = w.iter().map(Weight::conjugate).collect();
            (th.count(&c) != base).then(|| format!("{}: conjugation", fmt(&w)))
        }) {
            return Err(m);
        }
        checked += g.tuples(3);
    }
    let perms: Vec<Vec<usize>> = {
        let mut out = Vec::new();
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    for d in 0..4 {
                        let p = vec![a, b, c, d];
                        let mut s = p.clone();
                        s.sort();
                        if s == [0, 1, 2, 3] {
                            out.push(p);
                        }
                    }
                }
            }
        }
        out
    };
    for (f, th) in t.four.iter().zip(&t.three) {
        let g = f.grid();
        if let Some((_, m)) = first_failure(g.tuples(4), |k| {
            let w = g.tuple(4, k);
            let base = f.counts[k];
            for p in &perms {
                let q: Vec<Weight> = p.iter().map(|&i| w[i].clone()).collect();
                if f.count(&q) != base {
                    return Some(format!("{}: permutation {p:?}", fmt(&w)));
                }
            }
            let c: Vec<Weight> = w.iter().map(Weight::conjugate).collect();
            if f.count(&c) != base {
                return Some(format!("{}: conjugation", fmt(&w)));
            }
            (w[3].is_zero() && base != th.count(&w[..3]))
                .then(|| format!("{}: zero-weight reduction", fmt(&w)))
        }) {
            return Err(m);
        }
        checked += g.tuples(4);
    }
    Ok(format!(
        "{checked} tuples under S3/S4, conjugation and zero reduction, 0 violations"
    ))
}

fn c8() -> Outcome {
    let mut checked = 0;
    for (r, m) in [(1usize, 4i64), (2, 2)] {
        let g = Grid::new(r, m).unwrap();
        let ev = Evaluator::new(r).unwrap();
        let failure = (0..g.tuples(5))
            .into_par_iter()
            .map_init(SingletCache::new, |cache, k| {
                let w = g.tuple(5, k);
                let n = bzpoly_core::n_point::multiplicity_n_with(&ev, &w).unwrap();
                let o = cache.singlets(&w).unwrap();
                let d = diagram_count_n(&CouplingQuery::new(w.clone()).unwrap()).unwrap();
                (n != o || n != d)
                    .then(|| (k, format!("{}: fold {n} oracle {o} diagrams {d}", fmt(&w))))
            })
            .filter_map(|x| x)
            .min_by_key(|x| x.0);
        if let Some((_, msg)) = failure {
            return Err(msg);
        }
        checked += g.tuples(5);
    }
    let spot = multiplicity_n(&CouplingQuery::new(ws("1;1;1;1;2")).unwrap()).unwrap();
    if spot != 3 {
        return Err(format!("su(2) (1,1,1,1,2): {spot}, expected 3"));
    }
    Ok(format!(
        "{checked} five-point couplings against oracle and diagram counts; (1,1,1,1,2) -> 3"
    ))
}

fn c9() -> Outcome {
    let start = Instant::now();
    let runs: Vec<(usize, i64, usize)> = THREE
        .iter()
        .map(|&(r, m)| (r, m, 3))
        .chain(FOUR.iter().map(|&(r, m)| (r, m, 4)))
        .collect();
    for (r, m, n) in &runs {
        let out = Command::new(env!("CARGO_BIN_EXE_bzpoly"))
            .args([
                "verify",
                "--rank",
                &r.to_string(),
                "--max-label",
                &m.to_string(),
                "--points",
                &n.to_string(),
            ])
            .output()
            .map_err(|e| e.to_string())?;
        let text = String::from_utf8_lossy(&out.stdout);
        if out.status.code() != Some(0) || !text.contains("mismatches: 0") {
            return Err(format!(
                "verify rank {r} labels <= {m} points {n}: exit {:?}\n{text}{}",
                out.status.code(),
                String::from_utf8_lossy(&out.stderr)
            ));
        }
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(600) {
        return Err(format!("took {:.1}s", elapsed.as_secs_f64()));
    }
    // the library sweep gives the same verdict
    let rep = verify(&VerifyConfig::new(2, 2, 4)).map_err(|e| e.to_string())?;
    if rep.mismatches != 0 {
        return Err("library sweep disagrees".into());
    }
    Ok(format!(
        "{} sweeps exit 0 in {:.1}s",
        runs.len(),
        elapsed.as_secs_f64()
    ))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let tables = build();
    println!("tables built in {:.1}s", start.elapsed().as_secs_f64());
    let criteria: [(&str, &dyn Fn() -> Outcome); 9] = [
        ("oracle equivalence, three-point", &|| c1(&tables)),
        ("four-point channel consistency", &|| c2(&tables)),
        ("specialization agreement", &|| c3(&tables)),
        ("cone correctness", &|| c4(&tables)),
        ("structural enumeration", &|| c5(&tables)),
        ("reference fixtures", &c6),
        ("symmetry suite", &|| c7(&tables)),
        ("N-point", &c8),
        ("verify command", &c9),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let res = run();
        let secs = t.elapsed().as_secs_f64();
        match res {
            Ok(detail) => println!("PASS {} {name}: {detail} ({secs:.1}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {} {name}: {detail} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!(
        "{} of 9 criteria passed in {:.1}s",
        9 - failed,
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
