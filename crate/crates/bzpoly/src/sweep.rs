//! Exhaustive and sampled cross-checks of the evaluation paths.

use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use bzpoly_core::n_point::{fold_right, multiplicity_n_with};
use bzpoly_core::{
    diagram_count_n, multiplicity4_su2, multiplicity4_su3, multiplicity4_su4, CouplingQuery, Error,
    Evaluator, Result, Weight,
};

use crate::grid::{Grid, PairTable, SingletCache};

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub rank: usize,
    pub max_label: i64,
    pub points: usize,
    /// Random tuples instead of the full box.
    pub samples: Option<usize>,
    pub seed: u64,
    /// Also count glued diagrams directly (rank <= 2, at most six points).
    pub diagrams: bool,
}

impl VerifyConfig {
    pub fn new(rank: usize, max_label: i64, points: usize) -> Self {
        VerifyConfig {
            rank,
            max_label,
            points,
            samples: None,
            seed: 0,
            diagrams: false,
        }
    }
}

/// A tuple on which the paths disagree, with every path's value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub weights: Vec<Weight>,
    pub values: Vec<(&'static str, u64)>,
}

impl std::fmt::Display for Mismatch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&bzpoly_core::weights::format_weight_list(&self.weights))?;
        for (name, v) in &self.values {
            write!(f, " {name}={v}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub checked: u64,
    /// Tuples with a non-zero multiplicity.
    pub nonzero: u64,
    pub mismatches: u64,
    /// The mismatch with the smallest tuple number.
    pub first: Option<Mismatch>,
    pub paths: Vec<&'static str>,
    pub elapsed: Duration,
}

struct Checker<'a> {
    ev: Evaluator,
    table: Option<&'a PairTable>,
    diagrams: bool,
}

impl Checker<'_> {
    fn paths(&self, points: usize) -> Vec<&'static str> {
        let mut p = vec!["polytope", "channel", "oracle"];
        if points == 4 {
            p.push("general");
            if self.ev.rank() <= 3 {
                p.push("explicit");
            }
        }
        if self.diagrams {
            p.push("diagrams");
        }
        p
    }

    fn values(&self, ws: &[Weight], cache: &mut SingletCache) -> Result<Vec<(&'static str, u64)>> {
        let ev = &self.ev;
        let mut out = vec![("polytope", multiplicity_n_with(ev, ws)?)];
        let channel = match ws {
            [a, b, c, d] => ev.channel_decompose4(a, b, c, d)?.total,
            _ => fold_right(ev, ws)?,
        };
        out.push(("channel", channel));
        let oracle = match (self.table, ws) {
            (Some(t), [a, b, c]) => t.singlets3(a, b, c),
            (Some(t), [a, b, c, d]) => t.singlets4(a, b, c, d),
            _ => cache.singlets(ws)?,
        };
        out.push(("oracle", oracle));
        if let [a, b, c, d] = ws {
            out.push((
                "general",
                ev.count4(a.labels(), b.labels(), c.labels(), d.labels())?,
            ));
            let explicit = match ev.rank() {
                1 => Some(multiplicity4_su2(
                    a.label(1),
                    b.label(1),
                    c.label(1),
                    d.label(1),
                )),
                2 => Some(multiplicity4_su3(a, b, c, d)?),
                3 => Some(multiplicity4_su4(a, b, c, d)?),
                _ => None,
            };
            if let Some(x) = explicit {
                out.push(("explicit", x));
            }
        }
        if self.diagrams {
            out.push((
                "diagrams",
                diagram_count_n(&CouplingQuery::new(ws.to_vec())?)?,
            ));
        }
        Ok(out)
    }
}

#[derive(Default)]
struct Tally {
    checked: u64,
    nonzero: u64,
    mismatches: u64,
    first: Option<(usize, Mismatch)>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.nonzero += other.nonzero;
        self.mismatches += other.mismatches;
        self.first = match (self.first, other.first) {
            (Some(a), Some(b)) => Some(if a.0 <= b.0 { a } else { b }),
            (a, b) => a.or(b),
        };
        self
    }
}

/// Compares every evaluation path on each tuple of the label box (or on a
/// seeded random sample of it).
pub fn verify(cfg: &VerifyConfig) -> Result<VerifyReport> {
    let start = Instant::now();
    if cfg.points < 3 {
        return Err(Error::TooFewWeights {
            needed: 3,
            found: cfg.points,
        });
    }
    if cfg.diagrams && (cfg.rank > 2 || cfg.points > 6) {
        return Err(Error::ScaleLimit(
            "diagram counting needs rank <= 2 and at most six points",
        ));
    }
    let grid = Grid::new(cfg.rank, cfg.max_label)?;
    let table = if cfg.points <= 4 {
        Some(PairTable::new(grid.clone())?)
    } else {
        None
    };
    let checker = Checker {
        ev: Evaluator::new(cfg.rank)?,
        table: table.as_ref(),
        diagrams: cfg.diagrams,
    };
    let total = grid.tuples(cfg.points);
    let ids: Vec<usize> = match cfg.samples {
        Some(n) => {
            let mut rng = StdRng::seed_from_u64(cfg.seed);
            (0..n).map(|_| rng.gen_range(0..total)).collect()
        }
        None => (0..total).collect(),
    };
    let tally = ids
        .par_iter()
        .map_init(SingletCache::new, |cache, &k| -> Result<Tally> {
            let ws = grid.tuple(cfg.points, k);
            let values = checker.values(&ws, cache)?;
            let agree = values.iter().all(|v| v.1 == values[0].1);
            Ok(Tally {
                checked: 1,
                nonzero: (values[0].1 > 0) as u64,
                mismatches: (!agree) as u64,
                first: (!agree).then_some((
                    k,
                    Mismatch {
                        weights: ws,
                        values,
                    },
                )),
            })
        })
        .try_reduce(Tally::default, |a, b| Ok(a.merge(b)))?;
    Ok(VerifyReport {
        checked: tally.checked,
        nonzero: tally.nonzero,
        mismatches: tally.mismatches,
        first: tally.first.map(|f| f.1),
        paths: checker.paths(cfg.points),
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweeps_agree() {
        for (r, m, n) in [(1, 3, 4), (2, 1, 3), (2, 1, 4), (1, 2, 5)] {
            let rep = verify(&VerifyConfig::new(r, m, n)).unwrap();
            assert_eq!(rep.mismatches, 0, "{:?}", rep.first);
            assert_eq!(rep.checked, ((m + 1) as u64).pow((r * n) as u32));
            assert!(rep.nonzero > 0);
        }
    }

    #[test]
    fn diagrams_and_samples() {
        let mut cfg = VerifyConfig::new(1, 2, 5);
        cfg.diagrams = true;
        cfg.samples = Some(40);
        cfg.seed = 7;
        let rep = verify(&cfg).unwrap();
        assert_eq!(rep.checked, 40);
        assert_eq!(rep.mismatches, 0);
        assert!(rep.paths.contains(&"diagrams"));
        cfg.rank = 3;
        assert!(verify(&cfg).is_err());
    }
}
