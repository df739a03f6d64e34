//! Timings of the nested sums, direct lattice search and the oracle over
//! scaling families.

use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;

use bzpoly_core::n_point::multiplicity_n_with;
use bzpoly_core::search::StringSearch;
use bzpoly_core::{singlet_count, Evaluator, Result, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// su(3) three-point couplings `(k,k) (x) (k,k) (x) (k,k)`.
    Default,
    /// su(3) four-point couplings `(k,k)^4`.
    Su3Diagonal,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Default => "default",
            Family::Su3Diagonal => "su3-diagonal",
        }
    }

    /// Member `k` of the family.
    pub fn weights(self, k: i64) -> Vec<Weight> {
        let w = Weight::new(vec![k, k]).expect("non-negative labels");
        let n = match self {
            Family::Default => 3,
            Family::Su3Diagonal => 4,
        };
        vec![w; n]
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Row {
    pub family: &'static str,
    pub k: i64,
    pub points: usize,
    /// Total label sum.
    pub size: i64,
    pub multiplicity: u64,
    pub nested_us: f64,
    pub box_us: f64,
    pub oracle_us: f64,
    /// All three paths returned the same count.
    pub agree: bool,
}

fn timed<T>(f: impl FnOnce() -> Result<T>) -> Result<(T, f64)> {
    let t = Instant::now();
    let v = f()?;
    Ok((v, t.elapsed().as_secs_f64() * 1e6))
}

pub fn run(family: Family, kmax: i64) -> Result<Vec<Row>> {
    let ev = Evaluator::new(2)?;
    (1..=kmax)
        .map(|k| {
            let ws = family.weights(k);
            let (nested, nested_us) = timed(|| multiplicity_n_with(&ev, &ws))?;
            let (boxed, box_us) = timed(|| StringSearch::new(&ws)?.count())?;
            let (oracle, oracle_us) = timed(|| singlet_count(&ws))?;
            Ok(Row {
                family: family.name(),
                k,
                points: ws.len(),
                size: ws.iter().map(Weight::level).sum(),
                multiplicity: nested,
                nested_us,
                box_us,
                oracle_us,
                agree: nested == boxed && nested == oracle,
            })
        })
        .collect()
}

pub fn to_csv(rows: &[Row]) -> String {
    let mut out =
        String::from("family,k,points,size,multiplicity,nested_us,box_us,oracle_us,agree\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{:.1},{:.1},{:.1},{}",
            r.family,
            r.k,
            r.points,
            r.size,
            r.multiplicity,
            r.nested_us,
            r.box_us,
            r.oracle_us,
            r.agree
        );
    }
    out
}
