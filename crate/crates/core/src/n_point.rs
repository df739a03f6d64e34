//! `N`-point multiplicities along string-like channels.
//!
//! The string channel couples `lambda^(1) (x) lambda^(2)` to an intermediate
//! weight, that weight with `lambda^(3)` to the next one, and so on. The
//! multiplicity is the sum over all intermediate weights of the product of
//! the three-point multiplicities, computed here by folding a weighted set
//! of intermediate weights along the string.
//!
//! [`diagram_count_n`] counts true glued diagrams directly, lattice point by
//! lattice point, and serves as an independent check at small rank.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::evaluator::Evaluator;
use crate::search::StringSearch;
use crate::weights::{common_rank, root_lattice_check, Weight};

/// `N >= 3` weights of one rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CouplingQuery {
    rank: usize,
    weights: Vec<Weight>,
}

impl CouplingQuery {
    pub fn new(weights: Vec<Weight>) -> Result<Self> {
        if weights.len() < 3 {
            return Err(Error::TooFewWeights {
                needed: 3,
                found: weights.len(),
            });
        }
        let rank = common_rank(&weights)?;
        Ok(CouplingQuery { rank, weights })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn points(&self) -> usize {
        self.weights.len()
    }
}

/// Left-to-right fold: intermediate weights of `lambda^(1) (x) .. (x)
/// lambda^(N-2)` with multiplicities, closed off by `T_{kappa,
/// lambda^(N-1), lambda^(N)}`.
pub fn fold_left(ev: &Evaluator, weights: &[Weight]) -> Result<u64> {
    let n = weights.len();
    if n < 3 {
        return Err(Error::TooFewWeights {
            needed: 3,
            found: n,
        });
    }
    if root_lattice_check(weights)?.is_none() {
        return Ok(0);
    }
    let mut acc: BTreeMap<Weight, u64> = BTreeMap::new();
    acc.insert(weights[0].clone(), 1);
    for w in &weights[1..n - 2] {
        acc = ev.fold_step(&acc, w)?;
    }
    let (a, b) = (&weights[n - 2], &weights[n - 1]);
    let mut total = 0u64;
    for (kappa, m) in acc {
        let c = ev.count3(kappa.labels(), a.labels(), b.labels())?;
        total = m
            .checked_mul(c)
            .and_then(|x| total.checked_add(x))
            .ok_or(Error::Overflow)?;
    }
    Ok(total)
}

/// The same fold run from the last weight towards the first.
pub fn fold_right(ev: &Evaluator, weights: &[Weight]) -> Result<u64> {
    let reversed: Vec<Weight> = weights.iter().rev().cloned().collect();
    fold_left(ev, &reversed)
}

/// `N`-point multiplicity with a prepared evaluator.
pub fn multiplicity_n_with(ev: &Evaluator, weights: &[Weight]) -> Result<u64> {
    match weights {
        [a, b, c] => ev.multiplicity3(a, b, c),
        [a, b, c, d] => ev.multiplicity4(a, b, c, d),
        _ => fold_left(ev, weights),
    }
}

/// The multiplicity of the singlet in `lambda^(1) (x) .. (x) lambda^(N)`.
pub fn multiplicity_n(q: &CouplingQuery) -> Result<u64> {
    let ev = Evaluator::new(q.rank)?;
    multiplicity_n_with(&ev, &q.weights)
}

/// Number of true string diagrams, counted directly over a coefficient
/// box. Limited to rank at most two and at most six weights.
pub fn diagram_count_n(q: &CouplingQuery) -> Result<u64> {
    if q.rank > 2 {
        return Err(Error::ScaleLimit("diagram counting needs rank <= 2"));
    }
    if q.points() > 6 {
        return Err(Error::ScaleLimit(
            "diagram counting needs at most six weights",
        ));
    }
    if root_lattice_check(&q.weights)?.is_none() {
        return Ok(0);
    }
    StringSearch::new(&q.weights)?.count()
}
