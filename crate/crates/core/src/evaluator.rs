//! Per-rank evaluation context holding the symbolic bound systems.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::bounds::BoundSystem;
use crate::diagram::CoefficientVector4;
use crate::error::{Error, Result};
use crate::four_point::{
    four_point_system, four_point_values, multiplicity4_su2, ChannelDecomposition, ChannelTerm,
};
use crate::three_point::{three_point_system, three_point_values};
use crate::triangle::CoefficientVector3;
use crate::weights::{check_rank, product_candidates, Weight};

/// Bound systems of one rank, built once and reused across queries.
///
/// ```
/// use bzpoly_core::{Evaluator, Weight};
///
/// let ev = Evaluator::new(2).unwrap();
/// let f = Weight::new(vec![1, 0]).unwrap();
/// let fb = f.conjugate();
/// assert_eq!(ev.multiplicity4(&f, &fb, &f, &fb).unwrap(), 2);
/// ```
pub struct Evaluator {
    rank: usize,
    three: BoundSystem,
    four: BoundSystem,
}

impl Evaluator {
    pub fn new(rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidRank(0));
        }
        Ok(Evaluator {
            rank,
            three: three_point_system(rank),
            four: four_point_system(rank),
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn three_point_system(&self) -> &BoundSystem {
        &self.three
    }

    pub fn four_point_system(&self) -> &BoundSystem {
        &self.four
    }

    fn check(&self, ws: &[&Weight]) -> Result<()> {
        ws.iter().try_for_each(|w| check_rank(self.rank, w))
    }

    /// Three-point count on raw labels; zero outside the root lattice.
    pub(crate) fn count3(&self, lam: &[i64], mu: &[i64], nu: &[i64]) -> Result<u64> {
        match three_point_values(lam, mu, nu) {
            Some(vals) => self.three.bind(&vals).count(),
            None => Ok(0),
        }
    }

    /// `T_{lambda,mu,nu}`.
    pub fn multiplicity3(&self, lambda: &Weight, mu: &Weight, nu: &Weight) -> Result<u64> {
        self.check(&[lambda, mu, nu])?;
        self.count3(lambda.labels(), mu.labels(), nu.labels())
    }

    /// Coefficient vectors of all true triangles, in summation order.
    pub fn enumerate3(
        &self,
        lambda: &Weight,
        mu: &Weight,
        nu: &Weight,
    ) -> Result<Vec<CoefficientVector3>> {
        self.check(&[lambda, mu, nu])?;
        let Some(vals) = three_point_values(lambda.labels(), mu.labels(), nu.labels()) else {
            return Ok(Vec::new());
        };
        self.three
            .bind(&vals)
            .points()
            .into_iter()
            .map(|p| CoefficientVector3::from_values(self.rank, p))
            .collect()
    }

    /// `T_{lambda,mu,nu,sigma}` from the four-point nested sum.
    pub fn multiplicity4(
        &self,
        lambda: &Weight,
        mu: &Weight,
        nu: &Weight,
        sigma: &Weight,
    ) -> Result<u64> {
        self.check(&[lambda, mu, nu, sigma])?;
        if self.rank == 1 {
            return Ok(multiplicity4_su2(
                lambda.label(1),
                mu.label(1),
                nu.label(1),
                sigma.label(1),
            ));
        }
        self.count4(lambda.labels(), mu.labels(), nu.labels(), sigma.labels())
    }

    /// The general four-point nested sum, at every rank including one.
    pub fn count4(&self, lam: &[i64], mu: &[i64], nu: &[i64], sigma: &[i64]) -> Result<u64> {
        match four_point_values(lam, mu, nu, sigma) {
            Some(vals) => self.four.bind(&vals).count(),
            None => Ok(0),
        }
    }

    /// Coefficient vectors of all true four-point diagrams, in summation order.
    pub fn enumerate4(
        &self,
        lambda: &Weight,
        mu: &Weight,
        nu: &Weight,
        sigma: &Weight,
    ) -> Result<Vec<CoefficientVector4>> {
        self.check(&[lambda, mu, nu, sigma])?;
        let Some(vals) =
            four_point_values(lambda.labels(), mu.labels(), nu.labels(), sigma.labels())
        else {
            return Ok(Vec::new());
        };
        self.four
            .bind(&vals)
            .points()
            .into_iter()
            .map(|p| CoefficientVector4::from_summation_order(self.rank, &p))
            .collect()
    }

    /// `sum_rho T_{lambda,mu,rho} T_{rho^+,nu,sigma}` with its non-zero terms.
    pub fn channel_decompose4(
        &self,
        lambda: &Weight,
        mu: &Weight,
        nu: &Weight,
        sigma: &Weight,
    ) -> Result<ChannelDecomposition> {
        self.check(&[lambda, mu, nu, sigma])?;
        let mut total = 0u64;
        let mut terms = Vec::new();
        for kappa in product_candidates(lambda, mu)? {
            let rho = kappa.conjugate();
            let left = self.count3(lambda.labels(), mu.labels(), rho.labels())?;
            if left == 0 {
                continue;
            }
            let right = self.count3(kappa.labels(), nu.labels(), sigma.labels())?;
            if right == 0 {
                continue;
            }
            let prod = left.checked_mul(right).ok_or(Error::Overflow)?;
            total = total.checked_add(prod).ok_or(Error::Overflow)?;
            terms.push(ChannelTerm { rho, left, right });
        }
        Ok(ChannelDecomposition { total, terms })
    }

    /// Multiplicities of the constituents of `acc (x) w`, where `acc` is a
    /// formal sum of weights.
    pub(crate) fn fold_step(
        &self,
        acc: &BTreeMap<Weight, u64>,
        w: &Weight,
    ) -> Result<BTreeMap<Weight, u64>> {
        let mut out: BTreeMap<Weight, u64> = BTreeMap::new();
        for (kappa, &m) in acc {
            for next in product_candidates(kappa, w)? {
                let c = self.count3(kappa.labels(), w.labels(), &conj(next.labels()))?;
                if c == 0 {
                    continue;
                }
                let add = m.checked_mul(c).ok_or(Error::Overflow)?;
                let slot = out.entry(next).or_insert(0);
                *slot = slot.checked_add(add).ok_or(Error::Overflow)?;
            }
        }
        Ok(out)
    }
}

fn conj(v: &[i64]) -> Vec<i64> {
    v.iter().rev().copied().collect()
}
