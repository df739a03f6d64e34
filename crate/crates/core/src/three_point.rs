//! Three-point multiplicities `T_{lambda,mu,nu}`.
//!
//! True BZ triangles for `lambda (x) mu (x) nu` are the lattice points
//! `T_0 + sum v_{i,j} V_{i,j}` with all entries non-negative. Their number
//! is a nested sum over the `v_{i,j}` taken anti-diagonal by anti-diagonal
//! (see [`hexagon_order`](crate::triangle::hexagon_order)), each variable
//! bounded by affine expressions in the labels, the coupling parameters and
//! the variables already summed.

use alloc::vec::Vec;

use crate::bounds::{Affine, BoundSystem, Param, ParamValues, SystemBuilder, Var};
use crate::error::Result;
use crate::evaluator::Evaluator;
use crate::triangle::{hexagon_order, hexagon_slot, CoefficientVector3};
use crate::weights::{params_from_labels, Weight};

/// The three-point bound system of rank `r`, variables in
/// [`hexagon_order`](crate::triangle::hexagon_order).
pub fn three_point_system(rank: usize) -> BoundSystem {
    let order = hexagon_order(rank);
    let names = order.iter().map(|&(i, j)| Var::V(i, j)).collect();
    let mut b = SystemBuilder::new(rank, names);
    if rank == 1 {
        b.condition(Affine::param(Param::SmallN(1)));
        b.condition(Affine::param(Param::BigN(1)));
        b.condition(Affine::param(Param::BigNPrime(1)));
        return b.build();
    }
    let r = rank as i64;
    let v = |i: i64, j: i64| -> Option<Affine> {
        if i == 0 || j == 0 {
            return Some(Affine::zero());
        }
        if i < 0 || j < 0 || i + j > r {
            return None;
        }
        Some(Affine::var(hexagon_slot(i as usize, j as usize)))
    };
    let p = |f: fn(usize) -> Param, k: i64| -> Option<Affine> {
        (1..=r).contains(&k).then(|| Affine::param(f(k as usize)))
    };
    let lam = |k| p(Param::Lambda, k);
    let mu = |k| p(Param::Mu, k);
    let n = |k| p(Param::SmallN, k);
    let bn = |k| p(Param::BigN, k);
    let bnp = |k| p(Param::BigNPrime, k);

    for (slot, &(iu, ju)) in order.iter().enumerate() {
        let (i, j) = (iu as i64, ju as i64);
        let mut lo: Vec<Option<Affine>> = Vec::new();
        let mut hi: Vec<Option<Affine>> = Vec::new();
        if i == 1 && j == r - 1 {
            lo.push((|| Some(-bn(1)?))());
            lo.push(v(1, r - 2));
            lo.push((|| Some(-bnp(2)? + v(2, r - 2)?))());
            lo.push((|| {
                Some(-mu(r - 2)? + v(1, r - 2)? - v(2, r - 3)? + v(2, r - 2)?)
            })());
            hi.push(n(1));
            hi.push((|| Some(mu(r - 1)? + v(1, r - 2)?))());
            hi.push((|| Some(lam(r)? - v(1, r - 2)? + v(2, r - 2)?))());
            hi.push((|| Some(n(2)? + v(1, r - 2)? - v(2, r - 2)?))());
            hi.push(bnp(1));
            hi.push((|| Some(bn(2)? + v(2, r - 2)?))());
        }
        if i + j == r && (2..=r - 2).contains(&i) {
            let l = i;
            lo.push((|| {
                Some(v(l - 1, r - l)? - v(l - 1, r - l - 1)? + v(l, r - l - 1)?)
            })());
            lo.push((|| Some(-bnp(l + 1)? + v(l + 1, r - l - 1)?))());
            lo.push((|| {
                Some(
                    -mu(r - l - 1)? + v(l + 1, r - l - 1)? - v(l + 1, r - l - 2)?
                        + v(l, r - l - 1)?,
                )
            })());
            hi.push((|| {
                Some(lam(r - l + 1)? - v(l, r - l - 1)? + v(l - 1, r - l)? + v(l + 1, r - l - 1)?)
            })());
            hi.push((|| {
                Some(n(l + 1)? + v(l, r - l - 1)? - v(l + 1, r - l - 1)?)
            })());
            hi.push((|| Some(bn(l + 1)? + v(l + 1, r - l - 1)?))());
        }
        if i == r - 1 && j == 1 {
            lo.push(v(r - 2, 1));
            lo.push((|| Some(-bnp(r)?))());
            hi.push((|| Some(lam(2)? + v(r - 2, 1)?))());
            hi.push(n(r));
            hi.push(bn(r));
        }
        if i == 1 && (2..=r - 2).contains(&j) {
            lo.push(v(1, j - 1));
            lo.push((|| {
                Some(-mu(j - 1)? + v(1, j - 1)? + v(2, j - 1)? - v(2, j - 2)?)
            })());
            hi.push((|| Some(mu(j)? + v(1, j - 1)?))());
            hi.push((|| Some(lam(r)? - v(1, j - 1)? + v(2, j - 1)?))());
        }
        if i >= 2 && j >= 2 && i + j < r {
            lo.push((|| Some(v(i, j - 1)? + v(i - 1, j)? - v(i - 1, j - 1)?))());
            lo.push((|| {
                Some(-mu(j - 1)? + v(i, j - 1)? + v(i + 1, j - 1)? - v(i + 1, j - 2)?)
            })());
            hi.push((|| {
                Some(lam(r - i + 1)? - v(i, j - 1)? + v(i + 1, j - 1)? + v(i - 1, j)?)
            })());
        }
        if j == 1 && (2..=r - 2).contains(&i) {
            lo.push(v(i - 1, 1));
            hi.push((|| Some(lam(r - i + 1)? + v(i - 1, 1)?))());
        }
        if i == 1 && j == 1 {
            lo.push(Some(Affine::zero()));
            hi.push(mu(1));
            hi.push(lam(r));
        }
        for c in lo {
            b.lower(slot, c);
        }
        for c in hi {
            b.upper(slot, c);
        }
    }
    b.build()
}

/// Parameter values for `lambda (x) mu (x) nu`, or `None` outside the root
/// lattice.
pub fn three_point_values(lam: &[i64], mu: &[i64], nu: &[i64]) -> Option<ParamValues> {
    let p = params_from_labels(lam, mu, nu)?;
    let mut vals = ParamValues::new(lam.len());
    vals.set_all(Param::Lambda, lam);
    vals.set_all(Param::Mu, mu);
    vals.set_all(Param::Nu, nu);
    vals.set_all(Param::SmallN, &p.n);
    vals.set_all(Param::BigN, &p.big_n);
    vals.set_all(Param::BigNPrime, &p.big_n_prime);
    Some(vals)
}

/// `T_{lambda,mu,nu}`: the number of singlets in `lambda (x) mu (x) nu`.
pub fn multiplicity3(lambda: &Weight, mu: &Weight, nu: &Weight) -> Result<u64> {
    Evaluator::new(lambda.rank())?.multiplicity3(lambda, mu, nu)
}

/// Coefficient vectors of all true triangles, in summation order.
pub fn enumerate3(lambda: &Weight, mu: &Weight, nu: &Weight) -> Result<Vec<CoefficientVector3>> {
    Evaluator::new(lambda.rank())?.enumerate3(lambda, mu, nu)
}

/// `T_{lambda,mu}^nu`, the multiplicity of `nu` in `lambda (x) mu`.
pub fn tensor_coefficient(lambda: &Weight, mu: &Weight, nu: &Weight) -> Result<u64> {
    multiplicity3(lambda, mu, &nu.conjugate())
}
