//! Four-point multiplicities `T_{lambda,mu,nu,sigma}`.
//!
//! True four-point diagrams are the lattice points
//! `D_0 + sum v^(1) V^(1) + sum v^(2) V^(2) - sum g_i G_i` with all entries
//! non-negative. The nested sum runs over `v^(1)` in hexagon order, then
//! `g_r .. g_1`, then `v^(2)` in reverse hexagon order; the parameters are
//! those of `lambda (x) mu (x) (nu + sigma)`.
//!
//! Rank one uses the closed segment formula; ranks two and three also have
//! hand-expanded sums ([`multiplicity4_su3`], [`multiplicity4_su4`]) that
//! serve as cross-checks of the general system.

use alloc::string::String;
use alloc::vec::Vec;

use crate::bounds::{Affine, BoundSystem, Param, ParamValues, SystemBuilder, Var};
use crate::diagram::CoefficientVector4;
use crate::error::{Error, Result};
use crate::evaluator::Evaluator;
use crate::triangle::{hexagon_count, hexagon_order, hexagon_slot};
use crate::weights::{check_rank, params_from_labels, DualLabels, Weight};

/// The four-point bound system of rank `r`.
pub fn four_point_system(rank: usize) -> BoundSystem {
    let h = hexagon_count(rank);
    let order = hexagon_order(rank);
    let mut names: Vec<Var> = order.iter().map(|&(i, j)| Var::V1(i, j)).collect();
    names.extend((1..=rank).rev().map(Var::G));
    names.extend(order.iter().rev().map(|&(i, j)| Var::V2(i, j)));
    let mut b = SystemBuilder::new(rank, names);
    let r = rank as i64;
    let p = |f: fn(usize) -> Param, k: i64| -> Option<Affine> {
        (1..=r).contains(&k).then(|| Affine::param(f(k as usize)))
    };
    let lam = |k| p(Param::Lambda, k);
    let mu = |k| p(Param::Mu, k);
    let nu = |k| p(Param::Nu, k);
    let sg = |k| p(Param::Sigma, k);
    let n = |k| p(Param::SmallN, k);
    let bn = |k| p(Param::BigN, k);
    let bnp = |k| p(Param::BigNPrime, k);
    let g_slot = |i: i64| h + (rank - i as usize);
    let g = |i: i64| -> Option<Affine> {
        if i == r + 1 {
            Some(Affine::zero())
        } else if (1..=r).contains(&i) {
            Some(Affine::var(g_slot(i)))
        } else {
            None
        }
    };
    let v1 = |i: i64, j: i64| -> Option<Affine> {
        if i == 0 || j == 0 {
            return Some(Affine::zero());
        }
        if i < 0 || j < 0 || i + j > r {
            return None;
        }
        Some(Affine::var(hexagon_slot(i as usize, j as usize)))
    };
    let v2_slot = |i: i64, j: i64| h + rank + (h - 1 - hexagon_slot(i as usize, j as usize));
    let v2 = |i: i64, j: i64| -> Option<Affine> {
        if i == 0 || j == 0 {
            return Some(Affine::zero());
        }
        if i < 0 || j < 0 || i + j > r + 1 {
            return None;
        }
        if i + j == r + 1 {
            return g(j);
        }
        Some(Affine::var(v2_slot(i, j)))
    };

    if rank == 1 {
        let s = g_slot(1);
        b.lower(s, Some(Affine::zero()));
        b.lower(s, (|| Some(-n(1)?))());
        b.upper(s, bn(1));
        b.upper(s, bnp(1));
        b.upper(s, nu(1));
        b.upper(s, sg(1));
        return b.build();
    }

    // first triangle
    for &(iu, ju) in &order {
        let (i, j) = (iu as i64, ju as i64);
        let slot = hexagon_slot(iu, ju);
        let mut lo: Vec<Option<Affine>> = Vec::new();
        let mut hi: Vec<Option<Affine>> = Vec::new();
        if i == 1 && (2..=r - 1).contains(&j) {
            lo.push(v1(1, j - 1));
            lo.push((|| {
                Some(-mu(j - 1)? + v1(1, j - 1)? + v1(2, j - 1)? - v1(2, j - 2)?)
            })());
            hi.push((|| Some(mu(j)? + v1(1, j - 1)?))());
            hi.push((|| Some(lam(r)? - v1(1, j - 1)? + v1(2, j - 1)?))());
        }
        if i >= 2 && j >= 2 && i + j <= r {
            lo.push((|| Some(v1(i, j - 1)? + v1(i - 1, j)? - v1(i - 1, j - 1)?))());
            lo.push((|| {
                Some(-mu(j - 1)? + v1(i, j - 1)? + v1(i + 1, j - 1)? - v1(i + 1, j - 2)?)
            })());
            hi.push((|| {
                Some(lam(r - i + 1)? - v1(i, j - 1)? + v1(i + 1, j - 1)? + v1(i - 1, j)?)
            })());
        }
        if j == 1 && (2..=r - 1).contains(&i) {
            lo.push(v1(i - 1, 1));
            hi.push((|| Some(lam(r - i + 1)? + v1(i - 1, 1)?))());
        }
        if i == 1 && j == 1 {
            lo.push(Some(Affine::zero()));
            hi.push(mu(1));
            hi.push(lam(r));
        }
        lo.into_iter().for_each(|c| b.lower(slot, c));
        hi.into_iter().for_each(|c| b.upper(slot, c));
    }

    // gluing coefficients
    for i in (1..=r).rev() {
        let slot = g_slot(i);
        let mut lo: Vec<Option<Affine>> = Vec::new();
        let mut hi: Vec<Option<Affine>> = Vec::new();
        if i == 1 {
            lo.push((|| Some(-n(1)? + v1(1, r - 1)?))());
            lo.push((|| Some(-bn(2)? + v1(1, r - 1)? - v1(2, r - 2)? + g(2)?))());
            hi.push((|| Some(bn(1)? + v1(1, r - 1)?))());
            hi.push((|| Some(bnp(1)? - v1(1, r - 1)? + g(2)?))());
        }
        if (2..=r - 1).contains(&i) {
            lo.push((|| {
                Some(-n(i)? + v1(i - 1, r - i + 1)? + v1(i, r - i)? - v1(i - 1, r - i)?)
            })());
            lo.push((|| {
                Some(-bn(i + 1)? + v1(i, r - i)? - v1(i + 1, r - i - 1)? + g(i + 1)?)
            })());
            hi.push((|| {
                Some(bnp(i)? + v1(i - 1, r - i + 1)? - v1(i, r - i)? + g(i + 1)?)
            })());
        }
        if i == r {
            lo.push((|| Some(-n(r)? + v1(r - 1, 1)?))());
            hi.push((|| Some(bnp(r)? + v1(r - 1, 1)?))());
        }
        lo.into_iter().for_each(|c| b.lower(slot, c));
        hi.into_iter().for_each(|c| b.upper(slot, c));
    }

    // second triangle
    for &(iu, ju) in order.iter().rev() {
        let (i, j) = (iu as i64, ju as i64);
        let slot = v2_slot(i, j);
        let mut lo: Vec<Option<Affine>> = Vec::new();
        let mut hi: Vec<Option<Affine>> = Vec::new();
        if i == 1 && j == 1 {
            lo.push(Some(Affine::zero()));
            lo.push((|| Some(-sg(2)? + v2(1, 2)?))());
            lo.push((|| Some(v2(1, 2)? - v2(2, 2)? + v2(2, 1)?))());
            lo.push((|| Some(-nu(r - 1)? + v2(2, 1)?))());
            hi.push(sg(1));
            hi.push(v2(1, 2));
            hi.push((|| Some(nu(r)? - v2(1, 2)? + v2(2, 1)?))());
            hi.push((|| Some(sg(1)? + v2(1, 2)? - v2(2, 1)?))());
            hi.push(v2(2, 1));
            hi.push(nu(r));
        }
        if j == 1 && (2..=r - 2).contains(&i) {
            lo.push((|| {
                Some(-sg(2)? + v2(i - 1, 2)? - v2(i - 1, 3)? + v2(i, 2)?)
            })());
            lo.push((|| Some(v2(i, 2)? - v2(i + 1, 2)? + v2(i + 1, 1)?))());
            lo.push((|| Some(-nu(r - i)? + v2(i + 1, 1)?))());
            hi.push((|| {
                Some(nu(r - i + 1)? + v2(i - 1, 2)? - v2(i, 2)? + v2(i + 1, 1)?)
            })());
            hi.push((|| Some(sg(1)? + v2(i, 2)? - v2(i + 1, 1)?))());
            hi.push(v2(i + 1, 1));
        }
        if i >= 2 && j >= 2 && i + j < r {
            lo.push((|| Some(v2(i + 1, j)? + v2(i, j + 1)? - v2(i + 1, j + 1)?))());
            lo.push((|| {
                Some(-sg(j + 1)? + v2(i - 1, j + 1)? - v2(i - 1, j + 2)? + v2(i, j + 1)?)
            })());
            hi.push((|| {
                Some(nu(r - i + 1)? + v2(i - 1, j + 1)? - v2(i, j + 1)? + v2(i + 1, j)?)
            })());
        }
        if i == 1 && (2..=r - 2).contains(&j) {
            lo.push((|| Some(-sg(j + 1)? + v2(1, j + 1)?))());
            lo.push((|| Some(v2(1, j + 1)? + v2(2, j)? - v2(2, j + 1)?))());
            hi.push(v2(1, j + 1));
            hi.push((|| Some(nu(r)? - v2(1, j + 1)? + v2(2, j)?))());
        }
        if i == r - 1 && j == 1 {
            lo.push((|| Some(-nu(1)? + g(1)?))());
            lo.push((|| Some(-sg(2)? + v2(r - 2, 2)? + g(2)? - g(3)?))());
            hi.push((|| Some(sg(1)? - g(1)? + g(2)?))());
            hi.push((|| Some(nu(2)? + v2(r - 2, 2)? + g(1)? - g(2)?))());
            hi.push(g(1));
        }
        if i + j == r && (2..=r - 2).contains(&j) {
            let l = j;
            lo.push((|| {
                Some(-sg(l + 1)? + v2(r - l - 1, l + 1)? + g(l + 1)? - g(l + 2)?)
            })());
            hi.push((|| {
                Some(nu(l + 1)? + v2(r - l - 1, l + 1)? + g(l)? - g(l + 1)?)
            })());
        }
        if i == 1 && j == r - 1 {
            lo.push((|| Some(-sg(r)? + g(r)?))());
            hi.push(g(r));
            hi.push((|| Some(nu(r)? + g(r - 1)? - g(r)?))());
        }
        lo.into_iter().for_each(|c| b.lower(slot, c));
        hi.into_iter().for_each(|c| b.upper(slot, c));
    }
    b.build()
}

/// Parameter values for `lambda, mu, nu, sigma`, or `None` outside the root
/// lattice.
pub fn four_point_values(
    lam: &[i64],
    mu: &[i64],
    nu: &[i64],
    sigma: &[i64],
) -> Option<ParamValues> {
    let third: Vec<i64> = nu.iter().zip(sigma).map(|(a, b)| a + b).collect();
    let p = params_from_labels(lam, mu, &third)?;
    let mut vals = ParamValues::new(lam.len());
    vals.set_all(Param::Lambda, lam);
    vals.set_all(Param::Mu, mu);
    vals.set_all(Param::Nu, nu);
    vals.set_all(Param::Sigma, sigma);
    vals.set_all(Param::SmallN, &p.n);
    vals.set_all(Param::BigN, &p.big_n);
    vals.set_all(Param::BigNPrime, &p.big_n_prime);
    Some(vals)
}

/// `T_{lambda,mu,nu,sigma}`; rank one uses [`multiplicity4_su2`].
pub fn multiplicity4(lambda: &Weight, mu: &Weight, nu: &Weight, sigma: &Weight) -> Result<u64> {
    Evaluator::new(lambda.rank())?.multiplicity4(lambda, mu, nu, sigma)
}

/// Coefficient vectors of all true four-point diagrams.
pub fn enumerate4(
    lambda: &Weight,
    mu: &Weight,
    nu: &Weight,
    sigma: &Weight,
) -> Result<Vec<CoefficientVector4>> {
    Evaluator::new(lambda.rank())?.enumerate4(lambda, mu, nu, sigma)
}

/// One intermediate channel `rho` with `T_{lambda,mu,rho} = left` and
/// `T_{rho^+,nu,sigma} = right`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChannelTerm {
    pub rho: Weight,
    pub left: u64,
    pub right: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChannelDecomposition {
    pub total: u64,
    /// Non-zero terms, ordered by `rho^+`.
    pub terms: Vec<ChannelTerm>,
}

/// `sum_rho T_{lambda,mu,rho} T_{rho^+,nu,sigma}`.
pub fn channel_decompose4(
    lambda: &Weight,
    mu: &Weight,
    nu: &Weight,
    sigma: &Weight,
) -> Result<ChannelDecomposition> {
    Evaluator::new(lambda.rank())?.channel_decompose4(lambda, mu, nu, sigma)
}

/// Rank-one four-point multiplicity: the length of the segment
/// `max{0, S-lambda-mu} <= g <= min{S-lambda, S-mu, nu, sigma}`, where
/// `S` is half the label sum.
pub fn multiplicity4_su2(lambda: i64, mu: i64, nu: i64, sigma: i64) -> u64 {
    let sum = lambda + mu + nu + sigma;
    if sum % 2 != 0 {
        return 0;
    }
    let s = sum / 2;
    let lo = 0.max(s - lambda - mu);
    let hi = (s - lambda).min(s - mu).min(nu).min(sigma);
    (hi - lo + 1).max(0) as u64
}

fn rank_is(expected: usize, ws: [&Weight; 4]) -> Result<()> {
    if ws[0].rank() != expected {
        return Err(Error::UnsupportedRank { rank: ws[0].rank() });
    }
    ws.iter().try_for_each(|w| check_rank(expected, w))
}

/// Rank-two four-point multiplicity, written out as four nested sums.
pub fn multiplicity4_su3(lambda: &Weight, mu: &Weight, nu: &Weight, sigma: &Weight) -> Result<u64> {
    rank_is(2, [lambda, mu, nu, sigma])?;
    let d = |w: &Weight| DualLabels::of_labels(w.labels());
    let (l, m, n, s) = (d(lambda), d(mu), d(nu), d(sigma));
    let (l1, l2) = (l.numerator(1), l.numerator(2));
    let (m1, m2) = (m.numerator(1), m.numerator(2));
    let (u1, u2) = (n.numerator(1), n.numerator(2));
    let (s1, s2) = (s.numerator(1), s.numerator(2));
    if (l1 + m1 + u1 + s1) % 3 != 0 || (l2 + m2 + u2 + s2) % 3 != 0 {
        return Ok(0);
    }
    let third = |x: i64| x / 3;
    let n1 = third(l2 + m2 - u1 - s1);
    let n2 = third(l1 + m1 - u2 - s2);
    let bn1 = third(-l2 - m1 + m2 + u1 + s1);
    let bn2 = third(-l1 + l2 + m1 - u1 + u2 - s1 + s2);
    let bnp1 = third(l2 + m1 - m2 + u1 - u2 + s1 - s2);
    let bnp2 = third(l1 - l2 - m1 + u2 + s2);
    let (la2, mu1) = (lambda.label(2), mu.label(1));
    let (nu1, nu2) = (nu.label(1), nu.label(2));
    let (sg1, sg2) = (sigma.label(1), sigma.label(2));
    let mut total = 0u64;
    for v in 0..=la2.min(mu1) {
        for g2 in (-n2 + v)..=(bnp2 + v) {
            let g1_lo = (-bn2 + v + g2).max(-n1 + v);
            let g1_hi = (bn1 + v).min(bnp1 + g2 - v);
            for g1 in g1_lo..=g1_hi {
                let lo = 0.max(-sg2 + g2).max(-nu1 + g1);
                let hi = nu2
                    .min(sg1)
                    .min(g1)
                    .min(g2)
                    .min(nu2 + g1 - g2)
                    .min(sg1 - g1 + g2);
                if hi >= lo {
                    total += (hi - lo + 1) as u64;
                }
            }
        }
    }
    Ok(total)
}

/// Rank-three four-point multiplicity, written out as ten nested sums.
pub fn multiplicity4_su4(lambda: &Weight, mu: &Weight, nu: &Weight, sigma: &Weight) -> Result<u64> {
    rank_is(3, [lambda, mu, nu, sigma])?;
    let third: Vec<i64> = nu
        .labels()
        .iter()
        .zip(sigma.labels())
        .map(|(a, b)| a + b)
        .collect();
    let Some(p) = params_from_labels(lambda.labels(), mu.labels(), &third) else {
        return Ok(0);
    };
    let (n1, n2, n3) = (p.n[0], p.n[1], p.n[2]);
    let (bn1, bn2, bn3) = (p.big_n[0], p.big_n[1], p.big_n[2]);
    let (bp1, bp2, bp3) = (p.big_n_prime[0], p.big_n_prime[1], p.big_n_prime[2]);
    let (la2, la3) = (lambda.label(2), lambda.label(3));
    let (mu1, mu2) = (mu.label(1), mu.label(2));
    let (nu1, nu2, nu3) = (nu.label(1), nu.label(2), nu.label(3));
    let (sg1, sg2, sg3) = (sigma.label(1), sigma.label(2), sigma.label(3));
    let mut total = 0u64;
    for a11 in 0..=la3.min(mu1) {
        for a21 in a11..=(la2 + a11) {
            let a12_lo = (-mu1 + a21 + a11).max(a11);
            let a12_hi = (la3 + a21 - a11).min(mu2 + a11);
            for a12 in a12_lo..=a12_hi {
                for g3 in (-n3 + a21)..=(bp3 + a21) {
                    let g2_lo = (-bn3 + g3 + a21).max(-n2 + a12 + a21 - a11);
                    let g2_hi = bp2 + g3 + a12 - a21;
                    for g2 in g2_lo..=g2_hi {
                        let g1_lo = (-n1 + a12).max(-bn2 + g2 + a12 - a21);
                        let g1_hi = (bp1 + g2 - a12).min(bn1 + a12);
                        for g1 in g1_lo..=g1_hi {
                            for b12 in (-sg3 + g3)..=(nu3 + g2 - g3).min(g3) {
                                let b21_lo = (-nu1 + g1).max(-sg2 + b12 + g2 - g3);
                                let b21_hi = (nu2 + b12 + g1 - g2).min(sg1 - g1 + g2).min(g1);
                                for b21 in b21_lo..=b21_hi {
                                    let lo = 0.max(-nu2 + b21).max(-sg2 + b12).max(b21 + b12 - g2);
                                    let hi = nu3
                                        .min(sg1)
                                        .min(b21)
                                        .min(b12)
                                        .min(nu3 + b21 - b12)
                                        .min(sg1 - b21 + b12);
                                    if hi >= lo {
                                        total += (hi - lo + 1) as u64;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(total)
}

/// Membership of a label tuple in a non-vanishing cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeReport {
    pub member: bool,
    /// Identifiers of the failed conditions, e.g. `"S-lambda1"` for
    /// `S - lambda_1 >= 0`, or `"integrality"`.
    pub violated: Vec<String>,
    /// Numerators of `S` (rank one) or `S_1, S_2` (rank two).
    pub s_numerators: Vec<i64>,
    pub s_denominator: i64,
}

impl ConeReport {
    fn finish(violated: Vec<String>, s_numerators: Vec<i64>, s_denominator: i64) -> Self {
        ConeReport {
            member: violated.is_empty(),
            violated,
            s_numerators,
            s_denominator,
        }
    }
}

const NAMES: [&str; 4] = ["lambda", "mu", "nu", "sigma"];

/// Rank-one four-point cone: `S` integral and
/// `0 <= lambda, mu, nu, sigma, S-lambda, S-mu, S-nu, S-sigma`.
pub fn cone_su2(lambda: i64, mu: i64, nu: i64, sigma: i64) -> ConeReport {
    let ls = [lambda, mu, nu, sigma];
    let two_s: i64 = ls.iter().sum();
    let mut violated = Vec::new();
    if two_s % 2 != 0 {
        violated.push(String::from("integrality"));
    }
    for (x, name) in ls.iter().zip(NAMES) {
        if *x < 0 {
            violated.push(alloc::format!("{name}1"));
        }
    }
    for (x, name) in ls.iter().zip(NAMES) {
        if two_s - 2 * x < 0 {
            violated.push(alloc::format!("S-{name}1"));
        }
    }
    ConeReport::finish(violated, alloc::vec![two_s], 2)
}

/// Rank-two four-point cone: `S_i` integral, non-negative labels,
/// `S_i - x_1 - x_2 >= 0` for every weight `x` and `S_i - x_i - y_i >= 0`
/// for every pair of weights, `i = 1, 2`.
pub fn cone_su3(lambda: &Weight, mu: &Weight, nu: &Weight, sigma: &Weight) -> Result<ConeReport> {
    let ws = [lambda, mu, nu, sigma];
    rank_is(2, ws)?;
    let mut s = [0i64; 2];
    for w in ws {
        let d = w.dual_labels();
        s[0] += d.numerator(1);
        s[1] += d.numerator(2);
    }
    let mut violated = Vec::new();
    if s.iter().any(|x| x % 3 != 0) {
        violated.push(String::from("integrality"));
    }
    for (w, name) in ws.iter().zip(NAMES) {
        for i in 1..=2 {
            if w.label(i) < 0 {
                violated.push(alloc::format!("{name}{i}"));
            }
        }
    }
    for i in 1..=2 {
        for (w, name) in ws.iter().zip(NAMES) {
            if s[i - 1] - 3 * (w.label(1) + w.label(2)) < 0 {
                violated.push(alloc::format!("S{i}-{name}1-{name}2"));
            }
        }
        for a in 0..4 {
            for b in a + 1..4 {
                if s[i - 1] - 3 * (ws[a].label(i) + ws[b].label(i)) < 0 {
                    violated.push(alloc::format!("S{i}-{}{i}-{}{i}", NAMES[a], NAMES[b]));
                }
            }
        }
    }
    Ok(ConeReport::finish(violated, s.to_vec(), 3))
}
