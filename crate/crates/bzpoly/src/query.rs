//! Multiplicity queries with a selectable evaluation path.

use serde::Serialize;

use bzpoly_core::n_point::{fold_right, multiplicity_n_with};
use bzpoly_core::weights::product_candidates;
use bzpoly_core::{singlet_count, CouplingQuery, Evaluator, Result, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Nested sums over BZ polytopes (folded along the string above four points).
    Polytope,
    /// Littlewood-Richardson decomposition.
    Oracle,
    /// Sum over the intermediate weight of the first channel.
    Channel,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Polytope, Method::Oracle, Method::Channel];

    pub fn name(self) -> &'static str {
        match self {
            Method::Polytope => "polytope",
            Method::Oracle => "oracle",
            Method::Channel => "channel",
        }
    }
}

/// One intermediate weight `rho` of the first channel: `left` couplings of
/// `lambda^(1) (x) lambda^(2) (x) rho` times `right` couplings of the rest
/// with `rho^+`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Term {
    pub rho: Vec<i64>,
    pub left: u64,
    pub right: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultReport {
    pub rank: usize,
    pub weights: Vec<Vec<i64>>,
    pub multiplicity: u64,
    pub method: Method,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub breakdown: Option<Vec<Term>>,
}

/// The multiplicity of `q` along `method`.
pub fn evaluate(ev: &Evaluator, q: &CouplingQuery, method: Method) -> Result<u64> {
    let ws = q.weights();
    match method {
        Method::Polytope => multiplicity_n_with(ev, ws),
        Method::Oracle => singlet_count(ws),
        Method::Channel => match ws {
            [a, b, c, d] => Ok(ev.channel_decompose4(a, b, c, d)?.total),
            _ => fold_right(ev, ws),
        },
    }
}

/// Non-zero terms of the first channel; empty below four points.
pub fn breakdown(ev: &Evaluator, q: &CouplingQuery) -> Result<Vec<Term>> {
    let ws = q.weights();
    if ws.len() < 4 {
        return Ok(Vec::new());
    }
    if let [a, b, c, d] = ws {
        let dec = ev.channel_decompose4(a, b, c, d)?;
        return Ok(dec
            .terms
            .into_iter()
            .map(|t| Term {
                rho: t.rho.labels().to_vec(),
                left: t.left,
                right: t.right,
            })
            .collect());
    }
    let mut out = Vec::new();
    for kappa in product_candidates(&ws[0], &ws[1])? {
        let rho = kappa.conjugate();
        let left = ev.multiplicity3(&ws[0], &ws[1], &rho)?;
        if left == 0 {
            continue;
        }
        let mut rest: Vec<Weight> = vec![kappa];
        rest.extend_from_slice(&ws[2..]);
        let right = multiplicity_n_with(ev, &rest)?;
        if right > 0 {
            out.push(Term {
                rho: rho.labels().to_vec(),
                left,
                right,
            });
        }
    }
    Ok(out)
}

pub fn report(
    ev: &Evaluator,
    q: &CouplingQuery,
    method: Method,
    explain: bool,
) -> Result<MultReport> {
    let multiplicity = evaluate(ev, q, method)?;
    let breakdown = if explain {
        Some(breakdown(ev, q)?)
    } else {
        None
    };
    Ok(MultReport {
        rank: q.rank(),
        weights: q.weights().iter().map(|w| w.labels().to_vec()).collect(),
        multiplicity,
        method,
        breakdown,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use bzpoly_core::parse_weight_list;

    fn query(s: &str) -> CouplingQuery {
        CouplingQuery::new(parse_weight_list(s, None).unwrap()).unwrap()
    }

    #[test]
    fn methods_agree() {
        for s in [
            "1,1;1,1;1,1",
            "1,0;0,1;1,0;0,1",
            "1;1;1;1;2",
            "1,1;1,1;1,1;1,1",
            "1,0;1,0;1,0;0,0;0,0",
        ] {
            let q = query(s);
            let ev = Evaluator::new(q.rank()).unwrap();
            let vals: Vec<u64> = Method::ALL
                .iter()
                .map(|&m| evaluate(&ev, &q, m).unwrap())
                .collect();
            assert!(vals.iter().all(|&v| v == vals[0]), "{s}: {vals:?}");
        }
    }

    #[test]
    fn breakdown_sums_to_total() {
        for s in ["1;1;1;1", "1,1;1,1;1,1;1,1", "1;1;1;1;2"] {
            let q = query(s);
            let ev = Evaluator::new(q.rank()).unwrap();
            let terms = breakdown(&ev, &q).unwrap();
            let total: u64 = terms.iter().map(|t| t.left * t.right).sum();
            assert_eq!(total, evaluate(&ev, &q, Method::Polytope).unwrap(), "{s}");
        }
        let q = query("1;1;1;1");
        let ev = Evaluator::new(1).unwrap();
        let rhos: Vec<Vec<i64>> = breakdown(&ev, &q)
            .unwrap()
            .into_iter()
            .map(|t| t.rho)
            .collect();
        assert_eq!(rhos.len(), 2);
        assert!(rhos.contains(&vec![0]) && rhos.contains(&vec![2]));
    }

    #[test]
    fn json_keys() {
        let q = query("1,1;1,1;1,1");
        let ev = Evaluator::new(2).unwrap();
        let r = report(&ev, &q, Method::Polytope, false).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["multiplicity"], 2);
        assert_eq!(v["method"], "polytope");
        assert!(v.get("breakdown").is_none());
    }
}
