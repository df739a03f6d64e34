//! Highest weights of `su(r+1)` in the Dynkin basis.
//!
//! A [`Weight`] is a dominant integral weight given by its `r` Dynkin
//! labels. Dual labels (coordinates in the simple-root basis) are rational
//! with denominator `r + 1`; they are kept as integer numerators over that
//! fixed denominator so that every bound computation stays exact.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, ParseError, Result};

/// A dominant integral `su(r+1)` weight, `rank = r = labels.len() >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    labels: Vec<i64>,
}

impl Weight {
    /// Builds a weight from its Dynkin labels. Rejects rank zero and
    /// negative labels.
    pub fn new(labels: Vec<i64>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::InvalidRank(0));
        }
        if let Some((index, &value)) = labels.iter().enumerate().find(|(_, &l)| l < 0) {
            return Err(Error::NegativeLabel { index, value });
        }
        Ok(Weight { labels })
    }

    pub fn zero(rank: usize) -> Self {
        assert!(rank >= 1, "rank must be positive");
        Weight {
            labels: vec![0; rank],
        }
    }

    /// The `i`-th fundamental weight, `1 <= i <= rank`.
    pub fn fundamental(rank: usize, i: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidRank(0));
        }
        if i == 0 || i > rank {
            return Err(Error::InvalidRootIndex { rank, index: i });
        }
        let mut labels = vec![0; rank];
        labels[i - 1] = 1;
        Ok(Weight { labels })
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    #[inline]
    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    /// Dynkin label `lambda_i`, one-based.
    #[inline]
    pub fn label(&self, i: usize) -> i64 {
        self.labels[i - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.labels.iter().all(|&l| l == 0)
    }

    /// Sum of all Dynkin labels.
    pub fn level(&self) -> i64 {
        self.labels.iter().sum()
    }

    /// The conjugate weight: labels in reverse order.
    pub fn conjugate(&self) -> Self {
        let mut labels = self.labels.clone();
        labels.reverse();
        Weight { labels }
    }

    pub fn dual_labels(&self) -> DualLabels {
        DualLabels::of_labels(&self.labels)
    }

    /// `self + other`, label-wise.
    pub fn add(&self, other: &Weight) -> Result<Weight> {
        check_rank(self.rank(), other)?;
        let labels = self
            .labels
            .iter()
            .zip(&other.labels)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Weight { labels })
    }

    /// Sum of a non-empty list of weights of one rank.
    pub fn sum<'a, I>(weights: I) -> Result<Weight>
    where
        I: IntoIterator<Item = &'a Weight>,
    {
        let mut it = weights.into_iter();
        let first = it.next().ok_or(Error::TooFewWeights {
            needed: 1,
            found: 0,
        })?;
        it.try_fold(first.clone(), |acc, w| acc.add(w))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.labels.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ParseError::Empty.into());
        }
        let labels = s
            .split(',')
            .map(|t| {
                let v: i64 = t.trim().parse().map_err(|_| ParseError::BadLabel)?;
                if v < 0 {
                    return Err(ParseError::Negative);
                }
                Ok(v)
            })
            .collect::<core::result::Result<Vec<_>, ParseError>>()?;
        Weight::new(labels)
    }
}

/// Parses `"a,b,...;c,d,...;..."` into a weight list. All weights must share
/// one rank; when `rank` is given it must match as well.
pub fn parse_weight_list(s: &str, rank: Option<usize>) -> Result<Vec<Weight>> {
    let weights = s
        .split(';')
        .map(str::parse::<Weight>)
        .collect::<Result<Vec<_>>>()?;
    let r = rank.unwrap_or(weights[0].rank());
    for w in &weights {
        check_rank(r, w)?;
    }
    Ok(weights)
}

pub fn format_weight_list(ws: &[Weight]) -> String {
    use core::fmt::Write;
    let mut out = String::new();
    for (k, w) in ws.iter().enumerate() {
        if k > 0 {
            out.push(';');
        }
        let _ = write!(out, "{w}");
    }
    out
}

pub(crate) fn check_rank(rank: usize, w: &Weight) -> Result<()> {
    if w.rank() != rank {
        return Err(Error::RankMismatch {
            expected: rank,
            found: w.rank(),
        });
    }
    Ok(())
}

/// Checks that all weights share one rank and returns it.
pub fn common_rank(ws: &[Weight]) -> Result<usize> {
    let first = ws.first().ok_or(Error::TooFewWeights {
        needed: 1,
        found: 0,
    })?;
    let r = first.rank();
    for w in ws {
        check_rank(r, w)?;
    }
    Ok(r)
}

/// Dual Dynkin labels `lambda^i = numerators[i] / (r + 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualLabels {
    numerators: Vec<i64>,
}

impl DualLabels {
    /// Dual labels of an arbitrary (not necessarily dominant) label vector.
    pub fn of_labels(labels: &[i64]) -> Self {
        let r = labels.len() as i64;
        let numerators = (1..=r)
            .map(|i| {
                (1..=r)
                    .map(|j| ((r + 1) * i.min(j) - i * j) * labels[(j - 1) as usize])
                    .sum()
            })
            .collect();
        DualLabels { numerators }
    }

    pub fn rank(&self) -> usize {
        self.numerators.len()
    }

    pub fn numerators(&self) -> &[i64] {
        &self.numerators
    }

    /// Numerator of `lambda^i`, one-based.
    pub fn numerator(&self, i: usize) -> i64 {
        self.numerators[i - 1]
    }

    pub fn denominator(&self) -> i64 {
        self.rank() as i64 + 1
    }
}

/// Integer coefficients `m_i` with `sum of weights = sum_i m_i alpha_i`, or
/// `None` when the sum is outside the root lattice.
pub fn root_lattice_check(ws: &[Weight]) -> Result<Option<Vec<i64>>> {
    let r = common_rank(ws)?;
    let den = r as i64 + 1;
    let mut sums = vec![0i64; r];
    for w in ws {
        for (s, n) in sums.iter_mut().zip(w.dual_labels().numerators) {
            *s += n;
        }
    }
    if sums.iter().any(|s| s % den != 0) {
        return Ok(None);
    }
    Ok(Some(sums.into_iter().map(|s| s / den).collect()))
}

/// Dynkin labels of the simple root `alpha_i` (row `i` of the Cartan matrix).
pub fn simple_root(rank: usize, i: usize) -> Vec<i64> {
    let mut a = vec![0i64; rank];
    a[i - 1] = 2;
    if i > 1 {
        a[i - 2] = -1;
    }
    if i < rank {
        a[i] = -1;
    }
    a
}

/// The integers `n_i`, `N_i`, `N'_i` that fix the initial triangle and
/// all summation bounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CouplingParams {
    pub n: Vec<i64>,
    pub big_n: Vec<i64>,
    pub big_n_prime: Vec<i64>,
}

impl CouplingParams {
    pub fn rank(&self) -> usize {
        self.n.len()
    }
}

/// Parameters for `lambda (x) mu (x) third`. For four-point use pass
/// `third = nu + sigma`.
pub fn coupling_params(lambda: &Weight, mu: &Weight, third: &Weight) -> Result<CouplingParams> {
    let r = lambda.rank();
    check_rank(r, mu)?;
    check_rank(r, third)?;
    params_from_labels(lambda.labels(), mu.labels(), third.labels()).ok_or(Error::NotInRootLattice)
}

/// Same as [`coupling_params`] on raw label slices (entries may be
/// negative, e.g. simple roots).
pub(crate) fn params_from_labels(lam: &[i64], mu: &[i64], third: &[i64]) -> Option<CouplingParams> {
    let r = lam.len();
    let den = r as i64 + 1;
    let ld = DualLabels::of_labels(lam);
    let md = DualLabels::of_labels(mu);
    let td = DualLabels::of_labels(third);
    let mut n = Vec::with_capacity(r);
    for i in 1..=r {
        let num = ld.numerator(r - i + 1) + md.numerator(r - i + 1) - td.numerator(i);
        if num % den != 0 {
            return None;
        }
        n.push(num / den);
    }
    let mut big_n = Vec::with_capacity(r);
    let mut big_n_prime = Vec::with_capacity(r);
    for i in 1..=r {
        let prev = if i > 1 { n[i - 2] } else { 0 };
        let ni = prev - n[i - 1] + mu[r - i];
        big_n.push(ni);
        big_n_prime.push(third[i - 1] - ni);
    }
    Some(CouplingParams {
        n,
        big_n,
        big_n_prime,
    })
}

/// Every dominant `kappa = a + b - sum_i k_i alpha_i` with `k_i >= 0`: a
/// finite superset of the constituents of `a (x) b`.
pub fn product_candidates(a: &Weight, b: &Weight) -> Result<Vec<Weight>> {
    let r = a.rank();
    check_rank(r, b)?;
    let top = a.add(b)?;
    let den = r as i64 + 1;
    let caps: Vec<i64> = top
        .dual_labels()
        .numerators()
        .iter()
        .map(|n| n / den)
        .collect();
    let cartan: Vec<Vec<i64>> = (1..=r).map(|i| simple_root(r, i)).collect();
    let mut out = Vec::new();
    let mut k = vec![0i64; r];
    'outer: loop {
        let mut labels = top.labels.clone();
        for (ki, root) in k.iter().zip(&cartan) {
            for (l, a) in labels.iter_mut().zip(root) {
                *l -= ki * a;
            }
        }
        if labels.iter().all(|&l| l >= 0) {
            out.push(Weight { labels });
        }
        for pos in 0..r {
            if k[pos] < caps[pos] {
                k[pos] += 1;
                continue 'outer;
            }
            k[pos] = 0;
        }
        break;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(ls: &[i64]) -> Weight {
        Weight::new(ls.to_vec()).unwrap()
    }

    #[test]
    fn conjugation_reverses() {
        assert_eq!(w(&[1, 0]).conjugate(), w(&[0, 1]));
        assert_eq!(w(&[1, 1]).conjugate(), w(&[1, 1]));
        assert_eq!(w(&[2, 0, 1]).conjugate(), w(&[1, 0, 2]));
    }

    #[test]
    fn dual_label_numerators() {
        assert_eq!(w(&[1, 0]).dual_labels().numerators(), &[2, 1]);
        let d = w(&[1, 1]).dual_labels();
        assert_eq!(d.numerators(), &[3, 3]);
        assert_eq!(d.denominator(), 3);
        let d = w(&[3]).dual_labels();
        assert_eq!((d.numerators(), d.denominator()), (&[3][..], 2));
    }

    #[test]
    fn root_lattice_examples() {
        let f = w(&[1, 0]);
        assert_eq!(
            root_lattice_check(&[f.clone(), f.clone(), f.clone()]).unwrap(),
            Some(vec![2, 1])
        );
        assert_eq!(
            root_lattice_check(&[f.clone(), f.clone(), f.clone(), f]).unwrap(),
            None
        );
        let s = w(&[1]);
        assert_eq!(
            root_lattice_check(&[s.clone(), s.clone(), s.clone(), s]).unwrap(),
            Some(vec![2])
        );
        assert!(matches!(
            root_lattice_check(&[w(&[1]), w(&[1, 0])]),
            Err(Error::RankMismatch { .. })
        ));
    }

    #[test]
    fn coupling_params_examples() {
        let a = w(&[1, 1]);
        let p = coupling_params(&a, &a, &a).unwrap();
        assert_eq!(p.n, vec![1, 1]);
        assert_eq!(p.big_n, vec![0, 1]);
        assert_eq!(p.big_n_prime, vec![1, 0]);

        let p = coupling_params(&w(&[1]), &w(&[1]), &w(&[2])).unwrap();
        assert_eq!((p.n, p.big_n, p.big_n_prime), (vec![0], vec![1], vec![1]));

        let (l, m) = (w(&[2, 0, 1]), w(&[1, 3, 0]));
        let p = coupling_params(&l, &m, &l.add(&m).unwrap().conjugate()).unwrap();
        assert_eq!(p.n, vec![0, 0, 0]);

        assert_eq!(
            coupling_params(&w(&[1, 0]), &w(&[0, 0]), &w(&[0, 0])),
            Err(Error::NotInRootLattice)
        );
    }

    #[test]
    fn parsing() {
        let ws = parse_weight_list("1,1; 0,2;3,0", None).unwrap();
        assert_eq!(ws, vec![w(&[1, 1]), w(&[0, 2]), w(&[3, 0])]);
        assert_eq!(format_weight_list(&ws), "1,1;0,2;3,0");
        assert!(parse_weight_list("1,1;1", None).is_err());
        assert!(parse_weight_list("1,1;1,1", Some(3)).is_err());
        assert!(parse_weight_list("1,x", None).is_err());
        assert!(parse_weight_list("1,-1", None).is_err());
        assert!(parse_weight_list("", None).is_err());
    }

    #[test]
    fn candidates_of_octet_square() {
        let a = w(&[1, 1]);
        let mut c = product_candidates(&a, &a).unwrap();
        c.sort();
        // 8 x 8 = 1 + 8 + 8 + 10 + 10bar + 27, plus dominant weights of
        // multiplicity zero that share the congruence class
        for x in [[0, 0], [1, 1], [3, 0], [0, 3], [2, 2]] {
            assert!(c.contains(&w(&x)), "{x:?}");
        }
        assert!(c
            .iter()
            .all(|k| root_lattice_check(core::slice::from_ref(k))
                .unwrap()
                .is_some()));
    }
}
