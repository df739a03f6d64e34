//! Littlewood-Richardson decomposition and Weyl dimensions.
//!
//! A weight with Dynkin labels `lambda_1..lambda_r` corresponds to the
//! partition with rows `p_i = lambda_i + .. + lambda_r` (`r + 1` rows, the
//! last one empty). `lambda (x) mu` is expanded by adding the rows of `mu`
//! to the diagram of `lambda` as horizontal strips labelled `1, 2, ..`
//! subject to the lattice-word condition; shapes with more than `r + 1`
//! rows vanish, and full columns drop out when converting back to labels.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::weights::{check_rank, common_rank, Weight};

/// Constituents of a tensor product with their multiplicities.
pub type Decomposition = BTreeMap<Weight, u64>;

fn partition(w: &Weight) -> Vec<i64> {
    let r = w.rank();
    let mut p = vec![0i64; r + 1];
    for i in (0..r).rev() {
        p[i] = p[i + 1] + w.labels()[i];
    }
    p
}

fn labels_of(shape: &[i64]) -> Vec<i64> {
    shape.windows(2).map(|w| w[0] - w[1]).collect()
}

struct Filling<'a> {
    rows: usize,
    strips: &'a [i64],
    out: &'a mut BTreeMap<Vec<i64>, u64>,
}

impl Filling<'_> {
    /// Places strip `k` (label `k + 1`) on `shape`. `prev[row]` counts the
    /// boxes of the previous label in each row.
    fn place(&mut self, k: usize, shape: &mut Vec<i64>, prev: &[i64]) {
        if k == self.strips.len() {
            *self.out.entry(shape.clone()).or_insert(0) += 1;
            return;
        }
        let mut counts = vec![0i64; self.rows];
        let old = shape.clone();
        self.distribute(k, 0, self.strips[k], shape, &old, prev, &mut counts, 0, 0);
    }

    #[allow(clippy::too_many_arguments)]
    fn distribute(
        &mut self,
        k: usize,
        row: usize,
        left: i64,
        shape: &mut Vec<i64>,
        old: &[i64],
        prev: &[i64],
        counts: &mut Vec<i64>,
        placed: i64,
        prev_above: i64,
    ) {
        if left == 0 {
            let c = counts.clone();
            self.place(k + 1, shape, &c);
            return;
        }
        if row == self.rows {
            return;
        }
        // horizontal strip: the new row may not pass the old row above it
        let room = if row == 0 {
            left
        } else {
            old[row - 1] - old[row]
        };
        // lattice word: labels k+1 in rows <= row never outnumber labels k
        // in rows < row
        let lattice = if k == 0 { left } else { prev_above - placed };
        let most = room.min(left).min(lattice);
        for a in (0..=most).rev() {
            counts[row] = a;
            shape[row] = old[row] + a;
            let above = prev_above + if k == 0 { 0 } else { prev[row] };
            self.distribute(
                k,
                row + 1,
                left - a,
                shape,
                old,
                prev,
                counts,
                placed + a,
                above,
            );
        }
        counts[row] = 0;
        shape[row] = old[row];
    }
}

/// `lambda (x) mu` as a sum of irreducibles.
pub fn lr_decompose(lambda: &Weight, mu: &Weight) -> Result<Decomposition> {
    let r = lambda.rank();
    check_rank(r, mu)?;
    let strips: Vec<i64> = partition(mu).into_iter().take_while(|&s| s > 0).collect();
    let mut shapes = BTreeMap::new();
    let mut shape = partition(lambda);
    let mut f = Filling {
        rows: r + 1,
        strips: &strips,
        out: &mut shapes,
    };
    f.place(0, &mut shape, &vec![0; r + 1]);
    let mut out = Decomposition::new();
    for (s, m) in shapes {
        let w = Weight::new(labels_of(&s)).expect("partition rows are non-increasing");
        *out.entry(w).or_insert(0) += m;
    }
    Ok(out)
}

/// Iterated decomposition of `ws[0] (x) ws[1] (x) ..`.
pub fn decompose_all(ws: &[Weight]) -> Result<Decomposition> {
    let r = common_rank(ws)?;
    let mut acc = Decomposition::new();
    acc.insert(ws[0].clone(), 1);
    for w in &ws[1..] {
        check_rank(r, w)?;
        let mut next = Decomposition::new();
        for (k, m) in &acc {
            for (c, n) in lr_decompose(k, w)? {
                let slot = next.entry(c).or_insert(0);
                *slot = m
                    .checked_mul(n)
                    .and_then(|x| slot.checked_add(x))
                    .ok_or(Error::Overflow)?;
            }
        }
        acc = next;
    }
    Ok(acc)
}

/// Multiplicity of the trivial representation in `ws[0] (x) .. (x) ws[N-1]`.
pub fn singlet_count(ws: &[Weight]) -> Result<u64> {
    if ws.len() < 2 {
        return Err(Error::TooFewWeights {
            needed: 2,
            found: ws.len(),
        });
    }
    common_rank(ws)?;
    let half = ws.len() / 2;
    let a = decompose_all(&ws[..half])?;
    let b = decompose_all(&ws[half..])?;
    let mut total = 0u64;
    for (k, m) in &a {
        if let Some(n) = b.get(&k.conjugate()) {
            total = m
                .checked_mul(*n)
                .and_then(|x| total.checked_add(x))
                .ok_or(Error::Overflow)?;
        }
    }
    Ok(total)
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Weyl dimension `prod_{i <= j} (lambda_i + .. + lambda_j + j - i + 1) / (j - i + 1)`.
pub fn dim(w: &Weight) -> u128 {
    let r = w.rank();
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..r {
        let mut s: u128 = 0;
        for j in i..r {
            s += w.labels()[j] as u128;
            let len = (j - i + 1) as u128;
            num *= s + len;
            den *= len;
            let g = gcd(num, den);
            num /= g;
            den /= g;
        }
    }
    num / den
}
