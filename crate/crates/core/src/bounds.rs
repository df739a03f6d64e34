//! Nested summation bounds.
//!
//! A [`BoundSystem`] is an ordered list of integer variables; each variable
//! is bounded below by the maximum and above by the minimum of affine
//! expressions in the weight labels, the coupling parameters and earlier
//! variables. The number of integer points is the nested sum
//! `sum_{x_1} sum_{x_2} ... 1`, where an empty range contributes zero.
//!
//! Systems are symbolic and built once per rank; [`BoundSystem::bind`]
//! substitutes concrete parameters and yields a [`Bound`] that counts or
//! lists the points.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Range, Sub};

use crate::error::{Error, Result};

/// Symbolic input of a bound; indices are one-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Param {
    Lambda(usize),
    Mu(usize),
    Nu(usize),
    Sigma(usize),
    SmallN(usize),
    BigN(usize),
    BigNPrime(usize),
}

impl Param {
    fn slot(self, rank: usize) -> usize {
        let (block, i) = match self {
            Param::Lambda(i) => (0, i),
            Param::Mu(i) => (1, i),
            Param::Nu(i) => (2, i),
            Param::Sigma(i) => (3, i),
            Param::SmallN(i) => (4, i),
            Param::BigN(i) => (5, i),
            Param::BigNPrime(i) => (6, i),
        };
        block * rank + i - 1
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Lambda(i) => write!(f, "lambda{i}"),
            Param::Mu(i) => write!(f, "mu{i}"),
            Param::Nu(i) => write!(f, "nu{i}"),
            Param::Sigma(i) => write!(f, "sigma{i}"),
            Param::SmallN(i) => write!(f, "n{i}"),
            Param::BigN(i) => write!(f, "N{i}"),
            Param::BigNPrime(i) => write!(f, "N'{i}"),
        }
    }
}

/// Name of a summation variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    /// `v_{i,j}` of a single triangle.
    V(usize, usize),
    /// `v^{(1)}_{i,j}`, first triangle of a glued pair.
    V1(usize, usize),
    /// Gluing coefficient `g_i`.
    G(usize),
    /// `v^{(2)}_{i,j}`, second triangle of a glued pair.
    V2(usize, usize),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::V(i, j) => write!(f, "v[{i},{j}]"),
            Var::V1(i, j) => write!(f, "v1[{i},{j}]"),
            Var::G(i) => write!(f, "g{i}"),
            Var::V2(i, j) => write!(f, "v2[{i},{j}]"),
        }
    }
}

/// Affine integer expression in parameters and (earlier) variables.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Affine {
    constant: i64,
    params: Vec<(Param, i64)>,
    vars: Vec<(usize, i64)>,
}

impl Affine {
    pub fn zero() -> Self {
        Affine::default()
    }

    pub fn constant(c: i64) -> Self {
        Affine {
            constant: c,
            ..Affine::default()
        }
    }

    pub fn param(p: Param) -> Self {
        Affine {
            params: alloc::vec![(p, 1)],
            ..Affine::default()
        }
    }

    /// Variable by position in the summation order.
    pub fn var(index: usize) -> Self {
        Affine {
            vars: alloc::vec![(index, 1)],
            ..Affine::default()
        }
    }

    pub fn var_terms(&self) -> &[(usize, i64)] {
        &self.vars
    }

    pub fn param_terms(&self) -> &[(Param, i64)] {
        &self.params
    }

    pub fn constant_term(&self) -> i64 {
        self.constant
    }

    /// Value at the given parameters and variables.
    pub fn eval(&self, params: &ParamValues, vars: &[i64]) -> i64 {
        let p = self
            .params
            .iter()
            .map(|&(q, c)| c * params.get(q))
            .sum::<i64>();
        let v = self.vars.iter().map(|&(k, c)| c * vars[k]).sum::<i64>();
        self.constant + p + v
    }

    /// Rendering with the given variable names.
    pub fn display<'a>(&'a self, names: &'a [Var]) -> impl fmt::Display + 'a {
        Formatted { expr: self, names }
    }

    fn normalize(mut self) -> Self {
        self.params.sort_by_key(|&(p, _)| p.slot(64));
        let mut params: Vec<(Param, i64)> = Vec::with_capacity(self.params.len());
        for (p, c) in self.params {
            match params.last_mut() {
                Some((q, d)) if *q == p => *d += c,
                _ => params.push((p, c)),
            }
        }
        params.retain(|&(_, c)| c != 0);
        self.params = params;
        self.vars.sort_by_key(|&(v, _)| v);
        let mut vars: Vec<(usize, i64)> = Vec::with_capacity(self.vars.len());
        for (v, c) in self.vars {
            match vars.last_mut() {
                Some((w, d)) if *w == v => *d += c,
                _ => vars.push((v, c)),
            }
        }
        vars.retain(|&(_, c)| c != 0);
        self.vars = vars;
        self
    }
}

impl Add for Affine {
    type Output = Affine;
    fn add(mut self, rhs: Affine) -> Affine {
        self.constant += rhs.constant;
        self.params.extend(rhs.params);
        self.vars.extend(rhs.vars);
        self.normalize()
    }
}

impl Neg for Affine {
    type Output = Affine;
    fn neg(self) -> Affine {
        self * -1
    }
}

impl Sub for Affine {
    type Output = Affine;
    fn sub(self, rhs: Affine) -> Affine {
        self + (-rhs)
    }
}

impl Mul<i64> for Affine {
    type Output = Affine;
    fn mul(mut self, k: i64) -> Affine {
        self.constant *= k;
        for t in &mut self.params {
            t.1 *= k;
        }
        for t in &mut self.vars {
            t.1 *= k;
        }
        self.normalize()
    }
}

struct Formatted<'a> {
    expr: &'a Affine,
    names: &'a [Var],
}

impl fmt::Display for Formatted<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut term = |f: &mut fmt::Formatter<'_>, c: i64, name: &dyn fmt::Display| {
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            if c.abs() != 1 {
                write!(f, "{}*", c.abs())?;
            }
            write!(f, "{name}")
        };
        for (p, c) in &self.expr.params {
            term(f, *c, p)?;
        }
        for (v, c) in &self.expr.vars {
            term(f, *c, &self.names[*v])?;
        }
        let c = self.expr.constant;
        if first {
            write!(f, "{c}")
        } else if c != 0 {
            write!(f, " {} {}", if c < 0 { "-" } else { "+" }, c.abs())
        } else {
            Ok(())
        }
    }
}

/// Concrete values for every [`Param`] of one rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamValues {
    rank: usize,
    values: Vec<i64>,
}

impl ParamValues {
    pub fn new(rank: usize) -> Self {
        ParamValues {
            rank,
            values: alloc::vec![0; 7 * rank],
        }
    }

    pub fn set(&mut self, p: Param, value: i64) {
        let s = p.slot(self.rank);
        self.values[s] = value;
    }

    pub fn set_all(&mut self, p: fn(usize) -> Param, values: &[i64]) {
        for (i, &v) in values.iter().enumerate() {
            self.set(p(i + 1), v);
        }
    }

    pub fn get(&self, p: Param) -> i64 {
        self.values[p.slot(self.rank)]
    }
}

struct Clause {
    constant: i64,
    params: Vec<(usize, i64)>,
    vars: Vec<(usize, i64)>,
}

/// Ordered variables with lower and upper clause sets.
pub struct BoundSystem {
    rank: usize,
    names: Vec<Var>,
    clauses: Vec<Clause>,
    lower: Vec<Range<usize>>,
    upper: Vec<Range<usize>>,
    conditions: Range<usize>,
    symbolic: Vec<(Vec<Affine>, Vec<Affine>)>,
    symbolic_conditions: Vec<Affine>,
}

/// Builder collecting clauses variable by variable, in summation order.
pub struct SystemBuilder {
    rank: usize,
    names: Vec<Var>,
    bounds: Vec<(Vec<Affine>, Vec<Affine>)>,
    conditions: Vec<Affine>,
}

impl SystemBuilder {
    pub fn new(rank: usize, names: Vec<Var>) -> Self {
        let bounds = (0..names.len()).map(|_| (Vec::new(), Vec::new())).collect();
        SystemBuilder {
            rank,
            names,
            bounds,
            conditions: Vec::new(),
        }
    }

    /// Adds `expr <= x_var`; a `None` clause is skipped.
    pub fn lower(&mut self, var: usize, expr: Option<Affine>) {
        if let Some(e) = expr {
            self.bounds[var].0.push(e);
        }
    }

    /// Adds `x_var <= expr`; a `None` clause is skipped.
    pub fn upper(&mut self, var: usize, expr: Option<Affine>) {
        if let Some(e) = expr {
            self.bounds[var].1.push(e);
        }
    }

    /// Adds the global condition `expr >= 0`.
    pub fn condition(&mut self, expr: Affine) {
        self.conditions.push(expr);
    }

    /// Finalises the system.
    ///
    /// # Panics
    ///
    /// If a variable lacks a lower or an upper clause, or a clause refers to
    /// the variable itself or to a later one.
    pub fn build(self) -> BoundSystem {
        let rank = self.rank;
        let mut clauses = Vec::new();
        let mut lower = Vec::new();
        let mut upper = Vec::new();
        for (k, (lo, hi)) in self.bounds.iter().enumerate() {
            assert!(!lo.is_empty() && !hi.is_empty(), "unbounded variable");
            lower.push(compile(&mut clauses, lo, k, rank));
            upper.push(compile(&mut clauses, hi, k, rank));
        }
        let conditions = compile(&mut clauses, &self.conditions, 0, rank);
        BoundSystem {
            rank,
            names: self.names,
            clauses,
            lower,
            upper,
            conditions,
            symbolic: self.bounds,
            symbolic_conditions: self.conditions,
        }
    }
}

fn compile(clauses: &mut Vec<Clause>, es: &[Affine], limit: usize, rank: usize) -> Range<usize> {
    let start = clauses.len();
    for e in es {
        assert!(
            e.vars.iter().all(|&(v, _)| v < limit),
            "clause refers forward"
        );
        clauses.push(Clause {
            constant: e.constant,
            params: e.params.iter().map(|&(p, c)| (p.slot(rank), c)).collect(),
            vars: e.vars.clone(),
        });
    }
    start..clauses.len()
}

impl BoundSystem {
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Variables in summation order.
    pub fn variables(&self) -> &[Var] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Symbolic lower and upper clauses of variable `k`.
    pub fn clauses(&self, k: usize) -> (&[Affine], &[Affine]) {
        let (lo, hi) = &self.symbolic[k];
        (lo, hi)
    }

    /// Global conditions `expr >= 0` that do not involve any variable.
    pub fn conditions(&self) -> &[Affine] {
        &self.symbolic_conditions
    }

    /// Substitutes parameter values.
    pub fn bind(&self, values: &ParamValues) -> Bound<'_> {
        debug_assert_eq!(values.rank, self.rank);
        let constants = self
            .clauses
            .iter()
            .map(|c| {
                c.params
                    .iter()
                    .fold(c.constant, |acc, &(s, k)| acc + k * values.values[s])
            })
            .collect();
        Bound {
            system: self,
            constants,
        }
    }

    /// Multi-line rendering of the nested sum.
    pub fn describe(&self) -> alloc::string::String {
        use core::fmt::Write;
        let mut out = alloc::string::String::new();
        for c in &self.symbolic_conditions {
            let _ = writeln!(
                out,
                "0 <= {}",
                Formatted {
                    expr: c,
                    names: &self.names
                }
            );
        }
        for (k, (lo, hi)) in self.symbolic.iter().enumerate() {
            let list = |es: &[Affine]| {
                let mut s = alloc::string::String::new();
                for (i, e) in es.iter().enumerate() {
                    if i > 0 {
                        s.push_str(", ");
                    }
                    let _ = write!(
                        s,
                        "{}",
                        Formatted {
                            expr: e,
                            names: &self.names
                        }
                    );
                }
                s
            };
            let _ = writeln!(
                out,
                "max{{{}}} <= {} <= min{{{}}}",
                list(lo),
                self.names[k],
                list(hi)
            );
        }
        out
    }
}

/// A [`BoundSystem`] with parameters substituted.
pub struct Bound<'a> {
    system: &'a BoundSystem,
    constants: Vec<i64>,
}

impl Bound<'_> {
    #[inline]
    fn eval(&self, clause: usize, vals: &[i64]) -> i64 {
        self.system.clauses[clause]
            .vars
            .iter()
            .fold(self.constants[clause], |acc, &(v, c)| acc + c * vals[v])
    }

    #[inline]
    fn range(&self, k: usize, vals: &[i64]) -> (i64, i64) {
        let lo = self.system.lower[k]
            .clone()
            .map(|c| self.eval(c, vals))
            .max()
            .unwrap_or(i64::MIN);
        let hi = self.system.upper[k]
            .clone()
            .map(|c| self.eval(c, vals))
            .min()
            .unwrap_or(i64::MAX);
        (lo, hi)
    }

    fn conditions_hold(&self) -> bool {
        self.system
            .conditions
            .clone()
            .all(|c| self.constants[c] >= 0)
    }

    /// Number of integer points (the nested sum).
    pub fn count(&self) -> Result<u64> {
        if !self.conditions_hold() {
            return Ok(0);
        }
        let n = self.system.len();
        if n == 0 {
            return Ok(1);
        }
        let mut vals = alloc::vec![0i64; n];
        self.count_from(0, &mut vals)
    }

    fn count_from(&self, k: usize, vals: &mut [i64]) -> Result<u64> {
        let (lo, hi) = self.range(k, vals);
        if lo > hi {
            return Ok(0);
        }
        if k + 1 == vals.len() {
            return u64::try_from(hi - lo + 1).map_err(|_| Error::Overflow);
        }
        let mut total = 0u64;
        for x in lo..=hi {
            vals[k] = x;
            let sub = self.count_from(k + 1, vals)?;
            total = total.checked_add(sub).ok_or(Error::Overflow)?;
        }
        Ok(total)
    }

    /// Calls `f` on every integer point, in lexicographic summation order.
    pub fn for_each<F: FnMut(&[i64])>(&self, mut f: F) {
        if !self.conditions_hold() {
            return;
        }
        let mut vals = alloc::vec![0i64; self.system.len()];
        self.walk(0, &mut vals, &mut f);
    }

    fn walk<F: FnMut(&[i64])>(&self, k: usize, vals: &mut [i64], f: &mut F) {
        if k == vals.len() {
            f(vals);
            return;
        }
        let (lo, hi) = self.range(k, vals);
        for x in lo..=hi {
            vals[k] = x;
            self.walk(k + 1, vals, f);
        }
    }

    /// All integer points, in lexicographic summation order.
    pub fn points(&self) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        self.for_each(|p| out.push(p.to_vec()));
        out
    }
}
