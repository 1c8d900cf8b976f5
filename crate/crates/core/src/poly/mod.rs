//! Exact multivariate polynomials over the rationals.
//!
//! A [`MultiPoly`] carries its own ordered variable list. Binary operations
//! on polynomials with different variable lists work on the union of the two
//! lists (the left operand's variables first). Terms are kept in descending
//! graded-lexicographic order with no zero coefficients, so two polynomials
//! over the same variable list are equal exactly when their term lists are.

mod json;
mod parse;
mod rational;

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

pub use json::{PolyJson, TermJson};
pub use parse::parse_poly;
pub use rational::Rational;

use crate::error::{Error, Result};

pub type Exps = Box<[u16]>;

#[derive(Clone)]
pub struct MultiPoly {
    vars: Arc<[String]>,
    terms: Vec<(Exps, Rational)>,
}

fn grlex(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

fn same_vars(a: &Arc<[String]>, b: &Arc<[String]>) -> bool {
    Arc::ptr_eq(a, b) || a[..] == b[..]
}

/// Build a variable list from names, keeping first occurrences.
pub fn var_list<S: AsRef<str>>(names: &[S]) -> Arc<[String]> {
    let mut out: Vec<String> = Vec::with_capacity(names.len());
    for n in names {
        if !out.iter().any(|v| v == n.as_ref()) {
            out.push(n.as_ref().to_string());
        }
    }
    out.into()
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly {
            vars: Arc::from(Vec::<String>::new()),
            terms: Vec::new(),
        }
    }

    pub fn zero_in(vars: &Arc<[String]>) -> Self {
        MultiPoly {
            vars: vars.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::constant_in(&Arc::from(Vec::<String>::new()), c)
    }

    pub fn constant_in(vars: &Arc<[String]>, c: Rational) -> Self {
        let mut p = Self::zero_in(vars);
        if !c.is_zero() {
            p.terms.push((vec![0u16; vars.len()].into(), c));
        }
        p
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(Rational::from_int(n))
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The polynomial consisting of the single variable `name`.
    pub fn var(name: &str) -> Self {
        Self::var_in(&var_list(&[name]), name).expect("variable is declared")
    }

    pub fn var_in(vars: &Arc<[String]>, name: &str) -> Result<Self> {
        let idx = vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let mut e = vec![0u16; vars.len()];
        e[idx] = 1;
        Ok(MultiPoly {
            vars: vars.clone(),
            terms: vec![(e.into(), Rational::one())],
        })
    }

    /// Single monomial `c * prod(var^exp)`.
    pub fn monomial(c: Rational, powers: &[(&str, u16)]) -> Self {
        let names: Vec<&str> = powers.iter().map(|(n, _)| *n).collect();
        let vars = var_list(&names);
        let mut e = vec![0u16; vars.len()];
        for (n, k) in powers {
            let i = vars.iter().position(|v| v == n).unwrap();
            e[i] += *k;
        }
        let mut p = Self::zero_in(&vars);
        if !c.is_zero() {
            p.terms.push((e.into(), c));
        }
        p
    }

    /// Build from raw terms over `vars`, combining duplicates and dropping zeros.
    pub fn from_terms<I>(vars: &Arc<[String]>, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u16>, Rational)>,
    {
        let mut acc: HashMap<Exps, Rational> = HashMap::new();
        for (e, c) in terms {
            if e.len() != vars.len() {
                return Err(Error::DimensionMismatch {
                    expected: vars.len(),
                    got: e.len(),
                });
            }
            accumulate(&mut acc, e.into(), &c);
        }
        Ok(Self::from_map(vars.clone(), acc))
    }

    fn from_map(vars: Arc<[String]>, acc: HashMap<Exps, Rational>) -> Self {
        let mut terms: Vec<(Exps, Rational)> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| grlex(&b.0, &a.0));
        MultiPoly { vars, terms }
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn terms(&self) -> &[(Exps, Rational)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(e, _)| e.iter().all(|&k| k == 0))
    }

    pub fn constant_term(&self) -> Rational {
        self.terms
            .iter()
            .find(|(e, _)| e.iter().all(|&k| k == 0))
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms
            .iter()
            .map(|(e, _)| e.iter().map(|&k| k as u32).sum())
            .max()
    }

    fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn has_var(&self, name: &str) -> bool {
        self.index_of(name).is_some()
    }

    /// Degree in one variable; `None` for the zero polynomial.
    pub fn degree_in(&self, name: &str) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        match self.index_of(name) {
            None => Some(0),
            Some(i) => self.terms.iter().map(|(e, _)| e[i] as u32).max(),
        }
    }

    /// Names of the variables that occur with nonzero exponent.
    pub fn used_vars(&self) -> Vec<String> {
        (0..self.vars.len())
            .filter(|&i| self.terms.iter().any(|(e, _)| e[i] > 0))
            .map(|i| self.vars[i].clone())
            .collect()
    }

    /// Drop variables that no term uses.
    pub fn trim(&self) -> MultiPoly {
        let keep: Vec<usize> = (0..self.vars.len())
            .filter(|&i| self.terms.iter().any(|(e, _)| e[i] > 0))
            .collect();
        if keep.len() == self.vars.len() {
            return self.clone();
        }
        let vars: Arc<[String]> = keep.iter().map(|&i| self.vars[i].clone()).collect();
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (keep.iter().map(|&i| e[i]).collect::<Exps>(), c.clone()))
            .collect();
        let mut p = MultiPoly { vars, terms };
        p.terms.sort_unstable_by(|a, b| grlex(&b.0, &a.0));
        p
    }

    /// Re-express over `target`, which must contain every variable this
    /// polynomial actually uses.
    pub fn embed(&self, target: &Arc<[String]>) -> Result<MultiPoly> {
        if same_vars(&self.vars, target) {
            return Ok(MultiPoly {
                vars: target.clone(),
                terms: self.terms.clone(),
            });
        }
        let mut map = Vec::with_capacity(self.vars.len());
        for (i, v) in self.vars.iter().enumerate() {
            match target.iter().position(|t| t == v) {
                Some(j) => map.push(Some(j)),
                None => {
                    if self.terms.iter().any(|(e, _)| e[i] > 0) {
                        return Err(Error::UnknownVariable(v.clone()));
                    }
                    map.push(None)
                }
            }
        }
        let mut terms: Vec<(Exps, Rational)> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut ne = vec![0u16; target.len()];
                for (i, slot) in map.iter().enumerate() {
                    if let Some(j) = slot {
                        ne[*j] = e[i];
                    }
                }
                (ne.into_boxed_slice(), c.clone())
            })
            .collect();
        terms.sort_unstable_by(|a, b| grlex(&b.0, &a.0));
        Ok(MultiPoly {
            vars: target.clone(),
            terms,
        })
    }

    fn union_vars(a: &Arc<[String]>, b: &Arc<[String]>) -> Arc<[String]> {
        if same_vars(a, b) {
            return a.clone();
        }
        let mut out: Vec<String> = a.to_vec();
        for v in b.iter() {
            if !out.contains(v) {
                out.push(v.clone());
            }
        }
        if out.len() == a.len() {
            return a.clone();
        }
        out.into()
    }

    fn aligned(&self, other: &MultiPoly) -> (MultiPoly, MultiPoly) {
        let u = Self::union_vars(&self.vars, &other.vars);
        (
            self.embed(&u).expect("union contains all variables"),
            other.embed(&u).expect("union contains all variables"),
        )
    }

    fn merge(&self, other: &MultiPoly, negate_other: bool) -> MultiPoly {
        if !same_vars(&self.vars, &other.vars) {
            let (a, b) = self.aligned(other);
            return a.merge(&b, negate_other);
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() || j < b.len() {
            let ord = if i == a.len() {
                Ordering::Less
            } else if j == b.len() {
                Ordering::Greater
            } else {
                grlex(&a[i].0, &b[j].0)
            };
            match ord {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate_other { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: out,
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.merge(other, true)
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return Self::zero_in(&self.vars);
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        if !same_vars(&self.vars, &other.vars) {
            let (a, b) = self.aligned(other);
            return a.mul(&b);
        }
        if self.is_zero() || other.is_zero() {
            return Self::zero_in(&self.vars);
        }
        let n = self.vars.len();
        let mut acc: HashMap<Exps, Rational> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        let mut buf = vec![0u16; n];
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                for k in 0..n {
                    buf[k] = ea[k] + eb[k];
                }
                let c = ca * cb;
                match acc.get_mut(&buf[..]) {
                    Some(v) => *v += &c,
                    None => {
                        acc.insert(buf.clone().into_boxed_slice(), c);
                    }
                }
            }
        }
        Self::from_map(self.vars.clone(), acc)
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut result = Self::constant_in(&self.vars, Rational::one());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Formal partial derivative. Errors if `name` is not declared.
    pub fn differentiate(&self, name: &str) -> Result<MultiPoly> {
        let i = self
            .index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(self.diff_index(i))
    }

    /// Derivative in `name`, treating an undeclared variable as absent.
    pub fn diff_or_zero(&self, name: &str) -> MultiPoly {
        match self.index_of(name) {
            Some(i) => self.diff_index(i),
            None => Self::zero_in(&self.vars),
        }
    }

    fn diff_index(&self, i: usize) -> MultiPoly {
        let mut acc: HashMap<Exps, Rational> = HashMap::new();
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut ne = e.clone();
            ne[i] -= 1;
            accumulate(&mut acc, ne, &(c * &Rational::from_int(e[i] as i64)));
        }
        Self::from_map(self.vars.clone(), acc)
    }

    /// Antiderivative with zero integration constant. An undeclared variable
    /// is appended to the variable list.
    pub fn integrate(&self, name: &str) -> MultiPoly {
        let p = if self.has_var(name) {
            self.clone()
        } else {
            let mut vs = self.vars.to_vec();
            vs.push(name.to_string());
            self.embed(&vs.into()).expect("superset")
        };
        let i = p.index_of(name).unwrap();
        let mut acc: HashMap<Exps, Rational> = HashMap::new();
        for (e, c) in &p.terms {
            let mut ne = e.clone();
            ne[i] += 1;
            accumulate(&mut acc, ne, &(c * &Rational::new(1, e[i] as i64 + 1)));
        }
        Self::from_map(p.vars.clone(), acc)
    }

    /// Coefficient of `name^k`, as a polynomial in the remaining variables.
    pub fn coeff_of(&self, name: &str, k: u16) -> MultiPoly {
        let Some(i) = self.index_of(name) else {
            return if k == 0 {
                self.clone()
            } else {
                Self::zero_in(&self.vars)
            };
        };
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e[i] == k)
            .map(|(e, c)| {
                let mut ne = e.clone();
                ne[i] = 0;
                (ne, c.clone())
            })
            .collect::<Vec<_>>();
        let mut p = MultiPoly {
            vars: self.vars.clone(),
            terms,
        };
        p.terms.sort_unstable_by(|a, b| grlex(&b.0, &a.0));
        p
    }

    /// Drop every term whose degree in `name` exceeds `max`.
    pub fn truncate_in(&self, name: &str, max: u16) -> MultiPoly {
        let Some(i) = self.index_of(name) else {
            return self.clone();
        };
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e[i] <= max)
                .cloned()
                .collect(),
        }
    }

    /// Drop every term whose joint degree in `names` exceeds `max`.
    pub fn truncate_joint(&self, names: &[String], max: u32) -> MultiPoly {
        let idx: Vec<usize> = names.iter().filter_map(|n| self.index_of(n)).collect();
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| idx.iter().map(|&i| e[i] as u32).sum::<u32>() <= max)
                .cloned()
                .collect(),
        }
    }

    /// Simultaneous substitution `name -> poly` for every binding.
    ///
    /// Bound variables that do not reappear in a binding are removed from the
    /// result's variable list.
    pub fn substitute(&self, bindings: &[(&str, &MultiPoly)]) -> MultiPoly {
        // result ring: unbound variables of self, then binding variables
        let bound: Vec<Option<usize>> = self
            .vars
            .iter()
            .map(|v| bindings.iter().position(|(n, _)| *n == v.as_str()))
            .collect();
        let mut ring: Vec<String> = self
            .vars
            .iter()
            .zip(&bound)
            .filter(|(_, b)| b.is_none())
            .map(|(v, _)| v.clone())
            .collect();
        for (_, p) in bindings {
            for v in p.vars.iter() {
                if !ring.contains(v) {
                    ring.push(v.clone());
                }
            }
        }
        let ring: Arc<[String]> = if ring[..] == self.vars[..] {
            self.vars.clone()
        } else {
            ring.into()
        };
        let values: Vec<MultiPoly> = bindings
            .iter()
            .map(|(_, p)| p.embed(&ring).expect("ring contains binding variables"))
            .collect();
        let free_pos: Vec<Option<usize>> = self
            .vars
            .iter()
            .zip(&bound)
            .map(|(v, b)| {
                if b.is_none() {
                    ring.iter().position(|r| r == v)
                } else {
                    None
                }
            })
            .collect();

        let mut powers: HashMap<(usize, u16), MultiPoly> = HashMap::new();
        let mut acc: HashMap<Exps, Rational> = HashMap::new();
        // group terms by their bound-variable exponent pattern
        let mut groups: HashMap<Vec<u16>, Vec<(Exps, Rational)>> = HashMap::new();
        for (e, c) in &self.terms {
            let key: Vec<u16> = (0..e.len())
                .map(|i| if bound[i].is_some() { e[i] } else { 0 })
                .collect();
            let mut free = vec![0u16; ring.len()];
            for (i, fp) in free_pos.iter().enumerate() {
                if let Some(j) = fp {
                    free[*j] = e[i];
                }
            }
            groups
                .entry(key)
                .or_default()
                .push((free.into_boxed_slice(), c.clone()));
        }
        let mut keys: Vec<Vec<u16>> = groups.keys().cloned().collect();
        keys.sort();
        for key in keys {
            let rest = &groups[&key];
            let mut factor = Self::constant_in(&ring, Rational::one());
            for (i, &k) in key.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let b = bound[i].unwrap();
                let pw = powers
                    .entry((b, k))
                    .or_insert_with(|| values[b].pow(k as u32))
                    .clone();
                factor = factor.mul(&pw);
                if factor.is_zero() {
                    break;
                }
            }
            if factor.is_zero() {
                continue;
            }
            for (free, c) in rest {
                for (fe, fc) in &factor.terms {
                    let ne: Exps = fe.iter().zip(free.iter()).map(|(a, b)| a + b).collect();
                    accumulate(&mut acc, ne, &(fc * c));
                }
            }
        }
        Self::from_map(ring, acc)
    }

    /// Substitute constants for variables.
    pub fn evaluate(&self, values: &[(&str, Rational)]) -> MultiPoly {
        let polys: Vec<MultiPoly> = values
            .iter()
            .map(|(_, v)| MultiPoly::constant(v.clone()))
            .collect();
        let b: Vec<(&str, &MultiPoly)> = values
            .iter()
            .zip(&polys)
            .map(|((n, _), p)| (*n, p))
            .collect();
        self.substitute(&b)
    }

    /// Rename variables in place of the variable list (no arithmetic).
    pub fn rename(&self, map: &[(&str, &str)]) -> MultiPoly {
        let renamed: Vec<String> = self
            .vars
            .iter()
            .map(|v| {
                map.iter()
                    .find(|(a, _)| *a == v.as_str())
                    .map(|(_, b)| b.to_string())
                    .unwrap_or_else(|| v.clone())
            })
            .collect();
        // merging two old names into one new name requires re-accumulation
        let unique = var_list(&renamed);
        if unique.len() == renamed.len() {
            let mut p = MultiPoly {
                vars: unique,
                terms: self.terms.clone(),
            };
            p.terms.sort_unstable_by(|a, b| grlex(&b.0, &a.0));
            return p;
        }
        let pos: Vec<usize> = renamed
            .iter()
            .map(|r| unique.iter().position(|u| u == r).unwrap())
            .collect();
        let mut acc = HashMap::new();
        for (e, c) in &self.terms {
            let mut ne = vec![0u16; unique.len()];
            for (i, &k) in e.iter().enumerate() {
                ne[pos[i]] += k;
            }
            accumulate(&mut acc, ne.into(), c);
        }
        Self::from_map(unique, acc)
    }

    /// Exact division by a polynomial in a single variable `name`, for
    /// polynomials that only involve `name`. Returns `None` if the division
    /// leaves a remainder.
    pub fn div_exact_univariate(&self, divisor: &MultiPoly, name: &str) -> Option<MultiPoly> {
        let coeffs = |p: &MultiPoly| -> Option<Vec<Rational>> {
            let p = p.trim();
            if p.used_vars().iter().any(|v| v != name) {
                return None;
            }
            let d = p.degree_in(name).unwrap_or(0) as usize;
            let mut out = vec![Rational::zero(); d + 1];
            for k in 0..=d {
                out[k] = p.coeff_of(name, k as u16).constant_term();
            }
            Some(out)
        };
        let mut num = coeffs(self)?;
        let den = coeffs(divisor)?;
        let dd = den.len() - 1;
        let lead = den[dd].clone();
        if lead.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(MultiPoly::zero_in(&var_list(&[name])));
        }
        if num.len() < den.len() {
            return None;
        }
        let mut q = vec![Rational::zero(); num.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &num[k + dd] / &lead;
            if !c.is_zero() {
                for (i, di) in den.iter().enumerate() {
                    num[k + i] = &num[k + i] - &(&c * di);
                }
            }
            q[k] = c;
        }
        if num.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(univariate(name, &q))
    }
}

/// `sum_k coeffs[k] * name^k`
pub fn univariate(name: &str, coeffs: &[Rational]) -> MultiPoly {
    let vars = var_list(&[name]);
    MultiPoly::from_terms(
        &vars,
        coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| (vec![k as u16], c.clone())),
    )
    .expect("arity matches")
}

fn accumulate(acc: &mut HashMap<Exps, Rational>, e: Exps, c: &Rational) {
    match acc.get_mut(&e) {
        Some(v) => *v += c,
        None => {
            acc.insert(e, c.clone());
        }
    }
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        if same_vars(&self.vars, &other.vars) {
            return self.terms == other.terms;
        }
        self.sub(other).is_zero()
    }
}

impl Eq for MultiPoly {}

impl Default for MultiPoly {
    fn default() -> Self {
        MultiPoly::zero()
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if n == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let mut factors: Vec<String> = Vec::new();
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => factors.push(self.vars[i].clone()),
                    _ => factors.push(format!("{}^{}", self.vars[i], k)),
                }
            }
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write!(f, "{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

impl<'a, 'b> Add<&'b MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &'b MultiPoly) -> MultiPoly {
        MultiPoly::add(self, rhs)
    }
}

impl<'a, 'b> Sub<&'b MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &'b MultiPoly) -> MultiPoly {
        MultiPoly::sub(self, rhs)
    }
}

impl<'a, 'b> Mul<&'b MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &'b MultiPoly) -> MultiPoly {
        MultiPoly::mul(self, rhs)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly::neg(self)
    }
}
