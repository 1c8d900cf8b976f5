//! Exact sparse linear algebra over the rationals.
//!
//! Rows are kept as primitive integer vectors while eliminating
//! (fraction-free), and converted to rationals only for the reduced form.
//! Pivots are always the lowest column index of a row.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::Rational;

/// Sparse rational vector, sorted by column, no zero entries.
pub type SparseVec = Vec<(usize, Rational)>;

type IntRow = Vec<(usize, BigInt)>;

/// Build a sparse vector from a dense slice.
pub fn sparse_from_dense(v: &[Rational]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

pub fn dense_from_sparse(v: &SparseVec, n: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); n];
    for (i, c) in v {
        out[*i] = c.clone();
    }
    out
}

fn to_int_row(v: &[(usize, Rational)]) -> IntRow {
    let mut l = BigInt::one();
    for (_, c) in v {
        l = l.lcm(c.denom());
    }
    v.iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (*i, c.numer() * (&l / c.denom())))
        .collect()
}

fn make_primitive(row: &mut IntRow) {
    let mut g = BigInt::zero();
    for (_, c) in row.iter() {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    if !g.is_zero() && !g.is_one() {
        for (_, c) in row.iter_mut() {
            *c /= &g;
        }
    }
    if row.first().map(|(_, c)| c.is_negative()).unwrap_or(false) {
        for (_, c) in row.iter_mut() {
            *c = -&*c;
        }
    }
}

/// `a*x - b*y`, dropping zeros.
fn combine(a: &BigInt, x: &IntRow, b: &BigInt, y: &IntRow) -> IntRow {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let cx = x.get(i).map(|e| e.0).unwrap_or(usize::MAX);
        let cy = y.get(j).map(|e| e.0).unwrap_or(usize::MAX);
        if cx < cy {
            out.push((cx, a * &x[i].1));
            i += 1;
        } else if cy < cx {
            out.push((cy, -(b * &y[j].1)));
            j += 1;
        } else {
            let v = a * &x[i].1 - b * &y[j].1;
            if !v.is_zero() {
                out.push((cx, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Eliminate column `col` of `v` using `row`, whose leading entry sits at `col`.
fn eliminate(v: &IntRow, row: &IntRow, col: usize) -> IntRow {
    let lead = &row[0].1;
    let a = match v.binary_search_by_key(&col, |e| e.0) {
        Ok(k) => v[k].1.clone(),
        Err(_) => return v.clone(),
    };
    let g = lead.gcd(&a);
    let mut out = combine(&(lead / &g), v, &(&a / &g), row);
    make_primitive(&mut out);
    out
}

/// Incrementally built row echelon form.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<IntRow>,
    pivots: BTreeMap<usize, usize>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            rows: Vec::new(),
            pivots: BTreeMap::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.pivots.keys().copied().collect()
    }

    fn reduce_int(&self, mut v: IntRow) -> IntRow {
        let mut i = 0;
        while i < v.len() {
            let c = v[i].0;
            match self.pivots.get(&c) {
                Some(&r) => v = eliminate(&v, &self.rows[r], c),
                None => i += 1,
            }
        }
        v
    }

    /// Insert a row; returns `true` if it was independent of the rows so far.
    pub fn insert(&mut self, v: &[(usize, Rational)]) -> bool {
        debug_assert!(v.iter().all(|(i, _)| *i < self.ncols));
        let mut row = to_int_row(v);
        make_primitive(&mut row);
        let row = self.reduce_int(row);
        if row.is_empty() {
            return false;
        }
        self.pivots.insert(row[0].0, self.rows.len());
        self.rows.push(row);
        true
    }

    pub fn contains(&self, v: &[(usize, Rational)]) -> bool {
        let mut row = to_int_row(v);
        make_primitive(&mut row);
        self.reduce_int(row).is_empty()
    }

    /// Fully reduced form with unit pivots, rows ordered by pivot column.
    pub fn rref(&self) -> Rref {
        let mut reduced: BTreeMap<usize, IntRow> = BTreeMap::new();
        for (&p, &r) in self.pivots.iter().rev() {
            let mut row = self.rows[r].clone();
            let mut i = 1;
            while i < row.len() {
                let c = row[i].0;
                match reduced.get(&c) {
                    Some(other) => row = eliminate(&row, other, c),
                    None => i += 1,
                }
            }
            reduced.insert(p, row);
        }
        let rows = reduced
            .into_iter()
            .map(|(p, row)| {
                let lead = Rational::from(row[0].1.clone());
                let r: SparseVec = row
                    .into_iter()
                    .map(|(c, v)| (c, Rational::from(v) / &lead))
                    .collect();
                (p, r)
            })
            .collect();
        Rref {
            ncols: self.ncols,
            rows,
        }
    }
}

/// Reduced row echelon form.
#[derive(Debug, Clone)]
pub struct Rref {
    ncols: usize,
    rows: BTreeMap<usize, SparseVec>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> impl Iterator<Item = (&usize, &SparseVec)> {
        self.rows.iter()
    }

    /// Basis of the kernel, one vector per free column in increasing order.
    pub fn nullspace(&self) -> Vec<SparseVec> {
        let mut by_col: BTreeMap<usize, Vec<(usize, Rational)>> = BTreeMap::new();
        for (&p, row) in &self.rows {
            for (c, v) in row.iter().skip(1) {
                by_col.entry(*c).or_default().push((p, v.clone()));
            }
        }
        (0..self.ncols)
            .filter(|c| !self.rows.contains_key(c))
            .map(|f| {
                let mut v: SparseVec = by_col
                    .get(&f)
                    .map(|entries| entries.iter().map(|(p, c)| (*p, -c)).collect())
                    .unwrap_or_default();
                v.push((f, Rational::one()));
                v.sort_by_key(|e| e.0);
                v
            })
            .collect()
    }

    /// Reduce `v` modulo the row space: the result has zeros in every pivot
    /// column, and is zero iff `v` lies in the row space.
    pub fn normal_form(&self, v: &[(usize, Rational)]) -> SparseVec {
        let mut acc: BTreeMap<usize, Rational> = v
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (*i, c.clone()))
            .collect();
        let hits: Vec<usize> = acc
            .keys()
            .copied()
            .filter(|c| self.rows.contains_key(c))
            .collect();
        for p in hits {
            let Some(a) = acc.get(&p).cloned() else {
                continue;
            };
            for (c, r) in &self.rows[&p] {
                let e = acc.entry(*c).or_insert_with(Rational::zero);
                *e -= &(&a * r);
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }
}

/// Kernel of the matrix whose rows are `rows`.
pub fn nullspace(ncols: usize, rows: &[SparseVec]) -> Vec<SparseVec> {
    let mut e = Echelon::new(ncols);
    for r in rows {
        e.insert(r);
    }
    e.rref().nullspace()
}

pub fn rank(ncols: usize, rows: &[SparseVec]) -> usize {
    let mut e = Echelon::new(ncols);
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// Dense univariate polynomial over the rationals, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UPoly(Vec<Rational>);

impl UPoly {
    pub fn new(mut c: Vec<Rational>) -> Self {
        while c.last().map(|x| x.is_zero()).unwrap_or(false) {
            c.pop();
        }
        UPoly(c)
    }

    pub fn zero() -> Self {
        UPoly(Vec::new())
    }

    pub fn constant(c: Rational) -> Self {
        UPoly::new(vec![c])
    }

    /// `c * t^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        UPoly::new(v)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn add(&self, o: &UPoly) -> UPoly {
        let n = self.0.len().max(o.0.len());
        let z = Rational::zero();
        UPoly::new(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&z) + o.0.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn sub(&self, o: &UPoly) -> UPoly {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> UPoly {
        UPoly(self.0.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        UPoly::new(out)
    }

    /// Quotient if `d` divides `self` exactly.
    pub fn div_exact(&self, d: &UPoly) -> Option<UPoly> {
        let dd = d.degree()?;
        if self.is_zero() {
            return Some(UPoly::zero());
        }
        if self.0.len() < d.0.len() {
            return None;
        }
        let mut num = self.0.clone();
        let lead = &d.0[dd];
        let mut q = vec![Rational::zero(); num.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &num[k + dd] / lead;
            if !c.is_zero() {
                for (i, di) in d.0.iter().enumerate() {
                    num[k + i] -= &(&c * di);
                }
            }
            q[k] = c;
        }
        if num.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(UPoly::new(q))
    }
}

/// Left kernel of a matrix over Q[t]: polynomial vectors `y` with `y^T A = 0`,
/// computed by fraction-free (Bareiss) elimination on `[A | I]`.
pub fn left_kernel_upoly(a: &[Vec<UPoly>]) -> Vec<Vec<UPoly>> {
    let nr = a.len();
    if nr == 0 {
        return Vec::new();
    }
    let nc = a[0].len();
    let width = nc + nr;
    let mut m: Vec<Vec<UPoly>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..nr).map(|j| {
                if i == j {
                    UPoly::constant(Rational::one())
                } else {
                    UPoly::zero()
                }
            }));
            r
        })
        .collect();
    let mut prev = UPoly::constant(Rational::one());
    let mut prow = 0;
    for col in 0..nc {
        let Some(sel) = (prow..nr).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(prow, sel);
        let piv = m[prow][col].clone();
        for r in prow + 1..nr {
            let f = m[r][col].clone();
            for c in 0..width {
                let v = piv.mul(&m[r][c]).sub(&f.mul(&m[prow][c]));
                m[r][c] = v.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = piv;
        prow += 1;
        if prow == nr {
            break;
        }
    }
    let mut out = Vec::new();
    for row in m.into_iter().skip(prow) {
        let y: Vec<UPoly> = row[nc..].to_vec();
        debug_assert!(row[..nc].iter().all(|p| p.is_zero()));
        out.push(y);
    }
    for y in out.iter_mut() {
        normalize_upoly_row(y);
    }
    out
}

/// Scale a polynomial row so its coefficients are coprime integers with a
/// positive leading coefficient in the first nonzero entry.
pub fn normalize_upoly_row(row: &mut [UPoly]) {
    let mut l = BigInt::one();
    let mut g = BigInt::zero();
    for p in row.iter() {
        for c in p.coeffs() {
            l = l.lcm(c.denom());
        }
    }
    for p in row.iter() {
        for c in p.coeffs() {
            g = g.gcd(&(c.numer() * (&l / c.denom())));
        }
    }
    if g.is_zero() {
        return;
    }
    let mut s = Rational::from(l) / Rational::from(g);
    let first_neg = row
        .iter()
        .find(|p| !p.is_zero())
        .map(|p| p.0.last().unwrap().is_negative())
        .unwrap_or(false);
    if first_neg {
        s = -s;
    }
    for p in row.iter_mut() {
        for c in p.0.iter_mut() {
            *c = &*c * &s;
        }
    }
}
