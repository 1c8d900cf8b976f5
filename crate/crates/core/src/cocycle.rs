//! Infinitesimal exponents `Xi(a_i, a_j, t)` of a Lie algebra with time
//! action: the generalized Jacobi system, admissible coboundaries, and the
//! classification of solutions modulo coboundaries.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::LieAlgebraSpec;
use crate::linalg::{Echelon, SparseVec};
use crate::poly::{parse_poly, var_list, MultiPoly, PolyJson, Rational};

pub const T: &str = "t";

/// Index of the pair `(i, j)`, `i < j`, in lexicographic order.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

pub fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| ((i + 1)..n).map(move |j| (i, j)))
}

/// Antisymmetric matrix of polynomials in `t` (and possibly free parameters).
#[derive(Clone, PartialEq, Eq)]
pub struct InfExponent {
    dim: usize,
    entries: BTreeMap<(usize, usize), MultiPoly>,
}

impl InfExponent {
    pub fn zero(dim: usize) -> Self {
        InfExponent {
            dim,
            entries: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `Xi_ij`, with `Xi_ji = -Xi_ij` and `Xi_ii = 0`.
    pub fn get(&self, i: usize, j: usize) -> MultiPoly {
        if i == j {
            return MultiPoly::zero();
        }
        if i < j {
            self.entries.get(&(i, j)).cloned().unwrap_or_default()
        } else {
            self.entries.get(&(j, i)).map(|p| p.neg()).unwrap_or_default()
        }
    }

    /// Set `Xi_ij` (and implicitly `Xi_ji = -p`).
    pub fn set(&mut self, i: usize, j: usize, p: MultiPoly) -> Result<()> {
        if i >= self.dim || j >= self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: i.max(j) + 1,
            });
        }
        if i == j {
            if p.is_zero() {
                return Ok(());
            }
            return Err(Error::InvalidParameter(format!(
                "diagonal entry ({i}, {i}) must vanish"
            )));
        }
        let (key, val) = if i < j { ((i, j), p) } else { ((j, i), p.neg()) };
        if val.is_zero() {
            self.entries.remove(&key);
        } else {
            self.entries.insert(key, val);
        }
        Ok(())
    }

    /// Nonzero upper-triangular entries.
    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &MultiPoly)> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn add(&self, o: &InfExponent) -> InfExponent {
        let mut out = self.clone();
        for (&(i, j), p) in &o.entries {
            let v = out.get(i, j).add(p);
            out.set(i, j, v).expect("same shape");
        }
        out
    }

    pub fn scale(&self, c: &MultiPoly) -> InfExponent {
        let mut out = InfExponent::zero(self.dim);
        for (&(i, j), p) in &self.entries {
            out.set(i, j, p.mul(c)).expect("same shape");
        }
        out
    }

    /// `Xi(x, e_k)` for a sparse vector `x`.
    fn eval_left(&self, x: &SparseVec, k: usize) -> MultiPoly {
        let mut acc = MultiPoly::zero();
        for (l, c) in x {
            let e = self.get(*l, k);
            if !e.is_zero() {
                acc = acc.add(&e.scale(c));
            }
        }
        acc
    }

    /// Coefficient vector in the unknowns of a Jacobi system of degree `d`.
    /// Errors if an entry has a free parameter or exceeds the degree.
    pub fn to_vector(&self, d: usize) -> Result<SparseVec> {
        let mut v = SparseVec::new();
        for (&(i, j), p) in &self.entries {
            let base = pair_index(self.dim, i, j) * (d + 1);
            if p.used_vars().iter().any(|u| u != T) {
                return Err(Error::InvalidParameter(format!(
                    "entry ({i}, {j}) is not a polynomial in t alone"
                )));
            }
            for q in 0..=p.degree_in(T).unwrap_or(0) as usize {
                let c = p.coeff_of(T, q as u16).constant_term();
                if c.is_zero() {
                    continue;
                }
                if q > d {
                    return Err(Error::InvalidParameter(format!(
                        "entry ({i}, {j}) has degree above {d}"
                    )));
                }
                v.push((base + q, c));
            }
        }
        v.sort_by_key(|e| e.0);
        Ok(v)
    }

    pub fn from_vector(dim: usize, d: usize, v: &[(usize, Rational)]) -> InfExponent {
        let mut coeffs: BTreeMap<usize, Vec<Rational>> = BTreeMap::new();
        for (u, c) in v {
            let (p, q) = (u / (d + 1), u % (d + 1));
            coeffs
                .entry(p)
                .or_insert_with(|| vec![Rational::zero(); d + 1])[q] = c.clone();
        }
        let mut out = InfExponent::zero(dim);
        let index: Vec<(usize, usize)> = pairs(dim).collect();
        for (p, cs) in coeffs {
            let (i, j) = index[p];
            out.set(i, j, crate::poly::univariate(T, &cs)).expect("in range");
        }
        out
    }

    pub fn to_json(&self) -> InfExponentJson {
        InfExponentJson {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .map(|(&(i, j), p)| EntryJson {
                    i,
                    j,
                    poly: PolyField::Json(p.to_json()),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &InfExponentJson) -> Result<InfExponent> {
        let mut out = InfExponent::zero(j.dim);
        for (n, e) in j.entries.iter().enumerate() {
            let p = match &e.poly {
                PolyField::Json(pj) => MultiPoly::from_json(pj).map_err(|err| Error::Schema {
                    field: format!("entries[{n}].poly"),
                    msg: err.to_string(),
                })?,
                PolyField::Expr(s) => parse_poly(s, None).map_err(|err| Error::Schema {
                    field: format!("entries[{n}].poly"),
                    msg: err.to_string(),
                })?,
            };
            if e.i >= j.dim || e.j >= j.dim || e.i == e.j {
                return Err(Error::Schema {
                    field: format!("entries[{n}]"),
                    msg: format!("bad index pair ({}, {}) for dimension {}", e.i, e.j, j.dim),
                });
            }
            let v = out.get(e.i, e.j).add(&p);
            out.set(e.i, e.j, v)?;
        }
        Ok(out)
    }

    /// Human-readable listing using generator names.
    pub fn display<'a>(&'a self, spec: &'a LieAlgebraSpec) -> impl fmt::Display + 'a {
        struct D<'a>(&'a InfExponent, &'a LieAlgebraSpec);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                if self.0.is_zero() {
                    return writeln!(f, "  (all entries zero)");
                }
                for (&(i, j), p) in &self.0.entries {
                    writeln!(f, "  Xi({}, {}) = {}", self.1.names()[i], self.1.names()[j], p)?;
                }
                Ok(())
            }
        }
        D(self, spec)
    }
}

impl fmt::Debug for InfExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.entries.iter().map(|(k, v)| (k, v.to_string())))
            .finish()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PolyField {
    Json(PolyJson),
    Expr(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntryJson {
    pub i: usize,
    pub j: usize,
    pub poly: PolyField,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InfExponentJson {
    pub dim: usize,
    pub entries: Vec<EntryJson>,
}

/// Residual of the generalized Jacobi identity on every triple `i<j<k`:
///
/// `Xi([e_i,e_j],e_k) + Xi([e_j,e_k],e_i) + Xi([e_k,e_i],e_j)
///  + eps_i Xi_jk' + eps_j Xi_ki' + eps_k Xi_ij'`
///
/// Only nonzero residuals are returned.
pub fn cocycle_residual(
    spec: &LieAlgebraSpec,
    xi: &InfExponent,
) -> Result<Vec<((usize, usize, usize), MultiPoly)>> {
    let n = spec.dim();
    if xi.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: xi.dim(),
        });
    }
    let dt = |p: MultiPoly| p.diff_or_zero(T);
    let mut out = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                let mut r = xi.eval_left(spec.structure(i, j), k);
                r = r.add(&xi.eval_left(spec.structure(j, k), i));
                r = r.add(&xi.eval_left(spec.structure(k, i), j));
                for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                    let e = spec.eps(a);
                    if !e.is_zero() {
                        r = r.add(&dt(xi.get(b, c)).scale(e));
                    }
                }
                if !r.is_zero() {
                    out.push(((i, j, k), r));
                }
            }
        }
    }
    Ok(out)
}

/// Homogeneous linear system for the coefficients of `Xi_ij(t)` up to
/// degree `D`. Unknown `pair * (D+1) + q` is the `t^q` coefficient of the
/// `pair`-th entry in lexicographic order.
#[derive(Debug, Clone)]
pub struct JacobiSystem {
    pub dim: usize,
    pub degree: usize,
    pub unknowns: usize,
    pub rows: Vec<SparseVec>,
    /// `(triple, power of t)` for each row.
    pub labels: Vec<((usize, usize, usize), usize)>,
}

pub fn build_jacobi_system(spec: &LieAlgebraSpec, d: usize) -> JacobiSystem {
    let n = spec.dim();
    let width = d + 1;
    let npairs = n * n.saturating_sub(1) / 2;
    // (unknown base, sign) for Xi_ab
    let slot = |a: usize, b: usize| -> Option<(usize, i64)> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Some((pair_index(n, a, b) * width, 1)),
            std::cmp::Ordering::Greater => Some((pair_index(n, b, a) * width, -1)),
            std::cmp::Ordering::Equal => None,
        }
    };
    let mut rows = Vec::new();
    let mut labels = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                let mut per_power: Vec<BTreeMap<usize, Rational>> = vec![BTreeMap::new(); width];
                for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                    for (l, coef) in spec.structure(a, b) {
                        if let Some((base, s)) = slot(*l, c) {
                            let v = coef * &Rational::from_int(s);
                            for (q, row) in per_power.iter_mut().enumerate() {
                                *row.entry(base + q).or_insert_with(Rational::zero) += &v;
                            }
                        }
                    }
                    // eps_a * d/dt Xi_bc
                    let e = spec.eps(a);
                    if !e.is_zero() {
                        let (base, s) = slot(b, c).expect("distinct");
                        for q in 0..d {
                            let v = e * &Rational::from_int(s * (q as i64 + 1));
                            *per_power[q]
                                .entry(base + q + 1)
                                .or_insert_with(Rational::zero) += &v;
                        }
                    }
                }
                for (q, row) in per_power.into_iter().enumerate() {
                    let r: SparseVec = row.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                    if !r.is_empty() {
                        rows.push(r);
                        labels.push(((i, j, k), q));
                    }
                }
            }
        }
    }
    JacobiSystem {
        dim: n,
        degree: d,
        unknowns: npairs * width,
        rows,
        labels,
    }
}

impl JacobiSystem {
    fn echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.unknowns);
        for r in &self.rows {
            e.insert(r);
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }
}

/// Exact nullspace of the system, as coefficient vectors.
pub fn solve_cocycles_vectors(system: &JacobiSystem) -> Vec<SparseVec> {
    system.echelon().rref().nullspace()
}

/// Basis of all polynomial solutions of degree at most `D`.
pub fn solve_cocycles(system: &JacobiSystem) -> Vec<InfExponent> {
    solve_cocycles_vectors(system)
        .iter()
        .map(|v| InfExponent::from_vector(system.dim, system.degree, v))
        .collect()
}

/// One polynomial `Lambda_k(t)` per generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearForm {
    pub components: Vec<MultiPoly>,
}

impl LinearForm {
    pub fn zero(n: usize) -> Self {
        LinearForm {
            components: vec![MultiPoly::zero(); n],
        }
    }

    pub fn constant(values: &[Rational]) -> Self {
        LinearForm {
            components: values.iter().map(|c| MultiPoly::constant(c.clone())).collect(),
        }
    }
}

/// Which linear forms may be used as coboundaries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Admissibility {
    /// `eps_i Lambda_i' = 0` for every basis generator: a form is constant
    /// along the flow of each generator it is evaluated on.
    #[default]
    Generatorwise,
    /// `eps_i Lambda_j' + eps_j Lambda_i' = 0` for all `i, j`: the same
    /// condition for every element of the algebra.
    Symmetrized,
}

impl std::str::FromStr for Admissibility {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "generatorwise" => Ok(Admissibility::Generatorwise),
            "symmetrized" => Ok(Admissibility::Symmetrized),
            _ => Err(Error::InvalidParameter(format!("unknown admissibility `{s}`"))),
        }
    }
}

impl fmt::Display for Admissibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Admissibility::Generatorwise => write!(f, "generatorwise"),
            Admissibility::Symmetrized => write!(f, "symmetrized"),
        }
    }
}

fn constraint_pairs(n: usize, mode: Admissibility) -> Vec<(usize, usize)> {
    match mode {
        Admissibility::Generatorwise => (0..n).map(|i| (i, i)).collect(),
        Admissibility::Symmetrized => (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect(),
    }
}

/// First violated constraint `eps_i Lambda_j' + eps_j Lambda_i' = 0` among
/// those required by `mode`.
pub fn admissibility_violation(
    spec: &LieAlgebraSpec,
    l: &LinearForm,
    mode: Admissibility,
) -> Option<(usize, usize)> {
    let n = spec.dim();
    let d: Vec<MultiPoly> = l.components.iter().map(|p| p.diff_or_zero(T)).collect();
    constraint_pairs(n, mode).into_iter().find(|&(i, j)| {
        !d[j].scale(spec.eps(i)).add(&d[i].scale(spec.eps(j))).is_zero()
    })
}

/// `d[Lambda]_ij = -eps_i Lambda_j' + eps_j Lambda_i' - sum_k c_ij^k Lambda_k`
pub fn coboundary(spec: &LieAlgebraSpec, l: &LinearForm) -> Result<InfExponent> {
    coboundary_with(spec, l, Admissibility::default())
}

pub fn coboundary_with(
    spec: &LieAlgebraSpec,
    l: &LinearForm,
    mode: Admissibility,
) -> Result<InfExponent> {
    let n = spec.dim();
    if l.components.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: l.components.len(),
        });
    }
    if let Some((i, j)) = admissibility_violation(spec, l, mode) {
        return Err(Error::Inadmissible { i, j });
    }
    let d: Vec<MultiPoly> = l.components.iter().map(|p| p.diff_or_zero(T)).collect();
    let mut out = InfExponent::zero(n);
    for (i, j) in pairs(n) {
        let mut v = d[i].scale(spec.eps(j)).sub(&d[j].scale(spec.eps(i)));
        for (k, c) in spec.structure(i, j) {
            v = v.sub(&l.components[*k].scale(c));
        }
        out.set(i, j, v)?;
    }
    Ok(out)
}

/// Basis of admissible linear forms with components of degree at most `D`.
pub fn admissible_forms(spec: &LieAlgebraSpec, d: usize, mode: Admissibility) -> Vec<LinearForm> {
    let n = spec.dim();
    let width = d + 1;
    // unknown k*(D+1)+q: t^q coefficient of Lambda_k
    let mut rows = Vec::new();
    for (i, j) in constraint_pairs(n, mode) {
        {
            for q in 0..d {
                let mut row: BTreeMap<usize, Rational> = BTreeMap::new();
                let f = Rational::from_int(q as i64 + 1);
                for (a, b) in [(i, j), (j, i)] {
                    let e = spec.eps(a);
                    if !e.is_zero() {
                        *row.entry(b * width + q + 1).or_insert_with(Rational::zero) += &(e * &f);
                    }
                }
                let r: SparseVec = row.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                if !r.is_empty() {
                    rows.push(r);
                }
            }
        }
    }
    crate::linalg::nullspace(n * width, &rows)
        .into_iter()
        .map(|v| {
            let mut comps = vec![vec![Rational::zero(); width]; n];
            for (u, c) in v {
                comps[u / width][u % width] = c;
            }
            LinearForm {
                components: comps
                    .iter()
                    .map(|cs| crate::poly::univariate(T, cs))
                    .collect(),
            }
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct CocycleClassification {
    pub degree_bound: usize,
    pub solution_basis: Vec<InfExponent>,
    pub coboundary_basis: Vec<InfExponent>,
    /// A choice of representatives of the classes.
    pub class_basis: Vec<InfExponent>,
    pub solution_dim: usize,
    pub coboundary_dim: usize,
    pub class_dim: usize,
    /// Names `c1..ck` of the class coordinates.
    pub params: Vec<String>,
    /// `sum_k c_k * class_basis[k]`
    pub general: InfExponent,
    /// Class dimension observed at `degree_bound + 1`.
    pub class_dim_next: usize,
    pub inconclusive: bool,
    pub warnings: Vec<String>,
}

struct Quotient {
    solutions: Vec<SparseVec>,
    coboundaries: Vec<SparseVec>,
    classes: Vec<SparseVec>,
}

/// Coboundaries `d[Lambda]` whose entries have degree at most `d`.
///
/// A low-degree coboundary may come from a form of higher degree (the time
/// derivative lowers degrees), so forms up to degree `d + dim` are used and
/// the span is intersected with the degree-`d` part: with the high-degree
/// coordinates ordered first, the echelon rows pivoting in the low block
/// span exactly that intersection.
pub fn coboundary_vectors(spec: &LieAlgebraSpec, d: usize, mode: Admissibility) -> Result<Vec<SparseVec>> {
    let n = spec.dim();
    let npairs = n * n.saturating_sub(1) / 2;
    let lmax = d + n;
    let hi = lmax - d;
    let low_base = npairs * hi;
    let mut ech = Echelon::new(low_base + npairs * (d + 1));
    for l in admissible_forms(spec, lmax, mode) {
        let xi = coboundary_with(spec, &l, mode)?;
        let mut v = SparseVec::new();
        for (&(i, j), p) in xi.entries() {
            let pi = pair_index(n, i, j);
            for q in 0..=p.degree_in(T).unwrap_or(0) as usize {
                let c = p.coeff_of(T, q as u16).constant_term();
                if c.is_zero() {
                    continue;
                }
                let col = if q > d {
                    pi * hi + (q - d - 1)
                } else {
                    low_base + pi * (d + 1) + q
                };
                v.push((col, c));
            }
        }
        v.sort_by_key(|e| e.0);
        ech.insert(&v);
    }
    Ok(ech
        .rref()
        .rows()
        .filter(|(p, _)| **p >= low_base)
        .map(|(_, r)| r.iter().map(|(c, v)| (c - low_base, v.clone())).collect())
        .collect())
}

fn quotient(spec: &LieAlgebraSpec, d: usize, mode: Admissibility) -> Result<Quotient> {
    let system = build_jacobi_system(spec, d);
    let solutions = solve_cocycles_vectors(&system);
    let coboundaries = coboundary_vectors(spec, d, mode)?;
    let mut cob = Echelon::new(system.unknowns);
    for v in &coboundaries {
        cob.insert(v);
    }
    let cob_rref = cob.rref();
    let mut span = cob;
    let mut classes = Vec::new();
    for s in &solutions {
        if span.insert(s) {
            classes.push(cob_rref.normal_form(s));
        }
    }
    Ok(Quotient {
        solutions,
        coboundaries,
        classes,
    })
}

/// Default degree bound for an algebra: enough for the Milne tables
/// (degree `2m-2`) and at least `m+1`; 2 otherwise.
pub fn default_degree(spec: &LieAlgebraSpec) -> usize {
    let levels = spec
        .names()
        .iter()
        .filter_map(|n| n.strip_prefix('d'))
        .filter_map(|r| r.split_once('_'))
        .filter_map(|(lvl, _)| lvl.parse::<usize>().ok())
        .max();
    match levels {
        Some(m) if spec.index_of("tau").is_some() && m >= 1 => (m + 1).max(2 * m - 2).max(2),
        _ => 2,
    }
}

pub fn classify(spec: &LieAlgebraSpec, d: usize) -> Result<CocycleClassification> {
    classify_with(spec, d, Admissibility::default())
}

pub fn classify_with(
    spec: &LieAlgebraSpec,
    d: usize,
    mode: Admissibility,
) -> Result<CocycleClassification> {
    spec.require_valid()?;
    let n = spec.dim();
    let q = quotient(spec, d, mode)?;
    let next = quotient(spec, d + 1, mode)?;
    let to_xi = |v: &SparseVec| InfExponent::from_vector(n, d, v);
    let class_basis: Vec<InfExponent> = q.classes.iter().map(to_xi).collect();
    let params: Vec<String> = (1..=class_basis.len()).map(|k| format!("c{k}")).collect();
    let mut general = InfExponent::zero(n);
    for (b, p) in class_basis.iter().zip(&params) {
        general = general.add(&b.scale(&MultiPoly::var(p)));
    }
    let mut warnings = spec.validate().warnings;
    let inconclusive = next.classes.len() != q.classes.len();
    if inconclusive {
        warnings.push(format!(
            "inconclusive at degree {d}: class dimension {} at degree {} but {} at degree {}",
            q.classes.len(),
            d,
            next.classes.len(),
            d + 1
        ));
    }
    Ok(CocycleClassification {
        degree_bound: d,
        solution_dim: q.solutions.len(),
        coboundary_dim: q.coboundaries.len(),
        class_dim: q.classes.len(),
        solution_basis: q.solutions.iter().map(to_xi).collect(),
        coboundary_basis: q.coboundaries.iter().map(to_xi).collect(),
        class_basis,
        params,
        general,
        class_dim_next: next.classes.len(),
        inconclusive,
        warnings,
    })
}

/// The table `P^(l,n)(t)`, `0 <= l, n <= m`, with free constants as variables.
#[derive(Debug, Clone)]
pub struct PTable {
    pub m: usize,
    entries: BTreeMap<(usize, usize), MultiPoly>,
    pub constants: Vec<String>,
}

pub fn gamma_name(l: usize, n: usize) -> String {
    if l == 0 {
        format!("gamma_{n}")
    } else {
        format!("gamma_{l}_{n}")
    }
}

impl PTable {
    pub fn get(&self, l: usize, n: usize) -> MultiPoly {
        match l.cmp(&n) {
            std::cmp::Ordering::Equal => MultiPoly::zero(),
            std::cmp::Ordering::Less => self.entries[&(l, n)].clone(),
            std::cmp::Ordering::Greater => self.entries[&(n, l)].neg(),
        }
    }

    /// All constants set to the given values (missing ones to zero).
    pub fn specialize(&self, values: &[(String, Rational)]) -> PTable {
        let vals: Vec<(&str, Rational)> = self
            .constants
            .iter()
            .map(|c| {
                let v = values
                    .iter()
                    .find(|(n, _)| n == c)
                    .map(|(_, v)| v.clone())
                    .unwrap_or_else(Rational::zero);
                (c.as_str(), v)
            })
            .collect();
        PTable {
            m: self.m,
            entries: self
                .entries
                .iter()
                .map(|(k, p)| (*k, p.evaluate(&vals)))
                .collect(),
            constants: Vec::new(),
        }
    }
}

/// Recurrent integration: `P^(0,n) = int P^(0,n-1) + gamma_n` and
/// `P^(l,n) = int (P^(l-1,n) + P^(l,n-1)) + gamma_(l,n)` for `l < n`,
/// in order of increasing `l`.
pub fn milne_p_table(m: usize) -> Result<PTable> {
    if m == 0 {
        return Err(Error::InvalidParameter("m must be at least 1".into()));
    }
    let mut entries: BTreeMap<(usize, usize), MultiPoly> = BTreeMap::new();
    let mut constants = Vec::new();
    let get = |e: &BTreeMap<(usize, usize), MultiPoly>, l: usize, n: usize| -> MultiPoly {
        match l.cmp(&n) {
            std::cmp::Ordering::Equal => MultiPoly::zero(),
            std::cmp::Ordering::Less => e[&(l, n)].clone(),
            std::cmp::Ordering::Greater => e[&(n, l)].neg(),
        }
    };
    for l in 0..m {
        for n in (l + 1)..=m {
            let rhs = if l == 0 {
                get(&entries, 0, n - 1)
            } else {
                get(&entries, l - 1, n).add(&get(&entries, l, n - 1))
            };
            let g = gamma_name(l, n);
            let p = rhs.integrate(T).add(&MultiPoly::var(&g));
            constants.push(g);
            entries.insert((l, n), p);
        }
    }
    // fixed variable order: t, then constants in creation order
    let mut names = vec![T.to_string()];
    names.extend(constants.iter().cloned());
    let vars = var_list(&names);
    let entries = entries
        .into_iter()
        .map(|(k, p)| (k, p.embed(&vars).expect("declared")))
        .collect();
    Ok(PTable {
        m,
        entries,
        constants,
    })
}
