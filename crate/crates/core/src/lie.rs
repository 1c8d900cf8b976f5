//! Finite-dimensional Lie algebras with a time action.
//!
//! Generator `a_i` acts on functions of `t` as `eps_i * d/dt`. Brackets are
//! stored as a dense antisymmetric table of sparse coefficient vectors.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::linalg::SparseVec;
use crate::poly::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebraSpec {
    names: Vec<String>,
    table: Vec<Vec<SparseVec>>,
    time_action: Vec<Rational>,
    multiple_time: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    /// Pairs `(i, j)` whose stored brackets are not antisymmetric.
    pub antisymmetry: Vec<(usize, usize)>,
    /// Triples `i<j<k` with nonzero Jacobi sum, and that sum.
    pub jacobi: Vec<((usize, usize, usize), SparseVec)>,
    /// Pairs whose bracket does not commute with the time action.
    pub time_action: Vec<(usize, usize)>,
    pub warnings: Vec<String>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.antisymmetry.is_empty() && self.jacobi.is_empty() && self.time_action.is_empty()
    }
}

fn add_into(v: &mut SparseVec, k: usize, c: &Rational) {
    match v.binary_search_by_key(&k, |e| e.0) {
        Ok(p) => {
            v[p].1 += c;
            if v[p].1.is_zero() {
                v.remove(p);
            }
        }
        Err(p) => {
            if !c.is_zero() {
                v.insert(p, (k, c.clone()));
            }
        }
    }
}

impl LieAlgebraSpec {
    /// Build from bracket entries `[e_i, e_j] ∋ c e_k`. An entry for `(j, i)`
    /// is implied by one for `(i, j)`; entries given in both orders must agree
    /// up to sign, otherwise the pair shows up in [`ValidationReport::antisymmetry`].
    pub fn new(
        names: Vec<String>,
        brackets: &[(usize, usize, usize, Rational)],
        time_action: Vec<Rational>,
    ) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::Schema {
                field: "dim".into(),
                msg: "must be positive".into(),
            });
        }
        for (a, name) in names.iter().enumerate() {
            if names[..a].contains(name) {
                return Err(Error::Schema {
                    field: format!("names[{a}]"),
                    msg: format!("duplicate generator name `{name}`"),
                });
            }
        }
        if time_action.len() != n {
            return Err(Error::Schema {
                field: "time_action".into(),
                msg: format!("expected {n} entries, got {}", time_action.len()),
            });
        }
        let mut table = vec![vec![SparseVec::new(); n]; n];
        for (idx, (i, j, k, c)) in brackets.iter().enumerate() {
            for (name, v) in [("i", i), ("j", j), ("k", k)] {
                if *v >= n {
                    return Err(Error::Schema {
                        field: format!("brackets[{idx}].{name}"),
                        msg: format!("index {v} out of range for dimension {n}"),
                    });
                }
            }
            add_into(&mut table[*i][*j], *k, c);
        }
        Ok(LieAlgebraSpec {
            names,
            table,
            time_action,
            multiple_time: false,
        })
        .map(|s| s.symmetrized())
    }

    // fill in missing (j,i) entries; keep inconsistent pairs for validate
    fn symmetrized(mut self) -> Self {
        let n = self.dim();
        for i in 0..n {
            for j in (i + 1)..n {
                let a = self.table[i][j].clone();
                let b = self.table[j][i].clone();
                if b.is_empty() {
                    self.table[j][i] = a.iter().map(|(k, c)| (*k, -c)).collect();
                } else if a.is_empty() {
                    self.table[i][j] = b.iter().map(|(k, c)| (*k, -c)).collect();
                }
            }
        }
        self
    }

    /// Allow more than one generator with a nonzero time action.
    pub fn with_multiple_time_generators(mut self, allow: bool) -> Self {
        self.multiple_time = allow;
        self
    }

    pub fn allows_multiple_time_generators(&self) -> bool {
        self.multiple_time
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn time_action(&self) -> &[Rational] {
        &self.time_action
    }

    pub fn eps(&self, i: usize) -> &Rational {
        &self.time_action[i]
    }

    /// Indices of generators that act on time.
    pub fn time_generators(&self) -> Vec<usize> {
        (0..self.dim())
            .filter(|&i| !self.time_action[i].is_zero())
            .collect()
    }

    /// `[e_i, e_j]` as a sparse coefficient vector.
    pub fn structure(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i][j]
    }

    /// `c_ij^k`
    pub fn c(&self, i: usize, j: usize, k: usize) -> Rational {
        match self.table[i][j].binary_search_by_key(&k, |e| e.0) {
            Ok(p) => self.table[i][j][p].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    /// Stored entries `(i, j, k, c)` with `i < j`, in lexicographic order.
    pub fn bracket_entries(&self) -> Vec<(usize, usize, usize, Rational)> {
        let mut out = Vec::new();
        for i in 0..self.dim() {
            for j in (i + 1)..self.dim() {
                for (k, c) in &self.table[i][j] {
                    out.push((i, j, *k, c.clone()));
                }
            }
        }
        out
    }

    pub fn bracket(&self, u: &[Rational], v: &[Rational]) -> Result<Vec<Rational>> {
        let n = self.dim();
        for w in [u, v] {
            if w.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: w.len(),
                });
            }
        }
        let mut out = vec![Rational::zero(); n];
        for i in 0..n {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if v[j].is_zero() || i == j {
                    continue;
                }
                let f = &u[i] * &v[j];
                for (k, c) in &self.table[i][j] {
                    out[*k] += &(&f * c);
                }
            }
        }
        Ok(out)
    }

    /// `[x, e_k]` for a sparse `x`.
    pub fn bracket_sparse_basis(&self, x: &SparseVec, k: usize) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, a) in x {
            for (l, c) in &self.table[*i][k] {
                add_into(&mut out, *l, &(a * c));
            }
        }
        out
    }

    pub fn validate(&self) -> ValidationReport {
        let n = self.dim();
        let mut rep = ValidationReport::default();
        for i in 0..n {
            if !self.table[i][i].is_empty() {
                rep.antisymmetry.push((i, i));
            }
            for j in (i + 1)..n {
                let neg: SparseVec = self.table[j][i].iter().map(|(k, c)| (*k, -c)).collect();
                if neg != self.table[i][j] {
                    rep.antisymmetry.push((i, j));
                }
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    let mut s = self.bracket_sparse_basis(&self.table[i][j], k);
                    for (l, c) in self.bracket_sparse_basis(&self.table[j][k], i) {
                        add_into(&mut s, l, &c);
                    }
                    for (l, c) in self.bracket_sparse_basis(&self.table[k][i], j) {
                        add_into(&mut s, l, &c);
                    }
                    if !s.is_empty() {
                        rep.jacobi.push(((i, j, k), s));
                    }
                }
            }
        }
        // d/dt commutes with itself, so the time action of a bracket must vanish
        for i in 0..n {
            for j in (i + 1)..n {
                let mut e = Rational::zero();
                for (k, c) in &self.table[i][j] {
                    e += &(c * &self.time_action[*k]);
                }
                if !e.is_zero() {
                    rep.time_action.push((i, j));
                }
            }
        }
        let tg = self.time_generators();
        if tg.len() > 1 {
            rep.warnings.push(format!(
                "{} generators act on time; results are not covered by the single time-translation setting",
                tg.len()
            ));
        }
        rep
    }

    /// Validation as a hard check: errors on any defect, and on several
    /// time-acting generators unless explicitly allowed.
    pub fn require_valid(&self) -> Result<()> {
        let rep = self.validate();
        if let Some((i, j)) = rep.antisymmetry.first() {
            return Err(Error::Algebra(format!(
                "brackets are not antisymmetric at ({}, {})",
                self.names[*i], self.names[*j]
            )));
        }
        if let Some(((i, j, k), _)) = rep.jacobi.first() {
            return Err(Error::Algebra(format!(
                "Jacobi identity fails on ({}, {}, {})",
                self.names[*i], self.names[*j], self.names[*k]
            )));
        }
        if let Some((i, j)) = rep.time_action.first() {
            return Err(Error::Algebra(format!(
                "time action of [{}, {}] does not vanish",
                self.names[*i], self.names[*j]
            )));
        }
        if self.time_generators().len() > 1 && !self.multiple_time {
            return Err(Error::Schema {
                field: "time_action".into(),
                msg: "at most one generator may act on time (set multiple_time_generators to override)"
                    .into(),
            });
        }
        Ok(())
    }

    pub fn to_json(&self) -> AlgebraJson {
        AlgebraJson {
            dim: self.dim(),
            names: self.names.clone(),
            brackets: self
                .bracket_entries()
                .into_iter()
                .map(|(i, j, k, c)| BracketJson {
                    i,
                    j,
                    k,
                    num: NumField::Text(c.numer().to_string()),
                    den: NumField::Text(c.denom().to_string()),
                })
                .collect(),
            time_action: self
                .time_action
                .iter()
                .map(|c| NumField::Text(c.to_string()))
                .collect(),
            multiple_time_generators: if self.multiple_time { Some(true) } else { None },
        }
    }

    pub fn from_json(j: &AlgebraJson) -> Result<Self> {
        if j.dim == 0 {
            return Err(Error::Schema {
                field: "dim".into(),
                msg: "must be positive".into(),
            });
        }
        if j.names.len() != j.dim {
            return Err(Error::Schema {
                field: "names".into(),
                msg: format!("expected {} names, got {}", j.dim, j.names.len()),
            });
        }
        let mut entries = Vec::with_capacity(j.brackets.len());
        for (idx, b) in j.brackets.iter().enumerate() {
            let num = b.num.as_rational(&format!("brackets[{idx}].num"))?;
            let den = b.den.as_rational(&format!("brackets[{idx}].den"))?;
            if den.is_zero() {
                return Err(Error::Schema {
                    field: format!("brackets[{idx}].den"),
                    msg: "zero denominator".into(),
                });
            }
            if b.i == b.j {
                return Err(Error::Schema {
                    field: format!("brackets[{idx}]"),
                    msg: "i and j must differ".into(),
                });
            }
            entries.push((b.i, b.j, b.k, num / den));
        }
        let eps = j
            .time_action
            .iter()
            .enumerate()
            .map(|(i, v)| v.as_rational(&format!("time_action[{i}]")))
            .collect::<Result<Vec<_>>>()?;
        let spec = LieAlgebraSpec::new(j.names.clone(), &entries, eps)?
            .with_multiple_time_generators(j.multiple_time_generators.unwrap_or(false));
        if spec.time_generators().len() > 1 && !spec.multiple_time {
            return Err(Error::Schema {
                field: "time_action".into(),
                msg: "at most one generator may act on time (set multiple_time_generators to override)"
                    .into(),
            });
        }
        Ok(spec)
    }

    pub fn parse_json(text: &str) -> Result<Self> {
        let j: AlgebraJson = serde_json::from_str(text).map_err(|e| Error::Schema {
            field: serde_field(&e.to_string()),
            msg: e.to_string(),
        })?;
        Self::from_json(&j)
    }

    /// Canonical JSON text, used for fingerprints.
    pub fn canonical_json(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("serializable")
    }

    /// SHA-256 of the canonical JSON, hex encoded.
    pub fn fingerprint(&self) -> String {
        let digest = Sha256::digest(self.canonical_json().as_bytes());
        format!("{digest:x}")
    }

    /// Restriction to a subset of generators closed under brackets.
    pub fn subalgebra(&self, idx: &[usize]) -> Result<LieAlgebraSpec> {
        let pos = |k: usize| idx.iter().position(|&x| x == k);
        let mut entries = Vec::new();
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                if a >= b {
                    continue;
                }
                for (k, c) in &self.table[i][j] {
                    let p = pos(*k).ok_or_else(|| {
                        Error::Algebra(format!(
                            "[{}, {}] leaves the chosen generators",
                            self.names[i], self.names[j]
                        ))
                    })?;
                    entries.push((a, b, p, c.clone()));
                }
            }
        }
        LieAlgebraSpec::new(
            idx.iter().map(|&i| self.names[i].clone()).collect(),
            &entries,
            idx.iter().map(|&i| self.time_action[i].clone()).collect(),
        )
    }
}

/// Attempt to pull a field name out of a serde error message.
fn serde_field(msg: &str) -> String {
    if let Some(rest) = msg.split("field `").nth(1) {
        if let Some(name) = rest.split('`').next() {
            return name.to_string();
        }
    }
    "<document>".to_string()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum NumField {
    Int(i64),
    Text(String),
}

impl NumField {
    fn as_rational(&self, field: &str) -> Result<Rational> {
        match self {
            NumField::Int(n) => Ok(Rational::from_int(*n)),
            NumField::Text(s) => s.parse().map_err(|_| Error::Schema {
                field: field.to_string(),
                msg: format!("not a rational number: `{s}`"),
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketJson {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub num: NumField,
    pub den: NumField,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraJson {
    pub dim: usize,
    pub names: Vec<String>,
    pub brackets: Vec<BracketJson>,
    pub time_action: Vec<NumField>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multiple_time_generators: Option<bool>,
}

/// Algebras shipped with the tool.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Catalog {
    Galilean,
    Milne(usize),
    Abelian(usize),
    Heisenberg,
}

impl fmt::Display for Catalog {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Catalog::Galilean => write!(f, "galilean"),
            Catalog::Milne(m) => write!(f, "milne:{m}"),
            Catalog::Abelian(n) => write!(f, "abelian:{n}"),
            Catalog::Heisenberg => write!(f, "heisenberg"),
        }
    }
}

impl FromStr for Catalog {
    type Err = Error;

    /// `galilean`, `milne:M`, `abelian:N`, `heisenberg`; `milne(2)` also works.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, arg) = match s.find([':', '(']) {
            Some(p) => (&s[..p], Some(s[p + 1..].trim_end_matches(')'))),
            None => (s, None),
        };
        let num = |a: Option<&str>| -> Result<usize> {
            let a = a.ok_or_else(|| {
                Error::InvalidParameter(format!("catalog algebra `{head}` needs a parameter"))
            })?;
            let v: usize = a
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("bad parameter `{a}`")))?;
            if v == 0 {
                return Err(Error::InvalidParameter(format!(
                    "parameter of `{head}` must be at least 1"
                )));
            }
            Ok(v)
        };
        match head {
            "galilean" if arg.is_none() => Ok(Catalog::Galilean),
            "heisenberg" if arg.is_none() => Ok(Catalog::Heisenberg),
            "milne" => Ok(Catalog::Milne(num(arg)?)),
            "abelian" => Ok(Catalog::Abelian(num(arg)?)),
            _ => Err(Error::InvalidParameter(format!("unknown catalog algebra `{s}`"))),
        }
    }
}

pub fn catalog(c: Catalog) -> Result<LieAlgebraSpec> {
    match c {
        Catalog::Galilean => Ok(kinematic(&["b", "d"])),
        Catalog::Milne(m) => {
            if m == 0 {
                return Err(Error::InvalidParameter("milne needs m >= 1".into()));
            }
            let prefixes: Vec<String> = (0..=m).map(|n| format!("d{n}_")).collect();
            let refs: Vec<&str> = prefixes.iter().map(|s| s.as_str()).collect();
            Ok(kinematic(&refs))
        }
        Catalog::Abelian(n) => {
            if n == 0 {
                return Err(Error::InvalidParameter("abelian needs n >= 1".into()));
            }
            LieAlgebraSpec::new(
                (1..=n).map(|i| format!("e{i}")).collect(),
                &[],
                vec![Rational::zero(); n],
            )
        }
        Catalog::Heisenberg => LieAlgebraSpec::new(
            vec!["x".into(), "p".into(), "z".into()],
            &[(0, 1, 2, Rational::one())],
            vec![Rational::zero(); 3],
        ),
    }
}

pub const ROTATIONS: [(usize, usize); 3] = [(1, 2), (1, 3), (2, 3)];

/// Rotations, then one spatial vector triple per level, then `tau`, with
/// `[level n, tau] = level n-1`.
fn kinematic(levels: &[&str]) -> LieAlgebraSpec {
    let nl = levels.len();
    let dim = 3 + 3 * nl + 1;
    let tau = dim - 1;
    let mut names: Vec<String> = ROTATIONS.iter().map(|(i, j)| format!("a{i}{j}")).collect();
    for p in levels {
        for i in 1..=3 {
            names.push(format!("{p}{i}"));
        }
    }
    names.push("tau".into());
    // signed index of a_ij, with a_ji = -a_ij and a_ii = 0
    let rot = |i: usize, j: usize| -> Option<(usize, i64)> {
        if i == j {
            return None;
        }
        let (a, b, s) = if i < j { (i, j, 1) } else { (j, i, -1) };
        ROTATIONS.iter().position(|&r| r == (a, b)).map(|p| (p, s))
    };
    let vec_idx = |level: usize, i: usize| 3 + 3 * level + (i - 1);
    let d = |a: usize, b: usize| (a == b) as i64;
    let mut entries: Vec<(usize, usize, usize, Rational)> = Vec::new();
    let mut push = |x: usize, y: usize, z: usize, c: i64| {
        if c != 0 {
            entries.push((x, y, z, Rational::from_int(c)));
        }
    };
    for (p, &(i, j)) in ROTATIONS.iter().enumerate() {
        for (q, &(k, l)) in ROTATIONS.iter().enumerate() {
            if p >= q {
                continue;
            }
            // [a_ij, a_kl] = d_jk a_il - d_ik a_jl + d_il a_jk - d_jl a_ik
            let mut acc = [0i64; 3];
            for (coef, (u, v)) in [
                (d(j, k), (i, l)),
                (-d(i, k), (j, l)),
                (d(i, l), (j, k)),
                (-d(j, l), (i, k)),
            ] {
                if coef == 0 {
                    continue;
                }
                if let Some((r, s)) = rot(u, v) {
                    acc[r] += coef * s;
                }
            }
            for (r, c) in acc.iter().enumerate() {
                push(p, q, r, *c);
            }
        }
        for level in 0..nl {
            for k in 1..=3 {
                // [a_ij, v_k] = d_jk v_i - d_ik v_j
                let x = vec_idx(level, k);
                if d(j, k) != 0 {
                    push(p, x, vec_idx(level, i), 1);
                }
                if d(i, k) != 0 {
                    push(p, x, vec_idx(level, j), -1);
                }
            }
        }
    }
    for level in 1..nl {
        for k in 1..=3 {
            push(vec_idx(level, k), tau, vec_idx(level - 1, k), 1);
        }
    }
    let mut eps = vec![Rational::zero(); dim];
    eps[tau] = Rational::one();
    LieAlgebraSpec::new(names, &entries, eps).expect("catalog algebra is well formed")
}
