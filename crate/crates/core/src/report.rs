//! Serializable reports for the command line tool. Every value is stored as
//! text or an integer, so a report survives a JSON round trip byte for byte.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::cocycle::{
    cocycle_residual, milne_p_table, Admissibility, CocycleClassification, InfExponent,
};
use crate::error::Result;
use crate::group::{exponent_from_theta, infinitesimal_from_exponent, GroupModel, PhaseFunction};
use crate::lie::LieAlgebraSpec;
use crate::poly::Rational;
use crate::realization::{
    acceleration_block, identify_constants, realizable_subspace, xi_matrix_from_theta,
    RealizableSubspace,
};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
pub const TOOL: &str = "raycalc";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntryReport {
    pub i: usize,
    pub j: usize,
    pub a: String,
    pub b: String,
    pub value: String,
}

fn entries(xi: &InfExponent, names: &[String]) -> Vec<EntryReport> {
    xi.entries()
        .map(|(&(i, j), p)| EntryReport {
            i,
            j,
            a: names[i].clone(),
            b: names[j].clone(),
            value: p.to_string(),
        })
        .collect()
}

fn write_entries(out: &mut String, es: &[EntryReport]) {
    if es.is_empty() {
        out.push_str("    (all entries zero)\n");
    }
    for e in es {
        let _ = writeln!(out, "    Xi({}, {}) = {}", e.a, e.b, e.value);
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassReport {
    pub name: String,
    pub entries: Vec<EntryReport>,
    /// Only for Milne algebras.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub realizable: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassifyReport {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub algebra: String,
    pub fingerprint: String,
    pub generators: Vec<String>,
    pub admissibility: String,
    pub degree_bound: usize,
    pub solution_dim: usize,
    pub coboundary_dim: usize,
    pub class_dim: usize,
    pub class_dim_next: usize,
    pub inconclusive: bool,
    pub warnings: Vec<String>,
    pub classes: Vec<ClassReport>,
}

/// Number of acceleration levels when the generator names follow the Milne
/// catalog (`a*` rotations, `d{n}_{i}`, `tau`).
fn milne_levels(spec: &LieAlgebraSpec) -> Option<usize> {
    let names = spec.names();
    let ds: Vec<&String> = names.iter().filter(|n| n.starts_with('d')).collect();
    let m = ds.len() / 3;
    if m < 2 || spec.index_of("tau").is_none() {
        return None;
    }
    for n in 0..m {
        for i in 1..=3 {
            spec.index_of(&format!("d{n}_{i}"))?;
        }
    }
    Some(m - 1)
}

/// Acceleration block of an exponent on the Milne algebra, in model order.
fn milne_block(spec: &LieAlgebraSpec, m: usize, xi: &InfExponent) -> Result<InfExponent> {
    let idx: Vec<usize> = (0..=m)
        .flat_map(|n| (1..=3).map(move |i| (n, i)))
        .map(|(n, i)| spec.index_of(&format!("d{n}_{i}")).expect("checked"))
        .collect();
    let mut out = InfExponent::zero(idx.len());
    for a in 0..idx.len() {
        for b in (a + 1)..idx.len() {
            out.set(a, b, xi.get(idx[a], idx[b]))?;
        }
    }
    Ok(out)
}

fn is_realizable(sub: &RealizableSubspace, block: &InfExponent) -> Result<bool> {
    Ok(match identify_constants(sub.m, block)? {
        Some(values) => sub.contains(&values),
        None => false,
    })
}

impl ClassifyReport {
    pub fn build(
        label: &str,
        spec: &LieAlgebraSpec,
        mode: Admissibility,
        c: &CocycleClassification,
    ) -> Result<Self> {
        let names = spec.names();
        let sub = match milne_levels(spec) {
            Some(m) => Some((m, realizable_subspace(m)?)),
            None => None,
        };
        let mut classes = Vec::new();
        for (k, xi) in c.class_basis.iter().enumerate() {
            let realizable = match &sub {
                Some((m, s)) => Some(is_realizable(s, &milne_block(spec, *m, xi)?)?),
                None => None,
            };
            classes.push(ClassReport {
                name: c.params.get(k).cloned().unwrap_or_else(|| format!("c{}", k + 1)),
                entries: entries(xi, names),
                realizable,
            });
        }
        Ok(ClassifyReport {
            tool: TOOL.into(),
            version: VERSION.into(),
            command: "classify".into(),
            algebra: label.into(),
            fingerprint: spec.fingerprint(),
            generators: names.to_vec(),
            admissibility: mode.to_string(),
            degree_bound: c.degree_bound,
            solution_dim: c.solution_dim,
            coboundary_dim: c.coboundary_dim,
            class_dim: c.class_dim,
            class_dim_next: c.class_dim_next,
            inconclusive: c.inconclusive,
            warnings: c.warnings.clone(),
            classes,
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} {} classify", self.tool, self.version);
        let _ = writeln!(s, "algebra: {}", self.algebra);
        let _ = writeln!(s, "fingerprint: {}", self.fingerprint);
        let _ = writeln!(s, "generators: {}", self.generators.join(" "));
        let _ = writeln!(s, "admissibility: {}", self.admissibility);
        let _ = writeln!(s, "degree bound: {}", self.degree_bound);
        let _ = writeln!(
            s,
            "solutions: {}  coboundaries: {}",
            self.solution_dim, self.coboundary_dim
        );
        let _ = writeln!(s, "classes: {}", self.class_dim);
        let _ = writeln!(
            s,
            "classes at degree {}: {}",
            self.degree_bound + 1,
            self.class_dim_next
        );
        for w in &self.warnings {
            let _ = writeln!(s, "warning: {w}");
        }
        for c in &self.classes {
            match c.realizable {
                Some(r) => {
                    let _ = writeln!(s, "class {} (realizable: {r}):", c.name);
                }
                None => {
                    let _ = writeln!(s, "class {}:", c.name);
                }
            }
            write_entries(&mut s, &c.entries);
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResidualReport {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub triple: [String; 3],
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckReport {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub algebra: String,
    pub fingerprint: String,
    pub pass: bool,
    pub residuals: Vec<ResidualReport>,
}

impl CheckReport {
    pub fn build(label: &str, spec: &LieAlgebraSpec, xi: &InfExponent) -> Result<Self> {
        let names = spec.names();
        let residuals: Vec<ResidualReport> = cocycle_residual(spec, xi)?
            .into_iter()
            .map(|((i, j, k), p)| ResidualReport {
                i,
                j,
                k,
                triple: [names[i].clone(), names[j].clone(), names[k].clone()],
                value: p.to_string(),
            })
            .collect();
        Ok(CheckReport {
            tool: TOOL.into(),
            version: VERSION.into(),
            command: "check".into(),
            algebra: label.into(),
            fingerprint: spec.fingerprint(),
            pass: residuals.is_empty(),
            residuals,
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} {} check", self.tool, self.version);
        let _ = writeln!(s, "algebra: {}", self.algebra);
        let _ = writeln!(s, "fingerprint: {}", self.fingerprint);
        let _ = writeln!(s, "result: {}", if self.pass { "pass" } else { "fail" });
        for r in &self.residuals {
            let _ = writeln!(
                s,
                "  residual({}, {}, {}) = {}",
                r.triple[0], r.triple[1], r.triple[2], r.value
            );
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateReport {
    pub l: usize,
    pub q: usize,
    pub equations: Vec<[usize; 2]>,
    pub multipliers: Vec<String>,
    pub combination: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ThetaReport {
    pub theta: String,
    pub entries: Vec<EntryReport>,
    /// Class constants when the block has the isotropic Milne form.
    pub constants: Option<Vec<[String; 2]>>,
    pub realizable: bool,
    pub taylor_agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RealizeReport {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub m: usize,
    pub fingerprint: String,
    pub constants: Vec<String>,
    pub constraints: Vec<String>,
    pub dimension: usize,
    pub basis: Vec<Vec<String>>,
    pub certificates: Vec<CertificateReport>,
    pub full_system_rank: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub family: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub theta: Option<ThetaReport>,
}

fn block_names(m: usize) -> Vec<String> {
    (0..=m)
        .flat_map(|n| (1..=3).map(move |i| format!("d{n}_{i}")))
        .collect()
}

impl RealizeReport {
    pub fn build(m: usize, family: Option<&PhaseFunction>, theta: Option<&PhaseFunction>) -> Result<Self> {
        let sub = realizable_subspace(m)?;
        let spec = crate::lie::catalog(crate::lie::Catalog::Milne(m))?;
        let theta = match theta {
            Some(th) => {
                let block = xi_matrix_from_theta(m, th)?;
                let model = GroupModel::milne(m)?;
                let taylor =
                    acceleration_block(m, &infinitesimal_from_exponent(&model, &exponent_from_theta(&model, th)))?;
                let constants = identify_constants(m, &block)?;
                let realizable = match &constants {
                    Some(v) => sub.contains(v),
                    None => false,
                };
                Some(ThetaReport {
                    theta: th.to_string(),
                    entries: entries(&block, &block_names(m)),
                    constants: constants.map(|v| {
                        v.into_iter().map(|(n, c)| [n, c.to_string()]).collect()
                    }),
                    realizable,
                    taylor_agrees: taylor == block,
                })
            }
            None => None,
        };
        Ok(RealizeReport {
            tool: TOOL.into(),
            version: VERSION.into(),
            command: "realize".into(),
            m,
            fingerprint: spec.fingerprint(),
            constants: sub.constants.clone(),
            constraints: sub.constraints.iter().map(|c| format!("{c} = 0")).collect(),
            dimension: sub.dimension(),
            basis: sub
                .basis
                .iter()
                .map(|v| v.iter().map(|c| c.to_string()).collect())
                .collect(),
            certificates: sub
                .certificates
                .iter()
                .map(|c| CertificateReport {
                    l: c.l,
                    q: c.q,
                    equations: c.pairs.iter().map(|&(a, b)| [a, b]).collect(),
                    multipliers: c
                        .multipliers
                        .iter()
                        .map(|y| crate::poly::univariate("t", y.coeffs()).to_string())
                        .collect(),
                    combination: c.combination.to_string(),
                })
                .collect(),
            full_system_rank: sub.full_system_rank,
            family: family.map(|f| f.to_string()),
            theta,
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} {} realize", self.tool, self.version);
        let _ = writeln!(s, "m: {}", self.m);
        let _ = writeln!(s, "fingerprint: {}", self.fingerprint);
        let _ = writeln!(s, "class constants: {}", self.constants.join(" "));
        let _ = writeln!(s, "realizable dimension: {}", self.dimension);
        if self.constraints.is_empty() {
            let _ = writeln!(s, "constraints: none");
        } else {
            let _ = writeln!(s, "constraints:");
            for c in &self.constraints {
                let _ = writeln!(s, "  {c}");
            }
        }
        for c in &self.certificates {
            let eqs: Vec<String> = c.equations.iter().map(|e| format!("({},{})", e[0], e[1])).collect();
            let _ = writeln!(
                s,
                "elimination for gamma_{}_{} over {}: {} = 0",
                c.l,
                c.q,
                eqs.join(" "),
                c.combination
            );
        }
        if let Some(f) = &self.family {
            let _ = writeln!(s, "family theta: {f}");
        }
        if let Some(t) = &self.theta {
            let _ = writeln!(s, "theta: {}", t.theta);
            write_entries(&mut s, &t.entries);
            match &t.constants {
                Some(v) => {
                    let parts: Vec<String> = v.iter().map(|[n, c]| format!("{n} = {c}")).collect();
                    let _ = writeln!(s, "class constants of theta: {}", parts.join(", "));
                }
                None => {
                    let _ = writeln!(s, "class constants of theta: block is not of the form delta_ij P(t)");
                }
            }
            let _ = writeln!(s, "realizable: {}", t.realizable);
            let _ = writeln!(s, "taylor extraction agrees: {}", t.taylor_agrees);
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableEntryReport {
    pub l: usize,
    pub n: usize,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MilneTableReport {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub m: usize,
    pub constants: Vec<String>,
    pub entries: Vec<TableEntryReport>,
}

impl MilneTableReport {
    pub fn build(m: usize) -> Result<Self> {
        let table = milne_p_table(m)?;
        let mut es = Vec::new();
        for l in 0..m {
            for n in (l + 1)..=m {
                es.push(TableEntryReport {
                    l,
                    n,
                    value: table.get(l, n).to_string(),
                });
            }
        }
        Ok(MilneTableReport {
            tool: TOOL.into(),
            version: VERSION.into(),
            command: "milne-table".into(),
            m,
            constants: table.constants.clone(),
            entries: es,
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} {} milne-table", self.tool, self.version);
        let _ = writeln!(s, "m: {}", self.m);
        let _ = writeln!(s, "constants: {}", self.constants.join(" "));
        for e in &self.entries {
            let _ = writeln!(s, "  P^({},{}) = {}", e.l, e.n, e.value);
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GalileanReport {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub mass: String,
    pub theta: String,
    pub exponent: String,
    pub exponent_uses_space: bool,
    pub cocycle_identity_holds: bool,
    pub entries: Vec<EntryReport>,
    pub detected_mass: Option<String>,
}

impl GalileanReport {
    pub fn build(mass: &Rational) -> Result<Self> {
        let model = GroupModel::galilean();
        let theta = crate::realization::galilean_standard_theta(mass);
        let xi = exponent_from_theta(&model, &theta);
        let uses_space = model.space().iter().any(|v| xi.has_var(v) && !xi.diff_or_zero(v).is_zero());
        let identity = crate::group::cocycle_identity_residual(&model, &xi).is_zero();
        let inf = infinitesimal_from_exponent(&model, &xi);
        let names = model.generator_names();
        let detected = identify_constants(1, &acceleration_block(1, &inf)?)?
            .map(|v| v[0].1.to_string());
        Ok(GalileanReport {
            tool: TOOL.into(),
            version: VERSION.into(),
            command: "galilean-demo".into(),
            mass: mass.to_string(),
            theta: theta.to_string(),
            exponent: xi.to_string(),
            exponent_uses_space: uses_space,
            cocycle_identity_holds: identity,
            entries: entries(&inf, names),
            detected_mass: detected,
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} {} galilean-demo", self.tool, self.version);
        let _ = writeln!(s, "mass: {}", self.mass);
        let _ = writeln!(s, "theta: {}", self.theta);
        let _ = writeln!(s, "exponent: {}", self.exponent);
        let _ = writeln!(s, "exponent depends on x or t: {}", self.exponent_uses_space);
        let _ = writeln!(s, "cocycle identity holds: {}", self.cocycle_identity_holds);
        let _ = writeln!(s, "infinitesimal exponent:");
        write_entries(&mut s, &self.entries);
        match &self.detected_mass {
            Some(m) => {
                let _ = writeln!(s, "detected mass: {m}");
            }
            None => {
                let _ = writeln!(s, "detected mass: none");
            }
        }
        s
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json_string<T: Serialize>(r: &T) -> String {
    let mut s = serde_json::to_string_pretty(r).expect("reports serialize");
    s.push('\n');
    s
}

/// Parse a report back and serialize it again.
pub fn reserialize<T: Serialize + for<'de> Deserialize<'de>>(text: &str) -> Result<String> {
    let r: T = serde_json::from_str(text).map_err(|e| crate::error::Error::Schema {
        field: "<report>".into(),
        msg: e.to_string(),
    })?;
    Ok(to_json_string(&r))
}

/// Expression read as a phase law on `G(m)`. For `m = 1` the
/// short names `v1, v2, v3` stand for `v1_1, v1_2, v1_3`.
pub fn parse_theta(m: usize, src: &str) -> Result<PhaseFunction> {
    let model = GroupModel::milne(m)?;
    let raw = crate::poly::parse_poly(src, None)?;
    let mut allowed = model.phase_vars();
    let alias = m == 1;
    let mut renames: Vec<(String, String)> = Vec::new();
    for v in raw.used_vars() {
        if allowed.contains(&v) {
            continue;
        }
        if alias && matches!(v.as_str(), "v1" | "v2" | "v3") {
            renames.push((v.clone(), format!("v1_{}", &v[1..])));
            continue;
        }
        if v.starts_with("gamma") || v.starts_with("mass") {
            allowed.push(v);
            continue;
        }
        return Err(crate::error::Error::UnknownVariable(v));
    }
    let map: Vec<(&str, &str)> = renames.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    Ok(if map.is_empty() { raw } else { raw.rename(&map) })
}
