//! Polynomial group models and the calculus of local exponents on them.
//!
//! A group element is a vector of polynomial coordinates, so the same code
//! handles symbolic elements (`r_v0_1, ...`), one-parameter curves (`tau*a`)
//! and concrete values. Phase functions `theta(r, p)` and linear-form type
//! functions `zeta(r, p)` are polynomials in the model's parameter names and
//! space names. Exponents `xi(r, s, p)` use the prefixed names `r_<param>`,
//! `s_<param>` and the space names.
//!
//! The Milne model `G(m)` acts by `x -> x + A_r(t)`, `t -> t + b` with
//! `A_r(t) = sum_n t^n/n! v_(n)`; rotations are not modeled. `G(1)` is the
//! Galilean group without rotations.

use std::sync::Arc;

use crate::cocycle::{pairs, InfExponent};
use crate::error::{Error, Result};
use crate::lie::LieAlgebraSpec;
use crate::poly::{var_list, MultiPoly, Rational};

pub type PhaseFunction = MultiPoly;
pub type ExponentFunction = MultiPoly;

/// Curve parameter used for one-parameter subgroups.
pub const TAU: &str = "tau";
const TAU2: &str = "tau_2";
const MU: &str = "mu";
const SIGMA: &str = "sigma";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelKind {
    /// `G(m)`: accelerations of order `0..=m` in three dimensions plus time translation.
    Milne(usize),
    /// The additive line acting trivially on a time axis.
    Line,
}

#[derive(Debug, Clone)]
pub struct GroupModel {
    kind: ModelKind,
    params: Vec<String>,
    space: Vec<String>,
    generators: Vec<String>,
}

/// A pair `{theta(p), r}` of the extension group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionElement {
    pub theta: MultiPoly,
    pub group: Vec<MultiPoly>,
}

fn pvar(name: &str) -> MultiPoly {
    MultiPoly::var(name)
}

impl GroupModel {
    pub fn milne(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParameter("m must be at least 1".into()));
        }
        let mut params = Vec::new();
        let mut generators = Vec::new();
        for n in 0..=m {
            for i in 1..=3 {
                params.push(format!("v{n}_{i}"));
                generators.push(format!("d{n}_{i}"));
            }
        }
        params.push("b".into());
        generators.push("tau".into());
        Ok(GroupModel {
            kind: ModelKind::Milne(m),
            params,
            space: vec!["x1".into(), "x2".into(), "x3".into(), "t".into()],
            generators,
        })
    }

    pub fn galilean() -> Self {
        Self::milne(1).expect("m = 1")
    }

    pub fn line() -> Self {
        GroupModel {
            kind: ModelKind::Line,
            params: vec!["u".into()],
            space: vec!["t".into()],
            generators: vec!["u".into()],
        }
    }

    pub fn kind(&self) -> ModelKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.params.len()
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn space(&self) -> &[String] {
        &self.space
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generators
    }

    /// Names accepted in phase functions: parameters, then space.
    pub fn phase_vars(&self) -> Vec<String> {
        self.params.iter().chain(&self.space).cloned().collect()
    }

    pub fn prefixed(&self, prefix: &str) -> Vec<String> {
        self.params.iter().map(|p| format!("{prefix}_{p}")).collect()
    }

    /// Names used in exponents: `r_*`, `s_*`, then space.
    pub fn exponent_vars(&self) -> Vec<String> {
        let mut v = self.prefixed("r");
        v.extend(self.prefixed("s"));
        v.extend(self.space.iter().cloned());
        v
    }

    pub fn identity(&self) -> Vec<MultiPoly> {
        vec![MultiPoly::zero(); self.dim()]
    }

    /// Element whose coordinates are the variables `prefix_<param>`.
    pub fn symbolic(&self, prefix: &str) -> Vec<MultiPoly> {
        self.prefixed(prefix).iter().map(|n| pvar(n)).collect()
    }

    /// Element whose coordinates are the bare parameter names.
    pub fn generic(&self) -> Vec<MultiPoly> {
        self.params.iter().map(|n| pvar(n)).collect()
    }

    pub fn point(&self) -> Vec<MultiPoly> {
        self.space.iter().map(|n| pvar(n)).collect()
    }

    /// Coordinates `(v_(n)^i, b)` of a Milne element.
    fn split<'a>(&self, r: &'a [MultiPoly]) -> (usize, &'a [MultiPoly], &'a MultiPoly) {
        let ModelKind::Milne(m) = self.kind else {
            unreachable!("only called for Milne models")
        };
        (m, &r[..3 * (m + 1)], &r[3 * (m + 1)])
    }

    fn check(&self, r: &[MultiPoly]) {
        assert_eq!(r.len(), self.dim(), "element has wrong number of coordinates");
    }

    pub fn compose(&self, r: &[MultiPoly], s: &[MultiPoly]) -> Vec<MultiPoly> {
        self.check(r);
        self.check(s);
        match self.kind {
            ModelKind::Line => vec![r[0].add(&s[0])],
            ModelKind::Milne(_) => {
                let (m, vr, br) = self.split(r);
                let (_, vs, bs) = self.split(s);
                let bpow: Vec<MultiPoly> = (0..=m as u32).map(|k| bs.pow(k)).collect();
                let mut out = Vec::with_capacity(self.dim());
                for j in 0..=m {
                    for i in 0..3 {
                        let mut acc = vs[3 * j + i].clone();
                        for n in j..=m {
                            let f = Rational::inv_factorial((n - j) as u32);
                            acc = acc.add(&vr[3 * n + i].mul(&bpow[n - j]).scale(&f));
                        }
                        out.push(acc);
                    }
                }
                out.push(br.add(bs));
                out
            }
        }
    }

    pub fn inverse(&self, r: &[MultiPoly]) -> Vec<MultiPoly> {
        self.check(r);
        match self.kind {
            ModelKind::Line => vec![r[0].neg()],
            ModelKind::Milne(_) => {
                let (m, vr, br) = self.split(r);
                let nb = br.neg();
                let bpow: Vec<MultiPoly> = (0..=m as u32).map(|k| nb.pow(k)).collect();
                let mut out = Vec::with_capacity(self.dim());
                for j in 0..=m {
                    for i in 0..3 {
                        let mut acc = MultiPoly::zero();
                        for n in j..=m {
                            let f = Rational::inv_factorial((n - j) as u32);
                            acc = acc.sub(&vr[3 * n + i].mul(&bpow[n - j]).scale(&f));
                        }
                        out.push(acc);
                    }
                }
                out.push(nb);
                out
            }
        }
    }

    pub fn act(&self, r: &[MultiPoly], p: &[MultiPoly]) -> Vec<MultiPoly> {
        self.check(r);
        assert_eq!(p.len(), self.space.len(), "point has wrong number of coordinates");
        match self.kind {
            ModelKind::Line => p.to_vec(),
            ModelKind::Milne(_) => {
                let (m, vr, br) = self.split(r);
                let t = &p[3];
                let mut out = Vec::with_capacity(4);
                for i in 0..3 {
                    let mut acc = p[i].clone();
                    for n in 0..=m {
                        let f = Rational::inv_factorial(n as u32);
                        acc = acc.add(&vr[3 * n + i].mul(&t.pow(n as u32)).scale(&f));
                    }
                    out.push(acc);
                }
                out.push(t.add(br));
                out
            }
        }
    }

    /// Natural coordinates of `exp(w)` for canonical coordinates `w`.
    pub fn exp(&self, w: &[MultiPoly]) -> Vec<MultiPoly> {
        self.check(w);
        match self.kind {
            ModelKind::Line => w.to_vec(),
            ModelKind::Milne(_) => {
                let (m, ww, beta) = self.split(w);
                let bpow: Vec<MultiPoly> = (0..=m as u32).map(|k| beta.pow(k)).collect();
                let mut out = Vec::with_capacity(self.dim());
                for j in 0..=m {
                    for i in 0..3 {
                        let mut acc = MultiPoly::zero();
                        for n in j..=m {
                            let f = Rational::inv_factorial((n - j + 1) as u32);
                            acc = acc.add(&ww[3 * n + i].mul(&bpow[n - j]).scale(&f));
                        }
                        out.push(acc);
                    }
                }
                out.push(beta.clone());
                out
            }
        }
    }

    /// Canonical coordinates of an element given in natural coordinates.
    pub fn log(&self, r: &[MultiPoly]) -> Vec<MultiPoly> {
        self.check(r);
        match self.kind {
            ModelKind::Line => r.to_vec(),
            ModelKind::Milne(_) => {
                let (m, vr, beta) = self.split(r);
                let bpow: Vec<MultiPoly> = (0..=m as u32).map(|k| beta.pow(k)).collect();
                let mut w = vec![MultiPoly::zero(); 3 * (m + 1)];
                for j in (0..=m).rev() {
                    for i in 0..3 {
                        let mut acc = vr[3 * j + i].clone();
                        for n in (j + 1)..=m {
                            let f = Rational::inv_factorial((n - j + 1) as u32);
                            acc = acc.sub(&w[3 * n + i].mul(&bpow[n - j]).scale(&f));
                        }
                        w[3 * j + i] = acc;
                    }
                }
                w.push(beta.clone());
                w
            }
        }
    }

    /// `f(r, p)` for `f` over parameter and space names.
    pub fn eval_phase(&self, f: &MultiPoly, r: &[MultiPoly], p: &[MultiPoly]) -> MultiPoly {
        let mut b: Vec<(&str, &MultiPoly)> = Vec::with_capacity(self.dim() + self.space.len());
        for (n, v) in self.params.iter().zip(r) {
            b.push((n.as_str(), v));
        }
        for (n, v) in self.space.iter().zip(p) {
            b.push((n.as_str(), v));
        }
        f.substitute(&b)
    }

    /// `xi(r, s, p)` for `xi` over `r_*`, `s_*` and space names.
    pub fn eval_exponent(
        &self,
        xi: &MultiPoly,
        r: &[MultiPoly],
        s: &[MultiPoly],
        p: &[MultiPoly],
    ) -> MultiPoly {
        let rn = self.prefixed("r");
        let sn = self.prefixed("s");
        let mut b: Vec<(&str, &MultiPoly)> = Vec::new();
        for (n, v) in rn.iter().zip(r) {
            b.push((n.as_str(), v));
        }
        for (n, v) in sn.iter().zip(s) {
            b.push((n.as_str(), v));
        }
        for (n, v) in self.space.iter().zip(p) {
            b.push((n.as_str(), v));
        }
        xi.substitute(&b)
    }

    /// Polynomial in `r_*`, `s_*` and space only.
    fn in_exponent_ring(&self, f: &MultiPoly) -> MultiPoly {
        let vars: Arc<[String]> = var_list(&self.exponent_vars());
        let extra: Vec<String> = f
            .used_vars()
            .into_iter()
            .filter(|v| !vars.contains(v))
            .collect();
        if extra.is_empty() {
            f.embed(&vars).expect("checked")
        } else {
            let mut all = vars.to_vec();
            all.extend(extra);
            f.embed(&var_list(&all)).expect("checked")
        }
    }

    /// Generator vector fields on space: `V_i^s = d act(r,p)^s / d r_i` at `r = e`.
    pub fn vector_fields(&self) -> Vec<Vec<MultiPoly>> {
        let r = self.generic();
        let img = self.act(&r, &self.point());
        let zero: Vec<(&str, Rational)> =
            self.params.iter().map(|n| (n.as_str(), Rational::zero())).collect();
        self.params
            .iter()
            .map(|pn| {
                img.iter()
                    .map(|comp| comp.diff_or_zero(pn).evaluate(&zero))
                    .collect()
            })
            .collect()
    }

    /// Lie algebra of the model: `c_ij^k` is the `tau^2` coefficient of the
    /// canonical coordinates of the commutator of `exp(tau e_i)` and
    /// `exp(tau e_j)`; the time action is the `d/dt` part of the vector fields.
    pub fn algebra(&self) -> LieAlgebraSpec {
        let n = self.dim();
        let tau = pvar(TAU);
        let line = |i: usize| -> Vec<MultiPoly> {
            let mut w = vec![MultiPoly::zero(); n];
            w[i] = tau.clone();
            self.exp(&w)
        };
        let mut entries = Vec::new();
        for (i, j) in pairs(n) {
            let a = line(i);
            let b = line(j);
            let ab = self.compose(&a, &b);
            let inv = self.compose(&self.inverse(&a), &self.inverse(&b));
            let comm = self.log(&self.compose(&ab, &inv));
            for (k, ck) in comm.iter().enumerate() {
                let v = ck.coeff_of(TAU, 2).constant_term();
                if !v.is_zero() {
                    entries.push((i, j, k, v));
                }
            }
        }
        let fields = self.vector_fields();
        let t_idx = self.space.iter().position(|s| s == "t");
        let eps: Vec<Rational> = fields
            .iter()
            .map(|f| match t_idx {
                Some(ti) if f[ti].is_constant() => f[ti].constant_term(),
                _ => Rational::zero(),
            })
            .collect();
        LieAlgebraSpec::new(self.generators.clone(), &entries, eps).expect("model algebra")
    }
}

/// `Delta[f](r, s, p) = f(r, p) + f(s, r^-1 p) - f(rs, p)`.
pub fn delta(model: &GroupModel, f: &MultiPoly) -> ExponentFunction {
    let r = model.symbolic("r");
    let s = model.symbolic("s");
    let p = model.point();
    let rinv_p = model.act(&model.inverse(&r), &p);
    let rs = model.compose(&r, &s);
    let out = model
        .eval_phase(f, &r, &p)
        .add(&model.eval_phase(f, &s, &rinv_p))
        .sub(&model.eval_phase(f, &rs, &p));
    model.in_exponent_ring(&out)
}

/// Exponent of the representation `T_r psi(p) = exp(i theta(r,p)) psi(r^-1 p)`:
/// `xi(r,s,p) = theta(r,p) + theta(s,r^-1 p) - theta(rs,p)`.
pub fn exponent_from_theta(model: &GroupModel, theta: &PhaseFunction) -> ExponentFunction {
    delta(model, theta)
}

/// `xi(r,s,p) + xi(rs,g,p) - xi(s,g,r^-1 p) - xi(r,sg,p)`, over `r_*`, `s_*`,
/// `g_*` and space.
pub fn cocycle_identity_residual(model: &GroupModel, xi: &ExponentFunction) -> MultiPoly {
    let r = model.symbolic("r");
    let s = model.symbolic("s");
    let g = model.symbolic("g");
    let p = model.point();
    let rs = model.compose(&r, &s);
    let sg = model.compose(&s, &g);
    let rinv_p = model.act(&model.inverse(&r), &p);
    model
        .eval_exponent(xi, &r, &s, &p)
        .add(&model.eval_exponent(xi, &rs, &g, &p))
        .sub(&model.eval_exponent(xi, &s, &g, &rinv_p))
        .sub(&model.eval_exponent(xi, &r, &sg, &p))
}

/// `xi(r, e, p)` and `xi(e, s, p)`.
pub fn normalization_residuals(model: &GroupModel, xi: &ExponentFunction) -> (MultiPoly, MultiPoly) {
    let r = model.symbolic("r");
    let s = model.symbolic("s");
    let e = model.identity();
    let p = model.point();
    (
        model.eval_exponent(xi, &r, &e, &p),
        model.eval_exponent(xi, &e, &s, &p),
    )
}

/// `xi(r, r^-1, p) - xi(r^-1, r, r^-1 p)`.
pub fn inverse_identity_residual(model: &GroupModel, xi: &ExponentFunction) -> MultiPoly {
    let r = model.symbolic("r");
    let ri = model.inverse(&r);
    let p = model.point();
    let rip = model.act(&ri, &p);
    model
        .eval_exponent(xi, &r, &ri, &p)
        .sub(&model.eval_exponent(xi, &ri, &r, &rip))
}

pub fn h_unit(model: &GroupModel) -> ExtensionElement {
    ExtensionElement {
        theta: MultiPoly::zero(),
        group: model.identity(),
    }
}

/// `{theta, r} {theta', r'} = {theta(p) + theta'(r^-1 p) + xi(r, r', p), r r'}`.
pub fn h_mul(
    model: &GroupModel,
    xi: &ExponentFunction,
    a: &ExtensionElement,
    b: &ExtensionElement,
) -> ExtensionElement {
    let p = model.point();
    let rinv_p = model.act(&model.inverse(&a.group), &p);
    let theta = a
        .theta
        .add(&model.eval_phase(&b.theta, &model.identity(), &rinv_p))
        .add(&model.eval_exponent(xi, &a.group, &b.group, &p));
    ExtensionElement {
        theta,
        group: model.compose(&a.group, &b.group),
    }
}

/// `{theta, r}^-1 = {-theta(rp) - xi(r, r^-1, rp), r^-1}`.
pub fn h_inv(model: &GroupModel, xi: &ExponentFunction, a: &ExtensionElement) -> ExtensionElement {
    let p = model.point();
    let rp = model.act(&a.group, &p);
    let ri = model.inverse(&a.group);
    let theta = model
        .eval_phase(&a.theta, &model.identity(), &rp)
        .neg()
        .sub(&model.eval_exponent(xi, &a.group, &ri, &rp));
    ExtensionElement { theta, group: ri }
}

/// `xi + Delta[zeta]`.
pub fn apply_equivalence(
    model: &GroupModel,
    xi: &ExponentFunction,
    zeta: &MultiPoly,
) -> ExponentFunction {
    xi.add(&delta(model, zeta))
}

/// `sum_k dir^k d xi / d s^k` at `s = e`, as a function of `r` and `p`.
fn s_derivative(model: &GroupModel, xi: &ExponentFunction, dir: &[MultiPoly]) -> MultiPoly {
    let sn = model.prefixed("s");
    let zero: Vec<(&str, Rational)> = sn.iter().map(|n| (n.as_str(), Rational::zero())).collect();
    let mut acc = MultiPoly::zero();
    for (n, a) in sn.iter().zip(dir) {
        if a.is_zero() {
            continue;
        }
        acc = acc.add(&xi.diff_or_zero(n).evaluate(&zero).mul(a));
    }
    acc
}

/// `zeta(tau, p) = int_0^tau sum_j a^j d xi / d s^j (exp(sigma a), e, p) dsigma`,
/// as a polynomial in `tau` and space, so that `xi + Delta[zeta]` vanishes on
/// the one-parameter subgroup `exp(tau a)`.
pub fn trivialize_one_param(
    model: &GroupModel,
    xi: &ExponentFunction,
    a: &[Rational],
) -> Result<MultiPoly> {
    if a.len() != model.dim() {
        return Err(Error::DimensionMismatch {
            expected: model.dim(),
            got: a.len(),
        });
    }
    let dir: Vec<MultiPoly> = a.iter().map(|c| MultiPoly::constant(c.clone())).collect();
    let d = s_derivative(model, xi, &dir);
    let sigma = pvar(SIGMA);
    let curve = model.exp(&dir.iter().map(|x| x.mul(&sigma)).collect::<Vec<_>>());
    let rn = model.prefixed("r");
    let b: Vec<(&str, &MultiPoly)> = rn.iter().map(|n| n.as_str()).zip(&curve).collect();
    let integrand = d.substitute(&b);
    let anti = integrand.integrate(SIGMA);
    let tau = pvar(TAU);
    Ok(anti.substitute(&[(SIGMA, &tau)]))
}

/// `xi(tau a, tau' a, p) + zeta(tau, p) + zeta(tau', exp(-tau a) p) - zeta(tau + tau', p)`,
/// with `tau' = tau_2`.
pub fn one_param_residual(
    model: &GroupModel,
    xi: &ExponentFunction,
    zeta: &MultiPoly,
    a: &[Rational],
) -> MultiPoly {
    let tau = pvar(TAU);
    let tau2 = pvar(TAU2);
    let along = |k: &MultiPoly| -> Vec<MultiPoly> {
        model.exp(&a.iter().map(|c| k.scale(c)).collect::<Vec<_>>())
    };
    let r = along(&tau);
    let s = along(&tau2);
    let p = model.point();
    let rinv_p = model.act(&model.inverse(&r), &p);
    let z = |k: &MultiPoly, q: &[MultiPoly]| -> MultiPoly {
        let mut b: Vec<(&str, &MultiPoly)> = vec![(TAU, k)];
        for (n, v) in model.space().iter().zip(q) {
            b.push((n.as_str(), v));
        }
        zeta.substitute(&b)
    };
    model
        .eval_exponent(xi, &r, &s, &p)
        .add(&z(&tau, &p))
        .add(&z(&tau2, &rinv_p))
        .sub(&z(&tau.add(&tau2), &p))
}

/// `zeta(r, p)` making `xi + Delta[zeta]` canonical: with `rho = log r`,
/// `zeta = int_0^1 sum_k rho^k d xi / d s^k (exp(mu rho), e, p) dmu`.
pub fn canonicalize(model: &GroupModel, xi: &ExponentFunction) -> MultiPoly {
    let wn: Vec<String> = model.params().iter().map(|p| format!("w_{p}")).collect();
    let rho: Vec<MultiPoly> = wn.iter().map(|n| pvar(n)).collect();
    let d = s_derivative(model, xi, &rho);
    let mu = pvar(MU);
    let curve = model.exp(&rho.iter().map(|x| x.mul(&mu)).collect::<Vec<_>>());
    let rn = model.prefixed("r");
    let b: Vec<(&str, &MultiPoly)> = rn.iter().map(|n| n.as_str()).zip(&curve).collect();
    let anti = d.substitute(&b).integrate(MU);
    let one = MultiPoly::one();
    let zc = anti.substitute(&[(MU, &one)]);
    let logr = model.log(&model.generic());
    let b: Vec<(&str, &MultiPoly)> = wn.iter().map(|n| n.as_str()).zip(&logr).collect();
    zc.substitute(&b)
}

/// `xi(tau a, tau' a, p)` for symbolic `tau`, `tau'` and direction `a`
/// (variables `a_<param>`); zero for canonical exponents.
pub fn canonical_residual(model: &GroupModel, xi: &ExponentFunction) -> MultiPoly {
    let dir: Vec<MultiPoly> = model.params().iter().map(|p| pvar(&format!("a_{p}"))).collect();
    let tau = pvar(TAU);
    let tau2 = pvar(TAU2);
    let r = model.exp(&dir.iter().map(|x| x.mul(&tau)).collect::<Vec<_>>());
    let s = model.exp(&dir.iter().map(|x| x.mul(&tau2)).collect::<Vec<_>>());
    model.eval_exponent(xi, &r, &s, &model.point())
}

/// Keep only the part of total degree at most 2 in the group variables.
fn two_jet(model: &GroupModel, xi: &MultiPoly) -> MultiPoly {
    let mut g = model.prefixed("r");
    g.extend(model.prefixed("s"));
    xi.truncate_joint(&g, 2)
}

/// Infinitesimal exponent of `xi`: canonicalize, then for every pair of basis
/// directions read off the `tau^2` coefficient of
/// `xi(AB, A^-1 B^-1, p) + xi(A, B, p) + xi(A^-1, B^-1, (AB)^-1 p)`
/// with `A = exp(tau e_i)`, `B = exp(tau e_j)`.
pub fn infinitesimal_from_exponent(model: &GroupModel, xi: &ExponentFunction) -> InfExponent {
    let jet = two_jet(model, xi);
    let canon = two_jet(model, &apply_equivalence(model, &jet, &canonicalize(model, &jet)));
    let n = model.dim();
    let tau = pvar(TAU);
    let p = model.point();
    let line = |i: usize| -> Vec<MultiPoly> {
        let mut w = vec![MultiPoly::zero(); n];
        w[i] = tau.clone();
        model.exp(&w)
    };
    let cut = |v: Vec<MultiPoly>| -> Vec<MultiPoly> {
        v.into_iter().map(|c| c.truncate_in(TAU, 2)).collect()
    };
    let mut out = InfExponent::zero(n);
    for (i, j) in pairs(n) {
        let a = line(i);
        let b = line(j);
        let ai = model.inverse(&a);
        let bi = model.inverse(&b);
        let ab = cut(model.compose(&a, &b));
        let aibi = cut(model.compose(&ai, &bi));
        let abinv_p = cut(model.act(&model.inverse(&ab), &p));
        let sum = model
            .eval_exponent(&canon, &ab, &aibi, &p)
            .add(&model.eval_exponent(&canon, &a, &b, &p))
            .add(&model.eval_exponent(&canon, &ai, &bi, &abinv_p));
        let v = sum.coeff_of(TAU, 2);
        out.set(i, j, v.trim()).expect("in range");
    }
    out
}

/// Generalized Jacobi residual for exponents on the full space: the time
/// derivative is replaced by the generator vector fields.
pub fn field_residual(
    model: &GroupModel,
    spec: &LieAlgebraSpec,
    xi: &InfExponent,
) -> Vec<((usize, usize, usize), MultiPoly)> {
    let fields = model.vector_fields();
    let apply = |i: usize, f: &MultiPoly| -> MultiPoly {
        let mut acc = MultiPoly::zero();
        for (s, comp) in model.space().iter().zip(&fields[i]) {
            if comp.is_zero() {
                continue;
            }
            acc = acc.add(&f.diff_or_zero(s).mul(comp));
        }
        acc
    };
    let left = |x: &crate::linalg::SparseVec, k: usize| -> MultiPoly {
        let mut acc = MultiPoly::zero();
        for (l, c) in x {
            acc = acc.add(&xi.get(*l, k).scale(c));
        }
        acc
    };
    let n = spec.dim();
    let mut out = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                let mut r = left(spec.structure(i, j), k)
                    .add(&left(spec.structure(j, k), i))
                    .add(&left(spec.structure(k, i), j));
                for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                    r = r.add(&apply(a, &xi.get(b, c)));
                }
                if !r.is_zero() {
                    out.push(((i, j, k), r));
                }
            }
        }
    }
    out
}

/// `zeta(r, p) = sum_k rho^k Lambda_k(t)` with `rho = log r`.
pub fn linear_zeta(model: &GroupModel, lambda: &[MultiPoly]) -> MultiPoly {
    let logr = model.log(&model.generic());
    let mut acc = MultiPoly::zero();
    for (w, l) in logr.iter().zip(lambda) {
        acc = acc.add(&w.mul(l));
    }
    acc
}
