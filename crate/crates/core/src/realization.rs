//! Which infinitesimal exponent classes of the Milne algebras come from a
//! phase law `theta(r, p)` on `G(m)`.
//!
//! A phase law fixes the acceleration block of its infinitesimal exponent through
//! `F(k,i;j) = d^2 theta / dx^j dv_(k)^i` at zero group parameters:
//! `Xi(d_i^(k), d_j^(n)) = t^n/n! F(k,i;j) - t^k/k! F(n,j;i)`. For isotropic
//! `F(k,i;j) = delta_ij F_k(t)` the class constants must satisfy
//! `t^n/n! F_k - t^k/k! F_n = P^(k,n)` for all `k < n`. Eliminating the unknown
//! `F_k` over `Q[t]` leaves linear conditions on the constants.

use crate::cocycle::{milne_p_table, pairs, InfExponent, PTable, T};
use crate::error::{Error, Result};
use crate::group::{GroupModel, PhaseFunction};
use crate::linalg::{left_kernel_upoly, Echelon, SparseVec, UPoly};
use crate::poly::{univariate, MultiPoly, Rational};

/// Elimination certificate for one mixed constant `gamma_(l,q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub l: usize,
    pub q: usize,
    /// Equations `(k, n)` used, in order.
    pub pairs: Vec<(usize, usize)>,
    /// Unknowns `F_k` eliminated.
    pub unknowns: Vec<usize>,
    /// `y(t)` with `y^T A = 0` for the coefficient matrix `A` of the equations.
    pub multipliers: Vec<UPoly>,
    /// `y^T P(t)`, which must vanish identically.
    pub combination: MultiPoly,
}

#[derive(Debug, Clone)]
pub struct RealizableSubspace {
    pub m: usize,
    /// Class constants, in P-table order.
    pub constants: Vec<String>,
    pub certificates: Vec<Certificate>,
    /// Reduced linear conditions on the constants.
    pub constraints: Vec<MultiPoly>,
    /// Basis of the realizable constants (coordinates over `constants`).
    pub basis: Vec<Vec<Rational>>,
    /// Rank of the conditions obtained from the left kernel of the full system.
    pub full_system_rank: usize,
}

impl RealizableSubspace {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// True when the constant values satisfy every constraint.
    pub fn contains(&self, values: &[(String, Rational)]) -> bool {
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
        self.constraints
            .iter()
            .all(|c| c.evaluate(&vals).is_zero())
    }
}

fn index(k: usize, i: usize) -> usize {
    3 * k + i
}

/// Closed form of the acceleration block. Generators are ordered
/// `d0_1, d0_2, d0_3, d1_1, ...`, as in the model `G(m)` without `tau`.
pub fn xi_matrix_from_theta(m: usize, theta: &PhaseFunction) -> Result<InfExponent> {
    let model = GroupModel::milne(m)?;
    let zero: Vec<(&str, Rational)> = model
        .params()
        .iter()
        .map(|n| (n.as_str(), Rational::zero()))
        .collect();
    let xs = &model.space()[..3];
    // f[k][i][j] = d^2 theta / dx^j dv_(k)^i at r = e
    let f: Vec<Vec<Vec<MultiPoly>>> = (0..=m)
        .map(|k| {
            (0..3)
                .map(|i| {
                    let dv = theta.diff_or_zero(&format!("v{k}_{}", i + 1));
                    xs.iter()
                        .map(|x| dv.diff_or_zero(x).evaluate(&zero))
                        .collect()
                })
                .collect()
        })
        .collect();
    let t = MultiPoly::var(T);
    let tp = |n: usize| t.pow(n as u32).scale(&Rational::inv_factorial(n as u32));
    let dim = 3 * (m + 1);
    let mut out = InfExponent::zero(dim);
    for (a, b) in pairs(dim) {
        let (k, i) = (a / 3, a % 3);
        let (n, j) = (b / 3, b % 3);
        let v = tp(n).mul(&f[k][i][j]).sub(&tp(k).mul(&f[n][j][i]));
        out.set(a, b, v)?;
    }
    Ok(out)
}

/// Restriction of an exponent on `G(m)` (with `tau` last) to the acceleration block.
pub fn acceleration_block(m: usize, xi: &InfExponent) -> Result<InfExponent> {
    let dim = 3 * (m + 1);
    if xi.dim() < dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            got: xi.dim(),
        });
    }
    let mut out = InfExponent::zero(dim);
    for (a, b) in pairs(dim) {
        out.set(a, b, xi.get(a, b))?;
    }
    Ok(out)
}

/// `theta = -sum_k gamma_k (d^k A / dt^k) . x`, realizing `P^(0,k)` with constant `gamma_k`.
pub fn family_theta(m: usize) -> Result<PhaseFunction> {
    if m == 0 {
        return Err(Error::InvalidParameter("m must be at least 1".into()));
    }
    let t = MultiPoly::var(T);
    let mut acc = MultiPoly::zero();
    for k in 1..=m {
        let g = MultiPoly::var(&crate::cocycle::gamma_name(0, k));
        for i in 1..=3 {
            let x = MultiPoly::var(&format!("x{i}"));
            let mut dka = MultiPoly::zero();
            for n in k..=m {
                let v = MultiPoly::var(&format!("v{n}_{i}"));
                let c = Rational::inv_factorial((n - k) as u32);
                dka = dka.add(&v.mul(&t.pow((n - k) as u32)).scale(&c));
            }
            acc = acc.sub(&g.mul(&dka).mul(&x));
        }
    }
    Ok(acc)
}

/// `theta(r, p) = -mass v.x + mass/2 v^2 t` on `G(1)`.
pub fn galilean_standard_theta(mass: &Rational) -> PhaseFunction {
    let t = MultiPoly::var(T);
    let mut vx = MultiPoly::zero();
    let mut v2 = MultiPoly::zero();
    for i in 1..=3 {
        let v = MultiPoly::var(&format!("v1_{i}"));
        vx = vx.add(&v.mul(&MultiPoly::var(&format!("x{i}"))));
        v2 = v2.add(&v.mul(&v));
    }
    vx.scale(mass)
        .neg()
        .add(&v2.mul(&t).scale(&(mass.clone() * Rational::new(1, 2))))
}

fn tpow(n: usize) -> UPoly {
    UPoly::monomial(Rational::inv_factorial(n as u32), n)
}

/// Coefficient matrix of the equations `t^n/n! F_k - t^k/k! F_n` over the given unknowns.
fn system(eqs: &[(usize, usize)], unknowns: &[usize]) -> Vec<Vec<UPoly>> {
    eqs.iter()
        .map(|&(k, n)| {
            unknowns
                .iter()
                .map(|&u| {
                    if u == k {
                        tpow(n)
                    } else if u == n {
                        tpow(k).neg()
                    } else {
                        UPoly::zero()
                    }
                })
                .collect()
        })
        .collect()
}

fn combine(y: &[UPoly], eqs: &[(usize, usize)], table: &PTable) -> MultiPoly {
    let mut acc = MultiPoly::zero();
    for (yi, &(k, n)) in y.iter().zip(eqs) {
        if yi.is_zero() {
            continue;
        }
        acc = acc.add(&univariate(T, yi.coeffs()).mul(&table.get(k, n)));
    }
    acc
}

/// One linear row over the constants per power of `t`.
fn rows_of(p: &MultiPoly, constants: &[String], order: &[usize]) -> Vec<SparseVec> {
    let zero: Vec<(&str, Rational)> = constants
        .iter()
        .map(|c| (c.as_str(), Rational::zero()))
        .collect();
    let deg = p.degree_in(T).unwrap_or(0);
    (0..=deg)
        .filter_map(|k| {
            let c = p.coeff_of(T, k as u16);
            let mut row: SparseVec = constants
                .iter()
                .enumerate()
                .filter_map(|(ci, name)| {
                    let v = c.diff_or_zero(name).evaluate(&zero).constant_term();
                    (!v.is_zero()).then_some((order[ci], v))
                })
                .collect();
            row.sort_by_key(|(i, _)| *i);
            (!row.is_empty()).then_some(row)
        })
        .collect()
}

/// Quadruple elimination for every mixed constant, cross-checked against the
/// left kernel of the full system.
pub fn realizable_subspace(m: usize) -> Result<RealizableSubspace> {
    let table = milne_p_table(m)?;
    let constants = table.constants.clone();
    let nc = constants.len();
    // mixed constants first, so reduced rows read gamma_(l,q) = ...
    let mixed: Vec<usize> = (0..nc).filter(|&i| constants[i].matches('_').count() == 2).collect();
    let pure: Vec<usize> = (0..nc).filter(|&i| constants[i].matches('_').count() == 1).collect();
    let mut order = vec![0; nc];
    for (pos, &ci) in mixed.iter().chain(&pure).enumerate() {
        order[ci] = pos;
    }

    let mut certificates = Vec::new();
    let mut ech = Echelon::new(nc);
    for l in 1..=m {
        for q in (l + 1)..=m {
            let mut eqs = Vec::new();
            for (a, b) in [(l - 1, q - 1), (l - 1, q), (l, q), (l, q - 1)] {
                if a != b && !eqs.contains(&(a.min(b), a.max(b))) {
                    eqs.push((a.min(b), a.max(b)));
                }
            }
            let mut unknowns: Vec<usize> = eqs.iter().flat_map(|&(a, b)| [a, b]).collect();
            unknowns.sort_unstable();
            unknowns.dedup();
            let kernel = left_kernel_upoly(&system(&eqs, &unknowns));
            let y = kernel.into_iter().next().ok_or_else(|| {
                Error::Algebra(format!("no elimination for gamma_{l}_{q}"))
            })?;
            let combination = combine(&y, &eqs, &table);
            for row in rows_of(&combination, &constants, &order) {
                ech.insert(&row);
            }
            certificates.push(Certificate {
                l,
                q,
                pairs: eqs,
                unknowns,
                multipliers: y,
                combination,
            });
        }
    }

    let all_eqs: Vec<(usize, usize)> = pairs(m + 1).collect();
    let all_unknowns: Vec<usize> = (0..=m).collect();
    let mut full = Echelon::new(nc);
    for y in left_kernel_upoly(&system(&all_eqs, &all_unknowns)) {
        for row in rows_of(&combine(&y, &all_eqs, &table), &constants, &order) {
            full.insert(&row);
        }
    }

    let rref = ech.rref();
    let mut inv = vec![0; nc];
    for (ci, &pos) in order.iter().enumerate() {
        inv[pos] = ci;
    }
    let constraints = rref
        .rows()
        .map(|(_, row)| {
            let mut acc = MultiPoly::zero();
            for (pos, c) in row {
                acc = acc.add(&MultiPoly::var(&constants[inv[*pos]]).scale(c));
            }
            acc
        })
        .collect();
    let basis = rref
        .nullspace()
        .into_iter()
        .map(|v| {
            let mut dense = vec![Rational::zero(); nc];
            for (pos, c) in v {
                dense[inv[pos]] = c;
            }
            dense
        })
        .collect();
    Ok(RealizableSubspace {
        m,
        constants,
        certificates,
        constraints,
        basis,
        full_system_rank: full.rank(),
    })
}

/// Class constants of an acceleration block of the form `delta_ij P^(l,n)(t)`,
/// or `None` when the block is not of that form.
pub fn identify_constants(m: usize, block: &InfExponent) -> Result<Option<Vec<(String, Rational)>>> {
    let table = milne_p_table(m)?;
    let mut values = Vec::new();
    for l in 0..m {
        for n in (l + 1)..=m {
            let c = block.get(index(l, 0), index(n, 0)).coeff_of(T, 0);
            if !c.is_constant() {
                return Ok(None);
            }
            values.push((crate::cocycle::gamma_name(l, n), c.constant_term()));
        }
    }
    let p = table.specialize(&values);
    for (a, b) in pairs(3 * (m + 1)) {
        let (k, i) = (a / 3, a % 3);
        let (n, j) = (b / 3, b % 3);
        let want = if i == j { p.get(k, n) } else { MultiPoly::zero() };
        if block.get(a, b) != want {
            return Ok(None);
        }
    }
    Ok(Some(values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    #[test]
    fn g2_family_block() {
        let th = family_theta(2).unwrap();
        let xi = xi_matrix_from_theta(2, &th).unwrap();
        let p = |s: &str| parse_poly(s, None).unwrap();
        assert_eq!(xi.get(0, 3), p("gamma_1"));
        assert_eq!(xi.get(1, 7), p("gamma_1*t + gamma_2"));
        assert_eq!(xi.get(5, 8), p("1/2*gamma_1*t^2 + gamma_2*t"));
        assert!(xi.get(0, 4).is_zero());
    }

    #[test]
    fn zero_theta() {
        assert!(xi_matrix_from_theta(3, &MultiPoly::zero()).unwrap().is_zero());
    }

    #[test]
    fn obstruction_m2() {
        let r = realizable_subspace(2).unwrap();
        assert_eq!(r.dimension(), 2);
        assert_eq!(r.constraints, vec![MultiPoly::var("gamma_1_2")]);
        assert_eq!(r.full_system_rank, 1);
    }

    #[test]
    fn obstruction_m1_m3() {
        let r = realizable_subspace(1).unwrap();
        assert_eq!(r.dimension(), 1);
        assert!(r.constraints.is_empty());
        let r = realizable_subspace(3).unwrap();
        assert_eq!(r.dimension(), 3);
        let mut got = r.constraints.clone();
        got.sort_by_key(|c| c.to_string());
        let want: Vec<MultiPoly> = ["gamma_1_2", "gamma_1_3", "gamma_2_3"]
            .iter()
            .map(|n| MultiPoly::var(n))
            .collect();
        assert_eq!(got, want);
        assert_eq!(r.full_system_rank, 3);
    }

    #[test]
    fn galilean_mass() {
        let th = galilean_standard_theta(&Rational::from_int(1));
        let xi = xi_matrix_from_theta(1, &th).unwrap();
        let got = identify_constants(1, &xi).unwrap().unwrap();
        assert_eq!(got, vec![("gamma_1".to_string(), Rational::one())]);
        let zero = galilean_standard_theta(&Rational::zero());
        assert!(xi_matrix_from_theta(1, &zero).unwrap().is_zero());
    }
}
