#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::Rng;
use raycalc::group::GroupModel;
use raycalc::{MultiPoly, Rational};

/// Random phase law over the model's parameter and space names with small
/// integer coefficients and total degree between 1 and `max_deg`. Every
/// monomial contains a group parameter, so `theta(e, p) = 0`.
pub fn random_theta(rng: &mut StdRng, model: &GroupModel, terms: usize, max_deg: u32) -> MultiPoly {
    let params = model.params();
    let vars = model.phase_vars();
    let mut acc = MultiPoly::zero();
    for _ in 0..terms {
        let deg = rng.gen_range(1..=max_deg);
        let first = &params[rng.gen_range(0..params.len())];
        let mut mono = MultiPoly::from_int(rng.gen_range(-3..=3)).mul(&MultiPoly::var(first));
        for _ in 1..deg {
            let v = &vars[rng.gen_range(0..vars.len())];
            mono = mono.mul(&MultiPoly::var(v));
        }
        acc = acc.add(&mono);
    }
    acc
}

/// Random polynomial in `t` of degree at most `deg`.
pub fn random_t_poly(rng: &mut StdRng, deg: u32) -> MultiPoly {
    let t = MultiPoly::var("t");
    let mut acc = MultiPoly::zero();
    for k in 0..=deg {
        let c = Rational::new(rng.gen_range(-4..=4), rng.gen_range(1..=3));
        acc = acc.add(&t.pow(k).scale(&c));
    }
    acc
}

/// Random linear form that is admissible under the generator-wise rule:
/// constant on generators that act on time, polynomial in `t` elsewhere.
pub fn random_admissible(rng: &mut StdRng, spec: &raycalc::lie::LieAlgebraSpec, deg: u32) -> raycalc::cocycle::LinearForm {
    let components = (0..spec.dim())
        .map(|i| {
            if spec.eps(i).is_zero() {
                random_t_poly(rng, deg)
            } else {
                random_t_poly(rng, 0)
            }
        })
        .collect();
    raycalc::cocycle::LinearForm { components }
}

/// Every catalog algebra at small sizes.
pub fn catalog_algebras() -> Vec<(String, raycalc::lie::LieAlgebraSpec)> {
    use raycalc::lie::{catalog, Catalog};
    [
        Catalog::Galilean,
        Catalog::Milne(1),
        Catalog::Milne(2),
        Catalog::Milne(3),
        Catalog::Abelian(2),
        Catalog::Abelian(3),
        Catalog::Heisenberg,
    ]
    .into_iter()
    .map(|c| (c.to_string(), catalog(c).unwrap()))
    .collect()
}

/// Exponent on the Milne catalog algebra with acceleration block
/// `delta_ij P^(l,n)(t)` and nothing else.
pub fn xi_from_table(spec: &raycalc::lie::LieAlgebraSpec, table: &raycalc::cocycle::PTable) -> raycalc::cocycle::InfExponent {
    let mut xi = raycalc::cocycle::InfExponent::zero(spec.dim());
    for l in 0..=table.m {
        for n in (l + 1)..=table.m {
            for i in 1..=3 {
                let a = spec.index_of(&format!("d{l}_{i}")).unwrap();
                let b = spec.index_of(&format!("d{n}_{i}")).unwrap();
                xi.set(a, b, table.get(l, n)).unwrap();
            }
        }
    }
    xi
}
