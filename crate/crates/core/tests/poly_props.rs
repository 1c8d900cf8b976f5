use proptest::prelude::*;
use proptest::test_runner::RngSeed;
use raycalc::linalg::{nullspace, rank, Echelon, SparseVec};
use raycalc::{parse_poly, MultiPoly, Rational};

const VARS: [&str; 4] = ["t", "x", "y", "g1"];

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Rational::new(n, d))
}

fn poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((rational(), prop::collection::vec(0u16..=2, 4)), 0..5).prop_map(|terms| {
        let mut acc = MultiPoly::zero();
        for (c, e) in terms {
            let powers: Vec<(&str, u16)> = VARS.iter().copied().zip(e).collect();
            acc = acc.add(&MultiPoly::monomial(c, &powers));
        }
        acc
    })
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 200,
        rng_seed: RngSeed::Fixed(0x5eed_0001),
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        prop_assert_eq!(a.mul(&MultiPoly::one()), a.clone());
        prop_assert!(a.mul(&MultiPoly::zero()).is_zero());
        prop_assert_eq!(a.neg().neg(), a);
    }

    #[test]
    fn calculus(a in poly(), b in poly()) {
        prop_assert_eq!(a.integrate("t").differentiate("t").unwrap(), a.clone());
        // Leibniz rule
        let lhs = a.mul(&b).diff_or_zero("x");
        let rhs = a.diff_or_zero("x").mul(&b).add(&a.mul(&b.diff_or_zero("x")));
        prop_assert_eq!(lhs, rhs);
        let d = a.diff_or_zero("t");
        let back = d.integrate("t");
        prop_assert_eq!(back.add(&a.evaluate(&[("t", Rational::zero())])), a);
    }

    #[test]
    fn substitution_is_a_homomorphism(a in poly(), b in poly(), s in poly(), u in poly()) {
        let sub = [("t", &s), ("x", &u)];
        prop_assert_eq!(a.add(&b).substitute(&sub), a.substitute(&sub).add(&b.substitute(&sub)));
        prop_assert_eq!(a.mul(&b).substitute(&sub), a.substitute(&sub).mul(&b.substitute(&sub)));
        // substituting a variable for itself does nothing
        let t = MultiPoly::var("t");
        prop_assert_eq!(a.substitute(&[("t", &t)]), a);
    }

    #[test]
    fn text_and_json_round_trip(a in poly()) {
        let shown = a.to_string();
        prop_assert_eq!(parse_poly(&shown, None).unwrap(), a.clone());
        let j = serde_json::to_string(&a).unwrap();
        let back: MultiPoly = serde_json::from_str(&j).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn rank_matches_dense_oracle(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 6), 1..7)) {
        let sparse: Vec<SparseVec> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, c)| **c != 0)
                    .map(|(i, c)| (i, Rational::from_int(*c)))
                    .collect()
            })
            .collect();
        let r = rank(6, &sparse);
        prop_assert_eq!(r, dense_rank(&rows));
        let ns = nullspace(6, &sparse);
        prop_assert_eq!(ns.len(), 6 - r);
        for v in &ns {
            for row in &sparse {
                let mut dot = Rational::zero();
                for (i, c) in row {
                    if let Some((_, x)) = v.iter().find(|(j, _)| j == i) {
                        dot = dot + c.clone() * x.clone();
                    }
                }
                prop_assert!(dot.is_zero());
            }
        }
        let mut e = Echelon::new(6);
        for row in &sparse {
            e.insert(row);
        }
        for row in &sparse {
            prop_assert!(e.contains(row));
        }
    }
}

/// Dense Gauss-Jordan elimination, kept separate from the sparse code.
fn dense_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| r.iter().map(|&c| Rational::from_int(c)).collect())
        .collect();
    let ncols = m.first().map(|r| r.len()).unwrap_or(0);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let piv = m[rank][col].clone();
        for r in 0..m.len() {
            if r != rank && !m[r][col].is_zero() {
                let f = m[r][col].clone() / piv.clone();
                for c in 0..ncols {
                    let v = m[r][c].clone() - f.clone() * m[rank][c].clone();
                    m[r][c] = v;
                }
            }
        }
        rank += 1;
    }
    rank
}

#[test]
fn parse_errors_and_unknown_names() {
    assert!(parse_poly("x +", None).is_err());
    assert!(parse_poly("x / y", None).is_err());
    let declared = vec!["t".to_string()];
    assert!(matches!(
        parse_poly("t + q", Some(&declared)),
        Err(raycalc::Error::UnknownVariable(_))
    ));
}
