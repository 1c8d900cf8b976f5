use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{var_list, MultiPoly, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exps: Vec<u32>,
    pub num: String,
    pub den: String,
}

/// Wire form of a polynomial; big integers are decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

impl From<&MultiPoly> for PolyJson {
    fn from(p: &MultiPoly) -> Self {
        PolyJson {
            vars: p.vars().to_vec(),
            terms: p
                .terms()
                .iter()
                .map(|(e, c)| TermJson {
                    exps: e.iter().map(|&k| k as u32).collect(),
                    num: c.numer().to_string(),
                    den: c.denom().to_string(),
                })
                .collect(),
        }
    }
}

impl TryFrom<&PolyJson> for MultiPoly {
    type Error = Error;

    fn try_from(j: &PolyJson) -> Result<MultiPoly> {
        let vars = var_list(&j.vars);
        if vars.len() != j.vars.len() {
            return Err(Error::Schema {
                field: "vars".into(),
                msg: "duplicate variable name".into(),
            });
        }
        let mut terms = Vec::with_capacity(j.terms.len());
        for (n, t) in j.terms.iter().enumerate() {
            if t.exps.len() != vars.len() {
                return Err(Error::Schema {
                    field: format!("terms[{n}].exps"),
                    msg: format!("expected {} exponents, got {}", vars.len(), t.exps.len()),
                });
            }
            let mut exps = Vec::with_capacity(t.exps.len());
            for &k in &t.exps {
                exps.push(u16::try_from(k).map_err(|_| Error::Schema {
                    field: format!("terms[{n}].exps"),
                    msg: "exponent too large".into(),
                })?);
            }
            let c: Rational = format!("{}/{}", t.num, t.den).parse().map_err(|_| Error::Schema {
                field: format!("terms[{n}].num"),
                msg: "not a valid rational".into(),
            })?;
            terms.push((exps, c));
        }
        MultiPoly::from_terms(&vars, terms)
    }
}

impl MultiPoly {
    pub fn to_json(&self) -> PolyJson {
        PolyJson::from(self)
    }

    pub fn from_json(j: &PolyJson) -> Result<MultiPoly> {
        MultiPoly::try_from(j)
    }
}

impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = PolyJson::deserialize(d)?;
        MultiPoly::try_from(&j).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    #[test]
    fn round_trip() {
        let p = parse_poly("1/2*g1*t^2 - 12345678901234567890*t + 3", None).unwrap();
        let s = serde_json::to_string(&p).unwrap();
        let q: MultiPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(p, q);
        assert_eq!(s, serde_json::to_string(&q).unwrap());
    }

    #[test]
    fn wire_shape() {
        let p = parse_poly("-1/2*t", None).unwrap();
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            r#"{"vars":["t"],"terms":[{"exps":[1],"num":"-1","den":"2"}]}"#
        );
    }

    #[test]
    fn arity_error_names_field() {
        let bad = r#"{"vars":["t"],"terms":[{"exps":[1,2],"num":"1","den":"1"}]}"#;
        let j: PolyJson = serde_json::from_str(bad).unwrap();
        match MultiPoly::from_json(&j) {
            Err(Error::Schema { field, .. }) => assert_eq!(field, "terms[0].exps"),
            other => panic!("unexpected {other:?}"),
        }
    }
}
