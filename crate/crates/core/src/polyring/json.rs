//! `{"var":"x","coeffs":["c0","c1",...]}`, lowest degree first. Eisenstein
//! coefficients are `["a","b"]` pairs meaning `a + b·ω`.

use serde::{Deserialize, Serialize};

use super::poly::Poly;
use crate::bigexact::{parse_rational, Eisenstein, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolyJson<C> {
    pub var: String,
    pub coeffs: Vec<C>,
}

pub type RationalPolyJson = PolyJson<String>;
pub type EisensteinPolyJson = PolyJson<[String; 2]>;

impl From<&Poly<Rational>> for RationalPolyJson {
    fn from(p: &Poly<Rational>) -> Self {
        PolyJson { var: "x".into(), coeffs: p.coeffs().iter().map(ToString::to_string).collect() }
    }
}

impl From<&Poly<Eisenstein>> for EisensteinPolyJson {
    fn from(p: &Poly<Eisenstein>) -> Self {
        PolyJson {
            var: "x".into(),
            coeffs: p.coeffs().iter().map(|c| [c.a.to_string(), c.b.to_string()]).collect(),
        }
    }
}

impl TryFrom<&RationalPolyJson> for Poly<Rational> {
    type Error = Error;
    fn try_from(j: &RationalPolyJson) -> Result<Self> {
        Ok(Poly::new(j.coeffs.iter().map(|c| parse_rational(c)).collect::<Result<_>>()?))
    }
}

impl TryFrom<&EisensteinPolyJson> for Poly<Eisenstein> {
    type Error = Error;
    fn try_from(j: &EisensteinPolyJson) -> Result<Self> {
        Ok(Poly::new(
            j.coeffs
                .iter()
                .map(|[a, b]| Ok(Eisenstein::new(parse_rational(a)?, parse_rational(b)?)))
                .collect::<Result<_>>()?,
        ))
    }
}

pub fn poly_to_json(p: &Poly<Rational>) -> String {
    serde_json::to_string(&RationalPolyJson::from(p)).expect("plain strings serialize")
}

pub fn poly_from_json(text: &str) -> Result<Poly<Rational>> {
    let j: RationalPolyJson =
        serde_json::from_str(text).map_err(|e| Error::Parse { what: "polynomial JSON", detail: e.to_string() })?;
    Poly::try_from(&j)
}

pub fn eisenstein_poly_to_json(p: &Poly<Eisenstein>) -> String {
    serde_json::to_string(&EisensteinPolyJson::from(p)).expect("plain strings serialize")
}

pub fn eisenstein_poly_from_json(text: &str) -> Result<Poly<Eisenstein>> {
    let j: EisensteinPolyJson =
        serde_json::from_str(text).map_err(|e| Error::Parse { what: "polynomial JSON", detail: e.to_string() })?;
    Poly::try_from(&j)
}
