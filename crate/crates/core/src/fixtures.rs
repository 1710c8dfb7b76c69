//! Published reference data, embedded verbatim from `fixtures/`. These are
//! the values rebuilt polynomials are compared against; nothing here is
//! computed.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::bigexact::{int, parse_rational, Rational};
use crate::error::{Error, Result};
use crate::polyring::Poly;

pub const THEOREM1_MAIN: &str = include_str!("../fixtures/theorem1_main.txt");
pub const THEOREM1_729: &str = include_str!("../fixtures/theorem1_729.txt");
pub const THEOREM1_123: &str = include_str!("../fixtures/theorem1_123.txt");
pub const ELLIPTIC_TABLE: &str = include_str!("../fixtures/elliptic_table.txt");
pub const APPENDIX: &str = include_str!("../fixtures/appendix.txt");

fn data_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'))
}

/// `key = value` records of a fixture file.
pub fn records(text: &str) -> Result<BTreeMap<String, String>> {
    data_lines(text)
        .map(|l| {
            let (k, v) = l
                .split_once('=')
                .ok_or_else(|| Error::Parse { what: "fixture record", detail: l.to_string() })?;
            Ok((k.trim().to_string(), v.trim().to_string()))
        })
        .collect()
}

/// Parses a sum of terms `cX^k`, `cX`, `X^k`, `c` with integer `c`.
pub fn parse_printed_poly(text: &str) -> Result<Poly<Rational>> {
    let err = |d: &str| Error::Parse { what: "printed polynomial", detail: d.to_string() };
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut terms = Vec::new();
    let mut start = 0;
    for (i, ch) in compact.char_indices() {
        if (ch == '+' || ch == '-') && i > 0 {
            terms.push(&compact[start..i]);
            start = i;
        }
    }
    terms.push(&compact[start..]);
    let mut coeffs: Vec<Rational> = Vec::new();
    for term in terms {
        let (sign, body) = match term.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, term.strip_prefix('+').unwrap_or(term)),
        };
        let (c, k) = match body.split_once('X') {
            None => (body, 0usize),
            Some((c, e)) => {
                let k = match e.strip_prefix('^') {
                    Some(k) => k.parse().map_err(|_| err(term))?,
                    None if e.is_empty() => 1,
                    None => return Err(err(term)),
                };
                (if c.is_empty() { "1" } else { c }, k)
            }
        };
        let c: BigInt = c.parse().map_err(|_| err(term))?;
        if coeffs.len() <= k {
            coeffs.resize(k + 1, int(0));
        }
        coeffs[k] += Rational::from_integer(c * sign);
    }
    Ok(Poly::new(coeffs))
}

/// Evaluates `a^k * b * ...` over the integers.
pub fn parse_factored(text: &str) -> Result<BigInt> {
    let err = || Error::Parse { what: "factored integer", detail: text.to_string() };
    let (sign, body) = match text.trim().strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, text.trim()),
    };
    let mut acc = BigInt::from(sign);
    for factor in body.split('*') {
        let (base, exp) = factor.trim().split_once('^').unwrap_or((factor.trim(), "1"));
        let base: BigInt = base.parse().map_err(|_| err())?;
        let exp: u32 = exp.parse().map_err(|_| err())?;
        acc *= num_traits::pow(base, exp as usize);
    }
    Ok(acc)
}

/// One published degree-24 pair together with the data it was built from.
#[derive(Clone, Debug)]
pub struct PrintedPair {
    pub f24: Poly<Rational>,
    pub f8: Poly<Rational>,
    pub r: Rational,
    /// The coefficient of `X^2 + 1` in g, where it is printed as a single fraction.
    pub g_coefficient: Option<Rational>,
    pub disc: BigInt,
    pub disc_factored: Option<BigInt>,
    pub v: BigInt,
    pub w: BigInt,
}

impl PrintedPair {
    pub fn g24(&self) -> Poly<Rational> {
        let c = self.g_coefficient.clone().unwrap_or_else(|| &self.r * &self.r);
        let mut coeffs = vec![int(0); 25];
        coeffs[0] = c.clone();
        coeffs[2] = c;
        coeffs[24] = int(1);
        Poly::new(coeffs)
    }
}

pub fn printed_pair(text: &str) -> Result<PrintedPair> {
    let rec = records(text)?;
    let get = |k: &str| {
        rec.get(k).ok_or_else(|| Error::Parse { what: "fixture record", detail: format!("missing {k}") })
    };
    let big = |k: &str| -> Result<BigInt> {
        get(k)?.parse().map_err(|_| Error::Parse { what: "fixture integer", detail: k.to_string() })
    };
    Ok(PrintedPair {
        f24: parse_printed_poly(get("f")?)?,
        f8: parse_printed_poly(get("f8")?)?,
        r: parse_rational(get("r")?)?,
        g_coefficient: rec.get("c").map(|c| parse_rational(c)).transpose()?,
        disc: parse_factored(get("disc")?)?,
        disc_factored: rec.get("disc_factored").map(|d| parse_factored(d)).transpose()?,
        v: big("v")?,
        w: big("w")?,
    })
}

/// `(n, x_n)` rows of the multiples table.
pub fn elliptic_table() -> Result<Vec<(u32, Rational)>> {
    data_lines(ELLIPTIC_TABLE)
        .map(|l| {
            let (n, x) = l
                .split_once(' ')
                .ok_or_else(|| Error::Parse { what: "table row", detail: l.to_string() })?;
            let n = n.parse().map_err(|_| Error::Parse { what: "table row", detail: l.to_string() })?;
            Ok((n, parse_rational(x.trim())?))
        })
        .collect()
}

pub fn appendix_value(key: &str) -> Result<Rational> {
    let rec = records(APPENDIX)?;
    let v = rec.get(key).ok_or_else(|| Error::Parse { what: "fixture record", detail: format!("missing {key}") })?;
    parse_rational(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_poly_parser() {
        let p = parse_printed_poly("X^3 - 24X^2 + X - 7").unwrap();
        assert_eq!(p, Poly::from_ints(&[-7, 1, -24, 1]));
        assert_eq!(parse_printed_poly("-X").unwrap(), Poly::from_ints(&[0, -1]));
        assert!(parse_printed_poly("X^").is_err());
        assert!(parse_printed_poly("3Y").is_err());
    }

    #[test]
    fn factored_parser() {
        assert_eq!(parse_factored("3^2 * 5").unwrap(), BigInt::from(45));
        assert_eq!(parse_factored("-7").unwrap(), BigInt::from(-7));
        assert!(parse_factored("3^x").is_err());
    }

    #[test]
    fn all_fixtures_load() {
        for text in [THEOREM1_MAIN, THEOREM1_729, THEOREM1_123] {
            let pair = printed_pair(text).unwrap();
            assert_eq!(pair.f24.degree(), Some(24));
            assert_eq!(pair.f8.degree(), Some(8));
            assert_eq!(pair.g24().degree(), Some(24));
        }
        assert_eq!(elliptic_table().unwrap().len(), 5);
        assert!(appendix_value("t_s1").is_ok());
    }
}
