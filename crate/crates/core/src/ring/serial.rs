//! Text and JSON forms of polynomials.

use std::collections::BTreeMap;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::monomial::Monomial;
use super::poly::{Coeff, LaurentPoly, Poly};
use super::var::Var;
use crate::error::{Error, Result};

impl<C: Coeff + Serialize> Serialize for Poly<C> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a, C> {
            terms: Vec<(&'a C, BTreeMap<String, i32>)>,
        }
        let terms = self
            .terms()
            .map(|(m, c)| (c, m.pairs().iter().map(|(v, e)| (v.to_string(), *e)).collect()))
            .collect();
        Repr { terms }.serialize(s)
    }
}

impl<'de, C: Coeff + DeserializeOwned> Deserialize<'de> for Poly<C> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(bound = "C: DeserializeOwned")]
        struct Repr<C> {
            terms: Vec<(C, BTreeMap<String, i32>)>,
        }
        let r = Repr::<C>::deserialize(d)?;
        let mut p = Poly::zero();
        for (c, vars) in r.terms {
            let mut pairs = Vec::with_capacity(vars.len());
            for (name, e) in vars {
                pairs.push((Var::parse(&name).map_err(serde::de::Error::custom)?, e));
            }
            p.add_term(Monomial::from_pairs(pairs), c);
        }
        Ok(p)
    }
}

/// JSON text of a polynomial.
pub fn to_json<C: Coeff + Serialize>(p: &Poly<C>) -> String {
    serde_json::to_string(p).expect("polynomial serialization cannot fail")
}

/// Parses the JSON form produced by [`to_json`].
pub fn from_json<C: Coeff + DeserializeOwned>(s: &str) -> Result<Poly<C>> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

/// Parses the canonical text form, e.g. `"-2 + 3 * d^-4 * y - y"`.
pub fn parse_laurent(s: &str) -> Result<LaurentPoly> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    let mut prev_nonspace: Option<char> = None;
    for ch in s.chars() {
        let separator = (ch == '+' || ch == '-') && prev_nonspace != Some('^');
        if separator {
            if !cur.trim().is_empty() {
                terms.push((neg, cur.trim().to_string()));
            } else if prev_nonspace.is_some() && ch == '-' && !terms.is_empty() {
                return Err(Error::Parse(format!("dangling sign in `{s}`")));
            }
            cur.clear();
            neg = ch == '-';
        } else {
            cur.push(ch);
        }
        if !ch.is_whitespace() {
            prev_nonspace = Some(ch);
        }
    }
    if cur.trim().is_empty() {
        return Err(Error::Parse(format!("trailing sign in `{s}`")));
    }
    terms.push((neg, cur.trim().to_string()));
    let mut p = LaurentPoly::zero();
    for (neg, t) in terms {
        let mut coeff: i128 = 1;
        let mut pairs = Vec::new();
        for factor in t.split('*') {
            let f = factor.trim();
            if f.is_empty() {
                return Err(Error::Parse(format!("empty factor in `{t}`")));
            }
            if let Ok(c) = f.parse::<i128>() {
                coeff *= c;
                continue;
            }
            let (name, e) = match f.split_once('^') {
                Some((n, e)) => (
                    n.trim(),
                    e.trim().parse::<i32>().map_err(|_| Error::Parse(format!("bad exponent in `{f}`")))?,
                ),
                None => (f, 1),
            };
            pairs.push((Var::parse(name)?, e));
        }
        p.add_term(Monomial::from_pairs(pairs), if neg { -coeff } else { coeff });
    }
    Ok(p)
}
