//! Laurent polynomials in `l` and `m` with big-integer coefficients.
//!
//! Canonical text: terms in ascending `(e_l, e_m)` order, joined by
//! ` + ` / ` - `, variables written `l^e` / `m^e` (exponent 1 omitted) and
//! separated by `*`, e.g. `-l*m^-1 - l^-1*m^-1`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
#[serde(into = "Vec<JsonTerm>", try_from = "Vec<JsonTerm>")]
pub struct LaurentPoly2 {
    terms: BTreeMap<(i32, i32), BigInt>,
}

/// JSON form of one term: `{"el": .., "em": .., "c": "decimal"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub el: i32,
    pub em: i32,
    pub c: String,
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn monomial(coeff: impl Into<BigInt>, el: i32, em: i32) -> Self {
        let coeff = coeff.into();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((el, em), coeff);
        }
        LaurentPoly2 { terms }
    }

    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i32, i32, C)>) -> Self {
        let mut p = Self::zero();
        for (el, em, c) in terms {
            p.add_term((el, em), c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms as `((e_l, e_m), coefficient)` in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = ((i32, i32), &BigInt)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn coeff(&self, el: i32, em: i32) -> BigInt {
        self.terms.get(&(el, em)).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, key: (i32, i32), c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `e_l -> -e_l` on every term.
    pub fn substitute_l_inverse(&self) -> Self {
        LaurentPoly2 {
            terms: self
                .terms
                .iter()
                .map(|(&(el, em), c)| ((-el, em), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn min_m_exponent(&self) -> Option<i32> {
        self.terms.keys().map(|&(_, em)| em).min()
    }

    pub fn m_exponents(&self) -> impl Iterator<Item = i32> + '_ {
        self.terms.keys().map(|&(_, em)| em)
    }

    pub fn to_json_terms(&self) -> Vec<JsonTerm> {
        self.terms
            .iter()
            .map(|(&(el, em), c)| JsonTerm {
                el,
                em,
                c: c.to_string(),
            })
            .collect()
    }
}

impl From<LaurentPoly2> for Vec<JsonTerm> {
    fn from(p: LaurentPoly2) -> Self {
        p.to_json_terms()
    }
}

impl TryFrom<Vec<JsonTerm>> for LaurentPoly2 {
    type Error = String;

    fn try_from(terms: Vec<JsonTerm>) -> Result<Self, Self::Error> {
        let mut p = LaurentPoly2::zero();
        for t in terms {
            let c: BigInt =
                t.c.parse()
                    .map_err(|_| format!("bad coefficient {:?}", t.c))?;
            p.add_term((t.el, t.em), c);
        }
        Ok(p)
    }
}

impl AddAssign<&LaurentPoly2> for LaurentPoly2 {
    fn add_assign(&mut self, rhs: &LaurentPoly2) {
        for (&k, c) in &rhs.terms {
            self.add_term(k, c.clone());
        }
    }
}

impl Add for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(mut self, rhs: LaurentPoly2) -> LaurentPoly2 {
        self += &rhs;
        self
    }
}

impl Neg for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        LaurentPoly2 {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        -&self
    }
}

impl Sub for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        self + &(-rhs)
    }
}

impl Sub for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(self, rhs: LaurentPoly2) -> LaurentPoly2 {
        &self - &rhs
    }
}

impl Mul for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = LaurentPoly2::zero();
        for (&(a, b), x) in &self.terms {
            for (&(c, d), y) in &rhs.terms {
                out.add_term((a + c, b + d), x * y);
            }
        }
        out
    }
}

impl Mul for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, rhs: LaurentPoly2) -> LaurentPoly2 {
        &self * &rhs
    }
}

fn write_var(f: &mut fmt::Formatter<'_>, name: char, e: i32) -> fmt::Result {
    match e {
        1 => write!(f, "{name}"),
        _ => write!(f, "{name}^{e}"),
    }
}

impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (&(el, em), c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (i, sign) {
                (0, "-") => f.write_str("-")?,
                (0, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            let mag = c.abs();
            if el == 0 && em == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            if el != 0 {
                write_var(f, 'l', el)?;
            }
            if em != 0 {
                if el != 0 {
                    f.write_str("*")?;
                }
                write_var(f, 'm', em)?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("expected {expected} at column {pos}")]
pub struct PolyParseError {
    pub pos: usize,
    pub expected: &'static str,
}

/// Parses a sum of terms over a variable alphabet. Shared with the
/// single-variable rings.
pub(crate) struct TermParser<'a> {
    text: &'a [u8],
    pub(crate) pos: usize,
}

impl<'a> TermParser<'a> {
    pub(crate) fn new(text: &'a str) -> Self {
        TermParser {
            text: text.as_bytes(),
            pos: 0,
        }
    }

    pub(crate) fn err(&self, expected: &'static str) -> PolyParseError {
        PolyParseError {
            pos: self.pos,
            expected,
        }
    }

    pub(crate) fn skip_ws(&mut self) {
        while self.text.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    pub(crate) fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.text.get(self.pos).copied()
    }

    pub(crate) fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    pub(crate) fn unsigned(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.text.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        (self.pos > start).then(|| {
            std::str::from_utf8(&self.text[start..self.pos])
                .ok()
                .and_then(|s| s.parse().ok())
                .unwrap_or_default()
        })
    }

    pub(crate) fn signed_small(&mut self) -> Result<i32, PolyParseError> {
        let neg = self.eat(b'-');
        let start = self.pos;
        let v = self
            .unsigned()
            .ok_or_else(|| self.err("integer exponent"))?;
        let v = i32::try_from(v).map_err(|_| PolyParseError {
            pos: start,
            expected: "exponent within 32-bit range",
        })?;
        Ok(if neg { -v } else { v })
    }

    /// Parses `[-] term ((+|-) term)*` where a term is an optional
    /// coefficient followed by `*`-separated factors. `factor` is called with
    /// the variable byte and must consume any exponent.
    pub(crate) fn sum<T>(
        &mut self,
        vars: &[u8],
        mut factor: impl FnMut(&mut Self, u8, &mut T) -> Result<(), PolyParseError>,
        mut finish: impl FnMut(BigInt, T),
        init: impl Fn() -> T,
    ) -> Result<(), PolyParseError> {
        let mut first = true;
        loop {
            let neg = if first {
                self.eat(b'-')
            } else if self.eat(b'+') {
                false
            } else if self.eat(b'-') {
                true
            } else if self.at_end() {
                return Ok(());
            } else {
                return Err(self.err("'+' or '-'"));
            };
            first = false;

            let mut mono = init();
            let coeff = self.unsigned();
            let mut need_factor = coeff.is_none();
            if coeff.is_some() && self.eat(b'*') {
                need_factor = true;
            }
            let mut seen_factor = false;
            loop {
                match self.peek() {
                    Some(v) if vars.contains(&v) => {
                        self.pos += 1;
                        factor(self, v, &mut mono)?;
                        seen_factor = true;
                        if !self.eat(b'*') {
                            break;
                        }
                    }
                    _ if need_factor || seen_factor => return Err(self.err("variable")),
                    _ => break,
                }
            }
            let c = coeff.unwrap_or_else(BigInt::one);
            finish(if neg { -c } else { c }, mono);
        }
    }
}

impl FromStr for LaurentPoly2 {
    type Err = PolyParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_poly(s)
    }
}

pub fn parse_poly(text: &str) -> Result<LaurentPoly2, PolyParseError> {
    let mut p = TermParser::new(text);
    if p.at_end() {
        return Err(p.err("term"));
    }
    let mut out = LaurentPoly2::zero();
    p.sum(
        b"lm",
        |p, v, mono: &mut (i32, i32)| {
            let e = if p.eat(b'^') { p.signed_small()? } else { 1 };
            match v {
                b'l' => mono.0 += e,
                _ => mono.1 += e,
            }
            Ok(())
        },
        |c, mono| out.add_term(mono, c),
        || (0, 0),
    )?;
    Ok(out)
}
