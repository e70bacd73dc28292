//! Jones, Conway and Alexander polynomials as substitutions into HOMFLY.
//!
//! * Jones: `l = i t^-1`, `m = i (t^-1/2 - t^1/2)`, turning the skein
//!   relation into `t^-1 V+ - t V- = (t^1/2 - t^-1/2) V0`.
//! * Conway: `l = i`, `m = -i z`, giving `∇+ - ∇- = z ∇0`.
//! * Alexander: Conway at `z = t^1/2 - t^-1/2`.
//!
//! Values live in [`GaussLaurent1`], Laurent polynomials in `s = t^1/2`
//! over the Gaussian integers, so every intermediate step is exact.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::laurent::{LaurentPoly2, PolyParseError, TermParser};

pub type Gauss = Complex<BigInt>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpecializeError {
    #[error("substitution left a non-real coefficient: {0}")]
    NonReal(String),
    #[error("substitution did not produce a Laurent polynomial")]
    NotDivisible,
}

fn i_pow(e: i32) -> Gauss {
    let (re, im) = match e.rem_euclid(4) {
        0 => (1, 0),
        1 => (0, 1),
        2 => (-1, 0),
        _ => (0, -1),
    };
    Complex::new(BigInt::from(re), BigInt::from(im))
}

/// Laurent polynomial in `s = t^(1/2)` with Gaussian-integer coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
#[serde(into = "Vec<GaussTerm>", try_from = "Vec<GaussTerm>")]
pub struct GaussLaurent1 {
    terms: BTreeMap<i32, Gauss>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaussTerm {
    /// Exponent of `t^(1/2)`.
    pub s: i32,
    pub re: String,
    pub im: String,
}

impl GaussLaurent1 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Complex::one(), 0)
    }

    pub fn monomial(c: Gauss, s: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(s, c);
        p
    }

    /// Integer coefficients keyed by `s`-exponent.
    pub fn from_real<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i32, C)>) -> Self {
        let mut p = Self::zero();
        for (s, c) in terms {
            p.add_term(s, Complex::new(c.into(), BigInt::zero()));
        }
        p
    }

    fn add_term(&mut self, s: i32, c: Gauss) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(s) {
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

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &Gauss)> {
        self.terms.iter().map(|(&s, c)| (s, c))
    }

    pub fn coeff(&self, s: i32) -> Gauss {
        self.terms.get(&s).cloned().unwrap_or_else(Complex::zero)
    }

    pub fn is_real(&self) -> bool {
        self.terms.values().all(|c| c.im.is_zero())
    }

    /// Only whole powers of `t`.
    pub fn is_integral_t(&self) -> bool {
        self.terms.keys().all(|s| s % 2 == 0)
    }

    /// `t -> t^-1`.
    pub fn invert_t(&self) -> Self {
        GaussLaurent1 {
            terms: self.terms.iter().map(|(&s, c)| (-s, c.clone())).collect(),
        }
    }

    pub fn shift(&self, by: i32) -> Self {
        GaussLaurent1 {
            terms: self
                .terms
                .iter()
                .map(|(&s, c)| (s + by, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, k: &Gauss) -> Self {
        let mut out = Self::zero();
        for (&s, c) in &self.terms {
            out.add_term(s, c * k);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&s, c) in &other.terms {
            out.add_term(s, c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&a, x) in &self.terms {
            for (&b, y) in &other.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Exact quotient by `1 - s^2`, if there is one.
    fn div_one_minus_s2(&self) -> Option<Self> {
        let (Some(&lo), Some(&hi)) = (self.terms.keys().next(), self.terms.keys().next_back())
        else {
            return Some(Self::zero());
        };
        // q_e - q_{e-2} = p_e, so q_e = p_e + q_{e-2}; q vanishes above hi - 2.
        let mut q: BTreeMap<i32, Gauss> = BTreeMap::new();
        for e in lo..=hi {
            let below = q.get(&(e - 2)).cloned().unwrap_or_else(Complex::zero);
            let v = self.coeff(e) + below;
            if e > hi - 2 {
                if !v.is_zero() {
                    return None;
                }
            } else if !v.is_zero() {
                q.insert(e, v);
            }
        }
        Some(GaussLaurent1 { terms: q })
    }

    /// Exact quotient by `(s^-1 - s)^n`.
    fn div_s_inv_minus_s(&self, n: u32) -> Option<Self> {
        let mut p = self.clone();
        for _ in 0..n {
            // s^-1 - s = s^-1 (1 - s^2)
            p = p.div_one_minus_s2()?.shift(1);
        }
        Some(p)
    }

    pub fn to_json_terms(&self) -> Vec<GaussTerm> {
        self.terms
            .iter()
            .map(|(&s, c)| GaussTerm {
                s,
                re: c.re.to_string(),
                im: c.im.to_string(),
            })
            .collect()
    }
}

impl From<GaussLaurent1> for Vec<GaussTerm> {
    fn from(p: GaussLaurent1) -> Self {
        p.to_json_terms()
    }
}

impl TryFrom<Vec<GaussTerm>> for GaussLaurent1 {
    type Error = String;

    fn try_from(terms: Vec<GaussTerm>) -> Result<Self, Self::Error> {
        let mut p = GaussLaurent1::zero();
        for t in terms {
            let re: BigInt =
                t.re.parse()
                    .map_err(|_| format!("bad coefficient {:?}", t.re))?;
            let im: BigInt =
                t.im.parse()
                    .map_err(|_| format!("bad coefficient {:?}", t.im))?;
            p.add_term(t.s, Complex::new(re, im));
        }
        Ok(p)
    }
}

fn write_t_power(f: &mut fmt::Formatter<'_>, s: i32) -> fmt::Result {
    match s {
        2 => f.write_str("t"),
        _ if s % 2 == 0 => write!(f, "t^{}", s / 2),
        _ => write!(f, "t^({s}/2)"),
    }
}

/// Writes `[sign] [mag*]monomial` for a real coefficient, or
/// `(re+imi)*monomial` otherwise.
fn write_term(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    c: &Gauss,
    constant: bool,
    mono: impl FnOnce(&mut fmt::Formatter<'_>) -> fmt::Result,
) -> fmt::Result {
    if !c.im.is_zero() {
        if !first {
            f.write_str(" + ")?;
        }
        let sign = if c.im.is_negative() { '-' } else { '+' };
        write!(f, "({}{sign}{}i)", c.re, c.im.abs())?;
        if constant {
            return Ok(());
        }
        f.write_str("*")?;
        return mono(f);
    }
    let neg = c.re.is_negative();
    match (first, neg) {
        (true, true) => f.write_str("-")?,
        (true, false) => {}
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
    }
    let mag = c.re.abs();
    if constant {
        return write!(f, "{mag}");
    }
    if !mag.is_one() {
        write!(f, "{mag}*")?;
    }
    mono(f)
}

impl fmt::Display for GaussLaurent1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (&s, c)) in self.terms.iter().enumerate() {
            write_term(f, i == 0, c, s == 0, |f| write_t_power(f, s))?;
        }
        Ok(())
    }
}

impl FromStr for GaussLaurent1 {
    type Err = PolyParseError;

    /// Real coefficients only: `t`, `t^-4`, `t^(5/2)`, `t^(-1/2)`.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut p = TermParser::new(text);
        if p.at_end() {
            return Err(p.err("term"));
        }
        let mut out = GaussLaurent1::zero();
        p.sum(
            b"t",
            |p, _, s: &mut i32| {
                if !p.eat(b'^') {
                    *s += 2;
                } else if p.eat(b'(') {
                    let num = p.signed_small()?;
                    if !p.eat(b'/') {
                        return Err(p.err("'/'"));
                    }
                    if p.unsigned() != Some(BigInt::from(2)) {
                        return Err(p.err("denominator 2"));
                    }
                    if !p.eat(b')') {
                        return Err(p.err("')'"));
                    }
                    *s += num;
                } else {
                    *s += 2 * p.signed_small()?;
                }
                Ok(())
            },
            |c, s| out.add_term(s, Complex::new(c, BigInt::zero())),
            || 0,
        )?;
        Ok(out)
    }
}

/// Integer Laurent polynomial in `z`.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
#[serde(into = "Vec<ZTerm>", try_from = "Vec<ZTerm>")]
pub struct ZLaurent {
    terms: BTreeMap<i32, BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZTerm {
    pub e: i32,
    pub c: String,
}

impl ZLaurent {
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i32, C)>) -> Self {
        let mut out = ZLaurent::default();
        for (e, c) in terms {
            out.add_term(e, c.into());
        }
        out
    }

    fn add_term(&mut self, e: i32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }
}

impl From<ZLaurent> for Vec<ZTerm> {
    fn from(p: ZLaurent) -> Self {
        p.terms
            .iter()
            .map(|(&e, c)| ZTerm {
                e,
                c: c.to_string(),
            })
            .collect()
    }
}

impl TryFrom<Vec<ZTerm>> for ZLaurent {
    type Error = String;

    fn try_from(terms: Vec<ZTerm>) -> Result<Self, Self::Error> {
        let mut out = ZLaurent::default();
        for t in terms {
            let c: BigInt =
                t.c.parse()
                    .map_err(|_| format!("bad coefficient {:?}", t.c))?;
            out.add_term(t.e, c);
        }
        Ok(out)
    }
}

impl fmt::Display for ZLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (&e, c)) in self.terms.iter().enumerate() {
            let g = Complex::new(c.clone(), BigInt::zero());
            write_term(f, i == 0, &g, e == 0, |f| match e {
                1 => f.write_str("z"),
                _ => write!(f, "z^{e}"),
            })?;
        }
        Ok(())
    }
}

impl FromStr for ZLaurent {
    type Err = PolyParseError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut p = TermParser::new(text);
        if p.at_end() {
            return Err(p.err("term"));
        }
        let mut out = ZLaurent::default();
        p.sum(
            b"z",
            |p, _, e: &mut i32| {
                *e += if p.eat(b'^') { p.signed_small()? } else { 1 };
                Ok(())
            },
            |c, e| out.add_term(e, c),
            || 0,
        )?;
        Ok(out)
    }
}

/// `(s^-1 - s)^n`.
fn s_inv_minus_s(n: u32) -> GaussLaurent1 {
    GaussLaurent1::from_real([(-1, 1), (1, -1)]).pow(n)
}

/// Jones polynomial of the link whose HOMFLY value is `p`.
pub fn jones(p: &LaurentPoly2) -> Result<GaussLaurent1, SpecializeError> {
    // Clear negative powers of m by multiplying through with m^shift, then
    // divide the result by (i (s^-1 - s))^shift.
    let shift = p.min_m_exponent().map_or(0, |e| (-e).max(0)) as u32;
    let mut acc = GaussLaurent1::zero();
    for ((el, em), c) in p.terms() {
        let e = u32::try_from(em + shift as i32).expect("shifted m exponent is non-negative");
        // l^el = i^el s^(-2 el);  m^e = i^e (s^-1 - s)^e
        let scalar = Complex::new(c.clone(), BigInt::zero()) * i_pow(el + e as i32);
        acc = acc.add(&s_inv_minus_s(e).scale(&scalar).shift(-2 * el));
    }
    let acc = acc.scale(&i_pow(-(shift as i32)));
    acc.div_s_inv_minus_s(shift)
        .ok_or(SpecializeError::NotDivisible)
}

/// Conway polynomial of the link whose HOMFLY value is `p`.
pub fn conway(p: &LaurentPoly2) -> Result<ZLaurent, SpecializeError> {
    let mut terms: BTreeMap<i32, Gauss> = BTreeMap::new();
    for ((el, em), c) in p.terms() {
        // l^el m^em = i^el (-i)^em z^em
        let v = Complex::new(c.clone(), BigInt::zero()) * i_pow(el) * i_pow(-em);
        *terms.entry(em).or_insert_with(Complex::zero) += v;
    }
    let mut out = ZLaurent::default();
    for (e, c) in terms {
        if !c.im.is_zero() {
            return Err(SpecializeError::NonReal(format!("z^{e}: {c}")));
        }
        out.add_term(e, c.re);
    }
    Ok(out)
}

/// Alexander polynomial, from Conway at `z = t^1/2 - t^-1/2`.
pub fn alexander(p: &LaurentPoly2) -> Result<GaussLaurent1, SpecializeError> {
    alexander_from_conway(&conway(p)?)
}

pub fn alexander_from_conway(c: &ZLaurent) -> Result<GaussLaurent1, SpecializeError> {
    let shift = c.terms().map(|(e, _)| e).min().map_or(0, |e| (-e).max(0)) as u32;
    // z = s - s^-1 = -(s^-1 - s)
    let z = GaussLaurent1::from_real([(1, 1), (-1, -1)]);
    let mut acc = GaussLaurent1::zero();
    for (e, coeff) in c.terms() {
        let k = (e + shift as i32) as u32;
        acc = acc.add(&z.pow(k).scale(&Complex::new(coeff.clone(), BigInt::zero())));
    }
    let sign = if shift % 2 == 1 { -1 } else { 1 };
    acc.scale(&Complex::new(BigInt::from(sign), BigInt::zero()))
        .div_s_inv_minus_s(shift)
        .ok_or(SpecializeError::NotDivisible)
}
