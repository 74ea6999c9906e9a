//! Exact coefficient arithmetic: sparse multivariate Laurent polynomials over
//! the rationals, keyed by a process-wide variable registry.
//!
//! The quantum parameter is never stored directly. Every scalar is written in
//! terms of `s`, with `q = s^2`, so that the half-integer powers of `q` that
//! appear in the structure matrices stay inside `Z[s, s^-1]`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use smallvec::SmallVec;

use crate::error::{AlgebraError, Result};

pub type Coeff = BigRational;

/// Name of the square root of the quantum parameter.
pub const S: &str = "s";

struct Registry {
    names: Vec<String>,
    index: HashMap<String, u32>,
}

fn registry() -> &'static RwLock<Registry> {
    static REG: OnceLock<RwLock<Registry>> = OnceLock::new();
    REG.get_or_init(|| {
        RwLock::new(Registry {
            names: Vec::new(),
            index: HashMap::new(),
        })
    })
}

/// Returns the registry slot for `name`, registering it on first use.
pub fn var_index(name: &str) -> u32 {
    if let Some(&i) = registry().read().unwrap().index.get(name) {
        return i;
    }
    let mut reg = registry().write().unwrap();
    if let Some(&i) = reg.index.get(name) {
        return i;
    }
    let i = reg.names.len() as u32;
    reg.names.push(name.to_string());
    reg.index.insert(name.to_string(), i);
    i
}

pub fn var_name(index: u32) -> String {
    registry().read().unwrap().names[index as usize].clone()
}

pub fn is_registered(name: &str) -> bool {
    registry().read().unwrap().index.contains_key(name)
}

/// A Laurent monomial: sorted `(variable, exponent)` pairs with nonzero exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(SmallVec<[(u32, i32); 4]>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(SmallVec::new())
    }

    pub fn var(index: u32, exp: i32) -> Self {
        let mut v = SmallVec::new();
        if exp != 0 {
            v.push((index, exp));
        }
        Monomial(v)
    }

    pub fn from_pairs(pairs: &[(&str, i32)]) -> Self {
        pairs.iter().fold(Monomial::one(), |m, &(n, e)| {
            m.mul(&Monomial::var(var_index(n), e))
        })
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> impl Iterator<Item = (u32, i32)> + '_ {
        self.0.iter().copied()
    }

    pub fn exponent(&self, index: u32) -> i32 {
        self.0
            .iter()
            .find(|(v, _)| *v == index)
            .map(|&(_, e)| e)
            .unwrap_or(0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            let (va, ea) = a[i];
            let (vb, eb) = b[j];
            if va < vb {
                out.push((va, ea));
                i += 1;
            } else if vb < va {
                out.push((vb, eb));
                j += 1;
            } else {
                if ea + eb != 0 {
                    out.push((va, ea + eb));
                }
                i += 1;
                j += 1;
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    pub fn pow(&self, k: i32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|&(v, e)| (v, e * k)).collect())
    }

    pub fn inverse(&self) -> Monomial {
        self.pow(-1)
    }

    /// Drops the factor of `index`, returning the rest.
    pub fn without(&self, index: u32) -> Monomial {
        Monomial(
            self.0
                .iter()
                .copied()
                .filter(|(v, _)| *v != index)
                .collect(),
        )
    }

    /// Factors by variable name, the order used for canonical text.
    pub fn named(&self) -> Vec<(String, i32)> {
        let mut v: Vec<(String, i32)> = self.0.iter().map(|&(i, e)| (var_name(i), e)).collect();
        v.sort();
        v
    }

    fn write_factors(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (name, e) in self.named() {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        self.write_factors(f)
    }
}

/// Sparse Laurent polynomial with rational coefficients. No zero coefficient
/// is ever stored, so structural equality is mathematical equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Scalar {
    terms: BTreeMap<Monomial, Coeff>,
}

fn coeff_int(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

/// A term with its monomial spelled out by variable name.
pub type NamedTerm<'a> = (Vec<(String, i32)>, &'a Monomial, &'a Coeff);

impl Scalar {
    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::constant(Coeff::one())
    }

    pub fn int(n: i64) -> Self {
        Scalar::constant(coeff_int(n))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Scalar::constant(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn constant(c: Coeff) -> Self {
        Scalar::term(Monomial::one(), c)
    }

    pub fn term(m: Monomial, c: Coeff) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Scalar { terms }
    }

    pub fn var(name: &str) -> Self {
        Scalar::var_pow(name, 1)
    }

    pub fn var_pow(name: &str, e: i32) -> Self {
        Scalar::term(Monomial::var(var_index(name), e), Coeff::one())
    }

    /// `s^k`, i.e. `q^(k/2)`.
    pub fn s_pow(k: i32) -> Self {
        Scalar::var_pow(S, k)
    }

    /// `c * prod name^e`.
    pub fn monomial(c: i64, pairs: &[(&str, i32)]) -> Self {
        Scalar::term(Monomial::from_pairs(pairs), coeff_int(c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .map(|(m, c)| m.is_one() && c.is_one())
                .unwrap()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn as_monomial(&self) -> Option<(&Monomial, &Coeff)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn as_constant(&self) -> Option<Coeff> {
        match self.terms.len() {
            0 => Some(Coeff::zero()),
            1 => self
                .terms
                .iter()
                .next()
                .filter(|(m, _)| m.is_one())
                .map(|(_, c)| c.clone()),
            _ => None,
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Scalar, by: &Coeff) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c * by);
        }
    }

    pub fn scale(&self, c: &Coeff) -> Scalar {
        if c.is_zero() {
            return Scalar::zero();
        }
        Scalar {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// Multiplies by the monomial `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Scalar {
        if c.is_zero() {
            return Scalar::zero();
        }
        Scalar {
            terms: self.terms.iter().map(|(x, a)| (x.mul(m), a * c)).collect(),
        }
    }

    pub fn mul_s_pow(&self, k: i32) -> Scalar {
        if k == 0 {
            return self.clone();
        }
        self.mul_term(&Monomial::var(var_index(S), k), &Coeff::one())
    }

    /// Integer power; negative exponents only for monomials.
    pub fn pow(&self, k: i32) -> Result<Scalar> {
        if k < 0 {
            let inv = self
                .inverse_monomial()
                .ok_or_else(|| AlgebraError::NonMonomialInverse(self.to_string()))?;
            return inv.pow(-k);
        }
        let mut acc = Scalar::one();
        let mut base = self.clone();
        let mut e = k as u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    pub fn inverse_monomial(&self) -> Option<Scalar> {
        let (m, c) = self.as_monomial()?;
        Some(Scalar::term(m.inverse(), c.recip()))
    }

    /// Image under the ring homomorphism fixing every variable not in `bindings`.
    pub fn substitute(&self, bindings: &Bindings) -> Result<Scalar> {
        let mut cache: HashMap<(u32, i32), Scalar> = HashMap::new();
        let mut out = Scalar::zero();
        for (m, c) in &self.terms {
            let mut img = Scalar::constant(c.clone());
            let mut rest = Monomial::one();
            for (v, e) in m.factors() {
                match bindings.map.get(&v) {
                    None => rest = rest.mul(&Monomial::var(v, e)),
                    Some(target) => {
                        let p = match cache.get(&(v, e)) {
                            Some(p) => p.clone(),
                            None => {
                                let p = target
                                    .pow(e)
                                    .map_err(|_| AlgebraError::NonMonomialInverse(var_name(v)))?;
                                cache.insert((v, e), p.clone());
                                p
                            }
                        };
                        img = &img * &p;
                    }
                }
            }
            let img = img.mul_term(&rest, &Coeff::one());
            out = &out + &img;
        }
        Ok(out)
    }

    /// Coefficient of `name^k`, with that variable removed.
    pub fn coeff_of(&self, name: &str, k: i32) -> Scalar {
        let v = var_index(name);
        let mut out = Scalar::zero();
        for (m, c) in &self.terms {
            if m.exponent(v) == k {
                out.add_term(m.without(v), c.clone());
            }
        }
        out
    }

    /// Exponent range of `name` over all terms, `None` when zero.
    pub fn degree_range(&self, name: &str) -> Option<(i32, i32)> {
        let v = var_index(name);
        let mut it = self.terms.keys().map(|m| m.exponent(v));
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), e| (lo.min(e), hi.max(e))))
    }

    pub fn mentions(&self, name: &str) -> bool {
        if !is_registered(name) {
            return false;
        }
        let v = var_index(name);
        self.terms.keys().any(|m| m.exponent(v) != 0)
    }

    pub fn variables(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self
            .terms
            .keys()
            .flat_map(|m| m.factors().map(|(i, _)| i))
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn derivative(&self, index: u32) -> Scalar {
        let mut out = Scalar::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(index);
            if e != 0 {
                let dm = m.mul(&Monomial::var(index, -1));
                out.add_term(dm, c * coeff_int(e as i64));
            }
        }
        out
    }

    /// Terms in canonical (name-sorted) order.
    pub fn canonical_terms(&self) -> Vec<NamedTerm<'_>> {
        let mut v: Vec<_> = self.terms.iter().map(|(m, c)| (m.named(), m, c)).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }

    /// Leading term of the canonical order, rendered; used as a residual witness.
    pub fn witness(&self) -> Option<String> {
        let t = self.canonical_terms();
        t.first()
            .map(|(_, m, c)| Scalar::term((*m).clone(), (*c).clone()).to_string())
    }
}

fn fmt_coeff(c: &Coeff) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (_, m, c)) in self.canonical_terms().into_iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{}", fmt_coeff(c))?;
            } else if c.is_one() {
                m.write_factors(f)?;
            } else if (-c).is_one() {
                write!(f, "-")?;
                m.write_factors(f)?;
            } else {
                write!(f, "{}*", fmt_coeff(c))?;
                m.write_factors(f)?;
            }
        }
        Ok(())
    }
}

fn parse_coeff(s: &str) -> Result<Coeff> {
    let bad = || AlgebraError::Parse(format!("bad coefficient `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().map_err(|_| bad())?;
            let d: BigInt = d.parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

fn looks_numeric(s: &str) -> bool {
    let t = s.strip_prefix('-').unwrap_or(s);
    t.chars().next().is_some_and(|c| c.is_ascii_digit())
}

impl FromStr for Scalar {
    type Err = AlgebraError;

    /// Parses the canonical text produced by `Display`.
    fn from_str(text: &str) -> Result<Scalar> {
        let text = text.trim();
        let mut out = Scalar::zero();
        if text == "0" {
            return Ok(out);
        }
        for term in text.split(" + ") {
            let mut parts = term.split('*').peekable();
            let mut coeff = Coeff::one();
            let mut mono = Monomial::one();
            let first = parts
                .next()
                .ok_or_else(|| AlgebraError::Parse(term.into()))?;
            if looks_numeric(first) {
                coeff = parse_coeff(first)?;
            } else {
                let (neg, name) = match first.strip_prefix('-') {
                    Some(rest) => (true, rest),
                    None => (false, first),
                };
                if neg {
                    coeff = -coeff;
                }
                mono = mono.mul(&parse_factor(name)?);
            }
            for p in parts {
                mono = mono.mul(&parse_factor(p)?);
            }
            out.add_term(mono, coeff);
        }
        Ok(out)
    }
}

fn parse_factor(p: &str) -> Result<Monomial> {
    let (name, e) = match p.split_once('^') {
        Some((n, e)) => (
            n,
            e.parse::<i32>()
                .map_err(|_| AlgebraError::Parse(format!("bad exponent in `{p}`")))?,
        ),
        None => (p, 1),
    };
    if name.is_empty() || looks_numeric(name) {
        return Err(AlgebraError::Parse(format!("bad factor `{p}`")));
    }
    Ok(Monomial::var(var_index(name), e))
}

/// Variable images for [`Scalar::substitute`].
#[derive(Clone, Debug, Default)]
pub struct Bindings {
    map: HashMap<u32, Scalar>,
}

impl Bindings {
    pub fn new() -> Self {
        Bindings::default()
    }

    pub fn bind(mut self, name: &str, image: Scalar) -> Self {
        self.map.insert(var_index(name), image);
        self
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

fn add_impl(a: &Scalar, b: &Scalar) -> Scalar {
    let (big, small) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = big.clone();
    for (m, c) in &small.terms {
        out.add_term(m.clone(), c.clone());
    }
    out
}

fn mul_impl(a: &Scalar, b: &Scalar) -> Scalar {
    if a.is_zero() || b.is_zero() {
        return Scalar::zero();
    }
    let mut acc: HashMap<Monomial, Coeff> = HashMap::with_capacity(a.len() * b.len());
    for (ma, ca) in &a.terms {
        for (mb, cb) in &b.terms {
            let m = ma.mul(mb);
            let c = ca * cb;
            match acc.entry(m) {
                std::collections::hash_map::Entry::Vacant(v) => {
                    v.insert(c);
                }
                std::collections::hash_map::Entry::Occupied(mut o) => *o.get_mut() += c,
            }
        }
    }
    Scalar {
        terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! scalar_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                $body(self, rhs)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $body(&self, &rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                $body(&self, rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $body(self, &rhs)
            }
        }
    };
}

scalar_binop!(Add, add, add_impl);
scalar_binop!(Sub, sub, |a: &Scalar, b: &Scalar| add_impl(a, &-b));
scalar_binop!(Mul, mul, mul_impl);

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

/// Unreduced quotient of two scalars. Equality is decided by cross-multiplying.
#[derive(Clone, Debug)]
pub struct ScalarFraction {
    num: Scalar,
    den: Scalar,
}

impl ScalarFraction {
    pub fn new(num: Scalar, den: Scalar) -> Result<Self> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(ScalarFraction { num, den }.absorb_monomial_den())
    }

    pub fn from_scalar(num: Scalar) -> Self {
        ScalarFraction {
            num,
            den: Scalar::one(),
        }
    }

    pub fn zero() -> Self {
        ScalarFraction::from_scalar(Scalar::zero())
    }

    pub fn one() -> Self {
        ScalarFraction::from_scalar(Scalar::one())
    }

    pub fn num(&self) -> &Scalar {
        &self.num
    }

    pub fn den(&self) -> &Scalar {
        &self.den
    }

    /// A monomial denominator is a unit of the Laurent ring, so it is folded
    /// into the numerator.
    fn absorb_monomial_den(self) -> Self {
        if self.den.is_one() {
            return self;
        }
        match self.den.inverse_monomial() {
            Some(inv) => ScalarFraction {
                num: &self.num * &inv,
                den: Scalar::one(),
            },
            None => self,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial value, when the denominator is trivial.
    pub fn as_scalar(&self) -> Option<&Scalar> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return ScalarFraction {
                num: &self.num + &o.num,
                den: self.den.clone(),
            };
        }
        ScalarFraction {
            num: &(&self.num * &o.den) + &(&o.num * &self.den),
            den: &self.den * &o.den,
        }
        .absorb_monomial_den()
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        ScalarFraction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        ScalarFraction {
            num: &self.num * &o.num,
            den: &self.den * &o.den,
        }
        .absorb_monomial_den()
    }

    pub fn mul_scalar(&self, s: &Scalar) -> Self {
        ScalarFraction {
            num: &self.num * s,
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        ScalarFraction::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, k: i32) -> Result<Self> {
        if k < 0 {
            return self.inv()?.pow(-k);
        }
        Ok(ScalarFraction {
            num: self.num.pow(k)?,
            den: self.den.pow(k)?,
        })
    }

    pub fn substitute(&self, b: &Bindings) -> Result<Self> {
        ScalarFraction::new(self.num.substitute(b)?, self.den.substitute(b)?)
    }

    /// Numerator of `self - other` over the product of denominators; zero iff equal.
    pub fn cross_residual(&self, other: &Self) -> Scalar {
        if self.den == other.den {
            return &self.num - &other.num;
        }
        &(&self.num * &other.den) - &(&other.num * &self.den)
    }
}

impl PartialEq for ScalarFraction {
    fn eq(&self, other: &Self) -> bool {
        self.cross_residual(other).is_zero()
    }
}

impl From<Scalar> for ScalarFraction {
    fn from(s: Scalar) -> Self {
        ScalarFraction::from_scalar(s)
    }
}

impl fmt::Display for ScalarFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

pub fn is_zero_fraction(a: &ScalarFraction) -> bool {
    a.is_zero()
}

/// `q^k` for integer `k`.
pub fn q_pow(k: i32) -> Scalar {
    Scalar::s_pow(2 * k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s() -> Scalar {
        Scalar::var(S)
    }

    #[test]
    fn difference_of_squares() {
        let p = &(&s() + &Scalar::one()) * &(&s() - &Scalar::one());
        assert_eq!(p, &Scalar::s_pow(2) - &Scalar::one());
    }

    #[test]
    fn additive_inverse_is_empty() {
        let z = &Scalar::s_pow(2) + &(-Scalar::s_pow(2));
        assert!(z.is_zero());
        assert_eq!(z.len(), 0);
    }

    #[test]
    fn monomial_substitution() {
        // lam -> q^-2 d2^-1 lam on lam^2
        let img = Scalar::monomial(1, &[(S, -4), ("d2", -1), ("lam", 1)]);
        let b = Bindings::new().bind("lam", img);
        let out = Scalar::var_pow("lam", 2).substitute(&b).unwrap();
        assert_eq!(out, Scalar::monomial(1, &[(S, -8), ("d2", -2), ("lam", 2)]));
    }

    #[test]
    fn classical_limit_kills_c_entry() {
        let e = &Scalar::s_pow(3) - &Scalar::s_pow(-1);
        let b = Bindings::new().bind(S, Scalar::one());
        assert!(e.substitute(&b).unwrap().is_zero());
    }

    #[test]
    fn negative_power_of_binomial_image_is_rejected() {
        let b = Bindings::new().bind("lam", &s() + &Scalar::one());
        let err = Scalar::var_pow("lam", -1).substitute(&b).unwrap_err();
        assert!(matches!(err, AlgebraError::NonMonomialInverse(_)));
    }

    #[test]
    fn fraction_zero_test() {
        let f =
            ScalarFraction::new(&Scalar::s_pow(2) - &Scalar::one(), &s() - &Scalar::one()).unwrap();
        let g = ScalarFraction::from_scalar(&s() + &Scalar::one());
        assert!(f.sub(&g).is_zero());
        assert!(!(&s() - &Scalar::one()).is_zero());
        assert!(Scalar::zero().is_zero());
    }

    #[test]
    fn fraction_rejects_zero_denominator() {
        assert_eq!(
            ScalarFraction::new(Scalar::one(), Scalar::zero()).unwrap_err(),
            AlgebraError::DivisionByZero
        );
    }

    #[test]
    fn monomial_denominator_is_absorbed() {
        let f = ScalarFraction::new(Scalar::one(), Scalar::monomial(2, &[(S, 3)])).unwrap();
        assert!(f.den().is_one());
        assert_eq!(
            f.num(),
            &Scalar::term(
                Monomial::from_pairs(&[(S, -3)]),
                Coeff::new(1.into(), 2.into())
            )
        );
    }

    #[test]
    fn canonical_text_round_trip() {
        let a = Scalar::monomial(-3, &[("lam1", 2), (S, -1)]);
        let b = Scalar::ratio(5, 7);
        let c = Scalar::monomial(1, &[("d2", 1), ("d3", 1)]);
        let x = &(&a + &b) + &c;
        let text = x.to_string();
        assert_eq!(text.parse::<Scalar>().unwrap(), x);
        assert_eq!("0".parse::<Scalar>().unwrap(), Scalar::zero());
    }

    #[test]
    fn coefficient_extraction() {
        let x = &Scalar::monomial(2, &[("lam", 2), (S, 1)]) + &Scalar::monomial(1, &[("lam", 0)]);
        assert_eq!(x.coeff_of("lam", 2), Scalar::monomial(2, &[(S, 1)]));
        assert_eq!(x.coeff_of("lam", 0), Scalar::one());
        assert_eq!(x.degree_range("lam"), Some((0, 2)));
    }

    #[test]
    fn derivative_of_laurent_monomial() {
        let x = Scalar::monomial(3, &[("g1", -2), ("h1", 1)]);
        let d = x.derivative(var_index("g1"));
        assert_eq!(d, Scalar::monomial(-6, &[("g1", -3), ("h1", 1)]));
    }
}
