//! Multi-site q-Weyl algebra: per site a Weyl pair `U V = q^2 V U`, distinct
//! sites commuting. Elements are kept normal ordered, `V^a U^b` on each site
//! with sites ascending. Exponents are half-integers stored doubled.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};

use smallvec::SmallVec;

use crate::error::{AlgebraError, Result};
use crate::ring::{var_index, Bindings, Coeff, Monomial, Scalar, S};

static TERM_CAP: AtomicUsize = AtomicUsize::new(1_000_000);

/// Sets the maximum number of scalar terms a product may produce.
pub fn set_term_cap(cap: usize) {
    TERM_CAP.store(cap, Ordering::Relaxed);
}

pub fn term_cap() -> usize {
    TERM_CAP.load(Ordering::Relaxed)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Lattice {
    pub sites: u32,
    pub periodic: bool,
}

impl Lattice {
    pub fn periodic(sites: u32) -> Self {
        Lattice {
            sites,
            periodic: true,
        }
    }

    pub fn open(sites: u32) -> Self {
        Lattice {
            sites,
            periodic: false,
        }
    }

    /// Canonical site label in `1..=sites`.
    pub fn site(&self, n: i64) -> Result<u32> {
        let len = self.sites as i64;
        if self.periodic {
            Ok(((n - 1).rem_euclid(len) + 1) as u32)
        } else if (1..=len).contains(&n) {
            Ok(n as u32)
        } else {
            Err(AlgebraError::InvalidSite {
                site: n,
                sites: self.sites,
            })
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gen {
    U,
    V,
}

/// Doubles a rational power `num/den`, rejecting anything outside `Z/2`.
pub fn doubled_power(num: i64, den: i64) -> Result<i32> {
    if den == 0 || (2 * num) % den != 0 {
        return Err(AlgebraError::NotHalfInteger(format!("{num}/{den}")));
    }
    Ok((2 * num / den) as i32)
}

/// Normal-ordered monomial: `(site, 2a, 2b)` meaning `V_site^a U_site^b`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylMono(SmallVec<[(u32, i32, i32); 4]>);

impl WeylMono {
    pub fn one() -> Self {
        WeylMono(SmallVec::new())
    }

    pub fn site(site: u32, v2: i32, u2: i32) -> Self {
        let mut v = SmallVec::new();
        if v2 != 0 || u2 != 0 {
            v.push((site, v2, u2));
        }
        WeylMono(v)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> impl Iterator<Item = (u32, i32, i32)> + '_ {
        self.0.iter().copied()
    }

    pub fn exponents_at(&self, site: u32) -> (i32, i32) {
        self.0
            .iter()
            .find(|f| f.0 == site)
            .map(|&(_, a, b)| (a, b))
            .unwrap_or((0, 0))
    }

    /// Product in normal order together with the `s` exponent of the
    /// reordering factor: `U^b V^c = s^(2b*2c) V^c U^b`.
    pub fn mul(&self, other: &WeylMono) -> (WeylMono, i32) {
        let (a, b) = (&self.0, &other.0);
        let mut out = SmallVec::with_capacity(a.len() + b.len());
        let mut shift = 0;
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            let (sa, va, ua) = a[i];
            let (sb, vb, ub) = b[j];
            if sa < sb {
                out.push(a[i]);
                i += 1;
            } else if sb < sa {
                out.push(b[j]);
                j += 1;
            } else {
                shift += ua * vb;
                let (v, u) = (va + vb, ua + ub);
                if v != 0 || u != 0 {
                    out.push((sa, v, u));
                }
                i += 1;
                j += 1;
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        (WeylMono(out), shift)
    }

    /// Inverse in the algebra: `(V^a U^b)^-1 = s^(-ab*...) V^-a U^-b`, returned
    /// as the monomial and its `s` exponent.
    pub fn inverse(&self) -> (WeylMono, i32) {
        let inv = WeylMono(self.0.iter().map(|&(s, v, u)| (s, -v, -u)).collect());
        // m * inv = s^shift * 1, so m^-1 = s^-shift * inv
        let (_, shift) = self.mul(&inv);
        (inv, -shift)
    }

    /// Rescales via `U -> x^-1 U`, `V -> x V` where `x` is a variable;
    /// returns the total power of `x` (doubled exponents halved).
    fn v_conjugation_power(&self) -> Option<i32> {
        let total: i32 = self.0.iter().map(|&(_, v, u)| v - u).sum();
        if total % 2 == 0 {
            Some(total / 2)
        } else {
            None
        }
    }

    pub fn support(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().map(|f| f.0)
    }
}

fn fmt_half(x: i32) -> String {
    if x % 2 == 0 {
        format!("{}", x / 2)
    } else {
        format!("{x}/2")
    }
}

impl fmt::Display for WeylMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for &(site, v, u) in &self.0 {
            for (g, e) in [("V", v), ("U", u)] {
                if e == 0 {
                    continue;
                }
                if !first {
                    write!(f, " ")?;
                }
                first = false;
                if e == 2 {
                    write!(f, "{g}{site}")?;
                } else {
                    write!(f, "{g}{site}^{}", fmt_half(e))?;
                }
            }
        }
        Ok(())
    }
}

/// Finite sum of normal-ordered monomials with [`Scalar`] coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylOp {
    lattice: Lattice,
    terms: BTreeMap<WeylMono, Scalar>,
}

impl WeylOp {
    pub fn zero(lattice: Lattice) -> Self {
        WeylOp {
            lattice,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(lattice: Lattice, c: Scalar) -> Self {
        let mut op = WeylOp::zero(lattice);
        op.add_term(WeylMono::one(), c);
        op
    }

    pub fn one(lattice: Lattice) -> Self {
        WeylOp::scalar(lattice, Scalar::one())
    }

    /// `c * V_n^(v2/2) U_n^(u2/2)`.
    pub fn site_mono(lattice: Lattice, n: i64, v2: i32, u2: i32, c: Scalar) -> Result<Self> {
        let site = lattice.site(n)?;
        let mut op = WeylOp::zero(lattice);
        op.add_term(WeylMono::site(site, v2, u2), c);
        Ok(op)
    }

    /// `U_n^(p/2)`.
    pub fn u(lattice: Lattice, n: i64, p2: i32) -> Result<Self> {
        WeylOp::site_mono(lattice, n, 0, p2, Scalar::one())
    }

    /// `V_n^(p/2)`.
    pub fn v(lattice: Lattice, n: i64, p2: i32) -> Result<Self> {
        WeylOp::site_mono(lattice, n, p2, 0, Scalar::one())
    }

    /// Normal orders `coeff * w_1 w_2 ... w_k` where each letter is
    /// `(site, generator, doubled power)`.
    pub fn normal_order(word: &[(i64, Gen, i32)], coeff: Scalar, lattice: Lattice) -> Result<Self> {
        let mut mono = WeylMono::one();
        let mut shift = 0;
        for &(n, g, p2) in word {
            let site = lattice.site(n)?;
            let letter = match g {
                Gen::U => WeylMono::site(site, 0, p2),
                Gen::V => WeylMono::site(site, p2, 0),
            };
            let (m, sh) = mono.mul(&letter);
            mono = m;
            shift += sh;
        }
        let mut op = WeylOp::zero(lattice);
        op.add_term(mono, coeff.mul_s_pow(shift));
        Ok(op)
    }

    pub fn lattice(&self) -> Lattice {
        self.lattice
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of normal-ordered monomials.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total number of scalar terms across all coefficients.
    pub fn term_count(&self) -> usize {
        self.terms.values().map(Scalar::len).sum()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WeylMono, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &WeylMono) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: WeylMono, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn check_lattice(&self, other: &WeylOp) -> Result<()> {
        if self.lattice != other.lattice {
            return Err(AlgebraError::LatticeMismatch(self.lattice, other.lattice));
        }
        Ok(())
    }

    pub fn add(&self, other: &WeylOp) -> Result<WeylOp> {
        self.check_lattice(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &WeylOp) -> Result<WeylOp> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> WeylOp {
        WeylOp {
            lattice: self.lattice,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> WeylOp {
        let mut out = WeylOp::zero(self.lattice);
        if c.is_zero() {
            return out;
        }
        for (m, x) in &self.terms {
            out.add_term(m.clone(), x * c);
        }
        out
    }

    /// Product `self * other`, normal ordered.
    pub fn mul(&self, other: &WeylOp) -> Result<WeylOp> {
        self.mul_capped(other, term_cap())
    }

    pub fn mul_capped(&self, other: &WeylOp, cap: usize) -> Result<WeylOp> {
        self.check_lattice(other)?;
        let s_idx = var_index(S);
        let mut acc: HashMap<WeylMono, Scalar> = HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let (m, shift) = ma.mul(mb);
                let target = acc.entry(m).or_default();
                let sm = Monomial::var(s_idx, shift);
                for (xa, ka) in ca.terms() {
                    let xs = xa.mul(&sm);
                    for (xb, kb) in cb.terms() {
                        target.add_term(xs.mul(xb), ka * kb);
                    }
                }
            }
        }
        let terms: BTreeMap<WeylMono, Scalar> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let got: usize = terms.values().map(Scalar::len).sum();
        if got > cap {
            return Err(AlgebraError::TermCap { cap, got });
        }
        Ok(WeylOp {
            lattice: self.lattice,
            terms,
        })
    }

    /// `AB - BA`.
    pub fn commutator(&self, other: &WeylOp) -> Result<WeylOp> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    pub fn pow(&self, k: u32) -> Result<WeylOp> {
        let mut acc = WeylOp::one(self.lattice);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Inverse of a single-term operator with monomial coefficient.
    pub fn inverse_monomial(&self) -> Option<WeylOp> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next()?;
        let cinv = c.inverse_monomial()?;
        let (inv, shift) = m.inverse();
        let mut out = WeylOp::zero(self.lattice);
        out.add_term(inv, cinv.mul_s_pow(shift));
        Some(out)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().next().unwrap().as_monomial().is_some()
    }

    /// Automorphism induced by conjugation with the product of the site
    /// operators built from the parameter `x` (here `d2`):
    /// `U_n -> x^-1 U_n`, `V_n -> x V_n`.
    pub fn conjugate_v(&self, x: &str) -> Result<WeylOp> {
        let mut out = WeylOp::zero(self.lattice);
        for (m, c) in &self.terms {
            let p = m
                .v_conjugation_power()
                .ok_or_else(|| AlgebraError::HalfIntegerConjugation(m.to_string()))?;
            out.add_term(
                m.clone(),
                c.mul_term(
                    &Monomial::var(var_index(x), p),
                    &Coeff::from_integer(1.into()),
                ),
            );
        }
        Ok(out)
    }

    /// Applies a substitution to every coefficient.
    pub fn substitute(&self, b: &Bindings) -> Result<WeylOp> {
        let mut out = WeylOp::zero(self.lattice);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.substitute(b)?);
        }
        Ok(out)
    }

    /// Coefficient of `name^k` in every scalar coefficient.
    pub fn coeff_of(&self, name: &str, k: i32) -> WeylOp {
        let mut out = WeylOp::zero(self.lattice);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.coeff_of(name, k));
        }
        out
    }

    pub fn degree_range(&self, name: &str) -> Option<(i32, i32)> {
        self.terms
            .values()
            .filter_map(|c| c.degree_range(name))
            .reduce(|(a, b), (c, d)| (a.min(c), b.max(d)))
    }

    pub fn support(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self
            .terms
            .keys()
            .flat_map(|m| m.support().collect::<Vec<_>>())
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// First term in canonical order, rendered; the residual witness.
    pub fn witness(&self) -> Option<String> {
        self.terms.iter().next().map(|(m, c)| {
            let mut one = WeylOp::zero(self.lattice);
            one.add_term(m.clone(), c.clone());
            one.to_string()
        })
    }

    /// Relabels sites through `f`, e.g. to move an operator along the chain.
    pub fn map_sites(&self, lattice: Lattice, f: impl Fn(u32) -> i64) -> Result<WeylOp> {
        let mut out = WeylOp::zero(lattice);
        for (m, c) in &self.terms {
            let mut mono = WeylMono::one();
            for (site, v, u) in m.factors() {
                let (p, _) = mono.mul(&WeylMono::site(lattice.site(f(site))?, v, u));
                mono = p;
            }
            out.add_term(mono, c.clone());
        }
        Ok(out)
    }
}

impl fmt::Display for WeylOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c}) {m}")?;
            }
        }
        Ok(())
    }
}
