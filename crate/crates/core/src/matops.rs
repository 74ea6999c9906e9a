//! Small dense matrices over [`Scalar`], [`WeylOp`] or [`ScalarFraction`]
//! entries. Entry order in products is preserved, so noncommutative entries
//! are safe; an optional scalar denominator is shared by all entries.

use std::fmt;

use crate::error::{AlgebraError, Result};
use crate::ring::{Scalar, ScalarFraction};
use crate::weyl::WeylOp;

/// Ring operations a matrix entry must support.
pub trait Entry: Clone + fmt::Display + Send + Sync {
    const COMMUTATIVE: bool;
    fn zero_like(&self) -> Self;
    fn scalar_like(&self, c: &Scalar) -> Self;
    fn add(&self, o: &Self) -> Result<Self>;
    fn sub(&self, o: &Self) -> Result<Self>;
    fn mul(&self, o: &Self) -> Result<Self>;
    fn neg(&self) -> Self;
    fn scale(&self, c: &Scalar) -> Self;
    fn is_zero(&self) -> bool;
    /// Size measure used in reports.
    fn term_count(&self) -> usize;
    /// Rendering of one nonzero term (residual witness).
    fn witness(&self) -> Option<String>;

    fn one_like(&self) -> Self {
        self.scalar_like(&Scalar::one())
    }
}

impl Entry for Scalar {
    const COMMUTATIVE: bool = true;
    fn zero_like(&self) -> Self {
        Scalar::zero()
    }
    fn scalar_like(&self, c: &Scalar) -> Self {
        c.clone()
    }
    fn add(&self, o: &Self) -> Result<Self> {
        Ok(self + o)
    }
    fn sub(&self, o: &Self) -> Result<Self> {
        Ok(self - o)
    }
    fn mul(&self, o: &Self) -> Result<Self> {
        Ok(self * o)
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, c: &Scalar) -> Self {
        self * c
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn term_count(&self) -> usize {
        self.len()
    }
    fn witness(&self) -> Option<String> {
        Scalar::witness(self)
    }
}

impl Entry for ScalarFraction {
    const COMMUTATIVE: bool = true;
    fn zero_like(&self) -> Self {
        ScalarFraction::zero()
    }
    fn scalar_like(&self, c: &Scalar) -> Self {
        ScalarFraction::from_scalar(c.clone())
    }
    fn add(&self, o: &Self) -> Result<Self> {
        Ok(ScalarFraction::add(self, o))
    }
    fn sub(&self, o: &Self) -> Result<Self> {
        Ok(ScalarFraction::sub(self, o))
    }
    fn mul(&self, o: &Self) -> Result<Self> {
        Ok(ScalarFraction::mul(self, o))
    }
    fn neg(&self) -> Self {
        ScalarFraction::neg(self)
    }
    fn scale(&self, c: &Scalar) -> Self {
        self.mul_scalar(c)
    }
    fn is_zero(&self) -> bool {
        ScalarFraction::is_zero(self)
    }
    fn term_count(&self) -> usize {
        self.num().len()
    }
    fn witness(&self) -> Option<String> {
        self.num().witness()
    }
}

impl Entry for WeylOp {
    const COMMUTATIVE: bool = false;
    fn zero_like(&self) -> Self {
        WeylOp::zero(self.lattice())
    }
    fn scalar_like(&self, c: &Scalar) -> Self {
        WeylOp::scalar(self.lattice(), c.clone())
    }
    fn add(&self, o: &Self) -> Result<Self> {
        WeylOp::add(self, o)
    }
    fn sub(&self, o: &Self) -> Result<Self> {
        WeylOp::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Result<Self> {
        WeylOp::mul(self, o)
    }
    fn neg(&self) -> Self {
        WeylOp::neg(self)
    }
    fn scale(&self, c: &Scalar) -> Self {
        WeylOp::scale(self, c)
    }
    fn is_zero(&self) -> bool {
        WeylOp::is_zero(self)
    }
    fn term_count(&self) -> usize {
        WeylOp::term_count(self)
    }
    fn witness(&self) -> Option<String> {
        WeylOp::witness(self)
    }
}

/// Row-major dense matrix with an optional common scalar denominator.
#[derive(Clone, Debug, PartialEq)]
pub struct OpMatrix<E> {
    rows: usize,
    cols: usize,
    entries: Vec<E>,
    den: Option<Scalar>,
}

pub type ScalarMatrix = OpMatrix<Scalar>;
pub type WeylMatrix = OpMatrix<WeylOp>;
pub type PoissonMatrix = OpMatrix<ScalarFraction>;

impl<E: Entry> OpMatrix<E> {
    pub fn from_rows(rows: Vec<Vec<E>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map(Vec::len).unwrap_or(0);
        if r == 0 || c == 0 || rows.iter().any(|row| row.len() != c) {
            return Err(AlgebraError::Shape("ragged or empty rows".into()));
        }
        Ok(OpMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
            den: None,
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        OpMatrix {
            rows,
            cols,
            entries,
            den: None,
        }
    }

    pub fn identity_like(n: usize, proto: &E) -> Self {
        let (z, o) = (proto.zero_like(), proto.one_like());
        OpMatrix::from_fn(n, n, |i, j| if i == j { o.clone() } else { z.clone() })
    }

    pub fn with_den(mut self, den: Scalar) -> Result<Self> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        self.den = if den.is_one() { None } else { Some(den) };
        Ok(self)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn den(&self) -> Option<&Scalar> {
        self.den.as_ref()
    }

    pub fn den_or_one(&self) -> Scalar {
        self.den.clone().unwrap_or_else(Scalar::one)
    }

    /// Zero-based entry of the numerator.
    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, e: E) {
        self.entries[i * self.cols + j] = e;
    }

    pub fn entries(&self) -> &[E] {
        &self.entries
    }

    pub fn map<F: Entry>(&self, f: impl Fn(&E) -> Result<F>) -> Result<OpMatrix<F>> {
        Ok(OpMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect::<Result<_>>()?,
            den: self.den.clone(),
        })
    }

    pub fn mul(&self, other: &OpMatrix<E>) -> Result<OpMatrix<E>> {
        if self.cols != other.rows {
            return Err(AlgebraError::Shape(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let zero = self.entries[0].zero_like();
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = zero.clone();
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    let b = other.get(k, j);
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc = acc.add(&a.mul(b)?)?;
                }
                entries.push(acc);
            }
        }
        let den = match (&self.den, &other.den) {
            (None, None) => None,
            (Some(a), None) | (None, Some(a)) => Some(a.clone()),
            (Some(a), Some(b)) => Some(a * b),
        };
        Ok(OpMatrix {
            rows: self.rows,
            cols: other.cols,
            entries,
            den,
        })
    }

    /// Left-to-right product of a non-empty chain.
    pub fn product(chain: &[&OpMatrix<E>]) -> Result<OpMatrix<E>> {
        let (first, rest) = chain
            .split_first()
            .ok_or_else(|| AlgebraError::Shape("empty product".into()))?;
        rest.iter().try_fold((*first).clone(), |acc, m| acc.mul(m))
    }

    fn same_shape(&self, other: &OpMatrix<E>) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(AlgebraError::Shape(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    /// Entrywise sum after bringing both to a common denominator.
    pub fn add(&self, other: &OpMatrix<E>) -> Result<OpMatrix<E>> {
        self.same_shape(other)?;
        if self.den == other.den {
            let entries = self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.add(b))
                .collect::<Result<_>>()?;
            return Ok(OpMatrix {
                entries,
                ..self.clone()
            });
        }
        let (da, db) = (self.den_or_one(), other.den_or_one());
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.scale(&db).add(&b.scale(&da)))
            .collect::<Result<_>>()?;
        OpMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
            den: None,
        }
        .with_den(&da * &db)
    }

    pub fn neg(&self) -> OpMatrix<E> {
        OpMatrix {
            entries: self.entries.iter().map(Entry::neg).collect(),
            ..self.clone()
        }
    }

    pub fn sub(&self, other: &OpMatrix<E>) -> Result<OpMatrix<E>> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Scalar) -> OpMatrix<E> {
        OpMatrix {
            entries: self.entries.iter().map(|e| e.scale(c)).collect(),
            ..self.clone()
        }
    }

    /// `AB - BA`.
    pub fn commutator(&self, other: &OpMatrix<E>) -> Result<OpMatrix<E>> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// Sum of the numerator's diagonal, paired with the denominator.
    pub fn trace(&self) -> Result<(E, Option<Scalar>)> {
        if self.rows != self.cols {
            return Err(AlgebraError::Shape("trace of a non-square matrix".into()));
        }
        let mut acc = self.entries[0].zero_like();
        for i in 0..self.rows {
            acc = acc.add(self.get(i, i))?;
        }
        Ok((acc, self.den.clone()))
    }

    pub fn transpose(&self) -> OpMatrix<E> {
        OpMatrix {
            rows: self.cols,
            cols: self.rows,
            entries: (0..self.cols * self.rows)
                .map(|k| self.get(k % self.rows, k / self.rows).clone())
                .collect(),
            den: self.den.clone(),
        }
    }

    /// Cross-multiplied difference `A*den(B) - B*den(A)` and whether it vanishes.
    pub fn residual(&self, other: &OpMatrix<E>) -> Result<(OpMatrix<E>, bool)> {
        self.same_shape(other)?;
        let (da, db) = (self.den_or_one(), other.den_or_one());
        let entries: Vec<E> = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| {
                if da == db {
                    a.sub(b)
                } else {
                    a.scale(&db).sub(&b.scale(&da))
                }
            })
            .collect::<Result<_>>()?;
        let zero = entries.iter().all(Entry::is_zero);
        Ok((
            OpMatrix {
                rows: self.rows,
                cols: self.cols,
                entries,
                den: None,
            },
            zero,
        ))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Entry::is_zero)
    }

    /// Total term count of all entries.
    pub fn term_count(&self) -> usize {
        self.entries.iter().map(Entry::term_count).sum()
    }

    /// First nonzero entry (row-major), one-based position and one rendered term.
    pub fn witness(&self) -> Option<String> {
        self.entries
            .iter()
            .enumerate()
            .find(|(_, e)| !e.is_zero())
            .map(|(k, e)| {
                format!(
                    "({},{}): {}",
                    k / self.cols + 1,
                    k % self.cols + 1,
                    e.witness().unwrap_or_default()
                )
            })
    }

    /// Embeds a `d x d` matrix into `legs` tensor factors of dimension `d`,
    /// acting on the listed factors (zero-based) in the given order.
    pub fn embed(&self, d: usize, on: &[usize], legs: usize) -> Result<OpMatrix<E>> {
        let k = on.len();
        if self.rows != d.pow(k as u32) || self.cols != self.rows || on.iter().any(|&l| l >= legs) {
            return Err(AlgebraError::Shape(format!(
                "cannot embed {}x{} on legs {:?} of {}",
                self.rows, self.cols, on, legs
            )));
        }
        let dim = d.pow(legs as u32);
        let digits = |mut x: usize| {
            let mut v = vec![0; legs];
            for l in (0..legs).rev() {
                v[l] = x % d;
                x /= d;
            }
            v
        };
        let sub_index = |v: &[usize]| on.iter().fold(0, |acc, &l| acc * d + v[l]);
        let zero = self.entries[0].zero_like();
        let out = OpMatrix::from_fn(dim, dim, |i, j| {
            let (vi, vj) = (digits(i), digits(j));
            let spectator_match = (0..legs)
                .filter(|l| !on.contains(l))
                .all(|l| vi[l] == vj[l]);
            if spectator_match {
                self.get(sub_index(&vi), sub_index(&vj)).clone()
            } else {
                zero.clone()
            }
        });
        Ok(OpMatrix {
            den: self.den.clone(),
            ..out
        })
    }

    /// `A (x) id` for leg 1, `id (x) A` for leg 2, basis `(11, 12, 21, 22)`.
    pub fn tensor_embed(&self, leg: usize) -> Result<OpMatrix<E>> {
        if self.rows != 2 || self.cols != 2 || !(1..=2).contains(&leg) {
            return Err(AlgebraError::Shape(
                "tensor_embed needs a 2x2 matrix and leg 1 or 2".into(),
            ));
        }
        self.embed(2, &[leg - 1], 2)
    }

    /// Conjugation by the flip of the two factors of `C^d (x) C^d`.
    pub fn flip(&self, d: usize) -> Result<OpMatrix<E>> {
        if self.rows != d * d || self.cols != d * d {
            return Err(AlgebraError::Shape("flip needs a d^2 x d^2 matrix".into()));
        }
        let sw = |x: usize| (x % d) * d + x / d;
        let out = OpMatrix::from_fn(d * d, d * d, |i, j| self.get(sw(i), sw(j)).clone());
        Ok(OpMatrix {
            den: self.den.clone(),
            ..out
        })
    }

    /// Partial transpose on factor 1 or 2 of `C^d (x) C^d`.
    pub fn partial_transpose(&self, d: usize, leg: usize) -> Result<OpMatrix<E>> {
        if self.rows != d * d || self.cols != d * d {
            return Err(AlgebraError::Shape(
                "partial transpose needs d^2 x d^2".into(),
            ));
        }
        let out = OpMatrix::from_fn(d * d, d * d, |i, j| {
            let (i1, i2, j1, j2) = (i / d, i % d, j / d, j % d);
            let (a, b) = if leg == 1 {
                (j1 * d + i2, i1 * d + j2)
            } else {
                (i1 * d + j2, j1 * d + i2)
            };
            self.get(a, b).clone()
        });
        Ok(OpMatrix {
            den: self.den.clone(),
            ..out
        })
    }

    /// Determinant over a commutative entry ring (Laplace expansion with
    /// memoised minors). The denominator is not folded in.
    pub fn det_comm(&self) -> Result<E> {
        if !E::COMMUTATIVE {
            return Err(AlgebraError::NonCommutative);
        }
        if self.rows != self.cols {
            return Err(AlgebraError::Shape(
                "determinant of a non-square matrix".into(),
            ));
        }
        let n = self.rows;
        if n > 16 {
            return Err(AlgebraError::Shape("determinant limited to 16x16".into()));
        }
        // minors over the last rows, indexed by the column subset used
        let mut memo: std::collections::HashMap<u32, E> = std::collections::HashMap::new();
        fn minor<E: Entry>(
            m: &OpMatrix<E>,
            cols: u32,
            memo: &mut std::collections::HashMap<u32, E>,
        ) -> Result<E> {
            let n = m.rows;
            let k = cols.count_ones() as usize;
            if k == 0 {
                return Ok(m.entries[0].one_like());
            }
            if let Some(v) = memo.get(&cols) {
                return Ok(v.clone());
            }
            let row = n - k;
            let mut acc = m.entries[0].zero_like();
            let mut sign_pos = 0;
            for c in 0..n {
                if cols & (1 << c) == 0 {
                    continue;
                }
                let e = m.get(row, c);
                if !e.is_zero() {
                    let sub = minor(m, cols & !(1 << c), memo)?;
                    let t = e.mul(&sub)?;
                    acc = if sign_pos % 2 == 0 {
                        acc.add(&t)?
                    } else {
                        acc.sub(&t)?
                    };
                }
                sign_pos += 1;
            }
            memo.insert(cols, acc.clone());
            Ok(acc)
        }
        minor(self, (1u32 << n) - 1, &mut memo)
    }
}

impl OpMatrix<Scalar> {
    /// Substitutes into entries and denominator.
    pub fn substitute(&self, b: &crate::ring::Bindings) -> Result<OpMatrix<Scalar>> {
        let m = OpMatrix {
            den: None,
            ..self.map(|e| e.substitute(b))?
        };
        m.with_den(self.den_or_one().substitute(b)?)
    }

    pub fn from_scalars(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        OpMatrix::from_rows(rows)
    }

    pub fn identity(n: usize) -> Self {
        OpMatrix::identity_like(n, &Scalar::one())
    }

    /// Lifts a scalar matrix into another entry ring.
    pub fn lift<E: Entry>(&self, proto: &E) -> OpMatrix<E> {
        OpMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|c| proto.scalar_like(c)).collect(),
            den: self.den.clone(),
        }
    }

    /// Exact inverse `adj(A) / det(A)`, with the incoming denominator folded in.
    pub fn inverse(&self) -> Result<OpMatrix<Scalar>> {
        let n = self.rows;
        if n != self.cols {
            return Err(AlgebraError::Shape("inverse of a non-square matrix".into()));
        }
        let det = self.det_comm()?;
        if det.is_zero() {
            return Err(AlgebraError::Singular);
        }
        let mut adj = OpMatrix::from_fn(n, n, |_, _| Scalar::zero());
        for i in 0..n {
            for j in 0..n {
                let minor = OpMatrix::from_fn(n - 1, n - 1, |a, b| {
                    let r = if a < j { a } else { a + 1 };
                    let c = if b < i { b } else { b + 1 };
                    self.get(r, c).clone()
                });
                let m = if n == 1 {
                    Scalar::one()
                } else {
                    minor.det_comm()?
                };
                adj.set(i, j, if (i + j) % 2 == 0 { m } else { -m });
            }
        }
        // (N/d)^-1 = d * adj(N) / det(N)
        let adj = match &self.den {
            Some(d) => adj.scale(d),
            None => adj,
        };
        adj.with_den(det)
    }
}

impl OpMatrix<WeylOp> {
    /// Substitutes into entry coefficients and the denominator.
    pub fn substitute(&self, b: &crate::ring::Bindings) -> Result<OpMatrix<WeylOp>> {
        let m = OpMatrix {
            den: None,
            ..self.map(|e| e.substitute(b))?
        };
        m.with_den(self.den_or_one().substitute(b)?)
    }
}

impl<E: Entry> fmt::Display for OpMatrix<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")?;
        if let Some(d) = &self.den {
            write!(f, " / ({d})")?;
        }
        Ok(())
    }
}

impl<E: Entry> OpMatrix<E> {
    /// Entries as canonical strings, row-major nested arrays.
    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = (0..self.rows)
            .map(|i| {
                serde_json::Value::Array(
                    (0..self.cols)
                        .map(|j| serde_json::Value::String(self.get(i, j).to_string()))
                        .collect(),
                )
            })
            .collect();
        serde_json::json!({
            "entries": rows,
            "den": self.den.as_ref().map(|d| d.to_string()),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::Lattice;

    fn sz() -> ScalarMatrix {
        OpMatrix::from_scalars(vec![
            vec![Scalar::one(), Scalar::zero()],
            vec![Scalar::zero(), Scalar::int(-1)],
        ])
        .unwrap()
    }

    fn var(n: &str) -> Scalar {
        Scalar::var(n)
    }

    #[test]
    fn sigma_z_tensor_square() {
        let p = sz()
            .tensor_embed(1)
            .unwrap()
            .mul(&sz().tensor_embed(2).unwrap())
            .unwrap();
        let expect = OpMatrix::from_fn(4, 4, |i, j| {
            if i != j {
                Scalar::zero()
            } else {
                Scalar::int([1, -1, -1, 1][i])
            }
        });
        assert_eq!(p, expect);
        assert_eq!(
            ScalarMatrix::identity(2).tensor_embed(1).unwrap(),
            ScalarMatrix::identity(4)
        );
    }

    #[test]
    fn identity_is_neutral() {
        let a = OpMatrix::from_fn(2, 2, |i, j| Scalar::var(&format!("a{i}{j}")));
        assert_eq!(ScalarMatrix::identity(2).mul(&a).unwrap(), a);
        assert_eq!(a.mul(&ScalarMatrix::identity(2)).unwrap(), a);
    }

    #[test]
    fn trace_and_shape_errors() {
        assert_eq!(ScalarMatrix::identity(2).trace().unwrap().0, Scalar::int(2));
        let r = OpMatrix::from_fn(2, 3, |_, _| Scalar::one());
        assert!(r.trace().is_err());
        assert!(r.mul(&r).is_err());
        assert!(r.tensor_embed(1).is_err());
    }

    #[test]
    fn determinant_of_diagonal() {
        let d = OpMatrix::from_fn(3, 3, |i, j| {
            if i == j {
                var(["a", "b", "c"][i])
            } else {
                Scalar::zero()
            }
        });
        assert_eq!(
            d.det_comm().unwrap(),
            Scalar::monomial(1, &[("a", 1), ("b", 1), ("c", 1)])
        );
    }

    #[test]
    fn determinant_rejects_weyl_entries() {
        let lat = Lattice::open(2);
        let m = WeylMatrix::identity_like(2, &WeylOp::one(lat));
        assert_eq!(m.det_comm().unwrap_err(), AlgebraError::NonCommutative);
    }

    #[test]
    fn embedded_product_entry_ordering() {
        // (l(x) (x) 1)(1 (x) l(y)) at row 12, col 21 is l(x)_12 * l(y)_21
        let lat = Lattice::open(3);
        let a = OpMatrix::from_fn(2, 2, |i, j| {
            WeylOp::u(lat, (i * 2 + j + 1) as i64 % 3 + 1, 2).unwrap()
        });
        let b = OpMatrix::from_fn(2, 2, |i, j| {
            WeylOp::v(lat, (i * 2 + j) as i64 % 3 + 1, 2).unwrap()
        });
        let p = a
            .tensor_embed(1)
            .unwrap()
            .mul(&b.tensor_embed(2).unwrap())
            .unwrap();
        let expect = a.get(0, 1).mul(b.get(1, 0)).unwrap();
        assert_eq!(p.get(1, 2), &expect);
    }

    #[test]
    fn residual_detects_sign_flip() {
        let a = OpMatrix::from_fn(2, 2, |i, j| var(&format!("m{i}{j}")));
        let (r, zero) = a.residual(&a).unwrap();
        assert!(zero && r.is_zero());
        let mut b = a.clone();
        b.set(1, 0, -var("m10"));
        let (r, zero) = a.residual(&b).unwrap();
        assert!(!zero);
        assert!(r.witness().unwrap().starts_with("(2,1)"));
    }

    #[test]
    fn inverse_with_denominator() {
        let a = OpMatrix::from_fn(2, 2, |i, j| var(&format!("n{i}{j}")));
        let inv = a.inverse().unwrap();
        let (_, ok) = a
            .mul(&inv)
            .unwrap()
            .residual(&ScalarMatrix::identity(2))
            .unwrap();
        assert!(ok);
        let with_den = a.clone().with_den(var("z")).unwrap();
        let (_, ok) = with_den
            .mul(&with_den.inverse().unwrap())
            .unwrap()
            .residual(&ScalarMatrix::identity(2))
            .unwrap();
        assert!(ok);
    }

    #[test]
    fn partial_transpose_and_flip() {
        let a = OpMatrix::from_fn(4, 4, |i, j| var(&format!("t{i}{j}")));
        let pt = a.partial_transpose(2, 1).unwrap();
        // (i1 i2),(j1 j2) = (0,1),(1,0) reads (1,1),(0,0)
        assert_eq!(pt.get(1, 2), a.get(3, 0));
        assert_eq!(pt.partial_transpose(2, 1).unwrap(), a);
        assert_eq!(a.flip(2).unwrap().flip(2).unwrap(), a);
        assert_eq!(a.flip(2).unwrap().get(1, 2), a.get(2, 1));
    }
}
