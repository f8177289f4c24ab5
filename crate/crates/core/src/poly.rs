//! Dense univariate polynomials over a [`Ring`] and the functions they
//! induce.

use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::ring::{check_same, Elem, Ring};

/// Coefficients in ascending degree order, without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: Ring,
    coeffs: Vec<Elem>,
}

impl Polynomial {
    pub fn new(ring: &Ring, mut coeffs: Vec<Elem>) -> Polynomial {
        while coeffs.last() == Some(&ring.zero()) {
            coeffs.pop();
        }
        Polynomial {
            ring: ring.clone(),
            coeffs,
        }
    }

    /// Coefficients given as integers mapped through Z -> R.
    pub fn from_ints(ring: &Ring, coeffs: &[i64]) -> Polynomial {
        Polynomial::new(ring, coeffs.iter().map(|&c| ring.from_int(c)).collect())
    }

    pub fn zero(ring: &Ring) -> Polynomial {
        Polynomial::new(ring, Vec::new())
    }

    pub fn constant(ring: &Ring, c: Elem) -> Polynomial {
        Polynomial::new(ring, vec![c])
    }

    /// The identity polynomial `x`.
    pub fn x(ring: &Ring) -> Polynomial {
        Polynomial::monomial(ring, ring.one(), 1)
    }

    pub fn monomial(ring: &Ring, c: Elem, degree: usize) -> Polynomial {
        let mut coeffs = vec![ring.zero(); degree + 1];
        coeffs[degree] = c;
        Polynomial::new(ring, coeffs)
    }

    /// `x - c`.
    pub fn linear_root(ring: &Ring, c: Elem) -> Polynomial {
        Polynomial::new(ring, vec![ring.neg(c), ring.one()])
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(self.ring.zero())
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Option<Elem> {
        self.coeffs.last().copied()
    }

    /// Horner evaluation. `x` must come from this polynomial's ring.
    pub fn eval(&self, x: Elem) -> Elem {
        let r = &self.ring;
        self.coeffs
            .iter()
            .rev()
            .fold(r.zero(), |acc, &c| r.add(r.mul(acc, x), c))
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        check_same(&self.ring, &other.ring)?;
        Ok(self.add_unchecked(other))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        check_same(&self.ring, &other.ring)?;
        Ok(self.add_unchecked(&other.neg()))
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        check_same(&self.ring, &other.ring)?;
        Ok(self.mul_unchecked(other))
    }

    /// `f(g(x))`.
    pub fn compose(&self, inner: &Polynomial) -> Result<Polynomial> {
        check_same(&self.ring, &inner.ring)?;
        let mut acc = Polynomial::zero(&self.ring);
        for &c in self.coeffs.iter().rev() {
            acc = acc
                .mul_unchecked(inner)
                .add_unchecked(&Polynomial::constant(&self.ring, c));
        }
        Ok(acc)
    }

    pub fn neg(&self) -> Polynomial {
        let r = &self.ring;
        Polynomial::new(r, self.coeffs.iter().map(|&c| r.neg(c)).collect())
    }

    pub fn scale(&self, c: Elem) -> Polynomial {
        let r = &self.ring;
        Polynomial::new(r, self.coeffs.iter().map(|&a| r.mul(a, c)).collect())
    }

    pub fn pow(&self, mut e: u64) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::constant(&self.ring, self.ring.one());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    /// Formal derivative; the factor `i` is taken in the ring, so it
    /// vanishes whenever the characteristic divides it.
    pub fn derivative(&self) -> Polynomial {
        let r = &self.ring;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| r.mul(r.from_int(i as i64), c))
            .collect();
        Polynomial::new(r, coeffs)
    }

    /// The unique polynomial of degree below q inducing the same function
    /// on GF(q), obtained by folding exponents with x^q = x.
    pub fn reduce_canonical(&self) -> Result<Polynomial> {
        let r = &self.ring;
        if !r.is_field() {
            return Err(Error::NotAField(r.to_string()));
        }
        let q = r.size();
        let mut out = vec![r.zero(); q.min(self.coeffs.len())];
        for (e, &c) in self.coeffs.iter().enumerate() {
            let folded = if e < q { e } else { (e - 1) % (q - 1) + 1 };
            out[folded] = r.add(out[folded], c);
        }
        Ok(Polynomial::new(r, out))
    }

    pub fn function_table(&self) -> FunctionTable {
        FunctionTable {
            ring: self.ring.clone(),
            map: self.ring.elements().map(|x| self.eval(x)).collect(),
        }
    }

    /// Applies `f` to every coefficient, producing a polynomial over `target`.
    pub fn map_coeffs(&self, target: &Ring, f: impl Fn(Elem) -> Elem) -> Polynomial {
        Polynomial::new(target, self.coeffs.iter().map(|&c| f(c)).collect())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "ring": self.ring.to_string(),
            "coeffs": self.coeffs.iter().map(|&c| self.ring.encode(c)).collect::<Vec<_>>(),
        })
    }

    /// Parses `{"ring": "...", "coeffs": [...]}`. The ring key may be
    /// omitted when `default_ring` is given, and a bare coefficient array
    /// is accepted in that case too.
    pub fn from_json(v: &Value, default_ring: Option<&Ring>) -> Result<Polynomial> {
        let (ring, coeffs) = match v {
            Value::Array(items) => {
                let ring = default_ring.ok_or_else(|| {
                    Error::InvalidPolynomial("bare coefficient list needs a ring".into())
                })?;
                (ring.clone(), items)
            }
            Value::Object(map) => {
                let ring = match (map.get("ring"), default_ring) {
                    (Some(Value::String(s)), default) => {
                        let parsed: Ring = s.parse()?;
                        if let Some(d) = default {
                            check_same(d, &parsed)?;
                        }
                        parsed
                    }
                    (Some(other), _) => {
                        return Err(Error::InvalidPolynomial(format!(
                            "ring must be a string, got {other}"
                        )))
                    }
                    (None, Some(d)) => d.clone(),
                    (None, None) => return Err(Error::InvalidPolynomial("missing ring".into())),
                };
                let coeffs = map
                    .get("coeffs")
                    .and_then(Value::as_array)
                    .ok_or_else(|| Error::InvalidPolynomial("missing coeffs array".into()))?;
                (ring, coeffs)
            }
            other => {
                return Err(Error::InvalidPolynomial(format!(
                    "expected object or array, got {other}"
                )))
            }
        };
        let coeffs = coeffs
            .iter()
            .map(|c| ring.decode(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial::new(&ring, coeffs))
    }

    pub(crate) fn add_unchecked(&self, other: &Polynomial) -> Polynomial {
        let r = &self.ring;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| r.add(self.coeff(i), other.coeff(i)))
            .collect();
        Polynomial::new(r, coeffs)
    }

    pub(crate) fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        let r = &self.ring;
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(r);
        }
        let mut out = vec![r.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == r.zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = r.add(out[i + j], r.mul(a, b));
            }
        }
        Polynomial::new(r, out)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == self.ring.zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let coeff = self.ring.encode(c);
            match (i, c == self.ring.one()) {
                (0, _) => write!(f, "{coeff}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{coeff}*x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{coeff}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self, self.ring)
    }
}

/// The map a polynomial induces on its ring, indexed by canonical element
/// order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FunctionTable {
    ring: Ring,
    map: Vec<Elem>,
}

impl FunctionTable {
    pub fn new(ring: &Ring, map: Vec<Elem>) -> Result<FunctionTable> {
        if map.len() != ring.size() || map.iter().any(|e| e.index() >= ring.size()) {
            return Err(Error::InvalidElement(format!(
                "function table of length {} does not fit {ring}",
                map.len()
            )));
        }
        Ok(FunctionTable {
            ring: ring.clone(),
            map,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn values(&self) -> &[Elem] {
        &self.map
    }

    pub fn get(&self, x: Elem) -> Elem {
        self.map[x.index()]
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.map.len()];
        self.map
            .iter()
            .all(|e| !std::mem::replace(&mut seen[e.index()], true))
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.map.iter().map(|&e| self.ring.encode(e)).collect())
    }
}
