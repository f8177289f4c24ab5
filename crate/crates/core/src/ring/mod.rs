//! Finite fields GF(p^n) and the finite local rings Z/p^k and
//! GF(p^n)[u]/(u^k).
//!
//! Every ring is fully enumerable. Elements are identified by their index
//! in a fixed enumeration order, which doubles as the canonical
//! representation:
//!
//! * `Z/p^k`: the integer residue `0..p^k`.
//! * `GF(p^n)`: coefficient vector `[c0, .., c_{n-1}]` over F_p, index
//!   `c0 + c1 p + ...`.
//! * `GF(q)[u]/(u^k)`: coefficient vector `[e0, .., e_{k-1}]` over GF(q),
//!   index `e0 + e1 q + ...`.
//!
//! Index 0 is always the zero element and index 1 always the identity.

mod element;
mod field;
mod spec;

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use serde_json::Value;

pub use element::{Elem, Element};
pub use spec::RingSpec;

use crate::error::{Error, Result};
use field::{digits, from_digits, Field};

#[derive(Debug)]
enum Kind {
    Field(Field),
    Zmod { p: u64, m: u64 },
    Fqu { field: Field, k: u32 },
}

#[derive(Debug)]
struct Inner {
    spec: RingSpec,
    kind: Kind,
    size: u64,
    /// `None` for fields, which are their own residue field.
    residue: Option<Ring>,
}

/// Shared handle to an immutable ring description.
#[derive(Clone)]
pub struct Ring(Arc<Inner>);

impl Ring {
    pub fn new(spec: &RingSpec) -> Result<Ring> {
        match spec {
            RingSpec::Gf { p, n, modulus } => Ring::build_field(*p, *n, modulus.as_deref()),
            RingSpec::Zmod { p, k } => Ring::zmod(*p, *k),
            RingSpec::Fqu { p, n, k } => Ring::fqu(&Ring::field(*p, *n)?, *k),
        }
    }

    /// GF(p^n) with the smallest monic irreducible modulus.
    pub fn field(p: u64, n: u32) -> Result<Ring> {
        Ring::build_field(p, n, None)
    }

    pub fn field_with_modulus(p: u64, n: u32, modulus: &[u64]) -> Result<Ring> {
        Ring::build_field(p, n, Some(modulus))
    }

    fn build_field(p: u64, n: u32, modulus: Option<&[u64]>) -> Result<Ring> {
        let f = Field::new(p, n, modulus)?;
        let is_default = modulus.is_none() || f.modulus == field::smallest_irreducible(p, n);
        let spec = RingSpec::Gf {
            p,
            n,
            modulus: (!is_default).then(|| f.modulus.clone()),
        };
        let size = f.q;
        Ok(Ring(Arc::new(Inner {
            spec,
            kind: Kind::Field(f),
            size,
            residue: None,
        })))
    }

    /// Z/p^k with k >= 2.
    pub fn zmod(p: u64, k: u32) -> Result<Ring> {
        if !field::is_prime(p) {
            return Err(Error::NonPrimeCharacteristic(p));
        }
        if k < 2 {
            return Err(Error::TrivialIdeal);
        }
        let m = p
            .checked_pow(k)
            .filter(|&m| m <= u32::MAX as u64)
            .ok_or_else(|| Error::RingTooLarge(format!("Z/{p}^{k}")))?;
        Ok(Ring(Arc::new(Inner {
            spec: RingSpec::Zmod { p, k },
            kind: Kind::Zmod { p, m },
            size: m,
            residue: Some(Ring::field(p, 1)?),
        })))
    }

    /// GF(q)[u]/(u^k) with k >= 2, for a field ring `residue`.
    pub fn fqu(residue: &Ring, k: u32) -> Result<Ring> {
        let Kind::Field(f) = &residue.0.kind else {
            return Err(Error::NotAField(residue.to_string()));
        };
        if k < 2 {
            return Err(Error::TrivialIdeal);
        }
        let size =
            f.q.checked_pow(k)
                .filter(|&s| s <= u32::MAX as u64)
                .ok_or_else(|| Error::RingTooLarge(format!("GF({})[u]/(u^{k})", f.q)))?;
        if residue.spec()
            != &(RingSpec::Gf {
                p: f.p,
                n: f.n,
                modulus: None,
            })
        {
            // The grammar has no slot for a custom modulus inside fqu:.
            return Err(Error::InvalidRingSpec(format!(
                "fqu residue field must use the default modulus, got {residue}"
            )));
        }
        let field = Field::new(f.p, f.n, Some(&f.modulus))?;
        Ok(Ring(Arc::new(Inner {
            spec: RingSpec::Fqu { p: f.p, n: f.n, k },
            kind: Kind::Fqu { field, k },
            size,
            residue: Some(residue.clone()),
        })))
    }

    pub fn spec(&self) -> &RingSpec {
        &self.0.spec
    }

    pub fn size(&self) -> usize {
        self.0.size as usize
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.0.size as u32).map(Elem)
    }

    /// Validated element by canonical index.
    pub fn elem(&self, index: u64) -> Result<Elem> {
        if index < self.0.size {
            Ok(Elem(index as u32))
        } else {
            Err(Error::InvalidElement(format!(
                "index {index} out of range for {self}"
            )))
        }
    }

    pub fn element(&self, e: Elem) -> Element {
        Element::new(self.clone(), e)
    }

    pub fn is_field(&self) -> bool {
        matches!(self.0.kind, Kind::Field(_))
    }

    pub fn is_prime_field(&self) -> bool {
        matches!(&self.0.kind, Kind::Field(f) if f.n == 1)
    }

    /// Defining polynomial of a field, constant term first.
    pub fn modulus(&self) -> Option<&[u64]> {
        match &self.0.kind {
            Kind::Field(f) => Some(&f.modulus),
            _ => None,
        }
    }

    /// The residue field R/M; a field is its own residue field.
    pub fn residue_field(&self) -> &Ring {
        self.0.residue.as_ref().unwrap_or(self)
    }

    /// q = |R/M|.
    pub fn residue_size(&self) -> u64 {
        match &self.0.kind {
            Kind::Field(f) | Kind::Fqu { field: f, .. } => f.q,
            Kind::Zmod { p, .. } => *p,
        }
    }

    /// p = char(R/M).
    pub fn residue_characteristic(&self) -> u64 {
        match &self.0.kind {
            Kind::Field(f) | Kind::Fqu { field: f, .. } => f.p,
            Kind::Zmod { p, .. } => *p,
        }
    }

    pub fn maximal_ideal_size(&self) -> usize {
        (self.0.size / self.residue_size()) as usize
    }

    pub fn zero(&self) -> Elem {
        Elem(0)
    }

    pub fn one(&self) -> Elem {
        Elem(1)
    }

    /// The image of the integer `m` under Z -> R.
    pub fn from_int(&self, m: i64) -> Elem {
        let v = match &self.0.kind {
            Kind::Field(f) | Kind::Fqu { field: f, .. } => f.embed_int(m),
            Kind::Zmod { m: modulus, .. } => m.rem_euclid(*modulus as i64) as u64,
        };
        Elem(v as u32)
    }

    pub fn add(&self, x: Elem, y: Elem) -> Elem {
        let (a, b) = (x.0 as u64, y.0 as u64);
        let v = match &self.0.kind {
            Kind::Field(f) => f.add(a, b),
            Kind::Zmod { m, .. } => (a + b) % m,
            Kind::Fqu { field, k } => {
                let da = digits(x.0 as u64, field.q, *k as usize);
                let db = digits(y.0 as u64, field.q, *k as usize);
                let sum: Vec<u64> = da.iter().zip(&db).map(|(&s, &t)| field.add(s, t)).collect();
                from_digits(&sum, field.q)
            }
        };
        Elem(v as u32)
    }

    pub fn neg(&self, x: Elem) -> Elem {
        let a = x.0 as u64;
        let v = match &self.0.kind {
            Kind::Field(f) => f.neg(a),
            Kind::Zmod { m, .. } => (m - a) % m,
            Kind::Fqu { field, k } => {
                let d: Vec<u64> = digits(x.0 as u64, field.q, *k as usize)
                    .into_iter()
                    .map(|c| field.neg(c))
                    .collect();
                from_digits(&d, field.q)
            }
        };
        Elem(v as u32)
    }

    pub fn sub(&self, x: Elem, y: Elem) -> Elem {
        self.add(x, self.neg(y))
    }

    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        let (a, b) = (x.0 as u64, y.0 as u64);
        let v = match &self.0.kind {
            Kind::Field(f) => f.mul(a, b),
            Kind::Zmod { m, .. } => a * b % m,
            Kind::Fqu { field, k } => {
                let k = *k as usize;
                let da = digits(x.0 as u64, field.q, k);
                let db = digits(y.0 as u64, field.q, k);
                let mut prod = vec![0u64; k];
                for i in 0..k {
                    if da[i] == 0 {
                        continue;
                    }
                    for j in 0..k - i {
                        prod[i + j] = field.add(prod[i + j], field.mul(da[i], db[j]));
                    }
                }
                from_digits(&prod, field.q)
            }
        };
        Elem(v as u32)
    }

    pub fn pow(&self, x: Elem, mut e: u64) -> Elem {
        let mut base = x;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn is_unit(&self, x: Elem) -> bool {
        !self.in_maximal_ideal(x)
    }

    pub fn in_maximal_ideal(&self, x: Elem) -> bool {
        match &self.0.kind {
            Kind::Field(_) => x.0 == 0,
            Kind::Zmod { p, .. } => (x.0 as u64).is_multiple_of(*p),
            Kind::Fqu { field, .. } => (x.0 as u64).is_multiple_of(field.q),
        }
    }

    /// Multiplicative inverse of a unit.
    pub fn inv(&self, x: Elem) -> Result<Elem> {
        if !self.is_unit(x) {
            return Err(Error::NonUnitInverse(self.element(x).to_string()));
        }
        Ok(match &self.0.kind {
            Kind::Field(f) => Elem(f.inv(x.0 as u64) as u32),
            Kind::Zmod { m, .. } => Elem(zmod_inverse(x.0 as u64, *m) as u32),
            Kind::Fqu { .. } => {
                // unit group order is |R| - |M|
                let order = self.0.size - self.maximal_ideal_size() as u64;
                self.pow(x, order - 1)
            }
        })
    }

    /// Reduction modulo M, landing in [`Ring::residue_field`].
    pub fn residue(&self, x: Elem) -> Elem {
        match &self.0.kind {
            Kind::Field(_) => x,
            Kind::Zmod { p, .. } => Elem((x.0 as u64 % p) as u32),
            Kind::Fqu { field, .. } => Elem((x.0 as u64 % field.q) as u32),
        }
    }

    /// Canonical representative of a residue class: integers `0..p` for
    /// Z/p^k and constant polynomials for GF(q)[u]/(u^k).
    pub fn lift(&self, a: Elem) -> Elem {
        debug_assert!((a.0 as u64) < self.residue_size());
        // Both families enumerate the representatives first, with indices
        // equal to the residue field index.
        a
    }

    /// The complete residue system `lift(R/M)` in enumeration order.
    pub fn residue_system(&self) -> impl Iterator<Item = Elem> + '_ {
        self.residue_field().elements().map(move |a| self.lift(a))
    }

    /// JSON encoding: an integer for Z/p^k and prime fields, a coefficient
    /// list otherwise.
    pub fn encode(&self, x: Elem) -> Value {
        match &self.0.kind {
            Kind::Zmod { .. } => Value::from(x.0),
            Kind::Field(f) if f.n == 1 => Value::from(x.0),
            Kind::Field(f) => Value::from(digits(x.0 as u64, f.p, f.n as usize)),
            Kind::Fqu { k, .. } => {
                let residue = self.residue_field();
                let q = self.residue_size();
                Value::Array(
                    digits(x.0 as u64, q, *k as usize)
                        .into_iter()
                        .map(|c| residue.encode(Elem(c as u32)))
                        .collect(),
                )
            }
        }
    }

    /// Inverse of [`Ring::encode`]. A bare integer is also accepted as a
    /// canonical index for any ring, and coefficient lists may omit
    /// trailing zeros.
    pub fn decode(&self, v: &Value) -> Result<Elem> {
        if let Some(i) = v.as_u64() {
            return self.elem(i);
        }
        let Some(items) = v.as_array() else {
            return Err(Error::InvalidElement(format!(
                "{v} is neither an integer nor a list"
            )));
        };
        let (base, len) = match &self.0.kind {
            Kind::Zmod { .. } => {
                return Err(Error::InvalidElement(format!(
                    "{self} elements are integers, got {v}"
                )))
            }
            Kind::Field(f) => (f.p, f.n as usize),
            Kind::Fqu { field, k } => (field.q, *k as usize),
        };
        if items.len() > len {
            return Err(Error::InvalidElement(format!(
                "{v} has more than {len} coefficients for {self}"
            )));
        }
        let mut coeffs = Vec::with_capacity(len);
        for item in items {
            let c = match &self.0.kind {
                Kind::Fqu { .. } => self.residue_field().decode(item)?.0 as u64,
                _ => item.as_u64().filter(|&c| c < base).ok_or_else(|| {
                    Error::InvalidElement(format!("bad coefficient {item} in {v}"))
                })?,
            };
            coeffs.push(c);
        }
        Ok(Elem(from_digits(&coeffs, base) as u32))
    }
}

fn zmod_inverse(a: u64, m: u64) -> u64 {
    let (mut r0, mut r1) = (m as i64, a as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let qt = r0 / r1;
        (r0, r1) = (r1, r0 - qt * r1);
        (t0, t1) = (t1, t0 - qt * t1);
    }
    debug_assert_eq!(r0, 1);
    t0.rem_euclid(m as i64) as u64
}

impl PartialEq for Ring {
    fn eq(&self, other: &Ring) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.spec == other.0.spec
    }
}

impl Eq for Ring {}

impl Hash for Ring {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.spec.hash(state);
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.spec.fmt(f)
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring({})", self.0.spec)
    }
}

impl std::str::FromStr for Ring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Ring> {
        Ring::new(&s.parse()?)
    }
}

pub(crate) fn check_same(a: &Ring, b: &Ring) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::MixedRings(a.to_string(), b.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Ring {
        s.parse().unwrap()
    }

    fn small_rings() -> Vec<Ring> {
        [
            "gf:2",
            "gf:3",
            "gf:2^2",
            "gf:5",
            "gf:7",
            "gf:2^3",
            "gf:3^2",
            "gf:2^4",
            "gf:3^4",
            "zmod:2^2",
            "zmod:2^3",
            "zmod:3^2",
            "zmod:5^2",
            "zmod:3^3",
            "zmod:3^4",
            "fqu:2,2",
            "fqu:3,2",
            "fqu:2^2,2",
            "fqu:2,3",
            "fqu:3^2,2",
        ]
        .iter()
        .map(|s| r(s))
        .collect()
    }

    #[test]
    fn make_field_examples() {
        let f3 = Ring::field(3, 1).unwrap();
        assert_eq!(f3.size(), 3);
        assert!(f3.is_field());
        let gf4 = Ring::field(2, 2).unwrap();
        assert_eq!(gf4.modulus().unwrap(), &[1, 1, 1]);
        assert_eq!(gf4.size(), 4);
        let gf9 = Ring::field_with_modulus(3, 2, &[1, 0, 1]).unwrap();
        assert_eq!(gf9.size(), 9);
        // explicit default modulus names the same ring
        assert_eq!(gf9, Ring::field(3, 2).unwrap());
        assert_eq!(gf9.to_string(), "gf:3^2");
        let other = Ring::field_with_modulus(3, 2, &[2, 1, 1]).unwrap();
        assert_ne!(other, gf9);
        assert_eq!(other.to_string(), "gf:3^2/2,1,1");
    }

    #[test]
    fn make_local_ring_examples() {
        let z9 = r("zmod:3^2");
        assert_eq!((z9.size(), z9.maximal_ideal_size()), (9, 3));
        assert_eq!(z9.residue_field(), &r("gf:3"));
        let r16 = r("fqu:2^2,2");
        assert_eq!((r16.size(), r16.maximal_ideal_size()), (16, 4));
        assert_eq!(r16.residue_field(), &r("gf:2^2"));
        assert_eq!(Ring::zmod(2, 1).unwrap_err(), Error::TrivialIdeal);
        assert_eq!("fqu:3,1".parse::<Ring>().unwrap_err(), Error::TrivialIdeal);
        assert_eq!(
            Ring::zmod(6, 2).unwrap_err(),
            Error::NonPrimeCharacteristic(6)
        );
    }

    #[test]
    fn arithmetic_examples() {
        let gf4 = r("gf:2^2");
        let w = gf4.decode(&serde_json::json!([0, 1])).unwrap();
        let w_plus_1 = gf4.decode(&serde_json::json!([1, 1])).unwrap();
        assert_eq!(gf4.mul(w, w), w_plus_1);

        let z9 = r("zmod:3^2");
        // exhaustive search for the inverse of 2
        let two = z9.from_int(2);
        let found: Vec<Elem> = z9
            .elements()
            .filter(|&y| z9.mul(two, y) == z9.one())
            .collect();
        assert_eq!(found, vec![z9.from_int(5)]);
        assert_eq!(z9.inv(two).unwrap(), z9.from_int(5));
        assert!(matches!(
            z9.inv(z9.from_int(3)),
            Err(Error::NonUnitInverse(_))
        ));
    }

    #[test]
    fn residue_and_lift_examples() {
        let z9 = r("zmod:3^2");
        assert_eq!(z9.residue(z9.from_int(7)), Elem(1));
        assert_eq!(z9.residue(z9.from_int(6)), Elem(0));
        assert_eq!(z9.lift(Elem(2)), z9.from_int(2));
        let r16 = r("fqu:2^2,2");
        let w_plus_u = r16.decode(&serde_json::json!([[0, 1], [1, 0]])).unwrap();
        let w = r("gf:2^2").decode(&serde_json::json!([0, 1])).unwrap();
        assert_eq!(r16.residue(w_plus_u), w);
    }

    #[test]
    fn unit_examples() {
        let z9 = r("zmod:3^2");
        assert!(!z9.is_unit(z9.from_int(3)));
        assert!(z9.in_maximal_ideal(z9.from_int(3)));
        assert!(z9.is_unit(z9.from_int(4)));
        assert_eq!(z9.mul(z9.from_int(4), z9.from_int(7)), z9.one());
        let f5 = r("gf:5");
        assert!(f5.in_maximal_ideal(f5.zero()));
        assert!(f5.elements().skip(1).all(|c| f5.is_unit(c)));
    }

    #[test]
    fn local_dichotomy_and_counts() {
        for ring in small_rings() {
            let units = ring.elements().filter(|&x| ring.is_unit(x)).count();
            let ideal = ring
                .elements()
                .filter(|&x| ring.in_maximal_ideal(x))
                .count();
            assert_eq!(units + ideal, ring.size(), "{ring}");
            assert_eq!(ideal, ring.maximal_ideal_size(), "{ring}");
            assert_eq!(
                ring.size() as u64,
                ring.residue_size() * ideal as u64,
                "{ring}"
            );
        }
    }

    #[test]
    fn residue_is_homomorphism() {
        for ring in small_rings().into_iter().filter(|r| r.size() <= 81) {
            let k = ring.residue_field();
            for x in ring.elements() {
                for y in ring.elements() {
                    assert_eq!(
                        ring.residue(ring.add(x, y)),
                        k.add(ring.residue(x), ring.residue(y))
                    );
                    assert_eq!(
                        ring.residue(ring.mul(x, y)),
                        k.mul(ring.residue(x), ring.residue(y))
                    );
                }
            }
            for a in k.elements() {
                assert_eq!(ring.residue(ring.lift(a)), a);
            }
        }
    }

    #[test]
    fn characteristic_lies_in_ideal() {
        for ring in small_rings().into_iter().filter(|r| !r.is_field()) {
            let p = ring.from_int(ring.residue_characteristic() as i64);
            assert!(ring.in_maximal_ideal(p), "{ring}");
            let q = ring.from_int(ring.residue_size() as i64);
            assert!(ring.in_maximal_ideal(q), "{ring}");
        }
    }

    #[test]
    fn field_inversion_exhaustive() {
        for ring in small_rings()
            .into_iter()
            .filter(|r| r.is_field() && r.size() <= 81)
        {
            for x in ring.elements().skip(1) {
                assert_eq!(ring.mul(x, ring.inv(x).unwrap()), ring.one(), "{ring}");
            }
        }
    }

    #[test]
    fn unit_inverses_in_local_rings() {
        for ring in small_rings().into_iter().filter(|r| !r.is_field()) {
            for x in ring.elements().filter(|&x| ring.is_unit(x)) {
                assert_eq!(ring.mul(x, ring.inv(x).unwrap()), ring.one(), "{ring}");
            }
        }
    }

    #[test]
    fn ring_axioms_spot() {
        for ring in small_rings().into_iter().filter(|r| r.size() <= 27) {
            for x in ring.elements() {
                assert_eq!(ring.add(x, ring.neg(x)), ring.zero());
                assert_eq!(ring.mul(x, ring.one()), x);
                for y in ring.elements() {
                    assert_eq!(ring.mul(x, y), ring.mul(y, x));
                    for z in ring.elements() {
                        assert_eq!(
                            ring.mul(x, ring.add(y, z)),
                            ring.add(ring.mul(x, y), ring.mul(x, z))
                        );
                        assert_eq!(ring.mul(ring.mul(x, y), z), ring.mul(x, ring.mul(y, z)));
                    }
                }
            }
        }
    }

    #[test]
    fn encoding_round_trips() {
        for ring in small_rings() {
            for x in ring.elements() {
                assert_eq!(ring.decode(&ring.encode(x)).unwrap(), x, "{ring}");
            }
        }
        let f5 = r("gf:5");
        assert!(f5.decode(&serde_json::json!(5)).is_err());
        assert!(r("zmod:3^2").decode(&serde_json::json!([1])).is_err());
        assert_eq!(
            r("gf:3^2").decode(&serde_json::json!([2])).unwrap(),
            Elem(2)
        );
    }
}
