//! Polynomials inducing transpositions of a finite field.
//!
//! The central object is the degree q-2 polynomial
//!
//! ```text
//! f_{a,b}(x) = (b-a) * f((x-a)/(b-a)) + a,    f(y) = y^{q-2} + ... + y^2 + 2y + 1
//! ```
//!
//! which swaps `a` and `b` and fixes everything else. `f` itself is
//! `l(y) + y` where `l(y) = y^{q-2} + ... + y + 1` vanishes on every element
//! except 0 and 1. The older constructions (the nested degree (q-2)^3 form
//! for `(0 a)` and the prime-field form) are provided for comparison.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::poly::{FunctionTable, Polynomial};
use crate::ring::{Elem, Ring};

/// Largest field for which [`carlitz_poly`] expands the nested form.
pub const CARLITZ_EXPANSION_MAX_Q: usize = 16;

fn require_field(ring: &Ring) -> Result<()> {
    if ring.is_field() {
        Ok(())
    } else {
        Err(Error::NotAField(ring.to_string()))
    }
}

fn require_q_above_two(ring: &Ring) -> Result<()> {
    require_field(ring)?;
    if ring.size() <= 2 {
        return Err(Error::FieldTooSmall(ring.size() as u64));
    }
    Ok(())
}

/// A validated transposition request: distinct points of a field with more
/// than two elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TranspositionSpec {
    field: Ring,
    a: Elem,
    b: Elem,
}

impl TranspositionSpec {
    pub fn new(field: &Ring, a: Elem, b: Elem) -> Result<TranspositionSpec> {
        require_q_above_two(field)?;
        field.elem(a.index() as u64)?;
        field.elem(b.index() as u64)?;
        if a == b {
            return Err(Error::EqualPoints);
        }
        Ok(TranspositionSpec {
            field: field.clone(),
            a,
            b,
        })
    }

    pub fn field(&self) -> &Ring {
        &self.field
    }

    pub fn a(&self) -> Elem {
        self.a
    }

    pub fn b(&self) -> Elem {
        self.b
    }
}

/// `x^{q-2} + ... + x + 1` over any ring, with q the residue field size.
pub(crate) fn ones_poly_over(ring: &Ring) -> Polynomial {
    let q = ring.residue_size() as usize;
    Polynomial::new(ring, vec![ring.one(); q - 1])
}

/// `l(x) = x^{q-2} + ... + x + 1`, the product of `x - c` over all `c`
/// other than 0 and 1.
pub fn ones_poly(field: &Ring) -> Result<Polynomial> {
    require_field(field)?;
    Ok(ones_poly_over(field))
}

/// `l(x) + x`, inducing the transposition `(0 1)`.
pub fn base_transposition(field: &Ring) -> Result<Polynomial> {
    require_q_above_two(field)?;
    Ok(ones_poly_over(field).add_unchecked(&Polynomial::x(field)))
}

/// The base polynomial with the exponent sequence read literally as
/// `x^{q-1} + x^{q-2} + ... + x^2 + 2x + 1`. It does not induce `(0 1)`
/// (it sends both 0 and 1 to 1); kept as a reference point.
pub fn literal_base_candidate(field: &Ring) -> Result<Polynomial> {
    let f = base_transposition(field)?;
    let top = Polynomial::monomial(field, field.one(), field.size() - 1);
    Ok(f.add_unchecked(&top))
}

/// `(b-a) f((x-a)/(b-a)) + a` built by composition in `ring`.
///
/// Works over any supported ring in which `b - a` is a unit; `f` uses the
/// residue field size for its length.
pub(crate) fn transposition_in(ring: &Ring, a: Elem, b: Elem) -> Result<Polynomial> {
    let d = ring.sub(b, a);
    let d_inv = ring.inv(d)?;
    let inner = Polynomial::new(ring, vec![ring.mul(ring.neg(a), d_inv), d_inv]);
    let outer = Polynomial::new(ring, vec![a, d]);
    let base = ones_poly_over(ring).add_unchecked(&Polynomial::x(ring));
    outer.compose(&base.compose(&inner)?)
}

/// `f_{a,b}`: degree q-2, swaps `a` and `b`, fixes everything else.
pub fn transposition_poly(spec: &TranspositionSpec) -> Polynomial {
    transposition_in(&spec.field, spec.a, spec.b).expect("b - a is a nonzero field element")
}

/// Convenience wrapper validating `a` and `b`.
pub fn transposition_poly_for(field: &Ring, a: Elem, b: Elem) -> Result<Polynomial> {
    Ok(transposition_poly(&TranspositionSpec::new(field, a, b)?))
}

fn check_carlitz_args(field: &Ring, a: Elem) -> Result<()> {
    require_q_above_two(field)?;
    field.elem(a.index() as u64)?;
    if a == field.zero() {
        return Err(Error::ZeroPoint);
    }
    Ok(())
}

/// Evaluates `-a^2(((x-a)^{q-2} + 1/a)^{q-2} - a)^{q-2}` at `x` without
/// expanding.
pub fn carlitz_eval(field: &Ring, a: Elem, x: Elem) -> Result<Elem> {
    check_carlitz_args(field, a)?;
    let e = field.size() as u64 - 2;
    let inv_a = field.inv(a)?;
    let t = field.pow(field.sub(x, a), e);
    let t = field.pow(field.add(t, inv_a), e);
    let t = field.pow(field.sub(t, a), e);
    Ok(field.mul(field.neg(field.mul(a, a)), t))
}

/// Function table of the nested form, by pointwise evaluation.
pub fn carlitz_table(field: &Ring, a: Elem) -> Result<FunctionTable> {
    check_carlitz_args(field, a)?;
    let map = field
        .elements()
        .map(|x| carlitz_eval(field, a, x))
        .collect::<Result<Vec<_>>>()?;
    FunctionTable::new(field, map)
}

/// The nested form fully expanded; degree `(q-2)^3`. Limited to
/// `q <= CARLITZ_EXPANSION_MAX_Q`.
pub fn carlitz_poly(field: &Ring, a: Elem) -> Result<Polynomial> {
    check_carlitz_args(field, a)?;
    let q = field.size();
    if q > CARLITZ_EXPANSION_MAX_Q {
        return Err(Error::ExpansionTooLarge(format!(
            "nested form over GF({q}) has degree {}",
            (q - 2).pow(3)
        )));
    }
    let e = q as u64 - 2;
    let inv_a = field.inv(a)?;
    let t = Polynomial::linear_root(field, a).pow(e);
    let t = t.add_unchecked(&Polynomial::constant(field, inv_a)).pow(e);
    let t = t
        .add_unchecked(&Polynomial::constant(field, field.neg(a)))
        .pow(e);
    Ok(t.scale(field.neg(field.mul(a, a))))
}

fn require_odd_prime_field(field: &Ring) -> Result<()> {
    require_field(field)?;
    if !field.is_prime_field() {
        return Err(Error::NotPrimeField(field.to_string()));
    }
    require_q_above_two(field)
}

/// `x^{p-2} + x^{p-3} + ... + x^2 + 2x + 1` over a prime field, written out
/// term by term.
pub fn martin_poly(field: &Ring) -> Result<Polynomial> {
    require_odd_prime_field(field)?;
    let p = field.size();
    let mut coeffs = vec![field.one(); p - 1];
    coeffs[1] = field.from_int(2);
    Ok(Polynomial::new(field, coeffs))
}

/// The prime-field polynomial for `(a b)`: `(b-a)(y^{p-2} + ... + 2y + 1) + a`
/// with `y = (x-a)/(b-a)`, summed power by power.
pub fn martin_poly_ab(field: &Ring, a: Elem, b: Elem) -> Result<Polynomial> {
    require_odd_prime_field(field)?;
    if a == b {
        return Err(Error::EqualPoints);
    }
    let p = field.size();
    let d = field.sub(b, a);
    let d_inv = field.inv(d)?;
    let y = Polynomial::new(field, vec![field.mul(field.neg(a), d_inv), d_inv]);
    let mut sum = Polynomial::from_ints(field, &[1]).add_unchecked(&y.scale(field.from_int(2)));
    let mut power = y.clone();
    for _ in 2..=p - 2 {
        power = power.mul_unchecked(&y);
        sum = sum.add_unchecked(&power);
    }
    Ok(sum.scale(d).add_unchecked(&Polynomial::constant(field, a)))
}

/// Outcome of checking a polynomial against a transposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub is_permutation: bool,
    pub is_exact_transposition: bool,
    pub table: FunctionTable,
    pub degree: Option<usize>,
    /// First point (in enumeration order) where the induced map differs
    /// from `(a b)`, with the value found there.
    pub counterexample: Option<(Elem, Elem)>,
}

impl VerificationReport {
    pub fn to_json(&self) -> Value {
        let ring = self.table.ring();
        json!({
            "is_permutation": self.is_permutation,
            "is_exact_transposition": self.is_exact_transposition,
            "table": self.table.to_json(),
            "degree": self.degree,
            "counterexample": self.counterexample.map(|(x, y)| json!({
                "point": ring.encode(x),
                "value": ring.encode(y),
            })),
        })
    }
}

/// Compares the function induced by `f` with the transposition `(a b)`.
pub fn verify_transposition(f: &Polynomial, a: Elem, b: Elem) -> VerificationReport {
    let table = f.function_table();
    let expected = |x: Elem| {
        if x == a {
            b
        } else if x == b {
            a
        } else {
            x
        }
    };
    let counterexample = f
        .ring()
        .elements()
        .map(|x| (x, table.get(x)))
        .find(|&(x, y)| y != expected(x));
    VerificationReport {
        is_permutation: table.is_bijective(),
        is_exact_transposition: a != b && counterexample.is_none(),
        degree: f.degree(),
        table,
        counterexample,
    }
}
