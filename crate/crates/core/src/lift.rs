//! Permutation polynomials over finite local rings.
//!
//! A polynomial `f` permutes a finite local ring `R` with maximal ideal
//! `M != 0` iff its reduction permutes `R/M` and `f'(r)` is a unit for every
//! `r`. Since `f'(r) mod M` only depends on `r mod M`, the second condition
//! is checked on the complete residue system.
//!
//! Given `f` permuting `R/M`, `g` unit-valued and any `l`,
//!
//! ```text
//! h = f + (f' + g)(x^q - x) + p*l
//! ```
//!
//! permutes `R` and agrees with `f` modulo `M`.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ring::{check_same, Elem, Ring};
use crate::transpo::transposition_in;

fn require_local(ring: &Ring) -> Result<()> {
    if ring.is_field() {
        Err(Error::NotLocalRing(ring.to_string()))
    } else {
        Ok(())
    }
}

/// Coefficient-wise reduction modulo `M`.
pub fn residue_poly(f: &Polynomial) -> Polynomial {
    let ring = f.ring();
    f.map_coeffs(ring.residue_field(), |c| ring.residue(c))
}

/// Coefficient-wise lift of a polynomial over `R/M` to `R` through the
/// fixed complete residue system.
pub fn lift_poly(f: &Polynomial, ring: &Ring) -> Result<Polynomial> {
    check_same(f.ring(), ring.residue_field())?;
    Ok(f.map_coeffs(ring, |c| ring.lift(c)))
}

/// First residue point whose image collides with an earlier one, if any.
fn residue_collision(f: &Polynomial) -> Option<Elem> {
    let fbar = residue_poly(f);
    let k = fbar.ring();
    let mut seen = vec![false; k.size()];
    k.elements()
        .find(|&c| std::mem::replace(&mut seen[fbar.eval(c).index()], true))
}

/// First residue representative `r` with `g(r)` in `M`.
fn non_unit_point(g: &Polynomial) -> Option<Elem> {
    let ring = g.ring();
    ring.residue_system()
        .find(|&r| ring.in_maximal_ideal(g.eval(r)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionReport {
    pub ring: Ring,
    /// The reduction permutes `R/M`.
    pub condition1: bool,
    /// `f'` is unit-valued.
    pub condition2: bool,
    pub verdict: bool,
    /// Residue point at which the reduction first repeats a value.
    pub witness_residue: Option<Elem>,
    /// Ring point with `f'(r)` in `M`.
    pub witness_point: Option<Elem>,
}

impl CriterionReport {
    pub fn to_json(&self) -> Value {
        let k = self.ring.residue_field();
        let mut v = json!({
            "condition1": self.condition1,
            "condition2": self.condition2,
            "verdict": self.verdict,
        });
        if let Some(c) = self.witness_residue {
            v["witness_residue"] = k.encode(c);
        }
        if let Some(r) = self.witness_point {
            v["witness_point"] = self.ring.encode(r);
        }
        v
    }
}

/// Decides whether `f` permutes a local ring (not a field) without
/// evaluating it on the whole ring.
pub fn noebauer_is_permutation(f: &Polynomial) -> Result<CriterionReport> {
    let ring = f.ring();
    require_local(ring)?;
    let witness_residue = residue_collision(f);
    let witness_point = non_unit_point(&f.derivative());
    let condition1 = witness_residue.is_none();
    let condition2 = witness_point.is_none();
    Ok(CriterionReport {
        ring: ring.clone(),
        condition1,
        condition2,
        verdict: condition1 && condition2,
        witness_residue,
        witness_point,
    })
}

/// Evaluates `f` everywhere and checks injectivity.
pub fn brute_force_is_permutation(f: &Polynomial) -> bool {
    f.function_table().is_bijective()
}

/// Validated inputs of the lifting construction.
#[derive(Clone, Debug)]
pub struct LiftInputs {
    ring: Ring,
    f: Polynomial,
    g: Polynomial,
    l: Polynomial,
    points: Option<(Elem, Elem)>,
}

impl LiftInputs {
    /// `f` must permute `R/M` and `g` must be unit-valued.
    pub fn proposition(f: &Polynomial, g: &Polynomial, l: &Polynomial) -> Result<LiftInputs> {
        let ring = f.ring();
        require_local(ring)?;
        check_same(ring, g.ring())?;
        check_same(ring, l.ring())?;
        if residue_collision(f).is_some() {
            return Err(Error::ResidueNotPermutation);
        }
        Self::check_g(g)?;
        Ok(LiftInputs {
            ring: ring.clone(),
            f: f.clone(),
            g: g.clone(),
            l: l.clone(),
            points: None,
        })
    }

    /// `f` is the transposition polynomial for `(a b)` computed directly in
    /// `R`, dividing by `b - a` through its unit inverse.
    pub fn corollary(
        ring: &Ring,
        a: Elem,
        b: Elem,
        g: &Polynomial,
        l: &Polynomial,
    ) -> Result<LiftInputs> {
        require_local(ring)?;
        check_same(ring, g.ring())?;
        check_same(ring, l.ring())?;
        ring.elem(a.index() as u64)?;
        ring.elem(b.index() as u64)?;
        let q = ring.residue_size();
        if q <= 2 {
            return Err(Error::ResidueFieldTooSmall(q));
        }
        if ring.residue(a) == ring.residue(b) {
            return Err(Error::CongruentPoints);
        }
        Self::check_g(g)?;
        Ok(LiftInputs {
            ring: ring.clone(),
            f: transposition_in(ring, a, b)?,
            g: g.clone(),
            l: l.clone(),
            points: Some((a, b)),
        })
    }

    fn check_g(g: &Polynomial) -> Result<()> {
        match non_unit_point(g) {
            Some(r) => Err(Error::GNotUnitValued(g.ring().element(r).to_string())),
            None => Ok(()),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn f(&self) -> &Polynomial {
        &self.f
    }

    pub fn g(&self) -> &Polynomial {
        &self.g
    }

    pub fn l(&self) -> &Polynomial {
        &self.l
    }

    /// The transposed points, for inputs built by [`LiftInputs::corollary`].
    pub fn points(&self) -> Option<(Elem, Elem)> {
        self.points
    }

    /// `f + (f' + g)(x^q - x) + p*l`. The `p*l` term vanishes when R has
    /// characteristic p.
    pub fn build(&self) -> Polynomial {
        let r = &self.ring;
        let q = r.residue_size() as usize;
        let p = r.from_int(r.residue_characteristic() as i64);
        let frob = Polynomial::monomial(r, r.one(), q).add_unchecked(&Polynomial::x(r).neg());
        let slope = self.f.derivative().add_unchecked(&self.g);
        self.f
            .add_unchecked(&slope.mul_unchecked(&frob))
            .add_unchecked(&self.l.scale(p))
    }
}

/// `h = f + (f' + g)(x^q - x) + p*l`.
pub fn proposition_h(f: &Polynomial, g: &Polynomial, l: &Polynomial) -> Result<Polynomial> {
    Ok(LiftInputs::proposition(f, g, l)?.build())
}

/// `h` with `f = f_{a,b}` over `R`; its reduction is the transposition of
/// the residues of `a` and `b`.
pub fn corollary_h(
    ring: &Ring,
    a: Elem,
    b: Elem,
    g: &Polynomial,
    l: &Polynomial,
) -> Result<Polynomial> {
    Ok(LiftInputs::corollary(ring, a, b, g, l)?.build())
}
