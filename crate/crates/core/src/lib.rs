//! Permutation polynomials over finite fields and finite local rings.
//!
//! * [`ring`]: GF(p^n), Z/p^k and GF(q)[u]/(u^k) with full enumeration.
//! * [`poly`]: dense polynomials and the functions they induce.
//! * [`transpo`]: degree q-2 polynomials inducing transpositions of GF(q).
//! * [`lift`]: the permutation criterion on local rings and the lifting
//!   construction built on it.
//! * [`permgroup`]: permutation tables, subgroup closure, and the group of
//!   polynomial permutations.

pub mod error;
pub mod lift;
pub mod permgroup;
pub mod poly;
pub mod ring;
pub mod transpo;

pub use error::{Error, Result};
pub use lift::{
    brute_force_is_permutation, corollary_h, lift_poly, noebauer_is_permutation, proposition_h,
    residue_poly, CriterionReport, LiftInputs,
};
pub use permgroup::{
    all_polynomial_functions, generated_subgroup, polynomial_permutation_group,
    question_experiment, ClosureBounds, ExperimentReport, GroupClosure, PermutationTable,
    SamplingConfig, SamplingMode,
};
pub use poly::{FunctionTable, Polynomial};
pub use ring::{Elem, Element, Ring, RingSpec};
pub use transpo::{
    base_transposition, carlitz_poly, carlitz_table, martin_poly, martin_poly_ab, ones_poly,
    transposition_poly, transposition_poly_for, verify_transposition, TranspositionSpec,
    VerificationReport,
};
