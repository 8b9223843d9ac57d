//! Primitive polynomials of degree two over small finite fields.
//!
//! The crate decides primitivity of `x^2 + b x + c` over GF(q) with a test
//! that needs at most one short synthetic division, enumerates every
//! primitive quadratic from a handful of exponent sets, and checks both
//! against a brute-force order computation.
//!
//! ```
//! use gfquad::{build_field, is_primitive_quadratic, MonicQuadratic, Reason};
//!
//! let gf13 = build_field(13, 1, None, Some(6)).unwrap();
//! let f = MonicQuadratic::new(gf13.elem(1).unwrap(), gf13.elem(2).unwrap());
//! let verdict = is_primitive_quadratic(&gf13, f);
//! assert!(verdict.primitive);
//! assert_eq!(verdict.reason, Reason::ConditionA);
//! ```

pub mod bench;
pub mod enumeration;
pub mod error;
pub mod extension;
pub mod field;
pub mod invariants;
pub mod numtheory;
pub mod oracle;
pub mod poly;
pub mod primitivity;
pub mod text;

pub use enumeration::{enumerate_primitive_quadratics, EnumerationTables};
pub use error::{Error, Result};
pub use extension::{build_extension, ExtField};
pub use field::{build_field, Elem, FieldArith, FieldBuilder, FieldElement, GaloisField};
pub use numtheory::euler_phi;
pub use oracle::{brute_force_is_primitive, cross_validate, factor_x_q1_minus_c};
pub use poly::{MonicQuadratic, Poly, PolyRing, QuasiOrderResult};
pub use primitivity::{
    classify_q_plus_one, is_irreducible_quadratic, is_primitive_quadratic, PrimitivityVerdict,
    QPlusOneClass, Reason,
};

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
pub struct ReadmeDoctests;
