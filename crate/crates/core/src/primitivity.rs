//! Deciding primitivity of `x^2 + b x + c` over GF(q).
//!
//! For irreducible `f` with `b != 0` and `c` primitive, the shape of `q + 1`
//! decides the rest:
//!
//! * `q + 1` an odd prime, a power of two, or twice an odd prime: `f` is
//!   primitive (condition A).
//! * otherwise, with `p` the smallest odd prime dividing `q + 1`, divide
//!   `x^((q+1)/p + 1)` by `f`; `f` is primitive iff all `(q+1)/p` quotient
//!   coefficients are nonzero (condition B).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Elem, FieldArith, GaloisField};
use crate::numtheory::{factorize, prime_power};
use crate::poly::synthetic_division_x_pow;

pub use crate::poly::MonicQuadratic;

/// The multiplicative shape of `q + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QPlusOneClass {
    /// `q + 1 = pi` with `pi > 2` prime.
    OddPrime(u64),
    /// `q + 1 = 2^t`.
    PowerOfTwo(u32),
    /// `q + 1 = 2 pi` with `pi > 2` prime.
    TwoTimesOddPrime(u64),
    /// None of the above; carries the smallest odd prime dividing `q + 1`.
    General(u64),
}

impl QPlusOneClass {
    /// Whether condition A settles primitivity without any division.
    pub fn is_special(&self) -> bool {
        !matches!(self, QPlusOneClass::General(_))
    }

    /// Degree of the dividend `x^((q+1)/p + 1)` used by condition B.
    pub fn condition_b_dividend_degree(&self, q: u64) -> Option<u64> {
        match *self {
            QPlusOneClass::General(p) => Some((q + 1) / p + 1),
            _ => None,
        }
    }
}

impl fmt::Display for QPlusOneClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QPlusOneClass::OddPrime(pi) => write!(f, "odd_prime({pi})"),
            QPlusOneClass::PowerOfTwo(t) => write!(f, "power_of_two({t})"),
            QPlusOneClass::TwoTimesOddPrime(pi) => write!(f, "two_times_odd_prime({pi})"),
            QPlusOneClass::General(p) => write!(f, "general({p})"),
        }
    }
}

/// Classifies `q + 1` for a prime power `q >= 2`.
pub fn classify_q_plus_one(q: u64) -> Result<QPlusOneClass> {
    if prime_power(q).is_none() {
        return Err(Error::NotPrimePower(q));
    }
    let factors = factorize(q + 1);
    Ok(match factors.as_slice() {
        [(2, t)] => QPlusOneClass::PowerOfTwo(*t),
        [(pi, 1)] => QPlusOneClass::OddPrime(*pi),
        [(2, 1), (pi, 1)] => QPlusOneClass::TwoTimesOddPrime(*pi),
        _ => {
            let p = factors
                .iter()
                .map(|&(r, _)| r)
                .find(|&r| r != 2)
                .expect("q + 1 is not a power of two here");
            QPlusOneClass::General(p)
        }
    })
}

/// Which step of the pipeline decided the verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Reason {
    BZero,
    CNotPrimitive,
    Reducible,
    #[serde(rename = "condition_A")]
    ConditionA,
    #[serde(rename = "condition_B_pass")]
    ConditionBPass,
    #[serde(rename = "condition_B_fail")]
    ConditionBFail,
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Reason::BZero => "b_zero",
            Reason::CNotPrimitive => "c_not_primitive",
            Reason::Reducible => "reducible",
            Reason::ConditionA => "condition_A",
            Reason::ConditionBPass => "condition_B_pass",
            Reason::ConditionBFail => "condition_B_fail",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimitivityVerdict {
    pub primitive: bool,
    pub reason: Reason,
    /// Quotient coefficients `h_1, ..., h_{(q+1)/p}`, leading first. Present
    /// iff condition B ran.
    pub h_terms: Option<Vec<Elem>>,
    pub q_class: QPlusOneClass,
}

impl PrimitivityVerdict {
    /// Degree of the dividend actually divided, when condition B ran.
    pub fn dividend_degree(&self) -> Option<u64> {
        self.h_terms.as_ref().map(|h| h.len() as u64 + 1)
    }

    pub fn record(&self, field: &GaloisField) -> VerdictRecord {
        VerdictRecord {
            primitive: self.primitive,
            reason: self.reason.to_string(),
            h_terms: self
                .h_terms
                .as_ref()
                .map(|h| h.iter().map(|&e| field.format_elem(e)).collect()),
            q_class: self.q_class.to_string(),
        }
    }
}

/// Flat serializable form of a verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub primitive: bool,
    pub reason: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub h_terms: Option<Vec<String>>,
    pub q_class: String,
}

/// No root in GF(q), by trying every element.
pub fn irreducible_by_root_scan(field: &GaloisField, f: MonicQuadratic) -> bool {
    field.elements().all(|t| !f.eval(field, t).is_zero())
}

/// For odd `q`: irreducible iff `b^2 - 4c` is a non-square. `None` in
/// characteristic two.
pub fn irreducible_by_discriminant(field: &GaloisField, f: MonicQuadratic) -> Option<bool> {
    if field.characteristic() == 2 {
        return None;
    }
    let four_c = field.mul(field.from_int(4), f.c);
    let disc = field.sub(field.mul(f.b, f.b), four_c);
    Some(!field.is_square(disc))
}

pub fn is_irreducible_quadratic(field: &GaloisField, f: MonicQuadratic) -> bool {
    let by_roots = irreducible_by_root_scan(field, f);
    if let Some(by_disc) = irreducible_by_discriminant(field, f) {
        debug_assert_eq!(by_roots, by_disc, "irreducibility tests disagree");
    }
    by_roots
}

pub fn is_primitive_quadratic(field: &GaloisField, f: MonicQuadratic) -> PrimitivityVerdict {
    is_primitive_quadratic_with(field, field, f)
}

/// As [`is_primitive_quadratic`], with the condition B division routed
/// through `arith` so its operations can be counted.
pub fn is_primitive_quadratic_with<A: FieldArith + ?Sized>(
    field: &GaloisField,
    arith: &A,
    f: MonicQuadratic,
) -> PrimitivityVerdict {
    let q = field.order() as u64;
    let q_class = classify_q_plus_one(q).expect("field order is a prime power");
    let verdict = |primitive, reason| PrimitivityVerdict {
        primitive,
        reason,
        h_terms: None,
        q_class,
    };
    if f.b.is_zero() {
        return verdict(false, Reason::BZero);
    }
    if !field.is_primitive_element(f.c).unwrap_or(false) {
        return verdict(false, Reason::CNotPrimitive);
    }
    if !is_irreducible_quadratic(field, f) {
        return verdict(false, Reason::Reducible);
    }
    let Some(e) = q_class.condition_b_dividend_degree(q) else {
        return verdict(true, Reason::ConditionA);
    };
    let (h, _) = synthetic_division_x_pow(arith, e, f.b, f.c);
    let primitive = h.iter().all(|t| !t.is_zero());
    PrimitivityVerdict {
        primitive,
        reason: if primitive {
            Reason::ConditionBPass
        } else {
            Reason::ConditionBFail
        },
        h_terms: Some(h),
        q_class,
    }
}

/// The indicator of primitive quadratics: `b, c` nonzero, `c` primitive,
/// `x^2 + b x + c` irreducible and passing condition A or B.
pub fn is_primitive_pair(field: &GaloisField, b: Elem, c: Elem) -> bool {
    let f = MonicQuadratic::new(b, c);
    !b.is_zero()
        && !c.is_zero()
        && field.is_primitive_element(c).unwrap_or(false)
        && is_irreducible_quadratic(field, f)
        && is_primitive_quadratic(field, f).primitive
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::build_field;
    use crate::numtheory::prime_powers_up_to;

    fn quad(field: &GaloisField, b: u32, c: u32) -> MonicQuadratic {
        MonicQuadratic::new(field.elem(b).unwrap(), field.elem(c).unwrap())
    }

    #[test]
    fn classification_examples() {
        assert_eq!(
            classify_q_plus_one(13).unwrap(),
            QPlusOneClass::TwoTimesOddPrime(7)
        );
        assert_eq!(classify_q_plus_one(11).unwrap(), QPlusOneClass::General(3));
        assert_eq!(classify_q_plus_one(8).unwrap(), QPlusOneClass::General(3));
        assert_eq!(
            classify_q_plus_one(3).unwrap(),
            QPlusOneClass::PowerOfTwo(2)
        );
        assert_eq!(classify_q_plus_one(2).unwrap(), QPlusOneClass::OddPrime(3));
        assert_eq!(classify_q_plus_one(4).unwrap(), QPlusOneClass::OddPrime(5));
        assert_eq!(
            classify_q_plus_one(9).unwrap(),
            QPlusOneClass::TwoTimesOddPrime(5)
        );
        assert_eq!(
            classify_q_plus_one(7).unwrap(),
            QPlusOneClass::PowerOfTwo(3)
        );
        assert_eq!(classify_q_plus_one(29).unwrap(), QPlusOneClass::General(3));
        assert_eq!(classify_q_plus_one(6), Err(Error::NotPrimePower(6)));
    }

    #[test]
    fn classification_is_exhaustive_and_exclusive() {
        for q in prime_powers_up_to(5000) {
            let n = q + 1;
            let odd_prime = crate::numtheory::is_prime(n) && n > 2;
            let pow2 = n.is_power_of_two();
            let twice = n % 2 == 0 && crate::numtheory::is_prime(n / 2) && n / 2 > 2;
            let hits = [odd_prime, pow2, twice].iter().filter(|&&b| b).count();
            assert!(hits <= 1);
            let class = classify_q_plus_one(q).unwrap();
            assert_eq!(class.is_special(), hits == 1, "q = {q}");
            if let QPlusOneClass::General(p) = class {
                assert!(crate::numtheory::is_prime(p) && p >= 3 && n % p == 0);
                assert!((3..p).all(|r| !(crate::numtheory::is_prime(r) && n % r == 0)));
            }
        }
    }

    #[test]
    fn example_gf13() {
        let f = build_field(13, 1, None, Some(6)).unwrap();
        let v = is_primitive_quadratic(&f, quad(&f, 1, 2));
        assert!(v.primitive);
        assert_eq!(v.reason, Reason::ConditionA);
        assert_eq!(v.h_terms, None);
        let v = is_primitive_quadratic(&f, quad(&f, 3, 5));
        assert!(!v.primitive);
        assert_eq!(v.reason, Reason::CNotPrimitive);
    }

    #[test]
    fn discriminants_gf13() {
        let f = build_field(13, 1, None, Some(6)).unwrap();
        let disc = |b: u32, c: u32| {
            let (b, c) = (Elem(b), Elem(c));
            f.sub(f.mul(b, b), f.mul(f.from_int(4), c))
        };
        assert_eq!(disc(1, 2), f.alpha_pow(1));
        assert_eq!(disc(3, 5), f.alpha_pow(5));
        assert!(is_irreducible_quadratic(&f, quad(&f, 1, 2)));
        assert!(is_irreducible_quadratic(&f, quad(&f, 3, 5)));
        assert!(!is_irreducible_quadratic(&f, quad(&f, 0, 0)));
    }

    #[test]
    fn example_gf11_condition_b() {
        let f = build_field(11, 1, None, Some(2)).unwrap();
        let terms = |v: &[u32]| Some(v.iter().map(|&x| Elem(x)).collect::<Vec<_>>());
        let v = is_primitive_quadratic(&f, quad(&f, 2, 2));
        assert_eq!(v.reason, Reason::ConditionBFail);
        assert_eq!(v.h_terms, terms(&[1, 9, 2, 0]));
        let v = is_primitive_quadratic(&f, quad(&f, 4, 2));
        assert_eq!(v.reason, Reason::ConditionBPass);
        assert_eq!(v.h_terms, terms(&[1, 7, 3, 7]));
        assert_eq!(v.dividend_degree(), Some(5));
    }

    #[test]
    fn example_gf8_condition_b() {
        let f = build_field(2, 3, Some(&[1, 1, 0, 1]), None).unwrap();
        let a = |k| f.alpha_pow(k);
        let v = is_primitive_quadratic(&f, MonicQuadratic::new(a(4), a(1)));
        assert!(!v.primitive);
        assert_eq!(v.h_terms, Some(vec![f.one(), a(4), Elem::ZERO]));
        let v = is_primitive_quadratic(&f, MonicQuadratic::new(a(6), a(1)));
        assert!(v.primitive);
        assert_eq!(v.h_terms, Some(vec![f.one(), a(6), a(6)]));
    }

    #[test]
    fn primitive_pair_indicator() {
        let f = build_field(2, 3, Some(&[1, 1, 0, 1]), None).unwrap();
        let a = |k| f.alpha_pow(k);
        assert!(is_primitive_pair(&f, a(1), a(1)));
        assert!(!is_primitive_pair(&f, a(4), a(1)));
        for c in f.elements() {
            assert!(!is_primitive_pair(&f, Elem::ZERO, c));
        }
    }

    #[test]
    fn tiny_fields_use_condition_a() {
        let f2 = GaloisField::new(2, 1).unwrap();
        let v = is_primitive_quadratic(&f2, quad(&f2, 1, 1));
        assert!(v.primitive);
        assert_eq!(v.reason, Reason::ConditionA);
        let f3 = GaloisField::new(3, 1).unwrap();
        let primitive: Vec<_> = f3
            .elements()
            .flat_map(|b| f3.elements().map(move |c| (b, c)))
            .filter(|&(b, c)| is_primitive_quadratic(&f3, MonicQuadratic::new(b, c)).primitive)
            .collect();
        assert_eq!(primitive, vec![(Elem(1), Elem(2)), (Elem(2), Elem(2))]);
        for b in f3.elements() {
            for c in f3.elements() {
                let v = is_primitive_quadratic(&f3, MonicQuadratic::new(b, c));
                assert!(v.h_terms.is_none());
            }
        }
    }

    #[test]
    fn irreducibility_tests_agree_for_odd_q() {
        for q in prime_powers_up_to(128).into_iter().filter(|q| q % 2 == 1) {
            let f = GaloisField::of_order(q).unwrap();
            for b in f.elements() {
                for c in f.elements() {
                    let g = MonicQuadratic::new(b, c);
                    assert_eq!(
                        Some(irreducible_by_root_scan(&f, g)),
                        irreducible_by_discriminant(&f, g),
                        "q = {q}"
                    );
                }
            }
        }
    }

    #[test]
    fn verdict_record_shape() {
        let f = build_field(11, 1, None, Some(2)).unwrap();
        let rec = is_primitive_quadratic(&f, quad(&f, 2, 2)).record(&f);
        let json = serde_json::to_string(&rec).unwrap();
        assert_eq!(
            json,
            r#"{"primitive":false,"reason":"condition_B_fail","h_terms":["1","9","2","0"],"q_class":"general(3)"}"#
        );
        let rec = is_primitive_quadratic(&f, quad(&f, 0, 2)).record(&f);
        assert_eq!(
            serde_json::to_string(&rec).unwrap(),
            r#"{"primitive":false,"reason":"b_zero","q_class":"general(3)"}"#
        );
    }
}
