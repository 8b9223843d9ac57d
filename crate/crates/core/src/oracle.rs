//! Brute-force ground truth.
//!
//! Primitivity here is decided from the definition only: `f` is primitive iff
//! it is monic with `f(0) != 0`, has no root, and `x` has multiplicative order
//! `q^deg(f) - 1` modulo `f`, found by stepping through the powers of `x`.
//! None of the characterization machinery is used.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::enumeration::{enumerate_primitive_quadratics, euler_phi};
use crate::error::{Error, Result};
use crate::extension::ExtField;
use crate::field::{Elem, FieldArith, GaloisField};
use crate::numtheory::prime_powers_up_to;
use crate::poly::{MonicQuadratic, Poly, PolyRing};
use crate::primitivity::is_primitive_quadratic;

/// Largest `q^deg - 1` the brute-force order search will step through.
pub const MAX_ORDER_STEPS: u64 = 1 << 28;

/// Order of `x` modulo the monic `f` by direct iteration, or `None` if `x`
/// has not returned to 1 within `limit` steps.
pub fn x_order<A: FieldArith + ?Sized>(arith: &A, f: &[Elem], limit: u64) -> Option<u64> {
    let d = f.len() - 1;
    let mut r = vec![Elem::ZERO; d];
    r[0] = Elem::ONE;
    for k in 1..=limit {
        // r <- r * x mod f
        let lead = r[d - 1];
        for i in (1..d).rev() {
            r[i] = arith.sub(r[i - 1], arith.mul(lead, f[i]));
        }
        r[0] = arith.neg(arith.mul(lead, f[0]));
        if r[0] == Elem::ONE && r[1..].iter().all(|c| c.is_zero()) {
            return Some(k);
        }
    }
    None
}

fn has_root(field: &GaloisField, f: &[Elem]) -> bool {
    field.elements().any(|t| {
        f.iter()
            .rev()
            .fold(Elem::ZERO, |acc, &c| field.add(field.mul(acc, t), c))
            .is_zero()
    })
}

/// Definitional primitivity test.
pub fn brute_force_is_primitive(field: &GaloisField, f: &Poly) -> Result<bool> {
    if f.field_id() != field.id() {
        return Err(Error::MixedFields);
    }
    let Some(d) = f.degree().filter(|&d| d >= 1) else {
        return Ok(false);
    };
    if !f.is_monic() || f.coeff(0).is_zero() {
        return Ok(false);
    }
    let target = (field.order() as u64)
        .checked_pow(d as u32)
        .map(|n| n - 1)
        .filter(|&n| n <= MAX_ORDER_STEPS)
        .ok_or_else(|| Error::Precondition("polynomial too large for brute force".into()))?;
    if d >= 2 && has_root(field, f.coeffs()) {
        return Ok(false);
    }
    Ok(x_order(field, f.coeffs(), target) == Some(target))
}

/// The divisors of `x^(q+1) - c` read off the cyclotomic class of `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationReport {
    pub c: Elem,
    /// The `i` with `c = alpha^i`.
    pub class_index: u32,
    /// `gamma^i <gamma^(q-1)>`, in stepping order, as extension elements.
    pub class_elements: Vec<Elem>,
    /// Roots of `x^(q+1) - c` lying in GF(q); each contributes `x - r`.
    pub linear_factors: Vec<Elem>,
    /// One `x^2 - Tr(r) x + c` per conjugate pair `{r, r^q}`.
    pub quadratic_factors: Vec<MonicQuadratic>,
}

impl FactorizationReport {
    /// Product of all reported factors.
    pub fn expand(&self, field: &GaloisField) -> Poly {
        let ring = PolyRing::new(field);
        let mut acc = Poly::one(field);
        for &r in &self.linear_factors {
            let lin = Poly::new(field, vec![field.neg(r), field.one()]).expect("valid");
            acc = ring.mul(&acc, &lin).expect("same field");
        }
        for f in &self.quadratic_factors {
            acc = ring.mul(&acc, &f.to_poly(field)).expect("same field");
        }
        acc
    }

    /// `x^(q+1) - c`.
    pub fn target(&self, field: &GaloisField) -> Poly {
        let q = field.order() as usize;
        let mut coeffs = vec![Elem::ZERO; q + 2];
        coeffs[0] = field.neg(self.c);
        coeffs[q + 1] = field.one();
        Poly::new(field, coeffs).expect("valid")
    }

    pub fn product_matches(&self, field: &GaloisField) -> bool {
        self.expand(field) == self.target(field)
    }
}

pub fn factor_x_q1_minus_c(ext: &ExtField, c: Elem) -> Result<FactorizationReport> {
    let base = ext.base();
    let big = ext.ext();
    if c.is_zero() {
        return Err(Error::Precondition("c must be nonzero".into()));
    }
    let i = base.log(c)?;
    let q = base.order() as u64;
    let step = big.pow(ext.gamma(), q - 1);
    let mut r = big.pow(ext.gamma(), i as u64);
    let mut class_elements = Vec::with_capacity(q as usize + 1);
    for _ in 0..=q {
        class_elements.push(r);
        r = big.mul(r, step);
    }
    debug_assert_eq!(r, class_elements[0]);

    let mut linear_factors = Vec::new();
    let mut quadratic_factors = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for &r in &class_elements {
        if !seen.insert(r) {
            continue;
        }
        let rq = ext.frobenius(r);
        if rq == r {
            linear_factors.push(ext.restrict(r).expect("fixed by Frobenius"));
        } else {
            seen.insert(rq);
            let b = base.neg(ext.trace(r));
            quadratic_factors.push(MonicQuadratic::new(b, ext.norm(r)));
        }
    }
    let key = |e: Elem| {
        if base.is_prime_field() {
            e.value()
        } else {
            base.log(e).map_or(0, |l| l + 1)
        }
    };
    linear_factors.sort_by_key(|&e| key(e));
    quadratic_factors.sort_by_key(|f| key(f.b));
    Ok(FactorizationReport {
        c,
        class_index: i,
        class_elements,
        linear_factors,
        quadratic_factors,
    })
}

/// Outcome of cross-checking one field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldValidation {
    pub q: u64,
    pub total_quadratics: u64,
    pub primitive_count: u64,
    pub phi_check: bool,
    pub agreement: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub first_mismatch: Option<String>,
}

impl FieldValidation {
    pub fn passed(&self) -> bool {
        self.phi_check && self.agreement
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub fields: Vec<FieldValidation>,
}

impl ValidationReport {
    pub fn all_passed(&self) -> bool {
        self.fields.iter().all(FieldValidation::passed)
    }
}

/// Checks one field: exhaustive verdict agreement with the oracle, the
/// enumeration against the oracle's primitive set, and the count against
/// `phi(q^2 - 1) / 2`.
pub fn validate_field(field: &GaloisField) -> FieldValidation {
    let q = field.order() as u64;
    let sweep: Vec<(MonicQuadratic, bool, bool)> = field
        .elements()
        .collect::<Vec<_>>()
        .into_par_iter()
        .flat_map_iter(|b| {
            field.elements().map(move |c| {
                let f = MonicQuadratic::new(b, c);
                let fast = is_primitive_quadratic(field, f).primitive;
                let slow = brute_force_is_primitive(field, &f.to_poly(field))
                    .expect("quadratics are within the brute-force bound");
                (f, fast, slow)
            })
        })
        .collect();

    let mut first_mismatch =
        sweep
            .iter()
            .find(|(_, fast, slow)| fast != slow)
            .map(|(f, fast, slow)| {
                format!(
                    "{}: characterization says {}, order says {}",
                    field.format_poly(&f.to_poly(field)),
                    fast,
                    slow
                )
            });
    let mut oracle_set: Vec<MonicQuadratic> = sweep
        .iter()
        .filter(|(_, _, slow)| *slow)
        .map(|(f, _, _)| *f)
        .collect();
    oracle_set.sort_by_key(|f| (field.log(f.b).unwrap_or(0), field.log(f.c).unwrap_or(0)));

    let listed = enumerate_primitive_quadratics(field);
    if first_mismatch.is_none() && listed != oracle_set {
        let extra = listed.iter().find(|f| !oracle_set.contains(f));
        let missing = oracle_set.iter().find(|f| !listed.contains(f));
        first_mismatch = Some(match (extra, missing) {
            (Some(f), _) => format!(
                "enumeration lists non-primitive {}",
                field.format_poly(&f.to_poly(field))
            ),
            (None, Some(f)) => format!(
                "enumeration misses {}",
                field.format_poly(&f.to_poly(field))
            ),
            (None, None) => "enumeration contains duplicates".to_string(),
        });
    }
    let expected = euler_phi(q * q - 1) / 2;
    FieldValidation {
        q,
        total_quadratics: q * q,
        primitive_count: oracle_set.len() as u64,
        phi_check: oracle_set.len() as u64 == expected && listed.len() as u64 == expected,
        agreement: first_mismatch.is_none(),
        first_mismatch,
    }
}

/// Runs [`validate_field`] for every prime power `q <= q_max` using the
/// default modulus and primitive element. Sorted by `q`.
pub fn cross_validate(q_max: u64) -> ValidationReport {
    let mut fields: Vec<FieldValidation> = prime_powers_up_to(q_max)
        .into_par_iter()
        .map(|q| {
            let field = GaloisField::of_order(q).expect("prime power within bounds");
            validate_field(&field)
        })
        .collect();
    fields.sort_by_key(|v| v.q);
    ValidationReport { fields }
}
