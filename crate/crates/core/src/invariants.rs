//! Property checks over whole fields, returning the first violation found.
//!
//! These back the invariant suites and the seeded sampling in `verify`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::field::{Elem, GaloisField};
use crate::poly::{synthetic_division_x_pow, MonicQuadratic, PolyRing};
use crate::primitivity::is_primitive_quadratic;

pub type Check = std::result::Result<(), String>;

fn quadratics(field: &GaloisField) -> impl Iterator<Item = MonicQuadratic> + '_ {
    field
        .elements()
        .flat_map(move |b| field.elements().map(move |c| MonicQuadratic::new(b, c)))
}

fn show(field: &GaloisField, f: MonicQuadratic) -> String {
    format!(
        "{} over GF({})",
        field.format_poly(&f.to_poly(field)),
        field.order()
    )
}

/// For every monic quadratic with `f(0) != 0` and quasi-order `(rho, a)`,
/// the quotient of `x^(rho+1) - a x` by `f` has exactly its constant term
/// zero, and the quotient of `x^e` has no zero term iff `e < rho + 1`.
pub fn quotient_terms(field: &GaloisField) -> Check {
    let ring = PolyRing::new(field);
    for f in quadratics(field).filter(|f| !f.c.is_zero()) {
        let qo = ring
            .quasi_order(&f.to_poly(field))
            .map_err(|e| e.to_string())?;
        let (g, (k, l)) = synthetic_division_x_pow(field, qo.rho + 1, f.b, f.c);
        if (k, l) != (qo.a, Elem::ZERO) {
            return Err(format!(
                "{}: remainder of x^(rho+1) is not a*x",
                show(field, f)
            ));
        }
        let (last, head) = g.split_last().expect("rho >= 1");
        if !last.is_zero() || head.iter().any(|t| t.is_zero()) {
            return Err(format!(
                "{}: quotient {} breaks the nonzero-terms pattern",
                show(field, f),
                field.format_terms(&g)
            ));
        }
        for e in 2..=qo.rho + 2 {
            let (h, _) = synthetic_division_x_pow(field, e, f.b, f.c);
            let all_nonzero = h.iter().all(|t| !t.is_zero());
            if all_nonzero != (e < qo.rho + 1) {
                return Err(format!("{}: dichotomy fails at e = {e}", show(field, f)));
            }
        }
    }
    Ok(())
}

/// For every irreducible quadratic and `1 <= e <= q + 1`: `x^e mod f` is a
/// constant iff `rho | e`, and that constant is `a^(e/rho)`.
pub fn quasi_order_remark(field: &GaloisField) -> Check {
    let ring = PolyRing::new(field);
    let q = field.order() as u64;
    for f in quadratics(field).filter(|&f| crate::is_irreducible_quadratic(field, f)) {
        let fp = f.to_poly(field);
        let qo = ring.quasi_order(&fp).map_err(|e| e.to_string())?;
        if !(q + 1).is_multiple_of(qo.rho) {
            return Err(format!(
                "{}: rho = {} does not divide q+1",
                show(field, f),
                qo.rho
            ));
        }
        for (i, r) in ring
            .x_powers(&fp)
            .map_err(|e| e.to_string())?
            .take(q as usize + 1)
            .enumerate()
        {
            let e = i as u64 + 1;
            let constant = r.len() <= 1;
            if constant != e.is_multiple_of(qo.rho) {
                return Err(format!(
                    "{}: x^{e} constancy disagrees with rho",
                    show(field, f)
                ));
            }
            if constant && r[0] != field.pow(qo.a, e / qo.rho) {
                return Err(format!("{}: x^{e} is not a^(e/rho)", show(field, f)));
            }
        }
    }
    Ok(())
}

/// `qord(x^2 + b x + c) = qord(x^2 + m^j b x + m^(2j) c)` for all `b, c, m`
/// nonzero and `1 <= j < q - 1` (`j` matters only modulo `ord(m)`).
pub fn quasi_order_scaling(field: &GaloisField) -> Check {
    let ring = PolyRing::new(field);
    let n = field.order() as u64 - 1;
    for f1 in quadratics(field).filter(|f| !f.b.is_zero() && !f.c.is_zero()) {
        let rho1 = ring
            .quasi_order(&f1.to_poly(field))
            .map_err(|e| e.to_string())?
            .rho;
        for m in field.nonzero_elements() {
            for j in 1..=n.max(1) {
                let mj = field.pow(m, j);
                let f2 =
                    MonicQuadratic::new(field.mul(mj, f1.b), field.mul(field.mul(mj, mj), f1.c));
                let rho2 = ring
                    .quasi_order(&f2.to_poly(field))
                    .map_err(|e| e.to_string())?
                    .rho;
                if rho1 != rho2 {
                    return Err(format!(
                        "{} and {}: quasi-orders {rho1} and {rho2}",
                        show(field, f1),
                        show(field, f2)
                    ));
                }
            }
        }
    }
    Ok(())
}

/// For odd `q`, `x^2 + b x + c` and `x^2 - b x + c` receive the same verdict.
pub fn sign_symmetry(field: &GaloisField) -> Check {
    if field.characteristic() == 2 {
        return Ok(());
    }
    for f in quadratics(field) {
        let g = MonicQuadratic::new(field.neg(f.b), f.c);
        let (vf, vg) = (
            is_primitive_quadratic(field, f),
            is_primitive_quadratic(field, g),
        );
        if vf.primitive != vg.primitive || vf.reason != vg.reason {
            return Err(format!(
                "{} and {} disagree",
                show(field, f),
                show(field, g)
            ));
        }
    }
    Ok(())
}

/// Outcome of [`sample_scaled_congruence`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleReport {
    pub seed: u64,
    pub cases: u64,
    pub failures: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub first_failure: Option<String>,
}

/// Draws `cases` random `(f1, m, j, e)` over the given fields and checks the
/// scaled congruence for each. The draw sequence depends only on `seed` and
/// the field list.
pub fn sample_scaled_congruence(fields: &[GaloisField], cases: u64, seed: u64) -> SampleReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0;
    let mut first_failure = None;
    if fields.is_empty() {
        return SampleReport {
            seed,
            cases: 0,
            failures,
            first_failure,
        };
    }
    for _ in 0..cases {
        let field = &fields[rng.gen_range(0..fields.len())];
        let q = field.order() as u64;
        let mut nonzero = || field.alpha_pow(rng.gen_range(0..q as i64 - 1));
        let (b, c, m) = (nonzero(), nonzero(), nonzero());
        let j = rng.gen_range(1..=q);
        let e = rng.gen_range(2..=q * q + 1);
        let f1 = MonicQuadratic::new(b, c);
        let ok = PolyRing::new(field).scaled_congruence_check(f1, m, j, e);
        if ok != Ok(true) {
            failures += 1;
            first_failure.get_or_insert_with(|| {
                format!(
                    "{}, m = {}, j = {j}, e = {e}",
                    show(field, f1),
                    field.format_elem(m)
                )
            });
        }
    }
    SampleReport {
        seed,
        cases,
        failures,
        first_failure,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtheory::prime_powers_up_to;

    #[test]
    fn small_fields_satisfy_everything() {
        for q in prime_powers_up_to(16) {
            let f = GaloisField::of_order(q).unwrap();
            quotient_terms(&f).unwrap();
            quasi_order_remark(&f).unwrap();
            quasi_order_scaling(&f).unwrap();
            sign_symmetry(&f).unwrap();
        }
    }

    #[test]
    fn sampling_is_reproducible() {
        let fields: Vec<GaloisField> = [5u64, 8, 9]
            .iter()
            .map(|&q| GaloisField::of_order(q).unwrap())
            .collect();
        let a = sample_scaled_congruence(&fields, 200, 7);
        assert_eq!(a.failures, 0);
        assert_eq!(a.cases, 200);
        assert_eq!(a, sample_scaled_congruence(&fields, 200, 7));
    }
}
