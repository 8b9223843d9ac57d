//! Cost comparison between the characterization and the order computation.
//!
//! Both paths are run over every monic quadratic of a field. Field operations
//! are counted exactly through [`OpCounter`]; wall time is reported alongside
//! but is the only machine-dependent column.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::field::{GaloisField, OpCounter};
use crate::oracle::x_order;
use crate::poly::MonicQuadratic;
use crate::primitivity::{classify_q_plus_one, is_primitive_quadratic_with};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub q: u32,
    pub q_class: String,
    /// "A" when the order of q+1 settles every irreducible candidate, "B"
    /// when a division is needed.
    pub condition: String,
    /// Degree of `x^e` divided under condition B, `(q+1)/p + 1`.
    pub dividend_degree: Option<u64>,
    /// Number of steps the order computation may need, `q^2 - 1`.
    pub order_dividend_degree: u64,
    /// Condition B divisions actually performed.
    pub divisions: u64,
    pub characterization_ops: u64,
    pub oracle_ops: u64,
    /// `oracle_ops / characterization_ops`; absent when no division ran.
    pub op_ratio: Option<f64>,
    pub characterization_us: u64,
    pub oracle_us: u64,
    /// `oracle_us / characterization_us`, when both were measurable.
    pub speedup: Option<f64>,
}

pub fn bench_field(field: &GaloisField) -> BenchRecord {
    let q = field.order();
    let q_class = classify_q_plus_one(q as u64).expect("field order is a prime power");
    let quadratics: Vec<MonicQuadratic> = field
        .elements()
        .flat_map(|b| field.elements().map(move |c| MonicQuadratic::new(b, c)))
        .collect();

    let counter = OpCounter::new(field);
    let mut divisions = 0;
    let mut dividend_degree = None;
    let start = Instant::now();
    for &f in &quadratics {
        let verdict = is_primitive_quadratic_with(field, &counter, f);
        if let Some(d) = verdict.dividend_degree() {
            divisions += 1;
            dividend_degree = Some(d);
        }
    }
    let characterization_us = start.elapsed().as_micros() as u64;
    let characterization_ops = counter.ops();

    let limit = q as u64 * q as u64 - 1;
    let counter = OpCounter::new(field);
    let start = Instant::now();
    for &f in &quadratics {
        if !f.c.is_zero() {
            let _ = x_order(&counter, &[f.c, f.b, field.one()], limit);
        }
    }
    let oracle_us = start.elapsed().as_micros() as u64;
    let oracle_ops = counter.ops();

    BenchRecord {
        q,
        q_class: q_class.to_string(),
        condition: if q_class.is_special() { "A" } else { "B" }.to_string(),
        dividend_degree: dividend_degree.or_else(|| q_class.condition_b_dividend_degree(q as u64)),
        order_dividend_degree: limit,
        divisions,
        characterization_ops,
        oracle_ops,
        op_ratio: (characterization_ops > 0)
            .then(|| oracle_ops as f64 / characterization_ops as f64),
        characterization_us,
        oracle_us,
        speedup: (characterization_us > 0).then(|| oracle_us as f64 / characterization_us as f64),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn condition_a_field_divides_nothing() {
        let r = bench_field(&GaloisField::new(13, 1).unwrap());
        assert_eq!(r.condition, "A");
        assert_eq!(r.divisions, 0);
        assert_eq!(r.characterization_ops, 0);
        assert_eq!(r.op_ratio, None);
        assert_eq!(r.dividend_degree, None);
    }

    #[test]
    fn condition_b_field_is_cheaper() {
        let r = bench_field(&GaloisField::new(11, 1).unwrap());
        assert_eq!(r.condition, "B");
        assert_eq!(r.dividend_degree, Some(5));
        assert_eq!(r.order_dividend_degree, 120);
        assert!(r.divisions > 0);
        assert!(r.op_ratio.unwrap() > 1.0);
    }

    #[test]
    fn op_counts_are_deterministic() {
        let f = GaloisField::new(2, 3).unwrap();
        let (a, b) = (bench_field(&f), bench_field(&f));
        assert_eq!(
            (a.characterization_ops, a.oracle_ops, a.divisions),
            (b.characterization_ops, b.oracle_ops, b.divisions)
        );
    }
}
