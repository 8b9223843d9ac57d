//! The quadratic extension GF(q^2) of a base field, with a primitive element
//! `gamma` normalized so that `gamma^(q+1)` is the base field's `alpha`.
//!
//! The extension is built directly as GF(p^(2m)) over the prime field. The
//! embedding GF(q) -> GF(q^2) sends `alpha` to `gamma^(q+1)`; this requires
//! `gamma^(q+1)` to be a root of the minimal polynomial of `alpha` over GF(p),
//! which is how `gamma` is selected.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::{Elem, FieldBuilder, GaloisField, DEFAULT_MAX_EXTENSION_ORDER};

#[derive(Clone, Debug)]
pub struct ExtField {
    base: GaloisField,
    ext: GaloisField,
    gamma: Elem,
    /// Indexed by the canonical value of a base element.
    embed: Vec<Elem>,
    restrict: HashMap<u32, Elem>,
}

pub fn build_extension(base: &GaloisField) -> Result<ExtField> {
    build_extension_bounded(base, DEFAULT_MAX_EXTENSION_ORDER)
}

pub fn build_extension_bounded(base: &GaloisField, max_order: u64) -> Result<ExtField> {
    let p = base.characteristic();
    let m = base.degree();
    let q = base.order() as u64;
    let ext = FieldBuilder::new(p as u64, 2 * m)
        .max_order(max_order)
        .build()?;

    let minpoly = minimal_polynomial_of_alpha(base);
    let gamma = ext
        .nonzero_elements()
        .find(|&g| {
            ext.is_primitive_element(g).unwrap_or(false)
                && eval_prime_poly(&ext, &minpoly, ext.pow(g, q + 1)).is_zero()
        })
        .ok_or_else(|| Error::Precondition("no normalized primitive element".into()))?;

    let beta = ext.pow(gamma, q + 1);
    let mut embed = vec![Elem::ZERO; q as usize];
    let mut cur = ext.one();
    for k in 0..q - 1 {
        embed[base.alpha_pow(k as i64).value() as usize] = cur;
        cur = ext.mul(cur, beta);
    }
    let restrict = embed
        .iter()
        .enumerate()
        .map(|(v, &e)| (e.value(), Elem(v as u32)))
        .collect::<HashMap<_, _>>();

    let field = ExtField {
        base: base.clone(),
        ext,
        gamma,
        embed,
        restrict,
    };
    field.verify_additive()?;
    Ok(field)
}

impl ExtField {
    pub fn base(&self) -> &GaloisField {
        &self.base
    }

    pub fn ext(&self) -> &GaloisField {
        &self.ext
    }

    pub fn gamma(&self) -> Elem {
        self.gamma
    }

    pub fn embed(&self, a: Elem) -> Elem {
        self.embed[a.value() as usize]
    }

    /// Preimage under the embedding, if `r` lies in the subfield.
    pub fn restrict(&self, r: Elem) -> Option<Elem> {
        self.restrict.get(&r.value()).copied()
    }

    /// `r^q`.
    pub fn frobenius(&self, r: Elem) -> Elem {
        self.ext.pow(r, self.base.order() as u64)
    }

    /// `Tr(r) = r + r^q`, returned in the base field.
    pub fn trace(&self, r: Elem) -> Elem {
        let t = self.ext.add(r, self.frobenius(r));
        self.restrict(t)
            .expect("the trace of an element lies in the base field")
    }

    /// `N(r) = r^(q+1)`, returned in the base field.
    pub fn norm(&self, r: Elem) -> Elem {
        let n = self.ext.pow(r, self.base.order() as u64 + 1);
        self.restrict(n)
            .expect("the norm of an element lies in the base field")
    }

    fn verify_additive(&self) -> Result<()> {
        let m = self.base.degree() as usize;
        let basis: Vec<Elem> = (0..m)
            .map(|i| {
                let mut c = vec![0; m];
                c[i] = 1;
                self.base.from_coords(&c).expect("unit vector")
            })
            .collect();
        for a in self.base.elements() {
            for &e in &basis {
                let lhs = self.embed(self.base.add(a, e));
                let rhs = self.ext.add(self.embed(a), self.embed(e));
                if lhs != rhs {
                    return Err(Error::Precondition("embedding is not additive".into()));
                }
            }
        }
        Ok(())
    }
}

/// Coefficients (constant first) of the minimal polynomial of `alpha` over
/// GF(p), as integers in `[0, p)`.
fn minimal_polynomial_of_alpha(base: &GaloisField) -> Vec<u32> {
    let p = base.characteristic() as u64;
    let mut poly = vec![base.one()];
    let mut conj = base.alpha();
    for _ in 0..base.degree() {
        // poly *= (x - conj)
        let mut next = vec![Elem::ZERO; poly.len() + 1];
        for (i, &c) in poly.iter().enumerate() {
            next[i + 1] = base.add(next[i + 1], c);
            next[i] = base.sub(next[i], base.mul(c, conj));
        }
        poly = next;
        conj = base.pow(conj, p);
    }
    debug_assert_eq!(conj, base.alpha());
    poly.into_iter()
        .map(|c| {
            debug_assert!(c.value() < base.characteristic());
            c.value()
        })
        .collect()
}

fn eval_prime_poly(field: &GaloisField, coeffs: &[u32], x: Elem) -> Elem {
    coeffs.iter().rev().fold(Elem::ZERO, |acc, &c| {
        field.add(field.mul(acc, x), field.from_int(c as i64))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::build_field;

    fn check_normalization(base: &GaloisField) -> ExtField {
        let ext = build_extension(base).unwrap();
        let q = base.order() as u64;
        let e = ext.ext();
        assert_eq!(e.order() as u64, q * q);
        assert_eq!(e.multiplicative_order(ext.gamma()).unwrap(), q * q - 1);
        assert_eq!(e.pow(ext.gamma(), q + 1), ext.embed(base.alpha()));
        ext
    }

    #[test]
    fn normalization_gf11() {
        let base = build_field(11, 1, None, Some(2)).unwrap();
        let ext = check_normalization(&base);
        assert_eq!(ext.restrict(ext.ext().pow(ext.gamma(), 12)), Some(Elem(2)));
    }

    #[test]
    fn normalization_gf8() {
        let base = build_field(2, 3, Some(&[1, 1, 0, 1]), None).unwrap();
        let ext = check_normalization(&base);
        assert_eq!(
            ext.restrict(ext.ext().pow(ext.gamma(), 9)),
            Some(base.alpha())
        );
    }

    #[test]
    fn gamma_order_by_direct_sweep_gf13() {
        let base = build_field(13, 1, None, Some(6)).unwrap();
        let ext = check_normalization(&base);
        let e = ext.ext();
        let mut cur = ext.gamma();
        let mut order = 1u64;
        while cur != e.one() {
            cur = e.mul(cur, ext.gamma());
            order += 1;
        }
        assert_eq!(order, 168);
    }

    #[test]
    fn embedding_is_a_ring_homomorphism() {
        for q in [2u64, 4, 8, 9, 11, 13, 16, 25] {
            let base = GaloisField::of_order(q).unwrap();
            let ext = check_normalization(&base);
            let e = ext.ext();
            for a in base.elements() {
                for b in base.elements() {
                    assert_eq!(ext.embed(base.add(a, b)), e.add(ext.embed(a), ext.embed(b)));
                    assert_eq!(ext.embed(base.mul(a, b)), e.mul(ext.embed(a), ext.embed(b)));
                }
            }
        }
    }

    #[test]
    fn frobenius_fixes_exactly_the_subfield() {
        for q in [3u64, 4, 8, 9, 13] {
            let base = GaloisField::of_order(q).unwrap();
            let ext = build_extension(&base).unwrap();
            let e = ext.ext();
            let mut fixed = 0;
            for r in e.elements() {
                let fr = ext.frobenius(r);
                if fr == r {
                    fixed += 1;
                    assert!(ext.restrict(r).is_some());
                } else {
                    assert!(ext.restrict(r).is_none());
                }
                for s in [e.one(), ext.gamma(), e.alpha()] {
                    assert_eq!(ext.frobenius(e.add(r, s)), e.add(fr, ext.frobenius(s)));
                    assert_eq!(ext.frobenius(e.mul(r, s)), e.mul(fr, ext.frobenius(s)));
                }
            }
            assert_eq!(fixed, q);
        }
    }

    #[test]
    fn rejects_oversized_extension() {
        let base = GaloisField::new(101, 1).unwrap();
        assert!(matches!(
            build_extension_bounded(&base, 10_000),
            Err(Error::FieldTooLarge { .. })
        ));
    }
}
