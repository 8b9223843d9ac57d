//! Explicit list of every primitive quadratic over GF(q).
//!
//! Every primitive quadratic is `x^2 ± alpha^(i+j) x + alpha^(2j+1)` where
//! `x^2 + alpha^i x + alpha` is itself primitive (`i` in `I`) and
//! `alpha^(2j+1)` is a primitive element (`j` in `J`). `I` is obtained by
//! filtering the irreducible candidates `B`, the complement of the set `R` of
//! exponents whose polynomial splits as `(x + alpha^(k+1))(x + alpha^(q-k-1))`.
//!
//! For odd `q` the index sets live modulo `(q-1)/2`, since `-1 = alpha^((q-1)/2)`
//! makes `x^2 + b x + c` and `x^2 - b x + c` behave alike.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::field::GaloisField;
use crate::numtheory::gcd;
use crate::poly::MonicQuadratic;
use crate::primitivity::is_primitive_pair;

pub use crate::numtheory::euler_phi;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationTables {
    /// 0 for even `q`, 1 for odd `q`.
    pub delta: u8,
    pub r: BTreeSet<u32>,
    pub b: BTreeSet<u32>,
    pub j: BTreeSet<u32>,
    pub i: BTreeSet<u32>,
}

fn delta(field: &GaloisField) -> u8 {
    if field.characteristic() == 2 {
        0
    } else {
        1
    }
}

/// Size of the index range for `R` and `B`.
fn index_range(field: &GaloisField) -> u32 {
    let q = field.order();
    if delta(field) == 0 {
        q - 1
    } else {
        (q - 1) / 2
    }
}

/// Exponents `i` (reduced modulo `(q-1)/2` for odd `q`) with
/// `alpha^i = alpha^(k+1) + alpha^(q-k-1)` for `k` in the admissible range.
/// Sums equal to zero have no logarithm and are skipped.
pub fn compute_r(field: &GaloisField) -> BTreeSet<u32> {
    let q = field.order() as i64;
    let (k_end, modulus) = if delta(field) == 0 {
        (q / 2 - 1, q - 1)
    } else {
        ((q - 1) / 4, (q - 1) / 2)
    };
    (0..k_end.max(0))
        .filter_map(|k| {
            let s = field.add(field.alpha_pow(k + 1), field.alpha_pow(q - k - 1));
            field.log(s).ok().map(|l| (l as i64 % modulus) as u32)
        })
        .collect()
}

pub fn compute_b(field: &GaloisField) -> BTreeSet<u32> {
    let r = compute_r(field);
    (0..index_range(field)).filter(|i| !r.contains(i)).collect()
}

/// `{ j : gcd(2j+1, q-1) = 1 }` for even `q`; `{ (j-1)/2 : gcd(j, q-1) = 1 }`
/// for odd `q`.
pub fn compute_j(field: &GaloisField) -> BTreeSet<u32> {
    let n = field.order() as u64 - 1;
    if delta(field) == 0 {
        (0..n.max(1))
            .filter(|&j| gcd(2 * j + 1, n) == 1)
            .map(|j| j as u32)
            .collect()
    } else {
        (0..n)
            .filter(|&j| gcd(j, n) == 1)
            .map(|j| ((j - 1) / 2) as u32)
            .collect()
    }
}

/// Members `i` of `B` for which `x^2 + alpha^i x + alpha` is primitive.
pub fn compute_i(field: &GaloisField) -> BTreeSet<u32> {
    filter_b(field, &compute_b(field))
}

fn filter_b(field: &GaloisField, b: &BTreeSet<u32>) -> BTreeSet<u32> {
    let alpha = field.alpha();
    b.par_iter()
        .copied()
        .filter(|&i| is_primitive_pair(field, field.alpha_pow(i as i64), alpha))
        .collect::<Vec<_>>()
        .into_iter()
        .collect()
}

pub fn tables(field: &GaloisField) -> EnumerationTables {
    let r = compute_r(field);
    let b: BTreeSet<u32> = (0..index_range(field)).filter(|i| !r.contains(i)).collect();
    let i = filter_b(field, &b);
    EnumerationTables {
        delta: delta(field),
        r,
        b,
        j: compute_j(field),
        i,
    }
}

/// Expands `x^2 ± alpha^(i+j) x + alpha^(2j+1)` over the given tables.
/// Sorted by the discrete logarithms of `b` then `c`, without duplicates.
pub fn expand(field: &GaloisField, tables: &EnumerationTables) -> Vec<MonicQuadratic> {
    let mut out = Vec::with_capacity(2 * tables.i.len() * tables.j.len());
    for &i in &tables.i {
        for &j in &tables.j {
            let b = field.alpha_pow(i as i64 + j as i64);
            let c = field.alpha_pow(2 * j as i64 + 1);
            out.push(MonicQuadratic::new(b, c));
            out.push(MonicQuadratic::new(field.neg(b), c));
        }
    }
    let key = |f: &MonicQuadratic| {
        (
            field.log(f.b).expect("b is nonzero"),
            field.log(f.c).expect("c is nonzero"),
        )
    };
    out.sort_by_key(key);
    out.dedup();
    out
}

pub fn enumerate_primitive_quadratics(field: &GaloisField) -> Vec<MonicQuadratic> {
    expand(field, &tables(field))
}

/// Row of the enumeration listing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadraticRow {
    pub q: u32,
    pub b: String,
    pub c: String,
    pub b_log: u32,
    pub c_log: u32,
}

pub fn rows(field: &GaloisField, polys: &[MonicQuadratic]) -> Vec<QuadraticRow> {
    polys
        .iter()
        .map(|f| QuadraticRow {
            q: field.order(),
            b: field.format_elem(f.b),
            c: field.format_elem(f.c),
            b_log: field.log(f.b).expect("nonzero"),
            c_log: field.log(f.c).expect("nonzero"),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::build_field;
    use crate::numtheory::prime_powers_up_to;
    use crate::primitivity::{is_irreducible_quadratic, is_primitive_quadratic};

    fn set(v: &[u32]) -> BTreeSet<u32> {
        v.iter().copied().collect()
    }

    fn gf8() -> GaloisField {
        build_field(2, 3, Some(&[1, 1, 0, 1]), None).unwrap()
    }

    fn gf9() -> GaloisField {
        build_field(3, 2, Some(&[2, 1, 1]), None).unwrap()
    }

    fn gf11() -> GaloisField {
        build_field(11, 1, None, Some(2)).unwrap()
    }

    /// Reducibility markers straight from the factorization
    /// `(x + u)(x + v)` with `u v = alpha`, over every `u`.
    fn r_by_factoring(field: &GaloisField) -> BTreeSet<u32> {
        let modulus = index_range(field);
        field
            .nonzero_elements()
            .filter_map(|u| {
                let v = field.div(field.alpha(), u).unwrap();
                field.log(field.add(u, v)).ok().map(|l| l % modulus)
            })
            .collect()
    }

    #[test]
    fn r_sets() {
        assert_eq!(compute_r(&gf8()), set(&[0, 2, 3]));
        assert_eq!(compute_r(&gf11()), set(&[0, 3]));
        assert_eq!(compute_r(&gf8()), r_by_factoring(&gf8()));
        assert_eq!(compute_r(&gf11()), r_by_factoring(&gf11()));
        for i in compute_r(&gf8()) {
            let f = gf8();
            assert!(!is_irreducible_quadratic(
                &f,
                MonicQuadratic::new(f.alpha_pow(i as i64), f.alpha())
            ));
        }
        assert!(compute_r(&GaloisField::new(2, 1).unwrap()).is_empty());
    }

    #[test]
    fn b_j_i_sets() {
        assert_eq!(compute_b(&gf8()), set(&[1, 4, 5, 6]));
        assert_eq!(compute_b(&gf9()), set(&[1, 2]));
        assert_eq!(compute_b(&gf11()), set(&[1, 2, 4]));
        assert_eq!(compute_j(&gf8()), set(&[0, 1, 2, 4, 5, 6]));
        assert_eq!(compute_j(&gf9()), set(&[0, 1, 2, 3]));
        assert_eq!(compute_j(&gf11()), set(&[0, 1, 3, 4]));
        assert_eq!(compute_i(&gf8()), set(&[1, 5, 6]));
        assert_eq!(compute_i(&gf9()), set(&[1, 2]));
        assert_eq!(compute_i(&gf11()), set(&[2, 4]));
    }

    #[test]
    fn example_counts() {
        assert_eq!(enumerate_primitive_quadratics(&gf8()).len(), 18);
        assert_eq!(enumerate_primitive_quadratics(&gf9()).len(), 16);
        let listed = enumerate_primitive_quadratics(&gf11());
        assert_eq!(listed.len(), 16);
        assert!(listed.contains(&MonicQuadratic::new(crate::Elem(4), crate::Elem(2))));
        assert!(listed.contains(&MonicQuadratic::new(crate::Elem(5), crate::Elem(2))));
        assert_eq!(euler_phi(63) / 2, 18);
    }

    #[test]
    fn small_fields() {
        let f2 = GaloisField::new(2, 1).unwrap();
        let t = tables(&f2);
        assert_eq!(
            (t.b.clone(), t.j.clone(), t.i.clone()),
            (set(&[0]), set(&[0]), set(&[0]))
        );
        assert_eq!(
            enumerate_primitive_quadratics(&f2),
            vec![MonicQuadratic::new(crate::Elem(1), crate::Elem(1))]
        );
        assert_eq!(
            enumerate_primitive_quadratics(&GaloisField::new(3, 1).unwrap()).len(),
            2
        );
    }

    #[test]
    fn table_invariants() {
        for q in prime_powers_up_to(128) {
            let f = GaloisField::of_order(q).unwrap();
            let t = tables(&f);
            let range = index_range(&f);
            assert!(t.r.is_disjoint(&t.b));
            assert_eq!(t.r.union(&t.b).count() as u32, range);
            assert!(t.i.is_subset(&t.b));
            let n = q - 1;
            let odd = f.characteristic() != 2;
            for &j in &t.j {
                assert_eq!(gcd(2 * j as u64 + 1, n), 1);
                assert!((j as u64) < if odd { n / 2 } else { n.max(1) });
            }
        }
    }

    #[test]
    fn b_membership_is_irreducibility() {
        for q in prime_powers_up_to(128) {
            let f = GaloisField::of_order(q).unwrap();
            let b = compute_b(&f);
            for i in 0..(q - 1) as u32 {
                let g = MonicQuadratic::new(f.alpha_pow(i as i64), f.alpha());
                let member = b.contains(&(i % index_range(&f)));
                assert_eq!(member, is_irreducible_quadratic(&f, g), "q = {q}, i = {i}");
            }
        }
    }

    #[test]
    fn j_membership_is_primitivity() {
        for q in prime_powers_up_to(128) {
            let f = GaloisField::of_order(q).unwrap();
            let j = compute_j(&f);
            let limit = if f.characteristic() == 2 {
                (q - 1).max(1)
            } else {
                (q - 1) / 2
            };
            for jj in 0..limit as u32 {
                let c = f.alpha_pow(2 * jj as i64 + 1);
                assert_eq!(
                    j.contains(&jj),
                    f.is_primitive_element(c).unwrap(),
                    "q = {q}"
                );
            }
        }
    }

    #[test]
    fn matches_direct_sweep() {
        for q in prime_powers_up_to(64) {
            let f = GaloisField::of_order(q).unwrap();
            let mut direct: Vec<MonicQuadratic> = f
                .elements()
                .flat_map(|b| f.elements().map(move |c| MonicQuadratic::new(b, c)))
                .filter(|&g| is_primitive_quadratic(&f, g).primitive)
                .collect();
            direct.sort_by_key(|g| (f.log(g.b).unwrap(), f.log(g.c).unwrap()));
            assert_eq!(enumerate_primitive_quadratics(&f), direct, "q = {q}");
        }
    }
}
