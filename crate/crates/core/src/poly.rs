//! Dense univariate polynomials over a [`GaloisField`]: division with
//! remainder, powers of `x` modulo a polynomial, order and quasi-order.

use crate::error::{Error, Result};
use crate::field::{Elem, FieldArith, FieldId, GaloisField};

/// Coefficients stored constant term first with trailing zeros trimmed; the
/// zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    field: FieldId,
    coeffs: Vec<Elem>,
}

impl Poly {
    pub fn new(field: &GaloisField, coeffs: Vec<Elem>) -> Result<Poly> {
        for &c in &coeffs {
            field.check(c)?;
        }
        Ok(Self::from_raw(field.id(), coeffs))
    }

    pub(crate) fn from_raw(field: FieldId, mut coeffs: Vec<Elem>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: &GaloisField) -> Poly {
        Self::from_raw(field.id(), Vec::new())
    }

    pub fn constant(field: &GaloisField, c: Elem) -> Poly {
        Self::from_raw(field.id(), vec![c])
    }

    pub fn one(field: &GaloisField) -> Poly {
        Self::constant(field, Elem::ONE)
    }

    /// `c x^d`.
    pub fn monomial(field: &GaloisField, c: Elem, d: usize) -> Poly {
        let mut coeffs = vec![Elem::ZERO; d + 1];
        coeffs[d] = c;
        Self::from_raw(field.id(), coeffs)
    }

    pub fn x(field: &GaloisField) -> Poly {
        Self::monomial(field, Elem::ONE, 1)
    }

    pub fn field_id(&self) -> FieldId {
        self.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem::ZERO)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<Elem> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(Elem::ONE)
    }

    /// Whether the polynomial has degree < 1.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }
}

/// `x^2 + b x + c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonicQuadratic {
    pub b: Elem,
    pub c: Elem,
}

impl MonicQuadratic {
    pub fn new(b: Elem, c: Elem) -> Self {
        MonicQuadratic { b, c }
    }

    pub fn to_poly(&self, field: &GaloisField) -> Poly {
        Poly::from_raw(field.id(), vec![self.c, self.b, Elem::ONE])
    }

    /// `None` unless `f` is monic of degree two.
    pub fn from_poly(f: &Poly) -> Option<Self> {
        (f.degree() == Some(2) && f.is_monic()).then(|| MonicQuadratic {
            b: f.coeff(1),
            c: f.coeff(0),
        })
    }

    pub fn eval(&self, field: &GaloisField, t: Elem) -> Elem {
        field.add(field.mul(field.add(t, self.b), t), self.c)
    }
}

/// The quasi-order `rho` of `f` and the constant `a` with `x^rho = a (mod f)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuasiOrderResult {
    pub rho: u64,
    pub a: Elem,
}

/// Polynomial arithmetic over one field.
#[derive(Clone, Copy)]
pub struct PolyRing<'f> {
    field: &'f GaloisField,
}

impl<'f> PolyRing<'f> {
    pub fn new(field: &'f GaloisField) -> Self {
        PolyRing { field }
    }

    pub fn field(&self) -> &'f GaloisField {
        self.field
    }

    fn check(&self, f: &Poly) -> Result<()> {
        if f.field == self.field.id() {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }

    fn make(&self, coeffs: Vec<Elem>) -> Poly {
        Poly::from_raw(self.field.id(), coeffs)
    }

    pub fn add(&self, a: &Poly, b: &Poly) -> Result<Poly> {
        self.check(a)?;
        self.check(b)?;
        let n = a.coeffs.len().max(b.coeffs.len());
        Ok(self.make(
            (0..n)
                .map(|i| self.field.add(a.coeff(i), b.coeff(i)))
                .collect(),
        ))
    }

    pub fn neg(&self, a: &Poly) -> Result<Poly> {
        self.check(a)?;
        Ok(self.make(a.coeffs.iter().map(|&c| self.field.neg(c)).collect()))
    }

    pub fn sub(&self, a: &Poly, b: &Poly) -> Result<Poly> {
        self.add(a, &self.neg(b)?)
    }

    pub fn scale(&self, a: &Poly, s: Elem) -> Result<Poly> {
        self.check(a)?;
        self.field.check(s)?;
        Ok(self.make(a.coeffs.iter().map(|&c| self.field.mul(c, s)).collect()))
    }

    pub fn mul(&self, a: &Poly, b: &Poly) -> Result<Poly> {
        self.check(a)?;
        self.check(b)?;
        if a.is_zero() || b.is_zero() {
            return Ok(self.make(Vec::new()));
        }
        let f = self.field;
        let mut out = vec![Elem::ZERO; a.coeffs.len() + b.coeffs.len() - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(x, y));
            }
        }
        Ok(self.make(out))
    }

    /// Division with remainder: `num = quotient * den + remainder` with
    /// `deg remainder < deg den`.
    pub fn divmod(&self, num: &Poly, den: &Poly) -> Result<(Poly, Poly)> {
        self.check(num)?;
        self.check(den)?;
        let dd = den.degree().ok_or(Error::DivisionByZero)?;
        let f = self.field;
        let lead_inv = f.inv(den.leading().expect("nonzero"))?;
        let mut rem = num.coeffs.clone();
        if rem.len() <= dd {
            return Ok((self.make(Vec::new()), self.make(rem)));
        }
        let mut quot = vec![Elem::ZERO; rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            let t = f.mul(rem[top], lead_inv);
            if t.is_zero() {
                continue;
            }
            quot[top - dd] = t;
            for (k, &dc) in den.coeffs.iter().enumerate() {
                let idx = top - dd + k;
                rem[idx] = f.sub(rem[idx], f.mul(t, dc));
            }
        }
        rem.truncate(dd);
        Ok((self.make(quot), self.make(rem)))
    }

    pub fn rem(&self, num: &Poly, den: &Poly) -> Result<Poly> {
        Ok(self.divmod(num, den)?.1)
    }

    pub fn eval(&self, f: &Poly, t: Elem) -> Result<Elem> {
        self.check(f)?;
        self.field.check(t)?;
        Ok(f.coeffs.iter().rev().fold(Elem::ZERO, |acc, &c| {
            self.field.add(self.field.mul(acc, t), c)
        }))
    }

    fn check_modulus(&self, f: &Poly) -> Result<()> {
        self.check(f)?;
        match f.degree() {
            None | Some(0) => Err(Error::Precondition(
                "modulus must have positive degree".into(),
            )),
            _ if !f.is_monic() => Err(Error::Precondition("modulus must be monic".into())),
            _ if f.coeff(0).is_zero() => Err(Error::Precondition(
                "modulus must have a nonzero constant term".into(),
            )),
            _ => Ok(()),
        }
    }

    /// `r * x mod f` for monic `f` and `deg r < deg f`.
    fn mul_x_mod(&self, r: &[Elem], f: &Poly) -> Vec<Elem> {
        let d = f.degree().expect("nonzero modulus");
        let mut out = Vec::with_capacity(d + 1);
        out.push(Elem::ZERO);
        out.extend_from_slice(r);
        if out.len() > d {
            let lead = out.pop().expect("nonempty");
            if !lead.is_zero() {
                for (k, o) in out.iter_mut().enumerate() {
                    *o = self.field.sub(*o, self.field.mul(lead, f.coeffs[k]));
                }
            }
        }
        while out.last().is_some_and(|c| c.is_zero()) {
            out.pop();
        }
        out
    }

    /// `x^e mod f` by square-and-multiply.
    pub fn x_pow_mod(&self, e: u64, f: &Poly) -> Result<Poly> {
        self.check_modulus(f)?;
        let mut acc = self.rem(&Poly::one(self.field), f)?;
        let mut base = self.rem(&Poly::x(self.field), f)?;
        let mut k = e;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.rem(&self.mul(&acc, &base)?, f)?;
            }
            k >>= 1;
            if k > 0 {
                base = self.rem(&self.mul(&base, &base)?, f)?;
            }
        }
        Ok(acc)
    }

    /// `x^e mod f` by `e` successive multiply-by-`x`-and-reduce steps. For a
    /// quadratic modulus each step is the two-term linear recurrence.
    pub fn x_pow_mod_iterative(&self, e: u64, f: &Poly) -> Result<Poly> {
        self.check_modulus(f)?;
        let mut r = self.rem(&Poly::one(self.field), f)?.coeffs;
        for _ in 0..e {
            r = self.mul_x_mod(&r, f);
        }
        Ok(self.make(r))
    }

    /// Iterator over `x^k mod f` for `k = 1, 2, ...`.
    pub fn x_powers<'a>(&self, f: &'a Poly) -> Result<XPowers<'f, 'a>> {
        self.check_modulus(f)?;
        Ok(XPowers {
            ring: *self,
            modulus: f,
            current: self.rem(&Poly::one(self.field), f)?.coeffs,
        })
    }

    fn iteration_bound(&self, f: &Poly) -> u64 {
        let d = f.degree().unwrap_or(0) as u32;
        (self.field.order() as u64).saturating_pow(d)
    }

    /// Least `rho >= 1` with `x^rho` congruent to a nonzero constant, found by
    /// linear iteration.
    pub fn quasi_order(&self, f: &Poly) -> Result<QuasiOrderResult> {
        let bound = self.iteration_bound(f);
        for (k, r) in self.x_powers(f)?.enumerate() {
            let k = k as u64 + 1;
            if r.len() <= 1 {
                let a = r.first().copied().unwrap_or(Elem::ZERO);
                debug_assert!(!a.is_zero());
                return Ok(QuasiOrderResult { rho: k, a });
            }
            if k > bound {
                break;
            }
        }
        Err(Error::Precondition(
            "quasi-order search did not terminate".into(),
        ))
    }

    fn monic_with_unit_constant(&self, f: &Poly) -> Result<Poly> {
        self.check(f)?;
        let lead = f.leading().ok_or_else(|| {
            Error::Precondition("order is undefined for the zero polynomial".into())
        })?;
        if f.degree() == Some(0) {
            return Err(Error::Precondition("order needs positive degree".into()));
        }
        if f.coeff(0).is_zero() {
            return Err(Error::Precondition("order needs f(0) != 0".into()));
        }
        self.scale(f, self.field.inv(lead)?)
    }

    /// `ord(f)`: the least `e` with `f | x^e - 1`, as `rho * ord(a)` from the
    /// quasi-order decomposition.
    pub fn ord_poly(&self, f: &Poly) -> Result<u64> {
        let f = self.monic_with_unit_constant(f)?;
        let QuasiOrderResult { rho, a } = self.quasi_order(&f)?;
        Ok(rho * self.field.multiplicative_order(a)?)
    }

    /// `ord(f)` by iterating `x^k mod f` until it returns to 1.
    pub fn ord_poly_by_iteration(&self, f: &Poly) -> Result<u64> {
        let f = self.monic_with_unit_constant(f)?;
        let bound = self.iteration_bound(&f);
        for (k, r) in self.x_powers(&f)?.enumerate() {
            let k = k as u64 + 1;
            if r.len() == 1 && r[0] == Elem::ONE {
                return Ok(k);
            }
            if k > bound {
                break;
            }
        }
        Err(Error::Precondition("order search did not terminate".into()))
    }

    /// With `x^e = k x + l (mod f1)` and `f2 = x^2 + m^j b x + m^(2j) c`,
    /// checks `x^e = m^((e-1)j) k x + m^(ej) l (mod f2)`.
    pub fn scaled_congruence_check(
        &self,
        f1: MonicQuadratic,
        m: Elem,
        j: u64,
        e: u64,
    ) -> Result<bool> {
        let field = self.field;
        for x in [f1.b, f1.c, m] {
            field.check(x)?;
        }
        if f1.b.is_zero() || f1.c.is_zero() {
            return Err(Error::Precondition("b and c must be nonzero".into()));
        }
        if m.is_zero() {
            return Err(Error::Precondition("scale must be nonzero".into()));
        }
        if j < 1 || e < 2 {
            return Err(Error::Precondition("need j >= 1 and e >= 2".into()));
        }
        let n = field.order() as u128 - 1;
        let mpow = |k: u128| field.pow(m, (k % n) as u64);
        let f2 = MonicQuadratic::new(
            field.mul(mpow(j as u128), f1.b),
            field.mul(mpow(2 * j as u128), f1.c),
        );
        let r1 = self.x_pow_mod(e, &f1.to_poly(field))?;
        let (l, k) = (r1.coeff(0), r1.coeff(1));
        let expected = self.make(vec![
            field.mul(mpow(e as u128 * j as u128), l),
            field.mul(mpow((e as u128 - 1) * j as u128), k),
        ]);
        Ok(self.x_pow_mod(e, &f2.to_poly(field))? == expected)
    }
}

/// `x^k mod f` for `k = 1, 2, ...`, as trimmed coefficient vectors.
pub struct XPowers<'f, 'a> {
    ring: PolyRing<'f>,
    modulus: &'a Poly,
    current: Vec<Elem>,
}

impl Iterator for XPowers<'_, '_> {
    type Item = Vec<Elem>;

    fn next(&mut self) -> Option<Self::Item> {
        self.current = self.ring.mul_x_mod(&self.current, self.modulus);
        Some(self.current.clone())
    }
}

/// Synthetic division of `x^e` (`e >= 2`) by `x^2 + b x + c`.
///
/// Returns the quotient coefficients from the leading term down (`e - 1` of
/// them) and the remainder `(k, l)` meaning `k x + l`.
pub fn synthetic_division_x_pow<A: FieldArith + ?Sized>(
    arith: &A,
    e: u64,
    b: Elem,
    c: Elem,
) -> (Vec<Elem>, (Elem, Elem)) {
    assert!(
        e >= 2,
        "dividend degree must be at least the divisor degree"
    );
    let n = e as usize;
    let mut w = vec![Elem::ZERO; n + 1];
    w[0] = Elem::ONE;
    for i in 0..n - 1 {
        let t = w[i];
        w[i + 1] = arith.sub(w[i + 1], arith.mul(t, b));
        w[i + 2] = arith.sub(w[i + 2], arith.mul(t, c));
    }
    let l = w[n];
    let k = w[n - 1];
    w.truncate(n - 1);
    (w, (k, l))
}

/// Multiplicative order of `x` modulo `x^2 + b x + c` by direct iteration,
/// giving up after `limit` steps.
pub fn x_order_by_iteration<A: FieldArith + ?Sized>(
    arith: &A,
    b: Elem,
    c: Elem,
    limit: u64,
) -> Option<u64> {
    // x^k = k1 x + k0
    let (mut k1, mut k0) = (Elem::ONE, Elem::ZERO);
    for k in 1..=limit {
        if k1.is_zero() && k0 == Elem::ONE {
            return Some(k);
        }
        // x^(k+1) = k1 x^2 + k0 x = (k0 - k1 b) x - k1 c
        let next1 = arith.sub(k0, arith.mul(k1, b));
        let next0 = arith.neg(arith.mul(k1, c));
        k1 = next1;
        k0 = next0;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::build_field;
    use proptest::prelude::*;

    fn poly(field: &GaloisField, high_first: &[u32]) -> Poly {
        let coeffs = high_first
            .iter()
            .rev()
            .map(|&v| field.elem(v).unwrap())
            .collect();
        Poly::new(field, coeffs).unwrap()
    }

    #[test]
    fn divmod_example_gf11() {
        let f = build_field(11, 1, None, Some(2)).unwrap();
        let ring = PolyRing::new(&f);
        let x5 = Poly::monomial(&f, f.one(), 5);
        let (quot, rem) = ring.divmod(&x5, &poly(&f, &[1, 2, 2])).unwrap();
        assert_eq!(quot, poly(&f, &[1, 9, 2, 0]));
        assert_eq!(rem, poly(&f, &[7, 0]));
    }

    #[test]
    fn divmod_example_gf8() {
        let f = build_field(2, 3, Some(&[1, 1, 0, 1]), None).unwrap();
        let ring = PolyRing::new(&f);
        let a = |k| f.alpha_pow(k);
        let den = Poly::new(&f, vec![a(1), a(4), f.one()]).unwrap();
        let (quot, rem) = ring.divmod(&Poly::monomial(&f, f.one(), 4), &den).unwrap();
        assert_eq!(
            quot,
            Poly::new(&f, vec![Elem::ZERO, a(4), f.one()]).unwrap()
        );
        assert_eq!(rem, Poly::new(&f, vec![Elem::ZERO, a(5)]).unwrap());
    }

    #[test]
    fn divmod_self_and_zero() {
        let f = GaloisField::new(7, 1).unwrap();
        let ring = PolyRing::new(&f);
        let g = poly(&f, &[3, 0, 5, 1]);
        assert_eq!(
            ring.divmod(&g, &g).unwrap(),
            (Poly::one(&f), Poly::zero(&f))
        );
        assert_eq!(
            ring.divmod(&g, &Poly::zero(&f)).unwrap_err(),
            Error::DivisionByZero
        );
        let other = GaloisField::new(7, 1).unwrap();
        assert_eq!(
            ring.divmod(&g, &Poly::one(&other)).unwrap_err(),
            Error::MixedFields
        );
    }

    #[test]
    fn x_pow_mod_examples() {
        let f11 = build_field(11, 1, None, Some(2)).unwrap();
        let ring = PolyRing::new(&f11);
        assert_eq!(
            ring.x_pow_mod(5, &poly(&f11, &[1, 2, 2])).unwrap(),
            poly(&f11, &[7, 0])
        );
        let f13 = build_field(13, 1, None, Some(6)).unwrap();
        let ring = PolyRing::new(&f13);
        let g = poly(&f13, &[1, 1, 2]);
        assert_eq!(
            ring.x_pow_mod(14, &g).unwrap(),
            Poly::constant(&f13, Elem(2))
        );
        assert_eq!(ring.x_pow_mod(1, &g).unwrap(), Poly::x(&f13));
        assert_eq!(ring.x_pow_mod(0, &g).unwrap(), Poly::one(&f13));
    }

    #[test]
    fn x_pow_mod_rejects_bad_moduli() {
        let f = GaloisField::new(5, 1).unwrap();
        let ring = PolyRing::new(&f);
        for bad in [poly(&f, &[2, 1, 1]), poly(&f, &[1, 1, 0]), poly(&f, &[3])] {
            assert!(matches!(
                ring.x_pow_mod(3, &bad),
                Err(Error::Precondition(_))
            ));
        }
    }

    #[test]
    fn quasi_order_examples() {
        let f11 = build_field(11, 1, None, Some(2)).unwrap();
        let ring = PolyRing::new(&f11);
        for c in 1..11 {
            assert_eq!(ring.quasi_order(&poly(&f11, &[1, 0, c])).unwrap().rho, 2);
        }
        // x^2 + 2x + 2: x^4 = 7 (mod f), frozen from direct iteration.
        let qo = ring.quasi_order(&poly(&f11, &[1, 2, 2])).unwrap();
        assert_eq!(qo, QuasiOrderResult { rho: 4, a: Elem(7) });
        assert_eq!(12 % qo.rho, 0);

        let f13 = build_field(13, 1, None, Some(6)).unwrap();
        let ring = PolyRing::new(&f13);
        let qo = ring.quasi_order(&poly(&f13, &[1, 1, 2])).unwrap();
        assert_eq!(
            qo,
            QuasiOrderResult {
                rho: 14,
                a: Elem(2)
            }
        );
    }

    #[test]
    fn ord_examples() {
        let f13 = build_field(13, 1, None, Some(6)).unwrap();
        let ring = PolyRing::new(&f13);
        assert_eq!(ring.ord_poly(&poly(&f13, &[1, 1, 2])).unwrap(), 168);
        assert_eq!(ring.ord_poly(&poly(&f13, &[1, 12])).unwrap(), 1);
        let f11 = build_field(11, 1, None, Some(2)).unwrap();
        let ring = PolyRing::new(&f11);
        let ord = ring.ord_poly(&poly(&f11, &[1, 2, 2])).unwrap();
        // rho = 4, a = 7 = 2^7 has order 10
        assert_eq!(ord, 40);
        assert_eq!(
            ord,
            ring.ord_poly_by_iteration(&poly(&f11, &[1, 2, 2])).unwrap()
        );
        assert!(matches!(
            ring.ord_poly(&poly(&f11, &[1, 1, 0])),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn ord_of_non_monic_matches_monic() {
        let f = GaloisField::new(7, 1).unwrap();
        let ring = PolyRing::new(&f);
        let g = poly(&f, &[1, 3, 5]);
        let g3 = ring.scale(&g, Elem(3)).unwrap();
        assert_eq!(ring.ord_poly(&g).unwrap(), ring.ord_poly(&g3).unwrap());
    }

    #[test]
    fn scaled_congruence_examples() {
        let f13 = build_field(13, 1, None, Some(6)).unwrap();
        let ring = PolyRing::new(&f13);
        let f1 = MonicQuadratic::new(Elem(1), Elem(2));
        assert!(ring.scaled_congruence_check(f1, Elem(6), 1, 5).unwrap());
        assert!(ring.scaled_congruence_check(f1, Elem(1), 7, 9).unwrap());

        let f8 = build_field(2, 3, Some(&[1, 1, 0, 1]), None).unwrap();
        let ring = PolyRing::new(&f8);
        let a = f8.alpha();
        assert!(ring
            .scaled_congruence_check(MonicQuadratic::new(a, a), a, 2, 4)
            .unwrap());

        assert!(matches!(
            ring.scaled_congruence_check(MonicQuadratic::new(Elem::ZERO, a), a, 1, 3),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            ring.scaled_congruence_check(MonicQuadratic::new(a, a), a, 1, 1),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn synthetic_division_matches_divmod() {
        let f = GaloisField::of_order(9).unwrap();
        let ring = PolyRing::new(&f);
        for b in f.elements() {
            for c in f.elements() {
                let g = MonicQuadratic::new(b, c).to_poly(&f);
                for e in 2..9u64 {
                    let (high_first, (k, l)) = synthetic_division_x_pow(&f, e, b, c);
                    let (quot, rem) = ring
                        .divmod(&Poly::monomial(&f, f.one(), e as usize), &g)
                        .unwrap();
                    let mut low_first = high_first.clone();
                    low_first.reverse();
                    assert_eq!(Poly::new(&f, low_first).unwrap(), quot);
                    assert_eq!(rem, Poly::new(&f, vec![l, k]).unwrap());
                    assert_eq!(high_first.len() as u64, e - 1);
                }
            }
        }
    }

    #[test]
    fn both_x_pow_paths_agree() {
        for q in [4u64, 5, 9, 16] {
            let f = GaloisField::of_order(q).unwrap();
            let ring = PolyRing::new(&f);
            for b in f.elements() {
                for c in f.nonzero_elements() {
                    let g = MonicQuadratic::new(b, c).to_poly(&f);
                    for e in [1u64, 2, 3, q, q + 1, q * q - 1, 2 * q * q + 7] {
                        assert_eq!(
                            ring.x_pow_mod(e, &g).unwrap(),
                            ring.x_pow_mod_iterative(e, &g).unwrap()
                        );
                    }
                }
            }
        }
        let f = GaloisField::new(3, 1).unwrap();
        let ring = PolyRing::new(&f);
        let cubic = poly(&f, &[1, 0, 2, 1]);
        for e in 0..40 {
            assert_eq!(
                ring.x_pow_mod(e, &cubic).unwrap(),
                ring.x_pow_mod_iterative(e, &cubic).unwrap()
            );
        }
    }

    #[test]
    fn x_order_iteration_matches_ring() {
        let f = GaloisField::of_order(8).unwrap();
        let ring = PolyRing::new(&f);
        for b in f.elements() {
            for c in f.nonzero_elements() {
                let g = MonicQuadratic::new(b, c).to_poly(&f);
                assert_eq!(
                    x_order_by_iteration(&f, b, c, 64),
                    Some(ring.ord_poly_by_iteration(&g).unwrap())
                );
            }
        }
    }

    proptest! {
        #[test]
        fn division_identity(
            q_idx in 0usize..4,
            num in proptest::collection::vec(any::<u32>(), 0..12),
            den in proptest::collection::vec(any::<u32>(), 0..6),
        ) {
            let q = [7u64, 8, 9, 25][q_idx];
            let f = GaloisField::of_order(q).unwrap();
            let ring = PolyRing::new(&f);
            let lift = |v: Vec<u32>| {
                Poly::new(&f, v.into_iter().map(|x| Elem(x % q as u32)).collect()).unwrap()
            };
            let (num, den) = (lift(num), lift(den));
            if den.is_zero() {
                prop_assert_eq!(ring.divmod(&num, &den).unwrap_err(), Error::DivisionByZero);
            } else {
                let (quot, rem) = ring.divmod(&num, &den).unwrap();
                let back = ring.add(&ring.mul(&quot, &den).unwrap(), &rem).unwrap();
                prop_assert_eq!(back, num);
                prop_assert!(rem.degree().is_none_or(|d| d < den.degree().unwrap()));
            }
        }
    }
}
