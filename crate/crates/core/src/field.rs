//! Small finite fields GF(p^m) backed by exponent/logarithm tables.
//!
//! An element is stored as its canonical value: the coordinate vector
//! `(c0, c1, ..., c_{m-1})` over GF(p) with respect to the power basis of the
//! modulus, read as the base-p integer `c0 + c1 p + ... + c_{m-1} p^{m-1}`.
//! That integer is also the canonical ordering used whenever a "smallest"
//! element or modulus is chosen.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};
use crate::numtheory::{factorize, gcd, is_prime};

/// Largest base field built by default.
pub const DEFAULT_MAX_ORDER: u64 = 1 << 12;
/// Largest quadratic extension GF(q^2) built by default.
pub const DEFAULT_MAX_EXTENSION_ORDER: u64 = 1 << 24;

static NEXT_FIELD_ID: AtomicU64 = AtomicU64::new(1);

/// Identity of a constructed field. Clones of a field share the id.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldId(u64);

/// A field element in canonical form. Only meaningful together with the
/// [`GaloisField`] that produced it.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(pub(crate) u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    /// The canonical base-p value of the coordinate vector.
    pub fn value(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// The four ring operations the generic polynomial routines are written
/// against. [`OpCounter`] implements it too, which is how the bench measures
/// exact operation counts.
pub trait FieldArith {
    fn add(&self, a: Elem, b: Elem) -> Elem;
    fn sub(&self, a: Elem, b: Elem) -> Elem;
    fn mul(&self, a: Elem, b: Elem) -> Elem;
    fn neg(&self, a: Elem) -> Elem;
}

/// GF(p^m) with a designated primitive element `alpha`.
#[derive(Clone)]
pub struct GaloisField {
    id: FieldId,
    p: u32,
    m: u32,
    q: u32,
    /// Monic, constant term first, length `m + 1`. `None` for prime fields.
    modulus: Option<Vec<u32>>,
    alpha: Elem,
    /// `exp[i] = alpha^i` for `0 <= i < q - 1`.
    exp: Vec<u32>,
    /// Inverse of `exp` on nonzero values; `log[0]` is unused.
    log: Vec<u32>,
}

impl fmt::Debug for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GaloisField")
            .field("p", &self.p)
            .field("m", &self.m)
            .field("modulus", &self.modulus)
            .field("alpha", &self.alpha.0)
            .finish()
    }
}

#[derive(Clone, Debug)]
enum AlphaHint {
    Value(u32),
    Coords(Vec<u32>),
}

/// Configures construction of a [`GaloisField`].
#[derive(Clone, Debug)]
pub struct FieldBuilder {
    p: u64,
    m: u32,
    modulus: Option<Vec<u32>>,
    alpha: Option<AlphaHint>,
    max_order: u64,
}

impl FieldBuilder {
    pub fn new(p: u64, m: u32) -> Self {
        FieldBuilder {
            p,
            m,
            modulus: None,
            alpha: None,
            max_order: DEFAULT_MAX_ORDER,
        }
    }

    /// Modulus coefficients over GF(p), constant term first.
    pub fn modulus(mut self, coeffs: Vec<u32>) -> Self {
        self.modulus = Some(coeffs);
        self
    }

    /// Primitive element given by its canonical value.
    pub fn alpha_value(mut self, value: u32) -> Self {
        self.alpha = Some(AlphaHint::Value(value));
        self
    }

    /// Primitive element given by its coordinates, constant first.
    pub fn alpha_coords(mut self, coords: Vec<u32>) -> Self {
        self.alpha = Some(AlphaHint::Coords(coords));
        self
    }

    pub fn max_order(mut self, bound: u64) -> Self {
        self.max_order = bound;
        self
    }

    pub fn build(self) -> Result<GaloisField> {
        let FieldBuilder {
            p,
            m,
            modulus,
            alpha,
            max_order,
        } = self;
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::ZeroDegree);
        }
        let order = p
            .checked_pow(m)
            .filter(|&q| q <= max_order && q <= u32::MAX as u64)
            .ok_or(Error::FieldTooLarge {
                order: p.saturating_pow(m),
                bound: max_order,
            })?;
        let p = p as u32;
        let ring = ResidueRing::new(p, m, modulus)?;

        let alpha_coords = match alpha {
            Some(AlphaHint::Value(v)) => {
                if v as u64 >= order {
                    return Err(Error::NotAnElement {
                        value: v as u64,
                        order,
                    });
                }
                value_to_coords(v, p, m)
            }
            Some(AlphaHint::Coords(mut c)) => {
                if c.len() > m as usize || c.iter().any(|&d| d >= p) {
                    return Err(Error::Parse(format!(
                        "coordinates {c:?} do not describe an element of GF({p}^{m})"
                    )));
                }
                c.resize(m as usize, 0);
                c
            }
            None => ring
                .smallest_primitive()
                .expect("the multiplicative group of a finite field is cyclic"),
        };
        if !ring.is_primitive(&alpha_coords) {
            return Err(Error::NotPrimitive(format!("{alpha_coords:?}")));
        }

        let q = order as u32;
        let n = (q - 1) as usize;
        let mut exp = Vec::with_capacity(n);
        let mut log = vec![u32::MAX; q as usize];
        let mut cur = ring.one();
        for i in 0..n {
            let v = coords_to_value(&cur, p);
            debug_assert_eq!(log[v as usize], u32::MAX, "alpha has order < q-1");
            log[v as usize] = i as u32;
            exp.push(v);
            cur = ring.mul(&cur, &alpha_coords);
        }
        debug_assert_eq!(cur, ring.one());

        Ok(GaloisField {
            id: FieldId(NEXT_FIELD_ID.fetch_add(1, Ordering::Relaxed)),
            p,
            m,
            q,
            modulus: ring.modulus,
            alpha: Elem(coords_to_value(&alpha_coords, p)),
            exp,
            log,
        })
    }
}

/// Builds GF(p^m). Without a modulus the smallest monic irreducible of degree
/// `m` is used; without a hint `alpha` is the smallest primitive element.
pub fn build_field(
    p: u64,
    m: u32,
    modulus: Option<&[u32]>,
    alpha_hint: Option<u32>,
) -> Result<GaloisField> {
    let mut builder = FieldBuilder::new(p, m);
    if let Some(coeffs) = modulus {
        builder = builder.modulus(coeffs.to_vec());
    }
    if let Some(v) = alpha_hint {
        builder = builder.alpha_value(v);
    }
    builder.build()
}

impl GaloisField {
    /// GF(p^m) with the default modulus and primitive element.
    pub fn new(p: u64, m: u32) -> Result<Self> {
        FieldBuilder::new(p, m).build()
    }

    /// GF(q) for a prime power `q`, with defaults.
    pub fn of_order(q: u64) -> Result<Self> {
        let (p, m) = crate::numtheory::prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Self::new(p, m)
    }

    pub fn id(&self) -> FieldId {
        self.id
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn is_prime_field(&self) -> bool {
        self.m == 1
    }

    pub fn modulus(&self) -> Option<&[u32]> {
        self.modulus.as_deref()
    }

    pub fn alpha(&self) -> Elem {
        self.alpha
    }

    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }

    pub fn one(&self) -> Elem {
        Elem::ONE
    }

    pub fn contains(&self, e: Elem) -> bool {
        e.0 < self.q
    }

    pub fn elem(&self, value: u32) -> Result<Elem> {
        if value < self.q {
            Ok(Elem(value))
        } else {
            Err(Error::NotAnElement {
                value: value as u64,
                order: self.q as u64,
            })
        }
    }

    /// The image of the integer `k` in the prime subfield.
    pub fn from_int(&self, k: i64) -> Elem {
        Elem(k.rem_euclid(self.p as i64) as u32)
    }

    pub fn from_coords(&self, coords: &[u32]) -> Result<Elem> {
        if coords.len() > self.m as usize || coords.iter().any(|&c| c >= self.p) {
            return Err(Error::Parse(format!(
                "coordinates {coords:?} do not describe an element of GF({}^{})",
                self.p, self.m
            )));
        }
        Ok(Elem(coords_to_value(coords, self.p)))
    }

    pub fn coords(&self, e: Elem) -> Vec<u32> {
        value_to_coords(e.0, self.p, self.m)
    }

    /// Every element in canonical order, zero first.
    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.q).map(Elem)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (1..self.q).map(Elem)
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.p == 2 {
            return Elem(a.0 ^ b.0);
        }
        if self.m == 1 {
            let s = a.0 + b.0;
            return Elem(if s >= self.p { s - self.p } else { s });
        }
        let p = self.p;
        let (mut x, mut y) = (a.0, b.0);
        let (mut out, mut place) = (0u32, 1u32);
        while x != 0 || y != 0 {
            let d = (x % p + y % p) % p;
            out += d * place;
            place *= p;
            x /= p;
            y /= p;
        }
        Elem(out)
    }

    pub fn neg(&self, a: Elem) -> Elem {
        if self.p == 2 || a.0 == 0 {
            return a;
        }
        if self.m == 1 {
            return Elem(self.p - a.0);
        }
        let p = self.p;
        let mut x = a.0;
        let (mut out, mut place) = (0u32, 1u32);
        while x != 0 {
            out += ((p - x % p) % p) * place;
            place *= p;
            x /= p;
        }
        Elem(out)
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        let n = self.q - 1;
        let s = self.log[a.0 as usize] + self.log[b.0 as usize];
        Elem(self.exp[(if s >= n { s - n } else { s }) as usize])
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let l = self.log[a.0 as usize];
        Ok(Elem(self.exp[((self.q - 1 - l) % (self.q - 1)) as usize]))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^k` for a nonnegative exponent; `0^0 = 1`.
    pub fn pow(&self, a: Elem, k: u64) -> Elem {
        if a.0 == 0 {
            return if k == 0 { Elem::ONE } else { Elem::ZERO };
        }
        let n = (self.q - 1) as u64;
        let l = self.log[a.0 as usize] as u64;
        Elem(self.exp[((l * (k % n)) % n) as usize])
    }

    /// `a^k` for any integer exponent, negative exponents going through the
    /// inverse.
    pub fn pow_signed(&self, a: Elem, k: i64) -> Result<Elem> {
        if k >= 0 {
            return Ok(self.pow(a, k as u64));
        }
        let inv = self.inv(a)?;
        Ok(self.pow(inv, k.unsigned_abs()))
    }

    /// `alpha^k`, exponent taken modulo `q - 1`.
    pub fn alpha_pow(&self, k: i64) -> Elem {
        let n = (self.q - 1) as i64;
        Elem(self.exp[k.rem_euclid(n) as usize])
    }

    /// Discrete logarithm to base `alpha`, in `[0, q - 2]`.
    pub fn log(&self, a: Elem) -> Result<u32> {
        if a.0 == 0 {
            return Err(Error::ZeroLog);
        }
        self.check(a)?;
        Ok(self.log[a.0 as usize])
    }

    pub fn multiplicative_order(&self, a: Elem) -> Result<u64> {
        let n = (self.q - 1) as u64;
        Ok(n / gcd(self.log(a)? as u64, n))
    }

    /// True iff `a` generates GF(q)*, i.e. `gcd(log a, q - 1) = 1`.
    pub fn is_primitive_element(&self, a: Elem) -> Result<bool> {
        let l = self.log(a)? as u64;
        Ok(gcd(l, (self.q - 1) as u64) == 1)
    }

    /// Whether `a` is a square in the field. Zero counts as a square.
    pub fn is_square(&self, a: Elem) -> bool {
        if a.0 == 0 || self.p == 2 {
            return true;
        }
        self.log[a.0 as usize].is_multiple_of(2)
    }

    /// Wraps `e` into a handle that checks field membership on every
    /// operation.
    pub fn element(&self, e: Elem) -> FieldElement<'_> {
        FieldElement {
            field: self,
            elem: e,
        }
    }

    pub(crate) fn check(&self, a: Elem) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::NotAnElement {
                value: a.0 as u64,
                order: self.q as u64,
            })
        }
    }
}

impl FieldArith for GaloisField {
    fn add(&self, a: Elem, b: Elem) -> Elem {
        GaloisField::add(self, a, b)
    }
    fn sub(&self, a: Elem, b: Elem) -> Elem {
        GaloisField::sub(self, a, b)
    }
    fn mul(&self, a: Elem, b: Elem) -> Elem {
        GaloisField::mul(self, a, b)
    }
    fn neg(&self, a: Elem) -> Elem {
        GaloisField::neg(self, a)
    }
}

/// Counts every field operation routed through it.
pub struct OpCounter<'f> {
    field: &'f GaloisField,
    ops: std::cell::Cell<u64>,
}

impl<'f> OpCounter<'f> {
    pub fn new(field: &'f GaloisField) -> Self {
        OpCounter {
            field,
            ops: std::cell::Cell::new(0),
        }
    }

    pub fn ops(&self) -> u64 {
        self.ops.get()
    }

    fn tick(&self) {
        self.ops.set(self.ops.get() + 1);
    }
}

impl FieldArith for OpCounter<'_> {
    fn add(&self, a: Elem, b: Elem) -> Elem {
        self.tick();
        self.field.add(a, b)
    }
    fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.tick();
        self.field.sub(a, b)
    }
    fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.tick();
        self.field.mul(a, b)
    }
    fn neg(&self, a: Elem) -> Elem {
        self.tick();
        self.field.neg(a)
    }
}

/// An element bound to its field. Operator impls panic on mixed fields; the
/// `checked_*` methods report it as [`Error::MixedFields`].
#[derive(Clone, Copy)]
pub struct FieldElement<'f> {
    field: &'f GaloisField,
    elem: Elem,
}

impl<'f> FieldElement<'f> {
    pub fn field(&self) -> &'f GaloisField {
        self.field
    }

    pub fn elem(&self) -> Elem {
        self.elem
    }

    pub fn is_zero(&self) -> bool {
        self.elem.is_zero()
    }

    fn same_field(&self, other: &FieldElement<'_>) -> Result<()> {
        if self.field.id == other.field.id {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }

    fn wrap(&self, elem: Elem) -> FieldElement<'f> {
        FieldElement {
            field: self.field,
            elem,
        }
    }

    pub fn checked_add(&self, rhs: &FieldElement<'_>) -> Result<FieldElement<'f>> {
        self.same_field(rhs)?;
        Ok(self.wrap(self.field.add(self.elem, rhs.elem)))
    }

    pub fn checked_sub(&self, rhs: &FieldElement<'_>) -> Result<FieldElement<'f>> {
        self.same_field(rhs)?;
        Ok(self.wrap(self.field.sub(self.elem, rhs.elem)))
    }

    pub fn checked_mul(&self, rhs: &FieldElement<'_>) -> Result<FieldElement<'f>> {
        self.same_field(rhs)?;
        Ok(self.wrap(self.field.mul(self.elem, rhs.elem)))
    }

    pub fn checked_div(&self, rhs: &FieldElement<'_>) -> Result<FieldElement<'f>> {
        self.same_field(rhs)?;
        Ok(self.wrap(self.field.div(self.elem, rhs.elem)?))
    }

    pub fn inv(&self) -> Result<FieldElement<'f>> {
        Ok(self.wrap(self.field.inv(self.elem)?))
    }

    pub fn pow(&self, k: i64) -> Result<FieldElement<'f>> {
        Ok(self.wrap(self.field.pow_signed(self.elem, k)?))
    }

    pub fn log(&self) -> Result<u32> {
        self.field.log(self.elem)
    }

    pub fn is_primitive(&self) -> Result<bool> {
        self.field.is_primitive_element(self.elem)
    }
}

impl PartialEq for FieldElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.field.id == other.field.id && self.elem == other.elem
    }
}

impl Eq for FieldElement<'_> {}

impl fmt::Debug for FieldElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.field.format_elem(self.elem))
    }
}

impl fmt::Display for FieldElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.format_elem(self.elem))
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<'f> $trait for FieldElement<'f> {
            type Output = FieldElement<'f>;
            fn $method(self, rhs: Self) -> Self::Output {
                self.$checked(&rhs)
                    .expect("operands belong to different fields")
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl<'f> Neg for FieldElement<'f> {
    type Output = FieldElement<'f>;
    fn neg(self) -> Self::Output {
        self.wrap(self.field.neg(self.elem))
    }
}

pub(crate) fn value_to_coords(mut v: u32, p: u32, m: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(m as usize);
    for _ in 0..m {
        out.push(v % p);
        v /= p;
    }
    out
}

pub(crate) fn coords_to_value(coords: &[u32], p: u32) -> u32 {
    coords.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// GF(p)[x] / (modulus), on raw coordinate vectors. Used only while building
/// the tables.
struct ResidueRing {
    p: u32,
    m: u32,
    modulus: Option<Vec<u32>>,
}

impl ResidueRing {
    fn new(p: u32, m: u32, modulus: Option<Vec<u32>>) -> Result<Self> {
        let modulus = match modulus {
            Some(mut coeffs) => {
                trim(&mut coeffs);
                if coeffs.len() != m as usize + 1 || coeffs[m as usize] != 1 {
                    return Err(Error::BadModulus { expected: m });
                }
                if coeffs.iter().any(|&c| c >= p) {
                    return Err(Error::BadModulus { expected: m });
                }
                if m > 1 && !is_irreducible_over_prime(&coeffs, p) {
                    return Err(Error::ReducibleModulus(format_prime_poly(&coeffs)));
                }
                Some(coeffs)
            }
            None => None,
        };
        let modulus = if m == 1 {
            None
        } else {
            Some(modulus.unwrap_or_else(|| smallest_irreducible(p, m)))
        };
        Ok(ResidueRing { p, m, modulus })
    }

    fn one(&self) -> Vec<u32> {
        let mut v = vec![0; self.m as usize];
        v[0] = 1;
        v
    }

    fn mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let p = self.p as u64;
        let mut prod = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y != 0 {
                    prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
                }
            }
        }
        let m = self.m as usize;
        if let Some(modulus) = &self.modulus {
            for top in (m..prod.len()).rev() {
                let lead = prod[top];
                if lead == 0 {
                    continue;
                }
                for (k, &mc) in modulus.iter().enumerate().take(m) {
                    let idx = top - m + k;
                    prod[idx] = (prod[idx] + (p - lead) * mc as u64) % p;
                }
                prod[top] = 0;
            }
        }
        prod.truncate(m);
        prod.resize(m, 0);
        prod.into_iter().map(|c| c as u32).collect()
    }

    fn pow(&self, a: &[u32], mut k: u64) -> Vec<u32> {
        let mut base = a.to_vec();
        let mut acc = self.one();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            k >>= 1;
        }
        acc
    }

    fn is_primitive(&self, a: &[u32]) -> bool {
        if a.iter().all(|&c| c == 0) {
            return false;
        }
        let n = (self.p as u64).pow(self.m) - 1;
        if self.pow(a, n) != self.one() {
            return false;
        }
        factorize(n)
            .into_iter()
            .all(|(r, _)| self.pow(a, n / r) != self.one())
    }

    fn smallest_primitive(&self) -> Option<Vec<u32>> {
        let q = self.p.pow(self.m);
        (1..q)
            .map(|v| value_to_coords(v, self.p, self.m))
            .find(|c| self.is_primitive(c))
    }
}

fn trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Remainder of `a` modulo the monic `b` over GF(p).
fn prime_poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u64> = a.iter().map(|&c| c as u64).collect();
    let db = b.len() - 1;
    let p = p as u64;
    while r.len() > db {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        if lead != 0 {
            for (k, &bc) in b.iter().enumerate() {
                r[shift + k] = (r[shift + k] + (p - lead) * bc as u64) % p;
            }
        }
        r.pop();
    }
    let mut out: Vec<u32> = r.into_iter().map(|c| c as u32).collect();
    trim(&mut out);
    out
}

/// Trial division by every monic polynomial of degree at most `deg / 2`.
pub(crate) fn is_irreducible_over_prime(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for v in 0..count {
            let mut g = value_to_coords(v as u32, p, d as u32);
            g.push(1);
            if prime_poly_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn smallest_irreducible(p: u32, m: u32) -> Vec<u32> {
    let count = (p as u64).pow(m);
    (0..count)
        .map(|v| {
            let mut f = value_to_coords(v as u32, p, m);
            f.push(1);
            f
        })
        .find(|f| is_irreducible_over_prime(f, p))
        .expect("irreducible polynomials exist in every degree")
}

pub(crate) fn format_prime_poly(coeffs: &[u32]) -> String {
    let mut terms = Vec::new();
    for (d, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let coef = if c == 1 && d > 0 {
            String::new()
        } else {
            c.to_string()
        };
        terms.push(match d {
            0 => coef,
            1 => format!("{coef}x"),
            _ => format!("{coef}x^{d}"),
        });
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf8() -> GaloisField {
        build_field(2, 3, Some(&[1, 1, 0, 1]), None).unwrap()
    }

    #[test]
    fn gf8_alpha_is_root_of_modulus() {
        let f = gf8();
        let a = f.alpha();
        // alpha^3 + alpha + 1 = 0
        let lhs = f.add(f.add(f.pow(a, 3), a), f.one());
        assert!(lhs.is_zero());
        assert_eq!(f.coords(a), vec![0, 1, 0]);
    }

    #[test]
    fn gf9_with_modulus_x2_x_2() {
        let f = build_field(3, 2, Some(&[2, 1, 1]), None).unwrap();
        let a = f.alpha();
        // alpha^2 + alpha + 2 = 0
        let two = f.from_int(2);
        assert!(f.add(f.add(f.pow(a, 2), a), two).is_zero());
        assert_eq!(f.multiplicative_order(a).unwrap(), 8);
    }

    #[test]
    fn gf13_alpha_hint() {
        let f = build_field(13, 1, None, Some(6)).unwrap();
        assert_eq!(f.alpha(), Elem(6));
        assert_eq!(f.pow(Elem(6), 5), Elem(2));
        assert_eq!(f.log(Elem(5)).unwrap(), 9);
        assert!(f.is_primitive_element(Elem(2)).unwrap());
        assert!(!f.is_primitive_element(Elem(5)).unwrap());
        assert!(!f.is_primitive_element(Elem(1)).unwrap());
    }

    #[test]
    fn gf11_logs() {
        let f = build_field(11, 1, None, Some(2)).unwrap();
        assert_eq!(f.log(Elem(4)).unwrap(), 2);
        assert_eq!(f.log(Elem(5)).unwrap(), 4);
        assert_eq!(f.log(f.alpha()).unwrap(), 1);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(GaloisField::new(12, 1).unwrap_err(), Error::NotPrime(12));
        assert_eq!(GaloisField::new(3, 0).unwrap_err(), Error::ZeroDegree);
        // x^2 + 1 = (x + 1)^2 over GF(2)
        assert!(matches!(
            build_field(2, 2, Some(&[1, 0, 1]), None),
            Err(Error::ReducibleModulus(_))
        ));
        assert!(matches!(
            build_field(2, 3, Some(&[1, 1, 1]), None),
            Err(Error::BadModulus { .. })
        ));
        // 3 has order 3 in GF(13)
        assert!(matches!(
            build_field(13, 1, None, Some(3)),
            Err(Error::NotPrimitive(_))
        ));
        assert!(matches!(
            GaloisField::new(2, 13),
            Err(Error::FieldTooLarge { .. })
        ));
    }

    #[test]
    fn default_modulus_is_smallest_irreducible() {
        assert_eq!(
            GaloisField::new(2, 3).unwrap().modulus(),
            Some(&[1, 1, 0, 1][..])
        );
        assert_eq!(
            GaloisField::new(3, 2).unwrap().modulus(),
            Some(&[1, 0, 1][..])
        );
        assert_eq!(
            GaloisField::new(2, 4).unwrap().modulus(),
            Some(&[1, 1, 0, 0, 1][..])
        );
    }

    #[test]
    fn default_alpha_is_smallest_primitive() {
        assert_eq!(GaloisField::new(13, 1).unwrap().alpha(), Elem(2));
        assert_eq!(GaloisField::new(7, 1).unwrap().alpha(), Elem(3));
        assert_eq!(GaloisField::new(2, 1).unwrap().alpha(), Elem(1));
        // x^2 + 1 over GF(3): x has order 4, x + 1 is primitive.
        assert_eq!(GaloisField::new(3, 2).unwrap().alpha(), Elem(4));
    }

    #[test]
    fn inverse_sweep_gf8() {
        let f = gf8();
        for a in f.nonzero_elements() {
            assert_eq!(f.mul(f.inv(a).unwrap(), a), f.one());
        }
        assert_eq!(f.inv(Elem::ZERO), Err(Error::DivisionByZero));
        assert_eq!(f.div(f.one(), Elem::ZERO), Err(Error::DivisionByZero));
    }

    #[test]
    fn mul_identity_and_distributivity() {
        for q in [4u64, 9, 25, 27, 49] {
            let f = GaloisField::of_order(q).unwrap();
            for a in f.elements() {
                assert_eq!(f.mul(a, f.one()), a);
                assert_eq!(f.add(a, f.neg(a)), Elem::ZERO);
                for b in f.elements() {
                    for c in [Elem(1), f.alpha(), Elem(f.order() - 1)] {
                        let lhs = f.mul(a, f.add(b, c));
                        let rhs = f.add(f.mul(a, b), f.mul(a, c));
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn exp_table_is_a_homomorphism() {
        for q in [2u64, 3, 4, 8, 9, 16, 25, 27, 32] {
            let f = GaloisField::of_order(q).unwrap();
            let n = q as i64 - 1;
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(f.alpha_pow(i + j), f.mul(f.alpha_pow(i), f.alpha_pow(j)));
                }
            }
        }
    }

    #[test]
    fn fermat_and_primitive_criterion() {
        for q in [5u64, 8, 9, 16, 27, 49, 64] {
            let f = GaloisField::of_order(q).unwrap();
            for a in f.nonzero_elements() {
                assert_eq!(f.pow(a, q - 1), f.one());
                let by_order = (1..q - 1).all(|k| f.pow(a, k) != f.one());
                assert_eq!(f.is_primitive_element(a).unwrap(), by_order);
            }
        }
    }

    #[test]
    fn signed_pow() {
        let f = build_field(13, 1, None, Some(6)).unwrap();
        let six = Elem(6);
        assert_eq!(f.pow_signed(six, -1).unwrap(), f.inv(six).unwrap());
        assert_eq!(
            f.mul(f.pow_signed(six, -5).unwrap(), f.pow(six, 5)),
            f.one()
        );
        assert_eq!(f.pow_signed(Elem::ZERO, -1), Err(Error::DivisionByZero));
        assert_eq!(f.pow(Elem::ZERO, 0), f.one());
    }

    #[test]
    fn zero_has_no_log() {
        let f = gf8();
        assert_eq!(f.log(Elem::ZERO), Err(Error::ZeroLog));
        assert_eq!(f.is_primitive_element(Elem::ZERO), Err(Error::ZeroLog));
    }

    #[test]
    fn checked_elements_reject_mixed_fields() {
        let f = gf8();
        let g = gf8();
        let a = f.element(f.alpha());
        let b = g.element(g.alpha());
        assert_eq!(a.checked_add(&b).unwrap_err(), Error::MixedFields);
        let a2 = a * a;
        assert_eq!(a2.elem(), f.pow(f.alpha(), 2));
        assert_eq!((a - a).elem(), Elem::ZERO);
        assert_eq!((-a + a).elem(), Elem::ZERO);
        assert_eq!(a.pow(-1).unwrap(), a.inv().unwrap());
        let clone = f.clone();
        assert!(clone.element(f.alpha()) == a);
    }
}
