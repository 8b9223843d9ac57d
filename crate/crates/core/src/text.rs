//! Textual forms of elements and polynomials.
//!
//! Prime-field elements print as integers `0..p-1`. Extension-field elements
//! print as `0`, `1`, `a` or `a^k`, where `a` stands for the field's `alpha`
//! and `k` is the discrete logarithm. On input the coordinate form
//! `[c0,c1,...,c_{m-1}]` is also accepted.
//!
//! Polynomials print degree-descending, e.g. `x^2 + 3x + 5` over a prime
//! field and `x^2 + a^4*x + a` over an extension field. The parser accepts
//! both spellings, `-` between terms, and the bare coefficient list
//! `[c2,c1,c0]` (leading coefficient first).

use crate::error::{Error, Result};
use crate::field::{Elem, FieldBuilder, GaloisField};
use crate::poly::Poly;

impl GaloisField {
    pub fn format_elem(&self, e: Elem) -> String {
        if self.is_prime_field() || e.is_zero() {
            return e.value().to_string();
        }
        match self.log(e).expect("nonzero") {
            0 => "1".to_string(),
            1 => "a".to_string(),
            k => format!("a^{k}"),
        }
    }

    pub fn parse_elem(&self, text: &str) -> Result<Elem> {
        let s = text.trim();
        if let Some(rest) = s.strip_prefix('-') {
            return Ok(self.neg(self.parse_elem(rest)?));
        }
        let s = s.strip_prefix('+').unwrap_or(s).trim();
        if s.is_empty() {
            return Err(Error::Parse(format!("empty element in {text:?}")));
        }
        if let Some(inner) = s.strip_prefix('[') {
            let inner = inner
                .strip_suffix(']')
                .ok_or_else(|| Error::Parse(format!("unclosed bracket in {text:?}")))?;
            let coords = inner
                .split(',')
                .map(|c| c.trim().parse::<u32>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| Error::Parse(format!("bad coordinate in {text:?}: {e}")))?;
            return self.from_coords(&coords);
        }
        if s.chars().all(|c| c.is_ascii_digit()) {
            let v: u64 = s
                .parse()
                .map_err(|e| Error::Parse(format!("bad integer {s:?}: {e}")))?;
            if self.is_prime_field() {
                return Ok(self.from_int((v % self.characteristic() as u64) as i64));
            }
            if v < self.characteristic() as u64 {
                return Ok(self.from_int(v as i64));
            }
            return Err(Error::Parse(format!(
                "{s:?} is not in the prime subfield; use a^k or [c0,...] notation"
            )));
        }
        if let Some(rest) = s.strip_prefix('a') {
            let rest = rest.trim();
            if rest.is_empty() {
                return Ok(self.alpha());
            }
            if let Some(exp) = rest.strip_prefix('^') {
                let exp = exp.trim();
                let exp = exp
                    .strip_prefix('(')
                    .and_then(|e| e.strip_suffix(')'))
                    .unwrap_or(exp);
                let k: i64 = exp
                    .trim()
                    .parse()
                    .map_err(|e| Error::Parse(format!("bad exponent in {text:?}: {e}")))?;
                return Ok(self.alpha_pow(k));
            }
        }
        Err(Error::Parse(format!(
            "cannot read {text:?} as a field element"
        )))
    }

    pub fn format_poly(&self, f: &Poly) -> String {
        let mut terms = Vec::new();
        for (d, &c) in f.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match d {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{d}"),
            };
            let coef = self.format_elem(c);
            terms.push(if d == 0 {
                coef
            } else if c == Elem::ONE {
                mono
            } else if self.is_prime_field() {
                format!("{coef}{mono}")
            } else {
                format!("{coef}*{mono}")
            });
        }
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }

    /// Coefficient list, leading coefficient first, as printed quotient
    /// terms are.
    pub fn format_terms(&self, terms: &[Elem]) -> String {
        let inner: Vec<String> = terms.iter().map(|&t| self.format_elem(t)).collect();
        format!("({})", inner.join(", "))
    }

    pub fn parse_poly(&self, text: &str) -> Result<Poly> {
        let terms = parse_terms(text)?;
        let mut coeffs: Vec<Elem> = Vec::new();
        for t in terms {
            let mut c = if t.coef.is_empty() {
                Elem::ONE
            } else {
                self.parse_elem(&t.coef)?
            };
            if t.negative {
                c = self.neg(c);
            }
            if coeffs.len() <= t.degree {
                coeffs.resize(t.degree + 1, Elem::ZERO);
            }
            coeffs[t.degree] = self.add(coeffs[t.degree], c);
        }
        Poly::new(self, coeffs)
    }
}

/// Parses a polynomial over GF(p) with integer coefficients, as used for
/// moduli and coordinate-style `alpha` hints. Constant term first.
pub fn parse_prime_poly(p: u32, text: &str) -> Result<Vec<u32>> {
    let mut coeffs: Vec<u32> = Vec::new();
    for t in parse_terms(text)? {
        let v: i64 = if t.coef.is_empty() {
            1
        } else {
            t.coef
                .trim()
                .parse()
                .map_err(|e| Error::Parse(format!("bad coefficient {:?}: {e}", t.coef)))?
        };
        let v = if t.negative { -v } else { v };
        if coeffs.len() <= t.degree {
            coeffs.resize(t.degree + 1, 0);
        }
        let cur = coeffs[t.degree] as i64 + v;
        coeffs[t.degree] = cur.rem_euclid(p as i64) as u32;
    }
    while coeffs.last() == Some(&0) {
        coeffs.pop();
    }
    Ok(coeffs)
}

/// Builds GF(p^m) from textual options: a modulus such as `"x^3+x+1"`, and
/// an `alpha` given as a canonical integer value, `"[c0,c1,...]"`
/// coordinates, or a polynomial in `x` over GF(p).
pub fn field_from_text(
    p: u64,
    m: u32,
    modulus: Option<&str>,
    alpha: Option<&str>,
) -> Result<GaloisField> {
    let pp = u32::try_from(p).map_err(|_| Error::NotPrime(p))?;
    let mut builder = FieldBuilder::new(p, m);
    if let Some(text) = modulus {
        let coeffs = parse_prime_poly(pp, text)?;
        if coeffs.len() != m as usize + 1 || coeffs.last() != Some(&1) {
            return Err(Error::BadModulus { expected: m });
        }
        builder = builder.modulus(coeffs);
    }
    if let Some(text) = alpha {
        let t = text.trim();
        builder = if !t.is_empty() && t.chars().all(|c| c.is_ascii_digit()) {
            builder.alpha_value(
                t.parse()
                    .map_err(|e| Error::Parse(format!("bad alpha {t:?}: {e}")))?,
            )
        } else if let Some(inner) = t.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
            let coords = inner
                .split(',')
                .map(|c| c.trim().parse::<u32>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| Error::Parse(format!("bad alpha {t:?}: {e}")))?;
            builder.alpha_coords(coords)
        } else {
            builder.alpha_coords(parse_prime_poly(pp, t)?)
        };
    }
    builder.build()
}

#[derive(Debug, PartialEq, Eq)]
struct Term {
    negative: bool,
    coef: String,
    degree: usize,
}

fn parse_terms(text: &str) -> Result<Vec<Term>> {
    let s = text.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    if s.starts_with('[') && s.ends_with(']') && looks_like_list(s) {
        let items = split_list(&s[1..s.len() - 1])?;
        let n = items.len();
        return Ok(items
            .into_iter()
            .enumerate()
            .map(|(i, coef)| {
                let (negative, coef) = match coef.strip_prefix('-') {
                    Some(rest) => (true, rest.trim().to_string()),
                    None => (false, coef),
                };
                Term {
                    negative,
                    coef,
                    degree: n - 1 - i,
                }
            })
            .collect());
    }

    let mut pieces: Vec<(bool, String)> = Vec::new();
    let mut depth = 0i32;
    let mut negative = false;
    let mut cur = String::new();
    let mut prev_caret = false;
    for ch in s.chars() {
        match ch {
            '[' | '(' => depth += 1,
            ']' | ')' => depth -= 1,
            _ => {}
        }
        if depth == 0 && (ch == '+' || ch == '-') && !prev_caret {
            if !cur.trim().is_empty() {
                pieces.push((negative, std::mem::take(&mut cur)));
                negative = false;
            }
            cur.clear();
            if ch == '-' {
                negative = !negative;
            }
            continue;
        }
        if !ch.is_whitespace() {
            prev_caret = ch == '^';
        }
        cur.push(ch);
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced brackets in {text:?}")));
    }
    if cur.trim().is_empty() {
        return Err(Error::Parse(format!("dangling operator in {text:?}")));
    }
    pieces.push((negative, cur));

    pieces
        .into_iter()
        .map(|(negative, piece)| parse_term(negative, piece.trim(), text))
        .collect()
}

fn parse_term(negative: bool, piece: &str, text: &str) -> Result<Term> {
    let compact: String = piece.chars().filter(|c| !c.is_whitespace()).collect();
    let mut depth = 0;
    let mut x_at = None;
    for (i, ch) in compact.char_indices() {
        match ch {
            '[' | '(' => depth += 1,
            ']' | ')' => depth -= 1,
            'x' if depth == 0 => x_at = Some(i),
            _ => {}
        }
    }
    let Some(x_at) = x_at else {
        return Ok(Term {
            negative,
            coef: compact,
            degree: 0,
        });
    };
    let coef = compact[..x_at].trim_end_matches('*').to_string();
    let mono = &compact[x_at + 1..];
    let degree = if mono.is_empty() {
        1
    } else {
        mono.strip_prefix('^')
            .filter(|d| !d.is_empty() && d.chars().all(|c| c.is_ascii_digit()))
            .and_then(|d| d.parse::<usize>().ok())
            .ok_or_else(|| Error::Parse(format!("bad monomial {piece:?} in {text:?}")))?
    };
    Ok(Term {
        negative,
        coef,
        degree,
    })
}

/// A leading `[` could also open a coordinate-form constant such as
/// `[0,1] + x`; only treat the text as a list when the outer brackets match.
fn looks_like_list(s: &str) -> bool {
    let mut depth = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => {
                depth -= 1;
                if depth == 0 {
                    return i == s.len() - 1;
                }
            }
            _ => {}
        }
    }
    false
}

fn split_list(inner: &str) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let mut depth = 0;
    let mut cur = String::new();
    for ch in inner.chars() {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut cur).trim().to_string());
                continue;
            }
            _ => {}
        }
        cur.push(ch);
    }
    out.push(cur.trim().to_string());
    if out.iter().any(|s| s.is_empty()) {
        return Err(Error::Parse(format!("empty entry in [{inner}]")));
    }
    Ok(out)
}
