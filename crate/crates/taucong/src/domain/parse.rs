//! Element text syntax.
//!
//! Integers print as decimal. Polynomials print like `3x^2+x+4 @ F5`,
//! quadratic elements like `2+1*w @ Q(-7)`; the `@` tag names the domain.
//! Parsing accepts the tag whenever it is present and checks it against the
//! expected domain; printing always emits it for the non-integer families,
//! and print/parse round-trip exactly.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{DomainError, DomainId, Element, Repr};

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.repr() {
            Repr::Int(v) => write!(f, "{v}"),
            Repr::Poly(c) => {
                let DomainId::Poly { p } = self.domain() else {
                    unreachable!()
                };
                write!(f, "{} @ F{p}", poly_body(c))
            }
            Repr::Quad { a, b } => {
                let DomainId::Quadratic { d } = self.domain() else {
                    unreachable!()
                };
                write!(f, "{} @ Q({d})", quad_body(a, b))
            }
        }
    }
}

fn poly_body(coeffs: &[u64]) -> String {
    if coeffs.is_empty() {
        return "0".to_string();
    }
    let mut terms = Vec::new();
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let term = match i {
            0 => c.to_string(),
            1 if c == 1 => "x".to_string(),
            1 => format!("{c}x"),
            _ if c == 1 => format!("x^{i}"),
            _ => format!("{c}x^{i}"),
        };
        terms.push(term);
    }
    terms.join("+")
}

fn quad_body(a: &BigInt, b: &BigInt) -> String {
    if b.is_zero() {
        a.to_string()
    } else if b.is_negative() {
        format!("{a}-{}*w", -b)
    } else {
        format!("{a}+{b}*w")
    }
}

impl Element {
    /// Parse full element syntax; the `@` tag is required for polynomials
    /// and quadratic elements since nothing else names the domain.
    pub fn parse(text: &str) -> Result<Element, DomainError> {
        let (body, tag) = split_tag(text)?;
        match tag {
            None => parse_body(DomainId::Integers, body),
            Some(domain) => parse_body(domain, body),
        }
    }

    /// Parse in a known domain; an `@` tag is optional but must agree.
    pub fn parse_in(domain: DomainId, text: &str) -> Result<Element, DomainError> {
        let (body, tag) = split_tag(text)?;
        if let Some(tagged) = tag {
            if tagged != domain {
                return Err(DomainError::DomainMismatch {
                    left: domain,
                    right: tagged,
                });
            }
        }
        parse_body(domain, body)
    }
}

fn split_tag(text: &str) -> Result<(&str, Option<DomainId>), DomainError> {
    match text.split_once('@') {
        None => Ok((text, None)),
        Some((body, tag)) => {
            let tag = tag.trim();
            Ok((body, Some(parse_domain_tag(tag)?)))
        }
    }
}

fn parse_domain_tag(tag: &str) -> Result<DomainId, DomainError> {
    if let Some(p) = tag.strip_prefix('F') {
        let p: u32 = p
            .parse()
            .map_err(|_| DomainError::Parse(format!("bad field tag: {tag}")))?;
        return DomainId::poly(p);
    }
    if let Some(d) = tag.strip_prefix("Q(").and_then(|t| t.strip_suffix(')')) {
        let d: i32 = d
            .parse()
            .map_err(|_| DomainError::Parse(format!("bad quadratic tag: {tag}")))?;
        return DomainId::quadratic(d);
    }
    Err(DomainError::Parse(format!("unknown domain tag: {tag}")))
}

/// CLI domain spec: `int`, `f<p>` or `q<d>` (e.g. `f5`, `q-7`).
pub fn parse_domain_spec(spec: &str) -> Result<DomainId, DomainError> {
    let s = spec.trim().to_ascii_lowercase();
    if s == "int" || s == "z" {
        return Ok(DomainId::Integers);
    }
    if let Some(p) = s.strip_prefix('f') {
        let p: u32 = p
            .parse()
            .map_err(|_| DomainError::Parse(format!("bad domain spec: {spec}")))?;
        return DomainId::poly(p);
    }
    if let Some(d) = s.strip_prefix('q') {
        let d: i32 = d
            .parse()
            .map_err(|_| DomainError::Parse(format!("bad domain spec: {spec}")))?;
        return DomainId::quadratic(d);
    }
    Err(DomainError::Parse(format!(
        "unknown domain spec: {spec} (expected int, f<p> or q<d>)"
    )))
}

fn parse_body(domain: DomainId, body: &str) -> Result<Element, DomainError> {
    let compact: String = body.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(DomainError::Parse("empty element".into()));
    }
    match domain {
        DomainId::Integers => BigInt::from_str(&compact)
            .map(Element::integer)
            .map_err(|_| DomainError::Parse(format!("bad integer: {body}"))),
        DomainId::Poly { p } => parse_poly(p, &compact),
        DomainId::Quadratic { d } => parse_quad(d, &compact),
    }
}

/// Split `-3x^2+x-4` into signed terms `-3x^2`, `+x`, `-4`.
fn signed_terms(s: &str) -> Result<Vec<(i8, &str)>, DomainError> {
    let mut out = Vec::new();
    let bytes = s.as_bytes();
    let mut start = 0;
    let mut sign: i8 = 1;
    let mut i = 0;
    if bytes.first() == Some(&b'+') || bytes.first() == Some(&b'-') {
        sign = if bytes[0] == b'-' { -1 } else { 1 };
        start = 1;
        i = 1;
    }
    while i < bytes.len() {
        if bytes[i] == b'+' || bytes[i] == b'-' {
            if start == i {
                return Err(DomainError::Parse(format!("empty term in: {s}")));
            }
            out.push((sign, &s[start..i]));
            sign = if bytes[i] == b'-' { -1 } else { 1 };
            start = i + 1;
        }
        i += 1;
    }
    if start == i {
        return Err(DomainError::Parse(format!("trailing sign in: {s}")));
    }
    out.push((sign, &s[start..]));
    Ok(out)
}

fn parse_poly(p: u32, body: &str) -> Result<Element, DomainError> {
    let mut coeffs: Vec<i64> = Vec::new();
    for (sign, term) in signed_terms(body)? {
        let (coeff_part, degree) = match term.find('x') {
            None => (term, 0usize),
            Some(pos) => {
                let after = &term[pos + 1..];
                let degree = if after.is_empty() {
                    1
                } else {
                    after
                        .strip_prefix('^')
                        .and_then(|e| e.parse::<usize>().ok())
                        .ok_or_else(|| {
                            DomainError::Parse(format!("bad exponent in term: {term}"))
                        })?
                };
                (term[..pos].trim_end_matches('*'), degree)
            }
        };
        let coeff: i64 = if coeff_part.is_empty() {
            1
        } else {
            coeff_part
                .parse()
                .map_err(|_| DomainError::Parse(format!("bad coefficient in term: {term}")))?
        };
        if degree > 64 {
            return Err(DomainError::Parse(format!("exponent too large: {term}")));
        }
        if coeffs.len() <= degree {
            coeffs.resize(degree + 1, 0);
        }
        let p64 = p as i64;
        coeffs[degree] = (coeffs[degree] + i64::from(sign) * coeff).rem_euclid(p64);
    }
    Element::poly(p, &coeffs)
}

fn parse_quad(d: i32, body: &str) -> Result<Element, DomainError> {
    let mut a = BigInt::zero();
    let mut b = BigInt::zero();
    for (sign, term) in signed_terms(body)? {
        if let Some(coeff_part) = term.strip_suffix('w') {
            let coeff_part = coeff_part.trim_end_matches('*');
            let coeff = if coeff_part.is_empty() {
                BigInt::from(1)
            } else {
                BigInt::from_str(coeff_part)
                    .map_err(|_| DomainError::Parse(format!("bad term: {term}")))?
            };
            b += BigInt::from(sign) * coeff;
        } else {
            let v = BigInt::from_str(term)
                .map_err(|_| DomainError::Parse(format!("bad term: {term}")))?;
            a += BigInt::from(sign) * v;
        }
    }
    Element::quad(d, a, b)
}
