//! Textual polynomial format.
//!
//! Terms in descending order of the ring's monomial order, joined by
//! ` + ` / ` - `; a coefficient other than ±1 precedes the monomial as
//! `c*`; variables appear in registration order as `name` or `name^e`,
//! separated by `*`. The zero polynomial prints as `0`. Printing is the
//! canonical form, so `print(parse(print(p))) == print(p)`.

use std::fmt;

use super::monomial::Monomial;
use super::polynomial::Polynomial;
use super::ring::Ring;
use crate::error::{Error, Result};
use crate::field::Field;

fn write_monomial<F: Field>(out: &mut String, ring: &Ring<F>, m: &Monomial) {
    let mut first = true;
    for (v, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(ring.name(v));
        if e > 1 {
            out.push('^');
            out.push_str(&e.to_string());
        }
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let field = self.field();
        let mut out = String::new();
        for (k, (m, c)) in self.terms().iter().enumerate() {
            let rendered = field.render(c);
            let (negative, magnitude) = match rendered.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, rendered.as_str()),
            };
            match (k, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if m.is_one() {
                out.push_str(magnitude);
            } else {
                if magnitude != "1" {
                    out.push_str(magnitude);
                    out.push('*');
                }
                write_monomial(&mut out, self.ring(), m);
            }
        }
        f.write_str(&out)
    }
}

impl<F: Field> Polynomial<F> {
    /// Parses the textual format. Accepts any term order, repeated
    /// variables, `−` (U+2212) as minus, and whitespace anywhere.
    pub fn parse(ring: &Ring<F>, text: &str) -> Result<Self> {
        let text: String = text.replace('\u{2212}', "-").chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let field = ring.field();
        let mut terms = Vec::new();
        let mut rest = text.as_str();
        let mut first = true;
        while !rest.is_empty() {
            let negative = match rest.as_bytes()[0] {
                b'+' => {
                    rest = &rest[1..];
                    false
                }
                b'-' => {
                    rest = &rest[1..];
                    true
                }
                _ if first => false,
                _ => return Err(Error::Parse(format!("expected + or - before {rest:?}"))),
            };
            first = false;
            let end = rest.find(['+', '-']).unwrap_or(rest.len());
            let (term, tail) = rest.split_at(end);
            rest = tail;
            let (m, c) = parse_term(ring, term)?;
            terms.push((m, if negative { field.neg(&c) } else { c }));
        }
        Ok(Polynomial::from_terms(ring, terms))
    }
}

fn parse_term<F: Field>(ring: &Ring<F>, term: &str) -> Result<(Monomial, F::Elem)> {
    if term.is_empty() {
        return Err(Error::Parse("empty term".into()));
    }
    let field = ring.field();
    let mut coeff = field.one();
    let mut exps = vec![0u16; ring.nvars()];
    for factor in term.split('*') {
        if factor.is_empty() {
            return Err(Error::Parse(format!("empty factor in {term:?}")));
        }
        if factor.starts_with(|c: char| c.is_ascii_digit()) {
            coeff = field.mul(&coeff, &field.parse(factor)?);
            continue;
        }
        let (name, e) = match factor.split_once('^') {
            Some((n, e)) => (n, e.parse::<u16>().map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?),
            None => (factor, 1),
        };
        let v = ring.index_of(name).ok_or_else(|| Error::Parse(format!("unknown variable {name:?}")))?;
        exps[v] = exps[v]
            .checked_add(e)
            .ok_or_else(|| Error::Parse(format!("exponent overflow in {term:?}")))?;
    }
    Ok((Monomial::from_exponents(exps), coeff))
}
