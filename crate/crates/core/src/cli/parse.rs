//! Literal syntax for roots, elements, generator subsets and descriptors.
//!
//! Roots are sums of terms `coef*name`, where `coef` is a product of integers,
//! fractions `p/q`, `r2`, `r3` and `c<L>` (that is `2cos(pi/L)`):
//! `a + 2*b`, `a - 1/2*r2*b`, `r3*a`. Elements are words of generator names
//! separated by spaces, `e` for the identity; several are separated by `;`.

use crate::coxeter::{CoxeterSystem, GroupElement, RootVector};
use crate::error::{Error, ParseError, Result};
use crate::numberfield::FieldElem;

fn perr(column: usize, message: impl Into<String>) -> Error {
    Error::Parse(ParseError {
        line: 1,
        column,
        message: message.into(),
    })
}

fn factor(sys: &CoxeterSystem, text: &str, column: usize) -> Result<FieldElem> {
    let ctx = sys.field();
    let surd = |m: u32| {
        ctx.two_cos_pi_over(m)
            .map_err(|e| perr(column, format!("`{text}` is not in the field of this system: {e}")))
    };
    match text {
        "r2" => return surd(4),
        "r3" => return surd(6),
        _ => {}
    }
    if let Some(l) = text.strip_prefix('c') {
        if let Ok(l) = l.parse::<u32>() {
            return surd(l);
        }
    }
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let n: i64 = num.parse().map_err(|_| perr(column, format!("bad coefficient `{text}`")))?;
    let d: i64 = den.parse().map_err(|_| perr(column, format!("bad coefficient `{text}`")))?;
    if d == 0 {
        return Err(perr(column, "zero denominator"));
    }
    Ok(ctx.from_ratio(n, d))
}

/// One root literal.
pub fn parse_root(sys: &CoxeterSystem, text: &str) -> Result<RootVector> {
    parse_root_at(sys, text, 1)
}

fn parse_root_at(sys: &CoxeterSystem, text: &str, base: usize) -> Result<RootVector> {
    let mut coeffs = RootVector::zero(sys).coeffs().to_vec();
    // split into signed terms
    let mut terms: Vec<(bool, String, usize)> = Vec::new();
    let mut negative = false;
    let mut cur = String::new();
    let mut start = base;
    for (k, ch) in text.chars().enumerate() {
        let col = base + k;
        match ch {
            '+' | '-' => {
                if cur.trim().is_empty() {
                    negative ^= ch == '-';
                } else {
                    terms.push((negative, std::mem::take(&mut cur), start));
                    negative = ch == '-';
                }
            }
            c if c.is_whitespace() => {}
            c => {
                if cur.is_empty() {
                    start = col;
                }
                cur.push(c);
            }
        }
    }
    if !cur.trim().is_empty() {
        terms.push((negative, cur, start));
    }
    if terms.is_empty() {
        return Err(perr(base, "empty root"));
    }
    for (negative, term, col) in terms {
        let parts: Vec<&str> = term.split('*').map(str::trim).collect();
        let (name, factors) = parts.split_last().expect("nonempty");
        let idx = sys.generator(name).map_err(|_| perr(col, format!("unknown generator `{name}`")))?;
        let mut c = sys.field().one();
        for f in factors {
            c = &c * &factor(sys, f, col)?;
        }
        if negative {
            c = -&c;
        }
        coeffs[idx] = &coeffs[idx] + &c;
    }
    Ok(RootVector::from_coeffs(coeffs))
}

/// Roots separated by `;`.
pub fn parse_roots(sys: &CoxeterSystem, text: &str) -> Result<Vec<RootVector>> {
    let mut out = Vec::new();
    let mut offset = 1;
    for piece in text.split(';') {
        if !piece.trim().is_empty() {
            out.push(parse_root_at(sys, piece, offset)?);
        }
        offset += piece.chars().count() + 1;
    }
    if out.is_empty() {
        return Err(perr(1, "no roots given"));
    }
    Ok(out)
}

/// A word of generator names; `e` or an empty word is the identity.
pub fn parse_element(sys: &CoxeterSystem, text: &str) -> Result<GroupElement> {
    let names: Vec<&str> = text.split_whitespace().filter(|w| *w != "e").collect();
    GroupElement::from_names(sys, &names)
}

/// Elements separated by `;`.
pub fn parse_elements(sys: &CoxeterSystem, text: &str) -> Result<Vec<GroupElement>> {
    text.split(';')
        .filter(|p| !p.trim().is_empty())
        .map(|p| parse_element(sys, p))
        .collect()
}

/// Generator names separated by spaces or commas, sorted by position.
pub fn parse_subset(sys: &CoxeterSystem, text: &str) -> Result<Vec<usize>> {
    let mut out = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|w| !w.is_empty())
        .map(|w| sys.generator(w))
        .collect::<Result<Vec<_>>>()?;
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// `word : generators`, e.g. `b : a` for `b W_{a} b`.
pub fn parse_descriptor(sys: &CoxeterSystem, text: &str) -> Result<(GroupElement, Vec<usize>)> {
    let (w, i) = text
        .split_once(':')
        .ok_or_else(|| perr(1, format!("expected `word : generators`, got `{text}`")))?;
    Ok((parse_element(sys, w)?, parse_subset(sys, i)?))
}
