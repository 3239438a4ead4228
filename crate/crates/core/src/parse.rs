//! Element mini-language: rational combinations of named basis vectors.
//!
//! Terms are `h[i]`, `e[<root>]`, `f[<root>]` (roots as printed by
//! [`root_label`](crate::rootsystem::root_label), e.g. `e[a1+a2]`) or, in
//! classical types, defining-representation matrix units `v23` / `v[10,3]`.
//! Coefficients are rationals: `2/3 e[a1] - v45`, `0`. In rank one `e`, `f`
//! and `h` abbreviate `e[a1]`, `f[a1]` and `h[1]`.

use thiserror::Error;

use crate::exactla::{QMatrix, Q};
use crate::rootsystem::{matrix_unit, Element, LieAlgebra};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty expression")]
    Empty,
    #[error("unknown basis name {0:?}")]
    UnknownName(String),
    #[error("bad coefficient {0:?}")]
    BadCoefficient(String),
    #[error("matrix units need a classical type")]
    NoRepresentation,
    #[error("matrix unit index out of range in {0:?}")]
    IndexOutOfRange(String),
    #[error("combination of matrix units is not in the algebra")]
    NotInAlgebra,
    #[error("bad label list {0:?}")]
    BadLabels(String),
}

/// Splits on top-level `+`/`-`, keeping signs and ignoring those inside `[...]`.
fn terms(s: &str) -> Vec<(bool, String)> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    let mut negative = false;
    for ch in s.chars() {
        match ch {
            '[' => {
                depth += 1;
                cur.push(ch);
            }
            ']' => {
                depth = depth.saturating_sub(1);
                cur.push(ch);
            }
            '+' | '-' if depth == 0 => {
                let t = cur.trim().to_string();
                if !t.is_empty() {
                    out.push((negative, t));
                    negative = false;
                }
                cur.clear();
                if ch == '-' {
                    negative = !negative;
                }
            }
            _ => cur.push(ch),
        }
    }
    let t = cur.trim().to_string();
    if !t.is_empty() {
        out.push((negative, t));
    }
    out
}

fn matrix_unit_indices(name: &str) -> Option<(usize, usize)> {
    let rest = name.strip_prefix('v')?;
    if let Some(inner) = rest.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
        let (i, j) = inner.split_once(',')?;
        return Some((i.trim().parse().ok()?, j.trim().parse().ok()?));
    }
    let digits: Vec<u32> = rest.chars().map(|c| c.to_digit(10)).collect::<Option<_>>()?;
    match digits.as_slice() {
        [i, j] => Some((*i as usize, *j as usize)),
        _ => None,
    }
}

/// Parses an element of `alg`.
pub fn parse_element(alg: &LieAlgebra, text: &str) -> Result<Element, ParseError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(ParseError::Empty);
    }
    let names: Vec<String> = (0..alg.dim()).map(|i| alg.basis_label(i)).collect();
    let mut coords = vec![Q::from_integer(0.into()); alg.dim()];
    let mut matrix: Option<QMatrix> = None;
    for (negative, term) in terms(text) {
        let term = term.replace('*', " ");
        let (coeff, name) = match term.find(|c: char| c.is_ascii_alphabetic()) {
            Some(k) => (term[..k].trim().to_string(), term[k..].trim().replace(' ', "")),
            None => (term.trim().to_string(), String::new()),
        };
        let mut c: Q = if coeff.is_empty() {
            Q::from_integer(1.into())
        } else {
            coeff.parse().map_err(|_| ParseError::BadCoefficient(coeff.clone()))?
        };
        if negative {
            c = -c;
        }
        if name.is_empty() {
            if c == Q::from_integer(0.into()) {
                continue;
            }
            return Err(ParseError::UnknownName(term.trim().to_string()));
        }
        let alias = match (alg.rank(), name.as_str()) {
            (1, "e") => Some("e[a1]"),
            (1, "f") => Some("f[a1]"),
            (1, "h") => Some("h[1]"),
            _ => None,
        };
        let name = alias.map_or(name, str::to_string);
        if let Some(i) = names.iter().position(|n| *n == name) {
            coords[i] += c;
        } else if let Some((i, j)) = matrix_unit_indices(&name) {
            let rep = alg.representation().ok_or(ParseError::NoRepresentation)?;
            let n = rep.degree();
            if i == 0 || j == 0 || i > n || j > n {
                return Err(ParseError::IndexOutOfRange(name));
            }
            let unit = matrix_unit(n, i, j).scale(&c);
            matrix = Some(match matrix {
                None => unit,
                Some(m) => m.add(&unit).expect("same shape"),
            });
        } else {
            return Err(ParseError::UnknownName(name));
        }
    }
    if let Some(m) = matrix {
        let rep = alg.representation().ok_or(ParseError::NoRepresentation)?;
        let extra = rep.coordinates(&m).ok_or(ParseError::NotInAlgebra)?;
        for (a, b) in coords.iter_mut().zip(extra) {
            *a += b;
        }
    }
    Ok(Element::new(coords))
}

/// Comma- or space-separated rationals, e.g. `1,1,1,1,1,-7`.
pub fn parse_labels(text: &str) -> Result<Vec<Q>, ParseError> {
    let parts: Vec<&str> = text
        .trim()
        .trim_start_matches('(')
        .trim_end_matches(')')
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .collect();
    if parts.is_empty() {
        return Err(ParseError::BadLabels(text.to_string()));
    }
    parts
        .iter()
        .map(|p| p.parse::<Q>().map_err(|_| ParseError::BadLabels(text.to_string())))
        .collect()
}

/// Inverse of [`parse_element`] over the named basis.
pub fn format_element(alg: &LieAlgebra, x: &Element) -> String {
    let mut out = String::new();
    for (i, c) in x.support() {
        let name = alg.basis_label(i);
        let (neg, abs) = if *c < Q::from_integer(0.into()) {
            (true, -c.clone())
        } else {
            (false, c.clone())
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if abs != Q::from_integer(1.into()) {
            out.push_str(&format!("{abs} "));
        }
        out.push_str(&name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::exactla::qf;
    use crate::rootsystem::build_algebra;

    #[test]
    fn named_terms() {
        let alg = build_algebra(&"A2".parse().unwrap()).unwrap();
        let x = parse_element(&alg, "e[a1] - 2/3 e[a1+a2] + h[2]").unwrap();
        assert_eq!(x.coords()[1], qf(1, 1));
        assert_eq!(format_element(&alg, &x), "h[2] + e[a1] - 2/3 e[a1+a2]");
        assert_eq!(parse_element(&alg, &format_element(&alg, &x)).unwrap(), x);
        assert!(parse_element(&alg, "0").unwrap().is_zero());
        assert!(matches!(parse_element(&alg, "e[a3]"), Err(ParseError::UnknownName(_))));
        assert!(parse_element(&alg, "e").is_err());
        let sl2 = build_algebra(&"A1".parse().unwrap()).unwrap();
        assert_eq!(
            parse_element(&sl2, "2e - h").unwrap(),
            parse_element(&sl2, "2 e[a1] - h[1]").unwrap()
        );
    }

    #[test]
    fn matrix_units_reproduce_sp6() {
        let sp6 = catalog::sp6_example().unwrap();
        let e1 = parse_element(&sp6.algebra, "v23 - v45").unwrap();
        let e2 = parse_element(&sp6.algebra, "v[1,3] - v46").unwrap();
        assert_eq!(e1, sp6.pair.e1);
        assert_eq!(e2, sp6.pair.e2);
        assert_eq!(parse_element(&sp6.algebra, "v23"), Err(ParseError::NotInAlgebra));
    }

    #[test]
    fn labels() {
        assert_eq!(parse_labels("(1, 1,-7)").unwrap().len(), 3);
        assert!(parse_labels("1,x").is_err());
    }
}
