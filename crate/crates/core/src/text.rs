//! Plain-text formats.
//!
//! Scalars: `-inf`, `+inf`, integers (`3`), decimals (`-2.5`) and fractions
//! (`7/3`); decimals are read exactly. Finite values print in lowest terms,
//! integers without a denominator.
//!
//! Vector files hold one whitespace-separated vector per line and may start
//! with `# labels: x1 x2 ...`. Function files are vector files whose labels
//! header is mandatory. A functional file is a single representer line under
//! `# functional-representer dim=N`. Other `#` lines are comments.
//!
//! Posets: `elements: a b c`, then one `a < b` relation per line.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::order::FiniteIS;
use crate::semialgebra::Element;
use crate::{AlgebraElement, ExtendedScalar, FinVector, FunctionalRep, Rational};

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn parse_int(digits: &str) -> Option<BigInt> {
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigInt::from_str(digits).ok()
}

/// Parses one scalar token exactly.
pub fn parse_scalar(token: &str) -> std::result::Result<ExtendedScalar, String> {
    match token {
        "-inf" => return Ok(ExtendedScalar::Bottom),
        "+inf" => return Ok(ExtendedScalar::Top),
        _ => {}
    }
    let bad = || format!("malformed scalar `{token}`");
    let (negative, body) = match token.as_bytes().first() {
        Some(b'-') => (true, &token[1..]),
        Some(b'+') => (false, &token[1..]),
        _ => (false, token),
    };
    let value = if let Some((num, den)) = body.split_once('/') {
        let num = parse_int(num).ok_or_else(bad)?;
        let den = parse_int(den).ok_or_else(bad)?;
        if den.is_zero() {
            return Err(format!("zero denominator in `{token}`"));
        }
        Rational::new(num, den)
    } else if let Some((whole, frac)) = body.split_once('.') {
        if whole.is_empty() && frac.is_empty() {
            return Err(bad());
        }
        let whole = if whole.is_empty() {
            BigInt::zero()
        } else {
            parse_int(whole).ok_or_else(bad)?
        };
        let (frac_num, scale) = if frac.is_empty() {
            (BigInt::zero(), BigInt::one())
        } else {
            let n = parse_int(frac).ok_or_else(bad)?;
            (n, num_traits::pow(BigInt::from(10), frac.len()))
        };
        Rational::new(whole * &scale + frac_num, scale)
    } else {
        Rational::from_integer(parse_int(body).ok_or_else(bad)?)
    };
    Ok(ExtendedScalar::Finite(if negative {
        -value
    } else {
        value
    }))
}

/// Whitespace-separated scalars, reporting the 1-based column of a bad token.
pub fn parse_scalar_list(text: &str, line: usize) -> Result<Vec<ExtendedScalar>> {
    tokens(text)
        .map(|(col, tok)| parse_scalar(tok).map_err(|m| parse_err(line, col, m)))
        .collect()
}

/// Tokens with their 1-based character columns.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    for (i, c) in line.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out.into_iter()
        .map(move |(byte, tok)| (line[..byte].chars().count() + 1, tok))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorFile {
    pub labels: Option<Vec<String>>,
    /// From a `# functional-representer dim=N` header.
    pub declared_dim: Option<usize>,
    pub vectors: Vec<FinVector>,
}

/// Parses a vector file. All vectors must share one dimension, matching the
/// labels header when present.
pub fn parse_vectors(src: &str) -> Result<VectorFile> {
    let mut labels: Option<Vec<String>> = None;
    let mut declared_dim = None;
    let mut vectors: Vec<FinVector> = Vec::new();
    let mut dim: Option<usize> = None;
    for (idx, raw) in src.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(comment) = trimmed.strip_prefix('#') {
            let comment = comment.trim_start();
            if let Some(rest) = comment.strip_prefix("labels:") {
                if !vectors.is_empty() || labels.is_some() {
                    return Err(parse_err(line, 1, "labels header must come first"));
                }
                let l: Vec<String> = rest.split_whitespace().map(String::from).collect();
                dim = Some(l.len());
                labels = Some(l);
            } else if let Some(rest) = comment.strip_prefix("functional-representer") {
                let value = rest
                    .trim()
                    .strip_prefix("dim=")
                    .and_then(|d| d.parse().ok());
                match value {
                    Some(d) => declared_dim = Some(d),
                    None => return Err(parse_err(line, 1, "expected `dim=N` in header")),
                }
            }
            continue;
        }
        let coords = parse_scalar_list(raw, line)?;
        match dim {
            Some(d) if d != coords.len() => {
                return Err(parse_err(
                    line,
                    1,
                    format!("expected {d} coordinates, found {}", coords.len()),
                ))
            }
            _ => dim = Some(coords.len()),
        }
        let mut v = FinVector::new(coords);
        v.set_labels(labels.clone())?;
        vectors.push(v);
    }
    Ok(VectorFile {
        labels,
        declared_dim,
        vectors,
    })
}

fn write_line(out: &mut String, v: &FinVector) {
    let parts: Vec<String> = v.coords().iter().map(ToString::to_string).collect();
    out.push_str(&parts.join(" "));
    out.push('\n');
}

pub fn write_vectors(labels: Option<&[String]>, vectors: &[FinVector]) -> String {
    let mut out = String::new();
    if let Some(l) = labels {
        let _ = writeln!(out, "# labels: {}", l.join(" "));
    }
    for v in vectors {
        write_line(&mut out, v);
    }
    out
}

/// A function file: vectors with a mandatory labels header.
pub fn parse_functions(src: &str) -> Result<Vec<AlgebraElement>> {
    let file = parse_vectors(src)?;
    if file.labels.is_none() {
        return Err(parse_err(1, 1, "function file needs a `# labels:` header"));
    }
    file.vectors.into_iter().map(Element::from_vector).collect()
}

pub fn write_functions(functions: &[AlgebraElement]) -> String {
    let labels = functions.first().map(|f| f.labels());
    let vectors: Vec<FinVector> = functions.iter().map(|f| f.as_vector().clone()).collect();
    write_vectors(labels, &vectors)
}

pub fn parse_functional(src: &str) -> Result<FunctionalRep> {
    let file = parse_vectors(src)?;
    let Some(dim) = file.declared_dim else {
        return Err(parse_err(
            1,
            1,
            "missing `# functional-representer dim=N` header",
        ));
    };
    let mut vectors = file.vectors;
    if vectors.len() != 1 {
        return Err(parse_err(
            1,
            1,
            format!("expected one representer line, found {}", vectors.len()),
        ));
    }
    let x = vectors.pop().expect("one vector");
    if x.dim() != dim {
        return Err(parse_err(
            1,
            1,
            format!("header says dim={dim}, representer has {}", x.dim()),
        ));
    }
    Ok(FunctionalRep::new(x))
}

pub fn write_functional(f: &FunctionalRep) -> String {
    let mut out = format!("# functional-representer dim={}\n", f.dim());
    write_line(&mut out, f.representer());
    out
}

pub fn parse_poset(src: &str) -> Result<FiniteIS> {
    let mut labels: Option<Vec<String>> = None;
    let mut relations = Vec::new();
    for (idx, raw) in src.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let Some(names) = &labels else {
            let Some(rest) = trimmed.strip_prefix("elements:") else {
                return Err(parse_err(line, 1, "expected `elements: ...`"));
            };
            labels = Some(rest.split_whitespace().map(String::from).collect());
            continue;
        };
        let toks: Vec<(usize, &str)> = tokens(raw).collect();
        let [(ca, a), (cop, op), (cb, b)] = toks[..] else {
            return Err(parse_err(line, 1, "expected `a < b`"));
        };
        if op != "<" {
            return Err(parse_err(line, cop, format!("expected `<`, found `{op}`")));
        }
        let find = |name: &str, col: usize| {
            names
                .iter()
                .position(|l| l == name)
                .ok_or_else(|| parse_err(line, col, format!("unknown element `{name}`")))
        };
        relations.push((find(a, ca)?, find(b, cb)?));
    }
    let labels = labels.unwrap_or_default();
    FiniteIS::from_relations(labels, &relations)
}

/// Prints the elements and the covering relations.
pub fn write_poset(s: &FiniteIS) -> String {
    let mut out = String::from("elements:");
    for l in s.labels() {
        out.push(' ');
        out.push_str(l);
    }
    out.push('\n');
    for (a, b) in s.covers() {
        let _ = writeln!(out, "{} < {}", s.label(a), s.label(b));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> ExtendedScalar {
        ExtendedScalar::Finite(Rational::new(n.into(), d.into()))
    }

    #[test]
    fn scalar_tokens() {
        assert_eq!(parse_scalar("-inf").unwrap(), ExtendedScalar::Bottom);
        assert_eq!(parse_scalar("+inf").unwrap(), ExtendedScalar::Top);
        assert_eq!(parse_scalar("3").unwrap(), q(3, 1));
        assert_eq!(parse_scalar("-2.5").unwrap(), q(-5, 2));
        assert_eq!(parse_scalar("7/3").unwrap(), q(7, 3));
        assert_eq!(parse_scalar("-14/6").unwrap(), q(-7, 3));
        assert_eq!(parse_scalar(".25").unwrap(), q(1, 4));
        assert_eq!(parse_scalar("+0.1").unwrap(), q(1, 10));
        for bad in ["oops", "1/0", "1/-2", "--1", "1.2.3", "inf", ".", "", "1e3"] {
            assert!(parse_scalar(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn scalars_print_in_lowest_terms() {
        assert_eq!(q(6, 3).to_string(), "2");
        assert_eq!(q(-4, 6).to_string(), "-2/3");
        assert_eq!(parse_scalar("2.50").unwrap().to_string(), "5/2");
    }

    #[test]
    fn vector_line() {
        let file = parse_vectors("1 -inf 7/3\n").unwrap();
        assert_eq!(
            file.vectors[0].coords(),
            &[q(1, 1), ExtendedScalar::Bottom, q(7, 3)]
        );
    }

    #[test]
    fn bad_token_reports_line_and_column() {
        let err = parse_vectors("0 0 0\n1 oops 3\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 2,
                column: 3,
                message: "malformed scalar `oops`".into()
            }
        );
    }

    #[test]
    fn ragged_vectors_rejected() {
        assert!(matches!(
            parse_vectors("1 2\n1 2 3\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_vectors("# labels: a b\n1 2 3\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn function_file() {
        let fs = parse_functions("# labels: a b\n0 0\n").unwrap();
        assert_eq!(fs[0], Element::one(vec!["a".into(), "b".into()]));
        assert!(parse_functions("0 0\n").is_err());
    }

    #[test]
    fn functional_file() {
        let f = parse_functional("# functional-representer dim=3\n1 -inf +inf\n").unwrap();
        assert_eq!(f.dim(), 3);
        assert_eq!(
            write_functional(&f),
            "# functional-representer dim=3\n1 -inf +inf\n"
        );
        assert!(parse_functional("1 2\n").is_err());
        assert!(parse_functional("# functional-representer dim=3\n1 2\n").is_err());
    }

    #[test]
    fn poset_file() {
        let s = parse_poset("elements: a b c\na < b\nb < c\n").unwrap();
        assert!(s.standard_order("a", "c").unwrap());
        assert_eq!(write_poset(&s), "elements: a b c\na < b\nb < c\n");
        let err = parse_poset("elements: a b\na < z\n").unwrap_err();
        assert!(matches!(
            err,
            Error::Parse {
                line: 2,
                column: 5,
                ..
            }
        ));
        let err = parse_poset("elements: a b\na > b\n").unwrap_err();
        assert!(matches!(
            err,
            Error::Parse {
                line: 2,
                column: 3,
                ..
            }
        ));
        assert!(matches!(
            parse_poset("elements: a b\na < b\nb < a\n"),
            Err(Error::NotPartialOrder(_))
        ));
        assert!(parse_poset("").unwrap().is_empty());
    }
}
