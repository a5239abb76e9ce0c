//! A small text format for dual elements and functionals.

use num_bigint::BigInt;
use num_traits::Zero;

use super::tensor::{l2_dim, tensor, unit, wedge};
use crate::config::{Configuration, IncidenceIndex};
use crate::error::{Error, Result};

/// An element of `H* ⊗ Λ²H*` or `A*` with a name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualElement {
    pub tag: String,
    pub coords: Vec<BigInt>,
}

/// `F = sign * τ̃*(r(line, point) ⊗ Σ coeff * element)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Identity {
    pub lhs: String,
    pub sign: BigInt,
    pub line: usize,
    pub point: String,
    pub rhs: Vec<(BigInt, String)>,
}

/// Parsed contents of a dual data file.
#[derive(Clone, Debug, Default)]
pub struct DualData {
    pub r3perp: Vec<DualElement>,
    pub functionals: Vec<DualElement>,
    pub t: Vec<(BigInt, String)>,
    pub identities: Vec<Identity>,
}

fn parse_error(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// Splits `"2 a - b + (c - d)"` into signed terms at top-level `+`/`-`.
pub fn parse_combination(s: &str) -> Result<Vec<(BigInt, String)>> {
    let mut terms = Vec::new();
    let mut depth = 0i32;
    let mut sign = 1i64;
    let mut current = String::new();
    let flush = |current: &mut String, sign: i64, terms: &mut Vec<(BigInt, String)>| -> Result<()> {
        let t = current.trim();
        if t.is_empty() {
            current.clear();
            return Ok(());
        }
        let digits: String = t.chars().take_while(char::is_ascii_digit).collect();
        let (coeff, rest) = if digits.is_empty() {
            (BigInt::from(1), t)
        } else {
            (digits.parse::<BigInt>().expect("digits"), t[digits.len()..].trim_start())
        };
        if rest.is_empty() {
            return Err(parse_error(format!("term {t:?} has no symbol")));
        }
        terms.push((coeff * sign, rest.to_string()));
        current.clear();
        Ok(())
    };
    for ch in s.chars() {
        match ch {
            '(' => {
                depth += 1;
                current.push(ch);
            }
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(parse_error(format!("unbalanced parentheses in {s:?}")));
                }
                current.push(ch);
            }
            '+' | '-' if depth == 0 => {
                flush(&mut current, sign, &mut terms)?;
                sign = if ch == '-' { -1 } else { 1 };
            }
            _ => current.push(ch),
        }
    }
    if depth != 0 {
        return Err(parse_error(format!("unbalanced parentheses in {s:?}")));
    }
    flush(&mut current, sign, &mut terms)?;
    Ok(terms)
}

fn strip_parens(s: &str) -> &str {
    let t = s.trim();
    t.strip_prefix('(').and_then(|u| u.strip_suffix(')')).unwrap_or(t)
}

fn generator_index(sym: &str, prefix: char, n: usize) -> Result<usize> {
    let k: usize = sym
        .trim()
        .strip_prefix(prefix)
        .and_then(|d| d.parse().ok())
        .ok_or_else(|| parse_error(format!("expected {prefix}<k>, got {sym:?}")))?;
    if k == 0 || k > n {
        return Err(parse_error(format!("{sym:?} out of range 1..={n}")));
    }
    Ok(k - 1)
}

/// A linear form such as `x7` or `(x1-x3)`.
pub fn parse_linear(s: &str, n: usize) -> Result<Vec<BigInt>> {
    let mut v = vec![BigInt::zero(); n];
    for (coeff, sym) in parse_combination(strip_parens(s))? {
        v[generator_index(&sym, 'x', n)?] += coeff;
    }
    Ok(v)
}

fn split_top(s: &str, sep: char) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (k, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == sep && depth == 0 => return Some((&s[..k], &s[k + 1..])),
            _ => {}
        }
    }
    None
}

/// A sum of terms `coeff h * u ^ v` in `H* ⊗ Λ²H*`.
pub fn parse_tensor(s: &str, n: usize) -> Result<Vec<BigInt>> {
    let mut out = vec![BigInt::zero(); n * l2_dim(n)];
    for (coeff, term) in parse_combination(s)? {
        let (h, rest) = split_top(&term, '*').ok_or_else(|| parse_error(format!("missing '*' in {term:?}")))?;
        let (u, v) = split_top(rest, '^').ok_or_else(|| parse_error(format!("missing '^' in {term:?}")))?;
        let t = tensor(&parse_linear(h, n)?, &wedge(&parse_linear(u, n)?, &parse_linear(v, n)?));
        for (o, x) in out.iter_mut().zip(t) {
            *o += &coeff * x;
        }
    }
    Ok(out)
}

/// The point named in a label such as `K1(p135)`.
pub fn label_point(label: &str) -> Result<&str> {
    label
        .split_once('(')
        .and_then(|(_, rest)| rest.strip_suffix(')'))
        .ok_or_else(|| parse_error(format!("label {label:?} names no point")))
}

/// A sum of `e_ij` at one point, as an element of `A*`.
pub fn parse_functional(
    c: &Configuration,
    index: &IncidenceIndex,
    point: &str,
    s: &str,
) -> Result<Vec<BigInt>> {
    let n = c.n();
    let p = c
        .point_index(point)
        .ok_or_else(|| Error::Domain(format!("unknown point {point:?}")))?;
    let mut out = vec![BigInt::zero(); n * index.pairs().len()];
    for (coeff, sym) in parse_combination(s)? {
        let digits: Vec<u32> = sym
            .strip_prefix('e')
            .map(|d| d.chars().filter_map(|ch| ch.to_digit(10)).collect())
            .unwrap_or_default();
        if digits.len() != 2 || sym.len() != 3 {
            return Err(parse_error(format!("expected e<i><j>, got {sym:?}")));
        }
        let (i, j) = (digits[0] as usize, digits[1] as usize);
        if j == 0 || j > n {
            return Err(parse_error(format!("{sym:?} out of range")));
        }
        let pair = index
            .pair_index(i, p)
            .ok_or_else(|| Error::Domain(format!("{sym:?}: l{i} does not pass through {point}")))?;
        out[pair * n + j - 1] += coeff;
    }
    Ok(out)
}

fn parse_identity(line: &str) -> Result<Identity> {
    let (lhs, rhs) = line.split_once('=').ok_or_else(|| parse_error(format!("missing '=' in {line:?}")))?;
    let (left, combo) = rhs.split_once(':').ok_or_else(|| parse_error(format!("missing ':' in {line:?}")))?;
    let left = left.trim();
    let (sign, r) = match left.strip_prefix('-') {
        Some(rest) => (BigInt::from(-1), rest.trim()),
        None => (BigInt::from(1), left),
    };
    let inner = r
        .strip_prefix("r(")
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| parse_error(format!("expected r(k,p) in {line:?}")))?;
    let (k, p) = inner.split_once(',').ok_or_else(|| parse_error(format!("bad r(k,p) in {line:?}")))?;
    Ok(Identity {
        lhs: lhs.trim().to_string(),
        sign,
        line: k.trim().parse().map_err(|_| parse_error(format!("bad line in {line:?}")))?,
        point: p.trim().to_string(),
        rhs: parse_combination(combo)?,
    })
}

/// Parses a dual data file; see `data/c8_duals.txt` for the layout.
pub fn parse_dual_data(c: &Configuration, index: &IncidenceIndex, text: &str) -> Result<DualData> {
    // join continuation lines
    let mut entries: Vec<(String, String)> = Vec::new();
    let mut section = String::new();
    for raw in text.lines() {
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        if let Some(name) = line.trim().strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
            section = name.to_string();
            continue;
        }
        if line.starts_with(char::is_whitespace) {
            let last = entries
                .last_mut()
                .ok_or_else(|| parse_error("continuation line before any entry"))?;
            last.1.push(' ');
            last.1.push_str(line.trim());
        } else {
            entries.push((section.clone(), line.trim().to_string()));
        }
    }
    let n = c.n();
    let mut out = DualData::default();
    for (section, entry) in entries {
        match section.as_str() {
            "r3perp" => {
                let (tag, body) = entry.split_once('=').ok_or_else(|| parse_error(format!("missing '=' in {entry:?}")))?;
                out.r3perp.push(DualElement {
                    tag: tag.trim().to_string(),
                    coords: parse_tensor(body, n)?,
                });
            }
            "functionals" => {
                let (tag, body) = entry.split_once('=').ok_or_else(|| parse_error(format!("missing '=' in {entry:?}")))?;
                let tag = tag.trim();
                out.functionals.push(DualElement {
                    tag: tag.to_string(),
                    coords: parse_functional(c, index, label_point(tag)?, body)?,
                });
            }
            "t" => {
                let (_, body) = entry.split_once('=').ok_or_else(|| parse_error(format!("missing '=' in {entry:?}")))?;
                out.t = parse_combination(body)?;
            }
            "identities" => out.identities.push(parse_identity(&entry)?),
            other => return Err(parse_error(format!("unknown section [{other}]"))),
        }
    }
    Ok(out)
}

/// `S_{ij} = x_i* ⊗ x_i* ∧ x_j*` for both orders of every pair meeting at
/// infinity, and `S_{ijk} = (x_i* - x_j*) ⊗ (x_i* - x_j*) ∧ (x_j* - x_k*)`
/// for every affine point on at least three lines, `i` its smallest line and
/// `j, k` two others in either order.
pub fn s_elements(c: &Configuration, index: &IncidenceIndex) -> Vec<DualElement> {
    let n = c.n();
    let mut out = Vec::new();
    for (i, j) in super::graded::infinity_pairs(c) {
        for (a, b) in [(i, j), (j, i)] {
            out.push(DualElement {
                tag: format!("S{a}{b}"),
                coords: tensor(&unit(n, a - 1), &super::graded::omega2(n, a, b)),
            });
        }
    }
    for &p in index.p0() {
        let ls = &c.points()[p].lines;
        if ls.len() < 3 {
            continue;
        }
        let i = ls[0];
        for &j in &ls[1..] {
            for &k in &ls[1..] {
                if j == k {
                    continue;
                }
                let mut h = unit(n, i - 1);
                h[j - 1] -= 1;
                out.push(DualElement {
                    tag: format!("S{i}{j}{k}"),
                    coords: tensor(&h, &super::graded::omega3(n, i, j, k)),
                });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::int_vec;

    #[test]
    fn combinations() {
        let t = parse_combination("2 I(p367) + J(p45) - K2(p147)").unwrap();
        assert_eq!(
            t,
            vec![
                (BigInt::from(2), "I(p367)".to_string()),
                (BigInt::from(1), "J(p45)".to_string()),
                (BigInt::from(-1), "K2(p147)".to_string()),
            ]
        );
        assert_eq!(parse_combination("-(x1-x3) * x1^x2").unwrap()[0].1, "(x1-x3) * x1^x2");
        assert!(parse_combination("(x1 - x2").is_err());
    }

    #[test]
    fn linear_and_tensor() {
        assert_eq!(parse_linear("(x1-x3)", 3).unwrap(), int_vec(&[1, 0, -1]));
        let t = parse_tensor("x1 * x1^x2 - x1 * x2^x1", 3).unwrap();
        // 2 x1 ⊗ x1∧x2
        assert_eq!(t[0], BigInt::from(2));
        assert_eq!(t.iter().filter(|x| !x.is_zero()).count(), 1);
        assert!(parse_tensor("x1 ^ x2", 3).is_err());
        assert!(parse_tensor("x4 * x1^x2", 3).is_err());
    }
}
