//! Plain-text category descriptions.
//!
//! ```text
//! # comments and blank lines are ignored
//! objects: X, Y, Z
//! f: X -> Y
//! g: Y -> Z
//! h: X -> Z
//! f;g = h
//! ```
//!
//! The first line lists objects (the `objects:` prefix is optional; names are
//! separated by commas or whitespace). Morphism declarations come next, then
//! composition entries. Identities are implicit and may be referred to as
//! `id_<object>`; composites involving an identity need not be listed.

use thiserror::Error;

use super::{CategoryError, FiniteCategory, MorId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    /// 1-based; 0 when the error concerns the input as a whole.
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

fn is_identifier(s: &str) -> bool {
    !s.is_empty()
        && s.chars()
            .all(|c| c.is_alphanumeric() || matches!(c, '_' | '<' | '\'' | '.'))
}

pub fn parse_category(text: &str) -> Result<FiniteCategory, ParseError> {
    let mut b = FiniteCategory::builder();
    let mut saw_objects = false;
    let mut saw_composition = false;
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        last_line = line_no;
        if !saw_objects {
            let list = line.strip_prefix("objects:").unwrap_or(line);
            for name in list
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
            {
                if !is_identifier(name) {
                    return Err(err(line_no, format!("invalid object name `{name}`")));
                }
                b.object(name).map_err(|e| err(line_no, e.to_string()))?;
            }
            saw_objects = true;
            continue;
        }
        if let Some((lhs, rhs)) = line.split_once('=') {
            saw_composition = true;
            let (f, g) = lhs.split_once(';').ok_or_else(|| err(line_no, "expected `f;g = h`"))?;
            let lookup = |name: &str| -> Result<MorId, ParseError> {
                let name = name.trim();
                b.morphism_by_name(name)
                    .ok_or_else(|| err(line_no, format!("unknown morphism `{name}`")))
            };
            let (f, g, h) = (lookup(f)?, lookup(g)?, lookup(rhs)?);
            b.compose(f, g, h).map_err(|e| err(line_no, e.to_string()))?;
        } else if let Some((name, sig)) = line.split_once(':') {
            if saw_composition {
                return Err(err(line_no, "morphism declarations must precede composition lines"));
            }
            let name = name.trim();
            if !is_identifier(name) {
                return Err(err(line_no, format!("invalid morphism name `{name}`")));
            }
            let (src, dst) = sig
                .split_once("->")
                .ok_or_else(|| err(line_no, "expected `f: X -> Y`"))?;
            let obj = |o: &str| {
                let o = o.trim();
                b.object_by_name(o)
                    .ok_or_else(|| err(line_no, format!("unknown object `{o}`")))
            };
            let (src, dst) = (obj(src)?, obj(dst)?);
            b.morphism(name, src, dst).map_err(|e| err(line_no, e.to_string()))?;
        } else {
            return Err(err(line_no, format!("cannot parse `{line}`")));
        }
    }
    if !saw_objects {
        return Err(err(0, "no object list"));
    }
    b.build().map_err(|e: CategoryError| err(last_line, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_chain() {
        let c = parse_category("objects: X, Y, Z\nf: X -> Y\ng: Y -> Z\nh: X -> Z\nf;g = h\n").unwrap();
        let (f, g, h) = (
            c.morphism_by_name("f").unwrap(),
            c.morphism_by_name("g").unwrap(),
            c.morphism_by_name("h").unwrap(),
        );
        assert_eq!(c.compose(f, g), Some(h));
        assert_eq!(c.morphism_count(), 6);
    }

    #[test]
    fn identities_can_be_named() {
        let c = parse_category("X Y\nf: X -> Y\nid_X;f = f\n").unwrap();
        assert_eq!(c.morphism_count(), 3);
    }

    #[test]
    fn reports_line_of_unknown_object() {
        let e = parse_category("# header\nX Y\nf: X -> W\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(e.message.contains("W"));
    }

    #[test]
    fn reports_line_of_bad_composite() {
        let e = parse_category("X Y Z\nf: X -> Y\ng: Y -> Z\nh: X -> Z\nf;g = f\n").unwrap_err();
        assert_eq!(e.line, 5);
    }

    #[test]
    fn missing_composite_points_at_last_line() {
        let e = parse_category("X Y Z\nf: X -> Y\ng: Y -> Z\nh: X -> Z\n").unwrap_err();
        assert_eq!(e.line, 4);
        assert!(e.message.contains("no composite"));
    }

    #[test]
    fn rejects_garbage() {
        assert_eq!(parse_category("X\nwhat is this\n").unwrap_err().line, 2);
        assert_eq!(parse_category("").unwrap_err().line, 0);
    }
}
