//! Plain-text posets and relations.
//!
//! ```text
//! # comments and blank lines are ignored
//! chain CHF: 0..2
//! poset Shape: a b c
//! order Shape: a<b a<c
//! dp buy: Shape -> CHF: (a,1) (a,2) (b,2) (c,2)
//! np lack: Shape -> CHF: (b,0) (b,1) (c,0)
//! ```
//!
//! `poset` lists elements; `order` adds covering pairs, closed reflexively
//! and transitively. `chain` declares integers `lo..hi` inclusive. Relation
//! lines list every related pair: the relation is not closed under the
//! order, and a list that is not monotone is rejected.

use std::collections::HashMap;
use std::sync::Arc;

use super::{CodesignError, DesignProblem, FinitePoset, NesignProblem};

#[derive(Debug, Clone, Default)]
pub struct CodesignDocument {
    /// In declaration order.
    pub posets: Vec<Arc<FinitePoset>>,
    pub dps: Vec<(String, DesignProblem)>,
    pub nps: Vec<(String, NesignProblem)>,
}

impl CodesignDocument {
    pub fn poset(&self, name: &str) -> Option<&Arc<FinitePoset>> {
        self.posets.iter().find(|p| p.name() == name)
    }

    pub fn dp(&self, name: &str) -> Option<&DesignProblem> {
        self.dps.iter().find(|(n, _)| n == name).map(|(_, d)| d)
    }

    pub fn np(&self, name: &str) -> Option<&NesignProblem> {
        self.nps.iter().find(|(n, _)| n == name).map(|(_, d)| d)
    }
}

fn err(line: usize, message: impl Into<String>) -> CodesignError {
    CodesignError::Parse {
        line,
        message: message.into(),
    }
}

fn at_line(line: usize) -> impl Fn(CodesignError) -> CodesignError {
    move |e| match e {
        CodesignError::Parse { .. } => e,
        other => err(line, other.to_string()),
    }
}

struct PosetDecl {
    line: usize,
    elements: Vec<String>,
    pairs: Vec<(usize, usize)>,
}

fn parse_pair(s: &str, line: usize) -> Result<(&str, &str), CodesignError> {
    s.strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .and_then(|s| s.split_once(','))
        .map(|(a, b)| (a.trim(), b.trim()))
        .ok_or_else(|| err(line, format!("expected `(a,b)`, found `{s}`")))
}

/// `(a,b) (c, d)` into `["(a,b)", "(c,d)"]`.
fn pair_tokens(s: &str) -> Vec<String> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    compact.split_inclusive(')').map(str::to_string).collect()
}

pub fn parse_codesign(text: &str) -> Result<CodesignDocument, CodesignError> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();

    let mut order: Vec<String> = Vec::new();
    let mut decls: HashMap<String, PosetDecl> = HashMap::new();
    let mut relations = Vec::new();
    for &(no, line) in &lines {
        let (keyword, rest) = line
            .split_once(char::is_whitespace)
            .ok_or_else(|| err(no, "missing declaration"))?;
        let rest = rest.trim();
        match keyword {
            "poset" | "chain" => {
                let (name, body) = rest
                    .split_once(':')
                    .ok_or_else(|| err(no, format!("expected `{keyword} NAME: ...`")))?;
                let name = name.trim().to_string();
                if name.is_empty() {
                    return Err(err(no, "empty poset name"));
                }
                if decls.contains_key(&name) {
                    return Err(err(no, format!("poset `{name}` declared twice")));
                }
                let (elements, pairs) = if keyword == "poset" {
                    (body.split_whitespace().map(str::to_string).collect(), Vec::new())
                } else {
                    let (lo, hi) = body
                        .trim()
                        .split_once("..")
                        .ok_or_else(|| err(no, "expected `lo..hi`"))?;
                    let parse = |s: &str| {
                        s.trim()
                            .parse::<i64>()
                            .map_err(|_| err(no, format!("invalid integer `{}`", s.trim())))
                    };
                    let (lo, hi) = (parse(lo)?, parse(hi)?);
                    if lo > hi {
                        return Err(err(no, format!("empty chain {lo}..{hi}")));
                    }
                    let n = (hi - lo + 1) as usize;
                    (
                        (lo..=hi).map(|v| v.to_string()).collect(),
                        (1..n).map(|i| (i - 1, i)).collect(),
                    )
                };
                order.push(name.clone());
                decls.insert(
                    name,
                    PosetDecl {
                        line: no,
                        elements,
                        pairs,
                    },
                );
            }
            "order" => {
                let (name, body) = rest
                    .split_once(':')
                    .ok_or_else(|| err(no, "expected `order NAME: a<b ...`"))?;
                let decl = decls
                    .get_mut(name.trim())
                    .ok_or_else(|| err(no, format!("unknown poset `{}`", name.trim())))?;
                for tok in body
                    .split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|s| !s.is_empty())
                {
                    let (a, b) = tok
                        .split_once('<')
                        .ok_or_else(|| err(no, format!("expected `a<b`, found `{tok}`")))?;
                    let idx = |e: &str| {
                        decl.elements
                            .iter()
                            .position(|x| x == e)
                            .ok_or_else(|| err(no, format!("unknown element `{e}` of `{}`", name.trim())))
                    };
                    let pair = (idx(a)?, idx(b)?);
                    decl.pairs.push(pair);
                }
            }
            "dp" | "np" => relations.push((no, keyword, rest)),
            other => return Err(err(no, format!("unknown declaration `{other}`"))),
        }
    }

    let mut doc = CodesignDocument::default();
    for name in &order {
        let decl = &decls[name];
        let p = FinitePoset::from_pairs(name, decl.elements.clone(), &decl.pairs).map_err(at_line(decl.line))?;
        doc.posets.push(Arc::new(p));
    }

    for (no, keyword, rest) in relations {
        let mut parts = rest.splitn(3, ':');
        let (name, sig, body) = match (parts.next(), parts.next(), parts.next()) {
            (Some(n), Some(s), Some(b)) => (n.trim(), s, b),
            _ => return Err(err(no, format!("expected `{keyword} NAME: P -> Q: (a,b) ...`"))),
        };
        if doc.dp(name).is_some() || doc.np(name).is_some() {
            return Err(err(no, format!("relation `{name}` declared twice")));
        }
        let (src, dst) = sig.split_once("->").ok_or_else(|| err(no, "expected `P -> Q`"))?;
        let lookup = |n: &str| {
            doc.poset(n.trim())
                .cloned()
                .ok_or_else(|| err(no, format!("unknown poset `{}`", n.trim())))
        };
        let (src, dst) = (lookup(src)?, lookup(dst)?);
        let mut cells = vec![false; src.len() * dst.len()];
        for tok in pair_tokens(body) {
            let (a, b) = parse_pair(&tok, no)?;
            let i = src
                .index_of(a)
                .ok_or_else(|| err(no, format!("unknown element `{a}` of `{}`", src.name())))?;
            let j = dst
                .index_of(b)
                .ok_or_else(|| err(no, format!("unknown element `{b}` of `{}`", dst.name())))?;
            cells[i * dst.len() + j] = true;
        }
        if keyword == "dp" {
            let d = DesignProblem::new(src, dst, cells).map_err(at_line(no))?;
            doc.dps.push((name.to_string(), d));
        } else {
            let n = NesignProblem::new(src, dst, cells).map_err(at_line(no))?;
            doc.nps.push((name.to_string(), n));
        }
    }
    Ok(doc)
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "\
# shapes
chain C: 0..2
poset S: a b c
order S: a<b a<c
dp buy: S -> C: (a,1) (a,2) (b,2) (c, 2)
np lack: S -> C: (b,0) (c,0) (b,1)
";

    #[test]
    fn parses_sample() {
        let doc = parse_codesign(SAMPLE).unwrap();
        assert_eq!(doc.posets.len(), 2);
        let s = doc.poset("S").unwrap();
        assert!(s.leq(0, 2) && !s.leq(1, 2));
        let d = doc.dp("buy").unwrap();
        assert!(d.get(0, 1) && !d.get(1, 1));
        assert!(doc.np("lack").unwrap().get(1, 1));
    }

    #[test]
    fn non_monotone_relation_reports_its_line() {
        let text = "chain C: 0..1\ndp d: C -> C: (1,1)\n";
        match parse_codesign(text) {
            Err(CodesignError::Parse { line: 2, message }) => assert!(message.contains("monotone")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn cyclic_order_is_rejected() {
        let text = "poset P: x y\norder P: x<y y<x\n";
        assert!(matches!(
            parse_codesign(text),
            Err(CodesignError::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn unknown_names_are_rejected() {
        assert!(parse_codesign("dp d: A -> B: (a,b)").is_err());
        assert!(parse_codesign("chain C: 0..1\ndp d: C -> C: (0,7)").is_err());
        assert!(parse_codesign("lattice L: a").is_err());
    }
}
