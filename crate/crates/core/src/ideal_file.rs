//! The plain-text ideal file format used by the CLI.
//!
//! A file starts with a header
//! `ring <char> <var1> <var2> ...; order <lex|degrevlex|negdegrevlex|block:k>`
//! followed by one polynomial per line in the grammar of [`crate::poly`].
//! `#` starts a comment running to end of line; blank lines are ignored.

use crate::coeff::{CoeffError, FieldDescriptor};
use crate::poly::{MonomialOrder, ParseError, Polynomial, Ring};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IdealFileError {
    #[error("missing header line `ring ...; order ...`")]
    MissingHeader,
    #[error("line {line}: {message}")]
    Header { line: usize, message: String },
    #[error("line {line}: {source}")]
    Polynomial {
        line: usize,
        #[source]
        source: ParseError,
    },
    #[error(transparent)]
    Coeff(#[from] CoeffError),
}

#[derive(Debug, Clone)]
pub struct IdealFile {
    pub ring: Ring,
    pub order: MonomialOrder,
    pub polynomials: Vec<Polynomial>,
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

pub fn parse_ideal_file(text: &str) -> Result<IdealFile, IdealFileError> {
    let mut lines = text.lines().enumerate();
    let (header_line, header) = loop {
        match lines.next() {
            None => return Err(IdealFileError::MissingHeader),
            Some((i, raw)) => {
                let s = strip_comment(raw).trim();
                if !s.is_empty() {
                    break (i + 1, s.to_string());
                }
            }
        }
    };
    let herr = |message: String| IdealFileError::Header {
        line: header_line,
        message,
    };
    let (ring_part, order_part) = header
        .split_once(';')
        .ok_or_else(|| herr("expected `ring ...; order ...`".to_string()))?;
    let mut ring_tokens = ring_part.split_whitespace();
    if ring_tokens.next() != Some("ring") {
        return Err(herr("header must start with `ring`".to_string()));
    }
    let characteristic: u64 = ring_tokens
        .next()
        .ok_or_else(|| herr("missing characteristic".to_string()))?
        .parse()
        .map_err(|_| herr("characteristic must be a nonnegative integer".to_string()))?;
    let field = FieldDescriptor::new(characteristic)?;
    let vars: Vec<&str> = ring_tokens.collect();
    if vars.is_empty() {
        return Err(herr("no variables declared".to_string()));
    }
    let ring = Ring::new(field, &vars).map_err(|e| herr(e.to_string()))?;

    let mut order_tokens = order_part.split_whitespace();
    if order_tokens.next() != Some("order") {
        return Err(herr("expected `order` after `;`".to_string()));
    }
    let kind = order_tokens
        .next()
        .ok_or_else(|| herr("missing order kind".to_string()))?;
    if order_tokens.next().is_some() {
        return Err(herr("trailing tokens after the order kind".to_string()));
    }
    let order = match kind {
        "lex" => MonomialOrder::Lex,
        "degrevlex" => MonomialOrder::DegRevLex,
        "negdegrevlex" => MonomialOrder::NegDegRevLex,
        other => match other.strip_prefix("block:") {
            Some(k) => {
                let split: usize = k
                    .parse()
                    .map_err(|_| herr(format!("bad block split `{k}`")))?;
                if split == 0 || split >= ring.nvars() {
                    return Err(herr(format!(
                        "block split must lie strictly between 0 and {}",
                        ring.nvars()
                    )));
                }
                MonomialOrder::elimination_block(split)
            }
            None => return Err(herr(format!("unknown order `{other}`"))),
        },
    };

    let mut polynomials = Vec::new();
    for (i, raw) in lines {
        let s = strip_comment(raw).trim();
        if s.is_empty() {
            continue;
        }
        let p = ring
            .parse(s)
            .map_err(|source| IdealFileError::Polynomial {
                line: i + 1,
                source,
            })?;
        polynomials.push(p);
    }
    Ok(IdealFile {
        ring,
        order,
        polynomials,
    })
}

pub fn order_keyword(order: &MonomialOrder) -> String {
    match order {
        MonomialOrder::Lex => "lex".to_string(),
        MonomialOrder::DegRevLex => "degrevlex".to_string(),
        MonomialOrder::NegDegRevLex => "negdegrevlex".to_string(),
        MonomialOrder::Block { split, .. } => format!("block:{split}"),
    }
}

pub fn format_ideal_file(ring: &Ring, order: &MonomialOrder, polys: &[Polynomial]) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "ring {} {}; order {}\n",
        ring.field().characteristic(),
        ring.var_names().join(" "),
        order_keyword(order)
    ));
    for p in polys {
        out.push_str(&p.to_string());
        out.push('\n');
    }
    out
}
