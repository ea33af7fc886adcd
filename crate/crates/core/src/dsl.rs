//! Text format for words.
//!
//! ```text
//! # trefoil as a 4-plat
//! b1 b3 x2- x2- x2- d3 d1
//! ```
//!
//! One whitespace-separated token per event: `b<i>` is a cup, `d<i>` a cap,
//! `x<i>+` / `x<i>-` a crossing. An optional leading `tangle <2n>` header
//! makes the word a tangle with `2n` boundary points. `#` comments run to the
//! end of the line.

use crate::error::{Error, Result, SyntaxError};
use crate::word::{AnyWord, MorseEvent, MorseWord, Sign, TangleWord};

/// Raw events and the tangle boundary (if any), before validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawWord {
    pub boundary: Option<usize>,
    pub events: Vec<MorseEvent>,
}

struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

fn tokens(text: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    for (l, raw_line) in text.lines().enumerate() {
        let line = raw_line.split('#').next().unwrap_or("");
        let mut start = None;
        for (c, ch) in line.char_indices().chain(std::iter::once((line.len(), ' '))) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(c),
                (true, Some(s)) => {
                    out.push(Token { text: &line[s..c], line: l + 1, column: line[..s].chars().count() + 1 });
                    start = None;
                }
                _ => {}
            }
        }
    }
    out
}

fn syntax(tok: &Token<'_>, message: impl Into<String>) -> SyntaxError {
    SyntaxError { line: tok.line, column: tok.column, message: message.into() }
}

fn parse_index(tok: &Token<'_>, digits: &str) -> Result<usize, SyntaxError> {
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(syntax(tok, format!("expected a strand index in `{}`", tok.text)));
    }
    match digits.parse::<usize>() {
        Ok(0) => Err(syntax(tok, "strand indices start at 1")),
        Ok(i) => Ok(i),
        Err(_) => Err(syntax(tok, format!("index too large in `{}`", tok.text))),
    }
}

fn parse_event(tok: &Token<'_>) -> Result<MorseEvent, SyntaxError> {
    let t = tok.text;
    let rest = &t[t.char_indices().nth(1).map(|(i, _)| i).unwrap_or(t.len())..];
    match t.chars().next() {
        Some('b') => Ok(MorseEvent::Cup(parse_index(tok, rest)?)),
        Some('d') => Ok(MorseEvent::Cap(parse_index(tok, rest)?)),
        Some('x') => {
            let sign = match rest.chars().last() {
                Some('+') => Sign::Pos,
                Some('-') => Sign::Neg,
                _ => return Err(syntax(tok, format!("crossing `{}` needs a trailing + or -", t))),
            };
            Ok(MorseEvent::Cross(parse_index(tok, &rest[..rest.len() - 1])?, sign))
        }
        _ => Err(syntax(tok, format!("unknown token `{}`", t))),
    }
}

/// Tokenizes and parses without validating.
pub fn parse_raw(text: &str) -> Result<RawWord, SyntaxError> {
    let toks = tokens(text);
    let mut iter = toks.iter().peekable();
    let mut boundary = None;
    if let Some(first) = iter.peek() {
        if first.text == "tangle" {
            let head = iter.next().unwrap();
            let n = iter.next().ok_or_else(|| syntax(head, "`tangle` needs a boundary point count"))?;
            let value = parse_index(n, n.text)?;
            if value % 2 != 0 {
                return Err(syntax(n, "a tangle has an even number of boundary points"));
            }
            boundary = Some(value);
        }
    }
    let mut events = Vec::new();
    for tok in iter {
        if tok.text == "tangle" {
            return Err(syntax(tok, "`tangle` header must come first"));
        }
        events.push(parse_event(tok)?);
    }
    if boundary.is_none() && events.is_empty() {
        return Err(SyntaxError { line: 1, column: 1, message: "no events".into() });
    }
    Ok(RawWord { boundary, events })
}

/// Parses and validates a closed word or a tangle word.
pub fn parse(text: &str) -> Result<AnyWord> {
    let raw = parse_raw(text)?;
    Ok(match raw.boundary {
        Some(b) => AnyWord::Tangle(TangleWord::new(b, raw.events)?),
        None => AnyWord::Closed(MorseWord::new(raw.events)?),
    })
}

/// Parses a closed word (knot or link).
pub fn parse_closed(text: &str) -> Result<MorseWord> {
    match parse(text)? {
        AnyWord::Closed(w) => Ok(w),
        AnyWord::Tangle(_) => Err(Error::InvalidInput("expected a closed word, found a tangle".into())),
    }
}

pub fn serialize(word: &AnyWord) -> String {
    match word {
        AnyWord::Closed(w) => w.to_string(),
        AnyWord::Tangle(t) => t.to_string(),
    }
}
