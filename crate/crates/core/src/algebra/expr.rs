//! Text form of predicates.
//!
//! ```text
//! expr  := "true" | "false"
//!        | ("minlen" | "maxlen" | "minfreq" | "maxfreq" | "minarea" | "maxarea") "(" N ")"
//!        | ("hasattr" | "nothasattr") "(" attribute ")"
//!        | ("hasobj" | "nothasobj") "(" object ")"
//!        | ("and" | "or") "(" [expr ("," expr)*] ")"
//!        | "not" "(" expr ")"
//! ```
//!
//! Thresholds are strict: `minfreq(2)` keeps concepts with more than two
//! objects, `maxlen(3)` those with fewer than three attributes.

use crate::dataset::Universe;
use crate::error::{Error, Result};

use super::predicate::Predicate;

#[derive(Debug, Clone, PartialEq)]
enum Token<'a> {
    Open,
    Close,
    Comma,
    Word(&'a str),
}

fn tokenize(s: &str) -> Vec<(usize, Token<'_>)> {
    let mut out = Vec::new();
    let mut chars = s.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '(' | ')' | ',' => {
                chars.next();
                out.push((
                    i,
                    match c {
                        '(' => Token::Open,
                        ')' => Token::Close,
                        _ => Token::Comma,
                    },
                ));
            }
            _ => {
                let mut end = s.len();
                while let Some(&(j, c)) = chars.peek() {
                    if c.is_whitespace() || "(),".contains(c) {
                        end = j;
                        break;
                    }
                    chars.next();
                }
                out.push((i, Token::Word(&s[i..end])));
            }
        }
    }
    out
}

struct Parser<'a, 'u> {
    tokens: Vec<(usize, Token<'a>)>,
    pos: usize,
    len: usize,
    universe: &'u Universe,
}

impl<'a> Parser<'a, '_> {
    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.len, |t| t.0)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Expression {
            offset: self.offset(),
            message: message.into(),
        })
    }

    fn expect(&mut self, want: Token<'static>, what: &str) -> Result<()> {
        match self.tokens.get(self.pos) {
            Some((_, t)) if *t == want => {
                self.pos += 1;
                Ok(())
            }
            _ => self.error(format!("expected {what}")),
        }
    }

    fn word(&mut self, what: &str) -> Result<&'a str> {
        match self.tokens.get(self.pos) {
            Some((_, Token::Word(w))) => {
                let w = *w;
                self.pos += 1;
                Ok(w)
            }
            _ => self.error(format!("expected {what}")),
        }
    }

    fn expr(&mut self) -> Result<Predicate> {
        let start = self.pos;
        let name = self.word("a predicate")?;
        match name {
            "true" => return Ok(Predicate::always()),
            "false" => return Ok(Predicate::never()),
            _ => {}
        }
        self.expect(Token::Open, "`(`")?;
        let p = match name {
            "minlen" | "maxlen" | "minfreq" | "maxfreq" | "minarea" | "maxarea" => {
                let arg = self.word("a threshold")?;
                let Ok(g) = arg.parse::<usize>() else {
                    self.pos -= 1;
                    return self.error(format!("threshold `{arg}` is not a natural number"));
                };
                match name {
                    "minlen" => Predicate::MinLength(g),
                    "maxlen" => Predicate::MaxLength(g),
                    "minfreq" => Predicate::MinFrequency(g),
                    "maxfreq" => Predicate::MaxFrequency(g),
                    "minarea" => Predicate::MinArea(g),
                    _ => Predicate::MaxArea(g),
                }
            }
            "hasattr" | "nothasattr" => {
                let arg = self.word("an attribute name")?;
                let Some(a) = self.universe.attrs.index_of(arg) else {
                    self.pos -= 1;
                    return self.error(format!("unknown attribute `{arg}`"));
                };
                if name == "hasattr" {
                    Predicate::HasAttr(a)
                } else {
                    Predicate::NotHasAttr(a)
                }
            }
            "hasobj" | "nothasobj" => {
                let arg = self.word("an object name")?;
                let Some(o) = self.universe.objs.index_of(arg) else {
                    self.pos -= 1;
                    return self.error(format!("unknown object `{arg}`"));
                };
                if name == "hasobj" {
                    Predicate::HasObj(o)
                } else {
                    Predicate::NotHasObj(o)
                }
            }
            "and" | "or" => {
                let mut args = Vec::new();
                if self.tokens.get(self.pos).map(|t| &t.1) != Some(&Token::Close) {
                    loop {
                        args.push(self.expr()?);
                        if self.tokens.get(self.pos).map(|t| &t.1) == Some(&Token::Comma) {
                            self.pos += 1;
                        } else {
                            break;
                        }
                    }
                }
                if name == "and" {
                    Predicate::And(args)
                } else {
                    Predicate::Or(args)
                }
            }
            "not" => Predicate::not(self.expr()?),
            other => {
                self.pos = start;
                return self.error(format!("unknown predicate `{other}`"));
            }
        };
        self.expect(Token::Close, "`)`")?;
        Ok(p)
    }
}

/// Parse an expression, resolving names against `universe`.
pub fn parse_predicate(text: &str, universe: &Universe) -> Result<Predicate> {
    let mut parser = Parser {
        tokens: tokenize(text),
        pos: 0,
        len: text.len(),
        universe,
    };
    let p = parser.expr()?;
    if parser.pos < parser.tokens.len() {
        return parser.error("trailing input");
    }
    Ok(p)
}

/// Render a predicate back to the expression language.
pub fn format_predicate(p: &Predicate, universe: &Universe) -> String {
    let join = |ps: &[Predicate]| {
        ps.iter()
            .map(|p| format_predicate(p, universe))
            .collect::<Vec<_>>()
            .join(",")
    };
    match p {
        Predicate::And(ps) if ps.is_empty() => "true".into(),
        Predicate::Or(ps) if ps.is_empty() => "false".into(),
        Predicate::MinLength(g) => format!("minlen({g})"),
        Predicate::MaxLength(g) => format!("maxlen({g})"),
        Predicate::MinFrequency(g) => format!("minfreq({g})"),
        Predicate::MaxFrequency(g) => format!("maxfreq({g})"),
        Predicate::MinArea(g) => format!("minarea({g})"),
        Predicate::MaxArea(g) => format!("maxarea({g})"),
        Predicate::HasAttr(a) => format!("hasattr({})", universe.attrs.name(*a)),
        Predicate::NotHasAttr(a) => format!("nothasattr({})", universe.attrs.name(*a)),
        Predicate::HasObj(o) => format!("hasobj({})", universe.objs.name(*o)),
        Predicate::NotHasObj(o) => format!("nothasobj({})", universe.objs.name(*o)),
        Predicate::And(ps) => format!("and({})", join(ps)),
        Predicate::Or(ps) => format!("or({})", join(ps)),
        Predicate::Not(p) => format!("not({})", format_predicate(p, universe)),
    }
}
