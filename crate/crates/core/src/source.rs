//! Ring source expressions such as `matrix:zmod:2:2` or
//! `product:zmod:4,(eqdiag:gf:4:2)`.
//!
//! ```text
//! src := '(' src ')'
//!      | zmod:N | gf:Q | zn-alpha:N | paper:gf4-example
//!      | matrix:SRC:K | tri:SRC:K | eqdiag:SRC:K
//!      | product:SRC,SRC | corner:SRC:E | jquot:SRC
//!      | ext:strict-upper:SRC:K | ext:square-zero:SRC | ext:zero:SRC
//!      | ext:self:SRC | ext:split-action
//!      | file:PATH
//! ```
//!
//! A `file:` path runs to the next `,` or `)` or to the end of the input.
//! The ring built from a whole expression is labelled with the expression
//! itself, except for `file:` sources which keep the label stored in the file.

use std::path::Path;

use thiserror::Error;

use crate::analysis::Analysis;
use crate::constructors::{self, ConstructError};
use crate::predicates::j_quotient;
use crate::ring::{validate_ring_with_cap, FiniteRing, RingError, RingTables};

/// Default order cap for rings built from source expressions.
pub const DEFAULT_ORDER_CAP: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SourceError {
    #[error("cannot parse ring source at byte {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error(transparent)]
    Construct(#[from] ConstructError),
}

impl From<RingError> for SourceError {
    fn from(e: RingError) -> Self {
        SourceError::Construct(ConstructError::Ring(e))
    }
}

impl SourceError {
    /// True when the failure is an order-cap violation.
    pub fn is_cap(&self) -> bool {
        matches!(
            self,
            SourceError::Construct(ConstructError::OrderCapExceeded { .. })
                | SourceError::Construct(ConstructError::Ring(RingError::OrderTooLarge { .. }))
        )
    }
}

/// Builds the ring described by `src`, refusing anything above `cap` elements.
pub fn parse_source(src: &str, cap: usize) -> Result<FiniteRing, SourceError> {
    let src = src.trim();
    let mut p = Parser {
        s: src,
        pos: 0,
        cap,
    };
    let (ring, from_file) = p.expr()?;
    if p.pos != src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(if from_file {
        ring
    } else {
        ring.with_label(src)
    })
}

/// Reads and validates a ring file.
pub fn load_ring_file(path: &Path, cap: usize) -> Result<FiniteRing, SourceError> {
    let text = std::fs::read_to_string(path).map_err(|e| SourceError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    let tables = RingTables::from_json(&text)
        .map_err(|e| RingError::MalformedTables(format!("{}: {e}", path.display())))?;
    Ok(validate_ring_with_cap(&tables, cap)?)
}

struct Parser<'a> {
    s: &'a str,
    pos: usize,
    cap: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> SourceError {
        SourceError::Syntax {
            pos: self.pos,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.s[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), SourceError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    fn word(&mut self) -> &str {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || c == '-' || c == '_' {
                self.pos += 1;
            } else {
                break;
            }
        }
        &self.s[start..self.pos]
    }

    fn number(&mut self) -> Result<usize, SourceError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.s[start..self.pos]
            .parse()
            .map_err(|_| SourceError::Syntax {
                pos: start,
                message: "expected a number".into(),
            })
    }

    fn capped(&self, order: u128) -> Result<(), SourceError> {
        constructors::check_order(order, self.cap)?;
        Ok(())
    }

    fn sub(&mut self) -> Result<FiniteRing, SourceError> {
        Ok(self.expr()?.0)
    }

    /// Parses one expression; the flag reports a bare `file:` source.
    fn expr(&mut self) -> Result<(FiniteRing, bool), SourceError> {
        if self.eat('(') {
            let r = self.expr()?;
            self.expect(')')?;
            return Ok(r);
        }
        let start = self.pos;
        let kw = self.word().to_string();
        // `zmod7`, `gf4` shorthand
        for (prefix, f) in [
            ("zmod", constructors::zmod as fn(usize) -> _),
            ("gf", constructors::gf),
        ] {
            if let Some(digits) = kw.strip_prefix(prefix) {
                if !digits.is_empty() && digits.chars().all(|c| c.is_ascii_digit()) {
                    let n: usize = digits.parse().map_err(|_| self.error("bad number"))?;
                    self.capped(n as u128)?;
                    return Ok((f(n)?, false));
                }
            }
        }
        self.expect(':')?;
        let ring = match kw.as_str() {
            "zmod" => {
                let n = self.number()?;
                self.capped(n as u128)?;
                constructors::zmod(n)?
            }
            "gf" => constructors::gf(self.number()?)?,
            "zn-alpha" => {
                let n = self.number()?;
                self.capped((n as u128).pow(2))?;
                constructors::zn_alpha(n)?
            }
            "paper" => match self.word().to_string().as_str() {
                "gf4-example" => {
                    self.capped(64)?;
                    constructors::paper_gf4_example()?
                }
                other => return Err(self.error(format!("unknown named ring '{other}'"))),
            },
            "matrix" | "tri" | "eqdiag" => {
                let base = self.sub()?;
                self.expect(':')?;
                let k = self.number()?;
                let q = base.order() as u128;
                let k32 = k.min(64) as u32;
                let order = match kw.as_str() {
                    "matrix" => q.checked_pow(k32 * k32),
                    "tri" => q.checked_pow(k32 * (k32 + 1) / 2),
                    _ => q.checked_pow(1 + k32 * k32.saturating_sub(1) / 2),
                };
                self.capped(order.unwrap_or(u128::MAX))?;
                match kw.as_str() {
                    "matrix" => constructors::matrix_ring(&base, k)?,
                    "tri" => constructors::upper_triangular(&base, k)?,
                    _ => constructors::equal_diagonal_subring(&base, k)?,
                }
            }
            "product" => {
                let a = self.sub()?;
                self.expect(',')?;
                let b = self.sub()?;
                self.capped(a.order() as u128 * b.order() as u128)?;
                constructors::product(&a, &b)?
            }
            "corner" => {
                let base = self.sub()?;
                self.expect(':')?;
                let e = self.number()?;
                constructors::corner(&base, e)?
            }
            "jquot" => {
                let base = self.sub()?;
                j_quotient(&Analysis::new(&base))
            }
            "ext" => self.extension()?,
            "file" => {
                let begin = self.pos;
                while !matches!(self.peek(), None | Some(',') | Some(')')) {
                    self.pos += self.peek().map_or(1, char::len_utf8);
                }
                let path = &self.s[begin..self.pos];
                if path.is_empty() {
                    return Err(self.error("empty file path"));
                }
                return Ok((load_ring_file(Path::new(path), self.cap)?, true));
            }
            _ => {
                return Err(SourceError::Syntax {
                    pos: start,
                    message: format!("unknown ring constructor '{kw}'"),
                })
            }
        };
        self.capped(ring.order() as u128)?;
        Ok((ring, false))
    }

    fn extension(&mut self) -> Result<FiniteRing, SourceError> {
        let kind = self.word().to_string();
        let spec = match kind.as_str() {
            "split-action" => constructors::split_action_bimodule()?,
            "strict-upper" => {
                self.expect(':')?;
                let base = self.sub()?;
                self.expect(':')?;
                let k = self.number()?;
                let q = base.order() as u128;
                let k32 = k.min(64) as u32;
                self.capped(
                    q.checked_pow(1 + k32 * k32.saturating_sub(1) / 2)
                        .unwrap_or(u128::MAX),
                )?;
                constructors::strict_upper_bimodule(&base, k)?
            }
            "square-zero" | "zero" | "self" => {
                self.expect(':')?;
                let base = self.sub()?;
                let q = base.order() as u128;
                self.capped(if kind == "zero" { q } else { q * q })?;
                match kind.as_str() {
                    "square-zero" => constructors::square_zero_bimodule(&base),
                    "zero" => constructors::zero_bimodule(&base),
                    _ => constructors::idempotent_self_bimodule(&base),
                }
            }
            other => return Err(self.error(format!("unknown extension kind '{other}'"))),
        };
        Ok(constructors::ideal_extension(&spec)?)
    }
}
