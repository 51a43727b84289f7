//! Text front end. The printer is [`Expr`]'s `Display`; [`parse`] reads it
//! back.
//!
//! ```text
//! expr    := ['+'|'-'] product (('+'|'-') product)*
//! product := unary (('*'|'/') unary)*
//! unary   := '-' unary | power
//! power   := primary ['^' ['-'] int]
//! primary := int | ident | 'u' '[' int ',' int ']' | ident '(' args ')'
//!          | 'd' '(' ident ';' int (',' int)* ')' '(' args ')' | '(' expr ')'
//! ```
//!
//! Identifiers `x`, `y`, `t` are the independent variables, identifiers
//! followed by `(` are functions (which must be declared in the [`Context`])
//! and every other identifier is a symbolic constant.

mod lexer;

use std::collections::BTreeMap;
use std::ops::Range;

use crate::error::{Error, Result};
use crate::expr::{Expr, FnAtom, Rational, EXP};
use crate::jet::EvolutionEquation;

use lexer::{tokenize, Tok, Token};

/// Declared function arities. `exp/1` is always present.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Context {
    arities: BTreeMap<String, usize>,
}

impl Default for Context {
    fn default() -> Context {
        Context::new()
    }
}

impl Context {
    pub fn new() -> Context {
        Context {
            arities: BTreeMap::from([(EXP.to_string(), 1)]),
        }
    }

    /// Declares `name` with the given arity; redeclaring with a different
    /// arity is an error.
    pub fn declare(&mut self, name: &str, arity: usize) -> Result<()> {
        match self.arities.get(name) {
            Some(&a) if a != arity => Err(Error::Arity {
                name: name.to_string(),
                expected: a,
                found: arity,
            }),
            _ => {
                self.arities.insert(name.to_string(), arity);
                Ok(())
            }
        }
    }

    /// Parses a `NAME/ARITY` declaration.
    pub fn declare_spec(&mut self, spec: &str) -> Result<()> {
        let bad = || Error::Syntax {
            message: format!("expected NAME/ARITY, found `{spec}`"),
            span: 0..spec.len(),
        };
        let (name, arity) = spec.split_once('/').ok_or_else(bad)?;
        let arity: usize = arity.trim().parse().map_err(|_| bad())?;
        self.declare(name.trim(), arity)
    }

    /// A context declaring every function that occurs in `e`.
    pub fn from_expr(e: &Expr) -> Context {
        let mut ctx = Context::new();
        for (name, arity) in e.function_names() {
            ctx.arities.insert(name, arity);
        }
        ctx
    }

    pub fn arity(&self, name: &str) -> Option<usize> {
        self.arities.get(name).copied()
    }
}

pub fn parse(text: &str, ctx: &Context) -> Result<Expr> {
    let mut p = Parser::new(text, ctx)?;
    let e = p.expr()?;
    p.expect_end()?;
    Ok(e)
}

pub fn print(e: &Expr) -> String {
    e.to_string()
}

/// Parses `gir(a=<expr>, f=<name|expr>)` or `rhs=<expr>`.
///
/// A bare identifier for `f` declares an opaque `f(u[0,0], u[1,0])`.
pub fn parse_equation(text: &str, ctx: &mut Context) -> Result<EvolutionEquation> {
    let spec_err = |m: &str| Error::EquationSpec(format!("{m} in `{}`", text.trim()));
    let toks = tokenize(text)?;
    match toks.first().map(|t| &t.tok) {
        Some(Tok::Ident(w)) if w == "rhs" => {
            if toks.get(1).map(|t| &t.tok) != Some(&Tok::Equals) {
                return Err(spec_err("expected `rhs=`"));
            }
            let rest = &text[toks[1].span.end..];
            let rhs = parse(rest, ctx).map_err(|e| shift(e, toks[1].span.end))?;
            Ok(EvolutionEquation::new(rhs, text.trim()))
        }
        Some(Tok::Ident(w)) if w == "gir" => {
            let mut p = Parser::from_tokens(toks, ctx.clone());
            p.pos = 1;
            p.eat(&Tok::LParen)
                .map_err(|_| spec_err("expected `(` after gir"))?;
            p.keyword("a").map_err(|_| spec_err("expected `a=`"))?;
            p.eat(&Tok::Equals).map_err(|_| spec_err("expected `a=`"))?;
            let a = p.expr()?;
            p.eat(&Tok::Comma)
                .map_err(|_| spec_err("expected `,` before f"))?;
            p.keyword("f").map_err(|_| spec_err("expected `f=`"))?;
            p.eat(&Tok::Equals).map_err(|_| spec_err("expected `f=`"))?;
            let fnspec = match (&p.peek().tok, p.ahead(1)) {
                (Tok::Ident(name), Tok::RParen) if !is_reserved(name) => Some(name.clone()),
                _ => None,
            };
            let eq = if let Some(name) = fnspec {
                p.pos += 1;
                ctx.declare(&name, 2)?;
                EvolutionEquation::gir_opaque(a, &name)?
            } else {
                let f = p.expr()?;
                EvolutionEquation::gir(a, f)?
            };
            p.eat(&Tok::RParen).map_err(|_| spec_err("expected `)`"))?;
            p.expect_end()?;
            for (name, arity) in eq.rhs().function_names() {
                if ctx.arity(&name).is_none() {
                    ctx.declare(&name, arity)?;
                }
            }
            Ok(eq)
        }
        _ => Err(spec_err("expected `gir(a=..., f=...)` or `rhs=...`")),
    }
}

fn shift(e: Error, by: usize) -> Error {
    let mv = |s: Range<usize>| s.start + by..s.end + by;
    match e {
        Error::Syntax { message, span } => Error::Syntax {
            message,
            span: mv(span),
        },
        Error::UnknownFunction { name, span } => Error::UnknownFunction {
            name,
            span: mv(span),
        },
        other => other,
    }
}

fn is_reserved(name: &str) -> bool {
    matches!(name, "x" | "y" | "t" | "u")
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    ctx: Context,
}

impl Parser {
    fn new(text: &str, ctx: &Context) -> Result<Parser> {
        Ok(Parser::from_tokens(tokenize(text)?, ctx.clone()))
    }

    fn from_tokens(toks: Vec<Token>, ctx: Context) -> Parser {
        Parser { toks, pos: 0, ctx }
    }

    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn ahead(&self, k: usize) -> &Tok {
        let last = self.toks.len() - 1;
        &self.toks[(self.pos + k).min(last)].tok
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, message: impl Into<String>, span: Range<usize>) -> Result<T> {
        Err(Error::Syntax {
            message: message.into(),
            span,
        })
    }

    fn describe(tok: &Tok) -> String {
        match tok {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Int(n) => format!("`{n}`"),
            Tok::End => "end of input".into(),
            other => format!("{other:?}"),
        }
    }

    fn eat(&mut self, want: &Tok) -> Result<Range<usize>> {
        let t = self.peek().clone();
        if &t.tok == want {
            self.next();
            Ok(t.span)
        } else {
            self.error(
                format!(
                    "expected {}, found {}",
                    Self::describe(want),
                    Self::describe(&t.tok)
                ),
                t.span,
            )
        }
    }

    fn keyword(&mut self, word: &str) -> Result<()> {
        match &self.peek().tok {
            Tok::Ident(w) if w == word => {
                self.next();
                Ok(())
            }
            other => {
                let m = format!("expected `{word}`, found {}", Self::describe(other));
                self.error(m, self.peek().span.clone())
            }
        }
    }

    fn expect_end(&self) -> Result<()> {
        let t = self.peek();
        if t.tok == Tok::End {
            Ok(())
        } else {
            self.error(
                format!("unexpected {}", Self::describe(&t.tok)),
                t.span.clone(),
            )
        }
    }

    fn int(&mut self) -> Result<u32> {
        let t = self.next();
        match t.tok {
            Tok::Int(n) => u32::try_from(&n).or_else(|_| self.error("integer too large", t.span)),
            other => self.error(
                format!("expected an integer, found {}", Self::describe(&other)),
                t.span,
            ),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut acc = match self.peek().tok {
            Tok::Plus => {
                self.next();
                self.product()?
            }
            Tok::Minus => {
                self.next();
                -self.product()?
            }
            _ => self.product()?,
        };
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.next();
                    acc = acc + self.product()?;
                }
                Tok::Minus => {
                    self.next();
                    acc = acc - self.product()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<Expr> {
        let mut acc = self.unary()?;
        loop {
            match self.peek().tok {
                Tok::Star => {
                    self.next();
                    acc = acc * self.unary()?;
                }
                Tok::Slash => {
                    self.next();
                    let start = self.peek().span.start;
                    let den = self.unary()?;
                    let span = start..self.toks[self.pos.saturating_sub(1)].span.end;
                    if den.is_zero() {
                        return self.error("division by zero", span);
                    }
                    match den.try_inverse() {
                        Ok(inv) => acc = acc * inv,
                        Err(_) => {
                            return self.error(
                                format!("cannot divide by `{den}`: only rationals and symbolic constants are invertible"),
                                span,
                            )
                        }
                    }
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.peek().tok == Tok::Minus {
            self.next();
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let start = self.peek().span.start;
        let base = self.primary()?;
        if self.peek().tok != Tok::Caret {
            return Ok(base);
        }
        self.next();
        let negative = if self.peek().tok == Tok::Minus {
            self.next();
            true
        } else {
            false
        };
        let t = self.next();
        let Tok::Int(n) = t.tok else {
            return self.error("expected an integer exponent", t.span);
        };
        let n = i32::try_from(&n).or_else(|_| self.error("exponent too large", t.span.clone()))?;
        let exp = if negative { -n } else { n };
        base.pow(exp)
            .or_else(|e| self.error(e.to_string(), start..t.span.end))
    }

    fn primary(&mut self) -> Result<Expr> {
        let t = self.next();
        match t.tok {
            Tok::Int(n) => Ok(Expr::from_rational(Rational::from_integer(n))),
            Tok::LParen => {
                let e = self.expr()?;
                self.eat(&Tok::RParen)?;
                Ok(e)
            }
            Tok::Ident(name) => self.identifier(name, t.span),
            other => self.error(format!("unexpected {}", Self::describe(&other)), t.span),
        }
    }

    fn identifier(&mut self, name: String, span: Range<usize>) -> Result<Expr> {
        let followed_by = |p: &Parser, tok: &Tok| &p.peek().tok == tok;
        match name.as_str() {
            "x" => return Ok(Expr::x()),
            "y" => return Ok(Expr::y()),
            "t" => return Ok(Expr::t()),
            "u" => {
                if !followed_by(self, &Tok::LBracket) {
                    return self.error("expected `u[i,j]`", span);
                }
                self.next();
                let i = self.int()?;
                self.eat(&Tok::Comma)?;
                let j = self.int()?;
                self.eat(&Tok::RBracket)?;
                return Ok(Expr::u(i, j));
            }
            "d" if followed_by(self, &Tok::LParen)
                && matches!(self.ahead(1), Tok::Ident(_))
                && self.ahead(2) == &Tok::Semi =>
            {
                self.next();
                let t = self.next();
                let Tok::Ident(fname) = t.tok else {
                    unreachable!()
                };
                self.eat(&Tok::Semi)?;
                let mut deriv = vec![self.int()?];
                while self.peek().tok == Tok::Comma {
                    self.next();
                    deriv.push(self.int()?);
                }
                self.eat(&Tok::RParen)?;
                return self.application(&fname, Some(deriv), t.span);
            }
            _ => {}
        }
        if followed_by(self, &Tok::LParen) {
            return self.application(&name, None, span);
        }
        Ok(Expr::constant(&name))
    }

    fn application(
        &mut self,
        name: &str,
        deriv: Option<Vec<u32>>,
        span: Range<usize>,
    ) -> Result<Expr> {
        let Some(arity) = self.ctx.arity(name) else {
            return Err(Error::UnknownFunction {
                name: name.to_string(),
                span,
            });
        };
        if is_reserved(name) {
            return self.error(format!("`{name}` cannot name a function"), span);
        }
        self.eat(&Tok::LParen)?;
        let mut args = Vec::new();
        if self.peek().tok != Tok::RParen {
            args.push(self.expr()?);
            while self.peek().tok == Tok::Comma {
                self.next();
                args.push(self.expr()?);
            }
        }
        self.eat(&Tok::RParen)?;
        if args.len() != arity {
            return Err(Error::Arity {
                name: name.to_string(),
                expected: arity,
                found: args.len(),
            });
        }
        if let Some(d) = &deriv {
            if d.len() != arity {
                return self.error(
                    format!(
                        "derivative index of `{name}` has {} entries, expected {arity}",
                        d.len()
                    ),
                    span,
                );
            }
        }
        let deriv = deriv.unwrap_or_else(|| vec![0; arity]);
        Ok(Expr::atom(FnAtom::new(name, deriv, args)?))
    }
}
