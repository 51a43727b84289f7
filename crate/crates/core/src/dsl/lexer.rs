use std::ops::Range;

use num_bigint::BigInt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub enum Tok {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Semi,
    Equals,
    End,
}

#[derive(Clone, Debug)]
pub struct Token {
    pub tok: Tok,
    pub span: Range<usize>,
}

fn is_ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '_'
}

fn is_ident_continue(c: char) -> bool {
    c.is_alphanumeric() || c == '_'
}

pub fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(start, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        if c.is_ascii_digit() {
            let mut end = start;
            while let Some(&(k, d)) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                end = k + d.len_utf8();
                chars.next();
            }
            let n: BigInt = text[start..end].parse().expect("digits");
            out.push(Token {
                tok: Tok::Int(n),
                span: start..end,
            });
            continue;
        }
        if is_ident_start(c) {
            let mut end = start;
            while let Some(&(k, d)) = chars.peek() {
                if !is_ident_continue(d) {
                    break;
                }
                end = k + d.len_utf8();
                chars.next();
            }
            out.push(Token {
                tok: Tok::Ident(text[start..end].to_string()),
                span: start..end,
            });
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' | '−' => Tok::Minus,
            '*' | '·' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            ',' => Tok::Comma,
            ';' => Tok::Semi,
            '=' => Tok::Equals,
            other => {
                return Err(Error::Syntax {
                    message: format!("unexpected character `{other}`"),
                    span: start..start + other.len_utf8(),
                })
            }
        };
        chars.next();
        out.push(Token {
            tok,
            span: start..start + c.len_utf8(),
        });
    }
    out.push(Token {
        tok: Tok::End,
        span: text.len()..text.len(),
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens_and_spans() {
        let toks = tokenize("u[1,0]^2 - c_1").unwrap();
        let kinds: Vec<Tok> = toks.iter().map(|t| t.tok.clone()).collect();
        assert_eq!(kinds[0], Tok::Ident("u".into()));
        assert_eq!(kinds[1], Tok::LBracket);
        assert_eq!(toks[8].span, 9..10);
        assert_eq!(kinds.last(), Some(&Tok::End));
        assert!(tokenize("a $ b").is_err());
    }
}
