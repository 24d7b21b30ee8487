use std::fmt;

use super::{DslError, Span};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Int(String),
    Semi,
    Star,
    Comma,
    Colon,
    Arrow,
    Eq,
    Slash,
    Minus,
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Tok::Ident(s) => return write!(f, "`{s}`"),
            Tok::Int(s) => return write!(f, "`{s}`"),
            Tok::Semi => "`;`",
            Tok::Star => "`*`",
            Tok::Comma => "`,`",
            Tok::Colon => "`:`",
            Tok::Arrow => "`->`",
            Tok::Eq => "`=`",
            Tok::Slash => "`/`",
            Tok::Minus => "`-`",
            Tok::LParen => "`(`",
            Tok::RParen => "`)`",
            Tok::LBracket => "`[`",
            Tok::RBracket => "`]`",
            Tok::LBrace => "`{`",
            Tok::RBrace => "`}`",
            Tok::Eof => "end of input",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub tok: Tok,
    pub span: Span,
}

/// A `#` comment running to the end of its line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comment {
    pub text: String,
    pub line: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Lexed {
    pub tokens: Vec<Token>,
    pub comments: Vec<Comment>,
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_continue(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '\''
}

/// Splits `text` into tokens, ending with [`Tok::Eof`]. Columns count
/// characters, starting at 1.
pub fn tokenize(text: &str) -> Result<Lexed, DslError> {
    let mut out = Lexed::default();
    let chars: Vec<char> = text.chars().collect();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let start = (line, col);
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        if c == '#' {
            let begin = i + 1;
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
                col += 1;
            }
            let text: String = chars[begin..i].iter().collect();
            out.comments.push(Comment { text: text.trim().to_string(), line });
            continue;
        }
        let (tok, len) = if is_ident_start(c) {
            let mut j = i;
            while j < chars.len() && is_ident_continue(chars[j]) {
                j += 1;
            }
            (Tok::Ident(chars[i..j].iter().collect()), j - i)
        } else if c.is_ascii_digit() {
            let mut j = i;
            while j < chars.len() && chars[j].is_ascii_digit() {
                j += 1;
            }
            (Tok::Int(chars[i..j].iter().collect()), j - i)
        } else {
            match (c, chars.get(i + 1)) {
                ('-', Some('>')) => (Tok::Arrow, 2),
                ('-', _) => (Tok::Minus, 1),
                (';', _) => (Tok::Semi, 1),
                ('*', _) => (Tok::Star, 1),
                (',', _) => (Tok::Comma, 1),
                (':', _) => (Tok::Colon, 1),
                ('=', _) => (Tok::Eq, 1),
                ('/', _) => (Tok::Slash, 1),
                ('(', _) => (Tok::LParen, 1),
                (')', _) => (Tok::RParen, 1),
                ('[', _) => (Tok::LBracket, 1),
                (']', _) => (Tok::RBracket, 1),
                ('{', _) => (Tok::LBrace, 1),
                ('}', _) => (Tok::RBrace, 1),
                _ => {
                    return Err(DslError::lex(
                        Span::point(line, col),
                        format!("unexpected character {c:?}"),
                    ))
                }
            }
        };
        i += len;
        col += len;
        out.tokens.push(Token { tok, span: Span::new(start.0, start.1, line, col) });
    }
    out.tokens.push(Token { tok: Tok::Eof, span: Span::point(line, col) });
    Ok(out)
}
