//! Recursive-descent parser.
//!
//! ```text
//! prog   := header item*                       (declarations before commands)
//! header := "instance" NAME ("(" "q" "=" number ")")? ";"?
//! item   := ("obj" | "triple") NAME "=" expr ";"
//!         | "mor" NAME (":" expr "->" expr)? "=" expr ";"
//!         | "print" expr ";"
//!         | "assert_equal" "(" expr "," expr ")" ";"
//! expr   := tensor (";" tensor)*
//! tensor := atom ("*" atom)*
//! ```

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;

use super::ast::*;
use super::lexer::{tokenize, Comment, Tok, Token};
use super::{DslError, Span};
use crate::vect::Q;

const INSTANCES: [&str; 4] = ["finvect", "supervect", "graded", "rbord1"];
const ITEM_KEYWORDS: [&str; 5] = ["obj", "mor", "triple", "print", "assert_equal"];

pub fn parse(text: &str) -> Result<Program, DslError> {
    let lexed = tokenize(text)?;
    let mut p = Parser { toks: lexed.tokens, pos: 0 };
    let instance = p.header()?;
    let mut items = Vec::new();
    let mut seen_command = false;
    while p.peek() != &Tok::Eof {
        let item = p.item()?;
        let is_decl = matches!(item.kind, ItemKind::Decl { .. });
        if is_decl && seen_command {
            return Err(DslError::parse(
                item.span,
                "declarations must come before commands".into(),
                ["`print`", "`assert_equal`"].iter().map(|s| s.to_string()).collect(),
            ));
        }
        seen_command |= !is_decl;
        items.push(item);
    }
    Ok(attach_trivia(instance, items, &lexed.comments))
}

/// Parses a single expression, for tests and the REPL-style helpers.
pub fn parse_expr(text: &str) -> Result<Expr, DslError> {
    let lexed = tokenize(text)?;
    let mut p = Parser { toks: lexed.tokens, pos: 0 };
    let e = p.expr()?;
    p.expect(&Tok::Eof)?;
    Ok(e)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

fn ident_is(tok: &Tok, word: &str) -> bool {
    matches!(tok, Tok::Ident(s) if s == word)
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].tok
    }

    fn span(&self) -> Span {
        self.toks[self.pos].span
    }

    fn prev_span(&self) -> Span {
        self.toks[self.pos.saturating_sub(1)].span
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, expected: &[&str]) -> DslError {
        let found = self.peek().to_string();
        DslError::parse(
            self.span(),
            format!("unexpected {found}"),
            expected.iter().map(|s| s.to_string()).collect(),
        )
    }

    fn expect(&mut self, tok: &Tok) -> Result<Span, DslError> {
        if self.peek() == tok {
            Ok(self.bump().span)
        } else {
            Err(self.unexpected(&[&tok.to_string()]))
        }
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == tok {
            self.bump();
            true
        } else {
            false
        }
    }

    fn ident(&mut self) -> Result<(String, Span), DslError> {
        match self.peek().clone() {
            Tok::Ident(s) => Ok((s, self.bump().span)),
            _ => Err(self.unexpected(&["identifier"])),
        }
    }

    fn keyword(&mut self, word: &str) -> Result<Span, DslError> {
        if ident_is(self.peek(), word) {
            Ok(self.bump().span)
        } else {
            Err(self.unexpected(&[&format!("`{word}`")]))
        }
    }

    fn header(&mut self) -> Result<InstanceDecl, DslError> {
        let start = self.keyword("instance")?;
        let name = match self.peek() {
            Tok::Ident(s) if INSTANCES.contains(&s.as_str()) => s.clone(),
            _ => {
                let expected: Vec<String> = INSTANCES.iter().map(|s| format!("`{s}`")).collect();
                let refs: Vec<&str> = expected.iter().map(String::as_str).collect();
                return Err(self.unexpected(&refs));
            }
        };
        self.bump();
        let mut q = None;
        if name == "graded" && self.eat(&Tok::LParen) {
            self.keyword("q")?;
            self.expect(&Tok::Eq)?;
            q = Some(self.number()?.0);
            self.expect(&Tok::RParen)?;
        }
        let span = start.join(self.prev_span());
        self.eat(&Tok::Semi);
        Ok(InstanceDecl { name, q, span })
    }

    fn item(&mut self) -> Result<Item, DslError> {
        let start = self.span();
        let word = match self.peek() {
            Tok::Ident(s) if ITEM_KEYWORDS.contains(&s.as_str()) => s.clone(),
            _ => {
                let expected: Vec<String> = ITEM_KEYWORDS.iter().map(|s| format!("`{s}`")).collect();
                let refs: Vec<&str> = expected.iter().map(String::as_str).collect();
                return Err(self.unexpected(&refs));
            }
        };
        self.bump();
        let kind = match word.as_str() {
            "print" => ItemKind::Print(self.expr()?),
            "assert_equal" => {
                self.expect(&Tok::LParen)?;
                let a = self.expr()?;
                self.expect(&Tok::Comma)?;
                let b = self.expr()?;
                self.expect(&Tok::RParen)?;
                ItemKind::AssertEqual(a, b)
            }
            kw => {
                let sort = match kw {
                    "obj" => Sort::Obj,
                    "mor" => Sort::Mor,
                    _ => Sort::Triple,
                };
                let (name, name_span) = self.ident()?;
                let annot = if sort == Sort::Mor && self.eat(&Tok::Colon) {
                    let dom = self.expr()?;
                    self.expect(&Tok::Arrow)?;
                    Some((dom, self.expr()?))
                } else {
                    None
                };
                if self.peek() != &Tok::Eq {
                    return Err(self.unexpected(if sort == Sort::Mor && annot.is_none() {
                        &["`:`", "`=`"]
                    } else {
                        &["`=`"]
                    }));
                }
                self.bump();
                let value = self.expr()?;
                ItemKind::Decl { sort, name, name_span, annot, value }
            }
        };
        if self.peek() != &Tok::Semi {
            return Err(self.unexpected(&["`;`", "`*`"]));
        }
        let end = self.bump().span;
        Ok(Item { trivia: Vec::new(), kind, span: start.join(end) })
    }

    /// Items end in `;`, so a `;` followed by an item keyword or the end of
    /// input closes the item instead of continuing a composition.
    fn semi_continues(&self) -> bool {
        if self.peek() != &Tok::Semi {
            return false;
        }
        match self.peek_at(1) {
            Tok::Eof => false,
            // `triple(...)` is also a builtin call
            Tok::Ident(s) if s == "triple" => self.peek_at(2) == &Tok::LParen,
            Tok::Ident(s) if ITEM_KEYWORDS.contains(&s.as_str()) => false,
            _ => true,
        }
    }

    pub fn expr(&mut self) -> Result<Expr, DslError> {
        let mut acc = self.tensor()?;
        while self.semi_continues() {
            self.bump();
            let next = self.tensor()?;
            let span = acc.span.join(next.span);
            acc = Expr { kind: ExprKind::Compose { outer: Box::new(next), inner: Box::new(acc) }, span };
        }
        Ok(acc)
    }

    fn tensor(&mut self) -> Result<Expr, DslError> {
        let mut acc = self.atom()?;
        while self.eat(&Tok::Star) {
            let next = self.atom()?;
            let span = acc.span.join(next.span);
            acc = Expr { kind: ExprKind::Tensor(Box::new(acc), Box::new(next)), span };
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Expr, DslError> {
        let start = self.span();
        let kind = match self.peek().clone() {
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(&Tok::RParen)?;
                return Ok(e);
            }
            Tok::Minus | Tok::Int(_) => ExprKind::Number(self.number()?.0),
            Tok::LBracket => ExprKind::Matrix(self.matrix()?),
            Tok::Ident(name) => {
                let brace = self.peek_at(1) == &Tok::LBrace;
                match name.as_str() {
                    "I" => {
                        self.bump();
                        ExprKind::Unit
                    }
                    "graded" if brace => self.graded()?,
                    "pts" if brace => self.points()?,
                    "bord" if brace => self.bord()?,
                    "iso" if brace => self.iso()?,
                    _ if self.peek_at(1) == &Tok::LParen => self.call(&name)?,
                    _ => {
                        self.bump();
                        ExprKind::Name(name)
                    }
                }
            }
            _ => return Err(self.unexpected(&["identifier", "number", "`(`", "`[`"])),
        };
        Ok(Expr { kind, span: start.join(self.prev_span()) })
    }

    fn call(&mut self, name: &str) -> Result<ExprKind, DslError> {
        let span = self.span();
        let builtin = Builtin::lookup(name).ok_or_else(|| {
            DslError::parse(span, format!("unknown function `{name}`"), BTreeSet::new())
        })?;
        self.bump();
        self.expect(&Tok::LParen)?;
        let mut args = Vec::new();
        if self.peek() != &Tok::RParen {
            loop {
                args.push(self.expr()?);
                if !self.eat(&Tok::Comma) {
                    break;
                }
            }
        }
        if self.peek() != &Tok::RParen {
            return Err(self.unexpected(&["`,`", "`)`"]));
        }
        self.bump();
        if args.len() != builtin.arity() {
            return Err(DslError::parse(
                span.join(self.prev_span()),
                format!("`{name}` takes {} arguments, got {}", builtin.arity(), args.len()),
                BTreeSet::new(),
            ));
        }
        Ok(ExprKind::Call(builtin, args))
    }

    fn integer(&mut self) -> Result<(BigInt, Span), DslError> {
        let start = self.span();
        let neg = self.eat(&Tok::Minus);
        match self.peek().clone() {
            Tok::Int(digits) => {
                self.bump();
                let n: BigInt = digits.parse().expect("lexer only emits digits");
                Ok((if neg { -n } else { n }, start.join(self.prev_span())))
            }
            _ => Err(self.unexpected(&["integer"])),
        }
    }

    fn number(&mut self) -> Result<(Q, Span), DslError> {
        let (n, span) = self.integer()?;
        if !self.eat(&Tok::Slash) {
            return Ok((Q::from_integer(n), span));
        }
        let d = match self.peek().clone() {
            Tok::Int(digits) => {
                self.bump();
                digits.parse::<BigInt>().expect("lexer only emits digits")
            }
            _ => return Err(self.unexpected(&["integer"])),
        };
        let span = span.join(self.prev_span());
        if d.is_zero() {
            return Err(DslError::parse(span, "zero denominator".into(), BTreeSet::new()));
        }
        Ok((Q::new(n, d), span))
    }

    fn small_int<T: TryFrom<BigInt>>(&mut self) -> Result<T, DslError> {
        let (n, span) = self.integer()?;
        T::try_from(n).map_err(|_| DslError::parse(span, "integer out of range".into(), BTreeSet::new()))
    }

    fn matrix(&mut self) -> Result<Vec<Vec<Q>>, DslError> {
        self.expect(&Tok::LBracket)?;
        let mut rows = Vec::new();
        loop {
            self.expect(&Tok::LBracket)?;
            let mut row = vec![self.number()?.0];
            while self.eat(&Tok::Comma) {
                row.push(self.number()?.0);
            }
            if self.peek() != &Tok::RBracket {
                return Err(self.unexpected(&["`,`", "`]`"]));
            }
            self.bump();
            rows.push(row);
            if !self.eat(&Tok::Comma) {
                break;
            }
        }
        if self.peek() != &Tok::RBracket {
            return Err(self.unexpected(&["`,`", "`]`"]));
        }
        self.bump();
        Ok(rows)
    }

    /// `{ item, item, ... }` with possibly no items.
    fn braced<T>(&mut self, mut each: impl FnMut(&mut Self) -> Result<T, DslError>) -> Result<Vec<T>, DslError> {
        self.bump();
        self.expect(&Tok::LBrace)?;
        let mut out = Vec::new();
        if self.eat(&Tok::RBrace) {
            return Ok(out);
        }
        loop {
            out.push(each(self)?);
            if !self.eat(&Tok::Comma) {
                break;
            }
        }
        if self.peek() != &Tok::RBrace {
            return Err(self.unexpected(&["`,`", "`}`"]));
        }
        self.bump();
        Ok(out)
    }

    fn graded(&mut self) -> Result<ExprKind, DslError> {
        let entries = self.braced(|p| {
            let degree = p.small_int::<i64>()?;
            p.expect(&Tok::Colon)?;
            let dim = p.small_int::<usize>()?;
            Ok((degree, dim))
        })?;
        Ok(ExprKind::Graded(entries))
    }

    fn points(&mut self) -> Result<ExprKind, DslError> {
        Ok(ExprKind::Points(self.braced(|p| Ok(p.ident()?.0))?))
    }

    fn iso(&mut self) -> Result<ExprKind, DslError> {
        let pairs = self.braced(|p| {
            let a = p.ident()?.0;
            p.expect(&Tok::Arrow)?;
            Ok((a, p.ident()?.0))
        })?;
        Ok(ExprKind::Iso(pairs))
    }

    fn bord(&mut self) -> Result<ExprKind, DslError> {
        let entries = self.braced(|p| {
            let (word, _) = p.ident()?;
            let entry = match word.as_str() {
                "loop" => {
                    p.expect(&Tok::Colon)?;
                    return Ok(BordEntry::Loop(p.number()?.0));
                }
                "in" | "out" if p.peek() == &Tok::LParen => {
                    p.bump();
                    let a = p.ident()?.0;
                    p.expect(&Tok::Comma)?;
                    let b = p.ident()?.0;
                    p.expect(&Tok::RParen)?;
                    p.expect(&Tok::Colon)?;
                    let len = p.number()?.0;
                    if word == "in" {
                        BordEntry::In(a, b, len)
                    } else {
                        BordEntry::Out(a, b, len)
                    }
                }
                _ => {
                    p.expect(&Tok::Arrow)?;
                    let b = p.ident()?.0;
                    p.expect(&Tok::Colon)?;
                    BordEntry::Through(word, b, p.number()?.0)
                }
            };
            Ok(entry)
        })?;
        Ok(ExprKind::Bord(entries))
    }
}

/// Attaches each comment to the item that follows it and records blank
/// lines, so that pretty-printing reproduces the layout. Comments inside an
/// item are dropped.
fn attach_trivia(instance: InstanceDecl, mut items: Vec<Item>, comments: &[Comment]) -> Program {
    fn gather(comments: &[Comment], after: usize, before: usize, mut prev: usize) -> Vec<Trivia> {
        let mut out = Vec::new();
        for c in comments.iter().filter(|c| c.line > after && c.line < before) {
            if prev > 0 && c.line > prev + 1 {
                out.push(Trivia::Blank);
            }
            out.push(Trivia::Comment(c.text.clone()));
            prev = c.line;
        }
        out
    }
    let leading = gather(comments, 0, instance.span.line, 0);
    let mut prev = instance.span.end_line;
    for item in &mut items {
        let mut trivia = gather(comments, prev, item.span.line, prev);
        let last = comments
            .iter()
            .filter(|c| c.line > prev && c.line < item.span.line)
            .map(|c| c.line)
            .next_back()
            .unwrap_or(prev);
        if item.span.line > last + 1 {
            trivia.push(Trivia::Blank);
        }
        item.trivia = trivia;
        prev = item.span.end_line;
    }
    let trailing = gather(comments, prev, usize::MAX, prev);
    Program { leading, instance, items, trailing }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(e: &Expr) -> String {
        match &e.kind {
            ExprKind::Name(n) => n.clone(),
            ExprKind::Compose { outer, inner } => format!("Compose({}, {})", shape(outer), shape(inner)),
            ExprKind::Tensor(a, b) => format!("Tensor({}, {})", shape(a), shape(b)),
            ExprKind::Call(b, args) => {
                let args: Vec<String> = args.iter().map(shape).collect();
                format!("{:?}({})", b, args.join(", "))
            }
            other => format!("{other:?}"),
        }
    }

    #[test]
    fn semicolon_is_diagrammatic_order() {
        assert_eq!(shape(&parse_expr("id(X) ; f").unwrap()), "Compose(f, Id(X))");
    }

    #[test]
    fn tensor_binds_tighter() {
        assert_eq!(shape(&parse_expr("f * g ; h").unwrap()), "Compose(h, Tensor(f, g))");
        assert_eq!(shape(&parse_expr("f * (g ; h)").unwrap()), "Tensor(f, Compose(h, g))");
    }

    #[test]
    fn unbalanced_bracket_points_at_the_column() {
        let e = parse("instance finvect\nprint (f ; g;\n").unwrap_err();
        assert_eq!((e.span.line, e.span.col), (2, 13));
        assert!(e.to_string().contains("`)`"), "{e}");
        let e = parse("instance finvect\nprint (f ; g));\n").unwrap_err();
        assert_eq!((e.span.line, e.span.col), (2, 14));
        assert!(e.to_string().contains("`;`"), "{e}");
    }

    #[test]
    fn expected_sets_are_reported() {
        let e = parse("instance finvect\nmor f X = id(I);").unwrap_err();
        match &e.kind {
            super::super::DslErrorKind::Parse { expected } => {
                assert!(expected.contains("`:`") && expected.contains("`=`"));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn literals() {
        let e = parse_expr("bord{ x->y : 3, in(a,b) : 1/2, loop: 2 }").unwrap();
        assert!(matches!(e.kind, ExprKind::Bord(ref v) if v.len() == 3));
        let e = parse_expr("graded{ -1: 2, 0: 1 }").unwrap();
        assert_eq!(e.kind, ExprKind::Graded(vec![(-1, 2), (0, 1)]));
        let e = parse_expr("[[1, 2], [3/2, -1]]").unwrap();
        assert!(matches!(e.kind, ExprKind::Matrix(ref m) if m.len() == 2));
        assert!(parse_expr("frob(X)").is_err());
        assert!(parse_expr("id(X, Y)").is_err());
    }

    #[test]
    fn header_with_q_and_trivia() {
        let p = parse("# top\ninstance graded(q=3)\n\n# first\nobj X = graded{ 1: 1 };\nprint X;\n# end\n").unwrap();
        assert_eq!(p.instance.spec(), "graded(q=3)");
        assert_eq!(p.leading, vec![Trivia::Comment("top".into())]);
        assert_eq!(p.items[0].trivia, vec![Trivia::Blank, Trivia::Comment("first".into())]);
        assert!(p.items[1].trivia.is_empty());
        assert_eq!(p.trailing, vec![Trivia::Comment("end".into())]);
    }

    #[test]
    fn declarations_precede_commands() {
        assert!(parse("instance finvect\nprint I;\nobj X = vec(2);\n").is_err());
    }
}
