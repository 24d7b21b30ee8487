//! Canonical text form. `parse(pretty(p)) == p` up to spans, and canonical
//! files print back to themselves byte for byte.

use std::fmt::Write as _;

use super::ast::*;
use crate::vect::{format_q, Q};

pub fn program(p: &Program) -> String {
    let mut out = String::new();
    trivia(&mut out, &p.leading);
    let _ = writeln!(out, "instance {}", header(&p.instance));
    for item in &p.items {
        trivia(&mut out, &item.trivia);
        out.push_str(&self::item(&item.kind));
        out.push('\n');
    }
    if !p.trailing.is_empty() {
        trivia(&mut out, &p.trailing);
    }
    out
}

fn header(i: &InstanceDecl) -> String {
    match &i.q {
        Some(q) => format!("{}(q={})", i.name, format_q(q)),
        None => i.name.clone(),
    }
}

fn trivia(out: &mut String, ts: &[Trivia]) {
    for t in ts {
        match t {
            Trivia::Blank => out.push('\n'),
            Trivia::Comment(c) if c.is_empty() => out.push_str("#\n"),
            Trivia::Comment(c) => {
                let _ = writeln!(out, "# {c}");
            }
        }
    }
}

pub fn item(kind: &ItemKind) -> String {
    match kind {
        ItemKind::Decl { sort, name, annot, value, .. } => match annot {
            Some((dom, cod)) => format!("{} {name} : {} -> {} = {};", sort.keyword(), expr(dom), expr(cod), expr(value)),
            None => format!("{} {name} = {};", sort.keyword(), expr(value)),
        },
        ItemKind::Print(e) => format!("print {};", expr(e)),
        ItemKind::AssertEqual(a, b) => format!("assert_equal({}, {});", expr(a), expr(b)),
    }
}

fn prec(e: &Expr) -> u8 {
    match e.kind {
        ExprKind::Compose { .. } => 1,
        ExprKind::Tensor(..) => 2,
        _ => 3,
    }
}

/// `e` printed so that it reparses at precedence `min`.
fn at(e: &Expr, min: u8) -> String {
    if prec(e) < min {
        format!("({})", expr(e))
    } else {
        expr(e)
    }
}

fn num(q: &Q) -> String {
    format_q(q)
}

pub fn expr(e: &Expr) -> String {
    match &e.kind {
        ExprKind::Name(n) => n.clone(),
        ExprKind::Unit => "I".into(),
        ExprKind::Number(q) => num(q),
        ExprKind::Matrix(rows) => {
            let rows: Vec<String> = rows
                .iter()
                .map(|r| format!("[{}]", r.iter().map(num).collect::<Vec<_>>().join(", ")))
                .collect();
            format!("[{}]", rows.join(", "))
        }
        ExprKind::Graded(entries) if entries.is_empty() => "graded{}".into(),
        ExprKind::Graded(entries) => {
            let parts: Vec<String> = entries.iter().map(|(d, n)| format!("{d}: {n}")).collect();
            format!("graded{{ {} }}", parts.join(", "))
        }
        ExprKind::Points(labels) => format!("pts{{{}}}", labels.join(",")),
        ExprKind::Iso(pairs) => {
            let parts: Vec<String> = pairs.iter().map(|(a, b)| format!("{a}->{b}")).collect();
            format!("iso{{{}}}", parts.join(", "))
        }
        ExprKind::Bord(entries) if entries.is_empty() => "bord{}".into(),
        ExprKind::Bord(entries) => {
            let parts: Vec<String> = entries
                .iter()
                .map(|en| match en {
                    BordEntry::Through(a, b, l) => format!("{a}->{b} : {}", num(l)),
                    BordEntry::In(a, b, l) => format!("in({a},{b}) : {}", num(l)),
                    BordEntry::Out(a, b, l) => format!("out({a},{b}) : {}", num(l)),
                    BordEntry::Loop(l) => format!("loop: {}", num(l)),
                })
                .collect();
            format!("bord{{ {} }}", parts.join(", "))
        }
        ExprKind::Call(b, args) => {
            let args: Vec<String> = args.iter().map(expr).collect();
            format!("{}({})", b.name(), args.join(", "))
        }
        // left-associative: the inner (left) side may itself be a composition
        ExprKind::Compose { outer, inner } => format!("{} ; {}", at(inner, 1), at(outer, 2)),
        ExprKind::Tensor(a, b) => format!("{} * {}", at(a, 2), at(b, 3)),
    }
}

#[cfg(test)]
mod tests {
    use super::super::parser::{parse, parse_expr};
    use super::*;

    fn strip(e: &Expr) -> String {
        format!("{:?}", e.kind).replace(char::is_whitespace, "")
    }

    #[test]
    fn parentheses_only_where_needed() {
        for src in ["f ; g ; h", "f ; (g ; h)", "(f ; g) * h", "f * (g * h)", "f * g ; h", "-3/2 * psi(T)"] {
            let e = parse_expr(src).unwrap();
            assert_eq!(expr(&e), src);
            assert_eq!(strip(&parse_expr(&expr(&e)).unwrap()), strip(&e));
        }
    }

    #[test]
    fn redundant_parentheses_are_dropped() {
        assert_eq!(expr(&parse_expr("((f) ; g)").unwrap()), "f ; g");
    }

    #[test]
    fn program_layout_survives() {
        let src = "# demo\ninstance graded(q=3)\n\n# X\nobj X = graded{ -1: 2, 0: 1 };\nmor f : X -> X = id(X);\n\nprint trace(f);\n# done\n";
        assert_eq!(program(&parse(src).unwrap()), src);
    }
}
