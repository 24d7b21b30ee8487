//! Evaluation of a typechecked program.

use std::collections::HashMap;
use std::fmt;

use super::ast::*;
use super::typeck::{build_bordism, core_error, iso_entries, matrix_of, Ty, TypedProgram};
use super::{pretty, DslError, Span};
use crate::dynamic::{describe, AnyMorphism, AnyObject, AnyTriple, Instance};
use crate::vect::{format_q, RatMatrix, Q};

#[derive(Debug, Clone)]
pub enum Value {
    Obj(AnyObject),
    Mor(AnyMorphism),
    Triple(AnyTriple),
    Num(Q),
}

#[derive(Debug, Clone, PartialEq)]
pub struct AssertResult {
    pub span: Span,
    pub passed: bool,
    pub left: String,
    pub right: String,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Line {
    Print { span: Span, source: String, value: String },
    Assert(AssertResult),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub lines: Vec<Line>,
}

impl Outcome {
    pub fn asserts(&self) -> impl Iterator<Item = &AssertResult> {
        self.lines.iter().filter_map(|l| match l {
            Line::Assert(a) => Some(a),
            Line::Print { .. } => None,
        })
    }

    pub fn all_passed(&self) -> bool {
        self.asserts().all(|a| a.passed)
    }

    /// One line per `print` and `assert_equal`, in program order.
    pub fn transcript(&self) -> String {
        let mut out = String::new();
        for line in &self.lines {
            match line {
                Line::Print { source, value, .. } => out.push_str(&format!("{source} = {value}\n")),
                Line::Assert(a) if a.passed => out.push_str(&format!("{}: assert ok: {}\n", a.span, a.left)),
                Line::Assert(a) => {
                    out.push_str(&format!("{}: assert FAILED: {} != {}\n", a.span, a.left, a.right))
                }
            }
        }
        out
    }
}

struct Evaluator<'a> {
    inst: &'a Instance,
    env: HashMap<String, Value>,
}

pub fn evaluate(typed: &TypedProgram) -> Result<Outcome, DslError> {
    let mut ev = Evaluator { inst: &typed.instance, env: HashMap::new() };
    let mut lines = Vec::new();
    let mut bindings = typed.bindings.iter();
    for item in &typed.program.items {
        match &item.kind {
            ItemKind::Decl { name, annot, value, .. } => {
                let v = ev.decl(annot.as_ref(), value)?;
                let binding = bindings.next().expect("one binding per declaration");
                ev.conforms(&v, &binding.ty, item.span)?;
                ev.env.insert(name.clone(), v);
            }
            ItemKind::Print(e) => {
                let v = ev.expr(e)?;
                lines.push(Line::Print { span: item.span, source: pretty::expr(e), value: ev.show(&v) });
            }
            ItemKind::AssertEqual(a, b) => {
                let (va, vb) = (ev.expr(a)?, ev.expr(b)?);
                let passed = ev.equal(&va, &vb, item.span)?;
                lines.push(Line::Assert(AssertResult { span: item.span, passed, left: ev.show(&va), right: ev.show(&vb) }));
            }
        }
    }
    Ok(Outcome { lines })
}

impl Evaluator<'_> {
    fn show(&self, v: &Value) -> String {
        match v {
            Value::Obj(o) => o.to_string(),
            Value::Mor(m) => describe(self.inst, m),
            Value::Triple(t) => t.to_string(),
            Value::Num(q) => format_q(q),
        }
    }

    fn scalar(&self, q: &Q, span: Span) -> Result<AnyMorphism, DslError> {
        let unit = self.inst.unit();
        let m = RatMatrix::from_rows(&[vec![q.clone()]]).expect("1x1");
        self.inst.matrix_morphism(&unit, &unit, m).map_err(|e| core_error(span, e))
    }

    fn equal(&self, a: &Value, b: &Value, span: Span) -> Result<bool, DslError> {
        Ok(match (a, b) {
            (Value::Obj(x), Value::Obj(y)) => x == y,
            (Value::Num(x), Value::Num(y)) => x == y,
            _ => self.inst.mor_equal(&self.mor(a, span)?, &self.mor(b, span)?),
        })
    }

    /// The value must have the type the checker predicted.
    fn conforms(&self, v: &Value, ty: &Ty, span: Span) -> Result<(), DslError> {
        let ok = match (v, ty) {
            (Value::Obj(o), Ty::Obj(t)) => *o == t.val,
            (Value::Num(q), Ty::Num(t)) => q == t,
            (Value::Num(_), Ty::Mor { .. }) => true,
            (Value::Mor(m), Ty::Mor { dom, cod }) => self.inst.source(m) == dom.val && self.inst.target(m) == cod.val,
            (Value::Triple(t), Ty::Triple { dom, cod, z }) => t.dom() == dom.val && t.cod() == cod.val && t.z() == z.val,
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(DslError::eval(span, format!("value {} does not have its checked type {ty}", self.show(v))))
        }
    }

    fn mor(&self, v: &Value, span: Span) -> Result<AnyMorphism, DslError> {
        match v {
            Value::Mor(m) => Ok(m.clone()),
            Value::Num(q) => self.scalar(q, span),
            _ => Err(DslError::eval(span, format!("expected a morphism, found {}", self.show(v)))),
        }
    }

    fn decl(&self, annot: Option<&(Expr, Expr)>, value: &Expr) -> Result<Value, DslError> {
        let Some((d, c)) = annot else {
            return self.expr(value);
        };
        let (dom, cod) = (self.obj(d)?, self.obj(c)?);
        let span = value.span;
        let lift = |r: crate::Result<AnyMorphism>| r.map(Value::Mor).map_err(|e| core_error(span, e));
        match &value.kind {
            ExprKind::Matrix(rows) => lift(self.inst.matrix_morphism(&dom, &cod, matrix_of(rows, span)?)),
            ExprKind::Bord(entries) => self.bord(entries, Some((&dom, &cod)), span),
            ExprKind::Iso(pairs) => self.bord(&iso_entries(pairs), Some((&dom, &cod)), span),
            _ => self.expr(value),
        }
    }

    fn bord(&self, entries: &[BordEntry], ends: Option<(&AnyObject, &AnyObject)>, span: Span) -> Result<Value, DslError> {
        let ends = match ends {
            Some((AnyObject::Points(s), AnyObject::Points(t))) => Some((s, t)),
            Some(_) => return Err(DslError::eval(span, "bordism ends must be point sets")),
            None => None,
        };
        let sigma = build_bordism(entries, ends).map_err(|m| DslError::eval(span, m))?;
        self.inst.bordism(sigma).map(Value::Mor).map_err(|e| core_error(span, e))
    }

    fn obj(&self, e: &Expr) -> Result<AnyObject, DslError> {
        match self.expr(e)? {
            Value::Obj(o) => Ok(o),
            v => Err(DslError::eval(e.span, format!("expected an object, found {}", self.show(&v)))),
        }
    }

    fn morphism(&self, e: &Expr) -> Result<AnyMorphism, DslError> {
        let v = self.expr(e)?;
        self.mor(&v, e.span)
    }

    fn triple(&self, e: &Expr) -> Result<AnyTriple, DslError> {
        match self.expr(e)? {
            Value::Triple(t) => Ok(t),
            v => Err(DslError::eval(e.span, format!("expected a triple, found {}", self.show(&v)))),
        }
    }

    fn number(&self, e: &Expr) -> Result<Q, DslError> {
        match self.expr(e)? {
            Value::Num(q) => Ok(q),
            v => Err(DslError::eval(e.span, format!("expected a number, found {}", self.show(&v)))),
        }
    }

    fn count(&self, e: &Expr) -> Result<usize, DslError> {
        let q = self.number(e)?;
        q.to_integer()
            .try_into()
            .map_err(|_| DslError::eval(e.span, format!("expected a dimension, found {}", format_q(&q))))
    }

    fn expr(&self, e: &Expr) -> Result<Value, DslError> {
        let span = e.span;
        let inst = self.inst;
        let wrap = |e| core_error(span, e);
        Ok(match &e.kind {
            ExprKind::Name(n) => {
                self.env.get(n).cloned().ok_or_else(|| DslError::eval(span, format!("unknown name `{n}`")))?
            }
            ExprKind::Unit => Value::Obj(inst.unit()),
            ExprKind::Number(q) => Value::Num(q.clone()),
            ExprKind::Matrix(rows) => Value::Mor(inst.matrix_literal(matrix_of(rows, span)?).map_err(wrap)?),
            ExprKind::Graded(entries) => {
                let mut dims = std::collections::BTreeMap::new();
                for (d, n) in entries {
                    *dims.entry(*d).or_insert(0) += n;
                }
                Value::Obj(inst.graded_object(&dims).map_err(wrap)?)
            }
            ExprKind::Points(labels) => Value::Obj(inst.points(labels).map_err(wrap)?),
            ExprKind::Bord(entries) => self.bord(entries, None, span)?,
            ExprKind::Iso(pairs) => self.bord(&iso_entries(pairs), None, span)?,
            ExprKind::Compose { outer, inner } => {
                let (f, g) = (self.morphism(inner)?, self.morphism(outer)?);
                Value::Mor(inst.compose(&g, &f).map_err(wrap)?)
            }
            ExprKind::Tensor(a, b) => match (self.expr(a)?, self.expr(b)?) {
                (Value::Obj(x), Value::Obj(y)) => Value::Obj(inst.tensor_obj(&x, &y).map_err(wrap)?),
                (Value::Triple(x), Value::Triple(y)) => Value::Triple(inst.tensor_triples(&x, &y).map_err(wrap)?),
                (x, y) => Value::Mor(inst.tensor(&self.mor(&x, span)?, &self.mor(&y, span)?).map_err(wrap)?),
            },
            ExprKind::Call(b, args) => self.call(*b, args, span)?,
        })
    }

    fn call(&self, b: Builtin, args: &[Expr], span: Span) -> Result<Value, DslError> {
        let inst = self.inst;
        let wrap = |e| core_error(span, e);
        let mor = |r: crate::Result<AnyMorphism>| r.map(Value::Mor).map_err(wrap);
        let tri = |r: crate::Result<AnyTriple>| r.map(Value::Triple).map_err(wrap);
        let obj = |r: crate::Result<AnyObject>| r.map(Value::Obj).map_err(wrap);
        match b {
            Builtin::Id => mor(inst.identity(&self.obj(&args[0])?)),
            Builtin::S => mor(inst.switching(&self.obj(&args[0])?, &self.obj(&args[1])?)),
            Builtin::C => mor(inst.braiding(&self.obj(&args[0])?, &self.obj(&args[1])?)),
            Builtin::CInv => mor(inst.braiding_inv(&self.obj(&args[0])?, &self.obj(&args[1])?)),
            Builtin::Theta => mor(inst.twist(&self.obj(&args[0])?)),
            Builtin::Ev => mor(inst.ev(&self.obj(&args[0])?)),
            Builtin::Coev => mor(inst.coev(&self.obj(&args[0])?)),
            Builtin::Dual => obj(inst.dual(&self.obj(&args[0])?)),
            Builtin::Vec => obj(inst.plain_object(self.count(&args[0])?)),
            Builtin::Super => obj(inst.super_object(self.count(&args[0])?, self.count(&args[1])?)),
            Builtin::Dom | Builtin::Cod => {
                let (dom, cod) = match self.expr(&args[0])? {
                    Value::Triple(t) => (t.dom(), t.cod()),
                    v => {
                        let m = self.mor(&v, span)?;
                        (inst.source(&m), inst.target(&m))
                    }
                };
                Ok(Value::Obj(if b == Builtin::Dom { dom } else { cod }))
            }
            Builtin::Add => match (self.expr(&args[0])?, self.expr(&args[1])?) {
                (Value::Triple(x), Value::Triple(y)) => tri(inst.add_triples(&x, &y)),
                (x, y) => mor(inst.add(&self.mor(&x, span)?, &self.mor(&y, span)?)),
            },
            Builtin::Neg => mor(inst.negate(&self.morphism(&args[0])?)),
            Builtin::Trace => mor(inst.trace(&self.morphism(&args[0])?)),
            Builtin::Triple => {
                let z = self.obj(&args[0])?;
                tri(inst.triple(&z, &self.morphism(&args[1])?, &self.morphism(&args[2])?))
            }
            Builtin::Canonical => tri(inst.canonical(&self.morphism(&args[0])?)),
            Builtin::Cut => tri(inst.cut(&self.morphism(&args[0])?, &self.number(&args[1])?)),
            Builtin::Thicken => tri(inst.thickener(&self.morphism(&args[0])?)),
            Builtin::Pre => tri(inst.pre_compose(&self.triple(&args[0])?, &self.morphism(&args[1])?)),
            Builtin::Post => tri(inst.post_compose(&self.morphism(&args[0])?, &self.triple(&args[1])?)),
            Builtin::Psi => mor(inst.psi(&self.triple(&args[0])?)),
            Builtin::TraceHat => mor(inst.tr_hat(&self.triple(&args[0])?)),
            Builtin::Pairing => {
                let f_hat = match self.expr(&args[0])? {
                    Value::Triple(t) => t,
                    v => inst.thickener(&self.mor(&v, span)?).map_err(wrap)?,
                };
                mor(inst.trace_pairing(&f_hat, &self.morphism(&args[1])?))
            }
            Builtin::Z => Ok(Value::Obj(self.triple(&args[0])?.z())),
            Builtin::T => Ok(Value::Mor(self.triple(&args[0])?.t())),
            Builtin::B => Ok(Value::Mor(self.triple(&args[0])?.b())),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Obj(o) => write!(f, "{o}"),
            Value::Mor(m) => write!(f, "{m}"),
            Value::Triple(t) => write!(f, "{t}"),
            Value::Num(q) => f.write_str(&format_q(q)),
        }
    }
}
