//! Static checking: names bind before use, compositions match, capabilities
//! exist. Objects are evaluated here, since they are needed to compare
//! domains, so every binding gets a concrete type.

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Zero};

use super::ast::*;
use super::{DslError, Span};
use crate::bordism::{Arc, Endpoint, PointSet, RBordMorphism};
use crate::dynamic::{AnyObject, Instance};
use crate::error::Error;
use crate::vect::{format_q, RatMatrix, Q};

/// An object with the expression it was written as, for messages.
#[derive(Debug, Clone, PartialEq)]
pub struct ObjTy {
    pub val: AnyObject,
    pub sym: String,
}

impl fmt::Display for ObjTy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let concrete = self.val.to_string();
        if concrete == self.sym {
            f.write_str(&self.sym)
        } else {
            write!(f, "{} (= {concrete})", self.sym)
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Ty {
    Obj(ObjTy),
    Mor { dom: ObjTy, cod: ObjTy },
    Triple { dom: ObjTy, cod: ObjTy, z: ObjTy },
    Num(Q),
}

impl fmt::Display for Ty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ty::Obj(o) => write!(f, "object {o}"),
            Ty::Mor { dom, cod } => write!(f, "{} -> {}", dom.sym, cod.sym),
            Ty::Triple { dom, cod, z } => write!(f, "triple {} -> {} through {}", dom.sym, cod.sym, z.sym),
            Ty::Num(q) => write!(f, "number {}", format_q(q)),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Binding {
    pub name: String,
    pub sort: Sort,
    pub ty: Ty,
}

#[derive(Debug, Clone)]
pub struct TypedProgram {
    pub instance: Instance,
    pub program: Program,
    /// One entry per declaration, in order.
    pub bindings: Vec<Binding>,
}

fn sym_tensor(a: &str, b: &str) -> String {
    match (a, b) {
        ("I", _) => b.to_string(),
        (_, "I") => a.to_string(),
        _ => format!("{a}⊗{b}"),
    }
}

fn sym_dual(a: &str) -> String {
    if a == "I" {
        a.to_string()
    } else if a.contains(['⊗', '⊕']) {
        format!("({a})∨")
    } else {
        format!("{a}∨")
    }
}

pub(crate) fn core_error(span: Span, e: Error) -> DslError {
    match e {
        Error::CapabilityMissing { .. } => DslError::capability(span, e.to_string()),
        other => DslError::type_error(span, other.to_string()),
    }
}

pub(crate) fn matrix_of(rows: &[Vec<Q>], span: Span) -> Result<RatMatrix, DslError> {
    RatMatrix::from_rows(rows).map_err(|e| DslError::type_error(span, e.to_string()))
}

fn index_of(set: &PointSet, label: &str, side: &str) -> Result<usize, String> {
    let mut hits = set.labels().iter().enumerate().filter(|(_, l)| *l == label);
    match (hits.next(), hits.next()) {
        (Some((i, _)), None) => Ok(i),
        (None, _) => Err(format!("`{label}` is not a {side} point of {set}")),
        (Some(_), Some(_)) => Err(format!("`{label}` occurs twice in {set}")),
    }
}

/// Builds a bordism literal. Without `ends`, source and target points are
/// ordered by first appearance.
pub(crate) fn build_bordism(entries: &[BordEntry], ends: Option<(&PointSet, &PointSet)>) -> Result<RBordMorphism, String> {
    let (source, target) = match ends {
        Some((s, t)) => (s.clone(), t.clone()),
        None => {
            let (mut s, mut t): (Vec<String>, Vec<String>) = (Vec::new(), Vec::new());
            let push = |side: &mut Vec<String>, l: &String, which: &str| -> Result<(), String> {
                if side.contains(l) {
                    return Err(format!("`{l}` occurs twice on the {which} side"));
                }
                side.push(l.clone());
                Ok(())
            };
            for e in entries {
                match e {
                    BordEntry::Through(a, b, _) => {
                        push(&mut s, a, "source")?;
                        push(&mut t, b, "target")?;
                    }
                    BordEntry::In(a, b, _) => {
                        push(&mut s, a, "source")?;
                        push(&mut s, b, "source")?;
                    }
                    BordEntry::Out(a, b, _) => {
                        push(&mut t, a, "target")?;
                        push(&mut t, b, "target")?;
                    }
                    BordEntry::Loop(_) => {}
                }
            }
            (PointSet::new(s), PointSet::new(t))
        }
    };
    let src = |l: &str| index_of(&source, l, "source").map(Endpoint::In);
    let tgt = |l: &str| index_of(&target, l, "target").map(Endpoint::Out);
    let mut arcs = Vec::new();
    let mut circles = Vec::new();
    for e in entries {
        match e {
            BordEntry::Through(a, b, l) => arcs.push(Arc::new(src(a)?, tgt(b)?, l.clone())),
            BordEntry::In(a, b, l) => arcs.push(Arc::new(src(a)?, src(b)?, l.clone())),
            BordEntry::Out(a, b, l) => arcs.push(Arc::new(tgt(a)?, tgt(b)?, l.clone())),
            BordEntry::Loop(l) => circles.push(l.clone()),
        }
    }
    RBordMorphism::new(source, target, arcs, circles).map_err(|e| e.to_string())
}

pub(crate) fn iso_entries(pairs: &[(String, String)]) -> Vec<BordEntry> {
    pairs.iter().map(|(a, b)| BordEntry::Through(a.clone(), b.clone(), Q::zero())).collect()
}

struct Checker {
    inst: Instance,
    env: HashMap<String, Ty>,
}

pub fn typecheck(program: &Program) -> Result<TypedProgram, DslError> {
    let inst = Instance::parse(&program.instance.spec())
        .map_err(|e| DslError::type_error(program.instance.span, e.to_string()))?;
    let mut ck = Checker { inst, env: HashMap::new() };
    let mut bindings = Vec::new();
    for item in &program.items {
        match &item.kind {
            ItemKind::Decl { sort, name, name_span, annot, value } => {
                if ck.env.contains_key(name) {
                    return Err(DslError::type_error(*name_span, format!("`{name}` is already bound")));
                }
                let ty = ck.decl(*sort, name, annot.as_ref(), value)?;
                ck.env.insert(name.clone(), ty.clone());
                bindings.push(Binding { name: name.clone(), sort: *sort, ty });
            }
            ItemKind::Print(e) => {
                ck.expr(e)?;
            }
            ItemKind::AssertEqual(a, b) => ck.comparable(a, b, item.span)?,
        }
    }
    Ok(TypedProgram { instance: ck.inst, program: program.clone(), bindings })
}

impl Checker {
    fn unit(&self) -> ObjTy {
        ObjTy { val: self.inst.unit(), sym: "I".into() }
    }

    fn literal_obj(&self, val: AnyObject) -> ObjTy {
        ObjTy { sym: val.to_string(), val }
    }

    fn need(&self, has: bool, what: &str, span: Span) -> Result<(), DslError> {
        if has {
            Ok(())
        } else {
            Err(DslError::capability(span, format!("{} has no {what}", self.inst.id())))
        }
    }

    fn need_matrix(&self, what: &str, span: Span) -> Result<(), DslError> {
        if self.inst.is_matrix() {
            Ok(())
        } else {
            Err(DslError::type_error(span, format!("{what} need a linear instance, not {}", self.inst.id())))
        }
    }

    fn tensor_obj(&self, a: &ObjTy, b: &ObjTy, span: Span) -> Result<ObjTy, DslError> {
        let val = self.inst.tensor_obj(&a.val, &b.val).map_err(|e| core_error(span, e))?;
        Ok(ObjTy { val, sym: sym_tensor(&a.sym, &b.sym) })
    }

    fn dual_obj(&self, a: &ObjTy, span: Span) -> Result<ObjTy, DslError> {
        self.need(self.inst.capabilities().duals, "duals", span)?;
        let val = self.inst.dual(&a.val).map_err(|e| core_error(span, e))?;
        Ok(ObjTy { val, sym: sym_dual(&a.sym) })
    }

    fn same(&self, a: &ObjTy, b: &ObjTy, span: Span, what: &str) -> Result<(), DslError> {
        if a.val == b.val {
            Ok(())
        } else {
            Err(DslError::type_error(span, format!("{what}: {a} vs {b}")))
        }
    }

    fn decl(&mut self, sort: Sort, name: &str, annot: Option<&(Expr, Expr)>, value: &Expr) -> Result<Ty, DslError> {
        match sort {
            Sort::Obj => {
                let o = self.obj(value)?;
                Ok(Ty::Obj(ObjTy { val: o.val, sym: name.to_string() }))
            }
            Sort::Triple => {
                let (dom, cod, z) = self.triple(value)?;
                Ok(Ty::Triple { dom, cod, z })
            }
            Sort::Mor => {
                let Some((d, c)) = annot else {
                    let (dom, cod) = self.mor(value)?;
                    return Ok(Ty::Mor { dom, cod });
                };
                let (dom, cod) = (self.obj(d)?, self.obj(c)?);
                match &value.kind {
                    ExprKind::Matrix(rows) => {
                        let m = matrix_of(rows, value.span)?;
                        self.need_matrix("matrix literals", value.span)?;
                        self.inst.matrix_morphism(&dom.val, &cod.val, m).map_err(|e| core_error(value.span, e))?;
                    }
                    ExprKind::Bord(entries) => self.bord_literal(entries, Some((&dom, &cod)), value.span).map(drop)?,
                    ExprKind::Iso(pairs) => self.bord_literal(&iso_entries(pairs), Some((&dom, &cod)), value.span).map(drop)?,
                    _ => {
                        let (vd, vc) = self.mor(value)?;
                        self.same(&dom, &vd, value.span, "declared domain differs from the value's")?;
                        self.same(&cod, &vc, value.span, "declared codomain differs from the value's")?;
                    }
                }
                Ok(Ty::Mor { dom, cod })
            }
        }
    }

    fn bord_literal(
        &self,
        entries: &[BordEntry],
        ends: Option<(&ObjTy, &ObjTy)>,
        span: Span,
    ) -> Result<(ObjTy, ObjTy), DslError> {
        if self.inst.is_matrix() {
            return Err(DslError::type_error(span, format!("bordism literals need rbord1, not {}", self.inst.id())));
        }
        let points = |o: &ObjTy| match &o.val {
            AnyObject::Points(p) => Ok(p.clone()),
            other => Err(DslError::type_error(span, format!("expected a point set, found {other}"))),
        };
        let ends = match ends {
            Some((d, c)) => Some((points(d)?, points(c)?)),
            None => None,
        };
        let sigma = build_bordism(entries, ends.as_ref().map(|(s, t)| (s, t)))
            .map_err(|m| DslError::type_error(span, m))?;
        Ok((
            self.literal_obj(AnyObject::Points(sigma.source().clone())),
            self.literal_obj(AnyObject::Points(sigma.target().clone())),
        ))
    }

    fn obj(&self, e: &Expr) -> Result<ObjTy, DslError> {
        match self.expr(e)? {
            Ty::Obj(o) => Ok(o),
            other => Err(DslError::type_error(e.span, format!("expected an object, found {other}"))),
        }
    }

    /// Numbers are accepted as scalars `I → I` in linear instances.
    fn mor(&self, e: &Expr) -> Result<(ObjTy, ObjTy), DslError> {
        match self.expr(e)? {
            Ty::Mor { dom, cod } => Ok((dom, cod)),
            Ty::Num(_) => {
                self.need_matrix("scalars", e.span)?;
                Ok((self.unit(), self.unit()))
            }
            other => Err(DslError::type_error(e.span, format!("expected a morphism, found {other}"))),
        }
    }

    fn triple(&self, e: &Expr) -> Result<(ObjTy, ObjTy, ObjTy), DslError> {
        match self.expr(e)? {
            Ty::Triple { dom, cod, z } => Ok((dom, cod, z)),
            other => Err(DslError::type_error(e.span, format!("expected a triple, found {other}"))),
        }
    }

    fn number(&self, e: &Expr) -> Result<Q, DslError> {
        match self.expr(e)? {
            Ty::Num(q) => Ok(q),
            other => Err(DslError::type_error(e.span, format!("expected a number, found {other}"))),
        }
    }

    fn count(&self, e: &Expr) -> Result<usize, DslError> {
        let q = self.number(e)?;
        if q.is_integer() && !q.is_negative_or_huge() {
            Ok(q.to_integer().try_into().expect("checked range"))
        } else {
            Err(DslError::type_error(e.span, format!("expected a dimension, found {}", format_q(&q))))
        }
    }

    fn comparable(&self, a: &Expr, b: &Expr, span: Span) -> Result<(), DslError> {
        match (self.expr(a)?, self.expr(b)?) {
            (Ty::Obj(_), Ty::Obj(_)) | (Ty::Num(_), Ty::Num(_)) => Ok(()),
            (Ty::Triple { .. }, _) | (_, Ty::Triple { .. }) => Err(DslError::type_error(
                span,
                "triples are compared through psi or trace_hat",
            )),
            _ => {
                let (d1, c1) = self.mor(a)?;
                let (d2, c2) = self.mor(b)?;
                self.same(&d1, &d2, span, "sides have different domains")?;
                self.same(&c1, &c2, span, "sides have different codomains")
            }
        }
    }

    fn endo(&self, dom: &ObjTy, cod: &ObjTy, span: Span, what: &str) -> Result<(), DslError> {
        if dom.val == cod.val {
            Ok(())
        } else {
            Err(DslError::type_error(span, format!("{what} needs an endomorphism, found {} -> {}", dom.sym, cod.sym)))
        }
    }

    fn scalar(&self) -> Ty {
        Ty::Mor { dom: self.unit(), cod: self.unit() }
    }

    pub fn expr(&self, e: &Expr) -> Result<Ty, DslError> {
        let span = e.span;
        let caps = self.inst.capabilities();
        Ok(match &e.kind {
            ExprKind::Name(n) => self
                .env
                .get(n)
                .cloned()
                .ok_or_else(|| DslError::type_error(span, format!("unknown name `{n}`")))?,
            ExprKind::Unit => Ty::Obj(self.unit()),
            ExprKind::Number(q) => Ty::Num(q.clone()),
            ExprKind::Matrix(rows) => {
                self.need_matrix("matrix literals", span)?;
                let m = self.inst.matrix_literal(matrix_of(rows, span)?).map_err(|e| core_error(span, e))?;
                Ty::Mor {
                    dom: self.literal_obj(self.inst.source(&m)),
                    cod: self.literal_obj(self.inst.target(&m)),
                }
            }
            ExprKind::Graded(entries) => {
                let mut dims = std::collections::BTreeMap::new();
                for (d, n) in entries {
                    *dims.entry(*d).or_insert(0) += n;
                }
                Ty::Obj(self.literal_obj(self.inst.graded_object(&dims).map_err(|e| core_error(span, e))?))
            }
            ExprKind::Points(labels) => {
                Ty::Obj(self.literal_obj(self.inst.points(labels).map_err(|e| core_error(span, e))?))
            }
            ExprKind::Bord(entries) => {
                let (dom, cod) = self.bord_literal(entries, None, span)?;
                Ty::Mor { dom, cod }
            }
            ExprKind::Iso(pairs) => {
                let (dom, cod) = self.bord_literal(&iso_entries(pairs), None, span)?;
                Ty::Mor { dom, cod }
            }
            ExprKind::Compose { outer, inner } => {
                let (d1, c1) = self.mor(inner)?;
                let (d2, c2) = self.mor(outer)?;
                if c1.val != d2.val {
                    return Err(DslError::type_error(
                        span,
                        format!(
                            "cannot compose `{}` ; `{}`: codomain {c1} does not match domain {d2}",
                            super::pretty::expr(inner),
                            super::pretty::expr(outer)
                        ),
                    ));
                }
                Ty::Mor { dom: d1, cod: c2 }
            }
            ExprKind::Tensor(a, b) => match (self.expr(a)?, self.expr(b)?) {
                (Ty::Obj(x), Ty::Obj(y)) => Ty::Obj(self.tensor_obj(&x, &y, span)?),
                (Ty::Triple { dom: d1, cod: c1, z: z1 }, Ty::Triple { dom: d2, cod: c2, z: z2 }) => {
                    self.need(caps.braided, "braiding, which tensoring triples uses", span)?;
                    Ty::Triple {
                        dom: self.tensor_obj(&d1, &d2, span)?,
                        cod: self.tensor_obj(&c1, &c2, span)?,
                        z: self.tensor_obj(&z1, &z2, span)?,
                    }
                }
                (Ty::Obj(_), _) | (_, Ty::Obj(_)) | (Ty::Triple { .. }, _) | (_, Ty::Triple { .. }) => {
                    return Err(DslError::type_error(span, "`*` needs two objects, two morphisms or two triples"))
                }
                _ => {
                    let (d1, c1) = self.mor(a)?;
                    let (d2, c2) = self.mor(b)?;
                    Ty::Mor { dom: self.tensor_obj(&d1, &d2, span)?, cod: self.tensor_obj(&c1, &c2, span)? }
                }
            },
            ExprKind::Call(b, args) => self.call(*b, args, span)?,
        })
    }

    fn call(&self, b: Builtin, args: &[Expr], span: Span) -> Result<Ty, DslError> {
        let caps = self.inst.capabilities();
        Ok(match b {
            Builtin::Id => {
                let x = self.obj(&args[0])?;
                Ty::Mor { dom: x.clone(), cod: x }
            }
            Builtin::S | Builtin::C => {
                if b == Builtin::C {
                    self.need(caps.braided, "braiding", span)?;
                }
                let (x, y) = (self.obj(&args[0])?, self.obj(&args[1])?);
                Ty::Mor { dom: self.tensor_obj(&x, &y, span)?, cod: self.tensor_obj(&y, &x, span)? }
            }
            Builtin::CInv => {
                self.need(caps.braided, "braiding", span)?;
                let (x, y) = (self.obj(&args[0])?, self.obj(&args[1])?);
                Ty::Mor { dom: self.tensor_obj(&y, &x, span)?, cod: self.tensor_obj(&x, &y, span)? }
            }
            Builtin::Theta => {
                self.need(caps.balanced, "twist", span)?;
                let x = self.obj(&args[0])?;
                Ty::Mor { dom: x.clone(), cod: x }
            }
            Builtin::Ev => {
                let x = self.obj(&args[0])?;
                let xd = self.dual_obj(&x, span)?;
                Ty::Mor { dom: self.tensor_obj(&xd, &x, span)?, cod: self.unit() }
            }
            Builtin::Coev => {
                let x = self.obj(&args[0])?;
                let xd = self.dual_obj(&x, span)?;
                Ty::Mor { dom: self.unit(), cod: self.tensor_obj(&x, &xd, span)? }
            }
            Builtin::Dual => Ty::Obj(self.dual_obj(&self.obj(&args[0])?, span)?),
            Builtin::Vec => {
                let n = self.count(&args[0])?;
                Ty::Obj(self.literal_obj(self.inst.plain_object(n).map_err(|e| core_error(span, e))?))
            }
            Builtin::Super => {
                let (even, odd) = (self.count(&args[0])?, self.count(&args[1])?);
                Ty::Obj(self.literal_obj(self.inst.super_object(even, odd).map_err(|e| core_error(span, e))?))
            }
            Builtin::Dom | Builtin::Cod => {
                let (dom, cod) = match self.expr(&args[0])? {
                    Ty::Triple { dom, cod, .. } => (dom, cod),
                    _ => self.mor(&args[0])?,
                };
                Ty::Obj(if b == Builtin::Dom { dom } else { cod })
            }
            Builtin::Add => {
                self.need(caps.additive, "sums", span)?;
                match (self.expr(&args[0])?, self.expr(&args[1])?) {
                    (Ty::Triple { dom, cod, z: z1 }, Ty::Triple { dom: d2, cod: c2, z: z2 }) => {
                        self.same(&dom, &d2, span, "summands have different domains")?;
                        self.same(&cod, &c2, span, "summands have different codomains")?;
                        let val = self.inst.direct_sum(&z1.val, &z2.val).map_err(|e| core_error(span, e))?;
                        let z = ObjTy { val, sym: format!("{}⊕{}", z1.sym, z2.sym) };
                        Ty::Triple { dom, cod, z }
                    }
                    _ => {
                        let (dom, cod) = self.mor(&args[0])?;
                        let (d2, c2) = self.mor(&args[1])?;
                        self.same(&dom, &d2, span, "summands have different domains")?;
                        self.same(&cod, &c2, span, "summands have different codomains")?;
                        Ty::Mor { dom, cod }
                    }
                }
            }
            Builtin::Neg => {
                self.need(caps.additive, "negatives", span)?;
                let (dom, cod) = self.mor(&args[0])?;
                Ty::Mor { dom, cod }
            }
            Builtin::Trace => {
                let (dom, cod) = self.mor(&args[0])?;
                self.endo(&dom, &cod, span, "trace")?;
                self.scalar()
            }
            Builtin::Triple => {
                let z = self.obj(&args[0])?;
                let (td, tc) = self.mor(&args[1])?;
                let (bd, bc) = self.mor(&args[2])?;
                let unit = self.unit();
                self.same(&td, &unit, args[1].span, "t must start at the unit")?;
                self.same(&bc, &unit, args[2].span, "b must end at the unit")?;
                let (x, y) = self.inst.triple_ends(&z.val, &tc.val, &bd.val).map_err(|e| core_error(span, e))?;
                let strip = |whole: &str, val: AnyObject, suffix: bool| {
                    let part = if suffix {
                        whole.strip_suffix(&format!("⊗{}", z.sym))
                    } else {
                        whole.strip_prefix(&format!("{}⊗", z.sym))
                    };
                    match part {
                        Some(p) if !p.is_empty() => ObjTy { val, sym: p.to_string() },
                        _ => self.literal_obj(val),
                    }
                };
                let dom = strip(&bd.sym, x, false);
                let cod = strip(&tc.sym, y, true);
                Ty::Triple { dom, cod, z }
            }
            Builtin::Canonical => {
                self.need(caps.duals, "duals", span)?;
                self.canonical(&args[0], span)?
            }
            Builtin::Cut => {
                if self.inst.is_matrix() {
                    return Err(DslError::type_error(span, format!("cut needs rbord1, not {}", self.inst.id())));
                }
                let q = self.number(&args[1])?;
                if !(q > Q::zero() && q < Q::one()) {
                    return Err(DslError::type_error(args[1].span, "cut fraction must lie strictly between 0 and 1"));
                }
                self.cut(&args[0])?
            }
            Builtin::Thicken => {
                if self.inst.is_matrix() {
                    self.canonical(&args[0], span)?
                } else {
                    self.cut(&args[0])?
                }
            }
            Builtin::Pre => {
                let (dom, cod, z) = self.triple(&args[0])?;
                let (gd, gc) = self.mor(&args[1])?;
                self.same(&gc, &dom, span, "pre needs g to end at the triple's domain")?;
                Ty::Triple { dom: gd, cod, z }
            }
            Builtin::Post => {
                let (gd, gc) = self.mor(&args[0])?;
                let (dom, cod, z) = self.triple(&args[1])?;
                self.same(&cod, &gd, span, "post needs g to start at the triple's codomain")?;
                Ty::Triple { dom, cod: gc, z }
            }
            Builtin::Psi => {
                let (dom, cod, _) = self.triple(&args[0])?;
                Ty::Mor { dom, cod }
            }
            Builtin::TraceHat => {
                let (dom, cod, _) = self.triple(&args[0])?;
                self.endo(&dom, &cod, span, "trace_hat")?;
                self.scalar()
            }
            Builtin::Pairing => {
                let (dom, cod) = match self.expr(&args[0])? {
                    Ty::Triple { dom, cod, .. } => (dom, cod),
                    _ => self.mor(&args[0])?,
                };
                let (gd, gc) = self.mor(&args[1])?;
                self.same(&gd, &cod, span, "pairing needs g to start where f ends")?;
                self.same(&gc, &dom, span, "pairing needs g to end where f starts")?;
                self.scalar()
            }
            Builtin::Z => Ty::Obj(self.triple(&args[0])?.2),
            Builtin::T => {
                let (_, cod, z) = self.triple(&args[0])?;
                Ty::Mor { dom: self.unit(), cod: self.tensor_obj(&cod, &z, span)? }
            }
            Builtin::B => {
                let (dom, _, z) = self.triple(&args[0])?;
                Ty::Mor { dom: self.tensor_obj(&z, &dom, span)?, cod: self.unit() }
            }
        })
    }

    /// `α(Φ⁻¹(f))` runs through `Z = X∨`.
    fn canonical(&self, f: &Expr, span: Span) -> Result<Ty, DslError> {
        let (dom, cod) = self.mor(f)?;
        let z = self.dual_obj(&dom, span)?;
        Ok(Ty::Triple { dom, cod, z })
    }

    /// A cut runs through a primed copy of the target.
    fn cut(&self, f: &Expr) -> Result<Ty, DslError> {
        let (dom, cod) = self.mor(f)?;
        let z = match &cod.val {
            AnyObject::Points(p) => self.literal_obj(AnyObject::Points(p.primed())),
            other => return Err(DslError::type_error(f.span, format!("expected a bordism, found a map into {other}"))),
        };
        Ok(Ty::Triple { dom, cod, z })
    }
}

trait NonNegative {
    fn is_negative_or_huge(&self) -> bool;
}

impl NonNegative for Q {
    fn is_negative_or_huge(&self) -> bool {
        *self < Q::zero() || *self > Q::from_integer(1_000_000.into())
    }
}
