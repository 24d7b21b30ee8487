//! Runtime-selected instances.
//!
//! The DSL and the Python bindings pick a category from a string such as
//! `graded(q=3)`, so they work with [`Instance`], [`AnyObject`],
//! [`AnyMorphism`] and [`AnyTriple`], which wrap the statically typed API and
//! dispatch per variant.

use std::collections::BTreeMap;
use std::fmt;

use crate::balanced::{GradedVect, ZGraded};
use crate::bordism::{self, PointSet, RBord1, RBordMorphism};
use crate::category::{Additive, Balanced, Braided, Capabilities, Dualizable, MonoidalCategory};
use crate::error::{Error, Result};
use crate::thickened::{self, ThickTriple, Triple};
use crate::vect::{
    self, format_q, parse_q, FinVect, GradeKind, MatrixCategory, Mor, Obj, Plain, RatMatrix, Space,
    Super, SuperVect, Q,
};

#[derive(Debug, Clone, PartialEq)]
pub enum Instance {
    FinVect(FinVect),
    SuperVect(SuperVect),
    Graded(GradedVect),
    RBord(RBord1),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum AnyObject {
    Plain(Obj<Plain>),
    Super(Obj<Super>),
    Graded(Obj<ZGraded>),
    Points(PointSet),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum AnyMorphism {
    Plain(Mor<Plain>),
    Super(Mor<Super>),
    Graded(Mor<ZGraded>),
    Bord(RBordMorphism),
}

#[derive(Debug, Clone, PartialEq)]
pub enum AnyTriple {
    Plain(Triple<FinVect>),
    Super(Triple<SuperVect>),
    Graded(Triple<GradedVect>),
    Bord(Triple<RBord1>),
}

fn mismatch(what: &str, a: &dyn fmt::Debug) -> Error {
    Error::InstanceMismatch(what.to_string(), format!("{a:?}"))
}

/// Runs `$body` with `$cat` bound to the concrete category and the listed
/// arguments unwrapped to the matching variant, wrapping the result in
/// `$out`. Bordism arms are included only by [`dispatch_all`].
macro_rules! dispatch_matrix {
    ($inst:expr, $missing:expr; $cat:ident; $( $arg:ident : $ty:ident ),* => $out:ident, $body:expr) => {
        match $inst {
            Instance::FinVect($cat) => {
                $( let $arg = match $arg { $ty::Plain(v) => v, other => return Err(mismatch("finvect", other)) }; )*
                Ok($out::Plain($body?))
            }
            Instance::SuperVect($cat) => {
                $( let $arg = match $arg { $ty::Super(v) => v, other => return Err(mismatch("supervect", other)) }; )*
                Ok($out::Super($body?))
            }
            Instance::Graded($cat) => {
                $( let $arg = match $arg { $ty::Graded(v) => v, other => return Err(mismatch("graded", other)) }; )*
                Ok($out::Graded($body?))
            }
            Instance::RBord(_) => Err(Error::missing("rbord1", $missing)),
        }
    };
}

macro_rules! dispatch_all {
    ($inst:expr; $cat:ident; $( $arg:ident : $ty:ident ),* => $out:ident, $body:expr) => {
        match $inst {
            Instance::FinVect($cat) => {
                $( let $arg = match $arg { $ty::Plain(v) => v, other => return Err(mismatch("finvect", other)) }; )*
                Ok($out::Plain($body?))
            }
            Instance::SuperVect($cat) => {
                $( let $arg = match $arg { $ty::Super(v) => v, other => return Err(mismatch("supervect", other)) }; )*
                Ok($out::Super($body?))
            }
            Instance::Graded($cat) => {
                $( let $arg = match $arg { $ty::Graded(v) => v, other => return Err(mismatch("graded", other)) }; )*
                Ok($out::Graded($body?))
            }
            Instance::RBord($cat) => {
                $( let $arg = match $arg { $ty::Bord(v) => v, other => return Err(mismatch("rbord1", other)) }; )*
                Ok($out::Bord($body?))
            }
        }
    };
}

/// Same as [`dispatch_all`] for objects, whose bordism variant is `Points`.
macro_rules! dispatch_obj {
    ($inst:expr; $cat:ident; $( $arg:ident ),* => $body:expr) => {
        match $inst {
            Instance::FinVect($cat) => {
                $( let $arg = match $arg { AnyObject::Plain(v) => v, other => return Err(mismatch("finvect", other)) }; )*
                Ok(AnyObject::Plain($body?))
            }
            Instance::SuperVect($cat) => {
                $( let $arg = match $arg { AnyObject::Super(v) => v, other => return Err(mismatch("supervect", other)) }; )*
                Ok(AnyObject::Super($body?))
            }
            Instance::Graded($cat) => {
                $( let $arg = match $arg { AnyObject::Graded(v) => v, other => return Err(mismatch("graded", other)) }; )*
                Ok(AnyObject::Graded($body?))
            }
            Instance::RBord($cat) => {
                $( let $arg = match $arg { AnyObject::Points(v) => v, other => return Err(mismatch("rbord1", other)) }; )*
                Ok(AnyObject::Points($body?))
            }
        }
    };
}

/// Unwraps objects passed to morphism-producing operations. The `matrix`
/// form reports the capability as missing in the bordism instance.
macro_rules! dispatch_obj_to_mor {
    (@matrix_arms $inst:expr, $cat:ident; $( $arg:ident ),* => $body:expr; $rest:expr) => {
        match $inst {
            Instance::FinVect($cat) => {
                $( let $arg = match $arg { AnyObject::Plain(v) => v, other => return Err(mismatch("finvect", other)) }; )*
                Ok(AnyMorphism::Plain($body?))
            }
            Instance::SuperVect($cat) => {
                $( let $arg = match $arg { AnyObject::Super(v) => v, other => return Err(mismatch("supervect", other)) }; )*
                Ok(AnyMorphism::Super($body?))
            }
            Instance::Graded($cat) => {
                $( let $arg = match $arg { AnyObject::Graded(v) => v, other => return Err(mismatch("graded", other)) }; )*
                Ok(AnyMorphism::Graded($body?))
            }
            Instance::RBord(_) => $rest,
        }
    };
    (matrix $missing:expr; $inst:expr; $cat:ident; $( $arg:ident ),* => $body:expr) => {
        dispatch_obj_to_mor!(@matrix_arms $inst, $cat; $( $arg ),* => $body; Err(Error::missing("rbord1", $missing)))
    };
    (all $inst:expr; $cat:ident; $( $arg:ident ),* => $body:expr) => {
        match $inst {
            Instance::RBord($cat) => {
                $( let $arg = match $arg { AnyObject::Points(v) => v, other => return Err(mismatch("rbord1", other)) }; )*
                Ok(AnyMorphism::Bord($body?))
            }
            other => dispatch_obj_to_mor!(@matrix_arms other, $cat; $( $arg ),* => $body; unreachable!()),
        }
    };
}

fn ok<T>(v: T) -> Result<T> {
    Ok(v)
}

impl Instance {
    /// Parses `finvect`, `supervect`, `graded`, `graded(q=3/2)` or `rbord1`.
    pub fn parse(spec: &str) -> Result<Self> {
        let compact: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
        match compact.as_str() {
            "finvect" => Ok(Instance::FinVect(FinVect::new())),
            "supervect" => Ok(Instance::SuperVect(SuperVect::new())),
            "graded" => Ok(Instance::Graded(GradedVect::default_q())),
            "rbord1" => Ok(Instance::RBord(RBord1)),
            other => {
                let q = other
                    .strip_prefix("graded(q=")
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(|| Error::Invalid(format!("unknown instance `{spec}`")))?;
                Ok(Instance::Graded(GradedVect::new(parse_q(q)?)?))
            }
        }
    }

    pub fn id(&self) -> String {
        match self {
            Instance::FinVect(c) => c.instance_id(),
            Instance::SuperVect(c) => c.instance_id(),
            Instance::Graded(c) => c.instance_id(),
            Instance::RBord(c) => c.instance_id(),
        }
    }

    pub fn capabilities(&self) -> Capabilities {
        match self {
            Instance::FinVect(c) => c.capabilities(),
            Instance::SuperVect(c) => c.capabilities(),
            Instance::Graded(c) => c.capabilities(),
            Instance::RBord(c) => c.capabilities(),
        }
    }

    pub fn is_matrix(&self) -> bool {
        !matches!(self, Instance::RBord(_))
    }

    pub fn unit(&self) -> AnyObject {
        match self {
            Instance::FinVect(_) => AnyObject::Plain(Space::unit()),
            Instance::SuperVect(_) => AnyObject::Super(Space::unit()),
            Instance::Graded(_) => AnyObject::Graded(Space::unit()),
            Instance::RBord(_) => AnyObject::Points(PointSet::empty()),
        }
    }

    pub fn tensor_obj(&self, x: &AnyObject, y: &AnyObject) -> Result<AnyObject> {
        dispatch_obj!(self; cat; x, y => ok(cat.tensor_obj(x, y)))
    }

    pub fn dual(&self, x: &AnyObject) -> Result<AnyObject> {
        match (self, x) {
            (Instance::RBord(_), _) => Err(Error::missing("rbord1", "duals")),
            (_, AnyObject::Plain(v)) => Ok(AnyObject::Plain(v.dual())),
            (_, AnyObject::Super(v)) => Ok(AnyObject::Super(v.dual())),
            (_, AnyObject::Graded(v)) => Ok(AnyObject::Graded(v.dual())),
            (_, other) => Err(mismatch(&self.id(), other)),
        }
    }

    /// `X ⊕ Y` in a matrix instance.
    pub fn direct_sum(&self, x: &AnyObject, y: &AnyObject) -> Result<AnyObject> {
        match (self, x, y) {
            (Instance::RBord(_), _, _) => Err(Error::missing("rbord1", "additive")),
            (_, AnyObject::Plain(x), AnyObject::Plain(y)) => Ok(AnyObject::Plain(x.direct_sum(y))),
            (_, AnyObject::Super(x), AnyObject::Super(y)) => Ok(AnyObject::Super(x.direct_sum(y))),
            (_, AnyObject::Graded(x), AnyObject::Graded(y)) => Ok(AnyObject::Graded(x.direct_sum(y))),
            (_, other, _) => Err(mismatch(&self.id(), other)),
        }
    }

    /// Builds an object of a matrix instance from a grade list; plain spaces
    /// ignore the grades and keep the count.
    pub fn plain_object(&self, dim: usize) -> Result<AnyObject> {
        match self {
            Instance::FinVect(_) => Ok(AnyObject::Plain(Space::plain(dim))),
            Instance::SuperVect(_) => Ok(AnyObject::Super(Space::super_space(dim, 0))),
            Instance::Graded(_) => Ok(AnyObject::Graded(Space::from_grades(vec![0; dim]))),
            Instance::RBord(_) => Err(Error::Invalid("point sets are given by labels, not a dimension".into())),
        }
    }

    pub fn super_object(&self, even: usize, odd: usize) -> Result<AnyObject> {
        match self {
            Instance::SuperVect(_) => Ok(AnyObject::Super(Space::super_space(even, odd))),
            _ => Err(Error::Invalid(format!("super objects need supervect, not {}", self.id()))),
        }
    }

    pub fn graded_object(&self, dims: &BTreeMap<i64, usize>) -> Result<AnyObject> {
        match self {
            Instance::Graded(_) => Ok(AnyObject::Graded(Space::graded(dims))),
            _ => Err(Error::Invalid(format!("graded objects need a graded instance, not {}", self.id()))),
        }
    }

    pub fn points(&self, labels: &[String]) -> Result<AnyObject> {
        match self {
            Instance::RBord(_) => Ok(AnyObject::Points(PointSet::new(labels.iter().cloned()))),
            _ => Err(Error::Invalid(format!("point sets need rbord1, not {}", self.id()))),
        }
    }

    /// A matrix morphism `source → target`; grades are checked.
    pub fn matrix_morphism(&self, source: &AnyObject, target: &AnyObject, m: RatMatrix) -> Result<AnyMorphism> {
        let m = &m;
        dispatch_obj_to_mor!(matrix "matrix morphisms"; self; cat; source, target =>
            cat.morphism(source.clone(), target.clone(), m.clone()))
    }

    /// A matrix literal with objects read off its shape: plain dimensions,
    /// even super spaces or degree-zero graded spaces.
    pub fn matrix_literal(&self, m: RatMatrix) -> Result<AnyMorphism> {
        let source = self.plain_object(m.cols())?;
        let target = self.plain_object(m.rows())?;
        self.matrix_morphism(&source, &target, m)
    }

    pub fn bordism(&self, m: RBordMorphism) -> Result<AnyMorphism> {
        match self {
            Instance::RBord(_) => Ok(AnyMorphism::Bord(m)),
            _ => Err(Error::Invalid(format!("bordisms need rbord1, not {}", self.id()))),
        }
    }

    pub fn source(&self, f: &AnyMorphism) -> AnyObject {
        match f {
            AnyMorphism::Plain(m) => AnyObject::Plain(m.source().clone()),
            AnyMorphism::Super(m) => AnyObject::Super(m.source().clone()),
            AnyMorphism::Graded(m) => AnyObject::Graded(m.source().clone()),
            AnyMorphism::Bord(m) => AnyObject::Points(m.source().clone()),
        }
    }

    pub fn target(&self, f: &AnyMorphism) -> AnyObject {
        match f {
            AnyMorphism::Plain(m) => AnyObject::Plain(m.target().clone()),
            AnyMorphism::Super(m) => AnyObject::Super(m.target().clone()),
            AnyMorphism::Graded(m) => AnyObject::Graded(m.target().clone()),
            AnyMorphism::Bord(m) => AnyObject::Points(m.target().clone()),
        }
    }

    pub fn identity(&self, x: &AnyObject) -> Result<AnyMorphism> {
        dispatch_obj_to_mor!(all self; cat; x => ok(cat.identity(x)))
    }

    pub fn compose(&self, g: &AnyMorphism, f: &AnyMorphism) -> Result<AnyMorphism> {
        dispatch_all!(self; cat; g: AnyMorphism, f: AnyMorphism => AnyMorphism, cat.compose(g, f))
    }

    pub fn tensor(&self, f: &AnyMorphism, g: &AnyMorphism) -> Result<AnyMorphism> {
        dispatch_all!(self; cat; f: AnyMorphism, g: AnyMorphism => AnyMorphism, cat.tensor(f, g))
    }

    pub fn switching(&self, x: &AnyObject, y: &AnyObject) -> Result<AnyMorphism> {
        dispatch_obj_to_mor!(all self; cat; x, y => ok(cat.switching(x, y)))
    }

    pub fn braiding(&self, x: &AnyObject, y: &AnyObject) -> Result<AnyMorphism> {
        dispatch_obj_to_mor!(matrix "braided"; self; cat; x, y => ok(cat.braiding(x, y)))
    }

    /// `(c_{X,Y})⁻¹: Y⊗X → X⊗Y`.
    pub fn braiding_inv(&self, x: &AnyObject, y: &AnyObject) -> Result<AnyMorphism> {
        dispatch_obj_to_mor!(matrix "braided"; self; cat; x, y => ok(cat.braiding_inv(x, y)))
    }

    pub fn twist(&self, x: &AnyObject) -> Result<AnyMorphism> {
        dispatch_obj_to_mor!(matrix "balanced"; self; cat; x => ok(cat.twist(x)))
    }

    pub fn ev(&self, x: &AnyObject) -> Result<AnyMorphism> {
        dispatch_obj_to_mor!(matrix "duals"; self; cat; x => cat.dual_data(x).map(|d| d.ev))
    }

    pub fn coev(&self, x: &AnyObject) -> Result<AnyMorphism> {
        dispatch_obj_to_mor!(matrix "duals"; self; cat; x => cat.dual_data(x).map(|d| d.coev))
    }

    pub fn add(&self, f: &AnyMorphism, g: &AnyMorphism) -> Result<AnyMorphism> {
        dispatch_matrix!(self, "additive"; cat; f: AnyMorphism, g: AnyMorphism => AnyMorphism, cat.add_mor(f, g))
    }

    pub fn negate(&self, f: &AnyMorphism) -> Result<AnyMorphism> {
        dispatch_matrix!(self, "additive"; cat; f: AnyMorphism => AnyMorphism, ok(cat.negate(f)))
    }

    pub fn mor_equal(&self, f: &AnyMorphism, g: &AnyMorphism) -> bool {
        f == g
    }

    /// `(X, Y)` with `Y⊗Z = yz` and `Z⊗X = zx`, as read off the target of
    /// `t` and the source of `b`.
    pub fn triple_ends(&self, z: &AnyObject, yz: &AnyObject, zx: &AnyObject) -> Result<(AnyObject, AnyObject)> {
        fn strip<G: vect::Grade>(z: &Space<G>, yz: &Space<G>, zx: &Space<G>) -> Option<(Space<G>, Space<G>)> {
            if z.dim() == 0 {
                return None;
            }
            Some((Space::strip_left(zx, z)?, Space::strip_right(yz, z)?))
        }
        fn labels(z: &PointSet, yz: &PointSet, zx: &PointSet) -> Option<(PointSet, PointSet)> {
            let (yz, zx, n) = (yz.labels(), zx.labels(), z.len());
            if yz.len() < n || zx.len() < n || yz[yz.len() - n..] != *z.labels() || zx[..n] != *z.labels() {
                return None;
            }
            Some((PointSet::new(zx[n..].iter().cloned()), PointSet::new(yz[..yz.len() - n].iter().cloned())))
        }
        let ends = match (z, yz, zx) {
            (AnyObject::Plain(z), AnyObject::Plain(yz), AnyObject::Plain(zx)) => {
                strip(z, yz, zx).map(|(x, y)| (AnyObject::Plain(x), AnyObject::Plain(y)))
            }
            (AnyObject::Super(z), AnyObject::Super(yz), AnyObject::Super(zx)) => {
                strip(z, yz, zx).map(|(x, y)| (AnyObject::Super(x), AnyObject::Super(y)))
            }
            (AnyObject::Graded(z), AnyObject::Graded(yz), AnyObject::Graded(zx)) => {
                strip(z, yz, zx).map(|(x, y)| (AnyObject::Graded(x), AnyObject::Graded(y)))
            }
            (AnyObject::Points(z), AnyObject::Points(yz), AnyObject::Points(zx)) => {
                labels(z, yz, zx).map(|(x, y)| (AnyObject::Points(x), AnyObject::Points(y)))
            }
            _ => return Err(mismatch(&self.id(), &(z, yz, zx))),
        };
        ends.ok_or_else(|| {
            Error::Invalid(format!("cannot read X and Y off t: I -> {yz} and b: {zx} -> I with Z = {z}"))
        })
    }

    /// Builds `(Z, t, b)`, recovering `Y` from `t: I → Y⊗Z` and `X` from
    /// `b: Z⊗X → I`.
    pub fn triple(&self, z: &AnyObject, t: &AnyMorphism, b: &AnyMorphism) -> Result<AnyTriple> {
        let (x, y) = self.triple_ends(z, &self.target(t), &self.source(b))?;
        match (self, z, t, b, x, y) {
            (
                Instance::FinVect(cat),
                AnyObject::Plain(z),
                AnyMorphism::Plain(t),
                AnyMorphism::Plain(b),
                AnyObject::Plain(x),
                AnyObject::Plain(y),
            ) => Ok(AnyTriple::Plain(ThickTriple::new(cat, x, y, z.clone(), t.clone(), b.clone())?)),
            (
                Instance::SuperVect(cat),
                AnyObject::Super(z),
                AnyMorphism::Super(t),
                AnyMorphism::Super(b),
                AnyObject::Super(x),
                AnyObject::Super(y),
            ) => Ok(AnyTriple::Super(ThickTriple::new(cat, x, y, z.clone(), t.clone(), b.clone())?)),
            (
                Instance::Graded(cat),
                AnyObject::Graded(z),
                AnyMorphism::Graded(t),
                AnyMorphism::Graded(b),
                AnyObject::Graded(x),
                AnyObject::Graded(y),
            ) => Ok(AnyTriple::Graded(ThickTriple::new(cat, x, y, z.clone(), t.clone(), b.clone())?)),
            (
                Instance::RBord(cat),
                AnyObject::Points(z),
                AnyMorphism::Bord(t),
                AnyMorphism::Bord(b),
                AnyObject::Points(x),
                AnyObject::Points(y),
            ) => Ok(AnyTriple::Bord(ThickTriple::new(cat, x, y, z.clone(), t.clone(), b.clone())?)),
            _ => Err(mismatch(&self.id(), &(z, t, b))),
        }
    }

    /// `α(Φ⁻¹(f))` in a matrix instance.
    pub fn canonical(&self, f: &AnyMorphism) -> Result<AnyTriple> {
        dispatch_matrix!(self, "duals"; cat; f: AnyMorphism => AnyTriple, vect::canonical_thickener(cat, f))
    }

    /// The cut thickener of a bordism at the given collar fraction.
    pub fn cut(&self, f: &AnyMorphism, fraction: &Q) -> Result<AnyTriple> {
        match (self, f) {
            (Instance::RBord(_), AnyMorphism::Bord(sigma)) => {
                Ok(AnyTriple::Bord(bordism::cut_thickener(sigma, fraction)?))
            }
            (Instance::RBord(_), other) => Err(mismatch("rbord1", other)),
            _ => Err(Error::Invalid(format!("cut thickeners need rbord1, not {}", self.id()))),
        }
    }

    /// The thickener a DSL `thick(f)` asks for: canonical for matrices, the
    /// midpoint cut for bordisms.
    pub fn thickener(&self, f: &AnyMorphism) -> Result<AnyTriple> {
        match self {
            Instance::RBord(_) => self.cut(f, &vect::q_frac(1, 2)),
            _ => self.canonical(f),
        }
    }

    pub fn psi(&self, tr: &AnyTriple) -> Result<AnyMorphism> {
        dispatch_all!(self; cat; tr: AnyTriple => AnyMorphism, thickened::psi(cat, tr))
    }

    pub fn tr_hat(&self, tr: &AnyTriple) -> Result<AnyMorphism> {
        dispatch_all!(self; cat; tr: AnyTriple => AnyMorphism, thickened::tr_hat(cat, tr))
    }

    pub fn pre_compose(&self, tr: &AnyTriple, f: &AnyMorphism) -> Result<AnyTriple> {
        dispatch_all!(self; cat; tr: AnyTriple, f: AnyMorphism => AnyTriple, thickened::pre_compose(cat, tr, f))
    }

    pub fn post_compose(&self, f: &AnyMorphism, tr: &AnyTriple) -> Result<AnyTriple> {
        dispatch_all!(self; cat; f: AnyMorphism, tr: AnyTriple => AnyTriple, thickened::post_compose(cat, f, tr))
    }

    pub fn trace_pairing(&self, f_hat: &AnyTriple, g: &AnyMorphism) -> Result<AnyMorphism> {
        dispatch_all!(self; cat; f_hat: AnyTriple, g: AnyMorphism => AnyMorphism, thickened::trace_pairing(cat, f_hat, g))
    }

    pub fn add_triples(&self, a: &AnyTriple, b: &AnyTriple) -> Result<AnyTriple> {
        dispatch_matrix!(self, "additive"; cat; a: AnyTriple, b: AnyTriple => AnyTriple, thickened::add_triples(cat, a, b))
    }

    pub fn tensor_triples(&self, a: &AnyTriple, b: &AnyTriple) -> Result<AnyTriple> {
        dispatch_matrix!(self, "braided"; cat; a: AnyTriple, b: AnyTriple => AnyTriple, thickened::tensor_triples(cat, a, b))
    }

    /// Trace of an endomorphism: `tr̂` of its canonical thickener in matrix
    /// instances and [`bordism::glue_trace`] for bordisms.
    pub fn trace(&self, f: &AnyMorphism) -> Result<AnyMorphism> {
        match (self, f) {
            (Instance::RBord(_), AnyMorphism::Bord(sigma)) => Ok(AnyMorphism::Bord(bordism::glue_trace(sigma)?)),
            _ => self.tr_hat(&self.canonical(f)?),
        }
    }
}

impl AnyObject {
    pub fn instance_family(&self) -> &'static str {
        match self {
            AnyObject::Plain(_) => "finvect",
            AnyObject::Super(_) => "supervect",
            AnyObject::Graded(_) => "graded",
            AnyObject::Points(_) => "rbord1",
        }
    }
}

impl AnyMorphism {
    /// The scalar of a matrix morphism `I → I`.
    pub fn scalar(&self) -> Option<Q> {
        match self {
            AnyMorphism::Plain(m) => vect::scalar_of(m).ok(),
            AnyMorphism::Super(m) => vect::scalar_of(m).ok(),
            AnyMorphism::Graded(m) => vect::scalar_of(m).ok(),
            AnyMorphism::Bord(_) => None,
        }
    }

    pub fn matrix(&self) -> Option<&RatMatrix> {
        match self {
            AnyMorphism::Plain(m) => Some(m.matrix()),
            AnyMorphism::Super(m) => Some(m.matrix()),
            AnyMorphism::Graded(m) => Some(m.matrix()),
            AnyMorphism::Bord(_) => None,
        }
    }

    pub fn as_bordism(&self) -> Option<&RBordMorphism> {
        match self {
            AnyMorphism::Bord(b) => Some(b),
            _ => None,
        }
    }
}

impl AnyTriple {
    pub fn z(&self) -> AnyObject {
        match self {
            AnyTriple::Plain(t) => AnyObject::Plain(t.z().clone()),
            AnyTriple::Super(t) => AnyObject::Super(t.z().clone()),
            AnyTriple::Graded(t) => AnyObject::Graded(t.z().clone()),
            AnyTriple::Bord(t) => AnyObject::Points(t.z().clone()),
        }
    }

    pub fn dom(&self) -> AnyObject {
        match self {
            AnyTriple::Plain(t) => AnyObject::Plain(t.dom().clone()),
            AnyTriple::Super(t) => AnyObject::Super(t.dom().clone()),
            AnyTriple::Graded(t) => AnyObject::Graded(t.dom().clone()),
            AnyTriple::Bord(t) => AnyObject::Points(t.dom().clone()),
        }
    }

    pub fn cod(&self) -> AnyObject {
        match self {
            AnyTriple::Plain(t) => AnyObject::Plain(t.cod().clone()),
            AnyTriple::Super(t) => AnyObject::Super(t.cod().clone()),
            AnyTriple::Graded(t) => AnyObject::Graded(t.cod().clone()),
            AnyTriple::Bord(t) => AnyObject::Points(t.cod().clone()),
        }
    }

    pub fn t(&self) -> AnyMorphism {
        match self {
            AnyTriple::Plain(t) => AnyMorphism::Plain(t.t().clone()),
            AnyTriple::Super(t) => AnyMorphism::Super(t.t().clone()),
            AnyTriple::Graded(t) => AnyMorphism::Graded(t.t().clone()),
            AnyTriple::Bord(t) => AnyMorphism::Bord(t.t().clone()),
        }
    }

    pub fn b(&self) -> AnyMorphism {
        match self {
            AnyTriple::Plain(t) => AnyMorphism::Plain(t.b().clone()),
            AnyTriple::Super(t) => AnyMorphism::Super(t.b().clone()),
            AnyTriple::Graded(t) => AnyMorphism::Graded(t.b().clone()),
            AnyTriple::Bord(t) => AnyMorphism::Bord(t.b().clone()),
        }
    }
}

impl fmt::Display for AnyObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyObject::Plain(x) => write!(f, "{x}"),
            AnyObject::Super(x) => write!(f, "{x}"),
            AnyObject::Graded(x) => write!(f, "{x}"),
            AnyObject::Points(x) => write!(f, "{x}"),
        }
    }
}

impl fmt::Display for AnyMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyMorphism::Plain(m) => write!(f, "{m}"),
            AnyMorphism::Super(m) => write!(f, "{m}"),
            AnyMorphism::Graded(m) => write!(f, "{m}"),
            AnyMorphism::Bord(m) => write!(f, "{m}"),
        }
    }
}

impl fmt::Display for AnyTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "triple({}, {}, {})", self.z(), self.t(), self.b())
    }
}

/// Human-readable value: scalars print as a number, everything else in
/// literal form followed by its type.
pub fn describe(inst: &Instance, m: &AnyMorphism) -> String {
    match m.scalar() {
        Some(s) => format_q(&s),
        None => format!("{m} : {} -> {}", inst.source(m), inst.target(m)),
    }
}

impl<K: GradeKind> MatrixCategory<K> {
    /// Object with every basis vector in the neutral grade.
    pub fn neutral(&self, dim: usize) -> Obj<K> {
        Space::from_grades(vec![<K::Grade as vect::Grade>::zero(); dim])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vect::q_int;

    #[test]
    fn parses_instances() {
        assert_eq!(Instance::parse("graded(q=3)").unwrap().id(), "graded(q=3)");
        assert_eq!(Instance::parse("graded").unwrap().id(), "graded(q=2)");
        assert!(Instance::parse("graded(q=1)").is_err());
        assert!(Instance::parse("banach").is_err());
    }

    #[test]
    fn bordism_lacks_braiding() {
        let inst = Instance::parse("rbord1").unwrap();
        let x = inst.points(&["x".into()]).unwrap();
        assert!(matches!(inst.braiding(&x, &x), Err(Error::CapabilityMissing { .. })));
        assert!(inst.switching(&x, &x).is_ok());
    }

    #[test]
    fn triple_deduces_dom_and_cod() {
        let inst = Instance::parse("finvect").unwrap();
        let x = inst.plain_object(3).unwrap();
        let tr = inst
            .triple(&inst.dual(&x).unwrap(), &inst.coev(&x).unwrap(), &inst.ev(&x).unwrap())
            .unwrap();
        assert_eq!(tr.dom(), x);
        assert_eq!(inst.tr_hat(&tr).unwrap().scalar(), Some(q_int(3)));
    }

    #[test]
    fn rejects_mixed_instances() {
        let inst = Instance::parse("finvect").unwrap();
        let sv = Instance::parse("supervect").unwrap();
        let f = sv.identity(&sv.super_object(1, 1).unwrap()).unwrap();
        assert!(matches!(inst.compose(&f, &f), Err(Error::InstanceMismatch(..))));
    }
}
