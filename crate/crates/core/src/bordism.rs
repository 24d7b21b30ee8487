//! `RBord1`: one-dimensional Riemannian bordisms.
//!
//! An object is an ordered list of point labels. A morphism `X → Y` is a
//! perfect matching of the in-boundary `X` and out-boundary `Y` by arcs with
//! rational lengths, plus a multiset of closed circles. In d = 1 a connected
//! Riemannian manifold with boundary is determined by its length, so that is
//! all the data there is.
//!
//! Isometries are the matchings whose arcs all have length zero and run from
//! an in-point to an out-point. Gluing an arc of length zero onto anything
//! relabels its endpoint, which is exactly how an isometry acts on a bordism.
//! Composites such as `t ⊗ id_X` contain both kinds of arc and are reported
//! as [`MorphismKind::Mixed`].

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::category::{Capabilities, MonoidalCategory};
use crate::error::{Error, Result};
use crate::thickened::{slide, ThickTriple, Triple, Witness};
use crate::vect::{format_q, FinVect, Mor, Plain, RatMatrix, Q};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PointSet {
    labels: Vec<String>,
}

impl PointSet {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Self {
        PointSet {
            labels: labels.into_iter().map(Into::into).collect(),
        }
    }

    pub fn empty() -> Self {
        PointSet { labels: Vec::new() }
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn concat(&self, other: &PointSet) -> PointSet {
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        PointSet { labels }
    }

    /// The copy `Z` of `Y` used by cut thickeners; labels gain a prime.
    pub fn primed(&self) -> PointSet {
        PointSet {
            labels: self.labels.iter().map(|l| format!("{l}'")).collect(),
        }
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pts{{{}}}", self.labels.join(","))
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A boundary point: `In(i)` is the i-th source point, `Out(j)` the j-th
/// target point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Endpoint {
    In(usize),
    Out(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arc {
    pub a: Endpoint,
    pub b: Endpoint,
    #[serde(with = "q_string")]
    pub length: Q,
}

impl Arc {
    pub fn new(a: Endpoint, b: Endpoint, length: Q) -> Self {
        if a <= b {
            Arc { a, b, length }
        } else {
            Arc { a: b, b: a, length }
        }
    }

    fn is_thin(&self) -> bool {
        self.length.is_zero()
    }
}

mod q_string {
    use super::Q;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &Q, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&crate::vect::format_q(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Q, D::Error> {
        let s = String::deserialize(d)?;
        crate::vect::parse_q(&s).map_err(serde::de::Error::custom)
    }

    pub mod vec {
        use super::Q;
        use serde::{Deserialize, Deserializer, Serialize, Serializer};

        pub fn serialize<S: Serializer>(qs: &[Q], s: S) -> Result<S::Ok, S::Error> {
            let strings: Vec<String> = qs.iter().map(crate::vect::format_q).collect();
            strings.serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Q>, D::Error> {
            Vec::<String>::deserialize(d)?
                .iter()
                .map(|s| crate::vect::parse_q(s).map_err(serde::de::Error::custom))
                .collect()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MorphismKind {
    /// Every arc is thin; a relabelling bijection.
    Isometry,
    /// Every arc has positive length. The empty morphism `∅ → ∅` is both the
    /// identity isometry and the empty bordism and is reported here.
    Bordism,
    /// Thin and thick arcs together, as in `t ⊗ id_X`.
    Mixed,
}

/// A morphism of `RBord1` in canonical form: arcs sorted by first endpoint,
/// circles sorted by length.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RBordMorphism {
    source: PointSet,
    target: PointSet,
    arcs: Vec<Arc>,
    #[serde(with = "q_string::vec")]
    circles: Vec<Q>,
}

impl RBordMorphism {
    /// Validates the matching and lengths and normalizes the representation.
    pub fn new(source: PointSet, target: PointSet, arcs: Vec<Arc>, circles: Vec<Q>) -> Result<Self> {
        let mut seen = BTreeMap::new();
        for arc in &arcs {
            if arc.length.is_negative() {
                return Err(Error::Invalid(format!("negative length {}", format_q(&arc.length))));
            }
            if arc.is_thin() && !matches!((arc.a, arc.b), (Endpoint::In(_), Endpoint::Out(_))) {
                return Err(Error::Invalid(
                    "a length-zero arc must join a source point to a target point".into(),
                ));
            }
            for e in [arc.a, arc.b] {
                let in_range = match e {
                    Endpoint::In(i) => i < source.len(),
                    Endpoint::Out(j) => j < target.len(),
                };
                if !in_range {
                    return Err(Error::Invalid(format!("endpoint {e:?} out of range")));
                }
                if seen.insert(e, ()).is_some() {
                    return Err(Error::Invalid(format!("endpoint {e:?} used twice")));
                }
            }
        }
        if seen.len() != source.len() + target.len() {
            return Err(Error::Invalid("arcs do not cover every boundary point".into()));
        }
        if let Some(c) = circles.iter().find(|c| !c.is_positive()) {
            return Err(Error::Invalid(format!("circle length {} is not positive", format_q(c))));
        }
        Ok(Self::normalized(source, target, arcs, circles))
    }

    fn normalized(source: PointSet, target: PointSet, mut arcs: Vec<Arc>, mut circles: Vec<Q>) -> Self {
        arcs.sort_by_key(|x| x.a);
        circles.sort();
        RBordMorphism {
            source,
            target,
            arcs,
            circles,
        }
    }

    pub fn source(&self) -> &PointSet {
        &self.source
    }

    pub fn target(&self) -> &PointSet {
        &self.target
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn circles(&self) -> &[Q] {
        &self.circles
    }

    pub fn kind(&self) -> MorphismKind {
        let thin = self.arcs.iter().filter(|a| a.is_thin()).count();
        if thin == 0 {
            MorphismKind::Bordism
        } else if thin == self.arcs.len() && self.circles.is_empty() {
            MorphismKind::Isometry
        } else {
            MorphismKind::Mixed
        }
    }

    pub fn is_bordism(&self) -> bool {
        self.kind() == MorphismKind::Bordism
    }

    /// `true` for closed 1-manifolds, i.e. morphisms `∅ → ∅`.
    pub fn is_closed(&self) -> bool {
        self.source.is_empty() && self.target.is_empty()
    }

    fn partner(&self) -> BTreeMap<Endpoint, (Endpoint, &Q)> {
        let mut map = BTreeMap::new();
        for arc in &self.arcs {
            map.insert(arc.a, (arc.b, &arc.length));
            map.insert(arc.b, (arc.a, &arc.length));
        }
        map
    }
}

/// Interval `from → to` of the given length.
pub fn interval(from: &str, to: &str, length: Q) -> Result<RBordMorphism> {
    RBordMorphism::new(
        PointSet::new([from]),
        PointSet::new([to]),
        vec![Arc::new(Endpoint::In(0), Endpoint::Out(0), length)],
        vec![],
    )
}

/// An interval `∅ → {a, b}` bending both ends to the outgoing boundary.
pub fn cap(a: &str, b: &str, length: Q) -> Result<RBordMorphism> {
    RBordMorphism::new(
        PointSet::empty(),
        PointSet::new([a, b]),
        vec![Arc::new(Endpoint::Out(0), Endpoint::Out(1), length)],
        vec![],
    )
}

/// An interval `{a, b} → ∅`.
pub fn cup(a: &str, b: &str, length: Q) -> Result<RBordMorphism> {
    RBordMorphism::new(
        PointSet::new([a, b]),
        PointSet::empty(),
        vec![Arc::new(Endpoint::In(0), Endpoint::In(1), length)],
        vec![],
    )
}

pub fn circle(length: Q) -> Result<RBordMorphism> {
    RBordMorphism::new(PointSet::empty(), PointSet::empty(), vec![], vec![length])
}

/// The isometry sending source point `i` to target point `perm[i]`.
pub fn isometry(source: PointSet, target: PointSet, perm: &[usize]) -> Result<RBordMorphism> {
    if perm.len() != source.len() {
        return Err(Error::Invalid("permutation length differs from source size".into()));
    }
    let arcs = perm
        .iter()
        .enumerate()
        .map(|(i, &j)| Arc::new(Endpoint::In(i), Endpoint::Out(j), Q::zero()))
        .collect();
    RBordMorphism::new(source, target, arcs, vec![])
}

/// The symmetric monoidal category of 1-dimensional Riemannian bordisms,
/// taken strict: tensor is concatenation of point lists.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RBord1;

impl RBord1 {
    pub fn new() -> Self {
        RBord1
    }
}

/// Which gluing side a half-edge lives on during composition.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
enum Side {
    First,
    Second,
}

impl MonoidalCategory for RBord1 {
    type Object = PointSet;
    type Morphism = RBordMorphism;

    fn instance_id(&self) -> String {
        "rbord1".into()
    }

    fn capabilities(&self) -> Capabilities {
        Capabilities {
            additive: false,
            braided: false,
            balanced: false,
            symmetric: false,
            duals: false,
        }
    }

    fn unit_object(&self) -> PointSet {
        PointSet::empty()
    }

    fn tensor_obj(&self, x: &PointSet, y: &PointSet) -> PointSet {
        x.concat(y)
    }

    fn source(&self, f: &RBordMorphism) -> PointSet {
        f.source.clone()
    }

    fn target(&self, f: &RBordMorphism) -> PointSet {
        f.target.clone()
    }

    fn identity(&self, x: &PointSet) -> RBordMorphism {
        let perm: Vec<usize> = (0..x.len()).collect();
        isometry(x.clone(), x.clone(), &perm).expect("identity matching is valid")
    }

    /// Glues `f: X → Y` and `g: Y → W` along `Y`. Paths starting at the outer
    /// boundary become arcs; leftover cycles through `Y` become circles.
    fn compose(&self, g: &RBordMorphism, f: &RBordMorphism) -> Result<RBordMorphism> {
        if f.target != g.source {
            return Err(Error::domain("compose", &g.source, &f.target));
        }
        let (pf, pg) = (f.partner(), g.partner());
        let step = |side: Side, e: Endpoint| -> (Endpoint, Q) {
            let (p, len) = match side {
                Side::First => pf[&e],
                Side::Second => pg[&e],
            };
            (p, len.clone())
        };
        let is_outer = |side: Side, e: Endpoint| {
            matches!((side, e), (Side::First, Endpoint::In(_)) | (Side::Second, Endpoint::Out(_)))
        };
        let mut glued = vec![false; f.target.len()];
        let mut arcs = Vec::new();
        let mut done = BTreeMap::new();

        let starts = (0..f.source.len())
            .map(|i| (Side::First, Endpoint::In(i)))
            .chain((0..g.target.len()).map(|k| (Side::Second, Endpoint::Out(k))));
        for (side0, e0) in starts {
            if done.contains_key(&(side0, e0)) {
                continue;
            }
            let (mut side, mut e) = (side0, e0);
            let mut total = Q::zero();
            loop {
                let (p, len) = step(side, e);
                total += len;
                if is_outer(side, p) {
                    done.insert((side0, e0), ());
                    done.insert((side, p), ());
                    arcs.push(Arc::new(e0, p, total));
                    break;
                }
                // p lies on the glued boundary Y: cross to the other piece
                let (j, other) = match (side, p) {
                    (Side::First, Endpoint::Out(j)) => (j, (Side::Second, Endpoint::In(j))),
                    (Side::Second, Endpoint::In(j)) => (j, (Side::First, Endpoint::Out(j))),
                    _ => unreachable!("inner endpoints are Out of f or In of g"),
                };
                glued[j] = true;
                (side, e) = other;
            }
        }

        let mut circles: Vec<Q> = f.circles.iter().chain(&g.circles).cloned().collect();
        for j0 in 0..glued.len() {
            if glued[j0] {
                continue;
            }
            let mut total = Q::zero();
            let (mut side, mut e) = (Side::First, Endpoint::Out(j0));
            loop {
                let (p, len) = step(side, e);
                total += len;
                let (j, other) = match (side, p) {
                    (Side::First, Endpoint::Out(j)) => (j, (Side::Second, Endpoint::In(j))),
                    (Side::Second, Endpoint::In(j)) => (j, (Side::First, Endpoint::Out(j))),
                    _ => unreachable!("a cycle never reaches the outer boundary"),
                };
                glued[j] = true;
                (side, e) = other;
                if (side, e) == (Side::First, Endpoint::Out(j0)) {
                    break;
                }
            }
            circles.push(total);
        }
        Ok(RBordMorphism::normalized(
            f.source.clone(),
            g.target.clone(),
            arcs,
            circles,
        ))
    }

    fn tensor(&self, f: &RBordMorphism, g: &RBordMorphism) -> Result<RBordMorphism> {
        let (sx, sy) = (f.source.len(), f.target.len());
        let shift = |e: Endpoint| match e {
            Endpoint::In(i) => Endpoint::In(i + sx),
            Endpoint::Out(j) => Endpoint::Out(j + sy),
        };
        let arcs = f
            .arcs
            .iter()
            .cloned()
            .chain(g.arcs.iter().map(|a| Arc::new(shift(a.a), shift(a.b), a.length.clone())))
            .collect();
        let circles = f.circles.iter().chain(&g.circles).cloned().collect();
        Ok(RBordMorphism::normalized(
            f.source.concat(&g.source),
            f.target.concat(&g.target),
            arcs,
            circles,
        ))
    }

    /// The isometry `X ⊔ Y → Y ⊔ X`.
    fn switching(&self, x: &PointSet, y: &PointSet) -> RBordMorphism {
        let (m, n) = (x.len(), y.len());
        let perm: Vec<usize> = (0..m).map(|i| n + i).chain(0..n).collect();
        isometry(x.concat(y), y.concat(x), &perm).expect("swap matching is valid")
    }
}

/// `Z` for a cut of `σ: X → Y` is the primed copy of `Y`.
fn collar(y: &PointSet, z: &PointSet, eps: &Q) -> Result<RBordMorphism> {
    let n = y.len();
    let arcs = (0..n)
        .map(|j| Arc::new(Endpoint::Out(j), Endpoint::Out(n + j), eps.clone()))
        .collect();
    RBordMorphism::new(PointSet::empty(), y.concat(z), arcs, vec![])
}

/// Largest admissible collar width: no arc touching `Y` may be used up.
pub fn max_collar(sigma: &RBordMorphism) -> Option<Q> {
    sigma
        .arcs
        .iter()
        .filter_map(|arc| {
            let outs = [arc.a, arc.b]
                .iter()
                .filter(|e| matches!(e, Endpoint::Out(_)))
                .count();
            (outs > 0).then(|| arc.length.clone() / Q::from_integer(outs.into()))
        })
        .min()
}

fn ensure_bordism(sigma: &RBordMorphism) -> Result<()> {
    match sigma.kind() {
        MorphismKind::Bordism => Ok(()),
        MorphismKind::Isometry => Err(Error::NotBordism(format!(
            "isometry {} -> {} has no thickener",
            sigma.source, sigma.target
        ))),
        MorphismKind::Mixed => Err(Error::NotBordism(format!(
            "{} -> {} contains length-zero arcs",
            sigma.source, sigma.target
        ))),
    }
}

/// Cuts `σ: X → Y` along a collar `Y × [0, ε]` of width `ε = fraction · h`,
/// where `h` is [`max_collar`]. Returns `(Z, t, b)` with `t` the collar and
/// `b` the rest of `σ`.
pub fn cut_thickener(sigma: &RBordMorphism, fraction: &Q) -> Result<Triple<RBord1>> {
    if !fraction.is_positive() || *fraction >= Q::one() {
        return Err(Error::Invalid(format!(
            "cut fraction {} must lie strictly between 0 and 1",
            format_q(fraction)
        )));
    }
    ensure_bordism(sigma)?;
    let eps = match max_collar(sigma) {
        Some(h) => h * fraction,
        None => Q::zero(),
    };
    cut_at_width(sigma, &eps)
}

/// [`cut_thickener`] with the collar width given directly; `0 < ε < h`.
pub fn cut_thickener_width(sigma: &RBordMorphism, eps: &Q) -> Result<Triple<RBord1>> {
    ensure_bordism(sigma)?;
    let admissible = match max_collar(sigma) {
        Some(h) => eps.is_positive() && *eps < h,
        None => true,
    };
    if !admissible {
        return Err(Error::Invalid(format!(
            "collar width {} does not fit inside the bordism",
            format_q(eps)
        )));
    }
    cut_at_width(sigma, eps)
}

fn cut_at_width(sigma: &RBordMorphism, eps: &Q) -> Result<Triple<RBord1>> {
    let (x, y) = (&sigma.source, &sigma.target);
    let z = y.primed();
    let n = y.len();
    let t = collar(y, &z, eps)?;
    let remap = |e: Endpoint| match e {
        Endpoint::Out(j) => Endpoint::In(j),
        Endpoint::In(i) => Endpoint::In(n + i),
    };
    let arcs = sigma
        .arcs
        .iter()
        .map(|arc| {
            let outs = [arc.a, arc.b]
                .iter()
                .filter(|e| matches!(e, Endpoint::Out(_)))
                .count();
            let length = &arc.length - eps * Q::from_integer(outs.into());
            Arc::new(remap(arc.a), remap(arc.b), length)
        })
        .collect();
    let b = RBordMorphism::new(z.concat(x), PointSet::empty(), arcs, sigma.circles.clone())?;
    ThickTriple::new(&RBord1, x.clone(), y.clone(), z, t, b)
}

/// The slide from the cut at `fraction_1` to the cut at `fraction_2 > fraction_1`:
/// `g: Z → Z` is the collar between the two cut positions.
pub fn cut_slide(sigma: &RBordMorphism, fraction_1: &Q, fraction_2: &Q) -> Result<Witness<RBord1>> {
    if fraction_1 >= fraction_2 {
        return Err(Error::Invalid("cut fractions must increase".into()));
    }
    let near = cut_thickener(sigma, fraction_1)?;
    let far = cut_thickener(sigma, fraction_2)?;
    let h = max_collar(sigma).unwrap_or_else(Q::zero);
    let width = h * (fraction_2 - fraction_1);
    let z = near.z().clone();
    let arcs = (0..z.len())
        .map(|j| Arc::new(Endpoint::In(j), Endpoint::Out(j), width.clone()))
        .collect();
    let g = RBordMorphism::new(z.clone(), z, arcs, vec![])?;
    let witness = slide(&RBord1, &sigma.source, &sigma.target, near.t(), &g, far.b())?;
    debug_assert_eq!(witness.left, near);
    debug_assert_eq!(witness.right, far);
    Ok(witness)
}

/// Closes an endomorphism bordism by identifying each source point with the
/// matching target point; returns the resulting circles as a morphism `∅ → ∅`.
pub fn glue_trace(sigma: &RBordMorphism) -> Result<RBordMorphism> {
    if sigma.source != sigma.target {
        return Err(Error::NotEndo {
            source_obj: sigma.source.to_string(),
            target_obj: sigma.target.to_string(),
        });
    }
    ensure_bordism(sigma)?;
    let partner = sigma.partner();
    let twin = |e: Endpoint| match e {
        Endpoint::In(i) => Endpoint::Out(i),
        Endpoint::Out(j) => Endpoint::In(j),
    };
    let mut visited = BTreeMap::new();
    let mut circles = sigma.circles.clone();
    for start in (0..sigma.source.len()).map(Endpoint::In) {
        if visited.contains_key(&start) {
            continue;
        }
        let mut e = start;
        let mut total = Q::zero();
        loop {
            visited.insert(e, ());
            let (p, len) = partner[&e];
            visited.insert(p, ());
            total += len;
            e = twin(p);
            if e == start {
                break;
            }
        }
        circles.push(total);
    }
    RBordMorphism::new(PointSet::empty(), PointSet::empty(), vec![], circles)
}

/// An exact 1-dimensional field theory into `FinVect`: every point carries
/// `Q^n` and an arc of integer length `L` acts by `A^L`.
///
/// Caps and cups pair two copies of `Q^n`, and since these bordisms are
/// unoriented the pairing must not depend on the order of its ends, so `A`
/// must be symmetric whenever one occurs.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldTheory {
    a: RatMatrix,
}

impl FieldTheory {
    pub fn new(a: RatMatrix) -> Result<Self> {
        if !a.is_square() || a.rows() == 0 {
            return Err(Error::Invalid(format!(
                "field theory needs a nonempty square matrix, got {}x{}",
                a.rows(),
                a.cols()
            )));
        }
        Ok(FieldTheory { a })
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.a
    }

    pub fn dim(&self) -> usize {
        self.a.rows()
    }

    fn power(&self, length: &Q) -> Result<RatMatrix> {
        if !length.is_integer() {
            return Err(Error::NonIntegerLength(format_q(length)));
        }
        let n = length
            .to_integer()
            .to_u32()
            .ok_or_else(|| Error::NonIntegerLength(format_q(length)))?;
        self.a.pow(n)
    }

    /// `E(σ): (Q^n)^{⊗|X|} → (Q^n)^{⊗|Y|}`.
    pub fn evaluate(&self, sigma: &RBordMorphism) -> Result<Mor<Plain>> {
        let n = self.dim();
        let (nx, ny) = (sigma.source.len(), sigma.target.len());
        let bends = sigma
            .arcs
            .iter()
            .any(|arc| matches!((arc.a, arc.b), (Endpoint::In(_), Endpoint::In(_)) | (Endpoint::Out(_), Endpoint::Out(_))));
        if bends && !self.a.is_symmetric() {
            return Err(Error::Invalid(
                "caps and cups need a symmetric matrix in an unoriented field theory".into(),
            ));
        }
        let powers: Vec<RatMatrix> = sigma
            .arcs
            .iter()
            .map(|arc| self.power(&arc.length))
            .collect::<Result<_>>()?;
        let mut scalar = Q::one();
        for c in &sigma.circles {
            scalar *= self.power(c)?.trace()?;
        }

        let rows = n.pow(ny as u32);
        let cols = n.pow(nx as u32);
        let digit = |index: usize, count: usize, pos: usize| (index / n.pow((count - 1 - pos) as u32)) % n;
        let mut m = RatMatrix::zeros(rows, cols);
        if !scalar.is_zero() {
            for r in 0..rows {
                for c in 0..cols {
                    let value_at = |e: Endpoint| match e {
                        Endpoint::In(i) => digit(c, nx, i),
                        Endpoint::Out(j) => digit(r, ny, j),
                    };
                    let mut entry = scalar.clone();
                    for (arc, p) in sigma.arcs.iter().zip(&powers) {
                        // through arcs read A^L[out][in]; arcs sorted so a = In when mixed
                        let v = match (arc.a, arc.b) {
                            (Endpoint::In(_), Endpoint::Out(_)) => p.get(value_at(arc.b), value_at(arc.a)),
                            _ => p.get(value_at(arc.a), value_at(arc.b)),
                        };
                        if v.is_zero() {
                            entry = Q::zero();
                            break;
                        }
                        entry *= v;
                    }
                    if !entry.is_zero() {
                        m.set(r, c, entry);
                    }
                }
            }
        }
        Ok(FinVect::new().mor(m))
    }

    /// `E(σ)` of a closed bordism as a scalar.
    pub fn partition_function(&self, sigma: &RBordMorphism) -> Result<Q> {
        if !sigma.is_closed() {
            return Err(Error::domain("partition function", "pts{} -> pts{}", format!("{} -> {}", sigma.source, sigma.target)));
        }
        Ok(self.evaluate(sigma)?.matrix().get(0, 0))
    }
}

fn endpoint_label(sigma: &RBordMorphism, e: Endpoint) -> &str {
    match e {
        Endpoint::In(i) => &sigma.source.labels[i],
        Endpoint::Out(j) => &sigma.target.labels[j],
    }
}

/// Literal form: `iso{x->y}` for isometries, otherwise
/// `bord{ x->y : 3, in(x,y) : 2, out(x,y) : 1, loop: 2 }`.
impl fmt::Display for RBordMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.kind() == MorphismKind::Isometry {
            let parts: Vec<String> = self
                .arcs
                .iter()
                .map(|a| format!("{}->{}", endpoint_label(self, a.a), endpoint_label(self, a.b)))
                .collect();
            return write!(f, "iso{{{}}}", parts.join(", "));
        }
        let mut parts: Vec<String> = self
            .arcs
            .iter()
            .map(|arc| {
                let (a, b) = (endpoint_label(self, arc.a), endpoint_label(self, arc.b));
                let len = format_q(&arc.length);
                match (arc.a, arc.b) {
                    (Endpoint::In(_), Endpoint::Out(_)) => format!("{a}->{b} : {len}"),
                    (Endpoint::In(_), Endpoint::In(_)) => format!("in({a},{b}) : {len}"),
                    _ => format!("out({a},{b}) : {len}"),
                }
            })
            .collect();
        parts.extend(self.circles.iter().map(|c| format!("loop: {}", format_q(c))));
        if parts.is_empty() {
            write!(f, "bord{{}}")
        } else {
            write!(f, "bord{{ {} }}", parts.join(", "))
        }
    }
}

impl fmt::Debug for RBordMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} : {} -> {}", self.source, self.target)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::thickened::{psi, trace_pairing, tr_hat, pre_compose};
    use crate::vect::{canonical_thickener, q_frac, q_int, scalar_of};

    fn q(n: i64) -> Q {
        q_int(n)
    }

    /// Independent oracle: follow a permutation cycle structure given as
    /// `σ(i)` with arc lengths `len[i]` for a bordism made of through arcs.
    fn cycle_lengths(perm: &[usize], len: &[i64]) -> Vec<i64> {
        let mut seen = vec![false; perm.len()];
        let mut out = Vec::new();
        for s in 0..perm.len() {
            if seen[s] {
                continue;
            }
            let (mut i, mut total) = (s, 0);
            while !seen[i] {
                seen[i] = true;
                total += len[i];
                i = perm[i];
            }
            out.push(total);
        }
        out.sort();
        out
    }

    fn through(labels: &[&str], perm: &[usize], lens: &[i64]) -> RBordMorphism {
        let pts = PointSet::new(labels.iter().copied());
        let arcs = perm
            .iter()
            .enumerate()
            .map(|(i, &j)| Arc::new(Endpoint::In(i), Endpoint::Out(j), q(lens[i])))
            .collect();
        RBordMorphism::new(pts.clone(), pts, arcs, vec![]).unwrap()
    }

    #[test]
    fn interval_lengths_add() {
        let cat = RBord1;
        let g = interval("x", "y", q(2)).unwrap();
        let f = interval("w", "x", q(3)).unwrap();
        assert_eq!(cat.compose(&g, &f).unwrap(), interval("w", "y", q(5)).unwrap());
        assert!(cat.compose(&f, &g).is_err());
    }

    #[test]
    fn cap_then_cup_is_a_circle() {
        let closed = RBord1.compose(&cup("a", "b", q(2)).unwrap(), &cap("a", "b", q(1)).unwrap()).unwrap();
        assert_eq!(closed, circle(q(3)).unwrap());
    }

    #[test]
    fn tensor_is_disjoint_union() {
        let cat = RBord1;
        let both = cat
            .tensor(&interval("a", "b", q(1)).unwrap(), &interval("c", "d", q(2)).unwrap())
            .unwrap();
        assert_eq!(both.arcs().len(), 2);
        assert_eq!(both.source(), &PointSet::new(["a", "c"]));
        assert_eq!(both.arcs()[1], Arc::new(Endpoint::In(1), Endpoint::Out(1), q(2)));
        let f = interval("a", "b", q(1)).unwrap();
        assert_eq!(cat.tensor(&f, &cat.identity(&PointSet::empty())).unwrap(), f);
    }

    #[test]
    fn isometries_relabel() {
        let cat = RBord1;
        let sigma = interval("x", "y", q(4)).unwrap();
        let rename = isometry(PointSet::new(["y"]), PointSet::new(["u"]), &[0]).unwrap();
        let moved = cat.compose(&rename, &sigma).unwrap();
        assert_eq!(moved, interval("x", "u", q(4)).unwrap());
        assert_eq!(rename.kind(), MorphismKind::Isometry);
        let empty = cat.identity(&PointSet::empty());
        assert_eq!(empty.kind(), MorphismKind::Bordism);
    }

    #[test]
    fn glue_trace_follows_cycles() {
        assert_eq!(
            glue_trace(&interval("x", "x", q(3)).unwrap()).unwrap(),
            circle(q(3)).unwrap()
        );
        let swap = through(&["x", "y"], &[1, 0], &[1, 2]);
        assert_eq!(glue_trace(&swap).unwrap().circles(), &[q(3)]);
        let parallel = through(&["x", "y"], &[0, 1], &[4, 2]);
        assert_eq!(glue_trace(&parallel).unwrap().circles(), &[q(2), q(4)]);

        let perm = [2, 0, 1, 4, 3];
        let lens = [1, 2, 3, 4, 5];
        let sigma = through(&["a", "b", "c", "d", "e"], &perm, &lens);
        let got: Vec<i64> = glue_trace(&sigma)
            .unwrap()
            .circles()
            .iter()
            .map(|c| c.to_integer().try_into().unwrap())
            .collect();
        assert_eq!(got, cycle_lengths(&perm, &lens));
    }

    #[test]
    fn glue_trace_rejects_isometries_and_non_endos() {
        let id = RBord1.identity(&PointSet::new(["x"]));
        assert!(matches!(glue_trace(&id), Err(Error::NotBordism(_))));
        let f = interval("x", "y", q(1)).unwrap();
        assert!(matches!(glue_trace(&f), Err(Error::NotEndo { .. })));
    }

    #[test]
    fn cut_regluing_and_collar_width() {
        let cat = RBord1;
        let sigma = interval("x", "x", q(5)).unwrap();
        let tr = cut_thickener(&sigma, &q_frac(1, 5)).unwrap();
        assert_eq!(tr.t().arcs()[0].length, q(1));
        assert_eq!(tr.b().arcs()[0].length, q(4));
        assert_eq!(psi(&cat, &tr).unwrap(), sigma);
        assert_eq!(tr_hat(&cat, &tr).unwrap(), circle(q(5)).unwrap());
        assert!(cut_thickener(&sigma, &q(1)).is_err());
        let iso = cat.identity(&PointSet::new(["x"]));
        assert!(matches!(cut_thickener(&iso, &q_frac(1, 2)), Err(Error::NotBordism(_))));
    }

    #[test]
    fn psi_glues_collar_and_rest() {
        // t: ∅ → {y, z} of length 1 and b: {z, x} → ∅ of length 2
        let t = cap("y", "z", q(1)).unwrap();
        let b = cup("z", "x", q(2)).unwrap();
        let tr = ThickTriple::new(
            &RBord1,
            PointSet::new(["x"]),
            PointSet::new(["y"]),
            PointSet::new(["z"]),
            t,
            b,
        )
        .unwrap();
        assert_eq!(psi(&RBord1, &tr).unwrap(), interval("x", "y", q(3)).unwrap());
    }

    #[test]
    fn two_cuts_are_slide_related() {
        let cat = RBord1;
        let sigma = through(&["x", "y"], &[1, 0], &[3, 2]);
        let w = cut_slide(&sigma, &q_frac(1, 4), &q_frac(2, 3)).unwrap();
        assert!(w.verify(&cat).unwrap());
        assert_eq!(psi(&cat, &w.left).unwrap(), psi(&cat, &w.right).unwrap());
        assert_eq!(tr_hat(&cat, &w.left).unwrap(), tr_hat(&cat, &w.right).unwrap());
        assert_eq!(tr_hat(&cat, &w.left).unwrap(), glue_trace(&sigma).unwrap());
    }

    #[test]
    fn free_circles_ride_in_b() {
        let mut sigma = interval("x", "x", q(2)).unwrap();
        sigma = RBord1.tensor(&sigma, &circle(q(7)).unwrap()).unwrap();
        let tr = cut_thickener(&sigma, &q_frac(1, 2)).unwrap();
        assert_eq!(tr.b().circles(), &[q(7)]);
        assert_eq!(psi(&RBord1, &tr).unwrap(), sigma);
        assert_eq!(tr_hat(&RBord1, &tr).unwrap().circles(), &[q(2), q(7)]);
    }

    #[test]
    fn pre_compose_with_isometry_relabels_b() {
        let sigma = interval("x", "y", q(3)).unwrap();
        let tr = cut_thickener(&sigma, &q_frac(1, 3)).unwrap();
        let rename = isometry(PointSet::new(["w"]), PointSet::new(["x"]), &[0]).unwrap();
        let moved = pre_compose(&RBord1, &tr, &rename).unwrap();
        assert_eq!(moved.b().source(), &PointSet::new(["y'", "w"]));
        assert_eq!(moved.b().arcs()[0].length, q(2));
    }

    #[test]
    fn field_theory_values() {
        let diag = FieldTheory::new(RatMatrix::diagonal([q(2), q(3)])).unwrap();
        assert_eq!(diag.partition_function(&circle(q(2)).unwrap()).unwrap(), q(13));
        let id = RBord1.identity(&PointSet::new(["x", "y"]));
        assert_eq!(diag.evaluate(&id).unwrap().matrix(), &RatMatrix::identity(4));

        let a = FieldTheory::new(RatMatrix::from_i64(&[&[1, 1], &[0, 1]])).unwrap();
        let s1 = interval("x", "y", q(1)).unwrap();
        let s2 = interval("y", "x", q(1)).unwrap();
        let closed = glue_trace(&RBord1.compose(&s2, &s1).unwrap()).unwrap();
        assert_eq!(a.partition_function(&closed).unwrap(), q(2));
        let cat = FinVect::new();
        let e2 = a.evaluate(&s2).unwrap();
        let pairing = trace_pairing(&cat, &canonical_thickener(&cat, &e2).unwrap(), &a.evaluate(&s1).unwrap()).unwrap();
        assert_eq!(scalar_of(&pairing).unwrap(), q(2));

        let flip = FieldTheory::new(RatMatrix::from_i64(&[&[0, 1], &[1, 0]])).unwrap();
        assert_eq!(flip.partition_function(&circle(q(3)).unwrap()).unwrap(), q(0));
        assert!(matches!(
            flip.evaluate(&interval("x", "y", q_frac(1, 2)).unwrap()),
            Err(Error::NonIntegerLength(_))
        ));
    }

    #[test]
    fn field_theory_is_functorial_on_caps() {
        let sym = FieldTheory::new(RatMatrix::from_i64(&[&[1, 2], &[2, -1]])).unwrap();
        let cap_ = cap("a", "b", q(1)).unwrap();
        let cup_ = cup("a", "b", q(2)).unwrap();
        let glued = RBord1.compose(&cup_, &cap_).unwrap();
        let via_matrices = sym.evaluate(&cup_).unwrap().matrix().mul(sym.evaluate(&cap_).unwrap().matrix()).unwrap();
        assert_eq!(sym.evaluate(&glued).unwrap().matrix(), &via_matrices);
        let lopsided = FieldTheory::new(RatMatrix::from_i64(&[&[1, 1], &[0, 1]])).unwrap();
        assert!(lopsided.evaluate(&cap_).is_err());
    }

    #[test]
    fn serde_round_trip() {
        let sigma = RBord1.tensor(&cap("a", "b", q_frac(3, 2)).unwrap(), &circle(q(2)).unwrap()).unwrap();
        let json = serde_json::to_string(&sigma).unwrap();
        assert_eq!(serde_json::from_str::<RBordMorphism>(&json).unwrap(), sigma);
        assert_eq!(sigma.to_string(), "bord{ out(a,b) : 3/2, loop: 2 }");
    }
}
