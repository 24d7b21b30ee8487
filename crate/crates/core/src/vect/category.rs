use std::fmt;

use num_traits::One;

use super::matrix::{RatMatrix, Q};
use super::space::{Grade, GradedMap, Space};
use crate::category::{
    Additive, Balanced, Braided, Capabilities, DualData, Dualizable, MonoidalCategory,
};
use crate::error::{Error, Result};

/// Grading data of a matrix instance: the grade group plus the scalars that
/// the braiding and twist contribute on homogeneous basis vectors.
pub trait GradeKind: Clone + fmt::Debug + PartialEq + Send + Sync {
    type Grade: Grade;

    fn instance_id(&self) -> String;
    /// Scalar of `c_{X,Y}` on `x ⊗ y` with `x` of grade `a` and `y` of grade `b`.
    fn braid_scalar(&self, a: Self::Grade, b: Self::Grade) -> Q;
    /// Scalar of `θ_X` on a basis vector of grade `a`.
    fn twist_scalar(&self, a: Self::Grade) -> Q;
    fn symmetric(&self) -> bool;
}

/// A strict monoidal category of graded finite-dimensional rational spaces.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixCategory<K> {
    kind: K,
}

pub type Obj<K> = Space<<K as GradeKind>::Grade>;
pub type Mor<K> = GradedMap<<K as GradeKind>::Grade>;

impl<K: GradeKind> MatrixCategory<K> {
    pub fn with_kind(kind: K) -> Self {
        MatrixCategory { kind }
    }

    pub fn kind(&self) -> &K {
        &self.kind
    }

    pub fn morphism(&self, source: Obj<K>, target: Obj<K>, matrix: RatMatrix) -> Result<Mor<K>> {
        GradedMap::new(source, target, matrix)
    }

    /// The braiding-free swap `x ⊗ y ↦ y ⊗ x`.
    pub fn plain_swap(&self, x: &Obj<K>, y: &Obj<K>) -> Mor<K> {
        self.swap_with(x, y, |_, _| Q::one())
    }

    fn swap_with(
        &self,
        x: &Obj<K>,
        y: &Obj<K>,
        scalar: impl Fn(K::Grade, K::Grade) -> Q,
    ) -> Mor<K> {
        let (m, n) = (x.dim(), y.dim());
        let mut perm = Vec::with_capacity(m * n);
        let mut scale = Vec::with_capacity(m * n);
        for i in 0..m {
            for j in 0..n {
                perm.push(j * m + i);
                scale.push(scalar(x.grades()[i], y.grades()[j]));
            }
        }
        GradedMap::new_unchecked(
            x.tensor(y),
            y.tensor(x),
            RatMatrix::weighted_permutation(&perm, &scale),
        )
    }

    /// Matrix of a map `I → Y⊗Z` read as a `dim(Y) × dim(Z)` table.
    pub fn unit_vector(&self, target: Obj<K>, entries: RatMatrix) -> Result<Mor<K>> {
        GradedMap::new(Space::unit(), target, entries)
    }

    pub fn zero_mor_between(&self, x: &Obj<K>, y: &Obj<K>) -> Mor<K> {
        GradedMap::new_unchecked(x.clone(), y.clone(), RatMatrix::zeros(y.dim(), x.dim()))
    }

    pub fn scale(&self, f: &Mor<K>, s: &Q) -> Mor<K> {
        GradedMap::new_unchecked(f.source().clone(), f.target().clone(), f.matrix().scale(s))
    }
}

impl<K: GradeKind> MonoidalCategory for MatrixCategory<K> {
    type Object = Obj<K>;
    type Morphism = Mor<K>;

    fn instance_id(&self) -> String {
        self.kind.instance_id()
    }

    fn capabilities(&self) -> Capabilities {
        Capabilities {
            additive: true,
            braided: true,
            balanced: true,
            symmetric: self.kind.symmetric(),
            duals: true,
        }
    }

    fn unit_object(&self) -> Obj<K> {
        Space::unit()
    }

    fn tensor_obj(&self, x: &Obj<K>, y: &Obj<K>) -> Obj<K> {
        x.tensor(y)
    }

    fn source(&self, f: &Mor<K>) -> Obj<K> {
        f.source().clone()
    }

    fn target(&self, f: &Mor<K>) -> Obj<K> {
        f.target().clone()
    }

    fn identity(&self, x: &Obj<K>) -> Mor<K> {
        GradedMap::new_unchecked(x.clone(), x.clone(), RatMatrix::identity(x.dim()))
    }

    fn compose(&self, g: &Mor<K>, f: &Mor<K>) -> Result<Mor<K>> {
        if f.target() != g.source() {
            return Err(Error::domain("compose", g.source(), f.target()));
        }
        Ok(GradedMap::new_unchecked(
            f.source().clone(),
            g.target().clone(),
            g.matrix().mul(f.matrix())?,
        ))
    }

    fn tensor(&self, f: &Mor<K>, g: &Mor<K>) -> Result<Mor<K>> {
        Ok(GradedMap::new_unchecked(
            f.source().tensor(g.source()),
            f.target().tensor(g.target()),
            f.matrix().kron(g.matrix()),
        ))
    }

    fn switching(&self, x: &Obj<K>, y: &Obj<K>) -> Mor<K> {
        self.balanced_switching(x, y)
    }
}

impl<K: GradeKind> Braided for MatrixCategory<K> {
    fn braiding(&self, x: &Obj<K>, y: &Obj<K>) -> Mor<K> {
        self.swap_with(x, y, |a, b| self.kind.braid_scalar(a, b))
    }

    fn braiding_inv(&self, x: &Obj<K>, y: &Obj<K>) -> Mor<K> {
        // inverse of x⊗y ↦ λ·y⊗x is y⊗x ↦ λ⁻¹·x⊗y
        let (m, n) = (x.dim(), y.dim());
        let mut perm = vec![0; m * n];
        let mut scale = vec![Q::one(); m * n];
        for i in 0..m {
            for j in 0..n {
                perm[j * m + i] = i * n + j;
                scale[j * m + i] = self.kind.braid_scalar(x.grades()[i], y.grades()[j]).recip();
            }
        }
        GradedMap::new_unchecked(
            y.tensor(x),
            x.tensor(y),
            RatMatrix::weighted_permutation(&perm, &scale),
        )
    }
}

impl<K: GradeKind> Balanced for MatrixCategory<K> {
    fn twist(&self, x: &Obj<K>) -> Mor<K> {
        GradedMap::new_unchecked(
            x.clone(),
            x.clone(),
            RatMatrix::diagonal(x.grades().iter().map(|&g| self.kind.twist_scalar(g))),
        )
    }
}

impl<K: GradeKind> Additive for MatrixCategory<K> {
    fn zero_object(&self) -> Obj<K> {
        Space::from_grades(Vec::new())
    }

    fn direct_sum(&self, x: &Obj<K>, y: &Obj<K>) -> Obj<K> {
        x.direct_sum(y)
    }

    fn zero_mor(&self, x: &Obj<K>, y: &Obj<K>) -> Mor<K> {
        self.zero_mor_between(x, y)
    }

    fn add_mor(&self, f: &Mor<K>, g: &Mor<K>) -> Result<Mor<K>> {
        if f.source() != g.source() || f.target() != g.target() {
            return Err(Error::domain(
                "add_mor",
                format!("{} -> {}", f.source(), f.target()),
                format!("{} -> {}", g.source(), g.target()),
            ));
        }
        Ok(GradedMap::new_unchecked(
            f.source().clone(),
            f.target().clone(),
            f.matrix().add(g.matrix())?,
        ))
    }

    fn negate(&self, f: &Mor<K>) -> Mor<K> {
        GradedMap::new_unchecked(f.source().clone(), f.target().clone(), f.matrix().neg())
    }

    fn injection(&self, x: &Obj<K>, y: &Obj<K>, first: bool) -> Mor<K> {
        let sum = x.direct_sum(y);
        let (part, offset) = if first { (x, 0) } else { (y, x.dim()) };
        let mut m = RatMatrix::zeros(sum.dim(), part.dim());
        for i in 0..part.dim() {
            m.set(offset + i, i, Q::one());
        }
        GradedMap::new_unchecked(part.clone(), sum, m)
    }

    fn projection(&self, x: &Obj<K>, y: &Obj<K>, first: bool) -> Mor<K> {
        let inj = self.injection(x, y, first);
        GradedMap::new_unchecked(
            inj.target().clone(),
            inj.source().clone(),
            inj.matrix().transpose(),
        )
    }
}

impl<K: GradeKind> Dualizable for MatrixCategory<K> {
    fn has_dual(&self, _: &Obj<K>) -> bool {
        true
    }

    fn dual_data(&self, x: &Obj<K>) -> Result<DualData<Obj<K>, Mor<K>>> {
        let n = x.dim();
        let dual = x.dual();
        let mut ev = RatMatrix::zeros(1, n * n);
        let mut coev = RatMatrix::zeros(n * n, 1);
        for i in 0..n {
            ev.set(0, i * n + i, Q::one());
            coev.set(i * n + i, 0, Q::one());
        }
        Ok(DualData {
            ev: GradedMap::new_unchecked(dual.tensor(x), Space::unit(), ev),
            coev: GradedMap::new_unchecked(Space::unit(), x.tensor(&dual), coev),
            dual,
        })
    }
}
