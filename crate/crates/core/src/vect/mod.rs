//! Finite-dimensional rational vector spaces (`FinVect`) and super vector
//! spaces (`SuperVect`), with duals, the maps `Φ` and `α`, and classical and
//! super traces.

pub mod category;
pub mod matrix;
pub mod space;

use num_traits::One;

pub use category::{GradeKind, MatrixCategory, Mor, Obj};
pub use matrix::{format_q, parse_q, q_frac, q_int, q_pow, RatMatrix, Q};
pub use space::{Grade, GradedMap, Parity, Space};

use crate::category::{Dualizable, MonoidalCategory};
use crate::error::{Error, Result};
use crate::thickened::ThickTriple;

/// Ungraded spaces with the plain swap `x⊗y ↦ y⊗x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Plain;

impl GradeKind for Plain {
    type Grade = ();

    fn instance_id(&self) -> String {
        "finvect".into()
    }
    fn braid_scalar(&self, _: (), _: ()) -> Q {
        Q::one()
    }
    fn twist_scalar(&self, _: ()) -> Q {
        Q::one()
    }
    fn symmetric(&self) -> bool {
        true
    }
}

/// Z/2-graded spaces with the Koszul sign `x⊗y ↦ (−1)^{|x||y|} y⊗x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Super;

impl GradeKind for Super {
    type Grade = Parity;

    fn instance_id(&self) -> String {
        "supervect".into()
    }
    fn braid_scalar(&self, a: Parity, b: Parity) -> Q {
        if a.is_odd() && b.is_odd() {
            -Q::one()
        } else {
            Q::one()
        }
    }
    fn twist_scalar(&self, _: Parity) -> Q {
        Q::one()
    }
    fn symmetric(&self) -> bool {
        true
    }
}

pub type FinVect = MatrixCategory<Plain>;
pub type SuperVect = MatrixCategory<Super>;

impl FinVect {
    pub fn new() -> Self {
        MatrixCategory::with_kind(Plain)
    }

    pub fn obj(&self, dim: usize) -> Obj<Plain> {
        Space::plain(dim)
    }

    /// Reads source and target dimensions off the matrix shape.
    pub fn mor(&self, matrix: RatMatrix) -> Mor<Plain> {
        GradedMap::new_unchecked(Space::plain(matrix.cols()), Space::plain(matrix.rows()), matrix)
    }
}

impl Default for FinVect {
    fn default() -> Self {
        Self::new()
    }
}

impl SuperVect {
    pub fn new() -> Self {
        MatrixCategory::with_kind(Super)
    }

    pub fn obj(&self, even: usize, odd: usize) -> Obj<Super> {
        Space::super_space(even, odd)
    }
}

impl Default for SuperVect {
    fn default() -> Self {
        Self::new()
    }
}

/// `Φ(t) = (id_Y ⊗ ev_X) ∘ (t ⊗ id_X)` for `t: I → Y⊗X∨`.
pub fn phi<K: GradeKind>(
    cat: &MatrixCategory<K>,
    x: &Obj<K>,
    y: &Obj<K>,
    t: &Mor<K>,
) -> Result<Mor<K>> {
    let duals = cat.dual_data(x)?;
    let expected = y.tensor(&duals.dual);
    if *t.target() != expected || *t.source() != Space::unit() {
        return Err(Error::domain(
            "phi",
            format!("I -> {expected}"),
            format!("{} -> {}", t.source(), t.target()),
        ));
    }
    cat.compose(
        &cat.tensor_id_left(y, &duals.ev)?,
        &cat.tensor_id_right(t, x)?,
    )
}

/// `Φ⁻¹(f) = (f ⊗ id_{X∨}) ∘ coev_X` for `f: X → Y`.
pub fn phi_inverse<K: GradeKind>(cat: &MatrixCategory<K>, f: &Mor<K>) -> Result<Mor<K>> {
    let duals = cat.dual_data(f.source())?;
    cat.compose(&cat.tensor_id_right(f, &duals.dual)?, &duals.coev)
}

/// `α(t) = [X∨, t, ev_X]`.
pub fn alpha<K: GradeKind>(
    cat: &MatrixCategory<K>,
    x: &Obj<K>,
    y: &Obj<K>,
    t: &Mor<K>,
) -> Result<ThickTriple<Obj<K>, Mor<K>>> {
    let duals = cat.dual_data(x)?;
    ThickTriple::new(cat, x.clone(), y.clone(), duals.dual, t.clone(), duals.ev)
}

/// The thickener `α(Φ⁻¹(f))` every morphism of a dualizable source has.
pub fn canonical_thickener<K: GradeKind>(
    cat: &MatrixCategory<K>,
    f: &Mor<K>,
) -> Result<ThickTriple<Obj<K>, Mor<K>>> {
    alpha(cat, f.source(), f.target(), &phi_inverse(cat, f)?)
}

fn ensure_endo<G: Grade>(f: &GradedMap<G>) -> Result<()> {
    if f.source() == f.target() {
        Ok(())
    } else {
        Err(Error::NotEndo {
            source_obj: f.source().to_string(),
            target_obj: f.target().to_string(),
        })
    }
}

/// Diagonal sum.
pub fn classical_trace<G: Grade>(f: &GradedMap<G>) -> Result<Q> {
    ensure_endo(f)?;
    f.matrix().trace()
}

/// `classtr(ε ∘ f)` with `ε` the grading involution.
pub fn super_trace(f: &GradedMap<Parity>) -> Result<Q> {
    ensure_endo(f)?;
    let epsilon = RatMatrix::diagonal(
        f.source()
            .grades()
            .iter()
            .map(|p| if p.is_odd() { -Q::one() } else { Q::one() }),
    );
    epsilon.mul(f.matrix())?.trace()
}

/// Reads a morphism `I → I` as the scalar it multiplies by.
pub fn scalar_of<G: Grade>(f: &GradedMap<G>) -> Result<Q> {
    let unit = Space::<G>::unit();
    if *f.source() != unit || *f.target() != unit {
        return Err(Error::domain(
            "scalar",
            "I -> I",
            format!("{} -> {}", f.source(), f.target()),
        ));
    }
    Ok(f.matrix().get(0, 0))
}
