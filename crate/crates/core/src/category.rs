//! The abstract interface shared by every category instance.
//!
//! All instances are strict monoidal: associators and unitors are identities,
//! so `tensor_obj(unit, x) == x` holds on the nose and the interface carries no
//! coherence data. The switching isomorphism `s_{X,Y}` is only required to be
//! natural and invertible; braiding relations are opt-in through [`Braided`].

use std::fmt;

use crate::error::{Error, Result};

/// Static capability table of an instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct Capabilities {
    pub additive: bool,
    pub braided: bool,
    pub balanced: bool,
    pub symmetric: bool,
    pub duals: bool,
}

impl Capabilities {
    /// `symmetric => balanced => braided`.
    pub fn is_consistent(&self) -> bool {
        (!self.symmetric || self.balanced) && (!self.balanced || self.braided)
    }
}

pub trait MonoidalCategory {
    type Object: Clone + PartialEq + fmt::Debug + fmt::Display;
    type Morphism: Clone + PartialEq + fmt::Debug;

    fn instance_id(&self) -> String;
    fn capabilities(&self) -> Capabilities;

    fn unit_object(&self) -> Self::Object;
    fn tensor_obj(&self, x: &Self::Object, y: &Self::Object) -> Self::Object;

    fn source(&self, f: &Self::Morphism) -> Self::Object;
    fn target(&self, f: &Self::Morphism) -> Self::Object;

    fn identity(&self, x: &Self::Object) -> Self::Morphism;
    /// `g ∘ f`; requires `target(f) == source(g)`.
    fn compose(&self, g: &Self::Morphism, f: &Self::Morphism) -> Result<Self::Morphism>;
    fn tensor(&self, f: &Self::Morphism, g: &Self::Morphism) -> Result<Self::Morphism>;
    /// `s_{X,Y}: X⊗Y → Y⊗X`.
    fn switching(&self, x: &Self::Object, y: &Self::Object) -> Self::Morphism;

    /// Exact equality on canonical forms.
    fn mor_equal(&self, f: &Self::Morphism, g: &Self::Morphism) -> bool {
        f == g
    }

    /// Composes a chain given in application order: `chain[0]` runs first.
    fn compose_chain(&self, chain: &[&Self::Morphism]) -> Result<Self::Morphism> {
        let (first, rest) = chain
            .split_first()
            .ok_or_else(|| Error::Invalid("empty composition chain".into()))?;
        rest.iter()
            .try_fold((*first).clone(), |acc, g| self.compose(g, &acc))
    }

    fn tensor_id_left(&self, x: &Self::Object, f: &Self::Morphism) -> Result<Self::Morphism> {
        self.tensor(&self.identity(x), f)
    }

    fn tensor_id_right(&self, f: &Self::Morphism, x: &Self::Object) -> Result<Self::Morphism> {
        self.tensor(f, &self.identity(x))
    }

    fn is_endo(&self, f: &Self::Morphism) -> bool {
        self.source(f) == self.target(f)
    }
}

/// Additive structure with biproducts and a distributive tensor product.
pub trait Additive: MonoidalCategory {
    fn zero_object(&self) -> Self::Object;
    fn direct_sum(&self, x: &Self::Object, y: &Self::Object) -> Self::Object;
    fn zero_mor(&self, x: &Self::Object, y: &Self::Object) -> Self::Morphism;
    fn add_mor(&self, f: &Self::Morphism, g: &Self::Morphism) -> Result<Self::Morphism>;
    fn negate(&self, f: &Self::Morphism) -> Self::Morphism;
    /// Biproduct injection of the first (`first == true`) or second summand.
    fn injection(&self, x: &Self::Object, y: &Self::Object, first: bool) -> Self::Morphism;
    /// Biproduct projection onto the first (`first == true`) or second summand.
    fn projection(&self, x: &Self::Object, y: &Self::Object, first: bool) -> Self::Morphism;
}

pub trait Braided: MonoidalCategory {
    /// `c_{X,Y}: X⊗Y → Y⊗X`, drawn as an overcrossing.
    fn braiding(&self, x: &Self::Object, y: &Self::Object) -> Self::Morphism;
    /// `(c_{X,Y})^{-1}: Y⊗X → X⊗Y`.
    fn braiding_inv(&self, x: &Self::Object, y: &Self::Object) -> Self::Morphism;
}

pub trait Balanced: Braided {
    fn twist(&self, x: &Self::Object) -> Self::Morphism;

    /// `(id_Y ⊗ θ_X) ∘ c_{X,Y}`, the switching map of a balanced category.
    fn balanced_switching(&self, x: &Self::Object, y: &Self::Object) -> Self::Morphism {
        let twist_right = self
            .tensor_id_left(y, &self.twist(x))
            .expect("tensor of identity and twist");
        self.compose(&twist_right, &self.braiding(x, y))
            .expect("twist after braiding is composable")
    }
}

/// Evaluation and coevaluation for a dualizable object.
#[derive(Debug, Clone, PartialEq)]
pub struct DualData<O, M> {
    pub dual: O,
    /// `ev: X∨ ⊗ X → I`
    pub ev: M,
    /// `coev: I → X ⊗ X∨`
    pub coev: M,
}

pub trait Dualizable: MonoidalCategory {
    fn has_dual(&self, x: &Self::Object) -> bool;
    fn dual_data(&self, x: &Self::Object) -> Result<DualData<Self::Object, Self::Morphism>>;
}

/// Checks `target(f) == source(g)` and reports a [`Error::DomainMismatch`] otherwise.
pub fn ensure_composable<C: MonoidalCategory + ?Sized>(
    cat: &C,
    g: &C::Morphism,
    f: &C::Morphism,
    context: &'static str,
) -> Result<()> {
    let (t, s) = (cat.target(f), cat.source(g));
    if t == s {
        Ok(())
    } else {
        Err(Error::domain(context, s, t))
    }
}

/// Checks both zigzag identities for the given dual data.
pub fn zigzags_hold<C: MonoidalCategory + ?Sized>(
    cat: &C,
    x: &C::Object,
    data: &DualData<C::Object, C::Morphism>,
) -> Result<bool> {
    // (id_X ⊗ ev) ∘ (coev ⊗ id_X) = id_X
    let first = cat.compose(
        &cat.tensor_id_left(x, &data.ev)?,
        &cat.tensor_id_right(&data.coev, x)?,
    )?;
    // (ev ⊗ id_{X∨}) ∘ (id_{X∨} ⊗ coev) = id_{X∨}
    let second = cat.compose(
        &cat.tensor_id_right(&data.ev, &data.dual)?,
        &cat.tensor_id_left(&data.dual, &data.coev)?,
    )?;
    Ok(cat.mor_equal(&first, &cat.identity(x)) && cat.mor_equal(&second, &cat.identity(&data.dual)))
}
