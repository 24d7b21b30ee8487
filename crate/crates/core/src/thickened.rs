//! Thickened morphisms, represented by triples `(Z, t, b)` with
//! `t: I → Y⊗Z` and `b: Z⊗X → I`.
//!
//! A triple is only a representative of its class; nothing here decides
//! whether two triples are equivalent. Every statement about classes is
//! phrased through the functionals [`psi`] and [`tr_hat`] and through explicit
//! [`SlideWitness`] values.

use serde::{Deserialize, Serialize};

use crate::category::{Additive, Braided, MonoidalCategory};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThickTriple<O, M> {
    dom: O,
    cod: O,
    z: O,
    t: M,
    b: M,
}

pub type Triple<C> = ThickTriple<<C as MonoidalCategory>::Object, <C as MonoidalCategory>::Morphism>;

impl<O: Clone + PartialEq + std::fmt::Display, M: Clone> ThickTriple<O, M> {
    /// Builds a triple from `X = dom`, `Y = cod`, `Z`, `t` and `b`, checking
    /// that `t: I → Y⊗Z` and `b: Z⊗X → I`.
    pub fn new<C>(cat: &C, dom: O, cod: O, z: O, t: M, b: M) -> Result<Self>
    where
        C: MonoidalCategory<Object = O, Morphism = M> + ?Sized,
    {
        let unit = cat.unit_object();
        let expect = |ctx: &'static str, want: O, got: O| {
            if want == got {
                Ok(())
            } else {
                Err(Error::domain(ctx, want, got))
            }
        };
        expect("triple: source of t", unit.clone(), cat.source(&t))?;
        expect("triple: target of t", cat.tensor_obj(&cod, &z), cat.target(&t))?;
        expect("triple: source of b", cat.tensor_obj(&z, &dom), cat.source(&b))?;
        expect("triple: target of b", unit, cat.target(&b))?;
        Ok(ThickTriple { dom, cod, z, t, b })
    }

    pub fn dom(&self) -> &O {
        &self.dom
    }

    pub fn cod(&self) -> &O {
        &self.cod
    }

    pub fn z(&self) -> &O {
        &self.z
    }

    pub fn t(&self) -> &M {
        &self.t
    }

    pub fn b(&self) -> &M {
        &self.b
    }
}

/// `Ψ(Z, t, b) = (id_Y ⊗ b) ∘ (t ⊗ id_X)`.
pub fn psi<C: MonoidalCategory + ?Sized>(cat: &C, tr: &Triple<C>) -> Result<C::Morphism> {
    let top = cat.tensor_id_right(&tr.t, &tr.dom)?;
    let bottom = cat.tensor_id_left(&tr.cod, &tr.b)?;
    cat.compose(&bottom, &top)
}

/// `tr̂(Z, t, b) = b ∘ s_{X,Z} ∘ t` for an endomorphism-shaped triple.
pub fn tr_hat<C: MonoidalCategory + ?Sized>(cat: &C, tr: &Triple<C>) -> Result<C::Morphism> {
    tr_hat_with(cat, tr, |x, z| cat.switching(x, z))
}

/// [`tr_hat`] with an arbitrary replacement for the switching map.
pub fn tr_hat_with<C, S>(cat: &C, tr: &Triple<C>, switch: S) -> Result<C::Morphism>
where
    C: MonoidalCategory + ?Sized,
    S: Fn(&C::Object, &C::Object) -> C::Morphism,
{
    if tr.dom != tr.cod {
        return Err(Error::NotEndo {
            source_obj: tr.dom.to_string(),
            target_obj: tr.cod.to_string(),
        });
    }
    let s = switch(&tr.dom, &tr.z);
    cat.compose_chain(&[&tr.t, &s, &tr.b])
}

/// `f̂ ∘ f = [Z, t, b ∘ (id_Z ⊗ f)]` for `f: W → X`.
pub fn pre_compose<C: MonoidalCategory + ?Sized>(
    cat: &C,
    tr: &Triple<C>,
    f: &C::Morphism,
) -> Result<Triple<C>> {
    let f_target = cat.target(f);
    if f_target != tr.dom {
        return Err(Error::domain("pre_compose", &tr.dom, f_target));
    }
    let b = cat.compose(&tr.b, &cat.tensor_id_left(&tr.z, f)?)?;
    Ok(ThickTriple {
        dom: cat.source(f),
        cod: tr.cod.clone(),
        z: tr.z.clone(),
        t: tr.t.clone(),
        b,
    })
}

/// `f ∘ f̂ = [Z, (f ⊗ id_Z) ∘ t, b]` for `f: Y → W`.
pub fn post_compose<C: MonoidalCategory + ?Sized>(
    cat: &C,
    f: &C::Morphism,
    tr: &Triple<C>,
) -> Result<Triple<C>> {
    let f_source = cat.source(f);
    if f_source != tr.cod {
        return Err(Error::domain("post_compose", &tr.cod, f_source));
    }
    let t = cat.compose(&cat.tensor_id_right(f, &tr.z)?, &tr.t)?;
    Ok(ThickTriple {
        dom: tr.dom.clone(),
        cod: cat.target(f),
        z: tr.z.clone(),
        t,
        b: tr.b.clone(),
    })
}

/// A morphism `g: Z → Z'` of triples from `left = (Z, t, b)` to
/// `right = (Z', t', b')`: `t' = (id_Y ⊗ g) ∘ t` and `b = b' ∘ (g ⊗ id_X)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SlideWitness<O, M> {
    pub g: M,
    pub left: ThickTriple<O, M>,
    pub right: ThickTriple<O, M>,
}

pub type Witness<C> = SlideWitness<<C as MonoidalCategory>::Object, <C as MonoidalCategory>::Morphism>;

impl<O: Clone + PartialEq + std::fmt::Display, M: Clone> SlideWitness<O, M> {
    /// Checks both defining equations exactly.
    pub fn verify<C>(&self, cat: &C) -> Result<bool>
    where
        C: MonoidalCategory<Object = O, Morphism = M> + ?Sized,
    {
        let (l, r) = (&self.left, &self.right);
        if l.dom != r.dom || l.cod != r.cod {
            return Ok(false);
        }
        if cat.source(&self.g) != l.z || cat.target(&self.g) != r.z {
            return Ok(false);
        }
        let slid_t = cat.compose(&cat.tensor_id_left(&l.cod, &self.g)?, &l.t)?;
        let slid_b = cat.compose(&r.b, &cat.tensor_id_right(&self.g, &l.dom)?)?;
        Ok(cat.mor_equal(&slid_t, &r.t) && cat.mor_equal(&slid_b, &l.b))
    }
}

/// The two triples related by `g: Z → Z'`, built from `t: I → Y⊗Z` and
/// `b': Z'⊗X → I`: `(Z, t, b' ∘ (g ⊗ id_X))` and `(Z', (id_Y ⊗ g) ∘ t, b')`.
pub fn slide<C: MonoidalCategory + ?Sized>(
    cat: &C,
    dom: &C::Object,
    cod: &C::Object,
    t: &C::Morphism,
    g: &C::Morphism,
    b_prime: &C::Morphism,
) -> Result<Witness<C>> {
    let (z, z_prime) = (cat.source(g), cat.target(g));
    let left_b = cat.compose(b_prime, &cat.tensor_id_right(g, dom)?)?;
    let right_t = cat.compose(&cat.tensor_id_left(cod, g)?, t)?;
    let left = ThickTriple::new(cat, dom.clone(), cod.clone(), z, t.clone(), left_b)?;
    let right = ThickTriple::new(cat, dom.clone(), cod.clone(), z_prime, right_t, b_prime.clone())?;
    Ok(SlideWitness {
        g: g.clone(),
        left,
        right,
    })
}

/// For `f̂₁ = [Z₁, t₁, b₁]: X → Y` and `f̂₂ = [Z₂, t₂, b₂]: U → X`, returns
/// `g = (b₁ ⊗ id_{Z₂}) ∘ (id_{Z₁} ⊗ t₂)` as a slide from `f̂₁ ∘ Ψ(f̂₂)` to
/// `Ψ(f̂₁) ∘ f̂₂`.
pub fn hat_comp_witness<C: MonoidalCategory + ?Sized>(
    cat: &C,
    tr1: &Triple<C>,
    tr2: &Triple<C>,
) -> Result<Witness<C>> {
    if tr2.cod != tr1.dom {
        return Err(Error::domain("hat_comp_witness", &tr1.dom, &tr2.cod));
    }
    let g = cat.compose(
        &cat.tensor_id_right(&tr1.b, &tr2.z)?,
        &cat.tensor_id_left(&tr1.z, &tr2.t)?,
    )?;
    let left = pre_compose(cat, tr1, &psi(cat, tr2)?)?;
    let right = post_compose(cat, &psi(cat, tr1)?, tr2)?;
    Ok(SlideWitness { g, left, right })
}

/// `tr(f, g) = tr̂(f̂ ∘ g)` for a thickener `f̂: X → Y` and `g: Y → X`.
pub fn trace_pairing<C: MonoidalCategory + ?Sized>(
    cat: &C,
    f_hat: &Triple<C>,
    g: &C::Morphism,
) -> Result<C::Morphism> {
    tr_hat(cat, &pre_compose(cat, f_hat, g)?)
}

/// `tr̂(f ∘ ĝ)`, the pairing computed with the hat on the other factor.
pub fn trace_pairing_right<C: MonoidalCategory + ?Sized>(
    cat: &C,
    f: &C::Morphism,
    g_hat: &Triple<C>,
) -> Result<C::Morphism> {
    tr_hat(cat, &post_compose(cat, f, g_hat)?)
}

/// `[Z₁ ⊕ Z₂, (t₁; t₂), (b₁, b₂)]`, built with the biproduct injections and
/// projections.
pub fn add_triples<C: Additive + ?Sized>(
    cat: &C,
    tr1: &Triple<C>,
    tr2: &Triple<C>,
) -> Result<Triple<C>> {
    if tr1.dom != tr2.dom || tr1.cod != tr2.cod {
        return Err(Error::domain(
            "add_triples",
            format!("{} -> {}", tr1.dom, tr1.cod),
            format!("{} -> {}", tr2.dom, tr2.cod),
        ));
    }
    let (z1, z2) = (&tr1.z, &tr2.z);
    let column = |first: bool, t: &C::Morphism| -> Result<C::Morphism> {
        let inj = cat.injection(z1, z2, first);
        cat.compose(&cat.tensor_id_left(&tr1.cod, &inj)?, t)
    };
    let row = |first: bool, b: &C::Morphism| -> Result<C::Morphism> {
        let proj = cat.projection(z1, z2, first);
        cat.compose(b, &cat.tensor_id_right(&proj, &tr1.dom)?)
    };
    let t = cat.add_mor(&column(true, &tr1.t)?, &column(false, &tr2.t)?)?;
    let b = cat.add_mor(&row(true, &tr1.b)?, &row(false, &tr2.b)?)?;
    ThickTriple::new(
        cat,
        tr1.dom.clone(),
        tr1.cod.clone(),
        cat.direct_sum(z1, z2),
        t,
        b,
    )
}

pub fn negate_triple<C: Additive + ?Sized>(cat: &C, tr: &Triple<C>) -> Triple<C> {
    ThickTriple {
        t: cat.negate(&tr.t),
        ..tr.clone()
    }
}

/// The triple over the zero object; the additive unit.
pub fn zero_triple<C: Additive + ?Sized>(cat: &C, dom: &C::Object, cod: &C::Object) -> Triple<C> {
    let zero = cat.zero_object();
    let unit = cat.unit_object();
    ThickTriple {
        t: cat.zero_mor(&unit, &cat.tensor_obj(cod, &zero)),
        b: cat.zero_mor(&cat.tensor_obj(&zero, dom), &unit),
        dom: dom.clone(),
        cod: cod.clone(),
        z: zero,
    }
}

/// Enlarges `Z` to `Z ⊕ W`, extending `t` by zero and `b` by an arbitrary
/// `junk: W ⊗ X → I`. `Ψ` and `tr̂` must not notice.
pub fn pad_triple<C: Additive + ?Sized>(
    cat: &C,
    tr: &Triple<C>,
    w: &C::Object,
    junk: &C::Morphism,
) -> Result<Triple<C>> {
    let inj = cat.injection(&tr.z, w, true);
    let t = cat.compose(&cat.tensor_id_left(&tr.cod, &inj)?, &tr.t)?;
    let keep = cat.compose(&tr.b, &cat.tensor_id_right(&cat.projection(&tr.z, w, true), &tr.dom)?)?;
    let noise = cat.compose(junk, &cat.tensor_id_right(&cat.projection(&tr.z, w, false), &tr.dom)?)?;
    let b = cat.add_mor(&keep, &noise)?;
    ThickTriple::new(cat, tr.dom.clone(), tr.cod.clone(), cat.direct_sum(&tr.z, w), t, b)
}

/// Which crossings to use when tensoring triples.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Crossings {
    /// `t` uses `c_{Z₁,Y₂}`, `b` uses `c_{X₁,Z₂}⁻¹`.
    Standard,
    /// Both crossings taken from the mirror braiding `c'_{X,Y} = c_{Y,X}⁻¹`:
    /// `t` uses `c_{Y₂,Z₁}⁻¹`, `b` uses `c_{Z₂,X₁}`. Still a valid choice.
    Mirrored,
    /// `t` from `c`, `b` from the mirror braiding. Not a valid choice unless
    /// `c` is symmetric.
    Mixed,
}

pub fn tensor_triples<C: Braided + ?Sized>(
    cat: &C,
    tr1: &Triple<C>,
    tr2: &Triple<C>,
) -> Result<Triple<C>> {
    tensor_triples_with(cat, tr1, tr2, Crossings::Standard)
}

/// `f̂₁ ⊗ f̂₂ = [Z₁⊗Z₂, t, b]` with
/// `t = (id_{Y₁} ⊗ χ_t ⊗ id_{Z₂}) ∘ (t₁ ⊗ t₂)` and
/// `b = (b₁ ⊗ b₂) ∘ (id_{Z₁} ⊗ χ_b ⊗ id_{X₂})`.
pub fn tensor_triples_with<C: Braided + ?Sized>(
    cat: &C,
    tr1: &Triple<C>,
    tr2: &Triple<C>,
    crossings: Crossings,
) -> Result<Triple<C>> {
    let (chi_t, chi_b) = match crossings {
        Crossings::Standard => (
            cat.braiding(&tr1.z, &tr2.cod),
            cat.braiding_inv(&tr1.dom, &tr2.z),
        ),
        Crossings::Mirrored => (
            cat.braiding_inv(&tr2.cod, &tr1.z),
            cat.braiding(&tr2.z, &tr1.dom),
        ),
        Crossings::Mixed => (cat.braiding(&tr1.z, &tr2.cod), cat.braiding(&tr2.z, &tr1.dom)),
    };
    let t_mid = cat.tensor_id_left(&tr1.cod, &cat.tensor_id_right(&chi_t, &tr2.z)?)?;
    let t = cat.compose(&t_mid, &cat.tensor(&tr1.t, &tr2.t)?)?;
    let b_mid = cat.tensor_id_left(&tr1.z, &cat.tensor_id_right(&chi_b, &tr2.dom)?)?;
    let b = cat.compose(&cat.tensor(&tr1.b, &tr2.b)?, &b_mid)?;
    ThickTriple::new(
        cat,
        cat.tensor_obj(&tr1.dom, &tr2.dom),
        cat.tensor_obj(&tr1.cod, &tr2.cod),
        cat.tensor_obj(&tr1.z, &tr2.z),
        t,
        b,
    )
}
