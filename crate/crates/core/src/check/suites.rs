//! Trial bodies. Each trial draws its inputs from its own stream and either
//! confirms the property or returns the inputs that break it.

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::gen::{self, Bounds, Sample};
use crate::balanced::{self, GradedVect};
use crate::bordism::{self, cut_thickener, glue_trace, Endpoint, FieldTheory, MorphismKind, PointSet, RBord1};
use crate::category::{Additive, Braided, MonoidalCategory};
use crate::error::Result;
use crate::thickened::{
    add_triples, hat_comp_witness, negate_triple, pad_triple, post_compose, pre_compose, psi, slide,
    tensor_triples, tensor_triples_with, tr_hat, tr_hat_with, trace_pairing, zero_triple, Crossings, ThickTriple,
};
use crate::vect::{
    alpha, canonical_thickener, phi, phi_inverse, q_frac, GradeKind, MatrixCategory, Mor, Obj,
    Parity, RatMatrix, Space, Q,
};

#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    Holds,
    Counterexample { detail: String, inputs: Value },
}

/// Returns a counterexample from the enclosing trial when `$cond` is false.
macro_rules! require {
    ($cond:expr, $detail:expr, $inputs:tt) => {
        if !$cond {
            return Ok(Outcome::Counterexample {
                detail: $detail.to_string(),
                inputs: json!($inputs),
            });
        }
    };
}

#[derive(Debug, Clone)]
pub struct Ctx {
    pub bounds: Bounds,
    pub q: Q,
}

impl Ctx {
    pub fn graded(&self) -> GradedVect {
        GradedVect::new(self.q.clone()).unwrap_or_else(|_| GradedVect::default_q())
    }
}

type Triple<K> = ThickTriple<Obj<K>, Mor<K>>;

fn scalar_product<K: GradeKind>(cat: &MatrixCategory<K>, a: &Mor<K>, b: &Mor<K>) -> Result<Mor<K>> {
    cat.tensor(a, b)
}

// ---------------------------------------------------------------- matrix

/// The two triples related by a random `g: Z → Z'` have equal `Ψ` and `tr̂`.
pub fn slide_matrix<K: GradeKind>(cat: &MatrixCategory<K>, rng: &mut ChaCha8Rng, b: &Bounds) -> Result<Outcome>
where
    K::Grade: Sample,
{
    let x: Obj<K> = gen::space(rng, b, 3);
    let y = if rng.gen_bool(0.5) { x.clone() } else { gen::space(rng, b, 3) };
    let pool: Vec<K::Grade> = x.dual().grades().iter().chain(y.dual().grades()).copied().collect();
    let z = gen::space_near(rng, b, 3, &pool);
    let z2 = gen::space_near(rng, b, 3, &pool);
    let unit = Space::unit();
    let t = gen::map(rng, &unit, &y.tensor(&z));
    let g = gen::map(rng, &z, &z2);
    let b2 = gen::map(rng, &z2.tensor(&x), &unit);
    let w = slide(cat, &x, &y, &t, &g, &b2)?;
    require!(w.verify(cat)?, "slide equations", { "witness": w });
    let (p1, p2) = (psi(cat, &w.left)?, psi(cat, &w.right)?);
    require!(p1 == p2, format!("psi differs: {p1} vs {p2}"), { "witness": w });
    if x == y {
        let (t1, t2) = (tr_hat(cat, &w.left)?, tr_hat(cat, &w.right)?);
        require!(t1 == t2, format!("tr_hat differs: {t1} vs {t2}"), { "witness": w });
    }
    Ok(Outcome::Holds)
}

/// `tr̂(f̂∘g) = tr̂(g∘f̂)` and `tr(f, g) = tr(g, f)`.
pub fn symmetry_matrix<K: GradeKind>(cat: &MatrixCategory<K>, rng: &mut ChaCha8Rng, b: &Bounds) -> Result<Outcome>
where
    K::Grade: Sample,
{
    let x: Obj<K> = gen::space(rng, b, 3);
    let y: Obj<K> = gen::space(rng, b, 3);
    let f_hat = gen::matrix_triple(cat, rng, b, &x, &y, 3);
    let g = gen::map(rng, &y, &x);
    let left = tr_hat(cat, &pre_compose(cat, &f_hat, &g)?)?;
    let right = tr_hat(cat, &post_compose(cat, &g, &f_hat)?)?;
    require!(left == right, format!("tr_hat(f^ g) = {left}, tr_hat(g f^) = {right}"), { "f_hat": f_hat, "g": g });
    let f = psi(cat, &f_hat)?;
    let swapped = trace_pairing(cat, &canonical_thickener(cat, &g)?, &f)?;
    require!(left == swapped, format!("tr(f,g) = {left}, tr(g,f) = {swapped}"), { "f_hat": f_hat, "g": g });
    Ok(Outcome::Holds)
}

/// Linearity of `Ψ` and `tr̂` under triple sums, and bilinearity of the pairing.
pub fn additivity_matrix<K: GradeKind>(cat: &MatrixCategory<K>, rng: &mut ChaCha8Rng, b: &Bounds) -> Result<Outcome>
where
    K::Grade: Sample,
{
    let x: Obj<K> = gen::space(rng, b, 3);
    let y: Obj<K> = gen::space(rng, b, 3);
    let f1 = gen::matrix_triple(cat, rng, b, &x, &y, 2);
    let f2 = gen::matrix_triple(cat, rng, b, &x, &y, 2);
    let (g1, g2) = (gen::map(rng, &y, &x), gen::map(rng, &y, &x));
    let sum = add_triples(cat, &f1, &f2)?;
    let psi_sum = cat.add_mor(&psi(cat, &f1)?, &psi(cat, &f2)?)?;
    require!(psi(cat, &sum)? == psi_sum, "psi(f1 + f2) != psi(f1) + psi(f2)", { "f1": f1, "f2": f2 });

    let pair = |f: &Triple<K>, g: &Mor<K>| trace_pairing(cat, f, g);
    let lhs = pair(&sum, &g1)?;
    let rhs = cat.add_mor(&pair(&f1, &g1)?, &pair(&f2, &g1)?)?;
    require!(lhs == rhs, format!("tr(f1+f2, g) = {lhs}, sum = {rhs}"), { "f1": f1, "f2": f2, "g": g1 });
    let lhs = pair(&f1, &cat.add_mor(&g1, &g2)?)?;
    let rhs = cat.add_mor(&pair(&f1, &g1)?, &pair(&f1, &g2)?)?;
    require!(lhs == rhs, format!("tr(f, g1+g2) = {lhs}, sum = {rhs}"), { "f": f1, "g1": g1, "g2": g2 });

    let e1 = gen::matrix_triple(cat, rng, b, &x, &x, 2);
    let e2 = gen::matrix_triple(cat, rng, b, &x, &x, 2);
    let lhs = tr_hat(cat, &add_triples(cat, &e1, &e2)?)?;
    let rhs = cat.add_mor(&tr_hat(cat, &e1)?, &tr_hat(cat, &e2)?)?;
    require!(lhs == rhs, format!("tr_hat(e1+e2) = {lhs}, sum = {rhs}"), { "e1": e1, "e2": e2 });
    let cancelled = add_triples(cat, &e1, &negate_triple(cat, &e1))?;
    require!(psi(cat, &cancelled)?.is_zero() && tr_hat(cat, &cancelled)?.is_zero(), "e + (-e) is not zero", { "e": e1 });
    let padded = add_triples(cat, &e1, &zero_triple(cat, &x, &x))?;
    require!(
        psi(cat, &padded)? == psi(cat, &e1)? && tr_hat(cat, &padded)? == tr_hat(cat, &e1)?,
        "adding the zero triple changed the class",
        { "e": e1 }
    );
    Ok(Outcome::Holds)
}

fn small_pair<K: GradeKind>(
    cat: &MatrixCategory<K>,
    rng: &mut ChaCha8Rng,
    b: &Bounds,
) -> (Triple<K>, Mor<K>)
where
    K::Grade: Sample,
{
    let x: Obj<K> = gen::space(rng, b, 2);
    let y = if rng.gen_bool(0.5) { x.clone() } else { gen::space(rng, b, 2) };
    let f = gen::matrix_triple(cat, rng, b, &x, &y, 2);
    let g = gen::map(rng, &y, &x);
    (f, g)
}

/// `Ψ`, `tr̂` and the pairing turn tensor products of triples into products.
pub fn multiplicativity_matrix<K: GradeKind>(
    cat: &MatrixCategory<K>,
    rng: &mut ChaCha8Rng,
    b: &Bounds,
) -> Result<Outcome>
where
    K::Grade: Sample,
{
    let (f1, g1) = small_pair(cat, rng, b);
    let (f2, g2) = small_pair(cat, rng, b);
    let both = tensor_triples(cat, &f1, &f2)?;
    let lhs = psi(cat, &both)?;
    let rhs = cat.tensor(&psi(cat, &f1)?, &psi(cat, &f2)?)?;
    require!(lhs == rhs, "psi(f1 (x) f2) != psi(f1) (x) psi(f2)", { "f1": f1, "f2": f2 });

    let lhs = trace_pairing(cat, &both, &cat.tensor(&g1, &g2)?)?;
    let rhs = scalar_product(cat, &trace_pairing(cat, &f1, &g1)?, &trace_pairing(cat, &f2, &g2)?)?;
    require!(lhs == rhs, format!("tr(f1 (x) f2, g1 (x) g2) = {lhs}, product = {rhs}"),
        { "f1": f1, "f2": f2, "g1": g1, "g2": g2 });

    if f1.dom() == f1.cod() && f2.dom() == f2.cod() {
        let lhs = tr_hat(cat, &both)?;
        let rhs = scalar_product(cat, &tr_hat(cat, &f1)?, &tr_hat(cat, &f2)?)?;
        require!(lhs == rhs, format!("tr_hat(f1 (x) f2) = {lhs}, product = {rhs}"), { "f1": f1, "f2": f2 });
    }
    Ok(Outcome::Holds)
}

/// `tr̂` multiplicativity with a substitute switching map; used by the
/// controls, which expect to find counterexamples.
pub fn multiplicativity_with_switch<K, S>(
    cat: &MatrixCategory<K>,
    rng: &mut ChaCha8Rng,
    b: &Bounds,
    switch: S,
) -> Result<Outcome>
where
    K: GradeKind,
    K::Grade: Sample,
    S: Fn(&Obj<K>, &Obj<K>) -> Mor<K>,
{
    let x1: Obj<K> = gen::space(rng, b, 2);
    let x2: Obj<K> = gen::space(rng, b, 2);
    let f1 = gen::matrix_triple(cat, rng, b, &x1, &x1, 2);
    let f2 = gen::matrix_triple(cat, rng, b, &x2, &x2, 2);
    let both = tensor_triples(cat, &f1, &f2)?;
    let lhs = tr_hat_with(cat, &both, &switch)?;
    let rhs = scalar_product(cat, &tr_hat_with(cat, &f1, &switch)?, &tr_hat_with(cat, &f2, &switch)?)?;
    require!(lhs == rhs, format!("tr_hat(f1 (x) f2) = {lhs}, product = {rhs}"), { "f1": f1, "f2": f2 });
    Ok(Outcome::Holds)
}

/// `Ψ` multiplicativity of the triple tensor built with the given crossings.
pub fn crossings_multiplicative<K: GradeKind>(
    cat: &MatrixCategory<K>,
    rng: &mut ChaCha8Rng,
    b: &Bounds,
    crossings: Crossings,
) -> Result<Outcome>
where
    K::Grade: Sample,
{
    let (f1, _) = small_pair(cat, rng, b);
    let (f2, _) = small_pair(cat, rng, b);
    let lhs = psi(cat, &tensor_triples_with(cat, &f1, &f2, crossings)?)?;
    let rhs = cat.tensor(&psi(cat, &f1)?, &psi(cat, &f2)?)?;
    require!(lhs == rhs, format!("{crossings:?} crossings: psi(f1 (x) f2) != psi(f1) (x) psi(f2)"), { "f1": f1, "f2": f2 });
    Ok(Outcome::Holds)
}

/// Padding a triple by an unused summand with arbitrary `b` changes neither
/// `Ψ` nor `tr̂`; the pairing equals the categorical trace of the composite.
pub fn trace_property_matrix<K: GradeKind>(
    cat: &MatrixCategory<K>,
    rng: &mut ChaCha8Rng,
    b: &Bounds,
) -> Result<Outcome>
where
    K::Grade: Sample,
{
    let x: Obj<K> = gen::space(rng, b, 3);
    let f = gen::matrix_triple(cat, rng, b, &x, &x, 3);
    let pool: Vec<K::Grade> = x.dual().grades().to_vec();
    let w = gen::space_near(rng, b, 2, &pool);
    let junk = gen::map(rng, &w.tensor(&x), &Space::unit());
    let padded = pad_triple(cat, &f, &w, &junk)?;
    require!(psi(cat, &padded)? == psi(cat, &f)?, "padding changed psi", { "f": f, "w": w, "junk": junk });
    require!(tr_hat(cat, &padded)? == tr_hat(cat, &f)?, "padding changed tr_hat", { "f": f, "w": w, "junk": junk });

    let y: Obj<K> = gen::space(rng, b, 3);
    let f_hat = gen::matrix_triple(cat, rng, b, &x, &y, 3);
    let g = gen::map(rng, &y, &x);
    let pairing = trace_pairing(cat, &f_hat, &g)?;
    let composite = cat.compose(&psi(cat, &f_hat)?, &g)?;
    let trace = tr_hat(cat, &canonical_thickener(cat, &composite)?)?;
    require!(pairing == trace, format!("tr(f, g) = {pairing}, tr(f g) = {trace}"), { "f_hat": f_hat, "g": g });
    Ok(Outcome::Holds)
}

/// The slide `g = (b₁ ⊗ id) ∘ (id ⊗ t₂)` relates `f̂₁ ∘ f₂` and `f₁ ∘ f̂₂`.
pub fn witness_matrix<K: GradeKind>(cat: &MatrixCategory<K>, rng: &mut ChaCha8Rng, b: &Bounds) -> Result<Outcome>
where
    K::Grade: Sample,
{
    let u: Obj<K> = gen::space(rng, b, 3);
    let x: Obj<K> = gen::space(rng, b, 3);
    let y = if rng.gen_bool(0.5) { u.clone() } else { gen::space(rng, b, 3) };
    let tr1 = gen::matrix_triple(cat, rng, b, &x, &y, 3);
    let tr2 = gen::matrix_triple(cat, rng, b, &u, &x, 3);
    let w = hat_comp_witness(cat, &tr1, &tr2)?;
    require!(w.verify(cat)?, "witness fails its slide equations", { "tr1": tr1, "tr2": tr2 });
    require!(psi(cat, &w.left)? == psi(cat, &w.right)?, "witness ends have different psi", { "tr1": tr1, "tr2": tr2 });
    if u == y {
        require!(tr_hat(cat, &w.left)? == tr_hat(cat, &w.right)?, "witness ends have different tr_hat",
            { "tr1": tr1, "tr2": tr2 });
    }
    Ok(Outcome::Holds)
}

/// `tr̂(α(Φ⁻¹(f)))` equals the oracle trace and `Ψ` recovers `f`. The oracle
/// weighs diagonal entry `i` by `weight(grade_i)`.
pub fn canonical_trace<K: GradeKind>(
    cat: &MatrixCategory<K>,
    rng: &mut ChaCha8Rng,
    b: &Bounds,
    max_dim: usize,
    weight: impl Fn(K::Grade) -> Q,
) -> Result<Outcome>
where
    K::Grade: Sample,
{
    let wide = Bounds { max_dim, ..*b };
    let x: Obj<K> = gen::space(rng, &wide, max_dim);
    let f = gen::map(rng, &x, &x);
    let tr = canonical_thickener(cat, &f)?;
    require!(psi(cat, &tr)? == f, "psi(alpha(phi^-1(f))) != f", { "f": f });
    let got = crate::vect::scalar_of(&tr_hat(cat, &tr)?)?;
    let oracle: Q = x
        .grades()
        .iter()
        .enumerate()
        .map(|(i, &g)| weight(g) * f.matrix().get(i, i))
        .sum();
    require!(got == oracle, format!("tr_hat = {got}, oracle = {oracle}"), { "f": f });
    Ok(Outcome::Holds)
}

/// Associativity, unit and interchange laws, and naturality of `s`.
pub fn laws_matrix<K: GradeKind>(cat: &MatrixCategory<K>, rng: &mut ChaCha8Rng, b: &Bounds) -> Result<Outcome>
where
    K::Grade: Sample,
{
    let objs: Vec<Obj<K>> = (0..4).map(|_| gen::space(rng, b, 3)).collect();
    let f = gen::map(rng, &objs[0], &objs[1]);
    let g = gen::map(rng, &objs[1], &objs[2]);
    let h = gen::map(rng, &objs[2], &objs[3]);
    let assoc_l = cat.compose(&h, &cat.compose(&g, &f)?)?;
    let assoc_r = cat.compose(&cat.compose(&h, &g)?, &f)?;
    require!(assoc_l == assoc_r, "composition is not associative", { "f": f, "g": g, "h": h });
    require!(
        cat.compose(&cat.identity(&objs[1]), &f)? == f && cat.compose(&f, &cat.identity(&objs[0]))? == f,
        "identity is not a unit",
        { "f": f }
    );
    let f2 = gen::map(rng, &objs[2], &objs[0]);
    let g2 = gen::map(rng, &objs[3], &objs[1]);
    let lhs = cat.tensor(&cat.compose(&f, &f2)?, &cat.compose(&g, &g2)?)?;
    let rhs = cat.compose(&cat.tensor(&f, &g)?, &cat.tensor(&f2, &g2)?)?;
    require!(lhs == rhs, "interchange law fails", { "f1": f, "f2": f2, "g1": g, "g2": g2 });

    let lhs = cat.compose(&cat.switching(&objs[1], &objs[2]), &cat.tensor(&f, &g)?)?;
    let rhs = cat.compose(&cat.tensor(&g, &f)?, &cat.switching(&objs[0], &objs[1]))?;
    require!(lhs == rhs, "switching is not natural", { "g": f, "h": g });
    let s = cat.switching(&objs[0], &objs[1]);
    require!(s.matrix().rank() == s.source().dim(), "switching is not invertible", { "x": objs[0], "y": objs[1] });
    if cat.capabilities().symmetric {
        let round = cat.compose(&cat.switching(&objs[1], &objs[0]), &s)?;
        require!(round == cat.identity(&objs[0].tensor(&objs[1])), "s_{Y,X} s_{X,Y} != id", { "x": objs[0], "y": objs[1] });
    }
    Ok(Outcome::Holds)
}

/// Braiding relations, the twist equation, the crossing lemmas and
/// naturality of `c` and `θ`.
pub fn relations_matrix<K: GradeKind>(cat: &MatrixCategory<K>, rng: &mut ChaCha8Rng, b: &Bounds) -> Result<Outcome>
where
    K::Grade: Sample,
{
    let x: Obj<K> = gen::space(rng, b, 2);
    let y: Obj<K> = gen::space(rng, b, 2);
    let z: Obj<K> = gen::space(rng, b, 2);
    require!(balanced::hexagon_left(cat, &x, &y, &z)?, "c_{X,Y(x)Z} relation fails", { "x": x, "y": y, "z": z });
    require!(balanced::hexagon_right(cat, &x, &y, &z)?, "c_{X(x)Y,Z} relation fails", { "x": x, "y": y, "z": z });
    require!(balanced::twist_equation(cat, &x, &y)?, "twist equation fails", { "x": x, "y": y });
    require!(balanced::braiding_invertible(cat, &x, &y)?, "braiding is not invertible", { "x": x, "y": y });

    let unit = Space::unit();
    let v: Obj<K> = gen::space_near(rng, b, 3, &[<K::Grade as crate::vect::Grade>::zero()]);
    let f = gen::map(rng, &v, &unit);
    let g = gen::map(rng, &unit, &v);
    require!(balanced::crossing_absorbs_counit(cat, &x, &f)?, "crossing lemma for f: V -> I fails", { "w": x, "f": f });
    require!(balanced::crossing_absorbs_unit(cat, &y, &g)?, "crossing lemma for g: I -> W fails", { "v": y, "g": g });

    let h1 = gen::map(rng, &x, &x);
    let h2 = gen::map(rng, &y, &y);
    require!(balanced::braiding_natural(cat, &h1, &h2)?, "braiding is not natural", { "g": h1, "h": h2 });
    require!(balanced::twist_natural(cat, &h1)?, "twist is not natural", { "g": h1 });
    Ok(Outcome::Holds)
}

/// `Φ` agrees with the index-contraction oracle, is inverted by `Φ⁻¹`, and
/// `Ψ ∘ α = Φ`.
pub fn phi_finvect(rng: &mut ChaCha8Rng, b: &Bounds) -> Result<Outcome> {
    let cat = crate::vect::FinVect::new();
    let x: Space<()> = gen::space(rng, b, 4);
    let y: Space<()> = gen::space(rng, b, 4);
    let t = gen::map(rng, &Space::unit(), &y.tensor(&x.dual()));
    let f = phi(&cat, &x, &y, &t)?;
    let (nx, ny) = (x.dim(), y.dim());
    for i in 0..ny {
        for j in 0..nx {
            // coefficient of e_i ⊗ e^j sits at row-major index i * nx + j
            require!(f.matrix().get(i, j) == t.matrix().get(i * nx + j, 0), "phi disagrees with contraction", { "t": t });
        }
    }
    require!(phi_inverse(&cat, &f)? == t, "phi^-1(phi(t)) != t", { "t": t });
    require!(psi(&cat, &alpha(&cat, &x, &y, &t)?)? == f, "psi(alpha(t)) != phi(t)", { "t": t });
    let g = gen::map(rng, &x, &y);
    require!(phi(&cat, &x, &y, &phi_inverse(&cat, &g)?)? == g, "phi(phi^-1(g)) != g", { "g": g });
    Ok(Outcome::Holds)
}

// ---------------------------------------------------------------- bordism

fn any_points(rng: &mut ChaCha8Rng, prefix: &str) -> PointSet {
    let parity = rng.gen_range(0..2);
    gen::points_with_parity(rng, prefix, 3, parity)
}

fn bord_pair_sizes(rng: &mut ChaCha8Rng) -> (PointSet, PointSet) {
    let parity = rng.gen_range(0..2);
    (
        gen::points_with_parity(rng, "x", 3, parity),
        gen::points_with_parity(rng, "y", 3, parity),
    )
}

fn bord_triple(rng: &mut ChaCha8Rng, x: &PointSet, y: &PointSet, integer: bool) -> Result<crate::thickened::Triple<RBord1>> {
    let z = gen::points_with_parity(rng, "z", 3, y.len());
    let t = gen::bordism(rng, &PointSet::empty(), &y.concat(&z), integer);
    let b = gen::bordism(rng, &z.concat(x), &PointSet::empty(), integer);
    ThickTriple::new(&RBord1, x.clone(), y.clone(), z, t, b)
}

const FRACTIONS: [(i64, i64); 5] = [(1, 4), (1, 3), (1, 2), (2, 3), (3, 4)];

fn two_fractions(rng: &mut ChaCha8Rng) -> (Q, Q) {
    let mut picks = FRACTIONS.to_vec();
    picks.shuffle(rng);
    let (a, b) = (q_frac(picks[0].0, picks[0].1), q_frac(picks[1].0, picks[1].1));
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

pub fn slide_bord(rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let cat = RBord1;
    let (x, y) = if rng.gen_bool(0.5) {
        let x = any_points(rng, "x");
        (x.clone(), x)
    } else {
        bord_pair_sizes(rng)
    };
    let z = gen::points_with_parity(rng, "z", 3, y.len());
    let z2 = gen::points_with_parity(rng, "w", 3, y.len());
    let t = gen::bordism(rng, &PointSet::empty(), &y.concat(&z), false);
    let g = gen::bordism(rng, &z, &z2, false);
    let b2 = gen::bordism(rng, &z2.concat(&x), &PointSet::empty(), false);
    let w = slide(&cat, &x, &y, &t, &g, &b2)?;
    require!(w.verify(&cat)?, "slide equations", { "witness": w });
    require!(psi(&cat, &w.left)? == psi(&cat, &w.right)?, "psi differs across a slide", { "witness": w });
    if x == y {
        require!(tr_hat(&cat, &w.left)? == tr_hat(&cat, &w.right)?, "tr_hat differs across a slide", { "witness": w });
        let sigma = gen::bordism(rng, &x, &x, false);
        let (c1, c2) = two_fractions(rng);
        let cut = bordism::cut_slide(&sigma, &c1, &c2)?;
        require!(cut.verify(&cat)?, "collar slide equations", { "sigma": sigma });
        require!(
            psi(&cat, &cut.left)? == psi(&cat, &cut.right)? && tr_hat(&cat, &cut.left)? == tr_hat(&cat, &cut.right)?,
            "two cuts disagree",
            { "sigma": sigma }
        );
    }
    Ok(Outcome::Holds)
}

pub fn symmetry_bord(rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let cat = RBord1;
    let (x, y) = bord_pair_sizes(rng);
    let f_hat = bord_triple(rng, &x, &y, false)?;
    let g = gen::bordism(rng, &y, &x, false);
    let left = tr_hat(&cat, &pre_compose(&cat, &f_hat, &g)?)?;
    let right = tr_hat(&cat, &post_compose(&cat, &g, &f_hat)?)?;
    require!(left == right, format!("tr_hat(f^ g) = {left}, tr_hat(g f^) = {right}"), { "f_hat": f_hat, "g": g });
    let f = psi(&cat, &f_hat)?;
    let swapped = trace_pairing(&cat, &cut_thickener(&g, &q_frac(1, 2))?, &f)?;
    require!(left == swapped, format!("tr(f,g) = {left}, tr(g,f) = {swapped}"), { "f_hat": f_hat, "g": g });
    Ok(Outcome::Holds)
}

pub fn witness_bord(rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let cat = RBord1;
    let parity = rng.gen_range(0..2);
    let u = gen::points_with_parity(rng, "u", 3, parity);
    let x = gen::points_with_parity(rng, "x", 3, parity);
    let y = if rng.gen_bool(0.5) { u.clone() } else { gen::points_with_parity(rng, "y", 3, parity) };
    let tr1 = bord_triple(rng, &x, &y, false)?;
    let tr2 = bord_triple(rng, &u, &x, false)?;
    let w = hat_comp_witness(&cat, &tr1, &tr2)?;
    require!(w.verify(&cat)?, "witness fails its slide equations", { "tr1": tr1, "tr2": tr2 });
    require!(psi(&cat, &w.left)? == psi(&cat, &w.right)?, "witness ends have different psi", { "tr1": tr1, "tr2": tr2 });
    if u == y {
        require!(tr_hat(&cat, &w.left)? == tr_hat(&cat, &w.right)?, "witness ends have different tr_hat",
            { "tr1": tr1, "tr2": tr2 });
    }
    Ok(Outcome::Holds)
}

/// Every `Ψ` of a triple is a bordism, and cutting then regluing a bordism
/// gives it back.
pub fn thick_bord(rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let cat = RBord1;
    let (x, y) = bord_pair_sizes(rng);
    let tr = bord_triple(rng, &x, &y, false)?;
    let p = psi(&cat, &tr)?;
    require!(p.kind() == MorphismKind::Bordism, format!("psi is {:?}", p.kind()), { "triple": tr });
    let sigma = gen::bordism(rng, &x, &y, false);
    let (c, _) = two_fractions(rng);
    require!(psi(&cat, &cut_thickener(&sigma, &c)?)? == sigma, "cut and reglue changed the bordism", { "sigma": sigma });
    let iso = cat.identity(&x);
    require!(x.is_empty() || cut_thickener(&iso, &c).is_err(), "an isometry was thickened", { "x": x });
    Ok(Outcome::Holds)
}

/// Two independent cuts of an endomorphism give the same `tr̂`.
pub fn trace_property_bord(rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let cat = RBord1;
    let x = any_points(rng, "x");
    let sigma = gen::bordism(rng, &x, &x, false);
    let (c1, c2) = two_fractions(rng);
    let t1 = tr_hat(&cat, &cut_thickener(&sigma, &c1)?)?;
    let t2 = tr_hat(&cat, &cut_thickener(&sigma, &c2)?)?;
    require!(t1 == t2, format!("cuts give {t1} and {t2}"), { "sigma": sigma, "c1": c1.to_string(), "c2": c2.to_string() });
    Ok(Outcome::Holds)
}

/// Cycle lengths of the permutation `i ↦ perm[i]` with weights `len[i]`;
/// an oracle for gluing through-arc bordisms.
fn cycle_lengths(perm: &[usize], len: &[Q]) -> Vec<Q> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for s in 0..perm.len() {
        let (mut i, mut total) = (s, Q::zero());
        if seen[s] {
            continue;
        }
        while !seen[i] {
            seen[i] = true;
            total += &len[i];
            i = perm[i];
        }
        out.push(total);
    }
    out.sort();
    out
}

/// `glue_trace = tr̂ ∘ cut_thickener`, plus the permutation-cycle oracle on
/// bordisms made of through arcs.
pub fn glue_bord(rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let cat = RBord1;
    let x = any_points(rng, "x");
    let sigma = gen::bordism(rng, &x, &x, false);
    let (c, _) = two_fractions(rng);
    let glued = glue_trace(&sigma)?;
    let traced = tr_hat(&cat, &cut_thickener(&sigma, &c)?)?;
    require!(glued == traced, format!("glue_trace = {glued}, tr_hat(cut) = {traced}"), { "sigma": sigma });

    let x = gen::points(rng.gen_range(1..=4).to_string().as_str(), rng.gen_range(1..=4));
    let through = gen::through_bordism(rng, &x, false);
    let mut perm = vec![0; x.len()];
    let mut lens = vec![Q::zero(); x.len()];
    for arc in through.arcs() {
        if let (Endpoint::In(i), Endpoint::Out(j)) = (arc.a, arc.b) {
            perm[i] = j;
            lens[i] = arc.length.clone();
        }
    }
    let got = glue_trace(&through)?.circles().to_vec();
    require!(got == cycle_lengths(&perm, &lens), "glue_trace disagrees with the cycle oracle", { "sigma": through });
    Ok(Outcome::Holds)
}

fn random_field_matrix(rng: &mut ChaCha8Rng, symmetric: bool) -> RatMatrix {
    let n = rng.gen_range(2..=3);
    let mut a = RatMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            if !symmetric || j >= i {
                let v = gen::small_q(rng);
                a.set(i, j, v.clone());
                if symmetric {
                    a.set(j, i, v);
                }
            }
        }
    }
    a
}

fn has_bends(sigma: &bordism::RBordMorphism) -> bool {
    sigma
        .arcs()
        .iter()
        .any(|a| !matches!((a.a, a.b), (Endpoint::In(_), Endpoint::Out(_))))
}

/// `E(Σ_gl) = tr(E(Σ₂), E(Σ₁))` for a random integer-length pair and a
/// random rational `A`.
pub fn partition(rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let (x, y) = {
        let parity = rng.gen_range(0..2);
        (
            gen::points_with_parity(rng, "x", 2, parity),
            gen::points_with_parity(rng, "y", 2, parity),
        )
    };
    let s1 = gen::bordism(rng, &x, &y, true);
    let s2 = gen::bordism(rng, &y, &x, true);
    let a = random_field_matrix(rng, has_bends(&s1) || has_bends(&s2));
    let e = FieldTheory::new(a.clone())?;
    let closed = glue_trace(&RBord1.compose(&s2, &s1)?)?;
    let lhs = e.partition_function(&closed)?;
    let fin = crate::vect::FinVect::new();
    let e2 = e.evaluate(&s2)?;
    let rhs = crate::vect::scalar_of(&trace_pairing(&fin, &canonical_thickener(&fin, &e2)?, &e.evaluate(&s1)?)?)?;
    require!(lhs == rhs, format!("E(closed) = {lhs}, pairing = {rhs}"), { "sigma1": s1, "sigma2": s2, "a": a });
    Ok(Outcome::Holds)
}

pub fn laws_bord(rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let cat = RBord1;
    let parity = rng.gen_range(0..2);
    let objs: Vec<PointSet> = ["a", "b", "c", "d"]
        .iter()
        .map(|p| gen::points_with_parity(rng, p, 3, parity))
        .collect();
    let f = gen::bordism(rng, &objs[0], &objs[1], false);
    let g = gen::bordism(rng, &objs[1], &objs[2], false);
    let h = gen::bordism(rng, &objs[2], &objs[3], false);
    let assoc_l = cat.compose(&h, &cat.compose(&g, &f)?)?;
    let assoc_r = cat.compose(&cat.compose(&h, &g)?, &f)?;
    require!(assoc_l == assoc_r, "gluing is not associative", { "f": f, "g": g, "h": h });
    require!(
        cat.compose(&cat.identity(&objs[1]), &f)? == f && cat.compose(&f, &cat.identity(&objs[0]))? == f,
        "identity is not a unit",
        { "f": f }
    );
    let f2 = gen::bordism(rng, &objs[2], &objs[0], false);
    let g2 = gen::bordism(rng, &objs[3], &objs[1], false);
    let lhs = cat.tensor(&cat.compose(&f, &f2)?, &cat.compose(&g, &g2)?)?;
    let rhs = cat.compose(&cat.tensor(&f, &g)?, &cat.tensor(&f2, &g2)?)?;
    require!(lhs == rhs, "interchange law fails", { "f1": f, "f2": f2, "g1": g, "g2": g2 });
    let lhs = cat.compose(&cat.switching(&objs[1], &objs[2]), &cat.tensor(&f, &g)?)?;
    let rhs = cat.compose(&cat.tensor(&g, &f)?, &cat.switching(&objs[0], &objs[1]))?;
    require!(lhs == rhs, "switching is not natural", { "g": f, "h": g });
    let s = cat.switching(&objs[0], &objs[1]);
    let round = cat.compose(&cat.switching(&objs[1], &objs[0]), &s)?;
    require!(round == cat.identity(&objs[0].concat(&objs[1])), "switching is not invertible", { "x": objs[0], "y": objs[1] });
    Ok(Outcome::Holds)
}

// ---------------------------------------------------------------- oracles

pub fn parity_weight(p: Parity) -> Q {
    if p.is_odd() {
        -Q::one()
    } else {
        Q::one()
    }
}

pub fn unit_weight<G>(_: G) -> Q {
    Q::one()
}

/// Plain swap in a graded instance: no braiding scalar and no twist.
pub fn plain_swap_graded(cat: &GradedVect) -> impl Fn(&Obj<balanced::ZGraded>, &Obj<balanced::ZGraded>) -> Mor<balanced::ZGraded> + '_ {
    move |x, y| cat.plain_swap(x, y)
}

/// The braiding alone as switching map, dropping the twist.
pub fn braiding_only_graded(cat: &GradedVect) -> impl Fn(&Obj<balanced::ZGraded>, &Obj<balanced::ZGraded>) -> Mor<balanced::ZGraded> + '_ {
    move |x, y| cat.braiding(x, y)
}
