//! `GradedVect(q)`: Z-graded rational spaces, a balanced but not symmetric
//! category.
//!
//! On homogeneous vectors of degrees `m` and `n` the braiding is `q^{mn}`
//! times the swap and the twist is `q^{m²}`, so the switching map
//! `s = (id ⊗ θ) ∘ c` scales `x ⊗ y` by `q^{mn + m²}`. Since `q² ≠ 1`,
//! `c_{Y,X} ∘ c_{X,Y} ≠ id` as soon as both degrees are nonzero.
//!
//! The generic relation checks at the bottom of this module work for any
//! braided or balanced instance.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::category::{Balanced, Braided};
use crate::error::{Error, Result};
use crate::vect::{q_int, q_pow, GradeKind, MatrixCategory, Obj, Space, Q};

#[derive(Debug, Clone, PartialEq)]
pub struct ZGraded {
    q: Q,
}

impl ZGraded {
    pub fn q(&self) -> &Q {
        &self.q
    }
}

impl GradeKind for ZGraded {
    type Grade = i64;

    fn instance_id(&self) -> String {
        format!("graded(q={})", crate::vect::format_q(&self.q))
    }
    fn braid_scalar(&self, a: i64, b: i64) -> Q {
        q_pow(&self.q, a * b)
    }
    fn twist_scalar(&self, a: i64) -> Q {
        q_pow(&self.q, a * a)
    }
    fn symmetric(&self) -> bool {
        false
    }
}

pub type GradedVect = MatrixCategory<ZGraded>;

impl GradedVect {
    /// Rejects `q = 0` and the rational roots of unity `±1`.
    pub fn new(q: Q) -> Result<Self> {
        if q.is_zero() || q == Q::one() || q == -Q::one() {
            return Err(Error::Invalid(format!(
                "q must be a nonzero rational with q² ≠ 1, got {}",
                crate::vect::format_q(&q)
            )));
        }
        Ok(MatrixCategory::with_kind(ZGraded { q }))
    }

    pub fn default_q() -> Self {
        Self::new(q_int(2)).expect("q = 2 is admissible")
    }

    pub fn q(&self) -> &Q {
        &self.kind().q
    }

    pub fn obj(&self, dims: &[(i64, usize)]) -> Obj<ZGraded> {
        let map: BTreeMap<i64, usize> = dims.iter().copied().collect();
        Space::graded(&map)
    }

    /// One-dimensional space concentrated in `degree`.
    pub fn line(&self, degree: i64) -> Obj<ZGraded> {
        Space::from_grades(vec![degree])
    }

    /// `c_{X,Y}`.
    pub fn braiding_c(&self, x: &Obj<ZGraded>, y: &Obj<ZGraded>) -> crate::vect::Mor<ZGraded> {
        self.braiding(x, y)
    }

    /// `(c_{X,Y})⁻¹`.
    pub fn braiding_c_inv(&self, x: &Obj<ZGraded>, y: &Obj<ZGraded>) -> crate::vect::Mor<ZGraded> {
        self.braiding_inv(x, y)
    }

    pub fn twist_theta(&self, x: &Obj<ZGraded>) -> crate::vect::Mor<ZGraded> {
        self.twist(x)
    }

    /// `(id_Y ⊗ θ_X) ∘ c_{X,Y}`.
    pub fn switching_s(&self, x: &Obj<ZGraded>, y: &Obj<ZGraded>) -> crate::vect::Mor<ZGraded> {
        self.balanced_switching(x, y)
    }
}

/// `c_{X,Y⊗Z} = (id_Y ⊗ c_{X,Z}) ∘ (c_{X,Y} ⊗ id_Z)`
pub fn hexagon_left<C: Braided + ?Sized>(
    cat: &C,
    x: &C::Object,
    y: &C::Object,
    z: &C::Object,
) -> Result<bool> {
    let lhs = cat.braiding(x, &cat.tensor_obj(y, z));
    let rhs = cat.compose(
        &cat.tensor_id_left(y, &cat.braiding(x, z))?,
        &cat.tensor_id_right(&cat.braiding(x, y), z)?,
    )?;
    Ok(cat.mor_equal(&lhs, &rhs))
}

/// `c_{X⊗Y,Z} = (c_{X,Z} ⊗ id_Y) ∘ (id_X ⊗ c_{Y,Z})`
pub fn hexagon_right<C: Braided + ?Sized>(
    cat: &C,
    x: &C::Object,
    y: &C::Object,
    z: &C::Object,
) -> Result<bool> {
    let lhs = cat.braiding(&cat.tensor_obj(x, y), z);
    let rhs = cat.compose(
        &cat.tensor_id_right(&cat.braiding(x, z), y)?,
        &cat.tensor_id_left(x, &cat.braiding(y, z))?,
    )?;
    Ok(cat.mor_equal(&lhs, &rhs))
}

/// `θ_{X⊗Y} = c_{Y,X} ∘ (θ_Y ⊗ θ_X) ∘ c_{X,Y}`, checked together with the
/// equivalent form `c_{Y,X} ∘ c_{X,Y} ∘ (θ_X ⊗ θ_Y)`.
pub fn twist_equation<C: Balanced + ?Sized>(cat: &C, x: &C::Object, y: &C::Object) -> Result<bool> {
    let lhs = cat.twist(&cat.tensor_obj(x, y));
    let pictured = cat.compose_chain(&[
        &cat.braiding(x, y),
        &cat.tensor(&cat.twist(y), &cat.twist(x))?,
        &cat.braiding(y, x),
    ])?;
    let slid = cat.compose_chain(&[
        &cat.tensor(&cat.twist(x), &cat.twist(y))?,
        &cat.braiding(x, y),
        &cat.braiding(y, x),
    ])?;
    Ok(cat.mor_equal(&lhs, &pictured) && cat.mor_equal(&lhs, &slid))
}

/// For `f: V → I`: `(id_W ⊗ f) ∘ c_{V,W} = f ⊗ id_W = (id_W ⊗ f) ∘ c_{W,V}⁻¹`.
pub fn crossing_absorbs_counit<C: Braided + ?Sized>(
    cat: &C,
    w: &C::Object,
    f: &C::Morphism,
) -> Result<bool> {
    let v = cat.source(f);
    let plain = cat.tensor_id_right(f, w)?;
    let cap = cat.tensor_id_left(w, f)?;
    let over = cat.compose(&cap, &cat.braiding(&v, w))?;
    let under = cat.compose(&cap, &cat.braiding_inv(w, &v))?;
    Ok(cat.mor_equal(&over, &plain) && cat.mor_equal(&under, &plain))
}

/// For `g: I → W`: `c_{V,W} ∘ (id_V ⊗ g) = g ⊗ id_V = c_{W,V}⁻¹ ∘ (id_V ⊗ g)`.
pub fn crossing_absorbs_unit<C: Braided + ?Sized>(
    cat: &C,
    v: &C::Object,
    g: &C::Morphism,
) -> Result<bool> {
    let w = cat.target(g);
    let plain = cat.tensor_id_right(g, v)?;
    let cup = cat.tensor_id_left(v, g)?;
    let over = cat.compose(&cat.braiding(v, &w), &cup)?;
    let under = cat.compose(&cat.braiding_inv(&w, v), &cup)?;
    Ok(cat.mor_equal(&over, &plain) && cat.mor_equal(&under, &plain))
}

/// `c_{X₂,Y₂} ∘ (g ⊗ h) = (h ⊗ g) ∘ c_{X₁,Y₁}`
pub fn braiding_natural<C: Braided + ?Sized>(cat: &C, g: &C::Morphism, h: &C::Morphism) -> Result<bool> {
    let lhs = cat.compose(
        &cat.braiding(&cat.target(g), &cat.target(h)),
        &cat.tensor(g, h)?,
    )?;
    let rhs = cat.compose(
        &cat.tensor(h, g)?,
        &cat.braiding(&cat.source(g), &cat.source(h)),
    )?;
    Ok(cat.mor_equal(&lhs, &rhs))
}

/// `g ∘ θ_X = θ_Y ∘ g`
pub fn twist_natural<C: Balanced + ?Sized>(cat: &C, g: &C::Morphism) -> Result<bool> {
    let lhs = cat.compose(g, &cat.twist(&cat.source(g)))?;
    let rhs = cat.compose(&cat.twist(&cat.target(g)), g)?;
    Ok(cat.mor_equal(&lhs, &rhs))
}

/// `c⁻¹ ∘ c = id` and `c ∘ c⁻¹ = id`.
pub fn braiding_invertible<C: Braided + ?Sized>(cat: &C, x: &C::Object, y: &C::Object) -> Result<bool> {
    let c = cat.braiding(x, y);
    let c_inv = cat.braiding_inv(x, y);
    let xy = cat.tensor_obj(x, y);
    let yx = cat.tensor_obj(y, x);
    Ok(cat.mor_equal(&cat.compose(&c_inv, &c)?, &cat.identity(&xy))
        && cat.mor_equal(&cat.compose(&c, &c_inv)?, &cat.identity(&yx)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{Dualizable, MonoidalCategory};
    use crate::thickened::tr_hat;
    use crate::vect::{alpha, q_frac, scalar_of, GradedMap, RatMatrix};

    fn g2() -> GradedVect {
        GradedVect::default_q()
    }

    /// Scalar by which `m` scales the basis vector `e_0 ⊗ e_0 ↦ e_0 ⊗ e_0` of
    /// two lines.
    fn line_scalar(m: &crate::vect::Mor<ZGraded>) -> Q {
        assert_eq!(m.matrix().nnz(), 1);
        m.matrix().entries().next().unwrap().2.clone()
    }

    #[test]
    fn braiding_scalar_rule() {
        let cat = g2();
        assert_eq!(line_scalar(&cat.braiding_c(&cat.line(1), &cat.line(1))), q_int(2));
        assert_eq!(line_scalar(&cat.braiding_c(&cat.line(0), &cat.line(3))), q_int(1));
        assert_eq!(line_scalar(&cat.braiding_c(&cat.line(-1), &cat.line(2))), q_frac(1, 4));
    }

    #[test]
    fn double_braiding_is_not_identity() {
        let cat = g2();
        let (x, y) = (cat.line(1), cat.line(1));
        let round = cat.compose(&cat.braiding(&y, &x), &cat.braiding(&x, &y)).unwrap();
        assert_eq!(line_scalar(&round), q_int(4));
        assert!(!cat.capabilities().symmetric);
    }

    #[test]
    fn twist_scalar_rule() {
        let cat = g2();
        assert_eq!(cat.twist_theta(&cat.line(0)), cat.identity(&cat.line(0)));
        assert_eq!(line_scalar(&cat.twist_theta(&cat.line(2))), q_int(16));
        assert_eq!(cat.twist_theta(&cat.unit_object()), cat.identity(&cat.unit_object()));
    }

    #[test]
    fn twist_equation_at_q3() {
        let cat = GradedVect::new(q_int(3)).unwrap();
        let (x, y) = (cat.line(1), cat.line(1));
        assert_eq!(line_scalar(&cat.twist(&x.tensor(&y))), q_int(81));
        assert!(twist_equation(&cat, &x, &y).unwrap());
    }

    #[test]
    fn switching_scalars() {
        let cat = g2();
        // q^{mn} q^{m²}: (1,1) -> 4, (1,2) -> 8
        assert_eq!(line_scalar(&cat.switching_s(&cat.line(1), &cat.line(1))), q_int(4));
        assert_eq!(line_scalar(&cat.switching_s(&cat.line(1), &cat.line(2))), q_int(8));
        assert_eq!(
            cat.switching_s(&cat.line(0), &cat.line(5)),
            cat.plain_swap(&cat.line(0), &cat.line(5))
        );
        assert_eq!(cat.switching(&cat.line(1), &cat.line(2)), cat.switching_s(&cat.line(1), &cat.line(2)));
    }

    #[test]
    fn rejects_roots_of_unity() {
        assert!(GradedVect::new(q_int(1)).is_err());
        assert!(GradedVect::new(q_int(-1)).is_err());
        assert!(GradedVect::new(q_int(0)).is_err());
        assert!(GradedVect::new(q_frac(1, 2)).is_ok());
    }

    #[test]
    fn line_trace_cancels_twist() {
        let cat = g2();
        let x = cat.line(1);
        let d = cat.dual_data(&x).unwrap();
        let tr = alpha(&cat, &x, &x, &d.coev).unwrap();
        assert_eq!(scalar_of(&tr_hat(&cat, &tr).unwrap()).unwrap(), q_int(1));
    }

    #[test]
    fn degree_zero_trace_is_dimension() {
        let cat = g2();
        let x = cat.obj(&[(0, 3)]);
        let d = cat.dual_data(&x).unwrap();
        let tr = alpha(&cat, &x, &x, &d.coev).unwrap();
        assert_eq!(scalar_of(&tr_hat(&cat, &tr).unwrap()).unwrap(), q_int(3));
    }

    #[test]
    fn dual_negates_degrees() {
        let cat = g2();
        let x = cat.obj(&[(-1, 2), (0, 1), (3, 1)]);
        let d = cat.dual_data(&x).unwrap();
        assert_eq!(d.dual.grades(), &[1, 1, 0, -3]);
        assert!(crate::category::zigzags_hold(&cat, &x, &d).unwrap());
    }

    #[test]
    fn hexagons_and_crossing_lemmas_on_fixed_objects() {
        let cat = g2();
        let x = cat.obj(&[(1, 1), (-2, 1)]);
        let y = cat.obj(&[(0, 1), (2, 1)]);
        let z = cat.line(-1);
        assert!(hexagon_left(&cat, &x, &y, &z).unwrap());
        assert!(hexagon_right(&cat, &x, &y, &z).unwrap());
        assert!(twist_equation(&cat, &x, &y).unwrap());
        assert!(braiding_invertible(&cat, &x, &y).unwrap());

        // f: V → I supported on the degree-0 part of V = (1 ⊕ 0 ⊕ -1)
        let v = Space::from_grades(vec![1, 0, -1]);
        let f = GradedMap::new(v.clone(), cat.unit_object(), RatMatrix::from_i64(&[&[0, 5, 0]])).unwrap();
        assert!(crossing_absorbs_counit(&cat, &x, &f).unwrap());
        let g = GradedMap::new(cat.unit_object(), v, RatMatrix::from_i64(&[&[0], &[-2], &[0]])).unwrap();
        assert!(crossing_absorbs_unit(&cat, &y, &g).unwrap());
    }
}
