//! Seeded random generators for objects, morphisms, triples and bordisms.
//!
//! Entries are small rationals `p/q` with `|p| ≤ 3` and `1 ≤ q ≤ 3`, a third of
//! them zero, so exact arithmetic stays cheap at the fixed small dimensions.

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

use rand::SeedableRng;

use crate::bordism::{Arc, Endpoint, PointSet, RBordMorphism};
use crate::thickened::ThickTriple;
use crate::vect::{q_frac, q_int, GradeKind, GradedMap, MatrixCategory, Mor, Obj, Parity, RatMatrix, Space, Q};

/// Independent stream for one trial of one suite; parallel scheduling never
/// changes which numbers a trial sees.
pub fn trial_rng(seed: u64, suite: &str, trial: usize) -> ChaCha8Rng {
    let mut hasher = Sha256::new();
    hasher.update(seed.to_le_bytes());
    hasher.update((suite.len() as u64).to_le_bytes());
    hasher.update(suite.as_bytes());
    hasher.update((trial as u64).to_le_bytes());
    let digest = hasher.finalize();
    let mut key = [0u8; 32];
    key.copy_from_slice(&digest);
    ChaCha8Rng::from_seed(key)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub max_dim: usize,
    pub max_degree: i64,
}

pub fn small_q(rng: &mut impl Rng) -> Q {
    if rng.gen_ratio(1, 3) {
        return Q::zero();
    }
    let mut p = rng.gen_range(1..=3);
    if rng.gen_bool(0.5) {
        p = -p;
    }
    q_frac(p, rng.gen_range(1..=3))
}

pub fn nonzero_q(rng: &mut impl Rng) -> Q {
    loop {
        let v = small_q(rng);
        if !v.is_zero() {
            return v;
        }
    }
}

/// Grades the generators know how to draw.
pub trait Sample: crate::vect::Grade {
    fn sample(rng: &mut ChaCha8Rng, bounds: &Bounds) -> Self;
}

impl Sample for () {
    fn sample(_: &mut ChaCha8Rng, _: &Bounds) -> Self {}
}

impl Sample for Parity {
    fn sample(rng: &mut ChaCha8Rng, _: &Bounds) -> Self {
        if rng.gen_bool(0.5) {
            Parity::Odd
        } else {
            Parity::Even
        }
    }
}

impl Sample for i64 {
    fn sample(rng: &mut ChaCha8Rng, bounds: &Bounds) -> Self {
        rng.gen_range(-bounds.max_degree..=bounds.max_degree)
    }
}

/// A space of dimension `1..=max_dim` with grades sorted.
pub fn space<G: Sample>(rng: &mut ChaCha8Rng, bounds: &Bounds, max_dim: usize) -> Space<G> {
    let dim = rng.gen_range(1..=max_dim.min(bounds.max_dim).max(1));
    let mut grades: Vec<G> = (0..dim).map(|_| G::sample(rng, bounds)).collect();
    grades.sort();
    Space::from_grades(grades)
}

/// A space whose grades are mostly drawn from `pool`, so that maps into or
/// out of it have room to be nonzero in graded instances.
pub fn space_near<G: Sample>(rng: &mut ChaCha8Rng, bounds: &Bounds, max_dim: usize, pool: &[G]) -> Space<G> {
    let dim = rng.gen_range(1..=max_dim.min(bounds.max_dim).max(1));
    let mut grades: Vec<G> = (0..dim)
        .map(|_| match pool.choose(rng) {
            Some(&g) if rng.gen_ratio(4, 5) => g,
            _ => G::sample(rng, bounds),
        })
        .collect();
    grades.sort();
    Space::from_grades(grades)
}

/// Random grade-preserving map `x → y`.
pub fn map<G: Sample>(rng: &mut ChaCha8Rng, x: &Space<G>, y: &Space<G>) -> GradedMap<G> {
    let mut m = RatMatrix::zeros(y.dim(), x.dim());
    for (i, gy) in y.grades().iter().enumerate() {
        for (j, gx) in x.grades().iter().enumerate() {
            if gy == gx {
                m.set(i, j, small_q(rng));
            }
        }
    }
    GradedMap::new(x.clone(), y.clone(), m).expect("entries respect grades")
}

pub fn matrix_triple<K: GradeKind>(
    cat: &MatrixCategory<K>,
    rng: &mut ChaCha8Rng,
    bounds: &Bounds,
    x: &Obj<K>,
    y: &Obj<K>,
    max_z: usize,
) -> ThickTriple<Obj<K>, Mor<K>>
where
    K::Grade: Sample,
{
    let pool: Vec<K::Grade> = x.dual().grades().iter().chain(y.dual().grades()).copied().collect();
    let z = space_near(rng, bounds, max_z, &pool);
    let unit = Space::unit();
    let t = map(rng, &unit, &y.tensor(&z));
    let b = map(rng, &z.tensor(x), &unit);
    ThickTriple::new(cat, x.clone(), y.clone(), z, t, b).expect("generated shapes agree")
}

/// Distinct labels `{prefix}0, {prefix}1, …`.
pub fn points(prefix: &str, n: usize) -> PointSet {
    PointSet::new((0..n).map(|i| format!("{prefix}{i}")))
}

/// Positive length: an integer in `1..=3`, or any `p/q` in `(0, 3]` when
/// `integer` is false.
pub fn length(rng: &mut impl Rng, integer: bool) -> Q {
    if integer || rng.gen_bool(0.5) {
        q_int(rng.gen_range(1..=3))
    } else {
        q_frac(rng.gen_range(1..=9), rng.gen_range(1..=3))
    }
}

/// A random bordism `x → y` (perfect matching with positive lengths) plus at
/// most one free circle. `x.len() + y.len()` must be even.
pub fn bordism(rng: &mut ChaCha8Rng, x: &PointSet, y: &PointSet, integer: bool) -> RBordMorphism {
    assert!((x.len() + y.len()).is_multiple_of(2), "odd number of boundary points");
    let mut ends: Vec<Endpoint> = (0..x.len())
        .map(Endpoint::In)
        .chain((0..y.len()).map(Endpoint::Out))
        .collect();
    ends.shuffle(rng);
    let arcs = ends
        .chunks(2)
        .map(|pair| Arc::new(pair[0], pair[1], length(rng, integer)))
        .collect();
    let circles = if rng.gen_ratio(1, 4) {
        vec![length(rng, integer)]
    } else {
        vec![]
    };
    RBordMorphism::new(x.clone(), y.clone(), arcs, circles).expect("generated matching is perfect")
}

/// A bordism `x → x` whose arcs all run from source to target, so every
/// point lies on a closed cycle after gluing.
pub fn through_bordism(rng: &mut ChaCha8Rng, x: &PointSet, integer: bool) -> RBordMorphism {
    let mut perm: Vec<usize> = (0..x.len()).collect();
    perm.shuffle(rng);
    let arcs = perm
        .iter()
        .enumerate()
        .map(|(i, &j)| Arc::new(Endpoint::In(i), Endpoint::Out(j), length(rng, integer)))
        .collect();
    RBordMorphism::new(x.clone(), x.clone(), arcs, vec![]).expect("permutation matching")
}

/// A point set of size `0..=max` whose size has the requested parity.
pub fn points_with_parity(rng: &mut impl Rng, prefix: &str, max: usize, parity: usize) -> PointSet {
    let choices: Vec<usize> = (0..=max).filter(|n| n % 2 == parity % 2).collect();
    points(prefix, *choices.choose(rng).expect("some size has each parity"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let a: u64 = trial_rng(42, "slide.finvect", 3).gen();
        let b: u64 = trial_rng(42, "slide.finvect", 3).gen();
        let c: u64 = trial_rng(42, "slide.finvect", 4).gen();
        let d: u64 = trial_rng(42, "slide.graded", 3).gen();
        assert_eq!(a, b);
        assert!(a != c && a != d);
    }

    #[test]
    fn bordisms_are_perfect_matchings() {
        let mut rng = trial_rng(1, "gen", 0);
        for _ in 0..50 {
            let x = points_with_parity(&mut rng, "x", 3, 1);
            let y = points_with_parity(&mut rng, "y", 3, 1);
            let b = bordism(&mut rng, &x, &y, false);
            let mut ends: Vec<Endpoint> = b.arcs().iter().flat_map(|a| [a.a, a.b]).collect();
            ends.sort();
            ends.dedup();
            assert_eq!(ends.len(), x.len() + y.len());
        }
    }

    #[test]
    fn triples_have_valid_shapes() {
        let cat = crate::balanced::GradedVect::default_q();
        let bounds = Bounds { max_dim: 3, max_degree: 2 };
        let mut rng = trial_rng(7, "gen", 0);
        for _ in 0..20 {
            let x: Space<i64> = space(&mut rng, &bounds, 3);
            let tr = matrix_triple(&cat, &mut rng, &bounds, &x, &x, 3);
            assert_eq!(tr.t().source(), &Space::unit());
            assert_eq!(tr.b().source(), &tr.z().tensor(&x));
        }
    }
}
