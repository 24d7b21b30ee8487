//! Graded finite-dimensional spaces with an ordered basis, and homogeneous
//! linear maps between them.
//!
//! A space is the list of grades of its basis vectors. Keeping the basis order
//! explicit (rather than a grade → dimension table) is what makes the tensor
//! product strictly associative under row-major flattening.

use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use super::matrix::RatMatrix;
use crate::error::{Error, Result};

pub trait Grade:
    Copy + Eq + Ord + Hash + fmt::Debug + Send + Sync + Serialize + for<'de> Deserialize<'de> + 'static
{
    fn zero() -> Self;
    fn combine(self, other: Self) -> Self;
    fn dual(self) -> Self;
    fn fmt_space(grades: &[Self], f: &mut fmt::Formatter<'_>) -> fmt::Result;
}

impl Grade for () {
    fn zero() -> Self {}
    fn combine(self, _: Self) -> Self {}
    fn dual(self) -> Self {}
    fn fmt_space(grades: &[Self], f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q^{}", grades.len())
    }
}

/// Z/2 grading of a super vector space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }
}

impl Grade for Parity {
    fn zero() -> Self {
        Parity::Even
    }
    fn combine(self, other: Self) -> Self {
        if self.is_odd() ^ other.is_odd() {
            Parity::Odd
        } else {
            Parity::Even
        }
    }
    fn dual(self) -> Self {
        self
    }
    fn fmt_space(grades: &[Self], f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let even = grades.iter().filter(|p| !p.is_odd()).count();
        let odd = grades.len() - even;
        if grades.windows(2).all(|w| w[0] <= w[1]) {
            write!(f, "super({even}|{odd})")
        } else {
            let bits: Vec<&str> = grades.iter().map(|p| if p.is_odd() { "1" } else { "0" }).collect();
            write!(f, "super[{}]", bits.join(","))
        }
    }
}

impl Grade for i64 {
    fn zero() -> Self {
        0
    }
    fn combine(self, other: Self) -> Self {
        self + other
    }
    fn dual(self) -> Self {
        -self
    }
    fn fmt_space(grades: &[Self], f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if grades.windows(2).all(|w| w[0] <= w[1]) {
            let mut dims: BTreeMap<i64, usize> = BTreeMap::new();
            for g in grades {
                *dims.entry(*g).or_default() += 1;
            }
            let parts: Vec<String> = dims.iter().map(|(d, n)| format!("{d}: {n}")).collect();
            write!(f, "graded{{{}}}", parts.join(", "))
        } else {
            let parts: Vec<String> = grades.iter().map(i64::to_string).collect();
            write!(f, "graded[{}]", parts.join(", "))
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Space<G> {
    grades: Vec<G>,
}

impl<G: Grade> Space<G> {
    pub fn from_grades(grades: Vec<G>) -> Self {
        Space { grades }
    }

    pub fn grades(&self) -> &[G] {
        &self.grades
    }

    pub fn dim(&self) -> usize {
        self.grades.len()
    }

    pub fn unit() -> Self {
        Space { grades: vec![G::zero()] }
    }

    pub fn tensor(&self, other: &Self) -> Self {
        let grades = self
            .grades
            .iter()
            .flat_map(|&a| other.grades.iter().map(move |&b| a.combine(b)))
            .collect();
        Space { grades }
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut grades = self.grades.clone();
        grades.extend_from_slice(&other.grades);
        Space { grades }
    }

    pub fn dual(&self) -> Self {
        Space {
            grades: self.grades.iter().map(|g| g.dual()).collect(),
        }
    }

    /// Recovers `Y` from `Y⊗Z` and a nonempty `Z`, if `yz` factors that way.
    pub fn strip_right(yz: &Self, z: &Self) -> Option<Self> {
        let (n, k) = (yz.dim(), z.dim());
        if k == 0 || n % k != 0 {
            return None;
        }
        let base = z.grades[0];
        let y: Vec<G> = (0..n / k)
            .map(|i| {
                let g = yz.grades[i * k];
                // solve g = y ⊗ base for y: y = g ⊗ base∨ (grades form a group)
                g.combine(base.dual())
            })
            .collect();
        let y = Space { grades: y };
        (y.tensor(z) == *yz).then_some(y)
    }

    /// Recovers `X` from `Z⊗X` and a nonempty `Z`.
    pub fn strip_left(zx: &Self, z: &Self) -> Option<Self> {
        let (n, k) = (zx.dim(), z.dim());
        if k == 0 || n % k != 0 {
            return None;
        }
        let m = n / k;
        let base = z.grades[0];
        let x = Space {
            grades: (0..m).map(|j| zx.grades[j].combine(base.dual())).collect(),
        };
        (z.tensor(&x) == *zx).then_some(x)
    }
}

impl Space<()> {
    pub fn plain(dim: usize) -> Self {
        Space { grades: vec![(); dim] }
    }
}

impl Space<Parity> {
    /// Even basis vectors first, then odd ones.
    pub fn super_space(even: usize, odd: usize) -> Self {
        let mut grades = vec![Parity::Even; even];
        grades.extend(std::iter::repeat_n(Parity::Odd, odd));
        Space { grades }
    }

    pub fn even_dim(&self) -> usize {
        self.grades.iter().filter(|p| !p.is_odd()).count()
    }

    pub fn odd_dim(&self) -> usize {
        self.dim() - self.even_dim()
    }
}

impl Space<i64> {
    /// Basis sorted by degree.
    pub fn graded(dims: &BTreeMap<i64, usize>) -> Self {
        let grades = dims
            .iter()
            .flat_map(|(&d, &n)| std::iter::repeat_n(d, n))
            .collect();
        Space { grades }
    }

    pub fn dims(&self) -> BTreeMap<i64, usize> {
        let mut out = BTreeMap::new();
        for g in &self.grades {
            *out.entry(*g).or_default() += 1;
        }
        out
    }
}

impl<G: Grade> fmt::Display for Space<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        G::fmt_space(&self.grades, f)
    }
}

impl<G: Grade> fmt::Debug for Space<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A grade-preserving linear map. Entry `(i, j)` may be nonzero only when
/// target basis vector `i` and source basis vector `j` share a grade.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GradedMap<G> {
    source: Space<G>,
    target: Space<G>,
    matrix: RatMatrix,
}

impl<G: Grade> GradedMap<G> {
    pub fn new(source: Space<G>, target: Space<G>, matrix: RatMatrix) -> Result<Self> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::domain(
                "graded map shape",
                format!("{}x{}", target.dim(), source.dim()),
                format!("{}x{}", matrix.rows(), matrix.cols()),
            ));
        }
        if let Some((i, j, _)) = matrix
            .entries()
            .find(|(i, j, _)| target.grades[*i] != source.grades[*j])
        {
            return Err(Error::Invalid(format!(
                "entry ({i},{j}) maps grade {:?} to grade {:?}",
                source.grades[j], target.grades[i]
            )));
        }
        Ok(GradedMap {
            source,
            target,
            matrix,
        })
    }

    pub(crate) fn new_unchecked(source: Space<G>, target: Space<G>, matrix: RatMatrix) -> Self {
        debug_assert!(Self::new(source.clone(), target.clone(), matrix.clone()).is_ok());
        GradedMap {
            source,
            target,
            matrix,
        }
    }

    pub fn source(&self) -> &Space<G> {
        &self.source
    }

    pub fn target(&self) -> &Space<G> {
        &self.target
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.matrix
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }
}

impl<G: Grade> fmt::Debug for GradedMap<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} : {} -> {}", self.matrix, self.source, self.target)
    }
}

impl<G: Grade> fmt::Display for GradedMap<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.matrix)
    }
}
