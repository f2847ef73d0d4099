//! Fuzzy sets over named finite universes and their min/max lattice algebra.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Absolute tolerance for all grade comparisons.
pub const EPSILON: f64 = 1e-9;

/// `a == b` up to [`EPSILON`].
pub fn grade_eq(a: f64, b: f64) -> bool {
    (a - b).abs() <= EPSILON
}

/// `a <= b` up to [`EPSILON`].
pub fn grade_leq(a: f64, b: f64) -> bool {
    a <= b + EPSILON
}

/// Validates a membership grade, clamping float noise within tolerance.
pub fn check_grade(value: f64) -> Result<f64> {
    if value.is_nan() || value < -EPSILON || value > 1.0 + EPSILON {
        return Err(Error::GradeOutOfRange(value));
    }
    Ok(value.clamp(0.0, 1.0))
}

/// An ordered finite set of distinct point names. Declaration order fixes
/// the vector indexing used by every grade vector over this universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Universe {
    points: Vec<String>,
}

impl Universe {
    pub fn new<S: Into<String>>(points: impl IntoIterator<Item = S>) -> Result<Arc<Self>> {
        let points: Vec<String> = points.into_iter().map(Into::into).collect();
        if points.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        let mut seen = BTreeSet::new();
        for p in &points {
            if !seen.insert(p.clone()) {
                return Err(Error::DuplicatePoint(p.clone()));
            }
        }
        Ok(Arc::new(Universe { points }))
    }

    pub fn size(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn index_of(&self, point: &str) -> Option<usize> {
        self.points.iter().position(|p| p == point)
    }
}

/// A membership-grade vector over a universe.
#[derive(Debug, Clone)]
pub struct FuzzySet {
    universe: Arc<Universe>,
    grades: Vec<f64>,
}

impl FuzzySet {
    pub fn new(universe: Arc<Universe>, grades: Vec<f64>) -> Result<Self> {
        if grades.len() != universe.size() {
            return Err(Error::GradeLengthMismatch {
                expected: universe.size(),
                got: grades.len(),
            });
        }
        let grades = grades.into_iter().map(check_grade).collect::<Result<_>>()?;
        Ok(FuzzySet { universe, grades })
    }

    /// The constant fuzzy set with grade `alpha` everywhere.
    pub fn constant(universe: Arc<Universe>, alpha: f64) -> Result<Self> {
        let alpha = check_grade(alpha)?;
        let n = universe.size();
        Ok(FuzzySet { universe, grades: vec![alpha; n] })
    }

    pub fn zero(universe: Arc<Universe>) -> Self {
        let n = universe.size();
        FuzzySet { universe, grades: vec![0.0; n] }
    }

    pub fn one(universe: Arc<Universe>) -> Self {
        let n = universe.size();
        FuzzySet { universe, grades: vec![1.0; n] }
    }

    /// The {0,1}-valued indicator of a crisp subset given by point names.
    pub fn characteristic<'a>(
        universe: Arc<Universe>,
        subset: impl IntoIterator<Item = &'a str>,
    ) -> Result<Self> {
        let mut grades = vec![0.0; universe.size()];
        for p in subset {
            let i = universe
                .index_of(p)
                .ok_or_else(|| Error::UnknownPoint(p.to_string()))?;
            grades[i] = 1.0;
        }
        Ok(FuzzySet { universe, grades })
    }

    /// The fuzzy point at index `i`: grade 1 there, 0 elsewhere.
    pub fn point(universe: Arc<Universe>, i: usize) -> Self {
        let mut grades = vec![0.0; universe.size()];
        grades[i] = 1.0;
        FuzzySet { universe, grades }
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn grades(&self) -> &[f64] {
        &self.grades
    }

    pub fn grade(&self, i: usize) -> f64 {
        self.grades[i]
    }

    pub fn same_universe(&self, other: &FuzzySet) -> Result<()> {
        if self.universe.points() != other.universe.points() {
            return Err(Error::UniverseMismatch {
                expected: self.universe.points().to_vec(),
                got: other.universe.points().to_vec(),
            });
        }
        Ok(())
    }

    /// Pointwise minimum.
    pub fn meet(&self, other: &FuzzySet) -> Result<FuzzySet> {
        self.same_universe(other)?;
        let grades = self
            .grades
            .iter()
            .zip(&other.grades)
            .map(|(a, b)| a.min(*b))
            .collect();
        Ok(FuzzySet { universe: self.universe.clone(), grades })
    }

    /// Pointwise maximum.
    pub fn join(&self, other: &FuzzySet) -> Result<FuzzySet> {
        self.same_universe(other)?;
        let grades = self
            .grades
            .iter()
            .zip(&other.grades)
            .map(|(a, b)| a.max(*b))
            .collect();
        Ok(FuzzySet { universe: self.universe.clone(), grades })
    }

    /// Pointwise `1 - grade`.
    pub fn complement(&self) -> FuzzySet {
        let grades = self.grades.iter().map(|g| 1.0 - g).collect();
        FuzzySet { universe: self.universe.clone(), grades }
    }

    /// Pointwise order up to tolerance.
    pub fn leq(&self, other: &FuzzySet) -> Result<bool> {
        self.same_universe(other)?;
        Ok(self
            .grades
            .iter()
            .zip(&other.grades)
            .all(|(a, b)| grade_leq(*a, *b)))
    }

    /// Equality of grade vectors up to tolerance. Panics on a universe
    /// mismatch only through `leq`; callers compare sets on one universe.
    pub fn approx_eq(&self, other: &FuzzySet) -> bool {
        self.universe.points() == other.universe.points()
            && self
                .grades
                .iter()
                .zip(&other.grades)
                .all(|(a, b)| grade_eq(*a, *b))
    }

    /// The crisp α-level set: indices with grade ≥ α (or > α when strict).
    pub fn alpha_cut(&self, alpha: f64, strict: bool) -> Vec<usize> {
        self.grades
            .iter()
            .enumerate()
            .filter(|(_, g)| {
                if strict {
                    **g > alpha + EPSILON
                } else {
                    grade_leq(alpha, **g)
                }
            })
            .map(|(i, _)| i)
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.grades.iter().all(|g| grade_eq(*g, 0.0))
    }

    pub fn is_one(&self) -> bool {
        self.grades.iter().all(|g| grade_eq(*g, 1.0))
    }

    /// True when every grade is exactly 0 or 1.
    pub fn is_crisp(&self) -> bool {
        self.grades.iter().all(|g| *g == 0.0 || *g == 1.0)
    }

    pub fn sum(&self) -> f64 {
        self.grades.iter().sum()
    }
}

impl PartialEq for FuzzySet {
    fn eq(&self, other: &Self) -> bool {
        self.approx_eq(other)
    }
}

impl fmt::Display for FuzzySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.grades.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}
