//! Aura-based rough approximations, Dubois-Prade operators, the Pawlak
//! specialization, and accuracy/refinement measures.

use std::sync::Arc;

use serde::Serialize;

use crate::aura::AuraSpace;
use crate::error::{Error, Result};
use crate::lattice::{FuzzySet, Universe};

/// Lower/upper approximations of a fuzzy set together with the boundary
/// (upper minus lower, a valid fuzzy set by the sandwich law).
#[derive(Debug, Clone)]
pub struct ApproximationPair {
    pub lower: FuzzySet,
    pub upper: FuzzySet,
    pub boundary: FuzzySet,
}

impl ApproximationPair {
    fn from_bounds(lower: FuzzySet, upper: FuzzySet) -> Result<Self> {
        let grades = upper
            .grades()
            .iter()
            .zip(lower.grades())
            .map(|(u, l)| (u - l).max(0.0))
            .collect();
        let boundary = FuzzySet::new(lower.universe().clone(), grades)?;
        Ok(ApproximationPair { lower, upper, boundary })
    }
}

/// A fuzzy relation given as a dense grade matrix with unit diagonal.
#[derive(Debug, Clone)]
pub struct FuzzyRelation {
    universe: Arc<Universe>,
    matrix: Vec<Vec<f64>>,
}

impl FuzzyRelation {
    pub fn new(universe: Arc<Universe>, matrix: Vec<Vec<f64>>) -> Result<Self> {
        let n = universe.size();
        if matrix.len() != n {
            return Err(Error::GradeLengthMismatch { expected: n, got: matrix.len() });
        }
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != n {
                return Err(Error::GradeLengthMismatch { expected: n, got: row.len() });
            }
            for &g in row {
                crate::lattice::check_grade(g)?;
            }
            if row[i] != 1.0 {
                return Err(Error::NonReflexiveRelation(
                    universe.points()[i].clone(),
                    row[i],
                ));
            }
        }
        Ok(FuzzyRelation { universe, matrix })
    }

    pub fn from_scope(space: &AuraSpace) -> Self {
        let universe = space.universe().clone();
        let n = universe.size();
        let matrix = (0..n)
            .map(|x| (0..n).map(|y| space.scope().grade(x, y)).collect())
            .collect();
        FuzzyRelation { universe, matrix }
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn grade(&self, x: usize, y: usize) -> f64 {
        self.matrix[x][y]
    }
}

/// lower = aura interior, upper = aura closure.
pub fn approximate(space: &AuraSpace, mu: &FuzzySet) -> Result<ApproximationPair> {
    let lower = space.aura_interior(mu)?;
    let upper = space.aura_closure(mu)?;
    ApproximationPair::from_bounds(lower, upper)
}

/// Dubois-Prade lower/upper approximations under a reflexive relation.
/// Coincides with `approximate` when the relation is the scope matrix.
pub fn dubois_prade(rel: &FuzzyRelation, mu: &FuzzySet) -> Result<ApproximationPair> {
    if rel.universe.points() != mu.universe().points() {
        return Err(Error::UniverseMismatch {
            expected: rel.universe.points().to_vec(),
            got: mu.universe().points().to_vec(),
        });
    }
    let n = rel.universe.size();
    let lower = FuzzySet::new(
        rel.universe.clone(),
        (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| (1.0 - rel.grade(x, y)).max(mu.grade(y)))
                    .fold(1.0_f64, f64::min)
            })
            .collect(),
    )?;
    let upper = FuzzySet::new(
        rel.universe.clone(),
        (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| rel.grade(x, y).min(mu.grade(y)))
                    .fold(0.0_f64, f64::max)
            })
            .collect(),
    )?;
    ApproximationPair::from_bounds(lower, upper)
}

/// Classical Pawlak approximations of a crisp subset under a partition,
/// both given by point names. Returns (lower, upper) as index sets.
pub fn pawlak(
    universe: &Arc<Universe>,
    partition: &[Vec<String>],
    subset: &[String],
) -> Result<(Vec<usize>, Vec<usize>)> {
    let n = universe.size();
    let mut class_of = vec![usize::MAX; n];
    for (c, class) in partition.iter().enumerate() {
        for p in class {
            let i = universe
                .index_of(p)
                .ok_or_else(|| Error::UnknownPoint(p.clone()))?;
            if class_of[i] != usize::MAX {
                return Err(Error::InvalidPartition(format!("`{p}` appears twice")));
            }
            class_of[i] = c;
        }
    }
    if let Some(i) = class_of.iter().position(|&c| c == usize::MAX) {
        return Err(Error::InvalidPartition(format!(
            "`{}` is not covered",
            universe.points()[i]
        )));
    }
    let mut member = vec![false; n];
    for p in subset {
        let i = universe
            .index_of(p)
            .ok_or_else(|| Error::UnknownPoint(p.clone()))?;
        member[i] = true;
    }
    let class_of = &class_of;
    let in_class = |x: usize| (0..n).filter(move |&y| class_of[y] == class_of[x]);
    let lower = (0..n)
        .filter(|&x| in_class(x).all(|y| member[y]))
        .collect();
    let upper = (0..n)
        .filter(|&x| in_class(x).any(|y| member[y]))
        .collect();
    Ok((lower, upper))
}

/// Accuracy ρ = Σ lower / Σ upper and roughness σ = 1 − ρ. When both sums
/// vanish the set is fully definable, so ρ = 1.
pub fn accuracy(space: &AuraSpace, mu: &FuzzySet) -> Result<(f64, f64)> {
    let pair = approximate(space, mu)?;
    let rho = accuracy_of_pair(&pair);
    Ok((rho, 1.0 - rho))
}

pub fn accuracy_of_pair(pair: &ApproximationPair) -> f64 {
    let upper_sum = pair.upper.sum();
    if upper_sum == 0.0 {
        1.0
    } else {
        pair.lower.sum() / upper_sum
    }
}

/// Outcome of a refinement comparison between two spaces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum RefinementReport {
    /// The second scope is pointwise below the first; all three
    /// monotonicity inequalities verified.
    Monotone,
    /// Precondition not met.
    Incomparable,
    Violation(String),
}

/// Checks the refinement precondition ã₂ ≤ ã₁ pointwise, then verifies
/// that the finer scope yields tighter bounds.
pub fn refinement_compare(
    coarse: &AuraSpace,
    fine: &AuraSpace,
    mu: &FuzzySet,
) -> Result<RefinementReport> {
    if coarse.universe().points() != fine.universe().points() {
        return Err(Error::UniverseMismatch {
            expected: coarse.universe().points().to_vec(),
            got: fine.universe().points().to_vec(),
        });
    }
    let n = coarse.universe().size();
    let refined = (0..n).all(|x| {
        (0..n).all(|y| {
            crate::lattice::grade_leq(fine.scope().grade(x, y), coarse.scope().grade(x, y))
        })
    });
    if !refined {
        return Ok(RefinementReport::Incomparable);
    }
    let a = approximate(coarse, mu)?;
    let b = approximate(fine, mu)?;
    if !a.lower.leq(&b.lower)? {
        return Ok(RefinementReport::Violation("lower bound not monotone".into()));
    }
    if !b.upper.leq(&a.upper)? {
        return Ok(RefinementReport::Violation("upper bound not monotone".into()));
    }
    if !b.boundary.leq(&a.boundary)? {
        return Ok(RefinementReport::Violation("boundary not monotone".into()));
    }
    Ok(RefinementReport::Monotone)
}
