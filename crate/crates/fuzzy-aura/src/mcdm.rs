//! The FA-MCDM pipeline: min-max normalization, data-driven aura
//! construction, class approximation, caution-blended scoring,
//! classification, global accuracy, and the two sensitivity analyses.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::aura::{AuraSpace, ScopeFunction, ValidationMode};
use crate::error::{Error, Result};
use crate::lattice::{check_grade, FuzzySet, Universe, EPSILON};
use crate::rough::{accuracy_of_pair, approximate, ApproximationPair};
use crate::topology::Topology;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CriterionKind {
    Benefit,
    Cost,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CriterionSpec {
    pub name: String,
    pub kind: CriterionKind,
    pub weight: f64,
}

/// One named decision class: a membership grade per alternative, with
/// `None` marking unknown (resolved to 0 during computation).
#[derive(Debug, Clone)]
pub struct DecisionClass {
    pub name: String,
    pub memberships: Vec<Option<f64>>,
}

#[derive(Debug, Clone)]
pub struct DecisionProblem {
    pub alternatives: Arc<Universe>,
    pub criteria: Vec<CriterionSpec>,
    /// Raw values, alternatives x criteria.
    pub matrix: Vec<Vec<f64>>,
    pub classes: Vec<DecisionClass>,
}

/// Per-alternative outcome of step 5.
#[derive(Debug, Clone, Serialize)]
pub struct Classification {
    pub alternative: String,
    /// `None` when the score row is all zero.
    pub class: Option<String>,
    pub score: f64,
    pub tie: bool,
    /// Classes sorted by descending score. This interprets the pipeline's
    /// "ranking" output as the per-alternative score order.
    pub ranking: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct RunResult {
    pub normalized: Vec<Vec<f64>>,
    pub aura: ScopeFunction,
    pub pairs: Vec<(String, ApproximationPair)>,
    /// Scores, alternatives x classes.
    pub scores: Vec<Vec<f64>>,
    pub classifications: Vec<Classification>,
    pub global_accuracy: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Scenario {
    pub label: String,
    pub classifications: Vec<(String, Option<String>)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SensitivityReport {
    pub scenarios: Vec<Scenario>,
    /// Alternatives whose class changed across scenarios.
    pub unstable: Vec<String>,
}

impl DecisionProblem {
    pub fn validate(&self) -> Result<()> {
        let m = self.alternatives.size();
        let n = self.criteria.len();
        check_weights(&self.criteria.iter().map(|c| c.weight).collect::<Vec<_>>())?;
        for (i, row) in self.matrix.iter().enumerate() {
            if row.len() != n {
                return Err(Error::MatrixShape { row: i, expected: n, got: row.len() });
            }
        }
        if self.matrix.len() != m {
            return Err(Error::MatrixShape {
                row: self.matrix.len(),
                expected: n,
                got: 0,
            });
        }
        if self.classes.is_empty() {
            return Err(Error::NoClasses);
        }
        for class in &self.classes {
            if class.memberships.len() != m {
                return Err(Error::ClassShape {
                    name: class.name.clone(),
                    expected: m,
                    got: class.memberships.len(),
                });
            }
            for g in class.memberships.iter().flatten() {
                check_grade(*g)?;
            }
        }
        Ok(())
    }

    /// Class membership vectors with unknowns resolved to 0.
    pub fn class_sets(&self) -> Result<Vec<(String, FuzzySet)>> {
        self.classes
            .iter()
            .map(|c| {
                let grades = c.memberships.iter().map(|g| g.unwrap_or(0.0)).collect();
                Ok((c.name.clone(), FuzzySet::new(self.alternatives.clone(), grades)?))
            })
            .collect()
    }
}

fn check_weights(weights: &[f64]) -> Result<()> {
    let sum: f64 = weights.iter().sum();
    if (sum - 1.0).abs() > EPSILON {
        return Err(Error::WeightSum(sum));
    }
    Ok(())
}

/// Step 1: per-criterion min-max normalization; cost criteria reversed;
/// constant columns map to 0.
pub fn normalize(problem: &DecisionProblem) -> Result<Vec<Vec<f64>>> {
    problem.validate()?;
    let m = problem.alternatives.size();
    let n = problem.criteria.len();
    let mut out = vec![vec![0.0; n]; m];
    for j in 0..n {
        let col: Vec<f64> = (0..m).map(|i| problem.matrix[i][j]).collect();
        let min = col.iter().cloned().fold(f64::INFINITY, f64::min);
        let max = col.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let range = max - min;
        for i in 0..m {
            out[i][j] = if range == 0.0 {
                0.0
            } else {
                match problem.criteria[j].kind {
                    CriterionKind::Benefit => (col[i] - min) / range,
                    CriterionKind::Cost => (max - col[i]) / range,
                }
            };
        }
    }
    Ok(out)
}

/// Step 2: ã(u_i)(u_j) = 1 − Σ_k w_k |f_ik − f_jk|. Symmetric with a unit
/// diagonal; entries stay in [0,1] because the weights sum to 1.
pub fn build_aura_matrix(
    alternatives: &Arc<Universe>,
    normalized: &[Vec<f64>],
    weights: &[f64],
) -> Result<ScopeFunction> {
    check_weights(weights)?;
    let m = alternatives.size();
    let mut matrix = vec![vec![0.0; m]; m];
    for i in 0..m {
        for j in 0..m {
            if i == j {
                matrix[i][j] = 1.0;
            } else {
                let dist: f64 = weights
                    .iter()
                    .zip(normalized[i].iter().zip(&normalized[j]))
                    .map(|(w, (a, b))| w * (a - b).abs())
                    .sum();
                matrix[i][j] = (1.0 - dist).clamp(0.0, 1.0);
            }
        }
    }
    ScopeFunction::from_matrix(alternatives.clone(), matrix)
}

/// Step 3: per-class approximation pairs under the data-driven aura.
pub fn approximate_classes(
    problem: &DecisionProblem,
    aura: &ScopeFunction,
) -> Result<Vec<(String, ApproximationPair)>> {
    let space = AuraSpace::new(
        Topology::Discrete(problem.alternatives.clone()),
        aura.clone(),
        ValidationMode::Lenient,
    )?;
    problem
        .class_sets()?
        .into_iter()
        .map(|(name, mu)| Ok((name, approximate(&space, &mu)?)))
        .collect()
}

/// Step 4: S = α·lower + (1−α)·upper per cell.
pub fn score(pairs: &[(String, ApproximationPair)], alpha: f64) -> Result<Vec<Vec<f64>>> {
    if !(0.0..=1.0).contains(&alpha) || alpha.is_nan() {
        return Err(Error::AlphaOutOfRange(alpha));
    }
    let m = pairs
        .first()
        .map(|(_, p)| p.lower.grades().len())
        .unwrap_or(0);
    Ok((0..m)
        .map(|i| {
            pairs
                .iter()
                .map(|(_, p)| alpha * p.lower.grade(i) + (1.0 - alpha) * p.upper.grade(i))
                .collect()
        })
        .collect())
}

/// Step 5: argmax per row; ties within tolerance resolve to the lowest
/// class index and are flagged; an all-zero row is undetermined.
pub fn classify(
    alternatives: &Arc<Universe>,
    class_names: &[String],
    scores: &[Vec<f64>],
) -> Result<Vec<Classification>> {
    if class_names.is_empty() {
        return Err(Error::NoClasses);
    }
    let mut out = Vec::with_capacity(scores.len());
    for (i, row) in scores.iter().enumerate() {
        let mut best = 0;
        for (k, s) in row.iter().enumerate() {
            if *s > row[best] + EPSILON {
                best = k;
            }
        }
        let tie = row
            .iter()
            .enumerate()
            .any(|(k, s)| k != best && (s - row[best]).abs() <= EPSILON);
        let all_zero = row.iter().all(|s| s.abs() <= EPSILON);
        let mut order: Vec<usize> = (0..row.len()).collect();
        order.sort_by(|a, b| row[*b].partial_cmp(&row[*a]).unwrap().then(a.cmp(b)));
        out.push(Classification {
            alternative: alternatives.points()[i].clone(),
            class: if all_zero { None } else { Some(class_names[best].clone()) },
            score: row[best],
            tie: tie && !all_zero,
            ranking: order.into_iter().map(|k| class_names[k].clone()).collect(),
        });
    }
    Ok(out)
}

/// Step 6: mean per-class accuracy.
pub fn global_accuracy(pairs: &[(String, ApproximationPair)]) -> f64 {
    if pairs.is_empty() {
        return 1.0;
    }
    pairs.iter().map(|(_, p)| accuracy_of_pair(p)).sum::<f64>() / pairs.len() as f64
}

/// Runs steps 1-6 at full precision.
pub fn run(problem: &DecisionProblem, alpha: f64) -> Result<RunResult> {
    let normalized = normalize(problem)?;
    let weights: Vec<f64> = problem.criteria.iter().map(|c| c.weight).collect();
    let aura = build_aura_matrix(&problem.alternatives, &normalized, &weights)?;
    run_from(problem, normalized, aura, alpha)
}

fn run_from(
    problem: &DecisionProblem,
    normalized: Vec<Vec<f64>>,
    aura: ScopeFunction,
    alpha: f64,
) -> Result<RunResult> {
    let pairs = approximate_classes(problem, &aura)?;
    let scores = score(&pairs, alpha)?;
    let class_names: Vec<String> = problem.classes.iter().map(|c| c.name.clone()).collect();
    let classifications = classify(&problem.alternatives, &class_names, &scores)?;
    let global_accuracy = global_accuracy(&pairs);
    Ok(RunResult { normalized, aura, pairs, scores, classifications, global_accuracy })
}

fn stability(scenarios: &[Scenario]) -> Vec<String> {
    let mut unstable = Vec::new();
    if let Some(first) = scenarios.first() {
        for (i, (alt, base)) in first.classifications.iter().enumerate() {
            if scenarios
                .iter()
                .any(|s| s.classifications[i].1 != *base)
            {
                unstable.push(alt.clone());
            }
        }
    }
    unstable
}

/// Re-runs steps 2-5 per weight vector; normalization is weight-independent
/// and computed once.
pub fn weight_sensitivity(
    problem: &DecisionProblem,
    scenarios: &[(String, Vec<f64>)],
    alpha: f64,
) -> Result<SensitivityReport> {
    let normalized = normalize(problem)?;
    let mut out = Vec::with_capacity(scenarios.len());
    for (label, weights) in scenarios {
        let aura = build_aura_matrix(&problem.alternatives, &normalized, weights)?;
        let result = run_from(problem, normalized.clone(), aura, alpha)?;
        out.push(Scenario {
            label: label.clone(),
            classifications: result
                .classifications
                .iter()
                .map(|c| (c.alternative.clone(), c.class.clone()))
                .collect(),
        });
    }
    let unstable = stability(&out);
    Ok(SensitivityReport { scenarios: out, unstable })
}

/// Re-runs steps 4-5 per caution value under the base weights.
pub fn alpha_sweep(problem: &DecisionProblem, alphas: &[f64]) -> Result<SensitivityReport> {
    let base = run(problem, 0.5)?;
    let class_names: Vec<String> = problem.classes.iter().map(|c| c.name.clone()).collect();
    let mut out = Vec::with_capacity(alphas.len());
    for &alpha in alphas {
        let scores = score(&base.pairs, alpha)?;
        let classifications = classify(&problem.alternatives, &class_names, &scores)?;
        out.push(Scenario {
            label: format!("alpha={alpha}"),
            classifications: classifications
                .iter()
                .map(|c| (c.alternative.clone(), c.class.clone()))
                .collect(),
        });
    }
    let unstable = stability(&out);
    Ok(SensitivityReport { scenarios: out, unstable })
}
