//! Recompute the bundled benchmark from its raw inputs and compare with
//! the expected tables. Fixtures are embedded at compile time so the
//! binary can run from anywhere.

use serde::{Deserialize, Serialize};

use crate::aura::{AuraSpace, Iterations};
use crate::error::Result;
use crate::io::{ProblemDoc, SpaceDoc};
use crate::lattice::FuzzySet;
use crate::mcdm::{self, DecisionProblem};
use crate::openness::openness_profile;

pub const MEDICAL_JSON: &str = include_str!("../../../paper-data/medical.json");
pub const TABLE3_JSON: &str = include_str!("../../../paper-data/table3_aura.json");
pub const TABLE4_JSON: &str = include_str!("../../../paper-data/table4_upper.json");
pub const TABLE5_JSON: &str = include_str!("../../../paper-data/table5_lower.json");
pub const TABLE7_JSON: &str = include_str!("../../../paper-data/table7_scores.json");
pub const TABLE8_JSON: &str = include_str!("../../../paper-data/table8_weights.json");
pub const TABLE9_JSON: &str = include_str!("../../../paper-data/table9_alpha.json");
pub const THM310_SPACE_JSON: &str = include_str!("../../../paper-data/thm310_space.json");
pub const THM310_MU_JSON: &str = include_str!("../../../paper-data/thm310_mu.json");
pub const EX43_SPACE_JSON: &str = include_str!("../../../paper-data/ex43_space.json");
pub const EX43_MU_JSON: &str = include_str!("../../../paper-data/ex43_mu.json");

#[derive(Debug, Deserialize, Clone)]
pub struct MatrixTable {
    pub alternatives: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

#[derive(Debug, Deserialize, Clone)]
pub struct ClassTable {
    pub alternatives: Vec<String>,
    pub classes: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

#[derive(Debug, Deserialize, Clone)]
pub struct ScoreTable {
    pub alternatives: Vec<String>,
    pub classes: Vec<String>,
    pub alpha: f64,
    pub rows: Vec<Vec<f64>>,
    pub classifications: Vec<String>,
}

#[derive(Debug, Deserialize, Clone)]
pub struct WeightTable {
    pub alpha: f64,
    pub scenarios: Vec<WeightScenario>,
    pub expected_p5: String,
    pub expected_p6: String,
    pub reference: indexmap::IndexMap<String, String>,
}

#[derive(Debug, Deserialize, Clone)]
pub struct WeightScenario {
    pub label: String,
    pub weights: Vec<f64>,
}

#[derive(Debug, Deserialize, Clone)]
pub struct AlphaTable {
    pub classes: Vec<String>,
    pub alphas: Vec<f64>,
    pub p5_rows: Vec<Vec<f64>>,
    pub p5_classes: Vec<Option<String>>,
    pub p6_class_at_one: Option<String>,
}

/// All expected tables, deserialized from the bundled fixtures by default.
#[derive(Debug, Clone)]
pub struct Expectations {
    pub aura: MatrixTable,
    pub upper: ClassTable,
    pub lower: ClassTable,
    pub scores: ScoreTable,
    pub weights: WeightTable,
    pub alpha: AlphaTable,
}

impl Expectations {
    pub fn bundled() -> Result<Self> {
        Ok(Expectations {
            aura: serde_json::from_str(TABLE3_JSON)?,
            upper: serde_json::from_str(TABLE4_JSON)?,
            lower: serde_json::from_str(TABLE5_JSON)?,
            scores: serde_json::from_str(TABLE7_JSON)?,
            weights: serde_json::from_str(TABLE8_JSON)?,
            alpha: serde_json::from_str(TABLE9_JSON)?,
        })
    }
}

pub fn bundled_problem() -> Result<DecisionProblem> {
    let doc: ProblemDoc = serde_json::from_str(MEDICAL_JSON)?;
    doc.to_problem()
}

#[derive(Debug, Serialize)]
pub struct TableReport {
    pub table: String,
    pub max_deviation: f64,
    pub tolerance: f64,
    pub pass: bool,
    /// Name of the worst or first offending cell.
    pub detail: String,
}

#[derive(Debug, Serialize)]
pub struct ReproReport {
    pub tables: Vec<TableReport>,
    pub pass: bool,
}

fn compare_matrix(
    table: &str,
    expected: &[Vec<f64>],
    actual: &[Vec<f64>],
    row_names: &[String],
    col_names: &[String],
    tolerance: f64,
) -> TableReport {
    let mut max_deviation = 0.0;
    let mut detail = String::from("all cells within tolerance");
    for (i, (er, ar)) in expected.iter().zip(actual).enumerate() {
        for (j, (e, a)) in er.iter().zip(ar).enumerate() {
            let dev = (e - a).abs();
            if dev > max_deviation {
                max_deviation = dev;
                detail = format!(
                    "worst cell ({}, {}): expected {e}, got {a:.6}",
                    row_names[i], col_names[j]
                );
            }
        }
    }
    TableReport {
        table: table.to_string(),
        max_deviation,
        tolerance,
        pass: max_deviation <= tolerance,
        detail,
    }
}

fn exact_report(table: &str, pass: bool, detail: String) -> TableReport {
    TableReport {
        table: table.to_string(),
        max_deviation: if pass { 0.0 } else { f64::NAN },
        tolerance: 0.0,
        pass,
        detail,
    }
}

/// Recomputes every table from the problem inputs and compares against the
/// expectations. `matrix_tol` applies to the 2-decimal tables; the
/// 3-decimal score tables use `score_tol`.
pub fn reproduce(
    problem: &DecisionProblem,
    expected: &Expectations,
    matrix_tol: f64,
    score_tol: f64,
) -> Result<ReproReport> {
    let mut tables = Vec::new();
    let alt_names = problem.alternatives.points().to_vec();
    let class_names: Vec<String> = problem.classes.iter().map(|c| c.name.clone()).collect();

    let result = mcdm::run(problem, expected.scores.alpha)?;

    let n = problem.alternatives.size();
    let aura_rows: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| result.aura.grade(i, j)).collect())
        .collect();
    tables.push(compare_matrix(
        "similarity matrix",
        &expected.aura.rows,
        &aura_rows,
        &alt_names,
        &alt_names,
        matrix_tol,
    ));

    let upper_rows: Vec<Vec<f64>> = (0..n)
        .map(|i| result.pairs.iter().map(|(_, p)| p.upper.grade(i)).collect())
        .collect();
    tables.push(compare_matrix(
        "upper approximations",
        &expected.upper.rows,
        &upper_rows,
        &alt_names,
        &class_names,
        matrix_tol,
    ));

    let lower_rows: Vec<Vec<f64>> = (0..n)
        .map(|i| result.pairs.iter().map(|(_, p)| p.lower.grade(i)).collect())
        .collect();
    tables.push(compare_matrix(
        "lower approximations",
        &expected.lower.rows,
        &lower_rows,
        &alt_names,
        &class_names,
        matrix_tol,
    ));

    let mut score_report = compare_matrix(
        "scores",
        &expected.scores.rows,
        &result.scores,
        &alt_names,
        &class_names,
        score_tol,
    );
    let classes_match = result
        .classifications
        .iter()
        .zip(&expected.scores.classifications)
        .all(|(c, e)| c.class.as_deref() == Some(e.as_str()));
    if !classes_match {
        score_report.pass = false;
        score_report.detail = format!(
            "classification mismatch: {:?}",
            result
                .classifications
                .iter()
                .map(|c| c.class.clone())
                .collect::<Vec<_>>()
        );
    }
    tables.push(score_report);

    // caution sweep for p5, plus the undetermined outcome at alpha = 1
    let p5 = problem
        .alternatives
        .index_of("p5")
        .expect("benchmark has p5");
    let p6 = problem
        .alternatives
        .index_of("p6")
        .expect("benchmark has p6");
    let mut sweep_rows = Vec::new();
    let mut sweep_ok = true;
    let mut sweep_detail = String::from("all sweep cells within tolerance");
    for (step, &alpha) in expected.alpha.alphas.iter().enumerate() {
        let scores = mcdm::score(&result.pairs, alpha)?;
        let classifications = mcdm::classify(&problem.alternatives, &class_names, &scores)?;
        sweep_rows.push(scores[p5].clone());
        if classifications[p5].class != expected.alpha.p5_classes[step] {
            sweep_ok = false;
            sweep_detail = format!(
                "alpha={alpha}: p5 classified {:?}, expected {:?}",
                classifications[p5].class, expected.alpha.p5_classes[step]
            );
        }
        if alpha == 1.0 && classifications[p6].class != expected.alpha.p6_class_at_one {
            sweep_ok = false;
            sweep_detail = format!("alpha=1: p6 classified {:?}", classifications[p6].class);
        }
    }
    let mut sweep_report = compare_matrix(
        "caution sweep (p5)",
        &expected.alpha.p5_rows,
        &sweep_rows,
        &expected
            .alpha
            .alphas
            .iter()
            .map(|a| format!("alpha={a}"))
            .collect::<Vec<_>>(),
        &class_names,
        score_tol,
    );
    if !sweep_ok {
        sweep_report.pass = false;
        sweep_report.detail = sweep_detail;
    }
    tables.push(sweep_report);

    // weight sensitivity: every scenario must keep all six classifications
    let scenarios: Vec<(String, Vec<f64>)> = expected
        .weights
        .scenarios
        .iter()
        .map(|s| (s.label.clone(), s.weights.clone()))
        .collect();
    let report = mcdm::weight_sensitivity(problem, &scenarios, expected.weights.alpha)?;
    let mut weights_ok = true;
    let mut weights_detail = String::from("all scenarios reproduce the classifications");
    for s in &report.scenarios {
        for (alt, class) in &s.classifications {
            let want = if alt == "p5" {
                Some(expected.weights.expected_p5.as_str())
            } else if alt == "p6" {
                Some(expected.weights.expected_p6.as_str())
            } else {
                expected.weights.reference.get(alt).map(String::as_str)
            };
            if let Some(want) = want {
                if class.as_deref() != Some(want) {
                    weights_ok = false;
                    weights_detail =
                        format!("{}: {alt} classified {class:?}, expected {want}", s.label);
                }
            }
        }
    }
    tables.push(exact_report("weight sensitivity", weights_ok, weights_detail));

    tables.push(counterexample_report()?);

    let pass = tables.iter().all(|t| t.pass);
    Ok(ReproReport { tables, pass })
}

/// The two stored counterexample spaces must reproduce their published
/// values exactly.
pub fn counterexample_report() -> Result<TableReport> {
    let thm310: SpaceDoc = serde_json::from_str(THM310_SPACE_JSON)?;
    let thm310 = thm310.to_space(false)?;
    let mu = serde_json::from_str::<crate::io::FuzzySetDoc>(THM310_MU_JSON)?.to_set()?;
    let cl1 = thm310.aura_closure(&mu)?;
    let cl2 = thm310.iterated_closure(&mu, Iterations::Finite(2))?;
    let ok310 = cl1.grades() == [0.0, 0.6, 0.6] && cl2.grades() == [0.6, 0.6, 0.6];

    let ex43: SpaceDoc = serde_json::from_str(EX43_SPACE_JSON)?;
    let ex43 = ex43.to_space(false)?;
    let mu43 = serde_json::from_str::<crate::io::FuzzySetDoc>(EX43_MU_JSON)?.to_set()?;
    let cl43 = ex43.aura_closure(&mu43)?;
    let profile = openness_profile(&ex43, &mu43)?;
    let ok43 = cl43.grades() == [0.7, 0.5, 0.3, 0.4] && !profile.semi && !profile.pre;

    let pass = ok310 && ok43;
    let detail = if pass {
        "closure counterexamples reproduce exactly".to_string()
    } else {
        format!(
            "3-point: cl={:?} cl2={:?}; 4-point: cl={:?} semi={} pre={}",
            cl1.grades(),
            cl2.grades(),
            cl43.grades(),
            profile.semi,
            profile.pre
        )
    };
    Ok(exact_report("closure counterexamples", pass, detail))
}

/// Runs the full reproduction against the bundled fixtures.
pub fn reproduce_bundled(matrix_tol: f64, score_tol: f64) -> Result<ReproReport> {
    let problem = bundled_problem()?;
    let expected = Expectations::bundled()?;
    reproduce(&problem, &expected, matrix_tol, score_tol)
}

pub fn bundled_thm310_space() -> Result<AuraSpace> {
    serde_json::from_str::<SpaceDoc>(THM310_SPACE_JSON)?.to_space(false)
}

pub fn bundled_ex43_space() -> Result<AuraSpace> {
    serde_json::from_str::<SpaceDoc>(EX43_SPACE_JSON)?.to_space(false)
}

pub fn bundled_ex43_mu() -> Result<FuzzySet> {
    serde_json::from_str::<crate::io::FuzzySetDoc>(EX43_MU_JSON)?.to_set()
}
