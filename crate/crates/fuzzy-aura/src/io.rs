//! JSON and CSV wire formats for sets, topologies, spaces, point maps, and
//! decision problems. Universe point order is part of the data contract
//! and is preserved by every loader and writer.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::aura::{AuraSpace, ScopeFunction, ValidationMode};
use crate::error::{Error, Result};
use crate::lattice::{FuzzySet, Universe};
use crate::mcdm::{CriterionSpec, DecisionClass, DecisionProblem};
use crate::morphisms::PointMap;
use crate::topology::{FuzzyTopology, Topology};

#[derive(Debug, Serialize, Deserialize)]
pub struct FuzzySetDoc {
    pub universe: Vec<String>,
    pub grades: Vec<f64>,
}

impl FuzzySetDoc {
    pub fn to_set(&self) -> Result<FuzzySet> {
        let u = Universe::new(self.universe.iter().cloned())?;
        FuzzySet::new(u, self.grades.clone())
    }

    pub fn from_set(set: &FuzzySet) -> Self {
        FuzzySetDoc {
            universe: set.universe().points().to_vec(),
            grades: set.grades().to_vec(),
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct TopologyDoc {
    pub universe: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub members: Option<Vec<Vec<f64>>>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub discrete: bool,
}

impl TopologyDoc {
    /// Parses the document into either the discrete marker or a verified
    /// explicit family.
    pub fn to_topology(&self) -> Result<Topology> {
        let u = Universe::new(self.universe.iter().cloned())?;
        if self.discrete {
            return Ok(Topology::Discrete(u));
        }
        let members = self
            .members
            .as_ref()
            .ok_or_else(|| Error::Parse("topology needs `members` or `discrete`".into()))?
            .iter()
            .map(|g| FuzzySet::new(u.clone(), g.clone()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Topology::Explicit(FuzzyTopology::new(members)?))
    }

    /// Raw family without axiom verification, for `check-space`.
    pub fn to_family(&self) -> Result<Option<Vec<FuzzySet>>> {
        if self.discrete {
            return Ok(None);
        }
        let u = Universe::new(self.universe.iter().cloned())?;
        let members = self
            .members
            .as_ref()
            .ok_or_else(|| Error::Parse("topology needs `members` or `discrete`".into()))?
            .iter()
            .map(|g| FuzzySet::new(u.clone(), g.clone()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Some(members))
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct SpaceDoc {
    pub universe: Vec<String>,
    pub topology: TopologyDoc,
    /// Scope rows keyed by point name.
    pub scope: BTreeMap<String, Vec<f64>>,
    #[serde(default)]
    pub mode: Option<String>,
}

impl SpaceDoc {
    pub fn to_space(&self, strict_flag: bool) -> Result<AuraSpace> {
        let u = Universe::new(self.universe.iter().cloned())?;
        if self.topology.universe != self.universe {
            return Err(Error::UniverseMismatch {
                expected: self.universe.clone(),
                got: self.topology.universe.clone(),
            });
        }
        let topology = self.topology.to_topology()?;
        let mut rows = Vec::with_capacity(u.size());
        for p in u.points() {
            let grades = self
                .scope
                .get(p)
                .ok_or_else(|| Error::Parse(format!("scope row missing for `{p}`")))?;
            rows.push(FuzzySet::new(u.clone(), grades.clone())?);
        }
        let scope = ScopeFunction::new(u, rows)?;
        let mode = match (self.mode.as_deref(), strict_flag) {
            (_, true) | (Some("strict"), _) => ValidationMode::Strict,
            (Some("lenient") | None, _) => ValidationMode::Lenient,
            (Some(other), _) => {
                return Err(Error::Parse(format!("unknown mode `{other}`")));
            }
        };
        AuraSpace::new(topology, scope, mode)
    }

    pub fn from_space(space: &AuraSpace) -> Self {
        let universe = space.universe().points().to_vec();
        let topology = match space.topology() {
            Topology::Discrete(_) => TopologyDoc {
                universe: universe.clone(),
                members: None,
                discrete: true,
            },
            Topology::Explicit(t) => TopologyDoc {
                universe: universe.clone(),
                members: Some(t.members().iter().map(|m| m.grades().to_vec()).collect()),
                discrete: false,
            },
        };
        let scope = universe
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), space.scope().rows()[i].grades().to_vec()))
            .collect();
        let mode = match space.mode() {
            ValidationMode::Lenient => "lenient",
            ValidationMode::Strict => "strict",
        };
        SpaceDoc { universe, topology, scope, mode: Some(mode.to_string()) }
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct PointMapDoc {
    pub source: Vec<String>,
    pub target: Vec<String>,
    pub map: BTreeMap<String, String>,
}

impl PointMapDoc {
    pub fn to_map(&self) -> Result<PointMap> {
        let source = Universe::new(self.source.iter().cloned())?;
        let target = Universe::new(self.target.iter().cloned())?;
        PointMap::new(source, target, &self.map)
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ProblemDoc {
    pub alternatives: Vec<String>,
    pub criteria: Vec<CriterionSpec>,
    pub matrix: Vec<Vec<f64>>,
    /// Class name to per-alternative membership in declaration order;
    /// null marks unknown.
    pub classes: indexmap::IndexMap<String, Vec<Option<f64>>>,
}

impl ProblemDoc {
    pub fn to_problem(&self) -> Result<DecisionProblem> {
        let alternatives = Universe::new(self.alternatives.iter().cloned())?;
        let classes = self
            .classes
            .iter()
            .map(|(name, memberships)| DecisionClass {
                name: name.clone(),
                memberships: memberships.clone(),
            })
            .collect();
        let problem = DecisionProblem {
            alternatives,
            criteria: self.criteria.clone(),
            matrix: self.matrix.clone(),
            classes,
        };
        problem.validate()?;
        Ok(problem)
    }
}

pub fn load_set(path: &Path) -> Result<FuzzySet> {
    let doc: FuzzySetDoc = serde_json::from_str(&std::fs::read_to_string(path)?)?;
    doc.to_set()
}

pub fn load_space(path: &Path, strict: bool) -> Result<AuraSpace> {
    let doc: SpaceDoc = serde_json::from_str(&std::fs::read_to_string(path)?)?;
    doc.to_space(strict)
}

pub fn load_space_doc(path: &Path) -> Result<SpaceDoc> {
    Ok(serde_json::from_str(&std::fs::read_to_string(path)?)?)
}

pub fn load_map(path: &Path) -> Result<PointMap> {
    let doc: PointMapDoc = serde_json::from_str(&std::fs::read_to_string(path)?)?;
    doc.to_map()
}

pub fn load_problem(path: &Path) -> Result<DecisionProblem> {
    let doc: ProblemDoc = serde_json::from_str(&std::fs::read_to_string(path)?)?;
    doc.to_problem()
}

/// Loads a decision problem from two CSV files: a matrix file whose header
/// is `alternative` followed by criterion names, and a classes file whose
/// header is `alternative` followed by class names with empty cells marking
/// unknown memberships. Criterion kinds default to benefit with equal
/// weights; callers override via JSON when they need more.
pub fn load_problem_csv(matrix_path: &Path, classes_path: &Path) -> Result<DecisionProblem> {
    let mut reader = csv::Reader::from_path(matrix_path)?;
    let headers = reader.headers()?.clone();
    let criterion_names: Vec<String> = headers.iter().skip(1).map(String::from).collect();
    if criterion_names.is_empty() {
        return Err(Error::Parse("matrix CSV has no criterion columns".into()));
    }
    let mut alternatives = Vec::new();
    let mut matrix = Vec::new();
    for record in reader.records() {
        let record = record?;
        alternatives.push(record[0].to_string());
        let row = record
            .iter()
            .skip(1)
            .map(|v| {
                v.trim()
                    .parse::<f64>()
                    .map_err(|e| Error::Parse(format!("bad matrix value `{v}`: {e}")))
            })
            .collect::<Result<Vec<f64>>>()?;
        matrix.push(row);
    }
    let universe = Universe::new(alternatives.iter().cloned())?;

    let mut reader = csv::Reader::from_path(classes_path)?;
    let headers = reader.headers()?.clone();
    let class_names: Vec<String> = headers.iter().skip(1).map(String::from).collect();
    let mut classes: Vec<DecisionClass> = class_names
        .iter()
        .map(|name| DecisionClass { name: name.clone(), memberships: Vec::new() })
        .collect();
    for record in reader.records() {
        let record = record?;
        let alt = record[0].to_string();
        if universe.index_of(&alt).is_none() {
            return Err(Error::UnknownPoint(alt));
        }
        for (k, v) in record.iter().skip(1).enumerate() {
            let v = v.trim();
            let value = if v.is_empty() {
                None
            } else {
                Some(v.parse::<f64>().map_err(|e| {
                    Error::Parse(format!("bad membership `{v}`: {e}"))
                })?)
            };
            classes[k].memberships.push(value);
        }
    }
    let weight = 1.0 / criterion_names.len() as f64;
    let criteria = criterion_names
        .into_iter()
        .map(|name| CriterionSpec {
            name,
            kind: crate::mcdm::CriterionKind::Benefit,
            weight,
        })
        .collect();
    let problem = DecisionProblem { alternatives: universe, criteria, matrix, classes };
    problem.validate()?;
    Ok(problem)
}

/// Serializes with stable key order and full precision.
pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serialization cannot fail")
}
