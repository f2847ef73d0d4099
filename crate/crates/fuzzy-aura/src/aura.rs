//! Scope functions, aura spaces, and the aura closure/interior operators.
//!
//! The scope of a point is a fuzzy set giving the degree to which every
//! other point lies in its aura; the diagonal is exactly 1. The closure of
//! μ at x is the sup-min composition of x's scope row with μ, its dual the
//! inf-max composition.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lattice::{grade_eq, FuzzySet, Universe};
use crate::topology::{FuzzyTopology, Topology};

/// Per-point fuzzy neighborhood assignment, stored as a dense matrix of
/// rows indexed by universe order.
#[derive(Debug, Clone)]
pub struct ScopeFunction {
    universe: Arc<Universe>,
    rows: Vec<FuzzySet>,
}

impl ScopeFunction {
    /// Builds a scope function, checking one row per point and an exact
    /// unit diagonal.
    pub fn new(universe: Arc<Universe>, rows: Vec<FuzzySet>) -> Result<Self> {
        if rows.len() != universe.size() {
            return Err(Error::GradeLengthMismatch {
                expected: universe.size(),
                got: rows.len(),
            });
        }
        for (i, row) in rows.iter().enumerate() {
            if row.universe().points() != universe.points() {
                return Err(Error::UniverseMismatch {
                    expected: universe.points().to_vec(),
                    got: row.universe().points().to_vec(),
                });
            }
            if row.grade(i) != 1.0 {
                return Err(Error::ScopeDiagonal {
                    point: universe.points()[i].clone(),
                    value: row.grade(i),
                });
            }
        }
        Ok(ScopeFunction { universe, rows })
    }

    pub fn from_matrix(universe: Arc<Universe>, matrix: Vec<Vec<f64>>) -> Result<Self> {
        let rows = matrix
            .into_iter()
            .map(|g| FuzzySet::new(universe.clone(), g))
            .collect::<Result<_>>()?;
        ScopeFunction::new(universe, rows)
    }

    /// ã(x) = 1̄ for every x.
    pub fn trivial(universe: Arc<Universe>) -> Self {
        let rows = (0..universe.size())
            .map(|_| FuzzySet::one(universe.clone()))
            .collect();
        ScopeFunction { universe, rows }
    }

    /// ã(x) = χ_{x} for every x.
    pub fn identity(universe: Arc<Universe>) -> Self {
        let rows = (0..universe.size())
            .map(|i| FuzzySet::point(universe.clone(), i))
            .collect();
        ScopeFunction { universe, rows }
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn rows(&self) -> &[FuzzySet] {
        &self.rows
    }

    /// ã(x)(y) by index.
    pub fn grade(&self, x: usize, y: usize) -> f64 {
        self.rows[x].grade(y)
    }
}

/// Validation applied when assembling a space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ValidationMode {
    /// Only the unit-diagonal axiom is checked.
    #[default]
    Lenient,
    /// Every scope row must additionally be a member of the topology.
    Strict,
}

/// A universe with a fuzzy topology and a scope function.
#[derive(Debug, Clone)]
pub struct AuraSpace {
    universe: Arc<Universe>,
    topology: Topology,
    scope: ScopeFunction,
    mode: ValidationMode,
}

/// Classification flags for a scope function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct ScopeProfile {
    pub trivial: bool,
    pub crisp: bool,
    pub symmetric: bool,
    pub transitive: bool,
}

/// Iteration count for the iterated closure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Iterations {
    Finite(usize),
    /// Iterate to the pointwise fixpoint, reached within |X| steps.
    Fixpoint,
}

impl AuraSpace {
    pub fn new(topology: Topology, scope: ScopeFunction, mode: ValidationMode) -> Result<Self> {
        let universe = topology.universe().clone();
        if universe.points() != scope.universe().points() {
            return Err(Error::UniverseMismatch {
                expected: universe.points().to_vec(),
                got: scope.universe().points().to_vec(),
            });
        }
        if mode == ValidationMode::Strict {
            for (i, row) in scope.rows().iter().enumerate() {
                if !topology.contains_member(row) {
                    return Err(Error::AuraNotOpen(universe.points()[i].clone()));
                }
            }
        }
        Ok(AuraSpace { universe, topology, scope, mode })
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn topology(&self) -> &Topology {
        &self.topology
    }

    pub fn scope(&self) -> &ScopeFunction {
        &self.scope
    }

    pub fn mode(&self) -> ValidationMode {
        self.mode
    }

    fn check_universe(&self, mu: &FuzzySet) -> Result<()> {
        if self.universe.points() != mu.universe().points() {
            return Err(Error::UniverseMismatch {
                expected: self.universe.points().to_vec(),
                got: mu.universe().points().to_vec(),
            });
        }
        Ok(())
    }

    /// cl(μ)(x) = sup_y min{ã(x)(y), μ(y)}.
    pub fn aura_closure(&self, mu: &FuzzySet) -> Result<FuzzySet> {
        self.check_universe(mu)?;
        let n = self.universe.size();
        let grades = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| self.scope.grade(x, y).min(mu.grade(y)))
                    .fold(0.0_f64, f64::max)
            })
            .collect();
        FuzzySet::new(self.universe.clone(), grades)
    }

    /// int(μ)(x) = inf_y max{1 − ã(x)(y), μ(y)}.
    pub fn aura_interior(&self, mu: &FuzzySet) -> Result<FuzzySet> {
        self.check_universe(mu)?;
        let n = self.universe.size();
        let grades = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| (1.0 - self.scope.grade(x, y)).max(mu.grade(y)))
                    .fold(1.0_f64, f64::min)
            })
            .collect();
        FuzzySet::new(self.universe.clone(), grades)
    }

    /// n-fold aura closure, or iteration to the fixpoint. A fixpoint must
    /// appear within |X| steps; anything later is an internal error.
    pub fn iterated_closure(&self, mu: &FuzzySet, n: Iterations) -> Result<FuzzySet> {
        self.check_universe(mu)?;
        match n {
            Iterations::Finite(k) => {
                let mut acc = mu.clone();
                for _ in 0..k {
                    acc = self.aura_closure(&acc)?;
                }
                Ok(acc)
            }
            Iterations::Fixpoint => {
                let cap = self.universe.size();
                let mut acc = mu.clone();
                for _ in 0..cap {
                    let next = self.aura_closure(&acc)?;
                    if next.approx_eq(&acc) {
                        return Ok(acc);
                    }
                    acc = next;
                }
                let next = self.aura_closure(&acc)?;
                if next.approx_eq(&acc) {
                    Ok(acc)
                } else {
                    Err(Error::FixpointNotReached(cap))
                }
            }
        }
    }

    /// μ is aura-open when int(μ) = μ.
    pub fn is_a_open(&self, mu: &FuzzySet) -> Result<bool> {
        Ok(self.aura_interior(mu)?.approx_eq(mu))
    }

    /// γ is aura-closed when cl(γ) = γ, equivalently γ^c is aura-open.
    pub fn is_a_closed(&self, gamma: &FuzzySet) -> Result<bool> {
        Ok(self.aura_closure(gamma)?.approx_eq(gamma))
    }

    /// The members of the topology fixed by the aura interior. This family
    /// is the full induced topology because it is always contained in the
    /// ambient one.
    pub fn aura_topology(&self) -> Result<FuzzyTopology> {
        let explicit = self
            .topology
            .explicit()
            .ok_or(Error::DiscreteUnenumerable(
                "aura topology of a discrete space; use is_a_open per set",
            ))?;
        let mut members = Vec::new();
        for m in explicit.members() {
            if self.is_a_open(m)? {
                members.push(m.clone());
            }
        }
        FuzzyTopology::new(members)
    }

    /// Exhaustive trivial/crisp/symmetric/transitive checks.
    pub fn classify_scope(&self) -> ScopeProfile {
        let n = self.universe.size();
        let a = |x: usize, y: usize| self.scope.grade(x, y);
        let trivial = (0..n).all(|x| (0..n).all(|y| a(x, y) == 1.0));
        let crisp = self.scope.rows().iter().all(FuzzySet::is_crisp);
        let symmetric = (0..n).all(|x| (0..n).all(|y| grade_eq(a(x, y), a(y, x))));
        let transitive = (0..n).all(|x| {
            (0..n).all(|y| (0..n).all(|z| a(x, y).min(a(y, z)) <= a(x, z) + crate::lattice::EPSILON))
        });
        ScopeProfile { trivial, crisp, symmetric, transitive }
    }

    /// Diagnostic for the undefined "neighborhood-generated" hypothesis:
    /// compares the topological closure with the aura closure pointwise and
    /// reports where cl ≤ cl_a holds.
    pub fn closure_comparison(&self, mu: &FuzzySet) -> Result<Vec<(String, f64, f64, bool)>> {
        let topological = self.topology.closure(mu)?;
        let aural = self.aura_closure(mu)?;
        Ok(self
            .universe
            .points()
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let t = topological.grade(i);
                let a = aural.grade(i);
                (p.clone(), t, a, crate::lattice::grade_leq(t, a))
            })
            .collect())
    }
}
