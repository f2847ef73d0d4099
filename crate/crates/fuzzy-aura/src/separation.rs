//! Separation axioms over the induced aura topology, with witnesses.

use serde::Serialize;

use crate::aura::AuraSpace;
use crate::error::{Error, Result};
use crate::lattice::{grade_eq, FuzzySet};
use crate::topology::FuzzyTopology;

/// Witness data for one separation flag: the separating sets when a flag
/// holds, or the first violating point pair when it fails.
#[derive(Debug, Clone, Serialize)]
pub enum Witness {
    Holds { detail: String },
    Fails { pair: (String, String) },
    Inapplicable,
}

#[derive(Debug, Clone, Serialize)]
pub struct SeparationProfile {
    pub t0: bool,
    pub t1: bool,
    pub t2: bool,
    pub regular: bool,
    pub t0_witness: Witness,
    pub t1_witness: Witness,
    pub t2_witness: Witness,
    pub regular_witness: Witness,
}

/// T1 by the matrix criterion: for every x ≠ y, ã(y)(x) = 0. This is the
/// exact finite test; the witness search over the aura topology is the
/// slow cross-check in `t1_fuzzy_point_check`.
fn t1_matrix(space: &AuraSpace) -> (bool, Witness) {
    let n = space.universe().size();
    let points = space.universe().points();
    for x in 0..n {
        for y in 0..n {
            if x != y && space.scope().grade(y, x) != 0.0 {
                return (
                    false,
                    Witness::Fails { pair: (points[x].clone(), points[y].clone()) },
                );
            }
        }
    }
    (true, Witness::Holds { detail: "scope matrix is zero off-diagonal".into() })
}

fn t0_search(space: &AuraSpace, pool: &FuzzyTopology) -> (bool, Witness) {
    let n = space.universe().size();
    let points = space.universe().points();
    for x in 0..n {
        for y in (x + 1)..n {
            let separated = pool
                .members()
                .iter()
                .any(|m| !grade_eq(m.grade(x), m.grade(y)));
            if !separated {
                return (
                    false,
                    Witness::Fails { pair: (points[x].clone(), points[y].clone()) },
                );
            }
        }
    }
    (true, Witness::Holds { detail: "every pair separated by an aura-open set".into() })
}

fn t2_search(space: &AuraSpace, pool: &FuzzyTopology) -> (bool, Witness) {
    let n = space.universe().size();
    let points = space.universe().points();
    for x in 0..n {
        for y in (x + 1)..n {
            let mut found = None;
            'outer: for (i, mu) in pool.members().iter().enumerate() {
                if mu.grade(x) != 1.0 {
                    continue;
                }
                for (j, nu) in pool.members().iter().enumerate() {
                    if nu.grade(y) != 1.0 {
                        continue;
                    }
                    if mu.meet(nu).map(|m| m.is_zero()).unwrap_or(false) {
                        found = Some((i, j));
                        break 'outer;
                    }
                }
            }
            if found.is_none() {
                return (
                    false,
                    Witness::Fails { pair: (points[x].clone(), points[y].clone()) },
                );
            }
        }
    }
    (true, Witness::Holds { detail: "disjoint unit-valued aura-open pairs exist".into() })
}

fn regular_search(space: &AuraSpace, pool: &FuzzyTopology) -> (bool, Witness) {
    let n = space.universe().size();
    let points = space.universe().points();
    for member in pool.members() {
        let gamma = member.complement();
        for x in 0..n {
            if gamma.grade(x) != 0.0 {
                continue;
            }
            let mut found = false;
            'outer: for mu in pool.members() {
                if mu.grade(x) != 1.0 {
                    continue;
                }
                for nu in pool.members() {
                    let dominates = gamma.leq(nu).unwrap_or(false);
                    if dominates && mu.meet(nu).map(|m| m.is_zero()).unwrap_or(false) {
                        found = true;
                        break 'outer;
                    }
                }
            }
            if !found {
                return (
                    false,
                    Witness::Fails { pair: (points[x].clone(), format!("closed {gamma}")) },
                );
            }
        }
    }
    (true, Witness::Holds { detail: "all point/closed-set pairs separated".into() })
}

/// Computes the four separation flags. Needs an explicit topology to
/// enumerate the aura topology; under the discrete marker only T1 is
/// decidable from the scope matrix alone.
pub fn separation_profile(space: &AuraSpace) -> Result<SeparationProfile> {
    let (t1, t1_witness) = t1_matrix(space);
    let pool = match space.aura_topology() {
        Ok(pool) => pool,
        Err(Error::DiscreteUnenumerable(_)) => {
            return Ok(SeparationProfile {
                t0: false,
                t1,
                t2: false,
                regular: false,
                t0_witness: Witness::Inapplicable,
                t1_witness,
                t2_witness: Witness::Inapplicable,
                regular_witness: Witness::Inapplicable,
            });
        }
        Err(e) => return Err(e),
    };
    let (t0, t0_witness) = t0_search(space, &pool);
    let (t2, t2_witness) = t2_search(space, &pool);
    let (regular, regular_witness) = regular_search(space, &pool);
    let profile = SeparationProfile {
        t0,
        t1,
        t2,
        regular,
        t0_witness,
        t1_witness,
        t2_witness,
        regular_witness,
    };
    debug_assert!(
        (!profile.t2 || profile.t1) && (!profile.t1 || profile.t0),
        "separation chain violated: {profile:?}"
    );
    Ok(profile)
}

/// Asserts that the matrix criterion for T1 and the fuzzy-point closure
/// characterization always agree.
pub fn t1_fuzzy_point_check(space: &AuraSpace) -> Result<bool> {
    let (matrix_t1, _) = t1_matrix(space);
    let n = space.universe().size();
    let mut points_closed = true;
    for i in 0..n {
        let chi = FuzzySet::point(space.universe().clone(), i);
        if !space.aura_closure(&chi)?.approx_eq(&chi) {
            points_closed = false;
            break;
        }
    }
    Ok(matrix_t1 == points_closed)
}

/// Reports (without asserting) whether pairwise-distinct scope rows track
/// the T0 flag; the reverse implication is not a law of the artifact.
pub fn t0_converse_report(space: &AuraSpace) -> Result<(bool, bool)> {
    let profile = separation_profile(space)?;
    let n = space.universe().size();
    let rows = space.scope().rows();
    let mut distinct = true;
    for x in 0..n {
        for y in (x + 1)..n {
            if rows[x].approx_eq(&rows[y]) {
                distinct = false;
            }
        }
    }
    Ok((profile.t0, distinct))
}
