//! The five generalized open-set classes mixing the classical interior
//! with the aura closure, and the hierarchy check between them.

use serde::Serialize;

use crate::aura::AuraSpace;
use crate::error::Result;
use crate::lattice::FuzzySet;

/// Which of the generalized openness inequalities a set satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OpennessProfile {
    /// μ ∈ τ (ambient topology member).
    pub open: bool,
    /// int_a(μ) = μ.
    pub a_open: bool,
    /// μ ≤ cl_a(int(μ)).
    pub semi: bool,
    /// μ ≤ int(cl_a(μ)).
    pub pre: bool,
    /// μ ≤ int(cl_a(int(μ))).
    pub alpha: bool,
    /// μ ≤ cl_a(int(cl_a(μ))).
    pub beta: bool,
    /// μ ≤ cl_a(int(μ)) ∨ int(cl_a(μ)).
    pub b: bool,
}

/// Result of checking the implication chain on a batch of samples.
#[derive(Debug, Clone)]
pub enum HierarchyVerdict {
    Ok,
    Violation { sample: usize, detail: String },
}

impl HierarchyVerdict {
    pub fn is_ok(&self) -> bool {
        matches!(self, HierarchyVerdict::Ok)
    }
}

/// Evaluates the five inequalities. `int` is the classical topological
/// interior of the space while `cl_a` is the aura closure; the mix is
/// deliberate.
pub fn openness_profile(space: &AuraSpace, mu: &FuzzySet) -> Result<OpennessProfile> {
    let top = space.topology();
    let int_mu = top.interior(mu)?;
    let cl_mu = space.aura_closure(mu)?;
    let cl_int = space.aura_closure(&int_mu)?;
    let int_cl = top.interior(&cl_mu)?;

    let semi = mu.leq(&cl_int)?;
    let pre = mu.leq(&int_cl)?;
    let alpha = mu.leq(&top.interior(&cl_int)?)?;
    let beta = mu.leq(&space.aura_closure(&int_cl)?)?;
    let b = mu.leq(&cl_int.join(&int_cl)?)?;

    let profile = OpennessProfile {
        open: top.contains_member(mu),
        a_open: space.is_a_open(mu)?,
        semi,
        pre,
        alpha,
        beta,
        b,
    };
    debug_assert!(chain_holds(&profile), "hierarchy violated: {profile:?}");
    Ok(profile)
}

fn chain_holds(p: &OpennessProfile) -> bool {
    (!p.open || p.alpha)
        && (!p.alpha || (p.semi && p.pre))
        && (!(p.semi || p.pre) || p.b)
        && (!p.b || p.beta)
}

/// Asserts the implication chain on each sample. A violation is a library
/// bug, never a property of the input.
pub fn hierarchy_check(space: &AuraSpace, samples: &[FuzzySet]) -> Result<HierarchyVerdict> {
    for (i, mu) in samples.iter().enumerate() {
        let p = openness_profile(space, mu)?;
        if !chain_holds(&p) {
            return Ok(HierarchyVerdict::Violation {
                sample: i,
                detail: format!("{p:?}"),
            });
        }
    }
    Ok(HierarchyVerdict::Ok)
}
