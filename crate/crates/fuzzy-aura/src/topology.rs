//! Chang fuzzy topologies as explicit finite families, plus the classical
//! interior/closure operators and a subbasis-generation helper.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lattice::{FuzzySet, Universe};

/// Cap on new members produced while closing a subbasis.
pub const GENERATION_CAP: usize = 10_000;

/// An explicit finite family closed under pairwise meet and join,
/// containing 0̄ and 1̄.
#[derive(Debug, Clone)]
pub struct FuzzyTopology {
    universe: Arc<Universe>,
    members: Vec<FuzzySet>,
}

/// A topology over a universe: either an explicit family or the discrete
/// marker standing for all fuzzy sets without enumerating them.
#[derive(Debug, Clone)]
pub enum Topology {
    Explicit(FuzzyTopology),
    Discrete(Arc<Universe>),
}

/// Outcome of axiom verification.
#[derive(Debug, Clone)]
pub enum Verdict {
    Ok,
    Violation(String),
}

impl Verdict {
    pub fn is_ok(&self) -> bool {
        matches!(self, Verdict::Ok)
    }
}

fn contains(members: &[FuzzySet], candidate: &FuzzySet) -> bool {
    members.iter().any(|m| m.approx_eq(candidate))
}

/// Checks (FT1)-(FT3) on a finite family. Reports the first violation in
/// member-index order so messages are reproducible.
pub fn verify_axioms(family: &[FuzzySet]) -> Result<Verdict> {
    let first = family.first().ok_or(Error::EmptyFamily)?;
    let universe = first.universe().clone();
    for m in family {
        first.same_universe(m)?;
    }
    let zero = FuzzySet::zero(universe.clone());
    let one = FuzzySet::one(universe);
    if !contains(family, &zero) {
        return Ok(Verdict::Violation("0̄ is not a member".into()));
    }
    if !contains(family, &one) {
        return Ok(Verdict::Violation("1̄ is not a member".into()));
    }
    for i in 0..family.len() {
        for j in (i + 1)..family.len() {
            let meet = family[i].meet(&family[j])?;
            if !contains(family, &meet) {
                return Ok(Verdict::Violation(format!(
                    "meet of members {i} and {j} is missing: {meet}"
                )));
            }
            let join = family[i].join(&family[j])?;
            if !contains(family, &join) {
                return Ok(Verdict::Violation(format!(
                    "join of members {i} and {j} is missing: {join}"
                )));
            }
        }
    }
    Ok(Verdict::Ok)
}

impl FuzzyTopology {
    /// Wraps a family after verifying the axioms.
    pub fn new(members: Vec<FuzzySet>) -> Result<Self> {
        match verify_axioms(&members)? {
            Verdict::Ok => {}
            Verdict::Violation(msg) => return Err(Error::TopologyViolation(msg)),
        }
        let universe = members[0].universe().clone();
        let mut dedup: Vec<FuzzySet> = Vec::new();
        for m in members {
            if !contains(&dedup, &m) {
                dedup.push(m);
            }
        }
        Ok(FuzzyTopology { universe, members: dedup })
    }

    /// Smallest family containing the subbasis and {0̄, 1̄}, closed under
    /// pairwise meet and join. Fixpoint iteration; errors past the cap.
    pub fn generate(subbasis: &[FuzzySet]) -> Result<Self> {
        let first = subbasis.first().ok_or(Error::EmptyFamily)?;
        let universe = first.universe().clone();
        let mut members = vec![FuzzySet::zero(universe.clone()), FuzzySet::one(universe.clone())];
        for s in subbasis {
            first.same_universe(s)?;
            if !contains(&members, s) {
                members.push(s.clone());
            }
        }
        loop {
            let mut fresh: Vec<FuzzySet> = Vec::new();
            for i in 0..members.len() {
                for j in (i + 1)..members.len() {
                    for c in [members[i].meet(&members[j])?, members[i].join(&members[j])?] {
                        if !contains(&members, &c) && !contains(&fresh, &c) {
                            fresh.push(c);
                        }
                    }
                }
            }
            if fresh.is_empty() {
                break;
            }
            members.extend(fresh);
            if members.len() > GENERATION_CAP {
                return Err(Error::GenerationOverflow(GENERATION_CAP));
            }
        }
        Ok(FuzzyTopology { universe, members })
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn members(&self) -> &[FuzzySet] {
        &self.members
    }

    pub fn contains_member(&self, candidate: &FuzzySet) -> bool {
        contains(&self.members, candidate)
    }

    /// int(μ) = join of all members below μ.
    pub fn interior(&self, mu: &FuzzySet) -> Result<FuzzySet> {
        let mut acc = FuzzySet::zero(self.universe.clone());
        acc.same_universe(mu)?;
        for m in &self.members {
            if m.leq(mu)? {
                acc = acc.join(m)?;
            }
        }
        Ok(acc)
    }

    /// cl(μ) = meet of all closed sets (complements of members) above μ.
    pub fn closure(&self, mu: &FuzzySet) -> Result<FuzzySet> {
        let mut acc = FuzzySet::one(self.universe.clone());
        acc.same_universe(mu)?;
        for m in &self.members {
            let closed = m.complement();
            if mu.leq(&closed)? {
                acc = acc.meet(&closed)?;
            }
        }
        Ok(acc)
    }
}

impl Topology {
    pub fn universe(&self) -> &Arc<Universe> {
        match self {
            Topology::Explicit(t) => t.universe(),
            Topology::Discrete(u) => u,
        }
    }

    /// Classical interior; identity under the discrete marker.
    pub fn interior(&self, mu: &FuzzySet) -> Result<FuzzySet> {
        match self {
            Topology::Explicit(t) => t.interior(mu),
            Topology::Discrete(_) => Ok(mu.clone()),
        }
    }

    /// Classical closure; identity under the discrete marker.
    pub fn closure(&self, mu: &FuzzySet) -> Result<FuzzySet> {
        match self {
            Topology::Explicit(t) => t.closure(mu),
            Topology::Discrete(_) => Ok(mu.clone()),
        }
    }

    pub fn explicit(&self) -> Option<&FuzzyTopology> {
        match self {
            Topology::Explicit(t) => Some(t),
            Topology::Discrete(_) => None,
        }
    }

    /// Membership of μ in the topology. Always true for the discrete marker.
    pub fn contains_member(&self, mu: &FuzzySet) -> bool {
        match self {
            Topology::Explicit(t) => t.contains_member(mu),
            Topology::Discrete(_) => true,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Universe;

    fn fs(u: &Arc<Universe>, g: &[f64]) -> FuzzySet {
        FuzzySet::new(u.clone(), g.to_vec()).unwrap()
    }

    // Topology of the four-point hierarchy example.
    fn ex43() -> FuzzyTopology {
        let u = Universe::new(["p", "q", "r", "s"]).unwrap();
        let l1 = fs(&u, &[0.8, 0.0, 0.5, 0.0]);
        let l2 = fs(&u, &[0.0, 0.7, 0.0, 0.6]);
        FuzzyTopology::generate(&[l1, l2]).unwrap()
    }

    #[test]
    fn ex43_family_is_valid() {
        let t = ex43();
        // 0̄, 1̄, λ1, λ2, λ1∨λ2; λ1∧λ2 = 0̄ already present
        assert_eq!(t.members().len(), 5);
        assert!(verify_axioms(t.members()).unwrap().is_ok());
    }

    #[test]
    fn ex33_family_not_meet_closed() {
        let u = Universe::new(["p", "q", "r"]).unwrap();
        let family = vec![
            FuzzySet::zero(u.clone()),
            FuzzySet::one(u.clone()),
            fs(&u, &[1.0, 0.4, 0.0]),
            fs(&u, &[0.6, 1.0, 0.3]),
            fs(&u, &[1.0, 1.0, 0.3]),
        ];
        match verify_axioms(&family).unwrap() {
            Verdict::Violation(msg) => {
                assert!(msg.contains("meet"), "{msg}");
                assert!(msg.contains("0.6, 0.4, 0"), "{msg}");
            }
            Verdict::Ok => panic!("family should fail meet closure"),
        }
    }

    #[test]
    fn indiscrete_is_valid() {
        let u = Universe::new(["p", "q", "r"]).unwrap();
        let family = vec![FuzzySet::zero(u.clone()), FuzzySet::one(u)];
        assert!(verify_axioms(&family).unwrap().is_ok());
    }

    #[test]
    fn generate_repairs_ex33() {
        let u = Universe::new(["p", "q", "r"]).unwrap();
        let l1 = fs(&u, &[1.0, 0.4, 0.0]);
        let l2 = fs(&u, &[0.6, 1.0, 0.3]);
        let t = FuzzyTopology::generate(&[l1, l2]).unwrap();
        assert_eq!(t.members().len(), 6);
        assert!(t.contains_member(&fs(&u, &[0.6, 0.4, 0.0])));
        assert!(t.contains_member(&fs(&u, &[1.0, 1.0, 0.3])));
        assert!(verify_axioms(t.members()).unwrap().is_ok());
    }

    #[test]
    fn generate_trivial_cases() {
        let u = Universe::new(["p", "q"]).unwrap();
        assert!(FuzzyTopology::generate(&[]).is_err());
        let t = FuzzyTopology::generate(&[FuzzySet::one(u.clone())]).unwrap();
        assert_eq!(t.members().len(), 2);
        // idempotency on an already-closed family
        let again = FuzzyTopology::generate(t.members()).unwrap();
        assert_eq!(again.members().len(), t.members().len());
        let _ = u;
    }

    #[test]
    fn interior_examples() {
        let t = ex43();
        let u = t.universe().clone();
        let mu = fs(&u, &[0.7, 0.5, 0.0, 0.0]);
        assert!(t.interior(&mu).unwrap().is_zero());
        assert!(t.interior(&FuzzySet::one(u.clone())).unwrap().is_one());
        let cl = fs(&u, &[0.7, 0.5, 0.3, 0.4]);
        assert!(t.interior(&cl).unwrap().is_zero());
    }

    #[test]
    fn closure_examples_and_duality() {
        let t = ex43();
        let u = t.universe().clone();
        assert!(t.closure(&FuzzySet::zero(u.clone())).unwrap().is_zero());

        let indiscrete = FuzzyTopology::new(vec![
            FuzzySet::zero(u.clone()),
            FuzzySet::one(u.clone()),
        ])
        .unwrap();
        let mu = fs(&u, &[0.2, 0.0, 0.0, 0.0]);
        assert!(indiscrete.closure(&mu).unwrap().is_one());

        // duality on a handful of sets
        for g in [[0.7, 0.5, 0.0, 0.0], [0.1, 0.9, 0.3, 0.4], [0.8, 0.0, 0.5, 0.0]] {
            let mu = fs(&u, &g);
            let lhs = t.closure(&mu).unwrap();
            let rhs = t.interior(&mu.complement()).unwrap().complement();
            assert!(lhs.approx_eq(&rhs));
        }
    }

    #[test]
    fn interior_closure_sandwich_and_membership() {
        let t = ex43();
        let u = t.universe().clone();
        for g in [[0.9, 0.1, 0.6, 0.2], [0.0, 0.7, 0.0, 0.6], [0.5, 0.5, 0.5, 0.5]] {
            let mu = fs(&u, &g);
            let int = t.interior(&mu).unwrap();
            let cl = t.closure(&mu).unwrap();
            assert!(int.leq(&mu).unwrap());
            assert!(mu.leq(&cl).unwrap());
            assert!(t.contains_member(&int));
            assert!(t.contains_member(&cl.complement()));
            // idempotency
            assert!(t.interior(&int).unwrap().approx_eq(&int));
            assert!(t.closure(&cl).unwrap().approx_eq(&cl));
        }
    }

    #[test]
    fn discrete_marker_is_identity() {
        let u = Universe::new(["p", "q", "r"]).unwrap();
        let t = Topology::Discrete(u.clone());
        let mu = fs(&u, &[0.3, 0.6, 0.1]);
        assert!(t.interior(&mu).unwrap().approx_eq(&mu));
        assert!(t.closure(&mu).unwrap().approx_eq(&mu));
        assert!(t.contains_member(&mu));
    }
}
