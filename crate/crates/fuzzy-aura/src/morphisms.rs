//! Point maps between aura spaces, Zadeh preimages, and the continuity
//! predicates with their decomposition/composition laws.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::aura::AuraSpace;
use crate::error::{Error, Result};
use crate::lattice::{FuzzySet, Universe};
use crate::openness::openness_profile;

/// A total function between the points of two universes.
#[derive(Debug, Clone)]
pub struct PointMap {
    source: Arc<Universe>,
    target: Arc<Universe>,
    /// Target index for each source index.
    assignment: Vec<usize>,
}

impl PointMap {
    pub fn new(
        source: Arc<Universe>,
        target: Arc<Universe>,
        assignment: &BTreeMap<String, String>,
    ) -> Result<Self> {
        let mut indices = Vec::with_capacity(source.size());
        for p in source.points() {
            let image = assignment
                .get(p)
                .ok_or_else(|| Error::PartialMap(p.clone()))?;
            let j = target
                .index_of(image)
                .ok_or_else(|| Error::UnknownPoint(image.clone()))?;
            indices.push(j);
        }
        Ok(PointMap { source, target, assignment: indices })
    }

    pub fn identity(universe: Arc<Universe>) -> Self {
        let assignment = (0..universe.size()).collect();
        PointMap { source: universe.clone(), target: universe, assignment }
    }

    pub fn constant(source: Arc<Universe>, target: Arc<Universe>, image: usize) -> Self {
        let assignment = vec![image; source.size()];
        PointMap { source, target, assignment }
    }

    pub fn source(&self) -> &Arc<Universe> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Universe> {
        &self.target
    }

    pub fn image_index(&self, source_index: usize) -> usize {
        self.assignment[source_index]
    }

    /// f⁻¹(ν)(x) = ν(f(x)).
    pub fn preimage(&self, nu: &FuzzySet) -> Result<FuzzySet> {
        if nu.universe().points() != self.target.points() {
            return Err(Error::UniverseMismatch {
                expected: self.target.points().to_vec(),
                got: nu.universe().points().to_vec(),
            });
        }
        let grades = self.assignment.iter().map(|&j| nu.grade(j)).collect();
        FuzzySet::new(self.source.clone(), grades)
    }

    /// g ∘ f where `self` is applied first.
    pub fn compose(&self, g: &PointMap) -> Result<PointMap> {
        if self.target.points() != g.source.points() {
            return Err(Error::UniverseMismatch {
                expected: self.target.points().to_vec(),
                got: g.source.points().to_vec(),
            });
        }
        let assignment = self.assignment.iter().map(|&j| g.assignment[j]).collect();
        Ok(PointMap {
            source: self.source.clone(),
            target: g.target.clone(),
            assignment,
        })
    }
}

/// The five continuity flags of a map between aura spaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ContinuityProfile {
    /// Preimages of aura-open sets of the target are aura-open.
    pub a_continuous: bool,
    pub semi: bool,
    pub pre: bool,
    pub alpha: bool,
    pub beta: bool,
}

/// Verdict of a conditional law check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LawVerdict {
    Consistent,
    Inapplicable,
    Violation(String),
}

/// Evaluates the continuity flags. `a_continuous` quantifies over the
/// target's induced aura topology; the remaining flags quantify over the
/// target's ambient topology members.
pub fn continuity_profile(
    f: &PointMap,
    src: &AuraSpace,
    dst: &AuraSpace,
) -> Result<ContinuityProfile> {
    let dst_members = dst
        .topology()
        .explicit()
        .ok_or(Error::DiscreteUnenumerable(
            "continuity needs an explicit target topology",
        ))?
        .members();

    let mut a_continuous = true;
    for nu in dst.aura_topology()?.members() {
        if !src.is_a_open(&f.preimage(nu)?)? {
            a_continuous = false;
            break;
        }
    }

    let mut semi = true;
    let mut pre = true;
    let mut alpha = true;
    let mut beta = true;
    for nu in dst_members {
        let p = openness_profile(src, &f.preimage(nu)?)?;
        semi &= p.semi;
        pre &= p.pre;
        alpha &= p.alpha;
        beta &= p.beta;
    }
    Ok(ContinuityProfile { a_continuous, semi, pre, alpha, beta })
}

/// Under a transitive source scope, alpha-continuity must coincide with
/// semi- and pre-continuity together.
pub fn decomposition_check(f: &PointMap, src: &AuraSpace, dst: &AuraSpace) -> Result<LawVerdict> {
    if !src.classify_scope().transitive {
        return Ok(LawVerdict::Inapplicable);
    }
    let p = continuity_profile(f, src, dst)?;
    if p.alpha == (p.semi && p.pre) {
        Ok(LawVerdict::Consistent)
    } else {
        Ok(LawVerdict::Violation(format!(
            "alpha={} semi={} pre={}",
            p.alpha, p.semi, p.pre
        )))
    }
}

/// Composition laws: aura-continuity composes, and semi-continuity followed
/// by plain continuity stays semi-continuous.
pub fn composition_check(
    f: &PointMap,
    g: &PointMap,
    first: &AuraSpace,
    middle: &AuraSpace,
    last: &AuraSpace,
) -> Result<LawVerdict> {
    let fg = f.compose(g)?;
    let pf = continuity_profile(f, first, middle)?;
    let pg = continuity_profile(g, middle, last)?;
    let pfg = continuity_profile(&fg, first, last)?;
    if pf.a_continuous && pg.a_continuous && !pfg.a_continuous {
        return Ok(LawVerdict::Violation(
            "composition of a-continuous maps is not a-continuous".into(),
        ));
    }
    // g plainly continuous: preimages of open sets are open
    let g_plain = {
        let last_members = last
            .topology()
            .explicit()
            .ok_or(Error::DiscreteUnenumerable("composition check"))?
            .members();
        let mut ok = true;
        for nu in last_members {
            if !middle.topology().contains_member(&g.preimage(nu)?) {
                ok = false;
                break;
            }
        }
        ok
    };
    if pf.semi && g_plain && !pfg.semi {
        return Ok(LawVerdict::Violation(
            "semi-continuous then continuous is not semi-continuous".into(),
        ));
    }
    Ok(LawVerdict::Consistent)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aura::{ScopeFunction, ValidationMode};
    use crate::topology::{FuzzyTopology, Topology};

    fn fs(u: &Arc<Universe>, g: &[f64]) -> FuzzySet {
        FuzzySet::new(u.clone(), g.to_vec()).unwrap()
    }

    fn small_space() -> AuraSpace {
        let u = Universe::new(["p", "q"]).unwrap();
        let top = FuzzyTopology::generate(&[fs(&u, &[0.3, 0.8])]).unwrap();
        AuraSpace::new(
            Topology::Explicit(top),
            ScopeFunction::identity(u),
            ValidationMode::Lenient,
        )
        .unwrap()
    }

    #[test]
    fn preimage_examples() {
        let u = Universe::new(["p", "q"]).unwrap();
        let v = Universe::new(["u", "v"]).unwrap();
        let id = PointMap::identity(u.clone());
        let mu = fs(&u, &[0.4, 0.9]);
        assert!(id.preimage(&mu).unwrap().approx_eq(&mu));

        let c = PointMap::constant(u.clone(), v.clone(), 1);
        let nu = fs(&v, &[0.3, 0.9]);
        assert!(c.preimage(&nu).unwrap().approx_eq(&fs(&u, &[0.9, 0.9])));

        let f = PointMap::new(
            u.clone(),
            v.clone(),
            &BTreeMap::from([
                ("p".to_string(), "v".to_string()),
                ("q".to_string(), "v".to_string()),
            ]),
        )
        .unwrap();
        assert!(f.preimage(&nu).unwrap().approx_eq(&fs(&u, &[0.9, 0.9])));
    }

    #[test]
    fn preimage_commutes_with_lattice_ops() {
        let u = Universe::new(["p", "q", "r"]).unwrap();
        let v = Universe::new(["u", "v"]).unwrap();
        let f = PointMap::new(
            u,
            v.clone(),
            &BTreeMap::from([
                ("p".to_string(), "u".to_string()),
                ("q".to_string(), "v".to_string()),
                ("r".to_string(), "u".to_string()),
            ]),
        )
        .unwrap();
        let a = fs(&v, &[0.4, 0.7]);
        let b = fs(&v, &[0.6, 0.2]);
        assert!(f
            .preimage(&a.meet(&b).unwrap())
            .unwrap()
            .approx_eq(&f.preimage(&a).unwrap().meet(&f.preimage(&b).unwrap()).unwrap()));
        assert!(f
            .preimage(&a.join(&b).unwrap())
            .unwrap()
            .approx_eq(&f.preimage(&a).unwrap().join(&f.preimage(&b).unwrap()).unwrap()));
        assert!(f
            .preimage(&a.complement())
            .unwrap()
            .approx_eq(&f.preimage(&a).unwrap().complement()));
    }

    #[test]
    fn identity_is_a_continuous() {
        let space = small_space();
        let f = PointMap::identity(space.universe().clone());
        let p = continuity_profile(&f, &space, &space).unwrap();
        assert!(p.a_continuous && p.alpha && p.semi && p.pre && p.beta);
    }

    #[test]
    fn constant_map_flags_are_computed() {
        let space = small_space();
        let f = PointMap::constant(space.universe().clone(), space.universe().clone(), 0);
        let p = continuity_profile(&f, &space, &space).unwrap();
        // preimages are constants; with identity scope the interior is the
        // classical one, and constants other than 0,1 are not open here
        assert!(p.a_continuous);
    }

    #[test]
    fn decomposition_applicable_only_for_transitive_source() {
        let space = small_space();
        let f = PointMap::identity(space.universe().clone());
        assert_eq!(
            decomposition_check(&f, &space, &space).unwrap(),
            LawVerdict::Consistent
        );

        // non-transitive source scope
        let u = Universe::new(["p", "q", "r"]).unwrap();
        let top = FuzzyTopology::generate(&[fs(&u, &[0.3, 0.8, 0.1])]).unwrap();
        let scope = ScopeFunction::from_matrix(
            u.clone(),
            vec![
                vec![1.0, 0.8, 0.0],
                vec![0.0, 1.0, 0.7],
                vec![0.0, 0.0, 1.0],
            ],
        )
        .unwrap();
        let nt = AuraSpace::new(Topology::Explicit(top), scope, ValidationMode::Lenient).unwrap();
        let g = PointMap::identity(u);
        assert_eq!(
            decomposition_check(&g, &nt, &nt).unwrap(),
            LawVerdict::Inapplicable
        );
    }

    #[test]
    fn composition_of_identities() {
        let space = small_space();
        let f = PointMap::identity(space.universe().clone());
        assert_eq!(
            composition_check(&f, &f, &space, &space, &space).unwrap(),
            LawVerdict::Consistent
        );
    }

    #[test]
    fn semicontinuity_agrees_with_closed_preimage_characterization() {
        let space = small_space();
        let f = PointMap::identity(space.universe().clone());
        let members = space.topology().explicit().unwrap().members().to_vec();
        let p = continuity_profile(&f, &space, &space).unwrap();
        // semi-closed preimage of every closed set: ν^c closed for ν open,
        // and γ is a-semi-closed iff γ^c is a-semi-open
        let dual = members.iter().try_fold(true, |acc, nu| {
            let gamma = nu.complement();
            let pre = f.preimage(&gamma)?;
            openness_profile(&space, &pre.complement()).map(|pr| acc && pr.semi)
        });
        assert_eq!(p.semi, dual.unwrap());
    }
}
