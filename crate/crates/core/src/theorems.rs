//! Both sides of the characterization theorems as predicates, and their
//! exhaustive verification.
//!
//! Throughout, `T = Inv(n, F)` is the total order on `0..n` with the arcs
//! of the family `F` reversed.
//!
//! | id | families | left side | right side | holds for |
//! |----|----------|-----------|------------|-----------|
//! | Theorem 1 | partial pairings `P` | `T` indecomposable | `P` irreducible and `∪P` meets every member of `mc(n)` | `n >= 5` |
//! | Theorem 2 | partial quasi-pairings `Q` | `Q` irreducible and `∪Q` meets `mc(n)` | one of `T`, `T - v-`, `T - v+` indecomposable | `n >= 6`; right implies left at `n = 5` |
//! | Theorem 3 | partial quasi-pairings `Q` | `T` indecomposable | conditions C1 to C4 | `n >= 5` |
//! | Corollary 1 | pairings of `0..n` | `P` irreducible | `T` indecomposable | even `n >= 6` |
//! | Corollary 2 | quasi-pairings of `0..n` | `Q` irreducible | one of `T`, `T - v-`, `T - v+` indecomposable | odd `n >= 7` |
//! | Corollary 3 | quasi-pairings of `0..n` | `T` indecomposable | the four full-support conditions | odd `n >= 5` |
//!
//! Instances below the size threshold are still evaluated but tagged as
//! outside the hypothesis; they never count as violations.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::comodules::{is_transversal, mc_total_order, ComoduleFamily};
use crate::enumeration::{EnumKind, EnumSpec, UnknownName};
use crate::pairings::{PairFamily, Pairing, QuasiPairing};
use crate::tournament::Tournament;
use crate::{Error, Result, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    Theorem1,
    Theorem2,
    Theorem3,
    Corollary1,
    Corollary2,
    Corollary3,
}

impl TheoremId {
    pub const ALL: [TheoremId; 6] = [
        TheoremId::Theorem1,
        TheoremId::Theorem2,
        TheoremId::Theorem3,
        TheoremId::Corollary1,
        TheoremId::Corollary2,
        TheoremId::Corollary3,
    ];

    /// The families the statement quantifies over.
    pub fn kind(self) -> EnumKind {
        match self {
            TheoremId::Theorem1 => EnumKind::PartialPairing,
            TheoremId::Theorem2 | TheoremId::Theorem3 => EnumKind::PartialQuasi,
            TheoremId::Corollary1 => EnumKind::Pairing,
            TheoremId::Corollary2 | TheoremId::Corollary3 => EnumKind::Quasi,
        }
    }

    /// Smallest `n` at which the equivalence is claimed.
    pub fn min_n(self) -> usize {
        match self {
            TheoremId::Theorem1 | TheoremId::Theorem3 | TheoremId::Corollary3 => 5,
            TheoremId::Theorem2 | TheoremId::Corollary1 => 6,
            TheoremId::Corollary2 => 7,
        }
    }

    pub fn scope(self, n: usize) -> Scope {
        if n >= self.min_n() {
            Scope::Equivalence
        } else if self == TheoremId::Theorem2 && n == 5 {
            Scope::RightImpliesLeft
        } else {
            Scope::Outside
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::Theorem1 => "theorem1",
            TheoremId::Theorem2 => "theorem2",
            TheoremId::Theorem3 => "theorem3",
            TheoremId::Corollary1 => "corollary1",
            TheoremId::Corollary2 => "corollary2",
            TheoremId::Corollary3 => "corollary3",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = UnknownName;

    fn from_str(s: &str) -> core::result::Result<Self, UnknownName> {
        TheoremId::ALL.into_iter().find(|t| t.name() == s).ok_or(UnknownName)
    }
}

/// What a statement claims at a given size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Scope {
    Equivalence,
    /// Only the right side implies the left side.
    RightImpliesLeft,
    /// Below the size threshold; nothing is claimed.
    Outside,
}

/// How an evaluated instance bears on its statement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Outcome {
    Consistent,
    Violation,
    /// Not a violation, but worth keeping: a mismatch outside the claimed
    /// scope.
    Recorded,
}

/// One evaluated instance of a statement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremInstance {
    pub theorem: TheoremId,
    pub n: usize,
    pub family: PairFamily,
    pub lhs: bool,
    pub rhs: bool,
    /// Named component booleans, in a fixed order per statement.
    pub details: Vec<(&'static str, bool)>,
    pub scope: Scope,
}

impl TheoremInstance {
    pub fn detail(&self, name: &str) -> Option<bool> {
        self.details.iter().find(|(k, _)| *k == name).map(|&(_, v)| v)
    }

    pub fn outcome(&self) -> Outcome {
        // corollary 1 also re-asserts that a full support is a transversal
        let extra_ok = self.detail("transversal").unwrap_or(true) || self.theorem != TheoremId::Corollary1;
        match self.scope {
            Scope::Equivalence if self.lhs == self.rhs && extra_ok => Outcome::Consistent,
            Scope::Equivalence => Outcome::Violation,
            Scope::RightImpliesLeft if self.rhs && !self.lhs => Outcome::Violation,
            Scope::RightImpliesLeft if self.lhs && !self.rhs => Outcome::Recorded,
            Scope::RightImpliesLeft => Outcome::Consistent,
            Scope::Outside if self.lhs != self.rhs => Outcome::Recorded,
            Scope::Outside => Outcome::Consistent,
        }
    }
}

/// `mc` of the total order on `0..n`; empty below 3, where the order has
/// no co-module.
fn mc_of_order(n: usize) -> ComoduleFamily {
    if n >= 3 {
        mc_total_order(n).expect("n >= 3")
    } else {
        ComoduleFamily::default()
    }
}

fn check_ambient(n: usize, f: &PairFamily) -> Result<()> {
    if f.ambient() != n {
        return Err(Error::AmbientMismatch { expected: n, found: f.ambient() });
    }
    Ok(())
}

fn inv(n: usize, f: &PairFamily) -> Result<Tournament> {
    Tournament::try_transitive(n)?.reverse_pairs(f)
}

fn transversal(n: usize, support: VertexSet) -> bool {
    is_transversal(support, &mc_of_order(n))
}

/// Theorem 1 for a partial pairing of `0..n`.
pub fn theorem1_sides(n: usize, p: &Pairing) -> Result<TheoremInstance> {
    check_ambient(n, p.family())?;
    let lhs = inv(n, p.family())?.is_indecomposable();
    let irreducible = p.is_irreducible();
    let transversal = transversal(n, p.family().support());
    Ok(TheoremInstance {
        theorem: TheoremId::Theorem1,
        n,
        family: p.family().clone(),
        lhs,
        rhs: irreducible && transversal,
        details: alloc::vec![("irreducible", irreducible), ("transversal", transversal)],
        scope: TheoremId::Theorem1.scope(n),
    })
}

/// Indecomposability of `T`, `T - v-` and `T - v+`.
fn deletion_triple(n: usize, q: &QuasiPairing) -> Result<[bool; 3]> {
    let t = inv(n, q.family())?;
    Ok([
        t.is_indecomposable(),
        t.delete_vertex(q.v_minus())?.is_indecomposable(),
        t.delete_vertex(q.v_plus())?.is_indecomposable(),
    ])
}

/// Theorem 2 for a partial quasi-pairing of `0..n`.
pub fn theorem2_sides(n: usize, q: &QuasiPairing) -> Result<TheoremInstance> {
    check_ambient(n, q.family())?;
    let irreducible = q.is_irreducible();
    let transversal = transversal(n, q.family().support());
    let [t, t_minus, t_plus] = deletion_triple(n, q)?;
    Ok(TheoremInstance {
        theorem: TheoremId::Theorem2,
        n,
        family: q.family().clone(),
        lhs: irreducible && transversal,
        rhs: t || t_minus || t_plus,
        details: alloc::vec![
            ("irreducible", irreducible),
            ("transversal", transversal),
            ("t", t),
            ("t_minus_v_minus", t_minus),
            ("t_minus_v_plus", t_plus),
        ],
        scope: TheoremId::Theorem2.scope(n),
    })
}

/// The four conditions of Theorem 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Theorem3Conditions {
    /// `Q` is an irreducible quasi-pairing of a transversal of `mc(n)`.
    pub c1: bool,
    /// `v+ >= v- + 2`.
    pub c2: bool,
    /// If `{v, v+2}` and `{v+1, v+3}` are in `Q`, then `v_hat` is `v` or `v+3`.
    pub c3: bool,
    /// If `{v, v+1}` is in `Q`, then `v_hat` is `v` or `v+1`, and both
    /// `v_hat - 1` and `v_hat + 1` lie in `∪Q`.
    pub c4: bool,
}

impl Theorem3Conditions {
    pub fn all(&self) -> bool {
        self.c1 && self.c2 && self.c3 && self.c4
    }
}

/// Whether `{v, v+2}, {v+1, v+3} ⊆ Q` forces `v_hat ∈ {v, v+3}` for every `v`.
fn crossing_condition(n: usize, q: &QuasiPairing) -> bool {
    let f = q.family();
    (0..n.saturating_sub(3))
        .filter(|&v| f.contains(v, v + 2) && f.contains(v + 1, v + 3))
        .all(|v| q.v_hat() == v || q.v_hat() == v + 3)
}

fn adjacent_pairs(n: usize, q: &QuasiPairing) -> impl Iterator<Item = usize> + '_ {
    (0..n.saturating_sub(1)).filter(move |&v| q.family().contains(v, v + 1))
}

pub fn theorem3_conditions(n: usize, q: &QuasiPairing) -> Result<Theorem3Conditions> {
    check_ambient(n, q.family())?;
    let support = q.family().support();
    let v_hat = q.v_hat();
    let c1 = q.is_irreducible() && transversal(n, support);
    let c2 = q.v_plus() >= q.v_minus() + 2;
    let c3 = crossing_condition(n, q);
    let c4 = adjacent_pairs(n, q).all(|v| {
        (v_hat == v || v_hat == v + 1)
            && v_hat >= 1
            && support.contains(v_hat - 1)
            && support.contains(v_hat + 1)
    });
    debug_assert!(!c4 || adjacent_pairs(n, q).next().is_none() || (v_hat != 0 && v_hat != n - 1));
    Ok(Theorem3Conditions { c1, c2, c3, c4 })
}

/// Theorem 3: `T` is indecomposable exactly when C1 to C4 hold.
pub fn theorem3_check(n: usize, q: &QuasiPairing) -> Result<TheoremInstance> {
    let c = theorem3_conditions(n, q)?;
    let lhs = inv(n, q.family())?.is_indecomposable();
    Ok(TheoremInstance {
        theorem: TheoremId::Theorem3,
        n,
        family: q.family().clone(),
        lhs,
        rhs: c.all(),
        details: alloc::vec![("c1", c.c1), ("c2", c.c2), ("c3", c.c3), ("c4", c.c4)],
        scope: TheoremId::Theorem3.scope(n),
    })
}

fn full_support(n: usize, f: &PairFamily) -> Result<()> {
    if f.support() != VertexSet::full(n) {
        let missing = (VertexSet::full(n) - f.support()).min().unwrap_or(0);
        return Err(Error::NotInSupport(missing));
    }
    Ok(())
}

/// Corollary 1 for a pairing of all of `0..n`.
pub fn corollary1_sides(n: usize, p: &Pairing) -> Result<TheoremInstance> {
    check_ambient(n, p.family())?;
    full_support(n, p.family())?;
    let irreducible = p.is_irreducible();
    let indecomposable = inv(n, p.family())?.is_indecomposable();
    let transversal = transversal(n, p.family().support());
    Ok(TheoremInstance {
        theorem: TheoremId::Corollary1,
        n,
        family: p.family().clone(),
        lhs: irreducible,
        rhs: indecomposable,
        details: alloc::vec![("transversal", transversal)],
        scope: TheoremId::Corollary1.scope(n),
    })
}

/// Corollary 2 for a quasi-pairing of all of `0..n`.
pub fn corollary2_sides(n: usize, q: &QuasiPairing) -> Result<TheoremInstance> {
    check_ambient(n, q.family())?;
    full_support(n, q.family())?;
    let irreducible = q.is_irreducible();
    let [t, t_minus, t_plus] = deletion_triple(n, q)?;
    Ok(TheoremInstance {
        theorem: TheoremId::Corollary2,
        n,
        family: q.family().clone(),
        lhs: irreducible,
        rhs: t || t_minus || t_plus,
        details: alloc::vec![("t", t), ("t_minus_v_minus", t_minus), ("t_minus_v_plus", t_plus)],
        scope: TheoremId::Corollary2.scope(n),
    })
}

/// Corollary 3 for a quasi-pairing of all of `0..n`. Its fourth condition
/// reads "if `{v, v+1}` is in `Q`, then `v_hat ∈ {v, v+1} \ {0, n-1}`".
pub fn corollary3_sides(n: usize, q: &QuasiPairing) -> Result<TheoremInstance> {
    check_ambient(n, q.family())?;
    full_support(n, q.family())?;
    let v_hat = q.v_hat();
    let irreducible = q.is_irreducible();
    let spread = q.v_plus() >= q.v_minus() + 2;
    let crossing = crossing_condition(n, q);
    let adjacent = adjacent_pairs(n, q)
        .all(|v| (v_hat == v || v_hat == v + 1) && v_hat != 0 && v_hat != n - 1);
    let lhs = inv(n, q.family())?.is_indecomposable();
    Ok(TheoremInstance {
        theorem: TheoremId::Corollary3,
        n,
        family: q.family().clone(),
        lhs,
        rhs: irreducible && spread && crossing && adjacent,
        details: alloc::vec![
            ("irreducible", irreducible),
            ("c2", spread),
            ("c3", crossing),
            ("c4", adjacent)
        ],
        scope: TheoremId::Corollary3.scope(n),
    })
}

/// Evaluates `theorem` on one family of the right kind.
pub fn check_instance(theorem: TheoremId, n: usize, family: &PairFamily) -> Result<TheoremInstance> {
    match theorem {
        TheoremId::Theorem1 => theorem1_sides(n, &Pairing::try_from(family.clone())?),
        TheoremId::Theorem2 => theorem2_sides(n, &QuasiPairing::try_from(family.clone())?),
        TheoremId::Theorem3 => theorem3_check(n, &QuasiPairing::try_from(family.clone())?),
        TheoremId::Corollary1 => corollary1_sides(n, &Pairing::try_from(family.clone())?),
        TheoremId::Corollary2 => corollary2_sides(n, &QuasiPairing::try_from(family.clone())?),
        TheoremId::Corollary3 => corollary3_sides(n, &QuasiPairing::try_from(family.clone())?),
    }
}

/// Result of checking a statement over a range of sizes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub theorem: TheoremId,
    pub n_range: (usize, usize),
    pub checked: usize,
    pub violations: Vec<TheoremInstance>,
    pub recorded: Vec<TheoremInstance>,
    /// Wall time, filled in by callers that measure it.
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn new(theorem: TheoremId, n_range: (usize, usize)) -> Self {
        VerificationReport {
            theorem,
            n_range,
            checked: 0,
            violations: Vec::new(),
            recorded: Vec::new(),
            elapsed_ms: 0,
        }
    }

    pub fn add(&mut self, instance: TheoremInstance) {
        self.checked += 1;
        match instance.outcome() {
            Outcome::Consistent => {}
            Outcome::Violation => self.violations.push(instance),
            Outcome::Recorded => self.recorded.push(instance),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// The enumeration covering `theorem` at size `n`. An empty family is
/// never an instance.
pub fn instance_spec(theorem: TheoremId, n: usize, max_n: Option<usize>) -> EnumSpec {
    let spec = EnumSpec::new(n, theorem.kind());
    match max_n {
        Some(m) => spec.max_n(m),
        None => spec,
    }
}

/// Checks `theorem` on every enumerated instance with `n` in
/// `n_min..=n_max`, in enumeration order.
pub fn verify_range(theorem: TheoremId, n_min: usize, n_max: usize) -> Result<VerificationReport> {
    verify_range_with(theorem, n_min, n_max, None)
}

/// [`verify_range`] with the enumeration guard overridden.
pub fn verify_range_with(
    theorem: TheoremId,
    n_min: usize,
    n_max: usize,
    max_n: Option<usize>,
) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(theorem, (n_min, n_max));
    for n in n_min..=n_max {
        instance_spec(theorem, n, max_n).check()?;
    }
    for n in n_min..=n_max {
        for family in instance_spec(theorem, n, max_n).families()? {
            report.add(check_instance(theorem, n, &family)?);
        }
    }
    Ok(report)
}

/// One report per corollary whose family kind exists at size `n`.
pub fn corollary_checks(n: usize) -> Result<Vec<VerificationReport>> {
    let applicable: &[TheoremId] = if n.is_multiple_of(2) {
        &[TheoremId::Corollary1]
    } else {
        &[TheoremId::Corollary2, TheoremId::Corollary3]
    };
    applicable.iter().map(|&c| verify_range(c, n, n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(n: usize, pairs: &[(usize, usize)]) -> PairFamily {
        PairFamily::new(n, pairs.iter().copied()).unwrap()
    }

    fn pairing(n: usize, pairs: &[(usize, usize)]) -> Pairing {
        Pairing::try_from(fam(n, pairs)).unwrap()
    }

    fn quasi(n: usize, pairs: &[(usize, usize)]) -> QuasiPairing {
        QuasiPairing::try_from(fam(n, pairs)).unwrap()
    }

    #[test]
    fn theorem1_examples() {
        let i = theorem1_sides(5, &pairing(5, &[(0, 2), (1, 4)])).unwrap();
        assert_eq!((i.lhs, i.rhs), (true, true));
        let i = theorem1_sides(5, &pairing(5, &[(0, 1), (2, 4)])).unwrap();
        assert_eq!((i.lhs, i.rhs), (false, false));
        let i = theorem1_sides(4, &pairing(4, &[(0, 2), (1, 3)])).unwrap();
        assert!(!i.lhs && i.detail("irreducible") == Some(true));
        assert_eq!(i.scope, Scope::Outside);
        assert_eq!(i.outcome(), Outcome::Recorded);
        assert!(theorem1_sides(6, &pairing(5, &[(0, 1)])).is_err());
    }

    #[test]
    fn theorem2_examples() {
        // {0} in mc(6) is missed
        let q = quasi(6, &[(1, 3), (3, 5), (2, 4)]);
        let i = theorem2_sides(6, &q).unwrap();
        assert_eq!(i.detail("transversal"), Some(false));
        assert_eq!((i.lhs, i.rhs), (false, false));
        assert_eq!(TheoremId::Theorem2.scope(5), Scope::RightImpliesLeft);
    }

    #[test]
    fn theorem3_examples() {
        let c = theorem3_conditions(5, &quasi(5, &[(0, 2), (2, 4), (1, 3)])).unwrap();
        assert_eq!((c.c1, c.c2, c.c3, c.c4), (true, true, false, true));
        let c = theorem3_conditions(5, &quasi(5, &[(0, 2), (0, 4), (1, 3)])).unwrap();
        assert_eq!((c.c1, c.c2, c.c3, c.c4), (true, true, true, true));
        let c = theorem3_conditions(5, &quasi(5, &[(0, 1), (1, 3), (2, 4)])).unwrap();
        assert!(c.c4);

        let i = theorem3_check(5, &quasi(5, &[(0, 2), (0, 4), (1, 3)])).unwrap();
        assert_eq!((i.lhs, i.rhs), (true, true));
        let q = quasi(5, &[(0, 2), (2, 4), (1, 3)]);
        let i = theorem3_check(5, &q).unwrap();
        assert_eq!((i.lhs, i.rhs), (false, false));
        let t = inv(5, q.family()).unwrap();
        assert!(t.is_module([0usize, 3].into_iter().collect()));

        // v+ = v- + 1
        let q = quasi(5, &[(0, 2), (0, 3), (1, 4)]);
        let i = theorem3_check(5, &q).unwrap();
        assert_eq!(i.detail("c2"), Some(false));
        assert_eq!((i.lhs, i.rhs), (false, false));
        let t = inv(5, q.family()).unwrap();
        assert!(t.is_module([2usize, 3].into_iter().collect()));
    }

    #[test]
    fn c4_needs_both_neighbours_of_v_hat() {
        // {0,1} in Q with v_hat = 0: v_hat - 1 does not exist
        let c = theorem3_conditions(5, &quasi(5, &[(0, 1), (0, 3), (2, 4)])).unwrap();
        assert!(!c.c4);
        // v_hat = 2 with {2,3} in Q but 1 outside the support
        let c = theorem3_conditions(6, &quasi(6, &[(0, 4), (2, 3), (2, 5)])).unwrap();
        assert!(!c.c4);
    }

    #[test]
    fn small_ranges_pass() {
        for t in [TheoremId::Theorem1, TheoremId::Theorem2, TheoremId::Theorem3] {
            let r = verify_range(t, 5, 6).unwrap();
            assert!(r.passed(), "{t}: {:?}", r.violations);
            assert!(r.checked > 0);
        }
        let reports = corollary_checks(6).unwrap();
        assert_eq!(reports.len(), 1);
        assert_eq!(reports[0].checked, 15);
        assert!(reports[0].passed());
    }

    #[test]
    fn theorem_names() {
        for t in TheoremId::ALL {
            assert_eq!(t.name().parse::<TheoremId>(), Ok(t));
        }
    }
}
