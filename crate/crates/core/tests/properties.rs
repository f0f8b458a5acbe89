use proptest::collection::vec;
use proptest::prelude::*;
use revtour_core::comodules::{
    is_comodule, max_comodular_decomposition_bruteforce, mc_total_order, minimal_comodules_bruteforce,
    delta_total_order,
};
use revtour_core::enumeration::{EnumFilter, EnumKind, EnumSpec};
use revtour_core::pairings::{anatomy, Classification};
use revtour_core::theorems::{check_instance, TheoremId};
use revtour_core::{PairFamily, Pairing, QuasiPairing, Tournament, VertexSet};

fn tournament(max_n: usize) -> impl Strategy<Value = Tournament> {
    (0..=max_n).prop_flat_map(|n| {
        vec(any::<bool>(), n * n.saturating_sub(1) / 2)
            .prop_map(move |bits| Tournament::from_upper_triangle(n, bits).unwrap())
    })
}

/// A tournament with a random vertex subset and a random pair family.
fn tournament_set_family(max_n: usize) -> impl Strategy<Value = (Tournament, VertexSet, PairFamily)> {
    tournament(max_n).prop_flat_map(|t| {
        let n = t.order();
        let pairs = if n >= 2 {
            vec((0..n, 0..n), 0..=n).boxed()
        } else {
            Just(Vec::new()).boxed()
        };
        (Just(t), any::<u64>(), pairs).prop_map(move |(t, bits, pairs)| {
            let set = VertexSet::from_bits(bits) & VertexSet::full(n);
            let mut clean: Vec<(usize, usize)> = pairs
                .into_iter()
                .filter(|(a, b)| a != b)
                .map(|(a, b)| (a.min(b), a.max(b)))
                .collect();
            clean.sort();
            clean.dedup();
            (t, set, PairFamily::new(n, clean).unwrap())
        })
    })
}

fn is_integer_interval(m: VertexSet) -> bool {
    match (m.min(), m.max()) {
        (Some(lo), Some(hi)) => m.len() == hi - lo + 1,
        _ => true,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn reversal_is_an_involution((t, _, p) in tournament_set_family(12)) {
        prop_assert_eq!(t.reverse_pairs(&p).unwrap().reverse_pairs(&p).unwrap(), t);
    }

    #[test]
    fn dual_commutes_with_reversal((t, _, p) in tournament_set_family(12)) {
        prop_assert_eq!(t.reverse_pairs(&p).unwrap().dual(), t.dual().reverse_pairs(&p).unwrap());
        prop_assert_eq!(t.dual().dual(), t);
    }

    #[test]
    fn dual_has_the_same_modules((t, m, _) in tournament_set_family(12)) {
        prop_assert_eq!(t.is_module(m), t.dual().is_module(m));
    }

    #[test]
    fn closure_is_the_least_module_containing_the_seed((t, seed, _) in tournament_set_family(10)) {
        let c = t.module_closure(seed);
        prop_assert!(seed.is_subset(c));
        prop_assert!(t.is_module(c));
        for m in t.all_modules_bruteforce().unwrap() {
            if seed.is_subset(m) {
                prop_assert!(c.is_subset(m));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1_000))]

    #[test]
    fn indecomposable_iff_only_trivial_modules(t in tournament(12)) {
        let n = t.order();
        let nontrivial = t
            .all_modules_bruteforce()
            .unwrap()
            .into_iter()
            .any(|m| m.len() >= 2 && m.len() < n);
        prop_assert_eq!(t.is_indecomposable(), !nontrivial);
    }

    #[test]
    fn canonical_form_is_relabeling_invariant(t in tournament(7), seed in any::<u64>()) {
        let n = t.order();
        // a permutation from the seed, Fisher-Yates with a xorshift stream
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed | 1;
        for i in (1..n).rev() {
            s ^= s << 13;
            s ^= s >> 7;
            s ^= s << 17;
            perm.swap(i, (s % (i as u64 + 1)) as usize);
        }
        prop_assert_eq!(t.canonical_form().unwrap(), t.relabel(&perm).canonical_form().unwrap());
        prop_assert_eq!(t.is_indecomposable(), t.relabel(&perm).is_indecomposable());
    }
}

#[test]
fn total_order_modules_are_intervals() {
    for n in 0..=10 {
        let t = Tournament::transitive(n);
        for bits in 0u64..1 << n {
            let m = VertexSet::from_bits(bits);
            assert_eq!(t.is_module(m), is_integer_interval(m), "n = {n}, M = {m}");
        }
    }
}

#[test]
fn every_four_vertex_tournament_is_decomposable() {
    for bits in 0u32..64 {
        let t = Tournament::from_upper_triangle(4, (0..6).map(|k| bits >> k & 1 == 1)).unwrap();
        assert!(!t.is_indecomposable(), "{t:?}");
    }
}

#[test]
fn partial_family_invariants() {
    for n in 0..=9 {
        for kind in [EnumKind::PartialPairing, EnumKind::PartialQuasi] {
            let spec = EnumSpec::new(n, kind).include_empty(true);
            for f in spec.families().unwrap() {
                let (s, k) = (f.support().len(), f.len());
                match kind {
                    EnumKind::PartialPairing => {
                        assert_eq!(f.classify(), Classification::Pairing);
                        assert_eq!(s, 2 * k);
                        let p = Pairing::try_from(f.clone()).unwrap();
                        assert_eq!(f.components(), p.blocks());
                        assert_eq!(p.is_irreducible(), f.is_irreducible_by_components());
                        for x in f.support() {
                            let y = p.partner(x).unwrap();
                            assert_ne!(x, y);
                            assert_eq!(p.partner(y).unwrap(), x);
                        }
                        let mirrored = Pairing::try_from(f.mirror()).unwrap();
                        assert_eq!(mirrored.is_irreducible(), p.is_irreducible());
                    }
                    _ => {
                        assert_eq!(f.classify(), Classification::QuasiPairing);
                        assert_eq!(s, 2 * k - 1);
                        let doubled: Vec<usize> =
                            f.support().iter().filter(|&v| f.iota(v).len() == 2).collect();
                        assert_eq!(doubled.len(), 1, "{f}");
                        let a = anatomy(&f).unwrap();
                        assert_eq!(a.v_hat, doubled[0]);
                        assert!(a.v_minus < a.v_plus);
                        assert_eq!(f.components(), a.q_part);
                        let q = QuasiPairing::try_from(f.clone()).unwrap();
                        assert_eq!(q.is_irreducible(), f.is_irreducible_by_components());
                        let mirrored = QuasiPairing::try_from(f.mirror()).unwrap();
                        assert_eq!(mirrored.is_irreducible(), q.is_irreducible());
                    }
                }
            }
        }
    }
}

#[test]
fn minimal_comodules_are_minimal() {
    let mut tournaments: Vec<Tournament> = (3..=8).map(Tournament::transitive).collect();
    let w5 = Tournament::transitive(5)
        .reverse_pairs(&PairFamily::new(5, [(0, 2), (1, 4)]).unwrap())
        .unwrap();
    tournaments.push(w5);
    tournaments.push(Tournament::transitive(6).reverse_pairs(&PairFamily::new(6, [(0, 5)]).unwrap()).unwrap());
    for t in tournaments {
        let mc = minimal_comodules_bruteforce(&t).unwrap();
        for &m in mc.members() {
            assert!(is_comodule(&t, m));
            for sub in 0..m.bits() {
                let s = VertexSet::from_bits(sub);
                if s.is_subset(m) && s != m {
                    assert!(!is_comodule(&t, s), "{s} inside {m}");
                }
            }
        }
    }
}

#[test]
fn closed_forms_match_the_oracles() {
    for n in 3..=10 {
        let t = Tournament::transitive(n);
        assert_eq!(mc_total_order(n).unwrap(), minimal_comodules_bruteforce(&t).unwrap(), "n = {n}");
    }
    for n in 3..=9 {
        let d = max_comodular_decomposition_bruteforce(&Tournament::transitive(n)).unwrap();
        assert!(d.is_pairwise_disjoint());
        assert_eq!(d.len(), delta_total_order(n).unwrap(), "n = {n}");
    }
}

#[test]
fn theorem_sides_are_mirror_invariant() {
    for theorem in TheoremId::ALL {
        for n in 4..=7 {
            for f in EnumSpec::new(n, theorem.kind()).families().unwrap() {
                let a = check_instance(theorem, n, &f).unwrap();
                let b = check_instance(theorem, n, &f.mirror()).unwrap();
                assert_eq!((a.lhs, a.rhs), (b.lhs, b.rhs), "{theorem} {f}");
            }
        }
    }
}

#[test]
fn theorem3_right_side_implies_theorem2_left_side() {
    for n in 5..=8 {
        for f in EnumSpec::new(n, EnumKind::PartialQuasi).families().unwrap() {
            let t3 = check_instance(TheoremId::Theorem3, n, &f).unwrap();
            let t2 = check_instance(TheoremId::Theorem2, n, &f).unwrap();
            assert_eq!(t3.detail("c1"), Some(t2.lhs));
            if t3.rhs {
                assert!(t2.lhs, "{f}");
            }
        }
    }
}

#[test]
fn corollary1_census_identity() {
    for m in (6..=10).step_by(2) {
        let irreducible: Vec<PairFamily> = EnumSpec::new(m, EnumKind::Pairing)
            .filter(EnumFilter::IrreducibleOnly)
            .families()
            .unwrap()
            .collect();
        let indecomposable: Vec<PairFamily> = EnumSpec::new(m, EnumKind::Pairing)
            .filter(EnumFilter::IndecomposableInvOnly)
            .families()
            .unwrap()
            .collect();
        assert_eq!(irreducible, indecomposable, "m = {m}");
    }
}
