//! Co-modules: sets `M` such that `M` or its complement is a nontrivial
//! module.
//!
//! For general tournaments only brute-force routines are provided. The
//! closed forms are for total orders only.

use alloc::vec::Vec;
use core::fmt;

use crate::pairings::PairFamily;
use crate::tournament::Tournament;
use crate::{check_guard, Error, Result, VertexSet};

/// Guard for [`minimal_comodules_bruteforce`].
pub const MINIMAL_SCAN_MAX_N: usize = 14;
/// Guard for [`max_comodular_decomposition_bruteforce`].
pub const DECOMPOSITION_MAX_N: usize = 9;

/// A family of vertex subsets, kept sorted and free of duplicates.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct ComoduleFamily {
    members: Vec<VertexSet>,
}

impl ComoduleFamily {
    pub fn new(mut members: Vec<VertexSet>) -> Self {
        members.sort_unstable();
        members.dedup();
        ComoduleFamily { members }
    }

    pub fn members(&self) -> &[VertexSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_pairwise_disjoint(&self) -> bool {
        let mut seen = VertexSet::EMPTY;
        self.members.iter().all(|&m| {
            let ok = m.is_disjoint(seen);
            seen = seen | m;
            ok
        })
    }
}

/// `{a,b};{c};...`, members in ascending order.
impl fmt::Display for ComoduleFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ComoduleFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ComoduleFamily({self})")
    }
}

fn is_nontrivial_module(t: &Tournament, m: VertexSet) -> bool {
    m.len() >= 2 && m.len() < t.order() && t.is_module(m)
}

pub fn is_comodule(t: &Tournament, m: VertexSet) -> bool {
    debug_assert!(m.within(t.order()));
    is_nontrivial_module(t, m) || is_nontrivial_module(t, t.vertices() - m)
}

/// `mc(T)`: the co-modules containing no other co-module. Guarded at
/// `n <= 14`.
pub fn minimal_comodules_bruteforce(t: &Tournament) -> Result<ComoduleFamily> {
    let n = t.order();
    check_guard("minimal_comodules_bruteforce", n, MINIMAL_SCAN_MAX_N)?;
    let size = 1usize << n;
    let comod: Vec<bool> = (0..size as u64)
        .map(|b| is_comodule(t, VertexSet::from_bits(b)))
        .collect();
    // strictly_below[s]: some proper subset of s is a co-module
    let mut strictly_below = alloc::vec![false; size];
    for s in 1..size {
        let mut rest = s;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            rest ^= bit;
            let sub = s ^ bit;
            if comod[sub] || strictly_below[sub] {
                strictly_below[s] = true;
                break;
            }
        }
    }
    let members = (0..size)
        .filter(|&s| comod[s] && !strictly_below[s])
        .map(|s| VertexSet::from_bits(s as u64))
        .collect();
    Ok(ComoduleFamily::new(members))
}

/// `mc` of the total order on `0..n`: `{0}`, `{n-1}` and `{i, i+1}` for
/// `1 <= i <= n-3`.
pub fn mc_total_order(n: usize) -> Result<ComoduleFamily> {
    if n < 3 {
        return Err(Error::BelowMinimum { what: "mc_total_order", n, min: 3 });
    }
    if n > crate::MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let mut members = alloc::vec![VertexSet::singleton(0), VertexSet::singleton(n - 1)];
    members.extend((1..=n - 3).map(|i| VertexSet::interval(i, i + 1)));
    Ok(ComoduleFamily::new(members))
}

/// Co-modular index of the total order on `0..n`: `ceil((n + 1) / 2)`.
pub fn delta_total_order(n: usize) -> Result<usize> {
    if n < 3 {
        return Err(Error::BelowMinimum { what: "delta_total_order", n, min: 3 });
    }
    Ok((n + 2) / 2)
}

/// A largest family of pairwise disjoint co-modules. Guarded at `n <= 9`.
///
/// Exact search: the best packing of an available vertex set either leaves
/// its least vertex uncovered or covers it with a co-module whose least
/// element it is. Results are memoized per available set.
pub fn max_comodular_decomposition_bruteforce(t: &Tournament) -> Result<ComoduleFamily> {
    let n = t.order();
    check_guard("max_comodular_decomposition_bruteforce", n, DECOMPOSITION_MAX_N)?;
    let size = 1usize << n;
    // co-modules grouped by least element
    let mut by_min: Vec<Vec<u64>> = alloc::vec![Vec::new(); n];
    for b in 1..size as u64 {
        let m = VertexSet::from_bits(b);
        if is_comodule(t, m) {
            by_min[b.trailing_zeros() as usize].push(b);
        }
    }
    // best[avail] = (size, chosen member or 0 for "skip least vertex")
    let mut best: Vec<(u32, u64)> = alloc::vec![(0, 0); size];
    for avail in 1..size as u64 {
        let v = avail.trailing_zeros() as usize;
        let without = avail & (avail - 1);
        let mut choice = (best[without as usize].0, 0u64);
        for &c in &by_min[v] {
            if c & !avail == 0 {
                let cand = best[(avail & !c) as usize].0 + 1;
                if cand > choice.0 {
                    choice = (cand, c);
                }
            }
        }
        best[avail as usize] = choice;
    }
    let mut members = Vec::new();
    let mut avail = (size - 1) as u64;
    while avail != 0 {
        let (_, c) = best[avail as usize];
        if c == 0 {
            avail &= avail - 1;
        } else {
            members.push(VertexSet::from_bits(c));
            avail &= !c;
        }
    }
    Ok(ComoduleFamily::new(members))
}

/// Whether `r` meets every member of `family`.
pub fn is_transversal(r: VertexSet, family: &ComoduleFamily) -> bool {
    family.members().iter().all(|&m| m.intersects(r))
}

/// The implication "if reversing `pairs` in the total order on `0..n` gives
/// an indecomposable tournament, then `∪pairs` meets every member of
/// `mc`". For `n < 3` the closed form of `mc` is undefined and the
/// implication is reported as true.
pub fn fact1_holds(n: usize, pairs: &PairFamily) -> Result<bool> {
    if pairs.ambient() != n {
        return Err(Error::AmbientMismatch { expected: n, found: pairs.ambient() });
    }
    let t = Tournament::try_transitive(n)?.reverse_pairs(pairs)?;
    if !t.is_indecomposable() {
        return Ok(true);
    }
    if n < 3 {
        return Ok(true);
    }
    Ok(is_transversal(pairs.support(), &mc_total_order(n)?))
}
