//! Finite tournaments on `0..n`, arc reversal, modules and indecomposability.

use alloc::vec::Vec;
use core::fmt;

use crate::pairings::{Pair, PairFamily};
use crate::{check_guard, Error, Result, VertexSet, MAX_VERTICES};

/// Size guard for routines that scan all `2^n` vertex subsets.
pub const SUBSET_SCAN_MAX_N: usize = 20;
/// Size guard for routines that scan all `n!` relabelings.
pub const PERMUTATION_SCAN_MAX_N: usize = 9;

/// A tournament on the vertices `0..n`.
///
/// Row `x` holds the out-neighbourhood of `x` as a mask. Every constructor
/// writes both `(x, y)` and `(y, x)`, so each pair of distinct vertices
/// carries exactly one arc.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tournament {
    n: usize,
    out: Vec<u64>,
}

impl Tournament {
    /// The total order on `0..n`: `x -> y` iff `x < y`.
    ///
    /// Panics if `n > 64`; see [`Tournament::try_transitive`].
    pub fn transitive(n: usize) -> Tournament {
        Self::try_transitive(n).expect("vertex count above 64")
    }

    pub fn try_transitive(n: usize) -> Result<Tournament> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let out = (0..n)
            .map(|x| (VertexSet::full(n) - VertexSet::full(x + 1)).bits())
            .collect();
        Ok(Tournament { n, out })
    }

    /// Builds a tournament from a predicate `forward(x, y)`, queried for
    /// every `x < y`, telling whether the arc goes `x -> y`.
    pub fn from_fn(n: usize, mut forward: impl FnMut(usize, usize) -> bool) -> Result<Tournament> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut out = alloc::vec![0u64; n];
        for x in 0..n {
            for y in x + 1..n {
                if forward(x, y) {
                    out[x] |= 1 << y;
                } else {
                    out[y] |= 1 << x;
                }
            }
        }
        Ok(Tournament { n, out })
    }

    /// Builds a tournament from the upper-triangle bits, row-major over
    /// pairs `(i, j)` with `i < j`. Missing trailing bits count as `false`.
    pub fn from_upper_triangle(n: usize, bits: impl IntoIterator<Item = bool>) -> Result<Tournament> {
        let mut bits = bits.into_iter();
        Self::from_fn(n, |_, _| bits.next().unwrap_or(false))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// `T(x, y)`: whether `x -> y` is an arc. False when `x == y`.
    pub fn arc(&self, x: usize, y: usize) -> bool {
        self.out[x] >> y & 1 == 1
    }

    pub fn out_neighbours(&self, x: usize) -> VertexSet {
        VertexSet::from_bits(self.out[x])
    }

    pub fn in_neighbours(&self, x: usize) -> VertexSet {
        self.vertices() - self.out_neighbours(x) - VertexSet::singleton(x)
    }

    /// Out-degrees in vertex order.
    pub fn scores(&self) -> Vec<usize> {
        self.out.iter().map(|r| r.count_ones() as usize).collect()
    }

    /// All arcs `(x, y)`, ordered by `x` then `y`.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |x| self.out_neighbours(x).iter().map(move |y| (x, y)))
    }

    /// Upper-triangle bits, row-major over `(i, j)` with `i < j`; `true` iff `i -> j`.
    pub fn upper_triangle(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.n).flat_map(move |i| (i + 1..self.n).map(move |j| self.arc(i, j)))
    }

    fn flip(&mut self, x: usize, y: usize) {
        // exactly one of the two bits is set, so xor swaps them
        self.out[x] ^= 1 << y;
        self.out[y] ^= 1 << x;
    }

    /// Reverses the arc between `x` and `y` for every pair `{x, y}` of the family.
    pub fn reverse_pairs(&self, pairs: &PairFamily) -> Result<Tournament> {
        let mut t = self.clone();
        for p in pairs.iter() {
            if p.hi() >= self.n {
                return Err(Error::VertexOutOfRange { vertex: p.hi(), n: self.n });
            }
            t.flip(p.lo(), p.hi());
        }
        Ok(t)
    }

    /// Every arc reversed.
    pub fn dual(&self) -> Tournament {
        let full = self.vertices().bits();
        let out = self
            .out
            .iter()
            .enumerate()
            .map(|(x, r)| !r & full & !(1u64 << x))
            .collect();
        Tournament { n: self.n, out }
    }

    /// The subtournament induced by `set`, relabelled by rank in `set`.
    ///
    /// The returned vector maps each new vertex to its original label.
    pub fn subtournament(&self, set: VertexSet) -> Result<(Tournament, Vec<usize>)> {
        if !set.within(self.n) {
            let vertex = set.max().unwrap_or(0);
            return Err(Error::VertexOutOfRange { vertex, n: self.n });
        }
        let labels: Vec<usize> = set.iter().collect();
        let sub = Tournament::from_fn(labels.len(), |i, j| self.arc(labels[i], labels[j]))?;
        Ok((sub, labels))
    }

    /// `T - v`, relabelled by rank.
    pub fn delete_vertex(&self, v: usize) -> Result<Tournament> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(self.subtournament(self.vertices() - VertexSet::singleton(v))?.0)
    }

    /// The tournament whose vertex `perm[x]` plays the role of `x`.
    ///
    /// Panics unless `perm` is a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Tournament {
        assert_eq!(perm.len(), self.n);
        assert_eq!(perm.iter().copied().collect::<VertexSet>(), self.vertices());
        let mut out = alloc::vec![0u64; self.n];
        for (x, y) in self.arcs() {
            out[perm[x]] |= 1 << perm[y];
        }
        Tournament { n: self.n, out }
    }

    /// The pairs `{x, y}`, `x < y`, whose arc runs `y -> x`: the family
    /// reversed to obtain this tournament from the total order on `0..n`.
    pub fn reversed_from_transitive(&self) -> PairFamily {
        let mut pairs = Vec::new();
        for y in 0..self.n {
            for x in self.out_neighbours(y).iter().take_while(|&x| x < y) {
                pairs.push(Pair::new(x, y).expect("x < y"));
            }
        }
        pairs.sort_unstable();
        PairFamily::from_sorted_unchecked(self.n, pairs)
    }

    /// Whether every vertex outside `set` sees all of `set` the same way.
    pub fn is_module(&self, set: VertexSet) -> bool {
        debug_assert!(set.within(self.n));
        let m = set.bits();
        (self.vertices() - set).iter().all(|v| {
            let o = self.out[v] & m;
            o == 0 || o == m
        })
    }

    /// The smallest module containing `seed`.
    ///
    /// Outside vertices are visited in increasing order and each one that
    /// splits the current set is added, until nothing splits it.
    pub fn module_closure(&self, seed: VertexSet) -> VertexSet {
        debug_assert!(seed.within(self.n));
        let mut s = seed.bits();
        if seed.len() < 2 {
            return seed;
        }
        loop {
            let mut grew = false;
            for v in (self.vertices() - VertexSet::from_bits(s)).iter() {
                let o = self.out[v] & s;
                if o != 0 && o != s {
                    s |= 1 << v;
                    grew = true;
                }
            }
            if !grew {
                return VertexSet::from_bits(s);
            }
        }
    }

    /// Whether all modules are trivial (empty, singletons, or all vertices).
    pub fn is_indecomposable(&self) -> bool {
        self.nontrivial_module().is_none()
    }

    /// Some module of size between 2 and `n - 1`, when one exists. The
    /// result is the closure of the first pair `{x, y}` (in lexicographic
    /// order) that does not close to all vertices.
    pub fn nontrivial_module(&self) -> Option<VertexSet> {
        if self.n <= 2 {
            return None;
        }
        let all = self.vertices();
        for x in 0..self.n {
            for y in x + 1..self.n {
                let pair = VertexSet::singleton(x) | VertexSet::singleton(y);
                let m = self.module_closure(pair);
                if m != all {
                    return Some(m);
                }
            }
        }
        None
    }

    /// Every module, by size and then lexicographically. Guarded at
    /// `n <= 20`.
    pub fn all_modules_bruteforce(&self) -> Result<Vec<VertexSet>> {
        check_guard("all_modules_bruteforce", self.n, SUBSET_SCAN_MAX_N)?;
        let mut mods: Vec<VertexSet> = (0u64..1 << self.n)
            .map(VertexSet::from_bits)
            .filter(|&m| self.is_module(m))
            .collect();
        mods.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(mods)
    }

    /// The lexicographically smallest upper-triangle string over all
    /// relabelings. Guarded at `n <= 9`.
    pub fn canonical_form(&self) -> Result<CanonicalForm> {
        check_guard("canonical_form", self.n, PERMUTATION_SCAN_MAX_N)?;
        let n = self.n;
        let width = n * n.saturating_sub(1) / 2;
        let encode = |perm: &[usize]| -> u64 {
            let mut bits = 0u64;
            for i in 0..n {
                for j in i + 1..n {
                    bits = bits << 1 | self.arc(perm[i], perm[j]) as u64;
                }
            }
            bits
        };
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best = encode(&perm);
        // Heap's algorithm, iterative form
        let mut c = alloc::vec![0usize; n];
        let mut i = 1;
        while i < n {
            if c[i] < i {
                if i % 2 == 0 {
                    perm.swap(0, i);
                } else {
                    perm.swap(c[i], i);
                }
                best = best.min(encode(&perm));
                c[i] += 1;
                i = 1;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        Ok(CanonicalForm { n, width, bits: best })
    }

    pub fn is_isomorphic(&self, other: &Tournament) -> Result<bool> {
        if self.n != other.n {
            // still enforce the guard on both sides
            check_guard("canonical_form", self.n.max(other.n), PERMUTATION_SCAN_MAX_N)?;
            return Ok(false);
        }
        Ok(self.canonical_form()? == other.canonical_form()?)
    }
}

impl fmt::Debug for Tournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Tournament")
            .field("n", &self.n)
            .field("arcs", &self.arcs().collect::<Vec<_>>())
            .finish()
    }
}

/// Isomorphism invariant of a tournament with at most 9 vertices: the
/// lexicographically least upper-triangle bit string over all relabelings.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    width: usize,
    bits: u64,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n
    }

    /// The representative tournament whose upper triangle is this string.
    pub fn tournament(&self) -> Tournament {
        let (w, b) = (self.width, self.bits);
        Tournament::from_upper_triangle(self.n, (0..w).map(|k| b >> (w - 1 - k) & 1 == 1))
            .expect("n <= 9")
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for k in (0..self.width).rev() {
            f.write_str(if self.bits >> k & 1 == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({}, {})", self.n, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn set(xs: &[usize]) -> VertexSet {
        xs.iter().copied().collect()
    }

    fn fam(n: usize, pairs: &[(usize, usize)]) -> PairFamily {
        PairFamily::new(n, pairs.iter().copied()).unwrap()
    }

    fn c3() -> Tournament {
        Tournament::from_fn(3, |x, y| !(x == 0 && y == 2)).unwrap()
    }

    #[test]
    fn transitive_arcs() {
        assert_eq!(Tournament::transitive(2).arcs().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(
            Tournament::transitive(3).arcs().collect::<Vec<_>>(),
            vec![(0, 1), (0, 2), (1, 2)]
        );
        assert_eq!(Tournament::transitive(0).arcs().count(), 0);
        assert!(Tournament::try_transitive(65).is_err());
        assert_eq!(Tournament::transitive(64).scores()[0], 63);
    }

    #[test]
    fn c3_arcs() {
        assert_eq!(c3().arcs().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 0)]);
    }

    #[test]
    fn reversal_basics() {
        let t = Tournament::transitive(5);
        assert_eq!(t.reverse_pairs(&PairFamily::empty(5)).unwrap(), t);
        let p = fam(5, &[(0, 2), (1, 4)]);
        let w5 = t.reverse_pairs(&p).unwrap();
        assert!(w5.arc(2, 0) && w5.arc(4, 1) && w5.arc(0, 1));
        assert_eq!(w5.reverse_pairs(&p).unwrap(), t);
        assert_eq!(w5.reversed_from_transitive(), p);
        let err = Tournament::transitive(3).reverse_pairs(&fam(5, &[(0, 4)]));
        assert_eq!(err, Err(Error::VertexOutOfRange { vertex: 4, n: 3 }));
    }

    #[test]
    fn dual_examples() {
        let d = Tournament::transitive(3).dual();
        assert_eq!(d.arcs().collect::<Vec<_>>(), vec![(1, 0), (2, 0), (2, 1)]);
        let t4 = Tournament::transitive(4);
        let p = fam(4, &[(0, 3)]);
        assert_eq!(t4.reverse_pairs(&p).unwrap().dual(), t4.dual().reverse_pairs(&p).unwrap());
        assert_eq!(c3().dual().dual(), c3());
    }

    #[test]
    fn subtournament_examples() {
        let (s, labels) = Tournament::transitive(5).subtournament(set(&[1, 3, 4])).unwrap();
        assert_eq!(s, Tournament::transitive(3));
        assert_eq!(labels, vec![1, 3, 4]);
        let t = Tournament::transitive(5)
            .reverse_pairs(&fam(5, &[(0, 2), (2, 4), (1, 3)]))
            .unwrap();
        assert_eq!(t.subtournament(t.vertices()).unwrap().0, t);
        // {0,2} and {2,4} map to rank pairs {0,1} and {1,3}; {1,3} leaves the set
        let (s, _) = t.subtournament(set(&[0, 2, 3, 4])).unwrap();
        let expected = Tournament::transitive(4)
            .reverse_pairs(&fam(4, &[(0, 1), (1, 3)]))
            .unwrap();
        assert_eq!(s, expected);
        assert!(t.subtournament(set(&[5])).is_err());
    }

    #[test]
    fn module_examples() {
        let t5 = Tournament::transitive(5);
        assert!(t5.is_module(set(&[1, 2])));
        assert!(!t5.is_module(set(&[1, 3])));
        let t = Tournament::transitive(4)
            .reverse_pairs(&fam(4, &[(0, 2), (1, 3)]))
            .unwrap();
        assert!(t.is_module(set(&[0, 3])));
    }

    #[test]
    fn closure_examples() {
        let t5 = Tournament::transitive(5);
        assert_eq!(t5.module_closure(set(&[1, 2])), set(&[1, 2]));
        assert_eq!(t5.module_closure(set(&[1, 3])), set(&[1, 2, 3]));
        let w5 = t5.reverse_pairs(&fam(5, &[(0, 2), (1, 4)])).unwrap();
        assert_eq!(w5.module_closure(set(&[0, 1])), w5.vertices());
    }

    #[test]
    fn indecomposability_examples() {
        assert!(!Tournament::transitive(3).is_indecomposable());
        assert!(c3().is_indecomposable());
        let w5 = Tournament::transitive(5)
            .reverse_pairs(&fam(5, &[(0, 2), (1, 4)]))
            .unwrap();
        assert!(w5.is_indecomposable());
        for n in 0..=2 {
            assert!(Tournament::transitive(n).is_indecomposable());
        }
    }

    #[test]
    fn brute_force_modules() {
        let mods = Tournament::transitive(3).all_modules_bruteforce().unwrap();
        let expected = vec![
            set(&[]),
            set(&[0]),
            set(&[1]),
            set(&[2]),
            set(&[0, 1]),
            set(&[1, 2]),
            set(&[0, 1, 2]),
        ];
        assert_eq!(mods, expected);
        assert_eq!(
            c3().all_modules_bruteforce().unwrap(),
            vec![set(&[]), set(&[0]), set(&[1]), set(&[2]), set(&[0, 1, 2])]
        );
        assert_eq!(Tournament::transitive(2).all_modules_bruteforce().unwrap().len(), 4);
        assert!(matches!(
            Tournament::transitive(21).all_modules_bruteforce(),
            Err(Error::GuardExceeded { max: 20, .. })
        ));
    }

    #[test]
    fn canonical_examples() {
        let t3 = Tournament::transitive(3);
        assert_eq!(t3.canonical_form().unwrap(), t3.dual().canonical_form().unwrap());
        assert_ne!(t3.canonical_form().unwrap(), c3().canonical_form().unwrap());
        assert!(c3().is_isomorphic(&c3().relabel(&[2, 0, 1])).unwrap());
        let t4 = Tournament::transitive(4);
        // swapping two adjacent ranks of a total order leaves it a total order
        assert!(t4.is_isomorphic(&t4.reverse_pairs(&fam(4, &[(0, 1)])).unwrap()).unwrap());
        let scores_2220 = t4.reverse_pairs(&fam(4, &[(0, 2)])).unwrap();
        assert!(!t4.is_isomorphic(&scores_2220).unwrap());
        assert!(Tournament::transitive(10).canonical_form().is_err());
        // the representative reproduces its own form
        let cf = c3().canonical_form().unwrap();
        assert_eq!(cf.tournament().canonical_form().unwrap(), cf);
        assert_eq!(cf.to_string().len(), 3);
    }

    #[test]
    fn relabel_and_delete() {
        let t = Tournament::transitive(3).relabel(&[2, 1, 0]);
        assert_eq!(t, Tournament::transitive(3).dual());
        let w5 = Tournament::transitive(5)
            .reverse_pairs(&fam(5, &[(0, 2), (1, 4)]))
            .unwrap();
        assert_eq!(w5.delete_vertex(4).unwrap().order(), 4);
        assert!(w5.delete_vertex(5).is_err());
    }
}
