//! Exhaustive generation of pairings and quasi-pairings over `0..n`.
//!
//! All four kinds come out of one depth-first walk over sorted pair
//! sequences. A node is a sorted list of pairs in which every vertex has
//! degree at most two and at most one vertex (none for the pairing kinds)
//! has degree two. Children extend the list by a strictly larger pair. A
//! preorder walk of this prefix tree therefore yields families in
//! lexicographic order of their pair sequences, with each family exactly
//! once. The walk splits into independent subtrees by first pair, which is
//! how callers shard it.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::pairings::{Pair, PairFamily};
use crate::tournament::{CanonicalForm, Tournament, PERMUTATION_SCAN_MAX_N};
use crate::{check_guard, Error, Result, VertexSet};

/// Default guard for the partial kinds.
pub const PARTIAL_MAX_N: usize = 12;
/// Default guard for the full-support kinds.
pub const FULL_MAX_N: usize = 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EnumKind {
    /// Pairings of all of `0..n`.
    Pairing,
    /// Pairings of any subset of `0..n`.
    PartialPairing,
    /// Quasi-pairings of all of `0..n`.
    Quasi,
    /// Quasi-pairings of any subset of `0..n`.
    PartialQuasi,
}

impl EnumKind {
    pub const ALL: [EnumKind; 4] = [
        EnumKind::Pairing,
        EnumKind::PartialPairing,
        EnumKind::Quasi,
        EnumKind::PartialQuasi,
    ];

    pub fn is_partial(self) -> bool {
        matches!(self, EnumKind::PartialPairing | EnumKind::PartialQuasi)
    }

    pub fn is_quasi(self) -> bool {
        matches!(self, EnumKind::Quasi | EnumKind::PartialQuasi)
    }

    pub fn name(self) -> &'static str {
        match self {
            EnumKind::Pairing => "pairing",
            EnumKind::PartialPairing => "partial-pairing",
            EnumKind::Quasi => "quasi",
            EnumKind::PartialQuasi => "partial-quasi",
        }
    }

    pub fn default_max_n(self) -> usize {
        if self.is_partial() {
            PARTIAL_MAX_N
        } else {
            FULL_MAX_N
        }
    }
}

impl fmt::Display for EnumKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EnumKind {
    type Err = UnknownName;

    fn from_str(s: &str) -> core::result::Result<Self, UnknownName> {
        EnumKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or(UnknownName)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum EnumFilter {
    #[default]
    All,
    IrreducibleOnly,
    /// Families whose reversal in the total order is indecomposable.
    IndecomposableInvOnly,
}

impl EnumFilter {
    pub fn name(self) -> &'static str {
        match self {
            EnumFilter::All => "all",
            EnumFilter::IrreducibleOnly => "irreducible-only",
            EnumFilter::IndecomposableInvOnly => "indecomposable-inv-only",
        }
    }
}

impl FromStr for EnumFilter {
    type Err = UnknownName;

    fn from_str(s: &str) -> core::result::Result<Self, UnknownName> {
        [EnumFilter::All, EnumFilter::IrreducibleOnly, EnumFilter::IndecomposableInvOnly]
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or(UnknownName)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UnknownName;

impl fmt::Display for UnknownName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("unknown name")
    }
}

/// What to enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumSpec {
    pub n: usize,
    pub kind: EnumKind,
    pub filter: EnumFilter,
    /// Whether the empty family is produced (it is a pairing of the empty set).
    pub include_empty: bool,
    /// Overrides the default size guard of the kind.
    pub max_n: Option<usize>,
}

impl EnumSpec {
    pub fn new(n: usize, kind: EnumKind) -> Self {
        EnumSpec { n, kind, filter: EnumFilter::All, include_empty: false, max_n: None }
    }

    pub fn filter(mut self, filter: EnumFilter) -> Self {
        self.filter = filter;
        self
    }

    pub fn include_empty(mut self, yes: bool) -> Self {
        self.include_empty = yes;
        self
    }

    pub fn max_n(mut self, max_n: usize) -> Self {
        self.max_n = Some(max_n);
        self
    }

    pub fn check(&self) -> Result<()> {
        if self.n > crate::MAX_VERTICES {
            return Err(Error::TooManyVertices(self.n));
        }
        let max = self.max_n.unwrap_or(self.kind.default_max_n());
        check_guard("enumerate", self.n, max)
    }

    /// Every matching family, in lexicographic order.
    pub fn families(&self) -> Result<Families> {
        self.check()?;
        Ok(Families::new(*self, None))
    }

    /// Independent pieces of the walk. Concatenating
    /// [`EnumSpec::shard_families`] over them in order reproduces
    /// [`EnumSpec::families`].
    pub fn shards(&self) -> Result<Vec<Shard>> {
        self.check()?;
        let mut out = alloc::vec![Shard { first: None }];
        let root = Families::new(*self, None);
        let mut after = None;
        while let Some(p) = root.next_candidate(after) {
            out.push(Shard { first: Some(p) });
            after = Some(p);
        }
        Ok(out)
    }

    pub fn shard_families(&self, shard: Shard) -> Result<Families> {
        self.check()?;
        Ok(Families::new(*self, Some(shard)))
    }

    pub fn count(&self) -> Result<usize> {
        Ok(self.families()?.count())
    }

    /// Whether a family produced for this spec passes its filter.
    pub fn accepts(&self, family: &PairFamily) -> bool {
        match self.filter {
            EnumFilter::All => true,
            EnumFilter::IrreducibleOnly => family.is_irreducible_by_components(),
            EnumFilter::IndecomposableInvOnly => inv_is_indecomposable(self.n, family),
        }
    }
}

/// One subtree of the enumeration walk: the empty family alone
/// (`first == None`) or every family whose first pair is `first`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Shard {
    pub first: Option<Pair>,
}

fn inv_is_indecomposable(n: usize, family: &PairFamily) -> bool {
    Tournament::transitive(n)
        .reverse_pairs(family)
        .expect("pairs lie in 0..n")
        .is_indecomposable()
}

/// Iterator over the families of an [`EnumSpec`].
#[derive(Clone, Debug)]
pub struct Families {
    spec: EnumSpec,
    stack: Vec<Pair>,
    degree: [u8; crate::MAX_VERTICES],
    doubled: u32,
    /// Depth below which backtracking stops (1 inside a shard).
    floor: usize,
    pending: bool,
    done: bool,
}

impl Families {
    fn new(spec: EnumSpec, shard: Option<Shard>) -> Self {
        let mut it = Families {
            spec,
            stack: Vec::new(),
            degree: [0; crate::MAX_VERTICES],
            doubled: 0,
            floor: 0,
            pending: true,
            done: false,
        };
        match shard {
            None => {}
            Some(Shard { first: None }) => {
                // only the root node
                it.floor = usize::MAX;
            }
            Some(Shard { first: Some(p) }) => {
                if it.valid_extension(p) {
                    it.push(p);
                    it.floor = 1;
                } else {
                    it.done = true;
                }
            }
        }
        it
    }

    fn max_doubled(&self) -> u32 {
        self.spec.kind.is_quasi() as u32
    }

    fn used(&self) -> VertexSet {
        (0..self.spec.n).filter(|&v| self.degree[v] > 0).collect()
    }

    fn valid_extension(&self, p: Pair) -> bool {
        let (a, b) = (p.lo(), p.hi());
        if b >= self.spec.n {
            return false;
        }
        if let Some(&last) = self.stack.last() {
            if p <= last {
                return false;
            }
        }
        let (da, db) = (self.degree[a], self.degree[b]);
        if da >= 2 || db >= 2 {
            return false;
        }
        let new_doubled = self.doubled + (da == 1) as u32 + (db == 1) as u32;
        if new_doubled > self.max_doubled() {
            return false;
        }
        if !self.spec.kind.is_partial() {
            // later pairs start at a or above, so smaller vertices must be covered already
            if (0..a).any(|v| self.degree[v] == 0) {
                return false;
            }
        }
        true
    }

    /// Smallest valid extension strictly greater than `after` and the
    /// current last pair.
    fn next_candidate(&self, after: Option<Pair>) -> Option<Pair> {
        let lower = match (after, self.stack.last().copied()) {
            (Some(x), Some(y)) => Some(x.max(y)),
            (x, y) => x.or(y),
        };
        let n = self.spec.n;
        let (a0, b0) = match lower {
            Some(p) => (p.lo(), p.hi() + 1),
            None => (0, 1),
        };
        for a in a0..n {
            if !self.spec.kind.is_partial() && (0..a).any(|v| self.degree[v] == 0) {
                return None;
            }
            let start = if a == a0 { b0.max(a + 1) } else { a + 1 };
            for b in start..n {
                let p = Pair::new(a, b).expect("a < b");
                if self.valid_extension(p) {
                    return Some(p);
                }
            }
        }
        None
    }

    fn push(&mut self, p: Pair) {
        for v in [p.lo(), p.hi()] {
            self.degree[v] += 1;
            if self.degree[v] == 2 {
                self.doubled += 1;
            }
        }
        self.stack.push(p);
    }

    fn pop(&mut self) -> Option<Pair> {
        let p = self.stack.pop()?;
        for v in [p.lo(), p.hi()] {
            if self.degree[v] == 2 {
                self.doubled -= 1;
            }
            self.degree[v] -= 1;
        }
        Some(p)
    }

    fn node_is_family(&self) -> bool {
        if self.stack.is_empty() && !self.spec.include_empty {
            return false;
        }
        if self.doubled != self.max_doubled() {
            return false;
        }
        self.spec.kind.is_partial() || self.used() == VertexSet::full(self.spec.n)
    }

    /// Moves to the next node in preorder; false when the walk is over.
    fn step(&mut self) -> bool {
        if self.stack.len() < self.floor || self.floor == usize::MAX {
            return false;
        }
        if let Some(c) = self.next_candidate(None) {
            self.push(c);
            return true;
        }
        while self.stack.len() > self.floor {
            let p = self.pop().expect("nonempty");
            if let Some(c) = self.next_candidate(Some(p)) {
                self.push(c);
                return true;
            }
        }
        false
    }
}

impl Iterator for Families {
    type Item = PairFamily;

    fn next(&mut self) -> Option<PairFamily> {
        while !self.done {
            if self.pending {
                self.pending = false;
                if self.node_is_family() {
                    let f = PairFamily::from_sorted_unchecked(self.spec.n, self.stack.clone());
                    if self.spec.accepts(&f) {
                        return Some(f);
                    }
                }
            }
            if self.step() {
                self.pending = true;
            } else {
                self.done = true;
            }
        }
        None
    }
}

/// Number of irreducible pairings of `0..m`. `m` must be even and at most 14.
pub fn count_irreducible_pairings(m: usize) -> Result<usize> {
    if m % 2 == 1 {
        return Err(Error::OddCount(m));
    }
    check_guard("count_irreducible_pairings", m, FULL_MAX_N)?;
    EnumSpec::new(m, EnumKind::Pairing)
        .filter(EnumFilter::IrreducibleOnly)
        .include_empty(true)
        .count()
}

/// One family whose reversal in the total order is indecomposable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusEntry {
    pub family: PairFamily,
    pub tournament: Tournament,
    pub irreducible: bool,
    /// Index into [`Census::classes`]; `None` above the canonical-form guard.
    pub class: Option<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Census {
    pub entries: Vec<CensusEntry>,
    /// Isomorphism classes in order of first occurrence.
    pub classes: Vec<CanonicalForm>,
}

impl Census {
    /// Entries per class, indexed like [`Census::classes`].
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = alloc::vec![0; self.classes.len()];
        for e in &self.entries {
            if let Some(c) = e.class {
                m[c] += 1;
            }
        }
        m
    }

    /// Appends an entry, assigning its class id by first occurrence of `form`.
    pub fn push(&mut self, entry: CensusEntry, form: Option<CanonicalForm>) {
        let class = form.map(|cf| match self.classes.iter().position(|&c| c == cf) {
            Some(i) => i,
            None => {
                self.classes.push(cf);
                self.classes.len() - 1
            }
        });
        self.entries.push(CensusEntry { class, ..entry });
    }

    /// Adds the indecomposable ones among `families`, in order.
    pub fn extend<I: IntoIterator<Item = PairFamily>>(&mut self, n: usize, families: I) {
        for family in families {
            if let Some((entry, form)) = census_entry(n, family) {
                self.push(entry, form);
            }
        }
    }
}

/// The census record of one family, or `None` if its reversal is
/// decomposable. The class slot is filled in by [`Census::push`].
pub fn census_entry(n: usize, family: PairFamily) -> Option<(CensusEntry, Option<CanonicalForm>)> {
    let tournament = Tournament::transitive(n).reverse_pairs(&family).expect("pairs lie in 0..n");
    if !tournament.is_indecomposable() {
        return None;
    }
    // the reversed pair set is recoverable from the arcs, so distinct
    // families give distinct tournaments
    assert_eq!(tournament.reversed_from_transitive(), family);
    let cf = (n <= PERMUTATION_SCAN_MAX_N).then(|| tournament.canonical_form().expect("guarded"));
    let irreducible = family.is_irreducible_by_components();
    Some((CensusEntry { family, tournament, irreducible, class: None }, cf))
}

/// All families of `spec` whose reversal in the total order is
/// indecomposable, with isomorphism classes when `n <= 9`.
pub fn indecomposable_census(spec: &EnumSpec) -> Result<Census> {
    let mut census = Census::default();
    census.extend(spec.n, spec.families()?);
    Ok(census)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pairings::Classification;
    use alloc::string::{String, ToString};

    fn serialized(spec: EnumSpec) -> Vec<String> {
        spec.families().unwrap().map(|f| f.to_string()).collect()
    }

    /// Independent oracle: every subset of the `n(n-1)/2` possible pairs,
    /// classified by cardinality, then sorted.
    fn oracle(spec: EnumSpec) -> Vec<PairFamily> {
        let n = spec.n;
        let all: Vec<(usize, usize)> =
            (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        let mut out = Vec::new();
        for mask in 0u64..1 << all.len() {
            let f = PairFamily::new(
                n,
                all.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p),
            )
            .unwrap();
            let class_ok = match spec.kind {
                EnumKind::Pairing | EnumKind::PartialPairing => {
                    f.classify() == Classification::Pairing
                }
                EnumKind::Quasi | EnumKind::PartialQuasi => {
                    f.classify() == Classification::QuasiPairing
                }
            };
            let support_ok = spec.kind.is_partial() || f.support() == VertexSet::full(n);
            let empty_ok = !f.is_empty() || spec.include_empty;
            if class_ok && support_ok && empty_ok && spec.accepts(&f) {
                out.push(f);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn small_counts() {
        assert_eq!(EnumSpec::new(4, EnumKind::Pairing).count(), Ok(3));
        assert_eq!(EnumSpec::new(4, EnumKind::PartialPairing).include_empty(true).count(), Ok(10));
        assert_eq!(EnumSpec::new(3, EnumKind::Quasi).count(), Ok(3));
        assert_eq!(EnumSpec::new(5, EnumKind::PartialQuasi).count(), Ok(60));
    }

    #[test]
    fn involution_recurrence_matches_partial_pairings() {
        // I(n) = I(n-1) + (n-1) I(n-2)
        let mut inv = alloc::vec![1usize, 1];
        for n in 2..=9 {
            inv.push(inv[n - 1] + (n - 1) * inv[n - 2]);
        }
        for (n, &expected) in inv.iter().enumerate() {
            let spec = EnumSpec::new(n, EnumKind::PartialPairing).include_empty(true);
            assert_eq!(spec.count(), Ok(expected), "n = {n}");
        }
    }

    #[test]
    fn output_matches_subset_oracle() {
        for n in 0..=6 {
            for kind in EnumKind::ALL {
                for filter in [EnumFilter::All, EnumFilter::IrreducibleOnly, EnumFilter::IndecomposableInvOnly] {
                    for include_empty in [false, true] {
                        let spec = EnumSpec::new(n, kind).filter(filter).include_empty(include_empty);
                        let got: Vec<PairFamily> = spec.families().unwrap().collect();
                        assert_eq!(got, oracle(spec), "{n} {kind} {filter:?} {include_empty}");
                    }
                }
            }
        }
    }

    #[test]
    fn lexicographic_order_example() {
        assert_eq!(
            serialized(EnumSpec::new(4, EnumKind::PartialPairing).include_empty(true)),
            [
                "", "0-1", "0-1,2-3", "0-2", "0-2,1-3", "0-3", "0-3,1-2", "1-2", "1-3", "2-3"
            ]
        );
        assert_eq!(serialized(EnumSpec::new(3, EnumKind::Quasi)), ["0-1,0-2", "0-1,1-2", "0-2,1-2"]);
    }

    #[test]
    fn shards_concatenate_to_serial_output() {
        for kind in EnumKind::ALL {
            let spec = EnumSpec::new(7, kind).include_empty(true);
            let serial: Vec<PairFamily> = spec.families().unwrap().collect();
            let sharded: Vec<PairFamily> = spec
                .shards()
                .unwrap()
                .into_iter()
                .flat_map(|s| spec.shard_families(s).unwrap())
                .collect();
            assert_eq!(serial, sharded, "{kind}");
        }
    }

    #[test]
    fn guards() {
        assert!(EnumSpec::new(13, EnumKind::PartialPairing).families().is_err());
        assert!(EnumSpec::new(13, EnumKind::PartialPairing).max_n(13).families().is_ok());
        assert!(EnumSpec::new(15, EnumKind::Pairing).families().is_err());
        assert!(EnumSpec::new(65, EnumKind::Pairing).max_n(100).families().is_err());
    }

    #[test]
    fn irreducible_pairing_counts() {
        assert_eq!(count_irreducible_pairings(2), Ok(1));
        assert_eq!(count_irreducible_pairings(4), Ok(1));
        // {02,14,35}, {03,14,25}, {03,15,24}, {04,13,25}
        assert_eq!(count_irreducible_pairings(6), Ok(4));
        assert_eq!(count_irreducible_pairings(0), Ok(1));
        assert_eq!(count_irreducible_pairings(5), Err(Error::OddCount(5)));
        assert!(count_irreducible_pairings(16).is_err());
    }

    #[test]
    fn names_round_trip() {
        for k in EnumKind::ALL {
            assert_eq!(k.name().parse::<EnumKind>(), Ok(k));
        }
        assert!("quasi-pairing".parse::<EnumKind>().is_err());
        assert_eq!("irreducible-only".parse::<EnumFilter>(), Ok(EnumFilter::IrreducibleOnly));
    }

    #[test]
    fn census_small_cases() {
        for kind in EnumKind::ALL {
            let c = indecomposable_census(&EnumSpec::new(4, kind)).unwrap();
            assert!(c.entries.is_empty(), "{kind}");
        }
        let c = indecomposable_census(&EnumSpec::new(5, EnumKind::PartialQuasi)).unwrap();
        assert_eq!(c.entries.len(), 11);
        assert_eq!(c.classes.len(), 2);
    }
}
