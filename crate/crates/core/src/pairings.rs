//! Pair families over `0..n`, pairings, quasi-pairings and irreducibility.
//!
//! "Interval" always means an interval of the support ordered by the
//! integers: `{0, 1, 2, 4}` has `{2, 4}` as an interval but not `{1, 4}`.

use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result, VertexSet, MAX_VERTICES};

/// An unordered pair `{lo, hi}` with `lo < hi`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pair {
    lo: u8,
    hi: u8,
}

impl Pair {
    /// Normalizes the endpoint order; rejects `x == y`.
    pub fn new(x: usize, y: usize) -> Result<Pair> {
        if x == y {
            return Err(Error::DegeneratePair(x));
        }
        let (lo, hi) = if x < y { (x, y) } else { (y, x) };
        if hi >= MAX_VERTICES {
            return Err(Error::VertexOutOfRange { vertex: hi, n: MAX_VERTICES });
        }
        Ok(Pair { lo: lo as u8, hi: hi as u8 })
    }

    pub fn lo(self) -> usize {
        self.lo as usize
    }

    pub fn hi(self) -> usize {
        self.hi as usize
    }

    pub fn contains(self, v: usize) -> bool {
        self.lo() == v || self.hi() == v
    }

    /// The other endpoint, if `v` is one of them.
    pub fn other(self, v: usize) -> Option<usize> {
        if self.lo() == v {
            Some(self.hi())
        } else if self.hi() == v {
            Some(self.lo())
        } else {
            None
        }
    }

    pub fn as_set(self) -> VertexSet {
        VertexSet::singleton(self.lo()) | VertexSet::singleton(self.hi())
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.lo, self.hi)
    }
}

impl fmt::Debug for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.lo, self.hi)
    }
}

/// How a family relates to its support: `|∪P| = 2|P|` makes a pairing,
/// `|∪P| = 2|P| - 1` with at least two pairs makes a quasi-pairing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Classification {
    Pairing,
    QuasiPairing,
    Neither,
}

/// A set of distinct unordered pairs over the ambient vertex set `0..n`,
/// kept sorted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairFamily {
    n: usize,
    pairs: Vec<Pair>,
}

impl PairFamily {
    pub fn new<I>(n: usize, pairs: I) -> Result<PairFamily>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut out = Vec::new();
        for (x, y) in pairs {
            let p = Pair::new(x, y)?;
            if p.hi() >= n {
                return Err(Error::VertexOutOfRange { vertex: p.hi(), n });
            }
            out.push(p);
        }
        out.sort_unstable();
        if let Some(w) = out.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicatePair(w[0]));
        }
        Ok(PairFamily { n, pairs: out })
    }

    pub fn empty(n: usize) -> PairFamily {
        PairFamily { n, pairs: Vec::new() }
    }

    pub(crate) fn from_sorted_unchecked(n: usize, pairs: Vec<Pair>) -> PairFamily {
        debug_assert!(pairs.windows(2).all(|w| w[0] < w[1]));
        PairFamily { n, pairs }
    }

    /// The ambient vertex count.
    pub fn ambient(&self) -> usize {
        self.n
    }

    /// The same pairs over a different ambient set.
    pub fn with_ambient(&self, n: usize) -> Result<PairFamily> {
        PairFamily::new(n, self.iter().map(|p| (p.lo(), p.hi())))
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[Pair] {
        &self.pairs
    }

    pub fn iter(&self) -> impl Iterator<Item = Pair> + '_ {
        self.pairs.iter().copied()
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        Pair::new(x, y).is_ok_and(|p| self.pairs.binary_search(&p).is_ok())
    }

    /// `∪P`.
    pub fn support(&self) -> VertexSet {
        self.iter().fold(VertexSet::EMPTY, |s, p| s | p.as_set())
    }

    pub fn classify(&self) -> Classification {
        let s = self.support().len();
        let k = self.len();
        if s == 2 * k {
            Classification::Pairing
        } else if k >= 2 && s == 2 * k - 1 {
            Classification::QuasiPairing
        } else {
            Classification::Neither
        }
    }

    /// `ι(x)`: the vertices paired with `x`.
    pub fn iota(&self, x: usize) -> VertexSet {
        self.iter().filter_map(|p| p.other(x)).collect()
    }

    /// Connected components of the graph `(∪P, P)`, as sorted blocks.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut comps: Vec<VertexSet> = Vec::new();
        for p in self.iter() {
            let mut merged = p.as_set();
            comps.retain(|c| {
                if c.intersects(merged) {
                    merged = merged | *c;
                    false
                } else {
                    true
                }
            });
            comps.push(merged);
        }
        comps.sort_unstable();
        comps
    }

    /// Irreducibility read off the components of `(∪P, P)`: no nontrivial
    /// interval of the support is a union of components.
    pub fn is_irreducible_by_components(&self) -> bool {
        is_irreducible_partition(self.support(), &self.components()).expect("components partition the support")
    }

    /// Image under `x -> n - 1 - x`.
    pub fn mirror(&self) -> PairFamily {
        let n = self.n;
        let mut pairs: Vec<Pair> = self
            .iter()
            .map(|p| Pair::new(n - 1 - p.lo(), n - 1 - p.hi()).expect("distinct"))
            .collect();
        pairs.sort_unstable();
        PairFamily { n, pairs }
    }
}

/// Comma-separated `i-j` tokens; the empty family prints as nothing.
impl fmt::Display for PairFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.pairs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PairFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PairFamily(n={}, \"{}\")", self.n, self)
    }
}

/// A family of pairwise disjoint pairs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pairing(PairFamily);

impl Pairing {
    pub fn family(&self) -> &PairFamily {
        &self.0
    }

    pub fn into_family(self) -> PairFamily {
        self.0
    }

    /// `i_P(x)`, the vertex paired with `x`.
    pub fn partner(&self, x: usize) -> Result<usize> {
        self.0
            .iter()
            .find_map(|p| p.other(x))
            .ok_or(Error::NotInSupport(x))
    }

    /// The blocks of the pairing, as vertex sets.
    pub fn blocks(&self) -> Vec<VertexSet> {
        let mut b: Vec<VertexSet> = self.0.iter().map(Pair::as_set).collect();
        b.sort_unstable();
        b
    }

    pub fn is_irreducible(&self) -> bool {
        is_irreducible_partition(self.0.support(), &self.blocks()).expect("blocks partition the support")
    }
}

impl TryFrom<PairFamily> for Pairing {
    type Error = Error;

    fn try_from(f: PairFamily) -> Result<Pairing> {
        if f.classify() == Classification::Pairing {
            Ok(Pairing(f))
        } else {
            Err(Error::NotAPairing)
        }
    }
}

/// The distinguished vertices of a quasi-pairing `Q`.
///
/// `v_hat` is the vertex lying in two pairs, `{v_hat, v_minus}` and
/// `{v_hat, v_plus}` with `v_minus < v_plus`. `q_part` is `Q` with those two
/// pairs merged into `b = {v_hat, v_minus, v_plus}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuasiAnatomy {
    pub v_hat: usize,
    pub v_minus: usize,
    pub v_plus: usize,
    pub b: VertexSet,
    pub q_part: Vec<VertexSet>,
}

/// A family of at least two pairs covering `2|Q| - 1` vertices: exactly one
/// vertex lies in two pairs, and the pairs are otherwise disjoint.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuasiPairing {
    family: PairFamily,
    anatomy: QuasiAnatomy,
}

impl QuasiPairing {
    pub fn family(&self) -> &PairFamily {
        &self.family
    }

    pub fn into_family(self) -> PairFamily {
        self.family
    }

    pub fn anatomy(&self) -> &QuasiAnatomy {
        &self.anatomy
    }

    pub fn v_hat(&self) -> usize {
        self.anatomy.v_hat
    }

    pub fn v_minus(&self) -> usize {
        self.anatomy.v_minus
    }

    pub fn v_plus(&self) -> usize {
        self.anatomy.v_plus
    }

    /// `i_Q(x)` for a support vertex other than `v_hat`.
    pub fn partner(&self, x: usize) -> Result<usize> {
        let i = self.family.iota(x);
        if i.len() == 1 {
            Ok(i.min().expect("one element"))
        } else {
            Err(Error::NotInSupport(x))
        }
    }

    pub fn is_irreducible(&self) -> bool {
        is_irreducible_partition(self.family.support(), &self.anatomy.q_part).expect("Q_part partitions the support")
    }
}

impl TryFrom<PairFamily> for QuasiPairing {
    type Error = Error;

    fn try_from(family: PairFamily) -> Result<QuasiPairing> {
        if family.classify() != Classification::QuasiPairing {
            return Err(Error::NotAQuasiPairing);
        }
        let anatomy = anatomy(&family)?;
        Ok(QuasiPairing { family, anatomy })
    }
}

/// Locates `v_hat`, `v_minus`, `v_plus`, `B` and `Q_part` of a quasi-pairing.
pub fn anatomy(q: &PairFamily) -> Result<QuasiAnatomy> {
    if q.classify() != Classification::QuasiPairing {
        return Err(Error::NotAQuasiPairing);
    }
    let v_hat = q
        .support()
        .iter()
        .find(|&v| q.iota(v).len() == 2)
        .ok_or(Error::NotAQuasiPairing)?;
    let partners = q.iota(v_hat);
    let v_minus = partners.min().expect("two partners");
    let v_plus = partners.max().expect("two partners");
    let b = partners | VertexSet::singleton(v_hat);
    let mut q_part: Vec<VertexSet> = q
        .iter()
        .filter(|p| !p.contains(v_hat))
        .map(Pair::as_set)
        .chain(core::iter::once(b))
        .collect();
    q_part.sort_unstable();
    Ok(QuasiAnatomy { v_hat, v_minus, v_plus, b, q_part })
}

/// Intervals of the ordered set `x` with at least two elements and fewer
/// than `|x|`, listed by size and then by position.
pub fn nontrivial_intervals(x: VertexSet) -> Vec<VertexSet> {
    let xs: Vec<usize> = x.iter().collect();
    let k = xs.len();
    let mut out = Vec::new();
    for len in 2..k {
        for start in 0..=k - len {
            out.push(xs[start..start + len].iter().copied().collect());
        }
    }
    out
}

/// Whether no nontrivial interval of `x` is a union of blocks.
///
/// Fails with [`Error::NotAPartition`] unless the blocks are nonempty,
/// pairwise disjoint and cover `x` exactly.
pub fn is_irreducible_partition(x: VertexSet, blocks: &[VertexSet]) -> Result<bool> {
    let mut seen = VertexSet::EMPTY;
    for &b in blocks {
        if b.is_empty() || b.intersects(seen) {
            return Err(Error::NotAPartition);
        }
        seen = seen | b;
    }
    if seen != x {
        return Err(Error::NotAPartition);
    }
    let xs: Vec<usize> = x.iter().collect();
    let k = xs.len();
    for start in 0..k {
        let mut window = VertexSet::EMPTY;
        for (end, &v) in xs.iter().enumerate().skip(start) {
            window.insert(v);
            let len = end - start + 1;
            if len < 2 || len == k {
                continue;
            }
            if blocks.iter().all(|&b| b.is_subset(window) || b.is_disjoint(window)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
