//! Implicit model of the directed de Bruijn graph `B(d,n)`.
//!
//! Vertices are words of length `n`, ranked in base `d` with the first
//! letter most significant. No adjacency is stored: every distance and
//! neighborhood query is answered from the overlap of two words.

use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::words::{Word, MAX_ALPHABET};

/// Vertex count above which set-valued operations refuse to run.
pub const SET_CAP: u64 = 1 << 26;

/// Vertex count above which DOT export refuses to run.
pub const DOT_CAP: u64 = 512;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GraphSpace {
    d: u32,
    n: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    In,
    Out,
}

impl GraphSpace {
    pub fn new(d: u32, n: u32) -> Result<Self> {
        if !(2..=MAX_ALPHABET).contains(&d) {
            return Err(Error::Range(format!(
                "alphabet size {d} outside 2..={MAX_ALPHABET}"
            )));
        }
        if n < 1 {
            return Err(Error::Range("word length must be at least 1".into()));
        }
        Ok(Self { d, n })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `d^n`, or a range error when it does not fit in 64 bits.
    pub fn vertex_count(&self) -> Result<u64> {
        u64::from(self.d)
            .checked_pow(self.n)
            .ok_or_else(|| Error::Range(format!("{self} has more than 2^64 vertices")))
    }

    /// Vertex count for set-valued work, enforcing [`SET_CAP`].
    pub fn capped_count(&self) -> Result<usize> {
        match self.vertex_count() {
            Ok(count) if count <= SET_CAP => Ok(count as usize),
            _ => Err(Error::Resource(format!(
                "{self} exceeds the {SET_CAP}-vertex cap for set operations"
            ))),
        }
    }

    /// `d^k`; callers guarantee `k ≤ n` inside a capped space.
    pub(crate) fn pow(&self, k: u32) -> u64 {
        u64::from(self.d).pow(k)
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        if w.alphabet_size() != self.d {
            return Err(Error::Alphabet {
                left: self.d,
                right: w.alphabet_size(),
            });
        }
        if w.len() != self.n as usize {
            return Err(Error::Range(format!(
                "word {w} has length {}, expected {}",
                w.len(),
                self.n
            )));
        }
        Ok(())
    }

    /// Base-`d` rank, `Σ w_i · d^(n-i)`.
    pub fn vertex_index(&self, w: &Word) -> Result<u64> {
        self.check_word(w)?;
        self.vertex_count()?;
        Ok(w
            .letters()
            .iter()
            .fold(0u64, |acc, &a| acc * u64::from(self.d) + u64::from(a)))
    }

    /// Inverse of [`vertex_index`](Self::vertex_index).
    pub fn word_of(&self, rank: u64) -> Result<Word> {
        let count = self.vertex_count()?;
        if rank >= count {
            return Err(Error::Range(format!("rank {rank} ≥ {count} in {self}")));
        }
        Ok(self.word_of_unchecked(rank))
    }

    pub(crate) fn word_of_unchecked(&self, mut rank: u64) -> Word {
        let d = u64::from(self.d);
        let mut letters = vec![0u8; self.n as usize];
        for slot in letters.iter_mut().rev() {
            *slot = (rank % d) as u8;
            rank /= d;
        }
        Word::from_raw(letters, self.d)
    }

    /// Length of the shortest directed path from `u` to `v`: the least `t`
    /// with `u(t+1:n) = v(1:n-t)`.
    pub fn directed_distance(&self, u: &Word, v: &Word) -> Result<u32> {
        self.check_word(u)?;
        self.check_word(v)?;
        let (u, v) = (u.letters(), v.letters());
        let n = self.n as usize;
        Ok((0..=n).find(|&t| u[t..] == v[..n - t]).unwrap_or(n) as u32)
    }

    /// Rank form of [`directed_distance`](Self::directed_distance).
    pub(crate) fn distance_ranks(&self, u: u64, v: u64) -> u32 {
        (0..=self.n)
            .find(|&t| u % self.pow(self.n - t) == v / self.pow(t))
            .unwrap_or(self.n)
    }

    /// `B_t^-(v)` or `B_t^+(v)`.
    pub fn ball(&self, v: &Word, t: u32, direction: Direction) -> Result<VertexSet> {
        let rank = self.vertex_index(v)?;
        let mut set = VertexSet::empty(*self)?;
        if t > self.n {
            return Err(Error::Range(format!("radius {t} exceeds n = {}", self.n)));
        }
        let mut push = |r: u64| {
            set.insert(r);
        };
        match direction {
            Direction::In => self.for_each_in_ball(rank, t, &mut push),
            Direction::Out => self.for_each_out_ball(rank, t, &mut push),
        }
        Ok(set)
    }

    /// Visits `w ⊕ v(1:n-s)` for each `s ≤ t` and each `w ∈ A^s`, smallest
    /// `s` first. A vertex may be visited more than once.
    pub(crate) fn for_each_in_ball(&self, v: u64, t: u32, f: &mut impl FnMut(u64)) {
        for s in 0..=t.min(self.n) {
            let tail = v / self.pow(s);
            let stride = self.pow(self.n - s);
            for head in 0..self.pow(s) {
                f(head * stride + tail);
            }
        }
    }

    /// Visits `v(s+1:n) ⊕ w` for each `s ≤ t` and each `w ∈ A^s`.
    pub(crate) fn for_each_out_ball(&self, v: u64, t: u32, f: &mut impl FnMut(u64)) {
        for s in 0..=t.min(self.n) {
            let base = (v % self.pow(self.n - s)) * self.pow(s);
            for tail in 0..self.pow(s) {
                f(base + tail);
            }
        }
    }

    /// Sorted, deduplicated ranks of `B_t^-(v)`.
    pub(crate) fn in_ball_ranks(&self, v: u64, t: u32) -> Vec<u64> {
        let mut out = Vec::new();
        self.for_each_in_ball(v, t, &mut |r| out.push(r));
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Out-neighbors `v(2:n) ⊕ a`, in letter order.
    pub fn successors(&self, v: u64) -> impl Iterator<Item = u64> {
        let base = (v % self.pow(self.n - 1)) * u64::from(self.d);
        (0..u64::from(self.d)).map(move |a| base + a)
    }

    pub fn has_edge(&self, u: u64, v: u64) -> bool {
        u % self.pow(self.n - 1) == v / u64::from(self.d)
    }

    /// Ranks sharing the prefix of `v`: `{v⁻ ⊕ a : a ∈ A_d}`.
    pub fn prefix_class(&self, v: u64) -> std::ops::Range<u64> {
        let start = v - v % u64::from(self.d);
        start..start + u64::from(self.d)
    }

    pub fn vertices(&self) -> Result<impl Iterator<Item = Word> + '_> {
        let count = self.capped_count()? as u64;
        Ok((0..count).map(move |r| self.word_of_unchecked(r)))
    }

    /// Graphviz rendering of the whole digraph, one edge per
    /// (vertex, letter) pair, loops included.
    pub fn to_dot(&self) -> Result<String> {
        let count = self.vertex_count()?;
        if count > DOT_CAP {
            return Err(Error::Resource(format!(
                "DOT export is limited to {DOT_CAP} vertices; {self} has {count}"
            )));
        }
        let mut out = format!("digraph \"B({},{})\" {{\n", self.d, self.n);
        for u in 0..count {
            let _ = writeln!(out, "  \"{}\";", self.word_of_unchecked(u));
        }
        for u in 0..count {
            let from = self.word_of_unchecked(u);
            for v in self.successors(u) {
                let _ = writeln!(out, "  \"{from}\" -> \"{}\";", self.word_of_unchecked(v));
            }
        }
        out.push_str("}\n");
        Ok(out)
    }
}

impl fmt::Display for GraphSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B({},{})", self.d, self.n)
    }
}

/// Bitset over the ranks of one space.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    space: GraphSpace,
    universe: usize,
    blocks: Vec<u64>,
}

impl VertexSet {
    pub fn empty(space: GraphSpace) -> Result<Self> {
        let universe = space.capped_count()?;
        Ok(Self {
            space,
            universe,
            blocks: vec![0; universe.div_ceil(64)],
        })
    }

    pub fn full(space: GraphSpace) -> Result<Self> {
        let mut set = Self::empty(space)?;
        for r in 0..set.universe as u64 {
            set.insert(r);
        }
        Ok(set)
    }

    pub fn from_ranks(space: GraphSpace, ranks: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut set = Self::empty(space)?;
        for r in ranks {
            if r >= set.universe as u64 {
                return Err(Error::Range(format!("rank {r} outside {space}")));
            }
            set.insert(r);
        }
        Ok(set)
    }

    pub fn from_words<'a>(space: GraphSpace, words: impl IntoIterator<Item = &'a Word>) -> Result<Self> {
        let mut set = Self::empty(space)?;
        for w in words {
            set.insert(space.vertex_index(w)?);
        }
        Ok(set)
    }

    pub fn space(&self) -> GraphSpace {
        self.space
    }

    /// Returns whether the rank was newly inserted.
    pub fn insert(&mut self, rank: u64) -> bool {
        let (block, bit) = (rank as usize / 64, rank % 64);
        let fresh = self.blocks[block] & (1 << bit) == 0;
        self.blocks[block] |= 1 << bit;
        fresh
    }

    pub fn remove(&mut self, rank: u64) -> bool {
        let (block, bit) = (rank as usize / 64, rank % 64);
        let present = self.blocks[block] & (1 << bit) != 0;
        self.blocks[block] &= !(1 << bit);
        present
    }

    pub fn contains(&self, rank: u64) -> bool {
        (rank as usize) < self.universe && self.blocks[rank as usize / 64] & (1 << (rank % 64)) != 0
    }

    pub fn contains_word(&self, w: &Word) -> bool {
        self.space
            .vertex_index(w)
            .map(|r| self.contains(r))
            .unwrap_or(false)
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    /// Ranks in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.blocks.iter().enumerate().flat_map(|(i, &block)| {
            let mut rest = block;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as u64;
                rest &= rest - 1;
                Some(i as u64 * 64 + bit)
            })
        })
    }

    pub fn words(&self) -> impl Iterator<Item = Word> + '_ {
        self.iter().map(|r| self.space.word_of_unchecked(r))
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.blocks.iter().zip(&other.blocks).all(|(a, b)| a & !b == 0)
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a |= b;
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set()
            .entries(self.words().map(|w| w.to_string()))
            .finish()
    }
}
