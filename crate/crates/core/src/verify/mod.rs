//! Brute-force oracles. Everything here works from the definitions, using
//! only the overlap distance of the graph module.

mod automorphism;
mod search;

pub use automorphism::{enumerate_automorphisms, symbol_automorphism, AUTOMORPHISM_CAP};
pub use search::{
    find_twins, min_determining_search, min_dominating_search, min_identifying_search,
    min_resolving_search, IdentifyingSearch, LevelStat, MinimumSet, SearchConfig,
};

use std::collections::HashMap;

use serde::Serialize;

use crate::codeset::CodeSet;
use crate::cover::SymbolPermutation;
use crate::error::{Error, Result};
use crate::graph::{GraphSpace, VertexSet};
use crate::words::Word;

/// Largest alphabet whose symbol permutations are enumerated.
pub const PERMUTATION_CAP: u32 = 10;

/// `ID_S(v)` as strictly increasing ranks.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Signature {
    ranks: Vec<u64>,
}

impl Signature {
    pub fn new(mut ranks: Vec<u64>) -> Self {
        ranks.sort_unstable();
        ranks.dedup();
        Self { ranks }
    }

    pub fn from_words(space: GraphSpace, words: &[Word]) -> Result<Self> {
        let ranks = words
            .iter()
            .map(|w| space.vertex_index(w))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(ranks))
    }

    /// Parses `"001,100"`; the empty string is the empty signature.
    pub fn parse(space: GraphSpace, literal: &str) -> Result<Self> {
        let words = literal
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| Word::parse(s, space.d()))
            .collect::<Result<Vec<_>>>()?;
        Self::from_words(space, &words)
    }

    pub fn ranks(&self) -> &[u64] {
        &self.ranks
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FailureKind {
    None,
    EmptySignature,
    DuplicateSignature,
    Undominated,
    UnresolvedPair,
    NontrivialStabilizer,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub valid: bool,
    pub failure_kind: FailureKind,
    /// Up to two vertices exhibiting the failure.
    pub witnesses: Vec<Word>,
    /// Set for `nontrivial_stabilizer` failures.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub permutation: Option<SymbolPermutation>,
    pub checked_count: u64,
}

impl VerificationReport {
    fn ok(checked_count: u64) -> Self {
        Self {
            valid: true,
            failure_kind: FailureKind::None,
            witnesses: Vec::new(),
            permutation: None,
            checked_count,
        }
    }

    fn fail(kind: FailureKind, witnesses: Vec<Word>, checked_count: u64) -> Self {
        Self {
            valid: false,
            failure_kind: kind,
            witnesses,
            permutation: None,
            checked_count,
        }
    }
}

fn check_radius(space: GraphSpace, t: u32) -> Result<()> {
    if t > space.n() {
        return Err(Error::Range(format!("radius {t} exceeds n = {}", space.n())));
    }
    Ok(())
}

/// `ID_S(v) = B_t^-(v) ∩ S`.
pub fn id_signature(code: &CodeSet, v: &Word, t: u32) -> Result<Signature> {
    let space = code.space();
    space
        .check_word(v)
        .map_err(|_| Error::SpaceMismatch {
            expected_d: space.d(),
            expected_n: space.n(),
            got_d: v.alphabet_size(),
            got_n: v.len() as u32,
        })?;
    check_radius(space, t)?;
    let rank = space.vertex_index(v)?;
    let ranks = space
        .in_ball_ranks(rank, t)
        .into_iter()
        .filter(|&r| code.members.contains(r))
        .collect();
    Ok(Signature { ranks })
}

/// Precomputed in-balls for repeated identifying checks on one space.
pub struct IdentifyingOracle {
    space: GraphSpace,
    in_balls: Vec<Vec<u32>>,
}

impl IdentifyingOracle {
    pub fn new(space: GraphSpace, t: u32) -> Result<Self> {
        let count = space.capped_count()?;
        check_radius(space, t)?;
        let in_balls = (0..count as u64)
            .map(|v| space.in_ball_ranks(v, t).into_iter().map(|r| r as u32).collect())
            .collect();
        Ok(Self { space, in_balls })
    }

    pub fn space(&self) -> GraphSpace {
        self.space
    }

    fn signature(&self, members: &VertexSet, v: usize) -> Vec<u32> {
        self.in_balls[v]
            .iter()
            .copied()
            .filter(|&r| members.contains(u64::from(r)))
            .collect()
    }

    pub fn check(&self, members: &VertexSet) -> VerificationReport {
        let word = |r: usize| self.space.word_of_unchecked(r as u64);
        let mut seen: HashMap<Vec<u32>, usize> = HashMap::with_capacity(self.in_balls.len());
        for v in 0..self.in_balls.len() {
            let sig = self.signature(members, v);
            if sig.is_empty() {
                return VerificationReport::fail(FailureKind::EmptySignature, vec![word(v)], v as u64 + 1);
            }
            if let Some(&u) = seen.get(&sig) {
                return VerificationReport::fail(
                    FailureKind::DuplicateSignature,
                    vec![word(u), word(v)],
                    v as u64 + 1,
                );
            }
            seen.insert(sig, v);
        }
        VerificationReport::ok(self.in_balls.len() as u64)
    }

    /// Like [`check`](Self::check) without building a report; used in hot
    /// search loops.
    pub(crate) fn is_identifying(&self, members: &VertexSet, scratch: &mut HashMap<Vec<u32>, ()>) -> bool {
        scratch.clear();
        for v in 0..self.in_balls.len() {
            let sig = self.signature(members, v);
            if sig.is_empty() || scratch.insert(sig, ()).is_some() {
                return false;
            }
        }
        true
    }
}

/// Every signature non-empty and pairwise distinct.
pub fn verify_identifying(code: &CodeSet, t: u32) -> Result<VerificationReport> {
    Ok(IdentifyingOracle::new(code.space(), t)?.check(&code.members))
}

pub(crate) fn dominating_report(members: &VertexSet, t: u32) -> Result<VerificationReport> {
    let space = members.space();
    let count = space.capped_count()?;
    check_radius(space, t)?;
    for v in 0..count as u64 {
        let mut hit = false;
        space.for_each_in_ball(v, t, &mut |r| hit |= members.contains(r));
        if !hit {
            return Ok(VerificationReport::fail(
                FailureKind::Undominated,
                vec![space.word_of_unchecked(v)],
                v + 1,
            ));
        }
    }
    Ok(VerificationReport::ok(count as u64))
}

/// Every radius-`t` in-ball meets the set.
pub fn verify_dominating(set: &CodeSet, t: u32) -> Result<VerificationReport> {
    dominating_report(&set.members, t)
}

pub(crate) fn resolving_report(members: &VertexSet) -> Result<VerificationReport> {
    let space = members.space();
    let count = space.capped_count()?;
    let landmarks: Vec<u64> = members.iter().collect();
    let mut seen: HashMap<Vec<u32>, u64> = HashMap::with_capacity(count);
    for v in 0..count as u64 {
        let profile: Vec<u32> = landmarks.iter().map(|&s| space.distance_ranks(s, v)).collect();
        if let Some(&u) = seen.get(&profile) {
            return Ok(VerificationReport::fail(
                FailureKind::UnresolvedPair,
                vec![space.word_of_unchecked(u), space.word_of_unchecked(v)],
                v + 1,
            ));
        }
        seen.insert(profile, v);
    }
    Ok(VerificationReport::ok(count as u64))
}

/// Every pair of vertices is separated by the distance from some member.
pub fn verify_resolving(set: &CodeSet) -> Result<VerificationReport> {
    resolving_report(&set.members)
}

pub(crate) fn determining_report(members: &VertexSet) -> Result<VerificationReport> {
    let space = members.space();
    if space.d() > PERMUTATION_CAP {
        return Err(Error::Resource(format!(
            "symbol permutations of A_{} are not enumerated (cap {PERMUTATION_CAP})",
            space.d()
        )));
    }
    let fixed: Vec<Word> = members.words().collect();
    let mut checked = 0u64;
    for sigma in SymbolPermutation::all(space.d()) {
        checked += 1;
        if sigma.is_identity() {
            continue;
        }
        let fixes_all = fixed
            .iter()
            .all(|w| sigma.apply(w).map(|image| &image == w).unwrap_or(false));
        if fixes_all {
            let mut report = VerificationReport::fail(FailureKind::NontrivialStabilizer, Vec::new(), checked);
            report.permutation = Some(sigma);
            return Ok(report);
        }
    }
    Ok(VerificationReport::ok(checked))
}

/// Only the identity automorphism fixes every member. For `n ≥ 2` the
/// automorphisms are the symbol permutations; for `n = 1` the graph is
/// complete with loops, so every vertex permutation is an automorphism and
/// those again coincide with the symbol permutations.
pub fn verify_determining(set: &CodeSet) -> Result<VerificationReport> {
    determining_report(&set.members)
}

/// Inverted signature table for a code at a fixed radius.
pub struct SignatureTable {
    space: GraphSpace,
    table: HashMap<Vec<u64>, Vec<u64>>,
}

impl SignatureTable {
    pub fn build(code: &CodeSet, t: u32) -> Result<Self> {
        let space = code.space();
        let count = space.capped_count()?;
        check_radius(space, t)?;
        let mut table: HashMap<Vec<u64>, Vec<u64>> = HashMap::with_capacity(count);
        for v in 0..count as u64 {
            let sig: Vec<u64> = space
                .in_ball_ranks(v, t)
                .into_iter()
                .filter(|&r| code.members.contains(r))
                .collect();
            table.entry(sig).or_default().push(v);
        }
        Ok(Self { space, table })
    }

    /// The unique vertex with this signature, `None` when nothing matches,
    /// or an error when the code fails to separate two matching vertices.
    pub fn decode(&self, observed: &Signature) -> Result<Option<Word>> {
        if observed.is_empty() {
            return Ok(None);
        }
        match self.table.get(observed.ranks()).map(Vec::as_slice) {
            None | Some([]) => Ok(None),
            Some([v]) => Ok(Some(self.space.word_of_unchecked(*v))),
            Some([u, v, ..]) => Err(Error::Ambiguous(
                self.space.word_of_unchecked(*u),
                self.space.word_of_unchecked(*v),
            )),
        }
    }
}

/// One-shot form of [`SignatureTable::decode`].
pub fn decode_signature(code: &CodeSet, t: u32, observed: &Signature) -> Result<Option<Word>> {
    SignatureTable::build(code, t)?.decode(observed)
}
