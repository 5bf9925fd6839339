//! Dominating, resolving and determining sets, and the symbol
//! permutations that realize the automorphisms of `B(d,n)`.

use itertools::Itertools;
use serde::Serialize;

use crate::codeset::{CodeSet, SetKind, Theorem};
use crate::error::{Error, Result};
use crate::graph::{GraphSpace, VertexSet};
use crate::verify;
use crate::words::Word;

/// A bijection on `{0, …, d−1}`, stored as its image array.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct SymbolPermutation {
    image: Vec<u8>,
}

impl SymbolPermutation {
    pub fn new(image: Vec<u8>) -> Result<Self> {
        let d = image.len();
        let mut seen = vec![false; d];
        for &s in &image {
            match seen.get_mut(s as usize) {
                Some(slot) if !*slot => *slot = true,
                _ => return Err(Error::Precondition(format!("{image:?} is not a permutation of 0..{d}"))),
            }
        }
        Ok(Self { image })
    }

    pub fn identity(d: u32) -> Self {
        Self {
            image: (0..d as u8).collect(),
        }
    }

    /// All `d!` permutations in lexicographic order of image arrays.
    pub fn all(d: u32) -> impl Iterator<Item = SymbolPermutation> {
        (0..d as u8)
            .permutations(d as usize)
            .map(|image| SymbolPermutation { image })
    }

    pub fn alphabet_size(&self) -> u32 {
        self.image.len() as u32
    }

    pub fn image(&self) -> &[u8] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &s)| i == s as usize)
    }

    pub fn apply(&self, w: &Word) -> Result<Word> {
        apply_symbol_perm(self, w)
    }
}

/// Letter-wise image `σ(x₁)…σ(x_n)`.
pub fn apply_symbol_perm(sigma: &SymbolPermutation, w: &Word) -> Result<Word> {
    if sigma.alphabet_size() != w.alphabet_size() {
        return Err(Error::Alphabet {
            left: sigma.alphabet_size(),
            right: w.alphabet_size(),
        });
    }
    Ok(Word::from_raw(
        w.letters().iter().map(|&x| sigma.image[x as usize]).collect(),
        w.alphabet_size(),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundCase {
    /// `n ≡ t (mod t+1)`: the bound gains one.
    Congruent,
    Other,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DominationBound {
    pub value: u64,
    pub case_tag: BoundCase,
}

fn check_t_domination(space: GraphSpace, t: u32) -> Result<()> {
    if t == 0 || t >= space.n() {
        return Err(Error::UnsupportedParameters {
            construction: "tdom",
            reason: format!("need 1 ≤ t < n, got t = {t}, n = {}", space.n()),
            hint: None,
        });
    }
    Ok(())
}

/// Runs `report` when the space is small enough and fails loudly on a
/// bad construction.
fn gate(
    construction: &'static str,
    space: GraphSpace,
    report: impl FnOnce() -> Result<verify::VerificationReport>,
) -> Result<()> {
    if space.vertex_count()? > crate::SELF_CHECK_CAP {
        return Ok(());
    }
    let report = report()?;
    if report.valid {
        Ok(())
    } else {
        Err(Error::ConstructionUnverified {
            construction,
            report: Box::new(report),
        })
    }
}

/// `⌈dⁿ/(d+1)⌉` consecutive ranks starting at the offset
/// `m = Σ_{k=1}^{⌊n/2⌋} d^(n−2k)`, wrapping modulo `dⁿ`.
pub fn dominating_1(space: GraphSpace) -> Result<CodeSet> {
    let count = space.capped_count()? as u64;
    let d = u64::from(space.d());
    let n = space.n();
    let m = (1..=n / 2).map(|k| space.pow(n - 2 * k)).sum::<u64>() % count;
    let size = count.div_ceil(d + 1);
    let members = VertexSet::from_ranks(space, (m..m + size).map(|i| i % count))?;
    gate("domexact", space, || verify::dominating_report(&members, 1))?;
    Ok(CodeSet::new(SetKind::Dominating, Some(1), Some(Theorem::DomExact), members))
}

/// Words whose first non-zero letter sits at a multiple of `t+1`, plus `0ⁿ`.
pub fn dominating_t(space: GraphSpace, t: u32) -> Result<CodeSet> {
    check_t_domination(space, t)?;
    let count = space.capped_count()? as u64;
    let n = space.n();
    let step = t + 1;
    let mut members = VertexSet::empty(space)?;
    members.insert(0);
    // First non-zero letter at position p = k(t+1): ranks in [d^(n−p), d^(n−p+1)).
    for k in 1..=n / step {
        let p = k * step;
        let lo = space.pow(n - p);
        let hi = (lo * u64::from(space.d())).min(count);
        for r in lo..hi {
            members.insert(r);
        }
    }
    debug_assert_eq!(members.len() as u64, dominating_t_size(space, t)?);
    gate("tdom", space, || verify::dominating_report(&members, t))?;
    Ok(CodeSet::new(SetKind::Dominating, Some(t), Some(Theorem::DomT), members))
}

fn domination_sum(space: GraphSpace, t: u32) -> u64 {
    let n = space.n();
    let d = u64::from(space.d());
    (1..=n / (t + 1))
        .map(|k| space.pow(n - k * (t + 1)) * (d - 1))
        .sum()
}

/// `1 + Σ_{k=1}^{⌊n/(t+1)⌋} d^(n−k(t+1))(d−1)`, in exact integers.
pub fn dominating_t_size(space: GraphSpace, t: u32) -> Result<u64> {
    check_t_domination(space, t)?;
    space.vertex_count()?;
    Ok(1 + domination_sum(space, t))
}

/// The summation, plus one when `n ≡ t (mod t+1)`.
pub fn dominating_t_lower_bound(space: GraphSpace, t: u32) -> Result<DominationBound> {
    check_t_domination(space, t)?;
    space.vertex_count()?;
    let sum = domination_sum(space, t);
    Ok(if space.n() % (t + 1) == t {
        DominationBound {
            value: sum + 1,
            case_tag: BoundCase::Congruent,
        }
    } else {
        DominationBound {
            value: sum,
            case_tag: BoundCase::Other,
        }
    })
}

fn words_by_last_letter(space: GraphSpace, keep: impl Fn(u64) -> bool) -> Result<VertexSet> {
    let count = space.capped_count()? as u64;
    let d = u64::from(space.d());
    VertexSet::from_ranks(space, (0..count).filter(|r| keep(r % d)))
}

/// Every word not ending in `0`: all but one word of each prefix class.
pub fn resolving_set(space: GraphSpace) -> Result<CodeSet> {
    let members = words_by_last_letter(space, |last| last != 0)?;
    gate("metdim", space, || verify::resolving_report(&members))?;
    Ok(CodeSet::new(SetKind::Resolving, None, Some(Theorem::MetDim), members))
}

/// `{w ⊕ 0}`, unverified. Resolving only for `d = 2`, where it is the
/// complement image of [`resolving_set`].
pub fn resolving_set_literal(space: GraphSpace) -> Result<CodeSet> {
    let members = words_by_last_letter(space, |last| last == 0)?;
    Ok(CodeSet::new(SetKind::Resolving, None, Some(Theorem::MetDim), members))
}

/// Letters `0..d−2` packed in order into `⌈(d−1)/n⌉` words, padded with `0`.
pub fn determining_set(space: GraphSpace) -> Result<CodeSet> {
    let d = space.d();
    let n = space.n() as usize;
    let letters: Vec<u8> = (0..(d - 1) as u8).collect();
    let words = letters
        .chunks(n)
        .map(|chunk| {
            let mut w = chunk.to_vec();
            w.resize(n, 0);
            Word::from_raw(w, d)
        })
        .collect::<Vec<_>>();
    let members = VertexSet::from_words(space, &words)?;
    if d <= verify::PERMUTATION_CAP {
        gate("detnum", space, || verify::determining_report(&members))?;
    }
    Ok(CodeSet::new(SetKind::Determining, None, Some(Theorem::DetNum), members))
}
