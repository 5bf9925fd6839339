//! Exhaustive minimum-set search for tiny graphs.
//!
//! Identifying codes are searched level by level over the pruned lattice:
//! any identifying code keeps at least `d−1` words of every prefix class
//! (two omitted siblings would share a signature), so a code of size
//! `d^(n−1)(d−1) + j` is a choice of `j` full classes plus one omitted
//! word in each remaining class. That is `C(c, j)·d^(c−j)` candidates for
//! `c = d^(n−1)` classes.

use std::collections::HashMap;

use itertools::Itertools;
use serde::Serialize;

use super::{determining_report, dominating_report, resolving_report, IdentifyingOracle, VerificationReport};
use crate::codeset::{CodeSet, SetKind, Theorem};
use crate::error::{Error, Result};
use crate::graph::{GraphSpace, VertexSet};
use crate::words::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    /// Largest set size tried; `None` searches up to the whole vertex set.
    pub size_cap: Option<usize>,
    /// How many minimum sets to keep; all of them are still counted.
    pub max_witnesses: usize,
    /// Candidates allowed per size level before giving up.
    pub level_budget: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            size_cap: None,
            max_witnesses: 16,
            level_budget: 1 << 26,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LevelStat {
    pub size: usize,
    pub candidates: u64,
    pub valid: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdentifyingSearch {
    /// The minimum size, up to `max_witnesses` codes of that size in
    /// enumeration order, and how many exist in total.
    Found {
        size: usize,
        codes: Vec<CodeSet>,
        count: u64,
        levels: Vec<LevelStat>,
    },
    /// Twins make every subset fail; no search was run.
    Twins { u: Word, v: Word },
    /// No code up to the size cap; `last_level` is the largest size ruled out.
    Exhausted {
        last_level: Option<usize>,
        levels: Vec<LevelStat>,
    },
}

/// A minimum set of some kind together with how many sets share its size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimumSet {
    pub size: usize,
    pub example: CodeSet,
    pub count: u64,
}

/// The first pair of distinct vertices with equal radius-`t` in-balls, in
/// rank order of the later vertex. Radii beyond `n` behave as `n`.
pub fn find_twins(space: GraphSpace, t: u32) -> Result<Option<(Word, Word)>> {
    let count = space.capped_count()? as u64;
    let t = t.min(space.n());
    let mut seen: HashMap<Vec<u64>, u64> = HashMap::with_capacity(count as usize);
    for v in 0..count {
        if let Some(&u) = seen.get(&space.in_ball_ranks(v, t)) {
            return Ok(Some((space.word_of_unchecked(u), space.word_of_unchecked(v))));
        }
        seen.insert(space.in_ball_ranks(v, t), v);
    }
    Ok(None)
}

fn binomial(n: u64, k: u64) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * u128::from(n - i) / u128::from(i + 1))
}

fn level_candidates(classes: u64, d: u64, full: u64) -> u128 {
    binomial(classes, full).saturating_mul(u128::from(d).saturating_pow((classes - full) as u32))
}

fn budget_error(what: &str, size: usize, candidates: u128, budget: u64, last: Option<usize>) -> Error {
    let last = last.map_or_else(|| "none".to_string(), |s| s.to_string());
    Error::Resource(format!(
        "{what} search: level {size} has {candidates} candidates, over the budget of {budget}; \
         last fully exhausted level: {last}"
    ))
}

/// Calls `visit` with the omitted ranks of every candidate at one level:
/// classes in `full` keep all `d` words, every other class drops one.
fn for_each_omission(
    classes: u64,
    d: u64,
    full: usize,
    visit: &mut impl FnMut(&[u64]),
) {
    let mut omitted = Vec::with_capacity(classes as usize);
    for kept in (0..classes).combinations(full) {
        let partial: Vec<u64> = (0..classes).filter(|c| !kept.contains(c)).collect();
        let mut choice = vec![0u64; partial.len()];
        loop {
            omitted.clear();
            omitted.extend(partial.iter().zip(&choice).map(|(&c, &a)| c * d + a));
            visit(&omitted);
            // Odometer over the omitted letter of each partial class.
            let mut i = choice.len();
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                choice[i] += 1;
                if choice[i] < d {
                    break;
                }
                choice[i] = 0;
            }
            if choice.iter().all(|&a| a == 0) {
                break;
            }
        }
    }
}

/// Minimum `t`-identifying codes by exhaustive search from the lower
/// bound upward. Twins are checked first.
pub fn min_identifying_search(space: GraphSpace, t: u32, config: &SearchConfig) -> Result<IdentifyingSearch> {
    if let Some((u, v)) = find_twins(space, t)? {
        return Ok(IdentifyingSearch::Twins { u, v });
    }
    let oracle = IdentifyingOracle::new(space, t)?;
    let count = space.vertex_count()?;
    let d = u64::from(space.d());
    let classes = count / d;
    let base = (classes * (d - 1)) as usize;
    let cap = config.size_cap.unwrap_or(count as usize).min(count as usize);
    let full_set = VertexSet::full(space)?;
    let mut levels = Vec::new();
    let mut last_level = None;
    let mut scratch = HashMap::new();
    for full in 0..=classes as usize {
        let size = base + full;
        if size > cap {
            break;
        }
        let candidates = level_candidates(classes, d, full as u64);
        if candidates > u128::from(config.level_budget) {
            return Err(budget_error("identifying", size, candidates, config.level_budget, last_level));
        }
        let mut codes = Vec::new();
        let mut valid = 0u64;
        for_each_omission(classes, d, full, &mut |omitted| {
            let mut members = full_set.clone();
            for &r in omitted {
                members.remove(r);
            }
            if oracle.is_identifying(&members, &mut scratch) {
                valid += 1;
                if codes.len() < config.max_witnesses {
                    codes.push(CodeSet::identifying(t, Theorem::Search, members));
                }
            }
        });
        levels.push(LevelStat {
            size,
            candidates: candidates as u64,
            valid,
        });
        if valid > 0 {
            return Ok(IdentifyingSearch::Found {
                size,
                codes,
                count: valid,
                levels,
            });
        }
        last_level = Some(size);
    }
    Ok(IdentifyingSearch::Exhausted { last_level, levels })
}

/// Plain subset search by increasing size, starting at `from`.
fn min_subset_search(
    space: GraphSpace,
    kind: SetKind,
    radius: Option<u32>,
    from: usize,
    config: &SearchConfig,
    mut check: impl FnMut(&VertexSet) -> Result<VerificationReport>,
) -> Result<Option<MinimumSet>> {
    let count = space.capped_count()?;
    let cap = config.size_cap.unwrap_or(count).min(count);
    let mut last_level = None;
    for size in from..=cap {
        let candidates = binomial(count as u64, size as u64);
        if candidates > u128::from(config.level_budget) {
            return Err(budget_error(&format!("{kind:?}").to_lowercase(), size, candidates, config.level_budget, last_level));
        }
        let mut example = None;
        let mut valid = 0u64;
        for subset in (0..count as u64).combinations(size) {
            let members = VertexSet::from_ranks(space, subset)?;
            if check(&members)?.valid {
                valid += 1;
                example.get_or_insert(members);
            }
        }
        if let Some(members) = example {
            return Ok(Some(MinimumSet {
                size,
                example: CodeSet::new(kind, radius, Some(Theorem::Search), members),
                count: valid,
            }));
        }
        last_level = Some(size);
    }
    Ok(None)
}

/// Smallest `t`-dominating set, or `None` past the size cap.
pub fn min_dominating_search(space: GraphSpace, t: u32, config: &SearchConfig) -> Result<Option<MinimumSet>> {
    min_subset_search(space, SetKind::Dominating, Some(t), 1, config, |m| dominating_report(m, t))
}

/// Smallest resolving set, or `None` past the size cap.
pub fn min_resolving_search(space: GraphSpace, config: &SearchConfig) -> Result<Option<MinimumSet>> {
    min_subset_search(space, SetKind::Resolving, None, 0, config, resolving_report)
}

/// Smallest determining set, or `None` past the size cap.
pub fn min_determining_search(space: GraphSpace, config: &SearchConfig) -> Result<Option<MinimumSet>> {
    min_subset_search(space, SetKind::Determining, None, 0, config, determining_report)
}
