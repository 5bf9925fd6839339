//! Identifying-code constructions on `B(d,n)`.
//!
//! Every constructor decides membership word by word from periodicity
//! tests on windows of `x^(t,m)`, the word with its `t`-th letter shifted
//! by `m`. Results are checked by the brute-force oracle whenever the
//! graph has at most [`SELF_CHECK_CAP`](crate::SELF_CHECK_CAP) vertices.

use crate::codeset::{CodeSet, Theorem};
use crate::error::{Error, Result};
use crate::graph::{GraphSpace, VertexSet};
use crate::verify::{self, IdentifyingOracle};
use crate::words::{is_ell_periodic, is_almost_ell_periodic, is_periodic_or_almost, Word};

/// `d^(n−1)(d−1)`, a lower bound on any `t`-identifying code for every `t`.
pub fn id_lower_bound(space: GraphSpace) -> Result<u64> {
    space.vertex_count()?;
    Ok(space.pow(space.n() - 1) * u64::from(space.d() - 1))
}

fn unsupported(construction: &'static str, reason: String, hint: Option<&'static str>) -> Error {
    Error::UnsupportedParameters {
        construction,
        reason,
        hint,
    }
}

/// Collects the words accepted by `member`, then runs the oracle.
fn build(
    space: GraphSpace,
    t: u32,
    theorem: Theorem,
    mut member: impl FnMut(&[u8]) -> bool,
) -> Result<CodeSet> {
    let count = space.capped_count()? as u64;
    let mut members = VertexSet::empty(space)?;
    let mut letters = vec![0u8; space.n() as usize];
    for r in 0..count {
        write_letters(space, r, &mut letters);
        if member(&letters) {
            members.insert(r);
        }
    }
    self_check(CodeSet::identifying(t, theorem, members))
}

fn write_letters(space: GraphSpace, mut rank: u64, out: &mut [u8]) {
    let d = u64::from(space.d());
    for slot in out.iter_mut().rev() {
        *slot = (rank % d) as u8;
        rank /= d;
    }
}

fn self_check(code: CodeSet) -> Result<CodeSet> {
    let space = code.space();
    let t = code.radius.unwrap_or(1);
    if space.vertex_count()? <= crate::SELF_CHECK_CAP {
        let report = IdentifyingOracle::new(space, t)?.check(&code.members);
        if !report.valid {
            return Err(Error::ConstructionUnverified {
                construction: code.theorem.map_or("unknown", Theorem::tag),
                report: Box::new(report),
            });
        }
    }
    Ok(code)
}

/// All words with `x₁ ≠ x_n`.
pub fn code_simple_1id(space: GraphSpace) -> Result<CodeSet> {
    let n = space.n();
    if n < 2 || (space.d() == 2 && n.is_multiple_of(2)) {
        return Err(unsupported(
            "simple1",
            format!("needs n ≥ 2 with n odd or d > 2, got B({},{n})", space.d()),
            (n >= 3).then_some("mpt10"),
        ));
    }
    build(space, 1, Theorem::Simple1, |x| x[0] != x[x.len() - 1])
}

/// How the periodicity tests of the `mpt10` construction are read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mpt10Reading {
    /// "ℓ-periodic or almost ℓ-periodic" in every test. Optimal and valid.
    #[default]
    Uniform,
    /// Almost-periodicity only in the window test of the first set. Yields
    /// oversized sets; kept for comparison.
    Literal,
}

/// Optimal 1-identifying code for `n ≥ 3`.
pub fn code_mpt10_1id(space: GraphSpace) -> Result<CodeSet> {
    code_mpt10_1id_with(space, Mpt10Reading::Uniform)
}

/// Uniform reading is self-checked; the literal one is returned as is.
pub fn code_mpt10_1id_with(space: GraphSpace, reading: Mpt10Reading) -> Result<CodeSet> {
    let (d, n) = (space.d(), space.n() as usize);
    if n < 3 {
        return Err(unsupported(
            "mpt10",
            format!("needs n ≥ 3, got n = {n}"),
            (n == 2 && d > 2).then_some("simple1"),
        ));
    }
    let uniform = reading == Mpt10Reading::Uniform;
    // Strict periodicity, or also almost-periodicity under the uniform reading.
    let periodic = |w: &[u8], ell: usize| {
        if uniform {
            is_periodic_or_almost(w, ell)
        } else {
            is_ell_periodic(w, ell)
        }
    };
    let mut window = Vec::with_capacity(n);
    let count = space.capped_count()? as u64;
    let mut members = VertexSet::empty(space)?;
    let mut x = vec![0u8; n];
    for r in 0..count {
        write_letters(space, r, &mut x);
        let last = x[n - 1];
        let mut first = false;
        let mut any_periodic = false;
        for m in 0..d as u8 {
            // x^(1,m)(1 : n−1)
            window.clear();
            window.extend_from_slice(&x[..n - 1]);
            window[0] = shift(x[0], m, d);
            for ell in 1..=2 {
                any_periodic |= periodic(&window, ell);
                if is_periodic_or_almost(&window, ell) {
                    window.push(shift(last, m, d));
                    first |= !periodic(&window, ell);
                    window.pop();
                }
            }
        }
        if first || (x[0] != last && !any_periodic) {
            members.insert(r);
        }
    }
    let code = CodeSet::identifying(1, Theorem::Mpt10, members);
    if uniform {
        self_check(code)
    } else {
        Ok(code)
    }
}

fn shift(letter: u8, m: u8, d: u32) -> u8 {
    ((u32::from(letter) + u32::from(m)) % d) as u8
}

fn alternating(a: u8, b: u8, len: usize) -> Vec<u8> {
    (0..len).map(|i| if i % 2 == 0 { a } else { b }).collect()
}

fn rank_of(space: GraphSpace, letters: Vec<u8>) -> u64 {
    space.vertex_index(&Word::from_raw(letters, space.d())).expect("letters fit the space")
}

/// The `twoid` base set and odd-`n` swap, without the binary repair.
fn twoid_members(space: GraphSpace) -> Result<VertexSet> {
    let (d, n) = (space.d(), space.n() as usize);
    if n <= 3 {
        return Err(unsupported("twoid", format!("needs n > 3, got n = {n}"), None));
    }
    let count = space.capped_count()? as u64;
    let mut members = VertexSet::empty(space)?;
    let mut x = vec![0u8; n];
    for r in 0..count {
        write_letters(space, r, &mut x);
        if x[1] != x[n - 1] {
            members.insert(r);
        }
    }
    if n % 2 == 1 {
        for a in 0..d as u8 {
            for b in (0..d as u8).filter(|&b| b != a) {
                // (ab)^k a out, (ab)^k b in.
                let mut word = alternating(a, b, n);
                members.remove(rank_of(space, word.clone()));
                word[n - 1] = b;
                members.insert(rank_of(space, word));
            }
        }
    }
    Ok(members)
}

/// Optimal 2-identifying code for `n > 3`: every word with `x₂ ≠ x_n`,
/// with alternating words swapped for odd `n`. Over two letters the odd
/// case also trades `aa(ab)^(k−1)b` for `aa(ab)^(k−1)a`, without which
/// `(ab)^k a` and `(ba)^k b` collide.
pub fn code_2id(space: GraphSpace) -> Result<CodeSet> {
    let mut members = twoid_members(space)?;
    let n = space.n() as usize;
    if space.d() == 2 && n % 2 == 1 {
        for (a, b) in [(0u8, 1u8), (1, 0)] {
            let mut word = vec![a, a];
            word.extend(alternating(a, b, n - 2));
            word[n - 1] = b;
            members.remove(rank_of(space, word.clone()));
            word[n - 1] = a;
            members.insert(rank_of(space, word));
        }
    }
    self_check(CodeSet::identifying(2, Theorem::TwoId, members))
}

/// The `twoid` set without the binary repair; not identifying for `d = 2`
/// and odd `n`. Unverified.
pub fn code_2id_literal(space: GraphSpace) -> Result<CodeSet> {
    Ok(CodeSet::identifying(2, Theorem::TwoId, twoid_members(space)?))
}

/// The two periodicity sets shared by `main` and `odd`, over `ℓ ≤ max_ell`.
/// Returns `(in first set, periodic for some m and ℓ)`.
fn periodic_sets(x: &[u8], d: u32, t: usize, max_ell: usize, window: &mut Vec<u8>) -> (bool, bool) {
    let n = x.len();
    let last = x[n - 1];
    let mut first = false;
    let mut any_periodic = false;
    for m in 0..d as u8 {
        let shifted_t = shift(x[t - 1], m, d);
        for ell in 1..=max_ell {
            // x^(t,m)(t+1−ℓ : n−1)
            window.clear();
            window.extend_from_slice(&x[t - ell..n - 1]);
            window[ell - 1] = shifted_t;
            if is_ell_periodic(window, ell) {
                any_periodic = true;
                window.push(shift(last, m, d));
                first |= !is_ell_periodic(window, ell);
            }
        }
    }
    (first, any_periodic)
}

fn main_hint(n: u32, t: u32) -> Option<&'static str> {
    match (n, t) {
        (_, 1) if n >= 3 => Some("mpt10"),
        (4, 2) => Some("twoid"),
        _ if n + 1 == 2 * t && n >= 5 => Some("odd"),
        _ if t == 2 && n > 3 => Some("twoid"),
        _ => None,
    }
}

/// Optimal `t`-identifying code for `t ≥ 2`, `n ≥ 2t`, `n ≥ 5`.
pub fn code_main_tid(space: GraphSpace, t: u32) -> Result<CodeSet> {
    let n = space.n();
    if t < 2 || n < 2 * t || n < 5 {
        return Err(unsupported(
            "main",
            format!("needs t ≥ 2, n ≥ 2t and n ≥ 5, got n = {n}, t = {t}"),
            main_hint(n, t),
        ));
    }
    let (d, t) = (space.d(), t as usize);
    let mut window = Vec::with_capacity(n as usize);
    build(space, t as u32, Theorem::Main, |x| {
        let (first, any_periodic) = periodic_sets(x, d, t, t, &mut window);
        first || (x[t - 1] != x[x.len() - 1] && !any_periodic)
    })
}

/// `t`-identifying code of size `d^(n−1)(d−1) + d^t` for `n = 2t−1 ≥ 5`.
/// Not known to be optimal.
pub fn code_odd_tid(space: GraphSpace, t: u32) -> Result<CodeSet> {
    let n = space.n();
    if n + 1 != 2 * t || n < 5 {
        return Err(unsupported(
            "odd",
            format!("needs n = 2t − 1 ≥ 5, got n = {n}, t = {t}"),
            main_hint(n, t).filter(|&h| h != "odd"),
        ));
    }
    let (d, t) = (space.d(), t as usize);
    let mut window = Vec::with_capacity(n as usize);
    build(space, t as u32, Theorem::Odd, |x| {
        let n = x.len();
        let (first, any_periodic) = periodic_sets(x, d, t, t - 2, &mut window);
        if first || (x[t - 1] != x[n - 1] && !any_periodic) {
            return true;
        }
        // x^(t,m)(1 : n−1) almost t-periodic for some m.
        (0..d as u8).any(|m| {
            window.clear();
            window.extend_from_slice(&x[..n - 1]);
            window[t - 1] = shift(x[t - 1], m, d);
            is_almost_ell_periodic(&window, t)
        })
    })
}

/// Two distinct words with equal radius-`t` in-balls, which rules out any
/// `t`-identifying code. Needs `n ≤ 2t − 2`.
///
/// For `t ≤ n` the pair is `0^(n−t) 1 0^(t−2) 1` and `0^(n−t) 1 0^(t−2) 0`;
/// larger radii fall back to exhaustive search.
pub fn twin_pair(space: GraphSpace, t: u32) -> Result<(Word, Word)> {
    let n = space.n();
    if n + 2 > 2 * t {
        return Err(unsupported(
            "twins",
            format!("twins are only guaranteed for n ≤ 2t − 2, got n = {n}, t = {t}"),
            None,
        ));
    }
    let d = space.d();
    let pair = if t <= n {
        let mut u = vec![0u8; n as usize];
        u[(n - t) as usize] = 1;
        u[n as usize - 1] = 1;
        let mut v = u.clone();
        v[n as usize - 1] = 0;
        (Word::from_raw(u, d), Word::from_raw(v, d))
    } else {
        verify::find_twins(space, t)?
            .ok_or_else(|| Error::Precondition(format!("no twins found in {space} at radius {t}")))?
    };
    if space.vertex_count()? <= crate::SELF_CHECK_CAP {
        let ball = |w: &Word| space.in_ball_ranks(space.vertex_index(w).expect("word in space"), t.min(n));
        if ball(&pair.0) != ball(&pair.1) {
            return Err(Error::Precondition(format!("{} and {} are not {t}-twins", pair.0, pair.1)));
        }
    }
    Ok(pair)
}

fn not_identifiable(space: GraphSpace, t: u32, twins: (Word, Word)) -> Error {
    Error::NotIdentifiable {
        d: space.d(),
        n: space.n(),
        t,
        twins,
    }
}

/// Picks the construction that covers `(d, n, t)`.
///
/// When none applies, an exhaustive twin search (small graphs only)
/// separates "provably impossible" from "no closed form known".
pub fn construct_auto(space: GraphSpace, t: u32) -> Result<CodeSet> {
    let n = space.n();
    let simple1_ok = n >= 2 && (n % 2 == 1 || space.d() > 2);
    match t {
        0 => Err(Error::Precondition("radius must be at least 1".into())),
        1 if n >= 3 => code_mpt10_1id(space),
        1 if simple1_ok => code_simple_1id(space),
        2 if n >= 4 => code_2id(space),
        _ if t >= 2 && n >= 2 * t && n >= 5 => code_main_tid(space, t),
        _ if n + 1 == 2 * t && n >= 5 => code_odd_tid(space, t),
        _ if n + 2 <= 2 * t => Err(not_identifiable(space, t, twin_pair(space, t)?)),
        _ => {
            let within_cap = space.vertex_count()? <= crate::SELF_CHECK_CAP;
            match within_cap.then(|| verify::find_twins(space, t)).transpose()?.flatten() {
                Some(twins) => Err(not_identifiable(space, t, twins)),
                None => Err(Error::NoKnownConstruction {
                    d: space.d(),
                    n,
                    t,
                }),
            }
        }
    }
}

/// A construction request: space, radius and theorem tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CodeSpec {
    pub space: GraphSpace,
    pub t: u32,
    pub theorem: Theorem,
}

impl CodeSpec {
    pub fn new(space: GraphSpace, t: u32, theorem: Theorem) -> Result<Self> {
        if t == 0 {
            return Err(Error::Precondition("radius must be at least 1".into()));
        }
        Ok(Self { space, t, theorem })
    }

    pub fn build(&self) -> Result<CodeSet> {
        let fixed_radius = |construction: &'static str, radius: u32| {
            if self.t == radius {
                Ok(())
            } else {
                Err(unsupported(
                    construction,
                    format!("builds {radius}-identifying codes, asked for t = {}", self.t),
                    None,
                ))
            }
        };
        match self.theorem {
            Theorem::Simple1 => fixed_radius("simple1", 1).and_then(|_| code_simple_1id(self.space)),
            Theorem::Mpt10 => fixed_radius("mpt10", 1).and_then(|_| code_mpt10_1id(self.space)),
            Theorem::TwoId => fixed_radius("twoid", 2).and_then(|_| code_2id(self.space)),
            Theorem::Main => code_main_tid(self.space, self.t),
            Theorem::Odd => code_odd_tid(self.space, self.t),
            Theorem::Auto => construct_auto(self.space, self.t),
            other => Err(unsupported(
                "code",
                format!("{other} is not an identifying-code construction"),
                Some("auto"),
            )),
        }
    }
}
