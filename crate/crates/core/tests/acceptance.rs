//! End-to-end acceptance checks. Each test prints one PASS/FAIL line
//! (visible with `--nocapture`) and fails on a wrong value or a blown
//! time limit.

use std::time::{Duration, Instant};

use debruijn_codes::codes::{
    code_2id, code_main_tid, code_mpt10_1id, code_odd_tid, code_simple_1id, id_lower_bound, twin_pair,
};
use debruijn_codes::cover::{
    determining_set, dominating_1, dominating_t, dominating_t_lower_bound, dominating_t_size, resolving_set,
};
use debruijn_codes::verify::{
    enumerate_automorphisms, find_twins, id_signature, min_determining_search, min_dominating_search,
    min_identifying_search, min_resolving_search, symbol_automorphism, verify_determining, verify_dominating,
    verify_identifying, verify_resolving, IdentifyingSearch, SearchConfig, SignatureTable,
};
use debruijn_codes::words::lemmas;
use debruijn_codes::{CodeSet, GraphSpace, SymbolPermutation, VertexSet};

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion(number: u32, title: &str, limit: Duration, body: impl FnOnce() -> Check) {
    let start = Instant::now();
    let result = body();
    let elapsed = start.elapsed();
    let result = result.and_then(|()| {
        ensure(elapsed < limit, || format!("took {elapsed:.2?}, limit {limit:?}"))
    });
    match &result {
        Ok(()) => println!("criterion {number:2} PASS  {title} ({elapsed:.2?})"),
        Err(why) => println!("criterion {number:2} FAIL  {title} ({elapsed:.2?}): {why}"),
    }
    if let Err(why) = result {
        panic!("criterion {number} failed: {why}");
    }
}

fn b(d: u32, n: u32) -> GraphSpace {
    GraphSpace::new(d, n).unwrap()
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

/// Every `(d, n)` with `d ∈ {2, 3}`, `n ≥ 1` and `dⁿ ≤ cap`.
fn matrix_spaces(cap: u64) -> Vec<GraphSpace> {
    let mut out = Vec::new();
    for d in 2..=3u32 {
        for n in 1.. {
            if u64::from(d).pow(n) > cap {
                break;
            }
            out.push(b(d, n));
        }
    }
    out
}

/// Every `(d, n)` with `d ≥ 2` and `dⁿ ≤ cap`.
fn all_spaces(cap: u64) -> Vec<GraphSpace> {
    let mut out = Vec::new();
    for d in 2..=36u32 {
        for n in 1.. {
            if u64::from(d).pow(n) > cap {
                break;
            }
            out.push(b(d, n));
        }
    }
    out
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn identifying_minimum(space: GraphSpace, t: u32) -> Result<(usize, Vec<CodeSet>), String> {
    let config = SearchConfig::default();
    match min_identifying_search(space, t, &config).map_err(err)? {
        IdentifyingSearch::Found { size, codes, count, .. } => {
            ensure(codes.len() as u64 == count, || format!("{count} codes, {} kept", codes.len()))?;
            Ok((size, codes))
        }
        other => Err(format!("no code found: {other:?}")),
    }
}

/// Each constructed code in the size-law matrix with its theorem's size.
fn constructed_matrix() -> Result<Vec<(CodeSet, u32, u64)>, String> {
    let mut out = Vec::new();
    for space in matrix_spaces(1 << 14) {
        let (d, n) = (space.d(), space.n());
        let base = id_lower_bound(space).map_err(err)?;
        if n >= 2 && (n % 2 == 1 || d > 2) {
            out.push((code_simple_1id(space).map_err(err)?, 1, base));
        }
        if n >= 3 {
            out.push((code_mpt10_1id(space).map_err(err)?, 1, base));
        }
        if n >= 4 {
            out.push((code_2id(space).map_err(err)?, 2, base));
        }
        for t in 2..=n / 2 {
            if n >= 5 {
                out.push((code_main_tid(space, t).map_err(err)?, t, base));
            }
        }
        if n >= 5 && n % 2 == 1 {
            let t = n.div_ceil(2);
            out.push((code_odd_tid(space, t).map_err(err)?, t, base + u64::from(d).pow(t)));
        }
    }
    Ok(out)
}

#[test]
fn c01_one_identifying_b23() {
    criterion(1, "1-identifying code of B(2,3) and its minimum", secs(1), || {
        let space = b(2, 3);
        let code = code_simple_1id(space).map_err(err)?;
        ensure(code.word_strings() == ["001", "011", "100", "110"], || format!("{:?}", code.word_strings()))?;
        ensure(verify_identifying(&code, 1).map_err(err)?.valid, || "code does not verify".into())?;
        let (size, _) = identifying_minimum(space, 1)?;
        ensure(size == 4, || format!("minimum {size}"))
    });
}

#[test]
fn c02_radius_two_minimum() {
    criterion(2, "B(2,3) radius 2: minimum 7, exactly V∖{000} and V∖{111}", secs(1), || {
        let space = b(2, 3);
        let (size, codes) = identifying_minimum(space, 2)?;
        ensure(size == 7, || format!("minimum {size}"))?;
        let all = VertexSet::full(space).map_err(err)?;
        let mut omitted: Vec<String> = codes
            .iter()
            .map(|c| all.words().filter(|w| !c.contains(w)).map(|w| w.to_string()).collect())
            .collect();
        omitted.sort();
        ensure(omitted == ["000", "111"], || format!("omitted {omitted:?}"))
    });
}

#[test]
fn c03_radius_three_impossible() {
    criterion(3, "B(2,3) radius 3: no code, twins exhibited", secs(1), || {
        let space = b(2, 3);
        let search = min_identifying_search(space, 3, &SearchConfig::default()).map_err(err)?;
        let IdentifyingSearch::Twins { u, v } = search else {
            return Err(format!("expected twins, got {search:?}"));
        };
        let ball = |w| space.ball(w, 3, debruijn_codes::Direction::In).unwrap();
        ensure(u != v && ball(&u) == ball(&v), || format!("{u} and {v} are not twins"))?;
        ensure(find_twins(space, 3).map_err(err)?.is_some(), || "exhaustive twin search found none".into())
    });
}

#[test]
fn c04_minimum_of_b25() {
    criterion(4, "B(2,5) radius 1: minimum 16 over 2^16 candidates", secs(60), || {
        let space = b(2, 5);
        let search = min_identifying_search(space, 1, &SearchConfig::default()).map_err(err)?;
        let IdentifyingSearch::Found { size, levels, .. } = search else {
            return Err(format!("{search:?}"));
        };
        ensure(size == 16 && id_lower_bound(space).map_err(err)? == 16, || format!("minimum {size}"))?;
        ensure(levels.len() == 1 && levels[0].candidates == 1 << 16, || format!("{levels:?}"))
    });
}

#[test]
fn c05_size_laws() {
    criterion(5, "constructed codes have the stated size and verify", secs(300), || {
        let matrix = constructed_matrix()?;
        ensure(matrix.len() > 50, || format!("only {} instances", matrix.len()))?;
        for (code, t, size) in &matrix {
            let label = || format!("{} {:?} t={t}", code.space(), code.theorem);
            ensure(code.len() as u64 == *size, || format!("{}: size {} ≠ {size}", label(), code.len()))?;
            ensure(verify_identifying(code, *t).map_err(err)?.valid, || format!("{}: invalid", label()))?;
        }
        Ok(())
    });
}

#[test]
fn c06_twins() {
    criterion(6, "twin pairs share radius-t in-balls whenever n ≤ 2t−2", secs(10), || {
        let mut checked = 0;
        for space in all_spaces(1 << 12) {
            let n = space.n();
            for t in 2..=n {
                if n + 2 > 2 * t {
                    continue;
                }
                let (u, v) = twin_pair(space, t).map_err(err)?;
                let ball = |w| space.ball(w, t, debruijn_codes::Direction::In).unwrap();
                ensure(u != v && ball(&u) == ball(&v), || format!("{space} t={t}: {u}, {v}"))?;
                checked += 1;
            }
        }
        ensure(checked > 30, || format!("only {checked} triples"))
    });
}

#[test]
fn c07_exact_domination() {
    criterion(7, "1-domination: ⌈dⁿ/(d+1)⌉, valid, and minimal on tiny graphs", secs(120), || {
        for space in all_spaces(1 << 14) {
            let set = dominating_1(space).map_err(err)?;
            let expected = space.vertex_count().map_err(err)?.div_ceil(u64::from(space.d()) + 1);
            ensure(set.len() as u64 == expected, || format!("{space}: {} ≠ {expected}", set.len()))?;
            ensure(verify_dominating(&set, 1).map_err(err)?.valid, || format!("{space}: not dominating"))?;
        }
        for space in [b(2, 3), b(2, 4), b(3, 2)] {
            let found = min_dominating_search(space, 1, &SearchConfig::default())
                .map_err(err)?
                .ok_or("no dominating set")?;
            let constructed = dominating_1(space).map_err(err)?.len();
            ensure(found.size == constructed, || format!("{space}: search {} vs {constructed}", found.size))?;
        }
        Ok(())
    });
}

#[test]
fn c08_t_domination_sandwich() {
    criterion(8, "t-domination: closed form, valid, above the bound", secs(60), || {
        for space in matrix_spaces(1 << 14) {
            for t in 1..space.n() {
                let set = dominating_t(space, t).map_err(err)?;
                let size = dominating_t_size(space, t).map_err(err)?;
                let bound = dominating_t_lower_bound(space, t).map_err(err)?.value;
                let label = || format!("{space} t={t}");
                ensure(set.len() as u64 == size, || format!("{}: {} ≠ {size}", label(), set.len()))?;
                ensure(size >= bound, || format!("{}: {size} < {bound}", label()))?;
                ensure(verify_dominating(&set, t).map_err(err)?.valid, || format!("{}: invalid", label()))?;
            }
        }
        let space = b(2, 5);
        let size = dominating_t(space, 1).map_err(err)?.len();
        let bound = dominating_t_lower_bound(space, 1).map_err(err)?.value;
        ensure(size == 11 && bound == 11 && 32u64.div_ceil(3) == 11, || format!("{size} vs {bound}"))
    });
}

#[test]
fn c09_metric_dimension() {
    criterion(9, "resolving sets verify; minimum sizes 4 and 6", secs(120), || {
        for space in all_spaces(1 << 10) {
            let set = resolving_set(space).map_err(err)?;
            ensure(verify_resolving(&set).map_err(err)?.valid, || format!("{space}: not resolving"))?;
        }
        for (space, expected) in [(b(2, 3), 4), (b(3, 2), 6)] {
            let found = min_resolving_search(space, &SearchConfig::default())
                .map_err(err)?
                .ok_or("no resolving set")?;
            let lower = id_lower_bound(space).map_err(err)? as usize;
            ensure(found.size == expected && expected == lower, || format!("{space}: {}", found.size))?;
        }
        Ok(())
    });
}

#[test]
fn c10_automorphisms_and_determining_sets() {
    criterion(10, "Aut = Sym(A_d) on tiny graphs; determining number", secs(120), || {
        for space in [b(2, 2), b(2, 3), b(3, 2)] {
            let mut found = enumerate_automorphisms(space).map_err(err)?;
            let mut induced = SymbolPermutation::all(space.d())
                .map(|s| symbol_automorphism(space, &s))
                .collect::<Result<Vec<_>, _>>()
                .map_err(err)?;
            let factorial: usize = (1..=space.d() as usize).product();
            ensure(found.len() == factorial, || format!("{space}: {} automorphisms", found.len()))?;
            found.sort();
            induced.sort();
            ensure(found == induced, || format!("{space}: automorphisms differ from symbol permutations"))?;
        }
        let fig = determining_set(b(2, 3)).map_err(err)?;
        ensure(fig.word_strings() == ["000"], || format!("{:?}", fig.word_strings()))?;
        ensure(verify_determining(&fig).map_err(err)?.valid, || "{000} not determining".into())?;
        for space in [b(2, 3), b(3, 2), b(5, 2)] {
            let found = min_determining_search(space, &SearchConfig::default())
                .map_err(err)?
                .ok_or("no determining set")?;
            let expected = (space.d() - 1).div_ceil(space.n()) as usize;
            let constructed = determining_set(space).map_err(err)?.len();
            ensure(found.size == expected && constructed == expected, || {
                format!("{space}: search {}, construction {constructed}, expected {expected}", found.size)
            })?;
        }
        Ok(())
    });
}

#[test]
fn c11_word_lemmas() {
    criterion(11, "periodicity lemmas hold exhaustively", secs(300), || {
        let reports = [
            lemmas::check_fine_wilf(2, 12),
            lemmas::check_fine_wilf(3, 12),
            lemmas::check_shifted_period(2, 10),
            lemmas::check_shifted_period(3, 10),
            lemmas::check_no_new_short_period(2, 10),
            lemmas::check_no_new_short_period(3, 10),
            lemmas::check_window_period_broken(2, 12),
            lemmas::check_half_period_divides(2, 4),
            lemmas::check_half_period_divides(3, 4),
        ];
        for r in &reports {
            ensure(r.checked > 0, || format!("{}: nothing checked", r.lemma))?;
            ensure(r.holds(), || format!("{}: {} failures, e.g. {:?}", r.lemma, r.failures, r.first_counterexample))?;
        }
        Ok(())
    });
}

#[test]
fn c12_decoding() {
    criterion(12, "decoding inverts signatures for every constructed code", secs(60), || {
        for (code, t, _) in constructed_matrix()? {
            let space = code.space();
            let table = SignatureTable::build(&code, t).map_err(err)?;
            for v in space.vertices().map_err(err)? {
                let observed = id_signature(&code, &v, t).map_err(err)?;
                let decoded = table.decode(&observed).map_err(err)?;
                ensure(decoded.as_ref() == Some(&v), || format!("{space} t={t}: {v} decoded as {decoded:?}"))?;
            }
        }
        Ok(())
    });
}
