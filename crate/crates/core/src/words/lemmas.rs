//! Exhaustive checkers for the periodicity lemmas the code constructions
//! rest on. Each checker enumerates every word in its range and every
//! admissible parameter tuple, and reports the first counterexample found.

use serde::Serialize;

use super::{digit, has_period, is_almost_ell_periodic, is_ell_periodic, shifted};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub lemma: &'static str,
    /// Number of hypothesis-satisfying instances examined.
    pub checked: u64,
    pub failures: u64,
    pub first_counterexample: Option<String>,
}

impl LemmaReport {
    fn new(lemma: &'static str) -> Self {
        Self {
            lemma,
            checked: 0,
            failures: 0,
            first_counterexample: None,
        }
    }

    fn record(&mut self, holds: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !holds {
            self.failures += 1;
            if self.first_counterexample.is_none() {
                self.first_counterexample = Some(describe());
            }
        }
    }

    pub fn holds(&self) -> bool {
        self.failures == 0
    }
}

fn render(w: &[u8]) -> String {
    w.iter().map(|&a| digit(a)).collect()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Calls `f` on every word of length `n` over `A_d`, in lexicographic order.
pub fn for_each_word(d: u32, n: usize, mut f: impl FnMut(&[u8])) {
    let top = (d - 1) as u8;
    let mut w = vec![0u8; n];
    loop {
        f(&w);
        let mut i = n;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if w[i] < top {
                w[i] += 1;
                break;
            }
            w[i] = 0;
        }
    }
}

fn with_shift(w: &[u8], k: usize, m: i64, d: u32) -> Vec<u8> {
    let mut out = w.to_vec();
    out[k - 1] = shifted(out[k - 1], m, d);
    out
}

/// Fine and Wilf: periods `ℓ₁ > ℓ₂` on a word of length at least
/// `ℓ₁ + ℓ₂ - gcd(ℓ₁, ℓ₂)` force the period `gcd(ℓ₁, ℓ₂)`.
pub fn check_fine_wilf(d: u32, max_n: usize) -> LemmaReport {
    let mut report = LemmaReport::new("fine-wilf");
    for n in 1..=max_n {
        for_each_word(d, n, |w| {
            for l1 in 2..=n {
                if !has_period(w, l1) {
                    continue;
                }
                for l2 in 1..l1 {
                    let g = gcd(l1, l2);
                    if n + g < l1 + l2 || !has_period(w, l2) {
                        continue;
                    }
                    report.record(has_period(w, g), || {
                        format!("w={} l1={l1} l2={l2}", render(w))
                    });
                }
            }
        });
    }
    report
}

/// If `w` has period `ℓ₁` and `w^(k,m)` has period `ℓ₂` with
/// `n ≥ ℓ₁ + ℓ₂`, some `w^(k,m')` has period `gcd(ℓ₁, ℓ₂)`.
pub fn check_shifted_period(d: u32, max_n: usize) -> LemmaReport {
    let mut report = LemmaReport::new("shifted-period");
    for n in 2..=max_n {
        for_each_word(d, n, |w| {
            for l1 in 1..n {
                if !has_period(w, l1) {
                    continue;
                }
                for l2 in 1..=l1.min(n - l1) {
                    let g = gcd(l1, l2);
                    for k in 1..=n {
                        for m in 0..i64::from(d) {
                            if !has_period(&with_shift(w, k, m, d), l2) {
                                continue;
                            }
                            let rescued = (0..i64::from(d))
                                .any(|m2| has_period(&with_shift(w, k, m2, d), g));
                            report.record(rescued, || {
                                format!("w={} l1={l1} l2={l2} k={k} m={m}", render(w))
                            });
                        }
                    }
                }
            }
        });
    }
    report
}

/// A single nonzero letter change at a position covered by the `ℓ₁`
/// structure can never produce an `ℓ₂`-periodic word.
pub fn check_no_new_short_period(d: u32, max_n: usize) -> LemmaReport {
    let mut report = LemmaReport::new("no-new-short-period");
    for n in 2..=max_n {
        for_each_word(d, n, |w| {
            for l1 in 1..=n {
                let structured = is_ell_periodic(w, l1)
                    || (2 * l1 > n && is_almost_ell_periodic(w, l1));
                if !structured {
                    continue;
                }
                for l2 in 1..=l1 {
                    if 2 * l2 >= n || n < l1 + l2 {
                        continue;
                    }
                    for k in 1..=n {
                        if !(k + l1 <= n || k > l1) {
                            continue;
                        }
                        for m in 1..i64::from(d) {
                            let bad = is_ell_periodic(&with_shift(w, k, m, d), l2);
                            report.record(!bad, || {
                                format!("w={} l1={l1} l2={l2} k={k} m={m}", render(w))
                            });
                        }
                    }
                }
            }
        });
    }
    report
}

/// Window form of the previous check: with `w` of period `ℓ₁ < n/2`,
/// changing a letter inside the window `w(i:j)` at a position at least
/// `ℓ₁` from one end destroys every period `ℓ₂ ≤ ℓ₁` of the window.
pub fn check_window_period_broken(d: u32, max_n: usize) -> LemmaReport {
    let mut report = LemmaReport::new("window-period-broken");
    for n in 3..=max_n {
        for_each_word(d, n, |w| {
            for l1 in 1..n {
                if 2 * l1 >= n || !has_period(w, l1) {
                    continue;
                }
                for l2 in 1..=l1 {
                    for i in 1..=n {
                        for j in i..=n {
                            if j + 1 - i < l1 + l2 {
                                continue;
                            }
                            for k in i..=j {
                                if !(k >= i + l1 || k + l1 <= j) {
                                    continue;
                                }
                                for m in 1..i64::from(d) {
                                    let shifted = with_shift(w, k, m, d);
                                    let window = &shifted[i - 1..j];
                                    report.record(!has_period(window, l2), || {
                                        format!(
                                            "w={} l1={l1} l2={l2} i={i} j={j} k={k} m={m}",
                                            render(w)
                                        )
                                    });
                                }
                            }
                        }
                    }
                }
            }
        });
    }
    report
}

/// For `n = 2t` and `u` of period `t`: if `u^(t,m)(t+1-ℓ : n-1)` is
/// `ℓ`-periodic with `ℓ < t`, then `ℓ | t` and appending `u_n + m` keeps
/// the period `ℓ`.
pub fn check_half_period_divides(d: u32, max_t: usize) -> LemmaReport {
    let mut report = LemmaReport::new("half-period-divides");
    for t in 2..=max_t {
        let n = 2 * t;
        for_each_word(d, n, |u| {
            if !has_period(u, t) {
                return;
            }
            for ell in 1..t {
                for m in 0..i64::from(d) {
                    let shifted = with_shift(u, t, m, d);
                    let window = &shifted[t - ell..n - 1];
                    if !is_ell_periodic(window, ell) {
                        continue;
                    }
                    let mut extended = window.to_vec();
                    extended.push(super::shifted(u[n - 1], m, d));
                    let holds = t % ell == 0 && has_period(&extended, ell);
                    report.record(holds, || {
                        format!("u={} t={t} ell={ell} m={m}", render(u))
                    });
                }
            }
        });
    }
    report
}
