use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};

/// Indices (0-based, increasing) of a strictly monotone subsequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Monotone {
    pub indices: Vec<usize>,
    pub increasing: bool,
}

impl Monotone {
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn holds_for(&self, seq: &[i64]) -> bool {
        self.indices.windows(2).all(|w| {
            w[0] < w[1] && w[1] < seq.len() && if self.increasing { seq[w[0]] < seq[w[1]] } else { seq[w[0]] > seq[w[1]] }
        }) && self.indices.iter().all(|&i| i < seq.len())
    }
}

fn require_distinct(seq: &[i64]) -> Result<()> {
    let mut seen = BTreeSet::new();
    match seq.iter().find(|x| !seen.insert(**x)) {
        Some(x) => Err(Error::input(format!("entry {x} repeats"))),
        None => Ok(()),
    }
}

fn longest(seq: &[i64], increasing: bool) -> Vec<usize> {
    let n = seq.len();
    let mut len = vec![1usize; n];
    let mut prev = vec![usize::MAX; n];
    for j in 0..n {
        for i in 0..j {
            let fits = if increasing { seq[i] < seq[j] } else { seq[i] > seq[j] };
            if fits && len[i] + 1 > len[j] {
                len[j] = len[i] + 1;
                prev[j] = i;
            }
        }
    }
    let Some(mut end) = (0..n).max_by_key(|&i| (len[i], std::cmp::Reverse(i))) else {
        return Vec::new();
    };
    let mut out = vec![end];
    while prev[end] != usize::MAX {
        end = prev[end];
        out.push(end);
    }
    out.reverse();
    out
}

/// A longest strictly monotone subsequence, increasing on ties.
pub fn longest_monotone(seq: &[i64]) -> Result<Monotone> {
    require_distinct(seq)?;
    let (up, down) = (longest(seq, true), longest(seq, false));
    Ok(if up.len() >= down.len() { Monotone { indices: up, increasing: true } } else { Monotone { indices: down, increasing: false } })
}

/// `k` indices of a monotone subsequence. Guaranteed to exist once the
/// sequence has `(k - 1)^2 + 1` entries; shorter sequences may still have one.
pub fn erdos_szekeres(seq: &[i64], k: usize) -> Result<Option<Monotone>> {
    if k == 0 {
        return Err(Error::input("k must be positive"));
    }
    let mut best = longest_monotone(seq)?;
    if best.len() < k {
        if seq.len() > (k - 1) * (k - 1) {
            return Err(Error::internal("long sequence without a monotone subsequence"));
        }
        return Ok(None);
    }
    best.indices.truncate(k);
    Ok(Some(best))
}
