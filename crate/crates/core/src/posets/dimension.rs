use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Vertex;

use super::{extension_of, Poset, Realizer};

/// Largest poset `dimension_exact` accepts by default.
pub const DEFAULT_ELEMENT_BUDGET: usize = 10;

const NODE_BUDGET: u64 = 200_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RealizerFault {
    /// Order `usize` puts `y` before `x` although `x < y`.
    NotAnExtension(usize),
    /// `x` and `y` are incomparable but every order puts `x` before `y`.
    NotReversed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum RealizerCheck {
    Valid,
    Violated { pair: (Vertex, Vertex), fault: RealizerFault },
}

impl RealizerCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, RealizerCheck::Valid)
    }
}

/// Checks that every order is a linear extension and that every incomparable
/// pair is reversed somewhere. Orders that are not permutations of the ground
/// set are input errors.
pub fn is_realizer(p: &Poset, r: &Realizer) -> Result<RealizerCheck> {
    let mut positions = Vec::with_capacity(r.len());
    for (i, order) in r.orders.iter().enumerate() {
        let pos: BTreeMap<Vertex, usize> = order.iter().enumerate().map(|(at, &v)| (v, at)).collect();
        if pos.len() != order.len() || order.len() != p.len() || p.elements().iter().any(|x| !pos.contains_key(x)) {
            return Err(Error::input(format!("order {i} is not a permutation of the elements")));
        }
        positions.push(pos);
    }
    for (i, pos) in positions.iter().enumerate() {
        if let Some((x, y)) = p.cover_pairs().into_iter().find(|(x, y)| pos[x] > pos[y]) {
            return Ok(RealizerCheck::Violated { pair: (x, y), fault: RealizerFault::NotAnExtension(i) });
        }
    }
    for &x in p.elements() {
        for &y in p.elements() {
            if x != y && !p.comparable(x, y) && positions.iter().all(|pos| pos[&x] < pos[&y]) {
                return Ok(RealizerCheck::Violated { pair: (x, y), fault: RealizerFault::NotReversed });
            }
        }
    }
    Ok(RealizerCheck::Valid)
}

/// Minimum size of a realizer, with a realizer of that size.
pub fn dimension_exact(p: &Poset) -> Result<(usize, Realizer)> {
    dimension_exact_with(p, DEFAULT_ELEMENT_BUDGET)
}

pub fn dimension_exact_with(p: &Poset, max_elements: usize) -> Result<(usize, Realizer)> {
    if p.len() > max_elements {
        return Err(Error::resource(format!("{} elements exceeds the budget of {max_elements}", p.len())));
    }
    let mut nodes = 0;
    for d in 0..=p.len().max(1) {
        if let Some(r) = realizer_of_size(p, d, &mut nodes)? {
            return Ok((d, r));
        }
    }
    Err(Error::internal("no realizer with as many orders as elements"))
}

/// Pairs `(a, b)` with `a || b`, everything below `a` below `b` and everything
/// above `b` above `a`. A family of extensions is a realizer iff each such
/// pair has `b` before `a` in some member.
fn critical_pairs(p: &Poset) -> Vec<(usize, usize)> {
    let n = p.len();
    let up: Vec<u64> = (0..n).map(|i| p.up_mask(i)).collect();
    let down: Vec<u64> = (0..n).map(|i| (0..n).filter(|&j| up[j] >> i & 1 == 1).fold(0, |m, j| m | 1 << j)).collect();
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let incomparable = up[a] >> b & 1 == 0 && up[b] >> a & 1 == 0;
            if incomparable && down[a] & !(1 << a) & !down[b] == 0 && up[b] & !(1 << b) & !up[a] == 0 {
                out.push((a, b));
            }
        }
    }
    out
}

/// `d` linear extensions reversing every critical pair, if they exist.
///
/// Each slot holds a partial order (as up-closures) that will be extended
/// linearly at the end. A pair is assigned to the first slots in turn, opening
/// at most one fresh slot per branch.
pub(crate) fn realizer_of_size(p: &Poset, d: usize, nodes: &mut u64) -> Result<Option<Realizer>> {
    let n = p.len();
    let pairs = critical_pairs(p);
    if n == 0 {
        return Ok(Some(Realizer { orders: vec![Vec::new(); d] }));
    }
    if d == 0 || (d == 1 && !pairs.is_empty()) {
        return Ok(None);
    }
    let base: Vec<u64> = (0..n).map(|i| p.up_mask(i)).collect();
    let mut slots = vec![base; d];
    if !assign(&pairs, 0, &mut slots, 0, nodes)? {
        return Ok(None);
    }
    let r = Realizer { orders: slots.iter().map(|s| extension_of(s, p.elements())).collect() };
    if !super::is_realizer(p, &r)?.is_valid() {
        return Err(Error::internal("dimension search produced an invalid realizer"));
    }
    Ok(Some(r))
}

fn assign(pairs: &[(usize, usize)], at: usize, slots: &mut [Vec<u64>], used: usize, nodes: &mut u64) -> Result<bool> {
    *nodes += 1;
    if *nodes > NODE_BUDGET {
        return Err(Error::resource(format!("dimension search exceeded {NODE_BUDGET} nodes")));
    }
    let Some(next) = (at..pairs.len()).find(|&i| {
        let (a, b) = pairs[i];
        !slots[..used].iter().any(|s| s[b] >> a & 1 == 1)
    }) else {
        return Ok(true);
    };
    let (a, b) = pairs[next];
    for s in 0..slots.len().min(used + 1) {
        // b < a fits unless the slot already forces a <= b
        if slots[s][a] >> b & 1 == 1 {
            continue;
        }
        let saved = slots[s].clone();
        let above_a = slots[s][a];
        for i in 0..slots[s].len() {
            if saved[i] >> b & 1 == 1 {
                slots[s][i] |= above_a;
            }
        }
        if assign(pairs, next + 1, slots, used.max(s + 1), nodes)? {
            return Ok(true);
        }
        slots[s] = saved;
    }
    Ok(false)
}

