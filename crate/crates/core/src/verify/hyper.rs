use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::hypercube::Hypercube;

/// One coordinate set per axis plus the symbols of a subhypercube, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HyperBox {
    pub axes: Vec<Vec<usize>>,
    pub symbols: Vec<u32>,
}

impl HyperBox {
    pub fn order(&self) -> usize {
        self.symbols.len()
    }
}

impl Ord for HyperBox {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order().cmp(&other.order()).then_with(|| self.axes.cmp(&other.axes))
    }
}

impl PartialOrd for HyperBox {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Flat indices of every cell of the box.
fn box_cells(h: &Hypercube, axes: &[Vec<usize>]) -> Vec<usize> {
    let mut out = vec![0usize];
    for (a, set) in axes.iter().enumerate() {
        let stride = h.stride(a);
        out = out.iter().flat_map(|&base| set.iter().map(move |&x| base + x * stride)).collect();
    }
    out
}

/// Closes `axes` under the rule that every line of the box along any axis
/// must contain each symbol of the box. `None` once any set exceeds `bound`.
fn close(h: &Hypercube, mut axes: Vec<Vec<usize>>, bound: usize) -> Option<HyperBox> {
    let n = h.order();
    let d = h.dim();
    let mut in_sym = vec![false; n];
    let mut syms: Vec<u32> = Vec::new();
    loop {
        let mut changed = false;
        for idx in box_cells(h, &axes) {
            let s = h.at(idx);
            if !in_sym[s as usize] {
                in_sym[s as usize] = true;
                syms.push(s);
                changed = true;
            }
        }
        if syms.len() > bound {
            return None;
        }
        for a in 0..d {
            let stride = h.stride(a);
            // lines along axis a: fix the other axes at box coordinates
            let mut others = axes.clone();
            others[a] = vec![0];
            let mut add = Vec::new();
            for start in box_cells(h, &others) {
                for &s in &syms {
                    let x = (0..n).find(|&x| h.at(start + x * stride) == s).expect("Latin line");
                    if !axes[a].contains(&x) && !add.contains(&x) {
                        add.push(x);
                    }
                }
            }
            if !add.is_empty() {
                axes[a].extend(add);
                changed = true;
                if axes[a].len() > bound {
                    return None;
                }
            }
        }
        if !changed {
            break;
        }
    }
    for set in axes.iter_mut() {
        set.sort_unstable();
    }
    syms.sort_unstable();
    Some(HyperBox { axes, symbols: syms })
}

/// The shortlex-least proper subhypercube, or `None` when `h` is N∞.
///
/// Seeds are a coordinate pair on axis 0 with one coordinate on every other
/// axis; each seed is closed with bound `n / 2`.
pub fn find_proper_subhypercube(h: &Hypercube) -> Option<HyperBox> {
    let n = h.order();
    let d = h.dim();
    if n < 4 || d == 0 {
        return None;
    }
    let rest = n.pow((d - 1) as u32);
    let mut best: Option<HyperBox> = None;
    for x1 in 0..n {
        for x2 in x1 + 1..n {
            for t in 0..rest {
                let mut axes = vec![vec![x1, x2]];
                let mut tail = vec![0; d - 1];
                let mut v = t;
                for slot in tail.iter_mut().rev() {
                    *slot = v % n;
                    v /= n;
                }
                axes.extend(tail.into_iter().map(|x| vec![x]));
                if let Some(b) = close(h, axes, n / 2) {
                    if best.as_ref().is_none_or(|cur| b < *cur) {
                        best = Some(b);
                    }
                }
            }
        }
    }
    best
}

/// Largest order accepted by [`brute_force_subhypercubes`].
pub const HYPER_BRUTE_MAX: usize = 5;

/// All proper subhypercubes by enumerating equal-size coordinate subsets on
/// every axis.
pub fn brute_force_subhypercubes(h: &Hypercube) -> Result<Vec<HyperBox>> {
    let n = h.order();
    let d = h.dim();
    if n > HYPER_BRUTE_MAX || d > 4 {
        return Err(Error::OrderTooLarge { order: n, max: HYPER_BRUTE_MAX });
    }
    let mut out = Vec::new();
    for k in 2..n {
        let subsets: Vec<Vec<usize>> = (0u32..1 << n)
            .filter(|m| m.count_ones() as usize == k)
            .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
            .collect();
        let total = subsets.len().pow(d as u32);
        for t in 0..total {
            let mut v = t;
            let axes: Vec<Vec<usize>> = (0..d)
                .map(|_| {
                    let s = subsets[v % subsets.len()].clone();
                    v /= subsets.len();
                    s
                })
                .collect();
            let mut syms: Vec<u32> = box_cells(h, &axes).into_iter().map(|i| h.at(i)).collect();
            syms.sort_unstable();
            syms.dedup();
            if syms.len() == k {
                out.push(HyperBox { axes, symbols: syms });
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}
