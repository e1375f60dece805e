use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::ops::RangeInclusive;

use super::{box_symbols, SubBox};
use crate::perturbed::PerturbedSquare;

#[derive(Clone)]
struct State {
    rows: Vec<usize>,
    cols: Vec<usize>,
    syms: Vec<u32>,
}

enum Step {
    Dead,
    Changed,
    Stable,
    Branch(Vec<State>),
}

struct Search<'p, 'a> {
    p: &'p PerturbedSquare<'a>,
    bound: usize,
    orders: RangeInclusive<usize>,
    must: &'p [(usize, usize)],
    visited: BTreeSet<(Vec<usize>, Vec<usize>)>,
    found: Vec<SubBox>,
    first_only: bool,
    scratch: Vec<usize>,
}

impl Search<'_, '_> {
    fn done(&self) -> bool {
        self.first_only && !self.found.is_empty()
    }

    fn step(&mut self, st: &mut State) -> Step {
        let p = self.p;
        let mut changed = false;
        for ri in 0..st.rows.len() {
            for ci in 0..st.cols.len() {
                let s = p.get(st.rows[ri], st.cols[ci]);
                if !st.syms.contains(&s) {
                    st.syms.push(s);
                    changed = true;
                }
            }
        }
        if st.syms.len() > self.bound {
            return Step::Dead;
        }
        let mut branch: Option<Vec<State>> = None;
        // forced columns
        let mut add_cols = Vec::new();
        for &r in &st.rows {
            for &s in &st.syms {
                self.scratch.clear();
                p.cols_with(r, s, &mut self.scratch);
                let inside = self.scratch.iter().filter(|c| st.cols.contains(c)).count();
                if inside >= 2 {
                    return Step::Dead;
                }
                if inside == 1 {
                    continue;
                }
                match self.scratch.len() {
                    0 => return Step::Dead,
                    1 => {
                        if !add_cols.contains(&self.scratch[0]) {
                            add_cols.push(self.scratch[0]);
                        }
                    }
                    _ => {
                        if branch.is_none() {
                            branch = Some(
                                self.scratch
                                    .iter()
                                    .map(|&c| {
                                        let mut alt = st.clone();
                                        alt.cols.push(c);
                                        alt
                                    })
                                    .collect(),
                            );
                        }
                    }
                }
            }
        }
        let mut add_rows = Vec::new();
        for &c in &st.cols {
            for &s in &st.syms {
                self.scratch.clear();
                p.rows_with(c, s, &mut self.scratch);
                let inside = self.scratch.iter().filter(|r| st.rows.contains(r)).count();
                if inside >= 2 {
                    return Step::Dead;
                }
                if inside == 1 {
                    continue;
                }
                match self.scratch.len() {
                    0 => return Step::Dead,
                    1 => {
                        if !add_rows.contains(&self.scratch[0]) {
                            add_rows.push(self.scratch[0]);
                        }
                    }
                    _ => {
                        if branch.is_none() {
                            branch = Some(
                                self.scratch
                                    .iter()
                                    .map(|&r| {
                                        let mut alt = st.clone();
                                        alt.rows.push(r);
                                        alt
                                    })
                                    .collect(),
                            );
                        }
                    }
                }
            }
        }
        if !add_cols.is_empty() || !add_rows.is_empty() {
            st.cols.extend(add_cols);
            st.rows.extend(add_rows);
            changed = true;
        }
        if st.rows.len() > self.bound || st.cols.len() > self.bound {
            return Step::Dead;
        }
        if changed {
            Step::Changed
        } else if let Some(b) = branch {
            Step::Branch(b)
        } else {
            Step::Stable
        }
    }

    fn explore(&mut self, mut st: State) {
        loop {
            match self.step(&mut st) {
                Step::Dead => return,
                Step::Changed => continue,
                Step::Branch(alts) => {
                    for alt in alts {
                        self.explore(alt);
                        if self.done() {
                            return;
                        }
                    }
                    return;
                }
                Step::Stable => break,
            }
        }
        let mut rows = st.rows.clone();
        let mut cols = st.cols.clone();
        rows.sort_unstable();
        cols.sort_unstable();
        if !self.visited.insert((rows.clone(), cols.clone())) {
            return;
        }
        let p = self.p;
        if let Some(syms) = box_symbols(|r, c| p.get(r, c), &rows, &cols) {
            let k = rows.len();
            let covers = self
                .must
                .iter()
                .all(|&(r, c)| rows.binary_search(&r).is_ok() && cols.binary_search(&c).is_ok());
            if self.orders.contains(&k) && covers {
                self.found.push(SubBox { rows, cols, symbols: syms });
                if self.done() {
                    return;
                }
            }
        }
        if st.cols.len() >= self.bound {
            return;
        }
        for c in 0..p.order() {
            if !st.cols.contains(&c) {
                let mut alt = st.clone();
                alt.cols.push(c);
                self.explore(alt);
                if self.done() {
                    return;
                }
            }
        }
    }
}

fn run(
    p: &PerturbedSquare<'_>,
    orders: RangeInclusive<usize>,
    must: &[(usize, usize)],
    first_only: bool,
) -> Vec<SubBox> {
    let n = p.order();
    let bound = (*orders.end()).min(n);
    let mut search = Search {
        p,
        bound,
        orders: orders.clone(),
        must,
        visited: BTreeSet::new(),
        found: Vec::new(),
        first_only,
        scratch: Vec::new(),
    };
    if n < 2 || orders.is_empty() || bound < 2 {
        return Vec::new();
    }
    let seed = |rows: Vec<usize>, cols: Vec<usize>| State { rows, cols, syms: Vec::new() };
    if must.is_empty() {
        'outer: for r in 0..n {
            for c1 in 0..n {
                for c2 in c1 + 1..n {
                    search.explore(seed(alloc::vec![r], alloc::vec![c1, c2]));
                    if search.done() {
                        break 'outer;
                    }
                }
            }
        }
    } else {
        let mut rows: Vec<usize> = must.iter().map(|m| m.0).collect();
        let mut cols: Vec<usize> = must.iter().map(|m| m.1).collect();
        rows.sort_unstable();
        rows.dedup();
        cols.sort_unstable();
        cols.dedup();
        if cols.len() >= 2 || rows.len() >= 2 {
            search.explore(seed(rows, cols));
        } else {
            for c in 0..n {
                if c != cols[0] {
                    search.explore(seed(rows.clone(), alloc::vec![cols[0], c]));
                    if search.done() {
                        break;
                    }
                }
            }
        }
    }
    let mut found = search.found;
    found.sort_unstable();
    found.dedup();
    found
}

/// Every submatrix of `p` that is a Latin square with order in `orders` and
/// contains all cells of `must`, in shortlex order.
///
/// Candidate lookups in overridden lines can return two columns or rows; the
/// closure branches on them. Closed boxes are then grown one column at a
/// time so that non-minimal subsquares are found as well.
pub fn perturbed_subsquares(
    p: &PerturbedSquare<'_>,
    orders: RangeInclusive<usize>,
    must: &[(usize, usize)],
) -> Vec<SubBox> {
    run(p, orders, must, false)
}

/// Whether [`perturbed_subsquares`] would be non-empty. Stops at the first hit.
pub fn perturbed_has_subsquare(
    p: &PerturbedSquare<'_>,
    orders: RangeInclusive<usize>,
    must: &[(usize, usize)],
) -> bool {
    !run(p, orders, must, true).is_empty()
}
