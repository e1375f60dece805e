//! Subsquare, intercalate, subhypercube and isotopy detection.
//!
//! Every detector that reports a witness reports the least one under the
//! shortlex order of [`SubBox`]: smallest order first, then sorted rows, then
//! sorted columns.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use rand::Rng;

use crate::error::{Error, Result};
use crate::square::LatinSquare;

mod hyper;
mod intercalate;
mod isotopy;
mod perturbed;

pub use hyper::{brute_force_subhypercubes, find_proper_subhypercube, HyperBox};
pub use intercalate::{contains_intercalate, count_intercalates, find_intercalate, intercalate_through};
pub use isotopy::{is_isotopic, Isotopism};
pub use perturbed::{perturbed_has_subsquare, perturbed_subsquares};

/// Rows, columns and symbols of a subsquare, each sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubBox {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub symbols: Vec<u32>,
}

impl SubBox {
    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn contains_cell(&self, r: usize, c: usize) -> bool {
        self.rows.binary_search(&r).is_ok() && self.cols.binary_search(&c).is_ok()
    }

    fn from_parts(mut rows: Vec<usize>, mut cols: Vec<usize>, mut symbols: Vec<u32>) -> Self {
        rows.sort_unstable();
        cols.sort_unstable();
        symbols.sort_unstable();
        Self { rows, cols, symbols }
    }
}

impl Ord for SubBox {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order()
            .cmp(&other.order())
            .then_with(|| self.rows.cmp(&other.rows))
            .then_with(|| self.cols.cmp(&other.cols))
    }
}

impl PartialOrd for SubBox {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Copy)]
enum Item {
    Row(usize),
    Col(usize),
    Sym(u32),
}

/// Reusable state for closure runs on one square.
pub struct Closer<'a> {
    l: &'a LatinSquare,
    in_r: Vec<bool>,
    in_c: Vec<bool>,
    in_s: Vec<bool>,
    rows: Vec<usize>,
    cols: Vec<usize>,
    syms: Vec<u32>,
    queue: Vec<Item>,
    counts: [usize; 3],
    bound: usize,
}

impl<'a> Closer<'a> {
    pub fn new(l: &'a LatinSquare) -> Self {
        let n = l.order();
        Self {
            l,
            in_r: vec![false; n],
            in_c: vec![false; n],
            in_s: vec![false; n],
            rows: Vec::new(),
            cols: Vec::new(),
            syms: Vec::new(),
            queue: Vec::new(),
            counts: [0; 3],
            bound: n,
        }
    }

    fn reset(&mut self) {
        for &r in &self.rows {
            self.in_r[r] = false;
        }
        for &c in &self.cols {
            self.in_c[c] = false;
        }
        for &s in &self.syms {
            self.in_s[s as usize] = false;
        }
        for it in self.queue.drain(..) {
            match it {
                Item::Row(r) => self.in_r[r] = false,
                Item::Col(c) => self.in_c[c] = false,
                Item::Sym(s) => self.in_s[s as usize] = false,
            }
        }
        self.rows.clear();
        self.cols.clear();
        self.syms.clear();
        self.counts = [0; 3];
    }

    #[inline]
    fn push(&mut self, it: Item) -> bool {
        let (flag, slot) = match it {
            Item::Row(r) => (&mut self.in_r[r], 0),
            Item::Col(c) => (&mut self.in_c[c], 1),
            Item::Sym(s) => (&mut self.in_s[s as usize], 2),
        };
        if *flag {
            return true;
        }
        *flag = true;
        self.queue.push(it);
        self.counts[slot] += 1;
        self.counts[slot] <= self.bound
    }

    /// Closes the seed; `false` once any of the row, column or symbol sets
    /// outgrows `bound`.
    pub fn run(&mut self, rows: &[usize], cols: &[usize], bound: usize) -> bool {
        self.reset();
        self.bound = bound;
        for &r in rows {
            if !self.push(Item::Row(r)) {
                return false;
            }
        }
        for &c in cols {
            if !self.push(Item::Col(c)) {
                return false;
            }
        }
        let l = self.l;
        while let Some(it) = self.queue.pop() {
            match it {
                Item::Row(r) => {
                    self.rows.push(r);
                    for t in 0..self.cols.len() {
                        if !self.push(Item::Sym(l.get(r, self.cols[t]))) {
                            return false;
                        }
                    }
                    for t in 0..self.syms.len() {
                        if !self.push(Item::Col(l.col_of(r, self.syms[t]))) {
                            return false;
                        }
                    }
                }
                Item::Col(c) => {
                    self.cols.push(c);
                    for t in 0..self.rows.len() {
                        if !self.push(Item::Sym(l.get(self.rows[t], c))) {
                            return false;
                        }
                    }
                    for t in 0..self.syms.len() {
                        if !self.push(Item::Row(l.row_of(c, self.syms[t]))) {
                            return false;
                        }
                    }
                }
                Item::Sym(s) => {
                    self.syms.push(s);
                    for t in 0..self.rows.len() {
                        if !self.push(Item::Col(l.col_of(self.rows[t], s))) {
                            return false;
                        }
                    }
                    for t in 0..self.cols.len() {
                        if !self.push(Item::Row(l.row_of(self.cols[t], s))) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// The box of the last successful [`Closer::run`].
    pub fn sub_box(&self) -> SubBox {
        SubBox::from_parts(self.rows.clone(), self.cols.clone(), self.syms.clone())
    }
}

/// The least subsquare containing rows `rows` and columns `cols`, or `None`
/// once the closure needs more than `bound` rows, columns or symbols.
pub fn closure(l: &LatinSquare, rows: &[usize], cols: &[usize], bound: usize) -> Option<SubBox> {
    let mut c = Closer::new(l);
    c.run(rows, cols, bound).then(|| c.sub_box())
}

/// Calls `f` on one seed `(r, c1, c2)` per short cycle of every column pair.
///
/// Rows in the same cycle of the permutation `r -> row_of(c1, L[r, c2])` give
/// the same closure, and a cycle longer than `n / 2` already exceeds every
/// proper subsquare. Stops early when `f` returns `false`.
fn for_each_seed(l: &LatinSquare, mut f: impl FnMut(usize, usize, usize) -> bool) {
    let n = l.order();
    let half = n / 2;
    let mut seen = vec![false; n];
    for c1 in 0..n {
        for c2 in c1 + 1..n {
            seen.iter_mut().for_each(|b| *b = false);
            for r in 0..n {
                if seen[r] {
                    continue;
                }
                let mut len = 0;
                let mut x = r;
                while !seen[x] {
                    seen[x] = true;
                    len += 1;
                    x = l.row_of(c1, l.get(x, c2));
                }
                if len <= half && !f(r, c1, c2) {
                    return;
                }
            }
        }
    }
}

/// Every subsquare that is the closure of a seed `({r}, {c1, c2})`, without
/// duplicates. These are exactly the minimal proper subsquares.
pub fn minimal_subsquares(l: &LatinSquare) -> Vec<SubBox> {
    let mut closer = Closer::new(l);
    let half = l.order() / 2;
    let mut out = Vec::new();
    for_each_seed(l, |r, c1, c2| {
        if closer.run(&[r], &[c1, c2], half) {
            out.push(closer.sub_box());
        }
        true
    });
    out.sort_unstable();
    out.dedup();
    out
}

/// The shortlex-least proper subsquare, or `None` when `l` is N∞.
pub fn find_proper_subsquare(l: &LatinSquare) -> Option<SubBox> {
    minimal_subsquares(l).into_iter().next()
}

/// Whether `l` has no proper subsquare. Stops at the first one found.
pub fn is_ninf(l: &LatinSquare) -> bool {
    let mut closer = Closer::new(l);
    let half = l.order() / 2;
    let mut clean = true;
    for_each_seed(l, |r, c1, c2| {
        clean = !closer.run(&[r], &[c1, c2], half);
        clean
    });
    clean
}

/// Closes `samples` random seeds `({r}, {c1, c2})` and returns the first
/// proper subsquare hit.
pub fn sampled_subsquare<R: Rng>(l: &LatinSquare, samples: u64, rng: &mut R) -> Option<SubBox> {
    let n = l.order();
    if n < 4 {
        return None;
    }
    let mut closer = Closer::new(l);
    for _ in 0..samples {
        let r = rng.gen_range(0..n);
        let c1 = rng.gen_range(0..n);
        let mut c2 = rng.gen_range(0..n - 1);
        if c2 >= c1 {
            c2 += 1;
        }
        if closer.run(&[r], &[c1, c2], n / 2) {
            return Some(closer.sub_box());
        }
    }
    None
}

/// Largest order accepted by [`brute_force_subsquares`].
pub const BRUTE_FORCE_MAX: usize = 8;

/// All proper subsquares by direct enumeration of equal-size row and column
/// subsets, in shortlex order.
pub fn brute_force_subsquares(l: &LatinSquare) -> Result<Vec<SubBox>> {
    let n = l.order();
    if n > BRUTE_FORCE_MAX {
        return Err(Error::OrderTooLarge { order: n, max: BRUTE_FORCE_MAX });
    }
    let mut by_size: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n + 1];
    for mask in 0u32..(1 << n) {
        let set: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        by_size[set.len()].push(set);
    }
    let mut out = Vec::new();
    for subsets in by_size.iter().take(n).skip(2) {
        for rows in subsets {
            for cols in subsets {
                if let Some(syms) = box_symbols(|r, c| l.get(r, c), rows, cols) {
                    out.push(SubBox::from_parts(rows.clone(), cols.clone(), syms));
                }
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// The symbol set of `rows x cols` if that submatrix is a Latin square.
pub(crate) fn box_symbols(
    get: impl Fn(usize, usize) -> u32,
    rows: &[usize],
    cols: &[usize],
) -> Option<Vec<u32>> {
    if rows.len() != cols.len() {
        return None;
    }
    let mut syms: Vec<u32> = rows.iter().map(|&r| get(r, cols[0])).collect();
    syms.sort_unstable();
    if syms.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    for &r in rows {
        let mut line: Vec<u32> = cols.iter().map(|&c| get(r, c)).collect();
        line.sort_unstable();
        if line != syms {
            return None;
        }
    }
    for &c in cols {
        let mut line: Vec<u32> = rows.iter().map(|&r| get(r, c)).collect();
        line.sort_unstable();
        if line != syms {
            return None;
        }
    }
    Some(syms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::fixtures;

    #[test]
    fn closure_on_cyclic_four() {
        let l = LatinSquare::cyclic(4);
        let b = closure(&l, &[0], &[0, 2], 2).unwrap();
        assert_eq!(b.rows, [0, 2]);
        assert_eq!(b.cols, [0, 2]);
        // one-based symbols {2, 4}
        assert_eq!(b.symbols, [1, 3]);
    }

    #[test]
    fn closure_on_e_exceeds() {
        assert!(closure(&fixtures::e(), &[0], &[0, 1], 4).is_none());
    }

    #[test]
    fn closure_of_everything_is_whole_square() {
        let l = fixtures::a9();
        let all: Vec<usize> = (0..9).collect();
        assert_eq!(closure(&l, &all, &all, 9).unwrap().order(), 9);
    }

    #[test]
    fn fixtures_are_ninf() {
        for l in [fixtures::e(), fixtures::a8(), fixtures::b8(), fixtures::a9(), fixtures::b9()] {
            assert!(is_ninf(&l));
            assert_eq!(find_proper_subsquare(&l), None);
        }
        assert!(brute_force_subsquares(&fixtures::e()).unwrap().is_empty());
    }

    #[test]
    fn cyclic_orders() {
        assert_eq!(find_proper_subsquare(&LatinSquare::cyclic(4)).unwrap().order(), 2);
        assert!(is_ninf(&LatinSquare::cyclic(5)));
        assert!(brute_force_subsquares(&LatinSquare::cyclic(2)).unwrap().is_empty());
        assert!(brute_force_subsquares(&LatinSquare::cyclic(9)).is_err());
    }

    #[test]
    fn sampled_finds_intercalate_in_cyclic_eight() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        assert!(sampled_subsquare(&LatinSquare::cyclic(8), 1000, &mut rng).is_some());
        assert!(sampled_subsquare(&fixtures::e(), 1000, &mut rng).is_none());
    }
}
