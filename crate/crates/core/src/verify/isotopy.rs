use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::square::LatinSquare;

/// Bijections with `B[rows[r], cols[c]] = symbols[A[r, c]]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isotopism {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub symbols: Vec<u32>,
}

impl Isotopism {
    pub fn apply(&self, a: &LatinSquare) -> LatinSquare {
        let n = a.order();
        let mut cells = vec![0; n * n];
        for e in a.entries() {
            cells[self.rows[e.row] * n + self.cols[e.col]] = self.symbols[e.symbol as usize];
        }
        LatinSquare::from_cells_trusted(n, cells)
    }
}

pub const ISOTOPY_MAX: usize = 9;

const NONE: usize = usize::MAX;

#[derive(Clone)]
struct Partial {
    alpha: Vec<usize>,
    beta: Vec<usize>,
    gamma: Vec<usize>,
    gamma_inv: Vec<usize>,
    beta_inv: Vec<usize>,
    alpha_inv: Vec<usize>,
}

impl Partial {
    fn set_gamma(&mut self, s: usize, t: usize) -> bool {
        match (self.gamma[s], self.gamma_inv[t]) {
            (NONE, NONE) => {
                self.gamma[s] = t;
                self.gamma_inv[t] = s;
                true
            }
            (g, _) => g == t,
        }
    }

    fn set_beta(&mut self, c: usize, d: usize) -> bool {
        match (self.beta[c], self.beta_inv[d]) {
            (NONE, NONE) => {
                self.beta[c] = d;
                self.beta_inv[d] = c;
                true
            }
            (b, _) => b == d,
        }
    }

    /// Pushes every consequence of the rows mapped so far.
    fn propagate(&mut self, a: &LatinSquare, b: &LatinSquare) -> bool {
        let n = a.order();
        loop {
            let mut changed = false;
            for r in 0..n {
                let ar = self.alpha[r];
                if ar == NONE {
                    continue;
                }
                for c in 0..n {
                    let s = a.get(r, c) as usize;
                    match (self.beta[c], self.gamma[s]) {
                        (NONE, NONE) => {}
                        (NONE, g) => {
                            if !self.set_beta(c, b.col_of(ar, g as u32)) {
                                return false;
                            }
                            changed = true;
                        }
                        (d, NONE) => {
                            if !self.set_gamma(s, b.get(ar, d) as usize) {
                                return false;
                            }
                            changed = true;
                        }
                        (d, g) => {
                            if b.get(ar, d) as usize != g {
                                return false;
                            }
                        }
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }
}

fn dfs(a: &LatinSquare, b: &LatinSquare, st: Partial, next: usize) -> Option<Isotopism> {
    let n = a.order();
    if next == n {
        return Some(Isotopism {
            rows: st.alpha,
            cols: st.beta,
            symbols: st.gamma.iter().map(|&g| g as u32).collect(),
        });
    }
    for target in 0..n {
        if st.alpha_inv[target] != NONE {
            continue;
        }
        let mut alt = st.clone();
        alt.alpha[next] = target;
        alt.alpha_inv[target] = next;
        if alt.propagate(a, b) {
            if let Some(found) = dfs(a, b, alt, next + 1) {
                return Some(found);
            }
        }
    }
    None
}

/// An isotopism taking `a` to `b`, if one exists.
///
/// Fixes the image of column 0 and then maps rows one at a time; each row
/// image forces symbol and column images through the entries already placed.
pub fn is_isotopic(a: &LatinSquare, b: &LatinSquare) -> Result<Option<Isotopism>> {
    let n = a.order();
    if n != b.order() {
        return Err(Error::OrderMismatch(n, b.order()));
    }
    if n > ISOTOPY_MAX {
        return Err(Error::OrderTooLarge { order: n, max: ISOTOPY_MAX });
    }
    if n == 0 {
        return Ok(Some(Isotopism { rows: vec![], cols: vec![], symbols: vec![] }));
    }
    for c0 in 0..n {
        let mut st = Partial {
            alpha: vec![NONE; n],
            beta: vec![NONE; n],
            gamma: vec![NONE; n],
            gamma_inv: vec![NONE; n],
            beta_inv: vec![NONE; n],
            alpha_inv: vec![NONE; n],
        };
        st.set_beta(0, c0);
        if let Some(iso) = dfs(a, b, st, 0) {
            debug_assert_eq!(&iso.apply(a), b);
            return Ok(Some(iso));
        }
    }
    Ok(None)
}
