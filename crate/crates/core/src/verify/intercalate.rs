use alloc::vec;
use alloc::vec::Vec;

use super::SubBox;
use crate::perturbed::PerturbedSquare;
use crate::square::LatinSquare;

/// The shortlex-least intercalate of `p`.
pub fn find_intercalate(p: &PerturbedSquare<'_>) -> Option<SubBox> {
    let n = p.order();
    let mut cands = Vec::new();
    for r1 in 0..n {
        for r2 in r1 + 1..n {
            for c1 in 0..n {
                let a = p.get(r1, c1);
                let b = p.get(r2, c1);
                if a == b {
                    continue;
                }
                cands.clear();
                p.cols_with(r1, b, &mut cands);
                let hit = cands.iter().copied().filter(|&c2| c2 > c1 && p.get(r2, c2) == a).min();
                if let Some(c2) = hit {
                    let mut symbols = vec![a, b];
                    symbols.sort_unstable();
                    return Some(SubBox { rows: vec![r1, r2], cols: vec![c1, c2], symbols });
                }
            }
        }
    }
    None
}

/// Whether some 2x2 submatrix of `p` is a Latin square on two symbols.
pub fn contains_intercalate(p: &PerturbedSquare<'_>) -> bool {
    if p.k() == 0 {
        return count_intercalates_until(p.base(), 1) > 0;
    }
    find_intercalate(p).is_some()
}

/// Number of intercalates of `l`.
pub fn count_intercalates(l: &LatinSquare) -> usize {
    count_intercalates_until(l, usize::MAX)
}

fn count_intercalates_until(l: &LatinSquare, stop: usize) -> usize {
    let n = l.order();
    let mut count = 0;
    for r1 in 0..n {
        for r2 in r1 + 1..n {
            for c1 in 0..n {
                let c2 = l.col_of(r1, l.get(r2, c1));
                if c2 > c1 && l.get(r2, c2) == l.get(r1, c1) {
                    count += 1;
                    if count >= stop {
                        return count;
                    }
                }
            }
        }
    }
    count
}

/// Whether some intercalate of `p` contains `cell`.
pub fn intercalate_through(p: &PerturbedSquare<'_>, cell: (usize, usize)) -> bool {
    let (r, c) = cell;
    let a = p.get(r, c);
    let mut cands = Vec::new();
    for r2 in 0..p.order() {
        if r2 == r {
            continue;
        }
        let b = p.get(r2, c);
        if b == a {
            continue;
        }
        cands.clear();
        p.cols_with(r, b, &mut cands);
        if cands.iter().any(|&c2| c2 != c && p.get(r2, c2) == a) {
            return true;
        }
    }
    false
}
