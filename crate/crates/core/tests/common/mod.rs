//! Direct-enumeration oracles, independent of the library's detectors.

#![allow(dead_code)]

use std::collections::BTreeSet;

/// `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Whether the `rows x cols` submatrix of `get` is a Latin square.
pub fn is_latin_box(get: &dyn Fn(usize, usize) -> u32, rows: &[usize], cols: &[usize]) -> bool {
    let k = rows.len();
    let mut all = BTreeSet::new();
    for &r in rows {
        let line: BTreeSet<u32> = cols.iter().map(|&c| get(r, c)).collect();
        if line.len() != k {
            return false;
        }
        all.extend(line);
    }
    all.len() == k && cols.iter().all(|&c| rows.iter().map(|&r| get(r, c)).collect::<BTreeSet<_>>().len() == k)
}

/// Every Latin `k x k` submatrix with `lo <= k <= hi`, sorted by
/// `(k, rows, cols)`.
pub fn latin_boxes(n: usize, get: &dyn Fn(usize, usize) -> u32, lo: usize, hi: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut out = Vec::new();
    for k in lo..=hi.min(n) {
        let subs = subsets(n, k);
        for rows in &subs {
            for cols in &subs {
                if is_latin_box(get, rows, cols) {
                    out.push((rows.clone(), cols.clone()));
                }
            }
        }
    }
    out
}

/// Proper subsquares of a Latin square given as a row-major grid.
pub fn proper_subsquares(n: usize, cells: &[u32]) -> Vec<(Vec<usize>, Vec<usize>)> {
    latin_boxes(n, &|r, c| cells[r * n + c], 2, n.saturating_sub(1))
}

/// Whether `data` (last axis fastest) is a Latin hypercube of order `n`.
pub fn is_latin_hypercube(n: usize, d: usize, data: &[u32]) -> bool {
    if data.len() != n.pow(d as u32) {
        return false;
    }
    for axis in 0..d {
        let stride = n.pow((d - 1 - axis) as u32);
        for start in 0..data.len() {
            if !(start / stride).is_multiple_of(n) {
                continue;
            }
            let line: BTreeSet<u32> = (0..n).map(|t| data[start + t * stride]).collect();
            if line.len() != n || line.iter().any(|&v| v as usize >= n) {
                return false;
            }
        }
    }
    true
}

/// Proper subhypercubes by enumeration of equal-size coordinate subsets on
/// every axis. Stops at the first when `first_only`.
pub fn proper_subhypercubes(n: usize, d: usize, data: &[u32], first_only: bool) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    for k in 2..n {
        let subs = subsets(n, k);
        let mut pick = vec![0usize; d];
        'outer: loop {
            let axes: Vec<&Vec<usize>> = pick.iter().map(|&p| &subs[p]).collect();
            let mut syms = BTreeSet::new();
            let mut idx = vec![0usize; d];
            let mut ok = true;
            'cells: loop {
                let mut flat = 0;
                for a in 0..d {
                    flat = flat * n + axes[a][idx[a]];
                }
                syms.insert(data[flat]);
                if syms.len() > k {
                    ok = false;
                    break;
                }
                for a in (0..d).rev() {
                    idx[a] += 1;
                    if idx[a] < k {
                        continue 'cells;
                    }
                    idx[a] = 0;
                }
                break;
            }
            if ok {
                out.push(axes.into_iter().cloned().collect());
                if first_only {
                    return out;
                }
            }
            for a in (0..d).rev() {
                pick[a] += 1;
                if pick[a] < subs.len() {
                    continue 'outer;
                }
                pick[a] = 0;
            }
            break;
        }
    }
    out
}
