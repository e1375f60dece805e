//! Checks for corrupting pairs and for membership of the family 𝒳: pairs
//! `(L, s)` with `L` an N∞ square of order at least 10 satisfying the
//! strong-allowable-shift condition (i) and the row-cycle conditions (ii) and
//! (iii).

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::construct::fixtures;
use crate::error::{Error, Result};
use crate::perturbed::PerturbedSquare;
use crate::square::{shift_by, LatinSquare};
use crate::verify::{
    contains_intercalate, count_intercalates, intercalate_through, is_isotopic, is_ninf,
    perturbed_has_subsquare, perturbed_subsquares,
};

/// Outcome of one clause.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// A list of clause outcomes.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    fn push(&mut self, name: &'static str, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { name, passed, detail: detail.into() });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Rows `i < j` (both at least 2), columns `l` and symbol `k` of `A` with
/// `tau_{i,j}^f(k) = A[j, l[f - 1]]` and `tau_{i,j}^3(k) = k + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CycleTuple {
    pub i: usize,
    pub j: usize,
    pub l: [usize; 3],
    pub k: u32,
}

impl CycleTuple {
    /// From one-based `(i, j, l1, l2, l3, k)`.
    pub fn from_one_based(t: [usize; 6]) -> Self {
        Self {
            i: t[0] - 1,
            j: t[1] - 1,
            l: [t[2] - 1, t[3] - 1, t[4] - 1],
            k: (t[5] - 1) as u32,
        }
    }

    pub fn to_one_based(&self) -> [usize; 6] {
        [self.i + 1, self.j + 1, self.l[0] + 1, self.l[1] + 1, self.l[2] + 1, self.k as usize + 1]
    }
}

/// A corrupting pair with the data the recursion reads off it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrupterData {
    pub a: LatinSquare,
    pub b: LatinSquare,
    /// `A[0, 0], A[0, 1], A[0, 2]`.
    pub d: [u32; 3],
    pub p3: CycleTuple,
}

impl CorrupterData {
    pub fn new(a: LatinSquare, b: LatinSquare, p3: CycleTuple) -> Self {
        let d = [a.get(0, 0), a.get(0, 1), a.get(0, 2)];
        Self { a, b, d, p3 }
    }

    /// `(A8, B8)` with the tuple `(5, 7, 4, 6, 7, 4)`.
    pub fn alpha8() -> Self {
        Self::new(fixtures::a8(), fixtures::b8(), CycleTuple::from_one_based([5, 7, 4, 6, 7, 4]))
    }

    /// `(A9, B9)` with the tuple `(3, 6, 2, 5, 9, 4)`.
    pub fn alpha9() -> Self {
        Self::new(fixtures::a9(), fixtures::b9(), CycleTuple::from_one_based([3, 6, 2, 5, 9, 4]))
    }

    pub fn for_order(alpha: usize) -> Result<Self> {
        match alpha {
            8 => Ok(Self::alpha8()),
            9 => Ok(Self::alpha9()),
            other => Err(Error::BadOrder(other)),
        }
    }

    pub fn order(&self) -> usize {
        self.a.order()
    }
}

/// Checks that `(a, b)` is a corrupting pair: `a` is N∞, `b` is isotopic to
/// `a`, the two agree exactly at cell `(0, 0)`, and no near copy
/// `B[i, j] -> A[i, j]` has a proper subsquare through `(0, 0)`.
pub fn check_corrupting_pair(a: &LatinSquare, b: &LatinSquare) -> Report {
    let mut rep = Report::default();
    let n = a.order();
    if n != b.order() {
        rep.push("orders", false, format!("{} vs {}", n, b.order()));
        return rep;
    }
    rep.push("ninf", is_ninf(a), "");
    let iso = is_isotopic(a, b);
    rep.push("isotopic", matches!(iso, Ok(Some(_))), format!("{:?}", iso.as_ref().map(|o| o.is_some())));
    let agree: Vec<(usize, usize)> = a
        .entries()
        .filter(|e| b.get(e.row, e.col) == e.symbol)
        .map(|e| (e.row, e.col))
        .collect();
    rep.push("agreement", agree == [(0, 0)], format!("{} agreeing cells", agree.len()));
    let mut bad = None;
    for e in a.entries() {
        let sigma = b.get(e.row, e.col);
        if sigma == e.symbol {
            continue;
        }
        let p = PerturbedSquare::near_copy(a, (e.row, e.col), sigma).expect("distinct symbols");
        if perturbed_has_subsquare(&p, 2..=n - 1, &[(0, 0)]) {
            bad = Some((e.row, e.col));
            break;
        }
    }
    rep.push(
        "principal",
        bad.is_none(),
        bad.map_or(String::new(), |(r, c)| format!("subsquare through (1,1) after replacing ({},{})", r + 1, c + 1)),
    );
    rep
}

fn asub(d: &[u32; 3]) -> [(u32, (usize, usize)); 6] {
    [(d[0], (1, 0)), (d[1], (0, 0)), (d[1], (1, 1)), (d[2], (0, 1)), (d[2], (1, 2)), (d[0], (0, 2))]
}

fn prop7(d: &[u32; 3]) -> [(u32, (usize, usize)); 5] {
    [(d[1], (0, 0)), (d[2], (0, 0)), (d[0], (0, 1)), (d[0], (0, 2)), (d[0], (1, 0))]
}

/// Whether `tuple` satisfies every clause of the cycle-tuple property.
pub fn check_cycle_tuple(a: &LatinSquare, d: &[u32; 3], t: &CycleTuple) -> bool {
    let n = a.order();
    if t.i < 2 || t.i >= t.j || t.j >= n || t.l.iter().any(|&c| c >= n) || t.k as usize >= n {
        return false;
    }
    let tau = |s| a.tau(t.i, t.j, s);
    let orbit = [t.k, tau(t.k), tau(tau(t.k))];
    let third = tau(orbit[2]);
    let k1 = shift_by(t.k, 1, n);
    (0..3).all(|f| a.get(t.j, t.l[f]) == tau(orbit[f]))
        && third == k1
        && !d.contains(&k1)
        && !orbit.contains(&a.get(t.i, 0))
}

/// The least tuple, ordered by `(i, j, k)`, passing [`check_cycle_tuple`].
pub fn find_cycle_tuple(a: &LatinSquare) -> Option<CycleTuple> {
    let n = a.order();
    let d = [a.get(0, 0), a.get(0, 1 % n), a.get(0, 2 % n)];
    for i in 2..n {
        for j in i + 1..n {
            for k in 0..n as u32 {
                let mut s = k;
                let mut l = [0; 3];
                for slot in &mut l {
                    s = a.tau(i, j, s);
                    *slot = a.col_of(j, s);
                }
                let t = CycleTuple { i, j, l, k };
                if check_cycle_tuple(a, &d, &t) {
                    return Some(t);
                }
            }
        }
    }
    None
}

/// Checks Properties 2 to 7.
pub fn check_properties(data: &CorrupterData) -> Report {
    let (a, b, d) = (&data.a, &data.b, &data.d);
    let n = a.order();
    let mut rep = Report::default();

    let tau = |s| a.tau(0, 1, s);
    let cycle = tau(d[0]) == d[1] && tau(d[1]) == d[2] && tau(d[2]) == d[0];
    let plus: Vec<u32> = d.iter().map(|&x| shift_by(x, 1, n)).collect();
    let disjoint = plus.iter().all(|x| !d.contains(x));
    rep.push("P2", cycle && disjoint, format!("cycle {cycle}, disjoint {disjoint}"));

    rep.push("P3", check_cycle_tuple(a, d, &data.p3), format!("{:?}", data.p3.to_one_based()));

    // coincidences within a column
    let mut hits = Vec::new();
    for j in 0..3 {
        for i in 0..2 {
            for i2 in 0..2 {
                if a.get(i, j) == b.get(i2, j) {
                    hits.push(((i, j), (i2, j)));
                }
            }
        }
    }
    rep.push("P4", hits == [((0, 0), (0, 0))], format!("{} coincidences", hits.len()));

    let mut p5 = true;
    let mut detail = String::new();
    for (idx, &(sigma, cell)) in asub(d).iter().enumerate() {
        let p = PerturbedSquare::near_copy(a, cell, sigma).expect("asub near copies are defined");
        let subs = perturbed_subsquares(&p, 2..=n - 1, &[]);
        let ok = if idx == 5 {
            !subs.is_empty() && subs.iter().all(|s| s.order() == 2)
        } else {
            subs.is_empty()
        };
        if !ok {
            p5 = false;
            detail = format!("near copy at ({},{}) has {} subsquares", cell.0 + 1, cell.1 + 1, subs.len());
        }
    }
    rep.push("P5", p5, detail);

    let (p6, detail) = property6(a, b, d);
    rep.push("P6", p6, detail);

    let mut p7 = true;
    let mut detail = String::new();
    for &(sigma, cell) in &prop7(d) {
        let p = PerturbedSquare::near_copy(a, cell, sigma).expect("near copies are defined");
        if perturbed_has_subsquare(&p, 3..=n - 1, &[]) {
            p7 = false;
            detail = format!("near copy at ({},{}) has a subsquare of order > 2", cell.0 + 1, cell.1 + 1);
        }
    }
    rep.push("P7", p7, detail);
    rep
}

fn property6(a: &LatinSquare, b: &LatinSquare, d: &[u32; 3]) -> (bool, String) {
    let n = a.order();
    for &(sigma, hole) in &asub(d) {
        let c = PerturbedSquare::near_copy(a, hole, sigma).expect("defined");
        for e in b.entries() {
            let cell = (e.row, e.col);
            if c.get(cell.0, cell.1) == e.symbol {
                continue;
            }
            let dm = c.clone().with_replacement(cell, e.symbol).expect("distinct symbols");
            let aliens: Vec<(usize, usize)> = dm.holes().collect();
            if aliens.len() < 2 {
                continue;
            }
            let (u, v) = (aliens[0], aliens[1]);
            if monochrome_through(&dm, u, v) {
                return (false, format!("single-symbol submatrix in D at ({},{})", cell.0 + 1, cell.1 + 1));
            }
            for s in perturbed_subsquares(&dm, 2..=n - 1, &[u, v]) {
                if s.order() != 2 {
                    return (false, format!("order-{} subsquare in D at ({},{})", s.order(), cell.0 + 1, cell.1 + 1));
                }
                if s.contains_cell(0, 0) && !(u.0 == 0 && v.0 == 0) && !(u.1 == 0 && v.1 == 0) {
                    return (false, format!("principal intercalate in D at ({},{})", cell.0 + 1, cell.1 + 1));
                }
            }
        }
    }
    (true, String::new())
}

/// Whether a 2x2 submatrix holding a single symbol contains both `u` and `v`.
/// Any larger single-symbol square submatrix through both contains one.
fn monochrome_through(p: &PerturbedSquare<'_>, u: (usize, usize), v: (usize, usize)) -> bool {
    let n = p.order();
    let same = |cells: &[(usize, usize)]| cells.iter().all(|&(r, c)| p.get(r, c) == p.get(u.0, u.1));
    if u.0 != v.0 && u.1 != v.1 {
        return same(&[u, v, (u.0, v.1), (v.0, u.1)]);
    }
    if u.0 == v.0 {
        (0..n).any(|r| r != u.0 && same(&[v, (r, u.1), (r, v.1)]))
    } else {
        (0..n).any(|c| c != u.1 && same(&[v, (u.0, c), (v.0, c)]))
    }
}

/// A length-3 row cycle on rows `x1, x2` through column `y3`, expanded so
/// that `z[f] = L[x1, y[f]]` and `L[x2, y[f]] = z[f + 1 mod 3]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CondIIWitness {
    pub x1: usize,
    pub x2: usize,
    pub y: [usize; 3],
    pub z: [u32; 3],
}

impl CondIIWitness {
    pub fn y3(&self) -> usize {
        self.y[2]
    }

    /// Expands `(x1, x2, y3)`; `None` unless the cycle has length 3.
    pub fn expand(l: &LatinSquare, x1: usize, x2: usize, y3: usize) -> Option<Self> {
        let n = l.order();
        if x1 == x2 || x1 >= n || x2 >= n || y3 >= n {
            return None;
        }
        let z3 = l.get(x1, y3);
        let z1 = l.get(x2, y3);
        let y1 = l.col_of(x1, z1);
        let z2 = l.get(x2, y1);
        let y2 = l.col_of(x1, z2);
        if l.get(x2, y2) != z3 || z2 == z3 || z1 == z2 {
            return None;
        }
        Some(Self { x1, x2, y: [y1, y2, y3], z: [z1, z2, z3] })
    }
}

/// Rows `r1, r2` and symbol `sigma`, with the columns `c` of `sigma`,
/// `tau(sigma)`, `tau^2(sigma)` in row `r1` where `tau = tau_{r1,r2}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CondIIIWitness {
    pub r1: usize,
    pub r2: usize,
    pub sigma: u32,
    pub c: [usize; 3],
}

impl CondIIIWitness {
    /// Expands `(r1, r2, sigma)`; `None` unless `tau^3(sigma) = sigma + s`
    /// with three distinct columns.
    pub fn expand(l: &LatinSquare, s: usize, r1: usize, r2: usize, sigma: u32) -> Option<Self> {
        let n = l.order();
        if r1 == r2 || r1 >= n || r2 >= n || sigma as usize >= n {
            return None;
        }
        let t1 = l.tau(r1, r2, sigma);
        let t2 = l.tau(r1, r2, t1);
        let c = [l.col_of(r1, sigma), l.col_of(r1, t1), l.col_of(r1, t2)];
        if c[0] == c[2] || l.get(r2, c[2]) != shift_by(sigma, s, n) {
            return None;
        }
        Some(Self { r1, r2, sigma, c })
    }

    /// `sigma, tau(sigma), tau^2(sigma)`.
    pub fn orbit(&self, l: &LatinSquare) -> [u32; 3] {
        [self.sigma, l.get(self.r1, self.c[1]), l.get(self.r1, self.c[2])]
    }
}

fn check_shift(n: usize, s: usize) -> Result<()> {
    if s == 0 || s >= n {
        return Err(Error::BadShift { shift: s, order: n });
    }
    Ok(())
}

/// Whether the near copy `L[x2, y3] -> L[x1, y3]` (or its condition (iii)
/// analogue) is intercalate-free. With `base_n2` only intercalates through
/// the hole are searched for.
fn near_copy_n2(l: &LatinSquare, from: (usize, usize), to: (usize, usize), base_n2: bool) -> bool {
    let p = PerturbedSquare::near_copy(l, to, l.get(from.0, from.1)).expect("distinct rows");
    if base_n2 {
        !intercalate_through(&p, to)
    } else {
        !contains_intercalate(&p)
    }
}

fn cond_ii(l: &LatinSquare, s: usize, x1: usize, x2: usize, y3: usize, base_n2: bool) -> Option<CondIIWitness> {
    let w = CondIIWitness::expand(l, x1, x2, y3)?;
    let n = l.order();
    if w.x1 == 0 || w.x2 == 0 || w.y.contains(&0) {
        return None;
    }
    if w.z.contains(&shift_by(l.get(0, 0), s, n)) {
        return None;
    }
    near_copy_n2(l, (x2, y3), (x1, y3), base_n2).then_some(w)
}

fn cond_iii(l: &LatinSquare, s: usize, r1: usize, r2: usize, sigma: u32, base_n2: bool) -> Option<CondIIIWitness> {
    let w = CondIIIWitness::expand(l, s, r1, r2, sigma)?;
    let n = l.order();
    if r1 == 0 || r2 == 0 || w.c.contains(&0) {
        return None;
    }
    let [o0, o1, o2] = w.orbit(l);
    let forbidden = [o0, o1, o2, shift_by(sigma, s, n)];
    let p = l.get(0, 0);
    if forbidden.contains(&p) || forbidden.contains(&shift_by(p, s, n)) {
        return None;
    }
    near_copy_n2(l, (r2, w.c[2]), (r1, w.c[2]), base_n2).then_some(w)
}

/// Condition (ii) on the witness `w`, re-expanded from `(x1, x2, y3)`.
pub fn check_condition_ii(l: &LatinSquare, s: usize, w: &CondIIWitness) -> bool {
    if check_shift(l.order(), s).is_err() {
        return false;
    }
    cond_ii(l, s, w.x1, w.x2, w.y3(), false).as_ref() == Some(w)
}

/// Condition (iii) on the witness `w`, re-expanded from `(r1, r2, sigma)`.
pub fn check_condition_iii(l: &LatinSquare, s: usize, w: &CondIIIWitness) -> bool {
    if check_shift(l.order(), s).is_err() {
        return false;
    }
    cond_iii(l, s, w.r1, w.r2, w.sigma, false).as_ref() == Some(w)
}

/// [`check_condition_ii`] that, when `base_n2` is set, only looks for
/// intercalates through the hole. Sound when `l` is known to be N2.
pub fn check_condition_ii_with(l: &LatinSquare, s: usize, w: &CondIIWitness, base_n2: bool) -> bool {
    check_shift(l.order(), s).is_ok() && cond_ii(l, s, w.x1, w.x2, w.y3(), base_n2).as_ref() == Some(w)
}

/// [`check_condition_iii`] counterpart of [`check_condition_ii_with`].
pub fn check_condition_iii_with(l: &LatinSquare, s: usize, w: &CondIIIWitness, base_n2: bool) -> bool {
    check_shift(l.order(), s).is_ok() && cond_iii(l, s, w.r1, w.r2, w.sigma, base_n2).as_ref() == Some(w)
}

/// Condition (i): no near copy `(L[i, j] + s) -> L[i, j]` has a subsquare of
/// order 8 or 9.
pub fn check_condition_i(l: &LatinSquare, s: usize) -> Result<bool> {
    let n = l.order();
    check_shift(n, s)?;
    // a subsquare of order 8 or 9 of L survives in some near copy
    if !is_ninf(l) && perturbed_has_subsquare(&PerturbedSquare::new(l), 8..=9, &[]) {
        return Ok(false);
    }
    for e in l.entries() {
        let cell = (e.row, e.col);
        let p = PerturbedSquare::near_copy(l, cell, shift_by(e.symbol, s, n)).expect("s is nonzero");
        if perturbed_has_subsquare(&p, 8..=9, &[cell]) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every Condition (ii) witness, in lexicographic order of `(x1, x2, y3)`.
pub fn condition_ii_witnesses(l: &LatinSquare, s: usize) -> Vec<CondIIWitness> {
    let n = l.order();
    let base_n2 = count_intercalates(l) == 0;
    let mut out = Vec::new();
    for x1 in 1..n {
        for x2 in 1..n {
            for y3 in 1..n {
                out.extend(cond_ii(l, s, x1, x2, y3, base_n2));
            }
        }
    }
    out
}

/// Every Condition (iii) witness, in lexicographic order of `(r1, r2, sigma)`.
pub fn condition_iii_witnesses(l: &LatinSquare, s: usize) -> Vec<CondIIIWitness> {
    let n = l.order();
    let base_n2 = count_intercalates(l) == 0;
    let mut out = Vec::new();
    for r1 in 1..n {
        for r2 in 1..n {
            for sigma in 0..n as u32 {
                out.extend(cond_iii(l, s, r1, r2, sigma, base_n2));
            }
        }
    }
    out
}

/// The lexicographically least witnesses for Conditions (ii) and (iii).
/// `None` below order 10 or when either condition has no witness.
pub fn find_witnesses(l: &LatinSquare, s: usize) -> Option<(CondIIWitness, CondIIIWitness)> {
    let n = l.order();
    if n < 10 || check_shift(n, s).is_err() {
        return None;
    }
    let base_n2 = count_intercalates(l) == 0;
    let w2 = (1..n)
        .flat_map(|x1| (1..n).flat_map(move |x2| (1..n).map(move |y3| (x1, x2, y3))))
        .find_map(|(x1, x2, y3)| cond_ii(l, s, x1, x2, y3, base_n2))?;
    let w3 = (1..n)
        .flat_map(|r1| (1..n).flat_map(move |r2| (0..n as u32).map(move |g| (r1, r2, g))))
        .find_map(|(r1, r2, g)| cond_iii(l, s, r1, r2, g, base_n2))?;
    Some((w2, w3))
}

/// How much of the membership certificate has been checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CertLevel {
    /// Conditions (ii) and (iii) hold on the stored witnesses.
    Witnessed,
    /// Additionally the square is N∞.
    ConditionsChecked,
    /// Additionally Condition (i) was checked on every cell.
    FullyVerified,
}

impl CertLevel {
    pub fn name(self) -> &'static str {
        match self {
            CertLevel::Witnessed => "witnessed",
            CertLevel::ConditionsChecked => "conditions_checked",
            CertLevel::FullyVerified => "fully_verified",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "witnessed" => Some(CertLevel::Witnessed),
            "conditions_checked" => Some(CertLevel::ConditionsChecked),
            "fully_verified" => Some(CertLevel::FullyVerified),
            _ => None,
        }
    }
}

/// A member `(square, shift)` of 𝒳 with its witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XMember {
    pub square: LatinSquare,
    pub shift: usize,
    pub w2: CondIIWitness,
    pub w3: CondIIIWitness,
    pub level: CertLevel,
}

impl XMember {
    pub fn order(&self) -> usize {
        self.square.order()
    }
}

fn fail(msg: impl Into<String>) -> Error {
    Error::CertificationFailed(msg.into())
}

/// Certifies `(l, s)` with witnesses found by [`find_witnesses`].
pub fn certify_x_member(l: &LatinSquare, s: usize, level: CertLevel) -> Result<XMember> {
    let n = l.order();
    if n < 10 {
        return Err(fail(format!("order {n} is below 10")));
    }
    check_shift(n, s).map_err(|_| fail(format!("shift {s} outside 1..{}", n - 1)))?;
    if level >= CertLevel::ConditionsChecked && !is_ninf(l) {
        return Err(fail("square has a proper subsquare"));
    }
    let (w2, w3) = find_witnesses(l, s).ok_or_else(|| fail("no witnesses for conditions (ii) and (iii)"))?;
    certify_with(l.clone(), s, w2, w3, level, true)
}

/// Certifies `(l, s)` on the given witnesses.
pub fn certify_with_witnesses(
    l: LatinSquare,
    s: usize,
    w2: CondIIWitness,
    w3: CondIIIWitness,
    level: CertLevel,
) -> Result<XMember> {
    certify_with(l, s, w2, w3, level, false)
}

fn certify_with(
    l: LatinSquare,
    s: usize,
    w2: CondIIWitness,
    w3: CondIIIWitness,
    level: CertLevel,
    ninf_done: bool,
) -> Result<XMember> {
    let n = l.order();
    if n < 10 {
        return Err(fail(format!("order {n} is below 10")));
    }
    check_shift(n, s).map_err(|_| fail(format!("shift {s} outside 1..{}", n - 1)))?;
    if !check_condition_ii(&l, s, &w2) {
        return Err(fail("condition (ii) fails on its witness"));
    }
    if !check_condition_iii(&l, s, &w3) {
        return Err(fail("condition (iii) fails on its witness"));
    }
    if level >= CertLevel::ConditionsChecked && !ninf_done && !is_ninf(&l) {
        return Err(fail("square has a proper subsquare"));
    }
    if level >= CertLevel::FullyVerified && !check_condition_i(&l, s)? {
        return Err(fail("condition (i) fails"));
    }
    Ok(XMember { square: l, shift: s, w2, w3, level })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn found_tuples_pass() {
        for data in [CorrupterData::alpha8(), CorrupterData::alpha9()] {
            let t = find_cycle_tuple(&data.a).unwrap();
            assert!(check_cycle_tuple(&data.a, &data.d, &t));
            assert!((t.i, t.j, t.k) <= (data.p3.i, data.p3.j, data.p3.k));
        }
        assert_eq!(find_cycle_tuple(&LatinSquare::cyclic(2)), None);
    }

    #[test]
    fn d_triples() {
        let one = |d: [u32; 3]| d.map(|x| x + 1);
        assert_eq!(one(CorrupterData::alpha8().d), [4, 8, 6]);
        assert_eq!(one(CorrupterData::alpha9().d), [2, 8, 6]);
    }

    #[test]
    fn cycle_tuples() {
        let a8 = CorrupterData::alpha8();
        assert!(check_cycle_tuple(&a8.a, &a8.d, &a8.p3));
        // the printed (5,7,2,6,7,4) has A8[7,2] = 3, not tau(4) = 8
        let misprint = CycleTuple::from_one_based([5, 7, 2, 6, 7, 4]);
        assert!(!check_cycle_tuple(&a8.a, &a8.d, &misprint));
        let a9 = CorrupterData::alpha9();
        assert!(check_cycle_tuple(&a9.a, &a9.d, &a9.p3));
    }

    #[test]
    fn reference_pairs_have_every_property() {
        for data in [CorrupterData::alpha8(), CorrupterData::alpha9()] {
            assert!(check_corrupting_pair(&data.a, &data.b).passed());
            let rep = check_properties(&data);
            assert!(rep.passed(), "{:?}", rep.first_failure());
        }
    }

    #[test]
    fn corrupting_pair_negative_control() {
        let a = fixtures::a8();
        let rep = check_corrupting_pair(&a, &a);
        assert!(!rep.get("agreement").unwrap().passed);
        let mut same = CorrupterData::alpha8();
        same.b = same.a.clone();
        assert!(!check_properties(&same).get("P4").unwrap().passed);
    }

    #[test]
    fn condition_rejects_row_one() {
        let l = LatinSquare::cyclic(11);
        let w = CondIIWitness { x1: 0, x2: 1, y: [1, 2, 3], z: [0, 1, 2] };
        assert!(!check_condition_ii(&l, 1, &w));
        assert!(check_condition_i(&l, 0).is_err());
    }

    #[test]
    fn small_orders_rejected() {
        assert!(find_witnesses(&LatinSquare::cyclic(4), 1).is_none());
        assert!(find_witnesses(&fixtures::e(), 1).is_none());
        assert!(matches!(
            certify_x_member(&LatinSquare::cyclic(4), 1, CertLevel::Witnessed),
            Err(Error::CertificationFailed(_))
        ));
    }
}
