//! Base squares, the ×8/×9 recursion, the order planner and the hypercube
//! surface.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::certify::{
    certify_with_witnesses, check_condition_i, check_condition_ii_with, check_condition_iii_with,
    find_witnesses, CertLevel, CondIIIWitness, CondIIWitness, CorrupterData, XMember,
};
use crate::cycle::{eta_plan, row_cycle, switch_eta, switch_row_cycle};
use crate::error::{Error, Result};
use crate::hypercube::Hypercube;
use crate::product::{build, corrupted_product, relabel_prec1, Pair};
use crate::square::{shift_by, LatinSquare};
use crate::verify::{closure, is_ninf, minimal_subsquares};

mod cached;
pub mod fixtures;
mod search;

pub use cached::{searched_square, SEARCH_BUDGET, SEARCH_SEEDS};
pub use search::{random_square, search_ninf, subsquare_cost};

/// Switches `l` on `eta(i, j, x)` given in one-based labels.
pub fn switch_eta_one_based(l: &LatinSquare, i: usize, j: usize, x: usize) -> Result<LatinSquare> {
    let plan = eta_plan(l, i - 1, j - 1, x - 1)?;
    switch_eta(l, &plan)
}

/// Switches `l` on `rho(i, j, c)` given in one-based labels.
pub fn switch_rho_one_based(l: &LatinSquare, i: usize, j: usize, c: usize) -> Result<LatinSquare> {
    let rho = row_cycle(l, i - 1, j - 1, c - 1)?;
    switch_row_cycle(l, &rho)
}

/// The three transversals `Theta_k`, `k = -1, 0, 1`, of the cyclic square of
/// order `m` as zero-based `(row, col, symbol)` triples.
pub fn theta(m: usize, k: i64) -> Vec<(usize, usize, u32)> {
    let rep = |v: i64| (v - 1).rem_euclid(m as i64) as usize;
    (1..=m as i64)
        .map(|j| (rep(2 * j - 3 * k), rep(j), rep(3 * j - 3 * k) as u32))
        .collect()
}

/// The Kotzig–Turgeon square `K(n, J)`.
///
/// Start from the cyclic square of order `m = n - 3` (one-based
/// `C[i, j] = i + j` with representatives `1..m`) and take the disjoint
/// transversals `Theta_k`. Each `Theta_k` entry `(i, j, l)` is moved out to
/// new column `n - 1 + k` and new row `n - 1 - k`, and its cell gets the new
/// symbol `n - 1 + k`. The corner holds `m + J`.
///
/// The labelling of the three new lines is checked by certificate: the
/// result must be Latin with the corner as its only proper subsquare. If it
/// is not, the other five assignments of `{-1, 0, 1}` to the new labels are
/// tried in turn.
pub fn kotzig_turgeon(n: usize, j: &LatinSquare) -> Result<LatinSquare> {
    if n < 8 || !n.is_multiple_of(2) || n.is_multiple_of(3) || j.order() != 3 {
        return Err(Error::BadOrder(n));
    }
    let m = n - 3;
    const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    for perm in PERMS {
        // zero-based new label for k = -1, 0, 1
        let label = |k: i64| m + perm[(k + 1) as usize];
        let mut cells = vec![u32::MAX; n * n];
        for r in 0..m {
            for c in 0..m {
                cells[r * n + c] = ((r + c + 1) % m) as u32;
            }
        }
        for k in -1..=1 {
            for (r, c, s) in theta(m, k) {
                cells[r * n + c] = label(k) as u32;
                cells[r * n + label(k)] = s;
                cells[label(-k) * n + c] = s;
            }
        }
        for a in 0..3 {
            for b in 0..3 {
                cells[(m + a) * n + m + b] = (m as u32) + j.get(a, b);
            }
        }
        let Ok(k) = LatinSquare::from_cells(n, cells) else {
            continue;
        };
        if corner_is_only_subsquare(&k) {
            return Ok(k);
        }
    }
    Err(Error::ConstructionFailed("no labelling of K(n, J) certifies"))
}

fn corner_is_only_subsquare(k: &LatinSquare) -> bool {
    let n = k.order();
    let corner: Vec<usize> = (n - 3..n).collect();
    let mins = minimal_subsquares(k);
    if mins.len() != 1 || mins[0].rows != corner || mins[0].cols != corner {
        return false;
    }
    // nothing larger contains the corner either
    (0..n - 3).all(|c| {
        let mut cols = corner.clone();
        cols.push(c);
        closure(k, &corner, &cols, n / 2).is_none()
    })
}

/// `L(E, (k, l))`: the direct product `Z x E` with the `(2, 2)` E-block
/// shifted by `e / 2` and a length-3 symbol cycle switched between
/// `(1, E[k, l])` and `(2, E[k, l])`, relabelled by `phi`. `cell` is
/// zero-based.
pub fn triple_inflate(e: &LatinSquare, cell: (usize, usize)) -> Result<LatinSquare> {
    let n = e.order();
    if !n.is_multiple_of(2) {
        return Err(Error::OddOrder(n));
    }
    e.check_index(cell.0)?;
    e.check_index(cell.1)?;
    let z = fixtures::z();
    let target = e.get(cell.0, cell.1) as usize;
    let p = build(3, n, |i, j, x, y| {
        let at_cell = (j, y) == cell;
        if at_cell && matches!((i, x), (0, 0) | (1, 2) | (2, 1)) {
            (1, target)
        } else if at_cell && matches!((i, x), (0, 1) | (1, 0) | (2, 2)) {
            (0, target)
        } else if (i, x) == (1, 1) {
            (z.get(i, x) as usize, shift_by(e.get(j, y), n / 2, n) as usize)
        } else {
            (z.get(i, x) as usize, e.get(j, y) as usize)
        }
    })?;
    Ok(relabel_prec1(p))
}

/// `L(e, cell)` switched on the one-based `eta` when that gives an N∞
/// square. Otherwise the first N∞ result over cells (the given one first,
/// then row-major) and `eta(i, j, x)` triples in lexicographic order.
/// Returns the zero-based cell and the one-based triple used.
pub fn inflate_and_switch(
    e: &LatinSquare,
    cell: (usize, usize),
    eta: [usize; 3],
) -> Result<(LatinSquare, (usize, usize), [usize; 3])> {
    let first = triple_inflate(e, cell)?;
    if let Some(q) = switch_eta_one_based(&first, eta[0], eta[1], eta[2]).ok().filter(is_ninf) {
        return Ok((q, cell, eta));
    }
    let m = e.order();
    let cells = core::iter::once(cell).chain((0..m * m).map(|t| (t / m, t % m)).filter(|&c| c != cell));
    for c in cells {
        let l = triple_inflate(e, c)?;
        let n = l.order();
        for i in 1..=n {
            for j in (1..=n).filter(|&j| j != i) {
                for x in 1..=n {
                    if let Some(q) = switch_eta_one_based(&l, i, j, x).ok().filter(is_ninf) {
                        return Ok((q, c, [i, j, x]));
                    }
                }
            }
        }
    }
    Err(Error::ConstructionFailed("no eta switch of L(E, (k, l)) is N∞"))
}

/// Cell and `eta` for the order-36 and order-54 recipes on the stored
/// order-12 and order-18 squares, as found by [`inflate_and_switch`] from
/// `((1, 2), [1, 21, 30])` and `((6, 6), [1, 19, 52])`.
pub const SEARCHED_36: ((usize, usize), [usize; 3]) = ((0, 0), [1, 13, 35]);
pub const SEARCHED_54: ((usize, usize), [usize; 3]) = ((0, 1), [3, 21, 39]);

/// One-based witness hints: `rho(x1, x2, y3)` and rows `r1, r2`, symbol `sigma`.
type Hint = ([usize; 3], [usize; 3]);

fn hint_witnesses(l: &LatinSquare, s: usize, h: Hint) -> Option<(CondIIWitness, CondIIIWitness)> {
    let [x1, x2, y3] = h.0;
    let [r1, r2, g] = h.1;
    let w2 = CondIIWitness::expand(l, x1 - 1, x2 - 1, y3 - 1)?;
    let w3 = CondIIIWitness::expand(l, s, r1 - 1, r2 - 1, (g - 1) as u32)?;
    Some((w2, w3))
}

/// Orders with a base recipe.
pub const BASE_ORDERS: [usize; 10] = [12, 16, 18, 24, 32, 36, 48, 54, 64, 72];

/// The square of a base recipe, before certification, with reference
/// witness coordinates.
pub fn base_recipe(n: usize) -> Result<(LatinSquare, Hint)> {
    Ok(match n {
        12 => (searched_square(12)?, ([2, 11, 11], [3, 8, 10])),
        18 => (searched_square(18)?, ([4, 5, 9], [2, 11, 10])),
        16 | 32 | 64 => {
            let k = kotzig_turgeon(n, &fixtures::j())?;
            let l = switch_eta_one_based(&k, n, 1, n / 2 - 1)?;
            let l = switch_eta_one_based(&l, 4, n - 1, n - 2)?;
            (l, ([2, 8, n / 2 + 4], [2, 3, n - 2]))
        }
        24 => {
            let l = triple_inflate(&fixtures::e(), (0, 1))?;
            (switch_eta_one_based(&l, 6, 14, 18)?, ([2, 7, 16], [2, 5, 3]))
        }
        36 => {
            let l = triple_inflate(&searched_square(12)?, SEARCHED_36.0)?;
            let [i, j, x] = SEARCHED_36.1;
            let l = switch_eta_one_based(&l, i, j, x)?;
            (l, ([2, 11, 35], [2, 3, 15]))
        }
        48 => {
            let (l16, _) = base_recipe(16)?;
            let l = triple_inflate(&l16, (15, 7))?;
            (switch_eta_one_based(&l, 1, 17, 41)?, ([2, 8, 12], [2, 3, 14]))
        }
        54 => {
            let l = triple_inflate(&searched_square(18)?, SEARCHED_54.0)?;
            let [i, j, x] = SEARCHED_54.1;
            let l = switch_eta_one_based(&l, i, j, x)?;
            (l, ([2, 10, 29], [2, 8, 34]))
        }
        72 => {
            let p = corrupted_product(&fixtures::a9(), &fixtures::b9(), 5, &fixtures::e())?;
            let l = relabel_prec1(p);
            (switch_rho_one_based(&l, 2, 11, 3)?, ([2, 7, 48], [2, 5, 19]))
        }
        other => return Err(Error::BadOrder(other)),
    })
}

/// A certified base member of order `n` with shift 1.
///
/// The reference witness coordinates are used when they pass; otherwise the
/// lexicographically least witnesses are searched for.
pub fn base_square(n: usize, level: CertLevel) -> Result<XMember> {
    let (l, hint) = base_recipe(n)?;
    let s = 1;
    let fail = |what: &str| Error::CertificationFailed(format!("base order {n}: {what}"));
    if level >= CertLevel::ConditionsChecked && !is_ninf(&l) {
        return Err(fail("square has a proper subsquare"));
    }
    let (w2, w3) = match hint_witnesses(&l, s, hint) {
        Some((w2, w3))
            if check_condition_ii_with(&l, s, &w2, false) && check_condition_iii_with(&l, s, &w3, false) =>
        {
            (w2, w3)
        }
        _ => find_witnesses(&l, s).ok_or_else(|| fail("no witnesses"))?,
    };
    certify_with_witnesses(l, s, w2, w3, level).map_err(|e| match e {
        Error::CertificationFailed(msg) => fail(&msg),
        other => other,
    })
}

/// How much [`extend`] re-checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtendOptions {
    /// Orders up to this get the N∞ check, and Condition (i) if enabled.
    pub verify_below: usize,
    pub condition_i: bool,
}

impl Default for ExtendOptions {
    fn default() -> Self {
        Self { verify_below: 200, condition_i: true }
    }
}

/// `(Q1, mu)` from `(M, s)`: corrupted product with `(A_alpha, B_alpha)`,
/// switch of the length-3 row cycle through the shifted principal block,
/// relabelling by `phi`, and the witnesses carried over.
///
/// The propagated witnesses are always re-checked. Above `verify_below` their
/// intercalate checks look only through the hole.
pub fn extend(x: &XMember, alpha: usize, opts: ExtendOptions) -> Result<XMember> {
    let data = CorrupterData::for_order(alpha)?;
    let m = &x.square;
    let mu = m.order();
    let s = x.shift;
    let fail = |what: &str| Error::WitnessPropagationFailed(format!("{alpha} x {mu}: {what}"));
    let w3 = x.w3;
    let w2 = x.w2;
    let p = corrupted_product(&data.a, &data.b, s, m)?;
    let want = Pair::new(data.d[0] as usize, shift_by(w3.sigma, s, mu) as usize);
    if p.get(Pair::new(0, w3.r1), Pair::new(0, w3.c[0])) != want {
        return Err(fail("principal entry of the cycle"));
    }
    let rho = p
        .row_cycle(Pair::new(0, w3.r1), Pair::new(1, w3.r2), Pair::new(2, w3.c[2]))
        .map_err(|_| fail("row cycle"))?;
    if rho.len() != 3 {
        return Err(fail("row cycle does not have length 3"));
    }
    let q = relabel_prec1(p.switch_row_cycle(&rho)?);
    let phi = |i: usize, j: usize| mu * i + j;
    let n = alpha * mu;

    let nw2 = CondIIWitness::expand(&q, phi(0, w3.r1), phi(1, w3.r2), phi(2, w3.c[2]))
        .ok_or_else(|| fail("new condition (ii) cycle"))?;
    let mut cols = nw2.y;
    cols.sort_unstable();
    if cols != [phi(0, w3.c[0]), phi(1, w3.c[1]), phi(2, w3.c[2])] {
        return Err(fail("new condition (ii) columns"));
    }
    let t = data.p3;
    let nw3 = CondIIIWitness::expand(&q, mu, phi(t.i, w2.x1), phi(t.j, w2.x2), phi(t.k as usize, w2.z[0] as usize) as u32)
        .ok_or_else(|| fail("new condition (iii) entries"))?;
    if nw3.c != [phi(t.l[0], w2.y[0]), phi(t.l[1], w2.y[1]), phi(t.l[2], w2.y[2])] {
        return Err(fail("new condition (iii) columns"));
    }

    let small = n <= opts.verify_below;
    if !check_condition_ii_with(&q, mu, &nw2, !small) {
        return Err(fail("condition (ii) re-check"));
    }
    if !check_condition_iii_with(&q, mu, &nw3, !small) {
        return Err(fail("condition (iii) re-check"));
    }
    let mut level = CertLevel::Witnessed;
    if small {
        if !is_ninf(&q) {
            return Err(fail("output has a proper subsquare"));
        }
        level = CertLevel::ConditionsChecked;
        if opts.condition_i {
            if !check_condition_i(&q, mu)? {
                return Err(fail("condition (i) re-check"));
            }
            level = CertLevel::FullyVerified;
        }
    }
    Ok(XMember { square: q, shift: mu, w2: nw2, w3: nw3, level })
}

/// `n = 8^eights * 9^nines * base`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrderPlan {
    pub eights: u32,
    pub nines: u32,
    pub base: usize,
}

impl OrderPlan {
    pub fn order(&self) -> usize {
        8usize.pow(self.eights) * 9usize.pow(self.nines) * self.base
    }
}

/// Splits `n = 2^x 3^y >= 12` (`x >= 1`) over a base order.
pub fn plan_order(n: usize) -> Result<OrderPlan> {
    if n < 12 {
        return Err(Error::Unsupported(n));
    }
    let (mut a, mut b, mut rest) = (0u32, 0u32, n);
    while rest % 2 == 0 {
        rest /= 2;
        a += 1;
    }
    while rest % 3 == 0 {
        rest /= 3;
        b += 1;
    }
    if rest != 1 || a == 0 {
        return Err(Error::Unsupported(n));
    }
    let (i, j, k, l) = (a / 3, a % 3, b / 2, b % 2);
    let plan = |eights, nines, base| OrderPlan { eights, nines, base };
    let p = match (j, l) {
        (0, 0) if i >= 2 => plan(i - 2, k, 64),
        (0, 0) if i == 1 && k >= 1 => plan(0, k - 1, 72),
        (0, 1) => plan(i - 1, k, 24),
        (1, 0) if i >= 1 => plan(i - 1, k, 16),
        (1, 0) if k >= 1 => plan(0, k - 1, 18),
        (1, 1) if i >= 1 => plan(i - 1, k, 48),
        (1, 1) if k >= 1 => plan(0, k - 1, 54),
        (2, 0) if i >= 1 => plan(i - 1, k, 32),
        (2, 0) if k >= 1 => plan(0, k - 1, 36),
        (2, 1) => plan(i, k, 12),
        _ => return Err(Error::Unsupported(n)),
    };
    debug_assert_eq!(p.order(), n);
    Ok(p)
}

/// A member of 𝒳 of order `n = 2^x 3^y >= 12`, following [`plan_order`].
pub fn build_member(n: usize, opts: ExtendOptions) -> Result<XMember> {
    let plan = plan_order(n)?;
    let mut x = base_square(plan.base, CertLevel::ConditionsChecked)?;
    for _ in 0..plan.eights {
        x = extend(&x, 8, opts)?;
    }
    for _ in 0..plan.nines {
        x = extend(&x, 9, opts)?;
    }
    Ok(x)
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Which branch of [`build_square`] handles order `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Recipe {
    Cyclic,
    Fixture,
    StoredSearch,
    Recursion(OrderPlan),
    Search,
    None,
}

pub fn recipe_for(n: usize) -> Recipe {
    match n {
        0 | 4 | 6 => Recipe::None,
        1..=3 => Recipe::Cyclic,
        8 | 9 => Recipe::Fixture,
        10 => Recipe::StoredSearch,
        _ if is_prime(n) => Recipe::Cyclic,
        _ => match plan_order(n) {
            Ok(p) => Recipe::Recursion(p),
            Err(_) if n <= SEARCH_MAX_ORDER => Recipe::Search,
            Err(_) => Recipe::None,
        },
    }
}

/// Largest order [`build_square`] hands to the stochastic search.
pub const SEARCH_MAX_ORDER: usize = 30;

/// An N∞ Latin square of order `n`, for every `n` other than 4 and 6 that
/// has a construction here.
///
/// Orders up to 3 and primes use the cyclic square, 8 and 9 the embedded
/// `E` and `A9`, `2^x 3^y >= 12` the recursion. Anything else up to
/// [`SEARCH_MAX_ORDER`] goes to the seeded search.
pub fn build_square(n: usize) -> Result<LatinSquare> {
    build_square_with(n, 0, SEARCH_BUDGET)
}

/// [`build_square`] with an explicit search seed and budget.
pub fn build_square_with(n: usize, seed: u64, budget: u64) -> Result<LatinSquare> {
    match n {
        0 => Err(Error::BadOrder(0)),
        4 | 6 => Err(Error::UnsupportedOrder(n)),
        1..=3 => Ok(LatinSquare::cyclic(n)),
        8 => Ok(fixtures::e()),
        10 => searched_square(10),
        9 => Ok(fixtures::a9()),
        _ if is_prime(n) => Ok(LatinSquare::cyclic(n)),
        _ if plan_order(n).is_ok() => {
            let opts = ExtendOptions { verify_below: 200, condition_i: false };
            Ok(build_member(n, opts)?.square)
        }
        _ if n <= SEARCH_MAX_ORDER => search_ninf(n, seed, budget),
        _ => Err(Error::UnsupportedOrder(n)),
    }
}

/// An N∞ Latin hypercube of order `n` and dimension `d`; none exists for
/// `(4, 2)` and `(6, 2)`.
pub fn build_hypercube(n: usize, d: usize) -> Result<Hypercube> {
    build_hypercube_with(n, d, 0, SEARCH_BUDGET)
}

/// [`build_hypercube`] with an explicit search seed and budget.
pub fn build_hypercube_with(n: usize, d: usize, seed: u64, budget: u64) -> Result<Hypercube> {
    if d < 2 {
        return Err(Error::BadDim { from: 2, to: d });
    }
    match (n, d) {
        (4, 2) | (6, 2) => Err(Error::NoSuchObject { order: n, dim: d }),
        (4, _) => fixtures::cube4().boost(d),
        (6, _) => fixtures::cube6().boost(d),
        _ => Hypercube::from_square(&build_square_with(n, seed, budget)?).boost(d),
    }
}
