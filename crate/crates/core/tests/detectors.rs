mod common;

use ninf_core::construct::{fixtures, random_square};
use ninf_core::verify::*;
use ninf_core::{Hypercube, LatinSquare, PerturbedSquare};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn sample_squares() -> Vec<LatinSquare> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut out: Vec<LatinSquare> = (2..=8).map(LatinSquare::cyclic).collect();
    for n in 4..=7 {
        out.extend((0..100).map(|_| random_square(n, &mut rng)));
    }
    out
}

fn as_pairs(v: &[SubBox]) -> Vec<(Vec<usize>, Vec<usize>)> {
    v.iter().map(|b| (b.rows.clone(), b.cols.clone())).collect()
}

#[test]
fn least_subsquare_matches_enumeration() {
    for l in sample_squares() {
        let want = common::proper_subsquares(l.order(), l.cells());
        let got = find_proper_subsquare(&l).map(|b| (b.rows, b.cols));
        assert_eq!(got, want.first().cloned(), "{l:?}");
        assert_eq!(is_ninf(&l), want.is_empty());
        assert_eq!(as_pairs(&brute_force_subsquares(&l).unwrap()), want);
    }
}

#[test]
fn minimal_subsquares_are_the_inclusion_minimal_ones() {
    for l in sample_squares().into_iter().step_by(7) {
        let all = common::proper_subsquares(l.order(), l.cells());
        let contains = |a: &(Vec<usize>, Vec<usize>), b: &(Vec<usize>, Vec<usize>)| {
            b.0.iter().all(|r| a.0.contains(r)) && b.1.iter().all(|c| a.1.contains(c))
        };
        let minimal: Vec<_> = all
            .iter()
            .filter(|s| !all.iter().any(|t| t != *s && contains(s, t)))
            .cloned()
            .collect();
        let mut got = as_pairs(&minimal_subsquares(&l));
        got.sort();
        let mut want = minimal;
        want.sort();
        assert_eq!(got, want);
    }
}

#[test]
fn intercalate_count_matches_enumeration() {
    for l in sample_squares().into_iter().step_by(5) {
        let n = l.order();
        let want = common::latin_boxes(n, &|r, c| l.get(r, c), 2, 2);
        assert_eq!(count_intercalates(&l), want.len());
        let got = find_intercalate(&PerturbedSquare::new(&l)).map(|b| (b.rows, b.cols));
        assert_eq!(got, want.first().cloned());
    }
}

#[test]
fn perturbed_search_matches_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut bases: Vec<LatinSquare> = (5..=7).map(|n| random_square(n, &mut rng)).collect();
    bases.push(fixtures::e());
    for base in &bases {
        let n = base.order();
        for _ in 0..6 {
            let cell = (rng.gen_range(0..n), rng.gen_range(0..n));
            let mut sigma = rng.gen_range(0..n as u32);
            if sigma == base.get(cell.0, cell.1) {
                sigma = (sigma + 1) % n as u32;
            }
            let p = PerturbedSquare::near_copy(base, cell, sigma).unwrap();
            let want = common::latin_boxes(n, &|r, c| p.get(r, c), 2, n - 1);
            let mut got = as_pairs(&perturbed_subsquares(&p, 2..=n - 1, &[]));
            got.sort_by(|a, b| (a.0.len(), a).cmp(&(b.0.len(), b)));
            assert_eq!(got, want, "{base:?} {cell:?} {sigma}");
            let through: Vec<_> = want.iter().filter(|(r, c)| r.contains(&cell.0) && c.contains(&cell.1)).collect();
            assert_eq!(perturbed_has_subsquare(&p, 2..=n - 1, &[cell]), !through.is_empty());
        }
    }
}

#[test]
fn subhypercubes_match_enumeration() {
    let mut cubes = vec![fixtures::cube4(), Hypercube::from_square(&LatinSquare::cyclic(4)).boost(3).unwrap()];
    for n in 2..=5 {
        cubes.push(Hypercube::from_square(&LatinSquare::cyclic(n)).boost(3).unwrap());
    }
    cubes.push(Hypercube::from_square(&LatinSquare::cyclic(4)).boost(4).unwrap());
    for h in cubes {
        let want = common::proper_subhypercubes(h.order(), h.dim(), h.data(), false);
        let got: Vec<_> = brute_force_subhypercubes(&h).unwrap().into_iter().map(|b| b.axes).collect();
        assert_eq!(got, want);
        assert_eq!(find_proper_subhypercube(&h).map(|b| b.axes), want.first().cloned());
    }
}

#[test]
fn isotopism_maps_one_square_onto_the_other() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for a in [fixtures::a8(), fixtures::a9(), random_square(7, &mut rng)] {
        let b = fixtures::b8();
        if a.order() == 8 {
            let iso = is_isotopic(&a, &b).unwrap().unwrap();
            assert_eq!(iso.apply(&a), b);
        }
        let c = is_isotopic(&a, &a).unwrap().unwrap();
        assert_eq!(c.apply(&a), a);
    }
    let iso = is_isotopic(&fixtures::a9(), &fixtures::b9()).unwrap().unwrap();
    assert_eq!(iso.apply(&fixtures::a9()), fixtures::b9());
}
