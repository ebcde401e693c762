mod common;

use common::{brute_alpha, brute_has_k_cycles, brute_max_cycles, brute_triangle_number, brute_two_core, gnp, rng};
use cyclepack::enumerate::enumerate_labeled;
use cyclepack::solvers::{find_disjoint_cycles, independence_number, max_disjoint_cycles, max_triangle_packing, max_triangle_packing_containing};
use cyclepack::Graph;
use rand::Rng;

fn check_cycles(g: &Graph, k: usize) {
    let found = find_disjoint_cycles(g, k).unwrap();
    assert_eq!(found.is_some(), brute_has_k_cycles(g, k), "k={k} {g:?}");
    if let Some(p) = found {
        assert!(p.verify(g, k));
    }
}

#[test]
fn cycle_solver_exhaustive_up_to_seven() {
    for n in 0..=7 {
        for g in enumerate_labeled(n).unwrap() {
            check_cycles(&g, 1);
            check_cycles(&g, 2);
        }
    }
}

#[test]
fn max_cycles_on_random_larger_graphs() {
    let mut r = rng(2);
    for _ in 0..300 {
        let n = r.gen_range(8..=11);
        let p = r.gen_range(0.2..0.6);
        let g = gnp(&mut r, n, p);
        let best = max_disjoint_cycles(&g).unwrap();
        assert!(best.verify(&g, best.len()));
        assert_eq!(best.len(), brute_max_cycles(&g), "{g:?}");
    }
}

#[test]
fn triangle_packing_matches_brute_force() {
    let mut r = rng(3);
    for _ in 0..500 {
        let n = r.gen_range(3..=12);
        let p = r.gen_range(0.2..0.9);
        let g = gnp(&mut r, n, p);
        let best = max_triangle_packing(&g).unwrap();
        assert!(best.verify(&g));
        assert_eq!(best.len(), brute_triangle_number(&g));

        let x = r.gen_range(0..n);
        match max_triangle_packing_containing(&g, x).unwrap() {
            Some(t) => {
                assert!(t.verify(&g) && t.contains_vertex(x));
                // the best packing through x is at most one short of the unconstrained best
                assert!(t.len() + 1 >= best.len());
            }
            None => assert!(g.triangles().iter().all(|t| !t.contains(&x))),
        }
    }
}

#[test]
fn independence_matches_brute_force() {
    let mut r = rng(4);
    for _ in 0..500 {
        let n = r.gen_range(0..=14);
        let p = r.gen_range(0.1..0.9);
        let g = gnp(&mut r, n, p);
        let a = independence_number(&g).unwrap();
        assert_eq!(a.size, a.vertices.len());
        assert!(a.vertices.iter().all(|&u| a.vertices.iter().all(|&v| !g.has_edge(u, v))));
        assert_eq!(a.size, brute_alpha(&g));
    }
}

#[test]
fn two_core_is_maximal() {
    for n in 0..=5 {
        for g in enumerate_labeled(n).unwrap() {
            let (_, map) = g.two_core();
            let kept: Vec<usize> = (0..map.len()).map(|v| map.single(v).unwrap()).collect();
            assert_eq!(kept, brute_two_core(&g));
        }
    }
    let mut r = rng(5);
    for _ in 0..2000 {
        let p = r.gen_range(0.1..0.5);
        let g = gnp(&mut r, 8, p);
        let (core, map) = g.two_core();
        let kept: Vec<usize> = (0..map.len()).map(|v| map.single(v).unwrap()).collect();
        assert_eq!(kept, brute_two_core(&g));
        assert!(core.min_degree().is_none_or(|d| d >= 2));
    }
}
