mod common;

use std::collections::BTreeSet;

use connfactor_core::families::{complete, cycle, path, petersen, prism, star};
use connfactor_core::oracle::{brute_force_connected_f_factor, has_hamiltonian_cycle};
use connfactor_core::reduction::{
    generate_family, instance_for_path, parts_floor_bound, full_scale, pivot_paths, verify_reduction,
    ReductionInstance, ReductionParams,
};
use connfactor_core::Graph;
use proptest::prelude::*;
use rand::Rng;

use common::*;

/// Checks the instance against `g` vertex by vertex.
fn check_structure(g: &Graph, inst: &ReductionInstance, s: usize) {
    let big_n = g.vertex_count();
    let [u0, u1, u2, u3] = inst.path;
    assert_eq!(inst.parts.len(), big_n - 2);
    assert!(inst.parts.parts().iter().all(|p| p.len() == s));
    let a = inst.a_vertices();
    let a_set: BTreeSet<usize> = a.iter().copied().collect();
    assert_eq!(a_set.len(), big_n - 2);

    // sigma is a bijection from V(G) - {u1, u2} onto A.
    assert_eq!((inst.sigma[u1], inst.sigma[u2]), (None, None));
    let image: BTreeSet<usize> = inst.sigma.iter().flatten().copied().collect();
    assert_eq!(image, a_set);

    let h = &inst.graph;
    for p in inst.parts.parts() {
        for (i, &x) in p.iter().enumerate() {
            for &y in &p[i + 1..] {
                assert!(h.edge_id(x, y).is_some());
            }
        }
    }
    let mut cross = BTreeSet::new();
    for &(x, y) in h.edges() {
        if inst.parts.part_of(x) != inst.parts.part_of(y) {
            assert!(a_set.contains(&x) && a_set.contains(&y));
            cross.insert((x.min(y), x.max(y)));
        }
    }
    let mapped: BTreeSet<(usize, usize)> = g
        .edges()
        .iter()
        .filter_map(|&(u, v)| {
            let (x, y) = (inst.sigma[u]?, inst.sigma[v]?);
            Some((x.min(y), x.max(y)))
        })
        .collect();
    assert_eq!(cross, mapped);

    for v in 0..h.vertex_count() {
        let mut want = s - 1;
        if a_set.contains(&v) {
            want += 2;
            if Some(v) == inst.sigma[u0] || Some(v) == inst.sigma[u3] {
                want -= 1;
            }
        }
        assert_eq!(inst.f.get(v), want, "vertex {v}");
    }
}

/// Solvable instances of a Hamiltonian graph: inside `A` the connected
/// factor is a path through all of `A` from `sigma(u0)` to `sigma(u3)`.
fn check_witness_paths(g: &Graph, s: usize) -> usize {
    let mut solvable = 0;
    for inst in generate_family(g, &ReductionParams::desk(s)).unwrap() {
        let Some((h, _)) = brute_force_connected_f_factor(&inst.graph, &inst.f).best else { continue };
        solvable += 1;
        let a: BTreeSet<usize> = inst.a_vertices().into_iter().collect();
        let inside: Vec<(usize, usize)> = h.pairs(&inst.graph).filter(|(x, y)| a.contains(x) && a.contains(y)).collect();
        assert_eq!(inside.len(), a.len() - 1);
        let mut deg = vec![0; inst.graph.vertex_count()];
        for &(x, y) in &inside {
            deg[x] += 1;
            deg[y] += 1;
        }
        let ends: BTreeSet<usize> = a.iter().copied().filter(|&x| deg[x] == 1).collect();
        let want: BTreeSet<usize> = [inst.sigma[inst.path[0]].unwrap(), inst.sigma[inst.path[3]].unwrap()].into();
        assert_eq!(ends, want);
        assert!(a.iter().all(|&x| deg[x] <= 2));
        let comps = connfactor_core::graph::components(inst.graph.vertex_count(), inside);
        assert!(comps.iter().any(|c| a.iter().all(|x| c.contains(x))));
    }
    solvable
}

#[test]
fn small_round_trips() {
    for g in [cycle(4), cycle(5), star(3)] {
        assert!(verify_reduction(&g, &ReductionParams::desk(3)).unwrap());
    }
    assert!(check_witness_paths(&cycle(4), 3) > 0);
    assert!(check_witness_paths(&cycle(5), 3) > 0);
    assert!(check_witness_paths(&prism(), 3) > 0);
    assert!(check_witness_paths(&complete(5), 4) > 0);
    assert_eq!(check_witness_paths(&star(3), 3), 0);
}

#[test]
fn paths_through_the_pivot() {
    let c5 = cycle(5);
    // u0, u2 are the two neighbours of 0 in either order, u3 is forced.
    assert_eq!(pivot_paths(&c5), vec![[1, 0, 4, 3], [4, 0, 1, 2]]);
    assert!(pivot_paths(&star(4)).is_empty());
    assert_eq!(pivot_paths(&complete(4)).len(), 3 * 2 * 1);
}

#[test]
fn family_of_the_prism() {
    let p = prism();
    let params = ReductionParams::desk(4);
    let family = generate_family(&p, &params).unwrap();
    assert_eq!(family.instance_vertices(), 4 * 4);
    let all: Vec<_> = family.collect();
    assert_eq!(all.len(), pivot_paths(&p).len());
    for inst in &all {
        check_structure(&p, inst, 4);
    }
    assert!(verify_reduction(&p, &ReductionParams::desk(3)).unwrap());
    for g in [cycle(6), complete(5), star(4), path(5)] {
        assert!(verify_reduction(&g, &ReductionParams::desk(3)).unwrap());
    }
    assert!(!has_hamiltonian_cycle(&petersen()));
    assert!(generate_family(&petersen(), &ReductionParams::desk(3)).unwrap().all(|i| i.graph.vertex_count() == 24));
}

#[test]
fn parameters_are_checked() {
    let c = cycle(5);
    assert!(generate_family(&c, &ReductionParams::desk(2)).is_err());
    assert!(generate_family(&path(3), &ReductionParams::desk(3)).is_err());
    let bad = ReductionParams { epsilon: 0.0, ..ReductionParams::desk(3) };
    assert!(generate_family(&c, &bad).is_err());
    let capped = ReductionParams { max_output: Some(1), ..ReductionParams::desk(3) };
    assert_eq!(generate_family(&c, &capped).unwrap().count(), 1);
    // Without an override the original sizes are far too large.
    let full = ReductionParams { part_size_override: None, ..ReductionParams::desk(3) };
    assert!(generate_family(&complete(40), &full).is_err());
}

#[test]
fn scale_and_floor_bound() {
    let s = full_scale(16, 1.0);
    assert_eq!(s.n, 16.0);
    assert_eq!(s.min_part_size, 2.0);
    assert_eq!(s.parts, 14);
    for m in 2u64..400 {
        for k in 1..m {
            if k * k >= m {
                assert!(parts_floor_bound(m, k).is_err());
                break;
            }
            assert!(parts_floor_bound(m, k).unwrap(), "m = {m}, k = {k}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn instances_have_the_promised_shape(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let n = rng.gen_range(4..=9);
        let g = gnp(&mut rng, n, 0.5);
        let s = rng.gen_range(3..=6);
        let params = ReductionParams::desk(s);
        for inst in generate_family(&g, &params).unwrap() {
            check_structure(&g, &inst, s);
            prop_assert_eq!(&instance_for_path(&g, &params, inst.path).unwrap(), &inst);
        }
    }

    #[test]
    fn hamiltonicity_is_preserved(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let g = gnp(&mut rng, 6, 0.55);
        prop_assert!(verify_reduction(&g, &ReductionParams::desk(3)).unwrap());
    }
}
