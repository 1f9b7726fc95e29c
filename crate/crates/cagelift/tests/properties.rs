//! Property tests for the core invariants, plus spot checks tied to the
//! lift behavior of specific short structures in the named constructions.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use proptest::prelude::*;

use cagelift::analysis::{diameter, distance, girth, remote_pairs, Length};
use cagelift::constructions::{build_g10, build_g6, build_h10, build_tree_t4t, build_tree_t4t2};
use cagelift::cycles::{
    enumerate_closed_walks, enumerate_cycles, enumerate_lollipops, enumerate_pinned_paths,
};
use cagelift::io::{read_graph6, write_graph6};
use cagelift::voltage::{SimpleGraph, VertexId, VoltageGraph};

fn arbitrary_simple_graph() -> impl Strategy<Value = SimpleGraph> {
    (1usize..24, any::<u64>()).prop_map(|(n, seed)| {
        let mut edges = Vec::new();
        let mut state = seed;
        for u in 0..n {
            for w in u + 1..n {
                state = state
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                if state >> 33 & 1 == 1 {
                    edges.push((u, w));
                }
            }
        }
        SimpleGraph::from_unlabeled_edges(n, &edges).unwrap()
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arbitrary_simple_graph()) {
        let text = write_graph6(&g);
        let back = read_graph6(&text).unwrap();
        prop_assert_eq!(write_graph6(&back), text);
        prop_assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn girth_is_relabeling_invariant(g in arbitrary_simple_graph(), seed in any::<u64>()) {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = seed;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (state >> 32) as usize % (i + 1));
        }
        let mapped: Vec<(usize, usize)> = g.edges().iter().map(|&(u, w)| (perm[u], perm[w])).collect();
        let h = SimpleGraph::from_unlabeled_edges(n, &mapped).unwrap();
        prop_assert_eq!(girth(&g), girth(&h));
    }

    #[test]
    fn forests_have_infinite_girth_iff(g in arbitrary_simple_graph()) {
        // girth is Infinite exactly when the graph has no cycle, i.e.
        // every component is a tree (edges = vertices - components).
        let components = count_components(&g);
        let is_forest = g.size() + components == g.n();
        prop_assert_eq!(girth(&g) == Length::Infinite, is_forest);
    }

    #[test]
    fn tree_lift_order_formula(t in 1usize..4, m in 1usize..8) {
        let g = build_tree_t4t2(t);
        let lifted = g.lift(m).unwrap();
        prop_assert_eq!(lifted.n(), m * g.unpinned_count() + g.pinned_count());
    }
}

fn count_components(g: &SimpleGraph) -> usize {
    let mut seen = vec![false; g.n()];
    let mut components = 0;
    for start in 0..g.n() {
        if seen[start] {
            continue;
        }
        components += 1;
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    components
}

/// A cycle of length l and sum s in the voltage graph lifts, at modulus
/// m, to disjoint cycles of length l*m/gcd(s, m); checked with BFS on the
/// subgraph of lift edges the cycle's arcs generate.
#[test]
fn wrap_law_against_lift_bfs() {
    let gcd = |mut a: usize, mut b: usize| {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    };
    for g in [build_g6(1, 2), build_g10(), build_h10()] {
        let cycles = enumerate_cycles(&g, 8);
        for m in 3..=12usize {
            let Ok((lift, map)) = g.lift_with_map(m) else {
                continue;
            };
            for cycle in &cycles {
                // Subgraph of the lift generated by this cycle's arcs.
                let mut adj: HashMap<usize, Vec<usize>> = HashMap::new();
                let arcs: HashSet<usize> = cycle.steps().iter().map(|s| s.arc).collect();
                for &arc_idx in &arcs {
                    let arc = g.arc(arc_idx);
                    for i in 0..m {
                        let u = map.index(arc.tail, i);
                        let w = map.index(arc.head, map.offset_fiber(i, arc.voltage));
                        adj.entry(u).or_default().push(w);
                        adj.entry(w).or_default().push(u);
                    }
                }
                // BFS the component of the fiber-0 start vertex.
                let start = map.index(g.step_source(cycle.steps()[0].arc, cycle.steps()[0].dir), 0);
                let mut seen = HashSet::from([start]);
                let mut queue = VecDeque::from([start]);
                while let Some(u) = queue.pop_front() {
                    for &w in &adj[&u] {
                        if seen.insert(w) {
                            queue.push_back(w);
                        }
                    }
                }
                let s = cycle.voltage_sum().rem_euclid(m as i64) as usize;
                let expected = cycle.len() * m / gcd(s, m);
                assert_eq!(
                    seen.len(),
                    expected,
                    "{}: cycle len {} sum {} at m={m}",
                    g.description(),
                    cycle.len(),
                    cycle.voltage_sum()
                );
                // The component is a cycle: every vertex has degree 2
                // (the lift is simple for these m, so no collapsing).
                for v in &seen {
                    assert_eq!(adj[v].len(), 2);
                }
                let _ = &lift;
            }
        }
    }
}

/// Every Violated witness must trace, step by step at its modulus, to an
/// actual cycle of the claimed length in the lift.
#[test]
fn witness_validity() {
    use cagelift::constructions::{build_g12, build_g8, build_h12};
    use cagelift::cycles::{certify, Verdict, WitnessKind};
    let cases = [
        (build_g6(1, 2), 6usize),
        (build_g6(0, 1), 6),
        (build_g8(1, 1, 2, 3), 8),
        (build_g10(), 10),
        (build_h10(), 10),
        (build_g12(), 12),
        (build_h12(None), 12),
    ];
    let mut traced = 0;
    for (g, target) in &cases {
        let cert = certify(g, *target, 2..=20).unwrap();
        for (m, verdict) in &cert.verdicts {
            let Verdict::Violated(w) = verdict else {
                continue;
            };
            let Ok((lift, map)) = g.lift_with_map(*m) else {
                // A collision witness has no lift to trace in; it must be
                // one of the degenerate short walks.
                assert!(
                    w.lift_cycle_len <= 2,
                    "collision at m={m} but witness len > 2"
                );
                continue;
            };
            let cycle: Vec<usize> = match &w.kind {
                WitnessKind::ZeroSumWalk { walk, .. } => {
                    let trace = cagelift::cycles::walk_lift_trace(g, &map, walk);
                    assert_eq!(trace[0], trace[walk.len()], "witness walk must close");
                    trace[..walk.len()].to_vec()
                }
                WitnessKind::PinnedPath { path } => {
                    cagelift::cycles::pinned_path_lift_cycle(g, &map, path)
                }
                WitnessKind::Lollipop { lollipop } => {
                    cagelift::cycles::lollipop_lift_cycle(g, &map, lollipop)
                }
                WitnessKind::PinnedCycle { cycle } => {
                    cycle.vertices(g).iter().map(|v| map.index(*v, 0)).collect()
                }
            };
            assert_eq!(cycle.len(), w.lift_cycle_len, "{} m={m}", g.description());
            let distinct: HashSet<_> = cycle.iter().collect();
            assert_eq!(distinct.len(), cycle.len(), "{} m={m}", g.description());
            for i in 0..cycle.len() {
                assert!(
                    lift.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]),
                    "{} m={m}: witness edge missing",
                    g.description()
                );
            }
            traced += 1;
        }
    }
    assert!(traced >= 20, "only {traced} witnesses traced");
}

#[test]
fn bipartite_graphs_have_even_or_infinite_girth() {
    use cagelift::analysis::is_bipartite;
    // Deterministic sweep over small random graphs.
    let mut state = 99u64;
    for n in 2usize..16 {
        for _ in 0..40 {
            let mut edges = Vec::new();
            for u in 0..n {
                for w in u + 1..n {
                    state = state
                        .wrapping_mul(6364136223846793005)
                        .wrapping_add(1442695040888963407);
                    if state >> 33 & 3 == 0 {
                        edges.push((u, w));
                    }
                }
            }
            let g = SimpleGraph::from_unlabeled_edges(n, &edges).unwrap();
            if is_bipartite(&g) {
                match girth(&g) {
                    Length::Finite(k) => assert!(k % 2 == 0, "odd girth {k} in bipartite graph"),
                    Length::Infinite => {}
                }
            }
        }
    }
}

#[test]
fn heawood_has_diameter_3_and_remote_pairs() {
    let heawood = build_g6(1, 2).lift(3).unwrap();
    assert_eq!(diameter(&heawood), Length::Finite(3));
    assert!(!remote_pairs(&heawood, 3).is_empty());
    let some_adjacent = heawood.neighbors(0)[0];
    assert_eq!(distance(&heawood, 0, some_adjacent), Length::Finite(1));
}

#[test]
fn known_wrap_walks_appear_in_the_enumeration() {
    // G10's sum-3 4-cycle wrapped twice: a length-8 walk of sum 6, the
    // structure that kills m = 6.
    let g10 = build_g10();
    let walks = enumerate_closed_walks(&g10, 8);
    assert!(walks
        .iter()
        .any(|w| w.len() == 8 && w.voltage_sum().abs() == 6 && w.wraps() == 2));
    // H10's sum-2 4-cycle wrapped twice: length 8, sum 4, killing m = 4.
    let h10 = build_h10();
    let walks = enumerate_closed_walks(&h10, 8);
    assert!(walks
        .iter()
        .any(|w| w.len() == 8 && w.voltage_sum().abs() == 4 && w.wraps() == 2));
}

#[test]
fn shortest_pinned_structures_of_the_constructions() {
    // T_12's pinned vertices sit 6 apart, so the lift girth tops out at 12.
    let t12 = build_tree_t4t(3);
    let paths = enumerate_pinned_paths(&t12, 8);
    assert_eq!(paths.iter().map(|p| p.len()).min(), Some(6));

    // G10: a path of length 2 meets a 6-cycle, lifting to a 10-cycle; no
    // lollipop scores below the girth.
    let lollies = enumerate_lollipops(&build_g10(), 10);
    assert!(lollies.iter().all(|l| l.score() >= 10));
    assert!(lollies
        .iter()
        .any(|l| l.path_len() == 2 && l.cycle_len() == 6));

    // H10: a path of length 3 meets a 4-cycle, again scoring 10.
    let lollies = enumerate_lollipops(&build_h10(), 10);
    assert!(lollies.iter().all(|l| l.score() >= 10));
    assert!(lollies
        .iter()
        .any(|l| l.path_len() == 3 && l.cycle_len() == 4));
}

#[test]
fn g6_with_beta_m_minus_1_certifies_except_m_4() {
    // The (1, m-1) assignment: 2(alpha - beta) = 4 - 2m, which vanishes
    // mod m exactly at m = 4.
    for m in [3usize, 5, 6, 7, 8, 12] {
        let g = build_g6(1, m as i64 - 1);
        assert_eq!(girth(&g.lift(m).unwrap()), Length::Finite(6), "m={m}");
    }
    let g = build_g6(1, 3);
    assert_eq!(girth(&g.lift(4).unwrap()), Length::Finite(4));
}

#[test]
fn fiber_shift_fixes_pinned_and_permutes_lifts() {
    for (g, m) in [(build_g10(), 5usize), (build_tree_t4t(2), 4)] {
        let (lift, map) = g.lift_with_map(m).unwrap();
        let mut sigma: Vec<usize> = (0..lift.n()).collect();
        for v in g.vertices() {
            if !g.is_pinned(v) {
                for j in 0..m {
                    sigma[map.index(v, j)] = map.index(v, (j + 1) % m);
                }
            }
        }
        for (u, w) in lift.edges() {
            assert!(lift.has_edge(sigma[u], sigma[w]));
        }
    }
}

#[test]
fn cycle_sums_come_in_opposite_pairs() {
    for g in [build_g10(), build_h10()] {
        let cycles = enumerate_cycles(&g, 8);
        let set: BTreeSet<(usize, i64)> =
            cycles.iter().map(|c| (c.len(), c.voltage_sum())).collect();
        for c in &cycles {
            assert!(set.contains(&(c.len(), -c.voltage_sum())));
            let _ = VertexId(0);
        }
    }
}

#[test]
fn vertices_accessor_matches_steps() {
    let g: VoltageGraph = build_g6(1, 2);
    for w in enumerate_cycles(&g, 4) {
        let vs = w.vertices(&g);
        assert_eq!(vs.len(), w.len());
        for (i, s) in w.steps().iter().enumerate() {
            assert_eq!(g.step_source(s.arc, s.dir), vs[i]);
            assert_eq!(g.step_target(s.arc, s.dir), vs[(i + 1) % vs.len()]);
        }
    }
}
