//! Recurrence versus brute force on every small chain, plus the symmetry
//! properties of the turn encoding.

use edge_hosoya::chain::{build_graph, enumerate_chains, ChainSpec};
use edge_hosoya::oracle::{edge_hosoya_bruteforce, rooted_edge_poly, rooted_vertex_poly};
use edge_hosoya::recurrence::{chain_edge_hosoya, chain_states, fold_cases, AnnelationCase};
use edge_hosoya::{Graph, Polynomial};
use petgraph::graph::UnGraph;

fn all_chains(max_h: usize) -> Vec<ChainSpec> {
    (1..=max_h).flat_map(|h| enumerate_chains(h).unwrap()).collect()
}

fn to_petgraph(g: &Graph) -> UnGraph<(), ()> {
    let mut pg = UnGraph::new_undirected();
    let nodes: Vec<_> = (0..g.vertex_count()).map(|_| pg.add_node(())).collect();
    for &(a, b) in g.edges() {
        pg.add_edge(nodes[a], nodes[b], ());
    }
    pg
}

#[test]
fn recurrence_matches_oracle_up_to_seven_hexagons() {
    let chains = all_chains(7);
    assert_eq!(chains.len(), 365);
    for spec in &chains {
        let graph = build_graph(spec);
        let brute = edge_hosoya_bruteforce(graph.graph()).unwrap();
        assert_eq!(chain_edge_hosoya(spec).unwrap(), brute, "{spec}");
    }
}

#[test]
fn every_intermediate_state_matches_rooted_oracle() {
    for spec in all_chains(6) {
        let full = build_graph(&spec);
        let states = chain_states(&spec).unwrap();
        for (k, state) in states.iter().enumerate() {
            let prefix = full.prefix(k).unwrap();
            let g = prefix.graph();
            let (u, v) = prefix.attachment_edge();
            assert_eq!(state.alpha, edge_hosoya_bruteforce(g).unwrap(), "{spec} step {k}");
            assert_eq!(state.beta, rooted_vertex_poly(g, u).unwrap(), "{spec} step {k} beta");
            assert_eq!(state.gamma, rooted_vertex_poly(g, v).unwrap(), "{spec} step {k} gamma");
            assert_eq!(state.delta, rooted_edge_poly(g, (u, v)).unwrap(), "{spec} step {k} delta");
        }
    }
}

#[test]
fn first_and_last_case_do_not_matter() {
    for spec in all_chains(6) {
        let expected = chain_edge_hosoya(&spec).unwrap();
        let cases = spec.annelation_cases();
        let h = cases.len();
        for first in AnnelationCase::ALL {
            for last in AnnelationCase::ALL {
                let mut varied = cases.clone();
                varied[0] = first;
                varied[h - 1] = last;
                assert_eq!(fold_cases(varied).unwrap().alpha, expected, "{spec} {first:?} {last:?}");
            }
        }
    }
}

#[test]
fn mirror_and_reversal_leave_polynomial_unchanged() {
    for spec in all_chains(7) {
        let p = chain_edge_hosoya(&spec).unwrap();
        let brute = |s: &ChainSpec| edge_hosoya_bruteforce(build_graph(s).graph()).unwrap();
        assert_eq!(brute(&spec.mirrored()), p, "mirror of {spec}");
        assert_eq!(brute(&spec.reversed()), p, "reversal of {spec}");
        assert_eq!(brute(&spec.reversed().mirrored()), p, "{spec}");
        assert_eq!(chain_edge_hosoya(&spec.mirrored()).unwrap(), p, "{spec}");
    }
}

#[test]
fn case1_case3_swap_with_beta_gamma_exchange() {
    // Mirroring swaps Case 1 and Case 3; the states then agree with beta and
    // gamma exchanged at every step.
    let swap = |c: AnnelationCase| match c {
        AnnelationCase::Case1 => AnnelationCase::Case3,
        AnnelationCase::Case3 => AnnelationCase::Case1,
        AnnelationCase::Case2 => AnnelationCase::Case2,
    };
    for spec in all_chains(7) {
        let a = chain_states(&spec).unwrap();
        let b = chain_states(&spec.mirrored()).unwrap();
        assert_eq!(spec.mirrored().annelation_cases(), spec.annelation_cases().into_iter().map(swap).collect::<Vec<_>>());
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.alpha, y.alpha);
            assert_eq!(x.beta, y.gamma);
            assert_eq!(x.gamma, y.beta);
            assert_eq!(x.delta, y.delta);
        }
    }
}

#[test]
fn mirror_and_reversal_are_graph_isomorphisms() {
    for spec in all_chains(5) {
        let g = to_petgraph(build_graph(&spec).graph());
        for other in [spec.mirrored(), spec.reversed()] {
            let h = to_petgraph(build_graph(&other).graph());
            assert!(petgraph::algo::is_isomorphic(&g, &h), "{spec} vs {other}");
        }
    }
}

#[test]
fn distinct_chains_can_differ() {
    // sanity: the encoding is not degenerate
    let linear = chain_edge_hosoya(&"4:SS".parse().unwrap()).unwrap();
    let zigzag = chain_edge_hosoya(&"4:LR".parse().unwrap()).unwrap();
    let helix = chain_edge_hosoya(&"4:LL".parse().unwrap()).unwrap();
    assert_ne!(linear, zigzag);
    assert_ne!(zigzag, helix);
}

#[test]
fn alpha_invariants_along_long_chains() {
    for text in ["12:LSRLLSRRSL", "10:SSSSSSSS", "9:LRLRLRL"] {
        let spec: ChainSpec = text.parse().unwrap();
        let states = chain_states(&spec).unwrap();
        let mut previous_degree = 0;
        for (h, s) in states.iter().enumerate().skip(1) {
            let m = 5 * h as u64 + 1;
            assert_eq!(s.alpha.coeff(0), m);
            assert_eq!(s.alpha.eval_at_one().unwrap(), m * (m + 1) / 2);
            let d = s.alpha.degree().unwrap();
            assert!(d >= previous_degree);
            previous_degree = d;
        }
        let brute = edge_hosoya_bruteforce(build_graph(&spec).graph()).unwrap();
        assert_eq!(states.last().unwrap().alpha, brute, "{text}");
    }
}

#[test]
fn helix_is_more_compact_than_linear_chain() {
    let degree = |t: &str| -> usize {
        let p: Polynomial = chain_edge_hosoya(&t.parse().unwrap()).unwrap();
        p.degree().unwrap()
    };
    assert_eq!(degree("6:SSSS"), 13);
    assert!(degree("6:LLLL") < degree("6:SSSS"));
}
