use hyperzeta::distinguish::*;
use hyperzeta::generate::*;
use hyperzeta::linegraph::line_graph_of;
use hyperzeta::zeta::{formal_reciprocal, reciprocal_zeta, Warning};
use hyperzeta::IntPoly;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn triangle_collapsed_has_no_prime_cycles() {
    let k3 = complete_graph(3);
    assert_eq!(ihara_zeta_graph(&k3).unwrap(), IntPoly::from_i64s(&[1, 0, 0, -1]).pow(2));
    let family = collapse(&k3, &[vec![0, 1, 2]]).unwrap();
    let (p, warnings) = formal_reciprocal(&family.result).unwrap();
    assert_eq!(p, IntPoly::one());
    assert!(warnings.iter().any(|w| matches!(w, Warning::Unvalidated(_))));
}

#[test]
fn prism_collapse_drops_consecutive_triangle_steps() {
    let g = prism();
    let collapsed = collapse(&g, &[vec![0, 1, 2]]).unwrap().result;
    let before = line_graph_of(g.as_hypergraph()).enumerate_prime_cycles(6, 1_000_000).unwrap();
    let after = line_graph_of(&collapsed).enumerate_prime_cycles(6, 1_000_000).unwrap();
    // the two orientations of the inner triangle disappear, as do cycles
    // that turn twice inside it
    assert_eq!(before.get(&3), Some(&4));
    assert_eq!(after.get(&3), Some(&2));
    assert_eq!(before.get(&4), after.get(&4));
    assert!(after.get(&5) < before.get(&5));
    assert_eq!(reciprocal_zeta(&collapsed).unwrap().degree(), Some(collapsed.total_order()));
}

#[test]
fn k4_two_triangles() {
    let k4 = complete_graph(4);
    let family = collapse(&k4, &[vec![0, 1, 2], vec![0, 1, 3]]).unwrap();
    assert_eq!(family.result.hyperedges(), &[vec![2, 3], vec![0, 1, 2], vec![0, 1, 3]]);
    assert!(matches!(collapse(&prism(), &[vec![0, 1, 3]]), Err(hyperzeta::Error::NotAClique(_))));
}

#[test]
fn clique_enumeration_counts() {
    assert_eq!(enumerate_cliques(&complete_graph(5), 3).len(), 10);
    assert_eq!(enumerate_cliques(&complete_graph(5), 4).len(), 5);
    assert_eq!(enumerate_cliques(&petersen(), 3).len(), 0);
    assert_eq!(enumerate_cliques(&prism(), 3), vec![vec![0, 1, 2], vec![3, 4, 5]]);
}

#[test]
fn no_cliques_means_one_empty_choice() {
    let m = invariant_multiset(&petersen(), 3, &Mode::DisjointPairs).unwrap();
    assert_eq!(m.choices, vec![Vec::<Vec<usize>>::new()]);
    assert_eq!(m.polys, vec![ihara_zeta_graph(&petersen()).unwrap()]);
}

#[test]
fn isomorphic_graphs_are_never_distinguished() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..20 {
        let g = random_graph(&mut rng, 7, 0.5);
        let perm = random_permutation(&mut rng, g.n_vertices());
        let h = g.relabel(&perm).unwrap();
        for mode in [Mode::AllSingletons, Mode::DisjointPairs, Mode::AllCliquesAtOnce] {
            let c = distinguish(&g, &h, 3, &mode).unwrap();
            assert!(c.cospectral && c.same_ihara);
            assert_eq!(c.verdict, Verdict::NotDistinguishedByThisInvariant, "{mode}");
        }
    }
}

#[test]
fn cospectral_pair_is_separated() {
    let (x1, x2) = (stark_terras_x1(), stark_terras_x2());
    assert_eq!(enumerate_cliques(&x1, 3).len(), 4);
    assert_eq!(enumerate_cliques(&x2, 3).len(), 4);
    let c = distinguish(&x1, &x2, 3, &Mode::DisjointPairs).unwrap();
    assert!(c.cospectral && c.same_ihara);
    assert_eq!(c.verdict, Verdict::Distinguished);
    assert!(c.second.polys.windows(2).all(|w| w[0] == w[1]));
    // collapsing the two disjoint triangles {12,32,42} and {14,24,44} of x1
    let red = vec![vec![4, 6, 7], vec![12, 13, 15]];
    assert!(c.first.choices.contains(&red));
    let explicit = invariant_multiset(&x1, 3, &Mode::Explicit(vec![red])).unwrap();
    assert_ne!(explicit.polys[0], c.second.polys[0]);
    let all = distinguish(&x1, &x2, 3, &Mode::AllCliquesAtOnce).unwrap();
    assert_eq!(all.verdict, Verdict::Distinguished);
}

#[test]
fn mode_names_round_trip() {
    for mode in [Mode::AllSingletons, Mode::DisjointPairs, Mode::AllCliquesAtOnce] {
        assert_eq!(mode.to_string().parse::<Mode>().unwrap(), mode);
    }
    assert!("nonsense".parse::<Mode>().is_err());
}
