mod common;

use std::collections::BTreeMap;

use common::{from_traces, running_example, set, sets};
use pathgraph_core::coloring::{
    base_coloring_hq, cross_extension, cross_intra_split, find_bad_triple, Member, Refutation,
};
use pathgraph_core::obstructions::{find_family_member, induced_member_near, is_induced_embedding};
use pathgraph_core::*;

fn at(g: &Graph, q: &VertexSet) -> (Decomposition, AttachednessGraph) {
    let dec = gamma_components(g, q).unwrap();
    let m = quotient(&dec).unwrap();
    (dec, m)
}

fn colors(outcome: &WeakOutcome) -> &[usize] {
    match outcome {
        WeakOutcome::Colorable(f) => &f.colors,
        WeakOutcome::Refuted(r) => panic!("refuted: {r:?}"),
    }
}

mod running_example {
    use super::*;

    #[test]
    fn induced_on_fgh_is_a_two_edge_path() {
        let g = running_example();
        let (sub, map) = g.induced_subgraph(&set("fgh")).unwrap();
        assert_eq!(map, vec![5, 6, 7]);
        assert_eq!(sub.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn removing_bce_leaves_three_parts() {
        let g = running_example();
        assert_eq!(g.components_avoiding(&set("bce")), sets(&["a", "d", "fgh"]));
        assert!(g.is_clique(&set("bce")).unwrap());
        assert!(!g.is_clique(&set("abe")).unwrap());
    }

    #[test]
    fn plus_counts() {
        let p = running_example().plus();
        assert_eq!((p.n(), p.edge_count()), (16, 21));
    }

    #[test]
    fn cliques_and_separators() {
        let g = running_example();
        let mut expected = sets(&["abc", "bce", "cde", "beg", "bfg", "egh"]);
        expected.sort();
        assert_eq!(maximal_cliques(&g).unwrap(), expected);
        assert!(peo_or_hole(&g).is_chordal());
        assert_eq!(clique_separators(&g).unwrap(), sets(&["bce", "beg"]));
        let t = clique_tree(&g).unwrap();
        assert!(is_clique_tree(&g, &t).unwrap());
    }

    #[test]
    fn listed_tree_is_a_clique_path_tree() {
        let g = running_example();
        let cliques = sets(&["abc", "bce", "cde", "beg", "bfg", "egh"]);
        let t = CliqueTree::new(cliques, vec![(0, 1), (2, 1), (1, 3), (3, 4), (3, 5)]);
        assert!(is_clique_path_tree(&g, &t).unwrap());
    }

    #[test]
    fn gammas_at_bce() {
        let g = running_example();
        let (dec, _) = at(&g, &set("bce"));
        let comps: Vec<_> = dec.gammas.iter().map(|gm| gm.component.clone()).collect();
        assert_eq!(comps, sets(&["a", "d", "fgh"]));
        let traces: Vec<_> = dec.gammas.iter().map(|gm| gm.traces.clone()).collect();
        assert_eq!(
            traces,
            vec![sets(&["bc"]), sets(&["ce"]), sets(&["b", "be", "e"])]
        );
        assert_eq!(dec.gammas[0].relevant_cliques, sets(&["abc"]));
        let mut rel = dec.gammas[2].relevant_cliques.clone();
        rel.sort();
        assert_eq!(rel, sets(&["beg", "bfg", "egh"]));
    }

    #[test]
    fn relations_at_bce() {
        let g = running_example();
        let (dec, m) = at(&g, &set("bce"));
        let [g1, g2, g3] = [&dec.gammas[0], &dec.gammas[1], &dec.gammas[2]];
        assert!(attached(g1, g2));
        assert!(antipodal(g1, g2));
        assert!(!dominates(g1, g2) && !dominates(g2, g1));
        assert!(antipodal(g2, g3) && antipodal(g1, g3));
        assert_eq!(m.len(), 3);
        assert_eq!(m.edges.edges_of(EdgeColor::Antipodal).count(), 3);
        assert_eq!(m.edges.edges_of(EdgeColor::Dominance).count(), 0);
        assert_eq!(m.is_neighboring_set(&[0, 1, 2]), None);
        assert_eq!(full_antipodal_triple(&m, &[0, 1, 2]), None);
    }

    #[test]
    fn coloring_at_bce() {
        let g = running_example();
        let (dec, m) = at(&g, &set("bce"));
        let s = skeleton(&m);
        assert_eq!(s.upper, vec![0, 1, 2]);
        assert!(s.pairs.is_empty());
        let split = cross_intra_split(&m, &s).unwrap();
        assert_eq!(split.cross.len(), 3);
        let h = base_coloring_hq(&m, &s).unwrap();
        assert_eq!(h, BTreeMap::from([(0, 1), (1, 2), (2, 3)]));
        assert_eq!(find_bad_triple(&m, &s).unwrap(), None);
        assert_eq!(cross_extension(&m, &s, &h).unwrap(), h);
        let outcome = weak_coloring(&m).unwrap();
        assert_eq!(colors(&outcome), &[1, 2, 3]);
        assert!(is_strong_coloring(&m, &[1, 2, 3]));
        assert!(oracle_strong_coloring(&dec, &m).unwrap().is_some());
    }

    #[test]
    fn accepted_but_not_directed() {
        let g = running_example();
        let v = recognize_path_graph(&g).unwrap();
        assert!(v.is_path_graph());
        assert_eq!(v.separators().len(), 2);
        assert!(v.separators().iter().all(|a| a.is_colorable()));
        assert!(oracle_clique_path_tree(&g).unwrap().is_some());
        match recognize_directed_path_graph(&g).unwrap() {
            DirectedVerdict::NotDirectedPathGraph {
                separator,
                odd_cycle,
            } => {
                assert_eq!(separator, set("bce"));
                assert_eq!(odd_cycle.len(), 3);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn host_paths() {
        let g = running_example();
        let t = realize(&g).unwrap();
        let host = clique_path_tree_to_host(&g, &t).unwrap();
        assert_eq!((host.nodes, host.paths.len()), (6, 8));
        for v in set("adf").iter() {
            assert_eq!(host.paths[v].len(), 1, "p_{}", g.label(v));
        }
        assert_eq!(host.intersection_graph().edges(), g.edges());
    }

    #[test]
    fn parses_from_an_edge_list() {
        let text = "# running example\na b\n";
        assert!(parse_graph(text, Format::Edgelist).is_err());
        let lines: String = running_example()
            .edges()
            .iter()
            .map(|(u, v)| format!("{u} {v}\n"))
            .collect();
        assert_eq!(lines.lines().count(), 13);
        let g = parse_graph(&lines, Format::Edgelist).unwrap();
        assert_eq!(g.n(), 8);
        assert_eq!(maximal_cliques(&g).unwrap().len(), 6);
    }
}

mod hub {
    use super::*;

    fn q() -> VertexSet {
        VertexSet::from([0, 1, 2, 3])
    }

    #[test]
    fn gammas_and_relations() {
        let g = k4_hub(4).unwrap();
        let (dec, m) = at(&g, &q());
        let traces: Vec<_> = dec.gammas.iter().map(|gm| gm.traces.clone()).collect();
        let t = |a: usize, b: usize| vec![VertexSet::from([a, b])];
        assert_eq!(traces, vec![t(0, 1), t(0, 2), t(0, 3)]);
        assert!(antipodal(&dec.gammas[0], &dec.gammas[1]));
        assert_eq!(m.edges.edges_of(EdgeColor::Antipodal).count(), 3);
        assert_eq!(m.is_neighboring_set(&[0, 1, 2]), Some(0));
        assert_eq!(g.label(0), "1");
        let s = skeleton(&m);
        assert_eq!(full_antipodal_triple(&m, &s.upper), Some(([0, 1, 2], 0)));
    }

    #[test]
    fn refuted_with_full_triangle() {
        let g = k4_hub(4).unwrap();
        let (_, m) = at(&g, &q());
        match weak_coloring(&m).unwrap() {
            WeakOutcome::Refuted(Refutation::FullAntipodalTriple { classes, witness }) => {
                assert_eq!((classes, witness), ([0, 1, 2], 0));
            }
            other => panic!("{other:?}"),
        }
        for f in [[1, 2, 3], [1, 1, 2], [1, 2, 1]] {
            assert!(!is_strong_coloring(&m, &f));
        }
        let v = recognize_path_graph(&g).unwrap();
        let o = v.obstruction().unwrap();
        assert_eq!(o.family(), Family::FullTriangle);
        assert_eq!(o.witness, Some(0));
        assert!(!recognize_directed_path_graph(&g)
            .unwrap()
            .is_directed_path_graph());
    }

    #[test]
    fn star_tree_is_not_a_path_tree() {
        let g = k4_hub(4).unwrap();
        let mut cliques = maximal_cliques(&g).unwrap();
        cliques.sort_by_key(|c| std::cmp::Reverse(c.len()));
        assert_eq!(cliques[0], q());
        let t = CliqueTree::new(cliques, vec![(0, 1), (0, 2), (0, 3)]);
        assert!(is_clique_tree(&g, &t).unwrap());
        assert!(!is_clique_path_tree(&g, &t).unwrap());
    }

    #[test]
    fn oracle_exhausts_sixteen_trees() {
        let sweep = oracle_sweep(&k4_hub(4).unwrap()).unwrap();
        assert_eq!(sweep.tree, None);
        assert_eq!(sweep.examined, 16);
    }

    #[test]
    fn plus_graph_has_an_induced_wheel() {
        let g = k4_hub(4).unwrap().plus();
        let v = recognize_path_graph(&g).unwrap();
        let a = v.failure().unwrap();
        assert_eq!(a.separator(), &q());
        let m = &a.attachedness;
        let wheel = find_family_member(m, &[Family::W0], true).unwrap().unwrap();
        assert_eq!(wheel.pattern.order, 1);
        assert!(is_induced_embedding(m, &wheel));
        let hub = wheel.embedding[3];
        assert_eq!(m.gammas[hub].traces, vec![VertexSet::singleton(0)]);
        let near = induced_member_near(m, a.obstruction.as_ref().unwrap())
            .unwrap()
            .unwrap();
        assert_eq!(near.family(), Family::W0);
    }

    #[test]
    fn tampered_certificates_fail() {
        let g = k4_hub(4).unwrap();
        let v = recognize_path_graph(&g).unwrap();
        let m = &v.failure().unwrap().attachedness;
        let mut o = v.obstruction().unwrap().clone();
        assert!(verify_obstruction(m, &o));
        o.witness = Some(1);
        assert!(!verify_obstruction(m, &o));

        let w0 = build_family(Family::W0, 1).unwrap();
        let mut flipped = build_family(Family::W0, 1).unwrap();
        flipped.pattern = EdgeColoredGraph::new(4);
        for (a, b, c) in w0.pattern.edges() {
            let c = if (a, b) == (0, 1) {
                EdgeColor::Dominance
            } else {
                c
            };
            flipped.pattern.add_edge(a, b, c).unwrap();
        }
        let plus = recognize_path_graph(&g.plus()).unwrap();
        let pm = &plus.failure().unwrap().attachedness;
        let mut found = find_family_member(pm, &[Family::W0], true)
            .unwrap()
            .unwrap();
        assert!(verify_obstruction(pm, &found));
        found.pattern = flipped;
        assert!(!verify_obstruction(pm, &found));
    }
}

mod synthetic {
    use super::*;

    /// Uppers `{0,1,2}` and `{2,3,4}`, with `{0,1}` below the first,
    /// `{3,4}` below the second and `{2}` below both.
    #[test]
    fn two_uppers_and_a_shared_class() {
        let g = from_traces(
            6,
            &[
                &[&[0, 1, 2]],
                &[&[0, 1]],
                &[&[3, 4]],
                &[&[2, 3, 4]],
                &[&[2]],
            ],
        );
        let q = VertexSet::from([0, 1, 2, 3, 4, 5]);
        let (dec, m) = at(&g, &q);
        assert_eq!(m.len(), 5);
        assert!(m.below(1, 0) && m.below(2, 3) && m.below(4, 0) && m.below(4, 3));
        let s = skeleton(&m);
        assert_eq!(s.upper, vec![0, 3]);
        assert_eq!(s.singles, vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(s.pairs, BTreeMap::from([((1, 2), vec![4])]));
        assert_eq!(s.member_of(4), Some(Member::Pair(1, 2)));
        let outcome = weak_coloring(&m).unwrap();
        assert!(is_strong_coloring(&m, colors(&outcome)));
        assert!(oracle_strong_coloring(&dec, &m).unwrap().is_some());
        assert!(recognize_path_graph(&g).unwrap().is_path_graph());
    }

    #[test]
    fn identical_traces_share_a_class() {
        let g = from_traces(3, &[&[&[0, 1]], &[&[0, 1]], &[&[1, 2]]]);
        let (_, m) = at(&g, &VertexSet::from([0, 1, 2]));
        assert_eq!(m.class_members, vec![vec![0, 1], vec![2]]);
    }

    #[test]
    fn nested_traces_dominate() {
        let g = from_traces(3, &[&[&[0, 1], &[0], &[1]], &[&[0, 1]]]);
        let (dec, _) = at(&g, &VertexSet::from([0, 1, 2]));
        assert_eq!(dec.gammas[0].traces.len(), 3);
        assert!(dominates(&dec.gammas[0], &dec.gammas[1]));
        assert!(!antipodal(&dec.gammas[0], &dec.gammas[1]));
    }

    /// A class below both uppers, antipodal to one class below each, the
    /// two of which are antipodal to each other without a common vertex.
    #[test]
    fn bad_triple_becomes_a_wheel_with_antipodal_spoke() {
        let g = from_traces(
            7,
            &[
                &[&[0, 1, 2, 3, 4]],
                &[&[2, 3, 4, 5, 6]],
                &[&[2, 3]],
                &[&[1, 2, 4]],
                &[&[3, 4, 5]],
            ],
        );
        let q = VertexSet::from([0, 1, 2, 3, 4, 5, 6]);
        let (dec, m) = at(&g, &q);
        let s = skeleton(&m);
        assert_eq!(s.upper, vec![0, 1]);
        let bad = find_bad_triple(&m, &s).unwrap().unwrap();
        assert_eq!(
            (bad.pair, bad.gamma, bad.gamma_i, bad.gamma_j),
            ((1, 2), 2, 3, 4)
        );
        let outcome = weak_coloring(&m).unwrap();
        let WeakOutcome::Refuted(r) = &outcome else {
            panic!("expected a refutation")
        };
        assert!(matches!(r, Refutation::BadTriple(_)));
        let o = refutation_to_obstruction(&m, &s, r).unwrap();
        assert_eq!((o.family(), o.pattern.order), (Family::W1, 1));
        assert!(verify_obstruction(&m, &o));
        assert_eq!(oracle_strong_coloring(&dec, &m).unwrap(), None);
        assert_eq!(oracle_clique_path_tree(&g).unwrap(), None);
    }

    #[test]
    fn two_antipodal_classes_get_two_colors() {
        let g = from_traces(3, &[&[&[0, 1]], &[&[1, 2]]]);
        let (_, m) = at(&g, &VertexSet::from([0, 1, 2]));
        assert_eq!(colors(&weak_coloring(&m).unwrap()), &[1, 2]);
    }
}

mod small {
    use super::*;

    #[test]
    fn four_cycle() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        match recognize_path_graph(&g).unwrap() {
            Verdict::NotChordal(h) => assert_eq!(h.0, vec![0, 1, 2, 3]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn atoms() {
        let k = Graph::complete(5);
        assert!(clique_separators(&k).unwrap().is_empty());
        assert!(recognize_directed_path_graph(&k)
            .unwrap()
            .is_directed_path_graph());
        let p = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(clique_separators(&p).unwrap().is_empty());
        assert_eq!(
            maximal_cliques(&p).unwrap(),
            vec![VertexSet::from([0, 1]), VertexSet::from([1, 2])]
        );
    }

    #[test]
    fn two_gammas_from_triangles_sharing_an_edge() {
        // triangles 012 and 123 with a pendant triangle at 3
        let g = Graph::from_edges(
            6,
            &[
                (0, 1),
                (0, 2),
                (1, 2),
                (1, 3),
                (2, 3),
                (3, 4),
                (3, 5),
                (4, 5),
            ],
        )
        .unwrap();
        let (dec, _) = at(&g, &VertexSet::from([1, 2, 3]));
        assert_eq!(dec.len(), 2);
        assert!(dec.gammas.iter().all(|gm| gm.relevant_cliques.len() == 1));
    }
}
