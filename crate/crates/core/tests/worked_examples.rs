use bitableau_core::{
    build_restricted_vab, build_vab, canonical_form_exhaustive, find_k_clique,
    find_k_clique_traced, iso_check_vab, iso_exhaustive, leading_clique_check, parse_edge_list,
    standardize_vab, CliqueVerdict, Graph, IsoVerdict, OracleConfig, RestrictedVab,
};

const TREE: &str = "7 6\n1 7\n2 4\n2 6\n2 7\n3 6\n4 5";
const CLIQUE_GRAPH: &str = "10 11\n1 5\n1 6\n1 7\n1 8\n1 9\n1 10\n2 3\n2 4\n2 8\n3 4\n4 7";

fn rows(v: &[&[usize]]) -> Vec<Vec<usize>> {
    v.iter().map(|r| r.to_vec()).collect()
}

fn cube_g() -> Graph {
    Graph::from_edges(
        8,
        &[
            (1, 2),
            (1, 3),
            (1, 5),
            (2, 4),
            (2, 6),
            (3, 4),
            (3, 7),
            (4, 8),
            (5, 6),
            (5, 7),
            (6, 8),
            (7, 8),
        ],
    )
    .unwrap()
}

fn cube_h() -> Graph {
    Graph::from_edges(
        8,
        &[
            (1, 2),
            (2, 3),
            (3, 4),
            (1, 4),
            (5, 6),
            (6, 7),
            (7, 8),
            (5, 8),
            (1, 5),
            (2, 6),
            (3, 7),
            (4, 8),
        ],
    )
    .unwrap()
}

fn graph_f() -> Graph {
    Graph::from_edges(
        8,
        &[
            (1, 2),
            (1, 3),
            (1, 4),
            (2, 5),
            (2, 6),
            (3, 7),
            (3, 8),
            (4, 6),
            (4, 7),
            (5, 7),
            (5, 8),
            (6, 8),
        ],
    )
    .unwrap()
}

fn cube_std() -> Vec<Vec<usize>> {
    rows(&[
        &[2, 3, 4],
        &[1, 5, 6],
        &[1, 5, 7],
        &[1, 6, 7],
        &[2, 3, 8],
        &[2, 4, 8],
        &[3, 4, 8],
        &[5, 6, 7],
    ])
}

#[test]
fn tree_input_tableau() {
    let t = build_vab(&parse_edge_list(TREE).unwrap());
    assert_eq!(
        t.rows(),
        rows(&[&[7], &[4, 6, 7], &[6], &[2, 5], &[4], &[2, 3], &[1, 2]])
    );
}

#[test]
fn tree_first_transposition() {
    let t = build_vab(&parse_edge_list(TREE).unwrap());
    let moved = t.act_transposition(1, 2).unwrap();
    assert_eq!(
        moved.rows(),
        rows(&[&[4, 6, 7], &[7], &[6], &[1, 5], &[4], &[1, 3], &[1, 2]])
    );
    assert_eq!(
        moved.to_string(),
        "1 | 4 6 7\n2 | 7\n3 | 6\n4 | 1 5\n5 | 4\n6 | 1 3\n7 | 1 2"
    );
}

#[test]
fn tree_standard_form() {
    let tree = parse_edge_list(TREE).unwrap();
    let expected = rows(&[&[2, 3, 4], &[1, 5], &[1, 6], &[1, 7], &[2], &[3], &[4]]);

    let mut chained = build_vab(&tree);
    for (i, j) in [(1, 2), (2, 4), (3, 6), (4, 7)] {
        chained = chained.act_transposition(i, j).unwrap();
    }
    assert_eq!(chained.rows(), expected);

    let greedy = standardize_vab(&tree);
    assert_eq!(greedy.tableau.rows(), expected);
    assert_eq!(
        tree.relabel(&greedy.vertex_perm).unwrap(),
        greedy.tableau.to_graph()
    );
    assert!(greedy.within_budget());

    let oracle = canonical_form_exhaustive(&tree, &OracleConfig::default()).unwrap();
    assert_eq!(oracle.tableau.rows(), expected);
}

#[test]
fn cubes_share_the_printed_standard_form() {
    let (g, h) = (cube_g(), cube_h());
    assert_eq!(standardize_vab(&g).tableau.rows(), cube_std());
    assert_eq!(standardize_vab(&h).tableau.rows(), cube_std());
    let oracle = canonical_form_exhaustive(&g, &OracleConfig::default()).unwrap();
    assert_eq!(oracle.tableau.rows(), cube_std());

    match iso_check_vab(&g, &h, false).unwrap() {
        IsoVerdict::Isomorphic(w) => assert_eq!(g.relabel(&w).unwrap(), h),
        other => panic!("expected isomorphic, got {other:?}"),
    }
    match iso_check_vab(&g, &h, true).unwrap() {
        IsoVerdict::Isomorphic(w) => assert_eq!(g.relabel(&w).unwrap(), h),
        other => panic!("expected isomorphic, got {other:?}"),
    }
}

#[test]
fn third_graph_is_not_a_cube() {
    let cfg = OracleConfig::default();
    let f = graph_f();
    assert_eq!(f.sorted_degrees(), vec![3; 8]);
    assert_eq!(iso_exhaustive(&cube_g(), &f, &cfg).unwrap(), None);
    assert_eq!(iso_exhaustive(&cube_h(), &f, &cfg).unwrap(), None);
    assert_ne!(standardize_vab(&f).tableau.rows(), cube_std());
    // the greedy verdict alone cannot certify this pair
    assert_eq!(
        iso_check_vab(&cube_g(), &f, false).unwrap(),
        IsoVerdict::Inconclusive
    );
}

#[test]
fn clique_graph_transposition_exposes_a_triangle() {
    let g = parse_edge_list(CLIQUE_GRAPH).unwrap();
    let before = build_restricted_vab(&g, 3).unwrap();
    assert_eq!(
        before.to_string().lines().next().unwrap(),
        "1 | 5 6 | 7 8 9 10"
    );
    assert!(!leading_clique_check(&before));

    let moved = before.vab().act_transposition(1, 4).unwrap();
    assert_eq!(
        moved.rows(),
        rows(&[
            &[2, 3, 7],
            &[1, 3, 8],
            &[1, 2],
            &[5, 6, 7, 8, 9, 10],
            &[4],
            &[4],
            &[1, 4],
            &[2, 4],
            &[4],
            &[4],
        ])
    );
    assert!(leading_clique_check(&RestrictedVab::new(moved, 3).unwrap()));
}

#[test]
fn clique_graph_search() {
    let g = parse_edge_list(CLIQUE_GRAPH).unwrap();
    assert_eq!(
        find_k_clique(&g, 3).unwrap(),
        CliqueVerdict::Found(vec![2, 3, 4])
    );
    let (_, run) = find_k_clique_traced(&g, 3).unwrap();
    assert!(leading_clique_check(&run.tableau));
    // 2, 3 and 4 have no common fourth neighbour
    assert!(!matches!(
        find_k_clique(&g, 4).unwrap(),
        CliqueVerdict::Found(_)
    ));
}
