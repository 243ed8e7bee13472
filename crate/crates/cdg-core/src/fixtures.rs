//! Built-in catalog of the named six-vertex study graphs.
//!
//! Every graph the classifier's knowledge base or the CLI needs by name
//! lives here: the diameter-three graph that occurs, the two disconnected
//! graphs that occur, the twelve join-constructible graphs, the six
//! eliminated graphs, and the nine graphs whose status is open.

use crate::graph::Graph;
use alloc::vec::Vec;

fn build(n: u8, edges: &[(u8, u8)]) -> Graph {
    Graph::from_edge_list(n, edges).expect("catalog edge lists are valid")
}

/// The unique six-vertex diameter-three graph that occurs.
pub fn fig1() -> Graph {
    build(
        6,
        &[
            (1, 2),
            (1, 3),
            (1, 4),
            (2, 3),
            (2, 4),
            (2, 5),
            (3, 4),
            (3, 5),
            (4, 5),
            (5, 6),
        ],
    )
}

/// Two triangles, disconnected: component sizes (3, 3). Does not occur.
pub fn fig2() -> Graph {
    build(6, &[(1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6)])
}

/// Disconnected with component sizes (1, 5); occurs.
pub fn fig3a() -> Graph {
    build(
        6,
        &[
            (1, 2),
            (1, 3),
            (1, 4),
            (1, 5),
            (2, 3),
            (2, 4),
            (2, 5),
            (3, 4),
            (3, 5),
            (4, 5),
        ],
    )
}

/// Disconnected with component sizes (2, 4); occurs.
pub fn fig3b() -> Graph {
    build(6, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4), (5, 6)])
}

/// The twelve six-vertex graphs realizable as joins of smaller occurring
/// graphs, indexed `1..=12`.
pub fn fig4(i: usize) -> Graph {
    let edges: &[(u8, u8)] = match i {
        1 => &[
            (1, 2),
            (1, 3),
            (1, 4),
            (1, 5),
            (1, 6),
            (2, 3),
            (2, 4),
            (2, 5),
            (2, 6),
            (3, 4),
            (3, 5),
            (3, 6),
            (4, 5),
            (4, 6),
            (5, 6),
        ],
        2 => &[
            (1, 2),
            (1, 3),
            (1, 4),
            (1, 5),
            (1, 6),
            (2, 4),
            (2, 5),
            (2, 6),
            (3, 4),
            (3, 5),
            (3, 6),
            (4, 5),
            (4, 6),
            (5, 6),
        ],
        3 => &[
            (1, 2),
            (1, 3),
            (1, 6),
            (2, 3),
            (2, 4),
            (2, 5),
            (2, 6),
            (3, 4),
            (3, 5),
            (3, 6),
            (4, 5),
            (4, 6),
            (5, 6),
        ],
        4 => &[
            (1, 2),
            (1, 3),
            (1, 4),
            (1, 5),
            (1, 6),
            (2, 4),
            (2, 5),
            (2, 6),
            (3, 4),
            (3, 5),
            (3, 6),
            (4, 6),
            (5, 6),
        ],
        5 => &[
            (1, 2),
            (1, 3),
            (2, 3),
            (2, 4),
            (2, 5),
            (2, 6),
            (3, 4),
            (3, 5),
            (3, 6),
            (4, 5),
            (4, 6),
            (5, 6),
        ],
        6 => &[
            (1, 2),
            (1, 3),
            (1, 4),
            (2, 3),
            (2, 5),
            (2, 6),
            (3, 4),
            (3, 5),
            (3, 6),
            (4, 5),
            (4, 6),
            (5, 6),
        ],
        7 => &[
            (1, 2),
            (1, 3),
            (1, 4),
            (1, 5),
            (2, 3),
            (2, 4),
            (2, 6),
            (3, 5),
            (3, 6),
            (4, 5),
            (4, 6),
            (5, 6),
        ],
        8 => &[
            (1, 3),
            (2, 3),
            (2, 4),
            (2, 5),
            (2, 6),
            (3, 4),
            (3, 5),
            (3, 6),
            (4, 5),
            (4, 6),
            (5, 6),
        ],
        9 => &[
            (1, 2),
            (1, 3),
            (1, 4),
            (2, 3),
            (2, 4),
            (3, 4),
            (3, 5),
            (3, 6),
            (4, 5),
            (4, 6),
            (5, 6),
        ],
        10 => &[
            (1, 2),
            (1, 4),
            (2, 3),
            (2, 5),
            (2, 6),
            (3, 4),
            (3, 5),
            (3, 6),
            (4, 5),
            (4, 6),
            (5, 6),
        ],
        11 => &[
            (1, 2),
            (1, 3),
            (1, 6),
            (2, 3),
            (2, 4),
            (2, 5),
            (3, 4),
            (3, 5),
            (4, 5),
            (4, 6),
            (5, 6),
        ],
        12 => &[
            (1, 2),
            (1, 3),
            (1, 4),
            (2, 3),
            (2, 4),
            (3, 4),
            (4, 5),
            (4, 6),
            (5, 6),
        ],
        _ => panic!("join catalog index must be 1..=12, got {i}"),
    };
    build(6, edges)
}

/// The six connected six-vertex graphs eliminated beyond the diameter
/// reduction, indexed `1..=6` (i..vi).
pub fn fig5(i: usize) -> Graph {
    let edges: &[(u8, u8)] = match i {
        1 => &[
            (1, 2),
            (1, 3),
            (2, 4),
            (3, 5),
            (3, 6),
            (4, 5),
            (4, 6),
            (5, 6),
        ],
        2 => &[
            (1, 2),
            (1, 3),
            (2, 4),
            (3, 4),
            (3, 5),
            (3, 6),
            (4, 5),
            (4, 6),
            (5, 6),
        ],
        3 => &[
            (1, 2),
            (1, 4),
            (2, 3),
            (2, 5),
            (3, 4),
            (3, 5),
            (3, 6),
            (4, 6),
            (5, 6),
        ],
        4 => &[
            (6, 1),
            (6, 2),
            (6, 3),
            (6, 4),
            (6, 5),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 1),
        ],
        5 => &[
            (1, 2),
            (1, 3),
            (1, 4),
            (2, 4),
            (3, 5),
            (3, 6),
            (4, 5),
            (4, 6),
            (5, 6),
        ],
        6 => &[
            (1, 2),
            (1, 3),
            (1, 4),
            (2, 3),
            (2, 5),
            (3, 6),
            (4, 5),
            (4, 6),
            (5, 6),
        ],
        _ => panic!("eliminated-graph index must be 1..=6, got {i}"),
    };
    build(6, edges)
}

/// The nine-edge graph whose elimination needs the full admissibility
/// machinery; identical (as a labeled graph) to [`fig5`]`(5)`.
pub fn fig6() -> Graph {
    fig5(5)
}

/// The nine six-vertex graphs whose occurrence is open, indexed `1..=9`.
pub fn fig7(i: usize) -> Graph {
    let edges: &[(u8, u8)] = match i {
        1 => &[
            (1, 2),
            (1, 3),
            (1, 4),
            (2, 3),
            (2, 4),
            (2, 5),
            (3, 4),
            (3, 6),
            (4, 6),
            (5, 6),
        ],
        2 => &[
            (1, 2),
            (1, 3),
            (1, 5),
            (2, 4),
            (2, 5),
            (3, 4),
            (3, 5),
            (3, 6),
            (4, 5),
            (4, 6),
        ],
        3 => &[
            (1, 2),
            (1, 3),
            (1, 5),
            (2, 3),
            (2, 4),
            (3, 5),
            (3, 6),
            (4, 5),
            (4, 6),
            (5, 6),
        ],
        4 => &[
            (1, 2),
            (1, 3),
            (1, 4),
            (1, 5),
            (2, 3),
            (2, 4),
            (2, 6),
            (3, 4),
            (4, 5),
            (4, 6),
            (5, 6),
        ],
        5 => &[
            (1, 2),
            (1, 3),
            (1, 4),
            (2, 4),
            (3, 4),
            (3, 5),
            (3, 6),
            (4, 5),
            (4, 6),
            (5, 6),
        ],
        6 => &[
            (1, 2),
            (1, 3),
            (1, 4),
            (2, 3),
            (2, 5),
            (2, 6),
            (3, 4),
            (4, 5),
            (4, 6),
            (5, 6),
        ],
        7 => &[
            (1, 2),
            (1, 3),
            (1, 4),
            (2, 3),
            (2, 5),
            (2, 6),
            (3, 4),
            (3, 5),
            (4, 5),
            (4, 6),
            (5, 6),
        ],
        8 => &[
            (1, 2),
            (1, 4),
            (2, 3),
            (2, 4),
            (2, 6),
            (3, 4),
            (3, 5),
            (3, 6),
            (4, 5),
            (4, 6),
            (5, 6),
        ],
        9 => &[
            (1, 2),
            (1, 3),
            (1, 4),
            (2, 3),
            (2, 4),
            (2, 5),
            (2, 6),
            (3, 4),
            (3, 5),
            (4, 5),
            (4, 6),
            (5, 6),
        ],
        _ => panic!("open-graph index must be 1..=9, got {i}"),
    };
    build(6, edges)
}

/// The five-vertex graph ruled out by the five-vertex classification:
/// the one vertex-deleted subgraph the admissibility replay relies on.
pub fn five_vertex_excluded() -> Graph {
    build(5, &[(1, 2), (1, 3), (1, 4), (2, 4), (3, 5), (4, 5)])
}

/// Two triangles sharing one vertex; occurs by the five-vertex
/// classification. The only nontrivial join factor of [`fig4`]`(9)`.
pub fn two_triangles_shared_vertex() -> Graph {
    build(5, &[(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)])
}

/// Looks up a catalog graph by its CLI name (`FIG1`, `FIG3A`, `FIG4_7`,
/// `FIG5_III`, `FIG6`, `FIG7_2`, ...). Case-insensitive.
pub fn by_name(name: &str) -> Option<Graph> {
    let upper: alloc::string::String = name
        .trim()
        .chars()
        .map(|c| c.to_ascii_uppercase())
        .collect();
    let roman = |s: &str| -> Option<usize> {
        Some(match s {
            "I" | "1" => 1,
            "II" | "2" => 2,
            "III" | "3" => 3,
            "IV" | "4" => 4,
            "V" | "5" => 5,
            "VI" | "6" => 6,
            _ => return None,
        })
    };
    match upper.as_str() {
        "FIG1" => Some(fig1()),
        "FIG2" => Some(fig2()),
        "FIG3A" => Some(fig3a()),
        "FIG3B" => Some(fig3b()),
        "FIG6" => Some(fig6()),
        _ => {
            if let Some(rest) = upper.strip_prefix("FIG4_") {
                rest.parse::<usize>()
                    .ok()
                    .filter(|i| (1..=12).contains(i))
                    .map(fig4)
            } else if let Some(rest) = upper.strip_prefix("FIG5_") {
                roman(rest).map(fig5)
            } else if let Some(rest) = upper.strip_prefix("FIG7_") {
                rest.parse::<usize>()
                    .ok()
                    .filter(|i| (1..=9).contains(i))
                    .map(fig7)
            } else {
                None
            }
        }
    }
}

/// All catalog names, for listings and exhaustive tests.
pub fn names() -> Vec<&'static str> {
    let mut v = alloc::vec![
        "FIG1", "FIG2", "FIG3A", "FIG3B", "FIG6", "FIG4_1", "FIG4_2", "FIG4_3", "FIG4_4", "FIG4_5",
        "FIG4_6", "FIG4_7", "FIG4_8", "FIG4_9", "FIG4_10", "FIG4_11", "FIG4_12", "FIG5_I",
        "FIG5_II", "FIG5_III", "FIG5_IV", "FIG5_V", "FIG5_VI",
    ];
    v.extend([
        "FIG7_1", "FIG7_2", "FIG7_3", "FIG7_4", "FIG7_5", "FIG7_6", "FIG7_7", "FIG7_8", "FIG7_9",
    ]);
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_names_resolve() {
        for name in names() {
            assert!(by_name(name).is_some(), "{name} must resolve");
        }
        assert_eq!(by_name("FIG5_III").unwrap(), fig5(3));
        assert_eq!(by_name("fig5_iii").unwrap(), fig5(3));
        assert!(by_name("FIG4_13").is_none());
        assert!(by_name("nope").is_none());
    }

    #[test]
    fn fig6_equals_fig5_v_and_is_nine_edges() {
        assert_eq!(fig6(), fig5(5));
        assert_eq!(fig6().edge_count(), 9);
    }

    #[test]
    fn fig4_catalog_edge_counts() {
        let counts: Vec<usize> = (1..=12).map(|i| fig4(i).edge_count()).collect();
        assert_eq!(counts, [15, 14, 13, 13, 12, 12, 12, 11, 11, 11, 11, 9]);
    }

    #[test]
    fn excluded_five_vertex_graph_is_the_p5_deletion_of_fig6() {
        let fig6 = fig6();
        assert_eq!(fig6.delete_vertex(5).unwrap(), five_vertex_excluded());
        // Deleting the other degree-three outer vertex gives an isomorphic graph.
        assert_eq!(
            fig6.delete_vertex(6).unwrap().canonical_form(),
            five_vertex_excluded().canonical_form()
        );
    }

    #[test]
    fn shared_vertex_triangles_is_the_p3_deletion_of_fig6() {
        assert_eq!(
            fig6().delete_vertex(3).unwrap().canonical_form(),
            two_triangles_shared_vertex().canonical_form()
        );
    }
}
