mod common;

use common::*;
use proptest::prelude::*;
use quandlekit::galkin::classify_order;
use quandlekit::knots::*;
use quandlekit::quandle::{self, QuandleTable};
use quandlekit::{BraidWord, Error, KnotDiagram, KnotRecord, Limits};

fn lim() -> Limits {
    Limits::default()
}

fn knot(name: &str) -> KnotRecord {
    find_knot(&builtin_dataset(), name)
        .unwrap_or_else(|| panic!("{name} missing"))
        .clone()
}

/// Rank over `Z_p` by plain row reduction.
fn rank_mod(matrix: &[Vec<i64>], p: i64) -> usize {
    let mut m: Vec<Vec<i64>> = matrix
        .iter()
        .map(|r| r.iter().map(|x| x.rem_euclid(p)).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = (1..p).find(|&k| k * m[rank][c] % p == 1).unwrap();
        for r in 0..m.len() {
            if r != rank && m[r][c] != 0 {
                let f = m[r][c] * inv % p;
                let pivot_row = m[rank].clone();
                for (x, y) in m[r].iter_mut().zip(&pivot_row) {
                    *x = (*x - f * y).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Colorings by plain enumeration of all arc assignments.
fn colorings_by_assignment(d: &KnotDiagram, q: &QuandleTable) -> u64 {
    let n = q.order();
    let mut colors = vec![0usize; d.arcs];
    let mut count = 0;
    loop {
        let ok = d.crossings.iter().all(|c| {
            let out = if c.sign > 0 {
                q.op(colors[c.under_in], colors[c.over])
            } else {
                q.dual_op(colors[c.under_in], colors[c.over])
            };
            out == colors[c.under_out]
        });
        count += ok as u64;
        let mut i = 0;
        loop {
            if i == d.arcs {
                return count;
            }
            colors[i] += 1;
            if colors[i] < n {
                break;
            }
            colors[i] = 0;
            i += 1;
        }
    }
}

#[test]
fn braid_parsing_and_components() {
    let b: BraidWord = "3: 1 -2 1 -2".parse().unwrap();
    assert_eq!(b.strands(), 3);
    assert_eq!(b.letters(), &[1, -2, 1, -2]);
    assert_eq!(b.to_string().parse::<BraidWord>().unwrap(), b);
    assert!(matches!(
        "2: 1 1".parse::<BraidWord>(),
        Err(Error::LinkNotKnot { components: 2 })
    ));
    assert_eq!(BraidWord::link(2, vec![1, 1]).unwrap().components(), 2);
    assert!("2: 1 3 1".parse::<BraidWord>().is_err());
    assert!("2: 1 0 1".parse::<BraidWord>().is_err());
    assert!("1 1 1".parse::<BraidWord>().is_err());
    let unknot: BraidWord = "1:".parse().unwrap();
    assert_eq!(determinant(&unknot).unwrap(), 1);
    for n in 1..=6 {
        assert_eq!(
            count_colorings(&unknot, &quandle::dihedral(n).unwrap(), &lim()).unwrap(),
            n as u64
        );
    }
}

#[test]
fn dataset_determinants() {
    let knots = builtin_dataset();
    assert_eq!(knots.len(), 35);
    let det = |n: &str| knot(n).determinant;
    assert_eq!(
        (det("3_1"), det("4_1"), det("5_2"), det("6_1"), det("8_18")),
        (3, 5, 7, 9, 45)
    );
    assert!(knots.iter().all(|k| k.determinant % 2 == 1));
}

#[test]
fn knot_table_errors() {
    assert!(matches!(
        parse_knot_table("3_1; 2; 1 1 1; 5\n"),
        Err(Error::DataIntegrity(_))
    ));
    match parse_knot_table("# header\n3_1; 2; 1 1 1\nbroken line\n") {
        Err(Error::Parse { line, .. }) => assert_eq!(line, Some(3)),
        other => panic!("unexpected {other:?}"),
    }
    match parse_knot_table("\nx; 2; 1 1\n") {
        Err(Error::LinkNotKnot { components }) => assert_eq!(components, 2),
        other => panic!("unexpected {other:?}"),
    }
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("knots.txt");
    std::fs::write(&path, "4_1; 3; 1 -2 1 -2; 5\n").unwrap();
    assert_eq!(load_knot_table(&path).unwrap()[0].determinant, 5);
    assert!(matches!(load_knot_table(dir.path().join("nope")), Err(Error::Io(_))));
}

#[test]
fn dihedral_counts_follow_the_coloring_matrix() {
    for k in builtin_dataset() {
        let d = KnotDiagram::from_braid(&k.braid);
        let matrix = d.coloring_matrix();
        for p in [3u64, 5, 7, 11, 13] {
            let expected = p.pow((d.arcs - rank_mod(&matrix, p as i64)) as u32);
            let count = count_colorings(&k.braid, &quandle::dihedral(p as usize).unwrap(), &lim()).unwrap();
            assert_eq!(count, expected, "{} by R{p}", k.name);
        }
    }
}

#[test]
fn counting_methods_agree() {
    let quandles: Vec<(String, QuandleTable)> = corpus(9).into_iter().filter(|(_, t)| t.order() <= 9).collect();
    for k in builtin_dataset() {
        let d = KnotDiagram::from_braid(&k.braid);
        for (name, q) in &quandles {
            let tuples = count_colorings(&k.braid, q, &lim()).unwrap();
            assert_eq!(
                count_colorings_wirtinger(&d, q, &lim()).unwrap(),
                tuples,
                "{} by {name}",
                k.name
            );
            if (q.order() as f64).powi(d.arcs as i32) <= 2e6 {
                assert_eq!(colorings_by_assignment(&d, q), tuples, "{} by {name}", k.name);
            }
        }
    }
}

#[test]
fn small_tuple_budget_falls_back_to_arcs() {
    let tight = Limits {
        max_coloring_tuples: 10,
        ..lim()
    };
    let k = knot("8_5");
    let q = quandle::dihedral(3).unwrap();
    assert_eq!(
        count_colorings(&k.braid, &q, &tight).unwrap(),
        count_colorings(&k.braid, &q, &lim()).unwrap()
    );
    let starved = Limits {
        max_coloring_tuples: 10,
        max_search_nodes: 5,
        ..lim()
    };
    assert!(count_colorings(&k.braid, &q, &starved).unwrap_err().is_resource_limit());
}

fn galkin_classes_up_to(order: i64) -> Vec<(String, QuandleTable)> {
    (1..=order / 3)
        .flat_map(|m| classify_order(3 * m, &lim()).unwrap())
        .map(|s| (s.to_string(), galkin_table(&s)))
        .collect()
}

#[test]
fn equal_determinant_two_bridge_sets_have_equal_counts() {
    let sets: [&[&str]; 9] = [
        &["4_1", "5_1"],
        &["5_2", "7_1"],
        &["6_2", "7_2"],
        &["6_3", "7_3", "8_1"],
        &["7_5", "8_2", "8_3"],
        &["7_6", "8_4"],
        &["8_6", "8_7"],
        &["8_8", "8_9"],
        &["8_12", "8_13"],
    ];
    let quandles = galkin_classes_up_to(24);
    for set in sets {
        let dets: Vec<u64> = set.iter().map(|n| knot(n).determinant).collect();
        assert!(dets.windows(2).all(|w| w[0] == w[1]), "{set:?}");
        for (name, q) in &quandles {
            let counts: Vec<u64> = set
                .iter()
                .map(|n| count_colorings(&knot(n).braid, q, &lim()).unwrap())
                .collect();
            assert!(counts.windows(2).all(|w| w[0] == w[1]), "{set:?} by {name}: {counts:?}");
        }
    }
}

#[test]
fn some_galkin_quandle_separates_non_two_bridge_pairs() {
    let quandles = galkin_classes_up_to(27);
    for (a, b) in [("6_1", "8_20"), ("7_4", "8_21")] {
        let (ka, kb) = (knot(a), knot(b));
        assert_eq!(ka.determinant, kb.determinant);
        let separated = quandles.iter().any(|(_, q)| {
            count_colorings(&ka.braid, q, &lim()).unwrap() != count_colorings(&kb.braid, q, &lim()).unwrap()
        });
        assert!(separated, "{a} and {b}");
    }
}

#[test]
fn profile_examples() {
    let knots = builtin_dataset();
    let qs: Vec<QuandleTable> = ["G(Z2,[0])", "G(Z2,[1])", "G(Z5,[0])", "G(Z5,[1])"]
        .iter()
        .map(|s| galkin_table(&spec(s)))
        .collect();
    let profile = coloring_profile(&knots, &qs, &lim()).unwrap();
    assert_eq!(profile.counts.len(), knots.len());
    assert!(profile.count_classes.contains(&vec![0, 1]));
    // the two order-15 quandles are not separated by any knot in the dataset
    assert!(profile.count_classes.contains(&vec![2, 3]));
    for (row, k) in profile.counts.iter().zip(&knots) {
        let d = KnotDiagram::from_braid(&k.braid);
        if d.arcs <= 5 {
            assert_eq!(row[2], colorings_by_assignment(&d, &qs[2]), "{}", k.name);
            assert_eq!(row[3], colorings_by_assignment(&d, &qs[3]), "{}", k.name);
        }
    }
    assert_ne!(profile.count_classes.len(), 1);
    let one = coloring_profile(&knots, &[quandle::trivial(3).unwrap()], &lim()).unwrap();
    assert!(one.counts.iter().all(|row| row == &vec![3]));
    assert_eq!(one.count_classes, vec![vec![0]]);
}

#[test]
fn nontrivial_coloring_examples() {
    let g50 = galkin_table(&spec("G(Z5,[0])"));
    let g70 = galkin_table(&spec("G(Z7,[0])"));
    assert!(has_nontrivial_coloring(&knot("4_1").braid, &g50, &lim()).unwrap());
    assert!(!has_nontrivial_coloring(&knot("4_1").braid, &g70, &lim()).unwrap());
    assert!(has_nontrivial_coloring(&knot("3_1").braid, &g70, &lim()).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn every_first_minor_has_the_same_determinant(k in 0usize..35, i in 0usize..64, j in 0usize..64) {
        let record = &builtin_dataset()[k];
        let d = KnotDiagram::from_braid(&record.braid);
        let matrix = d.coloring_matrix();
        let n = matrix.len();
        prop_assume!(n > 1);
        let (i, j) = (i % n, j % n);
        let minor: Vec<Vec<i64>> = matrix
            .iter()
            .enumerate()
            .filter(|&(r, _)| r != i)
            .map(|(_, row)| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
            .collect();
        prop_assert_eq!(quandlekit::linalg::determinant(&minor).unsigned_abs() as u64, record.determinant);
    }

    #[test]
    fn conjugation_preserves_counts(k in 0usize..35, shift in 0usize..20, q in 0usize..6) {
        let record = &builtin_dataset()[k];
        let table = quandle::dihedral(q + 3).unwrap();
        let rotated = record.braid.rotate(shift);
        prop_assert_eq!(determinant(&rotated).unwrap(), record.determinant);
        prop_assert_eq!(
            count_colorings(&rotated, &table, &lim()).unwrap(),
            count_colorings(&record.braid, &table, &lim()).unwrap()
        );
    }
}
