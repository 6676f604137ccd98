mod common;

use common::*;
use quandlekit::enumeration::*;
use quandlekit::quandle::{self, canonical_key, is_alexander_small, is_connected, isomorphism, QuandleTable};
use quandlekit::Limits;

fn lim() -> Limits {
    Limits::default()
}

/// Connected quandles of order `n` up to isomorphism by trying every table
/// whose columns are permutations fixing their own index.
fn connected_by_brute_force(n: usize) -> Vec<QuandleTable> {
    let perms: Vec<Vec<usize>> = {
        let mut all = vec![vec![]];
        for _ in 0..n {
            all = all
                .into_iter()
                .flat_map(|p: Vec<usize>| {
                    let free: Vec<usize> = (0..n).filter(|v| !p.contains(v)).collect();
                    free.into_iter().map(move |v| [p.clone(), vec![v]].concat())
                })
                .collect();
        }
        all
    };
    let per_column: Vec<Vec<&Vec<usize>>> = (0..n).map(|b| perms.iter().filter(|p| p[b] == b).collect()).collect();
    let mut classes: Vec<QuandleTable> = Vec::new();
    let mut choice = vec![0usize; n];
    loop {
        let rows: Vec<Vec<usize>> = (0..n)
            .map(|a| (0..n).map(|b| per_column[b][choice[b]][a]).collect())
            .collect();
        if right_self_distributive(&rows) {
            let t = quandle::check_axioms(&rows).unwrap();
            if is_connected(&t) && !classes.iter().any(|c| isomorphism(c, &t).is_some()) {
                classes.push(t);
            }
        }
        let mut i = 0;
        loop {
            if i == n {
                return classes;
            }
            choice[i] += 1;
            if choice[i] < per_column[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

#[test]
fn agrees_with_brute_force_through_order_five() {
    for n in 1..=5 {
        let census = enumerate_connected(n, &lim()).unwrap();
        let brute = connected_by_brute_force(n);
        assert_eq!(census.len(), brute.len(), "order {n}");
        for t in &brute {
            assert!(identify(t, &census).is_some(), "order {n}");
        }
    }
}

#[test]
fn prime_orders_are_affine() {
    // every connected quandle of prime order p is Alexander over Z_p with T != 0, 1
    for p in [5usize, 7] {
        let census = enumerate_connected(p, &lim()).unwrap();
        assert_eq!(census.len(), p - 2);
        for e in &census {
            let w = is_alexander_small(&e.table, &lim()).unwrap().expect("affine");
            assert_eq!(w.group.factors(), &[p as u32]);
        }
    }
}

#[test]
fn counts_through_order_eight() {
    // orders 6 to 8 are the published census values; brute force only reaches order 5
    let counts: Vec<usize> = (1..=8).map(|n| enumerate_connected(n, &lim()).unwrap().len()).collect();
    assert_eq!(counts, vec![1, 0, 1, 1, 3, 2, 5, 3]);
}

#[test]
fn entries_are_connected_and_distinct() {
    for n in 1..=8 {
        let census = enumerate_connected(n, &lim()).unwrap();
        for (i, e) in census.iter().enumerate() {
            assert_eq!(e.order, n);
            assert!(satisfies_axioms(&e.table.rows()));
            assert!(is_connected(&e.table));
            assert_eq!(e.canonical_key, canonical_key(&e.table));
            for f in &census[i + 1..] {
                assert!(isomorphism(&e.table, &f.table).is_none());
                assert!(e.canonical_key < f.canonical_key);
            }
        }
    }
}

#[test]
fn enumeration_is_deterministic() {
    let a = enumerate_connected(6, &lim()).unwrap();
    let b = enumerate_connected(6, &lim()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn galkin_quandles_are_found() {
    let six = enumerate_connected(6, &lim()).unwrap();
    let i = identify(&galkin_table(&spec("G(Z2,[1])")), &six).unwrap();
    let j = identify(&galkin_table(&spec("G(Z2,[0])")), &six).unwrap();
    assert_ne!(i, j);
    assert_eq!(identify(&quandle::dihedral(6).unwrap(), &six), None);
    let three = enumerate_connected(3, &lim()).unwrap();
    assert_eq!(identify(&galkin_table(&spec("G(Z1,[])")), &three), Some(0));
}
