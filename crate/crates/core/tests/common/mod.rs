//! Independent reference computations shared by the integration tests.
#![allow(dead_code)]

use quandlekit::abelian::abelian_groups_of_order;
use quandlekit::galkin::GalkinSpec;
use quandlekit::quandle::{self, QuandleTable};
use quandlekit::{GroupElement, InvariantFactors};

/// Every abelian group with order at most `max`, smallest order first.
pub fn groups_up_to(max: usize) -> Vec<InvariantFactors> {
    (1..=max as i64)
        .flat_map(|n| abelian_groups_of_order(n).unwrap())
        .collect()
}

/// Residue vectors of `factors` in lexicographic order, first coordinate
/// most significant.
pub fn residues(factors: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for &n in factors {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..n).map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

pub fn elements(group: &InvariantFactors) -> Vec<GroupElement> {
    residues(group.factors()).into_iter().map(GroupElement).collect()
}

/// `G(A, c1, c2)` evaluated straight from the defining formula on residue
/// vectors, indexed by `x * |A| + position in lexicographic order`.
pub fn galkin_rows(factors: &[u32], c1: &[u32], c2: &[u32]) -> Vec<Vec<usize>> {
    let elems = residues(factors);
    let m = elems.len();
    let rank = |v: &[u32]| elems.iter().position(|e| e == v).unwrap();
    let mu = [2i64, -1, -1];
    let zero = vec![0u32; factors.len()];
    let tau = [zero.as_slice(), c1, c2];
    let mut rows = vec![vec![0usize; 3 * m]; 3 * m];
    for x in 0..3i64 {
        for (ia, a) in elems.iter().enumerate() {
            for y in 0..3i64 {
                for (ib, b) in elems.iter().enumerate() {
                    let d = (x - y).rem_euclid(3) as usize;
                    let value: Vec<u32> = (0..factors.len())
                        .map(|i| {
                            let n = factors[i] as i64;
                            (-(a[i] as i64) + mu[d] * b[i] as i64 + tau[d][i] as i64).rem_euclid(n) as u32
                        })
                        .collect();
                    let z = (2 * y - x).rem_euclid(3) as usize;
                    rows[x as usize * m + ia][y as usize * m + ib] = z * m + rank(&value);
                }
            }
        }
    }
    rows
}

pub fn galkin_table(spec: &GalkinSpec) -> QuandleTable {
    let t = galkin_rows(spec.group.factors(), spec.c1.coords(), spec.c2.coords());
    quandle::check_axioms(&t).unwrap()
}

pub fn spec(s: &str) -> GalkinSpec {
    s.parse().unwrap()
}

/// Order of `a` by repeated addition.
pub fn order_by_addition(factors: &[u32], a: &[u32]) -> u32 {
    let mut x = a.to_vec();
    let mut k = 1;
    while x.iter().any(|&v| v != 0) {
        for i in 0..x.len() {
            x[i] = (x[i] + a[i]) % factors[i];
        }
        k += 1;
    }
    k
}

/// Every `G(A, 0, c)` with `|A| <= max`.
pub fn pointed_specs_up_to(max: usize) -> Vec<GalkinSpec> {
    groups_up_to(max)
        .into_iter()
        .flat_map(|g| {
            elements(&g)
                .into_iter()
                .map(move |c| GalkinSpec::pointed(g.clone(), c).unwrap())
        })
        .collect()
}

/// Every `G(A, c1, c2)` with `|A| <= max`.
pub fn all_specs_up_to(max: usize) -> Vec<GalkinSpec> {
    groups_up_to(max)
        .into_iter()
        .flat_map(|g| {
            let els = elements(&g);
            let mut out = Vec::new();
            for c1 in &els {
                for c2 in &els {
                    out.push(GalkinSpec::new(g.clone(), c1.clone(), c2.clone()).unwrap());
                }
            }
            out
        })
        .collect()
}

/// Whether `rho` satisfies the good-involution identities, checked directly.
pub fn good_involution_by_definition(t: &QuandleTable, rho: &[usize]) -> bool {
    let n = t.order();
    let dual = |x: usize, y: usize| (0..n).find(|&z| t.op(z, y) == x).unwrap();
    (0..n).all(|x| rho[rho[x]] == x)
        && (0..n).all(|x| (0..n).all(|y| t.op(x, rho[y]) == dual(x, y) && rho[t.op(x, y)] == t.op(rho[x], y)))
}

/// All three axioms checked directly on a raw table.
pub fn satisfies_axioms(rows: &[Vec<usize>]) -> bool {
    let n = rows.len();
    n > 0
        && rows.iter().all(|r| r.len() == n && r.iter().all(|&v| v < n))
        && (0..n).all(|a| rows[a][a] == a)
        && (0..n).all(|b| {
            let mut col: Vec<usize> = (0..n).map(|a| rows[a][b]).collect();
            col.sort_unstable();
            col == (0..n).collect::<Vec<_>>()
        })
        && right_self_distributive(rows)
}

pub fn right_self_distributive(rows: &[Vec<usize>]) -> bool {
    let n = rows.len();
    (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| rows[rows[a][b]][c] == rows[rows[a][c]][rows[b][c]])))
}

/// A varied collection of small quandles.
pub fn corpus(max_order: usize) -> Vec<(String, QuandleTable)> {
    let lim = quandlekit::Limits::default();
    let mut out = Vec::new();
    for n in 1..=max_order.min(12) {
        out.push((format!("R{n}"), quandle::dihedral(n).unwrap()));
    }
    for n in 1..=max_order.min(4) {
        out.push((format!("trivial-{n}"), quandle::trivial(n).unwrap()));
    }
    for n in 1..=max_order.min(7) {
        for (i, e) in quandlekit::enumeration::enumerate_connected(n, &lim)
            .unwrap()
            .into_iter()
            .enumerate()
        {
            out.push((format!("census {n}#{i}"), e.table));
        }
    }
    for s in pointed_specs_up_to(max_order / 3) {
        out.push((s.to_string(), galkin_table(&s)));
    }
    if max_order >= 9 {
        out.push((
            "R3xR3".into(),
            quandle::product(&quandle::dihedral(3).unwrap(), &quandle::dihedral(3).unwrap()),
        ));
    }
    if max_order >= 6 {
        out.push((
            "R2xR3".into(),
            quandle::product(&quandle::dihedral(2).unwrap(), &quandle::dihedral(3).unwrap()),
        ));
    }
    out
}
