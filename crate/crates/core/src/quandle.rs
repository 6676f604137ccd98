//! Finite quandles as operation tables.
//!
//! Rows are left operands and columns right operands, so column `b` is the
//! right translation `R_b : a -> a*b`. The dual operation `a ∗̄ b = R_b⁻¹(a)` is
//! tabulated alongside the table on construction.

use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write as _;
use std::ops::ControlFlow;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::abelian::{self, Automorphism, GroupArith, InvariantFactors};
use crate::{AxiomViolation, Error, Limits, Result};

const NONE: usize = usize::MAX;

/// A validated quandle operation table on `{0, .., n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuandleTable {
    n: usize,
    table: Vec<u32>,
    dual: Vec<u32>,
}

/// A bijection `f` with `f(a*b) = f(a)*f(b)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoWitness {
    pub bijection: Vec<usize>,
}

/// Cycle lengths of every right translation, one sorted list per column.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleProfile {
    pub columns: Vec<Vec<usize>>,
}

/// One entry of the aggregated cycle profile: a cycle type and how many
/// columns have it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CycleClass {
    pub lengths: Vec<usize>,
    pub columns: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub connected: bool,
    pub latin: bool,
    pub faithful: bool,
    pub medial: bool,
    pub left_distributive: bool,
    pub kei: bool,
    pub self_dual: bool,
    pub has_r3_subquandle: bool,
    pub cycle_profile: Vec<CycleClass>,
}

/// Witness that a table is an Alexander quandle `(A, T)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlexanderWitness {
    pub group: InvariantFactors,
    pub automorphism: Automorphism,
    /// Isomorphism from the Alexander table onto the tested table.
    pub iso: IsoWitness,
}

/// Validates a raw table against the three quandle axioms.
///
/// Checks run in axiom order: idempotency for every element, then each column
/// for being a permutation, then right self-distributivity over triples in
/// lexicographic order. The first failure is reported.
pub fn check_axioms(rows: &[Vec<usize>]) -> Result<QuandleTable> {
    let n = rows.len();
    if n == 0 {
        return Err(Error::MalformedTable("a quandle has at least one element".into()));
    }
    if let Some((i, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
        return Err(Error::MalformedTable(format!(
            "table is not square: row {i} has {} entries, expected {n}",
            row.len()
        )));
    }
    if let Some(v) = rows.iter().flatten().find(|&&v| v >= n) {
        return Err(Error::MalformedTable(format!("entry {v} is out of range 0..{n}")));
    }
    let table: Vec<u32> = rows.iter().flatten().map(|&v| v as u32).collect();
    let op = |a: usize, b: usize| table[a * n + b] as usize;

    for a in 0..n {
        if op(a, a) != a {
            return Err(Error::Axiom(AxiomViolation::Idempotency { a, product: op(a, a) }));
        }
    }
    for b in 0..n {
        let mut seen = vec![NONE; n];
        for a in 0..n {
            let v = op(a, b);
            if seen[v] != NONE {
                return Err(Error::Axiom(AxiomViolation::Invertibility {
                    column: b,
                    value: v,
                    rows: (seen[v], a),
                }));
            }
            seen[v] = a;
        }
    }
    for a in 0..n {
        for b in 0..n {
            let ab = op(a, b);
            for c in 0..n {
                if op(ab, c) != op(op(a, c), op(b, c)) {
                    return Err(Error::Axiom(AxiomViolation::SelfDistributivity { a, b, c }));
                }
            }
        }
    }
    Ok(QuandleTable::from_valid(n, table))
}

impl QuandleTable {
    /// Builds the dual table; `table` must already satisfy the axioms.
    pub(crate) fn from_valid(n: usize, table: Vec<u32>) -> Self {
        let mut dual = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                let v = table[a * n + b] as usize;
                dual[v * n + b] = a as u32;
            }
        }
        QuandleTable { n, table, dual }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// `a * b`.
    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    /// `a ∗̄ b`, the inverse right translation.
    #[inline]
    pub fn dual_op(&self, a: usize, b: usize) -> usize {
        self.dual[a * self.n + b] as usize
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|a| self.row(a)).collect()
    }

    pub fn row(&self, a: usize) -> Vec<usize> {
        (0..self.n).map(|b| self.op(a, b)).collect()
    }

    /// The right translation `R_b` as a permutation.
    pub fn column(&self, b: usize) -> Vec<usize> {
        (0..self.n).map(|a| self.op(a, b)).collect()
    }

    /// Table text: the order on the first line, then one row per line.
    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for a in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|b| self.op(a, b).to_string()).collect();
            let _ = writeln!(s, "{}", row.join(" "));
        }
        s
    }

    /// Parses the table text format. With `transposed`, row `i` of the file is
    /// read as column `i`, for sources that list left-distributive matrices.
    pub fn parse_text(text: &str, transposed: bool) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (line_no, header) = lines.next().ok_or_else(|| Error::parse("empty table file"))?;
        let n: usize = header.parse().map_err(|_| Error::Parse {
            line: Some(line_no),
            msg: format!("expected the table order, found {header:?}"),
        })?;
        let mut rows = Vec::with_capacity(n);
        for (line_no, line) in lines {
            let row = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>().map_err(|_| Error::Parse {
                        line: Some(line_no),
                        msg: format!("bad table entry {tok:?}"),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        if rows.len() != n {
            return Err(Error::MalformedTable(format!(
                "expected {n} rows, found {}",
                rows.len()
            )));
        }
        if transposed && rows.iter().all(|r| r.len() == n) {
            rows = (0..n).map(|a| (0..n).map(|b| rows[b][a]).collect()).collect();
        }
        check_axioms(&rows)
    }

    pub fn read_file(path: impl AsRef<Path>, transposed: bool) -> Result<Self> {
        let text = std::fs::read_to_string(path.as_ref())
            .map_err(|e| Error::Io(format!("{}: {e}", path.as_ref().display())))?;
        Self::parse_text(&text, transposed)
    }

    /// Same set and underlying permutation structure with elements renamed by
    /// `perm` (`perm[old] = new`).
    pub fn relabel(&self, perm: &[usize]) -> QuandleTable {
        let n = self.n;
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                table[perm[a] * n + perm[b]] = perm[self.op(a, b)] as u32;
            }
        }
        QuandleTable::from_valid(n, table)
    }

    pub fn is_homomorphism_to(&self, target: &QuandleTable, map: &[usize]) -> bool {
        map.len() == self.n
            && map.iter().all(|&y| y < target.n)
            && (0..self.n).all(|a| (0..self.n).all(|b| map[self.op(a, b)] == target.op(map[a], map[b])))
    }
}

impl IsoWitness {
    pub fn validate(&self, t: &QuandleTable, u: &QuandleTable) -> bool {
        let mut hit = vec![false; u.order()];
        t.order() == u.order()
            && self
                .bijection
                .iter()
                .all(|&y| y < u.order() && !std::mem::replace(&mut hit[y], true))
            && t.is_homomorphism_to(u, &self.bijection)
    }
}

/// Sorted cycle lengths of a permutation.
pub(crate) fn cycle_type(perm: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; perm.len()];
    let mut lengths = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = perm[x];
            len += 1;
        }
        lengths.push(len);
    }
    lengths.sort_unstable();
    lengths
}

pub fn cycle_profile(t: &QuandleTable) -> CycleProfile {
    CycleProfile {
        columns: (0..t.order()).map(|b| cycle_type(&t.column(b))).collect(),
    }
}

impl CycleProfile {
    /// Cycle lengths greater than one in column `b`.
    pub fn nontrivial(&self, b: usize) -> Vec<usize> {
        self.columns[b].iter().copied().filter(|&l| l > 1).collect()
    }

    /// Multiset of column cycle types.
    pub fn aggregate(&self) -> Vec<CycleClass> {
        let mut counts: BTreeMap<&Vec<usize>, usize> = BTreeMap::new();
        for c in &self.columns {
            *counts.entry(c).or_default() += 1;
        }
        counts
            .into_iter()
            .map(|(lengths, columns)| CycleClass {
                lengths: lengths.clone(),
                columns,
            })
            .collect()
    }
}

/// Orbit of `start` under all right translations and their inverses.
pub fn orbit(t: &QuandleTable, start: usize) -> Vec<usize> {
    let n = t.order();
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for b in 0..n {
            for y in [t.op(x, b), t.dual_op(x, b)] {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    (0..n).filter(|&x| seen[x]).collect()
}

/// Orbit decomposition of the inner group action, each orbit sorted, listed by
/// least element.
pub fn orbits(t: &QuandleTable) -> Vec<Vec<usize>> {
    let mut done = vec![false; t.order()];
    let mut out = Vec::new();
    for x in 0..t.order() {
        if !done[x] {
            let o = orbit(t, x);
            for &y in &o {
                done[y] = true;
            }
            out.push(o);
        }
    }
    out
}

pub fn is_connected(t: &QuandleTable) -> bool {
    orbit(t, 0).len() == t.order()
}

pub fn is_latin(t: &QuandleTable) -> bool {
    let n = t.order();
    (0..n).all(|a| {
        let mut seen = vec![false; n];
        (0..n).all(|b| !std::mem::replace(&mut seen[t.op(a, b)], true))
    })
}

pub fn is_faithful(t: &QuandleTable) -> bool {
    let mut cols: Vec<Vec<usize>> = (0..t.order()).map(|b| t.column(b)).collect();
    cols.sort();
    cols.windows(2).all(|w| w[0] != w[1])
}

pub fn is_medial(t: &QuandleTable) -> bool {
    let n = t.order();
    (0..n).all(|a| {
        (0..n).all(|b| {
            (0..n).all(|c| {
                let (ab, ac) = (t.op(a, b), t.op(a, c));
                (0..n).all(|d| t.op(ab, t.op(c, d)) == t.op(ac, t.op(b, d)))
            })
        })
    })
}

pub fn is_left_distributive(t: &QuandleTable) -> bool {
    let n = t.order();
    (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| t.op(a, t.op(b, c)) == t.op(t.op(a, b), t.op(a, c)))))
}

pub fn is_kei(t: &QuandleTable) -> bool {
    let n = t.order();
    (0..n).all(|a| (0..n).all(|b| t.op(t.op(a, b), b) == a))
}

/// Whether three distinct elements form a copy of `R_3` (each product of two
/// distinct elements is the third).
pub fn has_r3_subquandle(t: &QuandleTable) -> bool {
    let n = t.order();
    (0..n).any(|a| {
        (a + 1..n).any(|b| {
            let c = t.op(a, b);
            c != a
                && c != b
                && t.op(b, a) == c
                && t.op(a, c) == b
                && t.op(c, a) == b
                && t.op(b, c) == a
                && t.op(c, b) == a
        })
    })
}

pub fn dual(t: &QuandleTable) -> QuandleTable {
    let n = t.order();
    QuandleTable::from_valid(n, t.dual.clone())
}

pub fn property_report(t: &QuandleTable) -> PropertyReport {
    PropertyReport {
        connected: is_connected(t),
        latin: is_latin(t),
        faithful: is_faithful(t),
        medial: is_medial(t),
        left_distributive: is_left_distributive(t),
        kei: is_kei(t),
        self_dual: isomorphism(t, &dual(t)).is_some(),
        has_r3_subquandle: has_r3_subquandle(t),
        cycle_profile: cycle_profile(t).aggregate(),
    }
}

/// Per-element isomorphism invariant: the cycle type of the element's column
/// and the multiset of value multiplicities in its row.
fn element_invariants(t: &QuandleTable) -> Vec<(Vec<usize>, Vec<usize>)> {
    let n = t.order();
    (0..n)
        .map(|a| {
            let mut counts = vec![0usize; n];
            for b in 0..n {
                counts[t.op(a, b)] += 1;
            }
            let mut mult: Vec<usize> = counts.into_iter().filter(|&c| c > 0).collect();
            mult.sort_unstable();
            (cycle_type(&t.column(a)), mult)
        })
        .collect()
}

/// Shared integer ids for the element invariants of two tables.
fn invariant_keys(t: &QuandleTable, u: &QuandleTable) -> (Vec<usize>, Vec<usize>) {
    let (it, iu) = (element_invariants(t), element_invariants(u));
    let mut ids = BTreeMap::new();
    let mut key = |inv: (Vec<usize>, Vec<usize>)| {
        let next = ids.len();
        *ids.entry(inv).or_insert(next)
    };
    let kt = it.into_iter().map(&mut key).collect();
    let ku = iu.into_iter().map(&mut key).collect();
    (kt, ku)
}

struct IsoSearch<'a> {
    t: &'a QuandleTable,
    u: &'a QuandleTable,
    key_t: Vec<usize>,
    key_u: Vec<usize>,
    f: Vec<usize>,
    g: Vec<usize>,
    trail: Vec<usize>,
    queue: Vec<(usize, usize)>,
}

impl IsoSearch<'_> {
    fn assign(&mut self, x: usize, y: usize) -> bool {
        self.queue.clear();
        self.queue.push((x, y));
        while let Some((x, y)) = self.queue.pop() {
            if self.f[x] != NONE {
                if self.f[x] != y {
                    return false;
                }
                continue;
            }
            if self.g[y] != NONE || self.key_t[x] != self.key_u[y] {
                return false;
            }
            self.f[x] = y;
            self.g[y] = x;
            self.trail.push(x);
            for i in 0..self.trail.len() {
                let z = self.trail[i];
                let w = self.f[z];
                self.queue.push((self.t.op(x, z), self.u.op(y, w)));
                self.queue.push((self.t.op(z, x), self.u.op(w, y)));
                self.queue.push((self.t.dual_op(x, z), self.u.dual_op(y, w)));
                self.queue.push((self.t.dual_op(z, x), self.u.dual_op(w, y)));
            }
        }
        true
    }

    fn undo(&mut self, len: usize) {
        while self.trail.len() > len {
            let x = self.trail.pop().unwrap();
            self.g[self.f[x]] = NONE;
            self.f[x] = NONE;
        }
    }

    fn search(&mut self) -> bool {
        let Some(x) = (0..self.f.len()).find(|&x| self.f[x] == NONE) else {
            return true;
        };
        for y in 0..self.g.len() {
            if self.g[y] != NONE || self.key_t[x] != self.key_u[y] {
                continue;
            }
            let saved = self.trail.len();
            if self.assign(x, y) && self.search() {
                return true;
            }
            self.undo(saved);
        }
        false
    }
}

/// Backtracking isomorphism search.
///
/// Elements of `t` are mapped in increasing order with candidates tried in
/// increasing order, and every partial map is closed under `*` and `∗̄`, so the
/// witness returned is the lexicographically least isomorphism.
pub fn isomorphism(t: &QuandleTable, u: &QuandleTable) -> Option<IsoWitness> {
    if t.order() != u.order() {
        return None;
    }
    let (key_t, key_u) = invariant_keys(t, u);
    let (mut st, mut su) = (key_t.clone(), key_u.clone());
    st.sort_unstable();
    su.sort_unstable();
    if st != su {
        return None;
    }
    let n = t.order();
    let mut search = IsoSearch {
        t,
        u,
        key_t,
        key_u,
        f: vec![NONE; n],
        g: vec![NONE; n],
        trail: Vec::with_capacity(n),
        queue: Vec::new(),
    };
    search.search().then_some(IsoWitness { bijection: search.f })
}

pub fn is_good_involution(t: &QuandleTable, rho: &[usize]) -> bool {
    let n = t.order();
    rho.len() == n
        && rho.iter().all(|&y| y < n)
        && (0..n).all(|x| rho[rho[x]] == x)
        && (0..n).all(|x| (0..n).all(|y| t.op(x, rho[y]) == t.dual_op(x, y) && rho[t.op(x, y)] == t.op(rho[x], y)))
}

/// All good involutions, in lexicographic order.
///
/// `ρ(y)` is restricted to elements whose column is the inverse of column `y`,
/// then each choice is propagated through `ρ(x*y) = ρ(x)*y`,
/// `ρ(x ∗̄ y) = ρ(x) ∗̄ y` and `ρ(ρ(x)) = x`, so one choice fixes `ρ` on a whole
/// orbit.
pub fn good_involutions(t: &QuandleTable, limits: &Limits) -> Result<Vec<Vec<usize>>> {
    let n = t.order();
    if n > limits.max_involution_order {
        return Err(Error::limit(
            format!("good-involution search on a quandle of order {n}"),
            limits.max_involution_order as u64,
        ));
    }
    let columns: Vec<Vec<usize>> = (0..n).map(|b| t.column(b)).collect();
    let inverse_columns: Vec<Vec<usize>> = (0..n).map(|b| (0..n).map(|a| t.dual_op(a, b)).collect()).collect();
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|y| (0..n).filter(|&z| columns[z] == inverse_columns[y]).collect())
        .collect();
    let mut allowed = vec![vec![false; n]; n];
    for (y, cands) in candidates.iter().enumerate() {
        for &z in cands {
            allowed[y][z] = true;
        }
    }

    struct State<'a> {
        t: &'a QuandleTable,
        allowed: &'a [Vec<bool>],
        rho: Vec<usize>,
        trail: Vec<usize>,
    }

    impl State<'_> {
        fn assign(&mut self, x: usize, v: usize) -> bool {
            let n = self.rho.len();
            let mut queue = vec![(x, v)];
            while let Some((x, v)) = queue.pop() {
                if self.rho[x] != NONE {
                    if self.rho[x] != v {
                        return false;
                    }
                    continue;
                }
                if !self.allowed[x][v] {
                    return false;
                }
                self.rho[x] = v;
                self.trail.push(x);
                queue.push((v, x));
                for y in 0..n {
                    queue.push((self.t.op(x, y), self.t.op(v, y)));
                    queue.push((self.t.dual_op(x, y), self.t.dual_op(v, y)));
                }
            }
            true
        }

        fn undo(&mut self, len: usize) {
            while self.trail.len() > len {
                let x = self.trail.pop().unwrap();
                self.rho[x] = NONE;
            }
        }
    }

    fn go(state: &mut State<'_>, candidates: &[Vec<usize>], out: &mut Vec<Vec<usize>>) {
        let Some(x) = (0..state.rho.len()).find(|&x| state.rho[x] == NONE) else {
            if is_good_involution(state.t, &state.rho) {
                out.push(state.rho.clone());
            }
            return;
        };
        for &v in &candidates[x] {
            let saved = state.trail.len();
            if state.assign(x, v) {
                go(state, candidates, out);
            }
            state.undo(saved);
        }
    }

    let mut state = State {
        t,
        allowed: &allowed,
        rho: vec![NONE; n],
        trail: Vec::new(),
    };
    let mut out = Vec::new();
    go(&mut state, &candidates, &mut out);
    Ok(out)
}

/// Smallest subquandle containing `generators`.
pub fn subquandle_generated(t: &QuandleTable, generators: &[usize]) -> Result<Vec<usize>> {
    if generators.is_empty() {
        return Err(Error::domain("generating set must be non-empty"));
    }
    if let Some(&g) = generators.iter().find(|&&g| g >= t.order()) {
        return Err(Error::domain(format!(
            "element {g} is not in a quandle of order {}",
            t.order()
        )));
    }
    let mut inside = vec![false; t.order()];
    let mut members: Vec<usize> = Vec::new();
    for &g in generators {
        if !std::mem::replace(&mut inside[g], true) {
            members.push(g);
        }
    }
    let mut i = 0;
    while i < members.len() {
        let x = members[i];
        for j in 0..=i {
            let y = members[j];
            for z in [t.op(x, y), t.op(y, x), t.dual_op(x, y), t.dual_op(y, x)] {
                if !std::mem::replace(&mut inside[z], true) {
                    members.push(z);
                }
            }
        }
        i += 1;
    }
    members.sort_unstable();
    Ok(members)
}

/// The sub-table on a subset closed under `*`, relabelled by position.
pub fn restrict(t: &QuandleTable, subset: &[usize]) -> Result<QuandleTable> {
    let mut pos = vec![NONE; t.order()];
    for (i, &x) in subset.iter().enumerate() {
        pos[x] = i;
    }
    let rows = subset
        .iter()
        .map(|&a| {
            subset
                .iter()
                .map(|&b| match pos[t.op(a, b)] {
                    NONE => Err(Error::domain("subset is not closed under the operation")),
                    p => Ok(p),
                })
                .collect()
        })
        .collect::<Result<Vec<Vec<usize>>>>()?;
    check_axioms(&rows)
}

pub fn trivial(n: usize) -> Result<QuandleTable> {
    if n == 0 {
        return Err(Error::domain("a quandle has at least one element"));
    }
    let table = (0..n).flat_map(|a| std::iter::repeat_n(a as u32, n)).collect();
    Ok(QuandleTable::from_valid(n, table))
}

/// `R_n`: `a * b = 2b - a mod n`.
pub fn dihedral(n: usize) -> Result<QuandleTable> {
    if n == 0 {
        return Err(Error::domain("dihedral quandle of order 0"));
    }
    let table = (0..n)
        .flat_map(|a| (0..n).map(move |b| ((2 * b + n - a) % n) as u32))
        .collect();
    Ok(QuandleTable::from_valid(n, table))
}

/// Alexander quandle `a * b = T(a) + (1 - T)(b)`, elements indexed by
/// lexicographic rank in `group`.
pub fn alexander(group: &InvariantFactors, aut: &Automorphism) -> Result<QuandleTable> {
    if aut.generator_images.len() != group.rank() {
        return Err(Error::domain("automorphism must give one image per generator"));
    }
    for (img, &n) in aut.generator_images.iter().zip(group.factors()) {
        group.validate(img)?;
        if n % group.element_order(img)? != 0 {
            return Err(Error::domain(format!(
                "{img} cannot be the image of a generator of order {n}"
            )));
        }
    }
    let values = aut.value_table(group);
    let mut hit = vec![false; values.len()];
    if values.iter().any(|&v| std::mem::replace(&mut hit[v], true)) {
        return Err(Error::domain("map is not bijective"));
    }
    let arith = GroupArith::new(group);
    Ok(alexander_from_values(&arith, &values))
}

fn alexander_from_values(arith: &GroupArith, values: &[usize]) -> QuandleTable {
    let n = arith.order;
    let neg: Vec<usize> = (0..n)
        .map(|x| (0..n).find(|&y| arith.add(x, y) == 0).unwrap())
        .collect();
    let mut table = vec![0u32; n * n];
    for a in 0..n {
        for b in 0..n {
            // T(a) + b - T(b)
            table[a * n + b] = arith.add(arith.add(values[a], b), neg[values[b]]) as u32;
        }
    }
    QuandleTable::from_valid(n, table)
}

/// Componentwise product; `(i, j)` is indexed `i * |U| + j`.
pub fn product(t: &QuandleTable, u: &QuandleTable) -> QuandleTable {
    let (n, m) = (t.order(), u.order());
    let size = n * m;
    let mut table = vec![0u32; size * size];
    for a in 0..size {
        for b in 0..size {
            let (a1, a2, b1, b2) = (a / m, a % m, b / m, b % m);
            table[a * size + b] = (t.op(a1, b1) * m + u.op(a2, b2)) as u32;
        }
    }
    QuandleTable::from_valid(size, table)
}

/// Searches every Alexander quandle on every abelian group of the table's
/// order for one isomorphic to `t`.
pub fn is_alexander_small(t: &QuandleTable, limits: &Limits) -> Result<Option<AlexanderWitness>> {
    let n = t.order();
    if n > limits.max_alexander_order {
        return Err(Error::limit(
            format!("Alexander search on a quandle of order {n}"),
            limits.max_alexander_order as u64,
        ));
    }
    // In an Alexander quandle R_0 = T, so T's cycle type must match column 0.
    let target_type = cycle_type(&t.column(0));
    let mut values = vec![0usize; n];
    for group in abelian::abelian_groups_of_order(n as i64)? {
        let mut found = None;
        abelian::for_each_automorphism(&group, limits, |arith, images| {
            arith.expand(images, &mut values);
            if cycle_type(&values) != target_type {
                return ControlFlow::Continue(());
            }
            let candidate = alexander_from_values(arith, &values);
            match isomorphism(&candidate, t) {
                Some(iso) => {
                    found = Some(AlexanderWitness {
                        group: group.clone(),
                        automorphism: Automorphism {
                            generator_images: images.iter().map(|&r| group.element_at(r)).collect(),
                        },
                        iso,
                    });
                    ControlFlow::Break(())
                }
                None => ControlFlow::Continue(()),
            }
        })?;
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

/// Canonical relabelling: the lexicographically least table among all
/// labellings produced by closing a sequence of chosen seeds under `*` in a
/// fixed pair order. Two tables get equal keys iff they are isomorphic.
///
/// The cost grows with the number of seed sequences, which is small for
/// quandles generated by few elements and factorial for trivial quandles.
pub fn canonical_form(t: &QuandleTable) -> (Vec<u32>, Vec<usize>) {
    let n = t.order();

    fn close(t: &QuandleTable, order: &mut Vec<usize>, pos: &mut [usize]) {
        let mut m = 0;
        while m < order.len() {
            for i in 0..=m {
                for (a, b) in [(i, m), (m, i)] {
                    let p = t.op(order[a], order[b]);
                    if pos[p] == NONE {
                        pos[p] = order.len();
                        order.push(p);
                    }
                }
            }
            m += 1;
        }
    }

    fn go(t: &QuandleTable, order: &mut Vec<usize>, pos: &mut Vec<usize>, best: &mut Option<(Vec<u32>, Vec<usize>)>) {
        let n = t.order();
        let saved = order.len();
        close(t, order, pos);
        if order.len() == n {
            let mut table = vec![0u32; n * n];
            for i in 0..n {
                for j in 0..n {
                    table[i * n + j] = pos[t.op(order[i], order[j])] as u32;
                }
            }
            if best.as_ref().is_none_or(|(b, _)| table < *b) {
                *best = Some((table, pos.clone()));
            }
        } else {
            for x in 0..n {
                if pos[x] == NONE {
                    pos[x] = order.len();
                    order.push(x);
                    go(t, order, pos, best);
                    let x = order.pop().unwrap();
                    pos[x] = NONE;
                }
            }
        }
        for &x in &order[saved..] {
            pos[x] = NONE;
        }
        order.truncate(saved);
    }

    let mut best = None;
    go(t, &mut Vec::with_capacity(n), &mut vec![NONE; n], &mut best);
    best.expect("non-empty quandle has a labelling")
}

/// Byte encoding of [`canonical_form`]: the order then every entry, both as
/// big-endian `u16`.
pub fn canonical_key(t: &QuandleTable) -> Vec<u8> {
    let (table, _) = canonical_form(t);
    std::iter::once(t.order() as u32)
        .chain(table)
        .flat_map(|v| (v as u16).to_be_bytes())
        .collect()
}
