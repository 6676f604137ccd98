//! Knots as braid closures: coloring counts by finite quandles and
//! determinants.
//!
//! Letter `i > 0` is `σ_i`, acting on colors at positions `i, i+1` (1-based)
//! by `(a, b) -> (b, a * b)`; letter `-i` is `σ_i⁻¹`, acting by
//! `(a, b) -> (b ∗̄ a, a)`. A coloring of the closure is a tuple fixed by the
//! whole word.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::quandle::QuandleTable;
use crate::{linalg, Error, Limits, Result};

/// The shipped dataset: prime knots through eight crossings.
const BUILTIN_DATASET: &str = include_str!("../data/knots_8.txt");

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Crossing {
    pub over: usize,
    pub under_in: usize,
    pub under_out: usize,
    /// `+1` for `σ_i`, `-1` for `σ_i⁻¹`.
    pub sign: i8,
}

/// Arcs and crossings of a braid closure. At a positive crossing
/// `under_out = under_in * over`, at a negative one
/// `under_out = under_in ∗̄ over`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotDiagram {
    pub arcs: usize,
    pub crossings: Vec<Crossing>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotRecord {
    pub name: String,
    pub braid: BraidWord,
    pub determinant: u64,
}

impl BraidWord {
    /// Validates letters and rejects closures with more than one component.
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        let word = BraidWord::link(strands, letters)?;
        match word.components() {
            1 => Ok(word),
            components => Err(Error::LinkNotKnot { components }),
        }
    }

    /// Like [`BraidWord::new`] without the single-component check.
    pub fn link(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::parse("a braid needs at least one strand"));
        }
        if let Some(&w) = letters
            .iter()
            .find(|&&w| w == 0 || w.unsigned_abs() as usize >= strands)
        {
            return Err(Error::parse(format!(
                "letter {w} is not a generator of the {strands}-strand braid group"
            )));
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    /// Number of components of the closure: cycles of the underlying
    /// permutation.
    pub fn components(&self) -> usize {
        let mut perm: Vec<usize> = (0..self.strands).collect();
        for &w in &self.letters {
            let i = w.unsigned_abs() as usize - 1;
            perm.swap(i, i + 1);
        }
        crate::quandle::cycle_type(&perm).len()
    }

    /// Conjugate by moving the first `k` letters to the end.
    pub fn rotate(&self, k: usize) -> BraidWord {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let k = k % letters.len();
            letters.rotate_left(k);
        }
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    /// Markov stabilization: one more strand and a final `σ_s^{±1}`.
    pub fn stabilize(&self, positive: bool) -> BraidWord {
        let s = self.strands as i32;
        let mut letters = self.letters.clone();
        letters.push(if positive { s } else { -s });
        BraidWord {
            strands: self.strands + 1,
            letters,
        }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters: Vec<String> = self.letters.iter().map(i32::to_string).collect();
        write!(f, "{}: {}", self.strands, letters.join(" "))
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    /// `"s: w1 w2 ..."`.
    fn from_str(s: &str) -> Result<Self> {
        let (strands, letters) = s
            .split_once(':')
            .ok_or_else(|| Error::parse(format!("braid {s:?} must look like \"2: 1 1 1\"")))?;
        let strands = strands
            .trim()
            .parse::<usize>()
            .map_err(|_| Error::parse(format!("bad strand count {:?}", strands.trim())))?;
        let letters = letters
            .split([' ', ',', '\t'])
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<i32>()
                    .map_err(|_| Error::parse(format!("bad braid letter {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        BraidWord::new(strands, letters)
    }
}

impl KnotDiagram {
    pub fn from_braid(braid: &BraidWord) -> KnotDiagram {
        let n = braid.strands;
        let mut position: Vec<usize> = (0..n).collect();
        let mut next = n;
        let mut raw = Vec::with_capacity(braid.letters.len());
        for &w in &braid.letters {
            let i = w.unsigned_abs() as usize - 1;
            let new = next;
            next += 1;
            if w > 0 {
                raw.push(Crossing {
                    over: position[i + 1],
                    under_in: position[i],
                    under_out: new,
                    sign: 1,
                });
                position[i] = position[i + 1];
                position[i + 1] = new;
            } else {
                raw.push(Crossing {
                    over: position[i],
                    under_in: position[i + 1],
                    under_out: new,
                    sign: -1,
                });
                position[i + 1] = position[i];
                position[i] = new;
            }
        }
        // the closure joins each bottom end to the top of its position
        let mut parent: Vec<usize> = (0..next).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (top, &bottom) in position.iter().enumerate() {
            let (a, b) = (find(&mut parent, top), find(&mut parent, bottom));
            parent[a.max(b)] = a.min(b);
        }
        let mut label = vec![usize::MAX; next];
        let mut arcs = 0;
        for x in 0..next {
            let r = find(&mut parent, x);
            if label[r] == usize::MAX {
                label[r] = arcs;
                arcs += 1;
            }
        }
        let mut relabel = |x: usize| label[find(&mut parent, x)];
        let crossings = raw
            .iter()
            .map(|c| Crossing {
                over: relabel(c.over),
                under_in: relabel(c.under_in),
                under_out: relabel(c.under_out),
                sign: c.sign,
            })
            .collect();
        KnotDiagram { arcs, crossings }
    }

    /// One row per crossing: `2` on the over arc, `-1` on each under arc.
    pub fn coloring_matrix(&self) -> Vec<Vec<i64>> {
        self.crossings
            .iter()
            .map(|c| {
                let mut row = vec![0i64; self.arcs];
                row[c.over] += 2;
                row[c.under_in] -= 1;
                row[c.under_out] -= 1;
                row
            })
            .collect()
    }
}

/// `|det|` of the coloring matrix with its last row and column deleted; 1 for
/// a diagram without crossings.
pub fn determinant(braid: &BraidWord) -> Result<u64> {
    if braid.components() != 1 {
        return Err(Error::LinkNotKnot {
            components: braid.components(),
        });
    }
    let diagram = KnotDiagram::from_braid(braid);
    if diagram.crossings.is_empty() {
        return Ok(1);
    }
    if diagram.arcs != diagram.crossings.len() {
        return Err(Error::DataIntegrity(format!(
            "closure of {braid} has {} arcs and {} crossings",
            diagram.arcs,
            diagram.crossings.len()
        )));
    }
    let k = diagram.arcs - 1;
    let minor: Vec<Vec<i64>> = diagram.coloring_matrix()[..k].iter().map(|r| r[..k].to_vec()).collect();
    Ok(linalg::determinant(&minor).unsigned_abs() as u64)
}

fn apply_word(braid: &BraidWord, q: &QuandleTable, colors: &mut [usize]) {
    for &w in &braid.letters {
        let i = w.unsigned_abs() as usize - 1;
        let (a, b) = (colors[i], colors[i + 1]);
        if w > 0 {
            colors[i] = b;
            colors[i + 1] = q.op(a, b);
        } else {
            colors[i] = q.dual_op(b, a);
            colors[i + 1] = a;
        }
    }
}

/// Colorings of the closure by `q`.
///
/// Tuples in `Q^strands` fixed by the braid are counted directly when there are
/// at most `limits.max_coloring_tuples` of them; larger spaces fall back to
/// [`count_colorings_wirtinger`].
pub fn count_colorings(braid: &BraidWord, q: &QuandleTable, limits: &Limits) -> Result<u64> {
    let n = q.order();
    let tuples = (n as u128).checked_pow(braid.strands as u32).unwrap_or(u128::MAX);
    if tuples > limits.max_coloring_tuples as u128 {
        return count_colorings_wirtinger(&KnotDiagram::from_braid(braid), q, limits).map_err(|e| match e {
            Error::ResourceLimit { what, bound } => Error::ResourceLimit {
                what: format!(
                    "{what}; {}^{} tuples exceed the tuple budget, try a braid with fewer strands",
                    n, braid.strands
                ),
                bound,
            },
            other => other,
        });
    }
    let s = braid.strands;
    let count = (0..n)
        .into_par_iter()
        .map(|first| {
            let mut start = vec![0usize; s];
            start[0] = first;
            let mut work = vec![0usize; s];
            let mut count = 0u64;
            loop {
                work.copy_from_slice(&start);
                apply_word(braid, q, &mut work);
                if work == start {
                    count += 1;
                }
                // odometer over positions 1..s
                let mut i = s;
                loop {
                    i -= 1;
                    if i == 0 {
                        return count;
                    }
                    start[i] += 1;
                    if start[i] < n {
                        break;
                    }
                    start[i] = 0;
                }
            }
        })
        .sum();
    Ok(count)
}

/// Colorings counted on the diagram: arc colors assigned by backtracking, with
/// each crossing propagating a third color once two are known.
type BinOp = fn(&QuandleTable, usize, usize) -> usize;

pub fn count_colorings_wirtinger(diagram: &KnotDiagram, q: &QuandleTable, limits: &Limits) -> Result<u64> {
    const NONE: usize = usize::MAX;
    let arcs = diagram.arcs;
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); arcs];
    for (k, c) in diagram.crossings.iter().enumerate() {
        for a in [c.over, c.under_in, c.under_out] {
            if !incident[a].contains(&k) {
                incident[a].push(k);
            }
        }
    }

    struct Search<'a> {
        q: &'a QuandleTable,
        diagram: &'a KnotDiagram,
        incident: Vec<Vec<usize>>,
        color: Vec<usize>,
        trail: Vec<usize>,
        nodes: u64,
        budget: u64,
    }

    impl Search<'_> {
        fn set(&mut self, arc: usize, v: usize) -> bool {
            let mut queue = vec![(arc, v)];
            while let Some((arc, v)) = queue.pop() {
                if self.color[arc] != NONE {
                    if self.color[arc] != v {
                        return false;
                    }
                    continue;
                }
                self.color[arc] = v;
                self.trail.push(arc);
                for &k in &self.incident[arc] {
                    let c = self.diagram.crossings[k];
                    let (o, i, u) = (self.color[c.over], self.color[c.under_in], self.color[c.under_out]);
                    if o == NONE {
                        continue;
                    }
                    let (fwd, back): (BinOp, BinOp) = if c.sign > 0 {
                        (QuandleTable::op, QuandleTable::dual_op)
                    } else {
                        (QuandleTable::dual_op, QuandleTable::op)
                    };
                    match (i, u) {
                        (NONE, NONE) => {}
                        (i, NONE) => queue.push((c.under_out, fwd(self.q, i, o))),
                        (NONE, u) => queue.push((c.under_in, back(self.q, u, o))),
                        (i, u) => {
                            if fwd(self.q, i, o) != u {
                                return false;
                            }
                        }
                    }
                }
            }
            true
        }

        fn undo(&mut self, len: usize) {
            while self.trail.len() > len {
                let a = self.trail.pop().unwrap();
                self.color[a] = NONE;
            }
        }

        fn count(&mut self) -> Result<u64> {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::limit("arc-backtracking coloring search", self.budget));
            }
            let Some(arc) = (0..self.color.len()).find(|&a| self.color[a] == NONE) else {
                return Ok(1);
            };
            let mut total = 0;
            for v in 0..self.q.order() {
                let saved = self.trail.len();
                if self.set(arc, v) {
                    total += self.count()?;
                }
                self.undo(saved);
            }
            Ok(total)
        }
    }

    let mut search = Search {
        q,
        diagram,
        incident,
        color: vec![NONE; arcs],
        trail: Vec::new(),
        nodes: 0,
        budget: limits.max_search_nodes,
    };
    search.count()
}

/// Whether some coloring is not constant, i.e. the count exceeds `|Q|`.
pub fn has_nontrivial_coloring(braid: &BraidWord, q: &QuandleTable, limits: &Limits) -> Result<bool> {
    Ok(count_colorings(braid, q, limits)? > q.order() as u64)
}

/// Parses the knot table format: `name; strands; letters[; determinant]` per
/// line, `#` comments. Each determinant is recomputed and a cached value that
/// disagrees is a data-integrity error.
pub fn parse_knot_table(text: &str) -> Result<Vec<KnotRecord>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let at_line = |e: Error| match e {
            Error::Parse { msg, .. } => Error::Parse {
                line: Some(line_no),
                msg,
            },
            other => other,
        };
        let fields: Vec<&str> = line.split(';').map(str::trim).collect();
        if !(3..=4).contains(&fields.len()) || fields[0].is_empty() {
            return Err(Error::Parse {
                line: Some(line_no),
                msg: format!("expected \"name; strands; letters[; determinant]\", found {line:?}"),
            });
        }
        let braid: BraidWord = format!("{}: {}", fields[1], fields[2]).parse().map_err(at_line)?;
        let determinant = determinant(&braid).map_err(at_line)?;
        if let Some(cached) = fields.get(3) {
            let cached: u64 = cached.parse().map_err(|_| Error::Parse {
                line: Some(line_no),
                msg: format!("bad determinant {cached:?}"),
            })?;
            if cached != determinant {
                return Err(Error::DataIntegrity(format!(
                    "knot {} lists determinant {cached} but its braid gives {determinant}",
                    fields[0]
                )));
            }
        }
        out.push(KnotRecord {
            name: fields[0].to_string(),
            braid,
            determinant,
        });
    }
    Ok(out)
}

pub fn load_knot_table(path: impl AsRef<Path>) -> Result<Vec<KnotRecord>> {
    let text =
        std::fs::read_to_string(path.as_ref()).map_err(|e| Error::Io(format!("{}: {e}", path.as_ref().display())))?;
    parse_knot_table(&text)
}

/// Prime knots through eight crossings.
pub fn builtin_dataset() -> Vec<KnotRecord> {
    parse_knot_table(BUILTIN_DATASET).expect("shipped dataset is consistent")
}

pub fn find_knot<'a>(knots: &'a [KnotRecord], name: &str) -> Option<&'a KnotRecord> {
    knots.iter().find(|k| k.name == name)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringProfile {
    /// `counts[k][j]`: colorings of knot `k` by quandle `j`.
    pub counts: Vec<Vec<u64>>,
    /// Quandle indices grouped by equal count columns.
    pub count_classes: Vec<Vec<usize>>,
    /// Quandle indices grouped by which knots they color nontrivially.
    pub nontrivial_classes: Vec<Vec<usize>>,
}

fn group_columns<T: PartialEq>(columns: &[Vec<T>]) -> Vec<Vec<usize>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (j, col) in columns.iter().enumerate() {
        match classes.iter_mut().find(|c| columns[c[0]] == *col) {
            Some(c) => c.push(j),
            None => classes.push(vec![j]),
        }
    }
    classes
}

pub fn coloring_profile(knots: &[KnotRecord], quandles: &[QuandleTable], limits: &Limits) -> Result<ColoringProfile> {
    let pairs: Vec<(usize, usize)> = (0..knots.len())
        .flat_map(|k| (0..quandles.len()).map(move |j| (k, j)))
        .collect();
    let flat = pairs
        .par_iter()
        .map(|&(k, j)| count_colorings(&knots[k].braid, &quandles[j], limits))
        .collect::<Result<Vec<u64>>>()?;
    let counts: Vec<Vec<u64>> = flat.chunks(quandles.len().max(1)).map(<[u64]>::to_vec).collect();
    let counts = if quandles.is_empty() {
        vec![Vec::new(); knots.len()]
    } else {
        counts
    };
    let columns: Vec<Vec<u64>> = (0..quandles.len())
        .map(|j| counts.iter().map(|r| r[j]).collect())
        .collect();
    let nontrivial: Vec<Vec<bool>> = columns
        .iter()
        .zip(quandles)
        .map(|(col, q)| col.iter().map(|&c| c > q.order() as u64).collect())
        .collect();
    Ok(ColoringProfile {
        count_classes: group_columns(&columns),
        nontrivial_classes: group_columns(&nontrivial),
        counts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quandle::{dihedral, trivial};

    fn braid(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    #[test]
    fn parsing() {
        assert_eq!(braid("2: 1 1 1").letters(), &[1, 1, 1]);
        assert_eq!(braid("1: ").strands(), 1);
        assert_eq!(braid("2: 1 1 1").to_string(), "2: 1 1 1");
        assert!(matches!(
            "2: 1 1".parse::<BraidWord>(),
            Err(Error::LinkNotKnot { components: 2 })
        ));
        assert!(matches!("2: 1 2".parse::<BraidWord>(), Err(Error::Parse { .. })));
        assert!(matches!("2: 0".parse::<BraidWord>(), Err(Error::Parse { .. })));
        assert!("2 1 1 1".parse::<BraidWord>().is_err());
    }

    #[test]
    fn diagram_shape() {
        let d = KnotDiagram::from_braid(&braid("2: 1 1 1"));
        assert_eq!(d.arcs, 3);
        assert_eq!(d.crossings.len(), 3);
        assert_eq!(KnotDiagram::from_braid(&braid("1: ")).arcs, 1);
    }

    #[test]
    fn determinants() {
        assert_eq!(determinant(&braid("1: ")).unwrap(), 1);
        assert_eq!(determinant(&braid("2: 1")).unwrap(), 1);
        assert_eq!(determinant(&braid("2: 1 1 1")).unwrap(), 3);
        assert_eq!(determinant(&braid("2: -1 -1 -1")).unwrap(), 3);
        assert_eq!(determinant(&braid("3: 1 -2 1 -2")).unwrap(), 5);
        assert_eq!(determinant(&braid("3: 1 1 1 2 -1 2")).unwrap(), 7);
    }

    #[test]
    fn basic_counts() {
        let lim = Limits::default();
        let r3 = dihedral(3).unwrap();
        assert_eq!(count_colorings(&braid("2: 1 1 1"), &r3, &lim).unwrap(), 9);
        assert_eq!(count_colorings(&braid("1: "), &r3, &lim).unwrap(), 3);
        assert_eq!(
            count_colorings(&braid("3: 1 -2 1 -2"), &dihedral(5).unwrap(), &lim).unwrap(),
            25
        );
        assert_eq!(
            count_colorings(&braid("3: 1 -2 1 -2"), &trivial(4).unwrap(), &lim).unwrap(),
            4
        );
        assert!(has_nontrivial_coloring(&braid("2: 1 1 1"), &r3, &lim).unwrap());
    }

    #[test]
    fn tuple_and_arc_counts_agree() {
        let lim = Limits::default();
        for b in [
            "2: 1 1 1",
            "3: 1 -2 1 -2",
            "3: 1 1 1 2 -1 2",
            "4: 1 1 2 -1 -3 2 -3",
            "1: ",
        ] {
            let b = braid(b);
            for n in 1..8 {
                let q = dihedral(n).unwrap();
                let d = KnotDiagram::from_braid(&b);
                assert_eq!(
                    count_colorings(&b, &q, &lim).unwrap(),
                    count_colorings_wirtinger(&d, &q, &lim).unwrap()
                );
            }
        }
    }

    #[test]
    fn fallback_to_arcs_above_tuple_budget() {
        let tight = Limits {
            max_coloring_tuples: 10,
            ..Limits::default()
        };
        let b = braid("3: 1 -2 1 -2");
        assert_eq!(count_colorings(&b, &dihedral(5).unwrap(), &tight).unwrap(), 25);
        let starved = Limits {
            max_coloring_tuples: 10,
            max_search_nodes: 3,
            ..Limits::default()
        };
        assert!(count_colorings(&b, &dihedral(5).unwrap(), &starved)
            .unwrap_err()
            .is_resource_limit());
    }

    #[test]
    fn table_parsing() {
        let k = parse_knot_table("3_1; 2; 1 1 1\n").unwrap();
        assert_eq!(k[0].determinant, 3);
        let k = parse_knot_table("# c\n\n4_1; 3; 1 -2 1 -2; 5\n").unwrap();
        assert_eq!(k[0].determinant, 5);
        assert!(matches!(
            parse_knot_table("3_1; 2; 1 1 1\nbroken line\n"),
            Err(Error::Parse { line: Some(2), .. })
        ));
        assert!(matches!(
            parse_knot_table("3_1; 2; 1 x 1\n"),
            Err(Error::Parse { line: Some(1), .. })
        ));
        assert!(matches!(
            parse_knot_table("3_1; 2; 1 1 1; 5\n"),
            Err(Error::DataIntegrity(_))
        ));
    }

    #[test]
    fn builtin_dataset_loads() {
        let knots = builtin_dataset();
        assert_eq!(knots.len(), 35);
        assert_eq!(find_knot(&knots, "8_18").unwrap().determinant, 45);
    }

    #[test]
    fn trivial_quandle_profile() {
        let knots = builtin_dataset();
        let p = coloring_profile(&knots, &[trivial(3).unwrap()], &Limits::default()).unwrap();
        assert!(p.counts.iter().all(|r| r == &vec![3]));
        assert_eq!(p.count_classes, vec![vec![0]]);
    }
}
