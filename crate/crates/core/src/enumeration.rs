//! Connected quandles of small order up to isomorphism.
//!
//! In a connected quandle every right translation is conjugate to `R_0` inside
//! the inner group, since `R_{b*c} = R_c R_b R_c⁻¹`. The search therefore
//! fixes `R_0` to a canonical permutation of each admissible cycle type and
//! assigns the remaining columns among permutations of that type, closing the
//! partial assignment under `R_{R_c(b)} = R_c R_b R_c⁻¹` and
//! `R_{R_c⁻¹(b)} = R_c⁻¹ R_b R_c`.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::abelian::partitions_desc;
use crate::quandle::{self, cycle_type, isomorphism, QuandleTable};
use crate::{Error, Limits, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusEntry {
    pub order: usize,
    pub table: QuandleTable,
    pub canonical_key: Vec<u8>,
}

/// Permutation with `0` fixed followed by the other cycles on consecutive
/// elements, shortest first.
fn canonical_permutation(lengths: &[usize]) -> Vec<usize> {
    let n: usize = lengths.iter().sum();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut start = 1;
    for &len in lengths.iter().skip(1) {
        for i in 0..len {
            perm[start + i] = start + (i + 1) % len;
        }
        start += len;
    }
    perm
}

fn all_permutations_of_type(n: usize, lengths: &[usize]) -> Vec<Vec<usize>> {
    fn go(perm: &mut Vec<usize>, used: &mut Vec<bool>, lengths: &[usize], out: &mut Vec<Vec<usize>>) {
        let n = used.len();
        if perm.len() == n {
            if cycle_type(perm) == lengths {
                out.push(perm.clone());
            }
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                perm.push(v);
                go(perm, used, lengths, out);
                perm.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::with_capacity(n), &mut vec![false; n], lengths, &mut out);
    out
}

struct ColumnSearch<'a> {
    n: usize,
    lengths: &'a [usize],
    columns: Vec<Option<Vec<usize>>>,
    inverses: Vec<Option<Vec<usize>>>,
    trail: Vec<usize>,
}

impl ColumnSearch<'_> {
    fn set(&mut self, b: usize, perm: Vec<usize>) -> bool {
        let mut queue = vec![(b, perm)];
        while let Some((b, perm)) = queue.pop() {
            if let Some(existing) = &self.columns[b] {
                if *existing != perm {
                    return false;
                }
                continue;
            }
            if perm[b] != b || cycle_type(&perm) != self.lengths {
                return false;
            }
            let mut inv = vec![0; self.n];
            for (a, &v) in perm.iter().enumerate() {
                inv[v] = a;
            }
            self.columns[b] = Some(perm);
            self.inverses[b] = Some(inv);
            self.trail.push(b);
            let rb = self.columns[b].clone().unwrap();
            let ib = self.inverses[b].clone().unwrap();
            for c in 0..self.n {
                let (Some(rc), Some(ic)) = (self.columns[c].clone(), self.inverses[c].clone()) else {
                    continue;
                };
                // R_{R_c(b)} = R_c R_b R_c^-1 and R_{R_c^-1(b)} = R_c^-1 R_b R_c
                queue.push((rc[b], (0..self.n).map(|a| rc[rb[ic[a]]]).collect()));
                queue.push((ic[b], (0..self.n).map(|a| ic[rb[rc[a]]]).collect()));
                // and symmetrically with the roles of b and c exchanged
                queue.push((rb[c], (0..self.n).map(|a| rb[rc[ib[a]]]).collect()));
                queue.push((ib[c], (0..self.n).map(|a| ib[rc[rb[a]]]).collect()));
            }
        }
        true
    }

    fn undo(&mut self, len: usize) {
        while self.trail.len() > len {
            let b = self.trail.pop().unwrap();
            self.columns[b] = None;
            self.inverses[b] = None;
        }
    }

    fn search(&mut self, candidates: &[Vec<usize>], out: &mut Vec<QuandleTable>) {
        let Some(b) = (0..self.n).find(|&b| self.columns[b].is_none()) else {
            let rows: Vec<Vec<usize>> = (0..self.n)
                .map(|a| (0..self.n).map(|b| self.columns[b].as_ref().unwrap()[a]).collect())
                .collect();
            if let Ok(t) = quandle::check_axioms(&rows) {
                if quandle::is_connected(&t) {
                    out.push(t);
                }
            }
            return;
        };
        for perm in candidates.iter().filter(|p| p[b] == b) {
            let saved = self.trail.len();
            if self.set(b, perm.clone()) {
                self.search(candidates, out);
            }
            self.undo(saved);
        }
    }
}

/// Per element: cycle type of its column and the multiset of row multiplicities.
type Fingerprint = Vec<(Vec<usize>, Vec<usize>)>;

fn fingerprint(t: &QuandleTable) -> Fingerprint {
    let mut inv: Fingerprint = (0..t.order())
        .map(|a| {
            let mut counts = vec![0usize; t.order()];
            for b in 0..t.order() {
                counts[t.op(a, b)] += 1;
            }
            let mut mult: Vec<usize> = counts.into_iter().filter(|&c| c > 0).collect();
            mult.sort_unstable();
            (cycle_type(&t.column(a)), mult)
        })
        .collect();
    inv.sort();
    inv
}

/// One representative per isomorphism class of connected quandles of order
/// `n`, sorted by canonical key.
pub fn enumerate_connected(n: usize, limits: &Limits) -> Result<Vec<CensusEntry>> {
    if n == 0 {
        return Err(Error::domain("quandle order must be at least 1"));
    }
    if n > limits.max_enumeration_order {
        return Err(Error::limit(
            format!("connected-quandle enumeration of order {n}"),
            limits.max_enumeration_order as u64,
        ));
    }
    let mut found: Vec<QuandleTable> = Vec::new();
    if n == 1 {
        found.push(quandle::trivial(1)?);
    }
    for parts in partitions_desc(n as u32) {
        let mut lengths: Vec<usize> = parts.iter().map(|&p| p as usize).collect();
        lengths.sort_unstable();
        // R_0 fixes 0, and the identity only gives the trivial quandle
        if lengths[0] != 1 || n == 1 || lengths.iter().all(|&l| l == 1) {
            continue;
        }
        let candidates = all_permutations_of_type(n, &lengths);
        let mut search = ColumnSearch {
            n,
            lengths: &lengths,
            columns: vec![None; n],
            inverses: vec![None; n],
            trail: Vec::new(),
        };
        if search.set(0, canonical_permutation(&lengths)) {
            search.search(&candidates, &mut found);
        }
    }

    let mut classes: BTreeMap<Fingerprint, Vec<QuandleTable>> = BTreeMap::new();
    for t in found {
        let reps = classes.entry(fingerprint(&t)).or_default();
        if !reps.iter().any(|r| isomorphism(r, &t).is_some()) {
            reps.push(t);
        }
    }
    let mut census: Vec<CensusEntry> = classes
        .into_values()
        .flatten()
        .map(|t| {
            let (canon, _) = quandle::canonical_form(&t);
            let table = QuandleTable::from_valid(n, canon);
            CensusEntry {
                order: n,
                canonical_key: quandle::canonical_key(&table),
                table,
            }
        })
        .collect();
    census.sort_by(|a, b| a.canonical_key.cmp(&b.canonical_key));
    Ok(census)
}

/// Index of the census entry isomorphic to `t`; `None` when `t` is not
/// connected or not in the census.
pub fn identify(t: &QuandleTable, census: &[CensusEntry]) -> Option<usize> {
    if !quandle::is_connected(t) {
        return None;
    }
    census
        .iter()
        .position(|e| e.order == t.order() && isomorphism(&e.table, t).is_some())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexEntry {
    pub order: usize,
    pub index: usize,
    pub file: String,
    pub canonical_key: String,
}

/// Writes one table file per entry and `index.json` into `dir`.
pub fn export_census(census: &[CensusEntry], dir: impl AsRef<Path>) -> Result<Vec<IndexEntry>> {
    let dir = dir.as_ref();
    std::fs::create_dir_all(dir)?;
    let mut index = Vec::new();
    let mut per_order: BTreeMap<usize, usize> = BTreeMap::new();
    for entry in census {
        let i = per_order.entry(entry.order).or_default();
        let file = format!("q{}_{}.txt", entry.order, *i);
        std::fs::write(dir.join(&file), entry.table.to_text())?;
        index.push(IndexEntry {
            order: entry.order,
            index: *i,
            file,
            canonical_key: entry.canonical_key.iter().map(|b| format!("{b:02x}")).collect(),
        });
        *i += 1;
    }
    let json = serde_json::to_string_pretty(&index).map_err(|e| Error::Io(e.to_string()))?;
    std::fs::write(dir.join("index.json"), json + "\n")?;
    Ok(index)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_permutations() {
        assert_eq!(canonical_permutation(&[1, 2]), vec![0, 2, 1]);
        assert_eq!(canonical_permutation(&[1, 1, 3]), vec![0, 1, 3, 4, 2]);
        assert_eq!(cycle_type(&canonical_permutation(&[1, 1, 2, 4])), vec![1, 1, 2, 4]);
    }

    #[test]
    fn small_counts() {
        let lim = Limits::default();
        let counts: Vec<usize> = (1..=6).map(|n| enumerate_connected(n, &lim).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 0, 1, 1, 3, 2]);
    }

    #[test]
    fn census_identifies_r3() {
        let lim = Limits::default();
        let census = enumerate_connected(3, &lim).unwrap();
        assert_eq!(identify(&quandle::dihedral(3).unwrap(), &census), Some(0));
        let six = enumerate_connected(6, &lim).unwrap();
        assert_eq!(identify(&quandle::trivial(6).unwrap(), &six), None);
    }

    #[test]
    fn bounds() {
        let lim = Limits {
            max_enumeration_order: 4,
            ..Limits::default()
        };
        assert!(enumerate_connected(5, &lim).unwrap_err().is_resource_limit());
        assert!(matches!(enumerate_connected(0, &lim), Err(Error::Domain(_))));
    }

    #[test]
    fn export_writes_index() {
        let dir = tempfile::tempdir().unwrap();
        let census = enumerate_connected(5, &Limits::default()).unwrap();
        let index = export_census(&census, dir.path()).unwrap();
        assert_eq!(index.len(), 3);
        let text = std::fs::read_to_string(dir.path().join("index.json")).unwrap();
        let back: Vec<IndexEntry> = serde_json::from_str(&text).unwrap();
        assert_eq!(back, index);
        let t = QuandleTable::read_file(dir.path().join(&index[0].file), false).unwrap();
        assert_eq!(t, census[0].table);
    }
}
