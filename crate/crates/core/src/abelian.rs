//! Finite abelian groups `Z_{n1} x ... x Z_{nk}` with `n_i | n_{i+1}`.
//!
//! Elements are residue vectors. Internally most algorithms work on the
//! lexicographic rank of an element (first coordinate most significant), which
//! is also the element order used by every "deterministic order" contract.

use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Limits, Result};

/// Canonical invariant factors of a finite abelian group.
///
/// The empty sequence is the trivial group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct InvariantFactors(Vec<u32>);

/// An element of an [`InvariantFactors`] group as a residue vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroupElement(pub Vec<u32>);

/// A group together with a distinguished element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PointedGroup {
    pub group: InvariantFactors,
    pub point: GroupElement,
}

/// A group automorphism, stored as the images of the canonical generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Automorphism {
    pub generator_images: Vec<GroupElement>,
}

impl InvariantFactors {
    pub fn new(factors: Vec<u32>) -> Result<Self> {
        if let Some(f) = factors.iter().find(|&&f| f < 2) {
            return Err(Error::domain(format!("invariant factor {f} is less than 2")));
        }
        if let Some(w) = factors.windows(2).find(|w| w[1] % w[0] != 0) {
            return Err(Error::domain(format!(
                "invariant factors must divide each other: {} does not divide {}",
                w[0], w[1]
            )));
        }
        Ok(InvariantFactors(factors))
    }

    pub fn trivial() -> Self {
        InvariantFactors(Vec::new())
    }

    /// `Z_n`; `n = 1` gives the trivial group.
    pub fn cyclic(n: u32) -> Result<Self> {
        match n {
            0 => Err(Error::domain("cyclic group of order 0")),
            1 => Ok(Self::trivial()),
            n => Ok(InvariantFactors(vec![n])),
        }
    }

    pub fn factors(&self) -> &[u32] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn order(&self) -> usize {
        self.0.iter().map(|&n| n as usize).product()
    }

    /// Least common multiple of element orders (the largest factor).
    pub fn exponent(&self) -> u32 {
        self.0.last().copied().unwrap_or(1)
    }

    pub fn is_cyclic(&self) -> bool {
        self.0.len() <= 1
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement(vec![0; self.0.len()])
    }

    /// The `i`-th canonical generator `e_i`.
    pub fn generator(&self, i: usize) -> GroupElement {
        let mut v = vec![0; self.0.len()];
        v[i] = 1;
        GroupElement(v)
    }

    pub fn validate(&self, a: &GroupElement) -> Result<()> {
        if a.0.len() != self.0.len() {
            return Err(Error::MalformedElement(format!(
                "{a} has {} coordinates, {self} needs {}",
                a.0.len(),
                self.0.len()
            )));
        }
        for (i, (&x, &n)) in a.0.iter().zip(&self.0).enumerate() {
            if x >= n {
                return Err(Error::MalformedElement(format!(
                    "coordinate {i} of {a} is out of range for Z{n}"
                )));
            }
        }
        Ok(())
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.validate(a)?;
        self.validate(b)?;
        Ok(self.add_unchecked(a, b))
    }

    pub fn neg(&self, a: &GroupElement) -> Result<GroupElement> {
        self.validate(a)?;
        Ok(self.scale_unchecked(-1, a))
    }

    pub fn sub(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.validate(a)?;
        self.validate(b)?;
        Ok(self.add_unchecked(a, &self.scale_unchecked(-1, b)))
    }

    /// `k * a` for any integer `k`; negative `k` acts through negation.
    pub fn scale(&self, k: i64, a: &GroupElement) -> Result<GroupElement> {
        self.validate(a)?;
        Ok(self.scale_unchecked(k, a))
    }

    /// Least `k >= 1` with `k * a = 0`.
    pub fn element_order(&self, a: &GroupElement) -> Result<u32> {
        self.validate(a)?;
        Ok(a.0.iter().zip(&self.0).map(|(&x, &n)| n / gcd(x, n)).fold(1, lcm))
    }

    pub(crate) fn add_unchecked(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        GroupElement(
            a.0.iter()
                .zip(&b.0)
                .zip(&self.0)
                .map(|((&x, &y), &n)| ((x as u64 + y as u64) % n as u64) as u32)
                .collect(),
        )
    }

    pub(crate) fn scale_unchecked(&self, k: i64, a: &GroupElement) -> GroupElement {
        GroupElement(
            a.0.iter()
                .zip(&self.0)
                .map(|(&x, &n)| (k * x as i64).rem_euclid(n as i64) as u32)
                .collect(),
        )
    }

    /// Lexicographic rank of an element.
    pub fn index_of(&self, a: &GroupElement) -> Result<usize> {
        self.validate(a)?;
        Ok(self.index_unchecked(a))
    }

    pub(crate) fn index_unchecked(&self, a: &GroupElement) -> usize {
        a.0.iter()
            .zip(&self.0)
            .fold(0usize, |acc, (&x, &n)| acc * n as usize + x as usize)
    }

    /// Element with the given lexicographic rank.
    pub fn element_at(&self, mut index: usize) -> GroupElement {
        let mut coords = vec![0; self.0.len()];
        for (c, &n) in coords.iter_mut().zip(&self.0).rev() {
            *c = (index % n as usize) as u32;
            index /= n as usize;
        }
        GroupElement(coords)
    }

    /// All elements in lexicographic order.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order()).map(|i| self.element_at(i))
    }

    /// `3A = 0`.
    pub fn is_killed_by_three(&self) -> bool {
        self.0.iter().all(|&n| n == 3)
    }

    /// Parses a product of cyclic groups in any order (`"Z2xZ3"`, `"Z4xZ2"`) and
    /// returns the canonical group with the isomorphism from the literal's
    /// coordinates.
    pub fn parse_product(text: &str) -> Result<CyclicProduct> {
        let text = text.trim();
        if text.eq_ignore_ascii_case("trivial") || text == "1" {
            return CyclicProduct::new(vec![]);
        }
        let moduli = text
            .split(['x', 'X', '*'])
            .map(|part| {
                let part = part.trim();
                let digits = part
                    .strip_prefix('Z')
                    .or_else(|| part.strip_prefix('z'))
                    .ok_or_else(|| Error::parse(format!("group factor {part:?} must look like Z<n>")))?;
                digits
                    .parse::<u32>()
                    .ok()
                    .filter(|&n| n >= 1)
                    .ok_or_else(|| Error::parse(format!("bad cyclic order in {part:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        // Z1 factors carry no coordinate
        CyclicProduct::new(moduli.into_iter().filter(|&m| m > 1).collect())
    }
}

impl fmt::Display for InvariantFactors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("Z1");
        }
        let parts: Vec<String> = self.0.iter().map(|n| format!("Z{n}")).collect();
        f.write_str(&parts.join("x"))
    }
}

impl FromStr for InvariantFactors {
    type Err = Error;

    /// Accepts only literals that are already canonical up to reordering into
    /// a single product; use [`InvariantFactors::parse_product`] for
    /// non-canonical products such as `Z2xZ3`.
    fn from_str(s: &str) -> Result<Self> {
        let product = InvariantFactors::parse_product(s)?;
        if !product.is_canonical() {
            return Err(Error::parse(format!(
                "{s} is not in invariant-factor form (canonical form is {})",
                product.group
            )));
        }
        Ok(product.group)
    }
}

impl TryFrom<Vec<u32>> for InvariantFactors {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        InvariantFactors::new(v)
    }
}

impl From<InvariantFactors> for Vec<u32> {
    fn from(g: InvariantFactors) -> Self {
        g.0
    }
}

impl GroupElement {
    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl FromStr for GroupElement {
    type Err = Error;

    /// `"[1,2]"`, `"[]"`, or a bare residue `"3"` for cyclic groups.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = match s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            Some(inner) => inner,
            None if !s.contains([',', '[', ']']) => s,
            None => return Err(Error::parse(format!("element literal {s:?} must look like [a,b,...]"))),
        };
        if inner.trim().is_empty() {
            return Ok(GroupElement(vec![]));
        }
        inner
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::parse(format!("bad residue {x:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(GroupElement)
    }
}

impl PointedGroup {
    pub fn new(group: InvariantFactors, point: GroupElement) -> Result<Self> {
        group.validate(&point)?;
        Ok(PointedGroup { group, point })
    }
}

impl fmt::Display for PointedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.group, self.point)
    }
}

impl Automorphism {
    pub fn identity(group: &InvariantFactors) -> Self {
        Automorphism {
            generator_images: (0..group.rank()).map(|i| group.generator(i)).collect(),
        }
    }

    pub fn apply(&self, group: &InvariantFactors, a: &GroupElement) -> Result<GroupElement> {
        group.validate(a)?;
        Ok(self.apply_unchecked(group, a))
    }

    pub(crate) fn apply_unchecked(&self, group: &InvariantFactors, a: &GroupElement) -> GroupElement {
        a.0.iter()
            .zip(&self.generator_images)
            .fold(group.zero(), |acc, (&k, img)| {
                group.add_unchecked(&acc, &group.scale_unchecked(k as i64, img))
            })
    }

    /// Full value table indexed by lexicographic rank.
    pub fn value_table(&self, group: &InvariantFactors) -> Vec<usize> {
        group
            .elements()
            .map(|a| group.index_unchecked(&self.apply_unchecked(group, &a)))
            .collect()
    }
}

/// A literal product of cyclic groups with its canonical form.
#[derive(Debug, Clone)]
pub struct CyclicProduct {
    pub moduli: Vec<u32>,
    pub group: InvariantFactors,
    // (literal coordinate, prime power, target invariant-factor coordinate)
    components: Vec<(usize, u32, usize)>,
}

impl CyclicProduct {
    fn new(moduli: Vec<u32>) -> Result<Self> {
        let mut by_prime: Vec<(u32, Vec<(u32, usize)>)> = Vec::new();
        for (j, &m) in moduli.iter().enumerate() {
            for (p, e) in factorize(m as u64) {
                let q = (p as u32).pow(e);
                match by_prime.iter_mut().find(|(pp, _)| *pp == p as u32) {
                    Some((_, v)) => v.push((q, j)),
                    None => by_prime.push((p as u32, vec![(q, j)])),
                }
            }
        }
        let k = by_prime.iter().map(|(_, v)| v.len()).max().unwrap_or(0);
        let mut factors = vec![1u32; k];
        let mut components = Vec::new();
        for (_, powers) in &mut by_prime {
            // largest prime power goes to the last invariant factor, and equal
            // powers keep their literal order so canonical literals map identically
            powers.sort_by(|a, b| b.0.cmp(&a.0).then(b.1.cmp(&a.1)));
            for (t, &(q, j)) in powers.iter().enumerate() {
                let target = k - 1 - t;
                factors[target] *= q;
                components.push((j, q, target));
            }
        }
        let group = InvariantFactors::new(factors)?;
        Ok(CyclicProduct {
            moduli,
            group,
            components,
        })
    }

    /// Whether the literal already is the canonical group (identity map).
    pub fn is_canonical(&self) -> bool {
        self.moduli.iter().copied().eq(self.group.factors().iter().copied())
    }

    /// Image of a literal element (`coords[j]` in `Z_{moduli[j]}`) in the canonical group.
    pub fn map_element(&self, literal: &GroupElement) -> Result<GroupElement> {
        if literal.0.len() != self.moduli.len() {
            return Err(Error::MalformedElement(format!(
                "{literal} has {} coordinates, the group literal has {}",
                literal.0.len(),
                self.moduli.len()
            )));
        }
        for (&x, &m) in literal.0.iter().zip(&self.moduli) {
            if x >= m {
                return Err(Error::MalformedElement(format!(
                    "{literal}: residue {x} out of range for Z{m}"
                )));
            }
        }
        let mut coords = vec![0u64; self.group.rank()];
        for &(j, q, target) in &self.components {
            let n = self.group.factors()[target] as u64;
            let q = q as u64;
            let residue = literal.0[j] as u64 % q;
            // CRT: residue * (n/q) * ((n/q)^-1 mod q)
            let cofactor = n / q;
            let inv = mod_inverse(cofactor % q, q).expect("coprime prime-power components");
            coords[target] = (coords[target] + residue * cofactor % n * inv) % n;
        }
        Ok(GroupElement(coords.into_iter().map(|c| c as u32).collect()))
    }
}

/// Rank-based arithmetic for a group small enough to tabulate.
pub(crate) struct GroupArith {
    pub factors: Vec<u32>,
    pub order: usize,
    add: Vec<u32>,
}

impl GroupArith {
    pub fn new(group: &InvariantFactors) -> Self {
        let order = group.order();
        let elements: Vec<GroupElement> = group.elements().collect();
        let mut add = vec![0u32; order * order];
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                add[i * order + j] = group.index_unchecked(&group.add_unchecked(a, b)) as u32;
            }
        }
        GroupArith {
            factors: group.factors().to_vec(),
            order,
            add,
        }
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b] as usize
    }

    pub fn scale(&self, k: u32, a: usize) -> usize {
        (0..k).fold(0, |acc, _| self.add(acc, a))
    }

    /// Fills `out[x] = phi(x)` for the homomorphism with the given generator
    /// images, walking the elements as an odometer.
    pub fn expand(&self, images: &[usize], out: &mut [usize]) {
        let k = self.factors.len();
        let mut coords = vec![0u32; k];
        let mut value = 0usize;
        out[0] = 0;
        for slot in out.iter_mut().take(self.order).skip(1) {
            let mut i = k;
            loop {
                i -= 1;
                coords[i] += 1;
                value = self.add(value, images[i]);
                if coords[i] < self.factors[i] {
                    break;
                }
                coords[i] = 0;
            }
            *slot = value;
        }
    }
}

/// Calls `visit` with the generator images (as ranks) of every automorphism,
/// in lexicographic order of the image tuple.
pub(crate) fn for_each_automorphism<F>(group: &InvariantFactors, limits: &Limits, mut visit: F) -> Result<()>
where
    F: FnMut(&GroupArith, &[usize]) -> ControlFlow<()>,
{
    if group.order() > limits.max_group_order {
        return Err(Error::limit(
            format!("automorphism enumeration of {group} (order {})", group.order()),
            limits.max_group_order as u64,
        ));
    }
    let arith = GroupArith::new(group);
    let k = group.rank();
    // candidate images per generator: elements of order exactly n_i
    let candidates: Vec<Vec<usize>> = arith
        .factors
        .iter()
        .map(|&n| {
            (0..arith.order)
                .filter(|&g| element_rank_order(&arith, g) == n)
                .collect()
        })
        .collect();

    struct Search<'a, F> {
        arith: &'a GroupArith,
        candidates: &'a [Vec<usize>],
        images: Vec<usize>,
        visited: u64,
        budget: u64,
        visit: F,
    }

    impl<F: FnMut(&GroupArith, &[usize]) -> ControlFlow<()>> Search<'_, F> {
        fn go(&mut self, level: usize, span: &[bool]) -> Result<ControlFlow<()>> {
            if level == self.candidates.len() {
                self.visited += 1;
                if self.visited > self.budget {
                    return Err(Error::limit("automorphisms visited", self.budget));
                }
                return Ok((self.visit)(self.arith, &self.images));
            }
            let n = self.arith.factors[level];
            let last = level + 1 == self.candidates.len();
            for ci in 0..self.candidates[level].len() {
                let g = self.candidates[level][ci];
                // <g> must meet the span of the earlier images trivially
                let mut m = g;
                let mut independent = true;
                for _ in 1..n {
                    if span[m] {
                        independent = false;
                        break;
                    }
                    m = self.arith.add(m, g);
                }
                if !independent {
                    continue;
                }
                self.images.push(g);
                let flow = if last {
                    self.go(level + 1, span)?
                } else {
                    let mut next = vec![false; span.len()];
                    for h in (0..span.len()).filter(|&h| span[h]) {
                        let mut m = h;
                        for _ in 0..n {
                            next[m] = true;
                            m = self.arith.add(m, g);
                        }
                    }
                    self.go(level + 1, &next)?
                };
                self.images.pop();
                if flow.is_break() {
                    return Ok(flow);
                }
            }
            Ok(ControlFlow::Continue(()))
        }
    }

    let mut span = vec![false; arith.order];
    span[0] = true;
    let mut search = Search {
        arith: &arith,
        candidates: &candidates,
        images: Vec::with_capacity(k),
        visited: 0,
        budget: limits.max_automorphisms,
        visit: &mut visit,
    };
    // a Break from the visitor only ends the enumeration early
    let _ = search.go(0, &span)?;
    Ok(())
}

fn element_rank_order(arith: &GroupArith, g: usize) -> u32 {
    let mut m = g;
    let mut k = 1;
    while m != 0 {
        m = arith.add(m, g);
        k += 1;
    }
    k
}

/// Every automorphism of `group`, in lexicographic order of generator images.
pub fn automorphisms(group: &InvariantFactors, limits: &Limits) -> Result<Vec<Automorphism>> {
    let mut out = Vec::new();
    for_each_automorphism(group, limits, |_, images| {
        out.push(Automorphism {
            generator_images: images.iter().map(|&r| group.element_at(r)).collect(),
        });
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// Orbit partition of `Aut(A)` acting on `A`: `orbit_id[rank]` is the least
/// rank in the orbit.
pub fn automorphism_orbits(group: &InvariantFactors, limits: &Limits) -> Result<Vec<usize>> {
    let order = group.order();
    let mut parent: Vec<usize> = (0..order).collect();
    let mut table = vec![0usize; order];
    for_each_automorphism(group, limits, |arith, images| {
        arith.expand(images, &mut table);
        for (x, &y) in table.iter().enumerate() {
            union(&mut parent, x, y);
        }
        ControlFlow::Continue(())
    })?;
    Ok((0..order).map(|x| find(&mut parent, x)).collect())
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    // keep the least rank as root
    match ra.cmp(&rb) {
        std::cmp::Ordering::Less => parent[rb] = ra,
        std::cmp::Ordering::Greater => parent[ra] = rb,
        std::cmp::Ordering::Equal => {}
    }
}

/// One representative per `Aut(A)`-orbit: the lexicographically least element,
/// listed in increasing order.
pub fn pointed_orbit_reps(group: &InvariantFactors, limits: &Limits) -> Result<Vec<GroupElement>> {
    let orbits = automorphism_orbits(group, limits)?;
    Ok(orbits
        .iter()
        .enumerate()
        .filter(|&(x, &root)| x == root)
        .map(|(x, _)| group.element_at(x))
        .collect())
}

/// Decides whether some group isomorphism carries `p` to `q`, by brute force
/// over `Aut(A)`. Returns the first witness in enumeration order.
pub fn pointed_isomorphic(p: &PointedGroup, q: &PointedGroup, limits: &Limits) -> Result<Option<Automorphism>> {
    p.group.validate(&p.point)?;
    q.group.validate(&q.point)?;
    if p.group != q.group {
        return Ok(None);
    }
    let group = &p.group;
    if group.element_order(&p.point)? != group.element_order(&q.point)? {
        return Ok(None);
    }
    let target = group.index_unchecked(&q.point);
    let mut witness = None;
    for_each_automorphism(group, limits, |arith, images| {
        // image of the point only: sum of coordinate multiples
        let image = p
            .point
            .0
            .iter()
            .zip(images)
            .fold(0, |acc, (&k, &g)| arith.add(acc, arith.scale(k, g)));
        if image == target {
            witness = Some(Automorphism {
                generator_images: images.iter().map(|&r| group.element_at(r)).collect(),
            });
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(witness)
}

/// Every abelian group of order `n`, once each, in canonical enumeration order:
/// partitions of each prime exponent from coarsest to finest, primes ascending
/// with the smallest prime varying slowest.
pub fn abelian_groups_of_order(n: i64) -> Result<Vec<InvariantFactors>> {
    if n <= 0 {
        return Err(Error::domain(format!("group order must be positive, got {n}")));
    }
    let per_prime: Vec<Vec<Vec<u32>>> = factorize(n as u64)
        .into_iter()
        .map(|(p, e)| {
            partitions_desc(e)
                .into_iter()
                .map(|parts| parts.into_iter().map(|k| (p as u32).pow(k)).collect())
                .collect()
        })
        .collect();
    let mut out = vec![Vec::<Vec<u32>>::new()];
    for options in &per_prime {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                options.iter().map(move |powers| {
                    let mut next = prefix.clone();
                    next.push(powers.clone());
                    next
                })
            })
            .collect();
    }
    out.into_iter()
        .map(|choice| {
            let k = choice.iter().map(Vec::len).max().unwrap_or(0);
            let mut factors = vec![1u32; k];
            for powers in &choice {
                // powers are descending; align the largest with the last factor
                for (t, &q) in powers.iter().enumerate() {
                    factors[k - 1 - t] *= q;
                }
            }
            InvariantFactors::new(factors)
        })
        .collect()
}

/// Partitions of `n` as descending part lists, in reverse lexicographic order
/// (`[3]`, `[2,1]`, `[1,1,1]`).
pub(crate) fn partitions_desc(n: u32) -> Vec<Vec<u32>> {
    fn go(remaining: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=remaining.min(max)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

pub(crate) fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub(crate) fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u32, b: u32) -> u32 {
    a / gcd(a, b) * b
}

fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut old_r, mut r) = (a as i64, m as i64);
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    (old_r == 1).then(|| old_s.rem_euclid(m as i64) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(f: &[u32]) -> InvariantFactors {
        InvariantFactors::new(f.to_vec()).unwrap()
    }

    fn e(c: &[u32]) -> GroupElement {
        GroupElement(c.to_vec())
    }

    #[test]
    fn arithmetic() {
        let a = g(&[2, 4]);
        assert_eq!(a.add(&e(&[1, 3]), &e(&[1, 2])).unwrap(), e(&[0, 1]));
        assert_eq!(a.neg(&e(&[1, 3])).unwrap(), e(&[1, 1]));
        assert_eq!(a.element_order(&a.zero()).unwrap(), 1);
        assert_eq!(a.element_order(&e(&[1, 2])).unwrap(), 2);
        assert_eq!(a.element_order(&e(&[1, 1])).unwrap(), 4);
        assert!(matches!(
            a.add(&e(&[2, 0]), &e(&[0, 0])),
            Err(Error::MalformedElement(_))
        ));
        assert!(matches!(a.add(&e(&[0]), &e(&[0, 0])), Err(Error::MalformedElement(_))));
    }

    #[test]
    fn canonical_form_is_enforced() {
        assert!(InvariantFactors::new(vec![4, 2]).is_err());
        assert!(InvariantFactors::new(vec![1]).is_err());
        assert_eq!(InvariantFactors::cyclic(1).unwrap(), InvariantFactors::trivial());
        assert_eq!(InvariantFactors::trivial().order(), 1);
        assert_eq!(InvariantFactors::trivial().elements().count(), 1);
    }

    #[test]
    fn groups_of_small_order() {
        assert_eq!(abelian_groups_of_order(1).unwrap(), vec![InvariantFactors::trivial()]);
        assert_eq!(abelian_groups_of_order(4).unwrap(), vec![g(&[4]), g(&[2, 2])]);
        assert_eq!(
            abelian_groups_of_order(8).unwrap(),
            vec![g(&[8]), g(&[2, 4]), g(&[2, 2, 2])]
        );
        assert_eq!(abelian_groups_of_order(12).unwrap(), vec![g(&[12]), g(&[2, 6])]);
        assert_eq!(abelian_groups_of_order(36).unwrap().len(), 4);
        assert!(abelian_groups_of_order(0).is_err());
        assert!(abelian_groups_of_order(-3).is_err());
    }

    #[test]
    fn automorphism_counts() {
        let lim = Limits::default();
        assert_eq!(automorphisms(&g(&[5]), &lim).unwrap().len(), 4);
        assert_eq!(
            automorphisms(&g(&[2]), &lim).unwrap(),
            vec![Automorphism::identity(&g(&[2]))]
        );
        assert_eq!(automorphisms(&g(&[2, 2]), &lim).unwrap().len(), 6);
        assert_eq!(automorphisms(&InvariantFactors::trivial(), &lim).unwrap().len(), 1);
        // |GL(3,2)| = 168, |GL(2,3)| = 48
        assert_eq!(automorphisms(&g(&[2, 2, 2]), &lim).unwrap().len(), 168);
        assert_eq!(automorphisms(&g(&[3, 3]), &lim).unwrap().len(), 48);
    }

    #[test]
    fn automorphism_bound() {
        let lim = Limits {
            max_group_order: 8,
            ..Limits::default()
        };
        let err = automorphisms(&g(&[16]), &lim).unwrap_err();
        assert!(err.is_resource_limit());
        assert!(err.to_string().contains('8'));
    }

    #[test]
    fn orbit_reps() {
        let lim = Limits::default();
        assert_eq!(
            pointed_orbit_reps(&g(&[4]), &lim).unwrap(),
            vec![e(&[0]), e(&[1]), e(&[2])]
        );
        assert_eq!(
            pointed_orbit_reps(&g(&[2, 2]), &lim).unwrap(),
            vec![e(&[0, 0]), e(&[0, 1])]
        );
        let reps = pointed_orbit_reps(&g(&[2, 4]), &lim).unwrap();
        assert_eq!(reps, vec![e(&[0, 0]), e(&[0, 1]), e(&[0, 2]), e(&[1, 0])]);
        assert_eq!(
            pointed_orbit_reps(&InvariantFactors::trivial(), &lim).unwrap(),
            vec![e(&[])]
        );
    }

    #[test]
    fn pointed_isomorphism_examples() {
        let lim = Limits::default();
        let z6 = g(&[6]);
        let p = PointedGroup::new(z6.clone(), e(&[4])).unwrap();
        let q = PointedGroup::new(z6.clone(), e(&[2])).unwrap();
        let w = pointed_isomorphic(&p, &q, &lim).unwrap().unwrap();
        assert_eq!(w.apply(&z6, &e(&[4])).unwrap(), e(&[2]));

        let a = g(&[2, 4]);
        let p = PointedGroup::new(a.clone(), e(&[1, 0])).unwrap();
        let q = PointedGroup::new(a.clone(), e(&[0, 2])).unwrap();
        assert!(pointed_isomorphic(&p, &q, &lim).unwrap().is_none());

        let z = PointedGroup::new(a.clone(), a.zero()).unwrap();
        let w = pointed_isomorphic(&z, &z, &lim).unwrap().unwrap();
        assert_eq!(w, Automorphism::identity(&a));

        let other = PointedGroup::new(g(&[8]), e(&[0])).unwrap();
        assert!(pointed_isomorphic(&z, &other, &lim).unwrap().is_none());
    }

    #[test]
    fn literals() {
        assert_eq!("Z2xZ4".parse::<InvariantFactors>().unwrap(), g(&[2, 4]));
        assert_eq!("Z1".parse::<InvariantFactors>().unwrap(), InvariantFactors::trivial());
        assert!("Z2xZ3".parse::<InvariantFactors>().is_err());
        assert_eq!(g(&[2, 2, 2]).to_string(), "Z2xZ2xZ2");
        assert_eq!("[1,2]".parse::<GroupElement>().unwrap(), e(&[1, 2]));
        assert_eq!("[]".parse::<GroupElement>().unwrap(), e(&[]));
        assert_eq!("3".parse::<GroupElement>().unwrap(), e(&[3]));
        assert!("[1,x]".parse::<GroupElement>().is_err());
    }

    #[test]
    fn non_canonical_products_map_by_crt() {
        let p = InvariantFactors::parse_product("Z2xZ3").unwrap();
        assert_eq!(p.group, g(&[6]));
        assert_eq!(p.map_element(&e(&[1, 0])).unwrap(), e(&[3]));
        assert_eq!(p.map_element(&e(&[0, 1])).unwrap(), e(&[4]));
        assert_eq!(p.map_element(&e(&[1, 1])).unwrap(), e(&[1]));

        let p = InvariantFactors::parse_product("Z4xZ2").unwrap();
        assert_eq!(p.group, g(&[2, 4]));
        assert_eq!(p.map_element(&e(&[1, 0])).unwrap(), e(&[0, 1]));
        assert_eq!(p.map_element(&e(&[0, 1])).unwrap(), e(&[1, 0]));

        let p = InvariantFactors::parse_product("Z6xZ4").unwrap();
        assert_eq!(p.group, g(&[2, 12]));
    }

    #[test]
    fn canonical_literals_map_identically() {
        for literal in ["Z2xZ2", "Z3xZ3", "Z2xZ4", "Z2xZ2xZ2", "Z3xZ6", "Z2xZ2xZ4"] {
            let p = InvariantFactors::parse_product(literal).unwrap();
            assert!(p.is_canonical());
            for x in p.group.elements() {
                assert_eq!(p.map_element(&x).unwrap(), x, "{literal}");
            }
        }
    }

    #[test]
    fn crt_map_is_an_isomorphism() {
        for literal in ["Z2xZ3", "Z4xZ6", "Z3xZ5xZ2", "Z6xZ10", "Z9xZ3"] {
            let p = InvariantFactors::parse_product(literal).unwrap();
            let lit_group_order: usize = p.moduli.iter().map(|&m| m as usize).product();
            assert_eq!(lit_group_order, p.group.order());
            let elems: Vec<GroupElement> = {
                let mut v = vec![vec![]];
                for &m in &p.moduli {
                    v = v
                        .into_iter()
                        .flat_map(|pre: Vec<u32>| {
                            (0..m).map(move |x| {
                                let mut n = pre.clone();
                                n.push(x);
                                n
                            })
                        })
                        .collect();
                }
                v.into_iter().map(GroupElement).collect()
            };
            let images: Vec<GroupElement> = elems.iter().map(|x| p.map_element(x).unwrap()).collect();
            let distinct: std::collections::BTreeSet<_> = images.iter().collect();
            assert_eq!(distinct.len(), elems.len(), "{literal}");
            for (i, x) in elems.iter().enumerate() {
                for (j, y) in elems.iter().enumerate().step_by(3) {
                    let sum = GroupElement(
                        x.0.iter()
                            .zip(&y.0)
                            .zip(&p.moduli)
                            .map(|((a, b), m)| (a + b) % m)
                            .collect(),
                    );
                    assert_eq!(
                        p.map_element(&sum).unwrap(),
                        p.group.add(&images[i], &images[j]).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn expand_matches_apply() {
        let a = g(&[2, 4]);
        let lim = Limits::default();
        let arith = GroupArith::new(&a);
        let mut table = vec![0; a.order()];
        for aut in automorphisms(&a, &lim).unwrap() {
            let ranks: Vec<usize> = aut.generator_images.iter().map(|x| a.index_of(x).unwrap()).collect();
            arith.expand(&ranks, &mut table);
            assert_eq!(table, aut.value_table(&a));
        }
    }
}
