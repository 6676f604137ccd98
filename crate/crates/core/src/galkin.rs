//! Galkin quandles `G(A, c1, c2)` on `Z3 x A`:
//!
//! `(x, a) * (y, b) = (2y - x, -a + mu(x - y) b + tau(x - y))`
//!
//! with `mu(0) = 2`, `mu(1) = mu(2) = -1`, `tau(0) = 0`, `tau(1) = c1`,
//! `tau(2) = c2`. Element `(x, a)` has index `x * |A| + rank(a)`, where rank is
//! the lexicographic position of `a`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::abelian::{self, GroupArith, InvariantFactors, PointedGroup};
use crate::quandle::{CycleClass, QuandleTable};
use crate::{Automorphism, Error, GroupElement, Limits, PropertyReport, Result};

/// `mu : Z3 -> Z` and `tau : Z3 -> A`, indexed by residue.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MuTau {
    pub mu: [i64; 3],
    pub tau: [GroupElement; 3],
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GalkinSpec {
    pub group: InvariantFactors,
    pub c1: GroupElement,
    pub c2: GroupElement,
}

/// A built table with the index legend: `legend[i] = (x, a)`.
#[derive(Debug, Clone)]
pub struct BuiltGalkin {
    pub table: QuandleTable,
    pub legend: Vec<(u8, GroupElement)>,
}

/// `normalized` together with the isomorphism `eta` from the original built
/// table onto the normalized one.
#[derive(Debug, Clone)]
pub struct Normalized {
    pub spec: GalkinSpec,
    pub eta: Vec<usize>,
}

/// A group homomorphism `(A, c) -> (B, d)` given by generator images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointedMorphism {
    pub source: PointedGroup,
    pub target: PointedGroup,
    pub images: Vec<GroupElement>,
}

fn residue(x: i64) -> usize {
    x.rem_euclid(3) as usize
}

impl MuTau {
    pub fn canonical(group: &InvariantFactors, c1: &GroupElement, c2: &GroupElement) -> Self {
        MuTau {
            mu: [2, -1, -1],
            tau: [group.zero(), c1.clone(), c2.clone()],
        }
    }

    fn check_elements(&self, group: &InvariantFactors) -> Result<()> {
        self.tau.iter().try_for_each(|t| group.validate(t))
    }

    /// The three conditions on `(mu, tau)` evaluated literally: the `mu`
    /// equations in the integers, the `tau` equation in `A`.
    ///
    /// For all `X, Y` in `Z3`:
    /// `mu(-X) = mu(X)`,
    /// `mu(X+Y) + mu(X-Y) = mu(X) mu(Y)`,
    /// `tau(X+Y) + tau(Y-X) = tau(X) + tau(-X) + mu(X) tau(Y)`.
    ///
    /// This is sufficient for right self-distributivity but not necessary when
    /// the exponent of `A` is small; see [`MuTau::validate_as_action`].
    pub fn validate(&self, group: &InvariantFactors) -> Result<bool> {
        self.check_elements(group)?;
        let (mu, tau) = (&self.mu, &self.tau);
        for x in 0..3i64 {
            if mu[residue(-x)] != mu[residue(x)] {
                return Ok(false);
            }
            for y in 0..3i64 {
                if mu[residue(x + y)] + mu[residue(x - y)] != mu[residue(x)] * mu[residue(y)] {
                    return Ok(false);
                }
                let lhs = group.add_unchecked(&tau[residue(x + y)], &tau[residue(y - x)]);
                let rhs = group.add_unchecked(
                    &group.add_unchecked(&tau[residue(x)], &tau[residue(-x)]),
                    &group.scale_unchecked(mu[residue(x)], &tau[residue(y)]),
                );
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The coefficient identities behind right self-distributivity with `mu`
    /// acting on `A`, i.e. integer coefficients compared modulo the exponent of
    /// `A`. Holds exactly when the induced operation is right
    /// self-distributive.
    pub fn validate_as_action(&self, group: &InvariantFactors) -> Result<bool> {
        self.check_elements(group)?;
        let e = group.exponent() as i64;
        let (mu, tau) = (&self.mu, &self.tau);
        let m = |d: i64| mu[residue(d)];
        let t = |d: i64| &tau[residue(d)];
        for x in 0..3i64 {
            for y in 0..3i64 {
                // coefficient of b
                if (m(x - y) - m(y - x)).rem_euclid(e) != 0 {
                    return Ok(false);
                }
                for z in 0..3i64 {
                    // coefficient of c
                    if (m(2 * y - x - z) + m(x - z) - m(y - x) * m(y - z)).rem_euclid(e) != 0 {
                        return Ok(false);
                    }
                    let lhs = group.sub(t(2 * y - x - z), t(x - y))?;
                    let rhs = group.add_unchecked(
                        &group.add_unchecked(&group.neg(t(x - z))?, &group.scale_unchecked(m(y - x), t(y - z))),
                        t(y - x),
                    );
                    if lhs != rhs {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Raw operation table on `Z3 x A`, not yet checked against the axioms.
    pub fn induced_rows(&self, group: &InvariantFactors, limits: &Limits) -> Result<Vec<Vec<usize>>> {
        self.check_elements(group)?;
        check_group_bound(group, limits)?;
        let arith = GroupArith::new(group);
        let m = arith.order;
        let neg: Vec<usize> = (0..m)
            .map(|a| (0..m).find(|&b| arith.add(a, b) == 0).unwrap())
            .collect();
        let scale = |k: i64, b: usize| {
            let k = k.rem_euclid(group.exponent() as i64) as u32;
            arith.scale(k, b)
        };
        let tau: Vec<usize> = self.tau.iter().map(|t| group.index_unchecked(t)).collect();
        let mut rows = vec![vec![0usize; 3 * m]; 3 * m];
        for (p, row) in rows.iter_mut().enumerate() {
            let (x, a) = (p / m, p % m);
            for (q, cell) in row.iter_mut().enumerate() {
                let (y, b) = (q / m, q % m);
                let d = residue(x as i64 - y as i64);
                let v = arith.add(arith.add(neg[a], scale(self.mu[d], b)), tau[d]);
                *cell = residue(2 * y as i64 - x as i64) * m + v;
            }
        }
        Ok(rows)
    }
}

fn check_group_bound(group: &InvariantFactors, limits: &Limits) -> Result<()> {
    if group.order() > limits.max_group_order {
        return Err(Error::limit(
            format!("Galkin construction over {group} (order {})", group.order()),
            limits.max_group_order as u64,
        ));
    }
    Ok(())
}

impl GalkinSpec {
    pub fn new(group: InvariantFactors, c1: GroupElement, c2: GroupElement) -> Result<Self> {
        group.validate(&c1)?;
        group.validate(&c2)?;
        Ok(GalkinSpec { group, c1, c2 })
    }

    /// `G(A, 0, c)`.
    pub fn pointed(group: InvariantFactors, c: GroupElement) -> Result<Self> {
        let zero = group.zero();
        GalkinSpec::new(group, zero, c)
    }

    pub fn order(&self) -> usize {
        3 * self.group.order()
    }

    /// `c2 - c1`, the point classifying the quandle.
    pub fn difference(&self) -> GroupElement {
        self.group.sub(&self.c2, &self.c1).expect("spec elements are valid")
    }

    pub fn is_normalized(&self) -> bool {
        self.c1.is_zero()
    }

    pub fn mu_tau(&self) -> MuTau {
        MuTau::canonical(&self.group, &self.c1, &self.c2)
    }
}

impl fmt::Display for GalkinSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c1.is_zero() {
            write!(f, "G({},{})", self.group, self.c2)
        } else {
            write!(f, "G({},{},{})", self.group, self.c1, self.c2)
        }
    }
}

impl FromStr for GalkinSpec {
    type Err = Error;

    /// `G(A,[c1],[c2])`, or `G(A,[c])` for `G(A,0,c)`. Products that are not in
    /// invariant-factor form, such as `Z2xZ3`, are converted along with their
    /// element literals.
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = s
            .strip_prefix("G(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::parse(format!("Galkin literal {s:?} must look like G(Z4,[1])")))?;
        // split at commas outside brackets
        let mut parts = Vec::new();
        let (mut depth, mut start) = (0i32, 0);
        for (i, ch) in inner.char_indices() {
            match ch {
                '[' => depth += 1,
                ']' => depth -= 1,
                ',' if depth == 0 => {
                    parts.push(&inner[start..i]);
                    start = i + 1;
                }
                _ => {}
            }
        }
        parts.push(&inner[start..]);
        let product = InvariantFactors::parse_product(parts[0])?;
        let points = parts[1..]
            .iter()
            .map(|p| product.map_element(&p.parse()?))
            .collect::<Result<Vec<_>>>()?;
        let group = product.group;
        match points.len() {
            0 => GalkinSpec::pointed(group.clone(), group.zero()),
            1 => GalkinSpec::pointed(group, points[0].clone()),
            2 => GalkinSpec::new(group, points[0].clone(), points[1].clone()),
            k => Err(Error::parse(format!(
                "Galkin literal takes at most two points, found {k}"
            ))),
        }
    }
}

/// Builds the operation table of `G(A, c1, c2)`.
pub fn build(spec: &GalkinSpec, limits: &Limits) -> Result<BuiltGalkin> {
    let rows = spec.mu_tau().induced_rows(&spec.group, limits)?;
    let n = rows.len();
    let table = rows.into_iter().flatten().map(|v| v as u32).collect();
    let elements: Vec<GroupElement> = spec.group.elements().collect();
    let legend = (0..3u8)
        .flat_map(|x| elements.iter().map(move |a| (x, a.clone())))
        .collect();
    Ok(BuiltGalkin {
        table: QuandleTable::from_valid(n, table),
        legend,
    })
}

/// Index of `(x, a)` in a built table.
pub fn element_index(group: &InvariantFactors, x: u8, a: &GroupElement) -> Result<usize> {
    if x > 2 {
        return Err(Error::MalformedElement(format!("slice {x} is not in Z3")));
    }
    Ok(x as usize * group.order() + group.index_of(a)?)
}

/// `G(A, c1, c2) -> G(A, 0, c2 - c1)` via `eta(x, a) = (x, a + beta(x))` with
/// `beta(0) = beta(1) = 0`, `beta(2) = -c1`.
pub fn normalize(spec: &GalkinSpec) -> Normalized {
    let group = &spec.group;
    let m = group.order();
    let beta2 = group.index_unchecked(&group.neg(&spec.c1).expect("valid spec"));
    let arith_shift: Vec<usize> = group
        .elements()
        .map(|a| group.index_unchecked(&group.add_unchecked(&a, &group.element_at(beta2))))
        .collect();
    let eta = (0..3 * m)
        .map(|p| if p / m == 2 { 2 * m + arith_shift[p % m] } else { p })
        .collect();
    Normalized {
        spec: GalkinSpec::pointed(group.clone(), spec.difference()).expect("valid spec"),
        eta,
    }
}

/// Decides `G(A, c1, c2) ≅ G(A', c1', c2')` by pointed isomorphism of
/// `(A, c2 - c1)` and `(A', c2' - c1')`; returns the group automorphism.
pub fn galkin_isomorphic(s: &GalkinSpec, t: &GalkinSpec, limits: &Limits) -> Result<Option<Automorphism>> {
    abelian::pointed_isomorphic(
        &PointedGroup::new(s.group.clone(), s.difference())?,
        &PointedGroup::new(t.group.clone(), t.difference())?,
        limits,
    )
}

/// One normalized representative per isomorphism class of order `m`: groups in
/// canonical order, then orbit representatives in increasing order.
pub fn classify_order(m: i64, limits: &Limits) -> Result<Vec<GalkinSpec>> {
    if m <= 0 || m % 3 != 0 {
        return Err(Error::domain(format!(
            "Galkin quandles have order 3n with n >= 1, got {m}"
        )));
    }
    let mut out = Vec::new();
    for group in abelian::abelian_groups_of_order(m / 3)? {
        for c in abelian::pointed_orbit_reps(&group, limits)? {
            out.push(GalkinSpec::pointed(group.clone(), c)?);
        }
    }
    Ok(out)
}

/// Closed-form property report.
///
/// Every right translation has the same cycle type: on its own slice it is
/// `a -> 2b - a` (fixed points at the `t` elements with `2(a - b) = 0`, the
/// rest in 2-cycles); it swaps the other two slices, and the square there is
/// translation by `±(c2 - c1)`, giving `|A| / k` cycles of length `2k` with
/// `k` the order of `c2 - c1`.
pub fn predicted_properties(spec: &GalkinSpec) -> PropertyReport {
    let group = &spec.group;
    let m = group.order();
    let c = spec.difference();
    let k = group.element_order(&c).expect("valid spec") as usize;
    let two_torsion = group.elements().filter(|a| group.add_unchecked(a, a).is_zero()).count();
    let mut lengths = vec![1; two_torsion];
    lengths.extend(std::iter::repeat_n(2, (m - two_torsion) / 2));
    lengths.extend(std::iter::repeat_n(2 * k, m / k));
    lengths.sort_unstable();
    let killed_by_three = group.is_killed_by_three();
    PropertyReport {
        connected: true,
        latin: m % 2 == 1,
        faithful: true,
        medial: killed_by_three,
        left_distributive: killed_by_three,
        kei: spec.c1 == spec.c2,
        self_dual: true,
        has_r3_subquandle: c.is_zero() || m.is_multiple_of(3),
        cycle_profile: vec![CycleClass {
            lengths,
            columns: 3 * m,
        }],
    }
}

/// The table map `(x, a) -> (x, f(a))` from `G(A, 0, c)` to `G(B, 0, d)`.
pub fn induced_hom(f: &PointedMorphism) -> Result<Vec<usize>> {
    let (a, b) = (&f.source.group, &f.target.group);
    if f.images.len() != a.rank() {
        return Err(Error::domain("morphism must give one image per generator"));
    }
    for (img, &n) in f.images.iter().zip(a.factors()) {
        b.validate(img)?;
        if n % b.element_order(img)? != 0 {
            return Err(Error::domain(format!(
                "{img} cannot be the image of a generator of order {n}"
            )));
        }
    }
    let apply = |x: &GroupElement| {
        x.coords().iter().zip(&f.images).fold(b.zero(), |acc, (&k, img)| {
            b.add_unchecked(&acc, &b.scale_unchecked(k as i64, img))
        })
    };
    if apply(&f.source.point) != f.target.point {
        return Err(Error::domain(format!(
            "morphism sends {} to {}, not {}",
            f.source.point,
            apply(&f.source.point),
            f.target.point
        )));
    }
    let values: Vec<usize> = a.elements().map(|x| b.index_unchecked(&apply(&x))).collect();
    let (m, k) = (a.order(), b.order());
    Ok((0..3 * m).map(|p| (p / m) * k + values[p % m]).collect())
}

/// `rho(x, a) = (x, a + c)` on `G(A, 0, c)` for `c` of order 2.
pub fn symmetric_involution(group: &InvariantFactors, c: &GroupElement) -> Result<Vec<usize>> {
    let order = group.element_order(c)?;
    if order != 2 {
        return Err(Error::domain(format!("{c} has order {order}, expected 2")));
    }
    let m = group.order();
    Ok((0..3 * m)
        .map(|p| (p / m) * m + group.index_unchecked(&group.add_unchecked(&group.element_at(p % m), c)))
        .collect())
}

/// All `mu : Z_p -> [-bound, bound]` with `mu(0) = 2` and
/// `mu(x + y) + mu(x - y) = mu(x) mu(y)`, as value lists `mu(0), .., mu(p-1)`.
///
/// Setting `x = 0` forces `mu(-y) = mu(y)`, so only symmetric assignments are
/// enumerated.
pub fn mu_search(p: u32, bound: i64) -> Result<Vec<Vec<i64>>> {
    let prime = p >= 2 && (2..p).all(|d| !p.is_multiple_of(d));
    if !prime || p <= 3 || p > 7 {
        return Err(Error::domain(format!("mu search needs a prime 3 < p <= 7, got {p}")));
    }
    if bound < 2 {
        return Err(Error::domain(format!("value bound {bound} excludes mu(0) = 2")));
    }
    let p = p as usize;
    let half = (p - 1) / 2;
    let mut mu = vec![0i64; p];
    mu[0] = 2;
    let mut out = Vec::new();

    fn go(i: usize, half: usize, bound: i64, mu: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        let p = mu.len();
        if i > half {
            let ok = (0..p).all(|x| (0..p).all(|y| mu[(x + y) % p] + mu[(x + p - y) % p] == mu[x] * mu[y]));
            if ok {
                out.push(mu.clone());
            }
            return;
        }
        for v in -bound..=bound {
            mu[i] = v;
            mu[p - i] = v;
            go(i + 1, half, bound, mu, out);
        }
    }

    go(1, half, bound, &mut mu, &mut out);
    Ok(out)
}

/// Names from the rig catalog for Galkin quandles of order 3 to 33, as
/// literals; two-point entries there list two points of one orbit, and the
/// first is used.
pub const RIG_CATALOG: &[(&str, &str)] = &[
    ("C[3,1]", "G(Z1,[])"),
    ("C[6,1]", "G(Z2,[0])"),
    ("C[6,2]", "G(Z2,[1])"),
    ("C[9,2]", "G(Z3,[0])"),
    ("C[9,6]", "G(Z3,[1])"),
    ("C[12,5]", "G(Z4,[2])"),
    ("C[12,6]", "G(Z4,[0])"),
    ("C[12,7]", "G(Z4,[1])"),
    ("C[12,8]", "G(Z2xZ2,[0,0])"),
    ("C[12,9]", "G(Z2xZ2,[1,0])"),
    ("C[15,5]", "G(Z5,[1])"),
    ("C[15,6]", "G(Z5,[0])"),
    ("C[18,1]", "G(Z2xZ3,[0,0])"),
    ("C[18,4]", "G(Z2xZ3,[1,0])"),
    ("C[18,5]", "G(Z2xZ3,[1,1])"),
    ("C[18,8]", "G(Z2xZ3,[0,1])"),
    ("C[21,7]", "G(Z7,[1])"),
    ("C[21,8]", "G(Z7,[0])"),
    ("C[24,26]", "G(Z8,[2])"),
    ("C[24,27]", "G(Z8,[0])"),
    ("C[24,28]", "G(Z8,[4])"),
    ("C[24,29]", "G(Z2xZ4,[1,0])"),
    ("C[24,30]", "G(Z2xZ4,[0,0])"),
    ("C[24,31]", "G(Z2xZ4,[0,2])"),
    ("C[24,32]", "G(Z8,[1])"),
    ("C[24,33]", "G(Z2xZ4,[0,1])"),
    ("C[24,38]", "G(Z2xZ2xZ2,[0,0,1])"),
    ("C[24,39]", "G(Z2xZ2xZ2,[0,0,0])"),
    ("C[27,2]", "G(Z3xZ3,[0,0])"),
    ("C[27,12]", "G(Z9,[3])"),
    ("C[27,13]", "G(Z9,[0])"),
    ("C[27,23]", "G(Z3xZ3,[1,0])"),
    ("C[27,55]", "G(Z9,[1])"),
    ("C[30,12]", "G(Z2xZ5,[0,1])"),
    ("C[30,13]", "G(Z2xZ5,[0,0])"),
    ("C[30,14]", "G(Z2xZ5,[1,1])"),
    ("C[30,15]", "G(Z2xZ5,[1,0])"),
    ("C[33,10]", "G(Z11,[0])"),
    ("C[33,11]", "G(Z11,[1])"),
];

/// The rig-catalog spec for a name such as `"C[12,7]"`.
pub fn rig_spec(name: &str) -> Option<GalkinSpec> {
    RIG_CATALOG
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, lit)| lit.parse().expect("catalog literals parse"))
}

/// The rig-catalog name of the class of `spec`, if the catalog lists it.
pub fn rig_name(spec: &GalkinSpec, limits: &Limits) -> Result<Option<&'static str>> {
    for (name, lit) in RIG_CATALOG {
        let candidate: GalkinSpec = lit.parse().expect("catalog literals parse");
        if candidate.group == spec.group && galkin_isomorphic(&candidate, spec, limits)?.is_some() {
            return Ok(Some(name));
        }
    }
    Ok(None)
}
