//! Simplex domains, step-sets, and exact walk counts.
//!
//! A domain of dimension `d` and side `L` is the set of points of
//! `ℕ₀^{d+1}` with coordinate sum `L`. Each step raises one coordinate by
//! one and lowers another by one. For the triangle (`d = 2`) the six steps
//! split into two directed sublattices, tagged [`Sublattice::A`] (weight α)
//! and [`Sublattice::B`] (weight β):
//!
//! ```text
//! A: (1,0,-1) (-1,1,0) (0,-1,1)
//! B: (1,-1,0) (-1,0,1) (0,1,-1)
//! ```
//!
//! Counts are resolved by endpoint and by the number `p` of A-steps, so the
//! weight of a walk is recovered downstream as `α^p β^(n-p)`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::{BivarPoly, TruncSeries};

/// Default cap on the number of walks (or table entries) a single call may
/// materialize.
pub const DEFAULT_GUARD: u128 = 10_000_000;

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DomainSpec {
    dim: usize,
    side: u32,
}

impl DomainSpec {
    pub fn new(dim: usize, side: u32) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidDomain("dimension must be at least 1".into()));
        }
        Ok(Self { dim, side })
    }

    pub fn line(side: u32) -> Self {
        Self { dim: 1, side }
    }

    pub fn triangle(side: u32) -> Self {
        Self { dim: 2, side }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn side(&self) -> u32 {
        self.side
    }

    /// `binomial(L + d, d)`.
    pub fn num_points(&self) -> BigInt {
        binomial(self.side as u64 + self.dim as u64, self.dim as u64)
    }

    pub fn contains(&self, point: &SimplexPoint) -> bool {
        point.0.len() == self.dim + 1 && point.0.iter().map(|&c| c as u64).sum::<u64>() == self.side as u64
    }

    /// Validates coordinates against this domain.
    pub fn point(&self, coords: &[u32]) -> Result<SimplexPoint> {
        let p = SimplexPoint(coords.to_vec());
        if self.contains(&p) {
            Ok(p)
        } else {
            Err(Error::DomainMismatch {
                point: coords.to_vec(),
                d: self.dim,
                side: self.side,
            })
        }
    }

    /// The corner `(L, 0, …, 0)`.
    pub fn corner(&self) -> SimplexPoint {
        let mut c = vec![0; self.dim + 1];
        c[0] = self.side;
        SimplexPoint(c)
    }

    /// All points, in lexicographic order of coordinates.
    pub fn points(&self) -> Vec<SimplexPoint> {
        fn rec(prefix: &mut Vec<u32>, remaining: u32, slots: usize, out: &mut Vec<SimplexPoint>) {
            if slots == 1 {
                prefix.push(remaining);
                out.push(SimplexPoint(prefix.clone()));
                prefix.pop();
                return;
            }
            for c in 0..=remaining {
                prefix.push(c);
                rec(prefix, remaining - c, slots - 1, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), self.side, self.dim + 1, &mut out);
        out
    }
}

/// A point of a simplex domain. Obtain one through [`DomainSpec::point`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SimplexPoint(Vec<u32>);

impl SimplexPoint {
    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    fn apply(&self, delta: &[i32]) -> Option<SimplexPoint> {
        self.0
            .iter()
            .zip(delta)
            .map(|(&c, &d)| c.checked_add_signed(d))
            .collect::<Option<Vec<_>>>()
            .map(SimplexPoint)
    }
}

impl fmt::Display for SimplexPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sublattice {
    A,
    B,
}

impl Sublattice {
    pub fn other(self) -> Self {
        match self {
            Sublattice::A => Sublattice::B,
            Sublattice::B => Sublattice::A,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SublatticeFilter {
    AOnly,
    BOnly,
    Both,
}

impl SublatticeFilter {
    fn admits(self, tag: Sublattice) -> bool {
        match self {
            SublatticeFilter::AOnly => tag == Sublattice::A,
            SublatticeFilter::BOnly => tag == Sublattice::B,
            SublatticeFilter::Both => true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub delta: Vec<i32>,
    pub tag: Sublattice,
}

const TRIANGLE_A: [[i32; 3]; 3] = [[1, 0, -1], [-1, 1, 0], [0, -1, 1]];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepSet {
    dim: usize,
    steps: Vec<Step>,
}

impl StepSet {
    /// All `d(d+1)` unit exchanges, in descending lexicographic order of
    /// their vectors. Only the triangle has a sublattice split; for every
    /// other dimension all steps carry tag A.
    pub fn standard(dim: usize) -> Self {
        let k = dim + 1;
        let mut steps = Vec::with_capacity(dim * k);
        for i in 0..k {
            for j in 0..k {
                if i == j {
                    continue;
                }
                let mut delta = vec![0; k];
                delta[i] = 1;
                delta[j] = -1;
                let tag = if dim == 2 && !TRIANGLE_A.iter().any(|a| a[..] == delta[..]) {
                    Sublattice::B
                } else {
                    Sublattice::A
                };
                steps.push(Step { delta, tag });
            }
        }
        steps.sort_by(|a, b| b.delta.cmp(&a.delta));
        Self { dim, steps }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The same vectors with A and B exchanged.
    pub fn swapped_tags(&self) -> Self {
        Self {
            dim: self.dim,
            steps: self
                .steps
                .iter()
                .map(|s| Step {
                    delta: s.delta.clone(),
                    tag: s.tag.other(),
                })
                .collect(),
        }
    }

    /// The steps admitted by `filter`, order kept.
    pub fn restricted(&self, filter: SublatticeFilter) -> Self {
        Self {
            dim: self.dim,
            steps: self.steps.iter().filter(|s| filter.admits(s.tag)).cloned().collect(),
        }
    }

    /// Index of the step with the given vector.
    pub fn index_of(&self, delta: &[i32]) -> Option<usize> {
        self.steps.iter().position(|s| s.delta == delta)
    }

    /// Image of `point` under step `idx`, if it stays in the orthant.
    pub fn apply(&self, point: &SimplexPoint, idx: usize) -> Option<SimplexPoint> {
        point.apply(&self.steps[idx].delta)
    }
}

/// In-domain images of `point`, with the tag of the step taken, in
/// step-set order.
pub fn neighbors(point: &SimplexPoint, stepset: &StepSet) -> Vec<(SimplexPoint, Sublattice)> {
    stepset
        .steps
        .iter()
        .filter_map(|s| point.apply(&s.delta).map(|q| (q, s.tag)))
        .collect()
}

/// A walk given by its start and a sequence of indices into
/// `StepSet::standard(domain.dim())`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeWalk {
    domain_dim: usize,
    domain_side: u32,
    start: SimplexPoint,
    steps: Vec<usize>,
}

impl LatticeWalk {
    /// Checks that every prefix stays in the domain.
    pub fn new(domain: DomainSpec, start: SimplexPoint, steps: Vec<usize>) -> Result<Self> {
        if !domain.contains(&start) {
            return Err(Error::DomainMismatch {
                point: start.0,
                d: domain.dim,
                side: domain.side,
            });
        }
        let walk = Self {
            domain_dim: domain.dim,
            domain_side: domain.side,
            start,
            steps,
        };
        walk.try_positions()?;
        Ok(walk)
    }

    pub fn domain(&self) -> DomainSpec {
        DomainSpec {
            dim: self.domain_dim,
            side: self.domain_side,
        }
    }

    pub fn start(&self) -> &SimplexPoint {
        &self.start
    }

    pub fn steps(&self) -> &[usize] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    fn try_positions(&self) -> Result<Vec<SimplexPoint>> {
        let set = StepSet::standard(self.domain_dim);
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        out.push(self.start.clone());
        for (k, &s) in self.steps.iter().enumerate() {
            if s >= set.len() {
                return Err(Error::Precondition(format!("step index {s} out of range")));
            }
            let next = set.apply(out.last().unwrap(), s).ok_or_else(|| {
                Error::Precondition(format!("step {k} leaves the domain"))
            })?;
            out.push(next);
        }
        Ok(out)
    }

    /// `ω₀, ω₁, …, ω_n`.
    pub fn positions(&self) -> Vec<SimplexPoint> {
        self.try_positions().expect("validated at construction")
    }

    pub fn end(&self) -> SimplexPoint {
        self.positions().pop().unwrap()
    }

    /// Sublattice tag of each step.
    pub fn tags(&self) -> Vec<Sublattice> {
        let set = StepSet::standard(self.domain_dim);
        self.steps.iter().map(|&s| set.steps[s].tag).collect()
    }
}

#[derive(Serialize, Deserialize)]
struct CountEntryJson {
    n: usize,
    end: Vec<u32>,
    p: usize,
    count: String,
}

#[derive(Serialize, Deserialize)]
struct CountTableJson {
    d: usize,
    #[serde(rename = "L")]
    side: u32,
    start: Vec<u32>,
    n_max: usize,
    entries: Vec<CountEntryJson>,
}

/// Exact walk counts `C(n, endpoint, p)` for `n ≤ n_max`, where `p` is the
/// number of A-steps. Only nonzero entries are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    domain: DomainSpec,
    start: SimplexPoint,
    layers: Vec<BTreeMap<(SimplexPoint, usize), BigInt>>,
}

impl CountTable {
    pub fn domain(&self) -> DomainSpec {
        self.domain
    }

    pub fn start(&self) -> &SimplexPoint {
        &self.start
    }

    pub fn n_max(&self) -> usize {
        self.layers.len() - 1
    }

    pub fn get(&self, n: usize, end: &SimplexPoint, p: usize) -> BigInt {
        self.layers
            .get(n)
            .and_then(|l| l.get(&(end.clone(), p)))
            .cloned()
            .unwrap_or_default()
    }

    /// Nonzero entries of layer `n` as `(endpoint, p, count)`.
    pub fn layer(&self, n: usize) -> impl Iterator<Item = (&SimplexPoint, usize, &BigInt)> {
        self.layers[n].iter().map(|((e, p), c)| (e, *p, c))
    }

    pub fn total(&self, n: usize) -> BigInt {
        self.layers[n].values().sum()
    }

    pub fn totals(&self) -> Vec<BigInt> {
        (0..=self.n_max()).map(|n| self.total(n)).collect()
    }

    /// Totals over endpoints, indexed by `p = 0..=n`.
    pub fn total_by_p(&self, n: usize) -> Vec<BigInt> {
        self.total_by_p_where(n, |_| true)
    }

    /// Like [`Self::total_by_p`], restricted to endpoints satisfying `keep`.
    pub fn total_by_p_where(&self, n: usize, keep: impl Fn(&SimplexPoint) -> bool) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); n + 1];
        for ((e, p), c) in &self.layers[n] {
            if keep(e) {
                out[*p] += c;
            }
        }
        out
    }

    /// Counts at step `n` summed over `p`, per endpoint.
    pub fn endpoint_totals(&self, n: usize) -> BTreeMap<SimplexPoint, BigInt> {
        let mut out: BTreeMap<SimplexPoint, BigInt> = BTreeMap::new();
        for ((e, _), c) in &self.layers[n] {
            *out.entry(e.clone()).or_default() += c;
        }
        out
    }

    /// Total generating function with symbolic weights:
    /// coefficient of `t^n` is `Σ_p total(n,p) α^p β^(n-p)`.
    pub fn weighted_series(&self) -> TruncSeries<BivarPoly> {
        self.weighted_series_where(|_| true)
    }

    pub fn weighted_series_where(&self, keep: impl Fn(&SimplexPoint) -> bool) -> TruncSeries<BivarPoly> {
        let coeffs = (0..=self.n_max())
            .map(|n| {
                let mut poly = BivarPoly::zero();
                for (p, c) in self.total_by_p_where(n, &keep).iter().enumerate() {
                    poly.add_term(p as u32, (n - p) as u32, c);
                }
                poly
            })
            .collect();
        TruncSeries::from_coeffs(coeffs)
    }

    /// Unweighted totals as an integer series.
    pub fn total_series(&self) -> TruncSeries<BigInt> {
        TruncSeries::from_coeffs(self.totals())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries = self
            .layers
            .iter()
            .enumerate()
            .flat_map(|(n, layer)| {
                layer.iter().map(move |((e, p), c)| CountEntryJson {
                    n,
                    end: e.0.clone(),
                    p: *p,
                    count: c.to_string(),
                })
            })
            .collect();
        serde_json::to_value(CountTableJson {
            d: self.domain.dim,
            side: self.domain.side,
            start: self.start.0.clone(),
            n_max: self.n_max(),
            entries,
        })
        .expect("count table serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let raw: CountTableJson =
            serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let domain = DomainSpec::new(raw.d, raw.side)?;
        let start = domain.point(&raw.start)?;
        let mut layers = vec![BTreeMap::new(); raw.n_max + 1];
        for e in raw.entries {
            if e.n > raw.n_max || e.p > e.n {
                return Err(Error::Parse(format!("entry out of range: n={}, p={}", e.n, e.p)));
            }
            let end = domain.point(&e.end)?;
            let count: BigInt = e
                .count
                .parse()
                .map_err(|_| Error::Parse(format!("bad count {:?}", e.count)))?;
            layers[e.n].insert((end, e.p), count);
        }
        Ok(Self { domain, start, layers })
    }
}

/// Counts walks by dynamic programming over the standard step-set.
pub fn count_walks(domain: DomainSpec, start: &SimplexPoint, n_max: usize) -> Result<CountTable> {
    count_walks_with(domain, &StepSet::standard(domain.dim), start, n_max, DEFAULT_GUARD)
}

/// Counts walks using the given step-set; `guard` bounds the number of
/// `(point, n, p)` cells the table may need.
pub fn count_walks_with(
    domain: DomainSpec,
    stepset: &StepSet,
    start: &SimplexPoint,
    n_max: usize,
    guard: u128,
) -> Result<CountTable> {
    if stepset.dim != domain.dim {
        return Err(Error::Dimension {
            expected: domain.dim,
            found: stepset.dim,
        });
    }
    if !domain.contains(start) {
        return Err(Error::DomainMismatch {
            point: start.0.clone(),
            d: domain.dim,
            side: domain.side,
        });
    }
    let npts = domain.num_points().to_u128().unwrap_or(u128::MAX);
    let cells = npts.saturating_mul(((n_max as u128 + 1) * (n_max as u128 + 2)) / 2);
    if cells > guard {
        return Err(Error::ResourceGuard {
            required: cells,
            limit: guard,
        });
    }

    let points = domain.points();
    let index: BTreeMap<&SimplexPoint, usize> = points.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let moves: Vec<Vec<(usize, Sublattice)>> = points
        .iter()
        .map(|pt| {
            neighbors(pt, stepset)
                .into_iter()
                .map(|(q, tag)| (index[&q], tag))
                .collect()
        })
        .collect();

    // cur[point][p]
    let mut cur = vec![vec![BigInt::zero()]; points.len()];
    cur[index[start]][0] = BigInt::one();
    let mut layers = Vec::with_capacity(n_max + 1);
    let snapshot = |cur: &Vec<Vec<BigInt>>| {
        let mut layer = BTreeMap::new();
        for (i, row) in cur.iter().enumerate() {
            for (p, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    layer.insert((points[i].clone(), p), c.clone());
                }
            }
        }
        layer
    };
    layers.push(snapshot(&cur));
    for n in 1..=n_max {
        let mut next = vec![vec![BigInt::zero(); n + 1]; points.len()];
        for (i, row) in cur.iter().enumerate() {
            for (p, c) in row.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for &(j, tag) in &moves[i] {
                    let q = if tag == Sublattice::A { p + 1 } else { p };
                    next[j][q] += c;
                }
            }
        }
        cur = next;
        layers.push(snapshot(&cur));
    }
    Ok(CountTable {
        domain,
        start: start.clone(),
        layers,
    })
}

/// All `n`-step walks from `start` using steps admitted by `filter`, in
/// depth-first step-set order.
pub fn enumerate_walks(
    domain: DomainSpec,
    start: &SimplexPoint,
    n: usize,
    filter: SublatticeFilter,
    guard: u128,
) -> Result<Vec<LatticeWalk>> {
    let set = StepSet::standard(domain.dim);
    let table = count_walks_with(domain, &set, start, n, u128::MAX)?;
    let by_p = table.total_by_p(n);
    let expected: BigInt = match filter {
        SublatticeFilter::Both => by_p.iter().sum(),
        SublatticeFilter::AOnly => by_p[n].clone(),
        SublatticeFilter::BOnly => by_p[0].clone(),
    };
    let expected = expected.to_u128().unwrap_or(u128::MAX);
    if expected > guard {
        return Err(Error::ResourceGuard {
            required: expected,
            limit: guard,
        });
    }

    let allowed: Vec<usize> = (0..set.len())
        .filter(|&i| filter.admits(set.steps[i].tag))
        .collect();
    let mut out = Vec::with_capacity(expected as usize);
    let mut path = Vec::with_capacity(n);
    fn dfs(
        set: &StepSet,
        allowed: &[usize],
        pos: &SimplexPoint,
        remaining: usize,
        path: &mut Vec<usize>,
        emit: &mut dyn FnMut(&[usize]),
    ) {
        if remaining == 0 {
            emit(path);
            return;
        }
        for &s in allowed {
            if let Some(next) = set.apply(pos, s) {
                path.push(s);
                dfs(set, allowed, &next, remaining - 1, path, emit);
                path.pop();
            }
        }
    }
    dfs(&set, &allowed, start, n, &mut path, &mut |steps| {
        out.push(LatticeWalk {
            domain_dim: domain.dim,
            domain_side: domain.side,
            start: start.clone(),
            steps: steps.to_vec(),
        })
    });
    Ok(out)
}

/// Images of the walk's points as two directed walks in the strip
/// `0 ≤ y ≤ L`: the k-th point `(n_x, n_y, n_z)` gives `n_x` (lower) and
/// `n_x + n_y` (upper).
pub fn map_to_strip_pair(walk: &LatticeWalk) -> Result<(Vec<u32>, Vec<u32>)> {
    if walk.domain_dim != 2 {
        return Err(Error::Dimension {
            expected: 2,
            found: walk.domain_dim,
        });
    }
    Ok(walk
        .positions()
        .iter()
        .map(|p| (p.0[0], p.0[0] + p.0[1]))
        .unzip())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn neighbors_examples() {
        let tri = DomainSpec::triangle(1);
        let pt = tri.point(&[1, 0, 0]).unwrap();
        let nb = neighbors(&pt, &StepSet::standard(2));
        assert_eq!(
            nb,
            vec![
                (tri.point(&[0, 1, 0]).unwrap(), Sublattice::A),
                (tri.point(&[0, 0, 1]).unwrap(), Sublattice::B)
            ]
        );

        let centre = DomainSpec::triangle(3).point(&[1, 1, 1]).unwrap();
        assert_eq!(neighbors(&centre, &StepSet::standard(2)).len(), 6);

        let line = DomainSpec::line(2);
        let nb: Vec<_> = neighbors(&line.point(&[1, 1]).unwrap(), &StepSet::standard(1))
            .into_iter()
            .map(|(q, _)| q)
            .collect();
        assert_eq!(nb, vec![line.point(&[2, 0]).unwrap(), line.point(&[0, 2]).unwrap()]);
    }

    #[test]
    fn triangle_partition() {
        let set = StepSet::standard(2);
        assert_eq!(set.len(), 6);
        let a: Vec<_> = set
            .steps()
            .iter()
            .filter(|s| s.tag == Sublattice::A)
            .map(|s| s.delta.clone())
            .collect();
        assert_eq!(a.len(), 3);
        for d in TRIANGLE_A {
            assert!(a.contains(&d.to_vec()));
        }
        for s in set.steps() {
            assert_eq!(s.delta.iter().filter(|&&x| x == 1).count(), 1);
            assert_eq!(s.delta.iter().filter(|&&x| x == -1).count(), 1);
        }
        assert!(StepSet::standard(3).steps().iter().all(|s| s.tag == Sublattice::A));
    }

    #[test]
    fn point_counts() {
        for d in 1..=4 {
            for side in 0..=6 {
                let dom = DomainSpec::new(d, side).unwrap();
                assert_eq!(BigInt::from(dom.points().len()), dom.num_points());
            }
        }
        assert!(DomainSpec::new(0, 3).is_err());
        assert!(DomainSpec::triangle(2).point(&[1, 0, 0]).is_err());
    }

    #[test]
    fn count_examples() {
        let tri = DomainSpec::triangle(1);
        let t = count_walks(tri, &tri.corner(), 4).unwrap();
        assert_eq!(t.totals(), ints(&[1, 2, 4, 8, 16]));

        let tri = DomainSpec::triangle(2);
        let t = count_walks(tri, &tri.corner(), 3).unwrap();
        assert_eq!(t.totals(), ints(&[1, 2, 8, 24]));

        let tri = DomainSpec::triangle(3);
        let t = count_walks(tri, &tri.corner(), 4).unwrap();
        let a_only: Vec<_> = (0..=4).map(|n| t.total_by_p(n)[n].clone()).collect();
        assert_eq!(a_only, ints(&[1, 1, 2, 4, 8]));
    }

    #[test]
    fn table_shape_invariants() {
        let tri = DomainSpec::triangle(3);
        let start = tri.point(&[2, 1, 0]).unwrap();
        let t = count_walks(tri, &start, 6).unwrap();
        assert_eq!(t.layer(0).count(), 1);
        assert_eq!(t.get(0, &start, 0), BigInt::one());
        assert_eq!(t.total(1), BigInt::from(neighbors(&start, &StepSet::standard(2)).len()));
        for n in 0..=6 {
            for (_, p, c) in t.layer(n) {
                assert!(p <= n);
                assert!(*c > BigInt::zero());
            }
        }
    }

    #[test]
    fn start_outside_domain_rejected() {
        let tri = DomainSpec::triangle(2);
        let other = DomainSpec::triangle(3).corner();
        assert!(matches!(count_walks(tri, &other, 3), Err(Error::DomainMismatch { .. })));
    }

    #[test]
    fn guard_trips() {
        let tri = DomainSpec::triangle(4);
        let r = enumerate_walks(tri, &tri.corner(), 10, SublatticeFilter::Both, 1000);
        assert!(matches!(r, Err(Error::ResourceGuard { .. })));
        let r = count_walks_with(tri, &StepSet::standard(2), &tri.corner(), 100, 1000);
        assert!(matches!(r, Err(Error::ResourceGuard { .. })));
    }

    #[test]
    fn enumerate_examples() {
        let tri = DomainSpec::triangle(1);
        let c = tri.corner();
        let w0 = enumerate_walks(tri, &c, 0, SublatticeFilter::Both, DEFAULT_GUARD).unwrap();
        assert_eq!(w0.len(), 1);
        assert!(w0[0].is_empty());
        assert_eq!(enumerate_walks(tri, &c, 2, SublatticeFilter::Both, DEFAULT_GUARD).unwrap().len(), 4);
        let cyc = enumerate_walks(tri, &c, 3, SublatticeFilter::AOnly, DEFAULT_GUARD).unwrap();
        assert_eq!(cyc.len(), 1);
        let pos: Vec<Vec<u32>> = cyc[0].positions().iter().map(|p| p.coords().to_vec()).collect();
        assert_eq!(pos, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![1, 0, 0]]);
    }

    #[test]
    fn strip_pair_examples() {
        let tri = DomainSpec::triangle(3);
        let w = LatticeWalk::new(tri, tri.point(&[1, 1, 1]).unwrap(), vec![]).unwrap();
        assert_eq!(map_to_strip_pair(&w).unwrap(), (vec![1], vec![2]));

        let tri = DomainSpec::triangle(1);
        let set = StepSet::standard(2);
        let s1 = set.index_of(&[-1, 1, 0]).unwrap();
        let s2 = set.index_of(&[0, -1, 1]).unwrap();
        let w = LatticeWalk::new(tri, tri.corner(), vec![s1, s2]).unwrap();
        assert_eq!(map_to_strip_pair(&w).unwrap(), (vec![1, 0, 0], vec![1, 1, 0]));

        let line = DomainSpec::line(2);
        let w = LatticeWalk::new(line, line.corner(), vec![]).unwrap();
        assert!(matches!(map_to_strip_pair(&w), Err(Error::Dimension { .. })));
    }

    #[test]
    fn walk_construction_checks_domain() {
        let tri = DomainSpec::triangle(1);
        let set = StepSet::standard(2);
        let bad = set.index_of(&[1, 0, -1]).unwrap();
        assert!(LatticeWalk::new(tri, tri.corner(), vec![bad]).is_err());
    }

    #[test]
    fn json_layout() {
        let tri = DomainSpec::triangle(1);
        let t = count_walks(tri, &tri.corner(), 1).unwrap();
        let v = t.to_json();
        assert_eq!(
            v.to_string(),
            r#"{"d":2,"L":1,"start":[1,0,0],"n_max":1,"entries":[{"n":0,"end":[1,0,0],"p":0,"count":"1"},{"n":1,"end":[0,0,1],"p":0,"count":"1"},{"n":1,"end":[0,1,0],"p":1,"count":"1"}]}"#
        );
        assert_eq!(CountTable::from_json(&v).unwrap(), t);
    }
}
