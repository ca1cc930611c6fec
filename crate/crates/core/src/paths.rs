//! Comparison families: Motzkin paths in a strip, three-candidate Ballot
//! paths with bounded excess, and the bijection between Ballot paths and
//! corner walks on the A-sublattice.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::lattice::{binomial, DomainSpec, LatticeWalk, StepSet, Sublattice};

// ---------------------------------------------------------------------------
// Motzkin paths
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Colouring {
    Uncoloured,
    TwoColoured,
}

/// Paths start and end at height 0 and stay within `[0, height]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MotzkinStripSpec {
    pub height: u32,
    pub forbid_top_horizontal: bool,
    pub colouring: Colouring,
}

impl MotzkinStripSpec {
    pub fn new(height: u32, forbid_top_horizontal: bool, colouring: Colouring) -> Self {
        Self {
            height,
            forbid_top_horizontal,
            colouring,
        }
    }

    /// The strip matching corner walks on a triangle of side `L`:
    /// height `⌊L/2⌋`, top horizontal steps forbidden when `L` is even.
    pub fn for_triangle_side(side: u32, colouring: Colouring) -> Self {
        Self::new(side / 2, side.is_multiple_of(2), colouring)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MotzkinStep {
    Up,
    Down,
    Horizontal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Colour {
    A,
    B,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MotzkinPath {
    steps: Vec<(MotzkinStep, Option<Colour>)>,
}

impl MotzkinPath {
    pub fn new(steps: Vec<(MotzkinStep, Option<Colour>)>, spec: &MotzkinStripSpec) -> Result<Self> {
        let path = Self { steps };
        if !path.is_valid(spec) {
            return Err(Error::Precondition("path violates the strip constraints".into()));
        }
        Ok(path)
    }

    pub fn steps(&self) -> &[(MotzkinStep, Option<Colour>)] {
        &self.steps
    }

    pub fn is_valid(&self, spec: &MotzkinStripSpec) -> bool {
        let mut h: i64 = 0;
        for &(step, colour) in &self.steps {
            if (spec.colouring == Colouring::TwoColoured) != colour.is_some() {
                return false;
            }
            match step {
                MotzkinStep::Up => h += 1,
                MotzkinStep::Down => h -= 1,
                MotzkinStep::Horizontal => {
                    if spec.forbid_top_horizontal && h == spec.height as i64 {
                        return false;
                    }
                }
            }
            if h < 0 || h > spec.height as i64 {
                return false;
            }
        }
        h == 0
    }

    pub fn colour_count(&self, c: Colour) -> usize {
        self.steps.iter().filter(|(_, col)| *col == Some(c)).count()
    }

    /// `"U"`, `"D"`, `"H"`, suffixed with the colour when present.
    pub fn to_strings(&self) -> Vec<String> {
        self.steps
            .iter()
            .map(|(s, c)| {
                let base = match s {
                    MotzkinStep::Up => "U",
                    MotzkinStep::Down => "D",
                    MotzkinStep::Horizontal => "H",
                };
                match c {
                    None => base.to_string(),
                    Some(Colour::A) => format!("{base}A"),
                    Some(Colour::B) => format!("{base}B"),
                }
            })
            .collect()
    }
}

/// Uncoloured strip counts `m(0..=n_max)` by the transfer recurrence over
/// heights.
pub fn motzkin_strip_sequence(height: u32, forbid_top_horizontal: bool, n_max: usize) -> Vec<BigInt> {
    let levels = height as usize + 1;
    let mut cur = vec![BigInt::zero(); levels];
    cur[0] = BigInt::one();
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(cur[0].clone());
    for _ in 0..n_max {
        let mut next = vec![BigInt::zero(); levels];
        for (h, c) in cur.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if h + 1 < levels {
                next[h + 1] += c;
            }
            if h > 0 {
                next[h - 1] += c;
            }
            if !(forbid_top_horizontal && h == levels - 1) {
                next[h] += c;
            }
        }
        cur = next;
        out.push(cur[0].clone());
    }
    out
}

/// Length-`n` paths counted by number of A-coloured steps `p`.
///
/// Two-coloured: entry `p` is `binomial(n, p)·m(n)`, since each step is
/// coloured independently. Uncoloured: a single entry, the plain count.
pub fn motzkin_strip_count(spec: &MotzkinStripSpec, n: usize) -> Vec<BigInt> {
    let m = motzkin_strip_sequence(spec.height, spec.forbid_top_horizontal, n)
        .pop()
        .unwrap();
    match spec.colouring {
        Colouring::Uncoloured => vec![m],
        Colouring::TwoColoured => (0..=n as u64).map(|p| binomial(n as u64, p) * &m).collect(),
    }
}

/// Exhaustive list of length-`n` paths, for use as an oracle.
pub fn enumerate_motzkin_paths(spec: &MotzkinStripSpec, n: usize, guard: u128) -> Result<Vec<MotzkinPath>> {
    let expected: BigInt = motzkin_strip_count(spec, n).iter().sum();
    let expected = expected.to_u128().unwrap_or(u128::MAX);
    if expected > guard {
        return Err(Error::ResourceGuard {
            required: expected,
            limit: guard,
        });
    }
    let top = spec.height as i64;
    let mut shapes: Vec<Vec<MotzkinStep>> = Vec::new();
    fn rec(
        h: i64,
        top: i64,
        forbid: bool,
        remaining: usize,
        path: &mut Vec<MotzkinStep>,
        out: &mut Vec<Vec<MotzkinStep>>,
    ) {
        if h as usize > remaining {
            return;
        }
        if remaining == 0 {
            out.push(path.clone());
            return;
        }
        for step in [MotzkinStep::Up, MotzkinStep::Down, MotzkinStep::Horizontal] {
            let next = match step {
                MotzkinStep::Up => h + 1,
                MotzkinStep::Down => h - 1,
                MotzkinStep::Horizontal => {
                    if forbid && h == top {
                        continue;
                    }
                    h
                }
            };
            if next < 0 || next > top {
                continue;
            }
            path.push(step);
            rec(next, top, forbid, remaining - 1, path, out);
            path.pop();
        }
    }
    rec(0, top, spec.forbid_top_horizontal, n, &mut Vec::new(), &mut shapes);

    let mut out = Vec::with_capacity(expected as usize);
    for shape in shapes {
        match spec.colouring {
            Colouring::Uncoloured => out.push(MotzkinPath {
                steps: shape.into_iter().map(|s| (s, None)).collect(),
            }),
            Colouring::TwoColoured => {
                for mask in 0u64..(1u64 << n) {
                    let steps = shape
                        .iter()
                        .enumerate()
                        .map(|(i, &s)| {
                            let c = if mask >> i & 1 == 0 { Colour::A } else { Colour::B };
                            (s, Some(c))
                        })
                        .collect();
                    out.push(MotzkinPath { steps });
                }
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Ballot paths
// ---------------------------------------------------------------------------

/// Steps `(1,1)`, `(1,-1)`, `(1,0)`: votes for the first, second and third
/// candidate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BallotStep {
    Up,
    Down,
    Flat,
}

impl BallotStep {
    pub fn symbol(self) -> &'static str {
        match self {
            BallotStep::Up => "+",
            BallotStep::Down => "-",
            BallotStep::Flat => "0",
        }
    }
}

/// A three-candidate Ballot path: after every prefix
/// `#Up ≥ #Down ≥ #Flat`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BallotPath {
    steps: Vec<BallotStep>,
}

impl BallotPath {
    /// Validates the prefix order and the excess bound
    /// `#Up - #Flat ≤ excess` after every prefix.
    pub fn new(steps: Vec<BallotStep>, excess: u32) -> Result<Self> {
        let path = Self { steps };
        match path.max_excess() {
            None => Err(Error::Precondition("prefix counts are not weakly decreasing".into())),
            Some(e) if e > excess => Err(Error::Precondition(format!(
                "excess {e} exceeds bound {excess}"
            ))),
            Some(_) => Ok(path),
        }
    }

    pub fn steps(&self) -> &[BallotStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Largest prefix value of `#Up - #Flat`, or `None` if the prefix
    /// order fails somewhere.
    pub fn max_excess(&self) -> Option<u32> {
        let (mut up, mut down, mut flat) = (0u32, 0u32, 0u32);
        let mut best = 0;
        for s in &self.steps {
            match s {
                BallotStep::Up => up += 1,
                BallotStep::Down => down += 1,
                BallotStep::Flat => flat += 1,
            }
            if down > up || flat > down {
                return None;
            }
            best = best.max(up - flat);
        }
        Some(best)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.steps.iter().map(|s| s.symbol().to_string()).collect()
    }
}

/// Ballot counts for lengths `0..=n_max` with excess at most `excess`.
///
/// The DP state is `(#Up - #Down, #Down - #Flat)`; the excess is their sum.
pub fn ballot3_counts(excess: u32, n_max: usize) -> Vec<BigInt> {
    let bound = excess as usize;
    // state[a][b], a + b <= bound
    let mut cur = vec![vec![BigInt::zero(); bound + 1]; bound + 1];
    cur[0][0] = BigInt::one();
    let mut out = vec![BigInt::one()];
    for _ in 0..n_max {
        let mut next = vec![vec![BigInt::zero(); bound + 1]; bound + 1];
        for a in 0..=bound {
            for b in 0..=bound - a {
                let c = &cur[a][b];
                if c.is_zero() {
                    continue;
                }
                if a + b < bound {
                    next[a + 1][b] += c;
                }
                if a > 0 {
                    next[a - 1][b + 1] += c;
                }
                if b > 0 {
                    next[a][b - 1] += c;
                }
            }
        }
        cur = next;
        out.push(cur.iter().flatten().sum());
    }
    out
}

pub fn ballot3_count(excess: u32, n: usize) -> BigInt {
    ballot3_counts(excess, n).pop().unwrap()
}

/// All Ballot paths of length `n` with excess at most `excess`, in
/// lexicographic step order.
pub fn enumerate_ballot_paths(excess: u32, n: usize) -> Vec<BallotPath> {
    fn rec(
        counts: [u32; 3],
        excess: u32,
        remaining: usize,
        path: &mut Vec<BallotStep>,
        out: &mut Vec<BallotPath>,
    ) {
        if remaining == 0 {
            out.push(BallotPath { steps: path.clone() });
            return;
        }
        let [up, down, flat] = counts;
        if up - flat < excess {
            path.push(BallotStep::Up);
            rec([up + 1, down, flat], excess, remaining - 1, path, out);
            path.pop();
        }
        if down < up {
            path.push(BallotStep::Down);
            rec([up, down + 1, flat], excess, remaining - 1, path, out);
            path.pop();
        }
        if flat < down {
            path.push(BallotStep::Flat);
            rec([up, down, flat + 1], excess, remaining - 1, path, out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    rec([0, 0, 0], excess, n, &mut Vec::new(), &mut out);
    out
}

// ---------------------------------------------------------------------------
// Bijection with corner walks
// ---------------------------------------------------------------------------

/// A-sublattice step vectors in Ballot order: the images of Up, Down, Flat.
/// From the corner `(L,0,0)` a walk with `a` Ups, `b` Downs and `c` Flats
/// sits at `(L - a + c, a - b, b - c)`, so staying in the triangle is
/// exactly the Ballot order plus the excess bound `a - c ≤ L`.
const BALLOT_STEP_VECTORS: [[i32; 3]; 3] = [[-1, 1, 0], [0, -1, 1], [1, 0, -1]];

fn ballot_step_for(delta: &[i32]) -> Option<BallotStep> {
    let i = BALLOT_STEP_VECTORS.iter().position(|v| v[..] == *delta)?;
    Some([BallotStep::Up, BallotStep::Down, BallotStep::Flat][i])
}

/// Maps a corner walk on the A-sublattice to its Ballot path.
pub fn walk_to_ballot(walk: &LatticeWalk) -> Result<BallotPath> {
    let domain = walk.domain();
    if domain.dim() != 2 {
        return Err(Error::Dimension {
            expected: 2,
            found: domain.dim(),
        });
    }
    if *walk.start() != domain.corner() {
        return Err(Error::Precondition(format!(
            "walk starts at {}, not at the corner {}",
            walk.start(),
            domain.corner()
        )));
    }
    let set = StepSet::standard(2);
    let positions = walk.positions();
    let mut steps = Vec::with_capacity(walk.len());
    for (k, pair) in positions.windows(2).enumerate() {
        let delta: Vec<i32> = pair[1]
            .coords()
            .iter()
            .zip(pair[0].coords())
            .map(|(&b, &a)| b as i32 - a as i32)
            .collect();
        let tag = set.steps()[walk.steps()[k]].tag;
        if tag != Sublattice::A {
            return Err(Error::Precondition(format!("step {k} is not on the A-sublattice")));
        }
        steps.push(ballot_step_for(&delta).expect("every A-step has a Ballot image"));
    }
    BallotPath::new(steps, domain.side())
}

/// Inverse of [`walk_to_ballot`] for a triangle of side `side`.
pub fn ballot_to_walk(path: &BallotPath, side: u32) -> Result<LatticeWalk> {
    match path.max_excess() {
        Some(e) if e <= side => {}
        Some(e) => {
            return Err(Error::Precondition(format!("excess {e} exceeds side {side}")));
        }
        None => return Err(Error::Precondition("not a Ballot path".into())),
    }
    let domain = DomainSpec::triangle(side);
    let set = StepSet::standard(2);
    let idx = |s: BallotStep| {
        let v = match s {
            BallotStep::Up => BALLOT_STEP_VECTORS[0],
            BallotStep::Down => BALLOT_STEP_VECTORS[1],
            BallotStep::Flat => BALLOT_STEP_VECTORS[2],
        };
        set.index_of(&v).expect("standard set contains every exchange")
    };
    LatticeWalk::new(domain, domain.corner(), path.steps.iter().map(|&s| idx(s)).collect())
}
