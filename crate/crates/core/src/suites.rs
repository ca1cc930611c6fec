//! Verification suites: each compares a closed form or bijection with
//! independently computed counts over a grid of small parameters.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::contfrac::{verify_cf_identity, verify_convergent_agreement, verify_induction_step};
use crate::error::{Error, Result};
use crate::formulas::{
    centre_side_gf, check_functional_equation, check_kernel_invariance, check_linear_combination,
    line_full_gf_check, line_total_gf, triangle_total_gf, EvalPoint,
};
use crate::lattice::{count_walks, count_walks_with, enumerate_walks, DomainSpec, StepSet, SublatticeFilter};
use crate::paths::{
    ballot3_counts, ballot_to_walk, enumerate_ballot_paths, motzkin_strip_count, motzkin_strip_sequence,
    walk_to_ballot, Colouring, MotzkinStripSpec,
};
use crate::report::VerificationReport;
use crate::series::json::JsonCoeff;
use crate::series::TruncSeries;
use crate::Bivar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Theorem4,
    Prop1,
    Cor2,
    Cor5,
    Prop5,
    Prop6,
    Cf,
    Kernel,
    Funceq,
    All,
}

impl Suite {
    /// Every suite except `All`, in run order.
    pub const EACH: [Suite; 9] = [
        Suite::Theorem4,
        Suite::Prop1,
        Suite::Cor2,
        Suite::Cor5,
        Suite::Prop5,
        Suite::Prop6,
        Suite::Cf,
        Suite::Kernel,
        Suite::Funceq,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Theorem4 => "theorem4",
            Suite::Prop1 => "prop1",
            Suite::Cor2 => "cor2",
            Suite::Cor5 => "cor5",
            Suite::Prop5 => "prop5",
            Suite::Prop6 => "prop6",
            Suite::Cf => "cf",
            Suite::Kernel => "kernel",
            Suite::Funceq => "funceq",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .iter()
            .chain([Suite::All].iter())
            .copied()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite '{s}'")))
    }
}

/// Grid bounds; `None` picks the suite's default.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Grid {
    pub h_max: Option<u32>,
    pub n_max: Option<usize>,
    pub l_max: Option<u32>,
    pub order: Option<usize>,
}

fn compare<R: JsonCoeff>(
    check: &str,
    params: Value,
    formula: &TruncSeries<R>,
    dp: &TruncSeries<R>,
) -> VerificationReport {
    let discrepancy = formula
        .first_mismatch(dp)
        .map(|n| json!({"n": n, "formula": formula.coeff(n).to_json(), "dp": dp.coeff(n).to_json()}));
    VerificationReport::from_outcome(check, params, discrepancy)
}

fn compare_vecs(check: &str, params: Value, n: usize, expected: &[BigInt], found: &[BigInt]) -> Option<VerificationReport> {
    (expected != found).then(|| {
        let show = |v: &[BigInt]| v.iter().map(|c| c.to_string()).collect::<Vec<_>>();
        VerificationReport::fail(
            check,
            params,
            json!({"n": n, "expected": show(expected), "found": show(found)}),
        )
    })
}

/// Symbolic triangle total from `(u,v,w)` against DP counts.
pub fn check_theorem4(u: u32, v: u32, w: u32, order: usize) -> Result<VerificationReport> {
    let domain = DomainSpec::triangle(u + v + w);
    let table = count_walks(domain, &domain.point(&[u, v, w])?, order)?;
    let formula = triangle_total_gf(u, v, w, order, &Bivar::weight_sum());
    Ok(compare(
        "theorem4",
        json!({"u": u, "v": v, "w": w, "order": order}),
        &formula,
        &table.weighted_series(),
    ))
}

/// Line totals from `(u,v)` against DP counts.
pub fn check_cor2(u: u32, v: u32, order: usize) -> Result<VerificationReport> {
    let domain = DomainSpec::line(u + v);
    let table = count_walks(domain, &domain.point(&[u, v])?, order)?;
    Ok(compare(
        "cor2",
        json!({"u": u, "v": v, "order": order}),
        &line_total_gf::<BigInt>(u, v, order),
        &table.total_series(),
    ))
}

/// Corner walks on side `2H+1` (odd) or `2H` (even), split by `p`,
/// against two-coloured Motzkin paths in a strip of height `H`.
pub fn check_cor5(height: u32, odd: bool, n_max: usize) -> Result<VerificationReport> {
    let side = 2 * height + u32::from(odd);
    let domain = DomainSpec::triangle(side);
    let table = count_walks(domain, &domain.corner(), n_max)?;
    let spec = MotzkinStripSpec::for_triangle_side(side, Colouring::TwoColoured);
    let params = json!({"H": height, "L": side, "n_max": n_max});
    for n in 0..=n_max {
        if let Some(r) = compare_vecs("cor5", params.clone(), n, &motzkin_strip_count(&spec, n), &table.total_by_p(n)) {
            return Ok(r);
        }
    }
    Ok(VerificationReport::pass("cor5", params))
}

/// A-only corner walks, counted by a DP restricted to the A steps,
/// against uncoloured strip Motzkin paths.
pub fn check_cor5_q0(height: u32, odd: bool, n_max: usize) -> Result<VerificationReport> {
    let side = 2 * height + u32::from(odd);
    let domain = DomainSpec::triangle(side);
    let a_only = StepSet::standard(2).restricted(SublatticeFilter::AOnly);
    let table = count_walks_with(domain, &a_only, &domain.corner(), n_max, u128::MAX)?;
    let motzkin = motzkin_strip_sequence(height, !odd, n_max);
    let params = json!({"H": height, "L": side, "n_max": n_max});
    let found = table.totals();
    Ok(match compare_vecs("cor5_q0", params.clone(), n_max, &motzkin, &found) {
        Some(r) => r,
        None => VerificationReport::pass("cor5_q0", params),
    })
}

/// Walks from the centre `(u,u,u)` ending on `i₃ = 0`, symbolic weights.
pub fn check_prop5(u: u32, order: usize) -> Result<VerificationReport> {
    let domain = DomainSpec::triangle(3 * u);
    let table = count_walks(domain, &domain.point(&[u, u, u])?, order)?;
    let dp = table.weighted_series_where(|e| e.coords()[2] == 0);
    Ok(compare(
        "prop5",
        json!({"u": u, "order": order}),
        &centre_side_gf(u, order, &Bivar::weight_sum()),
        &dp,
    ))
}

/// Exhaustive check of the Ballot bijection for side `L` and lengths
/// `0..=n_max`: injectivity, exact image, both roundtrips and the DP count.
pub fn check_prop6(side: u32, n_max: usize, guard: u128) -> Result<VerificationReport> {
    let domain = DomainSpec::triangle(side);
    let dp = ballot3_counts(side, n_max);
    let mut walks_seen = 0usize;
    for (n, expected) in dp.iter().enumerate() {
        let params = || json!({"L": side, "n_max": n_max});
        let fail = |what: &str| {
            Ok(VerificationReport::fail(
                "prop6",
                params(),
                json!({"n": n, "failure": what}),
            ))
        };
        let walks = enumerate_walks(domain, &domain.corner(), n, SublatticeFilter::AOnly, guard)?;
        let ballots = enumerate_ballot_paths(side, n);
        let mut image = BTreeSet::new();
        for w in &walks {
            let b = walk_to_ballot(w)?;
            if ballot_to_walk(&b, side)? != *w {
                return fail("walk roundtrip");
            }
            if !image.insert(b) {
                return fail("not injective");
            }
        }
        if !image.iter().eq(ballots.iter().collect::<BTreeSet<_>>()) {
            return fail("image differs from the Ballot list");
        }
        for b in &ballots {
            if walk_to_ballot(&ballot_to_walk(b, side)?)? != *b {
                return fail("Ballot roundtrip");
            }
        }
        if BigInt::from(walks.len()) != *expected {
            return fail("ballot3_count differs");
        }
        walks_seen += walks.len();
    }
    Ok(VerificationReport::pass(
        "prop6",
        json!({"L": side, "n_max": n_max, "walks": walks_seen}),
    ))
}

/// Nonzero sample points for the kernel checks.
pub fn kernel_samples(dim: usize) -> Vec<EvalPoint> {
    let raw: &[&[(i64, i64)]] = if dim == 1 {
        &[&[(2, 1), (3, 1)], &[(1, 2), (-5, 1)], &[(-1, 1), (7, 3)]]
    } else {
        &[
            &[(2, 1), (3, 1), (5, 1)],
            &[(1, 2), (-3, 1), (7, 1)],
            &[(-1, 1), (2, 3), (1, 5)],
        ]
    };
    raw.iter()
        .map(|pt| {
            let coords = pt
                .iter()
                .map(|&(a, b)| num_rational::BigRational::new(BigInt::from(a), BigInt::from(b)))
                .collect();
            EvalPoint::new(coords).expect("samples are nonzero")
        })
        .collect()
}

fn starts(domain: DomainSpec) -> Vec<Vec<u32>> {
    domain.points().into_iter().map(|p| p.coords().to_vec()).collect()
}

/// Runs one suite (or all of them) and returns every report, in a fixed
/// order.
pub fn run_suite(suite: Suite, grid: &Grid, guard: u128) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    match suite {
        Suite::All => {
            for s in Suite::EACH {
                out.extend(run_suite(s, grid, guard)?);
            }
        }
        Suite::Theorem4 => {
            let l_max = grid.l_max.unwrap_or(5);
            let order = grid.n_max.unwrap_or(14);
            for side in 0..=l_max {
                for s in starts(DomainSpec::triangle(side)) {
                    out.push(check_theorem4(s[0], s[1], s[2], order)?);
                    out.push(check_linear_combination(s[0], s[1], s[2], order)?);
                }
            }
        }
        Suite::Prop1 | Suite::Cor2 => {
            let l_max = grid.l_max.unwrap_or(6);
            let order = grid.n_max.unwrap_or(20);
            for side in 0..=l_max {
                for u in 0..=side {
                    out.push(if suite == Suite::Prop1 {
                        line_full_gf_check(u, side - u, order)?
                    } else {
                        check_cor2(u, side - u, order)?
                    });
                }
            }
        }
        Suite::Cor5 => {
            let h_max = grid.h_max.unwrap_or(4);
            let n_max = grid.n_max.unwrap_or(14);
            for h in 0..=h_max {
                for odd in [false, true] {
                    out.push(check_cor5(h, odd, n_max)?);
                    out.push(check_cor5_q0(h, odd, n_max)?);
                }
            }
        }
        Suite::Prop5 => {
            let u_max = grid.l_max.unwrap_or(3);
            let order = grid.n_max.unwrap_or(12);
            for u in 0..=u_max {
                out.push(check_prop5(u, order)?);
            }
        }
        Suite::Prop6 => {
            let l_max = grid.l_max.unwrap_or(4);
            let n_max = grid.n_max.unwrap_or(12);
            for side in 0..=l_max {
                out.push(check_prop6(side, n_max, guard)?);
            }
        }
        Suite::Cf => {
            let l_max = grid.l_max.unwrap_or(10);
            let order = grid.order.unwrap_or(30);
            for side in 0..=l_max {
                out.push(verify_cf_identity(side, order));
            }
            for side in 0..=l_max.saturating_sub(2) {
                out.push(verify_induction_step(side, order));
                out.push(verify_convergent_agreement(side, order));
            }
        }
        Suite::Kernel => {
            for dim in [1, 2] {
                out.push(check_kernel_invariance(dim, &kernel_samples(dim))?);
            }
        }
        Suite::Funceq => {
            let l_max = grid.l_max.unwrap_or(4);
            let order = grid.n_max.or(grid.order).unwrap_or(8);
            for dim in [1, 2] {
                for side in 0..=l_max {
                    let domain = DomainSpec::new(dim, side)?;
                    for start in domain.points() {
                        out.push(check_functional_equation(domain, &start, order)?);
                    }
                }
            }
        }
    }
    Ok(out)
}
