//! Closed-form generating functions for the line and triangle models,
//! expanded as truncated series, and checks of the functional equations
//! and kernel symmetries they come from.
//!
//! Line model: `p = t(1 + p²)`. Triangle model: `p = s(1 + p + p²)`,
//! `s = (α+β)t`. Triangle formulas are generic over the coefficient ring
//! and take the value of `α+β` in that ring, so the same code expands them
//! symbolically (over [`BivarPoly`]) or at numeric weights.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::lattice::{count_walks, CountTable, DomainSpec, SimplexPoint};
use crate::report::VerificationReport;
use crate::series::json::{rational_to_string, JsonCoeff};
use crate::series::{line_kernel_root, triangle_kernel_root, BivarPoly, CoeffRing, LaurentPoly, TruncSeries};

type Q = BigRational;

fn one_minus<R: CoeffRing>(a: &TruncSeries<R>) -> TruncSeries<R> {
    &TruncSeries::one(a.order()) - a
}

/// `1 - p^k`
fn one_minus_pow<R: CoeffRing>(p: &TruncSeries<R>, k: u32) -> TruncSeries<R> {
    one_minus(&p.pow(k))
}

fn one_plus_pow<R: CoeffRing>(p: &TruncSeries<R>, k: u32) -> TruncSeries<R> {
    &TruncSeries::one(p.order()) + &p.pow(k)
}

fn div<R: CoeffRing>(num: &TruncSeries<R>, den: &TruncSeries<R>) -> TruncSeries<R> {
    num.trunc_div(den)
        .expect("denominators here are 1 + O(t)")
}

// ---------------------------------------------------------------------------
// Line model
// ---------------------------------------------------------------------------

/// `G(1,1;t)` for the line model started at `(u, v)`:
/// `(1+p²)(1-p^{u+1})(1-p^{v+1}) / ((1-p)²(1+p^{u+v+2}))`.
pub fn line_total_gf<R: CoeffRing>(u: u32, v: u32, order: usize) -> TruncSeries<R> {
    let p = line_kernel_root::<R>(order);
    let num = one_plus_pow(&p, 2)
        .trunc_mul(&one_minus_pow(&p, u + 1))
        .trunc_mul(&one_minus_pow(&p, v + 1));
    let den = one_minus(&p).pow(2).trunc_mul(&one_plus_pow(&p, u + v + 2));
    div(&num, &den)
}

/// `G(1,0)` and `G(0,1)`: walks ending at `(L,0)` and at `(0,L)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryGfs<R> {
    pub g10: TruncSeries<R>,
    pub g01: TruncSeries<R>,
}

/// `t·G(1,0) = p^{v+1}(1-p^{2u+2}) / (1-p^{2u+2v+4})` and symmetrically
/// for `G(0,1)`; the division by `t` is an index shift.
pub fn line_boundary_gfs<R: CoeffRing>(u: u32, v: u32, order: usize) -> BoundaryGfs<R> {
    let (t_g10, t_g01) = line_boundary_times_t::<R>(u, v, order + 1);
    let shift = |s: TruncSeries<R>| s.shift_down(1).expect("t·G has zero constant term");
    BoundaryGfs {
        g10: shift(t_g10),
        g01: shift(t_g01),
    }
}

/// `(t·G(1,0), t·G(0,1))` to the given order.
fn line_boundary_times_t<R: CoeffRing>(u: u32, v: u32, order: usize) -> (TruncSeries<R>, TruncSeries<R>) {
    let p = line_kernel_root::<R>(order);
    let den = one_minus_pow(&p, 2 * u + 2 * v + 4);
    let a = div(&p.pow(v + 1).trunc_mul(&one_minus_pow(&p, 2 * u + 2)), &den);
    let b = div(&p.pow(u + 1).trunc_mul(&one_minus_pow(&p, 2 * v + 2)), &den);
    (a, b)
}

/// `G(ξ, 1; t)` from the full line-model formula, over ℚ.
///
/// The prefactor `1/(1 - (x/y + y/x)/(p + 1/p))` is multiplied through by
/// `p` to become `(1+p²)/(1+p² - p(ξ + 1/ξ))`.
pub fn line_full_gf_at(u: u32, v: u32, xi: &Q, order: usize) -> Result<TruncSeries<Q>> {
    if xi.is_zero() {
        return Err(Error::ZeroCoordinate);
    }
    let side = u + v;
    let p = line_kernel_root::<Q>(order);
    let one_p2 = one_plus_pow(&p, 2);
    let pref_den = &one_p2 - &p.scale(&(xi + xi.recip()));
    let prefactor = one_p2.trunc_mul(&pref_den.trunc_inv()?);
    let (a, b) = line_boundary_times_t::<Q>(u, v, order);
    let bracket = &(&TruncSeries::constant(xi.pow_u32(u), order) - &a.scale(&xi.pow_u32(side + 1)))
        - &b.scale(&xi.recip());
    Ok(prefactor.trunc_mul(&bracket))
}

/// `Σ_e C_n(e) ξ^{i₁}` for each n: the endpoint-resolved counts evaluated
/// at `(x, y) = (ξ, 1)`.
fn dp_line_eval(table: &CountTable, xi: &Q) -> TruncSeries<Q> {
    let coeffs = (0..=table.n_max())
        .map(|n| {
            table
                .endpoint_totals(n)
                .iter()
                .fold(Q::zero(), |acc, (e, c)| {
                    acc + Q::from_integer(c.clone()) * xi.pow_u32(e.coords()[0])
                })
        })
        .collect();
    TruncSeries::from_coeffs(coeffs)
}

/// 2, 3, 5, 7, 11, …
fn primes() -> impl Iterator<Item = u64> {
    (2u64..).filter(|&n| (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

/// Compares the full line-model `G(x,y;t)` with DP counts at `L+1`
/// distinct points `(ξ, 1)`. Every t-coefficient is homogeneous of degree
/// `L` in `x, y`, so these samples determine it.
pub fn line_full_gf_check(u: u32, v: u32, order: usize) -> Result<VerificationReport> {
    let side = u + v;
    let domain = DomainSpec::line(side);
    let table = count_walks(domain, &domain.point(&[u, v])?, order)?;
    let mut used = Vec::new();
    let mut candidates = primes();
    let mut discrepancy = None;
    while used.len() < side as usize + 1 {
        let xi_int = candidates.next().expect("infinitely many primes");
        let xi = Q::from_integer(BigInt::from(xi_int));
        let formula = match line_full_gf_at(u, v, &xi, order) {
            Ok(f) => f,
            Err(Error::NonUnitConstant) => continue,
            Err(e) => return Err(e),
        };
        used.push(xi_int);
        let dp = dp_line_eval(&table, &xi);
        if let Some(n) = formula.first_mismatch(&dp) {
            discrepancy = Some(json!({
                "xi": xi_int,
                "n": n,
                "formula": rational_to_string(formula.coeff(n)),
                "dp": rational_to_string(dp.coeff(n)),
            }));
            break;
        }
    }
    Ok(VerificationReport::from_outcome(
        "prop1",
        json!({"u": u, "v": v, "order": order, "points": used}),
        discrepancy,
    ))
}

// ---------------------------------------------------------------------------
// Triangle model
// ---------------------------------------------------------------------------

/// `G(1,1,1;t)` for walks from `(u,v,w)` with free endpoint:
/// `(1-p³)(1-p^{u+1})(1-p^{v+1})(1-p^{w+1}) / ((1-p)³(1-p^{u+v+w+3}))`.
pub fn triangle_total_gf<R: CoeffRing>(u: u32, v: u32, w: u32, order: usize, weight_sum: &R) -> TruncSeries<R> {
    let p = triangle_kernel_root(weight_sum, order);
    let num = one_minus_pow(&p, 3)
        .trunc_mul(&one_minus_pow(&p, u + 1))
        .trunc_mul(&one_minus_pow(&p, v + 1))
        .trunc_mul(&one_minus_pow(&p, w + 1));
    let den = one_minus(&p).pow(3).trunc_mul(&one_minus_pow(&p, u + v + w + 3));
    div(&num, &den)
}

/// Walks from the corner `(L,0,0)`:
/// `(1-p³)(1-p^{1+L}) / ((1-p)(1-p^{3+L}))`.
pub fn corner_gf<R: CoeffRing>(side: u32, order: usize, weight_sum: &R) -> TruncSeries<R> {
    let p = triangle_kernel_root(weight_sum, order);
    let num = one_minus_pow(&p, 3).trunc_mul(&one_minus_pow(&p, side + 1));
    let den = one_minus(&p).trunc_mul(&one_minus_pow(&p, side + 3));
    div(&num, &den)
}

/// Walks from the centre `(u,u,u)` ending on the side `i₃ = 0`:
/// `p^u (1-p³)(1-p^{u+1}) / ((1-p)(1-p^{3u+3}))`.
pub fn centre_side_gf<R: CoeffRing>(u: u32, order: usize, weight_sum: &R) -> TruncSeries<R> {
    let p = triangle_kernel_root(weight_sum, order);
    let num = p
        .pow(u)
        .trunc_mul(&one_minus_pow(&p, 3))
        .trunc_mul(&one_minus_pow(&p, u + 1));
    let den = one_minus(&p).trunc_mul(&one_minus_pow(&p, 3 * u + 3));
    div(&num, &den)
}

fn series_discrepancy<R: JsonCoeff>(n: usize, formula: &R, dp: &R) -> Value {
    json!({"n": n, "formula": formula.to_json(), "dp": dp.to_json()})
}

/// Checks the boundary-sum identity obtained by combining the six kernel
/// substitutions,
/// `(α+β)t[G(0,1,1)+G(1,0,1)+G(1,1,0)]
///   = (p^{u+1}+p^{v+1}+p^{w+1} - p^{2+L}(p^{-u}+p^{-v}+p^{-w})) / (1-p^{3+L})`,
/// and the evaluation of the functional equation at `(1,1,1)`,
/// `(1-3(α+β)t)G(1,1,1) = 1 - (α+β)t[…]`, against DP series.
pub fn check_linear_combination(u: u32, v: u32, w: u32, order: usize) -> Result<VerificationReport> {
    let side = u + v + w;
    let domain = DomainSpec::triangle(side);
    let table = count_walks(domain, &domain.point(&[u, v, w])?, order)?;
    let ws = BivarPoly::weight_sum();
    let boundary_sum = (0..3).fold(TruncSeries::<BivarPoly>::zero(order), |acc, axis| {
        &acc + &table.weighted_series_where(|e| e.coords()[axis] == 0)
    });
    let lhs = boundary_sum.shift_up(1).scale(&ws);

    let p = triangle_kernel_root(&ws, order);
    let mut num = TruncSeries::zero(order);
    for (a, others) in [(u, v + w), (v, u + w), (w, u + v)] {
        num = &(&num + &p.pow(a + 1)) - &p.pow(others + 2);
    }
    let rhs = div(&num, &one_minus_pow(&p, side + 3));

    let params = json!({"u": u, "v": v, "w": w, "order": order});
    if let Some(n) = lhs.first_mismatch(&rhs) {
        return Ok(VerificationReport::fail(
            "linear_combination",
            params,
            series_discrepancy(n, rhs.coeff(n), lhs.coeff(n)),
        ));
    }
    let total = table.weighted_series();
    let three_s = TruncSeries::monomial(ws.mul_ref(&BivarPoly::from_i64(3)), 1, order);
    let left = one_minus(&three_s).trunc_mul(&total);
    let right = one_minus(&lhs);
    let discrepancy = left
        .first_mismatch(&right)
        .map(|n| series_discrepancy(n, right.coeff(n), left.coeff(n)));
    Ok(VerificationReport::from_outcome("linear_combination", params, discrepancy))
}

// ---------------------------------------------------------------------------
// Functional equations
// ---------------------------------------------------------------------------

type Marks = LaurentPoly<BivarPoly>;

fn mark(exps: &[i32], c: BivarPoly) -> Marks {
    LaurentPoly::monomial(exps.to_vec(), c)
}

/// The step polynomial of the kernel, `K = 1 - t·S`, as a Laurent
/// polynomial in the endpoint marks.
fn step_polynomial(dim: usize) -> Result<Marks> {
    let (a, b) = (BivarPoly::alpha(), BivarPoly::beta());
    let terms: Vec<Marks> = match dim {
        1 => vec![mark(&[1, -1], BivarPoly::one()), mark(&[-1, 1], BivarPoly::one())],
        2 => vec![
            mark(&[1, -1, 0], b.clone()), // βx/y
            mark(&[-1, 1, 0], a.clone()), // αy/x
            mark(&[1, 0, -1], a.clone()), // αx/z
            mark(&[-1, 0, 1], b.clone()), // βz/x
            mark(&[0, 1, -1], b.clone()), // βy/z
            mark(&[0, -1, 1], a),         // αz/y
        ],
        d => return Err(Error::Dimension { expected: 2, found: d }),
    };
    Ok(terms.iter().fold(Marks::zero(dim + 1), |acc, m| acc.add(m)))
}

/// Correction for variable `var` set to zero: the steps that would lower
/// that coordinate below zero.
fn boundary_steps(dim: usize, var: usize) -> Marks {
    let (a, b) = (BivarPoly::alpha(), BivarPoly::beta());
    let pair: Vec<Marks> = match (dim, var) {
        (1, 0) => vec![mark(&[-1, 1], BivarPoly::one())],
        (1, 1) => vec![mark(&[1, -1], BivarPoly::one())],
        (2, 0) => vec![mark(&[-1, 1, 0], a), mark(&[-1, 0, 1], b)],
        (2, 1) => vec![mark(&[1, -1, 0], b), mark(&[0, -1, 1], a)],
        (2, 2) => vec![mark(&[1, 0, -1], a), mark(&[0, 1, -1], b)],
        _ => unreachable!("checked by step_polynomial"),
    };
    pair.iter().fold(Marks::zero(dim + 1), |acc, m| acc.add(m))
}

/// The t^n coefficient of the endpoint-marked generating function.
fn marked_layer(table: &CountTable, n: usize) -> Marks {
    let dim = table.domain().dim();
    let mut g = Marks::zero(dim + 1);
    for (e, p, c) in table.layer(n) {
        let exps: Vec<i32> = e.coords().iter().map(|&x| x as i32).collect();
        let weight = if dim == 2 {
            BivarPoly::monomial(p as u32, (n - p) as u32, c.clone())
        } else {
            BivarPoly::constant(c.clone())
        };
        g.add_term(exps, &weight);
    }
    g
}

/// Checks the functional equation obtained by appending a step,
/// `G = x^u… + t·S·G - t·Σ_boundaries G|_{xᵢ=0}·(steps leaving through i)`,
/// coefficient by coefficient in `t`, with symbolic weights.
pub fn check_functional_equation(
    domain: DomainSpec,
    start: &SimplexPoint,
    order: usize,
) -> Result<VerificationReport> {
    let dim = domain.dim();
    let steps = step_polynomial(dim)?;
    let table = count_walks(domain, start, order)?;
    let nvars = dim + 1;
    let start_mark = mark(
        &start.coords().iter().map(|&x| x as i32).collect::<Vec<_>>(),
        BivarPoly::one(),
    );
    let params = json!({"d": dim, "L": domain.side(), "start": start.coords(), "order": order});
    let mut prev: Option<Marks> = None;
    for n in 0..=order {
        let g = marked_layer(&table, n);
        let rhs = match &prev {
            None => start_mark.clone(),
            Some(gp) => {
                let mut r = steps.mul(gp);
                for var in 0..nvars {
                    r = r.sub(&gp.section(var).mul(&boundary_steps(dim, var)));
                }
                r
            }
        };
        let residual = g.sub(&rhs);
        if let Some((exps, c)) = residual.first_term() {
            return Ok(VerificationReport::fail(
                "funceq",
                params,
                json!({"n": n, "monomial": exps, "residual": c.to_json()}),
            ));
        }
        prev = Some(g);
    }
    Ok(VerificationReport::pass("funceq", params))
}

// ---------------------------------------------------------------------------
// Kernel symmetries
// ---------------------------------------------------------------------------

/// Sample values for the endpoint marks; every coordinate nonzero.
#[derive(Clone, Debug, PartialEq)]
pub struct EvalPoint(Vec<Q>);

impl EvalPoint {
    pub fn new(coords: Vec<Q>) -> Result<Self> {
        if coords.iter().any(Zero::is_zero) {
            return Err(Error::ZeroCoordinate);
        }
        Ok(Self(coords))
    }

    pub fn from_ints(coords: &[i64]) -> Result<Self> {
        Self::new(coords.iter().map(|&c| Q::from_integer(BigInt::from(c))).collect())
    }

    pub fn coords(&self) -> &[Q] {
        &self.0
    }
}

/// `K(e) = 1 - t·S(e)` as a linear polynomial in `t` with coefficients in
/// ℚ[α, β].
fn kernel_at(steps: &Marks, e: &EvalPoint) -> TruncSeries<BivarPoly<Q>> {
    let rational_steps = {
        let mut out = LaurentPoly::<BivarPoly<Q>>::zero(steps.nvars());
        for (k, c) in steps.terms() {
            out.add_term(k.to_vec(), &c.map_coeffs(|x| Q::from_integer(x.clone())));
        }
        out
    };
    let point: Vec<BivarPoly<Q>> = e.0.iter().map(|x| BivarPoly::constant(x.clone())).collect();
    let s = rational_steps.eval(&point).expect("nonzero coordinates are units");
    TruncSeries::from_coeffs(vec![BivarPoly::one(), -s])
}

fn kernel_json(k: &TruncSeries<BivarPoly<Q>>) -> Value {
    let t_coeff: Vec<Value> = k
        .coeff(1)
        .terms()
        .map(|((a, b), c)| json!([a, b, rational_to_string(c)]))
        .collect();
    json!({"t_coeff": t_coeff})
}

fn point_json(e: &EvalPoint) -> Value {
    Value::Array(e.0.iter().map(|q| Value::String(rational_to_string(q))).collect())
}

/// One-parameter substitutions: variable i is replaced by `p^{k_i}`.
fn substitutions(dim: usize) -> Vec<Vec<i32>> {
    match dim {
        1 => vec![vec![1, 0], vec![0, 1]],
        _ => vec![
            vec![0, 0, 1],
            vec![0, 1, 0],
            vec![1, 0, 0],
            vec![0, 1, 1],
            vec![1, 0, 1],
            vec![1, 1, 0],
        ],
    }
}

/// Checks the kernel's invariance under its symmetry group and its
/// one-parameter substitutions.
///
/// * Line: `(x,y) -> (y,x)`.
/// * Triangle: rotation `(x,y,z) -> (y,z,x)` and inversion
///   `(x,y,z) -> (1/x,1/y,1/z)`. Inversion maps α-weighted steps onto
///   β-weighted ones, so it is checked together with the exchange α ↔ β.
///
/// Each generator is checked symbolically on the Laurent polynomial and at
/// every sample point. The substitutions `K(1,1,p) = … = K(p,p,1)` (and
/// `K(p,1) = K(1,p)`) are checked against `1 - t(α+β)(p+1+1/p)` (resp.
/// `1 - t(p+1/p)`) as Laurent polynomials in `p`.
pub fn check_kernel_invariance(dim: usize, samples: &[EvalPoint]) -> Result<VerificationReport> {
    let steps = step_polynomial(dim)?;
    let nvars = dim + 1;
    let check = if dim == 1 { "kernel_line" } else { "kernel_triangle" };
    let params = json!({
        "d": dim,
        "samples": samples.iter().map(point_json).collect::<Vec<_>>(),
    });
    for e in samples {
        if e.0.len() != nvars {
            return Err(Error::Dimension {
                expected: nvars,
                found: e.0.len(),
            });
        }
    }

    struct Generator {
        name: &'static str,
        point: fn(&[Q]) -> Vec<Q>,
        exps: fn(&[i32]) -> Vec<i32>,
        swap_weights: bool,
    }
    let generators: Vec<Generator> = if dim == 1 {
        vec![Generator {
            name: "(y,x)",
            point: |e| vec![e[1].clone(), e[0].clone()],
            exps: |k| vec![k[1], k[0]],
            swap_weights: false,
        }]
    } else {
        vec![
            Generator {
                name: "(y,z,x)",
                point: |e| vec![e[1].clone(), e[2].clone(), e[0].clone()],
                // x^a y^b z^c -> y^a z^b x^c
                exps: |k| vec![k[2], k[0], k[1]],
                swap_weights: false,
            },
            Generator {
                name: "(1/x,1/y,1/z)",
                point: |e| e.iter().map(|x| x.recip()).collect(),
                exps: |k| k.iter().map(|x| -x).collect(),
                swap_weights: true,
            },
        ]
    };

    for g in &generators {
        let mut image = steps.map_exponents(g.exps);
        if g.swap_weights {
            let mut swapped = Marks::zero(nvars);
            for (k, c) in image.terms() {
                swapped.add_term(k.to_vec(), &c.swap_weights());
            }
            image = swapped;
        }
        if image != steps {
            let diff = image.sub(&steps);
            let (k, c) = diff.first_term().expect("nonzero difference");
            return Ok(VerificationReport::fail(
                check,
                params,
                json!({"generator": g.name, "symbolic": true, "monomial": k, "difference": c.to_json()}),
            ));
        }
        for e in samples {
            let moved = EvalPoint((g.point)(&e.0));
            let lhs = kernel_at(&steps, e);
            let mut rhs = kernel_at(&steps, &moved);
            if g.swap_weights {
                rhs = rhs.map(|c| c.swap_weights());
            }
            if lhs != rhs {
                return Ok(VerificationReport::fail(
                    check,
                    params,
                    json!({"generator": g.name, "point": point_json(e),
                           "K(e)": kernel_json(&lhs), "K(g(e))": kernel_json(&rhs)}),
                ));
            }
        }
    }

    // Target: the step polynomial along the substitution, in one variable p.
    let target = if dim == 1 {
        mark(&[1], BivarPoly::one()).add(&mark(&[-1], BivarPoly::one()))
    } else {
        let ws = BivarPoly::weight_sum();
        mark(&[1], ws.clone())
            .add(&mark(&[0], ws.clone()))
            .add(&mark(&[-1], ws))
    };
    for sub in substitutions(dim) {
        let image = {
            let mut out = Marks::zero(1);
            for (k, c) in steps.terms() {
                let e: i32 = k.iter().zip(&sub).map(|(a, b)| a * b).sum();
                out.add_term(vec![e], c);
            }
            out
        };
        if image != target {
            let diff = image.sub(&target);
            let (k, c) = diff.first_term().expect("nonzero difference");
            return Ok(VerificationReport::fail(
                check,
                params,
                json!({"substitution": sub, "p_exponent": k[0], "difference": c.to_json()}),
            ));
        }
    }
    Ok(VerificationReport::pass(check, params))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Bivar;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn one() -> BigInt {
        BigInt::one()
    }

    #[test]
    fn line_totals_examples() {
        assert_eq!(line_total_gf::<BigInt>(0, 0, 4).coeffs(), ints(&[1, 0, 0, 0, 0]).as_slice());
        assert_eq!(line_total_gf::<BigInt>(1, 0, 4).coeffs(), ints(&[1, 1, 1, 1, 1]).as_slice());
        assert_eq!(line_total_gf::<BigInt>(1, 1, 4).coeffs(), ints(&[1, 2, 2, 4, 4]).as_slice());
    }

    #[test]
    fn line_boundary_examples() {
        let b = line_boundary_gfs::<BigInt>(1, 0, 2);
        assert_eq!(b.g10.coeffs(), ints(&[1, 0, 1]).as_slice());
        let b = line_boundary_gfs::<BigInt>(0, 1, 1);
        assert_eq!(b.g10.coeffs(), ints(&[0, 1]).as_slice());
        let b = line_boundary_gfs::<BigInt>(1, 1, 4);
        assert_eq!(b.g10.coeffs(), ints(&[0, 1, 0, 2, 0]).as_slice());
        assert_eq!(b.g01.coeffs(), ints(&[0, 1, 0, 2, 0]).as_slice());
    }

    #[test]
    fn prop1_examples() {
        let r = line_full_gf_check(1, 0, 6).unwrap();
        assert!(r.passed(), "{:?}", r);
        assert_eq!(r.params["points"], json!([2, 3]));
        let r = line_full_gf_check(2, 1, 10).unwrap();
        assert!(r.passed(), "{:?}", r);
        assert_eq!(r.params["points"], json!([2, 3, 5, 7]));
        let g = line_full_gf_at(0, 0, &Q::from_integer(BigInt::from(5)), 6).unwrap();
        assert_eq!(g, TruncSeries::one(6));
    }

    #[test]
    fn triangle_examples() {
        assert_eq!(triangle_total_gf(0, 0, 0, 5, &Bivar::weight_sum()), TruncSeries::one(5));
        let two = BigInt::from(2);
        assert_eq!(triangle_total_gf(1, 0, 0, 4, &two).coeffs(), ints(&[1, 2, 4, 8, 16]).as_slice());
        let tri = DomainSpec::triangle(3);
        let dp = count_walks(tri, &tri.point(&[1, 1, 1]).unwrap(), 4).unwrap();
        assert_eq!(triangle_total_gf(1, 1, 1, 4, &two).coeffs(), dp.totals().as_slice());
    }

    #[test]
    fn corner_examples() {
        assert_eq!(corner_gf(0, 8, &Bivar::weight_sum()), TruncSeries::one(8));
        let two = BigInt::from(2);
        let geo: Vec<BigInt> = (0..=6).map(|n| two.pow_u32(n)).collect();
        assert_eq!(corner_gf(1, 6, &two).coeffs(), geo.as_slice());
        assert_eq!(corner_gf(2, 3, &two).coeffs(), ints(&[1, 2, 8, 24]).as_slice());
    }

    #[test]
    fn centre_side_examples() {
        assert_eq!(centre_side_gf(0, 5, &Bivar::weight_sum()), TruncSeries::one(5));
        assert_eq!(centre_side_gf(1, 4, &BigInt::from(2)).coeffs(), ints(&[0, 2, 8, 32, 128]).as_slice());
        assert_eq!(centre_side_gf(1, 3, &one()).coeffs(), ints(&[0, 1, 2, 4]).as_slice());
    }

    #[test]
    fn funceq_examples() {
        let tri = DomainSpec::triangle(1);
        assert!(check_functional_equation(tri, &tri.corner(), 6).unwrap().passed());
        let tri = DomainSpec::triangle(3);
        assert!(check_functional_equation(tri, &tri.point(&[1, 1, 1]).unwrap(), 6).unwrap().passed());
        let line = DomainSpec::line(2);
        assert!(check_functional_equation(line, &line.point(&[1, 1]).unwrap(), 8).unwrap().passed());
        let tet = DomainSpec::new(3, 1).unwrap();
        assert!(check_functional_equation(tet, &tet.corner(), 2).is_err());
    }

    #[test]
    fn funceq_detects_wrong_kernel() {
        // Dropping a boundary correction must leave a residual.
        let tri = DomainSpec::triangle(1);
        let table = count_walks(tri, &tri.corner(), 1).unwrap();
        let g0 = marked_layer(&table, 0);
        let g1 = marked_layer(&table, 1);
        let steps = step_polynomial(2).unwrap();
        assert!(!g1.sub(&steps.mul(&g0)).is_zero());
    }

    #[test]
    fn kernel_examples() {
        let e = EvalPoint::from_ints(&[2, 3, 5]).unwrap();
        assert!(check_kernel_invariance(2, &[e]).unwrap().passed());
        let e = EvalPoint::from_ints(&[2, 3]).unwrap();
        assert!(check_kernel_invariance(1, &[e]).unwrap().passed());
        assert_eq!(EvalPoint::from_ints(&[2, 0, 5]), Err(Error::ZeroCoordinate));
    }

    #[test]
    fn inversion_alone_is_not_a_symmetry_for_unequal_weights() {
        let steps = step_polynomial(2).unwrap();
        let e = EvalPoint::from_ints(&[2, 3, 5]).unwrap();
        let inv = EvalPoint(e.0.iter().map(|x| x.recip()).collect());
        assert_ne!(kernel_at(&steps, &e), kernel_at(&steps, &inv));
    }

    #[test]
    fn linear_combination_identity() {
        for (u, v, w) in [(1, 0, 0), (2, 1, 0), (1, 1, 1), (3, 0, 2)] {
            let r = check_linear_combination(u, v, w, 8).unwrap();
            assert!(r.passed(), "{:?}", r);
        }
    }
}
