//! Power-series roots of the line and triangle kernels.
//!
//! Setting the kernel to zero along its one-parameter substitutions fixes
//! `p` as a function of `t`:
//!
//! * line: `1 - t(p + 1/p) = 0`, i.e. `p = t(1 + p²)`;
//! * triangle: `1 - s(p + 1 + 1/p) = 0` with `s = (α+β)t`, i.e.
//!   `p = s(1 + p + p²)`.
//!
//! Both have a unique power-series solution with `p(0) = 0`. We expand it
//! by fixed-point iteration on the right-hand side. Since the right-hand
//! side carries a factor `t`, its coefficient of `t^n` only involves
//! `p_0..p_{n-1}`, so each pass fixes one more coefficient and the
//! iteration is run coefficient by coefficient. No square roots appear.

use serde::{Deserialize, Serialize};

use super::ring::CoeffRing;
use super::trunc::TruncSeries;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KernelModel {
    Line,
    Triangle,
}

/// Σ_{i+j=m} p_i p_j over the known prefix.
fn square_coeff<R: CoeffRing>(p: &[R], m: usize) -> R {
    (0..=m).fold(R::zero(), |acc, i| {
        let (a, b) = (&p[i], &p[m - i]);
        if a.is_zero() || b.is_zero() {
            acc
        } else {
            acc.add_ref(&a.mul_ref(b))
        }
    })
}

/// Root of `p = t(1 + p²)`; equals `t·D(t)` with `D` the Dyck-path series.
pub fn line_kernel_root<R: CoeffRing>(order: usize) -> TruncSeries<R> {
    let mut p: Vec<R> = vec![R::zero()];
    for n in 1..=order {
        let mut c = square_coeff(&p, n - 1);
        if n == 1 {
            c = c + R::one();
        }
        p.push(c);
    }
    TruncSeries::from_coeffs(p)
}

/// Root of `p = s(1 + p + p²)` with `s = weight_sum·t`; equals `s·M(s)`
/// with `M` the Motzkin-path series.
pub fn triangle_kernel_root<R: CoeffRing>(weight_sum: &R, order: usize) -> TruncSeries<R> {
    let mut p: Vec<R> = vec![R::zero()];
    for n in 1..=order {
        let mut c = square_coeff(&p, n - 1).add_ref(&p[n - 1]);
        if n == 1 {
            c = c + R::one();
        }
        p.push(c.mul_ref(weight_sum));
    }
    TruncSeries::from_coeffs(p)
}

/// Dispatches on the model. `weight_sum` is α+β and is ignored for the
/// unweighted line model.
pub fn solve_kernel_root<R: CoeffRing>(
    model: KernelModel,
    weight_sum: &R,
    order: usize,
) -> TruncSeries<R> {
    match model {
        KernelModel::Line => line_kernel_root(order),
        KernelModel::Triangle => triangle_kernel_root(weight_sum, order),
    }
}

/// `p - t(1 + p²)` (line) or `p - s(1 + p + p²)` (triangle); vanishes
/// identically for the kernel root.
pub fn kernel_residual<R: CoeffRing>(
    model: KernelModel,
    weight_sum: &R,
    p: &TruncSeries<R>,
) -> TruncSeries<R> {
    let order = p.order();
    let one = TruncSeries::one(order);
    let sq = p.trunc_mul(p);
    let rhs = match model {
        KernelModel::Line => (&one + &sq).shift_up(1),
        KernelModel::Triangle => (&(&one + p) + &sq).shift_up(1).scale(weight_sum),
    };
    p - &rhs
}
