//! Finite continued fractions for corner walks.
//!
//! With `s = (α+β)t`, the corner generating function of a triangle of side
//! `L` is a finite continued fraction built from the recurrence
//!
//! ```text
//! F_k = 1 / (1 - s - s²·F_{k-1})
//! ```
//!
//! applied `H = ⌊L/2⌋` times, starting from `F_0 = 1` when `L` is even and
//! `F_0 = 1/(1-s)` when `L` is odd. Counting the odd base as a level, the
//! fraction has length `H` (even) or `H+1` (odd).

use serde_json::json;

use crate::formulas::corner_gf;
use crate::report::VerificationReport;
use crate::series::json::JsonCoeff;
use crate::series::{CoeffRing, TruncSeries};
use crate::Bivar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CfSpec {
    side: u32,
}

impl CfSpec {
    pub fn new(side: u32) -> Self {
        Self { side }
    }

    pub fn side(&self) -> u32 {
        self.side
    }

    /// `H = ⌊L/2⌋`, the strip height of the matching Motzkin paths.
    pub fn height(&self) -> u32 {
        self.side / 2
    }

    pub fn is_odd(&self) -> bool {
        self.side % 2 == 1
    }

    /// Number of fraction levels: `H` for even `L`, `H+1` for odd `L`.
    pub fn depth(&self) -> u32 {
        self.height() + u32::from(self.is_odd())
    }
}

/// One level of the fraction: `1 / (1 - s - s²·tail)`.
pub fn cf_level<R: CoeffRing>(s: &TruncSeries<R>, tail: &TruncSeries<R>) -> TruncSeries<R> {
    let one = TruncSeries::one(s.order());
    let den = &(&one - s) - &s.trunc_mul(s).trunc_mul(tail);
    den.trunc_inv()
        .expect("1 - s - s²F has constant term 1")
}

/// The convergent for side `L`, as a series in `t` through `order`.
pub fn convergent_series<R: CoeffRing>(spec: CfSpec, order: usize, weight_sum: &R) -> TruncSeries<R> {
    let s = TruncSeries::monomial(weight_sum.clone(), 1, order);
    let one = TruncSeries::one(order);
    let mut f = if spec.is_odd() {
        (&one - &s).trunc_inv().expect("1 - s is invertible")
    } else {
        one
    };
    for _ in 0..spec.height() {
        f = cf_level(&s, &f);
    }
    f
}

fn compare<R: JsonCoeff>(
    check: &str,
    params: serde_json::Value,
    lhs: &TruncSeries<R>,
    rhs: &TruncSeries<R>,
) -> VerificationReport {
    let discrepancy = lhs.first_mismatch(rhs).map(|n| {
        json!({"n": n, "lhs": lhs.coeff(n).to_json(), "rhs": rhs.coeff(n).to_json()})
    });
    VerificationReport::from_outcome(check, params, discrepancy)
}

/// Convergent for side `L` equals the closed-form corner generating
/// function, with symbolic α, β.
pub fn verify_cf_identity(side: u32, order: usize) -> VerificationReport {
    let ws = Bivar::weight_sum();
    let spec = CfSpec::new(side);
    let cf = convergent_series(spec, order, &ws);
    let closed = corner_gf(side, order, &ws);
    compare(
        "cf_identity",
        json!({"L": side, "order": order, "depth": spec.depth()}),
        &cf,
        &closed,
    )
}

/// `corner(L+2) = 1 / (1 - s - s²·corner(L))` as a series identity, with
/// symbolic α, β.
pub fn verify_induction_step(side: u32, order: usize) -> VerificationReport {
    let ws = Bivar::weight_sum();
    let s = TruncSeries::monomial(ws.clone(), 1, order);
    let lhs = corner_gf(side + 2, order, &ws);
    let rhs = cf_level(&s, &corner_gf(side, order, &ws));
    compare("cf_induction", json!({"L": side, "order": order}), &lhs, &rhs)
}

/// Convergents for `L` and `L+2` agree through `t^L`.
pub fn verify_convergent_agreement(side: u32, order: usize) -> VerificationReport {
    let ws = Bivar::weight_sum();
    let a = convergent_series(CfSpec::new(side), order, &ws);
    let b = convergent_series(CfSpec::new(side + 2), order, &ws);
    let through = (side as usize).min(order);
    compare(
        "cf_agreement",
        json!({"L": side, "order": order, "through": through}),
        &a.truncate(through),
        &b.truncate(through),
    )
}
