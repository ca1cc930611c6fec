pub mod error;
pub mod contfrac;
pub mod formulas;
pub mod lattice;
pub mod paths;
pub mod report;
pub mod series;
pub mod suites;

pub use error::{Error, Result};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Polynomials in α, β with integer coefficients.
pub type Bivar = series::BivarPoly<BigInt>;
pub type IntSeries = series::TruncSeries<BigInt>;
pub type RatSeries = series::TruncSeries<BigRational>;
pub type BivarSeries = series::TruncSeries<Bivar>;
