//! Exact scalars and the spinor space realized as the exterior algebra on
//! `f†_1, …, f†_n` applied to the idempotent `I`.

mod blade;
mod scalar;
mod spinor;

pub use blade::{Blade, MAX_DIM};
pub use scalar::{format_rational, parse_rational, GaussianRational};
pub use spinor::{Generator, SpinorElement};
