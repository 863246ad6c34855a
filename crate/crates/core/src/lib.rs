//! Discrete functions on the integer lattice under the exchange axioms of
//! M♮-convexity and its semi-strictly quasi relaxation.
//!
//! The crate has three layers:
//!
//! * [`point`], [`value`], [`bounds`], [`function`]: lattice points, exact
//!   extended values, integer boxes and tabulated functions.
//! * [`axioms`]: exhaustive exchange-axiom checkers that return replayable
//!   violation certificates.
//! * [`minimize`] and [`analysis`]: steepest descent, the box-shrinking variant,
//!   domain reduction with peeled sets, and ground-truth verifiers for the
//!   minimizer cut, geodesic and proximity properties.
//!
//! [`gallery`] holds the worked examples and random instance generators, and
//! [`cli`] drives everything from the `mnat` binary.
//!
//! ```
//! use mnat::gallery;
//! use mnat::minimize::basic_steepest_descent;
//! use mnat::Mode;
//!
//! let entry = gallery::example_2_2();
//! let trace = basic_steepest_descent(&entry.function, &[0, 1].into(), Mode::Strict).unwrap();
//! assert_eq!(trace.iterations, 2);
//! ```

pub mod analysis;
pub mod axioms;
pub mod bounds;
pub mod cli;
pub mod error;
pub mod function;
pub mod gallery;
pub mod minimize;
pub mod point;
pub mod value;

pub use bounds::{coordinate_bounds, linf_diameter, IntBox};
pub use error::{Error, Result};
pub use function::{FnOracle, Oracle, TabulatedFunction};
pub use point::{exchange_step, supp_neg, supp_pos, Index, LatticePoint};
pub use value::{ExtendedValue, Rational};

/// Whether algorithm preconditions (exchange axioms) are verified before running.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    #[default]
    Strict,
    Fast,
}
