//! Exact convex geometry over the nonnegative orthant and the numerical
//! machinery built on top of it: logarithmic supporting functions, graded
//! monomial lattices, LP-based Siciak extremal functions, Monge-Ampere
//! total masses, weighted L2 monomial norms over normal fans, and pullback
//! polytopes of polynomial maps.
//!
//! The geometric kernel ([`ratgeom`]) works in arbitrary-precision rational
//! arithmetic; the analytic layers ([`logsupport`], [`extremal`], [`massint`])
//! evaluate in `f64` with documented tolerances.

pub mod rat;
pub mod linalg;
pub mod lp;
pub mod mnp;
pub mod ratgeom;
pub mod logsupport;
pub mod polyspace;
pub mod extremal;
pub mod massint;
pub mod pullback;
pub mod io;
pub mod suites;

pub use ratgeom::{Body, Direction, PolyCone};
