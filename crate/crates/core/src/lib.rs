//! Exact computations in the tautological ring of the moduli of principally
//! polarized abelian varieties: Ekedahl-Oort strata, their cycle classes as
//! polynomials in `p`, and the degree, mass and torsion formulas built on
//! them.

// Matrix routines index rows and columns together.
#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod arith;
pub mod cli;
pub mod cycleclasses;
pub mod polyengine;
pub mod tautring;
pub mod weyl;
