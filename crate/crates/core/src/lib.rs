//! Exact arithmetic in prime cyclotomic rings `Z[ζ_p]`.
//!
//! * [`cyclotomic`]: the ring itself, Galois action, norms, λ-adic digits,
//!   primary elements and units.
//! * [`quadratic`]: Legendre symbols and the Gauss sum `√p*`.
//! * [`gauss_split`]: `4·m_p = f² − p*·g²` with integer polynomials `f, g`.
//! * [`pell`]: the cyclotomic Pell solver, a continued-fraction oracle and
//!   the solution group.
//! * [`verify_flt`]: identities from the first case of Fermat's Last Theorem.
//! * [`suite`] and [`cli`]: the invariant suite and the command-line tool.

pub mod arith;
pub mod cli;
pub mod cyclotomic;
pub mod error;
pub mod gauss_split;
pub mod pell;
pub mod quadratic;
pub mod suite;
pub mod verify_flt;

pub use cyclotomic::{cyclotomic_unit, CycInt, LambdaDigits};
pub use error::{Error, Result};
pub use gauss_split::{build_q, m_poly, split_fg, GaussSplit, GaussianInt, IntPoly};
pub use pell::{
    classify, power_solution, solve_cf, solve_dirichlet, DirichletCase, DirichletTrace,
    PellSolution,
};
pub use quadratic::{legendre, p_star, sqrt_p_star, QuadChar};
pub use verify_flt::{
    factor_product_check, fermat_congruence_check, frobenius_check, norm_gap, FermatTriple,
};
