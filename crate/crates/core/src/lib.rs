//! Quadratic equation solvers and their numerical companions.
//!
//! Every solution route for `ax² + bx + c = 0` over complex coefficients lives
//! here side by side: the classical formula, the monic `(p, q)` form, the
//! reciprocal formula (which survives `a = 0`), the hyperbolic and
//! trigonometric parametrizations for real input, the symmetric
//! `(√(u+v) ± √(u−v))²` formula on the normal form `x² − 4ux + 4v² = 0`, and a
//! cancellation-free hybrid.
//!
//! Around the solvers sit a root-type classifier for the `(u, v²)` form,
//! Muller's iterative root finder, the falling-stone well-depth problem and an
//! accuracy benchmark that scores each formula against a 256-bit oracle.
//!
//! ```
//! use quadform::{solve_robust, Quadratic};
//!
//! let eq = Quadratic::real(1.0, -5.0, 6.0).unwrap();
//! let roots = solve_robust(&eq).unwrap();
//! assert!(roots.multiset_eq(&quadform::RootPair::pair(2.0.into(), 3.0.into()), 1e-12));
//! ```

pub mod bench;
pub mod classification;
pub mod error;
pub mod muller;
pub mod normal_forms;
pub mod scalar;
pub mod solvers;
pub mod well;

pub use classification::{classify, Classification, RootKind};
pub use error::{Error, Result};
pub use muller::{muller_solve, muller_step, MullerOptions, MullerResult, MullerState};
pub use normal_forms::{from_uv, to_pq, to_uv, NormalPQ, NormalUV, Quadratic, RootPair};
pub use scalar::{approx_eq, principal_sqrt, CScalar, DEFAULT_TOL, UNIT_ROUNDOFF};
pub use solvers::{
    solve_alternative, solve_classical, solve_hyperbolic, solve_pq, solve_reciprocal, solve_robust,
    solve_trig_hyp, solve_trigonometric, Flavor, TrigHypParam,
};
pub use well::{well_depth, well_quadratic, well_series, SeriesOrder, WellParams, WellSolution};
