#![cfg_attr(not(feature = "std"), no_std)]

//! Fourier linear programming bounds for the density of sets avoiding
//! distance 1 in Euclidean space.
//!
//! The central quantity is m₁(ℝⁿ), the supremum of densities of Lebesgue
//! measurable sets containing no two points at distance exactly 1. This
//! crate computes certified upper bounds on m₁(ℝⁿ) — and thereby lower
//! bounds on the measurable chromatic number χₘ(ℝⁿ) ≥ 1/m₁(ℝⁿ) — by
//! solving a linear program over positive definite radial functions that
//! is strengthened with independence-number constraints from finite
//! subgraphs of the unit distance graph.
//!
//! The pieces:
//!
//! * [`kernel`] — the radial kernel Ωₙ(t) = Γ(n/2)(2/t)^{n/2−1}J_{n/2−1}(t),
//!   its decreasing envelope, and its global minimum at the first Bessel
//!   zero j_{n/2,1}.
//! * [`lp`] — a small dense LP solver (few variables, many inequality
//!   rows) used by every bound in the crate.
//! * [`geometry`] — exact constructions of the vertex configurations that
//!   feed the subgraph constraints: the 600-cell, the E₈ root system and
//!   its kissing configuration (over ℚ(√5)), generalized Johnson graphs,
//!   orthogonality graphs, and circulants.
//! * [`independence`] — exact branch-and-bound independence numbers,
//!   the Frankl–Wilson binomial bound, and a registry of ingested
//!   external bounds.
//! * [`scheme`] — Johnson-scheme spectra via Eberlein polynomials, the
//!   closed-form ϑ for edge-transitive graphs, the ϑ = ϑ′ criterion, and
//!   the Delsarte LP value of ϑ′.
//! * [`euclid`] — the main engine: ϑ(ℝⁿ) in closed form and the
//!   subgraph-strengthened bound ϑ_G(ℝⁿ) with sample-then-certify
//!   solving.
//! * [`asymptotics`] — the rate functions behind the exponential bounds
//!   (1.262⁻ⁿ and 1.268⁻ⁿ) and a numeric certifier for the feasibility
//!   lemma they rest on.
//! * [`cayley`] — the theta number of abelian Cayley graphs and its
//!   subgraph strengthening, where positive definiteness is a finite set
//!   of character inequalities.
//!
//! The crate is `no_std`-compatible (with `alloc`); all floating-point
//! transcendentals go through `libm` so results are identical with or
//! without `std`.

extern crate alloc;

pub mod asymptotics;
pub mod cayley;
pub mod dd;
pub mod euclid;
pub mod geometry;
pub mod independence;
pub mod kernel;
pub mod lp;
pub mod scheme;

pub use euclid::{chromatic_lower, solve_theta_g, theta_infinity, verify_feasible};
pub use geometry::{GraphSpec, PointSet, QuadExt, UnitDistanceGraph};
pub use independence::{frankl_wilson, max_independent_set, AlphaBound, BoundsRegistry};
pub use kernel::{first_bessel_zero, omega, omega_envelope, KernelMinimum, OmegaKernel};
