//! Radial potentials with exactly the hydrogen bound-state spectrum.
//!
//! The hydrogen radial Hamiltonian `H_l` factorizes as `A_l⁺ A_l − 1/l²` not
//! only with the classic ladder operators but with a one-parameter family of
//! superpotentials `β_l(r; γ)`. Reversing the order of the factors gives a
//! partner Hamiltonian `H̃_{l−1}` whose potential `Ṽ_{l−1}` depends on `γ` and
//! whose discrete spectrum is `−1/n²`, `n >= l`. At the critical value
//! `γ = (2l)! (l/2)^(2l+1)` the lowest level disappears.
//!
//! - [`special`]: the truncated integral `I_l(r)`, Laguerre polynomials and
//!   normalized hydrogen states.
//! - [`factorization`]: superpotential, deformed potentials, missing state and
//!   transformed eigenfunctions.
//! - [`oracle`]: an independent finite-difference eigensolver with Sturm
//!   bisection, inverse iteration, adaptive quadrature and Richardson
//!   extrapolation.
//! - [`io`]: CSV/JSON export behind the `isospec` binary.
//!
//! ```
//! use isospec::factorization::{potential_tilde, FactorizationParams};
//!
//! let critical = FactorizationParams::critical(1).unwrap();
//! let v = potential_tilde(&critical, 1.0).unwrap();
//! assert!((v + 0.72).abs() < 1e-12);
//! ```

// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod factorization;
pub mod io;
pub mod oracle;
pub mod radial;
pub mod special;

pub use error::{Error, Result};
pub use radial::RadialFunction;
pub use special::QuantumNumbers;
