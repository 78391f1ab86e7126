//! Numerical laboratory for a resonantly driven two-level atom interrupted by
//! N equally spaced projective measurements over a π pulse.
//!
//! Two quantities are kept apart throughout:
//!
//! * the **occupation** probability `P2(T) = ½[1 − cosᴺ(π/N)]`: level 2 is
//!   found at the final time, whatever happened in between;
//! * the **survival** probability `cos²ᴺ(π/2N)`: level 1 is found at every
//!   one of the N measurements (its complement is reported as `𝒫2(T)`).
//!
//! Each is computed along independent routes: Bloch-vector simulation and
//! closed forms ([`measurement`]), exhaustive history enumeration and the
//! binomial decomposition ([`combinatorics`]), and seeded Monte Carlo
//! ([`monte_carlo`]). The incoherent rate-equation model lives in [`cook`]
//! and [`report`] renders the comparison tables.
//!
//! ```
//! use zeno_lab::measurement::occupation_closed_form;
//! use zeno_lab::combinatorics::survival_closed_form;
//!
//! let (_, p2) = occupation_closed_form(4).unwrap();
//! let (_, survival_complement) = survival_closed_form(4).unwrap();
//! assert!((p2 - 0.375).abs() < 1e-12);
//! assert!(survival_complement > p2);
//! ```

pub mod combinatorics;
pub mod cook;
pub mod dynamics;
pub mod error;
pub mod measurement;
pub mod monte_carlo;
pub mod ode;
pub mod report;

pub use combinatorics::{FlipKernel, Level, TrajectoryHistory};
pub use cook::CookModel;
pub use dynamics::{BlochVector, DensityMatrix, PulseProtocol};
pub use error::{Result, ZenoError};
pub use measurement::ProtocolResult;
pub use monte_carlo::MCEstimate;
pub use report::{ComparisonRow, OutputFormat};
