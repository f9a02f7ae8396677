//! Exact arithmetic for signature-based bounds on the gordian graph of knots.
//!
//! The crate is organised bottom-up:
//!
//! * [`univariate`] and [`laurent`] hold polynomial arithmetic, generic over the
//!   coefficient ring ([`Scalar`]). Concrete aliases for the integer and
//!   rational instantiations live at the crate root.
//! * [`circle`] is exact arc-set algebra on the circle measured in turns, plus
//!   lazy sign evaluation of the torus polynomials `D_p`.
//! * [`signature`] turns normalized polynomials into integer step functions on
//!   the circle and isolates their circle roots with Sturm sequences.
//! * [`knots`] models knots as multisets of signed gordian generators.
//! * [`gordian_graph`] embeds the rooted binary tree and builds detours around
//!   finite forbidden sets, with machine-checkable certificates.

pub mod circle;
pub mod enclosure;
pub mod error;
pub mod gordian_graph;
pub mod knots;
pub mod laurent;
pub mod scalar;
pub mod signature;
pub mod univariate;

mod serial;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use circle::{Arc, ArcSet, Sign, TurnAngle};
pub use error::{Error, Result};
pub use gordian_graph::{DetourPlan, IsometryCertificate, TreeVertex};
pub use knots::{FormalKnot, GeneratorId, PSequence};
pub use laurent::{BasisCoeffs, HalfLaurent, LaurentPoly};
pub use scalar::Scalar;
pub use signature::{RootIsolation, StepFun};
pub use univariate::Poly;

/// Laurent polynomial with arbitrary-precision integer coefficients.
pub type IntLaurent = LaurentPoly<BigInt>;
/// Laurent polynomial with exact rational coefficients.
pub type RatLaurent = LaurentPoly<BigRational>;
/// Laurent polynomial with `f64` coefficients, for quick numeric checks.
pub type FloatLaurent = LaurentPoly<f64>;
/// Dense univariate polynomial over the integers.
pub type IntPoly = Poly<BigInt>;
/// Dense univariate polynomial over the rationals.
pub type RatPoly = Poly<BigRational>;
/// Dense univariate polynomial with `f64` coefficients.
pub type FloatPoly = Poly<f64>;

/// Largest generator parameter `p` that operations will expand explicitly
/// (arc lists, polynomial coefficients) unless told otherwise.
pub const DEFAULT_MAX_P: u64 = 1_000_000;
