//! Exact characteristic-number engine for closed oriented manifolds.
//!
//! Everything here is computed over the rationals. The crate is organised
//! bottom-up:
//!
//! * [`algebra`]: rationals, partitions, truncated graded polynomial rings in
//!   Pontryagin classes, polynomials in formal roots and symmetric reduction.
//! * [`series`]: truncated univariate power series (used for characteristic
//!   series and for q-expansions).
//! * [`genus`]: multiplicative sequences, the Â-class, the L-class and the
//!   Hopkins–Singer Wu-class series.
//! * [`twist`]: Chern characters of bundles built from the complexified
//!   tangent bundle, twisted Â-genus and twisted signature.
//! * [`manifold`]: finite cohomology-ring models, Wall pairs, products and
//!   Pontryagin numbers.
//! * [`bundle`]: the Borel–Hirzebruch fiber class of the universal
//!   F₄–𝕆P² bundle and the model of the total space M₄.
//! * [`qforms`]: Eisenstein series, Δ and the Witten genus.
//! * [`lattice`]: the 24-dimensional String cobordism lattice, divisibility
//!   and the twist sweep.
//! * [`verify`]: named verification suites shared by the CLI and the
//!   acceptance tests.

pub mod algebra;
pub mod bundle;
pub mod error;
pub mod genus;
pub mod lattice;
pub mod linalg;
pub mod manifold;
pub mod qforms;
pub mod series;
pub mod twist;
pub mod verify;

pub use algebra::{
    bernoulli, pair, poly_mul, symmetric_reduce, GradedPoly, Partition, PontryaginNumbers,
    Rational, RootPoly,
};
pub use bundle::{RootSystemData, DEFAULT_CAP};
pub use error::{Error, Result};
pub use genus::{ahat_class, l_class, wu_spin_class, CharacteristicSeries, MultiplicativeSequence};
pub use lattice::{CobordismVector, KappaData, SublatticeConstraint};
pub use manifold::{RingElement, RingModel, WallPair};
pub use qforms::QSeries;
pub use twist::{ChernCharacter, TwistExpr};
