//! Exact arithmetic for inverse semigroups, their actions on finite spaces,
//! and the associated groupoid convolution algebras.
//!
//! The crate is organized around one pipeline:
//!
//! 1. [`pbij`] — partial bijections of a finite ground set (the symmetric
//!    inverse semigroup `I_T`, the ambient object every other construction
//!    embeds into).
//! 2. [`isg`] — finite inverse semigroups as closed element tables:
//!    closure generation, the natural partial order, idempotent
//!    semilattices, and the classification of semigroups in which every
//!    nonzero element sits below a unique maximal one, together with the
//!    partial group structure carried by the maximal elements.
//! 3. [`groupoid`] — actions of such semigroups on finite spaces and the
//!    groupoid of an action: arrows `(x, ω)` with `x` a maximal-element
//!    label and `ω` a point of the acted space.
//! 4. [`star_algebra`] — the convolution ⋆-algebra of a finite groupoid,
//!    its regular representation and operator norms, the canonical map
//!    from the semigroup algebra onto it, the crossed-product algebra of a
//!    single partial bijection, and the localization algebra with its
//!    coherence ideal.
//! 5. [`toeplitz`] — the symbolic Toeplitz inverse semigroup of an integer
//!    cone `P ⊆ ℤ^d`, window-truncated boundary patterns, the Wiener-Hopf
//!    groupoid, and the character-space comparison that detects when the
//!    semigroup algebra maps isomorphically onto the groupoid algebra.
//! 6. [`zoo`] — constructors and verifiers for the named example families:
//!    Clifford and Reilly semigroups, odometers, Glimm localizations,
//!    Cuntz-Krieger cylinder semigroups, and the conjugation action on the
//!    idempotent character space.
//!
//! All combinatorial computations are exact.  Algebra coefficients are
//! generic over a [`scalar::Scalar`]; the concrete aliases [`Exact`]
//! (complex rationals) and [`Approx`] (complex doubles) cover the two
//! regimes actually used: exact verification of ⋆-homomorphism identities
//! and floating-point operator norms.

pub mod groupoid;
pub mod isg;
pub mod pbij;
pub mod scalar;
pub mod star_algebra;
pub mod toeplitz;
pub mod zoo;

/// Exact coefficient type: complex numbers with arbitrary-precision
/// rational real and imaginary parts.
pub type Exact = num_complex::Complex<num_rational::BigRational>;

/// Floating-point coefficient type, used for operator norms.
pub type Approx = num_complex::Complex<f64>;

pub use groupoid::{Action, Groupoid};
pub use isg::{FTildeVerdict, InverseSemigroup, MaximalStructure};
pub use pbij::{GroundSet, PartialBijection};
