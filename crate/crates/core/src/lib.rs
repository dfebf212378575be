//! Exact commutative algebra over prime fields and the rationals, built to
//! certify the presentation, multiplicities and fibre geometry of a family of
//! framed deformation rings.
//!
//! The kernel layers are general purpose: sparse multivariate polynomials with
//! global and local monomial orders ([`poly`]), Buchberger bases and
//! ideal-theoretic operations ([`groebner`]), Hilbert series data ([`hilbert`]),
//! Mora standard bases and tangent cones ([`local`]), and gcd/irreducibility
//! certificates ([`factor`]). The [`defring`] layer instantiates the
//! deformation-ring ideals and replays every claim as a chain of mechanical
//! certificates, producing a deterministic [`defring::VerificationReport`].

pub mod coeff;
pub mod defring;
pub mod factor;
pub mod groebner;
pub mod hilbert;
pub mod ideal_file;
pub mod local;
pub mod poly;

pub use coeff::{CoeffError, FieldDescriptor, FieldElement};
pub use groebner::{GroebnerBasis, Ideal};
pub use poly::{Monomial, MonomialOrder, Polynomial, Ring};
