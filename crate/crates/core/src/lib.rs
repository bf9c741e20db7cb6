//! Computational machinery for Gröbner categories of finite sets.
//!
//! The crate is organised bottom-up:
//!
//! * [`finset`] and [`combinat`]: morphisms of the categories of finite sets
//!   (all maps, surjections, ordered surjections, injections) and counting.
//! * [`order`]: quasi-orders, sieves, the divisibility order on maps into a
//!   fixed set, bad-sequence search and the reduction data used by Higman's
//!   lemma.
//! * [`admissible`]: the lexicographic order on ordered surjections and an
//!   exhaustive checker for admissibility at a size bound.
//! * [`category`], [`module`], [`groebner`], [`oracle`], [`tilde`]: the
//!   truncated Gröbner engine for subfunctors of free functor modules over a
//!   prime field, with a row-reduction oracle.
//! * [`base_change`]: factorisation bijections, the ordered-surjection to
//!   injection functor and the free-module adjunction over `Z/q`.
//! * [`verify`]: the property suites exposed by the command-line tool.

pub mod admissible;
pub mod base_change;
pub mod category;
pub mod combinat;
pub mod error;
pub mod field;
pub mod finset;
pub mod groebner;
pub mod io;
pub mod linalg;
pub mod module;
pub mod oracle;
pub mod order;
pub mod sample;
pub mod tilde;
pub mod upoly;
pub mod verify;

pub use category::{CategoryOracle, NaturalMonoid, OrderedSurjections, PowerMap};
pub use error::{GcatError, Result};
pub use field::PrimeField;
pub use finset::{CatKind, FinMap, MapClass, Permutation};
pub use groebner::{buchberger, divide, GroebnerBasis, SubfunctorPresentation};
pub use module::{ModElement, Monomial};
