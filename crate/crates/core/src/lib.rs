//! Exact arithmetic in the first Weyl algebra `A₁` over a finite field of
//! prime characteristic, together with its hom-associative twists `A₁ᵏ`.
//!
//! `A₁` is the unital associative algebra generated by `x` and `y` with the
//! relation `x·y − y·x = 1`, realized here as the Ore extension
//! `K[y][x; id, d/dy]` on the basis `{yᵐxⁿ}`. Twisting the product by an
//! endomorphism `α_k` (determined by `y ↦ k₀ + y + k_p y^p + k_{2p} y^{2p} + ⋯`,
//! exactly the endomorphisms commuting with `d/dy`) yields the weakly unital
//! hom-associative algebras `A₁ᵏ` with product `f * g = α_k(f·g)`.
//!
//! The crate is organized by subject:
//!
//! - [`gfpn`]: the coefficient fields `F_{p^n}` and binomial coefficients
//!   mod p via Lucas's theorem.
//! - [`weyl`]: sparse polynomials on the `yᵐxⁿ` basis with the Ore product.
//! - [`homtwist`]: the twisting maps `α_k`, the twisted product, and the
//!   twisted commutator/associator.
//! - [`structure`]: commuter, nuclei, center, power-associativity, and
//!   non-simplicity scans with witness reporting.
//! - [`maps`]: endomorphisms, homomorphisms between twists, derivations, and
//!   the isomorphism classification of the twists.
//! - [`deform`]: truncated multi-parameter formal deformations of `A₁`.
//! - [`expr`]: the expression grammar shared by the command-line tools.
//!
//! Everything is exact: coefficients are residues, there are no tolerances
//! anywhere. All values are immutable and all operations are pure, so the
//! whole crate is safe for unrestricted concurrent use.

pub mod deform;
mod error;
pub mod expr;
pub mod gfpn;
pub mod homtwist;
pub mod maps;
pub mod structure;
pub mod weyl;

pub use error::Error;
pub use gfpn::{Field, FieldElem};
pub use homtwist::TwistParams;
pub use weyl::WeylPoly;
