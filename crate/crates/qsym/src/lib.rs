//! Exact computer algebra for quantum planes, the finite-dimensional Hopf
//! algebras that (co)act on them, their invariant and coinvariant subrings,
//! and the associated McKay quivers.
//!
//! Everything is computed over exact cyclotomic fields ([`scalar`]); there is
//! no floating point anywhere. The layers build on one another:
//!
//! * [`scalar`] — arithmetic in Q(ζ_N) and quantum binomial coefficients;
//! * [`ncalg`] — graded algebras presented by generators and rewrite rules
//!   (quantum, Jordan and anticommutative planes, commutative quotients),
//!   normal forms, Hilbert series and confluence checking;
//! * [`groups`] — the finite subgroups of SL(2) (cyclic, binary dihedral,
//!   binary tetrahedral/octahedral/icosahedral), dihedral groups, character
//!   tables and character groups;
//! * [`hopf`] — Hopf algebras as exact structure-constant tensors: group
//!   algebras, duals, Taft algebras, finite quotients of the quantized
//!   coordinate ring of SL(2), Drinfeld doubles, quotients, axiom checking;
//! * [`action`] — coactions and group actions on quantum planes, inner
//!   faithfulness, homological (co)determinants, module duals;
//! * [`invariants`] — invariant/coinvariant subrings degree by degree, Molien
//!   series, minimal generators, relations, hypersurface verification, and
//!   two-stage coinvariant pipelines;
//! * [`classify`] — enumeration of trivial-determinant automorphism groups,
//!   the catalog of verified (co)actions, and extension uniqueness counts;
//! * [`mckay`] — fusion data and McKay quivers with ADE/loop-type recognition.

pub mod action;
pub mod classify;
pub mod groups;
pub mod hopf;
pub mod invariants;
pub mod mckay;
pub mod ncalg;
pub mod scalar;
