//! Exact positivity analysis for homogeneous vector bundles on flag varieties.
//!
//! A homogeneous vector bundle on a flag variety `G/P` is induced from a
//! module over the parabolic subgroup `P`. For positivity questions that are
//! decided on the Schubert test curves `C(α_j)` ≅ ℙ¹, all that matters is the
//! multiset of weights of that module: the restriction of the bundle to
//! `C(α_j)` splits as `⊕ O(n_j)` where the `n_j` are weight/coroot pairings.
//! This crate implements that weight calculus with exact integer arithmetic —
//! no floating point anywhere — and derives a positivity verdict from it:
//!
//! * negative degree on some test curve ⇒ not nef;
//! * all test degrees positive and all fiber-direction degrees zero ⇒
//!   strictly nef, globally generated (Snow's criterion: dominant maximal
//!   weights) and hence ample;
//! * everything else ⇒ nef but not strict.
//!
//! # Modules
//!
//! - [`rootsys`] — Cartan matrices of the simple types `A`–`G`, positive-root
//!   enumeration by reflection closure, coroots, and the canonical pairing
//!   `⟨λ, α∨⟩` between weights and roots.
//! - [`weights`] — dominance, the difference-is-dominant partial order on
//!   weights, the alternative root order, and extraction of maximal weights
//!   from a weight multiset.
//! - [`flagbundle`] — homogeneous bundles as weight data over a parabolic:
//!   splitting types on test curves, fiber triviality, Snow's global
//!   generation test, and the final [`Verdict`].
//! - [`curvecalc`] — split bundles on a smooth rational curve: pullback along
//!   finite covers, Hartshorne's ampleness criterion, and the
//!   ample-on-curves ⇔ positive-quotient-degree equivalence at desk scale.
//! - [`cli`] — the textual bundle-spec format and the human/machine report
//!   renderers behind the `flagnef` binary.
//!
//! # Examples
//!
//! Each major capability has a runnable example:
//!
//! ```bash
//! cargo run -p flagnef --example enumerate_roots        # root systems and pairings
//! cargo run -p flagnef --example restrict_to_curves     # splitting types on C(α_j)
//! cargo run -p flagnef --example classify_bundles       # nef/ample verdicts
//! cargo run -p flagnef --example snow_global_generation # maximal weights, both orders
//! cargo run -p flagnef --example curve_model            # split bundles on ℙ¹
//! cargo run -p flagnef --example batch_reports          # spec files and reports
//! ```
//!
//! # Quick start
//!
//! ```
//! use flagnef::{HomogeneousBundle, ParabolicSpec, PositivityStatus, RootSystem,
//!               SimpleType, Weight, WeightMultiset};
//!
//! // O(1) ⊕ O(1) on ℙ¹ = SL₂/B: strictly nef, hence ample.
//! let rs = RootSystem::new("A1".parse::<SimpleType>()?);
//! let parabolic = ParabolicSpec::new(rs, [])?;
//! let weights = WeightMultiset::new([(Weight::new(vec![1]), 2)])?;
//! let verdict = HomogeneousBundle::new(parabolic, weights)?.classify();
//! assert_eq!(verdict.status, PositivityStatus::StrictlyNefHenceAmple);
//! assert!(verdict.globally_generated);
//! # Ok::<(), flagnef::Error>(())
//! ```
//!
//! The `flagnef` binary exposes the same operations on the command line; see
//! the repository README for the spec-file grammar.

pub mod cli;
pub mod curvecalc;
mod error;
pub mod flagbundle;
pub mod rootsys;
pub mod weights;

pub use error::Error;
pub use flagbundle::{
    HomogeneousBundle, ParabolicSpec, PositivityStatus, SplittingType, Verdict,
};
pub use rootsys::{CartanMatrix, Family, Root, RootSystem, SimpleType, Weight};
pub use weights::WeightMultiset;
