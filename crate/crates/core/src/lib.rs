//! Dominance-order posets of integer partitions, Schur calculus in the
//! graded variables `c_1, …, c_r`, and the longest-chain lower bound `B(λ)`
//! for weights of Chern monomials.
//!
//! ```
//! use dombound::{compute_b, expand_monomial, Partition};
//!
//! let lambda: Partition = "4,1,1,1".parse().unwrap();
//! let cert = compute_b(&lambda).unwrap();
//! assert_eq!(cert.bound_b, 11);
//! let w = expand_monomial(&lambda, 7).unwrap().weight().unwrap();
//! assert!(w as u64 >= cert.bound_b);
//! ```

pub mod bound;
pub mod error;
pub mod exec;
pub mod partition;
pub mod poset;
pub mod schur;
pub mod verify;

pub use bound::{chain_bound, compute_b, longest_chain_bounds, BoundCertificate};
pub use error::{Error, Result};
pub use exec::Execution;
pub use partition::{
    cover_indices, gamma_elements, max_element, min_element, partitions_of, Partition, RankedShape,
};
pub use poset::{
    build_interval, longest_chain_length, longest_chains, maximal_chains, Chain, HasseInterval,
    DEFAULT_CHAIN_LIMIT,
};
pub use schur::{
    expand_monomial, expand_to_schur, is_fl_member, jacobi_trudi, pieri, weight, CPolynomial,
    Coeff, SchurExpansion,
};
pub use verify::{
    verify_cover_step, verify_cover_steps, verify_dominance, verify_reverse_dominance,
    verify_weight_bound, Record, Scope, VerificationReport, VerifyMode,
};
