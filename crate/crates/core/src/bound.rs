//! The longest-chain lower bound `B(λ)` and its certificate.
//!
//! For `λ ⊢ n` and a longest chain `(n) = λ^(L) ≻ … ≻ λ^(0) = λ`, the chain
//! value is `1 + Σ_{i<L} 2^(l(λ^(i)) - 2)`; `B(λ)` is its maximum over all
//! longest chains. The maximum is found by dynamic programming over the
//! edges that extend a longest path, so no chain set is ever enumerated.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poset::{Chain, HasseInterval};

/// `2^(l(ν) - 2)`, the contribution of a non-top chain element.
pub fn step_contribution(nu: &Partition) -> Result<u64> {
    let exp = nu
        .len()
        .checked_sub(2)
        .ok_or_else(|| Error::InvalidArgument(format!("{nu} has fewer than two parts")))?;
    1u64.checked_shl(exp as u32).ok_or(Error::ArithmeticOverflow)
}

/// `2^(l(λ) - 1)`.
pub fn floor_bound(lambda: &Partition) -> Result<u64> {
    let exp = lambda.len().saturating_sub(1) as u32;
    1u64.checked_shl(exp).ok_or(Error::ArithmeticOverflow)
}

/// `B(C)` for a chain stored top-down: one for the top element plus the
/// contribution of every other element.
pub fn chain_bound(chain: &Chain) -> Result<u64> {
    chain.elements()[1..].iter().try_fold(1u64, |acc, nu| {
        acc.checked_add(step_contribution(nu)?)
            .ok_or(Error::ArithmeticOverflow)
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCertificate {
    pub lambda: Partition,
    pub n: u32,
    /// `l((n), λ)`.
    pub longest_length: usize,
    pub best_chain: Chain,
    /// `per_step[i] = 2^(l(λ^(i)) - 2)`, where `λ^(0) = λ` is the bottom of
    /// `best_chain`.
    pub per_step: Vec<u64>,
    pub bound_b: u64,
    pub floor_bound: u64,
}

impl BoundCertificate {
    /// Re-derives every stored quantity from `best_chain`.
    pub fn is_consistent(&self) -> bool {
        let els = self.best_chain.elements();
        let l0 = self.longest_length;
        els.len() == l0 + 1
            && self.best_chain.is_saturated()
            && els[0] == Partition::from_multiset([self.n])
            && els[l0] == self.lambda
            && self.per_step.len() == l0
            && (0..l0).all(|i| step_contribution(&els[l0 - i]).ok() == Some(self.per_step[i]))
            && self.bound_b == 1 + self.per_step.iter().sum::<u64>()
            && chain_bound(&self.best_chain).ok() == Some(self.bound_b)
            && self.bound_b >= self.floor_bound
    }
}

/// Computes `B(λ)` with a chain that attains it.
///
/// Ties between optimal chains go to the first one in enumeration order
/// (children visited largest first).
pub fn compute_b(lambda: &Partition) -> Result<BoundCertificate> {
    if lambda.is_empty() {
        return Err(Error::InvalidArgument("B is defined for nonempty partitions".into()));
    }
    let n = lambda.size();
    let top = Partition::from_multiset([n]);
    let iv = HasseInterval::build(&top, lambda, n)?;
    let l0 = iv.longest_length();
    let bottom = iv.bottom_index();
    let nodes = iv.nodes();

    // best[u]: max over longest-path continuations u -> … -> λ of the
    // summed contributions of every element after u.
    let mut best: Vec<Option<u64>> = vec![None; nodes.len()];
    best[bottom] = Some(0);
    for u in (0..nodes.len()).rev() {
        if u == bottom {
            continue;
        }
        let mut acc: Option<u64> = None;
        for &v in iv.children_of(u) {
            if !iv.on_longest_path(u, v) {
                continue;
            }
            if let Some(rest) = best[v] {
                let cand = rest
                    .checked_add(step_contribution(&nodes[v])?)
                    .ok_or(Error::ArithmeticOverflow)?;
                acc = Some(acc.map_or(cand, |a| a.max(cand)));
            }
        }
        best[u] = acc;
    }
    let total = best[0].expect("top reaches the bottom along a longest path");
    let bound_b = total.checked_add(1).ok_or(Error::ArithmeticOverflow)?;

    let mut path = vec![0usize];
    let mut u = 0;
    while u != bottom {
        let need = best[u].unwrap();
        let mut next = None;
        for &v in iv.children_of(u) {
            if !iv.on_longest_path(u, v) {
                continue;
            }
            if let Some(rest) = best[v] {
                if rest + step_contribution(&nodes[v])? == need {
                    next = Some(v);
                    break;
                }
            }
        }
        u = next.expect("an optimal successor exists");
        path.push(u);
    }
    let best_chain = Chain::new(path.iter().map(|&i| nodes[i].clone()).collect())?;
    let per_step = (0..l0)
        .map(|i| step_contribution(&best_chain.elements()[l0 - i]))
        .collect::<Result<Vec<_>>>()?;

    Ok(BoundCertificate {
        lambda: lambda.clone(),
        n,
        longest_length: l0,
        best_chain,
        per_step,
        bound_b,
        floor_bound: floor_bound(lambda)?,
    })
}

/// Every longest chain from `(n)` to `λ` with its value `B(C)`, for audits.
pub fn longest_chain_bounds(lambda: &Partition, limit: Option<usize>) -> Result<Vec<(Chain, u64)>> {
    let n = lambda.size();
    let top = Partition::from_multiset([n]);
    let iv = HasseInterval::build(&top, lambda, n)?;
    iv.longest_chains(limit)?
        .into_iter()
        .map(|c| chain_bound(&c).map(|b| (c, b)))
        .collect()
}
