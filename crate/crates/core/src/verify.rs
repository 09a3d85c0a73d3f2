//! Mechanical checks of the weight inequalities and Schur positivity under
//! dominance, as pure-data reports.

use std::time::Instant;

use serde::Serialize;

use crate::bound::{compute_b, step_contribution};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::partition::{cover_indices, gamma_elements, partitions_of, Partition};
use crate::poset::{Chain, HasseInterval};
use crate::schur::{expand_monomial, expand_to_schur, jacobi_trudi, CPolynomial, Coeff, SchurExpansion};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerifyMode {
    WeightBound,
    Dominance,
    CoverSteps,
}

impl VerifyMode {
    pub fn name(self) -> &'static str {
        match self {
            VerifyMode::WeightBound => "weight-bound",
            VerifyMode::Dominance => "dominance",
            VerifyMode::CoverSteps => "cover-steps",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Scope {
    pub mode: VerifyMode,
    /// Degree: `n` for the weight sweeps, `k` for dominance.
    pub n: u32,
    pub rank: u32,
    /// Number of partitions or pairs checked.
    pub items: usize,
}

/// One checked partition or pair. Fields that do not apply to a check are
/// left out.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Record {
    pub lambda: Partition,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<Partition>,
    /// Sum of Schur coefficients of the checked polynomial.
    pub weight: Coeff,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub floor: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub required: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub identity_holds: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fl_member: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub telescoping_matches: Option<bool>,
    pub pass: bool,
}

impl Record {
    fn new(lambda: &Partition, weight: Coeff) -> Self {
        Record {
            lambda: lambda.clone(),
            mu: None,
            weight,
            bound: None,
            floor: None,
            required: None,
            identity_holds: None,
            fl_member: None,
            telescoping_matches: None,
            pass: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub scope: Scope,
    pub records: Vec<Record>,
    pub all_pass: bool,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    fn assemble(mode: VerifyMode, n: u32, rank: u32, records: Vec<Record>, start: Instant) -> Self {
        VerificationReport {
            scope: Scope {
                mode,
                n,
                rank,
                items: records.len(),
            },
            all_pass: records.iter().all(|r| r.pass),
            records,
            elapsed_ms: start.elapsed().as_millis() as u64,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(|r| !r.pass)
    }
}

fn check_rank_covers(n: u32, rank: u32) -> Result<()> {
    if rank < n {
        Err(Error::RankTooSmall { n, rank })
    } else {
        Ok(())
    }
}

/// `W(c_λ) ≥ B(λ) ≥ 2^(l(λ)-1)` for one partition at rank `r ≥ |λ|`.
pub fn weight_bound_record(lambda: &Partition, rank: u32) -> Result<Record> {
    check_rank_covers(lambda.size(), rank)?;
    let w = expand_monomial(lambda, rank)?.weight()?;
    let cert = compute_b(lambda)?;
    let mut rec = Record::new(lambda, w);
    rec.bound = Some(cert.bound_b);
    rec.floor = Some(cert.floor_bound);
    rec.pass = w >= 0 && w as u64 >= cert.bound_b && cert.bound_b >= cert.floor_bound;
    Ok(rec)
}

/// Checks the weight chain of inequalities for every partition of `n`.
pub fn verify_weight_bound(n: u32, rank: u32, exec: Execution) -> Result<VerificationReport> {
    let start = Instant::now();
    check_rank_covers(n, rank)?;
    let items = partitions_of(n);
    let records = exec
        .map(&items, |lambda| weight_bound_record(lambda, rank))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    Ok(VerificationReport::assemble(VerifyMode::WeightBound, n, rank, records, start))
}

/// `c_μ - c_λ` at rank `r`.
pub fn monomial_difference(lambda: &Partition, mu: &Partition, rank: u32) -> Result<CPolynomial> {
    CPolynomial::monomial(mu, rank)?.sub(&CPolynomial::monomial(lambda, rank)?)
}

/// For a cover `λ ≻ μ`: the identity `c_μ - c_λ = S_(μ_i, μ_j) ∏_{p≠i,j} c_{μ_p}`
/// and the estimate `W(c_μ - c_λ) ≥ 2^(l(μ)-2)`.
pub fn verify_cover_step(lambda: &Partition, mu: &Partition, rank: u32) -> Result<Record> {
    let (i, j) = cover_indices(lambda, mu).ok_or_else(|| Error::NotACover {
        lambda: lambda.clone(),
        mu: mu.clone(),
    })?;
    check_rank_covers(lambda.size(), rank)?;

    let lhs = monomial_difference(lambda, mu, rank)?;
    let pair = Partition::new([mu.part(i), mu.part(j)])?;
    let rest = Partition::from_multiset(
        mu.parts()
            .iter()
            .enumerate()
            .filter(|&(p, _)| p != i && p != j)
            .map(|(_, &v)| v),
    );
    let rhs = jacobi_trudi(&pair, rank)?.mul(&CPolynomial::monomial(&rest, rank)?)?;
    let expansion = expand_to_schur(&lhs)?;
    let w = expansion.weight()?;
    let required = step_contribution(mu)?;

    let mut rec = Record::new(lambda, w);
    rec.mu = Some(mu.clone());
    rec.required = Some(required);
    rec.identity_holds = Some(lhs == rhs);
    rec.fl_member = Some(expansion.is_fl_member());
    rec.pass = lhs == rhs && expansion.is_fl_member() && w as u64 >= required;
    Ok(rec)
}

/// Every cover pair of `Par(n)`, upper element in enumeration order.
pub fn cover_pairs(n: u32) -> Vec<(Partition, Partition)> {
    partitions_of(n)
        .into_iter()
        .flat_map(|lambda| {
            let below = lambda.down_covers(n).expect("partitions of n fit rank n");
            below.into_iter().map(move |mu| (lambda.clone(), mu))
        })
        .collect()
}

pub fn verify_cover_steps(n: u32, rank: u32, exec: Execution) -> Result<VerificationReport> {
    let start = Instant::now();
    check_rank_covers(n, rank)?;
    let pairs = cover_pairs(n);
    let records = exec
        .map(&pairs, |(lambda, mu)| verify_cover_step(lambda, mu, rank))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    Ok(VerificationReport::assemble(VerifyMode::CoverSteps, n, rank, records, start))
}

/// Expansion of `c_μ - c_λ` as a sum of cover-step differences along a
/// top-down chain from `λ` to `μ`.
pub fn telescope(chain: &Chain, rank: u32) -> Result<SchurExpansion> {
    let k = chain.top().size();
    let mut total = SchurExpansion::zero(rank, k);
    for w in chain.elements().windows(2) {
        let step = expand_to_schur(&monomial_difference(&w[0], &w[1], rank)?)?;
        total = total.add(&step)?;
    }
    Ok(total)
}

/// `λ ≥ μ` in `Γ(k, r)` implies `c_μ - c_λ` is Schur positive (or zero when
/// equal); the direct expansion is cross-checked against telescoping along
/// a longest chain.
pub fn verify_reverse_dominance(lambda: &Partition, mu: &Partition, k: u32, rank: u32) -> Result<Record> {
    for x in [lambda, mu] {
        if x.size() != k {
            return Err(Error::InvalidArgument(format!("{x} is not a partition of {k}")));
        }
        x.check_rank(rank)?;
    }
    if !lambda.dominates(mu)? {
        return Err(Error::NotComparable {
            top: lambda.clone(),
            bottom: mu.clone(),
        });
    }
    let direct = expand_to_schur(&monomial_difference(lambda, mu, rank)?)?;
    let chain = HasseInterval::build(lambda, mu, rank)?.a_longest_chain();
    let telescoped = telescope(&chain, rank)?;
    let matches = telescoped.coeffs() == direct.coeffs();

    let mut rec = Record::new(lambda, direct.weight()?);
    rec.mu = Some(mu.clone());
    rec.fl_member = Some(direct.is_fl_member());
    rec.telescoping_matches = Some(matches);
    let positive = if lambda == mu {
        direct.is_empty()
    } else {
        direct.is_fl_member()
    };
    rec.pass = positive && matches;
    Ok(rec)
}

/// Every strictly comparable pair `λ > μ` of `Γ(k, r)`.
pub fn comparable_pairs(k: u32, rank: u32) -> Vec<(Partition, Partition)> {
    let elems = gamma_elements(k, rank);
    let mut out = Vec::new();
    for (a, lambda) in elems.iter().enumerate() {
        for mu in &elems[a + 1..] {
            if lambda.dominates(mu).unwrap() {
                out.push((lambda.clone(), mu.clone()));
            }
        }
    }
    out
}

pub fn verify_dominance(k: u32, rank: u32, exec: Execution) -> Result<VerificationReport> {
    let start = Instant::now();
    if k == 0 || rank == 0 {
        return Err(Error::InvalidArgument("k and r must be positive".into()));
    }
    let pairs = comparable_pairs(k, rank);
    let records = exec
        .map(&pairs, |(lambda, mu)| verify_reverse_dominance(lambda, mu, k, rank))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    Ok(VerificationReport::assemble(VerifyMode::Dominance, k, rank, records, start))
}

/// Runs one sweep by mode.
pub fn run(mode: VerifyMode, n: u32, rank: u32, exec: Execution) -> Result<VerificationReport> {
    match mode {
        VerifyMode::WeightBound => verify_weight_bound(n, rank, exec),
        VerifyMode::Dominance => verify_dominance(n, rank, exec),
        VerifyMode::CoverSteps => verify_cover_steps(n, rank, exec),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn weight_bound_4111() {
        let rec = weight_bound_record(&p("4111"), 7).unwrap();
        assert_eq!(rec.bound, Some(11));
        assert_eq!(rec.floor, Some(8));
        assert!(rec.weight >= 11);
        assert!(rec.pass);
    }

    #[test]
    fn weight_bound_top_and_bottom() {
        for n in 1..=6 {
            let rec = weight_bound_record(&Partition::from_multiset([n]), n).unwrap();
            assert_eq!((rec.weight, rec.bound, rec.floor), (1, Some(1), Some(1)));
        }
        let ones = crate::partition::min_element(7);
        let rec = weight_bound_record(&ones, 7).unwrap();
        assert_eq!(rec.weight, 232);
        assert_eq!(rec.floor, Some(64));
        assert!(rec.pass);
    }

    #[test]
    fn weight_bound_needs_rank() {
        assert_eq!(
            verify_weight_bound(7, 3, Execution::Sequential),
            Err(Error::RankTooSmall { n: 7, rank: 3 })
        );
    }

    #[test]
    fn cover_step_examples() {
        let rec = verify_cover_step(&p("421"), &p("331"), 7).unwrap();
        assert_eq!(rec.identity_holds, Some(true));
        assert_eq!((rec.weight, rec.required), (2, Some(2)));
        let e = expand_to_schur(&monomial_difference(&p("421"), &p("331"), 7).unwrap()).unwrap();
        assert_eq!(e.coeffs().len(), 2);
        assert_eq!((e.coeff(&p("43")), e.coeff(&p("331"))), (1, 1));

        let rec = verify_cover_step(&p("2"), &p("11"), 2).unwrap();
        assert_eq!((rec.weight, rec.required, rec.pass), (1, Some(1), true));

        assert!(matches!(
            verify_cover_step(&p("421"), &p("322"), 7),
            Err(Error::NotACover { .. })
        ));
        assert!(matches!(
            verify_cover_step(&p("421"), &p("331"), 6),
            Err(Error::RankTooSmall { .. })
        ));
    }

    #[test]
    fn reverse_dominance_examples() {
        let rec = verify_reverse_dominance(&p("5"), &p("41"), 5, 5).unwrap();
        assert!(rec.pass);
        assert_eq!(rec.weight, 1);
        let same = verify_reverse_dominance(&p("32"), &p("32"), 5, 5).unwrap();
        assert_eq!(same.fl_member, Some(false));
        assert_eq!(same.weight, 0);
        assert!(same.pass);
        let rec = verify_reverse_dominance(&p("421"), &p("2221"), 7, 7).unwrap();
        assert!(rec.pass);
        assert!(matches!(
            verify_reverse_dominance(&p("3111"), &p("222"), 6, 6),
            Err(Error::NotComparable { .. })
        ));
        assert!(matches!(
            verify_reverse_dominance(&p("51"), &p("33"), 6, 4),
            Err(Error::RankExceeded { .. })
        ));
    }

    #[test]
    fn dominance_sweep_on_total_order() {
        let rep = verify_dominance(5, 5, Execution::Sequential).unwrap();
        assert_eq!(rep.records.len(), 21);
        assert!(rep.all_pass);
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let a = verify_cover_steps(6, 6, Execution::Sequential).unwrap();
        let b = verify_cover_steps(6, 6, Execution::Parallel).unwrap();
        assert_eq!(a.records, b.records);
        assert!(a.all_pass);
    }
}
