//! Exact polynomial algebra in graded variables `c_1, …, c_r`.
//!
//! A [`CPolynomial`] is stored in the monomial basis: the partition `ν`
//! indexes `c_ν = ∏ c_{ν_i}` and the empty partition is the constant 1.
//! Schur polynomials `S_λ = det(c_{λ_i - i + j})` (with `c_0 = 1` and
//! `c_i = 0` outside `[0, r]`) form a ℤ-basis of the homogeneous pieces; a
//! [`SchurExpansion`] holds coordinates in that basis.
//!
//! All coefficient arithmetic is checked and reports
//! [`Error::ArithmeticOverflow`] instead of wrapping.

use std::collections::BTreeMap;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{gamma_elements, Partition};

pub type Coeff = i64;

fn add_into(map: &mut BTreeMap<Partition, Coeff>, key: Partition, c: Coeff) -> Result<()> {
    if c == 0 {
        return Ok(());
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let sum = e.get().checked_add(c).ok_or(Error::ArithmeticOverflow)?;
            if sum == 0 {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
    }
    Ok(())
}

fn merge(a: &Partition, b: &Partition) -> Partition {
    Partition::from_multiset(a.parts().iter().chain(b.parts()).copied())
}

/// Integer polynomial in `c_1, …, c_r`, monomial basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CPolynomial {
    rank: u32,
    terms: BTreeMap<Partition, Coeff>,
}

impl CPolynomial {
    pub fn zero(rank: u32) -> Self {
        CPolynomial {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: u32) -> Self {
        CPolynomial {
            rank,
            terms: BTreeMap::from([(Partition::empty(), 1)]),
        }
    }

    /// The monomial `c_λ` with coefficient 1.
    pub fn monomial(lambda: &Partition, rank: u32) -> Result<Self> {
        lambda.check_rank(rank)?;
        Ok(CPolynomial {
            rank,
            terms: BTreeMap::from([(lambda.clone(), 1)]),
        })
    }

    /// The single variable `c_i`; `c_0 = 1`.
    pub fn variable(index: u32, rank: u32) -> Result<Self> {
        if index > rank {
            return Err(Error::VariableOutOfRange { index, rank });
        }
        Ok(CPolynomial {
            rank,
            terms: BTreeMap::from([(Partition::from_multiset([index]), 1)]),
        })
    }

    /// Builds a polynomial from `(monomial, coefficient)` pairs; zero
    /// coefficients are dropped and repeated keys summed.
    pub fn from_terms<I>(rank: u32, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, Coeff)>,
    {
        let mut map = BTreeMap::new();
        for (key, c) in terms {
            key.check_rank(rank)?;
            add_into(&mut map, key, c)?;
        }
        Ok(CPolynomial { rank, terms: map })
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn terms(&self) -> &BTreeMap<Partition, Coeff> {
        &self.terms
    }

    pub fn coeff(&self, monomial: &Partition) -> Coeff {
        self.terms.get(monomial).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common degree of all terms, `None` if mixed or zero.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut sizes = self.terms.keys().map(Partition::size);
        let first = sizes.next()?;
        sizes.all(|s| s == first).then_some(first)
    }

    fn check_rank(&self, other: &CPolynomial) -> Result<()> {
        if self.rank == other.rank {
            Ok(())
        } else {
            Err(Error::RankMismatch(self.rank, other.rank))
        }
    }

    pub fn add(&self, other: &CPolynomial) -> Result<Self> {
        self.check_rank(other)?;
        let mut terms = self.terms.clone();
        for (k, &c) in &other.terms {
            add_into(&mut terms, k.clone(), c)?;
        }
        Ok(CPolynomial {
            rank: self.rank,
            terms,
        })
    }

    pub fn sub(&self, other: &CPolynomial) -> Result<Self> {
        self.add(&other.scale(-1)?)
    }

    pub fn scale(&self, factor: Coeff) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (k, &c) in &self.terms {
            let v = c.checked_mul(factor).ok_or(Error::ArithmeticOverflow)?;
            add_into(&mut terms, k.clone(), v)?;
        }
        Ok(CPolynomial {
            rank: self.rank,
            terms,
        })
    }

    pub fn mul(&self, other: &CPolynomial) -> Result<Self> {
        self.check_rank(other)?;
        let mut terms = BTreeMap::new();
        for (a, &x) in &self.terms {
            for (b, &y) in &other.terms {
                let c = x.checked_mul(y).ok_or(Error::ArithmeticOverflow)?;
                add_into(&mut terms, merge(a, b), c)?;
            }
        }
        Ok(CPolynomial {
            rank: self.rank,
            terms,
        })
    }

    /// Expands in the Schur basis by iterated Pieri products.
    pub fn to_schur(&self) -> Result<SchurExpansion> {
        expand_to_schur(self)
    }
}

/// Jacobi–Trudi determinant `S_λ(c_1, …, c_r)` expanded over permutations.
///
/// Cost is up to `l(λ)!` products; zero entries prune the search. Returns
/// the zero polynomial when `λ_1 > r`, since the first row vanishes.
pub fn jacobi_trudi(lambda: &Partition, rank: u32) -> Result<CPolynomial> {
    let mut out = CPolynomial::zero(rank);
    if !lambda.fits_rank(rank) {
        return Ok(out);
    }
    let l = lambda.len();
    let mut used = vec![false; l];
    let mut factors = Vec::with_capacity(l);

    fn rec(
        row: usize,
        lambda: &Partition,
        rank: u32,
        used: &mut [bool],
        factors: &mut Vec<u32>,
        inversions: usize,
        out: &mut BTreeMap<Partition, Coeff>,
    ) -> Result<()> {
        let l = used.len();
        if row == l {
            let sign = if inversions % 2 == 0 { 1 } else { -1 };
            return add_into(out, Partition::from_multiset(factors.iter().copied()), sign);
        }
        for col in 0..l {
            if used[col] {
                continue;
            }
            // entry c_{λ_i - i + j}
            let index = lambda.part(row) as i64 - row as i64 + col as i64;
            if index < 0 || index > rank as i64 {
                continue;
            }
            let later_inversions = used[col + 1..].iter().filter(|&&u| u).count();
            used[col] = true;
            factors.push(index as u32);
            rec(
                row + 1,
                lambda,
                rank,
                used,
                factors,
                inversions + later_inversions,
                out,
            )?;
            factors.pop();
            used[col] = false;
        }
        Ok(())
    }

    rec(0, lambda, rank, &mut used, &mut factors, 0, &mut out.terms)?;
    Ok(out)
}

/// Coordinates in the Schur basis of a homogeneous polynomial of degree
/// `degree` at rank `rank`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurExpansion {
    rank: u32,
    degree: u32,
    coeffs: BTreeMap<Partition, Coeff>,
}

impl SchurExpansion {
    pub fn zero(rank: u32, degree: u32) -> Self {
        SchurExpansion {
            rank,
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// The basis vector `S_λ`.
    pub fn basis(lambda: &Partition, rank: u32) -> Result<Self> {
        lambda.check_rank(rank)?;
        Ok(SchurExpansion {
            rank,
            degree: lambda.size(),
            coeffs: BTreeMap::from([(lambda.clone(), 1)]),
        })
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, Coeff> {
        &self.coeffs
    }

    pub fn coeff(&self, lambda: &Partition) -> Coeff {
        self.coeffs.get(lambda).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn check_compatible(&self, other: &SchurExpansion) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch(self.rank, other.rank));
        }
        if self.degree != other.degree && !self.is_empty() && !other.is_empty() {
            return Err(Error::NotHomogeneous);
        }
        Ok(())
    }

    fn combine(&self, other: &SchurExpansion, sign: Coeff) -> Result<Self> {
        self.check_compatible(other)?;
        let mut coeffs = self.coeffs.clone();
        for (k, &c) in &other.coeffs {
            let c = c.checked_mul(sign).ok_or(Error::ArithmeticOverflow)?;
            add_into(&mut coeffs, k.clone(), c)?;
        }
        let degree = if self.is_empty() { other.degree } else { self.degree };
        Ok(SchurExpansion {
            rank: self.rank,
            degree,
            coeffs,
        })
    }

    pub fn add(&self, other: &SchurExpansion) -> Result<Self> {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &SchurExpansion) -> Result<Self> {
        self.combine(other, -1)
    }

    /// Sum of the coefficients; for members of the positive cone this is
    /// the weight `W`.
    pub fn weight(&self) -> Result<Coeff> {
        self.coeffs
            .values()
            .try_fold(0 as Coeff, |acc, &c| acc.checked_add(c))
            .ok_or(Error::ArithmeticOverflow)
    }

    /// Nonempty with every coefficient positive.
    pub fn is_fl_member(&self) -> bool {
        !self.coeffs.is_empty() && self.coeffs.values().all(|&c| c >= 1)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|&c| c >= 0)
    }

    /// Back to the monomial basis via Jacobi–Trudi.
    pub fn to_polynomial(&self) -> Result<CPolynomial> {
        let mut out = CPolynomial::zero(self.rank);
        for (lambda, &a) in &self.coeffs {
            out = out.add(&jacobi_trudi(lambda, self.rank)?.scale(a)?)?;
        }
        Ok(out)
    }
}

/// `c_i · S_λ` as a sum of `S_μ` over `μ` with `μ_1 ≥ λ_1 ≥ μ_2 ≥ λ_2 ≥ …
/// ≥ λ_l ≥ μ_{l+1} ≥ 0`, `|μ| = |λ| + i`, keeping only `μ_1 ≤ r`.
pub fn pieri(i: u32, lambda: &Partition, rank: u32) -> Result<SchurExpansion> {
    lambda.check_rank(rank)?;
    if i == 0 || i > rank {
        return Err(Error::VariableOutOfRange { index: i, rank });
    }
    let mut out = SchurExpansion::zero(rank, lambda.size() + i);
    for mu in pieri_shapes(i, lambda, rank) {
        out.coeffs.insert(mu, 1);
    }
    Ok(out)
}

/// The shapes of a rank-truncated horizontal strip of size `i` added to
/// `λ`, largest first.
fn pieri_shapes(i: u32, lambda: &Partition, rank: u32) -> Vec<Partition> {
    let l = lambda.len();
    // Row k may grow by at most λ_{k-1} - λ_k (row 0 by r - λ_1; the new
    // row l by λ_l).
    let caps: Vec<u32> = (0..=l)
        .map(|k| {
            if k == 0 {
                rank - lambda.part(0)
            } else {
                lambda.part(k - 1) - lambda.part(k)
            }
        })
        .collect();

    fn rec(k: usize, left: u32, caps: &[u32], adds: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == caps.len() {
            if left == 0 {
                out.push(adds.clone());
            }
            return;
        }
        let rest: u32 = caps[k + 1..].iter().sum();
        let lo = left.saturating_sub(rest);
        for a in (lo..=caps[k].min(left)).rev() {
            adds.push(a);
            rec(k + 1, left - a, caps, adds, out);
            adds.pop();
        }
    }

    let mut adds = Vec::with_capacity(l + 1);
    let mut found = Vec::new();
    rec(0, i, &caps, &mut adds, &mut found);
    found
        .into_iter()
        .map(|a| {
            let parts: Vec<u32> = (0..=l).map(|k| lambda.part(k) + a[k]).filter(|&p| p > 0).collect();
            Partition::from_sorted_unchecked(parts)
        })
        .collect()
}

/// Schur expansion of `c_ν` built from the empty shape by Pieri steps for
/// `ν_l, ν_{l-1}, …, ν_1`.
pub fn expand_monomial(nu: &Partition, rank: u32) -> Result<SchurExpansion> {
    nu.check_rank(rank)?;
    let mut current: BTreeMap<Partition, Coeff> = BTreeMap::from([(Partition::empty(), 1)]);
    for &part in nu.parts().iter().rev() {
        let mut next = BTreeMap::new();
        for (shape, &c) in &current {
            for mu in pieri_shapes(part, shape, rank) {
                add_into(&mut next, mu, c)?;
            }
        }
        current = next;
    }
    Ok(SchurExpansion {
        rank,
        degree: nu.size(),
        coeffs: current,
    })
}

/// The unique integer vector `(a_λ)` with `p = Σ a_λ S_λ`.
pub fn expand_to_schur(p: &CPolynomial) -> Result<SchurExpansion> {
    if p.is_zero() {
        return Ok(SchurExpansion::zero(p.rank, 0));
    }
    let degree = p.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
    let mut out = SchurExpansion::zero(p.rank, degree);
    for (nu, &a) in &p.terms {
        let e = expand_monomial(nu, p.rank)?;
        for (mu, &c) in &e.coeffs {
            let v = c.checked_mul(a).ok_or(Error::ArithmeticOverflow)?;
            add_into(&mut out.coeffs, mu.clone(), v)?;
        }
    }
    Ok(out)
}

pub fn weight(e: &SchurExpansion) -> Result<Coeff> {
    e.weight()
}

pub fn is_fl_member(e: &SchurExpansion) -> bool {
    e.is_fl_member()
}

/// All Schur polynomials of degree `k` at rank `r`, in enumeration order.
pub fn schur_basis(k: u32, rank: u32) -> Result<Vec<(Partition, CPolynomial)>> {
    gamma_elements(k, rank)
        .into_iter()
        .map(|lambda| jacobi_trudi(&lambda, rank).map(|s| (lambda, s)))
        .collect()
}

#[derive(Serialize)]
struct Term {
    partition: Vec<u32>,
    coeff: Coeff,
}

fn terms_desc(map: &BTreeMap<Partition, Coeff>) -> Vec<Term> {
    map.iter()
        .rev()
        .map(|(k, &c)| Term {
            partition: k.parts().to_vec(),
            coeff: c,
        })
        .collect()
}

impl Serialize for CPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("CPolynomial", 2)?;
        st.serialize_field("rank", &self.rank)?;
        st.serialize_field("terms", &terms_desc(&self.terms))?;
        st.end()
    }
}

impl Serialize for SchurExpansion {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("SchurExpansion", 3)?;
        st.serialize_field("rank", &self.rank)?;
        st.serialize_field("degree", &self.degree)?;
        st.serialize_field("terms", &terms_desc(&self.coeffs))?;
        st.end()
    }
}

fn render(map: &BTreeMap<Partition, Coeff>, f: &mut std::fmt::Formatter<'_>, atom: impl Fn(&Partition) -> String) -> std::fmt::Result {
    if map.is_empty() {
        return f.write_str("0");
    }
    for (i, (k, &c)) in map.iter().rev().enumerate() {
        let mag = c.unsigned_abs();
        match (i, c < 0) {
            (0, true) => f.write_str("-")?,
            (0, false) => {}
            (_, true) => f.write_str(" - ")?,
            (_, false) => f.write_str(" + ")?,
        }
        let body = atom(k);
        if mag != 1 || body.is_empty() {
            write!(f, "{mag}")?;
            if !body.is_empty() {
                f.write_str("*")?;
            }
        }
        f.write_str(&body)?;
    }
    Ok(())
}

impl std::fmt::Display for CPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        render(&self.terms, f, |k| {
            k.parts().iter().map(|p| format!("c{p}")).collect::<Vec<_>>().join("*")
        })
    }
}

impl std::fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        render(&self.coeffs, f, |k| format!("S({k})"))
    }
}
