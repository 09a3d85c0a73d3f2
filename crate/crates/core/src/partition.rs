//! Integer partitions under the dominance order.
//!
//! A [`Partition`] is always stored in canonical form: positive parts in
//! weakly decreasing order, trailing zeros stripped. The derived `Ord` is
//! lexicographic on the part sequence, which is a linear extension of
//! dominance; "reverse lexicographic" order (largest first) is therefore a
//! topological order from the top of any dominance interval.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from raw parts, stripping zeros.
    ///
    /// Zeros may appear only as trailing padding; a positive part that is
    /// larger than its predecessor is rejected.
    pub fn new<I: IntoIterator<Item = u32>>(raw: I) -> Result<Self> {
        let raw: Vec<u32> = raw.into_iter().collect();
        let parts: Vec<u32> = raw.iter().copied().filter(|&p| p > 0).collect();
        let zero_then_positive = raw
            .iter()
            .skip_while(|&&p| p > 0)
            .any(|&p| p > 0);
        if zero_then_positive || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing(raw));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Sorts arbitrary positive parts into a partition (multiset constructor).
    pub fn from_multiset<I: IntoIterator<Item = u32>>(raw: I) -> Self {
        let mut parts: Vec<u32> = raw.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts, `l(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The integer being partitioned.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Part `i` (0-based), zero-padded past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Largest part, 0 for the empty partition.
    pub fn largest(&self) -> u32 {
        self.part(0)
    }

    pub fn fits_rank(&self, rank: u32) -> bool {
        self.largest() <= rank
    }

    pub(crate) fn check_rank(&self, rank: u32) -> Result<()> {
        if self.fits_rank(rank) {
            Ok(())
        } else {
            Err(Error::RankExceeded {
                partition: self.clone(),
                rank,
            })
        }
    }

    fn check_same_size(&self, other: &Partition) -> Result<()> {
        if self.size() == other.size() {
            Ok(())
        } else {
            Err(Error::SizeMismatch {
                left: self.clone(),
                right: other.clone(),
            })
        }
    }

    /// Dominance: every prefix sum of `self` is at least that of `other`.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        self.check_same_size(other)?;
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0u32, 0u32);
        for i in 0..len {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether `self` covers `other` in the dominance order.
    pub fn covers(&self, other: &Partition) -> Result<bool> {
        self.check_same_size(other)?;
        Ok(cover_indices(self, other).is_some())
    }

    /// Every partition covered by `self`, largest first.
    ///
    /// Built constructively: move one unit from part `i` to a later part `j`
    /// (possibly a new trailing part), keeping only results that are
    /// partitions with `j = i + 1` or equal parts at `i` and `j` afterwards.
    pub fn down_covers(&self, rank: u32) -> Result<Vec<Partition>> {
        self.check_rank(rank)?;
        let l = self.len();
        let mut out = Vec::new();
        for i in 0..l {
            for j in (i + 1)..=l {
                let mut parts = self.parts.clone();
                if j == l {
                    parts.push(0);
                }
                parts[i] -= 1;
                parts[j] += 1;
                if j != i + 1 && parts[i] != parts[j] {
                    continue;
                }
                if parts.windows(2).all(|w| w[0] >= w[1]) {
                    parts.retain(|&p| p > 0);
                    out.push(Partition::from_sorted_unchecked(parts));
                }
            }
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out.dedup();
        Ok(out)
    }

    /// Writes the compact digit form ("4111") when every part is a single
    /// digit.
    pub fn compact(&self) -> Option<String> {
        if self.parts.iter().all(|&p| p <= 9) {
            Some(self.parts.iter().map(|p| p.to_string()).collect())
        } else {
            None
        }
    }
}

/// The indices `i < j` (0-based) with `λ_i = μ_i + 1`, `λ_j = μ_j - 1` and
/// all other parts equal, provided `j = i + 1` or `μ_i = μ_j`.
///
/// Returns `None` when `λ` does not cover `μ` (including size mismatch).
pub fn cover_indices(lambda: &Partition, mu: &Partition) -> Option<(usize, usize)> {
    if lambda.size() != mu.size() {
        return None;
    }
    let len = lambda.len().max(mu.len());
    let mut diffs = (0..len).filter(|&k| lambda.part(k) != mu.part(k));
    let i = diffs.next()?;
    let j = diffs.next()?;
    if diffs.next().is_some() {
        return None;
    }
    let shape_ok = lambda.part(i) == mu.part(i) + 1 && lambda.part(j) + 1 == mu.part(j);
    let adjacent_or_level = j == i + 1 || mu.part(i) == mu.part(j);
    (shape_ok && adjacent_or_level).then_some((i, j))
}

/// All partitions of `n` with largest part at most `rank`, largest first in
/// lexicographic order.
pub fn gamma_elements(n: u32, rank: u32) -> Vec<Partition> {
    fn rec(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::from_sorted_unchecked(prefix.clone()));
            return;
        }
        for p in (1..=max_part.min(remaining)).rev() {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 && rank == 0 {
        return out;
    }
    rec(n, rank, &mut Vec::new(), &mut out);
    out
}

/// All partitions of `n`.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    gamma_elements(n, n)
}

/// The maximum of `Γ(n, r)`: `r` repeated `⌊n/r⌋` times, then the remainder.
pub fn max_element(n: u32, rank: u32) -> Partition {
    assert!(rank >= 1, "rank must be positive");
    let mut parts = vec![rank; (n / rank) as usize];
    if n % rank != 0 {
        parts.push(n % rank);
    }
    Partition::from_sorted_unchecked(parts)
}

/// The minimum `(1, …, 1)` of `Par(n)`.
pub fn min_element(n: u32) -> Partition {
    Partition::from_sorted_unchecked(vec![1; n as usize])
}

/// A partition together with the rank it is considered at, i.e. an element
/// of `Γ(n, r)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RankedShape {
    partition: Partition,
    rank: u32,
}

impl RankedShape {
    pub fn new(partition: Partition, rank: u32) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidArgument("rank must be positive".into()));
        }
        partition.check_rank(rank)?;
        Ok(RankedShape { partition, rank })
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Accepts "4,1,1,1" or the compact digit form "4111". A comma-free string
/// of several digits is read digit by digit; write a single part of 10 or
/// more with a trailing comma ("12,"). The empty string is the empty
/// partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let raw: Vec<u32> = if s.contains(',') {
            let body = s.strip_suffix(',').unwrap_or(s);
            body.split(',')
                .map(|t| t.trim().parse::<u32>().map_err(|_| bad("expected integer parts")))
                .collect::<Result<_>>()?
        } else {
            if !s.chars().all(|c| c.is_ascii_digit()) {
                return Err(bad("expected digits or comma-separated integers"));
            }
            if s.len() > 1 && s.contains('0') {
                return Err(bad("compact form takes digits 1-9; use commas"));
            }
            s.chars().map(|c| c.to_digit(10).unwrap()).collect()
        };
        Partition::new(raw)
    }
}

impl serde::Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
