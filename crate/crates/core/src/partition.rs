//! Integer partitions and their Young diagrams.
//!
//! A [`Partition`] is a weakly decreasing sequence of positive integers.
//! The empty partition is the unique partition of zero and is a regular
//! value, not a special case.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive parts, stored without trailing
/// zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from parts, dropping zero parts. Fails if the
    /// nonzero parts are not weakly decreasing.
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self> {
        let mut parts: Vec<usize> = parts.into();
        parts.retain(|&p| p > 0);
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary positive parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `[n]`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The one-column partition `[1,...,1]` with `n` parts.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// The `rows x cols` rectangle `(cols, ..., cols)`.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![cols; rows] }
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Row `i` (0-based), or 0 past the last row.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// The conjugate partition: `λᵗ_j = #{i : λ_i ≥ j}`.
    pub fn transpose(&self) -> Partition {
        let width = self.part(0);
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// True iff `[other] ⊆ [self]`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// True iff `[self] ⊇ [1,rows] x [1,cols]`. The empty rectangle is
    /// contained in every diagram.
    pub fn contains_rectangle(&self, rows: usize, cols: usize) -> bool {
        rows == 0 || cols == 0 || self.part(rows - 1) >= cols
    }

    /// Cells `(row, col)` of the diagram in row-major order, 0-based.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (0..p).map(move |j| (i, j)))
    }

    /// Hook length of cell `(i, j)`.
    pub fn hook(&self, i: usize, j: usize) -> usize {
        let arm = self.parts[i] - j - 1;
        let leg = self.parts[i + 1..].iter().take_while(|&&p| p > j).count();
        arm + leg + 1
    }

    /// Multiplicities `m_k` of each part size `k`, indexed from 1.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.part(0) + 1];
        for &p in &self.parts {
            m[p] += 1;
        }
        m
    }

    /// `z_λ = ∏ k^{m_k} m_k!`, the centralizer order of the class of cycle
    /// type λ.
    pub fn centralizer_order(&self) -> u128 {
        self.multiplicities()
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &m)| (k as u128).pow(m as u32) * factorial(m))
            .product()
    }
}

pub(crate) fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses the bracketed form `[3,1]`; whitespace is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = compact
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::InvalidPartition(format!("expected `[a,b,...]`, got `{s}`")))?;
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part `{t}` in `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("zero part in `{s}`")));
        }
        Partition::new(parts)
    }
}

impl serde::Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = <String as serde::Deserialize>::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// All partitions of `n` in reverse-lexicographic order, so `[n]` first and
/// `[1,...,1]` last.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill_partitions(n, n, &mut current, &mut out);
    out
}

fn fill_partitions(rest: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition { parts: current.clone() });
        return;
    }
    for p in (1..=rest.min(max)).rev() {
        current.push(p);
        fill_partitions(rest - p, p, current, out);
        current.pop();
    }
}

/// All partitions of size at most `n`, grouped by size.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

/// Partitions contained in `outer`, in no particular order.
pub fn sub_partitions(outer: &Partition) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill_sub(outer, 0, usize::MAX, &mut current, &mut out);
    out
}

fn fill_sub(outer: &Partition, row: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    out.push(Partition { parts: current.clone() });
    if row >= outer.len() {
        return;
    }
    for p in 1..=outer.part(row).min(max) {
        current.push(p);
        fill_sub(outer, row + 1, p, current, out);
        current.pop();
    }
}

/// `dim V_λ` by the hook-length formula. Fails on the empty partition.
pub fn irreducible_dimension(lambda: &Partition) -> Result<u64> {
    if lambda.is_empty() {
        return Err(Error::EmptyPartition("irreducible_dimension"));
    }
    let mut num: BigUint = (1..=lambda.size() as u64).product();
    let hooks: BigUint = lambda
        .cells()
        .map(|(i, j)| BigUint::from(lambda.hook(i, j)))
        .fold(BigUint::one(), |acc, h| acc * h);
    num /= hooks;
    num.to_u64().ok_or(Error::Overflow("irreducible dimension"))
}
