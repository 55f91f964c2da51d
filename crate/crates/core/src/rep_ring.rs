//! The representation ring `R = ⊕ R_n` of the symmetric groups.
//!
//! Classes of irreducible `ℚΣ_n`-modules are indexed by partitions of `n`;
//! the product is induction from `Σ_p x Σ_q`, whose structure constants are
//! the Littlewood-Richardson coefficients computed here by tableau
//! enumeration. [`characters`] holds an independent character-theoretic
//! route used only for cross-checking.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::partition::{partitions_of, Partition};

/// Number of Littlewood-Richardson tableaux of shape `λ/μ` and content `η`.
///
/// A tableau counts when its rows weakly increase, its columns strictly
/// increase, and its reverse reading word (rows top to bottom, each read
/// right to left) is a lattice word.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, eta: &Partition) -> u64 {
    if mu.size() + eta.size() != lambda.size() || !lambda.contains(mu) || !lambda.contains(eta) {
        return 0;
    }
    if eta.is_empty() {
        return 1;
    }
    let rows = lambda.len();
    // Filled values per row, indexed by absolute column; 0 marks a cell of μ.
    let mut grid: Vec<Vec<usize>> = (0..rows).map(|i| vec![0; lambda.part(i)]).collect();
    let mut counts = vec![0usize; eta.len() + 1];
    let mut total = 0;
    lr_fill(lambda, mu, eta, 0, lambda.part(0), &mut grid, &mut counts, &mut total);
    total
}

#[allow(clippy::too_many_arguments)]
fn lr_fill(
    lambda: &Partition,
    mu: &Partition,
    eta: &Partition,
    row: usize,
    col: usize,
    grid: &mut Vec<Vec<usize>>,
    counts: &mut Vec<usize>,
    total: &mut u64,
) {
    // `col` is one past the next cell to fill in `row`; rows fill right to left.
    if col <= mu.part(row) {
        let next = row + 1;
        if next == lambda.len() {
            *total += 1;
        } else {
            lr_fill(lambda, mu, eta, next, lambda.part(next), grid, counts, total);
        }
        return;
    }
    let j = col - 1;
    let right_bound = if j + 1 < lambda.part(row) { grid[row][j + 1] } else { eta.len() };
    let above = if row > 0 && j >= mu.part(row - 1) { grid[row - 1][j] } else { 0 };
    for value in (above + 1)..=right_bound {
        if counts[value] >= eta.part(value - 1) {
            continue;
        }
        if value > 1 && counts[value] + 1 > counts[value - 1] {
            continue;
        }
        counts[value] += 1;
        grid[row][j] = value;
        lr_fill(lambda, mu, eta, row, j, grid, counts, total);
        grid[row][j] = 0;
        counts[value] -= 1;
    }
}

/// An element of `R`: a finitely supported integer combination of classes
/// `[V_λ]`. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RepRingElement {
    terms: BTreeMap<Partition, i64>,
}

impl RepRingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The unit `[V_∅]`.
    pub fn one() -> Self {
        Self::basis(Partition::empty())
    }

    /// The class `[V_λ]`.
    pub fn basis(lambda: Partition) -> Self {
        Self::term(lambda, 1)
    }

    pub fn term(lambda: Partition, coeff: i64) -> Self {
        let mut out = Self::zero();
        out.add_term(lambda, coeff);
        out
    }

    pub fn add_term(&mut self, lambda: Partition, coeff: i64) {
        if coeff == 0 {
            return;
        }
        match self.terms.entry(lambda) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
        }
    }

    pub fn coefficient(&self, lambda: &Partition) -> i64 {
        self.terms.get(lambda).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, i64)> {
        self.terms.iter().map(|(k, &v)| (k, v))
    }

    /// The component in `R_n`.
    pub fn degree_part(&self, n: usize) -> RepRingElement {
        RepRingElement {
            terms: self.terms.iter().filter(|(k, _)| k.size() == n).map(|(k, &v)| (k.clone(), v)).collect(),
        }
    }

    /// Virtual dimension `Σ c_λ dim V_λ`.
    pub fn dimension(&self) -> i64 {
        self.iter()
            .map(|(l, c)| {
                let d = if l.is_empty() { 1 } else { crate::partition::irreducible_dimension(l).unwrap_or(0) };
                c * d as i64
            })
            .sum()
    }

    /// The induction product, extended bilinearly.
    pub fn induction_product(&self, other: &RepRingElement) -> RepRingElement {
        let mut out = RepRingElement::zero();
        for (mu, a) in self.iter() {
            for (eta, b) in other.iter() {
                for (lambda, c) in induce(mu, eta) {
                    out.add_term(lambda, a * b * c as i64);
                }
            }
        }
        out
    }
}

/// `[V_μ]·[V_η] = Σ_λ [λ:μ,η] [V_λ]`, as a list of nonzero terms.
pub fn induce(mu: &Partition, eta: &Partition) -> Vec<(Partition, u64)> {
    partitions_of(mu.size() + eta.size())
        .into_iter()
        .filter(|l| l.contains(mu) && l.contains(eta))
        .filter_map(|l| {
            let c = lr_coefficient(&l, mu, eta);
            (c > 0).then_some((l, c))
        })
        .collect()
}

impl Add for &RepRingElement {
    type Output = RepRingElement;
    fn add(self, rhs: &RepRingElement) -> RepRingElement {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&RepRingElement> for RepRingElement {
    fn add_assign(&mut self, rhs: &RepRingElement) {
        for (k, v) in rhs.iter() {
            self.add_term(k.clone(), v);
        }
    }
}

impl Neg for &RepRingElement {
    type Output = RepRingElement;
    fn neg(self) -> RepRingElement {
        RepRingElement { terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect() }
    }
}

impl Sub for &RepRingElement {
    type Output = RepRingElement;
    fn sub(self, rhs: &RepRingElement) -> RepRingElement {
        self + &(-rhs)
    }
}

impl Mul for &RepRingElement {
    type Output = RepRingElement;
    fn mul(self, rhs: &RepRingElement) -> RepRingElement {
        self.induction_product(rhs)
    }
}

impl fmt::Display for RepRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (l, c)) in self.iter().enumerate() {
            match (i, c) {
                (0, 1) => write!(f, "V{l}")?,
                (0, -1) => write!(f, "-V{l}")?,
                (0, c) => write!(f, "{c}*V{l}")?,
                (_, 1) => write!(f, " + V{l}")?,
                (_, -1) => write!(f, " - V{l}")?,
                (_, c) if c < 0 => write!(f, " - {}*V{l}", -c)?,
                (_, c) => write!(f, " + {c}*V{l}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for RepRingElement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let map: BTreeMap<String, i64> = self.iter().map(|(k, v)| (k.to_string(), v)).collect();
        map.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RepRingElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let map = BTreeMap::<String, i64>::deserialize(d)?;
        let mut out = RepRingElement::zero();
        for (k, v) in map {
            let l: Partition = k.parse().map_err(serde::de::Error::custom)?;
            out.add_term(l, v);
        }
        Ok(out)
    }
}

/// Character theory of `Σ_n`, kept apart from the production
/// Littlewood-Richardson path.
pub mod characters {
    use crate::error::{Error, Result};
    use crate::partition::{factorial, partitions_of, Partition};

    /// `χ^λ(ρ)` by the Murnaghan-Nakayama rule on beta-sets.
    pub fn mn_character(lambda: &Partition, rho: &Partition) -> Result<i64> {
        if lambda.size() != rho.size() {
            return Err(Error::SizeMismatch(lambda.to_string(), rho.to_string()));
        }
        let len = lambda.len();
        let beta: Vec<usize> = (0..len).map(|i| lambda.part(i) + len - 1 - i).collect();
        Ok(mn_beta(beta, rho.parts()))
    }

    fn mn_beta(beta: Vec<usize>, rho: &[usize]) -> i64 {
        let Some((&r, rest)) = rho.split_first() else {
            return 1;
        };
        let mut total = 0;
        for (idx, &b) in beta.iter().enumerate() {
            if b < r || beta.contains(&(b - r)) {
                continue;
            }
            let target = b - r;
            let between = beta.iter().filter(|&&c| c > target && c < b).count();
            let mut next = beta.clone();
            next[idx] = target;
            let sign = if between % 2 == 0 { 1 } else { -1 };
            total += sign * mn_beta(next, rest);
        }
        total
    }

    /// `Ind_{Σ_p x Σ_q}(χ^μ x χ^η)` at the class of cycle type ρ.
    pub fn induced_character(mu: &Partition, eta: &Partition, rho: &Partition) -> Result<i64> {
        if mu.size() + eta.size() != rho.size() {
            return Err(Error::SizeMismatch(format!("{mu}+{eta}"), rho.to_string()));
        }
        let m = rho.multiplicities();
        let mut taken = vec![0usize; m.len()];
        let mut total = 0i64;
        split_cycles(&m, 1, mu.size(), &mut taken, &mut |alpha: &[usize]| -> Result<()> {
            let mut a_parts = Vec::new();
            let mut b_parts = Vec::new();
            let mut weight: i64 = 1;
            for k in 1..m.len() {
                a_parts.extend(std::iter::repeat_n(k, alpha[k]));
                b_parts.extend(std::iter::repeat_n(k, m[k] - alpha[k]));
                weight *= binomial(m[k], alpha[k]);
            }
            let a = Partition::from_unsorted(a_parts);
            let b = Partition::from_unsorted(b_parts);
            total += weight * mn_character(mu, &a)? * mn_character(eta, &b)?;
            Ok(())
        })?;
        Ok(total)
    }

    fn split_cycles(
        m: &[usize],
        k: usize,
        remaining: usize,
        taken: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]) -> Result<()>,
    ) -> Result<()> {
        if k == m.len() {
            return if remaining == 0 { visit(taken) } else { Ok(()) };
        }
        for a in 0..=m[k] {
            if a * k > remaining {
                break;
            }
            taken[k] = a;
            split_cycles(m, k + 1, remaining - a * k, taken, visit)?;
        }
        taken[k] = 0;
        Ok(())
    }

    fn binomial(n: usize, k: usize) -> i64 {
        (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
    }

    /// `[λ:μ,η] = (1/n!) Σ_ρ |C_ρ| χ^λ(ρ) Ind(χ^μ x χ^η)(ρ)`.
    pub fn lr_by_characters(lambda: &Partition, mu: &Partition, eta: &Partition) -> Result<i64> {
        let n = lambda.size();
        if mu.size() + eta.size() != n {
            return Ok(0);
        }
        let order = factorial(n) as i128;
        let mut sum: i128 = 0;
        for rho in partitions_of(n) {
            let class_size = order / rho.centralizer_order() as i128;
            sum += class_size
                * mn_character(lambda, &rho)? as i128
                * induced_character(mu, eta, &rho)? as i128;
        }
        debug_assert_eq!(sum % order, 0);
        Ok((sum / order) as i64)
    }
}
