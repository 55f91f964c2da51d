//! Brute-force Schur-Weyl oracle.
//!
//! `dim S_λ(V)` is computed as the exact rank of the Young symmetrizer
//! `c_λ = (Σ_{q ∈ C} sgn(q) q)(Σ_{p ∈ R} p)` acting on `V^{⊗n}`, where odd
//! basis vectors pick up a Koszul sign whenever two of them are swapped.
//! Nothing here depends on the tableau evaluator in [`crate::schur`].

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::motive::GradedTateObject;
use crate::partition::Partition;

/// A basis vector of the super vector space `F(X)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BasisVector {
    pub a: i64,
    pub w: i64,
}

impl BasisVector {
    pub fn is_odd(&self) -> bool {
        self.a.rem_euclid(2) == 1
    }
}

/// One basis vector per generator occurrence, in a fixed order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperWeightedSpace {
    basis: Vec<BasisVector>,
}

impl SuperWeightedSpace {
    pub fn new(basis: Vec<BasisVector>) -> Self {
        SuperWeightedSpace { basis }
    }

    /// `even` even vectors followed by `odd` odd ones, all of weight 0.
    pub fn with_parities(even: usize, odd: usize) -> Self {
        let basis = std::iter::repeat_n(BasisVector { a: 0, w: 0 }, even)
            .chain(std::iter::repeat_n(BasisVector { a: 1, w: 0 }, odd))
            .collect();
        SuperWeightedSpace { basis }
    }

    pub fn from_object(x: &GradedTateObject) -> Self {
        let basis = x
            .iter()
            .flat_map(|((a, w), m)| std::iter::repeat_n(BasisVector { a, w }, m as usize))
            .collect();
        SuperWeightedSpace { basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisVector] {
        &self.basis
    }

    fn odd(&self, i: usize) -> bool {
        self.basis[i].is_odd()
    }
}

/// Limits on the tensor powers the oracle will materialize.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_dim: usize,
    pub max_size: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_dim: 4, max_size: 5 }
    }
}

impl Budget {
    fn check(&self, dim: usize, n: usize) -> Result<()> {
        if dim > self.max_dim || n > self.max_size {
            return Err(Error::BudgetExceeded(format!(
                "dim {dim}, |λ| {n} exceeds dim <= {}, |λ| <= {}",
                self.max_dim, self.max_size
            )));
        }
        Ok(())
    }
}

/// Applies `σ` (position `i` moves to `σ[i]`) to a word of basis indices,
/// realized as a bubble sort by target position. Each adjacent swap of two
/// odd vectors contributes `-1`.
pub fn signed_permutation_action(space: &SuperWeightedSpace, sigma: &[usize], word: &[usize]) -> (Vec<usize>, i64) {
    let mut items: Vec<(usize, usize)> = sigma.iter().copied().zip(word.iter().copied()).collect();
    let mut sign = 1;
    let n = items.len();
    for pass in 0..n {
        for i in 0..n - 1 - pass {
            if items[i].0 > items[i + 1].0 {
                if space.odd(items[i].1) && space.odd(items[i + 1].1) {
                    sign = -sign;
                }
                items.swap(i, i + 1);
            }
        }
    }
    (items.into_iter().map(|(_, v)| v).collect(), sign)
}

/// Applies the adjacent transpositions `s_{k}` (swapping positions `k` and
/// `k+1`) in the given order, with Koszul signs.
pub fn apply_adjacent_transpositions(space: &SuperWeightedSpace, word: &[usize], steps: &[usize]) -> (Vec<usize>, i64) {
    let mut w = word.to_vec();
    let mut sign = 1;
    for &k in steps {
        if space.odd(w[k]) && space.odd(w[k + 1]) {
            sign = -sign;
        }
        w.swap(k, k + 1);
    }
    (w, sign)
}

fn permutations_of(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations_of(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

fn permutation_sign(p: &[usize]) -> i64 {
    let inversions = (0..p.len()).flat_map(|i| (i + 1..p.len()).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
    if inversions % 2 == 0 { 1 } else { -1 }
}

/// The subgroup of `Σ_n` permuting each block of positions among itself.
fn block_group(blocks: &[Vec<usize>], n: usize) -> Vec<(Vec<usize>, i64)> {
    let mut group = vec![((0..n).collect::<Vec<_>>(), 1i64)];
    for block in blocks {
        let perms = permutations_of(block);
        let mut next = Vec::with_capacity(group.len() * perms.len());
        for (g, s) in &group {
            for p in &perms {
                let mut h = g.clone();
                for (src, &dst) in block.iter().zip(p) {
                    h[*src] = dst;
                }
                next.push((h, s * permutation_sign(p)));
            }
        }
        group = next;
    }
    group
}

/// Row and column groups of the canonical tableau (cells numbered
/// row-major from 0).
/// Permutations with their signs.
type SignedGroup = Vec<(Vec<usize>, i64)>;

fn tableau_groups(lambda: &Partition) -> (SignedGroup, SignedGroup) {
    let n = lambda.size();
    let mut index = HashMap::new();
    for (k, cell) in lambda.cells().enumerate() {
        index.insert(cell, k);
    }
    let rows: Vec<Vec<usize>> = (0..lambda.len()).map(|i| (0..lambda.part(i)).map(|j| index[&(i, j)]).collect()).collect();
    let conj = lambda.transpose();
    let cols: Vec<Vec<usize>> = (0..conj.len()).map(|j| (0..conj.part(j)).map(|i| index[&(i, j)]).collect()).collect();
    (block_group(&rows, n), block_group(&cols, n))
}

/// Distinct rearrangements of a sorted multiset.
fn arrangements(content: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut counts: Vec<(usize, usize)> = Vec::new();
    for &c in content {
        match counts.last_mut() {
            Some((v, k)) if *v == c => *k += 1,
            _ => counts.push((c, 1)),
        }
    }
    let mut current = Vec::with_capacity(content.len());
    fn go(counts: &mut [(usize, usize)], len: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == len {
            out.push(current.clone());
            return;
        }
        for i in 0..counts.len() {
            if counts[i].1 == 0 {
                continue;
            }
            counts[i].1 -= 1;
            current.push(counts[i].0);
            go(counts, len, current, out);
            current.pop();
            counts[i].1 += 1;
        }
    }
    go(&mut counts, content.len(), &mut current, &mut out);
    out
}

/// Non-decreasing words of length `n` over `0..dim`.
fn contents(dim: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn go(dim: usize, n: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for v in start..dim {
            current.push(v);
            go(dim, n, v, current, out);
            current.pop();
        }
    }
    go(dim, n, 0, &mut current, &mut out);
    out
}

struct Symmetrizer {
    rows: Vec<(Vec<usize>, i64)>,
    cols: Vec<(Vec<usize>, i64)>,
}

impl Symmetrizer {
    fn new(lambda: &Partition) -> Self {
        let (rows, cols) = tableau_groups(lambda);
        Symmetrizer { rows, cols }
    }

    /// Rank of `c_λ` on the span of all rearrangements of `content`.
    fn block_rank(&self, space: &SuperWeightedSpace, content: &[usize]) -> usize {
        let words = arrangements(content);
        let position: HashMap<&[usize], usize> = words.iter().enumerate().map(|(i, w)| (w.as_slice(), i)).collect();
        let mut columns: Vec<Vec<BigInt>> = Vec::with_capacity(words.len());
        for w in &words {
            let mut symmetrized: HashMap<Vec<usize>, i64> = HashMap::new();
            for (p, _) in &self.rows {
                let (v, s) = signed_permutation_action(space, p, w);
                *symmetrized.entry(v).or_insert(0) += s;
            }
            let mut image = vec![0i64; words.len()];
            for (v, c) in symmetrized.into_iter().filter(|(_, c)| *c != 0) {
                for (q, sq) in &self.cols {
                    let (u, s) = signed_permutation_action(space, q, &v);
                    image[position[u.as_slice()]] += c * s * sq;
                }
            }
            if image.iter().any(|&c| c != 0) {
                columns.push(image.into_iter().map(BigInt::from).collect());
            }
        }
        rank(columns)
    }
}

/// Exact rank of `c_λ` on `V^{⊗n}`.
pub fn young_symmetrizer_rank(lambda: &Partition, space: &SuperWeightedSpace, budget: Budget) -> Result<u64> {
    if lambda.is_empty() {
        return Err(Error::EmptyPartition("young_symmetrizer_rank"));
    }
    let n = lambda.size();
    budget.check(space.dim(), n)?;
    let sym = Symmetrizer::new(lambda);
    let mut memo: HashMap<Vec<(bool, usize)>, usize> = HashMap::new();
    let mut total = 0u64;
    for content in contents(space.dim(), n) {
        total += cached_block_rank(&sym, space, &content, &mut memo) as u64;
    }
    Ok(total)
}

/// The rank only depends on the multiset of `(parity, repetition)` pairs
/// of the content, since relabelling letters of equal parity commutes with
/// the signed action.
fn cached_block_rank(
    sym: &Symmetrizer,
    space: &SuperWeightedSpace,
    content: &[usize],
    memo: &mut HashMap<Vec<(bool, usize)>, usize>,
) -> usize {
    let mut key: Vec<(bool, usize)> = Vec::new();
    let mut i = 0;
    while i < content.len() {
        let j = content[i..].iter().take_while(|&&c| c == content[i]).count();
        key.push((space.odd(content[i]), j));
        i += j;
    }
    key.sort_unstable();
    *memo.entry(key).or_insert_with(|| sym.block_rank(space, content))
}

/// `S_λ(X)` by blockwise ranks: the rank of `c_λ` on the block of total
/// degree `Σa` and weight `Σw` is the multiplicity of `𝟙(Σw)[Σa]`.
pub fn graded_schur_oracle(lambda: &Partition, x: &GradedTateObject, budget: Budget) -> Result<GradedTateObject> {
    if lambda.is_empty() {
        return Ok(GradedTateObject::unit());
    }
    let space = SuperWeightedSpace::from_object(x);
    let n = lambda.size();
    budget.check(space.dim(), n)?;
    let sym = Symmetrizer::new(lambda);
    let mut memo = HashMap::new();
    let mut out = GradedTateObject::zero();
    for content in contents(space.dim(), n) {
        let r = cached_block_rank(&sym, &space, &content, &mut memo);
        if r > 0 {
            let a = content.iter().map(|&i| space.basis[i].a).sum();
            let w = content.iter().map(|&i| space.basis[i].w).sum();
            out.add_generator(a, w, r as u64);
        }
    }
    Ok(out)
}

/// Rank over `ℚ` by fraction-free (Bareiss) elimination. Input is a list
/// of equal-length vectors.
pub fn rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut r = 0;
    let mut prev = BigInt::from(1);
    for c in 0..cols {
        let Some(pivot) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pivot);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = (&m[i][j] * &m[r][c] - &m[i][c] * &m[r][j]) / &prev;
                m[i][j] = v;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}
