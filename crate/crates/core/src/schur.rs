//! Schur functors on split mixed Tate objects.
//!
//! `S_λ(X)` is evaluated over the generator alphabet of `X`: one summand
//! `𝟙(Σw)[Σa]` per super-semistandard tableau of shape λ. Even generators
//! behave like ordinary letters (strict down columns), odd generators like
//! their transposes (strict along rows). A second evaluator, built from one
//! generator at a time by horizontal and vertical strips, is kept for
//! cross-checking.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::motive::GradedTateObject;
use crate::partition::Partition;

/// One basis vector of the generator alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub a: i64,
    pub w: i64,
}

impl Letter {
    pub fn is_odd(&self) -> bool {
        self.a.rem_euclid(2) == 1
    }
}

/// The ordered alphabet: each generator repeated by its multiplicity, even
/// letters before odd ones, each block sorted by `(w, a)`.
pub fn alphabet(x: &GradedTateObject) -> Vec<Letter> {
    let mut letters: Vec<Letter> = x
        .iter()
        .flat_map(|((a, w), m)| std::iter::repeat_n(Letter { a, w }, m as usize))
        .collect();
    letters.sort_by_key(|l| (l.is_odd(), l.w, l.a));
    letters
}

/// Which evaluator [`schur_apply_with`] uses.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Evaluator {
    /// Direct enumeration of super-semistandard tableaux.
    #[default]
    Tableaux,
    /// Letter-by-letter strip recursion.
    Pieri,
}

/// `S_λ(X)`.
pub fn schur_apply(lambda: &Partition, x: &GradedTateObject) -> GradedTateObject {
    schur_apply_over(lambda, &alphabet(x))
}

pub fn schur_apply_with(lambda: &Partition, x: &GradedTateObject, evaluator: Evaluator) -> GradedTateObject {
    match evaluator {
        Evaluator::Tableaux => schur_apply(lambda, x),
        Evaluator::Pieri => schur_apply_pieri(lambda, &alphabet(x)),
    }
}

/// Tableau enumeration over an explicit alphabet order. Letter `i` is
/// smaller than letter `j` iff `i < j`.
pub fn schur_apply_over(lambda: &Partition, letters: &[Letter]) -> GradedTateObject {
    let mut out = GradedTateObject::zero();
    if lambda.is_empty() {
        return GradedTateObject::unit();
    }
    if letters.is_empty() {
        return out;
    }
    let cells: Vec<(usize, usize)> = lambda.cells().collect();
    let mut grid: Vec<Vec<usize>> = (0..lambda.len()).map(|i| vec![0; lambda.part(i)]).collect();
    let mut tally: HashMap<(i64, i64), u64> = HashMap::new();
    fill_tableau(&cells, 0, letters, &mut grid, 0, 0, &mut tally);
    for ((a, w), m) in tally {
        out.add_generator(a, w, m);
    }
    out
}

fn fill_tableau(
    cells: &[(usize, usize)],
    idx: usize,
    letters: &[Letter],
    grid: &mut [Vec<usize>],
    a: i64,
    w: i64,
    tally: &mut HashMap<(i64, i64), u64>,
) {
    let Some(&(i, j)) = cells.get(idx) else {
        *tally.entry((a, w)).or_insert(0) += 1;
        return;
    };
    let left = (j > 0).then(|| grid[i][j - 1]);
    let up = (i > 0).then(|| grid[i - 1][j]);
    let lo = left.max(up).unwrap_or(0);
    for v in lo..letters.len() {
        let letter = letters[v];
        // Odd letters may not repeat along a row, even letters down a column.
        if left == Some(v) && letter.is_odd() {
            continue;
        }
        if up == Some(v) && !letter.is_odd() {
            continue;
        }
        grid[i][j] = v;
        fill_tableau(cells, idx + 1, letters, grid, a + letter.a, w + letter.w, tally);
    }
}

/// `S_λ(A ⊕ ℓ) = Σ_μ S_μ(A) ⊗ ℓ^{⊗|λ/μ|}` over horizontal strips `λ/μ`
/// when `ℓ` is even and vertical strips when it is odd.
pub fn schur_apply_pieri(lambda: &Partition, letters: &[Letter]) -> GradedTateObject {
    let mut memo = HashMap::new();
    pieri_rec(lambda, letters, letters.len(), &mut memo)
}

fn pieri_rec(
    lambda: &Partition,
    letters: &[Letter],
    k: usize,
    memo: &mut HashMap<(usize, Partition), GradedTateObject>,
) -> GradedTateObject {
    if lambda.is_empty() {
        return GradedTateObject::unit();
    }
    if k == 0 {
        return GradedTateObject::zero();
    }
    if let Some(hit) = memo.get(&(k, lambda.clone())) {
        return hit.clone();
    }
    let letter = letters[k - 1];
    let strips = if letter.is_odd() { vertical_strips(lambda) } else { horizontal_strips(lambda) };
    let mut out = GradedTateObject::zero();
    for mu in strips {
        let r = (lambda.size() - mu.size()) as i64;
        let inner = pieri_rec(&mu, letters, k - 1, memo);
        if inner.is_zero() {
            continue;
        }
        out = out.direct_sum(&inner.tensor(&GradedTateObject::generator(letter.w * r, letter.a * r)));
    }
    memo.insert((k, lambda.clone()), out.clone());
    out
}

/// All μ with `λ/μ` a horizontal strip: `λ_{i+1} ≤ μ_i ≤ λ_i`.
fn horizontal_strips(lambda: &Partition) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn go(lambda: &Partition, i: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == lambda.len() {
            out.push(Partition::from_unsorted(current.clone()));
            return;
        }
        for m in lambda.part(i + 1)..=lambda.part(i) {
            current.push(m);
            go(lambda, i + 1, current, out);
            current.pop();
        }
    }
    go(lambda, 0, &mut current, &mut out);
    out
}

/// All μ with `λ/μ` a vertical strip: `λ_i - 1 ≤ μ_i ≤ λ_i`.
fn vertical_strips(lambda: &Partition) -> Vec<Partition> {
    horizontal_strips(&lambda.transpose()).iter().map(Partition::transpose).collect()
}

/// The vanishing criterion: `S_λ(X) = 0` iff `[λ]` contains the
/// `(d⁺+1) x (d⁻+1)` rectangle. Computed from `d⁺, d⁻` only.
pub fn schur_vanishes(lambda: &Partition, x: &GradedTateObject) -> Result<bool> {
    if lambda.is_empty() {
        return Err(Error::EmptyPartition("schur_vanishes"));
    }
    Ok(lambda.contains_rectangle(x.d_plus() as usize + 1, x.d_minus() as usize + 1))
}

/// `Altⁿ(X) = S_{(1ⁿ)}(X)`.
pub fn alt_power(x: &GradedTateObject, n: usize) -> GradedTateObject {
    schur_apply(&Partition::column(n), x)
}

/// `Symⁿ(X) = S_{(n)}(X)`.
pub fn sym_power(x: &GradedTateObject, n: usize) -> GradedTateObject {
    schur_apply(&Partition::row(n), x)
}

/// Finite-dimensionality data of a split object.
///
/// For a non-split object with this associated graded the flags describe
/// the split form only; the graded data cannot see the extension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub d_plus: u64,
    pub d_minus: u64,
    pub evenly_finite: bool,
    pub oddly_finite: bool,
    /// Least `n` with `Altⁿ(X) = 0`.
    pub alt_vanishing_index: Option<u64>,
    /// Least `n` with `Symⁿ(X) = 0`.
    pub sym_vanishing_index: Option<u64>,
    pub kimura_dimension: u64,
    /// Least `n` with `S_{n x n}(X) = 0`.
    pub square_vanishing_index: u64,
}

pub fn classify(x: &GradedTateObject) -> Classification {
    let (dp, dm) = (x.d_plus(), x.d_minus());
    Classification {
        d_plus: dp,
        d_minus: dm,
        evenly_finite: dm == 0,
        oddly_finite: dp == 0,
        alt_vanishing_index: (dm == 0).then_some(dp + 1),
        sym_vanishing_index: (dp == 0).then_some(dm + 1),
        kimura_dimension: dp + dm,
        square_vanishing_index: dp.max(dm) + 1,
    }
}
