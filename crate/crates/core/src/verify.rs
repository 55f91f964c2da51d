//! Cross-checks run by the `verify` command.

use rand::rngs::StdRng;
use rand::SeedableRng;
use serde::Serialize;

use crate::error::Result;
use crate::k0::{lambda_t, product_formula_check, schur_op, verify_lambda_ring, zeta};
use crate::motive::GradedTateObject;
use crate::oracle::{graded_schur_oracle, Budget};
use crate::partition::{partitions_of, partitions_up_to};
use crate::rep_ring::lr_coefficient;
use crate::sampling::{random_laurent, random_object, random_partition};
use crate::schur::{schur_apply, schur_vanishes};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub passed: u64,
    pub total: u64,
}

impl Tally {
    fn record(&mut self, ok: bool) {
        self.total += 1;
        if ok {
            self.passed += 1;
        }
    }

    pub fn ok(&self) -> bool {
        self.passed == self.total
    }
}

/// Every object built from generators with degrees `0..=3`, weights
/// `0..=2` and total dimension at most `max_dim`.
pub fn grid_objects(max_dim: usize) -> Vec<GradedTateObject> {
    let gens: Vec<(i64, i64)> = (0..=3).flat_map(|a| (0..=2).map(move |w| (a, w))).collect();
    let mut out = Vec::new();
    fn go(gens: &[(i64, i64)], start: usize, left: usize, cur: &mut GradedTateObject, out: &mut Vec<GradedTateObject>) {
        out.push(cur.clone());
        if left == 0 {
            return;
        }
        for i in start..gens.len() {
            let (a, w) = gens[i];
            let mut next = cur.clone();
            next.add_generator(a, w, 1);
            go(gens, i, left - 1, &mut next, out);
        }
    }
    go(&gens, 0, max_dim, &mut GradedTateObject::zero(), &mut out);
    out
}

/// Criterion, tableau evaluator and oracle agree on the grid.
pub fn triple_agreement(max_dim: usize, max_size: usize, budget: Budget) -> Result<Tally> {
    let mut tally = Tally::default();
    let partitions: Vec<_> = partitions_up_to(max_size).into_iter().filter(|l| !l.is_empty()).collect();
    for x in grid_objects(max_dim) {
        for lambda in &partitions {
            let criterion = schur_vanishes(lambda, &x)?;
            let evaluated = schur_apply(lambda, &x);
            let oracle = graded_schur_oracle(lambda, &x, budget)?;
            tally.record(criterion == evaluated.is_zero() && evaluated == oracle);
        }
    }
    Ok(tally)
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Summary {
    pub triple_agreement: Tally,
    pub shift_duality: Tally,
    pub coproduct: Tally,
    pub lambda_ring: Tally,
    pub pipeline: Tally,
}

impl Summary {
    pub fn ok(&self) -> bool {
        [self.triple_agreement, self.shift_duality, self.coproduct, self.lambda_ring, self.pipeline]
            .iter()
            .all(Tally::ok)
    }
}

pub fn run_all(max_dim: usize, max_size: usize, cases: usize, seed: u64) -> Result<Summary> {
    let budget = Budget::default();
    let mut summary = Summary { triple_agreement: triple_agreement(max_dim, max_size, budget)?, ..Default::default() };
    let mut rng = StdRng::seed_from_u64(seed);

    for _ in 0..cases {
        let x = random_object(&mut rng, 4);
        let lambda = random_partition(&mut rng, 5);
        let n = lambda.size() as i64;
        summary
            .shift_duality
            .record(schur_apply(&lambda, &x.shift(1)) == schur_apply(&lambda.transpose(), &x).shift(n));
    }

    for _ in 0..cases {
        let x = random_object(&mut rng, 3);
        let y = random_object(&mut rng, 3);
        let lambda = random_partition(&mut rng, 4);
        let n = lambda.size();
        let mut rhs = GradedTateObject::zero();
        for k in 0..=n {
            for mu in partitions_of(k) {
                for eta in partitions_of(n - k) {
                    let c = lr_coefficient(&lambda, &mu, &eta);
                    if c > 0 {
                        rhs = rhs.direct_sum(&schur_apply(&mu, &x).tensor(&schur_apply(&eta, &y)).repeat(c));
                    }
                }
            }
        }
        summary.coproduct.record(schur_apply(&lambda, &x.direct_sum(&y)) == rhs);
    }

    let order = 12;
    for _ in 0..cases {
        let x = random_laurent(&mut rng);
        let y = random_laurent(&mut rng);
        let homomorphism = lambda_t(&(&x + &y), order) == lambda_t(&x, order).mul(&lambda_t(&y, order));
        let inversion = zeta(&x, order).mul(&lambda_t(&x, order).negate_variable()) == crate::k0::TruncatedSeries::one(order);
        let mut axioms = true;
        for n in 1..=2 {
            for m in 1..=2 {
                axioms &= verify_lambda_ring(&x, &y, n, m)?;
            }
        }
        summary.lambda_ring.record(homomorphism && inversion && axioms && product_formula_check(&x, order));
    }

    for _ in 0..cases {
        let x = random_object(&mut rng, 4);
        let lambda = random_partition(&mut rng, 5);
        summary.pipeline.record(schur_op(&lambda, &x.k0_class()) == schur_apply(&lambda, &x).k0_class());
    }
    Ok(summary)
}
