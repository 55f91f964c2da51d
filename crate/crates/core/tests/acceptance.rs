//! Acceptance criteria. Prints one line per criterion and exits nonzero if
//! any fails.

use std::process::{Command, ExitCode};
use std::time::Instant;

use mixed_tate::k0::{
    lambda_sigma, lambda_t, product_formula_check, schur_op, verify_lambda_ring, zeta, zeta_rational, LaurentPolynomial,
    TruncatedSeries,
};
use mixed_tate::motive::{preset, GradedTateObject};
use mixed_tate::oracle::{graded_schur_oracle, young_symmetrizer_rank, Budget, SuperWeightedSpace};
use mixed_tate::partition::{irreducible_dimension, partitions_of, partitions_up_to, Partition};
use mixed_tate::rep_ring::{characters::lr_by_characters, lr_coefficient};
use mixed_tate::sampling::{random_laurent, random_object, random_partition};
use mixed_tate::schur::{alt_power, schur_apply, schur_vanishes, sym_power};
use rand::rngs::StdRng;
use rand::SeedableRng;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lp(terms: &[(i64, i64)]) -> LaurentPolynomial {
    LaurentPolynomial::from_terms(terms.iter().copied())
}

fn nonempty_up_to(n: usize) -> Vec<Partition> {
    partitions_up_to(n).into_iter().filter(|l| !l.is_empty()).collect()
}

fn preset_classes() -> Check {
    for n in 0..=10u32 {
        let p = preset("P", n).map_err(|e| e.to_string())?.k0_class();
        let expect = lp(&(0..=n as i64).map(|i| (i, 1)).collect::<Vec<_>>());
        ensure(p == expect, || format!("P:{n} gave {p}"))?;
        // Am0:0 is the empty scheme; its class is 1 - tau^0 = 0.
        let a = if n == 0 { LaurentPolynomial::zero() } else { preset("Am0", n).map_err(|e| e.to_string())?.k0_class() };
        let expect = &LaurentPolynomial::one() - &LaurentPolynomial::monomial(1, n as i64);
        ensure(a == expect, || format!("Am0:{n} gave {a}"))?;
    }
    Ok("n = 0..10".into())
}

fn lambda_base_cases() -> Check {
    let s = lambda_t(&LaurentPolynomial::one(), 16);
    ensure(s.order() == 16, || "wrong order".into())?;
    for k in 0..=16 {
        let expect = if k <= 1 { 1 } else { 0 };
        ensure(s.coefficient(k) == lp(&[(0, expect)]), || format!("lambda_t(1) at t^{k}: {}", s.coefficient(k)))?;
    }
    let s = lambda_t(&lp(&[(0, -1)]), 16);
    for k in 0..=16 {
        let expect = if k % 2 == 0 { 1 } else { -1 };
        ensure(s.coefficient(k) == lp(&[(0, expect)]), || format!("lambda_t(-1) at t^{k}: {}", s.coefficient(k)))?;
    }
    Ok("order 16".into())
}

/// All multisets of at most `max_dim` generators with degrees `0..=3` and
/// weights `0..=2`.
fn grid(max_dim: usize) -> Vec<GradedTateObject> {
    let gens: Vec<(i64, i64)> = (0..=3).flat_map(|a| (0..=2).map(move |w| (a, w))).collect();
    let mut layer = vec![(0usize, GradedTateObject::zero())];
    let mut all = vec![GradedTateObject::zero()];
    for _ in 0..max_dim {
        let mut next = Vec::new();
        for (start, x) in &layer {
            for (i, &(a, w)) in gens.iter().enumerate().skip(*start) {
                let mut y = x.clone();
                y.add_generator(a, w, 1);
                next.push((i, y));
            }
        }
        all.extend(next.iter().map(|(_, y)| y.clone()));
        layer = next;
    }
    all
}

fn triple_agreement() -> Check {
    let objects = grid(3);
    let partitions = nonempty_up_to(4);
    let mut cases = 0;
    let mut zeros = 0;
    for x in &objects {
        for l in &partitions {
            let criterion = schur_vanishes(l, x).map_err(|e| e.to_string())?;
            let tableau = schur_apply(l, x);
            let oracle = graded_schur_oracle(l, x, Budget::default()).map_err(|e| e.to_string())?;
            ensure(criterion == tableau.is_zero() && tableau.is_zero() == oracle.is_zero(), || {
                format!("vanishing disagrees for {l} on {x}")
            })?;
            ensure(tableau == oracle, || format!("S_{l}({x}): tableaux {tableau}, oracle {oracle}"))?;
            cases += 1;
            zeros += usize::from(criterion);
        }
    }
    Ok(format!("{cases} cases, {zeros} vanishing"))
}

fn square_pattern() -> Check {
    let x = GradedTateObject::generator(0, 1).direct_sum(&GradedTateObject::generator(2, 2));
    let mut n = 0;
    for l in nonempty_up_to(6) {
        let vanishes = schur_apply(&l, &x).is_zero();
        let contains_square = l.part(1) >= 2;
        ensure(vanishes == contains_square, || format!("{l}: vanishes = {vanishes}"))?;
        n += 1;
    }
    Ok(format!("{n} partitions"))
}

fn shift_duality() -> Check {
    let mut rng = StdRng::seed_from_u64(5);
    for _ in 0..200 {
        let x = random_object(&mut rng, 4);
        let l = random_partition(&mut rng, 5);
        let n = l.size() as i64;
        let lhs = schur_apply(&l, &x.shift(1));
        let rhs = schur_apply(&l.transpose(), &x).shift(n);
        ensure(lhs == rhs, || format!("{l} on {x}"))?;
        let k = l.size();
        ensure(alt_power(&x.shift(1), k) == sym_power(&x, k).shift(n), || format!("Alt^{k} on {x}"))?;
    }
    Ok("200 cases".into())
}

fn coproduct() -> Check {
    let mut rng = StdRng::seed_from_u64(6);
    for _ in 0..100 {
        let x = random_object(&mut rng, 3);
        let y = random_object(&mut rng, 3);
        let l = random_partition(&mut rng, 5);
        let n = l.size();
        let mut rhs = GradedTateObject::zero();
        for k in 0..=n {
            for mu in partitions_of(k) {
                for eta in partitions_of(n - k) {
                    let c = lr_coefficient(&l, &mu, &eta);
                    if c > 0 {
                        rhs = rhs.direct_sum(&schur_apply(&mu, &x).tensor(&schur_apply(&eta, &y)).repeat(c));
                    }
                }
            }
        }
        ensure(schur_apply(&l, &x.direct_sum(&y)) == rhs, || format!("{l} on {x} and {y}"))?;
    }
    let mut triples = 0;
    for n in 0..=6 {
        for l in partitions_of(n) {
            for k in 0..=n {
                for mu in partitions_of(k) {
                    for eta in partitions_of(n - k) {
                        let by_tableaux = lr_coefficient(&l, &mu, &eta) as i64;
                        let by_chars = lr_by_characters(&l, &mu, &eta).map_err(|e| e.to_string())?;
                        ensure(by_tableaux == by_chars, || format!("c^{l}_{mu},{eta}: {by_tableaux} vs {by_chars}"))?;
                        triples += 1;
                    }
                }
            }
        }
    }
    Ok(format!("100 cases, {triples} LR coefficients"))
}

fn lambda_ring() -> Check {
    let mut rng = StdRng::seed_from_u64(7);
    let order = 12;
    for _ in 0..100 {
        let x = random_laurent(&mut rng);
        let y = random_laurent(&mut rng);
        ensure(lambda_t(&(&x + &y), order) == lambda_t(&x, order).mul(&lambda_t(&y, order)), || {
            format!("homomorphism at {x}, {y}")
        })?;
        ensure(product_formula_check(&x, order), || format!("product formula at {x}"))?;
        let one = zeta(&x, order).mul(&lambda_t(&x, order).negate_variable());
        ensure(one == TruncatedSeries::one(order), || format!("inversion at {x}"))?;
        for n in 1..=2 {
            for m in 1..=2 {
                ensure(verify_lambda_ring(&x, &y, n, m).map_err(|e| e.to_string())?, || {
                    format!("axioms n={n} m={m} at {x}, {y}")
                })?;
            }
        }
    }
    Ok("100 cases".into())
}

fn pipeline() -> Check {
    let mut rng = StdRng::seed_from_u64(8);
    for _ in 0..100 {
        let x = random_object(&mut rng, 4);
        let l = random_partition(&mut rng, 5);
        let a = schur_op(&l, &x.k0_class());
        let b = schur_apply(&l, &x).k0_class();
        ensure(a == b, || format!("{l} on {x}: {a} vs {b}"))?;
    }
    Ok("100 cases".into())
}

fn zeta_rationality() -> Check {
    let mut rng = StdRng::seed_from_u64(9);
    for _ in 0..50 {
        let x = random_object(&mut rng, 4);
        let q = zeta_rational(&x);
        ensure(q.denominator()[0].is_one(), || format!("v(0) != 1 for {x}"))?;
        ensure(q.expand(20) == zeta(&x.k0_class(), 20), || format!("expansion differs for {x}"))?;
    }
    Ok("50 cases".into())
}

fn lambda_sigma_multiplicative() -> Check {
    let mut rng = StdRng::seed_from_u64(10);
    for _ in 0..25 {
        let x = random_object(&mut rng, 3);
        let y = random_object(&mut rng, 3);
        let lhs = lambda_sigma(&x.direct_sum(&y), 4);
        let rhs = lambda_sigma(&x, 4).mul(&lambda_sigma(&y, 4));
        ensure(lhs == rhs, || format!("{x} and {y}"))?;
    }
    Ok("25 pairs".into())
}

fn representation_substrate() -> Check {
    let mut factorial = 1u64;
    for n in 1..=8u64 {
        factorial *= n;
        let total: u64 = partitions_of(n as usize)
            .iter()
            .map(|l| irreducible_dimension(l).map(|d| d * d))
            .sum::<Result<u64, _>>()
            .map_err(|e| e.to_string())?;
        ensure(total == factorial, || format!("n = {n}: {total}"))?;
    }
    for dim in 1..=3usize {
        for odd in 0..=dim {
            let space = SuperWeightedSpace::with_parities(dim - odd, odd);
            for n in 1..=4usize {
                let mut total = 0;
                for l in partitions_of(n) {
                    let r = young_symmetrizer_rank(&l, &space, Budget::default()).map_err(|e| e.to_string())?;
                    total += r * irreducible_dimension(&l).map_err(|e| e.to_string())?;
                }
                let expect = (dim as u64).pow(n as u32);
                ensure(total == expect, || format!("dim {dim} ({odd} odd), n = {n}: {total}"))?;
            }
        }
    }
    Ok("n <= 8; dim <= 3, n <= 4".into())
}

fn cli_contract() -> Check {
    let bin = env!("CARGO_BIN_EXE_mixed-tate");
    let run = |args: &[&str]| -> Result<(String, i32), String> {
        let out = Command::new(bin).args(args).env_remove("MIXED_TATE_ORDER").output().map_err(|e| e.to_string())?;
        Ok((String::from_utf8_lossy(&out.stdout).into_owned(), out.status.code().unwrap_or(-1)))
    };
    let expected: [(&[&str], &str); 3] = [
        (&["k0", "P:3"], "1 + tau + tau^2 + tau^3\n"),
        (
            &["classify", "Q(0)[1] + Q(2)[2]"],
            "d_plus: 1\nd_minus: 1\nevenly_finite: false\noddly_finite: false\nalt_vanishing_index: none\n\
             sym_vanishing_index: none\nkimura_dimension: 2\nsquare_vanishing_index: 2\n",
        ),
        (&["zeta", "Gm", "--rational"], "numerator: 1 - tau*t\ndenominator: 1 - t\n"),
    ];
    for (args, want) in expected {
        let (got, code) = run(args)?;
        ensure(code == 0 && got == want, || format!("{args:?} printed {got:?} with exit {code}"))?;
    }
    let (out, code) = run(&["verify"])?;
    ensure(code == 0, || format!("verify exited {code}:\n{out}"))?;
    Ok("3 examples, verify exit 0".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("preset K0 classes", preset_classes),
        ("lambda-series base cases", lambda_base_cases),
        ("vanishing triple agreement", triple_agreement),
        ("Q(0)[1] + Q(2)[2] vanishing pattern", square_pattern),
        ("shift duality and Alt/Sym", shift_duality),
        ("coproduct and LR coefficients", coproduct),
        ("lambda-ring properties", lambda_ring),
        ("determinant and tableau pipelines", pipeline),
        ("zeta rationality", zeta_rationality),
        ("lambda_sigma multiplicativity", lambda_sigma_multiplicative),
        ("representation substrate", representation_substrate),
        ("CLI contract", cli_contract),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {}: PASS  {name} ({detail}, {secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
