//! Numeric verification of the monad laws for vectors and the arrow laws for
//! superoperators.
//!
//! The checkers are generic over [`MonadOps`] and [`ArrowOps`] so that
//! deliberately broken implementations (see [`mutants`]) can be run through
//! the same suites to show that they fail.
//!
//! Randomness comes from [`SeededGenerator`], a ChaCha8 stream seeded from a
//! 64-bit integer. ChaCha8 output is fixed by its specification, so the same
//! seed yields the same cases on every platform.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::basis::Basis;
use crate::error::{Error, Result};
use crate::linear::{controlled, hadamard, qnot, LinearOp};
use crate::superop::Superoperator;
use crate::vector::{Amplitude, StateVector};

pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_TOL: f64 = 1e-9;
pub const DEFAULT_MONAD_CASES: usize = 50;
/// Random pure functions drawn per arr-law.
pub const ARROW_RANDOM_CASES: usize = 20;

pub const MONAD_LAWS: [&str; 3] = [
    "return x >>= f = f x",
    "m >>= return = m",
    "(m >>= f) >>= g = m >>= (\\x -> f x >>= g)",
];

pub const ARROW_LAWS: [&str; 9] = [
    "arr id >>> f = f",
    "f >>> arr id = f",
    "(f >>> g) >>> h = f >>> (g >>> h)",
    "arr (g . f) = arr f >>> arr g",
    "first (arr f) = arr (f x id)",
    "first (f >>> g) = first f >>> first g",
    "first f >>> arr (id x g) = arr (id x g) >>> first f",
    "first f >>> arr fst = arr fst >>> f",
    "first (first f) >>> arr assoc = arr assoc >>> first f",
];

/// Deterministic case generator.
pub struct SeededGenerator {
    seed: u64,
    rng: ChaCha8Rng,
}

impl SeededGenerator {
    pub fn new(seed: u64) -> Self {
        SeededGenerator {
            seed,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Uniform in the complex unit square `[0,1) x [0,1)`.
    pub fn amplitude(&mut self) -> Amplitude {
        Amplitude::new(self.rng.random(), self.rng.random())
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.random_range(0..n)
    }

    pub fn vector(&mut self, basis: &Basis) -> StateVector {
        let amps = (0..basis.size()).map(|_| self.amplitude()).collect();
        StateVector::new(basis.clone(), amps).expect("one amplitude per element")
    }

    /// Unit-norm vector with real and imaginary parts uniform in `[-1, 1)` before scaling.
    pub fn normalized(&mut self, basis: &Basis) -> StateVector {
        let amps: Vec<Amplitude> = (0..basis.size())
            .map(|_| {
                Amplitude::new(
                    self.rng.random_range(-1.0..1.0),
                    self.rng.random_range(-1.0..1.0),
                )
            })
            .collect();
        let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        let amps = amps.into_iter().map(|a| a / norm).collect();
        StateVector::new(basis.clone(), amps).expect("one amplitude per element")
    }

    pub fn linear(&mut self, input: &Basis, output: &Basis) -> LinearOp {
        LinearOp::from_fn(input, output, |_| Ok(self.vector(output))).expect("rows over output")
    }

    /// Random total function between index sets.
    pub fn function(&mut self, from: usize, to: usize) -> Vec<usize> {
        (0..from).map(|_| self.index(to)).collect()
    }

    fn pick<'a, T>(&mut self, items: &'a [T]) -> &'a T {
        &items[self.index(items.len())]
    }
}

/// Result of checking one law.
#[derive(Debug, Clone, PartialEq)]
pub struct LawReport {
    pub law: String,
    pub instances: usize,
    pub max_residual: f64,
    pub tol: f64,
    pub pass: bool,
    pub witness: String,
}

impl LawReport {
    fn new(law: &str, tol: f64) -> Self {
        LawReport {
            law: law.to_string(),
            instances: 0,
            max_residual: 0.0,
            tol,
            pass: true,
            witness: String::new(),
        }
    }

    fn record(&mut self, residual: f64, witness: impl FnOnce() -> String) {
        self.instances += 1;
        if residual > self.max_residual || self.witness.is_empty() {
            self.max_residual = self.max_residual.max(residual);
            self.witness = witness();
        }
        self.pass = self.max_residual <= self.tol;
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<4}  {:<56}  {:>6}  {:>9.2e}",
            if self.pass { "PASS" } else { "FAIL" },
            self.law,
            self.instances,
            self.max_residual
        )?;
        if !self.pass {
            write!(f, "  worst: {}", self.witness)?;
        }
        Ok(())
    }
}

/// Render reports as a table, one row per law.
pub fn format_table(reports: &[LawReport]) -> String {
    let mut out = format!(
        "{:<4}  {:<56}  {:>6}  {:>9}\n",
        "", "law", "cases", "residual"
    );
    for r in reports {
        out.push_str(&r.to_string());
        out.push('\n');
    }
    out
}

/// `return` and `bind` for state vectors.
pub trait MonadOps {
    fn unit(&self, basis: &Basis, index: usize) -> Result<StateVector>;
    fn bind(&self, v: &StateVector, f: &LinearOp) -> Result<StateVector>;
}

/// The library's own vector operations.
pub struct Standard;

impl MonadOps for Standard {
    fn unit(&self, basis: &Basis, index: usize) -> Result<StateVector> {
        StateVector::unit(basis, index)
    }

    fn bind(&self, v: &StateVector, f: &LinearOp) -> Result<StateVector> {
        v.bind(f)
    }
}

/// `arr`, `>>>` and `first` for superoperators.
pub trait ArrowOps {
    fn arr(
        &self,
        input: &Basis,
        output: &Basis,
        f: &dyn Fn(usize) -> usize,
    ) -> Result<Superoperator>;
    fn then(&self, f: &Superoperator, g: &Superoperator) -> Result<Superoperator>;
    fn first(&self, f: &Superoperator, carried: &Basis) -> Result<Superoperator>;
}

impl ArrowOps for Standard {
    fn arr(
        &self,
        input: &Basis,
        output: &Basis,
        f: &dyn Fn(usize) -> usize,
    ) -> Result<Superoperator> {
        Superoperator::arr(input, output, f)
    }

    fn then(&self, f: &Superoperator, g: &Superoperator) -> Result<Superoperator> {
        f.then(g)
    }

    fn first(&self, f: &Superoperator, carried: &Basis) -> Result<Superoperator> {
        Ok(f.first(carried))
    }
}

/// Bases used by [`check_monad_laws`] when none are given: `bool`, `bool^2`, `bool^3`.
pub fn default_bases() -> Vec<Basis> {
    (1..=3).map(|n| Basis::qubits(n).expect("n >= 1")).collect()
}

/// Monad laws for vectors. Each law is checked `n_cases` times per basis in
/// `bases`; intermediate bases are drawn from the same list.
pub fn check_monad_laws<M: MonadOps>(
    ops: &M,
    gen: &mut SeededGenerator,
    bases: &[Basis],
    n_cases: usize,
    tol: f64,
) -> Result<Vec<LawReport>> {
    if bases.is_empty() {
        return Err(Error::IncompatiblePool {
            law: MONAD_LAWS[0].to_string(),
            detail: "no bases to quantify over".into(),
        });
    }
    let mut reports: Vec<LawReport> = MONAD_LAWS.iter().map(|l| LawReport::new(l, tol)).collect();
    for a in bases {
        for case in 0..n_cases.max(1) {
            let b = gen.pick(bases).clone();
            let c = gen.pick(bases).clone();
            let v = gen.vector(a);
            let f = gen.linear(a, &b);
            let g = gen.linear(&b, &c);

            // law 1, at every basis element
            for x in 0..a.size() {
                let lhs = ops.bind(&ops.unit(a, x)?, &f)?;
                let residual = lhs.max_abs_diff(&f.row(x))?;
                reports[0].record(residual, || {
                    format!("{a} -> {b}, case {case}, x = {}", a.label(x))
                });
            }

            let ret = LinearOp::from_fn(a, a, |x| ops.unit(a, x))?;
            let residual = ops.bind(&v, &ret)?.max_abs_diff(&v)?;
            reports[1].record(residual, || format!("{a}, case {case}"));

            let lhs = ops.bind(&ops.bind(&v, &f)?, &g)?;
            let kleisli = LinearOp::from_fn(a, &c, |x| ops.bind(&f.row(x), &g))?;
            let rhs = ops.bind(&v, &kleisli)?;
            let residual = lhs.max_abs_diff(&rhs)?;
            reports[2].record(residual, || format!("{a} -> {b} -> {c}, case {case}"));
        }
    }
    Ok(reports)
}

/// The operator pool used by default: lifted Hadamard, not and cnot, `meas`
/// on one qubit, `trL` on two, and the two-wire swap.
pub fn default_pool() -> Vec<Superoperator> {
    let b = Basis::boolean();
    let two = Basis::pair(&b, &b);
    vec![
        Superoperator::lift(&hadamard()),
        Superoperator::lift(&qnot()),
        Superoperator::lift(&controlled(&qnot()).expect("square")),
        Superoperator::meas(&b),
        Superoperator::tr_l(&two).expect("binary product"),
        Superoperator::permute(&two, &[1, 0]).expect("swap"),
    ]
}

fn shape(s: &Superoperator) -> String {
    format!("{} -> {}", s.input(), s.output())
}

fn compare(lhs: &Superoperator, rhs: &Superoperator) -> Result<f64> {
    lhs.max_abs_diff(rhs)
}

/// All nine arrow laws over `pool`, plus random pure functions for the laws
/// stated in terms of `arr`. Carried components range over `bool` and `bool^2`.
pub fn check_arrow_laws<A: ArrowOps>(
    ops: &A,
    gen: &mut SeededGenerator,
    pool: &[Superoperator],
    tol: f64,
) -> Result<Vec<LawReport>> {
    let b = Basis::boolean();
    let carried = [b.clone(), Basis::pair(&b, &b)];
    let fn_bases = default_bases();
    let mut reports: Vec<LawReport> = ARROW_LAWS.iter().map(|l| LawReport::new(l, tol)).collect();
    let no_instances = |law: usize, detail: String| Error::IncompatiblePool {
        law: ARROW_LAWS[law].to_string(),
        detail,
    };
    let pool_shapes = || pool.iter().map(shape).collect::<Vec<_>>().join("; ");
    if pool.is_empty() {
        return Err(no_instances(0, "empty pool".into()));
    }

    for (i, f) in pool.iter().enumerate() {
        let id_in = ops.arr(f.input(), f.input(), &|x| x)?;
        let r = compare(&ops.then(&id_in, f)?, f)?;
        reports[0].record(r, || format!("pool[{i}]: {}", shape(f)));

        let id_out = ops.arr(f.output(), f.output(), &|x| x)?;
        let r = compare(&ops.then(f, &id_out)?, f)?;
        reports[1].record(r, || format!("pool[{i}]: {}", shape(f)));
    }

    for (i, f) in pool.iter().enumerate() {
        for (j, g) in pool
            .iter()
            .enumerate()
            .filter(|(_, g)| f.output() == g.input())
        {
            for (k, h) in pool
                .iter()
                .enumerate()
                .filter(|(_, h)| g.output() == h.input())
            {
                let lhs = ops.then(&ops.then(f, g)?, h)?;
                let rhs = ops.then(f, &ops.then(g, h)?)?;
                reports[2].record(compare(&lhs, &rhs)?, || {
                    format!("pool[{i}], pool[{j}], pool[{k}]")
                });
            }
        }
    }
    if reports[2].instances == 0 {
        return Err(no_instances(
            2,
            format!("no composable triple among {}", pool_shapes()),
        ));
    }

    for case in 0..ARROW_RANDOM_CASES {
        let (x, y, z) = (
            gen.pick(&fn_bases).clone(),
            gen.pick(&fn_bases).clone(),
            gen.pick(&fn_bases).clone(),
        );
        let f = gen.function(x.size(), y.size());
        let g = gen.function(y.size(), z.size());
        let lhs = ops.arr(&x, &z, &|i| g[f[i]])?;
        let rhs = ops.then(&ops.arr(&x, &y, &|i| f[i])?, &ops.arr(&y, &z, &|i| g[i])?)?;
        reports[3].record(compare(&lhs, &rhs)?, || {
            format!("case {case}: {x} -> {y} -> {z}, f = {f:?}, g = {g:?}")
        });

        let d = gen.pick(&carried).clone();
        let nd = d.size();
        let lhs = ops.first(&ops.arr(&x, &y, &|i| f[i])?, &d)?;
        let rhs = ops.arr(&Basis::pair(&x, &d), &Basis::pair(&y, &d), &|i| {
            f[i / nd] * nd + i % nd
        })?;
        reports[4].record(compare(&lhs, &rhs)?, || {
            format!("case {case}: {x} -> {y} carrying {d}, f = {f:?}")
        });
    }

    for (i, f) in pool.iter().enumerate() {
        for (j, g) in pool
            .iter()
            .enumerate()
            .filter(|(_, g)| f.output() == g.input())
        {
            let lhs = ops.first(&ops.then(f, g)?, &b)?;
            let rhs = ops.then(&ops.first(f, &b)?, &ops.first(g, &b)?)?;
            reports[5].record(compare(&lhs, &rhs)?, || format!("pool[{i}], pool[{j}]"));
        }
    }
    if reports[5].instances == 0 {
        return Err(no_instances(
            5,
            format!("no composable pair among {}", pool_shapes()),
        ));
    }

    for (i, f) in pool.iter().enumerate() {
        for _ in 0..2 {
            let d = gen.pick(&carried).clone();
            let e = gen.pick(&carried).clone();
            let g = gen.function(d.size(), e.size());
            let (nd, ne) = (d.size(), e.size());
            let id_x_g = |left: &Basis| {
                ops.arr(&Basis::pair(left, &d), &Basis::pair(left, &e), &|k| {
                    (k / nd) * ne + g[k % nd]
                })
            };
            let lhs = ops.then(&ops.first(f, &d)?, &id_x_g(f.output())?)?;
            let rhs = ops.then(&id_x_g(f.input())?, &ops.first(f, &e)?)?;
            reports[6].record(compare(&lhs, &rhs)?, || {
                format!("pool[{i}], g: {d} -> {e} = {g:?}")
            });
        }

        let nb = b.size();
        let fst = |left: &Basis| ops.arr(&Basis::pair(left, &b), left, &|k| k / nb);
        let lhs = ops.then(&ops.first(f, &b)?, &fst(f.output())?)?;
        let rhs = ops.then(&fst(f.input())?, f)?;
        reports[7].record(compare(&lhs, &rhs)?, || format!("pool[{i}]: {}", shape(f)));

        let (d, e) = (b.clone(), b.clone());
        let de = Basis::pair(&d, &e);
        let assoc = |left: &Basis| {
            ops.arr(
                &Basis::pair(&Basis::pair(left, &d), &e),
                &Basis::pair(left, &de),
                &|k| k,
            )
        };
        let lhs = ops.then(&ops.first(&ops.first(f, &d)?, &e)?, &assoc(f.output())?)?;
        let rhs = ops.then(&assoc(f.input())?, &ops.first(f, &de)?)?;
        reports[8].record(compare(&lhs, &rhs)?, || format!("pool[{i}]: {}", shape(f)));
    }

    Ok(reports)
}

/// Run both suites with the default bases and pool.
pub fn check_all(seed: u64, tol: f64) -> Result<Vec<LawReport>> {
    let mut gen = SeededGenerator::new(seed);
    let mut reports = check_monad_laws(
        &Standard,
        &mut gen,
        &default_bases(),
        DEFAULT_MONAD_CASES,
        tol,
    )?;
    reports.extend(check_arrow_laws(&Standard, &mut gen, &default_pool(), tol)?);
    Ok(reports)
}

/// Broken implementations used to show the suites can fail.
pub mod mutants {
    use super::*;
    use crate::density::DensityMatrix;

    /// `bind` whose sum skips the last input basis element.
    pub struct SkippingBind;

    impl MonadOps for SkippingBind {
        fn unit(&self, basis: &Basis, index: usize) -> Result<StateVector> {
            StateVector::unit(basis, index)
        }

        fn bind(&self, v: &StateVector, f: &LinearOp) -> Result<StateVector> {
            let n = v.basis().size();
            let out = f.output();
            let mut acc = StateVector::zero(out);
            for a in 0..n.saturating_sub(1) {
                acc = acc.plus(&f.row(a).scale(v.get(a)))?;
            }
            Ok(acc)
        }
    }

    /// `first` that reuses the left carried index for the dual side,
    /// `first f ((b1,d1),(b2,d2)) = permute (f (b1,b2) <*> return (d1,d1))`.
    pub struct DuallessFirst;

    impl ArrowOps for DuallessFirst {
        fn arr(
            &self,
            input: &Basis,
            output: &Basis,
            f: &dyn Fn(usize) -> usize,
        ) -> Result<Superoperator> {
            Standard.arr(input, output, f)
        }

        fn then(&self, f: &Superoperator, g: &Superoperator) -> Result<Superoperator> {
            Standard.then(f, g)
        }

        fn first(&self, f: &Superoperator, carried: &Basis) -> Result<Superoperator> {
            let nd = carried.size();
            let nb = f.output().size();
            let output = Basis::pair(f.output(), carried);
            Superoperator::from_blocks(&Basis::pair(f.input(), carried), &output, |i1, i2| {
                let (a1, d1) = (i1 / nd, i1 % nd);
                let a2 = i2 / nd;
                let block = f.block(a1, a2);
                let n = output.size();
                let mut entries = vec![Amplitude::new(0.0, 0.0); n * n];
                for b1 in 0..nb {
                    for b2 in 0..nb {
                        entries[(b1 * nd + d1) * n + (b2 * nd + d1)] = block.get(b1, b2);
                    }
                }
                DensityMatrix::new(&output, entries)
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_is_deterministic() {
        let mut a = SeededGenerator::new(7);
        let mut b = SeededGenerator::new(7);
        let xs: Vec<Amplitude> = (0..10).map(|_| a.amplitude()).collect();
        let ys: Vec<Amplitude> = (0..10).map(|_| b.amplitude()).collect();
        assert_eq!(xs, ys);
        assert!(xs
            .iter()
            .all(|z| (0.0..1.0).contains(&z.re) && (0.0..1.0).contains(&z.im)));
        let mut c = SeededGenerator::new(8);
        assert_ne!(xs[0], c.amplitude());
    }

    #[test]
    fn normalized_vectors_have_unit_norm() {
        let mut g = SeededGenerator::new(1);
        let v = g.normalized(&Basis::qubits(2).unwrap());
        assert!((v.dot(&v).unwrap() - 1.0).norm() < 1e-12);
    }

    #[test]
    fn monad_laws_hold() {
        let mut g = SeededGenerator::new(DEFAULT_SEED);
        let reports =
            check_monad_laws(&Standard, &mut g, &default_bases(), 5, DEFAULT_TOL).unwrap();
        assert_eq!(reports.len(), 3);
        assert!(reports.iter().all(|r| r.pass), "{}", format_table(&reports));
    }

    #[test]
    fn unit_basis_left_identity_is_exact() {
        let unit = Basis::new(["()"]).unwrap();
        let mut g = SeededGenerator::new(3);
        let reports = check_monad_laws(&Standard, &mut g, &[unit], 10, 0.0).unwrap();
        assert_eq!(reports[0].max_residual, 0.0);
        assert!(reports[0].pass);
    }

    #[test]
    fn skipping_bind_breaks_right_identity() {
        let mut g = SeededGenerator::new(DEFAULT_SEED);
        let reports = check_monad_laws(
            &mutants::SkippingBind,
            &mut g,
            &default_bases(),
            5,
            DEFAULT_TOL,
        )
        .unwrap();
        assert!(!reports[1].pass);
        assert!(reports[1].max_residual > 0.0);
        assert!(!reports[1].witness.is_empty());
    }

    #[test]
    fn identity_pool_has_zero_residual_on_law_one() {
        let b = Basis::boolean();
        let mut g = SeededGenerator::new(1);
        let reports =
            check_arrow_laws(&Standard, &mut g, &[Superoperator::identity(&b)], 0.0).unwrap();
        assert_eq!(reports[0].max_residual, 0.0);
    }

    #[test]
    fn dualless_first_breaks_law_five() {
        let mut g = SeededGenerator::new(DEFAULT_SEED);
        let reports = check_arrow_laws(
            &mutants::DuallessFirst,
            &mut g,
            &default_pool(),
            DEFAULT_TOL,
        )
        .unwrap();
        assert!(!reports[4].pass, "{}", format_table(&reports));
    }

    #[test]
    fn incompatible_pool_is_reported() {
        let mut g = SeededGenerator::new(1);
        let err = check_arrow_laws(
            &Standard,
            &mut g,
            &[Superoperator::meas(&Basis::boolean())],
            DEFAULT_TOL,
        )
        .unwrap_err();
        match err {
            Error::IncompatiblePool { law, detail } => {
                assert_eq!(law, ARROW_LAWS[2]);
                assert!(detail.contains("Bool -> (Bool, Bool)"), "{detail}");
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(check_arrow_laws(&Standard, &mut g, &[], DEFAULT_TOL).is_err());
    }
}
