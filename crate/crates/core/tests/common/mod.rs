//! Generators and independent oracles shared by the integration tests.
#![allow(dead_code)]

use bentforge::{bent_dual, BooleanFunction};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;
pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn dot(a: usize, b: usize) -> bool {
    (a & b).count_ones() % 2 == 1
}

/// Per-point Walsh transform, O(4^n).
pub fn naive_wht(f: &BooleanFunction) -> Vec<i32> {
    let size = f.len();
    (0..size)
        .map(|u| (0..size).map(|x| if f.eval(x) ^ dot(u, x) { -1 } else { 1 }).sum())
        .collect()
}

pub fn naive_is_bent(f: &BooleanFunction) -> bool {
    let n = f.num_vars();
    n.is_multiple_of(2) && naive_wht(f).iter().all(|c| c.unsigned_abs() == 1 << (n / 2))
}

/// `f*(u) = 1` iff `W_f(u) < 0`.
pub fn naive_dual(f: &BooleanFunction) -> BooleanFunction {
    let w = naive_wht(f);
    BooleanFunction::from_fn(f.num_vars(), |u| w[u] < 0).unwrap()
}

/// Every bent function on `n <= 4` variables, by exhaustion.
pub fn all_bents(n: usize) -> Vec<BooleanFunction> {
    assert!(n == 2 || n == 4);
    let size = 1usize << n;
    (0..1u64 << size)
        .map(|t| BooleanFunction::from_fn(n, |x| (t >> x) & 1 == 1).unwrap())
        .filter(naive_is_bent)
        .collect()
}

/// `x . pi(y) + g(y)` with random `pi` and `g`, `x` the leading half.
pub fn random_mm(rng: &mut TestRng, half: usize) -> BooleanFunction {
    let mut pi: Vec<usize> = (0..1 << half).collect();
    pi.shuffle(rng);
    let g: Vec<bool> = (0..1 << half).map(|_| rng.random()).collect();
    let mask = (1 << half) - 1;
    BooleanFunction::from_fn(2 * half, |z| dot(z >> half, pi[z & mask]) ^ g[z & mask]).unwrap()
}

/// A random bent on `n` variables: uniform over all bents for `n <= 4`,
/// MM otherwise.
pub struct BentPool {
    small: Vec<Vec<BooleanFunction>>,
}

impl BentPool {
    pub fn new() -> Self {
        Self {
            small: vec![Vec::new(), Vec::new(), all_bents(2), Vec::new(), all_bents(4)],
        }
    }

    pub fn pick(&self, rng: &mut TestRng, n: usize) -> BooleanFunction {
        match self.small.get(n) {
            Some(list) if !list.is_empty() => list[rng.random_range(0..list.len())].clone(),
            _ => random_mm(rng, n / 2),
        }
    }

    /// Draw triples until `accept` holds.
    pub fn triple_where(
        &self,
        rng: &mut TestRng,
        n: usize,
        mut accept: impl FnMut(&BooleanFunction, &BooleanFunction, &BooleanFunction) -> bool,
    ) -> [BooleanFunction; 3] {
        for _ in 0..100_000 {
            let t = [self.pick(rng, n), self.pick(rng, n), self.pick(rng, n)];
            if accept(&t[0], &t[1], &t[2]) {
                return t;
            }
        }
        panic!("no triple found on {n} variables");
    }
}

impl Default for BentPool {
    fn default() -> Self {
        Self::new()
    }
}

/// `f1* + f2* + f3* + (f1 + f2 + f3)*`, or `None` if any of them is not bent.
pub fn dual_sum(f1: &BooleanFunction, f2: &BooleanFunction, f3: &BooleanFunction) -> Option<BooleanFunction> {
    let psi = f1 ^ f2 ^ f3.clone();
    let d = [
        bent_dual(f1).ok()?,
        bent_dual(f2).ok()?,
        bent_dual(f3).ok()?,
        bent_dual(&psi).ok()?,
    ];
    Some(&d[0] ^ &d[1] ^ &d[2] ^ d[3].clone())
}

pub fn sum_is_constant(f1: &BooleanFunction, f2: &BooleanFunction, f3: &BooleanFunction, value: bool) -> bool {
    dual_sum(f1, f2, f3).is_some_and(|s| s.weight() == if value { s.len() } else { 0 })
}

/// Evaluate `F(x)` through a closure over 1-based variables `x_j`.
pub fn from_vars(n: usize, expr: impl Fn(&dyn Fn(usize) -> bool) -> bool) -> BooleanFunction {
    BooleanFunction::from_fn(n, |x| expr(&|j| (x >> (n - j)) & 1 == 1)).unwrap()
}
