//! Sweep suites over the identities checked by this crate. Each suite stops
//! at its first counterexample.

use num_bigint::{BigInt, BigUint};
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::characters::{irreducible_character, weyl_dimension};
use crate::demazure::{demazure_dim, demazure_dim_with, kr_dims_at_level, Sl2KrDimensions};
use crate::error::Result;
use crate::partitions::{
    enumerate_s, verify_rearrange_constraint, verify_split_identity, xi_of_level, Shape,
};
use crate::qsystem::{qsystem_solve, verify_dimension_identity, InitialData};
use crate::report::Status;
use crate::root_system::{LieType, RootSystem, Weight};
use crate::sl2_fusion::{
    check_split, check_tail_relation, enumerate_index_set, fusion_dim, graded_character_basis,
    graded_character_ses, partitions_of, product_of_evaluation_characters,
};

/// Types used by the randomised suites.
pub const SAMPLE_TYPES: [&str; 13] = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "G2", "F4"];

pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub name: String,
    pub status: Status,
    pub checked: u64,
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    /// Largest `|ξ|` in the `sl_2` fusion suite.
    pub max_size: u64,
    pub seed: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_size: 12,
            seed: DEFAULT_SEED,
        }
    }
}

struct Suite {
    name: &'static str,
    checked: u64,
    counterexample: Option<String>,
}

impl Suite {
    fn new(name: &'static str) -> Self {
        Suite {
            name,
            checked: 0,
            counterexample: None,
        }
    }

    fn failed(&self) -> bool {
        self.counterexample.is_some()
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        if self.failed() {
            return;
        }
        self.checked += 1;
        if !ok {
            self.counterexample = Some(describe());
        }
    }

    fn check_result<T>(&mut self, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.check(false, || e.to_string());
                None
            }
        }
    }

    fn finish(self) -> SuiteReport {
        SuiteReport {
            name: self.name.to_string(),
            status: Status::from_bool(self.counterexample.is_none()),
            checked: self.checked,
            counterexample: self.counterexample,
        }
    }
}

fn root_system(name: &str) -> RootSystem {
    RootSystem::new(name.parse::<LieType>().expect("sample types are valid"))
}

/// Number of partitions of `n` into at most `k` parts.
pub fn partitions_into_at_most(n: u64, k: u64) -> u64 {
    // parts of size at most k, by conjugation
    let n = n as usize;
    let mut ways = vec![0u64; n + 1];
    ways[0] = 1;
    for part in 1..=k as usize {
        for total in part..=n {
            ways[total] += ways[total - part];
        }
    }
    ways[n]
}

pub fn s_calculus() -> SuiteReport {
    let mut suite = Suite::new("s-calculus");
    for r in 0..=8 {
        for s in 0..=8 {
            for k in 0..=8 {
                let rep = verify_split_identity(r, s, k);
                suite.check(rep.status == Status::Pass, || rep.counterexample.clone().unwrap_or_default());
                for bound in 0..=5 {
                    if s + r < k * r + bound {
                        continue;
                    }
                    if let Some(rep) = suite.check_result(verify_rearrange_constraint(r, s, k, bound)) {
                        suite.check(rep.status == Status::Pass, || rep.counterexample.clone().unwrap_or_default());
                    }
                }
            }
        }
    }
    for r in 0..=12 {
        for s in 0..=12 {
            let got = enumerate_s(r, s).len() as u64;
            let want = partitions_into_at_most(s, r);
            suite.check(got == want, || format!("|S({r},{s})| = {got}, expected {want}"));
        }
    }
    suite.finish()
}

pub fn root_system_invariants() -> SuiteReport {
    let mut suite = Suite::new("root-system");
    let mut names: Vec<String> = Vec::new();
    for n in 1..=8 {
        names.push(format!("A{n}"));
    }
    for n in 2..=8 {
        names.push(format!("B{n}"));
        names.push(format!("C{n}"));
    }
    for n in 3..=8 {
        names.push(format!("D{n}"));
    }
    names.extend(["E6", "E7", "E8", "F4", "G2"].map(String::from));
    for name in &names {
        let rs = root_system(name);
        let lt = rs.lie_type();
        suite.check(rs.positive_roots().len() == lt.positive_root_count(), || {
            format!("{name}: {} positive roots", rs.positive_roots().len())
        });
        suite.check(rs.highest_root().d_alpha == 1, || format!("{name}: highest root is short"));
        for alpha in rs.positive_roots() {
            let decs = rs.root_decompositions(alpha);
            suite.check(decs.is_empty() == (alpha.height == 1), || {
                format!("{name}: {alpha} has {} decompositions", decs.len())
            });
            for (b, c) in &decs {
                suite.check(!(b.is_long() && c.is_long()) || alpha.is_long(), || {
                    format!("{name}: {b} + {c} = {alpha} is short")
                });
            }
        }
    }
    suite.finish()
}

/// `λ(h_α) = d_α s_α` and `s_α = s_β + s_γ` for random `λ = Σ d_i s_i ω_i`.
pub fn dalpha_additivity(seed: u64) -> SuiteReport {
    let mut suite = Suite::new("dalpha-additivity");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for name in SAMPLE_TYPES {
        let rs = root_system(name);
        for _ in 0..20 {
            let s: Vec<i64> = (0..rs.rank()).map(|_| rng.random_range(0..=5)).collect();
            let lambda = Weight((0..rs.rank()).map(|i| rs.d(i) * s[i]).collect());
            let mut s_of = Vec::new();
            for alpha in rs.positive_roots() {
                let Some(sa) = suite.check_result(rs.dalpha_split(&lambda, alpha)) else {
                    return suite.finish();
                };
                let v = rs.eval_coroot(&lambda, alpha);
                suite.check(v == alpha.d_alpha * sa, || format!("{name}, {lambda}, {alpha}: {v} != d*{sa}"));
                s_of.push(sa);
            }
            for (a, alpha) in rs.positive_roots().iter().enumerate() {
                for (b, c) in rs.root_decompositions(alpha) {
                    let sb = s_of[rs.index_of(&b.coords).expect("root")];
                    let sc = s_of[rs.index_of(&c.coords).expect("root")];
                    suite.check(s_of[a] == sb + sc, || {
                        format!("{name}, {lambda}: s({alpha}) = {} != s({b}) + s({c}) = {sb} + {sc}", s_of[a])
                    });
                }
            }
        }
    }
    suite.finish()
}

/// Freudenthal mass equals the Weyl dimension for small weights.
pub fn character_dimensions() -> SuiteReport {
    let mut suite = Suite::new("character-dimensions");
    for name in ["A1", "A2", "A3", "B2", "B3", "C3", "G2"] {
        let rs = root_system(name);
        for lambda in weights_up_to(rs.rank(), 3) {
            let Some(ch) = suite.check_result(irreducible_character(&rs, &lambda)) else {
                return suite.finish();
            };
            let Some(dim) = suite.check_result(weyl_dimension(&rs, &lambda)) else {
                return suite.finish();
            };
            suite.check(ch.dimension() == BigInt::from(dim.clone()), || {
                format!("{name}, {lambda}: mass {} != Weyl dimension {dim}", ch.dimension())
            });
        }
    }
    suite.finish()
}

/// Dominant weights with coordinate sum at most `max`.
pub fn weights_up_to(rank: usize, max: i64) -> Vec<Weight> {
    let mut out = vec![Vec::new()];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                let used: i64 = v.iter().sum();
                (0..=max - used).map(move |c| {
                    let mut w = v.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(Weight).collect()
}

/// `Q_m^{(i)} = ch V(mω_i)` in type A, with exact divisions and
/// nonnegative decompositions.
pub fn qsystem_type_a() -> SuiteReport {
    let mut suite = Suite::new("qsystem-type-a");
    for n in 1..=3 {
        let rs = root_system(&format!("A{n}"));
        let Some(init) = suite.check_result(InitialData::type_a_default(&rs)) else {
            return suite.finish();
        };
        let Some(table) = suite.check_result(qsystem_solve(&rs, &init, 5)) else {
            return suite.finish();
        };
        for i in 0..n {
            for m in 0..=5u64 {
                let q = table.get(i, m).expect("filled");
                let Some(expected) = suite.check_result(irreducible_character(&rs, &Weight::fundamental(n, i, m as i64)))
                else {
                    return suite.finish();
                };
                suite.check(q == &expected, || format!("A{n}: Q_{m}^({}) != ch V({m} w_{})", i + 1, i + 1));
                if let Some(parts) = suite.check_result(table.decompose(i, m)) {
                    suite.check(parts.iter().all(|(_, c)| !c.is_negative()), || {
                        format!("A{n}: Q_{m}^({}) has a negative multiplicity", i + 1)
                    });
                }
                if (1..5).contains(&m) {
                    if let Some(res) = suite.check_result(table.recursion_residual(i, m)) {
                        suite.check(res.is_zero(), || format!("A{n}: recursion residual at ({}, {m})", i + 1));
                    }
                }
            }
        }
    }
    suite.finish()
}

pub fn dimension_identity_type_a() -> SuiteReport {
    let mut suite = Suite::new("dimension-identity");
    for n in 1..=3 {
        let rs = root_system(&format!("A{n}"));
        let Some(table) = suite.check_result(InitialData::type_a_default(&rs).and_then(|d| qsystem_solve(&rs, &d, 5)))
        else {
            return suite.finish();
        };
        for i in 0..n {
            for m in 1..=4 {
                if let Some(r) = suite.check_result(verify_dimension_identity(&table, i, m)) {
                    suite.check(r.status == Status::Pass, || {
                        format!("A{n}, i = {}, m = {m}: {} != {} + {}", i + 1, r.square, r.kernel, r.neighbors)
                    });
                }
            }
        }
    }
    suite.finish()
}

/// `dim D(1, mω) = 2^m` for `sl_2` by KR factorisation and by `∏(ξ_s + 1)`.
pub fn sl2_demazure_anchor() -> SuiteReport {
    let mut suite = Suite::new("sl2-demazure");
    let rs = root_system("A1");
    for m in 1..=10u64 {
        let lambda = Weight(vec![m as i64]);
        let want = BigUint::from(1u64 << m);
        if let Some(d) = suite.check_result(demazure_dim_with(&rs, 1, &lambda, &Sl2KrDimensions)) {
            suite.check(d == want, || format!("dim D(1, {m}w) = {d}"));
        }
        if let Some(xi) = suite.check_result(xi_of_level(&rs, 1, &lambda)) {
            let d = fusion_dim(&xi.assignment[0]);
            suite.check(d == want, || format!("fusion dim of xi(1, {m}w) = {d}"));
        }
    }
    suite.finish()
}

/// `dim D(ℓ, λ+μ) = dim D(ℓ, λ) dim D(ℓ, μ)` over `Γ`, types `A_1`–`A_3`.
pub fn multiplicativity() -> SuiteReport {
    let mut suite = Suite::new("multiplicativity");
    for n in 1..=3 {
        let rs = root_system(&format!("A{n}"));
        let Some(table) = suite.check_result(InitialData::type_a_default(&rs).and_then(|d| qsystem_solve(&rs, &d, 3)))
        else {
            return suite.finish();
        };
        for level in 1..=3u64 {
            let Some(dims) = suite.check_result(kr_dims_at_level(&rs, level, &table)) else {
                return suite.finish();
            };
            let gamma: Vec<Weight> = weights_up_to(n, 6)
                .into_iter()
                .filter(|w| w.coords().iter().all(|&c| c % level as i64 == 0))
                .collect();
            for lambda in &gamma {
                for mu in &gamma {
                    let (Some(a), Some(b), Some(c)) = (
                        suite.check_result(demazure_dim(&rs, level, lambda, &dims)),
                        suite.check_result(demazure_dim(&rs, level, mu, &dims)),
                        suite.check_result(demazure_dim(&rs, level, &(lambda + mu), &dims)),
                    ) else {
                        return suite.finish();
                    };
                    suite.check(c == &a * &b, || format!("A{n}, l = {level}: D({lambda}+{mu}) = {c} != {a} * {b}"));
                }
                if n == 1 && !lambda.is_zero() {
                    // sl_2: Demazure dimension equals the fusion dimension of ξ(ℓ, λ)
                    if let (Some(d), Some(xi)) = (
                        suite.check_result(demazure_dim(&rs, level, lambda, &dims)),
                        suite.check_result(xi_of_level(&rs, level, lambda)),
                    ) {
                        let f = fusion_dim(&xi.assignment[0]);
                        suite.check(d == f, || format!("l = {level}, {lambda}: D = {d}, fusion = {f}"));
                    }
                }
            }
        }
    }
    suite.finish()
}

pub fn sl2_fusion(max_size: u64) -> SuiteReport {
    let mut suite = Suite::new("sl2-fusion");
    for n in 0..=max_size {
        for xi in partitions_of(n) {
            let set = enumerate_index_set(&xi);
            let dim = fusion_dim(&xi);
            suite.check(BigUint::from(set.len()) == dim, || format!("|I({xi})| = {} != {dim}", set.len()));
            if xi.len() >= 2 {
                let split = check_split(&xi);
                suite.check(split.is_ok(), || split.unwrap_err());
            }
            let basis = graded_character_basis(&xi);
            suite.check(basis == graded_character_ses(&xi), || format!("basis and SES characters differ for {xi}"));
            suite.check(basis.specialize() == product_of_evaluation_characters(&xi), || {
                format!("q = 1 specialisation of {xi} is not the product of evaluation characters")
            });
            suite.check(basis.is_weight_symmetric(), || format!("character of {xi} is not symmetric"));
            let tails = check_tail_relation(&xi);
            suite.check(tails.is_ok(), || tails.unwrap_err());
        }
    }
    suite.finish()
}

fn random_nonzero_dominant(rng: &mut ChaCha8Rng, rank: usize, max: i64) -> Weight {
    loop {
        let w = Weight((0..rank).map(|_| rng.random_range(0..=max)).collect());
        if !w.is_zero() {
            return w;
        }
    }
}

/// `ξ(ℓ, λ)` is compatible and built from rectangles and special fat hooks;
/// on `Γ` it is all rectangles.
pub fn xi_of_level_draws(seed: u64, draws: usize) -> SuiteReport {
    let mut suite = Suite::new("xi-of-level");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let systems: Vec<RootSystem> = SAMPLE_TYPES.iter().map(|t| root_system(t)).collect();
    for _ in 0..draws {
        let rs = &systems[rng.random_range(0..systems.len())];
        let level = rng.random_range(1..=3u64);
        let lambda = random_nonzero_dominant(&mut rng, rs.rank(), 6);
        let Some(xi) = suite.check_result(xi_of_level(rs, level, &lambda)) else {
            return suite.finish();
        };
        let revalidated = crate::partitions::validate_tuple(rs, &lambda, xi.assignment.clone());
        suite.check(revalidated.is_ok(), || format!("{}: xi({level}, {lambda}) fails validation", rs.lie_type()));
        suite.check(xi.shapes().iter().all(Shape::is_rectangular_or_special_fat_hook), || {
            format!("{}: xi({level}, {lambda}) has a component of shape Other", rs.lie_type())
        });

        let s = random_nonzero_dominant(&mut rng, rs.rank(), 3);
        let divisible = Weight((0..rs.rank()).map(|i| level as i64 * rs.d(i) * s.0[i]).collect());
        if let Some(xi) = suite.check_result(xi_of_level(rs, level, &divisible)) {
            suite.check(
                xi.shapes().iter().all(|s| matches!(s, Shape::Empty | Shape::Rectangular { .. })),
                || format!("{}: xi({level}, {divisible}) is not all rectangular", rs.lie_type()),
            );
        }
    }
    suite.finish()
}

/// Every suite, in a fixed order.
pub fn run_all(bounds: Bounds) -> Vec<SuiteReport> {
    vec![
        root_system_invariants(),
        dalpha_additivity(bounds.seed),
        character_dimensions(),
        s_calculus(),
        xi_of_level_draws(bounds.seed, 200),
        qsystem_type_a(),
        dimension_identity_type_a(),
        sl2_demazure_anchor(),
        multiplicativity(),
        sl2_fusion(bounds.max_size),
    ]
}
