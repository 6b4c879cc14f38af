//! Demazure modules `D(ℓ, λ)` for `(ℓ, λ) ∈ Γ`, where
//! `Γ = {(ℓ, λ) : λ = ℓ Σ d_i s_i ω_i}`.
//!
//! On `Γ` the module factors as a fusion product
//! `KR(d_1ℓω_1)^{*s_1} * ⋯ * KR(d_nℓω_n)^{*s_n}`, so its dimension is
//! `∏ dim KR(d_iℓω_i)^{s_i}`. Kirillov–Reshetikhin dimensions are supplied by
//! the caller through [`KrDimensions`].

use num_bigint::{BigInt, BigUint};
use num_rational::Ratio;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qsystem::QSystemTable;
use crate::report::Status;
use crate::root_system::{RootSystem, Weight};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaPoint {
    pub level: u64,
    pub lambda: Weight,
    /// `λ = ℓ Σ d_i s_i ω_i`.
    pub s: Vec<u64>,
}

pub fn gamma_membership(rs: &RootSystem, level: u64, lambda: &Weight) -> Result<GammaPoint> {
    if level == 0 {
        return Err(Error::Precondition("level must be positive".into()));
    }
    rs.check_dominant(lambda)?;
    let mut s = Vec::with_capacity(rs.rank());
    for (i, &c) in lambda.coords().iter().enumerate() {
        let divisor = level as i64 * rs.d(i);
        if c % divisor != 0 {
            return Err(Error::NotInGamma {
                level,
                weight: lambda.to_string(),
                node: i,
                coefficient: c,
                divisor,
            });
        }
        s.push((c / divisor) as u64);
    }
    Ok(GammaPoint {
        level,
        lambda: lambda.clone(),
        s,
    })
}

/// A source of `dim KR(k ω_i)`.
pub trait KrDimensions {
    fn kr_dim(&self, node: usize, k: u64) -> Result<BigUint>;
}

impl KrDimensions for QSystemTable {
    fn kr_dim(&self, node: usize, k: u64) -> Result<BigUint> {
        self.get(node, k)?
            .dimension()
            .to_biguint()
            .ok_or_else(|| Error::Precondition(format!("Q_{k} at node {} has negative dimension", node + 1)))
    }
}

/// `dim KR(kω) = k + 1` for `sl_2`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Sl2KrDimensions;

impl KrDimensions for Sl2KrDimensions {
    fn kr_dim(&self, node: usize, k: u64) -> Result<BigUint> {
        if node != 0 {
            return Err(Error::Precondition(format!("sl_2 has one node, got node {}", node + 1)));
        }
        Ok(BigUint::from(k + 1))
    }
}

/// `dim KR(d_i ℓ ω_i)` for every node.
pub fn kr_dims_at_level(rs: &RootSystem, level: u64, source: &impl KrDimensions) -> Result<Vec<BigUint>> {
    (0..rs.rank()).map(|i| source.kr_dim(i, rs.d(i) as u64 * level)).collect()
}

/// `∏_i kr_dims[i]^{s_i}` where `kr_dims[i] = dim KR(d_i ℓ ω_i)`.
pub fn demazure_dim(rs: &RootSystem, level: u64, lambda: &Weight, kr_dims: &[BigUint]) -> Result<BigUint> {
    let point = gamma_membership(rs, level, lambda)?;
    if kr_dims.len() != rs.rank() {
        return Err(Error::RankMismatch {
            expected: rs.rank(),
            got: kr_dims.len(),
        });
    }
    Ok(point
        .s
        .iter()
        .zip(kr_dims)
        .fold(BigUint::one(), |acc, (&s, d)| acc * d.pow(s as u32)))
}

/// [`demazure_dim`] with KR dimensions drawn from `source`.
pub fn demazure_dim_with(rs: &RootSystem, level: u64, lambda: &Weight, source: &impl KrDimensions) -> Result<BigUint> {
    let point = gamma_membership(rs, level, lambda)?;
    let mut dims = Vec::with_capacity(rs.rank());
    for (i, &s) in point.s.iter().enumerate() {
        // unused nodes need no KR data
        dims.push(if s == 0 { BigUint::one() } else { source.kr_dim(i, rs.d(i) as u64 * level)? });
    }
    demazure_dim(rs, level, lambda, &dims)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicativityReport {
    pub level: u64,
    pub lambda: Weight,
    pub mu: Weight,
    pub dim_sum: BigUint,
    pub dim_lambda: BigUint,
    pub dim_mu: BigUint,
    pub status: Status,
}

/// Checks `dim D(ℓ, λ+μ) = dim D(ℓ, λ) · dim D(ℓ, μ)`.
pub fn verify_multiplicativity(
    rs: &RootSystem,
    level: u64,
    lambda: &Weight,
    mu: &Weight,
    kr_dims: &[BigUint],
) -> Result<MultiplicativityReport> {
    rs.check_weight(mu)?;
    let dim_lambda = demazure_dim(rs, level, lambda, kr_dims)?;
    let dim_mu = demazure_dim(rs, level, mu, kr_dims)?;
    let dim_sum = demazure_dim(rs, level, &(lambda + mu), kr_dims)?;
    let status = Status::from_bool(dim_sum == &dim_lambda * &dim_mu);
    Ok(MultiplicativityReport {
        level,
        lambda: lambda.clone(),
        mu: mu.clone(),
        dim_sum,
        dim_lambda,
        dim_mu,
        status,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurjectionReport {
    pub level: u64,
    pub lambda: Weight,
    pub parts: Vec<(u64, Weight)>,
    /// All `p_j = ℓ`: the map is an isomorphism and dimensions must agree.
    pub equal_levels: bool,
    pub dim_source: BigUint,
    pub dim_target: BigUint,
    pub status: Status,
    pub counterexample: Option<String>,
}

/// For `λ = μ_1 + ⋯ + μ_m` with `(ℓ, λ), (p_j, μ_j) ∈ Γ` and
/// `λ(h_i)/ℓ ≥ Σ_j μ_j(h_i)/p_j` at every node, checks that
/// `dim D(ℓ, λ) ≥ ∏ dim D(p_j, μ_j)`, with equality when every `p_j = ℓ`.
pub fn fusion_surjection_check(
    rs: &RootSystem,
    level: u64,
    lambda: &Weight,
    parts: &[(u64, Weight)],
    source: &impl KrDimensions,
) -> Result<SurjectionReport> {
    gamma_membership(rs, level, lambda)?;
    let mut total = Weight::zero(rs.rank());
    for (p, mu) in parts {
        gamma_membership(rs, *p, mu)?;
        total = &total + mu;
    }
    if &total != lambda {
        return Err(Error::Precondition(format!("the parts sum to {total}, not {lambda}")));
    }
    for i in 0..rs.rank() {
        let lhs = Ratio::new(BigInt::from(lambda.0[i]), BigInt::from(level));
        let rhs: Ratio<BigInt> = parts
            .iter()
            .map(|(p, mu)| Ratio::new(BigInt::from(mu.0[i]), BigInt::from(*p)))
            .sum();
        if lhs < rhs {
            return Err(Error::Precondition(format!(
                "lambda(h_{0})/l = {lhs} < sum of mu_j(h_{0})/p_j = {rhs}",
                i + 1
            )));
        }
    }

    let dim_source = demazure_dim_with(rs, level, lambda, source)?;
    let mut dim_target = BigUint::one();
    for (p, mu) in parts {
        dim_target *= demazure_dim_with(rs, *p, mu, source)?;
    }
    let equal_levels = parts.iter().all(|(p, _)| *p == level);
    let ok = if equal_levels { dim_source == dim_target } else { dim_source >= dim_target };
    let counterexample = (!ok).then(|| {
        let rel = if equal_levels { "!=" } else { "<" };
        format!("dim D({level}, {lambda}) = {dim_source} {rel} {dim_target}")
    });
    Ok(SurjectionReport {
        level,
        lambda: lambda.clone(),
        parts: parts.to_vec(),
        equal_levels,
        dim_source,
        dim_target,
        status: Status::from_bool(ok),
        counterexample,
    })
}
