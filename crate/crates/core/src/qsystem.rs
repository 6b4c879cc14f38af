//! The Q-system
//!
//! `Q_m^{(i)}² = Q_{m+1}^{(i)} Q_{m−1}^{(i)} + ∏_{j∼i} ∏_{k=0}^{|C_ij|−1} Q^{(j)}_{⌈(m|C_ji| − k)/|C_ij|⌉}`
//!
//! solved in the character ring from `Q_0 = 1` and user-supplied `Q_1`.
//! Entries are the characters of Kirillov–Reshetikhin modules `KR(mω_i)`
//! whenever the initial data are.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::characters::{character_of_sum, decompose_character, LaurentCharacter};
use crate::error::{Error, Result};
use crate::report::Status;
use crate::root_system::{Family, RootSystem, Weight};

/// `Q_1^{(i)}` for every node, each given as `Σ mult · ch V(weight)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InitialData {
    pub decompositions: Vec<Vec<(Weight, BigInt)>>,
    pub characters: Vec<LaurentCharacter>,
}

impl InitialData {
    pub fn from_decompositions(rs: &RootSystem, decompositions: Vec<Vec<(Weight, BigInt)>>) -> Result<Self> {
        if decompositions.len() != rs.rank() {
            return Err(Error::InitialData(format!(
                "expected data for {} nodes, got {}",
                rs.rank(),
                decompositions.len()
            )));
        }
        let characters = decompositions
            .iter()
            .map(|parts| character_of_sum(rs, parts))
            .collect::<Result<Vec<_>>>()?;
        Ok(InitialData {
            decompositions,
            characters,
        })
    }

    /// `Q_1^{(i)} = ch V(ω_i)`, valid in type A where `KR(ω_i)` is irreducible.
    pub fn type_a_default(rs: &RootSystem) -> Result<Self> {
        if rs.lie_type().family() != Family::A {
            return Err(Error::InitialData(format!(
                "no built-in initial data for type {}; supply Q_1 explicitly",
                rs.lie_type()
            )));
        }
        let n = rs.rank();
        let decompositions = (0..n).map(|i| vec![(Weight::fundamental(n, i, 1), BigInt::from(1))]).collect();
        Self::from_decompositions(rs, decompositions)
    }

    /// Parses `{"1": [[[1,0], 1]], "2": [[[0,1], 1]]}`: keys are 1-based
    /// nodes, values list `[weight, multiplicity]` pairs.
    pub fn from_json(rs: &RootSystem, text: &str) -> Result<Self> {
        let raw: BTreeMap<String, Vec<(Vec<i64>, i64)>> =
            serde_json::from_str(text).map_err(|e| Error::InitialData(e.to_string()))?;
        let n = rs.rank();
        let mut per_node: Vec<Option<Vec<(Weight, BigInt)>>> = vec![None; n];
        for (key, parts) in raw {
            let node: usize = key
                .trim()
                .parse()
                .ok()
                .filter(|&k| (1..=n).contains(&k))
                .ok_or_else(|| Error::InitialData(format!("node key `{key}` is not in 1..={n}")))?;
            let mut out = Vec::with_capacity(parts.len());
            for (coords, mult) in parts {
                let w = Weight(coords);
                rs.check_dominant(&w).map_err(|e| Error::InitialData(format!("node {node}: {e}")))?;
                out.push((w, BigInt::from(mult)));
            }
            per_node[node - 1] = Some(out);
        }
        let decompositions = per_node
            .into_iter()
            .enumerate()
            .map(|(i, p)| p.ok_or_else(|| Error::InitialData(format!("missing node {}", i + 1))))
            .collect::<Result<Vec<_>>>()?;
        Self::from_decompositions(rs, decompositions)
    }
}

/// `⌈(m·|C_ji| − k) / |C_ij|⌉`.
pub fn kr_index(c_ij: i64, c_ji: i64, m: u64, k: u64) -> u64 {
    let num = m as i64 * c_ji.abs() - k as i64;
    let v = Integer::div_ceil(&num, &c_ij.abs());
    debug_assert!(v >= 0);
    v as u64
}

/// The factors `(j, index)` of `∏_{j∼i} ∏_k Q^{(j)}_{index}` at step `m`.
pub fn neighbor_factors(rs: &RootSystem, i: usize, m: u64) -> Vec<(usize, u64)> {
    let c = rs.cartan();
    let mut out = Vec::new();
    for j in rs.neighbors(i) {
        for k in 0..c[i][j].unsigned_abs() {
            out.push((j, kr_index(c[i][j], c[j][i], m, k)));
        }
    }
    out
}

#[derive(Debug, Clone)]
pub struct QSystemTable {
    rs: RootSystem,
    entries: BTreeMap<(usize, u64), LaurentCharacter>,
}

impl QSystemTable {
    /// Table holding `Q_0^{(i)} = 1` and the given `Q_1^{(i)}`.
    pub fn new(rs: &RootSystem, initial: &InitialData) -> Result<Self> {
        if initial.characters.len() != rs.rank() {
            return Err(Error::InitialData(format!(
                "expected data for {} nodes, got {}",
                rs.rank(),
                initial.characters.len()
            )));
        }
        let mut entries = BTreeMap::new();
        for (i, q1) in initial.characters.iter().enumerate() {
            if q1.rank() != rs.rank() {
                return Err(Error::RankMismatch {
                    expected: rs.rank(),
                    got: q1.rank(),
                });
            }
            if q1.is_zero() {
                return Err(Error::InitialData(format!("Q_1 at node {} is zero", i + 1)));
            }
            entries.insert((i, 0), LaurentCharacter::one(rs.rank()));
            entries.insert((i, 1), q1.clone());
        }
        Ok(QSystemTable { rs: rs.clone(), entries })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn get(&self, i: usize, m: u64) -> Result<&LaurentCharacter> {
        self.entries.get(&(i, m)).ok_or(Error::MissingEntry { node: i, m })
    }

    pub fn contains(&self, i: usize, m: u64) -> bool {
        self.entries.contains_key(&(i, m))
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, u64), &LaurentCharacter)> {
        self.entries.iter().map(|(&k, v)| (k, v))
    }

    /// Largest `m` stored at node `i`.
    pub fn max_filled(&self, i: usize) -> u64 {
        self.entries.range((i, 0)..=(i, u64::MAX)).next_back().map_or(0, |(&(_, m), _)| m)
    }

    /// Computes `Q_m^{(i)}` and everything it depends on.
    pub fn ensure(&mut self, i: usize, m: u64) -> Result<&LaurentCharacter> {
        if i >= self.rs.rank() {
            return Err(Error::Precondition(format!("node {} out of range", i + 1)));
        }
        if !self.contains(i, m) {
            for step in self.max_filled(i)..m {
                for (j, idx) in neighbor_factors(&self.rs, i, step) {
                    self.ensure(j, idx)?;
                }
                let next = qsystem_step(self, i, step)?;
                self.entries.insert((i, step + 1), next);
            }
        }
        self.get(i, m)
    }

    /// `Q_m² − Q_{m+1} Q_{m−1} − ∏ Q^{(j)}`; zero when the recursion holds.
    pub fn recursion_residual(&self, i: usize, m: u64) -> Result<LaurentCharacter> {
        if m == 0 {
            return Err(Error::Precondition("the recursion starts at m = 1".into()));
        }
        let qm = self.get(i, m)?;
        let lhs = qm.multiply(qm)?;
        let rhs = self.get(i, m + 1)?.multiply(self.get(i, m - 1)?)?;
        lhs.sub(&rhs)?.sub(&self.neighbor_product(i, m)?)
    }

    fn neighbor_product(&self, i: usize, m: u64) -> Result<LaurentCharacter> {
        let mut prod = LaurentCharacter::one(self.rs.rank());
        for (j, idx) in neighbor_factors(&self.rs, i, m) {
            prod = prod.multiply(self.get(j, idx)?)?;
        }
        Ok(prod)
    }

    /// Decomposition of `Q_m^{(i)}` into irreducible characters.
    pub fn decompose(&self, i: usize, m: u64) -> Result<Vec<(Weight, BigInt)>> {
        decompose_character(&self.rs, self.get(i, m)?)
    }
}

/// `Q_{m+1}^{(i)} = (Q_m² − ∏_{j∼i} ∏_k Q^{(j)}) / Q_{m−1}`.
///
/// All entries on the right must already be in the table.
pub fn qsystem_step(table: &QSystemTable, i: usize, m: u64) -> Result<LaurentCharacter> {
    if m == 0 {
        return Err(Error::Precondition(
            "cannot step from m = 0; Q_1 is initial data".into(),
        ));
    }
    let qm = table.get(i, m)?;
    let prev = table.get(i, m - 1)?;
    let numerator = qm.multiply(qm)?.sub(&table.neighbor_product(i, m)?)?;
    numerator.exact_div(prev).map_err(|e| match e {
        Error::InexactPolynomialDivision => Error::InexactDivision { node: i, m },
        other => other,
    })
}

/// Fills `Q_m^{(i)}` for all nodes and `m ≤ m_max`.
pub fn qsystem_solve(rs: &RootSystem, initial: &InitialData, m_max: u64) -> Result<QSystemTable> {
    if m_max == 0 {
        return Err(Error::Precondition("m_max must be at least 1".into()));
    }
    let mut table = QSystemTable::new(rs, initial)?;
    for i in 0..rs.rank() {
        table.ensure(i, m_max)?;
    }
    Ok(table)
}

/// The kernel `K_{i, d_i m}` as a tensor product of KR modules, and the
/// weight `λ` with `K ≅ D(m, λ)` after fusion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelSpec {
    pub node: usize,
    pub m: u64,
    /// `(j, level)` for each factor `KR(level·ω_j)`, sorted.
    pub factors: Vec<(usize, u64)>,
    pub lambda: Weight,
}

/// `K_{i, d_i m}` by cases on `d_i`:
///
/// - `d_i = 1`: `⊗_{j∼i} KR(d_j m ω_j)`;
/// - `d_i = 2`: `KR(2m ω_j)` for neighbours with `d_j = 2`, `KR(m ω_j)^{⊗2}`
///   for neighbours with `d_j = 1`;
/// - `d_i = 3`: `KR(m ω_j)^{⊗3}`.
pub fn kernel_spec(rs: &RootSystem, i: usize, m: u64) -> Result<KernelSpec> {
    if i >= rs.rank() {
        return Err(Error::Precondition(format!("node {} out of range", i + 1)));
    }
    if m == 0 {
        return Err(Error::Precondition("m must be at least 1".into()));
    }
    let n = rs.rank();
    let mut factors = Vec::new();
    let mut lambda = Weight::zero(n);
    for j in rs.neighbors(i) {
        let dj = rs.d(j) as u64;
        let (level, copies, coeff) = match (rs.d(i), dj) {
            (1, _) => (dj * m, 1, dj * m),
            (2, 2) => (dj * m, 1, dj * m),
            (2, 1) => (dj * m, 2, 2 * dj * m),
            (3, _) => (m, 3, 3 * m),
            (di, dj) => unreachable!("no simple Lie algebra has adjacent d = {di}, {dj}"),
        };
        factors.extend(std::iter::repeat_n((j, level), copies));
        lambda.0[j] += coeff as i64;
    }
    factors.sort();
    Ok(KernelSpec {
        node: i,
        m,
        factors,
        lambda,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionReport {
    pub node: usize,
    pub m: u64,
    /// `d_i m`.
    pub level: u64,
    /// `dim KR(d_i m ω_i)²`.
    pub square: BigInt,
    /// `dim K_{i, d_i m}`.
    pub kernel: BigInt,
    /// `dim KR((d_i m + 1) ω_i) · dim KR((d_i m − 1) ω_i)`.
    pub neighbors: BigInt,
    pub balanced: bool,
    pub status: Status,
}

/// Checks `dim KR(Mω_i)² = dim K_{i,M} + dim KR((M+1)ω_i) dim KR((M−1)ω_i)`
/// with `M = d_i m`, reading KR dimensions from the table and the kernel from
/// [`kernel_spec`]. A nonpositive kernel or neighbour dimension means the
/// initial data are not KR characters and fails the check. Exceptional types
/// are reported as experimental.
pub fn verify_dimension_identity(table: &QSystemTable, i: usize, m: u64) -> Result<DimensionReport> {
    let rs = table.root_system();
    let spec = kernel_spec(rs, i, m)?;
    let level = rs.d(i) as u64 * m;
    let dim = |j: usize, k: u64| table.get(j, k).map(LaurentCharacter::dimension);
    let q = dim(i, level)?;
    let square = &q * &q;
    let neighbors = dim(i, level + 1)? * dim(i, level - 1)?;
    let mut kernel = BigInt::from(1);
    for &(j, k) in &spec.factors {
        kernel *= dim(j, k)?;
    }
    let balanced = square == &kernel + &neighbors;
    let status = if rs.lie_type().is_exceptional() {
        Status::Experimental
    } else {
        Status::from_bool(balanced && kernel.is_positive() && neighbors.is_positive())
    };
    Ok(DimensionReport {
        node: i,
        m,
        level,
        square,
        kernel,
        neighbors,
        balanced,
        status,
    })
}
