//! Partitions attached to positive roots and the composition sets `S(r, s)`.
//!
//! `S(r, s)` is the set of vectors `(b_0, b_1, ...)` of nonnegative integers
//! with `Σ b_p = r` and `Σ p·b_p = s`. Elements are stored densely with
//! length `s + 1` (entries beyond index `s` are necessarily zero).

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::report::Status;
use crate::root_system::{Root, RootSystem, Weight};

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct Partition(Vec<u64>);

impl Partition {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// The partition associated to an arbitrary tuple: zeros dropped, parts
    /// sorted in decreasing order.
    pub fn from_tuple(parts: &[i64]) -> Result<Self> {
        if let Some(p) = parts.iter().find(|&&p| p < 0) {
            return Err(Error::InvalidPartition(format!("negative part {p}")));
        }
        let mut v: Vec<u64> = parts.iter().filter(|&&p| p > 0).map(|&p| p as u64).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(v))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(part^count)`.
    pub fn rectangle(part: u64, count: usize) -> Self {
        if part == 0 {
            return Partition::empty();
        }
        Partition(vec![part; count])
    }

    pub fn parts(&self) -> &[u64] {
        &self.0
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|ξ|`.
    pub fn size(&self) -> u64 {
        self.0.iter().sum()
    }

    /// `ξ_j` with 1-based `j`; zero beyond the last part.
    pub fn part(&self, j: usize) -> u64 {
        if j == 0 {
            return 0;
        }
        self.0.get(j - 1).copied().unwrap_or(0)
    }

    /// `Σ_{j ≥ k+1} ξ_j`.
    pub fn tail_sum(&self, k: usize) -> u64 {
        self.0.iter().skip(k).sum()
    }

    /// Right-hand side `1 + rk + Σ_{j≥k+1} ξ_j` of the defining relations of
    /// `V(ξ)`.
    pub fn relation_bound(&self, r: u64, k: u64) -> u64 {
        1 + r * k + self.tail_sum(k as usize)
    }

    /// Whether `(x⁺⊗t)^s (x⁻⊗1)^{s+r}` annihilates the generator, i.e.
    /// `s + r ≥ 1 + rk + Σ_{j≥k+1} ξ_j` for some `k ≥ 1`.
    pub fn imposes_relation(&self, r: u64, s: u64) -> bool {
        if r == 0 || s == 0 {
            return false;
        }
        // beyond k = len the bound only grows with k
        (1..=self.len() as u64 + 1).any(|k| s + r >= self.relation_bound(r, k))
    }

    pub fn shape(&self) -> Shape {
        classify_shape(self)
    }
}

impl TryFrom<Vec<u64>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u64>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u64> {
    fn from(p: Partition) -> Vec<u64> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum Shape {
    Empty,
    /// `(part^count)`.
    Rectangular { part: u64, count: usize },
    /// `(k1^s1, k2)` with `k1 > k2 ≥ 1`.
    SpecialFatHook { k1: u64, s1: usize, k2: u64 },
    Other,
}

impl Shape {
    /// Rectangular (the empty partition included) or a special fat hook.
    pub fn is_rectangular_or_special_fat_hook(&self) -> bool {
        !matches!(self, Shape::Other)
    }
}

pub fn classify_shape(xi: &Partition) -> Shape {
    let parts = xi.parts();
    let Some(&first) = parts.first() else {
        return Shape::Empty;
    };
    let s1 = parts.iter().take_while(|&&p| p == first).count();
    if s1 == parts.len() {
        return Shape::Rectangular {
            part: first,
            count: s1,
        };
    }
    if s1 + 1 == parts.len() {
        return Shape::SpecialFatHook {
            k1: first,
            s1,
            k2: parts[s1],
        };
    }
    Shape::Other
}

/// A `λ`-compatible tuple: one partition per positive root, with
/// `|ξ^α| = λ(h_α)`. `assignment[a]` belongs to `rs.positive_roots()[a]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompatibleTuple {
    pub lambda: Weight,
    pub assignment: Vec<Partition>,
}

impl CompatibleTuple {
    pub fn get<'a>(&'a self, rs: &RootSystem, alpha: &Root) -> Option<&'a Partition> {
        rs.index_of(&alpha.coords).map(|a| &self.assignment[a])
    }

    pub fn shapes(&self) -> Vec<Shape> {
        self.assignment.iter().map(classify_shape).collect()
    }
}

fn check_nonzero_dominant(rs: &RootSystem, lambda: &Weight) -> Result<()> {
    rs.check_dominant(lambda)?;
    if lambda.is_zero() {
        return Err(Error::Precondition("lambda must be nonzero".into()));
    }
    Ok(())
}

pub fn validate_tuple(rs: &RootSystem, lambda: &Weight, assignment: Vec<Partition>) -> Result<CompatibleTuple> {
    check_nonzero_dominant(rs, lambda)?;
    if assignment.len() != rs.positive_roots().len() {
        return Err(Error::Precondition(format!(
            "expected {} partitions (one per positive root), got {}",
            rs.positive_roots().len(),
            assignment.len()
        )));
    }
    for (a, (alpha, xi)) in rs.positive_roots().iter().zip(&assignment).enumerate() {
        let expected = rs.pairing(lambda, a);
        if xi.size() as i64 != expected {
            return Err(Error::SizeMismatch {
                root: alpha.to_string(),
                expected,
                got: xi.size(),
            });
        }
    }
    Ok(CompatibleTuple {
        lambda: lambda.clone(),
        assignment,
    })
}

/// The canonical tuple `ξ(ℓ, λ)`: write `λ(h_α) = (s_α − 1) d_α ℓ + m_α`
/// with `0 < m_α ≤ d_α ℓ` and take `ξ^α = ((d_α ℓ)^{s_α − 1}, m_α)`.
pub fn xi_of_level(rs: &RootSystem, level: u64, lambda: &Weight) -> Result<CompatibleTuple> {
    if level == 0 {
        return Err(Error::Precondition("level must be positive".into()));
    }
    check_nonzero_dominant(rs, lambda)?;
    let assignment = rs
        .positive_roots()
        .iter()
        .enumerate()
        .map(|(a, alpha)| {
            let v = rs.pairing(lambda, a) as u64;
            if v == 0 {
                return Partition::empty();
            }
            let block = alpha.d_alpha as u64 * level;
            let s_alpha = v.div_ceil(block);
            let m_alpha = v - (s_alpha - 1) * block;
            let mut parts = vec![block; (s_alpha - 1) as usize];
            parts.push(m_alpha);
            Partition(parts)
        })
        .collect();
    validate_tuple(rs, lambda, assignment)
}

/// A set `S(r, s)` (or one of its restricted variants).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompositionSet {
    pub r: u64,
    pub s: u64,
    pub elements: Vec<Vec<u64>>,
}

impl CompositionSet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Vectors of length `s + 1` supported on indices `lo ≤ p < hi`.
fn enumerate_supported(r: u64, s: u64, lo: u64, hi: u64) -> CompositionSet {
    let hi = hi.min(s + 1);
    let mut elements = Vec::new();
    let mut current = vec![0u64; s as usize + 1];

    fn descend(p: u64, lo: u64, r: u64, s: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if p == lo {
            // last free index takes what is left
            if s == p * r {
                cur[p as usize] = r;
                out.push(cur.clone());
                cur[p as usize] = 0;
            }
            return;
        }
        let max = s.checked_div(p).map_or(r, |q| r.min(q));
        for b in 0..=max {
            cur[p as usize] = b;
            descend(p - 1, lo, r - b, s - p * b, cur, out);
        }
        cur[p as usize] = 0;
    }

    if lo >= hi {
        if r == 0 && s == 0 {
            elements.push(current);
        }
    } else {
        descend(hi - 1, lo, r, s, &mut current, &mut elements);
    }
    elements.sort();
    CompositionSet { r, s, elements }
}

/// `S(r, s)`.
pub fn enumerate_s(r: u64, s: u64) -> CompositionSet {
    enumerate_supported(r, s, 0, s + 1)
}

/// `S(r, s)_k`: elements with `b_p = 0` for `p ≥ k`.
pub fn enumerate_s_below(r: u64, s: u64, k: u64) -> CompositionSet {
    enumerate_supported(r, s, 0, k)
}

/// `_kS(r, s)`: elements with `b_p = 0` for `p < k`.
pub fn enumerate_s_above(r: u64, s: u64, k: u64) -> CompositionSet {
    enumerate_supported(r, s, k, s + 1)
}

/// `(b_0, …, b_{k−1}, c_k, c_{k+1}, …)`, padded to length `len`.
pub fn splice(prefix: &[u64], suffix: &[u64], k: u64, len: usize) -> Vec<u64> {
    let k = k as usize;
    (0..len)
        .map(|p| {
            if p < k {
                prefix.get(p).copied().unwrap_or(0)
            } else {
                suffix.get(p).copied().unwrap_or(0)
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitPiece {
    pub r_prime: u64,
    pub s_prime: u64,
    pub prefix_count: usize,
    pub suffix_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitReport {
    pub r: u64,
    pub s: u64,
    pub k: u64,
    pub total: usize,
    pub above_count: usize,
    pub pieces: Vec<SplitPiece>,
    pub status: Status,
    pub counterexample: Option<String>,
}

/// The pieces `(r', s')` with `r' < r` for which both `S(r−r', s−s')_k` and
/// `_kS(r', s')` are nonempty.
fn split_pieces(r: u64, s: u64, k: u64) -> Vec<(u64, u64, CompositionSet, CompositionSet)> {
    let mut out = Vec::new();
    for rp in 0..r {
        for sp in 0..=s {
            let prefix = enumerate_s_below(r - rp, s - sp, k);
            if prefix.is_empty() {
                continue;
            }
            let suffix = enumerate_s_above(rp, sp, k);
            if suffix.is_empty() {
                continue;
            }
            out.push((rp, sp, prefix, suffix));
        }
    }
    out
}

/// Checks `S(r,s) = _kS(r,s) ⊔ ⨆_{r'<r} S(r−r', s−s')_k × _kS(r', s')`.
///
/// The piece `(r', s') = (r, s)` would repeat `_kS(r, s)` and is excluded.
pub fn verify_split_identity(r: u64, s: u64, k: u64) -> SplitReport {
    let lhs = enumerate_s(r, s);
    let above = enumerate_s_above(r, s, k);
    let len = s as usize + 1;

    let mut seen: BTreeMap<Vec<u64>, usize> = BTreeMap::new();
    for e in &above.elements {
        *seen.entry(e.clone()).or_default() += 1;
    }
    let mut pieces = Vec::new();
    for (rp, sp, prefix, suffix) in split_pieces(r, s, k) {
        for b in &prefix.elements {
            for c in &suffix.elements {
                *seen.entry(splice(b, c, k, len)).or_default() += 1;
            }
        }
        pieces.push(SplitPiece {
            r_prime: rp,
            s_prime: sp,
            prefix_count: prefix.len(),
            suffix_count: suffix.len(),
        });
    }

    let mut counterexample = None;
    if let Some((v, n)) = seen.iter().find(|(_, &n)| n > 1) {
        counterexample = Some(format!("{v:?} appears {n} times on the right-hand side"));
    } else if let Some(v) = seen.keys().find(|v| lhs.elements.binary_search(v).is_err()) {
        counterexample = Some(format!("{v:?} is not in S({r},{s})"));
    } else if let Some(v) = lhs.elements.iter().find(|v| !seen.contains_key(*v)) {
        counterexample = Some(format!("{v:?} is missing from the right-hand side"));
    }

    SplitReport {
        r,
        s,
        k,
        total: lhs.len(),
        above_count: above.len(),
        pieces,
        status: Status::from_bool(counterexample.is_none()),
        counterexample,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RearrangeReport {
    pub r: u64,
    pub s: u64,
    pub k: u64,
    pub bound: u64,
    pub pieces_checked: usize,
    pub status: Status,
    pub counterexample: Option<String>,
}

/// For `s + r ≥ kr + K`, checks that every piece `(r', s')` with nonempty
/// prefix satisfies `s − s' ≤ (k−1)(r − r')` and `s' + r' ≥ kr' + K`.
pub fn verify_rearrange_constraint(r: u64, s: u64, k: u64, bound: u64) -> Result<RearrangeReport> {
    if s + r < k * r + bound {
        return Err(Error::Precondition(format!(
            "s + r = {} < kr + K = {}",
            s + r,
            k * r + bound
        )));
    }
    let (ri, si, ki, bi) = (r as i64, s as i64, k as i64, bound as i64);
    let mut counterexample = None;
    let mut checked = 0;
    for (rp, sp, _, _) in split_pieces(r, s, k) {
        checked += 1;
        let (rp, sp) = (rp as i64, sp as i64);
        if si - sp > (ki - 1) * (ri - rp) {
            counterexample = Some(format!("(r',s') = ({rp},{sp}): s-s' = {} > (k-1)(r-r') = {}", si - sp, (ki - 1) * (ri - rp)));
            break;
        }
        if sp + rp < ki * rp + bi {
            counterexample = Some(format!("(r',s') = ({rp},{sp}): s'+r' = {} < kr'+K = {}", sp + rp, ki * rp + bi));
            break;
        }
    }
    Ok(RearrangeReport {
        r,
        s,
        k,
        bound,
        pieces_checked: checked,
        status: Status::from_bool(counterexample.is_none()),
        counterexample,
    })
}
