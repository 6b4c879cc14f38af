//! Fusion products `V(ξ)` for `sl_2[t]`: the partitions `ξ±`, the monomial
//! index set `𝕀(ξ)` and bigraded characters.
//!
//! A vector `(i_1, …, i_ℓ)` in `𝕀(ξ)` labels the monomial
//! `(x⁻⊗1)^{i_1} ⋯ (x⁻⊗t^{ℓ−1})^{i_ℓ} v_ξ`, of weight `|ξ| − 2Σ i_p` and grade
//! `Σ (p−1) i_p`.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::{BigInt, BigUint};
use serde::{Deserialize, Serialize};

use crate::characters::{irreducible_character, LaurentCharacter};
use crate::partitions::Partition;
use crate::root_system::{LieType, RootSystem, Weight};

pub type IndexVector = Vec<u64>;

/// `ξ⁻`: drop `ξ_ℓ` and replace `ξ_{ℓ−1}` by `ξ_{ℓ−1} − ξ_ℓ`.
pub fn xi_minus(xi: &Partition) -> Partition {
    let l = xi.len();
    if l <= 1 {
        return Partition::empty();
    }
    let mut parts: Vec<i64> = xi.parts()[..l - 1].iter().map(|&p| p as i64).collect();
    parts[l - 2] -= xi.part(l) as i64;
    Partition::from_tuple(&parts).expect("parts stay nonnegative")
}

/// The smallest `0 ≤ m ≤ ℓ−2` with `ξ_{m+1} = ξ_{ℓ−1}`; `None` when `ℓ < 2`.
pub fn ell_of_xi(xi: &Partition) -> Option<usize> {
    let l = xi.len();
    if l < 2 {
        return None;
    }
    let target = xi.part(l - 1);
    (0..=l - 2).find(|&m| xi.part(m + 1) == target)
}

/// `ξ⁺`: the partition of `(ξ_1, …, ξ_{ℓ−2}, ξ_{ℓ−1}+1, ξ_ℓ−1)`.
pub fn xi_plus(xi: &Partition) -> Partition {
    let l = xi.len();
    let Some(m) = ell_of_xi(xi) else {
        return xi.clone();
    };
    let parts: Vec<i64> = (1..=l)
        .map(|j| {
            let v = if j <= m {
                xi.part(j)
            } else if j == m + 1 {
                xi.part(l - 1) + 1
            } else if j < l {
                xi.part(l - 1)
            } else {
                xi.part(l) - 1
            };
            v as i64
        })
        .collect();
    Partition::from_tuple(&parts).expect("parts stay nonnegative")
}

/// Checks the tail sums `Σ_{j≥k+1} ξ⁺_j` against `Σ_{j≥k+1} ξ_j` for
/// `0 ≤ k ≤ ℓ+1`: equal for `k ≤ ℓ(ξ)` or `k ≥ ℓ`, one less in between.
pub fn check_tail_relation(xi: &Partition) -> Result<(), String> {
    let Some(m) = ell_of_xi(xi) else {
        return Ok(());
    };
    let l = xi.len();
    let plus = xi_plus(xi);
    for k in 0..=l + 1 {
        let lhs = plus.tail_sum(k) as i64;
        let base = xi.tail_sum(k) as i64;
        let expected = if k <= m || k >= l { base } else { base - 1 };
        if lhs != expected {
            return Err(format!("xi = {xi}, xi+ = {plus}, k = {k}: tail sum {lhs}, expected {expected}"));
        }
    }
    Ok(())
}

/// Membership in `𝕀(ξ)`: for `2 ≤ k ≤ ℓ+1`, `1 ≤ j ≤ k−1`,
/// `j·i_{k−1} + (j+1)·i_k + 2Σ_{p>k} i_p ≤ Σ_{p≥k−j} ξ_p` with `i_{ℓ+1} = 0`.
pub fn in_index_set(xi: &Partition, i: &[u64]) -> bool {
    let l = xi.len();
    i.len() == l && (2..=l + 1).all(|k| constraints_hold_at(xi, i, k))
}

fn constraints_hold_at(xi: &Partition, i: &[u64], k: usize) -> bool {
    let l = xi.len();
    let at = |p: usize| if p >= 1 && p <= l { i[p - 1] } else { 0 };
    let tail: u64 = (k + 1..=l).map(at).sum();
    (1..k).all(|j| j as u64 * at(k - 1) + (j as u64 + 1) * at(k) + 2 * tail <= xi.tail_sum(k - j - 1))
}

/// All of `𝕀(ξ)` in lexicographic order.
pub fn enumerate_index_set(xi: &Partition) -> Vec<IndexVector> {
    let l = xi.len();
    let mut out = Vec::new();
    let mut cur = vec![0u64; l];

    // fill i_p for p = l, l-1, ..., 1; once i_{k-1} is known every
    // constraint at k can be tested
    fn descend(xi: &Partition, p: usize, cur: &mut Vec<u64>, out: &mut Vec<IndexVector>) {
        if p == 0 {
            out.push(cur.clone());
            return;
        }
        for v in 0..=xi.tail_sum(p - 1) {
            cur[p - 1] = v;
            if constraints_hold_at(xi, cur, p + 1) {
                descend(xi, p - 1, cur, out);
            }
        }
        cur[p - 1] = 0;
    }

    descend(xi, l, &mut cur, &mut out);
    out.sort();
    out
}

fn padded(v: &[u64], len: usize) -> IndexVector {
    let mut w = v.to_vec();
    w.resize(len, 0);
    w
}

/// `(𝕀(ξ⁻; ξ_ℓ), 𝕀(ξ⁺))` as vectors of length `ℓ`. Shorter index vectors are
/// padded with zeros; a zero part forces the matching index to vanish, so
/// padding does not change the sets.
pub fn split_index_set(xi: &Partition) -> (Vec<IndexVector>, Vec<IndexVector>) {
    let l = xi.len();
    let last = xi.part(l);
    let minus = enumerate_index_set(&xi_minus(xi))
        .into_iter()
        .map(|v| {
            let mut w = padded(&v, l.saturating_sub(1));
            w.push(last);
            w
        })
        .collect();
    let plus = enumerate_index_set(&xi_plus(xi)).into_iter().map(|v| padded(&v, l)).collect();
    (minus, plus)
}

/// Checks `𝕀(ξ) = 𝕀(ξ⁻; ξ_ℓ) ⊔ 𝕀(ξ⁺)` with `i_ℓ < ξ_ℓ` on the second piece.
pub fn check_split(xi: &Partition) -> Result<(usize, usize), String> {
    let full: BTreeSet<IndexVector> = enumerate_index_set(xi).into_iter().collect();
    let (minus, plus) = split_index_set(xi);
    let l = xi.len();
    let mut union = BTreeSet::new();
    for v in minus.iter().chain(&plus) {
        if !union.insert(v.clone()) {
            return Err(format!("xi = {xi}: {v:?} lies in both pieces"));
        }
    }
    if let Some(v) = plus.iter().find(|v| v[l - 1] >= xi.part(l)) {
        return Err(format!("xi = {xi}: {v:?} in I(xi+) has i_l >= xi_l"));
    }
    if let Some(v) = union.symmetric_difference(&full).next() {
        return Err(format!("xi = {xi}: {v:?} is in exactly one of I(xi) and the split"));
    }
    Ok((minus.len(), plus.len()))
}

/// `∏ (ξ_s + 1)`.
pub fn fusion_dim(xi: &Partition) -> BigUint {
    xi.parts().iter().map(|&p| BigUint::from(p + 1)).product()
}

/// A polynomial in one weight variable `x` and one grade variable `q`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "Vec<(i64, u64, u64)>", into = "Vec<(i64, u64, u64)>")]
pub struct BigradedCharacter {
    terms: BTreeMap<(i64, u64), u64>,
}

impl BigradedCharacter {
    pub fn new() -> Self {
        Self::default()
    }

    /// Unit mass at weight 0, grade 0.
    pub fn unit() -> Self {
        let mut c = Self::new();
        c.add_mass(0, 0, 1);
        c
    }

    /// `ev_0 V(r)`.
    pub fn evaluation(r: u64) -> Self {
        let mut c = Self::new();
        for i in 0..=r {
            c.add_mass(r as i64 - 2 * i as i64, 0, 1);
        }
        c
    }

    pub fn add_mass(&mut self, weight: i64, grade: u64, mass: u64) {
        if mass > 0 {
            *self.terms.entry((weight, grade)).or_default() += mass;
        }
    }

    pub fn mass(&self, weight: i64, grade: u64) -> u64 {
        self.terms.get(&(weight, grade)).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, u64, u64)> + '_ {
        self.terms.iter().map(|(&(w, g), &m)| (w, g, m))
    }

    pub fn total_mass(&self) -> u64 {
        self.terms.values().sum()
    }

    /// `τ_r`: raise every grade by `r`.
    pub fn shift_grade(&self, r: u64) -> Self {
        BigradedCharacter {
            terms: self.terms.iter().map(|(&(w, g), &m)| ((w, g + r), m)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, g, m) in other.terms() {
            out.add_mass(w, g, m);
        }
        out
    }

    /// Set `q = 1`, giving an `sl_2` character.
    pub fn specialize(&self) -> LaurentCharacter {
        let mut c = LaurentCharacter::zero(1);
        for (w, _, m) in self.terms() {
            c.add_term(Weight(vec![w]), BigInt::from(m));
        }
        c
    }

    /// Whether the `q = 1` specialisation is invariant under `x ↦ x⁻¹`.
    pub fn is_weight_symmetric(&self) -> bool {
        let c = self.specialize();
        let symmetric = c.terms().all(|(w, m)| &c.coefficient(&-w) == m);
        symmetric
    }
}

impl From<Vec<(i64, u64, u64)>> for BigradedCharacter {
    fn from(v: Vec<(i64, u64, u64)>) -> Self {
        let mut c = Self::new();
        for (w, g, m) in v {
            c.add_mass(w, g, m);
        }
        c
    }
}

impl From<BigradedCharacter> for Vec<(i64, u64, u64)> {
    fn from(c: BigradedCharacter) -> Self {
        c.terms().collect()
    }
}

/// Character read off the monomial basis indexed by `𝕀(ξ)`.
pub fn graded_character_basis(xi: &Partition) -> BigradedCharacter {
    let size = xi.size() as i64;
    let mut c = BigradedCharacter::new();
    for i in enumerate_index_set(xi) {
        let lowered: u64 = i.iter().sum();
        let grade: u64 = i.iter().enumerate().map(|(p, &v)| p as u64 * v).sum();
        c.add_mass(size - 2 * lowered as i64, grade, 1);
    }
    c
}

/// Character from the short exact sequence
/// `0 → τ_{(ℓ−1)ξ_ℓ} V(ξ⁻) → V(ξ) → V(ξ⁺) → 0`, with `ℓ ≤ 1` as base case.
pub fn graded_character_ses(xi: &Partition) -> BigradedCharacter {
    graded_character_ses_memo(xi, &mut HashMap::new())
}

fn graded_character_ses_memo(xi: &Partition, memo: &mut HashMap<Partition, BigradedCharacter>) -> BigradedCharacter {
    if let Some(c) = memo.get(xi) {
        return c.clone();
    }
    let l = xi.len();
    let c = match l {
        0 => BigradedCharacter::unit(),
        1 => BigradedCharacter::evaluation(xi.part(1)),
        _ => {
            let plus = graded_character_ses_memo(&xi_plus(xi), memo);
            let minus = graded_character_ses_memo(&xi_minus(xi), memo);
            plus.add(&minus.shift_grade((l as u64 - 1) * xi.part(l)))
        }
    };
    memo.insert(xi.clone(), c.clone());
    c
}

/// `∏_s ch V(ξ_s)` as an `sl_2` character.
pub fn product_of_evaluation_characters(xi: &Partition) -> LaurentCharacter {
    let rs = RootSystem::new(LieType::new(crate::root_system::Family::A, 1).expect("A1 is valid"));
    xi.parts().iter().fold(LaurentCharacter::one(1), |acc, &p| {
        let ch = irreducible_character(&rs, &Weight(vec![p as i64])).expect("dominant");
        acc.multiply(&ch).expect("rank 1")
    })
}

/// All partitions of `n`, parts in decreasing order, listed in reverse
/// lexicographic order.
pub fn partitions_of(n: u64) -> Vec<Partition> {
    fn go(n: u64, max: u64, cur: &mut Vec<u64>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition::new(cur.clone()).expect("decreasing"));
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            go(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}
