//! Root data for the simple Lie algebras.
//!
//! Cartan matrices follow Bourbaki numbering with `C[i][j] = 2(α_i, α_j)/(α_i, α_i)`,
//! which coincides with `d_i (α_i, α_j)` once the form is normalised so that
//! long roots have squared length 2 and `d_α = 2/(α, α)`. Weights are stored in
//! the fundamental-weight basis, roots in the simple-root basis.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn admissible(self) -> &'static str {
        match self {
            Family::A => ">= 1",
            Family::B | Family::C => ">= 2",
            Family::D => ">= 3",
            Family::E => "6, 7 or 8",
            Family::F => "4",
            Family::G => "2",
        }
    }

    fn accepts(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            _ => Err(Error::UnknownFamily(s.to_string())),
        }
    }
}

/// A Cartan type such as `A_3` or `G_2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LieType {
    family: Family,
    rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if !family.accepts(rank) {
            return Err(Error::InvalidRank {
                family: family.letter(),
                rank,
                admissible: family.admissible(),
            });
        }
        Ok(LieType { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }

    pub fn is_exceptional(&self) -> bool {
        matches!(self.family, Family::E | Family::F | Family::G)
    }

    /// Number of positive roots, from the classification.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }
}

impl FromStr for LieType {
    type Err = Error;

    /// Parses `A2`, `a_2`, `G2` and similar.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(|| Error::UnknownFamily(String::new()))?;
        let family: Family = letter.to_string().parse()?;
        let digits = chars.as_str().trim_start_matches('_');
        let rank = digits
            .parse::<usize>()
            .map_err(|_| Error::UnknownFamily(s.to_string()))?;
        LieType::new(family, rank)
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// An element of the weight lattice `P`, as coordinates `c_i` in
/// `λ = Σ c_i ω_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// `multiple · ω_node`.
    pub fn fundamental(rank: usize, node: usize, multiple: i64) -> Self {
        let mut c = vec![0; rank];
        c[node] = multiple;
        Weight(c)
    }

    /// `ρ = Σ ω_i`.
    pub fn rho(rank: usize) -> Self {
        Weight(vec![1; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), rhs.rank());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), rhs.rank());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl Mul<i64> for &Weight {
    type Output = Weight;
    fn mul(self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }
}

/// A positive root `α = Σ m_j α_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Root {
    pub coords: Vec<i64>,
    /// `2/(α, α)`; 1 for long roots.
    pub d_alpha: i64,
    pub height: i64,
}

impl Root {
    pub fn is_simple(&self) -> bool {
        self.height == 1
    }

    pub fn is_long(&self) -> bool {
        self.d_alpha == 1
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, &m) in self.coords.iter().enumerate() {
            if m == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            if m == 1 {
                write!(f, "a{}", j + 1)?;
            } else {
                write!(f, "{m}a{}", j + 1)?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    lie_type: LieType,
    cartan: Vec<Vec<i64>>,
    symmetrizers: Vec<i64>,
    positive_roots: Vec<Root>,
    /// `pairing_table[k][a] = ω_k(h_α)` for the `a`-th positive root.
    pairing_table: Vec<Vec<i64>>,
    root_index: HashMap<Vec<i64>, usize>,
    inverse_cartan: Vec<Vec<Rational64>>,
    /// `form_scale · (ω_i, ω_j)`, an integer matrix.
    weight_form: Vec<Vec<i64>>,
    form_scale: i64,
}

fn cartan_matrix(t: LieType) -> Vec<Vec<i64>> {
    let n = t.rank();
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize, cij: i64, cji: i64| {
        c[i][j] = cij;
        c[j][i] = cji;
    };
    match t.family() {
        Family::A => {
            for i in 0..n - 1 {
                link(i, i + 1, -1, -1);
            }
        }
        Family::B => {
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1);
            }
            // α_n short
            link(n - 2, n - 1, -1, -2);
        }
        Family::C => {
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1);
            }
            // α_n long
            link(n - 2, n - 1, -2, -1);
        }
        Family::D => {
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1);
            }
            link(n - 3, n - 1, -1, -1);
        }
        Family::E => {
            link(0, 2, -1, -1);
            link(1, 3, -1, -1);
            for i in 2..n - 1 {
                link(i, i + 1, -1, -1);
            }
        }
        Family::F => {
            link(0, 1, -1, -1);
            link(1, 2, -1, -2);
            link(2, 3, -1, -1);
        }
        Family::G => {
            // α_1 short
            link(0, 1, -3, -1);
        }
    }
    c
}

/// Solves `C[i][j] d_j = C[j][i] d_i` along the (connected) Dynkin diagram and
/// normalises so that the long simple roots get `d = 1`.
fn symmetrizers(cartan: &[Vec<i64>]) -> Vec<i64> {
    let n = cartan.len();
    let mut d: Vec<Option<Rational64>> = vec![None; n];
    d[0] = Some(Rational64::one());
    let mut stack = vec![0usize];
    while let Some(i) = stack.pop() {
        let di = d[i].unwrap();
        for j in 0..n {
            if j != i && cartan[i][j] != 0 && d[j].is_none() {
                d[j] = Some(di * Rational64::new(cartan[j][i], cartan[i][j]));
                stack.push(j);
            }
        }
    }
    let d: Vec<Rational64> = d.into_iter().map(|x| x.expect("Dynkin diagram is connected")).collect();
    let min = *d.iter().min().unwrap();
    d.iter()
        .map(|x| {
            let v = x / min;
            assert!(v.is_integer(), "non-integral symmetrizer");
            v.to_integer()
        })
        .collect()
}

fn invert(matrix: &[Vec<i64>]) -> Vec<Vec<Rational64>> {
    let n = matrix.len();
    let mut a: Vec<Vec<Rational64>> = matrix
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Rational64> = row.iter().map(|&x| Rational64::from_integer(x)).collect();
            r.extend((0..n).map(|j| if i == j { Rational64::one() } else { Rational64::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("Cartan matrix is invertible");
        a.swap(col, pivot);
        let p = a[col][col];
        for x in a[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for k in 0..2 * n {
                    let sub = f * a[col][k];
                    a[r][k] -= sub;
                }
            }
        }
    }
    a.into_iter().map(|row| row[n..].to_vec()).collect()
}

impl RootSystem {
    /// Builds the root data for `lie_type`, generating positive roots by
    /// closure under root strings starting from the simple roots.
    pub fn new(lie_type: LieType) -> Self {
        let n = lie_type.rank();
        let cartan = cartan_matrix(lie_type);
        let symmetrizers = symmetrizers(&cartan);

        // (α_i, α_j) = C_ij / d_i
        let simple_form = |i: usize, j: usize| Rational64::new(cartan[i][j], symmetrizers[i]);

        let mut found: HashSet<Vec<i64>> = HashSet::new();
        let mut all: Vec<Vec<i64>> = Vec::new();
        let mut layer: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let mut e = vec![0; n];
                e[i] = 1;
                e
            })
            .collect();
        for r in &layer {
            found.insert(r.clone());
        }
        while !layer.is_empty() {
            all.extend(layer.iter().cloned());
            let mut next = Vec::new();
            for beta in &layer {
                for i in 0..n {
                    if beta.iter().enumerate().all(|(j, &m)| m == (j == i) as i64) {
                        continue;
                    }
                    // β(h_i) = Σ_j m_j C_ij
                    let pairing: i64 = (0..n).map(|j| beta[j] * cartan[i][j]).sum();
                    let mut p = 0;
                    loop {
                        let mut down = beta.clone();
                        down[i] -= p + 1;
                        if down[i] >= 0 && found.contains(&down) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    if p - pairing > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if found.insert(up.clone()) {
                            next.push(up);
                        }
                    }
                }
            }
            layer = next;
        }

        let mut positive_roots: Vec<Root> = all
            .into_iter()
            .map(|coords| {
                let mut len = Rational64::zero();
                for i in 0..n {
                    for j in 0..n {
                        len += simple_form(i, j) * coords[i] * coords[j];
                    }
                }
                let d = Rational64::from_integer(2) / len;
                assert!(d.is_integer(), "d_alpha must be an integer");
                let height = coords.iter().sum();
                Root {
                    coords,
                    d_alpha: d.to_integer(),
                    height,
                }
            })
            .collect();
        // height first, then descending lex so that α_1, ..., α_n come first in node order
        positive_roots.sort_by(|a, b| a.height.cmp(&b.height).then_with(|| b.coords.cmp(&a.coords)));

        let root_index = positive_roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.coords.clone(), k))
            .collect();

        // ω_k(h_α) = d_α m_k / d_k
        let pairing_table = (0..n)
            .map(|k| {
                positive_roots
                    .iter()
                    .map(|r| {
                        let v = Rational64::new(r.d_alpha * r.coords[k], symmetrizers[k]);
                        assert!(v.is_integer(), "coroot expansion must be integral");
                        v.to_integer()
                    })
                    .collect()
            })
            .collect();

        let inverse_cartan = invert(&cartan);
        // (ω_i, ω_j) = (C^{-1})_{ij} / d_i
        let form: Vec<Vec<Rational64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| inverse_cartan[i][j] / Rational64::from_integer(symmetrizers[i]))
                    .collect()
            })
            .collect();
        let form_scale = form
            .iter()
            .flatten()
            .fold(1i64, |acc, x| acc.lcm(x.denom()));
        let weight_form = form
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| (x * Rational64::from_integer(form_scale)).to_integer())
                    .collect()
            })
            .collect();

        RootSystem {
            lie_type,
            cartan,
            symmetrizers,
            positive_roots,
            pairing_table,
            root_index,
            inverse_cartan,
            weight_form,
            form_scale,
        }
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// `d_i` per simple root.
    pub fn symmetrizers(&self) -> &[i64] {
        &self.symmetrizers
    }

    pub fn d(&self, node: usize) -> i64 {
        self.symmetrizers[node]
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn pairing_table(&self) -> &[Vec<i64>] {
        &self.pairing_table
    }

    pub fn simple_root(&self, node: usize) -> &Root {
        let mut e = vec![0; self.rank()];
        e[node] = 1;
        &self.positive_roots[self.root_index[&e]]
    }

    /// Highest root (the unique root of maximal height).
    pub fn highest_root(&self) -> &Root {
        self.positive_roots.last().expect("root system is nonempty")
    }

    pub fn index_of(&self, coords: &[i64]) -> Option<usize> {
        self.root_index.get(coords).copied()
    }

    /// Nodes adjacent to `node` in the Dynkin diagram (`C[node][j] < 0`).
    pub fn neighbors(&self, node: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.rank()).filter(move |&j| j != node && self.cartan[node][j] < 0)
    }

    pub fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                got: w.rank(),
            });
        }
        Ok(())
    }

    pub fn check_dominant(&self, w: &Weight) -> Result<()> {
        self.check_weight(w)?;
        if !w.is_dominant() {
            return Err(Error::NotDominant(w.to_string()));
        }
        Ok(())
    }

    /// `λ(h_α) = d_α Σ_j m_j c_j / d_j`, evaluated over the rationals.
    ///
    /// Panics if the result is not an integer, which would mean the Cartan
    /// conventions are inconsistent.
    pub fn eval_coroot(&self, lambda: &Weight, alpha: &Root) -> i64 {
        let v: Rational64 = alpha
            .coords
            .iter()
            .zip(&lambda.0)
            .zip(&self.symmetrizers)
            .map(|((&m, &c), &d)| Rational64::new(m * c, d))
            .sum::<Rational64>()
            * Rational64::from_integer(alpha.d_alpha);
        assert!(v.is_integer(), "lambda(h_alpha) must be an integer");
        v.to_integer()
    }

    /// Same value as [`eval_coroot`](Self::eval_coroot), read from the
    /// precomputed pairing table.
    pub fn pairing(&self, lambda: &Weight, root_index: usize) -> i64 {
        lambda
            .0
            .iter()
            .zip(&self.pairing_table)
            .map(|(c, row)| c * row[root_index])
            .sum()
    }

    /// For `λ = Σ d_i s_i ω_i`, returns `s_α = λ(h_α)/d_α`.
    pub fn dalpha_split(&self, lambda: &Weight, alpha: &Root) -> Result<i64> {
        self.check_dominant(lambda)?;
        for (i, (&c, &d)) in lambda.0.iter().zip(&self.symmetrizers).enumerate() {
            if c % d != 0 {
                return Err(Error::Precondition(format!(
                    "coefficient {c} at node {} is not divisible by d = {d}",
                    i + 1
                )));
            }
        }
        let v = self.eval_coroot(lambda, alpha);
        assert_eq!(v % alpha.d_alpha, 0, "lambda(h_alpha) must be divisible by d_alpha");
        Ok(v / alpha.d_alpha)
    }

    /// All unordered pairs `{β, γ}` of positive roots with `β + γ = α`.
    pub fn root_decompositions(&self, alpha: &Root) -> Vec<(Root, Root)> {
        let mut out = Vec::new();
        for (a, beta) in self.positive_roots.iter().enumerate() {
            if beta.height >= alpha.height {
                break;
            }
            let gamma: Vec<i64> = alpha.coords.iter().zip(&beta.coords).map(|(x, y)| x - y).collect();
            if let Some(b) = self.index_of(&gamma) {
                if a <= b {
                    out.push((beta.clone(), self.positive_roots[b].clone()));
                }
            }
        }
        out
    }

    /// The simple root `α_node` written in the fundamental-weight basis
    /// (column `node` of the Cartan matrix).
    pub fn simple_root_weight(&self, node: usize) -> Weight {
        Weight((0..self.rank()).map(|j| self.cartan[j][node]).collect())
    }

    pub fn root_weight(&self, alpha: &Root) -> Weight {
        let n = self.rank();
        Weight(
            (0..n)
                .map(|i| (0..n).map(|j| self.cartan[i][j] * alpha.coords[j]).sum())
                .collect(),
        )
    }

    /// Coordinates of `w` in the simple-root basis.
    pub fn root_coords(&self, w: &Weight) -> Vec<Rational64> {
        self.inverse_cartan
            .iter()
            .map(|row| row.iter().zip(&w.0).map(|(a, &c)| a * c).sum())
            .collect()
    }

    /// `form_scale() · (a, b)`.
    pub fn scaled_inner(&self, a: &Weight, b: &Weight) -> i64 {
        let n = self.rank();
        let mut acc = 0;
        for i in 0..n {
            if a.0[i] == 0 {
                continue;
            }
            for j in 0..n {
                acc += a.0[i] * self.weight_form[i][j] * b.0[j];
            }
        }
        acc
    }

    pub fn form_scale(&self) -> i64 {
        self.form_scale
    }

    /// Exact `(a, b)`.
    pub fn inner(&self, a: &Weight, b: &Weight) -> Rational64 {
        Rational64::new(self.scaled_inner(a, b), self.form_scale)
    }

    /// Simple reflection `s_node(w) = w − w(h_node) α_node`.
    pub fn reflect(&self, w: &Weight, node: usize) -> Weight {
        let k = w.0[node];
        Weight(
            w.0.iter()
                .enumerate()
                .map(|(j, &c)| c - k * self.cartan[j][node])
                .collect(),
        )
    }

    /// The dominant element of the Weyl orbit of `w`.
    pub fn dominant_conjugate(&self, w: &Weight) -> Weight {
        let mut v = w.clone();
        while let Some(i) = v.0.iter().position(|&c| c < 0) {
            v = self.reflect(&v, i);
        }
        v
    }

    /// Weyl orbit of `w`, by breadth-first search over simple reflections.
    pub fn orbit(&self, w: &Weight) -> Vec<Weight> {
        let mut seen: HashSet<Weight> = HashSet::new();
        let mut out = vec![w.clone()];
        seen.insert(w.clone());
        let mut k = 0;
        while k < out.len() {
            let v = out[k].clone();
            for i in 0..self.rank() {
                if v.0[i] != 0 {
                    let r = self.reflect(&v, i);
                    if seen.insert(r.clone()) {
                        out.push(r);
                    }
                }
            }
            k += 1;
        }
        out
    }

    /// Height of `λ − μ` when it lies in the root lattice.
    pub fn depth(&self, lambda: &Weight, mu: &Weight) -> Option<i64> {
        let q = self.root_coords(&(lambda - mu));
        if q.iter().all(|x| x.is_integer()) {
            Some(q.iter().map(|x| x.to_integer()).sum())
        } else {
            None
        }
    }

    /// `true` when `λ − μ ∈ Q⁺`.
    pub fn dominates(&self, lambda: &Weight, mu: &Weight) -> bool {
        self.root_coords(&(lambda - mu))
            .iter()
            .all(|x| x.is_integer() && !x.is_negative())
    }
}
