//! Characters of finite-dimensional modules as Laurent polynomials in the
//! fundamental-weight variables, with exact big-integer coefficients.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::root_system::{RootSystem, Weight};

/// A finite sum `Σ c_ν x^ν` over weights `ν`. Zero coefficients are never
/// stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentCharacter {
    rank: usize,
    terms: BTreeMap<Weight, BigInt>,
}

impl LaurentCharacter {
    pub fn zero(rank: usize) -> Self {
        LaurentCharacter {
            rank,
            terms: BTreeMap::new(),
        }
    }

    /// The unit `x^0`.
    pub fn one(rank: usize) -> Self {
        Self::monomial(Weight::zero(rank), BigInt::one())
    }

    pub fn monomial(w: Weight, c: BigInt) -> Self {
        let mut out = LaurentCharacter::zero(w.rank());
        out.add_term(w, c);
        out
    }

    pub fn from_terms<I>(rank: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Weight, BigInt)>,
    {
        let mut out = LaurentCharacter::zero(rank);
        for (w, c) in terms {
            if w.rank() != rank {
                return Err(Error::RankMismatch {
                    expected: rank,
                    got: w.rank(),
                });
            }
            out.add_term(w, c);
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &Weight) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, w: Weight, c: BigInt) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(w.rank(), self.rank);
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Sum of all coefficients, i.e. the dimension when `self` is the
    /// character of a module.
    pub fn dimension(&self) -> BigInt {
        self.terms.values().sum()
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                got: other.rank,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c);
        }
        Ok(out)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return LaurentCharacter::zero(self.rank);
        }
        LaurentCharacter {
            rank: self.rank,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c * k)).collect(),
        }
    }

    /// Exact convolution product.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut acc: HashMap<Weight, BigInt> = HashMap::with_capacity(self.len() * other.len());
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                *acc.entry(a + b).or_default() += ca * cb;
            }
        }
        Ok(LaurentCharacter {
            rank: self.rank,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = LaurentCharacter::one(self.rank);
        for _ in 0..e {
            out = out.multiply(self).expect("same rank");
        }
        out
    }

    fn exponent_box(&self) -> Option<(Vec<i64>, Vec<i64>)> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let mut lo = first.0.clone();
        let mut hi = first.0.clone();
        for w in it {
            for k in 0..self.rank {
                lo[k] = lo[k].min(w.0[k]);
                hi[k] = hi[k].max(w.0[k]);
            }
        }
        Some((lo, hi))
    }

    /// Exact division in the Laurent polynomial ring, or
    /// [`Error::InexactPolynomialDivision`].
    ///
    /// Uses the lexicographic group order on exponents; every quotient term
    /// must lie in the box `[min(self) − min(divisor), max(self) − max(divisor)]`,
    /// which bounds the loop.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        self.check_rank(divisor)?;
        let (lead_w, lead_c) = divisor
            .terms
            .iter()
            .next_back()
            .ok_or(Error::InexactPolynomialDivision)?;
        let mut quotient = LaurentCharacter::zero(self.rank);
        let Some((alo, ahi)) = self.exponent_box() else {
            return Ok(quotient);
        };
        let (dlo, dhi) = divisor.exponent_box().expect("divisor is nonzero");
        let lo: Vec<i64> = alo.iter().zip(&dlo).map(|(a, d)| a - d).collect();
        let hi: Vec<i64> = ahi.iter().zip(&dhi).map(|(a, d)| a - d).collect();

        let mut rem = self.terms.clone();
        while let Some((w, c)) = rem.iter().next_back() {
            let qw = w - lead_w;
            if (0..self.rank).any(|k| qw.0[k] < lo[k] || qw.0[k] > hi[k]) {
                return Err(Error::InexactPolynomialDivision);
            }
            let (qc, r) = c.div_rem(lead_c);
            if !r.is_zero() {
                return Err(Error::InexactPolynomialDivision);
            }
            for (dw, dc) in &divisor.terms {
                let key = &qw + dw;
                let v = rem.entry(key.clone()).or_default();
                *v -= &qc * dc;
                if v.is_zero() {
                    rem.remove(&key);
                }
            }
            quotient.add_term(qw, qc);
        }
        Ok(quotient)
    }

    /// Terms with dominant exponent.
    pub fn dominant_terms(&self) -> impl Iterator<Item = (&Weight, &BigInt)> {
        self.terms.iter().filter(|(w, _)| w.is_dominant())
    }
}

impl fmt::Display for LaurentCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*x^{w}")?;
        }
        Ok(())
    }
}

/// Multiplicities of the dominant weights of `V(λ)` by Freudenthal's
/// recursion.
pub fn dominant_multiplicities(rs: &RootSystem, lambda: &Weight) -> Result<BTreeMap<Weight, BigInt>> {
    rs.check_dominant(lambda)?;
    let n = rs.rank();
    let roots: Vec<Weight> = rs.positive_roots().iter().map(|r| rs.root_weight(r)).collect();

    // Dominant weights below λ are connected to λ by steps μ -> μ − α that
    // stay dominant.
    let mut seen: BTreeSet<Weight> = BTreeSet::new();
    seen.insert(lambda.clone());
    let mut queue = vec![lambda.clone()];
    while let Some(mu) = queue.pop() {
        for a in &roots {
            let nu = &mu - a;
            if nu.is_dominant() && seen.insert(nu.clone()) {
                queue.push(nu);
            }
        }
    }
    let mut order: Vec<(i64, Weight)> = seen
        .into_iter()
        .map(|mu| (rs.depth(lambda, &mu).expect("λ − μ lies in the root lattice"), mu))
        .collect();
    order.sort();

    let rho = Weight::rho(n);
    let lr = lambda + &rho;
    let top = rs.scaled_inner(&lr, &lr);

    let mut mult: BTreeMap<Weight, BigInt> = BTreeMap::new();
    mult.insert(lambda.clone(), BigInt::one());
    for (_, mu) in order.into_iter().skip(1) {
        let mut sum = BigInt::zero();
        for a in &roots {
            let mut nu = &mu + a;
            loop {
                let dom = rs.dominant_conjugate(&nu);
                match mult.get(&dom) {
                    Some(m) => {
                        sum += m * rs.scaled_inner(&nu, a);
                        nu = &nu + a;
                    }
                    None => break,
                }
            }
        }
        let mr = &mu + &rho;
        let den = top - rs.scaled_inner(&mr, &mr);
        assert!(den > 0, "Freudenthal denominator must be positive");
        let num: BigInt = sum * 2;
        let (m, r) = num.div_rem(&BigInt::from(den));
        assert!(r.is_zero(), "Freudenthal recursion must divide exactly");
        mult.insert(mu, m);
    }
    Ok(mult)
}

/// Character of the irreducible module `V(λ)`.
pub fn irreducible_character(rs: &RootSystem, lambda: &Weight) -> Result<LaurentCharacter> {
    let dominant = dominant_multiplicities(rs, lambda)?;
    let mut out = LaurentCharacter::zero(rs.rank());
    for (mu, m) in dominant {
        if m.is_zero() {
            continue;
        }
        for w in rs.orbit(&mu) {
            out.add_term(w, m.clone());
        }
    }
    Ok(out)
}

/// Weyl's dimension formula `∏_{α>0} (λ+ρ)(h_α) / ρ(h_α)`.
pub fn weyl_dimension(rs: &RootSystem, lambda: &Weight) -> Result<BigUint> {
    rs.check_dominant(lambda)?;
    let rho = Weight::rho(rs.rank());
    let lr = lambda + &rho;
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for (a, _) in rs.positive_roots().iter().enumerate() {
        num *= BigUint::from(rs.pairing(&lr, a) as u64);
        den *= BigUint::from(rs.pairing(&rho, a) as u64);
    }
    let (q, r) = num.div_rem(&den);
    assert!(r.is_zero(), "Weyl dimension must be an integer");
    Ok(q)
}

/// Sum `Σ m_λ ch V(λ)`.
pub fn character_of_sum(rs: &RootSystem, parts: &[(Weight, BigInt)]) -> Result<LaurentCharacter> {
    let mut out = LaurentCharacter::zero(rs.rank());
    for (w, m) in parts {
        out = out.add(&irreducible_character(rs, w)?.scale(m))?;
    }
    Ok(out)
}

/// Writes `χ` as an integer combination of irreducible characters by
/// repeatedly peeling off the dominant weight with the largest pairing
/// against `ρ` (ties: lexicographically largest coordinates).
///
/// Returns `(λ, multiplicity)` pairs in peeling order. Multiplicities may be
/// negative when `χ` is a virtual character.
pub fn decompose_character(rs: &RootSystem, chi: &LaurentCharacter) -> Result<Vec<(Weight, BigInt)>> {
    if chi.rank() != rs.rank() {
        return Err(Error::RankMismatch {
            expected: rs.rank(),
            got: chi.rank(),
        });
    }
    let rho = Weight::rho(rs.rank());
    let mut residue = chi.clone();
    let mut out: Vec<(Weight, BigInt)> = Vec::new();
    while !residue.is_zero() {
        let Some((top, c)) = residue
            .dominant_terms()
            .max_by(|(a, _), (b, _)| {
                (rs.scaled_inner(a, &rho), *a).cmp(&(rs.scaled_inner(b, &rho), *b))
            })
            .map(|(w, c)| (w.clone(), c.clone()))
        else {
            return Err(Error::NotInSpan { terms: residue.len() });
        };
        let ch = irreducible_character(rs, &top)?;
        residue = residue.sub(&ch.scale(&c))?;
        match out.iter_mut().find(|(w, _)| *w == top) {
            Some((_, m)) => *m += c,
            None => out.push((top, c)),
        }
    }
    out.retain(|(_, m)| !m.is_zero());
    Ok(out)
}

/// `true` when every multiplicity in the decomposition is nonnegative.
pub fn is_genuine_character(rs: &RootSystem, chi: &LaurentCharacter) -> Result<bool> {
    Ok(decompose_character(rs, chi)?.iter().all(|(_, m)| !m.is_negative()))
}
