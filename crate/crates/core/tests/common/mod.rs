//! Brute-force oracles shared by the integration tests. None of these call
//! into the library's own algorithms for the quantity they check.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_rational::Ratio;

use demfusion::RootSystem;

/// Every `(b_0, …, b_s)` with `Σ b_p = r`, `Σ p b_p = s`, built from
/// multisets of `r` indices in `0..=s`.
pub fn brute_s(r: u64, s: u64) -> Vec<Vec<u64>> {
    fn multisets(r: u64, lo: u64, hi: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if r == 0 {
            out.push(cur.clone());
            return;
        }
        for p in lo..=hi {
            cur.push(p);
            multisets(r - 1, p, hi, cur, out);
            cur.pop();
        }
    }
    let mut ms = Vec::new();
    multisets(r, 0, s, &mut Vec::new(), &mut ms);
    let mut out: Vec<Vec<u64>> = ms
        .into_iter()
        .filter(|m| m.iter().sum::<u64>() == s)
        .map(|m| {
            let mut b = vec![0u64; s as usize + 1];
            for p in m {
                b[p as usize] += 1;
            }
            b
        })
        .collect();
    out.sort();
    out
}

/// Partitions of `n` into at most `k` parts, by `p(n, k) = p(n, k−1) + p(n−k, k)`.
pub fn partition_count(n: u64, k: u64) -> u64 {
    fn go(n: i64, k: i64, memo: &mut BTreeMap<(i64, i64), u64>) -> u64 {
        if n == 0 {
            return 1;
        }
        if n < 0 || k == 0 {
            return 0;
        }
        if let Some(&v) = memo.get(&(n, k)) {
            return v;
        }
        let v = go(n, k - 1, memo) + go(n - k, k, memo);
        memo.insert((n, k), v);
        v
    }
    go(n as i64, k as i64, &mut BTreeMap::new())
}

/// `(d_α, λ(h_α))` from the symmetric form `B_ij = C_ij / d_i`:
/// `(α, α) = Σ m_i m_j B_ij`, `d_α = 2/(α,α)`,
/// `λ(h_α) = 2(λ, α)/(α, α)` with `(ω_j, α_j) = 1/d_j`.
pub fn pairing_oracle(c: &[Vec<i64>], d: &[i64], lambda: &[i64], root: &[i64]) -> (i64, i64) {
    let n = d.len();
    let mut norm = Ratio::from_integer(0i64);
    for i in 0..n {
        for j in 0..n {
            norm += Ratio::new(root[i] * root[j] * c[i][j], d[i]);
        }
    }
    let mut lam_alpha = Ratio::from_integer(0i64);
    for j in 0..n {
        lam_alpha += Ratio::new(root[j] * lambda[j], d[j]);
    }
    let d_alpha = Ratio::from_integer(2) / norm;
    let value = Ratio::from_integer(2) * lam_alpha / norm;
    assert!(d_alpha.is_integer() && value.is_integer());
    (d_alpha.to_integer(), value.to_integer())
}

/// Unordered pairs of positive roots summing to `root`, by scanning all pairs.
pub fn brute_decompositions(rs: &RootSystem, root: &[i64]) -> Vec<(Vec<i64>, Vec<i64>)> {
    let roots: Vec<Vec<i64>> = rs.positive_roots().iter().map(|r| r.coords.clone()).collect();
    let mut out = Vec::new();
    for (a, x) in roots.iter().enumerate() {
        for y in &roots[a..] {
            if x.iter().zip(y).zip(root).all(|((p, q), r)| p + q == *r) {
                out.push((x.clone(), y.clone()));
            }
        }
    }
    out
}

/// Character of the `sl_N` module with Young diagram `shape`, from
/// semistandard tableaux, as weights in fundamental coordinates.
pub fn ssyt_character(big_n: usize, shape: &[usize]) -> BTreeMap<Vec<i64>, u64> {
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&len| vec![0; len]).collect();
    let mut out = BTreeMap::new();

    fn fill(
        k: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        big_n: usize,
        out: &mut BTreeMap<Vec<i64>, u64>,
    ) {
        if k == cells.len() {
            let mut content = vec![0i64; big_n + 1];
            for row in grid.iter() {
                for &v in row {
                    content[v] += 1;
                }
            }
            let w: Vec<i64> = (1..big_n).map(|a| content[a] - content[a + 1]).collect();
            *out.entry(w).or_default() += 1;
            return;
        }
        let (r, c) = cells[k];
        let lo_row = if c > 0 { grid[r][c - 1] } else { 1 };
        let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        for v in lo_row.max(lo_col)..=big_n {
            grid[r][c] = v;
            fill(k + 1, cells, grid, big_n, out);
        }
        grid[r][c] = 0;
    }

    fill(0, &cells, &mut grid, big_n, &mut out);
    out
}

/// `dim` of the `sl_N` module with diagram `shape`, by the hook-content formula.
pub fn hook_content_dim(big_n: usize, shape: &[usize]) -> BigUint {
    let mut num = BigUint::from(1u32);
    let mut den = BigUint::from(1u32);
    for (r, &len) in shape.iter().enumerate() {
        for c in 0..len {
            let arm = len - c - 1;
            let leg = shape.iter().skip(r + 1).filter(|&&l| l > c).count();
            num *= BigUint::from(big_n + c - r);
            den *= BigUint::from(arm + leg + 1);
        }
    }
    assert!((&num % &den) == BigUint::from(0u32));
    num / den
}

/// The rectangle for `m ω_i` (rows of length `m`, `i` of them; `i` 1-based).
pub fn rectangle(m: usize, i: usize) -> Vec<usize> {
    vec![m; i]
}

/// `Σ_{k=0}^{r} x^{r−2k}`.
pub fn sl2_string(r: u64) -> BTreeMap<i64, i64> {
    (0..=r).map(|k| (r as i64 - 2 * k as i64, 1)).collect()
}

pub fn poly_mul(a: &BTreeMap<i64, i64>, b: &BTreeMap<i64, i64>) -> BTreeMap<i64, i64> {
    let mut out = BTreeMap::new();
    for (x, p) in a {
        for (y, q) in b {
            *out.entry(x + y).or_insert(0) += p * q;
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

/// Membership in `𝕀(ξ)`, written out directly with 1-based indices.
pub fn index_member(xi: &[u64], i: &[u64]) -> bool {
    let l = xi.len();
    let ii = |p: usize| if (1..=l).contains(&p) { i[p - 1] } else { 0 };
    let xx = |p: usize| if (1..=l).contains(&p) { xi[p - 1] } else { 0 };
    for k in 2..=l + 1 {
        for j in 1..k {
            let lhs = j as u64 * ii(k - 1) + (j as u64 + 1) * ii(k) + 2 * (k + 1..=l).map(ii).sum::<u64>();
            let rhs: u64 = (k - j..=l).map(xx).sum();
            if lhs > rhs {
                return false;
            }
        }
    }
    true
}

/// Partitions of `n` as plain vectors.
pub fn all_partitions(n: u64) -> Vec<Vec<u64>> {
    fn go(n: u64, max: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for p in 1..=n.min(max) {
            cur.push(p);
            go(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// `"empty"`, `"rect"`, `"hook"` (special fat hook) or `"other"`.
pub fn shape_oracle(parts: &[u64]) -> &'static str {
    let mut distinct: Vec<u64> = parts.to_vec();
    distinct.dedup();
    match distinct.len() {
        0 => "empty",
        1 => "rect",
        2 if parts.iter().filter(|&&p| p == distinct[1]).count() == 1 => "hook",
        _ => "other",
    }
}

/// Bourbaki Cartan matrix `C_ij = 2(α_i, α_j)/(α_i, α_i)` and `d_i = 2/(α_i, α_i)`
/// for the classical families, `F_4` and `G_2`, written out by hand.
pub fn bourbaki_data(family: char, n: usize) -> (Vec<Vec<i64>>, Vec<i64>) {
    let mut c = vec![vec![0i64; n]; n];
    for i in 0..n {
        c[i][i] = 2;
    }
    let mut link = |i: usize, j: usize, cij: i64, cji: i64| {
        c[i][j] = cij;
        c[j][i] = cji;
    };
    let mut d = vec![1i64; n];
    match family {
        'A' => (1..n).for_each(|i| link(i - 1, i, -1, -1)),
        'B' => {
            (1..n - 1).for_each(|i| link(i - 1, i, -1, -1));
            link(n - 2, n - 1, -1, -2);
            d[n - 1] = 2;
        }
        'C' => {
            (1..n - 1).for_each(|i| link(i - 1, i, -1, -1));
            link(n - 2, n - 1, -2, -1);
            d.iter_mut().take(n - 1).for_each(|x| *x = 2);
        }
        'D' => {
            (1..n - 1).for_each(|i| link(i - 1, i, -1, -1));
            link(n - 3, n - 1, -1, -1);
        }
        'F' => {
            link(0, 1, -1, -1);
            link(1, 2, -1, -2);
            link(2, 3, -1, -1);
            d = vec![1, 1, 2, 2];
        }
        'G' => {
            link(0, 1, -3, -1);
            d = vec![3, 1];
        }
        _ => panic!("no hand-written data for {family}"),
    }
    (c, d)
}
