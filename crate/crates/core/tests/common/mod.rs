//! Independent oracles shared by the integration tests. Nothing here calls
//! the library's determinant, ψ or SNF code paths.

#![allow(dead_code)]

use degsim::algebra::{BiPoly, Matrix, RatFnPoly};
use degsim::graph::Graph;

/// `tI - (A - μD)` built entry by entry.
pub fn char_pencil(g: &Graph) -> Matrix<BiPoly> {
    Matrix::from_fn(g.n(), g.n(), |i, j| {
        if i == j {
            &BiPoly::t() + &BiPoly::linear_mu(0, g.degree(i) as i64)
        } else if g.has_edge(i, j) {
            -BiPoly::one()
        } else {
            BiPoly::zero()
        }
    })
}

/// Determinant by cofactor expansion along the first row.
pub fn cofactor_det(m: &Matrix<BiPoly>) -> BiPoly {
    let n = m.rows();
    if n == 0 {
        return BiPoly::one();
    }
    let mut acc = BiPoly::zero();
    for j in 0..n {
        if m[(0, j)].is_zero() {
            continue;
        }
        let rest: Vec<usize> = (1..n).collect();
        let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
        let term = &m[(0, j)] * &cofactor_det(&m.select(&rest, &cols));
        acc = if j % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    acc
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Invariant factors `d_k / d_{k-1}`, where `d_k` is the monic gcd over
/// ℚ(μ)[t] of all `k × k` minors of `tI - (A - μD)`.
pub fn determinantal_divisor_snf(g: &Graph) -> Vec<RatFnPoly> {
    let m = char_pencil(g);
    let n = g.n();
    let mut prev = RatFnPoly::one();
    let mut factors = Vec::with_capacity(n);
    for k in 1..=n {
        let subsets = combinations(n, k);
        let mut d = RatFnPoly::zero();
        for rows in &subsets {
            for cols in &subsets {
                let minor = cofactor_det(&m.select(rows, cols));
                if !minor.is_zero() {
                    d = d.gcd(&RatFnPoly::from(&minor));
                }
            }
        }
        let d = d.monic();
        let (q, r) = d.div_rem(&prev);
        assert!(r.is_zero(), "d_{} does not divide d_{k}", k - 1);
        factors.push(q.monic());
        prev = d;
    }
    factors
}

/// `counts[r][u][v]` = number of walks `u = w_0, …, w_r = v` with
/// `w_{i+1} ≠ w_{i-1}`, found by depth-first enumeration.
pub fn count_reduced_walks(g: &Graph, max_len: usize) -> Vec<Vec<Vec<u64>>> {
    fn dfs(
        g: &Graph,
        start: usize,
        prev: Option<usize>,
        cur: usize,
        len: usize,
        max_len: usize,
        counts: &mut [Vec<Vec<u64>>],
    ) {
        counts[len][start][cur] += 1;
        if len == max_len {
            return;
        }
        for w in 0..g.n() {
            if g.has_edge(cur, w) && Some(w) != prev {
                dfs(g, start, Some(cur), w, len + 1, max_len, counts);
            }
        }
    }
    let n = g.n();
    let mut counts = vec![vec![vec![0u64; n]; n]; max_len + 1];
    for s in 0..n {
        dfs(g, s, None, s, 0, max_len, &mut counts);
    }
    counts
}
