//! Independent oracles shared by the integration tests.
//!
//! `M` is a separate model of the completed max-plus line on integers, so the
//! oracles below do not go through the library's scalar arithmetic.
#![allow(dead_code)]

use tropical_functionals::{ExtendedScalar, FinVector, FiniteIS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum M {
    Bot,
    Fin(i64),
    Top,
}

pub fn mul(a: M, b: M) -> M {
    match (a, b) {
        (M::Bot, _) | (_, M::Bot) => M::Bot,
        (M::Top, _) | (_, M::Top) => M::Top,
        (M::Fin(p), M::Fin(q)) => M::Fin(p + q),
    }
}

pub fn from_ext(e: &ExtendedScalar) -> M {
    match e {
        ExtendedScalar::Bottom => M::Bot,
        ExtendedScalar::Top => M::Top,
        ExtendedScalar::Finite(q) => {
            assert!(q.is_integer(), "oracle model holds integers only");
            M::Fin(i64::try_from(&q.to_integer()).expect("small integer"))
        }
    }
}

pub fn to_ext(m: M) -> ExtendedScalar {
    match m {
        M::Bot => ExtendedScalar::Bottom,
        M::Top => ExtendedScalar::Top,
        M::Fin(v) => ExtendedScalar::int(v),
    }
}

pub fn model(v: &FinVector) -> Vec<M> {
    v.coords().iter().map(from_ext).collect()
}

/// Finite values scanned by [`scan_star`]; inputs stay within `[-20, 20]`, so
/// every finite threshold lies strictly inside.
pub const SCAN: i64 = 60;

/// `inf{k | y ⪯ k ⊙ x}` by trying `-inf`, each integer in `[-SCAN, SCAN]`
/// and `+inf` in turn. The valid set is closed upwards, so if the lowest
/// scanned integer is valid the set is unbounded below and the inf is `-inf`.
pub fn scan_star(x: &[M], y: &[M]) -> M {
    assert_eq!(x.len(), y.len());
    let valid = |k: M| x.iter().zip(y).all(|(&xj, &yj)| yj <= mul(k, xj));
    if valid(M::Bot) || valid(M::Fin(-SCAN)) {
        return M::Bot;
    }
    for k in -SCAN..=SCAN {
        if valid(M::Fin(k)) {
            return M::Fin(k);
        }
    }
    // `+inf` when it is valid; the inf of the empty set otherwise.
    M::Top
}

pub fn scan_star_ext(x: &FinVector, y: &FinVector) -> ExtendedScalar {
    to_ext(scan_star(&model(x), &model(y)))
}

pub fn vsup(vs: &[Vec<M>], dim: usize) -> Vec<M> {
    (0..dim)
        .map(|j| vs.iter().map(|v| v[j]).max().unwrap_or(M::Bot))
        .collect()
}

pub fn vinf(vs: &[Vec<M>], dim: usize) -> Vec<M> {
    (0..dim)
        .map(|j| vs.iter().map(|v| v[j]).min().unwrap_or(M::Top))
        .collect()
}

pub fn ext_vec(ms: &[M]) -> FinVector {
    FinVector::new(ms.iter().copied().map(to_ext).collect())
}

/// `n × n` order matrix of a poset.
pub fn order_matrix(s: &FiniteIS) -> Vec<Vec<bool>> {
    (0..s.len())
        .map(|i| (0..s.len()).map(|j| s.leq(i, j)).collect())
        .collect()
}

/// All cuts `A = L(U(A))`, by enumerating every subset `A`.
pub fn brute_force_cuts(leq: &[Vec<bool>]) -> Vec<u64> {
    let n = leq.len();
    let mut out = Vec::new();
    for a in 0u64..(1 << n) {
        let upper: Vec<usize> = (0..n)
            .filter(|&u| (0..n).all(|x| a >> x & 1 == 0 || leq[x][u]))
            .collect();
        let lower: u64 = (0..n)
            .filter(|&l| upper.iter().all(|&u| leq[l][u]))
            .fold(0, |m, l| m | 1 << l);
        if lower == a {
            out.push(a);
        }
    }
    out
}

/// Every poset on `0..n` whose order extends the index order, each order once.
pub fn enumerate_posets(n: usize) -> Vec<Vec<Vec<bool>>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut seen = std::collections::BTreeSet::new();
    for mask in 0u64..(1 << pairs.len()) {
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for (b, &(i, j)) in pairs.iter().enumerate() {
            if mask >> b & 1 == 1 {
                leq[i][j] = true;
            }
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if leq[i][k] && leq[k][j] {
                        leq[i][j] = true;
                    }
                }
            }
        }
        seen.insert(leq);
    }
    seen.into_iter().collect()
}

/// Least upper bound of `i` and `j` in the order matrix, if any.
pub fn join_in(leq: &[Vec<bool>], i: usize, j: usize) -> Option<usize> {
    let n = leq.len();
    let ub: Vec<usize> = (0..n).filter(|&u| leq[i][u] && leq[j][u]).collect();
    ub.iter().copied().find(|&u| ub.iter().all(|&v| leq[u][v]))
}

pub fn meet_in(leq: &[Vec<bool>], i: usize, j: usize) -> Option<usize> {
    let n = leq.len();
    let lb: Vec<usize> = (0..n).filter(|&l| leq[l][i] && leq[l][j]).collect();
    lb.iter().copied().find(|&l| lb.iter().all(|&v| leq[v][l]))
}

pub fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("p{i}")).collect()
}
