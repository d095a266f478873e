//! Finite idempotent semigroups as partial orders, and their completions.
//!
//! An idempotent semigroup is the same thing as an upper semilattice under
//! `x ⪯ y ⟺ x ⊕ y = y`. [`FiniteIS`] stores the order as bit rows so that
//! upper and lower bounds of a subset are a handful of `&` operations.
//!
//! The completions work on arbitrary finite partial orders: the normal
//! completion (Dedekind–MacNeille, by cuts) is what turns a poset that lacks
//! some joins into a complete lattice, so insisting on a semilattice input
//! would rule out the interesting cases.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// Elements are indexed by bit position in a `u64`.
pub const MAX_ELEMENTS: usize = 64;

fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| mask >> i & 1 == 1)
}

/// A finite partially ordered set with labelled elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteIS {
    labels: Vec<String>,
    /// `up[i]` has bit `j` set iff `i ⪯ j`.
    up: Vec<u64>,
}

impl FiniteIS {
    /// Builds the order generated by `relations` (pairs `(i, j)` meaning
    /// `i ⪯ j`), taking the reflexive-transitive closure.
    pub fn from_relations(labels: Vec<String>, relations: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        if n > MAX_ELEMENTS {
            return Err(Error::TooLarge(format!(
                "{n} elements (at most {MAX_ELEMENTS})"
            )));
        }
        check_unique(&labels)?;
        let mut up: Vec<u64> = (0..n).map(|i| 1u64 << i).collect();
        for &(i, j) in relations {
            if i >= n || j >= n {
                return Err(Error::UnknownElement(format!("index {}", i.max(j))));
            }
            up[i] |= 1 << j;
        }
        // Warshall over bit rows
        for k in 0..n {
            for i in 0..n {
                if up[i] >> k & 1 == 1 {
                    up[i] |= up[k];
                }
            }
        }
        let s = Self { labels, up };
        s.check_antisymmetric()?;
        Ok(s)
    }

    /// Builds from a full `leq` matrix, which must already be a partial order.
    pub fn from_matrix(labels: Vec<String>, leq: &[Vec<bool>]) -> Result<Self> {
        let n = labels.len();
        if n > MAX_ELEMENTS {
            return Err(Error::TooLarge(format!(
                "{n} elements (at most {MAX_ELEMENTS})"
            )));
        }
        if leq.len() != n || leq.iter().any(|row| row.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: leq.len(),
            });
        }
        check_unique(&labels)?;
        let up: Vec<u64> = leq
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .fold(0u64, |m, (j, &b)| if b { m | 1 << j } else { m })
            })
            .collect();
        for (i, row) in up.iter().enumerate() {
            if row >> i & 1 == 0 {
                return Err(Error::NotPartialOrder(format!(
                    "not reflexive at `{}`",
                    labels[i]
                )));
            }
            for j in bits(*row) {
                if up[j] & !row != 0 {
                    return Err(Error::NotPartialOrder(format!(
                        "not transitive through `{}` ⪯ `{}`",
                        labels[i], labels[j]
                    )));
                }
            }
        }
        let s = Self { labels, up };
        s.check_antisymmetric()?;
        Ok(s)
    }

    pub fn chain<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let rel: Vec<_> = (1..labels.len()).map(|i| (i - 1, i)).collect();
        Self::from_relations(labels, &rel)
    }

    pub fn antichain<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        Self::from_relations(labels.into_iter().map(Into::into).collect(), &[])
    }

    fn check_antisymmetric(&self) -> Result<()> {
        for i in 0..self.len() {
            for j in bits(self.up[i]) {
                if j != i && self.leq(j, i) {
                    return Err(Error::NotPartialOrder(format!(
                        "cycle between `{}` and `{}`",
                        self.labels[i], self.labels[j]
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownElement(label.to_string()))
    }

    pub fn full_mask(&self) -> u64 {
        full(self.len())
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i] >> j & 1 == 1
    }

    /// `x ⪯ y` by label.
    pub fn standard_order(&self, x: &str, y: &str) -> Result<bool> {
        Ok(self.leq(self.index_of(x)?, self.index_of(y)?))
    }

    pub fn up_set(&self, i: usize) -> u64 {
        self.up[i]
    }

    pub fn down_set(&self, i: usize) -> u64 {
        (0..self.len())
            .filter(|&j| self.leq(j, i))
            .fold(0, |m, j| m | 1 << j)
    }

    /// Common upper bounds of the elements in `mask`; every element when empty.
    pub fn upper_bounds(&self, mask: u64) -> u64 {
        bits(mask).fold(self.full_mask(), |m, i| m & self.up[i])
    }

    pub fn lower_bounds(&self, mask: u64) -> u64 {
        bits(mask).fold(self.full_mask(), |m, i| m & self.down_set(i))
    }

    /// The least element of `mask`, if it has one.
    pub fn least_in(&self, mask: u64) -> Option<usize> {
        bits(mask).find(|&i| self.up[i] & mask == mask)
    }

    pub fn greatest_in(&self, mask: u64) -> Option<usize> {
        bits(mask).find(|&i| self.down_set(i) & mask == mask)
    }

    /// `⊕X` for the subset `mask`, when it exists.
    pub fn join_of(&self, mask: u64) -> Option<usize> {
        self.least_in(self.upper_bounds(mask))
    }

    pub fn meet_of(&self, mask: u64) -> Option<usize> {
        self.greatest_in(self.lower_bounds(mask))
    }

    pub fn join(&self, x: usize, y: usize) -> Option<usize> {
        self.join_of(1 << x | 1 << y)
    }

    pub fn bottom(&self) -> Option<usize> {
        self.least_in(self.full_mask())
    }

    pub fn top(&self) -> Option<usize> {
        self.greatest_in(self.full_mask())
    }

    /// Every pair has a join, i.e. this is an idempotent semigroup under `⊕ = sup`.
    pub fn is_join_semilattice(&self) -> bool {
        (0..self.len()).all(|x| (x..self.len()).all(|y| self.join(x, y).is_some()))
    }

    /// Every subset, including the empty one, has a join.
    pub fn is_complete_lattice(&self) -> bool {
        self.bottom().is_some() && self.is_join_semilattice()
    }

    /// Every subset that has an upper bound (and the empty set) has a join.
    pub fn is_b_complete(&self) -> bool {
        self.bottom().is_some()
            && (0..self.len()).all(|x| {
                (x..self.len()).all(|y| {
                    let m = 1u64 << x | 1 << y;
                    self.upper_bounds(m) == 0 || self.join_of(m).is_some()
                })
            })
    }

    /// Covering pairs `(i, j)`: `i ≺ j` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            let above = self.up[i] & !(1 << i);
            for j in bits(above) {
                let between = above & self.down_set(j) & !(1 << j);
                if between == 0 {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

fn check_unique(labels: &[String]) -> Result<()> {
    let mut seen = BTreeSet::new();
    for l in labels {
        if !seen.insert(l.as_str()) {
            return Err(Error::NotPartialOrder(format!("duplicate element `{l}`")));
        }
    }
    Ok(())
}

/// A completion together with the order embedding of the original poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompletionResult {
    pub completed: FiniteIS,
    /// `embedding[i]` is the index in `completed` of original element `i`.
    pub embedding: Vec<usize>,
    /// Each completed element as a set (bitmask) of original elements.
    pub cuts: Vec<u64>,
}

impl CompletionResult {
    /// Injective and `x ⪯ y ⟺ e(x) ⪯ e(y)`.
    pub fn is_order_embedding(&self, original: &FiniteIS) -> bool {
        let e = &self.embedding;
        let injective = e.iter().collect::<BTreeSet<_>>().len() == e.len();
        injective
            && (0..original.len()).all(|x| {
                (0..original.len()).all(|y| original.leq(x, y) == self.completed.leq(e[x], e[y]))
            })
    }

    /// The embedding is onto, so the completion adds nothing.
    pub fn is_isomorphism(&self, original: &FiniteIS) -> bool {
        self.is_order_embedding(original) && self.embedding.len() == self.completed.len()
    }
}

/// All cuts `A = L(U(A))` of `s`, ordered by size then bitmask.
///
/// Cuts are exactly the intersections of principal ideals `↓u` (the empty
/// intersection being the whole set), so the family is generated by closing
/// `{S} ∪ {↓u}` under pairwise intersection.
pub fn cuts(s: &FiniteIS) -> Vec<u64> {
    let mut family: BTreeSet<u64> = BTreeSet::new();
    family.insert(s.full_mask());
    let principal: Vec<u64> = (0..s.len()).map(|u| s.down_set(u)).collect();
    let mut frontier: Vec<u64> = vec![s.full_mask()];
    while let Some(c) = frontier.pop() {
        for p in &principal {
            let next = c & p;
            if family.insert(next) {
                frontier.push(next);
            }
        }
    }
    let mut out: Vec<u64> = family.into_iter().collect();
    out.sort_by_key(|m| (m.count_ones(), *m));
    out
}

fn build(s: &FiniteIS, cuts: Vec<u64>) -> Result<CompletionResult> {
    if cuts.len() > MAX_ELEMENTS {
        return Err(Error::TooLarge(format!(
            "completion has {} elements (at most {MAX_ELEMENTS})",
            cuts.len()
        )));
    }
    let embedding: Vec<usize> = (0..s.len())
        .map(|x| {
            let p = s.down_set(x);
            cuts.iter()
                .position(|&c| c == p)
                .expect("principal ideals are cuts")
        })
        .collect();

    let mut labels: Vec<Option<String>> = vec![None; cuts.len()];
    for (x, &k) in embedding.iter().enumerate() {
        labels[k] = Some(s.label(x).to_string());
    }
    let mut taken: BTreeSet<String> = s.labels().iter().cloned().collect();
    let mut fresh = |base: String| {
        let mut name = base;
        while taken.contains(&name) {
            name.push('\'');
        }
        taken.insert(name.clone());
        name
    };
    let last = cuts.len().saturating_sub(1);
    let mut counter = 0;
    for (k, slot) in labels.iter_mut().enumerate() {
        if slot.is_some() {
            continue;
        }
        *slot = Some(if k == 0 {
            fresh("_bot".into())
        } else if k == last && cuts[k] == s.full_mask() {
            fresh("_top".into())
        } else {
            counter += 1;
            fresh(format!("_cut{}", counter - 1))
        });
    }
    let labels: Vec<String> = labels.into_iter().map(Option::unwrap).collect();
    let leq: Vec<Vec<bool>> = cuts
        .iter()
        .map(|a| cuts.iter().map(|b| a & !b == 0).collect())
        .collect();
    let completed = FiniteIS::from_matrix(labels, &leq)?;
    Ok(CompletionResult {
        completed,
        embedding,
        cuts,
    })
}

/// Normal completion by cuts (Dedekind–MacNeille).
///
/// The result is a complete lattice whose bottom is `⊕∅`; each original
/// element maps to its principal cut and keeps its label. New elements are
/// named `_bot`, `_top` and `_cut{k}`.
pub fn dm_completion(s: &FiniteIS) -> Result<CompletionResult> {
    build(s, cuts(s))
}

/// Completion of bounded subsets only.
///
/// Every cut except possibly the whole set is the cut of a bounded subset
/// (the empty set counts as bounded). The whole set is dropped exactly when it
/// is not principal, i.e. when `s` has no greatest element, so the result
/// differs from [`dm_completion`] by at most the adjoined `∞ = sup S`.
pub fn b_completion(s: &FiniteIS) -> Result<CompletionResult> {
    let mut all = cuts(s);
    if s.top().is_none() && all.len() > 1 {
        all.retain(|&c| c != s.full_mask());
    }
    build(s, all)
}

/// Every poset on `n ≤ 6` elements whose index order is a linear extension,
/// without repeats. Each isomorphism class occurs at least once.
pub fn naturally_labelled_posets(n: usize) -> Result<Vec<FiniteIS>> {
    if n > 6 {
        return Err(Error::TooLarge(format!("{n} elements (at most 6)")));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let labels: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let rel: Vec<(usize, usize)> = bits(mask).map(|b| pairs[b]).collect();
        let s = FiniteIS::from_relations(labels.clone(), &rel)?;
        if seen.insert(s.up.clone()) {
            out.push(s);
        }
    }
    Ok(out)
}
