//! The free semimodule `K̂^n`, i.e. `K̂`-valued functions on a finite set.

use std::fmt;

use crate::error::{Error, Result};
use crate::report::{members, subsets, Check, Report};
use crate::scalars::{big_inf, big_sup, CompleteSemiring};

/// A vector with coordinates in a complete semiring, optionally labelled by
/// the points of a finite set `X`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector<S> {
    coords: Vec<S>,
    labels: Option<Vec<String>>,
}

fn merge_labels(a: &Option<Vec<String>>, b: &Option<Vec<String>>) -> Result<Option<Vec<String>>> {
    match (a, b) {
        (Some(x), Some(y)) if x != y => Err(Error::LabelMismatch),
        (Some(x), _) | (None, Some(x)) => Ok(Some(x.clone())),
        (None, None) => Ok(None),
    }
}

impl<S: CompleteSemiring> Vector<S> {
    pub fn new(coords: Vec<S>) -> Self {
        Self {
            coords,
            labels: None,
        }
    }

    pub fn with_labels(coords: Vec<S>, labels: Vec<String>) -> Result<Self> {
        if coords.len() != labels.len() {
            return Err(Error::DimensionMismatch {
                expected: labels.len(),
                found: coords.len(),
            });
        }
        Ok(Self {
            coords,
            labels: Some(labels),
        })
    }

    /// `0_V`.
    pub fn zero(dim: usize) -> Self {
        Self::new(vec![S::zero(); dim])
    }

    /// `∞ = sup V`, the all-top vector of the completion.
    pub fn top(dim: usize) -> Self {
        Self::new(vec![S::top(); dim])
    }

    pub fn constant(dim: usize, value: S) -> Self {
        Self::new(vec![value; dim])
    }

    /// `1` at coordinate `i`, `0` elsewhere.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.coords[i] = S::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[S] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<S> {
        self.coords
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn set_labels(&mut self, labels: Option<Vec<String>>) -> Result<()> {
        if let Some(l) = &labels {
            self.check_dim(l.len())?;
        }
        self.labels = labels;
        Ok(())
    }

    pub fn get(&self, i: usize) -> &S {
        &self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(S::is_zero)
    }

    pub fn is_top(&self) -> bool {
        self.coords.iter().all(S::is_top)
    }

    pub(crate) fn check_dim(&self, expected: usize) -> Result<()> {
        if self.dim() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                found: self.dim(),
            });
        }
        Ok(())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&S, &S) -> S) -> Result<Self> {
        other.check_dim(self.dim())?;
        Ok(Self {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| f(a, b))
                .collect(),
            labels: merge_labels(&self.labels, &other.labels)?,
        })
    }

    /// Coordinatewise `⊕`.
    pub fn oplus(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, S::oplus)
    }

    pub fn meet(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, S::meet)
    }

    /// Pointwise product, the multiplication of the function semialgebra.
    pub fn pointwise_mul(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, S::otimes)
    }

    /// `k ⊙ x`.
    pub fn scale(&self, k: &S) -> Self {
        Self {
            coords: self.coords.iter().map(|c| k.otimes(c)).collect(),
            labels: self.labels.clone(),
        }
    }

    /// Coordinatewise standard order.
    pub fn precedes(&self, other: &Self) -> Result<bool> {
        other.check_dim(self.dim())?;
        Ok(self
            .coords
            .iter()
            .zip(&other.coords)
            .all(|(a, b)| a.precedes(b)))
    }

    pub fn map(&self, f: impl Fn(&S) -> S) -> Self {
        Self {
            coords: self.coords.iter().map(f).collect(),
            labels: self.labels.clone(),
        }
    }
}

impl<S: fmt::Display> fmt::Display for Vector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// `⊕X`; the empty sum is `0_V`.
pub fn v_sup<'a, S: CompleteSemiring + 'a>(
    dim: usize,
    xs: impl IntoIterator<Item = &'a Vector<S>>,
) -> Result<Vector<S>> {
    xs.into_iter()
        .try_fold(Vector::zero(dim), |acc, x| acc.oplus(x))
}

/// `∧X`; the empty meet is the all-top vector of the completion.
pub fn v_inf<'a, S: CompleteSemiring + 'a>(
    dim: usize,
    xs: impl IntoIterator<Item = &'a Vector<S>>,
) -> Result<Vector<S>> {
    xs.into_iter()
        .try_fold(Vector::top(dim), |acc, x| acc.meet(x))
}

/// Anything that can receive the values of a linear map: scalars (as the
/// one-dimensional semimodule `K̂`) and vectors.
pub trait Semimodule<S>: Clone + PartialEq + fmt::Display {
    /// The zero of the semimodule `self` lives in.
    fn zero_like(&self) -> Self;
    fn join(&self, other: &Self) -> Result<Self>;
    fn act(&self, k: &S) -> Self;
}

impl<S: CompleteSemiring> Semimodule<S> for S {
    fn zero_like(&self) -> Self {
        S::zero()
    }

    fn join(&self, other: &Self) -> Result<Self> {
        Ok(self.oplus(other))
    }

    fn act(&self, k: &S) -> Self {
        k.otimes(self)
    }
}

impl<S: CompleteSemiring> Semimodule<S> for Vector<S> {
    fn zero_like(&self) -> Self {
        let mut z = Vector::zero(self.dim());
        z.labels = self.labels.clone();
        z
    }

    fn join(&self, other: &Self) -> Result<Self> {
        self.oplus(other)
    }

    fn act(&self, k: &S) -> Self {
        self.scale(k)
    }
}

/// Generators of a finitely generated subsemimodule `W`. Zero generators are
/// dropped on construction since they contribute only `⊕∅`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanBasis<S> {
    dim: usize,
    generators: Vec<Vector<S>>,
}

impl<S: CompleteSemiring> SpanBasis<S> {
    pub fn new(dim: usize, generators: Vec<Vector<S>>) -> Result<Self> {
        for g in &generators {
            g.check_dim(dim)?;
        }
        Ok(Self {
            dim,
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Vector<S>] {
        &self.generators
    }

    pub fn count(&self) -> usize {
        self.generators.len()
    }

    /// `⊕ kᵢ ⊙ wᵢ`.
    pub fn combine(&self, coefficients: &[S]) -> Result<Vector<S>> {
        if coefficients.len() != self.count() {
            return Err(Error::DimensionMismatch {
                expected: self.count(),
                found: coefficients.len(),
            });
        }
        let scaled: Vec<Vector<S>> = self
            .generators
            .iter()
            .zip(coefficients)
            .map(|(g, k)| g.scale(k))
            .collect();
        v_sup(self.dim, &scaled)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Projection<S> {
    /// Greatest element of the span below `y`.
    pub projection: Vector<S>,
    /// `y` lies in the span.
    pub member: bool,
    /// The greatest `kᵢ` with `kᵢ ⊙ wᵢ ⪯ y`.
    pub coefficients: Vec<S>,
}

/// Projects `y` onto the span of `w` from below.
///
/// Each coefficient is the residual `kᵢ = ∧ⱼ (yⱼ / wᵢⱼ)`. Coordinates with
/// `wᵢⱼ = 0` impose no constraint; a top entry `wᵢⱼ` forces `kᵢ = 0` unless
/// `yⱼ` is also top, because `0 ⊙ ∞ = 0` is the only product below a finite value.
pub fn project_onto_span<S: CompleteSemiring>(
    y: &Vector<S>,
    w: &SpanBasis<S>,
) -> Result<Projection<S>> {
    y.check_dim(w.dim())?;
    let coefficients: Vec<S> = w
        .generators()
        .iter()
        .map(|g| {
            let residuals: Vec<S> = y
                .coords()
                .iter()
                .zip(g.coords())
                .map(|(yj, wj)| S::greatest_multiplier(yj, wj))
                .collect();
            big_inf(&residuals)
        })
        .collect();
    let mut projection = w.combine(&coefficients)?;
    projection.labels = merge_labels(&projection.labels, &y.labels)?;
    let member = projection.coords() == y.coords();
    Ok(Projection {
        projection,
        member,
        coefficients,
    })
}

/// Largest set enumerated by the all-subset checkers.
pub const MAX_SUBSET_ENUMERATION: usize = 16;

pub(crate) fn check_enumerable(n: usize) -> Result<()> {
    if n > MAX_SUBSET_ENUMERATION {
        return Err(Error::TooLarge(format!(
            "{n} items to enumerate subsets of (at most {MAX_SUBSET_ENUMERATION})"
        )));
    }
    Ok(())
}

fn scalar_set<'a, S: fmt::Display + 'a>(xs: impl Iterator<Item = &'a S>) -> String {
    let v: Vec<String> = xs.map(|s| s.to_string()).collect();
    format!("{{{}}}", v.join(", "))
}

/// Checks the b-space law `(∧Q) ⊙ x = ∧(Q ⊙ x)` for every nonempty
/// `Q ⊆ scalars` and every sample `x` other than `∞`, together with
/// `(⊕Q) ⊙ x = ⊕(Q ⊙ x)` and `k ⊙ (⊕X) = ⊕(k ⊙ X)` over all subsets.
pub fn check_b_space_axioms<S: CompleteSemiring>(
    samples: &[Vector<S>],
    scalars: &[S],
) -> Result<Report> {
    let Some(first) = samples.first() else {
        return Err(Error::EmptyInput("b-space samples"));
    };
    let dim = first.dim();
    for s in samples {
        s.check_dim(dim)?;
    }
    check_enumerable(scalars.len())?;
    check_enumerable(samples.len())?;

    let mut report = Report::new();
    let finite: Vec<&Vector<S>> = samples.iter().filter(|x| !x.is_top()).collect();
    let skipped = samples.len() - finite.len();
    if skipped > 0 {
        report
            .notes
            .push(format!("skipped {skipped} sample(s) equal to sup V"));
    }

    let mut meet_law = Check::new("meet law (inf Q) x = inf(Q x)");
    let mut sup_law = Check::new("scalar sums (sup Q) x = sup(Q x)");
    for mask in subsets(scalars.len()) {
        let q: Vec<&S> = members(scalars, mask).collect();
        let q_inf = big_inf(q.iter().copied());
        let q_sup = big_sup(q.iter().copied());
        for x in &finite {
            let scaled: Vec<Vector<S>> = q.iter().map(|k| x.scale(k)).collect();
            if mask != 0 {
                let lhs = x.scale(&q_inf);
                let rhs = v_inf(dim, &scaled)?;
                meet_law.record(lhs == rhs, || {
                    format!("Q = {}, x = {x}", scalar_set(q.iter().copied()))
                });
            }
            let lhs = x.scale(&q_sup);
            let rhs = v_sup(dim, &scaled)?;
            sup_law.record(lhs == rhs, || {
                format!("Q = {}, x = {x}", scalar_set(q.iter().copied()))
            });
        }
    }
    report.push(meet_law);
    report.push(sup_law);

    let mut vec_law = Check::new("vector sums k (sup X) = sup(k X)");
    for mask in subsets(samples.len()) {
        let xs: Vec<&Vector<S>> = members(samples, mask).collect();
        let total = v_sup(dim, xs.iter().copied())?;
        for k in scalars {
            let scaled: Vec<Vector<S>> = xs.iter().map(|x| x.scale(k)).collect();
            let rhs = v_sup(dim, &scaled)?;
            vec_law.record(total.scale(k) == rhs, || {
                let v: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
                format!("k = {k}, X = {{{}}}", v.join(", "))
            });
        }
    }
    report.push(vec_law);
    Ok(report)
}
