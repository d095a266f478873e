//! Linear functionals given by residuation, `x*(y) = ∧{k ∈ K | y ⪯ k ⊙ x}`.
//!
//! Every nonzero a-linear functional on `K^n` is `x*` for exactly one
//! representer `x` in the completion, so functionals are stored by their
//! representer and equality of functionals is equality of representers.
//! `x*` is order-reversing in `x`, which is why the pointwise supremum of a
//! family corresponds to the infimum of the representers.

use std::fmt;

use crate::error::{Error, Result};
use crate::report::{members, subsets, Check, Report};
use crate::scalars::{big_sup, CompleteSemiring};
use crate::semimodule::{check_enumerable, v_inf, v_sup, Semimodule, SpanBasis, Vector};

/// `x*(y)`: the least scalar `k` with `y ⪯ k ⊙ x`.
///
/// On a chain this is the largest of the coordinate residuals. A coordinate
/// with `yᵢ = 0` imposes nothing, so `x*(0_V) = 0`; a coordinate with
/// `xᵢ = 0 ≠ yᵢ` admits no `k` and forces the top.
pub fn star_eval<S: CompleteSemiring>(x: &Vector<S>, y: &Vector<S>) -> Result<S> {
    y.check_dim(x.dim())?;
    let residuals: Vec<S> = y
        .coords()
        .iter()
        .zip(x.coords())
        .map(|(yi, xi)| S::least_multiplier(yi, xi))
        .collect();
    Ok(big_sup(&residuals))
}

/// An a-linear functional `x*`, held by its representer `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Functional<S> {
    representer: Vector<S>,
}

impl<S: CompleteSemiring> Functional<S> {
    pub fn new(representer: Vector<S>) -> Self {
        Self { representer }
    }

    pub fn representer(&self) -> &Vector<S> {
        &self.representer
    }

    pub fn into_representer(self) -> Vector<S> {
        self.representer
    }

    pub fn dim(&self) -> usize {
        self.representer.dim()
    }

    pub fn eval(&self, y: &Vector<S>) -> Result<S> {
        star_eval(&self.representer, y)
    }

    /// `∞* ≡ 0`.
    pub fn is_zero_functional(&self) -> bool {
        self.representer.is_top()
    }
}

impl<S: fmt::Display> fmt::Display for Functional<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*", self.representer)
    }
}

/// Recovers the representer of a nonzero a-linear functional from its values.
///
/// The representer is `x = ⊕{y | f(y) ⪯ 1}`. By monotonicity the supremum in
/// coordinate `i` is reached on multiples of the unit vector `eᵢ`, so
/// `xᵢ = ⊕{k | k ⊙ f(eᵢ) ⪯ 1}`: the inverse of `f(eᵢ)` when it is finite,
/// `+inf` when `f(eᵢ) = -inf` and `-inf` when `f(eᵢ) = +inf`.
pub fn recover_representer<S, F>(f: F, dim: usize) -> Result<Vector<S>>
where
    S: CompleteSemiring,
    F: Fn(&Vector<S>) -> S,
{
    let units: Vec<Vector<S>> = (0..dim).map(|i| Vector::unit(dim, i)).collect();
    let values: Vec<S> = units.iter().map(&f).collect();
    if values.iter().all(S::is_zero) {
        return Err(Error::ZeroFunctional);
    }
    let x = Vector::new(
        values
            .iter()
            .map(|v| S::greatest_multiplier(&S::one(), v))
            .collect(),
    );
    for (i, (e, v)) in units.iter().zip(&values).enumerate() {
        if star_eval(&x, e)? != *v {
            return Err(Error::RepresenterMismatch { probe: i });
        }
    }
    Ok(x)
}

/// [`recover_representer`], then confirms `x*` agrees with `f` on `probes`.
pub fn recover_representer_checked<S, F>(
    f: F,
    dim: usize,
    probes: &[Vector<S>],
) -> Result<Vector<S>>
where
    S: CompleteSemiring,
    F: Fn(&Vector<S>) -> S,
{
    let x = recover_representer(&f, dim)?;
    for (i, p) in probes.iter().enumerate() {
        if star_eval(&x, p)? != f(p) {
            return Err(Error::RepresenterMismatch { probe: i });
        }
    }
    Ok(x)
}

/// Extends the functional with `f(wᵢ) = values[i]` from the span `W` to all of `V`.
///
/// The representer is `x = ⊕ᵢ values[i]⁻¹ ⊙ wᵢ`, the largest element of `W`
/// on which `f ⪯ 1`. Its functional is the greatest a-linear functional
/// below the prescription on the generators; if it misses a prescribed
/// value, no a-linear functional on `W` takes those values.
pub fn extend_functional<S: CompleteSemiring>(
    w: &SpanBasis<S>,
    values: &[S],
    ambient_dim: usize,
) -> Result<Functional<S>> {
    if values.len() != w.count() {
        return Err(Error::DimensionMismatch {
            expected: w.count(),
            found: values.len(),
        });
    }
    if ambient_dim != w.dim() {
        return Err(Error::DimensionMismatch {
            expected: ambient_dim,
            found: w.dim(),
        });
    }
    let inverses: Vec<S> = values
        .iter()
        .map(|v| S::greatest_multiplier(&S::one(), v))
        .collect();
    let x = w.combine(&inverses)?;
    for (i, (g, v)) in w.generators().iter().zip(values).enumerate() {
        if star_eval(&x, g)? != *v {
            return Err(Error::InconsistentValues { index: i });
        }
    }
    Ok(Functional::new(x))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Separation<S> {
    pub functional: Functional<S>,
    /// `x*` did not separate and `y*` was used instead.
    pub used_fallback: bool,
}

/// Finds a functional with `f(x) ≠ f(y)`, trying `x*` and then `y*`.
///
/// If neither separates, then `x*(y) ⪯ x*(x) ⪯ 1` gives `y ⪯ x` and
/// symmetrically `x ⪯ y`. Over `{0, 1}` that argument breaks down (every
/// nonzero `x` has the same `x*`), which is reported as [`Error::NotSeparated`].
pub fn separate_points<S: CompleteSemiring>(x: &Vector<S>, y: &Vector<S>) -> Result<Separation<S>> {
    y.check_dim(x.dim())?;
    if x.coords() == y.coords() {
        return Err(Error::EqualPoints);
    }
    if star_eval(x, x)? != star_eval(x, y)? {
        return Ok(Separation {
            functional: Functional::new(x.clone()),
            used_fallback: false,
        });
    }
    if star_eval(y, x)? != star_eval(y, y)? {
        return Ok(Separation {
            functional: Functional::new(y.clone()),
            used_fallback: true,
        });
    }
    Err(Error::NotSeparated)
}

/// `p(y) = sup_α x_α*(y)`, represented by `∧_α x_α`.
pub fn pointwise_sup<S: CompleteSemiring>(fs: &[Functional<S>]) -> Result<Functional<S>> {
    let Some(first) = fs.first() else {
        return Err(Error::EmptyInput("family of functionals"));
    };
    let dim = first.dim();
    for f in fs {
        f.representer().check_dim(dim)?;
    }
    let x = v_inf(dim, fs.iter().map(Functional::representer))?;
    Ok(Functional::new(x))
}

fn vector_set<'a, T: fmt::Display + 'a>(xs: impl Iterator<Item = &'a T>) -> String {
    let v: Vec<String> = xs.map(|x| x.to_string()).collect();
    format!("{{{}}}", v.join(", "))
}

/// Checks `p(⊕X) = ⊕p(X)` over every subset `X` of `test_vectors` (the empty
/// one included) and `p(k ⊙ y) = k ⊙ p(y)` for every non-top `k` in `scalars`.
///
/// Over a finite semimodule, with `test_vectors` the whole carrier, this
/// decides a-linearity; otherwise it is a sampled check.
pub fn check_a_linear<S, O, F>(map: F, test_vectors: &[Vector<S>], scalars: &[S]) -> Result<Report>
where
    S: CompleteSemiring,
    O: Semimodule<S>,
    F: Fn(&Vector<S>) -> O,
{
    let Some(first) = test_vectors.first() else {
        return Err(Error::EmptyInput("test vectors"));
    };
    let dim = first.dim();
    for t in test_vectors {
        t.check_dim(dim)?;
    }
    check_enumerable(test_vectors.len())?;

    let outputs: Vec<O> = test_vectors.iter().map(&map).collect();
    let out_zero = outputs[0].zero_like();

    let mut sups = Check::new("preserves sups of all subsets");
    for mask in subsets(test_vectors.len()) {
        let lhs = map(&v_sup(dim, members(test_vectors, mask))?);
        let rhs = members(&outputs, mask).try_fold(out_zero.clone(), |acc, o| acc.join(o))?;
        sups.record(lhs == rhs, || {
            format!(
                "X = {}: p(sup X) = {lhs}, sup p(X) = {rhs}",
                vector_set(members(test_vectors, mask))
            )
        });
    }

    let mut homog = Check::new("homogeneous");
    for k in scalars.iter().filter(|k| !k.is_top()) {
        for (y, py) in test_vectors.iter().zip(&outputs) {
            let lhs = map(&y.scale(k));
            let rhs = py.act(k);
            homog.record(lhs == rhs, || format!("k = {k}, y = {y}: {lhs} vs {rhs}"));
        }
    }

    let mut report = Report::new();
    report.push(sups);
    report.push(homog);
    Ok(report)
}

/// A finite sample of the graph of a map `V → W`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearMapSample<S, O> {
    pairs: Vec<(Vector<S>, O)>,
}

impl<S: CompleteSemiring, O: Semimodule<S>> LinearMapSample<S, O> {
    pub fn new(pairs: Vec<(Vector<S>, O)>) -> Result<Self> {
        for (i, (a, _)) in pairs.iter().enumerate() {
            if let Some(j) = pairs[..i].iter().position(|(b, _)| b == a) {
                return Err(Error::DuplicateInput {
                    first: j,
                    second: i,
                });
            }
        }
        Ok(Self { pairs })
    }

    /// Samples `map` on `inputs`.
    pub fn from_map(inputs: &[Vector<S>], map: impl Fn(&Vector<S>) -> O) -> Result<Self> {
        Self::new(inputs.iter().map(|x| (x.clone(), map(x))).collect())
    }

    pub fn pairs(&self) -> &[(Vector<S>, O)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Checks that the sampled graph is closed under sums: for every nonempty
/// subset of pairs, `(⊕ inputs, ⊕ outputs)` is again a pair of the sample.
/// Subsets are visited by increasing size, so a reported witness is minimal.
pub fn graph_sup_closed<S, O>(g: &LinearMapSample<S, O>) -> Result<Report>
where
    S: CompleteSemiring,
    O: Semimodule<S>,
{
    let Some((x0, y0)) = g.pairs().first() else {
        return Err(Error::EmptyInput("graph sample"));
    };
    check_enumerable(g.len())?;
    let dim = x0.dim();
    let inputs: Vec<Vector<S>> = g.pairs().iter().map(|(x, _)| x.clone()).collect();
    let outputs: Vec<O> = g.pairs().iter().map(|(_, y)| y.clone()).collect();

    let mut masks: Vec<u64> = subsets(g.len()).skip(1).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));

    let mut closed = Check::new("graph closed under sums");
    for mask in masks {
        let sx = v_sup(dim, members(&inputs, mask))?;
        let sy = members(&outputs, mask).try_fold(y0.zero_like(), |acc, o| acc.join(o))?;
        let present = g.pairs().iter().any(|(x, y)| *x == sx && *y == sy);
        closed.record(present, || {
            let idx: Vec<String> = (0..g.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| i.to_string())
                .collect();
            format!("pairs {{{}}} sum to ({sx}, {sy})", idx.join(", "))
        });
    }
    let mut report = Report::new();
    report.push(closed);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Boolean;
    use crate::{ExtendedScalar as E, FinVector};

    fn v(xs: &[E]) -> FinVector {
        Vector::new(xs.to_vec())
    }

    fn i(n: i64) -> E {
        E::int(n)
    }

    /// Least k in {-inf} ∪ [-40, 40] with y ⪯ k ⊙ x, scanning upwards; +inf if none.
    fn scan_least_k(x: &FinVector, y: &FinVector) -> E {
        let candidates = std::iter::once(E::Bottom).chain((-40..=40).map(E::int));
        for k in candidates {
            if y.precedes(&x.scale(&k)).unwrap() {
                return k;
            }
        }
        E::Top
    }

    #[test]
    fn star_eval_examples_match_scan() {
        let x = v(&[i(0), i(-1), i(2)]);
        let y = v(&[i(1), i(1), i(1)]);
        assert_eq!(scan_least_k(&x, &y), i(2));
        assert_eq!(star_eval(&x, &y).unwrap(), i(2));

        let x = v(&[i(0), i(0)]);
        assert_eq!(star_eval(&x, &FinVector::zero(2)).unwrap(), E::Bottom);

        let x = v(&[E::Bottom, i(0)]);
        let y = v(&[i(1), i(0)]);
        assert_eq!(scan_least_k(&x, &y), E::Top);
        assert_eq!(star_eval(&x, &y).unwrap(), E::Top);
    }

    #[test]
    fn star_eval_dimension_mismatch() {
        assert!(matches!(
            star_eval(&v(&[i(0)]), &v(&[i(0), i(1)])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn recover_hidden_representer() {
        let hidden = v(&[i(1), i(-2), i(0)]);
        let f = |y: &FinVector| star_eval(&hidden, y).unwrap();
        assert_eq!(recover_representer(f, 3).unwrap(), hidden);
    }

    #[test]
    fn recover_sup_functional() {
        let sup = |y: &FinVector| big_sup(y.coords());
        assert_eq!(
            recover_representer(sup, 4).unwrap(),
            FinVector::zero(4).map(|_| i(0))
        );
    }

    #[test]
    fn recover_representer_in_completion() {
        // f(e_1) = -inf needs x_1 = +inf
        let hidden = v(&[E::Top, i(3)]);
        let f = |y: &FinVector| star_eval(&hidden, y).unwrap();
        assert_eq!(f(&FinVector::unit(2, 0)), E::Bottom);
        assert_eq!(recover_representer(f, 2).unwrap(), hidden);
    }

    #[test]
    fn zero_functional_has_no_representer() {
        let f = |_: &FinVector| E::Bottom;
        assert_eq!(recover_representer(f, 3), Err(Error::ZeroFunctional));
    }

    #[test]
    fn non_linear_oracle_is_caught_on_probes() {
        // a-linear on unit vectors but not elsewhere
        let f = |y: &FinVector| {
            let s = big_sup(y.coords());
            if y.coords().iter().filter(|c| c.is_finite()).count() > 1 {
                s.otimes(&i(1))
            } else {
                s
            }
        };
        let probes = vec![v(&[i(0), i(0)])];
        assert_eq!(
            recover_representer_checked(f, 2, &probes),
            Err(Error::RepresenterMismatch { probe: 0 })
        );
    }

    #[test]
    fn extension_examples() {
        let w = SpanBasis::new(2, vec![v(&[i(0), i(0)])]).unwrap();
        let f = extend_functional(&w, &[i(0)], 2).unwrap();
        assert_eq!(f.representer(), &v(&[i(0), i(0)]));
        let y = v(&[i(3), i(1)]);
        assert_eq!(scan_least_k(f.representer(), &y), i(3));
        assert_eq!(f.eval(&y).unwrap(), i(3));

        let g = v(&[i(0), E::Bottom]);
        let w = SpanBasis::new(2, vec![g.clone()]).unwrap();
        let f = extend_functional(&w, &[i(2)], 2).unwrap();
        assert_eq!(f.representer(), &v(&[i(-2), E::Bottom]));
        assert_eq!(f.eval(&g).unwrap(), i(2));
        assert_eq!(scan_least_k(f.representer(), &g), i(2));
        // the extension is not unique: (-2, +inf) restricts to the same values
        assert_eq!(star_eval(&v(&[i(-2), E::Top]), &g).unwrap(), i(2));
    }

    #[test]
    fn inconsistent_prescription_rejected() {
        let w = SpanBasis::new(2, vec![v(&[i(0), i(0)]), v(&[i(1), i(1)])]).unwrap();
        assert_eq!(
            extend_functional(&w, &[i(0), i(0)], 2),
            Err(Error::InconsistentValues { index: 0 })
        );
        assert!(extend_functional(&w, &[i(0), i(1)], 2).is_ok());
    }

    #[test]
    fn extension_of_zero_values_is_zero_on_span() {
        let w = SpanBasis::new(2, vec![v(&[i(0), E::Bottom])]).unwrap();
        let f = extend_functional(&w, &[E::Bottom], 2).unwrap();
        assert_eq!(f.representer(), &v(&[E::Top, E::Bottom]));
        assert_eq!(f.eval(&v(&[i(5), E::Bottom])).unwrap(), E::Bottom);
    }

    #[test]
    fn separation_examples() {
        let x = v(&[i(0), i(0)]);
        let y = v(&[i(1), i(0)]);
        let s = separate_points(&x, &y).unwrap();
        assert!(!s.used_fallback);
        assert_eq!(s.functional.eval(&x).unwrap(), i(0));
        assert_eq!(s.functional.eval(&y).unwrap(), i(1));

        let s = separate_points(&y, &x).unwrap();
        assert!(s.used_fallback);
        assert_eq!(s.functional.representer(), &x);
        assert_eq!(s.functional.eval(&y).unwrap(), i(1));
        assert_eq!(s.functional.eval(&x).unwrap(), i(0));

        let z = FinVector::zero(2);
        let y = v(&[i(0), E::Bottom]);
        let s = separate_points(&z, &y).unwrap();
        assert_ne!(
            s.functional.eval(&z).unwrap(),
            s.functional.eval(&y).unwrap()
        );
        assert_eq!(star_eval(&y, &y).unwrap(), i(0));
        assert_eq!(star_eval(&y, &z).unwrap(), E::Bottom);

        assert_eq!(separate_points(&x, &x.clone()), Err(Error::EqualPoints));
    }

    #[test]
    fn boolean_functionals_cannot_separate() {
        let b = |xs: &[bool]| Vector::new(xs.iter().map(|&x| Boolean(x)).collect());
        assert_eq!(
            separate_points(&b(&[true, false]), &b(&[true, true])),
            Err(Error::NotSeparated)
        );
    }

    #[test]
    fn pointwise_sup_examples() {
        let f = Functional::new(v(&[i(0), i(5)]));
        let g = Functional::new(v(&[i(5), i(0)]));
        let p = pointwise_sup(&[f.clone(), g.clone()]).unwrap();
        assert_eq!(p.representer(), &v(&[i(0), i(0)]));
        let probe = v(&[i(1), i(1)]);
        let direct = f.eval(&probe).unwrap().oplus(&g.eval(&probe).unwrap());
        assert_eq!(direct, i(1));
        assert_eq!(p.eval(&probe).unwrap(), direct);

        assert_eq!(pointwise_sup(std::slice::from_ref(&f)).unwrap(), f);
        assert_eq!(pointwise_sup(&[f.clone(), f.clone()]).unwrap(), f);
        assert!(matches!(pointwise_sup::<E>(&[]), Err(Error::EmptyInput(_))));
    }

    fn six_vectors() -> Vec<FinVector> {
        vec![
            v(&[i(1), i(0), i(-3)]),
            v(&[E::Bottom, i(2), i(2)]),
            v(&[i(4), E::Bottom, i(0)]),
            v(&[i(-1), i(-1), E::Top]),
            FinVector::zero(3),
            v(&[i(0), i(7), i(1)]),
        ]
    }

    #[test]
    fn star_is_a_linear() {
        let x = v(&[i(2), E::Top, i(-1)]);
        let scalars: Vec<E> = vec![E::Bottom, i(-2), i(0), i(3), E::Top];
        let report = check_a_linear(
            |y: &FinVector| star_eval(&x, y).unwrap(),
            &six_vectors(),
            &scalars,
        )
        .unwrap();
        assert!(report.passed(), "{report}");
        assert_eq!(report.checks[0].cases, 64);
        assert_eq!(report.checks[1].cases, 4 * 6);
    }

    #[test]
    fn negation_is_not_a_linear() {
        let report =
            check_a_linear(|y: &FinVector| y.map(E::reflect), &six_vectors(), &[i(1)]).unwrap();
        assert!(!report.passed());
        assert!(report.checks[0].witness.is_some());
    }

    #[test]
    fn scaling_is_a_linear() {
        let report = check_a_linear(
            |y: &FinVector| y.scale(&i(3)),
            &six_vectors(),
            &[E::Bottom, i(-1), i(2)],
        )
        .unwrap();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn graph_closure() {
        let one = |e: E| v(&[e]);
        let g = LinearMapSample::new(vec![
            (v(&[i(0), E::Bottom]), one(i(0))),
            (v(&[E::Bottom, i(0)]), one(i(0))),
        ])
        .unwrap();
        let report = graph_sup_closed(&g).unwrap();
        assert!(!report.passed());
        let w = report.checks[0].witness.as_deref().unwrap();
        assert!(w.starts_with("pairs {0, 1}"), "{w}");

        let single = LinearMapSample::new(vec![(v(&[i(1)]), one(i(1)))]).unwrap();
        assert!(graph_sup_closed(&single).unwrap().passed());
    }

    #[test]
    fn duplicate_graph_inputs_rejected() {
        let p = (v(&[i(1)]), i(1));
        assert_eq!(
            LinearMapSample::new(vec![p.clone(), p]),
            Err(Error::DuplicateInput {
                first: 0,
                second: 1
            })
        );
    }

    #[test]
    fn boolean_star_is_a_linear_but_not_injective() {
        let carrier: Vec<Vector<Boolean>> = (0..8u8)
            .map(|m| Vector::new((0..3).map(|j| Boolean(m >> j & 1 == 1)).collect()))
            .collect();
        let mut seen = Vec::new();
        for x in &carrier {
            let report = check_a_linear(
                |y: &Vector<Boolean>| star_eval(x, y).unwrap(),
                &carrier,
                &Boolean::all(),
            )
            .unwrap();
            assert!(report.passed(), "{x}: {report}");
            let table: Vec<Boolean> = carrier.iter().map(|y| star_eval(x, y).unwrap()).collect();
            seen.push(table);
        }
        // every x* is y ↦ [y ≠ 0]
        assert!(seen.windows(2).all(|w| w[0] == w[1]));
    }
}
