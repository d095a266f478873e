//! Seeded property suites behind `tropical selftest`.
//!
//! Each suite draws from its own stream of the seeded generator, so a suite's
//! outcome does not depend on which suites ran before it.

use std::fmt;

use crate::error::{Error, Result};
use crate::functional::{
    check_a_linear, extend_functional, graph_sup_closed, pointwise_sup, recover_representer,
    separate_points, star_eval, Functional, LinearMapSample,
};
use crate::order::{b_completion, dm_completion, naturally_labelled_posets, FiniteIS};
use crate::random::{labels, Gen};
use crate::report::{Check, Report};
use crate::scalars::{big_sup, check_semiring_axioms, Boolean, SemiringDescriptor};
use crate::semialgebra::{
    check_unit_residual, idempotent_integral, one_star, riesz_representer, scalar_product, Element,
};
use crate::semimodule::{check_b_space_axioms, v_sup, SpanBasis, Vector};
use crate::{AlgebraElement, ExtendedScalar as E, FinVector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub seed: u64,
    /// Largest dimension drawn.
    pub dim: usize,
    /// Random instances per suite.
    pub samples: usize,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            seed: 42,
            dim: 5,
            samples: 200,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub report: Report,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scoreboard {
    pub config: Config,
    pub suites: Vec<SuiteResult>,
}

impl Scoreboard {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(|s| s.report.passed())
    }

    pub fn suite(&self, name: &str) -> Option<&Report> {
        self.suites
            .iter()
            .find(|s| s.name == name)
            .map(|s| &s.report)
    }
}

impl fmt::Display for Scoreboard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.config;
        writeln!(
            f,
            "selftest seed={} dim={} samples={}",
            c.seed, c.dim, c.samples
        )?;
        for s in &self.suites {
            let cases: usize = s.report.checks.iter().map(|c| c.cases).sum();
            let status = if s.report.passed() { "PASS" } else { "FAIL" };
            writeln!(
                f,
                "{:<36} {status} ({} checks, {cases} cases)",
                s.name,
                s.report.checks.len()
            )?;
            for check in s.report.failures() {
                writeln!(f, "  {check}")?;
            }
            for note in &s.report.notes {
                writeln!(f, "  note: {note}")?;
            }
        }
        let ok = self.suites.iter().filter(|s| s.report.passed()).count();
        writeln!(f, "{ok}/{} suites pass", self.suites.len())
    }
}

type Suite = fn(&mut Gen, &Config) -> Result<Report>;

pub const SUITES: [(&str, Suite); 11] = [
    ("semiring axioms", semiring_axioms),
    ("b-space axioms", b_space_axioms),
    ("representer recovery", representer_recovery),
    ("a-linearity of x*", a_linearity),
    ("functional extension", functional_extension),
    ("point separation", point_separation),
    ("pointwise sup of functionals", pointwise_sups),
    ("graph closure", graph_closure),
    ("unit residual x*(y) = 1*(y x^-1)", unit_residual),
    (
        "scalar-product representation",
        scalar_product_representation,
    ),
    ("lattice completion", lattice_completion),
];

pub fn run(config: &Config) -> Result<Scoreboard> {
    if config.dim == 0 {
        return Err(Error::EmptyInput("dimension"));
    }
    let mut suites = Vec::with_capacity(SUITES.len());
    for (stream, (name, suite)) in SUITES.iter().enumerate() {
        let mut g = Gen::with_stream(config.seed, stream as u64);
        suites.push(SuiteResult {
            name,
            report: suite(&mut g, config)?,
        });
    }
    Ok(Scoreboard {
        config: config.clone(),
        suites,
    })
}

/// Adds the checks of `r` into `acc`, merging checks with the same name.
fn absorb(acc: &mut Report, prefix: &str, r: Report) {
    for c in r.checks {
        let name = format!("{prefix}{}", c.name);
        let slot = match acc.checks.iter().position(|x| x.name == name) {
            Some(i) => &mut acc.checks[i],
            None => {
                acc.push(Check::new(name));
                acc.checks.last_mut().expect("just pushed")
            }
        };
        slot.cases += c.cases;
        if !c.passed && slot.passed {
            slot.passed = false;
            slot.witness = c.witness;
        }
    }
    acc.notes.extend(r.notes);
}

fn show<T: fmt::Display>(r: &Result<T>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => format!("error: {e}"),
    }
}

fn star(x: &FinVector, y: &FinVector) -> E {
    star_eval(x, y).expect("equal dimensions")
}

fn semiring_axioms(g: &mut Gen, _: &Config) -> Result<Report> {
    let mut report = Report::new();
    let boolean = check_semiring_axioms(&SemiringDescriptor::boolean(), &Boolean::all())?;
    absorb(&mut report, "boolean: ", boolean);
    let completed = SemiringDescriptor::completed_max_plus();
    let fixed = [E::Bottom, E::int(-2), E::int(0), E::int(1), E::Top];
    absorb(
        &mut report,
        "R^_max: ",
        check_semiring_axioms(&completed, &fixed)?,
    );
    let mut sample = vec![E::Bottom, E::Top];
    sample.extend((0..3).map(|_| g.fraction()));
    absorb(
        &mut report,
        "R^_max: ",
        check_semiring_axioms(&completed, &sample)?,
    );
    let field = SemiringDescriptor::max_plus();
    let sample: Vec<E> = std::iter::once(E::Bottom)
        .chain((0..4).map(|_| g.fraction()))
        .collect();
    absorb(
        &mut report,
        "R_max: ",
        check_semiring_axioms(&field, &sample)?,
    );
    Ok(report)
}

fn b_space_axioms(g: &mut Gen, cfg: &Config) -> Result<Report> {
    let mut report = Report::new();
    let rounds = (cfg.samples / 20).max(1);
    for _ in 0..rounds {
        let d = g.range(1, cfg.dim);
        let samples: Vec<FinVector> = (0..5).map(|_| g.vector(d)).collect();
        let mut scalars = vec![E::int(0), E::int(1), E::int(-2)];
        scalars.extend((0..3).map(|_| g.scalar()));
        absorb(&mut report, "", check_b_space_axioms(&samples, &scalars)?);

        let mut laws = Report::new();
        let mut assoc = Check::new("sum associative");
        let mut comm = Check::new("sum commutative");
        let mut idem = Check::new("sum idempotent");
        let mut compat = Check::new("a (b x) = (a b) x");
        let mut distrib = Check::new("k (x + y) = k x + k y");
        for x in &samples {
            idem.record(x.oplus(x)? == *x, || x.to_string());
            for y in &samples {
                let xy = x.oplus(y)?;
                comm.record(xy == y.oplus(x)?, || format!("{x}, {y}"));
                for z in &samples {
                    let l = xy.oplus(z)?;
                    let r = x.oplus(&y.oplus(z)?)?;
                    assoc.record(l == r, || format!("{x}, {y}, {z}"));
                }
                for k in &scalars {
                    let l = xy.scale(k);
                    let r = x.scale(k).oplus(&y.scale(k))?;
                    distrib.record(l == r, || format!("k = {k}, {x}, {y}"));
                }
            }
            for a in &scalars {
                for b in &scalars {
                    let l = x.scale(b).scale(a);
                    let r = x.scale(&a.otimes(b));
                    compat.record(l == r, || format!("a = {a}, b = {b}, x = {x}"));
                }
            }
        }
        for c in [assoc, comm, idem, compat, distrib] {
            laws.push(c);
        }
        absorb(&mut report, "", laws);
    }
    let skipped = report.notes.len();
    report.notes.clear();
    if skipped > 0 {
        report.notes.push(format!(
            "{skipped} round(s) skipped samples equal to sup V for the meet law"
        ));
    }
    Ok(report)
}

fn representer_recovery(g: &mut Gen, cfg: &Config) -> Result<Report> {
    let mut round_trip = Check::new("recover(x*) = x");
    let mut probes_ok = Check::new("recovered functional agrees on probes");
    let mut zero = Check::new("zero functional reported");
    for _ in 0..cfg.samples {
        let d = g.range(1, cfg.dim);
        let x = g.vector(d);
        let f = |y: &FinVector| star(&x, y);
        let got = recover_representer(f, d);
        if x.is_top() {
            zero.record(got == Err(Error::ZeroFunctional), || show(&got));
            continue;
        }
        round_trip.record(got.as_ref() == Ok(&x), || {
            format!("x = {x}, got {}", show(&got))
        });
        if let Ok(r) = got {
            for _ in 0..20 {
                let p = g.vector(d);
                probes_ok.record(star(&r, &p) == f(&p), || format!("x = {x}, probe {p}"));
            }
        }
    }

    // Over {0, 1} every nonzero x has the same x*: y ↦ [y ≠ 0].
    let mut boolean_linear = Report::new();
    let mut greatest = Check::new("boolean: recovered representer is all ones");
    for d in 1..=3usize {
        let carrier: Vec<Vector<Boolean>> = (0..1u32 << d)
            .map(|m| Vector::new((0..d).map(|i| Boolean(m >> i & 1 == 1)).collect()))
            .collect();
        for x in carrier.iter().filter(|x| !x.is_zero()) {
            let f = |y: &Vector<Boolean>| star_eval(x, y).expect("equal dimensions");
            absorb(
                &mut boolean_linear,
                "boolean: x* ",
                check_a_linear(f, &carrier, &Boolean::all())?,
            );
            let r = recover_representer(f, d);
            greatest.record(r == Ok(Vector::constant(d, Boolean::ONE)), || {
                format!("x = {x}, got {}", show(&r))
            });
        }
    }

    let mut report = Report::new();
    for c in [round_trip, probes_ok, zero] {
        report.push(c);
    }
    absorb(&mut report, "", boolean_linear);
    report.push(greatest);
    Ok(report)
}

fn a_linearity(g: &mut Gen, cfg: &Config) -> Result<Report> {
    let mut report = Report::new();
    for _ in 0..cfg.samples {
        let d = g.range(1, cfg.dim);
        let x = g.vector(d);
        let tests: Vec<FinVector> = (0..6).map(|_| g.vector(d)).collect();
        let scalars: Vec<E> = (0..20).map(|_| g.scalar()).collect();
        absorb(
            &mut report,
            "",
            check_a_linear(|y: &FinVector| star(&x, y), &tests, &scalars)?,
        );
    }
    Ok(report)
}

fn functional_extension(g: &mut Gen, cfg: &Config) -> Result<Report> {
    let mut restricts = Check::new("extension restricts to prescribed values");
    let mut rejected = Check::new("inconsistent values rejected");
    for _ in 0..cfg.samples {
        let d = g.range(2, cfg.dim.max(2));
        let m = g.range(1, 4);
        let gens: Vec<FinVector> = (0..m).map(|_| g.vector(d)).collect();
        let span = SpanBasis::new(d, gens)?;
        if span.count() > 0 {
            let hidden = g.vector(d);
            let values: Vec<E> = span.generators().iter().map(|w| star(&hidden, w)).collect();
            let ext = extend_functional(&span, &values, d);
            let ok = ext.as_ref().is_ok_and(|f| {
                span.generators()
                    .iter()
                    .zip(&values)
                    .all(|(w, v)| star(f.representer(), w) == *v)
            });
            restricts.record(ok, || {
                format!("hidden {hidden}, values {values:?}: {}", show(&ext))
            });
        }

        // f(k w) = k f(w) for every a-linear f, so these values admit none.
        let mut w = g.vector(d);
        if !w.coords().iter().any(E::is_finite) {
            w = g.finite_vector(d);
        }
        let k = g.finite();
        let v = g.finite();
        let delta = E::int(if g.range(0, 1) == 0 {
            -g.int(1, 3)
        } else {
            g.int(1, 3)
        });
        let values = vec![v.clone(), k.otimes(&v).otimes(&delta)];
        let span = SpanBasis::new(d, vec![w.clone(), w.scale(&k)])?;
        let got = extend_functional(&span, &values, d);
        rejected.record(matches!(got, Err(Error::InconsistentValues { .. })), || {
            format!(
                "w = {w}, k = {k}, values ({}, {}): {}",
                values[0],
                values[1],
                show(&got)
            )
        });
    }
    let mut report = Report::new();
    report.push(restricts);
    report.push(rejected);
    Ok(report)
}

fn point_separation(g: &mut Gen, cfg: &Config) -> Result<Report> {
    let mut separates = Check::new("separating functional found");
    let mut fallback = 0;
    for _ in 0..cfg.samples {
        let d = g.range(1, cfg.dim);
        let (x, y) = g.distinct_pair(d);
        let got = separate_points(&x, &y);
        let ok = match &got {
            Ok(s) => {
                fallback += usize::from(s.used_fallback);
                s.functional.eval(&x)? != s.functional.eval(&y)?
            }
            Err(_) => false,
        };
        separates.record(ok, || {
            let r = got.clone().map(|s| s.functional);
            format!("x = {x}, y = {y}: {}", show(&r))
        });
    }
    let mut report = Report::new();
    report.push(separates);
    report
        .notes
        .push(format!("y* needed for {fallback} of {} pairs", cfg.samples));
    Ok(report)
}

fn pointwise_sups(g: &mut Gen, cfg: &Config) -> Result<Report> {
    let mut agrees = Check::new("sup of x_i* = (inf x_i)*");
    for _ in 0..cfg.samples {
        let d = g.range(1, cfg.dim);
        let r = g.range(1, 5);
        let fs: Vec<Functional<E>> = (0..r).map(|_| Functional::new(g.vector(d))).collect();
        let p = pointwise_sup(&fs)?;
        for _ in 0..20 {
            let y = g.vector(d);
            let values: Vec<E> = fs.iter().map(|f| star(f.representer(), &y)).collect();
            let lhs = big_sup(&values);
            let rhs = p.eval(&y)?;
            agrees.record(lhs == rhs, || {
                format!(
                    "representers {:?}, probe {y}: {lhs} vs {rhs}",
                    fs.iter().map(ToString::to_string).collect::<Vec<_>>()
                )
            });
        }
    }
    let mut report = Report::new();
    report.push(agrees);
    Ok(report)
}

/// `2^k` distinct vectors closed under sums: all sups of `k` generators,
/// generator `i` being the only one reaching `20` in coordinate `i`.
pub fn sup_closed_set(g: &mut Gen, dim: usize, k: usize) -> Vec<FinVector> {
    assert!(k <= dim);
    let gens: Vec<FinVector> = (0..k)
        .map(|i| {
            let mut c = g.finite_vector(dim).into_coords();
            c[i] = E::int(20);
            FinVector::new(c)
        })
        .collect();
    (0..1u32 << k)
        .map(|m| {
            let chosen = gens
                .iter()
                .enumerate()
                .filter(|(i, _)| m >> i & 1 == 1)
                .map(|(_, v)| v);
            v_sup(dim, chosen).expect("equal dimensions")
        })
        .collect()
}

fn graph_closure(g: &mut Gen, cfg: &Config) -> Result<Report> {
    let mut report = Report::new();
    let mut control = Check::new("non-linear control rejected");
    for _ in 0..(cfg.samples / 10).max(1) {
        let d = cfg.dim.max(3);
        let inputs = sup_closed_set(g, d, 3);
        let x = g.vector(d);
        let sample = LinearMapSample::from_map(&inputs, |y| star(&x, y))?;
        absorb(&mut report, "x*: ", graph_sup_closed(&sample)?);

        let total = |y: &FinVector| y.coords().iter().fold(E::int(0), |acc, c| acc.otimes(c));
        let bad = LinearMapSample::from_map(&inputs, total)?;
        let r = graph_sup_closed(&bad)?;
        control.record(!r.passed(), || {
            format!("coordinate product passed on {inputs:?}")
        });
    }
    report.push(control);
    Ok(report)
}

fn unit_residual(g: &mut Gen, cfg: &Config) -> Result<Report> {
    let mut holds = Check::new("x*(y) = 1*(y x^-1)");
    let mut rejects = Check::new("non-invertible x rejected");
    for _ in 0..cfg.samples {
        let n = g.range(1, cfg.dim.min(8));
        let xs = labels(n);
        let x = g.bounded_element(&xs);
        let y = g.element(&xs);
        let r = check_unit_residual(&x, &y);
        holds.record(r.as_ref().is_ok_and(|r| r.holds()), || {
            format!("x = {x}, y = {y}: {r:?}")
        });

        let mut v = x.values().to_vec();
        v[g.range(0, n - 1)] = if g.range(0, 1) == 0 {
            E::Bottom
        } else {
            E::Top
        };
        let singular = Element::new(v, xs)?;
        let r = check_unit_residual(&singular, &y);
        rejects.record(matches!(r, Err(Error::NotInvertible(_))), || {
            format!("x = {singular}: {r:?}")
        });
    }
    let mut report = Report::new();
    report.push(holds);
    report.push(rejects);
    Ok(report)
}

fn scalar_product_representation(g: &mut Gen, cfg: &Config) -> Result<Report> {
    let mut round_trip = Check::new("riesz(<., x>) = x");
    let mut sups = Check::new("<y1 + y2, x> = <y1, x> + <y2, x>");
    let mut homog = Check::new("<k y, x> = k <y, x>");
    let mut unit = Check::new("<1, x> = 1*(x)");
    let mut integral = Check::new("integral of x against 1 = max x");
    let sp = |a: &AlgebraElement, b: &AlgebraElement| scalar_product(a, b).expect("same labels");
    for _ in 0..cfg.samples {
        let n = g.range(1, cfg.dim.min(8));
        let xs = labels(n);
        let x = Element::new(g.topless_vector(n).into_coords(), xs.clone())?;
        let got = riesz_representer(|y: &AlgebraElement| sp(y, &x), &xs);
        let ok = if x.is_zero() {
            matches!(got, Err(Error::ZeroFunctional))
        } else {
            got.as_ref()
                .is_ok_and(|o| o.element == x && o.bounded == x.is_bounded_function())
        };
        round_trip.record(ok, || format!("x = {x}: {got:?}"));

        let (y1, y2) = (g.element(&xs), g.element(&xs));
        let lhs = sp(&y1.oplus(&y2)?, &x);
        sups.record(lhs == sp(&y1, &x).oplus(&sp(&y2, &x)), || {
            format!("y1 = {y1}, y2 = {y2}, x = {x}")
        });
        let k = g.scalar();
        if !k.is_top() {
            homog.record(sp(&y1.scale(&k), &x) == k.otimes(&sp(&y1, &x)), || {
                format!("k = {k}, y = {y1}, x = {x}")
            });
        }
        unit.record(sp(&Element::one(xs.clone()), &y1) == one_star(&y1), || {
            y1.to_string()
        });
        let max = y1.values().iter().fold(E::Bottom, |m, v| m.oplus(v));
        let int = idempotent_integral(&y1, &Element::one(xs))?;
        integral.record(int == max, || y1.to_string());
    }
    let mut report = Report::new();
    for c in [round_trip, sups, homog, unit, integral] {
        report.push(c);
    }
    Ok(report)
}

/// Checks a completion of `s` against the lattice laws and the original order.
pub fn completion_checks(s: &FiniteIS) -> Result<Report> {
    let dm = dm_completion(s)?;
    let e = &dm.embedding;
    let mut lattice = Check::new("completion is a complete lattice");
    lattice.record(dm.completed.is_complete_lattice(), || format!("{s:?}"));
    let mut embeds = Check::new("order embedding");
    embeds.record(dm.is_order_embedding(s), || format!("{s:?}"));
    let mut idem = Check::new("completing twice adds nothing");
    let again = dm_completion(&dm.completed)?;
    idem.record(again.is_isomorphism(&dm.completed), || format!("{s:?}"));
    let mut joins = Check::new("existing joins and meets preserved");
    for x in 0..s.len() {
        for y in 0..s.len() {
            let m = 1u64 << x | 1 << y;
            let (em, c) = (1u64 << e[x] | 1 << e[y], &dm.completed);
            let j_ok = s.join_of(m).is_none_or(|z| c.join_of(em) == Some(e[z]));
            let m_ok = s.meet_of(m).is_none_or(|z| c.meet_of(em) == Some(e[z]));
            joins.record(j_ok && m_ok, || {
                format!("{} and {} in {s:?}", s.label(x), s.label(y))
            });
        }
    }
    let b = b_completion(s)?;
    let mut b_top = Check::new("b-completion drops at most the top");
    let size_ok = b.completed.len() == dm.completed.len()
        || (b.completed.len() + 1 == dm.completed.len() && s.top().is_none());
    b_top.record(
        size_ok && b.completed.is_b_complete() && b.is_order_embedding(s),
        || format!("{s:?}"),
    );
    let mut report = Report::new();
    for c in [lattice, embeds, idem, joins, b_top] {
        report.push(c);
    }
    Ok(report)
}

fn lattice_completion(g: &mut Gen, cfg: &Config) -> Result<Report> {
    let mut report = Report::new();
    for n in 0..=5 {
        for s in naturally_labelled_posets(n)? {
            absorb(&mut report, "", completion_checks(&s)?);
        }
    }
    for _ in 0..(cfg.samples / 10).max(1) {
        let n = g.range(6, 8);
        absorb(&mut report, "", completion_checks(&g.poset(n))?);
    }
    let mut four = Check::new("2-antichain completes to 4 elements");
    let anti = FiniteIS::antichain(["a", "b"])?;
    four.record(dm_completion(&anti)?.completed.len() == 4, || "a, b".into());
    report.push(four);
    Ok(report)
}
