mod common;

use num_bigint::BigInt;
use proptest::prelude::*;
use tropical_functionals::order::cuts;
use tropical_functionals::text::{
    parse_functional, parse_functions, parse_poset, parse_scalar, parse_vectors, write_functional,
    write_functions, write_poset, write_vectors,
};
use tropical_functionals::{
    check_unit_residual, extend_functional, pointwise_sup, project_onto_span, recover_representer,
    riesz_representer, scalar_product, star_eval, v_inf, v_sup, AlgebraElement, Element, Extended,
    ExtendedF32, ExtendedScalar as E, FinVector, FinVectorF64, FiniteIS, Functional, Rational,
    SpanBasis, Vector,
};

fn int_scalar() -> impl Strategy<Value = E> {
    prop_oneof![
        2 => Just(E::Bottom),
        1 => Just(E::Top),
        13 => (-10i64..=10).prop_map(E::int),
    ]
}

fn scalar() -> impl Strategy<Value = E> {
    prop_oneof![
        2 => Just(E::Bottom),
        1 => Just(E::Top),
        8 => (-10i64..=10).prop_map(E::int),
        5 => (-60i64..=60, 1i64..=7)
            .prop_map(|(n, d)| E::Finite(Rational::new(BigInt::from(n), BigInt::from(d)))),
    ]
}

fn int_vector(dim: usize) -> impl Strategy<Value = FinVector> {
    prop::collection::vec(int_scalar(), dim).prop_map(FinVector::new)
}

fn vector(dim: usize) -> impl Strategy<Value = FinVector> {
    prop::collection::vec(scalar(), dim).prop_map(FinVector::new)
}

fn int_pair() -> impl Strategy<Value = (FinVector, FinVector)> {
    (1usize..=6).prop_flat_map(|d| (int_vector(d), int_vector(d)))
}

fn pair() -> impl Strategy<Value = (FinVector, FinVector)> {
    (1usize..=6).prop_flat_map(|d| (vector(d), vector(d)))
}

fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("t{i}")).collect()
}

fn element(n: usize) -> impl Strategy<Value = AlgebraElement> {
    vector(n).prop_map(move |v| Element::new(v.into_coords(), labels(n)).unwrap())
}

fn poset() -> impl Strategy<Value = FiniteIS> {
    (0usize..=8).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut rel = Vec::new();
            let mut b = bits.iter();
            for j in 0..n {
                for i in 0..j {
                    if *b.next().unwrap() {
                        rel.push((i, j));
                    }
                }
            }
            FiniteIS::from_relations(labels(n), &rel).unwrap()
        })
    })
}

fn finite(k: &E) -> Option<Rational> {
    k.value().cloned()
}

proptest! {
    #[test]
    fn scalar_text_round_trip(k in scalar()) {
        prop_assert_eq!(parse_scalar(&k.to_string()).unwrap(), k);
    }

    #[test]
    fn decimal_tokens_are_exact(n in -100_000i64..100_000, places in 0u32..5) {
        let scale = 10i64.pow(places);
        let sign = if n < 0 { "-" } else { "" };
        let (w, f) = (n.abs() / scale, n.abs() % scale);
        let token = if places == 0 {
            format!("{n}")
        } else {
            format!("{sign}{w}.{f:0width$}", width = places as usize)
        };
        let want = E::Finite(Rational::new(BigInt::from(n), BigInt::from(scale)));
        prop_assert_eq!(parse_scalar(&token).unwrap(), want);
    }

    #[test]
    fn vector_file_round_trip(
        vs in (1usize..=5).prop_flat_map(|d| prop::collection::vec(vector(d), 1..6)),
        labelled in any::<bool>(),
    ) {
        let l = labelled.then(|| labels(vs[0].dim()));
        let text = write_vectors(l.as_deref(), &vs);
        let file = parse_vectors(&text).unwrap();
        prop_assert_eq!(&file.labels, &l);
        let coords: Vec<_> = file.vectors.iter().map(|v| v.coords().to_vec()).collect();
        let want: Vec<_> = vs.iter().map(|v| v.coords().to_vec()).collect();
        prop_assert_eq!(coords, want);
        prop_assert_eq!(write_vectors(l.as_deref(), &file.vectors), text);
    }

    #[test]
    fn function_file_round_trip(fs in (1usize..=5).prop_flat_map(|n| prop::collection::vec(element(n), 1..4))) {
        let text = write_functions(&fs);
        prop_assert_eq!(parse_functions(&text).unwrap(), fs);
    }

    #[test]
    fn functional_file_round_trip(x in (1usize..=6).prop_flat_map(vector)) {
        let f = Functional::new(x);
        prop_assert_eq!(parse_functional(&write_functional(&f)).unwrap(), f);
    }

    #[test]
    fn poset_text_round_trip(s in poset()) {
        let back = parse_poset(&write_poset(&s)).unwrap();
        prop_assert_eq!(back.labels(), s.labels());
        prop_assert_eq!(common::order_matrix(&back), common::order_matrix(&s));
    }

    #[test]
    fn star_eval_matches_scan((x, y) in int_pair()) {
        prop_assert_eq!(star_eval(&x, &y).unwrap(), common::scan_star_ext(&x, &y));
    }

    /// `x*(y)` is the threshold of `{k | y ⪯ k x}` for rational data as well.
    #[test]
    fn star_eval_is_least_multiplier((x, y) in pair()) {
        let valid = |k: &E| y.precedes(&x.scale(k)).unwrap();
        let k = star_eval(&x, &y).unwrap();
        let eps = E::Finite(Rational::new(1.into(), 1000.into()));
        match &k {
            E::Finite(_) => {
                prop_assert!(valid(&k));
                prop_assert!(!valid(&k.otimes(&eps.inverse().unwrap())));
            }
            E::Bottom => prop_assert!(valid(&E::int(-1000))),
            E::Top => prop_assert!(!valid(&E::int(1000))),
        }
    }

    #[test]
    fn multipliers_are_thresholds(y in scalar(), x in scalar(), k in scalar()) {
        let lm = E::least_multiplier(&y, &x);
        if k > lm {
            prop_assert!(y <= k.otimes(&x));
        }
        if k < lm {
            prop_assert!(!(y <= k.otimes(&x)));
        }
        let gm = E::greatest_multiplier(&y, &x);
        if k < gm {
            prop_assert!(k.otimes(&x) <= y);
        }
        if k > gm {
            prop_assert!(!(k.otimes(&x) <= y));
        }
    }

    #[test]
    fn semiring_laws(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(a.oplus(&a), a.clone());
        prop_assert_eq!(a.oplus(&b), b.oplus(&a));
        prop_assert_eq!(a.otimes(&b), b.otimes(&a));
        prop_assert_eq!(a.oplus(&b).oplus(&c), a.oplus(&b.oplus(&c)));
        prop_assert_eq!(a.otimes(&b).otimes(&c), a.otimes(&b.otimes(&c)));
        prop_assert_eq!(a.otimes(&b.oplus(&c)), a.otimes(&b).oplus(&a.otimes(&c)));
        prop_assert_eq!(a.otimes(&b.meet(&c)), a.otimes(&b).meet(&a.otimes(&c)));
        prop_assert_eq!(a.oplus(&E::Bottom), a.clone());
        prop_assert_eq!(a.otimes(&E::Bottom), E::Bottom);
        prop_assert_eq!(a.otimes(&E::int(0)), a.clone());
        prop_assert_eq!(a.reflect().reflect(), a.clone());
        if a <= b {
            prop_assert!(a.otimes(&c) <= b.otimes(&c));
        }
    }

    #[test]
    fn recovery_round_trip_rational(x in (1usize..=6).prop_flat_map(vector), probes in prop::collection::vec(vector(6), 10)) {
        prop_assume!(!x.is_top());
        let f = |y: &FinVector| star_eval(&x, y).unwrap();
        let r = recover_representer(f, x.dim()).unwrap();
        prop_assert_eq!(&r, &x);
        for p in &probes {
            let p = FinVector::new(p.coords()[..x.dim()].to_vec());
            prop_assert_eq!(star_eval(&r, &p).unwrap(), f(&p));
        }
    }

    #[test]
    fn float_instances_agree_with_rationals((x, y) in int_pair()) {
        let to_f64 = |v: &FinVector| -> FinVectorF64 {
            Vector::new(v.coords().iter().map(|c| match c {
                E::Bottom => Extended::Bottom,
                E::Top => Extended::Top,
                E::Finite(q) => Extended::Finite(q.to_integer().to_string().parse::<f64>().unwrap()),
            }).collect())
        };
        let (xf, yf) = (to_f64(&x), to_f64(&y));
        let want = star_eval(&x, &y).unwrap();
        let got = star_eval(&xf, &yf).unwrap();
        prop_assert_eq!(got.to_string(), want.to_string());
        if !xf.is_top() {
            let r = recover_representer(|v: &FinVectorF64| star_eval(&xf, v).unwrap(), xf.dim()).unwrap();
            prop_assert_eq!(r, xf.clone());
        }
        let to_f32 = |v: &FinVectorF64| -> Vector<ExtendedF32> {
            Vector::new(v.coords().iter().map(|c| match c {
                Extended::Bottom => Extended::Bottom,
                Extended::Top => Extended::Top,
                Extended::Finite(v) => Extended::Finite(*v as f32),
            }).collect())
        };
        let (xs, ys) = (to_f32(&xf), to_f32(&yf));
        prop_assert_eq!(star_eval(&xs, &ys).unwrap().to_string(), want.to_string());
    }

    #[test]
    fn extension_restricts(
        (d, gens, hidden) in (2usize..=6).prop_flat_map(|d| (Just(d), prop::collection::vec(vector(d), 1..=4), vector(d)))
    ) {
        let span = SpanBasis::new(d, gens).unwrap();
        prop_assume!(span.count() > 0);
        let values: Vec<E> = span.generators().iter().map(|w| star_eval(&hidden, w).unwrap()).collect();
        let f = extend_functional(&span, &values, d).unwrap();
        for (w, v) in span.generators().iter().zip(&values) {
            prop_assert_eq!(&f.eval(w).unwrap(), v);
        }
    }

    #[test]
    fn pointwise_sup_is_inf_of_representers(
        (reps, probe) in (1usize..=5).prop_flat_map(|d| (prop::collection::vec(vector(d), 1..=5), vector(d)))
    ) {
        let fs: Vec<Functional<E>> = reps.iter().cloned().map(Functional::new).collect();
        let p = pointwise_sup(&fs).unwrap();
        let want = fs.iter().map(|f| f.eval(&probe).unwrap()).fold(E::Bottom, |a, b| a.oplus(&b));
        prop_assert_eq!(p.eval(&probe).unwrap(), want);
        prop_assert_eq!(p.representer(), &v_inf(probe.dim(), &reps).unwrap());
    }

    #[test]
    fn projection_is_greatest_below(
        (y, gens) in (1usize..=5).prop_flat_map(|d| (vector(d), prop::collection::vec(vector(d), 1..=3)))
    ) {
        let span = SpanBasis::new(y.dim(), gens).unwrap();
        let p = project_onto_span(&y, &span).unwrap();
        prop_assert!(p.projection.precedes(&y).unwrap());
        prop_assert_eq!(p.member, p.projection == y);
        prop_assert_eq!(span.combine(&p.coefficients).unwrap(), p.projection.clone());
        let again = project_onto_span(&p.projection, &span).unwrap();
        prop_assert!(again.member);
    }

    #[test]
    fn vector_sups_are_coordinatewise(vs in (1usize..=5).prop_flat_map(|d| prop::collection::vec(int_vector(d), 0..5))) {
        let d = vs.first().map_or(3, FinVector::dim);
        let ms: Vec<Vec<common::M>> = vs.iter().map(common::model).collect();
        prop_assert_eq!(v_sup(d, &vs).unwrap(), common::ext_vec(&common::vsup(&ms, d)));
        prop_assert_eq!(v_inf(d, &vs).unwrap(), common::ext_vec(&common::vinf(&ms, d)));
    }

    #[test]
    fn cuts_match_brute_force(s in poset()) {
        let mut oracle = common::brute_force_cuts(&common::order_matrix(&s));
        oracle.sort_by_key(|m| (m.count_ones(), *m));
        prop_assert_eq!(cuts(&s), oracle);
    }

    #[test]
    fn scalar_product_laws((a, b, c) in (1usize..=6).prop_flat_map(|n| (element(n), element(n), element(n))), k in scalar()) {
        let sp = |p: &AlgebraElement, q: &AlgebraElement| scalar_product(p, q).unwrap();
        prop_assert_eq!(sp(&a, &b), sp(&b, &a));
        prop_assert_eq!(sp(&a.oplus(&b).unwrap(), &c), sp(&a, &c).oplus(&sp(&b, &c)));
        prop_assume!(!k.is_top());
        prop_assert_eq!(sp(&a.scale(&k), &c), k.otimes(&sp(&a, &c)));
    }

    #[test]
    fn unit_residual_with_fractions((x, y) in (1usize..=8).prop_flat_map(|n| (vector(n), element(n)))) {
        let finite_x: Vec<E> = x.coords().iter().map(|c| if c.is_finite() { c.clone() } else { E::int(1) }).collect();
        let x = Element::new(finite_x, labels(y.len())).unwrap();
        let r = check_unit_residual(&x, &y).unwrap();
        prop_assert!(r.holds());
        prop_assert_eq!(r.star, star_eval(x.as_vector(), y.as_vector()).unwrap());
    }

    #[test]
    fn riesz_round_trip(x in (1usize..=8).prop_flat_map(element)) {
        let x = Element::new(
            x.values().iter().map(|c| if c.is_top() { E::int(0) } else { c.clone() }).collect(),
            x.labels().to_vec(),
        ).unwrap();
        prop_assume!(!x.is_zero());
        let out = riesz_representer(|y: &AlgebraElement| scalar_product(y, &x).unwrap(), x.labels()).unwrap();
        prop_assert_eq!(out.bounded, x.values().iter().all(|c| finite(c).is_some()));
        prop_assert_eq!(out.element, x);
    }
}
