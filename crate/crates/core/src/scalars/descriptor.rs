use std::fmt;

use super::extended::{Extended, Scalar};
use super::semiring::{Boolean, IdempotentSemiring};
use crate::error::{Error, Result};
use crate::report::{members, subsets, Check, Report};

pub type BinOp<E> = fn(&E, &E) -> E;
pub type UnOp<E> = fn(&E) -> Option<E>;

/// Largest sample for which all-subset laws are enumerated.
pub const MAX_EXHAUSTIVE_SAMPLE: usize = 16;

#[derive(Clone)]
pub enum Carrier<E> {
    Finite(Vec<E>),
    /// An infinite carrier given by a membership test.
    Infinite {
        description: &'static str,
        contains: fn(&E) -> bool,
    },
}

impl<E: PartialEq> Carrier<E> {
    pub fn contains(&self, e: &E) -> bool {
        match self {
            Carrier::Finite(elems) => elems.contains(e),
            Carrier::Infinite { contains, .. } => contains(e),
        }
    }
}

/// A pluggable description of an idempotent semiring instance.
///
/// The operations are plain function pointers so that deliberately broken
/// instances can be assembled for exercising the axiom checker.
#[derive(Clone)]
pub struct SemiringDescriptor<E> {
    pub name: String,
    pub carrier: Carrier<E>,
    pub add: BinOp<E>,
    pub mul: BinOp<E>,
    /// `None` for semirings without a zero, like `R(max, +)`.
    pub zero: Option<E>,
    pub one: E,
    /// Present iff the instance claims to be a semifield.
    pub inverse: Option<UnOp<E>>,
    pub is_b_complete: bool,
    pub is_a_complete: bool,
}

impl<E> fmt::Debug for SemiringDescriptor<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SemiringDescriptor")
            .field("name", &self.name)
            .field("semifield", &self.inverse.is_some())
            .field("is_b_complete", &self.is_b_complete)
            .field("is_a_complete", &self.is_a_complete)
            .finish()
    }
}

impl SemiringDescriptor<Boolean> {
    pub fn boolean() -> Self {
        Self {
            name: "boolean".into(),
            carrier: Carrier::Finite(Boolean::all().to_vec()),
            add: Boolean::oplus,
            mul: Boolean::otimes,
            zero: Some(Boolean::ZERO),
            one: Boolean::ONE,
            inverse: Some(Boolean::inverse),
            is_b_complete: true,
            is_a_complete: true,
        }
    }
}

impl<T: Scalar> SemiringDescriptor<Extended<T>> {
    /// `R(max, +)`: finite values only, no zero.
    pub fn real_max_plus() -> Self {
        Self {
            name: "R(max,+)".into(),
            carrier: Carrier::Infinite {
                description: "finite values",
                contains: Extended::is_finite,
            },
            add: Extended::oplus,
            mul: Extended::otimes,
            zero: None,
            one: Extended::int(0),
            inverse: Some(finite_inverse::<T>),
            is_b_complete: false,
            is_a_complete: false,
        }
    }

    /// `R_max = R ∪ {-inf}`, a b-complete semifield.
    pub fn max_plus() -> Self {
        Self {
            name: "R_max".into(),
            carrier: Carrier::Infinite {
                description: "finite values and -inf",
                contains: |e| !e.is_top(),
            },
            add: Extended::oplus,
            mul: Extended::otimes,
            zero: Some(Extended::Bottom),
            one: Extended::int(0),
            inverse: Some(finite_inverse::<T>),
            is_b_complete: true,
            is_a_complete: false,
        }
    }

    /// `R̂_max = R_max ∪ {+inf}`, a-complete and therefore not a semifield.
    pub fn completed_max_plus() -> Self {
        Self {
            name: "R^_max".into(),
            carrier: Carrier::Infinite {
                description: "finite values, -inf and +inf",
                contains: |_| true,
            },
            add: Extended::oplus,
            mul: Extended::otimes,
            zero: Some(Extended::Bottom),
            one: Extended::int(0),
            inverse: None,
            is_b_complete: true,
            is_a_complete: true,
        }
    }
}

fn finite_inverse<T: Scalar>(e: &Extended<T>) -> Option<Extended<T>> {
    e.inverse().ok()
}

fn tuple<E: fmt::Display>(items: &[&E]) -> String {
    let parts: Vec<String> = items.iter().map(|e| e.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn set<'a, E: fmt::Display + 'a>(items: impl Iterator<Item = &'a E>) -> String {
    let parts: Vec<String> = items.map(|e| e.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

/// Checks the idempotent-semiring (and, if claimed, semifield) axioms on
/// every pair and triple of `sample`, and the generalized distributive laws
/// over every subset of `sample`.
///
/// For a finite carrier pass the whole carrier to make the check exhaustive.
pub fn check_semiring_axioms<E>(d: &SemiringDescriptor<E>, sample: &[E]) -> Result<Report>
where
    E: Clone + PartialEq + fmt::Display,
{
    if sample.len() > MAX_EXHAUSTIVE_SAMPLE {
        return Err(Error::TooLarge(format!(
            "sample of {} elements (at most {MAX_EXHAUSTIVE_SAMPLE})",
            sample.len()
        )));
    }
    let add = d.add;
    let mul = d.mul;
    let one = &d.one;
    let mut report = Report::new();

    let mut c = Check::new("sample within carrier");
    for a in sample {
        c.record(d.carrier.contains(a), || a.to_string());
    }
    report.push(c);

    let mut c = Check::new("zero differs from one");
    if let Some(z) = &d.zero {
        c.record(z != one, || z.to_string());
    }
    report.push(c);

    let mut c = Check::new("b-complete instance has a zero");
    c.record(!d.is_b_complete || d.zero.is_some(), || d.name.clone());
    report.push(c);

    let mut c = Check::new("addition idempotent");
    for a in sample {
        c.record(add(a, a) == *a, || a.to_string());
    }
    report.push(c);

    let mut comm = Check::new("addition commutative");
    for a in sample {
        for b in sample {
            comm.record(add(a, b) == add(b, a), || tuple(&[a, b]));
        }
    }
    report.push(comm);

    let mut add_assoc = Check::new("addition associative");
    let mut mul_assoc = Check::new("multiplication associative");
    let mut left = Check::new("left distributivity");
    let mut right = Check::new("right distributivity");
    for a in sample {
        for b in sample {
            for c in sample {
                add_assoc.record(add(a, &add(b, c)) == add(&add(a, b), c), || {
                    tuple(&[a, b, c])
                });
                mul_assoc.record(mul(a, &mul(b, c)) == mul(&mul(a, b), c), || {
                    tuple(&[a, b, c])
                });
                left.record(mul(a, &add(b, c)) == add(&mul(a, b), &mul(a, c)), || {
                    tuple(&[a, b, c])
                });
                right.record(mul(&add(a, b), c) == add(&mul(a, c), &mul(b, c)), || {
                    tuple(&[a, b, c])
                });
            }
        }
    }
    report.push(add_assoc);
    report.push(mul_assoc);

    let mut c = Check::new("one is multiplicative identity");
    for a in sample {
        c.record(mul(one, a) == *a && mul(a, one) == *a, || a.to_string());
    }
    report.push(c);

    let mut ident = Check::new("zero is additive identity");
    let mut absorb = Check::new("zero absorbs");
    if let Some(z) = &d.zero {
        for a in sample {
            ident.record(add(a, z) == *a, || a.to_string());
            absorb.record(mul(a, z) == *z && mul(z, a) == *z, || a.to_string());
        }
    }
    report.push(ident);
    report.push(absorb);
    report.push(left);
    report.push(right);

    // k ⊙ (⊕X) = ⊕(k ⊙ X) and (⊕X) ⊙ k = ⊕(X ⊙ k); ⊕∅ is the zero.
    let big_sum = |xs: &mut dyn Iterator<Item = E>| -> Option<E> {
        let first = match &d.zero {
            Some(z) => z.clone(),
            None => xs.next()?,
        };
        Some(xs.fold(first, |acc, x| add(&acc, &x)))
    };
    let mut gl = Check::new("generalized left distributivity");
    let mut gr = Check::new("generalized right distributivity");
    for mask in subsets(sample.len()) {
        let Some(total) = big_sum(&mut members(sample, mask).cloned()) else {
            continue;
        };
        for k in sample {
            let lhs = mul(k, &total);
            let rhs = big_sum(&mut members(sample, mask).map(|x| mul(k, x)));
            gl.record(Some(lhs) == rhs, || {
                format!("k = {k}, X = {}", set(members(sample, mask)))
            });
            let lhs = mul(&total, k);
            let rhs = big_sum(&mut members(sample, mask).map(|x| mul(x, k)));
            gr.record(Some(lhs) == rhs, || {
                format!("k = {k}, X = {}", set(members(sample, mask)))
            });
        }
    }
    report.push(gl);
    report.push(gr);

    if let Some(inv) = d.inverse {
        let mut c = Check::new("multiplication commutative");
        for a in sample {
            for b in sample {
                c.record(mul(a, b) == mul(b, a), || tuple(&[a, b]));
            }
        }
        report.push(c);

        let mut c = Check::new("nonzero elements invertible");
        for a in sample {
            if d.zero.as_ref() == Some(a) {
                continue;
            }
            let ok = inv(a).is_some_and(|b| mul(a, &b) == *one && mul(&b, a) == *one);
            c.record(ok, || a.to_string());
        }
        report.push(c);

        if d.is_a_complete {
            // An a-complete semifield cannot have elements besides 0 and 1.
            let mut c = Check::new("a-complete semifield is {0, 1}");
            for a in sample {
                c.record(d.zero.as_ref() == Some(a) || a == one, || a.to_string());
            }
            report.push(c);
        }
    }

    Ok(report)
}
