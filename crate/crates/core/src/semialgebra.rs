//! Max-plus valued functions on a finite labelled set `X` as a semialgebra.
//!
//! Functions multiply pointwise, `1` is the constant function `0` and the
//! adjoined zero is the constant `-inf`. Every function with only finite
//! values is invertible, so the bounded functions together with zero form a
//! semifield. The canonical scalar product `⟨φ, ψ⟩ = 1*(φ ⊙ ψ)` is the
//! idempotent integral `∫⊕ φ ⊙ ψ dx = max_x (φ(x) + ψ(x))`.

use std::fmt;

use crate::error::{Error, Result};
use crate::functional::star_eval;
use crate::scalars::{big_sup, Extended, Scalar};
use crate::semimodule::Vector;

/// A function `X → {-inf} ∪ T ∪ {+inf}` on a labelled finite set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element<T> {
    values: Vector<Extended<T>>,
}

impl<T: Scalar> Element<T> {
    pub fn new(values: Vec<Extended<T>>, labels: Vec<String>) -> Result<Self> {
        Ok(Self {
            values: Vector::with_labels(values, labels)?,
        })
    }

    /// Wraps a vector; its coordinates must be labelled.
    pub fn from_vector(values: Vector<Extended<T>>) -> Result<Self> {
        if values.labels().is_none() {
            return Err(Error::LabelMismatch);
        }
        Ok(Self { values })
    }

    /// The unit: constant `0`.
    pub fn one(labels: Vec<String>) -> Self {
        let n = labels.len();
        Self::new(vec![Extended::int(0); n], labels).expect("lengths agree")
    }

    /// The adjoined zero: constant `-inf`.
    pub fn zero(labels: Vec<String>) -> Self {
        let n = labels.len();
        Self::new(vec![Extended::Bottom; n], labels).expect("lengths agree")
    }

    /// `δ_t`: `0` at `t`, `-inf` elsewhere.
    pub fn point_mass(labels: Vec<String>, t: usize) -> Self {
        let mut values = vec![Extended::Bottom; labels.len()];
        values[t] = Extended::int(0);
        Self::new(values, labels).expect("lengths agree")
    }

    pub fn labels(&self) -> &[String] {
        self.values.labels().expect("elements are labelled")
    }

    pub fn values(&self) -> &[Extended<T>] {
        self.values.coords()
    }

    pub fn as_vector(&self) -> &Vector<Extended<T>> {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.dim()
    }

    pub fn is_empty(&self) -> bool {
        self.values.dim() == 0
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_zero()
    }

    /// All values finite: a bounded real-valued function.
    pub fn is_bounded_function(&self) -> bool {
        self.values().iter().all(Extended::is_finite)
    }

    /// Pointwise inverse; only bounded functions are invertible.
    pub fn inverse(&self) -> Result<Self> {
        let mut inv = Vec::with_capacity(self.len());
        for v in self.values() {
            inv.push(
                v.inverse()
                    .map_err(|_| Error::NotInvertible(format!("{self} has a non-finite value")))?,
            );
        }
        Self::new(inv, self.labels().to_vec())
    }

    /// `(φ ⊙ ψ)(x) = φ(x) ⊙ ψ(x)`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        Ok(Self {
            values: self.values.pointwise_mul(&other.values)?,
        })
    }

    pub fn oplus(&self, other: &Self) -> Result<Self> {
        Ok(Self {
            values: self.values.oplus(&other.values)?,
        })
    }

    /// The action of the scalar semifield.
    pub fn scale(&self, k: &Extended<T>) -> Self {
        Self {
            values: self.values.scale(k),
        }
    }
}

impl<T: Scalar> fmt::Display for Element<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.values)
    }
}

/// `1*(φ) = sup_x φ(x)`.
pub fn one_star<T: Scalar>(phi: &Element<T>) -> Extended<T> {
    big_sup(phi.values())
}

/// `⟨φ, ψ⟩ = 1*(φ ⊙ ψ)`.
pub fn scalar_product<T: Scalar>(phi: &Element<T>, psi: &Element<T>) -> Result<Extended<T>> {
    Ok(one_star(&phi.mul(psi)?))
}

/// `∫⊕ φ ⊙ weight dx`; with `weight = 1` this is `sup φ`.
pub fn idempotent_integral<T: Scalar>(
    phi: &Element<T>,
    weight: &Element<T>,
) -> Result<Extended<T>> {
    scalar_product(phi, weight)
}

/// Both sides of `x*(y) = 1*(y ⊙ x⁻¹)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitResidual<T> {
    /// `x*(y)`, by residuation.
    pub star: Extended<T>,
    /// `1*(y ⊙ x⁻¹)`.
    pub via_unit: Extended<T>,
}

impl<T: PartialEq> UnitResidual<T> {
    pub fn holds(&self) -> bool {
        self.star == self.via_unit
    }
}

/// Evaluates `x*(y)` both by residuation and through the unit, for invertible `x`.
pub fn check_unit_residual<T: Scalar>(x: &Element<T>, y: &Element<T>) -> Result<UnitResidual<T>> {
    let inv = x.inverse().map_err(|_| {
        Error::NotInvertible(format!("x*(y) = 1*(y x^-1) requires invertible x, got {x}"))
    })?;
    let star = star_eval(x.as_vector(), y.as_vector())?;
    let via_unit = one_star(&y.mul(&inv)?);
    Ok(UnitResidual { star, via_unit })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RieszOutcome<T> {
    /// `x` with `f(y) = ⟨y, x⟩`.
    pub element: Element<T>,
    /// `x` is a bounded function; otherwise it has `-inf` values and lies
    /// only in the completed algebra.
    pub bounded: bool,
}

/// Recovers `x` with `f(y) = ⟨y, x⟩` by probing point masses: `x(t) = f(δ_t)`.
pub fn riesz_representer<T, F>(f: F, labels: &[String]) -> Result<RieszOutcome<T>>
where
    T: Scalar,
    F: Fn(&Element<T>) -> Extended<T>,
{
    let values: Vec<Extended<T>> = (0..labels.len())
        .map(|t| f(&Element::point_mass(labels.to_vec(), t)))
        .collect();
    if values.iter().all(Extended::is_bottom) {
        return Err(Error::ZeroFunctional);
    }
    if let Some(index) = values.iter().position(Extended::is_top) {
        return Err(Error::NotRepresentable { index });
    }
    let element = Element::new(values, labels.to_vec())?;
    let bounded = element.is_bounded_function();
    Ok(RieszOutcome { element, bounded })
}

/// [`riesz_representer`], then confirms `f(y) = ⟨y, x⟩` on every probe.
pub fn riesz_representer_checked<T, F>(
    f: F,
    labels: &[String],
    probes: &[Element<T>],
) -> Result<RieszOutcome<T>>
where
    T: Scalar,
    F: Fn(&Element<T>) -> Extended<T>,
{
    let out = riesz_representer(&f, labels)?;
    for (i, p) in probes.iter().enumerate() {
        if scalar_product(p, &out.element)? != f(p) {
            return Err(Error::RepresenterMismatch { probe: i });
        }
    }
    Ok(out)
}
