use std::cmp::Ordering;
use std::fmt;
use std::ops::Neg;

use num_traits::{FromPrimitive, Num};

use crate::error::{Error, Result};

/// Ordered field-like numbers that can carry max-plus arithmetic.
///
/// Exact rationals (`BigRational`, `Rational64`) make every law an equality.
/// `f32`/`f64` work too, but `⊙` then rounds.
pub trait Scalar:
    Clone + PartialOrd + Num + Neg<Output = Self> + FromPrimitive + fmt::Debug + fmt::Display
{
}

impl<T> Scalar for T where
    T: Clone + PartialOrd + Num + Neg<Output = T> + FromPrimitive + fmt::Debug + fmt::Display
{
}

/// An element of the completed max-plus semiring `{-inf} ∪ T ∪ {+inf}`.
///
/// `Bottom` is the semiring zero, `Finite(0)` the unit. Addition is `max`,
/// multiplication is addition of the finite parts, with `Bottom` absorbing
/// everything (including `Top`) and `Top` absorbing every other element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Extended<T> {
    Bottom,
    Finite(T),
    Top,
}

impl<T: Scalar> Extended<T> {
    pub fn finite(value: T) -> Self {
        Extended::Finite(value)
    }

    /// Finite element from an integer.
    pub fn int(value: i64) -> Self {
        Extended::Finite(T::from_i64(value).expect("integer representable in scalar type"))
    }

    pub fn is_bottom(&self) -> bool {
        matches!(self, Extended::Bottom)
    }

    pub fn is_top(&self) -> bool {
        matches!(self, Extended::Top)
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Extended::Finite(_))
    }

    pub fn value(&self) -> Option<&T> {
        match self {
            Extended::Finite(v) => Some(v),
            _ => None,
        }
    }

    /// `self ⪯ other` in the order `Bottom < Finite(_) < Top`.
    pub fn le(&self, other: &Self) -> bool {
        matches!(
            self.partial_cmp(other),
            Some(Ordering::Less | Ordering::Equal)
        )
    }

    /// `a ⊕ b = max(a, b)`.
    pub fn oplus(&self, other: &Self) -> Self {
        if self.le(other) {
            other.clone()
        } else {
            self.clone()
        }
    }

    /// `min(a, b)`, the lattice meet.
    pub fn meet(&self, other: &Self) -> Self {
        if self.le(other) {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// `a ⊙ b`: finite parts add; `Bottom ⊙ Top = Bottom`, `x ⊙ Top = Top` for `x ≠ Bottom`.
    pub fn otimes(&self, other: &Self) -> Self {
        use Extended::*;
        match (self, other) {
            (Bottom, _) | (_, Bottom) => Bottom,
            (Top, _) | (_, Top) => Top,
            (Finite(a), Finite(b)) => Finite(a.clone() + b.clone()),
        }
    }

    /// Multiplicative inverse; only finite elements are invertible.
    pub fn inverse(&self) -> Result<Self> {
        match self {
            Extended::Finite(v) => Ok(Extended::Finite(-v.clone())),
            other => Err(Error::NotInvertible(other.to_string())),
        }
    }

    /// Order-reversing involution of the completed line: `-inf ↔ +inf`, `q ↦ -q`.
    pub fn reflect(&self) -> Self {
        match self {
            Extended::Bottom => Extended::Top,
            Extended::Finite(v) => Extended::Finite(-v.clone()),
            Extended::Top => Extended::Bottom,
        }
    }

    /// Least `k` in `{-inf} ∪ T` with `y ⪯ k ⊙ x`; `Top` when no such `k` exists.
    pub fn least_multiplier(y: &Self, x: &Self) -> Self {
        use Extended::*;
        match (y, x) {
            (Bottom, _) => Bottom,
            (_, Bottom) => Top,
            // any finite k already reaches the top; their infimum is -inf
            (_, Top) => Bottom,
            (Top, Finite(_)) => Top,
            (Finite(a), Finite(b)) => Finite(a.clone() - b.clone()),
        }
    }

    /// Greatest `k` with `k ⊙ w ⪯ y` (a residual; may be `Top`).
    pub fn greatest_multiplier(y: &Self, w: &Self) -> Self {
        use Extended::*;
        match (y, w) {
            (_, Bottom) | (Top, _) => Top,
            (Bottom, _) | (Finite(_), Top) => Bottom,
            (Finite(a), Finite(b)) => Finite(a.clone() - b.clone()),
        }
    }
}

impl<T: PartialOrd> PartialOrd for Extended<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        use Extended::*;
        match (self, other) {
            (Bottom, Bottom) | (Top, Top) => Some(Ordering::Equal),
            (Bottom, _) | (_, Top) => Some(Ordering::Less),
            (_, Bottom) | (Top, _) => Some(Ordering::Greater),
            (Finite(a), Finite(b)) => a.partial_cmp(b),
        }
    }
}

impl<T: Ord> Ord for Extended<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        use Extended::*;
        match (self, other) {
            (Bottom, Bottom) | (Top, Top) => Ordering::Equal,
            (Bottom, _) | (_, Top) => Ordering::Less,
            (_, Bottom) | (Top, _) => Ordering::Greater,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }
}

impl<T: fmt::Display> fmt::Display for Extended<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::Bottom => f.write_str("-inf"),
            Extended::Finite(v) => write!(f, "{v}"),
            Extended::Top => f.write_str("+inf"),
        }
    }
}

impl<T> From<T> for Extended<T> {
    fn from(value: T) -> Self {
        Extended::Finite(value)
    }
}
