use std::fmt;

use super::extended::{Extended, Scalar};

/// A semiring whose addition is idempotent: `a ⊕ a = a`.
///
/// The standard order is `a ⪯ b` iff `a ⊕ b = b`.
pub trait IdempotentSemiring: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn oplus(&self, rhs: &Self) -> Self;
    fn otimes(&self, rhs: &Self) -> Self;

    /// Multiplicative inverse, `None` for non-invertible elements.
    fn inverse(&self) -> Option<Self>;

    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }

    fn precedes(&self, rhs: &Self) -> bool {
        self.oplus(rhs) == *rhs
    }
}

/// An a-complete idempotent semiring whose standard order is a chain.
///
/// The type is the completion `K̂`; the underlying semifield `K` is
/// `K̂` without its top when the two differ. Because the order is total, a
/// residual over a vector reduces to a max or min of scalar residuals.
pub trait CompleteSemiring: IdempotentSemiring {
    fn top() -> Self;
    fn meet(&self, rhs: &Self) -> Self;

    fn is_top(&self) -> bool {
        *self == Self::top()
    }

    /// `∧{k ∈ K | y ⪯ k ⊙ x}`, with `∧∅ = top`.
    fn least_multiplier(y: &Self, x: &Self) -> Self;

    /// `⊕{k ∈ K̂ | k ⊙ w ⪯ y}`.
    fn greatest_multiplier(y: &Self, w: &Self) -> Self;
}

/// `⊕X`; the empty sum is the zero.
pub fn big_sup<'a, S: CompleteSemiring + 'a>(xs: impl IntoIterator<Item = &'a S>) -> S {
    xs.into_iter().fold(S::zero(), |acc, x| acc.oplus(x))
}

/// `∧X`; the empty meet is the top.
pub fn big_inf<'a, S: CompleteSemiring + 'a>(xs: impl IntoIterator<Item = &'a S>) -> S {
    xs.into_iter().fold(S::top(), |acc, x| acc.meet(x))
}

impl<T: Scalar> IdempotentSemiring for Extended<T> {
    fn zero() -> Self {
        Extended::Bottom
    }

    fn one() -> Self {
        Extended::Finite(T::zero())
    }

    fn oplus(&self, rhs: &Self) -> Self {
        Extended::oplus(self, rhs)
    }

    fn otimes(&self, rhs: &Self) -> Self {
        Extended::otimes(self, rhs)
    }

    fn inverse(&self) -> Option<Self> {
        Extended::inverse(self).ok()
    }

    fn precedes(&self, rhs: &Self) -> bool {
        self.le(rhs)
    }
}

impl<T: Scalar> CompleteSemiring for Extended<T> {
    fn top() -> Self {
        Extended::Top
    }

    fn meet(&self, rhs: &Self) -> Self {
        Extended::meet(self, rhs)
    }

    fn least_multiplier(y: &Self, x: &Self) -> Self {
        Extended::least_multiplier(y, x)
    }

    fn greatest_multiplier(y: &Self, w: &Self) -> Self {
        Extended::greatest_multiplier(y, w)
    }
}

/// The two-element semifield `{0, 1}` with `⊕ = or`, `⊙ = and`.
///
/// It is both a-complete and a semifield; it is the only a-complete
/// idempotent semifield.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Boolean(pub bool);

impl Boolean {
    pub const ZERO: Boolean = Boolean(false);
    pub const ONE: Boolean = Boolean(true);

    pub fn all() -> [Boolean; 2] {
        [Self::ZERO, Self::ONE]
    }
}

impl fmt::Display for Boolean {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.0 { "1" } else { "0" })
    }
}

impl IdempotentSemiring for Boolean {
    fn zero() -> Self {
        Self::ZERO
    }

    fn one() -> Self {
        Self::ONE
    }

    fn oplus(&self, rhs: &Self) -> Self {
        Boolean(self.0 || rhs.0)
    }

    fn otimes(&self, rhs: &Self) -> Self {
        Boolean(self.0 && rhs.0)
    }

    fn inverse(&self) -> Option<Self> {
        self.0.then_some(Self::ONE)
    }
}

impl CompleteSemiring for Boolean {
    fn top() -> Self {
        Self::ONE
    }

    fn meet(&self, rhs: &Self) -> Self {
        Boolean(self.0 && rhs.0)
    }

    fn least_multiplier(y: &Self, _x: &Self) -> Self {
        // y = 0: k = 0 works. y = 1: only k = 1 can work, and ∧∅ = 1 as well.
        *y
    }

    fn greatest_multiplier(y: &Self, w: &Self) -> Self {
        Boolean(y.0 || !w.0)
    }
}
