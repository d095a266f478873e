//! Seeded generators for the randomized suites.
//!
//! Scalars are integers in `[-10, 10]`, replaced by `-inf` with probability
//! 1/8 and by `+inf` with probability 1/16.

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::order::FiniteIS;
use crate::semialgebra::Element;
use crate::{AlgebraElement, ExtendedScalar, FinVector};

pub const COORD_RANGE: i64 = 10;

pub struct Gen {
    rng: ChaCha8Rng,
}

impl Gen {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Independent stream `stream` of the generator for `seed`.
    pub fn with_stream(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Self { rng }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.gen_range(lo..=hi)
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn finite(&mut self) -> ExtendedScalar {
        ExtendedScalar::int(self.int(-COORD_RANGE, COORD_RANGE))
    }

    pub fn scalar(&mut self) -> ExtendedScalar {
        match self.rng.gen_range(0..16) {
            0 | 1 => ExtendedScalar::Bottom,
            2 => ExtendedScalar::Top,
            _ => self.finite(),
        }
    }

    /// A finite scalar with a non-integer value, to exercise exact arithmetic.
    pub fn fraction(&mut self) -> ExtendedScalar {
        let den = self.int(1, 6);
        let num = self.int(-COORD_RANGE * den, COORD_RANGE * den);
        ExtendedScalar::Finite(BigRational::new(num.into(), den.into()))
    }

    pub fn vector(&mut self, dim: usize) -> FinVector {
        FinVector::new((0..dim).map(|_| self.scalar()).collect())
    }

    pub fn finite_vector(&mut self, dim: usize) -> FinVector {
        FinVector::new((0..dim).map(|_| self.finite()).collect())
    }

    /// Coordinates are `-inf` or finite.
    pub fn topless_vector(&mut self, dim: usize) -> FinVector {
        self.vector(dim).map(|c| {
            if c.is_top() {
                ExtendedScalar::Bottom
            } else {
                c.clone()
            }
        })
    }

    pub fn element(&mut self, labels: &[String]) -> AlgebraElement {
        let v = self.vector(labels.len()).into_coords();
        Element::new(v, labels.to_vec()).expect("lengths agree")
    }

    pub fn bounded_element(&mut self, labels: &[String]) -> AlgebraElement {
        let v = self.finite_vector(labels.len()).into_coords();
        Element::new(v, labels.to_vec()).expect("lengths agree")
    }

    /// A distinct pair of random vectors.
    pub fn distinct_pair(&mut self, dim: usize) -> (FinVector, FinVector) {
        let x = self.vector(dim);
        loop {
            let y = self.vector(dim);
            if y != x {
                return (x, y);
            }
        }
    }

    /// A random poset on `n` elements: each pair `i < j` is related with
    /// probability 1/2, then closed transitively.
    pub fn poset(&mut self, n: usize) -> FiniteIS {
        let mut rel = Vec::new();
        for j in 0..n {
            for i in 0..j {
                if self.rng.gen_bool(0.5) {
                    rel.push((i, j));
                }
            }
        }
        FiniteIS::from_relations(labels(n), &rel).expect("acyclic relation")
    }
}

/// `x1, ..., xn`.
pub fn labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}
