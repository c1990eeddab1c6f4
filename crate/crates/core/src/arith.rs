//! Field-operation dispatch with optional tallying.
//!
//! Every algorithm that should show up in operation counts is generic over
//! [`Arith`]. [`Field`] implements it directly at zero cost; [`CountingField`]
//! forwards to a field and tallies additions, multiplications and inversions.
//! A division is one inversion plus one multiplication.

use std::cell::Cell;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Sub};

use serde::{Deserialize, Serialize};

use crate::gf::{Field, Gf};

pub trait Arith {
    fn field(&self) -> &Field;
    fn add(&self, a: Gf, b: Gf) -> Gf;
    fn mul(&self, a: Gf, b: Gf) -> Gf;
    /// Panics if `a` is zero.
    fn invert(&self, a: Gf) -> Gf;

    fn divide(&self, a: Gf, b: Gf) -> Gf {
        let b_inv = self.invert(b);
        self.mul(a, b_inv)
    }

    /// `dst[i] += src[i]`, one addition per pair of nonzero entries.
    fn add_assign_slice(&self, dst: &mut [Gf], src: &[Gf]) {
        for (d, &s) in dst.iter_mut().zip(src) {
            *d = self.add(*d, s);
        }
    }

    /// `dst[i] += c * src[i]`, skipping zero entries of `src`.
    fn axpy(&self, dst: &mut [Gf], c: Gf, src: &[Gf]) {
        if c.is_zero() {
            return;
        }
        for (d, &s) in dst.iter_mut().zip(src) {
            if !s.is_zero() {
                *d = self.add(*d, self.mul(c, s));
            }
        }
    }
}

impl Arith for Field {
    #[inline]
    fn field(&self) -> &Field {
        self
    }

    #[inline]
    fn add(&self, a: Gf, b: Gf) -> Gf {
        Field::add(self, a, b)
    }

    #[inline]
    fn mul(&self, a: Gf, b: Gf) -> Gf {
        Field::mul(self, a, b)
    }

    #[inline]
    fn invert(&self, a: Gf) -> Gf {
        self.inv_nonzero(a)
    }
}

/// Tallies of field operations.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OpCounts {
    pub additions: u64,
    pub multiplications: u64,
    pub inversions: u64,
}

impl OpCounts {
    pub fn new(additions: u64, multiplications: u64, inversions: u64) -> Self {
        OpCounts {
            additions,
            multiplications,
            inversions,
        }
    }

    pub fn total(&self) -> u64 {
        self.additions + self.multiplications + self.inversions
    }
}

impl Add for OpCounts {
    type Output = OpCounts;

    fn add(self, rhs: OpCounts) -> OpCounts {
        OpCounts {
            additions: self.additions + rhs.additions,
            multiplications: self.multiplications + rhs.multiplications,
            inversions: self.inversions + rhs.inversions,
        }
    }
}

impl AddAssign for OpCounts {
    fn add_assign(&mut self, rhs: OpCounts) {
        *self = *self + rhs;
    }
}

impl Sub for OpCounts {
    type Output = OpCounts;

    fn sub(self, rhs: OpCounts) -> OpCounts {
        OpCounts {
            additions: self.additions - rhs.additions,
            multiplications: self.multiplications - rhs.multiplications,
            inversions: self.inversions - rhs.inversions,
        }
    }
}

impl Sum for OpCounts {
    fn sum<I: Iterator<Item = OpCounts>>(iter: I) -> OpCounts {
        iter.fold(OpCounts::default(), Add::add)
    }
}

/// A field wrapper that counts the operations routed through it.
///
/// An operation with a zero operand is trivial and is not tallied; this
/// models an implementation that skips zero symbols. Counters live in
/// `Cell`s, so one instance belongs to one decode call.
pub struct CountingField<'a> {
    inner: &'a Field,
    additions: Cell<u64>,
    multiplications: Cell<u64>,
    inversions: Cell<u64>,
}

impl<'a> CountingField<'a> {
    pub fn new(inner: &'a Field) -> Self {
        CountingField {
            inner,
            additions: Cell::new(0),
            multiplications: Cell::new(0),
            inversions: Cell::new(0),
        }
    }

    pub fn counts(&self) -> OpCounts {
        OpCounts {
            additions: self.additions.get(),
            multiplications: self.multiplications.get(),
            inversions: self.inversions.get(),
        }
    }

    pub fn reset(&self) {
        self.additions.set(0);
        self.multiplications.set(0);
        self.inversions.set(0);
    }
}

/// Wraps `inner` in a counting forwarder.
pub fn counting_field(inner: &Field) -> CountingField<'_> {
    CountingField::new(inner)
}

impl Arith for CountingField<'_> {
    fn field(&self) -> &Field {
        self.inner
    }

    #[inline]
    fn add(&self, a: Gf, b: Gf) -> Gf {
        if !a.is_zero() && !b.is_zero() {
            self.additions.set(self.additions.get() + 1);
        }
        self.inner.add(a, b)
    }

    #[inline]
    fn mul(&self, a: Gf, b: Gf) -> Gf {
        if !a.is_zero() && !b.is_zero() {
            self.multiplications.set(self.multiplications.get() + 1);
        }
        self.inner.mul(a, b)
    }

    #[inline]
    fn invert(&self, a: Gf) -> Gf {
        self.inversions.set(self.inversions.get() + 1);
        self.inner.inv_nonzero(a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field() -> Field {
        Field::new(8, 0x11d).unwrap()
    }

    #[test]
    fn one_mul_counts_one() {
        let f = field();
        let c = counting_field(&f);
        assert_eq!(c.mul(Gf(3), Gf(7)), f.mul(Gf(3), Gf(7)));
        assert_eq!(c.counts(), OpCounts::new(0, 1, 0));
    }

    #[test]
    fn slice_xor_counts_length() {
        let f = field();
        let c = counting_field(&f);
        let mut dst = vec![Gf(1); 37];
        let src = vec![Gf(2); 37];
        c.add_assign_slice(&mut dst, &src);
        assert_eq!(c.counts().additions, 37);
        assert!(dst.iter().all(|&x| x == Gf(3)));
    }

    #[test]
    fn zero_operands_are_free() {
        let f = field();
        let c = counting_field(&f);
        c.mul(Gf(0), Gf(7));
        c.add(Gf(5), Gf(0));
        assert_eq!(c.counts(), OpCounts::default());
    }

    #[test]
    fn division_is_inversion_plus_multiplication() {
        let f = field();
        let c = counting_field(&f);
        let q = c.divide(Gf(9), Gf(4));
        assert_eq!(f.mul(q, Gf(4)), Gf(9));
        assert_eq!(c.counts(), OpCounts::new(0, 1, 1));
        c.reset();
        assert_eq!(c.counts(), OpCounts::default());
    }

    #[test]
    fn counts_are_componentwise() {
        let a = OpCounts::new(1, 2, 3);
        let b = OpCounts::new(10, 20, 30);
        assert_eq!(a + b, OpCounts::new(11, 22, 33));
        assert_eq!((a + b) - b, a);
        assert_eq!([a, b].into_iter().sum::<OpCounts>(), a + b);
    }
}
