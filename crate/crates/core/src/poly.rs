//! Dense polynomials over GF(2^m), lowest degree first.
//!
//! The zero polynomial is the empty coefficient vector and has degree `None`,
//! which orders below every `Some(d)`.

use crate::arith::Arith;
use crate::error::{Error, Result};
use crate::gf::Gf;

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Gf>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Gf::ONE)
    }

    pub fn constant(c: Gf) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// `c * x^degree`.
    pub fn monomial(c: Gf, degree: usize) -> Self {
        let mut coeffs = vec![Gf::ZERO; degree + 1];
        coeffs[degree] = c;
        Poly::from_coeffs(coeffs)
    }

    /// `x - a` (equal to `x + a` in characteristic 2).
    pub fn linear(a: Gf) -> Self {
        Poly {
            coeffs: vec![a, Gf::ONE],
        }
    }

    pub fn from_coeffs(mut coeffs: Vec<Gf>) -> Self {
        while coeffs.last() == Some(&Gf::ZERO) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[Gf] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Gf> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero past the end.
    pub fn coeff(&self, i: usize) -> Gf {
        self.coeffs.get(i).copied().unwrap_or(Gf::ZERO)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<Gf> {
        self.coeffs.last().copied()
    }

    /// Coefficients padded with zeros to `len`. Panics if the polynomial is longer.
    pub fn padded(&self, len: usize) -> Vec<Gf> {
        assert!(self.coeffs.len() <= len, "polynomial longer than {len}");
        let mut out = self.coeffs.clone();
        out.resize(len, Gf::ZERO);
        out
    }

    /// Horner evaluation.
    pub fn eval<A: Arith>(&self, ops: &A, x: Gf) -> Gf {
        let mut acc = Gf::ZERO;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if i + 1 == self.coeffs.len() {
                acc = c;
            } else {
                acc = ops.add(ops.mul(acc, x), c);
            }
        }
        acc
    }

    pub fn add<A: Arith>(&self, ops: &A, other: &Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = long.coeffs.clone();
        ops.add_assign_slice(&mut coeffs, &short.coeffs);
        Poly::from_coeffs(coeffs)
    }

    pub fn scale<A: Arith>(&self, ops: &A, c: Gf) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::from_coeffs(
            self.coeffs
                .iter()
                .map(|&a| if a.is_zero() { a } else { ops.mul(a, c) })
                .collect(),
        )
    }

    /// Schoolbook product.
    pub fn mul<A: Arith>(&self, ops: &A, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Gf::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            ops.axpy(&mut out[i..], a, &other.coeffs);
        }
        Poly::from_coeffs(out)
    }

    /// Quotient and remainder; `deg(rem) < deg(divisor)`.
    pub fn divmod<A: Arith>(&self, ops: &A, divisor: &Poly) -> Result<(Poly, Poly)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let Some(nd) = self.degree() else {
            return Ok((Poly::zero(), Poly::zero()));
        };
        if nd < dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let lead = divisor.coeffs[dd];
        let lead_inv = if lead == Gf::ONE {
            lead
        } else {
            ops.invert(lead)
        };
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Gf::ZERO; nd - dd + 1];
        for i in (dd..=nd).rev() {
            let top = rem[i];
            if top.is_zero() {
                continue;
            }
            let q = if lead == Gf::ONE {
                top
            } else {
                ops.mul(top, lead_inv)
            };
            quot[i - dd] = q;
            rem[i] = Gf::ZERO;
            ops.axpy(&mut rem[i - dd..i], q, &divisor.coeffs[..dd]);
        }
        rem.truncate(dd);
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    pub fn rem<A: Arith>(&self, ops: &A, divisor: &Poly) -> Result<Poly> {
        Ok(self.divmod(ops, divisor)?.1)
    }

    /// Scales to a monic polynomial; zero stays zero.
    pub fn monic<A: Arith>(&self, ops: &A) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(c) if c == Gf::ONE => self.clone(),
            Some(c) => self.scale(ops, ops.invert(c)),
        }
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd<A: Arith>(&self, ops: &A, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(ops, &b).expect("b is nonzero");
            a = b;
            b = r;
        }
        a.monic(ops)
    }

    /// Formal derivative: coefficient `i` is `c_{i+1}` when `i` is even, else 0.
    pub fn derivative(&self) -> Poly {
        Poly::from_coeffs(
            (0..self.coeffs.len().saturating_sub(1))
                .map(|i| {
                    if i % 2 == 0 {
                        self.coeffs[i + 1]
                    } else {
                        Gf::ZERO
                    }
                })
                .collect(),
        )
    }

    /// `prod (x - r)` over `roots`.
    pub fn from_roots<A: Arith>(ops: &A, roots: &[Gf]) -> Poly {
        let mut coeffs = vec![Gf::ONE];
        for &r in roots {
            coeffs.push(Gf::ZERO);
            for i in (0..coeffs.len()).rev() {
                let lower = if i == 0 { Gf::ZERO } else { coeffs[i - 1] };
                let prod = if r.is_zero() || coeffs[i].is_zero() {
                    Gf::ZERO
                } else {
                    ops.mul(coeffs[i], r)
                };
                coeffs[i] = if prod.is_zero() {
                    lower
                } else {
                    ops.add(lower, prod)
                };
            }
        }
        Poly::from_coeffs(coeffs)
    }

    /// `(p(x) - p(a)) / (x - a)` by synthetic division.
    pub fn difference_quotient<A: Arith>(&self, ops: &A, a: Gf) -> Poly {
        let Some(d) = self.degree() else {
            return Poly::zero();
        };
        if d == 0 {
            return Poly::zero();
        }
        let mut out = vec![Gf::ZERO; d];
        let mut acc = self.coeffs[d];
        out[d - 1] = acc;
        for i in (1..d).rev() {
            acc = ops.add(self.coeffs[i], ops.mul(acc, a));
            out[i - 1] = acc;
        }
        Poly::from_coeffs(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;
    use proptest::prelude::*;

    fn field() -> Field {
        Field::new(12, 0x1009).unwrap()
    }

    fn p(v: &[u16]) -> Poly {
        Poly::from_coeffs(v.iter().map(|&c| Gf(c)).collect())
    }

    #[test]
    fn zero_has_no_degree() {
        assert_eq!(Poly::zero().degree(), None);
        assert!(Poly::zero().degree() < Some(0));
        assert_eq!(p(&[0, 0, 0]), Poly::zero());
        assert_eq!(p(&[5, 0]).degree(), Some(0));
    }

    #[test]
    fn square_of_x_plus_one() {
        let f = field();
        let (q, r) = p(&[1, 0, 1]).divmod(&f, &p(&[1, 1])).unwrap();
        assert_eq!(q, p(&[1, 1]));
        assert!(r.is_zero());
        assert_eq!(
            p(&[1]).divmod(&f, &Poly::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn char2_derivative() {
        // x^3 + a x^2 + b  ->  x^2
        assert_eq!(p(&[7, 0, 9, 1]).derivative(), p(&[0, 0, 1]));
        assert_eq!(Poly::one().derivative(), Poly::zero());
    }

    #[test]
    fn goppa_polynomial_is_separable() {
        // y^64 + y^3 + y + x over GF(2^12), x the field generator 0x2
        let f = field();
        let mut g = vec![0u16; 65];
        g[0] = 2;
        g[1] = 1;
        g[3] = 1;
        g[64] = 1;
        let g = p(&g);
        assert_eq!(g.gcd(&f, &g.derivative()), Poly::one());
    }

    #[test]
    fn difference_quotient_matches_division() {
        let f = field();
        let poly = p(&[3, 0x55, 7, 0, 0x100, 1]);
        let a = Gf(0x321);
        let num = poly.add(&f, &Poly::constant(poly.eval(&f, a)));
        let (q, r) = num.divmod(&f, &Poly::linear(a)).unwrap();
        assert!(r.is_zero());
        assert_eq!(poly.difference_quotient(&f, a), q);
    }

    #[test]
    fn roots_of_product() {
        let f = field();
        let roots = [Gf(0), Gf(1), Gf(0x800), Gf(0x123)];
        let poly = Poly::from_roots(&f, &roots);
        assert_eq!(poly.degree(), Some(4));
        for r in roots {
            assert_eq!(poly.eval(&f, r), Gf::ZERO);
        }
        assert_ne!(poly.eval(&f, Gf(2)), Gf::ZERO);
    }

    fn arb_poly(max_len: usize) -> impl Strategy<Value = Poly> {
        prop::collection::vec(0u16..4096, 0..max_len).prop_map(|v| p(&v))
    }

    proptest! {
        #[test]
        fn divmod_reconstructs(a in arb_poly(40), b in arb_poly(20)) {
            prop_assume!(!b.is_zero());
            let f = field();
            let (q, r) = a.divmod(&f, &b).unwrap();
            prop_assert!(r.degree() < b.degree());
            prop_assert_eq!(b.mul(&f, &q).add(&f, &r), a);
        }

        #[test]
        fn evaluation_is_a_ring_map(a in arb_poly(20), b in arb_poly(20), x in 0u16..4096) {
            let f = field();
            let x = Gf(x);
            prop_assert_eq!(a.mul(&f, &b).eval(&f, x), f.mul(a.eval(&f, x), b.eval(&f, x)));
            prop_assert_eq!(a.add(&f, &b).eval(&f, x), f.add(a.eval(&f, x), b.eval(&f, x)));
        }

        #[test]
        fn gcd_divides_both(a in arb_poly(12), b in arb_poly(12), c in arb_poly(6)) {
            let f = field();
            let a = a.mul(&f, &c);
            let b = b.mul(&f, &c);
            let g = a.gcd(&f, &b);
            prop_assume!(!g.is_zero());
            prop_assert!(a.rem(&f, &g).unwrap().is_zero());
            prop_assert!(b.rem(&f, &g).unwrap().is_zero());
            if !c.is_zero() {
                prop_assert!(g.rem(&f, &c.monic(&f)).unwrap().is_zero());
            }
        }
    }
}
