use fftdecode::{BasisContext, Field, Gf, Poly};
use proptest::prelude::*;

const MODULI: [(u32, u32); 7] = [
    (2, 0x7),
    (3, 0xb),
    (4, 0x13),
    (5, 0x25),
    (6, 0x43),
    (7, 0x89),
    (8, 0x11d),
];

/// Shift-and-add product reduced by the modulus.
fn carryless(a: u32, b: u32, m: u32, modulus: u32) -> u32 {
    let mut prod = 0u32;
    for i in 0..m {
        if b >> i & 1 == 1 {
            prod ^= a << i;
        }
    }
    for bit in (m..2 * m).rev() {
        if prod >> bit & 1 == 1 {
            prod ^= modulus << (bit - m);
        }
    }
    prod
}

#[test]
fn multiplication_matches_carryless_exhaustively() {
    for (m, modulus) in MODULI {
        let f = Field::new(m, modulus).unwrap();
        for a in 0..1u32 << m {
            for b in 0..1u32 << m {
                let got = f.mul(Gf(a as u16), Gf(b as u16));
                assert_eq!(got.0 as u32, carryless(a, b, m, modulus), "m={m} {a}*{b}");
            }
        }
    }
}

#[test]
fn reducible_moduli_are_rejected() {
    assert!(Field::new(4, 0x15).is_err());
    assert!(Field::new(8, 0x101).is_err());
    assert!(Field::new(8, 0x13).is_err());
    assert!(Field::new(1, 0x3).is_err());
}

#[test]
fn subspace_polynomials_vanish_on_their_span() {
    let f = Field::new(6, 0x43).unwrap();
    let basis = BasisContext::new(f.clone(), [5, 9, 17, 33, 2, 1].map(Gf).to_vec()).unwrap();
    for tau in 0..=6u32 {
        let s = basis.subspace_poly(tau);
        assert_eq!(s.degree(), Some(1 << tau));
        for j in 0..64usize {
            let x = basis.omega(j);
            assert_eq!(s.eval(&f, x).is_zero(), j < 1 << tau);
            assert_eq!(basis.subspace_eval(&f, tau, x), s.eval(&f, x));
        }
    }
}

proptest! {
    #[test]
    fn large_field_axioms(a in 0u16..8192, b in 0u16..8192, c in 0u16..8192) {
        let f = Field::new(13, 0x201b).unwrap();
        let (a, b, c) = (Gf(a), Gf(b), Gf(c));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.mul(a, b).0 as u32, carryless(a.0 as u32, b.0 as u32, 13, 0x201b));
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), Gf::ONE);
        }
    }

    #[test]
    fn xbar_conversion_round_trip(coeffs in prop::collection::vec(0u16..256, 1..=128)) {
        let basis = BasisContext::polynomial(Field::new(8, 0x11d).unwrap());
        let f = basis.field();
        let p = Poly::from_coeffs(coeffs.into_iter().map(Gf).collect());
        let tau = 7;
        let xbar = basis.monomial_to_xbar(f, &p, tau).unwrap();
        prop_assert_eq!(basis.xbar_to_monomial(f, &xbar).unwrap(), p.clone());
        let vals = basis.fft(f, &xbar, tau, Gf(128)).unwrap();
        for (i, v) in vals.iter().enumerate().step_by(9) {
            prop_assert_eq!(*v, p.eval(f, f.add(basis.omega(i), Gf(128))));
        }
    }
}
