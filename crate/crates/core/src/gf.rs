//! Arithmetic in GF(2^m) for 2 <= m <= 16.
//!
//! Elements use the polynomial-basis bit pattern: bit `i` of the value is the
//! coefficient of `x^i`. Multiplication and inversion go through log/antilog
//! tables built once per field.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A field element, stored as its polynomial-basis bit pattern.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gf(pub u16);

impl Gf {
    pub const ZERO: Gf = Gf(0);
    pub const ONE: Gf = Gf(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn value(self) -> u16 {
        self.0
    }
}

impl fmt::Debug for Gf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#x}", self.0)
    }
}

/// GF(2^m) with a verified irreducible modulus and precomputed tables.
#[derive(Clone)]
pub struct Field {
    m: u32,
    modulus: u32,
    generator: Gf,
    // exp has length 2 * (2^m - 1) so that log a + log b never needs a reduction.
    exp: Vec<u16>,
    log: Vec<u16>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("m", &self.m)
            .field("modulus", &format_args!("{:#x}", self.modulus))
            .finish()
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.modulus == other.modulus
    }
}

impl Eq for Field {}

/// Carryless product of two bit polynomials followed by reduction modulo `modulus`.
fn mul_reduce(a: u32, b: u32, modulus: u32, m: u32) -> u32 {
    let mut acc = 0u32;
    let mut a = a;
    let mut b = b;
    while b != 0 {
        if b & 1 != 0 {
            acc ^= a;
        }
        b >>= 1;
        a <<= 1;
        if a & (1 << m) != 0 {
            a ^= modulus;
        }
    }
    acc
}

fn bit_degree(p: u32) -> u32 {
    31 - p.leading_zeros()
}

/// Remainder of bit polynomial `a` modulo nonzero bit polynomial `b`.
fn bit_rem(mut a: u32, b: u32) -> u32 {
    let db = bit_degree(b);
    while a != 0 && bit_degree(a) >= db {
        a ^= b << (bit_degree(a) - db);
    }
    a
}

/// Smallest nontrivial factor of `modulus` of degree at most m/2, if any.
fn smallest_factor(modulus: u32, m: u32) -> Option<u32> {
    (1..=m / 2).find_map(|d| ((1u32 << d)..(1u32 << (d + 1))).find(|&f| bit_rem(modulus, f) == 0))
}

impl Field {
    /// Builds GF(2^m) = GF(2)[x]/(modulus).
    pub fn new(m: u32, modulus: u32) -> Result<Self> {
        if !(2..=16).contains(&m) {
            return Err(Error::DegreeOutOfRange(m));
        }
        if modulus >> m != 1 {
            return Err(Error::ModulusDegree { m, modulus });
        }
        if let Some(factor) = smallest_factor(modulus, m) {
            return Err(Error::Reducible { modulus, factor });
        }

        let order = 1usize << m;
        let group = order - 1;
        // x is not always primitive (e.g. x^4+x^3+x^2+x+1), so search.
        let generator = (2..order as u32)
            .find(|&g| {
                let mut a = g;
                let mut period = 1;
                while a != 1 {
                    a = mul_reduce(a, g, modulus, m);
                    period += 1;
                }
                period == group
            })
            .expect("multiplicative group of a finite field is cyclic");

        let mut exp = vec![0u16; 2 * group];
        let mut log = vec![0u16; order];
        let mut a = 1u32;
        for i in 0..group {
            exp[i] = a as u16;
            exp[i + group] = a as u16;
            log[a as usize] = i as u16;
            a = mul_reduce(a, generator, modulus, m);
        }

        Ok(Field {
            m,
            modulus,
            generator: Gf(generator as u16),
            exp,
            log,
        })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Number of field elements, 2^m.
    pub fn order(&self) -> usize {
        1 << self.m
    }

    /// The primitive element used to build the tables.
    pub fn generator(&self) -> Gf {
        self.generator
    }

    /// Checked conversion from an integer bit pattern.
    pub fn element(&self, value: u32) -> Result<Gf> {
        if value >> self.m != 0 {
            return Err(Error::ElementOutOfRange { value, m: self.m });
        }
        Ok(Gf(value as u16))
    }

    pub fn elements(&self) -> impl Iterator<Item = Gf> {
        (0..self.order() as u32).map(|v| Gf(v as u16))
    }

    #[inline]
    pub fn add(&self, a: Gf, b: Gf) -> Gf {
        Gf(a.0 ^ b.0)
    }

    #[inline]
    pub fn mul(&self, a: Gf, b: Gf) -> Gf {
        if a.0 == 0 || b.0 == 0 {
            return Gf::ZERO;
        }
        let s = self.log[a.0 as usize] as usize + self.log[b.0 as usize] as usize;
        Gf(self.exp[s])
    }

    #[inline]
    pub fn square(&self, a: Gf) -> Gf {
        self.mul(a, a)
    }

    pub fn inv(&self, a: Gf) -> Result<Gf> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.inv_nonzero(a))
    }

    /// Inverse of an element known to be nonzero.
    ///
    /// Panics on zero.
    #[inline]
    pub fn inv_nonzero(&self, a: Gf) -> Gf {
        assert!(a.0 != 0, "inverse of zero in GF(2^{})", self.m);
        let group = self.order() - 1;
        Gf(self.exp[group - self.log[a.0 as usize] as usize])
    }

    pub fn div(&self, a: Gf, b: Gf) -> Result<Gf> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Gf, e: u64) -> Gf {
        if e == 0 {
            return Gf::ONE;
        }
        if a.0 == 0 {
            return Gf::ZERO;
        }
        let group = (self.order() - 1) as u64;
        let l = (self.log[a.0 as usize] as u64 * (e % group)) % group;
        Gf(self.exp[l as usize])
    }

    /// Hex digits used for the textual element form.
    pub fn hex_width(&self) -> usize {
        self.m.div_ceil(4) as usize
    }

    /// Zero-padded lowercase hex of width ceil(m/4).
    pub fn format_element(&self, a: Gf) -> String {
        format!("{:0width$x}", a.0, width = self.hex_width())
    }

    /// Parses the textual element form; an optional `0x` prefix is accepted.
    pub fn parse_element(&self, text: &str) -> Result<Gf, String> {
        let digits = text.trim_start_matches("0x");
        let value = u32::from_str_radix(digits, 16).map_err(|e| format!("{text:?}: {e}"))?;
        self.element(value).map_err(|e| e.to_string())
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor {
            m: self.m,
            modulus: self.modulus,
        }
    }
}

/// Serialized field description, `{"m": 13, "modulus": "0x201b"}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub m: u32,
    #[serde(with = "hex_u32")]
    pub modulus: u32,
}

impl FieldDescriptor {
    pub fn build(&self) -> Result<Field> {
        Field::new(self.m, self.modulus)
    }
}

pub(crate) mod hex_u32 {
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &u32, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format!("{value:#x}"))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<u32, D::Error> {
        let text = String::deserialize(d)?;
        let digits = text
            .strip_prefix("0x")
            .ok_or_else(|| de::Error::custom(format!("expected 0x-prefixed hex, got {text:?}")))?;
        u32::from_str_radix(digits, 16).map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preset_moduli_are_irreducible() {
        assert!(Field::new(13, 0x201b).is_ok());
        assert!(Field::new(12, 0x1009).is_ok());
    }

    #[test]
    fn reducible_modulus_names_a_factor() {
        // x^4 + x^2 + 1 = (x^2 + x + 1)^2
        assert_eq!(
            Field::new(4, 0b10101),
            Err(Error::Reducible {
                modulus: 0b10101,
                factor: 0b111
            })
        );
    }

    #[test]
    fn parameter_errors() {
        assert_eq!(Field::new(1, 0b11), Err(Error::DegreeOutOfRange(1)));
        assert_eq!(Field::new(17, 0x2002d), Err(Error::DegreeOutOfRange(17)));
        assert_eq!(
            Field::new(4, 0b1011),
            Err(Error::ModulusDegree {
                m: 4,
                modulus: 0b1011
            })
        );
    }

    #[test]
    fn non_primitive_x_still_builds() {
        // x has order 5 modulo x^4+x^3+x^2+x+1
        let f = Field::new(4, 0b11111).unwrap();
        assert_ne!(f.generator(), Gf(2));
        for a in f.elements().skip(1) {
            assert_eq!(f.mul(a, f.inv(a).unwrap()), Gf::ONE);
        }
    }

    #[test]
    fn small_examples() {
        let f = Field::new(13, 0x201b).unwrap();
        assert_eq!(f.add(Gf(3), Gf(5)), Gf(6));
        assert_eq!(f.add(Gf(0x123), Gf(0x123)), Gf::ZERO);
        assert_eq!(f.mul(Gf(2), Gf(0x1000)), Gf(0x1b));
        assert_eq!(f.mul(Gf(0x777), Gf::ONE), Gf(0x777));
        assert_eq!(f.mul(Gf(0x777), Gf::ZERO), Gf::ZERO);
        assert_eq!(f.inv(Gf::ONE), Ok(Gf::ONE));
        assert_eq!(f.inv(Gf::ZERO), Err(Error::DivisionByZero));
    }

    #[test]
    fn tables_round_trip() {
        let f = Field::new(8, 0x11d).unwrap();
        for a in 1..256u16 {
            assert_eq!(f.exp[f.log[a as usize] as usize], a);
        }
        let group = f.order() - 1;
        assert_eq!(f.exp[group], f.exp[0]);
    }

    #[test]
    fn element_text_form() {
        let f = Field::new(13, 0x201b).unwrap();
        assert_eq!(f.format_element(Gf(0x1b)), "001b");
        assert_eq!(f.parse_element("001b"), Ok(Gf(0x1b)));
        assert_eq!(f.parse_element("0x1fff"), Ok(Gf(0x1fff)));
        assert!(f.parse_element("2000").is_err());
        let g = Field::new(5, 0b100101).unwrap();
        assert_eq!(g.format_element(Gf(3)), "03");
    }

    #[test]
    fn descriptor_json() {
        let f = Field::new(12, 0x1009).unwrap();
        let json = serde_json::to_string(&f.descriptor()).unwrap();
        assert_eq!(json, r#"{"m":12,"modulus":"0x1009"}"#);
        let back: FieldDescriptor = serde_json::from_str(&json).unwrap();
        assert_eq!(back.build().unwrap(), f);
    }
}
