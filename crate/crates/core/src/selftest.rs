//! Quick invariant checks at small field sizes, run by the `selftest` command.

use rand::Rng;
use serde::Serialize;

use crate::bench::{random_codeword, random_error, rng_from_seed};
use crate::code::{encode_fft_systematic, encode_goppa, goppa_membership, goppa_support, CodeSpec};
use crate::decode::DecoderContext;
use crate::gf::{Field, Gf};
use crate::lch::BasisContext;
use crate::oracle::{direct_generalized_syndrome, oracle_decode};
use crate::poly::Poly;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub cases: usize,
    pub failures: usize,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

const MODULI: [(u32, u32); 5] = [(4, 0x13), (5, 0x25), (6, 0x43), (7, 0x89), (8, 0x11d)];

fn random_grs<R: Rng>(basis: &BasisContext, n: usize, k: usize, rng: &mut R) -> CodeSpec {
    let order = basis.field().order();
    let idx = rand::seq::index::sample(rng, order, n);
    let support = idx.iter().map(|i| Gf(i as u16)).collect();
    let w = (0..n).map(|_| Gf(rng.gen_range(1..order as u16))).collect();
    CodeSpec::grs(basis, support, w, k).expect("valid parameters")
}

fn field_checks(seed: u64) -> CheckResult {
    let mut rng = rng_from_seed(seed);
    let (mut cases, mut failures) = (0, 0);
    for (m, modulus) in MODULI {
        let f = Field::new(m, modulus).expect("irreducible");
        for a in f.elements().skip(1) {
            cases += 1;
            failures += usize::from(f.mul(a, f.inv_nonzero(a)) != Gf::ONE);
        }
        let q = f.order() as u16;
        for _ in 0..1000 {
            let (a, b, c) = (
                Gf(rng.gen_range(0..q)),
                Gf(rng.gen_range(0..q)),
                Gf(rng.gen_range(0..q)),
            );
            cases += 1;
            let assoc = f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c));
            let dist = f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c));
            failures += usize::from(!(assoc && dist && f.mul(a, b) == f.mul(b, a)));
        }
    }
    CheckResult {
        name: "field axioms".into(),
        cases,
        failures,
    }
}

fn transform_checks(seed: u64) -> CheckResult {
    let mut rng = rng_from_seed(seed);
    let (mut cases, mut failures) = (0, 0);
    for (m, modulus) in MODULI {
        let basis = BasisContext::polynomial(Field::new(m, modulus).expect("irreducible"));
        let f = basis.field();
        let q = f.order() as u16;
        for tau in 0..=m.min(6) {
            for _ in 0..10 {
                let beta = Gf(rng.gen_range(0..q) & !((1u16 << tau) - 1));
                let fbar: Vec<Gf> = (0..1 << tau).map(|_| Gf(rng.gen_range(0..q))).collect();
                let vals = basis.fft(f, &fbar, tau, beta).expect("length");
                let back = basis.ifft(f, &vals, tau, beta).expect("length");
                let poly = basis.xbar_to_monomial(f, &fbar).expect("length");
                let naive = (0..1usize << tau)
                    .all(|i| poly.eval(f, f.add(basis.omega(i), beta)) == vals[i]);
                cases += 1;
                failures += usize::from(*back != fbar[..] || !naive);
            }
        }
    }
    CheckResult {
        name: "transform round trip and evaluation".into(),
        cases,
        failures,
    }
}

fn syndrome_checks(seed: u64) -> CheckResult {
    let mut rng = rng_from_seed(seed);
    let (mut cases, mut failures) = (0, 0);
    for (m, modulus) in &MODULI[..3] {
        let basis = BasisContext::polynomial(Field::new(*m, *modulus).expect("irreducible"));
        let order = basis.field().order();
        for _ in 0..20 {
            let n = rng.gen_range(order / 2 + 1..=order);
            let k = rng.gen_range(1..n);
            let spec = random_grs(&basis, n, k, &mut rng);
            let ctx = DecoderContext::new(spec.clone());
            let Ok(c) = random_codeword(&spec, &mut rng) else {
                failures += 1;
                continue;
            };
            let weight = rng.gen_range(0..=n - k);
            let e = random_error(&spec, weight, &mut rng).expect("weight fits");
            let r: Vec<Gf> = c.iter().zip(&e).map(|(a, b)| Gf(a.0 ^ b.0)).collect();
            let fast = ctx.syndrome(spec.field(), &r).map(|w| w.s_poly);
            let direct = direct_generalized_syndrome(&spec, &e);
            cases += 1;
            failures += usize::from(fast.ok() != direct.ok());
        }
    }
    CheckResult {
        name: "generalized syndrome vs direct sum".into(),
        cases,
        failures,
    }
}

fn decoder_checks(seed: u64) -> CheckResult {
    let mut rng = rng_from_seed(seed);
    let (mut cases, mut failures) = (0, 0);
    let mut specs = Vec::new();
    for (m, modulus) in &MODULI[..3] {
        let basis = BasisContext::polynomial(Field::new(*m, *modulus).expect("irreducible"));
        let order = basis.field().order();
        specs.push(random_grs(&basis, order - 3, order / 2, &mut rng));
        let g = (2..order as u16)
            .map(|a| Poly::from_coeffs(vec![Gf(a), Gf::ONE, Gf::ONE]))
            .find(|g| {
                basis
                    .field()
                    .elements()
                    .all(|x| !g.eval(basis.field(), x).is_zero())
            });
        if let Some(g) = g {
            let support = goppa_support(&basis, &g, order).expect("no roots");
            specs.push(CodeSpec::goppa(&basis, support, g).expect("separable"));
        }
    }
    for spec in &specs {
        let ctx = DecoderContext::new(spec.clone());
        for weight in 0..=spec.t() {
            for _ in 0..5 {
                let c = random_codeword(spec, &mut rng).expect("encodable");
                let e = random_error(spec, weight, &mut rng).expect("weight fits");
                let r: Vec<Gf> = c.iter().zip(&e).map(|(a, b)| Gf(a.0 ^ b.0)).collect();
                let fast = ctx.decode(&r).expect("length");
                let slow = oracle_decode(spec, &r).expect("length");
                cases += 1;
                let same = fast.status == slow.status
                    && fast.error_locations == slow.error_locations
                    && fast.error_values == slow.error_values;
                failures += usize::from(!(same && fast.codeword == c));
            }
        }
    }
    CheckResult {
        name: "decoder vs reference oracle".into(),
        cases,
        failures,
    }
}

fn encoder_checks(seed: u64) -> CheckResult {
    let mut rng = rng_from_seed(seed);
    let (mut cases, mut failures) = (0, 0);
    let basis = BasisContext::polynomial(Field::new(6, 0x43).expect("irreducible"));
    let f = basis.field();
    for k in [1usize, 2, 4, 8, 16, 32] {
        let spec = random_grs_prefix(&basis, 50, k, &mut rng);
        for _ in 0..10 {
            let u: Vec<Gf> = (0..k).map(|_| Gf(rng.gen_range(0..64))).collect();
            let c = encode_fft_systematic(&spec, &u).expect("power of two");
            // Lagrange interpolation of u_j / w at omega_j, evaluated on the support.
            let layout = spec.layout();
            let pts: Vec<Gf> = (0..k).map(|j| basis.omega(j)).collect();
            let expect: Vec<Gf> = (0..spec.n())
                .map(|i| {
                    let x = spec.support()[i];
                    let mut acc = Gf::ZERO;
                    for j in 0..k {
                        let mut term = f.div(u[j], spec.w()[layout.pi(j)]).expect("nonzero w");
                        for l in (0..k).filter(|&l| l != j) {
                            let ratio = f.div(f.add(x, pts[l]), f.add(pts[j], pts[l]));
                            term = f.mul(term, ratio.expect("distinct points"));
                        }
                        acc = f.add(acc, term);
                    }
                    f.mul(spec.w()[i], acc)
                })
                .collect();
            cases += 1;
            failures += usize::from(c != expect);
        }
    }
    let g = Poly::from_coeffs(vec![Gf(3), Gf::ONE, Gf::ONE]);
    if let Ok(support) = goppa_support(&basis, &g, 60) {
        let spec = CodeSpec::goppa(&basis, support, g).expect("separable");
        let k = spec.dimension().expect("binary");
        for _ in 0..50 {
            let info: Vec<u8> = (0..k).map(|_| rng.gen_range(0..2)).collect();
            let c = encode_goppa(&spec, &info).expect("length");
            cases += 1;
            failures += usize::from(!goppa_membership(&spec, &c).unwrap_or(false));
        }
    }
    CheckResult {
        name: "encoders".into(),
        cases,
        failures,
    }
}

/// GRS code whose support starts with `omega_0..omega_{k-1}`.
fn random_grs_prefix<R: Rng>(basis: &BasisContext, n: usize, k: usize, rng: &mut R) -> CodeSpec {
    let order = basis.field().order();
    let rest = rand::seq::index::sample(rng, order - k, n - k);
    let mut support: Vec<Gf> = (0..k).map(|j| basis.omega(j)).collect();
    support.extend(rest.iter().map(|i| basis.omega(i + k)));
    let w = (0..n).map(|_| Gf(rng.gen_range(1..order as u16))).collect();
    CodeSpec::grs(basis, support, w, k).expect("valid parameters")
}

/// Runs every check with a deterministic seed.
pub fn run(seed: u64) -> Vec<CheckResult> {
    vec![
        field_checks(seed),
        transform_checks(seed.wrapping_add(1)),
        syndrome_checks(seed.wrapping_add(2)),
        decoder_checks(seed.wrapping_add(3)),
        encoder_checks(seed.wrapping_add(4)),
    ]
}

#[cfg(test)]
mod tests {
    #[test]
    fn all_pass() {
        for check in super::run(11) {
            assert!(check.passed(), "{check:?}");
            assert!(check.cases > 0, "{check:?}");
        }
    }
}
