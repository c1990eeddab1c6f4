//! Operation-count benchmark comparing the transform decoder with the
//! conventional baseline, plus the random channel used by tests and the CLI.

use std::time::Instant;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::arith::OpCounts;
use crate::code::{bits_to_symbols, encode_goppa, encode_grs, CodeKind, CodeSpec};
use crate::decode::{DecodeStatus, DecoderContext};
use crate::error::{Error, Result};
use crate::gf::{FieldDescriptor, Gf};
use crate::oracle::oracle_decode;
use crate::poly::Poly;

pub const RNG_NAME: &str = "ChaCha8Rng";

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniformly random codeword.
pub fn random_codeword<R: Rng>(spec: &CodeSpec, rng: &mut R) -> Result<Vec<Gf>> {
    if spec.is_binary() {
        let k = spec.dimension()?;
        let info: Vec<u8> = (0..k).map(|_| rng.gen_range(0..2)).collect();
        Ok(bits_to_symbols(&encode_goppa(spec, &info)?))
    } else {
        let q = spec.field().order();
        let msg = Poly::from_coeffs(
            (0..spec.k())
                .map(|_| Gf(rng.gen_range(0..q) as u16))
                .collect(),
        );
        encode_grs(spec, &msg)
    }
}

/// Error pattern of exactly `weight` nonzero symbols at distinct random
/// positions; values are 1 for binary codes and uniform nonzero otherwise.
pub fn random_error<R: Rng>(spec: &CodeSpec, weight: usize, rng: &mut R) -> Result<Vec<Gf>> {
    let n = spec.n();
    if weight > n {
        return Err(Error::InvalidParameters(format!(
            "weight {weight} exceeds length {n}"
        )));
    }
    let q = spec.field().order();
    let mut e = vec![Gf::ZERO; n];
    for i in rand::seq::index::sample(rng, n, weight) {
        e[i] = if spec.is_binary() {
            Gf::ONE
        } else {
            Gf(rng.gen_range(1..q) as u16)
        };
    }
    Ok(e)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CodeDescriptor {
    pub kind: CodeKind,
    pub field: FieldDescriptor,
    pub n: usize,
    pub redundancy: usize,
    pub t: usize,
}

impl CodeDescriptor {
    pub fn of(spec: &CodeSpec) -> Self {
        CodeDescriptor {
            kind: spec.kind(),
            field: spec.field().descriptor(),
            n: spec.n(),
            redundancy: spec.redundancy(),
            t: spec.t(),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct MeanCounts {
    pub additions: f64,
    pub multiplications: f64,
    pub inversions: f64,
}

impl MeanCounts {
    fn from_total(total: OpCounts, trials: usize) -> Self {
        let t = trials as f64;
        MeanCounts {
            additions: total.additions as f64 / t,
            multiplications: total.multiplications as f64 / t,
            inversions: total.inversions as f64 / t,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MethodReport {
    pub mean: MeanCounts,
    pub max: OpCounts,
    pub successes: usize,
    pub wall_time_ms: f64,
}

/// Published counts for one of the two McEliece parameter sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PaperReference {
    pub table: String,
    pub proposed: OpCounts,
    pub macwilliams: OpCounts,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    pub code: CodeDescriptor,
    pub weight: usize,
    pub trials: usize,
    pub seed: u64,
    pub rng: String,
    pub proposed: MethodReport,
    pub oracle: MethodReport,
    /// Trials where both decoders returned the same status and correction.
    pub agreements: usize,
    pub paper: Option<PaperReference>,
    pub counting: String,
}

const COUNTING_NOTE: &str = "per-codeword field operations; precomputed tables and \
constants excluded; operations with a zero operand are free; a division is one \
inversion plus one multiplication";

fn poly_from_terms(terms: &[(usize, u16)]) -> Poly {
    let top = terms.iter().map(|t| t.0).max().unwrap_or(0);
    let mut c = vec![Gf::ZERO; top + 1];
    for &(d, v) in terms {
        c[d] = Gf(v);
    }
    Poly::from_coeffs(c)
}

/// Reference counts when `spec` uses one of the published parameter sets.
pub fn paper_reference(spec: &CodeSpec) -> Option<PaperReference> {
    let g = spec.goppa_poly()?;
    let f = spec.field();
    let table_one = poly_from_terms(&[(64, 1), (3, 1), (1, 1), (0, 2)]);
    let table_two = poly_from_terms(&[(128, 1), (7, 1), (2, 1), (1, 1), (0, 1)]);
    if (f.m(), f.modulus(), spec.n()) == (12, 0x1009, 3488) && *g == table_one {
        Some(PaperReference {
            table: "3488/64".into(),
            proposed: OpCounts::new(103_720, 63_568, 128),
            macwilliams: OpCounts::new(693_857, 689_889, 3_617),
        })
    } else if (f.m(), f.modulus(), spec.n()) == (13, 0x201b, 8192) && *g == table_two {
        Some(PaperReference {
            table: "8192/128".into(),
            proposed: OpCounts::new(243_176, 148_976, 256),
            macwilliams: OpCounts::new(3_235_840, 3_219_712, 8_448),
        })
    } else {
        None
    }
}

/// Runs `trials` decodes of random codewords hit by `weight` errors with both decoders.
pub fn bench(spec: &CodeSpec, trials: usize, weight: usize, seed: u64) -> Result<BenchReport> {
    if trials == 0 {
        return Err(Error::InvalidParameters("trials must be at least 1".into()));
    }
    if weight > spec.t() {
        return Err(Error::InvalidParameters(format!(
            "weight {weight} exceeds the correction radius {}",
            spec.t()
        )));
    }
    let ctx = DecoderContext::new(spec.clone());
    let mut rng = rng_from_seed(seed);
    let mut totals = [OpCounts::default(); 2];
    let mut maxima = [OpCounts::default(); 2];
    let mut successes = [0usize; 2];
    let mut elapsed = [0f64; 2];
    let mut agreements = 0;

    for _ in 0..trials {
        let c = random_codeword(spec, &mut rng)?;
        let e = random_error(spec, weight, &mut rng)?;
        let r: Vec<Gf> = c.iter().zip(&e).map(|(&a, &b)| Gf(a.0 ^ b.0)).collect();

        let start = Instant::now();
        let fast = ctx.decode(&r)?;
        elapsed[0] += start.elapsed().as_secs_f64();
        let start = Instant::now();
        let slow = oracle_decode(spec, &r)?;
        elapsed[1] += start.elapsed().as_secs_f64();

        for (k, res) in [&fast, &slow].into_iter().enumerate() {
            totals[k] += res.op_counts;
            let m = &mut maxima[k];
            m.additions = m.additions.max(res.op_counts.additions);
            m.multiplications = m.multiplications.max(res.op_counts.multiplications);
            m.inversions = m.inversions.max(res.op_counts.inversions);
            let expected = if weight == 0 {
                DecodeStatus::NoError
            } else {
                DecodeStatus::Corrected
            };
            if res.status == expected && res.codeword == c {
                successes[k] += 1;
            }
        }
        if fast.status == slow.status
            && fast.codeword == slow.codeword
            && fast.error_locations == slow.error_locations
            && fast.error_values == slow.error_values
        {
            agreements += 1;
        }
    }

    let method = |k: usize| MethodReport {
        mean: MeanCounts::from_total(totals[k], trials),
        max: maxima[k],
        successes: successes[k],
        wall_time_ms: elapsed[k] * 1e3,
    };
    Ok(BenchReport {
        code: CodeDescriptor::of(spec),
        weight,
        trials,
        seed,
        rng: RNG_NAME.into(),
        proposed: method(0),
        oracle: method(1),
        agreements,
        paper: paper_reference(spec),
        counting: COUNTING_NOTE.into(),
    })
}

impl BenchReport {
    /// Aligned text table, one row per method.
    pub fn table(&self) -> String {
        let c = &self.code;
        let mut out = format!(
            "{:?} code, n = {}, t = {}, over GF(2^{}) mod {:#x}; weight {}, {} trial(s), seed {} ({})\n",
            c.kind, c.n, c.t, c.field.m, c.field.modulus, self.weight, self.trials, self.seed, self.rng
        );
        out += &format!(
            "{:<28}{:>14}{:>18}{:>12}{:>12}\n",
            "Decoding method", "Additions", "Multiplications", "Inversions", "Time (ms)"
        );
        let mut row = |name: &str, m: &MeanCounts, ms: Option<f64>| {
            out += &format!(
                "{:<28}{:>14.0}{:>18.0}{:>12.0}{:>12}\n",
                name,
                m.additions,
                m.multiplications,
                m.inversions,
                ms.map_or(String::new(), |t| format!("{:.3}", t / self.trials as f64))
            );
        };
        row(
            "MacWilliams (oracle)",
            &self.oracle.mean,
            Some(self.oracle.wall_time_ms),
        );
        row(
            "Proposed",
            &self.proposed.mean,
            Some(self.proposed.wall_time_ms),
        );
        if let Some(p) = &self.paper {
            let mc = MeanCounts::from_total(p.macwilliams, 1);
            let pc = MeanCounts::from_total(p.proposed, 1);
            row(&format!("Published MacWilliams ({})", p.table), &mc, None);
            row(&format!("Published proposed ({})", p.table), &pc, None);
        }
        out += &format!(
            "successes: proposed {}/{}, oracle {}/{}; agreement {}/{}\n",
            self.proposed.successes,
            self.trials,
            self.oracle.successes,
            self.trials,
            self.agreements,
            self.trials
        );
        out
    }
}
