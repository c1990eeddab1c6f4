//! Slow reference decoding: power-sum syndromes, Berlekamp-Massey, a full
//! Horner root scan and Forney's formula.
//!
//! Serves as ground truth for the transform decoder and as the conventional
//! baseline in operation-count comparisons.

use crate::arith::{counting_field, Arith};
use crate::code::CodeSpec;
use crate::decode::{DecodeResult, DecodeStatus, FailureReason, PhaseCounts};
use crate::error::Result;
use crate::gf::Gf;
use crate::poly::Poly;

/// `S_l = sum_i r_i y_i alpha_i^l` for `l < rows`, i.e. `H r^T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSumSyndromes(pub Vec<Gf>);

impl PowerSumSyndromes {
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|s| s.is_zero())
    }
}

/// `T(x) = prod_{j < rows} (x - omega_j)`, expanded directly.
pub fn t_polynomial(spec: &CodeSpec) -> Poly {
    Poly::from_roots(spec.field(), &spec.basis().omegas()[..spec.redundancy()])
}

/// `sum_i r_i y_i (T(x) - T(alpha_i)) / (x - alpha_i)`, one synthetic division per term.
pub fn direct_generalized_syndrome(spec: &CodeSpec, r: &[Gf]) -> Result<Poly> {
    spec.check_length(r)?;
    let f = spec.field();
    let t = t_polynomial(spec);
    let mut acc = Poly::zero();
    for ((&ri, &yi), &a) in r.iter().zip(spec.y()).zip(spec.support()) {
        if ri.is_zero() {
            continue;
        }
        let term = t.difference_quotient(f, a).scale(f, f.mul(ri, yi));
        acc = acc.add(f, &term);
    }
    Ok(acc)
}

pub fn power_sum_syndromes<A: Arith>(
    ops: &A,
    spec: &CodeSpec,
    r: &[Gf],
) -> Result<PowerSumSyndromes> {
    spec.check_length(r)?;
    let mut s = vec![Gf::ZERO; spec.redundancy()];
    for ((&ri, &yi), &a) in r.iter().zip(spec.y()).zip(spec.support()) {
        if ri.is_zero() {
            continue;
        }
        let mut term = ops.mul(ri, yi);
        let last = s.len() - 1;
        for (l, sl) in s.iter_mut().enumerate() {
            *sl = ops.add(*sl, term);
            if l < last {
                term = ops.mul(term, a);
            }
        }
    }
    Ok(PowerSumSyndromes(s))
}

/// Shortest LFSR generating `s`: the connection polynomial
/// `Lambda(x) = prod_i (1 - X_i x)` with `Lambda(0) = 1`, and its length `L`.
///
/// `L` may exceed `deg Lambda` when some `X_i = 0`.
pub fn berlekamp_massey<A: Arith>(ops: &A, s: &PowerSumSyndromes) -> (Poly, usize) {
    let s = &s.0;
    let mut c = vec![Gf::ONE];
    let mut b = vec![Gf::ONE];
    let mut len = 0usize;
    let mut shift = 1usize;
    let mut last_d = Gf::ONE;
    for k in 0..s.len() {
        let mut d = s[k];
        for i in 1..=len.min(c.len() - 1) {
            d = ops.add(d, ops.mul(c[i], s[k - i]));
        }
        if d.is_zero() {
            shift += 1;
            continue;
        }
        let coef = ops.divide(d, last_d);
        let prev = c.clone();
        if c.len() < b.len() + shift {
            c.resize(b.len() + shift, Gf::ZERO);
        }
        for (i, &bi) in b.iter().enumerate() {
            c[i + shift] = ops.add(c[i + shift], ops.mul(coef, bi));
        }
        if 2 * len <= k {
            len = k + 1 - len;
            b = prev;
            last_d = d;
            shift = 1;
        } else {
            shift += 1;
        }
    }
    (Poly::from_coeffs(c), len)
}

/// `x^len p(1/x)`.
fn reverse(p: &Poly, len: usize) -> Poly {
    let mut coeffs = p.padded(len + 1);
    coeffs.truncate(len + 1);
    coeffs.reverse();
    Poly::from_coeffs(coeffs)
}

/// Decodes `r` with the conventional chain, counting field operations.
pub fn oracle_decode(spec: &CodeSpec, r: &[Gf]) -> Result<DecodeResult> {
    spec.check_length(r)?;
    let f = spec.field();
    let ops = counting_field(f);
    let mut phases = PhaseCounts::default();
    let failure = |reason, phases: PhaseCounts| DecodeResult {
        status: DecodeStatus::Failure(reason),
        codeword: r.to_vec(),
        error_locations: Vec::new(),
        error_values: Vec::new(),
        op_counts: phases.total(),
        phases,
    };

    let s = power_sum_syndromes(&ops, spec, r)?;
    phases.syndrome = ops.counts();
    if s.is_zero() {
        return Ok(DecodeResult {
            status: DecodeStatus::NoError,
            codeword: r.to_vec(),
            error_locations: Vec::new(),
            error_values: Vec::new(),
            op_counts: phases.total(),
            phases,
        });
    }

    let mark = ops.counts();
    let (conn, len) = berlekamp_massey(&ops, &s);
    let rows = spec.redundancy();
    let valid = len <= spec.t() && conn.degree().is_some_and(|d| d <= len);
    // Omega = S Lambda mod x^rows, with deg Omega < L for a genuine pattern.
    let omega = valid.then(|| {
        let sp = Poly::from_coeffs(s.0.clone());
        let prod = sp.mul(&ops, &conn);
        Poly::from_coeffs(prod.coeffs().iter().take(rows).copied().collect())
    });
    phases.key_equation = ops.counts() - mark;
    let Some(omega) = omega.filter(|o| o.degree().is_none_or(|d| d < len)) else {
        return Ok(failure(FailureReason::TooManyErrors, phases));
    };
    // Roots at alpha_i rather than at alpha_i^{-1}; L keeps the factors with alpha_i = 0.
    let lambda = reverse(&conn, len);
    let omega = reverse(&omega, len - 1);

    let mark = ops.counts();
    let roots: Vec<usize> = spec
        .support()
        .iter()
        .enumerate()
        .filter(|&(_, &a)| lambda.eval(&ops, a).is_zero())
        .map(|(i, _)| i)
        .collect();
    phases.chien = ops.counts() - mark;
    if roots.len() != len {
        return Ok(failure(FailureReason::RootCountMismatch, phases));
    }

    let mark = ops.counts();
    let dlambda = lambda.derivative();
    let mut values = Vec::with_capacity(len);
    let mut reason = None;
    for &i in &roots {
        let a = spec.support()[i];
        let den = dlambda.eval(&ops, a);
        if den.is_zero() {
            reason = Some(FailureReason::RepeatedRoot);
            break;
        }
        let num = omega.eval(&ops, a);
        values.push(ops.divide(num, ops.mul(den, spec.y()[i])));
    }
    phases.forney = ops.counts() - mark;
    if let Some(reason) = reason {
        return Ok(failure(reason, phases));
    }
    if values.iter().any(|v| v.is_zero()) {
        return Ok(failure(FailureReason::InconsistentErrorValue, phases));
    }
    if spec.is_binary() && values.iter().any(|&v| v != Gf::ONE) {
        return Ok(failure(FailureReason::NonBinaryError, phases));
    }

    let mut codeword = r.to_vec();
    for (&i, &e) in roots.iter().zip(&values) {
        codeword[i] = f.add(codeword[i], e);
    }
    Ok(DecodeResult {
        status: DecodeStatus::Corrected,
        codeword,
        error_locations: roots,
        error_values: values,
        op_counts: phases.total(),
        phases,
    })
}
