//! The transform-based unified decoder.
//!
//! With `T(x) = prod_{j < rows} (x - omega_j)` the generalized syndrome
//! `S(x) = sum_i r_i y_i (T(x) - T(alpha_i)) / (x - alpha_i)` depends only on the
//! error pattern. It is obtained from the high part of the inverse transform of
//! the permuted received word, then `S lambda = q T + z` is solved by the
//! extended Euclidean algorithm, roots of `lambda` are found with forward
//! transforms and values follow from `e = q(alpha) / (y lambda'(alpha))`.

use serde::{Deserialize, Serialize};

use crate::arith::{counting_field, Arith, OpCounts};
use crate::code::{syndrome_vector, CodeSpec};
use crate::error::Result;
use crate::gf::{Field, Gf};
use crate::lch::{BasisContext, XbarCoeffs};
use crate::poly::Poly;

/// Key-equation solver selection. Only the Euclidean solver is implemented.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KeySolver {
    #[default]
    Euclid,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FailureReason {
    TooManyErrors,
    RepeatedRoot,
    RootCountMismatch,
    NonBinaryError,
    InconsistentErrorValue,
    ResidualSyndrome,
}

impl std::fmt::Display for FailureReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DecodeStatus {
    NoError,
    Corrected,
    Failure(FailureReason),
}

impl DecodeStatus {
    pub fn is_success(self) -> bool {
        !matches!(self, DecodeStatus::Failure(_))
    }
}

/// Operation counts split by decoding step; they sum to the total.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhaseCounts {
    pub syndrome: OpCounts,
    pub key_equation: OpCounts,
    pub chien: OpCounts,
    pub forney: OpCounts,
}

impl PhaseCounts {
    pub fn total(&self) -> OpCounts {
        self.syndrome + self.key_equation + self.chien + self.forney
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeResult {
    pub status: DecodeStatus,
    /// The corrected word, or the received word on failure.
    pub codeword: Vec<Gf>,
    /// Support positions in increasing order.
    pub error_locations: Vec<usize>,
    pub error_values: Vec<Gf>,
    pub op_counts: OpCounts,
    pub phases: PhaseCounts,
}

impl DecodeResult {
    fn failure(reason: FailureReason, r: &[Gf], phases: PhaseCounts) -> Self {
        DecodeResult {
            status: DecodeStatus::Failure(reason),
            codeword: r.to_vec(),
            error_locations: Vec::new(),
            error_values: Vec::new(),
            op_counts: phases.total(),
            phases,
        }
    }

    /// The error pattern as a length-`n` vector.
    pub fn error_vector(&self, n: usize) -> Vec<Gf> {
        let mut e = vec![Gf::ZERO; n];
        for (&i, &v) in self.error_locations.iter().zip(&self.error_values) {
            e[i] = v;
        }
        e
    }
}

/// Intermediate values of the syndrome computation.
#[derive(Debug, Clone)]
pub struct SyndromeWork {
    /// Coordinates of `S1` in `Xbar_0..Xbar_{eps-1}`.
    pub s1_xbar: XbarCoeffs,
    /// `S1(omega_0..omega_{eps-1})`, empty when `rows = eps`.
    pub s1_evals: Vec<Gf>,
    /// Coordinates of `eta4`; `None` when `rows = eps`.
    pub eta4: Option<XbarCoeffs>,
    /// `S(omega_0..omega_{rows-1})`, empty when `rows = eps`.
    pub s_evals: Vec<Gf>,
    pub s_xbar: XbarCoeffs,
    pub s_poly: Poly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KeySolution {
    pub lambda: Poly,
    pub z: Poly,
    pub q: Poly,
}

#[derive(Debug, Clone)]
pub struct DecoderContext {
    spec: CodeSpec,
    mu: u32,
    epsilon: usize,
    rows: usize,
    t_poly: Poly,
    // (prod_{l = rows}^{eps-1} (omega_j - omega_l))^{-1} for j < rows
    tail_prod_inv: Vec<Gf>,
    p_norm_inv: Gf,
    y_by_omega: Vec<Gf>,
    blocks: Vec<Vec<usize>>,
    solver: KeySolver,
    recheck: bool,
}

fn ceil_log2(x: usize) -> u32 {
    x.next_power_of_two().trailing_zeros()
}

impl DecoderContext {
    pub fn new(spec: CodeSpec) -> Self {
        let basis = spec.basis();
        let f = basis.field();
        let rows = spec.redundancy();
        let mu = ceil_log2(rows);
        let epsilon = 1usize << mu;
        let m = f.m();

        let t_poly = Poly::from_roots(f, &basis.omegas()[..rows]);
        let tail_prod_inv = (0..rows)
            .map(|j| {
                let prod = (rows..epsilon).fold(Gf::ONE, |acc, l| {
                    f.mul(acc, f.add(basis.omega(j), basis.omega(l)))
                });
                f.inv_nonzero(prod)
            })
            .collect();
        let p_norm_inv = f.inv_nonzero(basis.p(f.order() - epsilon));

        let layout = spec.layout();
        let mut y_by_omega = vec![Gf::ZERO; f.order()];
        for (j, slot) in y_by_omega.iter_mut().enumerate() {
            if let Some(i) = layout.position(j) {
                *slot = spec.y()[i];
            }
        }
        let blocks = (0..=m).map(|tau| layout.blocks(tau)).collect();

        DecoderContext {
            spec,
            mu,
            epsilon,
            rows,
            t_poly,
            tail_prod_inv,
            p_norm_inv,
            y_by_omega,
            blocks,
            solver: KeySolver::Euclid,
            recheck: false,
        }
    }

    /// Enables the final `H c^T = 0` check. It is not counted.
    pub fn with_recheck(mut self, recheck: bool) -> Self {
        self.recheck = recheck;
        self
    }

    pub fn with_solver(mut self, solver: KeySolver) -> Self {
        self.solver = solver;
        self
    }

    pub fn spec(&self) -> &CodeSpec {
        &self.spec
    }

    fn basis(&self) -> &BasisContext {
        self.spec.basis()
    }

    pub fn field(&self) -> &Field {
        self.spec.field()
    }

    pub fn mu(&self) -> u32 {
        self.mu
    }

    pub fn epsilon(&self) -> usize {
        self.epsilon
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    /// `T(x) = prod_{j < rows} (x - omega_j)`.
    pub fn t_poly(&self) -> &Poly {
        &self.t_poly
    }

    pub fn tail_prod_inv(&self) -> &[Gf] {
        &self.tail_prod_inv
    }

    /// `p_{2^m - 2^mu}^{-1}`.
    pub fn p_norm_inv(&self) -> Gf {
        self.p_norm_inv
    }

    /// Aligned blocks of size `2^tau` meeting the support.
    pub fn blocks(&self, tau: u32) -> &[usize] {
        &self.blocks[tau as usize]
    }

    pub fn recheck(&self) -> bool {
        self.recheck
    }

    pub fn solver(&self) -> KeySolver {
        self.solver
    }

    /// `r'_j = r_{pi(j)} y_{pi(j)}` over all of omega space, zero off the support.
    pub fn lift_received<A: Arith>(&self, ops: &A, r: &[Gf]) -> Result<Vec<Gf>> {
        self.spec.check_length(r)?;
        let layout = self.spec.layout();
        let mut lifted = vec![Gf::ZERO; self.field().order()];
        for &b in self.blocks(self.mu) {
            for j in b * self.epsilon..(b + 1) * self.epsilon {
                if let Some(i) = layout.position(j) {
                    lifted[j] = ops.mul(r[i], self.y_by_omega[j]);
                }
            }
        }
        Ok(lifted)
    }

    /// Coordinates of `S1(x) = sum_j r'_j (s_mu(x) - s_mu(omega_j)) / (x - omega_j)`.
    pub fn syndrome_s1<A: Arith>(&self, ops: &A, lifted: &[Gf]) -> XbarCoeffs {
        let eps = self.epsilon;
        let basis = self.basis();
        let mut acc = vec![Gf::ZERO; eps];
        let mut buf = vec![Gf::ZERO; eps];
        for &b in self.blocks(self.mu) {
            let block = &lifted[b * eps..(b + 1) * eps];
            if block.iter().all(|x| x.is_zero()) {
                continue;
            }
            buf.copy_from_slice(block);
            basis.ifft_in_place(ops, &mut buf, basis.omega(b * eps));
            ops.add_assign_slice(&mut acc, &buf);
        }
        for x in acc.iter_mut() {
            *x = ops.mul(*x, self.p_norm_inv);
        }
        XbarCoeffs::new(acc).expect("power-of-two length")
    }

    /// `S(x)` as the quotient of `S1` by `prod_{l = rows}^{eps-1} (x - omega_l)`.
    pub fn syndrome_s<A: Arith>(&self, ops: &A, s1: XbarCoeffs) -> Result<SyndromeWork> {
        let basis = self.basis();
        let eps = self.epsilon;
        let rows = self.rows;
        if rows == eps {
            let s_poly = basis.xbar_to_monomial(ops, &s1)?;
            return Ok(SyndromeWork {
                s1_xbar: s1.clone(),
                s1_evals: Vec::new(),
                eta4: None,
                s_evals: Vec::new(),
                s_xbar: s1,
                s_poly,
            });
        }
        let s1_evals = basis.fft(ops, &s1, self.mu, Gf::ZERO)?;

        // eta4 agrees with S1 on omega_rows..omega_{eps-1}, which are
        // omega_{eps-1} + omega_i for i < eps - rows.
        let h = eps - rows;
        let tau = ceil_log2(h);
        let size = 1usize << tau;
        let known: Vec<Gf> = (0..h).map(|i| s1_evals[eps - 1 - i]).collect();
        let eta4 = basis.ifft_prefix(ops, &known, tau, basis.omega(eps - 1))?;

        let mut s_evals = Vec::with_capacity(rows);
        let mut buf = vec![Gf::ZERO; size];
        for b in 0..rows.div_ceil(size) {
            buf.copy_from_slice(&eta4);
            basis.fft_in_place(ops, &mut buf, basis.omega(b * size));
            for (off, &e) in buf.iter().enumerate() {
                let j = b * size + off;
                if j < rows {
                    s_evals.push(ops.mul(ops.add(s1_evals[j], e), self.tail_prod_inv[j]));
                }
            }
        }
        let s_xbar = basis.ifft_prefix(ops, &s_evals, self.mu, Gf::ZERO)?;
        let s_poly = basis.xbar_to_monomial(ops, &s_xbar)?;
        Ok(SyndromeWork {
            s1_xbar: s1,
            s1_evals,
            eta4: Some(eta4),
            s_evals,
            s_xbar,
            s_poly,
        })
    }

    /// Full syndrome pipeline from a received word.
    pub fn syndrome<A: Arith>(&self, ops: &A, r: &[Gf]) -> Result<SyndromeWork> {
        let lifted = self.lift_received(ops, r)?;
        let s1 = self.syndrome_s1(ops, &lifted);
        self.syndrome_s(ops, s1)
    }

    /// Solves `S lambda = q T + z` with `deg z < deg lambda <= t`, `lambda` monic.
    pub fn solve_key_equation<A: Arith>(
        &self,
        ops: &A,
        s: &Poly,
    ) -> std::result::Result<KeySolution, FailureReason> {
        match self.solver {
            KeySolver::Euclid => self.euclid(ops, s),
        }
    }

    fn euclid<A: Arith>(
        &self,
        ops: &A,
        s: &Poly,
    ) -> std::result::Result<KeySolution, FailureReason> {
        if s.is_zero() {
            return Ok(KeySolution {
                lambda: Poly::one(),
                z: Poly::zero(),
                q: Poly::zero(),
            });
        }
        let stop = self.rows.div_ceil(2);
        let below = |p: &Poly| p.degree().is_none_or(|d| d < stop);
        let (mut r0, mut r1) = (self.t_poly.clone(), s.clone());
        let (mut v0, mut v1) = (Poly::zero(), Poly::one());
        let (mut u0, mut u1) = (Poly::one(), Poly::zero());
        while !below(&r1) {
            let (quot, rem) = r0
                .divmod(ops, &r1)
                .map_err(|_| FailureReason::TooManyErrors)?;
            let v2 = v0.add(ops, &quot.mul(ops, &v1));
            let u2 = u0.add(ops, &quot.mul(ops, &u1));
            r0 = std::mem::replace(&mut r1, rem);
            v0 = std::mem::replace(&mut v1, v2);
            u0 = std::mem::replace(&mut u1, u2);
        }
        let deg_lambda = v1.degree().ok_or(FailureReason::TooManyErrors)?;
        if deg_lambda > self.spec.t() || r1.degree().is_some_and(|d| d >= deg_lambda) {
            return Err(FailureReason::TooManyErrors);
        }
        let lead = v1.leading().expect("nonzero");
        let scale = ops.invert(lead);
        let sol = KeySolution {
            lambda: v1.scale(ops, scale),
            z: r1.scale(ops, scale),
            q: u1.scale(ops, scale),
        };
        let f = self.field();
        let lhs = s.mul(f, &sol.lambda);
        let rhs = sol.q.mul(f, &self.t_poly).add(f, &sol.z);
        if lhs != rhs {
            return Err(FailureReason::TooManyErrors);
        }
        Ok(sol)
    }

    /// Roots of `lambda` on the support as `(position, omega index)`, by position.
    pub fn find_roots<A: Arith>(&self, ops: &A, lambda: &Poly) -> Result<Vec<(usize, usize)>> {
        let Some(d) = lambda.degree() else {
            return Ok(Vec::new());
        };
        if d == 0 {
            return Ok(Vec::new());
        }
        let basis = self.basis();
        let layout = self.spec.layout();
        let tau = ceil_log2(d + 1);
        let size = 1usize << tau;
        let lbar = basis.monomial_to_xbar(ops, lambda, tau)?;
        let mut roots = Vec::new();
        let mut buf = vec![Gf::ZERO; size];
        for &b in self.blocks(tau) {
            buf.copy_from_slice(&lbar);
            basis.fft_in_place(ops, &mut buf, basis.omega(b * size));
            for (off, v) in buf.iter().enumerate() {
                let j = b * size + off;
                if v.is_zero() {
                    if let Some(i) = layout.position(j) {
                        roots.push((i, j));
                    }
                }
            }
        }
        roots.sort_unstable();
        Ok(roots)
    }

    /// Forney values `e = q(omega_j) / (y_i lambda'(omega_j))` at the given roots.
    pub fn error_values<A: Arith>(
        &self,
        ops: &A,
        sol: &KeySolution,
        roots: &[(usize, usize)],
    ) -> std::result::Result<Vec<Gf>, FailureReason> {
        if roots.is_empty() {
            return Ok(Vec::new());
        }
        let basis = self.basis();
        let dlambda = sol.lambda.derivative();
        let top = sol
            .q
            .degree()
            .unwrap_or(0)
            .max(dlambda.degree().unwrap_or(0));
        let tau = ceil_log2(top + 1);
        let size = 1usize << tau;
        let qbar = basis
            .monomial_to_xbar(ops, &sol.q, tau)
            .expect("degree fits");
        let dbar = basis
            .monomial_to_xbar(ops, &dlambda, tau)
            .expect("degree fits");

        let mut by_block: Vec<(usize, usize, usize)> = roots
            .iter()
            .enumerate()
            .map(|(k, &(_, j))| (j / size, j % size, k))
            .collect();
        by_block.sort_unstable();

        let mut values = vec![Gf::ZERO; roots.len()];
        let mut qv = vec![Gf::ZERO; size];
        let mut dv = vec![Gf::ZERO; size];
        let mut idx = 0;
        while idx < by_block.len() {
            let b = by_block[idx].0;
            let shift = basis.omega(b * size);
            qv.copy_from_slice(&qbar);
            dv.copy_from_slice(&dbar);
            basis.fft_in_place(ops, &mut qv, shift);
            basis.fft_in_place(ops, &mut dv, shift);
            while idx < by_block.len() && by_block[idx].0 == b {
                let (_, off, k) = by_block[idx];
                let (i, _) = roots[k];
                if dv[off].is_zero() {
                    return Err(FailureReason::RepeatedRoot);
                }
                let den = ops.mul(self.spec.y()[i], dv[off]);
                values[k] = ops.divide(qv[off], den);
                idx += 1;
            }
        }
        Ok(values)
    }

    /// Decodes with operation counting.
    pub fn decode(&self, r: &[Gf]) -> Result<DecodeResult> {
        self.spec.check_length(r)?;
        let f = self.field();
        let ops = counting_field(f);
        let mut phases = PhaseCounts::default();

        let work = self.syndrome(&ops, r)?;
        phases.syndrome = ops.counts();
        if work.s_poly.is_zero() {
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
        let sol = self.solve_key_equation(&ops, &work.s_poly);
        phases.key_equation = ops.counts() - mark;
        let sol = match sol {
            Ok(sol) => sol,
            Err(reason) => return Ok(DecodeResult::failure(reason, r, phases)),
        };

        let mark = ops.counts();
        let roots = self.find_roots(&ops, &sol.lambda)?;
        phases.chien = ops.counts() - mark;
        if Some(roots.len()) != sol.lambda.degree() {
            return Ok(DecodeResult::failure(
                FailureReason::RootCountMismatch,
                r,
                phases,
            ));
        }

        let mark = ops.counts();
        let values = self.error_values(&ops, &sol, &roots);
        phases.forney = ops.counts() - mark;
        let values = match values {
            Ok(v) => v,
            Err(reason) => return Ok(DecodeResult::failure(reason, r, phases)),
        };
        let binary = self.spec.is_binary();
        if let Some(bad) = values
            .iter()
            .find(|&&e| e.is_zero() || (binary && e != Gf::ONE))
        {
            let reason = if bad.is_zero() {
                FailureReason::InconsistentErrorValue
            } else {
                FailureReason::NonBinaryError
            };
            return Ok(DecodeResult::failure(reason, r, phases));
        }

        let mut codeword = r.to_vec();
        for (&(i, _), &e) in roots.iter().zip(&values) {
            codeword[i] = f.add(codeword[i], e);
        }
        if self.recheck {
            let nonbinary = binary && codeword.iter().any(|c| c.0 > 1);
            if nonbinary
                || syndrome_vector(&self.spec, &codeword)
                    .iter()
                    .any(|s| !s.is_zero())
            {
                return Ok(DecodeResult::failure(
                    FailureReason::ResidualSyndrome,
                    r,
                    phases,
                ));
            }
        }
        Ok(DecodeResult {
            status: DecodeStatus::Corrected,
            codeword,
            error_locations: roots.iter().map(|&(i, _)| i).collect(),
            error_values: values,
            op_counts: phases.total(),
            phases,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{encode_grs, CodeSpec};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn field(m: u32) -> Field {
        let modulus = match m {
            4 => 0b10011,
            5 => 0b100101,
            6 => 0b1000011,
            8 => 0x11d,
            _ => unreachable!(),
        };
        Field::new(m, modulus).unwrap()
    }

    fn grs(m: u32, n: usize, k: usize, seed: u64) -> CodeSpec {
        let basis = BasisContext::polynomial(field(m));
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut all: Vec<Gf> = basis.field().elements().collect();
        for i in 0..n {
            let j = rng.gen_range(i..all.len());
            all.swap(i, j);
        }
        let w = (0..n).map(|_| Gf(rng.gen_range(1..1 << m))).collect();
        CodeSpec::grs(&basis, all[..n].to_vec(), w, k).unwrap()
    }

    #[test]
    fn block_parameters() {
        for (rows, mu) in [(128usize, 7u32), (100, 7), (5, 3), (1, 0), (2, 1)] {
            let b = BasisContext::polynomial(field(8));
            let support: Vec<Gf> = b.field().elements().collect();
            let spec = CodeSpec::grs(&b, support, vec![Gf::ONE; 256], 256 - rows).unwrap();
            let ctx = DecoderContext::new(spec);
            assert_eq!(ctx.mu(), mu);
            assert_eq!(ctx.epsilon(), 1 << mu);
            assert_eq!(ctx.tail_prod_inv().len(), rows);
            if rows == 128 {
                assert!(ctx.tail_prod_inv().iter().all(|&x| x == Gf::ONE));
            }
        }
    }

    #[test]
    fn p_norm_matches_subspace_derivative() {
        // p_{2^m - eps}^{-1} equals prod_{0 < i < eps} omega_i, the derivative of s_mu.
        let f = field(6);
        let basis =
            BasisContext::new(f.clone(), vec![Gf(3), Gf(5), Gf(9), Gf(17), Gf(33), Gf(7)]).unwrap();
        for mu in 0..=6u32 {
            let eps = 1usize << mu;
            let d = (1..eps).fold(Gf::ONE, |acc, i| f.mul(acc, basis.omega(i)));
            assert_eq!(f.inv(basis.p(64 - eps)).unwrap(), d, "mu = {mu}");
        }
    }

    #[test]
    fn lift_single_entry() {
        let spec = grs(5, 20, 10, 1);
        let ctx = DecoderContext::new(spec.clone());
        let mut r = vec![Gf::ZERO; 20];
        assert!(ctx
            .lift_received(ctx.field(), &r)
            .unwrap()
            .iter()
            .all(|x| x.is_zero()));
        r[7] = Gf(3);
        let lifted = ctx.lift_received(ctx.field(), &r).unwrap();
        let j = spec.layout().pi_inv(7);
        for (k, &x) in lifted.iter().enumerate() {
            if k == j {
                assert_eq!(x, ctx.field().mul(Gf(3), spec.y()[7]));
            } else {
                assert!(x.is_zero());
            }
        }
    }

    #[test]
    fn single_error_key_solution() {
        let spec = grs(6, 50, 30, 2);
        let ctx = DecoderContext::new(spec.clone());
        let f = ctx.field();
        let (i, e) = (13usize, Gf(9));
        let mut r = vec![Gf::ZERO; 50];
        r[i] = e;
        let s = ctx.syndrome(f, &r).unwrap().s_poly;
        let sol = ctx.solve_key_equation(f, &s).unwrap();
        let a = spec.support()[i];
        assert_eq!(sol.lambda, Poly::linear(a));
        let ey = f.mul(e, spec.y()[i]);
        assert_eq!(sol.q, Poly::constant(ey));
        assert_eq!(sol.z, Poly::constant(f.mul(ey, ctx.t_poly().eval(f, a))));
        let roots = ctx.find_roots(f, &sol.lambda).unwrap();
        assert_eq!(roots.iter().map(|r| r.0).collect::<Vec<_>>(), vec![i]);
        assert_eq!(ctx.error_values(f, &sol, &roots).unwrap(), vec![e]);
    }

    #[test]
    fn zero_syndrome_and_constant_lambda() {
        let spec = grs(4, 16, 8, 3);
        let ctx = DecoderContext::new(spec);
        let f = ctx.field();
        let sol = ctx.solve_key_equation(f, &Poly::zero()).unwrap();
        assert_eq!(sol.lambda, Poly::one());
        assert!(ctx.find_roots(f, &Poly::one()).unwrap().is_empty());
        assert_eq!(
            ctx.solve_key_equation(f, &Poly::constant(Gf(1))),
            Err(FailureReason::TooManyErrors)
        );
    }

    #[test]
    fn roots_of_constructed_locator() {
        let spec = grs(8, 200, 136, 4);
        let ctx = DecoderContext::new(spec.clone());
        let f = ctx.field();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut picks: Vec<usize> = (0..200).collect();
        for i in 0..10 {
            let j = rng.gen_range(i..200);
            picks.swap(i, j);
        }
        let mut chosen = picks[..10].to_vec();
        chosen.sort_unstable();
        let roots: Vec<Gf> = chosen.iter().map(|&i| spec.support()[i]).collect();
        let lambda = Poly::from_roots(f, &roots);
        let found: Vec<usize> = ctx
            .find_roots(f, &lambda)
            .unwrap()
            .iter()
            .map(|r| r.0)
            .collect();
        assert_eq!(found, chosen);
    }

    #[test]
    fn zero_q_fails() {
        let spec = grs(5, 32, 16, 6);
        let ctx = DecoderContext::new(spec.clone());
        let f = ctx.field();
        let lambda = Poly::from_roots(f, &spec.support()[..2]);
        let sol = KeySolution {
            lambda: lambda.clone(),
            z: Poly::zero(),
            q: Poly::zero(),
        };
        let roots = ctx.find_roots(f, &lambda).unwrap();
        assert_eq!(roots.len(), 2);
        let vals = ctx.error_values(f, &sol, &roots).unwrap();
        assert!(vals.iter().all(|v| v.is_zero()));
    }

    #[test]
    fn corrects_up_to_t() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for (m, n, k) in [
            (4u32, 16usize, 8usize),
            (5, 27, 14),
            (6, 64, 40),
            (8, 200, 136),
        ] {
            let spec = grs(m, n, k, rng.gen());
            let ctx = DecoderContext::new(spec.clone()).with_recheck(true);
            let f = spec.field();
            for weight in 0..=spec.t() {
                for _ in 0..10 {
                    let msg =
                        Poly::from_coeffs((0..k).map(|_| Gf(rng.gen_range(0..1 << m))).collect());
                    let c = encode_grs(&spec, &msg).unwrap();
                    let mut r = c.clone();
                    let mut pos: Vec<usize> = (0..n).collect();
                    for i in 0..weight {
                        let j = rng.gen_range(i..n);
                        pos.swap(i, j);
                        r[pos[i]] = f.add(r[pos[i]], Gf(rng.gen_range(1..1 << m)));
                    }
                    let res = ctx.decode(&r).unwrap();
                    assert!(res.status.is_success(), "{res:?}");
                    assert_eq!(res.codeword, c);
                    assert_eq!(res.error_locations.len(), weight);
                    assert_eq!(res.op_counts, res.phases.total());
                }
            }
        }
    }
}
