//! Additive FFT over GF(2^m) in the normalized subspace-polynomial basis.
//!
//! Given a GF(2)-basis `v_0..v_{m-1}` the elements are enumerated as
//! `omega_j = sum_i j_i v_i`. The subspace polynomials
//! `s_tau(x) = prod_{j < 2^tau} (x - omega_j)` are GF(2)-linear maps and satisfy
//! `s_{tau+1}(x) = s_tau(x)^2 + s_tau(v_tau) s_tau(x)`. The basis polynomial
//! `Xbar_j` is the product of `s_tau(x) / s_tau(v_tau)` over the set bits of `j`;
//! it has degree `j`.
//!
//! [`BasisContext::fft`] evaluates a polynomial given by its `Xbar` coordinates
//! on the coset `omega_0 + beta, .., omega_{2^tau - 1} + beta` with
//! `tau * 2^(tau-1)` butterflies, and [`BasisContext::ifft`] inverts it. Both
//! run breadth-first over the butterfly levels in place.

use std::ops::Deref;

use crate::arith::Arith;
use crate::error::{Error, Result};
use crate::gf::{Field, Gf};
use crate::poly::Poly;

/// Coordinates with respect to the `Xbar` basis; the length is a power of two.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XbarCoeffs(Vec<Gf>);

impl XbarCoeffs {
    pub fn new(coeffs: Vec<Gf>) -> Result<Self> {
        if !coeffs.len().is_power_of_two() {
            return Err(Error::InvalidParameters(format!(
                "Xbar coordinate vector length {} is not a power of two",
                coeffs.len()
            )));
        }
        Ok(XbarCoeffs(coeffs))
    }

    pub fn zero(tau: u32) -> Self {
        XbarCoeffs(vec![Gf::ZERO; 1 << tau])
    }

    /// log2 of the length.
    pub fn tau(&self) -> u32 {
        self.0.len().trailing_zeros()
    }

    pub fn into_vec(self) -> Vec<Gf> {
        self.0
    }
}

impl Deref for XbarCoeffs {
    type Target = [Gf];

    fn deref(&self) -> &[Gf] {
        &self.0
    }
}

#[derive(Debug, Clone)]
pub struct BasisContext {
    field: Field,
    v: Vec<Gf>,
    omega: Vec<Gf>,
    omega_index: Vec<u32>,
    // s_at_v[tau][l] = s_tau(v_l); zero for l < tau.
    s_at_v: Vec<Vec<Gf>>,
    // shat_at_v[tau][l] = s_tau(v_l) / s_tau(v_tau)
    shat_at_v: Vec<Vec<Gf>>,
    inv_s_at_v: Vec<Gf>,
    // Monomial terms (degree, coefficient) of s_tau for tau <= m, and of the
    // normalized s_tau / s_tau(v_tau) for tau < m.
    s_terms: Vec<Vec<(usize, Gf)>>,
    shat_terms: Vec<Vec<(usize, Gf)>>,
    p: Vec<Gf>,
}

impl BasisContext {
    pub fn new(field: Field, v: Vec<Gf>) -> Result<Self> {
        let m = field.m() as usize;
        if v.len() != m {
            return Err(Error::BasisLength {
                expected: m,
                got: v.len(),
            });
        }
        for &x in &v {
            field.element(x.0 as u32)?;
        }

        let order = field.order();
        let mut omega = vec![Gf::ZERO; order];
        for j in 1..order {
            let top = j.ilog2() as usize;
            omega[j] = field.add(omega[j ^ (1 << top)], v[top]);
        }
        let mut omega_index = vec![u32::MAX; order];
        for (j, w) in omega.iter().enumerate() {
            if omega_index[w.0 as usize] != u32::MAX {
                return Err(Error::DependentBasis);
            }
            omega_index[w.0 as usize] = j as u32;
        }

        let mut s_at_v = vec![vec![Gf::ZERO; m]; m];
        let mut s_terms = vec![vec![(1usize, Gf::ONE)]];
        s_at_v[0].copy_from_slice(&v);
        for tau in 0..m {
            let sv = s_at_v[tau][tau];
            debug_assert!(!sv.is_zero());
            if tau + 1 < m {
                for l in tau + 1..m {
                    let s = s_at_v[tau][l];
                    s_at_v[tau + 1][l] = field.add(field.square(s), field.mul(sv, s));
                }
            }
            let prev = &s_terms[tau];
            let mut next: Vec<(usize, Gf)> = Vec::with_capacity(prev.len() + 1);
            for &(d, c) in prev {
                next.push((d, field.mul(c, sv)));
            }
            for &(d, c) in prev {
                let sq = (2 * d, field.square(c));
                match next.iter_mut().find(|(e, _)| *e == sq.0) {
                    Some(slot) => slot.1 = field.add(slot.1, sq.1),
                    None => next.push(sq),
                }
            }
            next.retain(|(_, c)| !c.is_zero());
            next.sort_by_key(|&(d, _)| d);
            s_terms.push(next);
        }

        let inv_s_at_v: Vec<Gf> = (0..m).map(|t| field.inv_nonzero(s_at_v[t][t])).collect();
        let shat_at_v = (0..m)
            .map(|t| {
                s_at_v[t]
                    .iter()
                    .map(|&s| field.mul(s, inv_s_at_v[t]))
                    .collect()
            })
            .collect();
        let shat_terms = (0..m)
            .map(|t| {
                s_terms[t]
                    .iter()
                    .map(|&(d, c)| (d, field.mul(c, inv_s_at_v[t])))
                    .collect()
            })
            .collect();

        let mut p = vec![Gf::ONE; order];
        for j in 1..order {
            let top = j.ilog2() as usize;
            p[j] = field.mul(p[j ^ (1 << top)], s_at_v[top][top]);
        }

        Ok(BasisContext {
            field,
            v,
            omega,
            omega_index,
            s_at_v,
            shat_at_v,
            inv_s_at_v,
            s_terms,
            shat_terms,
            p,
        })
    }

    /// The polynomial basis `1, x, .., x^{m-1}`, for which `omega_j = j`.
    pub fn polynomial(field: Field) -> Self {
        let v = (0..field.m()).map(|i| Gf(1 << i)).collect();
        BasisContext::new(field, v).expect("polynomial basis is independent")
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn m(&self) -> u32 {
        self.field.m()
    }

    pub fn v(&self) -> &[Gf] {
        &self.v
    }

    #[inline]
    pub fn omega(&self, j: usize) -> Gf {
        self.omega[j]
    }

    pub fn omegas(&self) -> &[Gf] {
        &self.omega
    }

    /// The `j` with `omega_j = x`.
    #[inline]
    pub fn omega_index(&self, x: Gf) -> usize {
        self.omega_index[x.0 as usize] as usize
    }

    /// Normalization constant `p_j`.
    pub fn p(&self, j: usize) -> Gf {
        self.p[j]
    }

    /// `s_tau(v_l)`, zero when `l < tau`.
    pub fn s_at_v(&self, tau: usize, l: usize) -> Gf {
        self.s_at_v[tau][l]
    }

    /// Monomial expansion of `s_tau`.
    pub fn subspace_poly(&self, tau: u32) -> Poly {
        let terms = &self.s_terms[tau as usize];
        let mut coeffs = vec![Gf::ZERO; terms.last().map_or(0, |t| t.0) + 1];
        for &(d, c) in terms {
            coeffs[d] = c;
        }
        Poly::from_coeffs(coeffs)
    }

    /// `s_tau(x)` through the linearized recurrence.
    pub fn subspace_eval<A: Arith>(&self, ops: &A, tau: u32, x: Gf) -> Gf {
        assert!(tau <= self.m(), "tau {tau} exceeds m");
        let mut s = x;
        for t in 0..tau as usize {
            s = ops.add(ops.mul(s, s), ops.mul(self.s_at_v[t][t], s));
        }
        s
    }

    /// `s_t(beta) / s_t(v_t)` for `t < tau`.
    fn normalized_chain<A: Arith>(&self, ops: &A, tau: u32, beta: Gf) -> Vec<Gf> {
        let tau = tau as usize;
        let mut out = vec![Gf::ZERO; tau];
        if beta.is_zero() {
            return out;
        }
        let mut s = beta;
        for t in 0..tau {
            out[t] = ops.mul(s, self.inv_s_at_v[t]);
            if t + 1 < tau {
                s = ops.add(ops.mul(s, s), ops.mul(self.s_at_v[t][t], s));
            }
        }
        out
    }

    /// Butterfly constants for the sub-blocks of size `2^lev` in a transform of
    /// size `2^tau`: sub-block `b` is shifted by `beta + omega_{b 2^lev}`, and its
    /// constant `shat_{lev-1}(beta + omega_{b 2^lev})` follows by linearity.
    fn level_constants<A: Arith>(&self, ops: &A, lev: usize, tau: usize, base: Gf) -> Vec<Gf> {
        let blocks = 1usize << (tau - lev);
        let mut consts = vec![Gf::ZERO; blocks];
        consts[0] = base;
        for b in 1..blocks {
            let low = b.trailing_zeros() as usize;
            consts[b] = ops.add(consts[b & (b - 1)], self.shat_at_v[lev - 1][lev + low]);
        }
        consts
    }

    fn check_len(&self, len: usize, tau: u32) -> Result<()> {
        if tau > self.m() {
            return Err(Error::InvalidParameters(format!(
                "transform size 2^{tau} exceeds the field"
            )));
        }
        if len != 1 << tau {
            return Err(Error::LengthMismatch {
                expected: 1 << tau,
                got: len,
            });
        }
        Ok(())
    }

    /// Evaluates the polynomial with coordinates `fbar` at `omega_i + beta`, `i < 2^tau`.
    pub fn fft<A: Arith>(&self, ops: &A, fbar: &[Gf], tau: u32, beta: Gf) -> Result<Vec<Gf>> {
        self.check_len(fbar.len(), tau)?;
        let mut buf = fbar.to_vec();
        self.fft_in_place(ops, &mut buf, beta);
        Ok(buf)
    }

    /// Inverse of [`BasisContext::fft`] for the same `(tau, beta)`.
    pub fn ifft<A: Arith>(&self, ops: &A, values: &[Gf], tau: u32, beta: Gf) -> Result<XbarCoeffs> {
        self.check_len(values.len(), tau)?;
        let mut buf = values.to_vec();
        self.ifft_in_place(ops, &mut buf, beta);
        Ok(XbarCoeffs(buf))
    }

    /// In-place forward transform; the length of `buf` fixes `tau`.
    pub fn fft_in_place<A: Arith>(&self, ops: &A, buf: &mut [Gf], beta: Gf) {
        let tau = buf.len().trailing_zeros() as usize;
        debug_assert_eq!(buf.len(), 1 << tau);
        let chain = self.normalized_chain(ops, tau as u32, beta);
        for lev in (1..=tau).rev() {
            let half = 1 << (lev - 1);
            let consts = self.level_constants(ops, lev, tau, chain[lev - 1]);
            for (chunk, &c) in buf.chunks_mut(2 * half).zip(&consts) {
                let (lo, hi) = chunk.split_at_mut(half);
                for (x, y) in lo.iter_mut().zip(hi.iter_mut()) {
                    let a0 = ops.add(*x, ops.mul(c, *y));
                    *y = ops.add(a0, *y);
                    *x = a0;
                }
            }
        }
    }

    /// In-place inverse transform.
    pub fn ifft_in_place<A: Arith>(&self, ops: &A, buf: &mut [Gf], beta: Gf) {
        let tau = buf.len().trailing_zeros() as usize;
        debug_assert_eq!(buf.len(), 1 << tau);
        let chain = self.normalized_chain(ops, tau as u32, beta);
        for lev in 1..=tau {
            let half = 1 << (lev - 1);
            let consts = self.level_constants(ops, lev, tau, chain[lev - 1]);
            for (chunk, &c) in buf.chunks_mut(2 * half).zip(&consts) {
                let (lo, hi) = chunk.split_at_mut(half);
                for (x, y) in lo.iter_mut().zip(hi.iter_mut()) {
                    let f_hi = ops.add(*x, *y);
                    *x = ops.add(*x, ops.mul(c, f_hi));
                    *y = f_hi;
                }
            }
        }
    }

    /// Interpolation from a prefix of the coset.
    ///
    /// Given `values[i] = f(omega_i + beta)` for `i < h` with `h <= 2^tau`, returns
    /// the `2^tau` coordinates of the unique `f` whose coordinates at indices
    /// `>= h` vanish (equivalently, `deg f < h`).
    pub fn ifft_prefix<A: Arith>(
        &self,
        ops: &A,
        values: &[Gf],
        tau: u32,
        beta: Gf,
    ) -> Result<XbarCoeffs> {
        if tau > self.m() || values.len() > 1 << tau {
            return Err(Error::InvalidParameters(format!(
                "{} values do not fit a transform of size 2^{tau}",
                values.len()
            )));
        }
        let mut out = vec![Gf::ZERO; 1 << tau];
        self.ifft_prefix_into(ops, values, &mut out, beta);
        Ok(XbarCoeffs(out))
    }

    fn ifft_prefix_into<A: Arith>(&self, ops: &A, values: &[Gf], out: &mut [Gf], beta: Gf) {
        let n = out.len();
        let h = values.len();
        if h == 0 {
            return;
        }
        if h == n {
            out.copy_from_slice(values);
            self.ifft_in_place(ops, out, beta);
            return;
        }
        let half = n / 2;
        let lev = n.trailing_zeros() as usize - 1;
        let (lo, hi) = out.split_at_mut(half);
        if h <= half {
            // deg f < half: the top coordinates vanish and the first half of
            // the coset sees exactly the low coordinates.
            self.ifft_prefix_into(ops, values, lo, beta);
            return;
        }
        lo.copy_from_slice(&values[..half]);
        self.ifft_in_place(ops, lo, beta);
        // The second half of the coset evaluates a0 + fbar_hi at shift beta + v_lev.
        let beta_hi = ops.add(beta, self.v[lev]);
        let mut known = lo.to_vec();
        self.fft_in_place(ops, &mut known, beta_hi);
        let rest: Vec<Gf> = values[half..]
            .iter()
            .zip(&known)
            .map(|(&y, &k)| ops.add(y, k))
            .collect();
        self.ifft_prefix_into(ops, &rest, hi, beta_hi);
        let c = self.normalized_chain(ops, lev as u32 + 1, beta)[lev];
        for (x, &y) in lo.iter_mut().zip(hi.iter()) {
            *x = ops.add(*x, ops.mul(c, y));
        }
    }

    /// Expands `sum_j fbar_j Xbar_j(x)` into the monomial basis.
    pub fn xbar_to_monomial<A: Arith>(&self, ops: &A, fbar: &[Gf]) -> Result<Poly> {
        self.check_len(fbar.len(), fbar.len().trailing_zeros())?;
        let mut buf = fbar.to_vec();
        self.xbar_to_monomial_in_place(ops, &mut buf);
        Ok(Poly::from_coeffs(buf))
    }

    /// Coordinates of `p` in `Xbar_0..Xbar_{2^tau - 1}`; requires `deg p < 2^tau`.
    pub fn monomial_to_xbar<A: Arith>(&self, ops: &A, p: &Poly, tau: u32) -> Result<XbarCoeffs> {
        if tau > self.m() {
            return Err(Error::InvalidParameters(format!(
                "transform size 2^{tau} exceeds the field"
            )));
        }
        if let Some(d) = p.degree() {
            if d >= 1 << tau {
                return Err(Error::DegreeTooLarge {
                    degree: d,
                    limit: (1 << tau) - 1,
                });
            }
        }
        let mut buf = p.padded(1 << tau);
        self.monomial_to_xbar_in_place(ops, &mut buf);
        Ok(XbarCoeffs(buf))
    }

    pub(crate) fn xbar_to_monomial_in_place<A: Arith>(&self, ops: &A, buf: &mut [Gf]) {
        let n = buf.len();
        if n <= 1 {
            return;
        }
        let half = n / 2;
        let lev = n.trailing_zeros() as usize - 1;
        {
            let (lo, hi) = buf.split_at_mut(half);
            self.xbar_to_monomial_in_place(ops, lo);
            self.xbar_to_monomial_in_place(ops, hi);
        }
        // f = lo + shat_lev(x) * hi
        let hi: Vec<Gf> = buf[half..].to_vec();
        buf[half..].fill(Gf::ZERO);
        for &(d, c) in &self.shat_terms[lev] {
            ops.axpy(&mut buf[d..d + half], c, &hi);
        }
    }

    pub(crate) fn monomial_to_xbar_in_place<A: Arith>(&self, ops: &A, buf: &mut [Gf]) {
        let n = buf.len();
        if n <= 1 {
            return;
        }
        let half = n / 2;
        let lev = n.trailing_zeros() as usize - 1;
        // Divide by the monic s_lev; the quotient lands in buf[half..].
        let terms = &self.s_terms[lev];
        for i in (half..n).rev() {
            let q = buf[i];
            if q.is_zero() {
                continue;
            }
            for &(d, c) in terms.iter().filter(|&&(d, _)| d < half) {
                let slot = &mut buf[i - half + d];
                *slot = ops.add(*slot, ops.mul(c, q));
            }
        }
        // f = r + s_lev q = r + shat_lev (s_lev(v_lev) q)
        let sv = self.s_at_v[lev][lev];
        for x in &mut buf[half..] {
            *x = ops.mul(*x, sv);
        }
        let (lo, hi) = buf.split_at_mut(half);
        self.monomial_to_xbar_in_place(ops, lo);
        self.monomial_to_xbar_in_place(ops, hi);
    }
}
