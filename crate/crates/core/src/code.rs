//! Generalized Reed-Solomon, alternant and separable Goppa codes.
//!
//! Every code is described by its parity-check matrix `H` with entries
//! `y_i alpha_i^l`, `l < n - k`. For a GRS code the evaluation multipliers `w`
//! and column multipliers `y` are tied by
//! `y_i = w_i^{-1} (prod_{j != i} (alpha_i - alpha_j))^{-1}`. A separable Goppa
//! code with polynomial `G` of degree `rho` uses `Gbar = G^2`, `2 rho` rows and
//! `y_i = Gbar(alpha_i)^{-1}`.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::arith::Arith;
use crate::binary::{BinaryEncoder, BitMatrix};
use crate::error::{Error, Result};
use crate::gf::{Field, Gf};
use crate::lch::BasisContext;
use crate::poly::Poly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CodeKind {
    Grs,
    Alternant,
    Goppa,
}

impl CodeKind {
    /// Alternant and Goppa codes are binary subfield subcodes.
    pub fn is_binary(self) -> bool {
        !matches!(self, CodeKind::Grs)
    }
}

/// Correspondence between the transform enumeration `omega_j` and support positions.
///
/// `pi(j) = i` iff `omega_j = alpha_i`. Elements outside the support get the
/// positions `n..2^m` in increasing order of their omega index.
#[derive(Debug, Clone)]
pub struct Layout {
    n: usize,
    pi: Vec<u32>,
    pi_inv: Vec<u32>,
}

impl Layout {
    pub fn new(basis: &BasisContext, support: &[Gf]) -> Result<Self> {
        let order = basis.field().order();
        if support.is_empty() || support.len() > order {
            return Err(Error::InvalidParameters(format!(
                "support size {} outside 1..={order}",
                support.len()
            )));
        }
        let mut pi = vec![u32::MAX; order];
        for (i, &a) in support.iter().enumerate() {
            basis.field().element(a.0 as u32)?;
            let j = basis.omega_index(a);
            if pi[j] != u32::MAX {
                return Err(Error::DuplicateSupport(a.0));
            }
            pi[j] = i as u32;
        }
        let mut next = support.len() as u32;
        for slot in pi.iter_mut().filter(|s| **s == u32::MAX) {
            *slot = next;
            next += 1;
        }
        let mut pi_inv = vec![0u32; order];
        for (j, &i) in pi.iter().enumerate() {
            pi_inv[i as usize] = j as u32;
        }
        Ok(Layout {
            n: support.len(),
            pi,
            pi_inv,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.pi.len()
    }

    #[inline]
    pub fn pi(&self, j: usize) -> usize {
        self.pi[j] as usize
    }

    #[inline]
    pub fn pi_inv(&self, i: usize) -> usize {
        self.pi_inv[i] as usize
    }

    #[inline]
    pub fn in_support(&self, j: usize) -> bool {
        (self.pi[j] as usize) < self.n
    }

    /// Support position of `omega_j`, if it is in the support.
    #[inline]
    pub fn position(&self, j: usize) -> Option<usize> {
        let i = self.pi[j] as usize;
        (i < self.n).then_some(i)
    }

    /// Indices of the aligned blocks of `2^tau` omega indices that meet the support.
    pub fn blocks(&self, tau: u32) -> Vec<usize> {
        let size = 1usize << tau;
        (0..self.order() / size)
            .filter(|&b| (b * size..(b + 1) * size).any(|j| self.in_support(j)))
            .collect()
    }
}

#[derive(Debug, Clone)]
pub struct CodeSpec {
    basis: BasisContext,
    kind: CodeKind,
    support: Vec<Gf>,
    col_mult: Vec<Gf>,
    eval_mult: Vec<Gf>,
    rows: usize,
    t: usize,
    goppa: Option<(Poly, Poly)>,
    layout: Layout,
    binary: OnceLock<BinaryEncoder>,
}

/// `prod_{j != i} (alpha_i - alpha_j)` for every support position.
fn support_derivative(field: &Field, basis: &BasisContext, support: &[Gf]) -> Vec<Gf> {
    let order = field.order();
    if 2 * support.len() > order {
        // The product over all other field elements is 1, so divide out the
        // elements missing from the support instead.
        let mut in_support = vec![false; order];
        for &a in support {
            in_support[a.0 as usize] = true;
        }
        let missing: Vec<Gf> = basis
            .omegas()
            .iter()
            .copied()
            .filter(|b| !in_support[b.0 as usize])
            .collect();
        support
            .iter()
            .map(|&a| {
                let prod = missing
                    .iter()
                    .fold(Gf::ONE, |acc, &b| field.mul(acc, field.add(a, b)));
                field.inv_nonzero(prod)
            })
            .collect()
    } else {
        support
            .iter()
            .enumerate()
            .map(|(i, &a)| {
                support
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .fold(Gf::ONE, |acc, (_, &b)| field.mul(acc, field.add(a, b)))
            })
            .collect()
    }
}

/// Converts between `w` and `y`; the relation is symmetric.
fn dual_multipliers(field: &Field, derivative: &[Gf], mult: &[Gf]) -> Vec<Gf> {
    mult.iter()
        .zip(derivative)
        .map(|(&x, &d)| field.inv_nonzero(field.mul(x, d)))
        .collect()
}

fn check_multipliers(mult: &[Gf], n: usize) -> Result<()> {
    if mult.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: mult.len(),
        });
    }
    match mult.iter().position(|x| x.is_zero()) {
        Some(i) => Err(Error::ZeroMultiplier(i)),
        None => Ok(()),
    }
}

fn check_dimension(k: usize, n: usize) -> Result<()> {
    if k == 0 || k > n {
        return Err(Error::InvalidParameters(format!(
            "dimension k = {k} outside 1..={n}"
        )));
    }
    Ok(())
}

impl CodeSpec {
    /// `GRS_k(L, w)`: all `(w_i f(alpha_i))` with `deg f < k`.
    pub fn grs(basis: &BasisContext, support: Vec<Gf>, w: Vec<Gf>, k: usize) -> Result<Self> {
        let layout = Layout::new(basis, &support)?;
        let n = support.len();
        check_dimension(k, n)?;
        check_multipliers(&w, n)?;
        let field = basis.field();
        let derivative = support_derivative(field, basis, &support);
        let y = dual_multipliers(field, &derivative, &w);
        Ok(CodeSpec {
            basis: basis.clone(),
            kind: CodeKind::Grs,
            support,
            col_mult: y,
            eval_mult: w,
            rows: n - k,
            t: (n - k) / 2,
            goppa: None,
            layout,
            binary: OnceLock::new(),
        })
    }

    /// Alternant code: the binary vectors in the null space of `H(L, y)` with `n - k` rows.
    pub fn alternant(basis: &BasisContext, support: Vec<Gf>, y: Vec<Gf>, k: usize) -> Result<Self> {
        let layout = Layout::new(basis, &support)?;
        let n = support.len();
        check_dimension(k, n)?;
        check_multipliers(&y, n)?;
        let field = basis.field();
        let derivative = support_derivative(field, basis, &support);
        let w = dual_multipliers(field, &derivative, &y);
        Ok(CodeSpec {
            basis: basis.clone(),
            kind: CodeKind::Alternant,
            support,
            col_mult: y,
            eval_mult: w,
            rows: n - k,
            t: (n - k) / 2,
            goppa: None,
            layout,
            binary: OnceLock::new(),
        })
    }

    /// Separable Goppa code `Gamma(L, G)`, decoded through `Gbar = G^2`.
    pub fn goppa(basis: &BasisContext, support: Vec<Gf>, g: Poly) -> Result<Self> {
        let field = basis.field();
        let rho = match g.degree() {
            Some(d) if d >= 1 => d,
            _ => {
                return Err(Error::InvalidParameters(
                    "Goppa polynomial must have degree at least 1".into(),
                ))
            }
        };
        let layout = Layout::new(basis, &support)?;
        let n = support.len();
        if 2 * rho >= n {
            return Err(Error::InvalidParameters(format!(
                "2 deg G = {} leaves no dimension at length {n}",
                2 * rho
            )));
        }
        if g.gcd(field, &g.derivative()) != Poly::one() {
            return Err(Error::NonSeparable);
        }
        let mut y = Vec::with_capacity(n);
        for &a in &support {
            let ga = g.eval(field, a);
            if ga.is_zero() {
                return Err(Error::GoppaRootOnSupport(a.0));
            }
            y.push(field.inv_nonzero(field.square(ga)));
        }
        let gbar = g.mul(field, &g);
        let derivative = support_derivative(field, basis, &support);
        let w = dual_multipliers(field, &derivative, &y);
        Ok(CodeSpec {
            basis: basis.clone(),
            kind: CodeKind::Goppa,
            support,
            col_mult: y,
            eval_mult: w,
            rows: 2 * rho,
            t: rho,
            goppa: Some((g, gbar)),
            layout,
            binary: OnceLock::new(),
        })
    }

    pub fn basis(&self) -> &BasisContext {
        &self.basis
    }

    pub fn field(&self) -> &Field {
        self.basis.field()
    }

    pub fn kind(&self) -> CodeKind {
        self.kind
    }

    pub fn is_binary(&self) -> bool {
        self.kind.is_binary()
    }

    pub fn n(&self) -> usize {
        self.support.len()
    }

    /// Dimension of the GRS code sharing `H`, i.e. `n - redundancy`.
    pub fn k(&self) -> usize {
        self.n() - self.rows
    }

    /// Number of rows of `H` (`n - k`, or `2 rho` for Goppa codes).
    pub fn redundancy(&self) -> usize {
        self.rows
    }

    /// Guaranteed correction radius.
    pub fn t(&self) -> usize {
        self.t
    }

    pub fn support(&self) -> &[Gf] {
        &self.support
    }

    /// Column multipliers `y`.
    pub fn y(&self) -> &[Gf] {
        &self.col_mult
    }

    /// Evaluation multipliers `w` of the GRS code with parity-check matrix `H`.
    pub fn w(&self) -> &[Gf] {
        &self.eval_mult
    }

    pub fn goppa_poly(&self) -> Option<&Poly> {
        self.goppa.as_ref().map(|(g, _)| g)
    }

    /// `Gbar = G^2`.
    pub fn goppa_square(&self) -> Option<&Poly> {
        self.goppa.as_ref().map(|(_, gbar)| gbar)
    }

    pub fn layout(&self) -> &Layout {
        &self.layout
    }

    /// The systematic binary encoder, built on first use.
    pub fn binary_encoder(&self) -> Result<&BinaryEncoder> {
        if !self.is_binary() {
            return Err(Error::NotBinary);
        }
        Ok(self
            .binary
            .get_or_init(|| BinaryEncoder::from_parity_check(binary_parity_matrix(self))))
    }

    /// Dimension over the code alphabet: `k` for GRS, the binary rank-derived
    /// dimension for alternant and Goppa codes.
    pub fn dimension(&self) -> Result<usize> {
        match self.kind {
            CodeKind::Grs => Ok(self.k()),
            _ => Ok(self.binary_encoder()?.dimension()),
        }
    }

    pub fn check_length<T>(&self, v: &[T]) -> Result<()> {
        if v.len() != self.n() {
            return Err(Error::LengthMismatch {
                expected: self.n(),
                got: v.len(),
            });
        }
        Ok(())
    }
}

/// The first `n` field elements in omega order that are not roots of `g`.
pub fn goppa_support(basis: &BasisContext, g: &Poly, n: usize) -> Result<Vec<Gf>> {
    let field = basis.field();
    let support: Vec<Gf> = basis
        .omegas()
        .iter()
        .copied()
        .filter(|&a| !g.eval(field, a).is_zero())
        .take(n)
        .collect();
    if support.len() < n {
        return Err(Error::InvalidParameters(format!(
            "only {} field elements are not roots of G",
            support.len()
        )));
    }
    Ok(support)
}

/// `H` with entries `y_i alpha_i^l`, one vector per row.
pub fn parity_check_matrix(spec: &CodeSpec) -> Vec<Vec<Gf>> {
    let f = spec.field();
    let mut row: Vec<Gf> = spec.y().to_vec();
    let mut out = Vec::with_capacity(spec.redundancy());
    for _ in 0..spec.redundancy() {
        out.push(row.clone());
        for (x, &a) in row.iter_mut().zip(spec.support()) {
            *x = f.mul(*x, a);
        }
    }
    out
}

/// `H` expanded over GF(2): entry `(l, i)` becomes the `m` bits of `y_i alpha_i^l`,
/// row `l * m + b` holding bit `b`.
pub fn binary_parity_matrix(spec: &CodeSpec) -> BitMatrix {
    let m = spec.field().m() as usize;
    let h = parity_check_matrix(spec);
    let mut out = BitMatrix::zeros(h.len() * m, spec.n());
    for (l, row) in h.iter().enumerate() {
        for (i, x) in row.iter().enumerate() {
            for b in 0..m {
                if x.0 >> b & 1 == 1 {
                    out.set(l * m + b, i, true);
                }
            }
        }
    }
    out
}

/// Power sums `H r^T`.
pub fn syndrome_vector(spec: &CodeSpec, r: &[Gf]) -> Vec<Gf> {
    let f = spec.field();
    let mut out = vec![Gf::ZERO; spec.redundancy()];
    for ((&ri, &yi), &a) in r.iter().zip(spec.y()).zip(spec.support()) {
        if ri.is_zero() {
            continue;
        }
        let mut term = f.mul(ri, yi);
        for s in out.iter_mut() {
            *s = f.add(*s, term);
            term = f.mul(term, a);
        }
    }
    out
}

pub fn is_codeword(spec: &CodeSpec, r: &[Gf]) -> bool {
    r.len() == spec.n()
        && (!spec.is_binary() || r.iter().all(|x| x.0 <= 1))
        && syndrome_vector(spec, r).iter().all(|s| s.is_zero())
}

fn ceil_log2(x: usize) -> u32 {
    x.next_power_of_two().trailing_zeros()
}

/// Evaluates `fbar` on every support point with size-`2^tau` transforms over
/// the blocks meeting the support, scattering `w_i * value` to position `i`.
fn evaluate_on_support(spec: &CodeSpec, fbar: &[Gf], tau: u32) -> Vec<Gf> {
    let basis = spec.basis();
    let f = spec.field();
    let layout = spec.layout();
    let size = 1usize << tau;
    let mut c = vec![Gf::ZERO; spec.n()];
    for b in layout.blocks(tau) {
        let mut buf = fbar.to_vec();
        basis.fft_in_place(f, &mut buf, basis.omega(b * size));
        for (off, &val) in buf.iter().enumerate() {
            if let Some(i) = layout.position(b * size + off) {
                c[i] = f.mul(spec.w()[i], val);
            }
        }
    }
    c
}

/// Evaluation encoding `c_i = w_i f(alpha_i)` of a message polynomial with `deg < k`.
///
/// For binary codes this produces a codeword of the GRS code sharing `H`.
pub fn encode_grs(spec: &CodeSpec, msg: &Poly) -> Result<Vec<Gf>> {
    let k = spec.k();
    if let Some(d) = msg.degree() {
        if d >= k {
            return Err(Error::DegreeTooLarge {
                degree: d,
                limit: k - 1,
            });
        }
    }
    let tau = ceil_log2(k);
    let fbar = spec.basis().monomial_to_xbar(spec.field(), msg, tau)?;
    Ok(evaluate_on_support(spec, &fbar, tau))
}

/// Systematic transform encoder: `c_{pi(j)} = u_j` for `j < k`.
///
/// Requires `k` to be a power of two and `omega_0..omega_{k-1}` to lie in the support.
pub fn encode_fft_systematic(spec: &CodeSpec, u: &[Gf]) -> Result<Vec<Gf>> {
    let k = spec.k();
    if !k.is_power_of_two() {
        return Err(Error::Unsupported(format!(
            "systematic transform encoding needs k a power of two (k = {k}); use encode_grs or encode_goppa"
        )));
    }
    if u.len() != k {
        return Err(Error::LengthMismatch {
            expected: k,
            got: u.len(),
        });
    }
    let layout = spec.layout();
    if let Some(j) = (0..k).find(|&j| !layout.in_support(j)) {
        return Err(Error::Unsupported(format!(
            "omega_{j} is not in the support; the systematic encoder needs omega_0..omega_{{k-1}}"
        )));
    }
    let f = spec.field();
    let tau = k.trailing_zeros();
    let u_scaled: Vec<Gf> = u
        .iter()
        .enumerate()
        .map(|(j, &x)| f.mul(x, f.inv_nonzero(spec.w()[layout.pi(j)])))
        .collect();
    let ubar = spec.basis().ifft(f, &u_scaled, tau, Gf::ZERO)?;
    let mut c = evaluate_on_support(spec, &ubar, tau);
    // The first block reproduces u exactly; write it back without the round trip.
    for (j, &x) in u.iter().enumerate() {
        c[layout.pi(j)] = x;
    }
    Ok(c)
}

/// Message polynomial of an evaluation-encoded codeword, interpolated from
/// the first `k` positions.
pub fn recover_message(spec: &CodeSpec, c: &[Gf]) -> Result<Poly> {
    spec.check_length(c)?;
    let f = spec.field();
    let k = spec.k();
    let pts = &spec.support()[..k];
    let full = Poly::from_roots(f, pts);
    let mut acc = Poly::zero();
    for (j, &a) in pts.iter().enumerate() {
        let basis_poly = full.difference_quotient(f, a);
        let scale = f.mul(spec.w()[j], basis_poly.eval(f, a));
        let coef = f.div(c[j], scale)?;
        acc = acc.add(f, &basis_poly.scale(f, coef));
    }
    Ok(acc)
}

/// Systematic binary encoding with the generator derived from `H'`.
pub fn encode_goppa(spec: &CodeSpec, info_bits: &[u8]) -> Result<Vec<u8>> {
    spec.binary_encoder()?.encode(info_bits)
}

/// Recovers the information bits of a binary codeword produced by [`encode_goppa`].
pub fn extract_info(spec: &CodeSpec, codeword: &[u8]) -> Result<Vec<u8>> {
    spec.check_length(codeword)?;
    Ok(spec.binary_encoder()?.extract(codeword))
}

/// `sum_i a_i / (x - alpha_i) mod modulus`, using
/// `(x - a)^{-1} = (modulus(x) - modulus(a)) / (x - a) * modulus(a)^{-1}`.
pub fn goppa_residue(spec: &CodeSpec, a: &[u8], modulus: &Poly) -> Result<Poly> {
    spec.check_length(a)?;
    let f = spec.field();
    let mut acc = Poly::zero();
    for (i, (&bit, &alpha)) in a.iter().zip(spec.support()).enumerate() {
        match bit {
            0 => continue,
            1 => {}
            _ => return Err(Error::NonBinarySymbol(i)),
        }
        let ga = modulus.eval(f, alpha);
        if ga.is_zero() {
            return Err(Error::GoppaRootOnSupport(alpha.0));
        }
        let term = modulus
            .difference_quotient(f, alpha)
            .scale(f, f.inv_nonzero(ga));
        acc = acc.add(f, &term);
    }
    Ok(acc)
}

/// Whether `a` lies in `Gamma(L, G)`.
pub fn goppa_membership(spec: &CodeSpec, a: &[u8]) -> Result<bool> {
    let g = spec.goppa_poly().ok_or(Error::NotBinary)?;
    Ok(goppa_residue(spec, a, g)?.is_zero())
}

/// Binary codeword as field symbols.
pub fn bits_to_symbols(bits: &[u8]) -> Vec<Gf> {
    bits.iter().map(|&b| Gf(b as u16)).collect()
}

/// Field symbols of a binary word; fails on any symbol other than 0 or 1.
pub fn symbols_to_bits(symbols: &[Gf]) -> Result<Vec<u8>> {
    symbols
        .iter()
        .enumerate()
        .map(|(i, s)| match s.0 {
            0 | 1 => Ok(s.0 as u8),
            _ => Err(Error::NonBinarySymbol(i)),
        })
        .collect()
}

/// `y^64 + y^3 + y + x` over GF(2^12) mod `x^12 + x^3 + 1`, length 3488.
pub fn goppa_3488_64() -> CodeSpec {
    let field = Field::new(12, 0x1009).expect("irreducible");
    let mut g = vec![Gf::ZERO; 65];
    g[0] = Gf(2);
    g[1] = Gf::ONE;
    g[3] = Gf::ONE;
    g[64] = Gf::ONE;
    preset(field, Poly::from_coeffs(g), 3488)
}

/// `y^128 + y^7 + y^2 + y + 1` over GF(2^13) mod `x^13 + x^4 + x^3 + x + 1`, length 8192.
pub fn goppa_8192_128() -> CodeSpec {
    let field = Field::new(13, 0x201b).expect("irreducible");
    let mut g = vec![Gf::ZERO; 129];
    for d in [0, 1, 2, 7, 128] {
        g[d] = Gf::ONE;
    }
    preset(field, Poly::from_coeffs(g), 8192)
}

fn preset(field: Field, g: Poly, n: usize) -> CodeSpec {
    let basis = BasisContext::polynomial(field);
    let support = goppa_support(&basis, &g, n).expect("G has no roots in the field");
    CodeSpec::goppa(&basis, support, g).expect("valid preset")
}

/// `H c^T = 0`, evaluated row by row through `ops`.
pub fn check_parity<A: Arith>(ops: &A, spec: &CodeSpec, c: &[Gf]) -> bool {
    let h = parity_check_matrix(spec);
    h.iter().all(|row| {
        row.iter()
            .zip(c)
            .fold(Gf::ZERO, |acc, (&hij, &cj)| ops.add(acc, ops.mul(hij, cj)))
            .is_zero()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn basis(m: u32, modulus: u32) -> BasisContext {
        BasisContext::polynomial(Field::new(m, modulus).unwrap())
    }

    fn direct_y(f: &Field, support: &[Gf], w: &[Gf]) -> Vec<Gf> {
        (0..support.len())
            .map(|i| {
                let mut prod = Gf::ONE;
                for j in 0..support.len() {
                    if j != i {
                        prod = f.mul(prod, f.add(support[i], support[j]));
                    }
                }
                f.inv(f.mul(w[i], prod)).unwrap()
            })
            .collect()
    }

    #[test]
    fn full_support_y_is_inverse_w() {
        let b = basis(4, 0b10011);
        let f = b.field();
        let support: Vec<Gf> = f.elements().collect();
        let w: Vec<Gf> = (0..16).map(|i| Gf(1 + (i * 7) % 15)).collect();
        let spec = CodeSpec::grs(&b, support.clone(), w.clone(), 10).unwrap();
        assert_eq!(spec.y(), direct_y(f, &support, &w).as_slice());
        for (y, w) in spec.y().iter().zip(&w) {
            assert_eq!(f.mul(*y, *w), Gf::ONE);
        }
        let b8 = basis(8, 0x11d);
        let support: Vec<Gf> = b8.field().elements().collect();
        let spec = CodeSpec::grs(&b8, support, vec![Gf(0x53); 256], 200).unwrap();
        let inv = b8.field().inv(Gf(0x53)).unwrap();
        assert!(spec.y().iter().all(|&y| y == inv));
    }

    #[test]
    fn two_point_grs() {
        let b = basis(2, 0b111);
        let spec = CodeSpec::grs(&b, vec![Gf(0), Gf(1)], vec![Gf::ONE; 2], 1).unwrap();
        assert_eq!(spec.y(), &[Gf::ONE, Gf::ONE]);
    }

    #[test]
    fn partial_support_matches_direct_product() {
        let b = basis(6, 0b1000011);
        let f = b.field();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for n in [5usize, 33, 60] {
            let mut all: Vec<Gf> = f.elements().collect();
            for i in 0..n {
                let j = rng.gen_range(i..64);
                all.swap(i, j);
            }
            let support = all[..n].to_vec();
            let w: Vec<Gf> = (0..n).map(|_| Gf(rng.gen_range(1..64))).collect();
            let spec = CodeSpec::grs(&b, support.clone(), w.clone(), n / 2).unwrap();
            assert_eq!(spec.y(), direct_y(f, &support, &w).as_slice());
            let alt = CodeSpec::alternant(&b, support, spec.y().to_vec(), n / 2).unwrap();
            assert_eq!(alt.w(), w.as_slice());
            assert_eq!(parity_check_matrix(&alt), parity_check_matrix(&spec));
        }
    }

    #[test]
    fn construction_errors() {
        let b = basis(4, 0b10011);
        assert_eq!(
            CodeSpec::grs(&b, vec![Gf(1), Gf(2), Gf(1)], vec![Gf::ONE; 3], 1).unwrap_err(),
            Error::DuplicateSupport(1)
        );
        assert_eq!(
            CodeSpec::grs(&b, vec![Gf(1), Gf(2)], vec![Gf::ONE, Gf::ZERO], 1).unwrap_err(),
            Error::ZeroMultiplier(1)
        );
        assert_eq!(
            CodeSpec::alternant(&b, vec![Gf(1), Gf(2)], vec![Gf::ZERO, Gf::ONE], 1).unwrap_err(),
            Error::ZeroMultiplier(0)
        );
        assert!(CodeSpec::grs(&b, vec![Gf(1), Gf(2)], vec![Gf::ONE; 2], 3).is_err());
        let a = Gf(5);
        let square = Poly::linear(a).mul(b.field(), &Poly::linear(a));
        let support: Vec<Gf> = b.field().elements().filter(|&x| x != a).collect();
        assert_eq!(
            CodeSpec::goppa(&b, support, square).unwrap_err(),
            Error::NonSeparable
        );
        let g = Poly::linear(Gf(3)).mul(b.field(), &Poly::linear(Gf(6)));
        let support: Vec<Gf> = b.field().elements().collect();
        assert_eq!(
            CodeSpec::goppa(&b, support, g).unwrap_err(),
            Error::GoppaRootOnSupport(3)
        );
    }

    #[test]
    fn transposed_vandermonde() {
        let b = basis(3, 0b1011);
        let support: Vec<Gf> = b.field().elements().collect();
        let spec = CodeSpec::alternant(&b, support.clone(), vec![Gf::ONE; 8], 4).unwrap();
        let h = parity_check_matrix(&spec);
        assert_eq!(h.len(), 4);
        for (l, row) in h.iter().enumerate() {
            for (i, &x) in row.iter().enumerate() {
                assert_eq!(x, b.field().pow(support[i], l as u64));
            }
        }
        assert_eq!(h[0], spec.y());
    }

    #[test]
    fn layout_is_a_permutation() {
        let b = basis(5, 0b100101);
        let support = vec![Gf(9), Gf(0), Gf(31), Gf(4)];
        let spec = CodeSpec::grs(&b, support.clone(), vec![Gf::ONE; 4], 2).unwrap();
        let layout = spec.layout();
        for j in 0..32 {
            assert_eq!(layout.pi_inv(layout.pi(j)), j);
        }
        for (i, &a) in support.iter().enumerate() {
            assert_eq!(b.omega(layout.pi_inv(i)), a);
        }
        assert_eq!((0..32).filter(|&j| layout.pi(j) < 4).count(), 4);
        // residual positions follow omega order
        let residual: Vec<usize> = (4..32).map(|i| layout.pi_inv(i)).collect();
        assert!(residual.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(layout.blocks(3), vec![0, 1, 3]);
    }

    #[test]
    fn grs_encoding() {
        let b = basis(6, 0b1000011);
        let f = b.field();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let support: Vec<Gf> = (0..50).map(|i| Gf(63 - i)).collect();
        let w: Vec<Gf> = (0..50).map(|_| Gf(rng.gen_range(1..64))).collect();
        let spec = CodeSpec::grs(&b, support.clone(), w.clone(), 21).unwrap();
        assert!(encode_grs(&spec, &Poly::zero())
            .unwrap()
            .iter()
            .all(|x| x.is_zero()));
        let ones = CodeSpec::grs(&b, support.clone(), vec![Gf::ONE; 50], 21).unwrap();
        assert_eq!(
            encode_grs(&ones, &Poly::constant(Gf(7))).unwrap(),
            vec![Gf(7); 50]
        );
        for _ in 0..20 {
            let msg = Poly::from_coeffs((0..21).map(|_| Gf(rng.gen_range(0..64))).collect());
            let c = encode_grs(&spec, &msg).unwrap();
            for i in 0..50 {
                assert_eq!(c[i], f.mul(w[i], msg.eval(f, support[i])));
            }
            assert!(is_codeword(&spec, &c));
            assert!(check_parity(f, &spec, &c));
            assert_eq!(recover_message(&spec, &c).unwrap(), msg);
        }
        assert!(encode_grs(&spec, &Poly::monomial(Gf::ONE, 21)).is_err());
    }

    #[test]
    fn systematic_rejects_non_power_of_two() {
        let b = basis(4, 0b10011);
        let support: Vec<Gf> = b.field().elements().collect();
        let spec = CodeSpec::grs(&b, support, vec![Gf::ONE; 16], 6).unwrap();
        assert!(matches!(
            encode_fft_systematic(&spec, &[Gf::ZERO; 6]),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn small_goppa_membership() {
        let b = basis(6, 0b1000011);
        let f = b.field();
        // x^2 + x + a with a chosen so that G has no roots in GF(64)
        let g = (1..64u16)
            .map(|a| Poly::from_coeffs(vec![Gf(a), Gf::ONE, Gf::ONE]))
            .find(|g| f.elements().all(|x| !g.eval(f, x).is_zero()))
            .unwrap();
        let support = goppa_support(&b, &g, 64).unwrap();
        let spec = CodeSpec::goppa(&b, support, g.clone()).unwrap();
        assert_eq!(spec.t(), 2);
        assert_eq!(spec.redundancy(), 4);
        let enc = spec.binary_encoder().unwrap();
        assert_eq!(enc.rank(), 12);
        assert!(goppa_membership(&spec, &[0u8; 64]).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..50 {
            let info: Vec<u8> = (0..enc.dimension()).map(|_| rng.gen_range(0..2)).collect();
            let mut c = encode_goppa(&spec, &info).unwrap();
            assert!(goppa_membership(&spec, &c).unwrap());
            assert_eq!(extract_info(&spec, &c).unwrap(), info);
            assert!(is_codeword(&spec, &bits_to_symbols(&c)));
            let i = rng.gen_range(0..64);
            c[i] ^= 1;
            assert!(!goppa_membership(&spec, &c).unwrap());
        }
    }
}
