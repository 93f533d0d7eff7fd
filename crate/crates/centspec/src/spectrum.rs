//! Exact spectra: integer eigenvalues with multiplicities plus residual
//! integer-rootless polynomial factors.
//!
//! All verification-grade computation here is exact integer arithmetic.
//! `approx_real_roots` is the single floating-point routine and exists only
//! for human-readable output.

use crate::matrix::{IntMatrix, MatrixKind};
use crate::poly::IntPolynomial;
use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpectrumError {
    #[error("spectrum contains no eigenvalue 0; not a Laplacian spectrum")]
    MissingZero,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

/// Multiset of integer eigenvalues plus residual factors. Residuals are
/// monic, have degree >= 2 and no integer roots; comparison is exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactSpectrum {
    dim: usize,
    eigs: Vec<(BigInt, usize)>,
    residuals: Vec<(IntPolynomial, usize)>,
}

impl ExactSpectrum {
    /// Assembles a spectrum, merging duplicate entries and dropping zero
    /// multiplicities. Panics if the total does not fill the dimension.
    pub fn from_parts(
        dim: usize,
        eigs: Vec<(BigInt, usize)>,
        residuals: Vec<(IntPolynomial, usize)>,
    ) -> Self {
        let mut eig_map: BTreeMap<BigInt, usize> = BTreeMap::new();
        for (v, m) in eigs {
            if m > 0 {
                *eig_map.entry(v).or_insert(0) += m;
            }
        }
        let mut res_map: BTreeMap<IntPolynomial, usize> = BTreeMap::new();
        for (p, m) in residuals {
            if m > 0 {
                assert!(
                    p.degree().unwrap_or(0) >= 2,
                    "residual factors have degree >= 2"
                );
                *res_map.entry(p).or_insert(0) += m;
            }
        }
        let eigs: Vec<(BigInt, usize)> = eig_map.into_iter().collect();
        let mut residuals: Vec<(IntPolynomial, usize)> = res_map.into_iter().collect();
        residuals.sort_by_key(|(p, _)| (p.degree().unwrap_or(0), p.clone()));
        let total: usize = eigs.iter().map(|(_, m)| m).sum::<usize>()
            + residuals
                .iter()
                .map(|(p, m)| p.degree().unwrap_or(0) * m)
                .sum::<usize>();
        assert_eq!(total, dim, "spectrum multiplicities must fill the dimension");
        ExactSpectrum {
            dim,
            eigs,
            residuals,
        }
    }

    pub fn dimension(&self) -> usize {
        self.dim
    }

    pub fn eigenvalues(&self) -> &[(BigInt, usize)] {
        &self.eigs
    }

    pub fn residual_factors(&self) -> &[(IntPolynomial, usize)] {
        &self.residuals
    }

    pub fn multiplicity_of(&self, v: &BigInt) -> usize {
        self.eigs
            .iter()
            .find(|(e, _)| e == v)
            .map(|(_, m)| *m)
            .unwrap_or(0)
    }

    /// True iff the spectrum consists entirely of integers.
    pub fn is_integral(&self) -> bool {
        self.residuals.is_empty()
    }

    /// Sum of all eigenvalues with multiplicity (first power sum). Residual
    /// factors contribute through Newton's identities on their coefficients.
    pub fn eigenvalue_sum(&self) -> BigInt {
        let mut s = BigInt::zero();
        for (v, m) in &self.eigs {
            s += v * BigInt::from(*m as u64);
        }
        for (p, m) in &self.residuals {
            let d = p.degree().unwrap();
            s += -p.coeff(d - 1) * BigInt::from(*m as u64);
        }
        s
    }

    /// Sum of squared eigenvalues with multiplicity.
    pub fn eigenvalue_square_sum(&self) -> BigInt {
        let mut s = BigInt::zero();
        for (v, m) in &self.eigs {
            s += v * v * BigInt::from(*m as u64);
        }
        for (p, m) in &self.residuals {
            let d = p.degree().unwrap();
            let e1 = -p.coeff(d - 1);
            let e2 = if d >= 2 { p.coeff(d - 2) } else { BigInt::zero() };
            s += (&e1 * &e1 - BigInt::from(2) * e2) * BigInt::from(*m as u64);
        }
        s
    }

    /// Multiplies all linear and residual factors back into a polynomial.
    pub fn to_polynomial(&self) -> IntPolynomial {
        let mut p = IntPolynomial::one();
        for (v, m) in &self.eigs {
            let lin = IntPolynomial::linear_root(v);
            for _ in 0..*m {
                p = p.mul(&lin);
            }
        }
        for (r, m) in &self.residuals {
            for _ in 0..*m {
                p = p.mul(r);
            }
        }
        p
    }
}

impl std::fmt::Display for ExactSpectrum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut items: Vec<String> = self
            .eigs
            .iter()
            .map(|(v, m)| format!("{}:{}", v, m))
            .collect();
        for (p, m) in &self.residuals {
            items.push(format!("({}):{}", p, m));
        }
        write!(f, "{{{}}}", items.join(", "))
    }
}

/// Factors a monic polynomial into integer roots (found through the
/// rational-root bound) and integer-rootless residuals, splitting residual
/// factors of the shape (x^2 - c) out of even polynomials.
pub fn extract_spectrum(p: &IntPolynomial) -> ExactSpectrum {
    extract_spectrum_impl(p, None)
}

/// Same as [`extract_spectrum`] but with a caller-supplied bound on the
/// absolute value of any root (e.g. a matrix infinity norm), which prunes
/// the candidate scan.
pub fn extract_spectrum_bounded(p: &IntPolynomial, max_abs_root: u64) -> ExactSpectrum {
    extract_spectrum_impl(p, Some(max_abs_root))
}

fn extract_spectrum_impl(p: &IntPolynomial, max_abs_root: Option<u64>) -> ExactSpectrum {
    assert!(p.is_monic(), "spectrum extraction expects a monic polynomial");
    let dim = p.degree().unwrap_or(0);
    let mut eigs: Vec<(BigInt, usize)> = Vec::new();

    let zeros = p.trailing_zeros();
    if zeros > 0 {
        eigs.push((BigInt::zero(), zeros));
    }
    let mut rest = p.shift_down(zeros);

    let int_roots = take_integer_roots(&mut rest, max_abs_root);
    eigs.extend(int_roots);

    let mut residuals: Vec<(IntPolynomial, usize)> = Vec::new();
    if rest.degree().unwrap_or(0) >= 1 {
        debug_assert!(rest.degree().unwrap() >= 2, "degree-1 factors have integer roots");
        residuals = split_even_residual(rest, max_abs_root);
    }
    ExactSpectrum::from_parts(dim, eigs, residuals)
}

/// Divides every integer root (with multiplicity) out of `poly`.
/// Candidates r satisfy r | c_0 and |r| <= root bound.
fn take_integer_roots(
    poly: &mut IntPolynomial,
    max_abs_root: Option<u64>,
) -> Vec<(BigInt, usize)> {
    let mut out = Vec::new();
    if poly.degree().unwrap_or(0) == 0 {
        return out;
    }
    let mut bound = fujiwara_root_bound(poly);
    if let Some(b) = max_abs_root {
        bound = bound.min(b);
    }
    let mut r = 1u64;
    while r <= bound && poly.degree().unwrap_or(0) > 0 {
        let c0 = poly.coeff(0);
        if let Some(limit) = c0.magnitude().to_u64() {
            if limit < r {
                break; // |c_0| < r: no divisor candidates remain
            }
        }
        if biguint_divisible(c0.magnitude(), r) {
            for sign in [1i64, -1] {
                let cand = BigInt::from(sign * r as i64);
                let mut mult = 0usize;
                while let Some(q) = poly.div_by_root(&cand) {
                    *poly = q;
                    mult += 1;
                }
                if mult > 0 {
                    out.push((cand, mult));
                }
            }
        }
        r += 1;
    }
    out
}

fn biguint_divisible(x: &BigUint, m: u64) -> bool {
    let mut r: u128 = 0;
    for d in x.to_u64_digits().iter().rev() {
        r = ((r << 64) | *d as u128) % m as u128;
    }
    r == 0
}

/// Upper bound on |root| for a monic polynomial:
/// 2 * max_i |c_{d-i}|^{1/i} (Lagrange/Fujiwara style), saturating.
fn fujiwara_root_bound(p: &IntPolynomial) -> u64 {
    let d = match p.degree() {
        Some(d) if d >= 1 => d,
        _ => return 0,
    };
    let mut best: u64 = 1;
    for i in 1..=d {
        let c = p.coeff(d - i);
        if c.is_zero() {
            continue;
        }
        let mag = c.magnitude();
        let root = mag.nth_root(i as u32);
        let root = if root.clone().pow(i as u32) < *mag {
            root + 1u32
        } else {
            root
        };
        let val = root.to_u64().unwrap_or(u64::MAX);
        best = best.max(val);
    }
    best.saturating_mul(2)
}

/// Splits (x^2 - c) powers out of an even integer-rootless polynomial;
/// anything else stays whole with multiplicity 1.
fn split_even_residual(
    q: IntPolynomial,
    max_abs_root: Option<u64>,
) -> Vec<(IntPolynomial, usize)> {
    let Some(mut even) = q.even_part() else {
        return vec![(q, 1)];
    };
    // Roots c of the compressed polynomial satisfy c = x^2, so the bound
    // on |x| squares.
    let squared_bound = max_abs_root.map(|b| b.saturating_mul(b));
    let roots = take_integer_roots(&mut even, squared_bound);
    if roots.is_empty() {
        return vec![(q, 1)];
    }
    let mut out = Vec::new();
    for (c, m) in roots {
        // c cannot be a square >= 0: q itself had no integer roots.
        debug_assert!(
            c.is_negative() || c.magnitude().sqrt().pow(2) != *c.magnitude(),
            "square c would contradict integer-rootlessness"
        );
        out.push((
            IntPolynomial::new(vec![-c, BigInt::zero(), BigInt::from(1)]),
            m,
        ));
    }
    if even.degree().unwrap_or(0) >= 1 {
        out.push((even.compose_square(), 1));
    }
    out
}

/// Laplacian spectrum of the complement graph on n vertices: one copy of 0
/// is removed, every remaining eigenvalue maps through mu -> n - mu (and
/// residual factors through x -> n - x), then 0 is put back.
pub fn complement_laplacian_spectrum(
    s: &ExactSpectrum,
    n: usize,
) -> Result<ExactSpectrum, SpectrumError> {
    if s.dimension() != n {
        return Err(SpectrumError::DimensionMismatch(format!(
            "spectrum fills dimension {}, graph has {} vertices",
            s.dimension(),
            n
        )));
    }
    let zero = BigInt::zero();
    if s.multiplicity_of(&zero) == 0 {
        return Err(SpectrumError::MissingZero);
    }
    let big_n = BigInt::from(n as u64);
    let mut eigs: Vec<(BigInt, usize)> = Vec::new();
    for (v, m) in s.eigenvalues() {
        let m = if v.is_zero() { m - 1 } else { *m };
        if m > 0 {
            eigs.push((&big_n - v, m));
        }
    }
    eigs.push((zero, 1));
    let residuals = s
        .residual_factors()
        .iter()
        .map(|(p, m)| (p.reflect_at(&big_n), *m))
        .collect();
    Ok(ExactSpectrum::from_parts(n, eigs, residuals))
}

/// Vertex-partition shape for the equitable quotient: blocks are either the
/// cliques of a clique union or the parts of a complete multipartite graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartitionShape {
    CliqueUnion,
    Multipartite,
}

/// Equitable-partition quotient of A, L or Q over the given part sizes (in
/// the given order): entry (i,j) is the number of neighbors a vertex of
/// block i has in block j, signed/shifted per matrix kind.
pub fn quotient_matrix(parts: &[u64], kind: MatrixKind, shape: PartitionShape) -> IntMatrix {
    assert!(!parts.is_empty(), "parts must be nonempty");
    let m = parts.len();
    let total: u64 = parts.iter().sum();
    let mut q = IntMatrix::zeros(m);
    for i in 0..m {
        for j in 0..m {
            let within = i == j;
            let entry: i64 = match shape {
                PartitionShape::CliqueUnion => {
                    let neigh = if within { parts[i] as i64 - 1 } else { 0 };
                    apply_kind(kind, within, neigh, parts[i] as i64 - 1)
                }
                PartitionShape::Multipartite => {
                    let degree = (total - parts[i]) as i64;
                    let neigh = if within { 0 } else { parts[j] as i64 };
                    apply_kind(kind, within, neigh, degree)
                }
            };
            q[(i, j)] = entry;
        }
    }
    q
}

fn apply_kind(kind: MatrixKind, diagonal: bool, neighbors: i64, degree: i64) -> i64 {
    match kind {
        MatrixKind::Adjacency => neighbors,
        MatrixKind::Laplacian => {
            if diagonal {
                degree - neighbors
            } else {
                -neighbors
            }
        }
        MatrixKind::SignlessLaplacian => {
            if diagonal {
                degree + neighbors
            } else {
                neighbors
            }
        }
    }
}

/// All real roots of a monic polynomial, approximated to at least 1e-10 by
/// derivative-based isolation and bisection. Display only; never used in
/// verification. Returns distinct roots in ascending order.
pub fn approx_real_roots(p: &IntPolynomial) -> Vec<f64> {
    let d = match p.degree() {
        Some(d) if d >= 1 => d,
        _ => return Vec::new(),
    };
    let coeffs: Vec<f64> = (0..=d).map(|i| p.coeff(i).to_f64().unwrap_or(0.0)).collect();
    let mut roots = real_roots_f64(&coeffs);
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
    roots.dedup_by(|a, b| (*a - *b).abs() <= 1e-9 * (1.0 + b.abs()));
    roots
}

fn eval_f64(coeffs: &[f64], x: f64) -> f64 {
    let mut acc = 0.0;
    for c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn real_roots_f64(coeffs: &[f64]) -> Vec<f64> {
    let d = coeffs.len() - 1;
    match d {
        0 => Vec::new(),
        1 => vec![-coeffs[0] / coeffs[1]],
        2 => {
            let (c, b, a) = (coeffs[0], coeffs[1], coeffs[2]);
            let disc = b * b - 4.0 * a * c;
            if disc < 0.0 {
                Vec::new()
            } else if disc == 0.0 {
                vec![-b / (2.0 * a)]
            } else {
                let s = disc.sqrt();
                vec![(-b - s) / (2.0 * a), (-b + s) / (2.0 * a)]
            }
        }
        _ => {
            let deriv: Vec<f64> = coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * i as f64)
                .collect();
            let mut crits = real_roots_f64(&deriv);
            crits.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let lead = coeffs[d];
            let bound = 1.0
                + coeffs[..d]
                    .iter()
                    .map(|c| (c / lead).abs())
                    .fold(0.0, f64::max);
            let mut points = vec![-bound];
            points.extend(crits);
            points.push(bound);
            let mut roots = Vec::new();
            let scale = coeffs.iter().map(|c| c.abs()).fold(1.0, f64::max);
            for w in points.windows(2) {
                let (lo, hi) = (w[0], w[1]);
                let (flo, fhi) = (eval_f64(coeffs, lo), eval_f64(coeffs, hi));
                if flo.abs() <= 1e-12 * scale {
                    roots.push(lo);
                    continue;
                }
                if flo * fhi < 0.0 {
                    roots.push(bisect(coeffs, lo, hi));
                }
            }
            let last = *points.last().unwrap();
            if eval_f64(coeffs, last).abs() <= 1e-12 * scale {
                roots.push(last);
            }
            roots
        }
    }
}

fn bisect(coeffs: &[f64], mut lo: f64, mut hi: f64) -> f64 {
    let mut flo = eval_f64(coeffs, lo);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let fmid = eval_f64(coeffs, mid);
        if fmid == 0.0 {
            return mid;
        }
        if flo * fmid < 0.0 {
            hi = mid;
        } else {
            lo = mid;
            flo = fmid;
        }
    }
    0.5 * (lo + hi)
}
