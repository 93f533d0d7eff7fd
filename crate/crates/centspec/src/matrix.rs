//! Square integer matrices and exact characteristic polynomials.
//!
//! `char_poly` computes det(xI - M) with arbitrary-precision integer
//! coefficients and no floating point: the matrix is reduced to Hessenberg
//! form modulo several word-sized primes (where division is exact), the
//! characteristic polynomial is read off by the Hessenberg recurrence, and
//! the integer coefficients are reconstructed by CRT under a proven
//! Hadamard-style bound. `determinant` is an independent fraction-free
//! (Bareiss) elimination used to cross-check.

use crate::graph::Graph;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::poly::IntPolynomial;

/// Which matrix of a graph to take: A, L = D - A, or Q = D + A.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MatrixKind {
    Adjacency,
    Laplacian,
    SignlessLaplacian,
}

impl MatrixKind {
    pub const ALL: [MatrixKind; 3] = [
        MatrixKind::Adjacency,
        MatrixKind::Laplacian,
        MatrixKind::SignlessLaplacian,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            MatrixKind::Adjacency => "adjacency",
            MatrixKind::Laplacian => "laplacian",
            MatrixKind::SignlessLaplacian => "signless_laplacian",
        }
    }
}

/// Dense square integer matrix, row major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        IntMatrix {
            n,
            data: vec![0; n * n],
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for r in rows {
            assert_eq!(r.len(), n, "matrix must be square");
            data.extend_from_slice(r);
        }
        IntMatrix { n, data }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Adjacency, Laplacian or signless Laplacian matrix of a graph in its
    /// fixed vertex order.
    pub fn of_graph(g: &Graph, kind: MatrixKind) -> Self {
        let n = g.order();
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                if g.has_edge(i, j) {
                    m[(i, j)] = match kind {
                        MatrixKind::Adjacency | MatrixKind::SignlessLaplacian => 1,
                        MatrixKind::Laplacian => -1,
                    };
                }
            }
            if kind != MatrixKind::Adjacency {
                m[(i, i)] = g.degree(i) as i64;
            }
        }
        m
    }

    /// Maximum absolute row sum; bounds every eigenvalue in absolute value.
    pub fn inf_norm(&self) -> u64 {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| self[(i, j)].unsigned_abs())
                    .sum::<u64>()
            })
            .max()
            .unwrap_or(0)
    }

    pub fn trace(&self) -> i64 {
        (0..self.n).map(|i| self[(i, i)]).sum()
    }

    /// Matrix-vector product with exact big-integer arithmetic.
    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.n);
        (0..self.n)
            .map(|i| {
                let mut acc = BigInt::zero();
                for j in 0..self.n {
                    if self[(i, j)] != 0 {
                        acc += BigInt::from(self[(i, j)]) * &v[j];
                    }
                }
                acc
            })
            .collect()
    }

    /// Monic characteristic polynomial det(xI - M), exact.
    pub fn char_poly(&self) -> IntPolynomial {
        let n = self.n;
        if n == 0 {
            return IntPolynomial::one();
        }
        let bound = charpoly_coeff_bound(self);
        let primes = primes_covering(&bound);
        let residues: Vec<Vec<u64>> = primes
            .iter()
            .map(|&p| charpoly_mod_p(self, p))
            .collect();
        let coeffs = (0..=n)
            .map(|j| {
                let rs: Vec<u64> = residues.iter().map(|r| r[j]).collect();
                crt_symmetric(&rs, &primes)
            })
            .collect();
        let poly = IntPolynomial::new(coeffs);
        debug_assert!(poly.is_monic());
        poly
    }

    /// Determinant by fraction-free Bareiss elimination over BigInt.
    pub fn determinant(&self) -> BigInt {
        let n = self.n;
        if n == 0 {
            return BigInt::one();
        }
        let mut a: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| BigInt::from(self[(i, j)])).collect())
            .collect();
        let mut sign = 1i64;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    debug_assert!((&num % &prev).is_zero());
                    a[i][j] = num / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        if sign < 0 {
            -det
        } else {
            det
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = i64;
    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.data[i * self.n + j]
    }
}

/// Bound B with |c_k| <= B for every coefficient of the characteristic
/// polynomial: |c_{n-k}| is a sum of C(n,k) principal k-minors, each at most
/// (sqrt(k) * maxentry)^k by Hadamard.
fn charpoly_coeff_bound(m: &IntMatrix) -> BigUint {
    let n = m.n;
    let maxentry = m
        .data
        .iter()
        .map(|e| e.unsigned_abs())
        .max()
        .unwrap_or(0)
        .max(1);
    let b = BigUint::from(maxentry);
    let mut best = BigUint::one();
    let mut binom = BigUint::one(); // C(n, k)
    for k in 1..=n {
        binom = binom * BigUint::from(n - k + 1) / BigUint::from(k);
        let sqrt_k = (k as f64).sqrt().ceil() as u64 + 1;
        let term = &binom * (BigUint::from(sqrt_k) * &b).pow(k as u32);
        if term > best {
            best = term;
        }
    }
    best
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn addmod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

fn submod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

fn invmod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for u64.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &q in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n.is_multiple_of(q) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Enough distinct primes just below 2^62 so that their product exceeds
/// twice the coefficient bound (symmetric CRT range).
fn primes_covering(bound: &BigUint) -> Vec<u64> {
    let target = bound * 2u32 + 1u32;
    let mut primes = Vec::new();
    let mut product = BigUint::one();
    let mut candidate = (1u64 << 62) - 1;
    while product <= target {
        while !is_prime_u64(candidate) {
            candidate -= 2;
        }
        primes.push(candidate);
        product *= BigUint::from(candidate);
        candidate -= 2;
    }
    primes
}

/// Characteristic polynomial of `m` modulo the prime `p`: similarity
/// reduction to upper Hessenberg form, then the standard recurrence on
/// leading principal minors. Coefficients constant term first, monic.
fn charpoly_mod_p(m: &IntMatrix, p: u64) -> Vec<u64> {
    let n = m.n;
    let mut a: Vec<Vec<u64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| m[(i, j)].rem_euclid(p as i64) as u64)
                .collect()
        })
        .collect();

    // Hessenberg reduction with pivoting; row and column operations in
    // pairs keep the matrix similar to the input.
    for j in 0..n.saturating_sub(2) {
        let pivot = (j + 1..n).find(|&i| a[i][j] != 0);
        let Some(pivot) = pivot else { continue };
        if pivot != j + 1 {
            a.swap(pivot, j + 1);
            for row in a.iter_mut() {
                row.swap(pivot, j + 1);
            }
        }
        let inv = invmod(a[j + 1][j], p);
        for i in j + 2..n {
            if a[i][j] == 0 {
                continue;
            }
            let f = mulmod(a[i][j], inv, p);
            for c in j..n {
                let t = mulmod(f, a[j + 1][c], p);
                a[i][c] = submod(a[i][c], t, p);
            }
            for r in 0..n {
                let t = mulmod(f, a[r][i], p);
                a[r][j + 1] = addmod(a[r][j + 1], t, p);
            }
        }
    }

    // p_0 = 1; p_m = (x - h[m-1][m-1]) p_{m-1}
    //             - sum_i h[m-1-i][m-1] * prod(subdiag) * p_{m-1-i}
    let mut polys: Vec<Vec<u64>> = Vec::with_capacity(n + 1);
    polys.push(vec![1]);
    for m_dim in 1..=n {
        let prev = &polys[m_dim - 1];
        let mut cur = vec![0u64; m_dim + 1];
        let h_mm = a[m_dim - 1][m_dim - 1];
        for (d, &c) in prev.iter().enumerate() {
            cur[d + 1] = addmod(cur[d + 1], c, p);
            cur[d] = submod(cur[d], mulmod(h_mm, c, p), p);
        }
        let mut subdiag_prod = 1u64;
        for i in 1..m_dim {
            subdiag_prod = mulmod(subdiag_prod, a[m_dim - i][m_dim - i - 1], p);
            if subdiag_prod == 0 {
                break;
            }
            let f = mulmod(a[m_dim - 1 - i][m_dim - 1], subdiag_prod, p);
            if f == 0 {
                continue;
            }
            for (d, &c) in polys[m_dim - 1 - i].iter().enumerate() {
                cur[d] = submod(cur[d], mulmod(f, c, p), p);
            }
        }
        polys.push(cur);
    }
    polys.pop().unwrap()
}

fn biguint_mod_u64(x: &BigUint, m: u64) -> u64 {
    let mut r: u128 = 0;
    for d in x.to_u64_digits().iter().rev() {
        r = ((r << 64) | *d as u128) % m as u128;
    }
    r as u64
}

/// CRT combination of residues into the symmetric range (-P/2, P/2).
fn crt_symmetric(residues: &[u64], primes: &[u64]) -> BigInt {
    let mut x = BigUint::from(residues[0]);
    let mut modulus = BigUint::from(primes[0]);
    for i in 1..primes.len() {
        let p = primes[i];
        let x_mod_p = biguint_mod_u64(&x, p);
        let diff = submod(residues[i] % p, x_mod_p, p);
        let m_mod_p = biguint_mod_u64(&modulus, p);
        let t = mulmod(diff, invmod(m_mod_p, p), p);
        x += &modulus * BigUint::from(t);
        modulus *= BigUint::from(p);
    }
    let half = &modulus >> 1;
    if x > half {
        BigInt::from(x) - BigInt::from(modulus)
    } else {
        BigInt::from(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charpoly_identity() {
        let p = IntMatrix::identity(3).char_poly();
        // (x - 1)^3 = x^3 - 3x^2 + 3x - 1
        assert_eq!(p, IntPolynomial::from_i64(&[-1, 3, -3, 1]));
    }

    #[test]
    fn charpoly_empty_matrix() {
        assert_eq!(IntMatrix::zeros(0).char_poly(), IntPolynomial::one());
    }

    #[test]
    fn charpoly_2x2() {
        let m = IntMatrix::from_rows(&[vec![2, 3], vec![5, 7]]);
        // x^2 - 9x + (14 - 15)
        assert_eq!(m.char_poly(), IntPolynomial::from_i64(&[-1, -9, 1]));
    }

    #[test]
    fn graph_matrices_entrywise() {
        let mut k2 = Graph::new(2);
        k2.add_edge(0, 1);
        assert_eq!(
            IntMatrix::of_graph(&k2, MatrixKind::Adjacency),
            IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]])
        );
        assert_eq!(
            IntMatrix::of_graph(&k2, MatrixKind::SignlessLaplacian),
            IntMatrix::from_rows(&[vec![1, 1], vec![1, 1]])
        );
        let mut star = Graph::new(3);
        star.add_edge(0, 1);
        star.add_edge(0, 2);
        assert_eq!(
            IntMatrix::of_graph(&star, MatrixKind::Laplacian),
            IntMatrix::from_rows(&[vec![2, -1, -1], vec![-1, 1, 0], vec![-1, 0, 1]])
        );
    }

    #[test]
    fn laplacian_rows_sum_to_zero() {
        let g = Graph::complete_multipartite(&[3, 2, 1]);
        let l = IntMatrix::of_graph(&g, MatrixKind::Laplacian);
        let q = IntMatrix::of_graph(&g, MatrixKind::SignlessLaplacian);
        for i in 0..g.order() {
            let lsum: i64 = (0..g.order()).map(|j| l[(i, j)]).sum();
            let qsum: i64 = (0..g.order()).map(|j| q[(i, j)]).sum();
            assert_eq!(lsum, 0);
            assert_eq!(qsum, 2 * g.degree(i) as i64);
        }
    }

    #[test]
    fn charpoly_star_k14() {
        // A(K_{1,4}) -> x^5 - 4x^3
        let mut g = Graph::new(5);
        for v in 1..5 {
            g.add_edge(0, v);
        }
        let p = IntMatrix::of_graph(&g, MatrixKind::Adjacency).char_poly();
        assert_eq!(p, IntPolynomial::from_i64(&[0, 0, 0, -4, 0, 1]));
    }

    #[test]
    fn charpoly_constant_term_is_signed_det() {
        let m = IntMatrix::from_rows(&[vec![1, -2, 3], vec![0, 4, 1], vec![-7, 2, 2]]);
        let p = m.char_poly();
        let det = m.determinant();
        // det(xI - M) at 0 = det(-M) = (-1)^n det(M)
        let sign = if m.size().is_multiple_of(2) { 1 } else { -1 };
        assert_eq!(p.coeff(0), det * BigInt::from(sign));
    }

    #[test]
    fn determinant_singular_and_pivoting() {
        let m = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(m.determinant(), BigInt::from(-1));
        let s = IntMatrix::from_rows(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(s.determinant(), BigInt::zero());
    }

    #[test]
    fn trace_and_norm() {
        let m = IntMatrix::from_rows(&[vec![2, -1], vec![-1, 1]]);
        assert_eq!(m.trace(), 3);
        assert_eq!(m.inf_norm(), 3);
    }

    #[test]
    fn prime_generation() {
        let ps = primes_covering(&BigUint::from(10u32).pow(40));
        assert!(ps.len() >= 3);
        assert!(ps.iter().all(|&p| is_prime_u64(p)));
        let mut sorted = ps.clone();
        sorted.dedup();
        assert_eq!(sorted.len(), ps.len());
    }
}
