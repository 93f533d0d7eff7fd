//! Shared helpers for integration tests: an independent brute-force
//! characteristic polynomial (cofactor expansion over polynomial entries,
//! nothing shared with the production modular code path) and seeded random
//! part-size generators.
#![allow(dead_code)] // each test binary uses a different subset

use centspec::matrix::IntMatrix;
use centspec::poly::IntPolynomial;
use num_bigint::BigInt;
use num_traits::One;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// det(xI - M) by recursive cofactor expansion over polynomial entries.
/// Exponential; only for small matrices.
pub fn naive_charpoly(m: &IntMatrix) -> IntPolynomial {
    let n = m.size();
    let entries: Vec<Vec<IntPolynomial>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = BigInt::from(-m[(i, j)]);
                    if i == j {
                        IntPolynomial::new(vec![c, BigInt::one()])
                    } else {
                        IntPolynomial::new(vec![c])
                    }
                })
                .collect()
        })
        .collect();
    poly_det(&entries)
}

fn poly_det(rows: &[Vec<IntPolynomial>]) -> IntPolynomial {
    let n = rows.len();
    if n == 0 {
        return IntPolynomial::one();
    }
    if n == 1 {
        return rows[0][0].clone();
    }
    let mut det = IntPolynomial::zero();
    for (col, cofactor) in rows[0].iter().enumerate() {
        if cofactor.is_zero() {
            continue;
        }
        let minor: Vec<Vec<IntPolynomial>> = rows[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != col)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let term = cofactor.mul(&poly_det(&minor));
        det = if col % 2 == 0 {
            det.add(&term)
        } else {
            det.sub(&term)
        };
    }
    det
}

/// Product of (x - r_i) over the given integer roots.
pub fn poly_from_roots(roots: &[i64]) -> IntPolynomial {
    let mut p = IntPolynomial::one();
    for &r in roots {
        p = p.mul(&IntPolynomial::linear_root(&BigInt::from(r)));
    }
    p
}

/// Seeded random part-size lists with total at most `max_total`.
pub fn random_part_lists(count: usize, max_total: u64, seed: u64) -> Vec<Vec<u64>> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut parts = Vec::new();
            let mut left = rng.gen_range(1..=max_total);
            while left > 0 {
                let p = rng.gen_range(1..=left);
                parts.push(p);
                left -= p;
            }
            parts
        })
        .collect()
}
