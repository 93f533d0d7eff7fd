//! Arithmetic in the binary field GF(2^k).
//!
//! Elements are k-bit vectors (bit i = coefficient of x^i); addition is XOR
//! and multiplication reduces modulo a fixed irreducible polynomial. The
//! reduction polynomial is the smallest irreducible of degree k when its
//! coefficient bitmask is read as an integer, so the field is reproducible.

/// GF(2^k) with a fixed reduction polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gf2k {
    k: u32,
    reduction: u64, // bitmask including the x^k term
}

impl Gf2k {
    /// Builds GF(2^k), k >= 1. The reduction polynomial is chosen
    /// deterministically: smallest-bitmask monic irreducible of degree k
    /// with nonzero constant term (k=1: x+1, k=2: x^2+x+1, k=3: x^3+x+1,
    /// k=4: x^4+x+1, ...).
    pub fn new(k: u32) -> Self {
        assert!((1..=24).contains(&k), "field degree out of supported range");
        let reduction = smallest_irreducible(k);
        Gf2k { k, reduction }
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn reduction_poly(&self) -> u64 {
        self.reduction
    }

    /// Number of field elements, 2^k.
    pub fn size(&self) -> u64 {
        1 << self.k
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        a ^ b
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        poly_mod_gf2(poly_mul_gf2(a, b), self.reduction)
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    /// Multiplicative inverse of a nonzero element.
    pub fn inv(&self, a: u64) -> u64 {
        assert!(a != 0, "zero has no inverse");
        self.pow(a, self.size() - 2)
    }
}

/// Carry-less polynomial multiplication over GF(2).
fn poly_mul_gf2(a: u64, b: u64) -> u64 {
    let mut r = 0u64;
    let mut a = a;
    let mut b = b;
    while b != 0 {
        if b & 1 == 1 {
            r ^= a;
        }
        a <<= 1;
        b >>= 1;
    }
    r
}

/// Remainder of polynomial division over GF(2).
fn poly_mod_gf2(mut a: u64, m: u64) -> u64 {
    let md = 63 - m.leading_zeros();
    while a >= 1 << md {
        let ad = 63 - a.leading_zeros();
        a ^= m << (ad - md);
    }
    a
}

fn poly_degree(p: u64) -> u32 {
    63 - p.leading_zeros()
}

/// Irreducibility over GF(2) by trial division with every polynomial of
/// degree 1..=k/2.
fn is_irreducible_gf2(f: u64) -> bool {
    let k = poly_degree(f);
    for d in 1..=k / 2 {
        for g in (1u64 << d)..(1u64 << (d + 1)) {
            if poly_mod_gf2(f, g) == 0 {
                return false;
            }
        }
    }
    true
}

fn smallest_irreducible(k: u32) -> u64 {
    // Monic degree k with nonzero constant term; scan by ascending bitmask.
    let lo = 1u64 << k;
    let hi = 1u64 << (k + 1);
    for f in (lo + 1..hi).step_by(2) {
        if is_irreducible_gf2(f) {
            return f;
        }
    }
    unreachable!("an irreducible polynomial of degree {} exists", k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_polynomial_choices() {
        assert_eq!(Gf2k::new(1).reduction_poly(), 0b11); // x + 1
        assert_eq!(Gf2k::new(2).reduction_poly(), 0b111); // x^2 + x + 1
        assert_eq!(Gf2k::new(3).reduction_poly(), 0b1011); // x^3 + x + 1
        assert_eq!(Gf2k::new(4).reduction_poly(), 0b10011); // x^4 + x + 1
    }

    #[test]
    fn field_laws_exhaustive_small_k() {
        for k in 1..=4 {
            let f = Gf2k::new(k);
            let q = f.size();
            for a in 0..q {
                for b in 0..q {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..q {
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.mul(a, 0), 0);
            }
        }
    }

    #[test]
    fn nonzero_elements_form_cyclic_group() {
        for k in 1..=5 {
            let f = Gf2k::new(k);
            let q = f.size();
            let group_order = q - 1;
            let mut max_order = 0u64;
            for a in 1..q {
                assert_eq!(f.pow(a, group_order), 1);
                let mut ord = 1u64;
                let mut x = a;
                while x != 1 {
                    x = f.mul(x, a);
                    ord += 1;
                }
                assert_eq!(group_order % ord, 0);
                max_order = max_order.max(ord);
            }
            assert_eq!(max_order, group_order);
        }
    }

    #[test]
    fn inverses_round_trip() {
        let f = Gf2k::new(4);
        for a in 1..f.size() {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
    }
}
