//! Construction of five finite non-abelian group families and exhaustive
//! centralizer computation.
//!
//! The four presented families (generalized quaternion, dihedral,
//! quasidihedral, metacyclic) use a pair encoding (i, e) = g1^i g2^e with
//! multiplication derived from the defining relations, so products cost
//! O(1) and are directly auditable against the presentation. PSL(2, 2^k) is
//! realized as SL(2, 2^k): in characteristic 2 the center of SL2 is
//! trivial, so the quotient is the group itself.

use crate::gf2k::Gf2k;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, HashSet};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("group is abelian: every centralizer is the whole group")]
    AbelianGroup,
}

/// One concrete group: a family tag plus its integer parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum GroupSpec {
    /// Q_{4n} = <x, y : x^{2n} = 1, x^n = y^2, yx = x^{-1}y>, n >= 2.
    GeneralizedQuaternion { n: u64 },
    /// D_{2n} = <x, y : x^n = y^2 = 1, yxy^{-1} = x^{-1}>, n >= 3.
    Dihedral { n: u64 },
    /// QD_{2^n} = <a, b : a^{2^{n-1}} = b^2 = 1, bab^{-1} = a^{2^{n-2}-1}>, n >= 4.
    Quasidihedral { n: u32 },
    /// M_{2pq} = <a, b : a^p = b^{2q} = 1, bab^{-1} = a^{-1}>, p > 2, q >= 1.
    Metacyclic { p: u64, q: u64 },
    /// PSL(2, 2^k), k >= 1, of order 2^k (2^{2k} - 1).
    ProjectiveSpecialLinear { k: u32 },
}

impl GroupSpec {
    pub fn validate(&self) -> Result<(), GroupError> {
        let fail = |msg: String| Err(GroupError::InvalidParams(msg));
        match *self {
            GroupSpec::GeneralizedQuaternion { n } if n < 2 => {
                fail(format!("quaternion requires n >= 2, got {n}"))
            }
            GroupSpec::Dihedral { n } if n < 3 => {
                fail(format!("dihedral requires n >= 3 (non-abelian), got {n}"))
            }
            GroupSpec::Quasidihedral { n } if n < 4 => {
                fail(format!("quasidihedral requires n >= 4, got {n}"))
            }
            GroupSpec::Quasidihedral { n } if n > 40 => {
                fail(format!("quasidihedral order 2^{n} is out of range"))
            }
            GroupSpec::Metacyclic { p, q } if p <= 2 || q < 1 => {
                fail(format!("metacyclic requires p > 2 and q >= 1, got p={p} q={q}"))
            }
            GroupSpec::ProjectiveSpecialLinear { k } if !(1..=16).contains(&k) => {
                fail(format!("psl requires 1 <= k <= 16, got {k}"))
            }
            _ => Ok(()),
        }
    }

    /// Group order: 4n, 2n, 2^n, 2pq, or 2^k(2^{2k} - 1).
    pub fn order(&self) -> u128 {
        match *self {
            GroupSpec::GeneralizedQuaternion { n } => 4 * n as u128,
            GroupSpec::Dihedral { n } => 2 * n as u128,
            GroupSpec::Quasidihedral { n } => 1u128 << n,
            GroupSpec::Metacyclic { p, q } => 2 * p as u128 * q as u128,
            GroupSpec::ProjectiveSpecialLinear { k } => {
                let q = 1u128 << k;
                q * (q * q - 1)
            }
        }
    }

    pub fn family_name(&self) -> &'static str {
        match self {
            GroupSpec::GeneralizedQuaternion { .. } => "quaternion",
            GroupSpec::Dihedral { .. } => "dihedral",
            GroupSpec::Quasidihedral { .. } => "quasidihedral",
            GroupSpec::Metacyclic { .. } => "metacyclic",
            GroupSpec::ProjectiveSpecialLinear { .. } => "psl",
        }
    }

    pub fn describe(&self) -> String {
        match *self {
            GroupSpec::GeneralizedQuaternion { n } => format!("Q_{{{}}}", 4 * n),
            GroupSpec::Dihedral { n } => format!("D_{{{}}}", 2 * n),
            GroupSpec::Quasidihedral { n } => format!("QD_{{2^{}}}", n),
            GroupSpec::Metacyclic { p, q } => format!("M_{{2*{}*{}}}", p, q),
            GroupSpec::ProjectiveSpecialLinear { k } => format!("PSL(2,2^{})", k),
        }
    }

    pub fn params(&self) -> Vec<u64> {
        match *self {
            GroupSpec::GeneralizedQuaternion { n } => vec![n],
            GroupSpec::Dihedral { n } => vec![n],
            GroupSpec::Quasidihedral { n } => vec![n as u64],
            GroupSpec::Metacyclic { p, q } => vec![p, q],
            GroupSpec::ProjectiveSpecialLinear { k } => vec![k as u64],
        }
    }
}

/// Subset of group elements as a bitset over element indices.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ElementSubset {
    nbits: usize,
    blocks: Vec<u64>,
}

impl ElementSubset {
    pub fn empty(nbits: usize) -> Self {
        ElementSubset {
            nbits,
            blocks: vec![0; nbits.div_ceil(64)],
        }
    }

    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.nbits);
        self.blocks[i / 64] |= 1 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.nbits && self.blocks[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn cardinality(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn universe_size(&self) -> usize {
        self.nbits
    }

    /// Member indices in ascending order.
    pub fn members(&self) -> Vec<usize> {
        (0..self.nbits).filter(|&i| self.contains(i)).collect()
    }

    pub fn is_superset_of(&self, other: &ElementSubset) -> bool {
        self.blocks
            .iter()
            .zip(&other.blocks)
            .all(|(a, b)| a & b == *b)
    }
}

const EXHAUSTIVE_ASSOC_LIMIT: usize = 200;
const SAMPLED_ASSOC_TRIPLES: usize = 100_000;
const CAYLEY_TABLE_LIMIT: usize = 1024;

enum Model {
    // (i, e) = x^i y^e, index e*2n + i
    Quaternion { two_n: u64 },
    // (i, e) = x^i y^e, index e*n + i
    Dihedral { n: u64 },
    // (i, e) = a^i b^e, index e*half + i; b a b^{-1} = a^twist
    Quasidihedral { half: u64, twist: u64 },
    // (i, j) = a^i b^j, index j*p + i
    Metacyclic { p: u64, two_q: u64 },
    // 2x2 determinant-1 matrices [a, b, c, d] over GF(2^k)
    SpecialLinear {
        field: Gf2k,
        mats: Vec<[u16; 4]>,
        index: HashMap<[u16; 4], u32>,
    },
}

/// A finite group with Cayley-table semantics: elements are indices
/// 0..order-1, index 0 is the identity, multiplication is total.
pub struct FiniteGroup {
    spec: GroupSpec,
    order: usize,
    labels: Vec<String>,
    model: Model,
    cayley: Option<Vec<u32>>,
    inverses: Vec<u32>,
}

/// Constructs the group selected by `spec`, checks its defining relations,
/// and verifies the group axioms (associativity exhaustively up to order
/// 200, on 10^5 seeded random triples above that).
pub fn build_group(spec: GroupSpec) -> Result<FiniteGroup, GroupError> {
    spec.validate()?;
    let model = match spec {
        GroupSpec::GeneralizedQuaternion { n } => Model::Quaternion { two_n: 2 * n },
        GroupSpec::Dihedral { n } => Model::Dihedral { n },
        GroupSpec::Quasidihedral { n } => Model::Quasidihedral {
            half: 1u64 << (n - 1),
            twist: (1u64 << (n - 2)) - 1,
        },
        GroupSpec::Metacyclic { p, q } => Model::Metacyclic { p, two_q: 2 * q },
        GroupSpec::ProjectiveSpecialLinear { k } => build_sl2_model(k),
    };
    let order = spec.order() as usize;
    let labels = build_labels(&model, order);
    let mut group = FiniteGroup {
        spec,
        order,
        labels,
        model,
        cayley: None,
        inverses: Vec::new(),
    };
    if order <= CAYLEY_TABLE_LIMIT {
        let mut table = vec![0u32; order * order];
        for a in 0..order {
            for b in 0..order {
                table[a * order + b] = group.multiply_model(a, b) as u32;
            }
        }
        group.cayley = Some(table);
    }
    group.inverses = (0..order).map(|a| group.inverse_model(a) as u32).collect();
    group.check_relations();
    group.verify_axioms();
    Ok(group)
}

fn build_sl2_model(k: u32) -> Model {
    let field = Gf2k::new(k);
    let q = field.size();
    let mut mats = Vec::new();
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                for d in 0..q {
                    // char 2: det = ad - bc = ad + bc
                    if field.add(field.mul(a, d), field.mul(b, c)) == 1 {
                        mats.push([a as u16, b as u16, c as u16, d as u16]);
                    }
                }
            }
        }
    }
    mats.sort_unstable();
    let id_pos = mats
        .iter()
        .position(|m| *m == [1, 0, 0, 1])
        .expect("identity matrix has determinant 1");
    mats.swap(0, id_pos);
    let index = mats
        .iter()
        .enumerate()
        .map(|(i, m)| (*m, i as u32))
        .collect();
    Model::SpecialLinear { field, mats, index }
}

fn two_gen_label(first: &str, second: &str, i: u64, j: u64) -> String {
    let mut parts = Vec::new();
    match i {
        0 => {}
        1 => parts.push(first.to_string()),
        _ => parts.push(format!("{first}^{i}")),
    }
    match j {
        0 => {}
        1 => parts.push(second.to_string()),
        _ => parts.push(format!("{second}^{j}")),
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join(" ")
    }
}

fn build_labels(model: &Model, order: usize) -> Vec<String> {
    (0..order as u64)
        .map(|idx| match model {
            Model::Quaternion { two_n } => two_gen_label("x", "y", idx % two_n, idx / two_n),
            Model::Dihedral { n } => two_gen_label("x", "y", idx % n, idx / n),
            Model::Quasidihedral { half, .. } => two_gen_label("a", "b", idx % half, idx / half),
            Model::Metacyclic { p, .. } => two_gen_label("a", "b", idx % p, idx / p),
            Model::SpecialLinear { mats, .. } => {
                let m = mats[idx as usize];
                format!("[[{},{}],[{},{}]]", m[0], m[1], m[2], m[3])
            }
        })
        .collect()
}

impl FiniteGroup {
    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn multiply(&self, a: usize, b: usize) -> usize {
        match &self.cayley {
            Some(t) => t[a * self.order + b] as usize,
            None => self.multiply_model(a, b),
        }
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    pub fn power(&self, a: usize, mut e: u64) -> usize {
        let mut base = a;
        let mut r = 0;
        while e > 0 {
            if e & 1 == 1 {
                r = self.multiply(r, base);
            }
            base = self.multiply(base, base);
            e >>= 1;
        }
        r
    }

    fn multiply_model(&self, a: usize, b: usize) -> usize {
        match &self.model {
            Model::Quaternion { two_n } => {
                let m = *two_n;
                let n = m / 2;
                let (i, e) = (a as u64 % m, a as u64 / m);
                let (i2, e2) = (b as u64 % m, b as u64 / m);
                let (ri, re) = if e == 0 {
                    ((i + i2) % m, e2)
                } else if e2 == 0 {
                    ((i + m - i2) % m, 1)
                } else {
                    ((i + m - i2 + n) % m, 0)
                };
                (re * m + ri) as usize
            }
            Model::Dihedral { n } => {
                let n = *n;
                let (i, e) = (a as u64 % n, a as u64 / n);
                let (i2, e2) = (b as u64 % n, b as u64 / n);
                let ri = if e == 0 { (i + i2) % n } else { (i + n - i2) % n };
                ((e ^ e2) * n + ri) as usize
            }
            Model::Quasidihedral { half, twist } => {
                let h = *half;
                let (i, e) = (a as u64 % h, a as u64 / h);
                let (i2, e2) = (b as u64 % h, b as u64 / h);
                let ri = if e == 0 {
                    (i + i2) % h
                } else {
                    (i + twist * i2) % h
                };
                ((e ^ e2) * h + ri) as usize
            }
            Model::Metacyclic { p, two_q } => {
                let (i, j) = (a as u64 % p, a as u64 / p);
                let (i2, j2) = (b as u64 % p, b as u64 / p);
                let ri = if j % 2 == 0 {
                    (i + i2) % p
                } else {
                    (i + (p - i2) % p) % p
                };
                let rj = (j + j2) % two_q;
                (rj * p + ri) as usize
            }
            Model::SpecialLinear { field, mats, index } => {
                let x = mats[a];
                let y = mats[b];
                let f = |v: u16| v as u64;
                let prod = [
                    field.add(field.mul(f(x[0]), f(y[0])), field.mul(f(x[1]), f(y[2]))) as u16,
                    field.add(field.mul(f(x[0]), f(y[1])), field.mul(f(x[1]), f(y[3]))) as u16,
                    field.add(field.mul(f(x[2]), f(y[0])), field.mul(f(x[3]), f(y[2]))) as u16,
                    field.add(field.mul(f(x[2]), f(y[1])), field.mul(f(x[3]), f(y[3]))) as u16,
                ];
                index[&prod] as usize
            }
        }
    }

    fn inverse_model(&self, a: usize) -> usize {
        match &self.model {
            Model::Quaternion { two_n } => {
                let m = *two_n;
                let n = m / 2;
                let (i, e) = (a as u64 % m, a as u64 / m);
                if e == 0 {
                    ((m - i) % m) as usize
                } else {
                    (m + (i + n) % m) as usize
                }
            }
            Model::Dihedral { n } => {
                let n = *n;
                let (i, e) = (a as u64 % n, a as u64 / n);
                if e == 0 {
                    ((n - i) % n) as usize
                } else {
                    a
                }
            }
            Model::Quasidihedral { half, twist } => {
                let h = *half;
                let (i, e) = (a as u64 % h, a as u64 / h);
                if e == 0 {
                    ((h - i) % h) as usize
                } else {
                    // (i,1)^{-1} = (-twist*i, 1) since twist^2 = 1 mod half
                    (h + (h - (twist * i) % h) % h) as usize
                }
            }
            Model::Metacyclic { p, two_q } => {
                let (i, j) = (a as u64 % p, a as u64 / p);
                let rj = (two_q - j) % two_q;
                let ri = if j % 2 == 0 { (p - i) % p } else { i };
                (rj * p + ri) as usize
            }
            Model::SpecialLinear { mats, index, .. } => {
                // [[a,b],[c,d]]^{-1} = [[d,b],[c,a]] in characteristic 2
                let m = mats[a];
                index[&[m[3], m[1], m[2], m[0]]] as usize
            }
        }
    }

    fn check_relations(&self) {
        match self.spec {
            GroupSpec::GeneralizedQuaternion { n } => {
                let x = 1;
                let y = 2 * n as usize;
                assert_eq!(self.power(x, 2 * n), 0, "x^{{2n}} = 1");
                assert_eq!(self.power(x, n), self.multiply(y, y), "x^n = y^2");
                assert_eq!(
                    self.multiply(y, x),
                    self.multiply(self.inverse(x), y),
                    "yx = x^{{-1}}y"
                );
            }
            GroupSpec::Dihedral { n } => {
                let x = 1;
                let y = n as usize;
                assert_eq!(self.power(x, n), 0, "x^n = 1");
                assert_eq!(self.multiply(y, y), 0, "y^2 = 1");
                let conj = self.multiply(self.multiply(y, x), self.inverse(y));
                assert_eq!(conj, self.inverse(x), "yxy^{{-1}} = x^{{-1}}");
            }
            GroupSpec::Quasidihedral { n } => {
                let half = 1u64 << (n - 1);
                let a = 1;
                let b = half as usize;
                assert_eq!(self.power(a, half), 0, "a^{{2^{{n-1}}}} = 1");
                assert_eq!(self.multiply(b, b), 0, "b^2 = 1");
                let conj = self.multiply(self.multiply(b, a), self.inverse(b));
                assert_eq!(conj, self.power(a, (1 << (n - 2)) - 1), "bab^{{-1}} = a^{{2^{{n-2}}-1}}");
            }
            GroupSpec::Metacyclic { p, q } => {
                let a = 1;
                let b = p as usize;
                assert_eq!(self.power(a, p), 0, "a^p = 1");
                assert_eq!(self.power(b, 2 * q), 0, "b^{{2q}} = 1");
                let conj = self.multiply(self.multiply(b, a), self.inverse(b));
                assert_eq!(conj, self.inverse(a), "bab^{{-1}} = a^{{-1}}");
            }
            GroupSpec::ProjectiveSpecialLinear { k } => {
                let q = 1u128 << k;
                assert_eq!(self.order as u128, q * (q * q - 1), "order 2^k(2^{{2k}}-1)");
            }
        }
    }

    fn verify_axioms(&self) {
        let n = self.order;
        for a in 0..n {
            assert_eq!(self.multiply(0, a), a, "left identity");
            assert_eq!(self.multiply(a, 0), a, "right identity");
            assert_eq!(self.multiply(a, self.inverse(a)), 0, "right inverse");
            assert_eq!(self.multiply(self.inverse(a), a), 0, "left inverse");
        }
        let assoc = |a: usize, b: usize, c: usize| {
            self.multiply(self.multiply(a, b), c) == self.multiply(a, self.multiply(b, c))
        };
        if n <= EXHAUSTIVE_ASSOC_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        assert!(assoc(a, b, c), "associativity at ({a},{b},{c})");
                    }
                }
            }
        } else {
            let mut rng = StdRng::seed_from_u64(0x5bec5 ^ n as u64);
            for _ in 0..SAMPLED_ASSOC_TRIPLES {
                let a = rng.gen_range(0..n);
                let b = rng.gen_range(0..n);
                let c = rng.gen_range(0..n);
                assert!(assoc(a, b, c), "associativity at ({a},{b},{c})");
            }
        }
    }

    /// Z(G): elements commuting with everything, by exhaustive search.
    pub fn center(&self) -> ElementSubset {
        let mut z = ElementSubset::empty(self.order);
        for a in 0..self.order {
            if (0..self.order).all(|g| self.multiply(a, g) == self.multiply(g, a)) {
                z.insert(a);
            }
        }
        z
    }

    /// C_G(elem): everything commuting with `elem`.
    pub fn centralizer(&self, elem: usize) -> ElementSubset {
        assert!(elem < self.order, "element index out of range");
        let mut c = ElementSubset::empty(self.order);
        for h in 0..self.order {
            if self.multiply(h, elem) == self.multiply(elem, h) {
                c.insert(h);
            }
        }
        c
    }

    /// The distinct proper centralizers (centralizers of non-central
    /// elements), deduplicated by exact membership and sorted by
    /// (cardinality descending, member list ascending).
    pub fn proper_centralizers(&self) -> Result<Vec<ElementSubset>, GroupError> {
        let mut seen: HashSet<Vec<u64>> = HashSet::new();
        let mut out = Vec::new();
        for e in 0..self.order {
            let c = self.centralizer(e);
            if c.cardinality() == self.order {
                continue;
            }
            if seen.insert(c.blocks.clone()) {
                out.push(c);
            }
        }
        if out.is_empty() {
            return Err(GroupError::AbelianGroup);
        }
        out.sort_by(|a, b| {
            b.cardinality()
                .cmp(&a.cardinality())
                .then_with(|| a.members().cmp(&b.members()))
        });
        Ok(out)
    }

    /// True if `s` contains the identity and is closed under products and
    /// inverses.
    pub fn is_subgroup(&self, s: &ElementSubset) -> bool {
        if !s.contains(0) {
            return false;
        }
        let members = s.members();
        members.iter().all(|&a| {
            s.contains(self.inverse(a)) && members.iter().all(|&b| s.contains(self.multiply(a, b)))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: u64) -> FiniteGroup {
        build_group(GroupSpec::GeneralizedQuaternion { n }).unwrap()
    }

    fn d(n: u64) -> FiniteGroup {
        build_group(GroupSpec::Dihedral { n }).unwrap()
    }

    #[test]
    fn rejects_bad_params() {
        assert!(build_group(GroupSpec::GeneralizedQuaternion { n: 1 }).is_err());
        assert!(build_group(GroupSpec::Dihedral { n: 2 }).is_err());
        assert!(build_group(GroupSpec::Quasidihedral { n: 3 }).is_err());
        assert!(build_group(GroupSpec::Metacyclic { p: 2, q: 1 }).is_err());
        assert!(build_group(GroupSpec::ProjectiveSpecialLinear { k: 0 }).is_err());
    }

    #[test]
    fn quaternion_q8_center() {
        let g = q(2);
        assert_eq!(g.order(), 8);
        let z = g.center();
        // Z(Q_8) = {1, x^2}
        assert_eq!(z.members(), vec![0, 2]);
        assert_eq!(g.label(2), "x^2");
    }

    #[test]
    fn quaternion_center_is_one_and_xn() {
        let g = q(3);
        let z = g.center();
        assert_eq!(z.cardinality(), 2);
        assert!(z.contains(0) && z.contains(3)); // {1, x^3}
    }

    #[test]
    fn dihedral_relation_and_trivial_center() {
        let g = d(3);
        assert_eq!(g.order(), 6);
        let g5 = d(5);
        assert_eq!(g5.center().cardinality(), 1);
    }

    #[test]
    fn dihedral_even_center() {
        assert_eq!(d(6).center().cardinality(), 2);
        assert_eq!(d(8).center().cardinality(), 2);
    }

    #[test]
    fn quasidihedral_center() {
        for n in 4..=6 {
            let g = build_group(GroupSpec::Quasidihedral { n }).unwrap();
            assert_eq!(g.order(), 1 << n);
            assert_eq!(g.center().cardinality(), 2);
        }
    }

    #[test]
    fn psl_orders_and_centers() {
        let g1 = build_group(GroupSpec::ProjectiveSpecialLinear { k: 1 }).unwrap();
        assert_eq!(g1.order(), 6);
        assert_eq!(g1.center().cardinality(), 1);
        let g2 = build_group(GroupSpec::ProjectiveSpecialLinear { k: 2 }).unwrap();
        assert_eq!(g2.order(), 60);
        assert_eq!(g2.center().cardinality(), 1);
    }

    #[test]
    fn centralizer_of_y_in_q8() {
        let g = q(2);
        // y is index 4 = (0, 1); expect {1, x^2, y, x^2 y}
        let c = g.centralizer(4);
        assert_eq!(c.members(), vec![0, 2, 4, 6]);
    }

    #[test]
    fn centralizer_of_identity_is_whole_group() {
        let g = d(4);
        assert_eq!(g.centralizer(0).cardinality(), g.order());
    }

    #[test]
    fn centralizer_of_x_in_q12() {
        let g = q(3);
        let c = g.centralizer(1);
        assert_eq!(c.members(), vec![0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn proper_centralizers_q12() {
        let g = q(3);
        let cents = g.proper_centralizers().unwrap();
        let cards: Vec<usize> = cents.iter().map(|c| c.cardinality()).collect();
        assert_eq!(cards, vec![6, 4, 4, 4]);
    }

    #[test]
    fn proper_centralizers_psl_2_2() {
        let g = build_group(GroupSpec::ProjectiveSpecialLinear { k: 1 }).unwrap();
        let cents = g.proper_centralizers().unwrap();
        let cards: Vec<usize> = cents.iter().map(|c| c.cardinality()).collect();
        assert_eq!(cards, vec![3, 2, 2, 2]);
    }

    #[test]
    fn proper_centralizers_d10() {
        let g = d(5);
        let cents = g.proper_centralizers().unwrap();
        let cards: Vec<usize> = cents.iter().map(|c| c.cardinality()).collect();
        assert_eq!(cards, vec![5, 2, 2, 2, 2, 2]);
    }

    #[test]
    fn quaternion_centralizer_count_is_n_plus_1() {
        for n in 2..=10 {
            let g = q(n);
            assert_eq!(g.proper_centralizers().unwrap().len(), n as usize + 1);
        }
    }

    #[test]
    fn proper_centralizers_are_subgroups_containing_center() {
        for spec in [
            GroupSpec::GeneralizedQuaternion { n: 4 },
            GroupSpec::Dihedral { n: 6 },
            GroupSpec::Quasidihedral { n: 4 },
            GroupSpec::Metacyclic { p: 5, q: 2 },
            GroupSpec::ProjectiveSpecialLinear { k: 2 },
        ] {
            let g = build_group(spec).unwrap();
            let z = g.center();
            for c in g.proper_centralizers().unwrap() {
                assert!(c.cardinality() < g.order());
                assert!(g.is_subgroup(&c), "{:?}", spec);
                assert!(c.is_superset_of(&z), "{:?}", spec);
            }
        }
    }

    #[test]
    fn metacyclic_order_and_labels() {
        let g = build_group(GroupSpec::Metacyclic { p: 5, q: 3 }).unwrap();
        assert_eq!(g.order(), 30);
        assert_eq!(g.label(0), "1");
        assert_eq!(g.label(1), "a");
        assert_eq!(g.label(5), "b");
        assert_eq!(g.label(6), "a b");
        assert_eq!(g.label(11), "a b^2");
    }

    #[test]
    fn groups_and_subsets_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<FiniteGroup>();
        assert_send_sync::<ElementSubset>();
    }

    #[test]
    fn large_group_uses_sampled_associativity() {
        // order 256 exceeds the exhaustive limit; construction still checks
        let g = build_group(GroupSpec::Quasidihedral { n: 8 }).unwrap();
        assert_eq!(g.order(), 256);
    }
}
