//! Closed-form spectra, characteristic polynomials, eigenvector families
//! and integrality conditions for the five group families.
//!
//! Everything here is a pure formula evaluator in the group parameters; the
//! independent computation lives in `matrix`/`spectrum`. Formula outputs are
//! normalized (duplicates merged, zero multiplicities dropped) so spectra
//! compare as canonical multisets even at boundary parameters where the
//! per-case formulas overlap.

use crate::graph::{psl_parts, CliqueDecomposition, GraphVariant};
use crate::group::{GroupError, GroupSpec};
use crate::matrix::{IntMatrix, MatrixKind};
use crate::poly::IntPolynomial;
use crate::spectrum::{
    extract_spectrum, quotient_matrix, ExactSpectrum, PartitionShape,
};
use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::One;

/// Spectrum of a disjoint union of cliques with the given part sizes.
pub fn union_cliques_spectrum(parts: &CliqueDecomposition, kind: MatrixKind) -> ExactSpectrum {
    let total = parts.total() as usize;
    let m = parts.part_count();
    let mut eigs: Vec<(BigInt, usize)> = Vec::new();
    match kind {
        MatrixKind::Adjacency => {
            eigs.push((BigInt::from(-1), total - m));
            for &p in parts.parts() {
                eigs.push((BigInt::from(p as i64 - 1), 1));
            }
        }
        MatrixKind::Laplacian => {
            eigs.push((BigInt::from(0), m));
            for &p in parts.parts() {
                eigs.push((BigInt::from(p), p as usize - 1));
            }
        }
        MatrixKind::SignlessLaplacian => {
            for &p in parts.parts() {
                eigs.push((BigInt::from(2 * (p as i64 - 1)), 1));
                if p >= 2 {
                    eigs.push((BigInt::from(p as i64 - 2), p as usize - 1));
                }
            }
        }
    }
    ExactSpectrum::from_parts(total, eigs, vec![])
}

/// Adjacency characteristic polynomial of the complete multipartite graph
/// K_{p_1,...,p_m}:
/// x^{P-m} [ prod_i (x + p_i) - sum_i p_i prod_{j != i} (x + p_j) ].
pub fn multipartite_adj_charpoly(parts: &CliqueDecomposition) -> IntPolynomial {
    let ps = parts.parts();
    let total = parts.total() as usize;
    let m = ps.len();
    let linear: Vec<IntPolynomial> = ps
        .iter()
        .map(|&p| IntPolynomial::new(vec![BigInt::from(p), BigInt::one()]))
        .collect();
    let mut prod = IntPolynomial::one();
    for l in &linear {
        prod = prod.mul(l);
    }
    let mut sum = IntPolynomial::zero();
    for i in 0..m {
        let mut term = IntPolynomial::monomial(BigInt::from(ps[i]), 0);
        for (j, l) in linear.iter().enumerate() {
            if j != i {
                term = term.mul(l);
            }
        }
        sum = sum.add(&term);
    }
    prod.sub(&sum)
        .mul(&IntPolynomial::monomial(BigInt::one(), total - m))
}

/// Spectrum of the star K_{1,n}. Adjacency: 0^{n-1} and +-sqrt(n) (exact
/// integers when n is a perfect square, the residual x^2 - n otherwise);
/// Laplacian and signless Laplacian coincide: {0, 1^{n-1}, n+1}.
pub fn star_spectrum(n: u64, kind: MatrixKind) -> ExactSpectrum {
    assert!(n >= 1);
    let dim = n as usize + 1;
    match kind {
        MatrixKind::Adjacency => {
            let mut eigs = vec![(BigInt::from(0), n as usize - 1)];
            let mut residuals = Vec::new();
            let r = n.sqrt();
            if r * r == n {
                eigs.push((BigInt::from(r), 1));
                eigs.push((BigInt::from(-(r as i64)), 1));
            } else {
                residuals.push((
                    IntPolynomial::new(vec![
                        BigInt::from(-(n as i64)),
                        BigInt::from(0),
                        BigInt::one(),
                    ]),
                    1,
                ));
            }
            ExactSpectrum::from_parts(dim, eigs, residuals)
        }
        MatrixKind::Laplacian | MatrixKind::SignlessLaplacian => ExactSpectrum::from_parts(
            dim,
            vec![
                (BigInt::from(0), 1),
                (BigInt::from(1), n as usize - 1),
                (BigInt::from(n + 1), 1),
            ],
            vec![],
        ),
    }
}

/// The signless Laplacian quotient matrix of the complete tripartite
/// co-centralizer graph of PSL(2,2^k), blocks in the conventional order
/// (2^k+1, 2^{k-1}(2^k+1), 2^{k-1}(2^k-1)).
pub fn psl_quotient_matrix(k: u32) -> IntMatrix {
    quotient_matrix(
        &psl_parts(k),
        MatrixKind::SignlessLaplacian,
        PartitionShape::Multipartite,
    )
}

/// Adjacency characteristic polynomial of the co-centralizer graph of
/// PSL(2,2^k):
/// x^{2^k + 2^{2k} - 2} (x^3 - (2^{4k-2} + 3*2^{2k-2} + 2^{3k}) x
///                           + (-2^{5k-1} - 2^{4k-1} + 2^{3k-1} + 2^{2k-1})).
pub fn psl_cocentralizer_adj_charpoly(k: u32) -> IntPolynomial {
    let two = BigInt::from(2);
    let pow = |e: u32| two.pow(e);
    let alpha = pow(4 * k - 2) + BigInt::from(3) * pow(2 * k - 2) + pow(3 * k);
    let beta = -pow(5 * k - 1) - pow(4 * k - 1) + pow(3 * k - 1) + pow(2 * k - 1);
    let cubic = IntPolynomial::new(vec![beta, -alpha, BigInt::from(0), BigInt::one()]);
    let zeros = (1usize << k) + (1usize << (2 * k)) - 2;
    cubic.mul(&IntPolynomial::monomial(BigInt::one(), zeros))
}

/// Clique size of the single non-trivial component for the star-shaped
/// families: n for Q_{4n}, n or n/2 by parity for D_{2n} (p for M_{2pq}),
/// 2^{n-2} for QD_{2^n}.
fn star_parameter(spec: GroupSpec) -> Option<u64> {
    match spec {
        GroupSpec::GeneralizedQuaternion { n } => Some(n),
        GroupSpec::Dihedral { n } => Some(if n % 2 == 1 { n } else { n / 2 }),
        GroupSpec::Metacyclic { p, .. } => Some(if p % 2 == 1 { p } else { p / 2 }),
        GroupSpec::Quasidihedral { n } => Some(1u64 << (n - 2)),
        GroupSpec::ProjectiveSpecialLinear { .. } => None,
    }
}

/// The claimed spectrum of the chosen graph and matrix for one group.
pub fn family_spectrum(
    spec: GroupSpec,
    variant: GraphVariant,
    kind: MatrixKind,
) -> Result<ExactSpectrum, GroupError> {
    spec.validate()?;
    if let Some(t) = star_parameter(spec) {
        return Ok(star_family_spectrum(t, variant, kind));
    }
    let GroupSpec::ProjectiveSpecialLinear { k } = spec else {
        unreachable!()
    };
    Ok(psl_family_spectrum(k, variant, kind))
}

/// Spectra of K_t u K_1 and of its complement K_{1,t}.
fn star_family_spectrum(t: u64, variant: GraphVariant, kind: MatrixKind) -> ExactSpectrum {
    let dim = t as usize + 1;
    let e = |v: i64, m: usize| (BigInt::from(v), m);
    match variant {
        GraphVariant::Centralizer => match kind {
            MatrixKind::Adjacency => ExactSpectrum::from_parts(
                dim,
                vec![e(-1, t as usize - 1), e(0, 1), e(t as i64 - 1, 1)],
                vec![],
            ),
            MatrixKind::Laplacian => ExactSpectrum::from_parts(
                dim,
                vec![e(0, 2), e(t as i64, t as usize - 1)],
                vec![],
            ),
            MatrixKind::SignlessLaplacian => ExactSpectrum::from_parts(
                dim,
                vec![
                    e(0, 1),
                    e(t as i64 - 2, t as usize - 1),
                    e(2 * (t as i64 - 1), 1),
                ],
                vec![],
            ),
        },
        GraphVariant::CoCentralizer => star_spectrum(t, kind),
    }
}

fn psl_family_spectrum(k: u32, variant: GraphVariant, kind: MatrixKind) -> ExactSpectrum {
    let q = 1u64 << k;
    let h = q / 2;
    let [b1, b2, b3] = psl_parts(k);
    let dim = (q * q + q + 1) as usize;
    let e = |v: u64, m: u64| (BigInt::from(v), m as usize);
    match (variant, kind) {
        (GraphVariant::Centralizer, MatrixKind::Adjacency) => ExactSpectrum::from_parts(
            dim,
            vec![
                (BigInt::from(-1), (q * q + q - 2) as usize),
                e(q, 1),
                e(b2 - 1, 1),
                e(b3 - 1, 1),
            ],
            vec![],
        ),
        (GraphVariant::Centralizer, MatrixKind::Laplacian) => ExactSpectrum::from_parts(
            dim,
            vec![e(0, 3), e(b1, q), e(b2, b2 - 1), e(b3, b3 - 1)],
            vec![],
        ),
        (GraphVariant::Centralizer, MatrixKind::SignlessLaplacian) => {
            // the six cases of the claimed signless Laplacian spectrum
            let mut eigs = vec![
                e(q - 1, q),
                e(b2 - 2, b2 - 1),
                e((q + 1) * (q - 2), 1),
                e(q * q + q - 2, 1),
                e(2 * q, 1),
            ];
            if b3 >= 2 {
                eigs.push(e(b3 - 2, b3 - 1));
            }
            ExactSpectrum::from_parts(dim, eigs, vec![])
        }
        (GraphVariant::CoCentralizer, MatrixKind::Adjacency) => {
            extract_spectrum(&psl_cocentralizer_adj_charpoly(k))
        }
        (GraphVariant::CoCentralizer, MatrixKind::Laplacian) => {
            let d2 = h + q * q / 2 + 1;
            let d3 = 3 * h + q * q / 2 + 1;
            ExactSpectrum::from_parts(
                dim,
                vec![
                    e(0, 1),
                    e(q * q, q),
                    e(d2, b2 - 1),
                    e(d3, b3 - 1),
                    e(q * q + q + 1, 2),
                ],
                vec![],
            )
        }
        (GraphVariant::CoCentralizer, MatrixKind::SignlessLaplacian) => {
            let d2 = h + q * q / 2 + 1;
            let d3 = 3 * h + q * q / 2 + 1;
            let eigs = vec![e(q * q, q), e(d2, b2 - 1), e(d3, b3 - 1)];
            let quotient_part = extract_spectrum(&psl_quotient_matrix(k).char_poly());
            let mut all = eigs;
            all.extend_from_slice(quotient_part.eigenvalues());
            ExactSpectrum::from_parts(dim, all, quotient_part.residual_factors().to_vec())
        }
    }
}

/// How a family of claimed eigenvectors acts: a plain eigenvalue, or the
/// equitable-quotient action M v_j = sum_i Q[i][j] v_i for block indicator
/// vectors spanning an invariant subspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyAction {
    Eigenvalue(i64),
    QuotientAction(IntMatrix),
}

/// A set of integer vectors with a claimed action and multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenvectorFamily {
    pub label: String,
    pub action: FamilyAction,
    pub vectors: Vec<Vec<i64>>,
    pub claimed_multiplicity: usize,
}

fn difference_vectors(dim: usize, offset: usize, block: usize) -> Vec<Vec<i64>> {
    (1..block)
        .map(|t| {
            let mut v = vec![0i64; dim];
            v[offset] = -1;
            v[offset + t] = 1;
            v
        })
        .collect()
}

fn indicator_vector(dim: usize, offset: usize, block: usize) -> Vec<i64> {
    let mut v = vec![0i64; dim];
    for x in v.iter_mut().skip(offset).take(block) {
        *x = 1;
    }
    v
}

/// The claimed eigenvector families for the signless Laplacian of the
/// PSL(2,2^k) centralizer graph (difference vectors per clique plus the
/// three clique indicators) or of its co-centralizer graph (difference
/// vectors per part plus the indicator triple carrying the quotient-matrix
/// action). Vectors live in the conventional block order.
pub fn psl_eigenbasis(
    k: u32,
    variant: GraphVariant,
) -> Result<Vec<EigenvectorFamily>, GroupError> {
    GroupSpec::ProjectiveSpecialLinear { k }.validate()?;
    let q = 1i64 << k;
    let [b1, b2, b3] = psl_parts(k);
    let (b1, b2, b3) = (b1 as usize, b2 as usize, b3 as usize);
    let dim = b1 + b2 + b3;
    let offsets = [0, b1, b1 + b2];
    let blocks = [b1, b2, b3];
    let mut families = Vec::new();
    let diff_eigs: [i64; 3] = match variant {
        // clique K_m contributes m - 2 on difference vectors of Q
        GraphVariant::Centralizer => [q - 1, b2 as i64 - 2, b3 as i64 - 2],
        // multipartite blocks contribute the block degree
        GraphVariant::CoCentralizer => {
            [q * q, (q * q + q) / 2 + 1, (q * q + 3 * q) / 2 + 1]
        }
    };
    let prefix = match variant {
        GraphVariant::Centralizer => "V",
        GraphVariant::CoCentralizer => "S",
    };
    for i in 0..3 {
        families.push(EigenvectorFamily {
            label: format!("{prefix}{}", i + 1),
            action: FamilyAction::Eigenvalue(diff_eigs[i]),
            vectors: difference_vectors(dim, offsets[i], blocks[i]),
            claimed_multiplicity: blocks[i] - 1,
        });
    }
    match variant {
        GraphVariant::Centralizer => {
            let ind_eigs = [2 * q, q * q + q - 2, (q + 1) * (q - 2)];
            for i in 0..3 {
                families.push(EigenvectorFamily {
                    label: format!("block{}_indicator", i + 1),
                    action: FamilyAction::Eigenvalue(ind_eigs[i]),
                    vectors: vec![indicator_vector(dim, offsets[i], blocks[i])],
                    claimed_multiplicity: 1,
                });
            }
        }
        GraphVariant::CoCentralizer => {
            let vectors = (0..3)
                .map(|i| indicator_vector(dim, offsets[i], blocks[i]))
                .collect();
            families.push(EigenvectorFamily {
                label: "block_indicators".to_string(),
                action: FamilyAction::QuotientAction(psl_quotient_matrix(k)),
                vectors,
                claimed_multiplicity: 3,
            });
        }
    }
    Ok(families)
}

/// A claimed integrality condition: unconditionally integral,
/// unconditionally not, or a condition on the parameters together with its
/// decided truth value.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(tag = "claim", rename_all = "snake_case")]
pub enum IntegralityClaim {
    Always,
    Never,
    Conditional { description: String, holds: bool },
}

impl IntegralityClaim {
    pub fn holds(&self) -> bool {
        match self {
            IntegralityClaim::Always => true,
            IntegralityClaim::Never => false,
            IntegralityClaim::Conditional { holds, .. } => *holds,
        }
    }
}

fn is_perfect_square(n: u64) -> bool {
    let r = n.sqrt();
    r * r == n
}

/// The claimed integrality condition for one (group, graph, matrix) choice.
pub fn integrality_claim(
    spec: GroupSpec,
    variant: GraphVariant,
    kind: MatrixKind,
) -> Result<IntegralityClaim, GroupError> {
    spec.validate()?;
    if variant == GraphVariant::Centralizer || kind != MatrixKind::Adjacency {
        if let (GroupSpec::ProjectiveSpecialLinear { k }, GraphVariant::CoCentralizer, MatrixKind::SignlessLaplacian) =
            (spec, variant, kind)
        {
            let quotient_spectrum = extract_spectrum(&psl_quotient_matrix(k).char_poly());
            return Ok(IntegralityClaim::Conditional {
                description: "quotient matrix has integral spectrum".to_string(),
                holds: quotient_spectrum.is_integral(),
            });
        }
        return Ok(IntegralityClaim::Always);
    }
    // co-centralizer adjacency
    let claim = match spec {
        GroupSpec::ProjectiveSpecialLinear { k } => {
            let cubic_spectrum = extract_spectrum(&psl_cocentralizer_adj_charpoly(k));
            IntegralityClaim::Conditional {
                description: "adjacency cubic splits over the integers".to_string(),
                holds: cubic_spectrum.is_integral(),
            }
        }
        GroupSpec::Quasidihedral { n } => IntegralityClaim::Conditional {
            description: format!("2^{} is a perfect square", n - 2),
            holds: (n - 2) % 2 == 0,
        },
        _ => {
            let t = star_parameter(spec).expect("star families");
            IntegralityClaim::Conditional {
                description: format!("{t} is a perfect square"),
                holds: is_perfect_square(t),
            }
        }
    };
    Ok(claim)
}
