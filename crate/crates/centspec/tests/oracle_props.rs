//! Property tests tying the exact pipeline together: the modular
//! characteristic polynomial against an independent cofactor oracle, the
//! fraction-free determinant, extraction as an exact factorization, trace
//! identities, clique-union closed forms and quotient divisibility.

mod common;

use centspec::closed_forms::{multipartite_adj_charpoly, union_cliques_spectrum};
use centspec::graph::{CliqueDecomposition, Graph};
use centspec::matrix::{IntMatrix, MatrixKind};
use centspec::spectrum::{
    complement_laplacian_spectrum, extract_spectrum, quotient_matrix, PartitionShape,
};
use common::naive_charpoly;
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

fn small_matrix() -> impl Strategy<Value = IntMatrix> {
    (1usize..=5).prop_flat_map(|n| {
        proptest::collection::vec(-10i64..=10, n * n).prop_map(move |data| {
            IntMatrix::from_rows(
                &(0..n)
                    .map(|i| data[i * n..(i + 1) * n].to_vec())
                    .collect::<Vec<_>>(),
            )
        })
    })
}

fn part_sizes() -> impl Strategy<Value = Vec<u64>> {
    proptest::collection::vec(1u64..=6, 1..=5)
}

proptest! {
    #[test]
    fn charpoly_matches_cofactor_oracle(m in small_matrix()) {
        prop_assert_eq!(m.char_poly(), naive_charpoly(&m));
    }

    #[test]
    fn charpoly_constant_term_is_signed_determinant(m in small_matrix()) {
        let p = m.char_poly();
        let sign = if m.size() % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(p.coeff(0), m.determinant() * BigInt::from(sign));
    }

    #[test]
    fn extraction_is_exact_factorization(m in small_matrix()) {
        let p = m.char_poly();
        prop_assert_eq!(extract_spectrum(&p).to_polynomial(), p);
    }

    #[test]
    fn union_cliques_closed_form_matches_oracle(parts in part_sizes()) {
        let decomp = CliqueDecomposition::new(parts.clone());
        let g = Graph::union_of_cliques(&parts);
        for kind in MatrixKind::ALL {
            let m = IntMatrix::of_graph(&g, kind);
            let oracle = extract_spectrum(&m.char_poly());
            prop_assert_eq!(union_cliques_spectrum(&decomp, kind), oracle);
        }
    }

    #[test]
    fn multipartite_charpoly_matches_oracle(parts in part_sizes()) {
        let decomp = CliqueDecomposition::new(parts.clone());
        let g = Graph::complete_multipartite(&parts);
        let oracle = IntMatrix::of_graph(&g, MatrixKind::Adjacency).char_poly();
        prop_assert_eq!(multipartite_adj_charpoly(&decomp), oracle);
    }

    #[test]
    fn trace_identities_hold_for_multipartite(parts in part_sizes()) {
        let g = Graph::complete_multipartite(&parts);
        let twice_edges = BigInt::from(2 * g.edge_count() as u64);
        let a = extract_spectrum(&IntMatrix::of_graph(&g, MatrixKind::Adjacency).char_poly());
        let l = extract_spectrum(&IntMatrix::of_graph(&g, MatrixKind::Laplacian).char_poly());
        let q = extract_spectrum(
            &IntMatrix::of_graph(&g, MatrixKind::SignlessLaplacian).char_poly(),
        );
        prop_assert!(a.eigenvalue_sum().is_zero());
        prop_assert_eq!(a.eigenvalue_square_sum(), twice_edges.clone());
        prop_assert_eq!(l.eigenvalue_sum(), twice_edges.clone());
        prop_assert_eq!(q.eigenvalue_sum(), twice_edges);
    }

    #[test]
    fn complement_transfer_maps_union_to_multipartite(parts in part_sizes()) {
        let union = Graph::union_of_cliques(&parts);
        let multi = Graph::complete_multipartite(&parts);
        let n = union.order();
        let l_union = extract_spectrum(&IntMatrix::of_graph(&union, MatrixKind::Laplacian).char_poly());
        let l_multi = extract_spectrum(&IntMatrix::of_graph(&multi, MatrixKind::Laplacian).char_poly());
        prop_assert_eq!(complement_laplacian_spectrum(&l_union, n).unwrap(), l_multi);
    }

    #[test]
    fn quotient_charpoly_divides_full_charpoly(parts in part_sizes()) {
        for (shape, graph) in [
            (PartitionShape::CliqueUnion, Graph::union_of_cliques(&parts)),
            (PartitionShape::Multipartite, Graph::complete_multipartite(&parts)),
        ] {
            for kind in MatrixKind::ALL {
                let full = IntMatrix::of_graph(&graph, kind).char_poly();
                let quot = quotient_matrix(&parts, kind, shape).char_poly();
                let (_, rem) = full.div_rem_monic(&quot);
                prop_assert!(rem.is_zero(), "kind {:?} shape {:?}", kind, shape);
            }
        }
    }
}

#[test]
fn bipartite_star_l_equals_q_from_the_oracle() {
    for n in 1..=12u64 {
        let star = Graph::complete_multipartite(&[n, 1]);
        let l = extract_spectrum(&IntMatrix::of_graph(&star, MatrixKind::Laplacian).char_poly());
        let q = extract_spectrum(
            &IntMatrix::of_graph(&star, MatrixKind::SignlessLaplacian).char_poly(),
        );
        assert_eq!(l, q, "n={n}");
    }
}

#[test]
fn star_charpoly_frozen_values() {
    // A(K_{1,4}) = x^5 - 4x^3, computed by the independent cofactor oracle
    let star = Graph::complete_multipartite(&[4, 1]);
    let p = naive_charpoly(&IntMatrix::of_graph(&star, MatrixKind::Adjacency));
    assert_eq!(p, centspec::poly::IntPolynomial::from_i64(&[0, 0, 0, -4, 0, 1]));
}
