use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_integer::Integer;
use pachner_core::demo;
use pachner_core::invariants::{betti_numbers, f_vector, homology, smith_invariants, SparseMatrix};
use pachner_core::moves::{apply_bistellar, enumerate_moves};
use pachner_core::stark::cone_extend;
use pachner_core::walk::{random_walk, seeded_rng};
use pachner_core::{Complex, Simplex};
use proptest::prelude::*;

fn arb_complex(max_vertex: u32, max_size: usize) -> impl Strategy<Value = Complex> {
    prop::collection::vec(prop::collection::btree_set(1..=max_vertex, 1..=max_size), 1..6).prop_map(|sets| {
        Complex::from_facets(sets.into_iter().map(|s| Simplex::new(s).unwrap()))
    })
}

/// Generating polynomial `sum_i f_{i-1} t^i` including the empty face.
fn f_poly(k: &Complex) -> Vec<u64> {
    let mut p = vec![1u64];
    p.extend(f_vector(k).into_iter().map(|x| x as u64));
    p
}

fn poly_mul(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn det(m: &[Vec<i64>]) -> i64 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> =
                    m[1..].iter().map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, v)| *v).collect()).collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * det(&minor)
            })
            .sum(),
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Determinantal divisors `d_i = gcd of the i x i minors`; the invariant
/// factors are `d_i / d_{i-1}`.
fn invariant_factors_by_minors(m: &[Vec<i64>]) -> Vec<u64> {
    let (r, c) = (m.len(), m[0].len());
    let mut divisors = vec![1u64];
    for k in 1..=r.min(c) {
        let mut g = 0u64;
        for rows in subsets(r, k) {
            for cols in subsets(c, k) {
                let minor: Vec<Vec<i64>> = rows.iter().map(|&i| cols.iter().map(|&j| m[i][j]).collect()).collect();
                g = g.gcd(&det(&minor).unsigned_abs());
            }
        }
        if g == 0 {
            break;
        }
        divisors.push(g);
    }
    divisors.windows(2).map(|w| w[1] / w[0]).collect()
}

proptest! {
    #[test]
    fn closure_is_idempotent(k in arb_complex(7, 4)) {
        let again = Complex::from_facets(k.simplices().iter().cloned());
        prop_assert_eq!(&again, &k);
        prop_assert_eq!(again.simplices(), k.simplices());
    }

    #[test]
    fn star_is_join_of_closure_and_link(k in arb_complex(7, 4), pick in 0usize..64) {
        let all: Vec<&Simplex> = k.simplices().iter().collect();
        let a = all[pick % all.len()];
        let link = k.link(a).unwrap();
        let joined = Complex::simplex(a).join(&link).unwrap();
        prop_assert_eq!(k.star(a).unwrap(), joined);
    }

    #[test]
    fn join_multiplies_face_polynomials(k in arb_complex(5, 3), l in arb_complex(5, 3)) {
        let l = l.relabel(|v| v + 10).unwrap();
        let j = k.join(&l).unwrap();
        prop_assert_eq!(f_poly(&j), poly_mul(&f_poly(&k), &f_poly(&l)));
    }

    #[test]
    fn suspension_shifts_reduced_betti_numbers(k in arb_complex(6, 3)) {
        let s = k.suspension(20, 21).unwrap();
        let reduced = |mut b: Vec<usize>| { b[0] -= 1; b };
        let bk = reduced(betti_numbers(&k));
        let bs = reduced(betti_numbers(&s));
        prop_assert_eq!(bs[0], 0);
        prop_assert_eq!(&bs[1..], &bk[..]);
    }

    #[test]
    fn smith_form_matches_determinantal_divisors(rows in prop::collection::vec(prop::collection::vec(-6i64..=6, 3), 1..=4)) {
        let expected: Vec<u64> = invariant_factors_by_minors(&rows);
        let summary = smith_invariants(SparseMatrix::from_dense(&rows));
        prop_assert_eq!(summary.rank, expected.len());
        let torsion: Vec<BigUint> = expected.iter().filter(|&&d| d > 1).map(|&d| BigUint::from(d)).collect();
        prop_assert_eq!(summary.torsion, torsion);
    }

    #[test]
    fn moves_are_involutions_on_walks(seed in 0u64..1000, n in 2usize..=3) {
        let (k, _) = random_walk(&demo::sphere_boundary(n), &Complex::empty(), 6, &mut seeded_rng(seed)).unwrap();
        for m in enumerate_moves(&k, &Complex::empty()).unwrap() {
            let there = apply_bistellar(&k, &m).unwrap();
            prop_assert_eq!(apply_bistellar(&there, &m.inverse()).unwrap(), k.clone());
            prop_assert_eq!(homology(&there), homology(&k));
        }
    }

    #[test]
    fn cone_extension_restricts_to_the_base(cuts in prop::collection::btree_set(10u32..20, 0..4)) {
        // edge 1-2 subdivided at the chosen interior points
        let mut path: Vec<u32> = vec![1];
        path.extend(cuts.iter().copied());
        path.push(2);
        let t = Complex::from_lists(path.windows(2).map(|w| w.to_vec())).unwrap();
        let knot = demo::knot_model();
        let n = &knot.neighborhoods[0];
        let ext = cone_extend(&t, n).unwrap();
        let base: BTreeSet<u32> = t.vertices().into_iter().collect();
        prop_assert_eq!(ext.induced(&base), t.clone());
        prop_assert_eq!(ext.num_facets(), 4 * t.num_facets());
        prop_assert_eq!(cone_extend(&t, n).unwrap(), ext);
    }
}
