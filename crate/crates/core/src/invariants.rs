//! f-vectors, Euler characteristic and integral simplicial homology.
//!
//! Homology is unreduced: `H_0` has rank equal to the number of connected
//! components. Ranks and torsion come from an exact Smith normal form of the
//! boundary matrices.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;

use crate::complex::Complex;
use crate::simplex::Simplex;

mod snf;

pub use snf::{smith_invariants, SmithSummary, SparseMatrix};

/// `(f_0, ..., f_dim)`; empty for the empty complex.
pub fn f_vector(k: &Complex) -> Vec<usize> {
    let Some(n) = k.dim() else { return Vec::new() };
    let mut f = alloc::vec![0usize; n + 1];
    for s in k.simplices() {
        f[s.dim()] += 1;
    }
    f
}

pub fn euler_characteristic(k: &Complex) -> i64 {
    f_vector(k)
        .iter()
        .enumerate()
        .map(|(i, &c)| if i % 2 == 0 { c as i64 } else { -(c as i64) })
        .sum()
}

/// One integral homology group `Z^betti + Z/t_1 + ... + Z/t_r` with
/// `t_1 | t_2 | ... | t_r` and every `t_i >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomologyGroup {
    pub betti: usize,
    pub torsion: Vec<BigUint>,
}

impl HomologyGroup {
    pub fn free(betti: usize) -> Self {
        HomologyGroup { betti, torsion: Vec::new() }
    }

    pub fn is_trivial(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut first = true;
        if self.betti > 0 {
            first = false;
            if self.betti == 1 {
                f.write_str("Z")?;
            } else {
                write!(f, "Z^{}", self.betti)?;
            }
        }
        for t in &self.torsion {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "Z/{t}")?;
        }
        Ok(())
    }
}

/// Boundary matrices `d_1, ..., d_dim` with rows indexed by the sorted
/// `(k-1)`-simplices and columns by the sorted `k`-simplices.
pub fn boundary_matrices(k: &Complex) -> Vec<SparseMatrix> {
    let Some(n) = k.dim() else { return Vec::new() };
    let by_dim: Vec<Vec<Simplex>> = (0..=n).map(|d| k.simplices_of_dim(d)).collect();
    let index: Vec<BTreeMap<&Simplex, usize>> =
        by_dim.iter().map(|v| v.iter().enumerate().map(|(i, s)| (s, i)).collect()).collect();
    (1..=n)
        .map(|d| {
            let mut cols = Vec::with_capacity(by_dim[d].len());
            for s in &by_dim[d] {
                let mut col: Vec<(usize, i64)> = s
                    .boundary_faces()
                    .enumerate()
                    .map(|(i, face)| (index[d - 1][&face], if i % 2 == 0 { 1 } else { -1 }))
                    .collect();
                col.sort_unstable();
                cols.push(col);
            }
            SparseMatrix::from_columns(by_dim[d - 1].len(), cols)
        })
        .collect()
}

/// True when every composite `d_k . d_{k+1}` vanishes.
pub fn boundary_squares_vanish(mats: &[SparseMatrix]) -> bool {
    mats.windows(2).all(|w| w[0].mul(&w[1]).is_zero())
}

/// `H_0, ..., H_dim` over the integers.
pub fn homology(k: &Complex) -> Vec<HomologyGroup> {
    let f = f_vector(k);
    if f.is_empty() {
        return Vec::new();
    }
    let mats = boundary_matrices(k);
    debug_assert!(boundary_squares_vanish(&mats));
    let reductions: Vec<SmithSummary> = mats.into_iter().map(smith_invariants).collect();
    // rank of d_d for d = 0..=n+1, with d_0 = d_{n+1} = 0
    let rank = |d: usize| if d == 0 || d > reductions.len() { 0 } else { reductions[d - 1].rank };
    let groups: Vec<HomologyGroup> = (0..f.len())
        .map(|d| HomologyGroup {
            betti: f[d] - rank(d) - rank(d + 1),
            torsion: if d < reductions.len() { reductions[d].torsion.clone() } else { Vec::new() },
        })
        .collect();
    debug_assert_eq!(
        groups.iter().enumerate().map(|(i, g)| if i % 2 == 0 { g.betti as i64 } else { -(g.betti as i64) }).sum::<i64>(),
        euler_characteristic(k)
    );
    groups
}

pub fn betti_numbers(k: &Complex) -> Vec<usize> {
    homology(k).into_iter().map(|g| g.betti).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::demo;
    use alloc::vec;

    fn z() -> HomologyGroup {
        HomologyGroup::free(1)
    }

    #[test]
    fn f_vectors_and_euler() {
        assert_eq!(f_vector(&demo::sphere_boundary(2)), vec![4, 6, 4]);
        assert_eq!(f_vector(&demo::bipyramid()), vec![5, 9, 6]);
        assert!(f_vector(&Complex::empty()).is_empty());
        assert_eq!(euler_characteristic(&demo::sphere_boundary(2)), 2);
        assert_eq!(euler_characteristic(&demo::sphere_boundary(3)), 0);
        assert_eq!(f_vector(&demo::torus7()), vec![7, 21, 14]);
        assert_eq!(euler_characteristic(&demo::torus7()), 0);
    }

    #[test]
    fn homology_examples() {
        assert_eq!(homology(&demo::sphere_boundary(2)), vec![z(), HomologyGroup::free(0), z()]);
        assert_eq!(homology(&demo::torus7()), vec![z(), HomologyGroup::free(2), z()]);
        let two = HomologyGroup { betti: 0, torsion: vec![BigUint::from(2u32)] };
        assert_eq!(homology(&demo::rp2_6()), vec![z(), two, HomologyGroup::free(0)]);
        assert_eq!(homology(&demo::sphere_boundary(3)).last(), Some(&z()));
    }

    #[test]
    fn boundary_of_boundary_vanishes() {
        for k in [demo::torus7(), demo::rp2_6(), demo::sphere_boundary(4)] {
            assert!(boundary_squares_vanish(&boundary_matrices(&k)));
        }
    }

    #[test]
    fn components_counted_in_h0() {
        let two = Complex::from_lists([vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(homology(&two)[0], HomologyGroup::free(2));
    }

    #[test]
    fn display() {
        let g = HomologyGroup { betti: 2, torsion: vec![BigUint::from(2u32)] };
        assert_eq!(alloc::format!("{g}"), "Z^2 + Z/2");
        assert_eq!(alloc::format!("{}", HomologyGroup::free(0)), "0");
    }
}
