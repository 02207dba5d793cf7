//! Bitmask blades over the canonical orthonormal frame `u_1, ..., u_n`.
//!
//! Bit `i` of a mask is set when `u_{i+1}` is a factor. The canonical blade
//! for a mask lists its factors in ascending index order. Within one grade,
//! blades are enumerated in lexicographic order of their index tuples, which
//! is the row/column order used by every (p,q)-extensor matrix.

use std::sync::OnceLock;

use itertools::Itertools;

use crate::MAX_DIM;

pub type Mask = u32;

#[inline]
pub fn grade(mask: Mask) -> usize {
    mask.count_ones() as usize
}

/// Sign picked up when the product `u_A u_B` is brought to canonical order:
/// `(-1)^s` where `s` counts pairs `(i in A, j in B)` with `i > j`.
#[inline]
pub fn reorder_sign(a: Mask, b: Mask) -> f64 {
    let mut a = a >> 1;
    let mut swaps = 0;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    if swaps & 1 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Mask of the blade with the given 1-based indices (order ignored).
pub fn mask_of(indices: &[usize]) -> Mask {
    indices.iter().fold(0, |m, &i| m | (1 << (i - 1)))
}

/// 1-based ascending indices of a mask.
pub fn indices_of(mask: Mask) -> Vec<usize> {
    (0..32)
        .filter(|i| mask & (1 << i) != 0)
        .map(|i| i + 1)
        .collect()
}

#[inline]
pub fn pseudoscalar_mask(dim: usize) -> Mask {
    ((1u64 << dim) - 1) as Mask
}

/// Per-dimension lookup tables: blades of each grade in lexicographic order
/// and the position of every mask inside its grade.
#[derive(Debug)]
pub struct BladeTable {
    by_grade: Vec<Vec<Mask>>,
    position: Vec<usize>,
}

impl BladeTable {
    fn build(dim: usize) -> Self {
        let mut position = vec![0; 1 << dim];
        let by_grade: Vec<Vec<Mask>> = (0..=dim)
            .map(|k| {
                (0..dim)
                    .combinations(k)
                    .map(|c| c.iter().fold(0, |m, &i| m | (1 << i)))
                    .collect()
            })
            .collect();
        for masks in &by_grade {
            for (pos, &m) in masks.iter().enumerate() {
                position[m as usize] = pos;
            }
        }
        BladeTable { by_grade, position }
    }

    pub fn of_grade(&self, k: usize) -> &[Mask] {
        &self.by_grade[k]
    }

    pub fn position(&self, mask: Mask) -> usize {
        self.position[mask as usize]
    }
}

/// Shared table for dimension `dim` (1 ≤ dim ≤ 12).
pub fn table(dim: usize) -> &'static BladeTable {
    static TABLES: [OnceLock<BladeTable>; MAX_DIM + 1] = [const { OnceLock::new() }; MAX_DIM + 1];
    assert!(dim <= MAX_DIM, "dimension {dim} exceeds {MAX_DIM}");
    TABLES[dim].get_or_init(|| BladeTable::build(dim))
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    // Sign of the permutation sorting the concatenation of A's and B's
    // indices, counted by bubble sort.
    fn brute_sign(a: Mask, b: Mask) -> f64 {
        let mut seq: Vec<usize> = indices_of(a);
        seq.extend(indices_of(b));
        let mut sign = 1.0;
        for i in 0..seq.len() {
            for j in 0..seq.len() - 1 - i {
                if seq[j] > seq[j + 1] {
                    seq.swap(j, j + 1);
                    sign = -sign;
                }
            }
        }
        sign
    }

    #[test]
    fn reorder_sign_matches_bubble_sort() {
        for a in 0..32 {
            for b in 0..32 {
                if a & b == 0 {
                    assert_eq!(reorder_sign(a, b), brute_sign(a, b), "{a} {b}");
                }
            }
        }
    }

    #[test]
    fn lexicographic_grade_order() {
        let t = table(4);
        let g2: Vec<Vec<usize>> = t.of_grade(2).iter().map(|&m| indices_of(m)).collect();
        assert_eq!(
            g2,
            vec![
                vec![1, 2],
                vec![1, 3],
                vec![1, 4],
                vec![2, 3],
                vec![2, 4],
                vec![3, 4]
            ]
        );
        for k in 0..=4 {
            assert_eq!(t.of_grade(k).len(), binomial(4, k));
            for (i, &m) in t.of_grade(k).iter().enumerate() {
                assert_eq!(t.position(m), i);
            }
        }
    }

    #[test]
    fn masks_and_indices() {
        assert_eq!(mask_of(&[1, 3]), 0b101);
        assert_eq!(indices_of(0b1010), vec![2, 4]);
        assert_eq!(pseudoscalar_mask(3), 0b111);
        assert_eq!(binomial(12, 6), 924);
    }
}
