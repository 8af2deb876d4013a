//! Dense Gaussian elimination over a [`Field`], plus a bit-packed path for
//! matrices over F_2.
//!
//! Matrices are row-major `Vec<Vec<Elem>>`. The same routines serve F_q
//! matrices: their entries are F_q elements of the big field, and F_q is
//! closed under the field operations.

use crate::gf::{Elem, Field};

pub type Mat = Vec<Vec<Elem>>;

/// Reduces `m` in place to reduced row echelon form, drops zero rows and
/// returns the pivot columns.
pub fn rref(f: &Field, m: &mut Mat) -> Vec<usize> {
    let ncols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == m.len() {
            break;
        }
        let Some(sel) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, sel);
        let inv = f.inv(m[row][col]);
        if inv != Elem::ONE {
            for x in m[row][col..].iter_mut() {
                *x = f.mul(*x, inv);
            }
        }
        let pivot_row = m[row].clone();
        for (r, other) in m.iter_mut().enumerate() {
            if r == row {
                continue;
            }
            let c = other[col];
            if c.is_zero() {
                continue;
            }
            for (x, &p) in other[col..].iter_mut().zip(&pivot_row[col..]) {
                *x = f.sub(*x, f.mul(c, p));
            }
        }
        pivots.push(col);
        row += 1;
    }
    m.truncate(row);
    pivots
}

pub fn rank(f: &Field, m: &[Vec<Elem>]) -> usize {
    let mut m = m.to_vec();
    rref(f, &mut m).len()
}

/// Basis of the right kernel {x : m·x = 0}, for a matrix with `ncols` columns.
pub fn kernel(f: &Field, m: &[Vec<Elem>], ncols: usize) -> Mat {
    let mut r = m.to_vec();
    let pivots = rref(f, &mut r);
    let mut is_pivot = vec![None; ncols];
    for (i, &c) in pivots.iter().enumerate() {
        is_pivot[c] = Some(i);
    }
    let mut out = Vec::new();
    for free in (0..ncols).filter(|&c| is_pivot[c].is_none()) {
        let mut v = vec![Elem::ZERO; ncols];
        v[free] = Elem::ONE;
        for (i, &c) in pivots.iter().enumerate() {
            v[c] = f.neg(r[i][free]);
        }
        out.push(v);
    }
    out
}

/// Inverse of a square matrix, or `None` if it is singular.
pub fn invert(f: &Field, m: &[Vec<Elem>]) -> Option<Mat> {
    let n = m.len();
    let mut aug: Mat = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Elem::ONE } else { Elem::ZERO }));
            r
        })
        .collect();
    let pivots = rref(f, &mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_mul(f: &Field, a: &[Vec<Elem>], b: &[Vec<Elem>]) -> Mat {
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .fold(Elem::ZERO, |acc, (&x, brow)| f.add(acc, f.mul(x, brow[j])))
                })
                .collect()
        })
        .collect()
}

pub fn transpose(m: &[Vec<Elem>]) -> Mat {
    let cols = m.first().map_or(0, |r| r.len());
    (0..cols)
        .map(|j| m.iter().map(|r| r[j]).collect())
        .collect()
}

pub fn identity(n: usize) -> Mat {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Elem::ONE } else { Elem::ZERO })
                .collect()
        })
        .collect()
}

pub fn determinant(f: &Field, m: &[Vec<Elem>]) -> Elem {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = Elem::ONE;
    for col in 0..n {
        let Some(sel) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Elem::ZERO;
        };
        if sel != col {
            a.swap(sel, col);
            det = f.neg(det);
        }
        det = f.mul(det, a[col][col]);
        let inv = f.inv(a[col][col]);
        for r in col + 1..n {
            let c = f.mul(a[r][col], inv);
            if c.is_zero() {
                continue;
            }
            let (top, bottom) = a.split_at_mut(r);
            for (x, &y) in bottom[0][col..n].iter_mut().zip(&top[col][col..n]) {
                *x = f.sub(*x, f.mul(c, y));
            }
        }
    }
    det
}

// ---- F_q-ranks of elements of F_{q^n} ------------------------------------

/// F_q-coordinate matrix of vectors in V(k, q^n): one row of length k·n per vector.
pub fn fq_expand(f: &Field, vecs: &[Vec<Elem>]) -> Mat {
    vecs.iter()
        .map(|v| {
            let mut row = Vec::with_capacity(v.len() * f.n() as usize);
            for &x in v {
                f.push_fq_coords(x, &mut row);
            }
            row
        })
        .collect()
}

/// Packs a vector of V(k, 2^n) (binary prime field only) into bits k·n wide.
#[inline]
pub fn pack_bits(f: &Field, v: &[Elem]) -> u128 {
    let n = f.n();
    v.iter()
        .enumerate()
        .fold(0u128, |acc, (i, x)| acc | ((x.0 as u128) << (i as u32 * n)))
}

/// dim_{F_q} of the F_q-span of vectors in V(k, q^n).
pub fn fq_rank_vectors(f: &Field, vecs: &[Vec<Elem>]) -> usize {
    let width = vecs.first().map_or(0, |v| v.len()) * f.n() as usize;
    if f.is_binary_prime() {
        if width <= 128 {
            let rows: Vec<u128> = vecs.iter().map(|v| pack_bits(f, v)).collect();
            return rank_u128(&rows);
        }
        let rows = vecs
            .iter()
            .map(|v| {
                let mut b = BitVec::zeros(width);
                for (i, x) in v.iter().enumerate() {
                    for j in 0..f.n() as usize {
                        if (x.0 >> j) & 1 == 1 {
                            b.set(i * f.n() as usize + j);
                        }
                    }
                }
                b
            })
            .collect();
        return rank_f2(rows);
    }
    rank(f, &fq_expand(f, vecs))
}

/// dim_{F_q} of the F_q-span of a list of elements of F_{q^n}.
pub fn fq_rank_elems(f: &Field, xs: &[Elem]) -> usize {
    if f.is_binary_prime() {
        let rows: Vec<u128> = xs.iter().map(|x| x.0 as u128).collect();
        return rank_u128(&rows);
    }
    let rows: Mat = xs.iter().map(|&x| f.fq_coords(x)).collect();
    rank(f, &rows)
}

// ---- F_2 ----------------------------------------------------------------

/// A set of vectors over F_2 of a fixed length, packed into 64-bit words.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitVec {
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            words: vec![0; len.div_ceil(64).max(1)],
        }
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    #[inline]
    pub fn xor_assign(&mut self, other: &BitVec) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn lowest_set(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }
}

/// Rank over F_2 of a list of packed vectors (consumed).
pub fn rank_f2(mut rows: Vec<BitVec>) -> usize {
    let mut basis: Vec<(usize, BitVec)> = Vec::new();
    for mut r in rows.drain(..) {
        for (p, b) in &basis {
            if r.get(*p) {
                r.xor_assign(b);
            }
        }
        if let Some(p) = r.lowest_set() {
            basis.push((p, r));
        }
    }
    basis.len()
}

/// Rank over F_2 of vectors of at most 128 bits.
#[inline]
pub fn rank_u128(rows: &[u128]) -> usize {
    let mut basis = [0u128; 128];
    let mut count = 0;
    for &row in rows {
        let mut r = row;
        for &b in &basis[..count] {
            // each stored vector is keyed by its highest bit
            r = r.min(r ^ b);
        }
        if r != 0 {
            basis[count] = r;
            count += 1;
            basis[..count].sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;

    #[test]
    fn inverse_round_trip() {
        let f = Field::new(3, 1, 2).unwrap();
        let m = vec![
            vec![f.gen_pow(1), f.gen_pow(3), Elem::ONE],
            vec![Elem::ZERO, f.gen_pow(2), f.gen_pow(5)],
            vec![f.gen_pow(7), Elem::ZERO, f.gen_pow(4)],
        ];
        let inv = invert(&f, &m).unwrap();
        assert_eq!(mat_mul(&f, &m, &inv), identity(3));
        assert_ne!(determinant(&f, &m), Elem::ZERO);
    }

    #[test]
    fn singular_matrix_has_kernel() {
        let f = Field::new(2, 1, 4).unwrap();
        let a = f.gen_pow(3);
        let m = vec![vec![Elem::ONE, a], vec![a, f.mul(a, a)]];
        assert!(invert(&f, &m).is_none());
        assert_eq!(determinant(&f, &m), Elem::ZERO);
        let k = kernel(&f, &m, 2);
        assert_eq!(k.len(), 1);
        for row in &m {
            let dot = f.add(f.mul(row[0], k[0][0]), f.mul(row[1], k[0][1]));
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn f2_ranks_agree_with_generic() {
        use rand::{Rng, SeedableRng};
        let f = Field::new(2, 1, 1).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let rows = rng.gen_range(1..12);
            let cols = rng.gen_range(1..100);
            let dense: Mat = (0..rows)
                .map(|_| (0..cols).map(|_| Elem(rng.gen_range(0..2))).collect())
                .collect();
            let packed: Vec<BitVec> = dense
                .iter()
                .map(|r| {
                    let mut b = BitVec::zeros(cols);
                    for (i, x) in r.iter().enumerate() {
                        if x.0 == 1 {
                            b.set(i);
                        }
                    }
                    b
                })
                .collect();
            let expected = rank(&f, &dense);
            assert_eq!(rank_f2(packed), expected);
            if cols <= 128 {
                let small: Vec<u128> = dense
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .fold(0u128, |acc, (i, x)| acc | ((x.0 as u128) << i))
                    })
                    .collect();
                assert_eq!(rank_u128(&small), expected);
            }
        }
    }
}
