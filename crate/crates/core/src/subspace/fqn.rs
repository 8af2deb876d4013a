//! F_{q^n}-subspaces of V(k, q^n) in canonical reduced row echelon form,
//! and an indexable enumeration of all subspaces of a given dimension.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{Elem, Field, FieldRef};
use crate::linalg;
use crate::numtheory::gaussian_binomial;

/// An F_{q^n}-subspace, stored as its unique RREF basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FqnSubspace {
    k: usize,
    rows: Vec<Vec<Elem>>,
    #[serde(skip)]
    pivots: Vec<usize>,
}

impl FqnSubspace {
    /// The span of `rows` in V(k, q^n).
    pub fn span(field: &Field, k: usize, rows: &[Vec<Elem>]) -> Result<FqnSubspace> {
        if let Some(r) = rows.iter().find(|r| r.len() != k) {
            return Err(Error::DimensionMismatch {
                expected: k,
                got: r.len(),
            });
        }
        let mut m = rows.to_vec();
        let pivots = linalg::rref(field, &mut m);
        Ok(FqnSubspace { k, rows: m, pivots })
    }

    pub fn zero(k: usize) -> FqnSubspace {
        FqnSubspace {
            k,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(k: usize) -> FqnSubspace {
        FqnSubspace {
            k,
            rows: linalg::identity(k),
            pivots: (0..k).collect(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.k
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Elem>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// k − d linear functionals whose common zero set is this subspace.
    ///
    /// For each non-pivot column c the functional is w_c = 1,
    /// w_{p_r} = −R[r][c]; returned sparsely as (c, [(p_r, −R[r][c])]).
    pub fn equations(&self, field: &Field) -> Vec<(usize, Vec<(usize, Elem)>)> {
        (0..self.k)
            .filter(|c| !self.pivots.contains(c))
            .map(|c| {
                let terms = self
                    .pivots
                    .iter()
                    .enumerate()
                    .filter(|(r, _)| !self.rows[*r][c].is_zero())
                    .map(|(r, &p)| (p, field.neg(self.rows[r][c])))
                    .collect();
                (c, terms)
            })
            .collect()
    }

    /// Dense form of [`FqnSubspace::equations`].
    pub fn annihilator(&self, field: &Field) -> Vec<Vec<Elem>> {
        self.equations(field)
            .into_iter()
            .map(|(c, terms)| {
                let mut w = vec![Elem::ZERO; self.k];
                w[c] = Elem::ONE;
                for (p, v) in terms {
                    w[p] = v;
                }
                w
            })
            .collect()
    }

    pub fn contains(&self, field: &Field, v: &[Elem]) -> bool {
        self.equations(field).iter().all(|(c, terms)| {
            terms
                .iter()
                .fold(v[*c], |acc, &(p, w)| field.add(acc, field.mul(w, v[p])))
                .is_zero()
        })
    }
}

/// All d-dimensional F_{q^n}-subspaces of V(k, q^n), addressable by index.
///
/// Subspaces are grouped by pivot profile (lexicographic order of pivot
/// sets); within a profile the free RREF entries are the base-Q digits of
/// the local index, Q = q^n.
#[derive(Clone, Debug)]
pub struct SubspaceEnumerator {
    field: FieldRef,
    k: usize,
    d: usize,
    profiles: Vec<Profile>,
    len: u128,
}

#[derive(Clone, Debug)]
struct Profile {
    pivots: Vec<usize>,
    /// (row, column) of each free entry.
    free: Vec<(usize, usize)>,
    start: u128,
    count: u128,
}

impl SubspaceEnumerator {
    pub fn new(field: &FieldRef, k: usize, d: usize) -> Result<SubspaceEnumerator> {
        if d > k {
            return Err(Error::InvalidParams(format!(
                "subspace dimension {d} exceeds ambient dimension {k}"
            )));
        }
        let order = field.order() as u128;
        let mut profiles = Vec::new();
        let mut start = 0u128;
        for pivots in combinations(k, d) {
            let mut free = Vec::new();
            for (r, &p) in pivots.iter().enumerate() {
                for c in p + 1..k {
                    if !pivots.contains(&c) {
                        free.push((r, c));
                    }
                }
            }
            let count = order
                .checked_pow(free.len() as u32)
                .ok_or(Error::TooLargeToExhaust {
                    needed: u128::MAX,
                    budget: u128::MAX,
                })?;
            profiles.push(Profile {
                pivots,
                free,
                start,
                count,
            });
            start = start.saturating_add(count);
        }
        debug_assert_eq!(start, gaussian_binomial(order, k, d));
        Ok(SubspaceEnumerator {
            field: field.clone(),
            k,
            d,
            profiles,
            len: start,
        })
    }

    pub fn len(&self) -> u128 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    /// The subspace with the given index, `idx < len()`.
    pub fn get(&self, idx: u128) -> FqnSubspace {
        let pi = self.profiles.partition_point(|p| p.start + p.count <= idx);
        let prof = &self.profiles[pi];
        let mut local = idx - prof.start;
        let order = self.field.order() as u128;
        let mut rows = vec![vec![Elem::ZERO; self.k]; self.d];
        for (r, &p) in prof.pivots.iter().enumerate() {
            rows[r][p] = Elem::ONE;
        }
        for &(r, c) in &prof.free {
            rows[r][c] = Elem((local % order) as u32);
            local /= order;
        }
        FqnSubspace {
            k: self.k,
            rows,
            pivots: prof.pivots.clone(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = FqnSubspace> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }
}

/// d-subsets of 0..k in lexicographic order.
fn combinations(k: usize, d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..d).collect();
    if d > k {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..d).rev().find(|&i| cur[i] < k - d + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..d {
            cur[j] = cur[j - 1] + 1;
        }
    }
}
