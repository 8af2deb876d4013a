//! F_q-subspaces of V(k, q^n): construction from polynomial tuples,
//! intersections with F_{q^n}-subspaces, scatteredness and evasiveness
//! verdicts, direct sums, indecomposability and ordinary duality.

mod duality;
mod fqn;

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Budget, Error, Result};
use crate::gf::{Elem, Field, FieldRef};
use crate::linalg::{self, Mat};
use crate::linpoly::LinPoly;

pub use duality::{duality_weight_identity_check, ordinary_dual, polar_complement, polar_form};
pub use fqn::{FqnSubspace, SubspaceEnumerator};

/// A polynomial description of a subspace: U = {(F_1(x̄), …, F_k(x̄))}.
#[derive(Clone, Debug)]
pub struct Generator {
    /// One coordinate polynomial per ambient coordinate, all in m variables.
    pub polys: Vec<LinPoly>,
    /// For each variable x_t, the coordinate that reads x_t^{q^{i_t}} and i_t.
    pub readout: Vec<(usize, i64)>,
}

impl Generator {
    pub fn vars(&self) -> usize {
        self.readout.len()
    }

    /// The vector (F_1(x̄), …, F_k(x̄)).
    pub fn point(&self, x: &[Elem]) -> Vec<Elem> {
        self.polys.iter().map(|f| f.eval(x)).collect()
    }

    /// Recovers x̄ from a vector by undoing the readout Frobenius powers.
    pub fn read(&self, field: &Field, v: &[Elem]) -> Vec<Elem> {
        self.readout
            .iter()
            .map(|&(pos, e)| field.frob(v[pos], -e))
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct FqSubspace {
    field: FieldRef,
    k: usize,
    basis: Vec<Vec<Elem>>,
    generator: Option<Generator>,
}

/// Serializable view of a subspace.
#[derive(Clone, Debug, Serialize)]
pub struct SubspaceJson {
    pub k: usize,
    pub n: u32,
    pub field: String,
    pub dim: usize,
    pub basis: Vec<Vec<Elem>>,
}

/// Maximum of dim_{F_q}(U ∩ H) over a family of subspaces H.
#[derive(Clone, Debug, Serialize)]
pub struct IntersectionReport {
    /// dim_{F_{q^n}} H of the scanned subspaces.
    pub h: usize,
    pub scanned: u128,
    pub max_dim: usize,
    /// The first subspace (in enumeration order) attaining the maximum.
    pub witness: Option<FqnSubspace>,
}

#[derive(Clone, Debug, Serialize)]
pub struct EvasiveReport {
    pub h: usize,
    pub r: usize,
    pub evasive: bool,
    pub max_dim: usize,
    pub witness: Option<FqnSubspace>,
}

/// A vector u ∈ U and λ ∉ F_q with λu ∈ U.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LambdaWitness {
    pub u: Vec<Elem>,
    pub lambda: Elem,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Decomposability {
    Indecomposable,
    Inconclusive,
}

#[derive(Clone, Debug, Serialize)]
pub struct IndecomposabilityReport {
    pub verdict: Decomposability,
    /// (r, bound rn/(h+1) − 1, attained maximum) for every r checked.
    pub checks: Vec<(usize, usize, usize)>,
}

impl FqSubspace {
    /// The F_q-span of `vectors` in V(k, q^n); dependent vectors are dropped.
    pub fn span(field: &FieldRef, k: usize, vectors: &[Vec<Elem>]) -> Result<FqSubspace> {
        if let Some(v) = vectors.iter().find(|v| v.len() != k) {
            return Err(Error::DimensionMismatch {
                expected: k,
                got: v.len(),
            });
        }
        let mut basis: Vec<Vec<Elem>> = Vec::new();
        for v in vectors {
            basis.push(v.clone());
            if linalg::fq_rank_vectors(field, &basis) < basis.len() {
                basis.pop();
            }
        }
        Ok(FqSubspace {
            field: field.clone(),
            k,
            basis,
            generator: None,
        })
    }

    /// The I-space U_{I,F}: {(x_1^{q^{i_1}}, …, x_m^{q^{i_m}}, f_1(x̄), …, f_s(x̄))}.
    pub fn from_poly_tuple(field: &FieldRef, idx: &[i64], fs: &[LinPoly]) -> Result<FqSubspace> {
        let m = idx.len();
        for f in fs {
            if f.m() != m {
                return Err(Error::ArityMismatch {
                    expected: m,
                    got: f.m(),
                });
            }
            if !Field::same(f.field(), field) {
                return Err(Error::FieldMismatch);
            }
        }
        let mut polys: Vec<LinPoly> = idx
            .iter()
            .enumerate()
            .map(|(t, &i)| LinPoly::monomial(field, m, t, i, Elem::ONE))
            .collect();
        polys.extend(fs.iter().cloned());
        let readout = idx.iter().enumerate().map(|(t, &i)| (t, i)).collect();
        Self::from_generator(field, Generator { polys, readout })
    }

    /// U_F for an arbitrary coordinate tuple with a readout description.
    pub fn from_generator(field: &FieldRef, gen: Generator) -> Result<FqSubspace> {
        let m = gen.vars();
        let k = gen.polys.len();
        let mut spanning = Vec::with_capacity(m * field.n() as usize);
        let mut x = vec![Elem::ZERO; m];
        for t in 0..m {
            for &b in field.fq_basis() {
                x[t] = b;
                spanning.push(gen.point(&x));
            }
            x[t] = Elem::ZERO;
        }
        let mut u = Self::span(field, k, &spanning)?;
        u.generator = Some(gen);
        Ok(u)
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    /// Ambient dimension k over F_{q^n}.
    pub fn ambient(&self) -> usize {
        self.k
    }

    /// dim over F_q.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Elem>] {
        &self.basis
    }

    pub fn generator(&self) -> Option<&Generator> {
        self.generator.as_ref()
    }

    /// Applies an F_{q^n}-linear map v ↦ v·A (A is k × k') to every basis vector.
    pub fn map_right(&self, a: &[Vec<Elem>]) -> Result<FqSubspace> {
        if a.len() != self.k {
            return Err(Error::DimensionMismatch {
                expected: self.k,
                got: a.len(),
            });
        }
        let k2 = a.first().map_or(0, |r| r.len());
        let img = linalg::mat_mul(&self.field, &self.basis, a);
        Self::span(&self.field, k2, &img)
    }

    pub fn to_json(&self) -> SubspaceJson {
        SubspaceJson {
            k: self.k,
            n: self.field.n(),
            field: self.field.descriptor(),
            dim: self.dim(),
            basis: self.basis.clone(),
        }
    }

    // ---- membership and enumeration ------------------------------------

    /// Whether v lies in the F_q-span of the basis.
    pub fn contains(&self, v: &[Elem]) -> Result<bool> {
        if v.len() != self.k {
            return Err(Error::DimensionMismatch {
                expected: self.k,
                got: v.len(),
            });
        }
        if let Some(g) = &self.generator {
            if g.readout.len() * self.field.n() as usize == self.dim() {
                let x = g.read(&self.field, v);
                return Ok(g.point(&x) == v);
            }
        }
        Ok(self.contains_by_elimination(v))
    }

    /// Membership by F_q-rank, ignoring any generator.
    pub fn contains_by_elimination(&self, v: &[Elem]) -> bool {
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        linalg::fq_rank_vectors(&self.field, &rows) == self.dim()
    }

    /// Calls `f` on every vector of U (q^dim of them), zero included.
    pub fn for_each_vector(&self, mut f: impl FnMut(&[Elem])) {
        let field = &self.field;
        let t = self.dim();
        let mut cur = vec![Elem::ZERO; self.k];
        f(&cur);
        if field.q() == 2 {
            // Gray code: step i flips basis vector trailing_zeros(i).
            for i in 1u64..(1u64 << t) {
                let b = &self.basis[i.trailing_zeros() as usize];
                for (c, &x) in cur.iter_mut().zip(b) {
                    *c = field.add(*c, x);
                }
                f(&cur);
            }
            return;
        }
        let fq = field.fq_elements();
        let q = fq.len();
        let mut digits = vec![0usize; t];
        loop {
            let Some(pos) = digits.iter().position(|&d| d + 1 < q) else {
                return;
            };
            for d in digits.iter_mut().take(pos) {
                *d = 0;
            }
            digits[pos] += 1;
            for c in cur.iter_mut() {
                *c = Elem::ZERO;
            }
            for (b, &d) in self.basis.iter().zip(&digits) {
                if d == 0 {
                    continue;
                }
                for (c, &x) in cur.iter_mut().zip(b) {
                    *c = field.add(*c, field.mul(fq[d], x));
                }
            }
            f(&cur);
        }
    }

    pub fn vectors(&self) -> Vec<Vec<Elem>> {
        let mut out = Vec::new();
        self.for_each_vector(|v| out.push(v.to_vec()));
        out
    }

    /// Set equality of two subspaces of the same ambient space.
    pub fn same_set(&self, other: &FqSubspace) -> bool {
        self.k == other.k
            && self.dim() == other.dim()
            && other.basis.iter().all(|v| self.contains_by_elimination(v))
    }

    // ---- intersections -------------------------------------------------

    /// dim_{F_q}(U ∩ H), as the F_q-nullity of the equations of H restricted to U.
    pub fn intersection_dim(&self, h: &FqnSubspace) -> Result<usize> {
        if h.ambient() != self.k {
            return Err(Error::DimensionMismatch {
                expected: self.k,
                got: h.ambient(),
            });
        }
        Ok(self.intersection_dim_unchecked(h))
    }

    fn restricted_equations(&self, h: &FqnSubspace) -> Vec<Vec<Elem>> {
        let field = &self.field;
        let eqs = h.equations(field);
        self.basis
            .iter()
            .map(|u| {
                eqs.iter()
                    .map(|(c, terms)| {
                        terms
                            .iter()
                            .fold(u[*c], |acc, &(p, w)| field.add(acc, field.mul(w, u[p])))
                    })
                    .collect()
            })
            .collect()
    }

    fn intersection_dim_unchecked(&self, h: &FqnSubspace) -> usize {
        // column i of the system: the values of the equations at basis vector i
        let cols = self.restricted_equations(h);
        self.dim() - linalg::fq_rank_vectors(&self.field, &cols)
    }

    /// F_q-basis of U ∩ H.
    pub fn intersection_basis(&self, h: &FqnSubspace) -> Vec<Vec<Elem>> {
        let field = &self.field;
        let cols = self.restricted_equations(h);
        let t = self.dim();
        let rows = linalg::transpose(&linalg::fq_expand(field, &cols));
        let rows: Mat = if rows.is_empty() { Vec::new() } else { rows };
        linalg::kernel(field, &rows, t)
            .into_iter()
            .map(|a| {
                let mut v = vec![Elem::ZERO; self.k];
                for (ai, u) in a.iter().zip(&self.basis) {
                    if ai.is_zero() {
                        continue;
                    }
                    for (x, &y) in v.iter_mut().zip(u) {
                        *x = field.add(*x, field.mul(*ai, y));
                    }
                }
                v
            })
            .collect()
    }

    /// dim_{F_q}(U ∩ H) by listing the vectors of U that lie in H.
    pub fn intersection_dim_by_enumeration(&self, h: &FqnSubspace) -> usize {
        let mut count = 0u64;
        self.for_each_vector(|v| {
            if h.contains(&self.field, v) {
                count += 1;
            }
        });
        let q = self.field.q();
        let mut d = 0;
        let mut c = count;
        while c > 1 {
            c /= q;
            d += 1;
        }
        d
    }

    /// Maximum of dim_{F_q}(U ∩ H) over every h-dimensional F_{q^n}-subspace H.
    pub fn max_intersection(&self, h: usize, budget: Budget) -> Result<IntersectionReport> {
        let en = SubspaceEnumerator::new(&self.field, self.k, h)?;
        budget.check(en.len())?;
        let (max_dim, idx) = (0..en.len() as u64)
            .into_par_iter()
            .map(|i| (self.intersection_dim_unchecked(&en.get(i as u128)), i))
            .reduce(
                || (0, u64::MAX),
                |a, b| {
                    if a.0 != b.0 {
                        if a.0 > b.0 {
                            a
                        } else {
                            b
                        }
                    } else if a.1 < b.1 {
                        a
                    } else {
                        b
                    }
                },
            );
        Ok(IntersectionReport {
            h,
            scanned: en.len(),
            max_dim,
            witness: (idx != u64::MAX).then(|| en.get(idx as u128)),
        })
    }

    /// (h, r)-evasiveness: every h-dimensional H meets U in F_q-dimension ≤ r.
    pub fn is_evasive(&self, h: usize, r: usize, budget: Budget) -> Result<EvasiveReport> {
        if h >= self.k || h > r {
            return Err(Error::InvalidParams(format!(
                "evasiveness needs h < k and h <= r (h={h}, r={r}, k={})",
                self.k
            )));
        }
        let rep = self.max_intersection(h, budget)?;
        Ok(EvasiveReport {
            h,
            r,
            evasive: rep.max_dim <= r,
            max_dim: rep.max_dim,
            witness: rep.witness,
        })
    }

    /// h-scatteredness by exhaustive scan of the h-dimensional subspaces.
    pub fn is_h_scattered(&self, h: usize, budget: Budget) -> Result<bool> {
        Ok(self.is_evasive(h, h, budget)?.evasive)
    }

    /// Scatteredness (h = 1) by the λ-scan: U is scattered iff
    /// dim(U + λU) = 2·dim U for every λ ∉ F_q. Returns a witness otherwise.
    pub fn lambda_scan(&self, budget: Budget) -> Result<Option<LambdaWitness>> {
        let field = &self.field;
        budget.check(field.order() as u128)?;
        let t = self.dim();
        let found = field
            .nonzero_elements()
            .filter(|&l| !field.in_fq(l))
            .find(|&l| {
                let mut rows = self.basis.clone();
                rows.extend(self.scaled_basis(l));
                linalg::fq_rank_vectors(field, &rows) < 2 * t
            });
        Ok(found.map(|l| self.lambda_witness(l)))
    }

    fn scaled_basis(&self, l: Elem) -> Vec<Vec<Elem>> {
        self.basis
            .iter()
            .map(|v| v.iter().map(|&x| self.field.mul(l, x)).collect())
            .collect()
    }

    fn lambda_witness(&self, l: Elem) -> LambdaWitness {
        let field = &self.field;
        let t = self.dim();
        let mut rows = self.basis.clone();
        rows.extend(self.scaled_basis(l));
        // Σ a_i u_i + Σ b_i λu_i = 0 ⇒ u = Σ b_i u_i has λu = −Σ a_i u_i ∈ U.
        let sys = linalg::transpose(&linalg::fq_expand(field, &rows));
        let ker = linalg::kernel(field, &sys, 2 * t);
        let coeffs = &ker[0][t..];
        let mut u = vec![Elem::ZERO; self.k];
        for (c, b) in coeffs.iter().zip(&self.basis) {
            for (x, &y) in u.iter_mut().zip(b) {
                *x = field.add(*x, field.mul(*c, y));
            }
        }
        LambdaWitness { u, lambda: l }
    }

    /// Checks a λ-witness by direct substitution.
    pub fn check_lambda_witness(&self, w: &LambdaWitness) -> bool {
        let field = &self.field;
        let scaled: Vec<Elem> = w.u.iter().map(|&x| field.mul(w.lambda, x)).collect();
        !field.in_fq(w.lambda)
            && w.u.iter().any(|x| !x.is_zero())
            && self.contains_by_elimination(&w.u)
            && self.contains_by_elimination(&scaled)
    }

    pub fn is_scattered(&self, budget: Budget) -> Result<bool> {
        Ok(self.lambda_scan(budget)?.is_none())
    }

    /// Largest number of nonzero vectors of U on one F_{q^n}-line through
    /// the origin, found by normalising every vector. Returns the F_q-dim.
    pub fn max_line_intersection_by_points(&self, budget: Budget) -> Result<usize> {
        let field = &self.field;
        budget.check((field.q() as u128).saturating_pow(self.dim() as u32))?;
        let mut counts: HashMap<Vec<Elem>, u64> = HashMap::new();
        self.for_each_vector(|v| {
            let Some(&lead) = v.iter().find(|x| !x.is_zero()) else {
                return;
            };
            let inv = field.inv(lead);
            let p: Vec<Elem> = v.iter().map(|&x| field.mul(inv, x)).collect();
            *counts.entry(p).or_default() += 1;
        });
        let most = counts.values().copied().max().unwrap_or(0);
        let q = field.q();
        let mut d = 0;
        let mut c = most + 1;
        while c > 1 {
            c /= q;
            d += 1;
        }
        Ok(d)
    }

    /// Cutting: for every hyperplane H, U ∩ H spans H over F_{q^n}.
    pub fn is_cutting(&self, budget: Budget) -> Result<bool> {
        if self.k == 0 {
            return Ok(true);
        }
        let en = SubspaceEnumerator::new(&self.field, self.k, self.k - 1)?;
        budget.check(en.len())?;
        let target = self.k - 1;
        let bad = (0..en.len() as u64).into_par_iter().find_first(|&i| {
            let h = en.get(i as u128);
            let vecs = self.intersection_basis(&h);
            let mut m = vecs;
            linalg::rref(&self.field, &mut m).len() < target
        });
        Ok(bad.is_none())
    }

    /// U1 ⊕ U2 inside V(k1 + k2, q^n).
    pub fn direct_sum(&self, other: &FqSubspace) -> Result<FqSubspace> {
        if !Field::same(&self.field, &other.field) {
            return Err(Error::FieldMismatch);
        }
        let (k1, k2) = (self.k, other.k);
        let mut basis: Vec<Vec<Elem>> = self
            .basis
            .iter()
            .map(|v| {
                let mut w = v.clone();
                w.extend(std::iter::repeat_n(Elem::ZERO, k2));
                w
            })
            .collect();
        basis.extend(other.basis.iter().map(|v| {
            let mut w = vec![Elem::ZERO; k1];
            w.extend(v.iter().copied());
            w
        }));
        let generator = match (&self.generator, &other.generator) {
            (Some(g1), Some(g2)) => Some(juxtapose(&self.field, g1, g2, k1)),
            _ => None,
        };
        Ok(FqSubspace {
            field: self.field.clone(),
            k: k1 + k2,
            basis,
            generator,
        })
    }

    /// Sufficient criterion for indecomposability of a maximum h-scattered U:
    /// U is (r, rn/(h+1) − 1)-evasive for every admissible r in [h+1, ⌊k/2⌋].
    pub fn indecomposability_criterion(
        &self,
        h: usize,
        budget: Budget,
    ) -> Result<IndecomposabilityReport> {
        let n = self.field.n() as usize;
        let maximum = (self.k * n).is_multiple_of(h + 1) && self.dim() == self.k * n / (h + 1);
        let scattered = maximum
            && if h == 1 {
                self.is_scattered(budget)?
            } else {
                self.is_h_scattered(h, budget)?
            };
        if !scattered {
            return Err(Error::NotMaximumScattered(h));
        }
        let mut checks = Vec::new();
        let mut all = true;
        for r in h + 1..=self.k / 2 {
            if !(r * n).is_multiple_of(h + 1) {
                continue;
            }
            let bound = r * n / (h + 1) - 1;
            let rep = self.max_intersection(r, budget)?;
            all &= rep.max_dim <= bound;
            checks.push((r, bound, rep.max_dim));
        }
        Ok(IndecomposabilityReport {
            verdict: if all {
                Decomposability::Indecomposable
            } else {
                Decomposability::Inconclusive
            },
            checks,
        })
    }
}

fn juxtapose(field: &FieldRef, g1: &Generator, g2: &Generator, k1: usize) -> Generator {
    let (m1, m2) = (g1.vars(), g2.vars());
    let widen = |f: &LinPoly, offset: usize| {
        let mut grid = vec![vec![Elem::ZERO; field.n() as usize]; m1 + m2];
        for (i, row) in f.coeffs().iter().enumerate() {
            grid[offset + i] = row.clone();
        }
        LinPoly::from_grid(field, grid).expect("grid shape")
    };
    let mut polys: Vec<LinPoly> = g1.polys.iter().map(|f| widen(f, 0)).collect();
    polys.extend(g2.polys.iter().map(|f| widen(f, m1)));
    let mut readout = g1.readout.clone();
    readout.extend(g2.readout.iter().map(|&(p, e)| (p + k1, e)));
    Generator { polys, readout }
}
