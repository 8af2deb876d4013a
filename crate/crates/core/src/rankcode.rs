//! F_{q^n}-linear rank-metric codes inside the space of linearized
//! polynomials in m variables, and their associated F_q-subspaces.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Budget, Error, Result};
use crate::gf::{Elem, Field, FieldRef};
use crate::linalg::{self, Mat};
use crate::linpoly::{LinPoly, LinPolyJson};
use crate::subspace::FqSubspace;

/// A code C = ⟨g_1, …, g_k⟩_{F_{q^n}} of linearized polynomials in m variables.
#[derive(Clone, Debug)]
pub struct RankCode {
    field: FieldRef,
    m: usize,
    basis: Vec<LinPoly>,
}

/// The four equivalent nondegeneracy conditions, each computed separately.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Nondegeneracy {
    /// (a) dim_{F_q} U_G.
    pub effective_length: usize,
    /// (b) dim_{F_q} of the common kernel of the basis, by F_q elimination.
    pub basis_kernel_dim: usize,
    /// (c) number of points killed by every codeword, by brute force.
    pub common_zeros: u128,
    /// (d) whether the dual code has a codeword of rank at most one.
    pub dual_has_rank_one: bool,
    pub verdict: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Minimality {
    pub minimal: bool,
    /// Number of distinct supports of nonzero codewords.
    pub supports: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct CodeReport {
    pub d: usize,
    pub is_mrd: bool,
    pub effective_length: usize,
    pub nondegenerate: bool,
    pub weights: Vec<usize>,
    pub minimal: bool,
    pub antichain: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct CodeJson {
    pub field: String,
    pub k: usize,
    pub m: usize,
    pub n: u32,
    pub basis: Vec<LinPolyJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<CodeReport>,
}

impl RankCode {
    /// A code from an F_{q^n}-independent list of generators.
    pub fn new(field: &FieldRef, m: usize, basis: Vec<LinPoly>) -> Result<RankCode> {
        let code = RankCode::unchecked(field, m, basis)?;
        if linalg::rank(field, &code.grids()) != code.basis.len() {
            return Err(Error::InvalidParams(
                "generators are not linearly independent over F_{q^n}".into(),
            ));
        }
        Ok(code)
    }

    /// The code spanned by arbitrary generators; the stored basis is the
    /// reduced echelon form of their coefficient grids.
    pub fn span(field: &FieldRef, m: usize, gens: &[LinPoly]) -> Result<RankCode> {
        let code = RankCode::unchecked(field, m, gens.to_vec())?;
        let mut g = code.grids();
        linalg::rref(field, &mut g);
        let basis = g
            .iter()
            .map(|row| code.poly_from_flat(row))
            .collect::<Result<Vec<_>>>()?;
        Ok(RankCode { basis, ..code })
    }

    fn unchecked(field: &FieldRef, m: usize, basis: Vec<LinPoly>) -> Result<RankCode> {
        for g in &basis {
            if !Field::same(g.field(), field) {
                return Err(Error::FieldMismatch);
            }
            if g.m() != m {
                return Err(Error::ArityMismatch {
                    expected: m,
                    got: g.m(),
                });
            }
        }
        Ok(RankCode {
            field: field.clone(),
            m,
            basis,
        })
    }

    /// ⟨X, X^{q^s}, …, X^{q^{s(k-1)}}⟩ in one variable.
    pub fn gabidulin(field: &FieldRef, k: usize, s: i64) -> Result<RankCode> {
        let basis = (0..k as i64)
            .map(|t| LinPoly::monomial(field, 1, 0, s * t, Elem::ONE))
            .collect();
        RankCode::new(field, 1, basis)
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.field.n() as usize
    }

    pub fn k(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[LinPoly] {
        &self.basis
    }

    fn nm(&self) -> usize {
        self.n() * self.m
    }

    /// Coefficient grids flattened to rows of length nm, entry (i, j) at i·n + j.
    pub fn grids(&self) -> Mat {
        self.basis
            .iter()
            .map(|g| g.coeffs().iter().flatten().copied().collect())
            .collect()
    }

    fn poly_from_flat(&self, row: &[Elem]) -> Result<LinPoly> {
        let n = self.n();
        LinPoly::from_grid(&self.field, row.chunks(n).map(|c| c.to_vec()).collect())
    }

    /// Equality as sets of polynomials.
    pub fn same_code(&self, other: &RankCode) -> bool {
        if !Field::same(&self.field, &other.field) || self.m != other.m {
            return false;
        }
        let mut a = self.grids();
        let mut b = other.grids();
        linalg::rref(&self.field, &mut a);
        linalg::rref(&self.field, &mut b);
        a == b
    }

    /// Σ c_t g_t.
    pub fn codeword(&self, cs: &[Elem]) -> LinPoly {
        LinPoly::combination(&self.field, self.m, &self.basis, cs)
    }

    /// Folds over the evaluation vectors ev_B(f) of the nonzero codewords.
    ///
    /// With `projective` set, only codewords whose first nonzero coordinate
    /// is 1 are visited (one per F_{q^n}^*-orbit).
    fn fold_codewords<A, I, F, G>(
        &self,
        budget: Budget,
        projective: bool,
        identity: I,
        fold: F,
        combine: G,
    ) -> Result<A>
    where
        A: Send,
        I: Fn() -> A + Sync + Send,
        F: Fn(A, &[Elem]) -> A + Sync + Send,
        G: Fn(A, A) -> A + Sync + Send,
    {
        let f = &self.field;
        let order = f.order() as u128;
        let k = self.k();
        let total = order
            .checked_pow(k as u32)
            .ok_or(Error::TooLargeToExhaust {
                needed: u128::MAX,
                budget: budget.0,
            })?;
        budget.check(total)?;
        let nm = self.nm();
        let evs: Vec<Vec<Elem>> = self.basis.iter().map(|g| g.ev_basis()).collect();
        const CHUNK: u128 = 1 << 12;
        let chunks = total.div_ceil(CHUNK) as u64;
        let result = (0..chunks)
            .into_par_iter()
            .fold(&identity, |mut acc, c| {
                let start = c as u128 * CHUNK;
                let end = (start + CHUNK).min(total);
                // digit 0 is the most significant
                let mut digits = vec![0u32; k];
                let mut rest = start;
                for t in (0..k).rev() {
                    digits[t] = (rest % order) as u32;
                    rest /= order;
                }
                let mut prefix = vec![vec![Elem::ZERO; nm]; k + 1];
                let mut dirty = 0;
                for idx in start..end {
                    if idx > start {
                        let mut t = k - 1;
                        loop {
                            digits[t] += 1;
                            if (digits[t] as u128) < order {
                                break;
                            }
                            digits[t] = 0;
                            t -= 1;
                        }
                        dirty = t;
                    }
                    for t in dirty..k {
                        let c = Elem(digits[t]);
                        let (lo, hi) = prefix.split_at_mut(t + 1);
                        for ((o, &p), &e) in hi[0].iter_mut().zip(&lo[t]).zip(&evs[t]) {
                            *o = if c.is_zero() {
                                p
                            } else {
                                f.add(p, f.mul(c, e))
                            };
                        }
                    }
                    dirty = k;
                    if idx == 0 {
                        continue;
                    }
                    if projective && digits.iter().find(|&&d| d != 0) != Some(&1) {
                        continue;
                    }
                    acc = fold(acc, &prefix[k]);
                }
                acc
            })
            .reduce(&identity, &combine);
        Ok(result)
    }

    /// Minimum rank distance, by exhausting all q^{nk} − 1 nonzero codewords.
    /// `None` for the zero code.
    pub fn min_distance_opt(&self, budget: Budget) -> Result<Option<usize>> {
        let f = &self.field;
        let d = self.fold_codewords(
            budget,
            false,
            || usize::MAX,
            |acc, ev| acc.min(linalg::fq_rank_elems(f, ev)),
            usize::min,
        )?;
        Ok((d != usize::MAX).then_some(d))
    }

    pub fn min_distance(&self, budget: Budget) -> Result<usize> {
        self.min_distance_opt(budget)?
            .ok_or_else(|| Error::InvalidParams("the zero code has no minimum distance".into()))
    }

    /// Number of nonzero codewords of each rank 0..=n.
    pub fn rank_distribution(&self, budget: Budget) -> Result<Vec<u128>> {
        let f = &self.field;
        let n = self.n();
        self.fold_codewords(
            budget,
            false,
            || vec![0u128; n + 1],
            |mut acc, ev| {
                acc[linalg::fq_rank_elems(f, ev)] += 1;
                acc
            },
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        )
    }

    /// Equality in the Singleton-like bound k ≤ m(n − d + 1).
    pub fn is_mrd(&self, budget: Budget) -> Result<bool> {
        let d = self.min_distance(budget)?;
        Ok(self.k() == self.m * (self.n() - d + 1))
    }

    /// C^⊥ = {f : f ⋆ g = 0 for all g ∈ C}.
    pub fn dual(&self) -> RankCode {
        let nm = self.nm();
        let ker = if self.basis.is_empty() {
            linalg::identity(nm)
        } else {
            linalg::kernel(&self.field, &self.grids(), nm)
        };
        let basis = ker
            .iter()
            .map(|row| self.poly_from_flat(row).expect("grid shape"))
            .collect();
        RankCode {
            field: self.field.clone(),
            m: self.m,
            basis,
        }
    }

    /// The nm vectors (g_1(b), …, g_k(b)) for b running over the basis
    /// β_j e_i; they span U_G over F_q.
    fn ug_spanning(&self) -> Vec<Vec<Elem>> {
        let evs: Vec<Vec<Elem>> = self.basis.iter().map(|g| g.ev_basis()).collect();
        (0..self.nm())
            .map(|l| evs.iter().map(|e| e[l]).collect())
            .collect()
    }

    /// ℓ(C) = dim_{F_q} U_G.
    pub fn effective_length(&self) -> usize {
        if self.basis.is_empty() {
            return 0;
        }
        linalg::fq_rank_vectors(&self.field, &self.ug_spanning())
    }

    /// Dimension of {x : g_t(x) = 0 for all t} from the stacked F_q-matrices.
    fn basis_kernel_dim(&self) -> usize {
        let nm = self.nm();
        let stacked: Mat = self.basis.iter().flat_map(|g| g.to_matrix()).collect();
        if stacked.is_empty() {
            return nm;
        }
        linalg::kernel(&self.field, &stacked, nm).len()
    }

    /// Points of F_{q^n}^m killed by every basis polynomial, by brute force.
    fn common_zeros(&self, budget: Budget) -> Result<u128> {
        let f = &self.field;
        let order = f.order() as u128;
        let total = order
            .checked_pow(self.m as u32)
            .ok_or(Error::TooLargeToExhaust {
                needed: u128::MAX,
                budget: budget.0,
            })?;
        budget.check(total)?;
        let m = self.m;
        Ok((0..total as u64)
            .into_par_iter()
            .filter(|&idx| {
                let mut rest = idx as u128;
                let x: Vec<Elem> = (0..m)
                    .map(|_| {
                        let d = Elem((rest % order) as u32);
                        rest /= order;
                        d
                    })
                    .collect();
                self.basis.iter().all(|g| g.eval(&x).is_zero())
            })
            .count() as u128)
    }

    /// Whether C^⊥ contains a rank-one polynomial. Every such polynomial is
    /// a multiple of some Tr(v · X), so the search runs over v ≠ 0 and
    /// tests membership in the row space of the dual's grids.
    fn dual_has_rank_one(&self, budget: Budget) -> Result<bool> {
        let f = &self.field;
        let order = f.order() as u128;
        let total = order
            .checked_pow(self.m as u32)
            .ok_or(Error::TooLargeToExhaust {
                needed: u128::MAX,
                budget: budget.0,
            })?;
        budget.check(total)?;
        let mut dual = self.dual().grids();
        linalg::rref(f, &mut dual);
        let m = self.m;
        Ok((1..total as u64).into_par_iter().any(|idx| {
            let mut rest = idx as u128;
            let v: Vec<Elem> = (0..m)
                .map(|_| {
                    let d = Elem((rest % order) as u32);
                    rest /= order;
                    d
                })
                .collect();
            let t = LinPoly::trace_form(&self.field, Elem::ONE, &v);
            let flat: Vec<Elem> = t.coeffs().iter().flatten().copied().collect();
            in_row_space(f, &flat, &dual)
        }))
    }

    /// All four nondegeneracy conditions. Disagreement is reported as
    /// [`Error::InternalInconsistency`].
    pub fn nondegeneracy(&self, budget: Budget) -> Result<Nondegeneracy> {
        let nm = self.nm();
        let effective_length = self.effective_length();
        let basis_kernel_dim = self.basis_kernel_dim();
        let common_zeros = self.common_zeros(budget)?;
        let dual_has_rank_one = self.dual_has_rank_one(budget)?;
        let verdicts = [
            effective_length == nm,
            basis_kernel_dim == 0,
            common_zeros == 1,
            !dual_has_rank_one,
        ];
        if verdicts.iter().any(|&v| v != verdicts[0]) {
            return Err(Error::InternalInconsistency(format!(
                "nondegeneracy conditions disagree: {verdicts:?}"
            )));
        }
        Ok(Nondegeneracy {
            effective_length,
            basis_kernel_dim,
            common_zeros,
            dual_has_rank_one,
            verdict: verdicts[0],
        })
    }

    pub fn is_nondegenerate(&self, budget: Budget) -> Result<bool> {
        Ok(self.nondegeneracy(budget)?.verdict)
    }

    /// Φ(C) = U_G ⊆ V(k, q^n) for the stored basis.
    pub fn associated_subspace(&self) -> Result<FqSubspace> {
        if self.effective_length() != self.nm() {
            return Err(Error::DegenerateCode);
        }
        FqSubspace::span(&self.field, self.k(), &self.ug_spanning())
    }

    /// Ψ(U): with u_1, …, u_{nm} the stored F_q-basis of U, the t-th basis
    /// polynomial g_t has ev_B(g_t) = (u_1[t], …, u_{nm}[t]).
    pub fn associated_code(u: &FqSubspace) -> Result<RankCode> {
        let field = u.field();
        let n = field.n() as usize;
        let t = u.dim();
        if t == 0 || !t.is_multiple_of(n) {
            return Err(Error::WrongDimension(t, n));
        }
        let m = t / n;
        let k = u.ambient();
        if linalg::rank(field, u.basis()) != k {
            return Err(Error::NotFullSpan);
        }
        let basis = (0..k)
            .map(|row| {
                let values: Vec<Elem> = u.basis().iter().map(|v| v[row]).collect();
                LinPoly::from_ev_basis(field, m, &values)
            })
            .collect::<Result<Vec<_>>>()?;
        RankCode::new(field, m, basis)
    }

    /// d_r = nm − max{dim_{F_q}(U ∩ H) : dim H = k − r}, U = Φ(C).
    pub fn generalized_rank_weight(&self, r: usize, budget: Budget) -> Result<usize> {
        let k = self.k();
        if r == 0 || r > k {
            return Err(Error::InvalidParams(format!(
                "generalized weight index {r} outside 1..={k}"
            )));
        }
        let u = self.associated_subspace()?;
        Ok(self.nm() - u.max_intersection(k - r, budget)?.max_dim)
    }

    /// (d_1, …, d_k).
    pub fn generalized_rank_weights(&self, budget: Budget) -> Result<Vec<usize>> {
        let u = self.associated_subspace()?;
        let k = self.k();
        (1..=k)
            .map(|r| Ok(self.nm() - u.max_intersection(k - r, budget)?.max_dim))
            .collect()
    }

    /// Whether no codeword support strictly contains another. The support
    /// of f is the row space of its n × nm matrix over F_q.
    pub fn minimality(&self, budget: Budget) -> Result<Minimality> {
        if self.field.is_binary_prime() && self.nm() <= 128 {
            self.minimality_f2(budget)
        } else {
            self.minimality_generic(budget)
        }
    }

    fn minimality_f2(&self, budget: Budget) -> Result<Minimality> {
        let n = self.n();
        let supports = self.fold_codewords(
            budget,
            true,
            HashSet::new,
            |mut acc, ev| {
                let rows: Vec<u128> = (0..n)
                    .map(|r| {
                        ev.iter()
                            .enumerate()
                            .fold(0u128, |a, (l, x)| a | ((((x.0 >> r) & 1) as u128) << l))
                    })
                    .collect();
                acc.insert(rref_u128(rows));
                acc
            },
            |mut a, b| {
                a.extend(b);
                a
            },
        )?;
        let supports: Vec<Vec<u128>> = supports.into_iter().collect();
        let minimal = antichain(&supports, |s, t| s.iter().all(|&v| reduce_u128(v, t) == 0));
        Ok(Minimality {
            minimal,
            supports: supports.len(),
        })
    }

    fn minimality_generic(&self, budget: Budget) -> Result<Minimality> {
        let f = &self.field;
        let supports = self.fold_codewords(
            budget,
            true,
            HashSet::new,
            |mut acc, ev| {
                let cols: Mat = ev.iter().map(|&x| f.fq_coords(x)).collect();
                let mut rows = linalg::transpose(&cols);
                linalg::rref(f, &mut rows);
                acc.insert(rows);
                acc
            },
            |mut a, b| {
                a.extend(b);
                a
            },
        )?;
        let supports: Vec<Mat> = supports.into_iter().collect();
        let minimal = antichain(&supports, |s, t| s.iter().all(|v| in_row_space(f, v, t)));
        Ok(Minimality {
            minimal,
            supports: supports.len(),
        })
    }

    pub fn is_minimal(&self, budget: Budget) -> Result<bool> {
        Ok(self.minimality(budget)?.minimal)
    }

    /// Distance, MRD flag, effective length, nondegeneracy, weights and minimality.
    pub fn report(&self, budget: Budget) -> Result<CodeReport> {
        let d = self.min_distance(budget)?;
        let nondeg = self.nondegeneracy(budget)?;
        let weights = if nondeg.verdict {
            self.generalized_rank_weights(budget)?
        } else {
            Vec::new()
        };
        let min = self.minimality(budget)?;
        Ok(CodeReport {
            d,
            is_mrd: self.k() == self.m * (self.n() - d + 1),
            effective_length: nondeg.effective_length,
            nondegenerate: nondeg.verdict,
            weights,
            minimal: min.minimal,
            antichain: min.supports,
        })
    }

    pub fn to_json(&self, report: Option<CodeReport>) -> CodeJson {
        CodeJson {
            field: self.field.descriptor(),
            k: self.k(),
            m: self.m,
            n: self.field.n(),
            basis: self.basis.iter().map(|g| g.to_json()).collect(),
            report,
        }
    }
}

/// Φ(Ψ(U)^⊥): the Delsarte dual of U, a subspace of V(nm − k, q^n).
pub fn delsarte_dual_subspace(u: &FqSubspace, budget: Budget) -> Result<FqSubspace> {
    let code = RankCode::associated_code(u)?;
    if code.min_distance(budget)? <= 1 {
        return Err(Error::MinDistanceOne);
    }
    code.dual().associated_subspace()
}

/// True when no set in `sets` is strictly contained in another. Sets are
/// distinct and `contained(s, t)` tests s ⊆ t; a containment between
/// distinct sets is strict, and needs fewer generators on the smaller side.
fn antichain<S: Sync>(sets: &[Vec<S>], contained: impl Fn(&[S], &[S]) -> bool + Sync) -> bool {
    !sets.par_iter().enumerate().any(|(i, s)| {
        sets.iter()
            .enumerate()
            .any(|(j, t)| i != j && s.len() < t.len() && contained(s, t))
    })
}

/// Reduced echelon form over F_2 with pivots at leading bits, sorted by
/// decreasing pivot; a canonical form of the span.
fn rref_u128(rows: Vec<u128>) -> Vec<u128> {
    let mut basis: Vec<u128> = Vec::new();
    for mut v in rows {
        v = reduce_u128(v, &basis);
        if v == 0 {
            continue;
        }
        let lead = 127 - v.leading_zeros();
        for b in basis.iter_mut() {
            if (*b >> lead) & 1 == 1 {
                *b ^= v;
            }
        }
        basis.push(v);
        basis.sort_unstable_by(|a, b| b.cmp(a));
    }
    basis
}

fn reduce_u128(mut v: u128, basis: &[u128]) -> u128 {
    for &b in basis {
        let lead = 127 - b.leading_zeros();
        if (v >> lead) & 1 == 1 {
            v ^= b;
        }
    }
    v
}

fn in_row_space(f: &Field, v: &[Elem], t: &[Vec<Elem>]) -> bool {
    let mut v = v.to_vec();
    for row in t {
        let p = row.iter().position(|x| !x.is_zero()).expect("rref row");
        let c = v[p];
        if !c.is_zero() {
            for (x, &y) in v.iter_mut().zip(row) {
                *x = f.sub(*x, f.mul(c, y));
            }
        }
    }
    v.iter().all(|x| x.is_zero())
}
