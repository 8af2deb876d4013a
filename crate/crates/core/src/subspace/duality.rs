//! Ordinary duality in V(4, q^n) with respect to Tr(σ(u, w)),
//! σ(X, Y) = X_0Y_3 + X_3Y_0 − X_1Y_2 − X_2Y_1.

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::linalg;

use super::{FqSubspace, FqnSubspace};

/// σ(u, w) on V(4, q^n).
pub fn polar_form(field: &Field, u: &[Elem], w: &[Elem]) -> Elem {
    let a = field.add(field.mul(u[0], w[3]), field.mul(u[3], w[0]));
    let b = field.add(field.mul(u[1], w[2]), field.mul(u[2], w[1]));
    field.sub(a, b)
}

/// The vector s(u) with σ(u, w) = s(u) · w.
fn polar_row(field: &Field, u: &[Elem]) -> Vec<Elem> {
    vec![u[3], field.neg(u[2]), field.neg(u[1]), u[0]]
}

fn require_four(k: usize) -> Result<()> {
    if k != 4 {
        return Err(Error::WrongAmbient {
            expected: 4,
            got: k,
        });
    }
    Ok(())
}

/// U^⊥ = {w : Tr(σ(u, w)) = 0 for all u ∈ U}, by an F_q-kernel computation.
pub fn ordinary_dual(u: &FqSubspace) -> Result<FqSubspace> {
    require_four(u.ambient())?;
    let field = u.field();
    let n = field.n() as usize;
    // unknown w = Σ_c Σ_j w_{c,j} β_j e_c; one equation per basis vector of U
    let unit = |c: usize, j: usize| {
        let mut e = vec![Elem::ZERO; 4];
        e[c] = field.fq_basis()[j];
        e
    };
    let sys: Vec<Vec<Elem>> = u
        .basis()
        .iter()
        .map(|b| {
            (0..4 * n)
                .map(|col| field.trace(polar_form(field, b, &unit(col / n, col % n))))
                .collect()
        })
        .collect();
    let sys = if sys.is_empty() {
        vec![vec![Elem::ZERO; 4 * n]]
    } else {
        sys
    };
    let vectors: Vec<Vec<Elem>> = linalg::kernel(field, &sys, 4 * n)
        .into_iter()
        .map(|a| {
            (0..4)
                .map(|c| field.from_fq_coords(&a[c * n..(c + 1) * n]))
                .collect()
        })
        .collect();
    FqSubspace::span(field, 4, &vectors)
}

/// R^τ: the σ-orthogonal of an F_{q^n}-subspace of V(4, q^n).
pub fn polar_complement(field: &Field, r: &FqnSubspace) -> Result<FqnSubspace> {
    require_four(r.ambient())?;
    let rows: Vec<Vec<Elem>> = r.rows().iter().map(|v| polar_row(field, v)).collect();
    let ker = if rows.is_empty() {
        linalg::identity(4)
    } else {
        linalg::kernel(field, &rows, 4)
    };
    FqnSubspace::span(field, 4, &ker)
}

/// dim(U^τ' ∩ R^τ) − dim(U ∩ R) = 4n − t − sn, with t = dim_{F_q} U, s = dim R.
pub fn duality_weight_identity_check(u: &FqSubspace, r: &FqnSubspace) -> Result<bool> {
    require_four(u.ambient())?;
    let field = u.field();
    let dual = ordinary_dual(u)?;
    let r_perp = polar_complement(field, r)?;
    let lhs = dual.intersection_dim(&r_perp)? as i64 - u.intersection_dim(r)? as i64;
    let n = field.n() as i64;
    let rhs = 4 * n - u.dim() as i64 - r.dim() as i64 * n;
    Ok(lhs == rhs)
}
