//! ΓL(4, q^n)-equivalence between two members of the family.

use num_integer::Integer;
use serde::Serialize;

use super::FamilyParams;
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::linalg;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum EquivTag {
    InequivalentByIndexPair,
    InequivalentBySystem,
    EquivalentByCorollary,
    Undetermined,
}

/// diag(a11, a22, a33, a44), mapping U(p1) onto U(p2) coordinatewise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagonalWitness {
    pub a11: Elem,
    pub a22: Elem,
    pub a33: Elem,
    pub a44: Elem,
}

#[derive(Clone, Debug, Serialize)]
pub struct EquivVerdict {
    pub tag: EquivTag,
    /// F_q-dimension of the solution space of the (a11, a21) system, when computed.
    pub kernel_dim: Option<usize>,
    pub witness: Option<DiagonalWitness>,
    pub note: Option<String>,
}

/// The six coefficients of the (a11, a21) system, already raised to q^K
/// (the values that multiply the unknowns), with K = J − I signed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SystemCoefficients {
    pub k: i64,
    pub rho: Elem,
    pub theta: Elem,
    pub sigma: Elem,
    pub mu: Elem,
    pub nu: Elem,
    pub xi: Elem,
}

fn check_pair(p1: &FamilyParams, p2: &FamilyParams) -> Result<()> {
    if !Field::same(p1.field(), p2.field()) {
        return Err(Error::FieldMismatch);
    }
    Ok(())
}

/// Coefficients for p1 = (I, J, α, β, γ) and p2 = (I, J, ᾱ, β̄, γ̄).
pub fn system_coefficients(p1: &FamilyParams, p2: &FamilyParams) -> Result<SystemCoefficients> {
    check_pair(p1, p2)?;
    if (p1.i(), p1.j()) != (p2.i(), p2.j()) {
        return Err(Error::InvalidParams(
            "the system needs equal index pairs".into(),
        ));
    }
    let f = p1.field();
    let i = p1.i() as i64;
    let k = p1.j() as i64 - i;
    let (a, b, c) = (p1.alpha(), p1.beta(), p1.gamma());
    let (ab, bb, cb) = (p2.alpha(), p2.beta(), p2.gamma());
    let a_ratio = f.frob(f.div(ab, a), -i);
    let rho = f.mul(f.frob(f.div(b, bb), k - i), a_ratio);
    let theta = f.mul(rho, f.frob(cb, k - i));
    let sigma = f.neg(f.mul(a_ratio, f.frob(c, -i)));
    let mu = f.frob(f.div(f.mul(ab, bb), cb), -i);
    let nu = f.frob(f.div(f.mul(c, ab), f.mul(cb, a)), -i);
    let ab_pow = f.mul(f.frob(ab, k), ab);
    let xi = f.neg(f.frob(f.div(f.mul(f.frob(b, k), ab_pow), f.mul(cb, a)), -i));
    Ok(SystemCoefficients {
        k,
        rho,
        theta,
        sigma,
        mu,
        nu,
        xi,
    })
}

/// Evaluates both equations, moved to one side, at (a11, a21).
pub fn system_residual(f: &Field, s: &SystemCoefficients, a11: Elem, a21: Elem) -> [Elem; 2] {
    let k = s.k;
    let e1 = f.add(
        f.add(
            f.mul(s.rho, f.frob(a11, 2 * k)),
            f.mul(s.theta, f.frob(a21, 2 * k)),
        ),
        f.mul(s.sigma, f.frob(a21, k)),
    );
    let e2 = f.add(
        f.add(f.mul(s.mu, a21), f.mul(s.nu, f.frob(a11, k))),
        f.mul(s.xi, f.frob(a21, 2 * k)),
    );
    [f.sub(e1, a11), f.sub(e2, a11)]
}

/// F_q-dimension of {(a11, a21) : both equations hold}.
pub fn system_kernel_dim(f: &Field, s: &SystemCoefficients) -> usize {
    let basis = f.fq_basis();
    let images: Vec<Vec<Elem>> = basis
        .iter()
        .map(|&b| (b, Elem::ZERO))
        .chain(basis.iter().map(|&b| (Elem::ZERO, b)))
        .map(|(x, y)| system_residual(f, s, x, y).to_vec())
        .collect();
    images.len() - linalg::fq_rank_vectors(f, &images)
}

/// Whether (x, y, z, w) ↦ (a11 x, a22 y, a33 z, a44 w) maps U(p1) onto U(p2).
pub fn check_diagonal_witness(p1: &FamilyParams, p2: &FamilyParams, w: &DiagonalWitness) -> bool {
    let d = [w.a11, w.a22, w.a33, w.a44];
    if d.iter().any(|x| x.is_zero()) {
        return false;
    }
    let mut m = vec![vec![Elem::ZERO; 4]; 4];
    for (t, &x) in d.iter().enumerate() {
        m[t][t] = x;
    }
    match p1.build_subspace().map_right(&m) {
        Ok(img) => img.same_set(&p2.build_subspace()),
        Err(_) => false,
    }
}

/// Candidates a11 with a11^{q^K − 1} = 1/ν^{q^K}, a21 = 0, completed to a
/// diagonal matrix.
fn diagonal_candidates(
    p1: &FamilyParams,
    p2: &FamilyParams,
    s: &SystemCoefficients,
) -> Vec<DiagonalWitness> {
    let f = p1.field();
    let target = f.inv(s.nu);
    let g = f.frob(f.div(p1.gamma(), p2.gamma()), -(p1.j() as i64));
    f.nonzero_elements()
        .filter(|&a| f.div(f.frob(a, s.k), a) == target)
        .map(|a11| DiagonalWitness {
            a11,
            a22: f.mul(g, a11),
            a33: f.frob(a11, p1.i() as i64),
            a44: f.frob(a11, p1.j() as i64),
        })
        .collect()
}

/// ρ = ν^{q^K+1} and ν a (q^K − 1)-th power. Both are stated on the
/// q^K-th powers, which is equivalent.
fn diagonal_conditions(f: &Field, s: &SystemCoefficients) -> bool {
    let qk_plus_1 = f.frob(s.nu, s.k);
    if s.rho != f.mul(qk_plus_1, s.nu) {
        return false;
    }
    let order = f.order() - 1;
    let kk = s.k.rem_euclid(f.n() as i64) as u32;
    let g = f.q().pow(kk.gcd(&f.n())) - 1;
    f.pow(s.nu, order / g.gcd(&order)) == Elem::ONE
}

pub fn equivalence_verdict(p1: &FamilyParams, p2: &FamilyParams) -> Result<EquivVerdict> {
    check_pair(p1, p2)?;
    let f = p1.field();
    let n = f.n();
    let in_range = [p1.i(), p1.j(), p2.i(), p2.j()]
        .iter()
        .all(|&t| 0 < t && 2 * t < n);
    let same_pair = (p1.i(), p1.j()) == (p2.i(), p2.j());
    let s = if same_pair {
        Some(system_coefficients(p1, p2)?)
    } else {
        None
    };
    let kernel_dim = s.as_ref().map(|s| system_kernel_dim(f, s));
    let verdict = |tag, witness, note: Option<String>| EquivVerdict {
        tag,
        kernel_dim,
        witness,
        note,
    };
    if !in_range {
        return Ok(verdict(
            EquivTag::Undetermined,
            None,
            Some(format!("indices outside 1..=(n-1)/2 for n = {n}")),
        ));
    }
    let Some(s) = s else {
        return Ok(verdict(EquivTag::InequivalentByIndexPair, None, None));
    };
    if kernel_dim == Some(0) {
        return Ok(verdict(EquivTag::InequivalentBySystem, None, None));
    }
    if diagonal_conditions(f, &s) {
        let candidates = diagonal_candidates(p1, p2, &s);
        if let Some(w) = candidates
            .into_iter()
            .find(|w| check_diagonal_witness(p1, p2, w))
        {
            return Ok(verdict(EquivTag::EquivalentByCorollary, Some(w), None));
        }
        return Ok(verdict(
            EquivTag::Undetermined,
            None,
            Some("diagonal conditions hold but no diagonal candidate maps U(p1) onto U(p2)".into()),
        ));
    }
    Ok(verdict(
        EquivTag::Undetermined,
        None,
        Some("nontrivial system kernel; diagonal conditions fail".into()),
    ))
}
