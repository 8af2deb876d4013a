//! The subspaces
//! U = {(x, y, x^{q^I} + αy^{q^J}, x^{q^J} + βy^{q^I} + γy^{q^J}) : x, y ∈ F_{q^n}}
//! of V(4, q^n): root criteria for the projective polynomial P, verification
//! of scatteredness, evasiveness, cutting and indecomposability, triple
//! counts, ordinary duality, extensions and equivalence.

mod equiv;

use std::fmt;

use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Budget, Error, Result};
use crate::gf::{Elem, Field, FieldRef, Poly};
use crate::linalg;
use crate::linpoly::LinPoly;
use crate::numtheory::euler_phi;
use crate::rankcode::RankCode;
use crate::subspace::{self, Decomposability, FqSubspace, FqnSubspace, IndecomposabilityReport};

pub use equiv::{
    check_diagonal_witness, equivalence_verdict, system_coefficients, system_kernel_dim,
    system_residual, DiagonalWitness, EquivTag, EquivVerdict, SystemCoefficients,
};

/// Parameters (I, J, α, β, γ) over a fixed F_{q^n}.
#[derive(Clone, Debug)]
pub struct FamilyParams {
    field: FieldRef,
    i: u32,
    j: u32,
    alpha: Elem,
    beta: Elem,
    gamma: Elem,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParamsJson {
    pub field: String,
    pub q: u64,
    pub n: u32,
    #[serde(rename = "I")]
    pub i: u32,
    #[serde(rename = "J")]
    pub j: u32,
    pub alpha: Elem,
    pub beta: Elem,
    pub gamma: Elem,
}

/// (u, v) ≠ 0 and λ ∉ F_q with λ·(u, v, f_1(u, v), f_2(u, v)) ∈ U.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyWitness {
    pub u: Elem,
    pub v: Elem,
    pub lambda: Elem,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScatteredReport {
    pub root_free: bool,
    pub gcd_ok: bool,
    pub scattered: bool,
    /// Root-free and gcd(I, J, n) = 1: scatteredness is predicted.
    pub sufficiency_applies: bool,
    /// gcd(I, J, n) = 1 and max{I, J} ≤ n/4: scattered implies root-free.
    pub converse_applies: bool,
    pub witness: Option<FamilyWitness>,
    pub contradiction: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyEvasiveReport {
    pub root_free: bool,
    /// 2·max{I, J}.
    pub bound: usize,
    pub max_dim: usize,
    pub evasive: bool,
    pub witness: Option<FqnSubspace>,
    pub contradiction: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CuttingReport {
    /// Root-free and max{I, J} ≤ (n − 1)/2.
    pub applies: bool,
    pub cutting: bool,
    pub contradiction: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct IndecomposableReport {
    /// gcd(I, J, n) = 1, root-free and max{I, J} ≤ (n − 1)/2.
    pub applies: bool,
    /// `None` when U is not maximum scattered.
    pub criterion: Option<IndecomposabilityReport>,
    pub contradiction: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TripleCount {
    pub pairs_scanned: u128,
    pub root_free_pairs: u128,
    pub exact: u128,
    /// (q^n − 1)φ(q² − 1)/2, present when gcd(K, n) = 1 and (q + 1) ∤ n.
    pub lower_bound: Option<u128>,
}

pub struct DualParams {
    pub params: FamilyParams,
    /// The orthogonal complement as a set.
    pub exact_dual: FqSubspace,
    /// v ↦ v·M sends `exact_dual` onto the family subspace of `params`.
    pub equivalence: Vec<Vec<Elem>>,
}

impl FamilyParams {
    pub fn new(
        field: &FieldRef,
        i: u32,
        j: u32,
        alpha: Elem,
        beta: Elem,
        gamma: Elem,
    ) -> Result<FamilyParams> {
        let n = field.n();
        if i == j || i == 0 || j == 0 || i >= n || j >= n {
            return Err(Error::InvalidParams(format!(
                "need distinct I, J in 1..{n}, got I={i}, J={j}"
            )));
        }
        if alpha.is_zero() || beta.is_zero() || gamma.is_zero() {
            return Err(Error::InvalidParams(
                "alpha, beta, gamma must be nonzero".into(),
            ));
        }
        if [alpha, beta, gamma]
            .iter()
            .any(|x| x.0 as u64 >= field.order())
        {
            return Err(Error::InvalidParams("coefficient outside the field".into()));
        }
        Ok(FamilyParams {
            field: field.clone(),
            i,
            j,
            alpha,
            beta,
            gamma,
        })
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn i(&self) -> u32 {
        self.i
    }

    pub fn j(&self) -> u32 {
        self.j
    }

    pub fn alpha(&self) -> Elem {
        self.alpha
    }

    pub fn beta(&self) -> Elem {
        self.beta
    }

    pub fn gamma(&self) -> Elem {
        self.gamma
    }

    /// K = |J − I|.
    pub fn shift(&self) -> u32 {
        self.i.abs_diff(self.j)
    }

    pub fn i_less_j(&self) -> bool {
        self.i < self.j
    }

    pub fn max_index(&self) -> u32 {
        self.i.max(self.j)
    }

    /// I or J equals n − 1, outside the strict range I, J < n − 1.
    pub fn boundary(&self) -> bool {
        self.max_index() == self.field.n() - 1
    }

    pub fn gcd_ok(&self) -> bool {
        self.i.gcd(&self.j).gcd(&self.field.n()) == 1
    }

    /// The same parameters over another field (used after embedding).
    pub fn with_coefficients(&self, alpha: Elem, beta: Elem, gamma: Elem) -> Result<FamilyParams> {
        FamilyParams::new(&self.field, self.i, self.j, alpha, beta, gamma)
    }

    /// (x^{q^I} + αy^{q^J}, x^{q^J} + βy^{q^I} + γy^{q^J}).
    pub fn polys(&self) -> [LinPoly; 2] {
        let f = &self.field;
        let (i, j) = (self.i as i64, self.j as i64);
        let mono = |var, e, c| LinPoly::monomial(f, 2, var, e, c);
        let f1 = mono(0, i, Elem::ONE).add(&mono(1, j, self.alpha)).unwrap();
        let f2 = mono(0, j, Elem::ONE)
            .add(&mono(1, i, self.beta))
            .unwrap()
            .add(&mono(1, j, self.gamma))
            .unwrap();
        [f1, f2]
    }

    pub fn point(&self, x: Elem, y: Elem) -> [Elem; 4] {
        let f = &self.field;
        let (i, j) = (self.i as i64, self.j as i64);
        let f1 = f.add(f.frob(x, i), f.mul(self.alpha, f.frob(y, j)));
        let f2 = f.add(
            f.add(f.frob(x, j), f.mul(self.beta, f.frob(y, i))),
            f.mul(self.gamma, f.frob(y, j)),
        );
        [x, y, f1, f2]
    }

    pub fn build_subspace(&self) -> FqSubspace {
        FqSubspace::from_poly_tuple(&self.field, &[0, 0], &self.polys())
            .expect("family polynomials have two variables")
    }

    /// ⟨X_1, X_2, f_1, f_2⟩, whose associated subspace is U itself.
    pub fn code(&self) -> RankCode {
        let f = &self.field;
        let [f1, f2] = self.polys();
        RankCode::new(
            f,
            2,
            vec![LinPoly::var(f, 2, 0), LinPoly::var(f, 2, 1), f1, f2],
        )
        .expect("X_1, X_2, f_1, f_2 are independent")
    }

    pub fn to_json(&self) -> ParamsJson {
        ParamsJson {
            field: self.field.descriptor(),
            q: self.field.q(),
            n: self.field.n(),
            i: self.i,
            j: self.j,
            alpha: self.alpha,
            beta: self.beta,
            gamma: self.gamma,
        }
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            out,
            "q={} n={} I={} J={} alpha={} beta={} gamma={}",
            self.field.q(),
            self.field.n(),
            self.i,
            self.j,
            self.alpha,
            self.beta,
            self.gamma
        )
    }
}

// ---- the polynomial P ----------------------------------------------------

/// P = X^{q^K+1} + γX − αβ if I < J, and X^{q^K+1} + γX^{q^K} − αβ if I > J.
pub fn p_polynomial(params: &FamilyParams) -> Poly {
    let f = &params.field;
    let qk = f.q().pow(params.shift());
    let c = f.neg(f.mul(params.alpha, params.beta));
    let gamma_exp = if params.i_less_j() { 1 } else { qk };
    Poly::new(f, [(qk + 1, Elem::ONE), (gamma_exp, params.gamma), (0, c)])
}

/// Whether P has a root in F_{q^n}, by evaluation at every element.
pub fn p_has_root(params: &FamilyParams, budget: Budget) -> Result<bool> {
    let f = &params.field;
    budget.check(f.order() as u128)?;
    let p = p_polynomial(params);
    Ok(f.elements().any(|x| p.eval(f, x).is_zero()))
}

/// x^{q^K+1} + γx (I < J) or x^{q^K+1} + γx^{q^K} (I > J): P(x) = this − c.
#[inline]
fn p_head(f: &Field, k: i64, i_less_j: bool, gamma: Elem, x: Elem) -> Elem {
    let xk = f.frob(x, k);
    let lin = if i_less_j { x } else { xk };
    f.add(f.mul(xk, x), f.mul(gamma, lin))
}

/// Root-freeness from the σ-twisted companion product A_f, σ = q^K-Frobenius.
///
/// Returns true when P has no roots in F_{q^n}. For I > J the substitution
/// X = 1/Y turns P into Y^{q^K+1} − (γ/c)Y − 1/c, which is handled as the
/// I < J shape with (c, γ) replaced by (1/c, −γ/c).
pub fn companion_root_free(params: &FamilyParams) -> Result<bool> {
    let f = &params.field;
    companion_root_free_pair(
        f,
        params.shift(),
        params.i_less_j(),
        f.mul(params.alpha, params.beta),
        params.gamma,
    )
}

/// [`companion_root_free`] for P with αβ = c.
pub fn companion_root_free_pair(
    f: &Field,
    k: u32,
    i_less_j: bool,
    c: Elem,
    gamma: Elem,
) -> Result<bool> {
    let n = f.n();
    if k.gcd(&n) != 1 {
        return Err(Error::NonCoprimeShift { k, n });
    }
    let (c, gamma) = if i_less_j {
        (c, gamma)
    } else {
        (f.inv(c), f.neg(f.div(gamma, c)))
    };
    let comp = [[Elem::ZERO, c], [Elem::ONE, f.neg(gamma)]];
    let mut a = [[Elem::ONE, Elem::ZERO], [Elem::ZERO, Elem::ONE]];
    for t in 0..n as i64 {
        let e = t * k as i64;
        let twisted = comp.map(|row| row.map(|x| f.frob(x, e)));
        a = crate::gf::mat2_mul(f, a, twisted);
    }
    let has_eigenvalue = f.fq_elements().iter().any(|&t| {
        let d0 = f.sub(a[0][0], t);
        let d1 = f.sub(a[1][1], t);
        f.sub(f.mul(d0, d1), f.mul(a[0][1], a[1][0])).is_zero()
    });
    Ok(!has_eigenvalue)
}

/// For each γ ∈ F*, the set of c ∈ F* for which P has a root, as a bitmap
/// indexed by c. Rows are indexed by γ.
fn rooted_table(f: &Field, k: u32, i_less_j: bool, budget: Budget) -> Result<Vec<Vec<bool>>> {
    let order = f.order();
    budget.check(order as u128 * order as u128)?;
    Ok((1..order as u32)
        .into_par_iter()
        .map(|g| {
            let mut hit = vec![false; order as usize];
            for x in f.elements() {
                hit[p_head(f, k as i64, i_less_j, Elem(g), x).0 as usize] = true;
            }
            hit
        })
        .collect())
}

/// Exact number of triples (α, β, γ) ∈ (F*)³ with P root-free, for the
/// given index orientation and shift K.
pub fn count_root_free_triples(
    field: &FieldRef,
    i: u32,
    j: u32,
    budget: Budget,
) -> Result<TripleCount> {
    if i == j {
        return Err(Error::InvalidParams("I and J must differ".into()));
    }
    let k = i.abs_diff(j);
    let table = rooted_table(field, k, i < j, budget)?;
    let root_free_pairs: u128 = table
        .iter()
        .map(|row| row[1..].iter().filter(|&&h| !h).count() as u128)
        .sum();
    let units = field.order() as u128 - 1;
    let q = field.q();
    let n = field.n() as u64;
    let lower_bound = (k.gcd(&field.n()) == 1 && !n.is_multiple_of(q + 1))
        .then(|| units * euler_phi(q * q - 1) as u128 / 2);
    Ok(TripleCount {
        pairs_scanned: units * units,
        root_free_pairs,
        exact: root_free_pairs * units,
        lower_bound,
    })
}

/// All pairs (c, γ) ∈ (F*)² with P root-free, in increasing (γ, c) order.
pub fn root_free_pairs(
    field: &FieldRef,
    i: u32,
    j: u32,
    budget: Budget,
) -> Result<Vec<(Elem, Elem)>> {
    let table = rooted_table(field, i.abs_diff(j), i < j, budget)?;
    Ok(table
        .iter()
        .enumerate()
        .flat_map(|(g, row)| {
            row.iter()
                .enumerate()
                .skip(1)
                .filter(|(_, &h)| !h)
                .map(move |(c, _)| (Elem(c as u32), Elem(g as u32 + 1)))
        })
        .collect())
}

// ---- scatteredness -------------------------------------------------------

/// E_λ(u, v) = (f_1(λu, λv) − λf_1(u, v), f_2(λu, λv) − λf_2(u, v)),
/// expanded termwise.
fn e_lambda(p: &FamilyParams, l: Elem, u: Elem, v: Elem) -> [Elem; 2] {
    let f = &p.field;
    let (i, j) = (p.i as i64, p.j as i64);
    let (li, lj) = (f.frob(l, i), f.frob(l, j));
    let (ui, uj) = (f.frob(u, i), f.frob(u, j));
    let (vi, vj) = (f.frob(v, i), f.frob(v, j));
    let e1 = f.sub(
        f.add(f.mul(lj, f.mul(p.alpha, vj)), f.mul(li, ui)),
        f.mul(l, f.add(ui, f.mul(p.alpha, vj))),
    );
    let second = f.add(f.add(uj, f.mul(p.beta, vi)), f.mul(p.gamma, vj));
    let e2 = f.sub(
        f.add(
            f.mul(lj, f.add(uj, f.mul(p.gamma, vj))),
            f.mul(li, f.mul(p.beta, vi)),
        ),
        f.mul(l, second),
    );
    [e1, e2]
}

/// Scans λ ∉ F_q for a nontrivial kernel of (u, v) ↦ E_λ(u, v); returns the
/// witness for the smallest such λ.
pub fn family_lambda_scan(params: &FamilyParams, budget: Budget) -> Result<Option<FamilyWitness>> {
    let f = &params.field;
    budget.check(f.order() as u128)?;
    let n = f.n() as usize;
    let basis = f.fq_basis();
    let unknowns: Vec<(Elem, Elem)> = basis
        .iter()
        .map(|&b| (b, Elem::ZERO))
        .chain(basis.iter().map(|&b| (Elem::ZERO, b)))
        .collect();
    let lambdas: Vec<Elem> = f.nonzero_elements().filter(|&l| !f.in_fq(l)).collect();
    Ok(lambdas.into_par_iter().find_map_first(|l| {
        let images: Vec<Vec<Elem>> = unknowns
            .iter()
            .map(|&(u, v)| e_lambda(params, l, u, v).to_vec())
            .collect();
        if linalg::fq_rank_vectors(f, &images) == 2 * n {
            return None;
        }
        let sys = linalg::transpose(&linalg::fq_expand(f, &images));
        let ker = linalg::kernel(f, &sys, 2 * n);
        let c = &ker[0];
        let u = f.from_fq_coords(&c[..n]);
        let v = f.from_fq_coords(&c[n..]);
        Some(FamilyWitness { u, v, lambda: l })
    }))
}

/// Direct substitution: λ ∉ F_q, (u, v) ≠ 0 and f_t(λu, λv) = λ f_t(u, v).
pub fn check_family_witness(params: &FamilyParams, w: &FamilyWitness) -> bool {
    let f = &params.field;
    if f.in_fq(w.lambda) || (w.u.is_zero() && w.v.is_zero()) {
        return false;
    }
    let base = params.point(w.u, w.v);
    let scaled = params.point(f.mul(w.lambda, w.u), f.mul(w.lambda, w.v));
    (2..4).all(|t| scaled[t] == f.mul(w.lambda, base[t]))
}

/// Scatteredness by two independent λ-scans (on the subspace basis and on
/// the E_λ system), compared against the root criteria.
pub fn verify_scattered(params: &FamilyParams, budget: Budget) -> Result<ScatteredReport> {
    let n = params.field.n();
    let root_free = !p_has_root(params, budget)?;
    let gcd_ok = params.gcd_ok();
    let u = params.build_subspace();
    let generic = u.lambda_scan(budget)?;
    let special = family_lambda_scan(params, budget)?;
    if generic.is_some() != special.is_some() {
        return Err(Error::InternalInconsistency(format!(
            "λ-scans disagree for {params}: subspace {}, family {}",
            generic.is_none(),
            special.is_none()
        )));
    }
    if let Some(g) = &generic {
        let w = FamilyWitness {
            u: g.u[0],
            v: g.u[1],
            lambda: g.lambda,
        };
        if !u.check_lambda_witness(g) || !check_family_witness(params, &w) {
            return Err(Error::InternalInconsistency(format!(
                "subspace λ-witness fails substitution for {params}"
            )));
        }
    }
    if let Some(w) = &special {
        if !check_family_witness(params, w) {
            return Err(Error::InternalInconsistency(format!(
                "family λ-witness fails substitution for {params}"
            )));
        }
    }
    let scattered = special.is_none();
    let sufficiency_applies = gcd_ok && root_free;
    let converse_applies = gcd_ok && 4 * params.max_index() <= n;
    let contradiction = if sufficiency_applies && !scattered {
        Some("P is root-free and gcd(I, J, n) = 1, yet U is not scattered".to_string())
    } else if converse_applies && scattered && !root_free {
        Some("max{I, J} <= n/4 and U is scattered, yet P has a root".to_string())
    } else {
        None
    };
    Ok(ScatteredReport {
        root_free,
        gcd_ok,
        scattered,
        sufficiency_applies,
        converse_applies,
        witness: special,
        contradiction,
    })
}

/// Maximum F_q-dimension of U ∩ H over all F_{q^n}-planes H, against 2·max{I, J}.
pub fn verify_evasive(params: &FamilyParams, budget: Budget) -> Result<FamilyEvasiveReport> {
    let root_free = !p_has_root(params, budget)?;
    let bound = 2 * params.max_index() as usize;
    let rep = params.build_subspace().max_intersection(2, budget)?;
    let evasive = rep.max_dim <= bound;
    let contradiction = (root_free && !evasive).then(|| {
        format!(
            "P is root-free, yet a plane meets U in dimension {} > {bound}",
            rep.max_dim
        )
    });
    Ok(FamilyEvasiveReport {
        root_free,
        bound,
        max_dim: rep.max_dim,
        evasive,
        witness: rep.witness,
        contradiction,
    })
}

pub fn verify_cutting(params: &FamilyParams, budget: Budget) -> Result<CuttingReport> {
    let n = params.field.n();
    let applies = !p_has_root(params, budget)? && 2 * params.max_index() < n;
    let cutting = params.build_subspace().is_cutting(budget)?;
    let contradiction = (applies && !cutting)
        .then(|| "P is root-free and max{I, J} <= (n-1)/2, yet U is not cutting".to_string());
    Ok(CuttingReport {
        applies,
        cutting,
        contradiction,
    })
}

pub fn verify_indecomposable(
    params: &FamilyParams,
    budget: Budget,
) -> Result<IndecomposableReport> {
    let n = params.field.n();
    let applies = params.gcd_ok() && !p_has_root(params, budget)? && 2 * params.max_index() < n;
    let criterion = match params
        .build_subspace()
        .indecomposability_criterion(1, budget)
    {
        Ok(r) => Some(r),
        Err(Error::NotMaximumScattered(_)) => None,
        Err(e) => return Err(e),
    };
    let decided = criterion
        .as_ref()
        .is_some_and(|r| r.verdict == Decomposability::Indecomposable);
    let contradiction = (applies && !decided)
        .then(|| "hypotheses give (2, n-1)-evasiveness, yet the criterion is not met".to_string());
    Ok(IndecomposableReport {
        applies,
        criterion,
        contradiction,
    })
}

// ---- duality -------------------------------------------------------------

/// The orthogonal complement in closed form, together with the parameters
/// (n − I, n − J, −1, −β^{q^{n−I}}/α^{q^{n−J}}, −γ^{q^{n−J}}/α^{q^{n−J}}) of
/// an equivalent member of the family and the equivalence itself.
pub fn ordinary_dual_params(params: &FamilyParams) -> Result<DualParams> {
    let f = &params.field;
    let n = f.n() as i64;
    let (i, j) = (params.i as i64, params.j as i64);
    let (ni, nj) = (n - i, n - j);
    let a = f.frob(params.alpha, nj);
    let b = f.frob(params.beta, ni);
    let c = f.frob(params.gamma, nj);
    let mono = |var, e, c| LinPoly::monomial(f, 2, var, e, c);
    let g3 = mono(0, ni, b)
        .add(&mono(0, nj, c))?
        .add(&mono(1, nj, f.neg(a)))?;
    let g4 = mono(1, ni, Elem::ONE).add(&mono(0, nj, f.neg(Elem::ONE)))?;
    let exact_dual = FqSubspace::from_poly_tuple(f, &[0, 0], &[g3, g4])?;
    let computed = subspace::ordinary_dual(&params.build_subspace())?;
    if !computed.same_set(&exact_dual) {
        return Err(Error::InternalInconsistency(format!(
            "closed-form dual differs from the computed dual for {params}"
        )));
    }
    let dual = FamilyParams::new(
        f,
        ni as u32,
        nj as u32,
        f.neg(Elem::ONE),
        f.neg(f.div(b, a)),
        f.neg(f.div(c, a)),
    )?;
    // (x, y, z, w) ↦ (y, x, w, −z/α^{q^{n−J}})
    let mut m = vec![vec![Elem::ZERO; 4]; 4];
    m[1][0] = Elem::ONE;
    m[0][1] = Elem::ONE;
    m[3][2] = Elem::ONE;
    m[2][3] = f.neg(f.inv(a));
    if !exact_dual.map_right(&m)?.same_set(&dual.build_subspace()) {
        return Err(Error::InternalInconsistency(format!(
            "dual parameters are not equivalent to the dual of {params}"
        )));
    }
    Ok(DualParams {
        params: dual,
        exact_dual,
        equivalence: m,
    })
}

// ---- extensions ----------------------------------------------------------

/// The image of F_{q^n} inside `big`: sends the class of X to the least
/// root of the small field's modulus.
pub fn embedding<'a>(small: &'a Field, big: &FieldRef) -> Result<impl Fn(Elem) -> Elem + 'a> {
    if small.p() != big.p() || !(big.h() * big.n()).is_multiple_of(small.h() * small.n()) {
        return Err(Error::NoCompatibleEmbedding);
    }
    let modulus: Vec<Elem> = small
        .modulus()
        .iter()
        .map(|&c| big.from_int(c as i64))
        .collect();
    let root = big
        .elements()
        .find(|&r| {
            modulus
                .iter()
                .rev()
                .fold(Elem::ZERO, |acc, &c| big.add(big.mul(acc, r), c))
                .is_zero()
        })
        .ok_or(Error::NoCompatibleEmbedding)?;
    let powers: Vec<Elem> = (0..small.h() * small.n())
        .scan(Elem::ONE, |acc, _| {
            let cur = *acc;
            *acc = big.mul(*acc, root);
            Some(cur)
        })
        .collect();
    let big = big.clone();
    Ok(move |x: Elem| {
        small
            .digits(x)
            .iter()
            .zip(&powers)
            .fold(Elem::ZERO, |acc, (&d, &pw)| {
                big.add(acc, big.mul(big.from_int(d as i64), pw))
            })
    })
}

/// The same I, J, α, β, γ over F_{q^{nℓ}} (coefficients embedded).
pub fn extend_params(params: &FamilyParams, ell: u32) -> Result<FamilyParams> {
    let f = &params.field;
    if ell == 0 {
        return Err(Error::InvalidParams(
            "extension degree must be positive".into(),
        ));
    }
    let big = Field::new(f.p(), f.h(), f.n() * ell)?;
    let emb = embedding(f, &big)?;
    FamilyParams::new(
        &big,
        params.i,
        params.j,
        emb(params.alpha),
        emb(params.beta),
        emb(params.gamma),
    )
}

/// Scatteredness of the family rebuilt over F_{q^{nℓ}}.
pub fn verify_extension(
    params: &FamilyParams,
    ell: u32,
    budget: Budget,
) -> Result<ScatteredReport> {
    verify_scattered(&extend_params(params, ell)?, budget)
}
