//! Multivariate linearized polynomials Σ f_{i,j} X_i^{q^j} over F_{q^n},
//! stored as a dense m × n coefficient grid with exponents reduced mod n.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{Elem, Field, FieldRef};
use crate::linalg::{self, Mat};

#[derive(Clone)]
pub struct LinPoly {
    field: FieldRef,
    coeffs: Vec<Vec<Elem>>,
}

impl PartialEq for LinPoly {
    fn eq(&self, other: &Self) -> bool {
        Field::same(&self.field, &other.field) && self.coeffs == other.coeffs
    }
}

impl Eq for LinPoly {}

impl fmt::Debug for LinPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinPoly({self})")
    }
}

impl fmt::Display for LinPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                if !first {
                    write!(f, " + ")?;
                }
                first = false;
                if c.0 != 1 {
                    write!(f, "{c}*")?;
                }
                write!(f, "X{}", i + 1)?;
                if j > 0 {
                    write!(f, "^q^{j}")?;
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Wire format: `{"m": .., "n": .., "coeffs": [[hex, ..], ..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinPolyJson {
    pub m: usize,
    pub n: usize,
    pub coeffs: Vec<Vec<Elem>>,
}

impl LinPoly {
    pub fn zero(field: &FieldRef, m: usize) -> LinPoly {
        LinPoly {
            field: field.clone(),
            coeffs: vec![vec![Elem::ZERO; field.n() as usize]; m],
        }
    }

    /// Builds from an m × n grid; entry (i, j) is the coefficient of X_i^{q^j}.
    pub fn from_grid(field: &FieldRef, coeffs: Vec<Vec<Elem>>) -> Result<LinPoly> {
        let n = field.n() as usize;
        if let Some(bad) = coeffs.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: bad.len(),
            });
        }
        if coeffs.iter().flatten().any(|c| c.0 as u64 >= field.order()) {
            return Err(Error::InvalidParams("coefficient outside the field".into()));
        }
        Ok(LinPoly {
            field: field.clone(),
            coeffs,
        })
    }

    /// c · X_i^{q^j} in m variables (`i` is 0-based, `j` reduced mod n).
    pub fn monomial(field: &FieldRef, m: usize, i: usize, j: i64, c: Elem) -> LinPoly {
        let mut f = LinPoly::zero(field, m);
        let j = j.rem_euclid(field.n() as i64) as usize;
        f.coeffs[i][j] = c;
        f
    }

    /// The variable X_i.
    pub fn var(field: &FieldRef, m: usize, i: usize) -> LinPoly {
        LinPoly::monomial(field, m, i, 0, Elem::ONE)
    }

    /// α · Tr(v_1 X_1 + … + v_m X_m).
    pub fn trace_form(field: &FieldRef, alpha: Elem, v: &[Elem]) -> LinPoly {
        let coeffs = v
            .iter()
            .map(|&vi| {
                (0..field.n() as i64)
                    .map(|j| field.mul(alpha, field.frob(vi, j)))
                    .collect()
            })
            .collect();
        LinPoly {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    /// Number of variables.
    pub fn m(&self) -> usize {
        self.coeffs.len()
    }

    pub fn n(&self) -> usize {
        self.field.n() as usize
    }

    pub fn coeffs(&self) -> &[Vec<Elem>] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize, j: usize) -> Elem {
        self.coeffs[i][j]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().flatten().all(|c| c.is_zero())
    }

    fn check_same(&self, other: &LinPoly) -> Result<()> {
        if !Field::same(&self.field, &other.field) {
            return Err(Error::FieldMismatch);
        }
        if self.m() != other.m() {
            return Err(Error::ArityMismatch {
                expected: self.m(),
                got: other.m(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &LinPoly) -> Result<LinPoly> {
        self.check_same(other)?;
        let f = &self.field;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.iter().zip(b).map(|(&x, &y)| f.add(x, y)).collect())
            .collect();
        Ok(LinPoly {
            field: f.clone(),
            coeffs,
        })
    }

    /// Multiplies every coefficient by `c` ∈ F_{q^n}.
    pub fn scale(&self, c: Elem) -> LinPoly {
        let f = &self.field;
        LinPoly {
            field: f.clone(),
            coeffs: self
                .coeffs
                .iter()
                .map(|r| r.iter().map(|&x| f.mul(c, x)).collect())
                .collect(),
        }
    }

    /// Σ_k c_k · polys_k; all polynomials must share field and arity.
    pub fn combination(field: &FieldRef, m: usize, polys: &[LinPoly], cs: &[Elem]) -> LinPoly {
        let mut out = LinPoly::zero(field, m);
        for (p, &c) in polys.iter().zip(cs) {
            if c.is_zero() {
                continue;
            }
            for (orow, prow) in out.coeffs.iter_mut().zip(&p.coeffs) {
                for (o, &x) in orow.iter_mut().zip(prow) {
                    *o = field.add(*o, field.mul(c, x));
                }
            }
        }
        out
    }

    /// f(v) = Σ f_{i,j} v_i^{q^j}.
    pub fn evaluate(&self, v: &[Elem]) -> Result<Elem> {
        if v.len() != self.m() {
            return Err(Error::ArityMismatch {
                expected: self.m(),
                got: v.len(),
            });
        }
        Ok(self.eval(v))
    }

    /// [`LinPoly::evaluate`] without the arity check.
    #[inline]
    pub fn eval(&self, v: &[Elem]) -> Elem {
        let f = &self.field;
        let mut acc = Elem::ZERO;
        for (row, &x) in self.coeffs.iter().zip(v) {
            if x.is_zero() {
                continue;
            }
            for (j, &c) in row.iter().enumerate() {
                if !c.is_zero() {
                    acc = f.add(acc, f.mul(c, f.frob(x, j as i64)));
                }
            }
        }
        acc
    }

    /// ev_B(f): the values f(β_j e_i) at the fixed F_q-basis, position i·n + j.
    pub fn ev_basis(&self) -> Vec<Elem> {
        let f = &self.field;
        let m = self.m();
        let mut point = vec![Elem::ZERO; m];
        let mut out = Vec::with_capacity(m * self.n());
        for i in 0..m {
            for &b in f.fq_basis() {
                point[i] = b;
                out.push(self.eval(&point));
            }
            point[i] = Elem::ZERO;
        }
        out
    }

    /// Inverse of [`LinPoly::ev_basis`], through the Moore matrix β_l^{q^j}.
    pub fn from_ev_basis(field: &FieldRef, m: usize, values: &[Elem]) -> Result<LinPoly> {
        let n = field.n() as usize;
        if values.len() != n * m {
            return Err(Error::DimensionMismatch {
                expected: n * m,
                got: values.len(),
            });
        }
        let inv = moore_inverse(field);
        let coeffs = (0..m)
            .map(|i| {
                let w = &values[i * n..(i + 1) * n];
                (0..n)
                    .map(|j| {
                        (0..n).fold(Elem::ZERO, |acc, l| {
                            field.add(acc, field.mul(inv[j][l], w[l]))
                        })
                    })
                    .collect()
            })
            .collect();
        Ok(LinPoly {
            field: field.clone(),
            coeffs,
        })
    }

    /// The n × nm matrix over F_q of f in the basis B = (β_j e_i): column
    /// i·n + j holds the F_q-coordinates of f(β_j e_i).
    pub fn to_matrix(&self) -> Mat {
        let cols: Mat = self
            .ev_basis()
            .into_iter()
            .map(|y| self.field.fq_coords(y))
            .collect();
        linalg::transpose(&cols)
    }

    /// F_q-rank of the induced map (F_{q^n})^m → F_{q^n}.
    pub fn rank(&self) -> usize {
        linalg::fq_rank_elems(&self.field, &self.ev_basis())
    }

    /// If f = α · Tr(v · X) for some α ≠ 0, v ≠ 0, returns such a pair.
    pub fn rank_one_trace_form(&self) -> Option<(Elem, Vec<Elem>)> {
        let f = &self.field;
        let n = self.n();
        let i0 = self.coeffs.iter().position(|r| !r[0].is_zero())?;
        let a0 = self.coeffs[i0][0];
        // f_{i0,1} / f_{i0,0} = v_{i0}^{q-1}
        let v0 = if n == 1 {
            Elem::ONE
        } else {
            let ratio = f.div(self.coeffs[i0][1], a0);
            f.solve_pow(ratio, f.q() - 1)?
        };
        if v0.is_zero() {
            return None;
        }
        let alpha = f.div(a0, v0);
        let v: Vec<Elem> = self.coeffs.iter().map(|r| f.div(r[0], alpha)).collect();
        let candidate = LinPoly::trace_form(&self.field, alpha, &v);
        (candidate.coeffs == self.coeffs).then_some((alpha, v))
    }

    /// f ⋆ g = Σ f_{i,j} g_{i,j}.
    pub fn star(&self, other: &LinPoly) -> Result<Elem> {
        self.check_same(other)?;
        let f = &self.field;
        Ok(self
            .coeffs
            .iter()
            .flatten()
            .zip(other.coeffs.iter().flatten())
            .fold(Elem::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b))))
    }

    fn univariate(&self) -> Result<&[Elem]> {
        if self.m() != 1 {
            return Err(Error::ArityMismatch {
                expected: 1,
                got: self.m(),
            });
        }
        Ok(&self.coeffs[0])
    }

    /// Adjoint under the trace form: Σ a_j X^{q^j} ↦ Σ a_j^{q^{n-j}} X^{q^{n-j}}.
    pub fn adjoint(&self) -> Result<LinPoly> {
        let a = self.univariate()?;
        let f = &self.field;
        let n = self.n();
        let mut out = vec![Elem::ZERO; n];
        for (j, &c) in a.iter().enumerate() {
            let k = (n - j) % n;
            out[k] = f.frob(c, k as i64);
        }
        Ok(LinPoly {
            field: f.clone(),
            coeffs: vec![out],
        })
    }

    /// f ∘ g, reduced modulo X^{q^n} − X.
    pub fn compose(&self, g: &LinPoly) -> Result<LinPoly> {
        let a = self.univariate()?;
        let b = g.univariate()?;
        if !Field::same(&self.field, &g.field) {
            return Err(Error::FieldMismatch);
        }
        let f = &self.field;
        let n = self.n();
        let mut out = vec![Elem::ZERO; n];
        for (j, &aj) in a.iter().enumerate() {
            if aj.is_zero() {
                continue;
            }
            for (k, &bk) in b.iter().enumerate() {
                let t = f.mul(aj, f.frob(bk, j as i64));
                out[(j + k) % n] = f.add(out[(j + k) % n], t);
            }
        }
        Ok(LinPoly {
            field: f.clone(),
            coeffs: vec![out],
        })
    }

    pub fn to_json(&self) -> LinPolyJson {
        LinPolyJson {
            m: self.m(),
            n: self.n(),
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn from_json(field: &FieldRef, j: &LinPolyJson) -> Result<LinPoly> {
        if j.n != field.n() as usize {
            return Err(Error::DimensionMismatch {
                expected: field.n() as usize,
                got: j.n,
            });
        }
        if j.coeffs.len() != j.m {
            return Err(Error::ArityMismatch {
                expected: j.m,
                got: j.coeffs.len(),
            });
        }
        LinPoly::from_grid(field, j.coeffs.clone())
    }
}

/// Inverse of the Moore matrix M_{l,j} = β_l^{q^j}; indexed [j][l].
fn moore_inverse(field: &Field) -> Mat {
    let n = field.n() as usize;
    let moore: Mat = field
        .fq_basis()
        .iter()
        .map(|&b| (0..n).map(|j| field.frob(b, j as i64)).collect())
        .collect();
    linalg::invert(field, &moore).expect("Moore matrix of a basis is invertible")
}

#[cfg(test)]
mod tests;
