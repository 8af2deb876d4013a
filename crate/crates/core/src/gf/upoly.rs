use std::fmt;

use serde::Serialize;

use super::{Elem, Field};

/// Sparse univariate polynomial over F_{q^n}; terms sorted by decreasing
/// exponent, no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Poly {
    terms: Vec<(u64, Elem)>,
}

impl Poly {
    pub fn new(field: &Field, terms: impl IntoIterator<Item = (u64, Elem)>) -> Poly {
        let mut acc: Vec<(u64, Elem)> = Vec::new();
        for (e, c) in terms {
            match acc.iter_mut().find(|(x, _)| *x == e) {
                Some(slot) => slot.1 = field.add(slot.1, c),
                None => acc.push((e, c)),
            }
        }
        acc.retain(|(_, c)| !c.is_zero());
        acc.sort_by_key(|t| std::cmp::Reverse(t.0));
        Poly { terms: acc }
    }

    pub fn terms(&self) -> &[(u64, Elem)] {
        &self.terms
    }

    pub fn degree(&self) -> Option<u64> {
        self.terms.first().map(|t| t.0)
    }

    /// Coefficient of X^e.
    pub fn coeff(&self, e: u64) -> Elem {
        self.terms
            .iter()
            .find(|t| t.0 == e)
            .map_or(Elem::ZERO, |t| t.1)
    }

    pub fn eval(&self, field: &Field, x: Elem) -> Elem {
        self.terms.iter().fold(Elem::ZERO, |acc, &(e, c)| {
            field.add(acc, field.mul(c, field.pow(x, e)))
        })
    }

    /// The roots in F_{q^n}, by exhaustive evaluation.
    pub fn roots(&self, field: &Field) -> Vec<Elem> {
        field
            .elements()
            .filter(|&x| self.eval(field, x).is_zero())
            .collect()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match (*e, c.0) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => write!(f, "X")?,
                (1, _) => write!(f, "{c}*X")?,
                (_, 1) => write!(f, "X^{e}")?,
                _ => write!(f, "{c}*X^{e}")?,
            }
        }
        Ok(())
    }
}
