//! Nilpotent Lie algebras presented by their Chevalley-Eilenberg
//! differential on degree-1 covectors, together with the operators the rest
//! of the library needs: the full differential, interior products already
//! live on forms, the Lie derivative via the Cartan formula, and the
//! Courant bracket on invariant sections of `T + T*`.

use crate::error::Error;
use crate::exterior::{Form, GVector};
use crate::scalar::Scalar;

/// A Lie algebra of even dimension `2n`, given by `d e^i` for each
/// generator. Construction checks `d o d = 0` on generators, which is the
/// Jacobi identity in this presentation.
#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebra {
    dim: usize,
    d1: Vec<Form>,
}

impl LieAlgebra {
    pub fn new(dim: usize, d1: Vec<Form>) -> Result<Self, Error> {
        if dim == 0 || dim % 2 != 0 {
            return Err(Error::OddDimension { dim });
        }
        if d1.len() != dim {
            return Err(Error::DimensionMismatch {
                msg: format!("got {} differentials for dimension {}", d1.len(), dim),
            });
        }
        for (i, f) in d1.iter().enumerate() {
            if let Some(top) = f.max_index() {
                if top as usize > dim {
                    return Err(Error::IndexOutOfRange { index: top as usize, dim });
                }
            }
            if !f.is_zero() && f.homogeneous_degree() != Some(2) {
                return Err(Error::MalformedSalamon {
                    entry: format!("d e{}", i + 1),
                    msg: "differential of a generator must be a 2-form".into(),
                });
            }
        }
        let alg = LieAlgebra { dim, d1 };
        for i in 0..dim {
            if !alg.d(&alg.d1[i]).is_zero() {
                return Err(Error::JacobiFailed { generator: i + 1 });
            }
        }
        Ok(alg)
    }

    pub fn abelian(dim: usize) -> Self {
        LieAlgebra::new(dim, vec![Form::zero(); dim]).expect("abelian algebra is valid")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Half the dimension.
    pub fn n(&self) -> usize {
        self.dim / 2
    }

    pub fn d_generator(&self, i: usize) -> &Form {
        &self.d1[i]
    }

    /// Chevalley-Eilenberg differential, extended as an antiderivation:
    /// for an ascending monomial, `d(e^{i1..ik}) = sum_j (-1)^(j-1)
    /// d(e^{ij}) ^ e^{i1..^ij..ik}`.
    pub fn d(&self, f: &Form) -> Form {
        let mut out = Form::zero();
        for (mask, coeff) in f.terms() {
            let mut sign_flip = false;
            let mut rest = mask;
            while rest != 0 {
                let j = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let dj = &self.d1[j];
                if !dj.is_zero() {
                    let others = Form::monomial(mask & !(1 << j), Scalar::one());
                    let mut c = coeff.clone();
                    if sign_flip {
                        c = -c;
                    }
                    out = out.add(&dj.wedge(&others).scale(&c));
                }
                sign_flip = !sign_flip;
            }
        }
        out
    }

    /// Cartan formula `L_X = i_X d + d i_X` on invariant forms.
    pub fn lie_derivative(&self, x: &[Scalar], f: &Form) -> Form {
        let a = self.d(f).contract_vector(x);
        let b = self.d(&f.contract_vector(x));
        a.add(&b)
    }

    /// Lie bracket of invariant vectors: `[e_i, e_j] = -sum_k (d e^k)(e_i, e_j) e_k`,
    /// extended bilinearly.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (k, dk) in self.d1.iter().enumerate() {
            if dk.is_zero() {
                continue;
            }
            // (d e^k)(X, Y) = i_Y i_X (d e^k)
            let val = dk.contract_vector(x).contract_vector(y).coefficient(0);
            if !val.is_zero() {
                out[k] = -val;
            }
        }
        out
    }

    /// Courant bracket on invariant sections:
    /// `[X+xi, Y+eta] = [X,Y] + L_X eta - L_Y xi - d(i_X eta - i_Y xi)/2`.
    /// The last term is kept even though it vanishes on invariant sections
    /// (the differential of a constant function is zero).
    pub fn courant(&self, v: &GVector, w: &GVector) -> GVector {
        let xi = Form::from_covector(&v.covec);
        let eta = Form::from_covector(&w.covec);
        let mut cov = self.lie_derivative(&v.vec, &eta).sub(&self.lie_derivative(&w.vec, &xi));
        let mixed = eta.contract_vector(&v.vec).sub(&xi.contract_vector(&w.vec));
        cov = cov.sub(&self.d(&mixed).scale(&Scalar::from_ratio(1, 2)));
        let covec = (0..self.dim).map(|i| cov.coefficient(1 << i)).collect();
        GVector::new(self.bracket(&v.vec, &w.vec), covec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::masks_of_degree;
    use crate::parse::{parse_form, parse_salamon};

    fn iwasawa() -> LieAlgebra {
        parse_salamon("0,0,0,0,13+42,14+23").unwrap()
    }

    fn f(text: &str) -> Form {
        parse_form(text, 6, None).unwrap()
    }

    #[test]
    fn structure_equations() {
        let g = iwasawa();
        assert_eq!(g.d(&f("e5")), f("e13 - e24"));
        assert_eq!(g.d(&f("e6")), f("e14 + e23"));
        assert_eq!(g.d(&f("e16 + e25")), Form::zero());
    }

    #[test]
    fn d_squared_vanishes_everywhere() {
        let g = iwasawa();
        for mask in 0u32..64 {
            let m = Form::monomial(mask, Scalar::one());
            assert!(g.d(&g.d(&m)).is_zero(), "d^2 e_{mask:b} != 0");
        }
        // and in particular on all 15 basis 2-forms
        for mask in masks_of_degree(6, 2) {
            assert!(g.d(&g.d(&Form::monomial(mask, Scalar::one()))).is_zero());
        }
    }

    #[test]
    fn lie_derivative_examples() {
        let g = iwasawa();
        let e5 = GVector::basis_vector(6, 4);
        assert_eq!(g.lie_derivative(&e5.vec, &f("e5")), Form::zero());
        let e1 = GVector::basis_vector(6, 0);
        assert_eq!(g.lie_derivative(&e1.vec, &f("e5")), f("e3"));
        assert_eq!(g.lie_derivative(&e1.vec, &f("1")), Form::zero());
    }

    #[test]
    fn bracket_matches_structure_constants() {
        let g = iwasawa();
        let e = |i: usize| GVector::basis_vector(6, i);
        // d e^5 = e^13 - e^24  =>  [e1, e3] = -e5, [e2, e4] = +e5
        let b13 = g.bracket(&e(0).vec, &e(2).vec);
        assert_eq!(b13[4], -Scalar::one());
        let b24 = g.bracket(&e(1).vec, &e(3).vec);
        assert_eq!(b24[4], Scalar::one());
        // antisymmetry
        let b31 = g.bracket(&e(2).vec, &e(0).vec);
        assert_eq!(b31[4], Scalar::one());
    }

    #[test]
    fn jacobi_violation_is_rejected() {
        // d e^5 = e^13, d e^6 = e^25 gives d(d e^6) = -e^2 ^ e^13 = e^123 != 0
        let d1 = vec![
            Form::zero(),
            Form::zero(),
            Form::zero(),
            Form::zero(),
            f("e13"),
            f("e25"),
        ];
        let err = LieAlgebra::new(6, d1).unwrap_err();
        assert!(matches!(err, Error::JacobiFailed { generator: 6 }));
    }
}
