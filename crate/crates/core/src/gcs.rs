//! Generalized-almost-complex structures on a Lie algebra: construction
//! from complex endomorphisms, symplectic forms, or pure spinors;
//! validation; type; Courant integrability; B- and beta-transforms.
//!
//! Coordinates on `T + T*` are vectors first, covectors second. A complex
//! structure is specified by its action on covectors in the convention of
//! the reproduced computations (`J e^1 = -e^2` etc.), which corresponds to
//! the vector-side action `-C^T`; with that pairing of blocks the +i
//! eigenspace of the covector block consists exactly of the (1,0)-forms
//! and the canonical line is the top holomorphic power.

use crate::error::Error;
use crate::exterior::{Bivector, Form, GVector};
use crate::lie::LieAlgebra;
use crate::linalg::{Matrix, Subspace};
use crate::scalar::Scalar;

/// Gram matrix of the natural pairing in `T + T*` coordinates.
pub fn pairing_gram(dim: usize) -> Matrix {
    let mut g = Matrix::zero(2 * dim, 2 * dim);
    let half = Scalar::from_ratio(1, 2);
    for i in 0..dim {
        g.set(i, dim + i, half.clone());
        g.set(dim + i, i, half.clone());
    }
    g
}

/// Matrix of a 2-form as the map `X -> i_X omega` from vectors to
/// covectors.
pub fn omega_matrix(omega: &Form, dim: usize) -> Matrix {
    let mut m = Matrix::zero(dim, dim);
    for a in 0..dim {
        let row = omega.contract_basis(a);
        for b in 0..dim {
            m.set(b, a, row.coefficient(1 << b));
        }
    }
    m
}

/// The bivector `omega^{-1}` in the convention that makes
/// `Lambda = -i_{omega^{-1}}` part of an sl2 triple with `[L, Lambda]`
/// acting as `(k - n)` in degree `k`.
pub fn poisson_bivector(omega: &Form, dim: usize) -> Result<Bivector, Error> {
    let m = omega_matrix(omega, dim);
    let inv = m
        .inverse()
        .ok_or_else(|| Error::NotSymplectic { msg: "2-form is degenerate".into() })?;
    let mut b = Bivector::zero();
    for i in 0..dim {
        for j in (i + 1)..dim {
            b.add_term(i, j, inv.get(j, i).clone());
        }
    }
    Ok(b)
}

/// Block matrix `exp B = [[1, 0], [M_B, 1]]` of a (real) 2-form acting on
/// `T + T*`.
fn exp_b_matrix(b: &Form, dim: usize) -> Matrix {
    let mb = omega_matrix(b, dim);
    let mut m = Matrix::identity(2 * dim);
    for i in 0..dim {
        for j in 0..dim {
            m.set(dim + i, j, mb.get(i, j).clone());
        }
    }
    m
}

/// `exp(B) ^ rho` for a (possibly complex) 2-form `B`.
pub fn b_transform_spinor(rho: &Form, b: &Form) -> Result<Form, Error> {
    Ok(b.exp_wedge()?.wedge(rho))
}

/// `exp(i_beta) rho`.
pub fn beta_transform_spinor(rho: &Form, beta: &Bivector) -> Form {
    beta.exp_contract(rho)
}

/// Coefficient of the top monomial in `u ^ conj(u) ^ omega^2`; a complex
/// 1-form and a real 2-form define a type-1 structure on a 6-dimensional
/// algebra exactly when this is nonzero.
pub fn nondegeneracy_check(u: &Form, omega: &Form, dim: usize) -> Scalar {
    let top = (1u32 << dim) - 1;
    u.wedge(&u.conj()).wedge(omega).wedge(omega).coefficient(top)
}

/// A generalized-almost-complex structure: a pairing-orthogonal
/// endomorphism of `T + T*` squaring to minus the identity, optionally
/// with a generator of its canonical pure-spinor line.
#[derive(Clone, Debug)]
pub struct GenStructure {
    algebra: LieAlgebra,
    endo: Matrix,
    spinor: Option<Form>,
}

impl GenStructure {
    fn validated(algebra: LieAlgebra, endo: Matrix, spinor: Option<Form>) -> Result<Self, Error> {
        let dim = algebra.dim();
        if endo.rows != 2 * dim || endo.cols != 2 * dim {
            return Err(Error::DimensionMismatch {
                msg: format!("endomorphism must be {0} x {0}", 2 * dim),
            });
        }
        if endo.mul(&endo) != Matrix::identity(2 * dim).scale(&-Scalar::one()) {
            return Err(Error::NotAlmostComplex);
        }
        let gram = pairing_gram(dim);
        if endo.transpose().mul(&gram).mul(&endo) != gram {
            return Err(Error::InvalidSpinor {
                msg: "endomorphism is not orthogonal for the natural pairing".into(),
            });
        }
        let s = GenStructure { algebra, endo, spinor };
        if s.spinor.is_some() {
            // the spinor's Clifford annihilator must be the +i eigenspace
            let ann = s.spinor_annihilator()?;
            if ann != s.i_eigenspace() {
                return Err(Error::InvalidSpinor {
                    msg: "spinor line does not match the endomorphism".into(),
                });
            }
        }
        Ok(s)
    }

    /// From a complex structure given by its (real) action on covectors
    /// with `C^2 = -1`. The spinor is the wedge of the echelon basis of
    /// the +i eigenspace of `C`.
    pub fn from_complex(algebra: LieAlgebra, cov: &Matrix) -> Result<Self, Error> {
        let dim = algebra.dim();
        if cov.rows != dim || cov.cols != dim {
            return Err(Error::DimensionMismatch { msg: format!("matrix must be {dim} x {dim}") });
        }
        for r in 0..dim {
            for c in 0..dim {
                if !cov.get(r, c).is_real() {
                    return Err(Error::ComplexEntries { msg: format!("entry ({r}, {c})") });
                }
            }
        }
        if cov.mul(cov) != Matrix::identity(dim).scale(&-Scalar::one()) {
            return Err(Error::NotAlmostComplex);
        }
        let mut endo = Matrix::zero(2 * dim, 2 * dim);
        for i in 0..dim {
            for j in 0..dim {
                // vector block -C^T, covector block C
                endo.set(i, j, -cov.get(j, i).clone());
                endo.set(dim + i, dim + j, cov.get(i, j).clone());
            }
        }
        // (1,0)-covectors: kernel of C - i
        let shifted = cov.sub(&Matrix::identity(dim).scale(&Scalar::i()));
        let holo = shifted.kernel();
        if holo.dim() != dim / 2 {
            return Err(Error::NotAlmostComplex);
        }
        let mut spinor = Form::one();
        for row in holo.basis() {
            spinor = spinor.wedge(&Form::from_covector(row));
        }
        GenStructure::validated(algebra, endo, Some(spinor))
    }

    /// From a symplectic form: real, closed, nondegenerate. The spinor is
    /// `exp(i omega)`.
    pub fn from_symplectic(algebra: LieAlgebra, omega: &Form) -> Result<Self, Error> {
        let dim = algebra.dim();
        validate_symplectic(&algebra, omega)?;
        let m = omega_matrix(omega, dim);
        let inv = m.inverse().expect("validated nondegenerate");
        let mut endo = Matrix::zero(2 * dim, 2 * dim);
        for i in 0..dim {
            for j in 0..dim {
                endo.set(i, dim + j, -inv.get(i, j).clone());
                endo.set(dim + i, j, m.get(i, j).clone());
            }
        }
        let spinor = omega.scale(&Scalar::i()).exp_wedge()?;
        GenStructure::validated(algebra, endo, Some(spinor))
    }

    /// From a form whose Clifford annihilator has complex dimension `2n`
    /// and meets its conjugate trivially; the endomorphism is `+i` on the
    /// annihilator and `-i` on its conjugate.
    pub fn from_spinor(algebra: LieAlgebra, rho: &Form) -> Result<Self, Error> {
        let dim = algebra.dim();
        let ann = clifford_annihilator(rho, dim);
        if ann.dim() != dim {
            return Err(Error::InvalidSpinor {
                msg: format!("Clifford annihilator has dimension {}, expected {dim}", ann.dim()),
            });
        }
        let conj = ann.conj();
        if !ann.intersect(&conj)?.is_zero() {
            return Err(Error::InvalidSpinor {
                msg: "annihilator meets its conjugate: the spinor is not definite".into(),
            });
        }
        // P has the annihilator basis then its conjugate as columns
        let mut p = Matrix::zero(2 * dim, 2 * dim);
        for (j, v) in ann.basis().iter().enumerate() {
            for i in 0..2 * dim {
                p.set(i, j, v[i].clone());
                p.set(i, dim + j, v[i].conj());
            }
        }
        let pinv = p.inverse().ok_or_else(|| Error::InvalidSpinor {
            msg: "annihilator and conjugate do not span".into(),
        })?;
        let mut d = Matrix::zero(2 * dim, 2 * dim);
        for j in 0..dim {
            d.set(j, j, Scalar::i());
            d.set(dim + j, dim + j, -Scalar::i());
        }
        let endo = p.mul(&d).mul(&pinv);
        for r in 0..2 * dim {
            for c in 0..2 * dim {
                if !endo.get(r, c).is_real() {
                    return Err(Error::InvalidSpinor {
                        msg: "reconstructed endomorphism is not real".into(),
                    });
                }
            }
        }
        GenStructure::validated(algebra, endo, Some(rho.clone()))
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn endo(&self) -> &Matrix {
        &self.endo
    }

    pub fn spinor(&self) -> Option<&Form> {
        self.spinor.as_ref()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn apply(&self, v: &GVector) -> GVector {
        GVector::from_dense(&self.endo.mul_vec(&v.to_dense()))
    }

    /// The +i eigenspace of the complexified endomorphism.
    pub fn i_eigenspace(&self) -> Subspace {
        let dim2 = 2 * self.dim();
        self.endo.sub(&Matrix::identity(dim2).scale(&Scalar::i())).kernel()
    }

    fn spinor_annihilator(&self) -> Result<Subspace, Error> {
        let rho = self.spinor.as_ref().ok_or_else(|| Error::Internal {
            msg: "spinor_annihilator on a structure without a spinor".into(),
        })?;
        Ok(clifford_annihilator(rho, self.dim()))
    }

    /// Half the real dimension of `T* /\ J T*`; cross-checked against the
    /// lowest degree of the spinor when one is present.
    pub fn gtype(&self) -> usize {
        let dim = self.dim();
        let mut covectors = Vec::new();
        for i in 0..dim {
            covectors.push(GVector::basis_covector(dim, i).to_dense());
        }
        let t_star = Subspace::span(2 * dim, &covectors);
        let image = t_star.map_through(&self.endo);
        let t = t_star.intersect(&image).expect("same ambient").dim() / 2;
        if let Some(rho) = &self.spinor {
            let low = rho.lowest_degree().map(|d| d as usize);
            debug_assert_eq!(low, Some(t), "spinor lowest degree disagrees with type");
        }
        t
    }

    /// Courant-Nijenhuis tensor
    /// `Nij(u, v) = [Ju, Jv] - J[Ju, v] - J[u, Jv] - [u, v]`.
    pub fn nijenhuis(&self, u: &GVector, v: &GVector) -> GVector {
        let g = &self.algebra;
        let ju = self.apply(u);
        let jv = self.apply(v);
        let mut acc = g.courant(&ju, &jv);
        acc = acc.add(&self.apply(&g.courant(&ju, v)).scale(&-Scalar::one()));
        acc = acc.add(&self.apply(&g.courant(u, &jv)).scale(&-Scalar::one()));
        acc.add(&g.courant(u, v).scale(&-Scalar::one()))
    }

    /// First basis pair with nonvanishing Nijenhuis tensor, if any.
    pub fn nijenhuis_witness(&self) -> Option<(GVector, GVector, GVector)> {
        let dim = self.dim();
        let basis: Vec<GVector> = (0..dim)
            .map(|i| GVector::basis_vector(dim, i))
            .chain((0..dim).map(|i| GVector::basis_covector(dim, i)))
            .collect();
        for a in 0..basis.len() {
            for b in (a + 1)..basis.len() {
                let nij = self.nijenhuis(&basis[a], &basis[b]);
                if nij != GVector::zero(dim) {
                    return Some((basis[a].clone(), basis[b].clone(), nij));
                }
            }
        }
        None
    }

    pub fn integrable(&self) -> bool {
        self.nijenhuis_witness().is_none()
    }

    /// B-field transform by a real closed 2-form: the endomorphism is
    /// conjugated by `exp B` and the spinor is wedged with `exp(B)`.
    pub fn b_transform(&self, b: &Form) -> Result<GenStructure, Error> {
        let dim = self.dim();
        if !b.is_zero() && b.homogeneous_degree() != Some(2) {
            return Err(Error::DimensionMismatch { msg: "B-field must be a 2-form".into() });
        }
        for (_, c) in b.terms() {
            if !c.is_real() {
                return Err(Error::ComplexEntries {
                    msg: "endomorphism-level B-transform requires a real 2-form".into(),
                });
            }
        }
        if !self.algebra.d(b).is_zero() {
            return Err(Error::NotClosed { msg: "B-field must be d-closed".into() });
        }
        let eb = exp_b_matrix(b, dim);
        let ebinv = exp_b_matrix(&b.neg(), dim);
        let endo = ebinv.mul(&self.endo).mul(&eb);
        let spinor = match &self.spinor {
            Some(rho) => Some(b_transform_spinor(rho, b)?),
            None => None,
        };
        GenStructure::validated(self.algebra.clone(), endo, spinor)
    }
}

fn validate_symplectic(algebra: &LieAlgebra, omega: &Form) -> Result<(), Error> {
    let dim = algebra.dim();
    if omega.is_zero() || omega.homogeneous_degree() != Some(2) {
        return Err(Error::NotSymplectic { msg: "not a homogeneous 2-form".into() });
    }
    for (_, c) in omega.terms() {
        if !c.is_real() {
            return Err(Error::NotSymplectic { msg: "form has complex coefficients".into() });
        }
    }
    if let Some(top) = omega.max_index() {
        if top as usize > dim {
            return Err(Error::IndexOutOfRange { index: top as usize, dim });
        }
    }
    if !algebra.d(omega).is_zero() {
        return Err(Error::NotSymplectic { msg: "form is not closed".into() });
    }
    let mut power = Form::one();
    for _ in 0..algebra.n() {
        power = power.wedge(omega);
    }
    if power.is_zero() {
        return Err(Error::NotSymplectic { msg: "top power vanishes (degenerate)".into() });
    }
    Ok(())
}

/// `{ v : v . rho = 0 }` inside the complexified `T + T*`.
pub fn clifford_annihilator(rho: &Form, dim: usize) -> Subspace {
    let size = 1usize << dim;
    let mut m = Matrix::zero(size, 2 * dim);
    for j in 0..2 * dim {
        let v = if j < dim {
            GVector::basis_vector(dim, j)
        } else {
            GVector::basis_covector(dim, j - dim)
        };
        let image = v.clifford(rho);
        for (mask, c) in image.terms() {
            m.set(mask as usize, j, c.clone());
        }
    }
    m.kernel()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_endo, parse_form, parse_salamon, EndoSpec};
    use std::collections::BTreeMap;

    fn iwasawa() -> LieAlgebra {
        parse_salamon("0,0,0,0,13+42,14+23").unwrap()
    }

    fn f(text: &str) -> Form {
        parse_form(text, 6, None).unwrap()
    }

    fn endo_from_images(pairs: &[(usize, &str)]) -> Matrix {
        let mut images = BTreeMap::new();
        for (k, v) in pairs {
            images.insert(*k, (*v).to_string());
        }
        parse_endo(&EndoSpec::Images(images), 6, None).unwrap()
    }

    fn j0() -> Matrix {
        endo_from_images(&[(1, "-e2"), (3, "-e4"), (5, "-e6")])
    }

    fn j1() -> Matrix {
        endo_from_images(&[(1, "-e3"), (2, "-e4"), (5, "-e6")])
    }

    fn rho_form() -> Form {
        parse_form("exp(i*(-e36 - e45)) ^ (e1 + i*e2)", 6, None).unwrap()
    }

    #[test]
    fn complex_structures_have_type_n() {
        let g0 = GenStructure::from_complex(iwasawa(), &j0()).unwrap();
        assert_eq!(g0.gtype(), 3);
        // spinor proportional to (e1+ie2)^(e3+ie4)^(e5+ie6)
        let expected = f("(e1 + i*e2) ^ (e3 + i*e4) ^ (e5 + i*e6)");
        let got = g0.spinor().unwrap();
        // same line: one is a scalar multiple of the other
        let ratio = got
            .terms()
            .next()
            .map(|(m, c)| c.checked_div(&expected.coefficient(m)).unwrap())
            .unwrap();
        assert_eq!(got, &expected.scale(&ratio));
        let g1 = GenStructure::from_complex(iwasawa(), &j1()).unwrap();
        assert_eq!(g1.gtype(), 3);
    }

    #[test]
    fn symplectic_structures_have_type_zero() {
        let omega = f("e16 + e25 + e34");
        let s = GenStructure::from_symplectic(iwasawa(), &omega).unwrap();
        assert_eq!(s.gtype(), 0);
        assert_eq!(s.spinor().unwrap().coefficient(0), Scalar::one());
        // degenerate and non-closed forms are rejected
        let torus4 = LieAlgebra::abelian(4);
        let degenerate = parse_form("e12", 4, None).unwrap();
        assert!(matches!(
            GenStructure::from_symplectic(torus4, &degenerate).unwrap_err(),
            Error::NotSymplectic { .. }
        ));
        assert!(GenStructure::from_symplectic(iwasawa(), &f("e15")).is_err());
    }

    #[test]
    fn the_connecting_spinor_is_valid_type_one_and_integrable() {
        let s = GenStructure::from_spinor(iwasawa(), &rho_form()).unwrap();
        assert_eq!(s.gtype(), 1);
        assert!(s.integrable());
    }

    #[test]
    fn invalid_spinors_are_rejected() {
        let torus2 = LieAlgebra::abelian(2);
        let e1 = parse_form("e1", 2, None).unwrap();
        assert!(matches!(
            GenStructure::from_spinor(torus2.clone(), &e1).unwrap_err(),
            Error::InvalidSpinor { .. }
        ));
        let one = parse_form("1", 2, None).unwrap();
        assert!(GenStructure::from_spinor(torus2.clone(), &one).is_err());
        // exp(i e^12) is the symplectic area-form structure
        let area = parse_form("exp(i*e12)", 2, None).unwrap();
        let s = GenStructure::from_spinor(torus2.clone(), &area).unwrap();
        let via_omega =
            GenStructure::from_symplectic(torus2, &parse_form("e12", 2, None).unwrap()).unwrap();
        assert_eq!(s.endo(), via_omega.endo());
    }

    #[test]
    fn complex_structures_are_integrable_here() {
        assert!(GenStructure::from_complex(iwasawa(), &j0()).unwrap().integrable());
        assert!(GenStructure::from_complex(iwasawa(), &j1()).unwrap().integrable());
        let omega = f("e16 + e25 + e34");
        assert!(GenStructure::from_symplectic(iwasawa(), &omega).unwrap().integrable());
    }

    #[test]
    fn spinor_reconstruction_matches_from_complex() {
        for j in [j0(), j1()] {
            let direct = GenStructure::from_complex(iwasawa(), &j).unwrap();
            let via_spinor =
                GenStructure::from_spinor(iwasawa(), direct.spinor().unwrap()).unwrap();
            assert_eq!(direct.endo(), via_spinor.endo());
        }
    }

    #[test]
    fn b_transform_group_law_and_type() {
        let s = GenStructure::from_spinor(iwasawa(), &rho_form()).unwrap();
        let b = f("e12");
        let transformed = s.b_transform(&b).unwrap();
        assert_eq!(transformed.gtype(), s.gtype());
        let back = transformed.b_transform(&b.neg()).unwrap();
        assert_eq!(back.endo(), s.endo());
        assert_eq!(back.spinor(), s.spinor());
        // zero B is the identity
        let same = s.b_transform(&Form::zero()).unwrap();
        assert_eq!(same.endo(), s.endo());
        // non-closed B is rejected at the endomorphism level
        assert!(matches!(s.b_transform(&f("e15")).unwrap_err(), Error::NotClosed { .. }));
        // complex B is rejected at the endomorphism level
        assert!(s.b_transform(&f("i*e12")).is_err());
    }

    #[test]
    fn nondegeneracy_check_examples() {
        let u = f("e1 + i*e2");
        assert_eq!(nondegeneracy_check(&u, &f("e12"), 6), Scalar::zero());
        let v = f("e3 + i*e4");
        // hand expansion: (e3+ie4)^(e3-ie4) = -2i e34; (e15+e26)^2 = -2 e1256;
        // e34 ^ e1256 = +e123456, so the total is +4i (nonzero).
        assert_eq!(
            nondegeneracy_check(&v, &f("e15 + e26"), 6),
            Scalar::new(crate::scalar::rat(0, 1), crate::scalar::rat(4, 1))
        );
    }

    #[test]
    fn poisson_bivector_inverts_omega() {
        // standard omega on the 6-torus: Lambda(omega) should be +n = +3
        // with Lambda = -i_{omega^{-1}} and [L, Lambda] = (k - n) id.
        let omega = f("e12 + e34 + e56");
        let pi = poisson_bivector(&omega, 6).unwrap();
        let lam = pi.contract(&omega).scale(&-Scalar::one());
        assert_eq!(lam, f("3"));
    }
}
