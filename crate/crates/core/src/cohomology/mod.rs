//! Cohomological objects and verdicts: Chevalley-Eilenberg (de Rham)
//! cohomology per degree and on the total complex, the graded subgroups
//! `GH^(k)`, purity/fullness verdicts, the generalized Bott-Chern quotient
//! and the del-delbar lemma, plus the complex-structure and symplectic
//! suites in the submodules.

pub mod complex;
pub mod symplectic;

use crate::error::Error;
use crate::exterior::{masks_of_degree, Form};
use crate::grading::{d_matrix, Grading};
use crate::lie::LieAlgebra;
use crate::linalg::{Matrix, Quotient, Subspace};
use crate::scalar::Scalar;

/// De Rham cohomology of the algebra: one quotient per degree plus the
/// quotient of the full (64-dimensional at 2n = 6) complex, which carries
/// the generalized subgroups.
#[derive(Clone, Debug)]
pub struct DeRham {
    algebra: LieAlgebra,
    per_degree: Vec<Quotient>,
    total: Quotient,
    betti: Vec<usize>,
    degree_masks: Vec<Vec<u32>>,
}

impl DeRham {
    pub fn build(algebra: &LieAlgebra) -> Result<Self, Error> {
        let dim = algebra.dim();
        let degree_masks: Vec<Vec<u32>> =
            (0..=dim).map(|k| masks_of_degree(dim, k as u32)).collect();

        // d restricted to each degree
        let d_deg: Vec<Matrix> = (0..=dim)
            .map(|k| {
                let cols = &degree_masks[k];
                let rows = if k + 1 <= dim { degree_masks[k + 1].clone() } else { Vec::new() };
                let mut m = Matrix::zero(rows.len(), cols.len());
                for (c, &mask) in cols.iter().enumerate() {
                    let image = algebra.d(&Form::monomial(mask, Scalar::one()));
                    for (im_mask, coeff) in image.terms() {
                        let r = rows.binary_search(&im_mask).expect("degree k+1 mask");
                        m.set(r, c, coeff.clone());
                    }
                }
                m
            })
            .collect();

        let mut per_degree = Vec::with_capacity(dim + 1);
        for k in 0..=dim {
            let cocycles = if k == dim {
                Subspace::full(degree_masks[k].len())
            } else {
                d_deg[k].kernel()
            };
            let boundaries = if k == 0 {
                Subspace::zero(degree_masks[0].len())
            } else {
                d_deg[k - 1].image()
            };
            per_degree.push(Quotient::new(cocycles, boundaries)?);
        }
        let betti = per_degree.iter().map(Quotient::dim).collect();

        let d_total = d_matrix(algebra);
        let total = Quotient::new(d_total.kernel(), d_total.image())?;

        Ok(DeRham { algebra: algebra.clone(), per_degree, total, betti, degree_masks })
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn betti(&self) -> &[usize] {
        &self.betti
    }

    pub fn degree_quotient(&self, k: usize) -> &Quotient {
        &self.per_degree[k]
    }

    pub fn total(&self) -> &Quotient {
        &self.total
    }

    pub fn degree_masks(&self, k: usize) -> &[u32] {
        &self.degree_masks[k]
    }

    /// Coordinates of the degree-`k` component of a form.
    pub fn form_to_degree_coords(&self, f: &Form, k: usize) -> Vec<Scalar> {
        self.degree_masks[k].iter().map(|&m| f.coefficient(m)).collect()
    }

    pub fn degree_coords_to_form(&self, k: usize, coords: &[Scalar]) -> Form {
        let mut f = Form::zero();
        for (&m, c) in self.degree_masks[k].iter().zip(coords) {
            f.add_term(m, c.clone());
        }
        f
    }

    /// Whether the listed forms are all closed, of the stated degree, and
    /// their classes form a basis of `H^k`.
    pub fn classes_form_basis(&self, k: usize, reps: &[Form]) -> Result<bool, Error> {
        let q = &self.per_degree[k];
        let mut coords = Vec::with_capacity(reps.len());
        for f in reps {
            if !f.is_zero() && f.homogeneous_degree() != Some(k as u32) {
                return Ok(false);
            }
            if !self.algebra.d(f).is_zero() {
                return Ok(false);
            }
            coords.push(q.project(&self.form_to_degree_coords(f, k))?);
        }
        let span = Subspace::span(q.dim(), &coords);
        Ok(span.dim() == reps.len() && span.dim() == q.dim())
    }
}

/// `GH^(k)`: the image of `ker d /\ U^k` in the total-complex quotient,
/// in quotient coordinates.
pub fn gh_k(grading: &Grading, dr: &DeRham, k: i64) -> Result<Subspace, Error> {
    let z = dr.total().cocycles().intersect(&grading.piece(k))?;
    dr.total().subgroup_image(&z)
}

/// Purity/fullness verdict for the graded subgroups of a structure.
#[derive(Clone, Debug)]
pub struct GenVerdict {
    /// `dim U^k`, k descending from n to -n.
    pub piece_dims: Vec<(i64, usize)>,
    /// `dim GH^(k)`, k descending.
    pub gh_dims: Vec<(i64, usize)>,
    pub pure: bool,
    pub full: bool,
    /// A nonzero class lying in two different `GH^(k)`s (sum not direct).
    pub witness_impure: Option<Form>,
    /// A class outside the sum of the `GH^(k)`s.
    pub witness_not_full: Option<Form>,
    /// For integrable structures: surjectivity of the total Bott-Chern
    /// map onto de Rham, which must agree with fullness.
    pub bc_surjective: Option<bool>,
}

impl GenVerdict {
    pub fn pure_and_full(&self) -> bool {
        self.pure && self.full
    }
}

pub fn verdict_gen(grading: &Grading, dr: &DeRham) -> Result<GenVerdict, Error> {
    let n = grading.n();
    let qdim = dr.total().dim();
    let mut piece_dims = Vec::new();
    let mut gh_dims = Vec::new();
    let mut images = Vec::new();
    for k in (-n..=n).rev() {
        let s = gh_k(grading, dr, k)?;
        piece_dims.push((k, grading.piece(k).dim()));
        gh_dims.push((k, s.dim()));
        images.push((k, s));
    }

    let total_dim: usize = images.iter().map(|(_, s)| s.dim()).sum();
    let mut sum = Subspace::zero(qdim);
    let mut witness_impure = None;
    for (_, s) in &images {
        if witness_impure.is_none() {
            let overlap = sum.intersect(s)?;
            if !overlap.is_zero() {
                witness_impure =
                    Some(Form::from_dense(&dr.total().lift(&overlap.basis()[0])));
            }
        }
        sum = sum.sum(s)?;
    }
    let pure = sum.dim() == total_dim;
    let full = sum.dim() == qdim;
    let witness_not_full = if full {
        None
    } else {
        let outside = (0..qdim)
            .find(|&i| {
                let mut v = vec![Scalar::zero(); qdim];
                v[i] = Scalar::one();
                !sum.contains(&v)
            })
            .expect("proper subspace misses some basis class");
        Some(Form::from_dense(&dr.total().representatives()[outside]))
    };

    let bc_surjective = if grading.is_integrable() {
        // Prop. 2.2: full => pure for integrable structures
        if full && !pure {
            return Err(Error::Internal {
                msg: "full but not pure on an integrable structure".into(),
            });
        }
        // the Bott-Chern image per piece is exactly GH^(k); its total
        // image is the sum computed above
        let pieces = gh_bc(grading, dr)?;
        let mut bc_sum = Subspace::zero(qdim);
        for piece in &pieces {
            bc_sum = bc_sum.sum(&piece.image_in_dr)?;
        }
        if bc_sum != sum {
            return Err(Error::Internal {
                msg: "Bott-Chern image differs from the sum of the GH^(k)".into(),
            });
        }
        let surjective = bc_sum.dim() == qdim;
        if surjective != full {
            return Err(Error::Internal {
                msg: "Bott-Chern surjectivity disagrees with fullness".into(),
            });
        }
        Some(surjective)
    } else {
        None
    };

    Ok(GenVerdict { piece_dims, gh_dims, pure, full, witness_impure, witness_not_full, bc_surjective })
}

/// One graded piece of the generalized Bott-Chern cohomology.
#[derive(Clone, Debug)]
pub struct BcPiece {
    pub k: i64,
    pub space: Quotient,
    pub image_in_dr: Subspace,
}

/// `(ker del /\ ker delbar /\ U^k) / (im del delbar /\ U^k)` for each k,
/// with its image inside the de Rham quotient. Requires integrability.
pub fn gh_bc(grading: &Grading, dr: &DeRham) -> Result<Vec<BcPiece>, Error> {
    if !grading.is_integrable() {
        return Err(Error::NotIntegrable);
    }
    let split = grading.split();
    let ker_del = split.del.kernel();
    let ker_delbar = split.delbar.kernel();
    let im_deldelbar = split.del.mul(&split.delbar).image();
    let n = grading.n();
    let mut out = Vec::new();
    for k in (-n..=n).rev() {
        let piece = grading.piece(k);
        let numerator = ker_del.intersect(&ker_delbar)?.intersect(&piece)?;
        let denominator = im_deldelbar.intersect(&piece)?;
        if !numerator.contains_subspace(&denominator) {
            return Err(Error::Internal {
                msg: "im del delbar is not inside ker del /\\ ker delbar".into(),
            });
        }
        let image_in_dr = dr.total().subgroup_image(&numerator)?;
        out.push(BcPiece { k, space: Quotient::new(numerator, denominator)?, image_in_dr });
    }
    Ok(out)
}

/// Both equalities `im del /\ ker delbar = im del delbar = im delbar /\
/// ker del`, cross-checked against the injectivity formulation (every
/// del/delbar-closed d-exact form is del-delbar-exact).
pub fn ddbar_lemma(grading: &Grading) -> Result<bool, Error> {
    if !grading.is_integrable() {
        return Err(Error::NotIntegrable);
    }
    let split = grading.split();
    let im_dd = split.del.mul(&split.delbar).image();
    let left = split.del.image().intersect(&split.delbar.kernel())?;
    let right = split.delbar.image().intersect(&split.del.kernel())?;
    let two_sided = left == im_dd && right == im_dd;

    let d = d_matrix(grading.algebra());
    let closed_exact = d
        .image()
        .intersect(&split.del.kernel())?
        .intersect(&split.delbar.kernel())?;
    let injective = im_dd.contains_subspace(&closed_exact);
    if injective != two_sided {
        return Err(Error::Internal {
            msg: "the two formulations of the del-delbar lemma disagree".into(),
        });
    }
    Ok(two_sided)
}
