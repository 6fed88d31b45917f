//! The spinor grading `U^k` of the complexified exterior algebra induced
//! by a generalized-almost-complex structure, the projection of forms onto
//! graded pieces, the four-way splitting of the differential, and the
//! symplectic `phi` map.
//!
//! `U^(n-j)` is spanned by `j`-fold Clifford products of a basis of the
//! conjugated +i eigenspace applied to the canonical-line generator.
//! Linear maps on the exterior algebra are materialized as dense matrices
//! over the full `2^(2n)`-dimensional ambient space; at `2n = 6` that is
//! 64 x 64 and exact arithmetic keeps everything cheap.

use num::BigInt;
use num::rational::BigRational;
use num::traits::One;

use crate::error::Error;
use crate::exterior::{Form, GVector};
use crate::gcs::{poisson_bivector, GenStructure};
use crate::lie::LieAlgebra;
use crate::linalg::{Matrix, Subspace};
use crate::scalar::Scalar;

/// Materialize a linear operator on the exterior algebra as a matrix in
/// the monomial basis (column `m` is the image of the basis monomial with
/// bitmask `m`).
pub fn matrix_of_op(dim2n: usize, op: impl Fn(&Form) -> Form) -> Matrix {
    let size = 1usize << dim2n;
    let mut out = Matrix::zero(size, size);
    for m in 0..size {
        let image = op(&Form::monomial(m as u32, Scalar::one()));
        for (mask, c) in image.terms() {
            out.set(mask as usize, m, c.clone());
        }
    }
    out
}

/// Matrix of the Chevalley-Eilenberg differential on the full algebra.
pub fn d_matrix(algebra: &LieAlgebra) -> Matrix {
    matrix_of_op(algebra.dim(), |f| algebra.d(f))
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut acc = 1usize;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// The four graded components of `d`, as matrices on the full exterior
/// algebra: `a` raises the grading degree by 2, `del` by 1, `delbar`
/// lowers it by 1, and `abar` by 2. Their sum is exactly `d`.
#[derive(Clone, Debug)]
pub struct DiffSplit {
    pub a: Matrix,
    pub del: Matrix,
    pub delbar: Matrix,
    pub abar: Matrix,
}

impl DiffSplit {
    /// Integrability in the spectral sense: no +-2 shifts.
    pub fn is_integrable(&self) -> bool {
        self.a.is_zero() && self.abar.is_zero()
    }
}

/// The decomposition `Lambda^bullet (x) C = U^n + ... + U^(-n)`.
#[derive(Clone, Debug)]
pub struct Grading {
    structure: GenStructure,
    /// pieces[j] is `U^(n-j)`.
    pieces: Vec<Subspace>,
    /// Columns: piece bases concatenated in order `U^n, ..., U^(-n)`.
    basis: Matrix,
    basis_inv: Matrix,
    ranges: Vec<std::ops::Range<usize>>,
    split: DiffSplit,
}

impl Grading {
    pub fn build(structure: &GenStructure) -> Result<Self, Error> {
        let dim = structure.dim();
        let n = dim / 2;
        let size = 1usize << dim;

        let eig = structure.i_eigenspace();
        if eig.dim() != dim {
            return Err(Error::Internal {
                msg: format!("+i eigenspace has dimension {}, expected {dim}", eig.dim()),
            });
        }

        let generator = match structure.spinor() {
            Some(rho) => rho.clone(),
            None => canonical_generator(&eig, dim)?,
        };

        let lbar: Vec<GVector> = eig
            .basis()
            .iter()
            .map(|row| GVector::from_dense(row).conj())
            .collect();

        let mut pieces = Vec::with_capacity(dim + 1);
        for j in 0..=dim {
            let mut spanning = Vec::new();
            for subset in 0u32..(1 << dim) {
                if subset.count_ones() as usize != j {
                    continue;
                }
                let mut v = generator.clone();
                // apply factors right to left so the smallest index is the
                // leftmost Clifford factor
                for idx in (0..dim).rev() {
                    if subset & (1 << idx) != 0 {
                        v = lbar[idx].clifford(&v);
                    }
                }
                spanning.push(v.to_dense(dim));
            }
            let piece = Subspace::span(size, &spanning);
            if piece.dim() != binomial(dim, j) {
                return Err(Error::Internal {
                    msg: format!(
                        "dim U^{} = {}, expected C({dim},{j}) = {}",
                        n as i64 - j as i64,
                        piece.dim(),
                        binomial(dim, j)
                    ),
                });
            }
            pieces.push(piece);
        }

        // conj(U^k) = U^(-k)
        for j in 0..=dim {
            if pieces[j].conj() != pieces[dim - j] {
                return Err(Error::Internal {
                    msg: format!("conj(U^{}) != U^{}", n as i64 - j as i64, j as i64 - n as i64),
                });
            }
        }

        // completeness and directness: the concatenated bases must be a
        // basis of the whole space
        let mut basis = Matrix::zero(size, size);
        let mut ranges = Vec::with_capacity(dim + 1);
        let mut col = 0;
        for piece in &pieces {
            let start = col;
            for v in piece.basis() {
                for (i, x) in v.iter().enumerate() {
                    basis.set(i, col, x.clone());
                }
                col += 1;
            }
            ranges.push(start..col);
        }
        if col != size {
            return Err(Error::Internal { msg: "graded pieces do not fill the space".into() });
        }
        let basis_inv = basis.inverse().ok_or_else(|| Error::Internal {
            msg: "graded pieces are not independent".into(),
        })?;

        let split = compute_split(structure, &basis, &basis_inv, &ranges, dim)?;
        let spectral = split.is_integrable();
        let nijenhuis = structure.integrable();
        if spectral != nijenhuis {
            return Err(Error::Internal {
                msg: format!(
                    "spectral integrability ({spectral}) disagrees with the Nijenhuis tensor ({nijenhuis})"
                ),
            });
        }

        Ok(Grading { structure: structure.clone(), pieces, basis, basis_inv, ranges, split })
    }

    pub fn n(&self) -> i64 {
        (self.structure.dim() / 2) as i64
    }

    pub fn structure(&self) -> &GenStructure {
        &self.structure
    }

    pub fn algebra(&self) -> &LieAlgebra {
        self.structure.algebra()
    }

    pub fn ambient(&self) -> usize {
        1 << self.structure.dim()
    }

    /// `U^k`; the zero subspace when `|k| > n`.
    pub fn piece(&self, k: i64) -> Subspace {
        let n = self.n();
        if k.abs() > n {
            return Subspace::zero(self.ambient());
        }
        self.pieces[(n - k) as usize].clone()
    }

    pub fn split(&self) -> &DiffSplit {
        &self.split
    }

    pub fn is_integrable(&self) -> bool {
        self.split.is_integrable()
    }

    /// Decompose a form into its graded components, largest `k` first.
    /// The components sum to the input and component `k` lies in `U^k`.
    pub fn project(&self, f: &Form) -> Vec<(i64, Form)> {
        let dim = self.structure.dim();
        let coords = self.basis_inv.mul_vec(&f.to_dense(dim));
        let n = self.n();
        let mut out = Vec::with_capacity(self.pieces.len());
        for (j, range) in self.ranges.iter().enumerate() {
            let mut comp = Form::zero();
            for c in range.clone() {
                if coords[c].is_zero() {
                    continue;
                }
                let col = self.basis.col(c);
                comp = comp.add(&Form::from_dense(&col).scale(&coords[c]));
            }
            out.push((n - j as i64, comp));
        }
        out
    }
}

/// Normalized generator of the canonical line of an endomorphism-only
/// structure: the joint Clifford annihilator of the +i eigenspace, which
/// must be one-dimensional; the first nonzero coefficient in bitmask order
/// is scaled to 1.
fn canonical_generator(eig: &Subspace, dim: usize) -> Result<Form, Error> {
    let size = 1usize << dim;
    let basis = eig.basis();
    let mut stacked = Matrix::zero(size * basis.len(), size);
    for (b, row) in basis.iter().enumerate() {
        let v = GVector::from_dense(row);
        for m in 0..size {
            let image = v.clifford(&Form::monomial(m as u32, Scalar::one()));
            for (mask, c) in image.terms() {
                stacked.set(b * size + mask as usize, m, c.clone());
            }
        }
    }
    let ker = stacked.kernel();
    if ker.dim() != 1 {
        return Err(Error::InvalidSpinor {
            msg: format!("joint Clifford annihilator has dimension {}", ker.dim()),
        });
    }
    let coords = &ker.basis()[0];
    let first = coords
        .iter()
        .find(|c| !c.is_zero())
        .expect("nonzero kernel vector")
        .clone();
    let inv = first.inv().expect("nonzero");
    Ok(Form::from_dense(coords).scale(&inv))
}

fn compute_split(
    structure: &GenStructure,
    basis: &Matrix,
    basis_inv: &Matrix,
    ranges: &[std::ops::Range<usize>],
    dim: usize,
) -> Result<DiffSplit, Error> {
    let d = d_matrix(structure.algebra());
    let d_graded = basis_inv.mul(&d).mul(basis);
    let size = 1usize << dim;

    // shift s means U^k -> U^(k+s), i.e. piece index j -> j - s
    let block_for_shift = |s: i64| -> Matrix {
        let mut m = Matrix::zero(size, size);
        for (j, col_range) in ranges.iter().enumerate() {
            let target = j as i64 - s;
            if target < 0 || target as usize >= ranges.len() {
                continue;
            }
            let row_range = ranges[target as usize].clone();
            for c in col_range.clone() {
                for r in row_range.clone() {
                    m.set(r, c, d_graded.get(r, c).clone());
                }
            }
        }
        m
    };

    let a = block_for_shift(2);
    let del = block_for_shift(1);
    let delbar = block_for_shift(-1);
    let abar = block_for_shift(-2);
    let residual = d_graded
        .sub(&a)
        .sub(&del)
        .sub(&delbar)
        .sub(&abar);
    if !residual.is_zero() {
        return Err(Error::Internal {
            msg: "differential has graded components shifting k by something other than \
                  +-1 or +-2"
                .into(),
        });
    }
    let back = |m: Matrix| basis.mul(&m).mul(basis_inv);
    Ok(DiffSplit { a: back(a), del: back(del), delbar: back(delbar), abar: back(abar) })
}

/// The symplectic isomorphism `phi(alpha) = exp(i omega) (exp(Lambda/2i)
/// alpha)` as a matrix; it maps degree `n - k` forms onto `U^k` and
/// intertwines `d` with `delbar` and `d^Lambda` with `-2i del`.
pub fn phi_map(algebra: &LieAlgebra, omega: &Form) -> Result<Matrix, Error> {
    let dim = algebra.dim();
    let size = 1usize << dim;
    let pi = poisson_bivector(omega, dim)?;
    let lambda = matrix_of_op(dim, |f| pi.contract(f).neg());
    // exp((i/2) Lambda), a finite sum because Lambda lowers degree by 2.
    // The sign of the series coefficient is pinned by the intertwining
    // identities below (with the sl2-normalized Lambda of this crate the
    // coefficient is +i/2).
    let half_i = Scalar::new(
        BigRational::new(BigInt::from(0), BigInt::from(1)),
        BigRational::new(BigInt::from(1), BigInt::from(2)),
    );
    let mut series = Matrix::identity(size);
    let mut power = Matrix::identity(size);
    let mut factorial = BigInt::one();
    let mut k = BigInt::one();
    loop {
        power = power.mul(&lambda).scale(&half_i);
        if power.is_zero() {
            break;
        }
        factorial *= &k;
        let coef = Scalar::from_rational(BigRational::new(BigInt::one(), factorial.clone()));
        series = series.add(&power.scale(&coef));
        k += BigInt::one();
    }
    let exp_i_omega = omega.scale(&Scalar::i()).exp_wedge()?;
    let wedge = matrix_of_op(dim, |f| exp_i_omega.wedge(f));
    Ok(wedge.mul(&series))
}

/// `Lambda = -i_{omega^{-1}}` as a matrix.
pub fn lambda_matrix(omega: &Form, dim: usize) -> Result<Matrix, Error> {
    let pi = poisson_bivector(omega, dim)?;
    Ok(matrix_of_op(dim, |f| pi.contract(f).neg()))
}
