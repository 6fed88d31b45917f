//! Complex-structure subgroups of de Rham cohomology: the `H^(p,q)`
//! subgroups of classes with a representative of pure bidegree, per-stage
//! purity/fullness, and the degree-2 invariant/anti-invariant split of a
//! (not necessarily integrable) almost-complex structure.

use super::DeRham;
use crate::error::Error;
use crate::exterior::Form;
use crate::linalg::{Matrix, Subspace};
use crate::scalar::Scalar;

/// Echelon basis of (1,0)-covectors of a covector matrix `C` with
/// `C^2 = -1`: the +i eigenspace, as 1-forms.
pub fn holomorphic_coframe(cov: &Matrix) -> Vec<Form> {
    let dim = cov.rows;
    let shifted = cov.sub(&Matrix::identity(dim).scale(&Scalar::i()));
    shifted.kernel().basis().iter().map(|row| Form::from_covector(row)).collect()
}

/// Spanning set of `Lambda^(p,q)` as forms.
fn pq_monomials(coframe: &[Form], p: usize, q: usize) -> Vec<Form> {
    let n = coframe.len();
    let mut out = Vec::new();
    let subsets = |size: usize| -> Vec<u32> {
        (0u32..(1 << n)).filter(|s| s.count_ones() as usize == size).collect()
    };
    for holo in subsets(p) {
        let mut left = Form::one();
        for (i, phi) in coframe.iter().enumerate() {
            if holo & (1 << i) != 0 {
                left = left.wedge(phi);
            }
        }
        for anti in subsets(q) {
            let mut w = left.clone();
            for (i, phi) in coframe.iter().enumerate() {
                if anti & (1 << i) != 0 {
                    w = w.wedge(&phi.conj());
                }
            }
            out.push(w);
        }
    }
    out
}

/// `H^(p,q)`: classes in `H^(p+q)` admitting a representative of bidegree
/// `(p, q)`, in the coordinates of the degree-(p+q) quotient.
pub fn hpq(cov: &Matrix, dr: &DeRham, p: usize, q: usize) -> Result<Subspace, Error> {
    let k = p + q;
    let coframe = holomorphic_coframe(cov);
    let q_space = dr.degree_quotient(k);
    let ambient = dr.degree_masks(k).len();
    let vectors: Vec<Vec<Scalar>> = pq_monomials(&coframe, p, q)
        .iter()
        .map(|f| dr.form_to_degree_coords(f, k))
        .collect();
    let pq_subspace = Subspace::span(ambient, &vectors);
    let closed = q_space.cocycles().intersect(&pq_subspace)?;
    q_space.subgroup_image(&closed)
}

/// Per-stage verdict: do the `H^(p,q)` with `p + q = k` decompose
/// `H^k(C)`?
#[derive(Clone, Debug)]
pub struct StageVerdict {
    pub k: usize,
    /// `dim H^(p,q)` for `p + q = k`, `p` descending.
    pub dims: Vec<((usize, usize), usize)>,
    pub pure: bool,
    pub full: bool,
    pub witness_impure: Option<Form>,
    pub witness_not_full: Option<Form>,
}

impl StageVerdict {
    pub fn pure_and_full(&self) -> bool {
        self.pure && self.full
    }
}

pub fn complex_stage_verdict(cov: &Matrix, dr: &DeRham, k: usize) -> Result<StageVerdict, Error> {
    let n = cov.rows / 2;
    let q_space = dr.degree_quotient(k);
    let qdim = q_space.dim();
    let mut dims = Vec::new();
    let mut pieces = Vec::new();
    for p in (0..=k).rev() {
        let q = k - p;
        if p > n || q > n {
            continue;
        }
        let s = hpq(cov, dr, p, q)?;
        dims.push(((p, q), s.dim()));
        pieces.push(s);
    }
    let total: usize = pieces.iter().map(Subspace::dim).sum();
    let mut sum = Subspace::zero(qdim);
    let mut witness_impure = None;
    for s in &pieces {
        if witness_impure.is_none() {
            let overlap = sum.intersect(s)?;
            if !overlap.is_zero() {
                witness_impure = Some(
                    dr.degree_coords_to_form(k, &q_space.lift(&overlap.basis()[0])),
                );
            }
        }
        sum = sum.sum(s)?;
    }
    let pure = sum.dim() == total;
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
            .expect("proper subspace misses a basis class");
        Some(dr.degree_coords_to_form(k, &q_space.representatives()[outside]))
    };
    Ok(StageVerdict { k, dims, pure, full, witness_impure, witness_not_full })
}

/// Complex pure-and-fullness at every stage `1..2n`.
pub fn complex_pure_full_all_stages(cov: &Matrix, dr: &DeRham) -> Result<bool, Error> {
    for k in 1..cov.rows {
        if !complex_stage_verdict(cov, dr, k)?.pure_and_full() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The degree-2 invariant/anti-invariant subgroups: classes with a closed
/// representative satisfying `J alpha = alpha` (respectively `-alpha`),
/// where `J` acts on 2-forms through its covector action. Returned in
/// degree-2 quotient coordinates.
pub fn real_j_split(cov: &Matrix, dr: &DeRham) -> Result<(Subspace, Subspace), Error> {
    let masks = dr.degree_masks(2).to_vec();
    let ambient = masks.len();
    let mut j2 = Matrix::zero(ambient, ambient);
    for (c, &mask) in masks.iter().enumerate() {
        let i = mask.trailing_zeros() as usize;
        let j = (31 - mask.leading_zeros()) as usize;
        let image = Form::from_covector(&cov.col(i)).wedge(&Form::from_covector(&cov.col(j)));
        for (im_mask, coeff) in image.terms() {
            let r = masks.binary_search(&im_mask).expect("degree-2 mask");
            j2.set(r, c, coeff.clone());
        }
    }
    let q_space = dr.degree_quotient(2);
    let mut split = Vec::new();
    for sign in [Scalar::one(), -Scalar::one()] {
        let eig = j2.sub(&Matrix::identity(ambient).scale(&sign)).kernel();
        let closed = q_space.cocycles().intersect(&eig)?;
        split.push(q_space.subgroup_image(&closed)?);
    }
    let minus = split.pop().expect("two parts");
    let plus = split.pop().expect("two parts");
    Ok((plus, minus))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::LieAlgebra;
    use crate::parse::{parse_endo, parse_salamon, EndoSpec};
    use std::collections::BTreeMap;

    fn endo(dim: usize, pairs: &[(usize, &str)]) -> Matrix {
        let mut images = BTreeMap::new();
        for (k, v) in pairs {
            images.insert(*k, (*v).to_string());
        }
        parse_endo(&EndoSpec::Images(images), dim, None).unwrap()
    }

    fn iwasawa() -> LieAlgebra {
        parse_salamon("0,0,0,0,13+42,14+23").unwrap()
    }

    #[test]
    fn j0_hodge_like_table() {
        let dr = DeRham::build(&iwasawa()).unwrap();
        let j0 = endo(6, &[(1, "-e2"), (3, "-e4"), (5, "-e6")]);
        let table: Vec<((usize, usize), usize)> = (1..=5)
            .flat_map(|k| complex_stage_verdict(&j0, &dr, k).unwrap().dims)
            .collect();
        let expected: Vec<((usize, usize), usize)> = vec![
            ((1, 0), 2),
            ((0, 1), 2),
            ((2, 0), 2),
            ((1, 1), 4),
            ((0, 2), 2),
            ((3, 0), 1),
            ((2, 1), 4),
            ((1, 2), 4),
            ((0, 3), 1),
            ((3, 1), 2),
            ((2, 2), 4),
            ((1, 3), 2),
            ((3, 2), 2),
            ((2, 3), 2),
        ];
        assert_eq!(table, expected);
        assert!(complex_pure_full_all_stages(&j0, &dr).unwrap());
    }

    #[test]
    fn j1_has_the_same_dimension_table() {
        let dr = DeRham::build(&iwasawa()).unwrap();
        let j1 = endo(6, &[(1, "-e3"), (2, "-e4"), (5, "-e6")]);
        for k in 1..=5 {
            let v0 = complex_stage_verdict(&endo(6, &[(1, "-e2"), (3, "-e4"), (5, "-e6")]), &dr, k)
                .unwrap();
            let v1 = complex_stage_verdict(&j1, &dr, k).unwrap();
            let dims0: Vec<usize> = v0.dims.iter().map(|&(_, d)| d).collect();
            let dims1: Vec<usize> = v1.dims.iter().map(|&(_, d)| d).collect();
            assert_eq!(dims0, dims1, "stage {k}");
            assert!(v1.pure_and_full());
        }
    }

    #[test]
    fn kodaira_thurston_splits_h2() {
        // dim-4 nilpotent algebra (0,0,0,12) with J e1 = -e2, J e3 = -e4
        let kt = parse_salamon("0,0,0,12").unwrap();
        let dr = DeRham::build(&kt).unwrap();
        assert_eq!(dr.betti(), &[1, 3, 4, 3, 1]);
        let j = endo(4, &[(1, "-e2"), (3, "-e4")]);
        let (plus, minus) = real_j_split(&j, &dr).unwrap();
        assert_eq!(plus.dim() + minus.dim(), 4);
        assert!(plus.intersect(&minus).unwrap().is_zero());
    }

    #[test]
    fn four_torus_splits_h2_with_dims_4_and_2() {
        let torus = LieAlgebra::abelian(4);
        let dr = DeRham::build(&torus).unwrap();
        let j = endo(4, &[(1, "-e2"), (3, "-e4")]);
        let (plus, minus) = real_j_split(&j, &dr).unwrap();
        assert_eq!((plus.dim(), minus.dim()), (4, 2));
        // [e12 + e34] is J-invariant
        let omega = crate::parse::parse_form("e12 + e34", 4, None).unwrap();
        let coords = dr
            .degree_quotient(2)
            .project(&dr.form_to_degree_coords(&omega, 2))
            .unwrap();
        assert!(plus.contains(&coords));
    }
}
