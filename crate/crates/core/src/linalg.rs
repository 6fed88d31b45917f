//! Exact linear algebra over Q(i): reduced row echelon forms, kernels,
//! images, sums, intersections, and quotient spaces with explicit
//! representatives. Subspaces are stored in reduced echelon form, so two
//! equal subspaces have identical stored bases and equality is structural.
//!
//! No pivoting strategy beyond "first nonzero entry": the arithmetic is
//! exact and determinism matters more than conditioning.

use crate::error::Error;
use crate::scalar::Scalar;

/// Dense matrix over Q(i), row-major. Sizes here are tiny (at most
/// 64 x 64), so nothing is sparse.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> Vec<Scalar> {
        self.data[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    pub fn col(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, k: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * k).collect(),
        }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.add(&other.scale(&(-Scalar::one())))
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Matrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(r, c).clone();
                    out.set(r, c, cur + a * b);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = Scalar::zero();
                for c in 0..self.cols {
                    let a = self.get(r, c);
                    if !a.is_zero() && !v[c].is_zero() {
                        acc += a * &v[c];
                    }
                }
                acc
            })
            .collect()
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row >= self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..self.cols {
                    self.data.swap(row * self.cols + c, p * self.cols + c);
                }
            }
            let inv = self.get(row, col).inv().expect("pivot is nonzero");
            for c in col..self.cols {
                let v = self.get(row, c) * &inv;
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r != row && !self.get(r, col).is_zero() {
                    let f = self.get(r, col).clone();
                    for c in col..self.cols {
                        let v = self.get(r, c).clone() - &f * self.get(row, c);
                        self.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Exact inverse; `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Matrix::zero(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, Scalar::one());
        }
        let pivots = aug.rref();
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        let mut inv = Matrix::zero(n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, aug.get(r, n + c).clone());
            }
        }
        Some(inv)
    }

    /// Kernel as a subspace of the column-coordinate space.
    pub fn kernel(&self) -> Subspace {
        let mut m = self.clone();
        let pivots = m.rref();
        let rank = pivots.len();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![Scalar::zero(); self.cols];
            v[f] = Scalar::one();
            for (r, &p) in pivots.iter().enumerate().take(rank) {
                v[p] = -m.get(r, f).clone();
            }
            basis.push(v);
        }
        Subspace::span(self.cols, &basis)
    }

    /// Column space as a subspace of the row-coordinate space.
    pub fn image(&self) -> Subspace {
        let cols: Vec<Vec<Scalar>> = (0..self.cols).map(|c| self.col(c)).collect();
        Subspace::span(self.rows, &cols)
    }

    pub fn conj(&self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(Scalar::conj).collect(),
        }
    }

    /// Solve `M x = b`; `None` if inconsistent. The solution with zero free
    /// coordinates is returned, which is unique when the kernel is trivial.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(self.rows, b.len());
        let mut aug = Matrix::zero(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, b[r].clone());
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = aug.get(r, self.cols).clone();
        }
        Some(x)
    }
}

/// A linear subspace of Q(i)^n in canonical (reduced echelon) form.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        let basis = (0..ambient)
            .map(|i| {
                let mut v = vec![Scalar::zero(); ambient];
                v[i] = Scalar::one();
                v
            })
            .collect();
        Subspace { ambient, basis, pivots: (0..ambient).collect() }
    }

    /// Canonicalize a spanning set.
    pub fn span(ambient: usize, vectors: &[Vec<Scalar>]) -> Self {
        for v in vectors {
            assert_eq!(v.len(), ambient, "spanning vector of wrong length");
        }
        if vectors.is_empty() {
            return Subspace::zero(ambient);
        }
        let mut m = Matrix::from_rows(vectors.to_vec());
        let pivots = m.rref();
        let basis = (0..pivots.len()).map(|r| m.row(r)).collect();
        Subspace { ambient, basis, pivots }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Reduce `v` against the echelon basis; the remainder is zero exactly
    /// when `v` is a member.
    fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut w = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if !w[p].is_zero() {
                let f = w[p].clone();
                for (wi, ri) in w.iter_mut().zip(row) {
                    *wi -= f.clone() * ri.clone();
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient);
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, Error> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch { left: self.ambient, right: other.ambient });
        }
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Ok(Subspace::span(self.ambient, &vs))
    }

    /// Intersection via the kernel of `[A^T | B^T]`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, Error> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch { left: self.ambient, right: other.ambient });
        }
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient));
        }
        let a = self.dim();
        let mut m = Matrix::zero(self.ambient, a + other.dim());
        for (j, v) in self.basis.iter().enumerate() {
            for i in 0..self.ambient {
                m.set(i, j, v[i].clone());
            }
        }
        for (j, v) in other.basis.iter().enumerate() {
            for i in 0..self.ambient {
                m.set(i, a + j, v[i].clone());
            }
        }
        let ker = m.kernel();
        let vs: Vec<Vec<Scalar>> = ker
            .basis()
            .iter()
            .map(|coeffs| {
                let mut v = vec![Scalar::zero(); self.ambient];
                for (j, basis_vec) in self.basis.iter().enumerate() {
                    if coeffs[j].is_zero() {
                        continue;
                    }
                    for i in 0..self.ambient {
                        v[i] += coeffs[j].clone() * basis_vec[i].clone();
                    }
                }
                v
            })
            .collect();
        Ok(Subspace::span(self.ambient, &vs))
    }

    pub fn conj(&self) -> Subspace {
        let vs: Vec<Vec<Scalar>> = self
            .basis
            .iter()
            .map(|v| v.iter().map(Scalar::conj).collect())
            .collect();
        Subspace::span(self.ambient, &vs)
    }

    /// Image of this subspace under a linear map.
    pub fn map_through(&self, m: &Matrix) -> Subspace {
        let vs: Vec<Vec<Scalar>> = self.basis.iter().map(|v| m.mul_vec(v)).collect();
        Subspace::span(m.rows, &vs)
    }
}

/// A quotient `Z/B` with a deterministic choice of representatives: the
/// echelon rows of `Z` whose pivot is not a pivot of `B`. Coordinates of a
/// class are taken with respect to those representatives.
#[derive(Clone, Debug)]
pub struct Quotient {
    cocycles: Subspace,
    boundaries: Subspace,
    reps: Vec<Vec<Scalar>>,
    /// Columns: boundary basis then representatives; used to split a
    /// cocycle into boundary + representative parts.
    solver: Matrix,
}

impl Quotient {
    pub fn new(cocycles: Subspace, boundaries: Subspace) -> Result<Self, Error> {
        if cocycles.ambient() != boundaries.ambient() {
            return Err(Error::AmbientMismatch {
                left: cocycles.ambient(),
                right: boundaries.ambient(),
            });
        }
        if !cocycles.contains_subspace(&boundaries) {
            return Err(Error::NotInSubspace);
        }
        let reps: Vec<Vec<Scalar>> = cocycles
            .basis
            .iter()
            .zip(&cocycles.pivots)
            .filter(|(_, p)| !boundaries.pivots.contains(p))
            .map(|(v, _)| v.clone())
            .collect();
        let n = cocycles.ambient();
        let mut solver = Matrix::zero(n, boundaries.dim() + reps.len());
        for (j, v) in boundaries.basis.iter().enumerate() {
            for i in 0..n {
                solver.set(i, j, v[i].clone());
            }
        }
        for (j, v) in reps.iter().enumerate() {
            for i in 0..n {
                solver.set(i, boundaries.dim() + j, v[i].clone());
            }
        }
        Ok(Quotient { cocycles, boundaries, reps, solver })
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn ambient(&self) -> usize {
        self.cocycles.ambient()
    }

    pub fn cocycles(&self) -> &Subspace {
        &self.cocycles
    }

    pub fn boundaries(&self) -> &Subspace {
        &self.boundaries
    }

    pub fn representatives(&self) -> &[Vec<Scalar>] {
        &self.reps
    }

    /// Coordinates of `[v]` in the representative basis.
    pub fn project(&self, v: &[Scalar]) -> Result<Vec<Scalar>, Error> {
        let x = self.solver.solve(v).ok_or(Error::NotInSubspace)?;
        Ok(x[self.boundaries.dim()..].to_vec())
    }

    /// The chosen cocycle representing the class with these coordinates.
    pub fn lift(&self, coords: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(coords.len(), self.dim());
        let mut v = vec![Scalar::zero(); self.ambient()];
        for (c, rep) in coords.iter().zip(&self.reps) {
            if c.is_zero() {
                continue;
            }
            for i in 0..v.len() {
                v[i] += c.clone() * rep[i].clone();
            }
        }
        v
    }

    /// `(S + B)/B` in quotient coordinates. Requires `S` to consist of
    /// cocycles.
    pub fn subgroup_image(&self, s: &Subspace) -> Result<Subspace, Error> {
        if !self.cocycles.contains_subspace(s) {
            return Err(Error::NotInSubspace);
        }
        let vs: Vec<Vec<Scalar>> = s
            .basis()
            .iter()
            .map(|v| self.project(v))
            .collect::<Result<_, _>>()?;
        Ok(Subspace::span(self.dim(), &vs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    fn rand_vec(rng: &mut StdRng, n: usize) -> Vec<Scalar> {
        (0..n)
            .map(|_| Scalar::new(rat(rng.gen_range(-3..=3), 1), rat(rng.gen_range(-2..=2), 1)))
            .collect()
    }

    #[test]
    fn kernel_of_zero_map_is_everything() {
        let m = Matrix::zero(5, 7);
        assert_eq!(m.kernel().dim(), 7);
        assert_eq!(m.image().dim(), 0);
    }

    #[test]
    fn rank_nullity_randomized() {
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..30 {
            let rows = rng.gen_range(1..=6);
            let cols = rng.gen_range(1..=6);
            let m = Matrix::from_rows((0..rows).map(|_| rand_vec(&mut rng, cols)).collect());
            assert_eq!(m.rank() + m.kernel().dim(), cols);
            assert_eq!(m.rank(), m.image().dim());
        }
    }

    #[test]
    fn canonical_basis_is_order_independent() {
        let mut rng = StdRng::seed_from_u64(5);
        for _ in 0..20 {
            let vs: Vec<Vec<Scalar>> = (0..4).map(|_| rand_vec(&mut rng, 5)).collect();
            let mut shuffled = vs.clone();
            shuffled.reverse();
            shuffled.swap(0, 1);
            // also rescale and mix
            let mut mixed = shuffled.clone();
            for i in 0..mixed.len() {
                for j in 0..mixed[i].len() {
                    mixed[i][j] = mixed[i][j].clone() * s(3);
                }
            }
            let a = Subspace::span(5, &vs);
            let b = Subspace::span(5, &mixed);
            assert_eq!(a, b);
        }
    }

    #[test]
    fn grassmann_dimension_identity() {
        let mut rng = StdRng::seed_from_u64(9);
        for _ in 0..25 {
            let a = Subspace::span(6, &(0..3).map(|_| rand_vec(&mut rng, 6)).collect::<Vec<_>>());
            let b = Subspace::span(6, &(0..3).map(|_| rand_vec(&mut rng, 6)).collect::<Vec<_>>());
            let sum = a.sum(&b).unwrap();
            let int = a.intersect(&b).unwrap();
            assert_eq!(sum.dim() + int.dim(), a.dim() + b.dim());
            assert!(a.contains_subspace(&int));
            assert!(b.contains_subspace(&int));
            assert!(sum.contains_subspace(&a));
        }
    }

    #[test]
    fn intersect_of_disjoint_lines_is_zero() {
        let e1 = vec![s(1), s(0)];
        let e2 = vec![s(0), s(1)];
        let a = Subspace::span(2, &[e1]);
        let b = Subspace::span(2, &[e2]);
        assert!(a.intersect(&b).unwrap().is_zero());
    }

    #[test]
    fn quotient_projection_and_lift() {
        // Z = Q(i)^3, B = span{e1 - e2}
        let z = Subspace::full(3);
        let b = Subspace::span(3, &[vec![s(1), s(-1), s(0)]]);
        let q = Quotient::new(z.clone(), b).unwrap();
        assert_eq!(q.dim(), 2);
        for coords in [[s(1), s(0)], [s(0), s(1)], [s(2), s(-3)]] {
            let lifted = q.lift(&coords);
            assert_eq!(q.project(&lifted).unwrap(), coords.to_vec());
        }
        // quotient by everything is zero
        let q2 = Quotient::new(z.clone(), z).unwrap();
        assert_eq!(q2.dim(), 0);
    }

    #[test]
    fn quotient_rejects_non_nested_spaces() {
        let z = Subspace::span(3, &[vec![s(1), s(0), s(0)]]);
        let b = Subspace::span(3, &[vec![s(0), s(1), s(0)]]);
        assert!(Quotient::new(z, b).is_err());
    }

    #[test]
    fn inverse_roundtrip() {
        let mut rng = StdRng::seed_from_u64(21);
        for _ in 0..10 {
            let m = Matrix::from_rows((0..4).map(|_| rand_vec(&mut rng, 4)).collect());
            if let Some(inv) = m.inverse() {
                assert_eq!(m.mul(&inv), Matrix::identity(4));
                assert_eq!(inv.mul(&m), Matrix::identity(4));
            }
        }
    }
}
